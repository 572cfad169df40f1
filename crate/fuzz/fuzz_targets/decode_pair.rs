#![no_main]

use libfuzzer_sys::fuzz_target;
use wilf_core::paths::{theta, theta_inv};
use wilf_core::DyckPair;

fuzz_target!(|data: &[u8]| {
    let Ok(pair) = serde_json::from_slice::<DyckPair>(data) else {
        return;
    };
    if let Ok(out) = theta(&pair) {
        assert_eq!(out.p(), pair.p());
        assert_eq!(theta_inv(&out).unwrap(), pair);
    }
});
