#![no_main]

use libfuzzer_sys::fuzz_target;
use wilf_core::fillings::chi_inv;
use wilf_core::matchings::{phi, phi_inv};
use wilf_core::Matching;

fuzz_target!(|data: &[u8]| {
    let Ok(m) = serde_json::from_slice::<Matching>(data) else {
        return;
    };
    if m.size() > 12 {
        return;
    }
    assert_eq!(phi_inv(&phi(&m)).unwrap(), m);
    let _ = chi_inv(&m);
});
