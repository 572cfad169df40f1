#![no_main]

use libfuzzer_sys::fuzz_target;
use wilf_core::fillings::{chi, chi_inv};
use wilf_core::pipeline::{psi_cap, psi_cap_inv};
use wilf_core::Transversal;

fuzz_target!(|data: &[u8]| {
    let Ok(t) = serde_json::from_slice::<Transversal>(data) else {
        return;
    };
    if t.size() > 12 {
        return;
    }
    assert_eq!(chi_inv(&chi(&t)).unwrap(), t);
    if let Ok(out) = psi_cap(&t) {
        assert_eq!(psi_cap_inv(&out).unwrap(), t);
    }
});
