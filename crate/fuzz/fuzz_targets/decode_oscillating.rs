#![no_main]

use libfuzzer_sys::fuzz_target;
use wilf_core::matchings::{osc_features, phi, phi_inv};
use wilf_core::paths::{psi, psi_inv, psibar, psibar_inv};
use wilf_core::OscillatingTableau;

fuzz_target!(|data: &[u8]| {
    let Ok(o) = serde_json::from_slice::<OscillatingTableau>(data) else {
        return;
    };
    if o.len() > 30 {
        return;
    }
    let _ = osc_features(&o);
    if let Ok(m) = phi_inv(&o) {
        assert_eq!(phi(&m), o);
    }
    if let Ok(pair) = psi(&o) {
        assert_eq!(psi_inv(&pair).unwrap(), o);
    }
    if let Ok(pair) = psibar(&o) {
        assert_eq!(psibar_inv(&pair).unwrap(), o);
    }
});
