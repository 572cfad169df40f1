#![no_main]

use libfuzzer_sys::fuzz_target;
use wilf_core::pipeline::phi_involution;
use wilf_core::tableaux::{rsk_involution, rsk_involution_inv, west_f, west_f_inv};
use wilf_core::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(p) = serde_json::from_slice::<Permutation>(data) else {
        return;
    };
    if p.len() > 12 {
        return;
    }
    let json = serde_json::to_vec(&p).unwrap();
    assert_eq!(serde_json::from_slice::<Permutation>(&json).unwrap(), p);
    if let Ok(t) = rsk_involution(&p) {
        assert_eq!(rsk_involution_inv(&t), p);
    }
    if let Ok(q) = west_f(&p, 4) {
        assert_eq!(west_f_inv(&q, 4).unwrap(), p);
    }
    let _ = phi_involution(&p, &Permutation::identity(1));
});
