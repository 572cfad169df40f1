#![no_main]

use libfuzzer_sys::fuzz_target;
use wilf_core::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<Permutation>() {
        let again: Permutation = p.to_string().parse().expect("display output parses");
        assert_eq!(again, p);
        assert_eq!(p.inverse().inverse(), p);
    }
});
