#![no_main]

use libfuzzer_sys::fuzz_target;
use wilf_core::enumeration::{BaseClass, Family};
use wilf_core::perm::Symmetry;
use wilf_core::verify::Target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = text.parse::<BaseClass>();
    let _ = text.parse::<Family>();
    let _ = text.parse::<Symmetry>();
    if let Ok(t) = text.parse::<Target>() {
        assert_eq!(t.name().parse::<Target>().unwrap(), t);
    }
});
