#![no_main]

use libfuzzer_sys::fuzz_target;
use wilf_core::StepWord;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = text.parse::<StepWord>() {
        assert_eq!(w.to_string().parse::<StepWord>().unwrap(), w);
        assert_eq!(w.mirrored().mirrored(), w);
        let h = w.heights(0);
        assert_eq!(StepWord::from_heights(&h).unwrap(), w);
    }
});
