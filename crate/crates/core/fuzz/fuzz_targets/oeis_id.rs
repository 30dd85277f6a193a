#![no_main]

use libfuzzer_sys::fuzz_target;
use moduli_core::oeis::OeisId;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(id) = text.parse::<OeisId>() {
        assert_eq!(id.to_string(), text);
        assert!(id.bfile_url().ends_with(".txt"));
    }
});
