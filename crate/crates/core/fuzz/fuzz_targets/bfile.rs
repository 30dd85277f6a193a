#![no_main]

use libfuzzer_sys::fuzz_target;
use moduli_core::oeis::parse_bfile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(b) = parse_bfile(text) {
        assert!(!b.terms.is_empty());
        let again = parse_bfile(&b.render("round trip")).expect("rendered b-file parses");
        assert_eq!(again, b);
    }
});
