#![no_main]

use libfuzzer_sys::fuzz_target;
use moduli_core::moduli::{Kind, Method};
use moduli_core::oeis::FetchPolicy;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = text.parse::<Method>() {
        assert_eq!(m.tag(), text);
    }
    let _ = text.parse::<Kind>();
    let _ = text.parse::<FetchPolicy>();
});
