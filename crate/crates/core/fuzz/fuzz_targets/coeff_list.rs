#![no_main]

use libfuzzer_sys::fuzz_target;
use moduli_cli::parse_coeffs;
use moduli_core::arith::{is_real_rooted, real_root_count, square_free_part};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = parse_coeffs(text) else {
        return;
    };
    if p.degree().is_some_and(|d| d <= 16) {
        let distinct = real_root_count(&p);
        let square_free_degree = square_free_part(&p).degree().unwrap_or(0);
        assert!(distinct <= square_free_degree);
        assert_eq!(is_real_rooted(&p), distinct == square_free_degree);
    }
});
