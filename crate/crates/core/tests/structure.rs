use moduli_core::arith::{fold_palindromic, is_real_rooted, real_root_count, Poly};
use moduli_core::comb::EnumerationLimits;
use moduli_core::moduli::{
    check_gamma_recursion, compute_a_keel, compute_b_oracle_table, compute_b_quadratic,
    compute_b_series_second_form, Kind, Method, OracleMode, PoincareTable,
};

#[test]
fn every_route_agrees_at_moderate_n() {
    let a = compute_a_keel(20);
    let b = compute_b_quadratic(16);
    for method in Method::ALL {
        let max_n = match method {
            Method::Oracle => 5,
            _ if method.kind() == Kind::A => 20,
            _ => 16,
        };
        let table = PoincareTable::compute(method, max_n).unwrap();
        let reference = if method.kind() == Kind::A { &a } else { &b };
        assert_eq!(table.polys(), &reference.polys()[..=max_n], "{method}");
        assert!(table.invariant_violations().is_empty(), "{method}");
        assert!((0..=max_n).all(|n| table.provenance(n) == Some(method)));
    }
    assert_eq!(compute_b_series_second_form(16).unwrap().polys(), b.polys());
}

#[test]
fn signed_partition_oracle_matches() {
    let limits = EnumerationLimits::default();
    let t = compute_b_oracle_table(5, OracleMode::SignedPartitions, &limits).unwrap();
    assert_eq!(t.polys(), compute_b_quadratic(5).polys());
}

#[test]
fn direct_sturm_chain_agrees_with_folding() {
    let b = compute_b_quadratic(30);
    for n in 1..=30 {
        let p = &b.polys()[n];
        assert_eq!(real_root_count(p), n - 1, "B_{n}");
        assert!(is_real_rooted(p), "B_{n}");
    }
    let folded = fold_palindromic(&b.polys()[5]).unwrap();
    assert_eq!(folded.degree(), Some(2));
}

#[test]
fn a_family_is_real_rooted_too() {
    let a = compute_a_keel(30);
    for n in 3..=30 {
        assert_eq!(real_root_count(&a.polys()[n]), n - 2, "A_{n}");
    }
}

#[test]
fn gamma_recursion_from_the_positivity_argument() {
    let r = check_gamma_recursion(30).unwrap();
    assert!(r.holds(), "{:?}", r.violations);
    assert_eq!(r.checked.len(), 29);
}

#[test]
fn wrong_kind_is_rejected_by_parsing() {
    assert_eq!("quadratic_B".parse::<Method>().unwrap().kind(), Kind::B);
    assert!("nope".parse::<Method>().is_err());
    assert!(!is_real_rooted(&Poly::from_ints([1, 1, 1])));
}
