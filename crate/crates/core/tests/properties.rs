use proptest::prelude::*;

use nlie::catalog::{instantiate, list_cases, param_equivalent, param_grid, CaseId, Params};
use nlie::invariants::{fingerprint, full_fingerprint, DEFAULT_SUBSPACE_BUDGET};
use nlie::iso::{are_isomorphic, verify_witness, IsoVerdict, DEFAULT_NODE_BUDGET};
use nlie::structmat::{change_basis, BasisChange};
use nlie::{Algebra, Field, Subspace};

/// A catalog instance with n = 3 over GF(2^m), m <= 3, and a seed for a basis change.
fn catalog_instance() -> impl Strategy<Value = (CaseId, Params, Algebra, u64)> {
    (1u32..=3, any::<bool>(), any::<prop::sample::Index>(), any::<u64>()).prop_map(|(m, codim2, i, seed)| {
        let f = Field::new(m).unwrap();
        // some families (d7 over GF(2)) have no parameters at all
        let all: Vec<(CaseId, Params)> = list_cases(3, if codim2 { 5 } else { 4 })
            .into_iter()
            .flat_map(|info| param_grid(info.case, 3, f).into_iter().map(move |p| (info.case, p)))
            .collect();
        let (case, p) = all[i.index(all.len())].clone();
        let a = instantiate(3, case, &p, f).unwrap();
        (case, p, a, seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_do_not_depend_on_the_basis((_, _, a, seed) in catalog_instance()) {
        let t = BasisChange::seeded(a.field(), a.dim(), seed);
        let b = change_basis(&a, &t).unwrap();
        prop_assert_eq!(fingerprint(&a), fingerprint(&b));
        prop_assert_eq!(full_fingerprint(&a, DEFAULT_SUBSPACE_BUDGET), full_fingerprint(&b, DEFAULT_SUBSPACE_BUDGET));
        prop_assert_eq!(a.is_n_lie(), b.is_n_lie());
    }

    #[test]
    fn basis_change_moves_the_derived_algebra((_, _, a, seed) in catalog_instance()) {
        let t = BasisChange::seeded(a.field(), a.dim(), seed);
        let b = change_basis(&a, &t).unwrap();
        // in the new coordinates A1 is T^-1 A1
        let inv = t.inverse();
        let moved: Vec<Vec<u8>> =
            a.derived_subspace().basis_vectors().iter().map(|v| inv.matrix().mul_vec(v)).collect();
        prop_assert_eq!(Subspace::span(a.field(), a.dim(), &moved), b.derived_subspace());
        prop_assert_eq!(change_basis(&b, &inv).unwrap(), a);
    }

    #[test]
    fn scrambled_copies_are_recognized((_, _, a, seed) in catalog_instance()) {
        let t = BasisChange::seeded(a.field(), a.dim(), seed);
        let b = change_basis(&a, &t).unwrap();
        match are_isomorphic(&a, &b, DEFAULT_NODE_BUDGET).unwrap() {
            IsoVerdict::Isomorphic(w) => prop_assert!(verify_witness(&a, &b, &w)),
            v => prop_assert!(false, "{:?}", v),
        }
    }

    #[test]
    fn equivalent_d9_parameters_give_isomorphic_algebras(
        s in 1u8..4, t in 0u8..4, u in 0u8..4, s2 in 1u8..4, t2 in 0u8..4, u2 in 0u8..4,
    ) {
        let f = Field::new(2).unwrap();
        let (p, q) = (Params::stu(s, t, u), Params::stu(s2, t2, u2));
        let a = instantiate(3, CaseId::T32D9, &p, f).unwrap();
        let b = instantiate(3, CaseId::T32D9, &q, f).unwrap();
        if param_equivalent(CaseId::T32D9, &p, &q, f).unwrap() {
            match are_isomorphic(&a, &b, DEFAULT_NODE_BUDGET).unwrap() {
                IsoVerdict::Isomorphic(w) => prop_assert!(verify_witness(&a, &b, &w)),
                v => prop_assert!(false, "{:?}", v),
            }
        }
    }
}
