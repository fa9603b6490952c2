use cube_census::cycle_index::{hypercube_cycle_index, substitute_two_colors};
use cube_census::group::{enumerate_group, GroupAction, SignedPermutation, VertexSet};
use cube_census::hyperplane::{canonicalize, GeneralHyperplane};
use proptest::prelude::*;

fn element(n: usize) -> impl Strategy<Value = SignedPermutation> {
    let pi: Vec<usize> = (1..=n).collect();
    (Just(pi).prop_shuffle(), 0u32..(1 << n)).prop_map(move |(pi, mask)| {
        let neg: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        SignedPermutation::new(&pi, &neg).unwrap()
    })
}

fn set(n: usize) -> impl Strategy<Value = VertexSet> {
    let width = 1u32 << n;
    any::<u128>().prop_map(move |b| {
        let mask = if width == 128 {
            u128::MAX
        } else {
            (1u128 << width) - 1
        };
        VertexSet::from_bits(n, b & mask)
    })
}

fn triple(n: usize) -> impl Strategy<Value = (SignedPermutation, SignedPermutation, VertexSet)> {
    (element(n), element(n), set(n))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn action_is_compatible_with_compose(
        (a, b, s) in (1usize..=6).prop_flat_map(triple)
    ) {
        let ab = a.compose(&b).unwrap();
        let lhs = ab.act_on_set(&s).unwrap();
        let rhs = a.act_on_set(&b.act_on_set(&s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_undoes((a, _, s) in (1usize..=6).prop_flat_map(triple)) {
        let back = a.inverse().act_on_set(&a.act_on_set(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn action_preserves_size((a, _, s) in (1usize..=6).prop_flat_map(triple)) {
        prop_assert_eq!(a.act_on_set(&s).unwrap().len(), s.len());
        let c = a.act_on_set(&s.complement()).unwrap();
        prop_assert_eq!(c, a.act_on_set(&s).unwrap().complement());
    }

    #[test]
    fn canonical_form_is_orbit_invariant(
        (a, _, s) in (1usize..=4).prop_flat_map(triple)
    ) {
        let action = GroupAction::hyperoctahedral(s.dim());
        let c = action.canonical(&s);
        prop_assert_eq!(action.canonical(&c), c);
        prop_assert_eq!(action.canonical(&a.act_on_set(&s).unwrap()), c);
    }

    #[test]
    fn canonical_hyperplane_is_stable(
        (a, _, _) in (2usize..=5).prop_flat_map(triple),
        coeffs in proptest::collection::vec(1i64..=3, 5),
        rhs in 1i64..=4,
    ) {
        let n = a.dim();
        let coeffs = coeffs[..n].to_vec();
        prop_assume!(rhs < coeffs.iter().sum::<i64>());
        let h = GeneralHyperplane::new(coeffs, rhs).unwrap();
        if let Ok(c) = canonicalize(&h) {
            let again = canonicalize(&c.to_general()).unwrap();
            prop_assert_eq!(again, c);
        }
    }
}

#[test]
fn complement_symmetry() {
    for n in 1..=6 {
        let a = substitute_two_colors(&hypercube_cycle_index(n))
            .integer_coefficients()
            .unwrap();
        let m = a.len() - 1;
        assert!((0..=m).all(|k| a[k] == a[m - k]), "n = {n}");
    }
}

#[test]
fn group_orders() {
    for (n, order) in [(1, 2), (2, 8), (3, 48), (4, 384)] {
        assert_eq!(enumerate_group(n).len(), order);
    }
}
