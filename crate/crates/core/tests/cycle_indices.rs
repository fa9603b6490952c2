use cube_census::census::Census;
use cube_census::cycle_index::{hypercube_cycle_index, substitute_two_colors, CycleIndex};
use cube_census::hyperplane::{
    canonicalize, cycle_index_burnside, cycle_index_symbolic, describe_stabilizer,
    enumerate_spanned, stabilizer_elements, GeneralHyperplane,
};
use cube_census::reference;

#[test]
fn hypercube_listings() {
    for n in 2..=6 {
        assert_eq!(
            hypercube_cycle_index(n),
            reference::hypercube_listing(n).unwrap(),
            "Z_{n}"
        );
    }
    assert_eq!(hypercube_cycle_index(1).to_scaled_string(), "(z1^2 + z2)/2");
    assert_ne!(
        hypercube_cycle_index(1),
        reference::hypercube_listing(1).unwrap()
    );
    assert_eq!(hypercube_cycle_index(6).len(), 20);
}

#[test]
fn hyperplane_listings() {
    for listing in reference::HYPERPLANE_LISTINGS {
        let h = canonicalize(&GeneralHyperplane::parse(listing.n, listing.hyperplane).unwrap())
            .unwrap();
        assert_eq!(
            cycle_index_symbolic(&h).unwrap(),
            listing.cycle_index(),
            "{}",
            listing.label
        );
    }
}

#[test]
fn symbolic_equals_burnside_everywhere() {
    for n in 1..=5 {
        let reps = enumerate_spanned(n, false).unwrap();
        for h in &reps {
            assert_eq!(
                cycle_index_symbolic(h).unwrap(),
                cycle_index_burnside(h).unwrap(),
                "{h}"
            );
        }
    }
    for h in Census::new(6, false).unwrap().representatives() {
        assert_eq!(
            cycle_index_symbolic(h).unwrap(),
            cycle_index_burnside(h).unwrap(),
            "{h}"
        );
    }
}

#[test]
fn stabilizer_orders() {
    for n in 2..=5 {
        for h in enumerate_spanned(n, false).unwrap() {
            assert_eq!(
                stabilizer_elements(&h).len() as u64,
                describe_stabilizer(&h).order(),
                "{h}"
            );
        }
    }
}

#[test]
fn local_index_of_diagonal_section() {
    let census = Census::new(6, false).unwrap();
    let i = census
        .index_of(&GeneralHyperplane::parse(6, "x1 + x2 = 1").unwrap())
        .unwrap();
    let (e1, e2) = census.e_sets(i, 13).unwrap();
    let (den, text) = reference::LOCAL_H62_W2;
    let expected = CycleIndex::from_scaled(den, text).unwrap();
    let locals: Vec<CycleIndex> = e1
        .iter()
        .map(|ic| census.intersection_cycle_indices(ic).unwrap().0)
        .collect();
    assert!(locals.contains(&expected));
    assert_eq!(e2.len(), 2);
}

#[test]
fn a_table_symmetry() {
    for n in 1..=6 {
        let a = substitute_two_colors(&hypercube_cycle_index(n))
            .integer_coefficients()
            .unwrap();
        let m = a.len() - 1;
        for k in 0..=m {
            assert_eq!(a[k], a[m - k]);
        }
    }
}
