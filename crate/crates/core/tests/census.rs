use cube_census::census::{Census, Regime};
use cube_census::cycle_index::{hypercube_cycle_index, substitute_two_colors, CycleIndex};
use cube_census::hyperplane::GeneralHyperplane;
use cube_census::oracle::{
    affine_dimension, brute_census, brute_lower_dimensional, brute_partial_classes, DEFAULT_BUDGET,
};
use cube_census::reference;
use num_bigint::BigInt;

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn f4_table_matches_oracle() {
    let census = Census::new(4, false).unwrap();
    let table = census.assemble_table(None).unwrap();
    let brute = brute_census(4).unwrap();
    for (k, f) in reference::corrected_f(4) {
        assert_eq!(table.f(k), Some(&f), "k = {k}");
    }
    for row in &table.rows {
        assert_eq!(row.a, big(brute.classes[row.k]), "A_4({})", row.k);
        assert_eq!(
            row.f.as_ref(),
            Some(&big(brute.full_dimensional[row.k])),
            "F_4({})",
            row.k
        );
        assert_ne!(row.regime, Regime::Unknown);
    }
}

#[test]
fn n4_breakdown() {
    let census = Census::new(4, false).unwrap();
    for &(h, rows) in reference::published_breakdown(4) {
        let i = census
            .index_of(&GeneralHyperplane::parse(4, h).unwrap())
            .unwrap();
        for &(k, v) in rows {
            assert_eq!(census.n_partial_mid(i, k).unwrap(), big(v), "{h} at {k}");
        }
    }
    assert_eq!(census.h_mid(7).unwrap(), big(2));
}

#[test]
fn f5_mid_and_high() {
    let census = Census::new(5, false).unwrap();
    let table = census.assemble_table(None).unwrap();
    let mut mismatches = Vec::new();
    for (k, f) in reference::corrected_f(5) {
        if table.f(k) != Some(&f) {
            mismatches.push((k, f, table.f(k).cloned()));
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:?}");
    for &(h, rows) in reference::published_breakdown(5) {
        let i = census
            .index_of(&GeneralHyperplane::parse(5, h).unwrap())
            .unwrap();
        for &(k, v) in rows {
            assert_eq!(census.n_partial_mid(i, k).unwrap(), big(v), "{h} at {k}");
        }
    }
}

#[test]
fn f5_low_matches_brute_force() {
    let census = Census::new(5, false).unwrap();
    let action = census.action();
    let reps: Vec<_> = census.representatives().to_vec();
    for k in 6..=8 {
        let brute = brute_lower_dimensional(action, &reps, k, 50_000_000).unwrap();
        assert_eq!(census.h_low(k).unwrap(), big(brute), "H_5({k})");
        for (i, n) in census.low_breakdown(k).unwrap() {
            let v = reps[i].vertices();
            let brute = brute_partial_classes(action, &v, k, DEFAULT_BUDGET).unwrap();
            assert_eq!(n, big(brute), "N_{}({k})", reps[i]);
        }
    }
}

#[test]
fn low_ranges() {
    assert_eq!(Census::new(4, false).unwrap().low_range(), None);
    assert_eq!(Census::new(6, false).unwrap().low_range(), Some((13, 16)));
}

#[test]
fn f6_all_computed_rows() {
    let census = Census::new(6, false).unwrap();
    let table = census.assemble_range(13, 64, None).unwrap();
    let mut mismatches = Vec::new();
    for (k, f) in reference::corrected_f(6) {
        if table.f(k) != Some(&f) {
            mismatches.push((k, f, table.f(k).cloned()));
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:?}");
    let mut bad = Vec::new();
    for (h, rows) in reference::corrected_breakdown(6) {
        let i = census
            .index_of(&GeneralHyperplane::parse(6, h).unwrap())
            .unwrap();
        for (k, v) in rows {
            let got = census.n_partial_mid(i, k).unwrap();
            if got != big(v) {
                bad.push((h, k, v, got));
            }
        }
    }
    assert!(bad.is_empty(), "{bad:?}");
    for k in 13..=16 {
        assert_eq!(
            census.h_low(k).unwrap(),
            census.h_low_closed_form(k).unwrap(),
            "k = {k}"
        );
    }
}

#[test]
fn e_sets_are_codimension_two() {
    let census = Census::new(5, false).unwrap();
    for i in 0..census.representatives().len() {
        let (e1, e2) = census.e_sets(i, 6).unwrap();
        assert!(e2.len() <= e1.len());
        for ic in e1.iter().chain(&e2) {
            assert!(ic.vertices >= 6);
            assert_eq!(affine_dimension(&ic.representative).unwrap(), 3);
            assert!(ic.member.is_subset(&census.representatives()[i].vertices()));
        }
    }
}

fn plain(z: &CycleIndex, k: usize) -> BigInt {
    let c = substitute_two_colors(z);
    let m = c.mass();
    if k as u32 > m {
        return big(0);
    }
    c.coefficient(k as u32, m - k as u32).unwrap()
}

#[test]
fn q6_low_sections() {
    let census = Census::new(6, false).unwrap();
    let z4 = hypercube_cycle_index(4);
    for listing in reference::HYPERPLANE_LISTINGS.iter().filter(|l| l.n == 6) {
        let i = census
            .index_of(&GeneralHyperplane::parse(6, listing.hyperplane).unwrap())
            .unwrap();
        for k in 13..=16 {
            let (e1, e2) = census.e_sets(i, k).unwrap();
            let n = census.n_partial_low(i, k).unwrap();
            let direct = plain(&listing.cycle_index(), k);
            match listing.label {
                "H6^1" => {
                    assert_eq!((e1.len(), e2.len()), (1, 1), "k = {k}");
                    let (local, partial) = census.intersection_cycle_indices(&e1[0]).unwrap();
                    assert_eq!(local, z4);
                    assert_eq!(partial, z4);
                    assert_eq!(n, direct - plain(&z4, k) + plain(&z4, k));
                }
                "H6^2" => {
                    assert_eq!(e2.len(), 2, "k = {k}");
                    let (den, text) = reference::LOCAL_H62_W2;
                    let w2 = CycleIndex::from_scaled(den, text).unwrap();
                    assert_eq!(e1.len(), 2, "k = {k}");
                    let mut pairs = Vec::new();
                    for ic in &e1 {
                        pairs.push(census.intersection_cycle_indices(ic).unwrap());
                    }
                    let (w2_local, w2_partial) = pairs.iter().find(|p| p.0 == w2).unwrap();
                    assert_ne!(w2_local, w2_partial);
                    let w1 = pairs.iter().find(|p| p.0 != w2).unwrap();
                    assert_eq!(w1.0, w1.1);
                    if k == 13 {
                        assert_ne!(n, direct);
                    }
                }
                "H6^3" | "H6^4" => {
                    assert!(!e1.is_empty(), "{} k = {k}", listing.label);
                    assert_eq!(n, direct, "{} k = {k}", listing.label);
                }
                _ => {
                    assert!(e1.is_empty(), "{} k = {k}", listing.label);
                    assert_eq!(n, direct, "{} k = {k}", listing.label);
                }
            }
        }
    }
    for h in reference::N6_SMALL {
        let i = census
            .index_of(&GeneralHyperplane::parse(6, h).unwrap())
            .unwrap();
        assert_eq!(census.n_partial_low(i, 13).unwrap(), big(2), "{h}");
        assert_eq!(census.n_partial_low(i, 14).unwrap(), big(1), "{h}");
    }
}

#[test]
fn f5_low_direct_enumeration() {
    for k in 6..=7 {
        let census = Census::new(5, false).unwrap();
        let direct = cube_census::oracle::brute_lower_dimensional_direct(5, k, 10_000_000).unwrap();
        assert_eq!(census.h_low(k).unwrap(), big(direct), "H_5({k})");
    }
}
