//! Brute-force cross-checks: exhaustive orbit classification, affine
//! dimension and direct orbit counts of vertex subsets.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupAction, SignedPermutation, VertexSet};
use crate::hyperplane::SpannedHyperplane;
use crate::linalg::rank;

/// Largest dimension accepted by [`brute_census`].
pub const BRUTE_CENSUS_MAX_DIM: usize = 4;
/// Largest set accepted by [`brute_subset_orbits`].
pub const SUBSET_ORBIT_MAX_SET: usize = 24;
/// Default cap on the number of subsets a single oracle call may visit.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// Dimension of the affine hull of a nonempty vertex set.
pub fn affine_dimension(set: &VertexSet) -> Result<usize> {
    let mut members = set.iter();
    let base = members.next().ok_or(Error::EmptySet)?;
    let n = set.dim();
    let rows: Vec<Vec<i64>> = members
        .map(|v| {
            (0..n)
                .map(|i| ((v >> i) & 1) as i64 - ((base >> i) & 1) as i64)
                .collect()
        })
        .collect();
    Ok(rank(&rows))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    #[serde(serialize_with = "serialize_set")]
    pub canonical: VertexSet,
    pub size: usize,
    pub dimension: usize,
    pub full_dimensional: bool,
}

fn serialize_set<S: serde::Serializer>(
    set: &VertexSet,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(set.iter())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteCensus {
    pub n: usize,
    pub records: Vec<ClassificationRecord>,
    /// Classes with `k` vertices, indexed by `k`.
    pub classes: Vec<u64>,
    /// Full-dimensional classes with `k` vertices, indexed by `k`.
    pub full_dimensional: Vec<u64>,
}

/// Classifies every subset of `V_n` under `B_n` by orbit marking.
pub fn brute_census(n: usize) -> Result<BruteCensus> {
    if n > BRUTE_CENSUS_MAX_DIM {
        return Err(Error::DimensionOutOfRange {
            n,
            max: BRUTE_CENSUS_MAX_DIM,
        });
    }
    let action = GroupAction::hyperoctahedral(n);
    let width = 1usize << n;
    let total = 1u64 << width;
    let mut visited = vec![0u64; (total as usize).div_ceil(64)];
    let mut records = Vec::new();
    let mut classes = vec![0u64; width + 1];
    let mut full = vec![0u64; width + 1];
    for bits in 0..total {
        if (visited[(bits / 64) as usize] >> (bits % 64)) & 1 == 1 {
            continue;
        }
        let set = VertexSet::from_bits(n, bits as u128);
        let mut canonical = set;
        for g in 0..action.len() {
            let image = action.image(g, &set);
            let b = image.bits() as u64;
            visited[(b / 64) as usize] |= 1 << (b % 64);
            canonical = canonical.min(image);
        }
        let size = set.len();
        let dimension = if set.is_empty() {
            0
        } else {
            affine_dimension(&set)?
        };
        let full_dimensional = !set.is_empty() && dimension == n;
        classes[size] += 1;
        if full_dimensional {
            full[size] += 1;
        }
        records.push(ClassificationRecord {
            canonical,
            size,
            dimension,
            full_dimensional,
        });
    }
    Ok(BruteCensus {
        n,
        records,
        classes,
        full_dimensional: full,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Every `k`-subset of `set`, as ambient bitmasks.
fn k_subsets(set: &VertexSet, k: usize) -> impl Iterator<Item = u128> + '_ {
    let members: Vec<u32> = set.iter().collect();
    let m = members.len();
    assert!(m < 64, "subset enumeration needs fewer than 64 members");
    let mut current: Option<u64> = if k > m {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = current?;
        let mut bits = 0u128;
        let mut rest = c;
        while rest != 0 {
            bits |= 1u128 << members[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        current = if c == 0 {
            None
        } else {
            // Gosper's hack.
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let next = (((ripple ^ c) >> 2) / low) | ripple;
            (next < (1u64 << m)).then_some(next)
        };
        Some(bits)
    })
}

fn check_budget(what: &str, count: u64, budget: u64) -> Result<()> {
    if count > budget {
        return Err(Error::BudgetExceeded(format!(
            "{what}: {count} subsets exceed budget {budget}"
        )));
    }
    Ok(())
}

/// Orbits of the given subsets under `action`, counted by marking each
/// orbit the first time one of its members appears.
fn count_orbits(action: &GroupAction, subsets: impl Iterator<Item = u128>) -> u64 {
    let n = action.dim();
    let mut seen: HashSet<u128> = HashSet::new();
    let mut count = 0;
    for bits in subsets {
        if seen.contains(&bits) {
            continue;
        }
        count += 1;
        let set = VertexSet::from_bits(n, bits);
        for g in 0..action.len() {
            seen.insert(action.image(g, &set).bits());
        }
    }
    count
}

/// Orbits of `k`-subsets of `set` under `group`, which must stabilize `set`.
pub fn brute_subset_orbits(
    set: &VertexSet,
    group: &[SignedPermutation],
    k: usize,
    budget: u64,
) -> Result<u64> {
    if set.len() > SUBSET_ORBIT_MAX_SET {
        return Err(Error::BudgetExceeded(format!(
            "set of {} vertices exceeds the {SUBSET_ORBIT_MAX_SET}-vertex limit",
            set.len()
        )));
    }
    check_budget(
        "subset orbits",
        binomial(set.len() as u64, k as u64),
        budget,
    )?;
    for g in group {
        if g.act_on_set(set)? != *set {
            return Err(Error::NotStabilizing);
        }
    }
    let action = GroupAction::new(set.dim(), group.to_vec())?;
    Ok(count_orbits(&action, k_subsets(set, k)))
}

/// Classes of `k`-subsets of `set` under the whole group, where two
/// subsets are equivalent when some element maps one onto the other.
pub fn brute_partial_classes(
    action: &GroupAction,
    set: &VertexSet,
    k: usize,
    budget: u64,
) -> Result<u64> {
    check_budget(
        "partial classes",
        binomial(set.len() as u64, k as u64),
        budget,
    )?;
    Ok(count_orbits(action, k_subsets(set, k)))
}

/// Classes of `k`-vertex subsets lying in some hyperplane, found by
/// scanning the subsets of each class representative.
pub fn brute_lower_dimensional(
    action: &GroupAction,
    hyperplanes: &[SpannedHyperplane],
    k: usize,
    budget: u64,
) -> Result<u64> {
    let sets: Vec<VertexSet> = hyperplanes
        .iter()
        .map(SpannedHyperplane::vertices)
        .collect();
    let total: u64 = sets
        .iter()
        .map(|s| binomial(s.len() as u64, k as u64))
        .sum();
    check_budget("lower-dimensional classes", total, budget)?;
    Ok(count_orbits(
        action,
        sets.iter().flat_map(|s| k_subsets(s, k)),
    ))
}

/// Classes of `k`-vertex subsets of `V_n` with affine dimension below `n`,
/// found by testing every `k`-subset. Uses no hyperplane list.
pub fn brute_lower_dimensional_direct(n: usize, k: usize, budget: u64) -> Result<u64> {
    check_budget(
        "lower-dimensional subsets",
        binomial(1u64 << n, k as u64),
        budget,
    )?;
    let action = GroupAction::hyperoctahedral(n);
    let all = VertexSet::full(n);
    let flat = k_subsets(&all, k)
        .filter(|&bits| affine_dimension(&VertexSet::from_bits(n, bits)).is_ok_and(|d| d < n));
    Ok(count_orbits(&action, flat))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub s: usize,
    pub samples: usize,
    pub seed: u64,
    pub bound: u64,
    pub max_vertices: u64,
    pub violations: Vec<String>,
    pub sharp_witness: bool,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.sharp_witness
    }
}

/// Samples `s` hyperplanes with independent integer normals through a
/// random vertex and checks that they share at most `2^{n-s}` vertices.
pub fn verify_intersection_bound(
    n: usize,
    s: usize,
    samples: usize,
    seed: u64,
) -> Result<BoundReport> {
    crate::group::check_dimension(n, false)?;
    if s == 0 || s > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= s <= n, got s = {s}, n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 1u64 << (n - s);
    let mut max_vertices = 0;
    let mut violations = Vec::new();
    for _ in 0..samples {
        let normals = loop {
            let rows: Vec<Vec<i64>> = (0..s)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            if rank(&rows) == s {
                break rows;
            }
        };
        let point: u32 = rng.gen_range(0..(1u32 << n));
        let value = |row: &[i64], v: u32| -> i64 {
            (0..n).filter(|i| (v >> i) & 1 == 1).map(|i| row[i]).sum()
        };
        let rhs: Vec<i64> = normals.iter().map(|r| value(r, point)).collect();
        let count = (0..(1u32 << n))
            .filter(|&v| normals.iter().zip(&rhs).all(|(r, &b)| value(r, v) == b))
            .count() as u64;
        max_vertices = max_vertices.max(count);
        if count > bound {
            violations.push(format!(
                "normals {normals:?} through vertex {point} meet {count} vertices"
            ));
        }
    }
    let sharp = (0..(1u32 << n)).filter(|v| v & ((1 << s) - 1) == 0).count() as u64;
    Ok(BoundReport {
        n,
        s,
        samples,
        seed,
        bound,
        max_vertices,
        violations,
        sharp_witness: sharp == bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub n: usize,
    pub subsets: u64,
    pub violations: u64,
}

/// Checks over every subset of `V_n` that more than `2^{n-s}` vertices
/// span an affine space of dimension at least `n - s + 1`.
pub fn verify_dimension_witness(n: usize) -> Result<WitnessReport> {
    if n > BRUTE_CENSUS_MAX_DIM {
        return Err(Error::DimensionOutOfRange {
            n,
            max: BRUTE_CENSUS_MAX_DIM,
        });
    }
    let total = 1u64 << (1u32 << n);
    let mut violations = 0;
    for bits in 1..total {
        let set = VertexSet::from_bits(n, bits as u128);
        let dim = affine_dimension(&set)?;
        for s in 1..=n {
            if set.len() > 1 << (n - s) && dim < n - s + 1 {
                violations += 1;
            }
        }
    }
    Ok(WitnessReport {
        n,
        subsets: total - 1,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_group;
    use crate::hyperplane::{canonicalize, stabilizer_elements, GeneralHyperplane};

    #[test]
    fn dimensions() {
        assert_eq!(
            affine_dimension(&VertexSet::from_indices(4, [5]).unwrap()).unwrap(),
            0
        );
        assert_eq!(affine_dimension(&VertexSet::full(4)).unwrap(), 4);
        assert_eq!(affine_dimension(&VertexSet::empty(3)), Err(Error::EmptySet));
        let h = GeneralHyperplane::parse(4, "1,1,1,2=2").unwrap();
        assert_eq!(
            affine_dimension(&crate::hyperplane::vertices_on(&h)).unwrap(),
            3
        );
    }

    #[test]
    fn subsets_enumerated_once() {
        let s = VertexSet::from_indices(4, [1, 3, 4, 9, 12]).unwrap();
        let all: Vec<u128> = k_subsets(&s, 2).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 10);
        assert!(all
            .iter()
            .all(|&b| b & !s.bits() == 0 && b.count_ones() == 2));
        assert_eq!(k_subsets(&s, 0).count(), 1);
        assert_eq!(k_subsets(&s, 5).count(), 1);
        assert_eq!(k_subsets(&s, 6).count(), 0);
    }

    #[test]
    fn square_census() {
        let c = brute_census(2).unwrap();
        assert_eq!(c.classes, vec![1, 1, 2, 1, 1]);
        assert_eq!(c.records.len(), 6);
        assert_eq!(c.full_dimensional, vec![0, 0, 0, 1, 1]);
        assert!(brute_census(5).is_err());
    }

    #[test]
    fn orbit_counts_and_errors() {
        let h = canonicalize(&GeneralHyperplane::parse(4, "1,1,1=1").unwrap()).unwrap();
        let vs = h.vertices();
        let g = stabilizer_elements(&h);
        assert_eq!(
            brute_subset_orbits(&vs, &g, vs.len(), DEFAULT_BUDGET).unwrap(),
            1
        );
        assert_eq!(brute_subset_orbits(&vs, &g, 5, DEFAULT_BUDGET).unwrap(), 1);
        let bad = SignedPermutation::new(&[1, 2, 3, 4], &[1]).unwrap();
        assert_eq!(
            brute_subset_orbits(&vs, &[bad], 2, DEFAULT_BUDGET),
            Err(Error::NotStabilizing)
        );
        assert!(matches!(
            brute_subset_orbits(&vs, &g, 3, 5),
            Err(Error::BudgetExceeded(_))
        ));
        let big = VertexSet::full(5);
        assert!(matches!(
            brute_subset_orbits(&big, &enumerate_group(5), 2, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn bound_sampling_is_deterministic() {
        let a = verify_intersection_bound(4, 1, 200, 7).unwrap();
        let b = verify_intersection_bound(4, 1, 200, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.passed());
        assert!(a.max_vertices <= 8);
        let full = verify_intersection_bound(3, 3, 50, 1).unwrap();
        assert!(full.passed() && full.max_vertices == 1);
    }
}
