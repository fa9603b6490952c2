//! `A_n(k)`, `H_n(k)` and `F_n(k)` by regime.
//!
//! High: every `k`-subset with `k > 2^{n-1}` is full-dimensional. Mid:
//! lower-dimensional classes are partial classes of single hyperplanes.
//! Low: partial classes are corrected along codimension-2 flats and
//! combined by inclusion-exclusion.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cycle_index::{
    cycle_index_of_indices, hypercube_cycle_index, substitute_two_colors, Bivariate, CycleIndex,
};
use crate::error::{Error, Result};
use crate::group::{check_dimension, GroupAction, SignedPermutation, VertexSet};
use crate::hyperplane::{
    builtin_representatives, canonicalize, cycle_index_symbolic, enumerate_spanned,
    GeneralHyperplane, SpannedHyperplane,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `k <= n`: no full-dimensional polytope.
    Trivial,
    High,
    Mid,
    Low,
    External,
    Unknown,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Trivial => "trivial",
            Regime::High => "high",
            Regime::Mid => "mid",
            Regime::Low => "low",
            Regime::External => "external",
            Regime::Unknown => "unknown",
        }
    }

    fn provenance(self) -> &'static str {
        match self {
            Regime::Trivial => "F = 0 since k <= n; H = A",
            Regime::High => "F = A since k > 2^(n-1)",
            Regime::Mid => "H = sum of N_H(k) over representatives",
            Regime::Low => "H by inclusion-exclusion over hyperplanes and codimension-2 flats",
            Regime::External => "F supplied externally; H = A - F",
            Regime::Unknown => "outside the computed regimes",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub k: usize,
    pub a: BigInt,
    pub h: Option<BigInt>,
    pub f: Option<BigInt>,
    pub regime: Regime,
    /// `N_H(k)` per representative for mid and low rows.
    pub breakdown: Vec<(String, BigInt)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub n: usize,
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    pub fn row(&self, k: usize) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.k == k)
    }

    pub fn f(&self, k: usize) -> Option<&BigInt> {
        self.row(k).and_then(|r| r.f.as_ref())
    }

    /// Keeps rows with `k` in `range`.
    pub fn restrict(&self, lo: usize, hi: usize) -> CensusTable {
        CensusTable {
            n: self.n,
            rows: self
                .rows
                .iter()
                .filter(|r| (lo..=hi).contains(&r.k))
                .cloned()
                .collect(),
        }
    }

    /// `n,k,A,H,F,regime` with empty cells for unknown values.
    pub fn to_csv(&self) -> String {
        let cell = |v: &Option<BigInt>| v.as_ref().map(BigInt::to_string).unwrap_or_default();
        let mut out = String::from("n,k,A,H,F,regime\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                self.n,
                r.k,
                r.a,
                cell(&r.h),
                cell(&r.f),
                r.regime
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let cell = |v: &Option<BigInt>| {
            v.as_ref()
                .map(BigInt::to_string)
                .unwrap_or_else(|| "?".into())
        };
        let mut cells = vec![[
            "k".to_string(),
            "A".into(),
            "H".into(),
            "F".into(),
            "regime".into(),
        ]];
        for r in &self.rows {
            cells.push([
                r.k.to_string(),
                r.a.to_string(),
                cell(&r.h),
                cell(&r.f),
                r.regime.to_string(),
            ]);
        }
        let mut widths = [0usize; 5];
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = format!("n = {}\n", self.n);
        for row in &cells {
            let line: Vec<String> = row[..4]
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            out.push_str(&format!("{}  {}\n", line.join("  "), row[4]));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut row = serde_json::json!({
                    "k": r.k,
                    "A": r.a.to_string(),
                    "H": r.h.as_ref().map(BigInt::to_string),
                    "F": r.f.as_ref().map(BigInt::to_string),
                    "regime": r.regime,
                    "provenance": r.regime.provenance(),
                });
                if !r.breakdown.is_empty() {
                    let b: serde_json::Map<String, serde_json::Value> = r
                        .breakdown
                        .iter()
                        .map(|(h, v)| (h.clone(), v.to_string().into()))
                        .collect();
                    row["breakdown"] = b.into();
                }
                row
            })
            .collect();
        serde_json::json!({ "n": self.n, "rows": rows })
    }
}

/// Reads `k -> F_n(k)` from a JSON object `{"13": "290159817", ...}`, a
/// census JSON document, or text lines `k F`. `#` starts a comment.
pub fn parse_external(text: &str) -> Result<BTreeMap<usize, BigInt>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        return external_from_json(&value);
    }
    let mut out = BTreeMap::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .collect();
        let [k, f] = fields[..] else {
            return Err(Error::Parse(format!("expected `k F`, got {line:?}")));
        };
        out.insert(parse_k(k)?, parse_big(f)?);
    }
    Ok(out)
}

fn parse_k(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("bad k {s:?}")))
}

fn parse_big(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

fn json_big(v: &serde_json::Value) -> Result<Option<BigInt>> {
    match v {
        serde_json::Value::Null => Ok(None),
        serde_json::Value::String(s) => parse_big(s).map(Some),
        serde_json::Value::Number(n) => parse_big(&n.to_string()).map(Some),
        other => Err(Error::Parse(format!("bad value {other}"))),
    }
}

fn external_from_json(value: &serde_json::Value) -> Result<BTreeMap<usize, BigInt>> {
    let mut out = BTreeMap::new();
    if let Some(rows) = value.get("rows").and_then(|r| r.as_array()) {
        for row in rows {
            let k = row
                .get("k")
                .and_then(|k| k.as_u64())
                .ok_or_else(|| Error::Parse("row without k".into()))?;
            if let Some(f) = json_big(row.get("F").unwrap_or(&serde_json::Value::Null))? {
                out.insert(k as usize, f);
            }
        }
        return Ok(out);
    }
    let map = value
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    for (k, v) in map {
        if let Some(f) = json_big(v)? {
            out.insert(parse_k(k)?, f);
        }
    }
    Ok(out)
}

/// A codimension-2 section `V(H) ∩ w(V(H))` up to the declared group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionClass {
    /// Canonical form under the declared group.
    pub representative: VertexSet,
    /// The section itself, a subset of `V(H)`.
    pub member: VertexSet,
    /// Index of `H` among the census representatives.
    pub base: usize,
    /// `member = V(H) ∩ witness(V(H))`.
    pub witness: SignedPermutation,
    /// Elements of the declared group fixing `representative`.
    pub stabilizer: Vec<SignedPermutation>,
    /// `q(w)`.
    pub vertices: usize,
}

struct Orbit {
    /// Distinct images of `V(H)` with the first element producing each.
    images: Vec<(VertexSet, usize)>,
    stabilizer: Vec<usize>,
}

pub struct Census {
    n: usize,
    reps: Vec<SpannedHyperplane>,
    /// Every hyperplane class with at least this many vertices is listed.
    floor: Option<usize>,
    a: Vec<BigInt>,
    action: OnceLock<GroupAction>,
    c_h: Vec<OnceLock<Result<Bivariate>>>,
    orbits: Vec<OnceLock<Orbit>>,
    partial: Mutex<HashMap<u128, Bivariate>>,
}

impl Census {
    /// Census for `Q_n`. Representatives are enumerated for `n <= 5`, read
    /// from the shipped list for `n = 6`, and absent for `n = 7`.
    pub fn new(n: usize, expensive: bool) -> Result<Self> {
        check_dimension(n, expensive)?;
        let (reps, floor) = match n {
            0..=5 => (enumerate_spanned(n, false)?, Some(0)),
            6 => (builtin_representatives(6, 13)?, Some(13)),
            _ => (Vec::new(), None),
        };
        Ok(Self::with_representatives(n, reps, floor))
    }

    /// Census over an explicit list, complete for classes with at least
    /// `floor` vertices.
    pub fn with_representatives(
        n: usize,
        reps: Vec<SpannedHyperplane>,
        floor: Option<usize>,
    ) -> Self {
        let a = substitute_two_colors(&hypercube_cycle_index(n))
            .integer_coefficients()
            .expect("orbit counts are integral");
        let c_h = reps.iter().map(|_| OnceLock::new()).collect();
        let orbits = reps.iter().map(|_| OnceLock::new()).collect();
        Census {
            n,
            reps,
            floor,
            a,
            action: OnceLock::new(),
            c_h,
            orbits,
            partial: Mutex::new(HashMap::new()),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn representatives(&self) -> &[SpannedHyperplane] {
        &self.reps
    }

    /// Index of the representative equal to `h` after canonicalization.
    pub fn index_of(&self, h: &GeneralHyperplane) -> Result<usize> {
        let c = canonicalize(h)?;
        self.reps
            .iter()
            .position(|r| *r == c)
            .ok_or_else(|| Error::UnknownHyperplane(h.to_string()))
    }

    pub fn action(&self) -> &GroupAction {
        self.action
            .get_or_init(|| GroupAction::hyperoctahedral(self.n))
    }

    fn vertices(&self) -> usize {
        1 << self.n
    }

    /// `A_n(k)` for `k = 0..=2^n`.
    pub fn a_table(&self) -> &[BigInt] {
        &self.a
    }

    pub fn a(&self, k: usize) -> BigInt {
        self.a.get(k).cloned().unwrap_or_default()
    }

    /// `C_H` for representative `i`.
    pub fn c_h(&self, i: usize) -> Result<&Bivariate> {
        self.c_h[i]
            .get_or_init(|| cycle_index_symbolic(&self.reps[i]).map(|z| substitute_two_colors(&z)))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn local_count(&self, i: usize, k: usize) -> Result<BigInt> {
        let c = self.c_h(i)?;
        let m = c.mass() as usize;
        if k > m {
            return Ok(BigInt::zero());
        }
        c.coefficient(k as u32, (m - k) as u32)
    }

    fn mid_range(&self) -> (usize, usize) {
        let half = self.vertices() / 2;
        (half / 2 + 1, half)
    }

    /// `(first, last)` low-regime `k` covered by the representative list.
    pub fn low_range(&self) -> Option<(usize, usize)> {
        let floor = self.floor?;
        let quarter = self.vertices() / 4;
        let lo = (quarter / 2 + 1).max(floor).max(self.n + 1);
        (lo <= quarter).then_some((lo, quarter))
    }

    fn out_of_regime(&self, k: usize, regime: &'static str) -> Error {
        Error::OutOfRegime {
            n: self.n,
            k,
            regime,
        }
    }

    fn check_mid(&self, k: usize) -> Result<()> {
        let (lo, hi) = self.mid_range();
        if !(lo..=hi).contains(&k) || self.floor.is_none() {
            return Err(self.out_of_regime(k, "mid"));
        }
        Ok(())
    }

    fn check_low(&self, k: usize) -> Result<()> {
        match self.low_range() {
            Some((lo, hi)) if (lo..=hi).contains(&k) => Ok(()),
            _ => Err(self.out_of_regime(k, "low")),
        }
    }

    fn reaching(&self, k: usize) -> Vec<usize> {
        (0..self.reps.len())
            .filter(|&i| self.reps[i].vertices().len() >= k)
            .collect()
    }

    pub fn f_high(&self, k: usize) -> Result<BigInt> {
        if k <= self.vertices() / 2 || k > self.vertices() {
            return Err(self.out_of_regime(k, "high"));
        }
        Ok(self.a(k))
    }

    pub fn n_partial_mid(&self, i: usize, k: usize) -> Result<BigInt> {
        self.check_mid(k)?;
        self.local_count(i, k)
    }

    /// `(representative index, N_H(k))` for every representative reaching `k`.
    pub fn mid_breakdown(&self, k: usize) -> Result<Vec<(usize, BigInt)>> {
        self.check_mid(k)?;
        self.reaching(k)
            .into_iter()
            .map(|i| Ok((i, self.local_count(i, k)?)))
            .collect()
    }

    pub fn h_mid(&self, k: usize) -> Result<BigInt> {
        Ok(self.mid_breakdown(k)?.into_iter().map(|(_, v)| v).sum())
    }

    pub fn f_mid(&self, k: usize) -> Result<BigInt> {
        Ok(self.a(k) - self.h_mid(k)?)
    }

    fn orbit(&self, i: usize) -> &Orbit {
        self.orbits[i].get_or_init(|| {
            let action = self.action();
            let v = self.reps[i].vertices();
            let mut seen = HashMap::new();
            let mut images = Vec::new();
            let mut stabilizer = Vec::new();
            for g in 0..action.len() {
                let x = action.image(g, &v);
                if x == v {
                    stabilizer.push(g);
                }
                seen.entry(x.bits()).or_insert_with(|| {
                    images.push((x, g));
                });
            }
            Orbit { images, stabilizer }
        })
    }

    /// Whether some image of `flat` lies in `V(H_i)`.
    fn contains_image(&self, i: usize, flat: &VertexSet) -> bool {
        self.orbit(i).images.iter().any(|(x, _)| flat.is_subset(x))
    }

    fn canonical_under(&self, indices: &[usize], set: &VertexSet) -> (VertexSet, Vec<usize>) {
        let action = self.action();
        let best = indices
            .iter()
            .map(|&g| action.image(g, set))
            .min()
            .expect("group is nonempty");
        let stab = indices
            .iter()
            .copied()
            .filter(|&g| action.image(g, &best) == best)
            .collect();
        (best, stab)
    }

    /// `E_1` (classes under `F(H)`) and `E_2` (classes under `B_n`) of the
    /// sections `V(H) ∩ w(V(H))` with `w(H) != H` and at least `k` vertices.
    pub fn e_sets(
        &self,
        i: usize,
        k: usize,
    ) -> Result<(Vec<IntersectionClass>, Vec<IntersectionClass>)> {
        let action = self.action();
        let orbit = self.orbit(i);
        let v = self.reps[i].vertices();
        let all: Vec<usize> = (0..action.len()).collect();
        let mut e1: BTreeMap<VertexSet, IntersectionClass> = BTreeMap::new();
        let mut e2: BTreeMap<VertexSet, IntersectionClass> = BTreeMap::new();
        for &(x, g) in &orbit.images {
            let member = v.intersection(&x);
            if x == v || member.len() < k {
                continue;
            }
            let (local, _) = self.canonical_under(&orbit.stabilizer, &member);
            let global = action.canonical(&member);
            for (map, rep) in [(&mut e1, local), (&mut e2, global)] {
                map.entry(rep).or_insert_with(|| IntersectionClass {
                    representative: rep,
                    member,
                    base: i,
                    witness: action.elements()[g].clone(),
                    stabilizer: Vec::new(),
                    vertices: member.len(),
                });
            }
        }
        let fill = |ic: &mut IntersectionClass, group: &[usize]| {
            ic.stabilizer = group
                .iter()
                .filter(|&&g| action.image(g, &ic.representative) == ic.representative)
                .map(|&g| action.elements()[g].clone())
                .collect();
        };
        let mut e1: Vec<_> = e1.into_values().collect();
        let mut e2: Vec<_> = e2.into_values().collect();
        e1.iter_mut().for_each(|ic| fill(ic, &orbit.stabilizer));
        e2.iter_mut().for_each(|ic| fill(ic, &all));
        Ok((e1, e2))
    }

    /// Local index (`F(H)` elements fixing the section) and partial index
    /// (all of `B_n` fixing it), both acting on the section's vertices.
    pub fn intersection_cycle_indices(
        &self,
        ic: &IntersectionClass,
    ) -> Result<(CycleIndex, CycleIndex)> {
        let action = self.action();
        let orbit = self.orbit(ic.base);
        let set = ic.member;
        let local: Vec<usize> = orbit
            .stabilizer
            .iter()
            .copied()
            .filter(|&g| action.image(g, &set) == set)
            .collect();
        let local = cycle_index_of_indices(action, &local, &set)?;
        Ok((local, self.flat_index(&set)?))
    }

    fn flat_index(&self, set: &VertexSet) -> Result<CycleIndex> {
        let action = self.action();
        cycle_index_of_indices(action, &action.stabilizer(set), set)
    }

    /// Partial classes of `k`-subsets of a flat: orbits under its full
    /// stabilizer in `B_n`. Cached by canonical form.
    fn partial_count(&self, flat: &VertexSet, k: usize) -> Result<BigInt> {
        let canon = self.action().canonical(flat);
        let cached = self.partial.lock().unwrap().get(&canon.bits()).cloned();
        let c = match cached {
            Some(c) => c,
            None => {
                let c = substitute_two_colors(&self.flat_index(&canon)?);
                self.partial.lock().unwrap().insert(canon.bits(), c.clone());
                c
            }
        };
        let m = c.mass() as usize;
        if k > m {
            return Ok(BigInt::zero());
        }
        c.coefficient(k as u32, (m - k) as u32)
    }

    pub fn n_partial_low(&self, i: usize, k: usize) -> Result<BigInt> {
        self.check_low(k)?;
        let mut total = self.local_count(i, k)?;
        let (e1, e2) = self.e_sets(i, k)?;
        for ic in &e1 {
            let (local, _) = self.intersection_cycle_indices(ic)?;
            total -= coefficient_at(&substitute_two_colors(&local), k)?;
        }
        for ic in &e2 {
            total += self.partial_count(&ic.representative, k)?;
        }
        Ok(total)
    }

    /// Canonical forms of the sections `V(H_i) ∩ w(V(H_j))` with at least
    /// `k` vertices.
    pub fn pair_flats(&self, i: usize, j: usize, k: usize) -> BTreeSet<VertexSet> {
        let action = self.action();
        let v = self.reps[i].vertices();
        self.orbit(j)
            .images
            .iter()
            .filter(|(x, _)| *x != v)
            .map(|(x, _)| v.intersection(x))
            .filter(|f| f.len() >= k)
            .map(|f| action.canonical(&f))
            .collect()
    }

    /// `|A_i ∩ A_j|`.
    pub fn pair_overlap(&self, i: usize, j: usize, k: usize) -> Result<BigInt> {
        self.check_low(k)?;
        self.pair_flats(i, j, k)
            .iter()
            .map(|f| self.partial_count(f, k))
            .sum()
    }

    /// `|A_{i_1} ∩ ... ∩ A_{i_m}|`: the pairwise sections of the first two
    /// that fit inside every listed hyperplane.
    pub fn higher_overlap(&self, list: &[usize], k: usize) -> Result<BigInt> {
        self.check_low(k)?;
        let [first, second, rest @ ..] = list else {
            return Err(Error::InvalidArgument(
                "an overlap needs at least two hyperplanes".into(),
            ));
        };
        self.pair_flats(*first, *second, k)
            .iter()
            .filter(|f| rest.iter().all(|&l| self.contains_image(l, f)))
            .map(|f| self.partial_count(f, k))
            .sum()
    }

    /// `(representative index, N_H(k))` for the low regime.
    pub fn low_breakdown(&self, k: usize) -> Result<Vec<(usize, BigInt)>> {
        self.check_low(k)?;
        let reach = self.reaching(k);
        reach
            .par_iter()
            .map(|&i| Ok((i, self.n_partial_low(i, k)?)))
            .collect()
    }

    /// Index sets `J` with `|J| >= 2` whose intersection term can be
    /// nonzero at `k`.
    pub fn overlap_terms(&self, k: usize) -> Result<BTreeSet<Vec<usize>>> {
        self.check_low(k)?;
        let reach = self.reaching(k);
        let pairs: Vec<(usize, usize)> = reach
            .iter()
            .flat_map(|&i| reach.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect();
        let flats: BTreeSet<VertexSet> = pairs
            .par_iter()
            .flat_map_iter(|&(i, j)| self.pair_flats(i, j, k))
            .collect();
        let mut terms = BTreeSet::new();
        for f in &flats {
            let t: Vec<usize> = reach
                .iter()
                .copied()
                .filter(|&l| self.contains_image(l, f))
                .collect();
            for mask in 1u64..(1 << t.len()) {
                if mask.count_ones() >= 2 {
                    terms.insert(
                        (0..t.len())
                            .filter(|b| mask >> b & 1 == 1)
                            .map(|b| t[b])
                            .collect(),
                    );
                }
            }
        }
        Ok(terms)
    }

    /// Inclusion-exclusion over the sets `A_i` of classes fitting in some
    /// image of `H_i`.
    pub fn h_low(&self, k: usize) -> Result<BigInt> {
        let mut total: BigInt = self.low_breakdown(k)?.into_iter().map(|(_, v)| v).sum();
        for term in self.overlap_terms(k)? {
            let v = if term.len() == 2 {
                self.pair_overlap(term[0], term[1], k)?
            } else {
                self.higher_overlap(&term, k)?
            };
            if term.len() % 2 == 0 {
                total -= v;
            } else {
                total += v;
            }
        }
        Ok(total)
    }

    pub fn f_low(&self, k: usize) -> Result<BigInt> {
        Ok(self.a(k) - self.h_low(k)?)
    }

    /// The closed form for `Q_6`, `13 <= k <= 16`: plain extraction over
    /// all fourteen representatives, minus the flat `x_1 = x_2 = 0`, twice
    /// the flat of `x_1 = 0, x_2 + x_3 = 1`, and the local count of the
    /// section of `x_1 + x_2 = 1` by `(1,3)(2,4)(5)(6)`.
    pub fn h_low_closed_form(&self, k: usize) -> Result<BigInt> {
        if self.n != 6 {
            return Err(self.out_of_regime(k, "low"));
        }
        self.check_low(k)?;
        let mut total = BigInt::zero();
        for i in 0..self.reps.len() {
            total += self.local_count(i, k)?;
        }
        total -= coefficient_at(&substitute_two_colors(&hypercube_cycle_index(4)), k)?;
        let h52 = canonicalize(&GeneralHyperplane::parse(5, "x1 + x2 = 1")?)?;
        total -= coefficient_at(&substitute_two_colors(&cycle_index_symbolic(&h52)?), k)? * 2;
        let h62 = self.index_of(&GeneralHyperplane::parse(6, "x1 + x2 = 1")?)?;
        let w = SignedPermutation::from_cycles(6, "(1 3)(2 4)(5)(6)")?;
        let v = self.reps[h62].vertices();
        let member = v.intersection(&w.act_on_set(&v)?);
        let ic = IntersectionClass {
            representative: member,
            member,
            base: h62,
            witness: w,
            stabilizer: Vec::new(),
            vertices: member.len(),
        };
        let (local, _) = self.intersection_cycle_indices(&ic)?;
        total -= coefficient_at(&substitute_two_colors(&local), k)?;
        Ok(total)
    }

    /// Regime that produces row `k` from computation alone.
    pub fn regime(&self, k: usize) -> Regime {
        let half = self.vertices() / 2;
        if k <= self.n {
            Regime::Trivial
        } else if k > half {
            Regime::High
        } else if self.check_mid(k).is_ok() {
            Regime::Mid
        } else if self.check_low(k).is_ok() {
            Regime::Low
        } else {
            Regime::Unknown
        }
    }

    fn label(&self, i: usize) -> String {
        self.reps[i].to_string()
    }

    /// One row. `external` fills rows no regime covers and must agree with
    /// computed rows.
    pub fn row(&self, k: usize, external: Option<&BigInt>) -> Result<CensusRow> {
        let a = self.a(k);
        let regime = self.regime(k);
        let (h, f, breakdown) = match regime {
            Regime::Trivial => (Some(a.clone()), Some(BigInt::zero()), Vec::new()),
            Regime::High => (Some(BigInt::zero()), Some(a.clone()), Vec::new()),
            Regime::Mid => {
                let b = self.mid_breakdown(k)?;
                let h: BigInt = b.iter().map(|(_, v)| v.clone()).sum();
                (Some(h.clone()), Some(&a - h), b)
            }
            Regime::Low => {
                let h = self.h_low(k)?;
                (Some(h.clone()), Some(&a - h), self.low_breakdown(k)?)
            }
            Regime::External | Regime::Unknown => (None, None, Vec::new()),
        };
        let breakdown = breakdown
            .into_iter()
            .map(|(i, v)| (self.label(i), v))
            .collect();
        let mut row = CensusRow {
            k,
            a,
            h,
            f,
            regime,
            breakdown,
        };
        if let Some(ext) = external {
            match &row.f {
                Some(computed) if computed != ext => {
                    return Err(Error::ExternalConflict {
                        n: self.n,
                        k,
                        external: ext.to_string(),
                        computed: computed.to_string(),
                    })
                }
                Some(_) => {}
                None => {
                    if ext.is_negative() || *ext > row.a {
                        return Err(Error::ExternalConflict {
                            n: self.n,
                            k,
                            external: ext.to_string(),
                            computed: format!("a value in 0..={}", row.a),
                        });
                    }
                    row.h = Some(&row.a - ext);
                    row.f = Some(ext.clone());
                    row.regime = Regime::External;
                }
            }
        }
        Ok(row)
    }

    /// Rows `k = 0..=2^n`.
    pub fn assemble_table(
        &self,
        external: Option<&BTreeMap<usize, BigInt>>,
    ) -> Result<CensusTable> {
        self.assemble_range(0, self.vertices(), external)
    }

    pub fn assemble_range(
        &self,
        lo: usize,
        hi: usize,
        external: Option<&BTreeMap<usize, BigInt>>,
    ) -> Result<CensusTable> {
        let hi = hi.min(self.vertices());
        if let Some(ext) = external {
            if let Some((&k, _)) = ext.iter().find(|(&k, _)| k > self.vertices()) {
                return Err(self.out_of_regime(k, "external"));
            }
        }
        let rows = (lo..=hi)
            .map(|k| self.row(k, external.and_then(|e| e.get(&k))))
            .collect::<Result<_>>()?;
        Ok(CensusTable { n: self.n, rows })
    }
}

fn coefficient_at(c: &Bivariate, k: usize) -> Result<BigInt> {
    let m = c.mass() as usize;
    if k > m {
        return Ok(BigInt::zero());
    }
    c.coefficient(k as u32, (m - k) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let c = Census::new(2, false).unwrap();
        assert_eq!(c.a_table(), [1, 1, 2, 1, 1].map(BigInt::from));
        let t = c.assemble_table(None).unwrap();
        assert_eq!(t.f(3), Some(&BigInt::from(1)));
        assert_eq!(t.row(2).unwrap().regime, Regime::Trivial);
    }

    #[test]
    fn regimes_for_q5() {
        let c = Census::new(5, false).unwrap();
        assert_eq!(c.regime(5), Regime::Trivial);
        assert_eq!(c.regime(6), Regime::Low);
        assert_eq!(c.regime(9), Regime::Mid);
        assert_eq!(c.regime(17), Regime::High);
        assert_eq!(c.low_range(), Some((6, 8)));
        assert!(c.f_high(16).is_err());
    }

    #[test]
    fn external_formats() {
        let a = parse_external("# F\n13 290159817\n14,1051410747\n").unwrap();
        let b = parse_external(r#"{"13": "290159817", "14": 1051410747}"#).unwrap();
        assert_eq!(a, b);
        assert!(parse_external("13").is_err());
    }

    #[test]
    fn csv_shape() {
        let t = Census::new(1, false).unwrap().assemble_table(None).unwrap();
        assert_eq!(
            t.to_csv(),
            "n,k,A,H,F,regime\n1,0,1,1,0,trivial\n1,1,1,1,0,trivial\n1,2,1,0,1,high\n"
        );
    }
}
