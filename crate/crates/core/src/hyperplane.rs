//! Spanned hyperplanes of `Q_n`, their stabilizers and cycle indices.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::cycle_index::{
    cycle_index_of_action, hypercube_cycle_index, mobius_cycle_counts, substitute_monomials,
    CycleIndex, Monomial,
};
use crate::error::{Error, Result};
use crate::group::{
    check_dimension, enumerate_group, permutations, CycleType, SignedPermutation, VertexSet,
    MAX_DIM,
};
use crate::oracle::affine_dimension;

/// `a_1 x_1 + ... + a_n x_n = b` with arbitrary integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralHyperplane {
    coeffs: Vec<i64>,
    rhs: i64,
}

impl GeneralHyperplane {
    pub fn new(coeffs: Vec<i64>, rhs: i64) -> Result<Self> {
        if coeffs.len() > MAX_DIM {
            return Err(Error::DimensionOutOfRange {
                n: coeffs.len(),
                max: MAX_DIM,
            });
        }
        if coeffs.iter().all(|&a| a == 0) {
            return Err(Error::ZeroHyperplane);
        }
        Ok(GeneralHyperplane { coeffs, rhs })
    }

    /// Parses `x1 - x2 + 2x4 = 1` or a coefficient list `1,-1,0,2=1`;
    /// missing trailing coefficients are zero.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let (lhs, rhs) = text
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected '=' in {text:?}")))?;
        let rhs: i64 = rhs
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad right-hand side in {text:?}")))?;
        let lhs: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
        let mut coeffs = vec![0i64; n];
        if lhs.contains('x') {
            let mut rest = lhs.as_str();
            while !rest.is_empty() {
                let (sign, body) = match rest.as_bytes()[0] {
                    b'+' => (1, &rest[1..]),
                    b'-' => (-1, &rest[1..]),
                    _ => (1, rest),
                };
                let end = body[1..].find(['+', '-']).map_or(body.len(), |p| p + 1);
                let term = &body[..end];
                rest = &body[end..];
                let (c, var) = term
                    .split_once('x')
                    .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
                let c = c.trim_end_matches('*');
                let c: i64 = if c.is_empty() {
                    1
                } else {
                    c.parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
                };
                let var: usize = var
                    .trim_start_matches('_')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable in {term:?}")))?;
                if var == 0 || var > n {
                    return Err(Error::Parse(format!(
                        "variable x{var} out of range for n = {n}"
                    )));
                }
                coeffs[var - 1] += sign * c;
            }
        } else {
            let list: Vec<&str> = lhs.split(',').filter(|s| !s.is_empty()).collect();
            if list.len() > n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: list.len(),
                });
            }
            for (slot, c) in coeffs.iter_mut().zip(list) {
                *slot = c
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            }
        }
        GeneralHyperplane::new(coeffs, rhs)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rhs(&self) -> i64 {
        self.rhs
    }

    #[inline]
    pub fn contains_index(&self, v: u32) -> bool {
        let mut s = 0i64;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if (v >> i) & 1 == 1 {
                s += a;
            }
        }
        s == self.rhs
    }
}

impl fmt::Display for GeneralHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, self.coeffs.iter().copied(), self.rhs)
    }
}

fn write_linear(
    f: &mut fmt::Formatter<'_>,
    coeffs: impl Iterator<Item = i64>,
    rhs: i64,
) -> fmt::Result {
    let mut first = true;
    for (i, a) in coeffs.enumerate() {
        if a == 0 {
            continue;
        }
        let sign = if a < 0 { "-" } else { "+" };
        if first {
            if a < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        if a.abs() != 1 {
            write!(f, "{}", a.abs())?;
        }
        write!(f, "x{}", i + 1)?;
    }
    write!(f, " = {rhs}")
}

/// Canonical representative `a_1 x_1 + ... + a_t x_t = b` with
/// `0 < a_1 <= ... <= a_t`, coprime entries and `b <= sum a - b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpannedHyperplane {
    n: usize,
    coeffs: Vec<u32>,
    rhs: u32,
}

impl SpannedHyperplane {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn rhs(&self) -> u32 {
        self.rhs
    }

    pub fn coeff_sum(&self) -> u32 {
        self.coeffs.iter().sum()
    }

    pub fn max_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// 1 iff `sum a = 2b`.
    pub fn delta(&self) -> u32 {
        u32::from(self.coeff_sum() == 2 * self.rhs)
    }

    pub fn to_general(&self) -> GeneralHyperplane {
        let mut coeffs: Vec<i64> = self.coeffs.iter().map(|&a| a as i64).collect();
        coeffs.resize(self.n, 0);
        GeneralHyperplane {
            coeffs,
            rhs: self.rhs as i64,
        }
    }

    pub fn vertices(&self) -> VertexSet {
        vertices_on(&self.to_general())
    }

    /// The hyperplane restricted to its support, as a hyperplane of `Q_t`.
    fn restricted(&self) -> GeneralHyperplane {
        GeneralHyperplane {
            coeffs: self.coeffs.iter().map(|&a| a as i64).collect(),
            rhs: self.rhs as i64,
        }
    }

    /// Contiguous coordinate ranges (0-based, within `0..t`) sharing a
    /// coefficient value, paired with that value.
    fn blocks(&self) -> Vec<(u32, std::ops::Range<usize>)> {
        let mut out: Vec<(u32, std::ops::Range<usize>)> = Vec::new();
        for (i, &a) in self.coeffs.iter().enumerate() {
            match out.last_mut() {
                Some((v, r)) if *v == a => r.end = i + 1,
                _ => out.push((a, i..i + 1)),
            }
        }
        out
    }

    /// `coeffs=1,1,2 rhs=2` form used by the atlas.
    pub fn coefficient_list(&self) -> String {
        let c: Vec<String> = self.coeffs.iter().map(u32::to_string).collect();
        format!("{}={}", c.join(","), self.rhs)
    }
}

impl fmt::Display for SpannedHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, self.coeffs.iter().map(|&a| a as i64), self.rhs as i64)
    }
}

/// `alpha_i = #{j : a_j = i}` for `i = 1..=max a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperplaneType {
    pub alpha: Vec<u32>,
}

impl fmt::Display for HyperplaneType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.alpha.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerDescription {
    pub n: usize,
    pub t: usize,
    pub alpha: HyperplaneType,
    pub delta: u32,
}

impl StabilizerDescription {
    /// `(n-t)! 2^{n-t+delta} prod alpha_i!`
    pub fn order(&self) -> u64 {
        let free = (self.n - self.t) as u64;
        let mut order = factorial(free) << (free + self.delta as u64);
        for &a in &self.alpha.alpha {
            order *= factorial(a as u64);
        }
        order
    }
}

pub fn describe_stabilizer(h: &SpannedHyperplane) -> StabilizerDescription {
    StabilizerDescription {
        n: h.n,
        t: h.support(),
        alpha: hyperplane_type(h),
        delta: h.delta(),
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Cycle types `mu^1, ..., mu^l` of a block permutation, one per
/// coefficient value, plus the sign of the branch.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockPartitionElement {
    pub blocks: Vec<CycleType>,
    pub negative: bool,
}

impl BlockPartitionElement {
    pub fn identity(alpha: &HyperplaneType) -> Self {
        BlockPartitionElement {
            blocks: alpha
                .alpha
                .iter()
                .map(|&a| CycleType::from_counts([(1, a)]))
                .collect(),
            negative: false,
        }
    }

    /// Total number of parts `l(mu)`.
    pub fn num_parts(&self) -> u32 {
        self.blocks.iter().map(CycleType::num_cycles).sum()
    }

    pub fn has_odd_part(&self) -> bool {
        self.blocks
            .iter()
            .any(|b| b.iter().any(|(p, _)| p % 2 == 1))
    }

    /// Order of the underlying signed block permutation.
    pub fn order(&self) -> u32 {
        let l = self
            .blocks
            .iter()
            .flat_map(|b| b.iter().map(|(p, _)| p))
            .fold(1u32, |acc, p| acc.lcm(&p));
        if self.negative && l % 2 == 1 {
            2 * l
        } else {
            l
        }
    }

    /// `z_mu = prod_i z_{mu^i}` with `z_lambda = prod_j j^{m_j} m_j!`.
    pub fn centralizer_size(&self) -> u64 {
        self.blocks
            .iter()
            .flat_map(|b| b.iter())
            .map(|(p, m)| (p as u64).pow(m) * factorial(m as u64))
            .product()
    }
}

pub fn vertices_on(h: &GeneralHyperplane) -> VertexSet {
    let n = h.dim();
    let mut set = VertexSet::empty(n);
    for v in 0..(1u32 << n) {
        if h.contains_index(v) {
            set.insert(v);
        }
    }
    set
}

/// Image of `h` under `w`: coefficients `s(w,j) a_{pi(j)}` and right-hand
/// side `b - sum_{j in s(w)} a_{pi(j)}`.
pub fn transform_hyperplane(
    w: &SignedPermutation,
    h: &GeneralHyperplane,
) -> Result<GeneralHyperplane> {
    if w.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: w.dim(),
            found: h.dim(),
        });
    }
    let mut coeffs = Vec::with_capacity(h.dim());
    let mut rhs = h.rhs;
    for j in 1..=h.dim() {
        let a = h.coeffs[w.pi(j) - 1];
        if w.is_negated(j) {
            coeffs.push(-a);
            rhs -= a;
        } else {
            coeffs.push(a);
        }
    }
    Ok(GeneralHyperplane { coeffs, rhs })
}

pub fn canonicalize(h: &GeneralHyperplane) -> Result<SpannedHyperplane> {
    let n = h.dim();
    let vertices = vertices_on(h);
    let spanned = !vertices.is_empty() && affine_dimension(&vertices)? + 1 == n;
    if !spanned {
        return Err(Error::NotSpanned(h.to_string()));
    }
    Ok(canonical_form(h))
}

/// Sign normalization, sorting, gcd reduction and the rhs tie rule,
/// without the spannedness check.
fn canonical_form(h: &GeneralHyperplane) -> SpannedHyperplane {
    let mut rhs = h.rhs;
    let mut coeffs = Vec::with_capacity(h.dim());
    for &a in &h.coeffs {
        if a < 0 {
            rhs -= a;
            coeffs.push(-a);
        } else if a > 0 {
            coeffs.push(a);
        }
    }
    coeffs.sort_unstable();
    let g = coeffs.iter().fold(rhs.abs(), |g, &a| g.gcd(&a));
    let coeffs: Vec<i64> = coeffs.iter().map(|&a| a / g).collect();
    let rhs = rhs / g;
    let sum: i64 = coeffs.iter().sum();
    let rhs = rhs.min(sum - rhs);
    SpannedHyperplane {
        n: h.dim(),
        coeffs: coeffs.iter().map(|&a| a as u32).collect(),
        rhs: rhs.max(0) as u32,
    }
}

/// One representative per `B_n` class of spanned hyperplanes, sorted by
/// vertex count (descending), support, coefficients and rhs.
///
/// Every class has a member through the origin, so candidates are the
/// hyperplanes through the origin and `n - 1` further vertices.
pub fn enumerate_spanned(n: usize, expensive: bool) -> Result<Vec<SpannedHyperplane>> {
    check_dimension(n, expensive)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![canonical_form(&GeneralHyperplane {
            coeffs: vec![1],
            rhs: 0,
        })]);
    }
    if n == 6 && !expensive {
        return Err(Error::BudgetExceeded(
            "enumerating spanned hyperplanes of Q_6 requires expensive mode".into(),
        ));
    }
    let width = 1u32 << n;
    let found: HashSet<SpannedHyperplane> = (1..width)
        .into_par_iter()
        .map(|first| {
            let mut local = HashSet::new();
            let mut chosen = vec![first];
            collect_normals(n, width, &mut chosen, &mut local);
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let group = enumerate_group(n);
    let mut reps: Vec<(VertexSet, SpannedHyperplane)> =
        found.into_iter().map(|h| (h.vertices(), h)).collect();
    reps.sort_by(|(va, a), (vb, b)| {
        vb.len()
            .cmp(&va.len())
            .then(a.support().cmp(&b.support()))
            .then(a.coeffs.cmp(&b.coeffs))
            .then(a.rhs.cmp(&b.rhs))
    });
    let mut seen = HashSet::new();
    for (v, h) in &reps {
        let canon = crate::group::canonical_set(v, &group);
        assert!(
            seen.insert(canon),
            "canonical forms {h} collide with an earlier class"
        );
    }
    Ok(reps.into_iter().map(|(_, h)| h).collect())
}

fn collect_normals(
    n: usize,
    width: u32,
    chosen: &mut Vec<u32>,
    out: &mut HashSet<SpannedHyperplane>,
) {
    if chosen.len() == n - 1 {
        if let Some(normal) = cofactor_normal(chosen, n) {
            out.insert(canonical_form(&GeneralHyperplane {
                coeffs: normal[..n].to_vec(),
                rhs: 0,
            }));
        }
        return;
    }
    let start = chosen.last().map_or(1, |&v| v + 1);
    let remaining = n - 1 - chosen.len();
    for v in start..=(width - remaining as u32) {
        chosen.push(v);
        collect_normals(n, width, chosen, out);
        chosen.pop();
    }
}

/// Cofactor normal of `n - 1` vertex vectors, `None` when dependent.
fn cofactor_normal(rows: &[u32], n: usize) -> Option<[i64; MAX_DIM]> {
    let mut normal = [0i64; MAX_DIM];
    let mut any = false;
    let size = n - 1;
    for (skip, slot) in normal.iter_mut().enumerate().take(n) {
        let mut m = [[0i64; MAX_DIM]; MAX_DIM];
        for (r, &row) in rows.iter().enumerate() {
            let mut c = 0;
            for j in 0..n {
                if j != skip {
                    m[r][c] = ((row >> j) & 1) as i64;
                    c += 1;
                }
            }
        }
        let d = small_determinant(&mut m, size);
        *slot = if skip % 2 == 0 { d } else { -d };
        any |= d != 0;
    }
    any.then_some(normal)
}

fn small_determinant(m: &mut [[i64; MAX_DIM]; MAX_DIM], size: usize) -> i64 {
    if size == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..size - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..size).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[size - 1][size - 1]
}

const ATLAS6: &str = include_str!("../data/atlas6.txt");

/// One line of the hyperplane atlas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasRecord {
    pub hyperplane: SpannedHyperplane,
    pub alpha: HyperplaneType,
    pub delta: u32,
    pub vertices: usize,
    pub stabilizer_order: u64,
}

impl AtlasRecord {
    pub fn of(h: &SpannedHyperplane) -> Self {
        let d = describe_stabilizer(h);
        AtlasRecord {
            hyperplane: h.clone(),
            stabilizer_order: d.order(),
            alpha: d.alpha,
            delta: d.delta,
            vertices: h.vertices().len(),
        }
    }
}

impl fmt::Display for AtlasRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "n={} t={} coeffs={} rhs={} alpha={} delta={} vertices={} stabilizer={}",
            self.hyperplane.n,
            self.hyperplane.support(),
            join(&self.hyperplane.coeffs),
            self.hyperplane.rhs,
            join(&self.alpha.alpha),
            self.delta,
            self.vertices,
            self.stabilizer_order
        )
    }
}

impl FromStr for AtlasRecord {
    type Err = Error;

    /// Parses a record and checks every derived field against the
    /// hyperplane itself.
    fn from_str(line: &str) -> Result<Self> {
        let mut fields = BTreeMap::new();
        for tok in line.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad atlas field {tok:?}")))?;
            fields.insert(k, v);
        }
        let get = |k: &str| {
            fields
                .get(k)
                .copied()
                .ok_or_else(|| Error::Parse(format!("atlas line lacks {k}: {line:?}")))
        };
        let num = |k: &str| -> Result<u64> {
            get(k)?
                .parse()
                .map_err(|_| Error::Parse(format!("bad {k} in {line:?}")))
        };
        let list = |k: &str| -> Result<Vec<u32>> {
            get(k)?
                .split(',')
                .map(|x| {
                    x.parse()
                        .map_err(|_| Error::Parse(format!("bad {k} in {line:?}")))
                })
                .collect()
        };
        let n = num("n")? as usize;
        check_dimension(n, true)?;
        let coeffs = list("coeffs")?;
        let rhs = num("rhs")?;
        let mut general: Vec<i64> = coeffs.iter().map(|&a| a as i64).collect();
        if general.len() > n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: general.len(),
            });
        }
        general.resize(n, 0);
        let h = canonicalize(&GeneralHyperplane::new(general, rhs as i64)?)?;
        if h.coeffs != coeffs || h.rhs as u64 != rhs {
            return Err(Error::Parse(format!(
                "atlas hyperplane is not in canonical form: {line:?}"
            )));
        }
        let record = AtlasRecord::of(&h);
        let stated = AtlasRecord {
            hyperplane: h,
            alpha: HyperplaneType {
                alpha: list("alpha")?,
            },
            delta: num("delta")? as u32,
            vertices: num("vertices")? as usize,
            stabilizer_order: num("stabilizer")?,
        };
        if num("t")? as usize != stated.hyperplane.support() || stated != record {
            return Err(Error::Parse(format!(
                "atlas record disagrees with computed data: {line:?} vs {record}"
            )));
        }
        Ok(record)
    }
}

pub fn parse_atlas(text: &str) -> Result<Vec<AtlasRecord>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

/// Shipped representatives for `n = 6`; any `min_vertices >= 13` filters
/// the full list of classes with at least 13 vertices.
pub fn builtin_representatives(n: usize, min_vertices: usize) -> Result<Vec<SpannedHyperplane>> {
    if n != 6 || min_vertices < 13 {
        return Err(Error::UnsupportedRepresentatives { n, min_vertices });
    }
    let records = parse_atlas(ATLAS6).expect("shipped atlas is valid");
    Ok(records
        .into_iter()
        .filter(|r| r.vertices >= min_vertices)
        .map(|r| r.hyperplane)
        .collect())
}

/// Representatives with at least `min_vertices` vertices: enumerated for
/// `n <= 5` or in expensive mode, otherwise the shipped list.
pub fn representatives(
    n: usize,
    min_vertices: usize,
    expensive: bool,
) -> Result<Vec<SpannedHyperplane>> {
    if n >= 6 && !expensive {
        return builtin_representatives(n, min_vertices);
    }
    Ok(enumerate_spanned(n, expensive)?
        .into_iter()
        .filter(|h| h.vertices().len() >= min_vertices)
        .collect())
}

pub fn hyperplane_type(h: &SpannedHyperplane) -> HyperplaneType {
    let mut alpha = vec![0u32; h.max_coeff() as usize];
    for &a in &h.coeffs {
        alpha[a as usize - 1] += 1;
    }
    HyperplaneType { alpha }
}

/// `F(H) = P(H) x B_{n,t}` listed explicitly.
pub fn stabilizer_elements(h: &SpannedHyperplane) -> Vec<SignedPermutation> {
    let n = h.n;
    let t = h.support();
    // Block permutations of 0..t as image vectors.
    let mut block_perms: Vec<Vec<u8>> = vec![Vec::new()];
    for (_, range) in h.blocks() {
        let local = permutations(range.len());
        let mut next = Vec::with_capacity(block_perms.len() * local.len());
        for prefix in &block_perms {
            for p in &local {
                let mut v = prefix.clone();
                v.extend(p.iter().map(|&x| x + range.start as u8));
                next.push(v);
            }
        }
        block_perms = next;
    }
    let signs: &[bool] = if h.delta() == 1 {
        &[false, true]
    } else {
        &[false]
    };
    let tail = permutations(n - t);
    let mut out = Vec::new();
    for &neg in signs {
        for head in &block_perms {
            for tp in &tail {
                for tail_neg in 0..(1u32 << (n - t)) {
                    let pi: Vec<usize> = head
                        .iter()
                        .map(|&x| x as usize + 1)
                        .chain(tp.iter().map(|&x| x as usize + t + 1))
                        .collect();
                    let mut negated: Vec<usize> = if neg { (1..=t).collect() } else { Vec::new() };
                    negated.extend(
                        (0..n - t)
                            .filter(|i| (tail_neg >> i) & 1 == 1)
                            .map(|i| t + i + 1),
                    );
                    out.push(
                        SignedPermutation::new(&pi, &negated).expect("valid stabilizer element"),
                    );
                }
            }
        }
    }
    out
}

/// Fixed vertices of `V_t(H)` under a block element: `[x^b] prod (1 + x^{ip})^m`
/// on the positive branch, `2^{l(mu)}` or 0 on the negative branch.
pub fn psi(h: &SpannedHyperplane, elem: &BlockPartitionElement) -> Result<u64> {
    if elem.negative {
        if h.delta() == 0 {
            return Err(Error::NegativeBranchUnavailable);
        }
        return Ok(if elem.has_odd_part() {
            0
        } else {
            1u64 << elem.num_parts()
        });
    }
    let b = h.rhs as usize;
    let mut poly = vec![0u64; b + 1];
    poly[0] = 1;
    for (value, mu) in (1u32..).zip(&elem.blocks) {
        for (p, m) in mu.iter() {
            let step = (value * p) as usize;
            for _ in 0..m {
                for d in (step..=b).rev() {
                    poly[d] += poly[d - step];
                }
            }
        }
    }
    Ok(poly[b])
}

/// Cycle type of `elem^j`.
pub fn power_block_element(elem: &BlockPartitionElement, j: u32) -> BlockPartitionElement {
    let blocks = elem
        .blocks
        .iter()
        .map(|mu| {
            let mut out = CycleType::new();
            for (p, m) in mu.iter() {
                let g = p.gcd(&j);
                out.add(p / g, m * g);
            }
            out
        })
        .collect();
    BlockPartitionElement {
        blocks,
        negative: elem.negative && j % 2 == 1,
    }
}

/// Cycle type induced on `V_t(H)`, recovered from fixed-point counts of
/// powers by Möbius inversion.
pub fn induced_counts(h: &SpannedHyperplane, elem: &BlockPartitionElement) -> Result<CycleType> {
    let max_order = elem.order();
    let mut table = BTreeMap::new();
    for j in 1..=max_order {
        table.insert(j, psi(h, &power_block_element(elem, j))?);
    }
    mobius_cycle_counts(&table, max_order)
}

/// `f(z_j) = prod_i z_{lcm(i,j)}^{i j m_i / lcm(i,j)}` for `j` in `vars`.
pub fn product_monomials(
    counts: &CycleType,
    vars: impl IntoIterator<Item = u32>,
) -> BTreeMap<u32, Monomial> {
    vars.into_iter()
        .map(|j| {
            let m = Monomial::from_pairs(counts.iter().map(|(i, mi)| {
                let l = i.lcm(&j);
                (l, i * j * mi / l)
            }));
            (j, m)
        })
        .collect()
}

/// Substitution targets for every variable of `Z_{n-t}`.
pub fn f_monomials(
    h: &SpannedHyperplane,
    elem: &BlockPartitionElement,
) -> Result<BTreeMap<u32, Monomial>> {
    let counts = induced_counts(h, elem)?;
    Ok(product_monomials(
        &counts,
        1..=(1u32 << (h.n - h.support())),
    ))
}

/// Integer partitions of `m` as nonincreasing part lists in increasing
/// lexicographic order; `partitions(0)` holds the empty partition.
pub fn partitions(m: u32) -> Vec<Vec<u32>> {
    fn go(m: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=m.min(max) {
            prefix.push(first);
            go(m - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Every tuple `(mu^1, ..., mu^l)` with `mu^i` a partition of `alpha_i`.
pub fn block_cycle_types(alpha: &HyperplaneType) -> Vec<Vec<CycleType>> {
    let mut tuples: Vec<Vec<CycleType>> = vec![Vec::new()];
    for &a in &alpha.alpha {
        let parts = partitions(a);
        let mut next = Vec::with_capacity(tuples.len() * parts.len());
        for prefix in &tuples {
            for p in &parts {
                let mut v = prefix.clone();
                v.push(CycleType::from_lengths(p.iter().copied()));
                next.push(v);
            }
        }
        tuples = next;
    }
    tuples
}

/// `Z_H` from the block structure of `F(H)` and `Z_{n-t}`.
pub fn cycle_index_symbolic(h: &SpannedHyperplane) -> Result<CycleIndex> {
    let alpha = hyperplane_type(h);
    let delta = h.delta();
    let base = hypercube_cycle_index(h.n - h.support());
    let vars: BTreeSet<u32> = base
        .terms()
        .flat_map(|(m, _)| m.exponents().iter().map(|&(v, _)| v))
        .collect();
    let mut total = CycleIndex::zero(h.vertices().len() as u32);
    for blocks in block_cycle_types(&alpha) {
        let mut elem = BlockPartitionElement {
            blocks,
            negative: false,
        };
        let weight = BigRational::new(
            BigInt::one(),
            BigInt::from(elem.centralizer_size() << delta),
        );
        for negative in [false, true] {
            if negative && delta == 0 {
                continue;
            }
            elem.negative = negative;
            let counts = induced_counts(h, &elem)?;
            let subst = product_monomials(&counts, vars.iter().copied());
            total.add(&substitute_monomials(&base, &subst)?.scale(&weight));
        }
    }
    Ok(total)
}

/// `Z_H` by averaging over the explicit stabilizer acting on `V_n(H)`.
pub fn cycle_index_burnside(h: &SpannedHyperplane) -> Result<CycleIndex> {
    cycle_index_of_action(&stabilizer_elements(h), &h.vertices())
}

/// Vertices of `Q_t` on the restricted hyperplane.
pub fn support_vertices(h: &SpannedHyperplane) -> VertexSet {
    vertices_on(&h.restricted())
}
