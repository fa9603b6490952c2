//! Cycle-index polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{CycleType, GroupAction, SignedPermutation, VertexSet, MAX_DIM};

/// `z_1^{c_1} z_2^{c_2} ...` stored as `(variable, exponent)` pairs with
/// increasing variable index and positive exponents.
///
/// The ordering puts larger exponents of lower variables first, so `z1^64`
/// leads and `z64` trails.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: u32, exponent: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        if exponent == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(index, exponent)])
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut m = BTreeMap::new();
        for (v, e) in pairs {
            assert!(v >= 1, "variable indices start at 1");
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m.into_iter().collect())
    }

    pub fn from_cycle_type(ct: &CycleType) -> Self {
        Monomial(ct.iter().collect())
    }

    pub fn to_cycle_type(&self) -> CycleType {
        CycleType::from_counts(self.0.iter().copied())
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.0
            .binary_search_by_key(&index, |&(v, _)| v)
            .map(|pos| self.0[pos].1)
            .unwrap_or(0)
    }

    /// `sum i * c_i`.
    pub fn mass(&self) -> u32 {
        self.0.iter().map(|&(v, e)| v * e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, x)| (v, x * e)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match eb.cmp(&ea) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (pos, &(v, e)) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "z{v}")?;
            } else {
                write!(f, "z{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A homogeneous polynomial `sum c_m z^m` of total mass `mass`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleIndex {
    mass: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

impl CycleIndex {
    pub fn zero(mass: u32) -> Self {
        CycleIndex {
            mass,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial, coefficient: BigRational) -> Self {
        let mut z = CycleIndex::zero(m.mass());
        z.add_term(m, coefficient);
        z
    }

    /// Average of `z^{c}` over the given cycle types.
    pub fn average<I: IntoIterator<Item = CycleType>>(mass: u32, types: I) -> Self {
        let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
        let mut total = 0u64;
        for ct in types {
            debug_assert_eq!(ct.mass(), mass);
            *counts.entry(Monomial::from_cycle_type(&ct)).or_insert(0) += 1;
            total += 1;
        }
        let mut z = CycleIndex::zero(mass);
        for (m, c) in counts {
            z.add_term(m, BigRational::new(BigInt::from(c), BigInt::from(total)));
        }
        z
    }

    pub fn mass(&self) -> u32 {
        self.mass
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        if self.terms.is_empty() {
            self.mass = m.mass();
        } else {
            assert_eq!(m.mass(), self.mass, "cycle index terms must share one mass");
        }
        let entry = self
            .terms
            .entry(m.clone())
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&mut self, other: &CycleIndex) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &BigRational) -> CycleIndex {
        let mut out = CycleIndex::zero(self.mass);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * factor);
        }
        out
    }

    /// Least common denominator with the matching integer numerators.
    pub fn scaled(&self) -> (BigInt, Vec<(BigInt, Monomial)>) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    (c * BigRational::from_integer(den.clone())).to_integer(),
                    m.clone(),
                )
            })
            .collect();
        (den, terms)
    }

    /// Builds `(sum numerators_i * m_i) / denominator` from a listing such as
    /// `z_1^4+2z_1^2z_2+3z_2^2+2z_4`. Accepts `z1`, `z_1`, `z_{1}` and
    /// braces around exponents.
    pub fn from_scaled(denominator: u64, listing: &str) -> Result<CycleIndex> {
        let den = BigRational::from_integer(BigInt::from(denominator));
        let mut z = CycleIndex::zero(0);
        for (c, m) in parse_sum(listing)? {
            z.add_term(m, BigRational::from_integer(c) / &den);
        }
        Ok(z)
    }

    /// Short single-line rendering, e.g. `(z1^4 + 2 z1^2 z2 + 3 z2^2 + 2 z4)/8`.
    pub fn to_scaled_string(&self) -> String {
        let (den, terms) = self.scaled();
        let mut body = String::new();
        for (pos, (c, m)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if pos > 0 {
                body.push_str(if neg { " - " } else { " + " });
            } else if neg {
                body.push('-');
            }
            let a = c.abs();
            if a.is_one() {
                body.push_str(&m.to_string());
            } else if m.is_one() {
                body.push_str(&a.to_string());
            } else {
                body.push_str(&format!("{a} {m}"));
            }
        }
        if body.is_empty() {
            body.push('0');
        }
        if den.is_one() {
            body
        } else {
            format!("({body})/{den}")
        }
    }
}

impl fmt::Display for CycleIndex {
    /// One `c * monomial` line per term in monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in &self.terms {
            writeln!(f, "{c} * {m}")?;
        }
        Ok(())
    }
}

impl FromStr for CycleIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut z = CycleIndex::zero(0);
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (c, m) = line
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("expected 'c * monomial' in {line:?}")))?;
            let c: BigRational = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in {line:?}")))?;
            let m = m.trim();
            let m = if m == "1" {
                Monomial::one()
            } else {
                parse_product(m)?
            };
            z.add_term(m, c);
        }
        Ok(z)
    }
}

fn parse_sum(text: &str) -> Result<Vec<(BigInt, Monomial)>> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
        .collect();
    let mut out = Vec::new();
    for term in cleaned.split('+').filter(|t| !t.is_empty()) {
        let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
        let rest = &term[digits.len()..];
        let coefficient = if digits.is_empty() {
            BigInt::one()
        } else {
            digits
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(e.to_string()))?
        };
        let rest = rest.trim_start_matches('*');
        let m = if rest.is_empty() {
            Monomial::one()
        } else {
            parse_product(rest)?
        };
        out.push((coefficient, m));
    }
    Ok(out)
}

/// Parses `z1^4 z2`, `z_1^4z_2` and similar.
fn parse_product(text: &str) -> Result<Monomial> {
    let bad = || Error::Parse(format!("bad monomial {text:?}"));
    let chars: Vec<char> = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
        .collect();
    let mut pairs = Vec::new();
    let mut i = 0;
    let number = |i: &mut usize| -> Option<u32> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>().parse().ok()
    };
    while i < chars.len() {
        if chars[i] == '*' {
            i += 1;
            continue;
        }
        if chars[i] != 'z' {
            return Err(bad());
        }
        i += 1;
        if i < chars.len() && chars[i] == '_' {
            i += 1;
        }
        let v = number(&mut i).filter(|&v| v >= 1).ok_or_else(bad)?;
        let e = if i < chars.len() && chars[i] == '^' {
            i += 1;
            number(&mut i).ok_or_else(bad)?
        } else {
            1
        };
        pairs.push((v, e));
    }
    Ok(Monomial::from_pairs(pairs))
}

/// `(1/|G|) sum_g z^{c(g)}` for the action of `elements` on `set`.
pub fn cycle_index_of_action(
    elements: &[SignedPermutation],
    set: &VertexSet,
) -> Result<CycleIndex> {
    let mut types = Vec::with_capacity(elements.len());
    for g in elements {
        types.push(g.induced_cycle_type(set)?);
    }
    Ok(CycleIndex::average(set.len() as u32, types))
}

/// Cycle index of the elements of `action` selected by `indices` on `set`.
pub fn cycle_index_of_indices(
    action: &GroupAction,
    indices: &[usize],
    set: &VertexSet,
) -> Result<CycleIndex> {
    let mut types = Vec::with_capacity(indices.len());
    for &g in indices {
        types.push(action.induced_cycle_type(g, set)?);
    }
    Ok(CycleIndex::average(set.len() as u32, types))
}

/// `Z_n`, the cycle index of `B_n` on the vertices of `Q_n`. Cached.
pub fn hypercube_cycle_index(n: usize) -> CycleIndex {
    static CACHE: [OnceLock<CycleIndex>; MAX_DIM + 1] = [const { OnceLock::new() }; MAX_DIM + 1];
    assert!(n <= MAX_DIM, "dimension {n} exceeds bitset capacity");
    CACHE[n]
        .get_or_init(|| {
            let action = GroupAction::hyperoctahedral(n);
            let all: Vec<usize> = (0..action.len()).collect();
            cycle_index_of_indices(&action, &all, &VertexSet::full(n))
                .expect("B_n stabilizes the full vertex set")
        })
        .clone()
}

/// Two-color substitution result `sum_p c_p u_1^p u_2^{mass - p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bivariate {
    mass: u32,
    coefficients: Vec<BigRational>,
}

impl Bivariate {
    pub fn mass(&self) -> u32 {
        self.mass
    }

    /// Rational coefficient of `u_1^p u_2^q`.
    pub fn rational(&self, p: u32, q: u32) -> BigRational {
        if p + q != self.mass {
            return BigRational::zero();
        }
        self.coefficients[p as usize].clone()
    }

    /// Integer coefficient of `u_1^p u_2^q`.
    pub fn coefficient(&self, p: u32, q: u32) -> Result<BigInt> {
        let c = self.rational(p, q);
        if !c.is_integer() {
            return Err(Error::NonIntegral(c.to_string()));
        }
        Ok(c.to_integer())
    }

    /// Coefficients for `p = 0..=mass`, each required to be integral.
    pub fn integer_coefficients(&self) -> Result<Vec<BigInt>> {
        (0..=self.mass)
            .map(|p| self.coefficient(p, self.mass - p))
            .collect()
    }

    /// Value at `u_1 = u_2 = 1`.
    pub fn evaluate_all_ones(&self) -> BigRational {
        self.coefficients
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }
}

/// Expands `z_i -> u_1^i + u_2^i`.
pub fn substitute_two_colors(z: &CycleIndex) -> Bivariate {
    let mass = z.mass();
    let mut coefficients = vec![BigRational::zero(); mass as usize + 1];
    for (m, c) in z.terms() {
        let poly = expand_monomial(m, mass);
        for (p, v) in poly.into_iter().enumerate() {
            if !v.is_zero() {
                coefficients[p] += c * BigRational::from_integer(v);
            }
        }
    }
    Bivariate { mass, coefficients }
}

/// `prod_i (x^i + 1)^{c_i}` as a dense vector indexed by the power of `x`.
fn expand_monomial(m: &Monomial, mass: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); mass as usize + 1];
    poly[0] = BigInt::one();
    let mut degree = 0usize;
    for &(i, c) in m.exponents() {
        let i = i as usize;
        for _ in 0..c {
            for p in (0..=degree).rev() {
                if !poly[p].is_zero() {
                    let v = poly[p].clone();
                    poly[p + i] += v;
                }
            }
            degree += i;
        }
    }
    poly
}

/// `[u_1^p u_2^q] C` where `C` is the substitution of `z`.
pub fn coefficient(c: &Bivariate, p: u32, q: u32) -> Result<BigInt> {
    c.coefficient(p, q)
}

/// Replaces each `z_j` by `subst[j]` and collects.
pub fn substitute_monomials(z: &CycleIndex, subst: &BTreeMap<u32, Monomial>) -> Result<CycleIndex> {
    let mut out: Option<CycleIndex> = None;
    for (m, c) in z.terms() {
        let mut image = Monomial::one();
        for &(v, e) in m.exponents() {
            let target = subst.get(&v).ok_or(Error::MissingSubstitution(v))?;
            image = image.mul(&target.pow(e));
        }
        out.get_or_insert_with(|| CycleIndex::zero(image.mass()))
            .add_term(image, c.clone());
    }
    Ok(out.unwrap_or_else(|| CycleIndex::zero(0)))
}

/// Sum of coefficients.
pub fn evaluate_all_ones(z: &CycleIndex) -> BigRational {
    z.terms().fold(BigRational::zero(), |acc, (_, c)| acc + c)
}

pub fn mobius(mut n: u32) -> i64 {
    let mut result = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// Recovers cycle counts `m_i = (1/i) sum_{j | i} mu(i/j) psi(j)` from
/// fixed-point counts `psi(j)` of the powers `g^j`.
pub fn mobius_cycle_counts(psi: &BTreeMap<u32, u64>, max_order: u32) -> Result<CycleType> {
    let mut counts = CycleType::new();
    for i in 1..=max_order {
        let mut sum = 0i128;
        for j in divisors(i) {
            let value = *psi.get(&j).ok_or(Error::MissingFixedPointCount(j))?;
            sum += mobius(i / j) as i128 * value as i128;
        }
        if sum < 0 || sum % i as i128 != 0 {
            let value = BigRational::new(BigInt::from(sum), BigInt::from(i));
            return Err(Error::InconsistentFixedPoints {
                order: i,
                value: value.to_string(),
            });
        }
        let m = (sum / i as i128)
            .to_u32()
            .ok_or_else(|| Error::InconsistentFixedPoints {
                order: i,
                value: sum.to_string(),
            })?;
        counts.add(i, m);
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_group;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn monomial_order_and_display() {
        let a = Monomial::from_pairs([(1, 4)]);
        let b = Monomial::from_pairs([(1, 2), (2, 1)]);
        let c = Monomial::from_pairs([(2, 2)]);
        let d = Monomial::var(4, 1);
        let mut v = vec![d.clone(), c.clone(), a.clone(), b.clone()];
        v.sort();
        assert_eq!(v, vec![a, b.clone(), c, d]);
        assert_eq!(b.to_string(), "z1^2 z2");
        assert_eq!(b.mass(), 4);
    }

    #[test]
    fn square_cycle_index() {
        let z2 = hypercube_cycle_index(2);
        let expected = CycleIndex::from_scaled(8, "z_1^4+2z_1^2z_2+3z_2^2+2z_4").unwrap();
        assert_eq!(z2, expected);
        assert_eq!(evaluate_all_ones(&z2), BigRational::one());
        assert_eq!(
            z2.to_scaled_string(),
            "(z1^4 + 2 z1^2 z2 + 3 z2^2 + 2 z4)/8"
        );
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(
            hypercube_cycle_index(0),
            CycleIndex::monomial(Monomial::var(1, 1), q(1, 1))
        );
        let z1 = CycleIndex::from_scaled(2, "z1^2 + z2").unwrap();
        assert_eq!(hypercube_cycle_index(1), z1);
    }

    #[test]
    fn text_round_trip() {
        let z = hypercube_cycle_index(3);
        let text = z.to_string();
        assert!(text.starts_with("1/48 * z1^8\n"));
        assert_eq!(text.parse::<CycleIndex>().unwrap(), z);
    }

    #[test]
    fn trivial_group_gives_power_of_z1() {
        let s = VertexSet::from_indices(3, [0, 1, 2, 7]).unwrap();
        let z = cycle_index_of_action(&[SignedPermutation::identity(3)], &s).unwrap();
        assert_eq!(z, CycleIndex::monomial(Monomial::var(1, 4), q(1, 1)));
        let not_stab = SignedPermutation::new(&[1, 2, 3], &[1]).unwrap();
        assert_eq!(
            cycle_index_of_action(&[not_stab], &s),
            Err(Error::NotStabilizing)
        );
    }

    #[test]
    fn binomial_substitution() {
        let z = CycleIndex::monomial(Monomial::var(1, 6), q(1, 1));
        let c = substitute_two_colors(&z);
        let row: Vec<BigInt> = c.integer_coefficients().unwrap();
        let expected: Vec<BigInt> = [1, 6, 15, 20, 15, 6, 1]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(row, expected);
    }

    #[test]
    fn square_colorings() {
        let c = substitute_two_colors(&hypercube_cycle_index(2));
        assert_eq!(c.evaluate_all_ones(), q(6, 1));
        let row: Vec<i64> = c
            .integer_coefficients()
            .unwrap()
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(row, vec![1, 1, 2, 1, 1]);
        assert_eq!(coefficient(&c, 1, 1).unwrap(), BigInt::zero());
    }

    #[test]
    fn non_integral_coefficient_is_reported() {
        let z = CycleIndex::monomial(Monomial::var(1, 2), q(1, 2));
        let c = substitute_two_colors(&z);
        assert!(c.coefficient(1, 1).is_ok());
        assert!(matches!(c.coefficient(0, 2), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn monomial_substitution() {
        let z = hypercube_cycle_index(2);
        let id: BTreeMap<u32, Monomial> = [1, 2, 4]
            .iter()
            .map(|&j| (j, Monomial::var(j, 1)))
            .collect();
        assert_eq!(substitute_monomials(&z, &id).unwrap(), z);
        let double: BTreeMap<u32, Monomial> = [1, 2, 4]
            .iter()
            .map(|&j| (j, Monomial::var(j, 2)))
            .collect();
        let d = substitute_monomials(&z, &double).unwrap();
        assert_eq!(d.mass(), 8);
        assert_eq!(d.coefficient_of(&Monomial::from_pairs([(2, 4)])), q(3, 8));
        let partial: BTreeMap<u32, Monomial> = [(1, Monomial::var(1, 1))].into_iter().collect();
        assert_eq!(
            substitute_monomials(&z, &partial),
            Err(Error::MissingSubstitution(2))
        );
        let z0 = hypercube_cycle_index(0);
        let to_z2: BTreeMap<u32, Monomial> = [(1, Monomial::var(2, 8))].into_iter().collect();
        assert_eq!(
            substitute_monomials(&z0, &to_z2).unwrap(),
            CycleIndex::monomial(Monomial::var(2, 8), q(1, 1))
        );
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn mobius_inversion_small_cases() {
        let identity: BTreeMap<u32, u64> = (1..=4).map(|j| (j, 5)).collect();
        assert_eq!(
            mobius_cycle_counts(&identity, 4).unwrap(),
            CycleType::from_counts([(1, 5)])
        );
        let swap: BTreeMap<u32, u64> = [(1, 0), (2, 2)].into_iter().collect();
        assert_eq!(
            mobius_cycle_counts(&swap, 2).unwrap(),
            CycleType::from_counts([(2, 1)])
        );
        let bad: BTreeMap<u32, u64> = [(1, 0), (2, 1)].into_iter().collect();
        assert!(matches!(
            mobius_cycle_counts(&bad, 2),
            Err(Error::InconsistentFixedPoints { order: 2, .. })
        ));
        assert_eq!(
            mobius_cycle_counts(&swap, 3),
            Err(Error::MissingFixedPointCount(3))
        );
    }

    #[test]
    fn mobius_inverts_group_fixed_points_on_q3() {
        let full = VertexSet::full(3);
        for g in enumerate_group(3) {
            let direct = g.induced_cycle_type(&full).unwrap();
            let mut psi = BTreeMap::new();
            let mut power = SignedPermutation::identity(3);
            for j in 1..=12u32 {
                power = power.compose(&g).unwrap();
                let fixed = full.iter().filter(|&v| power.apply_index(v) == v).count() as u64;
                psi.insert(j, fixed);
            }
            let counts = mobius_cycle_counts(&psi, 12).unwrap();
            assert_eq!(counts, direct);
            for j in 1..=12u32 {
                let rebuilt: u64 = counts
                    .iter()
                    .filter(|(i, _)| j % i == 0)
                    .map(|(i, m)| (i * m) as u64)
                    .sum();
                assert_eq!(rebuilt, psi[&j]);
            }
        }
    }
}
