//! The hyperoctahedral group `B_n` as signed permutations acting on the
//! vertices of the `n`-cube.
//!
//! Vertices are indexed `0..2^n` with coordinate `i` (1-based) stored in bit
//! `i - 1`. A signed permutation `w` with underlying permutation `pi` and
//! negated set `s(w)` sends `x` to `y` where `y_i = x_{pi(i)}` for positive
//! `i` and `y_i = 1 - x_{pi(i)}` for negated `i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::error::{Error, Result};

/// Bitset capacity: `2^7 = 128` vertices.
pub const MAX_DIM: usize = 7;
/// Dimension cap applied unless the caller opts into expensive mode.
pub const DEFAULT_MAX_DIM: usize = 6;

pub fn check_dimension(n: usize, expensive: bool) -> Result<()> {
    let max = if expensive { MAX_DIM } else { DEFAULT_MAX_DIM };
    if n > max {
        return Err(Error::DimensionOutOfRange { n, max });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    n: u8,
    index: u32,
}

impl Vertex {
    pub fn new(n: usize, index: u32) -> Result<Self> {
        if n > MAX_DIM {
            return Err(Error::DimensionOutOfRange { n, max: MAX_DIM });
        }
        if (index as u64) >= (1u64 << n) {
            return Err(Error::VertexOutOfRange { index, n });
        }
        Ok(Vertex { n: n as u8, index })
    }

    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let mut index = 0u32;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => index |= 1 << i,
                _ => return Err(Error::Parse(format!("coordinate {c} is not 0/1"))),
            }
        }
        Vertex::new(coords.len(), index)
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Coordinate `i`, 1-based.
    pub fn coord(&self, i: usize) -> u8 {
        ((self.index >> (i - 1)) & 1) as u8
    }

    pub fn coords(&self) -> Vec<u8> {
        (1..=self.dim()).map(|i| self.coord(i)).collect()
    }
}

/// A subset of the `2^n` cube vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: u8,
    bits: u128,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds bitset capacity");
        VertexSet {
            n: n as u8,
            bits: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        s.bits = full_mask(n);
        s
    }

    pub fn from_bits(n: usize, bits: u128) -> Self {
        let mut s = VertexSet::empty(n);
        s.bits = bits & full_mask(n);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(n: usize, indices: I) -> Result<Self> {
        let mut s = VertexSet::empty(n);
        for i in indices {
            if (i as u64) >= (1u64 << n) {
                return Err(Error::VertexOutOfRange { index: i, n });
            }
            s.bits |= 1u128 << i;
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, index: u32) -> bool {
        index < 128 && (self.bits >> index) & 1 == 1
    }

    pub fn insert(&mut self, index: u32) {
        debug_assert!((index as u64) < (1u64 << self.n));
        self.bits |= 1u128 << index;
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: !self.bits & full_mask(self.dim()),
        }
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let n = self.n;
        self.iter().map(move |index| Vertex { n, index })
    }

    /// Membership bitstring with vertex 0 as the most significant position.
    /// Among sets of equal size a larger key means a lexicographically
    /// smaller sorted member list.
    pub fn lex_key(&self) -> u128 {
        let width = 1u32 << self.n;
        self.bits.reverse_bits() >> (128 - width)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by dimension, then size, then sorted member list.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.len(), std::cmp::Reverse(self.lex_key())).cmp(&(
            other.n,
            other.len(),
            std::cmp::Reverse(other.lex_key()),
        ))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, v) in self.vertices().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            for c in v.coords() {
                write!(f, "{c}")?;
            }
        }
        write!(f, "}}")
    }
}

fn full_mask(n: usize) -> u128 {
    if n >= MAX_DIM {
        u128::MAX
    } else {
        (1u128 << (1u32 << n)) - 1
    }
}

/// Multiset of cycle lengths `{1^{c_1}, 2^{c_2}, ...}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(BTreeMap<u32, u32>);

impl CycleType {
    pub fn new() -> Self {
        CycleType(BTreeMap::new())
    }

    pub fn from_lengths<I: IntoIterator<Item = u32>>(lengths: I) -> Self {
        let mut ct = CycleType::new();
        for l in lengths {
            ct.add(l, 1);
        }
        ct
    }

    pub fn from_counts<I: IntoIterator<Item = (u32, u32)>>(counts: I) -> Self {
        let mut ct = CycleType::new();
        for (l, m) in counts {
            ct.add(l, m);
        }
        ct
    }

    pub fn add(&mut self, length: u32, multiplicity: u32) {
        assert!(length >= 1, "cycle length must be positive");
        if multiplicity > 0 {
            *self.0.entry(length).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, length: u32) -> u32 {
        self.0.get(&length).copied().unwrap_or(0)
    }

    /// `(length, multiplicity)` pairs in increasing length.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&l, &m)| (l, m))
    }

    /// `sum length * multiplicity`.
    pub fn mass(&self) -> u32 {
        self.iter().map(|(l, m)| l * m).sum()
    }

    pub fn num_cycles(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_length(&self) -> u32 {
        self.0.keys().next_back().copied().unwrap_or(0)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, (l, m)) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            if m == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// An element of `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    /// `images[i] = pi(i + 1) - 1`.
    images: Vec<u8>,
    /// Bit `i` set iff `i + 1` is in `s(w)`.
    negated: u32,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (0..n as u8).collect(),
            negated: 0,
        }
    }

    /// `pi` as a 1-based image sequence and `negated` as 1-based positions.
    pub fn new(pi: &[usize], negated: &[usize]) -> Result<Self> {
        let n = pi.len();
        if n > MAX_DIM {
            return Err(Error::DimensionOutOfRange { n, max: MAX_DIM });
        }
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &p in pi {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{pi:?} is not a permutation"
                )));
            }
            seen[p - 1] = true;
            images.push((p - 1) as u8);
        }
        let mut mask = 0u32;
        for &i in negated {
            if i == 0 || i > n {
                return Err(Error::InvalidPermutation(format!(
                    "negated entry {i} out of range"
                )));
            }
            mask |= 1 << (i - 1);
        }
        Ok(SignedPermutation {
            images,
            negated: mask,
        })
    }

    /// Parses cycle notation such as `(-2 4 -5)(3)(1 -6)`. A cycle `(a b c)`
    /// means `pi(a) = b, pi(b) = c, pi(c) = a`; a leading `-` puts the entry
    /// in the negated set. Entries may be separated by spaces or commas and
    /// omitted entries are positive fixed points.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self> {
        let mut pi: Vec<usize> = (1..=n).collect();
        let mut negated = Vec::new();
        let mut seen = vec![false; n];
        let bad = |msg: String| Error::InvalidPermutation(msg);
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| bad(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| bad(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let mut cycle = Vec::new();
            for tok in body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let (neg, digits) = match tok.strip_prefix('-') {
                    Some(d) => (true, d),
                    None => (false, tok),
                };
                let e: usize = digits
                    .parse()
                    .map_err(|_| bad(format!("bad entry {tok:?}")))?;
                if e == 0 || e > n || seen[e - 1] {
                    return Err(bad(format!("entry {e} invalid or repeated")));
                }
                seen[e - 1] = true;
                if neg {
                    negated.push(e);
                }
                cycle.push(e);
            }
            for (pos, &e) in cycle.iter().enumerate() {
                pi[e - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        SignedPermutation::new(&pi, &negated)
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    /// `pi(i)`, 1-based.
    pub fn pi(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// Whether `i` (1-based) is in `s(w)`.
    pub fn is_negated(&self, i: usize) -> bool {
        (self.negated >> (i - 1)) & 1 == 1
    }

    pub fn negated_mask(&self) -> u32 {
        self.negated
    }

    pub fn is_identity(&self) -> bool {
        self.negated == 0
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, &p)| p as usize == i)
    }

    /// Image of a vertex index; caller guarantees matching dimension.
    #[inline]
    pub fn apply_index(&self, v: u32) -> u32 {
        let mut y = 0u32;
        for (i, &p) in self.images.iter().enumerate() {
            let bit = ((v >> p) & 1) ^ ((self.negated >> i) & 1);
            y |= bit << i;
        }
        y
    }

    pub fn apply(&self, v: Vertex) -> Result<Vertex> {
        check_same(self.dim(), v.dim())?;
        Ok(Vertex {
            n: v.n,
            index: self.apply_index(v.index),
        })
    }

    /// The element acting as `self` after `other`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        check_same(self.dim(), other.dim())?;
        let mut images = Vec::with_capacity(self.dim());
        let mut negated = 0u32;
        for (i, &p1) in self.images.iter().enumerate() {
            images.push(other.images[p1 as usize]);
            let sign = ((self.negated >> i) & 1) ^ ((other.negated >> p1) & 1);
            negated |= sign << i;
        }
        Ok(SignedPermutation { images, negated })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.dim();
        let mut images = vec![0u8; n];
        let mut negated = 0u32;
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u8;
            negated |= ((self.negated >> i) & 1) << p;
        }
        SignedPermutation { images, negated }
    }

    /// Cycle type of the underlying permutation, signs ignored.
    pub fn underlying_cycle_type(&self) -> CycleType {
        CycleType::from_lengths(self.cycles().into_iter().map(|c| c.len() as u32))
    }

    /// Cycles of the underlying permutation, 1-based, each starting at its
    /// smallest entry.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn act_on_set(&self, set: &VertexSet) -> Result<VertexSet> {
        check_same(self.dim(), set.dim())?;
        Ok(self.act_on_set_unchecked(set))
    }

    fn act_on_set_unchecked(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(set.dim());
        for v in set.iter() {
            out.insert(self.apply_index(v));
        }
        out
    }

    /// Cycle type of the permutation `self` induces on a set it stabilizes.
    pub fn induced_cycle_type(&self, set: &VertexSet) -> Result<CycleType> {
        if self.act_on_set(set)? != *set {
            return Err(Error::NotStabilizing);
        }
        Ok(induced_cycles(set, |v| self.apply_index(v)))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (pos, &e) in cycle.iter().enumerate() {
                if pos > 0 {
                    write!(f, " ")?;
                }
                if self.is_negated(e) {
                    write!(f, "-")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Cycle notation with every entry listed, so the dimension is inferred.
    fn from_str(s: &str) -> Result<Self> {
        let n = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .count();
        SignedPermutation::from_cycles(n, s)
    }
}

fn check_same(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn induced_cycles(set: &VertexSet, image: impl Fn(u32) -> u32) -> CycleType {
    let mut visited = 0u128;
    let mut ct = CycleType::new();
    for v in set.iter() {
        if (visited >> v) & 1 == 1 {
            continue;
        }
        let mut len = 0u32;
        let mut x = v;
        while (visited >> x) & 1 == 0 {
            visited |= 1u128 << x;
            len += 1;
            x = image(x);
        }
        ct.add(len, 1);
    }
    ct
}

/// All `2^n n!` elements of `B_n`, identity first.
pub fn enumerate_group(n: usize) -> Vec<SignedPermutation> {
    assert!(n <= MAX_DIM, "dimension {n} exceeds bitset capacity");
    let perms = permutations(n);
    let mut out = Vec::with_capacity(perms.len() << n);
    for images in perms {
        for negated in 0..(1u32 << n) {
            out.push(SignedPermutation {
                images: images.clone(),
                negated,
            });
        }
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Lexicographically least image of `set` under `group`.
pub fn canonical_set(set: &VertexSet, group: &[SignedPermutation]) -> VertexSet {
    group
        .iter()
        .map(|g| g.act_on_set_unchecked(set))
        .min()
        .unwrap_or(*set)
}

/// A list of group elements with precomputed vertex permutation tables.
pub struct GroupAction {
    n: usize,
    elements: Vec<SignedPermutation>,
    table: Vec<u8>,
    orbits: Mutex<HashMap<u128, u128>>,
}

impl GroupAction {
    pub fn new(n: usize, elements: Vec<SignedPermutation>) -> Result<Self> {
        let width = 1usize << n;
        let mut table = Vec::with_capacity(elements.len() * width);
        for g in &elements {
            check_same(n, g.dim())?;
            table.extend((0..width as u32).map(|v| g.apply_index(v) as u8));
        }
        Ok(GroupAction {
            n,
            elements,
            table,
            orbits: Mutex::new(HashMap::new()),
        })
    }

    pub fn hyperoctahedral(n: usize) -> Self {
        GroupAction::new(n, enumerate_group(n)).expect("group elements share the dimension")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    fn row(&self, g: usize) -> &[u8] {
        let width = 1usize << self.n;
        &self.table[g * width..(g + 1) * width]
    }

    #[inline]
    pub fn image(&self, g: usize, set: &VertexSet) -> VertexSet {
        let row = self.row(g);
        let mut bits = 0u128;
        for v in set.iter() {
            bits |= 1u128 << row[v as usize];
        }
        VertexSet::from_bits(self.n, bits)
    }

    /// Indices of elements mapping `set` onto itself.
    pub fn stabilizer(&self, set: &VertexSet) -> Vec<usize> {
        (0..self.len())
            .filter(|&g| self.image(g, set) == *set)
            .collect()
    }

    pub fn stabilizer_elements(&self, set: &VertexSet) -> Vec<SignedPermutation> {
        self.stabilizer(set)
            .into_iter()
            .map(|g| self.elements[g].clone())
            .collect()
    }

    /// Least image and the first element attaining it.
    pub fn canonical_with_witness(&self, set: &VertexSet) -> (VertexSet, usize) {
        let mut best = self.image(0, set);
        let mut witness = 0;
        for g in 1..self.len() {
            let img = self.image(g, set);
            if img < best {
                best = img;
                witness = g;
            }
        }
        (best, witness)
    }

    /// Canonical form with orbit memoization: the first query of an orbit
    /// records every member, later queries are lookups.
    pub fn canonical(&self, set: &VertexSet) -> VertexSet {
        if let Some(&c) = self.orbits.lock().unwrap().get(&set.bits()) {
            return VertexSet::from_bits(self.n, c);
        }
        let orbit: Vec<VertexSet> = (0..self.len()).map(|g| self.image(g, set)).collect();
        let canon = *orbit.iter().min().expect("group is nonempty");
        let mut memo = self.orbits.lock().unwrap();
        for s in orbit {
            memo.insert(s.bits(), canon.bits());
        }
        canon
    }

    pub fn induced_cycle_type(&self, g: usize, set: &VertexSet) -> Result<CycleType> {
        if self.image(g, set) != *set {
            return Err(Error::NotStabilizing);
        }
        let row = self.row(g);
        Ok(induced_cycles(set, |v| row[v as usize] as u32))
    }
}
