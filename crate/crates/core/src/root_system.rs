//! Crystallographic root systems built from Cartan data.
//!
//! Roots are integer coefficient vectors over the simple roots. Points of the
//! ambient space are never represented directly: a [`Point`] stores its
//! pairings with the simple roots, which is all that hyperplane membership
//! `<x, alpha> = r` ever needs.
//!
//! Conventions: Dynkin labelling follows Bourbaki except for `B_n`, where the
//! short simple root is `alpha_1` (so `B2` has positive roots
//! `alpha_1, alpha_2, alpha_1 + alpha_2, 2 alpha_1 + alpha_2`). `C_n` has the
//! long simple root at `alpha_1`, `G2` has `alpha_1` short. Short roots of every
//! factor have squared length 2.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rootset::{RootSet, MAX_ROOTS};

/// Exact rational scalar used for all geometry.
pub type Rational = Ratio<i64>;

/// Index of a positive root inside its [`RootSystem`].
///
/// Indices follow the system's root order: by height, then by coefficient
/// vector in decreasing lexicographic order. In particular `RootId(i)` is the
/// simple root `alpha_{i+1}` for `i < rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// One irreducible Cartan type such as `B2` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<CartanType> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::RankOutOfBounds { series: series.letter(), rank })
        }
    }

    /// Dynkin edges (0-based) and half squared lengths of the simple roots.
    /// Exponents of the Weyl group, from the classification tables.
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.rank as u32;
        match (self.series, n) {
            (Series::A, _) => (1..=n).collect(),
            (Series::B | Series::C, _) => (1..=n).map(|i| 2 * i - 1).collect(),
            (Series::D, _) => {
                let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort();
                e
            }
            (Series::E, 6) => vec![1, 4, 5, 7, 8, 11],
            (Series::E, 7) => vec![1, 5, 7, 9, 11, 13, 17],
            (Series::E, _) => vec![1, 7, 11, 13, 17, 19, 23, 29],
            (Series::F, _) => vec![1, 5, 7, 11],
            (Series::G, _) => vec![1, 5],
        }
    }

    fn dynkin(&self) -> (Vec<(usize, usize)>, Vec<i64>) {
        let n = self.rank;
        let chain = |m: usize| (0..m.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.series {
            Series::A => (chain(n), vec![1; n]),
            Series::B => {
                let mut d = vec![2; n];
                d[0] = 1;
                (chain(n), d)
            }
            Series::C => {
                let mut d = vec![1; n];
                d[0] = 2;
                (chain(n), d)
            }
            Series::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                (e, vec![1; n])
            }
            Series::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                (e, vec![1; n])
            }
            Series::F => (chain(4), vec![2, 2, 1, 1]),
            Series::G => (chain(2), vec![1, 3]),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<CartanType> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::UnknownLabel(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownLabel(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

/// A possibly reducible type descriptor, e.g. `A2xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Label(pub Vec<CartanType>);

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        if s.trim().is_empty() {
            return Err(Error::UnknownLabel(s.to_string()));
        }
        let factors = s
            .split(['x', 'X', '*'])
            .map(str::parse)
            .collect::<Result<Vec<CartanType>>>()?;
        Ok(Label(factors))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A point of the ambient space, stored as its pairings with the simple
/// roots: `coords[i] = <x, alpha_{i+1}>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub coords: Vec<Rational>,
}

impl Point {
    pub fn origin(rank: usize) -> Point {
        Point { coords: vec![Rational::from_integer(0); rank] }
    }
}

/// Positive roots, root poset and pairing data of a crystallographic root
/// system. Immutable once built.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: Label,
    rank: usize,
    roots: Vec<Vec<i64>>,
    heights: Vec<u32>,
    factor_of_root: Vec<usize>,
    factor_of_simple: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    highest: Vec<RootId>,
    coxeter: Vec<u32>,
    sums: Vec<Vec<(RootId, RootId)>>,
    plus: Vec<Vec<Option<RootId>>>,
    // coroot[a][b] = <a^vee, b>
    coroot: Vec<Vec<i64>>,
    index: BTreeMap<Vec<i64>, RootId>,
}

impl RootSystem {
    /// Builds the root system named by `label`, e.g. `"B2"` or `"A2xA1"`.
    pub fn build(label: &str) -> Result<RootSystem> {
        RootSystem::from_label(label.parse()?)
    }

    pub fn from_label(label: Label) -> Result<RootSystem> {
        let rank: usize = label.0.iter().map(|t| t.rank).sum();
        let mut gram = vec![vec![0i64; rank]; rank];
        let mut half_len = vec![0i64; rank];
        let mut factor_of_simple = Vec::with_capacity(rank);
        let mut offset = 0;
        for (f, t) in label.0.iter().enumerate() {
            let (edges, d) = t.dynkin();
            for (i, di) in d.iter().enumerate() {
                half_len[offset + i] = *di;
                gram[offset + i][offset + i] = 2 * di;
                factor_of_simple.push(f);
            }
            for (i, j) in edges {
                // <alpha_i, alpha_j> = -(longer half length) for a simple bond
                // of any multiplicity.
                let v = -d[i].max(d[j]);
                gram[offset + i][offset + j] = v;
                gram[offset + j][offset + i] = v;
            }
            offset += t.rank;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        debug_assert_eq!(gram[i][j] % half_len[i], 0);
                        gram[i][j] / half_len[i]
                    })
                    .collect()
            })
            .collect();

        let roots = generate_positive_roots(&cartan);
        if roots.len() > MAX_ROOTS {
            return Err(Error::UnknownLabel(label.to_string()));
        }
        let heights: Vec<u32> = roots.iter().map(|c| c.iter().sum::<i64>() as u32).collect();
        let index: BTreeMap<Vec<i64>, RootId> =
            roots.iter().enumerate().map(|(i, c)| (c.clone(), RootId(i))).collect();
        let factor_of_root: Vec<usize> = roots
            .iter()
            .map(|c| {
                let i = c.iter().position(|&x| x != 0).expect("nonzero root");
                factor_of_simple[i]
            })
            .collect();

        let mut sums = vec![Vec::new(); roots.len()];
        let mut plus = vec![vec![None; roots.len()]; roots.len()];
        for b in 0..roots.len() {
            for c in b + 1..roots.len() {
                let s: Vec<i64> = roots[b].iter().zip(&roots[c]).map(|(x, y)| x + y).collect();
                if let Some(&a) = index.get(&s) {
                    sums[a.0].push((RootId(b), RootId(c)));
                    plus[b][c] = Some(a);
                    plus[c][b] = Some(a);
                }
            }
        }

        let form = |a: &[i64], b: &[i64]| -> i64 {
            let mut acc = 0;
            for i in 0..rank {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..rank {
                    acc += a[i] * b[j] * gram[i][j];
                }
            }
            acc
        };
        let coroot: Vec<Vec<i64>> = roots
            .iter()
            .map(|a| {
                let aa = form(a, a);
                roots
                    .iter()
                    .map(|b| {
                        let ab = 2 * form(a, b);
                        assert_eq!(ab % aa, 0, "non-crystallographic pairing");
                        ab / aa
                    })
                    .collect()
            })
            .collect();

        let nfactors = label.0.len();
        let mut highest = vec![RootId(0); nfactors];
        let mut coxeter = vec![0u32; nfactors];
        // roots are sorted by height, so the last root of each factor is its
        // highest root
        for (i, &f) in factor_of_root.iter().enumerate() {
            highest[f] = RootId(i);
        }
        for f in 0..nfactors {
            coxeter[f] = heights[highest[f].0] + 1;
        }

        Ok(RootSystem {
            label,
            rank,
            roots,
            heights,
            factor_of_root,
            factor_of_simple,
            cartan,
            gram,
            highest,
            coxeter,
            sums,
            plus,
            coroot,
            index,
        })
    }

    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_factors(&self) -> usize {
        self.label.0.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_ids(&self) -> impl DoubleEndedIterator<Item = RootId> + ExactSizeIterator {
        (0..self.roots.len()).map(RootId)
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = RootId> {
        (0..self.rank).map(RootId)
    }

    pub fn is_simple(&self, a: RootId) -> bool {
        a.0 < self.rank
    }

    /// All positive roots.
    pub fn all(&self) -> RootSet {
        RootSet::full(self.roots.len())
    }

    /// The simple roots as a set.
    pub fn simple_set(&self) -> RootSet {
        RootSet::full(self.rank)
    }

    pub fn coeffs(&self, a: RootId) -> &[i64] {
        &self.roots[a.0]
    }

    pub fn height(&self, a: RootId) -> u32 {
        self.heights[a.0]
    }

    pub fn factor_of(&self, a: RootId) -> usize {
        self.factor_of_root[a.0]
    }

    pub fn factor_of_simple(&self, i: usize) -> usize {
        self.factor_of_simple[i]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrized Cartan matrix, `gram[i][j] = <alpha_i, alpha_j>`.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn highest_roots(&self) -> &[RootId] {
        &self.highest
    }

    pub fn coxeter_numbers(&self) -> &[u32] {
        &self.coxeter
    }

    /// Unordered pairs `{b, c}` of positive roots with `b + c = a`.
    pub fn sum_pairs(&self, a: RootId) -> &[(RootId, RootId)] {
        &self.sums[a.0]
    }

    /// Looks up a root by its coefficients.
    pub fn root_id(&self, coeffs: &[i64]) -> Result<RootId> {
        self.index
            .get(coeffs)
            .copied()
            .ok_or_else(|| Error::UnknownRoot(coeffs.to_vec()))
    }

    /// `a + b` if it is a positive root.
    pub fn add(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.plus[a.0][b.0]
    }

    /// `<x, a>`, exact.
    pub fn pairing(&self, x: &Point, a: RootId) -> Rational {
        self.roots[a.0]
            .iter()
            .zip(&x.coords)
            .filter(|(c, _)| **c != 0)
            .fold(Rational::from_integer(0), |acc, (c, v)| acc + v * *c)
    }

    /// Root poset order: `b - a` has nonnegative coefficients.
    pub fn poset_leq(&self, a: RootId, b: RootId) -> bool {
        self.roots[a.0].iter().zip(&self.roots[b.0]).all(|(x, y)| x <= y)
    }

    /// `<a^vee, b> = 2<a, b> / <a, a>`, always an integer.
    pub fn coroot_pairing(&self, a: RootId, b: RootId) -> i64 {
        self.coroot[a.0][b.0]
    }

    /// `<a^vee, alpha_i>` for every simple root.
    pub fn coroot_on_simple(&self, a: RootId) -> &[i64] {
        &self.coroot[a.0][..self.rank]
    }

    /// Roots covering `a` in the root poset, i.e. `a + alpha_i` for simple
    /// `alpha_i`.
    pub fn upper_covers(&self, a: RootId) -> impl Iterator<Item = RootId> + '_ {
        self.simple_roots().filter_map(move |s| self.add(a, s))
    }

    /// Upward closure of a set.
    pub fn up_closure(&self, s: RootSet) -> RootSet {
        let mut out = RootSet::EMPTY;
        for b in self.root_ids() {
            if s.iter().any(|a| self.poset_leq(a, b)) {
                out.insert(b);
            }
        }
        out
    }

    /// Downward closure of a set.
    pub fn down_closure(&self, s: RootSet) -> RootSet {
        let mut out = RootSet::EMPTY;
        for b in self.root_ids() {
            if s.iter().any(|a| self.poset_leq(b, a)) {
                out.insert(b);
            }
        }
        out
    }

    pub fn is_ideal(&self, s: RootSet) -> bool {
        self.down_closure(s) == s
    }

    pub fn is_filter(&self, s: RootSet) -> bool {
        self.up_closure(s) == s
    }

    /// Maximal elements of a set under the root order.
    pub fn maximal_elements(&self, s: RootSet) -> RootSet {
        s.iter()
            .filter(|&a| !s.iter().any(|b| b != a && self.poset_leq(a, b)))
            .collect()
    }

    /// Minimal elements of a set under the root order.
    pub fn minimal_elements(&self, s: RootSet) -> RootSet {
        s.iter()
            .filter(|&a| !s.iter().any(|b| b != a && self.poset_leq(b, a)))
            .collect()
    }

    /// `(a + b) ∩ Φ⁺` for sets `a`, `b`.
    pub fn sumset(&self, a: RootSet, b: RootSet) -> RootSet {
        let mut out = RootSet::EMPTY;
        if a.is_empty() || b.is_empty() {
            return out;
        }
        for r in self.root_ids() {
            if self.sums[r.0].iter().any(|&(x, y)| {
                (a.contains(x) && b.contains(y)) || (a.contains(y) && b.contains(x))
            }) {
                out.insert(r);
            }
        }
        out
    }

    /// Human readable name of a root, e.g. `2a1+a2`.
    pub fn root_name(&self, a: RootId) -> String {
        let mut s = String::new();
        for (i, &c) in self.roots[a.0].iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if c != 1 {
                s.push_str(&c.to_string());
            }
            s.push('a');
            s.push_str(&(i + 1).to_string());
        }
        s
    }
}

/// Closure from the simple roots via root strings: `beta + alpha_i` is a root
/// iff `q > 0` where `p - q = <beta, alpha_i^vee>` and `p` is the length of
/// the downward `alpha_i`-string through `beta`.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut known: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone(), ());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                let q = p - pair;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}
