//! Chains of order ideals and order filters in the root poset.
//!
//! An [`IdealChain`] `I_1 ⊆ .. ⊆ I_k` and its complementary [`FilterChain`]
//! `J_i = Φ⁺ \ I_i` describe a dominant region of the k-Catalan arrangement
//! when they are geometric. Level `0` is `I_0 = ∅` / `J_0 = Φ⁺`, and filter
//! levels above `k` repeat `J_k`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

use crate::error::{Error, Result};
use crate::root_system::{RootId, RootSystem};
use crate::rootset::RootSet;

/// A nonnegative integer or infinity. Used for `r_alpha`, which is infinite
/// when a root is not a sum of elements of the top ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Finite(u32),
    Infinity,
}

impl Level {
    pub fn finite(self) -> Option<u32> {
        match self {
            Level::Finite(v) => Some(v),
            Level::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Level::Finite(_))
    }
}

impl Add for Level {
    type Output = Level;
    fn add(self, rhs: Level) -> Level {
        match (self, rhs) {
            (Level::Finite(a), Level::Finite(b)) => Level::Finite(a + b),
            _ => Level::Infinity,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(v) => write!(f, "{v}"),
            Level::Infinity => f.write_str("inf"),
        }
    }
}

/// Ascending chain of `k` order ideals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealChain {
    all: RootSet,
    ideals: Vec<RootSet>,
}

/// Descending chain of `k` order filters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FilterChain {
    all: RootSet,
    filters: Vec<RootSet>,
}

impl IdealChain {
    /// Validates that every level is an ideal and the levels ascend.
    pub fn new(rs: &RootSystem, ideals: Vec<RootSet>) -> Result<IdealChain> {
        if ideals.is_empty() {
            return Err(Error::InvalidK(0));
        }
        let all = rs.all();
        for w in ideals.windows(2) {
            if !w[0].is_subset(w[1]) {
                return Err(Error::NotAChain);
            }
        }
        for &i in &ideals {
            if !i.is_subset(all) || !rs.is_ideal(i) {
                return Err(Error::NotAnIdeal);
            }
        }
        Ok(IdealChain { all, ideals })
    }

    pub fn k(&self) -> u32 {
        self.ideals.len() as u32
    }

    pub fn ideals(&self) -> &[RootSet] {
        &self.ideals
    }

    /// `I_i`, with `I_0 = ∅` and `I_i = I_k` for `i > k`.
    pub fn level(&self, i: u32) -> RootSet {
        if i == 0 {
            RootSet::EMPTY
        } else {
            self.ideals[(i as usize).min(self.ideals.len()) - 1]
        }
    }

    pub fn top(&self) -> RootSet {
        *self.ideals.last().expect("k >= 1")
    }

    pub fn complement(&self) -> FilterChain {
        FilterChain {
            all: self.all,
            filters: self.ideals.iter().map(|i| self.all.difference(*i)).collect(),
        }
    }

    pub fn is_geometric(&self, rs: &RootSystem) -> bool {
        let k = self.k();
        for i in 1..=k {
            for j in i..=k - i {
                if !rs.sumset(self.level(i), self.level(j)).is_subset(self.level(i + j)) {
                    return false;
                }
            }
        }
        self.complement().filter_condition_holds(rs)
    }

    /// Every simple root lies in `I_k`.
    pub fn is_positive(&self, rs: &RootSystem) -> bool {
        rs.simple_set().is_subset(self.top())
    }

    /// `I_k ∩ S`.
    pub fn supp(&self, rs: &RootSystem) -> RootSet {
        self.top().intersection(rs.simple_set())
    }

    /// `r_alpha` for every positive root, indexed by root.
    ///
    /// Dynamic programming in height order: a root either lies in some level
    /// directly or splits as a sum of two positive roots.
    pub fn r_values(&self, rs: &RootSystem) -> Vec<Level> {
        let mut r = vec![Level::Infinity; rs.num_positive_roots()];
        for a in rs.root_ids() {
            let mut best = (1..=self.k())
                .find(|&i| self.level(i).contains(a))
                .map_or(Level::Infinity, Level::Finite);
            for &(b, c) in rs.sum_pairs(a) {
                best = best.min(r[b.0] + r[c.0]);
            }
            r[a.0] = best;
        }
        r
    }

    pub fn r_alpha(&self, rs: &RootSystem, a: RootId) -> Level {
        self.r_values(rs)[a.0]
    }

    /// Whether `a` is a rank `r` indecomposable element, given the
    /// precomputed `r_values`.
    pub fn is_indecomposable_with(&self, rs: &RootSystem, rv: &[Level], a: RootId, r: u32) -> bool {
        let k = self.k();
        if r == 0 || r > k || !self.level(r).contains(a) || rv[a.0] != Level::Finite(r) {
            return false;
        }
        for i in 1..r {
            let (li, lj) = (self.level(i), self.level(r - i));
            if rs.sum_pairs(a).iter().any(|&(b, c)| {
                (li.contains(b) && lj.contains(c)) || (li.contains(c) && lj.contains(b))
            }) {
                return false;
            }
        }
        for b in rs.root_ids() {
            let Some(s) = rs.add(a, b) else { continue };
            if let Level::Finite(t) = rv[s.0] {
                if t <= k && !(t > r && self.level(t - r).contains(b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_indecomposable(&self, rs: &RootSystem, a: RootId, r: u32) -> bool {
        self.is_indecomposable_with(rs, &self.r_values(rs), a, r)
    }

    /// All `(root, rank)` pairs with the root a rank-`rank` indecomposable
    /// element, sorted by root then rank.
    pub fn indecomposables(&self, rs: &RootSystem) -> Vec<(RootId, u32)> {
        let rv = self.r_values(rs);
        let mut out = Vec::new();
        for a in rs.root_ids() {
            if let Level::Finite(r) = rv[a.0] {
                if self.is_indecomposable_with(rs, &rv, a, r) {
                    out.push((a, r));
                }
            }
        }
        out
    }

    /// The positive chain of `k + 1` ideals obtained by appending
    /// `⋃_{i+j=k+1} (I_i + I_j) ∪ I_k ∪ S`.
    pub fn underline(&self, rs: &RootSystem) -> IdealChain {
        let k = self.k();
        let mut top = self.top().union(rs.simple_set());
        for i in 1..=k {
            top = top.union(rs.sumset(self.level(i), self.level(k + 1 - i)));
        }
        let mut ideals = self.ideals.clone();
        ideals.push(top);
        let out = IdealChain { all: self.all, ideals };
        assert!(rs.is_ideal(top), "extended top level is not an ideal");
        assert!(out.is_geometric(rs) && out.is_positive(rs), "extended chain is not positive geometric");
        out
    }
}

impl FilterChain {
    /// Validates that every level is a filter and the levels descend.
    pub fn new(rs: &RootSystem, filters: Vec<RootSet>) -> Result<FilterChain> {
        if filters.is_empty() {
            return Err(Error::InvalidK(0));
        }
        let all = rs.all();
        for w in filters.windows(2) {
            if !w[1].is_subset(w[0]) {
                return Err(Error::NotAChain);
            }
        }
        for &j in &filters {
            if !j.is_subset(all) || !rs.is_filter(j) {
                return Err(Error::NotAFilter);
            }
        }
        Ok(FilterChain { all, filters })
    }

    pub fn k(&self) -> u32 {
        self.filters.len() as u32
    }

    pub fn filters(&self) -> &[RootSet] {
        &self.filters
    }

    /// `J_i`, with `J_0 = Φ⁺` and `J_i = J_k` for `i > k`.
    pub fn level(&self, i: u32) -> RootSet {
        if i == 0 {
            self.all
        } else {
            self.filters[(i as usize).min(self.filters.len()) - 1]
        }
    }

    pub fn complement(&self) -> IdealChain {
        IdealChain {
            all: self.all,
            ideals: self.filters.iter().map(|j| self.all.difference(*j)).collect(),
        }
    }

    pub fn is_geometric(&self, rs: &RootSystem) -> bool {
        self.complement().is_geometric(rs)
    }

    fn filter_condition_holds(&self, rs: &RootSystem) -> bool {
        let k = self.k();
        for i in 0..=k {
            for j in i..=k {
                if !rs.sumset(self.level(i), self.level(j)).is_subset(self.level(i + j)) {
                    return false;
                }
            }
        }
        true
    }

    /// Number of levels containing `a`, i.e. `max{i <= k : a ∈ J_i}`.
    pub fn depth(&self, a: RootId) -> u32 {
        self.filters.iter().take_while(|j| j.contains(a)).count() as u32
    }

    /// `depth` of every root in root order; chains are ordered by this key.
    pub fn sort_key(&self) -> Vec<u32> {
        (0..self.all.len()).map(|i| self.depth(RootId(i))).collect()
    }

    /// `k_alpha` for every positive root, indexed by root.
    pub fn k_values(&self, rs: &RootSystem) -> Vec<u32> {
        let mut kv = vec![0u32; rs.num_positive_roots()];
        for a in rs.root_ids() {
            let mut best = self.depth(a);
            for &(b, c) in rs.sum_pairs(a) {
                best = best.max(kv[b.0] + kv[c.0]);
            }
            kv[a.0] = best;
        }
        kv
    }

    pub fn k_alpha(&self, rs: &RootSystem, a: RootId) -> u32 {
        self.k_values(rs)[a.0]
    }

    /// Whether `a` is a rank `r` indecomposable element, given the
    /// precomputed `k_values`.
    ///
    /// The sum condition runs over `i + j = r` with `i, j >= 0`; the `i = 0`
    /// term `J_0 + J_r` excludes roots that sit above another element of `J_r`.
    pub fn is_indecomposable_with(&self, rs: &RootSystem, kv: &[u32], a: RootId, r: u32) -> bool {
        let k = self.k();
        if r == 0 || r > k || !self.level(r).contains(a) || kv[a.0] != r {
            return false;
        }
        for i in 0..=r / 2 {
            let (li, lj) = (self.level(i), self.level(r - i));
            if rs.sum_pairs(a).iter().any(|&(b, c)| {
                (li.contains(b) && lj.contains(c)) || (li.contains(c) && lj.contains(b))
            }) {
                return false;
            }
        }
        for b in rs.root_ids() {
            let Some(s) = rs.add(a, b) else { continue };
            let t = kv[s.0];
            if t <= k && !self.level(t.saturating_sub(r)).contains(b) {
                return false;
            }
        }
        true
    }

    pub fn is_indecomposable(&self, rs: &RootSystem, a: RootId, r: u32) -> bool {
        self.is_indecomposable_with(rs, &self.k_values(rs), a, r)
    }

    /// All `(root, rank)` indecomposable pairs, sorted by root.
    pub fn indecomposables(&self, rs: &RootSystem) -> Vec<(RootId, u32)> {
        let kv = self.k_values(rs);
        rs.root_ids()
            .filter(|&a| self.is_indecomposable_with(rs, &kv, a, kv[a.0]))
            .map(|a| (a, kv[a.0]))
            .collect()
    }
}

impl PartialOrd for FilterChain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FilterChain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.filters.cmp(&other.filters))
    }
}

/// All order filters of the root poset, in a fixed order.
pub fn order_filters(rs: &RootSystem) -> Vec<RootSet> {
    fn go(rs: &RootSystem, idx: usize, cur: RootSet, out: &mut Vec<RootSet>) {
        if idx == 0 {
            out.push(cur);
            return;
        }
        let a = RootId(idx - 1);
        go(rs, idx - 1, cur, out);
        // a may join only if everything covering it is already present
        if rs.upper_covers(a).all(|b| cur.contains(b)) {
            let mut with = cur;
            with.insert(a);
            go(rs, idx - 1, with, out);
        }
    }
    let mut out = Vec::new();
    go(rs, rs.num_positive_roots(), RootSet::EMPTY, &mut out);
    out
}

/// All order ideals of the root poset, as complements of [`order_filters`].
pub fn order_ideals(rs: &RootSystem) -> Vec<RootSet> {
    let all = rs.all();
    order_filters(rs).into_iter().map(|j| all.difference(j)).collect()
}

/// Every geometric chain of `k` order filters, each once, sorted.
///
/// Levels are chosen depth first. When `J_1, .., J_{l-1}` are fixed the
/// conditions with `i + j = l` pin `J_l` between the lower bound
/// `⋃ (J_i + J_j)` and the complement of `⋃ (I_i + I_j)`; the conditions with
/// `i + j > k` follow from those with `i + j = k` because the chain descends.
pub fn enumerate_geometric_filter_chains(rs: &RootSystem, k: u32) -> Result<Vec<FilterChain>> {
    if k == 0 {
        return Err(Error::InvalidK(0));
    }
    let filters = order_filters(rs);
    let all = rs.all();
    let mut out = Vec::new();
    let mut chain: Vec<RootSet> = Vec::with_capacity(k as usize);
    descend(rs, &filters, all, k, &mut chain, &mut out);
    out.sort();
    Ok(out)
}

fn descend(
    rs: &RootSystem,
    filters: &[RootSet],
    all: RootSet,
    k: u32,
    chain: &mut Vec<RootSet>,
    out: &mut Vec<FilterChain>,
) {
    let l = chain.len() as u32 + 1;
    if l > k {
        let fc = FilterChain { all, filters: chain.clone() };
        debug_assert!(fc.is_geometric(rs));
        out.push(fc);
        return;
    }
    let level = |i: u32| if i == 0 { all } else { chain[i as usize - 1] };
    let prev = level(l - 1);
    let mut lower = RootSet::EMPTY;
    let mut forbidden = RootSet::EMPTY;
    for i in 1..=l / 2 {
        let (ji, jj) = (level(i), level(l - i));
        lower = lower.union(rs.sumset(ji, jj));
        forbidden = forbidden.union(rs.sumset(all.difference(ji), all.difference(jj)));
    }
    for &f in filters {
        if f.is_subset(prev) && lower.is_subset(f) && f.intersection(forbidden).is_empty() {
            chain.push(f);
            descend(rs, filters, all, k, chain, out);
            chain.pop();
        }
    }
}
