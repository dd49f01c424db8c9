//! Slow, direct reference computations for the test suites.
//!
//! Everything here works from the coefficient vectors of the positive roots
//! alone and deliberately avoids the library's poset, chain and alcove code.

use catalan_core::{RootId, RootSet, RootSystem};
use num_rational::Ratio;

fn leq(rs: &RootSystem, a: RootId, b: RootId) -> bool {
    rs.coeffs(a).iter().zip(rs.coeffs(b)).all(|(x, y)| x <= y)
}

fn sum(rs: &RootSystem, a: RootId, b: RootId) -> Option<RootId> {
    let c: Vec<i64> = rs.coeffs(a).iter().zip(rs.coeffs(b)).map(|(x, y)| x + y).collect();
    rs.root_id(&c).ok()
}

/// Exponents of each irreducible factor, read off as the conjugate of the
/// partition counting positive roots by height.
pub fn exponents_from_heights(rs: &RootSystem) -> Vec<Vec<u32>> {
    (0..rs.num_factors())
        .map(|f| {
            let mut by_height: Vec<u32> = Vec::new();
            for a in rs.root_ids().filter(|&a| rs.factor_of(a) == f) {
                let h = rs.height(a) as usize;
                if by_height.len() < h {
                    by_height.resize(h, 0);
                }
                by_height[h - 1] += 1;
            }
            let first = by_height[0];
            let mut exps: Vec<u32> = (1..=first)
                .map(|j| by_height.iter().filter(|&&m| m >= j).count() as u32)
                .collect();
            exps.sort();
            exps
        })
        .collect()
}

fn product(rs: &RootSystem, k: u32, shift: i128) -> u128 {
    let mut acc = Ratio::<i128>::from_integer(1);
    for exps in exponents_from_heights(rs) {
        let h = i128::from(*exps.last().unwrap()) + 1;
        for e in exps {
            let e = i128::from(e);
            acc *= Ratio::new(i128::from(k) * h + e + shift, e + 1);
        }
    }
    assert!(acc.is_integer(), "product formula is not an integer");
    *acc.numer() as u128
}

/// Fuß–Catalan number: product of `(kh + e + 1) / (e + 1)`.
pub fn fuss_catalan(rs: &RootSystem, k: u32) -> u128 {
    product(rs, k, 1)
}

/// Positive Fuß–Catalan number: product of `(kh + e - 1) / (e + 1)`.
pub fn positive_fuss_catalan(rs: &RootSystem, k: u32) -> u128 {
    product(rs, k, -1)
}

/// All antichains of the root poset, by include/exclude recursion.
pub fn antichains(rs: &RootSystem) -> Vec<Vec<RootId>> {
    fn go(rs: &RootSystem, i: usize, cur: &mut Vec<RootId>, out: &mut Vec<Vec<RootId>>) {
        if i == rs.num_positive_roots() {
            out.push(cur.clone());
            return;
        }
        go(rs, i + 1, cur, out);
        let a = RootId(i);
        if cur.iter().all(|&b| !leq(rs, a, b) && !leq(rs, b, a)) {
            cur.push(a);
            go(rs, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rs, 0, &mut Vec::new(), &mut out);
    out
}

pub fn antichain_count(rs: &RootSystem) -> usize {
    antichains(rs).len()
}

/// Antichains by size; for the root poset these are the Narayana numbers.
pub fn antichain_sizes(rs: &RootSystem) -> Vec<u64> {
    let mut out = vec![0; rs.rank() + 1];
    for a in antichains(rs) {
        out[a.len()] += 1;
    }
    out
}

/// Order ideals as downward closures of antichains.
pub fn ideals(rs: &RootSystem) -> Vec<RootSet> {
    antichains(rs)
        .into_iter()
        .map(|top| rs.root_ids().filter(|&b| top.iter().any(|&a| leq(rs, b, a))).collect())
        .collect()
}

fn sums_into(rs: &RootSystem, x: RootSet, y: RootSet, target: RootSet) -> bool {
    x.iter().all(|a| y.iter().all(|b| sum(rs, a, b).is_none_or(|c| target.contains(c))))
}

/// Whether a descending chain of ideals `I_1 ⊆ .. ⊆ I_k` is geometric,
/// checked straight from the two closure conditions.
pub fn is_geometric(rs: &RootSystem, ideals: &[RootSet]) -> bool {
    let k = ideals.len();
    let all: RootSet = rs.root_ids().collect();
    let ideal = |i: usize| if i == 0 { RootSet::EMPTY } else { ideals[i.min(k) - 1] };
    let filter = |i: usize| all.difference(ideal(i));
    for i in 0..=k {
        for j in 0..=k {
            if i + j <= k && i >= 1 && j >= 1 && !sums_into(rs, ideal(i), ideal(j), ideal(i + j)) {
                return false;
            }
            if !sums_into(rs, filter(i), filter(j), filter(i + j)) {
                return false;
            }
        }
    }
    true
}

/// Every geometric chain of `k` ideals, found by trying all increasing
/// sequences of ideals.
pub fn geometric_ideal_chains(rs: &RootSystem, k: u32) -> Vec<Vec<RootSet>> {
    let ideals = ideals(rs);
    let mut out = Vec::new();
    fn go(rs: &RootSystem, ideals: &[RootSet], k: usize, cur: &mut Vec<RootSet>, out: &mut Vec<Vec<RootSet>>) {
        if cur.len() == k {
            if is_geometric(rs, cur) {
                out.push(cur.clone());
            }
            return;
        }
        for &i in ideals {
            if cur.last().is_none_or(|&p| p.is_subset(i)) {
                cur.push(i);
                go(rs, ideals, k, cur, out);
                cur.pop();
            }
        }
    }
    go(rs, &ideals, k as usize, &mut Vec::new(), &mut out);
    out
}

/// Geometric chains whose top ideal holds every simple root.
pub fn positive_chain_count(rs: &RootSystem, k: u32) -> usize {
    geometric_ideal_chains(rs, k)
        .into_iter()
        .filter(|c| rs.simple_roots().all(|s| c.last().unwrap().contains(s)))
        .count()
}

/// Every way to write `a` as a multiset of positive roots, as lists of root
/// indices in nonincreasing order.
pub fn decompositions(rs: &RootSystem, a: RootId) -> Vec<Vec<RootId>> {
    fn go(rs: &RootSystem, rest: &[i64], max: usize, cur: &mut Vec<RootId>, out: &mut Vec<Vec<RootId>>) {
        if rest.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for b in (0..=max).rev() {
            let c = rs.coeffs(RootId(b));
            if c.iter().zip(rest).all(|(x, y)| x <= y) {
                let next: Vec<i64> = rest.iter().zip(c).map(|(y, x)| y - x).collect();
                cur.push(RootId(b));
                go(rs, &next, b, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(rs, rs.coeffs(a), rs.num_positive_roots() - 1, &mut Vec::new(), &mut out);
    out
}

/// `r_alpha` of an ideal chain by exhaustive decomposition; `None` is infinity.
pub fn r_alpha(rs: &RootSystem, ideals: &[RootSet], a: RootId) -> Option<u32> {
    let first = |b: RootId| (1..=ideals.len()).find(|&i| ideals[i - 1].contains(b)).map(|i| i as u32);
    decompositions(rs, a)
        .into_iter()
        .filter_map(|d| d.iter().map(|&b| first(b)).sum::<Option<u32>>())
        .min()
}

/// `k_alpha` of a filter chain by exhaustive decomposition.
pub fn k_alpha(rs: &RootSystem, filters: &[RootSet], a: RootId) -> u32 {
    let depth = |b: RootId| filters.iter().filter(|j| j.contains(b)).count() as u32;
    decompositions(rs, a)
        .into_iter()
        .map(|d| d.iter().map(|&b| depth(b)).sum())
        .max()
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents() {
        let rs = RootSystem::build("B2").unwrap();
        assert_eq!(exponents_from_heights(&rs), vec![vec![1, 3]]);
        let rs = RootSystem::build("G2xA2").unwrap();
        assert_eq!(exponents_from_heights(&rs), vec![vec![1, 5], vec![1, 2]]);
    }

    #[test]
    fn hand_counts() {
        let rs = RootSystem::build("B2").unwrap();
        assert_eq!(antichain_count(&rs), 6);
        assert_eq!(fuss_catalan(&rs, 1), 6);
        assert_eq!(positive_chain_count(&rs, 1), 3);
        assert_eq!(decompositions(&rs, RootId(3)).len(), 3);
    }
}
