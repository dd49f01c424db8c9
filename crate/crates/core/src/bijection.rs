//! The bijection `Θ: U(M) → L(M)` and its inverse `Ψ`.
//!
//! `Θ(R)` folds the minimal alcove of `R` through the hyperplanes of `M`
//! until it lies below all of them; `Ψ(R')` folds the pseudomaximal alcove of
//! `R'` until it lies above all of them. The hyperplanes of `M` are walls of
//! the alcove being folded, so the reflections in them generate a finite
//! parabolic group `W'`, and folding into the opposite chamber applies its
//! longest element. The group itself is never materialized; only its
//! reflecting hyperplanes are enumerated, to certify the step count.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::alcoves::{self, Alcove, Hyperplane, Side};
use crate::error::{Error, Result};
use crate::regions::{region_from_alcove, Region};
use crate::root_system::{RootId, RootSystem};

/// A set of hyperplanes `H_alpha^i` with `1 <= i <= k`, kept sorted by root
/// and level.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperplaneSet {
    items: Vec<Hyperplane>,
}

impl HyperplaneSet {
    pub fn new(mut items: Vec<Hyperplane>, k: u32) -> Result<HyperplaneSet> {
        for h in &items {
            if h.level == 0 || h.level > k {
                return Err(Error::LevelOutOfRange { level: h.level, k });
            }
        }
        items.sort();
        if items.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateHyperplane);
        }
        Ok(HyperplaneSet { items })
    }

    pub fn empty() -> HyperplaneSet {
        HyperplaneSet::default()
    }

    pub fn items(&self) -> &[Hyperplane] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn max_level(&self) -> Option<u32> {
        self.items.iter().map(|h| h.level).max()
    }

    /// Every set of at most `max_size` hyperplanes of the k-Catalan
    /// arrangement (levels `1..=k`), in lexicographic order of their sorted
    /// item lists, starting with the empty set.
    pub fn all_up_to(rs: &RootSystem, k: u32, max_size: usize) -> Vec<HyperplaneSet> {
        let pool: Vec<Hyperplane> = rs
            .root_ids()
            .flat_map(|a| (1..=k).map(move |l| Hyperplane::new(a, l)))
            .collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(pool: &[Hyperplane], start: usize, max: usize, cur: &mut Vec<Hyperplane>, out: &mut Vec<HyperplaneSet>) {
            out.push(HyperplaneSet { items: cur.clone() });
            if cur.len() == max {
                return;
            }
            for i in start..pool.len() {
                cur.push(pool[i]);
                go(pool, i + 1, max, cur, out);
                cur.pop();
            }
        }
        go(&pool, 0, max_size, &mut cur, &mut out);
        out
    }
}

/// Target side of a fold relative to the hyperplanes of `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Start above every hyperplane, end below all of them.
    Below,
    /// Start below every hyperplane, end above all of them.
    Above,
}

/// Reflecting hyperplanes of the group generated by the reflections in `m`,
/// normalized to positive roots. Panics if the closure exceeds `cap`.
pub fn parabolic_hyperplanes(rs: &RootSystem, m: &[(RootId, i64)], cap: usize) -> BTreeSet<(RootId, i64)> {
    let mut seen: BTreeSet<(RootId, i64)> = m.iter().copied().collect();
    let mut frontier: Vec<(RootId, i64)> = seen.iter().copied().collect();
    let mut coeffs = Vec::with_capacity(rs.rank());
    while let Some((a, r)) = frontier.pop() {
        for &(b, l) in m {
            let c = rs.coroot_pairing(b, a);
            if c == 0 {
                continue;
            }
            // s_{b,l}(H_a^r) = H_{s_b(a)}^{r - l<b^vee, a>}
            coeffs.clear();
            coeffs.extend(rs.coeffs(a).iter().zip(rs.coeffs(b)).map(|(x, y)| x - c * y));
            let mut level = r - l * c;
            if coeffs.iter().any(|&x| x < 0) {
                coeffs.iter_mut().for_each(|x| *x = -*x);
                level = -level;
            }
            let id = rs.root_id(&coeffs).expect("reflection of a root is a root");
            if seen.insert((id, level)) {
                assert!(seen.len() <= cap, "reflection group generated by M is not finite");
                frontier.push((id, level));
            }
        }
    }
    seen
}

/// Folds `alcove` through the hyperplanes of `m` into the chamber on the
/// `orientation` side of all of them.
///
/// Every hyperplane of `m` must be a wall of `alcove` with the alcove
/// strictly on the opposite side. At each step the violated hyperplane with
/// the smallest `(root, level)` is crossed.
pub fn fold(rs: &RootSystem, alcove: &Alcove, m: &HyperplaneSet, orientation: Orientation) -> Result<Alcove> {
    fold_with_path(rs, alcove, m, orientation).map(|(a, _)| a)
}

/// [`fold`], also returning the crossed hyperplanes.
pub fn fold_with_path(
    rs: &RootSystem,
    alcove: &Alcove,
    m: &HyperplaneSet,
    orientation: Orientation,
) -> Result<(Alcove, Vec<Hyperplane>)> {
    let (start_side, wall_side) = match orientation {
        Orientation::Below => (Side::Above, Side::Above),
        Orientation::Above => (Side::Below, Side::Below),
    };
    let walls = alcoves::walls(rs, alcove);
    for h in m.items() {
        let level = h.level as i64;
        let is_wall = walls.iter().any(|w| w.root == h.root && w.level == level && w.side == wall_side);
        if !is_wall || !alcoves::strictly(rs, alcove.anchor(), h.root, level, start_side) {
            return Err(Error::FoldPrecondition);
        }
    }
    if m.is_empty() {
        return Ok((alcove.clone(), Vec::new()));
    }

    let gens: Vec<(RootId, i64)> = m.items().iter().map(|h| (h.root, h.level as i64)).collect();
    let reflecting = parabolic_hyperplanes(rs, &gens, 4 * rs.num_positive_roots() * rs.num_positive_roots());
    // hyperplanes of W' not yet crossed: those still on the starting side
    let remaining = |x: &Alcove| {
        reflecting
            .iter()
            .filter(|&&(a, l)| {
                let start_above = alcoves::strictly(rs, alcove.anchor(), a, l, Side::Above);
                alcoves::strictly(rs, x.anchor(), a, l, Side::Above) == start_above
            })
            .count()
    };

    let dominant = alcove.is_dominant();
    let mut cur = alcove.clone();
    let mut left = reflecting.len();
    let mut path = Vec::new();
    while let Some(h) = m
        .items()
        .iter()
        .find(|h| alcoves::strictly(rs, cur.anchor(), h.root, h.level as i64, start_side))
    {
        cur = alcoves::reflect(rs, &cur, h.root, h.level as i64);
        path.push(*h);
        let now = remaining(&cur);
        assert_eq!(now + 1, left, "fold step did not cross exactly one new reflecting hyperplane");
        left = now;
        if dominant {
            assert!(cur.is_dominant(), "fold left the dominant chamber");
        }
    }
    assert_eq!(left, 0, "fold stopped before reaching the opposite chamber");
    assert_eq!(path.len(), reflecting.len());
    Ok((cur, path))
}

fn contains_all(walls: &[Hyperplane], m: &HyperplaneSet) -> bool {
    m.items().iter().all(|h| walls.binary_search(h).is_ok())
}

/// `Θ(R)` from the minimal alcove of `R`.
pub fn theta_from_alcove(rs: &RootSystem, minimal: &Alcove, m: &HyperplaneSet, k: u32) -> Result<Region> {
    let folded = fold(rs, minimal, m, Orientation::Below)?;
    region_from_alcove(rs, &folded, k)
}

/// `Ψ(R')` from the pseudomaximal alcove of `R'`.
pub fn psi_from_alcove(rs: &RootSystem, pseudomaximal: &Alcove, m: &HyperplaneSet, k: u32) -> Result<Region> {
    let folded = fold(rs, pseudomaximal, m, Orientation::Above)?;
    region_from_alcove(rs, &folded, k)
}

/// `Θ: U(M) → L(M)`.
pub fn theta_map(rs: &RootSystem, region: &Region, m: &HyperplaneSet) -> Result<Region> {
    if !contains_all(region.floors(), m) {
        return Err(Error::NotInU);
    }
    let image = theta_from_alcove(rs, &region.minimal_alcove(rs), m, region.k())?;
    assert!(contains_all(image.ceilings(), m), "image of U(M) is not in L(M)");
    Ok(image)
}

/// `Ψ: L(M) → U(M)`, the inverse of [`theta_map`].
pub fn psi_map(rs: &RootSystem, region: &Region, m: &HyperplaneSet) -> Result<Region> {
    if !contains_all(region.ceilings(), m) {
        return Err(Error::NotInL);
    }
    let image = psi_from_alcove(rs, &region.pseudomaximal_alcove(rs), m, region.k())?;
    assert!(contains_all(image.floors(), m), "image of L(M) is not in U(M)");
    Ok(image)
}

/// Outcome of checking the bijection for one hyperplane set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijEntry {
    pub m: HyperplaneSet,
    pub u: usize,
    pub l: usize,
    pub u_exact: usize,
    pub l_exact: usize,
    /// `Θ(U(M)) ⊆ L(M)` and `Ψ(L(M)) ⊆ U(M)`.
    pub well_defined: bool,
    /// `Ψ∘Θ` and `Θ∘Ψ` are identities.
    pub inverse: bool,
}

impl BijEntry {
    pub fn bijective(&self) -> bool {
        self.well_defined && self.inverse && self.u == self.l
    }

    pub fn passed(&self) -> bool {
        self.bijective() && self.u_exact == self.l_exact
    }
}

/// Checks `Θ`/`Ψ` on every hyperplane set of size at most `m_max` against a
/// list of regions (normally [`regions::enumerate_regions`]).
///
/// Membership in `U(M)`, `L(M)` and the exact variants is read from the
/// stored floors and ceilings of `regions`; images are computed from scratch
/// and looked up by key.
pub fn verify_theorem_bij(rs: &RootSystem, regions: &[Region], k: u32, m_max: usize) -> Vec<BijEntry> {
    let by_key: BTreeMap<_, usize> = regions.iter().enumerate().map(|(i, r)| (r.key().clone(), i)).collect();
    let minimal: Vec<Alcove> = regions.iter().map(|r| r.minimal_alcove(rs)).collect();
    let pseudo: Vec<Alcove> = regions.iter().map(|r| r.pseudomaximal_alcove(rs)).collect();
    let index_of = |r: &Region| by_key.get(r.key()).copied();

    HyperplaneSet::all_up_to(rs, k, m_max)
        .into_iter()
        .map(|m| {
            let in_u: Vec<bool> = regions.iter().map(|r| contains_all(r.floors(), &m)).collect();
            let in_l: Vec<bool> = regions.iter().map(|r| contains_all(r.ceilings(), &m)).collect();
            let mut well_defined = true;
            let mut inverse = true;
            for i in 0..regions.len() {
                if in_u[i] {
                    match theta_from_alcove(rs, &minimal[i], &m, k).ok().as_ref().and_then(index_of) {
                        Some(j) if in_l[j] => {
                            let back = psi_from_alcove(rs, &pseudo[j], &m, k).ok();
                            inverse &= back.as_ref().and_then(index_of) == Some(i);
                        }
                        _ => well_defined = false,
                    }
                }
                if in_l[i] {
                    match psi_from_alcove(rs, &pseudo[i], &m, k).ok().as_ref().and_then(index_of) {
                        Some(j) if in_u[j] => {
                            let back = theta_from_alcove(rs, &minimal[j], &m, k).ok();
                            inverse &= back.as_ref().and_then(index_of) == Some(i);
                        }
                        _ => well_defined = false,
                    }
                }
            }
            let u_exact = regions.iter().filter(|r| r.floors() == m.items()).count();
            let l_exact = regions.iter().filter(|r| r.ceilings() == m.items()).count();
            BijEntry {
                u: in_u.iter().filter(|&&b| b).count(),
                l: in_l.iter().filter(|&&b| b).count(),
                u_exact,
                l_exact,
                well_defined,
                inverse,
                m,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcoves::{alcove_from_rvec, fundamental_alcove};
    use crate::regions::{self, enumerate_regions};
    use alloc::vec;

    fn hp(root: usize, level: u32) -> Hyperplane {
        Hyperplane::new(RootId(root), level)
    }

    #[test]
    fn hyperplane_set_validation() {
        assert_eq!(HyperplaneSet::new(vec![hp(0, 3)], 2), Err(Error::LevelOutOfRange { level: 3, k: 2 }));
        assert_eq!(HyperplaneSet::new(vec![hp(0, 0)], 2), Err(Error::LevelOutOfRange { level: 0, k: 2 }));
        assert_eq!(HyperplaneSet::new(vec![hp(0, 1), hp(0, 1)], 2), Err(Error::DuplicateHyperplane));
        let m = HyperplaneSet::new(vec![hp(1, 2), hp(0, 1)], 2).unwrap();
        assert_eq!(m.items(), &[hp(0, 1), hp(1, 2)]);
    }

    #[test]
    fn subset_counts() {
        let rs = RootSystem::build("B2").unwrap();
        assert_eq!(HyperplaneSet::all_up_to(&rs, 2, 2).len(), 37);
        assert_eq!(HyperplaneSet::all_up_to(&rs, 1, 0), vec![HyperplaneSet::empty()]);
    }

    #[test]
    fn fold_rank_one() {
        let rs = RootSystem::build("A1").unwrap();
        let a = alcove_from_rvec(&rs, &[2]).unwrap();
        let m = HyperplaneSet::new(vec![hp(0, 1)], 2).unwrap();
        let b = fold(&rs, &a, &m, Orientation::Below).unwrap();
        assert_eq!(b, fundamental_alcove(&rs));
        assert_eq!(fold(&rs, &b, &m, Orientation::Above).unwrap(), a);
        assert_eq!(fold(&rs, &a, &HyperplaneSet::empty(), Orientation::Below).unwrap(), a);
        assert_eq!(fold(&rs, &b, &m, Orientation::Below), Err(Error::FoldPrecondition));
    }

    #[test]
    fn theta_rank_one() {
        let rs = RootSystem::build("A1").unwrap();
        let regions = enumerate_regions(&rs, 2).unwrap();
        let m = HyperplaneSet::new(vec![hp(0, 1)], 2).unwrap();
        // regions sorted by depth of the single root: slabs (0,1), (1,2), (2,inf)
        let image = theta_map(&rs, &regions[1], &m).unwrap();
        assert_eq!(image, regions[0]);
        assert_eq!(psi_map(&rs, &regions[0], &m).unwrap(), regions[1]);
        assert_eq!(theta_map(&rs, &regions[0], &m), Err(Error::NotInU));
        assert_eq!(psi_map(&rs, &regions[1], &m), Err(Error::NotInL));
    }

    #[test]
    fn fold_b2_two_hyperplanes() {
        let rs = RootSystem::build("B2").unwrap();
        let regions = enumerate_regions(&rs, 2).unwrap();
        let m = HyperplaneSet::new(vec![hp(1, 1), hp(3, 2)], 2).unwrap();
        let u = regions::select_u(&regions, &m).unwrap();
        assert!(!u.is_empty());
        for r in u {
            let folded = fold(&rs, &r.minimal_alcove(&rs), &m, Orientation::Below).unwrap();
            for h in m.items() {
                assert!(rs.pairing(folded.anchor(), h.root) < crate::Rational::from_integer(h.level as i64));
            }
            assert!(folded.is_dominant());
        }
    }

    #[test]
    fn reducible_acts_componentwise() {
        let a1 = RootSystem::build("A1").unwrap();
        let rs = RootSystem::build("A1xA1").unwrap();
        let k = 2;
        let a1_regions = enumerate_regions(&a1, k).unwrap();
        // depth of the A1 image of the region of depth d under M = {H^l}
        let theta1 = |d: u32, l: u32| {
            let m = HyperplaneSet::new(vec![hp(0, l)], k).unwrap();
            let r = a1_regions.iter().find(|r| r.key().depth(RootId(0)) == d).unwrap();
            theta_map(&a1, r, &m).unwrap().key().depth(RootId(0))
        };
        let regions = enumerate_regions(&rs, k).unwrap();
        for l1 in 1..=k {
            for l2 in 1..=k {
                let m = HyperplaneSet::new(vec![hp(0, l1), hp(1, l2)], k).unwrap();
                let u = regions::select_u(&regions, &m).unwrap();
                assert_eq!(u.len(), 1);
                for r in u {
                    let image = theta_map(&rs, r, &m).unwrap();
                    let d = r.key().sort_key();
                    assert_eq!(image.key().sort_key(), vec![theta1(d[0], l1), theta1(d[1], l2)]);
                }
            }
        }
    }

    #[test]
    fn sweep_b2() {
        let rs = RootSystem::build("B2").unwrap();
        for k in 1..=2 {
            let regions = enumerate_regions(&rs, k).unwrap();
            let report = verify_theorem_bij(&rs, &regions, k, 2);
            assert!(report.iter().all(BijEntry::passed), "{report:?}");
        }
    }
}
