//! Dominant regions of the k-Catalan arrangement.
//!
//! A region is keyed by its geometric chain of order filters
//! `J_i = {alpha : <x, alpha> > i on R}`. Floors and ceilings are computed
//! eagerly from indecomposable elements of the filter and ideal chains; the
//! alcove route (walls of the minimal and pseudomaximal alcoves) is exposed
//! separately so the two can be compared.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::alcoves::{self, Alcove, Hyperplane};
use crate::bijection::HyperplaneSet;
use crate::chains::{self, FilterChain, IdealChain};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::rootset::RootSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    key: FilterChain,
    ideal_key: IdealChain,
    floors: Vec<Hyperplane>,
    ceilings: Vec<Hyperplane>,
}

impl Region {
    /// The region `psi(key)` described by a geometric filter chain, with its
    /// floors and ceilings read off the indecomposable elements.
    pub fn from_key(rs: &RootSystem, key: FilterChain) -> Result<Region> {
        if !key.is_geometric(rs) {
            return Err(Error::NotGeometric);
        }
        let ideal_key = key.complement();
        let floors = key
            .indecomposables(rs)
            .into_iter()
            .map(|(a, r)| Hyperplane::new(a, r))
            .collect();
        let ceilings = ideal_key
            .indecomposables(rs)
            .into_iter()
            .map(|(a, r)| Hyperplane::new(a, r))
            .collect();
        Ok(Region { key, ideal_key, floors, ceilings })
    }

    pub fn key(&self) -> &FilterChain {
        &self.key
    }

    pub fn ideal_key(&self) -> &IdealChain {
        &self.ideal_key
    }

    pub fn k(&self) -> u32 {
        self.key.k()
    }

    /// Sorted by root, then level.
    pub fn floors(&self) -> &[Hyperplane] {
        &self.floors
    }

    /// Sorted by root, then level.
    pub fn ceilings(&self) -> &[Hyperplane] {
        &self.ceilings
    }

    pub fn walls(&self, stat: Stat) -> &[Hyperplane] {
        match stat {
            Stat::Floors => &self.floors,
            Stat::Ceilings => &self.ceilings,
        }
    }

    /// Bounded exactly when the ideal chain is positive.
    pub fn is_bounded(&self, rs: &RootSystem) -> bool {
        self.ideal_key.is_positive(rs)
    }

    pub fn minimal_alcove(&self, rs: &RootSystem) -> Alcove {
        alcoves::minimal_alcove(rs, &self.key).expect("region keys are geometric")
    }

    pub fn pseudomaximal_alcove(&self, rs: &RootSystem) -> Alcove {
        alcoves::pseudomaximal_alcove(rs, &self.ideal_key).expect("region keys are geometric")
    }

    /// Whether `alcove` lies in this region.
    pub fn contains(&self, alcove: &Alcove) -> bool {
        alcove.is_dominant()
            && self.key.filters().iter().enumerate().all(|(i, j)| {
                let i = i as i64 + 1;
                (0..alcove.rvec().len())
                    .all(|a| j.contains(crate::RootId(a)) == (alcove.rvec()[a] > i))
            })
    }

    /// Replaces the ceiling set. Only meant for exercising verification
    /// failure paths.
    #[doc(hidden)]
    pub fn with_ceilings(mut self, ceilings: Vec<Hyperplane>) -> Region {
        self.ceilings = ceilings;
        self
    }
}

impl PartialOrd for Region {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Region {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

/// The region of the k-Catalan arrangement containing a dominant alcove.
pub fn region_from_alcove(rs: &RootSystem, alcove: &Alcove, k: u32) -> Result<Region> {
    if k == 0 {
        return Err(Error::InvalidK(0));
    }
    if !alcove.is_dominant() {
        return Err(Error::NotDominant);
    }
    let filters = (1..=k as i64)
        .map(|i| rs.root_ids().filter(|a| alcove.r(*a) > i).collect::<RootSet>())
        .collect();
    let key = FilterChain::new(rs, filters).expect("threshold sets form a filter chain");
    assert!(key.is_geometric(rs), "region key read from an alcove is not geometric");
    Region::from_key(rs, key)
}

/// The region containing the minimal alcove of a geometric filter chain.
pub fn psi(rs: &RootSystem, chain: &FilterChain) -> Result<Region> {
    let alcove = alcoves::minimal_alcove(rs, chain)?;
    let region = region_from_alcove(rs, &alcove, chain.k())?;
    assert_eq!(region.key(), chain, "minimal alcove lies outside its region");
    Ok(region)
}

/// All dominant regions, sorted by key.
pub fn enumerate_regions(rs: &RootSystem, k: u32) -> Result<Vec<Region>> {
    chains::enumerate_geometric_filter_chains(rs, k)?
        .into_iter()
        .map(|c| Region::from_key(rs, c))
        .collect()
}

/// Floors or ceilings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    Floors,
    Ceilings,
}

fn check_levels(regions: &[Region], m: &HyperplaneSet) -> Result<()> {
    if let (Some(r), Some(max)) = (regions.first(), m.max_level()) {
        if max > r.k() {
            return Err(Error::LevelOutOfRange { level: max, k: r.k() });
        }
    }
    Ok(())
}

fn select<'a>(
    regions: &'a [Region],
    m: &HyperplaneSet,
    stat: Stat,
    exact: bool,
) -> Result<Vec<&'a Region>> {
    check_levels(regions, m)?;
    Ok(regions
        .iter()
        .filter(|r| {
            let w = r.walls(stat);
            if exact {
                w == m.items()
            } else {
                m.items().iter().all(|h| w.binary_search(h).is_ok())
            }
        })
        .collect())
}

/// `U(M)`: regions having every hyperplane of `M` as a floor.
pub fn select_u<'a>(regions: &'a [Region], m: &HyperplaneSet) -> Result<Vec<&'a Region>> {
    select(regions, m, Stat::Floors, false)
}

/// `L(M)`: regions having every hyperplane of `M` as a ceiling.
pub fn select_l<'a>(regions: &'a [Region], m: &HyperplaneSet) -> Result<Vec<&'a Region>> {
    select(regions, m, Stat::Ceilings, false)
}

/// Regions whose floors are exactly `M`.
pub fn select_u_exact<'a>(regions: &'a [Region], m: &HyperplaneSet) -> Result<Vec<&'a Region>> {
    select(regions, m, Stat::Floors, true)
}

/// Regions whose ceilings are exactly `M`.
pub fn select_l_exact<'a>(regions: &'a [Region], m: &HyperplaneSet) -> Result<Vec<&'a Region>> {
    select(regions, m, Stat::Ceilings, true)
}

/// Histogram `l -> #regions with exactly l floors (or ceilings) of height r`,
/// for `l = 0..=rank`.
pub fn distribution(rs: &RootSystem, regions: &[Region], stat: Stat, r: u32) -> Result<Vec<u64>> {
    let k = regions.first().map_or(0, Region::k);
    if r == 0 || r > k {
        return Err(Error::LevelOutOfRange { level: r, k });
    }
    let mut hist = vec![0u64; rs.rank() + 1];
    for region in regions {
        let l = region.walls(stat).iter().filter(|h| h.level == r).count();
        hist[l] += 1;
    }
    Ok(hist)
}

/// Joint histogram of `(a_1, .., a_k)`, where `a_j` counts floors (or
/// ceilings) of height `j`.
pub fn joint_profile(regions: &[Region], stat: Stat) -> BTreeMap<Vec<u32>, u64> {
    let mut out = BTreeMap::new();
    for region in regions {
        let mut profile = vec![0u32; region.k() as usize];
        for h in region.walls(stat) {
            profile[h.level as usize - 1] += 1;
        }
        *out.entry(profile).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcoves::{alcove_from_rvec, fundamental_alcove};
    use crate::RootId;

    fn set(ids: &[usize]) -> RootSet {
        ids.iter().map(|&i| RootId(i)).collect()
    }

    fn hp(root: usize, level: u32) -> Hyperplane {
        Hyperplane::new(RootId(root), level)
    }

    #[test]
    fn region_from_alcove_examples() {
        let rs = RootSystem::build("B2").unwrap();
        for k in 1..=3 {
            let r = region_from_alcove(&rs, &fundamental_alcove(&rs), k).unwrap();
            assert!(r.key().filters().iter().all(|j| j.is_empty()));
        }
        let a = alcove_from_rvec(&rs, &[1, 1, 2, 2]).unwrap();
        let r = region_from_alcove(&rs, &a, 1).unwrap();
        assert_eq!(r.key().filters(), &[set(&[2, 3])]);
        let b = alcove_from_rvec(&rs, &[1, 1, 2, 3]).unwrap();
        assert_eq!(region_from_alcove(&rs, &b, 1).unwrap(), r);
        assert!(r.contains(&a) && r.contains(&b));
        assert!(!r.contains(&fundamental_alcove(&rs)));

        let neg = alcove_from_rvec(&rs, &[0, 1, 1, 1]).unwrap();
        assert_eq!(region_from_alcove(&rs, &neg, 1), Err(Error::NotDominant));
    }

    #[test]
    fn psi_round_trips() {
        let rs = RootSystem::build("B2").unwrap();
        for c in chains::enumerate_geometric_filter_chains(&rs, 1).unwrap() {
            assert_eq!(psi(&rs, &c).unwrap().key(), &c);
        }
        let bad = FilterChain::new(&rs, vec![rs.all(), set(&[3])]).unwrap();
        assert_eq!(psi(&rs, &bad), Err(Error::NotGeometric));
    }

    #[test]
    fn floors_and_ceilings_b2() {
        let rs = RootSystem::build("B2").unwrap();
        let r = Region::from_key(&rs, FilterChain::new(&rs, vec![set(&[2, 3])]).unwrap()).unwrap();
        assert_eq!(r.floors(), &[hp(2, 1)]);
        assert_eq!(r.ceilings(), &[hp(0, 1), hp(1, 1)]);

        let origin = Region::from_key(&rs, FilterChain::new(&rs, vec![RootSet::EMPTY]).unwrap())
            .unwrap();
        assert!(origin.floors().is_empty());
        assert_eq!(origin.ceilings(), &[hp(3, 1)]);
        assert!(origin.is_bounded(&rs));

        let far = Region::from_key(&rs, FilterChain::new(&rs, vec![rs.all(); 2]).unwrap()).unwrap();
        assert!(far.ceilings().is_empty());
        assert_eq!(far.floors(), &[hp(0, 2), hp(1, 2)]);
        assert!(!far.is_bounded(&rs));
    }

    #[test]
    fn counts() {
        for (label, k, n, bounded) in [("A2", 1, 5, 2), ("B2", 1, 6, 3), ("B2", 2, 15, 10), ("G2", 2, 21, 16)] {
            let rs = RootSystem::build(label).unwrap();
            let regions = enumerate_regions(&rs, k).unwrap();
            assert_eq!(regions.len(), n, "{label} k={k}");
            assert_eq!(regions.iter().filter(|r| r.is_bounded(&rs)).count(), bounded, "{label} k={k}");
            assert!(regions.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn selectors() {
        let rs = RootSystem::build("B2").unwrap();
        let regions = enumerate_regions(&rs, 2).unwrap();
        let empty = HyperplaneSet::new(vec![], 2).unwrap();
        assert_eq!(select_u(&regions, &empty).unwrap().len(), regions.len());
        assert_eq!(select_l(&regions, &empty).unwrap().len(), regions.len());
        assert_eq!(
            select_u_exact(&regions, &empty).unwrap().len(),
            select_l_exact(&regions, &empty).unwrap().len()
        );

        let m = HyperplaneSet::new(vec![hp(1, 1)], 2).unwrap();
        let u = select_u(&regions, &m).unwrap();
        let l = select_l(&regions, &m).unwrap();
        assert!(!u.is_empty());
        assert_eq!(u.len(), l.len());

        let big = HyperplaneSet::new(vec![hp(0, 1), hp(1, 1), hp(2, 2)], 2).unwrap();
        assert!(select_u(&regions, &big).unwrap().is_empty());
        assert!(select_l(&regions, &big).unwrap().is_empty());

        let k1 = enumerate_regions(&rs, 1).unwrap();
        let out_of_range = HyperplaneSet::new(vec![hp(1, 2)], 2).unwrap();
        assert_eq!(
            select_u(&k1, &out_of_range).unwrap_err(),
            Error::LevelOutOfRange { level: 2, k: 1 }
        );
    }

    #[test]
    fn distributions() {
        let rs = RootSystem::build("A2").unwrap();
        let regions = enumerate_regions(&rs, 1).unwrap();
        assert_eq!(distribution(&rs, &regions, Stat::Floors, 1).unwrap(), vec![1, 3, 1]);
        assert_eq!(distribution(&rs, &regions, Stat::Ceilings, 1).unwrap(), vec![1, 3, 1]);
        assert!(distribution(&rs, &regions, Stat::Floors, 2).is_err());
        assert!(distribution(&rs, &regions, Stat::Floors, 0).is_err());

        let a1 = RootSystem::build("A1").unwrap();
        let regions = enumerate_regions(&a1, 2).unwrap();
        assert_eq!(distribution(&a1, &regions, Stat::Floors, 1).unwrap(), vec![2, 1]);
        assert_eq!(distribution(&a1, &regions, Stat::Ceilings, 1).unwrap(), vec![2, 1]);
        let expected: BTreeMap<Vec<u32>, u64> =
            [(vec![0, 0], 1), (vec![1, 0], 1), (vec![0, 1], 1)].into_iter().collect();
        assert_eq!(joint_profile(&regions, Stat::Floors), expected);
        assert_eq!(joint_profile(&regions, Stat::Ceilings), expected);
    }
}
