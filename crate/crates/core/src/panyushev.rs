//! The Panyushev complement on order ideals and its description through
//! `k = 1` regions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::chains::{order_ideals, FilterChain};
use crate::error::{Error, Result};
use crate::regions::{enumerate_regions, Region};
use crate::root_system::RootSystem;
use crate::rootset::RootSet;

/// A set of pairwise incomparable positive roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antichain(RootSet);

impl Antichain {
    pub fn new(rs: &RootSystem, roots: RootSet) -> Option<Antichain> {
        let ok = roots
            .iter()
            .all(|a| roots.iter().all(|b| a == b || !rs.poset_leq(a, b)));
        ok.then_some(Antichain(roots))
    }

    pub fn roots(&self) -> RootSet {
        self.0
    }

    /// The ideal with this antichain as its maximal elements.
    pub fn ideal(&self, rs: &RootSystem) -> RootSet {
        rs.down_closure(self.0)
    }
}

/// `Pan(I)`: the ideal generated by the minimal elements of `Φ⁺ \ I`.
pub fn pan(rs: &RootSystem, ideal: RootSet) -> Result<RootSet> {
    if !rs.is_ideal(ideal) {
        return Err(Error::NotAnIdeal);
    }
    let filter = rs.all().difference(ideal);
    Ok(rs.down_closure(rs.minimal_elements(filter)))
}

fn level_one(rs: &RootSystem, region: &Region, floors: bool) -> Result<Antichain> {
    if region.k() != 1 {
        return Err(Error::RequiresK1(region.k()));
    }
    let walls = if floors { region.floors() } else { region.ceilings() };
    let roots = walls.iter().filter(|h| h.level == 1).map(|h| h.root).collect();
    Ok(Antichain::new(rs, roots).expect("level-one walls form an antichain"))
}

/// `CL(R)`: roots whose level-one hyperplane is a ceiling of `R`.
pub fn cl(rs: &RootSystem, region: &Region) -> Result<Antichain> {
    level_one(rs, region, false)
}

/// `FL(R)`: roots whose level-one hyperplane is a floor of `R`.
pub fn fl(rs: &RootSystem, region: &Region) -> Result<Antichain> {
    level_one(rs, region, true)
}

/// The `k = 1` region whose first ideal is `ideal`.
pub fn region_of_ideal(rs: &RootSystem, ideal: RootSet) -> Result<Region> {
    if !rs.is_ideal(ideal) {
        return Err(Error::NotAnIdeal);
    }
    Region::from_key(rs, FilterChain::new(rs, vec![rs.all().difference(ideal)])?)
}

/// Regions for `k = 1` indexed by their ceiling antichain.
pub struct ClIndex {
    by_cl: BTreeMap<Antichain, RootSet>,
}

impl ClIndex {
    pub fn new(rs: &RootSystem) -> Result<ClIndex> {
        let mut by_cl = BTreeMap::new();
        for r in enumerate_regions(rs, 1)? {
            let prev = by_cl.insert(cl(rs, &r)?, r.ideal_key().top());
            assert!(prev.is_none(), "CL is not injective");
        }
        Ok(ClIndex { by_cl })
    }

    /// The first ideal of `CL⁻¹(a)`.
    pub fn ideal_of(&self, a: &Antichain) -> Option<RootSet> {
        self.by_cl.get(a).copied()
    }
}

/// `Pan(I)` computed as the ideal of the region whose ceilings are the floors
/// of the region of `I`; panics if it disagrees with [`pan`].
pub fn pan_via_regions(rs: &RootSystem, index: &ClIndex, ideal: RootSet) -> Result<RootSet> {
    let image = region_route(rs, index, ideal)?.expect("floor antichain is the ceiling antichain of some region");
    assert_eq!(image, pan(rs, ideal)?, "Pan disagrees with its region description");
    Ok(image)
}

/// The first ideal of `CL⁻¹(FL(R))` for the region `R` of `ideal`, if some
/// region has that ceiling antichain.
pub fn region_route(rs: &RootSystem, index: &ClIndex, ideal: RootSet) -> Result<Option<RootSet>> {
    let floors = fl(rs, &region_of_ideal(rs, ideal)?)?;
    Ok(index.ideal_of(&floors))
}

/// Order used to list ideals: the depth vector of the complementary filter,
/// matching the order of `k = 1` regions.
pub fn ideal_key(rs: &RootSystem, ideal: RootSet) -> Vec<u32> {
    rs.root_ids().map(|a| u32::from(!ideal.contains(a))).collect()
}

/// All order ideals in [`ideal_key`] order.
pub fn ideals(rs: &RootSystem) -> Vec<RootSet> {
    let mut all = order_ideals(rs);
    all.sort_by_cached_key(|&i| ideal_key(rs, i));
    all
}

/// The orbits of `Pan`, each starting at its smallest member and listed in
/// order of that member.
pub fn pan_orbits(rs: &RootSystem) -> Vec<Vec<RootSet>> {
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for start in ideals(rs) {
        if seen.contains(&start.bits()) {
            continue;
        }
        let mut orbit = vec![start];
        seen.insert(start.bits());
        let mut cur = pan(rs, start).expect("ideal");
        while cur != start {
            assert!(seen.insert(cur.bits()), "Pan is not injective");
            orbit.push(cur);
            cur = pan(rs, cur).expect("ideal");
        }
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RootId;

    fn set(ids: &[usize]) -> RootSet {
        ids.iter().map(|&i| RootId(i)).collect()
    }

    #[test]
    fn pan_examples() {
        let rs = RootSystem::build("B2").unwrap();
        assert_eq!(pan(&rs, set(&[0, 1])).unwrap(), set(&[0, 1, 2]));
        assert_eq!(pan(&rs, rs.all()).unwrap(), RootSet::EMPTY);
        assert_eq!(pan(&rs, RootSet::EMPTY).unwrap(), rs.simple_set());
        assert_eq!(pan(&rs, set(&[2])), Err(Error::NotAnIdeal));
    }

    #[test]
    fn cl_fl_examples() {
        let rs = RootSystem::build("B2").unwrap();
        let origin = region_of_ideal(&rs, rs.all()).unwrap();
        assert_eq!(cl(&rs, &origin).unwrap().roots(), set(&[3]));
        assert_eq!(fl(&rs, &origin).unwrap().roots(), RootSet::EMPTY);
        let far = region_of_ideal(&rs, RootSet::EMPTY).unwrap();
        assert_eq!(fl(&rs, &far).unwrap().roots(), rs.simple_set());
        assert_eq!(cl(&rs, &far).unwrap().roots(), RootSet::EMPTY);
        let mid = region_of_ideal(&rs, set(&[0, 1])).unwrap();
        assert_eq!(fl(&rs, &mid).unwrap().roots(), set(&[2]));
        assert_eq!(cl(&rs, &mid).unwrap().roots(), set(&[0, 1]));

        let r2 = &enumerate_regions(&rs, 2).unwrap()[0];
        assert_eq!(cl(&rs, r2), Err(Error::RequiresK1(2)));
    }

    #[test]
    fn cl_and_fl_are_poset_maps() {
        for label in ["A3", "B3", "G2"] {
            let rs = RootSystem::build(label).unwrap();
            for i in ideals(&rs) {
                let r = region_of_ideal(&rs, i).unwrap();
                assert_eq!(cl(&rs, &r).unwrap().roots(), rs.maximal_elements(i));
                assert_eq!(fl(&rs, &r).unwrap().roots(), rs.minimal_elements(rs.all().difference(i)));
            }
        }
    }

    #[test]
    fn theorem_on_small_systems() {
        for label in ["A2", "B2", "A3", "G2"] {
            let rs = RootSystem::build(label).unwrap();
            let index = ClIndex::new(&rs).unwrap();
            let all = ideals(&rs);
            let images: BTreeSet<u128> = all
                .iter()
                .map(|&i| pan_via_regions(&rs, &index, i).unwrap().bits())
                .collect();
            assert_eq!(images.len(), all.len());
        }
    }

    #[test]
    fn orbits() {
        let rs = RootSystem::build("A1").unwrap();
        assert_eq!(pan_orbits(&rs), vec![vec![rs.all(), RootSet::EMPTY]]);
        let rs = RootSystem::build("B2").unwrap();
        let orbits = pan_orbits(&rs);
        assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), 6);
        let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn antichain_validation() {
        let rs = RootSystem::build("B2").unwrap();
        assert!(Antichain::new(&rs, set(&[0, 1])).is_some());
        assert!(Antichain::new(&rs, set(&[0, 2])).is_none());
        assert_eq!(Antichain::new(&rs, set(&[2])).unwrap().ideal(&rs), set(&[0, 1, 2]));
    }
}
