use catalan_core::alcoves::{self, fundamental_alcove, gallery_walk, reflect, separation, shi_valid, Alcove};
use catalan_core::bijection::{psi_map, theta_map, HyperplaneSet};
use catalan_core::panyushev;
use catalan_core::regions::{distribution, enumerate_regions, joint_profile, region_from_alcove, Region, Stat};
use catalan_core::{Point, Rational, RootId, RootSet, RootSystem};
use proptest::prelude::*;
use proptest::sample::{select, Index};

const SYSTEMS: [&str; 7] = ["A1", "A2", "B2", "G2", "A3", "C3", "A1xA1"];

fn system() -> impl Strategy<Value = RootSystem> {
    select(&SYSTEMS[..]).prop_map(|l| RootSystem::build(l).unwrap())
}

fn walk(rs: &RootSystem, steps: &[(Index, i64)]) -> Alcove {
    let mut a = fundamental_alcove(rs);
    for (i, level) in steps {
        a = reflect(rs, &a, RootId(i.index(rs.num_positive_roots())), *level);
    }
    a
}

fn subset<T: Copy>(items: &[T], mask: u32) -> Vec<T> {
    items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, h)| *h).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_keep_alcoves_valid(rs in system(), steps in prop::collection::vec((any::<Index>(), -3i64..4), 0..12)) {
        let a = walk(&rs, &steps);
        prop_assert!(shi_valid(&rs, a.rvec()));
        prop_assert!(a.is_coherent(&rs));
        let (b, path) = gallery_walk(&rs, a.rvec()).unwrap();
        prop_assert_eq!(&b, &a);
        prop_assert_eq!(path.len() as u64, separation(&fundamental_alcove(&rs), &a));
    }

    #[test]
    fn reflection_is_an_involution(rs in system(), steps in prop::collection::vec((any::<Index>(), -3i64..4), 0..8), i in any::<Index>(), level in -3i64..4) {
        let a = walk(&rs, &steps);
        let root = RootId(i.index(rs.num_positive_roots()));
        let b = reflect(&rs, &a, root, level);
        prop_assert_eq!(reflect(&rs, &b, root, level), a.clone());
        prop_assert_eq!(rs.pairing(b.anchor(), root), Rational::from_integer(2 * level) - rs.pairing(a.anchor(), root));
    }

    #[test]
    fn pairing_is_additive(rs in system(), coords in prop::collection::vec((-20i64..20, 1i64..7), 3)) {
        let x = Point { coords: coords.iter().take(rs.rank()).map(|&(p, q)| Rational::new(p, q)).chain(core::iter::repeat(Rational::from_integer(0))).take(rs.rank()).collect() };
        for a in rs.root_ids() {
            for b in rs.root_ids() {
                if let Some(c) = rs.add(a, b) {
                    prop_assert_eq!(rs.pairing(&x, c), rs.pairing(&x, a) + rs.pairing(&x, b));
                }
            }
        }
    }

    #[test]
    fn alcoves_of_a_region_round_trip(rs in system(), k in 1u32..3, i in any::<Index>()) {
        let regions = enumerate_regions(&rs, k).unwrap();
        let r = &regions[i.index(regions.len())];
        let min = r.minimal_alcove(&rs);
        let pmax = r.pseudomaximal_alcove(&rs);
        prop_assert_eq!(&region_from_alcove(&rs, &min, k).unwrap(), r);
        prop_assert_eq!(&region_from_alcove(&rs, &pmax, k).unwrap(), r);
        // every alcove of the region lies at or above the minimal one
        for a in rs.root_ids() {
            prop_assert!(min.r(a) <= pmax.r(a));
        }
    }

    #[test]
    fn theta_and_psi_invert(rs in system(), k in 1u32..3, i in any::<Index>(), mask in any::<u32>()) {
        let regions = enumerate_regions(&rs, k).unwrap();
        let r = &regions[i.index(regions.len())];
        let m = HyperplaneSet::new(subset(r.floors(), mask), k).unwrap();
        let image = theta_map(&rs, r, &m).unwrap();
        prop_assert!(regions.contains(&image));
        prop_assert_eq!(&psi_map(&rs, &image, &m).unwrap(), r);

        let m = HyperplaneSet::new(subset(r.ceilings(), mask), k).unwrap();
        let image = psi_map(&rs, r, &m).unwrap();
        prop_assert_eq!(&theta_map(&rs, &image, &m).unwrap(), r);
    }

    #[test]
    fn underline_keeps_indecomposables(rs in system(), k in 1u32..4, i in any::<Index>()) {
        prop_assume!(rs.num_positive_roots() * k as usize <= 18);
        let regions = enumerate_regions(&rs, k).unwrap();
        let chain = regions[i.index(regions.len())].ideal_key().clone();
        let under = chain.underline(&rs);
        for (a, level) in chain.indecomposables(&rs) {
            prop_assert!(under.is_indecomposable(&rs, a, level));
        }
    }

    #[test]
    fn rootset_algebra(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (RootSet::from_bits(a as u128), RootSet::from_bits(b as u128));
        prop_assert_eq!(x.union(y).len() + x.intersection(y).len(), x.len() + y.len());
        prop_assert!(x.difference(y).is_subset(x));
        prop_assert_eq!(x.iter().collect::<RootSet>(), x);
    }
}

#[test]
fn joint_profile_marginals_are_distributions() {
    for (label, k) in [("B2", 2), ("A2", 3), ("G2", 2)] {
        let rs = RootSystem::build(label).unwrap();
        let regions: Vec<Region> = enumerate_regions(&rs, k).unwrap();
        for stat in [Stat::Floors, Stat::Ceilings] {
            let joint = joint_profile(&regions, stat);
            for r in 1..=k {
                let mut marginal = vec![0u64; rs.rank() + 1];
                for (profile, n) in &joint {
                    marginal[profile[r as usize - 1] as usize] += n;
                }
                assert_eq!(marginal, distribution(&rs, &regions, stat, r).unwrap());
            }
        }
    }
}

#[test]
fn floors_and_ceilings_are_alcove_walls() {
    for (label, k) in [("B3", 1), ("C3", 1), ("A3", 2), ("G2", 3)] {
        let rs = RootSystem::build(label).unwrap();
        for r in enumerate_regions(&rs, k).unwrap() {
            let f: Vec<_> = alcoves::alcove_floors(&rs, &r.minimal_alcove(&rs)).unwrap().into_iter().filter(|h| h.level <= k).collect();
            let c: Vec<_> = alcoves::alcove_ceilings(&rs, &r.pseudomaximal_alcove(&rs)).unwrap().into_iter().filter(|h| h.level <= k).collect();
            assert_eq!(f, r.floors(), "{label} {:?}", r.key());
            assert_eq!(c, r.ceilings(), "{label} {:?}", r.key());
        }
    }
}

#[test]
fn pan_permutes_ideals() {
    for label in ["A2", "B2", "A3", "G2", "B3"] {
        let rs = RootSystem::build(label).unwrap();
        let all = panyushev::ideals(&rs);
        let mut images: Vec<u128> = all.iter().map(|&i| panyushev::pan(&rs, i).unwrap().bits()).collect();
        let mut bits: Vec<u128> = all.iter().map(|i| i.bits()).collect();
        images.sort();
        bits.sort();
        assert_eq!(images, bits, "{label}");
        let orbits = panyushev::pan_orbits(&rs);
        assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), all.len());
    }
}
