use catalan_core::alcoves::{alcove_from_rvec, maximal_alcove};
use catalan_core::chains::{enumerate_geometric_filter_chains, IdealChain, Level};
use catalan_core::regions::{distribution, enumerate_regions, Stat};
use catalan_core::verify::{fuss_catalan, positive_fuss_catalan};
use catalan_core::{RootSet, RootSystem};
use catalan_oracles as oracle;

#[test]
fn region_counts_match_product_formula() {
    let cases = [
        ("A1", 1),
        ("A1", 2),
        ("A1", 3),
        ("A2", 1),
        ("A2", 2),
        ("A3", 1),
        ("B2", 1),
        ("B2", 2),
        ("B2", 3),
        ("B3", 1),
        ("C3", 1),
        ("G2", 1),
        ("G2", 2),
        ("D4", 1),
        ("A1xA1", 2),
        ("A2xA1", 1),
    ];
    for (label, k) in cases {
        let rs = RootSystem::build(label).unwrap();
        let regions = enumerate_regions(&rs, k).unwrap();
        assert_eq!(regions.len() as u128, oracle::fuss_catalan(&rs, k), "{label} k={k}");
        let bounded = regions.iter().filter(|r| r.is_bounded(&rs)).count() as u128;
        assert_eq!(bounded, oracle::positive_fuss_catalan(&rs, k), "{label} k={k}");
    }
}

#[test]
fn exponent_table_agrees_with_height_partition() {
    for label in ["A1", "A4", "B2", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2", "A2xB3"] {
        let rs = RootSystem::build(label).unwrap();
        let table: Vec<Vec<u32>> = rs.label().0.iter().map(|t| t.exponents()).collect();
        assert_eq!(table, oracle::exponents_from_heights(&rs), "{label}");
        for k in 1..=3 {
            assert_eq!(fuss_catalan(&rs, k) as u128, oracle::fuss_catalan(&rs, k));
            assert_eq!(positive_fuss_catalan(&rs, k) as u128, oracle::positive_fuss_catalan(&rs, k));
        }
    }
}

#[test]
fn k1_regions_are_antichains() {
    for label in ["A2", "A3", "B2", "B3", "G2", "D4"] {
        let rs = RootSystem::build(label).unwrap();
        let regions = enumerate_regions(&rs, 1).unwrap();
        assert_eq!(regions.len(), oracle::antichain_count(&rs), "{label}");
        // regions with l floors of height 1 versus antichains of size l
        let fl = distribution(&rs, &regions, Stat::Floors, 1).unwrap();
        assert_eq!(fl, oracle::antichain_sizes(&rs), "{label}");
    }
}

#[test]
fn enumeration_matches_brute_force_chains() {
    for (label, k) in [("A2", 2), ("B2", 2), ("G2", 2), ("A3", 1), ("A1xA1", 3)] {
        let rs = RootSystem::build(label).unwrap();
        let mut ours: Vec<Vec<u128>> = enumerate_geometric_filter_chains(&rs, k)
            .unwrap()
            .iter()
            .map(|c| c.complement().ideals().iter().map(|i| i.bits()).collect())
            .collect();
        let mut theirs: Vec<Vec<u128>> = oracle::geometric_ideal_chains(&rs, k)
            .iter()
            .map(|c| c.iter().map(|i| i.bits()).collect())
            .collect();
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs, "{label} k={k}");
        let bounded = enumerate_regions(&rs, k).unwrap().iter().filter(|r| r.is_bounded(&rs)).count();
        assert_eq!(bounded, oracle::positive_chain_count(&rs, k));
    }
}

#[test]
fn dp_statistics_match_decompositions() {
    for (label, k) in [("A2", 1), ("A2", 2), ("B2", 1), ("B2", 2), ("G2", 1), ("G2", 2)] {
        let rs = RootSystem::build(label).unwrap();
        for chain in enumerate_geometric_filter_chains(&rs, k).unwrap() {
            let ideals = chain.complement();
            let rv = ideals.r_values(&rs);
            let kv = chain.k_values(&rs);
            for a in rs.root_ids() {
                let expected = oracle::r_alpha(&rs, ideals.ideals(), a).map_or(Level::Infinity, Level::Finite);
                assert_eq!(rv[a.0], expected, "{label} {chain:?} {a:?}");
                assert_eq!(kv[a.0], oracle::k_alpha(&rs, chain.filters(), a), "{label} {chain:?} {a:?}");
            }
        }
    }
}

#[test]
fn maximal_alcove_of_positive_chain_realizes_r_values() {
    let rs = RootSystem::build("B2").unwrap();
    for chain in oracle::geometric_ideal_chains(&rs, 2) {
        let chain = IdealChain::new(&rs, chain).unwrap();
        if !chain.is_positive(&rs) {
            continue;
        }
        let rv: Vec<i64> = chain.r_values(&rs).iter().map(|l| l.finite().unwrap() as i64).collect();
        let max = maximal_alcove(&rs, &chain).unwrap();
        assert_eq!(max.rvec(), &rv[..]);
        assert_eq!(alcove_from_rvec(&rs, &rv).unwrap(), max);
    }
}

#[test]
fn ideal_enumerations_agree() {
    for label in ["A3", "B3", "C3", "D4"] {
        let rs = RootSystem::build(label).unwrap();
        let mut a: Vec<u128> = catalan_core::chains::order_ideals(&rs).into_iter().map(RootSet::bits).collect();
        let mut b: Vec<u128> = oracle::ideals(&rs).into_iter().map(RootSet::bits).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{label}");
    }
}
