//! The full property suite for one `(root system, k)` pair.
//!
//! Every check compares two independent routes to the same data and records
//! disagreements instead of panicking, so a report can be printed even when
//! something is wrong.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::alcoves::{self, Hyperplane};
use crate::bijection::{verify_theorem_bij, BijEntry, HyperplaneSet};
use crate::error::{Error, Result};
use crate::panyushev::{self, ClIndex};
use crate::regions::{self, enumerate_regions, Region, Stat};
use crate::root_system::RootSystem;

/// At most this many failures are recorded per check.
const MAX_FAILURES: usize = 20;

/// `Cat^(k)`: product of `(kh + e + 1) / (e + 1)` over the exponents of every
/// factor.
pub fn fuss_catalan(rs: &RootSystem, k: u32) -> u64 {
    product(rs, k, 1)
}

/// The positive variant, product of `(kh + e - 1) / (e + 1)`, which counts
/// bounded regions.
pub fn positive_fuss_catalan(rs: &RootSystem, k: u32) -> u64 {
    product(rs, k, -1)
}

fn product(rs: &RootSystem, k: u32, shift: i128) -> u64 {
    let mut acc = Ratio::<i128>::from_integer(1);
    for t in &rs.label().0 {
        let exps = t.exponents();
        let h = i128::from(*exps.last().unwrap()) + 1;
        for e in exps {
            let e = i128::from(e);
            acc *= Ratio::new(i128::from(k) * h + e + shift, e + 1);
        }
    }
    assert!(acc.is_integer());
    *acc.numer() as u64
}

/// Knobs for [`verify`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Largest hyperplane set size in the bijection sweep; the rank when
    /// unset.
    pub m_max: Option<usize>,
    /// Drop one ceiling from one region before checking, to exercise the
    /// failure path.
    pub inject_fault: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub label: String,
    pub k: u32,
    pub regions: usize,
    pub bounded: usize,
    pub checks: Vec<CheckResult>,
    pub bij: Vec<BijEntry>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

struct Collector {
    checks: Vec<CheckResult>,
}

impl Collector {
    fn check(&mut self, name: &'static str, f: impl FnOnce(&mut dyn FnMut(String))) {
        let mut failures = Vec::new();
        let mut fail = |msg: String| {
            if failures.len() < MAX_FAILURES {
                failures.push(msg);
            }
        };
        f(&mut fail);
        self.checks.push(CheckResult { name, failures });
    }
}

fn restrict(walls: Vec<Hyperplane>, k: u32) -> Vec<Hyperplane> {
    walls.into_iter().filter(|h| h.level <= k).collect()
}

/// Runs every check on the regions of `rs` for `k`.
pub fn verify(rs: &RootSystem, k: u32, opts: Options) -> Result<Report> {
    if k == 0 {
        return Err(Error::InvalidK(0));
    }
    let mut regions = enumerate_regions(rs, k)?;
    if opts.inject_fault {
        if let Some(i) = regions.iter().position(|r| !r.ceilings().is_empty()) {
            let mut ceilings = regions[i].ceilings().to_vec();
            ceilings.pop();
            regions[i] = regions[i].clone().with_ceilings(ceilings);
        }
    }
    let n = rs.rank();
    let bounded = regions.iter().filter(|r| r.is_bounded(rs)).count();
    let mut c = Collector { checks: Vec::new() };

    c.check("count", |fail| {
        let expected = fuss_catalan(rs, k);
        if regions.len() as u64 != expected {
            fail(format!("{} regions, product formula gives {expected}", regions.len()));
        }
        let positive = positive_fuss_catalan(rs, k);
        if bounded as u64 != positive {
            fail(format!("{bounded} bounded regions, positive product formula gives {positive}"));
        }
    });

    c.check("alcoves", |fail| {
        for r in &regions {
            let min = r.minimal_alcove(rs);
            let pmax = r.pseudomaximal_alcove(rs);
            for (what, a) in [("minimal", &min), ("pseudomaximal", &pmax)] {
                if !alcoves::shi_valid(rs, a.rvec()) || !a.is_coherent(rs) {
                    fail(format!("{what} alcove {:?} of {:?} is not a valid alcove", a.rvec(), r.key()));
                }
                if !r.contains(a) {
                    fail(format!("{what} alcove {:?} lies outside {:?}", a.rvec(), r.key()));
                }
            }
            if r.is_bounded(rs) {
                match alcoves::maximal_alcove(rs, r.ideal_key()) {
                    Ok(max) if max == pmax => {}
                    Ok(max) => fail(format!("maximal {:?} != pseudomaximal {:?}", max.rvec(), pmax.rvec())),
                    Err(e) => fail(format!("maximal alcove of bounded region failed: {e}")),
                }
            }
        }
    });

    c.check("ind=ceil", |fail| {
        for r in &regions {
            let min = r.minimal_alcove(rs);
            let pmax = r.pseudomaximal_alcove(rs);
            match alcoves::alcove_floors(rs, &min) {
                Ok(f) if restrict(f.clone(), k) == r.floors() => {}
                Ok(f) => fail(format!("floors {:?} vs minimal-alcove walls {:?}", r.floors(), f)),
                Err(e) => fail(format!("{e}")),
            }
            match alcoves::alcove_ceilings(rs, &pmax) {
                Ok(f) if restrict(f.clone(), k) == r.ceilings() => {}
                Ok(f) => fail(format!("ceilings {:?} vs pseudomaximal-alcove walls {:?}", r.ceilings(), f)),
                Err(e) => fail(format!("{e}")),
            }
            let under = r.ideal_key().underline(rs);
            for (a, level) in r.ideal_key().indecomposables(rs) {
                if !under.is_indecomposable(rs, a, level) {
                    fail(format!("({}, {level}) is not indecomposable in the underlined chain", rs.root_name(a)));
                }
            }
        }
    });

    c.check("arm", |fail| {
        for r in 1..=k {
            let fl = regions::distribution(rs, &regions, Stat::Floors, r);
            let cl = regions::distribution(rs, &regions, Stat::Ceilings, r);
            if fl != cl {
                fail(format!("height {r}: floors {fl:?} ceilings {cl:?}"));
            }
        }
    });

    c.check("sum", |fail| {
        let fl = regions::joint_profile(&regions, Stat::Floors);
        let cl = regions::joint_profile(&regions, Stat::Ceilings);
        if fl != cl {
            fail(format!("floor profile {fl:?} ceiling profile {cl:?}"));
        }
    });

    let bij = verify_theorem_bij(rs, &regions, k, opts.m_max.unwrap_or(n));
    c.check("bij", |fail| {
        for e in bij.iter().filter(|e| !e.passed()) {
            fail(format!("{e:?}"));
        }
        // one more hyperplane than the rank never fits
        let big = HyperplaneSet::all_up_to(rs, k, n + 1);
        for m in big.iter().filter(|m| m.len() == n + 1).take(200) {
            let u = regions::select_u(&regions, m).map(|v| v.len()).unwrap_or(usize::MAX);
            let l = regions::select_l(&regions, m).map(|v| v.len()).unwrap_or(usize::MAX);
            if u != 0 || l != 0 {
                fail(format!("{m:?}: |U| = {u}, |L| = {l}"));
            }
        }
    });

    if k == 1 {
        c.check("pan", |fail| match ClIndex::new(rs) {
            Ok(index) => {
                let all = panyushev::ideals(rs);
                let mut images = BTreeSet::new();
                for &i in &all {
                    let direct = panyushev::pan(rs, i);
                    let routed = panyushev::region_route(rs, &index, i);
                    match (direct, routed) {
                        (Ok(d), Ok(Some(r))) if d == r => {
                            images.insert(d.bits());
                        }
                        (d, r) => fail(format!("ideal {i:?}: direct {d:?}, through regions {r:?}")),
                    }
                }
                if images.len() != all.len() {
                    fail(format!("{} distinct images of {} ideals", images.len(), all.len()));
                }
                check_cl_against(rs, &regions, fail);
            }
            Err(e) => fail(format!("{e}")),
        });
    }

    Ok(Report {
        label: format!("{}", rs.label()),
        k,
        regions: regions.len(),
        bounded,
        checks: c.checks,
        bij,
    })
}

// CL read from the stored ceilings agrees with the maximal elements of I_1.
fn check_cl_against(rs: &RootSystem, regions: &[Region], fail: &mut dyn FnMut(String)) {
    for r in regions {
        match panyushev::cl(rs, r) {
            Ok(a) if a.roots() == rs.maximal_elements(r.ideal_key().top()) => {}
            other => fail(format!("CL of {:?} is {other:?}", r.key())),
        }
    }
}
