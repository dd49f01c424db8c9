//! Exact alcove geometry of the affine Coxeter arrangement.
//!
//! An [`Alcove`] carries a rational interior point (the anchor) together with
//! its coordinate vector `r(A, alpha)`, the integer with
//! `r - 1 < <x, alpha> < r` on `A`. The anchor is authoritative and the vector
//! is re-derived from it after every reflection.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::chains::{FilterChain, IdealChain, Level};
use crate::error::{Error, Result};
use crate::root_system::{Point, Rational, RootId, RootSystem};

/// The hyperplane `H_alpha^level = {x : <x, alpha> = level}` with `level >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub root: RootId,
    pub level: u32,
}

impl Hyperplane {
    pub fn new(root: RootId, level: u32) -> Hyperplane {
        Hyperplane { root, level }
    }
}

/// Which side of a wall the alcove lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// The alcove lies above the wall (`<x, alpha> > level`).
    Above,
    /// The alcove lies below the wall (`<x, alpha> < level`).
    Below,
}

/// A facet-supporting hyperplane of an alcove. The level may be `0` (a wall
/// of the dominant chamber) or negative for non-dominant alcoves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    pub root: RootId,
    pub level: i64,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alcove {
    anchor: Point,
    rvec: Vec<i64>,
}

impl Alcove {
    /// Builds an alcove around `anchor`, which must avoid every hyperplane.
    pub fn from_anchor(rs: &RootSystem, anchor: Point) -> Alcove {
        let rvec = rvec_of(rs, &anchor);
        Alcove { anchor, rvec }
    }

    pub fn anchor(&self) -> &Point {
        &self.anchor
    }

    /// `r(A, alpha)` for every positive root, indexed by root.
    pub fn rvec(&self) -> &[i64] {
        &self.rvec
    }

    pub fn r(&self, a: RootId) -> i64 {
        self.rvec[a.0]
    }

    pub fn is_dominant(&self) -> bool {
        self.rvec.iter().all(|&r| r >= 1)
    }

    /// Re-derives the coordinate vector from the anchor and compares.
    pub fn is_coherent(&self, rs: &RootSystem) -> bool {
        rs.root_ids().all(|a| {
            let p = rs.pairing(&self.anchor, a);
            !p.is_integer() && p.ceil().to_integer() == self.rvec[a.0]
        })
    }
}

fn rvec_of(rs: &RootSystem, x: &Point) -> Vec<i64> {
    rs.root_ids()
        .map(|a| {
            let p = rs.pairing(x, a);
            assert!(!p.is_integer(), "anchor lies on a hyperplane");
            p.ceil().to_integer()
        })
        .collect()
}

/// `A∘`, anchored at `<x, alpha_i> = 1/h` with `h` the Coxeter number of the
/// factor containing `alpha_i`.
pub fn fundamental_alcove(rs: &RootSystem) -> Alcove {
    let h = rs.coxeter_numbers();
    let coords = (0..rs.rank())
        .map(|i| Rational::new(1, h[rs.factor_of_simple(i)] as i64))
        .collect();
    Alcove { anchor: Point { coords }, rvec: vec![1; rs.num_positive_roots()] }
}

/// Shi's criterion: `r_a + r_b - 1 <= r_{a+b} <= r_a + r_b` for every triple.
pub fn shi_valid(rs: &RootSystem, rvec: &[i64]) -> bool {
    rvec.len() == rs.num_positive_roots()
        && rs.root_ids().all(|a| {
            rs.sum_pairs(a).iter().all(|&(b, c)| triple_ok(rvec[a.0], rvec[b.0], rvec[c.0]))
        })
}

#[inline]
fn triple_ok(sum: i64, x: i64, y: i64) -> bool {
    x + y - 1 <= sum && sum <= x + y
}

/// Whether `rvec` with entry `a` replaced by `value` still satisfies Shi's
/// criterion, assuming `rvec` itself does. Only triples through `a` are
/// checked.
fn flip_valid(rs: &RootSystem, rvec: &[i64], a: RootId, value: i64) -> bool {
    let at = |x: RootId| if x == a { value } else { rvec[x.0] };
    rs.sum_pairs(a).iter().all(|&(b, c)| triple_ok(value, at(b), at(c)))
        && rs.root_ids().all(|b| match rs.add(a, b) {
            Some(s) => triple_ok(at(s), value, at(b)),
            None => true,
        })
}

/// Reflection through the affine hyperplane `<x, root> = level`.
pub fn reflect(rs: &RootSystem, alcove: &Alcove, root: RootId, level: i64) -> Alcove {
    let shift = rs.pairing(&alcove.anchor, root) - Rational::from_integer(level);
    let coroot = rs.coroot_on_simple(root);
    let coords = alcove
        .anchor
        .coords
        .iter()
        .zip(coroot)
        .map(|(x, &c)| x - shift * c)
        .collect();
    Alcove::from_anchor(rs, Point { coords })
}

/// Number of affine hyperplanes separating two alcoves.
pub fn separation(a: &Alcove, b: &Alcove) -> u64 {
    a.rvec.iter().zip(&b.rvec).map(|(x, y)| x.abs_diff(*y)).sum()
}

/// Realizes a Shi-valid vector as an alcove by walking a gallery from `A∘`.
///
/// Each step crosses the wall of the current alcove that separates it from
/// the target, taking the smallest root index when several do. Returns the
/// alcove and the crossed hyperplanes in order.
pub fn gallery_walk(rs: &RootSystem, target: &[i64]) -> Result<(Alcove, Vec<(RootId, i64)>)> {
    if target.len() != rs.num_positive_roots() {
        return Err(Error::LengthMismatch { expected: rs.num_positive_roots(), found: target.len() });
    }
    if !shi_valid(rs, target) {
        return Err(Error::ShiInvalid);
    }
    let mut cur = fundamental_alcove(rs);
    let mut path = Vec::new();
    let mut dist: u64 = cur.rvec.iter().zip(target).map(|(x, y)| x.abs_diff(*y)).sum();
    while dist > 0 {
        let step = rs.root_ids().find_map(|a| {
            let (r, t) = (cur.rvec[a.0], target[a.0]);
            let (level, flipped) = match t.cmp(&r) {
                core::cmp::Ordering::Greater => (r, r + 1),
                core::cmp::Ordering::Less => (r - 1, r - 1),
                core::cmp::Ordering::Equal => return None,
            };
            flip_valid(rs, &cur.rvec, a, flipped).then_some((a, level))
        });
        let (a, level) = step.expect("no separating wall between distinct alcoves");
        cur = reflect(rs, &cur, a, level);
        let next: u64 = cur.rvec.iter().zip(target).map(|(x, y)| x.abs_diff(*y)).sum();
        assert_eq!(next + 1, dist, "gallery step did not reduce separation by one");
        dist = next;
        path.push((a, level));
    }
    Ok((cur, path))
}

/// The alcove with coordinate vector `rvec`.
pub fn alcove_from_rvec(rs: &RootSystem, rvec: &[i64]) -> Result<Alcove> {
    gallery_walk(rs, rvec).map(|(a, _)| a)
}

/// The alcove with `r(A, alpha) = k_alpha + 1` of a geometric filter chain.
pub fn minimal_alcove(rs: &RootSystem, chain: &FilterChain) -> Result<Alcove> {
    if !chain.is_geometric(rs) {
        return Err(Error::NotGeometric);
    }
    let rvec: Vec<i64> = chain.k_values(rs).into_iter().map(|k| k as i64 + 1).collect();
    assert!(shi_valid(rs, &rvec), "minimal alcove vector violates Shi's criterion");
    alcove_from_rvec(rs, &rvec)
}

/// The alcove with `r(B, alpha) = r_alpha` of a positive geometric ideal
/// chain.
pub fn maximal_alcove(rs: &RootSystem, chain: &IdealChain) -> Result<Alcove> {
    if !chain.is_geometric(rs) {
        return Err(Error::NotGeometric);
    }
    if !chain.is_positive(rs) {
        return Err(Error::NotPositive);
    }
    let rvec: Vec<i64> = chain
        .r_values(rs)
        .into_iter()
        .map(|r| match r {
            Level::Finite(v) => v as i64,
            Level::Infinity => unreachable!("positive chain has finite r values"),
        })
        .collect();
    assert!(shi_valid(rs, &rvec), "maximal alcove vector violates Shi's criterion");
    alcove_from_rvec(rs, &rvec)
}

/// The maximal alcove of the extended chain `underline(chain)`.
pub fn pseudomaximal_alcove(rs: &RootSystem, chain: &IdealChain) -> Result<Alcove> {
    if !chain.is_geometric(rs) {
        return Err(Error::NotGeometric);
    }
    maximal_alcove(rs, &chain.underline(rs))
}

/// All walls of an alcove, sorted by root then level.
///
/// `H_alpha^r` bounds a facet exactly when flipping `r(A, alpha)` across it
/// gives another Shi-valid vector, i.e. the neighbouring alcove exists.
pub fn walls(rs: &RootSystem, alcove: &Alcove) -> Vec<Wall> {
    let mut out = Vec::new();
    for a in rs.root_ids() {
        let r = alcove.rvec[a.0];
        if flip_valid(rs, &alcove.rvec, a, r - 1) {
            out.push(Wall { root: a, level: r - 1, side: Side::Above });
        }
        if flip_valid(rs, &alcove.rvec, a, r + 1) {
            out.push(Wall { root: a, level: r, side: Side::Below });
        }
    }
    assert_eq!(out.len(), rs.rank() + rs.num_factors(), "alcove facet count");
    out
}

/// Walls of a dominant alcove that separate it from the origin.
pub fn alcove_floors(rs: &RootSystem, alcove: &Alcove) -> Result<Vec<Hyperplane>> {
    if !alcove.is_dominant() {
        return Err(Error::NotDominant);
    }
    Ok(walls(rs, alcove)
        .into_iter()
        .filter(|w| w.side == Side::Above && w.level >= 1)
        .map(|w| Hyperplane::new(w.root, w.level as u32))
        .collect())
}

/// Walls of a dominant alcove that have the origin on the alcove's side.
pub fn alcove_ceilings(rs: &RootSystem, alcove: &Alcove) -> Result<Vec<Hyperplane>> {
    if !alcove.is_dominant() {
        return Err(Error::NotDominant);
    }
    Ok(walls(rs, alcove)
        .into_iter()
        .filter(|w| w.side == Side::Below)
        .map(|w| Hyperplane::new(w.root, w.level as u32))
        .collect())
}

/// Whether `<x, root>` is strictly on the given side of `level`.
pub(crate) fn strictly(rs: &RootSystem, x: &Point, root: RootId, level: i64, side: Side) -> bool {
    let d = rs.pairing(x, root) - Rational::from_integer(level);
    match side {
        Side::Above => d > Rational::zero(),
        Side::Below => d < Rational::zero(),
    }
}
