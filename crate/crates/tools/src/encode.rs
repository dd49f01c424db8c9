//! JSON and TSV encodings of roots, hyperplanes, chains, alcoves and regions.
//!
//! A root is written as its array of simple-root coefficients. A hyperplane
//! `H_alpha^r` is the pair `[coeffs, r]`. Rationals are strings `"p/q"` (or
//! `"p"` when integral).

use catalan_core::alcoves::{Alcove, Hyperplane};
use catalan_core::bijection::HyperplaneSet;
use catalan_core::chains::FilterChain;
use catalan_core::regions::Region;
use catalan_core::{RootId, RootSet, RootSystem};
use serde_json::{json, Value};

pub fn root(rs: &RootSystem, a: RootId) -> Value {
    json!(rs.coeffs(a))
}

pub fn root_set(rs: &RootSystem, s: RootSet) -> Value {
    Value::Array(s.iter().map(|a| root(rs, a)).collect())
}

pub fn hyperplanes(rs: &RootSystem, hs: &[Hyperplane]) -> Value {
    Value::Array(hs.iter().map(|h| json!([root(rs, h.root), h.level])).collect())
}

/// The filters `J_1, .., J_k`, each as an array of roots.
pub fn chain(rs: &RootSystem, c: &FilterChain) -> Value {
    Value::Array(c.filters().iter().map(|&j| root_set(rs, j)).collect())
}

pub fn alcove(rs: &RootSystem, a: &Alcove) -> Value {
    json!({
        "anchor": a.anchor().coords.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "rvec": rs.root_ids().map(|b| json!([root(rs, b), a.r(b)])).collect::<Vec<_>>(),
    })
}

/// Field order of region records, shared by JSON and TSV.
pub const REGION_FIELDS: [&str; 6] = ["key", "bounded", "floors", "ceilings", "minimal_alcove", "pseudomaximal_alcove"];

pub fn region(rs: &RootSystem, r: &Region) -> Value {
    json!({
        "key": chain(rs, r.key()),
        "bounded": r.is_bounded(rs),
        "floors": hyperplanes(rs, r.floors()),
        "ceilings": hyperplanes(rs, r.ceilings()),
        "minimal_alcove": alcove(rs, &r.minimal_alcove(rs)),
        "pseudomaximal_alcove": alcove(rs, &r.pseudomaximal_alcove(rs)),
    })
}

/// One TSV row per record: each cell holds the compact JSON of one field.
pub fn tsv(fields: &[&str], records: &[Value]) -> String {
    let mut out = fields.join("\t");
    out.push('\n');
    for r in records {
        let cells: Vec<String> = fields.iter().map(|f| r[*f].to_string()).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

/// Reads back the output of [`tsv`]. Lines starting with `#` are skipped.
pub fn parse_tsv(text: &str) -> Result<Vec<Value>, String> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<&str> = lines.next().ok_or("empty table")?.split('\t').collect();
    lines
        .map(|line| {
            let cells: Vec<&str> = line.split('\t').collect();
            if cells.len() != header.len() {
                return Err(format!("expected {} cells, found {}", header.len(), cells.len()));
            }
            let mut obj = serde_json::Map::new();
            for (h, c) in header.iter().zip(cells) {
                obj.insert(h.to_string(), serde_json::from_str(c).map_err(|e| e.to_string())?);
            }
            Ok(Value::Object(obj))
        })
        .collect()
}

/// Parses `"0,1:1;2,1:2"`: coefficient vectors and levels, `;`-separated.
pub fn parse_m(rs: &RootSystem, s: &str, k: u32) -> Result<HyperplaneSet, String> {
    let mut items = Vec::new();
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (coeffs, level) = part.split_once(':').ok_or_else(|| format!("missing ':' in {part:?}"))?;
        let coeffs = coeffs
            .split(',')
            .map(|c| c.trim().parse::<i64>().map_err(|e| format!("bad coefficient {c:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let level = level.trim().parse::<u32>().map_err(|e| format!("bad level {level:?}: {e}"))?;
        let a = rs.root_id(&coeffs).map_err(|e| e.to_string())?;
        items.push(Hyperplane::new(a, level));
    }
    HyperplaneSet::new(items, k).map_err(|e| e.to_string())
}

pub fn format_m(rs: &RootSystem, m: &HyperplaneSet) -> String {
    let parts: Vec<String> = m
        .items()
        .iter()
        .map(|h| {
            let c: Vec<String> = rs.coeffs(h.root).iter().map(i64::to_string).collect();
            format!("{}:{}", c.join(","), h.level)
        })
        .collect();
    parts.join(";")
}

/// `H(a1+a2, 1)` style rendering for text output.
pub fn hyperplane_text(rs: &RootSystem, h: &Hyperplane) -> String {
    format!("H({}, {})", rs.root_name(h.root), h.level)
}
