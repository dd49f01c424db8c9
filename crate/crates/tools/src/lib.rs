//! Command-line front end for `catalan-core`.

pub mod encode;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use catalan_core::bijection::{psi_map, theta_map, BijEntry};
use catalan_core::panyushev;
use catalan_core::regions::{self, enumerate_regions, Stat};
use catalan_core::verify::{self, Report};
use catalan_core::{RootSet, RootSystem};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Largest number of positive roots accepted without `--force`.
pub const MAX_ROOTS: usize = 24;
/// Largest `k` accepted without `--force`.
pub const MAX_K: u32 = 3;

#[derive(Parser, Debug)]
#[command(name = "catalan", version, about = "Dominant regions of k-Catalan arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the positive roots with heights and upper covers.
    Roots {
        #[command(flatten)]
        common: Common,
    },
    /// List every dominant region with its floors, ceilings and alcoves.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        scale: Scale,
    },
    /// Histogram of regions by number of floors or ceilings of one height.
    Distribution {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        scale: Scale,
        #[arg(long, value_enum, default_value_t = StatArg::Floors)]
        stat: StatArg,
        /// Hyperplane height r, 1 <= r <= k.
        #[arg(long)]
        height: u32,
        /// Print floors and ceilings side by side.
        #[arg(long)]
        both: bool,
    },
    /// Run the full property suite; exits 1 on any failure.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        scale: Scale,
        /// Largest hyperplane set size in the bijection sweep (default: rank).
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Apply the bijection from U(M) to L(M).
    Theta {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        scale: Scale,
        /// Hyperplanes as "coeffs:level;...", e.g. "0,1:1;2,1:2".
        #[arg(long = "M", allow_hyphen_values = true)]
        m: String,
    },
    /// Panyushev complement on order ideals (k = 1).
    Panyushev {
        #[command(flatten)]
        common: Common,
        /// List orbits (the default).
        #[arg(long, conflicts_with = "map")]
        orbits: bool,
        /// List the full map instead of orbits.
        #[arg(long)]
        map: bool,
    },
}

#[derive(Args, Debug)]
pub struct Common {
    /// Cartan type such as B2, G2 or A2xA1.
    #[arg(long = "type")]
    pub label: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct Scale {
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Skip the size guard.
    #[arg(long)]
    pub force: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatArg {
    Floors,
    Ceilings,
}

impl From<StatArg> for Stat {
    fn from(s: StatArg) -> Stat {
        match s {
            StatArg::Floors => Stat::Floors,
            StatArg::Ceilings => Stat::Ceilings,
        }
    }
}

/// Printed output and process exit status.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Outcome {
        Outcome { output, code: 0 }
    }
}

/// Bad input; exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> UsageError {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Outcome, UsageError>;

fn build(label: &str) -> Result<RootSystem, UsageError> {
    RootSystem::build(label).map_err(|e| UsageError(format!("{label}: {e}")))
}

fn guard(rs: &RootSystem, scale: &Scale) -> Result<(), UsageError> {
    if scale.k == 0 {
        return Err(UsageError("k must be at least 1".into()));
    }
    if !scale.force && (rs.num_positive_roots() > MAX_ROOTS || scale.k > MAX_K) {
        return Err(UsageError(format!(
            "{} with k = {} exceeds the size guard (at most {MAX_ROOTS} positive roots and k <= {MAX_K}); pass --force to run anyway",
            rs.label(),
            scale.k
        )));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

pub fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Roots { common } => roots(&common),
        Command::Enumerate { common, scale } => enumerate(&common, &scale),
        Command::Distribution { common, scale, stat, height, both } => distribution(&common, &scale, stat, height, both),
        Command::Verify { common, scale, m_max, inject_fault } => verify_cmd(&common, &scale, m_max, inject_fault),
        Command::Theta { common, scale, m } => theta(&common, &scale, &m),
        Command::Panyushev { common, map, .. } => pan(&common, map),
    }
}

fn roots(common: &Common) -> CmdResult {
    let rs = build(&common.label)?;
    let records: Vec<Value> = rs
        .root_ids()
        .map(|a| {
            json!({
                "root": encode::root(&rs, a),
                "name": rs.root_name(a),
                "height": rs.height(a),
                "covers": rs.upper_covers(a).map(|b| encode::root(&rs, b)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Outcome::ok(match common.format {
        Format::Json => pretty(&Value::Array(records)),
        Format::Tsv => encode::tsv(&["root", "name", "height", "covers"], &records),
        Format::Text => {
            let mut s = String::new();
            for a in rs.root_ids() {
                let covers: Vec<String> = rs.upper_covers(a).map(|b| rs.root_name(b)).collect();
                writeln!(s, "{:>3}  {:<16} height {:<3} covered by {}", a.0, rs.root_name(a), rs.height(a), covers.join(", ")).unwrap();
            }
            s
        }
    }))
}

fn enumerate(common: &Common, scale: &Scale) -> CmdResult {
    let rs = build(&common.label)?;
    guard(&rs, scale)?;
    let regions = enumerate_regions(&rs, scale.k)?;
    let bounded = regions.iter().filter(|r| r.is_bounded(&rs)).count();
    Ok(Outcome::ok(match common.format {
        Format::Json => {
            let records: Vec<Value> = regions.iter().map(|r| encode::region(&rs, r)).collect();
            pretty(&json!({"regions": records, "total": regions.len(), "bounded": bounded}))
        }
        Format::Tsv => {
            let records: Vec<Value> = regions.iter().map(|r| encode::region(&rs, r)).collect();
            let mut s = encode::tsv(&encode::REGION_FIELDS, &records);
            writeln!(s, "# total {} bounded {}", regions.len(), bounded).unwrap();
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (i, r) in regions.iter().enumerate() {
                let fl: Vec<String> = r.floors().iter().map(|h| encode::hyperplane_text(&rs, h)).collect();
                let cl: Vec<String> = r.ceilings().iter().map(|h| encode::hyperplane_text(&rs, h)).collect();
                writeln!(
                    s,
                    "{i:>4}  depth {:?}  {}  floors [{}]  ceilings [{}]",
                    r.key().sort_key(),
                    if r.is_bounded(&rs) { "bounded  " } else { "unbounded" },
                    fl.join(", "),
                    cl.join(", ")
                )
                .unwrap();
            }
            writeln!(s, "total {} bounded {}", regions.len(), bounded).unwrap();
            s
        }
    }))
}

fn distribution(common: &Common, scale: &Scale, stat: StatArg, height: u32, both: bool) -> CmdResult {
    let rs = build(&common.label)?;
    guard(&rs, scale)?;
    let regions = enumerate_regions(&rs, scale.k)?;
    let columns: Vec<(&str, Vec<u64>)> = if both {
        vec![
            ("floors", regions::distribution(&rs, &regions, Stat::Floors, height)?),
            ("ceilings", regions::distribution(&rs, &regions, Stat::Ceilings, height)?),
        ]
    } else {
        let name = match stat {
            StatArg::Floors => "floors",
            StatArg::Ceilings => "ceilings",
        };
        vec![(name, regions::distribution(&rs, &regions, stat.into(), height)?)]
    };
    let verdict = both.then(|| if columns[0].1 == columns[1].1 { "EQUAL" } else { "UNEQUAL" });
    let records: Vec<Value> = (0..=rs.rank())
        .map(|l| {
            let mut obj = serde_json::Map::new();
            obj.insert("l".into(), json!(l));
            for (name, col) in &columns {
                obj.insert((*name).into(), json!(col[l]));
            }
            Value::Object(obj)
        })
        .collect();
    let mut fields = vec!["l"];
    fields.extend(columns.iter().map(|(n, _)| *n));
    Ok(Outcome::ok(match common.format {
        Format::Json => {
            let mut doc = json!({"height": height, "k": scale.k, "rows": records});
            if let Some(v) = verdict {
                doc["verdict"] = json!(v);
            }
            pretty(&doc)
        }
        Format::Tsv => {
            let mut s = encode::tsv(&fields, &records);
            if let Some(v) = verdict {
                writeln!(s, "# {v}").unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!("{}\n", fields.join("\t"));
            for r in &records {
                let cells: Vec<String> = fields.iter().map(|f| r[*f].to_string()).collect();
                s.push_str(&cells.join("\t"));
                s.push('\n');
            }
            if let Some(v) = verdict {
                writeln!(s, "{v}").unwrap();
            }
            s
        }
    }))
}

fn bij_entry(rs: &RootSystem, e: &BijEntry) -> Value {
    json!({
        "M": encode::format_m(rs, &e.m),
        "U": e.u,
        "L": e.l,
        "U_exact": e.u_exact,
        "L_exact": e.l_exact,
        "bijective": e.bijective(),
    })
}

/// The JSON form of a verification report.
pub fn report_json(rs: &RootSystem, report: &Report) -> Value {
    json!({
        "type": report.label,
        "k": report.k,
        "regions": report.regions,
        "bounded": report.bounded,
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed(),
            "failures": c.failures,
        })).collect::<Vec<_>>(),
        "bij": report.bij.iter().map(|e| bij_entry(rs, e)).collect::<Vec<_>>(),
    })
}

fn verify_cmd(common: &Common, scale: &Scale, m_max: Option<usize>, inject_fault: bool) -> CmdResult {
    let rs = build(&common.label)?;
    guard(&rs, scale)?;
    let report = verify::verify(&rs, scale.k, verify::Options { m_max, inject_fault })?;
    let code = if report.passed() { 0 } else { 1 };
    let output = match common.format {
        Format::Json => pretty(&report_json(&rs, &report)),
        Format::Tsv => {
            let records: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"check": c.name, "passed": c.passed(), "failures": c.failures}))
                .collect();
            encode::tsv(&["check", "passed", "failures"], &records)
        }
        Format::Text => {
            let mut s = format!("{} k={}: {} regions, {} bounded\n", report.label, report.k, report.regions, report.bounded);
            for c in &report.checks {
                writeln!(s, "{:<10} {}", c.name, if c.passed() { "ok" } else { "FAILED" }).unwrap();
                for f in &c.failures {
                    writeln!(s, "    {f}").unwrap();
                }
            }
            writeln!(s, "bijection sweep: {} hyperplane sets", report.bij.len()).unwrap();
            writeln!(s, "{}", if report.passed() { "PASS" } else { "FAIL" }).unwrap();
            s
        }
    };
    Ok(Outcome { output, code })
}

fn theta(common: &Common, scale: &Scale, m: &str) -> CmdResult {
    let rs = build(&common.label)?;
    guard(&rs, scale)?;
    let m = encode::parse_m(&rs, m, scale.k).map_err(UsageError)?;
    let regions = enumerate_regions(&rs, scale.k)?;
    let u = regions::select_u(&regions, &m)?;
    let l = regions::select_l(&regions, &m)?;
    let rows = u
        .iter()
        .map(|r| Ok((*r, theta_map(&rs, r, &m)?)))
        .collect::<Result<Vec<_>, catalan_core::Error>>()?;
    let images: BTreeSet<_> = rows.iter().map(|(_, img)| img.key().clone()).collect();
    let bijective = images.len() == l.len()
        && rows.len() == l.len()
        && rows.iter().all(|(r, img)| l.contains(&img) && psi_map(&rs, img, &m).is_ok_and(|back| &back == *r));
    let records: Vec<Value> = rows
        .iter()
        .map(|(r, img)| json!({"from": encode::chain(&rs, r.key()), "to": encode::chain(&rs, img.key())}))
        .collect();
    Ok(Outcome::ok(match common.format {
        Format::Json => pretty(&json!({
            "M": encode::format_m(&rs, &m),
            "U": u.len(),
            "L": l.len(),
            "bijective": bijective,
            "map": records,
        })),
        Format::Tsv => {
            let mut s = encode::tsv(&["from", "to"], &records);
            writeln!(s, "# M {} U {} L {}", encode::format_m(&rs, &m), u.len(), l.len()).unwrap();
            s
        }
        Format::Text => {
            let mut s = format!("M = {{{}}}\n", m.items().iter().map(|h| encode::hyperplane_text(&rs, h)).collect::<Vec<_>>().join(", "));
            for (r, img) in &rows {
                writeln!(s, "{:?} -> {:?}", r.key().sort_key(), img.key().sort_key()).unwrap();
            }
            writeln!(s, "|U| = {}  |L| = {}", u.len(), l.len()).unwrap();
            s
        }
    }))
}

fn pan(common: &Common, map: bool) -> CmdResult {
    let rs = build(&common.label)?;
    let antichain = |i: RootSet| encode::root_set(&rs, rs.maximal_elements(i));
    let text_of = |i: RootSet| {
        let names: Vec<String> = rs.maximal_elements(i).iter().map(|a| rs.root_name(a)).collect();
        format!("{{{}}}", names.join(", "))
    };
    let output = if map {
        let rows: Vec<(RootSet, RootSet)> = panyushev::ideals(&rs)
            .into_iter()
            .map(|i| Ok((i, panyushev::pan(&rs, i)?)))
            .collect::<Result<_, catalan_core::Error>>()?;
        let records: Vec<Value> = rows.iter().map(|&(i, p)| json!({"ideal": antichain(i), "pan": antichain(p)})).collect();
        match common.format {
            Format::Json => pretty(&Value::Array(records)),
            Format::Tsv => encode::tsv(&["ideal", "pan"], &records),
            Format::Text => rows.iter().map(|&(i, p)| format!("{} -> {}\n", text_of(i), text_of(p))).collect(),
        }
    } else {
        let orbits = panyushev::pan_orbits(&rs);
        match common.format {
            Format::Json => pretty(&Value::Array(
                orbits.iter().map(|o| Value::Array(o.iter().map(|&i| antichain(i)).collect())).collect(),
            )),
            Format::Tsv => {
                let records: Vec<Value> = orbits
                    .iter()
                    .map(|o| json!({"size": o.len(), "orbit": o.iter().map(|&i| antichain(i)).collect::<Vec<_>>()}))
                    .collect();
                encode::tsv(&["size", "orbit"], &records)
            }
            Format::Text => orbits
                .iter()
                .map(|o| format!("[{}] {}\n", o.len(), o.iter().map(|&i| text_of(i)).collect::<Vec<_>>().join(" -> ")))
                .collect(),
        }
    };
    Ok(Outcome::ok(output))
}
