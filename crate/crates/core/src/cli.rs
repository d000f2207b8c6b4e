//! Command-line front end: `compute`, `enumerate` and `verify`.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{compute, compute_with, BaseKind, EngineReport, Location, Reading, Underlying};
use crate::error::Error;
use crate::groups::{enumerate_specs, goursat_group, FamilyId, FamilySpec};
use crate::oracle::{compare_reports, oracle_report, verify_spec, Verification};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Environment variable overriding the number of verification workers.
pub const WORKERS_VAR: &str = "ORBISEIF_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "orbiseif",
    version,
    about = "Seifert invariants of Hopf-fibered spherical 3-orbifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of one group.
    Compute(ComputeArgs),
    /// List every group up to an order bound.
    Enumerate(RangeArgs),
    /// Check the closed forms against the oracle for every group up to an order bound.
    Verify(RangeArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Machine-readable output.
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable output (default).
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, short = 'f')]
    pub family: String,
    #[arg(short = 'm')]
    pub m: Option<u64>,
    #[arg(short = 'n')]
    pub n: Option<u64>,
    #[arg(short = 'r')]
    pub r: Option<u64>,
    #[arg(short = 's')]
    pub s: Option<u64>,
    /// Reduce invariants to [0, q) and drop index-one points.
    #[arg(long)]
    pub normalized: bool,
    /// Report the data for the mirror Hopf fibration.
    #[arg(long)]
    pub mirror: bool,
    /// Also run the oracle on this group.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    /// Upper bound on the order of the group acting on S³.
    #[arg(long)]
    pub max_order: u64,
    /// Comma-separated family ids; `table4` selects the polyhedral families.
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub r: Option<u64>,
    pub s: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseJson {
    pub kind: String,
    pub cones: Vec<u64>,
    pub corners: Vec<u64>,
    pub xi: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerJson {
    pub num: i64,
    pub den: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantJson {
    pub num: i64,
    pub den: i64,
    pub normalized_num: i64,
    pub index: i64,
    pub location: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnderlyingJson {
    pub kind: String,
    pub p: Option<u64>,
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub passed: bool,
    pub differences: Vec<String>,
}

/// One computed group, in the shape printed by `compute --json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub family: String,
    pub params: Params,
    pub phi_order: u64,
    pub base: BaseJson,
    pub euler: EulerJson,
    pub invariants: Vec<InvariantJson>,
    pub underlying: UnderlyingJson,
    pub singular_components: Vec<u64>,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
}

fn location_name(l: Location) -> &'static str {
    match l {
        Location::ConePoint => "cone",
        Location::CornerReflector => "corner",
    }
}

fn ascending(orders: &[u64]) -> Vec<u64> {
    let mut v: Vec<u64> = orders.iter().copied().filter(|&o| o > 1).collect();
    v.sort_unstable();
    v
}

impl Report {
    pub fn new(engine: &EngineReport, normalized: bool, mirror: bool) -> Self {
        let mut seifert = engine.seifert.clone();
        if mirror {
            seifert = seifert.flip_orientation();
        }
        if normalized {
            seifert = seifert.normalize();
        }
        let mut invariants: Vec<_> = seifert
            .invariants
            .iter()
            .map(|x| InvariantJson {
                num: x.num,
                den: x.den,
                normalized_num: x.normalized_num(),
                index: x.index(),
                location: location_name(x.location).into(),
            })
            .collect();
        invariants.sort_by(|a, b| {
            let va = crate::Rational::new(a.normalized_num, a.den);
            let vb = crate::Rational::new(b.normalized_num, b.den);
            (va, a.index, &a.location, a.num, a.den).cmp(&(vb, b.index, &b.location, b.num, b.den))
        });
        let base = &seifert.base;
        let underlying = match &engine.topology.underlying {
            Underlying::ThreeSphere => UnderlyingJson {
                kind: "S3".into(),
                p: None,
                q: None,
                reason: None,
            },
            Underlying::LensSpace { p, q } => UnderlyingJson {
                kind: "lens".into(),
                p: Some(*p),
                q: Some(*q),
                reason: None,
            },
            Underlying::NotComputed(why) => UnderlyingJson {
                kind: "notComputed".into(),
                p: None,
                q: None,
                reason: Some(why.clone()),
            },
        };
        let spec = &engine.spec;
        Self {
            family: spec.family.as_str().into(),
            params: Params {
                m: spec.m,
                n: spec.n,
                r: spec.r,
                s: spec.s,
            },
            phi_order: spec.phi_order(),
            base: BaseJson {
                kind: match base.kind {
                    BaseKind::Sphere => "S2",
                    BaseKind::Disc => "D2",
                    BaseKind::ProjectivePlane => "RP2",
                }
                .into(),
                cones: ascending(&base.cones),
                corners: ascending(&base.corners),
                xi: seifert.xi,
            },
            euler: EulerJson {
                num: *seifert.euler.numer(),
                den: *seifert.euler.denom(),
            },
            invariants,
            underlying,
            singular_components: engine.topology.singular_components.clone(),
            provenance: engine.provenance.clone(),
            verification: None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = [
            ("m", self.params.m),
            ("n", self.params.n),
            ("r", self.params.r),
            ("s", self.params.s),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
        .collect();
        out.push_str(&format!(
            "family {} {}  |Φ(G)| = {}\n",
            self.family,
            params.join(" "),
            self.phi_order
        ));
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let base = match self.base.kind.as_str() {
            "S2" => format!("S²({})", join(&self.base.cones)),
            "D2" => format!(
                "D²({};{})",
                join(&self.base.cones),
                join(&self.base.corners)
            ),
            _ => format!("RP²({})", join(&self.base.cones)),
        };
        out.push_str(&format!("base        {base}\n"));
        if let Some(xi) = self.base.xi {
            out.push_str(&format!("xi          {xi}\n"));
        }
        out.push_str(&format!(
            "euler       {}/{}\n",
            self.euler.num, self.euler.den
        ));
        let inv: Vec<String> = self
            .invariants
            .iter()
            .map(|x| {
                let mark = if x.location == "corner" { "*" } else { "" };
                format!("{mark}{}/{} (index {})", x.num, x.den, x.index)
            })
            .collect();
        out.push_str(&format!(
            "invariants  {}\n",
            if inv.is_empty() {
                "none".into()
            } else {
                inv.join(", ")
            }
        ));
        let underlying = match self.underlying.kind.as_str() {
            "S3" => "S³".to_string(),
            "lens" => format!(
                "L({},{})",
                self.underlying.p.unwrap_or(0),
                self.underlying.q.unwrap_or(0)
            ),
            _ => format!(
                "not computed ({})",
                self.underlying.reason.as_deref().unwrap_or("")
            ),
        };
        out.push_str(&format!("underlying  {underlying}\n"));
        let sing: Vec<String> = self
            .singular_components
            .iter()
            .map(u64::to_string)
            .collect();
        out.push_str(&format!(
            "singular    {}\n",
            if sing.is_empty() {
                "empty".into()
            } else {
                sing.join(", ")
            }
        ));
        out.push_str(&format!("source      {}\n", self.provenance));
        if let Some(v) = &self.verification {
            out.push_str(&format!(
                "oracle      {}\n",
                if v.passed { "agrees" } else { "DISAGREES" }
            ));
            for d in &v.differences {
                out.push_str(&format!("  {d}\n"));
            }
        }
        out
    }
}

/// Families named on the command line; empty selects every family.
pub fn parse_families(names: &[String]) -> Result<Vec<FamilyId>, String> {
    if names.is_empty() {
        return Ok(FamilyId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        match name.to_ascii_lowercase().as_str() {
            "table4" => out.extend(FamilyId::TABLE4),
            "all" => out.extend(FamilyId::ALL),
            _ => out.push(
                name.parse()
                    .map_err(|_| format!("unknown family `{name}`"))?,
            ),
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|f| seen.insert(*f));
    Ok(out)
}

fn worker_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(WORKERS_VAR) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| format!("{WORKERS_VAR} must be a positive integer, got `{v}`"))?;
        if n == 0 {
            return Err(format!("{WORKERS_VAR} must be positive"));
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

/// Every valid spec of the selected families with `|Φ(G)| ≤ max_order`, in a fixed order.
pub fn specs_up_to(families: &[FamilyId], max_order: u64) -> Vec<FamilySpec> {
    families
        .iter()
        .flat_map(|&f| enumerate_specs(f, max_order))
        .collect()
}

/// Differences under the alternative readings of the abelian closed forms.
pub fn reading_diagnostics(spec: &FamilySpec) -> Vec<String> {
    let Ok(group) = goursat_group(spec) else {
        return Vec::new();
    };
    let Ok(oracle) = oracle_report(&group) else {
        return Vec::new();
    };
    [Reading::Body, Reading::Table]
        .into_iter()
        .map(|reading| match compute_with(spec, reading) {
            Ok(engine) => {
                let diffs = compare_reports(&engine, &oracle);
                if diffs.is_empty() {
                    format!("{reading:?} reading: agrees")
                } else {
                    format!("{reading:?} reading: {}", diffs.join("; "))
                }
            }
            Err(e) => format!("{reading:?} reading: {e}"),
        })
        .collect()
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::InvalidSpec(_) => EXIT_USAGE,
        Error::UnsupportedFamily(_) => EXIT_UNSUPPORTED,
        _ => EXIT_MISMATCH,
    }
}

fn compute_cmd(args: &ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let family: FamilyId = match args.family.parse() {
        Ok(f) => f,
        Err(_) => {
            let _ = writeln!(err, "unknown family `{}`", args.family);
            return EXIT_USAGE;
        }
    };
    let spec = FamilySpec {
        family,
        m: args.m,
        n: args.n,
        r: args.r,
        s: args.s,
    };
    let engine = match compute(&spec) {
        Ok(e) => e,
        Err(e) => {
            if let Error::InvalidSpec(list) = &e {
                let _ = writeln!(err, "invalid parameters:");
                for v in list {
                    let _ = writeln!(err, "  {v}");
                }
            } else {
                let _ = writeln!(err, "{e}");
            }
            return exit_for(&e);
        }
    };
    let verification = if args.verify {
        match verify_spec(&spec) {
            Ok(v) => Some(v),
            Err(e) => {
                let _ = writeln!(err, "oracle failed: {e}");
                return EXIT_MISMATCH;
            }
        }
    } else {
        None
    };
    let mut report = Report::new(&engine, args.normalized, args.mirror);
    report.verification = verification.as_ref().map(|v| VerificationJson {
        passed: v.passed(),
        differences: v.differences.clone(),
    });
    if args.output.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        let _ = write!(out, "{}", report.to_text());
    }
    match &verification {
        Some(v) if !v.passed() => EXIT_MISMATCH,
        _ => EXIT_OK,
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EnumerateRow {
    family: String,
    params: Params,
    phi_order: u64,
    fibered: bool,
}

fn enumerate_cmd(args: &RangeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if args.max_order == 0 {
        let _ = writeln!(err, "--max-order must be at least 1");
        return EXIT_USAGE;
    }
    let families = match parse_families(&args.families) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let rows: Vec<EnumerateRow> = specs_up_to(&families, args.max_order)
        .into_iter()
        .map(|s| EnumerateRow {
            family: s.family.as_str().into(),
            params: Params {
                m: s.m,
                n: s.n,
                r: s.r,
                s: s.s,
            },
            phi_order: s.phi_order(),
            fibered: s.family.is_fibered(),
        })
        .collect();
    if args.output.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&rows).expect("rows serialize")
        );
    } else {
        for row in &rows {
            let spec = FamilySpec {
                family: row.family.parse().expect("family id round-trips"),
                m: row.params.m,
                n: row.params.n,
                r: row.params.r,
                s: row.params.s,
            };
            let status = if row.fibered {
                "fibered"
            } else {
                "non-fibered"
            };
            let _ = writeln!(out, "{:<32} {:>8}  {status}", spec.label(), row.phi_order);
        }
        let _ = writeln!(out, "{} groups", rows.len());
    }
    EXIT_OK
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerifySummary {
    checked: usize,
    passed: usize,
    skipped_non_fibered: usize,
    failures: Vec<VerifyFailure>,
}

#[derive(Serialize)]
struct VerifyFailure {
    spec: String,
    differences: Vec<String>,
    readings: Vec<String>,
}

fn verify_cmd(args: &RangeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if args.max_order == 0 {
        let _ = writeln!(err, "--max-order must be at least 1");
        return EXIT_USAGE;
    }
    let families = match parse_families(&args.families) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let pool = match worker_pool() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let (fibered, skipped): (Vec<_>, Vec<_>) = families.iter().partition(|f| f.is_fibered());
    let specs = specs_up_to(&fibered, args.max_order);
    let skipped = specs_up_to(&skipped, args.max_order).len();
    let results: Vec<(FamilySpec, Result<Verification, Error>)> =
        pool.install(|| specs.par_iter().map(|s| (*s, verify_spec(s))).collect());
    let failures: Vec<VerifyFailure> = results
        .iter()
        .filter_map(|(spec, r)| {
            let differences = match r {
                Ok(v) if v.passed() => return None,
                Ok(v) => v.differences.clone(),
                Err(e) => vec![e.to_string()],
            };
            let readings = if spec.family.is_abelian() || spec.family.is_generalized_dihedral() {
                reading_diagnostics(spec)
            } else {
                Vec::new()
            };
            Some(VerifyFailure {
                spec: spec.label(),
                differences,
                readings,
            })
        })
        .collect();
    let summary = VerifySummary {
        checked: results.len(),
        passed: results.len() - failures.len(),
        skipped_non_fibered: skipped,
        failures,
    };
    if args.output.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&summary).expect("summary serializes")
        );
    } else {
        for f in &summary.failures {
            let _ = writeln!(out, "MISMATCH {}", f.spec);
            for d in &f.differences {
                let _ = writeln!(out, "  {d}");
            }
            for d in &f.readings {
                let _ = writeln!(out, "  {d}");
            }
        }
        let _ = writeln!(
            out,
            "checked {} groups: {} passed, {} failed; {} non-fibered skipped",
            summary.checked,
            summary.passed,
            summary.failures.len(),
            summary.skipped_non_fibered
        );
    }
    if summary.failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match &cli.command {
        Command::Compute(a) => compute_cmd(a, out, err),
        Command::Enumerate(a) => enumerate_cmd(a, out, err),
        Command::Verify(a) => verify_cmd(a, out, err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("orbiseif").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_family_9_json() {
        let (code, out, _) = run_str(&["compute", "--family", "9", "-m", "1", "--json"]);
        assert_eq!(code, 0);
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!((r.euler.num, r.euler.den), (-1, 30));
        assert_eq!(r.base.kind, "S2");
        assert_eq!(r.base.cones, vec![2, 3, 5]);
    }

    #[test]
    fn compute_rp3() {
        let (code, out, _) = run_str(&[
            "compute", "--family", "1", "-m", "1", "-n", "1", "-r", "1", "-s", "1",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("L(2,1)"), "{out}");
    }

    #[test]
    fn invalid_spec_exits_one() {
        let (code, _, err) = run_str(&[
            "compute", "--family", "1p", "-m", "2", "-n", "1", "-r", "2", "-s", "1",
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("m must be odd"), "{err}");
    }

    #[test]
    fn non_fibered_exits_three() {
        let (code, _, _) = run_str(&["compute", "--family", "20"]);
        assert_eq!(code, 3);
    }

    #[test]
    fn bad_bound_exits_one() {
        assert_eq!(run_str(&["verify", "--max-order", "0"]).0, 1);
        assert_eq!(run_str(&["enumerate", "--max-order", "0"]).0, 1);
        assert_eq!(run_str(&["verify"]).0, 1);
    }

    #[test]
    fn enumerate_examples() {
        let (code, out, _) = run_str(&["enumerate", "--max-order", "24", "--families", "9"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("0 groups"), "{out}");
        let (_, out, _) = run_str(&[
            "enumerate",
            "--max-order",
            "120",
            "--families",
            "30,31",
            "--json",
        ]);
        let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
        let rows = rows.as_array().unwrap();
        assert!(rows
            .iter()
            .all(|r| r["family"] == "31" && r["fibered"] == false));
        assert!(!rows.is_empty());
    }

    #[test]
    fn report_round_trip_and_determinism() {
        for args in [
            vec![
                "compute", "--family", "11p", "-m", "1", "-n", "1", "-r", "10", "-s", "1", "--json",
            ],
            vec![
                "compute",
                "--family",
                "14",
                "-m",
                "6",
                "--json",
                "--normalized",
            ],
            vec![
                "compute", "--family", "2", "-m", "2", "-n", "3", "--json", "--mirror",
            ],
        ] {
            let (code, a, _) = run_str(&args);
            assert_eq!(code, 0, "{args:?}");
            let (_, b, _) = run_str(&args);
            assert_eq!(a, b);
            let r: Report = serde_json::from_str(&a).unwrap();
            let again = serde_json::to_string_pretty(&r).unwrap();
            assert_eq!(serde_json::from_str::<Report>(&again).unwrap(), r);
            assert_eq!(again.trim_end(), a.trim_end());
        }
    }
}
