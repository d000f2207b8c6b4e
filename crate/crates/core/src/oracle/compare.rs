//! Engine-versus-oracle comparison.

use super::report::{oracle_report, OracleReport};
use crate::engine::{compute, somma_is_integral, EngineReport};
use crate::error::Result;
use crate::groups::{goursat_group, FamilySpec};

/// Differences between the closed forms and the recomputation; empty when they agree.
pub fn compare_reports(engine: &EngineReport, oracle: &OracleReport) -> Vec<String> {
    let mut diffs = Vec::new();
    let (eb, ei, ex, ee) = engine.seifert.canonical();
    let (ob, oi, ox, oe) = oracle.seifert.canonical();
    if eb != ob {
        diffs.push(format!("base: engine {eb}, oracle {ob}"));
    }
    if ee != oe {
        diffs.push(format!("euler: engine {ee}, oracle {oe}"));
    }
    if ei != oi {
        diffs.push(format!("invariants: engine {ei:?}, oracle {oi:?}"));
    }
    if ex != ox {
        diffs.push(format!("xi: engine {ex:?}, oracle {ox:?}"));
    }
    if !somma_is_integral(&engine.seifert) || !somma_is_integral(&engine.seifert.normalize()) {
        diffs.push(format!(
            "engine somma residue {} is not an integer",
            engine.seifert.somma_residue()
        ));
    }
    if !somma_is_integral(&oracle.seifert) {
        diffs.push(format!(
            "oracle somma residue {} is not an integer",
            oracle.seifert.somma_residue()
        ));
    }
    if !engine
        .topology
        .underlying
        .compatible(&oracle.topology.underlying)
    {
        diffs.push(format!(
            "underlying: engine {}, oracle {}",
            engine.topology.underlying, oracle.topology.underlying
        ));
    }
    if engine.topology.singular_components != oracle.topology.singular_components {
        diffs.push(format!(
            "singular set: engine {:?}, oracle {:?}",
            engine.topology.singular_components, oracle.topology.singular_components
        ));
    }
    diffs
}

/// Outcome of verifying one spec.
#[derive(Clone, Debug)]
pub struct Verification {
    pub spec: FamilySpec,
    pub engine: EngineReport,
    pub oracle: OracleReport,
    pub differences: Vec<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.differences.is_empty()
    }
}

pub fn verify_spec(spec: &FamilySpec) -> Result<Verification> {
    let engine = compute(spec)?;
    let group = goursat_group(&engine.spec)?;
    let oracle = oracle_report(&group)?;
    let differences = compare_reports(&engine, &oracle);
    Ok(Verification {
        spec: engine.spec,
        engine,
        oracle,
        differences,
    })
}
