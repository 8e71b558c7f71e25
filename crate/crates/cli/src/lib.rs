//! Command-line harness library: instance files, report rendering,
//! seeded instance generation and trace emission.

pub mod generate;
pub mod instance;
pub mod report;

use std::time::Instant;

use effsum_core::{
    bridge, combined_verdict, derive_dominated_cycle, derive_dominator_cycle,
    derive_equation_cycle, BridgeOutcome, DerivationTrace, GroupElement, PropertyReport,
    SystemInstance, SystemKind, Verdict,
};

pub use instance::{parse_instance, parse_instance_str, CliError, CliResult, Instance};
pub use report::Report;

/// Runs audits, the rule ladder and the oracle for a parsed instance and
/// packages the outcome as a display report.
pub fn run_verdict(inst: &Instance) -> CliResult<(Report, Verdict, PropertyReport)> {
    let start = Instant::now();
    let cfg = inst.audit_config();
    let (verdict, prop_report) =
        combined_verdict(&inst.a, &inst.b_list, &inst.group, &inst.relation, &cfg)?;
    let timing_ms = start.elapsed().as_millis() as u64;
    let report = Report::new(
        inst.name.clone(),
        &verdict,
        &prop_report,
        &inst.warnings,
        timing_ms,
    );
    Ok((report, verdict, prop_report))
}

/// Derives the contradiction trace for the instance's explicit system,
/// replaying it before returning.
pub fn trace_for_system(sys: &SystemInstance, inst: &Instance) -> CliResult<DerivationTrace> {
    let trace = match sys.kind {
        SystemKind::S0 | SystemKind::S3 => derive_equation_cycle(sys, &inst.group)?,
        SystemKind::S1 | SystemKind::S2 => derive_dominator_cycle(sys, &inst.group)?,
        SystemKind::S4 | SystemKind::S5 | SystemKind::Mixed => {
            derive_dominated_cycle(sys, &inst.group)?
        }
    };
    trace.replay(sys, &inst.group)?;
    Ok(trace)
}

/// Trace output for instances without an explicit system: either a full
/// derivation or an element witnessing that the efficient sets differ.
pub enum TraceOutput {
    Trace(DerivationTrace),
    Witness(GroupElement),
}

/// Produces the trace (or witness) for an instance. With an explicit
/// system the trace is derived from it directly; otherwise the summand
/// set must contain exactly one element besides the identity, and the
/// instance is bridged through the induced translation system.
pub fn run_trace(inst: &Instance) -> CliResult<TraceOutput> {
    if let Some(sys) = &inst.system {
        return Ok(TraceOutput::Trace(trace_for_system(sys, inst)?));
    }
    if inst.b_list.len() != 1 {
        return Err(CliError::Validation(
            "tracing without an explicit system needs a single summand set".into(),
        ));
    }
    let identity = inst.group.identity();
    let nonzero: Vec<&GroupElement> = inst.b_list[0]
        .iter()
        .filter(|e| **e != identity)
        .collect();
    let b = match nonzero.as_slice() {
        [one] => (*one).clone(),
        _ => {
            return Err(CliError::Validation(
                "tracing without an explicit system needs exactly one non-identity summand"
                    .into(),
            ))
        }
    };
    match bridge(&inst.a, &b, &inst.group, &inst.relation)? {
        BridgeOutcome::Witness(w) => Ok(TraceOutput::Witness(w)),
        BridgeOutcome::Derivation(t) => Ok(TraceOutput::Trace(t)),
    }
}

impl TraceOutput {
    /// Text form: the trace serialization, or a single `WITNESS` line.
    pub fn render(&self) -> String {
        match self {
            TraceOutput::Trace(t) => t.serialize(),
            TraceOutput::Witness(w) => format!("WITNESS | {w}\n"),
        }
    }
}
