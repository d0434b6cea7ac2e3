use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use rck_core::cocritical::{is_cocritical_with, run_checks, Clause, CocriticalOptions, Finding};
use rck_core::oracle::brute_force;
use rck_core::{canonical_form, CliqueVector, Error, Graph};
use serde::Serialize;

use crate::input::{Item, Source};
use crate::{CliError, Context, Format, Status};

/// Failures listed in full in a summary; later ones are only counted.
const MAX_LISTED_FAILURES: usize = 20;

/// Totals for one vertex count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub graphs: usize,
    pub cocritical: usize,
    pub min_delta: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanFailure {
    pub g6: String,
    pub clause: String,
    pub detail: String,
}

/// The single record printed by `rck scan`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ScanSummary {
    pub spec: Vec<usize>,
    pub graphs: usize,
    pub skipped_complete: usize,
    pub cocritical: usize,
    /// Smallest minimum degree among the co-critical graphs.
    pub min_delta: Option<usize>,
    pub checks: usize,
    pub vacuous_checks: usize,
    pub check_failures: usize,
    pub degree_failures: usize,
    pub oracle_agreements: usize,
    pub oracle_mismatches: usize,
    pub oracle_skipped: usize,
    pub indeterminate: usize,
    pub by_order: BTreeMap<usize, OrderSummary>,
    pub failures: Vec<ScanFailure>,
    /// Canonical graph6 forms of the co-critical graphs found, sorted.
    pub cocritical_forms: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl ScanSummary {
    fn status(&self) -> Status {
        Status {
            assertion_failed: self.check_failures + self.degree_failures + self.oracle_mismatches > 0,
            indeterminate: self.indeterminate > 0,
        }
    }

    fn to_text(&self) -> String {
        let json = serde_json::to_value(self).expect("summary serializes");
        let mut out = String::new();
        for (key, value) in json.as_object().expect("summary is an object") {
            out.push_str(&format!("{key}: {value}\n"));
        }
        out
    }
}

enum OracleOutcome {
    NotRun,
    Agree,
    Mismatch,
    Skipped,
}

struct Outcome {
    n: usize,
    complete: bool,
    cocritical: bool,
    delta: usize,
    findings: Vec<Finding>,
    form: Option<String>,
    oracle: OracleOutcome,
    indeterminate: bool,
}

fn checks_apply(spec: &CliqueVector) -> bool {
    spec.k() >= 2 && spec.is_ascending() && spec.sizes()[0] >= 3
}

fn examine(item: &Item, spec: &CliqueVector, options: &CocriticalOptions, oracle: bool) -> Result<Outcome, CliError> {
    let g = &item.graph;
    let mut outcome = Outcome {
        n: g.n(),
        complete: g.is_complete(),
        cocritical: false,
        delta: g.min_degree(),
        findings: Vec::new(),
        form: None,
        oracle: OracleOutcome::NotRun,
        indeterminate: false,
    };
    if outcome.complete {
        return Ok(outcome);
    }
    let report = match is_cocritical_with(g, spec, options) {
        Ok(r) => r,
        Err(Error::Indeterminate(_)) => {
            outcome.indeterminate = true;
            return Ok(outcome);
        }
        Err(e) => return Err(e.into()),
    };
    outcome.cocritical = report.is_cocritical;
    if report.is_cocritical {
        if checks_apply(spec) {
            match run_checks(&report, options) {
                Ok(f) => outcome.findings = f,
                Err(Error::Indeterminate(_)) => outcome.indeterminate = true,
                Err(e) => return Err(e.into()),
            }
        }
        outcome.form = canonical_form(g).ok().map(|c| c.as_str().to_string());
    }
    if oracle {
        outcome.oracle = match oracle_cocritical(g, spec) {
            Some(truth) if truth == report.is_cocritical => OracleOutcome::Agree,
            Some(_) => OracleOutcome::Mismatch,
            None => OracleOutcome::Skipped,
        };
    }
    Ok(outcome)
}

// Co-criticality by full enumeration, or `None` beyond the oracle budget.
fn oracle_cocritical(g: &Graph, spec: &CliqueVector) -> Option<bool> {
    if brute_force(g, spec).ok()?.arrows() {
        return Some(false);
    }
    for e in g.non_edges() {
        let h = g.add_edge(e).ok()?;
        if !brute_force(&h, spec).ok()?.arrows() {
            return Some(false);
        }
    }
    Some(true)
}

pub(crate) fn scan(
    ctx: &Context,
    source: &mut Source,
    out: &mut dyn Write,
    spec: &CliqueVector,
    options: &CocriticalOptions,
    oracle: bool,
) -> Result<Status, CliError> {
    let started = Instant::now();
    let mut summary = ScanSummary {
        spec: spec.sizes().to_vec(),
        ..ScanSummary::default()
    };
    let mut forms = BTreeSet::new();
    loop {
        let batch = source.next_batch()?;
        if batch.is_empty() {
            break;
        }
        let outcomes: Vec<Result<Outcome, CliError>> =
            ctx.pool.install(|| batch.par_iter().map(|item| examine(item, spec, options, oracle)).collect());
        for (item, outcome) in batch.iter().zip(outcomes) {
            let o = outcome?;
            summary.graphs += 1;
            let order = summary.by_order.entry(o.n).or_default();
            order.graphs += 1;
            if o.complete {
                summary.skipped_complete += 1;
                continue;
            }
            summary.indeterminate += o.indeterminate as usize;
            match o.oracle {
                OracleOutcome::NotRun => {}
                OracleOutcome::Agree => summary.oracle_agreements += 1,
                OracleOutcome::Skipped => summary.oracle_skipped += 1,
                OracleOutcome::Mismatch => {
                    summary.oracle_mismatches += 1;
                    record_failure(&mut summary.failures, item, "oracle", "engine and enumeration disagree".into());
                }
            }
            if !o.cocritical {
                continue;
            }
            summary.cocritical += 1;
            order.cocritical += 1;
            order.min_delta = Some(order.min_delta.map_or(o.delta, |d| d.min(o.delta)));
            summary.min_delta = Some(summary.min_delta.map_or(o.delta, |d| d.min(o.delta)));
            forms.extend(o.form);
            for f in &o.findings {
                summary.checks += 1;
                summary.vacuous_checks += f.vacuous as usize;
                if f.holds {
                    continue;
                }
                if f.clause == Clause::MinDegree {
                    summary.degree_failures += 1;
                } else {
                    summary.check_failures += 1;
                }
                let clause = serde_json::to_value(f.clause).expect("clause serializes");
                record_failure(
                    &mut summary.failures,
                    item,
                    clause.as_str().unwrap_or_default(),
                    f.detail.clone(),
                );
            }
        }
    }
    summary.cocritical_forms = forms.into_iter().collect();
    if ctx.timing {
        summary.elapsed_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    match ctx.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&summary).expect("summary serializes"))?,
        Format::Text => write!(out, "{}", summary.to_text())?,
    }
    Ok(summary.status())
}

fn record_failure(failures: &mut Vec<ScanFailure>, item: &Item, clause: &str, detail: String) {
    if failures.len() < MAX_LISTED_FAILURES {
        failures.push(ScanFailure {
            g6: item.g6.clone(),
            clause: clause.to_string(),
            detail,
        });
    }
}
