use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use rck_core::cocritical::{is_cocritical_with, is_minimal_cocritical_with, run_checks, CocriticalOptions};
use rck_core::constructions::known_ramsey;
use rck_core::corpus::nonisomorphic_graphs;
use rck_core::saturation::is_saturated;
use rck_core::{arrows_with, to_graph6, CliqueVector, Error, Graph, SearchConfig};

use crate::args::{Cli, Command, SearchArgs};
use crate::input::{Item, Source};
use crate::record::{pair, Record};
use crate::{scan, CliError, Context, Format, Status};

pub(crate) fn dispatch(cli: &Cli, ctx: &Context, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::Arrow {
            spec,
            input,
            search,
            witness_dir,
        } => {
            if let Some(dir) = witness_dir {
                fs::create_dir_all(dir)?;
            }
            let config = search_config(search);
            let mut source = Source::open(input, stdin)?;
            each_record(ctx, &mut source, out, |item| {
                arrow(item, &spec.spec, &config, witness_dir.as_deref())
            })
        }
        Command::Cocritical {
            spec,
            input,
            search,
            checks,
            minimal,
        } => {
            let options = CocriticalOptions {
                search: search_config(search),
                ramsey: checks.ramsey,
            };
            let mut source = Source::open(input, stdin)?;
            each_record(ctx, &mut source, out, |item| {
                cocritical(item, &spec.spec, &options, checks.lemmas, *minimal)
            })
        }
        Command::Saturated { t, input } => {
            if *t < 2 {
                return Err(CliError::Usage(format!("--t must be at least 2, got {t}")));
            }
            let mut source = Source::open(input, stdin)?;
            each_record(ctx, &mut source, out, |item| saturated(item, *t))
        }
        Command::Scan {
            spec,
            input,
            search,
            ramsey,
            oracle,
        } => {
            let options = CocriticalOptions {
                search: search_config(search),
                ramsey: *ramsey,
            };
            let mut source = Source::open(input, stdin)?;
            scan::scan(ctx, &mut source, out, &spec.spec, &options, *oracle)
        }
        Command::Gen { min, max } => {
            let max = max.unwrap_or(*min);
            for n in *min..=max {
                let graphs = ctx.pool.install(|| nonisomorphic_graphs(n)).map_err(Error::from)?;
                for g in graphs {
                    writeln!(out, "{}", to_graph6(&g))?;
                }
            }
            Ok(Status::default())
        }
    }
}

fn search_config(args: &SearchArgs) -> SearchConfig {
    SearchConfig {
        node_limit: args.node_limit,
        ..SearchConfig::default()
    }
}

/// Evaluates `f` on every input graph, batch by batch in parallel, and
/// writes the records in input order.
fn each_record<F>(ctx: &Context, source: &mut Source, out: &mut dyn Write, f: F) -> Result<Status, CliError>
where
    F: Fn(&Item) -> Result<(Record, Status), CliError> + Sync,
{
    let mut status = Status::default();
    loop {
        let batch = source.next_batch()?;
        if batch.is_empty() {
            return Ok(status);
        }
        let results: Vec<_> = ctx.pool.install(|| {
            batch
                .par_iter()
                .map(|item| {
                    let started = Instant::now();
                    let (mut record, st) = f(item)?;
                    if ctx.timing {
                        record.elapsed_ms = Some(started.elapsed().as_secs_f64() * 1e3);
                    }
                    Ok::<_, CliError>((record, st))
                })
                .collect()
        });
        for result in results {
            let (record, st) = result?;
            match ctx.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&record).expect("records serialize"))?,
                Format::Text => writeln!(out, "{}", record.to_text())?,
            }
            status.merge(st);
        }
    }
}

fn base_record(item: &Item, spec: &CliqueVector, verdict: &'static str) -> Result<Record, CliError> {
    let g = &item.graph;
    let mut record = Record::new(&item.g6, g, spec.sizes().to_vec(), verdict);
    record.chi = chromatic(g)?;
    record.ht_bound = known_ramsey(spec)
        .filter(|&r| r >= 3 && g.n() >= r)
        .map(|r| rck_core::constructions::hanson_toft_edge_count(r, g.n()));
    Ok(record)
}

fn chromatic(g: &Graph) -> Result<Option<usize>, CliError> {
    if g.n() <= rck_core::chromatic::CHROMATIC_MAX_VERTICES {
        Ok(Some(g.chromatic_number().map_err(Error::from)?))
    } else {
        Ok(None)
    }
}

fn indeterminate(item: &Item, spec: &CliqueVector, stats: rck_core::SearchStats) -> Result<(Record, Status), CliError> {
    let mut record = base_record(item, spec, "indeterminate")?;
    record.stats = Some(stats);
    Ok((
        record,
        Status {
            indeterminate: true,
            ..Status::default()
        },
    ))
}

fn arrow(
    item: &Item,
    spec: &CliqueVector,
    config: &SearchConfig,
    witness_dir: Option<&Path>,
) -> Result<(Record, Status), CliError> {
    let verdict = match arrows_with(&item.graph, spec, config) {
        Ok(v) => v,
        Err(Error::Indeterminate(stats)) => return indeterminate(item, spec, stats),
        Err(e) => return Err(e.into()),
    };
    let mut record = base_record(item, spec, if verdict.arrows { "arrows" } else { "not-arrows" })?;
    record.stats = Some(verdict.stats);
    if let Some(w) = &verdict.witness {
        record.witness = Some(w.color_word());
        if let Some(dir) = witness_dir {
            fs::write(dir.join(format!("{:06}.txt", item.index)), w.to_text())?;
        }
    }
    Ok((record, Status::default()))
}

fn cocritical(
    item: &Item,
    spec: &CliqueVector,
    options: &CocriticalOptions,
    lemmas: bool,
    minimal: bool,
) -> Result<(Record, Status), CliError> {
    let report = match is_cocritical_with(&item.graph, spec, options) {
        Ok(r) => r,
        Err(Error::Indeterminate(stats)) => return indeterminate(item, spec, stats),
        Err(Error::CompleteGraph) => {
            return Err(CliError::Usage(format!(
                "record {}: {} is a complete graph, which is never co-critical",
                item.index, item.g6
            )))
        }
        Err(e) => return Err(e.into()),
    };
    let verdict = if report.is_cocritical {
        "cocritical"
    } else if report.arrows {
        "arrows"
    } else {
        "not-cocritical"
    };
    let mut record = base_record(item, spec, verdict)?;
    record.ht_bound = report.ht_bound;
    record.witness = report.base_witness.as_ref().map(|w| w.color_word());
    record.failing_edge = report.failing_edge.map(pair);
    record.stats = Some(report.stats);
    let mut status = Status::default();
    if report.is_cocritical {
        if lemmas {
            record.lemmas = match run_checks(&report, options) {
                Ok(f) => f,
                Err(Error::Indeterminate(stats)) => return indeterminate(item, spec, stats),
                Err(e) => return Err(e.into()),
            };
            status.assertion_failed = record.lemmas.iter().any(|f| !f.holds);
        }
        if minimal {
            record.minimal = Some(is_minimal_cocritical_with(&item.graph, spec, options)?);
        }
    }
    Ok((record, status))
}

fn saturated(item: &Item, t: usize) -> Result<(Record, Status), CliError> {
    let report = is_saturated(&item.graph, t)?;
    let verdict = match (report.is_free, report.is_saturated, report.vacuous_complete) {
        (_, true, true) => "vacuous-complete",
        (_, true, false) => "saturated",
        (true, false, _) => "not-saturated",
        (false, _, _) => "not-free",
    };
    let mut record = Record::new(&item.g6, &item.graph, vec![t], verdict);
    record.chi = chromatic(&item.graph)?;
    record.violating_non_edge = report.violating_non_edge.map(pair);
    let mut status = Status::default();
    if report.is_saturated {
        record.hajnal = Some(report.hajnal_holds);
        status.assertion_failed = !report.hajnal_holds;
    }
    Ok((record, status))
}
