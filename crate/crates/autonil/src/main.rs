//! Command-line front end: analyze one group, inspect Aut or a series,
//! scan the whole builtin catalog, or validate a Cayley-table file.
//!
//! Exit codes: 0 success, 1 usage or computation error, 2 reserved for a
//! criteria disagreement (the cross-checked theorems failing to agree,
//! which signals a bug, never an unusual group).

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use autonil::catalog::builtin_catalog;
use autonil::cayley;
use autonil::report;
use autonil::spec::{parse_spec, realize, GroupSpec};
use autonil_core::criteria::{
    check_via_chain, check_via_fixity, check_via_frobenius, check_via_l_series, check_via_sylow,
    cross_validate_timed, AutCache, CriterionOutcome, CriterionReport, CrossValidation,
};
use autonil_core::{
    automorphism_group_with, center, fitting_subgroup, greedy_generators, inner_automorphisms,
    k_series, l_series, prime_divisors, set_max_order, subgroup_conjugation_action, AutLimits,
    Error as CoreError, GroupTable, SeriesKind, SeriesResult,
};

#[derive(Parser)]
#[command(
    name = "autonil",
    version,
    about = "Autonilpotency analysis of finite groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Include wall-clock timing fields in reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Largest group order the automorphism search will accept.
    #[arg(long, global = true, value_name = "N")]
    max_aut_order: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    All,
    LSeries,
    Chain,
    Sylow,
    Frobenius,
    Fixity,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperatorsArg {
    Aut,
    Inn,
    Fitting,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    K,
    L,
}

#[derive(Subcommand)]
enum Command {
    /// Run autonilpotency criteria on one group.
    Analyze {
        /// Group spec, e.g. "D8", "C3 x C4", "perm:(1 2 3),(1 2)", "file:g.json".
        spec: String,
        /// Which criterion to run; "all" cross-validates the whole battery.
        #[arg(long, value_enum, default_value = "all")]
        criterion: CriterionArg,
    },
    /// Compute the automorphism group of one group.
    Aut { spec: String },
    /// Compute an operator-commutator series of one group.
    Series {
        spec: String,
        /// Operator group acting on the group.
        #[arg(long, value_enum)]
        operators: OperatorsArg,
        /// Descending (k) or ascending (l) series.
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Cross-validate every builtin catalog group.
    Scan {
        /// Largest group order included in the catalog.
        #[arg(long, default_value_t = 48, value_name = "N")]
        max_order: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_name = "N")]
        jobs: usize,
    },
    /// Check a Cayley-table JSON file against the group axioms.
    ValidateFile { path: PathBuf },
}

fn main() {
    std::process::exit(run());
}

/// Write to stdout, ignoring a closed pipe (e.g. `autonil ... | head`).
fn emit(text: &str) {
    use std::io::Write as _;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit_err(text: &str) {
    use std::io::Write as _;
    let _ = std::io::stderr().lock().write_all(text.as_bytes());
}

fn run() -> i32 {
    if let Ok(text) = std::env::var("AUTONIL_MAX_ORDER") {
        match text.parse::<usize>() {
            Ok(n) if n > 0 => set_max_order(n),
            _ => {
                emit_err(&format!(
                    "AUTONIL_MAX_ORDER must be a positive integer, got {text:?}\n"
                ));
                return 1;
            }
        }
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(message) => {
            emit_err(&format!("{message}\n"));
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, String> {
    let mut limits = AutLimits::default();
    if let Some(n) = cli.max_aut_order {
        limits.max_group_order = n;
    }
    match &cli.command {
        Command::Analyze { spec, criterion } => cmd_analyze(cli, limits, spec, *criterion),
        Command::Aut { spec } => cmd_aut(cli, limits, spec),
        Command::Series {
            spec,
            operators,
            kind,
        } => cmd_series(cli, limits, spec, *operators, *kind),
        Command::Scan { max_order, jobs } => cmd_scan(cli, limits, *max_order, *jobs),
        Command::ValidateFile { path } => cmd_validate_file(cli, path),
    }
}

fn load_group(text: &str) -> Result<(GroupSpec, GroupTable), String> {
    let spec = parse_spec(text).map_err(|e| format!("spec {text:?}: {e}"))?;
    let group = realize(&spec).map_err(|e| format!("spec {text:?}: {e}"))?;
    Ok((spec, group))
}

/// Error text for a failed automorphism search, naming the override flag
/// when raising the cap would help. Only the group-order cap is
/// flag-adjustable; an oversized automorphism group stays out of reach.
fn aut_stage_error(stage: &str, e: &CoreError) -> String {
    match e {
        CoreError::SizeExceeded { what, .. } if what.contains("group order") => {
            format!("{stage}: {e} (raise the cap with --max-aut-order)")
        }
        _ => format!("{stage}: {e}"),
    }
}

fn make_clock(timings: bool) -> Box<dyn FnMut() -> Option<u64>> {
    if timings {
        let start = Instant::now();
        Box::new(move || Some(start.elapsed().as_micros() as u64))
    } else {
        Box::new(|| None)
    }
}

fn cmd_analyze(
    cli: &Cli,
    limits: AutLimits,
    spec: &str,
    criterion: CriterionArg,
) -> Result<i32, String> {
    let (_, group) = load_group(spec)?;
    let mut cache = AutCache::new(limits);
    let cv = match criterion {
        CriterionArg::All => {
            let mut clock = make_clock(cli.timings);
            cross_validate_timed(&group, &mut cache, &mut *clock)
        }
        single => {
            let check: fn(&GroupTable, &mut AutCache) -> Result<CriterionReport, CoreError> =
                match single {
                    CriterionArg::LSeries => check_via_l_series,
                    CriterionArg::Chain => check_via_chain,
                    CriterionArg::Sylow => check_via_sylow,
                    CriterionArg::Frobenius => check_via_frobenius,
                    CriterionArg::Fixity => check_via_fixity,
                    CriterionArg::All => unreachable!("handled above"),
                };
            let report = check(&group, &mut cache)
                .map_err(|e| aut_stage_error(&format!("analyze {}", group.name()), &e))?;
            CrossValidation {
                group_name: group.name().to_string(),
                group_order: group.order(),
                outcomes: vec![CriterionOutcome::Report(report)],
                agree: true,
                baer: Vec::new(),
            }
        }
    };
    let agree = cv.agree;
    let results = [cv];
    match cli.format {
        Format::Json => emit(&report::render_json(&results, cli.timings)),
        Format::Text => emit(&report::render_text(&results, cli.timings)),
    }
    Ok(if agree { 0 } else { 2 })
}

/// Whether `n` is a prime power, and for which prime.
fn p_group_prime(n: usize) -> Option<usize> {
    let primes = prime_divisors(n);
    match primes.as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

fn p_group_label(n: usize) -> String {
    if n == 1 {
        return "trivial".to_string();
    }
    match p_group_prime(n) {
        Some(p) => format!("a {p}-group"),
        None => "not a p-group".to_string(),
    }
}

fn cmd_aut(cli: &Cli, limits: AutLimits, spec: &str) -> Result<i32, String> {
    let (_, group) = load_group(spec)?;
    let aut = automorphism_group_with(&group, limits)
        .map_err(|e| aut_stage_error(&format!("aut {}", group.name()), &e))?;
    let generators = greedy_generators(&group);
    let inn_order = group.order() / center(&group).order();

    let mut images: Vec<Vec<usize>> = (0..aut.operator_count())
        .map(|a| aut.automorphism(a).images())
        .collect();
    images.sort();
    let generator_images: Vec<Vec<usize>> = images
        .iter()
        .map(|map| generators.iter().map(|&x| map[x]).collect())
        .collect();

    match cli.format {
        Format::Json => {
            let doc = json!({
                "group": group.name(),
                "order": group.order(),
                "aut_order": aut.operator_count(),
                "inn_order": inn_order,
                "group_p_group": p_group_prime(group.order()),
                "aut_p_group": p_group_prime(aut.operator_count()),
                "generators": generators,
                "automorphisms": generator_images,
            });
            emit(&format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("plain data")
            ));
        }
        Format::Text => {
            use std::fmt::Write as _;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "group {} (order {}, {})",
                group.name(),
                group.order(),
                p_group_label(group.order())
            );
            let _ = writeln!(
                out,
                "|Aut| = {}, {}",
                aut.operator_count(),
                p_group_label(aut.operator_count())
            );
            let _ = writeln!(out, "|Inn| = {inn_order}");
            let _ = writeln!(out, "generators: {generators:?}");
            let _ = writeln!(out, "automorphism images on the generators:");
            for row in &generator_images {
                let _ = writeln!(out, "  {row:?}");
            }
            emit(&out);
        }
    }
    Ok(0)
}

fn series_text(kind: KindArg, series: &SeriesResult) -> String {
    use std::fmt::Write as _;
    let letter = match kind {
        KindArg::K => "K",
        KindArg::L => "L",
    };
    let mut out = String::new();
    for (i, term) in series.terms.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {letter}{i}: order {}, members {:?}",
            term.order(),
            term.members()
        );
    }
    if series.terminated {
        let target = match series.kind {
            SeriesKind::K => "the trivial subgroup",
            SeriesKind::L => "the whole group",
        };
        let _ = writeln!(out, "terminated: reached {target}");
    } else {
        let _ = writeln!(out, "stalled: limit has order {}", series.limit().order());
    }
    out
}

fn cmd_series(
    cli: &Cli,
    limits: AutLimits,
    spec: &str,
    operators: OperatorsArg,
    kind: KindArg,
) -> Result<i32, String> {
    let (_, group) = load_group(spec)?;
    let act = match operators {
        OperatorsArg::Aut => automorphism_group_with(&group, limits)
            .map_err(|e| aut_stage_error(&format!("series {}", group.name()), &e))?,
        OperatorsArg::Inn => inner_automorphisms(&group),
        OperatorsArg::Fitting => {
            let fitting =
                fitting_subgroup(&group).map_err(|e| format!("series {}: {e}", group.name()))?;
            subgroup_conjugation_action(&group, &fitting)
        }
    };
    let series = match kind {
        KindArg::K => k_series(&act),
        KindArg::L => l_series(&act),
    };
    let operators_name = match operators {
        OperatorsArg::Aut => "aut",
        OperatorsArg::Inn => "inn",
        OperatorsArg::Fitting => "fitting",
    };
    match cli.format {
        Format::Json => {
            let doc = json!({
                "group": group.name(),
                "order": group.order(),
                "operators": operators_name,
                "kind": match kind { KindArg::K => "k", KindArg::L => "l" },
                "terms": series.terms.iter().map(|t| json!({
                    "order": t.order(),
                    "members": t.members(),
                })).collect::<Vec<_>>(),
                "terminated": series.terminated,
            });
            emit(&format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("plain data")
            ));
        }
        Format::Text => {
            let direction = match kind {
                KindArg::K => "descending",
                KindArg::L => "ascending",
            };
            emit(&format!(
                "{direction} series of {} (order {}) under {operators_name} operators\n",
                group.name(),
                group.order()
            ));
            emit(&series_text(kind, &series));
        }
    }
    Ok(0)
}

fn cmd_scan(cli: &Cli, limits: AutLimits, max_order: usize, jobs: usize) -> Result<i32, String> {
    let catalog = builtin_catalog(max_order);
    let count = catalog.len();
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<CrossValidation>>> = Mutex::new(vec![None; count]);
    let workers = jobs.clamp(1, count.max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut cache = AutCache::new(limits);
                let mut clock = make_clock(cli.timings);
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= count {
                        break;
                    }
                    let cv = cross_validate_timed(&catalog[i].group, &mut cache, &mut *clock);
                    slots.lock().expect("no panics while scanning")[i] = Some(cv);
                }
            });
        }
    });
    let results: Vec<CrossValidation> = slots
        .into_inner()
        .expect("no panics while scanning")
        .into_iter()
        .map(|slot| slot.expect("every index was scanned"))
        .collect();

    let autonilpotent = results
        .iter()
        .filter(|cv| cv.verdict() == Some(true))
        .count();
    let skipped: usize = results.iter().map(|cv| cv.skipped_count()).sum();
    let disagreements = results.iter().filter(|cv| !cv.agree).count();
    let summary = format!(
        "scanned {count} groups up to order {max_order}: {autonilpotent} autonilpotent, \
         {skipped} criteria skipped, {disagreements} disagreements"
    );
    match cli.format {
        Format::Json => {
            emit(&report::render_json(&results, cli.timings));
            emit_err(&format!("{summary}\n"));
        }
        Format::Text => {
            emit(&report::render_text(&results, cli.timings));
            emit(&format!("{summary}\n"));
        }
    }
    Ok(if disagreements == 0 { 0 } else { 2 })
}

fn cmd_validate_file(cli: &Cli, path: &Path) -> Result<i32, String> {
    match cayley::load_file(path) {
        Ok(group) => {
            match cli.format {
                Format::Json => {
                    let doc = json!({
                        "ok": true,
                        "group": group.name(),
                        "order": group.order(),
                    });
                    emit(&format!(
                        "{}\n",
                        serde_json::to_string_pretty(&doc).expect("plain data")
                    ));
                }
                Format::Text => {
                    emit(&format!("ok: {} (order {})\n", group.name(), group.order()));
                }
            }
            Ok(0)
        }
        Err(e) => {
            emit_err(&format!("{e}\n"));
            Ok(1)
        }
    }
}
