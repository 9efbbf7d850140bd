//! Batch command-line front end: exact avoider counts, equivalence
//! classification, verification suites, generating-function expansion,
//! offline reference-sequence checks and the explicit bijections.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 resource guard.

mod fixtures;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;

use invseq::bijections as bij;
use invseq::checks::{all_passed, check_classification, run_suite, Check};
use invseq::core::{InversionSequence, RelationPattern, TriplePattern};
use invseq::enumerate::{
    baseline_partition, classify, count_avoiders, count_avoiders_triple,
    count_avoiders_triple_unguarded, AvoiderCount, EquivLevel,
};
use invseq::permutations::Permutation;
use invseq::series::{gf_catalog, CatalogKind, CatalogSeries};
use invseq::Error;

/// Guard for CLI pattern counts: the least-avoided class has ~10^8 avoiders
/// at length 12 already.
const MAX_CLI_PAIR_N: usize = 12;

#[derive(Parser)]
#[command(name = "invseq", version, about = "Exact enumeration of inversion sequences avoiding consecutive patterns of relations", long_about = None)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Deterministic output: omit the generated-at timestamp from JSON.
    #[arg(long, global = true)]
    reproducible: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count avoiders of a pattern "R1,R2" or classical triple "R1,R2,R3".
    ///
    /// Relation tokens: <= >= < > = != and - (triples only).
    Count {
        /// The pattern, e.g. ">,<=" or ">,<=,-" (quote it in a shell).
        pattern: String,
        /// A length or inclusive range of lengths, e.g. "7" or "1..9".
        #[arg(long, default_value = "1..9")]
        n: String,
        /// Also report counts refined by last entry.
        #[arg(long)]
        by_last_entry: bool,
        /// Also report counts refined by number of distinct entries.
        #[arg(long)]
        by_dist: bool,
    },
    /// Partition the 36 patterns into generalized equivalence classes.
    ///
    /// Exits nonzero if the computed partition contradicts the established
    /// classification (exact match required at --nmax 10).
    Classify {
        #[arg(long, value_enum, default_value_t = Level::Strong)]
        level: Level,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// Run a verification suite.
    ///
    /// Suites: table1, table2, bijections, series, recurrences, dictionary,
    /// dist-symmetry, classification, all.
    Verify {
        suite: String,
    },
    /// Expand a generating function from the catalog.
    ///
    /// Names: catalan, ogf_gt_le, egf_ne_ne, egf_lt_lt, and the bivariate
    /// I_lt_dash_lt, I_ne_lt, I_ne_le, I_gt_lt, I_gt_le, I_gt_ne, I_ge_ne,
    /// I_eq_lt, I_eq_le, I_ge_le_ne.
    Series {
        name: String,
        #[arg(long, default_value_t = 16)]
        order: usize,
        /// Specialize a bivariate series at a rational t, e.g. "1" or "1/2".
        #[arg(long)]
        t: Option<String>,
    },
    /// Compare recomputed counts against the embedded reference sequences.
    OeisCheck {
        /// A single reference id, e.g. A071356.
        #[arg(long)]
        id: Option<String>,
        /// Check every embedded reference sequence.
        #[arg(long)]
        all: bool,
    },
    /// Apply one of the explicit bijections to a value.
    Map {
        /// theta, theta-inverse, complement, raise-plateaus, lower-plateaus,
        /// to-involution, from-involution, to-subset, from-subset,
        /// to-composition, from-composition, to-dyck-path, from-dyck-path,
        /// to-marked-path, from-marked-path, to-slanted-path,
        /// from-slanted-path, to-multi-marked-path, from-multi-marked-path,
        /// to-multi-slanted-path, from-multi-slanted-path
        name: String,
        /// The input value in its textual encoding.
        input: String,
        /// Sequence length (required by from-subset).
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Wilf,
    Strong,
    Superstrong,
}

impl From<Level> for EquivLevel {
    fn from(l: Level) -> EquivLevel {
        match l {
            Level::Wilf => EquivLevel::Wilf,
            Level::Strong => EquivLevel::Strong,
            Level::Superstrong => EquivLevel::SuperStrong,
        }
    }
}

fn main() -> ExitCode {
    // die quietly when stdout is closed early (e.g. piped into head)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn guards_lifted() -> bool {
    std::env::var("INVSEQ_UNSAFE_NO_GUARD").is_ok_and(|v| !v.is_empty() && v != "0")
}

fn run(cli: &Cli) -> invseq::Result<ExitCode> {
    match &cli.command {
        Command::Count { pattern, n, by_last_entry, by_dist } => {
            let range = parse_range(n)?;
            cmd_count(cli, pattern, &range, *by_last_entry, *by_dist)
        }
        Command::Classify { level, nmax } => cmd_classify(cli, (*level).into(), *nmax),
        Command::Verify { suite } => cmd_verify(cli, suite),
        Command::Series { name, order, t } => cmd_series(cli, name, *order, t.as_deref()),
        Command::OeisCheck { id, all } => cmd_oeis_check(cli, id.as_deref(), *all),
        Command::Map { name, input, n } => cmd_map(cli, name, input, *n),
    }
}

fn parse_range(spec: &str) -> invseq::Result<Vec<usize>> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|e| Error::Parse(format!("bad range start: {e}")))?;
        let hi: usize = hi.trim().parse().map_err(|e| Error::Parse(format!("bad range end: {e}")))?;
        if lo > hi {
            return Err(Error::Parse(format!("empty range {spec:?}")));
        }
        Ok((lo..=hi).collect())
    } else {
        let n: usize = spec.parse().map_err(|e| Error::Parse(format!("bad length: {e}")))?;
        Ok(vec![n])
    }
}

fn timestamp(cli: &Cli, value: &mut serde_json::Value) {
    if !cli.reproducible {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        value["generated_at_unix"] = serde_json::json!(secs);
    }
}

// ---- count ----

fn cmd_count(
    cli: &Cli,
    pattern: &str,
    range: &[usize],
    by_last_entry: bool,
    by_dist: bool,
) -> invseq::Result<ExitCode> {
    let tokens = pattern.split(',').count();
    let mut rows: Vec<AvoiderCount> = Vec::new();
    match tokens {
        2 => {
            let p = RelationPattern::from_str(pattern)?;
            for &n in range {
                if n > MAX_CLI_PAIR_N && !guards_lifted() {
                    return Err(Error::ResourceLimit { what: "count", n, max: MAX_CLI_PAIR_N });
                }
                rows.push(count_avoiders(p, n));
            }
        }
        3 => {
            let t = TriplePattern::from_str(pattern)?;
            for &n in range {
                rows.push(if guards_lifted() {
                    count_avoiders_triple_unguarded(t, n)
                } else {
                    count_avoiders_triple(t, n)?
                });
            }
        }
        _ => return Err(Error::Parse(format!("expected 2 or 3 relation tokens, got {pattern:?}"))),
    }

    match cli.format {
        Format::Table => {
            println!("pattern: {pattern}");
            for c in &rows {
                print!("n={:<3} total={}", c.n, c.total);
                if by_last_entry {
                    print!("  by_last_entry={}", fmt_map(&c.by_last_entry));
                }
                if by_dist {
                    print!("  by_dist={}", fmt_map(&c.by_dist));
                }
                println!();
            }
        }
        Format::Csv => {
            let mut header = String::from("n,total");
            if by_last_entry {
                header.push_str(",by_last_entry");
            }
            if by_dist {
                header.push_str(",by_dist");
            }
            println!("{header}");
            for c in &rows {
                let mut line = format!("{},{}", c.n, c.total);
                if by_last_entry {
                    line.push_str(&format!(",{}", fmt_map_csv(&c.by_last_entry)));
                }
                if by_dist {
                    line.push_str(&format!(",{}", fmt_map_csv(&c.by_dist)));
                }
                println!("{line}");
            }
        }
        Format::Json => {
            let mut counts = Vec::new();
            for c in &rows {
                let mut v = serde_json::to_value(c).expect("serializable");
                if !by_last_entry {
                    v.as_object_mut().unwrap().remove("by_last_entry");
                }
                if !by_dist {
                    v.as_object_mut().unwrap().remove("by_dist");
                }
                counts.push(v);
            }
            let mut out = serde_json::json!({ "pattern": pattern, "counts": counts });
            timestamp(cli, &mut out);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn fmt_map(m: &std::collections::BTreeMap<u32, u128>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(","))
}

fn fmt_map_csv(m: &std::collections::BTreeMap<u32, u128>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    parts.join(";")
}

// ---- classify ----

fn cmd_classify(cli: &Cli, level: EquivLevel, nmax: usize) -> invseq::Result<ExitCode> {
    let report = classify(level, nmax)?;
    let baseline = baseline_partition(level);
    let exact = report.classes == baseline;
    let baseline_report = invseq::enumerate::EquivalenceReport {
        level,
        n_max: 10,
        classes: baseline.clone(),
    };
    // with less data the partition may only be coarser, never finer
    let consistent = if nmax >= 10 { exact } else { report.is_coarsening_of(&baseline_report) };

    match cli.format {
        Format::Json => {
            let classes: Vec<Vec<String>> = report
                .classes
                .iter()
                .map(|c| c.iter().map(|p| p.to_string()).collect())
                .collect();
            let mut out = serde_json::json!({
                "level": level.to_string(),
                "n_max": nmax,
                "class_count": report.classes.len(),
                "classes": classes,
                "matches_baseline": exact,
                "consistent_with_baseline": consistent,
            });
            timestamp(cli, &mut out);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => {
            println!("level: {level}  n_max: {nmax}  classes: {}", report.classes.len());
            for class in &report.classes {
                let names: Vec<String> = class.iter().map(|p| format!("({p})")).collect();
                println!("{{{}}}", names.join(" ; "));
            }
            println!(
                "{}",
                if exact {
                    "partition matches the established classification"
                } else if consistent {
                    "partition is a coarsening of the established classification (increase --nmax)"
                } else {
                    "partition CONTRADICTS the established classification"
                }
            );
        }
    }
    Ok(if consistent { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---- verify ----

fn cmd_verify(cli: &Cli, suite: &str) -> invseq::Result<ExitCode> {
    let checks: Vec<Check> = match suite {
        "classification" => check_classification(10)?,
        "all" => {
            let mut cs = run_suite("all")?;
            cs.extend(check_classification(10)?);
            cs
        }
        _ => run_suite(suite)?,
    };
    let ok = all_passed(&checks);
    match cli.format {
        Format::Json => {
            let mut out = serde_json::json!({
                "suite": suite,
                "passed": ok,
                "checks": checks,
            });
            timestamp(cli, &mut out);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => {
            for c in &checks {
                println!("{} {} — {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            println!(
                "suite {suite}: {} ({} checks)",
                if ok { "PASS" } else { "FAIL" },
                checks.len()
            );
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---- series ----

fn cmd_series(cli: &Cli, name: &str, order: usize, t: Option<&str>) -> invseq::Result<ExitCode> {
    let entry = gf_catalog(name, order)?;
    let kind = match entry.kind() {
        CatalogKind::Ogf => "ogf",
        CatalogKind::Egf => "egf",
        CatalogKind::Bivariate => "bivariate",
    };
    let specialized = match (&entry, t) {
        (CatalogSeries::Bivariate(b), Some(t)) => {
            let t: BigRational = t
                .parse()
                .map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))?;
            Some(b.specialize_t(&t))
        }
        (_, Some(_)) => {
            return Err(Error::Parse(format!("--t only applies to bivariate series, {name} is {kind}")))
        }
        _ => None,
    };

    match cli.format {
        Format::Json => {
            let coefficients = match (&entry, &specialized) {
                (_, Some(u)) => serde_json::json!(u
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()),
                (CatalogSeries::Univariate(_, u), None) => serde_json::json!(u
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()),
                (CatalogSeries::Bivariate(b), None) => serde_json::json!(b
                    .coeffs()
                    .iter()
                    .map(|p| {
                        if p.coeffs().is_empty() {
                            vec!["0".to_string()]
                        } else {
                            p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
                        }
                    })
                    .collect::<Vec<_>>()),
            };
            let mut out = serde_json::json!({
                "name": name,
                "kind": kind,
                "order": order,
                "coefficients": coefficients,
            });
            if let Some(t) = t {
                out["t"] = serde_json::json!(t);
            }
            timestamp(cli, &mut out);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => {
            match (&entry, &specialized) {
                (_, Some(u)) => println!("{u}"),
                (CatalogSeries::Univariate(_, u), None) => println!("{u}"),
                (CatalogSeries::Bivariate(b), None) => println!("{b}"),
            };
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---- oeis-check ----

fn cmd_oeis_check(cli: &Cli, id: Option<&str>, all: bool) -> invseq::Result<ExitCode> {
    let fixtures = match (id, all) {
        (Some(id), false) => {
            vec![fixtures::find(id).ok_or_else(|| Error::UnknownName {
                kind: "reference sequence",
                name: id.into(),
            })?]
        }
        (None, _) => fixtures::all_fixtures(),
        (Some(_), true) => {
            return Err(Error::Parse("--id and --all are mutually exclusive".into()))
        }
    };

    let mut ok = true;
    let mut reports = Vec::new();
    for f in &fixtures {
        let computed: Vec<u128> = match &f.linked {
            fixtures::Linked::Patterns(ps) => {
                let p = RelationPattern::from_str(ps[0])?;
                (0..f.terms.len()).map(|i| count_avoiders(p, f.offset + i).total).collect()
            }
            fixtures::Linked::Triple(t) => {
                let t = TriplePattern::from_str(t)?;
                (0..f.terms.len())
                    .map(|i| count_avoiders_triple(t, f.offset + i).map(|c| c.total))
                    .collect::<invseq::Result<_>>()?
            }
        };
        let matches = computed == f.terms;
        ok &= matches;
        reports.push((f, computed, matches));
    }

    match cli.format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = reports
                .iter()
                .map(|(f, computed, matches)| {
                    serde_json::json!({
                        "id": f.oeis_id,
                        "description": f.description,
                        "offset": f.offset,
                        "reference": f.terms.iter().map(u128::to_string).collect::<Vec<_>>(),
                        "computed": computed.iter().map(u128::to_string).collect::<Vec<_>>(),
                        "match": matches,
                    })
                })
                .collect();
            let mut out = serde_json::json!({ "passed": ok, "sequences": entries });
            timestamp(cli, &mut out);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => {
            for (f, computed, matches) in &reports {
                if *matches {
                    println!("MATCH {} — {} terms ({})", f.oeis_id, f.terms.len(), f.description);
                } else {
                    println!(
                        "MISMATCH {} — reference {:?}, computed {:?}",
                        f.oeis_id, f.terms, computed
                    );
                }
            }
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---- map ----

fn cmd_map(cli: &Cli, name: &str, input: &str, n: Option<usize>) -> invseq::Result<ExitCode> {
    let seq = |s: &str| InversionSequence::from_str(s);
    let output: String = match name {
        "theta" => bij::inversion_sequence_of(&Permutation::from_str(input)?).to_string(),
        "theta-inverse" => bij::permutation_of(&seq(input)?).to_string(),
        "complement" => seq(input)?.complement().to_string(),
        "raise-plateaus" => bij::raise_plateaus(&seq(input)?)?.to_string(),
        "lower-plateaus" => bij::lower_plateaus(&seq(input)?)?.to_string(),
        "to-involution" => bij::to_involution(&seq(input)?)?.to_string(),
        "from-involution" => bij::from_involution(&Permutation::from_str(input)?)?.to_string(),
        "to-subset" => fmt_subset(&bij::to_subset(&seq(input)?)?),
        "from-subset" => {
            let n = n.ok_or_else(|| Error::Parse("from-subset requires --n".into()))?;
            bij::from_subset(&parse_subset(input)?, n)?.to_string()
        }
        "to-composition" => {
            let parts = bij::to_composition(&seq(input)?)?;
            parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        }
        "from-composition" => {
            let parts: Vec<u32> = input
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse().map_err(|e| Error::Parse(format!("bad part: {e}"))))
                .collect::<invseq::Result<_>>()?;
            bij::from_composition(&parts)?.to_string()
        }
        "to-dyck-path" => bij::to_dyck_path(&seq(input)?)?.to_string(),
        "from-dyck-path" => bij::from_dyck_path(&input.parse()?)?.to_string(),
        "to-marked-path" => bij::to_marked_path(&seq(input)?)?.to_string(),
        "from-marked-path" => bij::from_marked_path(&input.parse()?)?.to_string(),
        "to-slanted-path" => bij::to_slanted_path(&seq(input)?)?.to_string(),
        "from-slanted-path" => bij::from_slanted_path(&input.parse()?)?.to_string(),
        "to-multi-marked-path" => bij::to_multi_marked_path(&seq(input)?)?.to_string(),
        "from-multi-marked-path" => bij::from_multi_marked_path(&input.parse()?)?.to_string(),
        "to-multi-slanted-path" => bij::to_multi_slanted_path(&seq(input)?)?.to_string(),
        "from-multi-slanted-path" => bij::from_multi_slanted_path(&input.parse()?)?.to_string(),
        _ => return Err(Error::UnknownName { kind: "bijection", name: name.into() }),
    };

    match cli.format {
        Format::Json => {
            let mut out = serde_json::json!({ "map": name, "input": input, "output": output });
            timestamp(cli, &mut out);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => println!("{output}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn fmt_subset(set: &BTreeSet<u32>) -> String {
    let parts: Vec<String> = set.iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn parse_subset(s: &str) -> invseq::Result<BTreeSet<u32>> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    if inner.trim().is_empty() {
        return Ok(BTreeSet::new());
    }
    inner
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad element {p:?}: {e}"))))
        .collect()
}
