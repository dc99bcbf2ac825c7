//! Command-line interface over the bound, h-vector, surface, and audit APIs.
//!
//! Exit codes: 0 on success, 1 when a verification subcommand finds an
//! unexpected discrepancy, 2 on usage or domain errors. Output is streamed,
//! and a closed pipe ends the program quietly.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use curvebounds::audit::{
    self, acm_sweep, conjecture_status, degenerate_report, make_grid, verify_cases,
    verify_extremality, verify_table1, BoundReport, HypothesisKind, Reference, ResultId,
};
use curvebounds::bounds::DegreePair;
use curvebounds::hvectors::{
    enumerate_admissible, extremal_hvector, genus_of_hvector, genus_with_defect, HVector,
};
use curvebounds::render::{write_grid_csv, write_magnitude_pgm, write_sign_ppm};
use curvebounds::surfaces::{
    cone_bound, cone_incidence, dp_construction, dp_degree, dp_genus, dp_intersect,
    scroll_bruteforce, scroll_maximize,
};

#[derive(Parser)]
#[command(name = "curvebounds", version, about = "Sharp bounds on intersection counts of space curve pairs", max_term_width = 100)]
struct Cli {
    /// Output format for report-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Audit every applicable intersection bound for one degree pair.
    Bound {
        /// Degree of the first curve.
        #[arg(long)]
        d1: i64,
        /// Degree of the second curve.
        #[arg(long)]
        d2: i64,
    },
    /// Hyperplane-section h-vectors: genus, enumeration, extremal vector.
    #[command(subcommand)]
    Hvec(HvecCommand),
    /// Intersection counts on scrolls, cones, and del Pezzo surfaces.
    #[command(subcommand)]
    Surface(SurfaceCommand),
    /// Recompute published values and case analyses, flagging mismatches.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Render sign/magnitude grids of B_g minus a reference bound.
    Figures {
        /// Bound to compare B_g against.
        #[arg(long, value_enum)]
        reference: RefArg,
        /// Smallest degree on each axis (at least 4).
        #[arg(long)]
        d_min: i64,
        /// Largest degree on each axis (at most 2000).
        #[arg(long)]
        d_max: i64,
        /// Output prefix; writes <prefix>_sign.ppm, <prefix>_mag.pgm,
        /// <prefix>.csv.
        #[arg(long)]
        out_prefix: PathBuf,
    },
}

#[derive(Subcommand)]
enum HvecCommand {
    /// Genus of a curve with the given section h-vector.
    Genus {
        /// Comma-separated entries, e.g. 1,3,4,3,1.
        vector: String,
        /// Deficiency subtracted from the arithmetically Cohen-Macaulay
        /// genus.
        #[arg(long, default_value_t = 0)]
        defect: i64,
    },
    /// All admissible section h-vectors of the given degree, with genera.
    Enumerate {
        /// Sum of the entries (at least 9).
        #[arg(long)]
        d: i64,
    },
    /// The genus-maximizing h-vector of the given degree.
    Extremal {
        /// Sum of the entries (at least 5).
        #[arg(long)]
        d: i64,
    },
}

#[derive(Subcommand)]
enum SurfaceCommand {
    /// Maximal intersection of curves of the given degrees on a cubic
    /// scroll.
    Scroll {
        #[arg(long)]
        d1: i64,
        #[arg(long)]
        d2: i64,
        /// Also scan the whole class box, not just its corners.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Intersection bound on a cubic cone, by vertex incidence.
    Cone {
        #[arg(long)]
        d1: i64,
        #[arg(long)]
        d2: i64,
        /// First curve passes through the vertex.
        #[arg(long, action = ArgAction::Set, default_value_t = false)]
        vertex1: bool,
        /// Second curve passes through the vertex.
        #[arg(long, action = ArgAction::Set, default_value_t = false)]
        vertex2: bool,
    },
    /// Disjoint-from-genus-0 construction on the del Pezzo quartic.
    Delpezzo {
        /// First class parameter (at least 1); degree comes out as 2k+1.
        #[arg(long)]
        k: i64,
        /// Second class parameter (at least 1); degree comes out as 2l+1.
        #[arg(long)]
        l: i64,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check the sixteen-case polynomials and thresholds over a range.
    Cases {
        /// Largest degree swept.
        #[arg(long, default_value_t = 200)]
        max: i64,
    },
    /// Recompute the embedded 7 x 7 reference table.
    Table1,
    /// Sweep the one-curve-ACM regularity inequality.
    AcmSweep {
        /// Largest degree swept.
        #[arg(long, default_value_t = 60)]
        max: i64,
    },
    /// Brute-force the extremal genus over all admissible h-vectors.
    Extremality {
        /// Largest degree checked.
        #[arg(long, default_value_t = 30)]
        max: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RefArg {
    Bdg,
    B,
}

impl From<RefArg> for Reference {
    fn from(r: RefArg) -> Reference {
        match r {
            RefArg::Bdg => Reference::BDg,
            RefArg::B => Reference::B,
        }
    }
}

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if let Some(io_err) = e.downcast_ref::<io::Error>() {
                if io_err.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Bound { d1, d2 } => cmd_bound(&mut out, d1, d2, cli.format),
        Command::Hvec(sub) => cmd_hvec(&mut out, sub, cli.format),
        Command::Surface(sub) => cmd_surface(&mut out, sub, cli.format),
        Command::Verify(sub) => cmd_verify(&mut out, sub, cli.format),
        Command::Figures {
            reference,
            d_min,
            d_max,
            out_prefix,
        } => cmd_figures(&mut out, reference.into(), d_min, d_max, &out_prefix),
    }
}

fn unsupported(format: &str) -> CliResult {
    Err(format!("{format} output is not available for this command").into())
}

fn emit_json<W: Write, T: serde::Serialize>(out: &mut W, value: &T) -> CliResult {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(ExitCode::SUCCESS)
}

fn result_name(result: ResultId) -> &'static str {
    match result {
        ResultId::TrivialProduct => "trivial-product",
        ResultId::DiazGiuffrida => "diaz-giuffrida",
        ResultId::GenusBound => "genus-bound",
        ResultId::CaseAnalysis => "case-analysis",
        ResultId::LowDegree => "low-degree",
        ResultId::EvenLinkageMargin => "even-linkage-margin",
        ResultId::OddLinkageObstruction => "odd-linkage-obstruction",
        ResultId::AcmRegularity => "acm-regularity",
    }
}

fn write_bound_text<W: Write>(out: &mut W, report: &BoundReport) -> io::Result<()> {
    let v = &report.values;
    writeln!(
        out,
        "pair {}: trivial={} B_DG={} B={} B_g={} g_extremal({})={}",
        report.pair,
        v.trivial,
        v.b_dg,
        v.b,
        v.b_g,
        report.pair.sum(),
        v.g_extremal_of_sum
    )?;
    writeln!(out, "best proved: {}", report.best_proved)?;
    for p in &report.provenance {
        let kind = match p.kind {
            HypothesisKind::Arithmetic => "arithmetic",
            HypothesisKind::Geometric => "geometric",
        };
        let rel = if p.strict { "<" } else { "<=" };
        writeln!(
            out,
            "  {:<24} [{kind}] {rel}{}  {}",
            result_name(p.result),
            p.bound,
            p.hypothesis
        )?;
    }
    for flag in &report.flags {
        writeln!(out, "  flag: {flag}")?;
    }
    Ok(())
}

fn cmd_bound<W: Write>(out: &mut W, d1: i64, d2: i64, format: Format) -> CliResult {
    let pair = DegreePair::new(d1, d2)?;
    let report = if pair.min() >= 4 {
        conjecture_status(pair)?
    } else {
        degenerate_report(pair)?
    };
    match format {
        Format::Json => emit_json(out, &report),
        Format::Csv => {
            writeln!(out, "d1,d2,trivial,b_dg,b,b_g,g_extremal_sum,best_proved")?;
            let v = &report.values;
            writeln!(
                out,
                "{d1},{d2},{},{},{},{},{},{}",
                v.trivial, v.b_dg, v.b, v.b_g, v.g_extremal_of_sum, report.best_proved
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Format::Text => {
            write_bound_text(out, &report)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_hvec<W: Write>(out: &mut W, sub: HvecCommand, format: Format) -> CliResult {
    match sub {
        HvecCommand::Genus { vector, defect } => {
            let h = HVector::parse(&vector)?;
            let profile = genus_with_defect(&h, defect)?;
            match format {
                Format::Json => emit_json(out, &profile),
                Format::Csv => unsupported("csv"),
                Format::Text => {
                    writeln!(out, "{}", profile.genus)?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        HvecCommand::Enumerate { d } => {
            let vectors = enumerate_admissible(d)?;
            match format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct Row {
                        hvector: HVector,
                        genus: i64,
                    }
                    let rows: Vec<Row> = vectors
                        .into_iter()
                        .map(|h| Row {
                            genus: genus_of_hvector(&h),
                            hvector: h,
                        })
                        .collect();
                    emit_json(out, &rows)
                }
                Format::Csv => {
                    writeln!(out, "hvector,genus")?;
                    for h in &vectors {
                        writeln!(out, "{h},{}", genus_of_hvector(h))?;
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Format::Text => {
                    for h in &vectors {
                        writeln!(out, "{h} g={}", genus_of_hvector(h))?;
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        HvecCommand::Extremal { d } => {
            let h = extremal_hvector(d)?;
            let genus = curvebounds::bounds::g_extremal(d)?;
            match format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct Extremal {
                        hvector: HVector,
                        g_extremal: i64,
                    }
                    emit_json(
                        out,
                        &Extremal {
                            hvector: h,
                            g_extremal: genus,
                        },
                    )
                }
                Format::Csv => unsupported("csv"),
                Format::Text => {
                    writeln!(out, "{h}")?;
                    writeln!(out, "g_extremal={genus}")?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
    }
}

fn cmd_surface<W: Write>(out: &mut W, sub: SurfaceCommand, format: Format) -> CliResult {
    match sub {
        SurfaceCommand::Scroll { d1, d2, bruteforce } => {
            let pair = DegreePair::new(d1, d2)?;
            let opt = scroll_maximize(pair)?;
            let scan = if bruteforce {
                Some(scroll_bruteforce(pair)?)
            } else {
                None
            };
            match format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct ScrollReport {
                        #[serde(flatten)]
                        optimum: curvebounds::surfaces::OptResult,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        bruteforce: Option<i64>,
                    }
                    emit_json(
                        out,
                        &ScrollReport {
                            optimum: opt,
                            bruteforce: scan,
                        },
                    )
                }
                Format::Csv => unsupported("csv"),
                Format::Text => {
                    for (n, ((a1, a2), (c1, c2))) in
                        opt.maximizers.iter().zip(opt.classes.iter()).enumerate()
                    {
                        let lead = if n == 0 {
                            format!("max={}", opt.maximum)
                        } else {
                            "also".to_string()
                        };
                        writeln!(out, "{lead} at ({a1},{a2}): {c1} and {c2}")?;
                    }
                    if let Some(value) = scan {
                        writeln!(out, "bruteforce={value}")?;
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        SurfaceCommand::Cone {
            d1,
            d2,
            vertex1,
            vertex2,
        } => {
            let pair = DegreePair::new(d1, d2)?;
            let incidence = cone_incidence(pair, vertex1, vertex2)?;
            let bound = cone_bound(pair, &incidence)?;
            match format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct ConeReport {
                        #[serde(flatten)]
                        incidence: curvebounds::surfaces::ConeIncidence,
                        #[serde(flatten)]
                        bound: curvebounds::surfaces::ConeBound,
                    }
                    emit_json(out, &ConeReport { incidence, bound })
                }
                Format::Csv => unsupported("csv"),
                Format::Text => {
                    writeln!(out, "{}", bound.value)?;
                    writeln!(
                        out,
                        "both_through_vertex={} meets_generic={} residues=({},{})",
                        bound.both_through_vertex, bound.meets_generic, incidence.i,
                        incidence.j
                    )?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        SurfaceCommand::Delpezzo { k, l } => {
            let (c1, c2) = dp_construction(k, l)?;
            let meet = dp_intersect(&c1, &c2);
            match format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct DelPezzoReport {
                        c1: curvebounds::surfaces::DelPezzoClass,
                        c2: curvebounds::surfaces::DelPezzoClass,
                        degrees: (i64, i64),
                        genera: (i64, i64),
                        intersection: i64,
                    }
                    emit_json(
                        out,
                        &DelPezzoReport {
                            degrees: (dp_degree(&c1), dp_degree(&c2)),
                            genera: (dp_genus(&c1), dp_genus(&c2)),
                            intersection: meet,
                            c1,
                            c2,
                        },
                    )
                }
                Format::Csv => unsupported("csv"),
                Format::Text => {
                    writeln!(
                        out,
                        "C1 = {c1}  degree {} genus {}",
                        dp_degree(&c1),
                        dp_genus(&c1)
                    )?;
                    writeln!(
                        out,
                        "C2 = {c2}  degree {} genus {}",
                        dp_degree(&c2),
                        dp_genus(&c2)
                    )?;
                    writeln!(out, "intersection = {meet}")?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
    }
}

fn verdict(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify<W: Write>(out: &mut W, sub: VerifyCommand, format: Format) -> CliResult {
    if format == Format::Csv {
        return unsupported("csv");
    }
    match sub {
        VerifyCommand::Cases { max } => {
            let summary = verify_cases(max)?;
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string(&summary)?)?;
            } else {
                writeln!(out, "checked {} pairs to max {}", summary.pairs_checked, max)?;
                writeln!(out, "identity: {} failures", summary.identity_failures.len())?;
                writeln!(
                    out,
                    "threshold: {} failures",
                    summary.implication_failures.len()
                )?;
                writeln!(
                    out,
                    "converse counterexamples: {}",
                    summary.converse_counterexamples.len()
                )?;
                for f in summary
                    .identity_failures
                    .iter()
                    .chain(&summary.implication_failures)
                {
                    writeln!(out, "  {}: {}", f.pair, f.detail)?;
                }
            }
            Ok(verdict(summary.all_passed()))
        }
        VerifyCommand::Table1 => {
            let summary = verify_table1();
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string(&summary)?)?;
            } else {
                let flagged: Vec<String> = summary
                    .mismatches
                    .iter()
                    .map(|m| format!("({},{})", m.d1, m.d2))
                    .collect();
                writeln!(
                    out,
                    "{}/{} match; {} flagged",
                    summary.matching_cells,
                    summary.cells.len(),
                    if flagged.is_empty() {
                        "none".to_string()
                    } else {
                        flagged.join(" ")
                    }
                )?;
                for m in &summary.mismatches {
                    writeln!(
                        out,
                        "  {} ({},{}): printed {}, computed {}",
                        m.column, m.d1, m.d2, m.printed, m.computed
                    )?;
                }
            }
            Ok(verdict(summary.only_known_misprint()))
        }
        VerifyCommand::AcmSweep { max } => {
            let summary = acm_sweep(max)?;
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string(&summary)?)?;
            } else {
                writeln!(
                    out,
                    "checked {} pairs to max {}; {} flagged; expected profile: {}",
                    summary.pairs_checked,
                    max,
                    summary.flagged.len(),
                    summary.expected_profile
                )?;
                for note in &summary.notes {
                    writeln!(out, "  note: {note}")?;
                }
            }
            Ok(verdict(summary.expected_profile))
        }
        VerifyCommand::Extremality { max } => {
            let summary = verify_extremality(max)?;
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string(&summary)?)?;
            } else {
                writeln!(
                    out,
                    "checked {} degrees, {} failures",
                    summary.checked,
                    summary.failures.len()
                )?;
                if summary.all_passed() {
                    writeln!(out, "max genus = g_extremal for all d")?;
                }
                for f in &summary.failures {
                    writeln!(out, "  {f}")?;
                }
            }
            Ok(verdict(summary.all_passed()))
        }
    }
}

fn cmd_figures<W: Write>(
    out: &mut W,
    reference: Reference,
    d_min: i64,
    d_max: i64,
    out_prefix: &std::path::Path,
) -> CliResult {
    if d_max > 2000 {
        return Err(format!("--d-max {d_max} exceeds the ceiling of 2000").into());
    }
    let grid = make_grid(reference, d_min, d_max)?;
    let prefix = out_prefix.to_string_lossy();
    let targets: [(&str, fn(&audit::SignGrid, &mut BufWriter<File>) -> io::Result<()>); 3] = [
        ("_sign.ppm", |g, w| write_sign_ppm(g, w)),
        ("_mag.pgm", |g, w| write_magnitude_pgm(g, w)),
        (".csv", |g, w| write_grid_csv(g, w)),
    ];
    for (suffix, render) in targets {
        let path = format!("{prefix}{suffix}");
        let mut file = BufWriter::new(File::create(&path)?);
        render(&grid, &mut file)?;
        file.flush()?;
        writeln!(out, "{path}")?;
    }
    Ok(ExitCode::SUCCESS)
}
