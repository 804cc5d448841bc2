use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use primpoints_core::arith::text::{parse_literal, parse_rational, to_literal};
use primpoints_core::arith::{factor_over_q, UniPoly};
use primpoints_core::hyperell::text::parse_divisor;
use primpoints_core::hyperell::{rr_space, Divisor, HyperCurve};
use primpoints_core::numfield::{primitivity, Primitivity};
use primpoints_core::permact::{is_transitive, minimal_blocks, verify_stabilizer_lemma, PermGroup};
use primpoints_core::pipeline::{construct_primitive_curve, fiber_function, witness_field};

use crate::error::{exit, CliError, CliResult};
use crate::formats::{classify_table, parse_curve_file, parse_mw_file, parse_table, read_file, write_verdicts};
use crate::report::{self, PointsHeader};
use crate::run::{classify_points_par, sample_betas, sample_fibers, twist_census_par};

#[derive(Debug, Parser)]
#[command(name = "primpoints", version, about = "Low-degree and primitive points on hyperelliptic curves")]
pub struct Cli {
    /// Emit a JSON document instead of the text report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Print timings to standard error.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finiteness verdicts for every row of a cover table (CSV).
    Classify { csv_in: PathBuf },
    /// Classify degree-d points over a finite Mordell-Weil group.
    Points {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        mw: PathBuf,
        #[arg(short, long)]
        degree: u64,
        /// Worker threads; the report does not depend on this.
        #[arg(short, long)]
        jobs: Option<usize>,
    },
    /// Is the field defined by an irreducible polynomial primitive?
    Field {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Riemann-Roch space of a divisor on a curve.
    Rr {
        #[arg(long)]
        curve: PathBuf,
        #[arg(allow_hyphen_values = true)]
        divisor: String,
    },
    /// Build a curve with a ramified point whose residue field is primitive.
    Construct {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        alpha_seed: String,
    },
    /// Sample fibers of a function on a constructed curve.
    Fiber {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        alpha_seed: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Height bound for sampled values.
        #[arg(long, default_value_t = 50)]
        height: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        jobs: Option<usize>,
    },
    /// Search quadratic twists r y^2 = f(x) for rational points.
    Twists {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Largest |r|.
        #[arg(long)]
        bound: u64,
        /// Height bound for x.
        #[arg(long)]
        height: u64,
        #[arg(short, long)]
        jobs: Option<usize>,
    },
    /// Primitivity of a permutation group given by generators in cycle
    /// notation on the points 0..n-1.
    Perm {
        #[arg(short = 'n', long)]
        degree: usize,
        #[arg(required = true)]
        gens: Vec<String>,
    },
}

/// Runs the tool; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::IO_OR_PARSE } else { exit::OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    let result = execute(&cli, err);
    if cli.verbose > 0 {
        let _ = writeln!(err, "elapsed {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(text) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, text) {
                    let _ = writeln!(err, "error: {}", CliError::io(path, e));
                    return exit::IO_OR_PARSE;
                }
            } else if out.write_all(text.as_bytes()).is_err() {
                return exit::IO_OR_PARSE;
            }
            exit::OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn poly_arg(s: &str) -> CliResult<UniPoly> {
    parse_literal(s).map_err(|e| CliError::Parse(format!("polynomial `{s}`: {e}")))
}

fn load_curve(path: &std::path::Path) -> CliResult<(String, HyperCurve)> {
    let cf = parse_curve_file(&read_file(path)?)?;
    let label = cf.label.unwrap_or_else(|| to_literal(&cf.f));
    let c = HyperCurve::new(&cf.f).map_err(|e| CliError::core(format!("curve {}", path.display()), e))?;
    Ok((label, c))
}

fn render(json: bool, text: impl FnOnce() -> String, doc: impl FnOnce() -> serde_json::Value) -> String {
    if json {
        report::to_json_string(&doc())
    } else {
        text()
    }
}

fn execute(cli: &Cli, err: &mut dyn Write) -> CliResult<String> {
    let json = cli.json;
    match &cli.command {
        Command::Classify { csv_in } => {
            let rows = parse_table(&read_file(csv_in)?)?;
            let verdicts = classify_table(&rows);
            Ok(render(json, || write_verdicts(&verdicts), || report::classify_json(&verdicts)))
        }
        Command::Points { curve, mw, degree, jobs } => {
            let (label, c) = load_curve(curve)?;
            let spec = parse_mw_file(&read_file(mw)?)?;
            let (verdicts, summary) =
                classify_points_par(&c, &spec, *degree, *jobs).map_err(|e| CliError::core("points", e))?;
            let h = PointsHeader { label: &label, curve: &c, degree: *degree, group_order: spec.order() };
            Ok(render(
                json,
                || report::points_text(&h, &verdicts, &summary),
                || report::points_json(&h, &verdicts, &summary),
            ))
        }
        Command::Field { poly } => {
            let m = poly_arg(poly)?;
            let fac = factor_over_q(&m).map_err(|e| CliError::core("field", e))?;
            if !fac.is_irreducible() {
                let parts: Vec<String> =
                    fac.factors.iter().map(|(p, k)| format!("({})^{k}", to_literal(p))).collect();
                let _ = writeln!(err, "factors: {}", parts.join(" "));
                return Err(CliError::core("field", primpoints_core::Error::ReduciblePolynomial));
            }
            let v = primitivity(&m).map_err(|e| CliError::core("field", e))?;
            let (word, sub) = match v {
                Primitivity::Trivial => ("trivial (degree 1)".to_string(), None),
                Primitivity::Primitive => ("primitive".to_string(), None),
                Primitivity::Imprimitive { subfield_degree } => {
                    (format!("imprimitive (subfield degree {subfield_degree})"), Some(subfield_degree))
                }
            };
            Ok(render(
                json,
                || format!("{word}\n"),
                || {
                    json!({
                        "schema": report::SCHEMA_FIELD,
                        "poly": to_literal(&m),
                        "degree": m.degree(),
                        "primitive": v == Primitivity::Primitive,
                        "subfield_degree": sub,
                    })
                },
            ))
        }
        Command::Rr { curve, divisor } => {
            let (_, c) = load_curve(curve)?;
            let d: Divisor = parse_divisor(divisor).map_err(|e| CliError::Parse(format!("divisor: {e}")))?;
            for pt in d.points() {
                c.validate_point(pt).map_err(|e| CliError::core("divisor", e))?;
            }
            let s = rr_space(&c, &d).map_err(|e| CliError::core("rr", e))?;
            Ok(render(json, || report::rr_text(&s), || report::rr_json(&s)))
        }
        Command::Construct { poly, alpha_seed } => {
            let m = poly_arg(poly)?;
            let seed = parse_rational(alpha_seed).map_err(|e| CliError::Parse(format!("alpha seed: {e}")))?;
            let pc = construct_primitive_curve(&m, &seed).map_err(|e| CliError::core("construct", e))?;
            let field = witness_field(&pc)?;
            Ok(render(json, || report::construct_text(&pc, &field), || report::construct_json(&pc, &field)))
        }
        Command::Fiber { poly, alpha_seed, samples, height, seed, jobs } => {
            let m = poly_arg(poly)?;
            let a = parse_rational(alpha_seed).map_err(|e| CliError::Parse(format!("alpha seed: {e}")))?;
            let pc = construct_primitive_curve(&m, &a).map_err(|e| CliError::core("construct", e))?;
            let w = fiber_function(&pc.curve, &Divisor::point(pc.witness.clone(), 1))
                .map_err(|e| CliError::core("fiber", e))?;
            let betas = sample_betas(*seed, *samples, *height);
            let reports = sample_fibers(&pc.curve, &w, &betas, *jobs).map_err(|e| CliError::core("fiber", e))?;
            Ok(render(json, || report::fiber_text(&pc, &w, &reports), || report::fiber_json(&pc, &w, &reports)))
        }
        Command::Twists { poly, bound, height, jobs } => {
            let f = poly_arg(poly)?;
            let res = twist_census_par(&f, *bound, *height, *jobs).map_err(|e| CliError::core("twists", e))?;
            Ok(render(json, || report::twists_text(&res), || report::twists_json(&res)))
        }
        Command::Perm { degree, gens } => {
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let g = PermGroup::from_cycles(*degree, &refs).map_err(|e| CliError::core("perm", e))?;
            if !is_transitive(&g) {
                return Err(CliError::core("perm", primpoints_core::Error::NotTransitive));
            }
            let blocks = minimal_blocks(&g, 0).map_err(|e| CliError::core("perm", e))?;
            let lemma = verify_stabilizer_lemma(&g).ok();
            let word = match &blocks {
                None => "primitive".to_string(),
                Some(b) => format!("imprimitive (block size {})", b.block_size()),
            };
            Ok(render(
                json,
                || {
                    let mut s = format!("{word}\n");
                    if let Some(b) = &blocks {
                        s += &format!("blocks={:?}\n", b.partition);
                    }
                    if let Some(l) = lemma {
                        s += &format!("stabilizer_lemma={l}\n");
                    }
                    s
                },
                || {
                    json!({
                        "schema": report::SCHEMA_PERM,
                        "degree": degree,
                        "primitive": blocks.is_none(),
                        "blocks": blocks.as_ref().map(|b| b.partition.clone()),
                        "stabilizer_lemma": lemma,
                    })
                },
            ))
        }
    }
}
