//! Command implementations behind the `rppv` binary.
//!
//! Every command produces a [`CommandReport`] (or, for `slide`/`unslide`/
//! `render`, the requested object) and an exit code: 0 pass, 1 fail,
//! 2 usage or input error.

pub mod criteria;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::coupling::{verify_colored_ybe_mode, ColoredBoundary, ColoredYbeMode, PairRPP};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qt_series::{hook_product_pair, hook_product_single, QTSeries};
use crate::render;
use crate::rpp_core::RPP;
use crate::sliding::{slide, unslide, verify_round_trip};
use crate::vertex_model::{parse_rational, verify_ybe, YbeKind};

/// Enumerations larger than this are refused without `--force`.
pub const STATE_BUDGET: u64 = 10_000_000;

/// Outcome of one command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandReport {
    pub command: String,
    pub status: Status,
    pub details: serde_json::Value,
    pub elapsed: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum YbeMode {
    /// White-white and white-gray, 64 boundaries each.
    OneColor,
    /// Two-colour white-gray with z = yx, 4096 boundaries, plus companions.
    TwoColor,
    /// The all-empty boundary only.
    Smoke,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderObject {
    Maya,
    Hooks,
    Rpp,
    Tiling,
    Pair,
}

#[derive(Parser, Debug)]
#[command(name = "rppv", version, about = "Reverse plane partitions and coloured five-vertex models")]
pub struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hook lengths of a shape.
    Hook {
        #[arg(long)]
        shape: String,
    },
    /// Brute-force generating function against the hook product.
    Genfun {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        max_volume: u32,
        /// Pairs of RPPs weighted by q^{volume} t^{g}.
        #[arg(long)]
        paired: bool,
        /// Run even when the enumeration exceeds the state budget.
        #[arg(long)]
        force: bool,
    },
    /// Exhaustive Yang-Baxter checks.
    Ybe {
        #[arg(long, value_enum, default_value = "one-color")]
        mode: YbeMode,
        /// Sample points, `;`-separated tuples of `,`-separated rationals:
        /// `x,y` (one-colour) or `x,y,t` (two-colour).
        #[arg(long)]
        samples: Option<String>,
    },
    /// Slide a non-interacting pair onto a single RPP, or sweep round trips.
    Slide {
        /// Pair JSON file (`-` for stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Check slide/unslide round trips on a shape instead.
        #[arg(long)]
        round_trip: bool,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_volume: u64,
    },
    /// Split an RPP into its non-interacting pair.
    Unslide {
        /// RPP JSON file (`-` for stdin).
        #[arg(long)]
        input: PathBuf,
    },
    /// Render a Maya diagram, hook table, RPP, tiling or pair.
    Render {
        #[arg(long, value_enum)]
        object: RenderObject,
        #[arg(long)]
        shape: Option<String>,
        /// RPP or pair JSON file (`-` for stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Maya window half-width (default: max(ℓ, λ1) + 1).
        #[arg(long)]
        half_width: Option<usize>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run all eight acceptance checks.
    VerifyAll {
        /// Soft time budget; exceeding it is reported, not fatal.
        #[arg(long, default_value_t = 300.0)]
        budget_seconds: f64,
    },
}

/// Output of a command run: text for stdout and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Parses a JSON partition such as `[4,3,1]`.
pub fn parse_shape(s: &str) -> Result<Partition> {
    serde_json::from_str(s).map_err(|e| Error::BadInput(format!("shape {s:?}: {e}")))
}

/// Parses `a,b;c,d` into tuples of exactly `arity` rationals.
pub fn parse_samples(s: &str, arity: usize) -> Result<Vec<Vec<BigRational>>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let v: Vec<BigRational> = t.split(',').map(parse_rational).collect::<Result<_>>()?;
            if v.len() != arity {
                return Err(Error::BadInput(format!("sample {t:?} needs {arity} values")));
            }
            if v.iter().any(|r| r.is_zero()) {
                return Err(Error::BadInput(format!("sample {t:?} has a zero parameter")));
            }
            Ok(v)
        })
        .collect()
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Error::BadInput(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::BadInput(e.to_string()))
}

/// Exact number of states an enumeration visits: RPPs of volume `≤ N`, or
/// pairs of total volume `≤ N`, read off the hook product.
pub fn enumeration_size(lambda: &Partition, n_max: u32, paired: bool) -> u64 {
    let s = hook_product_single(lambda, n_max);
    let c: Vec<u64> = (0..=n_max).map(|n| s.coeff_u64(n, 0)).collect();
    if paired {
        let mut total = 0u64;
        for a in 0..=n_max as usize {
            for b in 0..=(n_max as usize - a) {
                total = total.saturating_add(c[a].saturating_mul(c[b]));
            }
        }
        total
    } else {
        c.iter().fold(0u64, |a, &b| a.saturating_add(b))
    }
}

fn series_text(s: &QTSeries) -> String {
    s.to_string()
}

fn report(command: &str, ok: bool, details: serde_json::Value, start: Instant) -> CommandReport {
    CommandReport { command: command.into(), status: Status::from_bool(ok), details, elapsed: start.elapsed().as_secs_f64() }
}

/// `hook`.
pub fn cmd_hook(shape: &Partition) -> CommandReport {
    let start = Instant::now();
    let rows: Vec<Vec<usize>> = crate::partitions::hook_table(shape).into_iter().rev().collect();
    report("hook", true, json!({ "shape": shape, "hooks_top_down": rows, "text": render::hook_table_text(shape) }), start)
}

/// `genfun`.
pub fn cmd_genfun(shape: &Partition, n_max: u32, paired: bool, force: bool) -> Result<CommandReport> {
    let start = Instant::now();
    let size = enumeration_size(shape, n_max, paired);
    if size > STATE_BUDGET && !force {
        return Err(Error::BadInput(format!(
            "enumeration would visit {size} states (budget {STATE_BUDGET}); pass --force to run anyway"
        )));
    }
    let (brute, product) = if paired {
        (crate::coupling::pair_genfun_bruteforce(shape, n_max)?, hook_product_pair(shape, n_max))
    } else {
        (criteria::single_bruteforce(shape, n_max), hook_product_single(shape, n_max))
    };
    let equal = brute == product;
    Ok(report(
        "genfun",
        equal,
        json!({
            "shape": shape,
            "max_volume": n_max,
            "paired": paired,
            "states": size,
            "bruteforce": brute.to_json(),
            "product": product.to_json(),
            "bruteforce_text": series_text(&brute),
            "differences": brute.diff_positions(&product),
        }),
        start,
    ))
}

/// `ybe`.
pub fn cmd_ybe(mode: YbeMode, samples: Option<&str>) -> Result<CommandReport> {
    let start = Instant::now();
    match mode {
        YbeMode::OneColor => {
            let xy = match samples {
                Some(s) => parse_samples(s, 2)?.into_iter().map(|v| (v[0].clone(), v[1].clone())).collect(),
                None => criteria::default_xy(),
            };
            let ww = verify_ybe(YbeKind::WhiteWhite, &xy);
            let wg = verify_ybe(YbeKind::WhiteGray, &xy);
            let ok = ww.passed() && wg.passed();
            Ok(report("ybe", ok, json!({ "white_white": ww, "white_gray": wg }), start))
        }
        YbeMode::TwoColor => {
            let xyt = match samples {
                Some(s) => parse_samples(s, 3)?
                    .into_iter()
                    .map(|v| (v[0].clone(), v[1].clone(), v[2].clone()))
                    .collect(),
                None => criteria::default_xyt(),
            };
            let mut sub = serde_json::Map::new();
            let mut ok = true;
            for m in ColoredYbeMode::ALL {
                let r = verify_colored_ybe_mode(m, &xyt)?;
                if m == ColoredYbeMode::WhiteGray {
                    ok = r.passed();
                }
                let first: Vec<_> = r.violations.iter().take(3).collect();
                sub.insert(
                    format!("{m:?}"),
                    json!({ "boundaries": r.boundaries, "samples": r.samples, "violations": r.violations.len(), "first": first }),
                );
            }
            Ok(report("ybe", ok, serde_json::Value::Object(sub), start))
        }
        YbeMode::Smoke => {
            let e = (false, false);
            let bd = ColoredBoundary { i1: e, i2: e, i3: e, j1: e, j2: e, j3: e };
            let (x, y, t) = criteria::default_xyt().remove(0);
            let (l, r) = crate::coupling::colored_ybe_sides(YbeKind::WhiteGray, bd, &x, &y, &t);
            Ok(report("ybe", l == r, json!({ "lhs": l.to_string(), "rhs": r.to_string() }), start))
        }
    }
}

fn emit(obj: &impl Serialize, text: impl FnOnce() -> String, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(obj).expect("serialisable") + "\n",
        _ => text() + "\n",
    }
}

fn report_text(r: &CommandReport) -> String {
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    };
    format!(
        "{} {status} ({:.3}s)\n{}",
        r.command,
        r.elapsed,
        serde_json::to_string_pretty(&r.details).expect("serialisable")
    )
}

fn finish(r: CommandReport, format: Format) -> Outcome {
    let code = if r.status == Status::Pass { 0 } else { 1 };
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(&r).expect("serialisable") + "\n",
        _ => report_text(&r) + "\n",
    };
    Outcome { stdout, code }
}

fn write_or_return(content: String, output: Option<&PathBuf>) -> Result<String> {
    match output {
        Some(p) => {
            fs::write(p, &content).map_err(|e| Error::BadInput(format!("{}: {e}", p.display())))?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(content),
    }
}

fn run_command(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Hook { shape } => {
            let shape = parse_shape(shape)?;
            let r = cmd_hook(&shape);
            Ok(match format {
                Format::Json => finish(r, format),
                _ => Outcome { stdout: render::hook_table_text(&shape) + "\n", code: 0 },
            })
        }
        Command::Genfun { shape, max_volume, paired, force } => {
            Ok(finish(cmd_genfun(&parse_shape(shape)?, *max_volume, *paired, *force)?, format))
        }
        Command::Ybe { mode, samples } => Ok(finish(cmd_ybe(*mode, samples.as_deref())?, format)),
        Command::Slide { input, round_trip, shape, max_volume } => {
            if *round_trip {
                let start = Instant::now();
                let shape = parse_shape(shape.as_deref().ok_or_else(|| Error::BadInput("--round-trip needs --shape".into()))?)?;
                let rep = verify_round_trip(&shape, *max_volume);
                return Ok(finish(report("slide", rep.passed(), json!(rep), start), format));
            }
            let input = input.as_ref().ok_or_else(|| Error::BadInput("slide needs --input or --round-trip".into()))?;
            let pair: PairRPP = parse_json(&read_input(input)?)?;
            let out = slide(&pair)?;
            Ok(Outcome { stdout: emit(&out, || render::rpp_text(&out), format), code: 0 })
        }
        Command::Unslide { input } => {
            let rpp: RPP = parse_json(&read_input(input)?)?;
            let pair = unslide(&rpp)?;
            let text = || format!("blue:\n{}\nred:\n{}", render::rpp_text(pair.blue()), render::rpp_text(pair.red()));
            Ok(Outcome { stdout: emit(&pair, text, format), code: 0 })
        }
        Command::Render { object, shape, input, half_width, output } => {
            let content = render_object(*object, shape.as_deref(), input.as_ref(), *half_width, format)?;
            Ok(Outcome { stdout: write_or_return(content, output.as_ref())?, code: 0 })
        }
        Command::VerifyAll { budget_seconds } => {
            let start = Instant::now();
            let results = criteria::run_all();
            let ok = results.iter().all(|r| r.passed);
            let elapsed = start.elapsed().as_secs_f64();
            let details = json!({
                "criteria": results,
                "budget_seconds": budget_seconds,
                "within_budget": elapsed <= *budget_seconds,
            });
            let r = report("verify-all", ok, details, start);
            Ok(match format {
                Format::Json => finish(r, format),
                _ => {
                    let mut s = String::new();
                    for c in &results {
                        s.push_str(&format!(
                            "{} criterion {}: {} ({:.2}s)\n",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.id,
                            c.name,
                            c.elapsed
                        ));
                    }
                    Outcome { stdout: s, code: if ok { 0 } else { 1 } }
                }
            })
        }
    }
}

fn render_object(
    object: RenderObject,
    shape: Option<&str>,
    input: Option<&PathBuf>,
    half_width: Option<usize>,
    format: Format,
) -> Result<String> {
    let need_shape = || -> Result<Partition> { parse_shape(shape.ok_or_else(|| Error::BadInput("--shape required".into()))?) };
    let need_input = || -> Result<String> { read_input(input.ok_or_else(|| Error::BadInput("--input required".into()))?) };
    let bad_format = |what: &str| Error::BadInput(format!("{what} cannot be rendered as {format:?}"));
    match object {
        RenderObject::Maya => {
            let l = need_shape()?;
            let hw = half_width.unwrap_or(l.len().max(l.first()) + 1);
            match format {
                Format::Ascii | Format::Text => Ok(render::maya_ascii(&l, hw)? + "\n"),
                _ => Err(bad_format("a Maya diagram")),
            }
        }
        RenderObject::Hooks => match format {
            Format::Ascii | Format::Text => Ok(render::hook_table_text(&need_shape()?) + "\n"),
            _ => Err(bad_format("a hook table")),
        },
        RenderObject::Rpp | RenderObject::Tiling => {
            let rpp: RPP = match (input, shape) {
                (Some(_), _) => parse_json(&need_input()?)?,
                (None, Some(_)) => RPP::zero(&need_shape()?),
                (None, None) => return Err(Error::BadInput("--input or --shape required".into())),
            };
            match format {
                Format::Svg => render::tiling_svg(&rpp),
                Format::Json => Ok(serde_json::to_string(&rpp).expect("serialisable") + "\n"),
                _ => Ok(render::rpp_text(&rpp) + "\n"),
            }
        }
        RenderObject::Pair => {
            let pair: PairRPP = parse_json(&need_input()?)?;
            match format {
                Format::Svg => render::pair_svg(&pair),
                Format::Json => Ok(serde_json::to_string(&pair).expect("serialisable") + "\n"),
                _ => Ok(format!(
                    "blue:\n{}\nred:\n{}\ng = {}\n",
                    render::rpp_text(pair.blue()),
                    render::rpp_text(pair.red()),
                    crate::coupling::g_via_lozenges(&pair)?
                )),
            }
        }
    }
}

/// Parses arguments and runs a command. Usage and input errors give exit
/// code 2 with the message on stderr.
pub fn run<I, T>(args: I) -> (Outcome, Option<String>)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                (Outcome { stdout: e.to_string(), code }, None)
            } else {
                (Outcome { stdout: String::new(), code }, Some(e.to_string()))
            };
        }
    };
    let exec = || match run_command(&cli) {
        Ok(o) => (o, None),
        Err(e) => (Outcome { stdout: String::new(), code: 2 }, Some(format!("error: {e}\n"))),
    };
    match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(exec),
            Err(e) => (Outcome { stdout: String::new(), code: 2 }, Some(format!("error: {e}\n"))),
        },
        None => exec(),
    }
}
