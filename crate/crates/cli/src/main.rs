use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use asm_tsscpp::asm::{enumerate_asms, genfun_doubly_refined, Convention};
use asm_tsscpp::nilp::{enumerate_nilps, enumerate_tsscpps, genfun_u, lgv_genfun};
use asm_tsscpp::report::{Check, Report};
use asm_tsscpp::residue::{integral_a_expr, integral_i_expr, integral_u_expr, UForm, WindowPolicy};
use asm_tsscpp::suite::{defaults, run_suite, SUITES};
use asm_tsscpp::{parse_poly, GenPoly, QPoly};

const ENUMERATE_MAX: usize = 7;
const BRUTE_MAX: usize = 7;
const INTEGRAL_MAX: usize = 5;

#[derive(Parser)]
#[command(
    name = "asm-tsscpp",
    version,
    about = "Exact enumeration and identity checks for ASMs and TSSCPPs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Size `3` or inclusive range `1..5`
    #[arg(long, alias = "n-range", global = true)]
    n: Option<String>,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; results do not depend on it
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of the given size
    Enumerate { kind: Kind },
    /// Generating polynomial by one of the routes
    Genfun {
        route: Route,
        /// Comma-separated slice weights t_0, t_1, ... for `lgv` (missing ones are 1)
        #[arg(long)]
        weights: Option<String>,
        /// Comma-separated parameters a_1, ... for `integral-I`; a single value is repeated
        #[arg(long)]
        a: Option<String>,
        /// Path statistics (i, j) for `nilp`
        #[arg(long, default_value = "0,1")]
        stats: String,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Random samples per size (suite default if omitted)
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Asm,
    Nilp,
    Tsscpp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    AsmTilde,
    AsmReversed,
    Nilp,
    Lgv,
    #[value(name = "integral-A")]
    IntegralA,
    #[value(name = "integral-U")]
    IntegralU,
    #[value(name = "integral-I")]
    IntegralI,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn parse_range(s: &str) -> Result<Vec<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| usage(format!("bad size `{t}`")));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(usage(format!("empty range `{s}`")));
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

fn check_limit(ns: &[usize], max: usize, what: &str) -> Result<()> {
    if let Some(&n) = ns.iter().find(|&&n| n > max) {
        return Err(usage(format!("n = {n} exceeds the limit {max} for {what}")));
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn enumerate(out: &mut dyn Write, kind: Kind, ns: &[usize], format: Format) -> Result<()> {
    check_limit(ns, ENUMERATE_MAX, "enumerate")?;
    let name = match kind {
        Kind::Asm => "asm",
        Kind::Nilp => "nilp",
        Kind::Tsscpp => "tsscpp",
    };
    if format == Format::Csv {
        writeln!(out, "kind,n,index,object")?;
    }
    for &n in ns {
        let objects: Box<dyn Iterator<Item = (Value, String)>> = match kind {
            Kind::Asm => Box::new(enumerate_asms(n).map(|a| (a.to_json(), a.to_string()))),
            Kind::Nilp => Box::new(enumerate_nilps(n).map(|p| (p.to_json(), p.to_string()))),
            Kind::Tsscpp => Box::new(enumerate_tsscpps(n).map(|t| (t.to_json(), t.to_string()))),
        };
        if format == Format::Json {
            write!(out, "{{\"schema\":\"v1\",\"kind\":\"{name}\",\"n\":{n},\"objects\":[")?;
        }
        let mut count = 0usize;
        for (k, (js, text)) in objects.enumerate() {
            match format {
                Format::Json => write!(out, "{}{}", if k > 0 { "," } else { "" }, js)?,
                Format::Csv => writeln!(out, "{name},{n},{k},{}", csv_field(&js.to_string()))?,
                Format::Pretty => writeln!(out, "# {name} n={n} #{k}\n{text}\n")?,
            }
            count += 1;
        }
        match format {
            Format::Json => writeln!(out, "],\"count\":{count}}}")?,
            Format::Csv => writeln!(out, "{name},{n},count,{count}")?,
            Format::Pretty => writeln!(out, "count {name} n={n}: {count}")?,
        }
    }
    Ok(())
}

fn poly_list(s: &str) -> Result<Vec<QPoly>> {
    s.split(',')
        .map(|t| parse_poly(t.trim()).map_err(|e| usage(e.to_string())))
        .collect()
}

fn genfun_one(route: Route, n: usize, weights: Option<&str>, a: Option<&str>, stats: (usize, usize)) -> Result<QPoly> {
    let brute = |g: GenPoly| g.to_qpoly("x", "y");
    let policy = WindowPolicy::Tight;
    Ok(match route {
        Route::AsmTilde => brute(genfun_doubly_refined(n, Convention::Tilde)),
        Route::AsmReversed => brute(genfun_doubly_refined(n, Convention::Reversed)),
        Route::Nilp => brute(genfun_u(n, stats.0, stats.1).map_err(|e| usage(e.to_string()))?),
        Route::Lgv => {
            let mut t = match weights {
                Some(w) => poly_list(w)?,
                None => [QPoly::var("x"), QPoly::var("y")].into_iter().take(n).collect(),
            };
            if t.len() > n {
                bail!(usage(format!("{} weights given for n = {n}", t.len())));
            }
            t.resize(n, QPoly::constant(asm_tsscpp::ratio(1, 1)));
            lgv_genfun(n, &t)?
        }
        Route::IntegralA => integral_a_expr(n, policy)?,
        Route::IntegralU => integral_u_expr(n, UForm::Raw, policy)?,
        Route::IntegralI => {
            let m = n.saturating_sub(1);
            let mut list = match a {
                Some(s) => poly_list(s)?,
                None => vec![QPoly::constant(asm_tsscpp::ratio(0, 1))],
            };
            if list.len() == 1 {
                list = vec![list[0].clone(); m];
            }
            if list.len() != m {
                bail!(usage(format!(
                    "integral-I at n = {n} takes {m} parameters, got {}",
                    list.len()
                )));
            }
            integral_i_expr(n, &list, policy)?
        }
    })
}

fn genfun(
    out: &mut dyn Write,
    route: Route,
    ns: &[usize],
    format: Format,
    weights: Option<&str>,
    a: Option<&str>,
    stats: &str,
) -> Result<()> {
    let limit = match route {
        Route::IntegralA | Route::IntegralU | Route::IntegralI => INTEGRAL_MAX,
        _ => BRUTE_MAX,
    };
    check_limit(ns, limit, "this route")?;
    let stats = match stats.split_once(',') {
        Some((i, j)) => (
            i.trim().parse().map_err(|_| usage("bad --stats"))?,
            j.trim().parse().map_err(|_| usage("bad --stats"))?,
        ),
        None => return Err(usage("--stats takes `i,j`")),
    };
    let route_name = route.to_possible_value().expect("named").get_name().to_string();
    if format == Format::Csv {
        writeln!(out, "route,n,i,j,coefficient")?;
    }
    for &n in ns {
        let p = genfun_one(route, n, weights, a, stats)?;
        // a table only makes sense for count polynomials in x and y
        let table = GenPoly::from_qpoly(&p, "x", "y").ok();
        let text = table.as_ref().map_or_else(|| p.to_string(), |g| g.to_string());
        match format {
            Format::Json => {
                let matrix = table.as_ref().map(|g| g.matrix(n.max(1)));
                let v = json!({ "schema": "v1", "route": route_name, "n": n, "poly": text, "matrix": matrix });
                writeln!(out, "{v}")?;
            }
            Format::Csv => match &table {
                Some(g) => {
                    for ((i, j), c) in g.terms() {
                        writeln!(out, "{route_name},{n},{i},{j},{c}")?;
                    }
                }
                None => writeln!(out, "{route_name},{n},,,{}", csv_field(&text))?,
            },
            Format::Pretty => {
                writeln!(out, "{route_name} n={n}: {text}")?;
                if let Some(g) = &table {
                    for row in g.matrix(n.max(1)) {
                        let cells: Vec<String> = row.iter().map(|c| format!("{c:>6}")).collect();
                        writeln!(out, "{}", cells.join(""))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn write_report(out: &mut dyn Write, report: &Report, format: Format) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(report)?)?,
        Format::Csv => {
            writeln!(out, "suite,check,n,point,expected,got,pass")?;
            for c in &report.checks {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    report.suite,
                    c.check,
                    c.n,
                    csv_field(&c.point.to_string()),
                    csv_field(&c.expected),
                    csv_field(&c.got),
                    c.pass
                )?;
            }
        }
        Format::Pretty => {
            for c in &report.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {} n={} {}", c.check, c.n, c.point)?;
                if !c.pass {
                    writeln!(out, "     expected {}\n     got      {}", c.expected, c.got)?;
                }
            }
            let passed = report.checks.iter().filter(|c| c.pass).count();
            writeln!(out, "{}: {passed}/{} checks passed", report.suite, report.checks.len())?;
        }
    }
    Ok(())
}

fn first_failure_json(report: &Report, c: &Check) -> Value {
    json!({ "schema": "v1", "suite": report.suite, "seed": report.seed, "counterexample": c })
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(k) = cli.workers {
        if k == 0 {
            return Err(usage("--workers must be positive"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
    }
    let sink: Box<dyn Write> = match &cli.out {
        Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let ns = cli.n.as_deref().map(parse_range).transpose()?;
    let ok = match &cli.command {
        Command::Enumerate { kind } => {
            let ns = ns.ok_or_else(|| usage("enumerate needs --n"))?;
            enumerate(&mut out, *kind, &ns, cli.format)?;
            true
        }
        Command::Genfun {
            route,
            weights,
            a,
            stats,
        } => {
            let ns = ns.ok_or_else(|| usage("genfun needs --n"))?;
            genfun(
                &mut out,
                *route,
                &ns,
                cli.format,
                weights.as_deref(),
                a.as_deref(),
                stats,
            )?;
            true
        }
        Command::Verify { suite, samples } => {
            let (range, _, _) = defaults(suite)?;
            let ns = ns.unwrap_or_else(|| range.collect());
            let checks = run_suite(suite, &ns, cli.seed, *samples).map_err(|e| usage(e.to_string()))?;
            let report = Report::new(suite, cli.seed, ns, checks);
            write_report(&mut out, &report, cli.format)?;
            if let Some(c) = report.first_failure() {
                eprintln!("{}", first_failure_json(&report, c));
                false
            } else {
                true
            }
        }
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
