mod render;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};
use jetlct_core::fporacle::{count_points, oracle_dimension, OracleDimension, DEFAULT_EVALUATION_CAP};
use jetlct_core::groebner::{krull_dimension_with, DEFAULT_MAX_STEPS};
use jetlct_core::jets::{fiber_ideal_at, jet_ideal, taylor_jet_generators};
use jetlct_core::lctlab::{self, Verdict};
use jetlct_core::polyring::{int, parse_poly};
use jetlct_core::{Budget, Error, MonomialOrder, OrderKind, Polynomial, Rational};

use render::{Doc, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Jets,
    Dim,
    Lct,
    Verify,
    Ruling,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Main1,
    Isom,
    Recursion,
    Fiber,
    Semicont,
    Main2,
}

/// Jet-scheme dimensions and log canonical threshold bounds for hypersurfaces.
#[derive(Debug, Parser)]
#[command(name = "jetlct", version)]
struct RunConfig {
    #[arg(value_enum)]
    command: Command,
    /// Polynomial in x1..xn, e.g. "x1^3 + x2^3".
    #[arg(long)]
    poly: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    level: Option<usize>,
    #[arg(long = "max-k")]
    max_k: Option<usize>,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, value_enum)]
    order: Option<Order>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long = "budget-steps")]
    budget_steps: Option<u64>,
    #[arg(long = "timeout-ms")]
    timeout_ms: Option<u64>,
    /// Accepted for reproducible invocations; no command draws random numbers.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    /// Point as comma-separated rationals; repeatable (verify fiber/semicont).
    #[arg(long)]
    point: Vec<String>,
}

enum Failure {
    Usage(String),
    Input(Error),
    Budget(Error),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Input(_) => 1,
            Failure::Budget(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn line(&self) -> String {
        match self {
            Failure::Usage(s) => format!("error: usage: {s}"),
            Failure::Input(e) => format!("error: input: {e}"),
            Failure::Budget(e) => format!("error: budget: {e}"),
            Failure::Verification(s) => format!("error: verification: {s}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) | Error::CountCap { .. } | Error::VariableCap { .. } => Failure::Budget(e),
            e => Failure::Input(e),
        }
    }
}

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("error: usage: {first}");
            return ExitCode::from(1);
        }
    };
    match run(&config) {
        Ok((doc, verdict_failed)) => {
            print!("{}", doc.render(config.format));
            if let Some(reason) = verdict_failed {
                let f = Failure::Verification(reason);
                eprintln!("{}", f.line());
                return ExitCode::from(f.code());
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.line());
            ExitCode::from(f.code())
        }
    }
}

fn validate(c: &RunConfig) -> Result<(), Failure> {
    let allowed: &[&str] = match c.command {
        Command::Jets => &["level"],
        Command::Dim => &["level", "order"],
        Command::Lct => &["max-k"],
        Command::Verify => &["suite", "level", "max-k", "point"],
        Command::Ruling => &[],
        Command::Count => &["level", "prime"],
    };
    let given = [
        ("level", c.level.is_some()),
        ("max-k", c.max_k.is_some()),
        ("prime", c.prime.is_some()),
        ("order", c.order.is_some()),
        ("suite", c.suite.is_some()),
        ("point", !c.point.is_empty()),
    ];
    for (flag, present) in given {
        if present && !allowed.contains(&flag) {
            return Err(Failure::Usage(format!("--{flag} is not accepted by this command")));
        }
    }
    if c.command == Command::Verify && c.suite.is_none() {
        return Err(Failure::Usage("verify requires --suite".into()));
    }
    if c.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    if c.max_k == Some(0) {
        return Err(Failure::Usage("--max-k must be at least 1".into()));
    }
    Ok(())
}

fn budget(c: &RunConfig) -> Result<Budget, Failure> {
    let from_env = match std::env::var("JETLCT_BUDGET_STEPS") {
        Ok(s) => Some(
            s.trim()
                .parse::<u64>()
                .map_err(|_| Failure::Usage(format!("JETLCT_BUDGET_STEPS is not an integer: {s}")))?,
        ),
        Err(_) => None,
    };
    let mut b = Budget::with_steps(c.budget_steps.or(from_env).unwrap_or(DEFAULT_MAX_STEPS));
    b.timeout = c.timeout_ms.map(Duration::from_millis);
    Ok(b)
}

fn parse_point(s: &str, n: usize) -> Result<Vec<Rational>, Failure> {
    let coords: Vec<Rational> = s
        .split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|_| Failure::Usage(format!("bad point coordinate '{t}'"))))
        .collect::<Result<_, _>>()?;
    if coords.len() != n {
        return Err(Failure::Input(Error::DimensionMismatch { expected: n, got: coords.len() }));
    }
    Ok(coords)
}

fn base_doc(f: &Polynomial, n: usize) -> Doc {
    let mut doc = Doc::new();
    doc.str("input", &f.to_string());
    doc.int("n", n as i64);
    doc
}

type Outcome = (Doc, Option<String>);

fn run(c: &RunConfig) -> Result<Outcome, Failure> {
    validate(c)?;
    let f = parse_poly(&c.poly, c.n)?;
    let budget = budget(c)?;
    let start = Instant::now();
    let (mut doc, failed) = match c.command {
        Command::Jets => (jets(c, &f)?, None),
        Command::Dim => (dim(c, &f, &budget)?, None),
        Command::Lct => {
            let report = lctlab::lct_estimate(&f, c.max_k.unwrap_or(2), &budget)?;
            (render::report_doc(&f, &report), None)
        }
        Command::Verify => verify(c, &f, &budget)?,
        Command::Ruling => (ruling(&f)?, None),
        Command::Count => (count(c, &f)?, None),
    };
    doc.timing("total_ms", start.elapsed());
    Ok((doc, failed))
}

fn jets(c: &RunConfig, f: &Polynomial) -> Result<Doc, Failure> {
    let level = c.level.unwrap_or(1);
    let ideal = jet_ideal(f, level)?;
    let mut doc = base_doc(f, c.n);
    doc.int("level", level as i64);
    doc.str_list("generators", ideal.generators().iter().map(|g| g.to_string()).collect());
    Ok(doc)
}

fn order_of(c: &RunConfig) -> MonomialOrder {
    match c.order.unwrap_or(Order::Grevlex) {
        Order::Grevlex => MonomialOrder::default(),
        Order::Lex => MonomialOrder { kind: OrderKind::Lex, ..MonomialOrder::default() },
    }
}

fn dim(c: &RunConfig, f: &Polynomial, budget: &Budget) -> Result<Doc, Failure> {
    let level = c.level.unwrap_or(1);
    let order = order_of(c);
    let jet = krull_dimension_with(&taylor_jet_generators(f, level)?, &order, budget)?;
    let origin = vec![int(0); c.n];
    let fiber = if f.eval(&origin)? == int(0) {
        Some(krull_dimension_with(&fiber_ideal_at(f, level, &origin)?, &order, budget)?)
    } else {
        None
    };
    let mut doc = base_doc(f, c.n);
    doc.int("level", level as i64);
    doc.str("order", if order.kind == OrderKind::Lex { "lex" } else { "grevlex" });
    doc.int("dim_jet", jet);
    doc.opt_int("dim_fiber_origin", fiber);
    Ok(doc)
}

fn ruling(f: &Polynomial) -> Result<Doc, Failure> {
    let r = lctlab::detect_ruling(f)?;
    let mut doc = base_doc(f, f.n());
    render::ruling_fields(&mut doc, &r);
    Ok(doc)
}

fn count(c: &RunConfig, f: &Polynomial) -> Result<Doc, Failure> {
    let level = c.level.unwrap_or(0);
    let ideal = taylor_jet_generators(f, level)?;
    let records = match c.prime {
        Some(p) => vec![count_points(&ideal, p)?],
        None => oracle_dimension(&ideal, DEFAULT_EVALUATION_CAP)?.1,
    };
    let mut doc = base_doc(f, c.n);
    doc.int("level", level as i64);
    doc.int("num_vars", ideal.num_vars() as i64);
    doc.records(&records);
    if c.prime.is_none() {
        let verdict = jetlct_core::fporacle::dim_from_counts(&records);
        let est = match verdict {
            OracleDimension::Agreed(d) => Some(d),
            OracleDimension::Disagreement(_) => {
                // majority over three primes
                let slopes: Vec<i64> = records.iter().filter(|r| r.agreed).map(|r| r.log_slope).collect();
                slopes.first().copied()
            }
        };
        doc.opt_int("dim_estimate", est);
    }
    Ok(doc)
}

fn verify(c: &RunConfig, f: &Polynomial, budget: &Budget) -> Result<Outcome, Failure> {
    let n = c.n;
    let d = f.total_degree().unwrap_or(0) as usize;
    let default_level = d.saturating_sub(1).max(1);
    let points: Vec<Vec<Rational>> = c.point.iter().map(|s| parse_point(s, n)).collect::<Result<_, _>>()?;
    let origin = vec![int(0); n];
    let suite = c.suite.expect("validated");
    let mut doc = base_doc(f, n);
    let verdicts: Vec<Verdict> = match suite {
        Suite::Main1 => {
            if !f.is_homogeneous() {
                return Err(Failure::Input(Error::NotHomogeneous));
            }
            let report = lctlab::lct_estimate(f, c.max_k.unwrap_or(2), budget)?;
            let v = lctlab::verify_lower_bound(f, &report)?;
            doc = render::report_doc(f, &report);
            vec![v]
        }
        Suite::Isom => vec![lctlab::check_isom_fiber(f, c.level.unwrap_or(default_level), budget)?],
        Suite::Recursion => vec![lctlab::check_recursion(f, c.level.unwrap_or(default_level), budget)?],
        Suite::Fiber => {
            let xs = if points.is_empty() { vec![origin] } else { points };
            xs.iter()
                .map(|x| lctlab::check_fiber_bound(f, x, c.level.unwrap_or(default_level), budget))
                .collect::<Result<_, _>>()?
        }
        Suite::Semicont => {
            let xs = if points.is_empty() { vec![origin] } else { points };
            vec![lctlab::check_semicontinuity(f, c.level.unwrap_or(default_level), &xs, budget)?]
        }
        Suite::Main2 => vec![lctlab::equality_characterization(f, c.max_k.unwrap_or(2), budget)?],
    };
    let failed = verdicts
        .iter()
        .find(|v| v.outcome == lctlab::Outcome::Fail)
        .map(|v| format!("{} failed: {}", v.check, v.detail));
    doc.verdicts("verdicts", &verdicts);
    Ok((doc, failed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::Usage("x".into()).code(), 1);
        assert_eq!(Failure::from(Error::NotHomogeneous).code(), 1);
        assert_eq!(Failure::from(Error::CountCap { cap: 10 }).code(), 2);
        assert_eq!(Failure::from(Error::VariableCap { vars: 30, cap: 20 }).code(), 2);
        let f = Failure::Verification("isom failed: m = 3".into());
        assert_eq!(f.code(), 3);
        assert_eq!(f.line(), "error: verification: isom failed: m = 3");
    }

    #[test]
    fn flags_checked_against_command() {
        let c = RunConfig::try_parse_from(["jetlct", "ruling", "--poly", "x1", "--n", "1", "--level", "2"]).unwrap();
        assert!(matches!(validate(&c), Err(Failure::Usage(_))));
        let c = RunConfig::try_parse_from(["jetlct", "count", "--poly", "x1", "--n", "1", "--prime", "7"]).unwrap();
        assert!(validate(&c).is_ok());
    }

    #[test]
    fn points_parse_as_rationals() {
        assert_eq!(parse_point("1/2, -3", 2).ok(), Some(vec![jetlct_core::polyring::rat(1, 2), int(-3)]));
        assert!(parse_point("1,x", 2).is_err());
    }
}
