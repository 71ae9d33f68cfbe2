//! Command-line harness for the sedeon algebra: verification suites with
//! machine-readable reports, ad-hoc basis-product evaluation, plane-wave
//! residual reports, event boosts, unit tables and matrix exports.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or parse errors.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sedeon::algebra::{Complex64, Sedeon, StructureTable};
use sedeon::field_lab::{
    dirac_residual, field_intensities, first_order_residual, on_shell_omega,
    second_order_residual, PlaneWaveField, WaveOperatorParams,
};
use sedeon::matrix_rep::{unit_matrix_a, unit_matrix_e};
use sedeon::report::ResidualReport;
use sedeon::sample;
use sedeon::suites::{run_suite, Suite};
use sedeon::transforms::{boost_event, event_sedeon, interval, Boost, EventVector};

#[derive(Parser)]
#[command(name = "sedeon", version, about = "Sixteen-component space-time algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite and report per-check residuals.
    Verify {
        /// Suite: tables, algebra, transforms, representation, field, all.
        #[arg(long, default_value = "all")]
        suite: SuiteArg,
        /// Seed for the deterministic sample generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random samples per randomized check.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        samples: u32,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a '*'-joined product of basis factors, e.g. "e1*a2*e3".
    Eval {
        /// Factors: 1, i, -1, -i, e1..e3, a1..a3, or combined like e1a2.
        expr: String,
    },
    /// Second-order, first-order and Dirac residual reports for one mode.
    Planewave {
        /// Mass coefficient (inverse length).
        #[arg(long)]
        mass: f64,
        /// Wave vector, comma separated: kx,ky,kz.
        #[arg(long, value_parser = parse_vec3)]
        k: Vec3,
        /// Angular frequency, a number or "auto" for the on-shell value.
        #[arg(long)]
        omega: String,
        /// Amplitude: "unit", "random", or a path to a sedeon JSON file.
        #[arg(long, default_value = "unit")]
        amplitude: String,
        /// Seed used when the amplitude is "random".
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Boost an event and report the transformed coordinates.
    Boost {
        /// Velocity ratio v/c, |beta| < 1.
        #[arg(long)]
        beta: f64,
        /// Boost axis.
        #[arg(long, value_enum)]
        axis: Axis,
        /// Event, comma separated: t,x,y,z.
        #[arg(long, value_parser = parse_event)]
        event: Event4,
        /// Speed of light (natural units by default).
        #[arg(long, default_value_t = 1.0)]
        c: f64,
    },
    /// Print the unit multiplication tables as JSON.
    Tables {
        /// Restrict to one basis.
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
    },
    /// Export the 4x4 matrix of a basis unit as JSON.
    Rep {
        /// Element name: e0..e3 or a0..a3.
        #[arg(long)]
        element: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Algebra,
    Transforms,
    Representation,
    Field,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Transforms => Suite::Transforms,
            SuiteArg::Representation => Suite::Representation,
            SuiteArg::Field => Suite::Field,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn direction(self) -> [f64; 3] {
        match self {
            Axis::X => [1.0, 0.0, 0.0],
            Axis::Y => [0.0, 1.0, 0.0],
            Axis::Z => [0.0, 0.0, 1.0],
        }
    }
}

#[derive(Clone, Copy)]
struct Vec3([f64; 3]);

fn parse_vec3(s: &str) -> Result<Vec3, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected kx,ky,kz, got {} components", parts.len()));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(parts.iter()) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad component '{part}': {e}"))?;
        if !slot.is_finite() {
            return Err(format!("non-finite component '{part}'"));
        }
    }
    Ok(Vec3(out))
}

#[derive(Clone, Copy)]
struct Event4 {
    t: f64,
    r: [f64; 3],
}

fn parse_event(s: &str) -> Result<Event4, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected t,x,y,z, got {} components", parts.len()));
    }
    let mut values = [0.0; 4];
    for (slot, part) in values.iter_mut().zip(parts.iter()) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad component '{part}': {e}"))?;
    }
    Ok(Event4 {
        t: values[0],
        r: [values[1], values[2], values[3]],
    })
}

/// A usage or input error (exit 2), distinct from a check failure (exit 1).
struct UsageError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            suite,
            seed,
            samples,
            format,
        } => cmd_verify(suite.into(), seed, samples as usize, format),
        Command::Eval { expr } => cmd_eval(&expr),
        Command::Planewave {
            mass,
            k,
            omega,
            amplitude,
            seed,
        } => cmd_planewave(mass, k.0, &omega, &amplitude, seed),
        Command::Boost {
            beta,
            axis,
            event,
            c,
        } => cmd_boost(beta, axis, event, c),
        Command::Tables { basis } => cmd_tables(basis),
        Command::Rep { element } => cmd_rep(&element),
    };
    match outcome {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cmd_verify(
    suite: Suite,
    seed: u64,
    samples: usize,
    format: Format,
) -> Result<ExitCode, UsageError> {
    let report = run_suite(suite, seed, samples);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
        Format::Csv => {
            println!("equation,max_residual,tolerance,pass");
            for entry in &report.entries {
                println!(
                    "{},{},{},{}",
                    entry.equation, entry.max_residual, entry.tolerance, entry.pass
                );
            }
        }
        Format::Text => {
            for entry in &report.entries {
                println!(
                    "{} {:<55} residual={:<24} tol={:e}",
                    if entry.pass { "PASS" } else { "FAIL" },
                    entry.equation,
                    format!("{:e}", entry.max_residual),
                    entry.tolerance,
                );
            }
            let passed = report.entries.iter().filter(|e| e.pass).count();
            println!("{passed}/{} checks passed", report.entries.len());
        }
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Parse one factor of the eval grammar.
fn parse_factor(token: &str) -> Result<Sedeon, String> {
    // Accept an ASCII minus or the unicode minus sign.
    let token = token.replace('\u{2212}', "-");
    match token.as_str() {
        "" => return Err("empty factor".to_owned()),
        "1" => return Ok(Sedeon::one()),
        "-1" => return Ok(Sedeon::one().scale(Complex64::new(-1.0, 0.0))),
        "i" => return Ok(Sedeon::one().scale(Complex64::new(0.0, 1.0))),
        "-i" => return Ok(Sedeon::one().scale(Complex64::new(0.0, -1.0))),
        _ => {}
    }
    let chars: Vec<char> = token.chars().collect();
    let digit = |c: char| -> Result<usize, String> {
        c.to_digit(10)
            .filter(|d| *d <= 3)
            .map(|d| d as usize)
            .ok_or_else(|| format!("unit index '{c}' must be 0..=3"))
    };
    match chars.as_slice() {
        ['e', n] => Ok(Sedeon::basis(digit(*n)?, 0).expect("checked index")),
        ['a', k] => Ok(Sedeon::basis(0, digit(*k)?).expect("checked index")),
        ['e', n, 'a', k] => Ok(Sedeon::basis(digit(*n)?, digit(*k)?).expect("checked index")),
        _ => Err(format!(
            "unrecognized factor '{token}'; expected 1, i, -1, -i, e<n>, a<k> or e<n>a<k>"
        )),
    }
}

/// Left-to-right product of the '*'-separated factors. Errors carry the
/// byte offset of the offending factor.
fn eval_expression(expr: &str) -> Result<Sedeon, (usize, String)> {
    if expr.trim().is_empty() {
        return Err((0, "empty expression".to_owned()));
    }
    let mut acc = Sedeon::one();
    let mut offset = 0usize;
    for piece in expr.split('*') {
        let leading = piece.len() - piece.trim_start().len();
        let factor = parse_factor(piece.trim()).map_err(|e| (offset + leading, e))?;
        acc = acc.product(&factor);
        offset += piece.len() + 1;
    }
    Ok(acc)
}

fn cmd_eval(expr: &str) -> Result<ExitCode, UsageError> {
    let value = eval_expression(expr).map_err(|(pos, message)| {
        UsageError(format!("parse error at position {pos}: {message}"))
    })?;
    println!(
        "{}",
        serde_json::to_string(&value).expect("sedeon serializes")
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_planewave(
    mass: f64,
    kvec: [f64; 3],
    omega_arg: &str,
    amplitude_arg: &str,
    seed: u64,
) -> Result<ExitCode, UsageError> {
    let params =
        WaveOperatorParams::natural(mass).map_err(|e| UsageError(format!("bad parameters: {e}")))?;
    let omega = if omega_arg == "auto" {
        on_shell_omega(kvec, &params)
    } else {
        omega_arg
            .parse::<f64>()
            .map_err(|e| UsageError(format!("bad omega '{omega_arg}': {e}")))?
    };
    let amplitude = match amplitude_arg {
        "unit" => Sedeon::one(),
        "random" => sample::random_sedeon(&mut sample::rng(seed)),
        path => {
            let text = fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read amplitude file '{path}': {e}")))?;
            serde_json::from_str(&text)
                .map_err(|e| UsageError(format!("malformed sedeon JSON in '{path}': {e}")))?
        }
    };
    let mode = PlaneWaveField::new(amplitude, omega, kvec)
        .map_err(|e| UsageError(format!("bad mode: {e}")))?;

    let mut report = ResidualReport::new();
    report.extend(second_order_residual(&mode, &Sedeon::zero(), &params));
    report.extend(first_order_residual(
        &field_intensities(&mode, &params),
        &Sedeon::zero(),
        &params,
    ));
    report.extend(dirac_residual(&mode, &params));

    let output = json!({
        "mass": mass,
        "omega": omega,
        "k": kvec,
        "amplitude": mode.amplitude,
        "report": report,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&output).expect("report serializes")
    );
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_boost(beta: f64, axis: Axis, event: Event4, c: f64) -> Result<ExitCode, UsageError> {
    let boost = Boost::from_beta(beta, axis.direction())
        .map_err(|e| UsageError(format!("bad boost: {e}")))?;
    let event = EventVector::new(event.t, event.r, c)
        .map_err(|e| UsageError(format!("bad event: {e}")))?;
    let before = interval(&event_sedeon(&event)).expect("constructed event is event-shaped");
    let (t, r) = boost_event(&event, &boost);
    let after_event = EventVector::new(t, r, c).expect("boosted event is finite");
    let after = interval(&event_sedeon(&after_event)).expect("event-shaped");
    let output = json!({
        "beta": beta,
        "rapidity": boost.rapidity(),
        "event": { "t": event.t, "r": event.r },
        "transformed": { "t": t, "r": r },
        "interval_before": before.re,
        "interval_after": after.re,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&output).expect("output serializes")
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    E,
    A,
}

fn cmd_tables(basis: Option<BasisArg>) -> Result<ExitCode, UsageError> {
    let selected: Vec<StructureTable> = match basis {
        Some(BasisArg::E) => vec![StructureTable::E],
        Some(BasisArg::A) => vec![StructureTable::A],
        None => vec![StructureTable::A, StructureTable::E],
    };
    let mut rows = Vec::new();
    for table in selected {
        let symbol = table.basis.symbol();
        for m in 1..4 {
            for n in 1..4 {
                let (coeff, unit) = table.product(m, n).expect("indices in range");
                let value = coeff.value();
                rows.push(json!({
                    "basis": symbol.to_string(),
                    "left": format!("{symbol}{m}"),
                    "right": format!("{symbol}{n}"),
                    "coefficient": [value.re, value.im],
                    "unit": if unit == 0 { "1".to_owned() } else { format!("{symbol}{unit}") },
                }));
            }
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&rows).expect("rows serialize")
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_rep(element: &str) -> Result<ExitCode, UsageError> {
    let chars: Vec<char> = element.chars().collect();
    let matrix = match chars.as_slice() {
        [basis @ ('e' | 'a'), digit] => {
            let index = digit
                .to_digit(10)
                .filter(|d| *d <= 3)
                .ok_or_else(|| UsageError(format!("unit index '{digit}' must be 0..=3")))?
                as usize;
            if *basis == 'e' {
                unit_matrix_e(index)
            } else {
                unit_matrix_a(index)
            }
            .expect("checked index")
        }
        _ => {
            return Err(UsageError(format!(
                "unrecognized element '{element}'; expected e0..e3 or a0..a3"
            )))
        }
    };
    let output = json!({
        "element": element,
        "order": "row-major",
        "matrix": matrix,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&output).expect("matrix serializes")
    );
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_grammar_examples() {
        // a1*a2 = i a3
        let v = eval_expression("a1*a2").unwrap();
        assert_eq!(v.get(0, 3).unwrap(), Complex64::new(0.0, 1.0));
        // e2*e1*e1*e2 = 1
        let v = eval_expression("e2*e1*e1*e2").unwrap();
        assert_eq!(v, Sedeon::one());
        // e1*a1*e2*a2 = -e3a3
        let v = eval_expression("e1*a1*e2*a2").unwrap();
        assert_eq!(v.get(3, 3).unwrap(), Complex64::new(-1.0, 0.0));
        // combined factors and scalars
        let v = eval_expression("-i * e1a2").unwrap();
        assert_eq!(v.get(1, 2).unwrap(), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn eval_reports_error_position() {
        let err = eval_expression("a1*bogus*e2").unwrap_err();
        assert_eq!(err.0, 3);
        let err = eval_expression("a1* e9").unwrap_err();
        assert_eq!(err.0, 4);
        assert!(eval_expression("   ").is_err());
    }

    #[test]
    fn vec3_and_event_parsers() {
        assert!(parse_vec3("1,2,3").is_ok());
        assert!(parse_vec3("1,2").is_err());
        assert!(parse_vec3("1,x,3").is_err());
        assert!(parse_event("0,1,2,3").is_ok());
        assert!(parse_event("0,1,2").is_err());
    }
}
