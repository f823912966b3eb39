use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopf_core::hopf::{
    eval_unknot, framing_factor, hopf_invariant_swapped, hopf_invariant_to_degree, series_e_lambda,
    series_h_lambda,
};
use hopf_core::ring::{FracJson, LaurentPoly1, SFraction};
use hopf_core::schur::required_degree;
use hopf_core::sln::{hopf_sln_minor, hopf_sln_substitution, vandermonde_minor, SlNResult};
use hopf_core::verify::{self, Bounds};
use hopf_core::{Error, Partition};

const DEFAULT_SERIES_DEGREE: usize = 6;

#[derive(Parser)]
#[command(
    name = "homfly",
    version,
    about = "Framed Homfly invariants of the decorated Hopf link"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Two-variable invariant <lambda,mu>
    Hopf(PairArgs),
    /// Unknot value <lambda> and framing factor f(lambda)
    Unknot(SingleArgs),
    /// Series E_lambda(t) and H_lambda(t)
    Series(SeriesArgs),
    /// Vandermonde minor P^N_(lambda,mu)
    Minor(SlnArgs),
    /// sl(N) specialization by substitution and by minors
    Sln(SlnArgs),
    /// Run the identity-verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    /// Expansion degree of E_lambda; defaults to what mu requires
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SingleArgs {
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    /// Expand far enough for the Schur function of this diagram
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SlnArgs {
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    #[arg(long = "N", value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest diagram size
    #[arg(long, default_value_t = Bounds::default().max_size)]
    max_size: usize,
    /// Largest N for sl(N) checks
    #[arg(long = "N", default_value_t = Bounds::default().max_n)]
    max_n: usize,
    /// Truncation degree for series identities
    #[arg(long, default_value_t = Bounds::default().degree)]
    degree: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn q_form(p: &LaurentPoly1) -> String {
    match p.to_q_string() {
        Some(q) => q,
        None => p.to_string(),
    }
}

fn label(lambda: &Partition, mu: &Partition) -> String {
    format!("<({lambda}),({mu})>")
}

fn hopf(args: &PairArgs) -> Result<Output, Error> {
    let degree = args.degree.unwrap_or_else(|| required_degree(&args.mu));
    let main = hopf_invariant_to_degree(&args.lambda, &args.mu, degree)?;
    let agree = main.value == hopf_invariant_swapped(&args.lambda, &args.mu).value;
    Ok(Output {
        text: format!(
            "{} = {}\nroutes agree: {agree}\n",
            label(&args.lambda, &args.mu),
            main.value
        ),
        json: json!({
            "lambda": args.lambda,
            "mu": args.mu,
            "value": FracJson::from(&main.value),
            "routes_agree": agree,
        }),
        ok: agree,
    })
}

fn unknot(args: &SingleArgs) -> Output {
    let value = eval_unknot(&args.lambda);
    let framing = framing_factor(&args.lambda);
    Output {
        text: format!("<({l})> = {value}\nf({l}) = {framing}\n", l = args.lambda),
        json: json!({
            "lambda": args.lambda,
            "value": FracJson::from(&value),
            "framing": FracJson::from(&framing),
        }),
        ok: true,
    }
}

fn series(args: &SeriesArgs) -> Output {
    let degree = match (args.degree, &args.mu) {
        (Some(d), _) => d,
        (None, Some(mu)) => required_degree(mu),
        (None, None) => DEFAULT_SERIES_DEGREE,
    };
    let e = series_e_lambda(&args.lambda, degree);
    let h = series_h_lambda(&args.lambda, degree);
    let coeffs =
        |s: &hopf_core::hopf::Series| s.coeffs().iter().map(FracJson::from).collect::<Vec<_>>();
    Output {
        text: format!("E_({l})(t) = {e}\nH_({l})(t) = {h}\n", l = args.lambda),
        json: json!({
            "lambda": args.lambda,
            "degree": degree,
            "e": coeffs(&e),
            "h": coeffs(&h),
        }),
        ok: true,
    }
}

fn minor(args: &SlnArgs) -> Result<Output, Error> {
    let n = args.n as usize;
    let p = vandermonde_minor(&args.lambda, &args.mu, n)?;
    Ok(Output {
        text: format!("P^{n}_(({}),({})) = {}\n", args.lambda, args.mu, q_form(&p)),
        json: json!({
            "lambda": args.lambda,
            "mu": args.mu,
            "N": n,
            "value": FracJson::from(&SFraction::from_poly(p)),
        }),
        ok: true,
    })
}

fn sln_value_text(r: &SlNResult) -> String {
    let mut out = r.value.to_string();
    if let Some(q) = r.value.to_laurent().and_then(|p| p.to_q_string()) {
        out.push_str(&format!("  [q-form: {q}]"));
    }
    out
}

fn sln(args: &SlnArgs) -> Result<Output, Error> {
    let n = args.n as usize;
    let sub = hopf_sln_substitution(&args.lambda, &args.mu, n)?;
    // with more than N rows there is no minor; the invariant is 0
    let too_long = args.lambda.len() > n || args.mu.len() > n;
    let minor_value = if too_long {
        SFraction::zero()
    } else {
        hopf_sln_minor(&args.lambda, &args.mu, n)?.value
    };
    let agree = sub.value == minor_value;
    let name = format!("{}_{n}", label(&args.lambda, &args.mu));
    let mut text = format!("{name} (substitution) = {}\n", sln_value_text(&sub));
    if too_long {
        text.push_str(&format!("{name} (minor) = 0  [more than {n} rows]\n"));
    } else {
        text.push_str(&format!("{name} (minor) = {}\n", minor_value));
    }
    text.push_str(&format!(
        "correction: s^({}/{})\nroutes agree: {agree}\n",
        sub.correction.numer, sub.correction.denom
    ));
    Ok(Output {
        text,
        json: json!({
            "lambda": args.lambda,
            "mu": args.mu,
            "N": n,
            "value": FracJson::from(&sub.value),
            "routes_agree": agree,
            "correction": sub.correction,
        }),
        ok: agree,
    })
}

fn run_verify(args: &VerifyArgs) -> Output {
    let report = verify::run(Bounds {
        max_size: args.max_size,
        max_n: args.max_n,
        degree: args.degree,
    });
    let mut text = String::new();
    let (mut passed, mut failed) = (0, 0);
    for c in &report.checks {
        let status = if c.failed == 0 { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "[{status}] {}: {} passed, {} failed\n",
            c.name, c.passed, c.failed
        ));
        for f in &c.failures {
            text.push_str(&format!("    {f}\n"));
        }
        passed += c.passed;
        failed += c.failed;
    }
    text.push_str(&format!("total: {passed} passed, {failed} failed\n"));
    Output {
        json: serde_json::to_value(&report).expect("report serializes"),
        text,
        ok: report.all_passed(),
    }
}

fn dispatch(cli: &Cli) -> Result<(Output, Format), Error> {
    Ok(match &cli.command {
        Command::Hopf(a) => (hopf(a)?, a.format),
        Command::Unknot(a) => (unknot(a), a.format),
        Command::Series(a) => (series(a), a.format),
        Command::Minor(a) => (minor(a)?, a.format),
        Command::Sln(a) => (sln(a)?, a.format),
        Command::Verify(a) => (run_verify(a), a.format),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((out, format)) => {
            match format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
