use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polysym::matrix::{MatrixLabel, TransitionMatrix};
use polysym::monomial_rules::{enumerate_etbt, enumerate_htbt, enumerate_ptbt, TensorBrickTabloid};
use polysym::oracle::cross_check;
use polysym::power_rules::{
    enumerate_icrht, enumerate_icrpt, tableau_coefficient, ConstantRowTableau,
};
use polysym::rational::to_plain;
use polysym::schur_rules::{enumerate_tprt, enumerate_trht, EVariant, TensorTableau};
use polysym::sym::classical_transition;
use polysym::{Basis, BlockSequence, ClassicalBasis, Engine, Error, PolyExpr, Rational, SplitType};

#[derive(Parser)]
#[command(
    name = "polysym",
    version,
    about = "Exact computations with polysymmetric functions"
)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite an expression such as "P[2^3]" in another basis.
    Expand {
        expr: String,
        #[arg(long)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = EngineArg::Rules)]
        engine: EngineArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiply expressions and write the product in one basis.
    Multiply {
        #[arg(required = true)]
        exprs: Vec<String>,
        #[arg(long, default_value = "p-tensor")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Transition matrix M(from, to) at one weight.
    Matrix {
        #[arg(long)]
        from: MatrixBasis,
        #[arg(long)]
        to: MatrixBasis,
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = EngineArg::Rules)]
        engine: EngineArg,
        /// Row and column order, one label per line.
        #[arg(long, value_name = "PATH")]
        order_file: Option<PathBuf>,
    },
    /// List the tableaux or tabloids of shape `shape` and content `(inner; content)`.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        shape: SplitType,
        #[arg(long, default_value = "∅")]
        inner: SplitType,
        /// Comma-separated blocks, e.g. "2^1, 1^2".
        #[arg(long)]
        content: BlockSequence,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare every combinatorial matrix with the monomial oracle.
    Check {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Rules,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "TRHT")]
    Trht,
    #[value(name = "TPRT")]
    Tprt,
    #[value(name = "dualTPRT")]
    DualTprt,
    #[value(name = "ICRPT")]
    Icrpt,
    #[value(name = "ICRHT")]
    Icrht,
    #[value(name = "PTBT")]
    Ptbt,
    #[value(name = "HTBT")]
    Htbt,
    #[value(name = "ETBT")]
    Etbt,
}

#[derive(Clone, Copy)]
struct BasisArg(Basis);

impl FromStr for BasisArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse().map(BasisArg).map_err(|e: Error| e.to_string())
    }
}

/// A bare letter names a classical basis; anything else a polysymmetric one.
#[derive(Clone, Copy, PartialEq, Eq)]
enum MatrixBasis {
    Classical(ClassicalBasis),
    Poly(Basis),
}

impl FromStr for MatrixBasis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if let Ok(c) = s.parse::<ClassicalBasis>() {
            if s.len() == 1 {
                return Ok(MatrixBasis::Classical(c));
            }
        }
        s.parse()
            .map(MatrixBasis::Poly)
            .map_err(|e: Error| e.to_string())
    }
}

enum Failure {
    Usage(String),
    Math(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidBlock { .. } | Error::InvalidPartition { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Math(e.to_string()),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Math(m) | Failure::Mismatch(m) => f.write_str(m),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Expand {
            expr,
            basis,
            engine,
            format,
        } => expand(&expr, basis.0, engine, format),
        Command::Multiply {
            exprs,
            basis,
            format,
        } => multiply(&exprs, basis.0, format),
        Command::Matrix {
            from,
            to,
            weight,
            format,
            engine,
            order_file,
        } => matrix(from, to, weight, format, engine, order_file),
        Command::Enumerate {
            family,
            shape,
            inner,
            content,
            format,
        } => enumerate(family, &shape, &inner, &content, format),
        Command::Check { weight, format } => check(weight, format),
    };
    let (text, code) = match result {
        Ok(text) => (text, 0),
        Err(Failure::Mismatch(text)) => (text, 3),
        Err(f @ Failure::Usage(_)) => {
            eprintln!("error: {f}");
            return ExitCode::from(2);
        }
        Err(f @ Failure::Math(_)) => {
            eprintln!("error: {f}");
            return ExitCode::from(1);
        }
    };
    let text = if text.ends_with('\n') {
        text
    } else {
        text + "\n"
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}

fn parse_expr(text: &str) -> Result<PolyExpr, Failure> {
    let e: PolyExpr = text.parse()?;
    if !e.is_homogeneous() {
        return Err(Failure::Math(format!("{text:?} is not homogeneous")));
    }
    Ok(e)
}

fn render_expr(e: &PolyExpr, format: Format) -> Outcome {
    match format {
        Format::Text => Ok(e.to_string()),
        Format::Json => Ok(pretty(&e.to_json())),
        _ => Err(Failure::Usage("expressions print as text or json".into())),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn expand(text: &str, target: Basis, engine: EngineArg, format: Format) -> Outcome {
    let e = parse_expr(text)?;
    let n = e.weight().unwrap_or(0);
    let run = |engine: Engine| -> Result<PolyExpr, Failure> {
        let m = polysym::transition(e.basis(), target, n, engine)?;
        let mut out = PolyExpr::zero(target);
        for (sigma, c) in e.terms() {
            for (tau, v) in m.column(sigma).expect("label of the right weight") {
                out.add_term(tau, v * c);
            }
        }
        Ok(out)
    };
    let result = match engine {
        EngineArg::Rules => run(Engine::Rules)?,
        EngineArg::Oracle => run(Engine::Oracle)?,
        EngineArg::Both => {
            let a = run(Engine::Rules)?;
            let b = run(Engine::Oracle)?;
            if a != b {
                return Err(Failure::Mismatch(format!("rules: {a}\noracle: {b}")));
            }
            a
        }
    };
    render_expr(&result, format)
}

fn multiply(texts: &[String], target: Basis, format: Format) -> Outcome {
    let factors = texts
        .iter()
        .map(|t| parse_expr(t))
        .collect::<Result<Vec<_>, _>>()?;
    render_expr(&polysym::multiply(&factors, target)?, format)
}

fn read_order<L: FromStr<Err = Error>>(path: &PathBuf) -> Result<Vec<L>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse::<L>().map_err(Failure::from))
        .collect()
}

fn render_matrix<L: MatrixLabel + FromStr<Err = Error>>(
    m: TransitionMatrix<L>,
    format: Format,
    order_file: Option<PathBuf>,
) -> Outcome {
    let m = match order_file {
        Some(path) => m.reorder(&read_order::<L>(&path)?)?,
        None => m,
    };
    Ok(match format {
        Format::Json => m.to_json().to_string(),
        Format::Csv => m.to_csv(),
        Format::Latex => m.to_latex(),
        Format::Text => m.to_text(),
    })
}

fn matrix(
    from: MatrixBasis,
    to: MatrixBasis,
    n: usize,
    format: Format,
    engine: EngineArg,
    order_file: Option<PathBuf>,
) -> Outcome {
    match (from, to) {
        (MatrixBasis::Classical(f), MatrixBasis::Classical(g)) => {
            render_matrix(classical_transition(f, g, n)?, format, order_file)
        }
        (MatrixBasis::Poly(f), MatrixBasis::Poly(g)) => {
            let m = match engine {
                EngineArg::Rules => polysym::transition(f, g, n, Engine::Rules)?,
                EngineArg::Oracle => polysym::transition(f, g, n, Engine::Oracle)?,
                EngineArg::Both => {
                    let a = polysym::transition(f, g, n, Engine::Rules)?;
                    let b = polysym::transition(f, g, n, Engine::Oracle)?;
                    if a != b {
                        return Err(Failure::Mismatch(format!(
                            "engines disagree on M({f}, {g}) at weight {n}\nrules:\n{a}oracle:\n{b}"
                        )));
                    }
                    a
                }
            };
            render_matrix(m, format, order_file)
        }
        _ => Err(Failure::Usage(
            "classical bases (m, h, e, p, s) pair only with each other; use e.g. m-tensor".into(),
        )),
    }
}

fn coefficient_json(pairs: &[(&str, Rational)]) -> Value {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), json!(to_plain(v))))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn enumerate(
    family: Family,
    tau: &SplitType,
    sigma: &SplitType,
    delta: &BlockSequence,
    format: Format,
) -> Outcome {
    if tau.weight() != sigma.weight() + delta.weight() {
        return Err(Failure::Math(format!(
            "shape weight {} differs from inner weight {} plus content weight {}",
            tau.weight(),
            sigma.weight(),
            delta.weight()
        )));
    }
    let (objects, coefficients): (Vec<Value>, Vec<(&str, Rational)>) = match family {
        Family::Trht | Family::Tprt | Family::DualTprt => {
            let list: Vec<TensorTableau> = match family {
                Family::Trht => enumerate_trht(tau, sigma, delta),
                Family::Tprt => enumerate_tprt(tau, sigma, delta, false),
                _ => enumerate_tprt(tau, sigma, delta, true),
            };
            let sum = |v: EVariant| list.iter().map(|t| t.contribution(v)).sum::<Rational>();
            let coeffs = match family {
                Family::Trht => vec![("P", sum(EVariant::Plus))],
                Family::Tprt => vec![("H", sum(EVariant::Plus))],
                _ => vec![("E+", sum(EVariant::Plus)), ("E", sum(EVariant::Signed))],
            };
            (list.iter().map(TensorTableau::to_json).collect(), coeffs)
        }
        Family::Icrpt | Family::Icrht => {
            let list: Vec<ConstantRowTableau> = if family == Family::Icrpt {
                enumerate_icrpt(tau, sigma, delta)
            } else {
                enumerate_icrht(tau, sigma, delta)
            };
            let coeffs = if family == Family::Icrpt {
                vec![("P", tableau_coefficient(&list, Basis::P))]
            } else {
                vec![
                    ("H", tableau_coefficient(&list, Basis::H)),
                    ("E+", tableau_coefficient(&list, Basis::EPlus)),
                    ("E", tableau_coefficient(&list, Basis::E)),
                ]
            };
            (
                list.iter().map(ConstantRowTableau::to_json).collect(),
                coeffs,
            )
        }
        Family::Ptbt | Family::Htbt | Family::Etbt => {
            let (list, bases): (Vec<TensorBrickTabloid>, &[(&str, Basis)]) = match family {
                Family::Ptbt => (enumerate_ptbt(tau, sigma, delta), &[("P", Basis::P)]),
                Family::Htbt => (enumerate_htbt(tau, sigma, delta), &[("H", Basis::H)]),
                _ => (
                    enumerate_etbt(tau, sigma, delta),
                    &[("E+", Basis::EPlus), ("E", Basis::E)],
                ),
            };
            let coeffs = bases
                .iter()
                .map(|&(name, b)| (name, list.iter().map(|t| t.contribution(b)).sum()))
                .collect();
            (
                list.iter().map(TensorBrickTabloid::to_json).collect(),
                coeffs,
            )
        }
    };
    match format {
        Format::Json => Ok(pretty(&json!({
            "shape": tau,
            "inner": sigma,
            "content": delta,
            "count": objects.len(),
            "coefficients": coefficient_json(&coefficients),
            "objects": objects,
        }))),
        Format::Text => {
            let mut out = String::new();
            for o in &objects {
                out.push_str(&serde_json::to_string(o).expect("json values serialize"));
                out.push('\n');
            }
            out.push_str(&format!("count {}\n", objects.len()));
            for (name, c) in &coefficients {
                out.push_str(&format!("coefficient in {name}: {}\n", to_plain(c)));
            }
            Ok(out)
        }
        _ => Err(Failure::Usage("enumerate prints as text or json".into())),
    }
}

fn check(n: usize, format: Format) -> Outcome {
    let report = cross_check(n)?;
    let text = match format {
        Format::Json => pretty(&report.to_json()),
        Format::Text => report.to_string(),
        _ => return Err(Failure::Usage("check prints as text or json".into())),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}
