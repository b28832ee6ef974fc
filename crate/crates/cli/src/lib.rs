//! Command-line front end: reads matrix files, runs a canonical-form
//! computation and renders the result as text or JSON.
//!
//! Exit codes: 0 on success, 2 on any error. `similar` exits 1 when the two
//! matrices are not similar, like `cmp`.

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use frobenius::linalg::text::{parse_matrix, AnyMat};
use frobenius::{
    char_poly, is_similar, min_poly, nilpotent_jnf, rnf, Field, FieldCtx, Mat, Poly,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: frobenius::Error },
    #[error(transparent)]
    Compute(#[from] frobenius::Error),
    #[error("invalid field {0:?}: expected `rational` or `gf:<p>`")]
    InvalidField(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub fn parse_field(text: &str) -> Result<FieldCtx, CliError> {
    if text == "rational" {
        return Ok(FieldCtx::Rational);
    }
    text.strip_prefix("gf:")
        .and_then(|p| p.parse::<u64>().ok())
        .and_then(|p| FieldCtx::prime(p).ok())
        .ok_or_else(|| CliError::InvalidField(text.to_string()))
}

const AFTER_HELP: &str = "\
Matrix files start with `field rational` or `field gf <p>`, then `rows cols` (or `n`),
then one whitespace-separated row per line. Scalars are `a` or `a/b` over Q and
integers over GF(p). `#` starts a comment. Use `-` to read from stdin.

Text output prints polynomials in descending powers (`X^2 - 3*X + 2`). JSON output
lists polynomial coefficients in ascending order and every scalar as a string.

`similar` exits 0 when the matrices are similar, 1 when they are not, 2 on error.";

#[derive(Debug, Parser)]
#[command(name = "frobenius", version, about = "Exact rational normal forms over Q and GF(p)", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// Field to read entries over, overriding the file header: `rational` or `gf:<p>`.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldCtx>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also print the transformation matrix (or similarity witness).
    #[arg(long, global = true)]
    pub show_transform: bool,
    /// Re-verify the result by conjugation before printing.
    #[arg(long, global = true)]
    pub check: bool,
    /// Reserved; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Verb {
    /// Rational normal form with its invariant factors.
    Rnf { input: String },
    /// Invariant factors only.
    Factors { input: String },
    /// Minimal polynomial.
    Minpoly { input: String },
    /// Characteristic polynomial.
    Charpoly { input: String },
    /// Decide whether two matrices are similar.
    Similar { first: String, second: String },
    /// Jordan normal form of a nilpotent matrix.
    #[command(name = "jnf-nilpotent")]
    JnfNilpotent { input: String },
}

impl Verb {
    pub fn name(&self) -> &'static str {
        match self {
            Verb::Rnf { .. } => "rnf",
            Verb::Factors { .. } => "factors",
            Verb::Minpoly { .. } => "minpoly",
            Verb::Charpoly { .. } => "charpoly",
            Verb::Similar { .. } => "similar",
            Verb::JnfNilpotent { .. } => "jnf-nilpotent",
        }
    }

    pub fn inputs(&self) -> Vec<&str> {
        match self {
            Verb::Similar { first, second } => vec![first, second],
            Verb::Rnf { input }
            | Verb::Factors { input }
            | Verb::Minpoly { input }
            | Verb::Charpoly { input }
            | Verb::JnfNilpotent { input } => vec![input],
        }
    }
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a command, reading `-` inputs from `stdin`.
pub fn run(verb: &Verb, options: &Options, stdin: &mut dyn Read) -> Outcome {
    let mut texts = Vec::new();
    for path in verb.inputs() {
        match read_input(path, stdin) {
            Ok(t) => texts.push((path.to_string(), t)),
            Err(e) => return failure(e),
        }
    }
    run_on_text(verb, options, &texts)
}

/// Runs a command on already-loaded inputs, given as `(name, contents)` pairs.
pub fn run_on_text(verb: &Verb, options: &Options, inputs: &[(String, String)]) -> Outcome {
    match execute(verb, options, inputs) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => failure(e),
    }
}

fn failure(e: CliError) -> Outcome {
    Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

fn execute(verb: &Verb, options: &Options, inputs: &[(String, String)]) -> Result<(i32, String), CliError> {
    let mats = inputs
        .iter()
        .map(|(path, text)| {
            parse_matrix(text, options.field).map_err(|source| CliError::Input { path: path.clone(), source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let field = mats[0].field();
    if mats.iter().any(|m| m.field() != field) {
        return Err(frobenius::Error::MixedField.into());
    }
    let response = match field {
        FieldCtx::Rational => {
            let ms: Vec<Mat<frobenius::Rational>> = mats.into_iter().map(|m| match m {
                AnyMat::Rational(m) => m,
                AnyMat::Prime(_) => unreachable!("fields checked above"),
            }).collect();
            dispatch(verb, options, &ms)?
        }
        FieldCtx::Prime(_) => {
            let ms: Vec<Mat<frobenius::Fp>> = mats.into_iter().map(|m| match m {
                AnyMat::Prime(m) => m,
                AnyMat::Rational(_) => unreachable!("fields checked above"),
            }).collect();
            dispatch(verb, options, &ms)?
        }
    };
    let Response { code, text, mut json } = response;
    let stdout = if options.json {
        json.as_object_mut().expect("object").insert("field".into(), field_json(field));
        json.as_object_mut().expect("object").insert("command".into(), Value::from(verb.name()));
        let mut s = serde_json::to_string_pretty(&json).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    };
    Ok((code, stdout))
}

struct Response {
    code: i32,
    text: String,
    json: Value,
}

fn field_json(field: FieldCtx) -> Value {
    match field {
        FieldCtx::Rational => json!({ "kind": "rational" }),
        FieldCtx::Prime(p) => json!({ "kind": "gf", "modulus": p.modulus() }),
    }
}

fn poly_json<F: Field>(p: &Poly<F>) -> Value {
    Value::from(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn mat_json<F: Field>(m: &Mat<F>) -> Value {
    Value::from(
        (0..m.rows())
            .map(|i| Value::from(m.row(i).iter().map(|c| c.to_string()).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

fn factor_list<F: Field>(factors: &[Poly<F>]) -> String {
    let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn check_conjugation<F: Field>(a: &Mat<F>, t: &Mat<F>, expected: &Mat<F>, what: &str) -> Result<(), CliError> {
    if &a.conjugate(t)? == expected {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!("T^-1 A T differs from {what}")))
    }
}

fn dispatch<F: Field>(verb: &Verb, options: &Options, mats: &[Mat<F>]) -> Result<Response, CliError> {
    let a = &mats[0];
    let mut text = String::new();
    let response = match verb {
        Verb::Rnf { .. } | Verb::Factors { .. } => {
            let r = rnf(a)?;
            if options.check {
                check_conjugation(a, &r.transform, &r.rnf, "R")?;
            }
            text.push_str(&format!("factors: {}\n", factor_list(&r.factors)));
            let factors: Vec<Value> = r.factors.iter().map(poly_json).collect();
            let mut json = json!({ "factors": factors });
            if matches!(verb, Verb::Rnf { .. }) {
                text.push_str(&format!("R:\n{}", r.rnf));
                json["rnf"] = mat_json(&r.rnf);
            }
            if options.show_transform {
                text.push_str(&format!("T:\n{}", r.transform));
                json["transform"] = mat_json(&r.transform);
            }
            Response { code: 0, text, json }
        }
        Verb::Minpoly { .. } => {
            let mu = min_poly(a)?;
            if options.check && !mu.eval_matrix(a)?.is_zero() {
                return Err(CliError::CheckFailed("minimal polynomial does not annihilate A".into()));
            }
            Response { code: 0, text: format!("{mu}\n"), json: json!({ "minpoly": poly_json(&mu) }) }
        }
        Verb::Charpoly { .. } => {
            let chi = if options.check {
                let r = rnf(a)?;
                check_conjugation(a, &r.transform, &r.rnf, "R")?;
                r.factors.iter().fold(Poly::one(a.ctx()), |acc, p| &acc * p)
            } else {
                char_poly(a)?
            };
            Response { code: 0, text: format!("{chi}\n"), json: json!({ "charpoly": poly_json(&chi) }) }
        }
        Verb::Similar { .. } => {
            let b = &mats[1];
            let want = options.show_transform || options.check;
            let sim = is_similar(a, b, want)?;
            let mut json = json!({ "similar": sim.similar });
            text.push_str(if sim.similar { "similar\n" } else { "not similar\n" });
            if let Some(s) = &sim.witness {
                if options.check {
                    check_conjugation(a, s, b, "B")?;
                }
                if options.show_transform {
                    text.push_str(&format!("S:\n{s}"));
                    json["witness"] = mat_json(s);
                }
            }
            Response { code: if sim.similar { 0 } else { 1 }, text, json }
        }
        Verb::JnfNilpotent { .. } => {
            let j = nilpotent_jnf(a)?;
            if options.check {
                check_conjugation(a, &j.transform, &j.jnf, "J")?;
            }
            let sizes: Vec<String> = j.partition.iter().map(ToString::to_string).collect();
            text.push_str(&format!("partition: [{}]\nJ:\n{}", sizes.join(", "), j.jnf));
            let mut json = json!({ "partition": j.partition, "jnf": mat_json(&j.jnf) });
            if options.show_transform {
                text.push_str(&format!("T:\n{}", j.transform));
                json["transform"] = mat_json(&j.transform);
            }
            Response { code: 0, text, json }
        }
    };
    Ok(response)
}
