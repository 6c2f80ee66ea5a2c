//! Command-line front end. Reports go to standard output as JSON (keys
//! sorted, rationals as strings) or RFC 4180 CSV; a one-line summary goes to
//! standard error.
//!
//! Exit codes: 0 success, 2 invalid input, 1 failed self-check or internal
//! error.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::bracket;
use crate::error::{Error, Result};
use crate::kostant::dim_oracle;
use crate::quotient::{demo_infinite_dim, demo_nonintegrability, lchar_oracle, w_multiplicity};
use crate::reducibility::is_reducible_with_kmax;
use crate::roots::{
    classify, coroot, dot_action, is_positive, reflect, RootKind, RootVector, SimpleReflection,
    Weight,
};
use crate::singular::{etas_up_to_depth, find_singular, scan_singular, scan_vs_dot_orbit};
use crate::syntax::{parse_element, parse_pair, parse_triple};
use crate::verma::{HighestWeight, VermaModule};
use crate::VERSION;

#[derive(Debug, Parser)]
#[command(
    name = "toroidal",
    version,
    about = "Exact computations for toroidal sl2"
)]
struct Cli {
    /// Worker threads for weight-space scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct WeightArg {
    /// Highest weight as {"h","c1","c2","d1","d2"} with rational strings.
    #[arg(long)]
    weight: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bracket of two elements, e.g. `bracket "e(1,0)" "f(-1,0)"`.
    Bracket { a: String, b: String },
    /// Roots `a·α + n1·δ1 + n2·δ2` with |n1|, |n2| <= depth and their signs.
    Roots {
        #[arg(long, default_value_t = 2)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Reflection `r_β(λ)` for a real root `a,n1,n2`, or `w(λ)` and `w·λ`
    /// for a word in `r0`, `r1` such as `1,0,1` (rightmost acts first).
    Reflect {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "word",
            required_unless_present = "word"
        )]
        root: Option<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// PBW and partition-function dimensions of `M(λ)_{λ−η}` for depth(η) <= depth.
    Dims {
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Singular vectors at δ2-level 0 up to the given depth.
    Singular {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, default_value_t = 8)]
        depth: u32,
        /// Certificate for a single η given as `a0,a1`.
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
    },
    /// Reducibility of `M(λ)` with its resonance witnesses.
    Reducible {
        #[command(flatten)]
        weight: WeightArg,
        /// List witnesses only up to this δ1-degree; the verdict stays exact.
        #[arg(long)]
        kmax: Option<u64>,
    },
    /// Weight multiplicities of `W(λ)` against the `L(λ)` character.
    QuotientChar {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, default_value_t = 6)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Non-integrability and infinite-dimensionality computations.
    Demos {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[arg(long, default_value_t = 10)]
        size: u32,
    },
}

/// Outcome of a command before it is written out.
struct Report {
    body: Body,
    summary: String,
    /// False when a self-check inside the report failed.
    ok: bool,
}

enum Body {
    Json(Value),
    Csv(Vec<String>, Vec<Vec<String>>),
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| match cli.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("--jobs: {e}")))
            .and_then(|pool| pool.install(|| execute(&cli.command))),
        None => execute(&cli.command),
    }));
    match outcome {
        Ok(Ok(report)) => match emit(&report, out, err) {
            Ok(()) if report.ok => 0,
            Ok(()) => {
                let _ = writeln!(err, "error: self-check failed");
                1
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            let _ = writeln!(err, "internal error: {msg}");
            1
        }
    }
}

fn emit(report: &Report, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<()> {
    match &report.body {
        Body::Json(v) => {
            let text = serde_json::to_string_pretty(v).expect("values serialize");
            writeln!(out, "{text}")?;
        }
        Body::Csv(header, rows) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header)?;
            for r in rows {
                w.write_record(r)?;
            }
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            out.write_all(&bytes)?;
        }
    }
    writeln!(err, "{}", report.summary)
}

fn envelope(command: &str, input: Value, result: Value) -> Value {
    json!({
        "command": command,
        "version": VERSION,
        "input": input,
        "result": result,
    })
}

fn load_weight(arg: &WeightArg) -> Result<(Weight, HighestWeight)> {
    let w = Weight::from_json(&arg.weight)?;
    let hw = HighestWeight::from_weight(&w)?;
    Ok((w, hw))
}

fn coords(eta: &RootVector) -> [i64; 2] {
    let (a0, a1) = eta.affine_coords().unwrap_or_default();
    [a0, a1]
}

fn eta_text(eta: &RootVector) -> String {
    let [a0, a1] = coords(eta);
    format!("{a0},{a1}")
}

fn table(
    format: Format,
    command: &str,
    input: Value,
    header: &[&str],
    rows: Vec<Vec<Value>>,
) -> Body {
    match format {
        Format::Csv => {
            let cell = |v: &Value| match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            Body::Csv(
                header.iter().map(|h| h.to_string()).collect(),
                rows.iter().map(|r| r.iter().map(cell).collect()).collect(),
            )
        }
        Format::Json => {
            let objects: Vec<Value> = rows
                .into_iter()
                .map(|r| {
                    let map: serde_json::Map<String, Value> =
                        header.iter().map(|h| h.to_string()).zip(r).collect();
                    Value::Object(map)
                })
                .collect();
            Body::Json(envelope(command, input, json!({ "rows": objects })))
        }
    }
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Bracket { a, b } => {
            let x = parse_element(a)?;
            let y = parse_element(b)?;
            let z = bracket(&x, &y);
            let mut result = z.to_json_value();
            result["text"] = json!(z.to_string());
            Ok(Report {
                summary: format!("[{x}, {y}] = {z}"),
                body: Body::Json(envelope("bracket", json!({ "a": a, "b": b }), result)),
                ok: true,
            })
        }
        Command::Roots { depth, format } => {
            let d = i64::from(*depth);
            let mut rows = Vec::new();
            for n2 in -d..=d {
                for n1 in -d..=d {
                    for a in -1..=1 {
                        let r = RootVector::new(a, n1, n2);
                        let kind = classify(&r);
                        if kind == RootKind::NotRoot {
                            continue;
                        }
                        let positive = is_positive(&r)?;
                        rows.push(vec![
                            json!(r.to_string()),
                            json!(a),
                            json!(n1),
                            json!(n2),
                            json!(kind),
                            json!(positive),
                        ]);
                    }
                }
            }
            let n = rows.len();
            let positive = rows.iter().filter(|r| r[5] == json!(true)).count();
            Ok(Report {
                summary: format!("{n} roots in the box, {positive} positive"),
                body: table(
                    *format,
                    "roots",
                    json!({ "depth": depth }),
                    &["root", "a", "n1", "n2", "kind", "positive"],
                    rows,
                ),
                ok: true,
            })
        }
        Command::Reflect { weight, root, word } => {
            let lam = Weight::from_json(&weight.weight)?;
            let input = json!({ "weight": lam.to_json_value(), "root": root, "word": word });
            if let Some(text) = root {
                let (a, n1, n2) = parse_triple(text)?;
                let beta = RootVector::new(a, n1, n2);
                let image = reflect(&beta, &lam)?;
                let pairing = lam.eval(&coroot(&beta)?);
                Ok(Report {
                    summary: format!("r_({beta}) maps the weight to {image}"),
                    body: Body::Json(envelope(
                        "reflect",
                        input,
                        json!({
                            "root": beta.to_string(),
                            "pairing": crate::rational::format_rational(&pairing),
                            "reflected": image.to_json_value(),
                        }),
                    )),
                    ok: true,
                })
            } else {
                let text = word.as_deref().unwrap_or_default();
                let letters = parse_word(text)?;
                let linear = letters
                    .iter()
                    .rev()
                    .try_fold(lam.clone(), |acc, s| reflect(&s.root(), &acc))?;
                let dotted = dot_action(&letters, &lam);
                Ok(Report {
                    summary: format!("w·λ = {dotted}"),
                    body: Body::Json(envelope(
                        "reflect",
                        input,
                        json!({
                            "word": letters.iter().map(letter).collect::<Vec<_>>(),
                            "linear": linear.to_json_value(),
                            "dot": dotted.to_json_value(),
                        }),
                    )),
                    ok: true,
                })
            }
        }
        Command::Dims { depth, format } => {
            let module = VermaModule::new(HighestWeight::dominant(0, 0));
            let mut etas = vec![RootVector::ZERO];
            etas.extend(etas_up_to_depth(*depth));
            let mut rows = Vec::new();
            let mut ok = true;
            for eta in &etas {
                let pbw = module.weight_space_basis(eta)?.len() as u128;
                let oracle = dim_oracle(eta)?;
                ok &= pbw == oracle;
                rows.push(vec![json!(eta_text(eta)), json!(pbw), json!(oracle)]);
            }
            Ok(Report {
                summary: format!(
                    "{} weight spaces, PBW count {} the partition function",
                    rows.len(),
                    if ok { "matches" } else { "DIFFERS FROM" }
                ),
                body: table(
                    *format,
                    "dims",
                    json!({ "depth": depth }),
                    &["eta", "pbw", "oracle"],
                    rows,
                ),
                ok,
            })
        }
        Command::Singular { weight, depth, eta } => {
            let (w, hw) = load_weight(weight)?;
            let module = VermaModule::new(hw.clone());
            let etas: Vec<RootVector> = match eta {
                Some(text) => {
                    let (a0, a1) = parse_pair(text)?;
                    let e = RootVector::from_affine_coords(a0, a1);
                    if !e.in_affine_positive_lattice() {
                        return Err(Error::InvalidField {
                            field: "eta".into(),
                            msg: "coordinates must be non-negative".into(),
                        });
                    }
                    vec![e]
                }
                None => scan_singular(&hw, *depth)
                    .into_iter()
                    .map(|(e, _)| e)
                    .collect(),
            };
            let mut certificates = Vec::new();
            let mut ok = true;
            for e in &etas {
                let cert = find_singular(&module, e)?;
                ok &= cert.verified();
                let mut v = cert.to_json_value();
                v["kernel_text"] = json!(cert
                    .kernel
                    .iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>());
                certificates.push(v);
            }
            let orbit = match (eta, hw.dominant_integral()) {
                (None, Some(_)) => {
                    let r = scan_vs_dot_orbit(&hw, *depth)?;
                    ok &= r.predicted_found();
                    r.to_json_value()
                }
                _ => Value::Null,
            };
            let found = certificates
                .iter()
                .filter(|c| c["kernel_dim"] != json!(0))
                .count();
            Ok(Report {
                summary: format!("{found} weights with singular vectors"),
                body: Body::Json(envelope(
                    "singular",
                    json!({ "weight": w.to_json_value(), "depth": depth, "eta": eta }),
                    json!({ "certificates": certificates, "dot_orbit": orbit }),
                )),
                ok,
            })
        }
        Command::Reducible { weight, kmax } => {
            let (w, hw) = load_weight(weight)?;
            let report = is_reducible_with_kmax(&hw, *kmax);
            let summary = match report.smallest_witness() {
                Some(p) => format!("reducible; smallest witness ({}, {})", p.beta, p.l),
                None if report.verdict => "reducible; no witness up to kmax".into(),
                None => "irreducible".into(),
            };
            Ok(Report {
                summary,
                body: Body::Json(envelope(
                    "reducible",
                    json!({ "weight": w.to_json_value(), "kmax": kmax }),
                    serde_json::to_value(&report).expect("report serializes"),
                )),
                ok: true,
            })
        }
        Command::QuotientChar {
            weight,
            depth,
            format,
        } => {
            let (w, hw) = load_weight(weight)?;
            let mut etas = vec![RootVector::ZERO];
            etas.extend(etas_up_to_depth(*depth));
            let module = VermaModule::new(hw.clone());
            let mut rows = Vec::new();
            let mut ok = true;
            for eta in &etas {
                let q = w_multiplicity(&module, eta)?;
                let l = lchar_oracle(&hw, eta)?;
                ok &= q.quotient_dim as i128 == l;
                rows.push(vec![
                    json!(eta_text(eta)),
                    json!(q.ambient_dim),
                    json!(q.submodule_dim),
                    json!(q.quotient_dim),
                    json!(l),
                ]);
            }
            Ok(Report {
                summary: format!(
                    "{} weight spaces; quotient {} the L character",
                    rows.len(),
                    if ok { "matches" } else { "DIFFERS FROM" }
                ),
                body: table(
                    *format,
                    "quotient-char",
                    json!({ "weight": w.to_json_value(), "depth": depth }),
                    &["eta", "ambient", "submodule", "quotient", "l_oracle"],
                    rows,
                ),
                ok,
            })
        }
        Command::Demos { weight, nmax, size } => {
            let (w, hw) = load_weight(weight)?;
            let transcript = demo_nonintegrability(&hw, *nmax)?;
            let matrix = demo_infinite_dim(&hw, *size)?;
            let ok = transcript.all_hold() && matrix.pattern_ok;
            Ok(Report {
                summary: format!(
                    "{} identities checked; pairing matrix rank {} of {}",
                    transcript.lines.len(),
                    matrix.rank,
                    matrix.size
                ),
                body: Body::Json(envelope(
                    "demos",
                    json!({ "weight": w.to_json_value(), "nmax": nmax, "size": size }),
                    json!({
                        "nonintegrability": transcript,
                        "infinite_dim": matrix,
                        "all_hold": ok,
                    }),
                )),
                ok,
            })
        }
    }
}

fn letter(s: &SimpleReflection) -> &'static str {
    match s {
        SimpleReflection::R0 => "r0",
        SimpleReflection::R1 => "r1",
    }
}

/// `1,0,1` or `r1,r0,r1`; the empty string is the identity.
fn parse_word(text: &str) -> Result<Vec<SimpleReflection>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.trim_start_matches('r') {
            "0" => Ok(SimpleReflection::R0),
            "1" => Ok(SimpleReflection::R1),
            _ => Err(Error::InvalidField {
                field: "word".into(),
                msg: format!("unknown reflection {s:?}"),
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["toroidal"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    const ZERO: &str = r#"{"h":"0","c1":"0","c2":"0","d1":"0","d2":"0"}"#;

    #[test]
    fn bracket_command() {
        let (code, out, _) = call(&["bracket", "e(1,0)", "f(-1,0)"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["text"], "h(0,0) + c1");
        assert_eq!(v["command"], "bracket");
    }

    #[test]
    fn reducible_command() {
        let (code, out, err) = call(&["reducible", "--weight", ZERO]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["verdict"], true);
        assert_eq!(v["result"]["witnesses"][0]["beta"], "a");
        assert_eq!(v["result"]["witnesses"][0]["l"], 1);
        assert!(err.contains("reducible"));
    }

    #[test]
    fn invalid_weight_names_field() {
        let (code, _, err) = call(&[
            "reducible",
            "--weight",
            r#"{"h":"0","c1":"x","c2":"0","d1":"0","d2":"0"}"#,
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("c1"), "{err}");
        let (code, _, err) = call(&[
            "reducible",
            "--weight",
            r#"{"h":"0","c1":"1","d1":"0","d2":"0"}"#,
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("c2"), "{err}");
        let (code, _, _) = call(&["reducible"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("").unwrap(), vec![]);
        assert_eq!(
            parse_word("r1, 0").unwrap(),
            vec![SimpleReflection::R1, SimpleReflection::R0]
        );
        assert!(parse_word("2").is_err());
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("quotient-char"));
    }
}
