use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::{parse_poly, read_calibration, write_calibration, Context, ResultDocument};
use crate::cochain::{
    g0_action, hwv_complete, weight_of_monomial, CochainError, CochainSection, RootLabel, Weight,
};
use crate::dirac::{apply_2dirac, calibrate, graded_kernel_dim, Calibration};
use crate::exactalg::format_rational;
use crate::interface::format_poly;
use crate::repn::{decompose_mk, IrrepLabel};
use crate::transform::{penrose_transform, SpinorField};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "penrose",
    about = "Exact Penrose transform and 2-Dirac kernel computations"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Penrose transform of a cochain section.
    Transform {
        #[arg(long)]
        section: String,
    },
    /// Weight of each monomial of a section.
    Weight {
        #[arg(long)]
        section: String,
    },
    /// Action of a root vector (A12, E12, E21, E23, E32, E34, E43).
    Act {
        #[arg(long)]
        root: String,
        #[arg(long)]
        section: String,
    },
    /// Whether a spinor "E1;E2;E3;E4" is annihilated by the 2-Dirac operator.
    CheckMonogenic {
        #[arg(long)]
        spinor: String,
    },
    /// Dimension of the degree-K monogenic spinors.
    KernelDim {
        #[arg(long)]
        degree: u32,
    },
    /// Irreducible summands in degree K.
    Decompose {
        #[arg(long)]
        degree: u32,
    },
    /// Highest weight vector for the label (a, b, l) and its transform.
    Hwv {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        l: u32,
    },
    /// Fix the operator conventions and write the calibration file.
    Calibrate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn spinor_json(s: &SpinorField) -> Value {
    Value::Array(
        s.components()
            .iter()
            .map(|c| json!(format_poly(c)))
            .collect(),
    )
}

fn weight_json(w: &Weight) -> Value {
    json!({
        "gl2": w.gl2.iter().map(format_rational).collect::<Vec<_>>(),
        "gl4": w.gl4,
        "sl4_normalized": w.sl4_normalized(),
        "dominant": w.is_dominant(),
    })
}

fn calibration_json(c: &Calibration) -> Value {
    json!({
        "epsilon": if c.epsilon > 0 { "+1" } else { "-1" },
        "clifford_norm": format_rational(&c.clifford_norm),
    })
}

fn section_arg(text: &str) -> Result<CochainSection, Outcome> {
    let p = parse_poly(text, Context::Section).map_err(|e| Outcome::fail(EXIT_PARSE, e))?;
    CochainSection::new(p).map_err(|e| Outcome::fail(EXIT_INTERNAL, e))
}

fn spinor_arg(text: &str) -> Result<SpinorField, Outcome> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 4 {
        return Err(Outcome::fail(
            EXIT_PARSE,
            format!(
                "expected 4 components separated by ';', got {}",
                parts.len()
            ),
        ));
    }
    let mut comps = Vec::new();
    for p in parts {
        comps.push(parse_poly(p, Context::Spinor).map_err(|e| Outcome::fail(EXIT_PARSE, e))?);
    }
    SpinorField::new(comps.try_into().expect("four")).map_err(|e| Outcome::fail(EXIT_INTERNAL, e))
}

/// Runs one command with `dir` as the working directory for the
/// calibration file.
pub fn run_command<I, T>(argv: I, dir: &Path) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let doc = match dispatch(&cli.command, dir) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let stdout = match cli.format {
        Format::Json => doc.to_json(),
        Format::Table => doc.to_table(),
    };
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

fn dispatch(cmd: &Command, dir: &Path) -> Result<ResultDocument, Outcome> {
    if let Command::Calibrate = cmd {
        return run_calibrate(dir);
    }
    let cal = read_calibration(dir).map_err(|e| Outcome::fail(EXIT_PRECONDITION, e))?;
    let provenance = calibration_json(&cal);
    let doc = |command: &str, input: Option<String>, outputs: Value| ResultDocument {
        command: command.to_string(),
        input,
        outputs,
        provenance: provenance.clone(),
    };
    Ok(match cmd {
        Command::Transform { section } => {
            let f = section_arg(section)?;
            let p = penrose_transform(&f);
            doc(
                "transform",
                Some(format_poly(f.body())),
                json!({ "spinor": spinor_json(&p) }),
            )
        }
        Command::Weight { section } => {
            let f = section_arg(section)?;
            if f.is_zero() {
                return Err(Outcome::fail(
                    EXIT_PRECONDITION,
                    "zero section has no weight",
                ));
            }
            let rows: Vec<Value> = f
                .monomials()
                .iter()
                .map(|(m, c)| {
                    let w = weight_of_monomial(m).expect("monomial");
                    json!({ "monomial": format_poly(m.body()), "coefficient": format_rational(c), "weight": weight_json(&w) })
                })
                .collect();
            doc(
                "weight",
                Some(format_poly(f.body())),
                json!({ "monomials": rows }),
            )
        }
        Command::Act { root, section } => {
            let r: RootLabel = root
                .parse()
                .map_err(|e: CochainError| Outcome::fail(EXIT_PARSE, e))?;
            let f = section_arg(section)?;
            let g = g0_action(r, &f);
            doc(
                "act",
                Some(format_poly(f.body())),
                json!({ "root": r.name(), "result": format_poly(g.body()) }),
            )
        }
        Command::CheckMonogenic { spinor } => {
            let s = spinor_arg(spinor)?;
            let img = apply_2dirac(&cal.operator(), &s);
            let monogenic = img.iter().flatten().all(|p| p.is_zero());
            let image: Vec<Vec<String>> = img
                .iter()
                .map(|c| c.iter().map(format_poly).collect())
                .collect();
            doc(
                "check-monogenic",
                Some(spinor_json(&s).to_string()),
                json!({ "monogenic": monogenic, "image": image }),
            )
        }
        Command::KernelDim { degree } => {
            let d = graded_kernel_dim(&cal.operator(), *degree);
            let expected: u64 = decompose_mk(*degree).iter().map(|(_, m)| m.dimension).sum();
            doc(
                "kernel-dim",
                None,
                json!({ "degree": degree, "dimension": d, "decomposition_total": expected }),
            )
        }
        Command::Decompose { degree } => {
            let rows: Vec<Value> = decompose_mk(*degree)
                .iter()
                .map(|(l, m)| {
                    json!({
                        "label": [l.a, l.b, l.l],
                        "gl2": m.gl2_weight.iter().map(format_rational).collect::<Vec<_>>(),
                        "sl4": m.sl4_weight,
                        "dimension": m.dimension,
                    })
                })
                .collect();
            let total: u64 = decompose_mk(*degree).iter().map(|(_, m)| m.dimension).sum();
            doc(
                "decompose",
                None,
                json!({ "degree": degree, "summands": rows, "total": total }),
            )
        }
        Command::Hwv { a, b, l } => {
            let label = IrrepLabel::new(*a, *b, *l);
            let f = hwv_complete(&label).map_err(|e| match e {
                CochainError::Inconsistent { .. } | CochainError::NotUnique { .. } => {
                    Outcome::fail(EXIT_INTERNAL, e)
                }
                other => Outcome::fail(EXIT_PRECONDITION, other),
            })?;
            let p = penrose_transform(&f);
            doc(
                "hwv",
                Some(label.to_string()),
                json!({ "section": format_poly(f.body()), "spinor": spinor_json(&p) }),
            )
        }
        Command::Calibrate => unreachable!("handled above"),
    })
}

fn run_calibrate(dir: &Path) -> Result<ResultDocument, Outcome> {
    let report = calibrate().map_err(|e| Outcome::fail(EXIT_INTERNAL, e))?;
    write_calibration(dir, &report.calibration).map_err(|e| Outcome::fail(EXIT_PRECONDITION, e))?;
    Ok(ResultDocument {
        command: "calibrate".into(),
        input: None,
        outputs: json!({
            "reference_monogenic": report.reference_monogenic,
            "probes_monogenic": report.probes_monogenic,
            "third_item_discrepancy": report.discrepancies,
            "difference_monogenic": report.difference_monogenic,
        }),
        provenance: calibration_json(&report.calibration),
    })
}
