//! Command-line front end: expression parsing, the calibration file and
//! structured result documents.

pub mod cli;
mod config;
mod parse;

pub use cli::{run_command, Outcome};
pub use config::{read_calibration, write_calibration, ConfigError, CONFIG_FILE};
pub use parse::{
    ast_to_poly, format_poly, parse_expr, parse_poly, Context, ExprAst, ParseError, Term,
};

use serde::Serialize;
use serde_json::Value;

/// Output of one command. Keys serialise in sorted order, so JSON output
/// is deterministic.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ResultDocument {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub outputs: Value,
    pub provenance: Value,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable") + "\n"
    }

    /// Aligned `key  value` lines; nested values are flattened with dotted
    /// keys.
    pub fn to_table(&self) -> String {
        let mut rows = vec![("command".to_string(), self.command.clone())];
        if let Some(i) = &self.input {
            rows.push(("input".into(), i.clone()));
        }
        flatten("", &self.outputs, &mut rows);
        flatten("provenance", &self.provenance, &mut rows);
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), format!("({})", parts.join(", "))));
        }
        Value::Null => {}
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
