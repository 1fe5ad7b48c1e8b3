use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::dirac::{format_calibration, Calibration};
use crate::exactalg::{parse_rational, Rational};

pub const CONFIG_FILE: &str = "penrose-calibration.txt";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{CONFIG_FILE} not found in {0}; run `penrose calibrate` first")]
    Missing(String),
    #[error("{CONFIG_FILE}: {0}")]
    Invalid(String),
    #[error("{CONFIG_FILE}: {0}")]
    Io(#[from] std::io::Error),
}

pub fn read_calibration(dir: &Path) -> Result<Calibration, ConfigError> {
    let path = dir.join(CONFIG_FILE);
    if !path.exists() {
        return Err(ConfigError::Missing(dir.display().to_string()));
    }
    let text = fs::read_to_string(&path)?;
    let mut epsilon = None;
    let mut norm: Option<Rational> = None;
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| ConfigError::Invalid(format!("line {}: expected key = value", n + 1)))?;
        match (k.trim(), v.trim()) {
            ("epsilon", "+1" | "1") => epsilon = Some(1),
            ("epsilon", "-1") => epsilon = Some(-1),
            ("epsilon", other) => {
                return Err(ConfigError::Invalid(format!(
                    "epsilon must be +1 or -1, got {other}"
                )))
            }
            ("clifford_norm", v) => {
                let r = parse_rational(v)
                    .filter(|r| *r != Rational::from_integer(0.into()))
                    .ok_or_else(|| {
                        ConfigError::Invalid(format!(
                            "clifford_norm must be a nonzero p/q, got {v}"
                        ))
                    })?;
                norm = Some(r);
            }
            (other, _) => return Err(ConfigError::Invalid(format!("unknown key {other}"))),
        }
    }
    match (epsilon, norm) {
        (Some(epsilon), Some(clifford_norm)) => Ok(Calibration {
            epsilon,
            clifford_norm,
        }),
        _ => Err(ConfigError::Invalid(
            "both epsilon and clifford_norm are required".into(),
        )),
    }
}

pub fn write_calibration(dir: &Path, c: &Calibration) -> Result<(), ConfigError> {
    fs::write(dir.join(CONFIG_FILE), format_calibration(c))?;
    Ok(())
}
