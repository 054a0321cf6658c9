//! Batch verification driven by a TOML file.
//!
//! ```toml
//! labels = ["A2~", "C2~", "G2~"]
//! samples = 200
//! seed = 7
//! max_length = 6
//! ```

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::cartan::AffineCartanDatum;
use crate::error::{Error, Result};
use crate::hecke::relations::matsumoto;
use crate::hecke::Daha;
use crate::involution::{verify_homomorphism_samples, verify_duality};
use crate::lemmas::verify_all;
use crate::report::Status;
use crate::weyl::length_cross_check;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    pub labels: Vec<String>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_max_length")]
    pub max_length: usize,
}

fn default_samples() -> usize {
    200
}

fn default_max_length() -> usize {
    4
}

impl VerifyConfig {
    pub fn from_toml(src: &str) -> Result<Self> {
        toml::from_str(src).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let src = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&src)
    }
}

fn line(kind: &str, label: &str, name: &str, status: Status, witness: Option<String>) -> Value {
    let mut v = json!({"kind": kind, "type": label, "name": name, "status": status});
    if let Some(w) = witness {
        v["witness"] = json!(w);
    }
    v
}

/// Every check for every label, as JSON lines. The second value is `true`
/// when nothing failed.
pub fn run(config: &VerifyConfig) -> Result<(Vec<Value>, bool)> {
    let mut out = Vec::new();
    let mut ok = true;
    for label in &config.labels {
        let d = AffineCartanDatum::load(label)?;

        let (count, bad) = length_cross_check(&d, config.max_length)?;
        ok &= bad.is_empty();
        out.push(line(
            "weyl",
            label,
            &format!("lengths agree up to {}", config.max_length),
            Status::from_bool(bad.is_empty()),
            Some(if bad.is_empty() {
                format!("{count} elements")
            } else {
                format!("{count} elements; {}", bad.join("; "))
            }),
        ));

        let h = Daha::new(d.clone());
        let (checked, failures) = matsumoto(&h, config.max_length.min(5));
        ok &= failures.is_empty();
        out.push(line(
            "hecke",
            label,
            "reduced words agree",
            Status::from_bool(failures.is_empty()),
            Some(format!("{checked} words; failures {failures:?}")),
        ));

        let mut report = verify_duality(&d)?;
        report.checks.extend(verify_homomorphism_samples(&d, config.samples, config.seed)?.checks);
        ok &= report.passed();
        out.push(json!({"kind": "involution", "report": report.to_json()}));

        for lemma in verify_all(&d)? {
            ok &= lemma.status != Status::Fail;
            out.extend(lemma.json_lines());
        }
    }
    Ok((out, ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_defaults() {
        let c = VerifyConfig::from_toml("labels = [\"A1~\"]\nseed = 3").unwrap();
        assert_eq!(c.samples, 200);
        assert_eq!(c.seed, 3);
        assert!(VerifyConfig::from_toml("labels = 1").is_err());
        assert!(VerifyConfig::from_toml("labels = []\nbogus = 1").is_err());
    }
}
