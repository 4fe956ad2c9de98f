//! Membership configuration files.
//!
//! ```toml
//! [[attribute]]
//! name = "age"
//!
//! [[attribute.label]]
//! name = "young"
//! truth = [0, 0, 25, 45]
//! indeterminacy = [0, 0, 28, 40]
//! falsity = [0, 0, 27.5, 37.5]
//!
//! [[output]]
//! name = "target"
//! # labels as above; `anchor` overrides the crisp position of a label
//! ```

use std::path::Path;

use serde::Deserialize;

use super::dataset::DatasetSchema;
use crate::error::{Error, Result};
use crate::membership::{AttributeMembership, LabelMembership, TrapezoidParams};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabel {
    name: String,
    truth: [f64; 4],
    indeterminacy: [f64; 4],
    falsity: [f64; 4],
    #[serde(default)]
    anchor: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAttribute {
    name: String,
    #[serde(default)]
    label: Vec<RawLabel>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    attribute: Vec<RawAttribute>,
    #[serde(default)]
    output: Vec<RawAttribute>,
}

/// Labels per input attribute and per output.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipConfig {
    pub attributes: Vec<AttributeMembership>,
    pub outputs: Vec<AttributeMembership>,
}

fn build(kind: &str, raw: Vec<RawAttribute>) -> Result<Vec<AttributeMembership>> {
    let mut out: Vec<AttributeMembership> = Vec::with_capacity(raw.len());
    for a in raw {
        if out.iter().any(|b| b.name == a.name) {
            return Err(Error::config(format!("{kind} `{}` is configured twice", a.name)));
        }
        if a.label.is_empty() {
            return Err(Error::config(format!("{kind} `{}` has no labels", a.name)));
        }
        let mut labels: Vec<LabelMembership> = Vec::with_capacity(a.label.len());
        for l in a.label {
            if labels.iter().any(|m| m.name == l.name) {
                return Err(Error::config(format!("{kind} `{}`: label `{}` appears twice", a.name, l.name)));
            }
            let params = TrapezoidParams::new(l.truth, l.indeterminacy, l.falsity)
                .map_err(|e| Error::config(format!("{kind} `{}`, label `{}`: {e}", a.name, l.name)))?;
            if let Some(x) = l.anchor {
                if !x.is_finite() {
                    return Err(Error::config(format!("{kind} `{}`, label `{}`: anchor must be finite", a.name, l.name)));
                }
            }
            labels.push(LabelMembership {
                name: l.name,
                params,
                anchor: l.anchor,
            });
        }
        out.push(AttributeMembership { name: a.name, labels });
    }
    Ok(out)
}

impl MembershipConfig {
    /// Parses and validates a TOML document.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text)?;
        Ok(MembershipConfig {
            attributes: build("attribute", raw.attribute)?,
            outputs: build("output", raw.output)?,
        })
    }

    pub fn attribute(&self, name: &str) -> Option<&AttributeMembership> {
        self.attributes.iter().find(|a| a.name == name)
    }

    pub fn output(&self, name: &str) -> Option<&AttributeMembership> {
        self.outputs.iter().find(|a| a.name == name)
    }

    /// Every schema attribute must have labels.
    pub fn check_coverage(&self, schema: &DatasetSchema) -> Result<()> {
        let missing: Vec<&str> = schema
            .attribute_names()
            .filter(|n| self.attribute(n).is_none())
            .collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::config(format!(
                "no membership configured for attribute(s) {} of dataset `{}`",
                missing.join(", "),
                schema.name
            )))
        }
    }
}

/// Reads and validates a membership config file.
pub fn load_membership_config(path: impl AsRef<Path>) -> Result<MembershipConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    MembershipConfig::parse(&text)
}
