//! State input: `--r/--s/--c` triples and `--state file.json`.

use std::fs;
use std::path::Path;

use discord_core::density::build_state;
use discord_core::BlochParams;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSpec {
    #[serde(default)]
    pub r: [f64; 3],
    #[serde(default)]
    pub s: [f64; 3],
    #[serde(default)]
    pub c: [f64; 3],
    #[serde(default)]
    pub label: Option<String>,
}

impl StateSpec {
    pub fn params(&self) -> BlochParams {
        BlochParams::new(self.r, self.s, self.c)
    }

    /// The parameters, checked for physicality.
    pub fn physical(&self) -> Result<BlochParams> {
        let p = self.params();
        build_state(&p)?;
        Ok(p)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        serde_json::from_str(&text).map_err(|source| CliError::StateFile { path: path.into(), source })
    }

    /// Starts from `file` (if any) and overrides with whichever flags are set.
    pub fn resolve(
        file: Option<&Path>,
        r: Option<&str>,
        s: Option<&str>,
        c: Option<&str>,
        label: Option<&str>,
    ) -> Result<Self> {
        let mut spec = match file {
            Some(path) => Self::from_file(path)?,
            None => Self::default(),
        };
        for (flag, text, slot) in [("--r", r, &mut spec.r), ("--s", s, &mut spec.s), ("--c", c, &mut spec.c)] {
            if let Some(text) = text {
                *slot = parse_triple(flag, text)?;
            }
        }
        if let Some(label) = label {
            spec.label = Some(label.to_owned());
        }
        Ok(spec)
    }
}

/// Parses `x,y,z`. Errors name the flag, the component and its column.
pub fn parse_triple(flag: &str, text: &str) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    let mut column = 1;
    let mut count = 0;
    for (i, field) in text.split(',').enumerate() {
        if i >= 3 {
            return Err(CliError::Parse(format!(
                "{flag} {text:?}: expected 3 comma-separated numbers, found an extra component at column {column}"
            )));
        }
        let trimmed = field.trim();
        out[i] = trimmed.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| {
            CliError::Parse(format!(
                "{flag} {text:?}: component {} at column {column} is not a finite number: {trimmed:?}",
                i + 1
            ))
        })?;
        column += field.chars().count() + 1;
        count += 1;
    }
    if count < 3 {
        return Err(CliError::Parse(format!(
            "{flag} {text:?}: expected 3 comma-separated numbers, found {count} (missing component {} at column {column})",
            count + 1
        )));
    }
    Ok(out)
}
