//! Optional `key=value` configuration file.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// Settings read from a config file. Command-line flags take precedence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub suite: Option<String>,
    pub max_n: Option<usize>,
    pub max_dim: Option<usize>,
    pub format: Option<String>,
    pub timing: Option<bool>,
    pub threads: Option<usize>,
}

const KEYS: [&str; 6] = ["suite", "max_n", "max_N", "format", "timing", "threads"];

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Config::parse(&text)
    }

    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Config> {
        let mut map = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                bail!("line {}: expected key=value", no + 1);
            };
            let (k, v) = (k.trim(), v.trim());
            if !KEYS.contains(&k) {
                bail!("line {}: unknown key {k:?}", no + 1);
            }
            map.insert(k.to_string(), v.to_string());
        }
        let num = |k: &str| -> Result<Option<usize>> {
            map.get(k).map(|v| v.parse().with_context(|| format!("{k} must be a number"))).transpose()
        };
        Ok(Config {
            suite: map.get("suite").cloned(),
            max_n: num("max_n")?,
            max_dim: num("max_N")?,
            format: map.get("format").cloned(),
            timing: map.get("timing").map(|v| v.parse().context("timing must be true or false")).transpose()?,
            threads: num("threads")?,
        })
    }
}
