//! Flat sections/key-value configuration files.
//!
//! ```text
//! [caps]
//! pbw-cap = 4
//! tree-cap = 4
//!
//! [run]
//! samples = 30
//! seed = 0
//! ```
//!
//! Section headers are optional grouping; keys are global. Precedence is
//! CLI flag > config file > built-in default.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

#[derive(Debug, Default, Clone)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        Config::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            if line.starts_with('[') {
                if !line.ends_with(']') {
                    bail!("config line {}: unterminated section header", lineno + 1);
                }
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("config line {}: expected key = value", lineno + 1);
            };
            values.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn get_u32(&self, key: &str) -> Result<Option<u32>> {
        self.values
            .get(key)
            .map(|v| v.parse::<u32>().with_context(|| format!("config key {key}")))
            .transpose()
    }

    pub fn get_u64(&self, key: &str) -> Result<Option<u64>> {
        self.values
            .get(key)
            .map(|v| v.parse::<u64>().with_context(|| format!("config key {key}")))
            .transpose()
    }

    pub fn get_usize(&self, key: &str) -> Result<Option<usize>> {
        self.values
            .get(key)
            .map(|v| v.parse::<usize>().with_context(|| format!("config key {key}")))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections_and_comments() {
        let c = Config::parse("# caps\n[caps]\npbw-cap = 3\n\n[run]\nseed=7\n").unwrap();
        assert_eq!(c.get_u32("pbw-cap").unwrap(), Some(3));
        assert_eq!(c.get_u64("seed").unwrap(), Some(7));
        assert_eq!(c.get_u32("tree-cap").unwrap(), None);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(Config::parse("pbw-cap 4").is_err());
    }
}
