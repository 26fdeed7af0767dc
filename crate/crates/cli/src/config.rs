//! Flat `key = value` config files and flag/file/default resolution.
//!
//! Keys are the long flag names without dashes prefix, e.g.
//!
//! ```text
//! # propagator run
//! omega-c = 2.0
//! variant = s2
//! output  = json
//! ```
//!
//! Blank lines and `#` comments are ignored. A flag given on the command
//! line wins over the file, which wins over the built-in default.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::CliError;

/// Every key any subcommand understands.
pub const KNOWN_KEYS: &[&str] = &[
    "output",
    "out",
    "seed",
    "trials",
    "suite",
    "tol-algebra",
    "tol-eigen",
    "tol-kinematics",
    "tol-special",
    "tol-oracle",
    "tol-fit",
    "b1",
    "b2",
    "orientation",
    "allow-square",
    "max-freq",
    "omega-min",
    "omega-max",
    "steps",
    "omega-c",
    "variant",
    "t0",
    "t1",
    "r0",
    "r1",
    "oracle",
    "one-dim",
    "d-min",
    "d-max",
    "samples",
];

#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("config line {}: expected key = value", n + 1))
            })?;
            let key = k.trim().trim_start_matches("--").to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(CliError::Usage(format!(
                    "config line {}: unknown key '{key}'",
                    n + 1
                )));
            }
            entries.insert(key, v.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config {}: {e}", path.display()))
        })?;
        Self::parse(&text)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    /// Flag if given, else the file entry parsed as `T`, else `None`.
    pub fn opt<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(s) => s.parse::<T>().map(Some).map_err(|e| {
                CliError::Usage(format!("config key '{key}': cannot parse '{s}': {e}"))
            }),
        }
    }

    pub fn get<T>(&self, flag: Option<T>, key: &str, default: T) -> Result<T, CliError>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        Ok(self.opt(flag, key)?.unwrap_or(default))
    }

    /// Switches: present on the command line, or `true` in the file.
    pub fn switch(&self, flag: bool, key: &str) -> Result<bool, CliError> {
        if flag {
            return Ok(true);
        }
        self.get(None, key, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let f = ConfigFile::parse("omega-c = 2.5\n# comment\n\nsteps=7 # trailing\n").unwrap();
        assert_eq!(f.get(Some(1.0), "omega-c", 9.0).unwrap(), 1.0);
        assert_eq!(f.get(None, "omega-c", 9.0).unwrap(), 2.5);
        assert_eq!(f.get::<f64>(None, "t0", 9.0).unwrap(), 9.0);
        assert_eq!(f.get::<usize>(None, "steps", 1).unwrap(), 7);
    }

    #[test]
    fn rejects_garbage() {
        assert!(ConfigFile::parse("no equals sign").is_err());
        assert!(ConfigFile::parse("colour = blue").is_err());
        let f = ConfigFile::parse("steps = many").unwrap();
        assert!(f.get::<usize>(None, "steps", 1).is_err());
    }

    #[test]
    fn switches() {
        let f = ConfigFile::parse("oracle = true").unwrap();
        assert!(f.switch(false, "oracle").unwrap());
        assert!(!f.switch(false, "one-dim").unwrap());
        assert!(f.switch(true, "one-dim").unwrap());
    }
}
