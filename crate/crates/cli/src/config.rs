//! Flat `key = value` settings files.
//!
//! ```text
//! # defaults for the z^2-1 runs
//! p = z^2-1
//! alpha0 = 1
//! beta- = -q^-3
//! ```

use std::collections::BTreeMap;
use std::path::Path;

pub const KEYS: [&str; 12] = [
    "p", "algebra", "bound", "kmax", "samples", "seed", "alpha0", "alpha+", "alpha-", "beta+",
    "beta-", "nu",
];

/// Settings by key, with later sources overriding earlier ones.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("line {}: expected 'key = value'", i + 1));
            };
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(format!(
                    "line {}: unknown key '{key}' (known: {})",
                    i + 1,
                    KEYS.join(", ")
                ));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Settings { values })
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn set(&mut self, key: &str, value: Option<impl ToString>) {
        if let Some(v) = value {
            self.values.insert(key.to_string(), v.to_string());
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn number<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, String> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| format!("{key}: expected a nonnegative integer, got '{v}'"))
            })
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_overrides() {
        let mut s = Settings::parse("# c\np = z^2-1  # trailing\n\nbound=4\n").unwrap();
        assert_eq!(s.get("p"), Some("z^2-1"));
        assert_eq!(s.number::<u32>("bound").unwrap(), Some(4));
        s.set("bound", Some(2));
        s.set("kmax", None::<u32>);
        assert_eq!(s.number::<u32>("bound").unwrap(), Some(2));
        assert_eq!(s.get("kmax"), None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        assert!(Settings::parse("gamma = 1")
            .unwrap_err()
            .contains("unknown key"));
        assert!(Settings::parse("p z").unwrap_err().starts_with("line 1"));
        assert!(Settings::parse("bound = x")
            .unwrap()
            .number::<u32>("bound")
            .is_err());
    }
}
