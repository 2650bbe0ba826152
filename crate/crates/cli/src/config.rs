//! Run configuration shared by every subcommand and echoed into every output.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use macfrob_core::{Caps, FieldSpec};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_SAMPLES: usize = 50;
pub const THREADS_ENV: &str = "MACFROB_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// Worker count: a fixed number, or whatever the machine offers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Threads {
    #[default]
    Auto,
    Fixed(usize),
}

impl fmt::Display for Threads {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threads::Auto => f.write_str("auto"),
            Threads::Fixed(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("auto") {
            return Ok(Threads::Auto);
        }
        match t.parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("bad thread count {s:?}; expected a positive integer or auto")),
            Ok(k) => Ok(Threads::Fixed(k)),
        }
    }
}

impl Serialize for Threads {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Threads::Auto => s.serialize_str("auto"),
            Threads::Fixed(k) => s.serialize_u64(*k as u64),
        }
    }
}

impl<'de> Deserialize<'de> for Threads {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Count(usize),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Count(0) => Err(serde::de::Error::custom("thread count must be positive")),
            Raw::Count(k) => Ok(Threads::Fixed(k)),
            Raw::Word(w) => w.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub field: FieldSpec,
    pub samples: usize,
    pub seed: u64,
    pub caps: Caps,
    pub output: OutputFormat,
    pub threads: Threads,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldSpec::default(),
            samples: DEFAULT_SAMPLES,
            seed: 0,
            caps: Caps::default(),
            output: OutputFormat::Text,
            threads: Threads::Auto,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        self.field.validate().map_err(|e| e.to_string())?;
        if self.samples == 0 {
            return Err("--samples must be at least 1".into());
        }
        let c = &self.caps;
        if c.matrix_cells == 0 || c.enum_spaces == 0 || c.sumset_size == 0 {
            return Err("all caps must be positive".into());
        }
        Ok(())
    }

    /// Load from a bare `RunConfig` document or from the `config` member of a
    /// saved report.
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let inner = value.get("config").cloned().unwrap_or(value);
        serde_json::from_value(inner).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Explicit setting first, then `MACFROB_THREADS`, then auto.
    pub fn resolve_threads(explicit: Option<Threads>) -> Result<Threads, String> {
        if let Some(t) = explicit {
            return Ok(t);
        }
        match std::env::var(THREADS_ENV) {
            Ok(v) if !v.trim().is_empty() => v.parse().map_err(|e| format!("{THREADS_ENV}: {e}")),
            _ => Ok(Threads::Auto),
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "macfrob {VERSION} | schema {SCHEMA_VERSION} | field {} | seed {} | samples {} | caps cells={} spaces={} sumset={} | threads {}",
            self.field,
            self.seed,
            self.samples,
            self.caps.matrix_cells,
            self.caps.enum_spaces,
            self.caps.sumset_size,
            self.threads
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let mut c = RunConfig::default();
        c.threads = Threads::Fixed(3);
        c.field = FieldSpec::Rationals;
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"threads\":3"));
        assert!(s.contains("\"field\":\"Q\""));
        assert_eq!(serde_json::from_str::<RunConfig>(&s).unwrap(), c);
        let auto = serde_json::to_string(&RunConfig::default()).unwrap();
        assert!(auto.contains("\"threads\":\"auto\""));
    }

    #[test]
    fn thread_parsing() {
        assert_eq!("auto".parse::<Threads>().unwrap(), Threads::Auto);
        assert_eq!("4".parse::<Threads>().unwrap(), Threads::Fixed(4));
        assert!("0".parse::<Threads>().is_err());
        assert!("x".parse::<Threads>().is_err());
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::default();
        assert!(c.validate().is_ok());
        c.caps.sumset_size = 0;
        assert!(c.validate().is_err());
    }
}
