//! Plain-text (TOML) configuration: extra processing profiles, cipher
//! throughput caps, and CPU slopes.
//!
//! ```toml
//! [[profiles]]
//! name = "lab-fronthaul"
//! anchors = [[62, 35.0], [9000, 140.0]]
//!
//! [caps]
//! aes256-gcm = 1500
//!
//! [cpu]
//! pt_slope_pct_per_mbps = 0.004
//! ct_slope_pct_per_mbps = 0.25
//! saturation = 1.0
//! ```

use serde::Deserialize;
use thiserror::Error;

use crate::delay::ProcessingProfile;
use crate::overhead::CipherId;
use crate::perf::{CipherCapTable, CpuModel};
use crate::profiles;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("config: {0}")]
    Invalid(String),
}

#[derive(Debug, Default, Deserialize)]
struct ConfigFile {
    #[serde(default)]
    profiles: Vec<ProfileEntry>,
    caps: Option<std::collections::BTreeMap<String, f64>>,
    cpu: Option<CpuEntry>,
}

#[derive(Debug, Deserialize)]
struct ProfileEntry {
    name: String,
    anchors: Vec<[f64; 2]>,
}

#[derive(Debug, Deserialize)]
struct CpuEntry {
    pt_slope_pct_per_mbps: f64,
    ct_slope_pct_per_mbps: f64,
    #[serde(default = "default_saturation")]
    saturation: f64,
}

fn default_saturation() -> f64 {
    1.0
}

/// Merged view of the builtin defaults and a config file.
#[derive(Debug, Clone)]
pub struct Config {
    user_profiles: Vec<ProcessingProfile>,
    pub caps: CipherCapTable,
    pub cpu: CpuModel,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            user_profiles: Vec::new(),
            caps: CipherCapTable::measured(),
            cpu: CpuModel::default(),
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Config, ConfigError> {
        let file: ConfigFile = toml::from_str(text)?;
        let mut config = Config::default();
        for entry in file.profiles {
            let anchors = entry.anchors.iter().map(|a| (a[0], a[1])).collect();
            let profile = ProcessingProfile::new(entry.name, anchors)
                .map_err(|e| ConfigError::Invalid(e.to_string()))?;
            config.user_profiles.push(profile);
        }
        if let Some(caps) = file.caps {
            for (name, cap) in caps {
                let cipher: CipherId = name
                    .parse()
                    .map_err(|_| ConfigError::Invalid(format!("unknown cipher `{name}`")))?;
                if !(cap > 0.0) {
                    return Err(ConfigError::Invalid(format!(
                        "cap for {name} must be > 0 Mb/s"
                    )));
                }
                config.caps.set(cipher, cap);
            }
        }
        if let Some(cpu) = file.cpu {
            config.cpu = CpuModel {
                pt_slope_per_mbps: cpu.pt_slope_pct_per_mbps / 100.0,
                ct_slope_per_mbps: cpu.ct_slope_pct_per_mbps / 100.0,
                saturation: cpu.saturation,
            };
            config
                .cpu
                .validate()
                .map_err(|e| ConfigError::Invalid(e.to_string()))?;
        }
        Ok(config)
    }

    /// User-defined profiles shadow builtins of the same name.
    pub fn profile(&self, name: &str) -> Option<ProcessingProfile> {
        self.user_profiles
            .iter()
            .find(|p| p.name() == name)
            .cloned()
            .or_else(|| profiles::builtin(name))
    }

    pub fn profile_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .user_profiles
            .iter()
            .map(|p| p.name().to_string())
            .collect();
        for builtin in profiles::BUILTIN_PROFILE_NAMES {
            if !names.iter().any(|n| n == builtin) {
                names.push(builtin.to_string());
            }
        }
        names
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_keeps_defaults() {
        let c = Config::from_toml("").unwrap();
        assert_eq!(c.caps.get(CipherId::Aes256Gcm), Some(1370.0));
        assert!(c.profile("e2-pt").is_some());
        assert!(c.profile("missing").is_none());
    }

    #[test]
    fn profiles_caps_and_cpu_override() {
        let text = r#"
[[profiles]]
name = "lab"
anchors = [[62, 10.0], [9000, 50.0]]

[[profiles]]
name = "e2-pt"
anchors = [[62, 1.0], [1500, 2.0]]

[caps]
aes256-gcm = 2000

[cpu]
pt_slope_pct_per_mbps = 0.004
ct_slope_pct_per_mbps = 0.25
"#;
        let c = Config::from_toml(text).unwrap();
        assert_eq!(c.profile("lab").unwrap().eval(62.0), 10.0);
        // override shadows the builtin of the same name
        assert_eq!(c.profile("e2-pt").unwrap().eval(62.0), 1.0);
        assert_eq!(c.caps.get(CipherId::Aes256Gcm), Some(2000.0));
        assert!((c.cpu.ct_slope_per_mbps - 0.0025).abs() < 1e-12);
    }

    #[test]
    fn invalid_entries_are_rejected() {
        assert!(Config::from_toml("[[profiles]]\nname = \"x\"\nanchors = [[62, 1.0]]\n").is_err());
        assert!(Config::from_toml("[caps]\ncaesar = 10\n").is_err());
        assert!(Config::from_toml("[caps]\naes256-gcm = -1\n").is_err());
        assert!(Config::from_toml(
            "[cpu]\npt_slope_pct_per_mbps = 0.3\nct_slope_pct_per_mbps = 0.2\n"
        )
        .is_err());
        assert!(Config::from_toml("not toml at all [").is_err());
    }
}
