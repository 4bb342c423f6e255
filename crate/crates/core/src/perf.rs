//! Throughput caps per cipher, CPU-utilization slopes, and load-dependent
//! added latency.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::overhead::CipherId;

/// Measured plaintext CPU slope, in percent of one core per Mb/s.
pub const PT_CPU_PCT_PER_MBPS: f64 = 0.00365;
/// Measured ciphertext (AES256-CBC ESP) CPU slope, percent per Mb/s.
pub const CT_CPU_PCT_PER_MBPS: f64 = 0.2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PerfError {
    #[error("cipher {0} has no entry in the throughput cap table")]
    UnknownCipher(CipherId),
    #[error("invalid CPU model: {0}")]
    InvalidModel(String),
    #[error("invalid load-latency profile: {0}")]
    InvalidProfile(String),
}

/// Maximum sustained throughput per encryption algorithm, in Mb/s.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CipherCapTable {
    caps: BTreeMap<CipherId, f64>,
}

impl CipherCapTable {
    /// The measured 30-second sustained rates. AES-GCM dominates;
    /// key size barely matters.
    pub fn measured() -> CipherCapTable {
        CipherCapTable {
            caps: BTreeMap::from([
                (CipherId::Aes128Cbc, 505.0),
                (CipherId::Aes256Cbc, 512.0),
                (CipherId::Aes128Ccm, 573.0),
                (CipherId::Aes256Ccm, 573.0),
                (CipherId::ChaCha20Poly1305, 989.0),
                (CipherId::Aes256Gcm, 1370.0),
            ]),
        }
    }

    pub fn new(caps: BTreeMap<CipherId, f64>) -> Result<CipherCapTable, PerfError> {
        for (&id, &cap) in &caps {
            if !(cap > 0.0) {
                return Err(PerfError::InvalidModel(format!(
                    "cap for {id} must be > 0 Mb/s, got {cap}"
                )));
            }
        }
        Ok(CipherCapTable { caps })
    }

    pub fn get(&self, cipher: CipherId) -> Option<f64> {
        self.caps.get(&cipher).copied()
    }

    pub fn set(&mut self, cipher: CipherId, cap_mbps: f64) {
        self.caps.insert(cipher, cap_mbps);
    }

    pub fn entries(&self) -> impl Iterator<Item = (CipherId, f64)> + '_ {
        self.caps.iter().map(|(&id, &cap)| (id, cap))
    }

    pub fn max_cap(&self) -> Option<(CipherId, f64)> {
        self.entries()
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
    }
}

impl Default for CipherCapTable {
    fn default() -> Self {
        CipherCapTable::measured()
    }
}

/// Ciphertext throughput rises linearly with the attempted rate until it
/// plateaus at the cipher's cap.
pub fn achieved_throughput(
    attempted_mbps: f64,
    cipher: CipherId,
    caps: &CipherCapTable,
) -> Result<f64, PerfError> {
    debug_assert!(attempted_mbps >= 0.0);
    let cap = caps.get(cipher).ok_or(PerfError::UnknownCipher(cipher))?;
    Ok(attempted_mbps.min(cap))
}

/// Linear CPU-utilization model. Slopes are stored as utilization
/// fractions per Mb/s; the published figures are percent per Mb/s, so the
/// defaults divide those by 100.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CpuModel {
    pub pt_slope_per_mbps: f64,
    pub ct_slope_per_mbps: f64,
    /// Utilization ceiling, as a fraction in (0, 1].
    pub saturation: f64,
}

impl CpuModel {
    pub fn validate(&self) -> Result<(), PerfError> {
        if !(self.pt_slope_per_mbps > 0.0 && self.ct_slope_per_mbps > self.pt_slope_per_mbps) {
            return Err(PerfError::InvalidModel(format!(
                "slopes must satisfy 0 < pt ({}) < ct ({})",
                self.pt_slope_per_mbps, self.ct_slope_per_mbps
            )));
        }
        if !(self.saturation > 0.0 && self.saturation <= 1.0) {
            return Err(PerfError::InvalidModel(format!(
                "saturation must be in (0, 1], got {}",
                self.saturation
            )));
        }
        Ok(())
    }
}

impl Default for CpuModel {
    fn default() -> Self {
        CpuModel {
            pt_slope_per_mbps: PT_CPU_PCT_PER_MBPS / 100.0,
            ct_slope_per_mbps: CT_CPU_PCT_PER_MBPS / 100.0,
            saturation: 1.0,
        }
    }
}

/// CPU utilization fraction at `rate_mbps`, clamped at the model ceiling.
pub fn cpu_utilization(rate_mbps: f64, encrypted: bool, model: &CpuModel) -> f64 {
    debug_assert!(rate_mbps >= 0.0);
    let slope = if encrypted {
        model.ct_slope_per_mbps
    } else {
        model.pt_slope_per_mbps
    };
    (slope * rate_mbps).min(model.saturation)
}

/// Added processing delay as a function of offered load, anchored at
/// measured (rate, delay) points, with a hard saturation cap.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LoadLatencyProfile {
    name: String,
    anchors: Vec<(f64, f64)>,
    cap_mbps: f64,
}

impl LoadLatencyProfile {
    pub fn new(
        name: impl Into<String>,
        anchors: Vec<(f64, f64)>,
        cap_mbps: f64,
    ) -> Result<LoadLatencyProfile, PerfError> {
        let name = name.into();
        if anchors.len() < 2 {
            return Err(PerfError::InvalidProfile(format!(
                "profile `{name}` needs at least 2 anchors"
            )));
        }
        for pair in anchors.windows(2) {
            if !(pair[1].0 > pair[0].0) {
                return Err(PerfError::InvalidProfile(format!(
                    "profile `{name}` anchors must be increasing in rate"
                )));
            }
            if pair[1].1 < pair[0].1 {
                return Err(PerfError::InvalidProfile(format!(
                    "profile `{name}` delays must be nondecreasing"
                )));
            }
        }
        if !(cap_mbps > 0.0) {
            return Err(PerfError::InvalidProfile(format!(
                "profile `{name}` cap must be > 0 Mb/s"
            )));
        }
        Ok(LoadLatencyProfile {
            name,
            anchors,
            cap_mbps,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cap_mbps(&self) -> f64 {
        self.cap_mbps
    }

    pub fn anchors(&self) -> &[(f64, f64)] {
        &self.anchors
    }
}

/// Added processing delay at an offered rate. Loads past the cap report
/// the cap's latency with `saturated` set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LoadLatency {
    pub added_delay_us: f64,
    pub saturated: bool,
}

pub fn load_latency(offered_mbps: f64, profile: &LoadLatencyProfile) -> LoadLatency {
    debug_assert!(offered_mbps >= 0.0);
    let saturated = offered_mbps > profile.cap_mbps;
    let rate = offered_mbps.min(profile.cap_mbps);
    let anchors = &profile.anchors;
    let added_delay_us = if rate <= anchors[0].0 {
        anchors[0].1
    } else if rate >= anchors[anchors.len() - 1].0 {
        anchors[anchors.len() - 1].1
    } else {
        let mut i = 0;
        while i + 1 < anchors.len() && anchors[i + 1].0 < rate {
            i += 1;
        }
        let (x0, y0) = anchors[i];
        let (x1, y1) = anchors[i + 1];
        y0 + (rate - x0) * (y1 - y0) / (x1 - x0)
    };
    LoadLatency {
        added_delay_us,
        saturated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles;
    use proptest::prelude::*;

    #[test]
    fn caps_match_measured_table() {
        let caps = CipherCapTable::measured();
        assert_eq!(caps.get(CipherId::Aes128Cbc), Some(505.0));
        assert_eq!(caps.get(CipherId::Aes256Cbc), Some(512.0));
        assert_eq!(caps.get(CipherId::Aes128Ccm), Some(573.0));
        assert_eq!(caps.get(CipherId::Aes256Ccm), Some(573.0));
        assert_eq!(caps.get(CipherId::ChaCha20Poly1305), Some(989.0));
        assert_eq!(caps.get(CipherId::Aes256Gcm), Some(1370.0));
        // AES-GCM tops the table.
        assert_eq!(caps.max_cap(), Some((CipherId::Aes256Gcm, 1370.0)));
    }

    #[test]
    fn throughput_plateaus_at_cap() {
        let caps = CipherCapTable::measured();
        assert_eq!(achieved_throughput(400.0, CipherId::Aes256Cbc, &caps).unwrap(), 400.0);
        assert_eq!(achieved_throughput(2000.0, CipherId::Aes256Gcm, &caps).unwrap(), 1370.0);
        assert_eq!(achieved_throughput(600.0, CipherId::Aes128Ccm, &caps).unwrap(), 573.0);
        // AES128-GCM was not measured; the lookup must say so.
        assert_eq!(
            achieved_throughput(100.0, CipherId::Aes128Gcm, &caps),
            Err(PerfError::UnknownCipher(CipherId::Aes128Gcm))
        );
    }

    #[test]
    fn cpu_utilization_slopes() {
        let model = CpuModel::default();
        assert_eq!(cpu_utilization(0.0, true, &model), 0.0);
        assert_eq!(cpu_utilization(0.0, false, &model), 0.0);
        // 0.2 %/Mbps saturates one core at 500 Mb/s.
        assert_eq!(cpu_utilization(500.0, true, &model), 1.0);
        // 0.00365 %/Mbps -> 1.825 % at 500 Mb/s.
        assert!((cpu_utilization(500.0, false, &model) - 0.01825).abs() < 1e-12);
    }

    #[test]
    fn ct_to_pt_slope_ratio_is_tens() {
        let model = CpuModel::default();
        let ratio = model.ct_slope_per_mbps / model.pt_slope_per_mbps;
        assert!((10.0..=100.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn load_latency_anchors_and_saturation() {
        let enc = profiles::load_latency_fronthaul_macsec_encrypted();
        let low = load_latency(1.0, &enc);
        assert!(!low.saturated);
        assert!(low.added_delay_us >= 39.0 && low.added_delay_us < 100.0);
        let at_cap = load_latency(2300.0, &enc);
        assert_eq!(at_cap.added_delay_us, 4300.0);
        assert!(!at_cap.saturated);
        let over = load_latency(3000.0, &enc);
        assert_eq!(over.added_delay_us, 4300.0);
        assert!(over.saturated);

        let noenc = profiles::load_latency_fronthaul_macsec();
        assert_eq!(load_latency(2300.0, &noenc).added_delay_us, 3200.0);
    }

    #[test]
    fn model_validation() {
        let bad = CpuModel {
            pt_slope_per_mbps: 0.01,
            ct_slope_per_mbps: 0.001,
            saturation: 1.0,
        };
        assert!(bad.validate().is_err());
        let bad_sat = CpuModel {
            saturation: 1.5,
            ..CpuModel::default()
        };
        assert!(bad_sat.validate().is_err());
        assert!(CpuModel::default().validate().is_ok());
        assert!(LoadLatencyProfile::new("x", vec![(0.0, 10.0), (100.0, 5.0)], 100.0).is_err());
    }

    proptest! {
        #[test]
        fn achieved_throughput_monotone_and_capped(
            a in 0.0f64..5000.0,
            b in 0.0f64..5000.0,
        ) {
            let caps = CipherCapTable::measured();
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let t_lo = achieved_throughput(lo, CipherId::Aes256Gcm, &caps).unwrap();
            let t_hi = achieved_throughput(hi, CipherId::Aes256Gcm, &caps).unwrap();
            prop_assert!(t_lo <= t_hi);
            prop_assert!(t_hi <= 1370.0);
        }

        #[test]
        fn load_latency_monotone(a in 0.0f64..4000.0, b in 0.0f64..4000.0) {
            let p = profiles::load_latency_fronthaul_macsec_encrypted();
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(load_latency(lo, &p).added_delay_us <= load_latency(hi, &p).added_delay_us);
        }
    }
}
