//! Shipped processing-delay and load-latency profiles fitted to measured
//! behavior of the two reference environments.
//!
//! E2 profiles describe a software stack on a 10 Gb/s backbone: the
//! plaintext curve is flat at 60.97 µs over the tested 62-1500 B range,
//! AES256-CBC adds 22 µs at small frames growing to 50 µs at 1500 B, and
//! AES256-GCM adds nothing measurable.
//!
//! Fronthaul profiles describe a direct-connected Ethernet pair carrying
//! eCPRI frames up to 9000 B. MACsec adds 39 µs at small frames, growing
//! to 153 µs (integrity only) or 218 µs (with encryption) at 9000 B. The
//! absolute plaintext baseline of that system was never published; the
//! anchors below are derived parameters: 118 µs at the 9000 B worst case
//! (the value consistent with the latency-budget region boundaries, see
//! `feasibility`), with a small-frame floor and a knee at 1500 B giving
//! the measured convex growth shape. Override them via the config file if
//! your hardware differs.

use crate::delay::{DelayError, ProcessingProfile};
use crate::perf::LoadLatencyProfile;

/// Measured small-packet processing delay on the E2 path, in µs.
pub const E2_PT_PROC_US: f64 = 60.97;
/// AES256-CBC processing delta over plaintext: (frame length, added µs).
pub const E2_CBC_DELTA: [(f64, f64); 2] = [(62.0, 22.0), (1500.0, 50.0)];
/// MACsec (integrity only) delta on the fronthaul path.
pub const FH_MACSEC_DELTA: [(f64, f64); 2] = [(62.0, 39.0), (9000.0, 153.0)];
/// MACsec with encryption delta on the fronthaul path.
pub const FH_MACSEC_ENC_DELTA: [(f64, f64); 2] = [(62.0, 39.0), (9000.0, 218.0)];
/// Derived fronthaul plaintext baseline anchors (configurable).
pub const FH_BASELINE: [(f64, f64); 3] = [(62.0, 40.0), (1500.0, 50.0), (9000.0, 118.0)];

/// Observed fronthaul MACsec throughput ceiling, in Mb/s.
pub const FH_MACSEC_CAP_MBPS: f64 = 2300.0;
/// Added processing delay near the cap, MACsec without encryption, µs.
pub const FH_MACSEC_PEAK_LATENCY_US: f64 = 3200.0;
/// Added processing delay near the cap, MACsec with encryption, µs.
pub const FH_MACSEC_ENC_PEAK_LATENCY_US: f64 = 4300.0;

pub const BUILTIN_PROFILE_NAMES: [&str; 6] = [
    "e2-pt",
    "e2-aes256cbc",
    "e2-aes256gcm",
    "fh-pt",
    "fh-macsec",
    "fh-macsec-enc",
];

fn must(profile: Result<ProcessingProfile, DelayError>) -> ProcessingProfile {
    profile.expect("builtin profile anchors are valid")
}

/// E2 plaintext baseline: flat at the measured small-packet delay.
pub fn e2_pt() -> ProcessingProfile {
    must(e2_baseline(E2_PT_PROC_US, E2_PT_PROC_US))
}

/// E2 baseline with explicit endpoints, for systems whose plaintext curve
/// is not flat.
pub fn e2_baseline(delay_at_62: f64, delay_at_1500: f64) -> Result<ProcessingProfile, DelayError> {
    ProcessingProfile::new("e2-pt", vec![(62.0, delay_at_62), (1500.0, delay_at_1500)])
}

/// E2 under ESP with AES256-CBC + HMAC-SHA2-256-128.
pub fn e2_aes256cbc() -> ProcessingProfile {
    must(ProcessingProfile::with_delta(
        "e2-aes256cbc",
        &e2_pt(),
        &E2_CBC_DELTA,
    ))
}

/// E2 under ESP with AES256-GCM: indistinguishable from plaintext.
pub fn e2_aes256gcm() -> ProcessingProfile {
    let pt = e2_pt();
    must(ProcessingProfile::new(
        "e2-aes256gcm",
        pt.anchors().to_vec(),
    ))
}

/// Fronthaul plaintext baseline (derived default anchors).
pub fn fronthaul_pt() -> ProcessingProfile {
    must(fronthaul_baseline(
        FH_BASELINE[0].1,
        FH_BASELINE[1].1,
        FH_BASELINE[2].1,
    ))
}

/// Fronthaul baseline with explicit anchors at 62, 1500, and 9000 B.
pub fn fronthaul_baseline(
    delay_at_62: f64,
    delay_at_1500: f64,
    delay_at_9000: f64,
) -> Result<ProcessingProfile, DelayError> {
    ProcessingProfile::new(
        "fh-pt",
        vec![
            (62.0, delay_at_62),
            (1500.0, delay_at_1500),
            (9000.0, delay_at_9000),
        ],
    )
}

/// Fronthaul under MACsec without encryption.
pub fn fronthaul_macsec() -> ProcessingProfile {
    must(ProcessingProfile::with_delta(
        "fh-macsec",
        &fronthaul_pt(),
        &FH_MACSEC_DELTA,
    ))
}

/// Fronthaul under MACsec with encryption.
pub fn fronthaul_macsec_encrypted() -> ProcessingProfile {
    must(ProcessingProfile::with_delta(
        "fh-macsec-enc",
        &fronthaul_pt(),
        &FH_MACSEC_ENC_DELTA,
    ))
}

/// Look up a builtin processing profile by its published name.
pub fn builtin(name: &str) -> Option<ProcessingProfile> {
    match name {
        "e2-pt" => Some(e2_pt()),
        "e2-aes256cbc" => Some(e2_aes256cbc()),
        "e2-aes256gcm" => Some(e2_aes256gcm()),
        "fh-pt" => Some(fronthaul_pt()),
        "fh-macsec" => Some(fronthaul_macsec()),
        "fh-macsec-enc" => Some(fronthaul_macsec_encrypted()),
        _ => None,
    }
}

/// Load-latency curve for fronthaul MACsec without encryption: two-point
/// interpolation from the near-idle delta to the measured peak at the cap.
pub fn load_latency_fronthaul_macsec() -> LoadLatencyProfile {
    LoadLatencyProfile::new(
        "fh-macsec",
        vec![(0.0, 39.0), (FH_MACSEC_CAP_MBPS, FH_MACSEC_PEAK_LATENCY_US)],
        FH_MACSEC_CAP_MBPS,
    )
    .expect("builtin load profile is valid")
}

/// Load-latency curve for fronthaul MACsec with encryption.
pub fn load_latency_fronthaul_macsec_encrypted() -> LoadLatencyProfile {
    LoadLatencyProfile::new(
        "fh-macsec-enc",
        vec![
            (0.0, 39.0),
            (FH_MACSEC_CAP_MBPS, FH_MACSEC_ENC_PEAK_LATENCY_US),
        ],
        FH_MACSEC_CAP_MBPS,
    )
    .expect("builtin load profile is valid")
}

pub fn builtin_load_latency(name: &str) -> Option<LoadLatencyProfile> {
    match name {
        "fh-macsec" => Some(load_latency_fronthaul_macsec()),
        "fh-macsec-enc" => Some(load_latency_fronthaul_macsec_encrypted()),
        _ => None,
    }
}
