//! Four-term delay decomposition, M/M/1 queuing deltas, RTT estimation,
//! and measurement-fitted processing-delay profiles.
//!
//! All delays are carried as 64-bit floating-point microseconds.

use serde::Serialize;
use thiserror::Error;

/// Default signal propagation speed over copper/fiber, in m/s.
pub const DEFAULT_PROP_SPEED_MPS: f64 = 2.0e8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DelayError {
    /// Arrival (plus overhead) rate at or above the service rate.
    #[error(
        "unstable queue: arrival {arrival_pps} pkt/s + overhead {overhead_pps} pkt/s >= service {service_pps} pkt/s"
    )]
    UnstableQueue {
        service_pps: f64,
        arrival_pps: f64,
        overhead_pps: f64,
    },
    #[error("invalid processing profile: {0}")]
    InvalidProfile(String),
    #[error("invalid link: {0}")]
    InvalidLink(String),
}

/// One point-to-point link: rate in bits/s, physical length in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkSpec {
    pub rate_bps: f64,
    pub length_m: f64,
    pub prop_speed_mps: f64,
}

impl LinkSpec {
    pub fn new(rate_bps: f64, length_m: f64) -> LinkSpec {
        LinkSpec {
            rate_bps,
            length_m,
            prop_speed_mps: DEFAULT_PROP_SPEED_MPS,
        }
    }

    pub fn validate(&self) -> Result<(), DelayError> {
        if !(self.rate_bps > 0.0) {
            return Err(DelayError::InvalidLink(format!(
                "rate must be > 0 bits/s, got {}",
                self.rate_bps
            )));
        }
        if self.length_m < 0.0 {
            return Err(DelayError::InvalidLink(format!(
                "length must be >= 0 m, got {}",
                self.length_m
            )));
        }
        if !(self.prop_speed_mps > 0.0) {
            return Err(DelayError::InvalidLink(format!(
                "propagation speed must be > 0 m/s, got {}",
                self.prop_speed_mps
            )));
        }
        Ok(())
    }
}

/// The four per-node delay terms and their sum, in microseconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DelayBreakdown {
    pub queuing_us: f64,
    pub propagation_us: f64,
    pub transmission_us: f64,
    pub processing_us: f64,
    pub total_us: f64,
}

/// M/M/1 node: Poisson arrivals at `arrival_rate_pps`, exponential service
/// at `service_rate_pps`, plus the extra packet-equivalent arrival rate
/// induced by security overhead bytes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QueueModel {
    pub service_rate_pps: f64,
    pub arrival_rate_pps: f64,
    pub overhead_rate_pps: f64,
}

/// Piecewise-linear packet-size -> processing-delay curve.
///
/// Anchors come from measurements; between anchors the curve is linearly
/// interpolated (an assumption: the measured shape between published
/// endpoints is not known), outside the anchor range it clamps to the
/// nearest endpoint.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProcessingProfile {
    name: String,
    anchors: Vec<(f64, f64)>,
}

impl ProcessingProfile {
    pub fn new(
        name: impl Into<String>,
        anchors: Vec<(f64, f64)>,
    ) -> Result<ProcessingProfile, DelayError> {
        let name = name.into();
        if anchors.len() < 2 {
            return Err(DelayError::InvalidProfile(format!(
                "profile `{name}` needs at least 2 anchors, got {}",
                anchors.len()
            )));
        }
        for pair in anchors.windows(2) {
            if !(pair[1].0 > pair[0].0) {
                return Err(DelayError::InvalidProfile(format!(
                    "profile `{name}` anchors must be strictly increasing in packet length: {} then {}",
                    pair[0].0, pair[1].0
                )));
            }
        }
        for &(len, delay) in &anchors {
            if !(delay >= 0.0) || !len.is_finite() {
                return Err(DelayError::InvalidProfile(format!(
                    "profile `{name}` has an invalid anchor ({len}, {delay})"
                )));
            }
        }
        Ok(ProcessingProfile { name, anchors })
    }

    /// A new profile equal to `base` plus a piecewise-linear delta defined
    /// by `delta_anchors`. The result carries anchors at the union of both
    /// knot sets, so it equals the pointwise sum everywhere.
    pub fn with_delta(
        name: impl Into<String>,
        base: &ProcessingProfile,
        delta_anchors: &[(f64, f64)],
    ) -> Result<ProcessingProfile, DelayError> {
        let name = name.into();
        if delta_anchors.len() < 2 {
            return Err(DelayError::InvalidProfile(format!(
                "profile `{name}` delta needs at least 2 anchors"
            )));
        }
        let mut knots: Vec<f64> = base
            .anchors
            .iter()
            .map(|a| a.0)
            .chain(delta_anchors.iter().map(|a| a.0))
            .collect();
        knots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        knots.dedup();
        let anchors = knots
            .into_iter()
            .map(|len| (len, base.eval(len) + clamped_lerp(delta_anchors, len)))
            .collect();
        ProcessingProfile::new(name, anchors)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn anchors(&self) -> &[(f64, f64)] {
        &self.anchors
    }

    /// Processing delay in µs for a frame of `frame_len` bytes.
    pub fn eval(&self, frame_len: f64) -> f64 {
        clamped_lerp(&self.anchors, frame_len)
    }
}

/// Linear interpolation over sorted `(x, y)` anchors, clamped to the
/// endpoint values outside the anchor range.
fn clamped_lerp(anchors: &[(f64, f64)], x: f64) -> f64 {
    let first = anchors[0];
    let last = anchors[anchors.len() - 1];
    if x <= first.0 {
        return first.1;
    }
    if x >= last.0 {
        return last.1;
    }
    let mut i = 0;
    while i + 1 < anchors.len() && anchors[i + 1].0 < x {
        i += 1;
    }
    let (x0, y0) = anchors[i];
    let (x1, y1) = anchors[i + 1];
    y0 + (x - x0) * (y1 - y0) / (x1 - x0)
}

/// D_trans = L/R, returned in µs for a frame of `frame_len` bytes.
pub fn transmission_delay(frame_len: u64, link: &LinkSpec) -> f64 {
    debug_assert!(frame_len > 0, "transmission of an empty frame");
    (frame_len as f64) * 8.0 / link.rate_bps * 1e6
}

/// D_prop = length / propagation speed, in µs.
pub fn propagation_delay(link: &LinkSpec) -> f64 {
    link.length_m / link.prop_speed_mps * 1e6
}

/// M/M/1 waiting time 1/(µ-λ) - 1/µ, in µs.
pub fn queuing_delay(q: &QueueModel) -> Result<f64, DelayError> {
    if q.arrival_rate_pps >= q.service_rate_pps {
        return Err(DelayError::UnstableQueue {
            service_pps: q.service_rate_pps,
            arrival_pps: q.arrival_rate_pps,
            overhead_pps: 0.0,
        });
    }
    Ok((1.0 / (q.service_rate_pps - q.arrival_rate_pps) - 1.0 / q.service_rate_pps) * 1e6)
}

/// Added queuing delay from encryption overhead:
/// 1/(µ-(λ+ε)) - 1/(µ-λ), in µs.
pub fn queuing_delta(q: &QueueModel) -> Result<f64, DelayError> {
    let loaded = q.arrival_rate_pps + q.overhead_rate_pps;
    if loaded >= q.service_rate_pps {
        return Err(DelayError::UnstableQueue {
            service_pps: q.service_rate_pps,
            arrival_pps: q.arrival_rate_pps,
            overhead_pps: q.overhead_rate_pps,
        });
    }
    Ok((1.0 / (q.service_rate_pps - loaded) - 1.0 / (q.service_rate_pps - q.arrival_rate_pps))
        * 1e6)
}

/// Unit normalization for the queue model. The queue works strictly in
/// packets/s: µ = link/(8·mean_frame), λ = offered/(8·mean_frame), and the
/// per-packet overhead bytes become ε = λ·overhead/mean_frame additional
/// packet-equivalents per second.
pub fn rates_from_bits(
    link_rate_bps: f64,
    offered_load_bps: f64,
    mean_frame_bytes: f64,
    overhead_bytes: f64,
) -> QueueModel {
    debug_assert!(mean_frame_bytes > 0.0);
    let frame_bits = 8.0 * mean_frame_bytes;
    let arrival = offered_load_bps / frame_bits;
    QueueModel {
        service_rate_pps: link_rate_bps / frame_bits,
        arrival_rate_pps: arrival,
        overhead_rate_pps: arrival * overhead_bytes / mean_frame_bytes,
    }
}

/// D_proc from a fitted profile, in µs.
pub fn processing_delay(frame_len: u64, profile: &ProcessingProfile) -> f64 {
    profile.eval(frame_len as f64)
}

/// D_total = D_que + D_prop + D_trans + D_proc. The total is the plain sum
/// of the four inputs, computed here and nowhere else.
pub fn total_delay(
    queuing_us: f64,
    propagation_us: f64,
    transmission_us: f64,
    processing_us: f64,
) -> DelayBreakdown {
    DelayBreakdown {
        queuing_us,
        propagation_us,
        transmission_us,
        processing_us,
        total_us: queuing_us + propagation_us + transmission_us + processing_us,
    }
}

/// RTT = 2 × (D_proc + D_trans + D_prop), in µs.
pub fn rtt_estimate(frame_len: u64, link: &LinkSpec, profile: &ProcessingProfile) -> f64 {
    2.0 * (processing_delay(frame_len, profile)
        + transmission_delay(frame_len, link)
        + propagation_delay(link))
}
