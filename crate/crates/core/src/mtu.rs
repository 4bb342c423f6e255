//! Fragmentation of fixed-size payloads under an MTU, per-fragment delay
//! and throughput modeling, and optimal-MTU search.
//!
//! MTU accounting: the MTU bounds the frame payload above the Ethernet
//! header (fragment bytes plus the per-fragment protocol header); security
//! overhead is added outside the MTU budget, matching link hardware that
//! expands frames after framing. Use [`strict_usable_mtu`] to pre-shrink
//! the MTU when security bytes must fit inside it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::delay::{propagation_delay, transmission_delay, LinkSpec, ProcessingProfile};
use crate::overhead::{secured_frame_length, OverheadError, SecurityConfig, ETH_HEADER_LEN};

/// Default per-fragment protocol header: the 8-byte eCPRI common header.
pub const DEFAULT_FRAGMENT_HEADER_LEN: u64 = 8;
/// Default serialized per-packet pipeline cost for saturating streams, µs.
pub const DEFAULT_PER_PACKET_PIPELINE_COST_US: f64 = 1.0;
/// Default sweep granularity, matching the experiment's increment scale.
pub const DEFAULT_SWEEP_STEP: u64 = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MtuError {
    #[error("MTU of {mtu} B cannot carry any payload past the {header} B per-fragment header")]
    MtuTooSmall { mtu: u64, header: u64 },
    #[error("empty MTU sweep: no usable MTU in [{lo}, {hi}] with step {step}")]
    EmptySweep { lo: u64, hi: u64, step: u64 },
    #[error("payload must be > 0")]
    EmptyPayload,
    #[error("file size must be > 0")]
    EmptyFile,
    #[error(transparent)]
    Framing(#[from] OverheadError),
}

/// How a payload is cut into fragments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FragmentStrategy {
    /// Fill every fragment to the usable size; the last one takes the rest.
    Greedy,
    /// Same fragment count as greedy, sizes differing by at most one byte.
    EvenSplit,
}

impl fmt::Display for FragmentStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FragmentStrategy::Greedy => "greedy",
            FragmentStrategy::EvenSplit => "even",
        })
    }
}

impl FromStr for FragmentStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(FragmentStrategy::Greedy),
            "even" | "even-split" => Ok(FragmentStrategy::EvenSplit),
            other => Err(format!("unknown strategy `{other}` (use greedy|even)")),
        }
    }
}

/// A payload cut into MTU-sized fragments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FragmentationPlan {
    pub payload: u64,
    pub mtu: u64,
    pub per_fragment_header: u64,
    pub strategy: FragmentStrategy,
    /// Payload bytes per fragment; sums to `payload`.
    pub fragments: Vec<u64>,
}

/// Split `payload` into fragments whose payload+header fits `mtu`.
pub fn fragment_payload(
    payload: u64,
    mtu: u64,
    per_fragment_header: u64,
    strategy: FragmentStrategy,
) -> Result<FragmentationPlan, MtuError> {
    if payload == 0 {
        return Err(MtuError::EmptyPayload);
    }
    if mtu <= per_fragment_header {
        return Err(MtuError::MtuTooSmall {
            mtu,
            header: per_fragment_header,
        });
    }
    let usable = mtu - per_fragment_header;
    let count = payload.div_ceil(usable);
    let fragments = match strategy {
        FragmentStrategy::Greedy => {
            let mut fragments = vec![usable; (count - 1) as usize];
            fragments.push(payload - (count - 1) * usable);
            fragments
        }
        FragmentStrategy::EvenSplit => {
            let base = payload / count;
            let remainder = payload % count;
            (0..count)
                .map(|i| if i < remainder { base + 1 } else { base })
                .collect()
        }
    };
    debug_assert_eq!(fragments.iter().sum::<u64>(), payload);
    Ok(FragmentationPlan {
        payload,
        mtu,
        per_fragment_header,
        strategy,
        fragments,
    })
}

/// Largest MTU value whose secured frame stays within `mtu` bytes above
/// the Ethernet header, for deployments where security bytes consume MTU
/// budget. Iterates to a fixed point because ESP padding depends on size.
pub fn strict_usable_mtu(mtu: u64, cfg: &SecurityConfig) -> Result<u64, MtuError> {
    let mut candidate = mtu;
    loop {
        let frame = candidate + ETH_HEADER_LEN;
        let secured = secured_frame_length(frame, cfg)?;
        let expansion = secured.overhead_total;
        if candidate + expansion <= mtu {
            return Ok(candidate);
        }
        let next = mtu.saturating_sub(expansion);
        if next == 0 {
            return Err(MtuError::MtuTooSmall {
                mtu,
                header: expansion,
            });
        }
        if next >= candidate {
            return Ok(next);
        }
        candidate = next;
    }
}

/// One modeled transfer of a fixed payload across the link.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MtuTransfer {
    pub total_delay_us: f64,
    pub throughput_mbps: f64,
    pub fragments: u64,
}

/// Fragment the payload, secure every fragment frame, and serialize the
/// per-fragment delays (propagation + transmission + processing).
pub fn mtu_transfer_model(
    payload: u64,
    mtu: u64,
    cfg: &SecurityConfig,
    profile: &ProcessingProfile,
    link: &LinkSpec,
    strategy: FragmentStrategy,
) -> Result<MtuTransfer, MtuError> {
    let plan = fragment_payload(payload, mtu, DEFAULT_FRAGMENT_HEADER_LEN, strategy)?;
    mtu_transfer_model_for_plan(&plan, cfg, profile, link)
}

/// Same model, for an explicit plan (custom per-fragment header sizes).
pub fn mtu_transfer_model_for_plan(
    plan: &FragmentationPlan,
    cfg: &SecurityConfig,
    profile: &ProcessingProfile,
    link: &LinkSpec,
) -> Result<MtuTransfer, MtuError> {
    let prop = propagation_delay(link);
    let mut total_delay_us = 0.0;
    for &fragment in &plan.fragments {
        let frame = fragment + plan.per_fragment_header + ETH_HEADER_LEN;
        let ct = secured_frame_length(frame, cfg)?.ct_frame_len;
        total_delay_us += prop + transmission_delay(ct, link) + profile.eval(ct as f64);
    }
    Ok(MtuTransfer {
        total_delay_us,
        throughput_mbps: plan.payload as f64 * 8.0 / total_delay_us,
        fragments: plan.fragments.len() as u64,
    })
}

/// One row of an MTU sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MtuSweepPoint {
    pub mtu: u64,
    pub fragments: u64,
    pub total_delay_us: f64,
    pub throughput_mbps: f64,
}

/// Evaluate the transfer model at every MTU in `[lo, hi]` with `step`.
pub fn mtu_sweep(
    payload: u64,
    cfg: &SecurityConfig,
    profile: &ProcessingProfile,
    link: &LinkSpec,
    lo: u64,
    hi: u64,
    step: u64,
    strategy: FragmentStrategy,
) -> Result<Vec<MtuSweepPoint>, MtuError> {
    let step = step.max(1);
    let mut points = Vec::new();
    let mut mtu = lo;
    while mtu <= hi {
        // MTUs too small to carry payload are skipped, not fatal.
        if let Ok(t) = mtu_transfer_model(payload, mtu, cfg, profile, link, strategy) {
            points.push(MtuSweepPoint {
                mtu,
                fragments: t.fragments,
                total_delay_us: t.total_delay_us,
                throughput_mbps: t.throughput_mbps,
            });
        }
        mtu += step;
    }
    if points.is_empty() {
        return Err(MtuError::EmptySweep { lo, hi, step });
    }
    Ok(points)
}

/// Arg-min of the transfer model over the sweep; ties break toward the
/// larger MTU.
pub fn optimal_mtu(
    payload: u64,
    cfg: &SecurityConfig,
    profile: &ProcessingProfile,
    link: &LinkSpec,
    lo: u64,
    hi: u64,
    step: u64,
    strategy: FragmentStrategy,
) -> Result<(u64, f64), MtuError> {
    let points = mtu_sweep(payload, cfg, profile, link, lo, hi, step, strategy)?;
    let mut best = (points[0].mtu, points[0].total_delay_us);
    for p in &points[1..] {
        if p.total_delay_us <= best.1 {
            best = (p.mtu, p.total_delay_us);
        }
    }
    Ok(best)
}

/// Outcome of streaming a large file through the secured link.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FileTransfer {
    pub duration_s: f64,
    pub throughput_mbps: f64,
    pub packets: u64,
    pub wire_bytes: u64,
}

/// Saturating-stream model for a large file: per-packet overhead bytes
/// reduce goodput, the wire drains at `min(link, pipeline_rate)`, and each
/// packet costs `per_packet_cost_us` of serialized software time.
pub fn file_transfer_model(
    file_size: u64,
    mtu: u64,
    cfg: &SecurityConfig,
    link: &LinkSpec,
    pipeline_rate_mbps: f64,
    per_packet_cost_us: f64,
) -> Result<FileTransfer, MtuError> {
    if file_size == 0 {
        return Err(MtuError::EmptyFile);
    }
    if mtu <= DEFAULT_FRAGMENT_HEADER_LEN {
        return Err(MtuError::MtuTooSmall {
            mtu,
            header: DEFAULT_FRAGMENT_HEADER_LEN,
        });
    }
    let usable = mtu - DEFAULT_FRAGMENT_HEADER_LEN;
    let packets = file_size.div_ceil(usable);
    let last = file_size - (packets - 1) * usable;
    let full_frame = usable + DEFAULT_FRAGMENT_HEADER_LEN + ETH_HEADER_LEN;
    let last_frame = last + DEFAULT_FRAGMENT_HEADER_LEN + ETH_HEADER_LEN;
    let wire_bytes = (packets - 1) * secured_frame_length(full_frame, cfg)?.ct_frame_len
        + secured_frame_length(last_frame, cfg)?.ct_frame_len;

    let drain_bps = link.rate_bps.min(pipeline_rate_mbps * 1e6);
    let duration_us =
        wire_bytes as f64 * 8.0 / drain_bps * 1e6 + packets as f64 * per_packet_cost_us;
    Ok(FileTransfer {
        duration_s: duration_us / 1e6,
        throughput_mbps: file_size as f64 * 8.0 / duration_us,
        packets,
        wire_bytes,
    })
}
