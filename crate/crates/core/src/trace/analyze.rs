//! Size distributions, load summaries, and secured-traffic projection.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::delay::ProcessingProfile;
use crate::overhead::{secured_frame_length, SecurityConfig};

use super::{PacketClass, PacketRecord, Trace, TraceError};

/// Empirical CDF of frame sizes: `(length, cumulative fraction)` with
/// strictly increasing lengths and a final fraction of 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeCdf {
    pub points: Vec<(u32, f64)>,
}

impl SizeCdf {
    /// `length,cum_fraction` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,cum_fraction\n");
        for (len, frac) in &self.points {
            out.push_str(&format!("{len},{frac}\n"));
        }
        out
    }
}

/// Empirical CDF of `original_len` over the records selected by `filter`.
pub fn empirical_cdf<F>(trace: &Trace, filter: F) -> Result<SizeCdf, TraceError>
where
    F: Fn(&PacketRecord) -> bool,
{
    let mut lengths: Vec<u32> = trace
        .records
        .iter()
        .filter(|r| filter(r))
        .map(|r| r.original_len)
        .collect();
    if lengths.is_empty() {
        return Err(TraceError::EmptySelection);
    }
    lengths.sort_unstable();
    let n = lengths.len() as f64;
    let mut points: Vec<(u32, f64)> = Vec::new();
    for (i, len) in lengths.iter().enumerate() {
        let fraction = (i + 1) as f64 / n;
        match points.last_mut() {
            Some(last) if last.0 == *len => last.1 = fraction,
            _ => points.push((*len, fraction)),
        }
    }
    Ok(SizeCdf { points })
}

/// Per-class slice of a summary.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassSummary {
    pub class: PacketClass,
    pub count: u64,
    pub bytes: u64,
    pub mean_len: f64,
}

/// Counts, size statistics, and offered load for one trace.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceSummary {
    pub packets: u64,
    pub total_bytes: u64,
    pub mean_len: f64,
    pub min_len: u32,
    pub p50_len: u32,
    pub p95_len: u32,
    pub max_len: u32,
    pub duration_s: f64,
    /// 8·Σlen/duration; absent when the trace spans no time.
    pub offered_load_bps: Option<f64>,
    pub per_class: Vec<ClassSummary>,
}

fn nearest_rank(sorted: &[u32], q: f64) -> u32 {
    let n = sorted.len();
    let rank = ((q * n as f64).ceil() as usize).clamp(1, n);
    sorted[rank - 1]
}

pub fn summarize(trace: &Trace) -> Result<TraceSummary, TraceError> {
    if trace.is_empty() {
        return Err(TraceError::EmptySelection);
    }
    let mut lengths: Vec<u32> = trace.records.iter().map(|r| r.original_len).collect();
    lengths.sort_unstable();
    let total_bytes: u64 = lengths.iter().map(|&l| u64::from(l)).sum();
    let packets = lengths.len() as u64;

    let mut per_class: BTreeMap<&'static str, (PacketClass, u64, u64)> = BTreeMap::new();
    for r in &trace.records {
        let entry = per_class
            .entry(r.classification.name())
            .or_insert((r.classification, 0, 0));
        entry.1 += 1;
        entry.2 += u64::from(r.original_len);
    }

    let duration_s = trace.duration_s();
    Ok(TraceSummary {
        packets,
        total_bytes,
        mean_len: total_bytes as f64 / packets as f64,
        min_len: lengths[0],
        p50_len: nearest_rank(&lengths, 0.50),
        p95_len: nearest_rank(&lengths, 0.95),
        max_len: lengths[lengths.len() - 1],
        duration_s,
        offered_load_bps: (duration_s > 0.0).then(|| total_bytes as f64 * 8.0 / duration_s),
        per_class: per_class
            .into_values()
            .map(|(class, count, bytes)| ClassSummary {
                class,
                count,
                bytes,
                mean_len: bytes as f64 / count as f64,
            })
            .collect(),
    })
}

/// Per-class outcome of applying a security configuration to a trace.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassProjection {
    pub class: PacketClass,
    pub count: u64,
    pub pt_mean_len: f64,
    pub ct_mean_len: f64,
    pub pt_bytes: u64,
    pub ct_bytes: u64,
    /// Mean per-packet processing-delay growth from the size expansion,
    /// evaluated on the supplied profile.
    pub added_proc_us_mean: f64,
}

/// What-if projection: sizes, loads, and processing deltas if the captured
/// plaintext traffic were secured with `cfg`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecuredProjection {
    pub per_class: Vec<ClassProjection>,
    pub pt_total_bytes: u64,
    pub ct_total_bytes: u64,
    pub duration_s: f64,
    pub pt_load_bps: Option<f64>,
    pub ct_load_bps: Option<f64>,
    pub added_proc_us_total: f64,
}

pub fn project_secured(
    trace: &Trace,
    cfg: &SecurityConfig,
    profile: &ProcessingProfile,
) -> Result<SecuredProjection, TraceError> {
    if trace.is_empty() {
        return Err(TraceError::EmptySelection);
    }
    struct Acc {
        class: PacketClass,
        count: u64,
        pt_bytes: u64,
        ct_bytes: u64,
        added_proc_us: f64,
    }
    let mut per_class: BTreeMap<&'static str, Acc> = BTreeMap::new();
    let mut pt_total_bytes = 0u64;
    let mut ct_total_bytes = 0u64;
    let mut added_proc_us_total = 0f64;
    for r in &trace.records {
        let pt = u64::from(r.original_len);
        let ct = secured_frame_length(pt, cfg)?.ct_frame_len;
        let added = profile.eval(ct as f64) - profile.eval(pt as f64);
        pt_total_bytes += pt;
        ct_total_bytes += ct;
        added_proc_us_total += added;
        let acc = per_class
            .entry(r.classification.name())
            .or_insert_with(|| Acc {
                class: r.classification,
                count: 0,
                pt_bytes: 0,
                ct_bytes: 0,
                added_proc_us: 0.0,
            });
        acc.count += 1;
        acc.pt_bytes += pt;
        acc.ct_bytes += ct;
        acc.added_proc_us += added;
    }
    let duration_s = trace.duration_s();
    Ok(SecuredProjection {
        per_class: per_class
            .into_values()
            .map(|a| ClassProjection {
                class: a.class,
                count: a.count,
                pt_mean_len: a.pt_bytes as f64 / a.count as f64,
                ct_mean_len: a.ct_bytes as f64 / a.count as f64,
                pt_bytes: a.pt_bytes,
                ct_bytes: a.ct_bytes,
                added_proc_us_mean: a.added_proc_us / a.count as f64,
            })
            .collect(),
        pt_total_bytes,
        ct_total_bytes,
        duration_s,
        pt_load_bps: (duration_s > 0.0).then(|| pt_total_bytes as f64 * 8.0 / duration_s),
        ct_load_bps: (duration_s > 0.0).then(|| ct_total_bytes as f64 * 8.0 / duration_s),
        added_proc_us_total,
    })
}
