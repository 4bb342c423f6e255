//! Packet-capture ingestion and traffic classification for the E2 and
//! Open Fronthaul interfaces.
//!
//! Supported inputs are classic pcap files (both magics, both byte
//! orders, Ethernet link type only) and a plain CSV schema
//! `ts_s,len_bytes,class` for published summaries without raw captures.

mod analyze;
mod classify;
mod ingest;
mod pcap;

pub use analyze::{
    empirical_cdf, project_secured, summarize, ClassProjection, ClassSummary, SecuredProjection,
    SizeCdf, TraceSummary,
};
pub use classify::{
    classify_e2, classify_fronthaul, ECPRI_ETHERTYPE, DEFAULT_E2AP_SHORT_LONG_THRESHOLD,
};
pub use ingest::parse_csv_trace;
pub use pcap::{parse_pcap, write_pcap, PcapFormat};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::overhead::OverheadError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TraceError {
    #[error("unsupported capture format: {0}")]
    UnsupportedFormat(String),
    #[error("truncated capture at record {index}")]
    TruncatedCapture { index: usize },
    #[error("invalid record {index}: {reason}")]
    InvalidRecord { index: usize, reason: String },
    #[error("no packets match the selection")]
    EmptySelection,
    #[error("csv ingest failed: {0}")]
    CsvIngest(String),
    #[error("record {index} has no captured bytes to serialize")]
    MissingPacketData { index: usize },
    #[error(transparent)]
    Framing(#[from] OverheadError),
}

/// Traffic classes observed on the two interfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PacketClass {
    E2Sack,
    E2apShort,
    E2apLong,
    EcpriUserPlane,
    EcpriControlPlane,
    Other,
}

impl PacketClass {
    pub const ALL: [PacketClass; 6] = [
        PacketClass::E2Sack,
        PacketClass::E2apShort,
        PacketClass::E2apLong,
        PacketClass::EcpriUserPlane,
        PacketClass::EcpriControlPlane,
        PacketClass::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PacketClass::E2Sack => "e2-sack",
            PacketClass::E2apShort => "e2ap-short",
            PacketClass::E2apLong => "e2ap-long",
            PacketClass::EcpriUserPlane => "ecpri-user-plane",
            PacketClass::EcpriControlPlane => "ecpri-control-plane",
            PacketClass::Other => "other",
        }
    }
}

impl fmt::Display for PacketClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PacketClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PacketClass::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown packet class `{s}`"))
    }
}

/// Flow direction relative to the MAC pair of the first captured packet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    AToB,
    BToA,
    Unknown,
}

/// One captured packet. `ts_sec`/`ts_frac` keep the raw capture fields so
/// fixtures re-serialize byte-identically; `timestamp` is the derived
/// fractional-seconds value used by analysis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PacketRecord {
    pub timestamp: f64,
    pub ts_sec: u32,
    /// Microseconds or nanoseconds, per the capture's magic.
    pub ts_frac: u32,
    pub captured_len: u32,
    pub original_len: u32,
    pub classification: PacketClass,
    pub direction: Direction,
    /// Captured bytes (may be shorter than `original_len`); empty for
    /// CSV-ingested records.
    #[serde(skip)]
    pub data: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LinkType {
    Ethernet,
}

/// An ordered capture plus enough format metadata to re-serialize it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trace {
    pub link_type: LinkType,
    /// File name or other identifier of where the records came from.
    pub source: String,
    pub format: Option<PcapFormat>,
    pub records: Vec<PacketRecord>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Last minus first timestamp; zero for traces of fewer than two
    /// packets.
    pub fn duration_s(&self) -> f64 {
        match (self.records.first(), self.records.last()) {
            (Some(first), Some(last)) if self.records.len() > 1 => {
                (last.timestamp - first.timestamp).max(0.0)
            }
            _ => 0.0,
        }
    }
}
