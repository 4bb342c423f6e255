//! Deterministic models for the cost of securing O-RAN open interfaces.
//!
//! The crate quantifies what IPsec ESP (E2), MACsec (Open Fronthaul), and
//! TLS (management planes) cost in bytes, microseconds, and CPU:
//!
//! - [`overhead`]: byte-exact secured-frame expansion and per-layer
//!   breakdowns.
//! - [`delay`]: the queuing/propagation/transmission/processing
//!   decomposition, M/M/1 deltas, RTT, and fitted processing profiles.
//! - [`perf`]: cipher throughput caps, CPU-utilization slopes, and
//!   load-dependent latency.
//! - [`mtu`]: fragmentation plans, per-fragment transfer delay,
//!   large-file streaming, and optimal-MTU search.
//! - [`feasibility`]: the WG4 latency-budget matrix and which O-RU/O-DU
//!   pairs tolerate MACsec.
//! - [`trace`]: pcap/CSV ingestion, E2 and eCPRI classification, CDFs,
//!   and secured-traffic projection.
//!
//! Everything is pure computation over immutable inputs; all types are
//! safe to share across threads.

pub mod config;
pub mod delay;
pub mod feasibility;
pub mod mtu;
pub mod overhead;
pub mod perf;
pub mod profiles;
pub mod trace;

pub use config::{Config, ConfigError};
pub use delay::{
    propagation_delay, queuing_delay, queuing_delta, rates_from_bits, rtt_estimate, total_delay,
    transmission_delay, DelayBreakdown, DelayError, LinkSpec, ProcessingProfile, QueueModel,
};
pub use feasibility::{
    baseline_interval_from_coloring, classify_cell, classify_table, BaselineInterval,
    FeasibilityError, LatencyBudgetTable, Region, RegionCounts, SecurityDelayAssumptions,
    TableClassification,
};
pub use mtu::{
    file_transfer_model, fragment_payload, mtu_sweep, mtu_transfer_model, optimal_mtu,
    FileTransfer, FragmentStrategy, FragmentationPlan, MtuError, MtuSweepPoint, MtuTransfer,
};
pub use overhead::{
    esp_transport_frame_length, esp_tunnel_frame_length, macsec_frame_length, min_overhead,
    secured_frame_length, tls_record_length, CipherId, CipherSuite, OverheadBreakdown,
    OverheadError, Protocol, SecurityConfig,
};
pub use perf::{
    achieved_throughput, cpu_utilization, load_latency, CipherCapTable, CpuModel, LoadLatency,
    LoadLatencyProfile, PerfError,
};
pub use trace::{
    classify_e2, classify_fronthaul, empirical_cdf, parse_csv_trace, parse_pcap, project_secured,
    summarize, write_pcap, Direction, PacketClass, PacketRecord, SecuredProjection, SizeCdf,
    Trace, TraceError, TraceSummary,
};
