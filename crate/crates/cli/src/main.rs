//! `seccost`: what does securing an O-RAN interface cost?
//!
//! Subcommands map onto the library models: `overhead` (frame expansion),
//! `delay`/`rtt`/`queuing` (delay decomposition), `throughput` (cipher
//! caps and CPU), `mtu-sweep` (fragmentation sweep), `feasibility`
//! (latency-budget classification), and `analyze` (capture analysis).
//!
//! Exit codes: 0 success, 1 usage error, 2 data error.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use report::{int, kv_output, num, rows_output, text, Output, OutputFormat};
use seccost_core::feasibility::{self, LatencyBudgetTable, SecurityDelayAssumptions};
use seccost_core::mtu::{self, FragmentStrategy};
use seccost_core::overhead::{self, CipherId, CipherSuite, Protocol, SecurityConfig};
use seccost_core::trace::{self, PacketClass};
use seccost_core::{delay, perf, Config};

#[derive(Parser)]
#[command(
    name = "seccost",
    version,
    about = "Byte, delay, throughput, and feasibility costs of securing O-RAN open interfaces"
)]
struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum, default_value = "table")]
    output: OutputFormat,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// TOML config with extra profiles, cipher caps, and CPU slopes
    #[arg(long, global = true, env = "SECCOST_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LinkArgs {
    /// Link rate in Gb/s
    #[arg(long, default_value_t = 10.0)]
    rate: f64,
    /// Link length in meters (10 m gives the 0.05 µs reference one-way
    /// propagation delay)
    #[arg(long, default_value_t = 10.0)]
    distance: f64,
}

impl LinkArgs {
    fn link(&self) -> Result<delay::LinkSpec, AppError> {
        let link = delay::LinkSpec::new(self.rate * 1e9, self.distance);
        link.validate().map_err(|e| AppError::Usage(e.to_string()))?;
        Ok(link)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Secured frame size with a per-layer byte breakdown
    Overhead {
        /// none|esp-tunnel|esp-transport|macsec|tls
        #[arg(long)]
        protocol: String,
        /// Cipher suite for ESP (e.g. aes256-cbc, aes256-gcm)
        #[arg(long)]
        cipher: Option<String>,
        /// Plaintext on-wire frame length in bytes (TLS: record payload)
        #[arg(long)]
        frame_len: u64,
        /// MACsec confidentiality on
        #[arg(long)]
        macsec_encrypt: bool,
        /// Per-record TLS overhead in bytes
        #[arg(long)]
        tls_overhead: Option<u64>,
    },
    /// One-way delay decomposition for a frame
    Delay {
        #[arg(long)]
        frame_len: u64,
        #[command(flatten)]
        link: LinkArgs,
        /// Processing profile name (builtin or from the config file)
        #[arg(long, default_value = "e2-pt")]
        profile: String,
    },
    /// Round-trip time estimate for a frame
    Rtt {
        #[arg(long)]
        frame_len: u64,
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, default_value = "e2-pt")]
        profile: String,
    },
    /// M/M/1 queuing delay and the security-overhead delta
    Queuing {
        /// Link (service) rate in Gb/s
        #[arg(long, default_value_t = 10.0)]
        link_rate: f64,
        /// Offered load in Gb/s
        #[arg(long)]
        load: f64,
        /// Mean frame length in bytes
        #[arg(long, default_value_t = 1500.0)]
        mean_frame: f64,
        /// Per-packet security overhead in bytes
        #[arg(long, default_value_t = 60.0)]
        overhead: f64,
    },
    /// Achieved throughput under a cipher cap, with CPU utilization
    Throughput {
        /// Attempted transmission rate in Mb/s
        #[arg(long)]
        attempted: f64,
        #[arg(long)]
        cipher: String,
    },
    /// Sweep MTU sizes for a fixed payload and emit plot-ready rows
    MtuSweep {
        /// Payload bytes per message
        #[arg(long, default_value_t = 8192)]
        payload: u64,
        /// Sweep range as LO:HI:STEP
        #[arg(long, default_value = "1400:9000:100")]
        mtu: String,
        #[arg(long, default_value = "fh-macsec-enc")]
        profile: String,
        /// greedy|even
        #[arg(long, default_value = "greedy")]
        strategy: String,
        /// Security protocol applied per fragment
        #[arg(long, default_value = "macsec")]
        protocol: String,
        #[arg(long)]
        cipher: Option<String>,
        /// MACsec confidentiality on
        #[arg(long, default_value_t = true)]
        macsec_encrypt: bool,
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Classify every O-RU/O-DU latency budget under MACsec assumptions
    Feasibility {
        /// One-way baseline delay of the system, µs
        #[arg(long, default_value_t = feasibility::DEFAULT_BASELINE_ONEWAY_US)]
        baseline: f64,
        /// Added one-way delay of MACsec without encryption, µs
        #[arg(long, default_value_t = feasibility::DEFAULT_DELTA_MACSEC_US)]
        delta_noenc: f64,
        /// Added one-way delay of MACsec with encryption, µs
        #[arg(long, default_value_t = feasibility::DEFAULT_DELTA_MACSEC_ENC_US)]
        delta_enc: f64,
        /// Budget table CSV (defaults to the shipped WG4 table)
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Parse a capture, classify it, and report sizes/loads/projections
    Analyze {
        /// Classic pcap input
        #[arg(long)]
        pcap: Option<PathBuf>,
        /// CSV input with header ts_s,len_bytes,class
        #[arg(long)]
        csv: Option<PathBuf>,
        /// e2|fronthaul (required for --pcap)
        #[arg(long)]
        interface: Option<String>,
        /// Project the trace through a security protocol
        #[arg(long)]
        protocol: Option<String>,
        #[arg(long)]
        cipher: Option<String>,
        #[arg(long)]
        profile: Option<String>,
        /// summary|cdf|classes|projection
        #[arg(long, default_value = "summary")]
        emit: String,
        /// Restrict the CDF to one packet class
        #[arg(long)]
        class: Option<String>,
        /// Frame-length boundary between short and long E2AP messages
        #[arg(long, default_value_t = trace::DEFAULT_E2AP_SHORT_LONG_THRESHOLD)]
        e2_threshold: u32,
        /// MACsec confidentiality on (for --protocol macsec)
        #[arg(long)]
        macsec_encrypt: bool,
    },
}

enum AppError {
    Usage(String),
    Data(String),
}

impl From<overhead::OverheadError> for AppError {
    fn from(e: overhead::OverheadError) -> Self {
        AppError::Data(e.to_string())
    }
}

impl From<delay::DelayError> for AppError {
    fn from(e: delay::DelayError) -> Self {
        AppError::Data(e.to_string())
    }
}

impl From<mtu::MtuError> for AppError {
    fn from(e: mtu::MtuError) -> Self {
        AppError::Data(e.to_string())
    }
}

impl From<feasibility::FeasibilityError> for AppError {
    fn from(e: feasibility::FeasibilityError) -> Self {
        AppError::Data(e.to_string())
    }
}

impl From<trace::TraceError> for AppError {
    fn from(e: trace::TraceError) -> Self {
        AppError::Data(e.to_string())
    }
}

impl From<perf::PerfError> for AppError {
    fn from(e: perf::PerfError) -> Self {
        AppError::Data(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<Config, AppError> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| AppError::Data(format!("cannot read config {}: {e}", p.display())))?;
            Config::from_toml(&text).map_err(|e| AppError::Data(e.to_string()))
        }
    }
}

fn parse_cipher(name: &str) -> Result<CipherSuite, AppError> {
    let id: CipherId = name
        .parse()
        .map_err(|e: overhead::OverheadError| AppError::Usage(e.to_string()))?;
    Ok(CipherSuite::standard(id))
}

fn parse_protocol(name: &str) -> Result<Protocol, AppError> {
    name.parse()
        .map_err(|e: overhead::OverheadError| AppError::Usage(e.to_string()))
}

fn resolve_profile(config: &Config, name: &str) -> Result<delay::ProcessingProfile, AppError> {
    config.profile(name).ok_or_else(|| {
        AppError::Usage(format!(
            "unknown profile `{name}` (available: {})",
            config.profile_names().join(", ")
        ))
    })
}

fn security_config(
    protocol: Protocol,
    cipher: Option<&str>,
    macsec_encrypt: bool,
    tls_overhead: Option<u64>,
) -> Result<SecurityConfig, AppError> {
    let cfg = match protocol {
        Protocol::None => SecurityConfig::none(),
        Protocol::EspTunnel => {
            let name = cipher
                .ok_or_else(|| AppError::Usage("--cipher is required for ESP".into()))?;
            SecurityConfig::esp_tunnel(parse_cipher(name)?)
        }
        Protocol::EspTransport => {
            let name = cipher
                .ok_or_else(|| AppError::Usage("--cipher is required for ESP".into()))?;
            SecurityConfig::esp_transport(parse_cipher(name)?)
        }
        Protocol::Macsec => SecurityConfig::macsec(macsec_encrypt),
        Protocol::Tls => SecurityConfig::tls(
            tls_overhead.unwrap_or(overhead::TLS_MIN_RECORD_OVERHEAD),
        )?,
        Protocol::SshV2 => {
            return Err(AppError::Usage(
                "ssh-v2 has a published overhead floor but no framing model".into(),
            ))
        }
    };
    Ok(cfg)
}

fn emit(output: Output, format: OutputFormat, out: &Option<PathBuf>) -> Result<(), AppError> {
    let rendered = output.render(format);
    match out {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => fs::write(path, rendered)
            .map_err(|e| AppError::Data(format!("cannot write {}: {e}", path.display()))),
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let config = load_config(&cli.config)?;
    let output = match &cli.command {
        Command::Overhead {
            protocol,
            cipher,
            frame_len,
            macsec_encrypt,
            tls_overhead,
        } => {
            let protocol = parse_protocol(protocol)?;
            let cfg = security_config(protocol, cipher.as_deref(), *macsec_encrypt, *tls_overhead)?;
            let breakdown = overhead::secured_frame_length(*frame_len, &cfg)?;
            let rows = breakdown
                .layers()
                .iter()
                .map(|(layer, bytes)| vec![text(*layer), int(*bytes)])
                .collect();
            rows_output(&["layer", "bytes"], rows)
        }
        Command::Delay {
            frame_len,
            link,
            profile,
        } => {
            let link = link.link()?;
            let profile = resolve_profile(&config, profile)?;
            let breakdown = delay::total_delay(
                0.0,
                delay::propagation_delay(&link),
                delay::transmission_delay(*frame_len, &link),
                delay::processing_delay(*frame_len, &profile),
            );
            kv_output(vec![
                ("frame_len", int(*frame_len)),
                ("profile", text(profile.name())),
                ("queuing_us", num(breakdown.queuing_us)),
                ("propagation_us", num(breakdown.propagation_us)),
                ("transmission_us", num(breakdown.transmission_us)),
                ("processing_us", num(breakdown.processing_us)),
                ("total_us", num(breakdown.total_us)),
            ])
        }
        Command::Rtt {
            frame_len,
            link,
            profile,
        } => {
            let link = link.link()?;
            let profile = resolve_profile(&config, profile)?;
            let rtt = delay::rtt_estimate(*frame_len, &link, &profile);
            kv_output(vec![
                ("frame_len", int(*frame_len)),
                ("profile", text(profile.name())),
                ("rtt_us", num(rtt)),
            ])
        }
        Command::Queuing {
            link_rate,
            load,
            mean_frame,
            overhead,
        } => {
            if *mean_frame <= 0.0 {
                return Err(AppError::Usage("--mean-frame must be > 0".into()));
            }
            let model =
                delay::rates_from_bits(link_rate * 1e9, load * 1e9, *mean_frame, *overhead);
            let queuing_us = delay::queuing_delay(&model)?;
            let delta_us = delay::queuing_delta(&model)?;
            kv_output(vec![
                ("service_rate_pps", num(model.service_rate_pps)),
                ("arrival_rate_pps", num(model.arrival_rate_pps)),
                ("overhead_rate_pps", num(model.overhead_rate_pps)),
                ("queuing_us", num(queuing_us)),
                ("queuing_delta_us", num(delta_us)),
            ])
        }
        Command::Throughput { attempted, cipher } => {
            if *attempted < 0.0 {
                return Err(AppError::Usage("--attempted must be >= 0".into()));
            }
            let id: CipherId = cipher
                .parse()
                .map_err(|e: overhead::OverheadError| AppError::Usage(e.to_string()))?;
            let achieved = perf::achieved_throughput(*attempted, id, &config.caps)?;
            kv_output(vec![
                ("cipher", text(id.name())),
                ("attempted_mbps", num(*attempted)),
                ("achieved_mbps", num(achieved)),
                ("cap_mbps", num(config.caps.get(id).unwrap_or(f64::NAN))),
                (
                    "cpu_utilization_ct",
                    num(perf::cpu_utilization(achieved, true, &config.cpu)),
                ),
                (
                    "cpu_utilization_pt",
                    num(perf::cpu_utilization(achieved, false, &config.cpu)),
                ),
            ])
        }
        Command::MtuSweep {
            payload,
            mtu,
            profile,
            strategy,
            protocol,
            cipher,
            macsec_encrypt,
            link,
        } => {
            let (lo, hi, step) = parse_sweep_range(mtu)?;
            let strategy: FragmentStrategy =
                strategy.parse().map_err(AppError::Usage)?;
            let protocol = parse_protocol(protocol)?;
            let cfg = security_config(protocol, cipher.as_deref(), *macsec_encrypt, None)?;
            let profile = resolve_profile(&config, profile)?;
            let link = link.link()?;
            let points = mtu::mtu_sweep(*payload, &cfg, &profile, &link, lo, hi, step, strategy)?;
            let rows = points
                .iter()
                .map(|p| {
                    vec![
                        int(p.mtu),
                        int(p.fragments),
                        num(p.total_delay_us),
                        num(p.throughput_mbps),
                    ]
                })
                .collect();
            let mut out = rows_output(
                &["mtu", "fragments", "total_delay_us", "throughput_mbps"],
                rows,
            );
            let best = points
                .iter()
                .fold(points[0], |b, &p| if p.total_delay_us <= b.total_delay_us { p } else { b });
            out.table
                .push_str(&format!("\nminimum delay at mtu {}\n", best.mtu));
            out
        }
        Command::Feasibility {
            baseline,
            delta_noenc,
            delta_enc,
            table,
        } => {
            let assumptions = SecurityDelayAssumptions::new(*baseline, *delta_noenc, *delta_enc)?;
            let owned;
            let table = match table {
                None => LatencyBudgetTable::wg4(),
                Some(path) => {
                    let txt = fs::read_to_string(path).map_err(|e| {
                        AppError::Data(format!("cannot read {}: {e}", path.display()))
                    })?;
                    owned = LatencyBudgetTable::from_csv(&txt)?;
                    &owned
                }
            };
            feasibility_output(table, &assumptions)
        }
        Command::Analyze {
            pcap,
            csv,
            interface,
            protocol,
            cipher,
            profile,
            emit,
            class,
            e2_threshold,
            macsec_encrypt,
        } => {
            let trace = load_trace(pcap, csv, interface.as_deref(), *e2_threshold)?;
            analyze_output(
                &config,
                &trace,
                emit,
                class.as_deref(),
                protocol.as_deref(),
                cipher.as_deref(),
                profile.as_deref(),
                *macsec_encrypt,
            )?
        }
    };
    emit(output, cli.output, &cli.out)
}

fn parse_sweep_range(spec: &str) -> Result<(u64, u64, u64), AppError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = || AppError::Usage(format!("--mtu must be LO:HI:STEP, got `{spec}`"));
    if parts.len() != 3 {
        return Err(usage());
    }
    let lo = parts[0].parse().map_err(|_| usage())?;
    let hi = parts[1].parse().map_err(|_| usage())?;
    let step: u64 = parts[2].parse().map_err(|_| usage())?;
    if lo > hi || step == 0 {
        return Err(usage());
    }
    Ok((lo, hi, step))
}

fn feasibility_output(
    table: &LatencyBudgetTable,
    assumptions: &SecurityDelayAssumptions,
) -> Output {
    let cls = feasibility::classify_table(table, assumptions);
    let mut rows = Vec::new();
    for (r, ru) in table.ru_categories().iter().enumerate() {
        for (c, du) in table.du_categories().iter().enumerate() {
            rows.push(vec![
                text(ru.clone()),
                text(du.clone()),
                num(table.budget_us(r, c)),
                text(cls.regions[r][c].name()),
            ]);
        }
    }
    let mut out = rows_output(&["ru", "du", "budget_us", "region"], rows);

    // The table view is the lettered grid instead of 168 rows.
    let mut grid = String::new();
    grid.push_str("      ");
    for du in table.du_categories() {
        grid.push_str(&format!("{du:>6}"));
    }
    grid.push('\n');
    for (r, ru) in table.ru_categories().iter().enumerate() {
        grid.push_str(&format!("{ru:>3}   "));
        for c in 0..table.du_categories().len() {
            grid.push_str(&format!(
                "{:>5}{}",
                table.budget_us(r, c),
                cls.regions[r][c].letter()
            ));
        }
        grid.push('\n');
    }
    grid.push_str(&format!(
        "\nR macsec+encryption: {}   G macsec only: {}   B no macsec only: {}   - infeasible: {}\n",
        cls.counts.with_encryption,
        cls.counts.without_encryption_only,
        cls.counts.without_macsec_only,
        cls.counts.infeasible
    ));
    out.table = grid;

    // JSON carries the counts alongside the cells.
    out.json = serde_json::json!({
        "assumptions": {
            "baseline_oneway_us": assumptions.baseline_oneway_us,
            "delta_macsec_us": assumptions.delta_macsec_us,
            "delta_macsec_enc_us": assumptions.delta_macsec_enc_us,
        },
        "counts": {
            "with_encryption": cls.counts.with_encryption,
            "without_encryption_only": cls.counts.without_encryption_only,
            "without_macsec_only": cls.counts.without_macsec_only,
            "infeasible": cls.counts.infeasible,
        },
        "cells": out.json,
    });
    out
}

fn load_trace(
    pcap: &Option<PathBuf>,
    csv: &Option<PathBuf>,
    interface: Option<&str>,
    e2_threshold: u32,
) -> Result<trace::Trace, AppError> {
    match (pcap, csv) {
        (Some(path), None) => {
            let bytes = fs::read(path)
                .map_err(|e| AppError::Data(format!("cannot read {}: {e}", path.display())))?;
            let mut t = trace::parse_pcap(&bytes)?;
            t.source = path.display().to_string();
            match interface {
                Some("e2") => Ok(trace::classify_e2(t, e2_threshold)),
                Some("fronthaul") => {
                    let (t, warnings) = trace::classify_fronthaul(t);
                    if warnings > 0 {
                        eprintln!("warning: {warnings} malformed eCPRI frames classified as other");
                    }
                    Ok(t)
                }
                Some(other) => Err(AppError::Usage(format!(
                    "--interface must be e2 or fronthaul, got `{other}`"
                ))),
                None => Err(AppError::Usage(
                    "--interface e2|fronthaul is required with --pcap".into(),
                )),
            }
        }
        (None, Some(path)) => {
            let textual = fs::read_to_string(path)
                .map_err(|e| AppError::Data(format!("cannot read {}: {e}", path.display())))?;
            let mut t = trace::parse_csv_trace(&textual)?;
            t.source = path.display().to_string();
            Ok(t)
        }
        _ => Err(AppError::Usage(
            "exactly one of --pcap or --csv is required".into(),
        )),
    }
}

#[allow(clippy::too_many_arguments)]
fn analyze_output(
    config: &Config,
    t: &trace::Trace,
    emit: &str,
    class: Option<&str>,
    protocol: Option<&str>,
    cipher: Option<&str>,
    profile: Option<&str>,
    macsec_encrypt: bool,
) -> Result<Output, AppError> {
    match emit {
        "summary" => {
            let s = trace::summarize(t)?;
            let mut pairs = vec![
                ("packets", int(s.packets)),
                ("total_bytes", int(s.total_bytes)),
                ("mean_len", num(s.mean_len)),
                ("min_len", int(u64::from(s.min_len))),
                ("p50_len", int(u64::from(s.p50_len))),
                ("p95_len", int(u64::from(s.p95_len))),
                ("max_len", int(u64::from(s.max_len))),
                ("duration_s", num(s.duration_s)),
                (
                    "offered_load_bps",
                    s.offered_load_bps.map(num).unwrap_or(Value::Null),
                ),
            ];
            let class_counts: Vec<(&str, Value)> = s
                .per_class
                .iter()
                .map(|c| (c.class.name(), int(c.count)))
                .collect();
            pairs.extend(class_counts);
            Ok(kv_output(pairs))
        }
        "classes" => {
            let s = trace::summarize(t)?;
            let rows = s
                .per_class
                .iter()
                .map(|c| {
                    vec![
                        text(c.class.name()),
                        int(c.count),
                        int(c.bytes),
                        num(c.mean_len),
                    ]
                })
                .collect();
            Ok(rows_output(&["class", "count", "bytes", "mean_len"], rows))
        }
        "cdf" => {
            let filter_class: Option<PacketClass> = match class {
                None => None,
                Some(name) => Some(name.parse().map_err(AppError::Usage)?),
            };
            let cdf = trace::empirical_cdf(t, |r| {
                filter_class.map_or(true, |c| r.classification == c)
            })?;
            let rows = cdf
                .points
                .iter()
                .map(|(len, frac)| vec![int(u64::from(*len)), num(*frac)])
                .collect();
            Ok(rows_output(&["length", "cum_fraction"], rows))
        }
        "projection" => {
            let protocol = parse_protocol(protocol.ok_or_else(|| {
                AppError::Usage("--protocol is required for --emit projection".into())
            })?)?;
            let cfg = security_config(protocol, cipher, macsec_encrypt, None)?;
            let profile_name = profile.unwrap_or(match protocol {
                Protocol::Macsec if macsec_encrypt => "fh-macsec-enc",
                Protocol::Macsec => "fh-macsec",
                _ => "e2-aes256cbc",
            });
            let profile = resolve_profile(config, profile_name)?;
            let p = trace::project_secured(t, &cfg, &profile)?;
            let mut rows: Vec<Vec<Value>> = p
                .per_class
                .iter()
                .map(|c| {
                    vec![
                        text(c.class.name()),
                        int(c.count),
                        num(c.pt_mean_len),
                        num(c.ct_mean_len),
                        int(c.pt_bytes),
                        int(c.ct_bytes),
                        num(c.added_proc_us_mean),
                    ]
                })
                .collect();
            rows.push(vec![
                text("total"),
                int(t.records.len() as u64),
                num(p.pt_total_bytes as f64 / t.records.len() as f64),
                num(p.ct_total_bytes as f64 / t.records.len() as f64),
                int(p.pt_total_bytes),
                int(p.ct_total_bytes),
                num(p.added_proc_us_total / t.records.len() as f64),
            ]);
            let mut out = rows_output(
                &[
                    "class",
                    "count",
                    "pt_mean_len",
                    "ct_mean_len",
                    "pt_bytes",
                    "ct_bytes",
                    "added_proc_us_mean",
                ],
                rows,
            );
            out.json = serde_json::json!({
                "per_class": out.json,
                "pt_load_bps": p.pt_load_bps,
                "ct_load_bps": p.ct_load_bps,
                "duration_s": p.duration_s,
            });
            Ok(out)
        }
        other => Err(AppError::Usage(format!(
            "--emit must be summary|classes|cdf|projection, got `{other}`"
        ))),
    }
}
