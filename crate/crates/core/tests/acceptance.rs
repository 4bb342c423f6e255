//! Acceptance suite: one test per numbered criterion, each printing a
//! PASS line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Expected values are either published anchors or frozen outputs of the
//! independent oracles defined at the bottom of this file.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use seccost_core::feasibility::{self, LatencyBudgetTable, Region, SecurityDelayAssumptions};
use seccost_core::overhead::{self, CipherId, CipherSuite, SecurityConfig};
use seccost_core::trace::{self, Direction, PacketClass, PacketRecord, Trace};
use seccost_core::{delay, mtu, perf, profiles};

#[test]
fn acceptance_01_esp_framing_anchor() {
    let suite = CipherSuite::standard(CipherId::Aes256Cbc);
    let cfg = SecurityConfig::esp_tunnel(suite);
    let b = overhead::esp_tunnel_frame_length(62, &suite, &cfg).unwrap();
    assert_eq!(b.ct_frame_len, 138, "ciphertext SACK frame length");
    assert_eq!(b.overhead_total, 76);
    // 64 B encrypted payload + 16 B IV + 8 B ESP header + 16 B ICV
    // + 20 B outer IP + 14 B Ethernet = 138.
    let inner = b.pt_frame_len - 14;
    let encrypted_payload = inner + b.padding + b.trailer;
    assert_eq!(encrypted_payload, 64);
    assert_eq!(b.iv, 16);
    assert_eq!(b.outer_headers, 20 + 8);
    assert_eq!(b.icv, 16);
    assert_eq!(encrypted_payload + b.iv + 8 + b.icv + 20 + 14, 138);
    println!("PASS criterion 1: ESP tunnel 62 B -> 138 B with breakdown 64+16+8+16+20+14");
}

#[test]
fn acceptance_02_macsec_fixed_expansion() {
    let mut rng = StdRng::seed_from_u64(0x5ec);
    for _ in 0..1000 {
        let pt = rng.gen_range(60u64..=9000);
        for encrypt in [false, true] {
            let b = overhead::macsec_frame_length(pt, encrypt).unwrap();
            assert_eq!(b.ct_frame_len - pt, 32, "pt={pt} encrypt={encrypt}");
        }
    }
    println!("PASS criterion 2: MACsec ct - pt = 32 for 1000 random frames, both modes");
}

#[test]
fn acceptance_03_transmission_delays_table() {
    let link = delay::LinkSpec::new(10e9, 0.0);
    let table = [
        (62u64, 0.0496),
        (138, 0.1104),
        (195, 0.1560),
        (255, 0.2040),
        (1425, 1.140),
        (1485, 1.188),
    ];
    for (len, expected_us) in table {
        let got = delay::transmission_delay(len, &link);
        assert!(
            (got - expected_us).abs() <= 5e-4,
            "{len} B: got {got} µs, expected {expected_us} µs"
        );
    }
    println!("PASS criterion 3: transmission delays match the published table at 10 Gb/s");
}

#[test]
fn acceptance_04_sack_decomposition() {
    let link = delay::LinkSpec::new(10e9, 0.0);
    let d_prop = 0.05; // published one-way propagation working value
    let pt_total = 61.12;
    let ct_total = 82.64;

    // Solve the decomposition for processing: the SACK path crosses the
    // link twice (request out, SACK back) but transmits the SACK once.
    let pt_proc = pt_total - 2.0 * d_prop - delay::transmission_delay(62, &link);
    assert!(
        (pt_proc - 60.97).abs() <= 0.01,
        "PT processing {pt_proc} µs"
    );

    let ct_proc = ct_total - 2.0 * d_prop - delay::transmission_delay(138, &link);
    assert!(
        (ct_proc - 82.43).abs() <= 0.01,
        "CT processing {ct_proc} µs"
    );

    // The published CT processing figure equals the published CT total,
    // which cannot satisfy the decomposition; report the gap.
    let published_ct_proc = 82.64;
    let discrepancy = published_ct_proc - ct_proc;
    assert!((discrepancy - 0.21).abs() <= 0.01);
    println!(
        "REPORT criterion 4: published CT processing {published_ct_proc} µs vs \
         decomposition-consistent {ct_proc:.4} µs (discrepancy {discrepancy:.2} µs, not suppressed)"
    );

    // Re-summing the solved components reproduces the observed totals.
    let rebuilt = delay::total_delay(
        0.0,
        2.0 * d_prop,
        delay::transmission_delay(62, &link),
        pt_proc,
    );
    assert!((rebuilt.total_us - pt_total).abs() < 1e-9);
    println!("PASS criterion 4: SACK decomposition gives 60.97 µs PT / 82.43 µs CT processing");
}

#[test]
fn acceptance_05_queuing_delta_and_stability_window() {
    // No overhead, no delta: exactly zero for any stable queue.
    for (mu, lam) in [(1e6, 0.0), (1e6, 5e5), (2e4, 1.9e4)] {
        let q = delay::QueueModel {
            service_rate_pps: mu,
            arrival_rate_pps: lam,
            overhead_rate_pps: 0.0,
        };
        assert_eq!(delay::queuing_delta(&q).unwrap(), 0.0);
    }

    // Divergence as λ+ε -> µ from below.
    let mu = 1e6;
    let lam = 5e5;
    let headroom = mu - lam;
    let mut previous = -1.0;
    for k in [0.9, 0.99, 0.999, 0.9999, 0.99999] {
        let q = delay::QueueModel {
            service_rate_pps: mu,
            arrival_rate_pps: lam,
            overhead_rate_pps: k * headroom,
        };
        let d = delay::queuing_delta(&q).unwrap();
        assert!(d > previous, "delta must grow toward the boundary");
        previous = d;
    }
    assert!(previous > 1e5, "delta near the boundary: {previous} µs");

    // Largest offered load keeping the encryption-induced delta <= 1 µs
    // on a 10 Gb/s link with 1500 B mean frames and 60 B overhead, under
    // the packets-per-second conversion convention.
    let link = 10e9;
    let delta_at = |offered_bps: f64| {
        delay::queuing_delta(&delay::rates_from_bits(link, offered_bps, 1500.0, 60.0)).ok()
    };
    let (mut lo, mut hi) = (0.0f64, link);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        match delta_at(mid) {
            Some(d) if d <= 1.0 => lo = mid,
            _ => hi = mid,
        }
    }
    let max_gbps = lo / 1e9;
    assert!(delta_at(lo).unwrap() <= 1.0);
    assert!(max_gbps > 0.0 && max_gbps < 10.0);
    let published_gbps = 9.78;
    println!(
        "REPORT criterion 5: max offered load for Δ <= 1 µs is {max_gbps:.3} Gb/s under the \
         packet-rate convention; published figure {published_gbps} Gb/s (deviation \
         {:.3} Gb/s, unit convention in the source is ambiguous)",
        published_gbps - max_gbps
    );
    println!("PASS criterion 5: queuing delta zero at ε=0, diverges at saturation, window reported");
}

#[test]
fn acceptance_06_cipher_caps_and_cpu_ratio() {
    let caps = perf::CipherCapTable::measured();
    let expected = [
        (CipherId::Aes128Cbc, 505.0),
        (CipherId::Aes256Cbc, 512.0),
        (CipherId::Aes128Ccm, 573.0),
        (CipherId::Aes256Ccm, 573.0),
        (CipherId::ChaCha20Poly1305, 989.0),
        (CipherId::Aes256Gcm, 1370.0),
    ];
    for (cipher, cap) in expected {
        assert_eq!(caps.get(cipher), Some(cap), "{cipher}");
    }
    let model = perf::CpuModel::default();
    let ratio = model.ct_slope_per_mbps / model.pt_slope_per_mbps;
    assert!(
        (10.0..=100.0).contains(&ratio),
        "ct/pt CPU slope ratio {ratio}"
    );
    println!("PASS criterion 6: caps 505/512/573/573/989/1370 Mb/s; CPU slope ratio {ratio:.1}");
}

#[test]
fn acceptance_07_key_size_barely_matters() {
    let caps = perf::CipherCapTable::measured();
    let pairs = [
        (CipherId::Aes128Cbc, CipherId::Aes256Cbc),
        (CipherId::Aes128Ccm, CipherId::Aes256Ccm),
    ];
    for (small, large) in pairs {
        let a = caps.get(small).unwrap();
        let b = caps.get(large).unwrap();
        let gap = (a - b).abs() / b.max(a);
        assert!(gap <= 0.02, "{small} vs {large}: {:.2}%", gap * 100.0);
    }
    println!("PASS criterion 7: AES128 vs AES256 caps differ by <= 2% per mode");
}

#[test]
fn acceptance_08_profile_ordering_invariants() {
    let e2_pt = profiles::e2_pt();
    let e2_gcm = profiles::e2_aes256gcm();
    let e2_cbc = profiles::e2_aes256cbc();
    let fh_pt = profiles::fronthaul_pt();
    let fh_mac = profiles::fronthaul_macsec();
    let fh_enc = profiles::fronthaul_macsec_encrypted();

    for len in 62..=9000u64 {
        let l = len as f64;
        assert_eq!(e2_gcm.eval(l), e2_pt.eval(l), "GCM == PT at {len}");
        if len <= 1500 {
            let delta = e2_cbc.eval(l) - e2_pt.eval(l);
            assert!(delta > 0.0 && delta <= 50.0, "CBC delta {delta} at {len}");
        }
        let mac_delta = fh_mac.eval(l) - fh_pt.eval(l);
        let enc_delta = fh_enc.eval(l) - fh_pt.eval(l);
        assert!(mac_delta >= 0.0, "MACsec delta at {len}");
        assert!(enc_delta >= mac_delta, "encryption >= integrity at {len}");
    }
    // Endpoint deltas exact at the anchors.
    assert_eq!(fh_mac.eval(62.0) - fh_pt.eval(62.0), 39.0);
    assert_eq!(fh_enc.eval(62.0) - fh_pt.eval(62.0), 39.0);
    assert_eq!(fh_mac.eval(9000.0) - fh_pt.eval(9000.0), 153.0);
    assert_eq!(fh_enc.eval(9000.0) - fh_pt.eval(9000.0), 218.0);
    println!("PASS criterion 8: profile orderings hold on [62, 9000] with exact 39/153/218 deltas");
}

#[test]
fn acceptance_09_mtu_models() {
    let cfg = SecurityConfig::macsec(true);
    let profile = profiles::fronthaul_macsec_encrypted();
    let link = delay::LinkSpec::new(10e9, 10.0);

    let delay_at = |mtu| {
        mtu::mtu_transfer_model(8192, mtu, &cfg, &profile, &link, mtu::FragmentStrategy::Greedy)
            .unwrap()
            .total_delay_us
    };
    let d5000 = delay_at(5000);
    let d8000 = delay_at(8000);
    assert!(
        d5000 < d8000,
        "even split must win: {d5000} µs vs {d8000} µs"
    );

    let ft = |mtu| {
        mtu::file_transfer_model(
            4_660_000_000,
            mtu,
            &cfg,
            &link,
            2500.0,
            mtu::DEFAULT_PER_PACKET_PIPELINE_COST_US,
        )
        .unwrap()
    };
    let slow = ft(1400);
    let fast = ft(9000);
    let improvement_pct = (fast.throughput_mbps / slow.throughput_mbps - 1.0) * 100.0;
    assert!(
        (15.0..=25.0).contains(&improvement_pct),
        "throughput improvement {improvement_pct:.1}% outside 20% ± 5 pp"
    );
    println!(
        "PASS criterion 9: MTU 5000 beats 8000 ({d5000:.1} < {d8000:.1} µs); file transfer \
         1400 -> 9000 improves throughput {improvement_pct:.1}%"
    );
}

#[test]
fn acceptance_10_feasibility_table() {
    let table = LatencyBudgetTable::wg4();
    let cls = feasibility::classify_table(table, &SecurityDelayAssumptions::default());

    let reference = feasibility::wg4_reference_regions();
    for (r, (got_row, want_row)) in cls.regions.iter().zip(reference.iter()).enumerate() {
        for (c, (got, want)) in got_row.iter().zip(want_row.iter()).enumerate() {
            assert_eq!(
                got,
                want,
                "cell {}/{}",
                table.ru_categories()[r],
                table.du_categories()[c]
            );
        }
    }
    assert_eq!(cls.counts.with_encryption, 17);
    assert_eq!(cls.counts.without_encryption_only, 12);
    assert_eq!(cls.counts.without_macsec_only, 73);
    assert_eq!(cls.counts.infeasible, 66);

    let interval =
        feasibility::baseline_interval_from_coloring(table, reference, 153.0, 218.0).unwrap();
    assert_eq!(interval.low_us, 115.0);
    assert_eq!(interval.high_us, 121.0);
    println!(
        "PASS criterion 10: coloring reproduced cell-for-cell, counts 17/12/73/66, \
         baseline interval ({}, {}]",
        interval.low_us, interval.high_us
    );
}

#[test]
fn acceptance_11_trace_fixtures_and_projection() {
    // Hand-built three-packet fixtures in all four format variants.
    for big_endian in [false, true] {
        for nanosecond in [false, true] {
            let bytes = build_pcap_fixture(big_endian, nanosecond);
            let trace = trace::parse_pcap(&bytes).unwrap();
            assert_eq!(trace.len(), 3);
            let f = trace.format.unwrap();
            assert_eq!(f.big_endian, big_endian);
            assert_eq!(f.nanosecond, nanosecond);
            assert_eq!(trace.records[0].timestamp, 1.0);
            assert_eq!(trace.records[1].timestamp, 1.5);
            assert_eq!(trace.records[2].timestamp, 2.25);
            assert_eq!(trace.records[0].original_len, 62);
            assert_eq!(trace.records[1].original_len, 195);
            assert_eq!(trace.records[2].original_len, 1425);
            // and the fixture writer round-trips byte-identically
            assert_eq!(trace::write_pcap(&trace).unwrap(), bytes);
        }
    }

    // Two-packet CDF.
    let two = synthetic_trace(&[62, 1425]);
    let cdf = trace::empirical_cdf(&two, |_| true).unwrap();
    assert_eq!(cdf.points, vec![(62, 0.5), (1425, 1.0)]);

    // 1000-packet synthetic trace: projection totals equal an independent
    // per-packet recomputation.
    let mut rng = StdRng::seed_from_u64(0xacce);
    let lengths: Vec<u32> = (0..1000)
        .map(|_| match rng.gen_range(0..3) {
            0 => 62,
            1 => rng.gen_range(80..300),
            _ => rng.gen_range(300..1451),
        })
        .collect();
    let trace = synthetic_trace(&lengths);
    let suite = CipherSuite::standard(CipherId::Aes256Cbc);
    let cfg = SecurityConfig::esp_tunnel(suite);
    let profile = profiles::e2_aes256cbc();
    let projection = trace::project_secured(&trace, &cfg, &profile).unwrap();

    let mut oracle_pt = 0u64;
    let mut oracle_ct = 0u64;
    let mut oracle_added = 0.0f64;
    for &len in &lengths {
        let pt = u64::from(len);
        let ct = esp_tunnel_layout_oracle(pt, 16, 16);
        oracle_pt += pt;
        oracle_ct += ct;
        oracle_added +=
            lerp_oracle(profile.anchors(), ct as f64) - lerp_oracle(profile.anchors(), pt as f64);
    }
    assert_eq!(projection.pt_total_bytes, oracle_pt);
    assert_eq!(projection.ct_total_bytes, oracle_ct);
    assert_eq!(projection.added_proc_us_total, oracle_added);
    println!("PASS criterion 11: pcap fixtures exact, CDF exact, projection matches brute force");
}

mod acceptance_12_property_suites {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn fragmentation_reassembles(
            payload in 1u64..200_000,
            mtu in 9u64..9001,
            even: bool,
        ) {
            let strategy = if even {
                mtu::FragmentStrategy::EvenSplit
            } else {
                mtu::FragmentStrategy::Greedy
            };
            let plan = mtu::fragment_payload(payload, mtu, 8, strategy).unwrap();
            prop_assert_eq!(plan.fragments.iter().sum::<u64>(), payload);
            prop_assert!(plan.fragments.iter().all(|&f| f > 0 && f <= mtu - 8));
        }

        #[test]
        fn cdf_monotone_terminating_at_one(
            lens in proptest::collection::vec(20u32..9000, 1..300),
        ) {
            let trace = synthetic_trace(&lens);
            let cdf = trace::empirical_cdf(&trace, |_| true).unwrap();
            for pair in cdf.points.windows(2) {
                prop_assert!(pair[1].0 > pair[0].0);
                prop_assert!(pair[1].1 >= pair[0].1);
            }
            prop_assert!((cdf.points.last().unwrap().1 - 1.0).abs() < 1e-12);
        }

        #[test]
        fn esp_framing_monotone_with_step_period(pt in 62u64..=9000) {
            for id in CipherId::ALL {
                let suite = CipherSuite::standard(id);
                let cfg = SecurityConfig::esp_tunnel(suite);
                let ct = |p| {
                    overhead::esp_tunnel_frame_length(p, &suite, &cfg)
                        .unwrap()
                        .ct_frame_len
                };
                prop_assert!(ct(pt + 1) >= ct(pt));
                // one full period advances the ciphertext by exactly one block
                prop_assert_eq!(ct(pt + suite.block_align), ct(pt) + suite.block_align);
            }
        }

        #[test]
        fn feasibility_monotone_and_nested(
            b1 in 0.0f64..3500.0,
            b2 in 0.0f64..3500.0,
            baseline in 0.0f64..400.0,
            dm in 0.0f64..300.0,
            extra in 0.0f64..200.0,
        ) {
            let a = SecurityDelayAssumptions::new(baseline, dm, dm + extra).unwrap();
            let (lo, hi) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
            prop_assert!(
                feasibility::classify_cell(hi, &a).strength()
                    >= feasibility::classify_cell(lo, &a).strength()
            );
            // nesting: anything feasible with encryption also clears the
            // weaker thresholds
            if feasibility::classify_cell(hi, &a) == Region::FeasibleWithEncryption {
                prop_assert!(hi >= a.baseline_oneway_us + a.delta_macsec_us);
                prop_assert!(hi >= a.baseline_oneway_us);
            }
        }
    }
}

// ---------------------------------------------------------------------
// Oracles and fixture builders, independent of the library internals.

/// ESP tunnel layout by explicit segment construction: find padding by
/// incrementing until the encrypted region aligns, then sum the labeled
/// segments [eth, outer ip, esp, iv, inner+pad+trailer, icv].
fn esp_tunnel_layout_oracle(pt: u64, align: u64, iv: u64) -> u64 {
    let inner = pt - 14;
    let mut pad = 0;
    while (inner + pad + 2) % align != 0 {
        pad += 1;
    }
    [14, 20, 8, iv, inner + pad + 2, 16].iter().sum()
}

/// Straight-line interpolation with endpoint clamping, written against
/// the anchor list rather than the profile's evaluator.
fn lerp_oracle(anchors: &[(f64, f64)], x: f64) -> f64 {
    if x <= anchors[0].0 {
        return anchors[0].1;
    }
    if x >= anchors[anchors.len() - 1].0 {
        return anchors[anchors.len() - 1].1;
    }
    let mut i = 0;
    while anchors[i + 1].0 < x {
        i += 1;
    }
    let (x0, y0) = anchors[i];
    let (x1, y1) = anchors[i + 1];
    y0 + (x - x0) * (y1 - y0) / (x1 - x0)
}

fn push_u32(out: &mut Vec<u8>, value: u32, big_endian: bool) {
    if big_endian {
        out.extend_from_slice(&value.to_be_bytes());
    } else {
        out.extend_from_slice(&value.to_le_bytes());
    }
}

fn push_u16(out: &mut Vec<u8>, value: u16, big_endian: bool) {
    if big_endian {
        out.extend_from_slice(&value.to_be_bytes());
    } else {
        out.extend_from_slice(&value.to_le_bytes());
    }
}

/// Byte-by-byte pcap fixture: 24-byte global header plus three Ethernet
/// records at 1.0 s, 1.5 s, and 2.25 s.
fn build_pcap_fixture(big_endian: bool, nanosecond: bool) -> Vec<u8> {
    let magic: u32 = if nanosecond { 0xa1b2_3c4d } else { 0xa1b2_c3d4 };
    let frac_scale: u32 = if nanosecond { 1000 } else { 1 };
    let mut out = Vec::new();
    push_u32(&mut out, magic, big_endian);
    push_u16(&mut out, 2, big_endian);
    push_u16(&mut out, 4, big_endian);
    push_u32(&mut out, 0, big_endian); // thiszone
    push_u32(&mut out, 0, big_endian); // sigfigs
    push_u32(&mut out, 65_535, big_endian); // snaplen
    push_u32(&mut out, 1, big_endian); // Ethernet
    for (sec, usec, len) in [(1u32, 0u32, 62u32), (1, 500_000, 195), (2, 250_000, 1425)] {
        push_u32(&mut out, sec, big_endian);
        push_u32(&mut out, usec * frac_scale, big_endian);
        push_u32(&mut out, len, big_endian);
        push_u32(&mut out, len, big_endian);
        out.extend((0..len).map(|i| (i % 251) as u8));
    }
    out
}

/// Metadata-only trace used where packet payloads are irrelevant.
fn synthetic_trace(lengths: &[u32]) -> Trace {
    Trace {
        link_type: trace::LinkType::Ethernet,
        source: "synthetic".into(),
        format: None,
        records: lengths
            .iter()
            .enumerate()
            .map(|(i, &len)| PacketRecord {
                timestamp: i as f64 * 0.001,
                ts_sec: 0,
                ts_frac: (i * 1000) as u32,
                captured_len: 0,
                original_len: len,
                classification: PacketClass::Other,
                direction: Direction::Unknown,
                data: Vec::new(),
            })
            .collect(),
    }
}
