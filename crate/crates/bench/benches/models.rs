use criterion::{black_box, criterion_group, criterion_main, Criterion};

use seccost_bench::synthetic_e2_pcap;
use seccost_core::feasibility::{self, LatencyBudgetTable, SecurityDelayAssumptions};
use seccost_core::mtu::{self, FragmentStrategy};
use seccost_core::overhead::{self, CipherId, CipherSuite, SecurityConfig};
use seccost_core::trace;
use seccost_core::{delay, profiles};

fn bench_esp_framing(c: &mut Criterion) {
    let suite = CipherSuite::standard(CipherId::Aes256Cbc);
    let cfg = SecurityConfig::esp_tunnel(suite);
    c.bench_function("esp_tunnel_framing_62_to_9000", |b| {
        b.iter(|| {
            let mut total = 0u64;
            for pt in 62..=9000u64 {
                total += overhead::esp_tunnel_frame_length(black_box(pt), &suite, &cfg)
                    .unwrap()
                    .ct_frame_len;
            }
            total
        })
    });
}

fn bench_mtu_sweep(c: &mut Criterion) {
    let cfg = SecurityConfig::macsec(true);
    let profile = profiles::fronthaul_macsec_encrypted();
    let link = delay::LinkSpec::new(10e9, 10.0);
    c.bench_function("mtu_sweep_1400_9000_step100", |b| {
        b.iter(|| {
            mtu::mtu_sweep(
                black_box(8192),
                &cfg,
                &profile,
                &link,
                1400,
                9000,
                100,
                FragmentStrategy::Greedy,
            )
            .unwrap()
        })
    });
}

fn bench_feasibility(c: &mut Criterion) {
    let table = LatencyBudgetTable::wg4();
    let assumptions = SecurityDelayAssumptions::default();
    c.bench_function("classify_wg4_table", |b| {
        b.iter(|| feasibility::classify_table(black_box(table), &assumptions))
    });
}

fn bench_pcap_pipeline(c: &mut Criterion) {
    let bytes = synthetic_e2_pcap(2000); // 6000 packets
    c.bench_function("parse_and_classify_6k_packets", |b| {
        b.iter(|| {
            let t = trace::parse_pcap(black_box(&bytes)).unwrap();
            let t = trace::classify_e2(t, trace::DEFAULT_E2AP_SHORT_LONG_THRESHOLD);
            trace::summarize(&t).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_esp_framing,
    bench_mtu_sweep,
    bench_feasibility,
    bench_pcap_pipeline
);
criterion_main!(benches);
