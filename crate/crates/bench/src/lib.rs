//! Shared fixture builders for the benchmarks.

use seccost_core::trace::{Direction, LinkType, PacketClass, PacketRecord, Trace};

/// SCTP-over-IPv4 Ethernet frame of `len` bytes with the given first
/// chunk type.
pub fn sctp_frame(len: usize, chunk_type: u8) -> Vec<u8> {
    assert!(len >= 47);
    let mut f = vec![0u8; len];
    f[0..6].copy_from_slice(&[0x0a; 6]);
    f[6..12].copy_from_slice(&[0x02; 6]);
    f[12..14].copy_from_slice(&0x0800u16.to_be_bytes());
    f[14] = 0x45;
    f[16..18].copy_from_slice(&((len - 14) as u16).to_be_bytes());
    f[22] = 64;
    f[23] = 132;
    f[46] = chunk_type;
    f
}

/// A synthetic E2 capture with the observed short/long/SACK pattern,
/// serialized as classic pcap bytes.
pub fn synthetic_e2_pcap(groups: usize) -> Vec<u8> {
    let mut records = Vec::with_capacity(groups * 3);
    let mut push = |i: usize, data: Vec<u8>| {
        records.push(PacketRecord {
            timestamp: i as f64 * 1e-4,
            ts_sec: 0,
            ts_frac: (i * 100) as u32,
            captured_len: data.len() as u32,
            original_len: data.len() as u32,
            classification: PacketClass::Other,
            direction: Direction::Unknown,
            data,
        });
    };
    for g in 0..groups {
        push(g * 3, sctp_frame(195, 0));
        push(g * 3 + 1, sctp_frame(1425, 0));
        push(g * 3 + 2, sctp_frame(62, 3));
    }
    let trace = Trace {
        link_type: LinkType::Ethernet,
        source: String::new(),
        format: None,
        records,
    };
    seccost_core::trace::write_pcap(&trace).expect("fixture serializes")
}
