//! Per-interface traffic classification.
//!
//! E2 traffic is SCTP over IPv4 over Ethernet: the first chunk type of
//! each SCTP packet decides the class (type 3 is a SACK, DATA chunks are
//! E2AP messages split at a configurable frame-length threshold).
//! Fronthaul traffic is eCPRI straight over Ethernet: the common-header
//! message type separates user-plane from control-plane frames.

use super::{Direction, PacketClass, Trace};

/// Frame-length boundary between short and long E2AP messages. The
/// observed distribution is bimodal around 195 B and 1425 B; 300 B
/// separates the modes cleanly.
pub const DEFAULT_E2AP_SHORT_LONG_THRESHOLD: u32 = 300;

/// Ethertype carrying eCPRI directly over Ethernet.
pub const ECPRI_ETHERTYPE: u16 = 0xAEFE;

const ETHERTYPE_IPV4: u16 = 0x0800;
const IP_PROTO_SCTP: u8 = 132;
const SCTP_CHUNK_DATA: u8 = 0;
const SCTP_CHUNK_SACK: u8 = 3;
const ECPRI_MSG_IQ_DATA: u8 = 0;
const ECPRI_MSG_RT_CONTROL: u8 = 2;

fn ethertype(data: &[u8]) -> Option<u16> {
    if data.len() < 14 {
        return None;
    }
    Some(u16::from_be_bytes([data[12], data[13]]))
}

fn classify_e2_frame(data: &[u8], original_len: u32, threshold: u32) -> PacketClass {
    if ethertype(data) != Some(ETHERTYPE_IPV4) {
        return PacketClass::Other;
    }
    let ip = &data[14..];
    if ip.len() < 20 || ip[0] >> 4 != 4 {
        return PacketClass::Other;
    }
    let ihl = usize::from(ip[0] & 0x0f) * 4;
    if ihl < 20 || ip.len() < ihl {
        return PacketClass::Other;
    }
    if ip[9] != IP_PROTO_SCTP {
        return PacketClass::Other;
    }
    // SCTP common header is 12 bytes; the first chunk's type byte follows.
    // Multi-chunk bundles classify by their first chunk.
    let sctp = &ip[ihl..];
    if sctp.len() < 13 {
        return PacketClass::Other;
    }
    match sctp[12] {
        SCTP_CHUNK_SACK => PacketClass::E2Sack,
        SCTP_CHUNK_DATA => {
            if original_len < threshold {
                PacketClass::E2apShort
            } else {
                PacketClass::E2apLong
            }
        }
        _ => PacketClass::Other,
    }
}

/// `(class, malformed)`: a frame with the eCPRI ethertype but no room for
/// the 4-byte common header counts as malformed.
fn classify_fronthaul_frame(data: &[u8]) -> (PacketClass, bool) {
    if ethertype(data) != Some(ECPRI_ETHERTYPE) {
        return (PacketClass::Other, false);
    }
    let body = &data[14..];
    if body.len() < 4 {
        return (PacketClass::Other, true);
    }
    match body[1] {
        ECPRI_MSG_IQ_DATA => (PacketClass::EcpriUserPlane, false),
        ECPRI_MSG_RT_CONTROL => (PacketClass::EcpriControlPlane, false),
        _ => (PacketClass::Other, false),
    }
}

/// MAC pair of the first packet defines the A->B direction; packets on
/// neither that pair nor its reverse stay Unknown.
fn infer_directions(trace: &mut Trace) {
    let reference = trace.records.iter().find_map(|r| {
        if r.data.len() >= 12 {
            let dst: [u8; 6] = r.data[0..6].try_into().unwrap();
            let src: [u8; 6] = r.data[6..12].try_into().unwrap();
            Some((src, dst))
        } else {
            None
        }
    });
    let Some((a, b)) = reference else {
        return;
    };
    if a == b {
        return; // ambiguous
    }
    for record in &mut trace.records {
        if record.data.len() < 12 {
            continue;
        }
        let dst: [u8; 6] = record.data[0..6].try_into().unwrap();
        let src: [u8; 6] = record.data[6..12].try_into().unwrap();
        record.direction = if (src, dst) == (a, b) {
            Direction::AToB
        } else if (src, dst) == (b, a) {
            Direction::BToA
        } else {
            Direction::Unknown
        };
    }
}

/// Classify every record as E2 traffic. Non-IP and non-SCTP frames become
/// `Other`; nothing is fatal.
pub fn classify_e2(mut trace: Trace, short_long_threshold: u32) -> Trace {
    infer_directions(&mut trace);
    for record in &mut trace.records {
        record.classification =
            classify_e2_frame(&record.data, record.original_len, short_long_threshold);
    }
    trace
}

/// Classify every record as fronthaul traffic. Returns the trace and the
/// count of malformed eCPRI frames.
pub fn classify_fronthaul(mut trace: Trace) -> (Trace, usize) {
    infer_directions(&mut trace);
    let mut warnings = 0;
    for record in &mut trace.records {
        let (class, malformed) = classify_fronthaul_frame(&record.data);
        record.classification = class;
        if malformed {
            warnings += 1;
        }
    }
    (trace, warnings)
}
