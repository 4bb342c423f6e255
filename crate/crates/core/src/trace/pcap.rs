//! Classic pcap reading and writing.
//!
//! Both the microsecond magic 0xa1b2c3d4 and the nanosecond magic
//! 0xa1b23c4d are supported in either byte order. Only Ethernet
//! (link type 1) captures are accepted.

use serde::Serialize;

use super::{Direction, LinkType, PacketClass, PacketRecord, Trace, TraceError};

const MAGIC_USEC: u32 = 0xa1b2_c3d4;
const MAGIC_NSEC: u32 = 0xa1b2_3c4d;
const GLOBAL_HEADER_LEN: usize = 24;
const RECORD_HEADER_LEN: usize = 16;
const LINKTYPE_ETHERNET: u32 = 1;

/// Capture-file parameters preserved for byte-identical re-serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PcapFormat {
    pub nanosecond: bool,
    pub big_endian: bool,
    pub snaplen: u32,
}

impl Default for PcapFormat {
    fn default() -> Self {
        PcapFormat {
            nanosecond: false,
            big_endian: false,
            snaplen: 65_535,
        }
    }
}

impl PcapFormat {
    fn tick_seconds(&self) -> f64 {
        if self.nanosecond {
            1e-9
        } else {
            1e-6
        }
    }

    fn max_frac(&self) -> u32 {
        if self.nanosecond {
            999_999_999
        } else {
            999_999
        }
    }

    fn read_u32(&self, bytes: &[u8]) -> u32 {
        let arr: [u8; 4] = bytes[..4].try_into().unwrap();
        if self.big_endian {
            u32::from_be_bytes(arr)
        } else {
            u32::from_le_bytes(arr)
        }
    }

    fn push_u32(&self, out: &mut Vec<u8>, value: u32) {
        if self.big_endian {
            out.extend_from_slice(&value.to_be_bytes());
        } else {
            out.extend_from_slice(&value.to_le_bytes());
        }
    }

    fn push_u16(&self, out: &mut Vec<u8>, value: u16) {
        if self.big_endian {
            out.extend_from_slice(&value.to_be_bytes());
        } else {
            out.extend_from_slice(&value.to_le_bytes());
        }
    }
}

fn detect_format(magic_bytes: &[u8]) -> Result<PcapFormat, TraceError> {
    let le = u32::from_le_bytes(magic_bytes[..4].try_into().unwrap());
    let be = u32::from_be_bytes(magic_bytes[..4].try_into().unwrap());
    let (big_endian, nanosecond) = match (le, be) {
        (MAGIC_USEC, _) => (false, false),
        (MAGIC_NSEC, _) => (false, true),
        (_, MAGIC_USEC) => (true, false),
        (_, MAGIC_NSEC) => (true, true),
        _ => {
            return Err(TraceError::UnsupportedFormat(format!(
                "not a classic pcap file (magic bytes {:02x}{:02x}{:02x}{:02x})",
                magic_bytes[0], magic_bytes[1], magic_bytes[2], magic_bytes[3]
            )))
        }
    };
    Ok(PcapFormat {
        nanosecond,
        big_endian,
        snaplen: 0,
    })
}

/// Parse a classic pcap byte stream into a [`Trace`] of unclassified
/// records.
pub fn parse_pcap(bytes: &[u8]) -> Result<Trace, TraceError> {
    if bytes.len() < GLOBAL_HEADER_LEN {
        return Err(TraceError::UnsupportedFormat(format!(
            "file of {} bytes is shorter than the 24-byte pcap header",
            bytes.len()
        )));
    }
    let mut format = detect_format(&bytes[..4])?;
    format.snaplen = format.read_u32(&bytes[16..20]);
    let network = format.read_u32(&bytes[20..24]);
    if network != LINKTYPE_ETHERNET {
        return Err(TraceError::UnsupportedFormat(format!(
            "link type {network} is not supported (only Ethernet, link type 1)"
        )));
    }

    let tick = format.tick_seconds();
    let mut records = Vec::new();
    let mut offset = GLOBAL_HEADER_LEN;
    let mut index = 0usize;
    while offset < bytes.len() {
        if bytes.len() - offset < RECORD_HEADER_LEN {
            return Err(TraceError::TruncatedCapture { index });
        }
        let header = &bytes[offset..offset + RECORD_HEADER_LEN];
        let ts_sec = format.read_u32(&header[0..4]);
        let ts_frac = format.read_u32(&header[4..8]);
        let captured_len = format.read_u32(&header[8..12]);
        let original_len = format.read_u32(&header[12..16]);
        offset += RECORD_HEADER_LEN;
        if bytes.len() - offset < captured_len as usize {
            return Err(TraceError::TruncatedCapture { index });
        }
        if captured_len > original_len {
            return Err(TraceError::InvalidRecord {
                index,
                reason: format!(
                    "captured length {captured_len} exceeds original length {original_len}"
                ),
            });
        }
        if ts_frac > format.max_frac() {
            return Err(TraceError::InvalidRecord {
                index,
                reason: format!("sub-second field {ts_frac} out of range"),
            });
        }
        let data = bytes[offset..offset + captured_len as usize].to_vec();
        offset += captured_len as usize;
        records.push(PacketRecord {
            timestamp: ts_sec as f64 + ts_frac as f64 * tick,
            ts_sec,
            ts_frac,
            captured_len,
            original_len,
            classification: PacketClass::Other,
            direction: Direction::Unknown,
            data,
        });
        index += 1;
    }

    Ok(Trace {
        link_type: LinkType::Ethernet,
        source: String::new(),
        format: Some(format),
        records,
    })
}

/// Serialize a trace back to classic pcap bytes using its stored format
/// (or the little-endian microsecond default). A trace parsed from bytes
/// produced by this writer re-serializes byte-identically.
pub fn write_pcap(trace: &Trace) -> Result<Vec<u8>, TraceError> {
    let format = trace.format.unwrap_or_default();
    let magic = if format.nanosecond { MAGIC_NSEC } else { MAGIC_USEC };
    let mut out = Vec::with_capacity(
        GLOBAL_HEADER_LEN
            + trace
                .records
                .iter()
                .map(|r| RECORD_HEADER_LEN + r.data.len())
                .sum::<usize>(),
    );
    format.push_u32(&mut out, magic);
    format.push_u16(&mut out, 2); // version 2.4
    format.push_u16(&mut out, 4);
    format.push_u32(&mut out, 0); // thiszone
    format.push_u32(&mut out, 0); // sigfigs
    format.push_u32(&mut out, format.snaplen);
    format.push_u32(&mut out, LINKTYPE_ETHERNET);
    for (index, record) in trace.records.iter().enumerate() {
        if record.data.len() != record.captured_len as usize {
            return Err(TraceError::MissingPacketData { index });
        }
        format.push_u32(&mut out, record.ts_sec);
        format.push_u32(&mut out, record.ts_frac);
        format.push_u32(&mut out, record.captured_len);
        format.push_u32(&mut out, record.original_len);
        out.extend_from_slice(&record.data);
    }
    Ok(out)
}
