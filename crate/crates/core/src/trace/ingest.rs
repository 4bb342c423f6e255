//! Plain CSV ingest for users without raw captures: `ts_s,len_bytes,class`.

use serde::Deserialize;

use super::{Direction, LinkType, PacketClass, PacketRecord, Trace, TraceError};

#[derive(Debug, Deserialize)]
struct CsvRow {
    ts_s: f64,
    len_bytes: u32,
    class: String,
}

/// Build a trace from summary rows. Records carry no captured bytes, so
/// classification comes from the `class` column and re-serialization to
/// pcap is not possible.
pub fn parse_csv_trace(text: &str) -> Result<Trace, TraceError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for (index, row) in reader.deserialize::<CsvRow>().enumerate() {
        let row = row.map_err(|e| TraceError::CsvIngest(format!("row {}: {e}", index + 1)))?;
        let class: PacketClass = row
            .class
            .parse()
            .map_err(|e| TraceError::CsvIngest(format!("row {}: {e}", index + 1)))?;
        if row.ts_s < 0.0 || !row.ts_s.is_finite() {
            return Err(TraceError::CsvIngest(format!(
                "row {}: bad timestamp {}",
                index + 1,
                row.ts_s
            )));
        }
        let ts_sec = row.ts_s.floor();
        records.push(PacketRecord {
            timestamp: row.ts_s,
            ts_sec: ts_sec as u32,
            ts_frac: ((row.ts_s - ts_sec) * 1e6).round() as u32,
            captured_len: 0,
            original_len: row.len_bytes,
            classification: class,
            direction: Direction::Unknown,
            data: Vec::new(),
        });
    }
    Ok(Trace {
        link_type: LinkType::Ethernet,
        source: String::new(),
        format: None,
        records,
    })
}
