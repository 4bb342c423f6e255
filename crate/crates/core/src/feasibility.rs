//! WG4 fronthaul latency budgets and the security feasibility
//! classification over O-RU/O-DU category pairs.
//!
//! Every cell of the 12x14 budget matrix is a maximum one-way transmission
//! delay in µs. A cell is classified against the evaluated system's
//! one-way baseline plus the MACsec processing deltas at the 9000 B worst
//! case: a budget that still fits baseline + encryption delta supports
//! MACsec with encryption, and so on down to infeasible.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

/// One-way baseline delay of the reference system, in µs. Derived: the
/// midpoint of the only baseline interval consistent with all three
/// region boundaries of the shipped budget table.
pub const DEFAULT_BASELINE_ONEWAY_US: f64 = 118.0;
/// MACsec (integrity only) one-way delta at the 9000 B worst case, µs.
pub const DEFAULT_DELTA_MACSEC_US: f64 = 153.0;
/// MACsec with encryption one-way delta at the 9000 B worst case, µs.
pub const DEFAULT_DELTA_MACSEC_ENC_US: f64 = 218.0;

const BUDGET_CSV: &str = include_str!("../data/wg4_latency_budget.csv");
const REGIONS_CSV: &str = include_str!("../data/wg4_regions.csv");

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FeasibilityError {
    #[error("invalid budget table: {0}")]
    InvalidTable(String),
    #[error("invalid delay assumptions: {0}")]
    InvalidAssumptions(String),
    #[error("coloring dimensions {got_rows}x{got_cols} do not match the table {rows}x{cols}")]
    ColoringShape {
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    /// No baseline value can reproduce the supplied coloring.
    #[error(
        "inconsistent coloring: baseline would need to be > {low} µs and <= {high} µs at once"
    )]
    InconsistentColoring { low: f64, high: f64 },
}

/// Feasibility of a RU/DU pair under a security configuration, strongest
/// first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    /// Budget fits the baseline plus the encryption delta.
    FeasibleWithEncryption,
    /// Fits MACsec without encryption, but not with it.
    FeasibleWithoutEncryptionOnly,
    /// Fits only the unsecured baseline.
    FeasibleWithoutMacsecOnly,
    Infeasible,
}

impl Region {
    /// Strength rank: higher supports more protection.
    pub fn strength(self) -> u8 {
        match self {
            Region::FeasibleWithEncryption => 3,
            Region::FeasibleWithoutEncryptionOnly => 2,
            Region::FeasibleWithoutMacsecOnly => 1,
            Region::Infeasible => 0,
        }
    }

    /// Single-letter grid code mirroring the red/grey/blue chart coloring.
    pub fn letter(self) -> char {
        match self {
            Region::FeasibleWithEncryption => 'R',
            Region::FeasibleWithoutEncryptionOnly => 'G',
            Region::FeasibleWithoutMacsecOnly => 'B',
            Region::Infeasible => '-',
        }
    }

    pub fn from_letter(c: char) -> Option<Region> {
        match c {
            'R' => Some(Region::FeasibleWithEncryption),
            'G' => Some(Region::FeasibleWithoutEncryptionOnly),
            'B' => Some(Region::FeasibleWithoutMacsecOnly),
            '-' => Some(Region::Infeasible),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Region::FeasibleWithEncryption => "feasible-with-encryption",
            Region::FeasibleWithoutEncryptionOnly => "feasible-without-encryption-only",
            Region::FeasibleWithoutMacsecOnly => "feasible-without-macsec-only",
            Region::Infeasible => "infeasible",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One-way delay assumptions of the system under evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SecurityDelayAssumptions {
    pub baseline_oneway_us: f64,
    pub delta_macsec_us: f64,
    pub delta_macsec_enc_us: f64,
}

impl SecurityDelayAssumptions {
    pub fn new(
        baseline_oneway_us: f64,
        delta_macsec_us: f64,
        delta_macsec_enc_us: f64,
    ) -> Result<SecurityDelayAssumptions, FeasibilityError> {
        if !(0.0 <= delta_macsec_us && delta_macsec_us <= delta_macsec_enc_us) {
            return Err(FeasibilityError::InvalidAssumptions(format!(
                "need 0 <= delta_macsec ({delta_macsec_us}) <= delta_macsec_enc ({delta_macsec_enc_us})"
            )));
        }
        if baseline_oneway_us < 0.0 {
            return Err(FeasibilityError::InvalidAssumptions(format!(
                "baseline must be >= 0 µs, got {baseline_oneway_us}"
            )));
        }
        Ok(SecurityDelayAssumptions {
            baseline_oneway_us,
            delta_macsec_us,
            delta_macsec_enc_us,
        })
    }
}

impl Default for SecurityDelayAssumptions {
    fn default() -> Self {
        SecurityDelayAssumptions {
            baseline_oneway_us: DEFAULT_BASELINE_ONEWAY_US,
            delta_macsec_us: DEFAULT_DELTA_MACSEC_US,
            delta_macsec_enc_us: DEFAULT_DELTA_MACSEC_ENC_US,
        }
    }
}

/// The 12x14 maximum one-way fronthaul delay matrix: rows are O-RU
/// categories O..Z, columns O-DU categories A..N.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatencyBudgetTable {
    ru_categories: Vec<String>,
    du_categories: Vec<String>,
    budget_us: Vec<Vec<f64>>,
}

impl LatencyBudgetTable {
    /// The WG4-specified table shipped with the crate.
    pub fn wg4() -> &'static LatencyBudgetTable {
        static TABLE: OnceLock<LatencyBudgetTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            LatencyBudgetTable::from_csv(BUDGET_CSV).expect("shipped budget table is valid")
        })
    }

    /// Parse `ru,<du...>` header plus one row per RU category.
    pub fn from_csv(text: &str) -> Result<LatencyBudgetTable, FeasibilityError> {
        let bad = |msg: String| FeasibilityError::InvalidTable(msg);
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty table".into()))?;
        let mut cols = header.split(',').map(str::trim);
        cols.next(); // row-label column
        let du_categories: Vec<String> = cols.map(String::from).collect();
        if du_categories.is_empty() {
            return Err(bad("header names no DU categories".into()));
        }
        let mut ru_categories = Vec::new();
        let mut budget_us = Vec::new();
        for line in lines {
            let mut cells = line.split(',').map(str::trim);
            let ru = cells
                .next()
                .ok_or_else(|| bad(format!("row `{line}` has no label")))?;
            let row: Vec<f64> = cells
                .map(|c| {
                    c.parse::<f64>()
                        .map_err(|_| bad(format!("row {ru}: `{c}` is not a number")))
                })
                .collect::<Result<_, _>>()?;
            if row.len() != du_categories.len() {
                return Err(bad(format!(
                    "row {ru} has {} cells, expected {}",
                    row.len(),
                    du_categories.len()
                )));
            }
            ru_categories.push(ru.to_string());
            budget_us.push(row);
        }
        let table = LatencyBudgetTable {
            ru_categories,
            du_categories,
            budget_us,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<(), FeasibilityError> {
        let bad = |msg: String| FeasibilityError::InvalidTable(msg);
        if self.budget_us.is_empty() {
            return Err(bad("table has no rows".into()));
        }
        for (r, row) in self.budget_us.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v < 0.0 {
                    return Err(bad(format!("negative budget at ({r},{c})")));
                }
                if c > 0 && row[c - 1] < v {
                    return Err(bad(format!(
                        "budgets must be non-increasing left to right (row {})",
                        self.ru_categories[r]
                    )));
                }
                if r > 0 && self.budget_us[r - 1][c] < v {
                    return Err(bad(format!(
                        "budgets must be non-increasing top to bottom (column {})",
                        self.du_categories[c]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ru_categories(&self) -> &[String] {
        &self.ru_categories
    }

    pub fn du_categories(&self) -> &[String] {
        &self.du_categories
    }

    pub fn budget_us(&self, ru: usize, du: usize) -> f64 {
        self.budget_us[ru][du]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.budget_us
    }

    /// (RU count, DU count).
    pub fn dims(&self) -> (usize, usize) {
        (self.ru_categories.len(), self.du_categories.len())
    }
}

/// Classify one budget cell. Thresholds are inclusive: a budget exactly
/// equal to baseline + delta still supports that mode.
pub fn classify_cell(budget_us: f64, a: &SecurityDelayAssumptions) -> Region {
    debug_assert!(budget_us >= 0.0);
    if budget_us >= a.baseline_oneway_us + a.delta_macsec_enc_us {
        Region::FeasibleWithEncryption
    } else if budget_us >= a.baseline_oneway_us + a.delta_macsec_us {
        Region::FeasibleWithoutEncryptionOnly
    } else if budget_us >= a.baseline_oneway_us {
        Region::FeasibleWithoutMacsecOnly
    } else {
        Region::Infeasible
    }
}

/// Cells per region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct RegionCounts {
    pub with_encryption: usize,
    pub without_encryption_only: usize,
    pub without_macsec_only: usize,
    pub infeasible: usize,
}

impl RegionCounts {
    pub fn total(&self) -> usize {
        self.with_encryption
            + self.without_encryption_only
            + self.without_macsec_only
            + self.infeasible
    }
}

/// Per-cell regions plus counts for a whole table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableClassification {
    pub regions: Vec<Vec<Region>>,
    pub counts: RegionCounts,
}

pub fn classify_table(
    table: &LatencyBudgetTable,
    a: &SecurityDelayAssumptions,
) -> TableClassification {
    let mut counts = RegionCounts::default();
    let regions = table
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&budget| {
                    let region = classify_cell(budget, a);
                    match region {
                        Region::FeasibleWithEncryption => counts.with_encryption += 1,
                        Region::FeasibleWithoutEncryptionOnly => {
                            counts.without_encryption_only += 1
                        }
                        Region::FeasibleWithoutMacsecOnly => counts.without_macsec_only += 1,
                        Region::Infeasible => counts.infeasible += 1,
                    }
                    region
                })
                .collect()
        })
        .collect();
    TableClassification { regions, counts }
}

/// The range of baseline values reproducing a coloring, as a half-open
/// interval `(low, high]`. Unconstrained ends are infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BaselineInterval {
    /// Exclusive lower bound, `-inf` when unconstrained.
    pub low_us: f64,
    /// Inclusive upper bound, `+inf` when unconstrained.
    pub high_us: f64,
}

/// Invert the classification: find every baseline consistent with an
/// observed coloring, given the two deltas.
pub fn baseline_interval_from_coloring(
    table: &LatencyBudgetTable,
    coloring: &[Vec<Region>],
    delta_macsec_us: f64,
    delta_macsec_enc_us: f64,
) -> Result<BaselineInterval, FeasibilityError> {
    let (rows, cols) = table.dims();
    if coloring.len() != rows || coloring.iter().any(|r| r.len() != cols) {
        return Err(FeasibilityError::ColoringShape {
            rows,
            cols,
            got_rows: coloring.len(),
            got_cols: coloring.first().map_or(0, |r| r.len()),
        });
    }
    let mut low = f64::NEG_INFINITY;
    let mut high = f64::INFINITY;
    for r in 0..rows {
        for c in 0..cols {
            let b = table.budget_us(r, c);
            // region(b) = X pins baseline between the thresholds around X.
            match coloring[r][c] {
                Region::FeasibleWithEncryption => {
                    high = high.min(b - delta_macsec_enc_us);
                }
                Region::FeasibleWithoutEncryptionOnly => {
                    low = low.max(b - delta_macsec_enc_us);
                    high = high.min(b - delta_macsec_us);
                }
                Region::FeasibleWithoutMacsecOnly => {
                    low = low.max(b - delta_macsec_us);
                    high = high.min(b);
                }
                Region::Infeasible => {
                    low = low.max(b);
                }
            }
        }
    }
    if low >= high {
        return Err(FeasibilityError::InconsistentColoring { low, high });
    }
    Ok(BaselineInterval {
        low_us: low,
        high_us: high,
    })
}

/// The coloring of the shipped table as published: red (encryption), grey
/// (integrity only), blue (no MACsec), uncolored.
pub fn wg4_reference_regions() -> &'static Vec<Vec<Region>> {
    static REGIONS: OnceLock<Vec<Vec<Region>>> = OnceLock::new();
    REGIONS.get_or_init(|| {
        regions_from_csv(REGIONS_CSV).expect("shipped region map is valid")
    })
}

/// Parse a region grid with the same header/row-label shape as the budget
/// table, cells being the single-letter region codes.
pub fn regions_from_csv(text: &str) -> Result<Vec<Vec<Region>>, FeasibilityError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    lines.next(); // header
    lines
        .map(|line| {
            line.split(',')
                .skip(1)
                .map(|cell| {
                    let cell = cell.trim();
                    let mut chars = cell.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => Region::from_letter(c).ok_or_else(|| {
                            FeasibilityError::InvalidTable(format!("unknown region code `{cell}`"))
                        }),
                        _ => Err(FeasibilityError::InvalidTable(format!(
                            "region cell must be one letter, got `{cell}`"
                        ))),
                    }
                })
                .collect()
        })
        .collect()
}
