//! Enumeration of SRG parameter tuples passing every necessary condition,
//! and the table of named strongly regular graphs.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_num;
use crate::graph::SrgParams;
use crate::qec::{QeClass, QecReport};
use crate::srg::{self, FeasibilityReport, SrgSpectrum};

pub const MIN_N: i64 = 4;
pub const MAX_N: i64 = 100_000;

/// The scanner only checks necessary conditions; it never certifies that
/// a graph exists.
pub const EXISTENCE: &str = "unknown";

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub params: SrgParams,
    pub feasibility: FeasibilityReport,
    pub spectrum: SrgSpectrum,
    pub qec: QecReport,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// All feasible tuples on exactly `n` vertices, sorted by `(k, λ, μ)`.
///
/// For fixed `(n, k)`, μ is forced by `(n-k-1)μ = (k-λ-1)k`. Writing
/// `t = k-λ-1`, μ is an integer iff `t` is a multiple of
/// `(n-k-1)/gcd(k, n-k-1)`, and `μ <= k` iff `t <= n-k-1`.
pub fn scan_n(n: i64) -> Vec<ScanRow> {
    let mut rows = Vec::new();
    for k in 2..=n - 2 {
        let m = n - k - 1;
        let step = m / gcd(k, m);
        let t_max = (k - 1).min(m);
        let mut t = step;
        let mut found = Vec::new();
        while t <= t_max {
            let p = SrgParams::new(n, k, k - 1 - t, t * k / m);
            let feasibility = srg::validate_params(p);
            if feasibility.is_feasible() {
                let spectrum = srg::adjacency_eigenvalues(p).expect("feasible");
                let qec = srg::qec_closed_form(p).expect("feasible");
                found.push(ScanRow {
                    params: p,
                    feasibility,
                    spectrum,
                    qec,
                });
            }
            t += step;
        }
        // t ascending means λ descending
        rows.extend(found.into_iter().rev());
    }
    rows
}

/// Every feasible tuple with `4 <= n <= n_max`, sorted by `(n, k, λ, μ)`.
pub fn enumerate_feasible(n_max: i64) -> Result<Vec<ScanRow>> {
    if !(MIN_N..=MAX_N).contains(&n_max) {
        return Err(Error::input(format!(
            "n_max must lie in {MIN_N}..={MAX_N}, got {n_max}"
        )));
    }
    let per_n: Vec<Vec<ScanRow>> = (MIN_N..=n_max).into_par_iter().map(scan_n).collect();
    Ok(per_n.into_iter().flatten().collect())
}

/// Flat record used by both output formats.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
    pub s: f64,
    pub r: f64,
    pub f: i64,
    pub g: i64,
    pub qec: f64,
    pub class: QeClass,
    pub conference: bool,
    pub existence: String,
}

impl From<&ScanRow> for ScanRecord {
    fn from(row: &ScanRow) -> Self {
        let p = row.params;
        ScanRecord {
            n: p.n,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
            s: row.spectrum.s,
            r: row.spectrum.r,
            f: row.spectrum.f,
            g: row.spectrum.g,
            qec: row.qec.qec,
            class: row.qec.qe_class,
            conference: row.feasibility.is_conference,
            existence: EXISTENCE.to_string(),
        }
    }
}

pub const TSV_HEADER: &str = "n\tk\tlambda\tmu\ts\tr\tf\tg\tqec\tclass\tconference\texistence";

impl ScanRecord {
    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.k,
            self.lambda,
            self.mu,
            fmt_num(self.s),
            fmt_num(self.r),
            self.f,
            self.g,
            fmt_num(self.qec),
            self.class,
            self.conference,
            self.existence
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanFormat {
    Tsv,
    JsonLines,
}

/// Writes rows in the chosen format. TSV starts with a header line.
pub fn write_rows<W: Write>(rows: &[ScanRow], format: ScanFormat, mut out: W) -> io::Result<()> {
    if format == ScanFormat::Tsv {
        writeln!(out, "{TSV_HEADER}")?;
    }
    for row in rows {
        let rec = ScanRecord::from(row);
        match format {
            ScanFormat::Tsv => writeln!(out, "{}", rec.tsv_line())?,
            ScanFormat::JsonLines => {
                serde_json::to_writer(&mut out, &rec)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

/// A named strongly regular graph with its tabulated QEC.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: &'static str,
    pub params: SrgParams,
    pub qec: i64,
}

pub const NAMED_GRAPHS: [NamedGraph; 9] = [
    NamedGraph { name: "Petersen", params: SrgParams::new(10, 3, 0, 1), qec: 0 },
    NamedGraph { name: "Clebsch", params: SrgParams::new(16, 5, 0, 2), qec: 1 },
    NamedGraph { name: "Shrikhande", params: SrgParams::new(16, 6, 2, 2), qec: 0 },
    NamedGraph { name: "Schläfli", params: SrgParams::new(27, 16, 10, 8), qec: 0 },
    NamedGraph { name: "Changs", params: SrgParams::new(28, 12, 6, 4), qec: 0 },
    NamedGraph { name: "Hoffman-Singleton", params: SrgParams::new(50, 7, 0, 1), qec: 1 },
    NamedGraph { name: "Sims-Gewirtz", params: SrgParams::new(56, 10, 0, 2), qec: 2 },
    NamedGraph { name: "Brouwer-Haemers", params: SrgParams::new(81, 20, 1, 6), qec: 5 },
    NamedGraph { name: "Higman-Sims", params: SrgParams::new(100, 22, 0, 6), qec: 6 },
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub params: SrgParams,
    pub expected: i64,
    /// Integer QEC from the closed form, `None` if unavailable.
    pub recomputed: Option<i64>,
    pub qe_class: Option<QeClass>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedTable {
    pub rows: Vec<TableRow>,
}

impl NamedTable {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    /// Names of rows whose recomputed QEC differs from the tabulated one.
    pub fn mismatches(&self) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| !r.pass)
            .map(|r| r.name.as_str())
            .collect()
    }
}

/// Recomputes the QEC of every named graph from its parameters.
pub fn named_table() -> NamedTable {
    let rows = NAMED_GRAPHS
        .iter()
        .map(|ng| {
            let recomputed = srg::integer_qec(ng.params).ok().flatten();
            TableRow {
                name: ng.name.to_string(),
                params: ng.params,
                expected: ng.qec,
                recomputed,
                qe_class: srg::classify_qe(ng.params).ok(),
                pass: recomputed == Some(ng.qec),
            }
        })
        .collect();
    NamedTable { rows }
}
