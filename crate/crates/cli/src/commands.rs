use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use qec_core::embedding::construct_embedding;
use qec_core::format::fmt_num;
use qec_core::generators;
use qec_core::qec::{cross_check, CrossCheck};
use qec_core::scan::{self, ScanFormat, EXISTENCE};
use qec_core::srg::{self, Feasibility, FeasibilityReport, SrgSpectrum};
use qec_core::tolerance::Tolerances;
use qec_core::{Error, Graph, QecReport, Result, SrgParams};

use crate::GraphSource;

/// `println!` that ignores a closed stdout instead of panicking.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(io::stdout(), $($arg)*);
    }};
}

fn load(source: &GraphSource) -> Result<(String, Graph)> {
    match (&source.file, &source.generator) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            Ok((path.display().to_string(), Graph::parse_edge_list(&text)?))
        }
        (None, Some(spec)) => Ok((spec.clone(), generators::generate(spec)?)),
        (None, None) => Err(Error::Input("give --file or --gen".into())),
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Input(format!("write failed: {e}"))
}

/// A closed stdout (e.g. piped into `head`) is not an error.
fn quiet_pipe(r: io::Result<()>) -> Result<()> {
    match r {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(io_err(e)),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::Input(e.to_string()))?;
    quiet_pipe(writeln!(io::stdout(), "{s}"))
}

/// JSON document printed by `qec --json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QecOutput {
    pub graph: String,
    pub n: usize,
    #[serde(flatten)]
    pub report: QecReport,
    pub transmission_regular: bool,
    pub attains_delta2: bool,
    pub srg: Option<SrgParams>,
    pub closed_form: Option<QecReport>,
    pub difference: Option<f64>,
    pub spectrum_match: Option<bool>,
    pub cross_check_passed: bool,
}

impl QecOutput {
    fn new(graph: String, n: usize, cc: &CrossCheck) -> Self {
        QecOutput {
            graph,
            n,
            report: cc.numeric,
            transmission_regular: cc.transmission_regular,
            attains_delta2: cc.attains_delta2,
            srg: cc.params,
            closed_form: cc.closed_form,
            difference: cc.difference,
            spectrum_match: cc.spectrum.as_ref().map(|s| s.matches),
            cross_check_passed: cc.passed(),
        }
    }
}

pub fn qec(source: &GraphSource, json: bool) -> Result<u8> {
    let (name, g) = load(source)?;
    let cc = cross_check(&g)?;
    let out = QecOutput::new(name, g.n(), &cc);
    if json {
        print_json(&out)?;
    } else {
        let r = &out.report;
        say!("graph                 {} (n = {})", out.graph, out.n);
        say!("qec                   {}", fmt_num(r.qec));
        say!("delta1                {}", fmt_num(r.delta1));
        say!("delta2                {}", fmt_num(r.delta2));
        say!("qe_class              {}", r.qe_class);
        say!("method                {}", r.method);
        say!("transmission_regular  {}", out.transmission_regular);
        if let (Some(p), Some(closed), Some(diff)) = (out.srg, out.closed_form, out.difference) {
            say!("srg                   {p}");
            say!("closed_form_qec       {}", fmt_num(closed.qec));
            say!("difference            {diff:.3e}");
            say!(
                "cross_check           {}",
                if out.cross_check_passed { "pass" } else { "FAIL" }
            );
        }
    }
    Ok(0)
}

/// JSON document printed by `check --json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutput {
    pub feasibility: FeasibilityReport,
    pub spectrum: Option<SrgSpectrum>,
    pub distance_eigenvalues: Option<[f64; 3]>,
    pub qec: Option<QecReport>,
    pub existence: String,
}

pub fn check(n: i64, k: i64, lambda: i64, mu: i64, json: bool) -> Result<u8> {
    let p = SrgParams::new(n, k, lambda, mu);
    let feasibility = srg::validate_params(p);
    let mut out = CheckOutput {
        feasibility,
        spectrum: None,
        distance_eigenvalues: None,
        qec: None,
        existence: EXISTENCE.into(),
    };
    if feasibility.is_feasible() {
        out.spectrum = Some(srg::adjacency_eigenvalues(p)?);
        out.distance_eigenvalues = Some(srg::distance_eigenvalues(p)?);
        out.qec = Some(srg::qec_closed_form(p)?);
    }
    if json {
        print_json(&out)?;
        return Ok(0);
    }
    say!("params                {p}");
    match feasibility.status {
        Feasibility::Feasible => say!("feasible              yes (necessary conditions only)"),
        Feasibility::Infeasible(c) => say!("feasible              no: violates {c}"),
    }
    say!("conference            {}", feasibility.is_conference);
    say!("integer_eigenvalues   {}", feasibility.integer_eigenvalues);
    if let (Some(sp), Some(de), Some(q)) = (out.spectrum, out.distance_eigenvalues, out.qec) {
        say!("s                     {} (multiplicity g = {})", fmt_num(sp.s), sp.g);
        say!("r                     {} (multiplicity f = {})", fmt_num(sp.r), sp.f);
        say!("k                     {} (multiplicity 1)", sp.k);
        say!(
            "distance_spectrum     {} (x{}), {} (x{}), {} (x1)",
            fmt_num(de[0]),
            sp.f,
            fmt_num(de[1]),
            sp.g,
            fmt_num(de[2])
        );
        say!("qec                   {}", fmt_num(q.qec));
        say!("qe_class              {}", q.qe_class);
        say!("existence             {EXISTENCE}");
    }
    Ok(0)
}

pub fn scan(n_max: i64, json: bool) -> Result<u8> {
    let rows = scan::enumerate_feasible(n_max)?;
    let format = if json { ScanFormat::JsonLines } else { ScanFormat::Tsv };
    let stdout = io::stdout();
    let mut lock = io::BufWriter::new(stdout.lock());
    quiet_pipe(scan::write_rows(&rows, format, &mut lock).and_then(|_| lock.flush()))?;
    Ok(0)
}

pub fn embed(source: &GraphSource, output: Option<&Path>) -> Result<u8> {
    let (name, g) = load(source)?;
    let d = g.distance_matrix()?;
    let e = match construct_embedding(&d) {
        Ok(e) => e,
        Err(Error::NotQeClass { qec, .. }) => {
            eprintln!("error: {name} is not of QE class: qec = {}", fmt_num(qec));
            return Ok(3);
        }
        Err(other) => return Err(other),
    };
    let text = serde_json::to_string_pretty(&e).map_err(|err| Error::Input(err.to_string()))?;
    match output {
        Some(path) => {
            fs::write(path, text + "\n").map_err(io_err)?;
            say!(
                "{name}: embedded in dimension {} (max deviation {:.3e}) -> {}",
                e.dim,
                e.max_deviation,
                path.display()
            );
        }
        None => quiet_pipe(writeln!(io::stdout(), "{text}"))?,
    }
    Ok(0)
}

/// A table row, recomputed from a generated graph where one is available.
/// `pass` covers both the closed form and the numeric value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableOutputRow {
    #[serde(flatten)]
    pub row: scan::TableRow,
    pub numeric: Option<f64>,
}

fn generator_for(name: &str) -> Option<Graph> {
    match name {
        "Petersen" => Some(generators::petersen()),
        "Clebsch" => Some(generators::clebsch()),
        "Shrikhande" => Some(generators::shrikhande()),
        _ => None,
    }
}

pub fn table(json: bool) -> Result<u8> {
    let table = scan::named_table();
    let mut rows = Vec::new();
    for row in table.rows {
        let numeric = match generator_for(&row.name) {
            Some(g) => Some(cross_check(&g)?),
            None => None,
        };
        let numeric_ok = numeric.as_ref().is_none_or(|cc| {
            cc.passed()
                && cc.params == Some(row.params)
                && (cc.numeric.qec - row.expected as f64).abs() <= Tolerances::DEFAULT.cross_check
        });
        let mut row = row;
        row.pass &= numeric_ok;
        rows.push(TableOutputRow {
            numeric: numeric.map(|cc| cc.numeric.qec),
            row,
        });
    }
    let all_pass = rows.iter().all(|r| r.row.pass);
    if json {
        print_json(&rows)?;
    } else {
        say!(
            "{:<18} {:>4} {:>4} {:>4} {:>4} {:>6} {:>10} {:>8} {:>9}  status",
            "graph", "n", "k", "lam", "mu", "table", "closed", "numeric", "class"
        );
        for r in &rows {
            let p = r.row.params;
            say!(
                "{:<18} {:>4} {:>4} {:>4} {:>4} {:>6} {:>10} {:>8} {:>9}  {}",
                r.row.name,
                p.n,
                p.k,
                p.lambda,
                p.mu,
                r.row.expected,
                r.row.recomputed.map_or("-".into(), |q| q.to_string()),
                r.numeric.map_or("-".into(), fmt_num),
                r.row.qe_class.map_or("-", |c| c.as_str()),
                if r.row.pass { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(if all_pass { 0 } else { 4 })
}
