//! Acceptance criteria. Runs as a plain binary and prints one line per
//! criterion; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qec_core::embedding::construct_embedding;
use qec_core::generators;
use qec_core::qec::{is_transmission_regular, match_spectrum, qec_numeric};
use qec_core::scan::{enumerate_feasible, named_table, ScanRow};
use qec_core::srg::{self, matrix_identity_check, qe_margin, validate_params};
use qec_core::{Error, SrgParams};

const CROSS_TOL: f64 = 1e-8;
const EXACT_TOL: f64 = 1e-12;
const BAND: f64 = 1e-9;
const EMBED_TOL: f64 = 1e-8;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    check(elapsed < Duration::from_secs(limit_s), || {
        format!("runtime {elapsed:?} exceeds {limit_s} s")
    })
}

/// 1. Named-table reproduction.
fn named_table_reproduction() -> Outcome {
    let t0 = Instant::now();
    let table = named_table();
    let elapsed = t0.elapsed();
    check(table.rows.len() == 9, || format!("{} rows", table.rows.len()))?;
    let expected = [0, 1, 0, 0, 0, 1, 2, 5, 6];
    for (row, want) in table.rows.iter().zip(expected) {
        check(row.recomputed == Some(want) && row.expected == want, || {
            format!("{}: recomputed {:?}, expected {want}", row.name, row.recomputed)
        })?;
    }
    within(elapsed, 1)?;
    Ok(format!("9/9 rows exact in {elapsed:?}"))
}

/// 2. Closed form vs numeric on every constructible SRG.
fn closed_form_vs_numeric() -> Outcome {
    let t0 = Instant::now();
    let mut worst: f64 = 0.0;
    let corpus = common::srg_corpus();
    for (name, g) in &corpus {
        let p = g
            .detect_srg()
            .connected_params()
            .ok_or_else(|| format!("{name} is not a connected srg"))?;
        let closed = srg::qec_closed_form(p).map_err(|e| e.to_string())?.qec;
        let numeric = qec_numeric(g).map_err(|e| e.to_string())?.report.qec;
        let diff = (closed - numeric).abs();
        worst = worst.max(diff);
        check(diff <= CROSS_TOL, || format!("{name} {p}: closed {closed} numeric {numeric}"))?;
    }
    let elapsed = t0.elapsed();
    within(elapsed, 30)?;
    Ok(format!("{} graphs, max |diff| {worst:.2e}, {elapsed:?}", corpus.len()))
}

/// 3. Sign law over a scan to 2000.
fn sign_law(rows: &[ScanRow], elapsed: Duration) -> Outcome {
    let negative: Vec<&ScanRow> = rows.iter().filter(|r| r.qec.qec < 0.0).collect();
    check(negative.len() == 1, || format!("{} tuples with QEC < 0", negative.len()))?;
    let c5 = negative[0];
    check(c5.params == SrgParams::new(5, 2, 0, 1), || format!("negative tuple {}", c5.params))?;
    let want = (-3.0 + 5f64.sqrt()) / 2.0;
    check((c5.qec.qec - want).abs() <= EXACT_TOL, || format!("QEC(C5) = {}", c5.qec.qec))?;
    let mut non_conf = 0;
    for r in rows.iter().filter(|r| !r.feasibility.is_conference) {
        non_conf += 1;
        let q = r.qec.qec;
        check(q >= 0.0 && q.fract() == 0.0, || format!("{}: QEC {q}", r.params))?;
        let exact = srg::integer_qec(r.params).map_err(|e| e.to_string())?;
        check(exact == Some(q as i64), || format!("{}: integer QEC {exact:?}", r.params))?;
    }
    within(elapsed, 60)?;
    Ok(format!(
        "{} feasible tuples (n <= 2000), only srg(5,2,0,1) negative, {non_conf} integer QECs >= 0, scan {elapsed:?}",
        rows.len()
    ))
}

/// 4. sign(QEC) = sign(k - 2λ + μ - 4).
fn qe_class_equivalence(rows: &[ScanRow]) -> Outcome {
    let mut zeros = 0;
    for r in rows {
        let q = r.qec.qec;
        let qec_sign = if q == 0.0 { 0 } else if q > 0.0 { 1 } else { -1 };
        let margin = qe_margin(&r.params).signum() as i32;
        check(qec_sign == margin, || {
            format!("{}: QEC {q} but k-2l+mu-4 sign {margin}", r.params)
        })?;
        zeros += usize::from(qec_sign == 0);
    }
    Ok(format!("{} tuples agree ({zeros} with QEC = 0)", rows.len()))
}

/// 5. Numeric distance spectrum has the predicted three-value shape.
fn distance_spectrum_structure() -> Outcome {
    let corpus = common::srg_corpus();
    for (name, g) in &corpus {
        let p = g.detect_srg().connected_params().ok_or_else(|| name.clone())?;
        let expected = srg::distance_spectrum(p).map_err(|e| e.to_string())?;
        let numeric = qec_numeric(g).map_err(|e| e.to_string())?;
        let m = match_spectrum(&numeric.distance_spectrum, &expected);
        check(m.matches, || {
            format!("{name} {p}: expected {:?}, observed {:?}", m.expected, m.observed)
        })?;
    }
    Ok(format!(
        "{} graphs: {{-r-2 (x f), -s-2 (x g), 2(n-1)-k (x 1)}} within 1e-8, clusters at 1e-6",
        corpus.len()
    ))
}

/// 6. Exact matrix identities.
fn matrix_identities() -> Outcome {
    let corpus = common::srg_corpus();
    for (name, g) in &corpus {
        let p = g.detect_srg().connected_params().ok_or_else(|| name.clone())?;
        let report = matrix_identity_check(g, p).map_err(|e| e.to_string())?;
        check(report.all_passed(), || {
            let f: Vec<_> = report.failures().collect();
            format!("{name}: {f:?}")
        })?;
    }
    Ok(format!("4 identities exact on {} graphs", corpus.len()))
}

/// 7. Embedding exists exactly when QEC <= 1e-9.
fn schoenberg_round_trip() -> Outcome {
    let (mut embedded, mut rejected) = (Vec::new(), Vec::new());
    for (name, g) in common::srg_corpus() {
        let q = qec_numeric(&g).map_err(|e| e.to_string())?.report.qec;
        match construct_embedding(&g.distance_matrix().map_err(|e| e.to_string())?) {
            Ok(e) => {
                check(q <= BAND, || format!("{name}: embedded with qec {q}"))?;
                check(e.max_deviation <= EMBED_TOL, || {
                    format!("{name}: deviation {}", e.max_deviation)
                })?;
                embedded.push(name);
            }
            Err(Error::NotQeClass { .. }) => {
                check(q > BAND, || format!("{name}: rejected with qec {q}"))?;
                rejected.push(name);
            }
            Err(other) => return Err(format!("{name}: {other}")),
        }
    }
    for must in ["cycle:4", "cycle:5", "petersen", "triangular:8", "rook:6", "shrikhande", "cocktail_party:6"] {
        check(embedded.iter().any(|n| n == must), || format!("{must} not embedded"))?;
    }
    for must in ["clebsch", "paley:13", "complete_multipartite:3,3,3"] {
        check(rejected.iter().any(|n| n == must), || format!("{must} not rejected"))?;
    }
    Ok(format!("{} embedded, {} rejected as non-QE", embedded.len(), rejected.len()))
}

/// 8. Interlacing, lower bound and δ₂ on random connected graphs.
fn general_graph_properties() -> Outcome {
    let graphs = common::random_connected_graphs(200, 30, 2024);
    let mut regular = 0;
    for (i, g) in graphs.iter().enumerate() {
        let r = qec_numeric(g).map_err(|e| e.to_string())?;
        let (q, d1, d2) = (r.report.qec, r.report.delta1, r.report.delta2);
        check(d2 <= q + BAND && q < d1, || format!("graph {i}: d2 {d2} qec {q} d1 {d1}"))?;
        check(q >= -1.0 - BAND, || format!("graph {i}: qec {q} < -1"))?;
        if is_transmission_regular(g).map_err(|e| e.to_string())?.is_some() {
            regular += 1;
            check((q - d2).abs() <= BAND, || format!("graph {i}: qec {q} != d2 {d2}"))?;
        }
    }
    Ok(format!("200 graphs (n <= 30), {regular} transmission regular"))
}

/// 9. Conference arithmetic.
fn conference_arithmetic() -> Outcome {
    for n in [5i64, 9, 13, 17, 25, 29] {
        let p = SrgParams::new(n, (n - 1) / 2, (n - 5) / 4, (n - 1) / 4);
        let rep = validate_params(p);
        let feasible_conf = rep.is_feasible() && rep.is_conference;
        check(feasible_conf == (n % 4 == 1), || format!("{p}: {rep:?}"))?;
        let q = srg::qec_closed_form(p).map_err(|e| e.to_string())?.qec;
        let want = ((n as f64).sqrt() - 3.0) / 2.0;
        check((q - want).abs() <= EXACT_TOL, || format!("{p}: QEC {q} vs {want}"))?;
    }
    for q in [5usize, 13, 17, 29] {
        let g = generators::paley(q).map_err(|e| e.to_string())?;
        let numeric = qec_numeric(&g).map_err(|e| e.to_string())?.report.qec;
        let want = ((q as f64).sqrt() - 3.0) / 2.0;
        check((numeric - want).abs() <= CROSS_TOL, || format!("paley({q}): {numeric} vs {want}"))?;
    }
    Ok("n in {5,9,13,17,25,29} feasible-conference, QEC = (sqrt(n)-3)/2; paley(5,13,17,29) confirmed".into())
}

fn main() -> ExitCode {
    let t0 = Instant::now();
    let scan = enumerate_feasible(2000);
    let scan_time = t0.elapsed();

    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "named-table reproduction", named_table_reproduction()),
        (2, "closed form vs numeric", closed_form_vs_numeric()),
        (3, "sign law", match &scan {
            Ok(rows) => sign_law(rows, scan_time),
            Err(e) => Err(e.to_string()),
        }),
        (4, "QE-class equivalence", match &scan {
            Ok(rows) => qe_class_equivalence(rows),
            Err(e) => Err(e.to_string()),
        }),
        (5, "distance-spectrum structure", distance_spectrum_structure()),
        (6, "matrix identities", matrix_identities()),
        (7, "Schoenberg round-trip", schoenberg_round_trip()),
        (8, "general-graph properties", general_graph_properties()),
        (9, "conference arithmetic", conference_arithmetic()),
    ];

    let mut failed = 0;
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] {id}. {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id}. {name}: {why}");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", results.len() - failed, results.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
