use std::collections::BTreeSet;
use std::fmt::Write;

use anyhow::Result;
use rectlr::verify::{
    build_product_matrix_with, certify_rank, check_coproduct_counterexample, check_skew_dependence_21,
    check_w0_characterization, eliminate_matrix, EliminationStatus,
};
use rectlr::witness::{theorem_certificates, theorem_witness, word_to_selfcomplementary};
use rectlr::{ComplementaryPair, Error, ExpansionCache, Partition, Rectangle, WitnessCertificate, Word};
use serde_json::{json, Value};

pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
    /// Lines for standard error, printed after the report.
    pub alerts: Vec<String>,
}

impl Report {
    fn new(text: String, json: Value, ok: bool) -> Self {
        Self {
            text,
            json,
            ok,
            alerts: Vec::new(),
        }
    }
}

pub fn expand(lambda: &Partition, mu: &Partition, cache: &ExpansionCache) -> Report {
    let e = cache.get_or_compute(lambda, mu);
    let json = json!({ "lambda": lambda, "mu": mu, "terms": *e });
    Report::new(e.to_string(), json, true)
}

pub fn pairs(rect: &Rectangle) -> Report {
    let pairs = rect.complementary_pairs();
    let theorem: BTreeSet<ComplementaryPair> = rect.theorem_pairs().into_iter().collect();
    let mut text = String::new();
    for q in &pairs {
        let mark = if theorem.contains(q) { " *" } else { "" };
        writeln!(text, "{} {}{mark}", q.lambda, q.lambda_c).unwrap();
    }
    write!(text, "{} pairs in {rect}", pairs.len()).unwrap();
    let json = json!({ "rect": rect, "count": pairs.len(), "pairs": pairs });
    Report::new(text, json, true)
}

fn certificate_line(c: &WitnessCertificate) -> String {
    format!(
        "{} * {} -> {} (coefficient {}, {})",
        c.pair.lambda,
        c.pair.lambda_c,
        c.witness,
        c.coefficient_in_pair,
        c.method.as_str()
    )
}

fn failed(e: Error) -> Result<Report> {
    match e {
        Error::CertificationFailed { .. } => {
            let text = format!("FAILED: {e}");
            let json = json!({ "verified": false, "error": e.to_string() });
            Ok(Report::new(text, json, false))
        }
        other => Err(other.into()),
    }
}

pub fn witness(rect: &Rectangle, word: &Word) -> Result<Report> {
    let sc = word_to_selfcomplementary(word, rect)?;
    let cert = match theorem_witness(sc.representative(), rect) {
        Ok(c) => c,
        Err(e) => return failed(e),
    };
    let mut json = serde_json::to_value(&cert)?;
    json["word"] = json!(word);
    Ok(Report::new(certificate_line(&cert), json, true))
}

pub fn verify_theorem(rect: &Rectangle) -> Result<Report> {
    let certs = match theorem_certificates(rect) {
        Ok(c) => c,
        Err(e) => return failed(e),
    };
    let mut text = String::new();
    for c in &certs {
        writeln!(text, "{}", certificate_line(c)).unwrap();
    }
    write!(text, "{} certificates verified in {rect}", certs.len()).unwrap();
    let json = json!({ "rect": rect, "verified": true, "certificates": certs });
    Ok(Report::new(text, json, true))
}

pub fn eliminate(rect: &Rectangle, require_unit: bool, cache: &ExpansionCache) -> Report {
    let matrix = build_product_matrix_with(rect, cache);
    let trace = eliminate_matrix(&matrix, require_unit);
    let mut text = String::new();
    for round in &trace.rounds {
        writeln!(text, "round {}: {} eliminated", round.i, round.eliminated.len()).unwrap();
        for e in &round.eliminated {
            writeln!(
                text,
                "  {} * {} by {} (coefficient {})",
                e.pair.lambda, e.pair.lambda_c, e.witness, e.coefficient
            )
            .unwrap();
        }
    }
    for q in &trace.leftover {
        writeln!(text, "leftover {} * {}", q.lambda, q.lambda_c).unwrap();
    }
    let status = trace.status();
    let w0 = check_w0_characterization(&trace, rect);
    write!(
        text,
        "status {}: {} rounds, {} of {} products eliminated; first round {} the self-complementary pairs",
        match status {
            EliminationStatus::Empty => "empty",
            EliminationStatus::Stuck => "stuck",
        },
        trace.rounds.len(),
        matrix.row_count() - trace.leftover.len(),
        matrix.row_count(),
        if w0 { "is exactly" } else { "differs from" },
    )
    .unwrap();
    let mut report = Report::new(
        text,
        serde_json::to_value(&trace).unwrap(),
        status == EliminationStatus::Empty,
    );
    if status == EliminationStatus::Stuck {
        report.alerts.push(format!(
            "STUCK: elimination in {rect} left {} products without a witness",
            trace.leftover.len()
        ));
    }
    report
}

pub fn rank(rect: &Rectangle, primes: &[u64], cache: &ExpansionCache) -> Result<Report> {
    let matrix = build_product_matrix_with(rect, cache);
    let report = certify_rank(&matrix, primes)?;
    let how = match report.prime {
        Some(p) => format!("mod {p}"),
        None => "exact".to_string(),
    };
    let verdict = if report.certified { "certified" } else { "DEPENDENT" };
    let text = format!("rank {}/{} {verdict} ({how}) in {rect}", report.rank, report.rows);
    Ok(Report::new(text, serde_json::to_value(&report)?, report.certified))
}

pub fn counterexamples() -> Report {
    let skew = check_skew_dependence_21();
    let coproduct = check_coproduct_counterexample();
    let word = |b: bool| if b { "confirmed" } else { "NOT confirmed" };
    let text = format!(
        "skew dependence s_1 s_21/1 = s_2 s_21/2 + s_11 s_21/11: {}\ncoproduct dependence (s_3 + s_21) s_1 = s_2 (s_2 + s_11): {}",
        word(skew),
        word(coproduct)
    );
    let json = json!({ "skew_dependence": skew, "coproduct_dependence": coproduct });
    Report::new(text, json, skew && coproduct)
}
