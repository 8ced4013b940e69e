//! Byte-stable JSON and CSV encodings.

use serde::Serialize;

use crate::document::{CertificateDocument, SweepItem};

pub const CSV_HEADER: [&str; 12] = [
    "curve_id", "p", "k", "q", "m", "t", "regime", "s", "rank", "target_dim", "surjective",
    "verdict",
];

/// Pretty JSON with keys sorted at every level and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<Vec<u8>> {
    // `Value` maps are ordered by key, so a round trip sorts them
    let value = serde_json::to_value(value)?;
    let mut out = serde_json::to_vec_pretty(&value)?;
    out.push(b'\n');
    Ok(out)
}

/// One row per `mu_s` report. Failed sweep runs get a single row with verdict `ERROR`.
pub fn to_csv(items: &[SweepItem]) -> csv::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for item in items {
        match item {
            SweepItem::Certificate(doc) => write_doc(&mut w, doc)?,
            SweepItem::Error(e) => {
                let q = e.p.pow(e.k);
                w.write_record([
                    e.curve_id.clone(),
                    e.p.to_string(),
                    e.k.to_string(),
                    q.to_string(),
                    e.m.to_string(),
                    opt(e.t),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    "ERROR".to_string(),
                ])?;
            }
        }
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

fn write_doc(w: &mut csv::Writer<Vec<u8>>, doc: &CertificateDocument) -> csv::Result<()> {
    for r in &doc.mu_reports {
        w.write_record([
            doc.curve_id.clone(),
            doc.curve.p.to_string(),
            doc.curve.k.to_string(),
            doc.curve.q.to_string(),
            doc.curve.m.to_string(),
            opt(doc.embedding.t),
            doc.embedding.regime.to_string(),
            r.s.to_string(),
            r.rank.to_string(),
            r.target_dim.to_string(),
            r.surjective.to_string(),
            doc.verdict.to_string(),
        ])?;
    }
    Ok(())
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
