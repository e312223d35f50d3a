//! Deterministic rendering of distributions, polynomials, and verdict
//! reports. Every number is an exact decimal string; JSON object keys are
//! sorted; identical inputs produce identical bytes.

use std::collections::BTreeMap;

use cornerwalk::enumerate::Distribution;
use cornerwalk::poly::{is_x_plus_1_positive, IntPoly};
use cornerwalk::verify::{Verdict, VerdictReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn flatten_params(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn render_distribution(d: &Distribution, title: &str, format: Format) -> String {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string(d).expect("serializable");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut text = String::from("value,count\n");
            for (value, count) in d.entries() {
                text.push_str(&format!("{value},{count}\n"));
            }
            text
        }
        Format::Pretty => {
            let mut text = format!("{title} ({} walks)\n", d.total());
            for (value, count) in d.entries() {
                text.push_str(&format!("{value:>6}  {count}\n"));
            }
            text
        }
    }
}

pub fn render_poly(p: &IntPoly, format: Format) -> String {
    let shifted = p.to_shifted_basis();
    let positive = is_x_plus_1_positive(p);
    match format {
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert(
                "coeffs".into(),
                serde_json::to_value(p).expect("serializable"),
            );
            map.insert("positive".into(), serde_json::Value::Bool(positive));
            map.insert(
                "shifted".into(),
                serde_json::to_value(&shifted).expect("serializable"),
            );
            let mut text = serde_json::to_string(&serde_json::Value::Object(map)).expect("json");
            text.push('\n');
            text
        }
        Format::Csv => {
            // the Taylor shift preserves the degree, so both columns align
            let mut text = String::from("degree,coefficient,shifted_coefficient\n");
            for i in 0..p.coeffs().len().max(shifted.coeffs().len()) {
                text.push_str(&format!("{i},{},{}\n", p.coeff(i), shifted.coeff(i)));
            }
            text
        }
        Format::Pretty => format!(
            "gf: {p}\ncoefficients: {}\nshifted basis: {}\n(x+1)-positive: {positive}\n",
            p.array_string(),
            shifted.array_string()
        ),
    }
}

/// Key/value output for the bijection subcommands.
pub fn render_fields(fields: &BTreeMap<String, String>, format: Format) -> String {
    match format {
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (k, v) in fields {
                map.insert(k.clone(), serde_json::Value::String(v.clone()));
            }
            let mut text = serde_json::to_string(&serde_json::Value::Object(map)).expect("json");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut text = String::from("field,value\n");
            for (k, v) in fields {
                text.push_str(&format!("{},{}\n", csv_field(k), csv_field(v)));
            }
            text
        }
        Format::Pretty => {
            let mut text = String::new();
            for (k, v) in fields {
                text.push_str(&format!("{k}: {v}\n"));
            }
            text
        }
    }
}

pub fn render_reports(reports: &[VerdictReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string(reports).expect("serializable");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut text = String::from("check,params,expected,observed,verdict,witness\n");
            for r in reports {
                let row = [
                    csv_field(&r.check),
                    csv_field(&flatten_params(&r.params)),
                    csv_field(&r.expected),
                    csv_field(&r.observed),
                    csv_field(r.verdict.as_str()),
                    csv_field(r.witness.as_deref().unwrap_or("")),
                ];
                text.push_str(&row.join(","));
                text.push('\n');
            }
            text
        }
        Format::Pretty => {
            let mut text = String::new();
            let mut confirmed = 0usize;
            let mut counterexamples = 0usize;
            let mut discrepancies = 0usize;
            for r in reports {
                match r.verdict {
                    Verdict::Confirmed => confirmed += 1,
                    Verdict::Counterexample => counterexamples += 1,
                    Verdict::DiscrepancyWithPaper => discrepancies += 1,
                }
                text.push_str(&format!(
                    "[{}] {} {} | expected: {} | observed: {}\n",
                    r.verdict,
                    r.check,
                    flatten_params(&r.params),
                    r.expected,
                    r.observed
                ));
                if let Some(w) = &r.witness {
                    text.push_str(&format!("    witness: {w}\n"));
                }
            }
            text.push_str(&format!(
                "{} reports: {confirmed} confirmed, {counterexamples} counterexamples, {discrepancies} discrepancies\n",
                reports.len()
            ));
            text
        }
    }
}
