use std::fmt::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One result document.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub ty: Option<String>,
    pub params: Map<String, Value>,
    pub result: Value,
    pub elapsed_ms: u64,
    pub cache_hit: bool,
    /// False when a check reported a failure.
    pub passed: bool,
}

pub const BELL_COLUMNS: [&str; 6] =
    ["type", "group_order", "bell_parabolic", "bell_closed", "bell_full", "algebra_rank"];

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "type": self.ty,
            "params": self.params,
            "result": self.result,
            "elapsed_ms": self.elapsed_ms,
            "cache_hit": self.cache_hit,
        })
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Flattens nested objects and arrays into dotted keys.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&key(k), x, out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| flatten(&key(&i.to_string()), x, out)),
        other => out.push((prefix.to_string(), scalar_text(other))),
    }
}

fn bell_row(r: &Report) -> Vec<String> {
    BELL_COLUMNS
        .iter()
        .map(|c| if *c == "type" { r.ty.clone().unwrap_or_default() } else { scalar_text(&r.result[*c]) })
        .collect()
}

pub fn render(reports: &[Report], format: Format) -> String {
    let mut out = String::new();
    let all_bell = reports.iter().all(|r| r.command == "bell");
    match format {
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", r.to_json()).unwrap();
            }
        }
        Format::Csv if all_bell => {
            writeln!(out, "{}", BELL_COLUMNS.join(",")).unwrap();
            for r in reports {
                let row: Vec<String> = bell_row(r).iter().map(|s| csv_field(s)).collect();
                writeln!(out, "{}", row.join(",")).unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "command,type,key,value").unwrap();
            for r in reports {
                let mut rows = Vec::new();
                flatten("", &r.result, &mut rows);
                for (k, v) in rows {
                    let ty = r.ty.clone().unwrap_or_default();
                    writeln!(out, "{},{},{},{}", r.command, csv_field(&ty), csv_field(&k), csv_field(&v)).unwrap();
                }
            }
        }
        Format::Text if all_bell => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| bell_row(r).into_iter().map(|s| if s.is_empty() { "-".into() } else { s }).collect())
                .collect();
            let widths: Vec<usize> = (0..BELL_COLUMNS.len())
                .map(|i| rows.iter().map(|r| r[i].len()).chain([BELL_COLUMNS[i].len()]).max().unwrap())
                .collect();
            let line = |cells: &[String]| -> String {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                padded.join("  ")
            };
            let header: Vec<String> = BELL_COLUMNS.iter().map(|s| s.to_string()).collect();
            writeln!(out, "{}", line(&header)).unwrap();
            for r in &rows {
                writeln!(out, "{}", line(r)).unwrap();
            }
        }
        Format::Text => {
            for r in reports {
                match &r.ty {
                    Some(t) => writeln!(out, "{} {t}", r.command).unwrap(),
                    None => writeln!(out, "{}", r.command).unwrap(),
                }
                let mut rows = Vec::new();
                flatten("", &r.result, &mut rows);
                for (k, v) in rows {
                    writeln!(out, "  {k}: {v}").unwrap();
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bell(ty: &str, closed: Value) -> Report {
        Report {
            command: "bell",
            ty: Some(ty.into()),
            params: Map::new(),
            result: json!({"group_order": 12, "bell_parabolic": 8, "bell_closed": closed, "bell_full": 13, "algebra_rank": 156}),
            elapsed_ms: 0,
            cache_hit: false,
            passed: true,
        }
    }

    #[test]
    fn json_keys_are_sorted() {
        let text = render(&[bell("G2", json!(12))], Format::Json);
        let order: Vec<usize> = ["cache_hit", "command", "elapsed_ms", "params", "result", "type"]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]), "{text}");
    }

    #[test]
    fn bell_csv() {
        let text = render(&[bell("G2", json!(12)), bell("H3", Value::Null)], Format::Csv);
        assert_eq!(
            text,
            "type,group_order,bell_parabolic,bell_closed,bell_full,algebra_rank\nG2,12,8,12,13,156\nH3,12,8,,13,156\n"
        );
    }

    #[test]
    fn flattening() {
        let mut rows = Vec::new();
        flatten("", &json!({"a": {"b": [1, true]}, "c": "x,y"}), &mut rows);
        assert_eq!(
            rows,
            vec![("a.b.0".into(), "1".into()), ("a.b.1".into(), "true".into()), ("c".into(), "x,y".into())]
        );
        assert_eq!(csv_field("x,y"), "\"x,y\"");
    }
}
