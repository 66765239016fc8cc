//! Machine-readable result records.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::linalg::{format_rational, Rational};

/// `{query, value, method, certificate}`; every number is a string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub query: BTreeMap<String, String>,
    pub value: String,
    pub method: String,
    pub certificate: String,
}

impl Record {
    pub fn new(query: &[(&str, String)], value: impl Into<String>, method: impl Into<String>) -> Self {
        Record {
            query: query.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            value: value.into(),
            method: method.into(),
            certificate: "none".into(),
        }
    }

    pub fn rational(query: &[(&str, String)], value: &Rational, method: impl Into<String>) -> Self {
        Self::new(query, format_rational(value), method)
    }

    pub fn certified(mut self, certificate: impl Into<String>) -> Self {
        self.certificate = certificate.into();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_plain(&self) -> String {
        let q: Vec<String> = self.query.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        let mut s = format!("{} {} [{}]", q.join(" "), self.value, self.method);
        if self.certificate != "none" {
            s.push_str(&format!(" ({})", self.certificate));
        }
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One header row naming the query parameters, one row per record. The
/// header is taken from the first record.
pub fn to_csv(records: &[Record]) -> String {
    let Some(first) = records.first() else {
        return String::new();
    };
    let keys: Vec<&String> = first.query.keys().collect();
    let mut out = String::new();
    let mut header: Vec<String> = keys.iter().map(|k| csv_field(k)).collect();
    header.extend(["value", "method", "certificate"].map(String::from));
    out.push_str(&header.join(","));
    out.push('\n');
    for r in records {
        let mut row: Vec<String> = keys
            .iter()
            .map(|k| csv_field(r.query.get(*k).map(String::as_str).unwrap_or("")))
            .collect();
        row.push(csv_field(&r.value));
        row.push(csv_field(&r.method));
        row.push(csv_field(&r.certificate));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
