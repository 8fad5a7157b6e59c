//! Run reports. The JSON is the single record of a run: the exit code and
//! the printed summary are both read off it.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use aeclab_core::{Certificate, CertificateKind, Graph};
use serde::Serialize;
use serde_json::Value;

use crate::dsl::CheckOutcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Mismatch,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::InputError => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Corpus {
    pub source: String,
    pub counts_by_order: BTreeMap<usize, usize>,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    pub fn new(source: &str, graphs: Vec<Graph>) -> Self {
        let mut counts_by_order = BTreeMap::new();
        for g in &graphs {
            *counts_by_order.entry(g.order()).or_insert(0) += 1;
        }
        Corpus {
            source: source.to_string(),
            counts_by_order,
            graphs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub config: BTreeMap<String, String>,
    /// Certificate kind every certificate must have, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<CertificateKind>,
    pub status: Status,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<Corpus>,
}

impl Report {
    pub fn new(command: &str, config: BTreeMap<String, String>) -> Self {
        Report {
            command: command.to_string(),
            config,
            expected: None,
            status: Status::Ok,
            exit_code: 0,
            error: None,
            checks: Vec::new(),
            certificates: Vec::new(),
            corpus: None,
        }
    }

    pub fn input_error(command: &str, config: BTreeMap<String, String>, message: String) -> Self {
        let mut r = Report::new(command, config);
        r.error = Some(message);
        r.settle();
        r
    }

    /// Sets the status from the content: an error is an input error, and
    /// otherwise every check must hold and every certificate must have the
    /// expected kind.
    pub fn settle(&mut self) {
        self.status = if self.error.is_some() {
            Status::InputError
        } else if self.checks.iter().all(|c| c.holds())
            && self
                .expected
                .is_none_or(|k| self.certificates.iter().all(|c| c.kind == k))
        {
            Status::Ok
        } else {
            Status::Mismatch
        };
        self.exit_code = self.status.exit_code();
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Human-readable lines computed from a report's JSON text.
pub fn summarize(json: &str) -> String {
    let v: Value = match serde_json::from_str(json) {
        Ok(v) => v,
        Err(e) => return format!("unreadable report: {}\n", e),
    };
    let text = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let mut out = String::new();
    out.push_str(&format!(
        "{}: {} (exit {})\n",
        text(&v["command"]),
        text(&v["status"]),
        text(&v["exit_code"])
    ));
    if let Some(e) = v.get("error") {
        out.push_str(&format!("error: {}\n", text(e)));
    }
    if let Some(k) = v.get("expected") {
        out.push_str(&format!("expected: {}\n", text(k)));
    }
    for c in v["checks"].as_array().into_iter().flatten() {
        let ok = c["expected"] == c["actual"];
        out.push_str(&format!(
            "{} {}\n",
            if ok { "ok  " } else { "FAIL" },
            text(&c["check"])
        ));
    }
    let certs = v["certificates"].as_array().map_or(&[][..], |a| a.as_slice());
    for (i, c) in certs.iter().enumerate() {
        let mut line = format!("certificate {}: {}", i, text(&c["kind"]));
        if let Some(w) = c.get("witness") {
            line.push_str(&format!(", witness {}", text(&w["type"])));
        }
        if let Some(x) = c.get("exhaustion") {
            line.push_str(&format!(
                ", bound {}, {} explored, {} pruned",
                text(&x["bound"]),
                text(&x["explored"]),
                text(&x["pruned"])
            ));
        }
        out.push_str(&line);
        out.push('\n');
        // Long sweeps list notes only where a certificate misses its kind.
        if certs.len() > 1 && v.get("expected").is_none_or(|k| *k == c["kind"]) {
            continue;
        }
        for n in c["notes"].as_array().into_iter().flatten() {
            out.push_str(&format!("  {}\n", text(n)));
        }
    }
    if let Some(c) = v.get("corpus") {
        let counts: Vec<String> = c["counts_by_order"]
            .as_object()
            .into_iter()
            .flatten()
            .map(|(k, n)| format!("{}:{}", k, n))
            .collect();
        out.push_str(&format!(
            "corpus {}: {} graphs ({})\n",
            text(&c["source"]),
            c["graphs"].as_array().map_or(0, |a| a.len()),
            counts.join(" ")
        ));
    }
    out
}

/// Writes `data` to a sibling temporary file and renames it over `path`.
pub fn write_atomic(path: &Path, data: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let file = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "report path has no file name"))?;
    let tmp = dir.join(format!(".{}.{}.tmp", file.to_string_lossy(), std::process::id()));
    fs::write(&tmp, data)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}
