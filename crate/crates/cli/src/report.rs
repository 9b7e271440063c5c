//! Report assembly and serialization: json-lines, csv and human formats.
//! Bodies are byte-deterministic for equal configs; only the header
//! timestamp varies between runs.

use crate::config::{OutputFormat, RunConfig};
use anyhow::Result;
use floorsum_core::registry::{params_string, Status, ValueRepr, Verdict};
use serde_json::json;
use std::fmt::Write as _;

pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config_digest: String,
    pub timestamp: u64,
    pub rows: Vec<Verdict>,
}

pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub inconclusive: usize,
}

impl Report {
    pub fn new(config: &RunConfig, mut rows: Vec<Verdict>) -> Report {
        rows.sort_by_key(|v| v.sort_key());
        Report {
            tool: "floorsum",
            version: env!("CARGO_PKG_VERSION"),
            config_digest: config.digest(),
            timestamp: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            rows,
        }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            confirmed: 0,
            refuted: 0,
            inconclusive: 0,
        };
        for row in &self.rows {
            match row.status {
                Status::Confirmed => s.confirmed += 1,
                Status::Refuted => s.refuted += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }

    /// Exit code contract: 0 clean, 1 any inconclusive, 2 any refuted.
    pub fn exit_code(&self) -> i32 {
        let s = self.summary();
        if s.refuted > 0 {
            2
        } else if s.inconclusive > 0 {
            1
        } else {
            0
        }
    }

    pub fn emit(&self, format: &OutputFormat) -> Result<String> {
        match format {
            OutputFormat::JsonLines => self.emit_json_lines(),
            OutputFormat::Csv => self.emit_csv(),
            OutputFormat::Human => self.emit_human(),
        }
    }

    fn emit_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        let header = json!({
            "tool": self.tool,
            "version": self.version,
            "config_digest": self.config_digest,
            "timestamp": self.timestamp,
        });
        writeln!(out, "{header}")?;
        for row in &self.rows {
            let params: serde_json::Map<String, serde_json::Value> = row
                .params
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::Value::String(v.to_string())))
                .collect();
            let line = json!({
                "id": row.id,
                "params": params,
                "status": row.status.as_str(),
                "lhs": value_json(&row.lhs),
                "rhs": value_json(&row.rhs),
                "gap": row.gap,
                "terms_used": row.terms_used,
                "note": row.note,
            });
            writeln!(out, "{line}")?;
        }
        let s = self.summary();
        let trailer = json!({
            "summary": {
                "confirmed": s.confirmed,
                "refuted": s.refuted,
                "inconclusive": s.inconclusive,
                "total": self.rows.len(),
            }
        });
        writeln!(out, "{trailer}")?;
        Ok(out)
    }

    fn emit_csv(&self) -> Result<String> {
        let mut out = String::new();
        writeln!(
            out,
            "id,params,status,lhs_dec,lhs_rad,lhs_exact,rhs_dec,rhs_rad,rhs_exact,gap,terms_used,note"
        )?;
        for row in &self.rows {
            let fields = [
                row.id.clone(),
                params_string(&row.params),
                row.status.as_str().to_string(),
                row.lhs.dec.clone(),
                row.lhs.rad.clone(),
                row.lhs.exact.clone().unwrap_or_default(),
                row.rhs.dec.clone(),
                row.rhs.rad.clone(),
                row.rhs.exact.clone().unwrap_or_default(),
                row.gap.clone(),
                row.terms_used.to_string(),
                row.note.clone().unwrap_or_default(),
            ];
            let line: Vec<String> = fields.iter().map(|f| csv_escape(f)).collect();
            writeln!(out, "{}", line.join(","))?;
        }
        let s = self.summary();
        writeln!(
            out,
            "# summary,confirmed={},refuted={},inconclusive={},total={}",
            s.confirmed,
            s.refuted,
            s.inconclusive,
            self.rows.len()
        )?;
        Ok(out)
    }

    fn emit_human(&self) -> Result<String> {
        let mut out = String::new();
        writeln!(out, "{} {}  digest {}", self.tool, self.version, &self.config_digest[..16])?;
        writeln!(out, "{:<6} {:<34} {:<13} {:>10}  value", "id", "params", "status", "terms")?;
        for row in &self.rows {
            let mut value = row.lhs.dec.clone();
            if value.len() > 24 {
                value.truncate(24);
                value.push('~');
            }
            writeln!(
                out,
                "{:<6} {:<34} {:<13} {:>10}  {}{}",
                row.id,
                truncate(&params_string(&row.params), 34),
                row.status.as_str(),
                row.terms_used,
                value,
                row.note
                    .as_deref()
                    .map(|n| format!("  [{n}]"))
                    .unwrap_or_default()
            )?;
        }
        let s = self.summary();
        writeln!(
            out,
            "total {}: {} confirmed, {} refuted, {} inconclusive",
            self.rows.len(),
            s.confirmed,
            s.refuted,
            s.inconclusive
        )?;
        Ok(out)
    }
}

fn value_json(v: &ValueRepr) -> serde_json::Value {
    if v.dec.is_empty() {
        return serde_json::Value::Null;
    }
    let mut map = serde_json::Map::new();
    map.insert("dec".into(), v.dec.clone().into());
    map.insert("rad".into(), v.rad.clone().into());
    if let Some(exact) = &v.exact {
        map.insert("exact".into(), exact.clone().into());
    }
    serde_json::Value::Object(map)
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn truncate(s: &str, n: usize) -> String {
    if s.len() <= n {
        s.to_string()
    } else {
        let mut t = s[..n - 1].to_string();
        t.push('~');
        t
    }
}

/// Strip the timestamp so equal-config bodies can be compared bytewise.
pub fn body_without_timestamp(report_text: &str, format: &OutputFormat) -> String {
    match format {
        OutputFormat::JsonLines => {
            let mut lines: Vec<String> = report_text.lines().map(str::to_string).collect();
            if let Some(first) = lines.first_mut() {
                if let Ok(mut v) = serde_json::from_str::<serde_json::Value>(first) {
                    if let Some(obj) = v.as_object_mut() {
                        obj.remove("timestamp");
                        *first = v.to_string();
                    }
                }
            }
            lines.join("\n")
        }
        _ => report_text.to_string(),
    }
}
