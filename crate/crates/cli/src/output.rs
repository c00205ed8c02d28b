use std::fmt::Display;

use matchlab::{Edge, KGraph};

/// Collected `key=value` results, printed as porcelain lines or as an
/// aligned two-column table.
#[derive(Default)]
pub struct Report {
    rows: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn kv(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    pub fn render(&self, porcelain: bool) -> String {
        let mut out = String::new();
        if porcelain {
            for (k, v) in &self.rows {
                out += &format!("{k}={v}\n");
            }
        } else {
            let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &self.rows {
                out += &format!("{k:<width$}  {v}\n");
            }
        }
        out
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn edge_list(edges: &[Edge]) -> String {
    if edges.is_empty() {
        return "none".into();
    }
    edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

pub fn vertex_list(vs: &[usize]) -> String {
    if vs.is_empty() {
        return "none".into();
    }
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn graph_summary(report: &mut Report, f: &KGraph) {
    report.kv("n", f.n()).kv("k", f.k()).kv("edges", f.len());
}
