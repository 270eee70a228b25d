//! Experiment records: one JSON object per line, or an aligned table.

use crate::spec::NamedGraph;
use grundy_core::graph6::to_graph6;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    /// Every requested number agrees with every other.
    Tight,
    /// Bounds differ but the exact value lies between them, or the witness
    /// falls short of the exact value.
    Gap,
    /// The exact value lies outside a prediction.
    Violation,
    /// The search cap refused the exact computation.
    CapRefused,
    /// Nothing was solved, so nothing could be compared.
    Unsolved,
    Equality,
    Counterexample,
    Skipped,
    Summary,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Tight => "tight",
            Status::Gap => "gap",
            Status::Violation => "violation",
            Status::CapRefused => "cap-refused",
            Status::Unsolved => "unsolved",
            Status::Equality => "equality",
            Status::Counterexample => "counterexample",
            Status::Skipped => "skipped",
            Status::Summary => "summary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Input {
    pub role: &'static str,
    pub spec: String,
    /// Vertex count, or ground-set size for a hypergraph.
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

impl Input {
    pub fn new(role: &'static str, g: &NamedGraph) -> Input {
        Input {
            role,
            spec: g.spec.to_string(),
            n: g.graph.n(),
            graph6: Some(to_graph6(&g.graph)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicted {
    pub lower: u32,
    pub upper: u32,
    pub lower_source: String,
    pub upper_source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub source: String,
    pub length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    /// Product vertices as `[g, h]` coordinate pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<[usize; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCheck {
    pub first: Vec<[usize; 2]>,
    pub second: Vec<[usize; 2]>,
    /// `[variant, whole, first part, second part]` rows.
    pub values: Vec<(String, u32, u32, u32)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub pairs: usize,
    pub equalities: usize,
    pub violations: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<Input>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Exact value from the solver.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u32>,
    /// Exact factor values, for conjecture sweeps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<Predicted>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    /// Text produced by the command (a hypergraph or a graph6 line).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Record {
    pub fn new(command: &'static str) -> Record {
        Record {
            command,
            inputs: Vec::new(),
            kind: None,
            variant: None,
            n: None,
            value: None,
            factors: None,
            predicted: None,
            witness: None,
            partition: None,
            summary: None,
            output: None,
            status: Status::Ok,
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    fn cells(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        for input in &self.inputs {
            out.push((input.role, input.spec.clone()));
        }
        let mut push = |name, value: Option<String>| {
            if let Some(v) = value {
                out.push((name, v));
            }
        };
        push("kind", self.kind.clone());
        push("variant", self.variant.clone());
        push("n", self.n.map(|n| n.to_string()));
        push("factors", self.factors.map(|[a, b]| format!("{a}*{b}")));
        push(
            "predicted",
            self.predicted.as_ref().map(|p| {
                if p.lower == p.upper {
                    p.lower.to_string()
                } else {
                    format!("[{},{}]", p.lower, p.upper)
                }
            }),
        );
        push("exact", self.value.map(|v| v.to_string()));
        push("witness", self.witness.as_ref().map(|w| w.length.to_string()));
        push(
            "summary",
            self.summary.map(|s| {
                format!(
                    "{} pairs, {} equalities, {} violations, {} skipped",
                    s.pairs, s.equalities, s.violations, s.skipped
                )
            }),
        );
        push("ms", self.elapsed_ms.map(|t| format!("{t:.1}")));
        out.push(("status", self.status.name().to_string()));
        if !self.notes.is_empty() {
            out.push(("notes", self.notes.join("; ")));
        }
        out
    }
}

/// Renders records as aligned columns, starting a new header whenever the
/// set of columns changes.
pub fn render_table(records: &[Record]) -> String {
    let mut out = String::new();
    let rows: Vec<Vec<(&'static str, String)>> = records.iter().map(Record::cells).collect();
    let mut start = 0;
    while start < rows.len() {
        let header: Vec<&str> = rows[start].iter().map(|c| c.0).collect();
        let mut end = start + 1;
        while end < rows.len() && rows[end].iter().map(|c| c.0).eq(header.iter().copied()) {
            end += 1;
        }
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &rows[start..end] {
            for (w, (_, v)) in widths.iter_mut().zip(row) {
                *w = (*w).max(v.chars().count());
            }
        }
        if start > 0 {
            out.push('\n');
        }
        let line = |cells: Vec<&str>| -> String {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(header.clone())).expect("write to string");
        for row in &rows[start..end] {
            writeln!(out, "{}", line(row.iter().map(|c| c.1.as_str()).collect())).expect("write to string");
        }
        start = end;
    }
    out
}
