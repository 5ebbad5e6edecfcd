//! Suite runs tabulated against the published MOFA numbers.

use serde::Serialize;

use crate::experiment::Summary;

/// Published MOFA values: D_g at n=50, t=500, and the front error after
/// 1000 and 2500 iterations.
pub struct Literature {
    pub problem: &'static str,
    pub dg_500: f64,
    pub ef_1000: f64,
    pub ef_2500: f64,
}

pub const LITERATURE: [Literature; 5] = [
    Literature { problem: "sch", dg_500: 4.55e-6, ef_1000: 5.5e-9, ef_2500: 4.0e-22 },
    Literature { problem: "zdt1", dg_500: 1.90e-4, ef_1000: 2.3e-6, ef_2500: 5.4e-19 },
    Literature { problem: "zdt2", dg_500: 1.52e-4, ef_1000: 8.9e-6, ef_2500: 1.7e-14 },
    Literature { problem: "zdt3", dg_500: 1.97e-4, ef_1000: 3.7e-5, ef_2500: 2.5e-11 },
    Literature { problem: "lz", dg_500: 8.70e-4, ef_1000: 2.0e-6, ef_2500: 7.7e-12 },
];

pub fn literature(problem: &str) -> Option<&'static Literature> {
    LITERATURE.iter().find(|l| l.problem == problem)
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BenchRow {
    pub problem: String,
    pub n: usize,
    pub iters: usize,
    pub runs: usize,
    pub dg_median: Option<f64>,
    pub dg_best: Option<f64>,
    pub dg_500_median: Option<f64>,
    pub dg_500_best: Option<f64>,
    pub ef_1000_median: Option<f64>,
    pub ef_2500_median: Option<f64>,
    pub literature_dg_500: Option<f64>,
    pub literature_ef_1000: Option<f64>,
    pub literature_ef_2500: Option<f64>,
    pub wall_seconds: Option<f64>,
}

impl BenchRow {
    pub fn new(s: &Summary) -> Self {
        let lit = literature(&s.problem);
        Self {
            problem: s.problem.clone(),
            n: s.n,
            iters: s.iters,
            runs: s.runs,
            dg_median: s.dg_median,
            dg_best: s.dg_best,
            dg_500_median: s.dg_500_median,
            dg_500_best: s.dg_500_best,
            ef_1000_median: s.ef_1000_median,
            ef_2500_median: s.ef_2500_median,
            literature_dg_500: lit.map(|l| l.dg_500),
            literature_ef_1000: lit.map(|l| l.ef_1000),
            literature_ef_2500: lit.map(|l| l.ef_2500),
            wall_seconds: s.wall_seconds,
        }
    }
}

fn short(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.2e}")).unwrap_or_else(|| "-".into())
}

fn exact(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

const COLUMNS: [&str; 10] = [
    "problem",
    "dg_median",
    "dg_best",
    "dg_500_median",
    "lit_dg_500",
    "ef_1000_median",
    "lit_ef_1000",
    "ef_2500_median",
    "lit_ef_2500",
    "runs",
];

fn cells(r: &BenchRow, cell: fn(Option<f64>) -> String) -> [String; 10] {
    [
        r.problem.clone(),
        cell(r.dg_median),
        cell(r.dg_best),
        cell(r.dg_500_median),
        cell(r.literature_dg_500),
        cell(r.ef_1000_median),
        cell(r.literature_ef_1000),
        cell(r.ef_2500_median),
        cell(r.literature_ef_2500),
        r.runs.to_string(),
    ]
}

/// Aligned plain-text table; `lit_*` columns are the published values.
pub fn render_table(rows: &[BenchRow]) -> String {
    let body: Vec<[String; 10]> = rows.iter().map(|r| cells(r, short)).collect();
    let widths: Vec<usize> = (0..COLUMNS.len())
        .map(|c| body.iter().map(|r| r[c].len()).chain([COLUMNS[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields.iter().zip(&widths).map(|(f, &w)| format!("{f:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(COLUMNS.to_vec());
    for r in &body {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// The same table as comma-separated values.
pub fn render_csv(rows: &[BenchRow]) -> String {
    let mut out = COLUMNS.join(",") + "\n";
    for r in rows {
        out.push_str(&cells(r, exact).join(","));
        out.push('\n');
    }
    out
}
