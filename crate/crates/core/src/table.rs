//! Tables behind `forcing-lab table`, as CSV with a header row or as a
//! JSON array of objects.

use std::str::FromStr;

use serde::Serialize;

use crate::constructions;
use crate::linalg::Family;
use crate::solvers::Solver;
use crate::verify::{self, Grid, UnknownId};

pub const TABLE_IDS: [&str; 2] = ["thm3.6", "certificates"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PdRow {
    pub family: &'static str,
    pub t: usize,
    pub n: usize,
    pub hypotheses: bool,
    /// Nullity lower bound `⌈null/Δ⌉`.
    pub lower: usize,
    /// Size of the residue-class set.
    pub upper: usize,
    pub value: usize,
    /// `exact` when the value is pinned, `construction` when it is only
    /// the size of the residue-class set.
    pub marker: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRow {
    pub family: &'static str,
    pub t: usize,
    pub n: usize,
    pub nullity: usize,
    pub construction: usize,
    pub construction_valid: bool,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Table {
    Pd(Vec<PdRow>),
    Certificates(Vec<CertificateRow>),
}

fn t_start(family: Family) -> usize {
    match family {
        Family::Path => 2,
        Family::Cycle => 3,
    }
}

fn families(grid: &Grid) -> Vec<Family> {
    match grid.family {
        Some(f) => vec![f],
        None => vec![Family::Path, Family::Cycle],
    }
}

pub fn pd_rows(grid: &Grid) -> Vec<PdRow> {
    let solver = Solver::new(grid.budget);
    let mut rows = Vec::new();
    for family in families(grid) {
        for t in grid.t.clone().unwrap_or(2..=8) {
            for n in grid.n.clone().unwrap_or(3..=6) {
                if t < t_start(family) || n < 3 {
                    continue;
                }
                let Some(b) = verify::tensor_pd_bracket(family, t, n, solver) else {
                    continue;
                };
                rows.push(PdRow {
                    family: family.name(),
                    t,
                    n,
                    hypotheses: verify::tensor_pd_hypotheses(family, t, n),
                    lower: b.lower,
                    upper: b.upper,
                    value: b.exact.unwrap_or(b.upper),
                    marker: if b.exact.is_some() { "exact" } else { "construction" },
                });
            }
        }
    }
    rows
}

pub fn certificate_rows(grid: &Grid) -> Vec<CertificateRow> {
    let mut rows = Vec::new();
    for family in families(grid) {
        for t in grid.t.clone().unwrap_or(2..=10) {
            for n in grid.n.clone().unwrap_or(3..=8) {
                if t < t_start(family) || n < 3 {
                    continue;
                }
                let Ok(s) = constructions::tensor_complete_sandwich(family, t, n) else {
                    continue;
                };
                let valid = s.construction.verify();
                rows.push(CertificateRow {
                    family: family.name(),
                    t,
                    n,
                    nullity: s.nullity,
                    construction: s.construction.set.len(),
                    construction_valid: valid,
                    equal: s.certified,
                });
            }
        }
    }
    rows
}

pub fn build(id: &str, grid: &Grid) -> Result<Table, UnknownId> {
    match id {
        "thm3.6" => Ok(Table::Pd(pd_rows(grid))),
        "certificates" => Ok(Table::Certificates(certificate_rows(grid))),
        other => Err(UnknownId(other.to_string())),
    }
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Table::Pd(rows), Format::Json) => json(rows),
            (Table::Certificates(rows), Format::Json) => json(rows),
            (Table::Pd(rows), Format::Csv) => {
                let mut out = String::from("family,t,n,hypotheses,lower,upper,value,marker\n");
                for r in rows {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{},{}\n",
                        r.family, r.t, r.n, r.hypotheses, r.lower, r.upper, r.value, r.marker
                    ));
                }
                out
            }
            (Table::Certificates(rows), Format::Csv) => {
                let mut out = String::from("family,t,n,nullity,construction,construction_valid,equal\n");
                for r in rows {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        r.family, r.t, r.n, r.nullity, r.construction, r.construction_valid, r.equal
                    ));
                }
                out
            }
        }
    }
}

fn json<T: Serialize>(rows: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::DEFAULT_BUDGET;

    #[test]
    fn certificate_table_small() {
        let grid = Grid {
            t: Some(2..=5),
            n: Some(3..=4),
            ..Grid::with_budget(DEFAULT_BUDGET)
        };
        let rows = certificate_rows(&grid);
        assert_eq!(rows.len(), 4 * 2 + 3 * 2);
        assert!(rows.iter().all(|r| r.equal));
        let csv = Table::Certificates(rows).render(Format::Csv);
        assert!(csv.starts_with("family,t,n,nullity"));
    }

    #[test]
    fn pd_table_json_parses() {
        let grid = Grid {
            t: Some(2..=4),
            n: Some(3..=3),
            family: Some(Family::Path),
            ..Grid::with_budget(DEFAULT_BUDGET)
        };
        let out = build("thm3.6", &grid).unwrap().render(Format::Json);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0]["value"], 1);
        assert_eq!(rows[0]["marker"], "exact");
    }
}
