//! The expansion-vs-exact comparison table.

use kempner_core::asymptotics::expansion;
use kempner_core::kempner::kempner_sum;
use kempner_core::{Decimal, Result};

use crate::records::OutputRecord;

pub const ROW_LABELS: [&str; 5] = [
    "b log(b)",
    "b log(b) - c1/b",
    "b log(b) - c1/b - c2/b^2",
    "b log(b) - c1/b - c2/b^2 - c3/b^3",
    "K",
];

pub struct TableColumn {
    pub base: u64,
    /// One cell per row of [`ROW_LABELS`].
    pub cells: Vec<Decimal>,
}

pub fn compute_table(bases: &[u64], prec: u32) -> Result<Vec<TableColumn>> {
    bases
        .iter()
        .map(|&b| {
            let mut cells = Vec::with_capacity(5);
            for nterms in 0..=3u8 {
                cells.push(expansion(b, nterms, prec)?);
            }
            cells.push(kempner_sum(b, prec)?.value);
            Ok(TableColumn { base: b, cells })
        })
        .collect()
}

/// Plain ASCII, columns right-aligned, no digit grouping.
pub fn render(columns: &[TableColumn]) -> String {
    let label_width = ROW_LABELS.iter().map(|l| l.len()).max().unwrap_or(0);
    let rendered: Vec<Vec<String>> = columns
        .iter()
        .map(|col| col.cells.iter().map(|c| c.to_string()).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .zip(&rendered)
        .map(|(col, cells)| {
            cells
                .iter()
                .map(String::len)
                .max()
                .unwrap_or(0)
                .max(col.base.to_string().len())
        })
        .collect();

    let mut out = String::new();
    out.push_str(&format!("{:<label_width$}", "b"));
    for (col, width) in columns.iter().zip(&widths) {
        out.push_str(&format!("  {:>width$}", col.base));
    }
    out.push('\n');
    for (row, label) in ROW_LABELS.iter().enumerate() {
        out.push_str(&format!("{label:<label_width$}"));
        for (cells, width) in rendered.iter().zip(&widths) {
            out.push_str(&format!("  {:>width$}", cells[row]));
        }
        out.push('\n');
    }
    out
}

pub fn to_records(columns: &[TableColumn], prec: u32) -> Vec<OutputRecord> {
    columns
        .iter()
        .map(|col| {
            let mut rec = OutputRecord::new("table")
                .input("base", col.base)
                .input("prec", prec)
                .precision(prec);
            for (label, cell) in ROW_LABELS.iter().zip(&col.cells) {
                rec = rec.value(label, cell);
            }
            rec
        })
        .collect()
}
