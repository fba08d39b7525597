use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::BettiTable;

/// JSON shape of a table: `{"char": c, "entries": [[i, j, value], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub entries: Vec<[u64; 3]>,
}

impl From<&BettiTable> for BettiJson {
    fn from(t: &BettiTable) -> Self {
        BettiJson {
            characteristic: t.characteristic().value(),
            entries: t.entries().map(|(i, j, v)| [i as u64, j, v]).collect(),
        }
    }
}

impl BettiTable {
    /// Macaulay2-style diagram: columns are `i`, rows are `j - i`, zeros
    /// print as `.`.
    pub fn to_diagram(&self) -> String {
        let cols = self
            .max_index()
            .into_iter()
            .chain(self.projective_dimension())
            .min()
            .or(self.projective_dimension())
            .map_or(0, |c| c + 1);
        if cols == 0 {
            return "total:\n".to_string();
        }
        let shifts: Vec<u64> = self.entries().map(|(i, j, _)| j - i as u64).collect();
        let (lo, hi) = (
            *shifts.iter().min().unwrap_or(&0),
            *shifts.iter().max().unwrap_or(&0),
        );

        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((String::new(), (0..cols).map(|i| i.to_string()).collect()));
        grid.push((
            "total:".into(),
            (0..cols).map(|i| self.total(i).to_string()).collect(),
        ));
        for r in lo..=hi {
            let cells = (0..cols)
                .map(|i| match self.get(i, r + i as u64) {
                    0 => ".".to_string(),
                    v => v.to_string(),
                })
                .collect();
            grid.push((format!("{r}:"), cells));
        }

        let label_width = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols)
            .map(|c| {
                grid.iter()
                    .map(|(_, cells)| cells[c].len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        for (label, cells) in &grid {
            let mut line = format!("{label:>label_width$}");
            for (cell, w) in cells.iter().zip(&widths) {
                let _ = write!(line, " {cell:>w$}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&BettiJson::from(self)).expect("table serializes")
    }

    /// `i,j,value` with a header row and LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for (i, j, v) in self.entries() {
            let _ = writeln!(out, "{i},{j},{v}");
        }
        out
    }
}
