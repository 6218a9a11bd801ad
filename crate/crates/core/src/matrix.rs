//! Square transition matrices addressed by label.

use std::collections::HashMap;
use std::fmt::{self, Display};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::partition::Partition;
use crate::rational::{to_json_pair, to_latex, to_plain, Rational};
use crate::types::SplitType;

/// Something that can index rows and columns of a transition matrix.
pub trait MatrixLabel: Clone + Ord + Display + Serialize + std::hash::Hash {
    fn latex(&self) -> String;
}

impl MatrixLabel for Partition {
    fn latex(&self) -> String {
        if self.is_empty() {
            return "\\emptyset".into();
        }
        let sep = if self.parts().iter().any(|&p| p >= 10) {
            ","
        } else {
            ""
        };
        let parts: Vec<String> = self.parts().iter().map(usize::to_string).collect();
        format!("({})", parts.join(sep))
    }
}

impl MatrixLabel for SplitType {
    fn latex(&self) -> String {
        self.latex_label()
    }
}

/// `M(F,G)`: column `σ` holds the coefficients of `F_σ` in the basis `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix<L> {
    weight: usize,
    labels: Vec<L>,
    entries: RatMatrix,
}

pub type ClassicalMatrix = TransitionMatrix<Partition>;
pub type PolyMatrix = TransitionMatrix<SplitType>;

impl<L: MatrixLabel> TransitionMatrix<L> {
    pub fn new(weight: usize, labels: Vec<L>, entries: RatMatrix) -> Self {
        assert_eq!(entries.rows(), labels.len());
        assert_eq!(entries.cols(), labels.len());
        TransitionMatrix {
            weight,
            labels,
            entries,
        }
    }

    pub fn identity(weight: usize, labels: Vec<L>) -> Self {
        let n = labels.len();
        Self::new(weight, labels, RatMatrix::identity(n))
    }

    /// Builds the matrix from sparse columns, one per label.
    pub fn from_columns<I>(weight: usize, labels: Vec<L>, columns: I) -> Self
    where
        I: IntoIterator<Item = Vec<(L, Rational)>>,
    {
        let index: HashMap<&L, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut m = RatMatrix::zeros(labels.len(), labels.len());
        for (j, col) in columns.into_iter().enumerate() {
            for (l, v) in col {
                let i = *index
                    .get(&l)
                    .unwrap_or_else(|| panic!("label {l} outside the matrix"));
                m[(i, j)] += v;
            }
        }
        Self::new(weight, labels, m)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Entry at `(row, col)` by label.
    pub fn get(&self, row: &L, col: &L) -> Option<&Rational> {
        Some(&self.entries[(self.index_of(row)?, self.index_of(col)?)])
    }

    /// Nonzero entries of one column.
    pub fn column(&self, col: &L) -> Option<Vec<(L, Rational)>> {
        let j = self.index_of(col)?;
        Some(
            self.labels
                .iter()
                .enumerate()
                .filter(|(i, _)| !num_traits::Zero::is_zero(&self.entries[(*i, j)]))
                .map(|(i, l)| (l.clone(), self.entries[(i, j)].clone()))
                .collect(),
        )
    }

    /// `M(F,K) = M(G,K)·M(F,G)` with `self = M(F,G)` and `next = M(G,K)`.
    pub fn then(&self, next: &Self) -> Result<Self> {
        if self.labels != next.labels {
            return Err(Error::WeightMismatch(format!(
                "label lists differ (weights {} and {})",
                self.weight, next.weight
            )));
        }
        Ok(Self::new(
            self.weight,
            self.labels.clone(),
            next.entries.mul(&self.entries),
        ))
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self::new(
            self.weight,
            self.labels.clone(),
            self.entries.inverse()?,
        ))
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_identity()
    }

    /// Same matrix with rows and columns permuted into `order`.
    pub fn reorder(&self, order: &[L]) -> Result<Self> {
        let mut sorted_a = self.labels.clone();
        let mut sorted_b = order.to_vec();
        sorted_a.sort();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return Err(Error::Unsupported(
                "order must list every label exactly once".into(),
            ));
        }
        let pos: Vec<usize> = order.iter().map(|l| self.index_of(l).unwrap()).collect();
        let mut m = RatMatrix::zeros(pos.len(), pos.len());
        for (i, &pi) in pos.iter().enumerate() {
            for (j, &pj) in pos.iter().enumerate() {
                m[(i, j)] = self.entries[(pi, pj)].clone();
            }
        }
        Ok(Self::new(self.weight, order.to_vec(), m))
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = (0..self.size())
            .flat_map(|i| (0..self.size()).map(move |j| (i, j)))
            .map(|(i, j)| json!(to_json_pair(&self.entries[(i, j)])))
            .collect();
        json!({
            "weight": self.weight,
            "order": self.labels,
            "entries": entries,
        })
    }

    pub fn to_csv(&self) -> String {
        let cell = |s: String| {
            if s.contains(',') || s.contains('"') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s
            }
        };
        let mut out = String::new();
        let header: Vec<String> = std::iter::once(String::new())
            .chain(self.labels.iter().map(|l| cell(l.to_string())))
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for (i, l) in self.labels.iter().enumerate() {
            let row: Vec<String> = std::iter::once(cell(l.to_string()))
                .chain(self.entries.row(i).iter().map(to_plain))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Bordered matrix with labels on the first row and column.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\bbmatrix{\n~");
        for l in &self.labels {
            out.push_str(" & ");
            out.push_str(&l.latex());
        }
        out.push_str(" \\cr\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&l.latex());
            for v in self.entries.row(i) {
                out.push_str(" & ");
                out.push_str(&to_latex(v));
            }
            out.push_str(" \\cr\n");
        }
        out.push_str("}\n");
        out
    }

    /// Aligned plain text table.
    pub fn to_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = vec![std::iter::once(String::new())
            .chain(self.labels.iter().map(|l| l.to_string()))
            .collect()];
        for (i, l) in self.labels.iter().enumerate() {
            grid.push(
                std::iter::once(l.to_string())
                    .chain(self.entries.row(i).iter().map(to_plain))
                    .collect(),
            );
        }
        let cols = grid[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in grid {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}", w = w))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl<L: MatrixLabel> fmt::Display for TransitionMatrix<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::types::{enumerate_types, ty};

    fn sample() -> PolyMatrix {
        let labels = enumerate_types(2);
        let cols = vec![
            vec![(labels[0].clone(), int(1))],
            vec![(labels[0].clone(), int(1)), (labels[1].clone(), int(-1))],
            vec![(labels[2].clone(), int(2))],
        ];
        PolyMatrix::from_columns(2, labels, cols)
    }

    #[test]
    fn lookup_by_label() {
        let m = sample();
        assert_eq!(m.get(&ty("1^2"), &ty("1^{1,1}")), Some(&int(1)));
        assert_eq!(m.get(&ty("1^{1,1}"), &ty("1^{1,1}")), Some(&int(-1)));
        assert_eq!(m.get(&ty("2^1"), &ty("2^1")), Some(&int(2)));
        assert_eq!(m.get(&ty("3^1"), &ty("2^1")), None);
    }

    #[test]
    fn inverse_and_reorder() {
        let m = sample();
        let inv = m.inverse().unwrap();
        assert!(m.then(&inv).unwrap().is_identity());
        let order: Vec<_> = m.labels().iter().rev().cloned().collect();
        let r = m.reorder(&order).unwrap();
        assert_eq!(r.get(&ty("1^{1,1}"), &ty("1^{1,1}")), Some(&int(-1)));
        assert_eq!(r.labels()[0], ty("2^1"));
        assert!(m.reorder(&order[..2]).is_err());
    }

    #[test]
    fn renderers() {
        let m = sample();
        let tex = m.to_latex();
        assert!(tex.starts_with("\\bbmatrix{\n~ & 1^{2} & 1^{11} & 2^{1} \\cr\n"));
        assert!(tex.contains("1^{11} & 0 & -1 & 0 \\cr"));
        let csv = m.to_csv();
        assert_eq!(csv.lines().next().unwrap(), ",1^2,\"1^{1,1}\",2^1");
        let j = m.to_json();
        assert_eq!(j["weight"], 2);
        assert_eq!(j["order"][1], json!([[1, 1], [1, 1]]));
        assert_eq!(j["entries"][4], json!([-1, 1]));
    }
}
