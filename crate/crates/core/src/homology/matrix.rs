use std::fmt;

use crate::error::{Error, Result};

/// Sparse integer matrix stored by columns; each column is a list of
/// `(row, value)` with strictly increasing rows and no zero values.
///
/// Entries are `i64`. Boundary matrices only hold `±1`; the Smith normal form
/// escalates to arbitrary precision internally when elimination needs it.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Row-major construction; every row must have `cols` entries.
    pub fn from_dense(rows: usize, cols: usize, data: &[Vec<i64>]) -> Result<Self> {
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::MalformedInput(format!(
                "dense data does not have shape {rows}x{cols}"
            )));
        }
        let columns = (0..cols)
            .map(|c| {
                (0..rows)
                    .filter(|&r| data[r][c] != 0)
                    .map(|r| (r, data[r][c]))
                    .collect()
            })
            .collect();
        Ok(IntegerMatrix {
            rows,
            cols,
            columns,
        })
    }

    /// Caller guarantees sorted rows without zeros.
    pub(crate) fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)
                && c.iter().all(|&(r, v)| r < rows && v != 0)));
        IntegerMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let col = &self.columns[c];
        col.binary_search_by_key(&r, |e| e.0)
            .map_or(0, |i| col[i].1)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                columns[r].push((c, v));
            }
        }
        IntegerMatrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// `self * other`, with overflow reported as a domain error.
    pub fn checked_mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let overflow = || Error::Domain("integer overflow in matrix product".into());
        let mut columns = Vec::with_capacity(other.cols);
        let mut acc = vec![0i64; self.rows];
        let mut touched = Vec::new();
        for col in &other.columns {
            for &(k, b) in col {
                for &(r, a) in &self.columns[k] {
                    if acc[r] == 0 {
                        touched.push(r);
                    }
                    let prod = a.checked_mul(b).ok_or_else(overflow)?;
                    acc[r] = acc[r].checked_add(prod).ok_or_else(overflow)?;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let out: Vec<(usize, i64)> = touched
                .iter()
                .filter(|&&r| acc[r] != 0)
                .map(|&r| (r, acc[r]))
                .collect();
            for &r in &touched {
                acc[r] = 0;
            }
            touched.clear();
            columns.push(out);
        }
        Ok(IntegerMatrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        })
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                writeln!(f, "  {row:?}")?;
            }
        }
        Ok(())
    }
}
