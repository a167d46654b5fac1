//! Exact integer linear algebra: fraction-free elimination and Smith form.

#![allow(clippy::needless_range_loop)]

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("integer overflow during elimination")]
    Overflow,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix rows")]
    Ragged,
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds from rows; `cols` is needed to describe matrices with no rows.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Ragged);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn wide(&self) -> Vec<Vec<i128>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| v as i128).collect())
            .collect()
    }

    /// Rank over the rationals (Bareiss elimination).
    pub fn rank(&self) -> Result<usize, LinalgError> {
        Ok(bareiss(self.wide(), self.cols)?.0)
    }

    pub fn determinant(&self) -> Result<i128, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss(self.wide(), self.cols)?.1)
    }

    /// Determinants of the top-left `k x k` submatrices, `k = 1..=n`.
    pub fn leading_principal_minors(&self) -> Result<Vec<i128>, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        leading_minors_of(self.wide())
    }

    /// Nonzero Smith invariant factors `d_1 | d_2 | ...`, all positive.
    pub fn smith_divisors(&self) -> Result<Vec<i128>, LinalgError> {
        smith(self.wide(), self.cols)
    }
}

fn mul_sub_div(a: i128, b: i128, c: i128, d: i128, p: i128) -> Result<i128, LinalgError> {
    let x = a.checked_mul(b).ok_or(LinalgError::Overflow)?;
    let y = c.checked_mul(d).ok_or(LinalgError::Overflow)?;
    Ok(x.checked_sub(y).ok_or(LinalgError::Overflow)? / p)
}

/// Fraction-free elimination with row pivoting; returns the rank and, for a
/// square input, its determinant.
fn bareiss(mut m: Vec<Vec<i128>>, cols: usize) -> Result<(usize, i128), LinalgError> {
    let rows = m.len();
    let mut prev = 1i128;
    let mut sign = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if p != r {
            m.swap(r, p);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = mul_sub_div(m[r][c], m[i][j], m[i][c], m[r][j], prev)?;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    let det = if rows == cols && r == rows {
        sign * prev
    } else {
        0
    };
    Ok((r, det))
}

fn leading_minors_of(m: Vec<Vec<i128>>) -> Result<Vec<i128>, LinalgError> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<i128>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            Ok(bareiss(sub, k)?.1)
        })
        .collect()
}

fn smith(mut m: Vec<Vec<i128>>, cols: usize) -> Result<Vec<i128>, LinalgError> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(a, b)| m[i][j].abs() < m[a][b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut done = true;
        let p = m[t][t];
        for i in t + 1..rows {
            let q = m[i][t] / p;
            if q != 0 {
                for j in t..cols {
                    let d = q.checked_mul(m[t][j]).ok_or(LinalgError::Overflow)?;
                    m[i][j] = m[i][j].checked_sub(d).ok_or(LinalgError::Overflow)?;
                }
            }
            done &= m[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / p;
            if q != 0 {
                for row in m.iter_mut().skip(t) {
                    let d = q.checked_mul(row[t]).ok_or(LinalgError::Overflow)?;
                    row[j] = row[j].checked_sub(d).ok_or(LinalgError::Overflow)?;
                }
            }
            done &= m[t][j] == 0;
        }
        if !done {
            continue;
        }
        // Enforce divisibility of the remaining block by the pivot.
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0)) {
            for j in t..cols {
                m[t][j] = m[t][j].checked_add(m[i][j]).ok_or(LinalgError::Overflow)?;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    Ok(out)
}
