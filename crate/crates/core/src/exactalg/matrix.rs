//! Rectangular matrices with Laurent-polynomial entries.

use std::fmt;
use std::sync::Arc;

use super::laurent::{Alphabet, LaurentPoly};
use super::rational::Rational;
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(alphabet: &Arc<Alphabet>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(alphabet); rows * cols],
        }
    }

    pub fn identity(alphabet: &Arc<Alphabet>, n: usize) -> Self {
        let mut m = Self::zeros(alphabet, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(alphabet));
        }
        m
    }

    pub fn from_fn(
        alphabet: &Arc<Alphabet>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Result<Self, AlgebraError> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                if e.alphabet() != alphabet && **e.alphabet() != **alphabet {
                    return Err(AlgebraError::AlphabetMismatch {
                        left: e.alphabet().label().to_string(),
                        right: alphabet.label().to_string(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Matrix of constants.
    pub fn from_rationals(alphabet: &Arc<Alphabet>, rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self::from_fn(alphabet, r, c, |i, j| {
            LaurentPoly::constant(alphabet, rows[i][j].clone())
        })
        .expect("constant entries share the alphabet")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn alphabet(&self) -> Option<&Arc<Alphabet>> {
        self.entries.first().map(LaurentPoly::alphabet)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let alphabet = self
            .alphabet()
            .or(other.alphabet())
            .cloned()
            .ok_or_else(|| AlgebraError::Shape("empty matrix product".into()))?;
        let mut out = PolyMatrix::zeros(&alphabet, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero(&alphabet);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&a.checked_mul(b)?)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &PolyMatrix,
        f: impl Fn(&LaurentPoly, &LaurentPoly) -> Result<LaurentPoly, AlgebraError>,
    ) -> Result<PolyMatrix, AlgebraError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(AlgebraError::Shape(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_, _>>()?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        self.zip_with(other, LaurentPoly::checked_add)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        self.zip_with(other, LaurentPoly::checked_sub)
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &PolyMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(self.get(r0 + i, c0 + j).clone());
            }
        }
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn map(
        &self,
        f: impl Fn(&LaurentPoly) -> Result<LaurentPoly, AlgebraError>,
    ) -> Result<PolyMatrix, AlgebraError> {
        let entries = self.entries.iter().map(f).collect::<Result<_, _>>()?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
