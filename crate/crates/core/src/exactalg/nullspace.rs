//! Exact right nullspaces over the rationals.
//!
//! Rows are scaled to integers and reduced with fraction-free (Bareiss)
//! elimination, so every intermediate entry is a minor of the input and
//! divisions are exact. Sparse systems are first split into independent
//! blocks (connected components of the row/column incidence graph).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::rational::Rational;

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        RatMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Integer row echelon form produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                // exact by Sylvester's identity
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

pub fn rank(m: &RatMatrix) -> usize {
    bareiss(integer_rows(m), m.cols).pivots.len()
}

/// Basis of `{v : m v = 0}`. One vector per free column, with a 1 in that
/// column and zeros in the other free columns.
pub fn exact_nullspace(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let ech = bareiss(integer_rows(m), m.cols);
    let mut is_pivot = vec![false; m.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); m.cols];
        v[free] = Rational::one();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
            let mut s = Rational::zero();
            for j in p + 1..m.cols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    s += &v[j] * Rational::from_integer(row[j].clone());
                }
            }
            v[p] = -s / Rational::from_integer(row[p].clone());
        }
        basis.push(v);
    }
    basis
}

pub fn nullity(m: &RatMatrix) -> usize {
    m.cols - rank(m)
}

/// Sparse matrix given by `(row, col, value)` triples; duplicates add up.
#[derive(Clone, Debug, Default)]
pub struct SparseRatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, Rational)>,
}

impl SparseRatMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseRatMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols);
        if !value.is_zero() {
            self.entries.push((row, col, value));
        }
    }

    /// Splits into independent dense blocks. Columns touching no entry form
    /// their own zero blocks.
    pub fn blocks(&self) -> Vec<RatMatrix> {
        let mut uf = UnionFind::new(self.rows + self.cols);
        for (r, c, _) in &self.entries {
            uf.union(*r, self.rows + c);
        }
        let mut block_of = std::collections::HashMap::new();
        let mut members: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for node in 0..self.rows + self.cols {
            let root = uf.find(node);
            let b = *block_of.entry(root).or_insert_with(|| {
                members.push((Vec::new(), Vec::new()));
                members.len() - 1
            });
            if node < self.rows {
                members[b].0.push(node);
            } else {
                members[b].1.push(node - self.rows);
            }
        }
        let mut local = vec![(0usize, 0usize); self.rows + self.cols];
        for (b, (rs, cs)) in members.iter().enumerate() {
            for (k, r) in rs.iter().enumerate() {
                local[*r] = (b, k);
            }
            for (k, c) in cs.iter().enumerate() {
                local[self.rows + c] = (b, k);
            }
        }
        let mut dense: Vec<RatMatrix> = members
            .iter()
            .map(|(rs, cs)| RatMatrix::zeros(rs.len(), cs.len()))
            .collect();
        for (r, c, v) in &self.entries {
            let (b, lr) = local[*r];
            let (_, lc) = local[self.rows + c];
            let cur = dense[b].get(lr, lc) + v;
            dense[b].set(lr, lc, cur);
        }
        dense
    }

    pub fn nullity(&self) -> usize {
        self.blocks().par_iter().map(nullity).sum()
    }

    pub fn to_dense(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in &self.entries {
            let cur = m.get(*r, *c) + v;
            m.set(*r, *c, cur);
        }
        m
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
