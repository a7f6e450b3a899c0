//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub type Matrix = Vec<Vec<BigInt>>;

/// `u * m * v = diagonal`, with `u` and `v` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// The first `min(rows, cols)` diagonal entries; each divides the next, zeros last.
    pub invariants: Vec<BigInt>,
    pub u: Matrix,
    pub v: Matrix,
    pub diagonal: Matrix,
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

struct Work {
    a: Matrix,
    u: Matrix,
    v: Matrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i -= q * row_j
    fn row_op(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                *x -= q * y;
            }
        }
    }

    /// col_i -= q * col_j
    fn col_op(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let y = row[j].clone();
                row[i] -= q * y;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -&*x;
            }
        }
    }
}

pub fn smith_normal_form(m: &[Vec<BigInt>]) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut w = Work { a: m.to_vec(), u: identity(rows), v: identity(cols) };
    let size = rows.min(cols);
    for t in 0..size {
        // smallest nonzero entry of the trailing block as pivot
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !w.a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| w.a[i][j].abs().cmp(&w.a[k][l].abs()));
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_op(i, t, &q);
                    if !w.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_op(j, t, &q);
                    if !w.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // a remainder is smaller than the pivot: move it into place and repeat
                let (mut best, mut at) = (w.a[t][t].abs(), None);
                for i in t + 1..rows {
                    if !w.a[i][t].is_zero() && w.a[i][t].abs() < best {
                        best = w.a[i][t].abs();
                        at = Some((i, true));
                    }
                }
                for j in t + 1..cols {
                    if !w.a[t][j].is_zero() && w.a[t][j].abs() < best {
                        best = w.a[t][j].abs();
                        at = Some((j, false));
                    }
                }
                match at {
                    Some((i, true)) => w.swap_rows(t, i),
                    Some((j, false)) => w.swap_cols(t, j),
                    None => {}
                }
                continue;
            }
            // the pivot must divide the whole trailing block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&w.a[i][j] % &w.a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    w.row_op(t, i, &minus_one);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    let invariants = (0..size).map(|i| w.a[i][i].clone()).collect();
    SmithForm { invariants, u: w.u, v: w.v, diagonal: w.a }
}

/// The integer lattice spanned by exponent differences of pure-difference binomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerLattice {
    pub basis: Vec<Vec<i64>>,
    pub smith_invariants: Vec<String>,
    pub saturated: bool,
}

impl IntegerLattice {
    pub fn new(basis: Vec<Vec<i64>>) -> Self {
        let m: Matrix = basis.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let snf = smith_normal_form(&m);
        let saturated = snf.invariants.iter().all(|d| d.is_zero() || d.is_one());
        IntegerLattice {
            basis,
            smith_invariants: snf.invariants.iter().map(|d| d.to_string()).collect(),
            saturated,
        }
    }

    pub fn rank(&self) -> usize {
        self.smith_invariants.iter().filter(|d| d.as_str() != "0").count()
    }
}
