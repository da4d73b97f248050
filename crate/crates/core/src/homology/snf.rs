//! Smith normal form of sparse integer matrices.
//!
//! Elimination runs in two phases. The sparse phase repeatedly picks a `±1`
//! entry (shortest row first, to limit fill-in), clears its column with row
//! operations and then drops its row and column; each such pivot contributes
//! an invariant factor of 1. Whatever survives has no unit entries and is
//! finished by a dense min-|entry| pivoting pass over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::boundary::BoundaryMatrix;
use super::scalar::{Checked, Entry};

/// Sparse integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Column `j` lists `(row, value)` with distinct rows and nonzero values.
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// From a row-major dense array; all rows must have the same length.
    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (i, row) in dense.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.columns[j].push((i, v));
                }
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                d[i][j] = v;
            }
        }
        d
    }
}

impl From<&BoundaryMatrix> for IntMatrix {
    fn from(b: &BoundaryMatrix) -> Self {
        IntMatrix {
            rows: b.rows,
            cols: b.cols,
            columns: b
                .columns
                .iter()
                .map(|c| c.iter().map(|&(i, s)| (i as usize, s as i64)).collect())
                .collect(),
        }
    }
}

/// Invariant factors `d_1 | d_2 | … | d_r` (all positive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Factors greater than 1: the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one())
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    match snf_with::<i64>(m) {
        Ok(r) => r,
        Err(_) => snf_with::<BigInt>(m).expect("BigInt arithmetic cannot overflow"),
    }
}

type Row<T> = Vec<(u32, T)>;

fn snf_with<T: Entry>(m: &IntMatrix) -> Checked<SnfResult> {
    let mut rows: Vec<Row<T>> = vec![Vec::new(); m.rows];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); m.cols];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, v) in col {
            if v != 0 {
                rows[i].push((j as u32, T::from_i64(v)));
                col_rows[j].push(i as u32);
            }
        }
    }
    for r in &mut rows {
        r.sort_unstable_by_key(|e| e.0);
    }

    let mut units = 0usize;
    let mut alive = vec![true; m.cols];
    let mut order: Vec<usize> = (0..m.cols).collect();
    order.sort_by_key(|&j| col_rows[j].len());
    let mut scratch: Row<T> = Vec::new();
    loop {
        let mut progress = false;
        for &j in &order {
            if !alive[j] {
                continue;
            }
            let jj = j as u32;
            let mut list = std::mem::take(&mut col_rows[j]);
            list.sort_unstable();
            list.dedup();
            list.retain(|&r| entry(&rows[r as usize], jj).is_some());
            if list.is_empty() {
                alive[j] = false;
                continue;
            }
            let pivot = list
                .iter()
                .copied()
                .filter(|&r| entry(&rows[r as usize], jj).is_some_and(|v| v.is_unit()))
                .min_by_key(|&r| rows[r as usize].len());
            let Some(p) = pivot else {
                col_rows[j] = list;
                continue;
            };
            let prow = std::mem::take(&mut rows[p as usize]);
            let u = entry(&prow, jj).expect("pivot entry").clone();
            for &s in &list {
                if s == p {
                    continue;
                }
                let row = &mut rows[s as usize];
                let a = entry(row, jj).expect("listed row has the entry").clone();
                let factor = a.mul(&u)?;
                sub_scaled(row, &prow, &factor, &mut scratch)?;
                std::mem::swap(row, &mut scratch);
                for &(c, _) in row.iter() {
                    // rows gaining a column are re-listed; stale ids are filtered on use
                    if alive[c as usize] && entry(&prow, c).is_some() {
                        col_rows[c as usize].push(s);
                    }
                }
            }
            alive[j] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let rest: Vec<(usize, &Row<T>)> = rows.iter().enumerate().filter(|(_, r)| !r.is_empty()).collect();
    let mut diagonal = vec![BigInt::one(); units];
    if !rest.is_empty() {
        let mut cols: Vec<u32> = rest.iter().flat_map(|(_, r)| r.iter().map(|e| e.0)).collect();
        cols.sort_unstable();
        cols.dedup();
        let mut dense = vec![vec![BigInt::zero(); cols.len()]; rest.len()];
        for (i, (_, r)) in rest.iter().enumerate() {
            for (c, v) in r.iter() {
                let j = cols.binary_search(c).expect("collected column");
                dense[i][j] = v.to_bigint();
            }
        }
        diagonal.extend(dense_snf(dense));
    }
    Ok(SnfResult { diagonal })
}

fn entry<T>(row: &[(u32, T)], col: u32) -> Option<&T> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|i| &row[i].1)
}

/// `out = row - factor * pivot`, merging by column and dropping zeros.
fn sub_scaled<T: Entry>(row: &[(u32, T)], pivot: &[(u32, T)], factor: &T, out: &mut Row<T>) -> Checked<()> {
    out.clear();
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let ca = row.get(a).map_or(u32::MAX, |e| e.0);
        let cb = pivot.get(b).map_or(u32::MAX, |e| e.0);
        if ca < cb {
            out.push(row[a].clone());
            a += 1;
        } else {
            let base = if ca == cb {
                a += 1;
                row[a - 1].1.clone()
            } else {
                T::from_i64(0)
            };
            let v = base.sub_mul(factor, &pivot[b].1)?;
            if !v.is_nil() {
                out.push((cb, v));
            }
            b += 1;
        }
    }
    Ok(())
}

/// Dense Smith form by min-|entry| pivoting; returns the positive invariant factors.
fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs(&a, t, |_, _| true) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, y) in bottom[0][t..].iter_mut().zip(&top[t][t..]) {
                        *x -= &q * y;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let y = row[t].clone();
                        row[j] -= &q * y;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                let (pi, pj) = min_abs(&a, t, |i, j| i == t || j == t).expect("pivot is nonzero");
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            let piv = a[t][t].clone();
            let bad = (t + 1..m).find(|&i| a[i][t + 1..].iter().any(|v| !v.is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, y) in top[t][t..].iter_mut().zip(&bottom[0][t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Smallest nonzero `|a[i][j]|` with `i, j ≥ t` among positions accepted by `keep`.
fn min_abs(a: &[Vec<BigInt>], t: usize, keep: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() || !keep(i, j) {
                continue;
            }
            let av = v.abs();
            if best.as_ref().is_none_or(|b| av < b.2) {
                let one = av.is_one();
                best = Some((i, j, av));
                if one {
                    return best.map(|b| (b.0, b.1));
                }
            }
        }
    }
    best.map(|b| (b.0, b.1))
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a {
            row.swap(x, y);
        }
    }
}
