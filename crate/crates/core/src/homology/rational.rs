//! Rank over the rationals by fraction-free column reduction.
//!
//! Kept deliberately separate from the Smith form code: columns are reduced
//! left to right against earlier pivots keyed by their lowest nonzero row,
//! using `c ← (b/g)·c − (a/g)·p` and dividing out the content afterwards.

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use super::scalar::{Checked, Entry};
use super::snf::IntMatrix;

pub fn rank_over_rationals(m: &IntMatrix) -> usize {
    match rank_with::<i64>(m) {
        Ok(r) => r,
        Err(_) => rank_with::<BigInt>(m).expect("BigInt arithmetic cannot overflow"),
    }
}

type Col<T> = Vec<(usize, T)>;

fn rank_with<T: Entry>(m: &IntMatrix) -> Checked<usize> {
    let mut pivots: FxHashMap<usize, usize> = FxHashMap::default();
    let mut reduced: Vec<Col<T>> = Vec::new();
    let mut scratch: Col<T> = Vec::new();
    for col in &m.columns {
        let mut c: Col<T> = col.iter().map(|&(i, v)| (i, T::from_i64(v))).collect();
        c.sort_unstable_by_key(|e| e.0);
        c.retain(|e| !e.1.is_nil());
        while let Some((low, a)) = c.last().cloned() {
            let Some(&p) = pivots.get(&low) else {
                make_primitive(&mut c)?;
                pivots.insert(low, reduced.len());
                reduced.push(c);
                break;
            };
            let pc = &reduced[p];
            let b = pc.last().expect("pivot column is nonzero").1.clone();
            let g = a.gcd(&b)?;
            let (ca, pa) = (b.div_exact(&g)?, a.div_exact(&g)?);
            combine(&c, &ca, pc, &pa, &mut scratch)?;
            std::mem::swap(&mut c, &mut scratch);
            make_primitive(&mut c)?;
        }
    }
    Ok(reduced.len())
}

/// `out = x·c − y·p`, dropping zeros.
fn combine<T: Entry>(c: &[(usize, T)], x: &T, p: &[(usize, T)], y: &T, out: &mut Col<T>) -> Checked<()> {
    out.clear();
    let zero = T::from_i64(0);
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < p.len() {
        let ri = c.get(i).map_or(usize::MAX, |e| e.0);
        let rj = p.get(j).map_or(usize::MAX, |e| e.0);
        let (row, v) = if ri < rj {
            i += 1;
            (ri, c[i - 1].1.mul(x)?)
        } else if rj < ri {
            j += 1;
            (rj, zero.sub_mul(y, &p[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ri, c[i - 1].1.mul(x)?.sub_mul(y, &p[j - 1].1)?)
        };
        if !v.is_nil() {
            out.push((row, v));
        }
    }
    Ok(())
}

fn make_primitive<T: Entry>(c: &mut Col<T>) -> Checked<()> {
    let mut g = T::from_i64(0);
    for (_, v) in c.iter() {
        g = g.gcd(v)?;
        if g.is_unit() {
            return Ok(());
        }
    }
    if g.is_nil() {
        return Ok(());
    }
    for (_, v) in c.iter_mut() {
        *v = v.div_exact(&g)?;
    }
    Ok(())
}
