//! Exact rank over Q(q) by sparse elimination, and rank at a rational point.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::linalg::Vector;
use crate::qfield::{QError, RatFunc, Rational};

fn weight(c: &RatFunc) -> usize {
    c.num().high_exp().zip(c.num().low_exp()).map_or(0, |(h, l)| (h - l) as usize)
        + c.den().high_exp().unwrap_or(0) as usize
}

/// Rank over Q(q) of the span of `vectors` (all of equal dimension).
///
/// Gaussian elimination on sparse rows; the pivot minimizes the Markowitz
/// count, then the size of the pivot entry.
pub fn rank(vectors: &[Vector]) -> usize {
    let mut rows: Vec<BTreeMap<usize, RatFunc>> = vectors
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.entries().map(|(i, c)| (i, c.clone())).collect())
        .collect();
    let mut r = 0;
    while !rows.is_empty() {
        let mut col_count: BTreeMap<usize, usize> = BTreeMap::new();
        for row in &rows {
            for &c in row.keys() {
                *col_count.entry(c).or_insert(0) += 1;
            }
        }
        let (pr, pc) = rows
            .iter()
            .enumerate()
            .flat_map(|(ri, row)| {
                let col_count = &col_count;
                row.iter().map(move |(&c, x)| {
                    let cost = (row.len() - 1) * (col_count[&c] - 1);
                    ((cost, weight(x), ri, c), (ri, c))
                })
            })
            .min_by(|a, b| a.0.cmp(&b.0))
            .map(|p| p.1)
            .expect("nonempty rows have entries");
        let pivot_row = rows.swap_remove(pr);
        let pivot_inv = pivot_row[&pc].inverse().expect("stored entries are nonzero");
        r += 1;
        for row in rows.iter_mut() {
            let Some(x) = row.remove(&pc) else { continue };
            let factor = &x * &pivot_inv;
            for (&c, y) in &pivot_row {
                if c == pc {
                    continue;
                }
                let delta = &factor * y;
                let v = match row.get(&c) {
                    Some(old) => old - &delta,
                    None => -delta,
                };
                if v.is_zero() {
                    row.remove(&c);
                } else {
                    row.insert(c, v);
                }
            }
        }
        rows.retain(|row| !row.is_empty());
    }
    r
}

/// Rank over Q after substituting q = q0; a lower bound for the generic rank.
pub fn rank_at(vectors: &[Vector], q0: &Rational) -> Result<usize, QError> {
    let mut rows: Vec<BTreeMap<usize, Rational>> = Vec::new();
    for v in vectors {
        let mut row = BTreeMap::new();
        for (i, c) in v.entries() {
            let x = c.eval_at(q0)?;
            if !x.is_zero() {
                row.insert(i, x);
            }
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    let mut r = 0;
    while let Some(pivot_row) = rows.pop() {
        let (&pc, px) = pivot_row.iter().next().expect("nonempty");
        let px = px.clone();
        r += 1;
        for row in rows.iter_mut() {
            let Some(x) = row.remove(&pc) else { continue };
            let factor = x / &px;
            for (&c, y) in pivot_row.iter().skip(1) {
                let v = row.get(&c).cloned().unwrap_or_default() - &factor * y;
                if v.is_zero() {
                    row.remove(&c);
                } else {
                    row.insert(c, v);
                }
            }
        }
        rows.retain(|row| !row.is_empty());
    }
    Ok(r)
}
