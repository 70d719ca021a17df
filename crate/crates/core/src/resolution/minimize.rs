//! Pruning a resolution down to a minimal one.
//!
//! A constant entry `u` at `(r, c)` of `d_k` splits off the trivial complex
//! `R(-t) → R(-t)`: clear the rest of row `r` with column operations, then
//! drop basis element `c` of `F_k` and `r` of `F_{k-1}`. The row `c` of
//! `d_{k+1}` is zero in the new basis and the column `r` of `d_{k-1}` maps a
//! boundary, so both are deleted without further changes.

use super::{FreeModule, GradedMatrix, Resolution};
use crate::poly::Polynomial;
use std::collections::BTreeMap;

type Column = BTreeMap<usize, Polynomial>;

pub fn minimize(res: &Resolution) -> Resolution {
    let ring = res.ring().clone();
    let field = *ring.field();
    let nsteps = res.steps.len();
    let mut cols: Vec<Vec<Column>> = res
        .steps
        .iter()
        .map(|d| d.columns.iter().map(|c| c.iter().cloned().collect()).collect())
        .collect();
    let twists: Vec<Vec<i32>> = (0..=nsteps).map(|i| res.module(i).twists().to_vec()).collect();
    let mut alive: Vec<Vec<bool>> = twists.iter().map(|t| vec![true; t.len()]).collect();

    for k in 0..nsteps {
        loop {
            let mut pivot: Option<(i32, usize, usize)> = None;
            for (c, col) in cols[k].iter().enumerate() {
                if !alive[k + 1][c] {
                    continue;
                }
                for (&r, f) in col {
                    if f.is_unit() {
                        let key = (twists[k + 1][c], r, c);
                        if pivot.is_none_or(|p| key < p) {
                            pivot = Some(key);
                        }
                    }
                }
            }
            let Some((_, r, c)) = pivot else { break };
            let pcol = cols[k][c].clone();
            let inv = field.inv(pcol[&r].lc()).expect("unit entry");
            for c2 in 0..cols[k].len() {
                if c2 == c || !alive[k + 1][c2] {
                    continue;
                }
                let Some(e) = cols[k][c2].get(&r) else { continue };
                let factor = e.scale(inv);
                let col = &mut cols[k][c2];
                for (row, g) in &pcol {
                    let delta = g.mul(&factor).expect("same ring");
                    let updated = match col.remove(row) {
                        Some(h) => h.sub(&delta).expect("same ring"),
                        None => delta.neg(),
                    };
                    if !updated.is_zero() {
                        col.insert(*row, updated);
                    }
                }
                debug_assert!(!col.contains_key(&r));
            }
            alive[k + 1][c] = false;
            alive[k][r] = false;
            cols[k][c].clear();
            if k + 1 < nsteps {
                for col in cols[k + 1].iter_mut() {
                    col.remove(&c);
                }
            }
            if k > 0 {
                cols[k - 1][r].clear();
            }
        }
    }

    // renumber the surviving basis elements
    let index: Vec<Vec<Option<usize>>> = alive
        .iter()
        .map(|a| {
            let mut next = 0;
            a.iter()
                .map(|&live| {
                    live.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let module = |i: usize| {
        FreeModule::new(
            twists[i]
                .iter()
                .zip(&alive[i])
                .filter(|(_, &a)| a)
                .map(|(&t, _)| t)
                .collect(),
        )
    };
    let mut steps = Vec::with_capacity(nsteps);
    for k in 0..nsteps {
        let source = module(k + 1);
        if source.rank() == 0 {
            break;
        }
        let columns = cols[k]
            .iter()
            .enumerate()
            .filter(|(c, _)| alive[k + 1][*c])
            .map(|(_, col)| {
                col.iter()
                    .filter_map(|(r, f)| index[k][*r].map(|r2| (r2, f.clone())))
                    .collect()
            })
            .collect();
        steps.push(GradedMatrix::from_parts(&ring, module(k), source, columns));
    }
    Resolution::from_parts(&ring, steps, true)
}
