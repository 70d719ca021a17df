//! Schreyer's algorithm on module vectors.
//!
//! A term `m·e_a` of the free module `F_k` is stored through its *total*
//! monomial `m·T_a`, where `T_a` is the leading monomial of the image of `e_a`
//! pushed all the way down to `R`. The induced Schreyer order then compares
//! totals in the ring's order and breaks ties with a per-level rank of the
//! basis elements. The rank orders `e_a` by (rank of the leading component of
//! its image, index), which is exactly the recursive Schreyer tie-break.

use crate::field::Fp;
use crate::monomial::Monomial;
use crate::ring::RingRef;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MTerm {
    pub coef: Fp,
    pub total: Monomial,
    pub comp: u32,
}

/// Basis data of one free module in the frame.
#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub totals: Vec<Monomial>,
    pub rank: Vec<u32>,
}

impl Level {
    pub fn base(nvars: usize) -> Self {
        Level {
            totals: vec![Monomial::one(nvars)],
            rank: vec![0],
        }
    }

    #[inline]
    pub fn cmp(&self, ring: &RingRef, a: &MTerm, b: &MTerm) -> Ordering {
        ring.cmp(&a.total, &b.total)
            .then_with(|| self.rank[a.comp as usize].cmp(&self.rank[b.comp as usize]))
    }

    pub fn len(&self) -> usize {
        self.totals.len()
    }
}

/// `a + c·u·b` for term lists sorted descending in `level`'s order.
fn merge(ring: &RingRef, level: &Level, a: &[MTerm], b: &[MTerm], c: Fp, u: &Monomial) -> Vec<MTerm> {
    let field = *ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let scaled = |t: &MTerm| MTerm {
        coef: field.mul(t.coef, c),
        total: t.total.mul(u),
        comp: t.comp,
    };
    let mut i = 0;
    let mut j = 0;
    let mut pb = b.first().map(scaled);
    while let (Some(ta), Some(tb)) = (a.get(i), pb.as_ref()) {
        match level.cmp(ring, ta, tb) {
            Ordering::Greater => {
                out.push(ta.clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(pb.take().unwrap());
                j += 1;
                pb = b.get(j).map(scaled);
            }
            Ordering::Equal => {
                let s = field.add(ta.coef, tb.coef);
                if s != 0 {
                    out.push(MTerm {
                        coef: s,
                        total: ta.total.clone(),
                        comp: ta.comp,
                    });
                }
                i += 1;
                j += 1;
                pb = b.get(j).map(scaled);
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while let Some(t) = pb.take() {
        out.push(t);
        j += 1;
        pb = b.get(j).map(scaled);
    }
    out
}

/// Sorts and combines terms into canonical order for `level`.
fn canonicalize(ring: &RingRef, level: &Level, mut terms: Vec<MTerm>) -> Vec<MTerm> {
    let field = *ring.field();
    terms.sort_by(|a, b| level.cmp(ring, b, a));
    let mut out: Vec<MTerm> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.comp == t.comp && last.total == t.total => last.coef = field.add(last.coef, t.coef),
            _ => out.push(t),
        }
    }
    out.retain(|t| t.coef != 0);
    out
}

/// Order in which basis elements of the next module are indexed: grouped by
/// leading component, and inside a group by ascending exponent of `var`.
/// This keeps the frame no longer than the number of variables.
pub(crate) fn sort_for_next_level(ring: &RingRef, level: &Level, gens: &mut [Vec<MTerm>], var: usize) {
    gens.sort_by(|a, b| {
        let (la, lb) = (&a[0], &b[0]);
        level.rank[la.comp as usize]
            .cmp(&level.rank[lb.comp as usize])
            .then_with(|| la.total.exponents()[var].cmp(&lb.total.exponents()[var]))
            .then_with(|| ring.cmp(&la.total, &lb.total))
    });
}

/// Basis data of the module whose generators map to `gens` (vectors in `level`).
pub(crate) fn next_level(level: &Level, gens: &[Vec<MTerm>]) -> Level {
    let totals: Vec<Monomial> = gens.iter().map(|g| g[0].total.clone()).collect();
    let mut idx: Vec<usize> = (0..gens.len()).collect();
    idx.sort_by_key(|&a| (level.rank[gens[a][0].comp as usize], a));
    let mut rank = vec![0u32; gens.len()];
    for (r, &a) in idx.iter().enumerate() {
        rank[a] = r as u32;
    }
    Level { totals, rank }
}

/// Schreyer syzygies of `gens`, a Groebner basis of a submodule of the module
/// described by `level`. Returns vectors over `next`, the module whose basis
/// maps onto `gens`; they form a Groebner basis of the syzygy module in the
/// induced order.
pub(crate) fn syzygies(ring: &RingRef, level: &Level, gens: &[Vec<MTerm>], next: &Level) -> Vec<Vec<MTerm>> {
    let field = *ring.field();
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); level.len()];
    for (l, g) in gens.iter().enumerate() {
        by_comp[g[0].comp as usize].push(l);
    }
    let inv_lc: Vec<Fp> = gens
        .iter()
        .map(|g| field.inv(g[0].coef).expect("nonzero leading coefficient"))
        .collect();

    let mut out = Vec::new();
    for j in 0..gens.len() {
        let comp = gens[j][0].comp as usize;
        let tj = &gens[j][0].total;
        // candidate leading monomials u·e_j with u = T_i / gcd(T_i, T_j)
        let mut cands: Vec<(Monomial, usize)> = by_comp[comp]
            .iter()
            .filter(|&&i| i < j)
            .map(|&i| {
                let ti = &gens[i][0].total;
                (ti.gcd(tj).quotient_of(ti).expect("gcd divides"), i)
            })
            .collect();
        cands.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.1.cmp(&b.1)));
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        for (u, i) in cands {
            if !kept.iter().any(|(v, _)| v.divides(&u)) {
                kept.push((u, i));
            }
        }
        for (uj, i) in kept {
            let lcm = tj.mul(&uj);
            let ui = gens[i][0].total.quotient_of(&lcm).expect("lcm");
            let a = inv_lc[j];
            let b = field.neg(inv_lc[i]);
            let mut syz = vec![
                MTerm {
                    coef: a,
                    total: lcm.clone(),
                    comp: j as u32,
                },
                MTerm {
                    coef: b,
                    total: lcm.clone(),
                    comp: i as u32,
                },
            ];
            let first: Vec<MTerm> = merge(ring, level, &[], &gens[j], a, &uj);
            let mut h = merge(ring, level, &first, &gens[i], b, &ui);
            while let Some(lead) = h.first() {
                let (l, w) = by_comp[lead.comp as usize]
                    .iter()
                    .find_map(|&l| gens[l][0].total.quotient_of(&lead.total).map(|w| (l, w)))
                    .expect("generators must form a Groebner basis");
                let f = field.mul(lead.coef, inv_lc[l]);
                syz.push(MTerm {
                    coef: field.neg(f),
                    total: lead.total.clone(),
                    comp: l as u32,
                });
                h = merge(ring, level, &h, &gens[l], field.neg(f), &w);
            }
            let syz = canonicalize(ring, next, syz);
            debug_assert_eq!(syz[0].comp as usize, j);
            out.push(syz);
        }
    }
    out
}
