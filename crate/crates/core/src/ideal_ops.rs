//! Ideal-level algebra built on elimination.
//!
//! Auxiliary variables live in freshly built rings, named with the reserved
//! `@` prefix and placed in a leading elimination block.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, minimal_generators};
use crate::hilbert::codimension;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{random_combinations, same_ring, Polynomial};
use crate::ring::{PolyRing, RingRef, AUX_PREFIX};
use crate::rng::SeededRng;

/// A graded ring map `source -> target / relations`, variable `i` of the
/// source going to `images[i]`.
#[derive(Debug, Clone)]
pub struct RingMapSpec {
    pub source: RingRef,
    pub target: RingRef,
    pub target_relations: Ideal,
    pub images: Vec<Polynomial>,
}

fn check_same(a: &RingRef, b: &RingRef) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Elements of `gb` free of the variables `mask`, pulled back along `back`.
fn free_of(gb: Vec<Polynomial>, mask: &[bool], target: &RingRef, back: &[usize]) -> Vec<Polynomial> {
    gb.into_iter()
        .filter(|g| {
            g.terms().iter().all(|t| {
                t.mono
                    .exponents()
                    .iter()
                    .zip(mask)
                    .all(|(&e, &dropped)| !dropped || e == 0)
            })
        })
        .map(|g| g.relabel(target, back))
        .collect()
}

/// `I ∩ k[kept variables]`, via a block order with the dropped variables first.
pub fn eliminate(ideal: &Ideal, drop_vars: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if let Some(&bad) = drop_vars.iter().find(|&&v| v >= n) {
        return Err(Error::ArityError {
            expected: n,
            found: bad + 1,
        });
    }
    if ideal.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let mut dropped = vec![false; n];
    for &v in drop_vars {
        dropped[v] = true;
    }
    let order_vars: Vec<usize> = (0..n)
        .filter(|&v| dropped[v])
        .chain((0..n).filter(|&v| !dropped[v]))
        .collect();
    let k = drop_vars.iter().collect::<std::collections::BTreeSet<_>>().len();
    let mut forward = vec![0; n];
    for (pos, &v) in order_vars.iter().enumerate() {
        forward[v] = pos;
    }
    let names = order_vars.iter().map(|&v| ring.names()[v].clone()).collect();
    let weights = order_vars.iter().map(|&v| ring.weights()[v]).collect();
    let block = MonomialOrder::block(k, MonomialOrder::GRevLex, MonomialOrder::GRevLex);
    let elim = PolyRing::build(*ring.field(), names, weights, block)?;

    let gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.relabel(&elim, &forward)).collect();
    let gb = buchberger(&gens)?.into_elements();
    let mask: Vec<bool> = (0..n).map(|pos| pos < k).collect();
    let back: Vec<usize> = order_vars.clone();
    let kept = free_of(gb, &mask, ring, &back);
    Ideal::new(ring, minimal_generators(&kept)?)
}

/// `R` with one extra weight-zero variable `@t` in front, eliminated first.
fn ring_with_t(ring: &RingRef) -> Result<RingRef> {
    let mut names = vec![format!("{AUX_PREFIX}t")];
    names.extend(ring.names().iter().cloned());
    let mut weights = vec![0];
    weights.extend_from_slice(ring.weights());
    PolyRing::build(
        *ring.field(),
        names,
        weights,
        MonomialOrder::block(1, MonomialOrder::Lex, ring.order().clone()),
    )
}

/// `I ∩ J = (t·I + (1 - t)·J) ∩ R`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    check_same(ring, j.ring())?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let big = ring_with_t(ring)?;
    let n = ring.nvars();
    let up: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&big, 0);
    let one_minus_t = Polynomial::one(&big).sub(&t)?;
    let mut gens = Vec::new();
    for f in i.gens() {
        gens.push(f.relabel(&big, &up).mul(&t)?);
    }
    for g in j.gens() {
        gens.push(g.relabel(&big, &up).mul(&one_minus_t)?);
    }
    let gb = buchberger(&gens)?.into_elements();
    let mut mask = vec![false; n + 1];
    mask[0] = true;
    let mut back = vec![0usize];
    back.extend(0..n);
    let kept = free_of(gb, &mask, ring, &back);
    Ideal::new(ring, minimal_generators(&kept)?)
}

/// `I : g`, computed as `(I ∩ (g)) / g`.
fn quotient_by_element(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    if i.contains(g)? {
        return Ok(Ideal::unit(ring));
    }
    let principal = Ideal::new(ring, vec![g.clone()])?;
    let meet = intersect(i, &principal)?;
    let mut gens = Vec::with_capacity(meet.gens().len());
    for h in meet.gens() {
        match h.exact_div(g)? {
            Some(q) => gens.push(q),
            None => {
                return Err(Error::ContractViolation(format!(
                    "intersection generator {h} is not divisible by {g}"
                )))
            }
        }
    }
    Ideal::new(ring, gens)
}

/// The colon ideal `I : J = ∩_g I : g` over the generators `g` of `J`.
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same(i.ring(), j.ring())?;
    if j.is_zero() {
        return Err(Error::ContractViolation("colon by the zero ideal".into()));
    }
    if i.is_zero() {
        return Ok(Ideal::zero(i.ring()));
    }
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let part = quotient_by_element(i, g)?;
        if part.is_unit() {
            continue;
        }
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    Ok(match acc {
        Some(q) => q.trim(),
        None => Ideal::unit(i.ring()),
    })
}

/// `I : J^∞`, the stable value of `K ← K : J`.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut k = i.clone();
    loop {
        let next = quotient(&k, j)?;
        if next.same_ideal(&k)? {
            return Ok(next);
        }
        k = next;
    }
}

/// Kernel of a graded ring map, by eliminating the target variables from the
/// graph ideal `relations + (x_i - image_i)`.
pub fn ring_map_kernel(spec: &RingMapSpec) -> Result<Ideal> {
    let source = &spec.source;
    let target = &spec.target;
    check_same(spec.target_relations.ring(), target)?;
    if spec.images.len() != source.nvars() {
        return Err(Error::ArityError {
            expected: source.nvars(),
            found: spec.images.len(),
        });
    }
    if source.characteristic() != target.characteristic() {
        return Err(Error::RingMismatch);
    }
    let mut degree = None;
    for img in &spec.images {
        check_same(img.ring(), target)?;
        let d = img
            .homogeneous_degree()
            .ok_or_else(|| Error::NotHomogeneous(img.to_string()))?;
        if d == 0 {
            return Err(Error::ContractViolation("images must have positive degree".into()));
        }
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => return Err(Error::DegreeMismatch(d0, d)),
            _ => {}
        }
    }
    let d = degree.unwrap_or(1);
    let nt = target.nvars();
    let ns = source.nvars();
    let mut names: Vec<String> = target.names().iter().map(|s| format!("{AUX_PREFIX}{s}")).collect();
    names.extend(source.names().iter().cloned());
    let mut weights = target.weights().to_vec();
    weights.extend(std::iter::repeat_n(d, ns));
    let graph_ring = PolyRing::build(
        *target.field(),
        names,
        weights,
        MonomialOrder::block(nt, MonomialOrder::GRevLex, source.order().clone()),
    )?;
    let tmap: Vec<usize> = (0..nt).collect();
    let mut gens: Vec<Polynomial> = spec
        .target_relations
        .gens()
        .iter()
        .map(|g| g.relabel(&graph_ring, &tmap))
        .collect();
    for (i, img) in spec.images.iter().enumerate() {
        let x = Polynomial::var(&graph_ring, nt + i);
        gens.push(x.sub(&img.relabel(&graph_ring, &tmap))?);
    }
    let gb = buchberger(&gens)?.into_elements();
    let mask: Vec<bool> = (0..nt + ns).map(|v| v < nt).collect();
    let back: Vec<usize> = (0..nt).map(|_| 0).chain(0..ns).collect();
    let kept = free_of(gb, &mask, source, &back);
    Ideal::new(source, minimal_generators(&kept)?)
}

fn random_linear_form(ring: &RingRef, rng: &mut SeededRng) -> Polynomial {
    let p = ring.characteristic();
    Polynomial::from_terms(
        ring,
        (0..ring.nvars()).map(|i| (rng.below(p), Monomial::var(ring.nvars(), i))),
    )
}

/// `c` random combinations of the top-degree generators of `I` forming a
/// regular sequence (checked as `codim = c`), retrying with fresh randomness.
pub fn regular_sequence_in(
    ideal: &Ideal,
    c: usize,
    rng: &mut SeededRng,
    max_retries: usize,
) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    let gens = ideal.minimal_generators();
    if c == 0 {
        return Ok(Vec::new());
    }
    let codim_i = codimension(ideal)?;
    if (codim_i as usize) < c || gens.is_empty() {
        return Err(Error::GenericityFailure {
            what: format!("ideal has codimension {codim_i} < {c}"),
            attempts: 0,
        });
    }
    let top = gens.iter().filter_map(|g| g.homogeneous_degree()).max().unwrap_or(0);
    let top_gens: Vec<Polynomial> = gens
        .iter()
        .filter(|g| g.homogeneous_degree() == Some(top))
        .cloned()
        .collect();
    let top_ideal = Ideal::new(ring, top_gens.clone())?;
    let pool = if codimension(&top_ideal)? as usize >= c {
        top_gens
    } else {
        // lift lower-degree generators to the top degree with random linear forms
        let mut pool = top_gens;
        for g in gens.iter().filter(|g| g.homogeneous_degree() != Some(top)) {
            let d = g.homogeneous_degree().unwrap_or(top);
            for _ in 0..ring.nvars() {
                let mut lifted = g.clone();
                for _ in d..top {
                    lifted = lifted.mul(&random_linear_form(ring, rng))?;
                }
                pool.push(lifted);
            }
        }
        pool
    };
    for _ in 0..max_retries.max(1) {
        let z = random_combinations(&pool, c, rng)?;
        if z.iter().any(Polynomial::is_zero) {
            continue;
        }
        let zi = Ideal::new(ring, z.clone())?;
        if codimension(&zi)? == c as i64 {
            return Ok(z);
        }
    }
    Err(Error::GenericityFailure {
        what: format!("no regular sequence of length {c} found among random combinations"),
        attempts: max_retries.max(1),
    })
}

/// Unmixed part by double linkage: `(z) : ((z) : I)` for a maximal regular
/// sequence `z` inside `I`.
pub fn unmixed_part(ideal: &Ideal, rng: &mut SeededRng, max_retries: usize) -> Result<Ideal> {
    if ideal.is_zero() {
        return Err(Error::ContractViolation("unmixed part of the zero ideal".into()));
    }
    if ideal.is_unit() {
        return Err(Error::ContractViolation("unmixed part of the unit ideal".into()));
    }
    let c = codimension(ideal)? as usize;
    let z = regular_sequence_in(ideal, c, rng, max_retries)?;
    let zi = Ideal::new(ideal.ring(), z)?;
    let link = quotient(&zi, ideal)?;
    Ok(quotient(&zi, &link)?.trim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_polynomial;
    use crate::hilbert::degree;

    fn ring(names: &[&str]) -> RingRef {
        PolyRing::new(32003, names, MonomialOrder::GRevLex).unwrap()
    }

    fn ideal(r: &RingRef, src: &[&str]) -> Ideal {
        Ideal::new(r, src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    fn assert_same(a: &Ideal, b: &Ideal) {
        assert!(a.same_ideal(b).unwrap(), "{a} != {b}");
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y", "u", "v"]);
        assert_same(
            &intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap(),
            &ideal(&r, &["x*y"]),
        );
        let m = intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["u", "v"])).unwrap();
        assert_same(&m, &ideal(&r, &["x*u", "x*v", "y*u", "y*v"]));
        assert_eq!(m.gens().len(), 4);
        let sq = ideal(&r, &["x", "y"]).power(2).unwrap();
        let m = intersect(&ideal(&r, &["x"]), &sq).unwrap();
        assert_same(&m, &ideal(&r, &["x^2", "x*y"]));
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y", "z"]);
        let q = quotient(&ideal(&r, &["x^2", "x*y"]), &ideal(&r, &["x"])).unwrap();
        assert_same(&q, &ideal(&r, &["x", "y"]));
        let q = quotient(&ideal(&r, &["x"]), &ideal(&r, &["x^2", "x*y"])).unwrap();
        assert!(q.is_unit());
        let q = quotient(&Ideal::zero(&r), &ideal(&r, &["x"])).unwrap();
        assert!(q.is_zero());
        assert!(quotient(&ideal(&r, &["x"]), &Ideal::zero(&r)).is_err());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y", "z"]);
        let s = saturate(&ideal(&r, &["x^2*y"]), &ideal(&r, &["y"])).unwrap();
        assert_same(&s, &ideal(&r, &["x^2"]));
        let s = saturate(&ideal(&r, &["x^2", "x*y"]), &ideal(&r, &["x", "y"])).unwrap();
        assert_same(&s, &ideal(&r, &["x"]));
        let i = ideal(&r, &["x*y - z^2", "y^3"]);
        assert!(saturate(&i, &i).unwrap().is_unit());
    }

    #[test]
    fn eliminations() {
        let r = ring(&["t", "x", "y", "w"]);
        // homogenized (x - t w, y w - t^2)
        let i = ideal(&r, &["x - t", "y*w - t^2"]);
        let e = eliminate(&i, &[0]).unwrap();
        assert_same(&e, &ideal(&r, &["y*w - x^2"]));
        let r2 = ring(&["x", "y"]);
        let e = eliminate(&ideal(&r2, &["x"]), &[1]).unwrap();
        assert_same(&e, &ideal(&r2, &["x"]));
        let bad = Ideal::new(&r, vec![parse_polynomial(&r, "t*x - 1").unwrap()]);
        assert!(matches!(bad, Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn kernels() {
        let s = ring(&["x", "y"]);
        let t = ring(&["t"]);
        let spec = RingMapSpec {
            source: s.clone(),
            target: t.clone(),
            target_relations: Ideal::zero(&t),
            images: vec![
                parse_polynomial(&t, "t^2").unwrap(),
                parse_polynomial(&t, "t^2").unwrap(),
            ],
        };
        assert_same(&ring_map_kernel(&spec).unwrap(), &ideal(&s, &["x - y"]));

        // x -> s*t... twisted: x -> a^2, y -> a*b, z -> b^2 gives xz - y^2
        let s3 = ring(&["x", "y", "z"]);
        let t2 = ring(&["a", "b"]);
        let img = |e: &str| parse_polynomial(&t2, e).unwrap();
        let spec = RingMapSpec {
            source: s3.clone(),
            target: t2.clone(),
            target_relations: Ideal::zero(&t2),
            images: vec![img("a^2"), img("a*b"), img("b^2")],
        };
        assert_same(&ring_map_kernel(&spec).unwrap(), &ideal(&s3, &["x*z - y^2"]));

        // identity onto a quotient returns the relations
        let k = ideal(&s3, &["x*y - z^2", "x^3"]);
        let spec = RingMapSpec {
            source: s3.clone(),
            target: s3.clone(),
            target_relations: k.clone(),
            images: (0..3).map(|i| Polynomial::var(&s3, i)).collect(),
        };
        assert_same(&ring_map_kernel(&spec).unwrap(), &k);
    }

    #[test]
    fn regular_sequences() {
        let r = ring(&["x", "y", "z"]);
        let mut rng = SeededRng::new(3);
        let z = regular_sequence_in(&ideal(&r, &["x", "y"]), 2, &mut rng, 20).unwrap();
        assert_eq!(z.len(), 2);
        assert!(z.iter().all(|f| f.homogeneous_degree() == Some(1)));
        let err = regular_sequence_in(&ideal(&r, &["x"]), 2, &mut rng, 20).unwrap_err();
        assert!(matches!(err, Error::GenericityFailure { .. }));
        // top-degree generators alone have codim 1; the fallback lifts x
        let z = regular_sequence_in(&ideal(&r, &["x", "y^2*z", "y*z^2"]), 2, &mut rng, 20).unwrap();
        assert_eq!(codimension(&Ideal::new(&r, z).unwrap()).unwrap(), 2);
    }

    #[test]
    fn unmixed_parts() {
        let r = ring(&["x", "y", "u", "v"]);
        let mut rng = SeededRng::new(11);
        let u = unmixed_part(&ideal(&r, &["x^2", "x*y"]), &mut rng, 20).unwrap();
        assert_same(&u, &ideal(&r, &["x"]));
        let i = ideal(&r, &["x*u", "x*v", "y*u", "y*v"]);
        let u = unmixed_part(&i, &mut rng, 20).unwrap();
        assert_same(&u, &i);
        assert_eq!(degree(&u).unwrap(), 2);
    }
}
