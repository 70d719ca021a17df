//! Three cubics with projective dimension 5.
//!
//! Project the Veronese surface from a random point of `P^5` to get a
//! height-two ideal `I'` with seven cubic generators, link it through two
//! random cubics `p1, p2` to `I = (p1, p2) : I'`, and take three random
//! combinations `f, g, h` of the five cubics of `I`. When `(f,g,h)` has
//! unmixed part `I`, the resolution of `R/(f,g,h)` has length 5.

use crate::error::{Error, Result};
use crate::format::parse_polynomial;
use crate::hilbert;
use crate::ideal::Ideal;
use crate::ideal_ops::{quotient, regular_sequence_in, ring_map_kernel, unmixed_part, RingMapSpec};
use crate::order::MonomialOrder;
use crate::poly::{random_combinations, Polynomial};
use crate::resolution::{betti_table, minimal_resolution, BettiTable};
use crate::ring::{PolyRing, RingRef};
use crate::rng::SeededRng;
use serde::Serialize;
use std::fmt::{self, Write as _};

pub const DEFAULT_PRIME: u64 = 32003;
pub const DEFAULT_MAX_RETRIES: usize = 20;

/// Seed used for the random choices made while checking the fixed example.
pub const EXAMPLE_SEED: u64 = 0;

const EXAMPLE_F: &str = "X_0^3 - X_0^2*X_2 + X_0*X_1*X_2 + X_0*X_2^2 + X_1*X_2^2 - X_0^2*X_3 \
    - X_1*X_2*X_3 - X_2^2*X_3 - X_1*X_3^2 - X_2*X_3^2 - X_3^3 + X_0^2*X_4 - X_0*X_1*X_4 \
    - X_1^2*X_4 - X_1*X_2*X_4 - X_0*X_3*X_4 + X_1*X_3*X_4 + X_2*X_3*X_4 - X_3^2*X_4 \
    + X_2*X_4^2 + X_3*X_4^2 + X_4^3";
const EXAMPLE_G: &str = "X_0*X_1^2 - X_1^3 + X_0^2*X_2 - X_0*X_1*X_2 - X_0*X_2^2 - X_1*X_2^2 \
    + X_0^2*X_3 - X_0*X_1*X_3 - X_1*X_2*X_3 + X_2^2*X_3 + X_0*X_3^2 - X_3^3 - X_0*X_1*X_4 \
    - X_1^2*X_4 + X_0*X_2*X_4 + X_1*X_2*X_4 + X_0*X_3*X_4 + X_2*X_3*X_4 + X_3^2*X_4";
const EXAMPLE_H: &str = "X_0^2*X_1 - X_1^3 - X_0^2*X_2 + X_0*X_1*X_2 - X_1^2*X_2 - X_0^2*X_3 \
    - X_1*X_2*X_3 + X_1*X_3^2 + X_0*X_1*X_4 + X_1^2*X_4 + X_0*X_2*X_4 - X_1*X_2*X_4 \
    + X_0*X_3*X_4 + X_1*X_3*X_4 + X_1*X_4^2";

/// The cubics `f, g, h` of the fixed example over `Z/3`, in `X_0..X_4`.
pub fn example_cubics() -> Vec<Polynomial> {
    let ring = PolyRing::with_vars(3, "X_", 5).expect("valid ring");
    [EXAMPLE_F, EXAMPLE_G, EXAMPLE_H]
        .iter()
        .map(|s| parse_polynomial(&ring, s).expect("embedded example parses"))
        .collect()
}

/// The Betti table expected for the three cubics.
pub fn expected_pd5_betti() -> BettiTable {
    let e = [(0, 0, 1), (1, 3, 3), (2, 6, 8), (3, 7, 10), (4, 8, 5), (5, 9, 1)];
    BettiTable::from_entries(e.iter().map(|&(i, j, b)| ((i, j), b)).collect())
}

/// The Betti table of a generic projection of the Veronese surface.
pub fn expected_link_betti() -> BettiTable {
    let e = [(0, 0, 1), (1, 3, 7), (2, 4, 10), (3, 5, 5), (4, 6, 1)];
    BettiTable::from_entries(e.iter().map(|&(i, j, b)| ((i, j), b)).collect())
}

fn genericity(what: impl Into<String>) -> Error {
    Error::GenericityFailure {
        what: what.into(),
        attempts: 1,
    }
}

/// 2x2 minors of the generic symmetric 3x3 matrix in `y_0..y_5`.
pub fn veronese_ideal(p: u64) -> Result<Ideal> {
    let ring = PolyRing::with_vars(p, "y_", 6)?;
    let y = |i: usize| Polynomial::var(&ring, i);
    let m = [[y(0), y(1), y(2)], [y(1), y(3), y(4)], [y(2), y(4), y(5)]];
    let mut minors = Vec::new();
    for (r1, r2) in [(0, 1), (0, 2), (1, 2)] {
        for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
            minors.push(m[r1][c1].mul(&m[r2][c2])?.sub(&m[r1][c2].mul(&m[r2][c1])?)?);
        }
    }
    Ok(Ideal::new(&ring, minors)?.trim())
}

/// The quadratic Veronese map `k[y_0..y_5] → k[s,t,u]`.
pub fn veronese_map(p: u64) -> Result<RingMapSpec> {
    let source = PolyRing::with_vars(p, "y_", 6)?;
    let target = PolyRing::new(p, &["s", "t", "u"], MonomialOrder::GRevLex)?;
    let v = |i: usize| Polynomial::var(&target, i);
    let mut images = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            images.push(v(i).mul(&v(j))?);
        }
    }
    Ok(RingMapSpec {
        source,
        target: target.clone(),
        target_relations: Ideal::zero(&target),
        images,
    })
}

fn random_linear_form(ring: &RingRef, rng: &mut SeededRng) -> Polynomial {
    let n = ring.nvars();
    let p = ring.characteristic();
    Polynomial::from_terms(
        ring,
        (0..n).map(|i| (rng.below(p), crate::monomial::Monomial::var(n, i))),
    )
}

fn link_attempt(veronese: &Ideal, source: &RingRef, rng: &mut SeededRng) -> Result<Ideal> {
    let target = veronese.ring();
    let images: Vec<Polynomial> = (0..5).map(|_| random_linear_form(target, rng)).collect();
    let link = ring_map_kernel(&RingMapSpec {
        source: source.clone(),
        target: target.clone(),
        target_relations: veronese.clone(),
        images,
    })?;
    let degrees = link.generator_degrees();
    if degrees != [3; 7] {
        return Err(genericity(format!(
            "projection ideal has generator degrees {degrees:?}, expected seven cubics"
        )));
    }
    Ok(link)
}

/// Ideal of the projection of the Veronese surface from a random point,
/// in `x_0..x_4`. Retries until it has exactly seven cubic generators.
pub fn generic_projection_link(p: u64, rng: &mut SeededRng, max_retries: usize) -> Result<Ideal> {
    let veronese = veronese_ideal(p)?;
    let source = PolyRing::with_vars(p, "x_", 5)?;
    let attempts = max_retries.max(1);
    for _ in 0..attempts {
        match link_attempt(&veronese, &source, rng) {
            Err(Error::GenericityFailure { .. }) => continue,
            other => return other,
        }
    }
    Err(Error::GenericityFailure {
        what: "no generic projection found".into(),
        attempts,
    })
}

/// Multiplicities along the linkage `(p1,p2) ~ I' + I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub complete_intersection: i64,
    pub link: i64,
    pub unmixed: i64,
}

impl DegreeCheck {
    pub fn holds(&self) -> bool {
        self.complete_intersection == self.link + self.unmixed
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineReport {
    pub prime: u64,
    pub seed: u64,
    pub retries_used: usize,
    pub link_gen_degrees: Vec<u32>,
    pub link_betti: BettiTable,
    pub p1p2_degree_check: DegreeCheck,
    pub unmix_gen_degrees: Vec<u32>,
    pub top_check: bool,
    pub degree: i64,
    pub codim: i64,
    pub betti: BettiTable,
    pub pd: usize,
}

fn degree_list(degrees: &[u32]) -> String {
    let inner: Vec<String> = degrees.iter().map(|d| format!("{{{d}}}")).collect();
    format!("{{{}}}", inner.join(", "))
}

fn comma_list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl PipelineReport {
    /// `key=value` lines carrying the same data as the transcript.
    pub fn key_values(&self) -> String {
        let betti: Vec<String> = self
            .betti
            .entries()
            .iter()
            .map(|((i, j), b)| format!("{i},{j},{b}"))
            .collect();
        let c = &self.p1p2_degree_check;
        let mut out = String::new();
        let _ = writeln!(out, "prime={}", self.prime);
        let _ = writeln!(out, "seed={}", self.seed);
        let _ = writeln!(out, "retries_used={}", self.retries_used);
        let _ = writeln!(out, "link_gen_degrees={}", comma_list(&self.link_gen_degrees));
        let _ = writeln!(
            out,
            "p1p2_degree_check={}={}+{} {}",
            c.complete_intersection,
            c.link,
            c.unmixed,
            c.holds()
        );
        let _ = writeln!(out, "unmix_gen_degrees={}", comma_list(&self.unmix_gen_degrees));
        let _ = writeln!(out, "top_check={}", self.top_check);
        let _ = writeln!(out, "degree={}", self.degree);
        let _ = writeln!(out, "codim={}", self.codim);
        let _ = writeln!(out, "pd={}", self.pd);
        let _ = writeln!(out, "betti={}", betti.join(";"));
        out
    }
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.p1p2_degree_check;
        writeln!(
            f,
            "prime {}, seed {}, retries used {}",
            self.prime, self.seed, self.retries_used
        )?;
        writeln!(f)?;
        writeln!(f, "degrees link")?;
        writeln!(f, "{}", degree_list(&self.link_gen_degrees))?;
        writeln!(f)?;
        writeln!(f, "betti res link")?;
        write!(f, "{}", self.link_betti)?;
        writeln!(f)?;
        writeln!(
            f,
            "degree p1p2 = degree link + degree unmix: {} = {} + {} ({})",
            c.complete_intersection,
            c.link,
            c.unmixed,
            c.holds()
        )?;
        writeln!(f)?;
        writeln!(f, "degrees unmix")?;
        writeln!(f, "{}", degree_list(&self.unmix_gen_degrees))?;
        writeln!(f)?;
        writeln!(f, "top fgh == unmix")?;
        writeln!(f, "{}", self.top_check)?;
        writeln!(f)?;
        writeln!(f, "betti res fgh")?;
        write!(f, "{}", self.betti)?;
        writeln!(f)?;
        writeln!(f, "degree {}, codim {}, pd {}", self.degree, self.codim, self.pd)?;
        writeln!(f)?;
        write!(f, "{}", self.key_values())
    }
}

struct Linkage {
    unmix: Ideal,
    link: Ideal,
    check: DegreeCheck,
}

/// Links `ideal` through two random elements: returns `(p1,p2) : ideal`
/// and the multiplicities of the three ideals involved.
fn link_through(ideal: &Ideal, rng: &mut SeededRng) -> Result<(Ideal, Ideal, DegreeCheck)> {
    let z = regular_sequence_in(ideal, 2, rng, 1)?;
    let zi = Ideal::new(ideal.ring(), z)?;
    let linked = quotient(&zi, ideal)?.trim();
    let check = DegreeCheck {
        complete_intersection: hilbert::degree(&zi)?,
        link: hilbert::degree(ideal)?,
        unmixed: hilbert::degree(&linked)?,
    };
    Ok((zi, linked, check))
}

fn pipeline_attempt(p: u64, rng: &mut SeededRng) -> Result<(Linkage, Ideal)> {
    let link = generic_projection_link(p, rng, 1)?;
    let (_, unmix, check) = link_through(&link, rng)?;
    let degrees = unmix.generator_degrees();
    if degrees != [3; 5] {
        return Err(genericity(format!(
            "linked ideal has generator degrees {degrees:?}, expected five cubics"
        )));
    }
    let fgh = Ideal::new(unmix.ring(), random_combinations(unmix.gens(), 3, rng)?)?;
    if !unmixed_part(&fgh, rng, 1)?.same_ideal(&unmix)? {
        return Err(genericity("unmixed part of (f,g,h) differs from the linked ideal"));
    }
    Ok((Linkage { unmix, link, check }, fgh))
}

fn report(
    p: u64,
    seed: u64,
    retries_used: usize,
    linkage: Linkage,
    fgh: &Ideal,
    top_check: bool,
) -> Result<PipelineReport> {
    let res = minimal_resolution(fgh)?;
    let link_res = minimal_resolution(&linkage.link)?;
    Ok(PipelineReport {
        prime: p,
        seed,
        retries_used,
        link_gen_degrees: linkage.link.generator_degrees(),
        link_betti: betti_table(&link_res)?,
        p1p2_degree_check: linkage.check,
        unmix_gen_degrees: linkage.unmix.generator_degrees(),
        top_check,
        degree: hilbert::degree(fgh)?,
        codim: hilbert::codimension(fgh)?,
        betti: betti_table(&res)?,
        pd: res.length(),
    })
}

/// Runs the whole construction, restarting with fresh randomness whenever a
/// genericity check fails.
pub fn pd5_pipeline(p: u64, seed: u64, max_retries: usize) -> Result<PipelineReport> {
    let mut rng = SeededRng::new(seed);
    let attempts = max_retries + 1;
    for retries_used in 0..attempts {
        match pipeline_attempt(p, &mut rng) {
            Ok((linkage, fgh)) => return report(p, seed, retries_used, linkage, &fgh, true),
            Err(Error::GenericityFailure { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure {
        what: format!("construction over F_{p} kept degenerating"),
        attempts,
    })
}

/// Checks the fixed example over `Z/3`. The linkage data is recovered
/// backwards: the unmixed part `I` of `(f,g,h)` is linked through two random
/// cubics `z` to `I'`, and `top_check` confirms that `(z) : I'` returns `I`.
pub fn verify_paper_example() -> Result<PipelineReport> {
    let cubics = example_cubics();
    let ring = cubics[0].ring().clone();
    let fgh = Ideal::new(&ring, cubics)?;
    let mut rng = SeededRng::new(EXAMPLE_SEED);
    let mut found = None;
    let mut retries_used = 0;
    for attempt in 0..=DEFAULT_MAX_RETRIES {
        retries_used = attempt;
        let step = (|| -> Result<(Linkage, bool)> {
            let unmix = unmixed_part(&fgh, &mut rng, 1)?;
            let (zi, link, check) = link_through(&unmix, &mut rng)?;
            let back = quotient(&zi, &link)?;
            let top = back.same_ideal(&unmix)?;
            // the linkage triangle was built the other way round
            let check = DegreeCheck {
                complete_intersection: check.complete_intersection,
                link: check.unmixed,
                unmixed: check.link,
            };
            Ok((Linkage { unmix, link, check }, top))
        })();
        match step {
            Ok(v) => {
                found = Some(v);
                break;
            }
            Err(Error::GenericityFailure { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let Some((linkage, top)) = found else {
        return Err(Error::GenericityFailure {
            what: "could not link the example's unmixed part".into(),
            attempts: DEFAULT_MAX_RETRIES + 1,
        });
    };
    let rep = report(3, EXAMPLE_SEED, retries_used, linkage, &fgh, top)?;
    let expected = expected_pd5_betti();
    let mut problems = Vec::new();
    if rep.degree != 5 {
        problems.push(format!("degree {} (expected 5)", rep.degree));
    }
    if rep.codim != 2 {
        problems.push(format!("codim {} (expected 2)", rep.codim));
    }
    if rep.pd != 5 {
        problems.push(format!("pd {} (expected 5)", rep.pd));
    }
    for (i, j, got, want) in rep.betti.diff(&expected) {
        problems.push(format!("beta_{i},{j} = {got} (expected {want})"));
    }
    if !problems.is_empty() {
        return Err(Error::VerificationFailure(format!(
            "{}\ncomputed:\n{}expected:\n{}",
            problems.join("; "),
            rep.betti,
            expected
        )));
    }
    Ok(rep)
}
