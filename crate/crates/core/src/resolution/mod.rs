//! Graded free resolutions of cyclic modules `R/I`.
//!
//! [`free_resolution`] builds a Schreyer resolution starting from the reduced
//! Groebner basis of `I`; [`minimize`] strips the trivial summands off it, and
//! the graded ranks of what is left are the Betti numbers.

mod betti;
mod minimize;
mod schreyer;

pub use betti::BettiTable;
pub use minimize::minimize;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::groebner::GroebnerBasis;
use crate::hilbert::{monomials_of_degree, HilbertSeries};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::{same_ring, Polynomial};
use crate::ring::RingRef;
use schreyer::{Level, MTerm};
use std::collections::BTreeMap;

/// A graded free module `⊕ R(-t)`, one twist per basis element.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeModule {
    twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        FreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }
}

/// A homogeneous map `source → target` of graded free modules, stored as
/// sparse columns of `(row, entry)` pairs sorted by row.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedMatrix {
    ring: RingRef,
    target: FreeModule,
    source: FreeModule,
    columns: Vec<Vec<(usize, Polynomial)>>,
}

impl GradedMatrix {
    /// Checks shapes and that entry `(r, c)` has degree `source[c] - target[r]`.
    pub fn new(
        ring: &RingRef,
        target: FreeModule,
        source: FreeModule,
        columns: Vec<Vec<(usize, Polynomial)>>,
    ) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::ArityError {
                expected: source.rank(),
                found: columns.len(),
            });
        }
        let mut clean = Vec::with_capacity(columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            let mut acc: BTreeMap<usize, Polynomial> = BTreeMap::new();
            for (r, f) in col {
                if r >= target.rank() {
                    return Err(Error::ArityError {
                        expected: target.rank(),
                        found: r + 1,
                    });
                }
                if !same_ring(f.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
                let sum = match acc.remove(&r) {
                    Some(g) => g.add(&f)?,
                    None => f,
                };
                if !sum.is_zero() {
                    acc.insert(r, sum);
                }
            }
            for (&r, f) in &acc {
                let want = source.twists[c] - target.twists[r];
                match f.homogeneous_degree() {
                    Some(d) if d as i32 == want => {}
                    _ => {
                        return Err(Error::NotHomogeneous(format!(
                            "entry ({r}, {c}) = {f} should have degree {want}"
                        )))
                    }
                }
            }
            clean.push(acc.into_iter().collect());
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            target,
            source,
            columns: clean,
        })
    }

    pub(crate) fn from_parts(
        ring: &RingRef,
        target: FreeModule,
        source: FreeModule,
        columns: Vec<Vec<(usize, Polynomial)>>,
    ) -> Self {
        GradedMatrix {
            ring: ring.clone(),
            target,
            source,
            columns,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    /// Nonzero entries of column `c`, sorted by row.
    pub fn column(&self, c: usize) -> &[(usize, Polynomial)] {
        &self.columns[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> Polynomial {
        self.columns[c]
            .iter()
            .find(|(row, _)| *row == r)
            .map(|(_, f)| f.clone())
            .unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// True if some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.columns.iter().flatten().any(|(_, f)| f.is_unit())
    }

    /// The product `self · rhs`.
    pub fn compose(&self, rhs: &GradedMatrix) -> Result<GradedMatrix> {
        if rhs.target != self.source {
            return Err(Error::ContractViolation("matrix shapes do not compose".into()));
        }
        let mut columns = Vec::with_capacity(rhs.ncols());
        for col in &rhs.columns {
            let mut acc: BTreeMap<usize, Polynomial> = BTreeMap::new();
            for (k, b) in col {
                for (r, a) in &self.columns[*k] {
                    let prod = a.mul(b)?;
                    let sum = match acc.remove(r) {
                        Some(g) => g.add(&prod)?,
                        None => prod,
                    };
                    if !sum.is_zero() {
                        acc.insert(*r, sum);
                    }
                }
            }
            columns.push(acc.into_iter().collect());
        }
        Ok(GradedMatrix::from_parts(
            &self.ring,
            self.target.clone(),
            rhs.source.clone(),
            columns,
        ))
    }
}

/// A complex `F_0 ← F_1 ← … ← F_L` resolving `R/I`; `steps[i]` is the map
/// `F_{i+1} → F_i`.
#[derive(Debug, Clone)]
pub struct Resolution {
    ring: RingRef,
    steps: Vec<GradedMatrix>,
    minimal: bool,
}

impl Resolution {
    /// Wraps a hand-built complex over `F_0 = R`, checking that consecutive
    /// maps compose and vanish.
    pub fn new(ring: &RingRef, steps: Vec<GradedMatrix>) -> Result<Self> {
        if let Some(first) = steps.first() {
            if first.target != FreeModule::new(vec![0]) {
                return Err(Error::ContractViolation("F_0 must be R".into()));
            }
        }
        let res = Resolution {
            ring: ring.clone(),
            steps,
            minimal: false,
        };
        if !res.composites_vanish()? {
            return Err(Error::ContractViolation(
                "consecutive maps do not compose to zero".into(),
            ));
        }
        let minimal = !res.steps.iter().any(GradedMatrix::has_unit_entry);
        Ok(Resolution { minimal, ..res })
    }

    pub(crate) fn from_parts(ring: &RingRef, steps: Vec<GradedMatrix>, minimal: bool) -> Self {
        Resolution {
            ring: ring.clone(),
            steps,
            minimal,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn steps(&self) -> &[GradedMatrix] {
        &self.steps
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.steps.iter().rposition(|d| d.ncols() > 0).map_or(0, |i| i + 1)
    }

    /// `F_i`; modules past the end are zero.
    pub fn module(&self, i: usize) -> FreeModule {
        match i {
            0 => FreeModule::new(vec![0]),
            _ => self.steps.get(i - 1).map(|d| d.source.clone()).unwrap_or_default(),
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.length()).map(|i| self.module(i).rank()).collect()
    }

    pub fn composites_vanish(&self) -> Result<bool> {
        for pair in self.steps.windows(2) {
            if !pair[0].compose(&pair[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Vectors over `F_0 = R` for the elements of a Groebner basis.
fn basis_vectors(gb: &GroebnerBasis) -> Vec<Vec<MTerm>> {
    gb.elements()
        .iter()
        .map(|f| {
            f.terms()
                .iter()
                .map(|t| MTerm {
                    coef: t.coef,
                    total: t.mono.clone(),
                    comp: 0,
                })
                .collect()
        })
        .collect()
}

/// The matrix whose columns are `gens`, vectors over the module `level`.
fn frame_matrix(ring: &RingRef, level: &Level, target: &FreeModule, gens: &[Vec<MTerm>]) -> GradedMatrix {
    let mut twists = Vec::with_capacity(gens.len());
    let mut columns = Vec::with_capacity(gens.len());
    for g in gens {
        twists.push(ring.degree_of(&g[0].total) as i32);
        let mut rows: BTreeMap<usize, Vec<(Fp, Monomial)>> = BTreeMap::new();
        for t in g {
            let mono = level.totals[t.comp as usize]
                .quotient_of(&t.total)
                .expect("term lies over its component");
            rows.entry(t.comp as usize).or_default().push((t.coef, mono));
        }
        columns.push(
            rows.into_iter()
                .map(|(r, terms)| (r, Polynomial::from_terms(ring, terms)))
                .collect(),
        );
    }
    GradedMatrix::from_parts(ring, target.clone(), FreeModule::new(twists), columns)
}

/// First syzygies of a Groebner basis: a matrix whose columns generate the
/// kernel of the row `[g_1 … g_k]` and form a Groebner basis of it in the
/// induced Schreyer order.
pub fn syzygies(gb: &GroebnerBasis) -> GradedMatrix {
    let ring = gb.ring();
    let base = Level::base(ring.nvars());
    let gens = basis_vectors(gb);
    let level1 = schreyer::next_level(&base, &gens);
    let twists: Vec<i32> = gens.iter().map(|g| ring.degree_of(&g[0].total) as i32).collect();
    let syz = schreyer::syzygies(ring, &base, &gens, &level1);
    frame_matrix(ring, &level1, &FreeModule::new(twists), &syz)
}

/// Schreyer resolution of `R/I` with at most `max_length` maps.
pub fn free_resolution(ideal: &Ideal, max_length: usize) -> Result<Resolution> {
    let ring = ideal.ring();
    if max_length == 0 {
        return Err(Error::ContractViolation("max_length must be at least 1".into()));
    }
    if ideal.is_unit() {
        return Err(Error::ContractViolation("R/I is zero for the unit ideal".into()));
    }
    if ideal.is_zero() {
        return Ok(Resolution::from_parts(ring, Vec::new(), true));
    }
    let n = ring.nvars();
    let mut level = Level::base(n);
    let mut target = FreeModule::new(vec![0]);
    let mut gens = basis_vectors(ideal.groebner_basis());
    schreyer::sort_for_next_level(ring, &level, &mut gens, 0);
    let mut steps = Vec::new();
    loop {
        let d = frame_matrix(ring, &level, &target, &gens);
        let next = schreyer::next_level(&level, &gens);
        let source = d.source.clone();
        steps.push(d);
        if steps.len() >= max_length {
            break;
        }
        let mut syz = schreyer::syzygies(ring, &level, &gens, &next);
        if syz.is_empty() {
            break;
        }
        schreyer::sort_for_next_level(ring, &next, &mut syz, steps.len() % n);
        level = next;
        target = source;
        gens = syz;
    }
    Ok(Resolution::from_parts(ring, steps, false))
}

/// Minimal free resolution of `R/I`.
pub fn minimal_resolution(ideal: &Ideal) -> Result<Resolution> {
    let n = ideal.ring().nvars().max(1);
    Ok(minimize(&free_resolution(ideal, n)?))
}

/// Betti numbers of the minimal resolution.
pub fn betti_table(res: &Resolution) -> Result<BettiTable> {
    if res.steps.iter().any(GradedMatrix::has_unit_entry) {
        return Err(Error::ContractViolation("resolution is not minimal".into()));
    }
    let mut entries = BTreeMap::new();
    for i in 0..=res.length() {
        for &t in res.module(i).twists() {
            *entries.entry((i, t)).or_insert(0u64) += 1;
        }
    }
    Ok(BettiTable::from_entries(entries))
}

/// Length of the minimal free resolution of `R/I`.
pub fn projective_dimension(ideal: &Ideal) -> Result<usize> {
    let res = minimal_resolution(ideal)?;
    let pd = res.length();
    let n = ideal.ring().nvars();
    if pd > n {
        return Err(Error::VerificationFailure(format!(
            "projective dimension {pd} exceeds the number of variables {n}"
        )));
    }
    if ideal.ring().is_standard_graded() {
        let codim = crate::hilbert::codimension(ideal)?;
        if (pd as i64) < codim {
            return Err(Error::VerificationFailure(format!(
                "projective dimension {pd} is below the codimension {codim}"
            )));
        }
    }
    Ok(pd)
}

/// Compares `Σ_i (-1)^i dim (F_i)_j` with the Hilbert function of `R/I` for
/// every `j ≤ up_to`. Returns the first degree where they disagree.
pub fn graded_rank_mismatch(res: &Resolution, hs: &HilbertSeries, up_to: i64) -> Option<i64> {
    let n = res.ring.nvars() as i64;
    let modules: Vec<FreeModule> = (0..=res.length()).map(|i| res.module(i)).collect();
    (0..=up_to).find(|&j| {
        let euler: i64 = modules
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let dims: i64 = f.twists().iter().map(|&t| monomials_of_degree(n, j - t as i64)).sum();
                if i % 2 == 0 {
                    dims
                } else {
                    -dims
                }
            })
            .sum();
        euler != hs.hilbert_function(j)
    })
}
