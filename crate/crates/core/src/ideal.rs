use crate::error::{Error, Result};
use crate::groebner::{buchberger, minimal_generators, GroebnerBasis};
use crate::poly::{same_ring, Polynomial};
use crate::ring::RingRef;
use std::fmt;
use std::sync::OnceLock;

/// A homogeneous ideal given by generators, with a lazily computed reduced
/// Groebner basis under the ring's order.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Rejects inhomogeneous generators; zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
            kept.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            gb: OnceLock::new(),
        }
    }

    /// The ideal generated by variables `vars`.
    pub fn of_variables(ring: &RingRef, vars: &[usize]) -> Self {
        let gens = vars.iter().map(|&i| Polynomial::var(ring, i)).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Groebner basis (computed once, then cached).
    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            if self.gens.is_empty() {
                // empty basis of the zero ideal
                let probe = [Polynomial::zero(&self.ring)];
                buchberger(&probe).expect("zero ideal")
            } else {
                buchberger(&self.gens).expect("generators share the ring")
            }
        })
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis().contains(f))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, via reduced Groebner bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis().elements() == other.groebner_basis().elements())
    }

    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        minimal_generators(&self.gens).expect("generators are homogeneous")
    }

    /// Same ideal, minimal generators.
    pub fn trim(&self) -> Ideal {
        let gb = self.gb.clone();
        Ideal {
            ring: self.ring.clone(),
            gens: self.minimal_generators(),
            gb,
        }
    }

    /// Degrees of the generators, in order.
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.homogeneous_degree().unwrap_or(0)).collect()
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Product of ideals.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, e: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ideal(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
