use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::buchberger::{reduce_terms, s_poly, Divisor};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// An ideal given by generators, with a per-order cache of reduced bases.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ring`
    /// (up to term order).
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !g.ring().compatible(ring) {
                return Err(Error::RingMismatch(format!("generator in {} but ideal in {}", g.ring(), ring)));
            }
            if !g.is_zero() {
                gens.push(g.in_ring(ring));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            cache: Arc::default(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("empty generator list")
    }

    /// The homogeneous maximal ideal generated by all variables.
    pub fn maximal(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, ring.vars()).expect("variables live in their ring")
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, gens: &[S]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| ring.parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// `self + (extra)`.
    pub fn extended(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.extended(&other.generators)
    }

    pub(crate) fn cached(&self, order: MonomialOrder) -> Option<Arc<GroebnerBasis>> {
        self.cache.lock().unwrap().get(&order).cloned()
    }

    pub(crate) fn store(&self, gb: Arc<GroebnerBasis>) -> Arc<GroebnerBasis> {
        let mut cache = self.cache.lock().unwrap();
        cache.entry(gb.order()).or_insert(gb).clone()
    }

    /// Moves generators into a ring with the same variable names but another
    /// field, reducing coefficients modulo `p` when going from `Q` to `F_p`.
    pub fn change_field(&self, ring: &Arc<PolyRing>) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.change_field(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// A reduced Gröbner basis: elements are normalized (monic over `F_p`,
/// primitive integral with positive leading coefficient over `Q`) and sorted
/// by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
    // monic associates, used as divisors so reduction never scales by 1/lc
    monic: OnceLock<Vec<Polynomial>>,
}

impl GroebnerBasis {
    pub(crate) fn new(ring: Arc<PolyRing>, elements: Vec<Polynomial>) -> GroebnerBasis {
        GroebnerBasis {
            ring,
            elements,
            monic: OnceLock::new(),
        }
    }

    fn monic_elements(&self) -> &[Polynomial] {
        self.monic.get_or_init(|| self.elements.iter().map(Polynomial::monic).collect())
    }

    /// The ring the elements live in; its order is the basis order.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *g.leading_monomial().unwrap()).collect()
    }

    /// Remainder of full multivariate division; the result lives in the
    /// basis ring.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().compatible(&self.ring) {
            return Err(Error::RingMismatch(format!("{} vs {}", f.ring(), self.ring)));
        }
        let f = f.in_ring(&self.ring);
        let divs: Vec<Divisor<'_>> = self.monic_elements().iter().map(Divisor::new).collect();
        let r = reduce_terms(f.terms().to_vec(), &divs, self.order());
        Ok(Polynomial::from_terms(&self.ring, r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Re-checks Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn is_self_consistent(&self) -> bool {
        let g = self.monic_elements();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let s = s_poly(&g[i], &g[j]);
                if !self.normal_form(&s).map(|r| r.is_zero()).unwrap_or(false) {
                    return false;
                }
            }
        }
        true
    }

    /// No leading monomial divides another and no term of any element is
    /// divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.elements.iter().enumerate().all(|(i, g)| {
            g.terms().iter().all(|(_, m)| {
                lms.iter()
                    .enumerate()
                    .all(|(j, lm)| j == i || !lm.divides(m))
            })
        })
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.elements == other.elements
    }
}
