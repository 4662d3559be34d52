use std::sync::Arc;

use super::{Engine, GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, PolyRing, Polynomial};

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> Result<()> {
    if a.compatible(b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{a} vs {b}")))
    }
}

impl Engine {
    /// Remainder of `f` modulo the grevlex basis of `ideal`.
    pub fn normal_form(&self, f: &Polynomial, ideal: &Ideal) -> Result<Polynomial> {
        same_ring(f.ring(), ideal.ring())?;
        let gb = self.groebner(ideal, MonomialOrder::Grevlex)?;
        gb.normal_form(f)
    }

    pub fn ideal_membership(&self, f: &Polynomial, ideal: &Ideal) -> Result<bool> {
        Ok(self.normal_form(f, ideal)?.is_zero())
    }

    /// `J ⊆ I`.
    pub fn contains_ideal(&self, big: &Ideal, small: &Ideal) -> Result<bool> {
        same_ring(big.ring(), small.ring())?;
        let gb = self.groebner(big, MonomialOrder::Grevlex)?;
        for g in small.generators() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit_ideal(&self, ideal: &Ideal) -> Result<bool> {
        Ok(self.groebner(ideal, MonomialOrder::Grevlex)?.is_unit())
    }

    /// `f ∈ rad(I)` via `1 ∈ I + (1 - t f)` in one extra variable.
    pub fn radical_membership(&self, f: &Polynomial, ideal: &Ideal) -> Result<bool> {
        same_ring(f.ring(), ideal.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        let base = ideal.ring();
        let ext = base.prepend_fresh(&["t"], MonomialOrder::Grevlex)?;
        let shift: Vec<usize> = (1..=base.arity()).collect();
        let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.remap(&ext, &shift)).collect();
        let tf = &ext.var(0) * &f.remap(&ext, &shift);
        gens.push(&ext.one() - &tf);
        let rab = Ideal::new(&ext, gens)?;
        self.is_unit_ideal(&rab)
    }

    /// Equality of ideals by comparison of reduced grevlex bases.
    pub fn ideal_equal(&self, a: &Ideal, b: &Ideal) -> Result<bool> {
        same_ring(a.ring(), b.ring())?;
        let ga = self.groebner(a, MonomialOrder::Grevlex)?;
        let gb = self.groebner(b, MonomialOrder::Grevlex)?;
        Ok(ga.elements() == gb.elements())
    }

    /// `I ∩ K[keep]`, returned as an ideal of the same ring whose generators
    /// only involve the kept variables.
    pub fn elimination_ideal(&self, ideal: &Ideal, keep: &[usize]) -> Result<Ideal> {
        let ring = ideal.ring();
        let n = ring.arity();
        if let Some(&bad) = keep.iter().find(|&&i| i >= n) {
            return Err(Error::VariableOutOfRange { index: bad, arity: n });
        }
        let eliminate: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        if eliminate.is_empty() {
            let gb = self.groebner(ideal, MonomialOrder::Grevlex)?;
            return Ideal::new(ring, gb.elements().to_vec());
        }
        let kept: Vec<usize> = (0..n).filter(|i| keep.contains(i)).collect();
        // new variable list: eliminated block first
        let perm: Vec<usize> = eliminate.iter().chain(kept.iter()).copied().collect();
        let mut to_new = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            to_new[old] = new;
        }
        let names: Vec<&str> = perm.iter().map(|&i| ring.names()[i].as_str()).collect();
        let block = MonomialOrder::Block(eliminate.len());
        let elim_ring = PolyRing::new(&names, ring.field(), block)?;
        let gens = ideal.generators().iter().map(|g| g.remap(&elim_ring, &to_new)).collect();
        let gb = self.groebner(&Ideal::new(&elim_ring, gens)?, block)?;
        let elim_mask: u32 = (1u32 << eliminate.len()) - 1;
        let survivors: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| g.support() & elim_mask == 0)
            .map(|g| g.remap(ring, &perm))
            .collect();
        Ideal::new(ring, survivors)
    }

    /// `I ∩ J` via `t I + (1 - t) J` and elimination of `t`.
    pub fn ideal_intersection(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        same_ring(a.ring(), b.ring())?;
        let base = a.ring();
        if a.is_zero() || b.is_zero() {
            return Ok(Ideal::zero(base));
        }
        let block = MonomialOrder::Block(1);
        let ext = base.prepend_fresh(&["t"], block)?;
        let shift: Vec<usize> = (1..=base.arity()).collect();
        let t = ext.var(0);
        let one_minus_t = &ext.one() - &t;
        let mut gens = Vec::new();
        for g in a.generators() {
            gens.push(&t * &g.remap(&ext, &shift));
        }
        for g in b.generators() {
            gens.push(&one_minus_t * &g.remap(&ext, &shift));
        }
        let gb = self.groebner(&Ideal::new(&ext, gens)?, block)?;
        let back: Vec<usize> = std::iter::once(0).chain(0..base.arity()).collect();
        let survivors: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| g.support() & 1 == 0)
            .map(|g| g.remap(base, &back))
            .collect();
        Ideal::new(base, survivors)
    }

    /// `(I : g) = { h : h g ∈ I }`, computed as `(I ∩ (g)) / g`.
    pub fn ideal_quotient(&self, ideal: &Ideal, g: &Polynomial) -> Result<Ideal> {
        same_ring(ideal.ring(), g.ring())?;
        if g.is_zero() {
            return Err(Error::InvalidArgument("quotient by the zero polynomial".into()));
        }
        let ring = ideal.ring();
        let g = g.in_ring(ring);
        if g.is_unit() {
            return Ok(ideal.clone());
        }
        let principal = Ideal::new(ring, vec![g.clone()])?;
        let meet = self.ideal_intersection(ideal, &principal)?;
        let quotients = meet
            .generators()
            .iter()
            .map(|h| {
                h.div_exact(&g)
                    .ok_or_else(|| Error::ClaimFailed("intersection element not divisible by g".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, quotients)
    }

    /// `(I : J)` as the intersection of `(I : g)` over the generators of `J`.
    pub fn ideal_colon_ideal(&self, ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
        same_ring(ideal.ring(), by.ring())?;
        let mut gens = by.generators().iter();
        let first = gens
            .next()
            .ok_or_else(|| Error::InvalidArgument("colon by the zero ideal".into()))?;
        let mut acc = self.ideal_quotient(ideal, first)?;
        for g in gens {
            let q = self.ideal_quotient(ideal, g)?;
            acc = self.ideal_intersection(&acc, &q)?;
        }
        Ok(acc)
    }

    /// Krull dimension of `R/I`: the largest set of variables containing the
    /// support of no leading monomial of the grevlex basis.
    pub fn krull_dimension(&self, ideal: &Ideal) -> Result<usize> {
        let gb = self.groebner(ideal, MonomialOrder::Grevlex)?;
        if gb.is_unit() {
            return Err(Error::ImproperIdeal);
        }
        Ok(dimension_from_basis(&gb, ideal.ring().arity()))
    }

    /// Height of `I` taken as `arity - dim`, which is its codimension.
    pub fn codimension(&self, ideal: &Ideal) -> Result<usize> {
        Ok(ideal.ring().arity() - self.krull_dimension(ideal)?)
    }
}

pub(crate) fn dimension_from_basis(gb: &GroebnerBasis, arity: usize) -> usize {
    let supports: Vec<u32> = gb.leading_monomials().iter().map(|m| m.support()).collect();
    let mut best = 0;
    for set in 0u32..(1u32 << arity) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        // independent: no leading monomial supported inside `set`
        if supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    best
}
