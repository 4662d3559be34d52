//! Buchberger's algorithm with the Gebauer-Möller pair update (product and
//! chain criteria) and sugar-degree pair selection.

use std::cmp::Ordering;
use std::sync::Arc;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::polyring::{merge_sub_scaled, Coefficient, Monomial, MonomialOrder, PolyRing, Polynomial, Term};

/// Limits enforced while a basis is being computed.
pub(crate) struct Control<'a> {
    pub max_pairs: Option<u64>,
    pub max_terms: Option<u64>,
    pub deadline: Option<Instant>,
    pub on_pair: &'a (dyn Fn() + Sync),
}

impl Control<'_> {
    fn check(&self, pairs: u64, terms: u64) -> Result<()> {
        if let Some(max) = self.max_pairs {
            if pairs > max {
                return Err(Error::BudgetExhausted(format!("more than {max} S-pairs reduced")));
            }
        }
        if let Some(max) = self.max_terms {
            if terms > max {
                return Err(Error::BudgetExhausted(format!("basis exceeds {max} terms")));
            }
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return Err(Error::BudgetExhausted("time limit reached".into()));
            }
        }
        Ok(())
    }
}

/// A divisor for reduction: leading monomial, inverse leading coefficient and
/// the full term list.
pub(crate) struct Divisor<'a> {
    pub lm: Monomial,
    pub lc_inv: Coefficient,
    pub terms: &'a [Term],
}

impl<'a> Divisor<'a> {
    pub fn new(p: &'a Polynomial) -> Divisor<'a> {
        let (c, m) = &p.terms()[0];
        Divisor {
            lm: *m,
            lc_inv: c.inv(),
            terms: p.terms(),
        }
    }
}

/// Full reduction of `p` by `divisors`; returns the remainder.
pub(crate) fn reduce_terms(mut p: Vec<Term>, divisors: &[Divisor<'_>], order: MonomialOrder) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let m = p[start].1;
        match divisors.iter().find(|d| d.lm.divides(&m)) {
            Some(d) => {
                let q = d.lm.quotient_of(&m);
                let c = p[start].0.mul(&d.lc_inv);
                p = merge_sub_scaled(&p[start..], &c, &q, d.terms, order);
                start = 0;
            }
            None => {
                out.push(p[start].clone());
                start += 1;
            }
        }
    }
    out
}

/// Reduces only until the leading term is irreducible.
fn top_reduce(mut p: Vec<Term>, divisors: &[Divisor<'_>], order: MonomialOrder) -> Vec<Term> {
    while let Some((c, m)) = p.first() {
        match divisors.iter().find(|d| d.lm.divides(m)) {
            Some(d) => {
                let q = d.lm.quotient_of(m);
                let c = c.mul(&d.lc_inv);
                p = merge_sub_scaled(&p, &c, &q, d.terms, order);
            }
            None => break,
        }
    }
    p
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'c> {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    reduced_pairs: u64,
    ctl: &'c Control<'c>,
}

impl State<'_> {
    fn divisors(&self) -> Vec<Divisor<'_>> {
        self.active
            .iter()
            .map(|&k| Divisor {
                lm: self.lms[k],
                lc_inv: self.ring.field().one(),
                terms: self.polys[k].terms(),
            })
            .collect()
    }

    fn total_terms(&self) -> u64 {
        self.active.iter().map(|&k| self.polys[k].len() as u64).sum()
    }

    fn insert(&mut self, p: Polynomial, sugar: u32) {
        let p = p.monic();
        let h = self.polys.len();
        self.lms.push(*p.leading_monomial().unwrap());
        self.polys.push(p);
        self.sugar.push(sugar);
        self.update(h);
    }

    /// Gebauer-Möller update for the new element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.lms[h];
        let mut c: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, lm_h.lcm(&self.lms[g])))
            .collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = c.pop() {
            let coprime = lm_h.is_coprime(&self.lms[g1]);
            if coprime
                || (!c.iter().any(|(_, l2)| l2.divides(&l1)) && !d.iter().any(|(_, l2)| l2.divides(&l1)))
            {
                d.push((g1, l1));
            }
        }
        let e: Vec<(usize, Monomial)> = d
            .into_iter()
            .filter(|(g, _)| !lm_h.is_coprime(&self.lms[*g]))
            .collect();

        let lms = &self.lms;
        self.pairs.retain(|p| {
            !lm_h.divides(&p.lcm)
                || lm_h.lcm(&lms[p.i]) == p.lcm
                || lm_h.lcm(&lms[p.j]) == p.lcm
        });
        for (g, lcm) in e {
            let sugar = (self.sugar[h] + lcm.degree() - lm_h.degree())
                .max(self.sugar[g] + lcm.degree() - self.lms[g].degree());
            self.pairs.push(Pair { i: g, j: h, lcm, sugar });
        }
        self.active.retain(|&g| !lm_h.divides(&lms[g]));
        self.active.push(h);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, pair: &Pair) -> Vec<Term> {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mf = self.lms[pair.i].quotient_of(&pair.lcm);
        let mg = self.lms[pair.j].quotient_of(&pair.lcm);
        // both monic: drop the cancelling leading terms
        let a: Vec<Term> = f.terms()[1..].iter().map(|(c, m)| (c.clone(), mf.mul(m))).collect();
        let one = self.ring.field().one();
        merge_sub_scaled(&a, &one, &mg, &g.terms()[1..], self.order)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring` (whose
/// order is used). Elements are normalized and sorted by ascending leading
/// monomial. The unit ideal yields `[1]`.
pub(crate) fn reduced_basis(ring: &Arc<PolyRing>, gens: &[Polynomial], ctl: &Control<'_>) -> Result<Vec<Polynomial>> {
    let order = ring.order();
    let mut input: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.in_ring(ring))
        .collect();
    if input.iter().any(|g| g.is_unit()) {
        return Ok(vec![ring.one()]);
    }
    if input.is_empty() {
        return Ok(Vec::new());
    }
    input.sort_by(|a, b| {
        order
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });

    let mut st = State {
        ring: ring.clone(),
        order,
        polys: Vec::new(),
        lms: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        reduced_pairs: 0,
        ctl,
    };

    for g in input {
        let sugar = g.total_degree().unwrap_or(0);
        let r = {
            let divs = st.divisors();
            reduce_terms(g.into_terms(), &divs, order)
        };
        if r.is_empty() {
            continue;
        }
        let r = Polynomial::from_terms(ring, r);
        if r.is_unit() {
            return Ok(vec![ring.one()]);
        }
        st.insert(r, sugar);
    }

    while let Some(pair) = st.select_pair() {
        st.reduced_pairs += 1;
        (st.ctl.on_pair)();
        st.ctl.check(st.reduced_pairs, st.total_terms())?;
        let s = st.s_polynomial(&pair);
        let r = {
            let divs = st.divisors();
            let top = top_reduce(s, &divs, order);
            if top.is_empty() {
                continue;
            }
            reduce_terms(top, &divs, order)
        };
        let r = Polynomial::from_canonical(ring, r);
        if r.is_unit() {
            return Ok(vec![ring.one()]);
        }
        st.insert(r, pair.sugar);
    }

    // inter-reduce the minimal basis
    let active = st.active.clone();
    let mut basis: Vec<Polynomial> = active.iter().map(|&k| st.polys[k].clone()).collect();
    for k in 0..basis.len() {
        let tail = basis[k].terms()[1..].to_vec();
        let head = basis[k].terms()[0].clone();
        let reduced_tail = {
            let divs: Vec<Divisor<'_>> = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, p)| Divisor::new(p))
                .collect();
            reduce_terms(tail, &divs, order)
        };
        let mut terms = vec![head];
        terms.extend(reduced_tail);
        basis[k] = Polynomial::from_canonical(ring, terms);
    }
    let mut basis: Vec<Polynomial> = basis.into_iter().map(|p| p.normalized()).collect();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(basis)
}

/// S-polynomial of two arbitrary nonzero polynomials, scaled so that the
/// leading terms cancel.
pub(crate) fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (cf, mf) = &f.terms()[0];
    let (cg, mg) = &g.terms()[0];
    let lcm = mf.lcm(mg);
    let a = f.mul_term(&cf.inv(), &mf.quotient_of(&lcm));
    let b = g.mul_term(&cg.inv(), &mg.quotient_of(&lcm));
    &a - &b
}
