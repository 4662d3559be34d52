use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::{Coefficient, Field};
use super::monomial::{Monomial, MonomialOrder};
use super::ring::PolyRing;
use crate::error::{Error, Result};

pub type Term = (Coefficient, Monomial);

/// A polynomial in canonical form: nonzero coefficients, monomials strictly
/// descending in the ring's order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

/// Arithmetic selector for [`Polynomial::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Polynomial {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = last.0.add(&c);
                    continue;
                }
            }
            out.push((c, m));
        }
        out.retain(|t| !t.0.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms must already be canonical for `ring`.
    pub(crate) fn from_canonical(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.iter().all(|t| !t.0.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    /// Degree of every term if they all agree; `None` for the zero polynomial
    /// or a non-homogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.1.degree();
        self.terms.iter().all(|t| t.1.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |acc, t| acc | t.1.support())
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other),
            ArithOp::Sub => self.sub_unchecked(other),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let one = self.ring.field().one();
        let m = Monomial::one(self.ring.arity());
        let terms = merge_sub_scaled(&self.terms, &one.neg(), &m, &other.terms, self.ring.order());
        Polynomial::from_canonical(&self.ring, terms)
    }

    fn sub_unchecked(&self, other: &Polynomial) -> Polynomial {
        let one = self.ring.field().one();
        let m = Monomial::one(self.ring.arity());
        let terms = merge_sub_scaled(&self.terms, &one, &m, &other.terms, self.ring.order());
        Polynomial::from_canonical(&self.ring, terms)
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (c, m) = &small.terms[0];
            return big.mul_term(c, m);
        }
        let mut terms = Vec::with_capacity(small.len() * big.len());
        for (c, m) in &small.terms {
            for (d, n) in &big.terms {
                terms.push((c.mul(d), m.mul(n)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(d, n)| (c.mul(d), m.mul(n)))
            .collect();
        Polynomial::from_canonical(&self.ring, terms)
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.arity()))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        let arity = self.ring.arity();
        if i >= arity {
            return Err(Error::VariableOutOfRange { index: i, arity });
        }
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let c = c.mul(&field.from_i64(e as i64));
            if c.is_zero() {
                continue;
            }
            let dm = Monomial::var(arity, i).quotient_of(m);
            terms.push((c, dm));
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// `deg(f) * f - sum_i x_i * df/dx_i`, which vanishes for homogeneous `f`.
    pub fn euler_defect(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let d = self.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let mut acc = self.scale(&self.ring.field().from_i64(d as i64));
        for i in 0..self.ring.arity() {
            let xi_fi = &self.ring.var(i) * &self.partial_derivative(i)?;
            acc = &acc - &xi_fi;
        }
        Ok(acc)
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coefficient_of(&self, m: &Monomial) -> Coefficient {
        let order = self.ring.order();
        match self.terms.binary_search_by(|t| order.cmp(m, &t.1)) {
            Ok(i) => self.terms[i].0.clone(),
            Err(_) => self.ring.field().zero(),
        }
    }

    /// Substitutes `images[i]` for variable `i`. All images must share one ring,
    /// whose field matches this polynomial's field.
    pub fn compose(&self, images: &[Polynomial], target: &Arc<PolyRing>) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::InvalidArgument(format!(
                "expected {} images, got {}",
                self.ring.arity(),
                images.len()
            )));
        }
        if target.field() != self.ring.field() {
            return Err(Error::RingMismatch("field differs in substitution".into()));
        }
        for img in images {
            if !img.ring.compatible(target) {
                return Err(Error::RingMismatch("substitution image in another ring".into()));
            }
        }
        let images: Vec<Polynomial> = images.iter().map(|p| p.in_ring(target)).collect();
        // cache of powers per variable
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![target.one()]; images.len()];
        let mut acc = Polynomial::zero(target);
        for (c, m) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// The same polynomial, canonicalized for a compatible ring (possibly a
    /// different term order).
    pub fn in_ring(&self, target: &Arc<PolyRing>) -> Polynomial {
        assert!(self.ring.compatible(target), "incompatible rings");
        if self.ring.order() == target.order() {
            return Polynomial {
                ring: target.clone(),
                terms: self.terms.clone(),
            };
        }
        let mut terms = self.terms.clone();
        let order = target.order();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        Polynomial {
            ring: target.clone(),
            terms,
        }
    }

    /// Moves into `target` sending variable `i` to `map[i]`. Fields must agree.
    pub fn remap(&self, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        assert_eq!(self.ring.field(), target.field());
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.clone(), m.remap(map, target.arity())))
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Moves into a ring with the same variables but another field, reducing
    /// rational coefficients modulo p when needed.
    pub fn change_field(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if target.names() != self.ring.names() {
            return Err(Error::RingMismatch("variable lists differ".into()));
        }
        let field = target.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            terms.push((field.convert(c)?, *m));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Canonical associate: monic over `F_p`; over `Q`, integer coefficients
    /// with content 1 and positive leading coefficient.
    pub fn normalized(&self) -> Polynomial {
        match self.ring.field() {
            Field::Prime(_) => self.monic(),
            Field::Rationals => {
                if self.is_zero() {
                    return self.clone();
                }
                let mut den = BigInt::one();
                let mut num_gcd = BigInt::zero();
                for (c, _) in &self.terms {
                    let r = c.as_rational().expect("rational coefficient");
                    den = den.lcm(r.denom());
                    num_gcd = num_gcd.gcd(r.numer());
                }
                let lc_neg = self.terms[0].0.is_negative();
                let mut factor = BigRational::new(den, num_gcd);
                if lc_neg {
                    factor = -factor;
                }
                let scaled = self.scale(&Coefficient::Rational(factor));
                debug_assert!(scaled
                    .terms
                    .iter()
                    .all(|t| t.0.as_rational().unwrap().is_integer()));
                debug_assert!(scaled.terms[0].0.as_rational().unwrap().is_positive());
                scaled
            }
        }
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        assert!(!g.is_zero(), "division by zero polynomial");
        let order = self.ring.order();
        let (glc, glm) = (&g.terms[0].0, g.terms[0].1);
        let ginv = glc.inv();
        let mut rem = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some((c, m)) = rem.first().cloned() {
            if !glm.divides(&m) {
                return None;
            }
            let qm = glm.quotient_of(&m);
            let qc = c.mul(&ginv);
            rem = merge_sub_scaled(&rem, &qc, &qm, &g.terms, order);
            quot.push((qc, qm));
        }
        Some(Polynomial::from_canonical(&self.ring, quot))
    }

    /// `self^q` computed termwise, valid in characteristic `p` for `q` a power of `p`.
    pub(crate) fn frobenius_unchecked(&self, q: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.pow(q as u64), m.scale(q)))
            .collect();
        // scaling every exponent by q preserves any monomial order
        Polynomial::from_canonical(&self.ring, terms)
    }

    /// Every term has some exponent at least `q`, i.e. membership in the
    /// bracket power of the homogeneous maximal ideal.
    pub fn in_bracket_power_of_maximal(&self, q: u32) -> bool {
        self.terms
            .iter()
            .all(|(_, m)| m.exponents().iter().any(|&e| e as u32 >= q))
    }

    /// Value at a point of the coefficient field.
    pub fn evaluate(&self, point: &[Coefficient]) -> Coefficient {
        assert_eq!(point.len(), self.ring.arity());
        let field = self.ring.field();
        let mut acc = field.zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// `a - c * m * b` for canonical term lists.
pub(crate) fn merge_sub_scaled(
    a: &[Term],
    c: &Coefficient,
    m: &Monomial,
    b: &[Term],
    order: MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let neg = c.neg();
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b.first().map(|t| m.mul(&t.1));
    while i < a.len() {
        let Some(bm) = bj else { break };
        match order.cmp(&a[i].1, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((neg.mul(&b[j].0), bm));
                j += 1;
                bj = b.get(j).map(|t| m.mul(&t.1));
            }
            Ordering::Equal => {
                let s = a[i].0.add(&neg.mul(&b[j].0));
                if !s.is_zero() {
                    out.push((s, bm));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| m.mul(&t.1));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((neg.mul(&b[j].0), m.mul(&b[j].1)));
        j += 1;
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.compatible(&other.ring) {
            return false;
        }
        if self.ring.order() == other.ring.order() {
            self.terms == other.terms
        } else {
            self.terms == other.in_ring(&self.ring).terms
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_poly(self))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.arith(rhs, $op).expect("polynomial ring mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(c, m)| (c.neg(), *m)).collect();
        Polynomial::from_canonical(&self.ring, terms)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
