//! Exponent vectors and the term orders used by the Gröbner engine.

use std::cmp::Ordering;
use std::fmt;

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 16;

/// An exponent vector stored inline. Entries past the ring arity are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
    support: u32,
    arity: u8,
}

impl Monomial {
    pub fn one(arity: usize) -> Monomial {
        assert!(arity <= MAX_VARS, "arity {arity} exceeds {MAX_VARS}");
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
            support: 0,
            arity: arity as u8,
        }
    }

    pub fn var(arity: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(arity);
        m.set(i, 1);
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.set(i, e);
        }
        m
    }

    fn set(&mut self, i: usize, e: u32) {
        assert!(i < self.arity as usize, "variable index out of range");
        let e = u16::try_from(e).expect("exponent exceeds u16::MAX");
        self.degree = self.degree - self.exps[i] as u32 + e as u32;
        self.exps[i] = e;
        if e > 0 {
            self.support |= 1 << i;
        } else {
            self.support &= !(1 << i);
        }
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Bit `i` is set iff variable `i` occurs.
    #[inline]
    pub fn support(&self) -> u32 {
        self.support
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.arity as usize]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.arity as usize {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
            support: self.support | other.support,
            arity: self.arity,
        }
    }

    /// True iff `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.support & !other.support != 0 || self.degree > other.degree {
            return false;
        }
        (0..self.arity as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one(self.arity as usize);
        let mut support = 0;
        for i in 0..self.arity as usize {
            let e = other.exps[i] - self.exps[i];
            m.exps[i] = e;
            if e > 0 {
                support |= 1 << i;
            }
        }
        m.degree = other.degree - self.degree;
        m.support = support;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one(self.arity as usize);
        let mut deg = 0;
        for i in 0..self.arity as usize {
            let e = self.exps[i].max(other.exps[i]);
            m.exps[i] = e;
            deg += e as u32;
        }
        m.degree = deg;
        m.support = self.support | other.support;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support & other.support == 0
    }

    /// Multiplies every exponent by `q`.
    pub fn scale(&self, q: u32) -> Monomial {
        let mut m = *self;
        for i in 0..self.arity as usize {
            m.exps[i] = u16::try_from(self.exps[i] as u32 * q).expect("exponent overflow");
        }
        m.degree = self.degree * q;
        m
    }

    /// Reindexes into a ring of `arity` variables: variable `i` goes to `map[i]`.
    pub fn remap(&self, map: &[usize], arity: usize) -> Monomial {
        let mut m = Monomial::one(arity);
        for (i, &e) in self.exponents().iter().enumerate() {
            if e > 0 {
                m.set(map[i], e as u32);
            }
        }
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// A monomial order on exponent vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: total degree first, ties broken by the
    /// last variable, where the larger exponent makes the monomial smaller.
    Grevlex,
    Lex,
    /// The first `k` variables compared by grevlex, then the remaining ones.
    /// Any monomial involving the first block beats every monomial that does not.
    Block(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => {
                a.degree.cmp(&b.degree).then_with(|| revlex(a, b, 0, a.arity()))
            }
            MonomialOrder::Lex => a.exps[..a.arity()].cmp(&b.exps[..b.arity()]),
            MonomialOrder::Block(k) => {
                let k = k.min(a.arity());
                let da: u32 = a.exps[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = b.exps[..k].iter().map(|&e| e as u32).sum();
                da.cmp(&db)
                    .then_with(|| revlex(a, b, 0, k))
                    .then_with(|| (a.degree - da).cmp(&(b.degree - db)))
                    .then_with(|| revlex(a, b, k, a.arity()))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(k) => format!("block({k})"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[inline]
fn revlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
