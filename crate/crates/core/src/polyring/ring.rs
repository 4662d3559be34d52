use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::coeff::{Coefficient, Field};
use super::monomial::{MonomialOrder, MAX_VARS};
use super::poly::Polynomial;
use super::Monomial;
use crate::error::{Error, Result};

/// A polynomial ring `K[x_1, ..., x_n]` together with the term order used for
/// the canonical form of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S], field: Field, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceed the maximum of {MAX_VARS}",
                names.len()
            )));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !valid_identifier(n) {
                return Err(Error::InvalidRing(format!("invalid variable name `{n}`")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(Arc::new(PolyRing { names, field, order }))
    }

    /// Grevlex ring over `F_p` (p > 0) or `Q` (p = 0).
    pub fn with_characteristic<S: AsRef<str>>(names: &[S], characteristic: u64) -> Result<Arc<PolyRing>> {
        PolyRing::new(names, Field::from_characteristic(characteristic)?, MonomialOrder::Grevlex)
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field; the order may differ.
    pub fn compatible(&self, other: &PolyRing) -> bool {
        self.field == other.field && self.names == other.names
    }

    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<PolyRing> {
        if self.order == order {
            return self.clone();
        }
        Arc::new(PolyRing {
            names: self.names.clone(),
            field: self.field,
            order,
        })
    }

    pub fn with_field(&self, field: Field) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            names: self.names.clone(),
            field,
            order: self.order,
        })
    }

    /// A ring with `extra` prepended to the variable list; names are made
    /// fresh by appending underscores when they clash.
    pub fn prepend_fresh(&self, extra: &[&str], order: MonomialOrder) -> Result<Arc<PolyRing>> {
        let mut names: Vec<String> = Vec::with_capacity(self.arity() + extra.len());
        for e in extra {
            let mut n = e.to_string();
            while self.names.contains(&n) || names.contains(&n) {
                n.push('_');
            }
            names.push(n);
        }
        names.extend(self.names.iter().cloned());
        PolyRing::new(&names, self.field, order)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: Coefficient) -> Polynomial {
        Polynomial::from_terms(self, vec![(c, Monomial::one(self.arity()))])
    }

    pub fn integer(self: &Arc<Self>, n: i64) -> Polynomial {
        self.constant(self.field.from_i64(n))
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        assert!(i < self.arity(), "variable index out of range");
        Polynomial::from_terms(self, vec![(self.field.one(), Monomial::var(self.arity(), i))])
    }

    pub fn var_by_name(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        let i = self.index_of(name).ok_or_else(|| Error::UnknownVariable {
            name: name.to_string(),
            position: 0,
        })?;
        Ok(self.var(i))
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.arity()).map(|i| self.var(i)).collect()
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        super::parse::parse_poly(text, self)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({})", self.field, self.names.join(","), self.order)
    }
}
