use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::field::{Field, Scalar};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// A polynomial ring `F[x_1, ..., x_n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    pub nvars: usize,
    pub field: Field,
}

impl Ring {
    pub fn new(nvars: usize, field: Field) -> Self {
        Ring { nvars, field }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(*self)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        Polynomial::from_terms(*self, [(Monomial::one(self.nvars), c)])
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable index {i} out of range");
        self.monomial(Monomial::var(self.nvars, i))
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::from_terms(*self, [(m, self.field.one())])
    }

    pub fn check(&self, other: &Ring) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }
}

/// Sparse polynomial with exact coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial, summing repeated monomials and dropping zeros.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars, "monomial outside ring");
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending canonical (lex, variable 0 highest) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .ok_or(Error::ZeroPolynomialDegree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.ring))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Leading term under `order`, `None` for zero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.ring.field.contains(c));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let mut out = Polynomial::zero(self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        assert!(self.ring.field.contains(c), "scalar from another field");
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates `f(images)`: variable `i` is replaced by `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars {
            return Err(Error::ImageCount {
                expected: self.ring.nvars,
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring,
            // A ring with no variables only holds constants.
            None => return Ok(self.clone()),
        };
        for img in images {
            target.check(&img.ring)?;
        }
        if target.field != self.ring.field {
            return Err(Error::FieldMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            for (m2, c2) in t.terms {
                out.add_term(m2, &c2);
            }
        }
        Ok(out)
    }

    /// Makes the leading coefficient (under `order`) equal to one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Re-embeds the polynomial in a ring with more variables, mapping variable `i` to `map[i]`.
    pub fn rename(&self, target: Ring, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars);
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut n = Monomial::one(target.nvars);
            for (i, &e) in m.exps().iter().enumerate() {
                n.set_exp(map[i], n.exp(map[i]) + e);
            }
            out.add_term(n, c);
        }
        out
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different rings; use the `try_` form to recover.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field.from_i64(-1))
    }
}
