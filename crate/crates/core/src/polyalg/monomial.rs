use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial in a fixed number of variables.
///
/// The derived `Ord` is lex with variable 0 highest, which is also the
/// canonical storage order for polynomial terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u16>) -> Self {
        Monomial(exps.into_iter().collect())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn set_exp(&mut self, i: usize, e: u16) {
        self.0[i] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, u16)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending canonical order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Monomial::one(nvars);
        if nvars == 0 {
            if d == 0 {
                out.push(cur);
            }
            return out;
        }
        fill_degree(&mut cur, 0, d, &mut out);
        out
    }
}

fn fill_degree(cur: &mut Monomial, i: usize, left: u32, out: &mut Vec<Monomial>) {
    let n = cur.nvars();
    if i == n - 1 {
        cur.0[i] = left as u16;
        out.push(cur.clone());
        cur.0[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur.0[i] = e as u16;
        fill_degree(cur, i + 1, left - e, out);
    }
    cur.0[i] = 0;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order: lex or grevlex over a variable priority list
/// (`priority[0]` is the most significant variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            if i >= priority.len() || seen[i] {
                return Err(Error::Parse(format!(
                    "priority {priority:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(MonomialOrder { kind, priority })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != self.nvars() || b.nvars() != self.nvars() {
            return Err(Error::RingMismatch {
                left: a.nvars(),
                right: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; callers guarantee matching variable counts.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &i in self.priority.iter().rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::lex(2);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 2])).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 3]), &m(&[1, 3])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn copies_order_matches_variable_index() {
        // Two copies of two variables, flattened as (i, j) -> 2*i + j:
        // x_{1,2} is index 1 and x_{2,1} is index 2.
        let o = MonomialOrder::lex(4);
        assert_eq!(
            o.compare(&Monomial::var(4, 1), &Monomial::var(4, 2)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_tiebreak() {
        let o = MonomialOrder::grevlex(3);
        // x*z < y^2 in grevlex with x > y > z.
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn compare_checks_ring() {
        let o = MonomialOrder::lex(2);
        assert!(o.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])).is_err());
    }

    #[test]
    fn priority_must_be_permutation() {
        assert!(MonomialOrder::with_priority(OrderKind::Lex, vec![0, 0]).is_err());
        let o = MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn degree_enumeration() {
        let all = Monomial::all_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], m(&[2, 0, 0]));
        assert_eq!(all[5], m(&[0, 0, 2]));
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }
}
