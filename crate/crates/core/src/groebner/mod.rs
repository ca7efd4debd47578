//! Buchberger's algorithm, normal forms and zero-dimensional quotient analysis.

mod quotient;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::Result;
use crate::polyalg::{Monomial, MonomialOrder, Polynomial, Ring, Scalar};

pub use quotient::{quotient_summary, CoinvariantSummary, Dimension, LeadTermIdeal};

/// Terms sorted in descending order under a fixed monomial order.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Monomial, Scalar)>,
}

impl Sorted {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Sorted { terms }
    }

    fn to_poly(&self, ring: Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.inv();
                for t in &mut self.terms {
                    t.1 = t.1.mul(&inv);
                }
            }
        }
    }

    /// `self - c * m * g`, where `m * g` keeps its order because monomial orders are multiplicative.
    fn sub_scaled(&self, c: &Scalar, m: &Monomial, g: &Sorted, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc.mul(c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, bc.neg()));
                }
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (bm, bc) = b.next().unwrap();
                        out.push((bm, bc.neg()));
                    }
                    Ordering::Equal => {
                        let (xm, xc) = a.next().unwrap();
                        let (_, yc) = b.next().unwrap();
                        let s = xc.sub(&yc);
                        if !s.is_zero() {
                            out.push((xm.clone(), s));
                        }
                    }
                },
            }
        }
        Sorted { terms: out }
    }
}

/// Fully reduces `f` by `basis`; the remainder has no term divisible by a basis lead term.
fn reduce(f: Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut p = f;
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    let mut start = 0;
    // `start` indexes the first term of `p` not yet known to be irreducible; terms
    // before it have already been moved to `rem`, so we drain lazily.
    while start < p.terms.len() {
        let (lm, lc) = &p.terms[start];
        let divisor = basis.iter().find(|g| g.lead().divides(lm));
        match divisor {
            Some(g) => {
                let q = lm.div(g.lead()).expect("divisible");
                let c = lc.div(&g.terms[0].1);
                let tail = Sorted {
                    terms: p.terms[start..].to_vec(),
                };
                p = tail.sub_scaled(&c, &q, g, order);
                start = 0;
            }
            None => {
                rem.push(p.terms[start].clone());
                start += 1;
                if start == p.terms.len() {
                    break;
                }
                // Drop the already-collected prefix so later rebuilds stay small.
                if start > 32 {
                    p.terms.drain(..start);
                    start = 0;
                }
            }
        }
    }
    Sorted { terms: rem }
}

fn check_rings(polys: &[Polynomial], order: &MonomialOrder) -> Result<Option<Ring>> {
    let Some(first) = polys.first() else {
        return Ok(None);
    };
    let ring = first.ring();
    for p in polys {
        ring.check(&p.ring())?;
    }
    if order.nvars() != ring.nvars {
        return Err(crate::error::Error::RingMismatch {
            left: order.nvars(),
            right: ring.nvars,
        });
    }
    Ok(Some(ring))
}

/// Multivariate division remainder of `f` by `basis` under `order`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    let mut all = vec![f.clone()];
    all.extend(basis.iter().cloned());
    check_rings(&all, order)?;
    let sorted: Vec<Sorted> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::from_poly(g, order))
        .collect();
    Ok(reduce(Sorted::from_poly(f, order), &sorted, order).to_poly(f.ring()))
}

/// Division with quotients: returns `(q, r)` with `f = sum q_i g_i + r`.
pub fn divide(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let mut all = vec![f.clone()];
    all.extend(basis.iter().cloned());
    check_rings(&all, order)?;
    let ring = f.ring();
    let mut quotients = vec![ring.zero(); basis.len()];
    let mut p = f.clone();
    let mut rem = ring.zero();
    while let Some((lm, lc)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = basis.iter().enumerate().find_map(|(i, g)| {
            let (gm, gc) = g.leading_term(order)?;
            lm.div(gm).map(|q| (i, q, lc.div(gc)))
        });
        match hit {
            Some((i, q, c)) => {
                let step = ring.monomial(q).scale(&c);
                p = &p - &(&step * &basis[i]);
                quotients[i] = &quotients[i] + &step;
            }
            None => {
                let t = ring.monomial(lm).scale(&lc);
                p = &p - &t;
                rem = &rem + &t;
            }
        }
    }
    Ok((quotients, rem))
}

/// A reduced Gröbner basis, sorted by descending lead term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    ring: Option<Ring>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn empty(order: MonomialOrder) -> Self {
        GroebnerBasis {
            order,
            ring: None,
            basis: Vec::new(),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ring(&self) -> Option<Ring> {
        self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn lead_terms(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_term(&self.order).expect("nonzero").0.clone())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.basis, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        ideal_membership(f, self)
    }

    pub fn lead_term_ideal(&self) -> LeadTermIdeal {
        lead_term_ideal(self)
    }
}

/// `true` iff `f` reduces to zero modulo `gb`.
pub fn ideal_membership(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    if let Some(ring) = gb.ring {
        ring.check(&f.ring())?;
    }
    Ok(gb.normal_form(f)?.is_zero())
}

pub fn lead_term_ideal(gb: &GroebnerBasis) -> LeadTermIdeal {
    LeadTermIdeal::minimal(gb.lead_terms())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    lcm_degree: u32,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm with the normal selection strategy and both pair criteria.
pub fn buchberger(generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let Some(ring) = check_rings(generators, order)? else {
        return Ok(GroebnerBasis::empty(order.clone()));
    };
    let mut g: Vec<Sorted> = Vec::new();
    let mut pairs: BTreeSet<Pair> = BTreeSet::new();

    // Inter-reduce the input first so the pair set starts small.
    let mut input: Vec<Sorted> = generators
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Sorted::from_poly(p, order))
        .collect();
    input.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    for f in input {
        add_element(f, &mut g, &mut pairs, order);
    }

    while let Some(pair) = pairs.pop_first() {
        let (gi, gj) = (&g[pair.i], &g[pair.j]);
        if gi.lead().is_coprime(gj.lead()) {
            continue;
        }
        let lcm = gi.lead().lcm(gj.lead());
        if chain_criterion(&g, &pairs, pair.i, pair.j, &lcm) {
            continue;
        }
        let s = s_polynomial(gi, gj, &lcm, order);
        add_element(s, &mut g, &mut pairs, order);
    }

    Ok(GroebnerBasis {
        order: order.clone(),
        ring: Some(ring),
        basis: reduce_basis(g, order)
            .into_iter()
            .map(|s| s.to_poly(ring))
            .collect(),
    })
}

fn add_element(f: Sorted, g: &mut Vec<Sorted>, pairs: &mut BTreeSet<Pair>, order: &MonomialOrder) {
    let mut r = reduce(f, g, order);
    if r.terms.is_empty() {
        return;
    }
    r.make_monic();
    let k = g.len();
    for (i, gi) in g.iter().enumerate() {
        let lcm_degree = gi.lead().lcm(r.lead()).degree();
        pairs.insert(Pair { lcm_degree, i, j: k });
    }
    g.push(r);
}

fn chain_criterion(g: &[Sorted], pending: &BTreeSet<Pair>, i: usize, j: usize, lcm: &Monomial) -> bool {
    let is_pending = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let deg = g[a].lead().lcm(g[b].lead()).degree();
        pending.contains(&Pair { lcm_degree: deg, i: a, j: b })
    };
    (0..g.len()).any(|k| {
        k != i && k != j && g[k].lead().divides(lcm) && !is_pending(i, k) && !is_pending(j, k)
    })
}

fn s_polynomial(a: &Sorted, b: &Sorted, lcm: &Monomial, order: &MonomialOrder) -> Sorted {
    let ma = lcm.div(a.lead()).expect("lcm");
    let mb = lcm.div(b.lead()).expect("lcm");
    // Both inputs are monic.
    let scaled_a = Sorted {
        terms: a.terms.iter().map(|(m, c)| (m.mul(&ma), c.clone())).collect(),
    };
    let one = a.terms[0].1.field().one();
    scaled_a.sub_scaled(&one, &mb, b, order)
}

/// Minimalizes and inter-reduces a Gröbner basis; output sorted by descending lead term.
fn reduce_basis(mut g: Vec<Sorted>, order: &MonomialOrder) -> Vec<Sorted> {
    g.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    let mut minimal: Vec<Sorted> = Vec::new();
    for f in g {
        if !minimal.iter().any(|h| h.lead().divides(f.lead())) {
            minimal.push(f);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, s)| s.clone())
            .collect();
        let lead = minimal[i].terms[0].clone();
        let tail = Sorted {
            terms: minimal[i].terms[1..].to_vec(),
        };
        let mut r = reduce(tail, &others, order);
        r.terms.insert(0, lead);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(b.lead(), a.lead()));
    out
}
