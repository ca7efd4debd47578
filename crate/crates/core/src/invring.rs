//! Invariants of a matrix group: transfer, Reynolds operator, graded invariant
//! spaces, the Hilbert ideal and its coinvariant quotient, minimal generator
//! degrees, and the Steinberg criterion.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, quotient_summary, CoinvariantSummary, GroebnerBasis};
use crate::linalg::{nullspace, EchelonBasis, SparseVec};
use crate::polyalg::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::repaction::{act, Matrix, MatrixGroup};

/// `sum_{sigma in G} sigma(f)`.
pub fn transfer(f: &Polynomial, g: &MatrixGroup) -> Result<Polynomial> {
    check_ring(f, g)?;
    let mut acc = f.ring().zero();
    for m in g.elements() {
        acc = &acc + &act(m, f)?;
    }
    Ok(acc)
}

/// `Tr(f) / |G|`; only defined when the characteristic does not divide `|G|`.
pub fn reynolds(f: &Polynomial, g: &MatrixGroup) -> Result<Polynomial> {
    if g.is_modular() {
        return Err(Error::Modular {
            characteristic: g.field().characteristic(),
            order: g.order(),
        });
    }
    let t = transfer(f, g)?;
    Ok(t.scale(&g.field().from_i64(g.order() as i64).inv()))
}

fn check_ring(f: &Polynomial, g: &MatrixGroup) -> Result<()> {
    if f.ring().nvars != g.dim() {
        return Err(Error::DimensionMismatch {
            left: g.dim(),
            right: f.ring().nvars,
        });
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Column indexing of the degree-`d` monomials, descending canonical order.
pub(crate) struct DegreeBasis {
    pub monomials: Vec<Monomial>,
    position: HashMap<Monomial, usize>,
    ring: Ring,
}

impl DegreeBasis {
    pub fn new(ring: Ring, d: u32) -> Self {
        let monomials = Monomial::all_of_degree(ring.nvars, d);
        let position = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        DegreeBasis {
            monomials,
            position,
            ring,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn to_vec(&self, f: &Polynomial) -> SparseVec {
        f.terms()
            .map(|(m, c)| (self.position[m], c.clone()))
            .collect()
    }

    pub fn to_poly(&self, v: &SparseVec) -> Polynomial {
        Polynomial::from_terms(
            self.ring,
            v.iter().map(|(&i, c)| (self.monomials[i].clone(), c.clone())),
        )
    }
}

/// Images of monomials under one matrix, with per-variable power caching.
struct MonomialAction {
    powers: Vec<Vec<Polynomial>>,
    ring: Ring,
}

impl MonomialAction {
    fn new(m: &Matrix, ring: Ring) -> Self {
        MonomialAction {
            powers: m
                .variable_images(ring)
                .into_iter()
                .map(|p| vec![ring.one(), p])
                .collect(),
            ring,
        }
    }

    fn image(&mut self, mono: &Monomial) -> Polynomial {
        let mut t = self.ring.one();
        for (i, &e) in mono.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let cache = &mut self.powers[i];
            while cache.len() <= e as usize {
                let next = &cache[cache.len() - 1] * &cache[1];
                cache.push(next);
            }
            t = &t * &cache[e as usize];
        }
        t
    }
}

/// Basis of the degree-`d` invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSpace {
    pub degree: u32,
    pub basis: Vec<Polynomial>,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Nullspace of the stacked maps `sigma - id` on degree-`d` forms, `sigma` over the generators.
pub fn invariant_basis(g: &MatrixGroup, d: u32) -> InvariantSpace {
    let ring = g.ring();
    let cols = DegreeBasis::new(ring, d);
    let mut rows: Vec<SparseVec> = Vec::new();
    for gen in g.generators() {
        if gen.is_identity() {
            continue;
        }
        let mut action = MonomialAction::new(gen, ring);
        // Row per output monomial, keyed by its column.
        let mut by_output: HashMap<usize, SparseVec> = HashMap::new();
        for (c, mono) in cols.monomials.iter().enumerate() {
            let mut img = action.image(mono);
            img.add_term(mono.clone(), &ring.field.from_i64(-1));
            for (out, coeff) in img.terms() {
                by_output
                    .entry(cols.position[out])
                    .or_default()
                    .insert(c, coeff.clone());
            }
        }
        let mut keyed: Vec<(usize, SparseVec)> = by_output.into_iter().collect();
        keyed.sort_by_key(|(k, _)| *k);
        rows.extend(keyed.into_iter().map(|(_, r)| r));
    }
    let basis = nullspace(ring.field, &rows, cols.len())
        .iter()
        .map(|v| cols.to_poly(v))
        .collect();
    InvariantSpace { degree: d, basis }
}

/// The Hilbert ideal `F[V]^G_+ F[V]` as a reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertIdealResult {
    pub groebner: GroebnerBasis,
    /// Invariant generators actually added, in order of degree.
    pub generators: Vec<Polynomial>,
    pub generator_degrees: Vec<u32>,
    pub cutoff_degree: u32,
}

impl HilbertIdealResult {
    pub fn summary(&self) -> CoinvariantSummary {
        quotient_summary(&self.groebner.lead_term_ideal(), self.groebner.order().nvars())
    }
}

/// `|G| * dim V`, at least 1.
pub fn default_degree_cap(g: &MatrixGroup) -> u32 {
    (g.order() * g.dim()).max(1) as u32
}

/// Hilbert ideal under lex with variable 0 highest.
pub fn hilbert_ideal(g: &MatrixGroup, max_degree_cap: u32) -> Result<HilbertIdealResult> {
    hilbert_ideal_with_order(g, max_degree_cap, &MonomialOrder::lex(g.dim()))
}

/// Adds invariants degree by degree until the partial quotient is finite with
/// top degree `t` and the current degree is at least `t + 1`.
///
/// The partial ideal is contained in the Hilbert ideal, so `t` bounds the true
/// top degree from above, and the Hilbert ideal is generated in degrees up to
/// its top degree plus one.
pub fn hilbert_ideal_with_order(
    g: &MatrixGroup,
    max_degree_cap: u32,
    order: &MonomialOrder,
) -> Result<HilbertIdealResult> {
    let ring = g.ring();
    let mut gb = GroebnerBasis::empty(order.clone());
    let mut generators = Vec::new();
    let mut degrees = Vec::new();
    for d in 1..=max_degree_cap.max(1) {
        let inv = invariant_basis(g, d);
        let cols = DegreeBasis::new(ring, d);
        let mut span = EchelonBasis::new(ring.field);
        let mut fresh = Vec::new();
        for f in inv.basis {
            let r = gb.normal_form(&f)?;
            if span.insert(&cols.to_vec(&r)) {
                fresh.push(f);
            }
        }
        if !fresh.is_empty() {
            let mut input = gb.basis().to_vec();
            input.extend(fresh.iter().cloned());
            gb = buchberger(&input, order)?;
            degrees.extend(std::iter::repeat(d).take(fresh.len()));
            generators.extend(fresh);
        }
        let result = HilbertIdealResult {
            groebner: gb.clone(),
            generators: generators.clone(),
            generator_degrees: degrees.clone(),
            cutoff_degree: d,
        };
        let summary = result.summary();
        if let Some(t) = summary.top_degree {
            if d >= t + 1 {
                return Ok(result);
            }
        }
        if d == max_degree_cap.max(1) {
            return Err(Error::DegreeCapExceeded {
                cap: max_degree_cap,
                partial: Box::new(result),
            });
        }
    }
    unreachable!("loop returns at the cap")
}

pub fn coinvariant_summary(g: &MatrixGroup, max_degree_cap: u32) -> Result<CoinvariantSummary> {
    Ok(hilbert_ideal(g, max_degree_cap)?.summary())
}

/// Degrees of a minimal homogeneous generating set of `F[V]^G`, up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalGenerators {
    /// Sorted multiset of generator degrees.
    pub degrees: Vec<u32>,
    #[serde(skip)]
    pub generators: Vec<Polynomial>,
    pub bound: u32,
    /// Set in the modular case: degrees above `bound` were not searched and no
    /// a priori bound backs it.
    pub bound_relative: bool,
    /// The generators found form a homogeneous system of parameters whose degree
    /// product is `|G|`, which proves the invariant ring is polynomial on them
    /// and that the list is complete.
    pub certified_polynomial: bool,
}

/// `|G|` when non-modular; `|G| * dim V` (bound-relative) otherwise.
pub fn default_generator_bound(g: &MatrixGroup) -> (u32, bool) {
    if g.is_modular() {
        (default_degree_cap(g), true)
    } else {
        (g.order().max(1) as u32, false)
    }
}

pub fn minimal_generators(g: &MatrixGroup, degree_bound: u32) -> Result<MinimalGenerators> {
    let ring = g.ring();
    let n = g.dim();
    let mut spaces: Vec<InvariantSpace> = vec![InvariantSpace {
        degree: 0,
        basis: vec![ring.one()],
    }];
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut degrees: Vec<u32> = Vec::new();
    let mut certified = false;
    for d in 1..=degree_bound {
        let inv = invariant_basis(g, d);
        let cols = DegreeBasis::new(ring, d);
        let mut decomposable = EchelonBasis::new(ring.field);
        for (h, &a) in gens.iter().zip(&degrees) {
            if a >= d {
                continue;
            }
            for u in &spaces[(d - a) as usize].basis {
                decomposable.insert(&cols.to_vec(&(h * u)));
            }
        }
        for f in &inv.basis {
            if decomposable.insert(&cols.to_vec(f)) {
                gens.push(f.clone());
                degrees.push(d);
            }
        }
        spaces.push(inv);
        if gens.len() == n && is_certified_polynomial(g, &gens, &degrees)? {
            certified = true;
            break;
        }
    }
    let modular = g.is_modular();
    Ok(MinimalGenerators {
        degrees,
        generators: gens,
        bound: degree_bound,
        bound_relative: modular && !certified,
        certified_polynomial: certified,
    })
}

fn is_certified_polynomial(g: &MatrixGroup, gens: &[Polynomial], degrees: &[u32]) -> Result<bool> {
    let product: u64 = degrees.iter().map(|&d| d as u64).product();
    if product != g.order() as u64 {
        return Ok(false);
    }
    let gb = buchberger(gens, &MonomialOrder::grevlex(g.dim()))?;
    Ok(quotient_summary(&gb.lead_term_ideal(), g.dim()).is_finite())
}

/// Largest degree of a minimal generator, 0 when there are none.
pub fn noether_number(g: &MatrixGroup, degree_bound: u32) -> Result<u32> {
    Ok(minimal_generators(g, degree_bound)?
        .degrees
        .into_iter()
        .max()
        .unwrap_or(0))
}

/// Polynomial iff a minimal generating set has exactly `dim V` elements.
pub fn is_polynomial(g: &MatrixGroup, degree_bound: u32) -> Result<bool> {
    Ok(minimal_generators(g, degree_bound)?.degrees.len() == g.dim())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinbergReport {
    pub coinvariant_dim: u64,
    pub group_order: u64,
    pub minimal_generator_count: usize,
    pub is_polynomial: bool,
    /// `coinvariant_dim == group_order` exactly when the ring is polynomial.
    pub consistent: bool,
    pub generator_bound: u32,
    pub bound_relative: bool,
}

pub fn steinberg_check(g: &MatrixGroup) -> Result<SteinbergReport> {
    let summary = coinvariant_summary(g, default_degree_cap(g))?;
    let dim = summary.dim().expect("Hilbert ideal quotients are finite");
    let (bound, _) = default_generator_bound(g);
    let gens = minimal_generators(g, bound)?;
    let is_poly = gens.degrees.len() == g.dim();
    let order = g.order() as u64;
    Ok(SteinbergReport {
        coinvariant_dim: dim,
        group_order: order,
        minimal_generator_count: gens.degrees.len(),
        is_polynomial: is_poly,
        consistent: (dim == order) == is_poly,
        generator_bound: bound,
        bound_relative: gens.bound_relative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Dimension;
    use crate::polyalg::Field;
    use crate::repaction::{build_rep, RepSpec};

    fn p(r: Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn transfer_examples() {
        let sign = build_rep(&RepSpec::negation(1, 0)).unwrap();
        assert!(transfer(&sign.ring().var(0), &sign).unwrap().is_zero());
        let j = build_rep(&RepSpec::jordan(2, 2)).unwrap();
        assert!(transfer(&j.ring().one(), &j).unwrap().is_zero());
        let s2 = build_rep(&RepSpec::symmetric(2, 0)).unwrap();
        assert_eq!(transfer(&s2.ring().var(0), &s2).unwrap(), p(s2.ring(), "x1 + x2"));
    }

    #[test]
    fn transfer_dimension_mismatch() {
        let s2 = build_rep(&RepSpec::symmetric(2, 0)).unwrap();
        let r3 = Ring::new(3, Field::RATIONALS);
        assert!(matches!(transfer(&r3.var(0), &s2), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn reynolds_examples() {
        let s2 = build_rep(&RepSpec::symmetric(2, 0)).unwrap();
        let r = s2.ring();
        assert_eq!(reynolds(&r.var(0), &s2).unwrap(), p(r, "1/2*x1 + 1/2*x2"));
        let inv = p(r, "x1*x2");
        assert_eq!(reynolds(&inv, &s2).unwrap(), inv);
        let j = build_rep(&RepSpec::jordan(2, 2)).unwrap();
        assert!(matches!(reynolds(&j.ring().var(0), &j), Err(Error::Modular { .. })));
    }

    #[test]
    fn invariant_bases() {
        let s2 = build_rep(&RepSpec::symmetric(2, 0)).unwrap();
        assert_eq!(invariant_basis(&s2, 1).basis, vec![p(s2.ring(), "x1 + x2")]);
        let sign = build_rep(&RepSpec::negation(1, 0)).unwrap();
        assert!(invariant_basis(&sign, 1).basis.is_empty());
        let j3 = build_rep(&RepSpec::jordan(3, 2)).unwrap();
        assert_eq!(invariant_basis(&j3, 1).basis, vec![j3.ring().var(0)]);
    }

    #[test]
    fn hilbert_ideal_trivial() {
        let g = build_rep(&RepSpec::trivial(3, 0)).unwrap();
        let h = hilbert_ideal(&g, default_degree_cap(&g)).unwrap();
        assert_eq!(h.cutoff_degree, 1);
        let r = g.ring();
        assert_eq!(h.groebner.basis(), &[r.var(0), r.var(1), r.var(2)]);
    }

    #[test]
    fn hilbert_ideal_s2() {
        let g = build_rep(&RepSpec::symmetric(2, 0)).unwrap();
        let h = hilbert_ideal(&g, default_degree_cap(&g)).unwrap();
        let r = g.ring();
        assert_eq!(h.groebner.basis(), &[p(r, "x1 + x2"), p(r, "x2^2")]);
        assert_eq!(h.generator_degrees, vec![1, 2]);
        assert_eq!(h.summary().top_degree, Some(1));
    }

    #[test]
    fn hilbert_ideal_jordan_two() {
        let g = build_rep(&RepSpec::jordan(2, 2)).unwrap();
        let h = hilbert_ideal(&g, default_degree_cap(&g)).unwrap();
        assert_eq!(h.groebner.lead_terms(), vec![Monomial::new([1, 0]), Monomial::new([0, 2])]);
        assert_eq!(h.cutoff_degree, 2);
    }

    #[test]
    fn degree_cap_reports_partial() {
        let g = build_rep(&RepSpec::symmetric(3, 0)).unwrap();
        match hilbert_ideal(&g, 2) {
            Err(Error::DegreeCapExceeded { cap, partial }) => {
                assert_eq!(cap, 2);
                assert_eq!(partial.cutoff_degree, 2);
                assert_eq!(partial.generator_degrees, vec![1, 2]);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn summaries() {
        let s3 = build_rep(&RepSpec::symmetric(3, 0)).unwrap();
        let s = coinvariant_summary(&s3, default_degree_cap(&s3)).unwrap();
        assert_eq!((s.dimension, s.top_degree), (Dimension::Finite(6), Some(3)));
        let neg = build_rep(&RepSpec::negation(2, 0)).unwrap();
        let s = coinvariant_summary(&neg, default_degree_cap(&neg)).unwrap();
        assert_eq!((s.dimension, s.top_degree), (Dimension::Finite(3), Some(1)));
        let t = build_rep(&RepSpec::trivial(2, 0)).unwrap();
        let s = coinvariant_summary(&t, default_degree_cap(&t)).unwrap();
        assert_eq!((s.dimension, s.top_degree), (Dimension::Finite(1), Some(0)));
    }

    #[test]
    fn generator_degrees() {
        let s2 = build_rep(&RepSpec::symmetric(2, 0)).unwrap();
        assert_eq!(minimal_generators(&s2, 2).unwrap().degrees, vec![1, 2]);
        let neg = build_rep(&RepSpec::negation(2, 0)).unwrap();
        assert_eq!(minimal_generators(&neg, 2).unwrap().degrees, vec![2, 2, 2]);
        let t = build_rep(&RepSpec::trivial(3, 0)).unwrap();
        assert_eq!(minimal_generators(&t, 1).unwrap().degrees, vec![1, 1, 1]);
    }

    #[test]
    fn noether_numbers() {
        let s2 = build_rep(&RepSpec::symmetric(2, 0)).unwrap();
        assert_eq!(noether_number(&s2, 2).unwrap(), 2);
        let s3 = build_rep(&RepSpec::symmetric(3, 0)).unwrap();
        assert_eq!(noether_number(&s3, 6).unwrap(), 3);
        let neg = build_rep(&RepSpec::negation(2, 0)).unwrap();
        assert_eq!(noether_number(&neg, 2).unwrap(), 2);
    }

    #[test]
    fn polynomiality() {
        let s3 = build_rep(&RepSpec::symmetric(3, 0)).unwrap();
        assert!(is_polynomial(&s3, 6).unwrap());
        let neg = build_rep(&RepSpec::negation(2, 0)).unwrap();
        assert!(!is_polynomial(&neg, 2).unwrap());
        let t = build_rep(&RepSpec::trivial(2, 0)).unwrap();
        assert!(is_polynomial(&t, 1).unwrap());
    }

    #[test]
    fn modular_generators_flagged() {
        let j = build_rep(&RepSpec::vector_copies(RepSpec::jordan(2, 2), 2)).unwrap();
        let gens = minimal_generators(&j, 4).unwrap();
        assert!(gens.bound_relative);
        assert!(!gens.certified_polynomial);
        let j1 = build_rep(&RepSpec::jordan(2, 2)).unwrap();
        let gens = minimal_generators(&j1, 4).unwrap();
        assert!(gens.certified_polynomial);
        assert_eq!(gens.degrees, vec![1, 2]);
    }

    #[test]
    fn steinberg_examples() {
        let s3 = build_rep(&RepSpec::symmetric(3, 0)).unwrap();
        let r = steinberg_check(&s3).unwrap();
        assert_eq!((r.coinvariant_dim, r.group_order, r.is_polynomial, r.consistent), (6, 6, true, true));
        let neg = build_rep(&RepSpec::negation(2, 0)).unwrap();
        let r = steinberg_check(&neg).unwrap();
        assert_eq!((r.coinvariant_dim, r.group_order, r.is_polynomial, r.consistent), (3, 2, false, true));
        let z3 = build_rep(&RepSpec::diagonal(7, vec![3], vec![vec![1], vec![1]])).unwrap();
        let r = steinberg_check(&z3).unwrap();
        assert_eq!((r.coinvariant_dim, r.group_order, r.is_polynomial, r.consistent), (6, 3, false, true));
    }
}
