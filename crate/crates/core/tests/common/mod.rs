//! Strategies and property bodies shared by the property tests and the
//! acceptance runner.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::sync::OnceLock;

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use coinv::davenport::{abelian_groups_up_to, davenport_exact, davenport_witness, olson_formula, FiniteAbelianGroup};
use coinv::groebner::{buchberger, quotient_summary};
use coinv::invring::{default_degree_cap, hilbert_ideal_with_order, reynolds};
use coinv::polarize::{copy_index, polarize};
use coinv::polyalg::{Field, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
use coinv::repaction::{act, build_rep, MatrixGroup, RepSpec};

pub type PropResult = Result<(), TestCaseError>;

pub fn fields() -> Vec<Field> {
    vec![
        Field::RATIONALS,
        Field::prime(2).unwrap(),
        Field::prime(5).unwrap(),
        Field::prime(101).unwrap(),
    ]
}

pub fn any_field() -> impl Strategy<Value = Field> {
    proptest::sample::select(fields())
}

/// Sparse polynomial with small integer coefficients.
pub fn poly_in(ring: Ring, max_terms: usize, max_exp: u16) -> impl Strategy<Value = Polynomial> {
    vec((vec(0..=max_exp, ring.nvars), -6i64..=6), 0..=max_terms).prop_map(move |ts| {
        Polynomial::from_terms(
            ring,
            ts.into_iter()
                .map(|(e, c)| (Monomial::new(e), ring.field.from_i64(c))),
        )
    })
}

/// Homogeneous polynomial of degree `d` built from random monomials.
pub fn homogeneous_in(ring: Ring, d: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let monos = Monomial::all_of_degree(ring.nvars, d);
    vec((proptest::sample::select(monos), -4i64..=4), 1..=max_terms).prop_map(move |ts| {
        Polynomial::from_terms(ring, ts.into_iter().map(|(m, c)| (m, ring.field.from_i64(c))))
    })
}

pub fn ring_and_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (any_field(), 1usize..=3).prop_flat_map(|(f, n)| {
        let r = Ring::new(n, f);
        (poly_in(r, 5, 3), poly_in(r, 5, 3), poly_in(r, 5, 3))
    })
}

pub fn ring_axioms((a, b, c): (Polynomial, Polynomial, Polynomial)) -> PropResult {
    let r = a.ring();
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&a + &r.zero(), a.clone());
    prop_assert_eq!(&a * &r.one(), a.clone());
    prop_assert!((&a - &a).is_zero());
    prop_assert_eq!(&(&a + &b) - &b, a.clone());
    prop_assert_eq!(&a + &(-&a), r.zero());
    Ok(())
}

pub fn substitution_case() -> impl Strategy<Value = (Polynomial, Polynomial, Vec<Polynomial>)> {
    (any_field(), 1usize..=3, 1usize..=3).prop_flat_map(|(f, n, k)| {
        let src = Ring::new(n, f);
        let dst = Ring::new(k, f);
        (poly_in(src, 4, 2), poly_in(src, 4, 2), vec(poly_in(dst, 3, 2), n))
    })
}

/// Substitution is a ring homomorphism and the identity substitution is trivial.
pub fn substitution_homomorphism((a, b, images): (Polynomial, Polynomial, Vec<Polynomial>)) -> PropResult {
    let s = |p: &Polynomial| p.substitute(&images).unwrap();
    prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
    let r = a.ring();
    let ids: Vec<Polynomial> = (0..r.nvars).map(|i| r.var(i)).collect();
    prop_assert_eq!(a.substitute(&ids).unwrap(), a.clone());
    Ok(())
}

pub fn order_case() -> impl Strategy<Value = (MonomialOrder, Monomial, Monomial, Monomial)> {
    (1usize..=4).prop_flat_map(|n| {
        let mono = || vec(0u16..=4, n).prop_map(Monomial::new);
        let order = (
            prop_oneof![Just(OrderKind::Lex), Just(OrderKind::Grevlex)],
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(|(k, p)| MonomialOrder::with_priority(k, p).unwrap());
        (order, mono(), mono(), mono())
    })
}

/// Monomial orders are total, transitive, multiplicative and well-founded at 1.
pub fn order_axioms((o, a, b, c): (MonomialOrder, Monomial, Monomial, Monomial)) -> PropResult {
    let ab = o.compare(&a, &b).unwrap();
    prop_assert_eq!(ab, o.compare(&b, &a).unwrap().reverse());
    prop_assert_eq!(ab == Ordering::Equal, a == b);
    prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)).unwrap(), ab);
    prop_assert_ne!(o.compare(&Monomial::one(a.nvars()), &a).unwrap(), Ordering::Greater);
    if ab == Ordering::Less && o.compare(&b, &c).unwrap() == Ordering::Less {
        prop_assert_eq!(o.compare(&a, &c).unwrap(), Ordering::Less);
    }
    if a.divides(&b) {
        prop_assert_ne!(ab, Ordering::Greater);
    }
    Ok(())
}

/// Small groups used by the action and invariant properties.
pub fn group_specs() -> Vec<RepSpec> {
    vec![
        RepSpec::symmetric(2, 0),
        RepSpec::symmetric(3, 0),
        RepSpec::negation(2, 0),
        RepSpec::jordan(2, 2),
        RepSpec::jordan(3, 2),
        RepSpec::diagonal(7, vec![3], vec![vec![1], vec![2]]),
        RepSpec::symmetric(3, 5),
        RepSpec::regular(RepSpec::symmetric(2, 0), 0),
        RepSpec::diagonal(3, vec![2, 2], vec![vec![0, 1], vec![1, 0]]),
    ]
}

pub fn groups() -> &'static [MatrixGroup] {
    static GROUPS: OnceLock<Vec<MatrixGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| group_specs().iter().map(|s| build_rep(s).unwrap()).collect())
}

pub fn nonmodular_group_indices() -> Vec<usize> {
    (0..groups().len()).filter(|&i| !groups()[i].is_modular()).collect()
}

pub fn action_case() -> impl Strategy<Value = (usize, usize, usize, Polynomial, Polynomial)> {
    (0..groups().len()).prop_flat_map(|gi| {
        let g = &groups()[gi];
        let r = g.ring();
        (
            Just(gi),
            0..g.order(),
            0..g.order(),
            poly_in(r, 4, 3),
            poly_in(r, 3, 2),
        )
    })
}

/// `(ab).f = a.(b.f)`, `1.f = f`, and each element acts as a ring homomorphism.
pub fn action_axioms((gi, a, b, f, h): (usize, usize, usize, Polynomial, Polynomial)) -> PropResult {
    let g = &groups()[gi];
    let (ma, mb) = (g.element(a), g.element(b));
    let ab = ma.mul(mb).unwrap();
    prop_assert_eq!(act(&ab, &f).unwrap(), act(ma, &act(mb, &f).unwrap()).unwrap());
    prop_assert_eq!(g.act(0, &f).unwrap(), f.clone());
    prop_assert_eq!(
        act(ma, &(&f * &h)).unwrap(),
        &act(ma, &f).unwrap() * &act(ma, &h).unwrap()
    );
    Ok(())
}

pub fn reynolds_case() -> impl Strategy<Value = (usize, Polynomial)> {
    proptest::sample::select(nonmodular_group_indices())
        .prop_flat_map(|gi| (Just(gi), poly_in(groups()[gi].ring(), 4, 3)))
}

/// The Reynolds operator is an idempotent projection onto invariants.
pub fn reynolds_idempotent((gi, f): (usize, Polynomial)) -> PropResult {
    let g = &groups()[gi];
    let rf = reynolds(&f, g).unwrap();
    prop_assert_eq!(reynolds(&rf, g).unwrap(), rf.clone());
    for &i in g.generator_indices() {
        prop_assert_eq!(g.act(i, &rf).unwrap(), rf.clone());
    }
    Ok(())
}

pub fn ideal_case() -> impl Strategy<Value = (Vec<Polynomial>, MonomialOrder)> {
    (any_field(), 2usize..=3).prop_flat_map(|(f, n)| {
        let r = Ring::new(n, f);
        let order = prop_oneof![Just(MonomialOrder::lex(n)), Just(MonomialOrder::grevlex(n))];
        (vec(poly_in(r, 3, 2), 1..=3), order)
    })
}

/// Recomputing a reduced basis from itself changes nothing, and every input
/// generator reduces to zero.
pub fn groebner_idempotent((gens, order): (Vec<Polynomial>, MonomialOrder)) -> PropResult {
    let gb = buchberger(&gens, &order).unwrap();
    let again = buchberger(gb.basis(), &order).unwrap();
    prop_assert_eq!(gb.basis(), again.basis());
    for g in &gens {
        prop_assert!(gb.contains(g).unwrap());
    }
    Ok(())
}

pub fn homogeneous_ideal_case() -> impl Strategy<Value = Vec<Polynomial>> {
    (any_field(), 2usize..=3).prop_flat_map(|(f, n)| {
        let r = Ring::new(n, f);
        vec((1u32..=3).prop_flat_map(move |d| homogeneous_in(r, d, 3)), 1..=4)
    })
}

/// The Hilbert series of a homogeneous quotient does not depend on the order.
pub fn series_order_independent(gens: Vec<Polynomial>) -> PropResult {
    let n = gens[0].ring().nvars;
    let lex = buchberger(&gens, &MonomialOrder::lex(n)).unwrap();
    let grev = buchberger(&gens, &MonomialOrder::grevlex(n)).unwrap();
    prop_assert_eq!(
        quotient_summary(&lex.lead_term_ideal(), n),
        quotient_summary(&grev.lead_term_ideal(), n)
    );
    Ok(())
}

pub fn coinvariant_order_case() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..groups().len()).prop_flat_map(|gi| {
        let n = groups()[gi].dim();
        (Just(gi), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

/// dim and top degree of the coinvariants agree between lex and a permuted grevlex.
pub fn coinvariants_order_independent((gi, priority): (usize, Vec<usize>)) -> PropResult {
    let g = &groups()[gi];
    let cap = default_degree_cap(g);
    let lex = hilbert_ideal_with_order(g, cap, &MonomialOrder::lex(g.dim())).unwrap();
    let grev = MonomialOrder::with_priority(OrderKind::Grevlex, priority).unwrap();
    let other = hilbert_ideal_with_order(g, cap, &grev).unwrap();
    prop_assert_eq!(lex.summary(), other.summary());
    Ok(())
}

pub fn polarization_case() -> impl Strategy<Value = (Polynomial, usize)> {
    (any_field(), 1usize..=3, 1usize..=3).prop_flat_map(|(f, n, m)| (poly_in(Ring::new(n, f), 4, 3), Just(m)))
}

/// The `(d, 0, .., 0)` coefficient is the degree-`d` part of `f` on the first
/// copy, and every coefficient is homogeneous of its multi-degree.
pub fn polarization_properties((f, m): (Polynomial, usize)) -> PropResult {
    let pol = polarize(&f, m).unwrap();
    let n = f.ring().nvars;
    let b = Ring::new(n * m, f.field());
    let first: Vec<usize> = (0..n).map(|i| copy_index(i, 0, m)).collect();
    for (d, part) in f.homogeneous_parts() {
        let mut key = vec![0u32; m];
        key[0] = d;
        prop_assert_eq!(pol.get(&key).cloned(), Some(part.rename(b, &first)));
    }
    for (key, p) in &pol.coefficients {
        for (mono, _) in p.terms() {
            for (j, &kj) in key.iter().enumerate() {
                let dj: u32 = (0..n).map(|i| mono.exp(copy_index(i, j, m)) as u32).sum();
                prop_assert_eq!(dj, kj);
            }
        }
    }
    Ok(())
}

pub fn small_abelian_group() -> impl Strategy<Value = FiniteAbelianGroup> {
    proptest::sample::select(abelian_groups_up_to(24))
}

/// Witnesses are zero-sum-free of length `S(G) - 1`, and closed forms agree.
pub fn davenport_consistency(g: FiniteAbelianGroup) -> PropResult {
    let s = davenport_exact(&g, 64).unwrap();
    let w = davenport_witness(&g, 64).unwrap();
    prop_assert!(w.is_zero_sum_free());
    prop_assert_eq!(w.len() as u64 + 1, s);
    if let Some(formula) = olson_formula(&g) {
        prop_assert_eq!(formula, s);
    }
    let ext = w.zero_sum_extension();
    prop_assert!(ext.is_empty() || !ext.is_zero_sum_free());
    Ok(())
}
