//! Polarization `x_i -> x_{i,1} t_1 + ... + x_{i,m} t_m` and the two results
//! built on it: polarized Hilbert-ideal elements stay in the Hilbert ideal of
//! `V^m`, and pure-power lead-term ideals pin the top degree of every `F[V^m]_G`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::invring::{default_degree_cap, hilbert_ideal, HilbertIdealResult};
use crate::polyalg::{Monomial, Polynomial, Ring};
use crate::repaction::MatrixGroup;

/// Variable index of copy `j` of source variable `i` among `m` copies.
pub fn copy_index(i: usize, j: usize, m: usize) -> usize {
    i * m + j
}

/// Coefficients of `phi(f)` in the `t` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationResult {
    pub source_vars: usize,
    pub copies: usize,
    /// `(multi-index, coefficient)`, by total degree then descending multi-index.
    pub coefficients: Vec<(Vec<u32>, Polynomial)>,
}

impl PolarizationResult {
    pub fn get(&self, index: &[u32]) -> Option<&Polynomial> {
        self.coefficients
            .iter()
            .find(|(k, _)| k.as_slice() == index)
            .map(|(_, p)| p)
    }

    pub fn polynomials(&self) -> impl Iterator<Item = &Polynomial> {
        self.coefficients.iter().map(|(_, p)| p)
    }
}

/// Polarizes `f` into `m` copies.
///
/// Substitutes into the ring `B[t_1..t_m]` (copy variables first, then the
/// `t`s) and groups terms by their `t` exponents. Mixed-degree input splits
/// by degree automatically since the multi-index records the degree.
pub fn polarize(f: &Polynomial, m: usize) -> Result<PolarizationResult> {
    if m < 1 {
        return Err(Error::InvalidCopies);
    }
    let n = f.ring().nvars;
    let field = f.field();
    let b = Ring::new(n * m, field);
    let bt = Ring::new(n * m + m, field);
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            (0..m).fold(bt.zero(), |acc, j| {
                &acc + &(&bt.var(copy_index(i, j, m)) * &bt.var(n * m + j))
            })
        })
        .collect();
    let phi = f.substitute(&images)?;
    let mut grouped: Vec<(Vec<u32>, Polynomial)> = Vec::new();
    for (mono, c) in phi.terms() {
        let exps = mono.exps();
        let key: Vec<u32> = exps[n * m..].iter().map(|&e| e as u32).collect();
        let coeff_mono = Monomial::new(exps[..n * m].iter().copied());
        match grouped.iter_mut().find(|(k, _)| *k == key) {
            Some((_, p)) => p.add_term(coeff_mono, c),
            None => grouped.push((key, Polynomial::from_terms(b, [(coeff_mono, c.clone())]))),
        }
    }
    grouped.retain(|(_, p)| !p.is_zero());
    grouped.sort_by(|(a, _), (b, _)| {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    Ok(PolarizationResult {
        source_vars: n,
        copies: m,
        coefficients: grouped,
    })
}

/// Outcome of checking one polynomial against the polarization lemma.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub coefficients: usize,
    pub members: usize,
    pub holds: bool,
}

/// Checks that every polarization coefficient of `f` lies in `i_b`, given `f`
/// in the Hilbert ideal `i_a` of the source representation.
pub fn check_polarization_lemma(
    i_a: &GroebnerBasis,
    i_b: &GroebnerBasis,
    f: &Polynomial,
    m: usize,
) -> Result<LemmaCheck> {
    if !i_a.contains(f)? {
        return Err(Error::NotInHilbertIdeal);
    }
    let pol = polarize(f, m)?;
    let mut members = 0;
    for p in pol.polynomials() {
        if i_b.contains(p)? {
            members += 1;
        }
    }
    Ok(LemmaCheck {
        coefficients: pol.coefficients.len(),
        members,
        holds: members == pol.coefficients.len(),
    })
}

/// `true` iff every coefficient of `polarize(f, m)` is in `i_b`, the Hilbert
/// ideal of `m` copies of `g`. Errors with `NotInHilbertIdeal` when `f` is not
/// in the Hilbert ideal of `g` itself.
pub fn verify_polarization_lemma(
    g: &MatrixGroup,
    m: usize,
    f: &Polynomial,
    i_b: &GroebnerBasis,
) -> Result<bool> {
    let i_a = hilbert_ideal(g, default_degree_cap(g))?;
    Ok(check_polarization_lemma(&i_a.groebner, i_b, f, m)?.holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurePowerReport {
    pub applicable: bool,
    /// Exponent `a_i` of the pure power of `x_i`, when every generator is one.
    pub exponents: Option<Vec<u32>>,
    pub predicted: Option<u32>,
    /// Top degree of `F[V^m]_G`, measured only when applicable.
    pub measured: Option<u32>,
    pub matches: Option<bool>,
}

/// Checks whether `L(I_A)` is generated by pure powers `x_i^{a_i}` (each
/// `a_i < p` in characteristic `p`) and, if so, compares `sum (a_i - 1)`
/// with the measured top degree of `m` copies.
pub fn pure_power_topdeg_check(g: &MatrixGroup, m: usize) -> Result<PurePowerReport> {
    if m < 1 {
        return Err(Error::InvalidCopies);
    }
    let i_a = hilbert_ideal(g, default_degree_cap(g))?;
    let exps = pure_power_exponents(&i_a, g.dim());
    let p = g.field().characteristic();
    let applicable = match &exps {
        Some(a) => p == 0 || a.iter().all(|&e| (e as u64) < p),
        None => false,
    };
    if !applicable {
        return Ok(PurePowerReport {
            applicable: false,
            exponents: exps,
            predicted: None,
            measured: None,
            matches: None,
        });
    }
    let a = exps.expect("applicable");
    let predicted: u32 = a.iter().map(|e| e - 1).sum();
    let copies = g.vector_copies(m)?;
    let measured = hilbert_ideal(&copies, default_degree_cap(&copies))?
        .summary()
        .top_degree
        .expect("Hilbert ideal quotients are finite");
    Ok(PurePowerReport {
        applicable: true,
        exponents: Some(a),
        predicted: Some(predicted),
        measured: Some(measured),
        matches: Some(measured == predicted),
    })
}

fn pure_power_exponents(h: &HilbertIdealResult, n: usize) -> Option<Vec<u32>> {
    let lti = h.groebner.lead_term_ideal();
    if !lti.is_pure_power_ideal(n) {
        return None;
    }
    Some(
        lti.pure_powers(n)
            .into_iter()
            .map(|e| e.expect("pure power ideal") as u32)
            .collect(),
    )
}
