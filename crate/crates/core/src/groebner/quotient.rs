use serde::{Deserialize, Serialize};

use crate::polyalg::Monomial;

/// Minimal monomial generators of a lead-term ideal (an antichain under divisibility).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadTermIdeal {
    generators: Vec<Monomial>,
}

impl LeadTermIdeal {
    /// Keeps only the divisibility-minimal monomials, sorted in descending canonical order.
    pub fn minimal(monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = monomials.into_iter().collect();
        all.sort_by_key(|m| m.degree());
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::new();
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        gens.sort_by(|a, b| b.cmp(a));
        LeadTermIdeal { generators: gens }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Exponent of the pure power of each variable among the generators, if present.
    pub fn pure_powers(&self, nvars: usize) -> Vec<Option<u16>> {
        let mut out = vec![None; nvars];
        for g in &self.generators {
            if let Some((i, e)) = g.as_pure_power() {
                out[i] = Some(e);
            }
        }
        out
    }

    /// True when every generator is a pure power and each variable has one.
    pub fn is_pure_power_ideal(&self, nvars: usize) -> bool {
        self.generators.len() == nvars
            && self.generators.iter().all(|g| g.as_pure_power().is_some())
            && self.pure_powers(nvars).iter().all(Option::is_some)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

/// Dimension, top degree and Hilbert series of a graded quotient `F[V]/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoinvariantSummary {
    pub dimension: Dimension,
    pub top_degree: Option<u32>,
    pub hilbert_series: Vec<u64>,
}

impl CoinvariantSummary {
    pub fn is_finite(&self) -> bool {
        matches!(self.dimension, Dimension::Finite(_))
    }

    pub fn dim(&self) -> Option<u64> {
        match self.dimension {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }

    /// `dim=6 topdeg=3 series=1,2,2,1`, or `dim=inf` when infinite.
    pub fn line(&self) -> String {
        match (self.dimension, self.top_degree) {
            (Dimension::Finite(d), Some(t)) => {
                let series: Vec<String> = self.hilbert_series.iter().map(u64::to_string).collect();
                format!("dim={d} topdeg={t} series={}", series.join(","))
            }
            _ => "dim=inf".to_string(),
        }
    }
}

/// Counts standard monomials (those outside `lti`) by degree.
///
/// Walks the box cut out by the pure powers; standard monomials form an order
/// ideal, so each coordinate stops at the first exponent that lands in `lti`.
pub fn quotient_summary(lti: &LeadTermIdeal, nvars: usize) -> CoinvariantSummary {
    let bounds = lti.pure_powers(nvars);
    if bounds.iter().any(Option::is_none) {
        return CoinvariantSummary {
            dimension: Dimension::Infinite,
            top_degree: None,
            hilbert_series: Vec::new(),
        };
    }
    let bounds: Vec<u16> = bounds.into_iter().map(Option::unwrap).collect();
    let mut series: Vec<u64> = Vec::new();
    let mut cur = Monomial::one(nvars);
    walk(lti, &bounds, 0, &mut cur, &mut series);
    while series.last() == Some(&0) {
        series.pop();
    }
    let dim = series.iter().sum();
    CoinvariantSummary {
        dimension: Dimension::Finite(dim),
        top_degree: Some(series.len().saturating_sub(1) as u32),
        hilbert_series: series,
    }
}

fn walk(lti: &LeadTermIdeal, bounds: &[u16], i: usize, cur: &mut Monomial, series: &mut Vec<u64>) {
    if lti.contains(cur) {
        return;
    }
    if i == bounds.len() {
        let d = cur.degree() as usize;
        if series.len() <= d {
            series.resize(d + 1, 0);
        }
        series[d] += 1;
        return;
    }
    for e in 0..bounds[i] {
        cur.set_exp(i, e);
        if lti.contains(cur) {
            break;
        }
        walk(lti, bounds, i + 1, cur, series);
    }
    cur.set_exp(i, 0);
}
