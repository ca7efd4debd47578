//! Text and JSON forms of polynomials.
//!
//! Text: `2*x1^2*x2 - 1/3*x3` with 1-based variable names. Over `F_p`
//! coefficients print as residues in `0..p`.
//!
//! JSON: `{"terms": [{"exps": [2, 1, 0], "coeff": "2/1"}, ...]}`, coefficients
//! written as `"num/den"` in characteristic 0 and `"k mod p"` otherwise.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{parse_ratio, Scalar};
use super::monomial::Monomial;
use super::polynomial::{Polynomial, Ring};
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, mag) = c.split_sign();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Parses the text form into `ring`.
    pub fn parse(ring: Ring, s: &str) -> Result<Polynomial> {
        let mut out = ring.zero();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut i = 0;
        let mut pieces = Vec::new();
        while i <= bytes.len() {
            let at_split = i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start && bytes[i - 1] != b'^');
            if at_split {
                pieces.push(&compact[start..i]);
                start = i;
            }
            i += 1;
        }
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let mut coeff = ring.field.one();
            let mut mono = Monomial::one(ring.nvars);
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, exp) = match var.split_once('^') {
                        Some((a, b)) => (a, b),
                        None => (var, "1"),
                    };
                    let idx: usize = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    let exp: u16 = exp
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?;
                    if idx == 0 || idx > ring.nvars {
                        return Err(Error::Parse(format!(
                            "variable {factor:?} outside a ring of {} variables",
                            ring.nvars
                        )));
                    }
                    mono.set_exp(idx - 1, mono.exp(idx - 1) + exp);
                } else {
                    coeff = coeff.mul(&parse_ratio(ring.field, factor)?);
                }
            }
            if neg {
                coeff = coeff.neg();
            }
            out.add_term(mono, &coeff);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    exps: m.exps().to_vec(),
                    coeff: c.to_json_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(ring: Ring, json: &PolynomialJson) -> Result<Polynomial> {
        let mut out = ring.zero();
        for t in &json.terms {
            if t.exps.len() != ring.nvars {
                return Err(Error::RingMismatch {
                    left: ring.nvars,
                    right: t.exps.len(),
                });
            }
            let c = Scalar::from_json_string(ring.field, &t.coeff)?;
            out.add_term(Monomial::new(t.exps.iter().copied()), &c);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u16>,
    pub coeff: String,
}
