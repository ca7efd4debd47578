//! Representation specs: the JSON file format and a compact command-line shorthand.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{primitive_root, Field, Scalar};

use super::group::{close_group, MatrixGroup, DEFAULT_CLOSURE_CAP};
use super::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    #[serde(rename = "char")]
    pub characteristic: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constructor {
    Symmetric,
    Jordan,
    Diagonal,
    Regular,
    Matrices,
    VectorCopies,
    DirectSum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Str(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    /// Invariant factors of a diagonal abelian group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<u64>>,
    /// One character tuple per variable, entry `j` taken modulo `factors[j]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characters: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub of: Option<Box<RepSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summands: Option<Vec<RepSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
}

/// How to build a matrix group. Nested specs inherit the enclosing field when
/// they omit their own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    pub constructor: Constructor,
    #[serde(default)]
    pub params: Params,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<Vec<Entry>>>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

impl RepSpec {
    fn with(constructor: Constructor, characteristic: u64, params: Params) -> Self {
        RepSpec {
            field: Some(FieldJson { characteristic }),
            constructor,
            params,
            matrices: None,
        }
    }

    pub fn symmetric(n: usize, characteristic: u64) -> Self {
        Self::with(
            Constructor::Symmetric,
            characteristic,
            Params {
                n: Some(n),
                ..Params::default()
            },
        )
    }

    pub fn jordan(p: u64, k: usize) -> Self {
        Self::with(
            Constructor::Jordan,
            p,
            Params {
                k: Some(k),
                ..Params::default()
            },
        )
    }

    pub fn diagonal(characteristic: u64, factors: Vec<u64>, characters: Vec<Vec<u64>>) -> Self {
        Self::with(
            Constructor::Diagonal,
            characteristic,
            Params {
                factors: Some(factors),
                characters: Some(characters),
                ..Params::default()
            },
        )
    }

    pub fn regular(of: RepSpec, characteristic: u64) -> Self {
        Self::with(
            Constructor::Regular,
            characteristic,
            Params {
                of: Some(Box::new(of)),
                ..Params::default()
            },
        )
    }

    pub fn vector_copies(of: RepSpec, m: usize) -> Self {
        RepSpec {
            field: of.field,
            constructor: Constructor::VectorCopies,
            params: Params {
                m: Some(m),
                of: Some(Box::new(of)),
                ..Params::default()
            },
            matrices: None,
        }
    }

    pub fn direct_sum(summands: Vec<RepSpec>) -> Self {
        RepSpec {
            field: summands.first().and_then(|s| s.field),
            constructor: Constructor::DirectSum,
            params: Params {
                summands: Some(summands),
                ..Params::default()
            },
            matrices: None,
        }
    }

    pub fn matrices(characteristic: u64, dimension: usize, generators: &[Vec<Vec<i64>>]) -> Self {
        RepSpec {
            field: Some(FieldJson { characteristic }),
            constructor: Constructor::Matrices,
            params: Params {
                dimension: Some(dimension),
                ..Params::default()
            },
            matrices: Some(
                generators
                    .iter()
                    .map(|m| {
                        m.iter()
                            .map(|r| r.iter().map(|&a| Entry::Str(a.to_string())).collect())
                            .collect()
                    })
                    .collect(),
            ),
        }
    }

    /// The trivial group on `n` variables.
    pub fn trivial(n: usize, characteristic: u64) -> Self {
        Self::matrices(characteristic, n, &[])
    }

    /// `-1` acting on `n` variables.
    pub fn negation(n: usize, characteristic: u64) -> Self {
        let m: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect())
            .collect();
        Self::matrices(characteristic, n, &[m])
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    /// Parses the command-line shorthand.
    ///
    /// `symmetric:N`, `jordan:K` or `jordan:P:K`, `trivial:N`, `neg:N`,
    /// `cyclic:D:c1,c2,..`, `diagonal:d1,d2:a.b,c.d,..`, `regular:<shorthand>`.
    /// `characteristic` (from `--field`) applies where the shorthand has none.
    pub fn parse_shorthand(s: &str, characteristic: Option<u64>) -> Result<Self> {
        let ch = characteristic.unwrap_or(0);
        let (head, rest) = s.split_once(':').unwrap_or((s, ""));
        let num = |t: &str| -> Result<u64> {
            t.trim()
                .parse::<u64>()
                .map_err(|_| invalid(format!("expected a number, got {t:?} in {s:?}")))
        };
        let list = |t: &str| -> Result<Vec<u64>> { t.split(',').map(num).collect() };
        let parts: Vec<&str> = rest.split(':').collect();
        match head {
            "symmetric" => Ok(Self::symmetric(num(rest)? as usize, ch)),
            "trivial" => Ok(Self::trivial(num(rest)? as usize, ch)),
            "neg" | "negation" => Ok(Self::negation(num(rest)? as usize, ch)),
            "jordan" => match parts.as_slice() {
                [k] => {
                    if ch == 0 {
                        return Err(invalid("jordan needs a prime field (use jordan:P:K or --field)"));
                    }
                    Ok(Self::jordan(ch, num(k)? as usize))
                }
                [p, k] => Ok(Self::jordan(num(p)?, num(k)? as usize)),
                _ => Err(invalid(format!("bad jordan shorthand {s:?}"))),
            },
            "cyclic" => match parts.as_slice() {
                [d, chars] => {
                    let chars = list(chars)?.into_iter().map(|c| vec![c]).collect();
                    Ok(Self::diagonal(ch, vec![num(d)?], chars))
                }
                _ => Err(invalid(format!("bad cyclic shorthand {s:?}"))),
            },
            "diagonal" => match parts.as_slice() {
                [factors, chars] => {
                    let chars = chars
                        .split(',')
                        .map(|t| t.split('.').map(num).collect::<Result<Vec<u64>>>())
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Self::diagonal(ch, list(factors)?, chars))
                }
                _ => Err(invalid(format!("bad diagonal shorthand {s:?}"))),
            },
            "regular" => {
                let inner = Self::parse_shorthand(rest, characteristic)?;
                Ok(Self::regular(inner, ch))
            }
            _ => Err(invalid(format!("unknown constructor in {s:?}"))),
        }
    }
}

/// Builds the matrix group described by `spec` with the default closure cap.
pub fn build_rep(spec: &RepSpec) -> Result<MatrixGroup> {
    build_rep_with_cap(spec, DEFAULT_CLOSURE_CAP)
}

pub fn build_rep_with_cap(spec: &RepSpec, cap: usize) -> Result<MatrixGroup> {
    build(spec, None, cap)
}

fn resolve_field(spec: &RepSpec, inherited: Option<Field>) -> Result<Field> {
    match (spec.field, inherited) {
        (Some(f), _) => Field::new(f.characteristic),
        (None, Some(f)) => Ok(f),
        (None, None) => Ok(Field::RATIONALS),
    }
}

fn build(spec: &RepSpec, inherited: Option<Field>, cap: usize) -> Result<MatrixGroup> {
    let field = resolve_field(spec, inherited)?;
    let p = &spec.params;
    let (dim, gens) = match spec.constructor {
        Constructor::Symmetric => {
            let n = p.n.ok_or_else(|| invalid("symmetric needs params.n"))?;
            if n == 0 {
                return Err(invalid("symmetric needs n >= 1"));
            }
            let gens = (0..n.saturating_sub(1))
                .map(|i| {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(i, i + 1);
                    Matrix::permutation(field, &perm)
                })
                .collect();
            (n, gens)
        }
        Constructor::Jordan => {
            let k = p.k.ok_or_else(|| invalid("jordan needs params.k"))?;
            let ch = field.characteristic();
            if let Some(pp) = p.p {
                if pp != ch {
                    return Err(invalid(format!("params.p = {pp} but field characteristic is {ch}")));
                }
            }
            if ch == 0 {
                return Err(invalid("jordan needs a prime field"));
            }
            if k == 0 {
                return Err(invalid("jordan needs k >= 1"));
            }
            if k as u64 > ch {
                return Err(Error::JordanTooLarge { k, p: ch });
            }
            (k, vec![jordan_block(field, k)])
        }
        Constructor::Diagonal => {
            let factors = p.factors.clone().ok_or_else(|| invalid("diagonal needs params.factors"))?;
            let chars = p
                .characters
                .clone()
                .ok_or_else(|| invalid("diagonal needs params.characters"))?;
            let gens = diagonal_generators(field, &factors, &chars)?;
            (chars.len(), gens)
        }
        Constructor::Regular => {
            let of = p.of.as_ref().ok_or_else(|| invalid("regular needs params.of"))?;
            let inner = build(of, Some(field), cap)?;
            let gens = regular_generators(&inner, field)?;
            (inner.order(), gens)
        }
        Constructor::Matrices => {
            let raw = spec.matrices.clone().unwrap_or_default();
            let mut gens = Vec::with_capacity(raw.len());
            for m in &raw {
                gens.push(parse_matrix(field, m)?);
            }
            let dim = match (p.dimension, gens.first()) {
                (Some(d), _) => d,
                (None, Some(g)) => g.dim(),
                (None, None) => return Err(invalid("matrices needs params.dimension when empty")),
            };
            (dim, gens)
        }
        Constructor::VectorCopies => {
            let m = p.m.ok_or_else(|| invalid("vector_copies needs params.m"))?;
            if m == 0 {
                return Err(Error::InvalidCopies);
            }
            let of = p.of.as_ref().ok_or_else(|| invalid("vector_copies needs params.of"))?;
            let inner = build(of, Some(field), cap)?;
            let gens = inner
                .generators()
                .into_iter()
                .map(|g| g.vector_copies(m, field))
                .collect();
            (inner.dim() * m, gens)
        }
        Constructor::DirectSum => {
            let summands = p
                .summands
                .as_ref()
                .ok_or_else(|| invalid("direct_sum needs params.summands"))?;
            if summands.is_empty() {
                return Err(invalid("direct_sum needs at least one summand"));
            }
            let groups: Vec<MatrixGroup> = summands
                .iter()
                .map(|s| build(s, Some(field), cap))
                .collect::<Result<_>>()?;
            if groups.iter().any(|g| g.field() != field) {
                return Err(Error::FieldMismatch);
            }
            let ngens = groups[0].generator_indices().len();
            if groups.iter().any(|g| g.generator_indices().len() != ngens) {
                return Err(invalid("direct_sum summands need matching generator lists"));
            }
            let gens = (0..ngens)
                .map(|i| {
                    let mut acc = groups[0].generators()[i].clone();
                    for g in &groups[1..] {
                        acc = acc.direct_sum(g.generators()[i], field);
                    }
                    acc
                })
                .collect();
            (groups.iter().map(MatrixGroup::dim).sum(), gens)
        }
    };
    close_group(&gens, field, dim, cap)
}

/// Upper-triangular unipotent single Jordan block of size `k`.
pub fn jordan_block(field: Field, k: usize) -> Matrix {
    let mut m = Matrix::identity(field, k);
    for i in 0..k.saturating_sub(1) {
        m.set(i, i + 1, field.one());
    }
    m
}

/// Primitive `d`-th root of unity in `field`.
pub fn root_of_unity(field: Field, d: u64) -> Result<Scalar> {
    let missing = || Error::MissingRootsOfUnity {
        field: field.to_string(),
        order: d,
    };
    if d == 0 {
        return Err(missing());
    }
    match field.characteristic() {
        0 => match d {
            1 => Ok(field.one()),
            2 => Ok(field.from_i64(-1)),
            _ => Err(missing()),
        },
        p => {
            if (p - 1) % d != 0 {
                return Err(missing());
            }
            let g = primitive_root(p);
            Ok(field.from_i64(g as i64).pow((p - 1) / d))
        }
    }
}

/// One diagonal generator per invariant factor; variable `i` is scaled by
/// `zeta_j^{chars[i][j]}` under generator `j`.
pub fn diagonal_generators(field: Field, factors: &[u64], chars: &[Vec<u64>]) -> Result<Vec<Matrix>> {
    if factors.iter().any(|&d| d == 0) {
        return Err(invalid("invariant factors must be positive"));
    }
    if chars.iter().any(|c| c.len() != factors.len()) {
        return Err(invalid("each character needs one entry per factor"));
    }
    let mut gens = Vec::with_capacity(factors.len());
    for (j, &d) in factors.iter().enumerate() {
        let zeta = root_of_unity(field, d)?;
        let diag = chars.iter().map(|c| zeta.pow(c[j] % d)).collect();
        gens.push(Matrix::diagonal(field, diag));
    }
    Ok(gens)
}

/// Left-regular permutation matrices for the generators of `g`, over `field`.
fn regular_generators(g: &MatrixGroup, field: Field) -> Result<Vec<Matrix>> {
    g.generators()
        .into_iter()
        .map(|s| {
            let perm = g
                .elements()
                .iter()
                .map(|e| Ok(g.index_of(&s.mul(e)?).expect("closed group")))
                .collect::<Result<Vec<usize>>>()?;
            Ok(Matrix::permutation(field, &perm))
        })
        .collect()
}

fn parse_matrix(field: Field, rows: &[Vec<Entry>]) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    Entry::Int(a) => Ok(field.from_i64(*a)),
                    Entry::Str(s) => {
                        let v: BigInt = s
                            .trim()
                            .parse()
                            .map_err(|_| invalid(format!("matrix entry {s:?} is not an integer")))?;
                        Ok(field.from_bigint(&v))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_three() {
        let g = build_rep(&RepSpec::symmetric(3, 0)).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.dim(), 3);
    }

    #[test]
    fn jordan_two_two() {
        let g = build_rep(&RepSpec::jordan(2, 2)).unwrap();
        assert_eq!(g.order(), 2);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(
            g.element(1),
            &Matrix::from_i64(f2, &[vec![1, 1], vec![0, 1]]).unwrap()
        );
    }

    #[test]
    fn jordan_too_large() {
        assert!(matches!(
            build_rep(&RepSpec::jordan(2, 3)),
            Err(Error::JordanTooLarge { k: 3, p: 2 })
        ));
    }

    #[test]
    fn copies_of_jordan() {
        let g = build_rep(&RepSpec::vector_copies(RepSpec::jordan(2, 2), 2)).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.dim(), 4);
    }

    #[test]
    fn diagonal_needs_roots() {
        let spec = RepSpec::diagonal(0, vec![3], vec![vec![1]]);
        assert!(matches!(build_rep(&spec), Err(Error::MissingRootsOfUnity { .. })));
        let spec = RepSpec::diagonal(5, vec![3], vec![vec![1]]);
        assert!(matches!(build_rep(&spec), Err(Error::MissingRootsOfUnity { .. })));
        let spec = RepSpec::diagonal(7, vec![3], vec![vec![1], vec![1]]);
        let g = build_rep(&spec).unwrap();
        assert_eq!(g.order(), 3);
        let f7 = Field::prime(7).unwrap();
        assert_eq!(g.element(1), &Matrix::diagonal(f7, vec![f7.from_i64(2), f7.from_i64(2)]));
    }

    #[test]
    fn regular_of_symmetric() {
        let g = build_rep(&RepSpec::regular(RepSpec::symmetric(3, 0), 0)).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.dim(), 6);
    }

    #[test]
    fn direct_sum_dims() {
        let s = RepSpec::direct_sum(vec![RepSpec::symmetric(3, 0), RepSpec::regular(RepSpec::symmetric(3, 0), 0)]);
        let g = build_rep(&s).unwrap();
        assert_eq!(g.dim(), 9);
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn json_round_trip() {
        let s = RepSpec::vector_copies(RepSpec::negation(2, 0), 3);
        let back = RepSpec::from_json(&s.to_json()).unwrap();
        assert_eq!(s, back);
        let raw = r#"{"field":{"char":3},"constructor":"matrices","matrices":[[["1","1"],["0","1"]]]}"#;
        let g = build_rep(&RepSpec::from_json(raw).unwrap()).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn shorthand() {
        assert_eq!(RepSpec::parse_shorthand("symmetric:3", None).unwrap(), RepSpec::symmetric(3, 0));
        assert_eq!(RepSpec::parse_shorthand("jordan:2", Some(3)).unwrap(), RepSpec::jordan(3, 2));
        assert_eq!(RepSpec::parse_shorthand("jordan:3:2", None).unwrap(), RepSpec::jordan(3, 2));
        assert!(RepSpec::parse_shorthand("jordan:2", None).is_err());
        let d = RepSpec::parse_shorthand("diagonal:2,2:1.0,0.1", Some(5)).unwrap();
        assert_eq!(build_rep(&d).unwrap().order(), 4);
        assert!(RepSpec::parse_shorthand("bogus:1", None).is_err());
    }
}
