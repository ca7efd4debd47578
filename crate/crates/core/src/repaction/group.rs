use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::polyalg::{Field, Polynomial, Ring};

use super::matrix::Matrix;

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A finite group of invertible matrices acting on `F[x_1..x_n]`.
///
/// Element 0 is the identity; elements are in BFS order from the identity
/// with generators applied in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGroup {
    field: Field,
    dim: usize,
    elements: Vec<Matrix>,
    generators: Vec<usize>,
    index: HashMap<Matrix, usize>,
}

/// Closes `generators` under multiplication.
pub fn close_group(generators: &[Matrix], field: Field, dim: usize, cap: usize) -> Result<MatrixGroup> {
    for (i, g) in generators.iter().enumerate() {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: g.dim(),
            });
        }
        if g.inverse().is_none() {
            return Err(Error::SingularGenerator(i));
        }
    }
    if cap == 0 {
        return Err(Error::ClosureCapExceeded(0));
    }
    let id = Matrix::identity(field, dim);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let h = elements[e].mul(g)?;
            if index.contains_key(&h) {
                continue;
            }
            if elements.len() == cap {
                return Err(Error::ClosureCapExceeded(cap));
            }
            index.insert(h.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(h);
        }
    }
    let generators = generators.iter().map(|g| index[g]).collect();
    Ok(MatrixGroup {
        field,
        dim,
        elements,
        generators,
        index,
    })
}

impl MatrixGroup {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Dimension of `V`, i.e. the number of polynomial variables.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.dim, self.field)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<&Matrix> {
        self.generators.iter().map(|&i| &self.elements[i]).collect()
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Characteristic divides `|G|`.
    pub fn is_modular(&self) -> bool {
        self.field.divides(self.order() as u64)
    }

    /// Applies element `i` to `f`.
    pub fn act(&self, i: usize, f: &Polynomial) -> Result<Polynomial> {
        act(&self.elements[i], f)
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup(&self, generator_indices: &[usize]) -> Result<MatrixGroup> {
        let gens: Vec<Matrix> = generator_indices
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect();
        close_group(&gens, self.field, self.dim, self.order())
    }

    /// The same group acting diagonally on `m` copies of `V`, variables ordered
    /// copy-minor (see [`Matrix::vector_copies`]).
    pub fn vector_copies(&self, m: usize) -> Result<MatrixGroup> {
        if m == 0 {
            return Err(Error::InvalidCopies);
        }
        let gens: Vec<Matrix> = self
            .generators()
            .into_iter()
            .map(|g| g.vector_copies(m, self.field))
            .collect();
        close_group(&gens, self.field, self.dim * m, self.order())
    }

    /// `h` is a subgroup of `self` closed under conjugation by the generators of `self`.
    pub fn is_normal_subgroup(&self, h: &MatrixGroup) -> Result<bool> {
        if h.dim != self.dim || h.field != self.field {
            return Ok(false);
        }
        if h.elements.iter().any(|e| self.index_of(e).is_none()) {
            return Ok(false);
        }
        for g in self.generators() {
            let g_inv = g.inverse().expect("group elements are invertible");
            for hg in h.generators() {
                let c = g.mul(hg)?.mul(&g_inv)?;
                if h.index_of(&c).is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Action of a matrix on polynomials by substitution `x_j -> sum_k M[k][j] x_k`.
///
/// Matrices describe the action on the variables (a basis of `V*`), so this
/// is `f -> f o sigma^{-1}` for the contragredient action on `V`. It is a left
/// action: `act(A B, f) = act(A, act(B, f))`.
pub fn act(m: &Matrix, f: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring();
    if m.dim() != ring.nvars {
        return Err(Error::DimensionMismatch {
            left: m.dim(),
            right: ring.nvars,
        });
    }
    f.substitute(&m.variable_images(ring))
}

/// `true` iff the matrix group has exactly `abstract_order` elements.
pub fn check_faithful(abstract_order: usize, g: &MatrixGroup) -> bool {
    g.order() == abstract_order
}
