//! Sparse exact linear algebra: incremental echelon bases and nullspaces.

use std::collections::BTreeMap;

use crate::polyalg::{Field, Scalar};

/// Sparse vector keyed by column index.
pub type SparseVec = BTreeMap<usize, Scalar>;

fn axpy(target: &mut SparseVec, c: &Scalar, v: &SparseVec) {
    for (k, a) in v {
        let t = a.mul(c);
        match target.get_mut(k) {
            Some(x) => {
                let s = x.add(&t);
                if s.is_zero() {
                    target.remove(k);
                } else {
                    *x = s;
                }
            }
            None => {
                target.insert(*k, t);
            }
        }
    }
}

/// A row-echelon basis of a subspace, built one vector at a time.
///
/// Each stored row is monic at its pivot (its smallest column) and reduced
/// against every other row, so membership reduces to a single sweep.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new(field: Field) -> Self {
        EchelonBasis {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Reduces `v` against the basis; the result has no entry in a pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                axpy(&mut v, &c.neg(), row);
            }
        }
        v
    }

    /// Adds `v` to the span. Returns `true` when it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, c)) = r.iter().next() else {
            return false;
        };
        let inv = c.inv();
        for x in r.values_mut() {
            *x = x.mul(&inv);
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &c.neg(), &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// Basis of `{x : A x = 0}` for `A` given by sparse rows over `ncols` columns.
///
/// The returned vectors are in reduced echelon form with pivots at their
/// lowest column, ordered by pivot.
pub fn nullspace(field: Field, rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut ech = EchelonBasis::new(field);
    for r in rows {
        ech.insert(r);
        if ech.rank() == ncols {
            break;
        }
    }
    let pivots: Vec<usize> = ech.rows.keys().copied().collect();
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.rows.contains_key(c)).collect();
    // Column -> list of (pivot, coefficient) for the rows touching it.
    let mut by_col: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
    for p in &pivots {
        for (c, a) in &ech.rows[p] {
            if c != p {
                by_col.entry(*c).or_default().push((*p, a.clone()));
            }
        }
    }
    let mut kernel = EchelonBasis::new(field);
    for f in free {
        let mut v = SparseVec::new();
        v.insert(f, field.one());
        if let Some(entries) = by_col.get(&f) {
            for (p, a) in entries {
                v.insert(*p, a.neg());
            }
        }
        kernel.insert(&v);
    }
    kernel.rows.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(field: Field, entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .filter(|(_, a)| *a != 0)
            .map(|&(k, a)| (k, field.from_i64(a)))
            .collect()
    }

    fn apply(rows: &[SparseVec], x: &SparseVec, field: Field) -> Vec<Scalar> {
        rows.iter()
            .map(|r| {
                r.iter().fold(field.zero(), |acc, (k, a)| {
                    acc.add(&a.mul(&x.get(k).cloned().unwrap_or_else(|| field.zero())))
                })
            })
            .collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let q = Field::RATIONALS;
        let rows = vec![v(q, &[(0, 1), (1, -1)])];
        let ker = nullspace(q, &rows, 2);
        assert_eq!(ker, vec![v(q, &[(0, 1), (1, 1)])]);
    }

    #[test]
    fn kernel_annihilated() {
        let f5 = Field::prime(5).unwrap();
        let rows = vec![
            v(f5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            v(f5, &[(1, 1), (3, 1)]),
            v(f5, &[(0, 1), (1, 3), (2, 3), (3, 0)]),
        ];
        let ker = nullspace(f5, &rows, 4);
        assert_eq!(ker.len(), 2);
        for x in &ker {
            assert!(apply(&rows, x, f5).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn echelon_membership() {
        let q = Field::RATIONALS;
        let mut e = EchelonBasis::new(q);
        assert!(e.insert(&v(q, &[(0, 2), (1, 2)])));
        assert!(e.insert(&v(q, &[(1, 1), (2, 1)])));
        assert!(!e.insert(&v(q, &[(0, 1), (1, 2), (2, 1)])));
        assert!(e.contains(&v(q, &[(0, 1), (2, -1)])));
        assert!(!e.contains(&v(q, &[(2, 1)])));
        assert_eq!(e.rank(), 2);
    }
}
