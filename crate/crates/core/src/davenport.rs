//! Davenport constants of finite abelian groups.
//!
//! `S(G)` is the least length forcing a zero-sum subsequence. The exact value
//! comes from a depth-first search over non-decreasing sequences that tracks
//! the set of subsequence sums as a bitset.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{is_prime, Field};
use crate::repaction::{close_group, diagonal_generators, MatrixGroup};

pub const DEFAULT_ORDER_CAP: u64 = 64;

/// `Z_{d_1} x ... x Z_{d_r}` with `d_1 | d_2 | ... | d_r`, all `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    /// Normalizes any list of cyclic orders to invariant-factor form.
    pub fn new(cyclic_orders: &[u64]) -> Result<Self> {
        if cyclic_orders.iter().any(|&d| d == 0) {
            return Err(Error::InvalidGroup("cyclic factor of order 0".into()));
        }
        // prime -> exponents of its prime powers
        let mut primes: Vec<(u64, Vec<u32>)> = Vec::new();
        for &d in cyclic_orders {
            let mut rest = d;
            let mut q = 2;
            while rest > 1 {
                if q * q > rest {
                    q = rest;
                }
                if rest % q == 0 {
                    let mut e = 0;
                    while rest % q == 0 {
                        rest /= q;
                        e += 1;
                    }
                    match primes.iter_mut().find(|(p, _)| *p == q) {
                        Some((_, v)) => v.push(e),
                        None => primes.push((q, vec![e])),
                    }
                }
                q += 1;
            }
        }
        let rank = primes.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; rank];
        for (p, mut exps) in primes {
            exps.sort_unstable();
            // Largest powers go to the last factors.
            let offset = rank - exps.len();
            for (k, e) in exps.into_iter().enumerate() {
                factors[offset + k] *= p.pow(e);
            }
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// The prime when the order is a prime power greater than one.
    pub fn p_group_prime(&self) -> Option<u64> {
        let n = self.order();
        if n < 2 {
            return None;
        }
        let p = (2..=n).find(|q| n % q == 0)?;
        let mut m = n;
        while m % p == 0 {
            m /= p;
        }
        (m == 1).then_some(p)
    }

    /// Element tuple for a mixed-radix index (first coordinate most significant).
    pub fn element(&self, mut index: u64) -> Vec<u64> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }

    pub fn index(&self, element: &[u64]) -> u64 {
        element
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&a, &d)| acc * d + a % d)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((x, y), d)| (x + y) % d)
            .collect()
    }

    /// Parses `"2,4"` style lists; the empty string is the trivial group.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::trivial());
        }
        let orders = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidGroup(format!("bad factor {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&orders)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// All invariant-factor chains with order at most `max_order`, trivial group first.
pub fn abelian_groups_up_to(max_order: u64) -> Vec<FiniteAbelianGroup> {
    fn extend(chain: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<FiniteAbelianGroup>) {
        out.push(FiniteAbelianGroup {
            factors: chain.clone(),
        });
        let last = chain.last().copied().unwrap_or(1);
        let mut d = if chain.is_empty() { 2 } else { last };
        while order * d <= max {
            if d % last == 0 {
                chain.push(d);
                extend(chain, order * d, max, out);
                chain.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    // Chains are built left to right, so each group appears once.
    out.sort_by_key(|g| (g.order(), g.factors.clone()));
    out
}

/// A sequence (multiset) of group elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSumSequence {
    pub group: FiniteAbelianGroup,
    pub elements: Vec<Vec<u64>>,
}

impl ZeroSumSequence {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Sum of all elements.
    pub fn sum(&self) -> Vec<u64> {
        let zero = vec![0; self.group.rank()];
        self.elements.iter().fold(zero, |acc, e| self.group.add(&acc, e))
    }

    /// Appends the negated sum, turning a maximal zero-sum-free sequence into a
    /// minimal zero-sum sequence of length `S(G)`. Empty stays empty.
    pub fn zero_sum_extension(&self) -> ZeroSumSequence {
        let mut elements = self.elements.clone();
        if !elements.is_empty() {
            let neg = self
                .sum()
                .iter()
                .zip(self.group.factors())
                .map(|(&a, &d)| (d - a) % d)
                .collect();
            elements.push(neg);
        }
        ZeroSumSequence {
            group: self.group.clone(),
            elements,
        }
    }

    /// No nonempty subsequence sums to zero. Tracks the set of subsequence
    /// sums, so the cost is `O(len * |G|)`.
    pub fn is_zero_sum_free(&self) -> bool {
        let order = self.group.order() as usize;
        let mut reach = vec![false; order];
        for e in &self.elements {
            let ei = self.group.index(e) as usize;
            let mut next = reach.clone();
            next[ei] = true;
            for (i, &r) in reach.iter().enumerate() {
                if r {
                    let s = self.group.add(&self.group.element(i as u64), e);
                    next[self.group.index(&s) as usize] = true;
                }
            }
            reach = next;
        }
        !reach[0]
    }
}

struct Search {
    order: usize,
    words: usize,
    add: Vec<Vec<u16>>,
    neg: Vec<u16>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    fn new(g: &FiniteAbelianGroup) -> Self {
        let order = g.order() as usize;
        let elems: Vec<Vec<u64>> = (0..order as u64).map(|i| g.element(i)).collect();
        let add = elems
            .iter()
            .map(|a| elems.iter().map(|b| g.index(&g.add(a, b)) as u16).collect())
            .collect::<Vec<Vec<u16>>>();
        let neg = (0..order)
            .map(|i| (0..order).find(|&j| add[i][j] == 0).expect("inverse") as u16)
            .collect();
        Search {
            order,
            words: order.div_ceil(64),
            add,
            neg,
            best: Vec::new(),
            current: Vec::new(),
        }
    }

    fn run(&mut self) {
        let reach = vec![0u64; self.words];
        self.dfs(&reach, 1, 0);
    }

    fn dfs(&mut self, reach: &[u64], start: usize, reached: usize) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        // Each further element adds at least one new nonzero sum.
        if self.current.len() + (self.order - 1 - reached) <= self.best.len() {
            return;
        }
        for e in start..self.order {
            let ne = self.neg[e] as usize;
            if reach[ne / 64] >> (ne % 64) & 1 == 1 {
                continue;
            }
            let mut next = reach.to_vec();
            next[e / 64] |= 1 << (e % 64);
            for (w, &word) in reach.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let i = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let s = self.add[i][e] as usize;
                    next[s / 64] |= 1 << (s % 64);
                }
            }
            let count = next.iter().map(|w| w.count_ones() as usize).sum();
            self.current.push(e);
            self.dfs(&next, e, count);
            self.current.pop();
        }
    }
}

fn search(g: &FiniteAbelianGroup, order_cap: u64) -> Result<Vec<usize>> {
    if g.order() > order_cap {
        return Err(Error::OrderCapExceeded {
            order: g.order(),
            cap: order_cap,
        });
    }
    if g.order() > u16::MAX as u64 {
        return Err(Error::OrderCapExceeded {
            order: g.order(),
            cap: u16::MAX as u64,
        });
    }
    let mut s = Search::new(g);
    s.run();
    Ok(s.best)
}

/// Exact `S(G)`: one more than the longest zero-sum-free sequence.
pub fn davenport_exact(g: &FiniteAbelianGroup, order_cap: u64) -> Result<u64> {
    Ok(search(g, order_cap)?.len() as u64 + 1)
}

/// Lexicographically least zero-sum-free sequence of maximal length, listed non-decreasing.
pub fn davenport_witness(g: &FiniteAbelianGroup, order_cap: u64) -> Result<ZeroSumSequence> {
    let best = search(g, order_cap)?;
    Ok(ZeroSumSequence {
        group: g.clone(),
        elements: best.into_iter().map(|i| g.element(i as u64)).collect(),
    })
}

/// Closed forms: `a + b - 1` for `Z_a x Z_b` with `a | b` (rank at most 2), and
/// `1 + sum (p^{d_i} - 1)` for p-groups.
pub fn olson_formula(g: &FiniteAbelianGroup) -> Option<u64> {
    let f = g.factors();
    match f.len() {
        0 => return Some(1),
        1 => return Some(f[0]),
        2 => return Some(f[0] + f[1] - 1),
        _ => {}
    }
    g.p_group_prime()?;
    Some(1 + f.iter().map(|d| d - 1).sum::<u64>())
}

/// Diagonal representation over `F_p` with one variable per sequence element;
/// generator `j` scales variable `i` by `zeta_j^{a_{ij}}`.
pub fn rep_from_sequence(g: &FiniteAbelianGroup, seq: &ZeroSumSequence, p: u64) -> Result<MatrixGroup> {
    if !is_prime(p) {
        return Err(Error::BadPrime {
            p,
            reason: "not prime".into(),
        });
    }
    if g.order() % p == 0 {
        return Err(Error::BadPrime {
            p,
            reason: format!("divides the group order {}", g.order()),
        });
    }
    if (p - 1) % g.exponent() != 0 {
        return Err(Error::BadPrime {
            p,
            reason: format!("p - 1 is not divisible by the exponent {}", g.exponent()),
        });
    }
    if seq.group != *g {
        return Err(Error::InvalidGroup("sequence belongs to another group".into()));
    }
    let field = Field::prime(p)?;
    let gens = diagonal_generators(field, g.factors(), &seq.elements)?;
    close_group(&gens, field, seq.len(), g.order().max(1) as usize)
}

/// Smallest prime `p` with `p = 1 (mod exponent)`, at least 3.
pub fn suitable_prime(g: &FiniteAbelianGroup) -> u64 {
    let e = g.exponent();
    (1..)
        .map(|k| k * e + 1)
        .find(|&p| p >= 3 && is_prime(p))
        .expect("Dirichlet")
}
