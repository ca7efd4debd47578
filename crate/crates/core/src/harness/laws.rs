//! Instance families and the per-law case builders.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde_json::{json, Value};

use crate::davenport::{davenport_exact, davenport_witness, suitable_prime, FiniteAbelianGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::invring::{default_degree_cap, hilbert_ideal, minimal_generators, steinberg_check, HilbertIdealResult};
use crate::polarize::{check_polarization_lemma, pure_power_topdeg_check};
use crate::polyalg::Polynomial;
use crate::repaction::{build_rep, MatrixGroup, RepSpec};

use super::LawId;

/// Shared state for one suite run: the degree cap and a Hilbert-ideal cache.
pub struct Ctx {
    degree_cap: Option<u32>,
    hilbert: Mutex<HashMap<String, Arc<HilbertIdealResult>>>,
}

impl Ctx {
    pub fn new(degree_cap: Option<u32>) -> Self {
        Ctx {
            degree_cap,
            hilbert: Mutex::new(HashMap::new()),
        }
    }

    fn cap_for(&self, g: &MatrixGroup) -> u32 {
        self.degree_cap.unwrap_or_else(|| default_degree_cap(g))
    }

    pub fn hilbert(&self, spec: &RepSpec) -> Result<Arc<HilbertIdealResult>> {
        let key = spec.to_json();
        if let Some(h) = self.hilbert.lock().expect("cache lock").get(&key) {
            return Ok(h.clone());
        }
        let g = build_rep(spec)?;
        let h = Arc::new(hilbert_ideal(&g, self.cap_for(&g))?);
        self.hilbert.lock().expect("cache lock").insert(key, h.clone());
        Ok(h)
    }

    /// `(topdeg, dim)` of the coinvariants.
    pub fn topdeg_dim(&self, spec: &RepSpec) -> Result<(u32, u64)> {
        let s = self.hilbert(spec)?.summary();
        match (s.top_degree, s.dim()) {
            (Some(t), Some(d)) => Ok((t, d)),
            _ => Err(Error::InvalidSpec("coinvariants are infinite".into())),
        }
    }
}

type Eval = Box<dyn Fn(&Ctx) -> Result<(Value, bool)> + Send + Sync>;

pub(crate) struct Job {
    pub law: LawId,
    pub instance: Value,
    pub expected: String,
    pub eval: Eval,
}

fn job(law: LawId, instance: Value, expected: &str, eval: impl Fn(&Ctx) -> Result<(Value, bool)> + Send + Sync + 'static) -> Job {
    Job {
        law,
        instance,
        expected: expected.to_string(),
        eval: Box::new(eval),
    }
}

// ---- instance families -------------------------------------------------

pub fn sym(n: usize) -> RepSpec {
    RepSpec::symmetric(n, 0)
}

pub fn neg(n: usize) -> RepSpec {
    RepSpec::negation(n, 0)
}

pub fn jordan(p: u64, k: usize) -> RepSpec {
    RepSpec::jordan(p, k)
}

/// The unipotent 3x3 Jordan block over `F_2`, a cyclic group of order 4.
pub fn unipotent_z4() -> RepSpec {
    RepSpec::matrices(2, 3, &[vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]])
}

pub fn cyclic(d: u64, chars: &[u64], p: u64) -> RepSpec {
    RepSpec::diagonal(p, vec![d], chars.iter().map(|&c| vec![c]).collect())
}

/// Diagonal representation built from the Davenport witness of `Z_{f_1} x ...`
/// over the smallest suitable prime.
pub fn witness_rep(factors: &[u64]) -> Result<RepSpec> {
    let g = FiniteAbelianGroup::new(factors)?;
    let w = davenport_witness(&g, DEFAULT_ORDER_CAP)?;
    Ok(RepSpec::diagonal(suitable_prime(&g), g.factors().to_vec(), w.elements))
}

/// Witness extended by its negated sum: the sequence of length `S(G)` whose
/// product monomial is an indecomposable invariant of degree `S(G)`.
pub fn zero_sum_rep(factors: &[u64]) -> Result<RepSpec> {
    let g = FiniteAbelianGroup::new(factors)?;
    let w = davenport_witness(&g, DEFAULT_ORDER_CAP)?.zero_sum_extension();
    Ok(RepSpec::diagonal(suitable_prime(&g), g.factors().to_vec(), w.elements))
}

/// Matrix of the permutation sending point `j` to `perm[j]`, matching
/// [`Matrix::permutation`].
pub fn perm_matrix(perm: &[usize]) -> Vec<Vec<i64>> {
    let n = perm.len();
    let mut m = vec![vec![0; n]; n];
    for (j, &i) in perm.iter().enumerate() {
        m[i][j] = 1;
    }
    m
}

fn field_char(spec: &RepSpec) -> u64 {
    spec.field.map(|f| f.characteristic).unwrap_or(0)
}

/// Subgroup spec on the same space as `group`, given by generator matrices.
fn subgroup_spec(group: &RepSpec, dim: usize, gens: &[Vec<Vec<i64>>]) -> RepSpec {
    RepSpec::matrices(field_char(group), dim, gens)
}

/// Faithful representations used by the generic laws.
pub fn default_reps() -> Vec<RepSpec> {
    let mut reps = vec![
        RepSpec::trivial(1, 0),
        RepSpec::trivial(2, 0),
        sym(2),
        sym(3),
        sym(4),
        neg(1),
        neg(2),
        neg(3),
        jordan(2, 2),
        unipotent_z4(),
        jordan(3, 2),
        jordan(3, 3),
        cyclic(3, &[1, 2], 7),
        RepSpec::regular(sym(2), 0),
        RepSpec::regular(sym(3), 0),
        RepSpec::regular(cyclic(3, &[1], 7), 7),
        RepSpec::regular(cyclic(4, &[1], 5), 5),
        RepSpec::regular(witness_rep(&[2, 2]).expect("small"), 3),
        RepSpec::regular(cyclic(5, &[1], 11), 11),
        RepSpec::regular(cyclic(6, &[1], 7), 7),
    ];
    for f in WITNESS_GROUPS {
        reps.push(witness_rep(f).expect("witness groups are small"));
    }
    reps.extend(small_diagonal_reps().into_iter().map(|(_, r)| r));
    reps
}

/// Groups realized through their Davenport witness.
/// Groups realized through their Davenport witness: every abelian group of
/// order at most 8 except `Z_8`, whose 7-variable witness is slow to process.
pub const WITNESS_GROUPS: &[&[u64]] = &[
    &[2],
    &[3],
    &[4],
    &[2, 2],
    &[5],
    &[6],
    &[7],
    &[2, 4],
    &[2, 2, 2],
];

/// Two- and three-variable diagonal representations of the abelian groups of
/// order 8 to 12, paired with their invariant factors.
pub fn small_diagonal_reps() -> Vec<(Vec<u64>, RepSpec)> {
    let d = RepSpec::diagonal;
    vec![
        (vec![8], cyclic(8, &[1, 7], 17)),
        (vec![9], cyclic(9, &[1, 8], 19)),
        (vec![3, 3], d(7, vec![3, 3], vec![vec![1, 0], vec![0, 1], vec![2, 2]])),
        (vec![10], cyclic(10, &[1, 9], 11)),
        (vec![11], cyclic(11, &[1, 10], 23)),
        (vec![12], cyclic(12, &[1, 11], 13)),
        (vec![2, 6], d(7, vec![2, 6], vec![vec![1, 0], vec![0, 1], vec![1, 5]])),
    ]
}

/// Families for the polarization checks and the copies exploration.
pub fn polarization_families() -> Vec<RepSpec> {
    vec![
        RepSpec::trivial(2, 0),
        sym(2),
        sym(3),
        neg(1),
        neg(2),
        jordan(2, 2),
        jordan(3, 2),
        cyclic(3, &[1, 1], 7),
        cyclic(4, &[1, 3], 5),
        witness_rep(&[2, 2]).expect("small"),
    ]
}

fn is_modular(spec: &RepSpec) -> Result<bool> {
    Ok(build_rep(spec)?.is_modular())
}

// ---- laws ---------------------------------------------------------------

/// Pairs `(G, H <= G)` given by generators of `H`.
fn subgroup_pairs() -> Vec<(RepSpec, Vec<Vec<Vec<i64>>>)> {
    let p = perm_matrix;
    vec![
        (sym(3), vec![p(&[1, 2, 0])]),
        (sym(3), vec![p(&[1, 0, 2])]),
        (sym(3), vec![]),
        (sym(4), vec![p(&[1, 0, 2, 3]), p(&[0, 2, 1, 3])]),
        (sym(4), vec![p(&[1, 2, 0, 3]), p(&[0, 2, 3, 1])]),
        (sym(4), vec![p(&[1, 0, 3, 2]), p(&[2, 3, 0, 1])]),
        (unipotent_z4(), vec![vec![vec![1, 0, 1], vec![0, 1, 0], vec![0, 0, 1]]]),
        (jordan(3, 2), vec![]),
        (neg(2), vec![]),
    ]
}

fn subgroup_instance(g: &RepSpec, gens: &[Vec<Vec<i64>>]) -> (RepSpec, Value) {
    let dim = build_rep(g).map(|x| x.dim()).unwrap_or(0);
    let h = subgroup_spec(g, dim, gens);
    let inst = json!({ "group": g, "subgroup": h });
    (h, inst)
}

/// Builds `H` and checks its generators lie in `G`.
fn checked_subgroup(g: &RepSpec, h: &RepSpec) -> Result<(MatrixGroup, MatrixGroup)> {
    let gg = build_rep(g)?;
    let hh = build_rep(h)?;
    if hh.dim() != gg.dim() || hh.field() != gg.field() {
        return Err(Error::InvalidSpec("subgroup acts on a different space".into()));
    }
    if hh.elements().iter().any(|e| gg.index_of(e).is_none()) {
        return Err(Error::InvalidSpec("subgroup generators are not in the group".into()));
    }
    Ok((gg, hh))
}

fn l1() -> Vec<Job> {
    subgroup_pairs()
        .into_iter()
        .map(|(g, gens)| {
            let (h, inst) = subgroup_instance(&g, &gens);
            job(LawId::L1, inst, "topdeg(H) <= topdeg(G) and dim(H) <= dim(G)", move |ctx| {
                checked_subgroup(&g, &h)?;
                let (tg, dg) = ctx.topdeg_dim(&g)?;
                let (th, dh) = ctx.topdeg_dim(&h)?;
                Ok((
                    json!({ "topdegG": tg, "topdegH": th, "dimG": dg, "dimH": dh }),
                    th <= tg && dh <= dg,
                ))
            })
        })
        .collect()
}

/// Pairs `(U, V)` with `U` a submodule of `V` for the same group.
fn submodule_pairs() -> Vec<(RepSpec, RepSpec)> {
    let sum = RepSpec::direct_sum;
    vec![
        (sym(2), sum(vec![sym(2), neg(1)])),
        (neg(1), sum(vec![sym(2), neg(1)])),
        (sym(3), sum(vec![sym(3), sym(3)])),
        (jordan(2, 1), jordan(2, 2)),
        (jordan(3, 1), jordan(3, 2)),
        (jordan(3, 2), jordan(3, 3)),
        (cyclic(3, &[1], 7), cyclic(3, &[1, 2], 7)),
        (cyclic(4, &[2], 5), cyclic(4, &[1, 2], 5)),
    ]
}

fn l2() -> Vec<Job> {
    submodule_pairs()
        .into_iter()
        .map(|(u, v)| {
            let inst = json!({ "submodule": u, "module": v });
            job(LawId::L2, inst, "topdeg(U) <= topdeg(V)", move |ctx| {
                let (tu, _) = ctx.topdeg_dim(&u)?;
                let (tv, _) = ctx.topdeg_dim(&v)?;
                Ok((json!({ "topdegU": tu, "topdegV": tv }), tu <= tv))
            })
        })
        .collect()
}

fn l3() -> Vec<Job> {
    let pairs = vec![
        (sym(2), neg(1)),
        (sym(2), sym(2)),
        (neg(1), neg(1)),
        (jordan(2, 2), jordan(2, 2)),
        (jordan(3, 2), jordan(3, 1)),
        (cyclic(3, &[1], 7), cyclic(3, &[1], 7)),
        (cyclic(3, &[1], 7), cyclic(3, &[2], 7)),
        (cyclic(4, &[1], 5), cyclic(4, &[2], 5)),
    ];
    pairs
        .into_iter()
        .map(|(v, w)| {
            let s = RepSpec::direct_sum(vec![v.clone(), w.clone()]);
            let inst = json!({ "v": v, "w": w, "sum": s });
            job(LawId::L3, inst, "topdeg(V+W) <= topdeg(V) + topdeg(W)", move |ctx| {
                let (tv, _) = ctx.topdeg_dim(&v)?;
                let (tw, _) = ctx.topdeg_dim(&w)?;
                let (ts, _) = ctx.topdeg_dim(&s)?;
                Ok((json!({ "topdegV": tv, "topdegW": tw, "topdegSum": ts }), ts <= tv + tw))
            })
        })
        .collect()
}

fn l4() -> Vec<Job> {
    let reps = vec![
        sym(2),
        neg(1),
        neg(2),
        sym(3),
        cyclic(3, &[1, 2], 7),
        cyclic(3, &[1, 1, 1], 7),
        jordan(2, 2),
    ];
    reps.into_iter()
        .map(|v| {
            let reg = RepSpec::regular(v.clone(), field_char(&v));
            let inst = json!({ "v": v, "regular": reg });
            job(LawId::L4, inst, "topdeg(V) <= dim(V) * topdeg(V_reg)", move |ctx| {
                let n = build_rep(&v)?.dim() as u32;
                let (tv, _) = ctx.topdeg_dim(&v)?;
                let (tr, _) = ctx.topdeg_dim(&reg)?;
                Ok((json!({ "topdegV": tv, "dimV": n, "topdegReg": tr }), tv <= n * tr))
            })
        })
        .collect()
}

fn l5() -> Vec<Job> {
    default_reps()
        .into_iter()
        .map(|v| {
            job(LawId::L5, json!({ "rep": v }), "dim >= topdeg + 1", move |ctx| {
                let (t, d) = ctx.topdeg_dim(&v)?;
                Ok((json!({ "topdeg": t, "dim": d }), d > t as u64))
            })
        })
        .collect()
}

fn l6() -> Vec<Job> {
    let mut jobs = Vec::new();
    for (p, k, exact) in [(2u64, 2usize, true), (3, 2, true), (3, 3, false)] {
        let max_m = if k == 3 { 2 } else { 3 };
        for m in 1..=max_m {
            let v = RepSpec::vector_copies(jordan(p, k), m);
            let bound = m as u32 * (p as u32 - 1);
            let expected = if exact {
                "topdeg(V^m) = m(p-1)"
            } else {
                "topdeg(V^m) >= m(p-1)"
            };
            jobs.push(job(LawId::L6, json!({ "rep": v, "p": p, "m": m }), expected, move |ctx| {
                let (t, _) = ctx.topdeg_dim(&v)?;
                let pass = if exact { t == bound } else { t >= bound };
                Ok((json!({ "topdeg": t, "bound": bound }), pass))
            }));
        }
    }
    jobs
}

fn l7() -> Vec<Job> {
    let mut jobs = Vec::new();
    for base in [jordan(2, 2), neg(1), sym(2), cyclic(3, &[1], 7)] {
        for m in 1..=3 {
            let v = RepSpec::vector_copies(base.clone(), m);
            jobs.push(job(LawId::L7, json!({ "rep": v, "m": m }), "dim(V^m) >= m", move |ctx| {
                let (_, d) = ctx.topdeg_dim(&v)?;
                Ok((json!({ "dim": d }), d >= m as u64))
            }));
        }
    }
    jobs
}

fn l8() -> Vec<Job> {
    default_reps()
        .into_iter()
        .filter(|r| !is_modular(r).unwrap_or(true))
        .map(|v| {
            job(LawId::L8, json!({ "rep": v }), "beta <= topdeg + 1 <= |G|", move |ctx| {
                let g = build_rep(&v)?;
                let (t, _) = ctx.topdeg_dim(&v)?;
                let order = g.order() as u32;
                let beta = minimal_generators(&g, order.max(1))?
                    .degrees
                    .into_iter()
                    .max()
                    .unwrap_or(0);
                Ok((
                    json!({ "beta": beta, "topdeg": t, "order": order }),
                    beta <= t + 1 && t < order,
                ))
            })
        })
        .collect()
}

fn l9() -> Vec<Job> {
    let p = perm_matrix;
    let pairs = vec![
        (sym(3), vec![p(&[1, 2, 0])]),
        (RepSpec::symmetric(3, 3), vec![p(&[1, 2, 0])]),
        (sym(2), vec![]),
        (sym(4), vec![p(&[1, 2, 0, 3]), p(&[0, 2, 3, 1])]),
        (sym(4), vec![p(&[1, 0, 3, 2]), p(&[2, 3, 0, 1])]),
        (witness_rep(&[2, 2]).expect("small"), vec![vec![vec![1, 0], vec![0, -1]]]),
        (neg(2), vec![]),
    ];
    pairs
        .into_iter()
        .map(|(g, gens)| {
            let (h, inst) = subgroup_instance(&g, &gens);
            job(
                LawId::L9,
                inst,
                "topdeg(G) + 1 <= (G:H)(topdeg(H) + 1)",
                move |ctx| {
                    let (gg, hh) = checked_subgroup(&g, &h)?;
                    if !gg.is_normal_subgroup(&hh)? {
                        return Err(Error::InvalidSpec("subgroup is not normal".into()));
                    }
                    let index = (gg.order() / hh.order()) as u64;
                    if gg.field().divides(index) {
                        return Err(Error::InvalidSpec("characteristic divides the index".into()));
                    }
                    let (tg, _) = ctx.topdeg_dim(&g)?;
                    let (th, _) = ctx.topdeg_dim(&h)?;
                    let rhs = index * (th as u64 + 1);
                    Ok((
                        json!({ "topdegG": tg, "topdegH": th, "index": index }),
                        tg as u64 + 1 <= rhs,
                    ))
                },
            )
        })
        .collect()
}

/// Hilbert-ideal generators of `spec` plus a few derived ideal elements:
/// each generator times each variable, and sums of consecutive generators.
pub fn polarization_samples(h: &HilbertIdealResult, nvars: usize) -> Vec<Polynomial> {
    let gens = &h.generators;
    let mut out: Vec<Polynomial> = gens.clone();
    if let Some(first) = gens.first() {
        let ring = first.ring();
        for g in gens {
            for i in 0..nvars {
                out.push(g * &ring.var(i));
            }
        }
        for w in gens.windows(2) {
            out.push(&w[0] + &w[1]);
        }
    }
    out
}

fn l10() -> Vec<Job> {
    let mut jobs = Vec::new();
    for a in polarization_families() {
        for m in 2..=3usize {
            let b = RepSpec::vector_copies(a.clone(), m);
            let inst = json!({ "rep": a, "m": m });
            let a = a.clone();
            jobs.push(job(LawId::L10, inst, "every polarization coefficient lies in I_B", move |ctx| {
                let n = build_rep(&a)?.dim();
                let i_a = ctx.hilbert(&a)?;
                let i_b = ctx.hilbert(&b)?;
                let (mut polys, mut coeffs, mut members) = (0, 0, 0);
                for f in polarization_samples(&i_a, n) {
                    let c = check_polarization_lemma(&i_a.groebner, &i_b.groebner, &f, m)?;
                    polys += 1;
                    coeffs += c.coefficients;
                    members += c.members;
                }
                Ok((
                    json!({ "polynomials": polys, "coefficients": coeffs, "members": members }),
                    coeffs == members,
                ))
            }));
        }
    }
    jobs
}

fn l11() -> Vec<Job> {
    let mut jobs = Vec::new();
    let families = [
        (RepSpec::trivial(2, 0), 3),
        (sym(2), 3),
        (sym(3), 3),
        (RepSpec::symmetric(2, 5), 3),
        (RepSpec::symmetric(3, 5), 2),
        (sym(4), 1),
    ];
    for (a, max_m) in families {
        for m in 1..=max_m {
            let a = a.clone();
            jobs.push(job(
                LawId::L11,
                json!({ "rep": a, "m": m }),
                "topdeg(V^m) = sum(a_i - 1) for pure-power lead terms x_i^{a_i}",
                move |_| {
                    let r = pure_power_topdeg_check(&build_rep(&a)?, m)?;
                    let pass = r.applicable && r.matches == Some(true);
                    Ok((serde_json::to_value(&r)?, pass))
                },
            ));
        }
    }
    jobs
}

pub fn steinberg_instances() -> Vec<RepSpec> {
    vec![
        RepSpec::trivial(2, 0),
        sym(2),
        sym(3),
        sym(4),
        neg(1),
        neg(2),
        cyclic(3, &[1, 1], 7),
        cyclic(4, &[1, 2], 5),
        jordan(2, 2),
        jordan(3, 2),
        jordan(3, 3),
        RepSpec::vector_copies(jordan(2, 2), 2),
        witness_rep(&[2, 2]).expect("small"),
        RepSpec::diagonal(3, vec![2, 2], vec![vec![1, 0], vec![0, 1]]),
    ]
}

fn l12() -> Vec<Job> {
    steinberg_instances()
        .into_iter()
        .map(|v| {
            job(
                LawId::L12,
                json!({ "rep": v }),
                "dim >= |G|, with equality iff the invariant ring is polynomial",
                move |_| {
                    let r = steinberg_check(&build_rep(&v)?)?;
                    let pass = r.coinvariant_dim >= r.group_order && r.consistent;
                    Ok((serde_json::to_value(&r)?, pass))
                },
            )
        })
        .collect()
}

fn l13() -> Vec<Job> {
    let mut jobs = Vec::new();
    for f in WITNESS_GROUPS {
        let factors = f.to_vec();
        jobs.push(job(
            LawId::L13,
            json!({ "group": factors, "rep": witness_rep(f).expect("small") }),
            "S(G) = topdeg + 1 on the witness representation",
            move |ctx| {
                let s = davenport_exact(&FiniteAbelianGroup::new(&factors)?, DEFAULT_ORDER_CAP)?;
                let (t, _) = ctx.topdeg_dim(&witness_rep(&factors)?)?;
                Ok((json!({ "S": s, "topdeg": t }), s == t as u64 + 1))
            },
        ));
        let factors = f.to_vec();
        jobs.push(job(
            LawId::L13,
            json!({ "group": factors, "rep": zero_sum_rep(f).expect("small") }),
            "S(G) = topdeg + 1 = beta on the zero-sum extension of the witness",
            move |ctx| {
                let s = davenport_exact(&FiniteAbelianGroup::new(&factors)?, DEFAULT_ORDER_CAP)?;
                let spec = zero_sum_rep(&factors)?;
                let g = build_rep(&spec)?;
                let (t, _) = ctx.topdeg_dim(&spec)?;
                let beta = minimal_generators(&g, g.order() as u32)?
                    .degrees
                    .into_iter()
                    .max()
                    .unwrap_or(0);
                Ok((
                    json!({ "S": s, "topdeg": t, "beta": beta }),
                    s == t as u64 + 1 && s == beta as u64,
                ))
            },
        ));
    }
    let others = [
        (vec![3u64], cyclic(3, &[1, 2], 7)),
        (vec![4], cyclic(4, &[1, 3], 5)),
        (vec![4], cyclic(4, &[1, 2], 5)),
        (vec![2, 2], RepSpec::diagonal(3, vec![2, 2], vec![vec![1, 0], vec![0, 1], vec![1, 1]])),
        (vec![6], cyclic(6, &[1, 2, 3], 7)),
    ];
    for (factors, spec) in others.into_iter().chain(small_diagonal_reps()) {
        jobs.push(job(
            LawId::L13,
            json!({ "group": factors, "rep": spec }),
            "topdeg + 1 <= S(G) for any diagonal representation",
            move |ctx| {
                let grp = FiniteAbelianGroup::new(&factors)?;
                let s = davenport_exact(&grp, DEFAULT_ORDER_CAP)?;
                let (t, _) = ctx.topdeg_dim(&spec)?;
                Ok((json!({ "S": s, "topdeg": t }), t as u64 + 1 <= s))
            },
        ));
    }
    jobs
}

pub(crate) fn jobs_for(law: LawId) -> Vec<Job> {
    match law {
        LawId::L1 => l1(),
        LawId::L2 => l2(),
        LawId::L3 => l3(),
        LawId::L4 => l4(),
        LawId::L5 => l5(),
        LawId::L6 => l6(),
        LawId::L7 => l7(),
        LawId::L8 => l8(),
        LawId::L9 => l9(),
        LawId::L10 => l10(),
        LawId::L11 => l11(),
        LawId::L12 => l12(),
        LawId::L13 => l13(),
    }
}

/// Non-modular `(rep, m)` pairs for the copies exploration.
pub fn exploration_instances() -> Vec<(RepSpec, usize)> {
    let mut out = Vec::new();
    for a in polarization_families() {
        if is_modular(&a).unwrap_or(true) {
            continue;
        }
        for m in 2..=3 {
            out.push((a.clone(), m));
        }
    }
    out
}

