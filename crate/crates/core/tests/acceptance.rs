//! Acceptance criteria AC1..AC9. Prints one line per criterion and exits
//! non-zero when any fails. All comparisons are exact; the only tolerances are
//! the wall-clock budgets below.

mod common;

use std::cell::Cell;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use coinv::davenport::{abelian_groups_up_to, davenport_exact, olson_formula, FiniteAbelianGroup};
use coinv::harness::laws::{polarization_families, steinberg_instances, witness_rep, zero_sum_rep};
use coinv::harness::{run_law_suite, SuiteConfig};
use coinv::invring::{coinvariant_summary, default_degree_cap, hilbert_ideal, noether_number, steinberg_check};
use coinv::polarize::check_polarization_lemma;
use coinv::polyalg::{Monomial, Polynomial};
use coinv::repaction::{build_rep, RepSpec};

const AC1_BUDGET: Duration = Duration::from_secs(30);
const AC2_BUDGET: Duration = Duration::from_secs(60);
const AC4_BUDGET: Duration = Duration::from_secs(30);
const AC9_BUDGET: Duration = Duration::from_secs(60);
/// Minimum `(f, m)` pairs for AC7 and randomized cases for AC9.
const AC7_MIN_CASES: usize = 200;
const AC9_MIN_CASES: usize = 1000;
const SEED: [u8; 32] = *b"coinvariant-acceptance-seed-0001";

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn ac1() -> Check {
    for n in 2..=4usize {
        let g = build_rep(&RepSpec::symmetric(n, 0)).map_err(err)?;
        let s = coinvariant_summary(&g, default_degree_cap(&g)).map_err(err)?;
        let factorial: u64 = (1..=n as u64).product();
        let binom = (n * (n - 1) / 2) as u32;
        ensure(s.top_degree == Some(binom) && s.dim() == Some(factorial), || {
            format!("S_{n}: got {}", s.line())
        })?;
        if n <= 3 {
            let gm = g.vector_copies(2).map_err(err)?;
            let sm = coinvariant_summary(&gm, default_degree_cap(&gm)).map_err(err)?;
            ensure(sm.top_degree == Some(binom), || format!("S_{n} m=2: got {}", sm.line()))?;
        }
    }
    Ok("topdeg = n(n-1)/2 and dim = n! for n = 2,3,4; m = 2 unchanged for n = 2,3".into())
}

fn ac2() -> Check {
    let mut seen = Vec::new();
    for (p, max_m) in [(2u64, 4usize), (3, 3)] {
        for m in 1..=max_m {
            let g = build_rep(&RepSpec::vector_copies(RepSpec::jordan(p, 2), m)).map_err(err)?;
            let t = coinvariant_summary(&g, default_degree_cap(&g))
                .map_err(err)?
                .top_degree;
            let want = m as u32 * (p as u32 - 1);
            ensure(t == Some(want), || format!("p={p} m={m}: topdeg {t:?}, want {want}"))?;
            seen.push(want);
        }
    }
    Ok(format!("topdeg(V_2^m) = m(p-1): {seen:?}"))
}

fn ac3() -> Check {
    for n in 2..=4usize {
        let g = build_rep(&RepSpec::symmetric(n, 0)).map_err(err)?;
        let h = hilbert_ideal(&g, default_degree_cap(&g)).map_err(err)?;
        let want: Vec<Monomial> = (0..n)
            .map(|i| {
                let mut m = Monomial::one(n);
                m.set_exp(i, i as u16 + 1);
                m
            })
            .collect();
        let mut got = h.groebner.lead_term_ideal().generators().to_vec();
        got.sort();
        let mut want_sorted = want.clone();
        want_sorted.sort();
        ensure(got == want_sorted, || format!("n={n}: lead terms {got:?}"))?;
    }
    Ok("L(I) = (x1, x2^2, ..., xn^n) under lex for n = 2,3,4".into())
}

fn ac4() -> Check {
    let mut compared = 0;
    for g in abelian_groups_up_to(32) {
        if let Some(f) = olson_formula(&g) {
            let s = davenport_exact(&g, 64).map_err(err)?;
            ensure(s == f, || format!("{g}: exact {s}, formula {f}"))?;
            compared += 1;
        }
    }
    for (factors, want) in [(&[2u64, 2][..], 3u64), (&[3, 9], 11), (&[2, 2, 2], 4)] {
        let g = FiniteAbelianGroup::new(factors).map_err(err)?;
        let s = davenport_exact(&g, 64).map_err(err)?;
        ensure(s == want, || format!("{g}: S = {s}, want {want}"))?;
    }
    Ok(format!(
        "exact = formula on {compared} groups of order <= 32; S(Z2xZ2)=3, S(Z3xZ9)=11, S(Z2^3)=4"
    ))
}

fn ac5() -> Check {
    let mut rows = Vec::new();
    for factors in [&[2u64][..], &[3], &[4], &[2, 2]] {
        let s = davenport_exact(&FiniteAbelianGroup::new(factors).map_err(err)?, 64).map_err(err)?;
        for (kind, spec) in [("witness", witness_rep(factors)), ("zero-sum", zero_sum_rep(factors))] {
            let g = build_rep(&spec.map_err(err)?).map_err(err)?;
            let t = coinvariant_summary(&g, default_degree_cap(&g))
                .map_err(err)?
                .top_degree
                .unwrap_or(0);
            ensure(t as u64 + 1 == s, || format!("{factors:?} {kind}: topdeg {t}, S {s}"))?;
            if kind == "zero-sum" {
                let beta = noether_number(&g, g.order() as u32).map_err(err)?;
                ensure(beta as u64 == s, || format!("{factors:?}: beta {beta}, S {s}"))?;
            }
        }
        rows.push(format!("{factors:?}:S={s}"));
    }
    Ok(format!("topdeg + 1 = beta = S(G) for {}", rows.join(" ")))
}

fn ac6() -> Check {
    let mut n = 0;
    for spec in steinberg_instances() {
        let g = build_rep(&spec).map_err(err)?;
        let r = steinberg_check(&g).map_err(err)?;
        ensure(r.coinvariant_dim >= r.group_order && r.consistent, || {
            format!("{}: {r:?}", spec.to_json())
        })?;
        n += 1;
    }
    let expect = [
        (RepSpec::symmetric(2, 0), 2u64, true),
        (RepSpec::symmetric(3, 0), 6, true),
        (RepSpec::symmetric(4, 0), 24, true),
        (RepSpec::trivial(2, 0), 1, true),
        (RepSpec::negation(2, 0), 3, false),
        (RepSpec::diagonal(7, vec![3], vec![vec![1], vec![1]]), 6, false),
    ];
    for (spec, dim, poly) in expect {
        let r = steinberg_check(&build_rep(&spec).map_err(err)?).map_err(err)?;
        ensure(
            r.coinvariant_dim == dim && r.is_polynomial == poly && r.consistent,
            || format!("{}: {r:?}", spec.to_json()),
        )?;
        ensure((r.coinvariant_dim == r.group_order) == poly, || format!("{r:?}"))?;
    }
    Ok(format!("dim >= |G| and consistent on {n} instances; named cases exact"))
}

fn ac7() -> Check {
    struct Family {
        spec: RepSpec,
        generators: Vec<Polynomial>,
        i_a: coinv::groebner::GroebnerBasis,
        i_b: [coinv::groebner::GroebnerBasis; 2],
    }
    let mut families = Vec::new();
    for spec in polarization_families() {
        let g = build_rep(&spec).map_err(err)?;
        let h = hilbert_ideal(&g, default_degree_cap(&g)).map_err(err)?;
        let mut i_b = Vec::new();
        for m in [2, 3] {
            let gm = g.vector_copies(m).map_err(err)?;
            i_b.push(hilbert_ideal(&gm, default_degree_cap(&gm)).map_err(err)?.groebner);
        }
        let i_b: [_; 2] = i_b.try_into().expect("two copies counts");
        families.push(Family {
            spec,
            generators: h.generators,
            i_a: h.groebner,
            i_b,
        });
    }
    let check = |fam: &Family, f: &Polynomial, m: usize| -> Result<(), String> {
        let c = check_polarization_lemma(&fam.i_a, &fam.i_b[m - 2], f, m).map_err(err)?;
        ensure(c.holds, || format!("{}: f = {f}, m = {m}: {c:?}", fam.spec.to_json()))
    };
    let mut cases = 0;
    for fam in &families {
        for f in &fam.generators {
            for m in [2, 3] {
                check(fam, f, m)?;
                cases += 1;
            }
        }
    }
    // Random ideal elements: sum of generators times random polynomials.
    let random = Cell::new(0usize);
    let strategy = (0..families.len(), 2usize..=3).prop_flat_map(|(fi, m)| {
        let fam = &families[fi];
        let ring = fam.generators[0].ring();
        let k = fam.generators.len();
        (
            Just(fi),
            Just(m),
            proptest::collection::vec(common::poly_in(ring, 2, 1), k),
        )
    });
    runner(AC7_MIN_CASES as u32)
        .run(&strategy, |(fi, m, mults)| {
            let fam = &families[fi];
            let f = fam
                .generators
                .iter()
                .zip(&mults)
                .fold(fam.generators[0].ring().zero(), |acc, (g, r)| &acc + &(g * r));
            check(fam, &f, m).map_err(TestCaseError::fail)?;
            random.set(random.get() + 1);
            Ok(())
        })
        .map_err(err)?;
    let total = cases + random.get();
    ensure(total >= AC7_MIN_CASES, || format!("only {total} cases"))?;
    Ok(format!(
        "{total} (f, m) cases ({cases} generators, {} random ideal elements), 0 failures",
        random.get()
    ))
}

fn ac8() -> Check {
    let report = run_law_suite(&SuiteConfig::default());
    if let Some(c) = report.failures().next() {
        return Err(format!("{} failed on {}: {}", c.law_id, c.instance, c.observed));
    }
    let rows = &report.exploration;
    ensure(rows.iter().all(|r| r.error.is_none()), || "exploration case errored".into())?;
    let equal = rows.iter().filter(|r| r.equal == Some(true)).count();
    Ok(format!(
        "{} law cases pass; exploration (informational): topdeg(V^m) = topdeg(V) on {equal}/{} non-modular cases",
        report.cases.len(),
        rows.len()
    ))
}

fn ac9() -> Check {
    use common::*;
    let mut total = 0usize;
    let mut run = |name: &str, cases: u32, r: Result<(), String>| -> Result<(), String> {
        r.map_err(|e| format!("{name}: {e}"))?;
        total += cases as usize;
        Ok(())
    };
    run("ring axioms", 300, runner(300).run(&ring_and_triple(), ring_axioms).map_err(err))?;
    run(
        "substitution",
        150,
        runner(150).run(&substitution_case(), substitution_homomorphism).map_err(err),
    )?;
    run("monomial orders", 200, runner(200).run(&order_case(), order_axioms).map_err(err))?;
    run("action axioms", 150, runner(150).run(&action_case(), action_axioms).map_err(err))?;
    run("reynolds", 100, runner(100).run(&reynolds_case(), reynolds_idempotent).map_err(err))?;
    run("groebner", 100, runner(100).run(&ideal_case(), groebner_idempotent).map_err(err))?;
    run(
        "series order",
        80,
        runner(80).run(&homogeneous_ideal_case(), series_order_independent).map_err(err),
    )?;
    run(
        "coinvariant order",
        24,
        runner(24)
            .run(&coinvariant_order_case(), coinvariants_order_independent)
            .map_err(err),
    )?;
    ensure(total >= AC9_MIN_CASES, || format!("only {total} cases"))?;
    Ok(format!("{total} randomized cases, 0 failures"))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Option<Duration>, fn() -> Check); 9] = [
        ("AC1", "S_n coinvariants", Some(AC1_BUDGET), ac1),
        ("AC2", "modular growth", Some(AC2_BUDGET), ac2),
        ("AC3", "S_n lead-term ideal", None, ac3),
        ("AC4", "Davenport exact vs closed forms", Some(AC4_BUDGET), ac4),
        ("AC5", "Davenport-coinvariant bridge", None, ac5),
        ("AC6", "Steinberg bound", None, ac6),
        ("AC7", "polarization of Hilbert-ideal elements", None, ac7),
        ("AC8", "law suite", None, ac8),
        ("AC9", "property suites", Some(AC9_BUDGET), ac9),
    ];
    let mut failed = 0;
    for (id, title, budget, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let over = budget.is_some_and(|b| elapsed > b);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over budget {:?}", budget.unwrap())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{id} {status} {title}: {detail} [{:.2}s]", elapsed.as_secs_f64());
    }
    if failed == 0 {
        println!("acceptance: all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
