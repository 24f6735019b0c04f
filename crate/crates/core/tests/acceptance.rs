//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every comparison is exact; the only
//! tolerances are the wall-clock budgets below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chowlab::chern::{
    c1_cdminus1, chern_alpha, chern_alpha_lower_bound, coeff_f, coeff_g, f_by_recurrence,
    g_by_recurrence, h2_from_chern, h4_permutahedron, h4_permutahedron_check, h_from_moments,
    miyaoka_yau_alpha, perm_c1k, perm_ck, todd_alpha_check, top_chern, verify_chern_inequality,
};
use chowlab::chow::{chow, chow_via_flags, chow_via_recursion, eulerian_polynomial};
use chowlab::cmfs::build_cmfs;
use chowlab::combinat::{factorial, rat, rat_int};
use chowlab::cone::{certify, verify_certificate, ConeOutcome};
use chowlab::corpus::{full_corpus, minor_closed_corpus, CorpusEntry};
use chowlab::moments::{
    binomial_bound, block_placement_count, boolean_sweep, distribution, e_prime_poly,
    e_prime_special_values_check, eulerian_convolution_identity, normal_bound, verify_bounds,
    EPrimeSpecialValues, EqualityDiagnosis, SweepPoint,
};
use chowlab::{FlagTable, Matroid, RankIndexSet, UniPoly};

const CRITERION_1_BUDGET: Duration = Duration::from_secs(120);
const CRITERION_4_BUDGET: Duration = Duration::from_secs(60);
const CRITERION_11_BUDGET: Duration = Duration::from_secs(600);

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Option<Outcome> {
    (elapsed > budget).then(|| fail(format!("{what} took {elapsed:?}, budget {budget:?}")))
}

fn equality_expected(m: &Matroid) -> bool {
    EqualityDiagnosis::predict(m.d(), m.simplification_is_boolean()).is_equality()
}

fn c01_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let corpus = minor_closed_corpus();
    for e in &corpus {
        let (a, b) = (chow_via_flags(&e.matroid), chow_via_recursion(&e.matroid));
        if a != b {
            return fail(format!("{}: flags {a}, recursion {b}", e.name));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, CRITERION_1_BUDGET, "corpus")
        .unwrap_or_else(|| pass(format!("{} matroids agree in {elapsed:.2?}", corpus.len())))
}

fn c02_boolean_identification() -> Outcome {
    for n in 1..=9 {
        let m = Matroid::boolean(n).unwrap();
        let p = chow(&m).unwrap();
        if p != eulerian_polynomial(n) {
            return fail(format!("U_{n}: {p}"));
        }
        if p.eval_int(1) != rat_int(factorial(n as u64)) {
            return fail(format!("U_{n}: coefficient sum {}", p.eval_int(1)));
        }
    }
    pass("chow(U_n) is the Eulerian polynomial with sum n! for n <= 9")
}

fn c03_variance_bound(corpus: &[CorpusEntry]) -> Outcome {
    for name in ["pg:2,2+parallel", "uniform:2,3+parallel"] {
        if !corpus.iter().any(|e| e.name == name) {
            return fail(format!("{name} missing from the corpus"));
        }
    }
    let mut equalities = 0;
    for e in corpus {
        let m = &e.matroid;
        let var = distribution(m).central_moment(2);
        let bound = rat(m.d() as i64 + 2, 12);
        if var > bound {
            return fail(format!("{}: variance {var} > {bound}", e.name));
        }
        if (var == bound) != equality_expected(m) {
            return fail(format!("{}: equality {} but predicted {}", e.name, var == bound, equality_expected(m)));
        }
        equalities += usize::from(var == bound);
    }
    pass(format!("{} matroids, {equalities} equality cases, all predicted", corpus.len()))
}

fn c04_boolean_sweep() -> Outcome {
    let start = Instant::now();
    let s = boolean_sweep(40, 25);
    let elapsed = start.elapsed();
    if let Some(o) = within(elapsed, CRITERION_4_BUDGET, "sweep") {
        return o;
    }
    if !s.violations.is_empty() {
        return fail(format!("violations at {:?}", s.violations));
    }
    let mut expected: Vec<SweepPoint> = (1..=40).map(|d| SweepPoint { d, t: 1 }).collect();
    expected.push(SweepPoint { d: 2, t: 2 });
    let mut got = s.equalities.clone();
    got.sort_by_key(|p| (p.t, p.d));
    expected.sort_by_key(|p| (p.t, p.d));
    check(
        got == expected,
        format!("{} points, no violations, equalities {:?} in {elapsed:.2?}", s.checked, summarize(&got)),
    )
}

fn summarize(points: &[SweepPoint]) -> String {
    let t1 = points.iter().filter(|p| p.t == 1).count();
    let other: Vec<_> = points.iter().filter(|p| p.t != 1).map(|p| (p.d, p.t)).collect();
    format!("t=1 for {t1} values of d, plus {other:?}")
}

fn c05_e_prime() -> Outcome {
    let x = UniPoly::x();
    let dp2 = &x + &UniPoly::from_integers([2]);
    let displayed = [
        (2, dp2.scale(&rat(1, 12))),
        (4, (&dp2 * &UniPoly::from_integers([8, 5])).scale(&rat(1, 240))),
        (6, (&dp2 * &UniPoly::from_integers([72, 98, 35])).scale(&rat(1, 4032))),
    ];
    for (k, p) in displayed {
        if e_prime_poly(k) != p {
            return fail(format!("E'_{k} = {}, expected {p}", e_prime_poly(k)));
        }
    }
    for k in 1..=4 {
        if !e_prime_special_values_check(k) {
            return fail(format!(
                "E'_{}: {:?} vs {:?}",
                2 * k,
                EPrimeSpecialValues::of(k),
                EPrimeSpecialValues::expected(k)
            ));
        }
    }
    pass("E'_2, E'_4, E'_6 match; special values and leading coefficients match for 2k <= 8")
}

fn c06_cmfs() -> Outcome {
    let state = match build_cmfs(6) {
        Ok(s) => s,
        Err(e) => return fail(e.to_string()),
    };
    let h = [rat(1, 1), rat(0, 1), rat(1, 24), rat(0, 1), rat(1, 1152), rat(0, 1), rat(-1, 46080)];
    if state.h_coeffs != h {
        return fail(format!("h = {:?}", state.h_coeffs));
    }
    let x = UniPoly::x();
    let dp2 = &x + &UniPoly::from_integers([2]);
    let f4 = &e_prime_poly(4) + &dp2.scale(&rat(1, 120));
    let f6 = (&dp2 * &UniPoly::from_integers([6, 20, 5])).scale(&rat(1, 576));
    if state.f_polys[4] != f4 || state.f_polys[6] != f6 {
        return fail(format!("f_4 = {}, f_6 = {}", state.f_polys[4], state.f_polys[6]));
    }
    let c: Vec<_> = state.steps.iter().map(|s| s.c.clone()).collect();
    // C at order 2 is stated directly; at order 0 the constant is fixed by
    // h_2 = C / 2!, checked against the stated h_2 = 1/24
    if c[1] != rat(1, 48) || &c[0] / rat(2, 1) != rat(1, 24) {
        return fail(format!("step constants {c:?}"));
    }
    pass(format!("h = (1, 1/24, 1/1152, -1/46080), f_4 and f_6 as displayed, C = {}, {}", c[0], c[1]))
}

fn c06b_step_constant_order_zero() -> Outcome {
    let state = build_cmfs(2).unwrap();
    let c0 = &state.steps[0].c;
    check(
        *c0 == rat(1, 24),
        format!("stated C = 1/24 at order 0; certified search gives {c0} (h_2 = C/2! = {})", c0 / rat(2, 1)),
    )
}

fn c07_moment_chern_bridge(corpus: &[CorpusEntry]) -> Outcome {
    for e in corpus {
        let m = &e.matroid;
        let (cd, c1) = (top_chern(m), c1_cdminus1(m));
        if h_from_moments(m, 2) != h2_from_chern(m.d(), &cd, &c1) {
            return fail(format!("{}: h_2 mismatch", e.name));
        }
        if rat_int(cd.clone()) != chow_via_flags(m).eval_int(1) {
            return fail(format!("{}: c_d = {cd} differs from H(1)", e.name));
        }
    }
    pass(format!("h_2 identity and c_d = H(1) on {} matroids", corpus.len()))
}

fn c08_chern_inequality(corpus: &[CorpusEntry]) -> Outcome {
    for e in corpus {
        let r = verify_chern_inequality(&e.matroid);
        if !r.holds || r.equality != equality_expected(&e.matroid) {
            return fail(format!("{}: {r:?}", e.name));
        }
    }
    let fano = Matroid::projective_geometry(2, 2).unwrap();
    let pair = (c1_cdminus1(&fano), top_chern(&fano));
    check(
        pair == (2.into(), 10.into()),
        format!("holds on {} matroids with the predicted equality set; Fano gives {pair:?}", corpus.len()),
    )
}

fn c09_permutahedron() -> Outcome {
    if perm_ck(4, 2).0 != rat_int(130) || perm_c1k(4, 1) != rat_int(120) {
        return fail(format!("c_2c_2 = {}, c_1c_3 = {}", perm_ck(4, 2).0, perm_c1k(4, 1)));
    }
    for d in 0..=12 {
        for k in 0..=d {
            let (a, b) = perm_ck(d, k);
            if a != b {
                return fail(format!("d = {d}, k = {k}: {a} vs {b}"));
            }
        }
    }
    for d in 4..=8 {
        if !h4_permutahedron_check(d) {
            return fail(format!("h_4 assembly fails at d = {d}"));
        }
        if h4_permutahedron(d) != h_from_moments(&Matroid::boolean(d + 1).unwrap(), 4) {
            return fail(format!("h_4 differs from the moment route at d = {d}"));
        }
    }
    pass("130 and 120; both c_k c_{d-k} formulas agree for d <= 12; h_4 checks for 4 <= d <= 8")
}

fn c10_alpha_expansions(corpus: &[CorpusEntry]) -> Outcome {
    for d in 0..=8 {
        for j in RankIndexSet::all(d) {
            for k in 0..=d {
                if coeff_f(k, &j) != f_by_recurrence(k as i64, &j) || coeff_g(k, &j) != g_by_recurrence(k as i64, &j) {
                    return fail(format!("closed form differs from recurrence at d = {d}, k = {k}, {j:?}"));
                }
            }
        }
    }
    let mut my_checked = 0;
    for e in corpus {
        let m = &e.matroid;
        let d = m.d();
        for k in 0..=d {
            let c = chern_alpha(m, k).unwrap();
            if c < chern_alpha_lower_bound(d, k) {
                return fail(format!("{}: c_{k} α^(d-k) = {c} below the bound", e.name));
            }
        }
        for k in 0..=d.min(3) {
            if !todd_alpha_check(m, k).unwrap() {
                return fail(format!("{}: Todd component k = {k}", e.name));
            }
        }
        if d >= 2 {
            let my = miyaoka_yau_alpha(m).unwrap();
            if !my.holds || my.value != my.closed_form {
                return fail(format!("{}: {my:?}", e.name));
            }
            let table = FlagTable::of_matroid(m);
            let direct = chowlab::Integer::from(3 * d as i64 + 2)
                * (table.singleton(2) - chowlab::combinat::binomial(d as i64 + 1, 2));
            if direct != my.value {
                return fail(format!("{}: closed form {direct} vs {}", e.name, my.value));
            }
            my_checked += 1;
        }
    }
    pass(format!(
        "closed forms match recurrences for d <= 8; bounds, Todd k <= 3 and Miyaoka-Yau ({my_checked}) hold on {} matroids",
        corpus.len()
    ))
}

fn c11_cone() -> Outcome {
    let mut times = Vec::new();
    for d in 1..=10 {
        let start = Instant::now();
        let outcome = match certify(d) {
            Ok(o) => o,
            Err(e) => return fail(format!("d = {d}: {e}")),
        };
        let elapsed = start.elapsed();
        match outcome {
            ConeOutcome::Certified(c) if verify_certificate(&c) => {}
            other => return fail(format!("d = {d}: {other:?}")),
        }
        if let Some(o) = within(elapsed, CRITERION_11_BUDGET, &format!("d = {d}")) {
            return o;
        }
        times.push(elapsed);
    }
    pass(format!("certified and verified for 1 <= d <= 10; d = 10 took {:.2?}", times[9]))
}

fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    (1..=total)
        .flat_map(|first| {
            compositions(total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn c12_placements() -> Outcome {
    let mut classes = 0;
    for sum in 1..=6usize {
        for blocks in compositions(sum) {
            for total in 0..=14usize {
                let lo = sum - 1;
                let counts: Vec<u64> = (lo..=total.saturating_sub(lo))
                    .filter(|a| total >= *a && total - a >= lo)
                    .map(|a| block_placement_count(a, total - a, &blocks))
                    .collect();
                if counts.windows(2).any(|w| w[0] != w[1]) {
                    return fail(format!("blocks {blocks:?}, a + b = {total}: {counts:?}"));
                }
                classes += usize::from(counts.len() > 1);
            }
        }
    }
    for a in 0..=6 {
        for b in 0..=6 {
            for k in 0..=(a.min(b) as u32 + 1) {
                let (lhs, rhs) = eulerian_convolution_identity(a, b, k);
                if lhs != rhs {
                    return fail(format!("a = {a}, b = {b}, k = {k}: {lhs} vs {rhs}"));
                }
            }
        }
    }
    pass(format!("invariance on {classes} classes with several splits; moment identity for a, b <= 6"))
}

fn c13_bound_envelope(corpus: &[CorpusEntry]) -> Outcome {
    for e in corpus {
        let r = verify_bounds(&e.matroid, 8);
        if let Some(b) = r.bound_comparisons.iter().find(|b| !b.holds) {
            return fail(format!("{}: {b:?}", e.name));
        }
    }
    let (normal, binomial) = (normal_bound(2, 8), binomial_bound(2, 8));
    check(
        normal == rat(35, 27) && binomial <= rat(1, 1) && binomial < normal,
        format!("envelope holds for k <= 8 on {} matroids; at (2, 8) normal {normal}, binomial {binomial}", corpus.len()),
    )
}

fn main() -> ExitCode {
    let corpus = full_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 oracle equivalence", Box::new(c01_oracle_equivalence)),
        ("2 boolean identification", Box::new(c02_boolean_identification)),
        ("3 variance bound", Box::new(|| c03_variance_bound(&corpus))),
        ("4 boolean sweep", Box::new(c04_boolean_sweep)),
        ("5 E' polynomials", Box::new(c05_e_prime)),
        ("6 CMFS construction", Box::new(c06_cmfs)),
        ("6b CMFS step constant at order 0", Box::new(c06b_step_constant_order_zero)),
        ("7 moment-Chern bridge", Box::new(|| c07_moment_chern_bridge(&corpus))),
        ("8 Chern inequality", Box::new(|| c08_chern_inequality(&corpus))),
        ("9 permutahedral numbers", Box::new(c09_permutahedron)),
        ("10 alpha expansions", Box::new(|| c10_alpha_expansions(&corpus))),
        ("11 cone certificates", Box::new(c11_cone)),
        ("12 placement oracle", Box::new(c12_placements)),
        ("13 bound envelope", Box::new(|| c13_bound_envelope(&corpus))),
    ];
    let mut failures = 0;
    for (name, run) in &criteria {
        let outcome = run();
        failures += usize::from(!outcome.ok);
        println!("{} criterion {name}: {}", if outcome.ok { "PASS" } else { "FAIL" }, outcome.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
