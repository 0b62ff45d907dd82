//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every comparison is exact; each criterion also has a
//! wall-clock limit.

mod common;

use std::time::{Duration, Instant};

use common::*;
use cyclobound::codes::{
    bch_bound, brute_force_distance, code_from_defining_set, coset_union, exact_distance_by_certificates, Distance,
};
use cyclobound::vandermonde::{compute_fr, f_poly};
use cyclobound::variety::{
    certify_roots_of_unity, count_points, curve_count_ex9, enumerate_points, predicted_subspaces, varieties_equal,
    verify_witness, Outcome,
};
use cyclobound::{Budgets, MultiPoly};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Verdict = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Verdict,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(s: &str, n: usize) -> MultiPoly {
    MultiPoly::parse(s, Some(n)).unwrap()
}

fn binary_coeffs(r: u32) -> Vec<String> {
    compute_fr(r)
        .unwrap()
        .f_r
        .binary_form_coeffs()
        .unwrap()
        .iter()
        .map(|c| c.to_string())
        .collect()
}

fn symbolic_fixtures() -> Verdict {
    let fixtures = [
        (&[0, 1, 3][..], "x1 + x2 + x3"),
        (&[0, 1, 4], "x1^2 + x2^2 + x3^2 + x2*x3 + x3*x1 + x1*x2"),
        (
            &[0, 1, 5],
            "x1^3 + x2^3 + x3^3 + x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 + x1*x2*x3",
        ),
    ];
    for (u, text) in fixtures {
        let got = f_poly(&set(u)).normalized();
        ensure(got == poly(text, 3).normalized(), || format!("f[{u:?}] = {got}"))?;
    }
    let f8 = binary_coeffs(8);
    ensure(f8 == ["1", "3", "7", "9", "7", "3", "1"], || format!("F_8 {f8:?}"))?;
    let f14 = binary_coeffs(14);
    let want = ["1", "6", "31", "100", "221", "350", "407", "350", "221", "100", "31", "6", "1"];
    ensure(f14 == want, || format!("F_14 {f14:?}"))?;
    Ok("f[{0,1,3}], f[{0,1,4}], f[{0,1,5}], F_8, F_14 exact".into())
}

fn point_sets() -> Verdict {
    let b = Budgets::default();
    let pts: Vec<String> = enumerate_points(&set(&[0, 1, 3, 4]), 3, &gf(7), &b)
        .unwrap()
        .iter()
        .map(|p| p.to_string())
        .collect();
    ensure(pts == ["(1:2:4)", "(1:4:2)"], || format!("{{0,1,3,4}} over GF(7): {pts:?}"))?;
    for q in [5u64, 7, 11] {
        let f = gf(q);
        let mut got: Vec<Vec<u64>> = enumerate_points(&set(&[0, 1, 3, 5]), 3, &f, &b)
            .unwrap()
            .iter()
            .map(|p| p.raw())
            .collect();
        got.sort();
        let m1 = q - 1;
        let mut want = vec![vec![0, 1, m1], vec![1, 0, m1], vec![1, m1, 0]];
        want.sort();
        ensure(got == want, || format!("{{0,1,3,5}} over GF({q}): {got:?}"))?;
    }
    Ok("{(1:2:4),(1:4:2)}; 3 points (0:1:-1),(1:0:-1),(1:-1:0) for q = 5, 7, 11".into())
}

fn point_count_formula() -> Verdict {
    let b = Budgets::default();
    let t = set(&[0, 1, 3, 4, 6, 7, 9]);
    let mut parts = Vec::new();
    for q in [7u64, 13] {
        let want = 41 * q.pow(3) - 184 * q * q + 406 * q - 413;
        let got = count_points(&t, 6, &gf(q), &b).unwrap();
        ensure(got == want, || format!("GF({q}): {got} != {want}"))?;
        parts.push(format!("GF({q}) = {got}"));
    }
    Ok(parts.join(", "))
}

fn golay_pipeline() -> Verdict {
    let b = Budgets::default();
    let s = coset_union(23, 2, &[1]).unwrap();
    let code = code_from_defining_set(23, 2, &s, &b).unwrap();
    let brute = brute_force_distance(&code, &b).unwrap();
    let cert = exact_distance_by_certificates(&code, 12, &b).unwrap().distance;
    let bch = bch_bound(&s, 23);
    ensure(code.k() == 12, || format!("k = {}", code.k()))?;
    ensure(brute == 7 && cert == Distance::Exact(7) && bch == 5, || {
        format!("brute {brute}, certificates {cert:?}, bch {bch}")
    })?;
    Ok("[23,12]: brute force 7, certificates Exact(7), BCH 5".into())
}

fn oracle_equivalence() -> Verdict {
    let b = Budgets::default();
    let mut codes = 0;
    for q in [2u64, 3] {
        for n in valid_lengths(q, 15) {
            for s in closed_sets(n, q) {
                let code = code_from_defining_set(n, q, &s, &b).unwrap();
                if code.k() == 0 {
                    continue;
                }
                let brute = brute_force_distance(&code, &b).unwrap();
                let cert = exact_distance_by_certificates(&code, n as usize, &b).unwrap().distance;
                ensure(cert == Distance::Exact(brute), || {
                    format!("n={n} q={q} S={s:?}: certificates {cert:?}, brute force {brute}")
                })?;
                codes += 1;
            }
        }
    }
    Ok(format!("{codes} codes, 0 mismatches"))
}

fn subspace_theorem() -> Verdict {
    let b = Budgets::default();
    let mut parts = Vec::new();
    for (t, k, m, q, want) in [(2, 1, 3, 7, 2), (2, 2, 3, 7, 8), (3, 2, 4, 13, 30), (2, 3, 3, 7, 20)] {
        let fam = predicted_subspaces(t, k, m, &gf(q), &b).unwrap();
        ensure(fam.subspaces.len() == want && fam.predicted_count == want as u128, || {
            format!("(t,k,m)=({t},{k},{m}): {} subspaces", fam.subspaces.len())
        })?;
        ensure(fam.all_contained(), || {
            format!("(t,k,m)=({t},{k},{m}): {} not contained", fam.containment_failures.len())
        })?;
        parts.push(want.to_string());
    }
    Ok(format!("counts {} all contained", parts.join("/")))
}

fn variety_equalities() -> Verdict {
    let b = Budgets::default();
    let pairs: [(&[u32], &[u32], usize, u64); 4] = [
        (&[0, 1, 3, 4, 6], &[0, 1, 3, 4, 6, 7], 4, 7),
        (&[0, 1, 2, 4, 5, 6, 8], &[0, 1, 2, 4, 5, 6, 8, 9, 10], 5, 13),
        (&[0, 1, 3, 4, 6, 7], &[0, 1, 3, 4, 6, 7, 9, 10], 5, 7),
        // q = 5 is the only q ≡ 1 (mod 4) where this pair agrees; from q = 9
        // on the first set has q - 5 extra points (see README)
        (&[0, 1, 4, 5, 8], &[0, 1, 4, 5, 8, 9], 4, 5),
    ];
    let mut parts = Vec::new();
    for (a, c, t, q) in pairs {
        let eq = varieties_equal(&set(a), &set(c), t, &gf(q), &b).unwrap();
        ensure(eq, || format!("{a:?} vs {c:?} over GF({q})"))?;
        parts.push(format!("GF({q})"));
    }
    Ok(format!("exs. 5, 6, 7, 8 equal over {}", parts.join(", ")))
}

fn genus_four_curve() -> Verdict {
    let b = Budgets::default();
    let c47 = curve_count_ex9(&gf(47), Some(12), &b).unwrap();
    let c67 = curve_count_ex9(&gf(67), None, &b).unwrap();
    ensure(c47.count == 0 && c47.matches == Some(true), || format!("GF(47): {}", c47.count))?;
    ensure(c67.count > 0, || "GF(67): no points".into())?;
    Ok(format!("#X(F_47) = 0, #X(F_67) = {}", c67.count))
}

fn corollary_certificates() -> Verdict {
    let b = Budgets::default();
    let ex1 = set(&[0, 1, 3, 4]);
    let ex2 = set(&[0, 1, 3, 5]);
    let mut runs = 0;
    let mut witnesses = 0;
    for q in [2u64, 3, 4, 5] {
        for n in valid_lengths(q, 30).into_iter().filter(|&n| n >= 3) {
            let c1 = certify_roots_of_unity(&ex1, 3, q, n, &b).unwrap();
            if n % 3 == 0 {
                ensure(c1.outcome == Outcome::Witness, || format!("ex. 1 T passes at q={q}, n={n}"))?;
                ensure(verify_witness(&c1, &b).unwrap(), || format!("witness fails at q={q}, n={n}"))?;
                witnesses += 1;
            } else {
                ensure(c1.passed(), || format!("ex. 1 T fails at q={q}, n={n}: {:?}", c1.witness))?;
            }
            let c2 = certify_roots_of_unity(&ex2, 3, q, n, &b).unwrap();
            ensure(c2.passed(), || format!("ex. 2 T fails at q={q}, n={n}: {:?}", c2.witness))?;
            runs += 2;
        }
    }
    let c9 = certify_roots_of_unity(&set(&[0, 1, 5, 6, 10]), 4, 47, 46, &b).unwrap();
    ensure(c9.passed() && c9.s == 1, || format!("{{0,1,5,6,10}} at q=47, n=46: {:?}", c9.witness))?;
    Ok(format!("{runs} runs over q = 2, 3, 4, 5, n <= 30; {witnesses} witnesses at 3 | n; q=47 n=46 pass"))
}

fn property_suites() -> Verdict {
    const CASES: u32 = 128;
    // a runner remembers its successes, so each suite gets a fresh one
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let cases = std::cell::Cell::new(0u32);
    let fail = TestCaseError::fail;
    let mut suites = 0;
    macro_rules! suite {
        ($name:expr, $strategy:expr, $check:expr $(,)?) => {
            let before = cases.get();
            TestRunner::new(config.clone())
                .run(&$strategy, |v| {
                    cases.set(cases.get() + 1);
                    $check(v)
                })
                .map_err(|e| format!("{}: {e}", $name))?;
            ensure(cases.get() - before >= CASES, || format!("{}: only {} cases", $name, cases.get() - before))?;
            suites += 1;
        };
    }
    suite!("f*Δ = Δ[U]", exps(9, 1, 4), |u: Vec<u32>| fdelta_identity(&u).map_err(fail));
    suite!(
        "symmetry",
        exps(9, 2, 4).prop_flat_map(with_perm),
        |(u, p): (Vec<u32>, Vec<usize>)| symmetry(&u, &p).map_err(fail)
    );
    suite!("degree", exps(12, 1, 5), |u: Vec<u32>| degree_formula(&u).map_err(fail));
    suite!(
        "antisymmetry",
        (small_field(), exps(8, 2, 4), prop::collection::vec(0u64..13, 4), 0usize..4, 1usize..4),
        |(q, u, c, i, d): (u64, Vec<u32>, Vec<u64>, usize, usize)| {
            let len = u.len();
            let i = i % len;
            let j = (i + 1 + d % (len - 1)) % len;
            antisymmetry(q, &u, &c[..len], i, j).map_err(fail)
        }
    );
    suite!(
        "fast/slow path",
        certificate_case(vec![2, 3, 4, 5], 20),
        |(q, n, s, t, tuple): (u64, u64, Vec<u32>, usize, Vec<u64>)| fast_slow(q, n, &s, t, &tuple).map_err(fail)
    );
    suite!(
        "shift invariance",
        (prop::sample::select(vec![4u64, 5, 7]), exps(7, 3, 4), 0u32..5, 2usize..=3),
        |(q, s, c, t): (u64, Vec<u32>, u32, usize)| shift_invariance(q, &s, t, c).map_err(fail)
    );
    suite!(
        "monotonicity",
        (prop::sample::select(vec![5u64, 7]), exps(6, 3, 4), exps(9, 0, 2), 2usize..=3),
        |(q, s, e, t): (u64, Vec<u32>, Vec<u32>, usize)| monotonicity(q, &s, &e, t).map_err(fail)
    );
    Ok(format!("{} suites x {CASES} cases, 0 failures", suites))
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "symbolic fixtures", limit: Duration::from_secs(5), run: symbolic_fixtures },
        Criterion { id: 2, name: "point sets", limit: Duration::from_secs(20), run: point_sets },
        Criterion { id: 3, name: "point-count formula", limit: Duration::from_secs(240), run: point_count_formula },
        Criterion { id: 4, name: "Golay pipeline", limit: Duration::from_secs(120), run: golay_pipeline },
        Criterion { id: 5, name: "oracle equivalence", limit: Duration::from_secs(300), run: oracle_equivalence },
        Criterion { id: 6, name: "subspace theorem", limit: Duration::from_secs(60), run: subspace_theorem },
        Criterion { id: 7, name: "variety equalities", limit: Duration::from_secs(120), run: variety_equalities },
        Criterion { id: 8, name: "genus-4 curve", limit: Duration::from_secs(30), run: genus_four_curve },
        Criterion { id: 9, name: "corollary certificates", limit: Duration::from_secs(300), run: corollary_certificates },
        Criterion { id: 10, name: "property suites", limit: Duration::from_secs(300), run: property_suites },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}; over the {:?} limit", c.limit)),
            other => other,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if result.is_err() {
            failed += 1;
        }
        println!("[{tag}] {:>2} {:<24} {:>8.2}s  {detail}", c.id, c.name, elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

