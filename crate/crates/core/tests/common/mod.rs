//! Property checks shared by the proptest suite and the acceptance runner.
//! Each check returns `Err` with a description on failure.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cyclobound::arith::gcd;
use cyclobound::gf::{field_of_order, Field};
use cyclobound::linalg;
use cyclobound::vandermonde::{delta, delta_eval, f_poly, QuotientSystem};
use cyclobound::variety::{certify_in, enumerate_points, RootContext};
use cyclobound::{Budgets, ExponentSet, MultiPoly};
use proptest::prelude::*;

pub type Check = Result<(), String>;

pub fn gf(q: u64) -> Field {
    field_of_order(q, 1 << 31).unwrap()
}

pub fn set(v: &[u32]) -> ExponentSet {
    ExponentSet::new(v.to_vec()).unwrap()
}

/// Sorted distinct exponents below `max`, with `lo..=hi` elements.
pub fn exps(max: u32, lo: usize, hi: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(0..max, lo..=hi).prop_map(|s| s.into_iter().collect())
}

pub fn small_field() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13])
}

/// `f[U] * Δ_t = Δ[U]` as polynomials.
pub fn fdelta_identity(u: &[u32]) -> Check {
    let u = set(u);
    let lhs = f_poly(&u)
        .mul(&delta(&ExponentSet::range(u.len())))
        .map_err(|e| e.to_string())?;
    let rhs = delta(&u);
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("f*Δ != Δ[U] for U = {u}"))
    }
}

/// `f[U]` is invariant under permuting its variables.
pub fn symmetry(u: &[u32], perm: &[usize]) -> Check {
    let f = f_poly(&set(u));
    let g = f.permute_vars(perm).map_err(|e| e.to_string())?;
    if f == g {
        Ok(())
    } else {
        Err(format!("f[{u:?}] not symmetric under {perm:?}"))
    }
}

/// `f[U]` is homogeneous of degree `sum(U) - t(t-1)/2`.
pub fn degree_formula(u: &[u32]) -> Check {
    let s = set(u);
    let f = f_poly(&s);
    let t = u.len() as u64;
    let want = s.sum() - t * (t - 1) / 2;
    match f.homogeneous_degree() {
        Ok(d) if d as u64 == want => Ok(()),
        other => Err(format!("degree of f[{s}] is {other:?}, want {want}")),
    }
}

/// Swapping two coordinates negates `Δ[U]`.
pub fn antisymmetry(q: u64, u: &[u32], coords: &[u64], i: usize, j: usize) -> Check {
    let f = gf(q);
    let s = set(u);
    let pt: Vec<_> = coords.iter().map(|&c| f.elem(c % q).unwrap()).collect();
    let mut swapped = pt.clone();
    swapped.swap(i, j);
    let a = delta_eval(&s, &pt).map_err(|e| e.to_string())?;
    let b = delta_eval(&s, &swapped).map_err(|e| e.to_string())?;
    if a.neg() == b {
        Ok(())
    } else {
        Err(format!("Δ[{s}] not antisymmetric at {pt:?}"))
    }
}

/// Rank deficiency of the `|T| x t` power matrix agrees with the vanishing
/// of every maximal minor `Δ[U]`.
pub fn fast_slow(q: u64, n: u64, t_set: &[u32], t: usize, tuple: &[u64]) -> Check {
    let b = Budgets::default();
    let ctx = RootContext::new(q, n, &b).map_err(|e| e.to_string())?;
    let s = set(t_set);
    let pt = ctx.point(tuple);
    let rows: Vec<u64> = s
        .elems()
        .iter()
        .flat_map(|&u| pt.iter().map(move |x| x.pow(u as i64).unwrap().value()))
        .collect();
    let fast = linalg::rank(&ctx.field, &rows, s.len(), t) < t;
    let slow = s
        .subsets(t)
        .iter()
        .all(|u| delta_eval(u, &pt).unwrap().is_zero());
    if fast == slow {
        Ok(())
    } else {
        Err(format!("rank test {fast} vs minors {slow} at T={s}, q={q}, n={n}, {tuple:?}"))
    }
}

fn nonzero_points(s: &ExponentSet, t: usize, f: &Field) -> BTreeSet<Vec<u64>> {
    enumerate_points(s, t, f, &Budgets::default())
        .unwrap()
        .iter()
        .map(|p| p.raw())
        .filter(|p| p.iter().all(|&c| c != 0))
        .collect()
}

/// `V(T, t)` and `V(T + c, t)` agree on the all-nonzero locus.
pub fn shift_invariance(q: u64, t_set: &[u32], t: usize, c: u32) -> Check {
    let f = gf(q);
    let s = set(t_set);
    let a = nonzero_points(&s, t, &f);
    let b = nonzero_points(&s.shift(c), t, &f);
    if a == b {
        Ok(())
    } else {
        Err(format!("shift by {c} changes V({s}, {t}) over GF({q})"))
    }
}

/// `T1 ⊆ T2` implies `V(T2, t) ⊆ V(T1, t)`.
pub fn monotonicity(q: u64, small: &[u32], extra: &[u32], t: usize) -> Check {
    let f = gf(q);
    let s1 = set(small);
    let mut big: Vec<u32> = small.iter().chain(extra).copied().collect();
    big.sort_unstable();
    big.dedup();
    let s2 = set(&big);
    let b = Budgets::default();
    let p1: BTreeSet<_> = enumerate_points(&s1, t, &f, &b).unwrap().iter().map(|p| p.raw()).collect();
    let p2: BTreeSet<_> = enumerate_points(&s2, t, &f, &b).unwrap().iter().map(|p| p.raw()).collect();
    if p2.is_subset(&p1) {
        Ok(())
    } else {
        Err(format!("V({s2}, {t}) not inside V({s1}, {t}) over GF({q})"))
    }
}

/// The numeric quotient test agrees with evaluating the symbolic `f[U]`.
pub fn quotient_paths(q: u64, t_set: &[u32], t: usize, coords: &[u64]) -> Check {
    let f = gf(q);
    let s = set(t_set);
    let mut pt: Vec<u64> = coords.iter().map(|&c| c % q).collect();
    if pt.iter().all(|&c| c == 0) {
        pt[0] = 1;
    }
    let sys = QuotientSystem::new(&s, t).unwrap();
    let numeric = sys.vanishes(&f, &pt, &mut Vec::new());
    let symbolic = s
        .subsets(t)
        .iter()
        .all(|u| f_poly(u).compile(&f).eval(&f, &pt) == 0);
    if numeric == symbolic {
        Ok(())
    } else {
        Err(format!("quotient paths disagree at {pt:?} for T={s}, t={t}, GF({q})"))
    }
}

/// A witness re-verifies by evaluating every symbolic `f[U]`.
pub fn witness_soundness(q: u64, n: u64, t_set: &[u32], t: usize) -> Check {
    let b = Budgets::default();
    let ctx = RootContext::new(q, n, &b).map_err(|e| e.to_string())?;
    let s = set(t_set);
    let cert = certify_in(&ctx, &s, t, &b).map_err(|e| e.to_string())?;
    let Some(w) = &cert.witness else {
        if cert.tuples_checked as u128 == cyclobound::combinat::binomial(n, t as u64) {
            return Ok(());
        }
        return Err(format!("pass with {} tuples checked", cert.tuples_checked));
    };
    let pt = ctx.point(w);
    for u in s.subsets(t) {
        if !f_poly(&u).evaluate(&pt).unwrap().is_zero() {
            return Err(format!("witness {w:?} fails f[{u}] for T={s}, q={q}, n={n}"));
        }
    }
    Ok(())
}

/// Lengths `2..=nmax` coprime to `q` with `q^s` inside the default field budget.
pub fn valid_lengths(q: u64, nmax: u64) -> Vec<u64> {
    (2..=nmax)
        .filter(|&n| gcd(n, q) == 1)
        .filter(|&n| {
            let s = cyclobound::gf::extension_degree(q, n).unwrap();
            cyclobound::arith::checked_pow(q, s).is_some_and(|o| o <= 1 << 31)
        })
        .collect()
}

/// Every union of `q`-cyclotomic cosets mod `n`.
pub fn closed_sets(n: u64, q: u64) -> Vec<Vec<u64>> {
    let cosets = cyclobound::codes::cyclotomic_cosets(n, q).unwrap();
    (0u64..1 << cosets.len())
        .map(|mask| {
            let mut s: Vec<u64> = cosets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, c)| c.iter().copied())
                .collect();
            s.sort_unstable();
            s
        })
        .collect()
}

/// Sanity helper for text round trips.
pub fn text_round_trip(p: &MultiPoly) -> Check {
    let back = MultiPoly::parse(&p.to_string(), Some(p.nvars())).map_err(|e| e.to_string())?;
    if &back == p {
        Ok(())
    } else {
        Err(format!("{p} does not round-trip"))
    }
}

pub fn with_perm(u: Vec<u32>) -> impl Strategy<Value = (Vec<u32>, Vec<usize>)> {
    let n = u.len();
    (Just(u), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

/// `(q, n, T, t, tuple)` with `tuple` a sorted `t`-subset of `0..n`.
pub fn certificate_case(qs: Vec<u64>, nmax: u64) -> impl Strategy<Value = (u64, u64, Vec<u32>, usize, Vec<u64>)> {
    prop::sample::select(qs)
        .prop_flat_map(move |q| (Just(q), prop::sample::select(valid_lengths(q, nmax))))
        .prop_flat_map(|(q, n)| (Just(q), Just(n), exps(10, 2, 5)))
        .prop_flat_map(|(q, n, t_set)| {
            let tmax = t_set.len().min(n as usize);
            (Just(q), Just(n), Just(t_set), 1..=tmax)
        })
        .prop_flat_map(|(q, n, t_set, t)| {
            let tuple = prop::sample::subsequence((0..n).collect::<Vec<_>>(), t);
            (Just(q), Just(n), Just(t_set), Just(t), tuple)
        })
}

