//! The varieties `V(T, t) ⊆ P^(t-1)`: common zeros of `f[U]` for all
//! `t`-subsets `U ⊆ T`.
//!
//! Point enumeration evaluates the quotients `f[U]` (never `Δ[U]`, which
//! vanishes spuriously at points with repeated coordinates). The
//! root-of-unity certificate works on distinct powers of `α`, where
//! `Δ_t ≠ 0`, so there the rank of the generalized Vandermonde matrix
//! decides the question directly.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{checked_pow, gcd, prime_power};
use crate::combinat::{binomial, combination_rank, next_combination, subsets};
use crate::gf::{extension_degree, make_field, Field, FieldElement};
use crate::linalg;
use crate::mpoly::MultiPoly;
use crate::vandermonde::{delta_eval, f_eval, ExponentSet, QuotientSystem, SchurCache};
use crate::{Budgets, Error, Result};

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<FieldElement>) -> Result<Self> {
        let Some(lead) = coords.iter().find(|c| !c.is_zero()) else {
            return Err(Error::InvalidArgument("all coordinates are zero".into()));
        };
        let inv = lead.inv()?;
        let coords = coords
            .iter()
            .map(|c| c.mul(&inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProjectivePoint { coords })
    }

    pub(crate) fn from_canonical(field: &Field, raw: &[u64]) -> Self {
        ProjectivePoint {
            coords: raw.iter().map(|&v| field.wrap(v)).collect(),
        }
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn raw(&self) -> Vec<u64> {
        self.coords.iter().map(FieldElement::value).collect()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

/// `f[U]` for every `t`-subset `U ⊆ T`, in lexicographic order of `U`,
/// with repeated polynomials dropped.
pub fn defining_polys(set: &ExponentSet, t: usize) -> Result<Vec<MultiPoly>> {
    if t == 0 || t > set.len() {
        return Err(Error::CardinalityError { t, size: set.len() });
    }
    let mut cache = SchurCache::new();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for u in set.subsets(t) {
        let f = cache.f_poly(&u);
        if seen.insert(f.to_string()) {
            out.push(f);
        }
    }
    Ok(out)
}

/// `(q^t - 1) / (q - 1)`, the number of points of `P^(t-1)(F_q)`.
pub fn projective_size(q: u64, t: usize) -> Option<u128> {
    let qt = checked_pow(q, t as u64)?;
    Some((qt - 1) / (q as u128 - 1))
}

const CHUNK: u64 = 1 << 12;

/// Visits every canonical point of `P^(t-1)(F)` in order (leading position
/// first, then the trailing coordinates as an odometer with the last one
/// fastest) and keeps those where `pred` holds. Runs in parallel; the result
/// does not depend on the thread count.
pub(crate) fn scan_projective<P>(
    field: &Field,
    t: usize,
    budget: u64,
    collect: bool,
    pred: P,
) -> Result<(u64, Vec<Vec<u64>>)>
where
    P: Fn(&[u64], &mut Vec<u64>) -> bool + Sync,
{
    let q = field.order();
    let total = projective_size(q, t).unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "points",
            needed: total,
            limit: budget,
        });
    }
    let total = total as u64;
    let chunks = total.div_ceil(CHUNK);
    let parts: Vec<(u64, Vec<Vec<u64>>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = total.min(start + CHUNK);
            let mut pt = decode_point(start, q, t);
            let mut scratch = Vec::new();
            let mut count = 0u64;
            let mut found = Vec::new();
            for idx in start..end {
                if pred(&pt, &mut scratch) {
                    count += 1;
                    if collect {
                        found.push(pt.clone());
                    }
                }
                if idx + 1 < end {
                    advance_point(&mut pt, q);
                }
            }
            (count, found)
        })
        .collect();
    let count = parts.iter().map(|(c, _)| c).sum();
    let points = parts.into_iter().flat_map(|(_, p)| p).collect();
    Ok((count, points))
}

fn decode_point(mut index: u64, q: u64, t: usize) -> Vec<u64> {
    let mut lead = 0;
    loop {
        let block = q.pow((t - 1 - lead) as u32);
        if index < block {
            break;
        }
        index -= block;
        lead += 1;
    }
    let mut pt = vec![0u64; t];
    pt[lead] = 1;
    for pos in (lead + 1..t).rev() {
        pt[pos] = index % q;
        index /= q;
    }
    pt
}

fn advance_point(pt: &mut [u64], q: u64) {
    let lead = pt.iter().position(|&c| c != 0).expect("canonical point");
    let mut pos = pt.len() - 1;
    loop {
        if pos == lead {
            pt[lead] = 0;
            pt[lead + 1] = 1;
            return;
        }
        pt[pos] += 1;
        if pt[pos] < q {
            return;
        }
        pt[pos] = 0;
        pos -= 1;
    }
}

/// All points of `V(T, t)` over `field`, in enumeration order.
pub fn enumerate_points(
    set: &ExponentSet,
    t: usize,
    field: &Field,
    budgets: &Budgets,
) -> Result<Vec<ProjectivePoint>> {
    let sys = QuotientSystem::new(set, t)?;
    let (_, pts) = scan_projective(field, t, budgets.points, true, |p, s| {
        sys.vanishes(field, p, s)
    })?;
    Ok(pts
        .iter()
        .map(|p| ProjectivePoint::from_canonical(field, p))
        .collect())
}

/// `#V(T, t)(F)` without materializing the points.
pub fn count_points(set: &ExponentSet, t: usize, field: &Field, budgets: &Budgets) -> Result<u64> {
    let sys = QuotientSystem::new(set, t)?;
    let (n, _) = scan_projective(field, t, budgets.points, false, |p, s| {
        sys.vanishes(field, p, s)
    })?;
    Ok(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Witness,
}

/// Result of the root-of-unity test for `(T, t, q, n)`.
///
/// `Pass` certifies `d > t` for every cyclic code of length `n` over `F_q`
/// whose defining set contains `T`. `Witness` gives the lexicographically
/// first exponent tuple `i_1 < ... < i_t` at which every `Δ[U]` vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(rename = "T")]
    pub set: ExponentSet,
    pub t: usize,
    pub n: u64,
    pub q: u64,
    pub s: u64,
    pub outcome: Outcome,
    pub witness: Option<Vec<u64>>,
    pub tuples_checked: u64,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Field and root of unity used for certificates of length `n` over `F_q`.
#[derive(Clone, Debug)]
pub struct RootContext {
    pub q: u64,
    pub n: u64,
    pub s: u64,
    pub field: Field,
    pub alpha: FieldElement,
}

impl RootContext {
    pub fn new(q: u64, n: u64, budgets: &Budgets) -> Result<Self> {
        let (p, a) = prime_power(q)?;
        if n == 0 || gcd(n, q) != 1 {
            return Err(Error::NotCoprime { n, q });
        }
        let s = extension_degree(q, n)?;
        let field = make_field(p, a as usize * s as usize, budgets.field)?;
        let alpha = field.primitive_root_of_unity(n)?;
        Ok(RootContext {
            q,
            n,
            s,
            field,
            alpha,
        })
    }

    /// `α^k` for `k` in `0..n`.
    pub fn powers(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize);
        let mut x = 1u64;
        for _ in 0..self.n {
            out.push(x);
            x = self.field.mul(x, self.alpha.value());
        }
        out
    }

    pub fn point(&self, exps: &[u64]) -> Vec<FieldElement> {
        exps.iter()
            .map(|&i| self.field.wrap(self.field.pow(self.alpha.value(), i)))
            .collect()
    }
}

/// Tests every `t`-subset of `{0, ..., n-1}` for a point
/// `(α^(i_1) : ... : α^(i_t))` of `V(T, t)`, with `α` a primitive `n`-th
/// root of unity in `GF(q^s)`.
pub fn certify_roots_of_unity(
    set: &ExponentSet,
    t: usize,
    q: u64,
    n: u64,
    budgets: &Budgets,
) -> Result<Certificate> {
    let ctx = RootContext::new(q, n, budgets)?;
    certify_in(&ctx, set, t, budgets)
}

/// As [`certify_roots_of_unity`] with a prepared field and root.
pub fn certify_in(ctx: &RootContext, set: &ExponentSet, t: usize, budgets: &Budgets) -> Result<Certificate> {
    let n = ctx.n as usize;
    if t == 0 || t > set.len() {
        return Err(Error::CardinalityError { t, size: set.len() });
    }
    if t > n {
        return Err(Error::CardinalityError { t, size: n });
    }
    let total = binomial(n as u64, t as u64);
    if total > budgets.tuples as u128 {
        return Err(Error::BudgetExceeded {
            what: "tuples",
            needed: total,
            limit: budgets.tuples,
        });
    }
    let field = &ctx.field;
    let powers = ctx.powers();
    let exps: Vec<usize> = set.elems().iter().map(|&u| u as usize % n).collect();
    let rows = exps.len();
    let dependent = |tuple: &[usize], buf: &mut Vec<u64>| -> bool {
        buf.clear();
        for &u in &exps {
            for &i in tuple {
                buf.push(powers[u * i % n]);
            }
        }
        linalg::rank_in_place(field, buf, rows, t) < t
    };

    let prefix_len = t.min(2);
    let prefixes = subsets(&(0..n).collect::<Vec<_>>(), prefix_len)
        .into_iter()
        .filter(|p| p[prefix_len - 1] + (t - prefix_len) < n)
        .collect::<Vec<_>>();
    let witness = prefixes.par_iter().find_map_first(|prefix| {
        let mut buf = Vec::with_capacity(rows * t);
        let start = prefix[prefix_len - 1] + 1;
        let tail_len = t - prefix_len;
        let mut tail: Vec<usize> = (0..tail_len).collect();
        let mut tuple = prefix.clone();
        tuple.resize(t, 0);
        loop {
            for (j, &o) in tail.iter().enumerate() {
                tuple[prefix_len + j] = start + o;
            }
            if dependent(&tuple, &mut buf) {
                return Some(tuple);
            }
            if tail_len == 0 || !next_combination(&mut tail, n - start) {
                return None;
            }
        }
    });
    let (outcome, checked, witness) = match witness {
        Some(w) => {
            let rank = combination_rank(&w, n);
            (Outcome::Witness, rank + 1, Some(w.iter().map(|&i| i as u64).collect()))
        }
        None => (Outcome::Pass, total, None),
    };
    Ok(Certificate {
        set: set.clone(),
        t,
        n: ctx.n,
        q: ctx.q,
        s: ctx.s,
        outcome,
        witness,
        tuples_checked: checked as u64,
    })
}

/// Re-checks a witness without the rank shortcut: every `Δ[U]` and every
/// `f[U]` must vanish at `(α^(i_1), ..., α^(i_t))`.
pub fn verify_witness(cert: &Certificate, budgets: &Budgets) -> Result<bool> {
    let Some(w) = &cert.witness else {
        return Ok(false);
    };
    let ctx = RootContext::new(cert.q, cert.n, budgets)?;
    let pt = ctx.point(w);
    for u in cert.set.subsets(cert.t) {
        if !delta_eval(&u, &pt)?.is_zero() || !f_eval(&u, &pt)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A linear subspace spanned by the unit vectors at `free` and the vector
/// with `ζ^(e)` at each `(position, e)` of `fixed` (the first exponent is 0).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LinearSubspace {
    pub free: Vec<usize>,
    pub fixed: Vec<(usize, u32)>,
}

impl LinearSubspace {
    pub fn dimension(&self) -> usize {
        self.free.len()
    }
}

/// The `(k-1)`-dimensional subspaces predicted inside `V(T, t+k)` for
/// `T = {jm + i : 0 <= j <= k, 0 <= i < t}`.
#[derive(Clone, Debug, Serialize)]
pub struct SubspaceFamily {
    pub t: usize,
    pub k: usize,
    pub m: u64,
    pub field: String,
    #[serde(rename = "T")]
    pub set: ExponentSet,
    /// `C(t+k, k-1) (m-1)(m-2)...(m-t)`.
    pub predicted_count: u128,
    pub subspaces: Vec<LinearSubspace>,
    pub duplicates: usize,
    /// Field in which containment was checked identically.
    pub verification_field: String,
    /// Indices into `subspaces` that are not contained in `V(T, t+k)`.
    pub containment_failures: Vec<usize>,
}

impl SubspaceFamily {
    pub fn all_contained(&self) -> bool {
        self.containment_failures.is_empty()
    }
}

/// `{jm + i : 0 <= j <= k, 0 <= i < t}`.
pub fn translate_set(t: usize, k: usize, m: u64) -> Result<ExponentSet> {
    let mut v = Vec::new();
    for j in 0..=k as u64 {
        for i in 0..t as u64 {
            v.push((j * m + i) as u32);
        }
    }
    ExponentSet::new(v)
}

/// Generates the predicted subspaces over `field` and checks that each lies
/// in `V(T, t+k)`.
///
/// Containment is checked as an identity: restricted to a subspace, each
/// `f[U]` is a polynomial of degree at most `D` in the `k-1` free
/// coordinates, so it vanishes identically iff it vanishes on a grid
/// `S^(k-1)` with `|S| > D`. The grid lives in an extension of `field`
/// large enough to hold `D + 1` elements. For non-prime `field` the check
/// uses the verification field's own primitive `m`-th root, which differs
/// from `ζ` by a Galois relabeling of the exponents.
pub fn predicted_subspaces(
    t: usize,
    k: usize,
    m: u64,
    field: &Field,
    budgets: &Budgets,
) -> Result<SubspaceFamily> {
    if t == 0 || k == 0 {
        return Err(Error::InvalidArgument("t and k must be positive".into()));
    }
    if m <= t as u64 {
        return Err(Error::InvalidArgument(format!("need m > t, got m = {m}, t = {t}")));
    }
    let zeta = field.primitive_root_of_unity(m)?;
    let set = translate_set(t, k, m)?;
    let dim = t + k;

    let mut seen = BTreeSet::new();
    let mut subspaces = Vec::new();
    let mut duplicates = 0;
    let positions: Vec<usize> = (0..dim).collect();
    let residues: Vec<u32> = (1..m as u32).collect();
    let assignments = ordered_distinct(&residues, t);
    for free in subsets(&positions, k - 1) {
        let fixed_pos: Vec<usize> = positions.iter().copied().filter(|p| !free.contains(p)).collect();
        for a in &assignments {
            let mut fixed = vec![(fixed_pos[0], 0u32)];
            fixed.extend(fixed_pos[1..].iter().copied().zip(a.iter().copied()));
            let s = LinearSubspace {
                free: free.clone(),
                fixed,
            };
            if seen.insert(s.clone()) {
                subspaces.push(s);
            } else {
                duplicates += 1;
            }
        }
    }

    let max_degree = set
        .subsets(dim)
        .iter()
        .map(ExponentSet::quotient_degree)
        .max()
        .unwrap_or(0);
    let (vfield, vzeta) = verification_field(field, &zeta, max_degree, budgets)?;
    let grid_side = (max_degree + 1) as u128;
    let grid = checked_pow(grid_side as u64, (k - 1) as u64).unwrap_or(u128::MAX);
    let work = grid.saturating_mul(subspaces.len() as u128);
    if work > budgets.points as u128 {
        return Err(Error::BudgetExceeded {
            what: "points",
            needed: work,
            limit: budgets.points,
        });
    }
    let sys = QuotientSystem::new(&set, dim)?;
    let containment_failures: Vec<usize> = subspaces
        .par_iter()
        .enumerate()
        .filter(|(_, s)| !subspace_in_variety(s, &sys, &vfield, vzeta, max_degree + 1, dim))
        .map(|(i, _)| i)
        .collect();

    Ok(SubspaceFamily {
        t,
        k,
        m,
        field: field.to_string(),
        set,
        predicted_count: binomial(dim as u64, (k - 1) as u64)
            * (1..=t as u64).map(|i| (m - i) as u128).product::<u128>(),
        subspaces,
        duplicates,
        verification_field: vfield.to_string(),
        containment_failures,
    })
}

fn ordered_distinct(items: &[u32], len: usize) -> Vec<Vec<u32>> {
    fn go(items: &[u32], len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for &x in items {
            if !cur.contains(&x) {
                cur.push(x);
                go(items, len, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(items, len, &mut Vec::new(), &mut out);
    out
}

fn verification_field(
    field: &Field,
    zeta: &FieldElement,
    max_degree: u64,
    budgets: &Budgets,
) -> Result<(Field, u64)> {
    if field.order() > max_degree {
        return Ok((field.clone(), zeta.value()));
    }
    let mut e = 2;
    while checked_pow(field.order(), e).is_some_and(|o| o <= max_degree as u128) {
        e += 1;
    }
    let big = field.extension(e as usize, budgets.field)?;
    let z = if field.is_prime_field() {
        // GF(p) sits inside GF(p^e) as the constants, with the same codes
        zeta.value()
    } else {
        big.primitive_root_of_unity(zeta.order()?)?.value()
    };
    Ok((big, z))
}

fn subspace_in_variety(
    s: &LinearSubspace,
    sys: &QuotientSystem,
    field: &Field,
    zeta: u64,
    side: u64,
    dim: usize,
) -> bool {
    let mut pt = vec![0u64; dim];
    for &(pos, e) in &s.fixed {
        pt[pos] = field.pow(zeta, e as u64);
    }
    let free = s.free.len();
    let mut digits = vec![0u64; free];
    let mut scratch = Vec::new();
    loop {
        for (j, &pos) in s.free.iter().enumerate() {
            pt[pos] = digits[j];
        }
        if !sys.vanishes(field, &pt, &mut scratch) {
            return false;
        }
        // odometer over the grid {0, ..., side-1}^free of element codes
        let mut j = 0;
        loop {
            if j == free {
                return true;
            }
            digits[j] += 1;
            if digits[j] < side {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}

/// Point-set comparison of two varieties over one finite field. Equality
/// here is evidence at `q`, not a proof of scheme equality.
#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub field: String,
    pub t: usize,
    pub first: ExponentSet,
    pub second: ExponentSet,
    pub first_count: u64,
    pub second_count: u64,
    pub only_in_first: Vec<ProjectivePoint>,
    pub only_in_second: Vec<ProjectivePoint>,
    pub equal: bool,
    pub note: String,
}

pub fn compare_varieties(
    first: &ExponentSet,
    second: &ExponentSet,
    t: usize,
    field: &Field,
    budgets: &Budgets,
) -> Result<Comparison> {
    let a = enumerate_points(first, t, field, budgets)?;
    let b = enumerate_points(second, t, field, budgets)?;
    let sa: BTreeSet<Vec<u64>> = a.iter().map(ProjectivePoint::raw).collect();
    let sb: BTreeSet<Vec<u64>> = b.iter().map(ProjectivePoint::raw).collect();
    let wrap = |v: &Vec<u64>| ProjectivePoint::from_canonical(field, v);
    let only_in_first: Vec<_> = sa.difference(&sb).map(wrap).collect();
    let only_in_second: Vec<_> = sb.difference(&sa).map(wrap).collect();
    Ok(Comparison {
        field: field.to_string(),
        t,
        first: first.clone(),
        second: second.clone(),
        first_count: a.len() as u64,
        second_count: b.len() as u64,
        equal: only_in_first.is_empty() && only_in_second.is_empty(),
        only_in_first,
        only_in_second,
        note: format!("point sets compared over GF({}); evidence at q only", field.order()),
    })
}

/// `V(T1, t)(F) = V(T2, t)(F)` as point sets.
pub fn varieties_equal(
    first: &ExponentSet,
    second: &ExponentSet,
    t: usize,
    field: &Field,
    budgets: &Budgets,
) -> Result<bool> {
    Ok(compare_varieties(first, second, t, field, budgets)?.equal)
}

/// Checks around `V({0,1,m,m+1,2m}, 4)` over one field.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub m: u64,
    pub field: String,
    /// `#V({0,1,m,m+1,2m}, 4)`.
    pub v5_count: u64,
    /// `#V({0,1,m,m+1,2m,2m+1}, 4)`.
    pub v6_count: u64,
    /// (a) the two point sets coincide.
    pub equal_with_2m_plus_1: bool,
    /// Points of `V({0,1,2,m},4) ∩ (P^1 × V({0,1,m},3))`.
    pub component_count: u64,
    pub component_in_variety: u64,
    /// (b) the whole component lies in `V({0,1,m,m+1,2m}, 4)`.
    pub component_contained: bool,
    /// Points of the variety on a predicted line.
    pub line_points: u64,
    /// Points of the variety on neither the lines nor the component.
    pub unexplained: u64,
    /// (c) "supports" when nothing is unexplained, else "contradicts".
    pub conjecture: String,
}

/// Polynomial `f[U]` vanishing test that tolerates repeated exponents
/// (then `Δ[U]` has equal rows and `f[U]` is identically zero).
enum SingleQuotient {
    Zero,
    System(QuotientSystem),
}

impl SingleQuotient {
    fn new(exps: &[u32]) -> Self {
        match ExponentSet::new(exps.to_vec()) {
            Ok(set) if set.len() == exps.len() => {
                SingleQuotient::System(QuotientSystem::new(&set, exps.len()).expect("t = |U|"))
            }
            _ => SingleQuotient::Zero,
        }
    }

    fn vanishes(&self, field: &Field, pt: &[u64], scratch: &mut Vec<u64>) -> bool {
        match self {
            SingleQuotient::Zero => true,
            SingleQuotient::System(s) => s.vanishes(field, pt, scratch),
        }
    }
}

/// True when `pt` lies on one of the lines predicted for `t = 2`, `k = 2`:
/// one free coordinate and the other three `λ(1, ζ^i, ζ^j)` with
/// `0, i, j` distinct mod `m`.
fn on_predicted_line(field: &Field, pt: &[u64], m: u64) -> bool {
    if m <= 2 {
        return false;
    }
    let nonzero = pt.iter().filter(|&&c| c != 0).count();
    if nonzero == 1 {
        return true;
    }
    (0..4).any(|free| {
        let rest: Vec<u64> = (0..4).filter(|&i| i != free).map(|i| pt[i]).collect();
        if rest.iter().any(|&c| c == 0) {
            return false;
        }
        let pw: Vec<u64> = rest.iter().map(|&c| field.pow(c, m)).collect();
        pw[0] == pw[1] && pw[1] == pw[2] && rest[0] != rest[1] && rest[0] != rest[2] && rest[1] != rest[2]
    })
}

pub fn verify_2m_component(m: u64, field: &Field, budgets: &Budgets) -> Result<ComponentReport> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("need m >= 2, got {m}")));
    }
    let m32 = m as u32;
    let t5 = ExponentSet::new(vec![0, 1, m32, m32 + 1, 2 * m32])?;
    let t6 = ExponentSet::new(vec![0, 1, m32, m32 + 1, 2 * m32, 2 * m32 + 1])?;
    let cmp = compare_varieties(&t5, &t6, 4, field, budgets)?;
    let v5 = QuotientSystem::new(&t5, 4)?;
    let big = SingleQuotient::new(&[0, 1, 2, m32]);
    let small = SingleQuotient::new(&[0, 1, m32]);

    // (component, component ∩ V5, V5 ∩ lines, V5 unexplained)
    let tally = std::sync::Mutex::new([0u64; 4]);
    scan_projective(field, 4, budgets.points, false, |pt, scratch| {
        let in_comp = big.vanishes(field, pt, scratch) && small.vanishes(field, &pt[1..], scratch);
        let in_v = v5.vanishes(field, pt, scratch);
        let on_line = in_v && on_predicted_line(field, pt, m);
        if in_comp || in_v {
            let mut t = tally.lock().expect("no poisoning");
            t[0] += in_comp as u64;
            t[1] += (in_comp && in_v) as u64;
            t[2] += on_line as u64;
            t[3] += (in_v && !in_comp && !on_line) as u64;
        }
        false
    })?;
    let [component_count, component_in_variety, line_points, unexplained] =
        tally.into_inner().expect("no poisoning");
    Ok(ComponentReport {
        m,
        field: field.to_string(),
        v5_count: cmp.first_count,
        v6_count: cmp.second_count,
        equal_with_2m_plus_1: cmp.equal,
        component_count,
        component_in_variety,
        component_contained: component_count == component_in_variety,
        line_points,
        unexplained,
        conjecture: if unexplained == 0 { "supports" } else { "contradicts" }.into(),
    })
}

/// Quadric `x1^2 + ... + x3x4` (all degree-2 monomials in 4 variables).
pub const EX9_QUADRIC: &str =
    "x1^2 + x2^2 + x3^2 + x4^2 + x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4";
/// Cubic cone `x2^3 + ... + x2x3x4` (all degree-3 monomials in `x2, x3, x4`).
pub const EX9_CUBIC: &str =
    "x2^3 + x3^3 + x4^3 + x2^2*x3 + x2*x3^2 + x2^2*x4 + x2*x4^2 + x3*x4^2 + x3^2*x4 + x2*x3*x4";

#[derive(Clone, Debug, Serialize)]
pub struct CurveCount {
    pub field: String,
    pub count: u64,
    /// `q + 1 - 4 a_q` when `a_q` was supplied and `q` is a prime other than 2 or 5.
    pub predicted: Option<i64>,
    pub matches: Option<bool>,
}

/// Counts the `F`-points of the genus-4 curve cut out by the quadric and
/// cubic fixtures in `P^3`.
pub fn curve_count_ex9(field: &Field, a_q: Option<i64>, budgets: &Budgets) -> Result<CurveCount> {
    let quad = MultiPoly::parse(EX9_QUADRIC, Some(4))?.compile(field);
    let cubic = MultiPoly::parse(EX9_CUBIC, Some(4))?.compile(field);
    let (count, _) = scan_projective(field, 4, budgets.points, false, |pt, _| {
        quad.eval(field, pt) == 0 && cubic.eval(field, pt) == 0
    })?;
    let q = field.order();
    let comparable = field.is_prime_field() && q != 2 && q != 5;
    let predicted = a_q.filter(|_| comparable).map(|a| q as i64 + 1 - 4 * a);
    Ok(CurveCount {
        field: field.to_string(),
        count,
        predicted,
        matches: predicted.map(|p| p == count as i64),
    })
}

/// `{0, 1, 3, 4, 6, 7, ...} ∩ [0, r]`, the residues `≡ 0, 1 (mod 3)` up to
/// `r`; defined when `r ≡ 0, 1 (mod 3)` and `r >= 3`.
pub fn question_set(r: u32) -> Option<ExponentSet> {
    if r < 3 || r % 3 == 2 {
        return None;
    }
    ExponentSet::new((0..=r).filter(|x| x % 3 != 2).collect()).ok()
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub r: u32,
    #[serde(rename = "T")]
    pub set: ExponentSet,
    pub t: usize,
    pub point_count: Option<u64>,
    pub certificates: Vec<Certificate>,
    /// Certificates skipped because a budget was exceeded, by `n`.
    pub skipped: Vec<u64>,
}

/// For each `r <= rmax` in the family, counts `V(T, #T-1)` over `GF(q)` and
/// runs the certificate for every admissible `n <= nmax`. Reports only.
pub fn sweep_question(rmax: u32, q: u64, nmax: u64, budgets: &Budgets) -> Result<Vec<SweepRow>> {
    let field = crate::gf::field_of_order(q, budgets.field)?;
    let mut rows = Vec::new();
    for r in 3..=rmax {
        let Some(set) = question_set(r) else { continue };
        let t = set.len() - 1;
        let point_count = match count_points(&set, t, &field, budgets) {
            Ok(c) => Some(c),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let mut certificates = Vec::new();
        let mut skipped = Vec::new();
        for n in t as u64..=nmax {
            if gcd(n, q) != 1 {
                continue;
            }
            match certify_roots_of_unity(&set, t, q, n, budgets) {
                Ok(c) => certificates.push(c),
                Err(Error::BudgetExceeded { .. }) => skipped.push(n),
                Err(e) => return Err(e),
            }
        }
        rows.push(SweepRow {
            r,
            set,
            t,
            point_count,
            certificates,
            skipped,
        });
    }
    Ok(rows)
}
