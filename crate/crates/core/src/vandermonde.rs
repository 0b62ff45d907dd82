//! Generalized Vandermonde determinants and their Schur quotients.
//!
//! For a set `U = {u1 < ... < um}`, `Δ[U] = det(x_j^(u_i))` and
//! `f[U] = Δ[U] / Δ_m` where `Δ_m = Δ[{0, ..., m-1}]`. The quotient is the
//! Schur polynomial of the partition `λ_i = u_(m+1-i) - (m-i)`.
//!
//! Two numeric evaluation routes are provided:
//! - [`delta_eval`]: the determinant `Δ[U]` at a point, by elimination.
//! - [`QuotientSystem`]: `f[U]` itself at any point, including points with
//!   repeated or zero coordinates. Writing `P(X) = Π (X - x_j)`, each
//!   `X^u mod P` has coefficients `c_u` that are polynomials in the point and
//!   `Δ[U] = det(c_u)_(u∈U) · Δ_m`, so `f[U] = det(c_u)_(u∈U)` identically.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::gf::{Field, FieldElement};
use crate::linalg;
use crate::mpoly::MultiPoly;
use crate::{Error, Result};

/// A strictly increasing, nonempty set of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ExponentSet(Vec<u32>);

impl ExponentSet {
    /// Sorts the input; duplicates and the empty set are rejected.
    pub fn new(mut elems: Vec<u32>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::InvalidExponentSet("empty".into()));
        }
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidExponentSet(format!(
                "repeated element in {elems:?}"
            )));
        }
        Ok(ExponentSet(elems))
    }

    /// `{0, 1, ..., m-1}`.
    pub fn range(m: usize) -> Self {
        ExponentSet((0..m as u32).collect())
    }

    /// `{r, r+1, ..., r+t-1}`.
    pub fn run(r: u32, t: usize) -> Self {
        ExponentSet((r..r + t as u32).collect())
    }

    /// Comma-separated list, e.g. `0,1,3,4`.
    pub fn parse(s: &str) -> Result<Self> {
        let elems = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent set {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(elems)
    }

    pub fn elems(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max(&self) -> u32 {
        *self.0.last().expect("nonempty")
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&u| u as u64).sum()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &ExponentSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn shift(&self, c: u32) -> ExponentSet {
        ExponentSet(self.0.iter().map(|&u| u + c).collect())
    }

    /// Shifted so the smallest element is 0.
    pub fn normalized(&self) -> ExponentSet {
        let m = self.0[0];
        ExponentSet(self.0.iter().map(|&u| u - m).collect())
    }

    /// All `t`-element subsets in lexicographic order.
    pub fn subsets(&self, t: usize) -> Vec<ExponentSet> {
        if t == 0 {
            return Vec::new();
        }
        crate::combinat::subsets(&self.0, t)
            .into_iter()
            .map(ExponentSet)
            .collect()
    }

    /// Degree of `f[self]`: `sum(U) - m(m-1)/2`.
    pub fn quotient_degree(&self) -> u64 {
        let m = self.0.len() as u64;
        self.sum() - m * (m - 1) / 2
    }

    /// The partition `λ_i = u_(m+1-i) - (m-i)`, largest part first.
    pub fn partition(&self) -> Vec<u32> {
        let m = self.0.len();
        (0..m).map(|i| self.0[m - 1 - i] - (m - 1 - i) as u32).collect()
    }
}

impl TryFrom<Vec<u32>> for ExponentSet {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        ExponentSet::new(v)
    }
}

impl From<ExponentSet> for Vec<u32> {
    fn from(s: ExponentSet) -> Self {
        s.0
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// `Δ[U]` as a polynomial in `|U|` variables, rows in increasing exponent
/// order. Expanded over all permutations, so keep `|U|` small.
pub fn delta(u: &ExponentSet) -> MultiPoly {
    let m = u.len();
    let mut out = MultiPoly::zero(m);
    // Heap's algorithm; sign flips with every swap.
    let mut perm: Vec<usize> = (0..m).collect();
    let mut c = vec![0usize; m];
    let mut sign = 1i64;
    let mut emit = |perm: &[usize], sign: i64| {
        // row r (exponent u_r) takes column perm[r]
        let mut e = vec![0u32; m];
        for (r, &col) in perm.iter().enumerate() {
            e[col] = u.0[r];
        }
        out.add_term(crate::mpoly::Monomial(e), BigInt::from(sign));
    };
    emit(&perm, sign);
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            emit(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Memoized Schur polynomials, built with the branching rule
/// `s_λ(x1..xn) = Σ_μ s_μ(x1..x(n-1)) · xn^(|λ|-|μ|)` over horizontal strips
/// `λ/μ`.
#[derive(Default)]
pub struct SchurCache {
    memo: HashMap<(Vec<u32>, usize), std::rc::Rc<Vec<(Vec<u32>, BigInt)>>>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `s_λ` in `nvars` variables.
    pub fn schur(&mut self, lambda: &[u32], nvars: usize) -> MultiPoly {
        let terms = self.terms(lambda, nvars);
        MultiPoly::from_terms(nvars, terms.iter().cloned()).expect("arity")
    }

    /// `f[U]` in `|U|` variables.
    pub fn f_poly(&mut self, u: &ExponentSet) -> MultiPoly {
        self.schur(&u.partition(), u.len())
    }

    fn terms(&mut self, lambda: &[u32], n: usize) -> std::rc::Rc<Vec<(Vec<u32>, BigInt)>> {
        let mut lam: Vec<u32> = lambda.iter().copied().filter(|&x| x > 0).collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        let key = (lam.clone(), n);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = if lam.len() > n {
            Vec::new()
        } else if n == 0 {
            vec![(Vec::new(), BigInt::one())]
        } else if lam.is_empty() {
            vec![(vec![0; n], BigInt::one())]
        } else {
            let size: u32 = lam.iter().sum();
            let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
            let mut mus = Vec::new();
            interlacing(&lam, n, 0, &mut Vec::new(), &mut mus);
            for mu in mus {
                let rest = size - mu.iter().sum::<u32>();
                let sub = self.terms(&mu, n - 1);
                for (e, c) in sub.iter() {
                    let mut e2 = e.clone();
                    e2.push(rest);
                    *acc.entry(e2).or_insert_with(BigInt::zero) += c;
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        let rc = std::rc::Rc::new(result);
        self.memo.insert(key, rc.clone());
        rc
    }
}

/// Partitions `μ` with at most `n-1` parts and `λ_(i+1) <= μ_i <= λ_i`.
fn interlacing(lam: &[u32], n: usize, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == lam.len().min(n - 1) {
        out.push(cur.clone());
        return;
    }
    let hi = lam[i];
    let lo = lam.get(i + 1).copied().unwrap_or(0);
    for v in lo..=hi {
        cur.push(v);
        interlacing(lam, n, i + 1, cur, out);
        cur.pop();
    }
}

/// `f[U] = Δ[U] / Δ_|U|`, a symmetric homogeneous polynomial.
pub fn f_poly(u: &ExponentSet) -> MultiPoly {
    SchurCache::new().f_poly(u)
}

/// `Δ[U]` evaluated at `coords` by Gaussian elimination.
pub fn delta_eval(u: &ExponentSet, coords: &[FieldElement]) -> Result<FieldElement> {
    let field = common_field(coords, u.len())?;
    let m = u.len();
    let raw: Vec<u64> = coords.iter().map(FieldElement::value).collect();
    let mut mat = Vec::with_capacity(m * m);
    for &e in u.elems() {
        for &x in &raw {
            mat.push(field.pow(x, e as u64));
        }
    }
    Ok(field.wrap(linalg::det(&field, &mat, m)))
}

/// `f[U]` evaluated at `coords` without expanding the polynomial.
pub fn f_eval(u: &ExponentSet, coords: &[FieldElement]) -> Result<FieldElement> {
    let field = common_field(coords, u.len())?;
    let raw: Vec<u64> = coords.iter().map(FieldElement::value).collect();
    let mut rows = Vec::new();
    reduction_rows(&field, &raw, u.elems(), &mut rows);
    Ok(field.wrap(linalg::det(&field, &rows, u.len())))
}

fn common_field(coords: &[FieldElement], expected: usize) -> Result<Field> {
    if coords.len() != expected {
        return Err(Error::ArityMismatch {
            expected,
            got: coords.len(),
        });
    }
    let field = coords[0].field().clone();
    if coords.iter().any(|c| *c.field() != field) {
        return Err(Error::FieldMismatch);
    }
    Ok(field)
}

/// Writes, for each `u` in the sorted list `exps`, the coefficients of
/// `X^u mod Π_j (X - point_j)` (low degree first) as consecutive rows of
/// length `point.len()`.
pub fn reduction_rows(field: &Field, point: &[u64], exps: &[u32], out: &mut Vec<u64>) {
    let t = point.len();
    out.clear();
    if t == 0 {
        return;
    }
    // P(X) = X^t + Σ poly[i] X^i
    let mut poly = vec![0u64; t + 1];
    poly[0] = 1;
    for (deg, &x) in point.iter().enumerate() {
        // multiply by (X - x)
        let nx = field.neg(x);
        for i in (0..=deg + 1).rev() {
            let shifted = if i > 0 { poly[i - 1] } else { 0 };
            let here = if i <= deg { field.mul(poly[i], nx) } else { 0 };
            poly[i] = field.add(shifted, here);
        }
    }
    let mut row = vec![0u64; t];
    row[0] = 1;
    let mut next = vec![0u64; t];
    let mut u = 0u32;
    for &target in exps {
        while u < target {
            let top = row[t - 1];
            for i in (1..t).rev() {
                next[i] = field.sub(row[i - 1], field.mul(top, poly[i]));
            }
            next[0] = field.neg(field.mul(top, poly[0]));
            std::mem::swap(&mut row, &mut next);
            u += 1;
        }
        out.extend_from_slice(&row);
    }
}

/// Decides at a point whether every `f[U]`, `U ⊆ T`, `|U| = t`, vanishes:
/// true iff the `|T| x t` reduction matrix has rank `< t`.
#[derive(Clone, Debug)]
pub struct QuotientSystem {
    exps: Vec<u32>,
    t: usize,
}

impl QuotientSystem {
    pub fn new(set: &ExponentSet, t: usize) -> Result<Self> {
        if t == 0 || t > set.len() {
            return Err(Error::CardinalityError { t, size: set.len() });
        }
        Ok(QuotientSystem {
            exps: set.elems().to_vec(),
            t,
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `scratch` is reused between calls to avoid allocation.
    pub fn vanishes(&self, field: &Field, point: &[u64], scratch: &mut Vec<u64>) -> bool {
        debug_assert_eq!(point.len(), self.t);
        reduction_rows(field, point, &self.exps, scratch);
        linalg::rank_in_place(field, scratch, self.exps.len(), self.t) < self.t
    }
}

/// Integer coefficient that serializes as a JSON number when it fits in an
/// `i64` and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub BigInt);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

fn coeffs_of(p: &MultiPoly) -> Vec<Coeff> {
    p.binary_form_coeffs()
        .map(|v| v.into_iter().map(Coeff).collect())
        .unwrap_or_default()
}

/// `F_r(x1, x2)`: `f[{0,1,r}]` restricted to `x3 = -x1 - x2`, with its
/// predicted factors removed.
#[derive(Clone, Debug)]
pub struct FrReport {
    pub r: u32,
    pub f_r: MultiPoly,
    /// Factors that were predicted and divide `F_r`, with multiplicity.
    pub predicted_factors: Vec<MultiPoly>,
    /// Predicted factors that did not divide (should be empty).
    pub failed_factors: Vec<MultiPoly>,
    pub residual: MultiPoly,
    /// `deg(residual) / 6` when that is an integer.
    pub k: Option<u32>,
    pub expected_k: u32,
}

impl FrReport {
    /// Every predicted factor divides, `deg F_r = r - 2`, and the residual
    /// has degree `6k` with the predicted `k`.
    pub fn is_consistent(&self) -> bool {
        self.failed_factors.is_empty()
            && self.f_r.homogeneous_degree().ok() == Some(self.r - 2)
            && self.k == Some(self.expected_k)
    }
}

impl Serialize for FrReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Poly {
            text: String,
            degree: Option<u32>,
            coefficients: Vec<Coeff>,
        }
        fn view(p: &MultiPoly) -> Poly {
            Poly {
                text: p.to_string(),
                degree: p.homogeneous_degree().ok(),
                coefficients: coeffs_of(p),
            }
        }
        #[derive(Serialize)]
        struct View {
            r: u32,
            f_r: Poly,
            predicted_factors: Vec<Poly>,
            failed_factors: Vec<Poly>,
            residual: Poly,
            k: Option<u32>,
            expected_k: u32,
            consistent: bool,
        }
        View {
            r: self.r,
            f_r: view(&self.f_r),
            predicted_factors: self.predicted_factors.iter().map(view).collect(),
            failed_factors: self.failed_factors.iter().map(view).collect(),
            residual: view(&self.residual),
            k: self.k,
            expected_k: self.expected_k,
            consistent: self.is_consistent(),
        }
        .serialize(s)
    }
}

fn bivariate(s: &str) -> MultiPoly {
    MultiPoly::parse(s, Some(2)).expect("fixture polynomial")
}

/// `F_r`, normalized to content 1 and positive leading coefficient.
pub fn f_r_poly(r: u32) -> Result<MultiPoly> {
    if r < 4 {
        return Err(Error::InvalidArgument(format!("r must be at least 4, got {r}")));
    }
    let f = f_poly(&ExponentSet::new(vec![0, 1, r])?);
    let x3 = MultiPoly::parse("-x1 - x2", Some(3)).expect("fixture polynomial");
    Ok(f.substitute(2, &x3)?.normalized())
}

/// Builds `F_r` and strips the factors predicted by the residue of `r`:
/// `x1, x2, x1+x2` for odd `r`, `(x1^2+x1x2+x2^2)^2` for `r ≡ 0 (mod 3)`,
/// `x1^2+x1x2+x2^2` for `r ≡ 1 (mod 3)`.
pub fn compute_fr(r: u32) -> Result<FrReport> {
    let f_r = f_r_poly(r)?;
    let mut predicted = Vec::new();
    if r % 2 == 1 {
        predicted.extend(["x1", "x2", "x1 + x2"].map(bivariate));
    }
    let cyclo = bivariate("x1^2 + x1*x2 + x2^2");
    match r % 3 {
        0 => predicted.push(cyclo.pow(2)),
        1 => predicted.push(cyclo),
        _ => {}
    }
    let mut residual = f_r.clone();
    let mut ok = Vec::new();
    let mut failed = Vec::new();
    for factor in predicted {
        match residual.exact_divide(&factor) {
            Ok(q) => {
                residual = q;
                ok.push(factor);
            }
            Err(_) => failed.push(factor),
        }
    }
    let deg = residual.homogeneous_degree().unwrap_or(0);
    let k = (deg % 6 == 0).then_some(deg / 6);
    let expected_k = if r % 6 == 3 { (r - 9) / 6 } else { (r - 2) / 6 };
    Ok(FrReport {
        r,
        f_r,
        predicted_factors: ok,
        failed_factors: failed,
        residual,
        k,
        expected_k,
    })
}

/// Outcome of checking the printed factorization of `F_11`.
#[derive(Clone, Debug, Serialize)]
pub struct RemarkCheck {
    pub f_11: String,
    pub printed_product: String,
    pub linear_factors_divide: bool,
    /// Divisibility of `x1^2+x1x2+2x2^2`, `2x1^2+x1x2+x2^2`,
    /// `2x1^2+3x1x2+2x2^2`, in that order.
    pub quadratics_divide: [bool; 3],
    /// `F_11 = (num/den) · product`, when such a scalar exists.
    pub scalar: Option<(Coeff, Coeff)>,
    pub holds: bool,
}

/// Checks `F_11 = x1 x2 (x1+x2)(x1^2+x1x2+2x2^2)(2x1^2+x1x2+x2^2)(2x1^2+3x1x2+2x2^2)`
/// up to a nonzero rational scalar.
pub fn verify_fr_remark() -> RemarkCheck {
    let f11 = f_r_poly(11).expect("r = 11 is valid");
    let linear = bivariate("x1^2*x2 + x1*x2^2");
    let quads = [
        bivariate("x1^2 + x1*x2 + 2*x2^2"),
        bivariate("2*x1^2 + x1*x2 + x2^2"),
        bivariate("2*x1^2 + 3*x1*x2 + 2*x2^2"),
    ];
    let product = quads
        .iter()
        .fold(linear.clone(), |acc, q| acc.mul(q).expect("same arity"));
    let quadratics_divide = quads.clone().map(|q| q.divides(&f11));
    let (_, lc_f) = f11.leading_term().expect("nonzero");
    let (_, lc_p) = product.leading_term().expect("nonzero");
    let g = num_integer::Integer::gcd(lc_f, lc_p);
    let (mut num, mut den) = (lc_f / &g, lc_p / &g);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    let proportional = f11.scalar_mul(&den) == product.scalar_mul(&num);
    let scalar = proportional.then(|| (Coeff(num), Coeff(den)));
    let linear_factors_divide = linear.divides(&f11);
    RemarkCheck {
        f_11: f11.to_string(),
        printed_product: product.to_string(),
        linear_factors_divide,
        quadratics_divide,
        holds: proportional && linear_factors_divide && quadratics_divide.iter().all(|&b| b),
        scalar,
    }
}
