//! Cyclic codes over `F_q` and lower bounds on their minimum distance.
//!
//! A code of length `n` is given by its defining set `S`, a union of
//! `q`-cyclotomic cosets mod `n`. All arithmetic happens in `GF(q^s)`, the
//! splitting field of `x^n - 1`, with the deterministic root `α` from
//! [`RootContext`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, prime_power};
use crate::variety::{certify_in, Certificate, RootContext};
use crate::vandermonde::ExponentSet;
use crate::{Budgets, Error, Result};

/// Orbits of `i -> q*i mod n`, each sorted, ordered by least element.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = (x as u128 * q as u128 % n as u128) as u64;
        }
        coset.sort_unstable();
        out.push(coset);
    }
    Ok(out)
}

/// Union of the cosets of the given representatives, sorted.
pub fn coset_union(n: u64, q: u64, reps: &[u64]) -> Result<Vec<u64>> {
    let cosets = cyclotomic_cosets(n, q)?;
    let mut out = Vec::new();
    for &r in reps {
        let r = r % n;
        let c = cosets.iter().find(|c| c.contains(&r)).expect("cosets partition Z/n");
        out.extend_from_slice(c);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CyclicCode {
    n: u64,
    q: u64,
    defining_set: Vec<u64>,
    /// Coefficients of `g`, lowest degree first, as elements of `GF(q^s)`.
    generator: Vec<u64>,
    ctx: RootContext,
}

/// Builds the code with defining set `S` and checks that `g` has its
/// coefficients in `F_q`.
pub fn code_from_defining_set(n: u64, q: u64, set: &[u64], budgets: &Budgets) -> Result<CyclicCode> {
    prime_power(q)?;
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let mut s: Vec<u64> = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&bad) = s.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidArgument(format!("residue {bad} is not below n = {n}")));
    }
    if s.iter().any(|&i| s.binary_search(&(i * q % n)).is_err()) {
        return Err(Error::NotClosed { n, q });
    }
    let ctx = RootContext::new(q, n, budgets)?;
    let field = &ctx.field;
    let mut g = vec![1u64];
    for &i in &s {
        let root = field.pow(ctx.alpha.value(), i);
        // g <- g * (x - root)
        let mut next = vec![0u64; g.len() + 1];
        for (j, &c) in g.iter().enumerate() {
            next[j + 1] = field.add(next[j + 1], c);
            next[j] = field.sub(next[j], field.mul(c, root));
        }
        g = next;
    }
    if g.iter().any(|&c| field.pow(c, q) != c) {
        return Err(Error::NotClosed { n, q });
    }
    Ok(CyclicCode {
        n,
        q,
        defining_set: s,
        generator: g,
        ctx,
    })
}

impl CyclicCode {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u64 {
        self.n - self.defining_set.len() as u64
    }

    pub fn defining_set(&self) -> &[u64] {
        &self.defining_set
    }

    pub fn generator(&self) -> &[u64] {
        &self.generator
    }

    pub fn context(&self) -> &RootContext {
        &self.ctx
    }

    /// `g` as text, highest degree first. Coefficients are written in the
    /// encoding of `GF(q^s)`; for prime `q` that is the integer residue.
    pub fn generator_text(&self) -> String {
        let field = &self.ctx.field;
        let mut parts = Vec::new();
        for (d, &c) in self.generator.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = field.format(c);
            let mono = match d {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{d}"),
            };
            parts.push(match (c == 1, d) {
                (true, 0) => "1".into(),
                (true, _) => mono,
                (false, 0) => coef,
                (false, _) if coef.contains(',') => format!("({coef})*{mono}"),
                (false, _) => format!("{coef}*{mono}"),
            });
        }
        parts.join(" + ")
    }

    fn defining_exponents(&self) -> Option<ExponentSet> {
        ExponentSet::new(self.defining_set.iter().map(|&i| i as u32).collect()).ok()
    }
}

/// `1 +` the longest circular run of consecutive residues in `S`.
pub fn bch_bound(set: &[u64], n: u64) -> u64 {
    let runs = run_lengths(set, n);
    1 + runs.iter().copied().max().unwrap_or(0)
}

/// `runs[x]` = length of the longest run `x, x+1, ...` inside `S`, at most `n`.
fn run_lengths(set: &[u64], n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut member = vec![false; n];
    for &i in set {
        member[(i % n as u64) as usize] = true;
    }
    if member.iter().all(|&b| b) {
        return vec![n as u64; n];
    }
    let mut runs = vec![0u64; n];
    // walk backwards twice around the circle so wrapped runs are counted
    for step in (0..2 * n).rev() {
        let x = step % n;
        runs[x] = if member[x] { 1 + runs[(x + 1) % n] } else { 0 };
    }
    runs.iter().map(|&r| r.min(n as u64)).collect()
}

/// Largest `t + k + 1` such that `{r + jm + i : 0 <= j <= k, 0 <= i < t}`
/// lies in `S` for some `r` and some `m` coprime to `n`.
pub fn ht_bound(set: &[u64], n: u64) -> u64 {
    let runs = run_lengths(set, n);
    let nu = n as usize;
    let best = (1..n.max(2))
        .into_par_iter()
        .filter(|&m| gcd(m, n) == 1)
        .map(|m| {
            let mut best = 1u64;
            for r in 0..nu {
                if runs[r] == 0 {
                    continue;
                }
                let mut t = runs[r];
                for k in 0..nu {
                    let x = (r + k * m as usize) % nu;
                    t = t.min(runs[x]);
                    if t == 0 {
                        break;
                    }
                    best = best.max(t + k as u64 + 1);
                }
            }
            best
        })
        .max()
        .unwrap_or(1);
    best.max(bch_bound(set, n))
}

/// The root-of-unity certificate for `T ⊆ S` at `t`, using the code's `α`.
pub fn variety_bound(code: &CyclicCode, set: &ExponentSet, t: usize, budgets: &Budgets) -> Result<Certificate> {
    if !set
        .elems()
        .iter()
        .all(|&u| code.defining_set.binary_search(&(u as u64 % code.n)).is_ok())
    {
        return Err(Error::NotSubset);
    }
    certify_in(&code.ctx, set, t, budgets)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Exact(u64),
    /// `d` is at least this value.
    LowerBound(u64),
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceReport {
    pub distance: Distance,
    pub certificates: Vec<Certificate>,
}

/// Runs the certificate with `T = S` for `t = 1, 2, ...`. The first `t`
/// with a witness is the minimum distance: a witness is a dependent set of
/// `t` columns of the parity-check matrix with rows `S`, i.e. a codeword of
/// weight at most `t` over `GF(q^s)`, and extending scalars does not change
/// the minimum distance. Past `t = |S|` every `t` columns are dependent.
pub fn exact_distance_by_certificates(
    code: &CyclicCode,
    budget_t: usize,
    budgets: &Budgets,
) -> Result<DistanceReport> {
    if code.k() == 0 {
        return Err(Error::NoNonzeroCodewords);
    }
    let size = code.defining_set.len();
    let mut certificates = Vec::new();
    let Some(set) = code.defining_exponents() else {
        return Ok(DistanceReport {
            distance: Distance::Exact(1),
            certificates,
        });
    };
    for t in 1..=budget_t {
        if t > size {
            return Ok(DistanceReport {
                distance: Distance::Exact(t as u64),
                certificates,
            });
        }
        let cert = certify_in(&code.ctx, &set, t, budgets)?;
        let passed = cert.passed();
        certificates.push(cert);
        if !passed {
            return Ok(DistanceReport {
                distance: Distance::Exact(t as u64),
                certificates,
            });
        }
    }
    Ok(DistanceReport {
        distance: Distance::LowerBound(budget_t as u64 + 1),
        certificates,
    })
}

/// Minimum weight over all `q^k - 1` nonzero codewords `h(x) g(x)`.
///
/// Codewords are enumerated as `F_p`-combinations of `b^e x^i g(x)`, where
/// `1, b, ..., b^(a-1)` is a basis of `F_q` over `F_p`. Stepping the base-`p`
/// odometer always adds one generator, since `p` copies of a vector sum to 0.
pub fn brute_force_distance(code: &CyclicCode, budgets: &Budgets) -> Result<u64> {
    let k = code.k() as usize;
    if k == 0 {
        return Err(Error::NoNonzeroCodewords);
    }
    let field = &code.ctx.field;
    let (p, a) = prime_power(code.q)?;
    let total = crate::arith::checked_pow(code.q, k as u64).unwrap_or(u128::MAX);
    if total > budgets.messages as u128 {
        return Err(Error::BudgetExceeded {
            what: "messages",
            needed: total,
            limit: budgets.messages,
        });
    }
    let total = total as u64;
    let n = code.n as usize;
    let sub = field.subfield_elements(a as usize)?;
    let b = if a > 1 { sub[2] } else { 1 };
    let mut gens: Vec<Vec<u64>> = Vec::with_capacity(k * a as usize);
    for i in 0..k {
        let mut scale = 1u64;
        for _ in 0..a {
            let mut v = vec![0u64; n];
            for (j, &c) in code.generator.iter().enumerate() {
                v[i + j] = field.mul(c, scale);
            }
            gens.push(v);
            scale = field.mul(scale, b);
        }
    }
    let ndig = gens.len();
    // over a prime alphabet the coefficients are the constants 0..p
    let add = |x: u64, y: u64| {
        if a == 1 {
            let s = x + y;
            if s >= p {
                s - p
            } else {
                s
            }
        } else {
            field.add(x, y)
        }
    };
    const CHUNK: u64 = 1 << 14;
    let chunks = total.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = total.min(start + CHUNK);
            let mut digits = vec![0u64; ndig];
            let mut word = vec![0u64; n];
            let mut x = start;
            for (d, g) in digits.iter_mut().zip(&gens) {
                *d = x % p;
                x /= p;
                if *d != 0 {
                    let s = field.reduce_int(*d as i64);
                    for (w, &gv) in word.iter_mut().zip(g) {
                        *w = add(*w, field.mul(s, gv));
                    }
                }
            }
            let mut best = u64::MAX;
            for idx in start..end {
                if idx != 0 {
                    best = best.min(word.iter().filter(|&&w| w != 0).count() as u64);
                }
                let mut j = 0;
                while j < ndig {
                    for (w, &gv) in word.iter_mut().zip(&gens[j]) {
                        *w = add(*w, gv);
                    }
                    digits[j] += 1;
                    if digits[j] < p {
                        break;
                    }
                    digits[j] = 0;
                    j += 1;
                }
            }
            best
        })
        .min()
        .unwrap_or(u64::MAX);
    Ok(best)
}

#[derive(Clone, Debug, Default)]
pub struct BoundOptions {
    /// Certify this `(T, t)` instead of the ascending `T = S` search.
    pub set: Option<(ExponentSet, usize)>,
    /// Largest `t` tried by the `T = S` search.
    pub max_t: Option<usize>,
    pub brute_force: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub q: u64,
    pub k: u64,
    #[serde(rename = "S")]
    pub defining_set: Vec<u64>,
    pub field: String,
    pub alpha: String,
    pub generator: String,
    pub bch: u64,
    pub ht: u64,
    pub variety: Option<Distance>,
    pub certificates: Vec<Certificate>,
    pub brute_force: Option<u64>,
}

pub fn bound_report(code: &CyclicCode, opts: &BoundOptions, budgets: &Budgets) -> Result<BoundReport> {
    let (variety, certificates) = match &opts.set {
        Some((set, t)) => {
            let cert = variety_bound(code, set, *t, budgets)?;
            let v = cert.passed().then_some(Distance::LowerBound(*t as u64 + 1));
            (v, vec![cert])
        }
        None => {
            let max_t = opts.max_t.unwrap_or(code.defining_set.len() + 1);
            let r = exact_distance_by_certificates(code, max_t, budgets)?;
            (Some(r.distance), r.certificates)
        }
    };
    let brute_force = if opts.brute_force {
        Some(brute_force_distance(code, budgets)?)
    } else {
        None
    };
    Ok(BoundReport {
        n: code.n,
        q: code.q,
        k: code.k(),
        defining_set: code.defining_set.clone(),
        field: code.ctx.field.to_string(),
        alpha: code.ctx.alpha.to_string(),
        generator: code.generator_text(),
        bch: bch_bound(&code.defining_set, code.n),
        ht: ht_bound(&code.defining_set, code.n),
        variety,
        certificates,
        brute_force,
    })
}
