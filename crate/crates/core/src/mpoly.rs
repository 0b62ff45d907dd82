//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept in graded lexicographic order (`x1 > x2 > ...`). The text
//! form lists terms from the largest monomial down, for example
//! `x1^2 + 2*x1*x2 - x2^2`, and [`MultiPoly::parse`] reads the same grammar.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::gf::{Field, FieldElement};
use crate::{Error, Result};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable `x(index+1)`.
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::IndexOutOfRange { index, nvars });
        }
        let mut e = vec![0; nvars];
        e[index] = 1;
        Ok(Self::monomial(e, 1))
    }

    pub fn monomial(exps: Vec<u32>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(Monomial(exps), c.into());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Degree in variable `index`.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.0[index]).max().unwrap_or(0)
    }

    fn check_arity(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            })
        }
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiPoly {
        self.scalar_mul(&BigInt::from(-1))
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self).expect("same arity");
        }
        acc
    }

    /// Replaces `x(var+1)` by `replacement`. When the replacement does not
    /// involve that variable it is eliminated and the result has one
    /// variable fewer (later variables shift down by one).
    pub fn substitute(&self, var: usize, replacement: &MultiPoly) -> Result<MultiPoly> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        self.check_arity(replacement)?;
        let max_e = self.degree_in(var) as usize;
        let mut powers = vec![Self::one(self.nvars)];
        for i in 1..=max_e {
            powers.push(powers[i - 1].mul(replacement)?);
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = std::mem::replace(&mut rest.0[var], 0) as usize;
            for (pm, pc) in &powers[e].terms {
                out.add_term(rest.mul(pm), c * pc);
            }
        }
        if replacement.degree_in(var) == 0 {
            out.drop_var(var)
        } else {
            Ok(out)
        }
    }

    /// Removes a variable that does not occur.
    pub fn drop_var(&self, var: usize) -> Result<MultiPoly> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        if self.degree_in(var) != 0 {
            return Err(Error::InvalidArgument(format!("x{} occurs", var + 1)));
        }
        let mut out = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(var);
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Renames variables: `x(i+1)` becomes `x(perm[i]+1)`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<MultiPoly> {
        if perm.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: perm.len(),
            });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[perm[i]] = x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Value at a point; all coordinates must lie in one field.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let Some(first) = point.first() else {
            // no variables: the constant term
            return Err(Error::InvalidArgument(
                "cannot infer a field for a point with no coordinates".into(),
            ));
        };
        let field = first.field().clone();
        if point.iter().any(|c| *c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let raw: Vec<u64> = point.iter().map(FieldElement::value).collect();
        Ok(field.wrap(self.compile(&field).eval(&field, &raw)))
    }

    /// Coefficients reduced into `field` for repeated evaluation.
    pub fn compile(&self, field: &Field) -> CompiledPoly {
        let p = BigInt::from(field.characteristic());
        let terms: Vec<(u64, Vec<u32>)> = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let r = c.mod_floor(&p).to_u64().expect("residue fits");
                (r != 0).then(|| (r, m.0.clone()))
            })
            .collect();
        let max_deg = (0..self.nvars).map(|i| self.degree_in(i)).collect();
        CompiledPoly {
            nvars: self.nvars,
            terms,
            max_deg,
        }
    }

    /// Exact quotient `self / den` over the integers, by leading-term
    /// elimination in graded-lex order.
    pub fn exact_divide(&self, den: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(den)?;
        let (lm, lc) = match den.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::ZeroDivisor),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(&lm).ok_or(Error::NotDivisible)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (dm, dc) in &den.terms {
                rem.add_term(qm.mul(dm), -(&qc * dc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn divides(&self, num: &MultiPoly) -> bool {
        num.exact_divide(self).is_ok()
    }

    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next().ok_or(Error::ZeroPolynomial)?;
        if degs.all(|e| e == d) {
            Ok(d)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn normalized(&self) -> MultiPoly {
        let Some((_, lc)) = self.leading_term() else {
            return self.clone();
        };
        let mut g = self.content();
        if lc.is_negative() {
            g = -g;
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c / &g))
                .collect(),
        }
    }

    /// For a homogeneous polynomial in two variables of degree `d`, the
    /// coefficients of `x1^d, x1^(d-1) x2, ..., x2^d`.
    pub fn binary_form_coeffs(&self) -> Result<Vec<BigInt>> {
        if self.nvars != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                got: self.nvars,
            });
        }
        let d = self.homogeneous_degree()?;
        Ok((0..=d).map(|i| self.coefficient(&[d - i, i])).collect())
    }

    /// Parses the canonical text form. Variables are `x1, x2, ...`; when
    /// `nvars` is `None` it is the largest index that occurs.
    pub fn parse(s: &str, nvars: Option<usize>) -> Result<MultiPoly> {
        let terms = parse_terms(s)?;
        let max_idx = terms
            .iter()
            .flat_map(|(_, f)| f.iter().map(|(i, _)| *i))
            .max()
            .unwrap_or(0);
        let n = nvars.unwrap_or(max_idx);
        if max_idx > n {
            return Err(Error::Parse(format!("x{max_idx} exceeds {n} variables")));
        }
        let mut p = Self::zero(n);
        for (c, factors) in terms {
            let mut e = vec![0u32; n];
            for (i, k) in factors {
                e[i - 1] += k;
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }
}

fn parse_terms(s: &str) -> Result<Vec<(BigInt, Vec<(usize, u32)>)>> {
    let err = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty polynomial"));
    }
    let bytes = compact.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = BigInt::one();
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -sign;
                pos += 1
            }
            _ if pos > 0 => return Err(err("expected + or -")),
            _ => {}
        }
        let end = compact[pos..]
            .find(['+', '-'])
            .map_or(compact.len(), |i| pos + i);
        let term = &compact[pos..end];
        if term.is_empty() {
            return Err(err("empty term"));
        }
        let mut coeff = sign;
        let mut factors = Vec::new();
        for factor in term.split('*') {
            if let Some(rest) = factor.strip_prefix('x') {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (rest, 1),
                };
                let idx: usize = idx.parse().map_err(|_| err("bad variable"))?;
                if idx == 0 {
                    return Err(err("variables start at x1"));
                }
                factors.push((idx, exp));
            } else {
                let c = BigInt::from_str(factor).map_err(|_| err("bad coefficient"))?;
                coeff *= c;
            }
        }
        out.push((coeff, factors));
        pos = end;
    }
    Ok(out)
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultiPoly::parse(s, None)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.nvars)
    }
}

/// A polynomial with coefficients reduced into a fixed field.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    nvars: usize,
    terms: Vec<(u64, Vec<u32>)>,
    max_deg: Vec<u32>,
}

impl CompiledPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at encoded coordinates (`point.len() == nvars`).
    pub fn eval(&self, field: &Field, point: &[u64]) -> u64 {
        debug_assert_eq!(point.len(), self.nvars);
        let powers: Vec<Vec<u64>> = point
            .iter()
            .zip(&self.max_deg)
            .map(|(&x, &d)| {
                let mut v = Vec::with_capacity(d as usize + 1);
                let mut acc = 1u64;
                v.push(acc);
                for _ in 0..d {
                    acc = field.mul(acc, x);
                    v.push(acc);
                }
                v
            })
            .collect();
        let mut sum = 0u64;
        for (c, e) in &self.terms {
            let mut t = *c;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = field.mul(t, powers[i][k as usize]);
                    if t == 0 {
                        break;
                    }
                }
            }
            sum = field.add(sum, t);
        }
        sum
    }
}
