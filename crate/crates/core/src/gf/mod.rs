//! Finite fields `GF(p^m)` with exact arithmetic.
//!
//! Elements are stored in the polynomial basis `1, x, ..., x^(m-1)` over
//! `GF(p)` and encoded as the integer `c0 + c1 p + ... + c(m-1) p^(m-1)`.
//! The encoding is canonical, so two elements are equal iff their codes are.
//!
//! The modulus of `GF(p^m)` is the lexicographically smallest monic
//! irreducible polynomial of degree `m`, comparing coefficient vectors
//! `(c0, c1, ...)` from the constant term up. Construction is therefore
//! deterministic.
//!
//! Hot loops work directly on encoded `u64` values through the methods on
//! [`Field`]; [`FieldElement`] bundles a value with its field for the
//! checked, user-facing API.

pub(crate) mod poly;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{factor, gcd, is_prime, mul_mod, multiplicative_order, prime_power};
use crate::{Error, Result};

/// Fields up to this order get exp/log tables.
const TABLE_LIMIT: u64 = 1 << 16;

enum Repr {
    /// `m == 1`: plain residues.
    Prime,
    /// `p == 2`, elements are bit vectors; `modulus` includes the `x^m` bit.
    Binary { modulus: u128 },
    /// Small extension field with a primitive element table.
    Logs { exp: Vec<u32>, log: Vec<u32> },
    /// Schoolbook multiply and reduce.
    Poly,
}

struct Inner {
    p: u64,
    m: usize,
    order: u64,
    /// Monic modulus, low degree first, length `m + 1`.
    modulus: Vec<u64>,
    pow_p: Vec<u64>,
    repr: Repr,
    group_factors: Vec<(u64, u32)>,
    primitive: OnceLock<u64>,
}

/// A finite field `GF(p^m)`. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.0.p, self.0.m)
    }
}

/// Builds `GF(p^m)` with the lexicographically smallest monic irreducible
/// modulus. `budget` caps the field order.
pub fn make_field(p: u64, m: usize, budget: u64) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
    }
    let order = crate::arith::checked_pow(p, m as u64);
    match order {
        Some(o) if o <= budget as u128 && o < (1u128 << 62) => {}
        _ => {
            return Err(Error::BudgetExceeded {
                what: "field",
                needed: order.unwrap_or(u128::MAX),
                limit: budget,
            })
        }
    }
    let order = order.unwrap() as u64;
    let modulus = smallest_irreducible(p, m);
    let pow_p: Vec<u64> = (0..=m as u32).map(|i| p.pow(i)).collect();
    let base_repr = if m == 1 {
        Repr::Prime
    } else if p == 2 {
        let bits = modulus
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i));
        Repr::Binary { modulus: bits }
    } else {
        Repr::Poly
    };
    let mut inner = Inner {
        p,
        m,
        order,
        modulus,
        pow_p,
        repr: base_repr,
        group_factors: factor(order - 1),
        primitive: OnceLock::new(),
    };
    if m > 1 && order <= TABLE_LIMIT {
        let field = Field(Arc::new(inner));
        let g = field.primitive_element_raw();
        let n = (order - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; order as usize];
        let mut x = 1u64;
        for i in 0..n {
            exp[i] = x as u32;
            exp[i + n] = x as u32;
            log[x as usize] = i as u32;
            x = field.mul(x, g);
        }
        inner = Arc::try_unwrap(field.0).ok().expect("sole owner");
        inner.repr = Repr::Logs { exp, log };
        inner.primitive = OnceLock::from(g);
    }
    Ok(Field(Arc::new(inner)))
}

/// Builds `GF(q)` for a prime power `q`.
pub fn field_of_order(q: u64, budget: u64) -> Result<Field> {
    let (p, a) = prime_power(q)?;
    make_field(p, a as usize, budget)
}

/// Multiplicative order of `q` modulo `n`: the degree `s` of the smallest
/// extension `GF(q^s)` containing a primitive `n`-th root of unity.
pub fn extension_degree(q: u64, n: u64) -> Result<u64> {
    prime_power(q)?;
    if gcd(q, n) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    multiplicative_order(q, n)
}

fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    // Candidates in lexicographic order of (c0, c1, ..., c(m-1)); c0 = 0 is
    // divisible by x so start at c0 = 1.
    let span = p.pow(m as u32);
    let top = p.pow(m as u32 - 1);
    for code in top..span {
        let mut f: Vec<u64> = (0..m)
            .map(|i| code / p.pow((m - 1 - i) as u32) % p)
            .collect();
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.m
    }

    /// Number of elements `p^m`.
    #[inline]
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Monic modulus, low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.m == 1
    }

    /// `GF(p^(m*s))`.
    pub fn extension(&self, s: usize, budget: u64) -> Result<Field> {
        make_field(self.0.p, self.0.m * s, budget)
    }

    pub fn elem(&self, value: u64) -> Result<FieldElement> {
        if value >= self.0.order {
            return Err(Error::InvalidArgument(format!(
                "{value} is not an element code of GF({})",
                self.0.order
            )));
        }
        Ok(FieldElement {
            field: self.clone(),
            value,
        })
    }

    pub(crate) fn wrap(&self, value: u64) -> FieldElement {
        debug_assert!(value < self.0.order);
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        self.wrap(self.reduce_int(v))
    }

    /// Encoded image of an integer in the prime subfield.
    #[inline]
    pub fn reduce_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.0.p as i64) as u64
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.0.m || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients in [0, {})",
                self.0.m, self.0.p
            )));
        }
        Ok(self.wrap(self.encode(coeffs)))
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.order).map(move |v| self.wrap(v))
    }

    pub(crate) fn decode(&self, mut a: u64) -> Vec<u64> {
        let p = self.0.p;
        (0..self.0.m)
            .map(|_| {
                let c = a % p;
                a /= p;
                c
            })
            .collect()
    }

    pub(crate) fn encode(&self, coeffs: &[u64]) -> u64 {
        coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.0.p + c)
    }

    /// Key ordering elements by their coefficient vector `(c0, c1, ...)`,
    /// lexicographically with `c0` most significant.
    pub(crate) fn lex_key(&self, a: u64) -> u64 {
        self.decode(a)
            .iter()
            .fold(0u64, |acc, &c| acc * self.0.p + c)
    }

    // Raw arithmetic on encoded values.

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a + b;
            if s >= p {
                s - p
            } else {
                s
            }
        } else if p == 2 {
            a ^ b
        } else {
            let mut out = 0u64;
            let (mut x, mut y) = (a, b);
            for i in 0..self.0.m {
                let s = (x % p + y % p) % p;
                out += s * self.0.pow_p[i];
                x /= p;
                y /= p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        let p = self.0.p;
        if self.0.m == 1 {
            if a == 0 {
                0
            } else {
                p - a
            }
        } else if p == 2 {
            a
        } else {
            let mut out = 0u64;
            let mut x = a;
            for i in 0..self.0.m {
                let c = x % p;
                if c != 0 {
                    out += (p - c) * self.0.pow_p[i];
                }
                x /= p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.0.repr {
            Repr::Prime => mul_mod(a, b, self.0.p),
            Repr::Logs { exp, log } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize] as u64
                }
            }
            Repr::Binary { modulus } => {
                let m = self.0.m;
                let mut prod: u128 = 0;
                let (wa, mut wb) = (a as u128, b);
                let mut shift = 0;
                while wb != 0 {
                    if wb & 1 == 1 {
                        prod ^= wa << shift;
                    }
                    wb >>= 1;
                    shift += 1;
                }
                let mut bit = 2 * m;
                while bit > m {
                    bit -= 1;
                    if (prod >> bit) & 1 == 1 {
                        prod ^= modulus << (bit - m);
                    }
                }
                prod as u64
            }
            Repr::Poly => self.mul_poly(a, b),
        }
    }

    fn mul_poly(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        let m = self.0.m;
        let x = self.decode(a);
        let y = self.decode(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        let md = &self.0.modulus;
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for i in 0..m {
                let idx = d - m + i;
                prod[idx] = (prod[idx] + (p - c) * md[i]) % p;
            }
            prod[d] = 0;
        }
        self.encode(&prod[..m])
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        if let Repr::Logs { exp, log } = &self.0.repr {
            if a == 0 {
                return if e == 0 { 1 } else { 0 };
            }
            let n = self.0.order - 1;
            let idx = (log[a as usize] as u128 * (e % n) as u128 % n as u128) as usize;
            return exp[idx] as u64;
        }
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        match &self.0.repr {
            Repr::Logs { exp, log } => {
                let n = (self.0.order - 1) as usize;
                Some(exp[(n - log[a as usize] as usize) % n] as u64)
            }
            _ => Some(self.pow(a, self.0.order - 2)),
        }
    }

    /// Multiplicative order of a nonzero encoded element.
    pub fn order_of(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        let mut ord = self.0.order - 1;
        for &(r, _) in &self.0.group_factors {
            while ord % r == 0 && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Smallest encoded generator of the multiplicative group.
    pub(crate) fn primitive_element_raw(&self) -> u64 {
        *self.0.primitive.get_or_init(|| {
            let n = self.0.order - 1;
            (1..self.0.order)
                .find(|&g| self.order_of(g).ok() == Some(n))
                .expect("multiplicative group is cyclic")
        })
    }

    pub fn primitive_element(&self) -> FieldElement {
        self.wrap(self.primitive_element_raw())
    }

    /// The element of exact order `n` with the lexicographically smallest
    /// coefficient vector.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        let group = self.0.order - 1;
        if n == 0 || group % n != 0 {
            return Err(Error::NoSuchRoot {
                n,
                order: self.0.order,
            });
        }
        let cofactor = group / n;
        let zeta = (1..self.0.order)
            .map(|g| self.pow(g, cofactor))
            .find(|&z| self.order_of(z).ok() == Some(n))
            .expect("cyclic group has elements of every order dividing its size");
        let mut best = zeta;
        let mut best_key = self.lex_key(zeta);
        let mut cur = zeta;
        for j in 2..=n {
            cur = self.mul(cur, zeta);
            if gcd(j, n) == 1 {
                let key = self.lex_key(cur);
                if key < best_key {
                    best = cur;
                    best_key = key;
                }
            }
        }
        Ok(self.wrap(best))
    }

    /// The `q` elements of the subfield `GF(q)`, `q = p^a` with `a | m`, in
    /// the order `0, 1, b, b^2, ..., b^(q-2)` for a fixed generator `b`.
    pub fn subfield_elements(&self, a: usize) -> Result<Vec<u64>> {
        if a == 0 || self.0.m % a != 0 {
            return Err(Error::InvalidArgument(format!(
                "GF({}^{a}) is not a subfield of GF({}^{})",
                self.0.p, self.0.p, self.0.m
            )));
        }
        let q = self.0.p.pow(a as u32);
        let gen = self.pow(self.primitive_element_raw(), (self.0.order - 1) / (q - 1));
        let mut out = Vec::with_capacity(q as usize);
        out.push(0);
        let mut x = 1u64;
        for _ in 0..q - 1 {
            out.push(x);
            x = self.mul(x, gen);
        }
        Ok(out)
    }

    /// Text form of an element: an integer for prime fields, otherwise the
    /// coefficient vector `c0,c1,...`.
    pub fn format(&self, a: u64) -> String {
        if self.0.m == 1 {
            a.to_string()
        } else {
            self.decode(a)
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::Parse(format!("bad element {s:?} for GF({})", self.0.order));
        if self.0.m == 1 {
            if parts.len() != 1 {
                return Err(bad());
            }
            let v: i64 = parts[0].parse().map_err(|_| bad())?;
            return Ok(self.from_int(v));
        }
        let coeffs = parts
            .iter()
            .map(|t| t.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs).map_err(|_| bad())
    }
}

/// Parses a field descriptor `"p^m"` (or a bare prime power `"q"`).
pub fn parse_descriptor(s: &str, budget: u64) -> Result<Field> {
    match s.split_once('^') {
        Some((p, m)) => {
            let p = p.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            let m = m.trim().parse().map_err(|_| Error::Parse(s.into()))?;
            make_field(p, m, budget)
        }
        None => field_of_order(s.trim().parse().map_err(|_| Error::Parse(s.into()))?, budget),
    }
}

/// An element together with its field.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: u64,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.0.p.hash(state);
        self.field.0.m.hash(state);
        self.value.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.field.format(self.value), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Encoded value.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.decode(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let inv = self.field.inv(other.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.wrap(self.field.mul(self.value, inv)))
    }

    pub fn neg(&self) -> FieldElement {
        self.field.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let inv = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.wrap(inv))
    }

    /// Any integer exponent; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        let base = if e < 0 { self.inv()?.value } else { self.value };
        Ok(self.field.wrap(self.field.pow(base, e.unsigned_abs())))
    }

    pub fn order(&self) -> Result<u64> {
        self.field.order_of(self.value)
    }
}
