//! Dense univariate polynomials over a prime field `GF(p)`, low degree first.
//! Only what field construction needs: reduction, powering, gcd.

use crate::arith::{mul_mod, pow_mod};

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Remainder of `a` modulo `f` (f nonzero).
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let d = r.len() - 1;
        let c = mul_mod(r[d], lead_inv, p);
        if c != 0 {
            for i in 0..=df {
                let sub = mul_mod(c, f[i], p);
                let idx = d - df + i;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_rem(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn pow_rem(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_rem(&acc, &b, f, p);
        }
        b = mul_rem(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Rabin's irreducibility test for a monic `f` of degree `m >= 1`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // frob[i] = x^(p^i) mod f
    let mut frob = vec![rem(&x, f, p)];
    for i in 1..=m {
        let next = pow_rem(&frob[i - 1], p, f, p);
        frob.push(next);
    }
    if !sub(&frob[m], &x, p).is_empty() {
        return false;
    }
    for (r, _) in crate::arith::factor(m as u64) {
        let k = m / r as usize;
        let g = gcd(f, &sub(&frob[k], &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_small() {
        // x^2 + x + 1 over GF(2)
        assert!(is_irreducible(&[1, 1, 1], 2));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // x^3 + x + 1 over GF(2)
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over GF(2): no roots but reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        // x^2 + 1 over GF(3) is irreducible, over GF(5) it is not
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
    }

    #[test]
    fn count_irreducibles_matches_necklace_formula() {
        // number of monic irreducibles of degree m over GF(p): (1/m) sum_{d|m} mu(d) p^(m/d)
        let cases = [(2u64, 2usize, 1usize), (2, 3, 2), (2, 4, 3), (2, 6, 9), (3, 2, 3), (3, 3, 8)];
        for (p, m, expected) in cases {
            let mut count = 0;
            let total = p.pow(m as u32);
            for code in 0..total {
                let mut f: Vec<u64> = (0..m).map(|i| code / p.pow(i as u32) % p).collect();
                f.push(1);
                if is_irreducible(&f, p) {
                    count += 1;
                }
            }
            assert_eq!(count, expected, "p={p} m={m}");
        }
    }
}
