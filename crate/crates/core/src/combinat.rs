//! Lexicographic enumeration and ranking of `k`-subsets of `{0, ..., n-1}`.

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Advances `c` to the next `k`-subset of `{0, ..., n-1}` in lexicographic
/// order. Returns `false` (leaving `c` unspecified) after the last one.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Zero-based position of a sorted subset in the lexicographic order of all
/// `k`-subsets of `{0, ..., n-1}`.
pub fn combination_rank(c: &[usize], n: usize) -> u128 {
    let k = c.len();
    let mut rank = 0u128;
    let mut prev = 0usize;
    for (i, &x) in c.iter().enumerate() {
        for y in prev..x {
            rank += binomial((n - 1 - y) as u64, (k - 1 - i) as u64);
        }
        prev = x + 1;
    }
    rank
}

/// All `k`-subsets of `items` in lexicographic order of positions.
pub fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut c: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    loop {
        out.push(c.iter().map(|&i| items[i].clone()).collect());
        if k == 0 || !next_combination(&mut c, n) {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_all_in_order() {
        let all = subsets(&[0usize, 1, 2, 3, 4], 3);
        assert_eq!(all.len() as u128, binomial(5, 3));
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[9], vec![2, 3, 4]);
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, c) in all.iter().enumerate() {
            assert_eq!(combination_rank(c, 5), i as u128);
        }
    }

    #[test]
    fn edge_cases() {
        assert_eq!(subsets(&[1, 2], 0), vec![Vec::<i32>::new()]);
        assert!(subsets(&[1, 2], 3).is_empty());
        assert_eq!(binomial(23, 7), 245_157);
        assert_eq!(binomial(3, 5), 0);
    }
}
