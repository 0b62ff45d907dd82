//! Gaussian elimination over a [`Field`] on encoded elements.

use crate::gf::Field;

/// Rank of a row-major `rows x cols` matrix. The buffer is overwritten.
pub fn rank_in_place(field: &Field, a: &mut [u64], rows: usize, cols: usize) -> usize {
    debug_assert_eq!(a.len(), rows * cols);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for c in col..cols {
                a.swap(piv * cols + c, rank * cols + c);
            }
        }
        let inv = field.inv(a[rank * cols + col]).expect("pivot is nonzero");
        for r in rank + 1..rows {
            let lead = a[r * cols + col];
            if lead == 0 {
                continue;
            }
            let factor = field.mul(lead, inv);
            for c in col..cols {
                let v = field.mul(factor, a[rank * cols + c]);
                a[r * cols + c] = field.sub(a[r * cols + c], v);
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(field: &Field, a: &[u64], rows: usize, cols: usize) -> usize {
    let mut buf = a.to_vec();
    rank_in_place(field, &mut buf, rows, cols)
}

/// Determinant of a row-major square matrix.
pub fn det(field: &Field, a: &[u64], n: usize) -> u64 {
    let mut a = a.to_vec();
    let mut acc = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for c in 0..n {
                a.swap(piv * n + c, col * n + c);
            }
            acc = field.neg(acc);
        }
        let d = a[col * n + col];
        acc = field.mul(acc, d);
        let inv = field.inv(d).expect("pivot is nonzero");
        for r in col + 1..n {
            let lead = a[r * n + col];
            if lead == 0 {
                continue;
            }
            let factor = field.mul(lead, inv);
            for c in col..n {
                let v = field.mul(factor, a[col * n + c]);
                a[r * n + c] = field.sub(a[r * n + c], v);
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn small_matrices() {
        let f = make_field(7, 1, 1 << 31).unwrap();
        // [[1,2],[3,4]] det = -2 = 5
        assert_eq!(det(&f, &[1, 2, 3, 4], 2), 5);
        assert_eq!(det(&f, &[0, 1, 1, 0], 2), 6);
        assert_eq!(rank(&f, &[1, 2, 2, 4], 2, 2), 1);
        assert_eq!(rank(&f, &[1, 2, 3, 2, 4, 6, 0, 0, 1], 3, 3), 2);
        assert_eq!(rank(&f, &[0, 0, 0, 0], 2, 2), 0);
    }

    #[test]
    fn det_against_permutation_expansion() {
        let f = make_field(3, 2, 1 << 31).unwrap();
        let mut seed = 12345u64;
        for _ in 0..50 {
            let a: Vec<u64> = (0..9)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (seed >> 33) % 9
                })
                .collect();
            let mut expand = 0u64;
            let perms = [
                ([0, 1, 2], false),
                ([1, 2, 0], false),
                ([2, 0, 1], false),
                ([0, 2, 1], true),
                ([2, 1, 0], true),
                ([1, 0, 2], true),
            ];
            for (p, odd) in perms {
                let term = (0..3).fold(1, |acc, r| f.mul(acc, a[r * 3 + p[r]]));
                expand = if odd { f.sub(expand, term) } else { f.add(expand, term) };
            }
            assert_eq!(det(&f, &a, 3), expand);
            assert_eq!(rank(&f, &a, 3, 3) == 3, expand != 0);
        }
    }
}
