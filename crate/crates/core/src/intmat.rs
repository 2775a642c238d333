//! Small dense integer matrix helpers used by evaluation oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num.div_floor(&prev);
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if sign < 0 {
        -a[n - 1][n - 1].clone()
    } else {
        a[n - 1][n - 1].clone()
    }
}

/// Minor with 0-based row and column positions.
pub fn minor(m: &[Vec<BigInt>], rows: &[usize], cols: &[usize]) -> BigInt {
    let sub: IntMatrix = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect();
    det(&sub)
}

pub fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let (n, k) = (a.len(), b.len());
    let c = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..c)
                .map(|j| {
                    let mut s = BigInt::zero();
                    for t in 0..k {
                        s += &a[i][t] * &b[t][j];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn random(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> IntMatrix {
    (0..rows).map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(lo..=hi))).collect()).collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Nonzero invariant factors d_1 | d_2 | … of the Smith normal form,
/// all positive.
pub fn smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: IntMatrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = vec![];
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block as pivot
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].magnitude().cmp(a[k][l].magnitude()))
        else {
            break;
        };
        a.swap(t, pi);
        for r in a.iter_mut() {
            r.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t].div_floor(&a[t][t]);
            if !q.is_zero() {
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            let q = a[t][j].div_floor(&a[t][t]);
            if !q.is_zero() {
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].mod_floor(&a[t][t]).is_zero())) {
            for j in t..cols {
                let v = a[i][j].clone();
                a[t][j] += v;
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_determinants() {
        assert_eq!(det(&from_i64(&[vec![1, 2], vec![3, 4]])), BigInt::from(-2));
        assert_eq!(det(&from_i64(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]])), BigInt::from(-5));
        assert_eq!(det(&from_i64(&[vec![2, 4], vec![1, 2]])), BigInt::zero());
        assert_eq!(det(&[]), BigInt::one());
    }

    #[test]
    fn smith_examples() {
        let d = smith_diagonal(&from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(d, [2, 6, 12].map(BigInt::from).to_vec());
        assert_eq!(smith_diagonal(&from_i64(&[vec![2, 0], vec![0, 3]])), [1, 6].map(BigInt::from).to_vec());
        assert!(smith_diagonal(&from_i64(&[vec![0, 0]])).is_empty());
    }
}
