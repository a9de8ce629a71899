//! Dense square matrices over exact rings, stored row-major as nested vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::BigRat;

pub type Mat<T> = Vec<Vec<T>>;

pub fn identity<T: Zero + One + Clone>(n: usize) -> Mat<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn diag<T: Zero + Clone>(d: &[T]) -> Mat<T> {
    let n = d.len();
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { d[i].clone() } else { T::zero() }).collect())
        .collect()
}

pub fn mul<T>(a: &Mat<T>, b: &Mat<T>) -> Mat<T>
where
    T: Zero + Clone,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![T::zero(); m]; n];
    for i in 0..n {
        for (l, brow) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = out[i][j].clone() + &a[i][l] * &brow[j];
            }
        }
    }
    out
}

pub fn transpose<T: Clone>(a: &Mat<T>) -> Mat<T> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn to_rat(a: &Mat<BigInt>) -> Mat<BigRat> {
    a.iter()
        .map(|row| row.iter().map(|x| BigRat::from_integer(x.clone())).collect())
        .collect()
}

pub fn det_rat(a: &Mat<BigRat>) -> BigRat {
    let n = a.len();
    let mut m = a.clone();
    let mut det = BigRat::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRat::zero();
        };
        if piv != c {
            m.swap(piv, c);
            det = -det;
        }
        let p = m[c][c].clone();
        det *= &p;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &p;
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

/// Bareiss fraction-free determinant.
pub fn det_int(a: &Mat<BigInt>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t.div_floor(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn inverse_rat(a: &Mat<BigRat>) -> Option<Mat<BigRat>> {
    let n = a.len();
    let mut m: Mat<BigRat> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(piv, c);
        let p = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r == c || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone();
            for k in 0..2 * n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn im(rows: &[&[i64]]) -> Mat<BigInt> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinants_agree() {
        let a = im(&[&[2, -1, 0, 3], &[1, 4, 2, -2], &[0, 5, -3, 1], &[7, 0, 1, 1]]);
        let d = det_int(&a);
        assert_eq!(BigRat::from_integer(d.clone()), det_rat(&to_rat(&a)));
        assert_eq!(d, int(343));
        let singular = im(&[&[1, 2], &[2, 4]]);
        assert!(det_int(&singular).is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let a = to_rat(&im(&[&[2, 1, 0], &[0, 1, 5], &[3, 0, 1]]));
        let inv = inverse_rat(&a).unwrap();
        assert_eq!(mul(&a, &inv), identity::<BigRat>(3));
        assert_eq!(det_rat(&inv) * det_rat(&a), rat(1));
    }
}
