//! Local Smith decomposition and lifting into SL_n(Z).

use minmodels::arith::{modp, val_int};
use minmodels::global::{crt_sl_lift, snf_local};
use minmodels::matrix::{det_int, mul, Mat};
use minmodels::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn to_mat(n: usize, v: &[i64]) -> Mat<BigInt> {
    v.chunks(n).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn primitive_nonsingular() -> impl Strategy<Value = Mat<BigInt>> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(-60i64..=60, n * n).prop_filter_map("singular or imprimitive", move |v| {
            let m = to_mat(n, &v);
            let g = v.iter().fold(0i64, |a, &b| a.gcd(&b));
            (g == 1 && !det_int(&m).is_zero()).then_some(m)
        })
    })
}

/// An element of SL_n(Z) built from elementary matrices.
fn sl(n: usize, ops: &[(usize, usize, i64)]) -> Mat<BigInt> {
    let mut m: Mat<BigInt> = minmodels::matrix::identity(n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        for k in 0..n {
            let v = &m[j][k] * c;
            m[i][k] += v;
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_recomposes(a in primitive_nonsingular(), p in prop::sample::select(vec![2i64, 3, 5, 7, 13])) {
        let p = BigInt::from(p);
        let n = a.len();
        let (v, d, u) = snf_local(&a, &p).unwrap();
        prop_assert_eq!(&mul(&mul(&v, &d), &u), &a);
        prop_assert!(det_int(&u).abs().is_one());
        prop_assert!(val_int(&det_int(&v), &p).finite() == Some(0));
        prop_assert!(d[n - 1][n - 1].is_one());
        let mut last = None;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    prop_assert!(d[i][j].is_zero());
                }
            }
            let e = val_int(&d[i][i], &p).finite().unwrap();
            prop_assert_eq!(&d[i][i], &p.pow(e as u32));
            if let Some(l) = last {
                prop_assert!(e <= l);
            }
            last = Some(e);
        }
    }

    #[test]
    fn crt_lift_meets_every_congruence(
        n in 2usize..=4,
        ops in prop::collection::vec(prop::collection::vec((0usize..4, 0usize..4, -9i64..=9), 0..8), 3),
        exps in prop::collection::vec(1u32..=3, 3),
    ) {
        let primes = [5i64, 7, 19];
        let targets: Vec<(Mat<BigInt>, BigInt, u32)> =
            (0..3).map(|k| (sl(n, &ops[k]), BigInt::from(primes[k]), exps[k])).collect();
        let u = crt_sl_lift(&targets).unwrap();
        prop_assert!(det_int(&u).is_one());
        for (t, p, m) in &targets {
            let q = p.pow(*m);
            for i in 0..n {
                for j in 0..n {
                    prop_assert!(modp(&(&u[i][j] - &t[i][j]), &q).is_zero());
                }
            }
        }
    }
}

#[test]
fn crt_lift_accepts_targets_only_congruent_to_det_one() {
    // det = 26 ≡ 1 mod 25 but is not 1 over Z.
    let t = to_mat(2, &[26, 0, 0, 1]);
    let u = crt_sl_lift(&[(t.clone(), BigInt::from(5), 2)]).unwrap();
    assert!(det_int(&u).is_one());
    assert!(modp(&(&u[0][0] - 26), &BigInt::from(25)).is_zero());
}

#[test]
fn snf_rejects_bad_input() {
    assert_eq!(snf_local(&to_mat(2, &[3, 6, 9, 3]), &BigInt::from(3)), Err(Error::NotPrimitive));
    assert_eq!(snf_local(&to_mat(2, &[1, 2, 2, 4]), &BigInt::from(3)), Err(Error::ZeroDeterminant));
    assert_eq!(snf_local(&to_mat(2, &[1, 0, 0, 1]), &BigInt::from(4)), Err(Error::NotPrime(BigInt::from(4))));
}

#[test]
fn snf_on_shaped_input_is_trivial() {
    let a = to_mat(2, &[7, 0, 0, 1]);
    let (v, d, u) = snf_local(&a, &BigInt::from(7)).unwrap();
    assert_eq!(d, a);
    assert_eq!(mul(&mul(&v, &d), &u), a);
}
