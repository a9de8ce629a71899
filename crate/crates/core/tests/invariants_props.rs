//! Covariance and group-action laws for the equation invariants.

use minmodels::arith::{ratio, val_int, BigRat, Valuation};
use minmodels::equations::{apply, GenusOneEquation, Transformation};
use minmodels::matrix::{det_rat, Mat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

fn equation(degree: u8) -> impl Strategy<Value = GenusOneEquation> {
    let len = minmodels::equations::coefficient_count(degree).unwrap();
    prop::collection::vec(-6i64..=6, len).prop_filter_map("singular", move |c| {
        let e = GenusOneEquation::from_ints(degree, &c).ok()?;
        (!e.invariants().delta.is_zero()).then_some(e)
    })
}

fn square(n: usize) -> impl Strategy<Value = Mat<BigRat>> {
    prop::collection::vec(-3i64..=3, n * n).prop_filter_map("singular matrix", move |v| {
        let m: Mat<BigRat> = v.chunks(n).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        (!det_rat(&m).is_zero()).then_some(m)
    })
}

fn scalar() -> impl Strategy<Value = BigRat> {
    (prop_oneof![-4i64..=-1, 1i64..=4], 1i64..=3).prop_map(|(a, b)| ratio(a, b))
}

fn transformation(degree: u8) -> BoxedStrategy<Transformation> {
    match degree {
        1 => (scalar(), -5i64..=5, -5i64..=5, -5i64..=5)
            .prop_map(|(u, r, s, t)| Transformation::deg1(u, q(r), q(s), q(t)))
            .boxed(),
        2 => (scalar(), prop::array::uniform3(-3i64..=3), square(2))
            .prop_map(|(mu, r, m)| Transformation::Deg2 { mu, r: r.map(q), m })
            .boxed(),
        3 => (scalar(), square(3)).prop_map(|(mu, m)| Transformation::Deg3 { mu, m }).boxed(),
        _ => (square(2), square(4)).prop_map(|(m, n)| Transformation::Deg4 { m, n }).boxed(),
    }
}

fn pow(x: &BigRat, k: i32) -> BigRat {
    num_traits::pow::Pow::pow(x, k)
}

fn check_covariance(e: &GenusOneEquation, g: &Transformation) -> Result<(), TestCaseError> {
    let before = e.invariants();
    let after = apply(g, e).unwrap().invariants();
    let d = g.det();
    prop_assert_eq!(&after.c4, &(pow(&d, 4) * &before.c4));
    prop_assert_eq!(&after.c6, &(pow(&d, 6) * &before.c6));
    prop_assert_eq!(&after.delta, &(pow(&d, 12) * &before.delta));
    let c4 = &after.c4;
    prop_assert_eq!(&after.delta, &((c4 * c4 * c4 - &after.c6 * &after.c6) / q(1728)));
    Ok(())
}

fn check_composition(e: &GenusOneEquation, a: &Transformation, b: &Transformation) -> Result<(), TestCaseError> {
    let step = apply(b, &apply(a, e).unwrap()).unwrap();
    prop_assert_eq!(&apply(&a.then(b).unwrap(), e).unwrap(), &step);
    prop_assert_eq!(&apply(&a.inverse().unwrap(), &apply(a, e).unwrap()).unwrap(), e);
    prop_assert_eq!(a.then(b).unwrap().det(), a.det() * b.det());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covariance_deg1(e in equation(1), g in transformation(1)) { check_covariance(&e, &g)?; }
    #[test]
    fn covariance_deg2(e in equation(2), g in transformation(2)) { check_covariance(&e, &g)?; }
    #[test]
    fn covariance_deg3(e in equation(3), g in transformation(3)) { check_covariance(&e, &g)?; }
    #[test]
    fn covariance_deg4(e in equation(4), g in transformation(4)) { check_covariance(&e, &g)?; }

    #[test]
    fn composition_deg1(e in equation(1), a in transformation(1), b in transformation(1)) { check_composition(&e, &a, &b)?; }
    #[test]
    fn composition_deg2(e in equation(2), a in transformation(2), b in transformation(2)) { check_composition(&e, &a, &b)?; }
    #[test]
    fn composition_deg3(e in equation(3), a in transformation(3), b in transformation(3)) { check_composition(&e, &a, &b)?; }
    #[test]
    fn composition_deg4(e in equation(4), a in transformation(4), b in transformation(4)) { check_composition(&e, &a, &b)?; }

    #[test]
    fn text_round_trip(e in equation(4), g in transformation(4)) {
        prop_assert_eq!(e.to_string().parse::<GenusOneEquation>().unwrap(), e);
        prop_assert_eq!(g.to_string().parse::<Transformation>().unwrap(), g);
    }

    #[test]
    fn valuation_laws(a in -10_000i64..10_000, b in -10_000i64..10_000, p in prop::sample::select(vec![2i64, 3, 5, 7, 11])) {
        let (a, b, p) = (BigInt::from(a), BigInt::from(b), BigInt::from(p));
        let (va, vb) = (val_int(&a, &p), val_int(&b, &p));
        match (va, vb) {
            (Valuation::Finite(x), Valuation::Finite(y)) => {
                prop_assert_eq!(val_int(&(&a * &b), &p), Valuation::Finite(x + y));
                prop_assert!(val_int(&(&a + &b), &p).at_least(x.min(y)));
                if x != y {
                    prop_assert_eq!(val_int(&(&a + &b), &p), Valuation::Finite(x.min(y)));
                }
            }
            _ => prop_assert!(a.is_zero() || b.is_zero()),
        }
        prop_assert!(val_int(&BigInt::one(), &p) == Valuation::Finite(0));
    }
}
