//! Properties of Tate's algorithm, the component map and the counts.

use std::collections::BTreeMap;

use minmodels::arith::{factor, val_rat, BigRat, Valuation};
use minmodels::counting::enumerate_by_psi;
use minmodels::equations::{apply, GenusOneEquation, Transformation};
use minmodels::fiberdata::{fiber, KodairaType, PhiElement};
use minmodels::localred::{add_points, component_of_point, neg_point, tate, Point};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn q(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// A curve `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` through `(x0, y0)`.
fn curve_through(a1: i64, a2: i64, a3: i64, a4: i64, x0: i64, y0: i64) -> Option<(GenusOneEquation, Point)> {
    let a6 = y0 * y0 + a1 * x0 * y0 + a3 * y0 - x0 * x0 * x0 - a2 * x0 * x0 - a4 * x0;
    let e = GenusOneEquation::from_ints(1, &[a1, a2, a3, a4, a6]).ok()?;
    (!e.invariants().delta.is_zero()).then_some((e, Some((q(x0), q(y0)))))
}

fn pointed_curve() -> impl Strategy<Value = (GenusOneEquation, Point)> {
    (0i64..=1, -30i64..=30, 0i64..=1, -400i64..=400, -30i64..=30, -60i64..=60)
        .prop_filter_map("singular", |(a1, a2, a3, a4, x0, y0)| curve_through(a1, a2, a3, a4, x0, y0))
}

fn primes_of_delta(e: &GenusOneEquation) -> Vec<BigInt> {
    let d = e.invariants().delta;
    factor(d.numer()).unwrap().into_iter().map(|(p, _)| p).collect()
}

fn coeffs(e: &GenusOneEquation) -> Vec<BigRat> {
    e.coeffs().to_vec()
}

/// The image of a point under a degree-1 transformation.
fn image(g: &Transformation, pt: &Point) -> Point {
    let Transformation::Deg1 { u, r, s, t } = g else { unreachable!() };
    pt.as_ref().map(|(x, y)| {
        let u2 = u * u;
        let xp = (x - r) / &u2;
        let yp = (y - s * (x - r) - t) / (&u2 * u);
        (xp, yp)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// ψ is a homomorphism on the subgroup generated by a point.
    #[test]
    fn psi_is_a_homomorphism((e, p1) in pointed_curve()) {
        let a = coeffs(&e);
        let p2 = add_points(&a, &p1, &p1);
        let p3 = add_points(&a, &p2, &p1);
        for p in primes_of_delta(&e) {
            let phi = tate(&e, &p).unwrap().phi;
            let psi = |pt: &Point| component_of_point(&e, &p, pt).unwrap();
            prop_assert_eq!(psi(&None), phi.identity());
            prop_assert_eq!(psi(&p2), phi.add(psi(&p1), psi(&p1)));
            prop_assert_eq!(psi(&p3), phi.add(psi(&p2), psi(&p1)));
            prop_assert_eq!(psi(&neg_point(&a, &p1)), phi.neg(psi(&p1)));
        }
    }

    /// For split `I_n` the component index is visible in the partial
    /// derivative `2y + a1 x + a3`, which is invariant under translations:
    /// `min(ν(F_y), n/2) = min(i, n - i)`.
    #[test]
    fn split_multiplicative_component_oracle((e, pt) in pointed_curve()) {
        for p in primes_of_delta(&e) {
            let red = tate(&e, &p).unwrap();
            let KodairaType::I(n) = red.kodaira else { continue };
            if n < 2 || !red.split {
                continue;
            }
            let PhiElement::Cyclic(i) = component_of_point(&e, &p, &pt).unwrap() else { unreachable!() };
            let Some((x, y)) = image(&red.to_minimal, &pt) else { continue };
            let a = coeffs(&red.minimal_model);
            let fy = q(2) * &y + &a[0] * &x + &a[2];
            let fx = q(3) * &x * &x + q(2) * &a[1] * &x + &a[3] - &a[0] * &y;
            if i == 0 {
                prop_assert!(val_rat(&fx, &p) == Valuation::Finite(0) || val_rat(&fy, &p) == Valuation::Finite(0));
            } else {
                // Both branches meet the point equally deeply when i = n/2, so
                // only a lower bound is visible there.
                let v = val_rat(&fy, &p).finite().unwrap_or(i64::MAX).min((n / 2) as i64);
                prop_assert_eq!(v, i.min(n - i) as i64);
            }
        }
    }

    /// Integral changes of coordinates with `u = ±1` do not change the data.
    #[test]
    fn tate_is_invariant_under_unimodular_changes(
        (e, _) in pointed_curve(),
        u in prop::sample::select(vec![-1i64, 1]),
        r in -20i64..=20, s in -20i64..=20, t in -20i64..=20,
    ) {
        let g = Transformation::deg1(q(u), q(r), q(s), q(t));
        let e2 = apply(&g, &e).unwrap();
        for p in primes_of_delta(&e) {
            let (a, b) = (tate(&e, &p).unwrap(), tate(&e2, &p).unwrap());
            prop_assert_eq!((a.kodaira, a.cp, a.v_delta_min), (b.kodaira, b.cp, b.v_delta_min));
        }
    }

    /// `ν(Δ_min)` is what the type forces at primes of at least 5, and the
    /// minimal model has exactly that valuation.
    #[test]
    fn minimal_model_valuation((e, _) in pointed_curve()) {
        for p in primes_of_delta(&e) {
            let red = tate(&e, &p).unwrap();
            prop_assert_eq!(val_rat(&red.minimal_model.invariants().delta, &p), Valuation::Finite(red.v_delta_min as i64));
            prop_assert!(red.minimal_model.is_integral());
            if p >= BigInt::from(5) {
                prop_assert_eq!(red.kodaira.tame_valuation(), red.v_delta_min);
            }
        }
    }
}

/// Reversing the numbering of an `n`-gon swaps the counts at `ψ` and `-ψ`.
#[test]
fn orientation_invariance() {
    for n in 1..=12u32 {
        let cps: Vec<u32> = if n % 2 == 0 { vec![n, 2] } else { vec![n, 1] };
        for cp in cps {
            let f = fiber(KodairaType::I(n), cp, false).unwrap();
            let r = fiber(KodairaType::I(n), cp, true).unwrap();
            for deg in 2..=4u8 {
                let a = enumerate_by_psi(&f, deg).unwrap();
                let b: BTreeMap<PhiElement, u64> =
                    enumerate_by_psi(&r, deg).unwrap().into_iter().map(|(k, v)| (k, v.total)).collect();
                for (psi, count) in a {
                    let neg = f.phi.neg(psi);
                    assert_eq!(b[&neg], count.total, "I{n} c_p={cp} n={deg} psi={psi}");
                    assert_eq!(b[&psi], count.total, "I{n} c_p={cp} n={deg} psi={psi}");
                }
            }
        }
    }
}
