//! Global counts over Q and the lattice tools behind them: the minimal
//! discriminant, the product of local counts over the primes whose square
//! divides it, a local Smith decomposition and lifting into `SL_n(Z)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{crt, factor, fmt_rat, inv_mod, is_prime, modp, val_int, val_rat, BigRat, Valuation};
use crate::counting::{local_count_full, PsiInput};
use crate::equations::{apply, jacobian, GenusOneEquation, Transformation};
use crate::error::{Error, Result};
use crate::localred::{tate, KodairaType, PhiElement};
use crate::matrix::{self, Mat};

fn ser_bigint<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

/// Primes dividing the numerator or denominator of a nonzero rational.
fn primes_of(q: &BigRat) -> Result<Vec<BigInt>> {
    let mut ps: BTreeSet<BigInt> = BTreeSet::new();
    for n in [q.numer(), q.denom()] {
        for (p, _) in factor(n)? {
            ps.insert(p);
        }
    }
    Ok(ps.into_iter().collect())
}

/// `(p, ν_p(Δ_min))` for every prime where the minimal discriminant is not a
/// unit.
fn minimal_valuations(e: &GenusOneEquation) -> Result<Vec<(BigInt, u32)>> {
    let delta = e.invariants().delta;
    if delta.is_zero() {
        return Err(Error::Singular);
    }
    let mut out = Vec::new();
    for p in primes_of(&delta)? {
        let v = tate(e, &p)?.v_delta_min;
        if v > 0 {
            out.push((p, v));
        }
    }
    Ok(out)
}

/// The minimal discriminant, assembled prime by prime.
pub fn minimal_discriminant(e: &GenusOneEquation) -> Result<BigInt> {
    let sign = if e.invariants().delta.is_negative() { -BigInt::one() } else { BigInt::one() };
    Ok(minimal_valuations(e)?.into_iter().fold(sign, |acc, (p, v)| acc * p.pow(v)))
}

/// Primes whose square divides the minimal discriminant. Elsewhere the
/// reduction is good or `I_1` and the local model is unique.
pub fn bad_primes(e: &GenusOneEquation) -> Result<Vec<BigInt>> {
    Ok(minimal_valuations(e)?.into_iter().filter(|(_, v)| *v >= 2).map(|(p, _)| p).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalFactor {
    #[serde(serialize_with = "ser_bigint")]
    pub p: BigInt,
    pub kodaira: KodairaType,
    pub cp: u32,
    #[serde(rename = "vDeltaMin")]
    pub v_delta_min: u32,
    pub psi: PhiElement,
    #[serde(rename = "Np")]
    pub np: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalCount {
    #[serde(rename = "N")]
    pub total: u64,
    pub factors: Vec<LocalFactor>,
}

/// Number of minimal global degree-n models, the product of the local
/// counts over the bad primes. Primes missing from `psi` use `ψ = 0`.
pub fn global_count(e: &GenusOneEquation, n: u8, psi: &BTreeMap<BigInt, PsiInput>) -> Result<GlobalCount> {
    let mut factors = Vec::new();
    for p in bad_primes(e)? {
        let input = psi.get(&p).cloned().unwrap_or(PsiInput::Identity);
        let local = local_count_full(e, &p, n, &input)?;
        factors.push(LocalFactor {
            p,
            kodaira: local.reduction.kodaira,
            cp: local.reduction.cp,
            v_delta_min: local.reduction.v_delta_min,
            psi: local.psi,
            np: local.breakdown.total,
        });
    }
    let total = factors.iter().map(|f| f.np).product();
    Ok(GlobalCount { total, factors })
}

fn det_and_gcd(a: &Mat<BigInt>) -> Result<()> {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(Error::Malformed("matrix must be square and non-empty".into()));
    }
    if matrix::det_int(a).is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    let g = a.iter().flatten().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_one() {
        return Err(Error::NotPrimitive);
    }
    Ok(())
}

/// Integer Smith form with the inverses of the transforms kept:
/// `A = L · S · R` with `L`, `R` unimodular and `S` diagonal, each diagonal
/// entry dividing the next.
pub fn smith(a: &Mat<BigInt>) -> (Mat<BigInt>, Mat<BigInt>, Mat<BigInt>) {
    let n = a.len();
    let mut s = a.clone();
    let mut l: Mat<BigInt> = matrix::identity(n);
    let mut r: Mat<BigInt> = matrix::identity(n);
    // Row op row_i += c row_j on S corresponds to col_j -= c col_i on L.
    let row_add = |s: &mut Mat<BigInt>, l: &mut Mat<BigInt>, i: usize, j: usize, c: &BigInt| {
        for k in 0..n {
            let v = &s[j][k] * c;
            s[i][k] += v;
            let w = &l[k][i] * c;
            l[k][j] -= w;
        }
    };
    let col_add = |s: &mut Mat<BigInt>, r: &mut Mat<BigInt>, i: usize, j: usize, c: &BigInt| {
        for k in 0..n {
            let v = &s[k][j] * c;
            s[k][i] += v;
            let w = &r[i][k] * c;
            r[j][k] -= w;
        }
    };
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !s[i][j].is_zero() && best.is_none_or(|(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            if bi != t {
                s.swap(bi, t);
                for row in l.iter_mut() {
                    row.swap(bi, t);
                }
            }
            if bj != t {
                for row in s.iter_mut() {
                    row.swap(bj, t);
                }
                r.swap(bj, t);
            }
            let mut clean = true;
            for i in t + 1..n {
                let q = s[i][t].div_floor(&s[t][t]);
                if !q.is_zero() {
                    row_add(&mut s, &mut l, i, t, &-q);
                }
                if !s[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = s[t][j].div_floor(&s[t][t]);
                if !q.is_zero() {
                    col_add(&mut s, &mut r, j, t, &-q);
                }
                if !s[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !(&s[i][j] % &s[t][t]).is_zero()));
            match bad {
                Some(i) => row_add(&mut s, &mut l, t, i, &BigInt::one()),
                None => break,
            }
        }
        if s[t][t].is_negative() {
            for k in 0..n {
                s[t][k] = -&s[t][k];
                l[k][t] = -&l[k][t];
            }
        }
    }
    (l, s, r)
}

/// `A = V · D · U` with `U` unimodular, `V` integral of determinant prime to
/// p, and `D = diag(p^{r_1}, ..., p^{r_{n-1}}, 1)` with `r_1 >= ... >= 0`.
pub fn snf_local(a: &Mat<BigInt>, p: &BigInt) -> Result<(Mat<BigInt>, Mat<BigInt>, Mat<BigInt>)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    det_and_gcd(a)?;
    let n = a.len();
    let (l, s, r) = smith(a);
    let mut w = vec![BigInt::one(); n];
    let mut pe = vec![BigInt::one(); n];
    for i in 0..n {
        let e = val_int(&s[i][i], p).finite().expect("nonzero diagonal") as u32;
        pe[i] = p.pow(e);
        w[i] = &s[i][i] / &pe[i];
    }
    // Order the exponents decreasingly; a stable sort leaves ties in place.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(pe[i].bits()));
    let perm: Mat<BigInt> = (0..n).map(|i| (0..n).map(|j| BigInt::from(u8::from(order[j] == i))).collect()).collect();
    let v = matrix::mul(&matrix::mul(&l, &matrix::diag(&w)), &perm);
    let d = matrix::diag(&order.iter().map(|&i| pe[i].clone()).collect::<Vec<_>>());
    let u = matrix::mul(&matrix::transpose(&perm), &r);
    Ok((v, d, u))
}

/// A matrix in `SL_n(Z)` congruent to each `U_i` modulo `p_i^{m_i}`.
///
/// The entrywise CRT lift `B` has determinant 1 modulo `M = Π p_i^{m_i}`.
/// Elementary row operations reduce `B` to the identity modulo `M`; the
/// inverse operations, performed over Z, rebuild a determinant-1 matrix
/// congruent to `B`.
pub fn crt_sl_lift(targets: &[(Mat<BigInt>, BigInt, u32)]) -> Result<Mat<BigInt>> {
    let Some((first, _, _)) = targets.first() else {
        return Err(Error::Malformed("no targets".into()));
    };
    let n = first.len();
    let mut seen = BTreeSet::new();
    let mut moduli = Vec::new();
    for (u, p, m) in targets {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.clone()));
        }
        if !seen.insert(p.clone()) {
            return Err(Error::RepeatedPrime);
        }
        if *m == 0 || u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("targets must be n x n with m >= 1".into()));
        }
        let q = p.pow(*m);
        if !modp(&(matrix::det_int(u) - 1), &q).is_zero() {
            return Err(Error::NotUnimodular(q));
        }
        moduli.push((p.clone(), q));
    }
    let big_m: BigInt = moduli.iter().map(|(_, q)| q.clone()).product();
    let mut b: Mat<BigInt> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let rs: Vec<(BigInt, BigInt)> =
                        targets.iter().zip(&moduli).map(|((u, _, _), (_, q))| (u[i][j].clone(), q.clone())).collect();
                    crt(&rs)
                })
                .collect()
        })
        .collect();
    let mut ops: Vec<(usize, usize, BigInt)> = Vec::new();
    let mut row_add = |b: &mut Mat<BigInt>, i: usize, j: usize, c: BigInt| {
        let c = modp(&c, &big_m);
        if c.is_zero() {
            return;
        }
        for k in 0..n {
            let v = &b[j][k] * &c;
            b[i][k] = modp(&(&b[i][k] + v), &big_m);
        }
        ops.push((i, j, c));
    };
    for j in 0..n {
        if j + 1 < n {
            // Make the pivot a unit modulo every p_i.
            let mut coeffs: Vec<Vec<(BigInt, BigInt)>> = vec![Vec::new(); n];
            for (p, q) in &moduli {
                let pivot_unit = !modp(&b[j][j], p).is_zero();
                let helper = if pivot_unit { None } else { (j + 1..n).find(|&r| !modp(&b[r][j], p).is_zero()) };
                if !pivot_unit && helper.is_none() {
                    return Err(Error::NotUnimodular(big_m.clone()));
                }
                for (r, c) in coeffs.iter_mut().enumerate().skip(j + 1) {
                    c.push((BigInt::from(u8::from(helper == Some(r))), q.clone()));
                }
            }
            for r in j + 1..n {
                let c = crt(&coeffs[r]);
                row_add(&mut b, j, r, c);
            }
            // Normalise the pivot to 1 through row j+1.
            let u = b[j][j].clone();
            if !u.is_one() {
                let ui = inv_mod(&u, &big_m).expect("unit pivot");
                let c = (BigInt::one() - &u - &b[j + 1][j]) * ui;
                row_add(&mut b, j + 1, j, c);
                row_add(&mut b, j, j + 1, BigInt::one());
            }
        }
        debug_assert!(modp(&(&b[j][j] - 1), &big_m).is_zero());
        for i in 0..n {
            if i != j {
                let c = -b[i][j].clone();
                row_add(&mut b, i, j, c);
            }
        }
    }
    let mut u: Mat<BigInt> = matrix::identity(n);
    for (i, j, c) in ops.into_iter().rev() {
        for k in 0..n {
            let v = &u[j][k] * &c;
            u[i][k] -= v;
        }
    }
    Ok(u)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationCheck {
    #[serde(serialize_with = "ser_bigint")]
    pub p: BigInt,
    pub before: Valuation,
    pub after: Valuation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub transformation: Transformation,
    pub integral: bool,
    pub det: String,
    pub valuations: Vec<ValuationCheck>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelListReport {
    #[serde(serialize_with = "ser_bigints", rename = "badPrimes")]
    pub bad_primes: Vec<BigInt>,
    pub entries: Vec<ModelReport>,
    #[serde(rename = "allValid")]
    pub all_valid: bool,
    pub note: &'static str,
}

fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for p in v {
        match p.to_i64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&p.to_string())?,
        }
    }
    seq.end()
}

/// Checks that each transformation takes `φ` to an integral equation with
/// the same discriminant valuation at every bad prime of the Jacobian.
pub fn verify_model_list(phi: &GenusOneEquation, gs: &[Transformation]) -> Result<ModelListReport> {
    let bad = bad_primes(&jacobian(phi)?)?;
    let delta = phi.invariants().delta;
    let mut entries = Vec::new();
    for g in gs {
        let (integral, after) = match apply(g, phi) {
            Ok(psi) => (psi.is_integral(), Some(psi.invariants().delta)),
            Err(_) => (false, None),
        };
        let valuations: Vec<ValuationCheck> = bad
            .iter()
            .map(|p| ValuationCheck {
                p: p.clone(),
                before: val_rat(&delta, p),
                after: after.as_ref().map_or(Valuation::Infinity, |d| val_rat(d, p)),
            })
            .collect();
        let ok = integral && after.is_some() && valuations.iter().all(|v| v.before == v.after);
        entries.push(ModelReport { transformation: g.clone(), integral, det: fmt_rat(&g.det()), valuations, ok });
    }
    let all_valid = entries.iter().all(|e| e.ok);
    Ok(ModelListReport {
        bad_primes: bad,
        entries,
        all_valid,
        note: "pairwise inequivalence of the resulting models is not checked",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::fixtures::{e1, e2, example1_transformations, phi3};

    fn m(rows: &[&[i64]]) -> Mat<BigInt> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn discriminants_and_bad_primes() {
        assert_eq!(minimal_discriminant(&e2()).unwrap(), int(185));
        assert!(bad_primes(&e2()).unwrap().is_empty());
        assert_eq!(bad_primes(&e1()).unwrap(), vec![int(5), int(19)]);
    }

    #[test]
    fn worked_example_global_count() {
        let g = global_count(&e1(), 3, &BTreeMap::new()).unwrap();
        assert_eq!(g.total, 12);
        assert_eq!(g.factors.iter().map(|f| f.np).collect::<Vec<_>>(), vec![6, 2]);
        assert_eq!(global_count(&e2(), 2, &BTreeMap::new()).unwrap().total, 1);
    }

    #[test]
    fn snf_examples() {
        let a = m(&[&[25, 0], &[1, 1]]);
        let (v, d, u) = snf_local(&a, &int(5)).unwrap();
        assert_eq!(d, m(&[&[25, 0], &[0, 1]]));
        assert_eq!(matrix::mul(&matrix::mul(&v, &d), &u), a);
        assert_eq!(matrix::det_int(&u).abs(), int(1));
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(snf_local(&id, &int(7)).unwrap(), (id.clone(), id.clone(), id));
        assert_eq!(snf_local(&m(&[&[2, 4], &[6, 8]]), &int(2)), Err(Error::NotPrimitive));
        assert_eq!(snf_local(&m(&[&[1, 2], &[2, 4]]), &int(2)), Err(Error::ZeroDeterminant));
    }

    #[test]
    fn crt_lift_examples() {
        let e12 = m(&[&[1, 1], &[0, 1]]);
        let id = m(&[&[1, 0], &[0, 1]]);
        let u = crt_sl_lift(&[(e12.clone(), int(5), 2), (id.clone(), int(19), 1)]).unwrap();
        assert_eq!(matrix::det_int(&u), int(1));
        for (t, q) in [(&e12, int(25)), (&id, int(19))] {
            for i in 0..2 {
                for j in 0..2 {
                    assert!(modp(&(&u[i][j] - &t[i][j]), &q).is_zero());
                }
            }
        }
        let bad = m(&[&[2, 0], &[0, 1]]);
        assert_eq!(crt_sl_lift(&[(bad, int(5), 1)]), Err(Error::NotUnimodular(int(5))));
        assert_eq!(crt_sl_lift(&[(id.clone(), int(5), 1), (id, int(5), 2)]), Err(Error::RepeatedPrime));
    }

    #[test]
    fn example_one_list_is_valid() {
        let r = verify_model_list(&phi3(), &example1_transformations()).unwrap();
        assert!(r.all_valid);
        assert_eq!(r.entries.len(), 12);
        let scale = Transformation::deg3_diag(BigRat::from(int(5)), [1, 1, 1].map(|x| BigRat::from(int(x))));
        assert!(!verify_model_list(&phi3(), &[scale]).unwrap().all_valid);
    }
}
