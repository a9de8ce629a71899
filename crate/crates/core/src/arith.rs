//! Exact integer and rational helpers: p-adic valuations, primality,
//! factorization and a little arithmetic over prime fields.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type BigRat = BigRational;

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

/// A p-adic valuation. `Infinity` is only produced for zero and is kept
/// apart from the finite values so it can never leak into arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinity
    }

    /// True when the valuation is at least `k` (always true for zero).
    pub fn at_least(self, k: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinity => true,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "Infinity"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinity => s.serialize_str("Infinity"),
        }
    }
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

const SMALL_PRIMES: [u32; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// Miller-Rabin with the first twenty prime bases. Deterministic below
/// 3.3 * 10^24, which covers every modulus this crate meets in practice.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &q in SMALL_PRIMES.iter() {
        let q = BigInt::from(q);
        if n == &q {
            return true;
        }
        if (n % &q).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for &a in SMALL_PRIMES.iter() {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn check_prime(p: &BigInt) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.clone()))
    }
}

/// Valuation of an integer at `p`, without checking that `p` is prime.
pub fn val_int(n: &BigInt, p: &BigInt) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let mut m = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            break;
        }
        m = q;
        v += 1;
    }
    Valuation::Finite(v)
}

/// Valuation of a rational at `p`, without checking that `p` is prime.
pub fn val_rat(q: &BigRat, p: &BigInt) -> Valuation {
    match val_int(q.numer(), p) {
        Valuation::Infinity => Valuation::Infinity,
        Valuation::Finite(a) => {
            let b = val_int(q.denom(), p).finite().unwrap_or(0);
            Valuation::Finite(a - b)
        }
    }
}

pub fn padic_valuation(q: &BigRat, p: &BigInt) -> Result<Valuation> {
    check_prime(p)?;
    Ok(val_rat(q, p))
}

pub fn factor(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    factor_with_bound(n, DEFAULT_TRIAL_BOUND)
}

/// Trial division up to `bound`, then Pollard rho (Brent) on the cofactor.
/// Result is sorted by prime.
pub fn factor_with_bound(n: &BigInt, bound: u64) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::FactorZero);
    }
    let mut m = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut d: u64 = 2;
    while d <= bound {
        let db = BigInt::from(d);
        if &db * &db > m {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&db);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((db, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let mut big = Vec::new();
        split_large(&m, &mut big);
        big.sort();
        for q in big {
            match out.iter_mut().find(|(p, _)| *p == q) {
                Some(entry) => entry.1 += 1,
                None => out.push((q, 1)),
            }
        }
    }
    out.sort();
    Ok(out)
}

fn split_large(n: &BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_prime(n) {
        out.push(n.clone());
        return;
    }
    let d = pollard_brent(n);
    split_large(&d, out);
    split_large(&(n / &d), out);
}

fn pollard_brent(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m: u64 = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1;
    }
}

pub fn parse_int(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

/// Parses `a` or `a/b`.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRat::from_integer(parse_int(s)?)),
        Some((a, b)) => {
            let a = parse_int(a)?;
            let b = parse_int(b)?;
            if b.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRat::new(a, b))
        }
    }
}

pub fn fmt_rat(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_integer(q: &BigRat) -> bool {
    q.denom().is_one()
}

/// Least nonnegative residue.
pub fn modp(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

pub fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Residue of a p-integral rational modulo `m` (a power of p or any modulus
/// coprime to the denominator).
pub fn rat_mod(q: &BigRat, m: &BigInt) -> Option<BigInt> {
    let d = inv_mod(q.denom(), m)?;
    Some((q.numer() * d).mod_floor(m))
}

/// Chinese remainder for pairwise coprime moduli; returns the residue in
/// `[0, prod)`.
pub fn crt(residues: &[(BigInt, BigInt)]) -> BigInt {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (r, mi) in residues {
        let inv = inv_mod(&m, mi).expect("moduli must be coprime");
        let t = ((r - &x) * inv).mod_floor(mi);
        x += &m * t;
        m *= mi;
    }
    x.mod_floor(&m)
}

type Poly = Vec<BigInt>;

fn trim(mut f: Poly) -> Poly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

fn poly_mod(f: &[BigInt], p: &BigInt) -> Poly {
    trim(f.iter().map(|c| c.mod_floor(p)).collect())
}

fn poly_sub(f: &[BigInt], g: &[BigInt], p: &BigInt) -> Poly {
    let n = f.len().max(g.len());
    let z = BigInt::zero();
    let v = (0..n)
        .map(|i| (f.get(i).unwrap_or(&z) - g.get(i).unwrap_or(&z)).mod_floor(p))
        .collect();
    trim(v)
}

fn poly_mul(f: &[BigInt], g: &[BigInt], p: &BigInt) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    poly_mod(&out, p)
}

fn poly_rem(f: &[BigInt], g: &[BigInt], p: &BigInt) -> Poly {
    let mut r = poly_mod(f, p);
    let dg = g.len() - 1;
    let lead_inv = inv_mod(&g[dg], p).expect("nonzero leading coefficient");
    while r.len() > dg {
        let k = r.len() - 1 - dg;
        let c = (r.last().unwrap() * &lead_inv).mod_floor(p);
        for (i, gi) in g.iter().enumerate() {
            r[i + k] = (&r[i + k] - &c * gi).mod_floor(p);
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(f: &[BigInt], g: &[BigInt], p: &BigInt) -> Poly {
    let mut a = poly_mod(f, p);
    let mut b = poly_mod(g, p);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last() {
        let inv = inv_mod(lead, p).unwrap();
        a = a.iter().map(|c| (c * &inv).mod_floor(p)).collect();
    }
    a
}

fn poly_powmod(base: &[BigInt], e: &BigInt, m: &[BigInt], p: &BigInt) -> Poly {
    let mut result: Poly = vec![BigInt::one()];
    let mut b = poly_rem(base, m, p);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            result = poly_rem(&poly_mul(&result, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
    }
    result
}

fn eval_mod(f: &[BigInt], x: &BigInt, p: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = (acc * x + c).mod_floor(p);
    }
    acc
}

const BRUTE_FORCE_LIMIT: u64 = 256;

/// Distinct roots in `F_p` of the polynomial with coefficients `f`
/// (lowest degree first), sorted as residues in `[0, p)`. The zero
/// polynomial is reported as having no roots.
pub fn roots_mod_p(f: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    let f = poly_mod(f, p);
    if f.len() <= 1 {
        return Vec::new();
    }
    if p.to_u64().is_some_and(|q| q <= BRUTE_FORCE_LIMIT) {
        let q = p.to_u64().unwrap();
        return (0..q)
            .map(BigInt::from)
            .filter(|x| eval_mod(&f, x, p).is_zero())
            .collect();
    }
    // g = gcd(f, x^p - x) is the product of the distinct linear factors.
    let x: Poly = vec![BigInt::zero(), BigInt::one()];
    let xp = poly_powmod(&x, p, &f, p);
    let g = poly_gcd(&f, &poly_sub(&xp, &x, p), p);
    let mut roots = Vec::new();
    split_linear(&g, p, &mut roots);
    roots.sort();
    roots
}

fn split_linear(g: &[BigInt], p: &BigInt, out: &mut Vec<BigInt>) {
    let deg = g.len().saturating_sub(1);
    if deg == 0 {
        return;
    }
    if deg == 1 {
        let inv = inv_mod(&g[1], p).unwrap();
        out.push((-&g[0] * inv).mod_floor(p));
        return;
    }
    let e = (p - 1u32) / 2u32;
    let mut a = BigInt::zero();
    loop {
        let base = vec![a.clone(), BigInt::one()];
        let h = poly_powmod(&base, &e, g, p);
        let h1 = poly_sub(&h, &[BigInt::one()], p);
        let d = poly_gcd(g, &h1, p);
        let dd = d.len().saturating_sub(1);
        if dd > 0 && dd < deg {
            let (q, _) = poly_divmod(g, &d, p);
            split_linear(&d, p, out);
            split_linear(&q, p, out);
            return;
        }
        a += 1;
    }
}

fn poly_divmod(f: &[BigInt], g: &[BigInt], p: &BigInt) -> (Poly, Poly) {
    let mut r = poly_mod(f, p);
    let dg = g.len() - 1;
    let lead_inv = inv_mod(&g[dg], p).unwrap();
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(dg).max(1)];
    while r.len() > dg {
        let k = r.len() - 1 - dg;
        let c = (r.last().unwrap() * &lead_inv).mod_floor(p);
        for (i, gi) in g.iter().enumerate() {
            r[i + k] = (&r[i + k] - &c * gi).mod_floor(p);
        }
        q[k] = c;
        r = trim(r);
    }
    (trim(q), r)
}

/// Root of `f` in `F_p` that is also a root of its derivative, if any.
pub fn repeated_root_mod_p(f: &[BigInt], p: &BigInt) -> Option<BigInt> {
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    roots_mod_p(f, p)
        .into_iter()
        .find(|r| eval_mod(&df, r, p).is_zero())
}

/// Lifts a simple root `r0` of `f` modulo p to a root modulo `p^k`.
pub fn hensel_lift(f: &[BigInt], r0: &BigInt, p: &BigInt, k: u32) -> BigInt {
    let pk = p.pow(k);
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let mut r = r0.clone();
    let mut prec = 1;
    while prec < k {
        prec = (prec * 2).min(k);
        let m = p.pow(prec);
        let fr = eval_mod(f, &r, &m);
        let dr = inv_mod(&eval_mod(&df, &r, &m), &m).expect("simple root");
        r = (&r - fr * dr).mod_floor(&m);
    }
    r.mod_floor(&pk)
}

pub fn sign_of(q: &BigRat) -> Sign {
    q.numer().sign()
}
