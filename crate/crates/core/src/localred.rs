//! Tate's algorithm at a rational prime, together with the image of a
//! rational point in the component group.
//!
//! The algorithm follows the usual sequence of coordinate changes (Cremona's
//! formulation, valid at every prime including 2 and 3). A supplied point is
//! pushed through the same changes and its component is read off at the step
//! that decides the Kodaira type.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith::{
    self, hensel_lift, inv_mod, is_prime, modp, rat, rat_mod, repeated_root_mod_p, roots_mod_p, val_int, val_rat,
    BigRat, Valuation,
};
use crate::equations::invariants::{b_invariants, weierstrass_c4_c6};
use crate::equations::{apply, jacobian, GenusOneEquation, Transformation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    I(u32),
    Istar(u32),
    II,
    III,
    IV,
    IVstar,
    IIIstar,
    IIstar,
}

impl KodairaType {
    /// The component group over an algebraically closed residue field.
    pub fn phi_group(self) -> PhiGroup {
        match self {
            KodairaType::I(n) => PhiGroup::Cyclic(n.max(1)),
            KodairaType::Istar(n) if n % 2 == 0 => PhiGroup::Klein,
            KodairaType::Istar(_) => PhiGroup::Cyclic(4),
            KodairaType::II | KodairaType::IIstar => PhiGroup::Cyclic(1),
            KodairaType::III | KodairaType::IIIstar => PhiGroup::Cyclic(2),
            KodairaType::IV | KodairaType::IVstar => PhiGroup::Cyclic(3),
        }
    }

    /// `ν(Δ_min)` forced by the type when the residue characteristic is at
    /// least 5.
    pub fn tame_valuation(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::Istar(n) => 6 + n,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVstar => 8,
            KodairaType::IIIstar => 9,
            KodairaType::IIstar => 10,
        }
    }

    pub fn is_additive(self) -> bool {
        !matches!(self, KodairaType::I(_))
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::Istar(n) => write!(f, "I{n}*"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IVstar => write!(f, "IV*"),
            KodairaType::IIIstar => write!(f, "III*"),
            KodairaType::IIstar => write!(f, "II*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let named = match t {
            "II" => Some(KodairaType::II),
            "III" => Some(KodairaType::III),
            "IV" => Some(KodairaType::IV),
            "IV*" => Some(KodairaType::IVstar),
            "III*" => Some(KodairaType::IIIstar),
            "II*" => Some(KodairaType::IIstar),
            _ => None,
        };
        if let Some(k) = named {
            return Ok(k);
        }
        let bad = || Error::Parse(format!("bad Kodaira symbol {s:?}"));
        let rest = t.strip_prefix('I').ok_or_else(bad)?;
        let (digits, star) = match rest.strip_suffix('*') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let n: u32 = digits.parse().map_err(|_| bad())?;
        Ok(if star { KodairaType::Istar(n) } else { KodairaType::I(n) })
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiGroup {
    Cyclic(u32),
    Klein,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhiElement {
    Cyclic(u32),
    Klein(u8, u8),
}

impl PhiGroup {
    pub fn order(self) -> u32 {
        match self {
            PhiGroup::Cyclic(n) => n,
            PhiGroup::Klein => 4,
        }
    }

    pub fn identity(self) -> PhiElement {
        match self {
            PhiGroup::Cyclic(_) => PhiElement::Cyclic(0),
            PhiGroup::Klein => PhiElement::Klein(0, 0),
        }
    }

    pub fn elements(self) -> Vec<PhiElement> {
        match self {
            PhiGroup::Cyclic(n) => (0..n).map(PhiElement::Cyclic).collect(),
            PhiGroup::Klein => vec![
                PhiElement::Klein(0, 0),
                PhiElement::Klein(0, 1),
                PhiElement::Klein(1, 0),
                PhiElement::Klein(1, 1),
            ],
        }
    }

    pub fn contains(self, e: PhiElement) -> bool {
        match (self, e) {
            (PhiGroup::Cyclic(n), PhiElement::Cyclic(i)) => i < n,
            (PhiGroup::Klein, PhiElement::Klein(a, b)) => a < 2 && b < 2,
            _ => false,
        }
    }

    pub fn add(self, x: PhiElement, y: PhiElement) -> PhiElement {
        match (self, x, y) {
            (PhiGroup::Cyclic(n), PhiElement::Cyclic(i), PhiElement::Cyclic(j)) => PhiElement::Cyclic((i + j) % n),
            (PhiGroup::Klein, PhiElement::Klein(a, b), PhiElement::Klein(c, d)) => PhiElement::Klein(a ^ c, b ^ d),
            _ => panic!("element outside {self:?}"),
        }
    }

    pub fn neg(self, x: PhiElement) -> PhiElement {
        match (self, x) {
            (PhiGroup::Cyclic(n), PhiElement::Cyclic(i)) => PhiElement::Cyclic((n - i) % n),
            (PhiGroup::Klein, k @ PhiElement::Klein(..)) => k,
            _ => panic!("element outside {self:?}"),
        }
    }

    /// Parses `"i"` for cyclic groups (reduced modulo the order) and `"a,b"`
    /// for the Klein group.
    pub fn parse_element(self, s: &str) -> Result<PhiElement> {
        let bad = || Error::PsiNotInGroup(s.trim().to_string());
        match self {
            PhiGroup::Cyclic(n) => {
                let i: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(PhiElement::Cyclic(i.rem_euclid(n as i64) as u32))
            }
            PhiGroup::Klein => {
                let (a, b) = s.split_once(',').ok_or_else(bad)?;
                let a: u8 = a.trim().parse().map_err(|_| bad())?;
                let b: u8 = b.trim().parse().map_err(|_| bad())?;
                let e = PhiElement::Klein(a, b);
                if self.contains(e) {
                    Ok(e)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl Serialize for PhiGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(1))?;
        match self {
            PhiGroup::Cyclic(n) => m.serialize_entry("cyclic", n)?,
            PhiGroup::Klein => m.serialize_entry("klein", &true)?,
        }
        m.end()
    }
}

impl fmt::Display for PhiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiElement::Cyclic(i) => write!(f, "{i}"),
            PhiElement::Klein(a, b) => write!(f, "{a},{b}"),
        }
    }
}

impl Serialize for PhiElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionData {
    pub kodaira: KodairaType,
    pub cp: u32,
    #[serde(rename = "vDeltaMin")]
    pub v_delta_min: u32,
    pub phi: PhiGroup,
    /// True when Frobenius acts trivially on the components, i.e. `c_p = |Φ|`.
    pub split: bool,
    #[serde(rename = "minimalModel")]
    pub minimal_model: GenusOneEquation,
    #[serde(rename = "toMinimal")]
    pub to_minimal: Transformation,
}

/// A point of `E(Q)`: `None` is the point at infinity.
pub type Point = Option<(BigRat, BigRat)>;

pub fn parse_point(s: &str) -> Result<Point> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("inf") {
        return Ok(None);
    }
    let (x, y) = t.split_once(',').ok_or_else(|| Error::Parse(format!("bad point {s:?}")))?;
    Ok(Some((arith::parse_rat(x)?, arith::parse_rat(y)?)))
}

pub fn on_curve(a: &[BigRat], x: &BigRat, y: &BigRat) -> bool {
    let lhs = y * y + &a[0] * x * y + &a[2] * y;
    let rhs = x * x * x + &a[1] * x * x + &a[3] * x + &a[4];
    lhs == rhs
}

/// Chord-and-tangent addition on `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
pub fn add_points(a: &[BigRat], p1: &Point, p2: &Point) -> Point {
    let (x1, y1) = match p1 {
        None => return p2.clone(),
        Some(p) => p,
    };
    let (x2, y2) = match p2 {
        None => return p1.clone(),
        Some(p) => p,
    };
    let (lambda, mu) = if x1 != x2 {
        let dx = x2 - x1;
        ((y2 - y1) / &dx, (y1 * x2 - y2 * x1) / &dx)
    } else {
        let den = rat(2) * y1 + &a[0] * x1 + &a[2];
        if den.is_zero() {
            return None;
        }
        if y1 + y2 + &a[0] * x2 + &a[2] == rat(0) && y1 != y2 {
            return None;
        }
        let num = rat(3) * x1 * x1 + rat(2) * &a[1] * x1 + &a[3] - &a[0] * y1;
        let lambda = num / &den;
        let mu = y1 - &lambda * x1;
        (lambda, mu)
    };
    let x3 = &lambda * &lambda + &a[0] * &lambda - &a[1] - x1 - x2;
    let y3 = -(&lambda + &a[0]) * &x3 - mu - &a[2];
    Some((x3, y3))
}

pub fn neg_point(a: &[BigRat], p: &Point) -> Point {
    p.as_ref().map(|(x, y)| (x.clone(), -y - &a[0] * x - &a[2]))
}

/// Working state: integral coefficients, the accumulated transformation and
/// the tracked point, all kept in step.
struct State {
    p: BigInt,
    a: [BigInt; 5],
    total: Transformation,
    point: Point,
}

impl State {
    fn ord(&self, n: &BigInt) -> Valuation {
        val_int(n, &self.p)
    }

    /// Divisible by `p^k`.
    fn div(&self, n: &BigInt, k: i64) -> bool {
        self.ord(n).at_least(k)
    }

    fn pk(&self, k: u32) -> BigInt {
        self.p.pow(k)
    }

    fn change(&mut self, u: BigRat, r: BigInt, s: BigInt, t: BigInt) {
        let g = Transformation::deg1(u.clone(), BigRat::from(r.clone()), BigRat::from(s.clone()), BigRat::from(t.clone()));
        let cur = GenusOneEquation::weierstrass(self.a.clone().map(BigRat::from));
        let next = apply(&g, &cur).expect("valid degree-1 transformation");
        for (ai, c) in self.a.iter_mut().zip(next.coeffs()) {
            debug_assert!(c.is_integer());
            *ai = c.to_integer();
        }
        if let Some((x, y)) = &self.point {
            let (r, s, t) = (BigRat::from(r), BigRat::from(s), BigRat::from(t));
            let u2 = &u * &u;
            let xn = (x - &r) / &u2;
            let yn = (y - &s * (x - &r) - t) / (u2 * &u);
            self.point = Some((xn, yn));
        }
        self.total = self.total.then(&g).expect("same degree");
    }

    fn shift(&mut self, r: BigInt, s: BigInt, t: BigInt) {
        self.change(rat(1), r, s, t);
    }

    fn bs(&self) -> [BigInt; 4] {
        let q = self.a.clone().map(BigRat::from);
        b_invariants(&q).map(|b| b.to_integer())
    }

    fn c4_c6(&self) -> (BigInt, BigInt) {
        let q = self.a.clone().map(BigRat::from);
        let (c4, c6) = weierstrass_c4_c6(&q);
        (c4.to_integer(), c6.to_integer())
    }

    fn delta(&self) -> BigInt {
        let (c4, c6) = self.c4_c6();
        (&c4 * &c4 * &c4 - &c6 * &c6) / BigInt::from(1728)
    }

    /// Residue of `x / p^i` and `y / p^j` modulo p, when the point is present
    /// and both quotients are p-integral.
    fn point_residue(&self, i: u32, j: u32) -> Option<(BigInt, BigInt)> {
        let (x, y) = self.point.as_ref()?;
        let xs = x / BigRat::from(self.pk(i));
        let ys = y / BigRat::from(self.pk(j));
        if val_rat(&xs, &self.p) < Valuation::Finite(0) || val_rat(&ys, &self.p) < Valuation::Finite(0) {
            return None;
        }
        Some((rat_mod(&xs, &self.p)?, rat_mod(&ys, &self.p)?))
    }

    /// Whether the tracked point reduces to `(0, 0)` modulo p.
    fn point_at_origin(&self) -> bool {
        self.point_residue(0, 0).is_some_and(|(x, y)| x.is_zero() && y.is_zero())
    }

    fn point_x_residue(&self, i: u32) -> Option<BigInt> {
        let (x, _) = self.point.as_ref()?;
        let xs = x / BigRat::from(self.pk(i));
        rat_mod(&xs, &self.p)
    }

    fn point_y_residue(&self, j: u32) -> Option<BigInt> {
        let (_, y) = self.point.as_ref()?;
        let ys = y / BigRat::from(self.pk(j));
        rat_mod(&ys, &self.p)
    }
}

/// `a / p^k` as an exact integer.
fn shrink(a: &BigInt, p: &BigInt, k: u32) -> BigInt {
    a / p.pow(k)
}

/// Half of `a` modulo the odd prime `p`, as an integer in `[0, p)`.
fn half(a: &BigInt, p: &BigInt) -> BigInt {
    modp(&(a * (p + 1u32) / 2u32), p)
}

/// Sorted position of `r` among the roots of a separable polynomial.
fn root_index(roots: &[BigInt], r: &BigInt) -> Option<usize> {
    roots.iter().position(|x| x == r)
}

struct Outcome {
    kodaira: KodairaType,
    cp: u32,
    v_delta: u32,
    psi: Option<PhiElement>,
}

/// Runs Tate's algorithm; if a point is given, also returns its component.
pub(crate) fn run(e: &GenusOneEquation, p: &BigInt, point: Point) -> Result<(ReductionData, PhiElement)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if e.degree() != 1 {
        return Err(Error::DegreeMismatch { transformation: 1, equation: e.degree() });
    }
    if e.invariants().delta.is_zero() {
        return Err(Error::Singular);
    }
    if let Some((x, y)) = &point {
        if !on_curve(e.coeffs(), x, y) {
            return Err(Error::NotOnCurve);
        }
    }
    // Clear denominators with [1/L; 0, 0, 0].
    let l = e.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lr = BigRat::from(l.clone());
    let scale = Transformation::deg1(BigRat::new(BigInt::one(), l), rat(0), rat(0), rat(0));
    let scaled = apply(&scale, e)?;
    let mut st = State {
        p: p.clone(),
        a: std::array::from_fn(|i| scaled.coeffs()[i].to_integer()),
        total: scale,
        point: point.map(|(x, y)| (x * &lr * &lr, y * &lr * &lr * &lr)),
    };
    let out = tate_loop(&mut st)?;
    let phi = out.kodaira.phi_group();
    let psi = match (&st.point, out.psi) {
        (Some(_), Some(psi)) => psi,
        _ => phi.identity(),
    };
    let data = ReductionData {
        kodaira: out.kodaira,
        cp: out.cp,
        v_delta_min: out.v_delta,
        phi,
        split: out.cp == phi.order(),
        minimal_model: GenusOneEquation::weierstrass(st.a.clone().map(BigRat::from)),
        to_minimal: st.total,
    };
    Ok((data, psi))
}

fn tate_loop(st: &mut State) -> Result<Outcome> {
    let p = st.p.clone();
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    loop {
        let delta = st.delta();
        let n = match st.ord(&delta) {
            Valuation::Finite(n) => n as u32,
            Valuation::Infinity => return Err(Error::Singular),
        };
        if n == 0 {
            return Ok(Outcome { kodaira: KodairaType::I(0), cp: 1, v_delta: 0, psi: None });
        }
        // Move the singular point of the reduction to (0, 0).
        let [b2, b4, b6, _] = st.bs();
        let (c4, c6) = st.c4_c6();
        let [a1, a2, a3, a4, a6] = st.a.clone();
        let (r, t) = if p == two {
            if st.div(&b2, 1) {
                let r = modp(&a4, &p);
                let t = modp(&(&r * (1 + &a2 + &a4) + &a6), &p);
                (r, t)
            } else {
                let r = modp(&a3, &p);
                let t = modp(&(&r + &a4), &p);
                (r, t)
            }
        } else if p == three {
            let r = if st.div(&b2, 1) { modp(&-&b6, &p) } else { modp(&-(&b2 * &b4), &p) };
            let t = modp(&(&a1 * &r + &a3), &p);
            (r, t)
        } else {
            let inv12 = inv_mod(&BigInt::from(12), &p).unwrap();
            let r = if st.div(&c4, 1) {
                modp(&(-&b2 * &inv12), &p)
            } else {
                let den = inv_mod(&(BigInt::from(12) * &c4), &p).unwrap();
                modp(&(-(&c6 + &b2 * &c4) * den), &p)
            };
            let t = modp(&-half(&(&a1 * &r + &a3), &p), &p);
            (r, t)
        };
        st.shift(r, BigInt::zero(), t);

        if !st.div(&c4, 1) {
            return Ok(multiplicative(st, n));
        }
        let singular = st.point_at_origin();

        // Additive: make p | a1, a2.
        let [a1, a2, ..] = st.a.clone();
        let s = if p == two { modp(&a2, &p) } else { modp(&-half(&a1, &p), &p) };
        st.shift(BigInt::zero(), s, BigInt::zero());

        if !st.div(&st.a[4], 2) {
            return Ok(Outcome { kodaira: KodairaType::II, cp: 1, v_delta: n, psi: Some(PhiElement::Cyclic(0)) });
        }
        let [_, _, b6, b8] = st.bs();
        if !st.div(&b8, 3) {
            let psi = PhiElement::Cyclic(u32::from(singular));
            return Ok(Outcome { kodaira: KodairaType::III, cp: 2, v_delta: n, psi: Some(psi) });
        }
        if !st.div(&b6, 3) {
            let a3t = shrink(&st.a[2], &p, 1);
            let a6t = shrink(&st.a[4], &p, 2);
            let roots = roots_mod_p(&[-a6t, a3t, BigInt::one()], &p);
            let cp = if roots.is_empty() { 1 } else { 3 };
            let psi = if singular {
                let y1 = st.point_y_residue(1).ok_or_else(|| internal("IV point"))?;
                root_index(&roots, &y1).map_or(0, |i| i as u32 + 1)
            } else {
                0
            };
            return Ok(Outcome { kodaira: KodairaType::IV, cp, v_delta: n, psi: Some(PhiElement::Cyclic(psi)) });
        }

        // Make p^2 | a3, a4 and p^3 | a6.
        let t = if p == two {
            BigInt::from(2) * modp(&shrink(&st.a[4], &p, 2), &p)
        } else {
            -(&st.a[2]) * (&p + 1u32) / 2u32
        };
        st.shift(BigInt::zero(), BigInt::zero(), t);

        let a21 = shrink(&st.a[1], &p, 1);
        let a42 = shrink(&st.a[3], &p, 2);
        let a63 = shrink(&st.a[4], &p, 3);
        let cubic = [a63, a42, a21.clone(), BigInt::one()];
        match repeated_root_mod_p(&cubic, &p) {
            None => {
                let roots = roots_mod_p(&cubic, &p);
                let cp = 1 + roots.len() as u32;
                let psi = if singular {
                    let x1 = st.point_x_residue(1).ok_or_else(|| internal("I0* point"))?;
                    let idx = root_index(&roots, &x1);
                    match (cp, idx) {
                        (4, Some(0)) | (2, Some(0)) => PhiElement::Klein(1, 1),
                        (4, Some(1)) => PhiElement::Klein(1, 0),
                        (4, Some(2)) => PhiElement::Klein(0, 1),
                        _ => return Err(internal("I0* point off the rational roots")),
                    }
                } else {
                    PhiElement::Klein(0, 0)
                };
                return Ok(Outcome { kodaira: KodairaType::Istar(0), cp, v_delta: n, psi: Some(psi) });
            }
            Some(root) => {
                st.shift(&root * &p, BigInt::zero(), BigInt::zero());
                if !st.div(&st.a[1], 2) {
                    return istar_chain(st, n, singular);
                }
                // Triple root.
                let a3t = shrink(&st.a[2], &p, 2);
                let a6t = shrink(&st.a[4], &p, 4);
                let quad = [-a6t, a3t, BigInt::one()];
                match repeated_root_mod_p(&quad, &p) {
                    None => {
                        let roots = roots_mod_p(&quad, &p);
                        let cp = if roots.is_empty() { 1 } else { 3 };
                        let psi = if singular {
                            let y2 = st.point_y_residue(2).ok_or_else(|| internal("IV* point"))?;
                            root_index(&roots, &y2).map_or(0, |i| i as u32 + 1)
                        } else {
                            0
                        };
                        return Ok(Outcome {
                            kodaira: KodairaType::IVstar,
                            cp,
                            v_delta: n,
                            psi: Some(PhiElement::Cyclic(psi)),
                        });
                    }
                    Some(y0) => {
                        st.shift(BigInt::zero(), BigInt::zero(), y0 * st.pk(2));
                        if !st.div(&st.a[3], 4) {
                            let psi = PhiElement::Cyclic(u32::from(singular));
                            return Ok(Outcome { kodaira: KodairaType::IIIstar, cp: 2, v_delta: n, psi: Some(psi) });
                        }
                        if !st.div(&st.a[4], 6) {
                            return Ok(Outcome {
                                kodaira: KodairaType::IIstar,
                                cp: 1,
                                v_delta: n,
                                psi: Some(PhiElement::Cyclic(0)),
                            });
                        }
                        // Not minimal: scale down by p and start again.
                        st.change(BigRat::from(p.clone()), BigInt::zero(), BigInt::zero(), BigInt::zero());
                    }
                }
            }
        }
    }
}

fn internal(what: &str) -> Error {
    Error::Internal(format!("component of {what}"))
}

/// The sub-loop for `I_n^*`, `n >= 1`, run after the double root of the
/// cubic has been moved to 0.
fn istar_chain(st: &mut State, v_delta: u32, singular: bool) -> Result<Outcome> {
    let p = st.p.clone();
    let a21 = shrink(&st.a[1], &p, 1);
    // The simple root of the cubic is -a_{2,1}: that is the near component.
    let mut near = false;
    if singular {
        let x1 = st.point_x_residue(1).ok_or_else(|| internal("I_n* point"))?;
        near = x1 == modp(&-&a21, &p);
    }
    let (mut ix, mut iy) = (2u32, 2u32);
    loop {
        // Y^2 + a3/p^iy Y - a6/p^(ix+iy).
        let a3t = shrink(&st.a[2], &p, iy);
        let a6t = shrink(&st.a[4], &p, ix + iy);
        let quad = [-a6t, a3t, BigInt::one()];
        if let Some(y0) = repeated_root_mod_p(&quad, &p) {
            st.shift(BigInt::zero(), BigInt::zero(), y0 * st.pk(iy));
            iy += 1;
        } else {
            let roots = roots_mod_p(&quad, &p);
            let y = if singular && !near { st.point_y_residue(iy) } else { None };
            return Ok(finish_istar(ix + iy - 3, v_delta, roots, y, singular, near));
        }
        // a2/p X^2 + a4/p^(ix+1) X + a6/p^(ix+iy).
        let a2t = shrink(&st.a[1], &p, 1);
        let a4t = shrink(&st.a[3], &p, ix + 1);
        let a6t = shrink(&st.a[4], &p, ix + iy);
        let quad = [a6t, a4t, a2t];
        if let Some(x0) = repeated_root_mod_p(&quad, &p) {
            st.shift(x0 * st.pk(ix), BigInt::zero(), BigInt::zero());
            ix += 1;
        } else {
            let roots = roots_mod_p(&quad, &p);
            let x = if singular && !near { st.point_x_residue(ix) } else { None };
            return Ok(finish_istar(ix + iy - 3, v_delta, roots, x, singular, near));
        }
    }
}

fn finish_istar(
    m: u32,
    v_delta: u32,
    roots: Vec<BigInt>,
    coord: Option<BigInt>,
    singular: bool,
    near: bool,
) -> Outcome {
    let cp = if roots.is_empty() { 2 } else { 4 };
    let odd = m % 2 == 1;
    let psi = if !singular {
        if odd { PhiElement::Cyclic(0) } else { PhiElement::Klein(0, 0) }
    } else if near {
        if odd { PhiElement::Cyclic(2) } else { PhiElement::Klein(1, 1) }
    } else {
        let idx = coord.and_then(|c| root_index(&roots, &c));
        match (odd, idx) {
            (true, Some(0)) => PhiElement::Cyclic(1),
            (true, Some(_)) => PhiElement::Cyclic(3),
            (false, Some(0)) => PhiElement::Klein(1, 0),
            (false, Some(_)) => PhiElement::Klein(0, 1),
            // No rational far component: the point cannot land there.
            (true, None) => PhiElement::Cyclic(0),
            (false, None) => PhiElement::Klein(0, 0),
        }
    };
    Outcome { kodaira: KodairaType::Istar(m), cp, v_delta, psi: Some(psi) }
}

fn multiplicative(st: &State, n: u32) -> Outcome {
    let p = &st.p;
    let [a1, a2, ..] = &st.a;
    let split = !roots_mod_p(&[-a2.clone(), a1.clone(), BigInt::one()], p).is_empty();
    let cp = if split { n } else if n % 2 == 0 { 2 } else { 1 };
    let psi = if !st.point_at_origin() || n == 1 {
        0
    } else if !split {
        if n % 2 == 0 { n / 2 } else { 0 }
    } else {
        split_component(st, n)
    };
    Outcome { kodaira: KodairaType::I(n), cp, v_delta: n, psi: Some(PhiElement::Cyclic(psi)) }
}

/// Component index of a point reducing to the node of a split `I_n` model.
///
/// The node is lifted p-adically to a solution of `F_x = F_y = 0` and moved
/// to the origin; there the curve reads `(y - αx)(y - βx) = x^3 + a6 + ...`
/// with `ν(a6) = n`. A point with `a = ν(x) < n/2` hugs exactly one branch,
/// and the branch decides between components `a` and `n - a`.
fn split_component(st: &State, n: u32) -> u32 {
    let p = &st.p;
    let k = 2 * n + 2;
    let m = p.pow(k);
    let [a1, a2, a3, a4, _] = &st.a;
    let (mut x0, mut y0) = (BigInt::zero(), BigInt::zero());
    for _ in 0..(2 * k + 8) {
        let fx = a1 * &y0 - 3 * &x0 * &x0 - 2 * a2 * &x0 - a4;
        let fy = 2 * &y0 + a1 * &x0 + a3;
        if modp(&fx, &m).is_zero() && modp(&fy, &m).is_zero() {
            break;
        }
        let fxx = -6 * &x0 - 2 * a2;
        let fxy = a1.clone();
        let fyy = BigInt::from(2);
        let det = &fxx * &fyy - &fxy * &fxy;
        let di = inv_mod(&det, &m).expect("node with nondegenerate Hessian");
        let dx = modp(&((&fyy * &fx - &fxy * &fy) * &di), &m);
        let dy = modp(&((&fxx * &fy - &fxy * &fx) * &di), &m);
        x0 = modp(&(x0 - dx), &m);
        y0 = modp(&(y0 - dy), &m);
    }
    let (x, y) = st.point.as_ref().expect("point present");
    let xs = x - BigRat::from(x0);
    let ys = y - BigRat::from(y0);
    let cap = |v: Valuation| v.finite().map_or(k as i64, |v| v.min(k as i64));
    let a = cap(val_rat(&xs, p));
    let quad = [-a2.clone(), a1.clone(), BigInt::one()];
    let roots = roots_mod_p(&quad, p);
    let alpha = hensel_lift(&quad, &roots[0], p, k);
    let beta = hensel_lift(&quad, &roots[1], p, k);
    let off_alpha = cap(val_rat(&(&ys - BigRat::from(alpha) * &xs), p));
    let off_beta = cap(val_rat(&(&ys - BigRat::from(beta) * &xs), p));
    let a = a.clamp(0, n as i64) as u32;
    if 2 * a >= n {
        n / 2
    } else if off_alpha > a as i64 {
        a
    } else if off_beta > a as i64 {
        n - a
    } else {
        n / 2
    }
}

pub fn tate(e: &GenusOneEquation, p: &BigInt) -> Result<ReductionData> {
    run(e, p, None).map(|(d, _)| d)
}

/// Image of `P` in the component group `Φ` of the minimal model at p.
pub fn component_of_point(e: &GenusOneEquation, p: &BigInt, point: &Point) -> Result<PhiElement> {
    run(e, p, point.clone()).map(|(_, psi)| psi)
}

/// Whether `ν_p(Δ_φ)` equals the minimal discriminant valuation of the
/// Jacobian.
pub fn is_minimal_at(phi: &GenusOneEquation, p: &BigInt) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if phi.coeffs().iter().any(|c| val_rat(c, p) < Valuation::Finite(0)) {
        return Err(Error::NotIntegral(p.clone()));
    }
    let delta = phi.invariants().delta;
    let v = match val_rat(&delta, p) {
        Valuation::Finite(v) => v,
        Valuation::Infinity => return Err(Error::Singular),
    };
    let data = tate(&jacobian(phi)?, p)?;
    Ok(v == data.v_delta_min as i64)
}

/// `ν_p` of a nonzero rational as a plain integer; zero counts as `i64::MAX`.
pub fn ord_p(q: &BigRat, p: &BigInt) -> i64 {
    val_rat(q, p).finite().unwrap_or(i64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::fixtures::{e1, e2};

    #[test]
    fn kodaira_text_round_trip() {
        for s in ["I0", "I7", "I0*", "I3*", "II", "III", "IV", "IV*", "III*", "II*"] {
            assert_eq!(s.parse::<KodairaType>().unwrap().to_string(), s);
        }
        assert!("I".parse::<KodairaType>().is_err());
        assert!("V".parse::<KodairaType>().is_err());
    }

    #[test]
    fn worked_examples() {
        let d = tate(&e1(), &int(5)).unwrap();
        assert_eq!((d.kodaira, d.cp, d.v_delta_min), (KodairaType::IIIstar, 2, 9));
        let d = tate(&e1(), &int(19)).unwrap();
        assert_eq!((d.kodaira, d.cp, d.v_delta_min), (KodairaType::I(2), 2, 2));
        let d = tate(&e2(), &int(7)).unwrap();
        assert_eq!((d.kodaira, d.cp, d.v_delta_min), (KodairaType::I(0), 1, 0));
    }

    #[test]
    fn to_minimal_maps_input_to_minimal_model() {
        let e = GenusOneEquation::from_ints(1, &[0, 0, 0, -5i64.pow(4) * 7, 5i64.pow(6) * 11]).unwrap();
        let d = tate(&e, &int(5)).unwrap();
        assert_eq!(apply(&d.to_minimal, &e).unwrap(), d.minimal_model);
        assert!(d.v_delta_min < ord_p(&e.invariants().delta, &int(5)) as u32);
    }

    #[test]
    fn rejects_non_primes_and_points_off_the_curve() {
        assert_eq!(tate(&e1(), &int(15)), Err(Error::NotPrime(int(15))));
        let off = Some((rat(0), rat(0)));
        assert_eq!(component_of_point(&e1(), &int(5), &off), Err(Error::NotOnCurve));
    }

    #[test]
    fn two_torsion_on_i0_star_is_not_identity() {
        for p in [5i64, 7, 11] {
            let e = GenusOneEquation::from_ints(1, &[0, 0, 0, -p * p, 0]).unwrap();
            let d = tate(&e, &int(p)).unwrap();
            assert_eq!((d.kodaira, d.cp), (KodairaType::Istar(0), 4));
            let psi = component_of_point(&e, &int(p), &Some((rat(0), rat(0)))).unwrap();
            assert_ne!(psi, PhiElement::Klein(0, 0));
            assert_eq!(component_of_point(&e, &int(p), &None).unwrap(), PhiElement::Klein(0, 0));
        }
    }

    #[test]
    fn minimality_of_scaled_equations() {
        let phi = crate::fixtures::phi3();
        assert!(is_minimal_at(&phi, &int(5)).unwrap());
        assert!(is_minimal_at(&phi, &int(19)).unwrap());
        let g = Transformation::deg3_diag(rat(5), [rat(1), rat(1), rat(1)]);
        let scaled = apply(&g, &phi).unwrap();
        assert!(!is_minimal_at(&scaled, &int(5)).unwrap());
        let half = GenusOneEquation::from_ints(1, &[0, 0, 0, 1, 0]).unwrap();
        let frac = apply(&Transformation::deg1(rat(5), rat(0), rat(0), rat(0)), &half).unwrap();
        assert_eq!(is_minimal_at(&frac, &int(5)), Err(Error::NotIntegral(int(5))));
    }
}
