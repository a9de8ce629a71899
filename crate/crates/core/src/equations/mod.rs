//! Genus one equations of degrees 1 to 4 and the groups acting on them.
//!
//! Coefficient orders:
//! - degree 1: `(a1, a2, a3, a4, a6)` for `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`;
//! - degree 2: `(α0, α1, α2; a, b, c, d, e)` for `y^2 + g(x,z) y = f(x,z)`;
//! - degree 3: `(a, b, c, a2, a3, b1, b3, c1, c2, m)`, the coefficients of
//!   `x^3, y^3, z^3, x^2y, x^2z, xy^2, y^2z, xz^2, yz^2, xyz`;
//! - degree 4: two quadrics, each in the order `x1^2, x1x2, x1x3, x1x4,
//!   x2^2, x2x3, x2x4, x3^2, x3x4, x4^2`.

mod cubic_polys;
pub mod forms;
pub mod invariants;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{fmt_rat, is_integer, parse_rat, rat, BigRat};
use crate::error::{Error, Result};
use crate::matrix::{self, Mat};
use forms::{binary_add, binary_mul, binary_scale, binary_subst, Form};
pub use invariants::{invariants, Invariants};

pub fn coefficient_count(degree: u8) -> Option<usize> {
    match degree {
        1 => Some(5),
        2 => Some(8),
        3 => Some(10),
        4 => Some(20),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenusOneEquation {
    degree: u8,
    coeffs: Vec<BigRat>,
}

impl GenusOneEquation {
    pub fn new(degree: u8, coeffs: Vec<BigRat>) -> Result<Self> {
        let want = coefficient_count(degree).ok_or_else(|| Error::Malformed(format!("degree {degree}")))?;
        if coeffs.len() != want {
            return Err(Error::Malformed(format!(
                "degree {degree} equation needs {want} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(GenusOneEquation { degree, coeffs })
    }

    pub fn from_ints(degree: u8, coeffs: &[i64]) -> Result<Self> {
        Self::new(degree, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn weierstrass(a: [BigRat; 5]) -> Self {
        GenusOneEquation { degree: 1, coeffs: a.to_vec() }
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(is_integer)
    }

    pub fn invariants(&self) -> Invariants {
        invariants(self)
    }

    fn ternary_form(&self) -> Form {
        let mut f = Form::zero(3);
        for (e, c) in invariants::CUBIC_MONOMIALS.iter().zip(&self.coeffs) {
            f.add_term(e.to_vec(), c.clone());
        }
        f
    }
}

impl fmt::Display for GenusOneEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(fmt_rat).collect();
        write!(f, "deg={}; coeffs=[{}]", self.degree, cs.join(","))
    }
}

fn split_fields(s: &str) -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if ch == ';' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    out.push(cur);
    out.into_iter()
        .filter(|f| !f.trim().is_empty())
        .map(|f| match f.split_once('=') {
            Some((k, v)) => (k.trim().to_string(), v.trim().to_string()),
            None => (String::new(), f.trim().to_string()),
        })
        .collect()
}

fn parse_list(s: &str) -> Result<Vec<BigRat>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..], got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(parse_rat).collect()
}

fn parse_matrix(s: &str) -> Result<Mat<BigRat>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [[..]], got {s:?}")))?;
    let mut rows = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let end = rest.find(']').ok_or_else(|| Error::Parse(format!("unterminated row in {s:?}")))?;
        rows.push(parse_list(&rest[..=end])?);
        rest = rest[end + 1..].trim_start_matches([',', ' ']).trim();
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("matrix is not square: {s:?}")));
    }
    Ok(rows)
}

fn fmt_matrix(m: &Mat<BigRat>) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(fmt_rat).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

impl FromStr for GenusOneEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut degree = None;
        let mut coeffs = None;
        for (k, v) in split_fields(s) {
            match k.as_str() {
                "deg" => {
                    degree = Some(v.parse::<u8>().map_err(|_| Error::Parse(format!("bad degree {v:?}")))?)
                }
                "coeffs" => coeffs = Some(parse_list(&v)?),
                _ => return Err(Error::Parse(format!("unknown field {k:?}"))),
            }
        }
        let degree = degree.ok_or_else(|| Error::Parse("missing deg=".into()))?;
        let coeffs = coeffs.ok_or_else(|| Error::Parse("missing coeffs=".into()))?;
        GenusOneEquation::new(degree, coeffs)
    }
}

#[derive(Serialize, Deserialize)]
struct EquationJson {
    deg: u8,
    coeffs: Vec<String>,
}

impl Serialize for GenusOneEquation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EquationJson { deg: self.degree, coeffs: self.coeffs.iter().map(fmt_rat).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenusOneEquation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = EquationJson::deserialize(d)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| parse_rat(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        GenusOneEquation::new(j.deg, coeffs).map_err(serde::de::Error::custom)
    }
}

/// An element of the group acting on equations of the matching degree.
///
/// - degree 1, `[u; r, s, t]`: `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + t`;
/// - degree 2, `[μ, r, M]`: `g' = μ(g∘M + 2r)`, `f' = μ^2(f∘M - r g∘M - r^2)`;
/// - degree 3, `[μ, M]`: `F'(x) = μ F(x M)`;
/// - degree 4, `[M, N]`: `Q'_i(x) = Σ_j M_ij Q_j(x N)`.
///
/// Here `(x, z) M` and `x M` use row vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transformation {
    Deg1 { u: BigRat, r: BigRat, s: BigRat, t: BigRat },
    Deg2 { mu: BigRat, r: [BigRat; 3], m: Mat<BigRat> },
    Deg3 { mu: BigRat, m: Mat<BigRat> },
    Deg4 { m: Mat<BigRat>, n: Mat<BigRat> },
}

fn is_square(m: &Mat<BigRat>, n: usize) -> bool {
    m.len() == n && m.iter().all(|r| r.len() == n)
}

impl Transformation {
    pub fn identity(degree: u8) -> Self {
        match degree {
            1 => Transformation::Deg1 { u: rat(1), r: rat(0), s: rat(0), t: rat(0) },
            2 => Transformation::Deg2 { mu: rat(1), r: [rat(0), rat(0), rat(0)], m: matrix::identity(2) },
            3 => Transformation::Deg3 { mu: rat(1), m: matrix::identity(3) },
            _ => Transformation::Deg4 { m: matrix::identity(2), n: matrix::identity(4) },
        }
    }

    pub fn deg1(u: BigRat, r: BigRat, s: BigRat, t: BigRat) -> Self {
        Transformation::Deg1 { u, r, s, t }
    }

    /// `[μ, diag(d)]` in degree 3.
    pub fn deg3_diag(mu: BigRat, d: [BigRat; 3]) -> Self {
        Transformation::Deg3 { mu, m: matrix::diag(&d) }
    }

    pub fn degree(&self) -> u8 {
        match self {
            Transformation::Deg1 { .. } => 1,
            Transformation::Deg2 { .. } => 2,
            Transformation::Deg3 { .. } => 3,
            Transformation::Deg4 { .. } => 4,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            Transformation::Deg1 { u, .. } => !u.is_zero(),
            Transformation::Deg2 { mu, m, .. } => !mu.is_zero() && is_square(m, 2),
            Transformation::Deg3 { mu, m } => !mu.is_zero() && is_square(m, 3),
            Transformation::Deg4 { m, n } => is_square(m, 2) && is_square(n, 4),
        };
        if !ok || self.det().is_zero() {
            return Err(Error::Malformed(format!("transformation {self}")));
        }
        Ok(())
    }

    pub fn det(&self) -> BigRat {
        match self {
            Transformation::Deg1 { u, .. } => {
                if u.is_zero() {
                    BigRat::zero()
                } else {
                    u.recip()
                }
            }
            Transformation::Deg2 { mu, m, .. } | Transformation::Deg3 { mu, m } => mu * matrix::det_rat(m),
            Transformation::Deg4 { m, n } => matrix::det_rat(m) * matrix::det_rat(n),
        }
    }

    /// The transformation that acts as `self` followed by `next`.
    pub fn then(&self, next: &Transformation) -> Result<Transformation> {
        use Transformation::*;
        Ok(match (self, next) {
            (Deg1 { u: u1, r: r1, s: s1, t: t1 }, Deg1 { u: u2, r: r2, s: s2, t: t2 }) => {
                let u1sq = u1 * u1;
                Deg1 {
                    u: u1 * u2,
                    r: r1 + &u1sq * r2,
                    s: s1 + u1 * s2,
                    t: t1 + &u1sq * u1 * t2 + s1 * &u1sq * r2,
                }
            }
            (Deg2 { mu: mu1, r: r1, m: m1 }, Deg2 { mu: mu2, r: r2, m: m2 }) => {
                let r1m = binary_subst(r1, m2);
                let r = binary_add(&r1m, &binary_scale(r2, &mu1.recip()));
                Deg2 { mu: mu1 * mu2, r: [r[0].clone(), r[1].clone(), r[2].clone()], m: matrix::mul(m2, m1) }
            }
            (Deg3 { mu: mu1, m: m1 }, Deg3 { mu: mu2, m: m2 }) => Deg3 { mu: mu1 * mu2, m: matrix::mul(m2, m1) },
            (Deg4 { m: m1, n: n1 }, Deg4 { m: m2, n: n2 }) => {
                Deg4 { m: matrix::mul(m2, m1), n: matrix::mul(n2, n1) }
            }
            _ => {
                return Err(Error::DegreeMismatch { transformation: next.degree(), equation: self.degree() })
            }
        })
    }

    pub fn inverse(&self) -> Result<Transformation> {
        self.validate()?;
        use Transformation::*;
        Ok(match self {
            Deg1 { u, r, s, t } => {
                let ui = u.recip();
                Deg1 {
                    u: ui.clone(),
                    r: -(r * &ui * &ui),
                    s: -(s * &ui),
                    t: (r * s - t) * &ui * &ui * &ui,
                }
            }
            Deg2 { mu, r, m } => {
                let mi = matrix::inverse_rat(m).unwrap();
                let r2 = binary_scale(&binary_subst(r, &mi), &(-mu));
                Deg2 { mu: mu.recip(), r: [r2[0].clone(), r2[1].clone(), r2[2].clone()], m: mi }
            }
            Deg3 { mu, m } => Deg3 { mu: mu.recip(), m: matrix::inverse_rat(m).unwrap() },
            Deg4 { m, n } => Deg4 { m: matrix::inverse_rat(m).unwrap(), n: matrix::inverse_rat(n).unwrap() },
        })
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transformation::Deg1 { u, r, s, t } => {
                write!(f, "u={}; r={}; s={}; t={}", fmt_rat(u), fmt_rat(r), fmt_rat(s), fmt_rat(t))
            }
            Transformation::Deg2 { mu, r, m } => write!(
                f,
                "mu={}; r=[{}]; M={}",
                fmt_rat(mu),
                r.iter().map(fmt_rat).collect::<Vec<_>>().join(","),
                fmt_matrix(m)
            ),
            Transformation::Deg3 { mu, m } => write!(f, "mu={}; M={}", fmt_rat(mu), fmt_matrix(m)),
            Transformation::Deg4 { m, n } => write!(f, "M={}; N={}", fmt_matrix(m), fmt_matrix(n)),
        }
    }
}

/// Parses the transformation mini-language, e.g. `u=1; r=0; s=1; t=0`,
/// `mu=1/5; r=[0,0,0]; M=[[5,0],[0,1]]`, `mu=1/5; M=[[5,0,0],[0,1,0],[0,0,1]]`
/// or `M=[[1,0],[0,1]]; N=[[...]]`.
impl FromStr for Transformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields = split_fields(s);
        let get = |k: &str| fields.iter().find(|(key, _)| key == k).map(|(_, v)| v.as_str());
        for (k, _) in &fields {
            if !["u", "r", "s", "t", "mu", "M", "N"].contains(&k.as_str()) {
                return Err(Error::Parse(format!("unknown field {k:?}")));
            }
        }
        let g = if let Some(u) = get("u") {
            let scalar = |k: &str| get(k).map(parse_rat).unwrap_or_else(|| Ok(rat(0)));
            Transformation::Deg1 { u: parse_rat(u)?, r: scalar("r")?, s: scalar("s")?, t: scalar("t")? }
        } else if let Some(n) = get("N") {
            let m = get("M").ok_or_else(|| Error::Parse("missing M=".into()))?;
            Transformation::Deg4 { m: parse_matrix(m)?, n: parse_matrix(n)? }
        } else {
            let mu = parse_rat(get("mu").ok_or_else(|| Error::Parse("missing mu=".into()))?)?;
            let m = parse_matrix(get("M").ok_or_else(|| Error::Parse("missing M=".into()))?)?;
            match m.len() {
                2 => {
                    let r = match get("r") {
                        Some(v) => parse_list(v)?,
                        None => vec![rat(0); 3],
                    };
                    if r.len() != 3 {
                        return Err(Error::Parse("r must have 3 entries".into()));
                    }
                    Transformation::Deg2 { mu, r: [r[0].clone(), r[1].clone(), r[2].clone()], m }
                }
                3 => Transformation::Deg3 { mu, m },
                k => return Err(Error::Parse(format!("M has unsupported size {k}"))),
            }
        };
        g.validate()?;
        Ok(g)
    }
}

impl Serialize for Transformation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn det_transformation(g: &Transformation) -> BigRat {
    g.det()
}

/// `φ ∘ g`, computed exactly.
pub fn apply(g: &Transformation, phi: &GenusOneEquation) -> Result<GenusOneEquation> {
    if g.degree() != phi.degree {
        return Err(Error::DegreeMismatch { transformation: g.degree(), equation: phi.degree });
    }
    g.validate()?;
    let co = &phi.coeffs;
    let out = match g {
        Transformation::Deg1 { u, r, s, t } => {
            let (a1, a2, a3, a4, a6) = (&co[0], &co[1], &co[2], &co[3], &co[4]);
            let n1 = a1 + rat(2) * s;
            let n2 = a2 - s * a1 + rat(3) * r - s * s;
            let n3 = a3 + r * a1 + rat(2) * t;
            let n4 = a4 - s * a3 + rat(2) * r * a2 - (t + r * s) * a1 + rat(3) * r * r - rat(2) * s * t;
            let n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
            let u2 = u * u;
            let u3 = &u2 * u;
            vec![n1 / u, n2 / &u2, n3 / &u3, n4 / (&u2 * &u2), n6 / (&u3 * &u3)]
        }
        Transformation::Deg2 { mu, r, m } => {
            let gm = binary_subst(&co[0..3], m);
            let fm = binary_subst(&co[3..8], m);
            let g_new = binary_scale(&binary_add(&gm, &binary_scale(r, &rat(2))), mu);
            let rg = binary_mul(r, &gm);
            let rr = binary_mul(r, r);
            let f_new: Vec<BigRat> = (0..5).map(|k| (&fm[k] - &rg[k] - &rr[k]) * mu * mu).collect();
            g_new.into_iter().chain(f_new).collect()
        }
        Transformation::Deg3 { mu, m } => {
            let f = phi.ternary_form().subst(m);
            invariants::CUBIC_MONOMIALS.iter().map(|e| f.coeff(e) * mu).collect()
        }
        Transformation::Deg4 { m, n } => {
            let a = [invariants::gram(&co[0..10]), invariants::gram(&co[10..20])];
            let nt = matrix::transpose(n);
            let moved: Vec<Mat<BigRat>> = a.iter().map(|ai| matrix::mul(&matrix::mul(n, ai), &nt)).collect();
            let mut out = Vec::with_capacity(20);
            for row in m.iter() {
                let mut acc = vec![vec![BigRat::zero(); 4]; 4];
                for (c, ai) in row.iter().zip(&moved) {
                    for i in 0..4 {
                        for j in 0..4 {
                            acc[i][j] += c * &ai[i][j];
                        }
                    }
                }
                out.extend(invariants::quadric_from_gram(&acc));
            }
            out
        }
    };
    GenusOneEquation::new(phi.degree, out)
}

pub fn is_integral(phi: &GenusOneEquation) -> bool {
    phi.is_integral()
}

/// A Weierstrass model of the Jacobian: `φ` itself in degree 1, otherwise
/// `y^2 = x^3 - 27 c4 x - 54 c6`, whose invariants are `6^4 c4` and `6^6 c6`.
pub fn jacobian(phi: &GenusOneEquation) -> Result<GenusOneEquation> {
    let inv = invariants(phi);
    if inv.delta.is_zero() {
        return Err(Error::Singular);
    }
    if phi.degree == 1 {
        return Ok(phi.clone());
    }
    Ok(GenusOneEquation::weierstrass([
        rat(0),
        rat(0),
        rat(0),
        -(inv.c4 * rat(27)),
        -(inv.c6 * rat(54)),
    ]))
}
