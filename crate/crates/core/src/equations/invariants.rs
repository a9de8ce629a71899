//! The invariants c4 and c6 of genus one equations of degrees 1 to 4.
//!
//! Degree 1 uses the usual b- and c-invariants. Degree 2 uses I and J of the
//! binary quartic 4f + g^2. Degree 3 uses the Aronhold invariants S and T,
//! defined as epsilon-contractions of the coefficient tensor and evaluated
//! through their expanded polynomials. Degree 4 reduces to the binary
//! quartic det(xA + zB) of the Gram matrices.
//!
//! The scalings were pinned by pushing y^2 = x^3 + Ax + B through a model of
//! each degree and matching the Weierstrass values c4 = -48A, c6 = -864B:
//!
//! | degree | c4            | c6              |
//! |--------|---------------|-----------------|
//! | 2      | I(4f + g^2)   | J(4f + g^2) / 2 |
//! | 3      | 54 S          | -972 T          |
//! | 4      | 2^8 I(G)      | 2^11 J(G)       |

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::cubic_polys::{C4_TERMS, C6_TERMS};
use super::forms::{binary_add, binary_mul, Binary};
use super::GenusOneEquation;
use crate::arith::{rat, BigRat};

pub const DEG3_C4_SCALE: i64 = 54;
pub const DEG3_C6_SCALE: i64 = -972;
pub const DEG4_C4_SCALE: i64 = 256;
pub const DEG4_C6_SCALE: i64 = 2048;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub c4: BigRat,
    pub c6: BigRat,
    pub delta: BigRat,
}

impl Invariants {
    pub fn from_c4_c6(c4: BigRat, c6: BigRat) -> Self {
        let delta = (&c4 * &c4 * &c4 - &c6 * &c6) / rat(1728);
        Invariants { c4, c6, delta }
    }
}

/// `(b2, b4, b6, b8)` of a Weierstrass equation.
pub fn b_invariants(a: &[BigRat]) -> [BigRat; 4] {
    let (a1, a2, a3, a4, a6) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
    let b2 = a1 * a1 + rat(4) * a2;
    let b4 = rat(2) * a4 + a1 * a3;
    let b6 = a3 * a3 + rat(4) * a6;
    let b8 = a1 * a1 * a6 + rat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    [b2, b4, b6, b8]
}

pub fn weierstrass_c4_c6(a: &[BigRat]) -> (BigRat, BigRat) {
    let [b2, b4, b6, _] = b_invariants(a);
    let c4 = &b2 * &b2 - rat(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + rat(36) * &b2 * &b4 - rat(216) * &b6;
    (c4, c6)
}

/// Classical invariants `(I, J)` of `a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4`.
pub fn quartic_ij(q: &[BigRat]) -> (BigRat, BigRat) {
    let (a, b, c, d, e) = (&q[0], &q[1], &q[2], &q[3], &q[4]);
    let i = rat(12) * a * e - rat(3) * b * d + c * c;
    let j = rat(72) * a * c * e + rat(9) * b * c * d
        - rat(27) * a * d * d
        - rat(27) * e * b * b
        - rat(2) * c * c * c;
    (i, j)
}

fn degree2(co: &[BigRat]) -> (BigRat, BigRat) {
    let g: Binary = co[0..3].to_vec();
    let f: Binary = co[3..8].to_vec();
    let h = binary_add(&f.iter().map(|x| x * rat(4)).collect::<Vec<_>>(), &binary_mul(&g, &g));
    let (i, j) = quartic_ij(&h);
    (i, j / rat(2))
}

/// Exponents of the ternary cubic monomials in coefficient order
/// `(a, b, c, a2, a3, b1, b3, c1, c2, m)`.
pub const CUBIC_MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [0, 2, 1],
    [1, 0, 2],
    [0, 1, 2],
    [1, 1, 1],
];

const EPS: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
    ([1, 0, 2], -1),
];

type Tensor = [[[BigInt; 3]; 3]; 3];

/// Integer symmetric tensor equal to `scale` times the coefficient tensor,
/// where `scale = 6 * lcm(denominators)`.
fn cubic_tensor(co: &[BigRat]) -> (Tensor, BigInt) {
    let l = co.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale = &l * BigInt::from(6);
    let mut t: Tensor = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut e = [0u32; 3];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                let idx = CUBIC_MONOMIALS.iter().position(|m| *m == e).unwrap();
                let perms = match e.iter().filter(|&&x| x > 0).count() {
                    1 => 1,
                    2 => 3,
                    _ => 6,
                };
                let c = &co[idx] * BigRat::from_integer(scale.clone()) / rat(perms);
                debug_assert!(c.is_integer());
                t[i][j][k] = c.to_integer();
            }
        }
    }
    (t, scale)
}

/// Aronhold S as the contraction (abc)(abd)(acd)(bcd).
fn aronhold_s(f: &Tensor) -> BigInt {
    let mut x: [[[[BigInt; 3]; 3]; 3]; 3] = Default::default();
    for ([i1, j1, k1], s1) in EPS {
        for ([i2, j2, l2], s2) in EPS {
            let s = BigInt::from(s1 * s2);
            for i3 in 0..3 {
                for j4 in 0..3 {
                    x[k1][l2][i3][j4] += &s * &f[i1][i2][i3] * &f[j1][j2][j4];
                }
            }
        }
    }
    let mut total = BigInt::zero();
    for ([i3, k3, l3], s1) in EPS {
        for ([j4, k4, l4], s2) in EPS {
            let s = BigInt::from(s1 * s2);
            for k1 in 0..3 {
                for l2 in 0..3 {
                    let w = &x[k1][l2][i3][j4];
                    if w.is_zero() {
                        continue;
                    }
                    total += &s * w * &f[k1][k3][k4] * &f[l2][l3][l4];
                }
            }
        }
    }
    total
}

/// Aronhold T as the contraction (abc)(abd)(ace)(bcf)(def)^2.
fn aronhold_t(f: &Tensor) -> BigInt {
    let mut g: Tensor = Default::default();
    for ([l2, m2, n2], s1) in EPS {
        for ([l3, m3, n3], s2) in EPS {
            let s = BigInt::from(s1 * s2);
            for l1 in 0..3 {
                for m1 in 0..3 {
                    for n1 in 0..3 {
                        g[l1][m1][n1] += &s * &f[l1][l2][l3] * &f[m1][m2][m3] * &f[n1][n2][n3];
                    }
                }
            }
        }
    }
    let mut total = BigInt::zero();
    for ([i1, j1, k1], s1) in EPS {
        for ([i2, j2, l1], s2) in EPS {
            for ([i3, k2, m1], s3) in EPS {
                let fa = &f[i1][i2][i3];
                if fa.is_zero() {
                    continue;
                }
                for ([j3, k3, n1], s4) in EPS {
                    let s = s1 * s2 * s3 * s4;
                    total += BigInt::from(s) * fa * &f[j1][j2][j3] * &f[k1][k2][k3] * &g[l1][m1][n1];
                }
            }
        }
    }
    total
}

/// `(S, T)` of a ternary cubic.
pub fn aronhold_st(co: &[BigRat]) -> (BigRat, BigRat) {
    let (t, scale) = cubic_tensor(co);
    let s = BigRat::new(aronhold_s(&t), scale.pow(4));
    let tt = BigRat::new(aronhold_t(&t), scale.pow(6));
    (s, tt)
}

/// Integer coefficients `L co` and the scale `L`, the lcm of the denominators.
fn clear_denominators(co: &[BigRat]) -> (Vec<BigInt>, BigInt) {
    let l = co.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = co.iter().map(|c| (c * BigRat::from_integer(l.clone())).to_integer()).collect();
    (ints, l)
}

fn eval_poly(terms: &[(i64, [u8; 10])], powers: &[Vec<BigInt>]) -> BigInt {
    let mut total = BigInt::zero();
    for (c, e) in terms {
        let mut t = BigInt::from(*c);
        for (k, &x) in e.iter().enumerate() {
            if x > 0 {
                t *= &powers[k][x as usize];
            }
        }
        total += t;
    }
    total
}

/// Evaluates the expanded forms of `54 S` and `-972 T`, homogeneous of
/// degrees 4 and 6; [`aronhold_st`] is the contraction they came from.
fn degree3(co: &[BigRat]) -> (BigRat, BigRat) {
    let (ints, l) = clear_denominators(co);
    let powers: Vec<Vec<BigInt>> = ints
        .iter()
        .map(|c| {
            let mut p = vec![BigInt::one()];
            for _ in 0..6 {
                let next = p.last().unwrap() * c;
                p.push(next);
            }
            p
        })
        .collect();
    (
        BigRat::new(eval_poly(&C4_TERMS, &powers), l.pow(4)),
        BigRat::new(eval_poly(&C6_TERMS, &powers), l.pow(6)),
    )
}

/// Exponents of the quaternary quadric monomials in coefficient order.
pub const QUADRIC_MONOMIALS: [(usize, usize); 10] =
    [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

/// Symmetric Gram matrix `A` with `Q(x) = x A x^T`.
pub fn gram(q: &[BigRat]) -> Vec<Vec<BigRat>> {
    let mut a = vec![vec![BigRat::zero(); 4]; 4];
    for (&(i, j), c) in QUADRIC_MONOMIALS.iter().zip(q) {
        if i == j {
            a[i][i] = c.clone();
        } else {
            let h = c / rat(2);
            a[i][j] = h.clone();
            a[j][i] = h;
        }
    }
    a
}

pub fn quadric_from_gram(a: &[Vec<BigRat>]) -> Vec<BigRat> {
    QUADRIC_MONOMIALS
        .iter()
        .map(|&(i, j)| if i == j { a[i][i].clone() } else { &a[i][j] + &a[j][i] })
        .collect()
}

/// The binary quartic `det(x A + z B)`.
pub fn pencil_quartic(q1: &[BigRat], q2: &[BigRat]) -> Binary {
    let a = gram(q1);
    let b = gram(q2);
    let entry = |i: usize, j: usize| vec![a[i][j].clone(), b[i][j].clone()];
    let mut total = vec![BigRat::zero(); 5];
    let mut perm = [0usize, 1, 2, 3];
    for_each_permutation(&mut perm, 0, &mut |p, sign| {
        let mut t = entry(0, p[0]);
        for (i, &pi) in p.iter().enumerate().skip(1) {
            t = binary_mul(&t, &entry(i, pi));
        }
        let t: Vec<BigRat> = t.into_iter().map(|c| c * rat(sign)).collect();
        total = binary_add(&total, &t);
    });
    total
}

fn for_each_permutation(p: &mut [usize; 4], k: usize, f: &mut dyn FnMut(&[usize; 4], i64)) {
    if k == p.len() {
        let mut sign = 1;
        for i in 0..4 {
            for j in i + 1..4 {
                if p[i] > p[j] {
                    sign = -sign;
                }
            }
        }
        f(p, sign);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        for_each_permutation(p, k + 1, f);
        p.swap(k, i);
    }
}

fn quartic_ij_int(q: &[BigInt]) -> (BigInt, BigInt) {
    let (a, b, c, d, e) = (&q[0], &q[1], &q[2], &q[3], &q[4]);
    let i = 12 * a * e - 3 * b * d + c * c;
    let j = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
    (i, j)
}

/// `det(x A + z B)` for integer matrices.
fn pencil_quartic_int(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut total = vec![BigInt::zero(); 5];
    let mut perm = [0usize, 1, 2, 3];
    for_each_permutation(&mut perm, 0, &mut |p, sign| {
        let mut t = vec![a[0][p[0]].clone(), b[0][p[0]].clone()];
        for (i, &pi) in p.iter().enumerate().skip(1) {
            let (x, z) = (&a[i][pi], &b[i][pi]);
            let mut next = vec![BigInt::zero(); t.len() + 1];
            for (k, c) in t.iter().enumerate() {
                next[k] += c * x;
                next[k + 1] += c * z;
            }
            t = next;
        }
        for (acc, c) in total.iter_mut().zip(t) {
            *acc += c * sign;
        }
    });
    total
}

/// With `L` clearing denominators and doubled Gram matrices, the quartic is
/// `16 L^4 G`, so `I` and `J` pick up `2^8 L^8` and `2^12 L^12`.
fn degree4(co: &[BigRat]) -> (BigRat, BigRat) {
    let (ints, l) = clear_denominators(co);
    let doubled = |q: &[BigInt]| {
        let mut a = vec![vec![BigInt::zero(); 4]; 4];
        for (&(i, j), c) in QUADRIC_MONOMIALS.iter().zip(q) {
            if i == j {
                a[i][i] = 2 * c;
            } else {
                a[i][j] = c.clone();
                a[j][i] = c.clone();
            }
        }
        a
    };
    let g = pencil_quartic_int(&doubled(&ints[0..10]), &doubled(&ints[10..20]));
    let (i, j) = quartic_ij_int(&g);
    debug_assert_eq!(DEG4_C4_SCALE, 256);
    debug_assert_eq!(DEG4_C6_SCALE, 2048);
    (BigRat::new(i, l.pow(8)), BigRat::new(j, 2 * l.pow(12)))
}

pub fn invariants(phi: &GenusOneEquation) -> Invariants {
    let co = phi.coeffs();
    let (c4, c6) = match phi.degree() {
        1 => weierstrass_c4_c6(co),
        2 => degree2(co),
        3 => degree3(co),
        _ => degree4(co),
    };
    Invariants::from_c4_c6(c4, c6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn integer_quadric_invariants_match_the_rational_route() {
        let mut seed = 11i64;
        let mut next = || {
            seed = (seed * 1_103_515_245 + 12_345) % 2_147_483_648;
            seed % 19 - 9
        };
        for _ in 0..40 {
            let co: Vec<BigRat> = (0..20).map(|_| ratio(next(), 1 + next().abs())).collect();
            let (i, j) = quartic_ij(&pencil_quartic(&co[0..10], &co[10..20]));
            assert_eq!(degree4(&co), (i * rat(DEG4_C4_SCALE), j * rat(DEG4_C6_SCALE)));
        }
    }

    #[test]
    fn expanded_cubic_invariants_match_the_contraction() {
        let mut seed = 7i64;
        let mut next = || {
            seed = (seed * 1_103_515_245 + 12_345) % 2_147_483_648;
            seed % 23 - 11
        };
        for _ in 0..40 {
            let co: Vec<BigRat> = (0..10).map(|_| ratio(next(), 1 + next().abs())).collect();
            let (s, t) = aronhold_st(&co);
            assert_eq!(degree3(&co), (s * rat(DEG3_C4_SCALE), t * rat(DEG3_C6_SCALE)));
        }
    }
}
