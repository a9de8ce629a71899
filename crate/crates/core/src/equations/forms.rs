//! Homogeneous polynomials with rational coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::BigRat;

/// Binary form of degree `d` stored as `[x^d, x^(d-1) z, ..., z^d]`.
pub type Binary = Vec<BigRat>;

pub fn binary_mul(f: &[BigRat], g: &[BigRat]) -> Binary {
    let mut out = vec![BigRat::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

pub fn binary_add(f: &[BigRat], g: &[BigRat]) -> Binary {
    assert_eq!(f.len(), g.len());
    f.iter().zip(g).map(|(a, b)| a + b).collect()
}

pub fn binary_scale(f: &[BigRat], c: &BigRat) -> Binary {
    f.iter().map(|a| a * c).collect()
}

/// `f((x, z) M)`, i.e. substitute `x -> m00 x + m10 z`, `z -> m01 x + m11 z`.
pub fn binary_subst(f: &[BigRat], m: &[Vec<BigRat>]) -> Binary {
    let d = f.len() - 1;
    let lx = vec![m[0][0].clone(), m[1][0].clone()];
    let lz = vec![m[0][1].clone(), m[1][1].clone()];
    let mut px = vec![vec![BigRat::from_integer(1.into())]];
    let mut pz = vec![vec![BigRat::from_integer(1.into())]];
    for k in 0..d {
        px.push(binary_mul(&px[k], &lx));
        pz.push(binary_mul(&pz[k], &lz));
    }
    let mut out = vec![BigRat::zero(); d + 1];
    for (k, c) in f.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = binary_scale(&binary_mul(&px[d - k], &pz[k]), c);
        out = binary_add(&out, &term);
    }
    out
}

/// Sparse homogeneous form in `n` variables keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, BigRat>,
}

impl Form {
    pub fn zero(nvars: usize) -> Self {
        Form { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRat) -> Self {
        let mut f = Form::zero(nvars);
        f.add_term(vec![0; nvars], c);
        f
    }

    pub fn linear(coeffs: &[BigRat]) -> Self {
        let n = coeffs.len();
        let mut f = Form::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            f.add_term(e, c.clone());
        }
        f
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigRat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRat {
        self.terms.get(exps).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn add(&self, other: &Form) -> Form {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRat) -> Form {
        let mut out = Form::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.nvars);
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, a * b);
            }
        }
        out
    }

    /// `f(x M)`: variable `j` is replaced by `sum_i x_i M[i][j]`.
    pub fn subst(&self, m: &[Vec<BigRat>]) -> Form {
        let n = self.nvars;
        let lin: Vec<Form> = (0..n)
            .map(|j| Form::linear(&(0..n).map(|i| m[i][j].clone()).collect::<Vec<_>>()))
            .collect();
        let mut out = Form::zero(n);
        for (e, c) in &self.terms {
            let mut t = Form::constant(n, c.clone());
            for (j, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&lin[j]);
                }
            }
            for (e, c) in t.terms {
                out.add_term(e, c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn binary_subst_swaps_variables() {
        let f = vec![rat(1), rat(2), rat(3)];
        let swap = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(binary_subst(&f, &swap), vec![rat(3), rat(2), rat(1)]);
    }

    #[test]
    fn binary_subst_matches_form_subst() {
        let f = vec![rat(2), rat(-1), rat(0), rat(5)];
        let m = vec![vec![rat(1), rat(3)], vec![rat(-2), rat(1)]];
        let mut form = Form::zero(2);
        for (k, c) in f.iter().enumerate() {
            form.add_term(vec![(3 - k) as u32, k as u32], c.clone());
        }
        let g = form.subst(&m);
        let expected: Vec<BigRat> = (0..4).map(|k| g.coeff(&[(3 - k) as u32, k as u32])).collect();
        assert_eq!(binary_subst(&f, &m), expected);
    }
}
