//! Sparse multivariate polynomials with exact rational coefficients, and
//! polynomial vector fields.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial in `nvars` variables; keys are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Poly::constant(nvars, rat(c))
    }

    /// The coordinate function `X^i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Poly {
        self.scale(&rat(c))
    }

    /// `∂/∂X^i`.
    pub fn deriv(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, v * rat(e[i] as i64));
            }
        }
        out
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, v)| {
                let c = v.to_f64().unwrap_or(f64::NAN);
                e.iter().zip(x).fold(c, |acc, (&k, &xi)| acc * xi.powi(k as i32))
            })
            .sum()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale_int(-1)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, va) in &self.terms {
            for (eb, vb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, va * vb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, v)) in self.terms.iter().enumerate() {
            let sign = if v.is_negative() { "-" } else if n > 0 { "+" } else { "" };
            write!(f, "{}{}", if n > 0 { format!(" {sign} ") } else { sign.to_string() }, v.abs())?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*X{i}")?,
                    _ => write!(f, "*X{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Vector field `V = V^Q ∂_Q` with polynomial components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVectorField {
    pub components: Vec<Poly>,
}

impl PolyVectorField {
    pub fn zero(n: usize) -> Self {
        PolyVectorField { components: vec![Poly::zero(n); n] }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// `V(f) = V^P ∂_P f`.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(self.dim());
        for (p, c) in self.components.iter().enumerate() {
            out = &out + &(c * &f.deriv(p));
        }
        out
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }

    pub fn scale_int(&self, c: i64) -> Self {
        PolyVectorField { components: self.components.iter().map(|p| p.scale_int(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        PolyVectorField { components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        PolyVectorField { components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect() }
    }
}

/// `[V, W]^Q = V^P ∂_P W^Q - W^P ∂_P V^Q`.
pub fn lie_bracket(v: &PolyVectorField, w: &PolyVectorField) -> PolyVectorField {
    let components = v.components.iter().zip(&w.components).map(|(vq, wq)| &v.apply(wq) - &w.apply(vq)).collect();
    PolyVectorField { components }
}
