//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{binomial, Rational};
use crate::error::{Error, Result};

/// Display name of the polynomial variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    #[default]
    X,
    /// `ℓ`, the half-index of the A family.
    Ell,
    K,
    Y,
}

impl Variable {
    fn symbol(self) -> &'static str {
        match self {
            Variable::X => "x",
            Variable::Ell => "l",
            Variable::K => "k",
            Variable::Y => "y",
        }
    }
}

/// `coeffs[i]` is the coefficient of `var^i`. The coefficient list never
/// carries trailing zeros; the zero polynomial is the empty list.
///
/// Equality compares coefficients only; the variable is a display tag.
#[derive(Clone, Default, Serialize, Deserialize)]
pub struct UPoly {
    coeffs: Vec<Rational>,
    #[serde(default)]
    var: Variable,
}

impl PartialEq for UPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for UPoly {}

impl UPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UPoly { coeffs, var: Variable::X };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| Rational::integer(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        UPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `slope * x + intercept`.
    pub fn linear(slope: Rational, intercept: Rational) -> Self {
        UPoly::new(vec![intercept, slope])
    }

    pub fn with_var(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rational {
        self.eval(&Rational::integer(x))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn eval_complex(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| acc * x + c.to_f64())
    }

    pub fn scale(&self, s: &Rational) -> UPoly {
        if s.is_zero() {
            return UPoly::zero().with_var(self.var);
        }
        UPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect(), var: self.var }
    }

    /// `q(x) = p(x + t)`.
    pub fn shift_argument(&self, t: &Rational) -> UPoly {
        // Expand sum_i c_i (x+t)^i with binomials.
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        let mut tpow = vec![Rational::one(); n];
        for i in 1..n {
            tpow[i] = &tpow[i - 1] * t;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m, slot) in out.iter_mut().enumerate().take(i + 1) {
                *slot += c * &binomial(i, m) * &tpow[i - m];
            }
        }
        UPoly::new(out).with_var(self.var)
    }

    pub fn shift_i64(&self, t: i64) -> UPoly {
        self.shift_argument(&Rational::integer(t))
    }

    pub fn pow(&self, e: usize) -> UPoly {
        let mut acc = UPoly::one().with_var(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Rising factorial `(p)_k = p (p+1) ... (p+k-1)` in the polynomial ring.
    pub fn pochhammer(&self, k: usize) -> UPoly {
        let mut acc = UPoly::one().with_var(self.var);
        for i in 0..k {
            acc = &acc * &(self + &UPoly::constant(Rational::from(i)));
        }
        acc
    }

    /// Exact interpolation through `(0, values[0]), (1, values[1]), ...`
    /// using Newton forward differences.
    pub fn interpolate(values: &[Rational]) -> UPoly {
        // Forward differences at 0.
        let mut diffs = Vec::with_capacity(values.len());
        let mut row: Vec<Rational> = values.to_vec();
        while !row.is_empty() {
            diffs.push(row[0].clone());
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        // p(x) = sum_i diffs[i] * C(x, i),  C(x, i) = x (x-1) ... (x-i+1) / i!
        let mut out = UPoly::zero();
        let mut falling = UPoly::one();
        for (i, d) in diffs.iter().enumerate() {
            if i > 0 {
                falling = &falling * &UPoly::linear(Rational::one(), Rational::from(1 - i as i64));
            }
            let scale = d / &super::factorial(i);
            out = &out + &falling.scale(&scale);
        }
        out
    }

    /// Interpolates and requires the result to have exactly `degree`
    /// (or be zero when `degree` is `None`).
    pub fn interpolate_with_degree(values: &[Rational], degree: usize) -> Result<UPoly> {
        let p = UPoly::interpolate(values);
        if p.degree() != Some(degree) {
            return Err(Error::InterpolationDegreeMismatch { expected: degree, got: p.degree() });
        }
        Ok(p)
    }

    /// Maximum absolute coefficient difference.
    pub fn max_abs_coeff_diff(&self, other: &UPoly) -> Rational {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|i| (self.coeff(i) - other.coeff(i)).abs())
            .max()
            .unwrap_or_default()
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || i == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl<'b> Add<&'b UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &'b UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UPoly::new(coeffs).with_var(self.var)
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, rhs: UPoly) -> UPoly {
        &self + &rhs
    }
}

impl<'b> Sub<&'b UPoly> for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &'b UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UPoly::new(coeffs).with_var(self.var)
    }
}

impl Sub for UPoly {
    type Output = UPoly;
    fn sub(self, rhs: UPoly) -> UPoly {
        &self - &rhs
    }
}

impl<'b> Mul<&'b UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &'b UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero().with_var(self.var);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out).with_var(self.var)
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: UPoly) -> UPoly {
        &self * &rhs
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        self.scale(&Rational::integer(-1))
    }
}
