//! Univariate polynomials and rational functions with [`Scalar`] coefficients.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;
use crate::{Error, Result};

/// `sum coeffs[k] u^k`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ScalarPoly {
    coeffs: Vec<Scalar>,
}

impl ScalarPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        ScalarPoly { coeffs }
    }

    pub fn zero() -> Self {
        ScalarPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(alloc::vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// The variable `u`.
    pub fn var() -> Self {
        Self::new(alloc::vec![Scalar::zero(), Scalar::one()])
    }

    /// `u - r`.
    pub fn linear(r: &Scalar) -> Self {
        Self::new(alloc::vec![-r, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, u: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * u) + c;
        }
        acc
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Synthetic division by `u - r`: `(quotient, remainder)`.
    pub fn div_linear(&self, r: &Scalar) -> (ScalarPoly, Scalar) {
        if self.coeffs.is_empty() {
            return (Self::zero(), Scalar::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut q = alloc::vec![Scalar::zero(); d];
        let mut carry = Scalar::zero();
        for k in (0..=d).rev() {
            let v = &self.coeffs[k] + &(&carry * r);
            if k == 0 {
                return (Self::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Scales to leading coefficient one; returns the monic polynomial and the old leading
    /// coefficient.
    pub fn monic(&self) -> Result<(ScalarPoly, Scalar)> {
        let lead = self.leading();
        let inv = lead.inverse()?;
        Ok((self.scale(&inv), lead))
    }
}

impl Add for &ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Scalar::zero();
        ScalarPoly::new(
            (0..len)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        ScalarPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        self + &(-rhs)
    }
}

impl Mul for &ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        if self.is_zero() || rhs.is_zero() {
            return ScalarPoly::zero();
        }
        let mut out = alloc::vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        ScalarPoly::new(out)
    }
}

impl fmt::Debug for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})u^{}", c, k)?;
        }
        Ok(())
    }
}

/// A quotient `num / den` of scalar polynomials.
#[derive(Clone, Debug)]
pub struct ScalarRational {
    pub num: ScalarPoly,
    pub den: ScalarPoly,
}

impl ScalarRational {
    pub fn new(num: ScalarPoly, den: ScalarPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(ScalarRational { num, den })
    }

    pub fn constant(c: Scalar) -> Self {
        ScalarRational {
            num: ScalarPoly::constant(c),
            den: ScalarPoly::one(),
        }
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, rhs: &ScalarRational) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    pub fn mul(&self, rhs: &ScalarRational) -> ScalarRational {
        ScalarRational {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    /// Value at `u`, cancelling common factors `u - u0` while the denominator vanishes there.
    pub fn evaluate(&self, u: &Scalar) -> Result<Scalar> {
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        loop {
            let d = den.eval(u);
            if !d.is_zero() {
                return num.eval(u).checked_div(&d);
            }
            let (qd, _) = den.div_linear(u);
            let (qn, rn) = num.div_linear(u);
            if !rn.is_zero() {
                return Err(Error::NonRemovablePole);
            }
            num = qn;
            den = qd;
        }
    }
}

/// `A(u, v) = 1 - 2(u^2 + v^2)/(u^2 - v^2)^2` as a rational function of `u`, with `v^2` fixed.
pub fn a_rational(v_sq: &Scalar) -> ScalarRational {
    let u2 = &ScalarPoly::var() * &ScalarPoly::var();
    let diff = &u2 - &ScalarPoly::constant(v_sq.clone());
    let den = &diff * &diff;
    let two = Scalar::from_int(2);
    let num = &den - &(&u2 + &ScalarPoly::constant(v_sq.clone())).scale(&two);
    ScalarRational { num, den }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_division() {
        let r2 = Scalar::sqrt_int(2);
        let p = &ScalarPoly::linear(&r2) * &ScalarPoly::linear(&-&r2);
        let (q, rem) = p.div_linear(&r2);
        assert!(rem.is_zero());
        assert_eq!(q, ScalarPoly::linear(&-&r2));
        assert_eq!(p.eval(&Scalar::from_int(2)), Scalar::from_int(2));
    }

    #[test]
    fn removable_pole() {
        let r2 = Scalar::sqrt_int(2);
        let num = &ScalarPoly::linear(&r2) * &ScalarPoly::constant(Scalar::from_int(5));
        let f = ScalarRational::new(num, ScalarPoly::linear(&r2)).unwrap();
        assert_eq!(f.evaluate(&r2).unwrap(), Scalar::from_int(5));
        let g = ScalarRational::new(ScalarPoly::one(), ScalarPoly::linear(&r2)).unwrap();
        assert_eq!(g.evaluate(&r2), Err(Error::NonRemovablePole));
    }
}
