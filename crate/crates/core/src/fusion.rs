//! Rational functions of one variable with values in `S_n`, the factors `phi_ab(u, v)` and
//! the consecutive evaluation of `Phi(u_1, ..., u_n)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, Sergeev};
use crate::idempotents::IdempotentTree;
use crate::poly::{a_rational, ScalarPoly, ScalarRational};
use crate::report::Report;
use crate::scalar::{Rational, Scalar};
use crate::tableaux::{branch_up, ShiftedTableau};
use crate::{Error, Result};

/// `sum coeffs[k] u^k` with coefficients in `S_n`; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPoly {
    n: usize,
    coeffs: Vec<AlgebraElement>,
}

impl AlgebraPoly {
    pub fn new(n: usize, mut coeffs: Vec<AlgebraElement>) -> Self {
        while coeffs.last().is_some_and(AlgebraElement::is_zero) {
            coeffs.pop();
        }
        AlgebraPoly { n, coeffs }
    }

    pub fn zero(n: usize) -> Self {
        AlgebraPoly {
            n,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(e: AlgebraElement) -> Self {
        Self::new(e.n(), vec![e])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &AlgebraPoly) -> AlgebraPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = AlgebraElement::zero(self.n);
        Self::new(
            self.n,
            (0..len)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &AlgebraPoly) -> AlgebraPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> AlgebraPoly {
        AlgebraPoly {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &AlgebraPoly) -> Result<AlgebraPoly> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let mut out = vec![AlgebraElement::zero(self.n); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &a.multiply(b)?;
            }
        }
        Ok(Self::new(self.n, out))
    }

    /// Product with a central scalar polynomial.
    pub fn mul_scalar_poly(&self, p: &ScalarPoly) -> AlgebraPoly {
        if self.is_zero() || p.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = vec![AlgebraElement::zero(self.n); self.coeffs.len() + p.coeffs().len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, s) in p.coeffs().iter().enumerate() {
                if !s.is_zero() {
                    out[i + j] = &out[i + j] + &a.scale(s);
                }
            }
        }
        Self::new(self.n, out)
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraPoly {
        Self::new(self.n, self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    pub fn eval(&self, u: &Scalar) -> AlgebraElement {
        let mut acc = AlgebraElement::zero(self.n);
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(u) + c;
        }
        acc
    }

    /// Synthetic division by `u - r`, coefficient by coefficient: `(quotient, remainder)`.
    pub fn div_linear(&self, r: &Scalar) -> (AlgebraPoly, AlgebraElement) {
        let Some(d) = self.degree() else {
            return (Self::zero(self.n), AlgebraElement::zero(self.n));
        };
        let mut q = vec![AlgebraElement::zero(self.n); d];
        let mut carry = AlgebraElement::zero(self.n);
        for k in (1..=d).rev() {
            carry = &self.coeffs[k] + &carry.scale(r);
            q[k - 1] = carry.clone();
        }
        let rem = &self.coeffs[0] + &carry.scale(r);
        (Self::new(self.n, q), rem)
    }
}

/// `num(u) / den(u)` with a monic scalar denominator.
#[derive(Clone, Debug)]
pub struct RationalElement {
    num: AlgebraPoly,
    den: ScalarPoly,
}

impl RationalElement {
    pub fn new(num: AlgebraPoly, den: ScalarPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let (den, lead) = den.monic()?;
        Ok(RationalElement {
            num: num.scale(&lead.inverse()?),
            den,
        })
    }

    pub fn constant(e: AlgebraElement) -> Self {
        RationalElement {
            num: AlgebraPoly::constant(e),
            den: ScalarPoly::one(),
        }
    }

    pub fn numerator(&self) -> &AlgebraPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ScalarPoly {
        &self.den
    }

    pub fn mul(&self, rhs: &RationalElement) -> Result<RationalElement> {
        Ok(RationalElement {
            num: self.num.mul(&rhs.num)?,
            den: &self.den * &rhs.den,
        })
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, rhs: &RationalElement) -> bool {
        self.num.mul_scalar_poly(&rhs.den) == rhs.num.mul_scalar_poly(&self.den)
    }

    /// The value at `u = kappa`, cancelling factors `u - kappa` while the denominator vanishes.
    pub fn evaluate_at(&self, kappa: &Scalar) -> Result<AlgebraElement> {
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        loop {
            let d = den.eval(kappa);
            if !d.is_zero() {
                return Ok(num.eval(kappa).scale(&d.inverse()?));
            }
            let (qd, _) = den.div_linear(kappa);
            let (qn, rem) = num.div_linear(kappa);
            if !rem.is_zero() {
                return Err(Error::NonRemovablePole);
            }
            num = qn;
            den = qd;
        }
    }
}

/// An argument of `phi_ab(u, v)`: the variable, or a fixed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Var,
    Value(Scalar),
}

/// `phi_ab(u, v) = 1 + t_ab sqrt2 (u c_a - v c_b) / (u^2 - v^2)` with at most one symbolic
/// argument.
pub fn phi_factor(g: &Sergeev, a: usize, b: usize, u: &Arg, v: &Arg) -> Result<RationalElement> {
    if a == b {
        return Err(Error::Invalid(format!("phi_ab needs a != b, got {}", a)));
    }
    let n = g.n();
    let r2 = Scalar::sqrt_int(2);
    let tca = (&g.gen_t_ab(a, b)? * &g.gen_c(a)?).scale(&r2);
    let tcb = (&g.gen_t_ab(a, b)? * &g.gen_c(b)?).scale(&r2);
    let one = g.one();
    match (u, v) {
        (Arg::Value(u), Arg::Value(v)) => Ok(RationalElement::constant(phi_value(g, a, b, u, v)?)),
        (Arg::Var, Arg::Value(v)) => {
            // (u^2 - v^2) + u t c_a - v t c_b
            let v2 = v.square();
            let num =
                AlgebraPoly::new(n, vec![&one.scale(&-&v2) - &tcb.scale(v), tca, one.clone()]);
            RationalElement::new(
                num,
                ScalarPoly::new(vec![-v2, Scalar::zero(), Scalar::one()]),
            )
        }
        (Arg::Value(u), Arg::Var) => {
            let u2 = u.square();
            let num = AlgebraPoly::new(n, vec![&one.scale(&u2) + &tca.scale(u), -&tcb, -&one]);
            RationalElement::new(
                num,
                ScalarPoly::new(vec![u2, Scalar::zero(), -Scalar::one()]),
            )
        }
        (Arg::Var, Arg::Var) => Err(Error::Invalid(format!(
            "phi_{}{} with two symbolic arguments",
            a, b
        ))),
    }
}

/// `phi_ab(u, v)` at scalar arguments.
pub fn phi_value(
    g: &Sergeev,
    a: usize,
    b: usize,
    u: &Scalar,
    v: &Scalar,
) -> Result<AlgebraElement> {
    let den = &u.square() - &v.square();
    if den.is_zero() {
        return Err(Error::PoleAtEvaluation);
    }
    let r2 = Scalar::sqrt_int(2);
    let inner = &g.gen_c(a)?.scale(u) - &g.gen_c(b)?.scale(v);
    let f = &r2 * &den.inverse()?;
    Ok(&g.one() + &(&g.gen_t_ab(a, b)? * &inner).scale(&f))
}

/// `e phi_{1k}(kappa_1, u) ... phi_{k-1,k}(kappa_{k-1}, u)` as a rational function of `u`.
pub fn column_product(
    g: &Sergeev,
    left: &AlgebraElement,
    kappa: &[Scalar],
) -> Result<RationalElement> {
    let k = kappa.len() + 1;
    let mut prod = RationalElement::constant(left.clone());
    for (a, ka) in kappa.iter().enumerate() {
        prod = prod.mul(&phi_factor(
            g,
            a + 1,
            k,
            &Arg::Value(ka.clone()),
            &Arg::Var,
        )?)?;
    }
    Ok(prod)
}

/// `Phi(u_1, ..., u_n)` at `u_a = kappa_a(U)`, evaluated one variable at a time.
pub fn fusion_evaluate_in(g: &Sergeev, u: &ShiftedTableau) -> Result<AlgebraElement> {
    let kappa = u.kappa_vector();
    let mut value = g.one();
    for k in 2..=u.n() {
        value = column_product(g, &value, &kappa[..k - 1])?.evaluate_at(&kappa[k - 1])?;
    }
    Ok(value)
}

pub fn fusion_evaluate(u: &ShiftedTableau) -> Result<AlgebraElement> {
    fusion_evaluate_in(&Sergeev::new(u.n())?, u)
}

/// `prod_{a<b} phi_ab(kappa_a, kappa_b)` in lexicographic order; every `kappa_a^2` distinct.
pub fn simultaneous_evaluate(g: &Sergeev, kappa: &[Scalar]) -> Result<AlgebraElement> {
    let mut value = g.one();
    for a in 1..=kappa.len() {
        for b in a + 1..=kappa.len() {
            value = value.multiply(&phi_value(g, a, b, &kappa[a - 1], &kappa[b - 1])?)?;
        }
    }
    Ok(value)
}

/// `n! / g_lambda`.
pub fn fusion_constant(u: &ShiftedTableau) -> Result<Scalar> {
    let fact: u64 = (1..=u.n() as u64).product();
    let g = u.shape().g_lambda_formula()?;
    Scalar::ratio(fact as i64, g as i64)
}

/// `e_V phi_{n,r}(u, kappa_r) ... phi_{n,1}(u, kappa_1) = (u - x_{rn})/u e_V`, cross-multiplied.
pub fn verify_projection_identity(tree: &IdempotentTree, v: &ShiftedTableau) -> Result<Report> {
    let g = tree.sergeev();
    let n = g.n();
    let r = v.n();
    if r >= n {
        return Err(Error::Invalid(format!(
            "needs r < n, got r = {}, n = {}",
            r, n
        )));
    }
    let ev = tree.get(v).ok_or(Error::ShapeMismatch)?;
    let kappa = v.kappa_vector();
    let mut lhs = RationalElement::constant(ev.clone());
    for a in (1..=r).rev() {
        lhs = lhs.mul(&phi_factor(
            g,
            n,
            a,
            &Arg::Var,
            &Arg::Value(kappa[a - 1].clone()),
        )?)?;
    }
    let x = g.gen_jm_x(r)?;
    let num = AlgebraPoly::new(n, vec![-&(&x * ev), ev.clone()]);
    let rhs = RationalElement::new(num, ScalarPoly::var())?;
    let mut report = Report::new();
    report.check_with(
        format!("projection identity for {} in S_{}", v, n),
        lhs.same_function(&rhs),
        || format!("{:?}", lhs.numerator().degree()),
    );
    Ok(report)
}

/// `R(u) = sum_W e_W (u - kappa_n)/(u - kappa_W)` and its value at `kappa_n(U)`, for `U = V + box`.
pub fn verify_resolvent_identities(
    tree: &IdempotentTree,
    v: &ShiftedTableau,
    target: &ShiftedTableau,
) -> Result<Report> {
    let g = tree.sergeev();
    let n = v.n() + 1;
    if target.n() != n || target.restrict(n - 1) != *v {
        return Err(Error::Invalid(format!("{} does not extend {}", target, v)));
    }
    let mut report = Report::new();
    let kn = target.signed_content(n);
    let ev = tree.get(v).ok_or(Error::ShapeMismatch)?;
    let eu = tree.get(target).ok_or(Error::ShapeMismatch)?;
    let xn = g.jm_x(n)?;

    // R(u) = sum_W e_W (u - kappa_n)/(u - kappa_W) represents (u - kappa_n)/(u - x_n) e_V
    let children = branch_up(v);
    let mut den = ScalarPoly::one();
    for w in &children {
        den = &den * &ScalarPoly::linear(&w.signed_content(n));
    }
    let mut num = AlgebraPoly::zero(g.n());
    for w in &children {
        let ew = tree.get(w).ok_or(Error::ShapeMismatch)?;
        let (others, _) = den.div_linear(&w.signed_content(n));
        let p = &others * &ScalarPoly::linear(&kn);
        num = num.add(&AlgebraPoly::constant(ew.clone()).mul_scalar_poly(&p));
    }
    let rf = RationalElement::new(num, den)?;
    // (u - x_n) R(u) = (u - kappa_n) e_V
    let u_minus_x = AlgebraPoly::new(g.n(), vec![-&xn, g.one()]);
    let lhs = RationalElement::new(u_minus_x.mul(rf.numerator())?, rf.denominator().clone())?;
    let rhs = RationalElement::new(
        AlgebraPoly::constant(ev.clone()).mul_scalar_poly(&ScalarPoly::linear(&kn)),
        ScalarPoly::one(),
    )?;
    report.check_with(
        format!("resolvent defining relation for {}", target),
        lhs.same_function(&rhs),
        String::new,
    );
    let value = rf.evaluate_at(&kn)?;
    report.check_with(
        format!("resolvent value e_U for {}", target),
        &value == eu,
        String::new,
    );

    let mut f = ScalarRational::new(ScalarPoly::var(), ScalarPoly::linear(&kn))?;
    for a in 1..n {
        f = f.mul(&a_rational(&v.signed_content(a).square()));
    }
    let got = f.evaluate(&kn)?;
    let gm = v.shape().g_lambda_formula()? as i64;
    let gl = target.shape().g_lambda_formula()? as i64;
    let want = Scalar::from_rational(Rational::new(n as i64 * gm, gl)?);
    report.check_with(format!("residue value for {}", target), got == want, || {
        format!("got {} want {}", got, want)
    });
    Ok(report)
}

/// `A(u,0) A(u,sqrt2) ... A(u, sqrt(p(p-1))) = (u^2 - p(p+1)) / (u^2 - p(p-1))`.
pub fn telescoping_identity(p: i64) -> Result<bool> {
    let mut f = ScalarRational::constant(Scalar::one());
    for k in 1..=p {
        f = f.mul(&a_rational(&Scalar::from_int(k * (k - 1))));
    }
    let u2 = &ScalarPoly::var() * &ScalarPoly::var();
    let want = ScalarRational::new(
        &u2 - &ScalarPoly::constant(Scalar::from_int(p * (p + 1))),
        &u2 - &ScalarPoly::constant(Scalar::from_int(p * (p - 1))),
    )?;
    Ok(f.same_function(&want))
}

/// `phi_ab(u, v) phi_ba(v, u) = A(u, v)` with `u` symbolic.
pub fn inversion_identity(g: &Sergeev, a: usize, b: usize, v: &Scalar) -> Result<bool> {
    let left = phi_factor(g, a, b, &Arg::Var, &Arg::Value(v.clone()))?;
    let right = phi_factor(g, b, a, &Arg::Value(v.clone()), &Arg::Var)?;
    let prod = left.mul(&right)?;
    let av = a_rational(&v.square());
    let want = RationalElement::new(
        AlgebraPoly::constant(g.one()).mul_scalar_poly(&av.num),
        av.den.clone(),
    )?;
    Ok(prod.same_function(&want))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempotents::idempotent_in;

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn example_three_box_idempotents() {
        let g = Sergeev::new(3).unwrap();
        let u = tab("1,2/3");
        let value = fusion_evaluate_in(&g, &u).unwrap();
        let t = |a, b| g.gen_t_ab(a, b).unwrap();
        let c2 = g.gen_c(2).unwrap();
        let verbatim =
            &(&g.one() + &(&t(1, 2) * &c2)) * &(&g.one() + &(&c2 * &(&t(1, 3) - &t(2, 3))));
        assert_eq!(value, verbatim);
        let e = idempotent_in(&g, &u).unwrap();
        assert_eq!(value, e.scale(&Scalar::from_int(6)));
    }

    #[test]
    fn removable_factor() {
        let g = Sergeev::new(2).unwrap();
        let r2 = Scalar::sqrt_int(2);
        let x = g.jm_x(2).unwrap();
        let num = AlgebraPoly::constant(x.clone()).mul_scalar_poly(&ScalarPoly::linear(&r2));
        let f = RationalElement::new(num, ScalarPoly::linear(&r2)).unwrap();
        assert_eq!(f.evaluate_at(&r2).unwrap(), x);
        let pole = RationalElement::new(AlgebraPoly::constant(x), ScalarPoly::linear(&r2)).unwrap();
        assert_eq!(pole.evaluate_at(&r2), Err(Error::NonRemovablePole));
    }

    #[test]
    fn pole_at_equal_squares() {
        let g = Sergeev::new(2).unwrap();
        let r2 = Scalar::sqrt_int(2);
        assert_eq!(
            phi_value(&g, 1, 2, &r2, &-&r2),
            Err(Error::PoleAtEvaluation)
        );
    }

    #[test]
    fn telescoping() {
        for p in 1..=6 {
            assert!(telescoping_identity(p).unwrap(), "p = {}", p);
        }
    }
}
