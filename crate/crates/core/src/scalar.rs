//! The coefficient field: `Q(i)` with square roots of squarefree positive integers adjoined.
//!
//! A [`Scalar`] is a finite sum `sum_d (re_d + i im_d) sqrt(d)` over squarefree `d >= 1`,
//! stored sparsely and sorted by `d`. The family `{sqrt d}` is linearly independent over
//! `Q(i)`, so the sorted sparse form is canonical and structural equality is field equality.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// An exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in `i64` are kept inline; anything larger is
/// promoted to a big rational. The representation is canonical: a value is big iff it does
/// not fit the small form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }

    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDivision);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(Self::from_big_ratio(BigRational::new(num, den)))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd_u128(num.unsigned_abs(), den as u128) as i128;
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            ))),
        }
    }

    fn from_big_ratio(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        match &self.0 {
            Repr::Small(0, _) => Err(Error::ZeroDivision),
            Repr::Small(n, d) => Ok(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Ok(Self::from_big_ratio(r.recip())),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rational(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(s) => Rational::from_i128(s, z),
                        None => Rational::from_big_ratio(self.to_big() + rhs.to_big()),
                    },
                    _ => Rational::from_big_ratio(self.to_big() + rhs.to_big()),
                }
            }
            _ => Rational::from_big_ratio(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Rational(Repr::Small(p, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(c), b.checked_mul(d)) {
                    (Some(x), Some(y)) => Rational::from_i128(x, y),
                    _ => Rational::from_big_ratio(self.to_big() * rhs.to_big()),
                }
            }
            _ => Rational::from_big_ratio(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Rational::from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(r) => Rational::from_big_ratio(-r),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p/q"` or a bare integer `"p"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(alloc::format!("not a rational: {:?}", s));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Rational::from_big(num, den)
    }
}

/// A Gaussian rational `re + i im`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian {
            re,
            im: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_real() {
            return Ok(Gaussian::real(self.re.inverse()?));
        }
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        let inv = norm.inverse()?;
        Ok(Gaussian {
            re: &self.re * &inv,
            im: -(&self.im * &inv),
        })
    }

    fn scale_int(&self, k: i64) -> Self {
        let k = Rational::from_integer(k);
        Gaussian {
            re: &self.re * &k,
            im: &self.im * &k,
        }
    }
}

impl<'a> Add<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        if self.is_real() && rhs.is_real() {
            return Gaussian::real(&self.re * &rhs.re);
        }
        Gaussian {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd_u128(a as u128, b as u128) as u64
}

/// Prime factors of `d` (each listed once).
fn prime_factors(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            out.push(p);
            while d.is_multiple_of(p) {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Writes `n = s^2 d` with `d` squarefree; returns `(s, d)`.
fn split_square(n: &BigUint) -> Result<(BigUint, u64)> {
    let mut rest = n.clone();
    let mut root = BigUint::one();
    let mut core = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut k = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            k += 1;
        }
        for _ in 0..k / 2 {
            root *= &p;
        }
        if k % 2 == 1 {
            core *= &p;
        }
        p += 1u32;
    }
    core *= rest;
    let d = core.to_u64().ok_or(Error::RadicandOverflow)?;
    Ok((root, d))
}

/// An element of `Q(i, sqrt d_1, sqrt d_2, ...)` in canonical sparse form.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: Vec<(u64, Gaussian)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Scalar {
            terms: alloc::vec![(1, Gaussian::new(Rational::zero(), Rational::one()))],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_gaussian(Gaussian::real(q))
    }

    pub fn from_gaussian(g: Gaussian) -> Self {
        if g.is_zero() {
            Self::zero()
        } else {
            Scalar {
                terms: alloc::vec![(1, g)],
            }
        }
    }

    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        Ok(Self::from_rational(Rational::new(num, den)?))
    }

    /// `sqrt(k)` for a nonnegative integer `k`.
    pub fn sqrt_int(k: u64) -> Self {
        sqrt_rational(&Rational::from_integer(k as i64)).expect("nonnegative radicand")
    }

    /// Builds a scalar from `(d, coefficient)` pairs; `d` need not be squarefree.
    pub fn from_terms<I: IntoIterator<Item = (u64, Gaussian)>>(terms: I) -> Result<Self> {
        let mut acc = Scalar::zero();
        for (d, g) in terms {
            if d == 0 {
                continue;
            }
            let (s, core) = split_square(&BigUint::from(d))?;
            let s = Rational::from_big(BigInt::from(s), BigInt::one())?;
            let g = Gaussian {
                re: &g.re * &s,
                im: &g.im * &s,
            };
            acc += &Scalar::from_sorted(alloc::vec![(core, g)]);
        }
        Ok(acc)
    }

    fn from_sorted(mut terms: Vec<(u64, Gaussian)>) -> Self {
        terms.retain(|(_, g)| !g.is_zero());
        Scalar { terms }
    }

    /// The `(d, re + i im)` terms in increasing `d`.
    pub fn terms(&self) -> &[(u64, Gaussian)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].0 == 1
            && self.terms[0].1.re.is_one()
            && self.terms[0].1.im.is_zero()
    }

    /// The rational value if this scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(1, g)] if g.im.is_zero() => Some(g.re.clone()),
            _ => None,
        }
    }

    /// The Gaussian-rational value if this scalar lies in `Q(i)`.
    pub fn as_gaussian(&self) -> Option<Gaussian> {
        match self.terms.as_slice() {
            [] => Some(Gaussian::default()),
            [(1, g)] => Some(g.clone()),
            _ => None,
        }
    }

    /// Complex conjugation (fixes every `sqrt d`, maps `i` to `-i`).
    pub fn conj(&self) -> Self {
        Scalar {
            terms: self.terms.iter().map(|(d, g)| (*d, g.conj())).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(d, g)| {
                    (
                        *d,
                        Gaussian {
                            re: &g.re * q,
                            im: &g.im * q,
                        },
                    )
                })
                .collect(),
        }
    }

    fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .terms
            .iter()
            .flat_map(|(d, _)| prime_factors(*d))
            .collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// The conjugate flipping the sign of `sqrt p`.
    fn flip_prime(&self, p: u64) -> Self {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(d, g)| {
                    if d % p == 0 {
                        (*d, -g)
                    } else {
                        (*d, g.clone())
                    }
                })
                .collect(),
        }
    }

    /// Multiplicative inverse via the product of radical conjugates.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let mut cofactor = Scalar::one();
        let mut norm = self.clone();
        for p in self.primes() {
            let conj = norm.flip_prime(p);
            cofactor = &cofactor * &conj;
            norm = &norm * &conj;
        }
        let g = norm
            .as_gaussian()
            .ok_or_else(|| Error::Internal(String::from("radical norm left radicals behind")))?;
        Ok(&cofactor * &Scalar::from_gaussian(g.inverse()?))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// `self^2`.
    pub fn square(&self) -> Self {
        self * self
    }
}

/// Nonnegative square root of a nonnegative rational: `sqrt(p/r) = sqrt(p r) / r`.
pub fn sqrt_rational(q: &Rational) -> Result<Scalar> {
    if q.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if q.is_zero() {
        return Ok(Scalar::zero());
    }
    let num = q.numer();
    let den = q.denom();
    let prod = (&num * &den).to_biguint().expect("nonnegative");
    let (root, core) = split_square(&prod)?;
    let coeff = Rational::from_big(BigInt::from_biguint(Sign::Plus, root), den)?;
    Ok(Scalar::from_sorted(alloc::vec![(
        core,
        Gaussian::real(coeff)
    )]))
}

fn merge_add(a: &[(u64, Gaussian)], b: &[(u64, Gaussian)], negate_b: bool) -> Vec<(u64, Gaussian)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let take_b = |g: &Gaussian| if negate_b { -g } else { g.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, take_b(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = if negate_b {
                    Gaussian {
                        re: &a[i].1.re - &b[j].1.re,
                        im: &a[i].1.im - &b[j].1.im,
                    }
                } else {
                    &a[i].1 + &b[j].1
                };
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(d, g)| (*d, take_b(g))));
    out
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        Scalar {
            terms: merge_add(&self.terms, &rhs.terms, false),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        Scalar {
            terms: merge_add(&self.terms, &rhs.terms, true),
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        // Fast path: a single matching radicand updates in place.
        if let [(d, g)] = rhs.terms.as_slice() {
            if let Ok(pos) = self.terms.binary_search_by_key(d, |(k, _)| *k) {
                let s = &self.terms[pos].1 + g;
                if s.is_zero() {
                    self.terms.remove(pos);
                } else {
                    self.terms[pos].1 = s;
                }
                return;
            }
        }
        self.terms = merge_add(&self.terms, &rhs.terms, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if let [(1, g)] = rhs.terms.as_slice() {
            if g.im.is_zero() {
                return self.scale_rational(&g.re);
            }
        }
        if let [(1, g)] = self.terms.as_slice() {
            if g.im.is_zero() {
                return rhs.scale_rational(&g.re);
            }
        }
        let mut prods: Vec<(u64, Gaussian)> =
            Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (d1, g1) in &self.terms {
            for (d2, g2) in &rhs.terms {
                let g = gcd_u64(*d1, *d2);
                let d = (d1 / g) * (d2 / g);
                let mut c = g1 * g2;
                if g > 1 {
                    c = c.scale_int(g as i64);
                }
                prods.push((d, c));
            }
        }
        prods.sort_by_key(|(d, _)| *d);
        let mut terms: Vec<(u64, Gaussian)> = Vec::with_capacity(prods.len());
        for (d, c) in prods {
            match terms.last_mut() {
                Some((ld, lc)) if *ld == d => *lc = &*lc + &c,
                _ => terms.push((d, c)),
            }
        }
        Scalar::from_sorted(terms)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(d, g)| (*d, -g)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

fn fmt_coeff(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (d, g)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match (g.re.is_zero(), g.im.is_zero()) {
                (false, true) => fmt_coeff(f, &g.re)?,
                (true, false) => {
                    fmt_coeff(f, &g.im)?;
                    f.write_str("i")?;
                }
                _ => {
                    f.write_str("(")?;
                    fmt_coeff(f, &g.re)?;
                    f.write_str(" + ")?;
                    fmt_coeff(f, &g.im)?;
                    f.write_str("i)")?;
                }
            }
            if *d != 1 {
                write!(f, "*sqrt({})", d)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: u64) -> Scalar {
        Scalar::sqrt_int(k)
    }

    #[test]
    fn addition_collects_like_radicals() {
        assert_eq!(&s(2) + &s(2), &Scalar::from_int(2) * &s(2));
        assert!((&s(2) + &(-&s(2))).is_zero());
        let a = &Scalar::ratio(1, 2).unwrap() + &(&Scalar::i() * &s(3));
        let b = Scalar::ratio(1, 2).unwrap();
        assert_eq!(&a + &b, &Scalar::one() + &(&Scalar::i() * &s(3)));
    }

    #[test]
    fn radical_product_rule() {
        assert_eq!(&s(2) * &s(6), &Scalar::from_int(2) * &s(3));
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        let p = &(&s(6) - &s(2)) * &(&s(6) + &s(2));
        assert_eq!(p, Scalar::from_int(4));
    }

    #[test]
    fn inverses() {
        assert_eq!(
            s(2).inverse().unwrap(),
            s(2).scale_rational(&Rational::new(1, 2).unwrap())
        );
        let a = &s(6) - &s(2);
        let expected = (&s(6) + &s(2)).scale_rational(&Rational::new(1, 4).unwrap());
        assert_eq!(a.inverse().unwrap(), expected);
        let one_plus_i = &Scalar::one() + &Scalar::i();
        let expected =
            (&Scalar::one() - &Scalar::i()).scale_rational(&Rational::new(1, 2).unwrap());
        assert_eq!(one_plus_i.inverse().unwrap(), expected);
        assert_eq!(Scalar::zero().inverse(), Err(Error::ZeroDivision));
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_rational(&Rational::from_integer(2)).unwrap(), s(2));
        assert_eq!(
            sqrt_rational(&Rational::from_integer(12)).unwrap(),
            &Scalar::from_int(2) * &s(3)
        );
        let r = sqrt_rational(&Rational::new(2, 3).unwrap()).unwrap();
        assert_eq!(r, s(6).scale_rational(&Rational::new(1, 3).unwrap()));
        assert_eq!(r.square(), Scalar::ratio(2, 3).unwrap());
        assert_eq!(
            sqrt_rational(&Rational::from_integer(-1)),
            Err(Error::NegativeRadicand)
        );
    }

    #[test]
    fn small_rationals_promote_on_overflow() {
        let big = Rational::from_integer(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = &sq * &big.inverse().unwrap();
        assert_eq!(back, big);
        assert_eq!(-Rational::from_integer(i64::MIN), {
            let q: Rational = "9223372036854775808".parse().unwrap();
            q
        });
        assert_eq!(
            "-6/4".parse::<Rational>().unwrap(),
            Rational::new(-3, 2).unwrap()
        );
    }

    #[test]
    fn from_terms_reduces_radicands() {
        let x = Scalar::from_terms([(8, Gaussian::real(Rational::one()))]).unwrap();
        assert_eq!(x, &Scalar::from_int(2) * &s(2));
    }
}
