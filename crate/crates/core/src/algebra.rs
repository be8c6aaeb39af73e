//! Elements of `S_n` in the normal form `sum coeff * w * c_{b_1} ... c_{b_k}`, `b_1 < ... < b_k`.
//!
//! Relations: `c_a^2 = -1`, `c_a c_b = -c_b c_a`, `w c_b w^{-1} = c_{w(b)}`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::perm::Permutation;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Largest supported `n`; permutations are packed four bits per entry.
pub const MAX_N: usize = 16;

const IDENTITY_PACKED: u64 = {
    let mut p = 0u64;
    let mut a = 0;
    while a < MAX_N {
        p |= (a as u64) << (4 * (MAX_N - 1 - a));
        a += 1;
    }
    p
};

/// A basis word `(w, c^mask)`.
///
/// `w` is stored as a permutation of `1..=16` fixing everything beyond `n`, so one word is
/// valid in every `S_m` with `m >= n`. The derived order is lexicographic on the one-line
/// form of `w`, then by mask value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    perm: u64,
    mask: u32,
}

type Images = [u8; MAX_N];

impl Word {
    pub const IDENTITY: Word = Word {
        perm: IDENTITY_PACKED,
        mask: 0,
    };

    pub fn new(w: &Permutation, mask: u32) -> Word {
        let mut images = identity_images();
        for (a, &v) in w.images().iter().enumerate() {
            images[a] = (v - 1) as u8;
        }
        Word {
            perm: pack(&images),
            mask,
        }
    }

    pub fn clifford(mask: u32) -> Word {
        Word {
            perm: IDENTITY_PACKED,
            mask,
        }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// `w(a)`, 1-based.
    pub fn image(&self, a: usize) -> usize {
        ((self.perm >> (4 * (MAX_N - a))) & 0xf) as usize + 1
    }

    pub fn permutation(&self, n: usize) -> Permutation {
        Permutation::from_images((1..=n).map(|a| self.image(a)).collect())
            .expect("packed permutation")
    }

    /// Largest index moved by `w` or used by the mask.
    pub fn support(&self) -> usize {
        let moved = (1..=MAX_N).rev().find(|&a| self.image(a) != a).unwrap_or(0);
        let used = 32 - self.mask.leading_zeros() as usize;
        moved.max(used)
    }

    pub fn is_even(&self) -> bool {
        self.mask.count_ones().is_multiple_of(2)
    }

    /// Product of basis words; the boolean is set when the result carries a minus sign.
    pub fn mul(&self, rhs: &Word) -> (Word, bool) {
        let l = unpack(self.perm);
        let r = unpack(rhs.perm);
        let rinv = invert(&r);
        mul_unpacked(&l, self.mask, &r, &rinv, rhs.mask)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support().max(1);
        write!(f, "{:?}", self.permutation(n))?;
        for b in 0..32 {
            if self.mask >> b & 1 == 1 {
                write!(f, "c{}", b + 1)?;
            }
        }
        Ok(())
    }
}

fn identity_images() -> Images {
    let mut images = [0u8; MAX_N];
    for (a, v) in images.iter_mut().enumerate() {
        *v = a as u8;
    }
    images
}

fn pack(images: &Images) -> u64 {
    images.iter().fold(0u64, |acc, &v| acc << 4 | v as u64)
}

fn unpack(p: u64) -> Images {
    let mut images = [0u8; MAX_N];
    for (a, v) in images.iter_mut().enumerate() {
        *v = ((p >> (4 * (MAX_N - 1 - a))) & 0xf) as u8;
    }
    images
}

fn invert(w: &Images) -> Images {
    let mut inv = [0u8; MAX_N];
    for (a, &v) in w.iter().enumerate() {
        inv[v as usize] = a as u8;
    }
    inv
}

/// `(w1 c^{m1})(w2 c^{m2}) = w1 w2 c^{w2^{-1}(m1)} c^{m2}`.
#[inline]
fn mul_unpacked(l: &Images, m1: u32, r: &Images, rinv: &Images, m2: u32) -> (Word, bool) {
    let mut images = [0u8; MAX_N];
    for a in 0..MAX_N {
        images[a] = l[r[a] as usize];
    }
    // relabel c^{m1} by w2^{-1}, counting the transpositions needed to re-sort
    let mut sign = false;
    let mut conj = 0u32;
    let mut rest = m1;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let img = rinv[b] as u32;
        // letters already placed with a larger index must be jumped over
        sign ^= (conj >> img).count_ones() & 1 == 1;
        conj |= 1 << img;
    }
    (
        Word {
            perm: pack(&images),
            mask: conj ^ m2,
        },
        sign ^ clifford_sign(conj, m2),
    )
}

/// Sign of `c^A c^B = +/- c^{A xor B}`: one factor `-1` per pair `a > b` and per common index.
#[inline]
fn clifford_sign(a: u32, b: u32) -> bool {
    let mut parity = (a & b).count_ones();
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        parity += (a >> j >> 1).count_ones();
    }
    parity & 1 == 1
}

/// All `2^n n!` basis words of `S_n` in increasing order.
pub fn basis_words(n: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity((1usize << n) * (1..=n).product::<usize>());
    for w in Permutation::all(n) {
        for mask in 0..1u32 << n {
            out.push(Word::new(&w, mask));
        }
    }
    out
}

/// Grading of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// A finite linear combination of basis words of `S_n`, sorted by word, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    n: usize,
    terms: Vec<(Word, Scalar)>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: Vec::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, s: Scalar) -> Self {
        Self::from_word(n, Word::IDENTITY, s)
    }

    pub fn from_word(n: usize, w: Word, s: Scalar) -> Self {
        let terms = if s.is_zero() {
            Vec::new()
        } else {
            alloc::vec![(w, s)]
        };
        AlgebraElement { n, terms }
    }

    /// Collects arbitrary `(word, coefficient)` pairs into normal form.
    pub fn from_terms(n: usize, terms: Vec<(Word, Scalar)>) -> Result<Self> {
        for (w, _) in &terms {
            if w.support() > n {
                return Err(Error::Invalid(alloc::format!(
                    "word {:?} does not lie in S_{}",
                    w,
                    n
                )));
            }
        }
        Ok(AlgebraElement {
            n,
            terms: collect(terms),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Word, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        match self.terms.binary_search_by(|(v, _)| v.cmp(w)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// The same element viewed in `S_m`, `m >= n`.
    pub fn embed(&self, m: usize) -> Self {
        assert!(
            m >= self.n && m <= MAX_N,
            "cannot embed S_{} into S_{}",
            self.n,
            m
        );
        AlgebraElement {
            n: m,
            terms: self.terms.clone(),
        }
    }

    pub fn parity(&self) -> Parity {
        let even = self.terms.iter().filter(|(w, _)| w.is_even()).count();
        if even == self.terms.len() {
            Parity::Even
        } else if even == 0 {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (*w, c * s)).collect(),
        }
    }

    pub fn multiply(&self, rhs: &AlgebraElement) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        let lhs: Vec<Images> = self.terms.iter().map(|(w, _)| unpack(w.perm)).collect();
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (w2, s2) in &rhs.terms {
            let r = unpack(w2.perm);
            let rinv = invert(&r);
            let unit = if s2.is_one() {
                Some(false)
            } else if (-s2).is_one() {
                Some(true)
            } else {
                None
            };
            for ((w1, s1), l) in self.terms.iter().zip(&lhs) {
                let (w, neg) = mul_unpacked(l, w1.mask, &r, &rinv, w2.mask);
                let c = match unit {
                    Some(u) if u == neg => s1.clone(),
                    Some(_) => -s1,
                    None if neg => -(s1 * s2),
                    None => s1 * s2,
                };
                out.push((w, c));
            }
        }
        Ok(AlgebraElement {
            n: self.n,
            terms: collect(out),
        })
    }

    /// The anti-involution reversing words in the generators `s_a`, `c_a`.
    pub fn star(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, s)| {
                // (w c^m)^* = rev(c^m) w^{-1} = (-1)^{k(k-1)/2} c^m w^{-1}
                let k = w.mask.count_ones();
                let inv = Word {
                    perm: pack(&invert(&unpack(w.perm))),
                    mask: 0,
                };
                let (v, neg) = Word::clifford(w.mask).mul(&inv);
                let flip = neg ^ ((k * (k.saturating_sub(1)) / 2) % 2 == 1);
                (v, if flip { -s } else { s.clone() })
            })
            .collect();
        AlgebraElement {
            n: self.n,
            terms: collect(terms),
        }
    }

    /// Supercommutator `[a, b] = ab - (-1)^{|a||b|} ba` for homogeneous `a`, `b`.
    pub fn supercommutator(&self, rhs: &AlgebraElement) -> Result<Self> {
        let ab = self.multiply(rhs)?;
        let ba = rhs.multiply(self)?;
        let odd_odd = self.parity() == Parity::Odd && rhs.parity() == Parity::Odd;
        Ok(if odd_odd { &ab + &ba } else { &ab - &ba })
    }

    /// Coordinates with respect to `basis`, which must be sorted and contain every word.
    pub fn to_dense(&self, basis: &[Word]) -> Vec<Scalar> {
        let mut v = alloc::vec![Scalar::zero(); basis.len()];
        for (w, s) in &self.terms {
            let k = basis.binary_search(w).expect("word outside the basis");
            v[k] = s.clone();
        }
        v
    }

    /// Reinterprets the element in `S_m` for `m < n`; fails if a word involves indices above `m`.
    pub fn restrict(&self, m: usize) -> Result<Self> {
        if let Some((w, _)) = self.terms.iter().find(|(w, _)| w.support() > m) {
            return Err(Error::Invalid(alloc::format!(
                "word {:?} does not lie in S_{}",
                w,
                m
            )));
        }
        Ok(AlgebraElement {
            n: m,
            terms: self.terms.clone(),
        })
    }

    /// Coefficient of the identity word.
    pub fn identity_coeff(&self) -> Scalar {
        self.coeff(&Word::IDENTITY)
    }

    fn combine(&self, rhs: &AlgebraElement, negate: bool) -> Self {
        assert_eq!(self.n, rhs.n, "elements of different S_n");
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => core::cmp::Ordering::Less,
                _ => core::cmp::Ordering::Greater,
            };
            match ord {
                core::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        AlgebraElement {
            n: self.n,
            terms: out,
        }
    }
}

fn collect(mut terms: Vec<(Word, Scalar)>) -> Vec<(Word, Scalar)> {
    terms.sort_unstable_by_key(|x| x.0);
    let mut out: Vec<(Word, Scalar)> = Vec::with_capacity(terms.len());
    for (w, s) in terms {
        match out.last_mut() {
            Some((v, acc)) if *v == w => *acc += &s,
            _ => out.push((w, s)),
        }
    }
    out.retain(|(_, s)| !s.is_zero());
    out
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.combine(rhs, false)
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.combine(rhs, true)
    }
}

/// Panics when the operands live in different `S_n`; see [`AlgebraElement::multiply`].
impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs).expect("operands in the same S_n")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, s)| (*w, -s)).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, s)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*", s)?;
            let p = w.permutation(self.n.max(1));
            write!(f, "{:?}", p)?;
            for b in 0..self.n {
                if w.mask >> b & 1 == 1 {
                    write!(f, "c{}", b + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}[{}]", self.n, self)
    }
}

/// Named elements of `S_n`: generators, spin transpositions and Jucys-Murphy elements.
#[derive(Clone, Debug)]
pub struct Sergeev {
    n: usize,
    t: Vec<AlgebraElement>,
    /// `t_ab` for `a < b`, row-major over `a`.
    t_ab: Vec<AlgebraElement>,
    m: Vec<AlgebraElement>,
    x: Vec<AlgebraElement>,
}

impl Sergeev {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Invalid(alloc::format!(
                "n = {} outside 1..={}",
                n,
                MAX_N
            )));
        }
        let mut g = Sergeev {
            n,
            t: Vec::new(),
            t_ab: Vec::new(),
            m: Vec::new(),
            x: Vec::new(),
        };
        let inv_sqrt2 = Scalar::sqrt_int(2).inverse()?;
        for a in 1..n {
            let y = (&g.gen_c(a + 1)? - &g.gen_c(a)?).scale(&inv_sqrt2);
            g.t.push(&y * &g.gen_s(a)?);
        }
        for a in 1..=n {
            for b in a + 1..=n {
                // t_ab = (-1)^{b-a-1} t_{b-1} ... t_{a+1} t_a t_{a+1} ... t_{b-1}
                let mut e = g.t[a - 1].clone();
                for k in a + 1..b {
                    e = &(&g.t[k - 1] * &e) * &g.t[k - 1];
                }
                if (b - a - 1) % 2 == 1 {
                    e = -&e;
                }
                g.t_ab.push(e);
            }
        }
        let sqrt2 = Scalar::sqrt_int(2);
        for a in 1..=n {
            let mut m = AlgebraElement::zero(n);
            for k in 1..a {
                m = &m + &g.gen_t_ab(k, a)?;
            }
            let x = (&m * &g.gen_c(a)?).scale(&sqrt2);
            g.m.push(m);
            g.x.push(x);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, a: usize, max: usize) -> Result<()> {
        if a == 0 || a > max {
            Err(Error::IndexOutOfRange {
                index: a,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(self.n)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.n)
    }

    pub fn scalar(&self, s: Scalar) -> AlgebraElement {
        AlgebraElement::scalar(self.n, s)
    }

    pub fn perm(&self, w: &Permutation) -> AlgebraElement {
        AlgebraElement::from_word(self.n, Word::new(w, 0), Scalar::one())
    }

    /// `s_a = (a, a+1)`.
    pub fn gen_s(&self, a: usize) -> Result<AlgebraElement> {
        self.check(a, self.n - 1)?;
        Ok(self.perm(&Permutation::simple(self.n, a)))
    }

    /// `c_a`.
    pub fn gen_c(&self, a: usize) -> Result<AlgebraElement> {
        self.check(a, self.n)?;
        Ok(AlgebraElement::from_word(
            self.n,
            Word::clifford(1 << (a - 1)),
            Scalar::one(),
        ))
    }

    /// The Clifford monomial `c^mask` (ascending order).
    pub fn clifford(&self, mask: u32) -> AlgebraElement {
        AlgebraElement::from_word(self.n, Word::clifford(mask), Scalar::one())
    }

    /// `t_a = y_a s_a` with `y_a = (c_{a+1} - c_a)/sqrt 2`.
    pub fn gen_t(&self, a: usize) -> Result<AlgebraElement> {
        self.check(a, self.n - 1)?;
        Ok(self.t[a - 1].clone())
    }

    pub fn gen_t_ab(&self, a: usize, b: usize) -> Result<AlgebraElement> {
        self.check(a, self.n)?;
        self.check(b, self.n)?;
        if a == b {
            return Err(Error::Invalid(alloc::format!(
                "t_ab needs a != b, got {} = {}",
                a,
                b
            )));
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let idx = (lo - 1) * self.n - (lo - 1) * lo / 2 + (hi - lo - 1);
        let e = &self.t_ab[idx];
        Ok(if a < b { e.clone() } else { -e })
    }

    /// Odd Jucys-Murphy element `m_a = t_{1a} + ... + t_{a-1,a}`.
    pub fn jm_m(&self, a: usize) -> Result<AlgebraElement> {
        self.check(a, self.n)?;
        Ok(self.m[a - 1].clone())
    }

    /// Even Jucys-Murphy element `x_a = sqrt 2 m_a c_a`.
    pub fn jm_x(&self, a: usize) -> Result<AlgebraElement> {
        self.check(a, self.n)?;
        Ok(self.x[a - 1].clone())
    }

    pub fn jm_x_ref(&self, a: usize) -> &AlgebraElement {
        &self.x[a - 1]
    }

    /// `x_{rn} = sqrt 2 (t_{1n} + ... + t_{rn}) c_n`; `x_{n-1,n} = x_n`.
    pub fn gen_jm_x(&self, r: usize) -> Result<AlgebraElement> {
        self.check(r, self.n - 1)?;
        let mut m = self.zero();
        for k in 1..=r {
            m = &m + &self.gen_t_ab(k, self.n)?;
        }
        Ok((&m * &self.gen_c(self.n)?).scale(&Scalar::sqrt_int(2)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> Sergeev {
        Sergeev::new(n).unwrap()
    }

    #[test]
    fn packing_round_trips() {
        for w in Permutation::all(4) {
            let word = Word::new(&w, 0b101);
            assert_eq!(word.permutation(4), w);
            assert_eq!(word.mask(), 0b101);
        }
        assert!(Word::new(&Permutation::identity(5), 0) == Word::IDENTITY);
    }

    #[test]
    fn word_order_is_lexicographic() {
        let mut words: Vec<Word> = Permutation::all(4)
            .iter()
            .map(|w| Word::new(w, 0))
            .collect();
        let sorted = words.clone();
        words.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn clifford_relations() {
        let g = g(3);
        let c1 = g.gen_c(1).unwrap();
        let c2 = g.gen_c(2).unwrap();
        assert_eq!(&c1 * &c1, -&g.one());
        assert_eq!(&c1 * &c2, -&(&c2 * &c1));
        assert_eq!(&(&c2 * &c1) * &c2, c1.clone());
    }

    #[test]
    fn mixed_relation() {
        let g = g(3);
        for a in 1..3 {
            let s = g.gen_s(a).unwrap();
            let lhs = &s * &g.gen_c(a).unwrap();
            let rhs = &g.gen_c(a + 1).unwrap() * &s;
            assert_eq!(lhs, rhs);
            let w = Permutation::simple(3, a);
            for b in 1..=3 {
                let conj = &(&s * &g.gen_c(b).unwrap()) * &s;
                assert_eq!(conj, g.gen_c(w.apply(b)).unwrap());
            }
        }
    }

    #[test]
    fn spin_relations() {
        let g = g(4);
        let t: Vec<_> = (1..4).map(|a| g.gen_t(a).unwrap()).collect();
        for ta in &t {
            assert_eq!(ta * ta, g.one());
            assert_eq!(ta.parity(), Parity::Odd);
        }
        assert!((&(&t[0] * &t[2]) + &(&t[2] * &t[0])).is_zero());
        for a in 0..2 {
            let l = &(&t[a] * &t[a + 1]) * &t[a];
            let r = &(&t[a + 1] * &t[a]) * &t[a + 1];
            assert_eq!(l, r);
        }
    }

    #[test]
    fn t_ab_values() {
        let g = g(4);
        assert_eq!(g.gen_t_ab(2, 3).unwrap(), g.gen_t(2).unwrap());
        let t1 = g.gen_t(1).unwrap();
        let t2 = g.gen_t(2).unwrap();
        assert_eq!(g.gen_t_ab(1, 3).unwrap(), -&(&(&t2 * &t1) * &t2));
        assert_eq!(g.gen_t_ab(3, 1).unwrap(), &(&t2 * &t1) * &t2);
        for a in 1..=4 {
            for b in 1..=4 {
                if a != b {
                    let t = g.gen_t_ab(a, b).unwrap();
                    assert_eq!(&t * &t, g.one());
                }
            }
        }
    }

    #[test]
    fn jucys_murphy_small() {
        let g = g(3);
        assert!(g.jm_x(1).unwrap().is_zero());
        let x2 = g.jm_x(2).unwrap();
        assert_eq!(&x2 * &x2, g.scalar(Scalar::from_int(2)));
        let x3 = g.jm_x(3).unwrap();
        assert_eq!(&(&x3 * &x3) * &x3, x3.scale(&Scalar::from_int(6)));
        assert_eq!(g.gen_jm_x(2).unwrap(), x3);
    }

    #[test]
    fn jucys_murphy_commute() {
        let g = g(4);
        for a in 1..=4 {
            for b in 1..=4 {
                let xa = g.jm_x(a).unwrap();
                let xb = g.jm_x(b).unwrap();
                assert_eq!(&xa * &xb, &xb * &xa);
            }
        }
    }

    #[test]
    fn star_basics() {
        let g = g(3);
        assert_eq!(g.gen_s(1).unwrap().star(), g.gen_s(1).unwrap());
        assert_eq!(g.gen_c(2).unwrap().star(), g.gen_c(2).unwrap());
        assert_eq!(g.gen_t(1).unwrap().star(), -&g.gen_t(1).unwrap());
        let a = &g.gen_c(1).unwrap() * &g.gen_s(2).unwrap();
        let b = &(&g.gen_c(3).unwrap() * &g.gen_c(2).unwrap()) * &g.gen_s(1).unwrap();
        assert_eq!((&a * &b).star(), &b.star() * &a.star());
    }

    #[test]
    fn size_mismatch() {
        let a = AlgebraElement::one(2);
        let b = AlgebraElement::one(3);
        assert_eq!(a.multiply(&b), Err(Error::SizeMismatch(2, 3)));
        assert!(g(3).gen_s(3).is_err());
        assert!(g(3).gen_c(4).is_err());
    }
}
