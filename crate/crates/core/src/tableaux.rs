//! Strict partitions, shifted diagrams and standard (barred) shifted tableaux.
//!
//! Boxes are `(row, column)` pairs, 1-based, with row `i` of a strict partition occupying
//! columns `i ..= i + lambda_i - 1`. The content of box `(i, j)` is `j - i`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::perm::Permutation;
use crate::scalar::{Rational, Scalar};
use crate::{Error, Result};

pub type Box2 = (usize, usize);

/// A strict partition `lambda_1 > lambda_2 > ... > lambda_l > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invalid(alloc::format!(
                "not a strict partition: {:?}",
                parts
            )));
        }
        if !parts.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::Invalid(alloc::format!(
                "parts not strictly decreasing: {:?}",
                parts
            )));
        }
        Ok(StrictPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The length `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, (i, j): Box2) -> bool {
        i >= 1 && i <= self.len() && j >= i && j < i + self.parts[i - 1]
    }

    /// All boxes in row-reading order.
    pub fn boxes(&self) -> Vec<Box2> {
        let mut out = Vec::with_capacity(self.n());
        for (r, &p) in self.parts.iter().enumerate() {
            let i = r + 1;
            out.extend((i..i + p).map(|j| (i, j)));
        }
        out
    }

    pub fn non_diagonal_boxes(&self) -> Vec<Box2> {
        self.boxes().into_iter().filter(|(i, j)| i != j).collect()
    }

    /// Boxes whose addition leaves a strict partition, top row first.
    pub fn addable_boxes(&self) -> Vec<Box2> {
        let mut out = Vec::new();
        for (r, &p) in self.parts.iter().enumerate() {
            if r == 0 || self.parts[r - 1] > p + 1 {
                out.push((r + 1, r + 1 + p));
            }
        }
        let l = self.len();
        if self.parts[l - 1] >= 2 {
            out.push((l + 1, l + 1));
        }
        out
    }

    /// The partition obtained by adding `bx`, which must be addable.
    pub fn with_box(&self, bx: Box2) -> StrictPartition {
        let mut parts = self.parts.clone();
        if bx.0 > parts.len() {
            parts.push(1);
        } else {
            parts[bx.0 - 1] += 1;
        }
        StrictPartition { parts }
    }

    /// The number of standard shifted tableaux, by the product formula
    /// `n! / (prod lambda_i!) * prod_{i<j} (lambda_i - lambda_j) / (lambda_i + lambda_j)`.
    pub fn g_lambda_formula(&self) -> Result<u64> {
        let fact = |k: usize| (1..=k).fold(BigInt::one(), |acc, v| acc * BigInt::from(v));
        let mut num = fact(self.n());
        let mut den = BigInt::one();
        for &p in &self.parts {
            den *= fact(p);
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                num *= BigInt::from(self.parts[i] - self.parts[j]);
                den *= BigInt::from(self.parts[i] + self.parts[j]);
            }
        }
        if !(&num % &den).is_zero() {
            return Err(Error::Internal(alloc::format!(
                "g_lambda for {:?} is not integral",
                self.parts
            )));
        }
        (num / den)
            .to_u64()
            .ok_or_else(|| Error::Internal(String::from("g_lambda overflows u64")))
    }

    /// `dim U^lambda = 2^(n - floor(l/2)) g_lambda`.
    pub fn dim_sergeev_simple(&self) -> Result<u64> {
        Ok((1u64 << (self.n() - self.len() / 2)) * self.g_lambda_formula()?)
    }

    /// `dim V^lambda = 2^ceil((n - l)/2) g_lambda`.
    pub fn dim_spin_simple(&self) -> Result<u64> {
        Ok((1u64 << (self.n() - self.len()).div_ceil(2)) * self.g_lambda_formula()?)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Invalid(alloc::format!("bad partition {:?}", s)))?;
        StrictPartition::new(parts)
    }
}

/// All strict partitions of `n`, lexicographically decreasing.
pub fn enumerate_strict_partitions(n: usize) -> Vec<StrictPartition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(StrictPartition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A bijective filling of a shifted diagram by `1..n`, with optional bars on entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<usize>>,
    /// `bars[a - 1]` is set when entry `a` carries a bar.
    bars: Vec<bool>,
    /// `pos[a - 1]` is the box of entry `a`.
    pos: Vec<Box2>,
}

impl ShiftedTableau {
    /// Builds a tableau from its rows and the set of barred entries.
    pub fn new(rows: Vec<Vec<usize>>, barred: &[usize]) -> Result<Self> {
        let shape = StrictPartition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.n();
        let mut pos = alloc::vec![(0, 0); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &a) in row.iter().enumerate() {
                if a == 0 || a > n || pos[a - 1] != (0, 0) {
                    return Err(Error::Invalid(alloc::format!(
                        "entries are not a bijection onto 1..{}",
                        n
                    )));
                }
                pos[a - 1] = (r + 1, r + 1 + c);
            }
        }
        let mut bars = alloc::vec![false; n];
        for &a in barred {
            if a == 0 || a > n {
                return Err(Error::IndexOutOfRange { index: a, n });
            }
            let (i, j) = pos[a - 1];
            if i == j {
                return Err(Error::BarOnDiagonal(i));
            }
            bars[a - 1] = true;
        }
        Ok(ShiftedTableau {
            shape,
            rows,
            bars,
            pos,
        })
    }

    fn from_parts(shape: StrictPartition, rows: Vec<Vec<usize>>, bars: Vec<bool>) -> Self {
        let mut pos = alloc::vec![(0, 0); shape.n()];
        for (r, row) in rows.iter().enumerate() {
            for (c, &a) in row.iter().enumerate() {
                pos[a - 1] = (r + 1, r + 1 + c);
            }
        }
        ShiftedTableau {
            shape,
            rows,
            bars,
            pos,
        }
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.bars.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry_at(&self, (i, j): Box2) -> usize {
        self.rows[i - 1][j - i]
    }

    pub fn box_of(&self, a: usize) -> Box2 {
        self.pos[a - 1]
    }

    pub fn is_barred(&self, a: usize) -> bool {
        self.bars[a - 1]
    }

    pub fn barred_entries(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&a| self.bars[a - 1]).collect()
    }

    pub fn is_diagonal(&self, a: usize) -> bool {
        let (i, j) = self.pos[a - 1];
        i == j
    }

    /// Content `sigma_a = j - i` of the box holding `a`.
    pub fn content(&self, a: usize) -> usize {
        let (i, j) = self.pos[a - 1];
        j - i
    }

    /// `kappa_a^2 = sigma_a (sigma_a + 1)`.
    pub fn kappa_squared(&self, a: usize) -> i64 {
        let s = self.content(a) as i64;
        s * (s + 1)
    }

    /// Signed content `kappa_a = +/- sqrt(sigma (sigma + 1))`, negative iff `a` is barred.
    pub fn signed_content(&self, a: usize) -> Scalar {
        let k = Scalar::sqrt_int(self.kappa_squared(a) as u64);
        if self.is_barred(a) {
            -k
        } else {
            k
        }
    }

    /// `kappa_1, ..., kappa_n`.
    pub fn kappa_vector(&self) -> Vec<Scalar> {
        (1..=self.n()).map(|a| self.signed_content(a)).collect()
    }

    /// Diagonal entries `d_1 < ... < d_l` (one per row).
    pub fn diagonal_entries(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    pub fn is_standard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
            if r + 1 < self.rows.len() {
                let i = r + 1;
                for (c, &below) in self.rows[r + 1].iter().enumerate() {
                    let j = i + 1 + c;
                    if self.shape.contains((i, j)) && self.entry_at((i, j)) > below {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Entries read row by row, top row first.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The same filling with every bar removed.
    pub fn unbarred(&self) -> ShiftedTableau {
        Self::from_parts(
            self.shape.clone(),
            self.rows.clone(),
            alloc::vec![false; self.n()],
        )
    }

    /// The same filling with bars exactly on the boxes of `boxes`.
    pub fn with_barred_boxes(&self, boxes: &[Box2]) -> Result<ShiftedTableau> {
        let barred: Vec<usize> = boxes.iter().map(|&b| self.entry_at(b)).collect();
        ShiftedTableau::new(self.rows.clone(), &barred)
    }

    /// Boxes holding barred entries, in row order.
    pub fn barred_boxes(&self) -> Vec<Box2> {
        self.shape
            .boxes()
            .into_iter()
            .filter(|&b| self.bars[self.entry_at(b) - 1])
            .collect()
    }

    /// Toggles the bar of a non-diagonal entry.
    pub fn toggle_bar(&self, a: usize) -> Result<ShiftedTableau> {
        if self.is_diagonal(a) {
            return Err(Error::BarOnDiagonal(self.pos[a - 1].0));
        }
        let mut t = self.clone();
        t.bars[a - 1] = !t.bars[a - 1];
        Ok(t)
    }

    /// `w T`: the entry `a` (or `a` barred) of box `alpha` becomes `w(a)` (resp. barred).
    pub fn act(&self, w: &Permutation) -> ShiftedTableau {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&a| w.apply(a)).collect())
            .collect();
        let mut bars = alloc::vec![false; self.n()];
        for a in 1..=self.n() {
            bars[w.apply(a) - 1] = self.bars[a - 1];
        }
        Self::from_parts(self.shape.clone(), rows, bars)
    }

    /// `s_a T`, swapping the entries `a` and `a + 1`.
    pub fn swap(&self, a: usize) -> ShiftedTableau {
        self.act(&Permutation::simple(self.n(), a))
    }

    /// The tableau with the box of `n` removed, or `None` for a single box.
    pub fn remove_max(&self) -> Option<ShiftedTableau> {
        let n = self.n();
        if n <= 1 {
            return None;
        }
        let (i, _) = self.pos[n - 1];
        let mut rows = self.rows.clone();
        rows[i - 1].pop();
        if rows[i - 1].is_empty() {
            rows.pop();
        }
        let shape = StrictPartition {
            parts: rows.iter().map(Vec::len).collect(),
        };
        let mut bars = self.bars.clone();
        bars.pop();
        Some(Self::from_parts(shape, rows, bars))
    }

    /// The restriction to entries `1..=k`.
    pub fn restrict(&self, k: usize) -> ShiftedTableau {
        let mut t = self.clone();
        while t.n() > k {
            t = t.remove_max().expect("k >= 1");
        }
        t
    }

    fn add_box(&self, bx: Box2, barred: bool) -> ShiftedTableau {
        let mut rows = self.rows.clone();
        let n = self.n() + 1;
        if bx.0 > rows.len() {
            rows.push(alloc::vec![n]);
        } else {
            rows[bx.0 - 1].push(n);
        }
        let mut bars = self.bars.clone();
        bars.push(barred);
        Self::from_parts(self.shape.with_box(bx), rows, bars)
    }

    /// Bar flags in row-reading order, used for deterministic ordering.
    fn bar_word(&self) -> Vec<bool> {
        self.row_word().iter().map(|&a| self.bars[a - 1]).collect()
    }

    /// The one-box tableau.
    pub fn single() -> ShiftedTableau {
        ShiftedTableau::new(alloc::vec![alloc::vec![1]], &[]).expect("valid")
    }
}

/// Enumeration order: shapes lexicographically decreasing, then row word, then bars in
/// row-reading order (unbarred first).
impl Ord for ShiftedTableau {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        other
            .shape
            .cmp(&self.shape)
            .then_with(|| self.row_word().cmp(&other.row_word()))
            .then_with(|| self.bar_word().cmp(&other.bar_word()))
    }
}

impl PartialOrd for ShiftedTableau {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ShiftedTableau {
    /// Text form: rows separated by `/`, entries by `,`, a barred entry suffixed with `b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for (c, &a) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", a)?;
                if self.bars[a - 1] {
                    f.write_str("b")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({})", self)
    }
}

impl FromStr for ShiftedTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(alloc::format!("bad tableau text {:?}", s));
        let mut rows = Vec::new();
        let mut barred = Vec::new();
        for row in s.trim().split('/') {
            let mut entries = Vec::new();
            for tok in row.split(',') {
                let tok = tok.trim();
                let (digits, bar) = match tok.strip_suffix('b') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                let a: usize = digits.parse().map_err(|_| bad())?;
                if bar {
                    barred.push(a);
                }
                entries.push(a);
            }
            rows.push(entries);
        }
        ShiftedTableau::new(rows, &barred)
    }
}

/// All standard shifted `lambda`-tableaux; with `barred`, every admissible bar decoration.
///
/// Ordered by row word, then by bar flags in row-reading order (unbarred first).
pub fn enumerate_standard_tableaux(shape: &StrictPartition, barred: bool) -> Vec<ShiftedTableau> {
    fn grow(t: &ShiftedTableau, target: &StrictPartition, out: &mut Vec<ShiftedTableau>) {
        if t.n() == target.n() {
            out.push(t.clone());
            return;
        }
        for bx in t.shape.addable_boxes() {
            if target.contains(bx) {
                grow(&t.add_box(bx, false), target, out);
            }
        }
    }
    let mut plain = Vec::new();
    grow(&ShiftedTableau::single(), shape, &mut plain);
    plain.sort_by_key(|t| t.row_word());
    if !barred {
        return plain;
    }
    let mut out = Vec::new();
    for t in plain {
        let free: Vec<usize> = t
            .row_word()
            .into_iter()
            .filter(|&a| !t.is_diagonal(a))
            .collect();
        let k = free.len();
        let mut decorated: Vec<ShiftedTableau> = (0..1usize << k)
            .map(|mask| {
                let mut u = t.clone();
                for (bit, &a) in free.iter().enumerate() {
                    u.bars[a - 1] = mask >> bit & 1 == 1;
                }
                u
            })
            .collect();
        decorated.sort_by_key(|u| u.bar_word());
        out.extend(decorated);
    }
    out
}

/// All standard barred tableaux with `n` boxes, shapes in partition order.
pub fn all_barred_tableaux(n: usize) -> Vec<ShiftedTableau> {
    enumerate_strict_partitions(n)
        .iter()
        .flat_map(|l| enumerate_standard_tableaux(l, true))
        .collect()
}

pub fn signed_content(t: &ShiftedTableau, a: usize) -> Scalar {
    t.signed_content(a)
}

/// Signed contents available at the addable boxes of `mu`: two (`+/-`) per non-diagonal box,
/// one (zero) per diagonal box.
pub fn addable_signed_contents(mu: &StrictPartition) -> Vec<(Box2, Scalar)> {
    let mut out = Vec::new();
    for (i, j) in mu.addable_boxes() {
        let s = (j - i) as u64;
        if i == j {
            out.push(((i, j), Scalar::zero()));
        } else {
            let k = Scalar::sqrt_int(s * (s + 1));
            out.push(((i, j), k.clone()));
            out.push(((i, j), -k));
        }
    }
    out
}

/// The row tableau `R^{lambda, beta}`: `1..n` written row by row, bars on the boxes `beta`.
pub fn row_tableau(shape: &StrictPartition, beta: &[Box2]) -> Result<ShiftedTableau> {
    let mut rows = Vec::new();
    let mut next = 1;
    for &p in shape.parts() {
        rows.push((next..next + p).collect::<Vec<_>>());
        next += p;
    }
    let t = ShiftedTableau::new(rows, &[])?;
    for &(i, j) in beta {
        if !shape.contains((i, j)) {
            return Err(Error::Invalid(alloc::format!(
                "box ({}, {}) not in shape",
                i,
                j
            )));
        }
        if i == j {
            return Err(Error::BarOnDiagonal(i));
        }
    }
    t.with_barred_boxes(beta)
}

/// The permutation `d(T)` with `T = d(T) R^lambda`.
pub fn permutation_d(t: &ShiftedTableau) -> Permutation {
    let images = t.shape.boxes().into_iter().map(|b| t.entry_at(b)).collect();
    Permutation::from_images(images).expect("tableau filling is a bijection")
}

/// `i_2, ..., i_n`: `i_b` counts the `b' < b` read after `b` in the row word.
pub fn inversion_counts(t: &ShiftedTableau) -> Vec<usize> {
    let word = t.row_word();
    let mut place = alloc::vec![0; t.n() + 1];
    for (k, &a) in word.iter().enumerate() {
        place[a] = k;
    }
    (2..=t.n())
        .map(|b| (1..b).filter(|&c| place[c] > place[b]).count())
        .collect()
}

/// The reduced word of `d(T)`: segments `(b-1, b-2, ..., b-i_b)` for `b = 2..n`.
pub fn reduced_word(t: &ShiftedTableau) -> Vec<usize> {
    let inv = inversion_counts(t);
    let mut word = Vec::new();
    for (k, &ib) in inv.iter().enumerate() {
        let b = k + 2;
        word.extend((1..=ib).map(|s| b - s));
    }
    word
}

/// Standard barred tableaux obtained by adding the entry `n + 1` (barred or not).
pub fn branch_up(v: &ShiftedTableau) -> Vec<ShiftedTableau> {
    let mut out = Vec::new();
    for bx in v.shape.addable_boxes() {
        out.push(v.add_box(bx, false));
        if bx.0 != bx.1 {
            out.push(v.add_box(bx, true));
        }
    }
    out
}

/// `A(u, v) = 1 - 1/(u - v)^2 - 1/(u + v)^2` written through squares:
/// `1 - 2 (u^2 + v^2) / (u^2 - v^2)^2`.
pub fn a_function(u_sq: i64, v_sq: i64) -> Result<Rational> {
    let diff = u_sq - v_sq;
    if diff == 0 {
        return Err(Error::ZeroDivision);
    }
    let frac = Rational::new(2 * (u_sq + v_sq), diff * diff)?;
    Ok(&Rational::one() - &frac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sp(p: &[usize]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn tab(s: &str) -> ShiftedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn strict_partitions_small() {
        assert_eq!(enumerate_strict_partitions(3), vec![sp(&[3]), sp(&[2, 1])]);
        assert_eq!(enumerate_strict_partitions(1), vec![sp(&[1])]);
        let six = enumerate_strict_partitions(6);
        assert_eq!(
            six,
            vec![sp(&[6]), sp(&[5, 1]), sp(&[4, 2]), sp(&[3, 2, 1])]
        );
        assert!(StrictPartition::new(vec![2, 2]).is_err());
    }

    #[test]
    fn standard_tableaux_small() {
        let t = enumerate_standard_tableaux(&sp(&[2, 1]), false);
        assert_eq!(t, vec![tab("1,2/3")]);
        let t = enumerate_standard_tableaux(&sp(&[3, 1]), false);
        assert_eq!(t, vec![tab("1,2,3/4"), tab("1,2,4/3")]);
        let t = enumerate_standard_tableaux(&sp(&[3]), true);
        assert_eq!(
            t,
            vec![tab("1,2,3"), tab("1,2,3b"), tab("1,2b,3"), tab("1,2b,3b")]
        );
    }

    #[test]
    fn g_lambda_values() {
        assert_eq!(sp(&[5]).g_lambda_formula().unwrap(), 1);
        assert_eq!(sp(&[2, 1]).g_lambda_formula().unwrap(), 1);
        assert_eq!(sp(&[3, 2, 1]).g_lambda_formula().unwrap(), 2);
    }

    #[test]
    fn signed_contents() {
        let t = tab("1,2,3b");
        assert_eq!(t.signed_content(2), Scalar::sqrt_int(2));
        assert_eq!(t.signed_content(3), -Scalar::sqrt_int(6));
        assert!(tab("1,2/3").signed_content(3).is_zero());
    }

    #[test]
    fn addable_contents() {
        let r = addable_signed_contents(&sp(&[1]));
        assert_eq!(
            r,
            vec![
                ((1, 2), Scalar::sqrt_int(2)),
                ((1, 2), -Scalar::sqrt_int(2))
            ]
        );
        let r = addable_signed_contents(&sp(&[2]));
        assert_eq!(
            r,
            vec![
                ((1, 3), Scalar::sqrt_int(6)),
                ((1, 3), -Scalar::sqrt_int(6)),
                ((2, 2), Scalar::zero())
            ]
        );
        let r = addable_signed_contents(&sp(&[2, 1]));
        assert_eq!(
            r,
            vec![
                ((1, 3), Scalar::sqrt_int(6)),
                ((1, 3), -Scalar::sqrt_int(6))
            ]
        );
    }

    #[test]
    fn row_tableaux() {
        assert_eq!(row_tableau(&sp(&[3, 1]), &[]).unwrap(), tab("1,2,3/4"));
        assert_eq!(row_tableau(&sp(&[2, 1]), &[(1, 2)]).unwrap(), tab("1,2b/3"));
        let r = row_tableau(&sp(&[6, 3, 1]), &[]).unwrap();
        assert_eq!(r.rows(), &[vec![1, 2, 3, 4, 5, 6], vec![7, 8, 9], vec![10]]);
        assert_eq!(
            row_tableau(&sp(&[2, 1]), &[(2, 2)]),
            Err(Error::BarOnDiagonal(2))
        );
    }

    #[test]
    fn permutation_d_and_words() {
        let r = row_tableau(&sp(&[3, 1]), &[]).unwrap();
        assert!(permutation_d(&r).is_identity());
        let t = tab("1,2,4/3");
        assert_eq!(permutation_d(&t), Permutation::transposition(4, 3, 4));
        assert_eq!(inversion_counts(&t), vec![0, 0, 1]);
        assert_eq!(reduced_word(&t), vec![3]);
        assert!(reduced_word(&r).is_empty());
        assert_eq!(inversion_counts(&r), vec![0, 0, 0]);
    }

    #[test]
    fn d_is_equivariant_under_adjacent_swaps() {
        for l in [sp(&[3, 1]), sp(&[2, 1]), sp(&[4, 2]), sp(&[3, 2, 1])] {
            for t in enumerate_standard_tableaux(&l, false) {
                for a in 1..t.n() {
                    let st = t.swap(a);
                    if st.is_standard() {
                        let lhs = permutation_d(&st);
                        let rhs = Permutation::simple(t.n(), a).compose(&permutation_d(&t));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn order_matches_enumeration() {
        let all = all_barred_tableaux(4);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn branching() {
        assert_eq!(
            branch_up(&ShiftedTableau::single()),
            vec![tab("1,2"), tab("1,2b")]
        );
        assert_eq!(
            branch_up(&tab("1,2")),
            vec![tab("1,2,3"), tab("1,2,3b"), tab("1,2/3")]
        );
        let total: usize = [tab("1,2"), tab("1,2b")]
            .iter()
            .map(|v| branch_up(v).len())
            .sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn text_format_round_trip() {
        let t = tab("1,2,4b/3");
        assert_eq!(alloc::format!("{}", t), "1,2,4b/3");
        assert!(t.is_barred(4));
        assert!("1,2/3b".parse::<ShiftedTableau>().is_err());
        assert!("1,2/2".parse::<ShiftedTableau>().is_err());
    }

    #[test]
    fn a_function_values() {
        assert_eq!(a_function(6, 0).unwrap(), Rational::new(2, 3).unwrap());
        // adjacent in a row: A vanishes
        assert!(a_function(2, 6).unwrap().is_zero());
    }
}
