//! Permutations of `{1..n}` in one-line notation.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A permutation `w` of `{1..n}`, stored by its images `w(1), ..., w(n)`.
///
/// Composition follows function notation: `(u * v)(a) = u(v(a))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Invalid(alloc::format!(
                    "not a permutation: {:?}",
                    images
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a, b)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// The adjacent transposition `s_a = (a, a+1)`.
    pub fn simple(n: usize, a: usize) -> Self {
        Self::transposition(n, a, a + 1)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a - 1]
    }

    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        Permutation {
            images: rhs.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The product `s_{a_1} s_{a_2} ... s_{a_r}`.
    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        word.iter().fold(Self::identity(n), |acc, &a| {
            acc.compose(&Self::simple(n, a))
        })
    }

    /// `true` when `s_a w` is shorter than `w`.
    pub fn has_left_descent(&self, a: usize) -> bool {
        let inv = self.inverse();
        inv.apply(a) > inv.apply(a + 1)
    }

    /// The lexicographically smallest reduced word `[a_1, ..., a_r]` with `w = s_{a_1} ... s_{a_r}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while !w.is_identity() {
            let a = (1..n)
                .find(|&a| w.has_left_descent(a))
                .expect("non-identity has a descent");
            word.push(a);
            w = Self::simple(n, a).compose(&w);
        }
        word
    }

    /// All permutations of `{1..n}` in lexicographic order of their one-line form.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_are_reduced_and_lex_first() {
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word), w);
        }
        let w = Permutation::from_images(alloc::vec![3, 2, 1]).unwrap();
        assert_eq!(w.reduced_word(), alloc::vec![1, 2, 1]);
    }

    #[test]
    fn composition_is_function_composition() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        let w = s1.compose(&s2);
        assert_eq!(w.apply(3), 1);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::all(4).len(), 24);
    }
}
