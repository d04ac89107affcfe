use std::fmt;

use super::cartan::CartanDatum;
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// A Weyl group element, stored as its matrix on the root lattice in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    matrix: IntMatrix,
    length: usize,
    system: u64,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// True if `l(w s_i) < l(w)`, i.e. `w(alpha_i)` is negative. `i` is 1-based.
    pub fn has_right_descent(&self, i: usize) -> bool {
        (0..self.matrix.dim()).map(|r| self.matrix.get(r, i - 1)).sum::<i64>() < 0
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(l={}, {:?})", self.length, self.matrix)
    }
}

impl CartanDatum {
    pub(crate) fn element_from_matrix(&self, matrix: IntMatrix) -> WeylElement {
        let sums = matrix.column_sums();
        let length = self
            .positive_roots()
            .iter()
            .filter(|beta| beta.iter().zip(&sums).map(|(b, s)| b * s).sum::<i64>() < 0)
            .count();
        WeylElement { matrix, length, system: self.fingerprint() }
    }

    fn check(&self, w: &WeylElement) -> Result<()> {
        if w.system != self.fingerprint() || w.matrix.dim() != self.rank() {
            Err(Error::MixedRootSystems)
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::InvalidSubset { index: i, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement { matrix: IntMatrix::identity(self.rank()), length: 0, system: self.fingerprint() }
    }

    /// The simple reflection `s_i`, `i` 1-based.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        Ok(WeylElement { matrix: self.reflection_matrix(i - 1).clone(), length: 1, system: self.fingerprint() })
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.element_from_matrix(a.matrix.mul(&b.matrix))
    }

    /// Product of a left-to-right list of elements.
    pub(crate) fn product(&self, factors: &[&WeylElement]) -> WeylElement {
        let m = factors.iter().fold(IntMatrix::identity(self.rank()), |acc, f| acc.mul(&f.matrix));
        self.element_from_matrix(m)
    }

    pub(crate) fn right_mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        self.element_from_matrix(w.matrix.mul(self.reflection_matrix(i - 1)))
    }

    pub(crate) fn left_mul_simple(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.element_from_matrix(self.reflection_matrix(i - 1).mul(&w.matrix))
    }

    /// Element given by a word of 1-based simple indices, `s_{w[0]} s_{w[1]} ...`.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut m = IntMatrix::identity(self.rank());
        for &i in word {
            self.check_index(i)?;
            m = m.mul(self.reflection_matrix(i - 1));
        }
        Ok(self.element_from_matrix(m))
    }

    /// Strip right descents greedily (smallest index first); returns the picks.
    fn right_greedy(&self, w: &WeylElement) -> Vec<usize> {
        let mut u = w.clone();
        let mut picks = Vec::with_capacity(w.length);
        while !u.is_identity() {
            let i = (1..=self.rank()).find(|&i| u.has_right_descent(i)).expect("nonidentity element has a descent");
            u = self.right_mul_simple(&u, i);
            picks.push(i);
        }
        picks
    }

    pub fn invert(&self, w: &WeylElement) -> Result<WeylElement> {
        self.check(w)?;
        Ok(self.inv(w))
    }

    pub(crate) fn inv(&self, w: &WeylElement) -> WeylElement {
        // w s_{p1} ... s_{pk} = e, so w^{-1} = s_{p1} ... s_{pk}
        self.from_word(&self.right_greedy(w)).expect("indices in range")
    }

    /// Canonical reduced word (1-based): repeatedly strip the smallest left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        // left descents of w are right descents of w^{-1}
        self.right_greedy(&self.inv(w))
    }

    /// True if `l(s_i w) < l(w)`; `i` is 1-based.
    pub fn has_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.left_mul_simple(i, w).length < w.length
    }

    /// Bruhat order, `e` smallest. Walks a reduced word of `y` from the right,
    /// matching letters of `x` greedily (lifting property).
    pub fn bruhat_leq(&self, x: &WeylElement, y: &WeylElement) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        let (mut x, mut y) = (x.clone(), y.clone());
        loop {
            if x.length > y.length {
                return Ok(false);
            }
            if y.is_identity() {
                return Ok(x.is_identity());
            }
            if x.is_identity() {
                return Ok(true);
            }
            let s = (1..=self.rank()).find(|&i| y.has_right_descent(i)).expect("descent exists");
            if x.has_right_descent(s) {
                x = self.right_mul_simple(&x, s);
            }
            y = self.right_mul_simple(&y, s);
        }
    }

    /// Longest element `w_0` of W.
    pub fn longest(&self) -> WeylElement {
        let all: Vec<usize> = (1..=self.rank()).collect();
        self.longest_in(&all)
    }

    /// Longest element of the parabolic subgroup generated by `indices` (1-based).
    pub(crate) fn longest_in(&self, indices: &[usize]) -> WeylElement {
        let mut w = self.identity();
        while let Some(&i) = indices.iter().find(|&&i| !w.has_right_descent(i)) {
            w = self.right_mul_simple(&w, i);
        }
        w
    }

    /// Action of `w` on a vector in simple-root coordinates.
    pub fn act(&self, w: &WeylElement, v: &[i64]) -> Vec<i64> {
        w.matrix.apply(v)
    }

    pub(crate) fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.rank()];
        e[i - 1] = 1;
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanDatum {
        CartanDatum::parse("A2").unwrap()
    }

    #[test]
    fn involution_and_lengths() {
        let c = a2();
        let s1 = c.simple_reflection(1).unwrap();
        assert!(c.multiply(&s1, &s1).unwrap().is_identity());
        let w = c.from_word(&[1, 2, 1]).unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(w, c.longest());
    }

    #[test]
    fn inverse_reverses_words() {
        let c = a2();
        let s1s2 = c.from_word(&[1, 2]).unwrap();
        assert_eq!(c.invert(&s1s2).unwrap(), c.from_word(&[2, 1]).unwrap());
    }

    #[test]
    fn canonical_words() {
        let c = a2();
        assert!(c.reduced_word(&c.identity()).is_empty());
        assert_eq!(c.reduced_word(&c.longest()), vec![1, 2, 1]);
        assert_eq!(c.reduced_word(&c.from_word(&[2, 1]).unwrap()), vec![2, 1]);
        let a3 = CartanDatum::parse("A3").unwrap();
        // s3 s2 s1 s3 = s2 s3 s2 s1, so s2 is the smallest left descent
        assert_eq!(a3.reduced_word(&a3.from_word(&[3, 2, 1, 3]).unwrap()), vec![2, 3, 2, 1]);
    }

    #[test]
    fn bruhat_small_cases() {
        let c = a2();
        let s1 = c.from_word(&[1]).unwrap();
        let s2 = c.from_word(&[2]).unwrap();
        let s1s2 = c.from_word(&[1, 2]).unwrap();
        assert!(c.bruhat_leq(&s1, &s1s2).unwrap());
        assert!(!c.bruhat_leq(&s1, &s2).unwrap());
        assert!(c.bruhat_leq(&c.identity(), &s2).unwrap());
    }

    #[test]
    fn mixed_systems_rejected() {
        let a = a2();
        let g = CartanDatum::parse("G2").unwrap();
        let x = a.simple_reflection(1).unwrap();
        let y = g.simple_reflection(1).unwrap();
        assert_eq!(a.multiply(&x, &y), Err(Error::MixedRootSystems));
        assert!(a.simple_reflection(3).is_err());
    }
}
