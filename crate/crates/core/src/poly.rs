//! Laurent polynomials with non-negative integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Σ c_d t^d` with every stored `c_d > 0`.
///
/// Serializes as a JSON object `{"degree": coefficient}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<i64, u64>", into = "BTreeMap<i64, u64>")]
pub struct GradedPolynomial {
    coefficients: BTreeMap<i64, u64>,
}

impl TryFrom<BTreeMap<i64, u64>> for GradedPolynomial {
    type Error = Error;

    fn try_from(map: BTreeMap<i64, u64>) -> Result<Self> {
        if map.values().any(|&c| c == 0) {
            return Err(Error::Parse("zero coefficients must be omitted".into()));
        }
        Ok(GradedPolynomial { coefficients: map })
    }
}

impl From<GradedPolynomial> for BTreeMap<i64, u64> {
    fn from(p: GradedPolynomial) -> Self {
        p.coefficients
    }
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(degree: i64, coeff: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff);
        p
    }

    /// From dense coefficients starting at degree 0.
    pub fn from_dense(coeffs: &[u64]) -> Self {
        let mut p = Self::zero();
        for (d, &c) in coeffs.iter().enumerate() {
            p.add_term(d as i64, c);
        }
        p
    }

    /// From signed dense coefficients; fails if any is negative.
    pub fn from_signed(coeffs: &[i64]) -> Result<Self> {
        let mut p = Self::zero();
        for (d, &c) in coeffs.iter().enumerate() {
            if c < 0 {
                return Err(Error::InternalInvariantViolation(format!("negative coefficient {c} in degree {d}")));
            }
            p.add_term(d as i64, c as u64);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, degree: i64, coeff: u64) {
        if coeff > 0 {
            *self.coefficients.entry(degree).or_insert(0) += coeff;
        }
    }

    pub fn coefficient(&self, degree: i64) -> u64 {
        self.coefficients.get(&degree).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coefficients.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coefficients.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coefficients.keys().next_back().copied()
    }

    /// Value at 1, i.e. the sum of coefficients.
    pub fn eval_one(&self) -> u64 {
        self.coefficients.values().sum()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        GradedPolynomial { coefficients: self.coefficients.iter().map(|(&d, &c)| (d + k, c)).collect() }
    }

    /// Substitute `t -> t^k` (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        let mut p = Self::zero();
        for (d, c) in self.terms() {
            p.add_term(d * k, c);
        }
        p
    }

    /// `c_d = c_{lo+hi-d}` for all d.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => self.terms().all(|(d, c)| self.coefficient(lo + hi - d) == c),
            _ => true,
        }
    }

    /// Render with the given variable name, highest-order terms last.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (d, c)) in self.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            match (d, c) {
                (0, c) => out.push_str(&c.to_string()),
                (d, 1) => out.push_str(&mono(var, d)),
                (d, c) => out.push_str(&format!("{c}{}", mono(var, d))),
            }
        }
        out
    }
}

fn mono(var: &str, d: i64) -> String {
    if d == 1 {
        var.to_string()
    } else {
        format!("{var}^{d}")
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

impl fmt::Debug for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedPolynomial({})", self.render("t"))
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut p = self.clone();
        for (d, c) in rhs.terms() {
            p.add_term(d, c);
        }
        p
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut p = GradedPolynomial::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                p.add_term(a + b, x * y);
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rendering() {
        assert_eq!(GradedPolynomial::from_dense(&[1, 2, 2, 1]).to_string(), "1 + 2z + 2z^2 + z^3");
        assert_eq!(GradedPolynomial::zero().to_string(), "0");
        assert_eq!(GradedPolynomial::monomial(-1, 1).render("q"), "q^-1");
    }

    #[test]
    fn json_shape() {
        let p = GradedPolynomial::from_dense(&[1, 0, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"0":1,"2":2}"#);
        assert!(serde_json::from_str::<GradedPolynomial>(r#"{"1":0}"#).is_err());
    }

    #[test]
    fn negative_coefficients_rejected() {
        assert!(GradedPolynomial::from_signed(&[1, -1]).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(terms in proptest::collection::btree_map(-20i64..20, 1u64..1000, 0..8)) {
            let p = GradedPolynomial::try_from(terms).unwrap();
            let back: GradedPolynomial = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn product_evaluates_multiplicatively(a in proptest::collection::vec(0u64..5, 0..6), b in proptest::collection::vec(0u64..5, 0..6)) {
            let (p, q) = (GradedPolynomial::from_dense(&a), GradedPolynomial::from_dense(&b));
            prop_assert_eq!((&p * &q).eval_one(), p.eval_one() * q.eval_one());
        }
    }
}
