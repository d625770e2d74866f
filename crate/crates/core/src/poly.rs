//! Exact univariate and multivariate polynomials, with interpolation.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::ExactField;

/// `Σ c_i x^i` with coefficients in an exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: ExactField> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Coefficients from the constant term up; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_int(&self, x: i64) -> F {
        self.eval(&F::from_int(x))
    }

    /// The polynomial of degree `< points.len()` through the given points.
    pub fn interpolate(points: &[(F, F)]) -> Result<Self> {
        let n = points.len();
        let a: Vec<Vec<F>> = points
            .iter()
            .map(|(x, _)| {
                let mut row = Vec::with_capacity(n);
                let mut p = F::one();
                for _ in 0..n {
                    row.push(p.clone());
                    p = p * x.clone();
                }
                row
            })
            .collect();
        let b: Vec<F> = points.iter().map(|(_, y)| y.clone()).collect();
        Ok(Self::new(linalg::solve(&a, &b)?))
    }

    /// Interpolates through the first `degree + 1` samples and checks the
    /// rest.
    pub fn fit_and_verify(samples: &[(F, F)], degree: usize) -> Result<Self> {
        if samples.len() < degree + 1 {
            return Err(Error::Precondition(format!("need {} samples, got {}", degree + 1, samples.len())));
        }
        let p = Self::interpolate(&samples[..=degree])?;
        for (x, y) in &samples[degree + 1..] {
            let v = p.eval(x);
            if v != *y {
                return Err(Error::FitMismatch(format!("at {x}: fitted {v}, observed {y}")));
            }
        }
        Ok(p)
    }
}

impl<F: ExactField> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})k")?,
                _ => write!(f, "({c})k^{i}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in several variables with rational coefficients, keyed by
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct MultivariatePolynomial {
    pub nvars: usize,
    #[serde(serialize_with = "serialize_terms")]
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

fn serialize_terms<S: serde::Serializer>(
    terms: &BTreeMap<Vec<u32>, BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(terms.len()))?;
    for (k, v) in terms {
        let key: Vec<String> = k.iter().map(u32::to_string).collect();
        map.serialize_entry(&key.join(","), &v.to_string())?;
    }
    map.end()
}

impl MultivariatePolynomial {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigRational) {
        let entry = self.terms.entry(exponents).or_insert_with(BigRational::zero);
        *entry += coeff;
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize)))
            .sum()
    }

    /// Fits the coefficients of the given monomials through exact samples
    /// (one sample per monomial).
    pub fn interpolate(monomials: &[Vec<u32>], samples: &[(Vec<BigRational>, BigRational)]) -> Result<Self> {
        let nvars = monomials.first().map_or(0, Vec::len);
        let a: Vec<Vec<BigRational>> = samples
            .iter()
            .map(|(x, _)| {
                monomials
                    .iter()
                    .map(|m| {
                        m.iter()
                            .zip(x)
                            .fold(BigRational::one(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
                    })
                    .collect()
            })
            .collect();
        let b: Vec<BigRational> = samples.iter().map(|(_, y)| y.clone()).collect();
        let c = linalg::solve(&a, &b)?;
        let mut p = Self::new(nvars);
        for (m, v) in monomials.iter().zip(c) {
            p.add_term(m.clone(), v);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn interpolation_recovers_cubic() {
        let p = UniPoly::new(vec![int(1), rat(-1, 2), int(0), rat(1, 6)]);
        let samples: Vec<_> = (0..6).map(|k| (int(k), p.eval_int(k))).collect();
        assert_eq!(UniPoly::fit_and_verify(&samples, 3).unwrap(), p);
        assert_eq!(p.degree(), Some(3));
        let mut bad = samples.clone();
        bad[5].1 += int(1);
        assert!(matches!(UniPoly::fit_and_verify(&bad, 3), Err(Error::FitMismatch(_))));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(UniPoly::<BigRational>::new(vec![int(0), int(0)]).degree(), None);
    }

    #[test]
    fn multivariate_interpolation() {
        // (x + 2y)^2
        let monos = vec![vec![2, 0], vec![1, 1], vec![0, 2]];
        let f = |x: i64, y: i64| int((x + 2 * y).pow(2));
        let samples =
            vec![(vec![int(1), int(1)], f(1, 1)), (vec![int(1), int(2)], f(1, 2)), (vec![int(1), int(3)], f(1, 3))];
        let p = MultivariatePolynomial::interpolate(&monos, &samples).unwrap();
        assert_eq!(p.coeff(&[1, 1]), int(4));
        assert_eq!(p.coeff(&[0, 2]), int(4));
        assert_eq!(p.eval(&[int(3), int(5)]), f(3, 5));
    }
}
