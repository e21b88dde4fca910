//! Polynomials in q with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

/// Dense, ascending coefficients with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<i64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(1, 0)
    }

    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_monomial(&mut self, c: i64, degree: usize) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += c;
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// (1 + q)^e.
    pub fn one_plus_q_pow(e: u32) -> Poly {
        Poly::from_coeffs(vec![1, 1]).pow(e)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (d, &c) in rhs.coeffs.iter().enumerate() {
            if c != 0 {
                self.add_monomial(c, d);
            }
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (d, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "q")?,
                (1, m) => write!(f, "{m}*q")?,
                (d, 1) => write!(f, "q^{d}")?,
                (d, m) => write!(f, "{m}*q^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(Poly::from_coeffs(vec![1, 1, 2]).to_string(), "1 + q + 2*q^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::one().to_string(), "1");
        assert_eq!(Poly::from_coeffs(vec![0, -1, 0, 3]).to_string(), "-q + 3*q^3");
        assert_eq!(Poly::from_coeffs(vec![-2, 0, -1]).to_string(), "-2 - q^2");
    }

    #[test]
    fn arithmetic() {
        assert_eq!(Poly::one_plus_q_pow(3).coeffs(), &[1, 3, 3, 1]);
        assert_eq!(Poly::one_plus_q_pow(0), Poly::one());
        let mut p = Poly::monomial(2, 3);
        p.add_monomial(-2, 3);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!((&Poly::zero() * &Poly::one()), Poly::zero());
        assert_eq!(&Poly::one() + &Poly::monomial(1, 1), Poly::from_coeffs(vec![1, 1]));
    }

    #[test]
    fn json() {
        let p = Poly::from_coeffs(vec![1, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":[1,1]}"#);
        assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), p);
    }
}
