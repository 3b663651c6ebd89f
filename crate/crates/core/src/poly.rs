//! Rank-generating functions as dense coefficient vectors over the
//! naturals: coefficient `k` counts the rank-`k` elements of a graded poset.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
        }
    }
}

impl core::error::Error for PolyError {}

/// A polynomial in `q` with natural coefficients, ascending by degree.
/// Trailing zeros are trimmed on construction, so the leading coefficient of
/// a nonzero polynomial is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RankPolynomial {
    coeffs: Vec<usize>,
}

impl RankPolynomial {
    pub fn new(mut coeffs: Vec<usize>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        RankPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RankPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RankPolynomial {
            coeffs: alloc::vec![1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> usize {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Degree of a nonzero polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Sum of the coefficients: the number of elements counted.
    pub fn total(&self) -> usize {
        self.coeffs.iter().sum()
    }

    /// The reversal `q^deg(f) * f(1/q)`: coefficients read back to front.
    /// Undefined for zero.
    pub fn reversed(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(RankPolynomial::new(coeffs))
    }

    /// Palindromic coefficients; such a polynomial equals its own reversal.
    pub fn is_symmetric(&self) -> bool {
        let m = self.coeffs.len();
        (0..m / 2).all(|k| self.coeffs[k] == self.coeffs[m - 1 - k])
    }
}

impl Mul for &RankPolynomial {
    type Output = RankPolynomial;

    fn mul(self, rhs: &RankPolynomial) -> RankPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RankPolynomial::zero();
        }
        let mut coeffs = alloc::vec![0usize; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            for (b, &cb) in rhs.coeffs.iter().enumerate() {
                coeffs[a + b] += ca * cb;
            }
        }
        RankPolynomial::new(coeffs)
    }
}

impl fmt::Display for RankPolynomial {
    /// Human form, e.g. `1 + 2q + 3q^2`; zero coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, c) => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RankPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RankPolynomial({self})")
    }
}
