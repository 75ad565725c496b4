use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::lattice::CellLabel;
use crate::order::TermOrder;

/// A pure binomial `p^plus - p^minus` with unit coefficients.
///
/// The two monomials may share variables; binomials taken from a toric
/// ideal's reduced Gröbner basis never do. Ideal presentations keep every
/// binomial normalized so that `plus` is the leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl Binomial {
    pub fn new(plus: Vec<u64>, minus: Vec<u64>) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::DimensionMismatch {
                expected: plus.len(),
                found: minus.len(),
            });
        }
        Ok(Self::from_parts(plus, minus))
    }

    pub(crate) fn from_parts(plus: Vec<u64>, minus: Vec<u64>) -> Self {
        if plus == minus {
            let dim = plus.len();
            return Self::zero(dim);
        }
        Self { plus, minus }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            plus: vec![0; dim],
            minus: vec![0; dim],
        }
    }

    /// `p^{u+} - p^{u-}`.
    pub fn from_difference(u: &[i64]) -> Self {
        let plus = u.iter().map(|&x| x.max(0).unsigned_abs()).collect();
        let minus = u.iter().map(|&x| x.min(0).unsigned_abs()).collect();
        Self::from_parts(plus, minus)
    }

    /// `p_i - p_j`.
    pub fn linear(dim: usize, i: usize, j: usize) -> Self {
        let mut plus = vec![0; dim];
        let mut minus = vec![0; dim];
        plus[i] = 1;
        minus[j] += 1;
        Self::from_parts(plus, minus)
    }

    pub fn dim(&self) -> usize {
        self.plus.len()
    }

    pub fn plus(&self) -> &[u64] {
        &self.plus
    }

    pub fn minus(&self) -> &[u64] {
        &self.minus
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    /// Exponent difference `plus - minus`.
    pub fn difference(&self) -> Vec<i64> {
        self.plus
            .iter()
            .zip(&self.minus)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    /// Both sides divided by their greatest common monomial factor.
    pub fn cancel_common(&self) -> Self {
        Self::from_difference(&self.difference())
    }

    pub fn degree(&self) -> u64 {
        self.plus.iter().sum::<u64>().max(self.minus.iter().sum())
    }

    /// `p_h - p_k` with `h != k`.
    pub fn is_linear(&self) -> bool {
        !self.is_zero() && self.plus.iter().sum::<u64>() == 1 && self.minus.iter().sum::<u64>() == 1
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.iter().sum::<u64>() == self.minus.iter().sum::<u64>()
    }

    /// The variable pair `(h, k)` of a linear binomial `p_h - p_k`.
    pub fn linear_pair(&self) -> Option<(usize, usize)> {
        if !self.is_linear() {
            return None;
        }
        let h = self.plus.iter().position(|&e| e == 1)?;
        let k = self.minus.iter().position(|&e| e == 1)?;
        Some((h, k))
    }

    /// Sign-normalized copy with the leading monomial first.
    pub fn normalized(&self, order: &TermOrder) -> Self {
        match order.cmp(&self.plus, &self.minus) {
            Ordering::Less => Self {
                plus: self.minus.clone(),
                minus: self.plus.clone(),
            },
            _ => self.clone(),
        }
    }

    /// Renders with the given variable names, `plus` first.
    pub fn display<'a>(&'a self, names: &'a [CellLabel]) -> BinomialDisplay<'a> {
        BinomialDisplay {
            binomial: self,
            names,
        }
    }
}

pub struct BinomialDisplay<'a> {
    binomial: &'a Binomial,
    names: &'a [CellLabel],
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &[u64], names: &[CellLabel]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        match names.get(i) {
            Some(name) => write!(f, "{name}")?,
            None => write!(f, "p_{}", i + 1)?,
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.binomial.is_zero() {
            return f.write_str("0");
        }
        write_monomial(f, &self.binomial.plus, self.names)?;
        f.write_str(" - ")?;
        write_monomial(f, &self.binomial.minus, self.names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn difference_round_trip() {
        let b = Binomial::from_difference(&[1, 1, -1, -1]);
        assert_eq!(b.plus(), &[1, 1, 0, 0]);
        assert_eq!(b.minus(), &[0, 0, 1, 1]);
        assert_eq!(b.difference(), vec![1, 1, -1, -1]);
        assert!(Binomial::from_difference(&[0, 0]).is_zero());
    }

    #[test]
    fn rendering() {
        let names = [
            CellLabel::Cell(1, 1),
            CellLabel::Cell(1, 2),
            CellLabel::Cell(2, 1),
            CellLabel::Cell(2, 2),
        ];
        let b = Binomial::from_difference(&[0, 1, 1, -1]).normalized(&TermOrder::degrevlex(4));
        assert_eq!(b.display(&names).to_string(), "p_{1,2}*p_{2,1} - p_{2,2}");
        let sq = Binomial::from_difference(&[0, -2, 1, 1]);
        assert_eq!(
            sq.display(&names).to_string(),
            "p_{2,1}*p_{2,2} - p_{1,2}^2"
        );
        let idx = [CellLabel::Index(1), CellLabel::Index(2)];
        assert_eq!(
            Binomial::linear(2, 0, 1).display(&idx).to_string(),
            "p_1 - p_2"
        );
        assert_eq!(Binomial::zero(2).display(&idx).to_string(), "0");
        let affine = Binomial::from_difference(&[1, 0]);
        assert_eq!(affine.display(&idx).to_string(), "p_1 - 1");
    }

    #[test]
    fn linearity() {
        assert!(Binomial::linear(3, 0, 2).is_linear());
        assert_eq!(Binomial::linear(3, 0, 2).linear_pair(), Some((0, 2)));
        assert!(!Binomial::from_difference(&[1, 0, 0]).is_linear());
        assert!(!Binomial::from_difference(&[2, -1, -1]).is_linear());
    }
}
