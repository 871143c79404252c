use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer vector with arbitrary-precision entries.
///
/// Ordering is lexicographic on the entries, which is what every
/// "deterministically smallest" choice in this crate relies on.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        assert!(axis < dim, "axis {axis} out of range for dimension {dim}");
        let mut v = vec![BigInt::zero(); dim];
        v[axis] = BigInt::from(1);
        IntVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "dot product dimension mismatch");
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.dim(), other.dim(), "vector sum dimension mismatch");
        IntVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.dim(), other.dim(), "vector difference dimension mismatch");
        IntVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Flips the sign so the first nonzero entry is positive. Zero stays zero.
    pub fn sign_normalized(&self) -> IntVector {
        match self.0.iter().find(|x| !x.is_zero()) {
            Some(first) if first.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// gcd of the absolute values; 0 for an empty list or all-zero input.
pub fn gcd_all<'a, I>(xs: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigInt>,
{
    xs.into_iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Divides out the content. Returns the primitive vector and the content g >= 1.
pub fn primitive_part(v: &IntVector) -> Result<(IntVector, BigInt)> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = gcd_all(v.entries());
    let reduced = IntVector(v.entries().iter().map(|x| x / &g).collect());
    Ok((reduced, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn gcd_all_basic() {
        assert_eq!(gcd_all(&[bi(6), bi(10), bi(15)]), bi(1));
        assert_eq!(gcd_all(&[bi(4), bi(6)]), bi(2));
        assert_eq!(gcd_all(&[bi(-4), bi(6)]), bi(2));
        assert_eq!(gcd_all(&[bi(0), bi(0)]), bi(0));
        assert_eq!(gcd_all(&[]), bi(0));
        assert_eq!(gcd_all(&[bi(-7)]), bi(7));
    }

    #[test]
    fn primitive_part_divides_out_content() {
        let v = IntVector::from_i64(&[2, 4, -6]);
        let (p, g) = primitive_part(&v).unwrap();
        assert_eq!(p, IntVector::from_i64(&[1, 2, -3]));
        assert_eq!(g, bi(2));

        let w = IntVector::from_i64(&[0, 5]);
        let (p, g) = primitive_part(&w).unwrap();
        assert_eq!(p, IntVector::from_i64(&[0, 1]));
        assert_eq!(g, bi(5));
    }

    #[test]
    fn primitive_part_rejects_zero() {
        assert_eq!(
            primitive_part(&IntVector::zeros(3)).unwrap_err(),
            Error::ZeroVector
        );
    }

    #[test]
    fn lexicographic_order_matches_entrywise_comparison() {
        let a = IntVector::from_i64(&[0, 0, 1]);
        let b = IntVector::from_i64(&[0, 1, 0]);
        let c = IntVector::from_i64(&[1, 0, 0]);
        assert!(a < b && b < c);
    }

    #[test]
    fn sign_normalization_fixes_leading_sign() {
        let v = IntVector::from_i64(&[0, -2, 1]);
        assert_eq!(v.sign_normalized(), IntVector::from_i64(&[0, 2, -1]));
        let w = IntVector::from_i64(&[3, -1]);
        assert_eq!(w.sign_normalized(), w);
    }
}
