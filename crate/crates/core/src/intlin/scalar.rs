//! Integer scalars used by the elimination kernels.
//!
//! Every routine in this module family is written once against [`Scalar`] and
//! instantiated twice: with `i64` (checked arithmetic, fails with [`Overflow`])
//! and with [`BigInt`] (never fails). Callers run the machine-word version
//! first and rerun with big integers when it reports an overflow.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A machine-word computation left the `i64` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub type Checked<T> = Result<T, Overflow>;

pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn from_big(v: &BigInt) -> Checked<Self>;
    fn to_big(&self) -> BigInt;

    fn add(&self, other: &Self) -> Checked<Self>;
    fn sub(&self, other: &Self) -> Checked<Self>;
    fn mul(&self, other: &Self) -> Checked<Self>;
    fn neg(&self) -> Checked<Self>;

    /// Floor division and the matching non-negative-or-signed remainder.
    fn div_floor(&self, other: &Self) -> Self;
    fn mod_floor(&self, other: &Self) -> Self;

    fn abs_cmp_lt(&self, other: &Self) -> bool;
    fn is_negative(&self) -> bool;

    /// `(g, s, t)` with `g = s*a + t*b`, `g >= 0`.
    fn ext_gcd(a: &Self, b: &Self) -> Checked<(Self, Self, Self)>;

    fn is_unit(&self) -> bool {
        self.abs_eq_one()
    }

    fn abs_eq_one(&self) -> bool;

    /// `self + a*b`
    fn add_mul(&self, a: &Self, b: &Self) -> Checked<Self> {
        self.add(&a.mul(b)?)
    }
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn from_big(v: &BigInt) -> Checked<Self> {
        // keep a margin so that negation never overflows
        match v.to_i64() {
            Some(x) if x != i64::MIN => Ok(x),
            _ => Err(Overflow),
        }
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add(&self, other: &Self) -> Checked<Self> {
        self.checked_add(*other).filter(|v| *v != i64::MIN).ok_or(Overflow)
    }
    fn sub(&self, other: &Self) -> Checked<Self> {
        self.checked_sub(*other).filter(|v| *v != i64::MIN).ok_or(Overflow)
    }
    fn mul(&self, other: &Self) -> Checked<Self> {
        self.checked_mul(*other).filter(|v| *v != i64::MIN).ok_or(Overflow)
    }
    fn neg(&self) -> Checked<Self> {
        self.checked_neg().ok_or(Overflow)
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn mod_floor(&self, other: &Self) -> Self {
        Integer::mod_floor(self, other)
    }
    fn abs_cmp_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_eq_one(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn ext_gcd(a: &Self, b: &Self) -> Checked<(Self, Self, Self)> {
        let (mut old_r, mut r) = (*a, *b);
        let (mut old_s, mut s) = (1i64, 0i64);
        let (mut old_t, mut t) = (0i64, 1i64);
        while r != 0 {
            let q = old_r.div_euclid(r);
            (old_r, r) = (r, old_r.sub(&q.mul(&r)?)?);
            (old_s, s) = (s, old_s.sub(&q.mul(&s)?)?);
            (old_t, t) = (t, old_t.sub(&q.mul(&t)?)?);
        }
        if old_r < 0 {
            Ok((old_r.neg()?, old_s.neg()?, old_t.neg()?))
        } else {
            Ok((old_r, old_s, old_t))
        }
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_big(v: &BigInt) -> Checked<Self> {
        Ok(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add(&self, other: &Self) -> Checked<Self> {
        Ok(self + other)
    }
    fn sub(&self, other: &Self) -> Checked<Self> {
        Ok(self - other)
    }
    fn mul(&self, other: &Self) -> Checked<Self> {
        Ok(self * other)
    }
    fn neg(&self) -> Checked<Self> {
        Ok(-self)
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn mod_floor(&self, other: &Self) -> Self {
        Integer::mod_floor(self, other)
    }
    fn abs_cmp_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_eq_one(&self) -> bool {
        self.magnitude().is_one()
    }
    fn ext_gcd(a: &Self, b: &Self) -> Checked<(Self, Self, Self)> {
        let e = a.extended_gcd(b);
        if Signed::is_negative(&e.gcd) {
            Ok((-e.gcd, -e.x, -e.y))
        } else {
            Ok((e.gcd, e.x, e.y))
        }
    }
}

/// Runs `f` with machine words first, falling back to big integers on overflow.
pub(crate) fn with_fallback<T>(small: impl FnOnce() -> Checked<T>, big: impl FnOnce() -> T) -> T {
    match small() {
        Ok(v) => v,
        Err(Overflow) => big(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_matches_bezout() {
        for a in -30i64..30 {
            for b in -30i64..30 {
                let (g, s, t) = <i64 as Scalar>::ext_gcd(&a, &b).unwrap();
                assert_eq!(g, num_integer::gcd(a, b));
                assert_eq!(s * a + t * b, g);
                let (gb, sb, tb) = <BigInt as Scalar>::ext_gcd(&BigInt::from(a), &BigInt::from(b)).unwrap();
                assert_eq!(gb, BigInt::from(g));
                assert_eq!(&sb * a + &tb * b, gb);
            }
        }
    }

    #[test]
    fn checked_ops_report_overflow() {
        assert_eq!(Scalar::mul(&i64::MAX, &2), Err(Overflow));
        assert_eq!(Scalar::add(&i64::MAX, &1), Err(Overflow));
        assert!(<i64 as Scalar>::from_big(&(BigInt::from(i64::MAX) * 4)).is_err());
    }
}
