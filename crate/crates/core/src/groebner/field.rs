use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::rational::Rational;

/// Coefficient fields the basis engine runs over.
pub trait Field: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn inv(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// The Mersenne prime `2^61 - 1`.
pub const PRIME: u64 = (1 << 61) - 1;

/// Residues modulo [`PRIME`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp(pub u64);

impl Fp {
    /// Reduction of a rational; `None` when the denominator vanishes mod p.
    pub fn from_rational(r: &Rational) -> Option<Fp> {
        let p = BigInt::from(PRIME);
        let n = r.numer().mod_floor(&p).to_u64()?;
        let d = r.denom().mod_floor(&p).to_u64()?;
        (d != 0).then(|| Fp(n).mul(&Fp(d).inv()))
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat
        let mut base = *self;
        let mut e = PRIME - 2;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 * other.0 as u128) % PRIME as u128) as u64)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(if self.0 >= other.0 {
            self.0 - other.0
        } else {
            self.0 + PRIME - other.0
        })
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { PRIME - self.0 })
    }
}
