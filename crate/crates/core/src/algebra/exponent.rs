use std::cmp::Ordering;
use std::fmt;

/// Largest number of variables any polynomial in this crate carries
/// (four coordinates plus auxiliary variables used by ideal computations).
pub const MAX_VARS: usize = 6;

/// A multi-index of non-negative exponents.
///
/// Slots past the owning polynomial's variable count are always zero, so
/// comparisons and hashing never depend on the variable count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector([u32; MAX_VARS]);

impl ExponentVector {
    pub const fn zero() -> Self {
        ExponentVector([0; MAX_VARS])
    }

    /// Builds a vector from a slice of at most `MAX_VARS` exponents.
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut e = [0u32; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        ExponentVector(e)
    }

    /// The exponent vector of a single variable `x_i`.
    pub fn unit(i: usize) -> Self {
        let mut e = Self::zero();
        e.0[i] = 1;
        e
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: u32) {
        self.0[i] = v;
    }

    pub fn as_array(&self) -> &[u32; MAX_VARS] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&v| v as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// Index of the last slot holding a nonzero exponent, plus one.
    pub fn span(&self) -> usize {
        self.0.iter().rposition(|&v| v != 0).map_or(0, |p| p + 1)
    }

    /// `self | other` in the divisibility order of monomials.
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        let mut e = [0u32; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i] + other.0[i];
        }
        ExponentVector(e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    #[inline]
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut e = [0u32; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].checked_sub(other.0[i])?;
        }
        Some(ExponentVector(e))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut e = [0u32; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].max(other.0[i]);
        }
        ExponentVector(e)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut e = [0u32; MAX_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].min(other.0[i]);
        }
        ExponentVector(e)
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn to_vec(&self, nvars: usize) -> Vec<u32> {
        self.0[..nvars].to_vec()
    }

    /// Lexicographic comparison (first variable most significant).
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// Graded lexicographic order: total degree first, then lexicographic.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.cmp_lex(other))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.span().max(1);
        write!(f, "{:?}", &self.0[..n])
    }
}
