//! Exact base fields: the rationals and prime fields `F_p`.
//!
//! Every algebraic routine in the crate is generic over [`Field`]. The two
//! implementations are [`Rational`] (characteristic 0, always in lowest terms
//! with a positive denominator) and [`Fp<P>`] (canonical residues in `[0, P)`).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

/// An exact, commutative field with a known characteristic.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// `0` for the rationals, the prime `p` for `F_p`.
    const CHARACTERISTIC: u64;

    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// The field element `num / den`; fails when `den` vanishes in the field.
    fn from_fraction(num: &BigInt, den: &BigInt) -> Result<Self> {
        let d = Self::from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_bigint(num) / d)
    }

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Number of elements, `None` when infinite.
    fn cardinality() -> Option<u64>;

    /// The `i`-th element in a fixed enumeration `0, 1, 2, ...`.
    /// Returns `None` once a finite field is exhausted.
    fn enumerate(i: u64) -> Option<Self>;

    /// Name used in scripts and reports: `Q` or `Fp(p)`.
    fn name() -> String;

    /// True when the printed form starts with a minus sign.
    fn is_negative(&self) -> bool {
        false
    }
}

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn cardinality() -> Option<u64> {
        None
    }

    fn enumerate(i: u64) -> Option<Self> {
        Some(BigRational::from_integer(BigInt::from(i)))
    }

    fn name() -> String {
        "Q".to_string()
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Element of the prime field `F_P`, stored as its canonical residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME_CHECK: () = assert!(
        is_prime_const(P) && P < (1 << 32),
        "Fp modulus must be a prime below 2^32"
    );

    pub fn new(value: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME_CHECK;
        Fp(value % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn from_bigint(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Fp::new(r.to_u64().expect("residue fits in u64"))
    }

    fn from_i64(n: i64) -> Self {
        Fp::new(n.rem_euclid(P as i64) as u64)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn cardinality() -> Option<u64> {
        Some(P)
    }

    fn enumerate(i: u64) -> Option<Self> {
        (i < P).then(|| Fp::new(i))
    }

    fn name() -> String {
        format!("Fp({P})")
    }
}

const fn is_prime_const(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_prime(n: u64) -> bool {
    is_prime_const(n)
}

/// Exact binomial coefficient `C(n, r)`; zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, r) mod p` by Lucas' theorem: the product of the binomials of the
/// base-`p` digits of `n` and `r`.
pub fn binomial_mod_p(n: u64, r: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r > n {
        return Ok(0);
    }
    let (mut n, mut r) = (n, r);
    let mut acc: u64 = 1;
    while r > 0 || n > 0 {
        let (nd, rd) = (n % p, r % p);
        if rd > nd {
            return Ok(0);
        }
        acc = acc * small_binomial_mod(nd, rd, p) % p;
        n /= p;
        r /= p;
    }
    Ok(acc)
}

// Digits are below p, so the exact binomial is computed and reduced.
fn small_binomial_mod(n: u64, r: u64, p: u64) -> u64 {
    (binomial(n, r) % BigUint::from(p)).to_u64().unwrap_or(0)
}

/// `C(n, r)` as an element of `F`, via Lucas in positive characteristic.
pub fn binomial_in<F: Field>(n: u64, r: u64) -> F {
    if F::CHARACTERISTIC == 0 {
        F::from_bigint(&BigInt::from(binomial(n, r)))
    } else {
        let v = binomial_mod_p(n, r, F::CHARACTERISTIC).expect("field characteristic is prime");
        F::from_i64(v as i64)
    }
}

/// `n!` in `F`.
pub fn factorial_in<F: Field>(n: u64) -> F {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    F::from_bigint(&acc)
}

/// True when `i` is a power of `p` (`p^0 = 1` included). In characteristic
/// zero only `1` counts.
pub fn is_power_of(i: u64, p: u64) -> bool {
    if i == 0 {
        return false;
    }
    if p == 0 {
        return i == 1;
    }
    let mut i = i;
    while i.is_multiple_of(p) {
        i /= p;
    }
    i == 1
}
