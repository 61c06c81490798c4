use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Which ground field an algebra is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F {p}"),
        }
    }
}

/// An exact field of scalars.
///
/// The owned operator impls are the primary interface; the `*_ref` methods
/// exist so hot loops can avoid clones for heap-backed scalars.
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
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    /// `None` when the denominator vanishes in the field.
    fn from_rational(r: &BigRational) -> Option<Self>;
    /// A rational lift; residues map to their least nonnegative representative.
    fn to_rational(&self) -> BigRational;
    fn characteristic() -> u64;
    fn kind() -> FieldKind;

    /// Distinct roots in the field of `c[0] + c[1] t + ... + c[d] t^d`.
    ///
    /// Implementations may give up on roots they cannot find cheaply; callers
    /// treat a short answer as "not split".
    fn roots(coeffs: &[Self]) -> Vec<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
}

/// Horner evaluation of a polynomial given low-to-high coefficients.
pub fn eval_poly<F: Field>(coeffs: &[F], x: &F) -> F {
    coeffs
        .iter()
        .rev()
        .fold(F::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
}

// ---------------------------------------------------------------------------
// Rationals

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Self;
    fn neg(self) -> Self {
        Rational(-self.0)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(Rational(r.clone()))
    }

    fn to_rational(&self) -> BigRational {
        self.0.clone()
    }

    fn characteristic() -> u64 {
        0
    }

    fn kind() -> FieldKind {
        FieldKind::Rational
    }

    fn add_ref(&self, other: &Self) -> Self {
        if other.0.is_zero() {
            return self.clone();
        }
        if self.0.is_zero() {
            return other.clone();
        }
        Rational(&self.0 + &other.0)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        if other.0.is_zero() {
            return self.clone();
        }
        Rational(&self.0 - &other.0)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.0.is_zero() || other.0.is_zero() {
            return Self::zero();
        }
        if self.0.is_one() {
            return other.clone();
        }
        if other.0.is_one() {
            return self.clone();
        }
        Rational(&self.0 * &other.0)
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        rational_roots(coeffs)
    }
}

/// Rational roots by the rational root theorem. Gives up (returning what it
/// has) when the relevant integer coefficients are too large to factor by
/// trial division.
fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let mut poly: Vec<Rational> = coeffs.to_vec();
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
    if poly.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // strip zero roots
    let lead_zero = poly.iter().take_while(|c| c.is_zero()).count();
    if lead_zero > 0 {
        roots.push(Rational::zero());
        poly.drain(..lead_zero);
    }
    if poly.len() <= 1 {
        return roots;
    }
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.0.denom()));
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (&c.0 * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let (Some(a0), Some(an)) = (
        ints[0].abs().to_u64(),
        ints[ints.len() - 1].abs().to_u64(),
    ) else {
        return roots;
    };
    let (Some(ps), Some(qs)) = (divisors(a0), divisors(an)) else {
        return roots;
    };
    let mut found: Vec<Rational> = Vec::new();
    for p in &ps {
        for q in &qs {
            for sign in [1i64, -1] {
                let cand = Rational(BigRational::new(
                    BigInt::from(*p) * BigInt::from(sign),
                    BigInt::from(*q),
                ));
                if !found.contains(&cand) && eval_poly(&poly, &cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    found.sort();
    roots.extend(found);
    roots
}

fn divisors(n: u64) -> Option<Vec<u64>> {
    if n == 0 {
        return Some(Vec::new());
    }
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

// ---------------------------------------------------------------------------
// Prime fields

/// Residues modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc: u128 = 1;
        let m = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Fp(acc as u64)
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
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in prime field")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

/// Largest prime field in which `roots` scans every residue.
const ROOT_SCAN_LIMIT: u64 = 1 << 20;

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        let p = BigInt::from(P);
        let num = r.numer().mod_floor(&p).to_u64()?;
        let den = r.denom().mod_floor(&p).to_u64()?;
        let den = Fp::<P>(den).inv()?;
        Some(Fp::<P>(num) * den)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.0))
    }

    fn characteristic() -> u64 {
        P
    }

    fn kind() -> FieldKind {
        FieldKind::Prime(P)
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        if coeffs.iter().all(|c| c.is_zero()) || P > ROOT_SCAN_LIMIT {
            return Vec::new();
        }
        (0..P)
            .map(Fp)
            .filter(|x| eval_poly(coeffs, x).is_zero())
            .collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let a = Rational::new(2, -4);
        assert_eq!(a.to_string(), "-1/2");
        assert_eq!(a.denom(), &BigInt::from(2));
    }

    #[test]
    fn prime_field_inverse() {
        type F7 = Fp<7>;
        for v in 1..7 {
            let x = F7::new(v);
            assert!((x * x.inv().unwrap()).is_one());
        }
        assert_eq!(F7::from_rational(&Rational::new(1, 2).0), Some(F7::new(4)));
        assert_eq!(F7::from_rational(&Rational::new(1, 7).0), None);
    }

    #[test]
    fn rational_roots_of_quadratic() {
        // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        let c = vec![Rational::from_i64(1), Rational::from_i64(-3), Rational::from_i64(2)];
        assert_eq!(Rational::roots(&c), vec![Rational::new(1, 2), Rational::one()]);
        // t^2 + 1 has no rational roots
        let c = vec![Rational::one(), Rational::zero(), Rational::one()];
        assert!(Rational::roots(&c).is_empty());
        // t^2 - t
        let c = vec![Rational::zero(), Rational::from_i64(-1), Rational::one()];
        assert_eq!(Rational::roots(&c), vec![Rational::zero(), Rational::one()]);
    }

    #[test]
    fn prime_field_roots() {
        type F5 = Fp<5>;
        // t^2 - 1 over F_5
        let c = vec![F5::new(-1), F5::zero(), F5::one()];
        assert_eq!(F5::roots(&c), vec![F5::new(1), F5::new(4)]);
    }
}
