//! Exact p-adic numbers at capped relative precision.
//!
//! A nonzero element of Q_p is stored as `p^v * unit` where the unit is a
//! canonical residue in `[1, p^N - 1]` coprime to `p`, known modulo `p^N`.
//! The absolute precision of such a value is `v + N`: the value is pinned
//! modulo `p^(v+N)`. No rounding ever happens; operations only cap precision.
//!
//! Exact zero and "zero to precision" are distinct states. Arithmetic that
//! cancels every known digit reports [`PadwError::PrecisionExhausted`]
//! instead of fabricating an exact zero, because valuation-preservation
//! arguments need exact valuations.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{PadwError, PadwResult};

/// Largest admissible prime (exclusive). Keeps p^N sizes predictable.
pub const PRIME_CAP: u64 = 1 << 31;

/// A checked prime below [`PRIME_CAP`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Prime(u64);

impl Prime {
    /// Validates primality with a deterministic Miller-Rabin test.
    pub fn new(p: u64) -> PadwResult<Self> {
        if p >= PRIME_CAP {
            return Err(PadwError::PrimeTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(PadwError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `1/(p-1)`, the convergence-radius exponent shared by exp and W.
    pub fn radius_exponent(self) -> Ratio<i64> {
        Ratio::new(1, self.0 as i64 - 1)
    }

    pub(crate) fn big(self) -> BigUint {
        BigUint::from(self.0)
    }

    /// `p^k` as a big integer.
    pub fn pow_big(self, k: u32) -> BigUint {
        self.big().pow(k)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Deterministic witness set for all n < 3.3e24, far beyond the cap.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The exponent `ord_p(x)` as an exact rational, or `Infinite` for exact
/// zero. The p-adic absolute value is `|x|_p = p^(-ord)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedValuation {
    Finite(Ratio<i64>),
    Infinite,
}

impl ExtendedValuation {
    pub fn integer(v: i64) -> Self {
        ExtendedValuation::Finite(Ratio::from_integer(v))
    }

    pub fn finite(num: i64, den: i64) -> Self {
        ExtendedValuation::Finite(Ratio::new(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedValuation::Finite(_))
    }

    pub fn ratio(&self) -> Option<Ratio<i64>> {
        match self {
            ExtendedValuation::Finite(q) => Some(*q),
            ExtendedValuation::Infinite => None,
        }
    }

    /// Valuation of `x^n` given the valuation of `x`.
    pub fn scale(&self, n: i64) -> Self {
        match self {
            ExtendedValuation::Finite(q) => ExtendedValuation::Finite(q * n),
            ExtendedValuation::Infinite => ExtendedValuation::Infinite,
        }
    }
}

impl PartialOrd for ExtendedValuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedValuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ExtendedValuation::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl std::ops::Add for ExtendedValuation {
    type Output = ExtendedValuation;
    fn add(self, rhs: Self) -> Self {
        use ExtendedValuation::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl fmt::Display for ExtendedValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValuation::Infinite => write!(f, "+inf"),
            ExtendedValuation::Finite(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

/// Sum of the base-p digits of `n`.
pub fn digit_sum(n: u64, p: Prime) -> u64 {
    assert!(n >= 1, "digit_sum requires n >= 1");
    let p = p.get();
    let mut m = n;
    let mut s = 0;
    while m > 0 {
        s += m % p;
        m /= p;
    }
    s
}

/// `ord_p(n!)` by the digit formula `(n - S_n)/(p - 1)`.
pub fn ord_factorial(n: u64, p: Prime) -> u64 {
    if n == 0 {
        return 0;
    }
    let s = digit_sum(n, p);
    let v = (n - s) / (p.get() - 1);
    debug_assert_eq!((n - s) % (p.get() - 1), 0);
    debug_assert_eq!(v, legendre_floor_sum(n, p));
    v
}

fn legendre_floor_sum(n: u64, p: Prime) -> u64 {
    let mut q = p.get();
    let mut total = 0;
    while q <= n {
        total += n / q;
        match q.checked_mul(p.get()) {
            Some(next) => q = next,
            None => break,
        }
    }
    total
}

/// `ord_p(n)` for a machine integer, `None` for zero.
pub fn ord_of_u64(n: u64, p: Prime) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let p = p.get();
    let mut m = n;
    let mut v = 0;
    while m % p == 0 {
        v += 1;
        m /= p;
    }
    Some(v)
}

/// `ord_p(n)` for a big integer, `None` for zero.
pub fn ord_of_bigint(n: &BigInt, p: Prime) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    Some(ord_of_biguint(&n.magnitude().clone(), p).0)
}

/// Returns `(ord_p(n), n / p^ord)` for nonzero `n`.
pub(crate) fn ord_of_biguint(n: &BigUint, p: Prime) -> (u64, BigUint) {
    debug_assert!(!n.is_zero());
    let pb = p.big();
    let mut m = n.clone();
    let mut v = 0u64;
    loop {
        let (q, r) = m.div_rem(&pb);
        if r.is_zero() {
            v += 1;
            m = q;
        } else {
            return (v, m);
        }
    }
}

/// `ord_p` of an exact rational; `Infinite` for zero.
pub fn ord_of_big_rational(q: &BigRational, p: Prime) -> ExtendedValuation {
    if q.is_zero() {
        return ExtendedValuation::Infinite;
    }
    let vn = ord_of_bigint(q.numer(), p).expect("nonzero numerator") as i64;
    let vd = ord_of_bigint(q.denom(), p).expect("nonzero denominator") as i64;
    ExtendedValuation::integer(vn - vd)
}

/// Inverse of `u` modulo `m`; requires `gcd(u, m) = 1`.
pub(crate) fn mod_inverse(u: &BigUint, m: &BigUint) -> BigUint {
    let u = BigInt::from(u.clone());
    let m_int = BigInt::from(m.clone());
    let ext = u.extended_gcd(&m_int);
    debug_assert!(ext.gcd.is_one(), "inverse of non-unit");
    let mut x = ext.x % &m_int;
    if x.is_negative() {
        x += &m_int;
    }
    x.magnitude().clone()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// Exact zero; valuation +inf.
    Zero,
    /// Vanishes modulo p^abs; the exact valuation is unknown.
    ZeroToPrecision { abs: i64 },
    /// p^v * unit with unit in [1, p^n - 1], p not dividing unit.
    Unit { v: i64, unit: BigUint, n: u32 },
}

/// An element of Q_p at capped relative precision.
///
/// Immutable after construction; all operations are pure and return fresh
/// values, so sharing across threads needs no synchronization.
///
/// `PartialEq` compares representations (prime, valuation, unit, precision).
/// Use [`PadicNumber::congruent_mod`] for congruence at a chosen precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicNumber {
    prime: Prime,
    repr: Repr,
}

/// Digit expansion of a nonzero value, for display: the value is
/// `p^valuation * (digits[0] + digits[1] p + ...)` up to `O(p^abs_precision)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicDigits {
    pub valuation: i64,
    pub digits: Vec<u64>,
    pub abs_precision: i64,
}

impl PadicNumber {
    /// Exact zero.
    pub fn zero(prime: Prime) -> Self {
        PadicNumber { prime, repr: Repr::Zero }
    }

    /// A value known only to vanish modulo `p^abs`.
    pub fn zero_to_precision(prime: Prime, abs: i64) -> Self {
        PadicNumber { prime, repr: Repr::ZeroToPrecision { abs } }
    }

    /// The p-adic expansion of `a/b` at relative precision `n`.
    pub fn from_rational(a: &BigInt, b: &BigInt, prime: Prime, n: u32) -> PadwResult<Self> {
        assert!(n >= 1, "relative precision must be at least 1");
        if b.is_zero() {
            return Err(PadwError::DivisionByZero);
        }
        if a.is_zero() {
            return Ok(Self::zero(prime));
        }
        let (va, ua) = ord_of_biguint(a.magnitude(), prime);
        let (vb, ub) = ord_of_biguint(b.magnitude(), prime);
        let modulus = prime.pow_big(n);
        let mut unit = (ua % &modulus) * mod_inverse(&(ub % &modulus), &modulus) % &modulus;
        if (a.is_negative()) != (b.is_negative()) {
            unit = &modulus - unit;
        }
        debug_assert!(!unit.is_zero());
        Ok(PadicNumber {
            prime,
            repr: Repr::Unit { v: va as i64 - vb as i64, unit, n },
        })
    }

    /// Convenience constructor for small integers.
    pub fn from_integer(a: i64, prime: Prime, n: u32) -> PadwResult<Self> {
        Self::from_rational(&BigInt::from(a), &BigInt::one(), prime, n)
    }

    /// The unit 1 at relative precision `n`.
    pub fn one(prime: Prime, n: u32) -> Self {
        PadicNumber {
            prime,
            repr: Repr::Unit { v: 0, unit: BigUint::one(), n },
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    pub fn is_zero_to_precision(&self) -> bool {
        matches!(self.repr, Repr::ZeroToPrecision { .. })
    }

    /// Valuation of the leading digit for nonzero values.
    pub(crate) fn unit_valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Unit { v, .. } => Some(*v),
            _ => None,
        }
    }

    /// The canonical unit residue, for nonzero values.
    pub fn unit(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Unit { unit, .. } => Some(unit),
            _ => None,
        }
    }

    /// Relative precision N, for nonzero values.
    pub fn relative_precision(&self) -> Option<u32> {
        match &self.repr {
            Repr::Unit { n, .. } => Some(*n),
            _ => None,
        }
    }

    /// Absolute precision `v + N` (or the vanishing bound for
    /// zero-to-precision values). `None` means exact zero: unbounded.
    pub fn absolute_precision(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero => None,
            Repr::ZeroToPrecision { abs } => Some(*abs),
            Repr::Unit { v, n, .. } => Some(v + *n as i64),
        }
    }

    /// Exact valuation. `Infinite` for exact zero; an error for values that
    /// merely vanish to precision, whose valuation is only bounded below.
    pub fn valuation(&self) -> PadwResult<ExtendedValuation> {
        match &self.repr {
            Repr::Zero => Ok(ExtendedValuation::Infinite),
            Repr::ZeroToPrecision { abs } => Err(PadwError::AmbiguousZero {
                prime: self.prime.get(),
                abs_precision: *abs,
            }),
            Repr::Unit { v, .. } => Ok(ExtendedValuation::integer(*v)),
        }
    }

    fn require_arithmetic_operand(&self) -> PadwResult<()> {
        if let Repr::ZeroToPrecision { abs } = self.repr {
            return Err(PadwError::AmbiguousZero {
                prime: self.prime.get(),
                abs_precision: abs,
            });
        }
        Ok(())
    }

    fn check_same_prime(&self, other: &Self) -> PadwResult<()> {
        if self.prime != other.prime {
            return Err(PadwError::PrimeMismatch {
                left: self.prime.get(),
                right: other.prime.get(),
            });
        }
        Ok(())
    }

    /// Addition at the sharpest correct precision: the result's absolute
    /// precision is the minimum of the operands'. Full cancellation is
    /// reported as [`PadwError::PrecisionExhausted`].
    pub fn add(&self, other: &Self) -> PadwResult<Self> {
        self.check_same_prime(other)?;
        self.require_arithmetic_operand()?;
        other.require_arithmetic_operand()?;
        let (x, y) = match (&self.repr, &other.repr) {
            (Repr::Zero, _) => return Ok(other.clone()),
            (_, Repr::Zero) => return Ok(self.clone()),
            (
                Repr::Unit { v: vx, unit: ux, n: nx },
                Repr::Unit { v: vy, unit: uy, n: ny },
            ) => ((*vx, ux, *nx), (*vy, uy, *ny)),
            _ => unreachable!("zero-to-precision rejected above"),
        };
        let abs = (x.0 + x.2 as i64).min(y.0 + y.2 as i64);
        let v_min = x.0.min(y.0);
        let k = (abs - v_min) as u32;
        debug_assert!(k >= 1);
        let modulus = self.prime.pow_big(k);
        let lift = |(v, u, _n): (i64, &BigUint, u32)| -> BigUint {
            (u * self.prime.pow_big((v - v_min) as u32)) % &modulus
        };
        let sum = (lift(x) + lift(y)) % &modulus;
        if sum.is_zero() {
            return Err(PadwError::PrecisionExhausted {
                prime: self.prime.get(),
                abs_precision: abs,
            });
        }
        let (d, unit) = ord_of_biguint(&sum, self.prime);
        let v = v_min + d as i64;
        let n = (abs - v) as u32;
        debug_assert!(n >= 1 && unit < self.prime.pow_big(n));
        Ok(PadicNumber { prime: self.prime, repr: Repr::Unit { v, unit, n } })
    }

    pub fn sub(&self, other: &Self) -> PadwResult<Self> {
        self.add(&other.neg()?)
    }

    /// Subtraction that turns full cancellation into an explicit
    /// zero-to-precision value instead of an error. Used for residuals.
    pub fn sub_or_zero(&self, other: &Self) -> PadwResult<Self> {
        match self.sub(other) {
            Ok(d) => Ok(d),
            Err(PadwError::PrecisionExhausted { abs_precision, .. }) => {
                Ok(PadicNumber::zero_to_precision(self.prime, abs_precision))
            }
            Err(e) => Err(e),
        }
    }

    pub fn neg(&self) -> PadwResult<Self> {
        match &self.repr {
            Repr::Zero => Ok(self.clone()),
            Repr::ZeroToPrecision { .. } => Ok(self.clone()),
            Repr::Unit { v, unit, n } => {
                let unit = self.prime.pow_big(*n) - unit;
                Ok(PadicNumber { prime: self.prime, repr: Repr::Unit { v: *v, unit, n: *n } })
            }
        }
    }

    /// Multiplication: valuations add, relative precisions take the minimum.
    pub fn mul(&self, other: &Self) -> PadwResult<Self> {
        self.check_same_prime(other)?;
        self.require_arithmetic_operand()?;
        other.require_arithmetic_operand()?;
        match (&self.repr, &other.repr) {
            (Repr::Zero, _) | (_, Repr::Zero) => Ok(Self::zero(self.prime)),
            (
                Repr::Unit { v: vx, unit: ux, n: nx },
                Repr::Unit { v: vy, unit: uy, n: ny },
            ) => {
                let n = (*nx).min(*ny);
                let modulus = self.prime.pow_big(n);
                let unit = (ux * uy) % &modulus;
                debug_assert!(!unit.is_zero());
                Ok(PadicNumber {
                    prime: self.prime,
                    repr: Repr::Unit { v: vx + vy, unit, n },
                })
            }
            _ => unreachable!(),
        }
    }

    /// Division by a nonzero value.
    pub fn div(&self, other: &Self) -> PadwResult<Self> {
        self.check_same_prime(other)?;
        self.require_arithmetic_operand()?;
        other.require_arithmetic_operand()?;
        match (&self.repr, &other.repr) {
            (_, Repr::Zero) => Err(PadwError::DivisionByZero),
            (Repr::Zero, _) => Ok(Self::zero(self.prime)),
            (
                Repr::Unit { v: vx, unit: ux, n: nx },
                Repr::Unit { v: vy, unit: uy, n: ny },
            ) => {
                let n = (*nx).min(*ny);
                let modulus = self.prime.pow_big(n);
                let unit = (ux % &modulus) * mod_inverse(&(uy % &modulus), &modulus) % &modulus;
                debug_assert!(!unit.is_zero());
                Ok(PadicNumber {
                    prime: self.prime,
                    repr: Repr::Unit { v: vx - vy, unit, n },
                })
            }
            _ => unreachable!(),
        }
    }

    /// Reduces the value modulo `p^abs`. Values with valuation at or above
    /// `abs` collapse to zero-to-precision.
    pub fn cap_absolute(&self, abs: i64) -> Self {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::ZeroToPrecision { abs: a } => {
                PadicNumber::zero_to_precision(self.prime, (*a).min(abs))
            }
            Repr::Unit { v, unit, n } => {
                if *v >= abs {
                    return PadicNumber::zero_to_precision(self.prime, abs);
                }
                let n_new = (*n).min((abs - v) as u32);
                if n_new == *n {
                    return self.clone();
                }
                let unit = unit % self.prime.pow_big(n_new);
                debug_assert!(!unit.is_zero());
                PadicNumber { prime: self.prime, repr: Repr::Unit { v: *v, unit, n: n_new } }
            }
        }
    }

    /// Whether `self ≡ other (mod p^abs)`. Errors if the operands do not
    /// carry enough digits to decide.
    pub fn congruent_mod(&self, other: &Self, abs: i64) -> PadwResult<bool> {
        self.check_same_prime(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Zero, Repr::Zero) => return Ok(true),
            _ => {}
        }
        match self.sub(other) {
            Ok(d) => match d.repr {
                Repr::Unit { v, .. } => Ok(v >= abs),
                _ => unreachable!(),
            },
            Err(PadwError::PrecisionExhausted { abs_precision, .. }) => {
                if abs_precision >= abs {
                    Ok(true)
                } else {
                    Err(PadwError::AmbiguousZero {
                        prime: self.prime.get(),
                        abs_precision,
                    })
                }
            }
            Err(e) => Err(e),
        }
    }

    /// Base-p digits of the unit part, for nonzero values.
    pub fn digits(&self) -> Option<PadicDigits> {
        match &self.repr {
            Repr::Unit { v, unit, n } => {
                let p = self.prime.big();
                let mut digits = Vec::with_capacity(*n as usize);
                let mut m = unit.clone();
                for _ in 0..*n {
                    let (q, r) = m.div_rem(&p);
                    digits.push(r.to_u64().expect("digit below a u64 prime"));
                    m = q;
                }
                debug_assert!(m.is_zero());
                Some(PadicDigits {
                    valuation: *v,
                    digits,
                    abs_precision: v + *n as i64,
                })
            }
            _ => None,
        }
    }

    /// The shared textual literal: `p^<v>*(d0,d1,...,dK)+O(p^<v+N>)` for
    /// nonzero values, `0` for exact zero, `0+O(p^<A>)` for vanished values.
    pub fn to_literal(&self) -> String {
        match &self.repr {
            Repr::Zero => "0".to_string(),
            Repr::ZeroToPrecision { abs } => format!("0+O({}^{})", self.prime, abs),
            Repr::Unit { .. } => {
                let d = self.digits().expect("nonzero");
                let digits: Vec<String> = d.digits.iter().map(|x| x.to_string()).collect();
                format!(
                    "{}^{}*({})+O({}^{})",
                    self.prime,
                    d.valuation,
                    digits.join(","),
                    self.prime,
                    d.abs_precision
                )
            }
        }
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Prime {
        Prime::new(5).unwrap()
    }

    fn q(a: i64, b: i64, p: u64, n: u32) -> PadicNumber {
        PadicNumber::from_rational(
            &BigInt::from(a),
            &BigInt::from(b),
            Prime::new(p).unwrap(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(2147483647).is_ok()); // 2^31 - 1, Mersenne
        assert_eq!(Prime::new(4), Err(PadwError::NotPrime(4)));
        assert_eq!(Prime::new(1), Err(PadwError::NotPrime(1)));
        assert_eq!(Prime::new(1 << 31), Err(PadwError::PrimeTooLarge(1 << 31)));
    }

    #[test]
    fn from_rational_zero() {
        let x = q(0, 1, 5, 8);
        assert!(x.is_exact_zero());
        assert_eq!(x.valuation().unwrap(), ExtendedValuation::Infinite);
    }

    #[test]
    fn from_rational_ten() {
        let x = q(10, 1, 5, 4);
        assert_eq!(x.unit_valuation(), Some(1));
        assert_eq!(x.unit().unwrap(), &BigUint::from(2u32));
    }

    #[test]
    fn from_rational_third() {
        // Oracle: the inverse of 3 modulo 5^4 satisfies 3*u ≡ 1 (mod 625).
        let x = q(1, 3, 5, 4);
        assert_eq!(x.unit_valuation(), Some(0));
        let u = x.unit().unwrap().to_u64().unwrap();
        assert_eq!(u, 417);
        assert_eq!(3 * u % 625, 1);
    }

    #[test]
    fn add_identity() {
        let x = q(7, 3, 5, 6);
        let z = PadicNumber::zero(p5());
        assert_eq!(x.add(&z).unwrap(), x);
        assert_eq!(z.add(&x).unwrap(), x);
    }

    #[test]
    fn add_five_plus_five() {
        let x = q(5, 1, 5, 4);
        let s = x.add(&x).unwrap();
        assert_eq!(s.unit_valuation(), Some(1));
        assert_eq!(s.unit().unwrap(), &BigUint::from(2u32));
        assert_eq!(s.relative_precision(), Some(4));
    }

    #[test]
    fn add_full_cancellation() {
        let one = q(1, 1, 5, 4);
        let minus_one = q(-1, 1, 5, 4);
        assert_eq!(minus_one.unit().unwrap(), &BigUint::from(624u32));
        let err = one.add(&minus_one).unwrap_err();
        assert_eq!(err, PadwError::PrecisionExhausted { prime: 5, abs_precision: 4 });
    }

    #[test]
    fn add_partial_cancellation_shrinks_relative_precision() {
        // 1 + (5^2 - 1) = 25: three leading digits cancel.
        let a = q(1, 1, 5, 6);
        let b = q(24, 1, 5, 6);
        let s = a.add(&b).unwrap();
        assert_eq!(s.unit_valuation(), Some(2));
        assert_eq!(s.relative_precision(), Some(4)); // abs precision 6 kept
        assert_eq!(s.unit().unwrap(), &BigUint::one());
    }

    #[test]
    fn mul_identity_and_div() {
        let x = q(9, 7, 5, 5);
        let one = PadicNumber::one(p5(), 5);
        assert_eq!(x.mul(&one).unwrap(), x);
        let ten = q(10, 1, 5, 4);
        let two = q(2, 1, 5, 4);
        let h = ten.div(&two).unwrap();
        assert_eq!(h.unit_valuation(), Some(1));
        assert_eq!(h.unit().unwrap(), &BigUint::one());
    }

    #[test]
    fn div_by_zero() {
        let x = q(1, 1, 5, 4);
        let z = PadicNumber::zero(p5());
        assert_eq!(x.div(&z), Err(PadwError::DivisionByZero));
    }

    #[test]
    fn neg_is_p_pow_n_minus_unit() {
        // Oracle: p^N - 1 = 624.
        let m = q(1, 1, 5, 4).neg().unwrap();
        assert_eq!(m.unit().unwrap(), &BigUint::from(5u32.pow(4) - 1));
        assert_eq!(m, q(-1, 1, 5, 4));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(q(10, 1, 5, 6).valuation().unwrap(), ExtendedValuation::integer(1));
        assert_eq!(q(9, 25, 5, 6).valuation().unwrap(), ExtendedValuation::integer(-2));
        let ztp = PadicNumber::zero_to_precision(p5(), 9);
        assert_eq!(
            ztp.valuation(),
            Err(PadwError::AmbiguousZero { prime: 5, abs_precision: 9 })
        );
    }

    #[test]
    fn prime_mismatch_rejected() {
        let x = q(1, 1, 5, 4);
        let y = q(1, 1, 7, 4);
        assert!(matches!(x.add(&y), Err(PadwError::PrimeMismatch { .. })));
    }

    #[test]
    fn digit_sum_examples() {
        let p3 = Prime::new(3).unwrap();
        assert_eq!(digit_sum(1, p3), 1);
        assert_eq!(digit_sum(72, p3), 4); // 72 = 2200 base 3
        for k in 1..10 {
            assert_eq!(digit_sum(3u64.pow(k), p3), 1);
            assert_eq!(digit_sum(2u64.pow(k), Prime::new(2).unwrap()), 1);
        }
    }

    #[test]
    fn ord_factorial_examples() {
        let p2 = Prime::new(2).unwrap();
        assert_eq!(ord_factorial(0, p2), 0);
        // Oracle: 4! = 24 = 2^3 * 3 by direct factorization.
        let mut f = 1u64;
        for k in 2..=4 {
            f *= k;
        }
        let mut v = 0;
        while f % 2 == 0 {
            v += 1;
            f /= 2;
        }
        assert_eq!(v, 3);
        assert_eq!(ord_factorial(4, p2), 3);
        // Oracle: Legendre sum floor(100/5) + floor(100/25) = 20 + 4.
        assert_eq!(ord_factorial(100, p5()), 24);
    }

    #[test]
    fn digits_examples() {
        let d = q(10, 1, 5, 3).digits().unwrap();
        assert_eq!(d.valuation, 1);
        assert_eq!(d.digits, vec![2, 0, 0]);

        // Oracle: 1/3 ≡ 42 (mod 125) since 3*42 = 126 ≡ 1, and
        // 42 = 2 + 3*5 + 1*25.
        assert_eq!(3 * 42 % 125, 1);
        let d = q(1, 3, 5, 3).digits().unwrap();
        assert_eq!(d.valuation, 0);
        assert_eq!(d.digits, vec![2, 3, 1]);

        let d = q(-1, 1, 5, 3).digits().unwrap();
        assert_eq!(d.valuation, 0);
        assert_eq!(d.digits, vec![4, 4, 4]);
    }

    #[test]
    fn literal_format() {
        assert_eq!(q(10, 1, 5, 3).to_literal(), "5^1*(2,0,0)+O(5^4)");
        assert_eq!(PadicNumber::zero(p5()).to_literal(), "0");
        assert_eq!(PadicNumber::zero_to_precision(p5(), 8).to_literal(), "0+O(5^8)");
        assert_eq!(q(9, 25, 5, 2).to_literal(), "5^-2*(4,1)+O(5^0)");
    }

    #[test]
    fn congruence_check() {
        let x = q(1, 3, 5, 8);
        let y = q(1, 3, 5, 4);
        assert!(x.congruent_mod(&y, 4).unwrap());
        let z = q(2, 3, 5, 8);
        assert!(!x.congruent_mod(&z, 4).unwrap());
    }

    #[test]
    fn cap_absolute_collapses_high_valuation() {
        let x = q(125, 1, 5, 4); // v = 3
        let c = x.cap_absolute(2);
        assert!(c.is_zero_to_precision());
        assert_eq!(c.absolute_precision(), Some(2));
        let k = x.cap_absolute(5);
        assert_eq!(k.relative_precision(), Some(2));
    }

    #[test]
    fn extended_valuation_order_and_sum() {
        let a = ExtendedValuation::finite(1, 2);
        let b = ExtendedValuation::integer(1);
        assert!(a < b);
        assert!(b < ExtendedValuation::Infinite);
        assert_eq!(a + b, ExtendedValuation::finite(3, 2));
        assert_eq!(a + ExtendedValuation::Infinite, ExtendedValuation::Infinite);
        assert_eq!(a.scale(3), ExtendedValuation::finite(3, 2));
        assert_eq!(format!("{}", a), "1/2");
        assert_eq!(format!("{}", ExtendedValuation::Infinite), "+inf");
    }
}
