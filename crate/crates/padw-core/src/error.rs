//! Error types shared by every module of the crate.

use std::fmt;

/// Errors produced by p-adic arithmetic, series evaluation, and analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PadwError {
    /// The candidate modulus failed the primality check.
    NotPrime(u64),
    /// Primes are capped below 2^31 so that p^N sizes stay predictable.
    PrimeTooLarge(u64),
    /// Two operands carry different primes.
    PrimeMismatch { left: u64, right: u64 },
    /// Division by an exact zero.
    DivisionByZero,
    /// Cancellation consumed every known digit; the result is zero modulo
    /// p^abs_precision but its exact valuation is unknown.
    PrecisionExhausted { prime: u64, abs_precision: i64 },
    /// The value is only known to vanish modulo p^abs_precision, so the
    /// requested quantity (valuation, further arithmetic) is undefined.
    AmbiguousZero { prime: u64, abs_precision: i64 },
    /// The input lies outside the series' disk of convergence.
    DivergentInput { prime: u64, valuation: String, threshold: String },
    /// The radius exponent lies at or outside the convergence boundary.
    DivergentRadius { prime: u64, exponent: String },
    /// A Christol-Robba witness parameter violates alpha > 2*nu.
    InvalidWitness { nu: u32, alpha: u32 },
    /// Witness parameters exceed the supported desk-scale range.
    WitnessOutOfRange { detail: String },
    /// Newton iteration failed to increase the residual valuation.
    /// Unreachable when the convergence precondition holds.
    NoConvergence,
}

impl fmt::Display for PadwError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadwError::NotPrime(p) => write!(f, "{} is not prime", p),
            PadwError::PrimeTooLarge(p) => write!(f, "prime {} exceeds the 2^31 cap", p),
            PadwError::PrimeMismatch { left, right } => {
                write!(f, "operands carry different primes {} and {}", left, right)
            }
            PadwError::DivisionByZero => write!(f, "division by zero"),
            PadwError::PrecisionExhausted { prime, abs_precision } => write!(
                f,
                "cancellation exhausted all digits: result is 0 mod {}^{}",
                prime, abs_precision
            ),
            PadwError::AmbiguousZero { prime, abs_precision } => write!(
                f,
                "value is zero to precision O({}^{}); exact valuation unknown",
                prime, abs_precision
            ),
            PadwError::DivergentInput { prime, valuation, threshold } => write!(
                f,
                "series diverges: ord_{}(x) = {} does not exceed {}",
                prime, valuation, threshold
            ),
            PadwError::DivergentRadius { prime, exponent } => write!(
                f,
                "radius exponent {} is not inside the convergence region of p = {}",
                exponent, prime
            ),
            PadwError::InvalidWitness { nu, alpha } => {
                write!(f, "witness requires alpha > 2*nu, got alpha = {}, nu = {}", alpha, nu)
            }
            PadwError::WitnessOutOfRange { detail } => {
                write!(f, "witness parameters out of range: {}", detail)
            }
            PadwError::NoConvergence => {
                write!(f, "Newton residual valuation failed to increase (internal error)")
            }
        }
    }
}

impl std::error::Error for PadwError {}

/// Result alias used throughout the crate.
pub type PadwResult<T> = Result<T, PadwError>;
