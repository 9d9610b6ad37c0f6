//! Exact coefficient fields.
//!
//! Every field is a value implementing [`Field`]; its elements are plain data
//! (`Field::Elem`) kept in a canonical reduced form, so structural equality is
//! field equality. Three families are provided: [`Rationals`],
//! [`CyclotomicField`] and [`PrimeField`].

mod cyclotomic;
mod parse;
mod prime;
mod rational;

use alloc::string::String;
use core::fmt;
use core::hash::Hash;

pub use cyclotomic::{cyclotomic_polynomial, CycElem, CyclotomicField};
pub use parse::{parse_terms, Term};
pub use prime::{is_prime, PrimeField};
pub use rational::Rationals;

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic { n: u32 },
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn validate(&self) -> Result<(), FieldError> {
        match *self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Cyclotomic { n } if n >= 2 => Ok(()),
            FieldSpec::Cyclotomic { n } => Err(FieldError::InvalidCyclotomicOrder(n)),
            FieldSpec::Prime { p } if is_prime(p) => Ok(()),
            FieldSpec::Prime { p } => Err(FieldError::NotPrime(p)),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic { n } => write!(f, "Q(z_{n})"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operation needs a cyclotomic field, got {0}")]
    WrongFieldKind(FieldSpec),
    #[error("cyclotomic order must be at least 2, got {0}")]
    InvalidCyclotomicOrder(u32),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field element {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact field. Elements are canonical: two elements are equal as field
/// elements iff they compare equal.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + PartialOrd + Ord + Hash;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Builds an element from `sum coeff * z^exp`. Fields without a
    /// distinguished root reject nonzero exponents.
    #[allow(clippy::wrong_self_convention)]
    fn from_terms(&self, terms: &[Term]) -> Result<Self::Elem, String>;

    /// Renders an element in the textual grammar accepted by [`Field::parse`].
    fn format(&self, a: &Self::Elem) -> String;

    /// The order of the field's prime subfield, 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// The distinguished primitive root of unity of a cyclotomic field.
    fn primitive_root(&self) -> Result<Self::Elem, FieldError> {
        Err(FieldError::WrongFieldKind(self.spec()))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn arith(&self, op: ArithOp, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn parse(&self, text: &str) -> Result<Self::Elem, FieldError> {
        let fail = |reason: String| FieldError::Parse {
            text: text.into(),
            reason,
        };
        let terms = parse_terms(text).map_err(fail)?;
        self.from_terms(&terms).map_err(fail)
    }

    /// Multiplicative order of `a`, searched up to `limit`.
    fn multiplicative_order(&self, a: &Self::Elem, limit: u64) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let mut acc = a.clone();
        for k in 1..=limit {
            if self.is_one(&acc) {
                return Some(k);
            }
            acc = self.mul(&acc, a);
        }
        None
    }
}
