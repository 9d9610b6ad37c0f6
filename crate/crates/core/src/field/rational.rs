use alloc::string::String;
use alloc::string::ToString;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, FieldError, FieldSpec, Term};

/// The rational numbers, with arbitrary-precision reduced fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn from_terms(&self, terms: &[Term]) -> Result<BigRational, String> {
        let mut acc = BigRational::zero();
        for t in terms {
            if t.exp != 0 {
                return Err("'z' is not defined over the rationals".into());
            }
            acc += &t.coeff;
        }
        Ok(acc)
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn characteristic(&self) -> u64 {
        0
    }
}
