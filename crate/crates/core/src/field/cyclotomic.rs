use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldError, FieldSpec, Term};

/// `Q(z)` with `z` a primitive `n`-th root of unity, in the power basis
/// `1, z, ..., z^(phi(n)-1)` reduced modulo the `n`-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    n: u32,
    /// `reduced[k]` is `z^k` in the power basis, for `k < max(n, 2 phi - 1)`.
    reduced: Vec<Vec<BigInt>>,
}

/// A cyclotomic element stored as integer numerators over one common
/// denominator. Canonical: `den > 0` and `gcd(den, num...) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycElem {
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycElem {
    /// Coefficient of `z^k` in the power basis.
    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn degree_bound(&self) -> usize {
        self.num.len()
    }

    fn normalized(mut num: Vec<BigInt>, mut den: BigInt) -> CycElem {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if num.iter().all(Zero::is_zero) {
            return CycElem {
                num,
                den: BigInt::one(),
            };
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den /= &g;
        }
        CycElem { num, den }
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic integer polynomial.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The `n`-th cyclotomic polynomial, coefficients from degree 0 upward,
/// as the Möbius product of `x^d - 1` over the divisors `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let x_pow_minus_one = |d: u32| {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = -BigInt::one();
        p[d as usize] = BigInt::one();
        p
    };
    let mut numer = vec![BigInt::one()];
    let mut denom = vec![BigInt::one()];
    for d in divisors(n) {
        match mobius(n / d) {
            1 => numer = poly_mul(&numer, &x_pow_minus_one(d)),
            -1 => denom = poly_mul(&denom, &x_pow_minus_one(d)),
            _ => {}
        }
    }
    poly_div_exact(&numer, &denom)
}

// Dense polynomials over Q, used only for inversion.
type QPoly = Vec<BigRational>;

fn qpoly_trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn qpoly_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut rem = a.clone();
    qpoly_trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    qpoly_trim(&mut rem);
    (quot, rem)
}

fn qpoly_sub_mul(a: &QPoly, q: &QPoly, b: &QPoly) -> QPoly {
    let len = a.len().max(if q.is_empty() || b.is_empty() {
        0
    } else {
        q.len() + b.len() - 1
    });
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in q.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] -= x * y;
        }
    }
    qpoly_trim(&mut out);
    out
}

impl CyclotomicField {
    pub fn new(n: u32) -> Result<Self, FieldError> {
        if n < 2 {
            return Err(FieldError::InvalidCyclotomicOrder(n));
        }
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        let table_len = (n as usize).max(2 * phi - 1);
        let mut reduced = Vec::with_capacity(table_len);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..table_len {
            reduced.push(cur.clone());
            // multiply by z, then fold the degree-phi coefficient back in
            let top = cur[phi - 1].clone();
            for k in (1..phi).rev() {
                cur[k] = cur[k - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for k in 0..phi {
                    cur[k] -= &top * &modulus[k];
                }
            }
        }
        Ok(CyclotomicField { n, reduced })
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// Euler's totient of the order, the degree of the extension.
    pub fn phi(&self) -> usize {
        self.reduced[0].len()
    }

    /// `z^k` for any `k`.
    pub fn zeta_pow(&self, k: u64) -> CycElem {
        let k = (k % self.n as u64) as usize;
        CycElem {
            num: self.reduced[k].clone(),
            den: BigInt::one(),
        }
    }

    pub fn from_rational_coeffs(&self, coeffs: &[BigRational]) -> CycElem {
        let terms: Vec<Term> = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| Term {
                coeff: c.clone(),
                exp: k as u32,
            })
            .collect();
        self.from_terms(&terms).expect("cyclotomic terms always reduce")
    }

    fn to_qpoly(&self, a: &CycElem) -> QPoly {
        let mut p: QPoly = (0..self.phi()).map(|k| a.coeff(k)).collect();
        qpoly_trim(&mut p);
        p
    }
}

impl Field for CyclotomicField {
    type Elem = CycElem;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Cyclotomic { n: self.n }
    }

    fn zero(&self) -> CycElem {
        CycElem {
            num: vec![BigInt::zero(); self.phi()],
            den: BigInt::one(),
        }
    }

    fn one(&self) -> CycElem {
        self.zeta_pow(0)
    }

    fn from_int(&self, v: i64) -> CycElem {
        let mut e = self.zero();
        e.num[0] = v.into();
        e
    }

    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        if a.den == b.den {
            let num = a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect();
            return CycElem::normalized(num, a.den.clone());
        }
        let num = a.num.iter().zip(&b.num).map(|(x, y)| x * &b.den + y * &a.den).collect();
        CycElem::normalized(num, &a.den * &b.den)
    }

    fn neg(&self, a: &CycElem) -> CycElem {
        CycElem {
            num: a.num.iter().map(|x| -x).collect(),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        let phi = self.phi();
        let mut wide = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    wide[i + j] += x * y;
                }
            }
        }
        let mut num: Vec<BigInt> = wide.drain(..phi).collect();
        for (offset, c) in wide.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, r) in self.reduced[phi + offset].iter().enumerate() {
                if !r.is_zero() {
                    num[k] += c * r;
                }
            }
        }
        CycElem::normalized(num, &a.den * &b.den)
    }

    fn inv(&self, a: &CycElem) -> Result<CycElem, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        // Extended Euclid on (modulus, a); tracks only the coefficient of a.
        let mut modulus: QPoly = cyclotomic_polynomial(self.n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        qpoly_trim(&mut modulus);
        let (mut r0, mut r1) = (modulus, self.to_qpoly(a));
        let (mut t0, mut t1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let t = qpoly_sub_mul(&t0, &q, &t1);
            r0 = core::mem::replace(&mut r1, r);
            t0 = core::mem::replace(&mut t1, t);
        }
        // r1 is a nonzero constant c with t1 * a = c (mod modulus)
        let c = r1[0].clone();
        let coeffs: Vec<BigRational> = t1.iter().map(|x| x / &c).collect();
        Ok(self.from_rational_coeffs(&coeffs))
    }

    fn is_zero(&self, a: &CycElem) -> bool {
        a.num.iter().all(Zero::is_zero)
    }

    fn from_terms(&self, terms: &[Term]) -> Result<CycElem, String> {
        let mut acc = self.zero();
        for t in terms {
            let mut monomial = self.zeta_pow(t.exp as u64);
            for c in monomial.num.iter_mut() {
                *c *= t.coeff.numer();
            }
            monomial = CycElem::normalized(monomial.num, t.coeff.denom().clone());
            acc = self.add(&acc, &monomial);
        }
        Ok(acc)
    }

    fn format(&self, a: &CycElem) -> String {
        let mut out = String::new();
        for k in (0..self.phi()).rev() {
            let c = a.coeff(k);
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { "-" } else { "+" });
            }
            let monomial = match k {
                0 => String::new(),
                1 => String::from("z"),
                _ => format!("z^{k}"),
            };
            if monomial.is_empty() {
                let _ = write!(out, "{mag}");
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                let _ = write!(out, "{mag}*{monomial}");
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn primitive_root(&self) -> Result<CycElem, FieldError> {
        Ok(self.zeta_pow(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(18), ints(&[1, 0, 0, -1, 0, 0, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic_polynomial(105);
        assert_eq!(p.len() - 1, 48);
        assert_eq!(p[7], BigInt::from(-2));
        assert_eq!(p[41], BigInt::from(-2));
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i32> = (1..=10).map(mobius).collect();
        assert_eq!(mu, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn formatting() {
        let f = CyclotomicField::new(5).unwrap();
        let x = f.parse("z^2-1/2*z+3").unwrap();
        assert_eq!(f.format(&x), "z^2-1/2*z+3");
        assert_eq!(f.format(&f.zero()), "0");
        assert_eq!(f.format(&f.parse("-z^3").unwrap()), "-z^3");
        // z^4 = -1 - z - z^2 - z^3
        assert_eq!(f.format(&f.parse("z^4").unwrap()), "-z^3-z^2-z-1");
    }
}
