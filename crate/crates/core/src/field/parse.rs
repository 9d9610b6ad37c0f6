use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// One monomial `coeff * z^exp` of a parsed element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub exp: u32,
}

/// Parses the element grammar: a signed sum of terms, each term being a
/// rational coefficient `a` or `a/b`, optionally followed by `*z^k`, `z^k`
/// or `z` (with `z^1` implied by a bare `z`).
///
/// ```text
/// "2/3"   "-4"   "z^2-1/2*z+3"   "-z"   "3z^2"
/// ```
pub fn parse_terms(text: &str) -> Result<Vec<Term>, String> {
    let mut p = Parser {
        chars: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    p.skip_ws();
    if p.at_end() {
        return Err("empty input".into());
    }
    let mut first = true;
    loop {
        p.skip_ws();
        let negative = match p.peek() {
            Some(b'+') if !first => {
                p.pos += 1;
                false
            }
            Some(b'-') => {
                p.pos += 1;
                true
            }
            Some(_) if first => false,
            Some(c) => return Err(format!("expected '+' or '-' at {}, found {:?}", p.pos, c as char)),
            None => break,
        };
        p.skip_ws();
        let mut term = p.term()?;
        if negative {
            term.coeff = -term.coeff;
        }
        terms.push(term);
        first = false;
        p.skip_ws();
        if p.at_end() {
            break;
        }
    }
    Ok(terms)
}

struct Parser<'a> {
    chars: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits = core::str::from_utf8(&self.chars[start..self.pos]).ok()?;
        BigInt::parse_bytes(digits.as_bytes(), 10)
    }

    fn term(&mut self) -> Result<Term, String> {
        let coeff = match self.integer() {
            Some(num) => {
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self
                        .integer()
                        .ok_or_else(|| format!("expected denominator at {}", self.pos))?;
                    if den.is_zero() {
                        return Err("zero denominator".into());
                    }
                    Some(BigRational::new(num, den))
                } else {
                    Some(BigRational::from_integer(num))
                }
            }
            None => None,
        };
        self.skip_ws();
        let has_star = if coeff.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        };
        let exp = if self.peek() == Some(b'z') {
            self.pos += 1;
            self.skip_ws();
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let e = self
                    .integer()
                    .ok_or_else(|| format!("expected exponent at {}", self.pos))?;
                u32::try_from(e).map_err(|_| String::from("exponent too large"))?
            } else {
                1
            }
        } else if has_star {
            return Err(format!("expected 'z' after '*' at {}", self.pos));
        } else if coeff.is_none() {
            return Err(match self.peek() {
                Some(c) => format!("unexpected {:?} at {}", c as char, self.pos),
                None => format!("unexpected end of input at {}", self.pos),
            });
        } else {
            0
        };
        Ok(Term {
            coeff: coeff.unwrap_or_else(BigRational::one),
            exp,
        })
    }
}
