//! Text grammar for polynomials.
//!
//! Terms are separated by `+`/`-`; a term is a product of `*`-separated
//! factors, each either a rational coefficient (`3`, `1/2`) or a variable
//! power (`x1`, `w^2`). Variables are `x1..xn` (indexed by their number) or
//! arbitrary identifiers, resolved in order of first appearance unless a
//! declared name list is supplied. Syntax errors carry the byte offset.

use crate::error::{Error, Result};
use crate::poly::{ExpVec, Polynomial, Rational};
use num::BigInt;

struct RawVar {
    name: String,
    exponent: u32,
    offset: usize,
}

struct RawTerm {
    coef: Rational,
    vars: Vec<RawVar>,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n') | Some(b'\r')) {
            self.pos += 1;
        }
    }

    fn parse_digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err(start, "expected digits");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>()
            .map_err(|e| Error::Parse {
                offset: start,
                message: format!("invalid integer: {e}"),
            })
    }

    fn parse_number(&mut self) -> Result<Rational> {
        let num = self.parse_digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_start = self.pos;
            let den = self.parse_digits()?;
            if den == BigInt::from(0) {
                return self.err(den_start, "zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn parse_ident(&mut self) -> Result<(String, usize)> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.pos += 1,
            _ => return self.err(start, "expected identifier"),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string();
        Ok((name, start))
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        let start = self.pos;
        let e = self.parse_digits()?;
        u32::try_from(&e).map_err(|_| Error::Parse {
            offset: start,
            message: "exponent too large".into(),
        })
    }

    fn parse_term(&mut self, negative: bool) -> Result<RawTerm> {
        let mut coef = if negative {
            -Rational::from_integer(BigInt::from(1))
        } else {
            Rational::from_integer(BigInt::from(1))
        };
        let mut vars = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.parse_number()?;
                    coef *= n;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let (name, offset) = self.parse_ident()?;
                    let exponent = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.parse_exponent()?
                    } else {
                        1
                    };
                    vars.push(RawVar {
                        name,
                        exponent,
                        offset,
                    });
                }
                _ => return self.err(self.pos, "expected coefficient or variable"),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(RawTerm { coef, vars })
    }

    fn parse_all(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err(0, "empty input");
        }
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            terms.push(self.parse_term(negative)?);
            self.skip_ws();
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => {
                    negative = false;
                    self.pos += 1;
                }
                Some(b'-') => {
                    negative = true;
                    self.pos += 1;
                }
                Some(_) => return self.err(self.pos, "expected '+' or '-'"),
            }
        }
    }
}

fn numbered_index(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('x')?;
    if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    rest.parse::<usize>().ok().map(|k| k - 1)
}

/// A parsed polynomial together with the resolved variable names.
#[derive(Debug)]
pub struct ParsedPolynomial {
    pub poly: Polynomial,
    pub names: Vec<String>,
}

/// Parses the text grammar. `declared` pins variable names and their order;
/// otherwise `x<k>` identifiers map to index `k-1` and any other identifiers
/// are assigned by first appearance. `nvars` fixes the ambient variable
/// count (inferred when absent).
pub fn parse_polynomial_named(
    text: &str,
    declared: Option<&[String]>,
    nvars: Option<usize>,
) -> Result<ParsedPolynomial> {
    let terms = Parser::new(text).parse_all()?;

    // resolve names to indices
    let mut names: Vec<String> = declared.map(|d| d.to_vec()).unwrap_or_default();
    let numbered_style = declared.is_none()
        && terms
            .iter()
            .flat_map(|t| t.vars.iter())
            .all(|v| numbered_index(&v.name).is_some());

    let mut resolved: Vec<(Rational, Vec<(usize, u32)>)> = Vec::new();
    let mut max_index = 0usize;
    for term in &terms {
        let mut vars = Vec::new();
        for v in &term.vars {
            let idx = if let Some(declared) = declared {
                match declared.iter().position(|n| *n == v.name) {
                    Some(i) => i,
                    None => {
                        return Err(Error::Parse {
                            offset: v.offset,
                            message: format!("unknown variable '{}'", v.name),
                        })
                    }
                }
            } else if numbered_style {
                numbered_index(&v.name).unwrap()
            } else {
                match names.iter().position(|n| *n == v.name) {
                    Some(i) => i,
                    None => {
                        names.push(v.name.clone());
                        names.len() - 1
                    }
                }
            };
            max_index = max_index.max(idx + 1);
            vars.push((idx, v.exponent));
        }
        resolved.push((term.coef.clone(), vars));
    }

    let n = match (declared, nvars) {
        (Some(d), _) => d.len(),
        (None, Some(n)) => n,
        (None, None) => max_index.max(1),
    };
    if max_index > n {
        return Err(Error::Parse {
            offset: 0,
            message: format!("polynomial uses {max_index} variables but only {n} declared"),
        });
    }
    if numbered_style || declared.is_some() {
        names = (0..n)
            .map(|i| {
                declared
                    .and_then(|d| d.get(i).cloned())
                    .unwrap_or_else(|| format!("x{}", i + 1))
            })
            .collect();
    } else {
        while names.len() < n {
            names.push(format!("x{}", names.len() + 1));
        }
    }

    let poly = Polynomial::from_terms(
        n,
        resolved.into_iter().map(|(coef, vars)| {
            let mut exp = vec![0u32; n];
            for (idx, e) in vars {
                exp[idx] += e;
            }
            (ExpVec::new(exp), coef)
        }),
    );
    Ok(ParsedPolynomial { poly, names })
}

/// Parses with default name resolution, returning only the polynomial.
pub fn parse_polynomial(text: &str, nvars: Option<usize>) -> Result<Polynomial> {
    parse_polynomial_named(text, None, nvars).map(|p| p.poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_pq};

    fn ev(v: Vec<u32>) -> ExpVec {
        ExpVec::new(v)
    }

    #[test]
    fn linear_form() {
        let p = parse_polynomial("x1+x2", None).unwrap();
        assert_eq!(
            p,
            &Polynomial::variable(2, 0) + &Polynomial::variable(2, 1)
        );
    }

    #[test]
    fn rational_coefficient() {
        let p = parse_polynomial("1/2*x1^2", None).unwrap();
        assert_eq!(p, Polynomial::monomial(1, ev(vec![2]), rat_pq(1, 2)));
    }

    #[test]
    fn box_polynomial_round_trip() {
        let text = "2*x1^2 + 7*x1*x2 + 3*x2^2";
        let p = parse_polynomial(text, None).unwrap();
        assert_eq!(p.coeff(&ev(vec![2, 0])), rat(2));
        assert_eq!(p.coeff(&ev(vec![1, 1])), rat(7));
        assert_eq!(p.coeff(&ev(vec![0, 2])), rat(3));
        let printed = p.to_string();
        assert_eq!(parse_polynomial(&printed, None).unwrap(), p);
        assert_eq!(printed, text);
    }

    #[test]
    fn named_variables_by_appearance() {
        let parsed =
            parse_polynomial_named("w^2+3*w*x+3*x^2+3*w*y", None, None).unwrap();
        assert_eq!(parsed.names, vec!["w", "x", "y"]);
        assert_eq!(parsed.poly.nvars(), 3);
        assert_eq!(parsed.poly.coeff(&ev(vec![1, 1, 0])), rat(3));
    }

    #[test]
    fn declared_names() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let parsed = parse_polynomial_named("b^2 - a", Some(&names), None).unwrap();
        assert_eq!(parsed.poly.coeff(&ev(vec![0, 2])), rat(1));
        assert_eq!(parsed.poly.coeff(&ev(vec![1, 0])), rat(-1));
        let err = parse_polynomial_named("c", Some(&names), None).unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 0, .. }));
    }

    #[test]
    fn leading_sign_and_spacing() {
        let p = parse_polynomial("-x1 + 2 * x2", None).unwrap();
        assert_eq!(p.coeff(&ev(vec![1, 0])), rat(-1));
        assert_eq!(p.coeff(&ev(vec![0, 1])), rat(2));
    }

    #[test]
    fn repeated_variable_in_term() {
        let p = parse_polynomial("x1*x1", None).unwrap();
        assert_eq!(p, Polynomial::monomial(1, ev(vec![2]), rat(1)));
    }

    #[test]
    fn nvars_hint() {
        let p = parse_polynomial("x1", Some(3)).unwrap();
        assert_eq!(p.nvars(), 3);
        assert!(parse_polynomial("x5", Some(2)).is_err());
        let c = parse_polynomial("7", Some(4)).unwrap();
        assert_eq!(c, Polynomial::constant(4, rat(7)));
    }

    #[test]
    fn error_offsets() {
        let err = parse_polynomial("x1 + ", None).unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 5, .. }));
        let err2 = parse_polynomial("x1 ^", None).unwrap_err();
        assert!(matches!(err2, Error::Parse { offset: 3, .. }));
        let err3 = parse_polynomial("1/0", None).unwrap_err();
        assert!(matches!(err3, Error::Parse { offset: 2, .. }));
        assert!(parse_polynomial("", None).is_err());
    }

    #[test]
    fn cancellation_to_zero() {
        let p = parse_polynomial("x1 - x1", None).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.nvars(), 1);
    }
}
