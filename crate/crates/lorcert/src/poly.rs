//! Exact sparse multivariate polynomial arithmetic.
//!
//! Polynomials are maps from exponent vectors to big rationals; no zero
//! coefficients are ever stored, and the variable count is explicit even when
//! trailing variables are unused (duals and truncations depend on the ambient
//! box, not just on the support). Term iteration is canonicalized in graded
//! lexicographic order so that serialized output is deterministic.

use crate::error::{Error, Result};
use crate::combinatorics::{factorial, falling};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// All coefficients in the crate are exact rationals; there is no floating
/// point anywhere in the certification path.
pub type Rational = BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational.
pub fn rat_pq(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn big_rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Exponent vector of a monomial: a fixed-length tuple of non-negative
/// integers. Also used for the boxes and multi-indices of the operator
/// calculus.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(entries: Vec<u32>) -> Self {
        ExpVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    /// The exponent vector of the variable `x_i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index out of range");
        let mut e = vec![0; n];
        e[i] = 1;
        ExpVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Total degree `|alpha|`.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Componentwise partial order.
    pub fn leq(&self, other: &ExpVec) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        assert_eq!(self.0.len(), other.0.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` if any component would go negative.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        if !other.leq(self) {
            return None;
        }
        Some(ExpVec(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &ExpVec) -> ExpVec {
        assert_eq!(self.0.len(), other.0.len());
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `alpha! = prod_i alpha_i!`.
    pub fn factorial(&self) -> BigInt {
        self.0
            .iter()
            .map(|&e| factorial(e as usize))
            .product()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.0.clone()
    }
}

impl Ord for ExpVec {
    // Graded lexicographic: total degree first, then entrywise.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All exponent vectors of the given total degree, in ascending
/// lexicographic order.
pub fn exponents_of_degree(nvars: usize, degree: usize) -> Vec<ExpVec> {
    fn rec(nvars: usize, degree: usize, prefix: &mut Vec<u32>, out: &mut Vec<ExpVec>) {
        if prefix.len() == nvars - 1 {
            prefix.push(degree as u32);
            out.push(ExpVec::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=degree {
            prefix.push(e as u32);
            rec(nvars, degree - e, prefix, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if degree == 0 {
            vec![ExpVec::zeros(0)]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// A partition: weakly decreasing tuple of non-negative integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// `|lambda|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `i` (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExpVec, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(ExpVec::zeros(nvars), c)])
    }

    /// The variable `x_i` (0-based).
    pub fn variable(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, [(ExpVec::unit(nvars, i), Rational::one())])
    }

    pub fn monomial(nvars: usize, exp: ExpVec, coef: Rational) -> Self {
        Self::from_terms(nvars, [(exp, coef)])
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, merging
    /// duplicates and dropping zero coefficients.
    pub fn from_terms<I>(nvars: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (ExpVec, Rational)>,
    {
        let mut terms: BTreeMap<ExpVec, Rational> = BTreeMap::new();
        for (e, c) in iter {
            assert_eq!(e.len(), nvars, "exponent length must equal nvars");
            if c.is_zero() {
                continue;
            }
            *terms.entry(e).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = &ExpVec> {
        self.terms.keys()
    }

    /// Coefficient of `x^exp` (zero when absent).
    pub fn coeff(&self, exp: &ExpVec) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        // Keys are in graded order, so the last key has maximal degree.
        self.terms.keys().next_back().map(|e| e.total())
    }

    /// Componentwise maximum of the support (all zeros for the zero
    /// polynomial).
    pub fn multidegree(&self) -> ExpVec {
        let mut m = ExpVec::zeros(self.nvars);
        for e in self.terms.keys() {
            m = m.join(e);
        }
        m
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(first), Some(last)) => first.total() == last.total(),
            _ => true,
        }
    }

    fn check_same_vars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_vars(other)?;
        Ok(Polynomial::from_terms(
            self.nvars,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        ))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_vars(other)?;
        let mut acc: BTreeMap<ExpVec, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            nvars: self.nvars,
            terms: acc,
        })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = out.checked_mul(self).unwrap();
        }
        out
    }

    /// Iterated partial derivative with exact falling-factorial coefficients.
    /// Terms whose exponents undershoot are dropped.
    pub fn partial(&self, alpha: &ExpVec) -> Polynomial {
        assert_eq!(alpha.len(), self.nvars, "multi-index length must equal nvars");
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().filter_map(|(beta, c)| {
                let out = beta.checked_sub(alpha)?;
                let mut factor = BigInt::one();
                for i in 0..self.nvars {
                    factor *= falling(beta.get(i) as usize, alpha.get(i) as usize);
                }
                Some((out, c * big_rat(factor)))
            }),
        )
    }

    /// Derivative with respect to `x_i`.
    pub fn partial_var(&self, i: usize) -> Polynomial {
        self.partial(&ExpVec::unit(self.nvars, i))
    }

    /// `sum_i v_i d/dx_i`.
    pub fn directional_derivative(&self, v: &[Rational]) -> Result<Polynomial> {
        if v.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: v.len(),
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            out = out.checked_add(&self.partial_var(i).scale(vi))?;
        }
        Ok(out)
    }

    /// Formal antiderivative: the linear extension of
    /// `x^beta -> (beta! / (beta+alpha)!) x^(beta+alpha)`.
    pub fn antiderivative(&self, alpha: &ExpVec) -> Polynomial {
        assert_eq!(alpha.len(), self.nvars, "multi-index length must equal nvars");
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(beta, c)| {
                let out = beta.add(alpha);
                let num = beta.factorial();
                let den = out.factorial();
                (out, c * Rational::new(num, den))
            }),
        )
    }

    /// `f(Ax)` where the rows of `a` give the substitution for each input
    /// variable; the result lives in (number of columns) variables.
    pub fn substitute_linear(&self, a: &[Vec<Rational>]) -> Result<Polynomial> {
        if a.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: a.len(),
            });
        }
        let ncols = a.first().map(|r| r.len()).unwrap_or(0);
        if a.iter().any(|r| r.len() != ncols) {
            return Err(Error::Invalid("matrix rows have unequal lengths".into()));
        }
        let mdeg = self.multidegree();
        // Cache powers of each substituted linear form.
        let mut pows: Vec<Vec<Polynomial>> = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let linear = Polynomial::from_terms(
                ncols,
                a[i].iter()
                    .enumerate()
                    .map(|(j, c)| (ExpVec::unit(ncols, j), c.clone())),
            );
            let maxp = mdeg.get(i) as usize;
            let mut row = Vec::with_capacity(maxp + 1);
            row.push(Polynomial::one(ncols));
            for k in 1..=maxp {
                let next = row[k - 1].checked_mul(&linear)?;
                row.push(next);
            }
            pows.push(row);
        }
        let mut out = Polynomial::zero(ncols);
        for (alpha, c) in &self.terms {
            let mut prod = Polynomial::constant(ncols, c.clone());
            for i in 0..self.nvars {
                let e = alpha.get(i) as usize;
                if e > 0 {
                    prod = prod.checked_mul(&pows[i][e])?;
                }
            }
            out = out.checked_add(&prod)?;
        }
        Ok(out)
    }

    /// Restriction of the term map to `{alpha <= kappa}`.
    pub fn truncate_le(&self, kappa: &ExpVec) -> Polynomial {
        assert_eq!(kappa.len(), self.nvars, "box length must equal nvars");
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.leq(kappa))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Restriction of the term map to `{alpha >= kappa}`.
    pub fn truncate_ge(&self, kappa: &ExpVec) -> Polynomial {
        assert_eq!(kappa.len(), self.nvars, "box length must equal nvars");
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| kappa.leq(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficientwise scaling `x^alpha -> x^alpha / alpha!`.
    pub fn normalize(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c / big_rat(e.factorial())))
                .collect(),
        }
    }

    /// Inverse of `normalize`: `x^alpha -> alpha! x^alpha`.
    pub fn denormalize(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * big_rat(e.factorial())))
                .collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, t: &[Rational]) -> Result<Rational> {
        if t.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: t.len(),
            });
        }
        let mdeg = self.multidegree();
        let mut pows: Vec<Vec<Rational>> = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let maxp = mdeg.get(i) as usize;
            let mut row = Vec::with_capacity(maxp + 1);
            row.push(Rational::one());
            for k in 1..=maxp {
                let next = &row[k - 1] * &t[i];
                row.push(next);
            }
            pows.push(row);
        }
        let mut acc = Rational::zero();
        for (alpha, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..self.nvars {
                let e = alpha.get(i) as usize;
                if e > 0 {
                    v *= &pows[i][e];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Renders with the given variable names instead of `x1..xn`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Highest terms first for readability.
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.total() == 0 {
                factors.push(abs.to_string());
            }
            for i in 0..self.nvars {
                match e.get(i) {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    k => factors.push(format!("{}^{}", names[i], k)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.to_string_with(&names))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl std::ops::Add<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        &self + rhs
    }
}

impl std::ops::Sub<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        &self - rhs
    }
}

impl std::ops::Mul<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        &self * rhs
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
