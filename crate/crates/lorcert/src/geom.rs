//! Mixed discriminants and box mixed volumes with generalized
//! Alexandrov-Fenchel verification.
//!
//! Mixed discriminants are extracted from the expanded determinant
//! polynomial `det(x_1 q_1 + ... + x_n q_n)`; the inclusion-exclusion
//! polarization formula is exposed as an independent second route. Mixed
//! volumes use the exact volume polynomial of Minkowski combinations of
//! axis-parallel boxes. Both verifiers extend the functionals linearly over
//! the monomials of the auxiliary polynomial, positionally: variable `x_i`
//! stands for the `i`-th form or box, and arity mismatches are hard errors.

use crate::combinatorics::factorial;
use crate::dualize::is_dually_lorentzian;
use crate::error::{Error, Result};
use crate::lorentz::{det_rational, QuadraticForm};
use crate::poly::{ExpVec, Polynomial, Rational};
use num::{Signed, Zero};
use serde::Serialize;

/// A tuple of symmetric forms of uniform dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadFormTuple {
    dim: usize,
    forms: Vec<QuadraticForm>,
}

impl QuadFormTuple {
    pub fn new(forms: Vec<QuadraticForm>) -> Result<Self> {
        let dim = match forms.first() {
            None => return Err(Error::Invalid("need at least one form".into())),
            Some(f) => f.dim(),
        };
        if let Some(bad) = forms.iter().find(|f| f.dim() != dim) {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        Ok(QuadFormTuple { dim, forms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[QuadraticForm] {
        &self.forms
    }

    /// Errors with the index of the first form that is not positive
    /// definite (exact leading-principal-minor positivity).
    pub fn check_positive_definite(&self) -> Result<()> {
        for (i, f) in self.forms.iter().enumerate() {
            if !f.is_positive_definite() {
                return Err(Error::NotPositiveDefinite { index: i });
            }
        }
        Ok(())
    }
}

/// A family of axis-parallel boxes in dimension `dim`, each given by its
/// vector of non-negative edge lengths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxFamily {
    dim: usize,
    edges: Vec<Vec<Rational>>,
}

impl BoxFamily {
    pub fn new(dim: usize, edges: Vec<Vec<Rational>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        if edges.is_empty() {
            return Err(Error::Invalid("need at least one box".into()));
        }
        for e in &edges {
            if e.len() != dim {
                return Err(Error::LengthMismatch {
                    expected: dim,
                    got: e.len(),
                });
            }
            if let Some(i) = e.iter().position(|v| v.is_negative()) {
                return Err(Error::NegativeComponent { index: i });
            }
        }
        Ok(BoxFamily { dim, edges })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Rational>] {
        &self.edges
    }
}

/// Expands `det(x_1 q_1 + ... + x_n q_n)` exactly, by cofactor recursion
/// memoized on column subsets.
pub fn det_polynomial(tuple: &QuadFormTuple) -> Polynomial {
    let d = tuple.dim;
    let n = tuple.forms.len();
    // entry (i, j) is the linear polynomial sum_k x_k q_k[i][j]
    let entries: Vec<Vec<Polynomial>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    Polynomial::from_terms(
                        n,
                        tuple
                            .forms
                            .iter()
                            .enumerate()
                            .map(|(k, q)| (ExpVec::unit(n, k), q.get(i, j).clone())),
                    )
                })
                .collect()
        })
        .collect();
    det_of_poly_matrix(&entries, n)
}

fn det_of_poly_matrix(entries: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let d = entries.len();
    if d == 0 {
        return Polynomial::one(nvars);
    }
    let full: usize = (1 << d) - 1;
    let mut memo: Vec<Option<Polynomial>> = vec![None; 1 << d];

    fn rec(
        mask: usize,
        d: usize,
        entries: &[Vec<Polynomial>],
        nvars: usize,
        memo: &mut Vec<Option<Polynomial>>,
    ) -> Polynomial {
        if mask == 0 {
            return Polynomial::one(nvars);
        }
        if let Some(p) = &memo[mask] {
            return p.clone();
        }
        let row = d - (mask.count_ones() as usize);
        let mut acc = Polynomial::zero(nvars);
        let mut pos = 0;
        for j in 0..d {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = &entries[row][j];
            if !entry.is_zero() {
                let sub = rec(mask & !(1 << j), d, entries, nvars, memo);
                let term = entry.checked_mul(&sub).unwrap();
                acc = if pos % 2 == 0 {
                    acc.checked_add(&term).unwrap()
                } else {
                    acc.checked_sub(&term).unwrap()
                };
            }
            pos += 1;
        }
        memo[mask] = Some(acc.clone());
        acc
    }

    rec(full, d, entries, nvars, &mut memo)
}

/// The mixed discriminant `D(q^alpha)`, extracted as `alpha!/d!` times the
/// `x^alpha` coefficient of the determinant polynomial.
pub fn mixed_discriminant(tuple: &QuadFormTuple, alpha: &ExpVec) -> Result<Rational> {
    if alpha.len() != tuple.forms.len() {
        return Err(Error::LengthMismatch {
            expected: tuple.forms.len(),
            got: alpha.len(),
        });
    }
    if alpha.total() != tuple.dim {
        return Err(Error::WrongDegree {
            expected: tuple.dim,
            got: alpha.total(),
        });
    }
    let det = det_polynomial(tuple);
    let scale = Rational::new(alpha.factorial(), factorial(tuple.dim));
    Ok(det.coeff(alpha) * scale)
}

/// `D(Q_1, ..., Q_d)` by inclusion-exclusion polarization:
/// `(1/d!) sum_(S nonempty) (-1)^(d-|S|) det(sum_(i in S) Q_i)`.
/// This is the independent route used to cross-check `mixed_discriminant`.
pub fn mixed_discriminant_direct(forms: &[QuadraticForm]) -> Result<Rational> {
    let d = forms.len();
    if d == 0 {
        return Err(Error::Invalid("need at least one form".into()));
    }
    let dim = forms[0].dim();
    if forms.iter().any(|f| f.dim() != dim) || dim != d {
        return Err(Error::LengthMismatch {
            expected: d,
            got: dim,
        });
    }
    let mut acc = Rational::zero();
    for mask in 1usize..(1 << d) {
        let mut sum = QuadraticForm::zero(dim);
        for (i, f) in forms.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = sum.add(f)?;
            }
        }
        let det = det_rational(sum.rows().to_vec());
        let size = mask.count_ones() as usize;
        if (d - size) % 2 == 0 {
            acc += det;
        } else {
            acc -= det;
        }
    }
    Ok(acc / Rational::from_integer(factorial(d)))
}

/// Linear extension `D(f(q)) = sum_a lambda_a D(q^a)` for a homogeneous `f`
/// of degree `dim`, computed from one determinant expansion.
pub fn mixed_discriminant_of_poly(tuple: &QuadFormTuple, f: &Polynomial) -> Result<Rational> {
    if f.nvars() != tuple.forms.len() {
        return Err(Error::ArityMismatch {
            vars: f.nvars(),
            slots: tuple.forms.len(),
        });
    }
    if !f.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    if let Some(d) = f.degree() {
        if d != tuple.dim {
            return Err(Error::WrongDegree {
                expected: tuple.dim,
                got: d,
            });
        }
    }
    let det = det_polynomial(tuple);
    let dfact = factorial(tuple.dim);
    let mut acc = Rational::zero();
    for (alpha, lambda) in f.iter() {
        let scale = Rational::new(alpha.factorial(), dfact.clone());
        acc += lambda * det.coeff(alpha) * scale;
    }
    Ok(acc)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AfVerdict {
    Strict,
    Equality,
    Violated,
}

/// Exact outcome of one generalized Alexandrov-Fenchel instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AfReport {
    /// The squared mixed term.
    pub lhs: Rational,
    /// The product term.
    pub rhs: Rational,
    pub margin: Rational,
    pub verdict: AfVerdict,
    /// On equality in the mixed-discriminant verifier: whether `p` is a
    /// rational multiple of `q`. Never set by the box verifier (boxes fall
    /// outside the smoothness hypotheses of the equality characterization).
    pub proportionality: Option<bool>,
}

fn af_report(lhs: Rational, rhs: Rational, proportionality: Option<bool>) -> AfReport {
    let margin = &lhs - &rhs;
    let verdict = if margin.is_positive() {
        AfVerdict::Strict
    } else if margin.is_zero() {
        AfVerdict::Equality
    } else {
        AfVerdict::Violated
    };
    AfReport {
        lhs,
        rhs,
        margin,
        verdict,
        proportionality: if verdict == AfVerdict::Equality {
            proportionality
        } else {
            None
        },
    }
}

fn forms_proportional(p: &QuadraticForm, q: &QuadraticForm) -> bool {
    let dim = q.dim();
    let mut ratio: Option<Rational> = None;
    for i in 0..dim {
        for j in 0..dim {
            if !q.get(i, j).is_zero() {
                ratio = Some(p.get(i, j) / q.get(i, j));
                break;
            }
        }
        if ratio.is_some() {
            break;
        }
    }
    let c = match ratio {
        None => return p.rows().iter().flatten().all(|v| v.is_zero()),
        Some(c) => c,
    };
    for i in 0..dim {
        for j in 0..dim {
            if *p.get(i, j) != &c * q.get(i, j) {
                return false;
            }
        }
    }
    true
}

fn check_aux_polynomial(s: &Polynomial, slots: usize, dim: usize, certify: bool) -> Result<()> {
    if s.nvars() != slots {
        return Err(Error::ArityMismatch {
            vars: s.nvars(),
            slots,
        });
    }
    if s.is_zero() {
        return Err(Error::Invalid("auxiliary polynomial must be non-zero".into()));
    }
    if !s.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let deg = s.degree().unwrap_or(0);
    if deg + 2 != dim {
        return Err(Error::WrongDegree {
            expected: dim.saturating_sub(2),
            got: deg,
        });
    }
    if certify {
        let verdict = is_dually_lorentzian(s)?;
        if !verdict.holds() {
            return Err(Error::Invalid(
                "auxiliary polynomial is not dually Lorentzian".into(),
            ));
        }
    }
    Ok(())
}

/// Verifies `D(p,q,s(q_1..q_n))^2 >= D(p,p,s(...)) D(q,q,s(...))` exactly.
/// All `q_i` and `q` must be positive definite; `p` is arbitrary. With
/// `certify_s` the auxiliary polynomial is certified dually Lorentzian
/// first, otherwise the caller vouches for it. On equality the report says
/// whether `p` is proportional to `q`.
pub fn af_mixed_discriminant(
    p: &QuadraticForm,
    q: &QuadraticForm,
    s: &Polynomial,
    tuple: &QuadFormTuple,
    certify_s: bool,
) -> Result<AfReport> {
    let d = tuple.dim;
    if p.dim() != d || q.dim() != d {
        return Err(Error::LengthMismatch {
            expected: d,
            got: p.dim().max(q.dim()),
        });
    }
    check_aux_polynomial(s, tuple.forms.len(), d, certify_s)?;
    tuple.check_positive_definite()?;
    if !q.is_positive_definite() {
        return Err(Error::NotPositiveDefinite {
            index: tuple.forms.len() + 1,
        });
    }
    // one expansion of det(sum x_i q_i + y_p p + y_q q) serves all three
    // functionals
    let mut aug_forms = tuple.forms.clone();
    aug_forms.push(p.clone());
    aug_forms.push(q.clone());
    let aug = QuadFormTuple::new(aug_forms)?;
    let det = det_polynomial(&aug);
    let dfact = factorial(d);

    // gamma-indexed coefficient lookup: x^gamma y_p^a y_q^b
    let coeff_d = |gamma: &ExpVec, a: u32, b: u32| -> Rational {
        let mut e = gamma.to_vec();
        e.push(a);
        e.push(b);
        let e = ExpVec::new(e);
        det.coeff(&e) * Rational::new(e.factorial(), dfact.clone())
    };

    let mut d_pq = Rational::zero();
    let mut d_pp = Rational::zero();
    let mut d_qq = Rational::zero();
    for (gamma, lambda) in s.iter() {
        d_pq += lambda * coeff_d(gamma, 1, 1);
        d_pp += lambda * coeff_d(gamma, 2, 0);
        d_qq += lambda * coeff_d(gamma, 0, 2);
    }
    let lhs = &d_pq * &d_pq;
    let rhs = &d_pp * &d_qq;
    Ok(af_report(lhs, rhs, Some(forms_proportional(p, q))))
}

/// The exact volume polynomial of Minkowski combinations of the family's
/// boxes: `prod_j (sum_i b_ij x_i)`.
pub fn box_volume_polynomial(family: &BoxFamily) -> Polynomial {
    let n = family.edges.len();
    let mut out = Polynomial::one(n);
    for j in 0..family.dim {
        let factor = Polynomial::from_terms(
            n,
            family
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| (ExpVec::unit(n, i), e[j].clone())),
        );
        out = out.checked_mul(&factor).unwrap();
    }
    out
}

/// The mixed volume `V(K^alpha)`, extracted as `alpha!/d!` times the
/// `x^alpha` coefficient of the volume polynomial.
pub fn mixed_volume(family: &BoxFamily, alpha: &ExpVec) -> Result<Rational> {
    if alpha.len() != family.edges.len() {
        return Err(Error::LengthMismatch {
            expected: family.edges.len(),
            got: alpha.len(),
        });
    }
    if alpha.total() != family.dim {
        return Err(Error::WrongDegree {
            expected: family.dim,
            got: alpha.total(),
        });
    }
    let vol = box_volume_polynomial(family);
    let scale = Rational::new(alpha.factorial(), factorial(family.dim));
    Ok(vol.coeff(alpha) * scale)
}

/// Verifies `V(K,L,s(C_1..C_n))^2 >= V(K,K,s(...)) V(L,L,s(...))` for two
/// boxes of the family, extending `V` linearly over the monomials of `s`
/// (variable `x_i` stands for the `i`-th box). No equality characterization
/// is attempted for boxes.
pub fn af_box_mixed_volume(
    k_idx: usize,
    l_idx: usize,
    s: &Polynomial,
    family: &BoxFamily,
    certify_s: bool,
) -> Result<AfReport> {
    let n = family.edges.len();
    if k_idx >= n {
        return Err(Error::IndexOutOfRange {
            index: k_idx,
            size: n,
        });
    }
    if l_idx >= n {
        return Err(Error::IndexOutOfRange {
            index: l_idx,
            size: n,
        });
    }
    check_aux_polynomial(s, n, family.dim, certify_s)?;
    let vol = box_volume_polynomial(family);
    let dfact = factorial(family.dim);
    let extract = |gamma: &ExpVec, a: usize, b: usize| -> Rational {
        let mut e = gamma.to_vec();
        e[a] += 1;
        e[b] += 1;
        let e = ExpVec::new(e);
        vol.coeff(&e) * Rational::new(e.factorial(), dfact.clone())
    };
    let mut v_kl = Rational::zero();
    let mut v_kk = Rational::zero();
    let mut v_ll = Rational::zero();
    for (gamma, lambda) in s.iter() {
        v_kl += lambda * extract(gamma, k_idx, l_idx);
        v_kk += lambda * extract(gamma, k_idx, k_idx);
        v_ll += lambda * extract(gamma, l_idx, l_idx);
    }
    let lhs = &v_kl * &v_kl;
    let rhs = &v_kk * &v_ll;
    Ok(af_report(lhs, rhs, None))
}
