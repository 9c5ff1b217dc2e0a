//! Dual and wedge transforms, dually-Lorentzian certification, and the
//! calculus of operators acting through the dual side.
//!
//! The dual of `s` inside a box `kappa` reverses exponents and normalizes:
//! `c x^a -> (c / (kappa-a)!) x^(kappa-a)`; the wedge is its inverse. A
//! homogeneous polynomial is dually Lorentzian when its dual (taken at the
//! exact multidegree, the minimal valid box) is Lorentzian; the verdict does
//! not depend on the box, which is covered by the property suite rather than
//! recomputed at runtime.
//!
//! For a linear operator `T` on a box, the transported operator acts as
//! `f -> dual(T(wedge(f)))`. Only a closed catalog of operator kinds is
//! supported so that applications stay serializable; the transported symbols
//! themselves are exercised through `dual_operator_apply` and are not a
//! separate public surface.

use crate::combinatorics::combinations;
use crate::error::{Error, Result};
use crate::lorentz::{is_lorentzian, Verdict};
use crate::poly::{ExpVec, Polynomial, Rational};
use num::{BigInt, One, Signed, Zero};

fn check_box(s: &Polynomial, kappa: &ExpVec) -> Result<()> {
    if kappa.len() != s.nvars() {
        return Err(Error::LengthMismatch {
            expected: s.nvars(),
            got: kappa.len(),
        });
    }
    let mdeg = s.multidegree();
    for i in 0..s.nvars() {
        if mdeg.get(i) > kappa.get(i) {
            return Err(Error::KappaTooSmall { var: i });
        }
    }
    Ok(())
}

/// The dual inside the box `kappa`: reverse exponents, then normalize.
pub fn dual(s: &Polynomial, kappa: &ExpVec) -> Result<Polynomial> {
    check_box(s, kappa)?;
    Ok(Polynomial::from_terms(
        s.nvars(),
        s.iter().map(|(alpha, c)| {
            let out = kappa.checked_sub(alpha).expect("alpha <= kappa");
            let denom = Rational::from_integer(out.factorial());
            (out, c / denom)
        }),
    ))
}

/// Inverse of `dual`: denormalize, then reverse exponents inside `kappa`.
pub fn wedge(f: &Polynomial, kappa: &ExpVec) -> Result<Polynomial> {
    check_box(f, kappa)?;
    Ok(Polynomial::from_terms(
        f.nvars(),
        f.iter().map(|(alpha, c)| {
            let out = kappa.checked_sub(alpha).expect("alpha <= kappa");
            let num = Rational::from_integer(alpha.factorial());
            (out, c * num)
        }),
    ))
}

/// Certifies the dually Lorentzian property: the dual with respect to the
/// exact multidegree must be Lorentzian.
pub fn is_dually_lorentzian(s: &Polynomial) -> Result<Verdict> {
    if !s.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let kappa = s.multidegree();
    Ok(is_lorentzian(&dual(s, &kappa)?))
}

/// Applies the constant-coefficient differential operator whose symbol is
/// `s`: `f -> sum_a lambda_a d^a f` for `s = sum_a lambda_a x^a`.
pub fn apply_operator(s: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if s.nvars() != f.nvars() {
        return Err(Error::VarCountMismatch {
            left: s.nvars(),
            right: f.nvars(),
        });
    }
    let mut out = Polynomial::zero(f.nvars());
    for (alpha, c) in s.iter() {
        out = out.checked_add(&f.partial(alpha).scale(c))?;
    }
    Ok(out)
}

/// `d_f s`, the same computation as `apply_operator` with the roles swapped:
/// the operator of a Lorentzian polynomial applied to a dually Lorentzian
/// one preserves the dual Lorentzian property. Directional derivatives and
/// the first derived polynomial are the special cases `f = sum a_i x_i` and
/// `f = x_1 + ... + x_n`.
pub fn apply_dual_preserver(f: &Polynomial, s: &Polynomial) -> Result<Polynomial> {
    apply_operator(f, s)
}

/// The symbol of `d_s` on the box `gamma`, as a polynomial in `2n` variables
/// `(x, w)`: `sum_{b <= gamma} C(gamma, b) (d_s x^b) w^(gamma - b)`, which
/// equals `d_s prod_i (x_i + w_i)^(gamma_i)` acting on the `x` block.
pub fn symbol_of(s: &Polynomial, gamma: &ExpVec) -> Result<Polynomial> {
    check_box(s, gamma)?;
    let n = s.nvars();
    let mut prod = Polynomial::one(2 * n);
    for i in 0..n {
        let xw =
            Polynomial::variable(2 * n, i).checked_add(&Polynomial::variable(2 * n, n + i))?;
        prod = prod.checked_mul(&xw.pow(gamma.get(i)))?;
    }
    let s_ext = Polynomial::from_terms(
        2 * n,
        s.iter().map(|(e, c)| {
            let mut ext = e.to_vec();
            ext.extend(std::iter::repeat(0).take(n));
            (ExpVec::new(ext), c.clone())
        }),
    );
    apply_operator(&s_ext, &prod)
}

/// The closed catalog of operators that may be transported through the dual.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CatalogOp {
    Identity,
    /// `d^alpha`.
    Partial(ExpVec),
    /// Multiplication by `x^m`.
    MulMonomial(ExpVec),
    TruncateLe(ExpVec),
    TruncateGe(ExpVec),
    /// `x^a -> x^a / a!`.
    Normalize,
    /// `x^a -> a! x^a`.
    Denormalize,
    /// The diagonal scaling `x^b -> x^b / (kappa - b)!` on the box `kappa`;
    /// its transported form is the normalization.
    BoxScale(ExpVec),
}

impl CatalogOp {
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        match self {
            CatalogOp::Identity => Ok(f.clone()),
            CatalogOp::Partial(alpha) => {
                if alpha.len() != f.nvars() {
                    return Err(Error::LengthMismatch {
                        expected: f.nvars(),
                        got: alpha.len(),
                    });
                }
                Ok(f.partial(alpha))
            }
            CatalogOp::MulMonomial(m) => {
                let mono = Polynomial::monomial(f.nvars(), m.clone(), Rational::one());
                f.checked_mul(&mono)
            }
            CatalogOp::TruncateLe(kappa) => {
                if kappa.len() != f.nvars() {
                    return Err(Error::LengthMismatch {
                        expected: f.nvars(),
                        got: kappa.len(),
                    });
                }
                Ok(f.truncate_le(kappa))
            }
            CatalogOp::TruncateGe(kappa) => {
                if kappa.len() != f.nvars() {
                    return Err(Error::LengthMismatch {
                        expected: f.nvars(),
                        got: kappa.len(),
                    });
                }
                Ok(f.truncate_ge(kappa))
            }
            CatalogOp::Normalize => Ok(f.normalize()),
            CatalogOp::Denormalize => Ok(f.denormalize()),
            CatalogOp::BoxScale(kappa) => {
                check_box(f, kappa)?;
                Ok(Polynomial::from_terms(
                    f.nvars(),
                    f.iter().map(|(beta, c)| {
                        let rest = kappa.checked_sub(beta).expect("beta <= kappa");
                        let denom = Rational::from_integer(rest.factorial());
                        (beta.clone(), c / denom)
                    }),
                ))
            }
        }
    }
}

/// Transports a catalog operator through the dual:
/// `dual(T(wedge(f, kappa_in)), kappa_out)`.
pub fn dual_operator_apply(
    op: &CatalogOp,
    f: &Polynomial,
    kappa_in: &ExpVec,
    kappa_out: &ExpVec,
) -> Result<Polynomial> {
    let lifted = wedge(f, kappa_in)?;
    let moved = op.apply(&lifted)?;
    dual(&moved, kappa_out)
}

/// The list `[s, s^(1), ..., s^(d)]` of derived polynomials of a homogeneous
/// `s` of degree `d`: the coefficients of `u^j` in `s(x_1 + u, ..., x_n + u)`.
/// `derived_polys_by_derivatives` is the independent route through iterated
/// derivatives.
pub fn derived_polys(s: &Polynomial) -> Result<Vec<Polynomial>> {
    if !s.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let n = s.nvars();
    let d = s.degree().unwrap_or(0);
    // substitute x_i -> x_i + u, with u as an extra last variable
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if j == i || j == n {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let shifted = s.substitute_linear(&rows)?;
    let mut out = vec![Polynomial::zero(n); d + 1];
    for (e, c) in shifted.iter() {
        let j = e.get(n) as usize;
        let base = ExpVec::new(e.entries()[..n].to_vec());
        out[j] = out[j].checked_add(&Polynomial::monomial(n, base, c.clone()))?;
    }
    Ok(out)
}

/// `s^(j) = (1/j!) (sum_i d_i)^j s`, the cross-check route for
/// `derived_polys`.
pub fn derived_polys_by_derivatives(s: &Polynomial) -> Result<Vec<Polynomial>> {
    if !s.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let n = s.nvars();
    let d = s.degree().unwrap_or(0);
    let ones = vec![Rational::one(); n];
    let mut out = Vec::with_capacity(d + 1);
    let mut g = s.clone();
    let mut jfact = BigInt::one();
    for j in 0..=d {
        if j > 0 {
            g = g.directional_derivative(&ones)?;
            jfact *= BigInt::from(j);
        }
        out.push(g.scale(&Rational::new(BigInt::one(), jfact.clone())));
    }
    Ok(out)
}

/// Replaces each power `t^b` of the last variable by the elementary
/// symmetric polynomial `e_b(t_1, ..., t_k)`; the result lives in
/// `(nvars - 1) + k` variables.
pub fn polarize(f: &Polynomial, k: usize) -> Result<Polynomial> {
    let n = f.nvars();
    if n == 0 {
        return Err(Error::Invalid("polynomial has no variables".into()));
    }
    let tdeg = f.multidegree().get(n - 1) as usize;
    if tdeg > k {
        return Err(Error::PolarizationDegree { degree: tdeg, k });
    }
    let out_vars = n - 1 + k;
    let mut terms: Vec<(ExpVec, Rational)> = Vec::new();
    for (e, c) in f.iter() {
        let b = e.get(n - 1) as usize;
        let base = &e.entries()[..n - 1];
        for subset in combinations(k, b) {
            let mut exp = vec![0u32; out_vars];
            exp[..n - 1].copy_from_slice(base);
            for i in subset {
                exp[n - 1 + i] = 1;
            }
            terms.push((ExpVec::new(exp), c.clone()));
        }
    }
    Ok(Polynomial::from_terms(out_vars, terms))
}

/// A Polya frequency sequence in factored form: the weights are
/// `mu_i = scale * e_i(roots)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyaSpec {
    scale: Rational,
    roots: Vec<Rational>,
}

impl PolyaSpec {
    pub fn new(scale: Rational, roots: Vec<Rational>) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::Invalid("scale must be positive".into()));
        }
        if let Some(i) = roots.iter().position(|r| r.is_negative()) {
            return Err(Error::NegativeComponent { index: i });
        }
        Ok(PolyaSpec { scale, roots })
    }

    /// `mu_i = scale * e_i(roots)` for `i = 0..=len(roots)`.
    pub fn weights(&self) -> Vec<Rational> {
        let mut e = vec![Rational::zero(); self.roots.len() + 1];
        e[0] = Rational::one();
        for (used, r) in self.roots.iter().enumerate() {
            for i in (1..=used + 1).rev() {
                let add = &e[i - 1] * r;
                e[i] += add;
            }
        }
        e.iter().map(|v| v * &self.scale).collect()
    }
}

/// `sum_i mu_i s^(i)(x) t^i` in `nvars + 1` variables (the weighting
/// variable comes last); weights beyond the number of roots are zero.
pub fn polya_weighted(s: &Polynomial, spec: &PolyaSpec) -> Result<Polynomial> {
    let seq = derived_polys(s)?;
    let weights = spec.weights();
    let n = s.nvars();
    let mut terms: Vec<(ExpVec, Rational)> = Vec::new();
    for (i, si) in seq.iter().enumerate() {
        let mu = weights.get(i).cloned().unwrap_or_else(Rational::zero);
        if mu.is_zero() {
            continue;
        }
        for (e, c) in si.iter() {
            let mut exp = e.to_vec();
            exp.push(i as u32);
            terms.push((ExpVec::new(exp), c * &mu));
        }
    }
    Ok(Polynomial::from_terms(n + 1, terms))
}
