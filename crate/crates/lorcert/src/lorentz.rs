//! Lorentzian, strictly Lorentzian and cone-relative certification with
//! exact-arithmetic certificates.
//!
//! The primary positive-eigenvalue test is the signed principal-minor
//! criterion (valid for symmetric matrices with non-negative entries, which
//! is the only case that arises from polynomials with non-negative
//! coefficients); exact congruence diagonalization is the general fallback.
//! Every negative verdict carries a witness that can be re-checked by an
//! independent code path.

use crate::combinatorics::subsets_by_size;
use crate::error::{Error, Result};
use crate::poly::{exponents_of_degree, ExpVec, Polynomial, Rational};
use num::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// Symmetric matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticForm {
    dim: usize,
    entries: Vec<Vec<Rational>>,
}

impl QuadraticForm {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = entries.len();
        if entries.iter().any(|row| row.len() != dim) {
            return Err(Error::Invalid("matrix is not square".into()));
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Invalid(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(QuadraticForm { dim, entries })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let entries = (0..dim)
            .map(|i| (0..dim).map(|j| f(i, j)).collect())
            .collect();
        QuadraticForm { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| Rational::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.dim, |i, j| &self.entries[i][j] * c)
    }

    pub fn add(&self, other: &QuadraticForm) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(Self::from_fn(self.dim, |i, j| {
            &self.entries[i][j] + &other.entries[i][j]
        }))
    }

    /// `x^T M y`.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: x.len().max(y.len()),
            });
        }
        let mut acc = Rational::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += &x[i] * &self.entries[i][j] * &y[j];
            }
        }
        Ok(acc)
    }

    /// `x^T M x`.
    pub fn quadratic(&self, x: &[Rational]) -> Result<Rational> {
        self.bilinear(x, x)
    }

    /// Exact determinant by fraction-preserving Gaussian elimination.
    pub fn det(&self) -> Rational {
        det_rational(self.entries.clone())
    }

    /// Determinant of the principal submatrix on `idx`.
    pub fn principal_minor(&self, idx: &[usize]) -> Rational {
        let sub: Vec<Vec<Rational>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        det_rational(sub)
    }

    /// Exact positivity of all leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        (1..=self.dim).all(|k| {
            let idx: Vec<usize> = (0..k).collect();
            self.principal_minor(&idx).is_positive()
        })
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

pub(crate) fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Rational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Exact inertia of a symmetric form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Signature {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.positives + self.negatives + self.zeros
    }
}

/// Inertia by symmetric congruence diagonalization with rational pivots.
/// A zero diagonal with a non-zero off-diagonal entry is handled by the
/// 2x2 hyperbolic block contributing (+1, -1).
pub fn signature_of(form: &QuadraticForm) -> Signature {
    let mut m = form.entries.clone();
    let mut idx: Vec<usize> = (0..form.dim).collect();
    let mut sig = Signature {
        positives: 0,
        negatives: 0,
        zeros: 0,
    };
    while !idx.is_empty() {
        if let Some(pos) = idx.iter().position(|&i| !m[i][i].is_zero()) {
            let i = idx.remove(pos);
            let p = m[i][i].clone();
            if p.is_positive() {
                sig.positives += 1;
            } else {
                sig.negatives += 1;
            }
            for &j in &idx {
                if m[j][i].is_zero() {
                    continue;
                }
                for &k in &idx {
                    let sub = &m[j][i] * &m[i][k] / &p;
                    m[j][k] -= sub;
                }
            }
        } else if let Some((pi, pj)) = find_off_diagonal(&m, &idx) {
            // Hyperbolic 2x2 block: eigenvalues +-b.
            sig.positives += 1;
            sig.negatives += 1;
            let b = m[pi][pj].clone();
            idx.retain(|&k| k != pi && k != pj);
            for &k in &idx {
                for &l in &idx {
                    let sub = (&m[k][pi] * &m[pj][l] + &m[k][pj] * &m[pi][l]) / &b;
                    m[k][l] -= sub;
                }
            }
        } else {
            sig.zeros += idx.len();
            break;
        }
    }
    sig
}

fn find_off_diagonal(m: &[Vec<Rational>], idx: &[usize]) -> Option<(usize, usize)> {
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            if !m[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}


/// Outcome of the signed principal-minor criterion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MinorCheck {
    /// `(-1)^|I| det M_I <= 0` for every non-empty `I`; equivalently the
    /// matrix has at most one positive eigenvalue.
    Pass,
    /// First violating subset in (size, lex) order, with its determinant.
    Violation { subset: Vec<usize>, det: Rational },
}

/// Signed principal-minor test for "at most one positive eigenvalue".
/// Requires non-negative entries; errors out otherwise so the caller can
/// fall back to `signature_of`.
pub fn minor_sign_check(m: &QuadraticForm) -> Result<MinorCheck> {
    for i in 0..m.dim {
        for j in 0..m.dim {
            if m.entries[i][j].is_negative() {
                return Err(Error::NegativeEntry { row: i, col: j });
            }
        }
    }
    for subset in subsets_by_size(m.dim) {
        let det = m.principal_minor(&subset);
        let signed = if subset.len() % 2 == 0 { det.clone() } else { -det.clone() };
        if signed.is_positive() {
            return Ok(MinorCheck::Violation { subset, det });
        }
    }
    Ok(MinorCheck::Pass)
}

/// First exchange-property violation, scanning pairs in descending graded
/// lexicographic order; `None` when the set is M-convex.
pub fn m_convex_violation(support: &[ExpVec]) -> Option<(ExpVec, ExpVec, usize)> {
    let set: BTreeSet<&ExpVec> = support.iter().collect();
    let mut sorted: Vec<&ExpVec> = support.iter().collect();
    sorted.sort();
    for &alpha in sorted.iter().rev() {
        let n = alpha.len();
        for &beta in sorted.iter().rev() {
            for i in 0..n {
                if alpha.get(i) <= beta.get(i) {
                    continue;
                }
                let repaired = (0..n).any(|j| {
                    alpha.get(j) < beta.get(j) && {
                        let mut e = alpha.to_vec();
                        e[i] -= 1;
                        e[j] += 1;
                        set.contains(&ExpVec::new(e))
                    }
                });
                if !repaired {
                    return Some((alpha.clone(), beta.clone(), i));
                }
            }
        }
    }
    None
}

pub fn is_m_convex(support: &[ExpVec]) -> bool {
    m_convex_violation(support).is_none()
}

/// The symmetric matrix `M` with `f(x) = x^T M x` for homogeneous quadratic
/// `f`: diagonal from the `x_i^2` coefficients, off-diagonal from half the
/// `x_i x_j` coefficients. The zero polynomial yields the zero form.
pub fn quadratic_form_of(f: &Polynomial) -> Result<QuadraticForm> {
    if !f.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    if let Some(d) = f.degree() {
        if d != 2 {
            return Err(Error::WrongDegree { expected: 2, got: d });
        }
    }
    let n = f.nvars();
    let half = Rational::new(1.into(), 2.into());
    Ok(QuadraticForm::from_fn(n, |i, j| {
        let mut e = vec![0u32; n];
        e[i] += 1;
        e[j] += 1;
        let c = f.coeff(&ExpVec::new(e));
        if i == j {
            c
        } else {
            c * &half
        }
    }))
}

/// Certification status. `StrictlyLorentzian` is only produced by the strict
/// check; the plain check reports `Lorentzian` or `NotLorentzian`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Lorentzian,
    StrictlyLorentzian,
    NotLorentzian,
}

/// Machine-checkable certificate for a negative (or non-strict) verdict.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two support exponents of different total degree.
    NonHomogeneous { alpha: Vec<u32>, beta: Vec<u32> },
    NegativeCoefficient { alpha: Vec<u32>, coef: String },
    /// Exchange fails for (alpha, beta) at index `i`: no `j` with
    /// `alpha_j < beta_j` repairs `alpha - e_i + e_j` into the support.
    MConvexity {
        alpha: Vec<u32>,
        beta: Vec<u32>,
        i: usize,
    },
    /// `(-1)^|I| det M_I > 0` for the quadratic form of the `alpha`
    /// derivative.
    Minor {
        alpha: Vec<u32>,
        #[serde(rename = "I")]
        subset: Vec<usize>,
        det: String,
    },
    /// Inertia of the `alpha` derivative (more than one positive eigenvalue,
    /// or a degenerate form in the strict check).
    Signature {
        alpha: Vec<u32>,
        positives: usize,
        negatives: usize,
        zeros: usize,
    },
    /// Degree-`d` monomial missing from the support (strict check).
    MissingMonomial { alpha: Vec<u32> },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    fn ok(status: Status) -> Self {
        Verdict {
            status,
            witness: None,
        }
    }

    fn fail(status: Status, witness: Witness) -> Self {
        Verdict {
            status,
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.status != Status::NotLorentzian
    }

    pub fn is_strict(&self) -> bool {
        self.status == Status::StrictlyLorentzian
    }
}

fn homogeneity_witness(f: &Polynomial) -> Option<Witness> {
    if f.is_homogeneous() {
        return None;
    }
    let mut it = f.support();
    let first = it.next().unwrap();
    let last = it.next_back().unwrap();
    Some(Witness::NonHomogeneous {
        alpha: first.to_vec(),
        beta: last.to_vec(),
    })
}

fn negative_coefficient_witness(f: &Polynomial) -> Option<Witness> {
    f.iter().find(|(_, c)| c.is_negative()).map(|(e, c)| {
        Witness::NegativeCoefficient {
            alpha: e.to_vec(),
            coef: c.to_string(),
        }
    })
}

/// Decides the Lorentzian property of `f` exactly.
///
/// For degree >= 2 this checks non-negative coefficients, homogeneity,
/// M-convexity of the support, and that every degree-(d-2) derivative has at
/// most one positive eigenvalue (minor criterion first, signature fallback).
/// Non-negative constants and linear polynomials are Lorentzian by
/// convention, as is the zero polynomial.
pub fn is_lorentzian(f: &Polynomial) -> Verdict {
    if let Some(w) = homogeneity_witness(f) {
        return Verdict::fail(Status::NotLorentzian, w);
    }
    if let Some(w) = negative_coefficient_witness(f) {
        return Verdict::fail(Status::NotLorentzian, w);
    }
    let d = match f.degree() {
        None => return Verdict::ok(Status::Lorentzian), // zero polynomial
        Some(d) => d,
    };
    if d <= 1 {
        return Verdict::ok(Status::Lorentzian);
    }
    let support: Vec<ExpVec> = f.support().cloned().collect();
    if let Some((alpha, beta, i)) = m_convex_violation(&support) {
        return Verdict::fail(
            Status::NotLorentzian,
            Witness::MConvexity {
                alpha: alpha.to_vec(),
                beta: beta.to_vec(),
                i,
            },
        );
    }
    for alpha in exponents_of_degree(f.nvars(), d - 2) {
        let g = f.partial(&alpha);
        let m = quadratic_form_of(&g).expect("derivative of homogeneous f has degree 2");
        match minor_sign_check(&m) {
            Ok(MinorCheck::Pass) => {}
            Ok(MinorCheck::Violation { subset, det }) => {
                return Verdict::fail(
                    Status::NotLorentzian,
                    Witness::Minor {
                        alpha: alpha.to_vec(),
                        subset,
                        det: det.to_string(),
                    },
                );
            }
            Err(_) => {
                // Cannot occur once all coefficients are non-negative; kept
                // as the general fallback.
                let sig = signature_of(&m);
                if sig.positives > 1 {
                    return Verdict::fail(
                        Status::NotLorentzian,
                        Witness::Signature {
                            alpha: alpha.to_vec(),
                            positives: sig.positives,
                            negatives: sig.negatives,
                            zeros: sig.zeros,
                        },
                    );
                }
            }
        }
    }
    Verdict::ok(Status::Lorentzian)
}

/// Decides strict Lorentzianity: full degree-`d` support and signature
/// exactly `(+,-,...,-)` for every degree-(d-2) derivative. Degree 0 needs a
/// positive constant, degree 1 positive coefficients at every variable.
///
/// A Lorentzian-but-not-strict input keeps status `Lorentzian` and carries a
/// witness for the strictness failure.
pub fn is_strictly_lorentzian(f: &Polynomial) -> Verdict {
    let base = is_lorentzian(f);
    if !base.holds() {
        return base;
    }
    let n = f.nvars();
    let d = match f.degree() {
        None => {
            // zero polynomial: Lorentzian but nothing is supported
            return Verdict::fail(
                Status::Lorentzian,
                Witness::MissingMonomial {
                    alpha: vec![0; n],
                },
            );
        }
        Some(d) => d,
    };
    if d <= 1 {
        // all degree-d monomials must be present (with positive coefficient)
        for e in exponents_of_degree(n, d) {
            if f.coeff(&e).is_zero() {
                return Verdict::fail(
                    Status::Lorentzian,
                    Witness::MissingMonomial { alpha: e.to_vec() },
                );
            }
        }
        return Verdict::ok(Status::StrictlyLorentzian);
    }
    for e in exponents_of_degree(n, d) {
        if f.coeff(&e).is_zero() {
            return Verdict::fail(
                Status::Lorentzian,
                Witness::MissingMonomial { alpha: e.to_vec() },
            );
        }
    }
    for alpha in exponents_of_degree(n, d - 2) {
        let m = quadratic_form_of(&f.partial(&alpha)).expect("degree 2");
        let sig = signature_of(&m);
        if !(sig.positives == 1 && sig.zeros == 0) {
            return Verdict::fail(
                Status::Lorentzian,
                Witness::Signature {
                    alpha: alpha.to_vec(),
                    positives: sig.positives,
                    negatives: sig.negatives,
                    zeros: sig.zeros,
                },
            );
        }
    }
    Verdict::ok(Status::StrictlyLorentzian)
}

/// Outcome of the two-vector inequality `q(x,y)^2 >= q(x) q(y)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HodgeOutcome {
    HoldsStrict,
    /// Equality, together with whether `x` is a rational multiple of `y`.
    Equality { proportional: bool },
    /// Only possible when the form does not have signature `(+,-,...,-)`.
    Violated,
}

/// Exact evaluation of `q(x,y)^2 - q(x) q(y)`; requires `q(y) > 0`.
pub fn hodge_inequality(
    m: &QuadraticForm,
    x: &[Rational],
    y: &[Rational],
) -> Result<HodgeOutcome> {
    let qy = m.quadratic(y)?;
    if !qy.is_positive() {
        return Err(Error::NonPositiveBase);
    }
    let qxy = m.bilinear(x, y)?;
    let qx = m.quadratic(x)?;
    let delta = &qxy * &qxy - &qx * &qy;
    if delta.is_positive() {
        Ok(HodgeOutcome::HoldsStrict)
    } else if delta.is_zero() {
        Ok(HodgeOutcome::Equality {
            proportional: is_proportional(x, y),
        })
    } else {
        Ok(HodgeOutcome::Violated)
    }
}

fn is_proportional(x: &[Rational], y: &[Rational]) -> bool {
    match y.iter().position(|v| !v.is_zero()) {
        None => x.iter().all(|v| v.is_zero()),
        Some(k) => {
            let c = &x[k] / &y[k];
            x.iter().zip(y).all(|(xi, yi)| *xi == &c * yi)
        }
    }
}

/// Finitely generated open convex cone, given by generators (the columns of
/// the substitution matrix).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConeSpec {
    ambient_dim: usize,
    generators: Vec<Vec<Rational>>,
}

impl ConeSpec {
    pub fn new(ambient_dim: usize, generators: Vec<Vec<Rational>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Invalid("cone needs at least one generator".into()));
        }
        for g in &generators {
            if g.len() != ambient_dim {
                return Err(Error::LengthMismatch {
                    expected: ambient_dim,
                    got: g.len(),
                });
            }
        }
        Ok(ConeSpec {
            ambient_dim,
            generators,
        })
    }

    /// The cone of the positive orthant: generators are the standard basis.
    pub fn orthant(dim: usize) -> Self {
        let generators = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        ConeSpec {
            ambient_dim: dim,
            generators,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// Substitution matrix with the generators as columns, as rows of the
    /// ambient space.
    pub fn matrix_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.ambient_dim)
            .map(|i| self.generators.iter().map(|g| g[i].clone()).collect())
            .collect()
    }
}

/// Decides the cone-relative Lorentzian property for the cone generated by
/// the supplied generators: forms the substitution `f(Ax)` with the
/// generators as columns and certifies it. Openness or full-dimensionality
/// of the generated cone is not verified.
pub fn is_c_lorentzian(f: &Polynomial, cone: &ConeSpec) -> Result<Verdict> {
    if cone.ambient_dim != f.nvars() {
        return Err(Error::LengthMismatch {
            expected: f.nvars(),
            got: cone.ambient_dim,
        });
    }
    let g = f.substitute_linear(&cone.matrix_rows())?;
    Ok(is_lorentzian(&g))
}

/// Report on the codegree-2 contraction `D_v1 ... D_v(d-2) f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionReport {
    pub form: QuadraticForm,
    pub signature: Signature,
    pub non_degenerate: bool,
    pub one_positive: bool,
}

/// Contracts `f` along `d-2` directions and reports the resulting quadratic
/// form, its exact signature, and whether it is non-degenerate with exactly
/// one positive eigenvalue. The directions are expected to lie in the cone
/// of interest; membership is not verified.
pub fn cone_contraction_report(
    f: &Polynomial,
    directions: &[Vec<Rational>],
) -> Result<ContractionReport> {
    let d = f.degree().unwrap_or(0);
    if d < 2 {
        return Err(Error::WrongDegree { expected: 2, got: d });
    }
    if directions.len() != d - 2 {
        return Err(Error::LengthMismatch {
            expected: d - 2,
            got: directions.len(),
        });
    }
    let mut g = f.clone();
    for v in directions {
        g = g.directional_derivative(v)?;
    }
    let form = quadratic_form_of(&g)?;
    let signature = signature_of(&form);
    Ok(ContractionReport {
        non_degenerate: signature.zeros == 0,
        one_positive: signature.positives == 1,
        form,
        signature,
    })
}

/// The scalar `D_v1 ... D_vd f` for `d = deg f` directions.
pub fn full_contraction(f: &Polynomial, directions: &[Vec<Rational>]) -> Result<Rational> {
    let d = f.degree().unwrap_or(0);
    if directions.len() != d {
        return Err(Error::LengthMismatch {
            expected: d,
            got: directions.len(),
        });
    }
    let mut g = f.clone();
    for v in directions {
        g = g.directional_derivative(v)?;
    }
    Ok(g.coeff(&ExpVec::zeros(f.nvars())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_pq};

    fn qf(entries: Vec<Vec<Rational>>) -> QuadraticForm {
        QuadraticForm::new(entries).unwrap()
    }

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::variable(n, i)
    }

    #[test]
    fn quadratic_form_extraction() {
        let f = Polynomial::monomial(2, ExpVec::new(vec![1, 1]), rat(1));
        let m = quadratic_form_of(&f).unwrap();
        assert_eq!(*m.get(0, 1), rat_pq(1, 2));
        assert_eq!(*m.get(0, 0), rat(0));

        let g = Polynomial::from_terms(
            2,
            [
                (ExpVec::new(vec![2, 0]), rat(2)),
                (ExpVec::new(vec![1, 1]), rat(7)),
                (ExpVec::new(vec![0, 2]), rat(3)),
            ],
        );
        let mg = quadratic_form_of(&g).unwrap();
        assert_eq!(*mg.get(0, 0), rat(2));
        assert_eq!(*mg.get(0, 1), rat_pq(7, 2));
        assert_eq!(*mg.get(1, 1), rat(3));

        let h = Polynomial::monomial(1, ExpVec::new(vec![2]), rat(1));
        let mh = quadratic_form_of(&h).unwrap();
        assert_eq!(mh.dim(), 1);
        assert_eq!(*mh.get(0, 0), rat(1));

        assert!(quadratic_form_of(&x(0, 2)).is_err());
        assert!(quadratic_form_of(&(&x(0, 2) + &Polynomial::one(2))).is_err());
    }

    #[test]
    fn minor_criterion() {
        let hyper = qf(vec![
            vec![rat(0), rat_pq(1, 2)],
            vec![rat_pq(1, 2), rat(0)],
        ]);
        assert_eq!(minor_sign_check(&hyper).unwrap(), MinorCheck::Pass);

        let id = QuadraticForm::identity(2);
        match minor_sign_check(&id).unwrap() {
            MinorCheck::Violation { subset, det } => {
                assert_eq!(subset, vec![0, 1]);
                assert_eq!(det, rat(1));
            }
            MinorCheck::Pass => panic!("identity must violate"),
        }

        let box_form = qf(vec![
            vec![rat(2), rat_pq(7, 2)],
            vec![rat_pq(7, 2), rat(3)],
        ]);
        assert_eq!(minor_sign_check(&box_form).unwrap(), MinorCheck::Pass);
        assert_eq!(box_form.det(), rat_pq(-25, 4));

        let neg = qf(vec![vec![rat(1), rat(-1)], vec![rat(-1), rat(1)]]);
        assert!(minor_sign_check(&neg).is_err());
    }

    #[test]
    fn signatures() {
        let m = qf(vec![
            vec![rat(1), rat_pq(3, 2)],
            vec![rat_pq(3, 2), rat(1)],
        ]);
        let s = signature_of(&m);
        assert_eq!((s.positives, s.negatives, s.zeros), (1, 1, 0));

        let m2 = qf(vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]);
        let s2 = signature_of(&m2);
        assert_eq!((s2.positives, s2.negatives, s2.zeros), (1, 0, 1));

        let z = QuadraticForm::zero(3);
        let s3 = signature_of(&z);
        assert_eq!((s3.positives, s3.negatives, s3.zeros), (0, 0, 3));

        // hyperbolic block path
        let h = qf(vec![vec![rat(0), rat(2)], vec![rat(2), rat(0)]]);
        let sh = signature_of(&h);
        assert_eq!((sh.positives, sh.negatives, sh.zeros), (1, 1, 0));
    }

    #[test]
    fn signature_matches_minor_criterion_small() {
        // Exhaustive-ish random sweep in low dimension.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let dim = rng.gen_range(1..=4);
            let m = QuadraticForm::from_fn(dim, |_, _| rat(0));
            let mut entries = m.rows().to_vec();
            for i in 0..dim {
                for j in i..dim {
                    let v = rat_pq(rng.gen_range(0..5), rng.gen_range(1..4));
                    entries[i][j] = v.clone();
                    entries[j][i] = v;
                }
            }
            let m = QuadraticForm::new(entries).unwrap();
            let minor_ok = matches!(minor_sign_check(&m).unwrap(), MinorCheck::Pass);
            let sig_ok = signature_of(&m).positives <= 1;
            assert_eq!(minor_ok, sig_ok, "disagreement on {m}");
        }
    }

    #[test]
    fn m_convexity() {
        assert!(is_m_convex(&[ExpVec::new(vec![1, 1])]));
        let gap = vec![ExpVec::new(vec![2, 0]), ExpVec::new(vec![0, 2])];
        let (alpha, beta, i) = m_convex_violation(&gap).unwrap();
        assert_eq!(alpha, ExpVec::new(vec![2, 0]));
        assert_eq!(beta, ExpVec::new(vec![0, 2]));
        assert_eq!(i, 0);
        let cube = (&x(0, 2) + &x(1, 2)).pow(3);
        let support: Vec<ExpVec> = cube.support().cloned().collect();
        assert!(is_m_convex(&support));
    }

    #[test]
    fn lorentzian_basic() {
        // product of positive linear forms
        let f = (&x(0, 2) + &x(1, 2).scale(&rat(3))).checked_mul(
            &(&x(0, 2).scale(&rat(2)) + &x(1, 2)),
        )
        .unwrap();
        assert!(is_lorentzian(&f).holds());

        let gap = &x(0, 2).pow(2) + &x(1, 2).pow(2);
        let v = is_lorentzian(&gap);
        assert!(!v.holds());
        assert!(matches!(v.witness, Some(Witness::MConvexity { .. })));

        // zero, constants, linear
        assert!(is_lorentzian(&Polynomial::zero(2)).holds());
        assert!(is_lorentzian(&Polynomial::one(2)).holds());
        assert!(is_lorentzian(&x(0, 3)).holds());
        let neg = x(0, 2).scale(&rat(-1));
        assert!(!is_lorentzian(&neg).holds());
        let inhom = &x(0, 2) + &Polynomial::one(2);
        assert!(matches!(
            is_lorentzian(&inhom).witness,
            Some(Witness::NonHomogeneous { .. })
        ));
    }

    #[test]
    fn strictly_lorentzian_basic() {
        let strict = Polynomial::from_terms(
            2,
            [
                (ExpVec::new(vec![2, 0]), rat(1)),
                (ExpVec::new(vec![1, 1]), rat(3)),
                (ExpVec::new(vec![0, 2]), rat(1)),
            ],
        );
        assert!(is_strictly_lorentzian(&strict).is_strict());

        let square = (&x(0, 2) + &x(1, 2)).pow(2);
        let v = is_strictly_lorentzian(&square);
        assert_eq!(v.status, Status::Lorentzian);
        assert!(matches!(v.witness, Some(Witness::Signature { zeros: 1, .. })));

        let m = Polynomial::monomial(2, ExpVec::new(vec![1, 1]), rat(1));
        let vm = is_strictly_lorentzian(&m);
        assert_eq!(vm.status, Status::Lorentzian);
        assert!(matches!(vm.witness, Some(Witness::MissingMonomial { .. })));

        // degree 0 and 1 conventions
        assert!(is_strictly_lorentzian(&Polynomial::one(2)).is_strict());
        assert!(!is_strictly_lorentzian(&Polynomial::zero(2)).is_strict());
        assert!(!is_strictly_lorentzian(&x(0, 2)).is_strict());
        let pos_linear = &x(0, 2) + &x(1, 2);
        assert!(is_strictly_lorentzian(&pos_linear).is_strict());
    }

    #[test]
    fn strict_implies_lorentzian() {
        let strict = Polynomial::from_terms(
            2,
            [
                (ExpVec::new(vec![2, 0]), rat(1)),
                (ExpVec::new(vec![1, 1]), rat(3)),
                (ExpVec::new(vec![0, 2]), rat(1)),
            ],
        );
        assert!(is_lorentzian(&strict).holds());
    }

    #[test]
    fn hodge() {
        let m = qf(vec![
            vec![rat(1), rat_pq(3, 2)],
            vec![rat_pq(3, 2), rat(1)],
        ]);
        let x1 = [rat(1), rat(0)];
        let y = [rat(1), rat(1)];
        assert_eq!(
            hodge_inequality(&m, &x1, &y).unwrap(),
            HodgeOutcome::HoldsStrict
        );
        let x2 = [rat(2), rat(2)];
        assert_eq!(
            hodge_inequality(&m, &x2, &y).unwrap(),
            HodgeOutcome::Equality { proportional: true }
        );
        let id = QuadraticForm::identity(2);
        let e1 = [rat(1), rat(0)];
        let e2 = [rat(0), rat(1)];
        assert_eq!(
            hodge_inequality(&id, &e1, &e2).unwrap(),
            HodgeOutcome::Violated
        );
        // q(y) <= 0 is rejected
        let negdef = qf(vec![vec![rat(-1)]]);
        assert!(hodge_inequality(&negdef, &[rat(1)], &[rat(1)]).is_err());
    }

    #[test]
    fn cone_checks() {
        // det(t1 I + t2 diag(1,2)) = (t1+t2)(t1+2t2)
        let f = (&x(0, 2) + &x(1, 2)).checked_mul(&(&x(0, 2) + &x(1, 2).scale(&rat(2)))).unwrap();
        let orthant = ConeSpec::orthant(2);
        assert!(is_c_lorentzian(&f, &orthant).unwrap().holds());

        let gap = &x(0, 2).pow(2) + &x(1, 2).pow(2);
        assert!(!is_c_lorentzian(&gap, &orthant).unwrap().holds());

        // standard basis generators agree with the plain check
        let g = (&x(0, 3) + &x(1, 3) + &x(2, 3)).pow(3);
        let c = ConeSpec::orthant(3);
        assert_eq!(
            is_c_lorentzian(&g, &c).unwrap().status,
            is_lorentzian(&g).status
        );
        assert!(is_c_lorentzian(&g, &ConeSpec::orthant(2)).is_err());
    }

    #[test]
    fn contraction_reports() {
        let f = (&x(0, 2) + &x(1, 2)).pow(3);
        let rep = cone_contraction_report(&f, &[vec![rat(1), rat(1)]]).unwrap();
        assert_eq!(*rep.form.get(0, 0), rat(6));
        assert_eq!(*rep.form.get(0, 1), rat(6));
        assert!(rep.one_positive);
        assert!(!rep.non_degenerate);

        let strict = Polynomial::from_terms(
            2,
            [
                (ExpVec::new(vec![2, 0]), rat(1)),
                (ExpVec::new(vec![1, 1]), rat(3)),
                (ExpVec::new(vec![0, 2]), rat(1)),
            ],
        );
        let rep2 = cone_contraction_report(&strict, &[]).unwrap();
        assert!(rep2.one_positive && rep2.non_degenerate);
        assert_eq!(
            (rep2.signature.positives, rep2.signature.negatives),
            (1, 1)
        );

        // full contraction of (x1+x2)^3 along (1,1) thrice: D^3 = 48
        let c = full_contraction(
            &f,
            &[
                vec![rat(1), rat(1)],
                vec![rat(1), rat(1)],
                vec![rat(1), rat(1)],
            ],
        )
        .unwrap();
        assert_eq!(c, rat(48));
        assert!(full_contraction(&f, &[vec![rat(1), rat(1)]]).is_err());
    }

    #[test]
    fn subset_order() {
        let subsets = subsets_by_size(3);
        assert_eq!(
            subsets,
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2],
            ]
        );
    }

    #[test]
    fn positive_definiteness() {
        assert!(QuadraticForm::identity(3).is_positive_definite());
        let m = qf(vec![vec![rat(1), rat(2)], vec![rat(2), rat(1)]]);
        assert!(!m.is_positive_definite());
    }
}
