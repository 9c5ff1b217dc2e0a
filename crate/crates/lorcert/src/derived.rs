//! Log-concavity certification for derived-polynomial value sequences,
//! single and multi-polynomial forms.

use crate::combinatorics::binomial;
use crate::dualize::derived_polys;
use crate::error::{Error, Result};
use crate::poly::{exponents_of_degree, ExpVec, Polynomial, Rational};
use num::{Signed, Zero};

/// Log-concavity verdict for a value sequence. The internal-zero report is
/// separate from the inequality verdict: log-concavity with internal zeros
/// is a degenerate pattern, so we never fold the two into one answer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LogConcavity {
    pub log_concave: bool,
    /// First interior index with `v_j^2 < v_(j-1) v_(j+1)`.
    pub violation: Option<usize>,
    /// A zero strictly between two non-zero values.
    pub internal_zeros: bool,
}

fn check_nonnegative(t: &[Rational]) -> Result<()> {
    if let Some(i) = t.iter().position(|v| v.is_negative()) {
        return Err(Error::NegativeComponent { index: i });
    }
    Ok(())
}

/// The values `[s^(0)(t), ..., s^(d)(t)]` of the derived polynomials at a
/// non-negative rational point.
pub fn derived_sequence(s: &Polynomial, t: &[Rational]) -> Result<Vec<Rational>> {
    check_nonnegative(t)?;
    derived_polys(s)?
        .iter()
        .map(|p| p.evaluate(t))
        .collect()
}

/// Exact rational log-concavity check: `v_j^2 >= v_(j-1) v_(j+1)` for all
/// interior `j`.
pub fn is_log_concave(values: &[Rational]) -> LogConcavity {
    let mut violation = None;
    for j in 1..values.len().saturating_sub(1) {
        if &values[j] * &values[j] < &values[j - 1] * &values[j + 1] {
            violation = Some(j);
            break;
        }
    }
    let first_nonzero = values.iter().position(|v| !v.is_zero());
    let last_nonzero = values.iter().rposition(|v| !v.is_zero());
    let internal_zeros = match (first_nonzero, last_nonzero) {
        (Some(a), Some(b)) => values[a..=b].iter().any(|v| v.is_zero()),
        _ => false,
    };
    LogConcavity {
        log_concave: violation.is_none(),
        violation,
        internal_zeros,
    }
}

/// The bivariate form `sum_j C(d,j) s^(j)(t) u^j v^(d-j)` (variables
/// `(u, v)` in that order). It is Lorentzian exactly when the coefficient
/// sequence is ultra log-concave.
pub fn binomial_weighted_bivariate(s: &Polynomial, t: &[Rational]) -> Result<Polynomial> {
    let seq = derived_sequence(s, t)?;
    let d = seq.len() - 1;
    Ok(Polynomial::from_terms(
        2,
        seq.into_iter().enumerate().map(|(j, v)| {
            let coef = v * Rational::from_integer(binomial(d, j));
            (ExpVec::new(vec![j as u32, (d - j) as u32]), coef)
        }),
    ))
}

/// The degree-`d` form `sum_(|a| = d) prod_j C(d, a_j) s_j^(a_j)(t_j) u^a`
/// in one variable per input polynomial. All inputs must be homogeneous of
/// the same degree; a zero entry collapses the whole form to zero.
pub fn multi_derived_form(
    s_list: &[Polynomial],
    t_list: &[Vec<Rational>],
) -> Result<Polynomial> {
    if s_list.len() != t_list.len() {
        return Err(Error::LengthMismatch {
            expected: s_list.len(),
            got: t_list.len(),
        });
    }
    let r = s_list.len();
    if r == 0 {
        return Err(Error::Invalid("need at least one polynomial".into()));
    }
    let mut degree = None;
    for s in s_list {
        if !s.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        if let Some(d) = s.degree() {
            match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::DegreeMismatch { left: d0, right: d })
                }
                _ => {}
            }
        }
    }
    if s_list.iter().any(|s| s.is_zero()) {
        return Ok(Polynomial::zero(r));
    }
    let d = degree.expect("non-zero entries have a degree");
    let seqs: Vec<Vec<Rational>> = s_list
        .iter()
        .zip(t_list)
        .map(|(s, t)| derived_sequence(s, t))
        .collect::<Result<_>>()?;
    Ok(Polynomial::from_terms(
        r,
        exponents_of_degree(r, d).into_iter().map(|alpha| {
            let mut coef = Rational::from_integer(1.into());
            for j in 0..r {
                let aj = alpha.get(j) as usize;
                coef *= Rational::from_integer(binomial(d, aj)) * &seqs[j][aj];
            }
            (alpha, coef)
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::is_lorentzian;
    use crate::poly::{rat, rat_pq};

    fn ev(v: Vec<u32>) -> ExpVec {
        ExpVec::new(v)
    }

    /// Checks `sum_j seq[j] u^j = s(t_1 + u, ..., t_n + u)` at d+1 sample
    /// points, which pins down the degree-d polynomial exactly.
    fn check_sequence_against_substitution(s: &Polynomial, t: &[Rational], seq: &[Rational]) {
        for u in 0..seq.len() as i64 {
            let shifted: Vec<Rational> = t.iter().map(|ti| ti + rat(u)).collect();
            let direct = s.evaluate(&shifted).unwrap();
            let mut acc = rat(0);
            let mut upow = rat(1);
            for v in seq {
                acc += v * &upow;
                upow *= rat(u);
            }
            assert_eq!(direct, acc, "sequence mismatch at u = {u}");
        }
    }

    #[test]
    fn sequence_of_product() {
        let s = Polynomial::monomial(2, ev(vec![1, 1]), rat(1));
        let t = [rat(1), rat(1)];
        let seq = derived_sequence(&s, &t).unwrap();
        assert_eq!(seq, vec![rat(1), rat(2), rat(1)]);
        check_sequence_against_substitution(&s, &t, &seq);
    }

    #[test]
    fn sequence_of_schur() {
        let s = crate::symfunc::schur(&crate::poly::Partition::new(vec![2, 1]).unwrap(), 3);
        let t = [rat(1), rat(1), rat(1)];
        let seq = derived_sequence(&s, &t).unwrap();
        // s(1+u,1+u,1+u) = 8 (1+u)^3 by homogeneity
        assert_eq!(seq, vec![rat(8), rat(24), rat(24), rat(8)]);
        check_sequence_against_substitution(&s, &t, &seq);
        assert!(is_log_concave(&seq).log_concave);
    }

    #[test]
    fn sequence_of_constant_and_errors() {
        let c = Polynomial::constant(2, rat_pq(3, 2));
        assert_eq!(
            derived_sequence(&c, &[rat(0), rat(7)]).unwrap(),
            vec![rat_pq(3, 2)]
        );
        let s = Polynomial::monomial(2, ev(vec![1, 1]), rat(1));
        assert!(matches!(
            derived_sequence(&s, &[rat(1), rat(-1)]),
            Err(Error::NegativeComponent { index: 1 })
        ));
    }

    #[test]
    fn log_concavity_checks() {
        let r = is_log_concave(&[rat(1), rat(2), rat(1)]);
        assert!(r.log_concave && !r.internal_zeros);

        let r2 = is_log_concave(&[rat(1), rat(1), rat(2)]);
        assert_eq!(r2.violation, Some(1));

        // 0^2 >= 0 * 1 holds, so only the internal-zero report fires
        let r3 = is_log_concave(&[rat(2), rat(0), rat(0), rat(1)]);
        assert!(r3.log_concave);
        assert!(r3.internal_zeros);

        // leading zeros are not internal
        let r4 = is_log_concave(&[rat(0), rat(1), rat(1)]);
        assert!(!r4.internal_zeros);
    }

    #[test]
    fn bivariate_form() {
        let s = Polynomial::monomial(2, ev(vec![1, 1]), rat(1));
        let f = binomial_weighted_bivariate(&s, &[rat(1), rat(1)]).unwrap();
        // u^2 + 4 u v + v^2
        assert_eq!(f.coeff(&ev(vec![2, 0])), rat(1));
        assert_eq!(f.coeff(&ev(vec![1, 1])), rat(4));
        assert_eq!(f.coeff(&ev(vec![0, 2])), rat(1));
        assert!(is_lorentzian(&f).holds());

        // degree-1 case: s = x1 at t = 3 gives u + 3v
        let lin = Polynomial::variable(1, 0);
        let g = binomial_weighted_bivariate(&lin, &[rat(3)]).unwrap();
        assert_eq!(g.coeff(&ev(vec![1, 0])), rat(1));
        assert_eq!(g.coeff(&ev(vec![0, 1])), rat(3));
    }

    #[test]
    fn multi_form() {
        let s = Polynomial::monomial(2, ev(vec![1, 1]), rat(1));
        let f = multi_derived_form(
            &[s.clone(), s.clone()],
            &[vec![rat(1), rat(1)], vec![rat(1), rat(1)]],
        )
        .unwrap();
        // coefficient of u1^a u2^b is C(2,a) C(2,b) seq[a] seq[b] with
        // seq = [1, 2, 1]: gives u1^2 + 16 u1 u2 + u2^2
        assert_eq!(f.coeff(&ev(vec![2, 0])), rat(1));
        assert_eq!(f.coeff(&ev(vec![1, 1])), rat(16));
        assert_eq!(f.coeff(&ev(vec![0, 2])), rat(1));
        assert!(is_lorentzian(&f).holds());

        // single polynomial: only the top derived value survives
        let single = multi_derived_form(&[s.clone()], &[vec![rat(1), rat(1)]]).unwrap();
        assert_eq!(single, Polynomial::monomial(1, ev(vec![2]), rat(1)));

        // zero entry collapses the form
        let z = multi_derived_form(
            &[s.clone(), Polynomial::zero(2)],
            &[vec![rat(1), rat(1)], vec![rat(1), rat(1)]],
        )
        .unwrap();
        assert!(z.is_zero());

        // degree mismatch is rejected
        let lin = Polynomial::variable(2, 0);
        assert!(matches!(
            multi_derived_form(
                &[s, lin],
                &[vec![rat(1), rat(1)], vec![rat(1), rat(1)]]
            ),
            Err(Error::DegreeMismatch { .. })
        ));
    }
}
