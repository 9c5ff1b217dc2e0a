//! Schur and Schubert polynomial constructors.
//!
//! Schur polynomials come from the Jacobi-Trudi determinant over complete
//! homogeneous symmetric polynomials, with direct semistandard-tableau
//! enumeration kept as an independent oracle. Schubert polynomials are
//! computed top-down from the staircase monomial by divided differences;
//! each division is checked to be exact and errors loudly otherwise.

use crate::error::{Error, Result};
use crate::poly::{exponents_of_degree, ExpVec, Partition, Polynomial, Rational};
use num::One;

/// A permutation of `{1..n}` given by its images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `(n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Lehmer code: `code_i = #{j > i : w(j) < w(i)}`.
    pub fn code(&self) -> Vec<u32> {
        let n = self.0.len();
        (0..n)
            .map(|i| ((i + 1)..n).filter(|&j| self.0[j] < self.0[i]).count() as u32)
            .collect()
    }

    /// Dominant permutations are exactly those whose code is a partition.
    pub fn is_dominant(&self) -> bool {
        self.code().windows(2).all(|w| w[0] >= w[1])
    }

    fn swap_positions(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Permutation(v)
    }
}

/// Complete homogeneous symmetric polynomial `h_m(x_1..x_n)`.
fn complete_homogeneous(m: i64, nvars: usize) -> Polynomial {
    match m {
        m if m < 0 => Polynomial::zero(nvars),
        0 => Polynomial::one(nvars),
        m => Polynomial::from_terms(
            nvars,
            exponents_of_degree(nvars, m as usize)
                .into_iter()
                .map(|e| (e, Rational::one())),
        ),
    }
}

fn poly_matrix_det(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let k = m.len();
    if k == 0 {
        return Polynomial::one(nvars);
    }
    // cofactor expansion along the first remaining row
    fn rec(m: &[Vec<Polynomial>], cols: &[usize], row: usize, nvars: usize) -> Polynomial {
        if cols.is_empty() {
            return Polynomial::one(nvars);
        }
        let mut acc = Polynomial::zero(nvars);
        for (pos, &c) in cols.iter().enumerate() {
            let entry = &m[row][c];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&x| x != c)
                .collect();
            let sub = rec(m, &rest, row + 1, nvars);
            let signed = if pos % 2 == 0 {
                entry.checked_mul(&sub).unwrap()
            } else {
                entry.checked_mul(&sub).unwrap().neg()
            };
            acc = acc.checked_add(&signed).unwrap();
        }
        acc
    }
    let cols: Vec<usize> = (0..k).collect();
    rec(m, &cols, 0, nvars)
}

/// The Schur polynomial `s_lambda(x_1..x_n)` by the Jacobi-Trudi determinant
/// `det(h_(lambda_i - i + j))`. Partitions longer than `n` give the zero
/// polynomial (the standard convention).
pub fn schur(lambda: &Partition, nvars: usize) -> Polynomial {
    let ell = lambda.length();
    if ell > nvars {
        return Polynomial::zero(nvars);
    }
    if ell == 0 {
        return Polynomial::one(nvars);
    }
    let m: Vec<Vec<Polynomial>> = (0..ell)
        .map(|i| {
            (0..ell)
                .map(|j| {
                    let idx = lambda.part(i) as i64 - i as i64 + j as i64;
                    complete_homogeneous(idx, nvars)
                })
                .collect()
        })
        .collect();
    poly_matrix_det(&m, nvars)
}

/// Independent construction of `s_lambda` by explicit enumeration of
/// semistandard tableaux (rows weakly increasing, columns strictly
/// increasing, entries at most `n`).
pub fn schur_by_tableaux(lambda: &Partition, nvars: usize) -> Polynomial {
    let ell = lambda.length();
    if ell > nvars {
        return Polynomial::zero(nvars);
    }
    if ell == 0 {
        return Polynomial::one(nvars);
    }
    let shape: Vec<usize> = (0..ell).map(|i| lambda.part(i) as usize).collect();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&w| vec![0; w]).collect();
    let mut terms: Vec<(ExpVec, Rational)> = Vec::new();

    fn fill(
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        r: usize,
        c: usize,
        nvars: usize,
        terms: &mut Vec<(ExpVec, Rational)>,
    ) {
        if r == shape.len() {
            let mut content = vec![0u32; nvars];
            for row in rows.iter() {
                for &v in row {
                    content[v - 1] += 1;
                }
            }
            terms.push((ExpVec::new(content), Rational::one()));
            return;
        }
        let (nr, nc) = if c + 1 == shape[r] { (r + 1, 0) } else { (r, c + 1) };
        let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let min_above = if r > 0 && c < shape[r - 1] {
            rows[r - 1][c] + 1
        } else {
            1
        };
        for v in min_left.max(min_above)..=nvars {
            rows[r][c] = v;
            fill(shape, rows, nr, nc, nvars, terms);
        }
        rows[r][c] = 0;
    }

    fill(&shape, &mut rows, 0, 0, nvars, &mut terms);
    Polynomial::from_terms(nvars, terms)
}

fn swap_vars(f: &Polynomial, i: usize, j: usize) -> Polynomial {
    Polynomial::from_terms(
        f.nvars(),
        f.iter().map(|(e, c)| {
            let mut v = e.to_vec();
            v.swap(i, j);
            (ExpVec::new(v), c.clone())
        }),
    )
}

/// Exact division by `x_i - x_j`, failing if a non-zero remainder appears.
fn divide_exact_by_difference(g: &Polynomial, i: usize, j: usize) -> Result<Polynomial> {
    let n = g.nvars();
    let mut rem = g.clone();
    let mut quot = Polynomial::zero(n);
    while !rem.is_zero() {
        // leading term: maximal x_i exponent, canonical order as tie-break
        let (e, c) = rem
            .iter()
            .max_by(|(ea, _), (eb, _)| ea.get(i).cmp(&eb.get(i)).then_with(|| ea.cmp(eb)))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        if e.get(i) == 0 {
            return Err(Error::InexactDivision);
        }
        let mut q = e.to_vec();
        q[i] -= 1;
        let qterm = Polynomial::monomial(n, ExpVec::new(q.clone()), c);
        let xi = Polynomial::variable(n, i);
        let xj = Polynomial::variable(n, j);
        let divisor = xi.checked_sub(&xj)?;
        rem = rem.checked_sub(&qterm.checked_mul(&divisor)?)?;
        quot = quot.checked_add(&qterm)?;
    }
    Ok(quot)
}

/// Divided difference `(f - f|_(x_i <-> x_(i+1))) / (x_i - x_(i+1))`
/// (0-based `i`).
pub fn divided_difference(f: &Polynomial, i: usize) -> Result<Polynomial> {
    let g = f.checked_sub(&swap_vars(f, i, i + 1))?;
    if g.is_zero() {
        return Ok(Polynomial::zero(f.nvars()));
    }
    divide_exact_by_difference(&g, i, i + 1)
}

/// The Schubert polynomial of `w`, computed from the staircase monomial of
/// the longest element by divided differences along any ascent path.
pub fn schubert(w: &Permutation) -> Result<Polynomial> {
    let n = w.len();
    if n == 0 {
        return Ok(Polynomial::one(0));
    }
    let longest = Permutation::longest(n);
    if *w == longest {
        let delta = ExpVec::new((0..n).map(|i| (n - 1 - i) as u32).collect());
        return Ok(Polynomial::monomial(n, delta, Rational::one()));
    }
    // find an ascent; w != longest guarantees one exists
    let i = (0..n - 1)
        .find(|&i| w.images()[i] < w.images()[i + 1])
        .expect("non-longest permutation has an ascent");
    let up = w.swap_positions(i);
    let parent = schubert(&up)?;
    divided_difference(&parent, i)
}

/// The two sides of the box-reversal identity for Schur polynomials: the
/// reversal of `s_lambda` inside the box `(d,...,d)` and the Schur
/// polynomial of the complementary partition `(d - lambda_n, ..., d -
/// lambda_1)`. The two are equal; the pair is returned so the identity is a
/// first-class checkable object.
pub fn schur_dual_identity(lambda: &Partition, nvars: usize) -> Result<(Polynomial, Polynomial)> {
    if lambda.length() > nvars {
        return Err(Error::Invalid(format!(
            "partition of length {} does not fit in {} variables",
            lambda.length(),
            nvars
        )));
    }
    let d = lambda.size() as u32;
    let s = schur(lambda, nvars);
    let box_exp = ExpVec::new(vec![d; nvars]);
    let reversed = Polynomial::from_terms(
        nvars,
        s.iter()
            .map(|(e, c)| (box_exp.checked_sub(e).expect("support fits box"), c.clone())),
    );
    let kappa = Partition::new(
        (0..nvars)
            .map(|i| d - lambda.part(nvars - 1 - i))
            .collect(),
    )?;
    Ok((reversed, schur(&kappa, nvars)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn part(v: Vec<u32>) -> Partition {
        Partition::new(v).unwrap()
    }

    fn ev(v: Vec<u32>) -> ExpVec {
        ExpVec::new(v)
    }

    #[test]
    fn schur_small() {
        let s1 = schur(&part(vec![1]), 2);
        assert_eq!(
            s1,
            &Polynomial::variable(2, 0) + &Polynomial::variable(2, 1)
        );

        // s_(2,1) in three variables: seven monomials, x1 x2 x3 twice
        let s21 = schur(&part(vec![2, 1]), 3);
        assert_eq!(s21.coeff(&ev(vec![2, 1, 0])), rat(1));
        assert_eq!(s21.coeff(&ev(vec![2, 0, 1])), rat(1));
        assert_eq!(s21.coeff(&ev(vec![1, 2, 0])), rat(1));
        assert_eq!(s21.coeff(&ev(vec![0, 2, 1])), rat(1));
        assert_eq!(s21.coeff(&ev(vec![1, 0, 2])), rat(1));
        assert_eq!(s21.coeff(&ev(vec![0, 1, 2])), rat(1));
        assert_eq!(s21.coeff(&ev(vec![1, 1, 1])), rat(2));
        assert_eq!(s21.num_terms(), 7);
        assert_eq!(s21.evaluate(&[rat(1), rat(1), rat(1)]).unwrap(), rat(8));

        // s_(1,1,1) = e_3
        assert_eq!(
            schur(&part(vec![1, 1, 1]), 3),
            Polynomial::monomial(3, ev(vec![1, 1, 1]), rat(1))
        );

        // longer than n vanishes
        assert!(schur(&part(vec![1, 1, 1]), 2).is_zero());
        assert_eq!(schur(&part(vec![]), 3), Polynomial::one(3));
    }

    #[test]
    fn jacobi_trudi_matches_tableaux() {
        for n in 1..=3 {
            for parts in [
                vec![],
                vec![1],
                vec![2],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![3, 2, 1],
            ] {
                let lambda = part(parts.clone());
                assert_eq!(
                    schur(&lambda, n),
                    schur_by_tableaux(&lambda, n),
                    "mismatch for {lambda} in {n} vars"
                );
            }
        }
    }

    #[test]
    fn schubert_small() {
        // identity -> 1
        let id = Permutation::identity(3);
        assert_eq!(schubert(&id).unwrap(), Polynomial::one(3));

        // longest in S2 -> x1
        let w0s2 = Permutation::longest(2);
        assert_eq!(schubert(&w0s2).unwrap(), Polynomial::variable(2, 0));

        // longest in S3 -> x1^2 x2
        let w0s3 = Permutation::longest(3);
        assert_eq!(
            schubert(&w0s3).unwrap(),
            Polynomial::monomial(3, ev(vec![2, 1, 0]), rat(1))
        );

        // simple transposition s2 in S3 -> x1 + x2
        let s2 = Permutation::new(vec![1, 3, 2]).unwrap();
        assert_eq!(
            schubert(&s2).unwrap(),
            &Polynomial::variable(3, 0) + &Polynomial::variable(3, 1)
        );
    }

    #[test]
    fn dominant_schubert_is_code_monomial() {
        for images in [vec![3, 2, 1], vec![2, 1, 3], vec![3, 1, 2], vec![1, 2, 3]] {
            let w = Permutation::new(images).unwrap();
            if !w.is_dominant() {
                continue;
            }
            let code = ExpVec::new(w.code());
            assert_eq!(
                schubert(&w).unwrap(),
                Polynomial::monomial(w.len(), code, rat(1))
            );
        }
    }

    #[test]
    fn schubert_schur_special_case() {
        // Grassmannian permutation 1 3 2 gives s_(1) in two effective vars;
        // 2 4 1 3 gives s_(2,1)(x1, x2) padded to four variables.
        let w = Permutation::new(vec![2, 4, 1, 3]).unwrap();
        let s = schubert(&w).unwrap();
        let expected = Polynomial::from_terms(
            4,
            [
                (ev(vec![2, 1, 0, 0]), rat(1)),
                (ev(vec![1, 2, 0, 0]), rat(1)),
            ],
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 3, 2]).is_ok());
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![4, 1, 2]).is_err());
    }

    #[test]
    fn divided_difference_basics() {
        // d_1 x1 = 1
        let f = Polynomial::variable(2, 0);
        assert_eq!(divided_difference(&f, 0).unwrap(), Polynomial::one(2));
        // symmetric input -> 0
        let sym = &Polynomial::variable(2, 0) + &Polynomial::variable(2, 1);
        assert!(divided_difference(&sym, 0).unwrap().is_zero());
        // d_1 (x1^2) = x1 + x2
        let sq = Polynomial::monomial(2, ev(vec![2, 0]), rat(1));
        assert_eq!(divided_difference(&sq, 0).unwrap(), sym);
    }

    #[test]
    fn dual_identity_examples() {
        // lambda = (1), n = 2: reversal in box (1,1) is x1 + x2 = s_(1,0)
        let (a, b) = schur_dual_identity(&part(vec![1]), 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a,
            &Polynomial::variable(2, 0) + &Polynomial::variable(2, 1)
        );

        // lambda = (2,1), n = 2, d = 3: x1^3 x2^3 s_21(1/x) = s_(2,1)
        let (a2, b2) = schur_dual_identity(&part(vec![2, 1]), 2).unwrap();
        assert_eq!(a2, b2);
        assert_eq!(
            a2,
            Polynomial::from_terms(2, [(ev(vec![2, 1]), rat(1)), (ev(vec![1, 2]), rat(1))])
        );

        // lambda = (d) in one variable: reversal of x^d is 1 = s_()
        let (a3, b3) = schur_dual_identity(&part(vec![4]), 1).unwrap();
        assert_eq!(a3, b3);
        assert_eq!(a3, Polynomial::one(1));

        assert!(schur_dual_identity(&part(vec![1, 1, 1]), 2).is_err());
    }
}
