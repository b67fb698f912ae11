//! Exact linear algebra over the rationals.
//!
//! Everything here is plain Gaussian elimination with exact pivots; there
//! is no pivoting for numerical stability because there is no rounding.

use crate::scalar::{ParamSet, Rational, Scalar};
use crate::tensor::{FrameTensor, IndexKind, TensorError};
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// Outcome of solving `A x = b` for `x`.
#[derive(Debug, Clone)]
pub enum LinearOutcome {
    /// A solution exists. `particular` sets every free unknown to zero;
    /// `nullspace` spans the solution set of the homogeneous system.
    Solved {
        particular: Vec<Scalar>,
        nullspace: Vec<Vec<Rational>>,
    },
    /// No solution; `row` is the index of the first offending equation.
    Inconsistent { row: usize },
}

impl LinearOutcome {
    pub fn is_unique(&self) -> bool {
        matches!(self, LinearOutcome::Solved { nullspace, .. } if nullspace.is_empty())
    }
}

/// Solve a linear system whose coefficient matrix is rational while the
/// right-hand side may be polynomial. Solutions are then polynomial
/// combinations of the right-hand entries.
pub fn solve_rational_system(
    matrix: &[Vec<Rational>],
    rhs: &[Scalar],
    params: &Arc<ParamSet>,
) -> LinearOutcome {
    let rows = matrix.len();
    assert_eq!(rows, rhs.len(), "matrix/rhs row mismatch");
    let cols = matrix.first().map_or(0, Vec::len);

    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut b: Vec<Scalar> = rhs.to_vec();
    // Track original row numbers for inconsistency witnesses.
    let mut origin: Vec<usize> = (0..rows).collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, found);
        b.swap(pivot_row, found);
        origin.swap(pivot_row, found);

        let inv = Rational::one() / a[pivot_row][col].clone();
        for c in col..cols {
            a[pivot_row][c] = &a[pivot_row][c] * &inv;
        }
        b[pivot_row] = b[pivot_row].scale_rational(&inv);

        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..cols {
                    a[r][c] = &a[r][c] - &(&f * &a[pivot_row][c]);
                }
                b[r] = &b[r] - &b[pivot_row].scale_rational(&f);
            }
        }
        pivot_of_col[col] = Some(pivot_row);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }

    for r in pivot_row..rows {
        if !b[r].is_zero() {
            return LinearOutcome::Inconsistent { row: origin[r] };
        }
    }

    let mut particular = vec![Scalar::zero(params); cols];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            particular[col] = b[*r].clone();
        }
    }

    let mut nullspace = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (col, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot {
                v[col] = -a[*r][free].clone();
            }
        }
        nullspace.push(v);
    }

    LinearOutcome::Solved {
        particular,
        nullspace,
    }
}

/// Solve a system whose coefficients may be polynomial, for unknowns that
/// are required to be rational constants. Each polynomial equation is
/// expanded into one rational equation per monomial.
pub fn solve_for_rational_unknowns(
    matrix: &[Vec<Scalar>],
    rhs: &[Scalar],
    params: &Arc<ParamSet>,
) -> LinearOutcome {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut expanded: Vec<Vec<Rational>> = Vec::new();
    let mut expanded_rhs: Vec<Scalar> = Vec::new();
    let mut origin: Vec<usize> = Vec::new();

    let empty = ParamSet::empty();
    for (row, (coeffs, r)) in matrix.iter().zip(rhs).enumerate() {
        // Coefficient extraction per monomial: express every scalar in the
        // row over the same monomial list.
        let mut monomials: Vec<Scalar> = Vec::new();
        let mut push_monos = |s: &Scalar| {
            for m in monomial_basis(s) {
                if !monomials.contains(&m) {
                    monomials.push(m);
                }
            }
        };
        for c in coeffs {
            push_monos(c);
        }
        push_monos(r);
        for mono in &monomials {
            let line: Vec<Rational> = coeffs.iter().map(|c| coefficient_of(c, mono)).collect();
            let rv = coefficient_of(r, mono);
            expanded.push(line);
            expanded_rhs.push(Scalar::from_rational(&empty, rv));
            origin.push(row);
        }
        if monomials.is_empty() {
            // Whole row is zero = zero; trivially satisfied.
            continue;
        }
    }

    match solve_rational_system(&expanded, &expanded_rhs, &empty) {
        LinearOutcome::Inconsistent { row } => LinearOutcome::Inconsistent { row: origin[row] },
        LinearOutcome::Solved {
            particular,
            nullspace,
        } => {
            let particular = particular
                .into_iter()
                .map(|s| Scalar::from_rational(params, s.as_rational().expect("rational solution")))
                .collect();
            let _ = cols;
            LinearOutcome::Solved {
                particular,
                nullspace,
            }
        }
    }
}

/// The distinct monomials of `s`, each as a monic scalar.
fn monomial_basis(s: &Scalar) -> Vec<Scalar> {
    // Reconstructed via printing granularity: subtract off leading terms.
    // Cheaper and simpler: walk the term map through the public API.
    s.monomials()
}

/// Rational coefficient of the monomial `mono` (a monic scalar) in `s`.
fn coefficient_of(s: &Scalar, mono: &Scalar) -> Rational {
    s.coefficient_of(mono)
}

/// Invert a rank-2 tensor with constant rational entries.
pub fn invert_rational_matrix(
    t: &FrameTensor,
    out_kind: IndexKind,
) -> Result<FrameTensor, TensorError> {
    let d = t.dim();
    if t.rank() != 2 {
        return Err(TensorError::BadMetric);
    }
    let params = t.params().clone();
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(2 * d);
        for j in 0..d {
            row.push(t.get(&[i, j]).as_rational().ok_or(TensorError::BadMetric)?);
        }
        for j in 0..d {
            row.push(if i == j {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        a.push(row);
    }
    for col in 0..d {
        let Some(p) = (col..d).find(|&r| !a[r][col].is_zero()) else {
            return Err(TensorError::BadMetric); // singular
        };
        a.swap(col, p);
        let inv = Rational::one() / a[col][col].clone();
        for c in 0..2 * d {
            a[col][c] = &a[col][c] * &inv;
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * d {
                    a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                }
            }
        }
    }
    let out = FrameTensor::from_fn(d, vec![out_kind, out_kind], &params, |idx| {
        Scalar::from_rational(&params, a[idx[0]][d + idx[1]].clone())
    });
    Ok(out)
}

/// Signature (positive, negative, zero inertia) of a symmetric rational
/// matrix, by congruence diagonalization.
pub fn congruence_signature(t: &FrameTensor) -> Result<(usize, usize, usize), TensorError> {
    let d = t.dim();
    if t.rank() != 2 {
        return Err(TensorError::BadMetric);
    }
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(d);
        for j in 0..d {
            row.push(t.get(&[i, j]).as_rational().ok_or(TensorError::BadMetric)?);
        }
        a.push(row);
    }
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    let mut k = 0;
    while k < d {
        if a[k][k].is_zero() {
            // Look for a later diagonal pivot first.
            if let Some(j) = (k + 1..d).find(|&j| !a[j][j].is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some((i, j)) = (k..d)
                .flat_map(|i| ((i + 1)..d).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())
            {
                // All remaining diagonal entries vanish; mix in a row/column
                // to expose a nonzero diagonal pivot.
                add_sym(&mut a, i, j);
                if i != k {
                    swap_sym(&mut a, k, i);
                }
            } else {
                zero += d - k;
                break;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in k + 1..d {
            if !a[r][k].is_zero() {
                let f = &a[r][k] / &pivot;
                for c in k..d {
                    a[r][c] = &a[r][c] - &(&f * &a[k][c]);
                }
                for c in k..d {
                    a[c][r] = &a[c][r] - &(&f * &a[c][k]);
                }
            }
        }
        k += 1;
    }
    Ok((pos, neg, zero))
}

fn swap_sym(a: &mut [Vec<Rational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn add_sym(a: &mut [Vec<Rational>], i: usize, j: usize) {
    // row_i += row_j, then col_i += col_j
    let d = a.len();
    for c in 0..d {
        let v = a[j][c].clone();
        a[i][c] = &a[i][c] + &v;
    }
    for r in 0..d {
        let v = a[r][j].clone();
        a[r][i] = &a[r][i] + &v;
    }
}
