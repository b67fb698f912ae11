//! Exact classification of derived curvature symmetries.
//!
//! Every verdict is decided componentwise over exact scalars; false
//! verdicts carry the first violating index tuple in lexicographic order.
//! The two 1-form conditions are solved as exact linear systems in the
//! constant frame components of the unknown forms.

use crate::check::Verdict;
use crate::frame::{Connection, CurvatureData};
use crate::linalg::{solve_for_rational_unknowns, LinearOutcome};
use crate::pi::PiStructure;
use crate::scalar::{Rational, Scalar};
use crate::soliton::{
    check_recurrence, solve_einstein_like, solve_soliton, EinsteinLikeSolution, Potential,
    RecurrenceOutcome,
};
use crate::tensor::{FrameTensor, IndexKind};
use num_traits::{One, Zero};

/// Result of solving a defining equation for unknown constant 1-forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneFormSolve {
    /// A solution with non-vanishing leading form exists.
    Fit {
        alpha: Vec<Scalar>,
        beta: Option<Vec<Scalar>>,
    },
    /// The system is solvable but every solution has α = 0, so the
    /// definition's non-vanishing requirement fails.
    OnlyZero,
    /// The system has no solution; first inconsistent component index.
    Inconsistent { witness: Vec<usize> },
    /// The definition requires a non-vanishing Ricci tensor.
    RicciZero,
}

impl OneFormSolve {
    pub fn holds(&self) -> bool {
        matches!(self, OneFormSolve::Fit { .. })
    }
}

/// Full symmetry classification of a structure.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    /// ∇ρ = 0.
    pub locally_ricci_symmetric: Verdict,
    /// (∇ρ)|_{ker η} = 0: all three arguments restricted to ker η.
    pub ricci_eta_parallel: Verdict,
    /// ∇_ξ ρ = 0.
    pub ricci_parallel_along_xi: Verdict,
    /// Recurrence expression for ∇ρ in terms of ρ.
    pub recurrence: RecurrenceOutcome,
    /// ρ(R(x,y)z, w) + ρ(z, R(x,y)w) = 0.
    pub ricci_semi_symmetric: Verdict,
    /// φ²(∇_x Q)y = 0 for all x, y.
    pub globally_phi_symmetric: Verdict,
    /// φ²(∇_x Q)y = 0 for x, y orthogonal to ξ.
    pub locally_phi_symmetric: Verdict,
    /// Vanishing cyclic sum of ∇ρ.
    pub cyclic_parallel: Verdict,
    /// ∇ρ symmetric in its first two slots.
    pub codazzi: Verdict,
    /// (∇_x ρ)(y,z) = {α(x)+β(x)}ρ(y,z) + α(y)ρ(x,z) + α(z)ρ(x,y).
    pub almost_pseudo_ricci_symmetric: OneFormSolve,
    /// (∇_x ρ)(y,z) = 2α(x)ρ(y,z) + α(y)ρ(x,z) + α(z)ρ(x,y).
    pub special_weakly_ricci_symmetric: OneFormSolve,
    /// ρ = a g with b = c = 0 in the exact decomposition.
    pub einstein: Verdict,
    /// Per-property agreement with the Einstein verdict (the seven
    /// properties are each expected to hold precisely on Einstein inputs).
    pub einstein_equivalences: Vec<(&'static str, bool)>,
}

/// Basis of ker η over the rationals: d − 1 vectors, or the full frame
/// when η vanishes identically.
fn eta_kernel_basis(s: &PiStructure) -> Vec<Vec<Rational>> {
    let d = s.dim();
    let eta: Vec<Rational> = (0..d)
        .map(|i| s.eta().get(&[i]).as_rational().expect("rational eta"))
        .collect();
    let Some(pivot) = eta.iter().position(|v| !v.is_zero()) else {
        return (0..d)
            .map(|i| {
                let mut v = vec![Rational::zero(); d];
                v[i] = Rational::one();
                v
            })
            .collect();
    };
    let mut basis = Vec::new();
    for i in 0..d {
        if i == pivot {
            continue;
        }
        let mut v = vec![Rational::zero(); d];
        v[i] = Rational::one();
        v[pivot] = -&eta[i] / &eta[pivot];
        basis.push(v);
    }
    basis
}

pub fn classify(s: &PiStructure, conn: &Connection, curv: &CurvatureData) -> ClassificationReport {
    let d = s.dim();
    let params = s.frame().params();
    let nabla_rho = s.frame().covariant_derivative(conn, &curv.ricci);
    let rho = &curv.ricci;

    let locally_ricci_symmetric =
        Verdict::from_violation(nabla_rho.first_nonzero().map(|(idx, _)| idx));

    // Restriction to ker η: contract every slot with kernel basis vectors.
    let kernel = eta_kernel_basis(s);
    let mut viol = None;
    'eta_par: for (ui, u) in kernel.iter().enumerate() {
        for (vi, v) in kernel.iter().enumerate() {
            for (wi, w) in kernel.iter().enumerate() {
                let mut acc = Scalar::zero(params);
                for a in 0..d {
                    if u[a].is_zero() {
                        continue;
                    }
                    for b in 0..d {
                        if v[b].is_zero() {
                            continue;
                        }
                        for c in 0..d {
                            if w[c].is_zero() {
                                continue;
                            }
                            let f = &(&u[a] * &v[b]) * &w[c];
                            acc = &acc + &nabla_rho.get(&[a, b, c]).scale_rational(&f);
                        }
                    }
                }
                if !acc.is_zero() {
                    viol = Some(vec![ui, vi, wi]);
                    break 'eta_par;
                }
            }
        }
    }
    let ricci_eta_parallel = Verdict::from_violation(viol);

    let mut viol = None;
    'along_xi: for j in 0..d {
        for k in 0..d {
            let mut acc = Scalar::zero(params);
            for i in 0..d {
                acc = &acc + &(s.xi().get(&[i]) * nabla_rho.get(&[i, j, k]));
            }
            if !acc.is_zero() {
                viol = Some(vec![j, k]);
                break 'along_xi;
            }
        }
    }
    let ricci_parallel_along_xi = Verdict::from_violation(viol);

    let recurrence = if s.is_para_sasaki(conn).holds {
        let sol = solve_soliton(s, conn, curv, Potential::Reeb);
        check_recurrence(s, conn, curv, &sol)
    } else {
        RecurrenceOutcome::NotApplicable {
            reason: "structure is not para-Sasaki-like".to_string(),
        }
    };

    let mut viol = None;
    'semi: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let mut acc = Scalar::zero(params);
                    for m in 0..d {
                        acc = &acc + &(curv.riemann.get(&[i, j, k, m]) * rho.get(&[m, l]));
                        acc = &acc + &(curv.riemann.get(&[i, j, l, m]) * rho.get(&[k, m]));
                    }
                    if !acc.is_zero() {
                        viol = Some(vec![i, j, k, l]);
                        break 'semi;
                    }
                }
            }
        }
    }
    let ricci_semi_symmetric = Verdict::from_violation(viol);

    // φ² (∇_x Q) y, stored at [x, out-component, y].
    let nabla_q = s.frame().covariant_derivative(conn, &curv.ricci_operator);
    let phi = s.phi();
    let phi_sq = FrameTensor::from_fn(d, vec![IndexKind::Upper, IndexKind::Lower], params, |idx| {
        let mut acc = Scalar::zero(params);
        for m in 0..d {
            acc = &acc + &(phi.get(&[idx[0], m]) * phi.get(&[m, idx[1]]));
        }
        acc
    });
    let phi2_nabla_q = FrameTensor::from_fn(
        d,
        vec![IndexKind::Lower, IndexKind::Upper, IndexKind::Lower],
        params,
        |idx| {
            let (x, b, y) = (idx[0], idx[1], idx[2]);
            let mut acc = Scalar::zero(params);
            for a in 0..d {
                acc = &acc + &(phi_sq.get(&[b, a]) * nabla_q.get(&[x, a, y]));
            }
            acc
        },
    );
    let globally_phi_symmetric = Verdict::from_violation(
        phi2_nabla_q
            .first_nonzero()
            .map(|(idx, _)| vec![idx[0], idx[2]]),
    );

    let mut viol = None;
    'local_phi: for (ui, u) in kernel.iter().enumerate() {
        for (vi, v) in kernel.iter().enumerate() {
            for b in 0..d {
                let mut acc = Scalar::zero(params);
                for x in 0..d {
                    if u[x].is_zero() {
                        continue;
                    }
                    for y in 0..d {
                        if v[y].is_zero() {
                            continue;
                        }
                        let f = &u[x] * &v[y];
                        acc = &acc + &phi2_nabla_q.get(&[x, b, y]).scale_rational(&f);
                    }
                }
                if !acc.is_zero() {
                    viol = Some(vec![ui, vi]);
                    break 'local_phi;
                }
            }
        }
    }
    let locally_phi_symmetric = Verdict::from_violation(viol);

    let mut viol = None;
    'cyclic: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let sum = &(nabla_rho.get(&[i, j, k]) + nabla_rho.get(&[j, k, i]))
                    + nabla_rho.get(&[k, i, j]);
                if !sum.is_zero() {
                    viol = Some(vec![i, j, k]);
                    break 'cyclic;
                }
            }
        }
    }
    let cyclic_parallel = Verdict::from_violation(viol);

    let codazzi = Verdict::from_violation(nabla_rho.symmetry_violation(0, 1));

    let almost_pseudo_ricci_symmetric = solve_one_forms(s, &nabla_rho, rho, true);
    let special_weakly_ricci_symmetric = solve_one_forms(s, &nabla_rho, rho, false);

    let einstein = match solve_einstein_like(s, curv) {
        EinsteinLikeSolution::Fit { b, c, .. } if b.is_zero() && c.is_zero() => Verdict {
            holds: true,
            witness: None,
        },
        _ => Verdict {
            holds: false,
            witness: None,
        },
    };

    let einstein_equivalences = vec![
        (
            "locally_ricci_symmetric",
            locally_ricci_symmetric.holds == einstein.holds,
        ),
        (
            "ricci_semi_symmetric",
            ricci_semi_symmetric.holds == einstein.holds,
        ),
        (
            "globally_phi_symmetric",
            globally_phi_symmetric.holds == einstein.holds,
        ),
        (
            "almost_pseudo_ricci_symmetric",
            almost_pseudo_ricci_symmetric.holds() == einstein.holds,
        ),
        (
            "special_weakly_ricci_symmetric",
            special_weakly_ricci_symmetric.holds() == einstein.holds,
        ),
        ("cyclic_parallel", cyclic_parallel.holds == einstein.holds),
        ("codazzi", codazzi.holds == einstein.holds),
    ];

    ClassificationReport {
        locally_ricci_symmetric,
        ricci_eta_parallel,
        ricci_parallel_along_xi,
        recurrence,
        ricci_semi_symmetric,
        globally_phi_symmetric,
        locally_phi_symmetric,
        cyclic_parallel,
        codazzi,
        almost_pseudo_ricci_symmetric,
        special_weakly_ricci_symmetric,
        einstein,
        einstein_equivalences,
    }
}

/// Solve the 1-form condition. With `with_beta` the unknowns are the 2d
/// components of (α, β); otherwise the d components of α with the β slot
/// replaced by α (the coefficient of ρ(y,z) becomes 2α(x)).
///
/// The final term of the defining equation is read as α(z) ρ(x, y).
fn solve_one_forms(
    s: &PiStructure,
    nabla_rho: &FrameTensor,
    rho: &FrameTensor,
    with_beta: bool,
) -> OneFormSolve {
    if rho.is_zero() {
        return OneFormSolve::RicciZero;
    }
    let d = s.dim();
    let params = s.frame().params();
    let unknowns = if with_beta { 2 * d } else { d };
    let mut matrix = Vec::with_capacity(d * d * d);
    let mut rhs = Vec::with_capacity(d * d * d);
    let mut rows = Vec::with_capacity(d * d * d);
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let mut row = vec![Scalar::zero(params); unknowns];
                // α(x) ρ(y,z): coefficient 1 (or 2 without β)
                let rho_yz = rho.get(&[y, z]);
                if with_beta {
                    row[x] = &row[x] + rho_yz;
                    row[d + x] = &row[d + x] + rho_yz;
                } else {
                    row[x] = &row[x] + &rho_yz.scale_rational(&Rational::from_integer(2.into()));
                }
                // α(y) ρ(x,z)
                row[y] = &row[y] + rho.get(&[x, z]);
                // α(z) ρ(x,y)
                row[z] = &row[z] + rho.get(&[x, y]);
                matrix.push(row);
                rhs.push(nabla_rho.get(&[x, y, z]).clone());
                rows.push(vec![x, y, z]);
            }
        }
    }
    match solve_for_rational_unknowns(&matrix, &rhs, params) {
        LinearOutcome::Inconsistent { row } => OneFormSolve::Inconsistent {
            witness: rows[row].clone(),
        },
        LinearOutcome::Solved {
            particular,
            nullspace,
        } => {
            let alpha_nonzero = |v: &[Scalar]| v[..d].iter().any(|s| !s.is_zero());
            if alpha_nonzero(&particular) {
                return split_solution(particular, d, with_beta);
            }
            // Shift by a homogeneous solution whose α part is nonzero.
            for null in &nullspace {
                if null[..d].iter().any(|v| !v.is_zero()) {
                    let shifted: Vec<Scalar> = particular
                        .iter()
                        .zip(null)
                        .map(|(p, n)| p + &Scalar::from_rational(params, n.clone()))
                        .collect();
                    return split_solution(shifted, d, with_beta);
                }
            }
            OneFormSolve::OnlyZero
        }
    }
}

fn split_solution(mut solution: Vec<Scalar>, d: usize, with_beta: bool) -> OneFormSolve {
    if with_beta {
        let beta = solution.split_off(d);
        OneFormSolve::Fit {
            alpha: solution,
            beta: Some(beta),
        }
    } else {
        OneFormSolve::Fit {
            alpha: solution,
            beta: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn flat_structure_classification() {
        let s = fixtures::abelian5();
        let conn = s.frame().levi_civita().unwrap();
        let curv = s.frame().curvature(&conn);
        let report = classify(&s, &conn, &curv);
        assert!(report.locally_ricci_symmetric.holds);
        assert!(report.ricci_semi_symmetric.holds);
        assert!(report.cyclic_parallel.holds);
        assert!(report.codazzi.holds);
        assert!(report.einstein.holds);
        // ρ = 0: the 1-form definitions require a non-vanishing Ricci tensor.
        assert_eq!(
            report.almost_pseudo_ricci_symmetric,
            OneFormSolve::RicciZero
        );
        assert_eq!(
            report.special_weakly_ricci_symmetric,
            OneFormSolve::RicciZero
        );
        assert!(matches!(
            report.recurrence,
            RecurrenceOutcome::NotApplicable { .. }
        ));
    }

    #[test]
    fn synthetic_einstein_curvature_classifies_symmetric() {
        // ρ replaced by -2n·g on the real 5-d structure: parallel, so the
        // pointwise symmetry properties all hold and the verdict set agrees
        // with the Einstein verdict — except the two 1-form conditions,
        // where the non-vanishing requirement admits only α = 0 on an
        // Einstein input (the solve returns OnlyZero; recorded behavior).
        let s = fixtures::example5();
        let conn = s.frame().levi_civita().unwrap();
        let mut curv = s.frame().curvature(&conn);
        let params = s.frame().params().clone();
        curv.ricci = s
            .frame()
            .metric()
            .scale(&crate::Scalar::from_int(&params, -4));
        curv.ricci_operator = curv.ricci.raise(0, s.frame().metric_inv()).unwrap();
        let report = classify(&s, &conn, &curv);
        assert!(report.einstein.holds);
        assert!(report.locally_ricci_symmetric.holds);
        assert!(report.ricci_semi_symmetric.holds);
        assert!(report.globally_phi_symmetric.holds);
        assert!(report.cyclic_parallel.holds);
        assert!(report.codazzi.holds);
        assert_eq!(report.almost_pseudo_ricci_symmetric, OneFormSolve::OnlyZero);
        assert_eq!(
            report.special_weakly_ricci_symmetric,
            OneFormSolve::OnlyZero
        );
        // constants solve to (2n, -1, 1): both recurrence numerators vanish
        // and the expression reduces to 0 = ∇ρ, which holds
        assert_eq!(report.recurrence, RecurrenceOutcome::Verified);
        for (name, consistent) in &report.einstein_equivalences {
            let expected = !matches!(
                *name,
                "almost_pseudo_ricci_symmetric" | "special_weakly_ricci_symmetric"
            );
            assert_eq!(*consistent, expected, "equivalence flag for {name}");
        }
    }

    #[test]
    fn scaling_a_homogeneous_one_form_solution_still_solves() {
        // On a structure with ∇ρ = 0 the system is homogeneous: any
        // rational multiple of a solution satisfies the defining equation.
        let s = fixtures::abelian5();
        let conn = s.frame().levi_civita().unwrap();
        let curv = s.frame().curvature(&conn);
        let nabla_rho = s.frame().covariant_derivative(&conn, &curv.ricci);
        assert!(nabla_rho.is_zero());
        // Substituting any α into the homogeneous equation with ρ = 0 is
        // trivially stable under scaling; the verdict is fixed by the
        // non-vanishing-ρ requirement instead.
        let report = classify(&s, &conn, &curv);
        assert_eq!(
            report.almost_pseudo_ricci_symmetric,
            OneFormSolve::RicciZero
        );
    }
}
