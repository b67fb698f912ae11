//! Parallel symmetric (0,2)-tensors and the h-tensor bridge to solitons.

use crate::check::{IdentityCheck, Verdict};
use crate::frame::{Connection, CurvatureData};
use crate::pi::PiStructure;
use crate::scalar::{rat, Scalar};
use crate::soliton::{solve_soliton, Potential, SolitonOutcome};
use crate::tensor::{FrameTensor, TensorError};

/// Report for a candidate parallel symmetric tensor.
#[derive(Debug, Clone)]
pub struct ParallelTensorReport {
    /// ∇h = 0.
    pub parallel: Verdict,
    /// h(R(x,y)ξ, ξ) = 0 diagnostic.
    pub curvature_reeb_identity: Verdict,
    /// h(x, ξ) = h(ξ,ξ) η(x) diagnostic.
    pub reeb_component_identity: Verdict,
    pub h_xi_xi: Scalar,
    /// When parallel: verification that h = h(ξ,ξ)·g, with the constant.
    pub multiple_of_g: Option<Verdict>,
}

/// Check whether a symmetric (0,2)-tensor is parallel, and when it is,
/// that it is the constant multiple h(ξ,ξ)·g of the metric.
pub fn check_parallel_tensor(
    s: &PiStructure,
    conn: &Connection,
    curv: &CurvatureData,
    h: &FrameTensor,
) -> Result<ParallelTensorReport, TensorError> {
    if let Some(_witness) = h.symmetry_violation(0, 1) {
        return Err(TensorError::NotSymmetric(0, 1));
    }
    let d = s.dim();
    let params = s.frame().params();
    let nabla_h = s.frame().covariant_derivative(conn, h);
    let parallel = Verdict::from_violation(nabla_h.first_nonzero().map(|(idx, _)| idx));

    // h(R(x,y)ξ, ξ) = 0
    let mut viol = None;
    'curv: for i in 0..d {
        for j in 0..d {
            let mut acc = Scalar::zero(params);
            for k in 0..d {
                for m in 0..d {
                    for l in 0..d {
                        acc = &acc
                            + &(&(&(curv.riemann.get(&[i, j, k, m]) * s.xi().get(&[k]))
                                * h.get(&[m, l]))
                                * s.xi().get(&[l]));
                    }
                }
            }
            if !acc.is_zero() {
                viol = Some(vec![i, j]);
                break 'curv;
            }
        }
    }
    let curvature_reeb_identity = Verdict::from_violation(viol);

    let h_xi_xi = {
        let mut acc = Scalar::zero(params);
        for a in 0..d {
            for b in 0..d {
                acc = &acc + &(&(s.xi().get(&[a]) * s.xi().get(&[b])) * h.get(&[a, b]));
            }
        }
        acc
    };

    // h(x, ξ) = h(ξ,ξ) η(x)
    let mut viol = None;
    for i in 0..d {
        let mut lhs = Scalar::zero(params);
        for m in 0..d {
            lhs = &lhs + &(h.get(&[i, m]) * s.xi().get(&[m]));
        }
        if lhs != &h_xi_xi * s.eta().get(&[i]) {
            viol = Some(vec![i]);
            break;
        }
    }
    let reeb_component_identity = Verdict::from_violation(viol);

    let multiple_of_g = if parallel.holds {
        let expected = s.frame().metric().scale(&h_xi_xi);
        let diff = h.checked_sub(&expected)?;
        Some(Verdict::from_violation(
            diff.first_nonzero().map(|(idx, _)| idx),
        ))
    } else {
        None
    };

    Ok(ParallelTensorReport {
        parallel,
        curvature_reeb_identity,
        reeb_component_identity,
        h_xi_xi,
        multiple_of_g,
    })
}

/// Report for h = ½ L_ξ g + ρ + μ g̃ + ν η⊗η.
#[derive(Debug, Clone)]
pub struct HTensorReport {
    pub h: FrameTensor,
    pub diagnostics: ParallelTensorReport,
    /// λ = −h(ξ, ξ).
    pub lambda: Scalar,
    /// λ = 2n − μ − ν.
    pub lambda_relation: IdentityCheck,
    /// ρ = −½ L_ξ g − λ g − μ g̃ − ν η⊗η with the constants above,
    /// equivalently h = −λ g.
    pub soliton_equation: Verdict,
    /// ∇h = 0 holds precisely when the soliton equation does.
    pub equivalence: IdentityCheck,
    /// The independent soliton solve agrees when the equation holds.
    pub solver_cross_check: Option<IdentityCheck>,
}

/// Build the h-tensor for the given (μ, ν) and verify the equivalence
/// between its parallelism and the soliton equation with λ = −h(ξ,ξ).
pub fn build_h_and_check(
    s: &PiStructure,
    conn: &Connection,
    curv: &CurvatureData,
    mu: &Scalar,
    nu: &Scalar,
) -> Result<HTensorReport, TensorError> {
    let params = s.frame().params();
    let half = Scalar::from_rational(params, rat(1, 2));
    let lie_half = s
        .frame()
        .lie_derivative_metric(conn, &s.xi_components())
        .scale(&half);
    let g_tilde = s
        .associated_metric()
        .map_err(|_| TensorError::BadMetric)?
        .tensor;
    let ee = s.eta().tensor_product(s.eta())?;
    let h = lie_half
        .checked_add(&curv.ricci)?
        .checked_add(&g_tilde.scale(mu))?
        .checked_add(&ee.scale(nu))?;

    let diagnostics = check_parallel_tensor(s, conn, curv, &h)?;
    let lambda = -&diagnostics.h_xi_xi;
    let two_n = Scalar::from_int(params, 2 * s.n() as i64);
    let lambda_relation = IdentityCheck::flag(
        "lambda_is_2n_minus_mu_minus_nu",
        lambda == &(&two_n - mu) - nu,
    );

    // h = −λ g componentwise.
    let diff = h.checked_sub(&s.frame().metric().scale(&lambda).negate())?;
    let soliton_equation = Verdict::from_violation(diff.first_nonzero().map(|(idx, _)| idx));

    let equivalence = IdentityCheck::flag(
        "parallel_iff_soliton",
        diagnostics.parallel.holds == soliton_equation.holds,
    );

    let solver_cross_check = if soliton_equation.holds {
        let sol = solve_soliton(s, conn, curv, Potential::Reeb);
        let ok = match &sol.outcome {
            SolitonOutcome::Fit {
                lambda: ls,
                mu: ms,
                nu: ns,
                ..
            } => ls == &lambda && ms == mu && ns == nu,
            SolitonOutcome::NoFit { .. } => false,
        };
        Some(IdentityCheck::flag("independent_soliton_solve_agrees", ok))
    } else {
        None
    };

    Ok(HTensorReport {
        h,
        diagnostics,
        lambda,
        lambda_relation,
        soliton_equation,
        equivalence,
        solver_cross_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn metric_multiple_is_parallel() {
        let s = fixtures::example5();
        let conn = s.frame().levi_civita().unwrap();
        let curv = s.frame().curvature(&conn);
        let params = s.frame().params().clone();
        let h = s.frame().metric().scale(&Scalar::from_int(&params, 3));
        let report = check_parallel_tensor(&s, &conn, &curv, &h).unwrap();
        assert!(report.parallel.holds);
        assert_eq!(report.h_xi_xi, Scalar::from_int(&params, 3));
        assert!(report.multiple_of_g.unwrap().holds);
        assert!(report.curvature_reeb_identity.holds);
        assert!(report.reeb_component_identity.holds);
    }

    #[test]
    fn zero_tensor_is_parallel_with_constant_zero() {
        let s = fixtures::example5();
        let conn = s.frame().levi_civita().unwrap();
        let curv = s.frame().curvature(&conn);
        let h = s.frame().metric().scale(&Scalar::zero(s.frame().params()));
        let report = check_parallel_tensor(&s, &conn, &curv, &h).unwrap();
        assert!(report.parallel.holds);
        assert!(report.h_xi_xi.is_zero());
        assert!(report.multiple_of_g.unwrap().holds);
    }

    #[test]
    fn eta_outer_eta_is_not_parallel() {
        // (∇_{e_1}(η⊗η))(e_3, e_0) = g(e_1, φ e_3) = 1 on the 5-d example.
        let s = fixtures::example5();
        let conn = s.frame().levi_civita().unwrap();
        let curv = s.frame().curvature(&conn);
        let ee = s.eta().tensor_product(s.eta()).unwrap();
        let nabla = s.frame().covariant_derivative(&conn, &ee);
        assert_eq!(nabla.get(&[1, 3, 0]), &Scalar::one(s.frame().params()));
        let report = check_parallel_tensor(&s, &conn, &curv, &ee).unwrap();
        assert!(!report.parallel.holds);
    }

    #[test]
    fn non_symmetric_tensor_is_rejected() {
        let s = fixtures::example5();
        let conn = s.frame().levi_civita().unwrap();
        let curv = s.frame().curvature(&conn);
        let params = s.frame().params().clone();
        let mut h = s.frame().metric().clone();
        h.set(&[0, 1], Scalar::one(&params));
        assert_eq!(
            check_parallel_tensor(&s, &conn, &curv, &h).unwrap_err(),
            TensorError::NotSymmetric(0, 1)
        );
    }
}
