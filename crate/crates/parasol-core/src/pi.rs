//! Almost paracontact almost paracomplex Riemannian structures.
//!
//! A [`PiStructure`] bundles a (2n+1)-dimensional [`LieFrame`] with a
//! (1,1)-tensor φ, a Reeb vector ξ and its dual 1-form η. The structure
//! axioms, the associated metric, and the para-Sasaki-like condition are
//! verified componentwise over exact scalars; nothing is assumed.

use crate::check::IdentityCheck;
use crate::frame::{Connection, CurvatureData, FrameError, LieFrame};
use crate::linalg::congruence_signature;
use crate::scalar::Scalar;
use crate::tensor::{FrameTensor, IndexKind, TensorError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PiError {
    #[error("dimension {0} is not odd (need 2n+1)")]
    EvenDim(usize),
    #[error("phi must be a (1,1)-tensor of rational constants")]
    BadPhi,
    #[error("xi must be a constant vector of dimension {0}")]
    BadXi(usize),
    #[error("eta must be a constant covector of dimension {0}")]
    BadEta(usize),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Axiom verification report; one entry per structure identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<IdentityCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn entry(&self, name: &str) -> Option<&IdentityCheck> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Result of the para-Sasaki-like test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParaSasakiReport {
    pub holds: bool,
    /// First pair (i, j) where (∇_{e_i}φ)e_j deviates from the defining
    /// combination, in lexicographic order.
    pub witness: Option<(usize, usize)>,
}

/// The associated metric together with its symmetry status and exact
/// signature (positive, negative, zero inertia).
#[derive(Debug, Clone)]
pub struct AssociatedMetric {
    pub tensor: FrameTensor,
    pub symmetric: bool,
    pub signature: (usize, usize, usize),
}

/// A Π-structure over a Lie frame.
#[derive(Debug, Clone)]
pub struct PiStructure {
    frame: LieFrame,
    /// φ^i_j at [i, j].
    phi: FrameTensor,
    /// ξ components.
    xi: FrameTensor,
    /// η components.
    eta: FrameTensor,
    n: usize,
}

impl PiStructure {
    pub fn new(
        frame: LieFrame,
        phi: FrameTensor,
        xi: FrameTensor,
        eta: FrameTensor,
    ) -> Result<Self, PiError> {
        let d = frame.dim();
        if d.is_multiple_of(2) {
            return Err(PiError::EvenDim(d));
        }
        if phi.dim() != d
            || phi.rank() != 2
            || phi
                .indices()
                .any(|idx| phi.get(&idx).as_rational().is_none())
        {
            return Err(PiError::BadPhi);
        }
        if xi.dim() != d
            || xi.rank() != 1
            || xi.indices().any(|idx| xi.get(&idx).as_rational().is_none())
        {
            return Err(PiError::BadXi(d));
        }
        if eta.dim() != d
            || eta.rank() != 1
            || eta
                .indices()
                .any(|idx| eta.get(&idx).as_rational().is_none())
        {
            return Err(PiError::BadEta(d));
        }
        Ok(PiStructure {
            n: (d - 1) / 2,
            frame,
            phi,
            xi,
            eta,
        })
    }

    pub fn frame(&self) -> &LieFrame {
        &self.frame
    }

    pub fn phi(&self) -> &FrameTensor {
        &self.phi
    }

    pub fn xi(&self) -> &FrameTensor {
        &self.xi
    }

    pub fn xi_components(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.xi.get(&[i]).clone()).collect()
    }

    pub fn eta(&self) -> &FrameTensor {
        &self.eta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    /// φ applied to e_j, as the component vector (φ e_j)^i.
    fn phi_column(&self, j: usize) -> Vec<Scalar> {
        (0..self.dim())
            .map(|i| self.phi.get(&[i, j]).clone())
            .collect()
    }

    /// η(v) for a component vector v.
    fn eta_of(&self, v: &[Scalar]) -> Scalar {
        let params = self.frame.params();
        let mut acc = Scalar::zero(params);
        for (i, vi) in v.iter().enumerate() {
            acc = &acc + &(self.eta.get(&[i]) * vi);
        }
        acc
    }

    /// g(u, v) for component vectors u, v.
    fn g_of(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let params = self.frame.params();
        let g = self.frame.metric();
        let mut acc = Scalar::zero(params);
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                acc = &acc + &(&(ui * vj) * g.get(&[i, j]));
            }
        }
        acc
    }

    /// Verify the defining identities of the structure. The connection is
    /// needed only for η(∇_x ξ) = 0; pass `None` to skip that entry.
    pub fn check_axioms(&self, conn: Option<&Connection>) -> AxiomReport {
        let d = self.dim();
        let params = self.frame.params();
        let g = self.frame.metric();
        let mut entries = Vec::new();

        // φ ξ = 0
        let mut viol = None;
        'phixi: for i in 0..d {
            let mut acc = Scalar::zero(params);
            for j in 0..d {
                acc = &acc + &(self.phi.get(&[i, j]) * self.xi.get(&[j]));
            }
            if !acc.is_zero() {
                viol = Some(vec![i]);
                break 'phixi;
            }
        }
        entries.push(IdentityCheck::from_violation("phi_xi_zero", viol));

        // φ² = I − η ⊗ ξ
        let mut viol = None;
        'phisq: for i in 0..d {
            for j in 0..d {
                let mut acc = Scalar::zero(params);
                for m in 0..d {
                    acc = &acc + &(self.phi.get(&[i, m]) * self.phi.get(&[m, j]));
                }
                let ident = if i == j {
                    Scalar::one(params)
                } else {
                    Scalar::zero(params)
                };
                let expected = &ident - &(self.xi.get(&[i]) * self.eta.get(&[j]));
                if acc != expected {
                    viol = Some(vec![i, j]);
                    break 'phisq;
                }
            }
        }
        entries.push(IdentityCheck::from_violation("phi_squared", viol));

        // η ∘ φ = 0
        let mut viol = None;
        for j in 0..d {
            let mut acc = Scalar::zero(params);
            for i in 0..d {
                acc = &acc + &(self.eta.get(&[i]) * self.phi.get(&[i, j]));
            }
            if !acc.is_zero() {
                viol = Some(vec![j]);
                break;
            }
        }
        entries.push(IdentityCheck::from_violation("eta_phi_zero", viol));

        // η(ξ) = 1
        let eta_xi = self.eta_of(&self.xi_components());
        entries.push(IdentityCheck {
            name: "eta_xi_one",
            holds: eta_xi == Scalar::one(params),
            witness: None,
        });

        // tr φ = 0
        let trace = self.phi.contract(0, 1).expect("phi trace");
        entries.push(IdentityCheck {
            name: "trace_phi_zero",
            holds: trace.as_scalar().is_zero(),
            witness: None,
        });

        // g(φx, φy) = g(x, y) − η(x) η(y)
        let mut viol = None;
        'compat: for i in 0..d {
            for j in 0..d {
                let lhs = self.g_of(&self.phi_column(i), &self.phi_column(j));
                let rhs = g.get(&[i, j]) - &(self.eta.get(&[i]) * self.eta.get(&[j]));
                if lhs != rhs {
                    viol = Some(vec![i, j]);
                    break 'compat;
                }
            }
        }
        entries.push(IdentityCheck::from_violation("phi_compatibility", viol));

        // g(φx, y) = g(x, φy)
        let gphi =
            FrameTensor::from_fn(d, vec![IndexKind::Lower, IndexKind::Lower], params, |idx| {
                let mut acc = Scalar::zero(params);
                for m in 0..d {
                    acc = &acc + &(g.get(&[idx[0], m]) * self.phi.get(&[m, idx[1]]));
                }
                acc
            });
        entries.push(IdentityCheck::from_violation(
            "phi_self_adjoint",
            gphi.symmetry_violation(0, 1),
        ));

        // g(x, ξ) = η(x)
        let mut viol = None;
        for i in 0..d {
            let mut acc = Scalar::zero(params);
            for m in 0..d {
                acc = &acc + &(g.get(&[i, m]) * self.xi.get(&[m]));
            }
            if &acc != self.eta.get(&[i]) {
                viol = Some(vec![i]);
                break;
            }
        }
        entries.push(IdentityCheck::from_violation("g_xi_is_eta", viol));

        // g(ξ, ξ) = 1
        let xi = self.xi_components();
        entries.push(IdentityCheck {
            name: "g_xi_xi_one",
            holds: self.g_of(&xi, &xi) == Scalar::one(params),
            witness: None,
        });

        // η(∇_x ξ) = 0, available once the connection is computed
        if let Some(conn) = conn {
            let mut viol = None;
            for i in 0..d {
                let nabla_xi = conn.derive_vector(i, &xi);
                if !self.eta_of(&nabla_xi).is_zero() {
                    viol = Some(vec![i]);
                    break;
                }
            }
            entries.push(IdentityCheck::from_violation("eta_nabla_xi_zero", viol));
        }

        AxiomReport { entries }
    }

    /// The associated metric g̃(x,y) = g(x, φy) + η(x) η(y), with its exact
    /// signature computed by congruence diagonalization over the rationals.
    pub fn associated_metric(&self) -> Result<AssociatedMetric, PiError> {
        let d = self.dim();
        let params = self.frame.params();
        let g = self.frame.metric();
        let tensor =
            FrameTensor::from_fn(d, vec![IndexKind::Lower, IndexKind::Lower], params, |idx| {
                let (i, j) = (idx[0], idx[1]);
                let mut acc = Scalar::zero(params);
                for m in 0..d {
                    acc = &acc + &(g.get(&[i, m]) * self.phi.get(&[m, j]));
                }
                &acc + &(self.eta.get(&[i]) * self.eta.get(&[j]))
            });
        let symmetric = tensor.symmetry_violation(0, 1).is_none();
        let signature = congruence_signature(&tensor)?;
        Ok(AssociatedMetric {
            tensor,
            symmetric,
            signature,
        })
    }

    /// Test the defining condition of the para-Sasaki-like class:
    ///
    /// (∇_x φ)y = −g(x,y) ξ − η(y) x + 2 η(x) η(y) ξ
    pub fn is_para_sasaki(&self, conn: &Connection) -> ParaSasakiReport {
        let d = self.dim();
        let params = self.frame.params();
        let g = self.frame.metric();
        let nabla_phi = self.frame.covariant_derivative(conn, &self.phi);
        for i in 0..d {
            for j in 0..d {
                for a in 0..d {
                    // component a of (∇_{e_i}φ)e_j
                    let lhs = nabla_phi.get(&[i, a, j]);
                    let mut rhs = -&(g.get(&[i, j]) * self.xi.get(&[a]));
                    if a == i {
                        rhs = &rhs - self.eta.get(&[j]);
                    }
                    let two = Scalar::from_int(params, 2);
                    rhs = &rhs
                        + &(&(&two * &(self.eta.get(&[i]) * self.eta.get(&[j])))
                            * self.xi.get(&[a]));
                    if lhs != &rhs {
                        return ParaSasakiReport {
                            holds: false,
                            witness: Some((i, j)),
                        };
                    }
                }
            }
        }
        ParaSasakiReport {
            holds: true,
            witness: None,
        }
    }

    /// Scalar curvature with respect to the associated metric, computed by
    /// the contraction τ̃ = g^{ij} ρ(e_i, φ e_j) + ρ(ξ, ξ). No second
    /// Levi-Civita connection is constructed.
    pub fn tau_tilde(&self, curv: &CurvatureData) -> Scalar {
        let d = self.dim();
        let params = self.frame.params();
        let ginv = self.frame.metric_inv();
        let mut acc = Scalar::zero(params);
        for i in 0..d {
            for j in 0..d {
                for m in 0..d {
                    acc = &acc
                        + &(&(ginv.get(&[i, j]) * curv.ricci.get(&[i, m])) * self.phi.get(&[m, j]));
                }
            }
        }
        &acc + &self.rho_xi_xi(curv)
    }

    /// ρ(ξ, ξ).
    pub fn rho_xi_xi(&self, curv: &CurvatureData) -> Scalar {
        let d = self.dim();
        let params = self.frame.params();
        let mut acc = Scalar::zero(params);
        for a in 0..d {
            for b in 0..d {
                acc = &acc + &(&(self.xi.get(&[a]) * self.xi.get(&[b])) * curv.ricci.get(&[a, b]));
            }
        }
        acc
    }

    /// The six identities that characterize curvature around the Reeb
    /// direction on para-Sasaki-like structures, each verified exactly:
    ///
    /// 1. ∇_x ξ = φx
    /// 2. (∇_x η)(y) = g(x, φy)
    /// 3. R(x,y)ξ = −η(y) x + η(x) y
    /// 4. R(ξ,y)ξ = φ²y
    /// 5. ρ(x, ξ) = −2n η(x)
    /// 6. ρ(ξ, ξ) = −2n
    pub fn reeb_curvature_identities(
        &self,
        conn: &Connection,
        curv: &CurvatureData,
    ) -> Vec<IdentityCheck> {
        let d = self.dim();
        let params = self.frame.params();
        let g = self.frame.metric();
        let xi = self.xi_components();
        let minus_2n = Scalar::from_int(params, -(2 * self.n as i64));
        let mut out = Vec::new();

        let mut viol = None;
        'one: for i in 0..d {
            let nabla_xi = conn.derive_vector(i, &xi);
            for (a, got) in nabla_xi.iter().enumerate() {
                if got != self.phi.get(&[a, i]) {
                    viol = Some(vec![i, a]);
                    break 'one;
                }
            }
        }
        out.push(IdentityCheck::from_violation("nabla_xi_is_phi", viol));

        let nabla_eta = self.frame.covariant_derivative(conn, &self.eta);
        let mut viol = None;
        'two: for i in 0..d {
            for j in 0..d {
                let mut rhs = Scalar::zero(params);
                for m in 0..d {
                    rhs = &rhs + &(g.get(&[i, m]) * self.phi.get(&[m, j]));
                }
                if nabla_eta.get(&[i, j]) != &rhs {
                    viol = Some(vec![i, j]);
                    break 'two;
                }
            }
        }
        out.push(IdentityCheck::from_violation("nabla_eta_is_g_phi", viol));

        let mut viol = None;
        'three: for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    let mut lhs = Scalar::zero(params);
                    for k in 0..d {
                        lhs = &lhs + &(curv.riemann.get(&[i, j, k, l]) * self.xi.get(&[k]));
                    }
                    let mut rhs = Scalar::zero(params);
                    if l == i {
                        rhs = &rhs - self.eta.get(&[j]);
                    }
                    if l == j {
                        rhs = &rhs + self.eta.get(&[i]);
                    }
                    if lhs != rhs {
                        viol = Some(vec![i, j, l]);
                        break 'three;
                    }
                }
            }
        }
        out.push(IdentityCheck::from_violation("curvature_reeb", viol));

        let mut viol = None;
        'four: for j in 0..d {
            for l in 0..d {
                let mut lhs = Scalar::zero(params);
                for i in 0..d {
                    for k in 0..d {
                        lhs = &lhs
                            + &(&(self.xi.get(&[i]) * self.xi.get(&[k]))
                                * curv.riemann.get(&[i, j, k, l]));
                    }
                }
                let mut rhs = Scalar::zero(params);
                for m in 0..d {
                    rhs = &rhs + &(self.phi.get(&[l, m]) * self.phi.get(&[m, j]));
                }
                if lhs != rhs {
                    viol = Some(vec![j, l]);
                    break 'four;
                }
            }
        }
        out.push(IdentityCheck::from_violation(
            "curvature_reeb_squared",
            viol,
        ));

        let mut viol = None;
        for i in 0..d {
            let mut lhs = Scalar::zero(params);
            for k in 0..d {
                lhs = &lhs + &(curv.ricci.get(&[i, k]) * self.xi.get(&[k]));
            }
            if lhs != &minus_2n * self.eta.get(&[i]) {
                viol = Some(vec![i]);
                break;
            }
        }
        out.push(IdentityCheck::from_violation("ricci_reeb", viol));

        out.push(IdentityCheck {
            name: "ricci_xi_xi",
            holds: self.rho_xi_xi(curv) == minus_2n,
            witness: None,
        });

        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::{ParamSet, Scalar};
    use crate::tensor::FrameTensor;

    #[test]
    fn degenerate_dim_one_structure_passes() {
        // d = 1, n = 0: φ = 0, ξ = e_0, η = e^0.
        let ps = ParamSet::empty();
        let c = FrameTensor::zeros(
            1,
            vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Upper],
            &ps,
        );
        let mut g = FrameTensor::zeros(1, vec![IndexKind::Lower, IndexKind::Lower], &ps);
        g.set(&[0, 0], Scalar::one(&ps));
        let frame = LieFrame::new(1, ps.clone(), c, g).unwrap();
        let phi = FrameTensor::zeros(1, vec![IndexKind::Upper, IndexKind::Lower], &ps);
        let mut xi = FrameTensor::zeros(1, vec![IndexKind::Upper], &ps);
        xi.set(&[0], Scalar::one(&ps));
        let mut eta = FrameTensor::zeros(1, vec![IndexKind::Lower], &ps);
        eta.set(&[0], Scalar::one(&ps));
        let s = PiStructure::new(frame, phi, xi, eta).unwrap();
        let report = s.check_axioms(None);
        assert!(report.entry("phi_squared").unwrap().holds);
        assert!(report.entry("trace_phi_zero").unwrap().holds);
        assert!(report.all_pass());
        let am = s.associated_metric().unwrap();
        assert_eq!(am.signature, (1, 0, 0));
    }

    #[test]
    fn even_dimension_is_rejected() {
        let ps = ParamSet::empty();
        let c = FrameTensor::zeros(
            2,
            vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Upper],
            &ps,
        );
        let g = FrameTensor::from_fn(2, vec![IndexKind::Lower, IndexKind::Lower], &ps, |idx| {
            if idx[0] == idx[1] {
                Scalar::one(&ps)
            } else {
                Scalar::zero(&ps)
            }
        });
        let frame = LieFrame::new(2, ps.clone(), c, g).unwrap();
        let phi = FrameTensor::zeros(2, vec![IndexKind::Upper, IndexKind::Lower], &ps);
        let xi = FrameTensor::zeros(2, vec![IndexKind::Upper], &ps);
        let eta = FrameTensor::zeros(2, vec![IndexKind::Lower], &ps);
        assert!(matches!(
            PiStructure::new(frame, phi, xi, eta),
            Err(PiError::EvenDim(2))
        ));
    }

    #[test]
    fn flipped_metric_entry_fails_compatibility_with_witness() {
        let s = fixtures::example5_with_metric_entry_1_1(2);
        let report = s.check_axioms(None);
        let compat = report.entry("phi_compatibility").unwrap();
        assert!(!compat.holds);
        assert_eq!(compat.witness, Some(vec![1, 1]));
    }
}
