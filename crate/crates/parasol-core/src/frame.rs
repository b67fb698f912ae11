//! Lie-algebra frame geometry for left-invariant metrics.
//!
//! A [`LieFrame`] is a frame e_0, ..., e_{d-1} with structure constants
//! [e_i, e_j] = C^k_{ij} e_k and a constant positive-definite metric
//! g_{ij}. All inner products of frame fields are constant, so the Koszul
//! formula reduces to the three bracket terms and every derivative of a
//! component function vanishes.

use crate::linalg::{congruence_signature, invert_rational_matrix};
use crate::scalar::{ParamSet, Scalar};
use crate::tensor::{multi_indices, FrameTensor, IndexKind};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("dimension must be at least 1")]
    ZeroDim,
    #[error("structure constants are not antisymmetric at (i,j,k)=({0},{1},{2})")]
    NotAntisymmetric(usize, usize, usize),
    #[error("metric entry ({0},{1}) is not a rational constant")]
    MetricNotConstant(usize, usize),
    #[error("metric is not symmetric at ({0},{1})")]
    MetricNotSymmetric(usize, usize),
    #[error("metric is singular")]
    MetricSingular,
    #[error("metric is not positive definite (signature ({0},{1},{2}))")]
    MetricNotPositiveDefinite(usize, usize, usize),
    #[error("Jacobi identity fails at triple ({0},{1},{2})")]
    JacobiFailed(usize, usize, usize),
    #[error("tensor dimension {0} does not match frame dimension {1}")]
    DimMismatch(usize, usize),
}

/// Result of the Jacobi identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub holds: bool,
    /// First violating triple (i, j, k) in lexicographic order.
    pub witness: Option<(usize, usize, usize)>,
}

/// A frame with structure constants and a left-invariant metric.
#[derive(Debug, Clone)]
pub struct LieFrame {
    dim: usize,
    params: Arc<ParamSet>,
    /// C^k_{ij} stored at [i, j, k].
    structure: FrameTensor,
    /// g_{ij}, rational constants.
    metric: FrameTensor,
    /// g^{ij}.
    metric_inv: FrameTensor,
}

impl LieFrame {
    /// Build a frame, validating antisymmetry of the structure constants
    /// and symmetry, constancy and positive-definiteness of the metric.
    /// The Jacobi identity is checked separately by [`LieFrame::check_jacobi`].
    pub fn new(
        dim: usize,
        params: Arc<ParamSet>,
        structure: FrameTensor,
        metric: FrameTensor,
    ) -> Result<Self, FrameError> {
        if dim == 0 {
            return Err(FrameError::ZeroDim);
        }
        if structure.dim() != dim {
            return Err(FrameError::DimMismatch(structure.dim(), dim));
        }
        if metric.dim() != dim {
            return Err(FrameError::DimMismatch(metric.dim(), dim));
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if structure.get(&[i, j, k]) != &-structure.get(&[j, i, k]) {
                        return Err(FrameError::NotAntisymmetric(i, j, k));
                    }
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                if metric.get(&[i, j]).as_rational().is_none() {
                    return Err(FrameError::MetricNotConstant(i, j));
                }
                if metric.get(&[i, j]) != metric.get(&[j, i]) {
                    return Err(FrameError::MetricNotSymmetric(i, j));
                }
            }
        }
        let sig = congruence_signature(&metric).map_err(|_| FrameError::MetricSingular)?;
        if sig != (dim, 0, 0) {
            return Err(FrameError::MetricNotPositiveDefinite(sig.0, sig.1, sig.2));
        }
        let metric_inv = invert_rational_matrix(&metric, IndexKind::Upper)
            .map_err(|_| FrameError::MetricSingular)?;
        Ok(LieFrame {
            dim,
            params,
            structure,
            metric,
            metric_inv,
        })
    }

    /// Convenience constructor from expression-level component tables.
    /// `brackets` lists (i, j, k, coefficient) entries with i < j; the
    /// antisymmetric counterparts are filled in.
    pub fn from_brackets(
        dim: usize,
        params: Arc<ParamSet>,
        brackets: &[(usize, usize, usize, Scalar)],
        metric: FrameTensor,
    ) -> Result<Self, FrameError> {
        let mut c = FrameTensor::zeros(
            dim,
            vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Upper],
            &params,
        );
        for (i, j, k, coeff) in brackets {
            let cur = c.get(&[*i, *j, *k]).clone();
            c.set(&[*i, *j, *k], &cur + coeff);
            let cur = c.get(&[*j, *i, *k]).clone();
            c.set(&[*j, *i, *k], &cur - coeff);
        }
        Self::new(dim, params, c, metric)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        &self.params
    }

    /// C^k_{ij} at [i, j, k].
    pub fn structure(&self) -> &FrameTensor {
        &self.structure
    }

    pub fn metric(&self) -> &FrameTensor {
        &self.metric
    }

    pub fn metric_inv(&self) -> &FrameTensor {
        &self.metric_inv
    }

    /// Coefficients of [e_i, e_j] in the frame basis.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim)
            .map(|k| self.structure.get(&[i, j, k]).clone())
            .collect()
    }

    /// Check the Jacobi identity over all triples.
    pub fn check_jacobi(&self) -> JacobiReport {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    if !self.jacobi_holds_at(i, j, k) {
                        return JacobiReport {
                            holds: false,
                            witness: Some((i, j, k)),
                        };
                    }
                }
            }
        }
        JacobiReport {
            holds: true,
            witness: None,
        }
    }

    fn jacobi_holds_at(&self, i: usize, j: usize, k: usize) -> bool {
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
        for l in 0..self.dim {
            let mut acc = Scalar::zero(&self.params);
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                for m in 0..self.dim {
                    acc = &acc + &(self.structure.get(&[b, c, m]) * self.structure.get(&[a, m, l]));
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }

    /// Levi-Civita connection by the Koszul formula for left-invariant
    /// fields:
    ///
    /// 2 g(∇_{e_i} e_j, e_k) = g([e_i,e_j], e_k) − g([e_j,e_k], e_i)
    ///                         + g([e_k,e_i], e_j)
    ///
    /// Fails if the Jacobi identity does not hold.
    pub fn levi_civita(&self) -> Result<Connection, FrameError> {
        let jacobi = self.check_jacobi();
        if let Some((i, j, k)) = jacobi.witness {
            return Err(FrameError::JacobiFailed(i, j, k));
        }
        let d = self.dim;
        // koszul[i][j][k] = 2 g(∇_{e_i} e_j, e_k)
        let koszul = FrameTensor::from_fn(
            d,
            vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Lower],
            &self.params,
            |idx| {
                let (i, j, k) = (idx[0], idx[1], idx[2]);
                let mut acc = Scalar::zero(&self.params);
                for m in 0..d {
                    acc = &acc + &(self.structure.get(&[i, j, m]) * self.metric.get(&[m, k]));
                    acc = &acc - &(self.structure.get(&[j, k, m]) * self.metric.get(&[m, i]));
                    acc = &acc + &(self.structure.get(&[k, i, m]) * self.metric.get(&[m, j]));
                }
                acc
            },
        );
        let half = crate::scalar::rat(1, 2);
        let gamma = FrameTensor::from_fn(
            d,
            vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Upper],
            &self.params,
            |idx| {
                let (i, j, l) = (idx[0], idx[1], idx[2]);
                let mut acc = Scalar::zero(&self.params);
                for k in 0..d {
                    acc = &acc + &(self.metric_inv.get(&[l, k]) * koszul.get(&[i, j, k]));
                }
                acc.scale_rational(&half)
            },
        );
        Ok(Connection { gamma })
    }

    /// Covariant derivative of a frame tensor with constant components:
    /// the result has one extra leading lower slot for the direction.
    /// Only the connection-coefficient terms of the Leibniz rule survive.
    pub fn covariant_derivative(&self, conn: &Connection, t: &FrameTensor) -> FrameTensor {
        let d = self.dim;
        let rank = t.rank();
        let mut signature = vec![IndexKind::Lower];
        signature.extend_from_slice(t.signature());
        FrameTensor::from_fn(d, signature, &self.params, |idx| {
            let dir = idx[0];
            let inner = &idx[1..];
            let mut acc = Scalar::zero(&self.params);
            for slot in 0..rank {
                for m in 0..d {
                    let mut probe = inner.to_vec();
                    probe[slot] = m;
                    let term = match t.signature()[slot] {
                        // upper slot: + Γ^{a}_{dir m} t^{..m..}
                        IndexKind::Upper => conn.gamma.get(&[dir, m, inner[slot]]) * t.get(&probe),
                        // lower slot: − Γ^{m}_{dir a} t_{..m..}
                        IndexKind::Lower => {
                            -&(conn.gamma.get(&[dir, inner[slot], m]) * t.get(&probe))
                        }
                    };
                    acc = &acc + &term;
                }
            }
            acc
        })
    }

    /// Lie derivative of the metric along a vector field with constant
    /// components: (L_v g)_{ij} = g(∇_{e_i} v, e_j) + g(e_i, ∇_{e_j} v).
    pub fn lie_derivative_metric(&self, conn: &Connection, v: &[Scalar]) -> FrameTensor {
        assert_eq!(v.len(), self.dim, "vector component count");
        let d = self.dim;
        FrameTensor::from_fn(
            d,
            vec![IndexKind::Lower, IndexKind::Lower],
            &self.params,
            |idx| {
                let (i, j) = (idx[0], idx[1]);
                let mut acc = Scalar::zero(&self.params);
                for k in 0..d {
                    for m in 0..d {
                        acc = &acc
                            + &(&(&v[k] * conn.gamma.get(&[i, k, m])) * self.metric.get(&[m, j]));
                        acc = &acc
                            + &(&(&v[k] * conn.gamma.get(&[j, k, m])) * self.metric.get(&[m, i]));
                    }
                }
                acc
            },
        )
    }

    /// Full curvature package for this frame and connection.
    ///
    /// Conventions: R(x,y)z = ∇_x ∇_y z − ∇_y ∇_x z − ∇_{[x,y]} z and
    /// ρ(y,z) = trace of x ↦ R(x,y)z; τ = g^{jk} ρ_{jk}.
    pub fn curvature(&self, conn: &Connection) -> CurvatureData {
        let d = self.dim;
        // riemann[i,j,k,l] = R^l_{ijk}, i.e. R(e_i,e_j)e_k = R^l_{ijk} e_l
        let riemann = FrameTensor::from_fn(
            d,
            vec![
                IndexKind::Lower,
                IndexKind::Lower,
                IndexKind::Lower,
                IndexKind::Upper,
            ],
            &self.params,
            |idx| {
                let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
                let mut acc = Scalar::zero(&self.params);
                for m in 0..d {
                    acc = &acc + &(conn.gamma.get(&[j, k, m]) * conn.gamma.get(&[i, m, l]));
                    acc = &acc - &(conn.gamma.get(&[i, k, m]) * conn.gamma.get(&[j, m, l]));
                    acc = &acc - &(self.structure.get(&[i, j, m]) * conn.gamma.get(&[m, k, l]));
                }
                acc
            },
        );
        let riemann_lowered = riemann
            .lower(3, &self.metric)
            .expect("lowering the value slot");
        let ricci = riemann.contract(0, 3).expect("ricci trace");
        let ricci_operator = ricci.raise(0, &self.metric_inv).expect("ricci operator");
        let tau = ricci_operator
            .contract(0, 1)
            .expect("scalar curvature trace")
            .as_scalar()
            .clone();
        CurvatureData {
            riemann,
            riemann_lowered,
            ricci,
            ricci_operator,
            tau,
        }
    }

    /// Contracted differential consequence of the second Bianchi identity
    /// on left-invariant data: g^{ij} (∇_{e_i} ρ)(e_j, e_k) = 0 for all k
    /// (the scalar curvature is constant, so its differential vanishes).
    pub fn second_bianchi_contracted_check(
        &self,
        conn: &Connection,
        curv: &CurvatureData,
    ) -> BianchiReport {
        let d = self.dim;
        let nabla_rho = self.covariant_derivative(conn, &curv.ricci);
        for k in 0..d {
            let mut acc = Scalar::zero(&self.params);
            for i in 0..d {
                for j in 0..d {
                    acc = &acc + &(self.metric_inv.get(&[i, j]) * nabla_rho.get(&[i, j, k]));
                }
            }
            if !acc.is_zero() {
                return BianchiReport {
                    holds: false,
                    witness: Some(k),
                };
            }
        }
        BianchiReport {
            holds: true,
            witness: None,
        }
    }
}

/// Levi-Civita connection coefficients Γ^k_{ij}, stored at [i, j, k]:
/// ∇_{e_i} e_j = Γ^k_{ij} e_k.
#[derive(Debug, Clone)]
pub struct Connection {
    gamma: FrameTensor,
}

impl Connection {
    pub fn gamma(&self) -> &FrameTensor {
        &self.gamma
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.gamma.get(&[i, j, k])
    }

    /// ∇_{e_i} v for a vector field with constant components.
    pub fn derive_vector(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.gamma.dim();
        let params = self.gamma.params();
        (0..d)
            .map(|l| {
                let mut acc = Scalar::zero(params);
                for (j, vj) in v.iter().enumerate() {
                    acc = &acc + &(vj * self.gamma.get(&[i, j, l]));
                }
                acc
            })
            .collect()
    }
}

/// Riemann tensor, its fully lowered form, the Ricci tensor and operator,
/// and the scalar curvature.
#[derive(Debug, Clone)]
pub struct CurvatureData {
    /// R^l_{ijk} at [i, j, k, l]: R(e_i, e_j)e_k = R^l_{ijk} e_l.
    pub riemann: FrameTensor,
    /// R_{ijkl} = g(R(e_i,e_j)e_k, e_l).
    pub riemann_lowered: FrameTensor,
    /// ρ_{jk} = trace of x ↦ R(x, e_j)e_k.
    pub ricci: FrameTensor,
    /// Q^i_j with ρ(x, y) = g(Qx, y).
    pub ricci_operator: FrameTensor,
    /// τ = g^{jk} ρ_{jk}.
    pub tau: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BianchiReport {
    pub holds: bool,
    pub witness: Option<usize>,
}

/// First index where the frame-torsion identity Γ^k_{ij} − Γ^k_{ji} = C^k_{ij}
/// fails, if any.
pub fn torsion_violation(frame: &LieFrame, conn: &Connection) -> Option<(usize, usize, usize)> {
    let d = frame.dim();
    for idx in multi_indices(d, 3) {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let lhs = conn.gamma.get(&[i, j, k]) - conn.gamma.get(&[j, i, k]);
        if &lhs != frame.structure().get(&[i, j, k]) {
            return Some((i, j, k));
        }
    }
    None
}

/// First index of a nonzero component of ∇g, if any.
pub fn metric_compatibility_violation(frame: &LieFrame, conn: &Connection) -> Option<Vec<usize>> {
    let nabla_g = frame.covariant_derivative(conn, frame.metric());
    nabla_g.first_nonzero().map(|(idx, _)| idx)
}

/// First index where the first Bianchi identity
/// R(x,y)z + R(y,z)x + R(z,x)y = 0 fails, if any.
pub fn first_bianchi_violation(curv: &CurvatureData) -> Option<(usize, usize, usize, usize)> {
    let r = &curv.riemann;
    let d = r.dim();
    for idx in multi_indices(d, 4) {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        let sum = &(r.get(&[i, j, k, l]) + r.get(&[j, k, i, l])) + r.get(&[k, i, j, l]);
        if !sum.is_zero() {
            return Some((i, j, k, l));
        }
    }
    None
}

/// First index where the pair symmetry R_{ijkl} = R_{klij} fails, if any.
pub fn pair_symmetry_violation(curv: &CurvatureData) -> Option<(usize, usize, usize, usize)> {
    let r = &curv.riemann_lowered;
    let d = r.dim();
    for idx in multi_indices(d, 4) {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        if r.get(&[i, j, k, l]) != r.get(&[k, l, i, j]) {
            return Some((i, j, k, l));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ParamSet, Scalar};

    pub(crate) fn identity_metric(dim: usize, params: &Arc<ParamSet>) -> FrameTensor {
        FrameTensor::from_fn(
            dim,
            vec![IndexKind::Lower, IndexKind::Lower],
            params,
            |idx| {
                if idx[0] == idx[1] {
                    Scalar::one(params)
                } else {
                    Scalar::zero(params)
                }
            },
        )
    }

    fn abelian(dim: usize) -> LieFrame {
        let ps = ParamSet::empty();
        let c = FrameTensor::zeros(
            dim,
            vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Upper],
            &ps,
        );
        LieFrame::new(dim, ps.clone(), c, identity_metric(dim, &ps)).unwrap()
    }

    fn so3() -> LieFrame {
        // [e_0,e_1]=e_2, [e_1,e_2]=e_0, [e_2,e_0]=e_1
        let ps = ParamSet::empty();
        let one = Scalar::one(&ps);
        LieFrame::from_brackets(
            3,
            ps.clone(),
            &[
                (0, 1, 2, one.clone()),
                (1, 2, 0, one.clone()),
                (0, 2, 1, -&one),
            ],
            identity_metric(3, &ps),
        )
        .unwrap()
    }

    #[test]
    fn abelian_frame_is_flat() {
        let f = abelian(4);
        assert!(f.check_jacobi().holds);
        let conn = f.levi_civita().unwrap();
        assert!(conn.gamma().is_zero());
        let curv = f.curvature(&conn);
        assert!(curv.riemann.is_zero());
        assert!(curv.ricci.is_zero());
        assert!(curv.tau.is_zero());
    }

    #[test]
    fn so3_satisfies_jacobi() {
        assert!(so3().check_jacobi().holds);
    }

    #[test]
    fn jacobi_failure_reports_first_triple() {
        // [e_0,e_1]=e_2 and [e_1,e_2]=e_1: the cyclic sum over (0,1,2)
        // is [e_0,[e_1,e_2]] = e_2, nonzero.
        let ps = ParamSet::empty();
        let one = Scalar::one(&ps);
        let f = LieFrame::from_brackets(
            3,
            ps.clone(),
            &[(0, 1, 2, one.clone()), (1, 2, 1, one.clone())],
            identity_metric(3, &ps),
        )
        .unwrap();
        let report = f.check_jacobi();
        assert!(!report.holds);
        assert_eq!(report.witness, Some((0, 1, 2)));
        assert_eq!(
            f.levi_civita().unwrap_err(),
            FrameError::JacobiFailed(0, 1, 2)
        );
    }

    #[test]
    fn antisymmetry_is_enforced() {
        let ps = ParamSet::empty();
        let mut c = FrameTensor::zeros(
            2,
            vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Upper],
            &ps,
        );
        c.set(&[0, 1, 0], Scalar::one(&ps));
        // missing the (1,0,0) = -1 counterpart
        assert_eq!(
            LieFrame::new(2, ps.clone(), c, identity_metric(2, &ps)).unwrap_err(),
            FrameError::NotAntisymmetric(0, 1, 0)
        );
    }

    #[test]
    fn non_positive_metric_is_rejected() {
        let ps = ParamSet::empty();
        let c = FrameTensor::zeros(
            2,
            vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Upper],
            &ps,
        );
        let mut g = identity_metric(2, &ps);
        g.set(&[1, 1], Scalar::from_int(&ps, -1));
        assert_eq!(
            LieFrame::new(2, ps, c, g).unwrap_err(),
            FrameError::MetricNotPositiveDefinite(1, 1, 0)
        );
    }

    #[test]
    fn so3_round_metric_curvature() {
        // The bi-invariant metric on so(3) has Γ^k_{ij} = C^k_{ij}/2 and
        // ρ = g/2, τ = 3/2.
        let f = so3();
        let conn = f.levi_civita().unwrap();
        let curv = f.curvature(&conn);
        assert!(torsion_violation(&f, &conn).is_none());
        assert!(metric_compatibility_violation(&f, &conn).is_none());
        assert!(first_bianchi_violation(&curv).is_none());
        assert!(pair_symmetry_violation(&curv).is_none());
        let ps = f.params().clone();
        let half = Scalar::from_rational(&ps, rat(1, 2));
        let expected = f.metric().scale(&half);
        assert_eq!(curv.ricci, expected);
        assert_eq!(curv.tau, Scalar::from_rational(&ps, rat(3, 2)));
    }

    #[test]
    fn covariant_derivative_of_metric_vanishes() {
        let f = so3();
        let conn = f.levi_civita().unwrap();
        assert!(f.covariant_derivative(&conn, f.metric()).is_zero());
    }

    #[test]
    fn lie_derivative_along_zero_vector_is_zero() {
        let f = so3();
        let conn = f.levi_civita().unwrap();
        let zero = vec![Scalar::zero(f.params()); 3];
        assert!(f.lie_derivative_metric(&conn, &zero).is_zero());
    }

    #[test]
    fn bianchi_contracted_check_on_flat_frame() {
        let f = abelian(3);
        let conn = f.levi_civita().unwrap();
        let curv = f.curvature(&conn);
        assert!(f.second_bianchi_contracted_check(&conn, &curv).holds);
    }
}
