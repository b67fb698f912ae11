//! Dense multi-index tensors of exact scalars over a fixed frame.
//!
//! Components are stored row-major; slot 0 is the leftmost index. Index 0
//! of the frame is the Reeb direction by convention of the input format.

use crate::scalar::{ParamSet, Scalar};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Variance of a tensor slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexKind {
    Lower,
    Upper,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("component count {got} does not match dim^rank = {expected}")]
    ComponentCount { got: usize, expected: usize },
    #[error("tensor dimensions differ: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("tensor signatures differ")]
    SignatureMismatch,
    #[error("slot {0} out of range for rank {1}")]
    SlotOutOfRange(usize, usize),
    #[error("contraction needs one upper and one lower slot")]
    ContractionKind,
    #[error("slot has the wrong variance for this operation")]
    WrongKind,
    #[error("expected a rank-2 metric with matching dimension")]
    BadMetric,
    #[error("tensor is not symmetric in slots {0} and {1}")]
    NotSymmetric(usize, usize),
}

/// Dense tensor with an explicit covariant/contravariant signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameTensor {
    dim: usize,
    signature: Vec<IndexKind>,
    params: Arc<ParamSet>,
    components: Vec<Scalar>,
}

impl FrameTensor {
    pub fn new(
        dim: usize,
        signature: Vec<IndexKind>,
        params: Arc<ParamSet>,
        components: Vec<Scalar>,
    ) -> Result<Self, TensorError> {
        let expected = dim.pow(signature.len() as u32);
        if components.len() != expected {
            return Err(TensorError::ComponentCount {
                got: components.len(),
                expected,
            });
        }
        Ok(FrameTensor {
            dim,
            signature,
            params,
            components,
        })
    }

    pub fn zeros(dim: usize, signature: Vec<IndexKind>, params: &Arc<ParamSet>) -> Self {
        let len = dim.pow(signature.len() as u32);
        FrameTensor {
            dim,
            signature,
            params: params.clone(),
            components: vec![Scalar::zero(params); len],
        }
    }

    /// Rank-0 tensor holding a single scalar.
    pub fn from_scalar(dim: usize, s: Scalar) -> Self {
        FrameTensor {
            dim,
            signature: Vec::new(),
            params: s.params().clone(),
            components: vec![s],
        }
    }

    pub fn from_fn(
        dim: usize,
        signature: Vec<IndexKind>,
        params: &Arc<ParamSet>,
        mut f: impl FnMut(&[usize]) -> Scalar,
    ) -> Self {
        let rank = signature.len();
        let len = dim.pow(rank as u32);
        let mut components = Vec::with_capacity(len);
        for idx in multi_indices(dim, rank) {
            components.push(f(&idx));
        }
        debug_assert_eq!(components.len(), len);
        FrameTensor {
            dim,
            signature,
            params: params.clone(),
            components,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.signature.len()
    }

    pub fn signature(&self) -> &[IndexKind] {
        &self.signature
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        &self.params
    }

    fn lin(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank());
        let mut lin = 0;
        for &i in idx {
            debug_assert!(i < self.dim);
            lin = lin * self.dim + i;
        }
        lin
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.components[self.lin(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Scalar) {
        let lin = self.lin(idx);
        self.components[lin] = value;
    }

    /// The single component of a rank-0 tensor.
    pub fn as_scalar(&self) -> &Scalar {
        assert_eq!(self.rank(), 0, "as_scalar on a tensor of positive rank");
        &self.components[0]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Scalar::is_zero)
    }

    /// First nonzero component in lexicographic index order.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &Scalar)> {
        for (lin, c) in self.components.iter().enumerate() {
            if !c.is_zero() {
                return Some((self.unlin(lin), c));
            }
        }
        None
    }

    /// All nonzero components in lexicographic index order.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, &Scalar)> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(lin, c)| (self.unlin(lin), c))
            .collect()
    }

    fn unlin(&self, mut lin: usize) -> Vec<usize> {
        let rank = self.rank();
        let mut idx = vec![0; rank];
        for slot in (0..rank).rev() {
            idx[slot] = lin % self.dim;
            lin /= self.dim;
        }
        idx
    }

    pub fn checked_add(&self, other: &FrameTensor) -> Result<FrameTensor, TensorError> {
        if self.dim != other.dim {
            return Err(TensorError::DimMismatch(self.dim, other.dim));
        }
        if self.signature != other.signature {
            return Err(TensorError::SignatureMismatch);
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FrameTensor {
            dim: self.dim,
            signature: self.signature.clone(),
            params: self.params.clone(),
            components,
        })
    }

    pub fn checked_sub(&self, other: &FrameTensor) -> Result<FrameTensor, TensorError> {
        self.checked_add(&other.negate())
    }

    pub fn negate(&self) -> FrameTensor {
        self.map(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> FrameTensor {
        self.map(|c| c * s)
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> FrameTensor {
        FrameTensor {
            dim: self.dim,
            signature: self.signature.clone(),
            params: self.params.clone(),
            components: self.components.iter().map(f).collect(),
        }
    }

    /// Outer product; the right factor's slots follow the left's.
    pub fn tensor_product(&self, other: &FrameTensor) -> Result<FrameTensor, TensorError> {
        if self.dim != other.dim {
            return Err(TensorError::DimMismatch(self.dim, other.dim));
        }
        let mut signature = self.signature.clone();
        signature.extend_from_slice(&other.signature);
        let mut components = Vec::with_capacity(self.components.len() * other.components.len());
        for a in &self.components {
            for b in &other.components {
                components.push(a * b);
            }
        }
        Ok(FrameTensor {
            dim: self.dim,
            signature,
            params: self.params.clone(),
            components,
        })
    }

    /// Trace over one upper and one lower slot.
    pub fn contract(&self, slot_a: usize, slot_b: usize) -> Result<FrameTensor, TensorError> {
        let rank = self.rank();
        for s in [slot_a, slot_b] {
            if s >= rank {
                return Err(TensorError::SlotOutOfRange(s, rank));
            }
        }
        if slot_a == slot_b {
            return Err(TensorError::ContractionKind);
        }
        if self.signature[slot_a] == self.signature[slot_b] {
            return Err(TensorError::ContractionKind);
        }
        let mut signature = Vec::with_capacity(rank - 2);
        for (s, k) in self.signature.iter().enumerate() {
            if s != slot_a && s != slot_b {
                signature.push(*k);
            }
        }
        let out = FrameTensor::from_fn(self.dim, signature, &self.params, |idx| {
            let mut full = vec![0usize; rank];
            let mut it = idx.iter();
            for s in 0..rank {
                if s != slot_a && s != slot_b {
                    full[s] = *it.next().unwrap();
                }
            }
            let mut acc = Scalar::zero(&self.params);
            for m in 0..self.dim {
                full[slot_a] = m;
                full[slot_b] = m;
                acc = &acc + self.get(&full);
            }
            acc
        });
        Ok(out)
    }

    /// Flip a lower slot to upper by contracting with an inverse metric.
    pub fn raise(&self, slot: usize, g_inv: &FrameTensor) -> Result<FrameTensor, TensorError> {
        self.flip(slot, g_inv, IndexKind::Lower, IndexKind::Upper)
    }

    /// Flip an upper slot to lower by contracting with a metric.
    pub fn lower(&self, slot: usize, g: &FrameTensor) -> Result<FrameTensor, TensorError> {
        self.flip(slot, g, IndexKind::Upper, IndexKind::Lower)
    }

    fn flip(
        &self,
        slot: usize,
        metric: &FrameTensor,
        from: IndexKind,
        to: IndexKind,
    ) -> Result<FrameTensor, TensorError> {
        if slot >= self.rank() {
            return Err(TensorError::SlotOutOfRange(slot, self.rank()));
        }
        if self.signature[slot] != from {
            return Err(TensorError::WrongKind);
        }
        if metric.rank() != 2 || metric.dim != self.dim {
            return Err(TensorError::BadMetric);
        }
        let mut signature = self.signature.clone();
        signature[slot] = to;
        let out = FrameTensor::from_fn(self.dim, signature, &self.params, |idx| {
            let mut full = idx.to_vec();
            let mut acc = Scalar::zero(&self.params);
            for m in 0..self.dim {
                full[slot] = m;
                acc = &acc + &(metric.get(&[idx[slot], m]) * self.get(&full));
            }
            acc
        });
        Ok(out)
    }

    /// Symmetrize over two slots of equal kind:
    /// t ↦ (t + t with the slots exchanged) / 2.
    pub fn symmetrize(&self, slot_a: usize, slot_b: usize) -> Result<FrameTensor, TensorError> {
        let rank = self.rank();
        for s in [slot_a, slot_b] {
            if s >= rank {
                return Err(TensorError::SlotOutOfRange(s, rank));
            }
        }
        if self.signature[slot_a] != self.signature[slot_b] {
            return Err(TensorError::WrongKind);
        }
        let half = crate::scalar::rat(1, 2);
        let out = FrameTensor::from_fn(self.dim, self.signature.clone(), &self.params, |idx| {
            let mut swapped = idx.to_vec();
            swapped.swap(slot_a, slot_b);
            (self.get(idx) + self.get(&swapped)).scale_rational(&half)
        });
        Ok(out)
    }

    /// First index tuple where exchanging `slot_a` and `slot_b` changes the
    /// component, if any.
    pub fn symmetry_violation(&self, slot_a: usize, slot_b: usize) -> Option<Vec<usize>> {
        for idx in multi_indices(self.dim, self.rank()) {
            let mut swapped = idx.clone();
            swapped.swap(slot_a, slot_b);
            if self.get(&idx) != self.get(&swapped) {
                return Some(idx);
            }
        }
        None
    }

    /// First index tuple where the component is not the negative of the
    /// slot-exchanged component, if any.
    pub fn antisymmetry_violation(&self, slot_a: usize, slot_b: usize) -> Option<Vec<usize>> {
        for idx in multi_indices(self.dim, self.rank()) {
            let mut swapped = idx.clone();
            swapped.swap(slot_a, slot_b);
            if self.get(&idx) != &-self.get(&swapped) {
                return Some(idx);
            }
        }
        None
    }

    pub fn indices(&self) -> MultiIndices {
        multi_indices(self.dim, self.rank())
    }
}

impl fmt::Display for FrameTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 0 {
            return write!(f, "{}", self.as_scalar());
        }
        let nz = self.nonzero();
        if nz.is_empty() {
            return write!(f, "0");
        }
        for (i, (idx, c)) in nz.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let idx_str: Vec<String> = idx.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}] = {}", idx_str.join(","), c)?;
        }
        Ok(())
    }
}

/// Iterator over all multi-indices of the given dimension and rank in
/// lexicographic order.
pub fn multi_indices(dim: usize, rank: usize) -> MultiIndices {
    MultiIndices {
        dim,
        rank,
        next: Some(vec![0; rank]),
    }
}

pub struct MultiIndices {
    dim: usize,
    rank: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for MultiIndices {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.dim == 0 && self.rank > 0 {
            return None;
        }
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut slot = self.rank;
        loop {
            if slot == 0 {
                self.next = None;
                break;
            }
            slot -= 1;
            succ[slot] += 1;
            if succ[slot] < self.dim {
                self.next = Some(succ);
                break;
            }
            succ[slot] = 0;
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Scalar};

    fn empty() -> Arc<ParamSet> {
        ParamSet::empty()
    }

    fn identity(dim: usize, params: &Arc<ParamSet>) -> FrameTensor {
        FrameTensor::from_fn(
            dim,
            vec![IndexKind::Upper, IndexKind::Lower],
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

    fn phi_5d(params: &Arc<ParamSet>) -> FrameTensor {
        // e1 <-> e3, e2 <-> e4 swap, Reeb direction annihilated.
        let pairs = [(3usize, 1usize), (1, 3), (4, 2), (2, 4)];
        FrameTensor::from_fn(5, vec![IndexKind::Upper, IndexKind::Lower], params, |idx| {
            if pairs.contains(&(idx[0], idx[1])) {
                Scalar::one(params)
            } else {
                Scalar::zero(params)
            }
        })
    }

    #[test]
    fn trace_of_identity_is_dimension() {
        let ps = empty();
        let id = identity(5, &ps);
        let tr = id.contract(0, 1).unwrap();
        assert_eq!(tr.as_scalar(), &Scalar::from_int(&ps, 5));
    }

    #[test]
    fn trace_of_phi_is_zero() {
        let ps = empty();
        let phi = phi_5d(&ps);
        assert!(phi.contract(0, 1).unwrap().as_scalar().is_zero());
    }

    #[test]
    fn trace_of_phi_squared_is_four() {
        // Independent oracle: multiply the two 5x5 matrices by hand and trace.
        let phi_rows: [[i64; 5]; 5] = [
            [0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
        ];
        let mut trace = 0;
        for i in 0..5 {
            for m in 0..5 {
                trace += phi_rows[i][m] * phi_rows[m][i];
            }
        }
        assert_eq!(trace, 4);

        let ps = empty();
        let phi = phi_5d(&ps);
        // phi^2 as a (1,1)-tensor: contract the product over the middle pair.
        let sq = phi.tensor_product(&phi).unwrap().contract(1, 2).unwrap();
        assert_eq!(
            sq.contract(0, 1).unwrap().as_scalar(),
            &Scalar::from_int(&ps, 4)
        );
    }

    #[test]
    fn lowering_reeb_vector_gives_dual_covector() {
        let ps = empty();
        let g = identity(5, &ps).lower(0, &identity_metric(5, &ps)).unwrap();
        // with the identity metric this is just the signature flip
        assert_eq!(g.signature(), &[IndexKind::Lower, IndexKind::Lower]);

        let mut xi = FrameTensor::zeros(5, vec![IndexKind::Upper], &ps);
        xi.set(&[0], Scalar::one(&ps));
        let eta = xi.lower(0, &identity_metric(5, &ps)).unwrap();
        for i in 0..5 {
            let expect = if i == 0 { 1 } else { 0 };
            assert_eq!(eta.get(&[i]), &Scalar::from_int(&ps, expect));
        }
    }

    fn identity_metric(dim: usize, params: &Arc<ParamSet>) -> FrameTensor {
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

    #[test]
    fn eta_tensor_eta_has_single_component() {
        let ps = empty();
        let mut eta = FrameTensor::zeros(5, vec![IndexKind::Lower], &ps);
        eta.set(&[0], Scalar::one(&ps));
        let ee = eta.tensor_product(&eta).unwrap();
        let nz = ee.nonzero();
        assert_eq!(nz.len(), 1);
        assert_eq!(nz[0].0, vec![0, 0]);
        assert_eq!(nz[0].1, &Scalar::one(&ps));

        // scaling by -4 yields the example's Ricci tensor
        let rho = ee.scale(&Scalar::from_int(&ps, -4));
        assert_eq!(rho.get(&[0, 0]), &Scalar::from_int(&ps, -4));
    }

    #[test]
    fn zero_scale_gives_zero_tensor() {
        let ps = empty();
        let g = identity_metric(3, &ps);
        assert!(g.scale(&Scalar::zero(&ps)).is_zero());
    }

    #[test]
    fn contract_rejects_same_kind() {
        let ps = empty();
        let g = identity_metric(3, &ps);
        assert_eq!(g.contract(0, 1), Err(TensorError::ContractionKind));
    }

    #[test]
    fn signature_mismatch_on_add() {
        let ps = empty();
        let g = identity_metric(3, &ps);
        let id = identity(3, &ps);
        assert_eq!(g.checked_add(&id), Err(TensorError::SignatureMismatch));
    }

    #[test]
    fn symmetrize_produces_the_symmetric_part() {
        let ps = empty();
        let mut t = FrameTensor::zeros(2, vec![IndexKind::Lower, IndexKind::Lower], &ps);
        t.set(&[0, 1], Scalar::from_int(&ps, 3));
        t.set(&[1, 0], Scalar::from_int(&ps, 1));
        let sym = t.symmetrize(0, 1).unwrap();
        assert!(sym.symmetry_violation(0, 1).is_none());
        assert_eq!(sym.get(&[0, 1]), &Scalar::from_int(&ps, 2));
        // idempotent on symmetric input
        assert_eq!(sym.symmetrize(0, 1).unwrap(), sym);
        // mixed kinds are rejected
        let id = identity(2, &ps);
        assert_eq!(id.symmetrize(0, 1), Err(TensorError::WrongKind));
    }

    #[test]
    fn rank0_product_dim_is_kept() {
        let ps = empty();
        let a = FrameTensor::from_scalar(4, Scalar::from_int(&ps, 3));
        let b = FrameTensor::from_scalar(4, Scalar::from_rational(&ps, rat(1, 3)));
        let prod = a.tensor_product(&b).unwrap();
        assert_eq!(prod.rank(), 0);
        assert_eq!(prod.as_scalar(), &Scalar::one(&ps));
    }
}
