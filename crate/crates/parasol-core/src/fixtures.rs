//! Built-in structures used by the test suites and the CLI.

use crate::frame::LieFrame;
use crate::pi::PiStructure;
use crate::scalar::{ParamSet, Scalar};
use crate::tensor::{FrameTensor, IndexKind};
use std::sync::Arc;

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

fn reeb_at_zero(dim: usize, params: &Arc<ParamSet>) -> (FrameTensor, FrameTensor) {
    let mut xi = FrameTensor::zeros(dim, vec![IndexKind::Upper], params);
    xi.set(&[0], Scalar::one(params));
    let mut eta = FrameTensor::zeros(dim, vec![IndexKind::Lower], params);
    eta.set(&[0], Scalar::one(params));
    (xi, eta)
}

fn pairing_phi(dim: usize, pairs: &[(usize, usize)], params: &Arc<ParamSet>) -> FrameTensor {
    let mut phi = FrameTensor::zeros(dim, vec![IndexKind::Upper, IndexKind::Lower], params);
    for &(a, b) in pairs {
        phi.set(&[a, b], Scalar::one(params));
        phi.set(&[b, a], Scalar::one(params));
    }
    phi
}

/// The five-dimensional example with symbolic parameters p, q:
///
/// [e_0,e_1] = p e_2 − e_3 + q e_4     [e_0,e_2] = −p e_1 − q e_3 − e_4
/// [e_0,e_3] = −e_1 + q e_2 + p e_4    [e_0,e_4] = −q e_1 − e_2 − p e_3
///
/// with the orthonormal metric, ξ = e_0, and φ swapping e_1 ↔ e_3 and
/// e_2 ↔ e_4.
pub fn example5() -> PiStructure {
    let params = ParamSet::new(["p", "q"]).unwrap();
    example5_over(&params)
}

/// Same structure, over a caller-supplied parameter set that declares at
/// least `p` and `q`.
pub fn example5_over(params: &Arc<ParamSet>) -> PiStructure {
    let p = Scalar::param_named(params, "p").expect("parameter p");
    let q = Scalar::param_named(params, "q").expect("parameter q");
    let one = Scalar::one(params);
    let brackets = vec![
        (0, 1, 2, p.clone()),
        (0, 1, 3, -&one),
        (0, 1, 4, q.clone()),
        (0, 2, 1, -&p),
        (0, 2, 3, -&q),
        (0, 2, 4, -&one),
        (0, 3, 1, -&one),
        (0, 3, 2, q.clone()),
        (0, 3, 4, p.clone()),
        (0, 4, 1, -&q),
        (0, 4, 2, -&one),
        (0, 4, 3, -&p),
    ];
    let frame = LieFrame::from_brackets(5, params.clone(), &brackets, identity_metric(5, params))
        .expect("well-formed frame");
    let phi = pairing_phi(5, &[(1, 3), (2, 4)], params);
    let (xi, eta) = reeb_at_zero(5, params);
    PiStructure::new(frame, phi, xi, eta).expect("well-formed structure")
}

/// The five-dimensional example with rational values substituted for the
/// parameters.
pub fn example5_at(p: crate::scalar::Rational, q: crate::scalar::Rational) -> PiStructure {
    let params = ParamSet::empty();
    let brackets_sym = example5();
    let mut assign = std::collections::BTreeMap::new();
    assign.insert("p".to_string(), p);
    assign.insert("q".to_string(), q);
    let d = 5;
    let mut entries = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            for k in 0..d {
                let c = brackets_sym.frame().structure().get(&[i, j, k]);
                if !c.is_zero() {
                    let value = c.substitute(&assign).expect("known params");
                    let value = value.reparametrize(&params).expect("empty params");
                    entries.push((i, j, k, value));
                }
            }
        }
    }
    let frame = LieFrame::from_brackets(5, params.clone(), &entries, identity_metric(5, &params))
        .expect("well-formed frame");
    let phi = pairing_phi(5, &[(1, 3), (2, 4)], &params);
    let (xi, eta) = reeb_at_zero(5, &params);
    PiStructure::new(frame, phi, xi, eta).expect("well-formed structure")
}

/// A three-dimensional para-Sasaki-like structure:
/// [e_0,e_1] = −e_2, [e_0,e_2] = −e_1, orthonormal metric, ξ = e_0,
/// φ swapping e_1 ↔ e_2.
pub fn example3() -> PiStructure {
    let params = ParamSet::empty();
    let one = Scalar::one(&params);
    let brackets = vec![(0, 1, 2, -&one), (0, 2, 1, -&one)];
    let frame = LieFrame::from_brackets(3, params.clone(), &brackets, identity_metric(3, &params))
        .expect("well-formed frame");
    let phi = pairing_phi(3, &[(1, 2)], &params);
    let (xi, eta) = reeb_at_zero(3, &params);
    PiStructure::new(frame, phi, xi, eta).expect("well-formed structure")
}

/// The abelian (flat) frame of dimension 5 carrying the same Π-structure
/// as [`example5`]. Valid and flat, but not para-Sasaki-like.
pub fn abelian5() -> PiStructure {
    let params = ParamSet::empty();
    let c = FrameTensor::zeros(
        5,
        vec![IndexKind::Lower, IndexKind::Lower, IndexKind::Upper],
        &params,
    );
    let frame = LieFrame::new(5, params.clone(), c, identity_metric(5, &params))
        .expect("well-formed frame");
    let phi = pairing_phi(5, &[(1, 3), (2, 4)], &params);
    let (xi, eta) = reeb_at_zero(5, &params);
    PiStructure::new(frame, phi, xi, eta).expect("well-formed structure")
}

/// [`example5`] with g(e_1, e_1) replaced; used to exercise axiom failures.
pub fn example5_with_metric_entry_1_1(value: i64) -> PiStructure {
    let base = example5();
    let params = base.frame().params().clone();
    let mut g = identity_metric(5, &params);
    g.set(&[1, 1], Scalar::from_int(&params, value));
    let frame = LieFrame::new(5, params.clone(), base.frame().structure().clone(), g)
        .expect("well-formed frame");
    PiStructure::new(
        frame,
        base.phi().clone(),
        base.xi().clone(),
        base.eta().clone(),
    )
    .expect("well-formed structure")
}
