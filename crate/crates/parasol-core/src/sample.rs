//! Seeded generators of valid random inputs for the property suites.
//!
//! Structure constants are drawn from families where the Jacobi identity
//! holds by construction (the generated frames are still run through the
//! explicit check), since rejection sampling over arbitrary constants
//! essentially never terminates.

use crate::frame::LieFrame;
use crate::pi::PiStructure;
use crate::scalar::{ParamSet, Rational, Scalar};
use crate::tensor::{FrameTensor, IndexKind};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;
use std::sync::Arc;

/// Small random rational with numerator in [-max, max] and denominator in
/// [1, den].
pub fn random_rational(rng: &mut StdRng, max: i64, den: i64) -> Rational {
    let n = rng.gen_range(-max..=max);
    let d = rng.gen_range(1..=den);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Random polynomial over `params` with a few low-degree terms.
pub fn random_scalar(rng: &mut StdRng, params: &Arc<ParamSet>) -> Scalar {
    let mut acc = Scalar::from_rational(params, random_rational(rng, 3, 2));
    for i in 0..params.len() {
        if rng.gen_bool(0.5) {
            let coeff = random_rational(rng, 3, 2);
            let deg = rng.gen_range(1..=2u32);
            let term = Scalar::param(params, i).pow(deg).scale_rational(&coeff);
            acc = &acc + &term;
        }
    }
    acc
}

/// Random symmetric positive-definite rational metric, built as L·Lᵀ with
/// a unit lower-triangular L and positive diagonal scaling.
pub fn random_spd_metric(rng: &mut StdRng, dim: usize, params: &Arc<ParamSet>) -> FrameTensor {
    let mut l = vec![vec![Rational::from_integer(0.into()); dim]; dim];
    for (i, row) in l.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            if j < i {
                *entry = random_rational(rng, 2, 2);
            } else if j == i {
                let d = rng.gen_range(1..=3i64);
                *entry = Rational::from_integer(BigInt::from(d));
            }
        }
    }
    FrameTensor::from_fn(
        dim,
        vec![IndexKind::Lower, IndexKind::Lower],
        params,
        |idx| {
            let mut acc = Rational::from_integer(0.into());
            for m in 0..dim {
                acc += &l[idx[0]][m] * &l[idx[1]][m];
            }
            Scalar::from_rational(params, acc)
        },
    )
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

/// Random frame from one of several Jacobi-closed families:
/// abelian, almost-abelian ([e_0, e_i] = A e_i with A mapping into
/// span{e_1, ...}), scaled so(3)-type in dimension 3, and a Heisenberg
/// layer. Entries may be polynomial in the supplied parameters.
pub fn random_frame(rng: &mut StdRng, dim: usize, params: &Arc<ParamSet>) -> LieFrame {
    let family = rng.gen_range(0..4u8);
    let metric = if rng.gen_bool(0.5) {
        identity_metric(dim, params)
    } else {
        random_spd_metric(rng, dim, params)
    };
    let mut brackets: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    match family {
        0 => {} // abelian
        1 => {
            // almost abelian: only [e_0, e_i] nonzero, landing in span{e_1..}
            for i in 1..dim {
                for k in 1..dim {
                    if rng.gen_bool(0.6) {
                        let coeff = if !params.is_empty() && rng.gen_bool(0.3) {
                            random_scalar(rng, params)
                        } else {
                            Scalar::from_rational(params, random_rational(rng, 2, 2))
                        };
                        if !coeff.is_zero() {
                            brackets.push((0, i, k, coeff));
                        }
                    }
                }
            }
        }
        2 if dim == 3 => {
            // [e_0,e_1] = a e_2, [e_1,e_2] = b e_0, [e_2,e_0] = c e_1:
            // every Jacobi summand lands on a repeated bracket and cancels.
            let a = Scalar::from_rational(params, random_rational(rng, 2, 2));
            let b = Scalar::from_rational(params, random_rational(rng, 2, 2));
            let c = Scalar::from_rational(params, random_rational(rng, 2, 2));
            brackets.push((0, 1, 2, a));
            brackets.push((1, 2, 0, b));
            brackets.push((0, 2, 1, -&c));
        }
        _ => {
            // Heisenberg-type layer: [e_i, e_j] ∈ span{e_last} for i, j < last
            let last = dim - 1;
            for i in 0..last {
                for j in (i + 1)..last {
                    if rng.gen_bool(0.5) {
                        let coeff = Scalar::from_rational(params, random_rational(rng, 2, 2));
                        if !coeff.is_zero() {
                            brackets.push((i, j, last, coeff));
                        }
                    }
                }
            }
        }
    }
    LieFrame::from_brackets(dim, params.clone(), &brackets, metric)
        .expect("families are valid by construction")
}

/// Random Π-structure on an odd-dimensional frame: ξ = e_0, η = e^0,
/// φ pairs the non-Reeb directions with a common sign per pair, and the
/// metric is block diagonal with equal entries on paired directions.
pub fn random_pi_structure(rng: &mut StdRng, n: usize, params: &Arc<ParamSet>) -> PiStructure {
    let dim = 2 * n + 1;
    // pair up indices 1..=2n randomly
    let mut rest: Vec<usize> = (1..dim).collect();
    let mut pairs = Vec::new();
    while !rest.is_empty() {
        let a = rest.remove(rng.gen_range(0..rest.len()));
        let b = rest.remove(rng.gen_range(0..rest.len()));
        pairs.push((a, b));
    }

    // paired-equal positive diagonal metric
    let mut diag = vec![Rational::from_integer(1.into()); dim];
    for &(a, b) in &pairs {
        let v = Rational::from_integer(BigInt::from(rng.gen_range(1..=3i64)));
        diag[a] = v.clone();
        diag[b] = v;
    }
    let metric = FrameTensor::from_fn(
        dim,
        vec![IndexKind::Lower, IndexKind::Lower],
        params,
        |idx| {
            if idx[0] == idx[1] {
                Scalar::from_rational(params, diag[idx[0]].clone())
            } else {
                Scalar::zero(params)
            }
        },
    );

    // almost-abelian brackets keep the frame a Lie algebra for any matrix
    let mut brackets = Vec::new();
    for i in 1..dim {
        for k in 1..dim {
            if rng.gen_bool(0.4) {
                let coeff = Scalar::from_rational(params, random_rational(rng, 2, 2));
                if !coeff.is_zero() {
                    brackets.push((0, i, k, coeff));
                }
            }
        }
    }
    let frame =
        LieFrame::from_brackets(dim, params.clone(), &brackets, metric).expect("valid family");

    let mut phi = FrameTensor::zeros(dim, vec![IndexKind::Upper, IndexKind::Lower], params);
    for &(a, b) in &pairs {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        phi.set(&[a, b], Scalar::from_int(params, sign));
        phi.set(&[b, a], Scalar::from_int(params, sign));
    }
    let mut xi = FrameTensor::zeros(dim, vec![IndexKind::Upper], params);
    xi.set(&[0], Scalar::one(params));
    let mut eta = FrameTensor::zeros(dim, vec![IndexKind::Lower], params);
    eta.set(&[0], Scalar::one(params));
    PiStructure::new(frame, phi, xi, eta).expect("valid structure")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generated_frames_satisfy_jacobi() {
        let mut rng = StdRng::seed_from_u64(7);
        let ps = ParamSet::new(["p"]).unwrap();
        for _ in 0..25 {
            let dim = rng.gen_range(2..=5);
            let frame = random_frame(&mut rng, dim, &ps);
            assert!(frame.check_jacobi().holds);
        }
    }

    #[test]
    fn generated_structures_pass_axioms() {
        let mut rng = StdRng::seed_from_u64(11);
        let ps = ParamSet::empty();
        for _ in 0..10 {
            let n = rng.gen_range(1..=2);
            let s = random_pi_structure(&mut rng, n, &ps);
            let conn = s.frame().levi_civita().unwrap();
            assert!(s.check_axioms(Some(&conn)).all_pass());
        }
    }
}
