//! Exact scalar arithmetic: multivariate polynomials over the rationals.
//!
//! Every scalar quantity in the engine (metric entries, connection and
//! curvature coefficients, solved constants) is a [`Scalar`]: a polynomial
//! in a declared, ordered set of parameters with arbitrary-precision
//! rational coefficients. There is no floating point anywhere; equality of
//! scalars is structural equality of canonical forms.

mod parse;

pub use parse::{parse, ParseError};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Arbitrary-precision rational number, the coefficient domain.
pub type Rational = BigRational;

/// Convenience constructor for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("parameter sets differ: [{left}] vs [{right}]")]
    ParamMismatch { left: String, right: String },
    #[error("duplicate parameter name `{0}`")]
    DuplicateParam(String),
    #[error("invalid parameter name `{0}`")]
    InvalidParamName(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown parameter `{0}` in substitution")]
    UnknownParam(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// An ordered set of parameter names, fixed at construction.
///
/// The declaration order determines the monomial order and therefore the
/// canonical printed form of every scalar built over the set.
#[derive(Debug, PartialEq, Eq)]
pub struct ParamSet {
    names: Vec<String>,
}

impl ParamSet {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>, ScalarError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(ScalarError::InvalidParamName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(ScalarError::DuplicateParam(n.clone()));
            }
        }
        Ok(Arc::new(ParamSet { names }))
    }

    /// The empty parameter set: scalars over it are plain rationals.
    pub fn empty() -> Arc<Self> {
        Arc::new(ParamSet { names: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn describe(&self) -> String {
        self.names.join(",")
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn same_params(a: &Arc<ParamSet>, b: &Arc<ParamSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector of a monomial, one entry per declared parameter.
///
/// Ordered by total degree first, then lexicographically in declaration
/// order (graded lexicographic).
#[derive(Debug, Clone, PartialEq, Eq)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn constant(nparams: usize) -> Self {
        Monomial(vec![0; nparams])
    }

    fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial over the rationals in canonical form.
///
/// Invariant: no stored coefficient is zero; the empty term map is the
/// canonical zero. A scalar whose only monomial is the constant one is a
/// plain rational.
#[derive(Debug, Clone)]
pub struct Scalar {
    params: Arc<ParamSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        same_params(&self.params, &other.params) && self.terms == other.terms
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn zero(params: &Arc<ParamSet>) -> Self {
        Scalar {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: &Arc<ParamSet>) -> Self {
        Self::from_rational(params, Rational::one())
    }

    pub fn from_int(params: &Arc<ParamSet>, n: i64) -> Self {
        Self::from_rational(params, Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(params: &Arc<ParamSet>, r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Monomial::constant(params.len()), r);
        }
        Scalar {
            params: params.clone(),
            terms,
        }
    }

    /// The polynomial consisting of the single parameter at `index`.
    pub fn param(params: &Arc<ParamSet>, index: usize) -> Self {
        assert!(index < params.len(), "parameter index out of range");
        let mut exps = vec![0; params.len()];
        exps[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), Rational::one());
        Scalar {
            params: params.clone(),
            terms,
        }
    }

    /// The parameter named `name`, if declared.
    pub fn param_named(params: &Arc<ParamSet>, name: &str) -> Option<Self> {
        params.index_of(name).map(|i| Self::param(params, i))
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the scalar carries no parameter dependence.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    /// The value as a rational, if constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    fn check_params(&self, other: &Scalar) -> Result<(), ScalarError> {
        if same_params(&self.params, &other.params) {
            Ok(())
        } else {
            Err(ScalarError::ParamMismatch {
                left: self.params.describe(),
                right: other.params.describe(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_params(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Scalar {
            params: self.params.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&other.clone().negate())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_params(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(Scalar {
            params: self.params.clone(),
            terms,
        })
    }

    pub fn negate(mut self) -> Scalar {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }

    /// Exact division by a nonzero rational constant.
    pub fn div_rational(&self, c: &Rational) -> Result<Scalar, ScalarError> {
        if c.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v / c;
        }
        Ok(out)
    }

    /// Multiplication by a rational constant.
    pub fn scale_rational(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero(&self.params);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one(&self.params);
        for _ in 0..exp {
            acc = acc.checked_mul(self).expect("same param set");
        }
        acc
    }

    /// Substitute rational values for a subset of the parameters.
    ///
    /// The result lives over the parameter set with the substituted names
    /// removed (declaration order preserved).
    pub fn substitute(
        &self,
        assignments: &BTreeMap<String, Rational>,
    ) -> Result<Scalar, ScalarError> {
        for name in assignments.keys() {
            if self.params.index_of(name).is_none() {
                return Err(ScalarError::UnknownParam(name.clone()));
            }
        }
        let mut keep = Vec::new();
        for (i, name) in self.params.names().iter().enumerate() {
            if !assignments.contains_key(name) {
                keep.push(i);
            }
        }
        let new_params = ParamSet::new(keep.iter().map(|&i| self.params.names()[i].clone()))?;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for (i, name) in self.params.names().iter().enumerate() {
                if let Some(v) = assignments.get(name) {
                    coeff *= rational_pow(v, m.0[i]);
                }
            }
            let exps: Vec<u32> = keep.iter().map(|&i| m.0[i]).collect();
            add_term(&mut terms, Monomial(exps), coeff);
        }
        Ok(Scalar {
            params: new_params,
            terms,
        })
    }

    /// Rebuild this scalar over a parameter set that contains at least the
    /// same names (used when widening a run's parameter set).
    pub fn reparametrize(&self, params: &Arc<ParamSet>) -> Result<Scalar, ScalarError> {
        let mut map = Vec::with_capacity(self.params.len());
        for name in self.params.names() {
            match params.index_of(name) {
                Some(i) => map.push(i),
                None => return Err(ScalarError::UnknownParam(name.clone())),
            }
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; params.len()];
            for (local, &global) in map.iter().enumerate() {
                exps[global] = m.0[local];
            }
            terms.insert(Monomial(exps), c.clone());
        }
        Ok(Scalar {
            params: params.clone(),
            terms,
        })
    }

    /// The distinct monomials of this scalar, each as a monic scalar, in
    /// ascending graded-lexicographic order.
    pub fn monomials(&self) -> Vec<Scalar> {
        self.terms
            .keys()
            .map(|m| {
                let mut terms = BTreeMap::new();
                terms.insert(m.clone(), Rational::one());
                Scalar {
                    params: self.params.clone(),
                    terms,
                }
            })
            .collect()
    }

    /// The rational coefficient of `mono` (a monic monomial) in this scalar.
    pub fn coefficient_of(&self, mono: &Scalar) -> Rational {
        assert_eq!(
            mono.terms.len(),
            1,
            "coefficient_of needs a single monomial"
        );
        let key = mono.terms.keys().next().unwrap();
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Internal constructor for tests.
    #[cfg(test)]
    pub(crate) fn from_terms(
        params: &Arc<ParamSet>,
        raw: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Scalar {
        let mut terms = BTreeMap::new();
        for (exps, c) in raw {
            assert_eq!(exps.len(), params.len(), "exponent vector length");
            add_term(&mut terms, Monomial(exps), c);
        }
        Scalar {
            params: params.clone(),
            terms,
        }
    }
}

fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

// Operator sugar for internal use. Construction sites validate parameter
// sets once; mixing sets after that is a programming error, hence panic.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar parameter sets differ")
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negate()
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().negate()
    }
}

impl fmt::Display for Scalar {
    /// Canonical form: terms in descending graded-lexicographic order.
    /// The printed string re-parses to a structurally equal scalar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(m, &self.params);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_string(m: &Monomial, params: &ParamSet) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(params.names()[i].clone()),
            _ => parts.push(format!("{}^{}", params.names()[i], e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pq() -> Arc<ParamSet> {
        ParamSet::new(["p", "q"]).unwrap()
    }

    #[test]
    fn additive_inverse_is_zero() {
        let ps = pq();
        let p = Scalar::param(&ps, 0);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let ps = pq();
        let p = Scalar::param(&ps, 0);
        let one = Scalar::one(&ps);
        let lhs = (&p + &one) * (&p - &one);
        let expected = Scalar::from_terms(&ps, [(vec![2, 0], rat(1, 1)), (vec![0, 0], rat(-1, 1))]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn parse_then_square_expands() {
        // (2pq + 1)^2 = 4 p^2 q^2 + 4 p q + 1, expanded by hand.
        let ps = pq();
        let s = parse("2*p*q + 1", &ps).unwrap();
        let sq = &s * &s;
        let expected = Scalar::from_terms(
            &ps,
            [
                (vec![2, 2], rat(4, 1)),
                (vec![1, 1], rat(4, 1)),
                (vec![0, 0], rat(1, 1)),
            ],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn div_rational_examples() {
        let ps = pq();
        let p = Scalar::param(&ps, 0);
        let two_p_plus_4 = &p.scale_rational(&rat(2, 1)) + &Scalar::from_int(&ps, 4);
        let halved = two_p_plus_4.div_rational(&rat(2, 1)).unwrap();
        assert_eq!(halved, &p + &Scalar::from_int(&ps, 2));

        let zero = Scalar::zero(&ps);
        assert!(zero.div_rational(&rat(5, 1)).unwrap().is_zero());

        let m4 = Scalar::from_int(&ps, -4);
        assert_eq!(m4.div_rational(&rat(-4, 1)).unwrap(), Scalar::one(&ps));

        assert_eq!(
            Scalar::one(&ps).div_rational(&rat(0, 1)),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn zero_and_constant_predicates() {
        let ps = pq();
        let p = Scalar::param(&ps, 0);
        assert!((&p - &p).is_zero());
        assert!(Scalar::from_rational(&ps, rat(3, 2)).is_constant());
        assert!(!p.is_constant());
        assert_eq!(p.as_rational(), None);
        assert_eq!(
            Scalar::from_rational(&ps, rat(3, 2)).as_rational(),
            Some(rat(3, 2))
        );
    }

    #[test]
    fn param_set_mismatch_is_an_error() {
        let a = ParamSet::new(["p"]).unwrap();
        let b = ParamSet::new(["q"]).unwrap();
        let x = Scalar::param(&a, 0);
        let y = Scalar::param(&b, 0);
        assert!(matches!(
            x.checked_add(&y),
            Err(ScalarError::ParamMismatch { .. })
        ));
    }

    #[test]
    fn substitution_reduces_params() {
        let ps = pq();
        let s = parse("p^2*q - q + 3", &ps).unwrap();
        let mut assign = BTreeMap::new();
        assign.insert("p".to_string(), rat(2, 1));
        let out = s.substitute(&assign).unwrap();
        assert_eq!(out.params().names(), &["q".to_string()]);
        // 4q - q + 3 = 3q + 3
        let q_params = out.params().clone();
        let expected = Scalar::from_terms(&q_params, [(vec![1], rat(3, 1)), (vec![0], rat(3, 1))]);
        assert_eq!(out, expected);
    }

    #[test]
    fn display_is_descending_graded_lex() {
        let ps = pq();
        let s = parse("q + p^2 - 1 + p*q", &ps).unwrap();
        assert_eq!(s.to_string(), "p^2 + p*q + q - 1");
    }
}
