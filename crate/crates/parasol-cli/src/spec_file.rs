//! The manifold spec file format.
//!
//! Line-oriented, `#` comments, whitespace-separated tokens:
//!
//! ```text
//! name <identifier>
//! dim <odd integer>
//! params <ident> <ident> ...          # optional; default: none
//!
//! brackets                             # optional; default: abelian
//! <i> <j> : <k> <expr> ; <k> <expr> ...
//! ...
//! end
//!
//! metric                               # d rows of d entries
//! <entry> ... <entry>
//! ...
//! end
//!
//! phi                                  # d rows of d entries: φ e_j = Σ_i phi[i][j] e_i
//! ...
//! end
//!
//! xi  <entry> ... <entry>              # components of ξ
//! eta <entry> ... <entry>              # components of η
//! ```
//!
//! A bracket line `i j : k expr ; ...` declares [e_i, e_j] = Σ expr·e_k
//! with 0 ≤ i < j < dim; unspecified brackets are zero. Expressions follow
//! the polynomial grammar of the engine; matrix and vector entries must be
//! single tokens (no spaces), bracket coefficients may be full expressions.

use parasol_core::scalar::{parse as parse_expr, ParamSet, Rational, Scalar};
use parasol_core::tensor::{FrameTensor, IndexKind};
use parasol_core::{FrameError, LieFrame, PiError, PiStructure};
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Validation(String),
    #[error("line {line}: in expression `{expr}`: {source}")]
    ExprAt {
        line: usize,
        expr: String,
        source: parasol_core::ScalarError,
    },
    #[error("in expression `{expr}`: {source}")]
    Expr {
        expr: String,
        source: parasol_core::ScalarError,
    },
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Structure(#[from] PiError),
}

/// One declared bracket: [e_i, e_j] = Σ coeffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// (k, expression) pairs, coefficients of e_k.
    pub coeffs: Vec<(usize, String)>,
}

/// Parsed but not yet validated-against-the-engine manifold description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldSpec {
    pub name: String,
    pub dim: usize,
    pub params: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    pub metric: Vec<Vec<String>>,
    pub phi: Vec<Vec<String>>,
    pub xi: Vec<String>,
    pub eta: Vec<String>,
}

pub fn load_spec(path: &Path) -> Result<ManifoldSpec, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_spec(&text)
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(n, raw)| {
                let body = match raw.find('#') {
                    Some(cut) => &raw[..cut],
                    None => raw,
                };
                (n + 1, body.trim())
            })
            .filter(|(_, body)| !body.is_empty())
            .collect();
        Lines { lines, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.lines.get(self.pos).copied();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }
}

fn syntax(line: usize, message: impl Into<String>) -> LoadError {
    LoadError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_spec(text: &str) -> Result<ManifoldSpec, LoadError> {
    let mut lines = Lines::new(text);
    let mut name: Option<String> = None;
    let mut dim: Option<usize> = None;
    let mut params: Vec<String> = Vec::new();
    let mut brackets: Vec<BracketEntry> = Vec::new();
    let mut metric: Option<Vec<Vec<String>>> = None;
    let mut phi: Option<Vec<Vec<String>>> = None;
    let mut xi: Option<Vec<String>> = None;
    let mut eta: Option<Vec<String>> = None;
    // every expression with the line it came from, for validation below
    let mut exprs: Vec<(usize, String)> = Vec::new();

    while let Some((lineno, line)) = lines.next() {
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("non-empty line");
        match keyword {
            "name" => {
                let value = tokens
                    .next()
                    .ok_or_else(|| syntax(lineno, "expected a name"))?;
                if tokens.next().is_some() {
                    return Err(syntax(lineno, "trailing tokens after name"));
                }
                name = Some(value.to_string());
            }
            "dim" => {
                let value: usize = tokens
                    .next()
                    .ok_or_else(|| syntax(lineno, "expected a dimension"))?
                    .parse()
                    .map_err(|_| syntax(lineno, "dimension must be a positive integer"))?;
                if value == 0 {
                    return Err(syntax(lineno, "dimension must be at least 1"));
                }
                if value.is_multiple_of(2) {
                    return Err(syntax(
                        lineno,
                        format!("dimension must be odd (2n+1); got {value}"),
                    ));
                }
                dim = Some(value);
            }
            "params" => {
                params = tokens.map(str::to_string).collect();
            }
            "brackets" => {
                let d = dim.ok_or_else(|| syntax(lineno, "dim must come before brackets"))?;
                loop {
                    let (ln, body) = lines
                        .next()
                        .ok_or_else(|| syntax(lineno, "unterminated brackets section"))?;
                    if body == "end" {
                        break;
                    }
                    let entry = parse_bracket_line(ln, body, d)?;
                    exprs.extend(entry.coeffs.iter().map(|(_, e)| (ln, e.clone())));
                    brackets.push(entry);
                }
            }
            "metric" | "phi" => {
                let d = dim.ok_or_else(|| syntax(lineno, "dim must come before matrices"))?;
                let mut rows = Vec::with_capacity(d);
                loop {
                    let (ln, body) = lines
                        .next()
                        .ok_or_else(|| syntax(lineno, format!("unterminated {keyword} section")))?;
                    if body == "end" {
                        break;
                    }
                    let row: Vec<String> = body.split_whitespace().map(str::to_string).collect();
                    if row.len() != d {
                        return Err(syntax(
                            ln,
                            format!("expected {d} entries in a {keyword} row, got {}", row.len()),
                        ));
                    }
                    exprs.extend(row.iter().map(|e| (ln, e.clone())));
                    rows.push(row);
                }
                if rows.len() != d {
                    return Err(syntax(
                        lineno,
                        format!(
                            "expected {d} rows in the {keyword} section, got {}",
                            rows.len()
                        ),
                    ));
                }
                match keyword {
                    "metric" => metric = Some(rows),
                    _ => phi = Some(rows),
                }
            }
            "xi" | "eta" => {
                let d = dim.ok_or_else(|| syntax(lineno, "dim must come before vectors"))?;
                let entries: Vec<String> = tokens.map(str::to_string).collect();
                if entries.len() != d {
                    return Err(syntax(
                        lineno,
                        format!(
                            "expected {d} components for {keyword}, got {}",
                            entries.len()
                        ),
                    ));
                }
                exprs.extend(entries.iter().map(|e| (lineno, e.clone())));
                match keyword {
                    "xi" => xi = Some(entries),
                    _ => eta = Some(entries),
                }
            }
            other => {
                return Err(syntax(lineno, format!("unknown keyword `{other}`")));
            }
        }
    }

    let spec = ManifoldSpec {
        name: name.ok_or_else(|| LoadError::Validation("missing `name`".into()))?,
        dim: dim.ok_or_else(|| LoadError::Validation("missing `dim`".into()))?,
        params,
        brackets,
        metric: metric.ok_or_else(|| LoadError::Validation("missing `metric` section".into()))?,
        phi: phi.ok_or_else(|| LoadError::Validation("missing `phi` section".into()))?,
        xi: xi.ok_or_else(|| LoadError::Validation("missing `xi` line".into()))?,
        eta: eta.ok_or_else(|| LoadError::Validation("missing `eta` line".into()))?,
    };
    spec.validate_shape()?;

    // every expression must parse against the declared parameters
    let param_set = ParamSet::new(spec.params.iter().cloned())
        .map_err(|e| LoadError::Validation(e.to_string()))?;
    for (line, expr) in exprs {
        if let Err(source) = parse_expr(&expr, &param_set) {
            return Err(LoadError::ExprAt { line, expr, source });
        }
    }
    Ok(spec)
}

fn parse_bracket_line(line: usize, body: &str, dim: usize) -> Result<BracketEntry, LoadError> {
    let (head, tail) = body
        .split_once(':')
        .ok_or_else(|| syntax(line, "expected `i j : k expr ; ...`"))?;
    let mut head_tokens = head.split_whitespace();
    let i: usize = head_tokens
        .next()
        .ok_or_else(|| syntax(line, "expected a frame index"))?
        .parse()
        .map_err(|_| syntax(line, "frame index must be an integer"))?;
    let j: usize = head_tokens
        .next()
        .ok_or_else(|| syntax(line, "expected a second frame index"))?
        .parse()
        .map_err(|_| syntax(line, "frame index must be an integer"))?;
    if head_tokens.next().is_some() {
        return Err(syntax(line, "too many indices before `:`"));
    }
    if i >= j {
        return Err(syntax(
            line,
            format!("bracket indices must satisfy i < j; got ({i},{j})"),
        ));
    }
    if j >= dim {
        return Err(syntax(line, format!("frame index {j} out of range")));
    }
    let mut coeffs = Vec::new();
    for segment in tail.split(';') {
        let segment = segment.trim();
        if segment.is_empty() {
            continue;
        }
        let mut parts = segment.splitn(2, char::is_whitespace);
        let k: usize = parts
            .next()
            .unwrap()
            .parse()
            .map_err(|_| syntax(line, "coefficient index must be an integer"))?;
        if k >= dim {
            return Err(syntax(line, format!("frame index {k} out of range")));
        }
        let expr = parts
            .next()
            .ok_or_else(|| syntax(line, "expected an expression after the index"))?
            .trim()
            .to_string();
        coeffs.push((k, expr));
    }
    if coeffs.is_empty() {
        return Err(syntax(line, "bracket line declares no coefficients"));
    }
    Ok(BracketEntry { i, j, coeffs })
}

impl ManifoldSpec {
    fn validate_shape(&self) -> Result<(), LoadError> {
        for (i, n) in self.params.iter().enumerate() {
            if self.params[..i].contains(n) {
                return Err(LoadError::Validation(format!("duplicate parameter `{n}`")));
            }
        }
        Ok(())
    }

    /// Build the engine structure. `extra_params` extends the declared
    /// parameter set (used for a symbolic collinearity factor);
    /// `substitutions` assigns rational values to declared parameters.
    pub fn build(
        &self,
        extra_params: &[String],
        substitutions: &BTreeMap<String, Rational>,
    ) -> Result<PiStructure, LoadError> {
        let mut names = self.params.clone();
        for extra in extra_params {
            if !names.contains(extra) {
                names.push(extra.clone());
            }
        }
        for name in substitutions.keys() {
            if !names.contains(name) {
                return Err(LoadError::Validation(format!(
                    "substitution for undeclared parameter `{name}`"
                )));
            }
        }
        let full = ParamSet::new(names.iter().cloned())
            .map_err(|e| LoadError::Validation(e.to_string()))?;
        let remaining: Vec<String> = names
            .iter()
            .filter(|n| !substitutions.contains_key(*n))
            .cloned()
            .collect();
        let reduced = ParamSet::new(remaining).map_err(|e| LoadError::Validation(e.to_string()))?;

        let eval = |expr: &str| -> Result<Scalar, LoadError> {
            let wrap = |source| LoadError::Expr {
                expr: expr.to_string(),
                source,
            };
            let value = parse_expr(expr, &full).map_err(wrap)?;
            let value = value.substitute(substitutions).map_err(wrap)?;
            value.reparametrize(&reduced).map_err(wrap)
        };

        let d = self.dim;
        let mut bracket_entries = Vec::new();
        for entry in &self.brackets {
            for (k, expr) in &entry.coeffs {
                let coeff = eval(expr)?;
                bracket_entries.push((entry.i, entry.j, *k, coeff));
            }
        }
        let mut metric = FrameTensor::zeros(d, vec![IndexKind::Lower, IndexKind::Lower], &reduced);
        for (i, row) in self.metric.iter().enumerate() {
            for (j, expr) in row.iter().enumerate() {
                metric.set(&[i, j], eval(expr)?);
            }
        }
        let frame = LieFrame::from_brackets(d, reduced.clone(), &bracket_entries, metric)?;

        let mut phi = FrameTensor::zeros(d, vec![IndexKind::Upper, IndexKind::Lower], &reduced);
        for (i, row) in self.phi.iter().enumerate() {
            for (j, expr) in row.iter().enumerate() {
                phi.set(&[i, j], eval(expr)?);
            }
        }
        let mut xi = FrameTensor::zeros(d, vec![IndexKind::Upper], &reduced);
        for (i, expr) in self.xi.iter().enumerate() {
            xi.set(&[i], eval(expr)?);
        }
        let mut eta = FrameTensor::zeros(d, vec![IndexKind::Lower], &reduced);
        for (i, expr) in self.eta.iter().enumerate() {
            eta.set(&[i], eval(expr)?);
        }
        Ok(PiStructure::new(frame, phi, xi, eta)?)
    }
}
