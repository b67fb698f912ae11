//! Small shared report types.

/// One verified identity: its name, whether it holds, and the first
/// violating index tuple in lexicographic order when it does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl IdentityCheck {
    pub fn from_violation(name: &'static str, violation: Option<Vec<usize>>) -> Self {
        IdentityCheck {
            name,
            holds: violation.is_none(),
            witness: violation,
        }
    }

    pub fn pass(name: &'static str) -> Self {
        IdentityCheck {
            name,
            holds: true,
            witness: None,
        }
    }

    pub fn flag(name: &'static str, holds: bool) -> Self {
        IdentityCheck {
            name,
            holds,
            witness: None,
        }
    }
}

/// A boolean property decided exactly, with the first violating index
/// tuple as evidence when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn from_violation(violation: Option<Vec<usize>>) -> Self {
        Verdict {
            holds: violation.is_none(),
            witness: violation,
        }
    }
}
