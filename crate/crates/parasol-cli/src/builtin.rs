//! Specs compiled into the binary. The same files ship under `fixtures/`;
//! embedding them keeps the binary self-contained.

pub const EXAMPLE5: &str = include_str!("../fixtures/example5.mfd");
pub const EXAMPLE3: &str = include_str!("../fixtures/example3.mfd");
pub const ABELIAN5: &str = include_str!("../fixtures/abelian5.mfd");

/// Names and sources of every built-in spec.
pub fn all() -> &'static [(&'static str, &'static str)] {
    &[
        ("example5", EXAMPLE5),
        ("example3", EXAMPLE3),
        ("abelian5", ABELIAN5),
    ]
}

pub fn get(name: &str) -> Option<&'static str> {
    all()
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}
