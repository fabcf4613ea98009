use thiserror::Error;

use crate::diagram::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("empty component at position {0}")]
    EmptyComponent(usize),
    #[error("label `{label}` occurs {count} times (expected exactly 2)")]
    BadOccurrence { label: String, count: usize },
    #[error("half-edge slot {0} is not matched exactly once")]
    BadMatching(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("vertex {0} is not in the diagram")]
    NoSuchVertex(usize),
    #[error("edge ({0}, {1}) is not in the diagram")]
    NoSuchEdge(usize, usize),
    #[error("free loop {0} is not in the diagram")]
    NoSuchLoop(usize),
    #[error("move site does not match the {0} pattern")]
    InvalidSite(&'static str),
}

/// Violated precondition on the number of unicursal components.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected {expected} unicursal component(s), found {found}")]
pub struct ComponentCountError {
    pub expected: usize,
    pub found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Components(#[from] ComponentCountError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error("graph has {0} vertices; brute-force realizability is limited to {1}")]
    TooLarge(usize, usize),
    #[error("no diagram with {chords} chords and {components} components after {attempts} attempts")]
    Infeasible {
        chords: usize,
        components: usize,
        attempts: usize,
    },
    #[error("unknown chord label {0}")]
    UnknownLabel(Label),
}
