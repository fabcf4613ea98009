//! Lower bounds on crossing number from bracket values.
//!
//! Every term of the Alexander-like bracket is a smoothing of any
//! representative, so a representative has at least as many vertices as
//! the largest term. Every term of `kdelta` arises after smoothing one
//! chord and then some even chords, which costs at least one more vertex.
//! For two-component links the Kauffman-like bracket plays the same role.

use serde::Serialize;

use crate::brackets::{alex_bracket, kauffman_bracket, kdelta, FormalSum};
use crate::canon::{canonicalize, CanonicalCode};
use crate::diagram::GaussCode;
use crate::error::ComponentCountError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Alex,
    Kdelta,
    Kauffman,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub invariant: Invariant,
    /// A largest term, absent when the invariant vanishes.
    pub term: Option<CanonicalCode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityCertificate {
    pub diagram: CanonicalCode,
    pub vertices: usize,
    pub bound: usize,
    pub witness: Witness,
    pub tight: bool,
}

fn certificate(code: &GaussCode, bound: usize, witness: Witness) -> MinimalityCertificate {
    let vertices = code.chord_count();
    debug_assert!(bound <= vertices);
    MinimalityCertificate {
        diagram: canonicalize(code),
        vertices,
        bound,
        witness,
        tight: bound == vertices,
    }
}

fn top(sum: &FormalSum) -> Option<CanonicalCode> {
    sum.max_term().map(|(_, t)| t.clone())
}

pub fn lower_bound_knot(code: &GaussCode) -> Result<MinimalityCertificate, ComponentCountError> {
    let alex = alex_bracket(code)?;
    let kd = kdelta(code)?;
    let from_alex = alex.max_term_vertices();
    let from_kdelta = if kd.is_zero() { 0 } else { kd.max_term_vertices() + 1 };
    let witness = if from_kdelta > from_alex {
        Witness {
            invariant: Invariant::Kdelta,
            term: top(&kd),
        }
    } else {
        Witness {
            invariant: Invariant::Alex,
            term: top(&alex),
        }
    };
    Ok(certificate(code, from_alex.max(from_kdelta), witness))
}

pub fn lower_bound_link2(code: &GaussCode) -> Result<MinimalityCertificate, ComponentCountError> {
    let kb = kauffman_bracket(code)?;
    let witness = Witness {
        invariant: Invariant::Kauffman,
        term: top(&kb),
    };
    Ok(certificate(code, kb.max_term_vertices(), witness))
}
