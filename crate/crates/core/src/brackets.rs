//! Smoothings, Z2 formal sums, the cobracket and the parity brackets.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::CanonicalCode;
use crate::diagram::{to_framed, FramedDiagram, GaussCode, Label, Slot};
use crate::error::{ComponentCountError, MoveError};
use crate::moves::{find_r2, reduce_framed};
use crate::parity::{component_parity, gaussian_parity, require_components};

/// Which quotient a formal sum lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SumContext {
    /// One-component diagrams modulo R2.
    Z2G,
    /// Diagrams modulo R2, with every diagram containing a free loop set to zero.
    Z2GTilde,
    /// Two-component part of `Z2GTilde`.
    Z2GTilde2,
}

/// A Z2 linear combination of R2-irreducible canonical diagrams. Addition
/// is symmetric difference of supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    context: SumContext,
    terms: BTreeSet<CanonicalCode>,
}

impl FormalSum {
    pub fn zero(context: SumContext) -> Self {
        FormalSum {
            context,
            terms: BTreeSet::new(),
        }
    }

    pub fn context(&self) -> SumContext {
        self.context
    }

    /// Adds one term with coefficient 1 (mod 2).
    pub fn toggle(&mut self, term: CanonicalCode) {
        if !self.terms.remove(&term) {
            self.terms.insert(term);
        }
    }

    pub fn add(&mut self, other: &FormalSum) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, c: &CanonicalCode) -> bool {
        self.terms.contains(c)
    }

    pub fn terms(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.terms.iter()
    }

    /// Largest vertex count among the terms, and one term attaining it.
    pub fn max_term(&self) -> Option<(usize, &CanonicalCode)> {
        self.terms
            .iter()
            .map(|t| (t.vertex_count(), t))
            .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)))
    }

    pub fn max_term_vertices(&self) -> usize {
        self.max_term().map_or(0, |(n, _)| n)
    }

    /// Term strings in sorted order.
    pub fn sorted_strings(&self) -> Vec<String> {
        let mut v: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        v.sort();
        v
    }

    /// One term per line, or `0` for the empty sum.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            "0".to_string()
        } else {
            self.sorted_strings().join("\n")
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.sorted_strings())
    }

    /// Checks the context invariants on every term.
    pub fn validate(&self) -> Result<(), String> {
        for t in &self.terms {
            let d = t.to_framed();
            if !find_r2(&d).is_empty() {
                return Err(format!("term {t} admits a decreasing R2 move"));
            }
            let comps = t.component_count();
            match self.context {
                SumContext::Z2G if comps != 1 => {
                    return Err(format!("term {t} has {comps} components"));
                }
                SumContext::Z2GTilde2 if comps != 2 => {
                    return Err(format!("term {t} has {comps} components"));
                }
                SumContext::Z2GTilde | SumContext::Z2GTilde2 if t.free_loops() > 0 => {
                    return Err(format!("term {t} has a free loop"));
                }
                _ => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.sorted_strings().join(" + "))
    }
}

/// Repasting of a vertex with half-edges `0, 1, 2, 3` (`0` opposite `2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Smoothing {
    /// Joins `(0, 1)` and `(2, 3)`.
    A,
    /// Joins `(0, 3)` and `(1, 2)`.
    B,
}

impl Smoothing {
    fn pair(self, slot: Slot) -> Slot {
        let base = slot & !3;
        let local = match (self, slot & 3) {
            (Smoothing::A, 0) => 1,
            (Smoothing::A, 1) => 0,
            (Smoothing::A, 2) => 3,
            (Smoothing::A, _) => 2,
            (Smoothing::B, 0) => 3,
            (Smoothing::B, 3) => 0,
            (Smoothing::B, 1) => 2,
            (Smoothing::B, _) => 1,
        };
        base | local
    }
}

/// A selector per smoothed vertex.
pub type SmoothingChoice = Vec<(usize, Smoothing)>;

pub fn smooth(d: &FramedDiagram, v: usize, choice: Smoothing) -> Result<FramedDiagram, MoveError> {
    smooth_many(d, &[(v, choice)])
}

/// Smooths several vertices at once; the rest of the graph is untouched.
pub fn smooth_many(d: &FramedDiagram, choice: &[(usize, Smoothing)]) -> Result<FramedDiagram, MoveError> {
    let n = d.vertex_count();
    let mut sel: Vec<Option<Smoothing>> = vec![None; n];
    for &(v, s) in choice {
        if v >= n {
            return Err(MoveError::NoSuchVertex(v));
        }
        sel[v] = Some(s);
    }
    let vertices: Vec<usize> = choice.iter().map(|c| c.0).collect();
    Ok(d.splice(&vertices, |s| sel[s / 4].unwrap().pair(s)).0)
}

/// `2^k` choices over `vertices`, bit `i` of the index selecting
/// [`Smoothing::B`] at `vertices[i]`.
fn choice_from_mask(vertices: &[usize], mask: u64) -> SmoothingChoice {
    vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, if mask >> i & 1 == 1 { Smoothing::B } else { Smoothing::A }))
        .collect()
}

/// Framed diagram whose vertex `i` carries label `i` of the returned code.
fn vertex_labelled(code: &GaussCode) -> (FramedDiagram, GaussCode) {
    let d = to_framed(code);
    let c = d.to_gauss();
    (d, c)
}

/// The smoothing of vertex `v` that yields two components, for a
/// one-component diagram.
fn splitting_smoothing(d: &FramedDiagram, v: usize) -> FramedDiagram {
    [Smoothing::A, Smoothing::B]
        .into_iter()
        .map(|s| smooth(d, v, s).expect("vertex exists"))
        .find(|t| t.component_count() == 2)
        .expect("one smoothing of a one-circle chord splits the circle")
}

/// Raw cobracket summands before reduction and cancellation, one per chord,
/// paired with the smoothed chord's label in `code`.
pub fn delta_terms(code: &GaussCode) -> Result<Vec<(Label, FramedDiagram)>, ComponentCountError> {
    require_components(code, 1)?;
    let labels = code.labels();
    let d = to_framed(code);
    Ok((0..d.vertex_count())
        .map(|v| (labels[v], splitting_smoothing(&d, v)))
        .collect())
}

/// Turaev cobracket: the sum over chords of the two-component smoothing.
pub fn delta(code: &GaussCode) -> Result<FormalSum, ComponentCountError> {
    let mut sum = FormalSum::zero(SumContext::Z2GTilde2);
    for (_, t) in delta_terms(code)? {
        let (c, saw_loop) = reduce_framed(&t);
        if !saw_loop {
            sum.toggle(c);
        }
    }
    Ok(sum)
}

fn state_sum(
    d: &FramedDiagram,
    even: &[usize],
    keep: impl Fn(&FramedDiagram) -> bool + Sync,
    drop_free_loops: bool,
    context: SumContext,
) -> FormalSum {
    let terms: Vec<CanonicalCode> = (0..1u64 << even.len())
        .into_par_iter()
        .filter_map(|mask| {
            let s = smooth_many(d, &choice_from_mask(even, mask)).expect("vertices exist");
            if !keep(&s) {
                return None;
            }
            let (c, saw_loop) = reduce_framed(&s);
            (!(drop_free_loops && saw_loop)).then_some(c)
        })
        .collect();
    let mut sum = FormalSum::zero(context);
    for t in terms {
        sum.toggle(t);
    }
    sum
}

/// Sum over all smoothings of the Gaussian-even vertices that leave one
/// unicursal component, in one-component diagrams modulo R2.
pub fn alex_bracket(code: &GaussCode) -> Result<FormalSum, ComponentCountError> {
    require_components(code, 1)?;
    let (d, c) = vertex_labelled(code);
    let even: Vec<usize> = gaussian_parity(&c)?
        .even_labels()
        .into_iter()
        .map(|l| l as usize)
        .collect();
    Ok(state_sum(&d, &even, |s| s.component_count() == 1, false, SumContext::Z2G))
}

/// Sum over all smoothings of the intra-component vertices of a
/// two-component diagram; terms with free loops vanish.
pub fn kauffman_bracket(code: &GaussCode) -> Result<FormalSum, ComponentCountError> {
    require_components(code, 2)?;
    let (d, c) = vertex_labelled(code);
    let even: Vec<usize> = component_parity(&c)?
        .even_labels()
        .into_iter()
        .map(|l| l as usize)
        .collect();
    Ok(state_sum(&d, &even, |_| true, true, SumContext::Z2GTilde))
}

/// The Kauffman-like bracket extended linearly over the cobracket.
pub fn kdelta(code: &GaussCode) -> Result<FormalSum, ComponentCountError> {
    let mut sum = FormalSum::zero(SumContext::Z2GTilde);
    for t in delta(code)?.terms() {
        sum.add(&kauffman_bracket(t.code())?);
    }
    Ok(sum)
}
