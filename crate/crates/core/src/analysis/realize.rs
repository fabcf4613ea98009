//! Brute-force recognition of interlacement graphs of one-circle chord
//! diagrams.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::canon::CanonicalCode;
use crate::diagram::GaussCode;
use crate::enumerate::enumerate_codes;
use crate::error::{AnalysisError, ComponentCountError};
use crate::graph::SimpleGraph;
use crate::parity::{interlacement, require_components, InterlacementGraph};

pub const REALIZABLE_MAX_VERTICES: usize = 8;

pub fn intersection_graph(code: &GaussCode) -> Result<InterlacementGraph, ComponentCountError> {
    require_components(code, 1)?;
    Ok(interlacement(code))
}

type Catalogue = Vec<(CanonicalCode, SimpleGraph)>;

fn catalogue(n: usize) -> &'static Catalogue {
    static CACHE: [OnceLock<Catalogue>; REALIZABLE_MAX_VERTICES + 1] = [const { OnceLock::new() }; REALIZABLE_MAX_VERTICES + 1];
    CACHE[n].get_or_init(|| {
        enumerate_codes(n, 1)
            .into_par_iter()
            .map(|c| {
                let g = interlacement(c.code()).graph;
                (c, g)
            })
            .collect()
    })
}

/// A one-circle code whose interlacement graph is isomorphic to `g`, or
/// `None` when no double-occurrence word on `|V(g)|` letters realizes it.
/// Interlacement is invariant under the code symmetries, so scanning the
/// isomorphism classes covers every raw word.
pub fn realizable(g: &SimpleGraph) -> Result<Option<GaussCode>, AnalysisError> {
    let n = g.vertex_count();
    if n > REALIZABLE_MAX_VERTICES {
        return Err(AnalysisError::TooLarge(n, REALIZABLE_MAX_VERTICES));
    }
    Ok(catalogue(n)
        .par_iter()
        .find_first(|(_, h)| h.is_isomorphic(g))
        .map(|(c, _)| c.code().clone()))
}
