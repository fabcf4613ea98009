//! Bounded breadth-first search of the move graph.
//!
//! Free-link equivalence has no known decision procedure; this is an
//! empirical oracle. A hit proves equivalence, a miss only means the target
//! is not reachable within the budget.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonicalize, canonicalize_framed, CanonicalCode};
use crate::diagram::GaussCode;
use crate::moves::{all_moves, apply, MoveKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    #[serde(rename = "move")]
    pub kind: &'static str,
    pub diagram: CanonicalCode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub start: CanonicalCode,
    pub target: Option<CanonicalCode>,
    pub budget: SearchBudget,
    pub reached: bool,
    /// Depth at which the target was found.
    pub depth: Option<usize>,
    /// Number of distinct diagrams visited, start included.
    pub explored: usize,
    pub min_vertices: usize,
    pub min_vertex_diagram: CanonicalCode,
    /// Moves from start to target, when reached.
    pub path: Option<Vec<PathStep>>,
    /// Unexplored diagrams remained when the depth budget ran out.
    pub exhausted: bool,
}

fn expand(c: &CanonicalCode, max_vertices: usize) -> Vec<(MoveKind, CanonicalCode)> {
    let d = c.to_framed();
    let extra = max_vertices.saturating_sub(d.vertex_count());
    let mut out: Vec<(MoveKind, CanonicalCode)> = all_moves(&d, extra)
        .iter()
        .map(|m| (m.kind(), canonicalize_framed(&apply(&d, m).expect("enumerated site"))))
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    out.dedup_by(|a, b| a.1 == b.1);
    out
}

/// Explores every diagram within the budget, stopping early if `target` is
/// reached. Frontiers are expanded in parallel; the visited map is merged
/// in sorted order so results are deterministic.
pub fn bfs_explore(start: &GaussCode, target: Option<&GaussCode>, budget: SearchBudget) -> SearchReport {
    let start = canonicalize(start);
    let target = target.map(canonicalize);
    let mut parent: HashMap<CanonicalCode, Option<(MoveKind, CanonicalCode)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut min = (start.vertex_count(), start.clone());
    let mut frontier = vec![start.clone()];
    let mut reached_at = (target.as_ref() == Some(&start)).then_some(0);
    let mut depth = 0;

    while reached_at.is_none() && depth < budget.max_depth && !frontier.is_empty() {
        depth += 1;
        let expanded: Vec<(CanonicalCode, Vec<(MoveKind, CanonicalCode)>)> = frontier
            .par_iter()
            .map(|c| (c.clone(), expand(c, budget.max_vertices)))
            .collect();
        let mut next = Vec::new();
        for (from, succs) in expanded {
            for (kind, to) in succs {
                if parent.contains_key(&to) {
                    continue;
                }
                parent.insert(to.clone(), Some((kind, from.clone())));
                if to.vertex_count() < min.0 || (to.vertex_count() == min.0 && to < min.1) {
                    min = (to.vertex_count(), to.clone());
                }
                if target.as_ref() == Some(&to) {
                    reached_at = Some(depth);
                }
                next.push(to);
            }
        }
        next.sort();
        frontier = next;
    }

    let path = reached_at.map(|_| {
        let mut steps = Vec::new();
        let mut at = target.clone().unwrap();
        while let Some(Some((kind, prev))) = parent.get(&at) {
            steps.push(PathStep {
                kind: kind.name(),
                diagram: at.clone(),
            });
            at = prev.clone();
        }
        steps.reverse();
        steps
    });

    SearchReport {
        start,
        target,
        budget,
        reached: reached_at.is_some(),
        depth: reached_at,
        explored: parent.len(),
        min_vertices: min.0,
        min_vertex_diagram: min.1,
        path,
        exhausted: reached_at.is_none() && !frontier.is_empty() && depth == budget.max_depth,
    }
}

pub fn bfs_equivalent(a: &GaussCode, b: &GaussCode, budget: SearchBudget) -> SearchReport {
    bfs_explore(a, Some(b), budget)
}
