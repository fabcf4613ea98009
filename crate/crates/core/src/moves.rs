//! Reidemeister moves on framed diagrams.
//!
//! Sites are located purely at the slot level: a loop is an edge joining
//! two non-opposite slots of one vertex, a bigon is a pair of edges joining
//! two vertices through non-opposite slots at both ends, and a triangle is
//! three vertices pairwise joined so that the two triangle edges at each
//! vertex are non-opposite.

use std::collections::BTreeSet;

use crate::canon::{canonicalize_framed, CanonicalCode};
use crate::diagram::{are_opposite, opposite, to_framed, vertex_of, FramedDiagram, GaussCode, Slot, VertexMap};
use crate::error::MoveError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum MoveKind {
    R1Decrease,
    R1Increase,
    R2Decrease,
    R2Increase,
    R3,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1Decrease => "R1-",
            MoveKind::R1Increase => "R1+",
            MoveKind::R2Decrease => "R2-",
            MoveKind::R2Increase => "R2+",
            MoveKind::R3 => "R3",
        }
    }
}

/// Attachment point for an increasing move. An edge is read in the
/// direction `from -> to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeRef {
    Edge { from: Slot, to: Slot },
    FreeLoop(usize),
}

/// Relative placement of the two new crossings along the second strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Overlay {
    /// Both strands meet the new vertices in the same order (`u v ... u v`).
    Parallel,
    /// The second strand meets them in reverse order (`u v ... v u`).
    Crossed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveInstance {
    R1Decrease {
        vertex: usize,
    },
    R1Increase {
        edge: EdgeRef,
    },
    R2Decrease {
        vertices: [usize; 2],
        edges: [(Slot, Slot); 2],
    },
    R2Increase {
        first: EdgeRef,
        second: EdgeRef,
        overlay: Overlay,
    },
    R3 {
        vertices: [usize; 3],
        edges: [(Slot, Slot); 3],
    },
}

impl MoveInstance {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveInstance::R1Decrease { .. } => MoveKind::R1Decrease,
            MoveInstance::R1Increase { .. } => MoveKind::R1Increase,
            MoveInstance::R2Decrease { .. } => MoveKind::R2Decrease,
            MoveInstance::R2Increase { .. } => MoveKind::R2Increase,
            MoveInstance::R3 { .. } => MoveKind::R3,
        }
    }
}

fn has_edge(d: &FramedDiagram, (a, b): (Slot, Slot)) -> bool {
    a < d.matching().len() && d.partner(a) == b
}

/// Slot of edge `e` lying at vertex `v`; `e` must join distinct vertices.
fn end_at(e: (Slot, Slot), v: usize) -> Slot {
    if vertex_of(e.0) == v {
        e.0
    } else {
        e.1
    }
}

fn is_loop_vertex(d: &FramedDiagram, v: usize) -> bool {
    (4 * v..4 * v + 4).any(|s| {
        let p = d.partner(s);
        vertex_of(p) == v && !are_opposite(s, p)
    })
}

pub fn find_r1(d: &FramedDiagram) -> Vec<MoveInstance> {
    (0..d.vertex_count())
        .filter(|&v| is_loop_vertex(d, v))
        .map(|vertex| MoveInstance::R1Decrease { vertex })
        .collect()
}

fn straight_through(d: &FramedDiagram, vertices: &[usize]) -> (FramedDiagram, VertexMap) {
    d.splice(vertices, opposite)
}

pub fn apply_r1_decrease(d: &FramedDiagram, m: &MoveInstance) -> Result<FramedDiagram, MoveError> {
    r1_decrease_mapped(d, m).map(|r| r.0)
}

fn r1_decrease_mapped(d: &FramedDiagram, m: &MoveInstance) -> Result<(FramedDiagram, VertexMap), MoveError> {
    let MoveInstance::R1Decrease { vertex } = *m else {
        return Err(MoveError::InvalidSite("R1-"));
    };
    if vertex >= d.vertex_count() {
        return Err(MoveError::NoSuchVertex(vertex));
    }
    if !is_loop_vertex(d, vertex) {
        return Err(MoveError::InvalidSite("R1-"));
    }
    Ok(straight_through(d, &[vertex]))
}

fn check_edge_ref(d: &FramedDiagram, e: EdgeRef) -> Result<(), MoveError> {
    match e {
        EdgeRef::Edge { from, to } if has_edge(d, (from, to)) => Ok(()),
        EdgeRef::Edge { from, to } => Err(MoveError::NoSuchEdge(from, to)),
        EdgeRef::FreeLoop(i) if i < d.free_loops() => Ok(()),
        EdgeRef::FreeLoop(i) => Err(MoveError::NoSuchLoop(i)),
    }
}

fn same_target(a: EdgeRef, b: EdgeRef) -> bool {
    match (a, b) {
        (EdgeRef::Edge { from: p, to: q }, EdgeRef::Edge { from: r, to: s }) => (p, q) == (r, s) || (p, q) == (s, r),
        (EdgeRef::FreeLoop(i), EdgeRef::FreeLoop(j)) => i == j,
        _ => false,
    }
}

/// Threads new passages `(entry, exit)` along the given targets, in order.
fn insert(d: &FramedDiagram, new_vertices: usize, threads: &[(EdgeRef, Vec<(Slot, Slot)>)]) -> (FramedDiagram, VertexMap) {
    let n = d.vertex_count();
    let mut partner = d.matching().to_vec();
    partner.resize(4 * (n + new_vertices), usize::MAX);
    let mut free_loops = d.free_loops();
    let join = |a: Slot, b: Slot, partner: &mut Vec<Slot>| {
        partner[a] = b;
        partner[b] = a;
    };
    for (target, passes) in threads {
        for w in passes.windows(2) {
            join(w[0].1, w[1].0, &mut partner);
        }
        let (first, last) = (passes[0].0, passes[passes.len() - 1].1);
        match *target {
            EdgeRef::Edge { from, to } => {
                join(from, first, &mut partner);
                join(last, to, &mut partner);
            }
            EdgeRef::FreeLoop(_) => {
                join(last, first, &mut partner);
                free_loops -= 1;
            }
        }
    }
    let map = (0..n).map(Some).collect();
    (FramedDiagram::from_matching_unchecked(partner, free_loops), map)
}

fn first_pass(v: usize) -> (Slot, Slot) {
    (4 * v, 4 * v + 2)
}

fn second_pass(v: usize) -> (Slot, Slot) {
    (4 * v + 1, 4 * v + 3)
}

/// Adds a kink on `edge`. Both sides of a kink give isomorphic framed graphs.
pub fn apply_r1_increase(d: &FramedDiagram, edge: EdgeRef) -> Result<FramedDiagram, MoveError> {
    r1_increase_mapped(d, edge).map(|r| r.0)
}

fn r1_increase_mapped(d: &FramedDiagram, edge: EdgeRef) -> Result<(FramedDiagram, VertexMap), MoveError> {
    check_edge_ref(d, edge)?;
    let v = d.vertex_count();
    Ok(insert(d, 1, &[(edge, vec![first_pass(v), second_pass(v)])]))
}

pub fn find_r2(d: &FramedDiagram) -> Vec<MoveInstance> {
    let edges: Vec<(Slot, Slot)> = d
        .edges()
        .into_iter()
        .filter(|&(a, b)| vertex_of(a) != vertex_of(b))
        .collect();
    let mut out = Vec::new();
    for (i, &e1) in edges.iter().enumerate() {
        let (u, v) = (vertex_of(e1.0), vertex_of(e1.1));
        for &e2 in &edges[i + 1..] {
            let (x, y) = (vertex_of(e2.0), vertex_of(e2.1));
            if !((x, y) == (u, v) || (x, y) == (v, u)) {
                continue;
            }
            if are_opposite(end_at(e1, u), end_at(e2, u)) || are_opposite(end_at(e1, v), end_at(e2, v)) {
                continue;
            }
            out.push(MoveInstance::R2Decrease {
                vertices: [u.min(v), u.max(v)],
                edges: [e1, e2],
            });
        }
    }
    out
}

fn valid_bigon(d: &FramedDiagram, vertices: [usize; 2], edges: [(Slot, Slot); 2]) -> bool {
    let [u, v] = vertices;
    let n = d.vertex_count();
    if u >= n || v >= n || u == v || edges[0] == edges[1] {
        return false;
    }
    edges.iter().all(|&e| {
        has_edge(d, e) && {
            let ends = [vertex_of(e.0), vertex_of(e.1)];
            ends == [u, v] || ends == [v, u]
        }
    }) && vertices
        .iter()
        .all(|&w| !are_opposite(end_at(edges[0], w), end_at(edges[1], w)))
}

pub fn apply_r2_decrease(d: &FramedDiagram, m: &MoveInstance) -> Result<FramedDiagram, MoveError> {
    r2_decrease_mapped(d, m).map(|r| r.0)
}

fn r2_decrease_mapped(d: &FramedDiagram, m: &MoveInstance) -> Result<(FramedDiagram, VertexMap), MoveError> {
    let MoveInstance::R2Decrease { vertices, edges } = *m else {
        return Err(MoveError::InvalidSite("R2-"));
    };
    if !valid_bigon(d, vertices, edges) {
        return Err(MoveError::InvalidSite("R2-"));
    }
    Ok(straight_through(d, &vertices))
}

/// Overlays a strand of `first` on a strand of `second`, creating the two
/// new vertices `n` and `n + 1` bounding a bigon. `first == second` places
/// both strands on one edge.
pub fn apply_r2_increase(
    d: &FramedDiagram,
    first: EdgeRef,
    second: EdgeRef,
    overlay: Overlay,
) -> Result<FramedDiagram, MoveError> {
    r2_increase_mapped(d, first, second, overlay).map(|r| r.0)
}

fn r2_increase_mapped(
    d: &FramedDiagram,
    first: EdgeRef,
    second: EdgeRef,
    overlay: Overlay,
) -> Result<(FramedDiagram, VertexMap), MoveError> {
    check_edge_ref(d, first)?;
    check_edge_ref(d, second)?;
    let n = d.vertex_count();
    let (u, v) = (n, n + 1);
    let strand1 = vec![first_pass(u), first_pass(v)];
    let strand2 = match overlay {
        Overlay::Parallel => vec![second_pass(u), second_pass(v)],
        Overlay::Crossed => vec![second_pass(v), second_pass(u)],
    };
    if same_target(first, second) {
        let mut all = strand1;
        all.extend(strand2);
        Ok(insert(d, 2, &[(first, all)]))
    } else {
        Ok(insert(d, 2, &[(first, strand1), (second, strand2)]))
    }
}

/// Greedy R2 reduction taking the first site each round. Returns the
/// canonical irreducible diagram and whether a free loop was ever present.
pub fn reduce_r2(code: &GaussCode) -> (CanonicalCode, bool) {
    reduce_r2_with(code, |_| 0)
}

/// R2 reduction with `choose(k)` picking one of the `k` available sites.
pub fn reduce_r2_with(code: &GaussCode, choose: impl FnMut(usize) -> usize) -> (CanonicalCode, bool) {
    reduce_framed_with(&to_framed(code), choose)
}

pub fn reduce_framed(d: &FramedDiagram) -> (CanonicalCode, bool) {
    reduce_framed_with(d, |_| 0)
}

pub fn reduce_framed_with(d: &FramedDiagram, mut choose: impl FnMut(usize) -> usize) -> (CanonicalCode, bool) {
    let mut d = d.clone();
    let mut saw = d.free_loops() > 0;
    loop {
        let sites = find_r2(&d);
        if sites.is_empty() {
            break;
        }
        let k = choose(sites.len()).min(sites.len() - 1);
        let MoveInstance::R2Decrease { vertices, .. } = sites[k] else {
            unreachable!()
        };
        d = straight_through(&d, &vertices).0;
        saw |= d.free_loops() > 0;
    }
    (canonicalize_framed(&d), saw)
}

pub fn find_r3(d: &FramedDiagram) -> Vec<MoveInstance> {
    let n = d.vertex_count();
    let mut between: Vec<Vec<Vec<(Slot, Slot)>>> = vec![vec![Vec::new(); n]; n];
    for (a, b) in d.edges() {
        let (u, v) = (vertex_of(a), vertex_of(b));
        if u != v {
            between[u.min(v)][u.max(v)].push((a, b));
        }
    }
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if between[u][v].is_empty() {
                continue;
            }
            for w in v + 1..n {
                for &uv in &between[u][v] {
                    for &vw in &between[v][w] {
                        for &uw in &between[u][w] {
                            let edges = [uv, vw, uw];
                            if triangle_ok([u, v, w], edges) {
                                out.push(MoveInstance::R3 {
                                    vertices: [u, v, w],
                                    edges,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `edges` are `[uv, vw, uw]` for `vertices = [u, v, w]`.
fn triangle_ok([u, v, w]: [usize; 3], [uv, vw, uw]: [(Slot, Slot); 3]) -> bool {
    !are_opposite(end_at(uv, u), end_at(uw, u))
        && !are_opposite(end_at(uv, v), end_at(vw, v))
        && !are_opposite(end_at(vw, w), end_at(uw, w))
}

/// Slides one strand across the crossing of the other two: along each of
/// the three strands the order of its two triangle crossings is reversed.
pub fn apply_r3(d: &FramedDiagram, m: &MoveInstance) -> Result<FramedDiagram, MoveError> {
    r3_mapped(d, m).map(|r| r.0)
}

fn r3_mapped(d: &FramedDiagram, m: &MoveInstance) -> Result<(FramedDiagram, VertexMap), MoveError> {
    let MoveInstance::R3 { vertices, edges } = *m else {
        return Err(MoveError::InvalidSite("R3"));
    };
    let distinct = vertices[0] != vertices[1] && vertices[1] != vertices[2] && vertices[0] != vertices[2];
    let joins = |e: (Slot, Slot), a: usize, b: usize| {
        let ends = [vertex_of(e.0), vertex_of(e.1)];
        ends == [a, b] || ends == [b, a]
    };
    let [u, v, w] = vertices;
    if !distinct
        || vertices.iter().any(|&x| x >= d.vertex_count())
        || !edges.iter().all(|&e| has_edge(d, e))
        || !(joins(edges[0], u, v) && joins(edges[1], v, w) && joins(edges[2], u, w))
        || !triangle_ok(vertices, edges)
    {
        return Err(MoveError::InvalidSite("R3"));
    }
    let cycles = d.traverse();
    let mut words: Vec<Vec<u32>> = cycles
        .iter()
        .map(|c| c.iter().map(|p| p.vertex as u32).collect())
        .collect();
    for &(a, b) in &edges {
        let (ci, i) = cycles
            .iter()
            .enumerate()
            .find_map(|(ci, c)| {
                (0..c.len())
                    .find(|&i| {
                        let gap = (c[i].exit, c[(i + 1) % c.len()].entry);
                        gap == (a, b) || gap == (b, a)
                    })
                    .map(|i| (ci, i))
            })
            .expect("every edge is a traversal gap");
        let len = words[ci].len();
        words[ci].swap(i, (i + 1) % len);
    }
    let code = GaussCode::from_parts_unchecked(words, d.free_loops());
    let map = (0..d.vertex_count()).map(Some).collect();
    Ok((to_framed(&code), map))
}

/// Attachment points for increasing moves. Free loops are interchangeable,
/// so at most two are offered.
pub fn edge_refs(d: &FramedDiagram) -> Vec<EdgeRef> {
    d.edges()
        .into_iter()
        .map(|(from, to)| EdgeRef::Edge { from, to })
        .chain((0..d.free_loops().min(2)).map(EdgeRef::FreeLoop))
        .collect()
}

/// Every decreasing and R3 instance, plus increasing instances adding at
/// most `max_extra` vertices. R2+ instances are taken over unordered edge
/// pairs: swapping the two edges gives an isomorphic result.
pub fn all_moves(d: &FramedDiagram, max_extra: usize) -> Vec<MoveInstance> {
    let mut out = find_r1(d);
    out.extend(find_r2(d));
    out.extend(find_r3(d));
    if max_extra >= 1 {
        let refs = edge_refs(d);
        out.extend(refs.iter().map(|&edge| MoveInstance::R1Increase { edge }));
        if max_extra >= 2 {
            for (i, &first) in refs.iter().enumerate() {
                for &second in &refs[i..] {
                    for overlay in [Overlay::Parallel, Overlay::Crossed] {
                        out.push(MoveInstance::R2Increase { first, second, overlay });
                    }
                }
            }
        }
    }
    out
}

pub fn apply(d: &FramedDiagram, m: &MoveInstance) -> Result<FramedDiagram, MoveError> {
    apply_mapped(d, m).map(|r| r.0)
}

/// Applies a move and reports where each old vertex went.
pub(crate) fn apply_mapped(d: &FramedDiagram, m: &MoveInstance) -> Result<(FramedDiagram, VertexMap), MoveError> {
    match *m {
        MoveInstance::R1Decrease { .. } => r1_decrease_mapped(d, m),
        MoveInstance::R1Increase { edge } => r1_increase_mapped(d, edge),
        MoveInstance::R2Decrease { .. } => r2_decrease_mapped(d, m),
        MoveInstance::R2Increase { first, second, overlay } => r2_increase_mapped(d, first, second, overlay),
        MoveInstance::R3 { .. } => r3_mapped(d, m),
    }
}

/// Canonical classes one move away from `d`.
pub fn neighbor_codes(d: &FramedDiagram, max_extra: usize) -> BTreeSet<CanonicalCode> {
    all_moves(d, max_extra)
        .iter()
        .map(|m| canonicalize_framed(&apply(d, m).expect("enumerated sites are valid")))
        .collect()
}

pub fn neighbors(d: &FramedDiagram, max_extra: usize) -> Vec<FramedDiagram> {
    neighbor_codes(d, max_extra)
        .into_iter()
        .map(|c| c.to_framed())
        .collect()
}
