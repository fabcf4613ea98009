//! Chord interlacement, parity rules and source-sink orientability.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{label_name, opposite, vertex_of, FramedDiagram, GaussCode, Label};
use crate::error::ComponentCountError;
use crate::graph::SimpleGraph;
use crate::moves::{apply_mapped, MoveInstance};

/// Interlacement graph on chord labels. Chords are interlaced when both
/// lie on one circle with alternating endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacementGraph {
    pub labels: Vec<Label>,
    pub graph: SimpleGraph,
}

impl InterlacementGraph {
    fn index(&self, l: Label) -> usize {
        self.labels.binary_search(&l).expect("label in graph")
    }

    pub fn interlaced(&self, a: Label, b: Label) -> bool {
        self.graph.adjacent(self.index(a), self.index(b))
    }

    pub fn degree(&self, l: Label) -> usize {
        self.graph.degree(self.index(l))
    }

    pub fn edges(&self) -> Vec<(Label, Label)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(a, b)| (self.labels[a], self.labels[b]))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph interlacement {\n");
        for &l in &self.labels {
            let _ = writeln!(out, "  {};", label_name(l));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", label_name(a), label_name(b));
        }
        out.push_str("}\n");
        out
    }
}

pub fn interlacement(code: &GaussCode) -> InterlacementGraph {
    let labels = code.labels();
    let mut graph = SimpleGraph::new(labels.len());
    let occ = code.occurrences();
    let same_circle: Vec<(Label, usize, usize, usize)> = occ
        .iter()
        .filter(|(_, [p, q])| p.0 == q.0)
        .map(|(&l, [p, q])| (l, p.0, p.1, q.1))
        .collect();
    for (i, &(a, ca, a1, a2)) in same_circle.iter().enumerate() {
        for &(b, cb, b1, b2) in &same_circle[i + 1..] {
            if ca != cb {
                continue;
            }
            let inside = |x: usize| a1 < x && x < a2;
            if inside(b1) != inside(b2) {
                let ia = labels.binary_search(&a).unwrap();
                let ib = labels.binary_search(&b).unwrap();
                graph.add_edge(ia, ib);
            }
        }
    }
    InterlacementGraph { labels, graph }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityRule {
    /// Knots: a chord is odd iff it is interlaced with an odd number of chords.
    Gaussian,
    /// Two-component links: a vertex is odd iff its passages lie on
    /// different components.
    Component,
}

impl ParityRule {
    pub fn required_components(self) -> usize {
        match self {
            ParityRule::Gaussian => 1,
            ParityRule::Component => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityAssignment {
    pub rule: ParityRule,
    /// `true` marks an odd chord.
    pub odd: BTreeMap<Label, bool>,
}

impl ParityAssignment {
    pub fn is_odd(&self, l: Label) -> bool {
        self.odd[&l]
    }

    pub fn even_labels(&self) -> Vec<Label> {
        self.odd.iter().filter(|(_, &o)| !o).map(|(&l, _)| l).collect()
    }

    pub fn all_odd(&self) -> bool {
        self.odd.values().all(|&o| o)
    }

    pub fn all_even(&self) -> bool {
        self.odd.values().all(|&o| !o)
    }
}

pub(crate) fn require_components(code: &GaussCode, expected: usize) -> Result<(), ComponentCountError> {
    let found = code.component_count();
    if found == expected {
        Ok(())
    } else {
        Err(ComponentCountError { expected, found })
    }
}

pub fn gaussian_parity(code: &GaussCode) -> Result<ParityAssignment, ComponentCountError> {
    require_components(code, 1)?;
    let g = interlacement(code);
    let odd = g.labels.iter().map(|&l| (l, g.degree(l) % 2 == 1)).collect();
    Ok(ParityAssignment {
        rule: ParityRule::Gaussian,
        odd,
    })
}

pub fn component_parity(code: &GaussCode) -> Result<ParityAssignment, ComponentCountError> {
    require_components(code, 2)?;
    let odd = code
        .occurrences()
        .into_iter()
        .map(|(l, [p, q])| (l, p.0 != q.0))
        .collect();
    Ok(ParityAssignment {
        rule: ParityRule::Component,
        odd,
    })
}

pub fn parity(code: &GaussCode, rule: ParityRule) -> Result<ParityAssignment, ComponentCountError> {
    match rule {
        ParityRule::Gaussian => gaussian_parity(code),
        ParityRule::Component => component_parity(code),
    }
}

/// Whether edges can be directed so that at every vertex one opposite pair
/// is outgoing and the other incoming.
///
/// Each passage (opposite pair) is either a source or a sink. The two
/// passages of a vertex differ, and the two passages joined by an edge
/// differ; orientability is 2-colourability of that constraint graph.
pub fn source_sink_orientable(d: &FramedDiagram) -> bool {
    let n = d.vertex_count();
    // passage node of a slot: 2 * vertex + (slot mod 2)
    let node = |s: usize| 2 * vertex_of(s) + (s & 1);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for v in 0..n {
        adj[2 * v].push(2 * v + 1);
        adj[2 * v + 1].push(2 * v);
    }
    for (a, b) in d.edges() {
        if b == opposite(a) {
            return false;
        }
        adj[node(a)].push(node(b));
        adj[node(b)].push(node(a));
    }
    let mut colour: Vec<Option<bool>> = vec![None; 2 * n];
    for start in 0..2 * n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let c = colour[x].unwrap();
            for &y in &adj[x] {
                match colour[y] {
                    None => {
                        colour[y] = Some(!c);
                        stack.push(y);
                    }
                    Some(cy) if cy == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Every chord of a one-component code is Gaussian-even.
pub fn all_chords_even(code: &GaussCode) -> Result<bool, ComponentCountError> {
    gaussian_parity(code).map(|p| p.all_even())
}

/// All chords odd, and every two chords are told apart by the interlacement
/// of some third chord.
pub fn is_irreducibly_odd(code: &GaussCode) -> Result<bool, ComponentCountError> {
    let p = gaussian_parity(code)?;
    if !p.all_odd() {
        return Ok(false);
    }
    let g = interlacement(code);
    let n = g.labels.len();
    let adj = |a: usize, b: usize| g.graph.adjacent(a, b);
    for a in 0..n {
        for b in a + 1..n {
            if !(0..n).any(|c| c != a && c != b && adj(a, c) != adj(b, c)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub violations: Vec<String>,
}

impl ParityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the parity axioms for one concrete move:
/// an R1 crossing is even; R2 crossings share a parity; R3 crossings keep
/// their parity and an even number of them are odd; crossings outside the
/// move keep their parity.
pub fn check_parity_axioms(
    d: &FramedDiagram,
    m: &MoveInstance,
    rule: ParityRule,
) -> Result<ParityReport, crate::error::AnalysisError> {
    let before_code = d.to_gauss();
    let before = parity(&before_code, rule)?;
    let (after_d, map) = apply_mapped(d, m)?;
    let after = parity(&after_d.to_gauss(), rule)?;
    let mut report = ParityReport::default();
    let odd_before = |v: usize| before.is_odd(v as Label);
    let odd_after = |v: usize| after.is_odd(v as Label);
    let name = |v: usize| label_name(v as Label);

    let n = d.vertex_count();
    let (site_before, site_after): (Vec<usize>, Vec<usize>) = match *m {
        MoveInstance::R1Decrease { vertex } => (vec![vertex], vec![]),
        MoveInstance::R2Decrease { vertices, .. } => (vertices.to_vec(), vec![]),
        MoveInstance::R1Increase { .. } => (vec![], vec![n]),
        MoveInstance::R2Increase { .. } => (vec![], vec![n, n + 1]),
        MoveInstance::R3 { vertices, .. } => (vertices.to_vec(), vertices.to_vec()),
    };

    match *m {
        MoveInstance::R1Decrease { .. } | MoveInstance::R1Increase { .. } => {
            let (v, odd) = match site_before.first() {
                Some(&v) => (v, odd_before(v)),
                None => (site_after[0], odd_after(site_after[0])),
            };
            if odd {
                report.violations.push(format!("R1 crossing {} is odd", name(v)));
            }
        }
        MoveInstance::R2Decrease { .. } | MoveInstance::R2Increase { .. } => {
            let (pair, odd): (&[usize], &dyn Fn(usize) -> bool) = if site_before.is_empty() {
                (&site_after, &odd_after)
            } else {
                (&site_before, &odd_before)
            };
            if odd(pair[0]) != odd(pair[1]) {
                report.violations.push(format!(
                    "R2 crossings {} and {} differ in parity",
                    name(pair[0]),
                    name(pair[1])
                ));
            }
        }
        MoveInstance::R3 { vertices, .. } => {
            for &v in &vertices {
                if odd_before(v) != odd_after(v) {
                    report
                        .violations
                        .push(format!("R3 crossing {} changes parity", name(v)));
                }
            }
            let odd_count = vertices.iter().filter(|&&v| odd_before(v)).count();
            if odd_count % 2 == 1 {
                report
                    .violations
                    .push(format!("R3 triangle has {odd_count} odd crossings"));
            }
        }
    }

    for (v, &image) in map.iter().enumerate().take(n) {
        if site_before.contains(&v) {
            continue;
        }
        let Some(w) = image else {
            report.violations.push(format!("spectator {} disappeared", name(v)));
            continue;
        };
        if odd_before(v) != odd_after(w) {
            report
                .violations
                .push(format!("spectator {} changes parity", name(v)));
        }
    }
    Ok(report)
}
