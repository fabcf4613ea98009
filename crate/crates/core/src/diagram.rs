//! Gauss codes and framed 4-valent graphs.
//!
//! A [`GaussCode`] is a list of cyclic words in which every chord label
//! occurs exactly twice, plus a count of vertex-free circles. A
//! [`FramedDiagram`] stores the same object as a perfect matching on
//! half-edge slots: vertex `v` owns slots `4v..4v+4`, and slots `i` and
//! `i + 2` are opposite at their vertex.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::DiagramError;

pub type Label = u32;

/// Index of a half-edge slot, `4 * vertex + local`.
pub type Slot = usize;

#[inline]
pub fn vertex_of(slot: Slot) -> usize {
    slot / 4
}

#[inline]
pub fn opposite(slot: Slot) -> Slot {
    (slot & !3) | ((slot + 2) & 3)
}

#[inline]
pub fn are_opposite(a: Slot, b: Slot) -> bool {
    a != b && opposite(a) == b
}

/// Display name of a label: `a`..`z`, then `c26`, `c27`, ...
///
/// Never yields `O`, which the text grammar reserves for free loops.
pub fn label_name(label: Label) -> String {
    if label < 26 {
        char::from(b'a' + label as u8).to_string()
    } else {
        format!("c{label}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussCode {
    components: Vec<Vec<Label>>,
    free_loops: usize,
}

impl GaussCode {
    /// Builds a code, validating double occurrence. Empty words are folded
    /// into the free-loop count.
    pub fn new(components: Vec<Vec<Label>>, free_loops: usize) -> Result<Self, DiagramError> {
        let mut counts: BTreeMap<Label, usize> = BTreeMap::new();
        for &l in components.iter().flatten() {
            *counts.entry(l).or_default() += 1;
        }
        if let Some((&l, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(DiagramError::BadOccurrence {
                label: label_name(l),
                count,
            });
        }
        let mut loops = free_loops;
        let components = components
            .into_iter()
            .filter(|w| {
                if w.is_empty() {
                    loops += 1;
                    false
                } else {
                    true
                }
            })
            .collect();
        Ok(GaussCode {
            components,
            free_loops: loops,
        })
    }

    pub(crate) fn from_parts_unchecked(components: Vec<Vec<Label>>, free_loops: usize) -> Self {
        debug_assert!(components.iter().all(|w| !w.is_empty()));
        GaussCode {
            components,
            free_loops,
        }
    }

    pub fn empty() -> Self {
        GaussCode {
            components: Vec::new(),
            free_loops: 0,
        }
    }

    pub fn free_loop() -> Self {
        GaussCode {
            components: Vec::new(),
            free_loops: 1,
        }
    }

    /// Non-empty words; free loops are counted separately.
    pub fn words(&self) -> &[Vec<Label>] {
        &self.components
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn chord_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Number of unicursal components, free loops included.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    /// Sorted distinct chord labels.
    pub fn labels(&self) -> Vec<Label> {
        let mut ls: Vec<Label> = self.components.iter().flatten().copied().collect();
        ls.sort_unstable();
        ls.dedup();
        ls
    }

    /// `(component, index)` of both endpoints of every chord, in reading order.
    pub fn occurrences(&self) -> BTreeMap<Label, [(usize, usize); 2]> {
        let mut first: BTreeMap<Label, (usize, usize)> = BTreeMap::new();
        let mut out = BTreeMap::new();
        for (c, word) in self.components.iter().enumerate() {
            for (i, &l) in word.iter().enumerate() {
                match first.remove(&l) {
                    Some(p) => {
                        out.insert(l, [p, (c, i)]);
                    }
                    None => {
                        first.insert(l, (c, i));
                    }
                }
            }
        }
        out
    }

    /// Parses the `a b | a b` text grammar. `O` alone is a free loop.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        Self::parse_with_names(text).map(|(c, _)| c)
    }

    /// Like [`GaussCode::parse`], also returning the input name of each
    /// label, indexed by label.
    pub fn parse_with_names(text: &str) -> Result<(Self, Vec<String>), DiagramError> {
        if text.trim().is_empty() {
            return Ok((GaussCode::empty(), Vec::new()));
        }
        let mut names: BTreeMap<&str, Label> = BTreeMap::new();
        let mut components = Vec::new();
        let mut free_loops = 0;
        for (idx, part) in text.split('|').enumerate() {
            let tokens: Vec<&str> = part.split_whitespace().collect();
            if tokens.is_empty() {
                return Err(DiagramError::EmptyComponent(idx));
            }
            if tokens == ["O"] {
                free_loops += 1;
                continue;
            }
            let mut word = Vec::with_capacity(tokens.len());
            for tok in tokens {
                if !tok.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '_') {
                    return Err(DiagramError::MalformedToken(tok.to_string()));
                }
                let next = names.len() as Label;
                word.push(*names.entry(tok).or_insert(next));
            }
            components.push(word);
        }
        let mut counts = vec![0usize; names.len()];
        for &l in components.iter().flatten() {
            counts[l as usize] += 1;
        }
        if let Some((name, &l)) = names.iter().find(|(_, &l)| counts[l as usize] != 2) {
            return Err(DiagramError::BadOccurrence {
                label: name.to_string(),
                count: counts[l as usize],
            });
        }
        let mut order = vec![String::new(); names.len()];
        for (name, &l) in &names {
            order[l as usize] = name.to_string();
        }
        Ok((
            GaussCode {
                components,
                free_loops,
            },
            order,
        ))
    }

    /// Renames labels to `0..n` in order of first appearance.
    pub fn relabeled(&self) -> GaussCode {
        let mut map: BTreeMap<Label, Label> = BTreeMap::new();
        let components = self
            .components
            .iter()
            .map(|w| {
                w.iter()
                    .map(|l| {
                        let next = map.len() as Label;
                        *map.entry(*l).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        GaussCode {
            components,
            free_loops: self.free_loops,
        }
    }
}

impl std::str::FromStr for GaussCode {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GaussCode::parse(s)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .components
            .iter()
            .map(|w| w.iter().map(|&l| label_name(l)).collect::<Vec<_>>().join(" "))
            .collect();
        parts.extend(std::iter::repeat_n("O".to_string(), self.free_loops));
        write!(f, "{}", parts.join(" | "))
    }
}

/// One pass of a unicursal traversal through a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub vertex: usize,
    pub entry: Slot,
    pub exit: Slot,
}

/// Framed 4-valent graph as a perfect matching on half-edge slots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedDiagram {
    partner: Vec<Slot>,
    free_loops: usize,
}

/// Result of splicing vertices out of a diagram: the new diagram and the
/// old-to-new vertex renumbering.
pub(crate) type VertexMap = Vec<Option<usize>>;

impl FramedDiagram {
    /// Validates that `partner` is a fixed-point-free involution on `4n` slots.
    pub fn from_matching(partner: Vec<Slot>, free_loops: usize) -> Result<Self, DiagramError> {
        if !partner.len().is_multiple_of(4) {
            return Err(DiagramError::BadMatching(partner.len()));
        }
        for (s, &p) in partner.iter().enumerate() {
            if p >= partner.len() || p == s || partner[p] != s {
                return Err(DiagramError::BadMatching(s));
            }
        }
        Ok(FramedDiagram {
            partner,
            free_loops,
        })
    }

    pub(crate) fn from_matching_unchecked(partner: Vec<Slot>, free_loops: usize) -> Self {
        debug_assert!(FramedDiagram::from_matching(partner.clone(), free_loops).is_ok());
        FramedDiagram {
            partner,
            free_loops,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn partner(&self, slot: Slot) -> Slot {
        self.partner[slot]
    }

    pub fn matching(&self) -> &[Slot] {
        &self.partner
    }

    /// Every edge once, as `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(Slot, Slot)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(s, &p)| s < p)
            .map(|(s, &p)| (s, p))
            .collect()
    }

    /// Unicursal traversal: each cycle enters a vertex and leaves through the
    /// opposite slot. Cycles start at the lowest unvisited slot.
    pub fn traverse(&self) -> Vec<Vec<Passage>> {
        let mut seen = vec![false; self.partner.len()];
        let mut cycles = Vec::new();
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut entry = start;
            loop {
                let exit = opposite(entry);
                seen[entry] = true;
                seen[exit] = true;
                cycle.push(Passage {
                    vertex: vertex_of(entry),
                    entry,
                    exit,
                });
                entry = self.partner[exit];
                if entry == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Vertex sequence of every unicursal cycle, plus the free loops.
    pub fn unicursal_components(&self) -> UnicursalComponents {
        UnicursalComponents {
            cycles: self
                .traverse()
                .into_iter()
                .map(|c| c.into_iter().map(|p| p.vertex).collect())
                .collect(),
            free_loops: self.free_loops,
        }
    }

    pub fn component_count(&self) -> usize {
        self.traverse().len() + self.free_loops
    }

    /// Gauss code whose labels are the vertex indices.
    pub fn to_gauss(&self) -> GaussCode {
        let components = self
            .traverse()
            .into_iter()
            .map(|c| c.into_iter().map(|p| p.vertex as Label).collect())
            .collect();
        GaussCode::from_parts_unchecked(components, self.free_loops)
    }

    /// Removes the vertices in `removed`, reconnecting each removed slot `s`
    /// to `internal(s)` (a slot of the same vertex). Closed strands running
    /// only through removed slots become free loops. Remaining vertices are
    /// renumbered in increasing order.
    pub(crate) fn splice(
        &self,
        removed: &[usize],
        internal: impl Fn(Slot) -> Slot,
    ) -> (FramedDiagram, VertexMap) {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in removed {
            gone[v] = true;
        }
        let is_gone = |s: Slot| gone[vertex_of(s)];

        let mut map: VertexMap = vec![None; n];
        let mut next = 0;
        for (v, m) in map.iter_mut().enumerate() {
            if !gone[v] {
                *m = Some(next);
                next += 1;
            }
        }
        let renumber = |s: Slot| map[vertex_of(s)].unwrap() * 4 + (s & 3);

        let mut used = vec![false; self.partner.len()];
        let mut partner = vec![usize::MAX; next * 4];
        for s in 0..self.partner.len() {
            if is_gone(s) {
                continue;
            }
            let mut p = self.partner[s];
            while is_gone(p) {
                used[p] = true;
                let q = internal(p);
                used[q] = true;
                p = self.partner[q];
            }
            partner[renumber(s)] = renumber(p);
        }

        let mut free_loops = self.free_loops;
        for start in 0..self.partner.len() {
            if !is_gone(start) || used[start] {
                continue;
            }
            let mut s = start;
            loop {
                used[s] = true;
                let q = internal(s);
                used[q] = true;
                s = self.partner[q];
                if s == start {
                    break;
                }
            }
            free_loops += 1;
        }
        (FramedDiagram::from_matching_unchecked(partner, free_loops), map)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicursalComponents {
    pub cycles: Vec<Vec<usize>>,
    pub free_loops: usize,
}

impl UnicursalComponents {
    pub fn count(&self) -> usize {
        self.cycles.len() + self.free_loops
    }
}

/// Framed graph of a code. Labels are numbered by sorted order; the first
/// passage through a vertex uses slots 0 -> 2, the second 1 -> 3.
pub fn to_framed(code: &GaussCode) -> FramedDiagram {
    let labels = code.labels();
    let index: BTreeMap<Label, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut passes = vec![0usize; labels.len()];
    let mut partner = vec![0; labels.len() * 4];
    for word in code.words() {
        let slots: Vec<(Slot, Slot)> = word
            .iter()
            .map(|l| {
                let v = index[l];
                let k = passes[v];
                passes[v] += 1;
                (4 * v + k, 4 * v + k + 2)
            })
            .collect();
        for i in 0..slots.len() {
            let exit = slots[i].1;
            let entry = slots[(i + 1) % slots.len()].0;
            partner[exit] = entry;
            partner[entry] = exit;
        }
    }
    FramedDiagram::from_matching_unchecked(partner, code.free_loops())
}

pub fn from_framed(d: &FramedDiagram) -> GaussCode {
    d.to_gauss()
}
