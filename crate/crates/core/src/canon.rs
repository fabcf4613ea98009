//! Canonical form of Gauss codes.
//!
//! The canonical code is the lexicographically least relabeled word list
//! over all component orderings, cyclic rotations and per-component
//! reflections. Component lengths are non-decreasing in the result, and
//! labels are numbered by first occurrence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{to_framed, FramedDiagram, GaussCode, Label};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(GaussCode);

impl CanonicalCode {
    pub fn code(&self) -> &GaussCode {
        &self.0
    }

    pub fn into_code(self) -> GaussCode {
        self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.chord_count()
    }

    pub fn component_count(&self) -> usize {
        self.0.component_count()
    }

    pub fn free_loops(&self) -> usize {
        self.0.free_loops()
    }

    pub fn to_framed(&self) -> FramedDiagram {
        to_framed(&self.0)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        GaussCode::parse(&text)
            .map(|c| canonicalize(&c))
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone)]
struct Partial {
    used: Vec<bool>,
    map: Vec<Option<Label>>,
    next: Label,
    words: Vec<Vec<Label>>,
}

fn variants(word: &[Label]) -> impl Iterator<Item = Vec<Label>> + '_ {
    let len = word.len();
    (0..len).flat_map(move |r| {
        let fwd: Vec<Label> = (0..len).map(|j| word[(r + j) % len]).collect();
        let rev: Vec<Label> = (0..len).map(|j| word[(r + len - j) % len]).collect();
        [fwd, rev]
    })
}

pub fn canonicalize(code: &GaussCode) -> CanonicalCode {
    let dense = code.relabeled();
    let words = dense.words();
    let chords = dense.chord_count();
    let mut lengths: Vec<usize> = words.iter().map(Vec::len).collect();
    lengths.sort_unstable();

    let mut states = vec![Partial {
        used: vec![false; words.len()],
        map: vec![None; chords],
        next: 0,
        words: Vec::with_capacity(words.len()),
    }];
    for &len in &lengths {
        let mut best: Option<Vec<Label>> = None;
        let mut next_states: Vec<Partial> = Vec::new();
        for st in &states {
            for (i, word) in words.iter().enumerate() {
                if st.used[i] || word.len() != len {
                    continue;
                }
                for var in variants(word) {
                    let mut map = st.map.clone();
                    let mut next = st.next;
                    let seg: Vec<Label> = var
                        .iter()
                        .map(|&l| {
                            *map[l as usize].get_or_insert_with(|| {
                                next += 1;
                                next - 1
                            })
                        })
                        .collect();
                    let ord = best.as_ref().map(|b| seg.cmp(b));
                    if matches!(ord, Some(std::cmp::Ordering::Greater)) {
                        continue;
                    }
                    if !matches!(ord, Some(std::cmp::Ordering::Equal)) {
                        best = Some(seg.clone());
                        next_states.clear();
                    }
                    let mut used = st.used.clone();
                    used[i] = true;
                    let mut ws = st.words.clone();
                    ws.push(seg);
                    next_states.push(Partial {
                        used,
                        map,
                        next,
                        words: ws,
                    });
                }
            }
        }
        states = next_states;
    }
    let words = states.swap_remove(0).words;
    CanonicalCode(GaussCode::from_parts_unchecked(words, dense.free_loops()))
}

pub fn canonicalize_framed(d: &FramedDiagram) -> CanonicalCode {
    canonicalize(&d.to_gauss())
}
