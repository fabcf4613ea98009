//! Searches for the example diagrams whose minimality the brackets prove.
//!
//! The knot family searched here: nine chords on one circle, all chords
//! Gaussian-even, and exactly one chord `x` interlaced with every other
//! chord. Every such code reads `x A x B` with `A` and `B` orderings of the
//! remaining eight chords, so scanning all `8!` orderings `B` (with `A`
//! fixed by relabeling) covers the family. The link is the splitting
//! smoothing at `x`, `A | B`; it must be R2-irreducible and
//! source-sink orientable, and all of its crossings are inter-component.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::brackets::delta_terms;
use crate::canon::{canonicalize, canonicalize_framed, CanonicalCode};
use crate::diagram::{GaussCode, Label};
use crate::enumerate::enumerate_codes;
use crate::moves::find_r2;
use crate::parity::{component_parity, gaussian_parity, interlacement, is_irreducibly_odd, source_sink_orientable};

pub const K1_FIXTURE: &str = include_str!("../../fixtures/k1.gauss");
pub const L1_FIXTURE: &str = include_str!("../../fixtures/l1.gauss");
pub const IRREDUCIBLY_ODD_FIXTURE: &str = include_str!("../../fixtures/irreducibly_odd_6.gauss");

/// Codes in a fixture file: one per line, `#` starts a comment.
pub fn parse_fixture(text: &str) -> Result<Vec<GaussCode>, crate::error::DiagramError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .map(GaussCode::parse)
        .collect()
}

pub fn irreducibly_odd_codes(n: usize) -> Vec<CanonicalCode> {
    enumerate_codes(n, 1)
        .into_par_iter()
        .filter(|c| is_irreducibly_odd(c.code()).unwrap())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotLinkPair {
    pub knot: GaussCode,
    /// Label in `knot` of the chord interlaced with all others.
    pub hub: Label,
    pub link: CanonicalCode,
}

/// Checks the knot constraints on `code` and returns the hub chord and the
/// link obtained by smoothing it.
pub fn knot_link_pair(code: &GaussCode) -> Option<KnotLinkPair> {
    let n = code.chord_count();
    if code.component_count() != 1 || n < 2 {
        return None;
    }
    if !gaussian_parity(code).ok()?.all_even() {
        return None;
    }
    let g = interlacement(code);
    let hubs: Vec<Label> = g.labels.iter().copied().filter(|&l| g.degree(l) == n - 1).collect();
    let [hub] = hubs[..] else {
        return None;
    };
    let (_, smoothed) = delta_terms(code).ok()?.into_iter().find(|(l, _)| *l == hub)?;
    let link = smoothed.to_gauss();
    let all_inter = component_parity(&link).ok()?.all_odd();
    if !all_inter || !find_r2(&smoothed).is_empty() || !source_sink_orientable(&smoothed) {
        return None;
    }
    Some(KnotLinkPair {
        knot: code.clone(),
        hub,
        link: canonicalize_framed(&smoothed),
    })
}

fn nth_permutation(mut k: usize, n: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    let mut fact: usize = (1..n).product();
    for i in (1..=n).rev() {
        let idx = k / fact;
        k %= fact;
        out.push(pool.remove(idx));
        if i > 1 {
            fact /= i - 1;
        }
    }
    out
}

/// All members of the family with `others + 1` chords, up to isomorphism,
/// in canonical order.
pub fn knot_link_pairs(others: usize) -> Vec<KnotLinkPair> {
    let total: usize = (1..=others).product();
    let hub = others as Label;
    let found: Vec<KnotLinkPair> = (0..total)
        .into_par_iter()
        .filter_map(|k| {
            let perm = nth_permutation(k, others);
            let mut word: Vec<Label> = vec![hub];
            word.extend(0..others as Label);
            word.push(hub);
            word.extend(perm.iter().map(|&p| p as Label));
            knot_link_pair(&GaussCode::from_parts_unchecked(vec![word], 0))
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut out: Vec<(CanonicalCode, KnotLinkPair)> = found
        .into_iter()
        .map(|p| (canonicalize(&p.knot), p))
        .filter(|(c, _)| seen.insert(c.clone()))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, p)| p).collect()
}
