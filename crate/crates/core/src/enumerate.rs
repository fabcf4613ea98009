//! Exhaustive enumeration of small diagrams.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonicalize, CanonicalCode};
use crate::diagram::{GaussCode, Label};

/// `(2n - 1)!!`, the number of double-occurrence words on `n` labels.
pub fn double_factorial_odd(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

/// Decodes the `index`-th double-occurrence word of length `2n`. Labels
/// appear in first-occurrence order. Index digits are mixed-radix with the
/// partner choice of label 0 most significant.
pub fn double_occurrence_word(n: usize, mut index: u64) -> Vec<Label> {
    let mut digits = vec![0usize; n];
    for k in (0..n).rev() {
        let radix = (2 * (n - k) - 1) as u64;
        digits[k] = (index % radix) as usize;
        index /= radix;
    }
    let mut word: Vec<Option<Label>> = vec![None; 2 * n];
    for (k, &d) in digits.iter().enumerate() {
        let first = word.iter().position(Option::is_none).unwrap();
        word[first] = Some(k as Label);
        let second = word
            .iter()
            .enumerate()
            .skip(first + 1)
            .filter(|(_, x)| x.is_none())
            .nth(d)
            .map(|(i, _)| i)
            .unwrap();
        word[second] = Some(k as Label);
    }
    word.into_iter().map(Option::unwrap).collect()
}

/// All `(2n - 1)!!` double-occurrence words of length `2n`.
pub fn double_occurrence_words(n: usize) -> impl Iterator<Item = Vec<Label>> {
    (0..double_factorial_odd(n)).map(move |i| double_occurrence_word(n, i))
}

/// Ways to cut a word of length `len` into `parts` non-empty consecutive
/// pieces, as lists of piece lengths.
fn compositions(len: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, parts: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if len > 0 {
                acc.push(len);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for first in 1..len {
            acc.push(first);
            go(len - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(len, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Every raw arrangement of `n` chords on `k` non-empty circles: a
/// double-occurrence word cut into `k` consecutive pieces. With `n = 0` the
/// single arrangement is `k` free loops.
pub fn raw_codes(n: usize, k: usize) -> impl ParallelIterator<Item = GaussCode> {
    let cuts = if n == 0 { Vec::new() } else { compositions(2 * n, k) };
    let total = if n == 0 { 0 } else { double_factorial_odd(n) };
    (0..total).into_par_iter().flat_map_iter(move |i| {
        let word = double_occurrence_word(n, i);
        cuts.clone().into_iter().map(move |cut| {
            let mut pieces = Vec::with_capacity(cut.len());
            let mut at = 0;
            for len in cut {
                pieces.push(word[at..at + len].to_vec());
                at += len;
            }
            GaussCode::from_parts_unchecked(pieces, 0)
        })
    })
}

/// Isomorphism classes of diagrams with `n` chords and `k` unicursal
/// components, sorted. Components are non-empty unless `n = 0`, in which
/// case the only class is `k` free loops.
pub fn enumerate_codes(n: usize, k: usize) -> Vec<CanonicalCode> {
    if n == 0 {
        return vec![canonicalize(&GaussCode::from_parts_unchecked(Vec::new(), k))];
    }
    let set: BTreeSet<CanonicalCode> = raw_codes(n, k).map(|c| canonicalize(&c)).collect();
    set.into_iter().collect()
}

/// All classes with at most `max_chords` chords and `k` components.
pub fn enumerate_up_to(max_chords: usize, k: usize) -> Vec<CanonicalCode> {
    (0..=max_chords).flat_map(|n| enumerate_codes(n, k)).collect()
}
