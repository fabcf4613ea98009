//! Seeded random diagrams and random move sequences.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{to_framed, GaussCode, Label};
use crate::error::AnalysisError;
use crate::moves::{all_moves, apply, MoveInstance};

/// Uniform raw arrangement: a uniformly random pairing of `2n` positions
/// cut at `k - 1` uniformly chosen points into `k` non-empty circles.
pub fn random_diagram(n: usize, k: usize, seed: u64) -> Result<GaussCode, AnalysisError> {
    if n == 0 {
        return Ok(GaussCode::from_parts_unchecked(Vec::new(), k));
    }
    if k == 0 || k > 2 * n {
        return Err(AnalysisError::Infeasible {
            chords: n,
            components: k,
            attempts: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions: Vec<usize> = (0..2 * n).collect();
    positions.shuffle(&mut rng);
    let mut word: Vec<Label> = vec![0; 2 * n];
    for (label, pair) in positions.chunks(2).enumerate() {
        word[pair[0]] = label as Label;
        word[pair[1]] = label as Label;
    }
    let mut cuts: Vec<usize> = index::sample(&mut rng, 2 * n - 1, k - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    let mut pieces = Vec::with_capacity(k);
    let mut at = 0;
    for c in cuts.into_iter().chain(std::iter::once(2 * n)) {
        pieces.push(word[at..c].to_vec());
        at = c;
    }
    Ok(GaussCode::from_parts_unchecked(pieces, 0))
}

/// Applies `count` moves, each chosen uniformly among all applicable
/// instances that keep the vertex count at most `max_vertices`. Stops early
/// if no move applies.
pub fn random_moves(code: &GaussCode, count: usize, max_vertices: usize, seed: u64) -> GaussCode {
    random_walk(code, count, max_vertices, seed).0
}

/// Like [`random_moves`], also returning the applied instances.
pub fn random_walk(code: &GaussCode, count: usize, max_vertices: usize, seed: u64) -> (GaussCode, Vec<MoveInstance>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = to_framed(code);
    let mut applied = Vec::with_capacity(count);
    for _ in 0..count {
        let moves = all_moves(&d, max_vertices.saturating_sub(d.vertex_count()));
        if moves.is_empty() {
            break;
        }
        let m = moves[rng.gen_range(0..moves.len())];
        d = apply(&d, &m).expect("enumerated site");
        applied.push(m);
    }
    if applied.is_empty() {
        return (code.clone(), applied);
    }
    (d.to_gauss(), applied)
}
