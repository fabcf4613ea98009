//! Regenerates the fixture files: `cargo run --release --example find_witnesses`.

use freeknot_core::analysis::witnesses::{irreducibly_odd_codes, knot_link_pairs};
use freeknot_core::analysis::{lower_bound_knot, lower_bound_link2};

fn main() {
    for n in 1..=6 {
        let odd = irreducibly_odd_codes(n);
        println!("irreducibly odd, {n} chords: {}", odd.len());
        for c in odd.iter().take(5) {
            println!("  {c}");
        }
    }
    let pairs = knot_link_pairs(8);
    println!("knot/link pairs with 9 chords: {}", pairs.len());
    for p in &pairs {
        let kb = lower_bound_knot(&p.knot).unwrap();
        let lb = lower_bound_link2(p.link.code()).unwrap();
        println!("  knot {}  hub {}  link {}  bounds {} {}", p.knot, p.hub, p.link, kb.bound, lb.bound);
    }
}
