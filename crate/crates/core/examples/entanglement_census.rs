//! Entanglement vectors of every field-kind set found for m = 2..4.

use std::collections::BTreeMap;

use mubforge::construct::{generators, search_b, SearchMode, StabilizerSpec};
use mubforge::entangle::entanglement_vector;

fn main() {
    for m in 2..=4 {
        let mut census: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        let hits = search_b(m, SearchMode::Exhaustive, usize::MAX).expect("small m");
        for b in &hits {
            let gens = generators(&StabilizerSpec::field(b.clone()).expect("valid")).expect("valid");
            *census.entry(entanglement_vector(&gens).expect("symmetric").counts).or_default() += 1;
        }
        println!("m = {m}: {} valid B", hits.len());
        for (counts, n) in census {
            println!("  {counts:?} x {n}");
        }
    }
}
