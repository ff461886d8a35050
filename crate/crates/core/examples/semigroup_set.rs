//! Semigroup-kind sets: adding a symmetric `A` leaves exactly one
//! completely factorizable basis.

use mubforge::construct::{generators, search_specs, SearchMode, SetKind};
use mubforge::entangle::entanglement_vector;

fn main() {
    for m in 2..=4 {
        let out = search_specs(SetKind::Semigroup, m, SearchMode::Exhaustive, 1).expect("m within exhaustive range");
        let Some(spec) = out.specs.first() else {
            println!("m = {m}: {}", out.warning.unwrap_or_default());
            continue;
        };
        let ent = entanglement_vector(&generators(spec).expect("valid spec")).expect("symmetric forms");
        println!("m = {m}: {}", spec.to_json());
        println!("  counts {:?}", ent.counts);
    }
}
