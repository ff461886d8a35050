//! Group-kind sets: a non-symmetric `B` with a symmetrizer that is not a
//! polynomial in `B`, giving two completely factorizable bases.

use mubforge::construct::{build_stabilizer, cyclicity_check, generators, search_specs, SearchMode, SetKind};
use mubforge::entangle::entanglement_vector;

fn main() {
    for m in 2..=4 {
        let out = search_specs(SetKind::Group, m, SearchMode::Exhaustive, 1).expect("m within exhaustive range");
        let Some(spec) = out.specs.first() else {
            println!("m = {m}: {}", out.warning.unwrap_or_default());
            continue;
        };
        let gens = generators(spec).expect("valid spec");
        let ent = entanglement_vector(&gens).expect("symmetric forms");
        println!("m = {m}");
        println!("B =\n{}R =\n{}", spec.b(), spec.r());
        println!("cyclic: {}", cyclicity_check(&build_stabilizer(spec), spec.d()));
        println!("partitions {:?} counts {:?}", ent.partitions, ent.counts);
    }
}
