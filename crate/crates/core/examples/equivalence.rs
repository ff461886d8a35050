//! Group and semigroup sets are images of field sets under a symplectic map.

use mubforge::construct::{generators, search_specs, SearchMode, SetKind};
use mubforge::entangle::count_factorizable;
use mubforge::equiv::{classes_equal, field_core, transport};

fn main() {
    for kind in [SetKind::Group, SetKind::Semigroup] {
        let out = search_specs(kind, 3, SearchMode::Exhaustive, 1).expect("small m");
        let spec = &out.specs[0];
        let (core, f) = field_core(spec).expect("symmetrizer is not alternating");
        let field = generators(&core).expect("valid");
        let moved = transport(&f, &field).expect("f is symplectic");
        println!("{kind}: core B = {:?}", core.b().to_rows());
        println!("  f = {:?}", f.matrix().to_rows());
        println!(
            "  factorizable bases: field {} -> {kind} {}",
            count_factorizable(&field).expect("symmetric"),
            count_factorizable(&moved).expect("symmetric")
        );
        println!("  same classes as {kind} set: {}", classes_equal(&moved, &generators(spec).expect("valid")));
    }
}
