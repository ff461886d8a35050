//! Field-kind sets for m = 1..5: cyclicity, class partition, and the
//! numeric unbiasedness check.

use mubforge::construct::{
    build_stabilizer, class_partition_check, cyclicity_check, field_closure_check, generators, search_b, SearchMode,
    StabilizerSpec,
};
use mubforge::oracle::{verify_mub, MubSet};

fn main() {
    for m in 1..=5 {
        let b = search_b(m, SearchMode::Exhaustive, 1).expect("small m")[0].clone();
        let spec = StabilizerSpec::field(b).expect("search returns valid B");
        let c = build_stabilizer(&spec);
        let gens = generators(&spec).expect("valid spec");
        let classes = class_partition_check(&gens, Some(&c));
        let mub = verify_mub(&MubSet::from_generators(&gens).expect("m within numeric cap"), 1e-10);
        println!(
            "m = {m}: B = {:?}  cyclic {}  field {}  classes {}/{}  max deviation {:.2e}",
            spec.b().to_rows(),
            cyclicity_check(&c, spec.d()),
            field_closure_check(&gens),
            classes.covered,
            classes.expected,
            mub.max_deviation
        );
    }
}
