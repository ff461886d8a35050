//! Writes the numeric bases of the two-qubit field set as JSON.

use mubforge::construct::{generators, StabilizerSpec};
use mubforge::gf2::BitMatrix;
use mubforge::oracle::{basis_to_json, MubSet};

fn main() {
    let b = BitMatrix::from_rows(&[[1u8, 1], [1, 0]]);
    let gens = generators(&StabilizerSpec::field(b).expect("valid B")).expect("valid spec");
    let set = MubSet::from_generators(&gens).expect("m within numeric cap");
    for (j, basis) in set.bases.iter().enumerate() {
        println!("{{\"basis\":{j},\"columns\":{}}}", basis_to_json(basis));
    }
}
