//! Fibonacci indices of the irreducible polynomials of small degree, and
//! which of them are usable as the characteristic polynomial of `B`.

use mubforge::poly::{fibonacci_index, Poly2};

fn main() {
    for degree in 1..=6u32 {
        let usable: Vec<String> = (1u64 << degree..1u64 << (degree + 1))
            .map(Poly2::from_u64)
            .filter(Poly2::is_irreducible)
            .filter_map(|p| {
                let n = fibonacci_index(&p).expect("irreducible and small");
                println!("{p:<28} hex {:<4} index {n}", p.to_hex());
                (n == (1 << degree) + 1).then(|| p.to_string())
            })
            .collect();
        println!("degree {degree}: index 2^{degree}+1 for {usable:?}\n");
    }
}
