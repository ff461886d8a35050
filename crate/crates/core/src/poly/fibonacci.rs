use super::{divisors, Poly2, PolyError};

/// Largest degree accepted by [`fibonacci_index`]; `2^m + 1` must fit in a `u64`.
pub const MAX_INDEX_DEGREE: usize = 63;

/// The `n`-th Fibonacci polynomial over F₂: `F_0 = 0`, `F_1 = 1`,
/// `F_{j+1} = x·F_j + F_{j−1}`.
pub fn fibonacci_poly(n: u64) -> Poly2 {
    let x = Poly2::x();
    let (mut prev, mut cur) = (Poly2::zero(), Poly2::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&x * &cur) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

type Mat2 = [[Poly2; 2]; 2];

fn mat2_mul(a: &Mat2, b: &Mat2, modulus: Option<&Poly2>) -> Mat2 {
    let entry = |i: usize, j: usize| {
        let s = &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        match modulus {
            Some(p) => s.rem(p).expect("modulus is nonzero"),
            None => s,
        }
    };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// `[[x, 1], [1, 0]]^j`, optionally with entries reduced modulo `modulus`.
///
/// Its entries are `[[F_{j+1}, F_j], [F_j, F_{j−1}]]`.
pub fn fibonacci_matrix_power(mut j: u64, modulus: Option<&Poly2>) -> Mat2 {
    let reduce = |q: Poly2| match modulus {
        Some(p) => q.rem(p).expect("modulus is nonzero"),
        None => q,
    };
    let mut base: Mat2 = [[reduce(Poly2::x()), reduce(Poly2::one())], [reduce(Poly2::one()), Poly2::zero()]];
    let mut acc: Mat2 = [[reduce(Poly2::one()), Poly2::zero()], [Poly2::zero(), reduce(Poly2::one())]];
    while j > 0 {
        if j & 1 == 1 {
            acc = mat2_mul(&acc, &base, modulus);
        }
        j >>= 1;
        if j > 0 {
            base = mat2_mul(&base, &base, modulus);
        }
    }
    acc
}

/// `F_n(x) mod p(x)` in `O(log n)` polynomial multiplications.
pub fn fibonacci_poly_mod(n: u64, p: &Poly2) -> Result<Poly2, PolyError> {
    if p.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let [[_, f_n], _] = fibonacci_matrix_power(n, Some(p));
    Ok(f_n)
}

/// Least `n >= 1` such that the irreducible `p` divides `F_n`.
///
/// Candidates are the divisors of `2^m − 1` and `2^m + 1` (with `m = deg p`),
/// tried in ascending order. The only irreducible outside that pattern is
/// `p = x`, whose index is 2; a short linear scan covers it.
pub fn fibonacci_index(p: &Poly2) -> Result<u64, PolyError> {
    if !p.is_irreducible() {
        return Err(PolyError::NotIrreducible(p.clone()));
    }
    let m = p.degree().expect("irreducible polynomials are nonzero");
    if m > MAX_INDEX_DEGREE {
        return Err(PolyError::DegreeTooLarge { degree: m, max: MAX_INDEX_DEGREE });
    }
    let pow = 1u64 << m;
    let mut candidates = divisors(pow - 1);
    candidates.extend(divisors(pow + 1));
    candidates.sort_unstable();
    candidates.dedup();
    for n in candidates {
        if fibonacci_poly_mod(n, p)?.is_zero() {
            return Ok(n);
        }
    }
    for n in 1..=pow + 2 {
        if fibonacci_poly_mod(n, p)?.is_zero() {
            return Ok(n);
        }
    }
    unreachable!("[[x,1],[1,0]] is invertible modulo p, so some F_n vanishes")
}
