use super::BitMatrix;
use crate::poly::Poly2;

/// Characteristic polynomial `det(x·I + a)` over F₂.
///
/// Fraction-free (Bareiss) elimination on the polynomial matrix `x·I + a`:
/// every intermediate division by the previous pivot is exact in F₂[x].
/// Row swaps only flip the sign of the determinant, which is invisible in
/// characteristic 2.
pub fn char_poly(a: &BitMatrix) -> Poly2 {
    assert!(a.is_square(), "char_poly needs a square matrix");
    let n = a.rows();
    if n == 0 {
        return Poly2::one();
    }
    let mut m: Vec<Vec<Poly2>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = if a.get(i, j) { Poly2::one() } else { Poly2::zero() };
                    if i == j {
                        e = &e + &Poly2::x();
                    }
                    e
                })
                .collect()
        })
        .collect();

    let mut prev = Poly2::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Poly2::zero();
        };
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) + &(&m[i][k] * &m[k][j]);
                let (q, r) = num.div_rem(&prev).expect("pivots are nonzero");
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = Poly2::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].clone()
}
