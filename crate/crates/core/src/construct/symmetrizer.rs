use crate::gf2::{nullspace, solve_affine, BitMatrix, BitVec};

/// Index of the unknown `R[i][k]` (`i <= k`) in the row-major upper triangle.
fn upper_index(m: usize, i: usize, k: usize) -> usize {
    let (i, k) = if i <= k { (i, k) } else { (k, i) };
    i * m - i * (i + 1) / 2 + k
}

/// Basis of `{R : R = Rᵗ and (B·R)ᵗ = B·R}` over F₂.
///
/// The unknowns are the `m(m+1)/2` upper-triangle entries of `R`; each pair
/// `i < k` contributes the equation `(BR)[i][k] + (BR)[k][i] = 0`.
pub fn symmetrizer_space(b: &BitMatrix) -> Vec<BitMatrix> {
    assert!(b.is_square(), "symmetrizer_space needs a square matrix");
    let m = b.rows();
    let unknowns = m * (m + 1) / 2;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |k| (i, k))).collect();
    let mut coeff = BitMatrix::zeros(pairs.len(), unknowns);
    for (row, &(i, k)) in pairs.iter().enumerate() {
        for l in 0..m {
            // (BR)[i][k] = sum_l B[i][l] R[l][k]
            if b.get(i, l) {
                let u = upper_index(m, l, k);
                coeff.set(row, u, !coeff.get(row, u));
            }
            if b.get(k, l) {
                let u = upper_index(m, l, i);
                coeff.set(row, u, !coeff.get(row, u));
            }
        }
    }
    if pairs.is_empty() {
        return vec![BitMatrix::identity(m)];
    }
    nullspace(&coeff).iter().map(|v| BitMatrix::symmetric_from_upper(m, v)).collect()
}

/// Whether `x ∈ span{I, B, …, B^{m−1}}`, solved as a linear system in the
/// `m²`-dimensional matrix space.
pub fn is_polynomial_in(b: &BitMatrix, x: &BitMatrix) -> bool {
    let m = b.rows();
    assert!(b.is_square() && x.rows() == m && x.cols() == m, "is_polynomial_in needs matching square matrices");
    let mut powers = Vec::with_capacity(m);
    let mut p = BitMatrix::identity(m);
    for _ in 0..m {
        powers.push(p.flatten());
        p = &p * b;
    }
    solve_affine(&BitMatrix::from_columns(&powers), &x.flatten()).is_ok()
}

/// Every element of the span of `basis`, in Gray-code order.
fn span_elements(basis: &[BitMatrix], m: usize) -> Vec<BitMatrix> {
    assert!(basis.len() <= 24, "span of dimension {} is too large to enumerate", basis.len());
    let mut out = Vec::with_capacity(1 << basis.len());
    let mut cur = BitMatrix::zeros(m, m);
    out.push(cur.clone());
    for k in 1u32..(1 << basis.len()) {
        cur = &cur + &basis[k.trailing_zeros() as usize];
        out.push(cur.clone());
    }
    out
}

fn alternating(r: &BitMatrix) -> bool {
    r.diag().is_zero()
}

/// Invertible symmetrizers of `b` in preference order: non-polynomial before
/// polynomial, then non-alternating (nonzero diagonal) before alternating,
/// then involutions (`R² = I`) first, then lexicographic.
pub fn symmetrizer_candidates(b: &BitMatrix) -> Vec<BitMatrix> {
    let m = b.rows();
    let id = BitMatrix::identity(m);
    let mut keyed: Vec<((bool, bool, bool), BitMatrix)> = span_elements(&symmetrizer_space(b), m)
        .into_iter()
        .filter(BitMatrix::is_invertible)
        .map(|r| ((is_polynomial_in(b, &r), alternating(&r), (&r * &r) != id), r))
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.lex_cmp(&y.1)));
    keyed.into_iter().map(|(_, r)| r).collect()
}

/// An invertible symmetrizer of `b`; with `require_nonpoly` it must also not
/// be a polynomial in `b`. Preference as in [`symmetrizer_candidates`] after
/// the polynomial split.
pub fn find_symmetrizer(b: &BitMatrix, require_nonpoly: bool) -> Option<BitMatrix> {
    let m = b.rows();
    let id = BitMatrix::identity(m);
    span_elements(&symmetrizer_space(b), m)
        .into_iter()
        .filter(|r| r.is_invertible() && !(require_nonpoly && is_polynomial_in(b, r)))
        .min_by(|x, y| {
            (alternating(x), (x * x) != id)
                .cmp(&(alternating(y), (y * y) != id))
                .then_with(|| x.lex_cmp(y))
        })
}

/// Spanning vectors (upper triangles) of `{p(B)·R} + {diagonal matrices}`.
fn excluded_span(b: &BitMatrix, r: &BitMatrix) -> BitMatrix {
    let m = b.rows();
    let mut vectors = Vec::with_capacity(2 * m);
    let mut p = r.clone();
    for _ in 0..m {
        vectors.push(p.upper_triangle());
        p = b * &p;
    }
    for i in 0..m {
        let mut e = BitMatrix::zeros(m, m);
        e.set(i, i, true);
        vectors.push(e.upper_triangle());
    }
    BitMatrix::from_columns(&vectors)
}

/// Whether the symmetric `a` differs from every `p(B)·R + D` with `p` a
/// polynomial and `D` diagonal, i.e. `a` lies outside that linear space.
pub fn admits_single_factorizable(b: &BitMatrix, r: &BitMatrix, a: &BitMatrix) -> bool {
    a.is_symmetric() && solve_affine(&excluded_span(b, r), &a.upper_triangle()).is_err()
}

/// First symmetric `A` (lexicographic order) satisfying
/// [`admits_single_factorizable`].
///
/// The excluded space has dimension at most `2m`, so when there are more
/// than `2m` upper-triangle positions a hit occurs among the first
/// `2^(2m+1)` candidates; the scan never needs more than 64 counter bits.
pub fn find_a(b: &BitMatrix, r: &BitMatrix) -> Option<BitMatrix> {
    let m = b.rows();
    let n = m * (m + 1) / 2;
    let span = excluded_span(b, r);
    let bits = n.min(2 * m + 1).min(63);
    (0u64..1 << bits).find_map(|counter| {
        let upper = counter_to_upper(n, counter);
        let in_span = solve_affine(&span, &upper).is_ok();
        (!in_span).then(|| BitMatrix::symmetric_from_upper(m, &upper))
    })
}

/// Upper-triangle vector for a counter whose most significant of `n` bits is
/// entry (0,0); counting up walks symmetric matrices in lexicographic order.
pub(crate) fn counter_to_upper(n: usize, counter: u64) -> BitVec {
    let mut v = BitVec::zeros(n);
    for t in 0..n.min(64) {
        if counter >> t & 1 == 1 {
            v.set(n - 1 - t, true);
        }
    }
    v
}
