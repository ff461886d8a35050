use super::StabilizerSpec;
use crate::gf2::BitMatrix;
use crate::poly::Poly2;

/// The symplectic form `J = [[0, I], [I, 0]]` on `F₂^{2m}`.
pub fn symplectic_form(m: usize) -> BitMatrix {
    let z = BitMatrix::zeros(m, m);
    let i = BitMatrix::identity(m);
    BitMatrix::from_blocks(&z, &i, &i, &z).expect("square blocks")
}

/// Whether `Xᵗ·J·X = J` over F₂.
pub fn is_symplectic_matrix(x: &BitMatrix) -> bool {
    if !x.is_square() || !x.rows().is_multiple_of(2) {
        return false;
    }
    let j = symplectic_form(x.rows() / 2);
    &(&x.transpose() * &j) * x == j
}

/// `p(B)` by Horner's rule.
pub fn poly_eval(p: &Poly2, b: &BitMatrix) -> BitMatrix {
    let n = b.rows();
    let mut acc = BitMatrix::zeros(n, n);
    let id = BitMatrix::identity(n);
    for e in (0..=p.degree().unwrap_or(0)).rev() {
        acc = &acc * b;
        if p.coeff(e) {
            acc = &acc + &id;
        }
    }
    acc
}

/// The `2m × 2m` stabilizer matrix of a spec.
///
/// * field: `[[B, I], [I, 0]]`
/// * group: `[[B, R], [R⁻¹, 0]]`
/// * semigroup: `[[B + A·R⁻¹, R + B·A + A·R⁻¹·A], [R⁻¹, R⁻¹·A]]`
pub fn build_stabilizer(spec: &StabilizerSpec) -> BitMatrix {
    let m = spec.m();
    let (b, r, a) = (spec.b(), spec.r(), spec.a());
    let blocks = match spec.kind() {
        super::SetKind::Field => {
            let i = BitMatrix::identity(m);
            [b.clone(), i.clone(), i, BitMatrix::zeros(m, m)]
        }
        super::SetKind::Group => {
            let r_inv = r.inverse().expect("validated invertible");
            [b.clone(), r.clone(), r_inv, BitMatrix::zeros(m, m)]
        }
        super::SetKind::Semigroup => {
            let r_inv = r.inverse().expect("validated invertible");
            let ar = a * &r_inv;
            let upper_left = b + &ar;
            let upper_right = &(r + &(b * a)) + &(&ar * a);
            let lower_right = &r_inv * a;
            [upper_left, upper_right, r_inv, lower_right]
        }
    };
    let [ul, ur, ll, lr] = &blocks;
    BitMatrix::from_blocks(ul, ur, ll, lr).expect("m x m blocks")
}

/// `C^j`.
pub fn stabilizer_powers(c: &BitMatrix, j: u64) -> BitMatrix {
    c.pow(j)
}

/// True iff `C^{d+1} = I` and `C^j ≠ I` for `1 ≤ j ≤ d`.
pub fn cyclicity_check(c: &BitMatrix, d: u64) -> bool {
    if !c.is_square() {
        return false;
    }
    let mut power = c.clone();
    for _ in 1..=d {
        if power.is_identity() {
            return false;
        }
        power = &power * c;
    }
    power.is_identity()
}
