//! Polynomials over F₂, Fibonacci polynomials and Fibonacci indices.

mod factor;
mod fibonacci;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use factor::{divisors, prime_factors};
pub use fibonacci::{
    fibonacci_index, fibonacci_matrix_power, fibonacci_poly, fibonacci_poly_mod, MAX_INDEX_DEGREE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial {0} is not irreducible over F2")]
    NotIrreducible(Poly2),
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("invalid polynomial text: {0}")]
    Parse(String),
}

/// A polynomial over F₂.
///
/// Coefficient of `x^i` is bit `i % 64` of word `i / 64`. The word vector has
/// no trailing zero words, so the zero polynomial is the empty vector and the
/// leading coefficient of every other polynomial is 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(degree: usize) -> Self {
        let mut words = vec![0; degree / 64 + 1];
        words[degree / 64] = 1 << (degree % 64);
        Self { words }
    }

    /// Polynomial whose coefficients are the bits of `bits` (bit `i` is the
    /// coefficient of `x^i`).
    pub fn from_u64(bits: u64) -> Self {
        Self::from_words(vec![bits])
    }

    pub fn from_u128(bits: u128) -> Self {
        Self::from_words(vec![bits as u64, (bits >> 64) as u64])
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: &[u8]) -> Self {
        let mut words = vec![0u64; coeffs.len().div_ceil(64)];
        for (i, &c) in coeffs.iter().enumerate() {
            if c & 1 == 1 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Self::from_words(words)
    }

    /// Sum of `x^e` over the given exponents (repeated exponents cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        exps.iter().fold(Self::zero(), |acc, &e| &acc + &Self::monomial(e))
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Coefficient bits as an integer; `None` if the degree exceeds 63.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(&short.words) {
            *a ^= b;
        }
        Self::from_words(words)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut words = vec![0u64; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            let mut a = a;
            while a != 0 {
                let bit = a.trailing_zeros() as usize;
                a &= a - 1;
                let shift = i * 64 + bit;
                xor_shifted(&mut words, &other.words, shift);
            }
        }
        Self::from_words(words)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Quotient and remainder of division by `divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.words.clone();
        let Some(mut rd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if rd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![0u64; (rd - dd) / 64 + 1];
        loop {
            let shift = rd - dd;
            quot[shift / 64] |= 1 << (shift % 64);
            xor_shifted(&mut rem, &divisor.words, shift);
            match top_bit(&rem) {
                Some(d) if d >= dd => rd = d,
                _ => break,
            }
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    pub fn rem(&self, modulus: &Self) -> Result<Self, PolyError> {
        Ok(self.div_rem(modulus)?.1)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    /// `(self · other) mod modulus`.
    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self, PolyError> {
        self.mul(other).rem(modulus)
    }

    /// `x^(2^k) mod modulus`, by `k` successive squarings.
    pub fn x_pow_two_pow_mod(k: usize, modulus: &Self) -> Result<Self, PolyError> {
        let mut acc = Self::x().rem(modulus)?;
        for _ in 0..k {
            acc = acc.square().rem(modulus)?;
        }
        Ok(acc)
    }

    /// Irreducibility over F₂ (Rabin's test).
    ///
    /// `p` of degree `m` is irreducible iff `p | x^(2^m) − x` and
    /// `gcd(p, x^(2^(m/q)) − x) = 1` for each prime `q | m`. Constants and
    /// the zero polynomial are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        let Some(m) = self.degree() else { return false };
        if m == 0 {
            return false;
        }
        let x = Self::x();
        let full = Self::x_pow_two_pow_mod(m, self).expect("nonzero modulus");
        if full != x.rem(self).expect("nonzero modulus") {
            return false;
        }
        prime_factors(m as u64).into_iter().all(|q| {
            let h = Self::x_pow_two_pow_mod(m / q as usize, self).expect("nonzero modulus");
            self.gcd(&(&h + &x)).is_one()
        })
    }

    /// Hex encoding of the coefficient bits, bit `i` ↔ `x^i`; x³+x+1 is `"B"`.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut s = String::new();
        for (i, w) in self.words.iter().rev().enumerate() {
            if i == 0 {
                s.push_str(&format!("{w:X}"));
            } else {
                s.push_str(&format!("{w:016X}"));
            }
        }
        s
    }

    pub fn from_hex(text: &str) -> Result<Self, PolyError> {
        let text = text.trim();
        let text = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")).unwrap_or(text);
        if text.is_empty() {
            return Err(PolyError::Parse("empty hex string".into()));
        }
        let mut words = Vec::new();
        let digits: Vec<char> = text.chars().collect();
        for chunk in digits.rchunks(16) {
            let s: String = chunk.iter().collect();
            let w = u64::from_str_radix(&s, 16)
                .map_err(|e| PolyError::Parse(format!("{text:?}: {e}")))?;
            words.push(w);
        }
        Ok(Self::from_words(words))
    }
}

fn top_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// `dst ^= src << shift`, growing `dst` as needed.
fn xor_shifted(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    let needed = ws + src.len() + 1;
    if dst.len() < needed {
        dst.resize(needed, 0);
    }
    for (k, &s) in src.iter().enumerate() {
        dst[ws + k] ^= s << bs;
        if bs != 0 {
            dst[ws + k + 1] ^= s >> (64 - bs);
        }
    }
}

impl std::ops::Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        Poly2::add(self, rhs)
    }
}

impl std::ops::Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        Poly2::mul(self, rhs)
    }
}

/// Human-readable form, highest degree first: `x^3 + x + 1`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_owned(),
                1 => "x".to_owned(),
                _ => format!("x^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

/// Accepts the hex form of [`Poly2::to_hex`] or the term form printed by
/// `Display`, e.g. `x^3 + x + 1`.
impl FromStr for Poly2 {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if !s.contains('x') || s.trim_start().starts_with("0x") {
            return Self::from_hex(s);
        }
        let mut out = Self::zero();
        for term in s.split('+').map(str::trim) {
            let exp = match term {
                "1" => 0,
                "x" => 1,
                _ => term
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| PolyError::Parse(format!("{s:?}: bad term {term:?}")))?,
            };
            out = &out + &Self::monomial(exp);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[usize]) -> Poly2 {
        Poly2::from_exponents(exps)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[2, 0]) + &p(&[2, 1]), p(&[1, 0]));
        assert_eq!(&p(&[1, 0]) * &p(&[1, 0]), p(&[2, 0]));
        assert_eq!(p(&[2, 0]).gcd(&p(&[1, 0])), p(&[1, 0]));
    }

    #[test]
    fn degree_and_zero() {
        assert_eq!(Poly2::zero().degree(), None);
        assert_eq!(Poly2::one().degree(), Some(0));
        assert_eq!(Poly2::monomial(130).degree(), Some(130));
        assert_eq!(Poly2::from_words(vec![5, 0, 0]).words().len(), 1);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Poly2::one().div_rem(&Poly2::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[100, 65, 64, 3, 0]);
        let b = p(&[7, 1, 0]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().is_none_or(|d| d < 7));
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(p(&[2, 1, 0]).is_irreducible());
        assert!(!p(&[2, 0]).is_irreducible());
        assert!(p(&[3, 1, 0]).is_irreducible());
        assert!(p(&[3, 2, 0]).is_irreducible());
        assert!(!p(&[4, 2, 0]).is_irreducible());
        assert!(p(&[1]).is_irreducible());
        assert!(!Poly2::one().is_irreducible());
        assert!(!Poly2::zero().is_irreducible());
    }

    #[test]
    fn hex_format() {
        assert_eq!(p(&[3, 1, 0]).to_hex(), "B");
        assert_eq!(Poly2::from_hex("B").unwrap(), p(&[3, 1, 0]));
        assert_eq!(Poly2::zero().to_hex(), "0");
        let big = p(&[70, 1]);
        assert_eq!(big.to_hex(), "400000000000000002");
        assert_eq!(Poly2::from_hex(&big.to_hex()).unwrap(), big);
        assert!(Poly2::from_hex("xyz").is_err());
        assert!(Poly2::from_hex("").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[3, 1, 0]).to_string(), "x^3 + x + 1");
        assert_eq!(Poly2::zero().to_string(), "0");
    }
}
