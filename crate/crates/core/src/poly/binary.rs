use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{ones, words_for, BinVec};

use super::parse::{parse_terms, Coef};

/// Polynomial over GF(2), coefficients packed lowest degree first.
///
/// The word vector never ends in a zero word, so the zero polynomial is the
/// empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinPoly {
    words: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Self {
            words: vec![0; k / 64 + 1],
        };
        p.words[k / 64] = 1 << (k % 64);
        p
    }

    /// `x^n - 1`, which equals `x^n + 1` over GF(2).
    pub fn x_n_minus_1(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.flip(0);
        p
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip(e);
        }
        p
    }

    /// Coefficient list, lowest degree first.
    pub fn from_coeffs(coeffs: &[bool]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c {
                p.flip(i);
            }
        }
        p
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    /// Integer encoding: bit `i` of `v` is the coefficient of `x^i`.
    pub fn from_u64(v: u64) -> Self {
        Self::from_words(vec![v])
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    /// Degree with the zero polynomial mapped to 0. Convenient for dimension
    /// counts where `gcd` never returns zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        ones(&self.words).collect()
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn coeffs(&self) -> Vec<bool> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        Self::from_words(words)
    }

    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut words = vec![0u64; self.words.len() + k / 64 + 1];
        let (ws, bs) = (k / 64, k % 64);
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        Self::from_words(words)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let len = a.deg() + b.deg() + 1;
        let mut words = vec![0u64; words_for(len) + 1];
        for e in a.exponents() {
            let (ws, bs) = (e / 64, e % 64);
            for (i, &w) in b.words.iter().enumerate() {
                words[i + ws] ^= w << bs;
                if bs != 0 && i + ws + 1 < words.len() {
                    words[i + ws + 1] ^= w >> (64 - bs);
                }
            }
        }
        Self::from_words(words)
    }

    pub fn divmod(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let s = rd - dd;
            q.flip(s);
            r = r.add(&d.shl(s));
        }
        Ok((q, r))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divmod(d)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// `(g, s, t)` with `g = gcd = s*self + t*other`.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.add(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.add(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        (r0, s0, t0)
    }

    /// Inverse modulo `m`, when `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).ok()?.ext_gcd(m);
        g.is_one().then(|| s.rem(m).expect("nonzero modulus"))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        self.divmod(&g).expect("nonzero gcd").0.mul(other)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn mulmod(&self, other: &Self, m: &Self) -> Result<Self> {
        self.mul(other).rem(m)
    }

    pub fn powmod(&self, mut e: u64, m: &Self) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one().rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m)?;
            }
            base = base.mulmod(&base, m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Formal derivative. Over GF(2) only odd exponents survive.
    pub fn derivative(&self) -> Self {
        let exps: Vec<usize> = self.exponents().into_iter().filter(|e| e % 2 == 1).map(|e| e - 1).collect();
        Self::from_exponents(&exps)
    }

    /// Coefficient sequence equals its own reverse.
    pub fn is_palindromic(&self) -> bool {
        let c = self.coeffs();
        c.iter().eq(c.iter().rev())
    }

    /// `x^deg p(1/x)`.
    pub fn reciprocal(&self) -> Self {
        let c = self.coeffs();
        Self::from_coeffs(&c.into_iter().rev().collect::<Vec<_>>())
    }

    /// Reduction modulo `x^n - 1` as a length-`n` coefficient vector.
    pub fn to_cyclic_vec(&self, n: usize) -> BinVec {
        let mut v = BinVec::zeros(n);
        if n > 0 {
            for e in self.exponents() {
                v.flip(e % n);
            }
        }
        v
    }

    pub fn from_vec(v: &BinVec) -> Self {
        Self::from_exponents(&v.support())
    }
}

impl Ord for BinPoly {
    /// Degree first, then coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BinPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl FromStr for BinPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Self::zero();
        for (coef, e) in parse_terms(s)? {
            match coef {
                Coef::Zero => {}
                Coef::One => p.flip(e),
                Coef::W | Coef::WBar => {
                    return Err(Error::Invalid(format!(
                        "GF(4) coefficient in binary polynomial {s:?}"
                    )))
                }
            }
        }
        Ok(p)
    }
}

impl serde::Serialize for BinPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for BinPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^2+1").gcd(&p("x+1")), p("1+x"));
        assert_eq!(p("1+x^3").gcd(&p("x^5+1")), p("1+x"));
        assert_eq!(p("x+1").mul(&p("x+1")), p("1+x^2"));
    }

    #[test]
    fn division_by_zero() {
        assert!(matches!(p("x").divmod(&BinPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn palindromes() {
        assert!(p("1+x+x^3+x^6+x^8+x^9").is_palindromic());
        assert!(p("1+x").is_palindromic());
        assert!(!p("1+x^2+x^3").is_palindromic());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p(" 1 + x + x^3 + x^7 ").to_string(), "1+x+x^3+x^7");
        assert_eq!(p("x+x").to_string(), "0");
        assert_eq!(p("x^70").degree(), Some(70));
        assert!("1+wx".parse::<BinPoly>().is_err());
        assert!("1+y".parse::<BinPoly>().is_err());
    }

    #[test]
    fn inverse_mod_examples() {
        let m = p("1+x+x^3");
        let a = p("x+x^2");
        let inv = a.inverse_mod(&m).unwrap();
        assert!(a.mulmod(&inv, &m).unwrap().is_one());
        assert!(p("1+x").inverse_mod(&p("1+x^2")).is_none());
    }

    #[test]
    fn wide_multiplication() {
        let a = BinPoly::x_n_minus_1(100);
        let b = p("1+x");
        let prod = a.mul(&b);
        assert_eq!(prod, p("1+x+x^100+x^101"));
        let (q, r) = prod.divmod(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
    }
}
