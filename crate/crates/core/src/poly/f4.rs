use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BinVec;

use super::parse::{parse_terms, Coef};
use super::BinPoly;

/// Element `u + ωv` of GF(4), stored as the bit pair `(v, u)`.
///
/// `v` is the x-part and `u` the z-part of the corresponding Pauli, so the
/// trace inner product of two symbols is the symplectic form `v1 u2 + u1 v2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0b00);
    pub const ONE: F4 = F4(0b01);
    pub const W: F4 = F4(0b10);
    pub const WBAR: F4 = F4(0b11);

    pub const fn from_parts(v: bool, u: bool) -> Self {
        F4(((v as u8) << 1) | u as u8)
    }

    /// Coefficient of ω (x-part).
    pub const fn v(self) -> bool {
        self.0 & 0b10 != 0
    }

    /// Coefficient of 1 (z-part).
    pub const fn u(self) -> bool {
        self.0 & 0b01 != 0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius conjugation ω ↔ ω̄.
    pub const fn conj(self) -> Self {
        // u + ωv -> u + v + ωv
        F4(self.0 ^ (self.0 >> 1))
    }

    /// Absolute trace `e + ē`; equals the ω-coefficient.
    pub const fn trace(self) -> bool {
        self.v()
    }

    pub fn inv(self) -> Result<Self> {
        match self {
            F4::ZERO => Err(Error::DivisionByZero),
            F4::ONE => Ok(F4::ONE),
            F4::W => Ok(F4::WBAR),
            _ => Ok(F4::W),
        }
    }
}

impl Add for F4 {
    type Output = F4;
    fn add(self, o: F4) -> F4 {
        F4(self.0 ^ o.0)
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, o: F4) -> F4 {
        // (a + bω)(c + dω) = ac + bd + (ad + bc + bd)ω, using ω² = ω + 1
        let (a, b) = (self.u(), self.v());
        let (c, d) = (o.u(), o.v());
        F4::from_parts((a & d) ^ (b & c) ^ (b & d), (a & c) ^ (b & d))
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match *self {
            F4::ZERO => "0",
            F4::ONE => "1",
            F4::W => "w",
            _ => "W",
        })
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Trace inner product `Σ e1 ē2 + ē1 e2`, reduced to a bit.
pub fn f4_trace_inner(a: &[F4], b: &[F4]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "trace inner product of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let mut acc = F4::ZERO;
    for (&x, &y) in a.iter().zip(b) {
        acc = acc + x * y.conj() + x.conj() * y;
    }
    debug_assert!(acc == F4::ZERO || acc == F4::ONE);
    Ok(acc == F4::ONE)
}

/// Polynomial over GF(4), lowest degree first, no trailing zero symbol.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F4Poly {
    coeffs: Vec<F4>,
}

impl F4Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![F4::ONE])
    }

    pub fn from_coeffs(mut coeffs: Vec<F4>) -> Self {
        while coeffs.last() == Some(&F4::ZERO) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_binary(p: &BinPoly) -> Self {
        Self::from_coeffs(
            p.coeffs()
                .into_iter()
                .map(|b| if b { F4::ONE } else { F4::ZERO })
                .collect(),
        )
    }

    /// `ω f1 + f2`: x-part from `f1`, z-part from `f2`.
    pub fn from_parts(f1: &BinPoly, f2: &BinPoly) -> Self {
        let n = f1.deg().max(f2.deg()) + 1;
        Self::from_coeffs((0..n).map(|i| F4::from_parts(f1.coeff(i), f2.coeff(i))).collect())
    }

    /// Splits into `(f1, f2)` with `self = ω f1 + f2`.
    pub fn parts(&self) -> (BinPoly, BinPoly) {
        let v: Vec<bool> = self.coeffs.iter().map(|c| c.v()).collect();
        let u: Vec<bool> = self.coeffs.iter().map(|c| c.u()).collect();
        (BinPoly::from_coeffs(&v), BinPoly::from_coeffs(&u))
    }

    pub fn coeffs(&self) -> &[F4] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F4 {
        self.coeffs.get(i).copied().unwrap_or(F4::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> F4 {
        self.coeffs.last().copied().unwrap_or(F4::ZERO)
    }

    pub fn scale(&self, s: F4) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![F4::ZERO; k];
        c.extend_from_slice(&self.coeffs);
        Self { coeffs: c }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![F4::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j] + a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn divmod(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.leading().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![F4::ZERO; r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = *r.last().expect("nonempty");
            let s = r.len() - 1 - dd;
            if !top.is_zero() {
                let f = top * inv;
                q[s] = f;
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    r[s + j] = r[s + j] + f * dc;
                }
            }
            r.pop();
        }
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divmod(d)?.1)
    }

    pub fn monic(&self) -> Self {
        match self.leading().inv() {
            Ok(inv) => self.scale(inv),
            Err(_) => Self::zero(),
        }
    }

    /// Gcd normalized to leading coefficient 1.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Coefficient vector of `self mod (x^n - 1)`.
    pub fn to_cyclic(&self, n: usize) -> Vec<F4> {
        let mut v = vec![F4::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i % n] = v[i % n] + c;
        }
        v
    }
}

/// Binary image `(v | u)` of a quaternary vector: x-parts then z-parts.
pub fn f4_vec_to_binary(e: &[F4]) -> BinVec {
    let n = e.len();
    let mut out = BinVec::zeros(2 * n);
    for (i, s) in e.iter().enumerate() {
        out.set(i, s.v());
        out.set(n + i, s.u());
    }
    out
}

impl fmt::Display for F4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, &c)| {
                let mono = match e {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{e}"),
                };
                match (c, e) {
                    (F4::ONE, 0) => "1".into(),
                    (F4::ONE, _) => mono,
                    (_, 0) => c.to_string(),
                    _ => format!("{c}*{mono}"),
                }
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for F4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F4Poly({self})")
    }
}

impl FromStr for F4Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Self::zero();
        for (coef, e) in parse_terms(s)? {
            let c = match coef {
                Coef::Zero => F4::ZERO,
                Coef::One => F4::ONE,
                Coef::W => F4::W,
                Coef::WBar => F4::WBAR,
            };
            let mut v = vec![F4::ZERO; e + 1];
            v[e] = c;
            p = p.add(&Self::from_coeffs(v));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::W, F4::WBAR];

    #[test]
    fn field_axioms() {
        assert_eq!(F4::W * F4::W, F4::W + F4::ONE);
        assert_eq!(F4::W * F4::WBAR, F4::ONE);
        assert_eq!(F4::W.conj(), F4::WBAR);
        for a in ALL {
            for b in ALL {
                assert_eq!(a * b, b * a);
                for c in ALL {
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), F4::ONE);
            }
        }
    }

    #[test]
    fn trace_inner_examples() {
        assert!(!f4_trace_inner(&[F4::W], &[F4::W]).unwrap());
        assert!(f4_trace_inner(&[F4::ONE], &[F4::W]).unwrap());
        assert!(!f4_trace_inner(&[F4::ZERO, F4::ZERO], &[F4::W, F4::ONE]).unwrap());
        assert!(f4_trace_inner(&[F4::ONE], &[]).is_err());
    }

    #[test]
    fn trace_inner_is_symplectic_form() {
        for a in ALL {
            for b in ALL {
                let sym = (a.v() & b.u()) ^ (a.u() & b.v());
                assert_eq!(f4_trace_inner(&[a], &[b]).unwrap(), sym);
            }
        }
    }

    #[test]
    fn poly_arith() {
        let p: F4Poly = "1+w*x".parse().unwrap();
        let q: F4Poly = "1+W*x".parse().unwrap();
        // (1 + ωx)(1 + ω̄x) = 1 + x + x²
        assert_eq!(p.mul(&q), "1+x+x^2".parse().unwrap());
        let (quo, r) = p.mul(&q).divmod(&p).unwrap();
        assert_eq!(quo, q);
        assert!(r.is_zero());
        assert_eq!(p.gcd(&q), F4Poly::one());
        let one_x: F4Poly = "1+x".parse().unwrap();
        assert_eq!("wx+w".parse::<F4Poly>().unwrap().gcd(&one_x.mul(&p)), one_x);
        assert_eq!(p.shl(2).to_string(), "x^2+w*x^3");
    }

    #[test]
    fn part_split() {
        let f1: BinPoly = "1+x^2".parse().unwrap();
        let f2: BinPoly = "x".parse().unwrap();
        let g = F4Poly::from_parts(&f1, &f2);
        assert_eq!(g.to_string(), "w+x+w*x^2");
        assert_eq!(g.parts(), (f1, f2));
    }
}
