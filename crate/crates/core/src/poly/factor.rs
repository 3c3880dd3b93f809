use serde::Serialize;

use super::BinPoly;

/// Complete factorization of `x^c - 1` over GF(2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub c: usize,
    /// Irreducible factors with multiplicity, sorted by degree then value.
    pub base: Vec<(BinPoly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> BinPoly {
        let mut acc = BinPoly::one();
        for (p, m) in &self.base {
            for _ in 0..*m {
                acc = acc.mul(p);
            }
        }
        acc
    }

    /// The common multiplicity `2^s` where `c = c' 2^s` with `c'` odd.
    pub fn multiplicity(&self) -> usize {
        1 << self.c.trailing_zeros()
    }
}

/// Factors `x^c - 1` by splitting the squarefree part `x^c' - 1`
/// (distinct-degree, then trace-based equal-degree splitting) and assigning
/// multiplicity `2^s` to every irreducible factor.
pub fn factor_xc_minus_1(c: usize) -> Factorization {
    assert!(c >= 1, "x^c - 1 needs c >= 1");
    let s = c.trailing_zeros();
    let odd = c >> s;
    let mut base: Vec<(BinPoly, usize)> = factor_squarefree(&BinPoly::x_n_minus_1(odd))
        .into_iter()
        .map(|p| (p, 1usize << s))
        .collect();
    base.sort();
    Factorization { c, base }
}

fn factor_squarefree(f: &BinPoly) -> Vec<BinPoly> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = BinPoly::x();
    let mut h = x.rem(&f).expect("nonzero");
    let mut d = 0;
    while f.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.mulmod(&h, &f).expect("nonzero");
        let g = h.add(&x).gcd(&f);
        if !g.is_one() {
            equal_degree(&g, d, &mut out);
            f = f.divmod(&g).expect("nonzero").0;
            h = h.rem(&f).expect("nonzero");
        }
    }
    if f.deg() > 0 {
        out.push(f);
    }
    out
}

/// Splits a product of distinct irreducibles, all of degree `d`.
fn equal_degree(g: &BinPoly, d: usize, out: &mut Vec<BinPoly>) {
    if g.deg() == d {
        out.push(g.clone());
        return;
    }
    // Tr(a) = a + a^2 + ... + a^(2^(d-1)) is 0 or 1 modulo each factor;
    // some `a` separates at least two factors.
    for k in 2u64.. {
        let a = BinPoly::from_u64(k);
        if a.deg() >= g.deg() {
            break;
        }
        let mut t = a.clone();
        let mut acc = a.clone();
        for _ in 1..d {
            t = t.mulmod(&t, g).expect("nonzero");
            acc = acc.add(&t);
        }
        let h = acc.gcd(g);
        if !h.is_one() && h.deg() < g.deg() && !h.is_zero() {
            let rest = g.divmod(&h).expect("nonzero").0;
            equal_degree(&h, d, out);
            equal_degree(&rest, d, out);
            return;
        }
    }
    unreachable!("equal-degree splitting found no separating element");
}

/// Rabin's test: `p` of degree `n` is irreducible iff `x^(2^n) = x mod p`
/// and `gcd(x^(2^(n/q)) - x, p) = 1` for every prime `q | n`.
pub fn is_irreducible(p: &BinPoly) -> bool {
    let Some(n) = p.degree() else { return false };
    if n == 0 {
        return false;
    }
    let x = BinPoly::x();
    let frob = |k: usize| {
        let mut h = x.rem(p).expect("nonzero");
        for _ in 0..k {
            h = h.mulmod(&h, p).expect("nonzero");
        }
        h
    };
    if frob(n) != x.rem(p).expect("nonzero") {
        return false;
    }
    let mut m = n;
    let mut q = 2;
    while m > 1 {
        if m % q == 0 {
            if !frob(n / q).add(&x).gcd(p).is_one() {
                return false;
            }
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    true
}

/// All irreducible binary polynomials of degree `1..=max_deg`, generated by
/// a degree-ordered sieve. Exponential in `max_deg`.
pub fn irreducibles_up_to(max_deg: usize) -> Vec<BinPoly> {
    let mut found: Vec<BinPoly> = Vec::new();
    for d in 1..=max_deg {
        let lo = 1u64 << d;
        for v in lo..(lo << 1) {
            let p = BinPoly::from_u64(v);
            if found.iter().take_while(|q| 2 * q.deg() <= d).all(|q| !q.divides(&p)) {
                found.push(p);
            }
        }
    }
    found
}

/// Trial-division factorization of `x^c - 1`. Only practical when the odd
/// part of `c` is small; kept as an independent check on
/// [`factor_xc_minus_1`].
pub fn factor_by_trial_division(c: usize) -> Factorization {
    let s = c.trailing_zeros();
    let odd = c >> s;
    let mut f = BinPoly::x_n_minus_1(odd);
    let mut base = Vec::new();
    for q in irreducibles_up_to(odd) {
        if f.deg() < q.deg() {
            break;
        }
        let (quo, r) = f.divmod(&q).expect("nonzero");
        if r.is_zero() {
            f = quo;
            base.push((q, 1usize << s));
        }
    }
    assert!(f.is_one(), "trial division left cofactor {f}");
    base.sort();
    Factorization { c, base }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factor_xc_minus_1(2).base, vec![(p("1+x"), 2)]);
        assert_eq!(factor_xc_minus_1(3).base, vec![(p("1+x"), 1), (p("1+x+x^2"), 1)]);
        assert_eq!(
            factor_xc_minus_1(5).base,
            vec![(p("1+x"), 1), (p("1+x+x^2+x^3+x^4"), 1)]
        );
        assert_eq!(factor_xc_minus_1(1).base, vec![(p("1+x"), 1)]);
    }

    #[test]
    fn sieve_counts() {
        // Necklace counts of binary irreducibles: 2, 1, 2, 3, 6, 9
        let counts: Vec<usize> = (1..=6)
            .map(|d| irreducibles_up_to(6).iter().filter(|q| q.deg() == d).count())
            .collect();
        assert_eq!(counts, vec![2, 1, 2, 3, 6, 9]);
    }

    #[test]
    fn rabin_agrees_with_sieve() {
        let irr = irreducibles_up_to(8);
        for v in 2u64..512 {
            let q = BinPoly::from_u64(v);
            assert_eq!(is_irreducible(&q), irr.contains(&q), "{q}");
        }
    }
}
