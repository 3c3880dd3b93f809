//! Built-in corpus of example codes with their expected parameters.

use serde::{Deserialize, Serialize};

use crate::construct::{
    bicycle_spec, circulant_spec, hyperbicycle, hyperbicycle_noncss, repeated_cyclic_inputs,
    trace_dual_generator, CssCode, HyperbicycleSpec, NonCssCode,
};
use crate::error::{Error, Result};
use crate::poly::{BinPoly, F4Poly};

/// How a catalog code is built. Polynomials are kept as strings so the
/// catalog can be printed as-is.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Recipe {
    /// Generalized bicycle code of `(f1, f2)` on `n` bits, CSS or not.
    Bicycle { f1: String, f2: String, n: usize, css: bool },
    /// Hyperbicycle code whose `a_i` and `b_i` are split from the
    /// circulants of `pa` and `pb` on `c * n_small` bits. With `repeated`,
    /// the polynomials must divide `x^n_small - 1`.
    Hyperbicycle {
        n_small: usize,
        c: usize,
        chi: usize,
        pa: String,
        pb: String,
        css: bool,
        repeated: bool,
    },
    /// Generalized bicycle code from the best single generator of the
    /// trace dual of the `F4` cyclic code generated by the product of
    /// `rho`.
    TraceDual { rho: Vec<String>, n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    Exact,
    Bracket,
    UpperWitness,
}

/// Expected distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum ExpectedD {
    Exact { d: usize },
    Bracket { lo: usize, hi: usize },
    AtMost { d: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Budget {
    /// Seconds.
    Quick,
    /// Minutes; skipped by the quick tier.
    Full,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DistanceClaim {
    pub expected: ExpectedD,
    pub tier: Tier,
    /// The enumeration must rule out every logical up to this weight.
    pub clean_to: usize,
    pub budget: Budget,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogEntry {
    pub name: String,
    pub anchor: String,
    pub recipe: Recipe,
    pub n: usize,
    pub k: usize,
    pub distance: Option<DistanceClaim>,
    /// Set when the recipe is known not to reproduce the expected values.
    pub known_deviation: Option<String>,
}

#[derive(Clone, Debug)]
pub enum AnyCode {
    Css(CssCode),
    NonCss(NonCssCode),
}

impl AnyCode {
    pub fn n(&self) -> usize {
        match self {
            AnyCode::Css(c) => c.n(),
            AnyCode::NonCss(c) => c.n(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            AnyCode::Css(c) => c.k(),
            AnyCode::NonCss(c) => c.k(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Built {
    pub code: AnyCode,
    pub spec: Option<HyperbicycleSpec>,
}

fn poly(s: &str) -> Result<BinPoly> {
    s.parse()
}

impl Recipe {
    pub fn build(&self) -> Result<Built> {
        let (spec, css) = match self {
            Recipe::Bicycle { f1, f2, n, css } => (bicycle_spec(&poly(f1)?, &poly(f2)?, *n)?, *css),
            Recipe::Hyperbicycle {
                n_small,
                c,
                chi,
                pa,
                pb,
                css,
                repeated,
            } => {
                let (pa, pb) = (poly(pa)?, poly(pb)?);
                let spec = if *repeated {
                    repeated_cyclic_inputs(&pa, *n_small, &pb, *n_small, *c, *chi)?
                } else {
                    circulant_spec(*n_small, *c, *chi, &pa, &pb)?
                };
                (spec, *css)
            }
            Recipe::TraceDual { rho, n } => {
                let mut prod = F4Poly::one();
                for f in rho {
                    prod = prod.mul(&f.parse()?);
                }
                let g = trace_dual_generator(&prod, *n)?;
                (bicycle_spec(&g.f1, &g.f2, *n)?, true)
            }
        };
        let code = if css {
            AnyCode::Css(hyperbicycle(&spec)?)
        } else {
            AnyCode::NonCss(hyperbicycle_noncss(&spec)?)
        };
        Ok(Built { code, spec: Some(spec) })
    }
}

impl CatalogEntry {
    pub fn build(&self) -> Result<Built> {
        self.recipe.build()
    }

    /// Builds the code and checks N and K against the expected values.
    pub fn check_nk(&self) -> Result<Built> {
        let b = self.build()?;
        if (b.code.n(), b.code.k()) != (self.n, self.k) {
            return Err(Error::Invalid(format!(
                "{}: expected [[{},{}]], got [[{},{}]]",
                self.name,
                self.n,
                self.k,
                b.code.n(),
                b.code.k()
            )));
        }
        Ok(b)
    }
}

fn monomial_sum(e: &[usize]) -> String {
    e.iter()
        .map(|&i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect::<Vec<_>>()
        .join("+")
}

fn claim(expected: ExpectedD, tier: Tier, clean_to: usize, budget: Budget) -> Option<DistanceClaim> {
    Some(DistanceClaim {
        expected,
        tier,
        clean_to,
        budget,
    })
}

fn exact(d: usize, budget: Budget) -> Option<DistanceClaim> {
    claim(ExpectedD::Exact { d }, Tier::Exact, d - 1, budget)
}

fn witness(d: usize, clean_to: usize, budget: Budget) -> Option<DistanceClaim> {
    claim(ExpectedD::Exact { d }, Tier::Bracket, clean_to, budget)
}

fn entry(name: &str, anchor: &str, recipe: Recipe, n: usize, k: usize, distance: Option<DistanceClaim>) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        anchor: anchor.into(),
        recipe,
        n,
        k,
        distance,
        known_deviation: None,
    }
}

fn hb(n_small: usize, c: usize, chi: usize, h: &str, repeated: bool) -> Recipe {
    Recipe::Hyperbicycle {
        n_small,
        c,
        chi,
        pa: h.into(),
        pb: h.into(),
        css: true,
        repeated,
    }
}

/// The full example corpus.
pub fn catalog() -> Vec<CatalogEntry> {
    use Budget::{Full, Quick};
    let mut out = Vec::new();

    for t in 1..=4usize {
        let n = t * t + (t + 1) * (t + 1);
        let d = 2 * t + 1;
        let f1 = monomial_sum(&[0, 2 * t * t + 1]);
        let f2 = monomial_sum(&[1, 2 * t * t]);
        let budget = if t <= 2 { Quick } else { Full };
        out.push(entry(
            &format!("gb-rotated-toric-t{t}"),
            &format!("CSS odd-distance rotated toric GB family, t={t}"),
            Recipe::Bicycle { f1, f2, n, css: true },
            2 * n,
            2,
            exact(d, budget),
        ));
    }
    for t in 1..=4usize {
        let n = t * t + (t + 1) * (t + 1);
        let d = 2 * t + 1;
        let f1 = monomial_sum(&[t, t + 2 * t * t + 1]);
        let f2 = monomial_sum(&[t + 1, t + 2 * t * t]);
        let budget = if t <= 2 { Quick } else { Full };
        out.push(entry(
            &format!("noncss-rotated-toric-t{t}"),
            &format!("non-CSS smallest odd-distance rotated toric family, t={t}"),
            Recipe::Bicycle { f1, f2, n, css: false },
            n,
            1,
            if t <= 2 { exact(d, budget) } else { witness(d, 6, budget) },
        ));
    }

    let mut td = entry(
        "gb-trace-dual-60-40",
        "GB code from the trace dual of rho = (1+x)^2 (1+wx)(1+x+wx^2), n=30",
        Recipe::TraceDual {
            rho: ["1+x", "1+x", "1+w*x", "1+x+w*x^2"].map(String::from).to_vec(),
            n: 30,
        },
        60,
        40,
        exact(4, Quick),
    );
    td.known_deviation = Some(
        "the (1+x)^2 component of the trace dual is a free rank-2 module, so no single \
         GB generator spans the 10-dimensional dual; the best generator spans 8 and gives [[60,44,2]]"
            .into(),
    );
    out.push(td);
    out.push(entry(
        "gb-60-40-searched",
        "GB pair with the trace-dual example's parameters, found by seeded search over divisor products",
        Recipe::Bicycle {
            f1: monomial_sum(&[0, 6, 7, 8, 14, 17, 18, 20, 22, 24, 26, 27]),
            f2: monomial_sum(&[3, 5, 10, 11, 14, 15, 16, 17, 19, 21, 22, 23, 24, 27, 28]),
            n: 30,
            css: true,
        },
        60,
        40,
        exact(4, Quick),
    ));

    out.push(entry(
        "toric-18",
        "toric code as the hypergraph product of the length-3 repetition code",
        hb(3, 1, 1, "1+x", false),
        18,
        2,
        exact(3, Quick),
    ));
    out.push(entry(
        "hp-450-98",
        "hypergraph product of the cyclic code with h = 1+x+x^3+x^7, n=15",
        hb(15, 1, 1, "1+x+x^3+x^7", false),
        450,
        98,
        witness(5, 3, Full),
    ));
    out.push(entry(
        "toric-450-2",
        "toric counterpart of the [[450,98]] product, h = 1+x, n=15",
        hb(15, 1, 1, "1+x", false),
        450,
        2,
        claim(ExpectedD::AtMost { d: 15 }, Tier::UpperWitness, 0, Full),
    ));
    out.push(entry(
        "repeated-cyclic-294",
        "circulants of h = 1+x+x^3 on n=7 (the [7,3,4] code), c=3, chi=1",
        hb(7, 3, 1, "1+x+x^3", true),
        294,
        18,
        claim(ExpectedD::Bracket { lo: 4, hi: 12 }, Tier::Bracket, 0, Full),
    ));
    out.push(entry(
        "repeated-15-5-900",
        "repeated [15,5,7] inputs, h = 1+x+x^3+x^5, c=2, chi=1",
        hb(15, 2, 1, "1+x+x^3+x^5", true),
        900,
        50,
        claim(ExpectedD::AtMost { d: 14 }, Tier::UpperWitness, 0, Full),
    ));

    for (n_small, t) in [(3usize, 1usize), (2, 1), (2, 2), (3, 2)] {
        let c = t * t + (t + 1) * (t + 1);
        let chi = 2 * t + 1;
        let n = 2 * n_small * n_small * c;
        let name = if (n_small, t) == (3, 1) {
            "rotated-toric-90".to_string()
        } else {
            format!("rotated-toric-{n}")
        };
        let d = n_small * chi;
        let dist = if (n_small, t) == (3, 1) {
            witness(9, 6, Full)
        } else if n == 40 {
            exact(6, Quick)
        } else {
            witness(d, 0, Full)
        };
        out.push(entry(
            &name,
            &format!("CSS rotated toric hyperbicycle family, n={n_small}, c={c}, chi={chi}"),
            hb(n_small, c, chi, "1+x", false),
            n,
            2,
            dist,
        ));
    }

    out.push(entry(
        "hb-90-8",
        "[15,4,8] cyclic code with generator polynomial 1+x^3+x^4, c=5, chi=3",
        hb(3, 5, 3, "1+x^3+x^4", false),
        90,
        8,
        witness(8, 5, Full),
    ));
    out.push(entry(
        "hb-90-10",
        "[15,5,7] cyclic code with check polynomial 1+x+x^3+x^5, c=5, chi=3",
        hb(3, 5, 3, "1+x+x^3+x^5", false),
        90,
        10,
        witness(7, 5, Full),
    ));
    for (chi, k, d) in [(3, 8, 10), (1, 14, 6)] {
        out.push(entry(
            &format!("hb-126-{k}"),
            &format!("[21,5,10] cyclic code with check polynomial 1+x+x^5, c=7, chi={chi}"),
            hb(3, 7, chi, "1+x+x^5", false),
            126,
            k,
            witness(d, 0, Full),
        ));
    }
    for (chi, d) in [(3, 8), (1, 6)] {
        out.push(entry(
            &format!("hb-180-16-chi{chi}"),
            &format!("[30,8,8] cyclic code with check polynomial 1+x^2+x^8, c=10, chi={chi}"),
            hb(3, 10, chi, "1+x^2+x^8", false),
            180,
            16,
            witness(d, 0, Full),
        ));
    }
    for (chi, d) in [(2, 4), (1, 2)] {
        out.push(entry(
            &format!("hb-120-32-chi{chi}"),
            &format!("[30,8,8] cyclic code with check polynomial 1+x^2+x^8, c=15, chi={chi}"),
            hb(2, 15, chi, "1+x^2+x^8", false),
            120,
            32,
            exact(d, Quick),
        ));
    }

    out.push(entry(
        "noncss-289-81",
        "non-CSS hyperbicycle from the symmetric circulant of x^4 (1+x+x^3+x^6+x^8+x^9), n=17, c=1",
        Recipe::Hyperbicycle {
            n_small: 17,
            c: 1,
            chi: 1,
            pa: "x^4+x^5+x^7+x^10+x^12+x^13".into(),
            pb: "x^4+x^5+x^7+x^10+x^12+x^13".into(),
            css: false,
            repeated: false,
        },
        289,
        81,
        witness(5, 4, Full),
    ));

    for (m, h) in [(2usize, "1+x^3"), (3, "1+x+x^2+x^4")] {
        let n = (1 << m) - 1;
        let d = 2 * ((1 << (m - 1)) - 1);
        out.push(entry(
            &format!("reed-muller-m{m}"),
            &format!("repeated shortened Reed-Muller inputs, m={m}, c=2, chi=1"),
            hb(n, 2, 1, h, true),
            4 * n * n,
            2 * (m + 1) * (m + 1),
            if m == 2 { exact(d, Quick) } else { witness(d, 0, Full) },
        ));
    }
    out
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<String> = catalog().into_iter().map(|e| e.name).collect();
        let len = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), len);
    }

    #[test]
    fn small_entries_match() {
        for name in ["gb-rotated-toric-t1", "noncss-rotated-toric-t2", "toric-18", "rotated-toric-40"] {
            find(name).unwrap().check_nk().unwrap();
        }
    }

    #[test]
    fn mutated_recipe_is_caught() {
        let mut e = find("hb-90-10").unwrap();
        if let Recipe::Hyperbicycle { pa, .. } = &mut e.recipe {
            *pa = "1+x+x^3+x^4".into();
        }
        assert!(e.check_nk().is_err());
    }
}
