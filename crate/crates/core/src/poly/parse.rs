//! Text syntax shared by binary and quaternary polynomials: `1+x+x^3`,
//! with `w` for ω and `W` for ω̄ as coefficients (`w*x^2`, `wx^2`, `W`).

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Coef {
    Zero,
    One,
    W,
    WBar,
}

pub(crate) fn parse_terms(s: &str) -> Result<Vec<(Coef, usize)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Invalid("empty polynomial".into()));
    }
    compact.split('+').map(|t| parse_term(t, s)).collect()
}

fn parse_term(t: &str, whole: &str) -> Result<(Coef, usize)> {
    let bad = || Error::Invalid(format!("cannot parse term {t:?} in polynomial {whole:?}"));
    let mut rest = t;
    let mut coef = None;
    if let Some(c) = rest.chars().next() {
        let sym = match c {
            '0' if rest.len() == 1 => Some(Coef::Zero),
            '1' if rest.len() == 1 || rest[1..].starts_with('*') => Some(Coef::One),
            'w' => Some(Coef::W),
            'W' => Some(Coef::WBar),
            _ => None,
        };
        if let Some(sym) = sym {
            coef = Some(sym);
            rest = &rest[1..];
            rest = rest.strip_prefix('*').unwrap_or(rest);
        }
    }
    if rest.is_empty() {
        return coef.map(|c| (c, 0)).ok_or_else(bad);
    }
    let rest = rest.strip_prefix('x').ok_or_else(bad)?;
    let exp = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')
            .and_then(|e| e.parse::<usize>().ok())
            .ok_or_else(bad)?
    };
    Ok((coef.unwrap_or(Coef::One), exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_forms() {
        let t = parse_terms("1 + x + w*x^2 + Wx^3 + w + 0").unwrap();
        assert_eq!(
            t,
            vec![
                (Coef::One, 0),
                (Coef::One, 1),
                (Coef::W, 2),
                (Coef::WBar, 3),
                (Coef::W, 0),
                (Coef::Zero, 0)
            ]
        );
        assert!(parse_terms("").is_err());
        assert!(parse_terms("1++x").is_err());
        assert!(parse_terms("x^").is_err());
        assert!(parse_terms("2x").is_err());
    }
}
