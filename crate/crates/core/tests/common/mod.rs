#![allow(dead_code)]

use hyperbicycle::construct::{NonCssCode, Provenance};
use hyperbicycle::{BinMat, BinVec};
use rand::Rng;

fn symplectic(u: &BinVec, v: &BinVec, n: usize) -> bool {
    let mut s = false;
    for i in 0..n {
        s ^= (u.get(i) && v.get(n + i)) ^ (u.get(n + i) && v.get(i));
    }
    s
}

/// Random stabilizer code on `n` qubits with up to `r` independent,
/// pairwise commuting generators `(a|b)`.
pub fn random_stabilizer(rng: &mut impl Rng, n: usize, r: usize) -> NonCssCode {
    let mut rows: Vec<BinVec> = Vec::new();
    for _ in 0..200 {
        if rows.len() == r {
            break;
        }
        let v = BinVec::from_bits((0..2 * n).map(|_| rng.gen_bool(0.35)));
        if v.is_zero() || rows.iter().any(|w| symplectic(w, &v, n)) {
            continue;
        }
        let mut m = rows.clone();
        m.push(v.clone());
        if BinMat::from_rows(2 * n, &m).rank() == m.len() {
            rows.push(v);
        }
    }
    NonCssCode::new(BinMat::from_rows(2 * n, &rows), Provenance::new("random")).unwrap()
}
