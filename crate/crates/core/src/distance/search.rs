//! Minimum-weight search for "logical" vectors: `c` with `P c = 0` and
//! `L c != 0`.
//!
//! Classical distance, CSS X/Z distances and non-CSS distances all reduce to
//! this problem with different `P`, `L` and weight functions. Upper bounds
//! come from information-set decoding, lower bounds from meet-in-the-middle
//! enumeration of all low-weight errors keyed by syndrome.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::Dist;
use crate::gf2::{dot, ones, popcount, words_for, xor_into, BinMat, BinVec};

/// How bits are grouped into weight-carrying positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// Every bit is one position.
    Plain,
    /// Bits `2q` and `2q+1` are the X and Z parts of qubit `q`; weight counts
    /// qubits with either part set.
    Paired,
}

const EVEN: u64 = 0x5555_5555_5555_5555;

impl WeightKind {
    pub fn weight(self, words: &[u64]) -> usize {
        match self {
            WeightKind::Plain => popcount(words),
            WeightKind::Paired => words
                .iter()
                .map(|&w| ((w | (w >> 1)) & EVEN).count_ones() as usize)
                .sum(),
        }
    }

    fn xor_weight(self, a: &[u64], b: &[u64]) -> usize {
        match self {
            WeightKind::Plain => a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones() as usize).sum(),
            WeightKind::Paired => a
                .iter()
                .zip(b)
                .map(|(x, y)| {
                    let w = x ^ y;
                    ((w | (w >> 1)) & EVEN).count_ones() as usize
                })
                .sum(),
        }
    }

    fn unit(self) -> usize {
        match self {
            WeightKind::Plain => 1,
            WeightKind::Paired => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LogicalSearch {
    /// `P`: every candidate must satisfy `P c = 0`.
    pub checks: BinMat,
    /// `L`: a candidate is nontrivial iff `L c != 0`.
    pub logicals: BinMat,
    /// Rows of `ker P` with `L r = 0`, used to trim candidates.
    pub stabilizers: BinMat,
    pub kind: WeightKind,
    /// Extra candidates (need not be logical; invalid ones are ignored).
    pub seeds: Vec<BinVec>,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub seed: u64,
    pub isd_iterations: usize,
    /// Maximum number of table entries for the meet-in-the-middle pass.
    pub enum_budget: usize,
    /// Do not enumerate beyond this total weight even if affordable.
    pub enum_weight_cap: Option<usize>,
    /// Stop information-set decoding once a witness this light is found.
    pub known_lower: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            seed: crate::DEFAULT_SEED,
            isd_iterations: 400,
            enum_budget: 1 << 22,
            enum_weight_cap: None,
            known_lower: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub lo: Dist,
    pub hi: Dist,
    pub witness: Option<BinVec>,
    /// Every logical of weight at most this was enumerated.
    pub clean_to: usize,
    pub isd_iterations: usize,
}

impl SearchOutcome {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl LogicalSearch {
    pub fn len(&self) -> usize {
        self.checks.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn positions(&self) -> usize {
        self.len() / self.kind.unit()
    }

    pub fn weight(&self, v: &BinVec) -> usize {
        self.kind.weight(v.words())
    }

    pub fn is_logical(&self, v: &BinVec) -> bool {
        v.len() == self.len() && self.checks.mul_vec(v).is_zero() && !self.logicals.mul_vec(v).is_zero()
    }

    pub fn has_logicals(&self) -> bool {
        !self.logicals.is_zero()
    }

    /// Removes stabilizer rows greedily while the weight drops.
    pub fn trim(&self, v: &mut BinVec) {
        let mut w = self.weight(v);
        loop {
            let mut improved = false;
            for r in 0..self.stabilizers.rows() {
                let nw = self.kind.xor_weight(v.words(), self.stabilizers.row(r));
                if nw < w {
                    xor_into(v.words_mut(), self.stabilizers.row(r));
                    w = nw;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
    }
}

fn better(a: &(usize, BinVec), b: &(usize, BinVec)) -> bool {
    (a.0, &a.1) < (b.0, &b.1)
}

fn keep_best(best: &mut Option<(usize, BinVec)>, cand: (usize, BinVec)) {
    if best.as_ref().is_none_or(|b| better(&cand, b)) {
        *best = Some(cand);
    }
}

fn merge(a: Option<(usize, BinVec)>, b: Option<(usize, BinVec)>) -> Option<(usize, BinVec)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if better(&y, &x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

fn mix(seed: u64, i: u64) -> u64 {
    let mut z = seed ^ i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generator of `ker P` with the signature `L g` appended to every row.
struct Systematic {
    code_words: usize,
    stride: usize,
    rows: usize,
    base: Vec<u64>,
}

impl Systematic {
    fn new(p: &LogicalSearch) -> Self {
        let g = p.checks.kernel_basis();
        let t = p.logicals.rows();
        let code_words = words_for(p.len());
        let stride = code_words + words_for(t);
        let mut base = vec![0u64; g.rows() * stride];
        for r in 0..g.rows() {
            let row = &mut base[r * stride..(r + 1) * stride];
            row[..code_words].copy_from_slice(g.row(r));
            for l in 0..t {
                if dot(g.row(r), p.logicals.row(l)) {
                    row[code_words + l / 64] |= 1 << (l % 64);
                }
            }
        }
        Self {
            code_words,
            stride,
            rows: g.rows(),
            base,
        }
    }

    /// Brings the generator into systematic form on the first independent
    /// columns of `order`; returns the reduced rows.
    fn reduce(&self, order: &[usize]) -> Vec<u64> {
        let s = self.stride;
        let mut m = self.base.clone();
        let mut rank = 0;
        for &col in order {
            if rank == self.rows {
                break;
            }
            let (wi, bit) = (col / 64, 1u64 << (col % 64));
            let Some(piv) = (rank..self.rows).find(|&r| m[r * s + wi] & bit != 0) else {
                continue;
            };
            if piv != rank {
                for w in 0..s {
                    m.swap(piv * s + w, rank * s + w);
                }
            }
            let (head, tail) = m.split_at_mut(rank * s);
            let (prow, tail) = tail.split_at_mut(s);
            for r in head.chunks_exact_mut(s).chain(tail.chunks_exact_mut(s)) {
                if r[wi] & bit != 0 {
                    xor_into(r, prow);
                }
            }
            rank += 1;
        }
        debug_assert_eq!(rank, self.rows);
        m
    }
}

/// Lee-Brickell information-set decoding with weight-one and weight-two
/// combinations of systematic rows.
pub fn isd_upper(p: &LogicalSearch, cfg: &SearchConfig) -> (Option<(usize, BinVec)>, usize) {
    let n = p.len();
    let mut best: Option<(usize, BinVec)> = None;
    for s in &p.seeds {
        if p.is_logical(s) {
            let mut v = s.clone();
            p.trim(&mut v);
            keep_best(&mut best, (p.weight(&v), v));
        }
    }
    if !p.has_logicals() || cfg.isd_iterations == 0 {
        return (best, 0);
    }
    let sys = Systematic::new(p);
    let unit = p.kind.unit();
    let positions = p.positions();
    const CHUNK: usize = 32;
    const PAIR_ROWS: usize = 400;
    let mut done = 0;
    while done < cfg.isd_iterations {
        if best.as_ref().is_some_and(|b| b.0 <= cfg.known_lower) {
            break;
        }
        let end = (done + CHUNK).min(cfg.isd_iterations);
        let found = (done..end)
            .into_par_iter()
            .map(|it| {
                let mut rng = ChaCha8Rng::seed_from_u64(mix(cfg.seed, it as u64));
                let mut perm: Vec<usize> = (0..positions).collect();
                perm.shuffle(&mut rng);
                let order: Vec<usize> = perm
                    .iter()
                    .flat_map(|&q| {
                        let flip = unit == 2 && rand::Rng::gen_bool(&mut rng, 0.5);
                        (0..unit).map(move |b| q * unit + if flip { unit - 1 - b } else { b })
                    })
                    .collect();
                let m = sys.reduce(&order);
                let st = sys.stride;
                let cw = sys.code_words;
                let row = |r: usize| &m[r * st..(r + 1) * st];
                let sig_nonzero = |a: &[u64]| a[cw..].iter().any(|&w| w != 0);
                let mut local: Option<(usize, usize, usize)> = None;
                let mut consider = |w: usize, i: usize, j: usize| {
                    if local.is_none_or(|(bw, _, _)| w < bw) {
                        local = Some((w, i, j));
                    }
                };
                let mut by_weight: Vec<(usize, usize)> =
                    (0..sys.rows).map(|r| (p.kind.weight(&row(r)[..cw]), r)).collect();
                for &(w, r) in &by_weight {
                    if sig_nonzero(row(r)) {
                        consider(w, r, r);
                    }
                }
                by_weight.sort_unstable();
                let lim = by_weight.len().min(PAIR_ROWS);
                for a in 0..lim {
                    let ra = row(by_weight[a].1);
                    for b in (a + 1)..lim {
                        let rb = row(by_weight[b].1);
                        if ra[cw..] == rb[cw..] {
                            continue;
                        }
                        consider(p.kind.xor_weight(&ra[..cw], &rb[..cw]), by_weight[a].1, by_weight[b].1);
                    }
                }
                local.map(|(_, i, j)| {
                    let mut words = row(i)[..cw].to_vec();
                    if i != j {
                        xor_into(&mut words, &row(j)[..cw]);
                    }
                    let mut v = BinVec::from_words(n, words);
                    p.trim(&mut v);
                    (p.weight(&v), v)
                })
            })
            .reduce(|| None, merge);
        best = merge(best, found);
        done = end;
    }
    (best, done)
}

/// Table entry: syndrome hash and packed atom indices (1-based, 0 = empty).
type Entry = (u64, u64);

struct Atoms {
    /// Bits set by each atom.
    bits: Vec<Vec<usize>>,
    /// Position (qubit or bit) of each atom.
    pos: Vec<usize>,
    syn: Vec<Vec<u64>>,
    sig: Vec<Vec<u64>>,
    per_pos: usize,
    width: u32,
    syn_words: usize,
    sig_words: usize,
}

impl Atoms {
    fn new(p: &LogicalSearch) -> Self {
        let pt = p.checks.transpose();
        let lt = p.logicals.transpose();
        let (mut bits, mut pos) = (Vec::new(), Vec::new());
        match p.kind {
            WeightKind::Plain => {
                for i in 0..p.len() {
                    bits.push(vec![i]);
                    pos.push(i);
                }
            }
            WeightKind::Paired => {
                for q in 0..p.positions() {
                    for b in [vec![2 * q], vec![2 * q + 1], vec![2 * q, 2 * q + 1]] {
                        bits.push(b);
                        pos.push(q);
                    }
                }
            }
        }
        let fold = |m: &BinMat, b: &[usize]| {
            let mut v = vec![0u64; m.stride()];
            for &i in b {
                xor_into(&mut v, m.row(i));
            }
            v
        };
        let syn = bits.iter().map(|b| fold(&pt, b)).collect();
        let sig = bits.iter().map(|b| fold(&lt, b)).collect();
        let width = usize::BITS - bits.len().leading_zeros();
        Self {
            per_pos: if p.kind == WeightKind::Plain { 1 } else { 3 },
            bits,
            pos,
            syn,
            sig,
            width,
            syn_words: pt.stride(),
            sig_words: lt.stride(),
        }
    }

    fn max_depth(&self) -> usize {
        (64 / self.width.max(1)) as usize
    }

    fn decode(&self, code: u64) -> impl Iterator<Item = usize> + '_ {
        let mask = (1u64 << self.width) - 1;
        let mut c = code;
        std::iter::from_fn(move || {
            let a = c & mask;
            c >>= self.width;
            (a != 0).then(|| a as usize - 1)
        })
    }
}

fn hash_words(w: &[u64]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &x in w {
        h = (h ^ x).wrapping_mul(0x1000_0000_01b3).rotate_left(29);
    }
    h
}

fn binom(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Number of errors of weight at most `h`.
pub fn table_size(p: &LogicalSearch, h: usize) -> f64 {
    let a: f64 = match p.kind {
        WeightKind::Plain => 1.0,
        WeightKind::Paired => 3.0,
    };
    let n = p.positions();
    (0..=h.min(n)).map(|w| binom(n, w) * a.powi(w as i32)).sum()
}

/// Largest half-weight whose table fits in `budget` entries.
pub fn affordable_half_weight(p: &LogicalSearch, budget: usize) -> usize {
    let mut h = 0;
    while h < p.positions() && table_size(p, h + 1) <= budget as f64 {
        h += 1;
    }
    h
}

/// Finds the minimum-weight logical among all weights `<= 2h`, if any.
pub fn mitm(p: &LogicalSearch, h: usize) -> Option<(usize, BinVec)> {
    let atoms = Atoms::new(p);
    let h = h.min(atoms.max_depth()).min(p.positions());
    let mut table: Vec<Entry> = Vec::with_capacity(table_size(p, h) as usize);
    let mut syn = vec![0u64; atoms.syn_words];
    fn rec(a: &Atoms, h: usize, start_pos: usize, depth: usize, code: u64, syn: &mut Vec<u64>, out: &mut Vec<Entry>) {
        out.push((hash_words(syn), code));
        if depth == h {
            return;
        }
        for q in start_pos..a.pos.len() / a.per_pos {
            for k in 0..a.per_pos {
                let ai = q * a.per_pos + k;
                xor_into(syn, &a.syn[ai]);
                let next = code | ((ai as u64 + 1) << (depth as u32 * a.width));
                rec(a, h, q + 1, depth + 1, next, syn, out);
                xor_into(syn, &a.syn[ai]);
            }
        }
    }
    rec(&atoms, h, 0, 0, 0, &mut syn, &mut table);
    table.par_sort_unstable();

    let mut runs = Vec::new();
    let mut i = 0;
    while i < table.len() {
        let mut j = i + 1;
        while j < table.len() && table[j].0 == table[i].0 {
            j += 1;
        }
        if j - i > 1 {
            runs.push((i, j));
        }
        i = j;
    }
    let n = p.len();
    let cw = words_for(n);
    runs.par_iter()
        .map(|&(i, j)| {
            let members: Vec<(Vec<u64>, Vec<u64>, Vec<u64>)> = table[i..j]
                .iter()
                .map(|&(_, code)| {
                    let mut s = vec![0u64; atoms.syn_words];
                    let mut g = vec![0u64; atoms.sig_words];
                    let mut e = vec![0u64; cw];
                    for a in atoms.decode(code) {
                        xor_into(&mut s, &atoms.syn[a]);
                        xor_into(&mut g, &atoms.sig[a]);
                        for &b in &atoms.bits[a] {
                            e[b / 64] ^= 1 << (b % 64);
                        }
                    }
                    (s, g, e)
                })
                .collect();
            let mut best: Option<(usize, BinVec)> = None;
            for x in 0..members.len() {
                for y in (x + 1)..members.len() {
                    let (sx, gx, ex) = &members[x];
                    let (sy, gy, ey) = &members[y];
                    if sx != sy || gx == gy {
                        continue;
                    }
                    let w = p.kind.xor_weight(ex, ey);
                    if best.as_ref().is_some_and(|b| b.0 < w) {
                        continue;
                    }
                    let mut v = ex.clone();
                    xor_into(&mut v, ey);
                    keep_best(&mut best, (w, BinVec::from_words(n, v)));
                }
            }
            best
        })
        .reduce(|| None, merge)
}

/// Upper bound by ISD, then exhaustive certification up to the affordable
/// weight.
pub fn search(p: &LogicalSearch, cfg: &SearchConfig) -> SearchOutcome {
    if !p.has_logicals() {
        return SearchOutcome {
            lo: Dist::Infinite,
            hi: Dist::Infinite,
            witness: None,
            clean_to: p.positions(),
            isd_iterations: 0,
        };
    }
    let (best, iters) = isd_upper(p, cfg);
    // A logical always exists, so weight <= number of positions.
    let target = best.as_ref().map_or(p.positions(), |b| b.0.saturating_sub(1));
    let mut h = affordable_half_weight(p, cfg.enum_budget)
        .min(target.div_ceil(2))
        .min(Atoms::new(p).max_depth());
    if let Some(cap) = cfg.enum_weight_cap {
        h = h.min(cap.div_ceil(2));
    }
    let found = mitm(p, h);
    let clean_to = (2 * h).min(p.positions());
    let exact = found.as_ref().map(|f| f.0);
    let (w, v) = merge(best, found).expect("a code with logical operators has a nonzero logical");
    let lo = exact.unwrap_or((clean_to + 1).min(w));
    SearchOutcome {
        lo: Dist::Finite(lo),
        hi: Dist::Finite(w),
        witness: Some(v),
        clean_to,
        isd_iterations: iters,
    }
}

/// Plain exhaustive search over all errors of weight `1..=max_weight`, in
/// increasing weight. Slow; used as an independent check.
pub fn exhaustive(p: &LogicalSearch, max_weight: usize) -> Option<(usize, BinVec)> {
    let atoms = Atoms::new(p);
    let npos = p.positions();
    for w in 1..=max_weight.min(npos) {
        let mut found: Option<(usize, BinVec)> = None;
        let mut chosen = Vec::with_capacity(w);
        fn rec(
            p: &LogicalSearch,
            a: &Atoms,
            w: usize,
            start: usize,
            chosen: &mut Vec<usize>,
            found: &mut Option<(usize, BinVec)>,
        ) {
            if chosen.len() == w {
                let mut v = BinVec::zeros(p.len());
                for &ai in chosen.iter() {
                    for &b in &a.bits[ai] {
                        v.flip(b);
                    }
                }
                if p.is_logical(&v) {
                    keep_best(found, (w, v));
                }
                return;
            }
            for q in start..a.pos.len() / a.per_pos {
                for k in 0..a.per_pos {
                    chosen.push(q * a.per_pos + k);
                    rec(p, a, w, q + 1, chosen, found);
                    chosen.pop();
                }
            }
        }
        rec(p, &atoms, w, 0, &mut chosen, &mut found);
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Indices of set bits, for callers formatting witnesses.
pub fn support(v: &BinVec) -> Vec<usize> {
    ones(v.words()).collect()
}

/// Exhaustive sweep of `ker P` in Gray-code order, tracking the signature
/// incrementally. Exact; costs `2^dim ker P` steps.
pub fn gray_enumerate(p: &LogicalSearch) -> Option<(usize, BinVec)> {
    if !p.has_logicals() {
        return None;
    }
    let sys = Systematic::new(p);
    let (s, cw) = (sys.stride, sys.code_words);
    let k = sys.rows;
    assert!(k < 63, "kernel dimension {k} too large to enumerate");
    let mut cur = vec![0u64; s];
    let mut best: Option<(usize, u64)> = None;
    for i in 1u64..(1u64 << k) {
        let bit = i.trailing_zeros() as usize;
        xor_into(&mut cur, &sys.base[bit * s..(bit + 1) * s]);
        if cur[cw..].iter().all(|&w| w == 0) {
            continue;
        }
        let w = p.kind.weight(&cur[..cw]);
        if best.is_none_or(|(bw, _)| w < bw) {
            best = Some((w, i ^ (i >> 1)));
        }
    }
    best.map(|(w, gray)| {
        let mut words = vec![0u64; cw];
        for r in ones(&[gray]) {
            xor_into(&mut words, &sys.base[r * s..r * s + cw]);
        }
        (w, BinVec::from_words(p.len(), words))
    })
}

/// Dimension of `ker P`.
pub fn kernel_dim(p: &LogicalSearch) -> usize {
    p.len() - p.checks.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BinMat;

    fn repetition(n: usize) -> LogicalSearch {
        // ker of the path checks is {0, 1...1}; any nonzero vector is "logical"
        let h = BinMat::from_fn(n - 1, n, |r, c| c == r || c == r + 1);
        LogicalSearch {
            checks: h,
            logicals: BinMat::from_fn(1, n, |_, c| c == 0),
            stabilizers: BinMat::zeros(0, n),
            kind: WeightKind::Plain,
            seeds: Vec::new(),
        }
    }

    #[test]
    fn repetition_distance_all_paths() {
        let p = repetition(7);
        assert_eq!(gray_enumerate(&p).unwrap().0, 7);
        assert_eq!(exhaustive(&p, 7).unwrap().0, 7);
        assert_eq!(mitm(&p, 4).unwrap().0, 7);
        assert!(mitm(&p, 3).is_none());
        let out = search(&p, &SearchConfig::default());
        assert_eq!((out.lo, out.hi), (Dist::Finite(7), Dist::Finite(7)));
    }

    #[test]
    fn capped_enumeration_reports_interval() {
        let p = repetition(9);
        let cfg = SearchConfig {
            enum_weight_cap: Some(4),
            ..SearchConfig::default()
        };
        let out = search(&p, &cfg);
        assert_eq!(out.hi, Dist::Finite(9));
        assert_eq!(out.lo, Dist::Finite(5));
        assert_eq!(out.clean_to, 4);
    }

    #[test]
    fn paired_weight_counts_qubits() {
        assert_eq!(WeightKind::Paired.weight(&[0b1111]), 2);
        assert_eq!(WeightKind::Paired.weight(&[0b0110]), 2);
        assert_eq!(WeightKind::Paired.weight(&[1 << 63]), 1);
    }
}
