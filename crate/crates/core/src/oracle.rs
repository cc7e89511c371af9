//! Brute-force enumerators and exact subset-coverage counting.
//!
//! Everything here is deliberately naive so that it can check the
//! constructive modules rather than share their logic.

use crate::error::{Error, Result};
use crate::report::{Verdict, Violation};

fn binomial_table(n: usize, k: usize) -> Vec<Vec<u64>> {
    let mut c = vec![vec![0u64; k + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = 1;
        for j in 1..=k.min(i) {
            c[i][j] = c[i - 1][j - 1] + if j < i { c[i - 1][j] } else { 0 };
        }
    }
    c
}

/// Occurrence counts of every `t`-subset of `[0, v)`.
///
/// Subsets are ranked by the combinatorial number system: the sorted subset
/// `c_0 < ... < c_{t-1}` has rank `sum C(c_i, i + 1)`, so ranks enumerate
/// subsets in colexicographic order. Counters saturate at 255; `total` is
/// exact.
#[derive(Debug, Clone)]
pub struct CoverageMap {
    v: usize,
    t: usize,
    binom: Vec<Vec<u64>>,
    counts: Vec<u8>,
    total: u64,
}

impl CoverageMap {
    pub fn new(v: usize, t: usize) -> Result<CoverageMap> {
        if t == 0 || t > v {
            return Err(Error::InvalidParameters(format!(
                "cannot rank {t}-subsets of {v} points"
            )));
        }
        let binom = binomial_table(v, t);
        let len = usize::try_from(binom[v][t])
            .ok()
            .filter(|&n| n <= 1 << 32)
            .ok_or_else(|| Error::InvalidParameters(format!("C({v},{t}) counters is too many")))?;
        Ok(CoverageMap {
            v,
            t,
            binom,
            counts: vec![0; len],
            total: 0,
        })
    }

    pub fn universe(&self) -> usize {
        self.v
    }

    pub fn arity(&self) -> usize {
        self.t
    }

    /// `C(v, t)`.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Rank of a strictly increasing `t`-subset.
    pub fn rank(&self, subset: &[u32]) -> usize {
        debug_assert_eq!(subset.len(), self.t);
        subset
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c as usize][i + 1])
            .sum::<u64>() as usize
    }

    pub fn unrank(&self, mut rank: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.t];
        let mut hi = self.v;
        for i in (0..self.t).rev() {
            // largest c < hi with C(c, i+1) <= rank
            let mut c = hi - 1;
            while self.binom[c][i + 1] as usize > rank {
                c -= 1;
            }
            out[i] = c as u32;
            rank -= self.binom[c][i + 1] as usize;
            hi = c;
        }
        out
    }

    pub fn count(&self, subset: &[u32]) -> u8 {
        self.counts[self.rank(subset)]
    }

    fn bump(&mut self, subset: &[u32]) {
        let r = self.rank(subset);
        self.counts[r] = self.counts[r].saturating_add(1);
        self.total += 1;
    }

    /// Counts every `t`-subset of `block`. Points must be distinct and
    /// in range.
    pub fn add_block(&mut self, block: &[u32]) -> Verdict {
        let mut b = block.to_vec();
        b.sort_unstable();
        if b.windows(2).any(|w| w[0] == w[1]) || b.last().is_some_and(|&x| x as usize >= self.v) {
            return Err(Violation::BadBlock {
                block: block.to_vec(),
                reason: format!("points must be distinct and below {}", self.v),
            });
        }
        if b.len() < self.t {
            return Ok(());
        }
        let mut idx: Vec<usize> = (0..self.t).collect();
        let mut sub = vec![0u32; self.t];
        loop {
            for (s, &i) in sub.iter_mut().zip(&idx) {
                *s = b[i];
            }
            self.bump(&sub);
            // next index combination in lex order
            let mut i = self.t;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                if idx[i] < b.len() - self.t + i {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..self.t {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// All subsets in rank order with their counts.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<u32>, u8)> + '_ {
        let mut current: Vec<u32> = (0..self.t as u32).collect();
        let mut rank = 0usize;
        std::iter::from_fn(move || {
            if rank == self.counts.len() {
                return None;
            }
            let item = (current.clone(), self.counts[rank]);
            rank += 1;
            // colex successor: bump the lowest position that has room
            let mut i = 0;
            while i + 1 < self.t && current[i] + 1 == current[i + 1] {
                i += 1;
            }
            current[i] += 1;
            for (j, c) in current.iter_mut().enumerate().take(i) {
                *c = j as u32;
            }
            Some(item)
        })
    }

    /// The first subset (in rank order) whose count differs from
    /// `expected(subset)`; subsets mapped to `None` are skipped.
    pub fn first_mismatch(
        &self,
        mut expected: impl FnMut(&[u32]) -> Option<u8>,
    ) -> Option<(Vec<u32>, u8)> {
        self.iter()
            .find(|(s, c)| expected(s).is_some_and(|e| e != *c))
    }
}

/// Summary of a coverage map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audit {
    pub subsets: u64,
    pub min: u8,
    pub max: u8,
    /// Number of subsets with count 0, 1 and more than 1.
    pub histogram: [u64; 3],
    /// Up to 16 subsets whose count is not 1.
    pub violating: Vec<(Vec<u32>, u8)>,
    pub total: u64,
}

pub fn audit<B: AsRef<[u32]>>(blocks: &[B], v: usize, t: usize) -> Result<Audit> {
    let mut map = CoverageMap::new(v, t)?;
    for b in blocks {
        map.add_block(b.as_ref())?;
    }
    Ok(summarize(&map))
}

pub fn summarize(map: &CoverageMap) -> Audit {
    let mut a = Audit {
        subsets: map.len() as u64,
        min: u8::MAX,
        max: 0,
        histogram: [0; 3],
        violating: Vec::new(),
        total: map.total(),
    };
    for (s, c) in map.iter() {
        a.min = a.min.min(c);
        a.max = a.max.max(c);
        a.histogram[(c as usize).min(2)] += 1;
        if c != 1 && a.violating.len() < 16 {
            a.violating.push((s, c));
        }
    }
    a
}

pub const LATIN_COUNT_CAP: usize = 5;
pub const REDUCED_LATIN_COUNT_CAP: usize = 6;

/// Number of latin squares of order `q` (reduced: first row and column in
/// natural order), by cell-by-cell backtracking with row/column bitmasks.
pub fn count_latin_squares(q: usize, reduced: bool) -> Result<u64> {
    let cap = if reduced {
        REDUCED_LATIN_COUNT_CAP
    } else {
        LATIN_COUNT_CAP
    };
    if q == 0 || q > cap {
        return Err(Error::InvalidParameters(format!(
            "order {q} is outside 1..={cap}"
        )));
    }
    let mut rows = vec![0u32; q];
    let mut cols = vec![0u32; q];
    let mut start = 0;
    if reduced {
        for i in 0..q {
            rows[0] |= 1 << i;
            cols[i] |= 1 << i;
            rows[i] |= 1 << i;
            cols[0] |= 1 << i;
        }
        start = q + 1;
    }
    fn fill(cell: usize, q: usize, rows: &mut [u32], cols: &mut [u32], reduced: bool) -> u64 {
        if cell == q * q {
            return 1;
        }
        let (r, c) = (cell / q, cell % q);
        if reduced && c == 0 {
            return fill(cell + 1, q, rows, cols, reduced);
        }
        let mut free = !(rows[r] | cols[c]) & ((1u32 << q) - 1);
        let mut total = 0;
        while free != 0 {
            let bit = free & free.wrapping_neg();
            free ^= bit;
            rows[r] |= bit;
            cols[c] |= bit;
            total += fill(cell + 1, q, rows, cols, reduced);
            rows[r] ^= bit;
            cols[c] ^= bit;
        }
        total
    }
    Ok(fill(start.min(q * q), q, &mut rows, &mut cols, reduced))
}

/// Same count by a different route: a latin square is a sequence of `q`
/// permutations (symbol -> column of that symbol in each row) that pairwise
/// disagree everywhere. Rows are chosen from the precomputed permutation
/// list.
pub fn count_latin_squares_by_permutations(q: usize) -> Result<u64> {
    if q == 0 || q > LATIN_COUNT_CAP {
        return Err(Error::InvalidParameters(format!(
            "order {q} is outside 1..={LATIN_COUNT_CAP}"
        )));
    }
    let perms = permutations(q);
    // compatible[i] = bitset of permutations disagreeing with i everywhere
    let n = perms.len();
    let words = n.div_ceil(64);
    let mut compatible = vec![vec![0u64; words]; n];
    for i in 0..n {
        for j in 0..n {
            if perms[i].iter().zip(&perms[j]).all(|(a, b)| a != b) {
                compatible[i][j / 64] |= 1 << (j % 64);
            }
        }
    }
    fn extend(depth: usize, q: usize, allowed: &[u64], compatible: &[Vec<u64>]) -> u64 {
        if depth == q {
            return 1;
        }
        let mut total = 0;
        for (w, &word) in allowed.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let next: Vec<u64> = allowed
                    .iter()
                    .zip(&compatible[w * 64 + b])
                    .map(|(a, c)| a & c)
                    .collect();
                total += extend(depth + 1, q, &next, compatible);
            }
        }
        total
    }
    let all: Vec<u64> = (0..words)
        .map(|w| {
            let bits = (n - w * 64).min(64);
            if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            }
        })
        .collect();
    Ok(extend(0, q, &all, &compatible))
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..n as u32).collect();
    fn heap(k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort_unstable();
    out
}

/// All latin squares of order `q` as row-major cell vectors.
pub fn all_latin_squares(q: usize) -> Result<Vec<Vec<u32>>> {
    if q == 0 || q > 4 {
        return Err(Error::InvalidParameters(format!(
            "order {q} is outside 1..=4"
        )));
    }
    let mut out = Vec::new();
    let mut cells = vec![0u32; q * q];
    fn fill(cell: usize, q: usize, cells: &mut [u32], out: &mut Vec<Vec<u32>>) {
        if cell == q * q {
            out.push(cells.to_vec());
            return;
        }
        let (r, c) = (cell / q, cell % q);
        for s in 0..q as u32 {
            if (0..c).any(|j| cells[r * q + j] == s) || (0..r).any(|i| cells[i * q + c] == s) {
                continue;
            }
            cells[cell] = s;
            fill(cell + 1, q, cells, out);
        }
    }
    fill(0, q, &mut cells, &mut out);
    Ok(out)
}

pub const MOLS_COUNT_CAP: usize = 4;

/// Ordered pairs `(A, B)` of orthogonal latin squares of order `q`, by
/// checking every pair.
pub fn count_mols_pairs(q: usize) -> Result<u64> {
    if q > MOLS_COUNT_CAP {
        return Err(Error::InvalidParameters(format!(
            "order {q} exceeds the cap {MOLS_COUNT_CAP}"
        )));
    }
    let squares = all_latin_squares(q)?;
    let mut count = 0;
    let mut seen = vec![false; q * q];
    for a in &squares {
        for b in &squares {
            seen.iter_mut().for_each(|s| *s = false);
            let orthogonal = a.iter().zip(b).all(|(&x, &y)| {
                let slot = x as usize * q + y as usize;
                !std::mem::replace(&mut seen[slot], true)
            });
            count += orthogonal as u64;
        }
    }
    Ok(count)
}

/// Same count via transversals: `B` is an orthogonal mate of `A` exactly
/// when its symbol classes are `q` disjoint transversals of `A`, listed in
/// symbol order.
pub fn count_mols_pairs_by_transversals(q: usize) -> Result<u64> {
    if q > MOLS_COUNT_CAP {
        return Err(Error::InvalidParameters(format!(
            "order {q} exceeds the cap {MOLS_COUNT_CAP}"
        )));
    }
    let perms = permutations(q);
    let mut total = 0;
    for a in all_latin_squares(q)? {
        // a transversal is a permutation sigma (row -> column) hitting each symbol once
        let transversals: Vec<u32> = perms
            .iter()
            .filter(|sigma| {
                let mut used = 0u32;
                sigma.iter().enumerate().all(|(r, &c)| {
                    let bit = 1 << a[r * q + c as usize];
                    let fresh = used & bit == 0;
                    used |= bit;
                    fresh
                })
            })
            .map(|sigma| {
                sigma
                    .iter()
                    .enumerate()
                    .fold(0u32, |m, (r, &c)| m | 1 << (r * q + c as usize))
            })
            .collect();
        // ordered sequences of q pairwise disjoint transversals
        fn pick(left: usize, used: u32, ts: &[u32]) -> u64 {
            if left == 0 {
                return 1;
            }
            ts.iter()
                .filter(|&&t| t & used == 0)
                .map(|&t| pick(left - 1, used | t, ts))
                .sum()
        }
        total += pick(q, 0, &transversals);
    }
    Ok(total)
}
