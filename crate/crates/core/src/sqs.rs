//! Steiner quadruple systems: verification, the Boolean and doubling
//! constructions, a randomized search for small orders, and the SQS(8n+2)
//! assembly from a length-8 distance-7 code.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::designs::{bbd_build, verify_bbd, Bbd};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::mds::{extend_code, linear_mds, verify_mds, Code};
use crate::oracle::CoverageMap;
use crate::report::{Verdict, Violation};

/// Quadruples on `[0, v)`, each sorted, listed in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sqs {
    pub v: usize,
    pub blocks: Vec<[u32; 4]>,
}

impl Sqs {
    pub fn new(v: usize, blocks: impl IntoIterator<Item = [u32; 4]>) -> Sqs {
        let mut blocks: Vec<[u32; 4]> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        Sqs { v, blocks }
    }

    pub fn expected_blocks(v: usize) -> u64 {
        let v = v as u64;
        v * v.saturating_sub(1) * v.saturating_sub(2) / 24
    }

    /// Blocks with every point `p` replaced by `map[p]`, on `v` points.
    pub fn relabel(&self, v: usize, map: &[u32]) -> Sqs {
        Sqs::new(v, self.blocks.iter().map(|b| b.map(|p| map[p as usize])))
    }
}

pub fn is_admissible(v: usize) -> bool {
    v < 3 || v % 6 == 2 || v % 6 == 4
}

/// Every 3-subset of `[0, v)` lies in exactly one block, and each block
/// size is one of `sizes`.
pub fn verify_steiner3<B: AsRef<[u32]>>(v: usize, blocks: &[B], sizes: &[usize]) -> Verdict {
    if v < 3 {
        return match blocks.first() {
            None => Ok(()),
            Some(b) => Err(Violation::BadBlock {
                block: b.as_ref().to_vec(),
                reason: format!("no blocks exist on {v} points"),
            }),
        };
    }
    let mut map = CoverageMap::new(v, 3).map_err(|e| Violation::Shape {
        reason: e.to_string(),
    })?;
    for b in blocks {
        let b = b.as_ref();
        if !sizes.contains(&b.len()) {
            return Err(Violation::BadBlock {
                block: b.to_vec(),
                reason: format!("block size {} not in {sizes:?}", b.len()),
            });
        }
        map.add_block(b)?;
    }
    match map.first_mismatch(|_| Some(1)) {
        Some((subset, count)) => Err(Violation::Coverage {
            subset,
            count: count as u32,
        }),
        None => Ok(()),
    }
}

pub fn verify_sqs(s: &Sqs) -> Verdict {
    if !is_admissible(s.v) {
        return Err(Violation::Shape {
            reason: format!("no SQS of order {} exists: v mod 6 must be 2 or 4", s.v),
        });
    }
    let expected = Sqs::expected_blocks(s.v);
    if s.blocks.len() as u64 != expected {
        return Err(Violation::BlockCount {
            expected,
            found: s.blocks.len() as u64,
        });
    }
    verify_steiner3(s.v, &s.blocks, &[4])
}

/// Points are the vectors of GF(2)^a; blocks are the 4-sets with zero sum.
pub fn boolean_sqs(a: u32) -> Result<Sqs> {
    if !(3..=12).contains(&a) {
        return Err(Error::InvalidParameters(format!(
            "exponent {a} is outside 3..=12"
        )));
    }
    let v = 1u32 << a;
    let mut blocks = Vec::new();
    for w in 0..v {
        for x in w + 1..v {
            for y in x + 1..v {
                let z = w ^ x ^ y;
                if z > y {
                    blocks.push([w, x, y, z]);
                }
            }
        }
    }
    Ok(Sqs::new(v as usize, blocks))
}

/// `s` on `[0, n)`, `s2` shifted to `[n, 2n)`, plus the blocks of a BBD
/// whose groups are those two halves.
pub fn double_sqs(s: &Sqs, s2: &Sqs, bbd: &Bbd) -> Result<Sqs> {
    let n = s.v;
    let half = |lo: usize| (lo as u32..(lo + n) as u32).collect::<Vec<u32>>();
    if s2.v != n || bbd.n != 2 * n || bbd.g1 != half(0) || bbd.g2 != half(n) {
        return Err(Error::InvalidParameters(format!(
            "BBD groups must be the two copies [0, {n}) and [{n}, {})",
            2 * n
        )));
    }
    let shift = n as u32;
    let blocks = s
        .blocks
        .iter()
        .copied()
        .chain(s2.blocks.iter().map(|b| b.map(|p| p + shift)))
        .chain(bbd.blocks.iter().copied());
    Ok(Sqs::new(2 * n, blocks))
}

fn rank3(a: u32, b: u32, c: u32) -> usize {
    let (a, b, c) = (a as usize, b as usize, c as usize);
    a + b * (b - 1) / 2 + c * (c - 1) * (c - 2) / 6
}

#[cfg(test)]
fn unrank3(mut r: usize, v: usize) -> [u32; 3] {
    let choose = [
        |c: usize| c,
        |c: usize| c * c.saturating_sub(1) / 2,
        |c: usize| c * c.saturating_sub(1) * c.saturating_sub(2) / 6,
    ];
    let mut out = [0u32; 3];
    let mut hi = v;
    for i in (0..3).rev() {
        let mut c = hi - 1;
        while choose[i](c) > r {
            c -= 1;
        }
        out[i] = c as u32;
        r -= choose[i](c);
        hi = c;
    }
    out
}

/// Exact cover of the triples of `[0, v)` by quadruples, up to the shifts
/// `x -> x + g (mod v)` for `g` in a subgroup of `Z_v` of order `v / step`.
///
/// Items are triple orbits; rows are quadruple orbits meeting every triple
/// orbit at most once.
struct OrbitCover {
    v: usize,
    step: usize,
    /// Triple rank -> item.
    item_of: Vec<u32>,
    /// Triples per item.
    item_size: Vec<u32>,
    rows: Vec<[u32; 4]>,
    row_items: Vec<Vec<u32>>,
}

impl OrbitCover {
    fn shift(b: &[u32], g: usize, v: usize) -> Vec<u32> {
        let mut s: Vec<u32> = b.iter().map(|&x| ((x as usize + g) % v) as u32).collect();
        s.sort_unstable();
        s
    }

    /// Sorted orbit of `b` under the shift group.
    fn orbit(&self, b: &[u32]) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = (0..self.v)
            .step_by(self.step)
            .map(|g| OrbitCover::shift(b, g, self.v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn new(v: usize, step: usize) -> OrbitCover {
        let triples = v * (v - 1) * (v - 2) / 6;
        let mut cover = OrbitCover {
            v,
            step,
            item_of: vec![u32::MAX; triples],
            item_size: Vec::new(),
            rows: Vec::new(),
            row_items: Vec::new(),
        };
        for c in 2..v as u32 {
            for b in 1..c {
                for a in 0..b {
                    if cover.item_of[rank3(a, b, c)] != u32::MAX {
                        continue;
                    }
                    let item = cover.item_size.len() as u32;
                    let orbit = cover.orbit(&[a, b, c]);
                    for t in &orbit {
                        cover.item_of[rank3(t[0], t[1], t[2])] = item;
                    }
                    cover.item_size.push(orbit.len() as u32);
                }
            }
        }
        let v32 = v as u32;
        for a in 0..v32 {
            for b in a + 1..v32 {
                for c in b + 1..v32 {
                    for d in c + 1..v32 {
                        let block = [a, b, c, d];
                        let orbit = cover.orbit(&block);
                        if orbit[0] != block {
                            continue;
                        }
                        let mut items: Vec<u32> = [[a, b, c], [a, b, d], [a, c, d], [b, c, d]]
                            .iter()
                            .map(|t| cover.item_of[rank3(t[0], t[1], t[2])])
                            .collect();
                        items.sort_unstable();
                        // the orbit covers item i exactly (|orbit| * multiplicity / |i|) times
                        let exact = items.chunk_by(|x, y| x == y).all(|run| {
                            orbit.len() * run.len() == cover.item_size[run[0] as usize] as usize
                        });
                        if exact {
                            items.dedup();
                            cover.rows.push(block);
                            cover.row_items.push(items);
                        }
                    }
                }
            }
        }
        cover
    }

    /// Algorithm X, branching on the uncovered item with the fewest live
    /// rows. `Ok(None)` means the search space is exhausted.
    fn solve(
        &self,
        rng: &mut ChaCha8Rng,
        budget: &mut u64,
        best: &mut u64,
    ) -> Option<Option<Vec<usize>>> {
        let n = self.item_size.len();
        let mut rows_of: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (r, items) in self.row_items.iter().enumerate() {
            for &i in items {
                rows_of[i as usize].push(r as u32);
            }
        }
        for list in &mut rows_of {
            list.shuffle(rng);
        }
        let mut state = CoverState {
            live: rows_of.iter().map(|l| l.len() as u32).collect(),
            blocked: vec![0; self.rows.len()],
            covered: vec![false; n],
            chosen: Vec::new(),
            weight: 0,
        };
        match self.descend(&rows_of, &mut state, budget, best) {
            Descent::Found => Some(Some(state.chosen)),
            Descent::Exhausted => Some(None),
            Descent::OutOfBudget => None,
        }
    }

    fn descend(
        &self,
        rows_of: &[Vec<u32>],
        st: &mut CoverState,
        budget: &mut u64,
        best: &mut u64,
    ) -> Descent {
        let pick = (0..st.covered.len())
            .filter(|&i| !st.covered[i])
            .min_by_key(|&i| st.live[i]);
        let Some(item) = pick else {
            return Descent::Found;
        };
        for &r in &rows_of[item] {
            if st.blocked[r as usize] != 0 {
                continue;
            }
            if *budget == 0 {
                return Descent::OutOfBudget;
            }
            *budget -= 1;
            self.select(r as usize, rows_of, st, 1);
            *best = (*best).max(st.weight);
            match self.descend(rows_of, st, budget, best) {
                Descent::Exhausted => {}
                other => return other,
            }
            self.select(r as usize, rows_of, st, -1);
        }
        Descent::Exhausted
    }

    /// Covers (`sign = 1`) or uncovers (`sign = -1`) the items of row `r`.
    fn select(&self, r: usize, rows_of: &[Vec<u32>], st: &mut CoverState, sign: i32) {
        for &i in &self.row_items[r] {
            let i = i as usize;
            st.covered[i] = sign > 0;
            for &other in &rows_of[i] {
                let o = other as usize;
                let was_live = st.blocked[o] == 0;
                st.blocked[o] = (st.blocked[o] as i32 + sign) as u32;
                if was_live != (st.blocked[o] == 0) {
                    for &j in &self.row_items[o] {
                        st.live[j as usize] = (st.live[j as usize] as i32 - sign) as u32;
                    }
                }
            }
        }
        let triples: u64 = self.row_items[r]
            .iter()
            .map(|&i| self.item_size[i as usize] as u64)
            .sum();
        if sign > 0 {
            st.chosen.push(r);
            st.weight += triples;
        } else {
            st.chosen.pop();
            st.weight -= triples;
        }
    }

    fn blocks(&self, chosen: &[usize]) -> Vec<[u32; 4]> {
        chosen
            .iter()
            .flat_map(|&r| self.orbit(&self.rows[r]))
            .map(|b| [b[0], b[1], b[2], b[3]])
            .collect()
    }
}

/// Row selections per unit of the restart schedule.
const RESTART_UNIT: u64 = 20_000;

/// 1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8, ...
fn luby(i: u64) -> u64 {
    let mut k = 1;
    while (1u64 << k) - 1 < i {
        k += 1;
    }
    if (1u64 << k) - 1 == i {
        1 << (k - 1)
    } else {
        luby(i - (1 << (k - 1)) + 1)
    }
}

struct CoverState {
    /// Live rows per item.
    live: Vec<u32>,
    /// Number of covered items per row; a row is live at zero.
    blocked: Vec<u32>,
    covered: Vec<bool>,
    chosen: Vec<usize>,
    /// Triples covered by the chosen rows.
    weight: u64,
}

enum Descent {
    Found,
    Exhausted,
    OutOfBudget,
}

/// Exact-cover search for an SQS(v). Tries quadruple orbits under the full
/// cyclic group first, then under shifts by 2 when `v` is even, then no
/// symmetry. Each stage restarts with a fresh row order after a number of
/// row selections following the Luby sequence, and ends when one run
/// exhausts its space. `budget` caps row selections across all runs.
///
/// Deterministic in `(v, seed, budget)`.
pub fn search_sqs(v: usize, seed: u64, budget: u64) -> Result<Sqs> {
    if !is_admissible(v) {
        return Err(Error::InvalidParameters(format!(
            "no SQS of order {v} exists: v mod 6 must be 2 or 4"
        )));
    }
    if v < 4 {
        return Ok(Sqs::new(v, []));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut left = budget;
    let mut best = 0u64;
    let steps: Vec<usize> = if v.is_multiple_of(2) {
        vec![1, 2, v]
    } else {
        vec![1, v]
    };
    'stages: for step in steps {
        let cover = OrbitCover::new(v, step);
        for run in 1.. {
            let mut slice = (luby(run) * RESTART_UNIT).min(left);
            let before = slice;
            let mut reached = 0;
            let outcome = cover.solve(&mut rng, &mut slice, &mut reached);
            left -= before - slice;
            best = best.max(reached);
            match outcome {
                Some(Some(chosen)) => return Ok(Sqs::new(v, cover.blocks(&chosen))),
                // no solution with this symmetry
                Some(None) => continue 'stages,
                None if left == 0 => break 'stages,
                None => {}
            }
        }
    }
    Err(Error::SearchFailed {
        steps: budget - left,
        covered: best,
        total: (v * (v - 1) * (v - 2) / 6) as u64,
    })
}

/// An SQS(10) whose blocks through `{8, 9}` are `{2i, 2i+1, 8, 9}`.
///
/// Points `2i + delta` stand for `(i, delta)`; 8 and 9 are `e1` and `e2`.
pub fn sqs10_with_spread() -> Result<Sqs> {
    let s = search_sqs(10, 0, 1_000_000)?;
    // the four blocks through {0, 1} pair up the remaining eight points
    let mut map = vec![u32::MAX; 10];
    map[0] = 8;
    map[1] = 9;
    let mut next = 0;
    for b in s.blocks.iter().filter(|b| b[0] == 0 && b[1] == 1) {
        map[b[2] as usize] = next;
        map[b[3] as usize] = next + 1;
        next += 2;
    }
    debug_assert_eq!(next, 8);
    let out = s.relabel(10, &map);
    verify_sqs(&out)?;
    Ok(out)
}

pub fn has_spread(s10: &Sqs) -> bool {
    s10.v == 10 && (0..4).all(|i| s10.blocks.contains(&[2 * i, 2 * i + 1, 8, 9]))
}

/// Everything the SQS(8n+2) assembly consumes.
///
/// Coordinates of the code and points of `s8` are `0..8`, coordinate `c`
/// standing for `(c / 2, c % 2)`; the point group `A_c` is
/// `[c*n, (c+1)*n)`, and `e1 = 8n`, `e2 = 8n + 1`.
#[derive(Debug, Clone)]
pub struct Sqs8n2Ingredients {
    pub n: usize,
    /// Length 8, distance 7, order `n`.
    pub mds: Code,
    /// One BBD with `q = n` per coordinate pair `c0 < c1` with
    /// `c0 / 2 != c1 / 2`, in lexicographic pair order.
    pub bbds: Vec<((usize, usize), Bbd)>,
    pub s8: Sqs,
    /// SQS(10) with the spread blocks `{2i, 2i+1, 8, 9}`.
    pub s10: Sqs,
    /// `D_i` for `i = 0..4`, each an SQS(2n+2) with `A_(i,0)`, `A_(i,1)`,
    /// `e1`, `e2` numbered `0..n`, `n..2n`, `2n`, `2n+1`.
    pub columns: Option<Vec<Sqs>>,
}

/// The 24 coordinate pairs from different columns.
pub fn cross_pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for c0 in 0..8 {
        for c1 in c0 + 1..8 {
            if c0 / 2 != c1 / 2 {
                out.push((c0, c1));
            }
        }
    }
    out
}

impl Sqs8n2Ingredients {
    /// GF(n) evaluation code, BBDs from `bbd_build(n, n/4)`, the Boolean
    /// SQS(8) and the searched SQS(10). `n` must be a power of two, at
    /// least 8.
    pub fn standard(n: usize) -> Result<Sqs8n2Ingredients> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::InvalidParameters(format!(
                "standard ingredients need n a power of two >= 8, got {n}"
            )));
        }
        let field = std::sync::Arc::new(Field::new(2, n.trailing_zeros())?);
        let mds = linear_mds(&field, 8, 7)?;
        let bbd = bbd_build(n, n / 4)?.bbd;
        Ok(Sqs8n2Ingredients {
            n,
            mds,
            bbds: cross_pairs()
                .into_iter()
                .map(|p| (p, bbd.clone()))
                .collect(),
            s8: boolean_sqs(3)?,
            s10: sqs10_with_spread()?,
            columns: None,
        })
    }

    pub fn verify(&self) -> Result<()> {
        let n = self.n;
        if n % 2 == 1 || n == 0 {
            return Err(Error::InvalidParameters(format!("n = {n} must be even")));
        }
        let m = &self.mds;
        if m.len() != 8 || m.distance() != 7 || m.order() as usize != n {
            return Err(Error::InvalidParameters(
                "code must have length 8, distance 7 and order n".into(),
            ));
        }
        verify_mds(m)?;
        if self.s8.v != 8 || self.s10.v != 10 {
            return Err(Error::InvalidParameters(
                "need an SQS(8) and an SQS(10)".into(),
            ));
        }
        verify_sqs(&self.s8)?;
        verify_sqs(&self.s10)?;
        if !has_spread(&self.s10) {
            return Err(Error::InvalidParameters(
                "SQS(10) lacks the blocks {2i, 2i+1, 8, 9}".into(),
            ));
        }
        let pairs: Vec<(usize, usize)> = self.bbds.iter().map(|(p, _)| *p).collect();
        if pairs != cross_pairs() {
            return Err(Error::InvalidParameters(
                "need one BBD per cross-column coordinate pair".into(),
            ));
        }
        for (_, b) in &self.bbds {
            if b.n != 2 * n {
                return Err(Error::InvalidParameters(format!(
                    "BBDs must have {} points",
                    2 * n
                )));
            }
            verify_bbd(b)?;
        }
        if let Some(cols) = &self.columns {
            if cols.len() != 4 || cols.iter().any(|d| d.v != 2 * n + 2) {
                return Err(Error::InvalidParameters(format!(
                    "need four SQS({}) column designs",
                    2 * n + 2
                )));
            }
            for d in cols {
                verify_sqs(d)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `R1`, `R2`, `R3` only.
    Partial,
    /// All four families; needs the column designs.
    Full,
}

/// The four block families on `8n + 2` points.
#[derive(Debug, Clone)]
pub struct Sqs8n2 {
    pub n: usize,
    pub r1: Vec<[u32; 4]>,
    pub r2: Vec<[u32; 4]>,
    pub r3: Vec<[u32; 4]>,
    pub r4: Vec<[u32; 4]>,
}

impl Sqs8n2 {
    pub fn v(&self) -> usize {
        8 * self.n + 2
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[u32; 4]> + '_ {
        self.r1
            .iter()
            .chain(&self.r2)
            .chain(&self.r3)
            .chain(&self.r4)
    }

    pub fn design(&self) -> Sqs {
        Sqs::new(self.v(), self.blocks().copied())
    }

    /// Column `i` of a point, `None` for `e1`, `e2`.
    pub fn column(&self, p: u32) -> Option<usize> {
        let p = p as usize;
        (p < 8 * self.n).then_some(p / self.n / 2)
    }

    /// Whether a triple lies inside some `A_(i,0) ∪ A_(i,1) ∪ {e1, e2}`.
    pub fn is_intra_column(&self, triple: &[u32]) -> bool {
        let mut cols = triple.iter().filter_map(|&p| self.column(p));
        match cols.next() {
            None => true,
            Some(c) => cols.all(|d| d == c),
        }
    }
}

/// Cross-column triples are covered exactly once and intra-column triples
/// not at all.
pub fn verify_partial(build: &Sqs8n2) -> Verdict {
    let mut map = CoverageMap::new(build.v(), 3).map_err(|e| Violation::Shape {
        reason: e.to_string(),
    })?;
    for b in build.r1.iter().chain(&build.r2).chain(&build.r3) {
        map.add_block(b)?;
    }
    match map.first_mismatch(|s| Some(u8::from(!build.is_intra_column(s)))) {
        Some((subset, count)) => Err(Violation::Coverage {
            subset,
            count: count as u32,
        }),
        None => Ok(()),
    }
}

fn quad(points: impl IntoIterator<Item = u32>) -> [u32; 4] {
    let mut it = points.into_iter();
    let mut b = [0u32; 4];
    for x in b.iter_mut() {
        *x = it.next().expect("four points");
    }
    b.sort_unstable();
    b
}

pub fn build_8n2(ing: &Sqs8n2Ingredients, mode: Mode) -> Result<Sqs8n2> {
    ing.verify()?;
    let n = ing.n;
    let nn = n as u32;
    let e = [8 * nn, 8 * nn + 1];
    let point = |c: u32, x: u32| c * nn + x;

    // R1: C_s \ M_s over each block s of S8
    let mut r1 = Vec::new();
    for s in &ing.s8.blocks {
        let extra = (0..8u32)
            .find(|c| !s.contains(c))
            .expect("a fifth coordinate");
        let keep: Vec<usize> = s.iter().chain([&extra]).map(|&c| c as usize).collect();
        let ext = extend_code(&ing.mds.restrict(&keep)?)?;
        let before = r1.len();
        for w in ext.outer.words() {
            if !ext.inner.contains(w) {
                r1.push(quad(s.iter().zip(w).map(|(&c, &x)| point(c, x))));
            }
        }
        if r1.len() - before != n * n * n - n * n {
            return Err(Error::InvalidParameters(format!(
                "projection on {s:?} is not contained in its extension"
            )));
        }
    }

    // R2: for each codeword, the S10 blocks not containing both e1 and e2
    let lift = |b: &[u32], p: u32| {
        if p >= 8 {
            e[p as usize - 8]
        } else {
            point(p, b[p as usize])
        }
    };
    let p_b: Vec<&[u32; 4]> = ing
        .s10
        .blocks
        .iter()
        .filter(|blk| !(blk.contains(&8) && blk.contains(&9)))
        .collect();
    let mut r2 = Vec::with_capacity(p_b.len() * n * n);
    for w in ing.mds.words() {
        for blk in &p_b {
            r2.push(quad(blk.iter().map(|&p| lift(w, p))));
        }
    }

    // R3: BBDs between groups of different columns
    let mut r3 = Vec::new();
    for ((c0, c1), bbd) in &ing.bbds {
        let (lo0, lo1) = (*c0 as u32 * nn, *c1 as u32 * nn);
        for b in &bbd.blocks {
            r3.push(quad(b.iter().map(|&p| {
                if p < nn {
                    lo0 + p
                } else {
                    lo1 + p - nn
                }
            })));
        }
    }

    let mut r4 = Vec::new();
    if mode == Mode::Full {
        let cols = ing.columns.as_ref().ok_or_else(|| {
            Error::Missing(format!(
                "full mode needs four SQS({}) column designs",
                2 * n + 2
            ))
        })?;
        for (i, d) in cols.iter().enumerate() {
            let base = 2 * i as u32 * nn;
            let map: Vec<u32> = (0..2 * nn).map(|p| base + p).chain(e).collect();
            r4.extend(d.relabel(8 * n + 2, &map).blocks);
        }
    }
    Ok(Sqs8n2 { n, r1, r2, r3, r4 })
}

/// Whether the families share a block.
pub fn families_disjoint(build: &Sqs8n2) -> bool {
    let mut seen = HashSet::new();
    build.blocks().all(|b| seen.insert(*b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_systems() {
        let s = boolean_sqs(3).unwrap();
        assert_eq!(s.blocks.len(), 14);
        assert_eq!(verify_sqs(&s), Ok(()));
        let s = boolean_sqs(4).unwrap();
        assert_eq!(s.blocks.len(), 140);
        assert_eq!(verify_sqs(&s), Ok(()));
    }

    #[test]
    fn deleted_block_is_reported() {
        let mut s = boolean_sqs(3).unwrap();
        s.blocks.pop();
        assert!(matches!(
            verify_sqs(&s),
            Err(Violation::BlockCount {
                expected: 14,
                found: 13
            })
        ));
        let mut map = CoverageMap::new(8, 3).unwrap();
        for b in &s.blocks {
            map.add_block(b).unwrap();
        }
        assert_eq!(map.iter().filter(|(_, c)| *c == 0).count(), 4);
        assert!(matches!(
            verify_steiner3(8, &s.blocks, &[4]),
            Err(Violation::Coverage { count: 0, .. })
        ));
    }

    #[test]
    fn inadmissible_orders() {
        assert!(verify_sqs(&Sqs::new(7, [])).is_err());
        assert!(search_sqs(9, 0, 10).is_err());
        assert_eq!(search_sqs(4, 0, 10).unwrap().blocks, vec![[0, 1, 2, 3]]);
    }

    #[test]
    fn triple_ranks_round_trip() {
        let mut r = 0;
        for c in 2..12u32 {
            for b in 1..c {
                for a in 0..b {
                    assert_eq!(rank3(a, b, c), r);
                    assert_eq!(unrank3(r, 12), [a, b, c]);
                    r += 1;
                }
            }
        }
    }

    #[test]
    fn search_small_orders() {
        for v in [8, 10, 14, 16] {
            let s = search_sqs(v, 3, 1_000_000).unwrap();
            assert_eq!(verify_sqs(&s), Ok(()), "v={v}");
            assert_eq!(search_sqs(v, 3, 1_000_000).unwrap(), s);
        }
        assert!(matches!(
            search_sqs(16, 3, 5),
            Err(Error::SearchFailed { steps: 5, .. })
        ));
    }

    #[test]
    fn search_reaches_34() {
        let s = search_sqs(34, 4, 50_000_000).unwrap();
        assert_eq!(verify_sqs(&s), Ok(()));
    }

    #[test]
    fn spread_sqs10() {
        let s = sqs10_with_spread().unwrap();
        assert_eq!(s.blocks.len(), 30);
        assert!(has_spread(&s));
    }

    #[test]
    fn doubling() {
        let s8 = boolean_sqs(3).unwrap();
        let b = bbd_build(8, 2).unwrap().bbd;
        let s16 = double_sqs(&s8, &s8, &b).unwrap();
        assert_eq!(s16.blocks.len(), 140);
        assert_eq!(verify_sqs(&s16), Ok(()));
        assert!(s8.blocks.iter().all(|blk| s16.blocks.contains(blk)));
        assert!(double_sqs(&s8, &s16, &b).is_err());
    }

    #[test]
    fn partial_assembly_at_n8() {
        let ing = Sqs8n2Ingredients::standard(8).unwrap();
        let build = build_8n2(&ing, Mode::Partial).unwrap();
        let n = 8;
        assert_eq!(build.r1.len(), 14 * (n * n * n - n * n));
        assert_eq!(build.r2.len(), 26 * n * n);
        assert_eq!(build.r3.len(), 6 * n * n * (n - 1));
        assert!(build.r4.is_empty());
        assert!(families_disjoint(&build));
        assert_eq!(verify_partial(&build), Ok(()));
        assert!(matches!(
            build_8n2(&ing, Mode::Full),
            Err(Error::Missing(_))
        ));
    }
}
