//! H-designs, transversal designs and 3-wise bipartite balanced designs.
//!
//! A length-4 code over an even alphabet `Q = [0, q)` closed under
//!
//! ```text
//! (x,y,u,v) in M  =>  (y,x,u,v), (x,y,v,u), (y,x,v,u) in M,
//! (x,x,u,u) in M  for all x, u
//! ```
//!
//! is the same thing as a 3-BBD on `2q` points: point `x` of the first
//! group is id `x`, point `u` of the second group is id `q + u`, and each
//! block `{x, y, q+u, q+v}` stands for the four words with `x != y`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::latin::{symmetric_unipotent_ls, LatinSquare};
use crate::mds::{verify_mds, Code, Subcode};
use crate::oracle::CoverageMap;
use crate::report::{Verdict, Violation};

/// `w`-element transverses of `d` groups of size `q`. Group `i` is the
/// point range `[i*q, (i+1)*q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HDesign {
    pub d: usize,
    pub q: usize,
    pub w: usize,
    pub t: usize,
    pub blocks: Vec<Vec<u32>>,
}

impl HDesign {
    pub fn group_of(&self, point: u32) -> usize {
        point as usize / self.q
    }

    pub fn groups(&self) -> Vec<Vec<u32>> {
        (0..self.d)
            .map(|i| ((i * self.q) as u32..((i + 1) * self.q) as u32).collect())
            .collect()
    }
}

fn is_transverse(points: &[u32], q: usize) -> bool {
    let mut groups: Vec<usize> = points.iter().map(|&p| p as usize / q).collect();
    groups.sort_unstable();
    groups.windows(2).all(|w| w[0] != w[1])
}

pub fn verify_hdesign(h: &HDesign) -> Verdict {
    let v = h.d * h.q;
    if h.t == 0 || h.t > h.w || h.w > h.d {
        return Err(Violation::Shape {
            reason: format!("need 0 < t <= w <= d, got t={} w={} d={}", h.t, h.w, h.d),
        });
    }
    let mut map = CoverageMap::new(v, h.t).map_err(|e| Violation::Shape {
        reason: e.to_string(),
    })?;
    for b in &h.blocks {
        if b.len() != h.w || !is_transverse(b, h.q) {
            return Err(Violation::BadBlock {
                block: b.clone(),
                reason: format!("not a {}-element transverse", h.w),
            });
        }
        map.add_block(b)?;
    }
    let q = h.q;
    match map.first_mismatch(|s| is_transverse(s, q).then_some(1)) {
        Some((subset, count)) => Err(Violation::Coverage {
            subset,
            count: count as u32,
        }),
        None => Ok(()),
    }
}

/// Word `c` becomes the block `{i*q + c_i}`; an MDS code of rank `m` gives
/// an `H(d, q, d, m)` design.
pub fn code_to_hdesign(code: &Code) -> HDesign {
    let q = code.order() as usize;
    HDesign {
        d: code.len(),
        q,
        w: code.len(),
        t: code.rank(),
        blocks: code
            .words()
            .map(|w| {
                w.iter()
                    .enumerate()
                    .map(|(i, &x)| (i * q) as u32 + x)
                    .collect()
            })
            .collect(),
    }
}

/// A 3-wise bipartite balanced design on `n` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bbd {
    pub n: usize,
    pub g1: Vec<u32>,
    pub g2: Vec<u32>,
    /// Sorted within and across blocks.
    pub blocks: Vec<[u32; 4]>,
}

impl Bbd {
    pub fn new(n: usize, g1: Vec<u32>, g2: Vec<u32>, blocks: Vec<[u32; 4]>) -> Bbd {
        let mut blocks: Vec<[u32; 4]> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        Bbd { n, g1, g2, blocks }
    }

    /// Groups `[0, q)` and `[q, 2q)`.
    pub fn standard(q: usize, blocks: Vec<[u32; 4]>) -> Bbd {
        Bbd::new(
            2 * q,
            (0..q as u32).collect(),
            (q as u32..2 * q as u32).collect(),
            blocks,
        )
    }

    /// Half the point count.
    pub fn group_size(&self) -> usize {
        self.n / 2
    }

    pub fn expected_blocks(&self) -> u64 {
        let h = self.group_size() as u64;
        h * h * h.saturating_sub(1) / 4
    }

    fn is_standard(&self) -> bool {
        let q = self.group_size() as u32;
        self.g1.iter().copied().eq(0..q) && self.g2.iter().copied().eq(q..2 * q)
    }
}

/// Groups partition the points into halves, every block meets each group
/// twice and every triple meeting both groups is in exactly one block.
pub fn verify_bbd(bbd: &Bbd) -> Verdict {
    let n = bbd.n;
    let mut side = vec![0u8; n];
    for (tag, group) in [(1u8, &bbd.g1), (2u8, &bbd.g2)] {
        for &p in group {
            if p as usize >= n || side[p as usize] != 0 {
                return Err(Violation::Shape {
                    reason: format!("point {p} is out of range or in both groups"),
                });
            }
            side[p as usize] = tag;
        }
    }
    if n % 2 == 1 || bbd.g1.len() != n / 2 || bbd.g2.len() != n / 2 {
        return Err(Violation::Shape {
            reason: format!(
                "groups of sizes {} and {} do not halve {n} points",
                bbd.g1.len(),
                bbd.g2.len()
            ),
        });
    }
    if bbd.blocks.len() as u64 != bbd.expected_blocks() {
        return Err(Violation::BlockCount {
            expected: bbd.expected_blocks(),
            found: bbd.blocks.len() as u64,
        });
    }
    let mut map = CoverageMap::new(n, 3).map_err(|e| Violation::Shape {
        reason: e.to_string(),
    })?;
    for b in &bbd.blocks {
        map.add_block(b)?;
        if b.iter().filter(|&&p| side[p as usize] == 1).count() != 2 {
            return Err(Violation::BadBlock {
                block: b.to_vec(),
                reason: "block must meet each group in two points".into(),
            });
        }
    }
    let mixed = |s: &[u32]| {
        let ones = s.iter().filter(|&&p| side[p as usize] == 1).count();
        (ones == 1 || ones == 2).then_some(1)
    };
    match map.first_mismatch(mixed) {
        Some((subset, count)) => Err(Violation::Coverage {
            subset,
            count: count as u32,
        }),
        None => Ok(()),
    }
}

/// The closure rules that make a length-4 code a BBD.
pub fn check_eq1(code: &Code) -> Verdict {
    if code.len() != 4 {
        return Err(Violation::Shape {
            reason: format!("expected length 4, got {}", code.len()),
        });
    }
    for w in code.words() {
        let (x, y, u, v) = (w[0], w[1], w[2], w[3]);
        for (image, rule) in [([y, x, u, v], "swap12"), ([x, y, v, u], "swap34")] {
            if !code.contains(&image) {
                return Err(Violation::Closure {
                    word: image.to_vec(),
                    rule: rule.into(),
                });
            }
        }
    }
    for x in 0..code.order() {
        for u in 0..code.order() {
            if !code.contains(&[x, x, u, u]) {
                return Err(Violation::Closure {
                    word: vec![x, x, u, u],
                    rule: "diagonal".into(),
                });
            }
        }
    }
    Ok(())
}

pub fn code_to_bbd(code: &Code) -> Result<Bbd> {
    let q = code.order();
    if q % 2 == 1 {
        return Err(Error::InvalidParameters(format!("order {q} is odd")));
    }
    check_eq1(code)?;
    let mut blocks = Vec::new();
    for w in code.words() {
        if (w[0] == w[1]) != (w[2] == w[3]) {
            // (x,x,u,v) is at distance 1 from (x,x,u,u)
            return Err(Violation::BadBlock {
                block: w.to_vec(),
                reason: "word equal in exactly one coordinate pair".into(),
            }
            .into());
        }
        if w[0] < w[1] && w[2] < w[3] {
            blocks.push([w[0], w[1], q + w[2], q + w[3]]);
        }
    }
    Ok(Bbd::standard(q as usize, blocks))
}

pub fn bbd_to_code(bbd: &Bbd) -> Result<Code> {
    if !bbd.is_standard() {
        return Err(Error::InvalidParameters(
            "groups must be [0, q) and [q, 2q)".into(),
        ));
    }
    let q = bbd.group_size() as u32;
    let mut words = Vec::with_capacity(bbd.blocks.len() * 4 + (q * q) as usize);
    for b in &bbd.blocks {
        let (x, y, u, v) = (b[0], b[1], b[2] - q, b[3] - q);
        if b[1] >= q || b[2] < q {
            return Err(Violation::BadBlock {
                block: b.to_vec(),
                reason: "block must meet each group in two points".into(),
            }
            .into());
        }
        words.extend([[x, y, u, v], [y, x, u, v], [x, y, v, u], [y, x, v, u]]);
    }
    for x in 0..q {
        for u in 0..q {
            words.push([x, x, u, u]);
        }
    }
    Code::new(4, q, 2, words)
}

/// Which of `K0 = [0, l)` and `K1 = [q-l, q)` each coordinate ranges over.
pub type Sigma = [u8; 4];

/// `0101, 1001, 0110, 1010`: the orbit of `0101` under swapping the first
/// two and the last two coordinates, listed as `id, (12), (34), (12)(34)`.
pub const SIGMAS: [Sigma; 4] = [[0, 1, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0], [1, 0, 1, 0]];

/// Coordinate permutations of the switching group, in `SIGMAS` order.
const UPSILON: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 2, 3], [0, 1, 3, 2], [1, 0, 3, 2]];

/// `M = {(x, y, u, v) : f(x, y) = f(u, v)}` with its BBD and the four
/// subcodes `B_sigma`.
#[derive(Debug, Clone)]
pub struct BbdBuild {
    pub q: usize,
    pub l: usize,
    pub square: LatinSquare,
    pub code: Code,
    pub bbd: Bbd,
    /// `B_sigma` for each entry of `SIGMAS`; empty when `l < 2`.
    pub components: Vec<(Sigma, Subcode)>,
}

impl BbdBuild {
    pub fn alphabet(&self, side: u8) -> Vec<u32> {
        let (q, l) = (self.q as u32, self.l as u32);
        match side {
            0 => (0..l).collect(),
            _ => (q - l..q).collect(),
        }
    }

    /// `B_0101` in local coordinates: symbol `s` stands for the `s`-th
    /// element of its alphabet.
    pub fn identity_component(&self) -> Option<Code> {
        self.components
            .first()
            .map(|(_, c)| c.local_code(2).expect("component of a distance-2 code"))
    }
}

pub fn bbd_build(q: usize, l: usize) -> Result<BbdBuild> {
    let square = symmetric_unipotent_ls(q, l)?;
    let f = |x: usize, y: usize| square.at(x, y) as usize;
    // column_of[u][s] = v with f(u, v) = s
    let mut column_of = vec![0u32; q * q];
    for u in 0..q {
        for v in 0..q {
            column_of[u * q + f(u, v)] = v as u32;
        }
    }
    let mut words = Vec::with_capacity(q * q * q);
    for x in 0..q {
        for y in 0..q {
            for u in 0..q {
                words.push([x as u32, y as u32, u as u32, column_of[u * q + f(x, y)]]);
            }
        }
    }
    let code = Code::new(4, q as u32, 2, words)?;
    let bbd = code_to_bbd(&code)?;
    let mut build = BbdBuild {
        q,
        l,
        square,
        code,
        bbd,
        components: Vec::new(),
    };
    if l >= 2 {
        for sigma in SIGMAS {
            let alphabets = sigma.iter().map(|&s| build.alphabet(s)).collect();
            let sub = Subcode::of(&build.code, alphabets)?;
            sub.verify(&build.code)?;
            build.components.push((sigma, sub));
        }
    }
    Ok(build)
}

/// Replaces every `B_{pi sigma}` by `C_pi = {(x_{pi 1}, .., x_{pi 4}) : x in C}`
/// where `C` is a length-4 distance-2 code of order `l` in local symbols on
/// `K0 x K1 x K0 x K1`. Returns the new code and its BBD.
pub fn bbd_switch(build: &BbdBuild, local: &Code) -> Result<(Code, Bbd)> {
    let l = build.l;
    if build.components.len() != 4 {
        return Err(Error::InvalidParameters(format!(
            "subcode order {l} has no switching components"
        )));
    }
    if local.len() != 4 || local.order() as usize != l || local.distance() != 2 {
        return Err(Error::InvalidParameters(format!(
            "replacement must be a length-4 distance-2 code of order {l}"
        )));
    }
    verify_mds(local)?;
    let k = [build.alphabet(0), build.alphabet(1)];
    let base = SIGMAS[0];
    let mut remove = Vec::new();
    let mut insert = Vec::new();
    for (pi, (_, comp)) in UPSILON.iter().zip(&build.components) {
        remove.extend(comp.words().iter().cloned());
        for w in local.words() {
            let global: Vec<u32> = (0..4).map(|i| k[base[i] as usize][w[i] as usize]).collect();
            insert.push(pi.iter().map(|&j| global[j]).collect::<Vec<u32>>());
        }
    }
    let code = build.code.exchange(&remove, &insert)?;
    let bbd = code_to_bbd(&code)?;
    Ok((code, bbd))
}

/// Every length-4 distance-2 code over `[0, l)`, i.e. every latin cube of
/// order `l` read as `(x, y, u, g(x, y, u))`. Exhaustive, `l <= 3`.
pub fn all_distance2_codes(l: usize) -> Result<Vec<Code>> {
    if l == 0 || l > 3 {
        return Err(Error::InvalidParameters(format!(
            "order {l} is outside 1..=3"
        )));
    }
    let mut out = Vec::new();
    let mut cells = vec![0u32; l * l * l];
    fn fill(i: usize, l: usize, cells: &mut [u32], out: &mut Vec<Vec<u32>>) {
        if i == cells.len() {
            out.push(cells.to_vec());
            return;
        }
        let (x, y, u) = (i / (l * l), i / l % l, i % l);
        for s in 0..l as u32 {
            let clash = (0..x).any(|a| cells[(a * l + y) * l + u] == s)
                || (0..y).any(|b| cells[(x * l + b) * l + u] == s)
                || (0..u).any(|c| cells[(x * l + y) * l + c] == s);
            if !clash {
                cells[i] = s;
                fill(i + 1, l, cells, out);
            }
        }
    }
    let mut cubes = Vec::new();
    fill(0, l, &mut cells, &mut cubes);
    for g in cubes {
        let words = (0..l * l * l).map(|i| {
            [
                (i / (l * l)) as u32,
                (i / l % l) as u32,
                (i % l) as u32,
                g[i],
            ]
        });
        out.push(Code::new(4, l as u32, 2, words)?);
    }
    Ok(out)
}

/// Blocks present in exactly one of the two designs.
pub fn block_difference(a: &Bbd, b: &Bbd) -> Vec<[u32; 4]> {
    let x: BTreeSet<&[u32; 4]> = a.blocks.iter().collect();
    let y: BTreeSet<&[u32; 4]> = b.blocks.iter().collect();
    x.symmetric_difference(&y).map(|&&b| b).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::mds::linear_mds;
    use std::sync::Arc;

    #[test]
    fn transversal_design_from_latin_square() {
        let words: Vec<[u32; 3]> = (0..5u32)
            .flat_map(|x| (0..5u32).map(move |y| [x, y, (x + y) % 5]))
            .collect();
        let code = Code::new(3, 5, 2, &words).unwrap();
        let mut h = code_to_hdesign(&code);
        assert_eq!((h.d, h.q, h.w, h.t), (3, 5, 3, 2));
        assert_eq!(verify_hdesign(&h), Ok(()));
        h.blocks.pop();
        assert!(matches!(
            verify_hdesign(&h),
            Err(Violation::Coverage { count: 0, .. })
        ));
        h.blocks.push(vec![0, 1, 10]);
        assert!(matches!(
            verify_hdesign(&h),
            Err(Violation::BadBlock { .. })
        ));
    }

    #[test]
    fn gf16_code_is_a_transversal_design() {
        let code = linear_mds(&Arc::new(Field::new(2, 4).unwrap()), 8, 7).unwrap();
        let h = code_to_hdesign(&code);
        assert_eq!((h.d, h.q, h.t), (8, 16, 2));
        assert_eq!(verify_hdesign(&h), Ok(()));
    }

    #[test]
    fn order_four_code_and_design() {
        let b = bbd_build(4, 0).unwrap();
        assert_eq!(b.code.size(), 64);
        assert_eq!(b.code.words().filter(|w| w[0] == w[1]).count(), 16);
        assert_eq!(b.bbd.blocks.len(), 12);
        assert_eq!(verify_bbd(&b.bbd), Ok(()));
        assert!(b.components.is_empty());
        assert_eq!(bbd_to_code(&b.bbd).unwrap(), b.code);
        let mut map = CoverageMap::new(8, 3).unwrap();
        for blk in &b.bbd.blocks {
            map.add_block(blk).unwrap();
        }
        let mixed = map
            .iter()
            .filter(|(s, c)| *c == 1 && s.iter().any(|&p| p < 4) && s.iter().any(|&p| p >= 4))
            .count();
        assert_eq!(mixed, 48);
    }

    #[test]
    fn builds_verify() {
        for (q, l, blocks) in [(8, 2, 112), (16, 4, 960), (6, 1, 45), (12, 3, 396)] {
            let b = bbd_build(q, l).unwrap();
            assert_eq!(b.bbd.blocks.len(), blocks);
            assert_eq!(verify_bbd(&b.bbd), Ok(()), "q={q} l={l}");
            assert_eq!(verify_mds(&b.code), Ok(()));
            assert_eq!(check_eq1(&b.code), Ok(()));
        }
    }

    #[test]
    fn components_sit_on_their_products() {
        let b = bbd_build(16, 4).unwrap();
        assert_eq!(b.components.len(), 4);
        for (i, (sigma, c)) in b.components.iter().enumerate() {
            assert_eq!(c.words().len(), 64);
            for w in c.words() {
                for (x, &s) in w.iter().zip(sigma) {
                    assert_eq!(*x >= 12, s == 1);
                    assert!(*x < 4 || *x >= 12);
                }
            }
            for (_, d) in &b.components[i + 1..] {
                assert!(c.is_disjoint(d));
            }
        }
    }

    #[test]
    fn switching_all_order_two_codes() {
        let b = bbd_build(8, 2).unwrap();
        let identity = b.identity_component().unwrap();
        let codes = all_distance2_codes(2).unwrap();
        assert_eq!(codes.len(), 2);
        let mut designs = BTreeSet::new();
        for c in &codes {
            let (code, bbd) = bbd_switch(&b, c).unwrap();
            assert_eq!(check_eq1(&code), Ok(()));
            assert_eq!(verify_bbd(&bbd), Ok(()));
            if *c == identity {
                assert_eq!(bbd, b.bbd);
            }
            for blk in block_difference(&bbd, &b.bbd) {
                assert!(blk.iter().any(|&p| {
                    let x = p % 8;
                    !(2..6).contains(&x)
                }));
            }
            designs.insert(bbd.blocks.clone());
        }
        assert_eq!(designs.len(), 2);
    }

    #[test]
    fn eq1_violations_are_reported() {
        let b = bbd_build(4, 0).unwrap();
        let w = b.code.words().find(|w| w[0] < w[1]).unwrap().to_vec();
        let broken = b.code.exchange(std::slice::from_ref(&w), &[]).unwrap();
        assert!(matches!(check_eq1(&broken), Err(Violation::Closure { .. })));
        assert!(code_to_bbd(&broken).is_err());
    }

    #[test]
    fn order_three_cubes() {
        assert_eq!(all_distance2_codes(1).unwrap().len(), 1);
        assert_eq!(all_distance2_codes(3).unwrap().len(), 24);
    }
}
