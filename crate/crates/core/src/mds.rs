//! MDS codes: storage, exhaustive verification, linear constructions,
//! projection, the distance-2 extension and the correspondence with
//! orthogonal systems.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::latin::{verify_latin, LatinHypercube, LatinSquare, OrthogonalSystem};
use crate::report::{Verdict, Violation};

/// Generator of a linear code: `word = message * generator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub field: Arc<Field>,
    /// `m x d`, rows indexed by message coordinate.
    pub generator: Vec<Vec<u32>>,
}

impl LinearForm {
    /// All generator entries lie in the prime subfield GF(p).
    pub fn over_prime_subfield(&self) -> bool {
        let p = self.field.characteristic();
        self.generator.iter().flatten().all(|&c| c < p)
    }

    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        let d = self.generator.first().map_or(0, |r| r.len());
        (0..d)
            .map(|i| {
                message
                    .iter()
                    .zip(&self.generator)
                    .fold(0, |acc, (&c, row)| {
                        self.field.add(acc, self.field.mul(c, row[i]))
                    })
            })
            .collect()
    }
}

/// A set of length-`len` words over `[0, order)` with declared distance.
///
/// Words are kept sorted and distinct. When the code has exactly
/// `order^rank` words whose first `rank` coordinates are all distinct,
/// membership is a constant-time lookup by that prefix.
#[derive(Debug, Clone)]
pub struct Code {
    len: usize,
    order: u32,
    distance: usize,
    words: Vec<u32>,
    linear: Option<LinearForm>,
    prefix_indexed: bool,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len
            && self.order == other.order
            && self.distance == other.distance
            && self.words == other.words
    }
}

impl Eq for Code {}

impl Code {
    pub fn new<I>(len: usize, order: u32, distance: usize, words: I) -> Result<Code>
    where
        I: IntoIterator,
        I::Item: AsRef<[u32]>,
    {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (i, w) in words.into_iter().enumerate() {
            let w = w.as_ref();
            if w.len() != len {
                return Err(Error::Malformed(format!(
                    "word {i} has length {}, expected {len}",
                    w.len()
                )));
            }
            if let Some(&s) = w.iter().find(|&&s| s >= order) {
                return Err(Error::Malformed(format!(
                    "word {i} has symbol {s} >= {order}"
                )));
            }
            rows.push(w.to_vec());
        }
        if len == 0 || distance == 0 || distance > len {
            return Err(Error::InvalidParameters(format!(
                "distance {distance} is not in 1..={len}"
            )));
        }
        rows.sort_unstable();
        rows.dedup();
        let mut code = Code {
            len,
            order,
            distance,
            words: rows.concat(),
            linear: None,
            prefix_indexed: false,
        };
        code.prefix_indexed = code.compute_prefix_index();
        Ok(code)
    }

    fn compute_prefix_index(&self) -> bool {
        let m = self.rank();
        match (self.order as u64).checked_pow(m as u32) {
            Some(n) if n == self.size() as u64 => {
                (0..self.size()).all(|i| self.prefix_rank(&self.word(i)[..m]) == i)
            }
            _ => false,
        }
    }

    fn prefix_rank(&self, prefix: &[u32]) -> usize {
        prefix
            .iter()
            .fold(0usize, |acc, &x| acc * self.order as usize + x as usize)
    }

    pub fn with_linear_form(mut self, form: LinearForm) -> Code {
        self.linear = Some(form);
        self
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn distance(&self) -> usize {
        self.distance
    }

    /// `d - rho + 1`: the number of free coordinates.
    pub fn rank(&self) -> usize {
        self.len - self.distance + 1
    }

    /// Number of words.
    pub fn size(&self) -> usize {
        self.words.len() / self.len
    }

    pub fn linear_form(&self) -> Option<&LinearForm> {
        self.linear.as_ref()
    }

    pub fn word(&self, i: usize) -> &[u32] {
        &self.words[i * self.len..(i + 1) * self.len]
    }

    pub fn words(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.words.chunks(self.len)
    }

    pub fn to_vecs(&self) -> Vec<Vec<u32>> {
        self.words().map(|w| w.to_vec()).collect()
    }

    pub fn position(&self, word: &[u32]) -> Option<usize> {
        if word.len() != self.len || word.iter().any(|&s| s >= self.order) {
            return None;
        }
        if self.prefix_indexed {
            let i = self.prefix_rank(&word[..self.rank()]);
            return (self.word(i) == word).then_some(i);
        }
        let (mut lo, mut hi) = (0usize, self.size());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.word(mid).cmp(word) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        self.position(word).is_some()
    }

    /// The word whose first `rank` coordinates equal `prefix`, when the
    /// code is indexed by prefix.
    pub fn by_prefix(&self, prefix: &[u32]) -> Option<&[u32]> {
        if !self.prefix_indexed || prefix.len() != self.rank() {
            return None;
        }
        if prefix.iter().any(|&s| s >= self.order) {
            return None;
        }
        Some(self.word(self.prefix_rank(prefix)))
    }

    /// Quadratic minimum Hamming distance over all pairs of words.
    pub fn min_distance(&self) -> Option<usize> {
        let n = self.size();
        let mut best: Option<usize> = None;
        for i in 0..n {
            for j in i + 1..n {
                let dist = self
                    .word(i)
                    .iter()
                    .zip(self.word(j))
                    .filter(|(a, b)| a != b)
                    .count();
                best = Some(best.map_or(dist, |b: usize| b.min(dist)));
            }
        }
        best
    }

    /// `(self \ remove) ∪ insert`. Every removed word must be present.
    pub fn exchange(&self, remove: &[Vec<u32>], insert: &[Vec<u32>]) -> Result<Code> {
        let gone: HashSet<&[u32]> = remove.iter().map(|w| w.as_slice()).collect();
        if let Some(w) = remove.iter().find(|w| !self.contains(w)) {
            return Err(Error::InvalidParameters(format!(
                "word {w:?} to be replaced is not in the code"
            )));
        }
        let kept = self.words().filter(|w| !gone.contains(w));
        let all: Vec<Vec<u32>> = kept
            .map(|w| w.to_vec())
            .chain(insert.iter().cloned())
            .collect();
        Code::new(self.len, self.order, self.distance, all)
    }

    /// Keeps the coordinates `keep` in that order. The distance drops by
    /// the number of removed coordinates and must stay at least 2.
    pub fn restrict(&self, keep: &[usize]) -> Result<Code> {
        let removed = self.len - keep.len();
        if keep.iter().any(|&c| c >= self.len) || keep.len() > self.len {
            return Err(Error::InvalidParameters("coordinate out of range".into()));
        }
        let distinct: HashSet<usize> = keep.iter().copied().collect();
        if distinct.len() != keep.len() {
            return Err(Error::InvalidParameters("repeated coordinate".into()));
        }
        if self.distance < removed + 2 {
            return Err(Error::InvalidParameters(format!(
                "removing {removed} coordinates from a distance-{} code does not keep words distinct",
                self.distance
            )));
        }
        let words = self
            .words()
            .map(|w| keep.iter().map(|&c| w[c]).collect::<Vec<u32>>());
        let out = Code::new(keep.len(), self.order, self.distance - removed, words)?;
        Ok(match &self.linear {
            Some(form) => out.with_linear_form(LinearForm {
                field: form.field.clone(),
                generator: form
                    .generator
                    .iter()
                    .map(|row| keep.iter().map(|&c| row[c]).collect())
                    .collect(),
            }),
            None => out,
        })
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The attached generator spans exactly the word set.
pub fn check_linear_form(code: &Code) -> Verdict {
    let Some(form) = code.linear_form() else {
        return Ok(());
    };
    let q = form.field.order();
    let m = form.generator.len();
    if q != code.order || form.generator.iter().any(|r| r.len() != code.len) {
        return Err(Violation::Shape {
            reason: format!("generator is not {m} x {} over GF({q})", code.len),
        });
    }
    let mut message = vec![0u32; m];
    let mut spanned = HashSet::new();
    loop {
        let w = form.encode(&message);
        if !code.contains(&w) {
            return Err(Violation::Closure {
                word: w,
                rule: "linear_span".into(),
            });
        }
        spanned.insert(w);
        // next message, first coordinate fastest
        let Some(i) = message.iter().position(|&c| c + 1 < q) else {
            break;
        };
        message[..i].iter_mut().for_each(|c| *c = 0);
        message[i] += 1;
    }
    if spanned.len() != code.size() {
        return Err(Violation::Cardinality {
            expected: spanned.len() as u64,
            found: code.size() as u64,
        });
    }
    Ok(())
}

/// Accepts iff the code has `q^(d-rho+1)` words and every projection onto
/// `d-rho+1` coordinates is injective.
pub fn verify_mds(code: &Code) -> Verdict {
    let m = code.rank();
    let q = code.order as u64;
    let expected = q.checked_pow(m as u32).ok_or_else(|| Violation::Shape {
        reason: "q^m overflows".into(),
    })?;
    if code.size() as u64 != expected {
        return Err(Violation::Cardinality {
            expected,
            found: code.size() as u64,
        });
    }
    // (round, word index) of the last word seen at each projected value
    let mut owner = vec![(usize::MAX, 0usize); expected as usize];
    for (round, coords) in combinations(code.len, m).into_iter().enumerate() {
        for (i, w) in code.words().enumerate() {
            let key = coords
                .iter()
                .fold(0usize, |acc, &c| acc * q as usize + w[c] as usize);
            if owner[key].0 == round {
                return Err(Violation::ProjectionCollision {
                    first: code.word(owner[key].1).to_vec(),
                    second: w.to_vec(),
                    coords,
                });
            }
            owner[key] = (round, i);
        }
    }
    Ok(())
}

/// Which construction `linear_mds` used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearConstruction {
    /// `{(a, ..., a)}`, distance `d`.
    Repetition,
    /// `sum x_i = 0`, distance 2.
    Parity,
    /// Polynomials of degree `< m` evaluated on GF(p) (and infinity).
    PrimeEvaluation,
    /// Reed-Solomon over the whole field; not GF(p)-linear coefficientwise.
    FieldEvaluation,
}

pub fn linear_construction(field: &Field, d: usize, rho: usize) -> Result<LinearConstruction> {
    let p = field.characteristic() as usize;
    let q = field.order() as usize;
    if d < 2 || rho < 2 || rho > d {
        return Err(Error::InvalidParameters(format!(
            "need d >= 2 and 2 <= rho <= d, got d={d} rho={rho}"
        )));
    }
    if rho == d {
        Ok(LinearConstruction::Repetition)
    } else if rho == 2 {
        Ok(LinearConstruction::Parity)
    } else if rho <= p && d <= p + 1 {
        Ok(LinearConstruction::PrimeEvaluation)
    } else if d <= q + 1 {
        Ok(LinearConstruction::FieldEvaluation)
    } else {
        Err(Error::InvalidParameters(format!(
            "no linear MDS code of length {d} and distance {rho} over GF({q}) is constructed here"
        )))
    }
}

/// Linear MDS code of length `d` and distance `rho` over `field`.
///
/// For `rho in {2, d}` and for `3 <= rho <= p`, `d <= p+1` the generator
/// has entries in GF(p). Other parameters with `d <= q+1` fall back to a
/// Reed-Solomon code over the full field.
pub fn linear_mds(field: &Arc<Field>, d: usize, rho: usize) -> Result<Code> {
    let kind = linear_construction(field, d, rho)?;
    let m = d - rho + 1;
    let generator: Vec<Vec<u32>> = match kind {
        LinearConstruction::Repetition => vec![vec![1; d]],
        LinearConstruction::Parity => {
            let minus_one = field.neg(1);
            (0..m)
                .map(|j| {
                    (0..d)
                        .map(|i| {
                            if i == j {
                                1
                            } else if i == d - 1 {
                                minus_one
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect()
        }
        LinearConstruction::PrimeEvaluation | LinearConstruction::FieldEvaluation => {
            // column i evaluates at point i; the (q+1)-th column is infinity
            let npoints = if kind == LinearConstruction::PrimeEvaluation {
                field.characteristic() as usize
            } else {
                field.order() as usize
            };
            (0..m)
                .map(|j| {
                    (0..d)
                        .map(|i| {
                            if i < npoints {
                                field.pow(i as u32, j as u64)
                            } else if j == m - 1 {
                                1
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    let form = LinearForm {
        field: field.clone(),
        generator,
    };
    let q = field.order();
    let count = (q as u64)
        .checked_pow(m as u32)
        .filter(|&n| n <= 1 << 26)
        .ok_or_else(|| Error::InvalidParameters("code too large to enumerate".into()))?;
    let mut message = vec![0u32; m];
    let mut words = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let mut x = idx;
        for c in message.iter_mut().rev() {
            *c = (x % q as u64) as u32;
            x /= q as u64;
        }
        words.push(form.encode(&message));
    }
    Ok(Code::new(d, q, rho, words)?.with_linear_form(form))
}

/// Deletes coordinate `drop`; the result has distance `rho - 1`.
pub fn project(code: &Code, drop: usize) -> Result<Code> {
    if drop >= code.len {
        return Err(Error::InvalidParameters(format!(
            "coordinate {drop} out of range"
        )));
    }
    if code.distance < 3 {
        return Err(Error::InvalidParameters(
            "projecting a distance-2 code collapses words".into(),
        ));
    }
    let keep: Vec<usize> = (0..code.len).filter(|&c| c != drop).collect();
    code.restrict(&keep)
}

/// Result of extending `M' = {(x, y, f, g)}` to a distance-2 code.
#[derive(Debug, Clone)]
pub struct Extension {
    /// `M'`, length 4, distance 3.
    pub inner: Code,
    /// `C = {(x, y, u, v) : phi(u, v) = h(x, y)}`, length 4, distance 2.
    pub outer: Code,
    /// `phi(f(x,y), g(x,y)) = h(x,y)`.
    pub phi: LatinSquare,
}

/// Builds `phi` and the distance-2 code containing `M'` from three MOLS.
pub fn extend_to_distance2(f: &LatinSquare, g: &LatinSquare, h: &LatinSquare) -> Result<Extension> {
    let n = f.order();
    if [g, h].iter().any(|s| s.order() != n || s.dim() != 2) || f.dim() != 2 {
        return Err(Error::InvalidParameters(
            "three squares of equal order required".into(),
        ));
    }
    let mut phi = vec![u32::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            let slot = f.at(x, y) as usize * n + g.at(x, y) as usize;
            if phi[slot] != u32::MAX {
                return Err(Violation::NotOrthogonal {
                    functions: vec![0, 1],
                    fixed: Vec::new(),
                    image: vec![f.at(x, y), g.at(x, y)],
                }
                .into());
            }
            phi[slot] = h.at(x, y);
        }
    }
    let phi = LatinHypercube::new(2, n, phi)?;
    verify_latin(&phi).map_err(|_| {
        Error::InvalidParameters("phi is not a quasigroup: h is not orthogonal to f and g".into())
    })?;
    // v = phi_u^{-1}(h(x, y))
    let mut solve = vec![0u32; n * n];
    for u in 0..n {
        for v in 0..n {
            solve[u * n + phi.at(u, v) as usize] = v as u32;
        }
    }
    let mut inner = Vec::with_capacity(n * n);
    let mut outer = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            inner.push([x as u32, y as u32, f.at(x, y), g.at(x, y)]);
            let target = h.at(x, y) as usize;
            for u in 0..n {
                outer.push([x as u32, y as u32, u as u32, solve[u * n + target]]);
            }
        }
    }
    Ok(Extension {
        inner: Code::new(4, n as u32, 3, inner)?,
        outer: Code::new(4, n as u32, 2, outer)?,
        phi,
    })
}

/// Extension of the projection of a length-5, distance-4 code that drops
/// its last coordinate.
pub fn extend_code(code: &Code) -> Result<Extension> {
    if code.len != 5 || code.distance != 4 {
        return Err(Error::InvalidParameters(
            "need a length-5 distance-4 code".into(),
        ));
    }
    let sys = to_orthogonal_system(code, 2)?;
    let n = code.order as usize;
    let sq = |i: usize| LatinHypercube::new(2, n, sys.functions()[i].clone());
    extend_to_distance2(&sq(0)?, &sq(1)?, &sq(2)?)
}

/// `f_i(x_1..x_s)` = coordinate `s+i` of the word starting with `x`.
pub fn to_orthogonal_system(code: &Code, s: usize) -> Result<OrthogonalSystem> {
    if s != code.rank() {
        return Err(Error::InvalidParameters(format!(
            "arity {s} differs from d - rho + 1 = {}",
            code.rank()
        )));
    }
    if !code.prefix_indexed {
        return Err(Error::InvalidParameters(
            "the first coordinates do not determine the words".into(),
        ));
    }
    let t = code.len - s;
    let functions = (0..t)
        .map(|i| code.words().map(|w| w[s + i]).collect())
        .collect();
    OrthogonalSystem::new(s, code.order as usize, functions)
}

/// `{(x, f_1(x), ..., f_t(x))}` with distance `t + 1`.
pub fn from_orthogonal_system(system: &OrthogonalSystem) -> Result<Code> {
    let (s, q) = (system.arity(), system.order());
    let t = system.len();
    let mut words = Vec::with_capacity(q.pow(s as u32));
    let mut x = vec![0u32; s];
    for cell in 0..q.pow(s as u32) {
        let mut rest = cell;
        for c in x.iter_mut().rev() {
            *c = (rest % q) as u32;
            rest /= q;
        }
        let mut w = x.clone();
        w.extend(system.functions().iter().map(|f| f[cell]));
        words.push(w);
    }
    Code::new(s + t, q as u32, t + 1, words)
}

/// Whether an MDS code of order `q`, distance `rho`, length `d` can have a
/// proper subcode of order `l`: `rho <= l <= q / rho`.
pub fn subcode_order_admissible(q: usize, rho: usize, d: usize, l: usize) -> Result<bool> {
    if !(d > rho && rho >= 3) {
        return Err(Error::InvalidParameters(format!(
            "the subcode order bound needs d > rho >= 3, got d={d} rho={rho}"
        )));
    }
    Ok(rho <= l && l * rho <= q)
}

/// `code ∩ (A_1 x ... x A_d)` for alphabets of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcode {
    alphabets: Vec<Vec<u32>>,
    words: Vec<Vec<u32>>,
}

impl Subcode {
    pub fn of(code: &Code, alphabets: Vec<Vec<u32>>) -> Result<Subcode> {
        if alphabets.len() != code.len {
            return Err(Error::InvalidParameters(
                "one alphabet per coordinate".into(),
            ));
        }
        let l = alphabets[0].len();
        if alphabets.iter().any(|a| a.len() != l) {
            return Err(Error::InvalidParameters("alphabets differ in size".into()));
        }
        let words = code
            .words()
            .filter(|w| w.iter().zip(&alphabets).all(|(x, a)| a.contains(x)))
            .map(|w| w.to_vec())
            .collect();
        Ok(Subcode { alphabets, words })
    }

    /// Trusted constructor for callers that computed the intersection.
    pub(crate) fn from_parts(alphabets: Vec<Vec<u32>>, mut words: Vec<Vec<u32>>) -> Subcode {
        words.sort_unstable();
        Subcode { alphabets, words }
    }

    pub fn alphabets(&self) -> &[Vec<u32>] {
        &self.alphabets
    }

    pub fn words(&self) -> &[Vec<u32>] {
        &self.words
    }

    pub fn order(&self) -> usize {
        self.alphabets[0].len()
    }

    /// Words rewritten by symbol position in each alphabet.
    pub fn local_code(&self, distance: usize) -> Result<Code> {
        let local: Vec<Vec<u32>> = self
            .words
            .iter()
            .map(|w| {
                w.iter()
                    .zip(&self.alphabets)
                    .map(|(x, a)| a.iter().position(|y| y == x).unwrap() as u32)
                    .collect()
            })
            .collect();
        Code::new(self.alphabets.len(), self.order() as u32, distance, local)
    }

    /// The subcode is MDS of its order with the parent's distance.
    pub fn verify(&self, parent: &Code) -> Verdict {
        let local = self
            .local_code(parent.distance())
            .map_err(|e| Violation::Shape {
                reason: e.to_string(),
            })?;
        verify_mds(&local)
    }

    pub fn is_disjoint(&self, other: &Subcode) -> bool {
        let mine: HashSet<&Vec<u32>> = self.words.iter().collect();
        other.words.iter().all(|w| !mine.contains(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> Arc<Field> {
        Arc::new(Field::new(p, k).unwrap())
    }

    #[test]
    fn z3_latin_square_code() {
        let words: Vec<Vec<u32>> = (0..3)
            .flat_map(|x| (0..3).map(move |y| vec![x, y, (x + y) % 3]))
            .collect();
        let code = Code::new(3, 3, 2, &words).unwrap();
        assert_eq!(verify_mds(&code), Ok(()));
        let short = Code::new(3, 3, 2, &words[1..]).unwrap();
        assert_eq!(
            verify_mds(&short),
            Err(Violation::Cardinality {
                expected: 9,
                found: 8
            })
        );
    }

    #[test]
    fn repetition_code() {
        for d in 2..6 {
            let words: Vec<Vec<u32>> = (0..4).map(|a| vec![a; d]).collect();
            let code = Code::new(d, 4, d, words).unwrap();
            assert_eq!(verify_mds(&code), Ok(()));
        }
    }

    #[test]
    fn collision_is_reported() {
        let mut words: Vec<Vec<u32>> = (0..3)
            .flat_map(|x| (0..3).map(move |y| vec![x, y, (x + y) % 3]))
            .collect();
        words[4][2] = 0; // (1,1,2) -> (1,1,0) collides with (1,2,0) on coords 0,2
        let code = Code::new(3, 3, 2, words).unwrap();
        match verify_mds(&code) {
            Err(Violation::ProjectionCollision { coords, .. }) => assert_eq!(coords, vec![0, 2]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn linear_examples() {
        let c = linear_mds(&gf(3, 2), 3, 2).unwrap();
        assert_eq!(c.size(), 81);
        assert_eq!(verify_mds(&c), Ok(()));
        assert!(c.linear_form().unwrap().over_prime_subfield());

        let c = linear_mds(&gf(5, 1), 6, 4).unwrap();
        assert_eq!(c.size(), 125);
        assert_eq!(verify_mds(&c), Ok(()));
        assert_eq!(c.min_distance(), Some(4));

        let c = linear_mds(&gf(2, 4), 8, 7).unwrap();
        assert_eq!(c.size(), 256);
        assert_eq!(verify_mds(&c), Ok(()));
        assert!(!c.linear_form().unwrap().over_prime_subfield());
        assert_eq!(c.min_distance(), Some(7));

        assert!(linear_mds(&gf(2, 2), 7, 4).is_err());
        assert!(linear_mds(&gf(3, 1), 3, 1).is_err());
    }

    #[test]
    fn linear_codes_are_closed_under_addition() {
        let f = gf(3, 2);
        let c = linear_mds(&f, 4, 3).unwrap();
        assert!(c.contains(&[0, 0, 0, 0]));
        for a in c.words().step_by(7) {
            for b in c.words().step_by(5) {
                let s: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect();
                assert!(c.contains(&s));
            }
        }
    }

    #[test]
    fn projection() {
        let c = linear_mds(&gf(7, 1), 8, 4).unwrap();
        let once = project(&c, 7).unwrap();
        let twice = project(&once, 0).unwrap();
        assert_eq!((twice.len(), twice.distance()), (6, 2));
        assert_eq!(verify_mds(&twice), Ok(()));
        assert!(project(&twice, 0).is_err());

        let rep = Code::new(3, 3, 3, (0..3).map(|a| vec![a; 3])).unwrap();
        let diag = project(&rep, 2).unwrap();
        assert_eq!(diag.to_vecs(), vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
        assert_eq!(diag.distance(), 2);
    }

    #[test]
    fn extension_over_gf5() {
        let sq =
            |a: usize| LatinHypercube::from_fn(2, 5, |c| ((c[0] + a * c[1]) % 5) as u32).unwrap();
        let ext = extend_to_distance2(&sq(1), &sq(2), &sq(3)).unwrap();
        assert_eq!(ext.outer.size(), 125);
        assert_eq!(ext.inner.size(), 25);
        assert_eq!(verify_mds(&ext.inner), Ok(()));
        assert_eq!(verify_mds(&ext.outer), Ok(()));
        assert!(ext.inner.words().all(|w| ext.outer.contains(w)));

        let err = extend_to_distance2(&sq(1), &sq(2), &sq(1)).unwrap_err();
        assert!(matches!(err, Error::InvalidParameters(_)));
        let err = extend_to_distance2(&sq(1), &sq(1), &sq(2)).unwrap_err();
        assert!(matches!(
            err,
            Error::Verification(Violation::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn orthogonal_system_round_trip() {
        let c = linear_mds(&gf(5, 1), 5, 4).unwrap();
        let sys = to_orthogonal_system(&c, 2).unwrap();
        assert_eq!(sys.len(), 3);
        assert_eq!(
            crate::latin::check_orthogonal(&sys, crate::latin::Strength::Strong),
            Ok(())
        );
        assert_eq!(from_orthogonal_system(&sys).unwrap(), c);
        assert!(to_orthogonal_system(&c, 3).is_err());

        let rep = Code::new(2, 4, 2, (0..4).map(|a| vec![a, a])).unwrap();
        let sys = to_orthogonal_system(&rep, 1).unwrap();
        assert_eq!(sys.functions()[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn admissible_subcode_orders() {
        assert_eq!(subcode_order_admissible(9, 3, 4, 3), Ok(true));
        assert_eq!(subcode_order_admissible(9, 3, 4, 4), Ok(false));
        assert_eq!(subcode_order_admissible(8, 3, 4, 2), Ok(false));
        assert!(subcode_order_admissible(8, 2, 4, 2).is_err());
        assert!(subcode_order_admissible(8, 4, 4, 2).is_err());
    }

    #[test]
    fn subcode_of_parity_code() {
        let c = linear_mds(&gf(3, 2), 3, 2).unwrap();
        let gf3: Vec<u32> = vec![0, 1, 2];
        let sub = Subcode::of(&c, vec![gf3.clone(), gf3.clone(), gf3]).unwrap();
        assert_eq!(sub.words().len(), 9);
        assert_eq!(sub.verify(&c), Ok(()));
    }
}
