//! Latin squares and hypercubes, subsquare constructions, symmetric
//! unipotent squares and (strong) orthogonality of function systems.

use crate::error::{Error, Result};
use crate::matching::perfect_matching;
use crate::report::{Verdict, Violation};

/// A `dim`-dimensional array of `order^dim` symbols in `[0, order)`,
/// stored with the last coordinate varying fastest.
///
/// Latinness is not enforced by the type; run [`verify_latin`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinHypercube {
    dim: usize,
    order: usize,
    cells: Vec<u32>,
}

/// A latin square is the 2-dimensional case.
pub type LatinSquare = LatinHypercube;

impl LatinHypercube {
    pub fn new(dim: usize, order: usize, cells: Vec<u32>) -> Result<Self> {
        if dim < 1 {
            return Err(Error::Malformed("dimension must be at least 1".into()));
        }
        let expected = order
            .checked_pow(dim as u32)
            .ok_or_else(|| Error::Malformed("array too large".into()))?;
        if cells.len() != expected {
            return Err(Error::Malformed(format!(
                "expected {expected} cells, found {}",
                cells.len()
            )));
        }
        if let Some(&s) = cells.iter().find(|&&s| s as usize >= order) {
            return Err(Error::Malformed(format!(
                "symbol {s} out of range 0..{order}"
            )));
        }
        Ok(LatinHypercube { dim, order, cells })
    }

    /// Square from row vectors.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let q = rows.len();
        if rows.iter().any(|r| r.len() != q) {
            return Err(Error::Malformed(
                "rows must have length equal to the row count".into(),
            ));
        }
        LatinHypercube::new(2, q, rows.concat())
    }

    /// Fills every cell from its coordinate vector.
    pub fn from_fn(dim: usize, order: usize, mut f: impl FnMut(&[usize]) -> u32) -> Result<Self> {
        let total = order.pow(dim as u32);
        let mut coords = vec![0usize; dim];
        let mut cells = Vec::with_capacity(total);
        for idx in 0..total {
            decode_index(idx, order, &mut coords);
            cells.push(f(&coords));
        }
        LatinHypercube::new(dim, order, cells)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.dim);
        coords.iter().fold(0, |acc, &c| acc * self.order + c)
    }

    pub fn get(&self, coords: &[usize]) -> u32 {
        self.cells[self.index(coords)]
    }

    /// Cell `(x, y)` of a square.
    #[inline]
    pub fn at(&self, x: usize, y: usize) -> u32 {
        self.cells[x * self.order + y]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.cells
            .chunks(self.order.max(1))
            .map(|r| r.to_vec())
            .collect()
    }
}

fn decode_index(mut idx: usize, order: usize, coords: &mut [usize]) {
    for c in coords.iter_mut().rev() {
        *c = idx % order;
        idx /= order;
    }
}

/// Accepts iff every axis-parallel line is a permutation of `[0, q)`.
pub fn verify_latin(cube: &LatinHypercube) -> Verdict {
    let (d, q) = (cube.dim, cube.order);
    if d < 2 {
        return Err(Violation::Shape {
            reason: "a latin hypercube needs dimension >= 2".into(),
        });
    }
    let mut seen = vec![usize::MAX; q];
    let mut stamp = 0usize;
    let mut coords = vec![0usize; d];
    for axis in 0..d {
        let stride = q.pow((d - 1 - axis) as u32);
        for start in 0..cube.cells.len() {
            decode_index(start, q, &mut coords);
            if coords[axis] != 0 {
                continue;
            }
            for j in 0..q {
                let s = cube.cells[start + j * stride];
                if seen[s as usize] == stamp {
                    return Err(Violation::LatinLine {
                        axis,
                        origin: coords.clone(),
                        symbol: s,
                    });
                }
                seen[s as usize] = stamp;
            }
            stamp += 1;
        }
    }
    Ok(())
}

/// Checks that the restriction to `{0..l-1}^dim` only uses symbols
/// `{0..l-1}` and is latin there.
pub fn verify_corner_subcube(cube: &LatinHypercube, l: usize) -> Verdict {
    let restricted = restrict_corner(cube, l)?;
    verify_latin(&restricted).map_err(|v| match v {
        Violation::LatinLine { origin, symbol, .. } => Violation::Subsquare {
            cell: origin,
            symbol,
        },
        other => other,
    })
}

fn restrict_corner(
    cube: &LatinHypercube,
    l: usize,
) -> std::result::Result<LatinHypercube, Violation> {
    let mut cells = Vec::with_capacity(l.pow(cube.dim as u32));
    let mut coords = vec![0usize; cube.dim];
    for idx in 0..l.pow(cube.dim as u32) {
        decode_index(idx, l, &mut coords);
        let s = cube.get(&coords);
        if s as usize >= l {
            return Err(Violation::Subsquare {
                cell: coords.clone(),
                symbol: s,
            });
        }
        cells.push(s);
    }
    Ok(LatinHypercube {
        dim: cube.dim,
        order: l,
        cells,
    })
}

/// `(x_1 + ... + x_d) mod q`.
pub fn cyclic_cube(q: usize, dim: usize) -> Result<LatinHypercube> {
    if q < 1 || dim < 2 {
        return Err(Error::InvalidParameters(
            "need q >= 1 and dimension >= 2".into(),
        ));
    }
    LatinHypercube::from_fn(dim, q, |c| (c.iter().sum::<usize>() % q) as u32)
}

/// Latin square of order `q` whose `l x l` top-left corner is a latin
/// square on the symbols `{0..l-1}`. Requires `l <= q/2`.
pub fn ls_with_subsquare(q: usize, l: usize) -> Result<LatinSquare> {
    if q == 0 {
        return Err(Error::InvalidParameters("order must be positive".into()));
    }
    if 2 * l > q {
        return Err(Error::InvalidParameters(format!(
            "no latin square of order {q} has a proper subsquare of order {l} (need l <= q/2)"
        )));
    }
    let mut cells = vec![0u32; q * q];
    // top rows: cyclic subsquare, then the large symbols cycled
    for x in 0..l {
        for y in 0..l {
            cells[x * q + y] = ((x + y) % l) as u32;
        }
        for y in l..q {
            cells[x * q + y] = (l + (x + y - l) % (q - l)) as u32;
        }
    }
    let mut col_has = vec![false; q * q];
    for x in 0..l {
        for y in 0..q {
            col_has[y * q + cells[x * q + y] as usize] = true;
        }
    }
    for x in l..q {
        let adj: Vec<Vec<usize>> = (0..q)
            .map(|y| (0..q).filter(|&s| !col_has[y * q + s]).collect())
            .collect();
        let row = perfect_matching(&adj).expect("a regular bipartite graph has a perfect matching");
        for (y, &s) in row.iter().enumerate() {
            cells[x * q + y] = s as u32;
            col_has[y * q + s] = true;
        }
    }
    LatinHypercube::new(2, q, cells)
}

/// `g(x_1..x_d) = L(...L(L(x_1, x_2), x_3)..., x_d)`.
pub fn compose(square: &LatinSquare, dim: usize) -> Result<LatinHypercube> {
    if square.dim != 2 || dim < 2 {
        return Err(Error::InvalidParameters(
            "compose needs a square and dimension >= 2".into(),
        ));
    }
    LatinHypercube::from_fn(dim, square.order, |c| {
        c[1..]
            .iter()
            .fold(c[0] as u32, |acc, &x| square.at(acc as usize, x))
    })
}

/// Latin `dim`-cube of order `q` with a latin subcube of order `l` on
/// `{0..l-1}^dim`. Requires `l <= q/2`.
pub fn cube_with_subcube(q: usize, l: usize, dim: usize) -> Result<LatinHypercube> {
    let square = ls_with_subsquare(q, l)?;
    compose(&square, dim)
}

/// Symmetric unipotent latin square of even order `q` such that for
/// `x in K0 = {0..l-1}`, `y in K1 = {q-l..q-1}` the value `f(x, y)` lies in
/// `K1` and the restriction to `K0 x K1` is latin. Requires `l <= q/4`.
///
/// The square is the edge coloring of a 1-factorization of `K_q` with the
/// diagonal colored 0. `K_q` is split into halves `A = {0..q/2-1}` and
/// `B = {q/2..q-1}`; the bipartite part is factored by a latin square with
/// a subsquare covering `K0 x K1`, the halves by (near-)1-factorizations.
pub fn symmetric_unipotent_ls(q: usize, l: usize) -> Result<LatinSquare> {
    if q == 0 || q % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "symmetric unipotent squares need even order, got {q}"
        )));
    }
    if 4 * l > q {
        return Err(Error::InvalidParameters(format!(
            "subsquare order {l} exceeds q/4 for q = {q}"
        )));
    }
    let r = q / 2;
    let bip = ls_with_subsquare(r, l)?;
    let a_vertex = |a: usize| a;
    let b_vertex = |b: usize| q - 1 - b;

    // provisional color ids: bipartite colors 0..r, internal factor i -> r + i
    let mut color = vec![usize::MAX; q * q];
    let paint = |u: usize, v: usize, c: usize, color: &mut Vec<usize>| {
        color[u * q + v] = c;
        color[v * q + u] = c;
    };
    let absorbed;
    if r.is_multiple_of(2) {
        // id 2r-1 is never used
        absorbed = Some(2 * r - 1);
        for a in 0..r {
            for b in 0..r {
                paint(a_vertex(a), b_vertex(b), bip.at(a, b) as usize, &mut color);
            }
        }
        for (i, factor) in round_robin(r).into_iter().enumerate() {
            for (u, v) in factor {
                paint(a_vertex(u), a_vertex(v), r + i, &mut color);
                paint(b_vertex(u), b_vertex(v), r + i, &mut color);
            }
        }
    } else {
        // one bipartite class outside the subsquare closes the near-1-factors
        let closing = r - 1;
        absorbed = Some(closing);
        let mut partner = vec![0usize; r];
        for a in 0..r {
            for b in 0..r {
                let c = bip.at(a, b) as usize;
                if c == closing {
                    partner[a] = b;
                } else {
                    paint(a_vertex(a), b_vertex(b), c, &mut color);
                }
            }
        }
        // B vertex partner[i] carries near-factor label i
        for i in 0..r {
            for (u, v) in near_factor(r, i) {
                paint(a_vertex(u), a_vertex(v), r + i, &mut color);
                paint(
                    b_vertex(partner[u]),
                    b_vertex(partner[v]),
                    r + i,
                    &mut color,
                );
            }
            paint(a_vertex(i), b_vertex(partner[i]), r + i, &mut color);
        }
    }

    // relabel: subsquare colors -> K1, everything else -> 1.. in order
    let mut label = vec![0u32; 2 * r];
    let mut next = 1u32;
    for c in 0..2 * r {
        if Some(c) == absorbed {
            continue;
        }
        if c < l {
            label[c] = (q - l + c) as u32;
        } else {
            label[c] = next;
            next += 1;
        }
    }
    debug_assert_eq!(next as usize, q - l);
    let mut cells = vec![0u32; q * q];
    for x in 0..q {
        for y in 0..q {
            if x != y {
                cells[x * q + y] = label[color[x * q + y]];
            }
        }
    }
    LatinHypercube::new(2, q, cells)
}

/// Round-robin 1-factorization of `K_n`, `n` even.
pub fn round_robin(n: usize) -> Vec<Vec<(usize, usize)>> {
    debug_assert!(n.is_multiple_of(2));
    if n == 0 {
        return Vec::new();
    }
    let m = n - 1;
    (0..m)
        .map(|i| {
            let mut f = vec![(i, m)];
            for j in 1..=(m - 1) / 2 {
                f.push(((i + m - j) % m, (i + j) % m));
            }
            f
        })
        .collect()
}

/// Near-1-factor `i` of `K_n`, `n` odd: pairs `{i-j, i+j}`, missing `i`.
fn near_factor(n: usize, i: usize) -> Vec<(usize, usize)> {
    (1..=(n - 1) / 2)
        .map(|j| ((i + n - j) % n, (i + j) % n))
        .collect()
}

/// Checks symmetry, zero diagonal, latinness and the `K0 x K1` subsquare.
pub fn verify_symmetric_unipotent(square: &LatinSquare, l: usize) -> Verdict {
    verify_latin(square)?;
    let q = square.order;
    for x in 0..q {
        if square.at(x, x) != 0 {
            return Err(Violation::NotUnipotent { x });
        }
        for y in 0..x {
            if square.at(x, y) != square.at(y, x) {
                return Err(Violation::Asymmetric { x, y });
            }
        }
    }
    if l == 0 {
        return Ok(());
    }
    if 2 * l > q {
        return Err(Violation::Shape {
            reason: "K0 and K1 overlap".into(),
        });
    }
    let k1 = q - l;
    for x in 0..l {
        let mut row_seen = vec![false; l];
        for y in k1..q {
            let s = square.at(x, y) as usize;
            if s < k1 || row_seen[s - k1] {
                return Err(Violation::Subsquare {
                    cell: vec![x, y],
                    symbol: s as u32,
                });
            }
            row_seen[s - k1] = true;
        }
    }
    for y in k1..q {
        let mut col_seen = vec![false; l];
        for x in 0..l {
            let s = square.at(x, y) as usize - k1;
            if col_seen[s] {
                return Err(Violation::Subsquare {
                    cell: vec![x, y],
                    symbol: (s + k1) as u32,
                });
            }
            col_seen[s] = true;
        }
    }
    Ok(())
}

/// `t` functions of arity `s` over `q` symbols, each a table of `q^s`
/// values indexed like hypercube cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalSystem {
    arity: usize,
    order: usize,
    functions: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strength {
    Plain,
    Strong,
}

impl OrthogonalSystem {
    pub fn new(arity: usize, order: usize, functions: Vec<Vec<u32>>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidParameters("arity must be >= 1".into()));
        }
        let size = order.pow(arity as u32);
        for (i, f) in functions.iter().enumerate() {
            if f.len() != size {
                return Err(Error::InvalidParameters(format!(
                    "function {i} has {} entries, arity {arity} over {order} symbols needs {size}",
                    f.len()
                )));
            }
            if f.iter().any(|&s| s as usize >= order) {
                return Err(Error::Malformed(format!(
                    "function {i} has a symbol out of range"
                )));
            }
        }
        Ok(OrthogonalSystem {
            arity,
            order,
            functions,
        })
    }

    /// System of binary functions given as latin squares.
    pub fn from_squares(squares: &[LatinSquare]) -> Result<Self> {
        let q = squares.first().map_or(0, |s| s.order());
        if squares.iter().any(|s| s.dim() != 2 || s.order() != q) {
            return Err(Error::InvalidParameters("squares must share order".into()));
        }
        OrthogonalSystem::new(2, q, squares.iter().map(|s| s.cells().to_vec()).collect())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn functions(&self) -> &[Vec<u32>] {
        &self.functions
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Plain: every `s`-subset of the functions maps `Q^s` bijectively onto
/// `Q^s`. Strong: the same holds for the restricted system after fixing
/// any subset of variables to any constants. Strong systems may have
/// fewer functions than variables; only fixings leaving at most `t` free
/// variables constrain them.
pub fn check_orthogonal(system: &OrthogonalSystem, strength: Strength) -> Verdict {
    let (s, q, t) = (system.arity, system.order, system.functions.len());
    let fixed_sizes: Vec<usize> = match strength {
        Strength::Plain if t < s => {
            return Err(Violation::Shape {
                reason: format!("need at least {s} functions, found {t}"),
            })
        }
        Strength::Plain => vec![0],
        Strength::Strong => (s.saturating_sub(t)..s).collect(),
    };
    let mut coords = vec![0usize; s];
    let mut seen = vec![usize::MAX; q.pow(s as u32)];
    let mut stamp = 0usize;
    for j in fixed_sizes {
        let free_count = s - j;
        let free_space = q.pow(free_count as u32);
        for fixed_vars in subsets(s, j) {
            let free_vars: Vec<usize> = (0..s).filter(|v| !fixed_vars.contains(v)).collect();
            for constants in 0..q.pow(j as u32) {
                let mut cvals = vec![0usize; j];
                decode_index(constants, q, &mut cvals);
                for funcs in subsets(t, free_count) {
                    stamp += 1;
                    for free in 0..free_space {
                        let mut fvals = vec![0usize; free_count];
                        decode_index(free, q, &mut fvals);
                        for (v, c) in fixed_vars.iter().zip(&cvals) {
                            coords[*v] = *c;
                        }
                        for (v, c) in free_vars.iter().zip(&fvals) {
                            coords[*v] = *c;
                        }
                        let cell = coords.iter().fold(0, |acc, &c| acc * q + c);
                        let image: Vec<u32> =
                            funcs.iter().map(|&f| system.functions[f][cell]).collect();
                        let key = image.iter().fold(0usize, |acc, &x| acc * q + x as usize);
                        if seen[key] == stamp {
                            return Err(Violation::NotOrthogonal {
                                functions: funcs.clone(),
                                fixed: fixed_vars
                                    .iter()
                                    .zip(&cvals)
                                    .map(|(&v, &c)| (v, c as u32))
                                    .collect(),
                                image,
                            });
                        }
                        seen[key] = stamp;
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_table(q: usize) -> LatinSquare {
        LatinHypercube::from_fn(2, q, |c| ((c[0] + c[1]) % q) as u32).unwrap()
    }

    #[test]
    fn cyclic_tables_verify() {
        assert_eq!(verify_latin(&z_table(3)), Ok(()));
        let c = cyclic_cube(3, 2).unwrap();
        assert_eq!(c, z_table(3));
        let parity = cyclic_cube(2, 3).unwrap();
        assert_eq!(parity.cells(), &[0, 1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(verify_latin(&cyclic_cube(5, 2).unwrap()), Ok(()));
        assert_eq!(verify_latin(&cyclic_cube(4, 4).unwrap()), Ok(()));
    }

    #[test]
    fn transposed_cells_are_caught() {
        let mut cells = z_table(4).cells().to_vec();
        cells.swap(0, 1);
        let sq = LatinHypercube::new(2, 4, cells).unwrap();
        match verify_latin(&sq) {
            Err(Violation::LatinLine {
                axis: 0, origin, ..
            }) => assert_eq!(origin, vec![0, 0]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(LatinHypercube::new(2, 3, vec![0; 8]).is_err());
        assert!(LatinHypercube::new(2, 2, vec![0, 1, 1, 2]).is_err());
        assert!(LatinHypercube::from_rows(&[vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn subsquare_examples() {
        for &(q, l) in &[(4, 2), (9, 4), (10, 5), (7, 3), (5, 1), (6, 0)] {
            let sq = ls_with_subsquare(q, l).unwrap();
            assert_eq!(verify_latin(&sq), Ok(()), "q={q} l={l}");
            assert_eq!(verify_corner_subcube(&sq, l), Ok(()), "q={q} l={l}");
        }
        let sq = ls_with_subsquare(4, 2).unwrap();
        assert_eq!(sq.rows()[0][..2], [0, 1]);
        assert_eq!(sq.rows()[1][..2], [1, 0]);
        assert!(ls_with_subsquare(5, 3).is_err());
    }

    #[test]
    fn subcube_examples() {
        let c = cube_with_subcube(6, 3, 3).unwrap();
        assert_eq!(c.cells().len(), 216);
        assert_eq!(verify_latin(&c), Ok(()));
        assert_eq!(verify_corner_subcube(&c, 3), Ok(()));
        let c = cube_with_subcube(4, 2, 3).unwrap();
        assert_eq!(verify_corner_subcube(&c, 2), Ok(()));
        assert_eq!(
            cube_with_subcube(9, 4, 2).unwrap(),
            ls_with_subsquare(9, 4).unwrap()
        );
        assert!(cube_with_subcube(6, 4, 3).is_err());
    }

    #[test]
    fn symmetric_unipotent_examples() {
        for &(q, l) in &[
            (2, 0),
            (4, 0),
            (4, 1),
            (6, 1),
            (8, 2),
            (10, 2),
            (12, 3),
            (16, 4),
            (18, 4),
            (20, 5),
        ] {
            let sq = symmetric_unipotent_ls(q, l).unwrap();
            assert_eq!(verify_symmetric_unipotent(&sq, l), Ok(()), "q={q} l={l}");
            // symbol 0 only on the diagonal
            for x in 0..q {
                for y in 0..q {
                    assert_eq!(sq.at(x, y) == 0, x == y);
                }
            }
        }
        let sq = symmetric_unipotent_ls(8, 2).unwrap();
        for x in 0..2 {
            for y in 6..8 {
                assert!([6, 7].contains(&sq.at(x, y)));
            }
        }
        assert!(symmetric_unipotent_ls(7, 1).is_err());
        assert!(symmetric_unipotent_ls(8, 3).is_err());
    }

    #[test]
    fn round_robin_is_a_factorization() {
        for n in [2, 4, 6, 8] {
            let factors = round_robin(n);
            assert_eq!(factors.len(), n - 1);
            let mut edges = std::collections::BTreeSet::new();
            for f in &factors {
                let mut hit = vec![false; n];
                for &(u, v) in f {
                    assert!(!hit[u] && !hit[v]);
                    hit[u] = true;
                    hit[v] = true;
                    assert!(edges.insert((u.min(v), u.max(v))));
                }
            }
            assert_eq!(edges.len(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn orthogonality_examples() {
        let f = LatinHypercube::from_fn(2, 5, |c| ((c[0] + c[1]) % 5) as u32).unwrap();
        let g = LatinHypercube::from_fn(2, 5, |c| ((c[0] + 2 * c[1]) % 5) as u32).unwrap();
        let pair = OrthogonalSystem::from_squares(&[f.clone(), g]).unwrap();
        assert_eq!(check_orthogonal(&pair, Strength::Plain), Ok(()));
        let same = OrthogonalSystem::from_squares(&[f.clone(), f]).unwrap();
        assert!(matches!(
            check_orthogonal(&same, Strength::Plain),
            Err(Violation::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn strong_detects_non_quasigroup() {
        // x + y and x - y over Z_5 are orthogonal and each a quasigroup
        let f: Vec<u32> = (0..25).map(|i| ((i / 5 + i % 5) % 5) as u32).collect();
        let g: Vec<u32> = (0..25).map(|i| ((i / 5 + 5 - i % 5) % 5) as u32).collect();
        let sys = OrthogonalSystem::new(2, 5, vec![f.clone(), g]).unwrap();
        assert_eq!(check_orthogonal(&sys, Strength::Strong), Ok(()));
        // (x, y) -> x paired with y is orthogonal but x is not a quasigroup in y
        let proj_x: Vec<u32> = (0..25).map(|i| (i / 5) as u32).collect();
        let proj_y: Vec<u32> = (0..25).map(|i| (i % 5) as u32).collect();
        let sys = OrthogonalSystem::new(2, 5, vec![proj_x, proj_y]).unwrap();
        assert_eq!(check_orthogonal(&sys, Strength::Plain), Ok(()));
        assert!(check_orthogonal(&sys, Strength::Strong).is_err());
    }

    #[test]
    fn composition_closure_small_orders() {
        for q in 1..=8 {
            let sq = ls_with_subsquare(q, q / 2).unwrap();
            assert_eq!(verify_latin(&compose(&sq, 3).unwrap()), Ok(()));
        }
    }
}
