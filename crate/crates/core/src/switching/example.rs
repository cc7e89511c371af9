//! The worked order-9 example: a pair of orthogonal latin squares, two
//! marked orthogonal subsquares, and the pair obtained after switching them.
//!
//! Symbols are GF(9) elements in the base-3 encoding; the pair is the code
//! `{(x, y, x + y, 2x + y)}`, which is linear over GF(3).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::latin::{check_orthogonal, verify_latin, LatinSquare, OrthogonalSystem, Strength};
use crate::mds::{verify_mds, Code, LinearForm};

use super::{line_subcode, switch_scale, switch_translate, LineSubcode};

pub const BEFORE: [[[u32; 9]; 9]; 2] = [
    [
        [0, 1, 2, 3, 4, 5, 6, 7, 8],
        [1, 2, 0, 4, 5, 3, 7, 8, 6],
        [2, 0, 1, 5, 3, 4, 8, 6, 7],
        [3, 4, 5, 6, 7, 8, 0, 1, 2],
        [4, 5, 3, 7, 8, 6, 1, 2, 0],
        [5, 3, 4, 8, 6, 7, 2, 0, 1],
        [6, 7, 8, 0, 1, 2, 3, 4, 5],
        [7, 8, 6, 1, 2, 0, 4, 5, 3],
        [8, 6, 7, 2, 0, 1, 5, 3, 4],
    ],
    [
        [0, 1, 2, 3, 4, 5, 6, 7, 8],
        [2, 0, 1, 5, 3, 4, 8, 6, 7],
        [1, 2, 0, 4, 5, 3, 7, 8, 6],
        [6, 7, 8, 0, 1, 2, 3, 4, 5],
        [8, 6, 7, 2, 0, 1, 5, 3, 4],
        [7, 8, 6, 1, 2, 0, 4, 5, 3],
        [3, 4, 5, 6, 7, 8, 0, 1, 2],
        [5, 3, 4, 8, 6, 7, 2, 0, 1],
        [4, 5, 3, 7, 8, 6, 1, 2, 0],
    ],
];

pub const AFTER: [[[u32; 9]; 9]; 2] = [
    [
        [0, 1, 2, 3, 4, 5, 6, 7, 8],
        [1, 2, 0, 4, 5, 7, 3, 8, 6],
        [2, 0, 1, 5, 3, 4, 8, 6, 7],
        [3, 4, 5, 6, 7, 8, 0, 1, 2],
        [4, 5, 3, 7, 8, 6, 1, 2, 0],
        [5, 7, 4, 8, 6, 3, 2, 0, 1],
        [6, 3, 8, 0, 1, 2, 7, 4, 5],
        [7, 8, 6, 1, 2, 0, 4, 5, 3],
        [8, 6, 7, 2, 0, 1, 5, 3, 4],
    ],
    [
        [0, 1, 2, 3, 8, 5, 6, 7, 4],
        [2, 0, 1, 5, 3, 4, 8, 6, 7],
        [1, 2, 0, 4, 5, 3, 7, 8, 6],
        [6, 7, 8, 0, 1, 2, 3, 4, 5],
        [4, 6, 7, 2, 0, 1, 5, 3, 8],
        [7, 8, 6, 1, 2, 0, 4, 5, 3],
        [3, 4, 5, 6, 7, 8, 0, 1, 2],
        [5, 3, 4, 8, 6, 7, 2, 0, 1],
        [8, 5, 3, 7, 4, 6, 1, 2, 0],
    ],
];

/// Rows and columns of the bold subsquare.
pub const BOLD: [usize; 3] = [0, 4, 8];
/// Rows and columns of the italic subsquare.
pub const ITALIC: [usize; 3] = [1, 5, 6];

pub fn square(table: &[[u32; 9]; 9]) -> LatinSquare {
    let rows: Vec<Vec<u32>> = table.iter().map(|r| r.to_vec()).collect();
    LatinSquare::from_rows(&rows).expect("9x9 table")
}

/// `{(x, y, A(x,y), B(x,y))}`.
pub fn pair_code(pair: &[[[u32; 9]; 9]; 2]) -> Code {
    let words = (0..9u32).flat_map(|x| {
        (0..9u32).map(move |y| {
            vec![
                x,
                y,
                pair[0][x as usize][y as usize],
                pair[1][x as usize][y as usize],
            ]
        })
    });
    Code::new(4, 9, 3, words).expect("pair code")
}

pub fn pair_from_code(code: &Code) -> [[[u32; 9]; 9]; 2] {
    let mut out = [[[u32::MAX; 9]; 9]; 2];
    for w in code.words() {
        out[0][w[0] as usize][w[1] as usize] = w[2];
        out[1][w[0] as usize][w[1] as usize] = w[3];
    }
    out
}

/// One local switch of a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    Keep,
    /// `x_coord += alpha v`.
    Translate {
        coord: usize,
        alpha: u32,
    },
    /// `x_coord -> a_coord + beta (x_coord - a_coord)`.
    Scale {
        coord: usize,
        beta: u32,
    },
}

impl Move {
    pub fn is_translate(self) -> bool {
        matches!(self, Move::Translate { .. })
    }

    fn apply(self, code: &Code, field: &Field, comp: &LineSubcode) -> Result<Code> {
        match self {
            Move::Keep => Ok(code.clone()),
            Move::Translate { coord, alpha } => switch_translate(code, field, comp, coord, alpha),
            Move::Scale { coord, beta } => switch_scale(code, field, comp, coord, beta),
        }
    }

    fn all(p: u32, d: usize) -> Vec<Move> {
        let mut out = vec![Move::Keep];
        for coord in 0..d {
            out.extend((1..p).map(|alpha| Move::Translate { coord, alpha }));
            out.extend((2..p).map(|beta| Move::Scale { coord, beta }));
        }
        out
    }
}

/// Everything recovered from the printed tables.
#[derive(Debug, Clone)]
pub struct PaperExample {
    pub field: Arc<Field>,
    pub before: Code,
    pub after_printed: Code,
    pub italic: LineSubcode,
    pub bold: LineSubcode,
    /// Pairs of moves (italic, bold) that turn `before` into `after_printed`.
    pub reproducing: Vec<(Move, Move)>,
}

/// Reads the GF(3)-linear structure of a systematic code from the words
/// with message (1,0) and (0,1).
fn recover_linear_form(code: &Code, field: &Arc<Field>) -> Result<LinearForm> {
    let generator: Vec<Vec<u32>> = [[1, 0], [0, 1]]
        .iter()
        .map(|prefix| code.by_prefix(prefix).map(|w| w.to_vec()))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidParameters("code is not systematic".into()))?;
    let form = LinearForm {
        field: field.clone(),
        generator,
    };
    for w in code.words() {
        if form.encode(&w[..2]) != w {
            return Err(Error::InvalidParameters(format!(
                "word {w:?} breaks linearity"
            )));
        }
    }
    Ok(form)
}

fn find_component(code: &Code, field: &Field, cells: &[usize; 3]) -> Result<LineSubcode> {
    let mut found = Vec::new();
    for w in code.words() {
        if !cells.contains(&(w[0] as usize)) || !cells.contains(&(w[1] as usize)) {
            continue;
        }
        for v in field.canonical_directions() {
            let sub = line_subcode(code, w, v)?;
            let rows_cols_match = sub.subcode().alphabets()[..2].iter().all(|a| {
                let mut s: Vec<usize> = a.iter().map(|&x| x as usize).collect();
                s.sort_unstable();
                s == cells.to_vec()
            });
            if rows_cols_match && !found.iter().any(|f: &LineSubcode| f.words() == sub.words()) {
                found.push(sub);
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        n => Err(Error::InvalidParameters(format!(
            "expected exactly one line subcode on cells {cells:?}, found {n}"
        ))),
    }
}

/// Verifies both printed pairs, recovers the components and searches every
/// combination of local moves for those reproducing the printed result.
pub fn recover() -> Result<PaperExample> {
    let field = Arc::new(Field::new(3, 2)?);
    for pair in [&BEFORE, &AFTER] {
        let squares = [square(&pair[0]), square(&pair[1])];
        for s in &squares {
            verify_latin(s)?;
        }
        check_orthogonal(&OrthogonalSystem::from_squares(&squares)?, Strength::Plain)?;
    }
    let before = pair_code(&BEFORE);
    verify_mds(&before)?;
    let before = before
        .clone()
        .with_linear_form(recover_linear_form(&before, &field)?);
    let after_printed = pair_code(&AFTER);
    verify_mds(&after_printed)?;

    let italic = find_component(&before, &field, &ITALIC)?;
    let bold = find_component(&before, &field, &BOLD)?;
    if !italic.subcode().is_disjoint(bold.subcode()) {
        return Err(Error::InvalidParameters(
            "marked subsquares intersect".into(),
        ));
    }
    let moves = Move::all(field.characteristic(), 4);
    let mut reproducing = Vec::new();
    for &mi in &moves {
        let mid = mi.apply(&before, &field, &italic)?;
        for &mb in &moves {
            let out = mb.apply(&mid, &field, &bold)?;
            if out == after_printed {
                reproducing.push((mi, mb));
            }
        }
    }
    Ok(PaperExample {
        field,
        before,
        after_printed,
        italic,
        bold,
        reproducing,
    })
}

/// The fixture's switch: negate coordinate 2 (first square) on the italic
/// component and coordinate 3 (second square) on the bold one.
pub fn apply_printed_switch(example: &PaperExample) -> Result<Code> {
    let mid = switch_scale(&example.before, &example.field, &example.italic, 2, 2)?;
    switch_scale(&mid, &example.field, &example.bold, 3, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_switch_is_reproduced() {
        let ex = recover().unwrap();
        assert_eq!(ex.italic.direction(), 4);
        assert_eq!(ex.bold.direction(), 4);
        let out = apply_printed_switch(&ex).unwrap();
        assert_eq!(pair_from_code(&out), AFTER);
        assert_eq!(
            ex.reproducing,
            vec![(
                Move::Scale { coord: 2, beta: 2 },
                Move::Scale { coord: 3, beta: 2 }
            )]
        );
    }

    #[test]
    fn no_translate_reproduces_the_table() {
        let ex = recover().unwrap();
        assert!(ex
            .reproducing
            .iter()
            .all(|(a, b)| !a.is_translate() && !b.is_translate()));
    }
}
