//! Verification failures.
//!
//! Every verifier returns `Result<(), Violation>`; the `Display` form is a
//! single line of `key=value` fields so reports can be grepped and parsed.

use std::fmt;

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The first property a verifier found violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Sizes or symbol ranges do not fit the declared parameters.
    Shape {
        reason: String,
    },
    /// An axis-parallel line of a latin hypercube repeats `symbol`.
    LatinLine {
        axis: usize,
        origin: Vec<usize>,
        symbol: u32,
    },
    /// A claimed subsquare/subcube is not latin on its symbol set.
    Subsquare {
        cell: Vec<usize>,
        symbol: u32,
    },
    Asymmetric {
        x: usize,
        y: usize,
    },
    NotUnipotent {
        x: usize,
    },
    /// A subsystem of functions fails to hit some value tuple once.
    NotOrthogonal {
        functions: Vec<usize>,
        fixed: Vec<(usize, u32)>,
        image: Vec<u32>,
    },
    Cardinality {
        expected: u64,
        found: u64,
    },
    /// Two words agree on an information set.
    ProjectionCollision {
        coords: Vec<usize>,
        first: Vec<u32>,
        second: Vec<u32>,
    },
    /// A word is missing whose presence a closure rule demands.
    Closure {
        word: Vec<u32>,
        rule: String,
    },
    /// A subset covered a wrong number of times.
    Coverage {
        subset: Vec<u32>,
        count: u32,
    },
    BlockCount {
        expected: u64,
        found: u64,
    },
    BadBlock {
        block: Vec<u32>,
        reason: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { reason } => write!(f, "violation=shape reason={reason:?}"),
            Violation::LatinLine {
                axis,
                origin,
                symbol,
            } => write!(
                f,
                "violation=latin_line axis={axis} origin={} symbol={symbol}",
                join(origin)
            ),
            Violation::Subsquare { cell, symbol } => {
                write!(f, "violation=subsquare cell={} symbol={symbol}", join(cell))
            }
            Violation::Asymmetric { x, y } => write!(f, "violation=asymmetric x={x} y={y}"),
            Violation::NotUnipotent { x } => write!(f, "violation=not_unipotent x={x}"),
            Violation::NotOrthogonal {
                functions,
                fixed,
                image,
            } => {
                let fixed: Vec<String> = fixed.iter().map(|(i, c)| format!("{i}:{c}")).collect();
                write!(
                    f,
                    "violation=not_orthogonal functions={} fixed={} image={}",
                    join(functions),
                    fixed.join(","),
                    join(image)
                )
            }
            Violation::Cardinality { expected, found } => {
                write!(f, "violation=cardinality expected={expected} found={found}")
            }
            Violation::ProjectionCollision {
                coords,
                first,
                second,
            } => write!(
                f,
                "violation=projection_collision coords={} first={} second={}",
                join(coords),
                join(first),
                join(second)
            ),
            Violation::Closure { word, rule } => {
                write!(f, "violation=closure rule={rule} missing={}", join(word))
            }
            Violation::Coverage { subset, count } => write!(
                f,
                "violation=coverage subset={} count={count}",
                join(subset)
            ),
            Violation::BlockCount { expected, found } => {
                write!(f, "violation=block_count expected={expected} found={found}")
            }
            Violation::BadBlock { block, reason } => write!(
                f,
                "violation=bad_block block={} reason={reason:?}",
                join(block)
            ),
        }
    }
}

impl std::error::Error for Violation {}

/// Shorthand for verifier results.
pub type Verdict = Result<(), Violation>;
