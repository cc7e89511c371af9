//! Linear MDS codes over finite fields, latin hypercubes with subcubes,
//! switching of line subcodes, 3-wise bipartite balanced designs and
//! Steiner quadruple systems.
//!
//! Every constructor has an exhaustive verifier next to it, and
//! [`oracle`] holds brute-force counters that share no code with the
//! constructions. Verifiers return a [`Violation`] naming the first
//! property found broken.

pub mod designs;
pub mod error;
pub mod gf;
pub mod io;
pub mod latin;
mod matching;
pub mod mds;
pub mod oracle;
pub mod report;
pub mod sqs;
pub mod switching;

pub use error::{Error, Result};
pub use gf::Field;
pub use latin::{LatinHypercube, LatinSquare};
pub use mds::Code;
pub use report::{Verdict, Violation};
