//! Algorithms for monochromatic cycles and matchings in edge-colored
//! nearly complete graphs.
//!
//! The crate covers four layers:
//!
//! * [`graph`], [`coloring`], [`vertex_set`]: dense graphs on at most 512
//!   vertices, edge colorings of complete graphs with holes, and the JSON
//!   file formats.
//! * [`cycles`] and [`matching`]: exact cycle search by length and parity,
//!   long-cycle extraction above the Erdős–Gallai threshold, maximum
//!   matchings, Gallai–Edmonds barriers, the `(S, T, U)` barrier partition,
//!   the bipartite/non-bipartite component split and closed walks through a
//!   matching.
//! * [`bounds`] and [`constructions`]: exact rational values of the
//!   three-cycle Ramsey coefficients and the lower-bound colorings with a
//!   verifier for their claims.
//! * [`search`]: exhaustive and randomized arrowing decisions for cycle and
//!   component-matching targets, plus a property harness for the matching
//!   lemmas on nearly complete graphs with holes.
//!
//! The [`cli`] module backs the `cycle-ramsey` binary.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod matching;
pub mod search;
pub mod vertex_set;

pub use coloring::EdgeColoring;
pub use cycles::CycleCertificate;
pub use error::{Error, Result};
pub use graph::{Graph, HoleSpec};
pub use matching::MatchingCertificate;
pub use vertex_set::VertexSet;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: usize) -> Self {
        if x % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn matches(self, x: usize) -> bool {
        Parity::of(x) == self
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" | "e" => Ok(Parity::Even),
            "odd" | "o" => Ok(Parity::Odd),
            other => Err(Error::Precondition(format!("unknown parity '{other}'"))),
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}
