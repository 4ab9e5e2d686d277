//! Exact counting polynomials for generating subspaces of matrix algebras
//! over finite fields and for absolutely irreducible representations of free
//! algebras, together with a brute-force census over prime fields that
//! checks them.
//!
//! The layers, bottom up:
//!
//! * [`algebra`]: exact arithmetic in `Q`, `Q[q]`, `Q(q)`, `Q(q)[u]` and the
//!   q-combinatorial primitives (Gaussian binomials, Möbius, `|PGL_d|`).
//! * [`series`]: truncated power series in `t` with plethystic `Exp`/`Log`,
//!   twists and twisted products.
//! * [`counting`]: the counting polynomials `a_d^(m)(q)`, `s_d^(m)(q)`,
//!   `r_d^(m)(q)`, the two-variable `a_d(q,u)` and its Mahler expansion and
//!   factorization.
//! * [`oracle`]: enumeration of subspaces and matrix tuples over `F_p` with
//!   a subalgebra-closure generation test.
//! * [`verify`]: the check suites driven by the command-line tool.

pub mod algebra;
pub mod counting;
pub mod error;
pub mod oracle;
pub mod parse;
pub mod series;
pub mod tables;
pub mod verify;

pub use algebra::{QPoly, QRatFunc, Rational, UPoly};
pub use error::{Error, Result};
