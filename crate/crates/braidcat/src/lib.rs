//! Exact arithmetic toolkit for braided categorical groups presented by
//! abelian 3-cocycles over finitely generated abelian groups.
//!
//! The library covers, end to end:
//!
//! * [`abgroup`] — groups given by explicit generator orders, elements as
//!   reduced coefficient vectors, enumeration and deterministic sampling;
//! * [`forms`] — bilinear and quadratic forms `G -> M`, polarization, the
//!   polarity decision with an independent brute-force oracle, and the
//!   exact-row (Whitehead) diagram maps;
//! * [`cocycle`] — abelian 3-cocycles `(h, c)`, coboundaries, the trace to
//!   quadratic forms, class comparison, and exhaustive enumeration at desk
//!   scale;
//! * [`strictify`] — strictifying cocycles for polar forms, the
//!   strict-skeletalization decision, and polar covers over free groups;
//! * [`model`] — the skeletal braided categorical group with a numerical
//!   pentagon/hexagon/unit coherence checker and built-in examples;
//! * [`cli`] and [`doc`] — a JSON command-line front end with stable
//!   document schemas;
//! * [`acceptance`] — the self-test suite exercising all of the above
//!   against independent oracles.
//!
//! Start with the `examples/` directory for runnable walkthroughs of each
//! capability, or run `braidcat --help` for the batch interface.

pub mod abgroup;
pub mod acceptance;
pub mod cli;
pub mod cocycle;
pub mod doc;
pub mod error;
pub mod forms;
pub mod model;
pub mod strictify;

pub use error::AlgebraError;
