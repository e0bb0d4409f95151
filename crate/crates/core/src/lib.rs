//! Invariants of finite directed graphs, computed exactly and cross-checked
//! against brute-force oracles.
//!
//! The crate is organised around a handful of small theories:
//!
//! * [`digraph`] — digraphs, routes and their signed weights, connectivity,
//!   tensor products, and the plain-text edge-list format.
//! * [`weight`] — the weight invariant `w(G)`, the cycle-length gcd `D(G)`,
//!   canonical epimorphisms onto directed cycles and paths, and the tensor
//!   connectivity criteria of McAndrew and Chen.
//! * [`hom`] — digraph vertex maps and exhaustive homomorphism search.
//! * [`homology`] — path homology of digraphs over the rationals.
//! * [`linalg`] — exact big-integer/rational matrices, Smith normal form,
//!   characteristic polynomials, truncated power series, and a symmetric
//!   eigensolver.
//! * [`laplacian`] — Laplacians of undirected graphs: spectra, Cheeger
//!   constants, critical groups, spanning trees, flows and cuts.
//! * [`zeta`] — Artin–Mazur zeta series of topological Markov shifts.
//! * [`poset`] — graded graphs, Young's lattice, and differential-poset
//!   checks via up/down operators.
//! * [`harness`] — seeded sweeps that replay every theorem the library
//!   encodes against an independent oracle and report disagreements as data.

pub mod digraph;
pub mod harness;
pub mod hom;
pub mod homology;
pub mod io;
pub mod laplacian;
pub mod linalg;
pub mod poset;
pub mod route;
pub mod weight;
pub mod zeta;

pub use digraph::Digraph;
pub use hom::VertexMap;
pub use route::{Orientation, Route};
