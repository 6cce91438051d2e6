//! Exact-arithmetic construction of the E6 trigonometric Calogero-Sutherland
//! operator in fundamental-character variables, together with its polynomial
//! eigenfunctions, deformed Clebsch-Gordan series, and recurrence
//! coefficients as closed-form rational functions of the coupling k.
//!
//! Everything is computed over exact rationals; there is no floating point
//! anywhere. The crate is organized as:
//!
//! - [`weight`]: integer coordinates in the weight and root bases
//! - [`kappa`]: integer polynomials and reduced rational functions in k
//! - [`zpoly`]: sparse polynomials in z1..z6 over k-rational coefficients
//! - [`e6`]: Cartan matrix, positive roots, inner products, Weyl dimensions
//! - [`orbits`]: Weyl-group orbits and dominant weights below a given one
//! - [`rep`]: Freudenthal multiplicities and character expansions
//! - [`operator`]: the second-order operator in z-variables
//! - [`solver`]: polynomial eigenfunctions by iteration and by projection
//! - [`series`]: deformed Clebsch-Gordan series and recurrence coefficients
//! - [`text`]: canonical text and JSON forms, with a parser
//! - [`golden`]: the transcription corpus and its verification runner

pub mod e6;
pub mod golden;
pub mod kappa;
pub mod operator;
pub mod orbits;
pub mod rep;
pub mod series;
pub mod solver;
pub mod text;
pub mod weight;
pub mod zpoly;
