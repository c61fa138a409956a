//! Exact combinatorics of reverse plane partitions (RPPs) and their encoding
//! as one- and two-colour five-vertex models.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`] — partitions, interlacing, Maya diagrams, hooks, border strips;
//! * [`qt_series`] — truncated bivariate series in `q` and `t` with exact
//!   integer coefficients, and the hook-length products;
//! * [`rpp_core`] — RPP validation, enumeration and the slice (interlacing
//!   sequence) bijection;
//! * [`vertex_model`] — one-colour white/gray/cross weights, row weights,
//!   Yang–Baxter and commutation checks, the RPP → vertex configuration map;
//! * [`coupling`] — the two-colour model, the interaction statistic `g`
//!   computed by two independent routes, and pair generating functions;
//! * [`sliding`] — the `t = 0` path constraints and the sliding bijection
//!   between non-interacting pairs and single RPPs;
//! * [`render`] — deterministic ASCII / SVG output;
//! * [`cli`] — command implementations behind the `rppv` binary.
//!
//! All arithmetic is exact: big rationals for numeric evaluation, integer
//! exponent monomials for symbolic weights, big integers for series.
//!
//! ```
//! use rpp_vertex::partitions::Partition;
//! use rpp_vertex::qt_series::hook_product_single;
//! use rpp_vertex::rpp_core::enumerate;
//!
//! let shape = Partition::new(vec![2, 1]).unwrap();
//! let series = hook_product_single(&shape, 4);
//! let mut counts = vec![0u32; 5];
//! for rpp in enumerate(&shape, 4) {
//!     counts[rpp.volume() as usize] += 1;
//! }
//! for (n, c) in counts.iter().enumerate() {
//!     assert_eq!(series.coeff_u64(n as u32, 0), *c as u64);
//! }
//! ```

pub mod cli;
pub mod coupling;
pub mod error;
pub mod partitions;
pub mod qt_series;
pub mod render;
pub mod rpp_core;
pub mod sliding;
pub mod vertex_model;

pub use error::{Error, Result};
