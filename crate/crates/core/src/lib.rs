//! Design and analysis of separable circulant-based (SCB) LDPC codes.
//!
//! - [`gfp`]: exact linear algebra over GF(p) and GF(2)
//! - [`code`]: parity-check construction, girth, dimension, alist I/O
//! - [`topology`]: absorbing-set shapes, VN graphs, cycle bases, catalog
//! - [`ccm`]: cycle consistency matrices and the existence test
//! - [`closed_form`]: determinant conditions in closed form
//! - [`search`]: row-selection scans and Tanner-code analysis
//! - [`oracle`]: brute-force absorbing-set enumeration
//! - [`decoder`]: quantized sum-product decoding and Monte Carlo
//! - [`claims`]: the pinned claim suite behind `verify-paper`

pub mod ccm;
pub mod claims;
pub mod closed_form;
pub mod code;
pub mod decoder;
pub mod error;
pub mod gfp;
pub mod oracle;
pub mod search;
pub mod topology;

pub use error::{Error, Result};
