//! Norm-based polygon enclosures of the numerical range (field of values)
//! of a complex square matrix, and upper bounds on its numerical radius.
//!
//! ```
//! use numrange::linalg::{cartesian_split, ComplexMatrix, NormKind};
//! use numrange::enclosure::octagon_closed_form;
//!
//! let t = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
//! let region = octagon_closed_form(&cartesian_split(&t), NormKind::Spectral).unwrap();
//! assert_eq!(region.kind_name(), "octagon");
//! ```

pub mod bounds;
pub mod cli;
pub mod enclosure;
pub mod error;
pub mod linalg;
pub mod oracle;

pub use error::{Error, Result};
