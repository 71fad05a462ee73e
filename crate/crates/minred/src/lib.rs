//! Nilpotent orbits of classical groups, the Springer correspondence,
//! j-induction, and minimal reduction types of elliptic classes at
//! maximal parahorics, with exact integer arithmetic throughout.
//!
//! ```
//! use minred::{elliptic::EllipticClass, minimal::verify_class};
//!
//! let cls: EllipticClass = "C6:[w]=4,2".parse().unwrap();
//! let report = verify_class(&cls, 3).unwrap();
//! assert!(report.pass);
//! assert_eq!(report.rtmin_char, "((4),(2))");
//! ```

pub mod cli;
pub mod elliptic;
pub mod error;
pub mod jinduction;
pub mod minimal;
pub mod orbit;
pub mod partition;
pub mod springer;
pub mod tables;

pub use error::{Error, Result};
pub use orbit::{Family, GroupType, Label, Orbit};
pub use partition::{Dominance, IncSeq, Partition};
pub use springer::WChar;
