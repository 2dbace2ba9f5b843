//! Homological algebra of Nakayama algebras presented by Kupisch series.
//!
//! The crate computes Hom and Ext dimensions between indecomposable modules,
//! syzygy orbits, projective, injective and global dimension, and Gorenstein
//! classification, all by counting on `(vertex, length)` states. The
//! `oracle` module recomputes the same numbers with explicit quiver
//! representations and exact linear algebra, and `theorems` turns known
//! statements about self-extensions into checks that can be swept over every
//! algebra up to a size bound.
//!
//! Lengths equal dimensions over the ground field for the bound quiver
//! algebras considered here, and the field itself plays no role in any count.
//!
//! ```
//! use nakayama::{homext, Indecomposable, KupischSeries};
//!
//! let a: KupischSeries = "cyclic:3".parse().unwrap();
//! let m = Indecomposable::new(&a, 0, 2).unwrap();
//! let profile = homext::ext_dims(&a, m, m, 4);
//! assert_eq!(profile.dims, vec![2, 1, 1, 1, 1]);
//! ```

pub mod error;
pub mod homext;
pub mod kupisch;
pub mod modrep;
pub mod oracle;
pub mod theorems;

#[cfg(doctest)]
mod guide;

pub use error::{Error, Result};
pub use kupisch::{enumerate, Kind, KupischSeries};
pub use modrep::{Dimension, Indecomposable, SyzygyOrbit};
