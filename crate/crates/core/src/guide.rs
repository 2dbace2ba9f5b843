//! The book chapters, compiled as doctests so the guide cannot drift from the
//! API.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/kupisch.md")]
mod kupisch {}
#[doc = include_str!("../../../book/src/modules.md")]
mod modules {}
#[doc = include_str!("../../../book/src/hom-ext.md")]
mod hom_ext {}
#[doc = include_str!("../../../book/src/oracle.md")]
mod oracle {}
#[doc = include_str!("../../../book/src/checks.md")]
mod checks {}
