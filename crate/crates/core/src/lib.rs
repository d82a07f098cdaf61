//! Strong homotopy for finite digital images.
//!
//! A digital image is a finite simple graph; continuous maps send adjacent
//! points to adjacent-or-equal points. This crate provides:
//!
//! - [`image`], [`map`]: images, normal products, continuity;
//! - [`canon`], [`graph6`], [`edgelist`], [`input`]: isomorphism testing and
//!   I/O;
//! - [`homotopy`]: ordinary, strong and punctuated homotopies, map-space
//!   search, strong reducibility, strong cores, contraction orderings and
//!   pointed contractibility;
//! - [`homology`]: integer homology of the clique complex, induced maps and
//!   the prism operator;
//! - [`cycles`]: selfmaps of the digital cycle `C_n`;
//! - [`catalog`]: census of connected images that are not strongly reducible;
//! - [`verify`]: a scorecard re-deriving the headline numbers.

pub mod canon;
pub mod catalog;
pub mod cycles;
pub mod edgelist;
pub mod error;
pub mod gallery;
pub mod graph6;
pub mod homology;
pub mod homotopy;
pub mod image;
pub mod input;
pub mod map;
pub mod verify;

pub use error::{Error, Result};
pub use image::{DigitalImage, Translation};
pub use map::{compose, is_continuous, VertexMap};
