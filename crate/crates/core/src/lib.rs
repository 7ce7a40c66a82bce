//! Exact Khovanov-type homology of link diagrams and rank-based link detection.
//!
//! The pipeline is diagram → cube of resolutions → graded homology, with reference tables
//! and detectors built on top.

pub mod diagram;
pub mod corpus;
pub mod cube;
pub mod detect;
pub mod homology;
pub mod oracle;
pub mod reference;
pub mod skein;
pub mod spectra;
