//! Volumetric uncertainty quantification for stochastic 3D segmentation.
//!
//! The pipeline: generate synthetic multi-channel phantoms, train small
//! residual dilated 3D segmentation networks with configurable dropout,
//! draw Monte Carlo forward passes, turn the per-voxel sample distributions
//! into per-subject volumetric CDFs, and fit an affine percentile
//! calibration so that volume confidence intervals achieve nominal coverage.

pub mod calibration;
pub mod eval;
pub mod mc;
pub mod net;
pub mod phantom;
pub mod rng;
pub mod tensor;
pub mod volume;
pub mod volumetrics;

pub use volume::{Dims3, HierClass, HierarchicalMasks, LabelVolume, MultiChannelVolume, ProbVolume};
