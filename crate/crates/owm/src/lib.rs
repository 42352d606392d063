//! Object-centric world-model reinforcement learning.
//!
//! A world model jointly encodes per-object feature vectors and a low-resolution
//! visual frame into discrete latents, predicts dynamics/reward/termination with a
//! spatial-temporal transformer, and trains an actor-critic policy entirely inside
//! imagined rollouts. Object features come from pluggable providers (synthetic
//! oracle or precomputed feature files) instead of a frozen vision model.

// Pull in the BLAS implementation for ndarray's gemm dispatch.
extern crate blas_src;

pub mod env;
pub mod evalkit;
pub mod features;
pub mod imagination;
pub mod policy;
pub mod tensor;
pub mod trainer;
pub mod worldmodel;
