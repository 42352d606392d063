//! Reverse-mode automatic differentiation on dynamically shaped arrays.
//!
//! A [`Graph`] is a define-by-run tape: operations compute their value eagerly
//! and record a backward closure. Parameters live outside the graph in
//! [`ParamStore`]s so a fresh tape can be built per training step while
//! parameters and optimizer state persist. The element type is generic over
//! [`Elem`] (`f32` for training, `f64` for finite-difference verification).

mod adam;
mod conv;
mod graph;
mod nn;
mod ops;

pub use adam::{clip_global_norm, Adam, AdamState};
pub use conv::{conv2d, conv_transpose2d};
pub use graph::{Elem, Gradients, Graph, ParamId, ParamStore, SavedParams, Var};
pub use nn::{he_normal, normal_init, Linear, Mlp};
pub use ops::*;

#[cfg(test)]
mod gradcheck;
