//! Dense tensors with reverse-mode automatic differentiation.
//!
//! Two layers live here:
//!
//! * [`Tensor`] — an owned value (shape + row-major f32 data) used for
//!   parameters, images, and results. Immutable by convention once built;
//!   `grad` is populated only by explicit calls.
//! * [`Tape`] — a Wengert tape. Operations executed through a tape record
//!   their dependencies; [`Tape::backward`] replays them in reverse. The
//!   backward pass itself is expressed in tape operations, so gradients
//!   can be differentiated again ([`Tape::backward_graph`]) — the ranking
//!   loss in the attacks module relies on that.
//!
//! All arithmetic is f32 with f64 accumulation inside reductions, fixed
//! iteration order, single-threaded: results are bitwise deterministic.

mod kernels;
mod tape;

pub use tape::{Gradients, Tape, TensorId};

use crate::error::{Error, Result};

/// Number of elements implied by a shape (empty shape = scalar = 1).
pub fn numel(shape: &[usize]) -> usize {
    shape.iter().product()
}

/// An owned dense tensor. `data` is row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    pub shape: Vec<usize>,
    pub data: Vec<f32>,
    pub requires_grad: bool,
    pub grad: Option<Vec<f32>>,
}

impl Tensor {
    /// Build a tensor, validating the shape/data contract and finiteness.
    pub fn new(shape: Vec<usize>, data: Vec<f32>) -> Result<Self> {
        if numel(&shape) != data.len() {
            return Err(Error::ShapeMismatch(format!(
                "shape {:?} implies {} elements, data has {}",
                shape,
                numel(&shape),
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!(
                "tensor element {} is {}",
                pos, data[pos]
            )));
        }
        Ok(Tensor {
            shape,
            data,
            requires_grad: false,
            grad: None,
        })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = numel(&shape);
        Tensor {
            shape,
            data: vec![0.0; n],
            requires_grad: false,
            grad: None,
        }
    }

    pub fn filled(shape: Vec<usize>, value: f32) -> Self {
        let n = numel(&shape);
        Tensor {
            shape,
            data: vec![value; n],
            requires_grad: false,
            grad: None,
        }
    }

    pub fn scalar(value: f32) -> Self {
        Tensor {
            shape: vec![],
            data: vec![value],
            requires_grad: false,
            grad: None,
        }
    }

    /// Mark as a differentiation leaf (builder style).
    pub fn with_grad(mut self) -> Self {
        self.requires_grad = true;
        self
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    /// L2 norm, f64 accumulation.
    pub fn l2_norm(&self) -> f64 {
        kernels::sq_norm(&self.data).sqrt()
    }

    /// Euclidean distance to another tensor of the same shape.
    pub fn l2_distance(&self, other: &Tensor) -> Result<f64> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!(
                "l2_distance: {:?} vs {:?}",
                self.shape, other.shape
            )));
        }
        let mut acc = 0.0f64;
        for (&a, &b) in self.data.iter().zip(&other.data) {
            let d = a as f64 - b as f64;
            acc += d * d;
        }
        Ok(acc.sqrt())
    }
}

pub(crate) use kernels::{sq_norm, sum_all};
