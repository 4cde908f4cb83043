//! Dense tensor arithmetic and the small numeric kernels everything else
//! builds on: 1x1 correlation against a feature map, stable 2-D softmax,
//! 3x3 uniform smoothing, and a central finite-difference gradient oracle.
//!
//! All data is row-major `f64`. Operations are pure functions over immutable
//! inputs and are safe to call concurrently.

use crate::error::{Error, Result};

/// Dense row-major tensor of 64-bit floats.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    /// Build a tensor, validating that the shape matches the data length and
    /// that every element is finite.
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Result<Self> {
        let expected: usize = shape.iter().product();
        if expected != data.len() {
            return Err(Error::ShapeMismatch {
                context: "Tensor::new",
                expected: shape.clone(),
                got: vec![data.len()],
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "tensor data contains non-finite values".into(),
            ));
        }
        Ok(Self { shape, data })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        Self {
            shape,
            data: vec![0.0; len],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

/// H x W x D convolutional activation block, row-major `[h][w][d]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMap {
    height: usize,
    width: usize,
    depth: usize,
    data: Vec<f64>,
}

impl FeatureMap {
    pub fn new(height: usize, width: usize, depth: usize, data: Vec<f64>) -> Result<Self> {
        if height == 0 || width == 0 || depth == 0 {
            return Err(Error::InvalidArgument(
                "feature map dimensions must be >= 1".into(),
            ));
        }
        if data.len() != height * width * depth {
            return Err(Error::ShapeMismatch {
                context: "FeatureMap::new",
                expected: vec![height, width, depth],
                got: vec![data.len()],
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "feature map contains non-finite values".into(),
            ));
        }
        Ok(Self {
            height,
            width,
            depth,
            data,
        })
    }

    pub fn zeros(height: usize, width: usize, depth: usize) -> Self {
        Self {
            height,
            width,
            depth,
            data: vec![0.0; height * width * depth],
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// The D-vector at spatial position (y, x).
    pub fn vector_at(&self, y: usize, x: usize) -> &[f64] {
        let base = (y * self.width + x) * self.depth;
        &self.data[base..base + self.depth]
    }

    pub fn get(&self, y: usize, x: usize, d: usize) -> f64 {
        self.data[(y * self.width + x) * self.depth + d]
    }

    pub fn set(&mut self, y: usize, x: usize, d: usize, value: f64) {
        self.data[(y * self.width + x) * self.depth + d] = value;
    }
}

/// H x W map of 64-bit floats, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Map2D {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl Map2D {
    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        if height == 0 || width == 0 {
            return Err(Error::InvalidArgument("map dimensions must be >= 1".into()));
        }
        if data.len() != height * width {
            return Err(Error::ShapeMismatch {
                context: "Map2D::new",
                expected: vec![height, width],
                got: vec![data.len()],
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "map contains non-finite values".into(),
            ));
        }
        Ok(Self {
            height,
            width,
            data,
        })
    }

    pub fn zeros(height: usize, width: usize) -> Self {
        Self {
            height,
            width,
            data: vec![0.0; height.max(1) * width.max(1)],
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, y: usize, x: usize) -> f64 {
        self.data[y * self.width + x]
    }

    pub fn set(&mut self, y: usize, x: usize, value: f64) {
        self.data[y * self.width + x] = value;
    }

    pub fn sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn max_value(&self) -> f64 {
        self.data.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Position of the maximum entry; ties resolve to the first occurrence in
    /// row-major order so downstream subgradients are deterministic.
    pub fn argmax(&self) -> (usize, usize) {
        let mut best = 0;
        let mut best_val = self.data[0];
        for (i, &v) in self.data.iter().enumerate().skip(1) {
            if v > best_val {
                best = i;
                best_val = v;
            }
        }
        (best / self.width, best % self.width)
    }

    /// Elementwise accumulate, used to build cumulative maps.
    pub fn add_assign(&mut self, other: &Map2D) -> Result<()> {
        if self.height != other.height || self.width != other.width {
            return Err(Error::ShapeMismatch {
                context: "Map2D::add_assign",
                expected: vec![self.height, self.width],
                got: vec![other.height, other.width],
            });
        }
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
        Ok(())
    }
}

/// Correlate a feature map with a 1x1xD kernel: `out[y][x] = <fmap[y][x][:], kernel>`.
pub fn correlate_1x1(fmap: &FeatureMap, kernel: &[f64]) -> Result<Map2D> {
    if kernel.len() != fmap.depth() {
        return Err(Error::ShapeMismatch {
            context: "correlate_1x1",
            expected: vec![fmap.depth()],
            got: vec![kernel.len()],
        });
    }
    let mut out = Vec::with_capacity(fmap.height() * fmap.width());
    for y in 0..fmap.height() {
        for x in 0..fmap.width() {
            let v = fmap.vector_at(y, x);
            let dot: f64 = v.iter().zip(kernel.iter()).map(|(a, b)| a * b).sum();
            out.push(dot);
        }
    }
    Map2D::new(fmap.height(), fmap.width(), out)
}

/// Numerically stable softmax over all entries of a 2-D map. The output sums
/// to 1 and every entry lies in (0, 1].
pub fn softmax_2d(map: &Map2D) -> Map2D {
    let m = map.max_value();
    let mut exps: Vec<f64> = map.data().iter().map(|&v| (v - m).exp()).collect();
    let total: f64 = exps.iter().sum();
    for e in exps.iter_mut() {
        *e /= total;
    }
    let out = Map2D {
        height: map.height(),
        width: map.width(),
        data: exps,
    };
    debug_assert!((out.sum() - 1.0).abs() < 1e-9);
    out
}

/// Convolve with a 3x3 all-ones kernel, zero padding at the borders:
/// each output cell is the sum of its (up to) 3x3 neighborhood.
pub fn smooth_3x3_uniform(map: &Map2D) -> Map2D {
    let (h, w) = (map.height() as isize, map.width() as isize);
    let mut out = vec![0.0; map.data().len()];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for dy in -1..=1 {
                for dx in -1..=1 {
                    let (ny, nx) = (y + dy, x + dx);
                    if ny >= 0 && ny < h && nx >= 0 && nx < w {
                        acc += map.get(ny as usize, nx as usize);
                    }
                }
            }
            out[(y * w + x) as usize] = acc;
        }
    }
    Map2D {
        height: map.height(),
        width: map.width(),
        data: out,
    }
}

/// Central-difference gradient oracle: `(f(p + h.e_i) - f(p - h.e_i)) / 2h`
/// per coordinate. `loss` must be deterministic.
pub fn finite_diff_grad<F>(mut loss: F, params: &Tensor, h: f64) -> Tensor
where
    F: FnMut(&Tensor) -> f64,
{
    assert!(h > 0.0, "finite_diff_grad: step must be positive");
    let mut probe = params.clone();
    let mut grad = vec![0.0; params.len()];
    for i in 0..params.len() {
        let orig = probe.data()[i];
        probe.data_mut()[i] = orig + h;
        let plus = loss(&probe);
        probe.data_mut()[i] = orig - h;
        let minus = loss(&probe);
        probe.data_mut()[i] = orig;
        grad[i] = (plus - minus) / (2.0 * h);
    }
    Tensor {
        shape: params.shape().to_vec(),
        data: grad,
    }
}

/// Stable softmax over a flat vector (used for logits).
pub fn softmax_vec(values: &[f64]) -> Vec<f64> {
    let m = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut exps: Vec<f64> = values.iter().map(|&v| (v - m).exp()).collect();
    let total: f64 = exps.iter().sum();
    for e in exps.iter_mut() {
        *e /= total;
    }
    exps
}

/// Index of the largest entry, first occurrence on ties.
pub fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}
