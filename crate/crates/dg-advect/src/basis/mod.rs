//! Polynomial bases: the modal L2-orthonormal family on the reference
//! triangle (degrees 0..=4) and the per-element Taylor basis used by the
//! slope limiters, together with the multi-index bookkeeping shared by
//! both.

mod coeffs;

use crate::error::{DgError, Result};
use crate::mesh::Mesh;
use crate::quadrature::quad_rule_2d;

/// Highest degree of the tabulated modal basis.
pub const MAX_DEGREE: usize = 4;

/// Two-dimensional multi-index `a = (a1, a2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiIndex {
    pub a1: u32,
    pub a2: u32,
}

impl MultiIndex {
    pub fn new(a1: u32, a2: u32) -> MultiIndex {
        MultiIndex { a1, a2 }
    }

    /// Total degree `|a| = a1 + a2`.
    pub fn degree(&self) -> u32 {
        self.a1 + self.a2
    }

    /// `a! = a1! * a2!`.
    pub fn factorial(&self) -> f64 {
        factorial(self.a1) * factorial(self.a2)
    }

    /// `x^a = x1^a1 * x2^a2`.
    pub fn monomial(&self, x: [f64; 2]) -> f64 {
        x[0].powi(self.a1 as i32) * x[1].powi(self.a2 as i32)
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Number of local degrees of freedom `N = (p+1)(p+2)/2`.
pub fn num_local_dofs(p: usize) -> usize {
    (p + 1) * (p + 2) / 2
}

/// The 1-based consecutive index `I(a) = |a|(|a|+1)/2 + a2 + 1` that orders
/// multi-indices by degree, then by `a2`.
pub fn linear_index(a: MultiIndex) -> usize {
    let d = a.degree() as usize;
    d * (d + 1) / 2 + a.a2 as usize + 1
}

/// All multi-indices with `|a| <= p`, ordered so that entry `j` has linear
/// index `j + 1`.
pub fn multi_index_table(p: usize) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(num_local_dofs(p));
    for deg in 0..=p as u32 {
        for a2 in 0..=deg {
            out.push(MultiIndex::new(deg - a2, a2));
        }
    }
    out
}

/// Orthonormal polynomial basis on the reference triangle.
///
/// The family is hierarchical: the first `(q+1)(q+2)/2` functions span the
/// polynomials of degree `q` for every `q <= p`. Basis and gradient
/// evaluations use 0-based function indices.
#[derive(Debug, Clone)]
pub struct ModalBasis {
    p: usize,
    n: usize,
    exps: Vec<MultiIndex>,
}

impl ModalBasis {
    pub fn new(p: usize) -> Result<ModalBasis> {
        if p > MAX_DEGREE {
            return Err(DgError::InvalidArgument(format!(
                "modal basis tabulated up to degree {MAX_DEGREE}, got {p}"
            )));
        }
        let n = num_local_dofs(p);
        debug_assert!(n <= coeffs::NUM_MODAL);
        Ok(ModalBasis {
            p,
            n,
            exps: multi_index_table(p),
        })
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn num_dofs(&self) -> usize {
        self.n
    }

    /// Value of basis function `i` (0-based) at a reference point.
    pub fn eval(&self, i: usize, xhat: [f64; 2]) -> f64 {
        assert!(i < self.n, "basis index {i} out of range (N = {})", self.n);
        let row = &coeffs::MODAL_COEFFS[i];
        let mut acc = 0.0;
        for (j, e) in self.exps.iter().enumerate().take(i + 1) {
            if row[j] != 0.0 {
                acc += row[j] * e.monomial(xhat);
            }
        }
        acc
    }

    /// Gradient of basis function `i` (0-based) at a reference point.
    pub fn grad(&self, i: usize, xhat: [f64; 2]) -> [f64; 2] {
        assert!(i < self.n, "basis index {i} out of range (N = {})", self.n);
        let row = &coeffs::MODAL_COEFFS[i];
        let mut gx = 0.0;
        let mut gy = 0.0;
        for (j, e) in self.exps.iter().enumerate().take(i + 1) {
            let c = row[j];
            if c == 0.0 {
                continue;
            }
            if e.a1 > 0 {
                gx += c
                    * e.a1 as f64
                    * xhat[0].powi(e.a1 as i32 - 1)
                    * xhat[1].powi(e.a2 as i32);
            }
            if e.a2 > 0 {
                gy += c
                    * e.a2 as f64
                    * xhat[0].powi(e.a1 as i32)
                    * xhat[1].powi(e.a2 as i32 - 1);
            }
        }
        [gx, gy]
    }
}

/// Per-element Taylor basis about the element centroids.
///
/// The first function is the constant 1; functions 1 and 2 (0-based) are
/// the centered coordinates scaled by the half bounding-box extents; the
/// remaining functions are mean-centered scaled monomials, so every
/// function beyond the first has zero element mean and the first Taylor
/// coefficient of any field is its cell mean.
#[derive(Debug, Clone)]
pub struct TaylorBasis {
    p: usize,
    n: usize,
    indices: Vec<MultiIndex>,
    centroids: Vec<[f64; 2]>,
    bbox_half: Vec<[f64; 2]>,
    /// Element means of `(x - x_c)^a` for every table index, zero for
    /// `|a| < 2`; row k holds element k.
    means: Vec<f64>,
    /// Cached values of all basis functions at the element vertices,
    /// laid out as `[k][vertex][i]`.
    vertex_values: Vec<f64>,
}

impl TaylorBasis {
    pub fn new(mesh: &Mesh, p: usize) -> Result<TaylorBasis> {
        let n = num_local_dofs(p);
        let nk = mesh.num_elements();
        let indices = multi_index_table(p);
        let rule = quad_rule_2d(p.max(1))?;
        let mut means = vec![0.0; nk * n];
        for k in 0..nk {
            let xc = mesh.centroids[k];
            for (i, a) in indices.iter().enumerate() {
                if a.degree() < 2 {
                    continue;
                }
                // mean over T_k of (x - x_c)^a; the 2|T_k| of the mapped
                // integral cancels against the 1/|T_k| of the mean
                let mut acc = 0.0;
                for (q, w) in rule.points.iter().zip(&rule.weights) {
                    let x = mesh.map_to_physical(k, *q);
                    acc += w * a.monomial([x[0] - xc[0], x[1] - xc[1]]);
                }
                means[k * n + i] = 2.0 * acc;
            }
        }
        let mut basis = TaylorBasis {
            p,
            n,
            indices,
            centroids: mesh.centroids.clone(),
            bbox_half: mesh.bbox_half.clone(),
            means,
            vertex_values: Vec::new(),
        };
        let mut vertex_values = vec![0.0; nk * 3 * n];
        for k in 0..nk {
            for v in 0..3 {
                let x = mesh.elem_vertex(k, v);
                for i in 0..n {
                    vertex_values[(k * 3 + v) * n + i] = basis.eval(k, i, x);
                }
            }
        }
        basis.vertex_values = vertex_values;
        Ok(basis)
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn num_dofs(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    /// Value of Taylor basis function `i` (0-based) of element `k` at a
    /// physical point.
    pub fn eval(&self, k: usize, i: usize, x: [f64; 2]) -> f64 {
        assert!(i < self.n);
        if i == 0 {
            return 1.0;
        }
        let xc = self.centroids[k];
        let d = [x[0] - xc[0], x[1] - xc[1]];
        let h = self.bbox_half[k];
        match i {
            1 => d[0] / h[0],
            2 => d[1] / h[1],
            _ => {
                let a = self.indices[i];
                let scale = a.factorial() * a.monomial(h);
                (a.monomial(d) - self.means[k * self.n + i]) / scale
            }
        }
    }

    /// Cached value of basis function `i` at local vertex `v` of element `k`.
    pub fn vertex_value(&self, k: usize, v: usize, i: usize) -> f64 {
        self.vertex_values[(k * 3 + v) * self.n + i]
    }
}
