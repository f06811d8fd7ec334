//! Vertex-based slope limiters on Taylor representations.
//!
//! All three variants bound linear reconstructions at the element vertices
//! by the minimum and maximum "centroid" values over the patch of elements
//! containing each vertex. They differ in how higher-degree coefficients
//! are treated:
//!
//! - linear: one correction factor from the solution means; scales the
//!   linear coefficients and drops everything above unless the factor is 1,
//! - hierarchical: per-degree factors from linear reconstructions of the
//!   derivative coefficients, combined by a running maximum from the top
//!   degree down,
//! - strict: per-degree factors from full reconstructions, each applied
//!   immediately to all coefficients of that degree and above before the
//!   next lower level is evaluated.
//!
//! The correction-factor formula is regularized: the bound checks are
//! shifted by a small `eps` and the denominators inflated by the same
//! `eps`, and factors are clamped to `[0, 1]`.

use nalgebra::DMatrix;

use crate::basis::{num_local_dofs, MultiIndex, TaylorBasis};
use crate::error::{DgError, Result};
use crate::mesh::Mesh;
use crate::projection::{BasisKind, BasisTransform, RepresentationMatrix};

/// Limiter variant selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimiterKind {
    None,
    Linear,
    Hierarchical,
    Strict,
}

impl LimiterKind {
    pub fn parse(s: &str) -> Result<LimiterKind> {
        match s {
            "none" => Ok(LimiterKind::None),
            "linear" => Ok(LimiterKind::Linear),
            "hierarchical" => Ok(LimiterKind::Hierarchical),
            "strict" => Ok(LimiterKind::Strict),
            other => Err(DgError::InvalidArgument(format!("unknown limiter {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LimiterKind::None => "none",
            LimiterKind::Linear => "linear",
            LimiterKind::Hierarchical => "hierarchical",
            LimiterKind::Strict => "strict",
        }
    }
}

/// Dirichlet boundary information for the limiter: which element vertices
/// lie on the boundary and the boundary values there.
#[derive(Debug, Clone)]
pub struct BoundaryData {
    pub mask: Vec<[bool; 3]>,
    pub values: Vec<[f64; 3]>,
}

/// Limiter variant, regularization parameter, and boundary data.
#[derive(Debug, Clone)]
pub struct LimiterConfig {
    pub kind: LimiterKind,
    pub eps: f64,
    pub boundary: Option<BoundaryData>,
}

pub const DEFAULT_EPS: f64 = 1e-8;

impl LimiterConfig {
    pub fn new(kind: LimiterKind) -> LimiterConfig {
        LimiterConfig { kind, eps: DEFAULT_EPS, boundary: None }
    }

    pub fn none() -> LimiterConfig {
        LimiterConfig::new(LimiterKind::None)
    }

    pub fn with_boundary(mut self, boundary: BoundaryData) -> LimiterConfig {
        self.boundary = Some(boundary);
        self
    }
}

/// Per-(element, vertex) bounds gathered from vertex patches.
#[derive(Debug, Clone)]
pub struct PatchBounds {
    pub min: Vec<[f64; 3]>,
    pub max: Vec<[f64; 3]>,
}

/// Minimum and maximum of the given per-element values over the patch of
/// every element vertex. With `include_boundary`, boundary values join the
/// candidate set on masked vertices.
pub fn compute_patch_bounds(
    mesh: &Mesh,
    centroid_values: &[f64],
    boundary: Option<&BoundaryData>,
    include_boundary: bool,
) -> PatchBounds {
    let nk = mesh.num_elements();
    assert_eq!(centroid_values.len(), nk);
    let mut min = vec![[f64::INFINITY; 3]; nk];
    let mut max = vec![[f64::NEG_INFINITY; 3]; nk];
    for k in 0..nk {
        for v in 0..3 {
            let vertex = mesh.triangles[k][v];
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for &l in &mesh.vertex_patch[vertex] {
                lo = lo.min(centroid_values[l]);
                hi = hi.max(centroid_values[l]);
            }
            if include_boundary {
                if let Some(bd) = boundary {
                    if bd.mask[k][v] {
                        lo = lo.min(bd.values[k][v]);
                        hi = hi.max(bd.values[k][v]);
                    }
                }
            }
            min[k][v] = lo;
            max[k][v] = hi;
        }
    }
    PatchBounds { min, max }
}

/// Correction factors from the three-case vertex-bound formula, with
/// eps-shifted conditions, eps-inflated denominators, and clamping.
pub fn vertex_based_alpha(
    centroid_values: &[f64],
    vertex_values: &DMatrix<f64>,
    bounds: &PatchBounds,
    eps: f64,
) -> Vec<f64> {
    let nk = centroid_values.len();
    assert_eq!(vertex_values.nrows(), nk);
    assert_eq!(vertex_values.ncols(), 3);
    let mut alpha = vec![1.0f64; nk];
    for k in 0..nk {
        let cc = centroid_values[k];
        for v in 0..3 {
            let ci = vertex_values[(k, v)];
            let mut cand = 1.0f64;
            if ci > bounds.max[k][v] - eps {
                cand = cand.min((bounds.max[k][v] - cc) / (ci - cc + eps));
            }
            if ci < bounds.min[k][v] + eps {
                cand = cand.min((bounds.min[k][v] - cc) / (ci - cc - eps));
            }
            alpha[k] = alpha[k].min(cand.clamp(0.0, 1.0));
        }
    }
    alpha
}

/// 0-based position of a multi-index in the coefficient ordering.
fn pos(a: MultiIndex) -> usize {
    crate::basis::linear_index(a) - 1
}

/// Linear reconstruction values of the coefficient block starting at the
/// multi-index `a` at all element vertices.
fn linear_reconstruction_at_vertices(
    c: &DMatrix<f64>,
    taylor: &TaylorBasis,
    a: MultiIndex,
) -> DMatrix<f64> {
    let nk = c.nrows();
    let ia = pos(a);
    let ix = pos(MultiIndex::new(a.a1 + 1, a.a2));
    let iy = pos(MultiIndex::new(a.a1, a.a2 + 1));
    DMatrix::from_fn(nk, 3, |k, v| {
        c[(k, ia)] + c[(k, ix)] * taylor.vertex_value(k, v, 1) + c[(k, iy)] * taylor.vertex_value(k, v, 2)
    })
}

fn check_taylor(c: &RepresentationMatrix) -> Result<()> {
    if c.basis != BasisKind::Taylor {
        return Err(DgError::InvalidArgument("limiter expects a Taylor representation".into()));
    }
    Ok(())
}

/// Linear vertex-based limiter. Scales the linear coefficients by the
/// correction factor and zeroes all higher coefficients, except on
/// elements with factor exactly one, which are left untouched.
pub fn limit_taylor_linear(
    mesh: &Mesh,
    taylor: &TaylorBasis,
    c: &RepresentationMatrix,
    config: &LimiterConfig,
) -> Result<RepresentationMatrix> {
    check_taylor(c)?;
    let mut out = c.clone();
    if c.p == 0 {
        return Ok(out);
    }
    let means: Vec<f64> = (0..c.num_elements()).map(|k| c.data[(k, 0)]).collect();
    let vertex_vals = linear_reconstruction_at_vertices(&c.data, taylor, MultiIndex::new(0, 0));
    let bounds = compute_patch_bounds(mesh, &means, config.boundary.as_ref(), true);
    let alpha = vertex_based_alpha(&means, &vertex_vals, &bounds, config.eps);
    for k in 0..c.num_elements() {
        if alpha[k] == 1.0 {
            continue;
        }
        out.data[(k, 1)] *= alpha[k];
        out.data[(k, 2)] *= alpha[k];
        for i in 3..c.num_dofs() {
            out.data[(k, i)] = 0.0;
        }
    }
    Ok(out)
}

/// Hierarchical vertex-based limiter. Returns the limited representation
/// and the effective per-degree factors (index `q - 1` holds the factor
/// applied to degree-`q` coefficients).
pub fn limit_taylor_hierarchical_with_factors(
    mesh: &Mesh,
    taylor: &TaylorBasis,
    c: &RepresentationMatrix,
    config: &LimiterConfig,
) -> Result<(RepresentationMatrix, Vec<Vec<f64>>)> {
    check_taylor(c)?;
    let p = c.p;
    let nk = c.num_elements();
    let mut out = c.clone();
    if p == 0 {
        return Ok((out, Vec::new()));
    }
    let mut effective = vec![vec![1.0f64; nk]; p];
    for q in (1..=p).rev() {
        let mut raw = vec![1.0f64; nk];
        for a in crate::basis::multi_index_table(q - 1) {
            if a.degree() as usize != q - 1 {
                continue;
            }
            let centroid: Vec<f64> = (0..nk).map(|k| c.data[(k, pos(a))]).collect();
            let vertex_vals = linear_reconstruction_at_vertices(&c.data, taylor, a);
            let bounds = compute_patch_bounds(mesh, &centroid, config.boundary.as_ref(), q == 1);
            let alpha = vertex_based_alpha(&centroid, &vertex_vals, &bounds, config.eps);
            for k in 0..nk {
                raw[k] = raw[k].min(alpha[k]);
            }
        }
        // lower degrees are limited no harder than the higher ones
        for k in 0..nk {
            effective[q - 1][k] = if q == p {
                raw[k]
            } else {
                raw[k].max(effective[q][k])
            };
        }
    }
    for (i, idx) in taylor.indices().iter().enumerate() {
        let d = idx.degree() as usize;
        if d == 0 {
            continue;
        }
        for k in 0..nk {
            out.data[(k, i)] *= effective[d - 1][k];
        }
    }
    Ok((out, effective))
}

pub fn limit_taylor_hierarchical(
    mesh: &Mesh,
    taylor: &TaylorBasis,
    c: &RepresentationMatrix,
    config: &LimiterConfig,
) -> Result<RepresentationMatrix> {
    limit_taylor_hierarchical_with_factors(mesh, taylor, c, config).map(|(out, _)| out)
}

/// Strict vertex-based limiter. Uses full reconstructions of the
/// derivative blocks and applies each level's factor immediately to all
/// coefficients of that degree and above, so a degree-`d` coefficient ends
/// up scaled by the product of the factors of levels `1..=d`. Returns the
/// per-level factors as well.
pub fn limit_taylor_strict_with_factors(
    mesh: &Mesh,
    taylor: &TaylorBasis,
    c: &RepresentationMatrix,
    config: &LimiterConfig,
) -> Result<(RepresentationMatrix, Vec<Vec<f64>>)> {
    check_taylor(c)?;
    let p = c.p;
    let nk = c.num_elements();
    let mut out = c.clone();
    if p == 0 {
        return Ok((out, Vec::new()));
    }
    let indices = taylor.indices();
    let mut factors = vec![vec![1.0f64; nk]; p];
    for q in (1..=p).rev() {
        let max_b = p - q + 1;
        let mut raw = vec![1.0f64; nk];
        for a in crate::basis::multi_index_table(q - 1) {
            if a.degree() as usize != q - 1 {
                continue;
            }
            let centroid: Vec<f64> = (0..nk).map(|k| out.data[(k, pos(a))]).collect();
            // full reconstruction over all trailing multi-indices b with
            // |b| <= p - q + 1, evaluated with the cached vertex values
            let vertex_vals = DMatrix::from_fn(nk, 3, |k, v| {
                let mut acc = 0.0;
                for (jb, b) in indices.iter().enumerate() {
                    if b.degree() as usize > max_b {
                        continue;
                    }
                    let target = MultiIndex::new(a.a1 + b.a1, a.a2 + b.a2);
                    acc += out.data[(k, pos(target))] * taylor.vertex_value(k, v, jb);
                }
                acc
            });
            let bounds = compute_patch_bounds(mesh, &centroid, config.boundary.as_ref(), q == 1);
            let alpha = vertex_based_alpha(&centroid, &vertex_vals, &bounds, config.eps);
            for k in 0..nk {
                raw[k] = raw[k].min(alpha[k]);
            }
        }
        factors[q - 1] = raw;
        // apply immediately to every coefficient of degree >= q
        for (i, idx) in indices.iter().enumerate() {
            if (idx.degree() as usize) >= q {
                for k in 0..nk {
                    out.data[(k, i)] *= factors[q - 1][k];
                }
            }
        }
    }
    Ok((out, factors))
}

pub fn limit_taylor_strict(
    mesh: &Mesh,
    taylor: &TaylorBasis,
    c: &RepresentationMatrix,
    config: &LimiterConfig,
) -> Result<RepresentationMatrix> {
    limit_taylor_strict_with_factors(mesh, taylor, c, config).map(|(out, _)| out)
}

/// Apply the configured limiter variant to a Taylor representation.
pub fn apply_taylor_limiter(
    mesh: &Mesh,
    taylor: &TaylorBasis,
    c: &RepresentationMatrix,
    config: &LimiterConfig,
) -> Result<RepresentationMatrix> {
    match config.kind {
        LimiterKind::None => Ok(c.clone()),
        LimiterKind::Linear => limit_taylor_linear(mesh, taylor, c, config),
        LimiterKind::Hierarchical => limit_taylor_hierarchical(mesh, taylor, c, config),
        LimiterKind::Strict => limit_taylor_strict(mesh, taylor, c, config),
    }
}

/// The limiter as an operator on modal representations: transform to the
/// Taylor basis, limit, transform back.
pub fn limit_disc(
    mesh: &Mesh,
    taylor: &TaylorBasis,
    transform: &BasisTransform,
    c: &RepresentationMatrix,
    config: &LimiterConfig,
) -> Result<RepresentationMatrix> {
    if config.kind == LimiterKind::None {
        return Ok(c.clone());
    }
    let t = transform.dg_to_taylor(c)?;
    let limited = apply_taylor_limiter(mesh, taylor, &t, config)?;
    transform.taylor_to_dg(&limited)
}
