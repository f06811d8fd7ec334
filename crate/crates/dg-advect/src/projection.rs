//! L2 projection of continuous data into the broken polynomial space and
//! transformations between the modal and Taylor representations.

use nalgebra::{DMatrix, LU};

use crate::assembly::RefBlocks;
use crate::basis::{ModalBasis, TaylorBasis};
use crate::error::{DgError, Result};
use crate::mesh::Mesh;
use crate::quadrature::quad_rule_2d;

/// Basis a representation matrix refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Modal,
    Taylor,
}

/// K x N coefficient table of a broken-polynomial function.
#[derive(Debug, Clone, PartialEq)]
pub struct RepresentationMatrix {
    pub data: DMatrix<f64>,
    pub basis: BasisKind,
    pub p: usize,
}

impl RepresentationMatrix {
    pub fn zeros(num_elements: usize, p: usize, basis: BasisKind) -> RepresentationMatrix {
        RepresentationMatrix {
            data: DMatrix::zeros(num_elements, crate::basis::num_local_dofs(p)),
            basis,
            p,
        }
    }

    pub fn num_elements(&self) -> usize {
        self.data.nrows()
    }

    pub fn num_dofs(&self) -> usize {
        self.data.ncols()
    }

    /// Flatten to the global coefficient vector, element rows contiguous.
    pub fn to_flat(&self) -> Vec<f64> {
        let (k, n) = (self.num_elements(), self.num_dofs());
        let mut out = Vec::with_capacity(k * n);
        for row in 0..k {
            for col in 0..n {
                out.push(self.data[(row, col)]);
            }
        }
        out
    }

    pub fn from_flat(flat: &[f64], num_elements: usize, p: usize, basis: BasisKind) -> RepresentationMatrix {
        let n = crate::basis::num_local_dofs(p);
        assert_eq!(flat.len(), num_elements * n);
        let data = DMatrix::from_fn(num_elements, n, |k, i| flat[k * n + i]);
        RepresentationMatrix { data, basis, p }
    }

    /// Element means; for a Taylor representation this is the first
    /// coefficient, for a modal representation `sqrt(2)` times it.
    pub fn element_means(&self) -> Vec<f64> {
        let scale = match self.basis {
            BasisKind::Modal => std::f64::consts::SQRT_2,
            BasisKind::Taylor => 1.0,
        };
        (0..self.num_elements()).map(|k| scale * self.data[(k, 0)]).collect()
    }
}

/// L2 projection of a continuous function into the modal broken space.
pub fn project_l2<F>(mesh: &Mesh, f: F, p: usize, elem_order: usize) -> Result<RepresentationMatrix>
where
    F: Fn([f64; 2]) -> f64,
{
    let basis = ModalBasis::new(p)?;
    let n = basis.num_dofs();
    let rule = quad_rule_2d(elem_order.max(1))?;
    let nq = rule.points.len();
    let mut phi = DMatrix::zeros(n, nq);
    for (q, point) in rule.points.iter().enumerate() {
        for i in 0..n {
            phi[(i, q)] = basis.eval(i, *point);
        }
    }
    let mut mass = DMatrix::zeros(n, n);
    for q in 0..nq {
        for i in 0..n {
            for j in 0..n {
                mass[(i, j)] += rule.weights[q] * phi[(i, q)] * phi[(j, q)];
            }
        }
    }
    let lu = LU::new(mass);
    let mut data = DMatrix::zeros(mesh.num_elements(), n);
    let mut load = nalgebra::DVector::zeros(n);
    for k in 0..mesh.num_elements() {
        load.fill(0.0);
        for (q, point) in rule.points.iter().enumerate() {
            let value = f(mesh.map_to_physical(k, *point)) * rule.weights[q];
            for i in 0..n {
                load[i] += value * phi[(i, q)];
            }
        }
        // the 2|T_k| of the load and of the local mass matrix cancel
        let coeffs = lu
            .solve(&load)
            .ok_or_else(|| DgError::NumericalFailure("singular local mass matrix".into()))?;
        for i in 0..n {
            data[(k, i)] = coeffs[i];
        }
    }
    Ok(RepresentationMatrix { data, basis: BasisKind::Modal, p })
}

/// Cached per-element factorizations for transforming between the modal
/// and Taylor representations by solving `M C = M_dgt C_taylor`.
pub struct BasisTransform {
    p: usize,
    n: usize,
    areas: Vec<f64>,
    ref_mass: DMatrix<f64>,
    mass_lu: LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    mdgt_blocks: Vec<DMatrix<f64>>,
    mdgt_lu: Vec<LU<f64, nalgebra::Dyn, nalgebra::Dyn>>,
}

impl BasisTransform {
    pub fn new(mesh: &Mesh, blocks: &RefBlocks, taylor: &TaylorBasis) -> BasisTransform {
        let mdgt_blocks = crate::assembly::assemble_basis_transform(mesh, blocks, taylor);
        let mdgt_lu = mdgt_blocks.iter().map(|b| LU::new(b.clone())).collect();
        BasisTransform {
            p: taylor.degree(),
            n: taylor.num_dofs(),
            areas: mesh.area.clone(),
            ref_mass: blocks.mass.clone(),
            mass_lu: LU::new(blocks.mass.clone()),
            mdgt_blocks,
            mdgt_lu,
        }
    }

    pub fn transform_blocks(&self) -> &[DMatrix<f64>] {
        &self.mdgt_blocks
    }

    /// Solve `M_dgt C_taylor = M C` blockwise.
    pub fn dg_to_taylor(&self, c: &RepresentationMatrix) -> Result<RepresentationMatrix> {
        if c.basis != BasisKind::Modal {
            return Err(DgError::InvalidArgument("dg_to_taylor expects a modal representation".into()));
        }
        let mut data = DMatrix::zeros(c.num_elements(), self.n);
        for k in 0..c.num_elements() {
            let row = c.data.row(k).transpose();
            let rhs = 2.0 * self.areas[k] * (&self.ref_mass * &row);
            let sol = self.mdgt_lu[k]
                .solve(&rhs)
                .ok_or_else(|| DgError::NumericalFailure(format!("singular transform block {k}")))?;
            for i in 0..self.n {
                data[(k, i)] = sol[i];
            }
        }
        Ok(RepresentationMatrix { data, basis: BasisKind::Taylor, p: self.p })
    }

    /// Solve `M C = M_dgt C_taylor` blockwise.
    pub fn taylor_to_dg(&self, c: &RepresentationMatrix) -> Result<RepresentationMatrix> {
        if c.basis != BasisKind::Taylor {
            return Err(DgError::InvalidArgument("taylor_to_dg expects a Taylor representation".into()));
        }
        let mut data = DMatrix::zeros(c.num_elements(), self.n);
        for k in 0..c.num_elements() {
            let row = c.data.row(k).transpose();
            let rhs = &self.mdgt_blocks[k] * &row;
            let sol = self
                .mass_lu
                .solve(&(rhs / (2.0 * self.areas[k])))
                .ok_or_else(|| DgError::NumericalFailure("singular local mass matrix".into()))?;
            for i in 0..self.n {
                data[(k, i)] = sol[i];
            }
        }
        Ok(RepresentationMatrix { data, basis: BasisKind::Modal, p: self.p })
    }
}

/// Evaluate a discrete field at per-element point sets given a basis value
/// table laid out as `[k][point][dof]`.
pub fn eval_disc_at_points(c: &RepresentationMatrix, basis_values: &[f64], points_per_elem: usize) -> DMatrix<f64> {
    let (nk, n) = (c.num_elements(), c.num_dofs());
    assert_eq!(basis_values.len(), nk * points_per_elem * n, "basis table shape mismatch");
    let mut out = DMatrix::zeros(nk, points_per_elem);
    for k in 0..nk {
        for point in 0..points_per_elem {
            let base = (k * points_per_elem + point) * n;
            let mut acc = 0.0;
            for i in 0..n {
                acc += c.data[(k, i)] * basis_values[base + i];
            }
            out[(k, point)] = acc;
        }
    }
    out
}

/// Evaluate a modal field at reference points shared by all elements,
/// given the `N x P` table of basis values at those points.
pub fn eval_disc_at_ref_points(c: &RepresentationMatrix, phi_ref: &DMatrix<f64>) -> DMatrix<f64> {
    assert_eq!(c.basis, BasisKind::Modal);
    assert_eq!(phi_ref.nrows(), c.num_dofs());
    &c.data * phi_ref
}

/// Value of a modal field at a physical point inside element `k`.
pub fn eval_modal_at(mesh: &Mesh, basis: &ModalBasis, c: &RepresentationMatrix, k: usize, x: [f64; 2]) -> f64 {
    assert_eq!(c.basis, BasisKind::Modal);
    let xhat = mesh.map_to_reference(k, x);
    (0..c.num_dofs()).map(|i| c.data[(k, i)] * basis.eval(i, xhat)).sum()
}

/// Evaluate a continuous function at the three vertices of every element.
pub fn eval_func_at_vertices<F>(mesh: &Mesh, f: F) -> DMatrix<f64>
where
    F: Fn([f64; 2]) -> f64,
{
    DMatrix::from_fn(mesh.num_elements(), 3, |k, v| f(mesh.elem_vertex(k, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::compute_reference_blocks;
    use crate::mesh::Rect;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn setup(p: usize) -> (Mesh, RefBlocks, TaylorBasis, BasisTransform) {
        let mesh = Mesh::criss_cross(2, 2, Rect::UNIT).unwrap();
        let rb = compute_reference_blocks(p, 2 * p.max(1), 2 * p + 1).unwrap();
        let taylor = TaylorBasis::new(&mesh, p).unwrap();
        let transform = BasisTransform::new(&mesh, &rb, &taylor);
        (mesh, rb, taylor, transform)
    }

    #[test]
    fn constant_projection_p0() {
        let mesh = Mesh::criss_cross(2, 2, Rect::UNIT).unwrap();
        let c = project_l2(&mesh, |_| 1.0, 0, 1).unwrap();
        for k in 0..mesh.num_elements() {
            assert!((c.data[(k, 0)] - 1.0 / f64::sqrt(2.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn polynomials_reproduced_pointwise() {
        let mesh = Mesh::criss_cross(2, 2, Rect::UNIT).unwrap();
        let p = 2;
        let f = |x: [f64; 2]| 1.5 - 2.0 * x[0] + 0.5 * x[1] + 3.0 * x[0] * x[1] - x[1] * x[1];
        let c = project_l2(&mesh, f, p, 2 * p).unwrap();
        let basis = ModalBasis::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let k = rng.gen_range(0..mesh.num_elements());
            let mut a = rng.gen_range(0.0..1.0);
            let mut b = rng.gen_range(0.0..1.0);
            if a + b > 1.0 {
                a = 1.0 - a;
                b = 1.0 - b;
            }
            let x = mesh.map_to_physical(k, [a, b]);
            let val = eval_modal_at(&mesh, &basis, &c, k, x);
            assert!((val - f(x)).abs() < 1e-11, "at {x:?}: {val} vs {}", f(x));
        }
    }

    #[test]
    fn projection_is_idempotent() {
        let mesh = Mesh::criss_cross(2, 2, Rect::UNIT).unwrap();
        let p = 2;
        let f = |x: [f64; 2]| (3.0 * x[0]).sin() * (2.0 * x[1]).cos();
        let c = project_l2(&mesh, f, p, 2 * p).unwrap();
        let basis = ModalBasis::new(p).unwrap();
        let mesh2 = mesh.clone();
        let projected = c.clone();
        let c2 = project_l2(
            &mesh,
            move |x| {
                // evaluate the projected field; points come from quadrature
                // inside elements, so locate the element by brute force
                for k in 0..mesh2.num_elements() {
                    let xh = mesh2.map_to_reference(k, x);
                    if xh[0] >= -1e-12 && xh[1] >= -1e-12 && xh[0] + xh[1] <= 1.0 + 1e-12 {
                        return eval_modal_at(&mesh2, &basis, &projected, k, x);
                    }
                }
                unreachable!("point outside mesh");
            },
            p,
            2 * p,
        )
        .unwrap();
        let diff = (&c.data - &c2.data).abs().max();
        assert!(diff < 1e-12, "max coefficient difference {diff}");
    }

    #[test]
    fn taylor_round_trip() {
        let (mesh, _rb, _taylor, transform) = setup(3);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut c = RepresentationMatrix::zeros(mesh.num_elements(), 3, BasisKind::Modal);
        c.data = DMatrix::from_fn(mesh.num_elements(), c.num_dofs(), |_, _| rng.gen_range(-1.0..1.0));
        let t = transform.dg_to_taylor(&c).unwrap();
        let back = transform.taylor_to_dg(&t).unwrap();
        let diff = (&c.data - &back.data).abs().max();
        assert!(diff < 1e-10, "round trip error {diff}");
    }

    #[test]
    fn constant_field_in_taylor_basis() {
        let (mesh, ..) = setup(2);
        let transform = setup(2).3;
        let c = project_l2(&mesh, |_| 1.0, 2, 4).unwrap();
        let t = transform.dg_to_taylor(&c).unwrap();
        for k in 0..mesh.num_elements() {
            assert!((t.data[(k, 0)] - 1.0).abs() < 1e-12);
            for i in 1..t.num_dofs() {
                assert!(t.data[(k, i)].abs() < 1e-12);
            }
        }
    }

    #[test]
    fn first_taylor_coefficient_is_element_mean() {
        let (mesh, rb, _taylor, transform) = setup(2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut c = RepresentationMatrix::zeros(mesh.num_elements(), 2, BasisKind::Modal);
        c.data = DMatrix::from_fn(mesh.num_elements(), c.num_dofs(), |_, _| rng.gen_range(-2.0..2.0));
        let t = transform.dg_to_taylor(&c).unwrap();
        let basis = &rb.basis;
        let rule = quad_rule_2d(2 * 2).unwrap();
        for k in 0..mesh.num_elements() {
            // mean by quadrature of the modal representation
            let mean: f64 = rule
                .points
                .iter()
                .zip(&rule.weights)
                .map(|(q, w)| {
                    let val: f64 = (0..c.num_dofs()).map(|i| c.data[(k, i)] * basis.eval(i, *q)).sum();
                    2.0 * w * val
                })
                .sum();
            assert!((t.data[(k, 0)] - mean).abs() < 1e-12);
        }
    }

    #[test]
    fn mean_preserved_between_bases() {
        let (mesh, _rb, _taylor, transform) = setup(3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut c = RepresentationMatrix::zeros(mesh.num_elements(), 3, BasisKind::Modal);
        c.data = DMatrix::from_fn(mesh.num_elements(), c.num_dofs(), |_, _| rng.gen_range(-1.0..1.0));
        let t = transform.dg_to_taylor(&c).unwrap();
        for (a, b) in c.element_means().iter().zip(t.element_means()) {
            assert!((a - b).abs() < 1e-11);
        }
    }

    #[test]
    fn disc_evaluation_matches_direct() {
        let (mesh, rb, ..) = setup(2);
        let c = project_l2(&mesh, |x| x[0] * x[0] - 0.3 * x[1], 2, 4).unwrap();
        // centroid is (1/3, 1/3) on the reference triangle
        let n = c.num_dofs();
        let phi_ref = DMatrix::from_fn(n, 1, |i, _| rb.basis.eval(i, [1.0 / 3.0, 1.0 / 3.0]));
        let at_centroids = eval_disc_at_ref_points(&c, &phi_ref);
        for k in 0..mesh.num_elements() {
            let xc = mesh.centroids[k];
            let expect = xc[0] * xc[0] - 0.3 * xc[1];
            assert!((at_centroids[(k, 0)] - expect).abs() < 1e-12);
        }
        // generic per-element table path gives the same values
        let mut table = vec![0.0; mesh.num_elements() * n];
        for k in 0..mesh.num_elements() {
            for i in 0..n {
                table[k * n + i] = rb.basis.eval(i, [1.0 / 3.0, 1.0 / 3.0]);
            }
        }
        let other = eval_disc_at_points(&c, &table, 1);
        assert!((&other - &at_centroids).abs().max() < 1e-14);
        // zero coefficients stay zero
        let z = RepresentationMatrix::zeros(mesh.num_elements(), 2, BasisKind::Modal);
        assert!(eval_disc_at_points(&z, &table, 1).abs().max() == 0.0);
    }

    #[test]
    fn vertex_evaluation_of_continuous_function() {
        let mesh = Mesh::criss_cross(3, 3, Rect::UNIT).unwrap();
        let vals = eval_func_at_vertices(&mesh, |x| x[0]);
        for k in 0..mesh.num_elements() {
            for v in 0..3 {
                assert_eq!(vals[(k, v)], mesh.elem_vertex(k, v)[0]);
            }
        }
        let c = eval_func_at_vertices(&mesh, |_| 4.25);
        assert!(c.iter().all(|&v| v == 4.25));
    }

    #[test]
    fn projection_beats_sampled_polynomials() {
        let mesh = Mesh::criss_cross(1, 1, Rect::UNIT).unwrap();
        let p = 1;
        let f = |x: [f64; 2]| (2.0 * x[0] + x[1]).exp();
        let c = project_l2(&mesh, f, p, 2 * p).unwrap();
        let basis = ModalBasis::new(p).unwrap();
        let rule = quad_rule_2d(9).unwrap();
        let err_proj: f64 = (0..mesh.num_elements())
            .map(|k| {
                rule.points
                    .iter()
                    .zip(&rule.weights)
                    .map(|(q, w)| {
                        let x = mesh.map_to_physical(k, *q);
                        let val: f64 =
                            (0..c.num_dofs()).map(|i| c.data[(k, i)] * basis.eval(i, *q)).sum();
                        2.0 * mesh.area[k] * w * (val - f(x)).powi(2)
                    })
                    .sum::<f64>()
            })
            .sum::<f64>()
            .sqrt();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..25 {
            // random linear competitor on every element
            let coeffs: Vec<[f64; 3]> = (0..mesh.num_elements())
                .map(|_| [rng.gen_range(-2.0..8.0), rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0)])
                .collect();
            let err_other: f64 = (0..mesh.num_elements())
                .map(|k| {
                    rule.points
                        .iter()
                        .zip(&rule.weights)
                        .map(|(q, w)| {
                            let x = mesh.map_to_physical(k, *q);
                            let val = coeffs[k][0] + coeffs[k][1] * x[0] + coeffs[k][2] * x[1];
                            2.0 * mesh.area[k] * w * (val - f(x)).powi(2)
                        })
                        .sum::<f64>()
                })
                .sum::<f64>()
                .sqrt();
            assert!(err_proj <= err_other + 1e-9);
        }
    }
}
