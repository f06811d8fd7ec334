//! Reference-element integral tensors and assembly of the global
//! operators: the mass matrix, the advection matrices, the upwind edge
//! matrix, the inflow boundary vector, and the modal/Taylor
//! transformation blocks.
//!
//! All element and edge integrals are mapped to the reference triangle.
//! The edge tensors keep per-quadrature-point basis products with the
//! quadrature weights applied at assembly time, because the upwind
//! indicator is evaluated per quadrature point and can change within an
//! edge.

use nalgebra::DMatrix;

/// `dst += scale * src` for conforming matrices.
fn add_scaled(dst: &mut DMatrix<f64>, scale: f64, src: &DMatrix<f64>) {
    dst.zip_apply(src, |d, s| *d += scale * s);
}

use crate::basis::{ModalBasis, TaylorBasis};
use crate::error::{DgError, Result};
use crate::mesh::Mesh;
use crate::quadrature::{gamma_map, quad_rule_1d, quad_rule_2d, theta_map, QuadRule1D, QuadRule2D};
use crate::sparse::{CooMatrix, CsrMatrix};

/// Precomputed reference-element tensors for a fixed polynomial degree.
#[derive(Debug, Clone)]
pub struct RefBlocks {
    pub basis: ModalBasis,
    pub elem_rule: QuadRule2D,
    pub edge_rule: QuadRule1D,
    /// Mass matrix on the reference triangle (identity for an orthonormal
    /// basis, kept as assembled).
    pub mass: DMatrix<f64>,
    /// `grad[m][l][(i, j)]` holds the reference integral of
    /// `d phi_i / d xhat_m * phi_j * phi_l`.
    pub grad: [Vec<DMatrix<f64>>; 2],
    /// `edge_diag[n][r][(i, j)]` holds `phi_i(gamma_n(q_r)) * phi_j(gamma_n(q_r))`.
    pub edge_diag: Vec<Vec<DMatrix<f64>>>,
    /// `edge_offdiag[n_minus][n_plus][r][(i, j)]` pairs the interior trace
    /// of `phi_i` with the neighbor trace of `phi_j` through the
    /// edge-to-edge map.
    pub edge_offdiag: Vec<Vec<Vec<DMatrix<f64>>>>,
    /// `phi_edge[n][(i, r)]` holds `phi_i(gamma_n(q_r))`.
    pub phi_edge: Vec<DMatrix<f64>>,
}

impl RefBlocks {
    pub fn num_dofs(&self) -> usize {
        self.basis.num_dofs()
    }
}

/// Build all reference tensors for degree `p` with element and edge
/// quadrature of the given orders.
pub fn compute_reference_blocks(p: usize, elem_order: usize, edge_order: usize) -> Result<RefBlocks> {
    let basis = ModalBasis::new(p)?;
    let n = basis.num_dofs();
    let elem_rule = quad_rule_2d(elem_order.max(1))?;
    let edge_rule = quad_rule_1d(edge_order.max(1))?;
    let nq = elem_rule.points.len();
    let nr = edge_rule.points.len();

    // basis values/gradients at element quadrature points
    let mut phi = DMatrix::zeros(n, nq);
    let mut dphi = [DMatrix::zeros(n, nq), DMatrix::zeros(n, nq)];
    for (q, point) in elem_rule.points.iter().enumerate() {
        for i in 0..n {
            phi[(i, q)] = basis.eval(i, *point);
            let g = basis.grad(i, *point);
            dphi[0][(i, q)] = g[0];
            dphi[1][(i, q)] = g[1];
        }
    }

    let mut mass = DMatrix::zeros(n, n);
    for q in 0..nq {
        let w = elem_rule.weights[q];
        for i in 0..n {
            for j in 0..n {
                mass[(i, j)] += w * phi[(i, q)] * phi[(j, q)];
            }
        }
    }

    let mut grad = [Vec::with_capacity(n), Vec::with_capacity(n)];
    for m in 0..2 {
        for l in 0..n {
            let mut block = DMatrix::zeros(n, n);
            for q in 0..nq {
                let w = elem_rule.weights[q] * phi[(l, q)];
                for i in 0..n {
                    for j in 0..n {
                        block[(i, j)] += w * dphi[m][(i, q)] * phi[(j, q)];
                    }
                }
            }
            grad[m].push(block);
        }
    }

    let mut phi_edge = Vec::with_capacity(3);
    for edge in 0..3 {
        let mut vals = DMatrix::zeros(n, nr);
        for (r, s) in edge_rule.points.iter().enumerate() {
            let xhat = gamma_map(edge, *s);
            for i in 0..n {
                vals[(i, r)] = basis.eval(i, xhat);
            }
        }
        phi_edge.push(vals);
    }

    let mut edge_diag = Vec::with_capacity(3);
    for edge in 0..3 {
        let mut per_quad = Vec::with_capacity(nr);
        for r in 0..nr {
            let mut block = DMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    block[(i, j)] = phi_edge[edge][(i, r)] * phi_edge[edge][(j, r)];
                }
            }
            per_quad.push(block);
        }
        edge_diag.push(per_quad);
    }

    let mut edge_offdiag = Vec::with_capacity(3);
    for n_minus in 0..3 {
        let mut per_plus = Vec::with_capacity(3);
        for n_plus in 0..3 {
            let mut per_quad = Vec::with_capacity(nr);
            for (r, s) in edge_rule.points.iter().enumerate() {
                let far = theta_map(n_minus, n_plus, gamma_map(n_minus, *s));
                let mut block = DMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        block[(i, j)] = phi_edge[n_minus][(i, r)] * basis.eval(j, far);
                    }
                }
                per_quad.push(block);
            }
            per_plus.push(per_quad);
        }
        edge_offdiag.push(per_plus);
    }

    Ok(RefBlocks {
        basis,
        elem_rule,
        edge_rule,
        mass,
        grad,
        edge_diag,
        edge_offdiag,
        phi_edge,
    })
}

/// Global mass matrix: block `k` is `2 |T_k|` times the reference mass.
pub fn assemble_mass(mesh: &Mesh, blocks: &RefBlocks) -> CsrMatrix {
    let n = blocks.num_dofs();
    let mut coo = CooMatrix::new(mesh.num_elements() * n, mesh.num_elements() * n);
    for k in 0..mesh.num_elements() {
        coo.push_block(k * n, k * n, &blocks.mass, 2.0 * mesh.area[k]);
    }
    coo.to_csr()
}

/// Advection matrices `G^1`, `G^2` from the velocity coefficient tables
/// (K x N, one row per element).
pub fn assemble_advection_elem(
    mesh: &Mesh,
    blocks: &RefBlocks,
    u1: &DMatrix<f64>,
    u2: &DMatrix<f64>,
) -> Result<(CsrMatrix, CsrMatrix)> {
    let n = blocks.num_dofs();
    let nk = mesh.num_elements();
    if u1.nrows() != nk || u1.ncols() != n || u2.nrows() != nk || u2.ncols() != n {
        return Err(DgError::InvalidArgument(format!(
            "velocity coefficient tables must be {nk} x {n}"
        )));
    }
    let dim = nk * n;
    let mut coo1 = CooMatrix::new(dim, dim);
    let mut coo2 = CooMatrix::new(dim, dim);
    let mut block = DMatrix::zeros(n, n);
    for k in 0..nk {
        let b = &mesh.b_mat[k];
        // G^1: d/dx^1 transforms with B22 and -B21
        block.fill(0.0);
        for l in 0..n {
            let c = u1[(k, l)];
            if c != 0.0 {
                add_scaled(&mut block, c * b[1][1], &blocks.grad[0][l]);
                add_scaled(&mut block, -c * b[1][0], &blocks.grad[1][l]);
            }
        }
        coo1.push_block(k * n, k * n, &block, 1.0);
        // G^2: d/dx^2 transforms with -B12 and B11
        block.fill(0.0);
        for l in 0..n {
            let c = u2[(k, l)];
            if c != 0.0 {
                add_scaled(&mut block, -c * b[0][1], &blocks.grad[0][l]);
                add_scaled(&mut block, c * b[0][0], &blocks.grad[1][l]);
            }
        }
        coo2.push_block(k * n, k * n, &block, 1.0);
    }
    Ok((coo1.to_csr(), coo2.to_csr()))
}

/// Normal velocity `u . nu` at the edge quadrature points of every
/// (element, local edge) slot.
///
/// Each interior edge is evaluated once and mirrored to the neighbor slot
/// with flipped sign and reversed quadrature order, so the two sides agree
/// exactly and make identical upwind decisions.
#[derive(Debug, Clone)]
pub struct NormalVelocityField {
    num_quad: usize,
    vals: Vec<f64>,
}

impl NormalVelocityField {
    pub fn num_quad(&self) -> usize {
        self.num_quad
    }

    #[inline]
    pub fn get(&self, k: usize, n: usize, r: usize) -> f64 {
        self.vals[(k * 3 + n) * self.num_quad + r]
    }
}

/// Evaluate the normal velocity analytically at all edge quadrature points.
pub fn eval_normal_velocity<U>(mesh: &Mesh, velocity: U, t: f64, edge_rule: &QuadRule1D) -> NormalVelocityField
where
    U: Fn(f64, [f64; 2]) -> [f64; 2],
{
    let nr = edge_rule.points.len();
    let nk = mesh.num_elements();
    let mut vals = vec![0.0; nk * 3 * nr];
    for k in 0..nk {
        for n in 0..3 {
            let owns = match mesh.neighbors[k][n] {
                None => true,
                Some((kp, _)) => k < kp,
            };
            if !owns {
                continue;
            }
            let nu = mesh.normals[k][n];
            for (r, s) in edge_rule.points.iter().enumerate() {
                let x = mesh.edge_point(k, n, *s);
                let u = velocity(t, x);
                let vn = u[0] * nu[0] + u[1] * nu[1];
                vals[(k * 3 + n) * nr + r] = vn;
                if let Some((kp, np)) = mesh.neighbors[k][n] {
                    vals[(kp * 3 + np) * nr + (nr - 1 - r)] = -vn;
                }
            }
        }
    }
    NormalVelocityField { num_quad: nr, vals }
}

/// Upwind edge matrix `R`. Diagonal blocks gather the outflow parts of all
/// edges of each element; off-diagonal blocks couple inflow edges to the
/// upwind neighbor through the adjacency pattern.
pub fn assemble_upwind_edge(mesh: &Mesh, blocks: &RefBlocks, vn: &NormalVelocityField) -> CsrMatrix {
    let n = blocks.num_dofs();
    let nk = mesh.num_elements();
    let weights = &blocks.edge_rule.weights;
    let nr = weights.len();
    assert_eq!(vn.num_quad(), nr, "normal velocity sampled with a different edge rule");
    let mut coo = CooMatrix::new(nk * n, nk * n);
    let mut block = DMatrix::zeros(n, n);
    for k in 0..nk {
        block.fill(0.0);
        let mut any = false;
        for edge in 0..3 {
            let len = mesh.edge_len[k][edge];
            for r in 0..nr {
                let v = vn.get(k, edge, r);
                if v >= 0.0 && v != 0.0 {
                    add_scaled(&mut block, weights[r] * len * v, &blocks.edge_diag[edge][r]);
                    any = true;
                }
            }
        }
        if any {
            coo.push_block(k * n, k * n, &block, 1.0);
        }
    }
    for n_minus in 0..3 {
        for n_plus in 0..3 {
            let pairs = &mesh.adjacency[n_minus * 3 + n_plus];
            for &(k_minus, k_plus) in pairs {
                block.fill(0.0);
                let len = mesh.edge_len[k_minus][n_minus];
                let mut any = false;
                for r in 0..nr {
                    let v = vn.get(k_minus, n_minus, r);
                    if v < 0.0 {
                        add_scaled(
                            &mut block,
                            weights[r] * len * v,
                            &blocks.edge_offdiag[n_minus][n_plus][r],
                        );
                        any = true;
                    }
                }
                if any {
                    coo.push_block(k_minus * n, k_plus * n, &block, 1.0);
                }
            }
        }
    }
    coo.to_csr()
}

/// Inflow boundary vector `K_D` for a Dirichlet datum `c_D`.
pub fn assemble_dirichlet_vector<C>(
    mesh: &Mesh,
    blocks: &RefBlocks,
    boundary_value: C,
    vn: &NormalVelocityField,
    t: f64,
) -> Vec<f64>
where
    C: Fn(f64, [f64; 2]) -> f64,
{
    let n = blocks.num_dofs();
    let nk = mesh.num_elements();
    let weights = &blocks.edge_rule.weights;
    let points = &blocks.edge_rule.points;
    let mut out = vec![0.0; nk * n];
    for k in 0..nk {
        for edge in 0..3 {
            if mesh.neighbors[k][edge].is_some() {
                continue;
            }
            let len = mesh.edge_len[k][edge];
            for (r, s) in points.iter().enumerate() {
                let v = vn.get(k, edge, r);
                if v < 0.0 {
                    let x = mesh.edge_point(k, edge, *s);
                    let c = weights[r] * len * v * boundary_value(t, x);
                    for i in 0..n {
                        out[k * n + i] += c * blocks.phi_edge[edge][(i, r)];
                    }
                }
            }
        }
    }
    out
}

/// Modal-to-Taylor transformation blocks: block `k` holds the integrals of
/// modal basis function `i` against Taylor basis function `j` over `T_k`.
pub fn assemble_basis_transform(mesh: &Mesh, blocks: &RefBlocks, taylor: &TaylorBasis) -> Vec<DMatrix<f64>> {
    let n = blocks.num_dofs();
    assert_eq!(taylor.num_dofs(), n);
    let rule = &blocks.elem_rule;
    let mut out = Vec::with_capacity(mesh.num_elements());
    for k in 0..mesh.num_elements() {
        let mut block = DMatrix::zeros(n, n);
        for (q, point) in rule.points.iter().enumerate() {
            let x = mesh.map_to_physical(k, *point);
            let w = 2.0 * mesh.area[k] * rule.weights[q];
            for j in 0..n {
                let tj = taylor.eval(k, j, x);
                if tj == 0.0 {
                    continue;
                }
                for i in 0..n {
                    block[(i, j)] += w * blocks.basis.eval(i, *point) * tj;
                }
            }
        }
        out.push(block);
    }
    out
}

/// Consistent and lumped mass matrices in the Taylor basis; the lumped
/// matrix is the diagonal of the consistent one.
pub fn assemble_taylor_mass(
    mesh: &Mesh,
    blocks: &RefBlocks,
    taylor: &TaylorBasis,
) -> (Vec<DMatrix<f64>>, Vec<Vec<f64>>) {
    let n = taylor.num_dofs();
    let rule = &blocks.elem_rule;
    let mut consistent = Vec::with_capacity(mesh.num_elements());
    let mut lumped = Vec::with_capacity(mesh.num_elements());
    for k in 0..mesh.num_elements() {
        let mut block = DMatrix::zeros(n, n);
        for (q, point) in rule.points.iter().enumerate() {
            let x = mesh.map_to_physical(k, *point);
            let w = 2.0 * mesh.area[k] * rule.weights[q];
            let vals: Vec<f64> = (0..n).map(|i| taylor.eval(k, i, x)).collect();
            for i in 0..n {
                for j in 0..n {
                    block[(i, j)] += w * vals[i] * vals[j];
                }
            }
        }
        lumped.push((0..n).map(|i| block[(i, i)]).collect());
        consistent.push(block);
    }
    (consistent, lumped)
}

/// Kronecker product `A (x) B`.
pub fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let (ma, na) = (a.nrows(), a.ncols());
    let (mb, nb) = (b.nrows(), b.ncols());
    let mut out = DMatrix::zeros(ma * mb, na * nb);
    for i in 0..ma {
        for j in 0..na {
            let c = a[(i, j)];
            if c == 0.0 {
                continue;
            }
            for k in 0..mb {
                for l in 0..nb {
                    out[(i * mb + k, j * nb + l)] = c * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Row-blocked Kronecker product: `B` supplies a different right-hand
/// block for every row of `A`. Requires `rows(B) = r * rows(A)` and
/// produces a `rows(B) x (cols(A) * cols(B))` matrix whose block row `i`
/// is `[a_i1 * B_i, ..., a_in * B_i]` with `B_i` the `i`-th row slab of `B`.
pub fn kron_vec(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let (ma, na) = (a.nrows(), a.ncols());
    let (mb, nb) = (b.nrows(), b.ncols());
    if ma == 0 || mb % ma != 0 {
        return Err(DgError::InvalidArgument(format!(
            "kron_vec requires rows(B) to be a multiple of rows(A), got {mb} and {ma}"
        )));
    }
    let r = mb / ma;
    let mut out = DMatrix::zeros(mb, na * nb);
    for i in 0..ma {
        for j in 0..na {
            let c = a[(i, j)];
            if c == 0.0 {
                continue;
            }
            for k in 0..r {
                for l in 0..nb {
                    out[(i * r + k, j * nb + l)] = c * b[(i * r + k, l)];
                }
            }
        }
    }
    Ok(out)
}
