//! Triangulations with full edge/vertex topology and per-element geometry.
//!
//! Elements are stored counter-clockwise. Local edge `n` (0-based) is the
//! edge opposite local vertex `n`, so the reference-edge parameterizations
//! in [`crate::quadrature`] apply verbatim: the physical trace of local
//! edge `n` of element `k` is `s -> F_k(gamma_map(n, s))`.
//!
//! A mesh is immutable after construction; refinement returns a new mesh.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{DgError, Result};
use crate::quadrature::gamma_map;

/// Axis-aligned rectangular domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub const UNIT: Rect = Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: 1.0 };

    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Rect {
        Rect { x0, y0, x1, y1 }
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }
}

/// Undirected mesh edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    /// Global vertex indices.
    pub vertices: [usize; 2],
    /// True if the edge lies on the domain boundary.
    pub boundary: bool,
}

/// Triangulation with topology and precomputed affine geometry.
#[derive(Debug, Clone)]
pub struct Mesh {
    /// Vertex coordinates.
    pub vertices: Vec<[f64; 2]>,
    /// Vertex indices per element, counter-clockwise.
    pub triangles: Vec<[usize; 3]>,
    /// All mesh edges.
    pub edges: Vec<Edge>,
    /// Global edge index per (element, local edge).
    pub elem_edges: Vec<[usize; 3]>,
    /// Adjacent `(element, local edge)` per (element, local edge);
    /// `None` on the boundary.
    pub neighbors: Vec<[Option<(usize, usize)>; 3]>,
    /// For each local-edge pair `(n_minus, n_plus)` the list of element
    /// pairs `(k_minus, k_plus)` sharing an edge with those local indices.
    /// Indexed by `n_minus * 3 + n_plus`, each list sorted by `k_minus`.
    pub adjacency: Vec<Vec<(usize, usize)>>,
    /// Element areas.
    pub area: Vec<f64>,
    /// Affine map matrix `B_k = [x_k2 - x_k1 | x_k3 - x_k1]` (row major).
    pub b_mat: Vec<[[f64; 2]; 2]>,
    /// Affine map offset (first vertex of each element).
    pub origin: Vec<[f64; 2]>,
    /// Outward unit normals per (element, local edge).
    pub normals: Vec<[[f64; 2]; 3]>,
    /// Edge lengths per (element, local edge).
    pub edge_len: Vec<[f64; 3]>,
    /// Element centroids.
    pub centroids: Vec<[f64; 2]>,
    /// Half bounding-box extents per element.
    pub bbox_half: Vec<[f64; 2]>,
    /// Elements containing each vertex, sorted.
    pub vertex_patch: Vec<Vec<usize>>,
}

impl Mesh {
    /// Number of elements K.
    pub fn num_elements(&self) -> usize {
        self.triangles.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Coordinates of local vertex `i` of element `k`.
    pub fn elem_vertex(&self, k: usize, i: usize) -> [f64; 2] {
        self.vertices[self.triangles[k][i]]
    }

    /// Affine map `F_k` from the reference triangle to element `k`,
    /// evaluated in barycentric form so reference vertices map onto the
    /// element vertices without rounding.
    pub fn map_to_physical(&self, k: usize, xhat: [f64; 2]) -> [f64; 2] {
        let t = &self.triangles[k];
        let p0 = self.vertices[t[0]];
        let p1 = self.vertices[t[1]];
        let p2 = self.vertices[t[2]];
        let l0 = 1.0 - xhat[0] - xhat[1];
        [
            l0 * p0[0] + xhat[0] * p1[0] + xhat[1] * p2[0],
            l0 * p0[1] + xhat[0] * p1[1] + xhat[1] * p2[1],
        ]
    }

    /// Inverse of the affine map `F_k`.
    pub fn map_to_reference(&self, k: usize, x: [f64; 2]) -> [f64; 2] {
        let b = &self.b_mat[k];
        let o = &self.origin[k];
        let det = 2.0 * self.area[k];
        let dx = x[0] - o[0];
        let dy = x[1] - o[1];
        [
            (b[1][1] * dx - b[0][1] * dy) / det,
            (b[0][0] * dy - b[1][0] * dx) / det,
        ]
    }

    /// Physical point at parameter `s` of local edge `n` of element `k`.
    pub fn edge_point(&self, k: usize, n: usize, s: f64) -> [f64; 2] {
        self.map_to_physical(k, gamma_map(n, s))
    }

    /// Midpoint of local edge `n` of element `k`.
    pub fn edge_midpoint(&self, k: usize, n: usize) -> [f64; 2] {
        self.edge_point(k, n, 0.5)
    }

    /// Smallest element altitude, a mesh-size measure for CFL conditions.
    pub fn h_min(&self) -> f64 {
        (0..self.num_elements())
            .map(|k| {
                let longest = self.edge_len[k].iter().cloned().fold(0.0, f64::max);
                2.0 * self.area[k] / longest
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest element edge length.
    pub fn h_max(&self) -> f64 {
        self.edge_len
            .iter()
            .flat_map(|e| e.iter().cloned())
            .fold(0.0, f64::max)
    }

    /// Criss-cross mesh: `nx * ny` squares, each split into four triangles
    /// through its centroid, so `K = 4 * nx * ny`.
    pub fn criss_cross(nx: usize, ny: usize, domain: Rect) -> Result<Mesh> {
        if nx == 0 || ny == 0 {
            return Err(DgError::InvalidArgument("criss_cross requires nx, ny >= 1".into()));
        }
        if domain.width() <= 0.0 || domain.height() <= 0.0 {
            return Err(DgError::InvalidArgument(format!(
                "zero-size domain: {:?}",
                domain
            )));
        }
        let dx = domain.width() / nx as f64;
        let dy = domain.height() / ny as f64;
        let mut vertices = Vec::with_capacity((nx + 1) * (ny + 1) + nx * ny);
        for j in 0..=ny {
            for i in 0..=nx {
                vertices.push([domain.x0 + i as f64 * dx, domain.y0 + j as f64 * dy]);
            }
        }
        let grid = |i: usize, j: usize| j * (nx + 1) + i;
        let center_base = vertices.len();
        for j in 0..ny {
            for i in 0..nx {
                vertices.push([
                    domain.x0 + (i as f64 + 0.5) * dx,
                    domain.y0 + (j as f64 + 0.5) * dy,
                ]);
            }
        }
        let mut triangles = Vec::with_capacity(4 * nx * ny);
        for j in 0..ny {
            for i in 0..nx {
                let c = center_base + j * nx + i;
                let v00 = grid(i, j);
                let v10 = grid(i + 1, j);
                let v11 = grid(i + 1, j + 1);
                let v01 = grid(i, j + 1);
                triangles.push([v00, v10, c]);
                triangles.push([v10, v11, c]);
                triangles.push([v11, v01, c]);
                triangles.push([v01, v00, c]);
            }
        }
        Mesh::from_cells(vertices, triangles)
    }

    /// Uniform refinement: every triangle is split into four congruent
    /// children through its edge midpoints. The children of parent `k`
    /// occupy indices `4k .. 4k+4` of the refined mesh.
    pub fn refine_uniform(&self) -> Mesh {
        let mut vertices = self.vertices.clone();
        let midpoint_base = vertices.len();
        for edge in &self.edges {
            let a = self.vertices[edge.vertices[0]];
            let b = self.vertices[edge.vertices[1]];
            vertices.push([0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])]);
        }
        let mut triangles = Vec::with_capacity(4 * self.num_elements());
        for k in 0..self.num_elements() {
            let [v0, v1, v2] = self.triangles[k];
            let m0 = midpoint_base + self.elem_edges[k][0];
            let m1 = midpoint_base + self.elem_edges[k][1];
            let m2 = midpoint_base + self.elem_edges[k][2];
            triangles.push([v0, m2, m1]);
            triangles.push([m2, v1, m0]);
            triangles.push([m1, m0, v2]);
            triangles.push([m2, m0, m1]);
        }
        Mesh::from_cells(vertices, triangles)
            .expect("refinement of a valid mesh cannot produce an invalid one")
    }

    /// Build the full topology from raw cells. Input orientation may be
    /// arbitrary; elements are reoriented counter-clockwise.
    pub fn from_cells(vertices: Vec<[f64; 2]>, mut triangles: Vec<[usize; 3]>) -> Result<Mesh> {
        let nv = vertices.len();
        let mut seen = HashMap::new();
        for (k, tri) in triangles.iter_mut().enumerate() {
            for &v in tri.iter() {
                if v >= nv {
                    return Err(DgError::InvalidMesh(format!(
                        "triangle {k} references vertex {v} out of {nv}"
                    )));
                }
            }
            let [a, b, c] = *tri;
            if a == b || b == c || a == c {
                return Err(DgError::InvalidMesh(format!("triangle {k} has repeated vertices")));
            }
            let det = cross(vertices[a], vertices[b], vertices[c]);
            if det == 0.0 {
                return Err(DgError::InvalidMesh(format!("triangle {k} is degenerate")));
            }
            if det < 0.0 {
                tri.swap(1, 2);
            }
            let mut key = *tri;
            key.sort_unstable();
            if let Some(other) = seen.insert(key, k) {
                return Err(DgError::InvalidMesh(format!(
                    "triangles {other} and {k} are duplicates"
                )));
            }
        }

        let nk = triangles.len();
        let mut edge_map: HashMap<[usize; 2], usize> = HashMap::new();
        let mut edge_verts: Vec<[usize; 2]> = Vec::new();
        let mut incidence: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut elem_edges = vec![[usize::MAX; 3]; nk];
        for (k, tri) in triangles.iter().enumerate() {
            for n in 0..3 {
                let a = tri[(n + 1) % 3];
                let b = tri[(n + 2) % 3];
                let key = if a < b { [a, b] } else { [b, a] };
                let id = *edge_map.entry(key).or_insert_with(|| {
                    edge_verts.push(key);
                    incidence.push(Vec::new());
                    edge_verts.len() - 1
                });
                if incidence[id].len() >= 2 {
                    return Err(DgError::InvalidMesh(format!(
                        "non-manifold edge {:?} with more than two incident elements",
                        key
                    )));
                }
                incidence[id].push((k, n));
                elem_edges[k][n] = id;
            }
        }

        let edges: Vec<Edge> = edge_verts
            .iter()
            .zip(&incidence)
            .map(|(v, inc)| Edge { vertices: *v, boundary: inc.len() == 1 })
            .collect();

        let mut neighbors = vec![[None; 3]; nk];
        let mut adjacency = vec![Vec::new(); 9];
        for inc in &incidence {
            if let [(k0, n0), (k1, n1)] = inc[..] {
                neighbors[k0][n0] = Some((k1, n1));
                neighbors[k1][n1] = Some((k0, n0));
                adjacency[n0 * 3 + n1].push((k0, k1));
                adjacency[n1 * 3 + n0].push((k1, k0));
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let mut area = Vec::with_capacity(nk);
        let mut b_mat = Vec::with_capacity(nk);
        let mut origin = Vec::with_capacity(nk);
        let mut normals = Vec::with_capacity(nk);
        let mut edge_len = Vec::with_capacity(nk);
        let mut centroids = Vec::with_capacity(nk);
        let mut bbox_half = Vec::with_capacity(nk);
        for tri in &triangles {
            let p: Vec<[f64; 2]> = tri.iter().map(|&v| vertices[v]).collect();
            let det = cross(p[0], p[1], p[2]);
            area.push(det / 2.0);
            b_mat.push([
                [p[1][0] - p[0][0], p[2][0] - p[0][0]],
                [p[1][1] - p[0][1], p[2][1] - p[0][1]],
            ]);
            origin.push(p[0]);
            centroids.push([
                (p[0][0] + p[1][0] + p[2][0]) / 3.0,
                (p[0][1] + p[1][1] + p[2][1]) / 3.0,
            ]);
            let mut nrm = [[0.0; 2]; 3];
            let mut len = [0.0; 3];
            for n in 0..3 {
                let a = p[(n + 1) % 3];
                let b = p[(n + 2) % 3];
                let t = [b[0] - a[0], b[1] - a[1]];
                let l = t[0].hypot(t[1]);
                len[n] = l;
                nrm[n] = [t[1] / l, -t[0] / l];
            }
            normals.push(nrm);
            edge_len.push(len);
            let xs = [p[0][0], p[1][0], p[2][0]];
            let ys = [p[0][1], p[1][1], p[2][1]];
            bbox_half.push([
                (max3(xs) - min3(xs)) / 2.0,
                (max3(ys) - min3(ys)) / 2.0,
            ]);
        }

        let mut vertex_patch = vec![Vec::new(); nv];
        for (k, tri) in triangles.iter().enumerate() {
            for &v in tri {
                vertex_patch[v].push(k);
            }
        }
        for patch in &mut vertex_patch {
            patch.sort_unstable();
            patch.dedup();
        }

        Ok(Mesh {
            vertices,
            triangles,
            edges,
            elem_edges,
            neighbors,
            adjacency,
            area,
            b_mat,
            origin,
            normals,
            edge_len,
            centroids,
            bbox_half,
            vertex_patch,
        })
    }

    /// Serialize to the plain text format: a `V K` header, `V` lines of
    /// vertex coordinates, and `K` lines of 1-based vertex indices.
    /// Coordinates round-trip bit exactly through [`Mesh::parse_ascii`].
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.num_vertices(), self.num_elements()).unwrap();
        for v in &self.vertices {
            writeln!(out, "{} {}", v[0], v[1]).unwrap();
        }
        for t in &self.triangles {
            writeln!(out, "{} {} {}", t[0] + 1, t[1] + 1, t[2] + 1).unwrap();
        }
        out
    }

    pub fn parse_ascii(text: &str) -> Result<Mesh> {
        let mut tokens = text.split_whitespace();
        let mut next = |what: &str| {
            tokens
                .next()
                .ok_or_else(|| DgError::Parse(format!("unexpected end of mesh file, expected {what}")))
        };
        let nv: usize = parse_token(next("vertex count")?)?;
        let nk: usize = parse_token(next("element count")?)?;
        let mut vertices = Vec::with_capacity(nv);
        for _ in 0..nv {
            let x: f64 = parse_token(next("x coordinate")?)?;
            let y: f64 = parse_token(next("y coordinate")?)?;
            vertices.push([x, y]);
        }
        let mut triangles = Vec::with_capacity(nk);
        for _ in 0..nk {
            let mut tri = [0usize; 3];
            for slot in tri.iter_mut() {
                let v: usize = parse_token(next("vertex index")?)?;
                if v == 0 {
                    return Err(DgError::Parse("vertex indices are 1-based".into()));
                }
                *slot = v - 1;
            }
            triangles.push(tri);
        }
        Mesh::from_cells(vertices, triangles)
    }

    pub fn write_ascii(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_ascii())?;
        Ok(())
    }

    pub fn read_ascii(path: &Path) -> Result<Mesh> {
        let text = std::fs::read_to_string(path)?;
        Mesh::parse_ascii(&text)
    }
}

fn parse_token<T: std::str::FromStr>(tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| DgError::Parse(format!("cannot parse {tok:?}")))
}

fn cross(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn min3(v: [f64; 3]) -> f64 {
    v[0].min(v[1]).min(v[2])
}

fn max3(v: [f64; 3]) -> f64 {
    v[0].max(v[1]).max(v[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangle_mesh() -> Mesh {
        // unit square split along the diagonal
        Mesh::from_cells(
            vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
            vec![[0, 1, 2], [0, 2, 3]],
        )
        .unwrap()
    }

    fn check_invariants(mesh: &Mesh, domain_area: f64) {
        for k in 0..mesh.num_elements() {
            let det = mesh.b_mat[k][0][0] * mesh.b_mat[k][1][1]
                - mesh.b_mat[k][0][1] * mesh.b_mat[k][1][0];
            assert!(det > 0.0);
            assert!((det - 2.0 * mesh.area[k]).abs() < 1e-14 * det.abs().max(1.0));
            for n in 0..3 {
                let nu = mesh.normals[k][n];
                assert!((nu[0].hypot(nu[1]) - 1.0).abs() < 1e-14);
                if let Some((kp, np)) = mesh.neighbors[k][n] {
                    let nup = mesh.normals[kp][np];
                    assert!((nu[0] + nup[0]).abs() < 1e-14 && (nu[1] + nup[1]).abs() < 1e-14);
                }
            }
            // reference vertices map exactly onto element vertices
            for (i, xhat) in [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]].iter().enumerate() {
                let x = mesh.map_to_physical(k, *xhat);
                let v = mesh.elem_vertex(k, i);
                assert_eq!(x, v);
            }
        }
        let total: f64 = mesh.area.iter().sum();
        assert!((total - domain_area).abs() < 1e-12 * domain_area);
        // interior edges appear in exactly two slots, boundary edges in one
        let mut count = vec![0usize; mesh.num_edges()];
        for k in 0..mesh.num_elements() {
            for n in 0..3 {
                count[mesh.elem_edges[k][n]] += 1;
            }
        }
        for (edge, c) in mesh.edges.iter().zip(&count) {
            assert_eq!(*c, if edge.boundary { 1 } else { 2 });
        }
        // vertex patches are symmetric
        for (v, patch) in mesh.vertex_patch.iter().enumerate() {
            for &k in patch {
                assert!(mesh.triangles[k].contains(&v));
            }
        }
        for (k, tri) in mesh.triangles.iter().enumerate() {
            for &v in tri {
                assert!(mesh.vertex_patch[v].contains(&k));
            }
        }
    }

    #[test]
    fn criss_cross_element_counts() {
        let mesh = Mesh::criss_cross(3, 3, Rect::UNIT).unwrap();
        assert_eq!(mesh.num_elements(), 36);
        check_invariants(&mesh, 1.0);

        let mesh = Mesh::criss_cross(1, 1, Rect::UNIT).unwrap();
        assert_eq!(mesh.num_elements(), 4);
        check_invariants(&mesh, 1.0);

        let mesh = Mesh::criss_cross(2, 1, Rect::new(0.0, 0.0, 2.0, 1.0)).unwrap();
        assert_eq!(mesh.num_elements(), 8);
        for k in 0..8 {
            assert!((mesh.area[k] - 0.25).abs() < 1e-14);
        }
        check_invariants(&mesh, 2.0);
    }

    #[test]
    fn criss_cross_rejects_bad_input() {
        assert!(Mesh::criss_cross(0, 3, Rect::UNIT).is_err());
        assert!(Mesh::criss_cross(2, 2, Rect::new(0.0, 0.0, 0.0, 1.0)).is_err());
    }

    #[test]
    fn refine_quadruples_and_preserves_area() {
        let mesh = Mesh::criss_cross(3, 3, Rect::UNIT).unwrap();
        let fine = mesh.refine_uniform();
        assert_eq!(fine.num_elements(), 144);
        let before: f64 = mesh.area.iter().sum();
        let after: f64 = fine.area.iter().sum();
        assert!((before - after).abs() < 1e-12);
        check_invariants(&fine, 1.0);
    }

    #[test]
    fn refine_single_triangle() {
        let mesh = Mesh::from_cells(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 1, 2]],
        )
        .unwrap();
        let fine = mesh.refine_uniform();
        assert_eq!(fine.num_elements(), 4);
        for k in 0..4 {
            assert!((fine.area[k] - mesh.area[0] / 4.0).abs() < 1e-15);
        }
    }

    #[test]
    fn refine_preserves_boundary() {
        let mesh = Mesh::criss_cross(2, 2, Rect::UNIT).unwrap();
        let fine = mesh.refine_uniform();
        for edge in &fine.edges {
            let a = fine.vertices[edge.vertices[0]];
            let b = fine.vertices[edge.vertices[1]];
            let on_boundary = |p: [f64; 2]| {
                p[0].abs() < 1e-14
                    || (p[0] - 1.0).abs() < 1e-14
                    || p[1].abs() < 1e-14
                    || (p[1] - 1.0).abs() < 1e-14
            };
            let mid = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
            assert_eq!(edge.boundary, on_boundary(a) && on_boundary(b) && on_boundary(mid));
        }
    }

    #[test]
    fn two_triangles_topology() {
        let mesh = two_triangle_mesh();
        assert_eq!(mesh.num_edges(), 5);
        let interior = mesh.edges.iter().filter(|e| !e.boundary).count();
        assert_eq!(interior, 1);
        let nonzeros: usize = mesh.adjacency.iter().map(|l| l.len()).sum();
        assert_eq!(nonzeros, 2);
        check_invariants(&mesh, 1.0);
    }

    #[test]
    fn criss_cross_vertex_patches() {
        let mesh = Mesh::criss_cross(3, 3, Rect::UNIT).unwrap();
        // centers of the squares are the last nx*ny vertices
        let center_base = mesh.num_vertices() - 9;
        for v in center_base..mesh.num_vertices() {
            assert_eq!(mesh.vertex_patch[v].len(), 4);
        }
        // interior grid vertices touch at least four elements
        for (v, p) in mesh.vertices.iter().enumerate() {
            let interior = p[0] > 1e-12 && p[0] < 1.0 - 1e-12 && p[1] > 1e-12 && p[1] < 1.0 - 1e-12;
            if interior {
                assert!(mesh.vertex_patch[v].len() >= 4, "vertex {v} at {p:?}");
            }
        }
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let mesh = Mesh::from_cells(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 2, 1]],
        )
        .unwrap();
        assert!(mesh.area[0] > 0.0);
    }

    #[test]
    fn invalid_meshes_rejected() {
        // degenerate (collinear) triangle
        let r = Mesh::from_cells(
            vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]],
            vec![[0, 1, 2]],
        );
        assert!(matches!(r, Err(DgError::InvalidMesh(_))));
        // duplicate triangle
        let r = Mesh::from_cells(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 1, 2], [0, 2, 1]],
        );
        assert!(matches!(r, Err(DgError::InvalidMesh(_))));
        // three triangles sharing one edge
        let r = Mesh::from_cells(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [0.0, -1.0], [-0.5, 0.5]],
            vec![[0, 1, 2], [0, 3, 1], [0, 1, 4]],
        );
        assert!(matches!(r, Err(DgError::InvalidMesh(_))));
    }

    #[test]
    fn shared_edge_traces_match() {
        let mesh = Mesh::criss_cross(2, 2, Rect::UNIT).unwrap();
        for k in 0..mesh.num_elements() {
            for n in 0..3 {
                if let Some((kp, np)) = mesh.neighbors[k][n] {
                    for &s in &[0.0, 0.3, 1.0] {
                        let a = mesh.edge_point(k, n, s);
                        let b = mesh.edge_point(kp, np, 1.0 - s);
                        assert!((a[0] - b[0]).abs() < 1e-14 && (a[1] - b[1]).abs() < 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn ascii_round_trip_is_bit_exact() {
        let mesh = Mesh::criss_cross(3, 2, Rect::new(0.0, 0.0, 1.0, 0.7)).unwrap();
        let text = mesh.to_ascii();
        let back = Mesh::parse_ascii(&text).unwrap();
        assert_eq!(mesh.vertices, back.vertices);
        assert_eq!(mesh.triangles, back.triangles);
        assert_eq!(text, back.to_ascii());
    }
}
