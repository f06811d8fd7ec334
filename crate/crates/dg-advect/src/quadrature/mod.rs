//! Quadrature rules on the reference triangle and the unit interval, and
//! the reference-edge parameterizations used by the edge assembly.
//!
//! All element integrals are transformed to the reference triangle
//! `T_hat = {(0,0), (1,0), (0,1)}` and approximated by rules with positive
//! weights and points strictly inside `T_hat`; edge integrals use
//! Gauss-Legendre rules on `(0,1)`.

mod tables;

use crate::error::{DgError, Result};

/// Quadrature rule on the reference triangle.
///
/// A rule of order `s` integrates every polynomial of total degree `<= s`
/// exactly. Weights sum to the reference area 1/2.
#[derive(Debug, Clone)]
pub struct QuadRule2D {
    pub order: usize,
    pub points: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
}

/// Gauss-Legendre rule on the unit interval `(0,1)`.
///
/// Points are stored in increasing order and are symmetrized on
/// construction (`points[n-1-r] = 1.0 - points[r]` for the lower half),
/// so the matching quadrature point on the far side of a shared edge is
/// the mirrored table slot.
#[derive(Debug, Clone)]
pub struct QuadRule1D {
    pub order: usize,
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
}

pub const MAX_ORDER_2D: usize = 9;
pub const MAX_ORDER_1D: usize = 11;

/// Triangle rule of the requested order (1..=9).
pub fn quad_rule_2d(order: usize) -> Result<QuadRule2D> {
    if order == 0 || order > MAX_ORDER_2D {
        return Err(DgError::InvalidArgument(format!(
            "unsupported 2d quadrature order {order} (supported: 1..={MAX_ORDER_2D})"
        )));
    }
    let (points, weights) = tables::TRIANGLE_RULES[order - 1];
    Ok(QuadRule2D {
        order,
        points: points.to_vec(),
        weights: weights.to_vec(),
    })
}

/// Gauss rule on `(0,1)` of at least the requested order (1..=11).
pub fn quad_rule_1d(order: usize) -> Result<QuadRule1D> {
    if order == 0 || order > MAX_ORDER_1D {
        return Err(DgError::InvalidArgument(format!(
            "unsupported 1d quadrature order {order} (supported: 1..={MAX_ORDER_1D})"
        )));
    }
    let npts = order / 2 + 1;
    let (points, weights) = tables::GAUSS_RULES[npts - 1];
    let mut points = points.to_vec();
    let mut weights = weights.to_vec();
    // enforce bitwise symmetry of the tabulated decimals
    let n = points.len();
    for r in 0..n / 2 {
        points[n - 1 - r] = 1.0 - points[r];
        weights[n - 1 - r] = weights[r];
    }
    Ok(QuadRule1D {
        order: 2 * npts - 1,
        points,
        weights,
    })
}

/// Parameterization of the reference-triangle edge `n` (0-based; edge `n`
/// is opposite vertex `n`). Traverses the edge counter-clockwise:
/// edge 0 runs from (1,0) to (0,1), edge 1 from (0,1) to (0,0),
/// edge 2 from (0,0) to (1,0).
pub fn gamma_map(n: usize, s: f64) -> [f64; 2] {
    match n {
        0 => [1.0 - s, s],
        1 => [0.0, 1.0 - s],
        2 => [s, 0.0],
        _ => panic!("local edge index out of range: {n}"),
    }
}

/// Parameter of a point on reference edge `n` (inverse of [`gamma_map`]).
pub fn edge_param(n: usize, xhat: [f64; 2]) -> f64 {
    match n {
        0 => xhat[1],
        1 => 1.0 - xhat[1],
        2 => xhat[0],
        _ => panic!("local edge index out of range: {n}"),
    }
}

/// Map a point on reference edge `n_minus` to the point on reference edge
/// `n_plus` that represents the same physical location when two
/// counter-clockwise elements share the edge. Adjacent elements traverse a
/// shared edge in opposite directions, so parameter `s` maps to `1 - s`.
pub fn theta_map(n_minus: usize, n_plus: usize, xhat: [f64; 2]) -> [f64; 2] {
    gamma_map(n_plus, 1.0 - edge_param(n_minus, xhat))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }

    /// Exact integral of x^a y^b over the reference triangle.
    fn monomial_moment(a: usize, b: usize) -> f64 {
        factorial(a) * factorial(b) / factorial(a + b + 2)
    }

    #[test]
    fn order_one_is_centroid_rule() {
        let rule = quad_rule_2d(1).unwrap();
        assert_eq!(rule.points.len(), 1);
        assert!((rule.points[0][0] - 1.0 / 3.0).abs() < 1e-15);
        assert!((rule.points[0][1] - 1.0 / 3.0).abs() < 1e-15);
        assert!((rule.weights[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn triangle_rules_exact_for_all_monomials() {
        for order in 1..=MAX_ORDER_2D {
            let rule = quad_rule_2d(order).unwrap();
            let wsum: f64 = rule.weights.iter().sum();
            assert!((wsum - 0.5).abs() < 1e-14, "order {order}: weight sum {wsum}");
            for (p, w) in rule.points.iter().zip(&rule.weights) {
                assert!(*w > 0.0);
                assert!(p[0] > 0.0 && p[1] > 0.0 && p[0] + p[1] < 1.0, "point on boundary");
            }
            for a in 0..=order {
                for b in 0..=(order - a) {
                    let approx: f64 = rule
                        .points
                        .iter()
                        .zip(&rule.weights)
                        .map(|(p, w)| w * p[0].powi(a as i32) * p[1].powi(b as i32))
                        .sum();
                    let exact = monomial_moment(a, b);
                    assert!(
                        (approx - exact).abs() < 1e-13,
                        "order {order}, x^{a} y^{b}: {approx} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn specific_triangle_moments() {
        // int x*y = 1!1!/4! = 1/24 with the order-2 rule
        let rule = quad_rule_2d(2).unwrap();
        let xy: f64 = rule
            .points
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0] * p[1])
            .sum();
        assert!((xy - 1.0 / 24.0).abs() < 1e-15);
        // int x^4 = 4!/6! = 1/30 with the order-4 rule
        let rule = quad_rule_2d(4).unwrap();
        let x4: f64 = rule
            .points
            .iter()
            .zip(&rule.weights)
            .map(|(p, w)| w * p[0].powi(4))
            .sum();
        assert!((x4 - 1.0 / 30.0).abs() < 1e-15);
    }

    #[test]
    fn gauss_rules_exact_on_unit_interval() {
        for order in 1..=MAX_ORDER_1D {
            let rule = quad_rule_1d(order).unwrap();
            assert!(rule.order >= order);
            for deg in 0..=rule.order {
                let approx: f64 = rule
                    .points
                    .iter()
                    .zip(&rule.weights)
                    .map(|(x, w)| w * x.powi(deg as i32))
                    .sum();
                let exact = 1.0 / (deg as f64 + 1.0);
                assert!(
                    (approx - exact).abs() < 1e-13,
                    "order {order}, s^{deg}: {approx} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn gauss_rule_order_one_is_midpoint() {
        let rule = quad_rule_1d(1).unwrap();
        assert_eq!(rule.points, vec![0.5]);
        assert_eq!(rule.weights, vec![1.0]);
    }

    #[test]
    fn gauss_points_bitwise_symmetric() {
        for order in 1..=MAX_ORDER_1D {
            let rule = quad_rule_1d(order).unwrap();
            let n = rule.points.len();
            for r in 0..n / 2 {
                assert_eq!(rule.points[n - 1 - r], 1.0 - rule.points[r]);
                assert_eq!(rule.weights[n - 1 - r], rule.weights[r]);
            }
            if n % 2 == 1 {
                assert_eq!(rule.points[n / 2], 0.5);
            }
        }
    }

    #[test]
    fn specific_gauss_integrals() {
        // int_0^1 s^3 ds = 1/4 with an order-3 rule
        let rule = quad_rule_1d(3).unwrap();
        let v: f64 = rule
            .points
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * x.powi(3))
            .sum();
        assert!((v - 0.25).abs() < 1e-15);
        // int_0^1 s^5 ds = 1/6 with an order-5 rule
        let rule = quad_rule_1d(5).unwrap();
        let v: f64 = rule
            .points
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * x.powi(5))
            .sum();
        assert!((v - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn gamma_map_endpoints() {
        assert_eq!(gamma_map(0, 0.0), [1.0, 0.0]);
        assert_eq!(gamma_map(1, 1.0), [0.0, 0.0]);
        assert_eq!(gamma_map(2, 0.5), [0.5, 0.0]);
    }

    #[test]
    fn theta_map_round_trip_is_identity() {
        for n_minus in 0..3 {
            for n_plus in 0..3 {
                for &s in &[0.0, 0.3, 0.7, 1.0] {
                    let x = gamma_map(n_minus, s);
                    let y = theta_map(n_plus, n_minus, theta_map(n_minus, n_plus, x));
                    assert!((y[0] - x[0]).abs() < 1e-14 && (y[1] - x[1]).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn unsupported_orders_rejected() {
        assert!(quad_rule_2d(0).is_err());
        assert!(quad_rule_2d(10).is_err());
        assert!(quad_rule_1d(12).is_err());
    }
}
