//! The Hilbert metric on a convex polygonal chart.

use alloc::vec::Vec;

use super::GeometryError;

/// Hilbert distance between two interior points of a convex polygon:
/// `½ log` of the cross-ratio `[a, y, z, b]` where `a`, `b` are the
/// boundary intersections of the line through `y` and `z`, in that
/// order along the line.
pub fn hilbert_distance(
    polygon: &[[f64; 2]],
    y: [f64; 2],
    z: [f64; 2],
) -> Result<f64, GeometryError> {
    if polygon.len() < 3 {
        return Err(GeometryError::NotConvex);
    }
    let poly = oriented_ccw(polygon)?;
    let scale = poly
        .iter()
        .fold(1.0_f64, |m, p| m.max(p[0].abs()).max(p[1].abs()));
    for &p in &[y, z] {
        if !strictly_inside(&poly, p, 1e-12 * scale) {
            return Err(GeometryError::PointOutside);
        }
    }
    let d = [z[0] - y[0], z[1] - y[1]];
    let len = libm::sqrt(d[0] * d[0] + d[1] * d[1]);
    if len <= 1e-15 * scale {
        return Ok(0.0);
    }
    // Clip the line y + s·d against every edge halfplane to get the
    // chord parameter interval [s_a, s_b] ∋ [0, 1].
    let mut s_lo = f64::NEG_INFINITY;
    let mut s_hi = f64::INFINITY;
    let k = poly.len();
    for e in 0..k {
        let p = poly[e];
        let q = poly[(e + 1) % k];
        // Inward condition for CCW polygons: cross(q−p, x−p) ≥ 0.
        let ex = q[0] - p[0];
        let ey = q[1] - p[1];
        let at_y = ex * (y[1] - p[1]) - ey * (y[0] - p[0]);
        let along = ex * d[1] - ey * d[0];
        // Constraint: at_y + s·along ≥ 0.
        if along.abs() < 1e-15 * scale {
            continue; // line parallel to this edge
        }
        let s_cross = -at_y / along;
        if along > 0.0 {
            s_lo = s_lo.max(s_cross);
        } else {
            s_hi = s_hi.min(s_cross);
        }
    }
    if !(s_lo < 0.0 && s_hi > 1.0) {
        return Err(GeometryError::PointOutside);
    }
    // Positions along the line: a = s_lo, y = 0, z = 1, b = s_hi.
    let cross_ratio = ((1.0 - s_lo) * s_hi) / ((-s_lo) * (s_hi - 1.0));
    Ok(0.5 * libm::log(cross_ratio))
}

/// Validate convexity and return a counter-clockwise copy.
fn oriented_ccw(polygon: &[[f64; 2]]) -> Result<Vec<[f64; 2]>, GeometryError> {
    let mut poly: Vec<[f64; 2]> = polygon.to_vec();
    let area2: f64 = (0..poly.len())
        .map(|i| {
            let p = poly[i];
            let q = poly[(i + 1) % poly.len()];
            p[0] * q[1] - q[0] * p[1]
        })
        .sum();
    if area2 == 0.0 {
        return Err(GeometryError::NotConvex);
    }
    if area2 < 0.0 {
        poly.reverse();
    }
    let scale = poly
        .iter()
        .fold(1.0_f64, |m, p| m.max(p[0].abs()).max(p[1].abs()));
    let k = poly.len();
    for i in 0..k {
        let a = poly[i];
        let b = poly[(i + 1) % k];
        let c = poly[(i + 2) % k];
        let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        if cross < -1e-12 * scale * scale {
            return Err(GeometryError::NotConvex);
        }
    }
    Ok(poly)
}

fn strictly_inside(poly: &[[f64; 2]], x: [f64; 2], margin: f64) -> bool {
    let k = poly.len();
    (0..k).all(|i| {
        let p = poly[i];
        let q = poly[(i + 1) % k];
        (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0]) > margin
    })
}
