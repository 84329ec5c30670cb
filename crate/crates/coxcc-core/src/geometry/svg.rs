//! SVG rendering of projective tilings.
//!
//! Every tile is the intersection of a projective simplex cone with a
//! 2-plane: the affine chart `{φ(x) = −1}` (for 3-dimensional
//! representations), further cut by a slice hyperplane `ψ(x) = 0` for
//! 4-dimensional ones. Tiles are produced as halfplane intersections in
//! the plane's `(s, t)` coordinates, so tiles crossing the chart's line
//! at infinity are clipped rather than wrapped. Output is deterministic
//! for fixed inputs (fixed float formatting, orbit order).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::orbit::Tiling;
use super::GeometryError;
use crate::linalg::{self, Mat};
use crate::reflection::ReflectionRep;
use crate::tol;

pub const MAX_RENDER_DEPTH: usize = 10;

/// Affine-chart specification.
#[derive(Clone, Debug)]
pub struct ChartSpec {
    /// Covector `φ` of the chart plane `{φ(x) = −1}`; defaults to the
    /// sum of the wall covectors `Σ α_i`.
    pub chart: Option<Vec<f64>>,
    /// Slice hyperplane `ψ(x) = 0`, required when `dim V = 4`.
    pub slice: Option<Vec<f64>>,
    /// Pixel width of the output image.
    pub width_px: u32,
}

impl Default for ChartSpec {
    fn default() -> Self {
        ChartSpec { chart: None, slice: None, width_px: 800 }
    }
}

#[derive(Clone, Debug)]
pub struct RenderReport {
    pub tiles_total: usize,
    pub tiles_drawn: usize,
    /// Tiles that met the chart's line at infinity (or both sign
    /// branches) and were clipped.
    pub tiles_clipped: usize,
    pub sigma_drawn: bool,
    pub warnings: Vec<String>,
}

type Pt = [f64; 2];

/// Render the tiling to an SVG document string.
pub fn render_svg(
    rep: &ReflectionRep,
    tiling: &Tiling,
    spec: &ChartSpec,
) -> Result<(String, RenderReport), GeometryError> {
    if tiling.depth > MAX_RENDER_DEPTH {
        return Err(GeometryError::DepthBudget { depth: tiling.depth, max: MAX_RENDER_DEPTH });
    }
    let n = rep.dim();
    let rows = match (n, &spec.slice) {
        (3, _) => {
            let phi = chart_covector(rep, spec)?;
            vec![phi]
        }
        (4, Some(psi)) => {
            if psi.len() != 4 {
                return Err(GeometryError::DegenerateChart("slice covector must have length 4"));
            }
            let phi = chart_covector(rep, spec)?;
            vec![phi, psi.clone()]
        }
        (4, None) => {
            return Err(GeometryError::UnsupportedDimension { n })
        }
        (_, _) => return Err(GeometryError::UnsupportedDimension { n }),
    };
    let plane = Plane::new(&rows, n)?;
    let mut warnings: Vec<String> = Vec::new();

    // Pass 1: the fundamental tile in a huge box fixes the provisional
    // viewport scale.
    let huge = bbox_box(-1e6, -1e6, 1e6, 1e6);
    let delta_pieces = tile_polygons(rep, &[], &plane, &huge);
    let delta_union: Vec<Pt> = delta_pieces.iter().flatten().copied().collect();
    if delta_union.is_empty() {
        return Err(GeometryError::DegenerateChart("fundamental tile misses the chart"));
    }
    let (mut lo, mut hi) = bbox(&delta_union);
    if touches_box(&delta_union, -1e6, -1e6, 1e6, 1e6) {
        warnings.push(String::from("fundamental tile is unbounded in this chart"));
    }
    let center = [(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0];
    let half = ((hi[0] - lo[0]).max(hi[1] - lo[1]) / 2.0).max(1e-6) * 25.0;
    let (bx0, by0, bx1, by1) =
        (center[0] - half, center[1] - half, center[0] + half, center[1] + half);
    let provisional = bbox_box(bx0, by0, bx1, by1);

    // Pass 2: all tiles against the provisional box.
    let mut polys: Vec<(usize, Vec<Pt>)> = Vec::new(); // (element index, polygon)
    let mut tiles_drawn = 0;
    let mut tiles_clipped = 0;
    for (idx, element) in tiling.elements.iter().enumerate() {
        let pieces = tile_polygons(rep, &element.word, &plane, &provisional);
        if pieces.is_empty() {
            continue;
        }
        let crossing = pieces.len() > 1
            || pieces.iter().any(|p| touches_box(p, bx0, by0, bx1, by1));
        if crossing {
            tiles_clipped += 1;
        }
        tiles_drawn += 1;
        for p in pieces {
            polys.push((idx, p));
        }
    }
    if tiles_clipped > 0 {
        warnings.push(format!("{tiles_clipped} tiles crossed the chart's line at infinity and were clipped"));
    }

    // The pruned tile Σ, when the vector matrix is invertible.
    let mut sigma_polys: Vec<Vec<Pt>> = Vec::new();
    let square = rep.generator_count() == n;
    if square {
        if let Some(vinv) = linalg::inverse(rep.v()) {
            for piece in &delta_pieces {
                let mut poly = piece.clone();
                for j in 0..n {
                    // t_j(x) ≥ 0 ⟺ −(V⁻¹x)_j ≤ 0, on either sign branch:
                    // track both by clipping this piece with each sign and
                    // keeping the nonempty result.
                    let row: Vec<f64> = (0..n).map(|k| -vinv[(j, k)]).collect();
                    let (c0, c1, c2) = plane.pull_back(&row);
                    let pos = clip_halfplane(&poly, c0, c1, c2);
                    poly = if pos.len() >= 3 {
                        pos
                    } else {
                        clip_halfplane(&poly, -c0, -c1, -c2)
                    };
                }
                if poly.len() >= 3 {
                    sigma_polys.push(poly);
                }
            }
        }
    }
    if sigma_polys.is_empty() && square {
        warnings.push(String::from("pruned tile missing or empty in this chart"));
    }

    // Final viewport hugs everything drawn.
    if polys.is_empty() {
        return Err(GeometryError::DegenerateChart("no tile meets the chart"));
    }
    let all_pts: Vec<Pt> = polys.iter().flat_map(|(_, p)| p.iter().copied()).collect();
    let (flo, fhi) = bbox(&all_pts);
    let margin = 0.05 * ((fhi[0] - flo[0]).max(fhi[1] - flo[1])).max(1e-6);
    (lo, hi) = ([flo[0] - margin, flo[1] - margin], [fhi[0] + margin, fhi[1] + margin]);

    let hull = convex_hull(&all_pts);

    let mut svg = String::new();
    let w = hi[0] - lo[0];
    let h = hi[1] - lo[1];
    let width_px = spec.width_px;
    let height_px = libm::round(width_px as f64 * h / w) as u32;
    let stroke = 0.002 * w.max(h);
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width_px}\" height=\"{height_px}\" viewBox=\"{} {} {} {}\">\n",
        fmt(lo[0]),
        fmt(-hi[1]),
        fmt(w),
        fmt(h)
    ));
    svg.push_str(&format!(
        "<g fill=\"#e9e9e9\" stroke=\"#606060\" stroke-width=\"{}\" stroke-linejoin=\"round\">\n",
        fmt(stroke)
    ));
    for (idx, poly) in &polys {
        svg.push_str(&format!(
            "<polygon data-word=\"{}\" points=\"{}\"/>\n",
            word_name(&tiling.elements[*idx].word),
            points_attr(poly)
        ));
    }
    svg.push_str("</g>\n");
    if !sigma_polys.is_empty() {
        svg.push_str("<g fill=\"#8c8c8c\" stroke=\"none\" fill-opacity=\"0.85\">\n");
        for poly in &sigma_polys {
            svg.push_str(&format!("<polygon points=\"{}\"/>\n", points_attr(poly)));
        }
        svg.push_str("</g>\n");
    }
    if hull.len() >= 3 {
        svg.push_str(&format!(
            "<polygon points=\"{}\" fill=\"none\" stroke=\"#303030\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>\n",
            points_attr(&hull),
            fmt(stroke),
            fmt(4.0 * stroke),
            fmt(2.0 * stroke)
        ));
    }
    svg.push_str("</svg>\n");

    let report = RenderReport {
        tiles_total: tiling.elements.len(),
        tiles_drawn,
        tiles_clipped,
        sigma_drawn: !sigma_polys.is_empty(),
        warnings,
    };
    Ok((svg, report))
}

fn chart_covector(rep: &ReflectionRep, spec: &ChartSpec) -> Result<Vec<f64>, GeometryError> {
    let n = rep.dim();
    match &spec.chart {
        Some(phi) => {
            if phi.len() != n {
                return Err(GeometryError::DegenerateChart("chart covector has wrong length"));
            }
            Ok(phi.clone())
        }
        None => {
            let mut phi = vec![0.0; n];
            for i in 0..rep.generator_count() {
                for (k, v) in rep.alpha_row(i).iter().enumerate() {
                    phi[k] += v;
                }
            }
            Ok(phi)
        }
    }
}

/// The affine 2-plane `{x | rows·x = (−1, 0, …)}` with an explicit
/// parameterization `x(s, t) = p0 + s·b1 + t·b2`.
struct Plane {
    p0: Vec<f64>,
    b1: Vec<f64>,
    b2: Vec<f64>,
}

impl Plane {
    fn new(rows: &[Vec<f64>], n: usize) -> Result<Plane, GeometryError> {
        let c = Mat::from_rows(rows);
        let basis = linalg::null_space(&c, tol::RANK);
        if basis.len() != 2 {
            return Err(GeometryError::DegenerateChart("chart/slice rows are dependent"));
        }
        // Min-norm point with C·p0 = (−1, 0, …): p0 = Cᵀ(CCᵀ)⁻¹ b.
        let ct = c.transpose();
        let gram = c.mul(&ct);
        let mut b = vec![0.0; rows.len()];
        b[0] = -1.0;
        let y = linalg::solve(&gram, &b)
            .ok_or(GeometryError::DegenerateChart("chart/slice rows are dependent"))?;
        let p0 = ct.mul_vec(&y);
        debug_assert_eq!(p0.len(), n);
        Ok(Plane { p0, b1: basis[0].clone(), b2: basis[1].clone() })
    }

    /// Restrict the covector `row` to the plane: `row(x(s,t)) = c0 + c1·s + c2·t`.
    fn pull_back(&self, row: &[f64]) -> (f64, f64, f64) {
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        (dot(row, &self.p0), dot(row, &self.b1), dot(row, &self.b2))
    }
}

/// Chart polygons of the tile `ρ(γ)·Δ` (up to two convex pieces, one per
/// sign branch of the cone).
fn tile_polygons(
    rep: &ReflectionRep,
    word: &[usize],
    plane: &Plane,
    start: &[Pt],
) -> Vec<Vec<Pt>> {
    // ρ(γ)⁻¹ is the reversed word (the generators are involutions).
    let rev: Vec<usize> = word.iter().rev().copied().collect();
    let inv = rep.word_matrix(&rev);
    let rows: Vec<(f64, f64, f64)> = (0..rep.generator_count())
        .map(|i| {
            let alpha_i = rep.alpha_row(i);
            let composed: Vec<f64> = (0..rep.dim())
                .map(|q| (0..rep.dim()).map(|p| alpha_i[p] * inv[(p, q)]).sum())
                .collect();
            plane.pull_back(&composed)
        })
        .collect();
    let mut out = Vec::new();
    for sign in [1.0, -1.0] {
        let mut poly = start.to_vec();
        for &(c0, c1, c2) in &rows {
            poly = clip_halfplane(&poly, sign * c0, sign * c1, sign * c2);
            if poly.len() < 3 {
                break;
            }
        }
        if poly.len() >= 3 && polygon_area(&poly) > 1e-12 {
            out.push(poly);
        }
    }
    out
}

/// Sutherland–Hodgman clip of a convex polygon by `c0 + c1·s + c2·t ≤ 0`.
fn clip_halfplane(poly: &[Pt], c0: f64, c1: f64, c2: f64) -> Vec<Pt> {
    let value = |p: Pt| c0 + c1 * p[0] + c2 * p[1];
    let mut out = Vec::new();
    let k = poly.len();
    for i in 0..k {
        let cur = poly[i];
        let nxt = poly[(i + 1) % k];
        let (vc, vn) = (value(cur), value(nxt));
        if vc <= 0.0 {
            out.push(cur);
        }
        if (vc <= 0.0) != (vn <= 0.0) {
            let t = vc / (vc - vn);
            out.push([cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])]);
        }
    }
    out
}

fn polygon_area(poly: &[Pt]) -> f64 {
    let k = poly.len();
    let twice: f64 = (0..k)
        .map(|i| {
            let p = poly[i];
            let q = poly[(i + 1) % k];
            p[0] * q[1] - q[0] * p[1]
        })
        .sum();
    0.5 * twice.abs()
}

fn bbox(points: &[Pt]) -> (Pt, Pt) {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for p in points {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    (lo, hi)
}

fn bbox_box(x0: f64, y0: f64, x1: f64, y1: f64) -> Vec<Pt> {
    vec![[x0, y0], [x1, y0], [x1, y1], [x0, y1]]
}

fn touches_box(points: &[Pt], x0: f64, y0: f64, x1: f64, y1: f64) -> bool {
    let eps = 1e-9 * (x1 - x0).max(y1 - y0);
    points.iter().any(|p| {
        (p[0] - x0).abs() < eps
            || (p[0] - x1).abs() < eps
            || (p[1] - y0).abs() < eps
            || (p[1] - y1).abs() < eps
    })
}

/// Andrew's monotone chain.
fn convex_hull(points: &[Pt]) -> Vec<Pt> {
    let mut pts: Vec<Pt> = points.to_vec();
    pts.sort_by(|a, b| a[0].partial_cmp(&b[0]).unwrap().then(a[1].partial_cmp(&b[1]).unwrap()));
    pts.dedup_by(|a, b| (a[0] - b[0]).abs() < 1e-12 && (a[1] - b[1]).abs() < 1e-12);
    if pts.len() < 3 {
        return pts;
    }
    let cross =
        |o: Pt, a: Pt, b: Pt| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let build = |iter: &mut dyn Iterator<Item = Pt>| -> Vec<Pt> {
        let mut chain: Vec<Pt> = Vec::new();
        for p in iter {
            while chain.len() >= 2 && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) <= 0.0
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain
    };
    let mut lower = build(&mut pts.iter().copied());
    let mut upper = build(&mut pts.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn fmt(x: f64) -> String {
    // Fixed four decimals keeps the output byte-stable across runs.
    let r = if x == 0.0 { 0.0 } else { x };
    format!("{r:.4}")
}

fn points_attr(poly: &[Pt]) -> String {
    let mut s = String::new();
    for (k, p) in poly.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        // SVG y grows downward; flip.
        s.push_str(&format!("{},{}", fmt(p[0]), fmt(-p[1])));
    }
    s
}

fn word_name(word: &[usize]) -> String {
    if word.is_empty() {
        return String::from("e");
    }
    let mut s = String::new();
    for (k, &i) in word.iter().enumerate() {
        if k > 0 {
            s.push('*');
        }
        s.push_str(&format!("s{}", i + 1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{deformed_tits_cartan, CartanMatrix};
    use crate::coxeter::{CoxLabel, CoxeterMatrix};
    use crate::geometry::orbit::orbit;
    use crate::reflection::build_rep;

    /// The right-angled-free triangle group ⟨σ1,σ2,σ3 | σᵢ², (σ1σ3)²⟩
    /// with strict ∞-products.
    fn figure_rep() -> crate::reflection::ReflectionRep {
        let w = CoxeterMatrix::from_edges(
            3,
            &[(0, 1, CoxLabel::Infinite), (1, 2, CoxLabel::Infinite)],
        )
        .unwrap();
        let a = deformed_tits_cartan(&w, &[((0, 1), 0.5), ((1, 2), 0.5)]).unwrap();
        build_rep(&a, 3).unwrap()
    }

    #[test]
    fn renders_deterministically() {
        let rep = figure_rep();
        let tiling = orbit(&rep, 4).unwrap();
        let spec = ChartSpec::default();
        let (svg1, report) = render_svg(&rep, &tiling, &spec).unwrap();
        let (svg2, _) = render_svg(&rep, &tiling, &spec).unwrap();
        assert_eq!(svg1, svg2);
        assert!(report.tiles_drawn > 0);
        assert!(svg1.starts_with("<svg"));
        assert!(svg1.contains("polygon"));
    }

    #[test]
    fn depth_zero_draws_single_tile() {
        let rep = figure_rep();
        let tiling = orbit(&rep, 0).unwrap();
        let (_, report) = render_svg(&rep, &tiling, &ChartSpec::default()).unwrap();
        assert_eq!(report.tiles_total, 1);
        assert_eq!(report.tiles_drawn, 1);
        assert!(report.sigma_drawn);
    }

    #[test]
    fn rejects_unsupported_dimension() {
        let w = crate::coxeter::catalog::affine(crate::coxeter::AffineFamily::ATilde(1));
        let a = CartanMatrix::new(
            w,
            Mat::from_rows(&[alloc::vec![2.0, -3.0], alloc::vec![-2.0, 2.0]]),
        )
        .unwrap();
        let rep = build_rep(&a, 2).unwrap();
        let tiling = orbit(&rep, 2).unwrap();
        assert!(matches!(
            render_svg(&rep, &tiling, &ChartSpec::default()),
            Err(GeometryError::UnsupportedDimension { n: 2 })
        ));
    }

    #[test]
    fn four_dimensional_needs_slice_and_works_with_one() {
        let a = crate::cartan::generic_cc_cartan(&crate::coxeter::tests::ex93()).unwrap();
        let rep = build_rep(&a, 4).unwrap();
        let tiling = orbit(&rep, 2).unwrap();
        assert!(matches!(
            render_svg(&rep, &tiling, &ChartSpec::default()),
            Err(GeometryError::UnsupportedDimension { n: 4 })
        ));
        let spec = ChartSpec {
            slice: Some(alloc::vec![0.1, -0.3, 0.2, 0.05]),
            ..ChartSpec::default()
        };
        let (svg, report) = render_svg(&rep, &tiling, &spec).unwrap();
        assert!(report.tiles_drawn > 0, "slice missed every tile");
        assert!(svg.contains("polygon"));
    }

    #[test]
    fn rendered_tiles_have_disjoint_interiors() {
        // Parse the tile polygons back out of the SVG text and check
        // that no tile's centroid lands inside any other tile.
        let rep = figure_rep();
        let tiling = orbit(&rep, 5).unwrap();
        let (svg, _) = render_svg(&rep, &tiling, &ChartSpec::default()).unwrap();
        let mut polys: alloc::vec::Vec<alloc::vec::Vec<Pt>> = alloc::vec::Vec::new();
        for line in svg.lines() {
            if !line.starts_with("<polygon data-word=") {
                continue;
            }
            let start = line.find("points=\"").unwrap() + 8;
            let end = line[start..].find('"').unwrap() + start;
            let pts: alloc::vec::Vec<Pt> = line[start..end]
                .split(' ')
                .map(|pair| {
                    let (a, b) = pair.split_once(',').unwrap();
                    [a.parse::<f64>().unwrap(), b.parse::<f64>().unwrap()]
                })
                .collect();
            polys.push(pts);
        }
        assert_eq!(polys.len(), tiling.elements.len());
        let centroid = |p: &[Pt]| -> Pt {
            let k = p.len() as f64;
            [p.iter().map(|q| q[0]).sum::<f64>() / k, p.iter().map(|q| q[1]).sum::<f64>() / k]
        };
        let inside = |poly: &[Pt], x: Pt| -> bool {
            // Convex polygon with consistent orientation: same-side test.
            let k = poly.len();
            let mut sign = 0.0_f64;
            for i in 0..k {
                let p = poly[i];
                let q = poly[(i + 1) % k];
                let c = (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0]);
                if c.abs() < 1e-9 {
                    return false; // on an edge: not interior
                }
                if sign == 0.0 {
                    sign = c.signum();
                } else if c.signum() != sign {
                    return false;
                }
            }
            true
        };
        for (i, a) in polys.iter().enumerate() {
            let c = centroid(a);
            assert!(inside(a, c), "centroid of tile {i} not interior to itself");
            for (j, b) in polys.iter().enumerate() {
                if i != j {
                    assert!(!inside(b, c), "tile {i} centroid inside tile {j}");
                }
            }
        }
    }

    #[test]
    fn hull_is_convex_and_contains_inputs() {
        let pts: Vec<Pt> = alloc::vec![
            [0.0, 0.0],
            [1.0, 0.0],
            [1.0, 1.0],
            [0.0, 1.0],
            [0.5, 0.5],
            [0.2, 0.8],
        ];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 4);
    }
}
