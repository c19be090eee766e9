//! Self-contained SVG emitters: a pseudo-observation scatter and a density
//! heatmap, both on a fixed 800x800 viewbox with no external references.

use std::fmt::Write;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 70.0;

fn to_px(u: f64) -> f64 {
    MARGIN + u * (SIZE - 2.0 * MARGIN)
}

fn to_py(v: f64) -> f64 {
    SIZE - MARGIN - v * (SIZE - 2.0 * MARGIN)
}

fn frame(svg: &mut String, title: &str) {
    let _ = write!(
        svg,
        r#"<rect x="0" y="0" width="800" height="800" fill="white"/>"#
    );
    let _ = write!(
        svg,
        r#"<text x="400" y="36" font-family="sans-serif" font-size="20" text-anchor="middle">{}</text>"#,
        xml_escape(title)
    );
    let (x0, x1) = (to_px(0.0), to_px(1.0));
    let (y0, y1) = (to_py(0.0), to_py(1.0));
    let _ = write!(
        svg,
        r#"<rect x="{x0:.2}" y="{y1:.2}" width="{w:.2}" height="{h:.2}" fill="none" stroke="black" stroke-width="1"/>"#,
        w = x1 - x0,
        h = y0 - y1
    );
    for t in [0.0, 0.5, 1.0] {
        let _ = write!(
            svg,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">{t}</text>"#,
            x = to_px(t),
            y = y0 + 24.0
        );
        let _ = write!(
            svg,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="14" text-anchor="end">{t}</text>"#,
            x = x0 - 10.0,
            y = to_py(t) + 5.0
        );
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn scatter_svg(points: &[(f64, f64)], title: &str) -> String {
    let mut svg = String::with_capacity(256 + 64 * points.len());
    svg.push_str(r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    svg.push('\n');
    svg.push_str(r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 800 800">"#);
    frame(&mut svg, title);
    for &(u, v) in points {
        let _ = write!(
            svg,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="2.2" fill="#1f6feb" fill-opacity="0.5"/>"##,
            x = to_px(u),
            y = to_py(v)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Piecewise-linear blue/white/red map centered on the midpoint of the range.
fn heat_color(t: f64) -> (u8, u8, u8) {
    let t = t.clamp(0.0, 1.0);
    let lerp = |a: f64, b: f64, s: f64| (a + (b - a) * s).round() as u8;
    if t < 0.5 {
        let s = t / 0.5;
        (lerp(33.0, 247.0, s), lerp(102.0, 247.0, s), lerp(172.0, 247.0, s))
    } else {
        let s = (t - 0.5) / 0.5;
        (lerp(247.0, 178.0, s), lerp(247.0, 24.0, s), lerp(247.0, 43.0, s))
    }
}

/// `grid[i][j]` holds the value at the lattice point with the i-th first
/// coordinate and the j-th second coordinate; rendered with the first axis
/// horizontal.
pub fn heatmap_svg(grid: &[Vec<f64>], title: &str) -> String {
    let res = grid.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for row in grid {
        for &v in row {
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    let span = (hi - lo).max(1e-300);
    let mut svg = String::with_capacity(256 + 48 * res * res);
    svg.push_str(r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    svg.push('\n');
    svg.push_str(r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 800 800">"#);
    frame(&mut svg, title);
    let cell = (SIZE - 2.0 * MARGIN) / res as f64;
    for (i, row) in grid.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let (r, g, b) = heat_color((v - lo) / span);
            let x = MARGIN + i as f64 * cell;
            let y = SIZE - MARGIN - (j as f64 + 1.0) * cell;
            let _ = write!(
                svg,
                r#"<rect x="{x:.2}" y="{y:.2}" width="{w:.3}" height="{w:.3}" fill="rgb({r},{g},{b})"/>"#,
                w = cell + 0.05
            );
        }
    }
    let _ = write!(
        svg,
        r#"<text x="730" y="786" font-family="sans-serif" font-size="13" text-anchor="end">range [{lo:.4}, {hi:.4}]</text>"#
    );
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_balanced(svg: &str) {
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains(r#"viewBox="0 0 800 800""#));
        // no external resources
        assert!(!svg.contains("http://") || svg.matches("http://").count() == 1); // the xmlns only
        assert!(!svg.contains("href"));
        // every element is self-closing except svg itself
        let opens = svg.matches('<').count();
        let closes = svg.matches('>').count();
        assert_eq!(opens, closes);
    }

    #[test]
    fn scatter_is_well_formed() {
        let pts = vec![(0.1, 0.9), (0.5, 0.5), (0.99, 0.01)];
        let svg = scatter_svg(&pts, "pseudo-observations");
        assert_balanced(&svg);
        assert_eq!(svg.matches("<circle").count(), 3);
    }

    #[test]
    fn heatmap_is_well_formed_and_deterministic() {
        let grid = vec![vec![1.0, 2.0], vec![0.5, 1.5]];
        let a = heatmap_svg(&grid, "density");
        let b = heatmap_svg(&grid, "density");
        assert_balanced(&a);
        assert_eq!(a, b);
        assert_eq!(a.matches("<rect").count(), 2 + 4); // background + frame + cells
    }
}
