//! Log-log convergence plot.

use std::fmt::Write as _;

use ptpartner::Error;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 64.0;

fn fmt(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

/// SVG of `log10 error` against `log10 h` with one polyline and the
/// least-squares slope written in the corner. Points with a non-positive
/// step or error cannot be drawn and are skipped.
pub fn emit_svg_convergence(points: &[(f64, f64)]) -> Result<String, Error> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(h, e)| *h > 0.0 && *e > 0.0 && h.is_finite() && e.is_finite())
        .map(|(h, e)| (h.log10(), e.log10()))
        .collect();
    if pts.len() < 2 {
        return Err(Error::TooFewPoints(pts.len()));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;

    let bounds = |f: fn(&(f64, f64)) -> f64| {
        let lo = pts.iter().map(f).fold(f64::INFINITY, f64::min);
        let hi = pts.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
        if hi - lo < 1e-12 {
            (lo - 0.5, hi + 0.5)
        } else {
            (lo, hi)
        }
    };
    let (x0, x1) = bounds(|p| p.0);
    let (y0, y1) = bounds(|p| p.1);
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = WIDTH,
        h = HEIGHT
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{l} {t} L{l} {b} L{r} {b}" fill="none" stroke="black"/>"#,
        l = fmt(MARGIN),
        t = fmt(MARGIN),
        b = fmt(HEIGHT - MARGIN),
        r = fmt(WIDTH - MARGIN)
    );
    let line: Vec<String> = pts
        .iter()
        .map(|&(x, y)| format!("{},{}", fmt(sx(x)), fmt(sy(y))))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
        line.join(" ")
    );
    for &(x, y) in &pts {
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="3" fill="steelblue"/>"#,
            fmt(sx(x)),
            fmt(sy(y))
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="14">log10 h</text>"#,
        fmt(WIDTH / 2.0),
        fmt(HEIGHT - 20.0)
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{y}" text-anchor="middle" font-family="sans-serif" font-size="14" transform="rotate(-90 20 {y})">log10 |error|</text>"#,
        y = fmt(HEIGHT / 2.0)
    );
    for (v, anchor, px, py) in [
        (x0, "start", sx(x0), HEIGHT - MARGIN + 18.0),
        (x1, "end", sx(x1), HEIGHT - MARGIN + 18.0),
    ] {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="{anchor}" font-family="sans-serif" font-size="11">{}</text>"#,
            fmt(px),
            fmt(py),
            fmt(v)
        );
    }
    for (v, py) in [(y0, sy(y0)), (y1, sy(y1))] {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end" font-family="sans-serif" font-size="11">{}</text>"#,
            fmt(MARGIN - 6.0),
            fmt(py + 4.0),
            fmt(v)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="end" font-family="sans-serif" font-size="14">slope = {}</text>"#,
        fmt(WIDTH - MARGIN),
        fmt(MARGIN - 16.0),
        fmt(slope)
    );
    s.push_str("</svg>\n");
    Ok(s)
}
