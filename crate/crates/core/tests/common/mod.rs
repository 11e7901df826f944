#![allow(dead_code)]

use std::path::PathBuf;

use polyapprox::curve::FREEMAN_DELTAS;
use polyapprox::ingest::{load_curve_file, trace_contour, BinaryImage};
use polyapprox::{build_curve, segmentation, DigitalCurve, Point};
use rand::Rng;

/// Point-to-segment distance by clamping the projection parameter.
pub fn clamped_distance(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len_sq = dx * dx + dy * dy;
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len_sq).clamp(0.0, 1.0);
    let (qx, qy) = (a.x + t * dx, a.y + t * dy);
    (p.x - qx).hypot(p.y - qy)
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(rel: &str) -> DigitalCurve {
    let path = fixtures_dir().join(rel);
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if rel.ends_with(".pbm") {
        trace_contour(&polyapprox::ingest::parse_pnm(&bytes).unwrap()).unwrap()
    } else {
        load_curve_file(&bytes).unwrap()
    }
}

/// All integer-grid fixtures with a representative vertex count.
pub fn grid_fixtures() -> Vec<(&'static str, DigitalCurve, usize)> {
    vec![
        ("square", fixture("basic/square.txt"), 4),
        ("octagon", fixture("basic/octagon.txt"), 4),
        ("chromosome", fixture("synthetic/chromosome.txt"), 15),
        ("leaf", fixture("synthetic/leaf.txt"), 21),
        ("semicircle", fixture("synthetic/semicircle.txt"), 14),
        ("infinity", fixture("synthetic/infinity.txt"), 10),
        ("bell-7", fixture("mpeg/bell-7.pbm"), 20),
    ]
}

/// Walk a Freeman code sequence from the origin.
pub fn from_codes(codes: &[usize]) -> DigitalCurve {
    let mut pts = vec![Point::new(0.0, 0.0)];
    for &c in &codes[..codes.len() - 1] {
        let (dx, dy) = FREEMAN_DELTAS[c];
        let last = *pts.last().unwrap();
        pts.push(Point::new(last.x + dx as f64, last.y + dy as f64));
    }
    build_curve(&pts, true).unwrap()
}

/// 16-point digital octagon, two unit steps per edge.
pub fn octagon() -> DigitalCurve {
    from_codes(&[0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7])
}

/// Radius-5 quarter circle from (5,0) to (0,5), closed through the origin
/// along both axes. The arc occupies indices 0..=7.
pub fn quarter_circle() -> DigitalCurve {
    let arc = [
        (5, 0),
        (5, 1),
        (5, 2),
        (4, 3),
        (3, 4),
        (2, 5),
        (1, 5),
        (0, 5),
    ];
    let mut pts: Vec<(f64, f64)> = arc.iter().map(|&(x, y)| (x as f64, y as f64)).collect();
    for y in (0..5).rev() {
        pts.push((0.0, y as f64));
    }
    for x in 1..5 {
        pts.push((x as f64, 0.0));
    }
    build_curve(&pts, true).unwrap()
}

/// Radius-5 digital circle made of four copies of the quarter arc.
pub fn circle_of_quarter_arcs() -> DigitalCurve {
    let arc = [(5, 0), (5, 1), (5, 2), (4, 3), (3, 4), (2, 5), (1, 5)];
    let mut pts = Vec::new();
    for q in 0..4 {
        for &(x, y) in &arc {
            let (x, y) = match q {
                0 => (x, y),
                1 => (-y, x),
                2 => (-x, -y),
                _ => (y, -x),
            };
            pts.push((x as f64, y as f64));
        }
    }
    build_curve(&pts, true).unwrap()
}

pub fn random_blob<R: Rng>(rng: &mut R, w: usize, h: usize, density: f64) -> BinaryImage {
    BinaryImage::from_fn(w, h, |_, _| rng.gen_bool(density))
}

/// A traced random blob with at most `max_n` points and at least four break
/// points.
pub fn random_grid_curve<R: Rng>(rng: &mut R, max_n: usize) -> DigitalCurve {
    loop {
        let w = rng.gen_range(3..8);
        let h = rng.gen_range(3..8);
        let density = rng.gen_range(0.45..0.85);
        let img = random_blob(rng, w, h, density);
        let Ok(c) = trace_contour(&img) else { continue };
        if c.len() > max_n {
            continue;
        }
        match segmentation::initial_dominant_points(&c) {
            Ok(s) if s.dp_indices.len() >= 4 => return c,
            _ => continue,
        }
    }
}
