//! Regenerates the stand-in benchmark fixtures under `fixtures/`.
//!
//! Each closed shape is rasterized from an analytic description and its
//! boundary traced; the raster scale is the first one (on a 0.005 grid) whose
//! boundary has the requested point count. The figure-eight is digitized
//! directly from its parametric form because it crosses itself.
//!
//! ```text
//! cargo run -p polyapprox --example make_fixtures -- fixtures
//! ```

use std::f64::consts::PI;
use std::fs;
use std::path::Path;

use polyapprox::ingest::{serialize_curve, trace_contour, BinaryImage};
use polyapprox::{build_curve, DigitalCurve, Point};

/// Inside-test in shape units, with y up.
type Shape = fn(f64, f64) -> bool;

fn raster(shape: Shape, bounds: [f64; 4], scale: f64) -> BinaryImage {
    let [x0, y0, x1, y1] = bounds;
    let w = ((x1 - x0) * scale).ceil() as usize + 5;
    let h = ((y1 - y0) * scale).ceil() as usize + 5;
    BinaryImage::from_fn(w, h, |col, row| {
        let x = x0 + (col as f64 - 2.0) / scale;
        let y = y1 - (row as f64 - 2.0) / scale;
        shape(x, y)
    })
}

fn traced(
    shape: Shape,
    bounds: [f64; 4],
    target: usize,
    scales: (f64, f64),
) -> (f64, DigitalCurve, BinaryImage) {
    let mut best: Option<(usize, f64, DigitalCurve, BinaryImage)> = None;
    let mut s = scales.0;
    while s <= scales.1 {
        let img = raster(shape, bounds, s);
        if let Ok(c) = trace_contour(&img) {
            let miss = c.len().abs_diff(target);
            if best.as_ref().map_or(true, |b| miss < b.0) {
                best = Some((miss, s, c, img));
                if miss == 0 {
                    break;
                }
            }
        }
        s += 0.005;
    }
    let (_, s, c, img) = best.expect("no scale produced a contour");
    (s, c, img)
}

fn chromosome(x: f64, y: f64) -> bool {
    // bent capsule with a waist at the middle
    (0..=400).any(|k| {
        let u = -1.0 + 2.0 * k as f64 / 400.0;
        let (cx, cy) = (u, 0.35 * u * u);
        let w = 0.22 * (1.0 - 0.4 * (-(u / 0.2).powi(2)).exp());
        (x - cx).hypot(y - cy) <= w
    })
}

fn leaf(x: f64, y: f64) -> bool {
    // serrated ellipse, pointed toward +x
    let theta = y.atan2(x);
    let (a, b) = (1.0, 0.5);
    let base = a * b / ((b * theta.cos()).powi(2) + (a * theta.sin()).powi(2)).sqrt();
    let tip = 1.0 + 0.25 * (theta.cos().max(0.0)).powi(8);
    let r = base * tip * (1.0 + 0.06 * (9.0 * theta).sin());
    x.hypot(y) <= r
}

fn semicircles(x: f64, y: f64) -> bool {
    // flat base, two round bumps on top, a round notch in the base
    let slab = (0.0..=4.0).contains(&x) && (0.0..=1.0).contains(&y);
    let bump = |cx: f64, r: f64| y >= 1.0 && (x - cx).hypot(y - 1.0) <= r;
    let notch = (x - 2.0).hypot(y) < 0.55;
    (slab || bump(1.0, 0.95) || bump(3.0, 0.95)) && !notch
}

fn bell(x: f64, y: f64) -> bool {
    // body for y in [0, 1]: narrow shoulder flaring to a lip
    let body = (0.0..=1.0).contains(&y) && {
        let t = 1.0 - y;
        let half = 0.22 + 0.28 * t.powi(3) + 0.06 * t;
        x.abs() <= half
    };
    let dome = (x.hypot(y - 1.0)) <= 0.24;
    let knob = (x.hypot(y - 1.3)) <= 0.08 || (x.abs() <= 0.03 && (1.2..=1.3).contains(&y));
    let lip = (-0.06..=0.0).contains(&y) && x.abs() <= 0.62;
    // detached clapper below the lip, removed by largest-component selection
    let clapper = x.hypot(y + 0.2) <= 0.07;
    body || dome || knob || lip || clapper
}

fn lemniscate(target: usize) -> (f64, DigitalCurve) {
    let digitize = |s: f64| -> Option<DigitalCurve> {
        let samples = 20_000;
        let mut pts: Vec<(i64, i64)> = Vec::new();
        for k in 0..samples {
            let t = 2.0 * PI * k as f64 / samples as f64;
            let d = 1.0 + t.sin().powi(2);
            // lopsided lobes and a sub-pixel offset break the symmetry that
            // would otherwise force even point counts
            let x = s * t.cos() / d * (1.0 + 0.15 * t.cos()) + 0.31;
            let y = s * t.sin() * t.cos() / d + 0.17;
            let p = (x.round() as i64, y.round() as i64);
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        // drop corner points whose neighbours are already 8-adjacent
        loop {
            let n = pts.len();
            let cut = (0..n).find(|&i| {
                let (a, b) = (pts[(i + n - 1) % n], pts[(i + 1) % n]);
                a != b && (a.0 - b.0).abs() <= 1 && (a.1 - b.1).abs() <= 1
            });
            match cut {
                Some(i) => {
                    pts.remove(i);
                }
                None => break,
            }
        }
        let pts: Vec<Point> = pts
            .iter()
            .map(|&(x, y)| Point::new(x as f64, y as f64))
            .collect();
        build_curve(&pts, true).ok()
    };
    let mut s = 5.0;
    while s < 40.0 {
        if let Some(c) = digitize(s) {
            if c.len() == target {
                return (s, c);
            }
        }
        s += 0.005;
    }
    panic!("no lemniscate scale gives {target} points");
}

fn write(path: &Path, body: &str) {
    fs::write(path, body).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    println!("wrote {}", path.display());
}

fn with_header(comment: &str, curve: &DigitalCurve) -> String {
    format!("# {comment}\n{}", serialize_curve(curve))
}

fn main() {
    let root = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    let root = Path::new(&root);
    let synthetic = root.join("synthetic");
    let basic = root.join("basic");
    let mpeg = root.join("mpeg");
    for d in [&synthetic, &basic, &mpeg] {
        fs::create_dir_all(d).unwrap();
    }

    let jobs: [(&str, Shape, [f64; 4], usize); 3] = [
        ("chromosome", chromosome, [-1.3, -0.3, 1.3, 0.7], 60),
        ("leaf", leaf, [-1.1, -0.6, 1.4, 0.6], 120),
        ("semicircle", semicircles, [-0.1, -0.1, 4.1, 2.1], 102),
    ];
    for (name, shape, bounds, n) in jobs {
        let (s, c, _) = traced(shape, bounds, n, (2.0, 60.0));
        assert_eq!(
            c.len(),
            n,
            "{name}: closest boundary has {} points",
            c.len()
        );
        let note = format!(
            "stand-in {name} contour, n = {}, raster scale {s:.3}",
            c.len()
        );
        write(
            &synthetic.join(format!("{name}.txt")),
            &with_header(&note, &c),
        );
    }

    let (s, c) = lemniscate(45);
    let note = format!(
        "stand-in infinity (lemniscate) curve, n = {}, scale {s:.3}",
        c.len()
    );
    write(&synthetic.join("infinity.txt"), &with_header(&note, &c));

    let (s, c, img) = traced(bell, [-0.7, -0.35, 0.7, 1.45], 407, (20.0, 200.0));
    println!("bell-7 stand-in: scale {s:.3}, traced n = {}", c.len());
    write(&mpeg.join("bell-7.pbm"), &img.to_pbm());

    let square = build_curve(
        &[
            (0.0, 0.0),
            (1.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (2.0, 2.0),
            (1.0, 2.0),
            (0.0, 2.0),
            (0.0, 1.0),
        ],
        true,
    )
    .unwrap();
    write(
        &basic.join("square.txt"),
        &with_header("side-2 square ring", &square),
    );

    let codes = [0usize, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7];
    let mut pts = vec![Point::new(0.0, 0.0)];
    for &c in &codes[..15] {
        let (dx, dy) = polyapprox::curve::FREEMAN_DELTAS[c];
        let last = *pts.last().unwrap();
        pts.push(Point::new(last.x + dx as f64, last.y + dy as f64));
    }
    let octagon = build_curve(&pts, true).unwrap();
    write(
        &basic.join("octagon.txt"),
        &with_header("16-point digital octagon, two steps per edge", &octagon),
    );
}
