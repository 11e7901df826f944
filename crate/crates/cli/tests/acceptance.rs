//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs as a plain binary (`harness = false`).

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use polyapprox::ingest::{load_curve_file, parse_pnm, rotate_curve, trace_contour, BinaryImage};
use polyapprox::segmentation::{segment, DEFAULT_BREAK_TOLERANCE};
use polyapprox::{
    break_points_real, build_curve, eliminate_to_count, initial_dominant_points, metrics_report,
    point_contribution, rdp_to_count, significance, DigitalCurve, DominantPointSet, MetricsReport,
    Point,
};
use polyapprox_cli::args::Table;
use polyapprox_cli::commands::{bench, bench_csv};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CHROMOSOME_ISE: f64 = 4.87;
const CHROMOSOME_TOL: f64 = 0.15;
const CHROMOSOME_RUNTIME: Duration = Duration::from_secs(1);
/// (fixture, m, reference ISE, relative tolerance)
const TABLE_ROWS: [(&str, usize, f64, f64); 4] = [
    ("chromosome", 6, 45.49, 0.20),
    ("leaf", 21, 13.25, 0.15),
    ("semicircle", 14, 17.73, 0.15),
    ("infinity", 10, 4.44, 0.15),
];
/// Fallback: proposed ISE may exceed the RDP ISE at the same m by at most this factor.
const BASELINE_SLACK: f64 = 1.10;
const ROTATION_COMPACTNESS_TOL: f64 = 0.35;
const ORACLE_TOL: f64 = 1e-9;
const IDENTITY_TOL: f64 = 1e-12;
const SUITE_RUNTIME: Duration = Duration::from_secs(10);

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn load(rel: &str) -> DigitalCurve {
    let path = fixtures().join(rel);
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if rel.ends_with(".pbm") {
        trace_contour(&parse_pnm(&bytes).unwrap()).unwrap()
    } else {
        load_curve_file(&bytes).unwrap()
    }
}

fn grid_fixtures() -> Vec<(&'static str, DigitalCurve, usize)> {
    vec![
        ("square", load("basic/square.txt"), 4),
        ("octagon", load("basic/octagon.txt"), 4),
        ("chromosome", load("synthetic/chromosome.txt"), 15),
        ("leaf", load("synthetic/leaf.txt"), 21),
        ("semicircle", load("synthetic/semicircle.txt"), 14),
        ("infinity", load("synthetic/infinity.txt"), 10),
        ("bell-7", load("mpeg/bell-7.pbm"), 20),
    ]
}

fn approx_at(curve: &DigitalCurve, m: usize) -> MetricsReport {
    metrics_report(curve, &eliminate_to_count(curve, m).unwrap().final_set)
}

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

/// Definitional consistency of the derived ratios.
fn identities_hold(r: &MetricsReport) -> bool {
    let cr_ok = rel_err(r.cr, r.n as f64 / r.m as f64) <= IDENTITY_TOL;
    let we2_ok = (r.we2 * r.cr - r.we).abs() <= IDENTITY_TOL * r.we.abs().max(f64::MIN_POSITIVE);
    let fom_ok = if r.ise == 0.0 {
        r.fom == f64::INFINITY
    } else {
        (r.fom * r.we - 1.0).abs() <= IDENTITY_TOL
    };
    cr_ok && we2_ok && fom_ok
}

type Outcome = (bool, String);

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let c = load("synthetic/chromosome.txt");
    let r = approx_at(&c, 15);
    let elapsed = start.elapsed();
    let err = rel_err(r.ise, CHROMOSOME_ISE);
    let defs = (r.we - r.ise / r.cr).abs() <= IDENTITY_TOL * r.we
        && (r.fom - r.cr / r.ise).abs() <= IDENTITY_TOL * r.fom;
    let pass =
        r.n == 60 && r.cr == 4.0 && err <= CHROMOSOME_TOL && defs && elapsed < CHROMOSOME_RUNTIME;
    (
        pass,
        format!(
            "chromosome n={} m=15: CR={} ISE={:.4} (ref {CHROMOSOME_ISE}, off {:+.1}%, allowed ±{:.0}%), WE={:.4} FOM={:.4} definitions {}, {:.0?}",
            r.n,
            r.cr,
            r.ise,
            100.0 * (r.ise - CHROMOSOME_ISE) / CHROMOSOME_ISE,
            100.0 * CHROMOSOME_TOL,
            r.we,
            r.fom,
            if defs { "ok" } else { "broken" },
            elapsed
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, m, want, tol) in TABLE_ROWS {
        let c = load(&format!("synthetic/{name}.txt"));
        let ise = approx_at(&c, m).ise;
        let err = rel_err(ise, want);
        let rdp = metrics_report(&c, &rdp_to_count(&c, m).unwrap());
        let verdict = if err <= tol {
            "within tolerance".to_string()
        } else if rdp.m == m && ise <= BASELINE_SLACK * rdp.ise {
            format!(
                "off {:+.1}%, fallback ok vs RDP {:.4}",
                100.0 * (ise - want) / want,
                rdp.ise
            )
        } else {
            pass = false;
            format!(
                "off {:+.1}%, fallback FAILS vs RDP {:.4} at m={} (limit {:.4})",
                100.0 * (ise - want) / want,
                rdp.ise,
                rdp.m,
                BASELINE_SLACK * rdp.ise
            )
        };
        parts.push(format!("{name} m={m} ISE={ise:.4} ref {want}: {verdict}"));
    }
    (pass, parts.join("; "))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for (name, c, m) in grid_fixtures() {
        let base = approx_at(&c, m);
        for angle in [90.0, 180.0, 270.0, 360.0] {
            let r = rotate_curve(&c, angle);
            let got = approx_at(&r, m);
            checked += 1;
            let same = [
                (base.max_dev, got.max_dev),
                (base.ise, got.ise),
                (base.area, got.area),
                (base.perimeter, got.perimeter),
                (base.compactness, got.compactness),
            ]
            .iter()
            .all(|(a, b)| a.to_bits() == b.to_bits());
            if !same {
                bad.push(format!("{name}@{angle}"));
            }
        }
    }
    (
        bad.is_empty(),
        format!("{checked} fixture/angle runs bit-identical to 0°; mismatches: {bad:?}"),
    )
}

fn criterion_4() -> Outcome {
    let c = load("mpeg/bell-7.pbm");
    let base = approx_at(&c, 20).compactness;
    let mut pass = true;
    let mut parts = vec![format!("0°: {base:.5}")];
    for angle in [20.0, 30.0, 45.0, 70.0, 80.0] {
        let v = approx_at(&rotate_curve(&c, angle), 20).compactness;
        let ok = rel_err(v, base) <= ROTATION_COMPACTNESS_TOL;
        pass &= ok;
        parts.push(format!(
            "{angle}°: {v:.5}{}",
            if ok { "" } else { " (out of range)" }
        ));
    }
    (
        pass,
        format!("bell-7 m=20 compactness {}", parts.join(", ")),
    )
}

fn clamped_distance(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
    (p.x - a.x - t * dx).hypot(p.y - a.y - t * dy)
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut regions = [0usize; 3];
    let mut worst: f64 = 0.0;
    let trials = 5000;
    for _ in 0..trials {
        let mut pt = || Point::new(rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0));
        let (a, b, p) = (pt(), pt(), pt());
        let along = (p - a).dot(b - a) / (b - a).dot(b - a);
        regions[if along < 0.0 {
            0
        } else if along > 1.0 {
            2
        } else {
            1
        }] += 1;
        worst = worst.max((point_contribution(a, b, p).unwrap() - clamped_distance(p, a, b)).abs());
    }
    // continuity: step just across each chord endpoint
    let mut jump: f64 = 0.0;
    for _ in 0..1000 {
        let mut pt = || Point::new(rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0));
        let (a, b) = (pt(), pt());
        let dir = (b - a) * (1.0 / a.distance(b));
        let normal = Point::new(-dir.y, dir.x) * rng.gen_range(-50.0..50.0);
        for end in [a, b] {
            let at = point_contribution(a, b, end + normal).unwrap();
            for s in [-1e-9, 1e-9] {
                jump = jump
                    .max((point_contribution(a, b, end + normal + dir * s).unwrap() - at).abs());
            }
        }
    }
    let covered = regions.iter().all(|&k| k > 0);
    (
        covered && worst <= ORACLE_TOL && jump <= 1e-7,
        format!(
            "{trials} triples (before/within/beyond = {regions:?}), max |err| {worst:.2e}; max jump across boundaries {jump:.2e}"
        ),
    )
}

fn brute_force_trace(curve: &DigitalCurve, m: usize) -> (Vec<usize>, Vec<(usize, u64)>) {
    let mut current = segment(curve).unwrap().dp_indices;
    let mut steps = Vec::new();
    while current.len() > m {
        let set = DominantPointSet::new(curve, current.clone()).unwrap();
        let sigs: Vec<f64> = (0..current.len())
            .map(|k| significance(curve, &set, k).unwrap())
            .collect();
        let min = sigs.iter().copied().fold(f64::INFINITY, f64::min);
        let k = (0..sigs.len())
            .find(|&k| sigs[k] - min <= 1e-9 * min.abs().max(1.0))
            .unwrap();
        steps.push((current[k], sigs[k].to_bits()));
        current.remove(k);
    }
    (current, steps)
}

fn random_small_curve(rng: &mut ChaCha8Rng) -> DigitalCurve {
    loop {
        let (w, h) = (rng.gen_range(3..8), rng.gen_range(3..8));
        let density = rng.gen_range(0.45..0.85);
        let img = BinaryImage::from_fn(w, h, |_, _| rng.gen_bool(density));
        if let Ok(c) = trace_contour(&img) {
            if c.len() <= 40 && segment(&c).map_or(false, |s| s.dp_indices.len() >= 4) {
                return c;
            }
        }
    }
}

fn criterion_6() -> Outcome {
    let codes = [0usize, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7];
    let mut pts = vec![Point::new(0.0, 0.0)];
    for &c in &codes[..15] {
        let (dx, dy) = polyapprox::curve::FREEMAN_DELTAS[c];
        let last = *pts.last().unwrap();
        pts.push(Point::new(last.x + dx as f64, last.y + dy as f64));
    }
    let mut curves = vec![build_curve(&pts, true).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    curves.extend((0..30).map(|_| random_small_curve(&mut rng)));
    let (mut runs, mut mismatches) = (0, 0);
    for c in &curves {
        let available = segment(c).unwrap().dp_indices.len();
        for m in 3..=available {
            let a = eliminate_to_count(c, m).unwrap();
            let (final_set, steps) = brute_force_trace(c, m);
            let trace: Vec<(usize, u64)> = a
                .trace
                .iter()
                .map(|s| (s.removed_index, s.sig_at_removal.to_bits()))
                .collect();
            runs += 1;
            if trace != steps || a.final_set.indices() != &final_set[..] || a.final_set.len() != m {
                mismatches += 1;
            }
        }
    }
    (
        mismatches == 0,
        format!(
            "octagon + {} random curves (n ≤ 40), {runs} target counts replayed, {mismatches} mismatches",
            curves.len() - 1
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut pts = Vec::new();
    for x in 0..12 {
        pts.push((x as f64, 0.0));
    }
    for y in 0..5 {
        pts.push((12.0, y as f64));
    }
    for x in (1..=12).rev() {
        pts.push((x as f64, 5.0));
    }
    for y in (1..=5).rev() {
        pts.push((0.0, y as f64));
    }
    let rect = build_curve(&pts, true).unwrap();
    let straight = initial_dominant_points(&rect).unwrap().dp_indices == vec![0, 12, 17, 29];
    let mut bad = Vec::new();
    for (name, c, _) in grid_fixtures() {
        let chain = initial_dominant_points(&c).unwrap().dp_indices;
        if break_points_real(&c, DEFAULT_BREAK_TOLERANCE)
            .unwrap()
            .dp_indices
            != chain
        {
            bad.push(format!("{name} real"));
        }
        for angle in [20.0, 30.0, 45.0, 70.0, 80.0, 90.0, 180.0] {
            let r = rotate_curve(&c, angle);
            if break_points_real(&r, DEFAULT_BREAK_TOLERANCE)
                .unwrap()
                .dp_indices
                != chain
            {
                bad.push(format!("{name}@{angle}"));
            }
        }
    }
    (
        straight && bad.is_empty(),
        format!(
            "straight runs {}; real/chain/rotated break sets disagree on: {bad:?}",
            if straight {
                "have no interior breaks"
            } else {
                "HAVE interior breaks"
            }
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut reports = Vec::new();
    for table in [Table::Synthetic, Table::Mpeg] {
        reports.extend(
            bench(&fixtures(), table)
                .rows
                .into_iter()
                .map(|r| r.metrics),
        );
    }
    let mut zero_ok = true;
    for (_, c, m) in grid_fixtures() {
        let a = eliminate_to_count(&c, m).unwrap();
        reports.extend(a.trace.iter().map(|s| s.metrics_after));
        reports.push(metrics_report(&c, &a.final_set));
        let all = DominantPointSet::new(&c, (0..c.len()).collect()).unwrap();
        let r = metrics_report(&c, &all);
        zero_ok &= r.ise == 0.0;
        reports.push(r);
    }
    let broken = reports.iter().filter(|r| !identities_hold(r)).count();
    (
        broken == 0 && zero_ok,
        format!(
            "{} reports checked, {broken} violate fom·we=1 / we2·cr=we / cr=n/m; all-dominant ISE zero: {zero_ok}",
            reports.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let dir = fixtures();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_approx"))
            .args([
                "bench",
                "--fixtures",
                dir.to_str().unwrap(),
                "--table",
                "synthetic",
            ])
            .output()
            .unwrap()
    };
    let start = Instant::now();
    let a = run();
    let elapsed = start.elapsed();
    let b = run();
    let lib = bench_csv(Table::Synthetic, &bench(&dir, Table::Synthetic)).unwrap();
    let identical = a.stdout == b.stdout && a.stdout == lib.as_bytes();
    let contours: BTreeSet<&str> = lib
        .lines()
        .skip(1)
        .filter_map(|l| l.split(',').next())
        .collect();
    (
        identical && a.status.success() && elapsed < SUITE_RUNTIME && contours.len() == 4,
        format!(
            "two runs byte-identical: {identical}, exit {:?}, {} rows over {} contours, synthetic suite {:.0?}",
            a.status.code(),
            lib.lines().count() - 1,
            contours.len(),
            elapsed
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("chromosome m=15 reference row", criterion_1),
        ("synthetic reference rows", criterion_2),
        ("quarter-turn identity", criterion_3),
        ("rotation robustness", criterion_4),
        ("significance oracle", criterion_5),
        ("elimination replay oracle", criterion_6),
        ("break point properties", criterion_7),
        ("metric identities", criterion_8),
        ("determinism and runtime", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let (pass, detail) = f();
        failed += usize::from(!pass);
        println!(
            "[{}] {} {name}: {detail}",
            if pass { "PASS" } else { "FAIL" },
            k + 1
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
