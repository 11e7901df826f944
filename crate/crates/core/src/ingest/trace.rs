//! Moore-neighbour boundary tracing of the largest 8-connected component.

use std::collections::VecDeque;

use crate::curve::{build_curve, DigitalCurve};
use crate::error::{Error, Result};
use crate::geometry::Point;

use super::{normalize_clockwise, BinaryImage};

/// Neighbour offsets (col, row) in clockwise screen order, starting east.
const MOORE: [(i64, i64); 8] = [
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
];
const WEST: usize = 4;

/// Pixels of the largest 8-connected foreground component, as a mask, plus
/// its pixel count. Ties go to the component whose first pixel comes first
/// in raster order.
fn largest_component(image: &BinaryImage) -> Option<(Vec<bool>, usize)> {
    let (w, h) = (image.width(), image.height());
    let mut label = vec![usize::MAX; w * h];
    let mut best: Option<(usize, usize)> = None;
    let mut next_label = 0;
    let mut queue = VecDeque::new();
    for start in 0..w * h {
        if !image.pixels()[start] || label[start] != usize::MAX {
            continue;
        }
        let id = next_label;
        next_label += 1;
        label[start] = id;
        queue.push_back(start);
        let mut size = 0;
        while let Some(k) = queue.pop_front() {
            size += 1;
            let (col, row) = ((k % w) as i64, (k / w) as i64);
            for (dc, dr) in MOORE {
                let (c, r) = (col + dc, row + dr);
                if image.get(c, r) {
                    let j = r as usize * w + c as usize;
                    if label[j] == usize::MAX {
                        label[j] = id;
                        queue.push_back(j);
                    }
                }
            }
        }
        if best.map_or(true, |(_, s)| size > s) {
            best = Some((id, size));
        }
    }
    let (id, size) = best?;
    Some((label.into_iter().map(|l| l == id).collect(), size))
}

/// Trace the outer boundary of the largest foreground component.
///
/// Starts at the component's top-left-most pixel with the (background) west
/// neighbour as backtrack, and stops when the first move is about to be
/// repeated. The result is a closed 8-connected curve in y-up coordinates,
/// oriented clockwise.
pub fn trace_contour(image: &BinaryImage) -> Result<DigitalCurve> {
    let (mask, size) = largest_component(image).ok_or(Error::EmptyImage)?;
    if size < 3 {
        return Err(Error::DegenerateComponent { pixels: size });
    }
    let w = image.width();
    let inside = |c: i64, r: i64| {
        c >= 0
            && r >= 0
            && (c as usize) < w
            && (r as usize) < image.height()
            && mask[r as usize * w + c as usize]
    };
    let first = mask.iter().position(|&b| b).expect("non-empty component");
    let start = ((first % w) as i64, (first / w) as i64);

    let mut pixels = vec![start];
    let mut current = start;
    let mut backtrack = WEST;
    let mut first_move = None;
    // each boundary pixel is entered at most 4 times
    let cap = 4 * size + 8;
    for _ in 0..cap {
        let Some(d) = (1..=8)
            .map(|k| (backtrack + k) % 8)
            .find(|&d| inside(current.0 + MOORE[d].0, current.1 + MOORE[d].1))
        else {
            break;
        };
        match first_move {
            None => first_move = Some(d),
            Some(d0) if current == start && d == d0 => break,
            Some(_) => {}
        }
        current = (current.0 + MOORE[d].0, current.1 + MOORE[d].1);
        backtrack = if d % 2 == 0 { (d + 6) % 8 } else { (d + 5) % 8 };
        pixels.push(current);
    }
    // the final move re-enters the start pixel
    if pixels.len() > 1 && pixels.last() == Some(&start) {
        pixels.pop();
    }
    let h = image.height() as i64;
    let points: Vec<Point> = pixels
        .iter()
        .map(|&(c, r)| Point::new(c as f64, (h - 1 - r) as f64))
        .collect();
    let curve =
        build_curve(&points, true).map_err(|_| Error::DegenerateComponent { pixels: size })?;
    Ok(normalize_clockwise(curve))
}
