use crate::curve::{build_curve, DigitalCurve};
use crate::error::{Error, Result};
use crate::geometry::Point;

use super::normalize_clockwise;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parse a curve text file.
///
/// One `x y` or `x,y` pair per line; `#` starts a comment; an optional first
/// line `closed` or `open` sets the curve kind (closed by default). Closed
/// curves are returned in clockwise order.
pub fn load_curve_file(bytes: &[u8]) -> Result<DigitalCurve> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1;
        parse_error(line, "invalid UTF-8")
    })?;
    let mut closed = None;
    let mut points = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line.to_ascii_lowercase().as_str() {
            kind @ ("closed" | "open") => {
                if closed.is_some() || !points.is_empty() {
                    return Err(parse_error(line_no, "curve kind must be the first entry"));
                }
                closed = Some(kind == "closed");
                continue;
            }
            _ => {}
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(parse_error(
                line_no,
                format!("expected two coordinates, found {}", fields.len()),
            ));
        }
        let mut xy = [0.0; 2];
        for (slot, field) in xy.iter_mut().zip(&fields) {
            *slot = field
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| parse_error(line_no, format!("invalid coordinate {field:?}")))?;
        }
        points.push(Point::new(xy[0], xy[1]));
    }
    let curve = build_curve(&points, closed.unwrap_or(true))?;
    Ok(normalize_clockwise(curve))
}

/// Inverse of [`load_curve_file`] for curves it produced.
pub fn serialize_curve(curve: &DigitalCurve) -> String {
    let mut out = String::from(if curve.is_closed() {
        "closed\n"
    } else {
        "open\n"
    });
    for p in curve.points() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}
