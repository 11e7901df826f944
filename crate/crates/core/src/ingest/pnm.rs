use crate::error::{Error, Result};

/// Row-major foreground mask; row 0 is the top of the image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryImage {
    width: usize,
    height: usize,
    pixels: Vec<bool>,
}

impl BinaryImage {
    pub fn new(width: usize, height: usize, pixels: Vec<bool>) -> Result<Self> {
        if width.checked_mul(height) != Some(pixels.len()) {
            return Err(Error::Image(format!(
                "{} pixels for a {width}x{height} image",
                pixels.len()
            )));
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let pixels = (0..height)
            .flat_map(|row| (0..width).map(move |col| (col, row)))
            .map(|(col, row)| f(col, row))
            .collect();
        Self {
            width,
            height,
            pixels,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Foreground test with out-of-bounds treated as background.
    pub fn get(&self, col: i64, row: i64) -> bool {
        if col < 0 || row < 0 || col as usize >= self.width || row as usize >= self.height {
            return false;
        }
        self.pixels[row as usize * self.width + col as usize]
    }

    pub fn pixels(&self) -> &[bool] {
        &self.pixels
    }

    /// Plain (P1) PBM encoding, 1 = foreground.
    pub fn to_pbm(&self) -> String {
        let mut out = format!("P1\n{} {}\n", self.width, self.height);
        for row in self.pixels.chunks(self.width.max(1)) {
            let line: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Header<'a> {
    fn skip_space_and_comments(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b if b.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Image(format!("missing or invalid {what}")))
    }

    /// Next single ASCII bit for plain PBM, where digits need no separator.
    fn bit(&mut self) -> Result<bool> {
        self.skip_space_and_comments();
        match self.bytes.get(self.pos) {
            Some(b'0') => {
                self.pos += 1;
                Ok(false)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(true)
            }
            _ => Err(Error::Image("truncated or invalid PBM data".into())),
        }
    }

    /// Raster data of binary formats starts after one whitespace byte.
    fn raster(&self) -> &'a [u8] {
        &self.bytes[(self.pos + 1).min(self.bytes.len())..]
    }
}

/// Parse PBM (P1/P4) or PGM (P2/P5). PBM ones are foreground; PGM samples
/// at or above 128 (on a 0..255 scale) are foreground.
pub fn parse_pnm(bytes: &[u8]) -> Result<BinaryImage> {
    if bytes.len() < 2 || bytes[0] != b'P' {
        return Err(Error::Image("not a PBM/PGM file".into()));
    }
    let magic = bytes[1];
    let mut h = Header { bytes, pos: 2 };
    let width = h.number("width")?;
    let height = h.number("height")?;
    let count = width
        .checked_mul(height)
        .ok_or_else(|| Error::Image("image too large".into()))?;
    let pixels = match magic {
        b'1' => (0..count).map(|_| h.bit()).collect::<Result<Vec<_>>>()?,
        b'4' => {
            let stride = width.div_ceil(8);
            let raster = h.raster();
            if raster.len() < stride * height {
                return Err(Error::Image("truncated PBM raster".into()));
            }
            (0..count)
                .map(|k| {
                    let (row, col) = (k / width, k % width);
                    raster[row * stride + col / 8] & (0x80 >> (col % 8)) != 0
                })
                .collect()
        }
        b'2' | b'5' => {
            let maxval = h.number("maxval")?;
            if maxval == 0 || maxval > 65535 {
                return Err(Error::Image(format!("invalid maxval {maxval}")));
            }
            let fg = |v: usize| v * 255 >= 128 * maxval;
            if magic == b'2' {
                (0..count)
                    .map(|_| h.number("sample").map(fg))
                    .collect::<Result<Vec<_>>>()?
            } else {
                let raster = h.raster();
                let depth = if maxval < 256 { 1 } else { 2 };
                if raster.len() < count * depth {
                    return Err(Error::Image("truncated PGM raster".into()));
                }
                (0..count)
                    .map(|k| {
                        let v = if depth == 1 {
                            raster[k] as usize
                        } else {
                            (raster[2 * k] as usize) << 8 | raster[2 * k + 1] as usize
                        };
                        fg(v)
                    })
                    .collect()
            }
        }
        other => {
            return Err(Error::Image(format!(
                "unsupported format P{}",
                other as char
            )))
        }
    };
    BinaryImage::new(width, height, pixels)
}
