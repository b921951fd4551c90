//! Bitmap and text rendering of configurations.
//!
//! Bitmaps are binary portable pixmaps (`P6`): bit-exact output with no
//! decoder dependency. Rows run top to bottom, i.e. decreasing `j`, so
//! "up" on screen matches heading Up.

use crate::ant::AntConfiguration;
use crate::grid::Point;

/// State-to-RGB mapping plus the ant marker and origin-outline options.
#[derive(Debug, Clone)]
pub struct Palette {
    colors: Vec<[u8; 3]>,
    pub ant_marker: [u8; 3],
    pub outline_origin: bool,
    pub origin_outline: [u8; 3],
}

impl Palette {
    /// Grayscale ramp from white (state 0) to black (state m-1). For m=4
    /// this is white, light gray, dark gray, black.
    pub fn grayscale(m: u8) -> Palette {
        let colors = (0..m)
            .map(|s| {
                let level = 255 - (255 * s as u32 / (m as u32 - 1)) as u8;
                [level, level, level]
            })
            .collect();
        Palette {
            colors,
            ant_marker: [255, 0, 0],
            outline_origin: false,
            origin_outline: [0, 0, 255],
        }
    }

    pub fn color(&self, state: u8) -> [u8; 3] {
        self.colors[state as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Viewport {
    /// Bounding box of non-background cells padded by 2 cells; a 5x5 box
    /// centred on the ant when the grid is uniform.
    Auto,
    /// Inclusive cell box from `min` to `max`.
    Box { min: Point, max: Point },
}

impl Viewport {
    fn resolve(self, config: &AntConfiguration) -> (Point, Point) {
        match self {
            Viewport::Box { min, max } => (min, max),
            Viewport::Auto => match config.grid.bounds() {
                Some((lo, hi)) => (lo + Point::new(-2, -2), hi + Point::new(2, 2)),
                None => (
                    config.position + Point::new(-2, -2),
                    config.position + Point::new(2, 2),
                ),
            },
        }
    }
}

/// Renders the configuration as a binary PPM. `scale` is pixels per cell.
pub fn render_bitmap(
    config: &AntConfiguration,
    viewport: Viewport,
    scale: usize,
    palette: &Palette,
) -> Vec<u8> {
    assert!(scale >= 1);
    let (min, max) = viewport.resolve(config);
    assert!(min.i <= max.i && min.j <= max.j, "empty viewport");
    let cols = (max.i - min.i + 1) as usize;
    let rows = (max.j - min.j + 1) as usize;
    let (w, h) = (cols * scale, rows * scale);

    let mut out = format!("P6\n{w} {h}\n255\n").into_bytes();
    let header = out.len();
    out.resize(header + 3 * w * h, 0);

    for row in 0..rows {
        let j = max.j - row as i64;
        for col in 0..cols {
            let i = min.i + col as i64;
            let p = Point::new(i, j);
            let base = palette.color(config.grid.get(p));
            let cell_color = if p == config.position {
                palette.ant_marker
            } else {
                base
            };
            let outline = palette.outline_origin && p == Point::ORIGIN;
            for py in 0..scale {
                for px in 0..scale {
                    let on_border = py == 0 || py == scale - 1 || px == 0 || px == scale - 1;
                    let rgb = if outline && on_border {
                        palette.origin_outline
                    } else {
                        cell_color
                    };
                    let x = col * scale + px;
                    let y = row * scale + py;
                    let off = header + 3 * (y * w + x);
                    out[off..off + 3].copy_from_slice(&rgb);
                }
            }
        }
    }
    out
}

const DUMP_ALPHABET: &[u8; 64] =
    b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ+/";

/// One character per cell, rows top to bottom. When the ant is inside the
/// viewport, an annotation line with `A` under its column follows its row.
pub fn dump_text(config: &AntConfiguration, min: Point, max: Point) -> String {
    let mut out = String::new();
    for j in (min.j..=max.j).rev() {
        for i in min.i..=max.i {
            let s = config.grid.get(Point::new(i, j));
            out.push(DUMP_ALPHABET[s as usize] as char);
        }
        out.push('\n');
        if config.position.j == j && (min.i..=max.i).contains(&config.position.i) {
            let pad = (config.position.i - min.i) as usize;
            out.extend(std::iter::repeat_n(' ', pad));
            out.push('A');
            out.push('\n');
        }
    }
    out
}
