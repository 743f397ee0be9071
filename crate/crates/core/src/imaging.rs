//! RGBA pixel buffers, a binary PPM codec, per-pixel effects with mask-colour
//! skipping, masked blitting and whole-frame rendering.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::hash::Hasher;
use std::path::Path;
use std::str::FromStr;

use fnv::FnvHasher;
use thiserror::Error;

use crate::simkernel::{EffectId, RenderCommand, SpriteId};

#[derive(Debug, Error)]
pub enum ImagingError {
    #[error("PPM format error: {0}")]
    Format(String),
    #[error("no sprite registered for shape {0:?}")]
    UnknownSprite(SpriteId),
    #[error("no effect registered for id {0:?}")]
    UnknownEffect(EffectId),
    #[error("cannot parse effect {0:?}")]
    ParseEffect(String),
    #[error("pixel count {got} does not match {width}x{height}")]
    Dimensions { width: u32, height: u32, got: usize },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Color {
    pub r: u8,
    pub g: u8,
    pub b: u8,
    pub a: u8,
}

impl Color {
    pub const BLACK: Color = Color::rgb(0, 0, 0);
    pub const WHITE: Color = Color::rgb(255, 255, 255);

    pub const fn rgb(r: u8, g: u8, b: u8) -> Self {
        Self { r, g, b, a: 255 }
    }

    /// Mask comparison ignores alpha.
    pub fn same_rgb(&self, other: &Color) -> bool {
        self.r == other.r && self.g == other.g && self.b == other.b
    }
}

/// Row-major image with an optional transparency key colour.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PixelBuffer {
    width: u32,
    height: u32,
    pixels: Vec<Color>,
    pub mask: Option<Color>,
}

impl PixelBuffer {
    pub fn new(width: u32, height: u32, fill: Color) -> Self {
        Self {
            width,
            height,
            pixels: vec![fill; width as usize * height as usize],
            mask: None,
        }
    }

    pub fn from_pixels(width: u32, height: u32, pixels: Vec<Color>) -> Result<Self, ImagingError> {
        if pixels.len() != width as usize * height as usize {
            return Err(ImagingError::Dimensions {
                width,
                height,
                got: pixels.len(),
            });
        }
        Ok(Self {
            width,
            height,
            pixels,
            mask: None,
        })
    }

    pub fn with_mask(mut self, mask: Color) -> Self {
        self.mask = Some(mask);
        self
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[Color] {
        &self.pixels
    }

    fn index(&self, x: u32, y: u32) -> usize {
        y as usize * self.width as usize + x as usize
    }

    /// Panics when out of bounds.
    pub fn get(&self, x: u32, y: u32) -> Color {
        assert!(x < self.width && y < self.height, "pixel ({x},{y}) out of bounds");
        self.pixels[self.index(x, y)]
    }

    pub fn set(&mut self, x: u32, y: u32, c: Color) {
        assert!(x < self.width && y < self.height, "pixel ({x},{y}) out of bounds");
        let i = self.index(x, y);
        self.pixels[i] = c;
    }

    pub fn is_masked(&self, c: &Color) -> bool {
        self.mask.is_some_and(|m| m.same_rgb(c))
    }
}

/// Parses a binary PPM (P6, maxval 255). Comments are allowed in the header.
pub fn decode_ppm(bytes: &[u8]) -> Result<PixelBuffer, ImagingError> {
    let mut pos = 0;
    let magic = header_token(bytes, &mut pos).ok_or_else(|| ImagingError::Format("missing magic number".into()))?;
    if magic != b"P6" {
        return Err(ImagingError::Format(format!(
            "bad magic {:?}, expected \"P6\"",
            String::from_utf8_lossy(magic)
        )));
    }
    let mut field = |name: &str| -> Result<u32, ImagingError> {
        let tok = header_token(bytes, &mut pos).ok_or_else(|| ImagingError::Format(format!("missing {name}")))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| ImagingError::Format(format!("bad {name} {:?}", String::from_utf8_lossy(tok))))
    };
    let width = field("width")?;
    let height = field("height")?;
    let maxval = field("maxval")?;
    if width == 0 || height == 0 {
        return Err(ImagingError::Format(format!("empty image {width}x{height}")));
    }
    if maxval != 255 {
        return Err(ImagingError::Format(format!("maxval {maxval} unsupported, expected 255")));
    }
    // Exactly one whitespace byte separates the header from the raster.
    if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
        return Err(ImagingError::Format("missing separator after maxval".into()));
    }
    pos += 1;
    let needed = width as usize * height as usize * 3;
    let raster = &bytes[pos..];
    if raster.len() < needed {
        return Err(ImagingError::Format(format!(
            "truncated pixel data: {} of {needed} bytes",
            raster.len()
        )));
    }
    let pixels = raster[..needed].chunks_exact(3).map(|p| Color::rgb(p[0], p[1], p[2])).collect();
    PixelBuffer::from_pixels(width, height, pixels)
}

fn header_token<'a>(bytes: &'a [u8], pos: &mut usize) -> Option<&'a [u8]> {
    loop {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos < bytes.len() && bytes[*pos] == b'#' {
            while *pos < bytes.len() && bytes[*pos] != b'\n' {
                *pos += 1;
            }
            continue;
        }
        break;
    }
    let start = *pos;
    while *pos < bytes.len() && !bytes[*pos].is_ascii_whitespace() && bytes[*pos] != b'#' {
        *pos += 1;
    }
    (*pos > start).then(|| &bytes[start..*pos])
}

/// Canonical P6 serialisation; alpha is dropped.
pub fn encode_ppm(buf: &PixelBuffer) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", buf.width, buf.height).into_bytes();
    out.reserve(buf.pixels.len() * 3);
    for c in &buf.pixels {
        out.extend_from_slice(&[c.r, c.g, c.b]);
    }
    out
}

pub fn read_ppm(path: &Path) -> Result<PixelBuffer, ImagingError> {
    let bytes = fs::read(path).map_err(|source| ImagingError::Io {
        path: path.display().to_string(),
        source,
    })?;
    decode_ppm(&bytes)
}

pub fn write_ppm(path: &Path, buf: &PixelBuffer) -> Result<(), ImagingError> {
    fs::write(path, encode_ppm(buf)).map_err(|source| ImagingError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EffectSpec {
    None,
    Gray,
    Blur,
    BrightUp(u8),
    BrightDown(u8),
    Fill(Color),
}

impl FromStr for EffectSpec {
    type Err = ImagingError;

    /// Accepts `none`, `gray`, `blur`, `brightup:D`, `brightdown:D` and
    /// `fill:RRGGBB`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ImagingError::ParseEffect(s.to_string());
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        match (name, arg) {
            ("none", None) => Ok(EffectSpec::None),
            ("gray", None) => Ok(EffectSpec::Gray),
            ("blur", None) => Ok(EffectSpec::Blur),
            ("brightup", Some(d)) => d.parse().map(EffectSpec::BrightUp).map_err(|_| bad()),
            ("brightdown", Some(d)) => d.parse().map(EffectSpec::BrightDown).map_err(|_| bad()),
            ("fill", Some(hex)) if hex.len() == 6 && hex.is_ascii() => {
                let channel = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).map_err(|_| bad());
                Ok(EffectSpec::Fill(Color::rgb(channel(0)?, channel(2)?, channel(4)?)))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for EffectSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EffectSpec::None => f.write_str("none"),
            EffectSpec::Gray => f.write_str("gray"),
            EffectSpec::Blur => f.write_str("blur"),
            EffectSpec::BrightUp(d) => write!(f, "brightup:{d}"),
            EffectSpec::BrightDown(d) => write!(f, "brightdown:{d}"),
            EffectSpec::Fill(c) => write!(f, "fill:{:02x}{:02x}{:02x}", c.r, c.g, c.b),
        }
    }
}

/// Applies `effect` in place. Gray, Blur and the brightness effects leave
/// mask-coloured pixels untouched; Fill paints everything.
pub fn apply_effect(buf: &mut PixelBuffer, effect: EffectSpec) {
    match effect {
        EffectSpec::None => {}
        EffectSpec::Gray => map_unmasked(buf, |c| {
            let g = ((c.r as u32 + c.g as u32 + c.b as u32) / 3) as u8;
            Color { r: g, g, b: g, a: c.a }
        }),
        EffectSpec::BrightUp(d) => map_unmasked(buf, |c| Color {
            r: c.r.saturating_add(d),
            g: c.g.saturating_add(d),
            b: c.b.saturating_add(d),
            a: c.a,
        }),
        EffectSpec::BrightDown(d) => map_unmasked(buf, |c| Color {
            r: c.r.saturating_sub(d),
            g: c.g.saturating_sub(d),
            b: c.b.saturating_sub(d),
            a: c.a,
        }),
        EffectSpec::Fill(color) => {
            for y in 0..buf.height {
                for x in 0..buf.width {
                    buf.set(x, y, color);
                }
            }
        }
        EffectSpec::Blur => blur(buf),
    }
}

fn map_unmasked(buf: &mut PixelBuffer, f: impl Fn(Color) -> Color) {
    let mask = buf.mask;
    for c in buf.pixels.iter_mut() {
        if !mask.is_some_and(|m| m.same_rgb(c)) {
            *c = f(*c);
        }
    }
}

/// Horizontal three-tap box blur over interior columns, reading from a
/// snapshot. Masked neighbours drop out of the average.
fn blur(buf: &mut PixelBuffer) {
    if buf.width < 3 {
        return;
    }
    let src = buf.clone();
    for y in 0..buf.height {
        for x in 1..buf.width - 1 {
            let c = src.get(x, y);
            if src.is_masked(&c) {
                continue;
            }
            let mut n = 1u32;
            let (mut r, mut g, mut b) = (c.r as u32, c.g as u32, c.b as u32);
            for nx in [x + 1, x - 1] {
                let side = src.get(nx, y);
                if !src.is_masked(&side) {
                    n += 1;
                    r += side.r as u32;
                    g += side.g as u32;
                    b += side.b as u32;
                }
            }
            buf.set(
                x,
                y,
                Color {
                    r: (r / n) as u8,
                    g: (g / n) as u8,
                    b: (b / n) as u8,
                    a: c.a,
                },
            );
        }
    }
}

/// Copies `src` onto `dst` with its top-left corner at `(x, y)`, clipping to
/// `dst`. With `use_mask`, source pixels matching `src.mask` are skipped.
pub fn blit(dst: &mut PixelBuffer, src: &PixelBuffer, x: i32, y: i32, use_mask: bool) {
    for sy in 0..src.height {
        let dy = y as i64 + sy as i64;
        if dy < 0 || dy >= dst.height as i64 {
            continue;
        }
        for sx in 0..src.width {
            let dx = x as i64 + sx as i64;
            if dx < 0 || dx >= dst.width as i64 {
                continue;
            }
            let c = src.get(sx, sy);
            if use_mask && src.is_masked(&c) {
                continue;
            }
            dst.set(dx as u32, dy as u32, c);
        }
    }
}

pub type SpriteRegistry = BTreeMap<SpriteId, PixelBuffer>;
pub type EffectTable = BTreeMap<EffectId, EffectSpec>;

/// Draws `commands` in order over a copy of `background`. Each sprite is
/// cloned before its effect is applied, so the registry never changes.
/// [`EffectId::NONE`] needs no table entry.
pub fn render_frame(
    commands: &[RenderCommand],
    registry: &SpriteRegistry,
    background: &PixelBuffer,
    effects: &EffectTable,
) -> Result<PixelBuffer, ImagingError> {
    let mut frame = background.clone();
    for cmd in commands {
        let sprite = registry.get(&cmd.shape_id).ok_or(ImagingError::UnknownSprite(cmd.shape_id))?;
        let effect = match effects.get(&cmd.effect) {
            Some(e) => *e,
            None if cmd.effect == EffectId::NONE => EffectSpec::None,
            None => return Err(ImagingError::UnknownEffect(cmd.effect)),
        };
        if effect == EffectSpec::None {
            blit(&mut frame, sprite, cmd.screen_x, cmd.screen_y, true);
        } else {
            let mut copy = sprite.clone();
            apply_effect(&mut copy, effect);
            blit(&mut frame, &copy, cmd.screen_x, cmd.screen_y, true);
        }
    }
    Ok(frame)
}

/// Running 64-bit FNV-1a digest over a sequence of frames.
#[derive(Default)]
pub struct FrameDigest {
    hasher: FnvHasher,
}

impl FrameDigest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, frame: &PixelBuffer) {
        self.hasher.write(&encode_ppm(frame));
    }

    pub fn finish(&self) -> u64 {
        self.hasher.finish()
    }
}
