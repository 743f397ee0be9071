//! Applies every pixel effect to a small generated image and writes PPMs.
//!
//! Run with `cargo run --example image_filters -- <out-dir>`.

use std::path::PathBuf;

use acc_kit::imaging::{apply_effect, write_ppm, Color, EffectSpec, PixelBuffer};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "filtered".into()));
    std::fs::create_dir_all(&dir).unwrap();
    let mask = Color::WHITE;
    let mut src = PixelBuffer::new(64, 32, mask);
    for y in 4..28 {
        for x in 4..60 {
            src.set(x, y, Color::rgb((x * 4) as u8, (y * 8) as u8, 120));
        }
    }
    let src = src.with_mask(mask);
    for spec in ["gray", "blur", "brightup:60", "brightdown:60", "fill:204080"] {
        let effect: EffectSpec = spec.parse().unwrap();
        let mut img = src.clone();
        apply_effect(&mut img, effect);
        let path = dir.join(format!("{}.ppm", spec.replace(':', "_")));
        write_ppm(&path, &img).unwrap();
        println!("{effect:<14} -> {} (corner {:?})", path.display(), img.get(0, 0));
    }
}
