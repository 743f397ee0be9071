//! Trace-driven headless runs with optional PPM frame dumps.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::imaging::{
    read_ppm, render_frame, write_ppm, Color, EffectSpec, EffectTable, FrameDigest, PixelBuffer, SpriteRegistry,
};
use crate::simkernel::{EffectId, InputEvent, SpriteId, World, WorldConfig};

use super::CliError;

/// Transparent key for every built-in sprite except the map.
pub const SPRITE_MASK: Color = Color::WHITE;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimSummary {
    pub frame_count: u64,
    pub quit: bool,
    pub win: bool,
    pub player: (i32, i32),
    pub enemies: usize,
    pub digest: u64,
    /// Frame index on which `quit` first became true.
    pub quit_frame: Option<u64>,
}

impl fmt::Display for SimSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "frames: {}", self.frame_count)?;
        writeln!(f, "quit: {}", self.quit)?;
        writeln!(f, "win: {}", self.win)?;
        writeln!(f, "player: {} {}", self.player.0, self.player.1)?;
        writeln!(f, "enemies: {}", self.enemies)?;
        write!(f, "digest: {:016x}", self.digest)
    }
}

fn solid(w: u32, h: u32, paint: impl Fn(u32, u32) -> Option<Color>) -> PixelBuffer {
    let mut buf = PixelBuffer::new(w, h, SPRITE_MASK).with_mask(SPRITE_MASK);
    for y in 0..h {
        for x in 0..w {
            if let Some(c) = paint(x, y) {
                buf.set(x, y, c);
            }
        }
    }
    buf
}

/// Procedural sprites sized from the config, so no binary assets are needed.
pub fn builtin_sprites(config: &WorldConfig) -> SpriteRegistry {
    let mut reg = SpriteRegistry::new();
    let (sw, sh) = (config.screen_w, config.screen_h);
    let ground = config.ground_level.clamp(0, sh as i32) as u32;
    let mut map = PixelBuffer::new(sw * 2, sh, Color::BLACK);
    for y in 0..sh {
        for x in 0..sw * 2 {
            let c = if y >= ground {
                Color::rgb(90, 60, 30)
            } else if x % 80 < 2 {
                Color::rgb(60, 90, 160)
            } else {
                Color::rgb(40, 70, (120 + y * 100 / sh.max(1)) as u8)
            };
            map.set(x, y, c);
        }
    }
    reg.insert(SpriteId::MAP, map);

    let (pw, ph) = (config.player_w, config.player_h);
    for (i, id) in [SpriteId::PLAYER_0, SpriteId::PLAYER_1, SpriteId::PLAYER_2].into_iter().enumerate() {
        // the stripe marks the current animation frame
        let stripe = (i as u32 * pw / 3, (i as u32 + 1) * pw / 3);
        let sprite = solid(pw, ph, |x, y| {
            let body = x > 2 && x + 3 < pw && y > 2 && y + 3 < ph;
            match (body, y >= ph / 2 && x >= stripe.0 && x < stripe.1) {
                (false, _) => None,
                (true, true) => Some(Color::rgb(250, 200, 40)),
                (true, false) => Some(Color::rgb(30, 160, 60)),
            }
        });
        reg.insert(id, sprite);
    }

    let (ew, eh) = (config.enemy_w, config.enemy_h);
    let r2 = (ew.min(eh) / 2) as i64;
    reg.insert(
        SpriteId::ENEMY,
        solid(ew, eh, |x, y| {
            let (dx, dy) = (x as i64 - ew as i64 / 2, y as i64 - eh as i64 / 2);
            (dx * dx + dy * dy <= r2 * r2).then_some(Color::rgb(200, 30, 30))
        }),
    );
    let (zw, zh) = (config.prize_w, config.prize_h);
    reg.insert(
        SpriteId::PRIZE,
        solid(zw, zh, |x, y| {
            let d = (x as i64 - zw as i64 / 2).abs() + (y as i64 - zh as i64 / 2).abs();
            (d <= (zw.min(zh) / 2) as i64).then_some(Color::rgb(240, 220, 0))
        }),
    );
    reg.insert(SpriteId::BULLET, solid(4, 8, |_, _| Some(Color::rgb(20, 20, 20))));
    reg.insert(SpriteId::PARTICLE, solid(4, 4, |_, _| Some(Color::rgb(160, 160, 160))));
    reg.insert(SpriteId::SOURCE, solid(16, 16, |_, _| Some(Color::rgb(100, 100, 220))));
    reg
}

/// Replaces built-in sprites with `<dir>/<name>.ppm` where present. Loaded
/// sprites use the white mask, except the map, which is opaque.
pub fn load_assets(dir: &Path, registry: &mut SpriteRegistry) -> Result<(), CliError> {
    for id in SpriteId::ALL {
        let name = id.asset_name().expect("every listed sprite has a name");
        let path = dir.join(format!("{name}.ppm"));
        if !path.exists() {
            continue;
        }
        let mut sprite = read_ppm(&path)?;
        if id != SpriteId::MAP {
            sprite.mask = Some(SPRITE_MASK);
        }
        registry.insert(id, sprite);
    }
    Ok(())
}

pub fn default_effects() -> EffectTable {
    let mut t = EffectTable::new();
    t.insert(EffectId::NONE, EffectSpec::None);
    t.insert(EffectId::GRAY, EffectSpec::Gray);
    t.insert(EffectId::BLUR, EffectSpec::Blur);
    t
}

#[derive(Debug, Clone)]
pub struct SimRun {
    pub config: WorldConfig,
    pub seed: u32,
    pub frames: u64,
    pub events: Vec<InputEvent>,
    pub dump_dir: Option<PathBuf>,
    pub registry: SpriteRegistry,
}

impl SimRun {
    pub fn new(config: WorldConfig, seed: u32, frames: u64, events: Vec<InputEvent>) -> Self {
        let registry = builtin_sprites(&config);
        Self {
            config,
            seed,
            frames,
            events,
            dump_dir: None,
            registry,
        }
    }

    /// Steps the standard world `frames` times, rendering every frame into
    /// the digest and, when a dump directory is set, to disk.
    pub fn run(&self) -> Result<(SimSummary, World), CliError> {
        let mut world = World::new(self.config.clone(), self.seed);
        let background = PixelBuffer::new(self.config.screen_w, self.config.screen_h, Color::BLACK);
        let effects = default_effects();
        let mut digest = FrameDigest::new();
        let mut quit_frame = None;
        if let Some(dir) = &self.dump_dir {
            std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
                path: dir.display().to_string(),
                source,
            })?;
        }
        let mut pending = self.events.as_slice();
        for frame in 0..self.frames {
            let split = pending.iter().take_while(|e| e.frame == frame).count();
            let (now, later) = pending.split_at(split);
            pending = later;
            let commands = world.step_frame(now)?;
            if world.quit && quit_frame.is_none() {
                quit_frame = Some(frame);
            }
            let image = render_frame(&commands, &self.registry, &background, &effects)?;
            digest.add(&image);
            if let Some(dir) = &self.dump_dir {
                write_ppm(&dir.join(format!("frame_{frame:05}.ppm")), &image)?;
            }
        }
        let summary = SimSummary {
            frame_count: world.frame_count,
            quit: world.quit,
            win: world.win,
            player: (world.player.x, world.player.y),
            enemies: world.enemies.len(),
            digest: digest.finish(),
            quit_frame,
        };
        Ok((summary, world))
    }
}
