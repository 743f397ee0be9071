use bitflags::bitflags;
use serde::{Deserialize, Serialize};

use super::SimError;

/// Identifies one shared sprite. Many objects may point at the same sprite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpriteId(pub u32);

impl SpriteId {
    pub const MAP: SpriteId = SpriteId(0);
    pub const PLAYER_0: SpriteId = SpriteId(1);
    pub const PLAYER_1: SpriteId = SpriteId(2);
    pub const PLAYER_2: SpriteId = SpriteId(3);
    pub const ENEMY: SpriteId = SpriteId(4);
    pub const PRIZE: SpriteId = SpriteId(5);
    pub const BULLET: SpriteId = SpriteId(6);
    pub const PARTICLE: SpriteId = SpriteId(7);
    pub const SOURCE: SpriteId = SpriteId(8);

    /// File stem used when sprites are loaded from an asset directory.
    pub fn asset_name(self) -> Option<&'static str> {
        Some(match self {
            SpriteId::MAP => "map",
            SpriteId::PLAYER_0 => "player0",
            SpriteId::PLAYER_1 => "player1",
            SpriteId::PLAYER_2 => "player2",
            SpriteId::ENEMY => "enemy",
            SpriteId::PRIZE => "prize",
            SpriteId::BULLET => "bullet",
            SpriteId::PARTICLE => "particle",
            SpriteId::SOURCE => "source",
            _ => return None,
        })
    }

    pub const ALL: [SpriteId; 9] = [
        SpriteId::MAP,
        SpriteId::PLAYER_0,
        SpriteId::PLAYER_1,
        SpriteId::PLAYER_2,
        SpriteId::ENEMY,
        SpriteId::PRIZE,
        SpriteId::BULLET,
        SpriteId::PARTICLE,
        SpriteId::SOURCE,
    ];
}

/// Names a per-object pixel effect applied at render time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EffectId(pub u32);

impl EffectId {
    pub const NONE: EffectId = EffectId(0);
    pub const GRAY: EffectId = EffectId(1);
    pub const BLUR: EffectId = EffectId(2);
}

bitflags! {
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct Capabilities: u32 {
        const ANIMATED = 1 << 0;
        const CLONER = 1 << 1;
        const BULLET = 1 << 2;
        const PLAYER = 1 << 3;
        const ENEMY = 1 << 4;
        const PRIZE = 1 << 5;
        /// Wanders by a fresh random step each frame.
        const JITTER = 1 << 6;
        /// Moves by its velocity and bounces off the screen edges.
        const PATROL = 1 << 7;
        /// Owns the single enemy bullet.
        const SHOOTER = 1 << 8;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameObject {
    pub x: i32,
    pub y: i32,
    pub vx: i32,
    pub vy: i32,
    pub w: u32,
    pub h: u32,
    pub visible: bool,
    pub shape_id: SpriteId,
    pub effect: EffectId,
    pub capabilities: Capabilities,
}

impl GameObject {
    pub fn new(shape_id: SpriteId, x: i32, y: i32, w: u32, h: u32) -> Self {
        Self {
            x,
            y,
            vx: 0,
            vy: 0,
            w,
            h,
            visible: true,
            shape_id,
            effect: EffectId::NONE,
            capabilities: Capabilities::empty(),
        }
    }

    pub fn with_velocity(mut self, vx: i32, vy: i32) -> Self {
        self.vx = vx;
        self.vy = vy;
        self
    }

    pub fn with_capabilities(mut self, caps: Capabilities) -> Self {
        self.capabilities = caps;
        self
    }

    /// One step along the current velocity.
    pub fn advance(&mut self) {
        self.x += self.vx;
        self.y += self.vy;
    }
}

/// Steps each axis independently toward the target. An axis already on
/// target stays put.
pub fn move_toward(obj: &mut GameObject, target_x: i32, target_y: i32, speed: i32) -> Result<(), SimError> {
    if speed <= 0 {
        return Err(SimError::NonPositiveSpeed);
    }
    obj.x += speed * (target_x - obj.x).signum();
    obj.y += speed * (target_y - obj.y).signum();
    Ok(())
}

pub fn distance(a: &GameObject, b: &GameObject) -> f64 {
    let dx = f64::from(a.x) - f64::from(b.x);
    let dy = f64::from(a.y) - f64::from(b.y);
    (dx * dx + dy * dy).sqrt()
}

/// Anchor-distance collision: both axis gaps strictly below `threshold`.
pub fn check_collision(a: &GameObject, b: &GameObject, threshold: i32) -> bool {
    (a.x - b.x).abs() < threshold && (a.y - b.y).abs() < threshold
}

/// Strict point-in-box test against the object's bounding box.
pub fn aabb_contains(px: i32, py: i32, bx: &GameObject) -> bool {
    let right = bx.x as i64 + bx.w as i64;
    let bottom = bx.y as i64 + bx.h as i64;
    px > bx.x && (px as i64) < right && py > bx.y && (py as i64) < bottom
}

/// Per-level start positions.
pub const DEFAULT_SPAWN_TABLE: [(i32, i32); 5] = [(100, 100), (120, 120), (140, 140), (160, 160), (180, 180)];

/// Resets the position to the level default, leaving every other field alone.
pub fn spawn_at_level(e: &mut GameObject, level: usize, table: &[(i32, i32)]) -> Result<(), SimError> {
    let &(x, y) = table.get(level).ok_or(SimError::LevelOutOfRange {
        level,
        len: table.len(),
    })?;
    e.x = x;
    e.y = y;
    Ok(())
}
