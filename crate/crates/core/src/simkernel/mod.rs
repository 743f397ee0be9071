//! Deterministic, integer-only, headless 2D game kernel.
//!
//! Everything here is pure state stepping: no clocks, no windows, no I/O.
//! A [`World`] advances one frame per [`World::step_frame`] call and emits
//! [`RenderCommand`]s in painter order.

mod anim;
mod bullets;
mod fsm;
mod object;
mod particles;
mod physics;
mod world;

use thiserror::Error;

pub use anim::{AnimationState, DEFAULT_FRAME_COUNT};
pub use bullets::{fire_bullet, update_bullets, BulletList};
pub use fsm::{guard_fsm, GuardState};
pub use object::{
    aabb_contains, check_collision, distance, move_toward, spawn_at_level, Capabilities, EffectId, GameObject, SpriteId,
    DEFAULT_SPAWN_TABLE,
};
pub use particles::{Particle, ParticleSystem, NUM_PARTICLES};
pub use physics::{camera_offset, world_to_screen, JumpState};
pub use world::{
    age_and_clone, Enemy, InputEvent, Key, KeyEdge, Layout, RenderCommand, World, WorldConfig, CLONE_AGE, NEVER_CLONE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("jump_step called while not jumping")]
    NotJumping,
    #[error("event for frame {got} delivered during frame {expected}")]
    FrameMismatch { expected: u64, got: u64 },
    #[error("level {level} outside the {len}-entry spawn table")]
    LevelOutOfRange { level: usize, len: usize },
    #[error("speed must be positive")]
    NonPositiveSpeed,
}
