use super::object::SpriteId;

pub const DEFAULT_FRAME_COUNT: usize = 3;

/// A looping sequence of sprite frames.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnimationState {
    frames: Vec<SpriteId>,
    current: usize,
}

impl AnimationState {
    /// Panics on an empty frame list.
    pub fn new(frames: Vec<SpriteId>) -> Self {
        assert!(!frames.is_empty(), "an animation needs at least one frame");
        Self { frames, current: 0 }
    }

    pub fn player() -> Self {
        Self::new(vec![SpriteId::PLAYER_0, SpriteId::PLAYER_1, SpriteId::PLAYER_2])
    }

    pub fn current_frame(&self) -> usize {
        self.current
    }

    pub fn frame_count(&self) -> usize {
        self.frames.len()
    }

    pub fn shape(&self) -> SpriteId {
        self.frames[self.current]
    }

    pub fn advance(&mut self) {
        self.current += 1;
        if self.current >= self.frames.len() {
            self.current = 0;
        }
    }

    /// Advances only while the owner is moving horizontally.
    pub fn advance_if_moving(&mut self, vx: i32) {
        if vx != 0 {
            self.advance();
        }
    }
}
