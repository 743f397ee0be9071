use super::SimError;

/// Ballistic jump driven by frame count since take-off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct JumpState {
    pub y0: i32,
    pub v0: i32,
    pub t: i32,
    pub jumping: bool,
}

impl JumpState {
    pub fn start(y0: i32, v0: i32) -> Self {
        Self {
            y0,
            v0,
            t: 0,
            jumping: true,
        }
    }

    /// Height at the current `t`, then advances `t`. Lands on the ground
    /// once the trajectory falls strictly below it.
    pub fn step(&mut self, ground: i32, g: i32) -> Result<i32, SimError> {
        if !self.jumping {
            return Err(SimError::NotJumping);
        }
        let t = self.t;
        let candidate = self.y0 + self.v0 * t + g * t * t / 2;
        let y = if candidate > ground {
            self.jumping = false;
            ground
        } else {
            candidate
        };
        self.t += 1;
        Ok(y)
    }
}

/// Horizontal camera shift that keeps the player centred.
pub fn camera_offset(player_x: i32, screen_w: u32, player_w: u32) -> i32 {
    player_x - (screen_w as i32 / 2 - player_w as i32 / 2)
}

pub fn world_to_screen(x: i32, offset: i32) -> i32 {
    x - offset
}
