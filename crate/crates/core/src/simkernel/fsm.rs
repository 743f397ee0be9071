#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GuardState {
    Walk,
    Watch,
    Attack,
}

/// Guard behaviour chosen from the distance to the player.
pub fn guard_fsm(dist: f64) -> GuardState {
    if dist > 200.0 {
        GuardState::Walk
    } else if dist > 100.0 {
        GuardState::Watch
    } else {
        GuardState::Attack
    }
}
