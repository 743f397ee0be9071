//! A guard choosing its behaviour from the distance to an approaching player.

use acc_kit::simkernel::{distance, guard_fsm, move_toward, GameObject, SpriteId};

fn main() {
    let guard = GameObject::new(SpriteId::ENEMY, 0, 0, 37, 37);
    let mut player = GameObject::new(SpriteId::PLAYER_0, 300, 0, 48, 48);
    let mut last = None;
    while player.x > 0 {
        let state = guard_fsm(distance(&guard, &player));
        if last != Some(state) {
            println!("distance {:>5.1}: {state:?}", distance(&guard, &player));
            last = Some(state);
        }
        move_toward(&mut player, 0, 0, 10).unwrap();
    }
}
