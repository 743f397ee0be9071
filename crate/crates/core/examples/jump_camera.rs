//! Jump arc in the side-scroller and the camera offset that follows the player.

use acc_kit::simkernel::{camera_offset, world_to_screen, JumpState};

fn main() {
    let mut jump = JumpState::start(380, -25);
    let mut t = 0;
    while jump.jumping {
        let y = jump.step(380, 1).unwrap();
        if t % 10 == 0 || !jump.jumping {
            println!("t={t:>2} y={y} jumping={}", jump.jumping);
        }
        t += 1;
    }

    for px in [296, 400, 1000] {
        let offset = camera_offset(px, 640, 48);
        println!("player x={px} offset={offset} screen x={}", world_to_screen(px, offset));
    }
}
