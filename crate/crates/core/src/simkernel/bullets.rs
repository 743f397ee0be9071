use crate::containers::LinkedList;

use super::object::{check_collision, Capabilities, GameObject, SpriteId};

pub type BulletList = LinkedList<GameObject>;

/// Appends a bullet at the shooter's position travelling straight up. All
/// bullets share the one `shape` sprite.
pub fn fire_bullet(shooter: &GameObject, bullets: &mut BulletList, bullet_speed: i32, shape: SpriteId) {
    let bullet = GameObject::new(shape, shooter.x, shooter.y, 1, 1)
        .with_velocity(0, -bullet_speed)
        .with_capabilities(Capabilities::BULLET);
    bullets.push_back(bullet);
}

/// Moves every bullet, tests only the oldest one against `target`, and
/// drops that oldest bullet once it has left the top of the screen.
pub fn update_bullets(bullets: &mut BulletList, target: &GameObject, threshold: i32) -> bool {
    bullets.for_each_mut(|b| b.advance());
    let Some(head) = bullets.front() else {
        return false;
    };
    let hit = check_collision(head, target, threshold);
    if head.y < 0 {
        bullets.pop_front();
    }
    hit
}
