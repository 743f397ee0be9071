use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::rng::Lcg32;

use super::anim::AnimationState;
use super::bullets::{fire_bullet, update_bullets, BulletList};
use super::object::{check_collision, Capabilities, EffectId, GameObject, SpriteId};
use super::physics::{camera_offset, world_to_screen, JumpState};
use super::SimError;

/// Age at which a cloner splits.
pub const CLONE_AGE: i32 = 50;
/// Age marker for an enemy that will never clone again.
pub const NEVER_CLONE: i32 = -1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    /// Free movement on both axes; a patrolling shooter guards the top edge.
    Topdown,
    /// Side view with gravity; SPACE also jumps.
    Scroller,
}

impl FromStr for Layout {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "topdown" => Ok(Layout::Topdown),
            "scroller" => Ok(Layout::Scroller),
            other => Err(format!("unknown mode {other:?} (expected topdown or scroller)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WorldConfig {
    pub mode: Layout,
    pub screen_w: u32,
    pub screen_h: u32,
    pub ground_level: i32,
    pub player_speed: i32,
    pub bullet_speed: i32,
    pub enemy_speed: i32,
    pub jump_v0: i32,
    pub gravity: i32,
    pub collision_threshold: i32,
    pub player_w: u32,
    pub player_h: u32,
    pub enemy_w: u32,
    pub enemy_h: u32,
    pub prize_w: u32,
    pub prize_h: u32,
}

impl Default for WorldConfig {
    fn default() -> Self {
        Self {
            mode: Layout::Topdown,
            screen_w: 640,
            screen_h: 480,
            ground_level: 380,
            player_speed: 3,
            bullet_speed: 4,
            enemy_speed: 2,
            jump_v0: -25,
            gravity: 1,
            collision_threshold: 10,
            player_w: 48,
            player_h: 48,
            enemy_w: 37,
            enemy_h: 37,
            prize_w: 37,
            prize_h: 37,
        }
    }
}

impl WorldConfig {
    /// Resting y of the player's top-left anchor: the ground line minus the
    /// sprite height.
    pub fn effective_ground(&self) -> i32 {
        self.ground_level - self.player_h as i32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Key {
    Left,
    Right,
    Up,
    Down,
    Space,
    Escape,
}

impl FromStr for Key {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "LEFT" => Key::Left,
            "RIGHT" => Key::Right,
            "UP" => Key::Up,
            "DOWN" => Key::Down,
            "SPACE" => Key::Space,
            "ESCAPE" => Key::Escape,
            other => return Err(format!("unknown key {other:?}")),
        })
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Key::Left => "LEFT",
            Key::Right => "RIGHT",
            Key::Up => "UP",
            Key::Down => "DOWN",
            Key::Space => "SPACE",
            Key::Escape => "ESCAPE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KeyEdge {
    Down,
    Up,
}

impl FromStr for KeyEdge {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "DOWN" => Ok(KeyEdge::Down),
            "UP" => Ok(KeyEdge::Up),
            other => Err(format!("unknown key edge {other:?}")),
        }
    }
}

impl fmt::Display for KeyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KeyEdge::Down => "DOWN",
            KeyEdge::Up => "UP",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InputEvent {
    pub frame: u64,
    pub key: Key,
    pub edge: KeyEdge,
}

impl InputEvent {
    pub fn new(frame: u64, key: Key, edge: KeyEdge) -> Self {
        Self { frame, key, edge }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RenderCommand {
    pub shape_id: SpriteId,
    pub screen_x: i32,
    pub screen_y: i32,
    pub effect: EffectId,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Enemy {
    pub obj: GameObject,
    pub age: i32,
}

impl Enemy {
    pub fn new(obj: GameObject) -> Self {
        let age = if obj.capabilities.contains(Capabilities::CLONER) {
            0
        } else {
            NEVER_CLONE
        };
        Self { obj, age }
    }
}

/// Ages a cloner by one frame. On reaching [`CLONE_AGE`] it emits a copy at
/// its own position with fresh random velocity and retires from cloning.
pub fn age_and_clone(e: &mut Enemy, rng: &mut Lcg32) -> Option<Enemy> {
    if e.age == NEVER_CLONE {
        return None;
    }
    e.age += 1;
    if e.age != CLONE_AGE {
        return None;
    }
    e.age = NEVER_CLONE;
    let vx = rng.jitter();
    let vy = rng.jitter();
    let mut obj = e.obj.clone().with_velocity(vx, vy);
    obj.visible = e.obj.visible;
    Some(Enemy { obj, age: 0 })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct InputFlags {
    pub left: bool,
    pub right: bool,
    pub up: bool,
    pub down: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct World {
    pub config: WorldConfig,
    pub player: GameObject,
    pub jump: JumpState,
    pub animation: AnimationState,
    pub enemies: Vec<Enemy>,
    pub prize: GameObject,
    pub player_bullets: BulletList,
    pub enemy_bullet: GameObject,
    pub offset: i32,
    pub frame_count: u64,
    pub rng: Lcg32,
    pub quit: bool,
    pub win: bool,
    pub input: InputFlags,
}

impl World {
    /// A world holding only the player, with no enemies and the prize
    /// hidden.
    pub fn bare(config: WorldConfig, seed: u32) -> Self {
        let (px, py) = match config.mode {
            Layout::Topdown => (296, 240),
            Layout::Scroller => (296, config.effective_ground()),
        };
        let player = GameObject::new(SpriteId::PLAYER_0, px, py, config.player_w, config.player_h)
            .with_capabilities(Capabilities::PLAYER | Capabilities::ANIMATED);
        let mut prize = GameObject::new(SpriteId::PRIZE, 0, 0, config.prize_w, config.prize_h)
            .with_capabilities(Capabilities::PRIZE);
        prize.visible = false;
        let mut enemy_bullet = GameObject::new(SpriteId::BULLET, 0, 0, 1, 1)
            .with_velocity(0, config.bullet_speed)
            .with_capabilities(Capabilities::BULLET);
        enemy_bullet.visible = false;
        let offset = camera_offset(player.x, config.screen_w, config.player_w);
        Self {
            player,
            jump: JumpState::default(),
            animation: AnimationState::player(),
            enemies: Vec::new(),
            prize,
            player_bullets: BulletList::new(),
            enemy_bullet,
            offset,
            frame_count: 0,
            rng: Lcg32::new(seed),
            quit: false,
            win: false,
            input: InputFlags::default(),
            config,
        }
    }

    /// The standard level for the configured layout.
    pub fn new(config: WorldConfig, seed: u32) -> Self {
        let mut w = Self::bare(config, seed);
        let c = w.config.clone();
        let enemy = |x, y| GameObject::new(SpriteId::ENEMY, x, y, c.enemy_w, c.enemy_h);
        match c.mode {
            Layout::Topdown => {
                w.enemies.push(Enemy::new(
                    enemy(300, 0)
                        .with_velocity(c.enemy_speed, 0)
                        .with_capabilities(Capabilities::ENEMY | Capabilities::PATROL | Capabilities::SHOOTER),
                ));
                w.enemies.push(Enemy::new(
                    enemy(100, 180).with_capabilities(Capabilities::ENEMY | Capabilities::JITTER),
                ));
                let vx = w.rng.jitter();
                let vy = w.rng.jitter();
                w.enemies.push(Enemy::new(
                    enemy(500, 100)
                        .with_velocity(vx, vy)
                        .with_capabilities(Capabilities::ENEMY | Capabilities::PATROL | Capabilities::CLONER),
                ));
                w.prize.x = 446;
                w.prize.y = 240;
            }
            Layout::Scroller => {
                let base = w.player.y;
                w.enemies.push(Enemy::new(
                    enemy(480, base).with_capabilities(Capabilities::ENEMY | Capabilities::JITTER),
                ));
                w.prize.x = 960;
                w.prize.y = base;
            }
        }
        w.prize.visible = true;
        w
    }

    /// Advances one frame. `events` must all carry the current frame number;
    /// otherwise nothing changes and an error is returned.
    pub fn step_frame(&mut self, events: &[InputEvent]) -> Result<Vec<RenderCommand>, SimError> {
        if let Some(bad) = events.iter().find(|e| e.frame != self.frame_count) {
            return Err(SimError::FrameMismatch {
                expected: self.frame_count,
                got: bad.frame,
            });
        }
        if !self.quit {
            self.apply_input(events);
            self.update_player()?;
            self.update_enemies();
            let shot_down = self.update_player_bullets();
            self.resolve_contacts(shot_down);
        }
        self.offset = camera_offset(self.player.x, self.config.screen_w, self.config.player_w);
        self.frame_count += 1;
        Ok(self.render())
    }

    fn apply_input(&mut self, events: &[InputEvent]) {
        for ev in events {
            let down = ev.edge == KeyEdge::Down;
            match ev.key {
                Key::Escape if down => self.quit = true,
                Key::Space if down => {
                    fire_bullet(&self.player, &mut self.player_bullets, self.config.bullet_speed, SpriteId::BULLET);
                    if self.config.mode == Layout::Scroller && !self.jump.jumping {
                        self.jump = JumpState::start(self.player.y, self.config.jump_v0);
                    }
                }
                Key::Left => self.input.left = down,
                Key::Right => self.input.right = down,
                Key::Up => self.input.up = down,
                Key::Down => self.input.down = down,
                _ => {}
            }
        }
    }

    fn update_player(&mut self) -> Result<(), SimError> {
        let speed = self.config.player_speed;
        let axis = |pos: bool, neg: bool| i32::from(pos) * speed - i32::from(neg) * speed;
        self.player.vx = axis(self.input.right, self.input.left);
        self.player.vy = match self.config.mode {
            Layout::Topdown => axis(self.input.down, self.input.up),
            Layout::Scroller => 0,
        };
        self.player.advance();
        if self.jump.jumping {
            self.player.y = self.jump.step(self.config.effective_ground(), self.config.gravity)?;
        }
        self.animation.advance_if_moving(self.player.vx);
        self.player.shape_id = self.animation.shape();
        Ok(())
    }

    fn update_enemies(&mut self) {
        let (screen_w, screen_h) = (self.config.screen_w as i32, self.config.screen_h as i32);
        // Clones join after this frame's pass.
        let mut born = Vec::new();
        for e in self.enemies.iter_mut() {
            let caps = e.obj.capabilities;
            if caps.contains(Capabilities::JITTER) {
                e.obj.x += self.rng.jitter();
                e.obj.y += self.rng.jitter();
            }
            if caps.contains(Capabilities::PATROL) {
                e.obj.advance();
                if e.obj.x < 0 || e.obj.x > screen_w {
                    e.obj.vx *= -1;
                }
                if e.obj.y < 0 || e.obj.y > screen_h {
                    e.obj.vy *= -1;
                }
            }
            if caps.contains(Capabilities::CLONER) {
                born.extend(age_and_clone(e, &mut self.rng));
            }
        }
        self.enemies.extend(born);

        let shooter = self
            .enemies
            .iter()
            .find(|e| e.obj.visible && e.obj.capabilities.contains(Capabilities::SHOOTER));
        if let Some(s) = shooter {
            if !self.enemy_bullet.visible && (s.obj.x - self.player.x).abs() < 5 {
                self.enemy_bullet.x = s.obj.x;
                self.enemy_bullet.y = s.obj.y;
                self.enemy_bullet.visible = true;
            }
        }
        if self.enemy_bullet.visible {
            self.enemy_bullet.advance();
            if self.enemy_bullet.y > screen_h {
                self.enemy_bullet.visible = false;
            }
        }
    }

    /// Returns true when the oldest bullet hit the lead enemy.
    fn update_player_bullets(&mut self) -> bool {
        let threshold = self.config.collision_threshold;
        match self.enemies.first().filter(|e| e.obj.visible) {
            Some(target) => {
                let target = target.obj.clone();
                let hit = update_bullets(&mut self.player_bullets, &target, threshold);
                if hit {
                    self.enemies[0].obj.visible = false;
                    self.win = true;
                    self.quit = true;
                }
                hit
            }
            None => {
                self.player_bullets.for_each_mut(|b| b.advance());
                if self.player_bullets.front().is_some_and(|b| b.y < 0) {
                    self.player_bullets.pop_front();
                }
                false
            }
        }
    }

    fn resolve_contacts(&mut self, mut won: bool) {
        let threshold = self.config.collision_threshold;
        if self.prize.visible && check_collision(&self.player, &self.prize, threshold) {
            self.prize.visible = false;
            self.win = true;
            self.quit = true;
            won = true;
        }
        if won {
            return;
        }
        let touched = self
            .enemies
            .iter()
            .any(|e| e.obj.visible && check_collision(&self.player, &e.obj, threshold));
        let shot = self.enemy_bullet.visible && check_collision(&self.player, &self.enemy_bullet, threshold);
        if touched || shot {
            self.win = false;
            self.quit = true;
        }
    }

    /// Painter-ordered draw list for the current state.
    pub fn render(&self) -> Vec<RenderCommand> {
        let offset = self.offset;
        let cmd = |o: &GameObject| RenderCommand {
            shape_id: o.shape_id,
            screen_x: world_to_screen(o.x, offset),
            screen_y: o.y,
            effect: o.effect,
        };
        let mut out = vec![RenderCommand {
            shape_id: SpriteId::MAP,
            screen_x: -offset,
            screen_y: 0,
            effect: EffectId::NONE,
        }];
        if self.prize.visible {
            out.push(cmd(&self.prize));
        }
        if self.enemy_bullet.visible {
            out.push(cmd(&self.enemy_bullet));
        }
        out.extend(self.enemies.iter().filter(|e| e.obj.visible).map(|e| cmd(&e.obj)));
        if self.player.visible {
            out.push(cmd(&self.player));
        }
        out.extend(self.player_bullets.iter().filter(|b| b.visible).map(cmd));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(frame: u64, key: Key, edge: KeyEdge) -> InputEvent {
        InputEvent::new(frame, key, edge)
    }

    #[test]
    fn quiescent_world_only_keeps_books() {
        let mut w = World::bare(WorldConfig::default(), 1);
        let before = w.clone();
        w.step_frame(&[]).unwrap();
        assert_eq!(w.frame_count, 1);
        let mut expected = before;
        expected.frame_count = 1;
        assert_eq!(w, expected);
    }

    #[test]
    fn escape_quits_without_touching_win() {
        let mut w = World::bare(WorldConfig::default(), 1);
        w.step_frame(&[ev(0, Key::Escape, KeyEdge::Down)]).unwrap();
        assert!(w.quit);
        assert!(!w.win);
    }

    #[test]
    fn wrong_frame_is_rejected_without_change() {
        let mut w = World::new(WorldConfig::default(), 3);
        let before = w.clone();
        let err = w.step_frame(&[ev(4, Key::Right, KeyEdge::Down)]).unwrap_err();
        assert_eq!(err, SimError::FrameMismatch { expected: 0, got: 4 });
        assert_eq!(w, before);
    }

    #[test]
    fn held_keys_combine_and_release() {
        let mut w = World::bare(WorldConfig::default(), 1);
        w.step_frame(&[ev(0, Key::Right, KeyEdge::Down), ev(0, Key::Down, KeyEdge::Down)])
            .unwrap();
        assert_eq!((w.player.x, w.player.y), (299, 243));
        assert_eq!(w.offset, 3);
        w.step_frame(&[ev(1, Key::Right, KeyEdge::Up)]).unwrap();
        assert_eq!((w.player.x, w.player.y), (299, 246));
        assert_eq!(w.animation.current_frame(), 1);
    }

    #[test]
    fn scroller_space_jumps_and_fires() {
        let cfg = WorldConfig {
            mode: Layout::Scroller,
            ..WorldConfig::default()
        };
        let mut w = World::bare(cfg, 1);
        let ground = w.player.y;
        w.step_frame(&[ev(0, Key::Space, KeyEdge::Down)]).unwrap();
        assert!(w.jump.jumping);
        assert_eq!(w.player_bullets.len(), 1);
        assert_eq!(w.player.y, ground);
        w.step_frame(&[]).unwrap();
        assert_eq!(w.player.y, ground - 25);
        let mut frames = 2;
        while w.jump.jumping {
            w.step_frame(&[]).unwrap();
            frames += 1;
        }
        assert_eq!(frames, 52);
        assert_eq!(w.player.y, ground);
    }

    #[test]
    fn cloner_splits_once_at_fifty() {
        let mut rng = Lcg32::new(9);
        let mut e = Enemy::new(
            GameObject::new(SpriteId::ENEMY, 5, 6, 37, 37).with_capabilities(Capabilities::CLONER),
        );
        for _ in 0..49 {
            assert!(age_and_clone(&mut e, &mut rng).is_none());
        }
        let child = age_and_clone(&mut e, &mut rng).expect("clone at 50");
        assert_eq!(e.age, NEVER_CLONE);
        assert_eq!((child.obj.x, child.obj.y, child.age), (5, 6, 0));
        assert_eq!(child.obj.shape_id, SpriteId::ENEMY);
        for _ in 0..200 {
            assert!(age_and_clone(&mut e, &mut rng).is_none());
        }
    }

    #[test]
    fn walking_right_reaches_the_prize() {
        let mut w = World::new(WorldConfig::default(), 7);
        let mut events = vec![ev(0, Key::Right, KeyEdge::Down)];
        let mut hit_frame = None;
        for _ in 0..60 {
            let f = w.frame_count;
            w.step_frame(&events).unwrap();
            events.clear();
            if w.quit {
                hit_frame = Some(f);
                break;
            }
        }
        assert_eq!(hit_frame, Some(46));
        assert!(w.win);
        assert!(!w.prize.visible);
        assert!(!w.render().iter().any(|c| c.shape_id == SpriteId::PRIZE));
    }

    #[test]
    fn render_order_is_painter_order() {
        let w = World::new(WorldConfig::default(), 7);
        let shapes: Vec<SpriteId> = w.render().iter().map(|c| c.shape_id).collect();
        assert_eq!(
            shapes,
            vec![SpriteId::MAP, SpriteId::PRIZE, SpriteId::ENEMY, SpriteId::ENEMY, SpriteId::ENEMY, SpriteId::PLAYER_0]
        );
    }
}
