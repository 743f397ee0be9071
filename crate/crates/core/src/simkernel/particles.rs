use crate::rng::Lcg32;

use super::object::{GameObject, SpriteId};

pub const NUM_PARTICLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Particle {
    pub x: i32,
    pub y: i32,
    pub visibility: i32,
}

impl Particle {
    /// Ignores values outside `0..=100`.
    pub fn set_visibility(&mut self, v: i32) {
        if (0..=100).contains(&v) {
            self.visibility = v;
        }
    }
}

/// Fixed pool of particles trailing a movable source. Spent particles are
/// recycled at the source instead of being reallocated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParticleSystem {
    pub particles: [Particle; NUM_PARTICLES],
    pub source: GameObject,
}

impl ParticleSystem {
    /// Every particle starts at the source with a random visibility in `0..100`.
    pub fn new(source_x: i32, source_y: i32, rng: &mut Lcg32) -> Self {
        let particles = std::array::from_fn(|_| Particle {
            x: source_x,
            y: source_y,
            visibility: rng.below(100) as i32,
        });
        Self {
            particles,
            source: GameObject::new(SpriteId::SOURCE, source_x, source_y, 1, 1),
        }
    }

    /// Moves the source, then jitters and fades every particle. Returns the
    /// number of particles recycled this step.
    pub fn step(&mut self, dx: i32, dy: i32, rng: &mut Lcg32) -> usize {
        self.source.x += dx;
        self.source.y += dy;
        let mut recycled = 0;
        for p in self.particles.iter_mut() {
            p.x += rng.jitter();
            p.y += rng.jitter();
            let v = p.visibility - 1;
            p.set_visibility(v);
            if v <= 0 {
                p.x = self.source.x;
                p.y = self.source.y;
                p.visibility = 100;
                recycled += 1;
            }
        }
        recycled
    }
}
