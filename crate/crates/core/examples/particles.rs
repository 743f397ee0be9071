//! A fixed particle pool trailing a moving source.

use acc_kit::rng::Lcg32;
use acc_kit::simkernel::ParticleSystem;

fn main() {
    let mut rng = Lcg32::new(3);
    let mut ps = ParticleSystem::new(100, 100, &mut rng);
    for frame in 0..200 {
        let recycled = ps.step(1, 0, &mut rng);
        if frame % 40 == 0 {
            let mean: i32 = ps.particles.iter().map(|p| p.visibility).sum::<i32>() / ps.particles.len() as i32;
            println!("frame {frame:>3}: source x={} recycled={recycled} mean visibility={mean}", ps.source.x);
        }
    }
}
