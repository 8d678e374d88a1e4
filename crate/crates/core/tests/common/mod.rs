#![allow(dead_code)]

use discord_core::density::build_state;
use discord_core::{BlochParams, Vec3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn vec_in_box<R: Rng>(rng: &mut R, half: f64) -> Vec3 {
    Vec3::new(rng.gen_range(-half..half), rng.gen_range(-half..half), rng.gen_range(-half..half))
}

fn accept<R: Rng>(rng: &mut R, mut draw: impl FnMut(&mut R) -> BlochParams) -> BlochParams {
    loop {
        let p = draw(rng);
        if build_state(&p).is_ok() {
            return p;
        }
    }
}

/// Any physical member of the family.
pub fn physical<R: Rng>(rng: &mut R) -> BlochParams {
    accept(rng, |g| BlochParams { r: vec_in_box(g, 0.6), s: vec_in_box(g, 0.6), c: vec_in_box(g, 0.6) })
}

/// `s = 0`, `c₁ = c₂ = c₃`.
pub fn theorem1<R: Rng>(rng: &mut R) -> BlochParams {
    accept(rng, |g| {
        let c = g.gen_range(-0.9..0.4);
        BlochParams { r: vec_in_box(g, 0.7), s: Vec3::ZERO, c: Vec3::new(c, c, c) }
    })
}

/// `r = 0`, `c₁ = c₂ = c₃`.
pub fn eq214<R: Rng>(rng: &mut R) -> BlochParams {
    accept(rng, |g| {
        let c = g.gen_range(-0.9..0.4);
        BlochParams { r: Vec3::ZERO, s: vec_in_box(g, 0.7), c: Vec3::new(c, c, c) }
    })
}

/// `s = 0`, `c₁ = c₂ = 0`.
pub fn theorem2_zero<R: Rng>(rng: &mut R) -> BlochParams {
    accept(rng, |g| BlochParams {
        r: vec_in_box(g, 0.7),
        s: Vec3::ZERO,
        c: Vec3::new(0.0, 0.0, g.gen_range(-0.9..0.9)),
    })
}

/// `s = 0`, `c₃ = 0`, `c₁ = c₂`.
pub fn theorem3<R: Rng>(rng: &mut R) -> BlochParams {
    accept(rng, |g| {
        let c = g.gen_range(-0.6..0.6);
        BlochParams { r: vec_in_box(g, 0.6), s: Vec3::ZERO, c: Vec3::new(c, c, 0.0) }
    })
}

pub fn unit<R: Rng>(rng: &mut R) -> Vec3 {
    loop {
        let v = vec_in_box(rng, 1.0);
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v * (1.0 / n);
        }
    }
}
