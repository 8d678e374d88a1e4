//! Seeded random draws from the parameter families.

use discord_core::density::build_state;
use discord_core::discord::Method;
use discord_core::{BlochParams, Vec3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent ChaCha8 stream `stream` of `seed`.
pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn vec_in_box<R: Rng>(rng: &mut R, half: f64) -> Vec3 {
    Vec3::new(rng.gen_range(-half..=half), rng.gen_range(-half..=half), rng.gen_range(-half..=half))
}

/// Uniform direction.
pub fn unit<R: Rng>(rng: &mut R) -> Vec3 {
    loop {
        let v = vec_in_box(rng, 1.0);
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v * (1.0 / n);
        }
    }
}

fn rejection<R: Rng>(rng: &mut R, mut draw: impl FnMut(&mut R) -> BlochParams) -> BlochParams {
    loop {
        let p = draw(rng);
        if build_state(&p).is_ok() {
            return p;
        }
    }
}

/// Any physical member of the family.
pub fn physical<R: Rng>(rng: &mut R) -> BlochParams {
    rejection(rng, |g| BlochParams { r: vec_in_box(g, 0.6), s: vec_in_box(g, 0.6), c: vec_in_box(g, 0.6) })
}

/// `s = 0`, `c₁ = c₂ = 0`.
pub fn invariant<R: Rng>(rng: &mut R) -> BlochParams {
    rejection(rng, |g| BlochParams {
        r: vec_in_box(g, 0.7),
        s: Vec3::ZERO,
        c: Vec3::new(0.0, 0.0, g.gen_range(-0.9..0.9)),
    })
}

/// A physical draw from the family a closed form covers. Returns `None`
/// for [`Method::Numeric`], which has no family.
pub fn family<R: Rng>(method: Method, rng: &mut R) -> Option<BlochParams> {
    let iso = |c: f64| Vec3::new(c, c, c);
    Some(match method {
        Method::Numeric => return None,
        Method::Theorem1 => {
            rejection(rng, |g| BlochParams { r: vec_in_box(g, 0.7), s: Vec3::ZERO, c: iso(g.gen_range(-0.9..0.4)) })
        }
        Method::Theorem1CEqR => {
            let c = rng.gen_range(0.01..=1.0 / (1.0 + 5f64.sqrt()));
            BlochParams { r: unit(rng) * c, s: Vec3::ZERO, c: iso(c) }
        }
        Method::Werner => BlochParams { r: Vec3::ZERO, s: Vec3::ZERO, c: iso(rng.gen_range(-1.0..=1.0 / 3.0)) },
        Method::R0Isotropic => {
            rejection(rng, |g| BlochParams { r: Vec3::ZERO, s: vec_in_box(g, 0.7), c: iso(g.gen_range(-0.9..0.4)) })
        }
        Method::Theorem2Zero => invariant(rng),
        Method::Theorem2Formula => rejection(rng, |g| BlochParams {
            r: Vec3::ZERO,
            s: vec_in_box(g, 0.7),
            c: Vec3::new(0.0, 0.0, g.gen_range(-0.9..0.9)),
        }),
        Method::Theorem3 => rejection(rng, |g| {
            let c = g.gen_range(-0.6..0.6);
            BlochParams { r: vec_in_box(g, 0.6), s: Vec3::ZERO, c: Vec3::new(c, c, 0.0) }
        }),
    })
}
