//! Frozen reference values from an independent brute-force optimizer
//! (dense sphere grid followed by Nelder–Mead, double precision).

mod common;

use discord_core::discord::{discord, discord_numeric, Method};
use discord_core::measurement::{damped_g_objective, g_objective};
use discord_core::sphere::maximize_on_sphere;
use discord_core::{BlochParams, Error, SphereOptConfig, Vec3};

struct Fixture {
    name: &'static str,
    p: BlochParams,
    discord: f64,
    max_g: f64,
    method: Method,
}

fn fixtures() -> Vec<Fixture> {
    let iso = |c: f64| [c, c, c];
    vec![
        Fixture {
            name: "isotropic, s = 0",
            p: BlochParams::new([0.3, 0.0, 0.0], [0.0; 3], iso(0.2)),
            discord: 0.079930388964,
            max_g: 0.097973710777,
            method: Method::Theorem1,
        },
        Fixture {
            name: "isotropic, r = 0",
            p: BlochParams::new([0.0; 3], [0.2, 0.0, 0.0], iso(0.2)),
            discord: 0.077348018093,
            max_g: 0.030305144839,
            method: Method::R0Isotropic,
        },
        Fixture {
            name: "r = 0, c = (0, 0, c3)",
            p: BlochParams::new([0.0; 3], [0.1, 0.2, 0.2], [0.0, 0.0, 0.3]),
            discord: 0.001218675605,
            max_g: 0.069101947287,
            method: Method::Numeric,
        },
        Fixture {
            name: "planar correlations, r along z",
            p: BlochParams::new([0.0, 0.0, 0.4], [0.0; 3], [0.2, 0.2, 0.0]),
            discord: 0.032372816515,
            max_g: 0.149510374898,
            method: Method::Theorem3,
        },
        Fixture {
            name: "example 1",
            p: BlochParams::new([0.0; 3], [0.1, 0.2, 0.2], iso(0.3)),
            discord: 0.250941243303,
            max_g: 0.073104007932,
            method: Method::R0Isotropic,
        },
        Fixture {
            name: "example 2",
            p: BlochParams::new([0.1, 0.2, 0.0], [0.0; 3], [0.3, 0.3, 0.0]),
            discord: 0.075271613074,
            max_g: 0.106092712711,
            method: Method::Theorem3,
        },
    ]
}

#[test]
fn numeric_discord_matches_reference() {
    let cfg = SphereOptConfig::for_discord();
    for f in fixtures() {
        let rep = discord_numeric(&f.p, &cfg).unwrap();
        assert!((rep.discord - f.discord).abs() <= 1e-6, "{}: {} vs {}", f.name, rep.discord, f.discord);
    }
}

#[test]
fn max_g_matches_reference() {
    let cfg = SphereOptConfig::for_discord();
    for f in fixtures() {
        let best = maximize_on_sphere(|z| g_objective(&f.p, z), &cfg).unwrap();
        assert!((best.value - f.max_g).abs() <= 1e-6, "{}: {} vs {}", f.name, best.value, f.max_g);
    }
}

#[test]
fn dispatched_discord_matches_reference() {
    let cfg = SphereOptConfig::for_discord();
    for f in fixtures() {
        let rep = discord(&f.p, &cfg).unwrap();
        assert_eq!(rep.method, f.method, "{}", f.name);
        assert!((rep.discord - f.discord).abs() <= 1e-6, "{}: {} vs {}", f.name, rep.discord, f.discord);
    }
}

#[test]
fn example_spectra() {
    let cfg = SphereOptConfig::for_discord();
    let printed = [[0.4, 0.3427, 0.25, 0.0073], [0.4185, 0.2685, 0.2315, 0.0815]];
    for (f, want) in fixtures()[4..].iter().zip(printed) {
        let rep = discord(&f.p, &cfg).unwrap();
        for (got, want) in rep.spectrum.iter().zip(want) {
            assert!((got - want).abs() <= 5e-4, "{}: {:?}", f.name, rep.spectrum);
        }
    }
}

#[test]
fn damped_objective_reference() {
    let p = BlochParams::new([0.1, 0.2, 0.0], [0.0; 3], [0.3, 0.3, 0.0]);
    let best = maximize_on_sphere(|z| damped_g_objective(&p, 0.2, z), &SphereOptConfig::for_discord()).unwrap();
    assert!((best.value - 0.072851826722).abs() <= 1e-6, "{}", best.value);
}

#[test]
fn unphysical_state_is_rejected_everywhere() {
    let p = BlochParams::new([0.9, 0.0, 0.0], [0.9, 0.0, 0.0], [0.9, 0.9, 0.9]);
    let cfg = SphereOptConfig::for_discord();
    assert!(matches!(discord(&p, &cfg), Err(Error::Physicality { .. })));
    assert!(matches!(discord_numeric(&p, &cfg), Err(Error::Physicality { .. })));
}

#[test]
fn trivial_state() {
    let p = BlochParams::new(Vec3::ZERO, Vec3::ZERO, Vec3::ZERO);
    let rep = discord(&p, &SphereOptConfig::for_discord()).unwrap();
    assert_eq!(rep.method, Method::Werner);
    assert!(rep.discord.abs() < 1e-15 && rep.mutual_info.abs() < 1e-15);
}
