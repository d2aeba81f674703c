//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use std::f64::consts::TAU;

use cgw_core::config::Configuration;
use cgw_core::disk::Circle;
use rand::Rng;

pub const EPS: f64 = 1e-9;

/// Circles with centers in the unit square; some are points.
pub fn random_circles<R: Rng>(rng: &mut R, n: usize, max_r: f64) -> Vec<Circle<f64>> {
    (0..n)
        .map(|_| {
            let r = if rng.gen_bool(0.25) { 0.0 } else { rng.gen_range(0.0..max_r) };
            Circle::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), r).unwrap()
        })
        .collect()
}

/// Small integer coordinates and radii: produces exact tangencies and collinearities.
pub fn grid_circles<R: Rng>(rng: &mut R, n: usize) -> Vec<Circle<f64>> {
    (0..n)
        .map(|_| {
            Circle::new(
                rng.gen_range(0..4) as f64 * 2.0,
                rng.gen_range(0..3) as f64 * 2.0,
                rng.gen_range(0..2) as f64,
            )
            .unwrap()
        })
        .collect()
}

pub fn random_conf<R: Rng>(rng: &mut R, n: usize) -> Configuration<f64> {
    Configuration::from_circles(random_circles(rng, n, 0.45)).unwrap()
}

fn gap(e: &Circle<f64>, others: &[Circle<f64>], t: f64) -> f64 {
    let (c, s) = (t.cos(), t.sin());
    let h = |d: &Circle<f64>| d.cx * c + d.cy * s + d.r;
    others.iter().map(h).fold(f64::NEG_INFINITY, f64::max) - h(e)
}

/// Dense angular sampling of `min_θ max_i h_i(θ) - h_e(θ)`, refined by a
/// golden-section search around every sampled local minimum.
pub fn sampled_margin(e: &Circle<f64>, others: &[Circle<f64>], samples: usize) -> f64 {
    let step = TAU / samples as f64;
    let values: Vec<f64> = (0..samples).map(|i| gap(e, others, i as f64 * step)).collect();
    let mut best = f64::INFINITY;
    for i in 0..samples {
        let (prev, next) = (values[(i + samples - 1) % samples], values[(i + 1) % samples]);
        if values[i] > prev || values[i] > next {
            best = best.min(values[i]);
            continue;
        }
        let (mut lo, mut hi) = ((i as f64 - 1.0) * step, (i as f64 + 1.0) * step);
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        for _ in 0..80 {
            let m1 = hi - phi * (hi - lo);
            let m2 = lo + phi * (hi - lo);
            if gap(e, others, m1) < gap(e, others, m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        best = best.min(values[i]).min(gap(e, others, (lo + hi) / 2.0));
    }
    best
}
