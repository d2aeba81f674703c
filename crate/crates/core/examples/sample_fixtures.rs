//! Random search for circle representations of every small geometry.
//!
//! For each n in 2..=4 this samples random configurations, keeps the most
//! robust one per isomorphism class (largest smallest containment margin),
//! relabels it onto the canonical family and prints the fixture list as JSON.
//!
//!     cargo run --release -p cgw-core --example sample_fixtures > crates/core/fixtures/representations.json

use std::collections::BTreeMap;

use cgw_core::catalog::{ConfigurationFile, Fixture};
use cgw_core::config::Configuration;
use cgw_core::disk::{disk_in_hull, Circle};
use cgw_core::enumerate::enumerate_geometries;
use cgw_core::sets::{canonical_with_permutation, GroundSet};
use cgw_core::verify::{verify_full, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 400_000;
const EPS: f64 = 1e-9;

/// Smallest |margin| over all containment decisions, in normalized coordinates.
fn robustness(conf: &Configuration<f64>) -> f64 {
    let norm = conf.normalized();
    let ground = norm.ground();
    let mut worst = f64::INFINITY;
    for y in ground.subsets().filter(|y| !y.is_empty()) {
        let hull: Vec<Circle<f64>> = y.elements().map(|i| *norm.circle(i)).collect();
        for x in ground.full().difference(y).elements() {
            let m = disk_in_hull(norm.circle(x), &hull, EPS).unwrap().margin;
            worst = worst.min(m.abs());
        }
    }
    worst
}

fn random_conf(rng: &mut ChaCha8Rng, n: usize) -> Configuration<f64> {
    let circles = (0..n)
        .map(|_| {
            let r = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.0..0.6) };
            Circle::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), r).unwrap()
        })
        .collect();
    Configuration::from_circles(circles).unwrap()
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut fixtures = Vec::new();
    for n in 2..=4 {
        let ground = GroundSet::new(n).unwrap();
        let classes = enumerate_geometries(ground).unwrap();
        let mut best: BTreeMap<u32, (f64, Configuration<f64>)> = BTreeMap::new();
        for _ in 0..SAMPLES {
            let conf = random_conf(&mut rng, n);
            let induced = conf.induced_alignment(EPS);
            if !induced.is_clean() {
                continue;
            }
            let (canon, perm) = canonical_with_permutation(induced.family, ground);
            let score = robustness(&conf);
            if best.get(&canon.0).is_none_or(|(s, _)| score > *s) {
                best.insert(canon.0, (score, conf.relabel(&perm)));
            }
        }
        for family in &classes {
            let Some((score, conf)) = best.get(&family.0) else {
                eprintln!("n={n}: no representation found for {}", family.0);
                continue;
            };
            let file = ConfigurationFile::from_configuration(conf);
            let parsed = file.to_configuration().unwrap();
            let g = cgw_core::ConvexGeometry::new(ground, *family).unwrap();
            assert_eq!(verify_full(&g, &parsed, EPS).unwrap().verdict, Verdict::Verified);
            eprintln!("n={n} mask {} robustness {score:.4}", family.0);
            fixtures.push(Fixture { n, family_mask: family.0, configuration: file });
        }
    }
    println!("{}", serde_json::to_string_pretty(&fixtures).unwrap());
}
