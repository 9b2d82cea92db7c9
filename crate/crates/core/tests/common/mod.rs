//! Seeded generators of Fano polygons shared by the integration tests.
#![allow(dead_code)]

use fano_core::constructions::refine_lattice;
use fano_core::reference::projective_plane;
use fano_core::{LatticePoint, LatticePolygon, UnimodularMap};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn primitive_point<R: Rng>(rng: &mut R, radius: i64) -> LatticePoint {
    loop {
        let p = LatticePoint::new(rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius));
        if p.is_primitive() {
            return p;
        }
    }
}

/// Hull of `count` random primitive points, retried until Fano.
pub fn fano_with<R: Rng>(rng: &mut R, radius: i64, count: usize) -> LatticePolygon {
    loop {
        let pts: Vec<LatticePoint> = (0..count).map(|_| primitive_point(rng, radius)).collect();
        if let Ok(p) = LatticePolygon::conv(&pts) {
            if p.is_fano() {
                return p;
            }
        }
    }
}

pub fn fano<R: Rng>(rng: &mut R) -> LatticePolygon {
    let radius = rng.gen_range(1..=6);
    let count = rng.gen_range(3..=7);
    fano_with(rng, radius, count)
}

pub fn fano_triangle<R: Rng>(rng: &mut R) -> LatticePolygon {
    loop {
        let radius = rng.gen_range(1..=7);
        let p = fano_with(rng, radius, 3);
        if p.vertex_count() == 3 {
            return p;
        }
    }
}

/// Product of random shears, with a reflection half the time.
pub fn unimodular<R: Rng>(rng: &mut R) -> UnimodularMap {
    let mut m = UnimodularMap::from_rows([[1, 0], [0, 1]]).unwrap();
    for _ in 0..rng.gen_range(1..=5) {
        let t = *[-2, -1, 1, 2].choose(rng).unwrap();
        let e = if rng.gen_bool(0.5) { [[1, t], [0, 1]] } else { [[1, 0], [t, 1]] };
        m = m.compose(&UnimodularMap::from_rows(e).unwrap());
    }
    if rng.gen_bool(0.5) {
        m = m.compose(&UnimodularMap::from_rows([[0, 1], [1, 0]]).unwrap());
    }
    m
}

/// Orbit of a few random points under a finite group with only the origin
/// fixed, in random coordinates.
pub fn symmetric_fano<R: Rng>(rng: &mut R) -> LatticePolygon {
    let gens = [[[-1, 0], [0, -1]], [[0, -1], [1, -1]], [[0, -1], [1, 0]], [[1, -1], [1, 0]]];
    loop {
        let g = UnimodularMap::from_rows(*gens.choose(rng).unwrap()).unwrap();
        let mut pts = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut p = primitive_point(rng, 4);
            for _ in 0..6 {
                pts.push(p);
                p = g.apply(p);
            }
        }
        if let Ok(p) = LatticePolygon::conv(&pts) {
            if p.is_fano() {
                return p.transform(&unimodular(rng));
            }
        }
    }
}

/// The projective plane triangle rewritten in a random refined lattice,
/// retried until Fano.
pub fn ke_triangle<R: Rng>(rng: &mut R) -> LatticePolygon {
    loop {
        let k = rng.gen_range(1..=40);
        let v = LatticePoint::new(rng.gen_range(0..k), rng.gen_range(0..k));
        let r = refine_lattice(&projective_plane(), k, v).unwrap();
        if r.fano {
            return r.polygon.transform(&unimodular(rng));
        }
    }
}
