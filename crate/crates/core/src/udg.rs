//! Unit-disk graphs and the seeded random-geometric corpus generator.
//!
//! Points are drawn from SplitMix64 (Steele, Lea and Flood's 64-bit
//! counter-based generator, reference code at
//! <http://xoshiro.di.unimi.it/splitmix64.c>). The generator is seeded with
//! the raw `u64` seed; point `i` takes draws `2i` and `2i + 1` as its x and y
//! coordinates, each mapped to `[0, 1)` as `(draw >> 11) * 2^-53`. A port
//! that follows these three rules reproduces every corpus bit for bit.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UdgInstance {
    pub points: Vec<(f64, f64)>,
    pub radius: f64,
}

impl UdgInstance {
    pub fn new(points: Vec<(f64, f64)>, radius: f64) -> Result<Self, GraphError> {
        validate(&points, radius)?;
        Ok(UdgInstance { points, radius })
    }

    pub fn graph(&self) -> Graph {
        // Validated on construction; fields are public so re-check cheaply.
        from_points(&self.points, self.radius).expect("instance holds valid geometry")
    }
}

fn validate(points: &[(f64, f64)], radius: f64) -> Result<(), GraphError> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(GraphError::InvalidRadius(radius));
    }
    if let Some(i) = points
        .iter()
        .position(|&(x, y)| !(x.is_finite() && y.is_finite()))
    {
        return Err(GraphError::NonFiniteCoordinate(i));
    }
    Ok(())
}

/// Closed-disk unit-disk graph: `u` and `v` are adjacent iff their
/// euclidean distance is at most `radius`.
pub fn from_points(points: &[(f64, f64)], radius: f64) -> Result<Graph, GraphError> {
    validate(points, radius)?;
    let mut edges = Vec::new();
    for (u, &(xu, yu)) in points.iter().enumerate() {
        for (v, &(xv, yv)) in points.iter().enumerate().skip(u + 1) {
            let (dx, dy) = (xu - xv, yu - yv);
            if (dx * dx + dy * dy).sqrt() <= radius {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(points.len(), &edges)
}

fn unit_interval(draw: u64) -> f64 {
    (draw >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// `n` points uniform in the unit square, reproducible from `seed`.
pub fn random_geometric(n: usize, radius: f64, seed: u64) -> Result<UdgInstance, GraphError> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| {
            let x = unit_interval(rng.next_u64());
            let y = unit_interval(rng.next_u64());
            (x, y)
        })
        .collect();
    UdgInstance::new(points, radius)
}
