//! Seeded Lloyd's k-means over points in three dimensions.
//!
//! Each iteration assigns every point to its nearest centroid (ties go to the
//! lowest index) and then moves each centroid to the mean of its members. The
//! loop stops once no centroid moves further than `tolerance`, or after
//! `max_iterations` updates. Initial centroids are distinct input points drawn
//! without replacement by [`PinnedRng`], so results are reproducible across
//! platforms for a given seed.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::PinnedRng;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point3(pub [f64; 3]);

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self([x, y, z])
    }

    fn bits(&self) -> [u64; 3] {
        // Fold -0.0 into 0.0 so equal coordinates dedupe together.
        self.0.map(|c| (c + 0.0).to_bits())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InitMethod {
    /// Uniform sampling of k distinct input points.
    #[default]
    Random,
    /// k-means++ seeding (D² weighting).
    KMeansPlusPlus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KMeansConfig {
    pub k: usize,
    pub max_iterations: usize,
    /// Largest centroid displacement still counted as converged.
    pub tolerance: f64,
    pub seed: u64,
    pub init: InitMethod,
}

impl Default for KMeansConfig {
    fn default() -> Self {
        Self { k: 3, max_iterations: 100, tolerance: 1.0, seed: 42, init: InitMethod::Random }
    }
}

impl KMeansConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Config("k must be at least 1".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::Config("max_iterations must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance < 0.0 {
            return Err(Error::Config(format!("tolerance must be non-negative, got {}", self.tolerance)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusteringResult {
    pub centroids: Vec<Point3>,
    pub assignments: Vec<usize>,
    /// Sum of squared distances from each point to its assigned centroid.
    pub objective: f64,
    /// Number of centroid updates performed.
    pub iterations: usize,
    pub converged: bool,
    /// Objective after the initial assignment and after every update.
    pub objective_history: Vec<f64>,
}

impl ClusteringResult {
    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.centroids.len()];
        for &a in &self.assignments {
            sizes[a] += 1;
        }
        sizes
    }
}

pub fn squared_distance(a: Point3, b: Point3) -> f64 {
    a.0.iter().zip(b.0.iter()).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Distinct points in order of first appearance.
pub fn distinct_points(points: &[Point3]) -> Vec<Point3> {
    let mut seen = HashSet::with_capacity(points.len().min(1 << 16));
    points.iter().copied().filter(|p| seen.insert(p.bits())).collect()
}

/// Picks `k` distinct points uniformly without replacement.
pub fn init_centroids(points: &[Point3], k: usize, seed: u64) -> Result<Vec<Point3>> {
    let distinct = distinct_points(points);
    if k == 0 || k > distinct.len() {
        return Err(Error::InsufficientPoints { requested: k, distinct: distinct.len() });
    }
    let mut rng = PinnedRng::new(seed);
    Ok(rng.sample_indices(distinct.len(), k).into_iter().map(|i| distinct[i]).collect())
}

/// k-means++ seeding over distinct points.
pub fn init_centroids_plus_plus(points: &[Point3], k: usize, seed: u64) -> Result<Vec<Point3>> {
    let distinct = distinct_points(points);
    if k == 0 || k > distinct.len() {
        return Err(Error::InsufficientPoints { requested: k, distinct: distinct.len() });
    }
    let mut rng = PinnedRng::new(seed);
    let mut centroids = vec![distinct[rng.below(distinct.len() as u64) as usize]];
    let mut nearest: Vec<f64> = distinct.iter().map(|&p| squared_distance(p, centroids[0])).collect();
    while centroids.len() < k {
        let total: f64 = nearest.iter().sum();
        let mut target = rng.unit_f64() * total;
        let mut pick = nearest.iter().rposition(|&d| d > 0.0).unwrap_or(0);
        for (i, &d) in nearest.iter().enumerate() {
            if d > 0.0 && target < d {
                pick = i;
                break;
            }
            target -= d;
        }
        let c = distinct[pick];
        centroids.push(c);
        for (d, &p) in nearest.iter_mut().zip(&distinct) {
            *d = d.min(squared_distance(p, c));
        }
    }
    Ok(centroids)
}

fn nearest(point: Point3, centroids: &[Point3]) -> (usize, f64) {
    let mut best = (0, squared_distance(point, centroids[0]));
    for (i, &c) in centroids.iter().enumerate().skip(1) {
        let d = squared_distance(point, c);
        if d < best.1 {
            best = (i, d);
        }
    }
    best
}

/// Index of the nearest centroid for every point.
pub fn assign(points: &[Point3], centroids: &[Point3]) -> Vec<usize> {
    assert!(!centroids.is_empty(), "assign needs at least one centroid");
    points.iter().map(|&p| nearest(p, centroids).0).collect()
}

/// Component-wise member means.
///
/// A cluster left empty is moved onto the point farthest from its own
/// centroid in `previous`, which is then claimed by the next assignment.
pub fn update_centroids(points: &[Point3], assignments: &[usize], previous: &[Point3]) -> Vec<Point3> {
    let k = previous.len();
    let mut sums = vec![[0.0f64; 3]; k];
    let mut counts = vec![0usize; k];
    for (p, &a) in points.iter().zip(assignments) {
        for (s, c) in sums[a].iter_mut().zip(p.0) {
            *s += c;
        }
        counts[a] += 1;
    }
    let mut centroids: Vec<Point3> = sums
        .iter()
        .zip(&counts)
        .zip(previous)
        .map(|((s, &n), &prev)| if n == 0 { prev } else { Point3(s.map(|v| v / n as f64)) })
        .collect();

    let mut taken: HashSet<usize> = HashSet::new();
    for empty in (0..k).filter(|&i| counts[i] == 0) {
        let far = points
            .iter()
            .zip(assignments)
            .enumerate()
            .filter(|(i, _)| !taken.contains(i))
            .map(|(i, (&p, &a))| (i, squared_distance(p, previous[a])))
            .fold(None, |best: Option<(usize, f64)>, (i, d)| match best {
                Some((_, bd)) if bd >= d => best,
                _ => Some((i, d)),
            });
        if let Some((i, _)) = far {
            taken.insert(i);
            centroids[empty] = points[i];
        }
    }
    centroids
}

pub fn objective(points: &[Point3], assignments: &[usize], centroids: &[Point3]) -> f64 {
    points.iter().zip(assignments).map(|(&p, &a)| squared_distance(p, centroids[a])).sum()
}

pub fn run_kmeans(points: &[Point3], config: &KMeansConfig) -> Result<ClusteringResult> {
    config.validate()?;
    let mut centroids = match config.init {
        InitMethod::Random => init_centroids(points, config.k, config.seed)?,
        InitMethod::KMeansPlusPlus => init_centroids_plus_plus(points, config.k, config.seed)?,
    };
    let mut assignments = assign(points, &centroids);
    let mut history = vec![objective(points, &assignments, &centroids)];
    let mut iterations = 0;
    let mut converged = false;

    while iterations < config.max_iterations {
        let updated = update_centroids(points, &assignments, &centroids);
        let shift = centroids.iter().zip(&updated).map(|(&a, &b)| squared_distance(a, b).sqrt()).fold(0.0, f64::max);
        centroids = updated;
        assignments = assign(points, &centroids);
        history.push(objective(points, &assignments, &centroids));
        iterations += 1;
        if shift <= config.tolerance {
            converged = true;
            break;
        }
    }

    Ok(ClusteringResult {
        objective: *history.last().expect("history is never empty"),
        centroids,
        assignments,
        iterations,
        converged,
        objective_history: history,
    })
}
