//! Seeded Lloyd k-means on a handful of RGB points.
//!
//! cargo run --example kmeans

use palette_fis::clustering::{run_kmeans, InitMethod, KMeansConfig, Point3};

fn main() -> palette_fis::Result<()> {
    let points = [
        Point3::new(250.0, 250.0, 250.0),
        Point3::new(245.0, 248.0, 252.0),
        Point3::new(20.0, 24.0, 30.0),
        Point3::new(14.0, 18.0, 22.0),
        Point3::new(230.0, 40.0, 30.0),
        Point3::new(220.0, 30.0, 45.0),
        Point3::new(200.0, 60.0, 40.0),
    ];
    for init in [InitMethod::Random, InitMethod::KMeansPlusPlus] {
        let config = KMeansConfig { k: 3, seed: 42, init, ..Default::default() };
        let result = run_kmeans(&points, &config)?;
        println!("{init:?}: {} iterations, converged = {}", result.iterations, result.converged);
        for (c, size) in result.centroids.iter().zip(result.cluster_sizes()) {
            println!("  centroid ({:6.1}, {:6.1}, {:6.1})  {size} points", c.0[0], c.0[1], c.0[2]);
        }
        let history: Vec<String> = result.objective_history.iter().map(|j| format!("{j:.1}")).collect();
        println!("  objective per iteration: {}", history.join(" -> "));
    }
    Ok(())
}
