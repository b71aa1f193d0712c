//! Best-found balanced cut cost versus scale, as a CSV experiment.
//!
//! ```bash
//! cargo run --release -p hardcut --example scaling_experiment
//! ```

use hardcut::harness::{run_scaling, ScalingConfig};

fn main() -> hardcut::Result<()> {
    let cfg = ScalingConfig {
        n_values: vec![2, 4, 6],
        eps: hardcut::DEFAULT_EPSILON,
        seed_count: 3,
        restarts: 20,
        sphere: false,
    };
    let out = run_scaling(&cfg)?;
    print!("{}", out.csv);
    print!("{}", out.summary);

    // The certified lower bound grows with n even while the best cut found
    // at desk scale is dominated by small subgraph pockets.
    for r in &out.records {
        println!(
            "n = {}: area = {:.4}, bound = {:.3e}, ratio = {:.0}",
            r.n,
            r.area.unwrap(),
            r.bound.unwrap(),
            r.ratio.unwrap()
        );
    }
    Ok(())
}
