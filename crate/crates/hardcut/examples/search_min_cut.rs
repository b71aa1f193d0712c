//! Exact, sweep, and randomized balanced min-cut search on one model.
//!
//! ```bash
//! cargo run --release -p hardcut --example search_min_cut
//! ```

use hardcut::{
    build_model, exact_balanced_min_cut, generate_regular, randomized_search, spectral_sweep_cut,
};

fn main() -> hardcut::Result<()> {
    let eps = hardcut::DEFAULT_EPSILON;
    let g = generate_regular(16, 3, 3)?;
    let model = build_model(g, 2)?;
    let bound = model.theorem_bound(eps)?;
    println!("certified c = {:.6}, theorem bound = {bound:.3e}\n", model.expansion().constant());

    let exact = exact_balanced_min_cut(&model, eps)?;
    let sweep = spectral_sweep_cut(&model, eps)?;
    let random = randomized_search(&model, eps, 50, 0)?;

    for r in [&exact, &sweep, &random] {
        println!(
            "{:<15} area = {:.6}  size = {:>2}  evaluations = {:>6}  ratio to bound = {:.0}",
            r.method.name(),
            r.area,
            r.cut.size(),
            r.evaluations,
            r.area / bound
        );
    }
    println!("\nexact winner: {}", exact.cut);
    println!("sweep never beats exact: {}", sweep.area >= exact.area);
    println!("random restarts match exact here: {}", random.area == exact.area);
    Ok(())
}
