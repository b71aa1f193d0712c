//! Replaying the case analysis on balanced fractional cuts.
//!
//! ```bash
//! cargo run --release -p hardcut --example case_analysis
//! ```

use hardcut::geometry::ball_piece_area_lower;
use hardcut::{build_model, generate_regular, FractionalCut, VertexCut};

fn main() -> hardcut::Result<()> {
    let eps = hardcut::DEFAULT_EPSILON;
    let g = generate_regular(8, 3, 1)?;
    let model = build_model(g, 2)?;

    // Every cell split down the middle: all cells are cut cells, and the
    // crude isoperimetric floor per cell certifies the bound.
    let floor = ball_piece_area_lower(eps * model.params().vertex_volume)?;
    let half = FractionalCut::new(vec![0.5; 8], eps, Some(vec![floor; 8]))?;
    println!("all-half cut:\n{}", model.case_analysis(&half)?.to_text());

    // A binary cut with no area data: the split has nothing to certify,
    // so everything lands on the expander side of the argument.
    let s = VertexCut::from_indices(8, &[0, 1, 2]);
    let binary = FractionalCut::from_binary(&s, eps, None)?;
    println!("binary cut, no areas:\n{}", model.case_analysis(&binary)?.to_text());

    // The same cut with each severed hole's disc attributed to its cell on
    // the small side: those cells are expensive enough to certify directly.
    let mut areas = vec![0.0; 8];
    for &(u, v) in model.graph().edges() {
        if s.contains(u) != s.contains(v) {
            let owner = if s.contains(u) { u } else { v };
            areas[owner] += model.params().cut_disc_area;
        }
    }
    let attributed = FractionalCut::from_binary(&s, eps, Some(areas))?;
    println!("binary cut, attributed areas:\n{}", model.case_analysis(&attributed)?.to_text());
    Ok(())
}
