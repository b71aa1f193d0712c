//! The closed-form identities and the constant-chain checker.
//!
//! ```bash
//! cargo run --release -p hardcut --example verify_formulas
//! ```

use hardcut::geometry::{
    ball_volume, euclidean_isoperimetric_area, hole_cap_height, hole_wet_area_lower,
    pants_residual_area, sphere_area, spherical_cap_area, verify_constant_chain,
};

fn main() -> hardcut::Result<()> {
    let n = 1;
    let eps = hardcut::DEFAULT_EPSILON;
    let r = 1.0 / f64::from(n);

    println!("sphere area at r = {r}: {}", sphere_area(r)?);
    let cap = spherical_cap_area(r, hole_cap_height(r))?;
    println!("one hole cap: {cap}");
    let residual = pants_residual_area(n)?;
    println!("three-holed residual: {residual}");
    println!(
        "identity sphere - 3 caps - residual = {:.3e}",
        sphere_area(r)? - 3.0 * cap - residual
    );

    println!("\nround ball of volume v minimizes boundary area:");
    let v = ball_volume(r)?;
    println!(
        "isoperimetric({v:.6}) = {:.6} vs sphere {:.6}",
        euclidean_isoperimetric_area(v)?,
        sphere_area(r)?
    );

    println!("\nhole wet-area floor: {} (> 1/n^2 = {})", hole_wet_area_lower(n)?, 1.0 / (f64::from(n).powi(2)));

    println!("\nconstant chain at n = {n}, eps = {eps}:");
    let chain = verify_constant_chain(n, eps)?;
    print!("{chain}");
    println!(
        "\nthe stated projection constant is too strong, yet the conclusion survives: \
         floor {:.6} >= target {:.6}",
        chain.recomputed_final_floor, chain.target
    );
    Ok(())
}
