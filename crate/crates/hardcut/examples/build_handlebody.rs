//! Assembling the thickened-expander model and inspecting its constants.
//!
//! ```bash
//! cargo run --release -p hardcut --example build_handlebody
//! ```

use hardcut::{build_model, generate_regular, VertexCut};

fn main() -> hardcut::Result<()> {
    // Eight cells at scale n = 2 fill the whole ball volume 4 pi / 3.
    let g = generate_regular(8, 3, 1)?;
    let model = build_model(g, 2)?;
    let p = model.params();
    println!("n = {}", p.n);
    println!("vertex_volume = {}", p.vertex_volume);
    println!("hole_cap_area = {}", p.hole_cap_area);
    println!("cut_disc_area = {}", p.cut_disc_area);
    println!("total_volume = {} (4 pi / 3 = {})", p.total_volume, 4.0 * std::f64::consts::PI / 3.0);
    println!("certified c = {} ({})", model.expansion().constant(), model.expansion().method_name());

    let cut = VertexCut::from_indices(8, &[0, 1, 2]);
    let (u1, u2) = model.side_volumes(&cut);
    println!("\ncut {{0,1,2}}: side volumes ({u1:.6}, {u2:.6})");
    println!("severed-disc area = {}", model.discrete_cut_area(&cut)?);

    // Normalizing the doubled solid to volume 1 rescales lengths.
    let sphere = model.normalize(0.5)?;
    println!(
        "\nafter sphere normalization: length factor = {:.6}, cut area = {:.6}",
        sphere.params().normalization_length_factor,
        sphere.discrete_cut_area(&cut)?
    );

    println!("\nserialized model:\n{}", model.to_text()?);
    Ok(())
}
