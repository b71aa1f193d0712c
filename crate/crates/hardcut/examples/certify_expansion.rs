//! Exact versus spectral expansion certificates.
//!
//! ```bash
//! cargo run --release -p hardcut --example certify_expansion
//! ```

use hardcut::{
    edge_boundary, exact_expansion, generate_regular, spectral_expansion_bound,
    ExpansionCertificate, Multigraph,
};

fn main() -> hardcut::Result<()> {
    // K4: the spectral bound is tight.
    let k4 = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    println!("K4 exact:\n{}", exact_expansion(&k4)?.to_text());
    println!("K4 spectral:\n{}", spectral_expansion_bound(&k4)?.to_text());

    // On random cubic graphs the spectral constant is a certified
    // underestimate of the true expansion.
    for seed in 0..4u64 {
        let g = generate_regular(14, 3, seed)?;
        let exact = exact_expansion(&g)?;
        let spectral = spectral_expansion_bound(&g)?;
        println!(
            "m=14 seed={seed}: exact c = {:.6}, spectral c = {:.6}, gap = {:.6}",
            exact.constant(),
            spectral.constant(),
            exact.constant() - spectral.constant()
        );
        if let ExpansionCertificate::Exact { constant, witness } = &exact {
            let ratio = edge_boundary(&g, witness) as f64 / witness.size() as f64;
            println!("  witness {} attains {ratio} = {constant}", witness);
        }
    }
    Ok(())
}
