//! Odd-dimensional spheres from orthant cones.
//!
//! The positive orthant in R^{n+1} is the moment cone of the standard contact
//! sphere S^{2n+1}, so every method must report a trivial fundamental group.

use contact_pi1::cone::MomentCone;
use contact_pi1::lattice::IntVector;
use contact_pi1::pi1::{compute_pi1_cone, Method, MethodOutcome};

fn main() -> contact_pi1::Result<()> {
    for dim in 2..=6usize {
        let normals: Vec<IntVector> = (0..dim).map(|i| IntVector::unit(dim, i)).collect();
        let (cone, _) = MomentCone::build(normals, dim)?;
        let report = compute_pi1_cone(&cone, None, None, &Method::ALL)?;
        println!(
            "orthant in R^{dim}  (M = S^{})  class {}  pi1 = {}",
            2 * dim - 1,
            report.class,
            report.pi1
        );
        for m in &report.methods {
            match &m.outcome {
                MethodOutcome::Computed(g) => println!("    {:<8} {}", m.method.token(), g),
                MethodOutcome::Skipped { reason } => {
                    println!("    {:<8} skipped: {reason}", m.method.token())
                }
            }
        }
    }
    Ok(())
}
