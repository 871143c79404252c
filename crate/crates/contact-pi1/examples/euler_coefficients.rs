//! Euler coefficients of a good cone.
//!
//! Fixing the lexicographically smallest ray, the determinant of its n facet
//! normals together with each remaining normal gives one integer coefficient
//! per extra facet; the gcd of their absolute values is the order of pi_1.

use contact_pi1::cone::MomentCone;
use contact_pi1::lattice::IntVector;
use contact_pi1::pi1::{euler_coefficients, pi1_ray_determinants};

fn show(name: &str, normals: &[&[i64]], dim: usize) -> contact_pi1::Result<()> {
    let vs: Vec<IntVector> = normals.iter().map(|r| IntVector::from_i64(r)).collect();
    let (cone, _) = MomentCone::build(vs, dim)?;
    let euler = euler_coefficients(&cone)?;
    let coeffs: Vec<String> = euler.coefficients.iter().map(|c| c.to_string()).collect();
    println!("{name}");
    println!("    base ray        {}", euler.base_ray.generator);
    println!("    base facets     {:?}", euler.ordered_first_n);
    println!("    coefficients    ({})", coeffs.join(", "));
    println!("    pi1             {}", pi1_ray_determinants(&cone)?);
    Ok(())
}

fn main() -> contact_pi1::Result<()> {
    // Cone over a square with twist 3: both coefficients are 3.
    show(
        "square cone, p = 3",
        &[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 3], &[0, -1, 3]],
        3,
    )?;
    // The orthant has a single extra facet with a unimodular determinant.
    show("orthant in R^3", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3)?;
    // Cone over the twice-dilated standard triangle.
    show(
        "cone over 2*Delta^2",
        &[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 2]],
        3,
    )?;
    Ok(())
}
