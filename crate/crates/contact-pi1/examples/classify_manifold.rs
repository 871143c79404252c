//! Classification of a contact toric manifold from its moment cone.
//!
//! The lineality space of the cone decides everything: zero lineality with a
//! good cone is the Reeb-type case, positive lineality gives torus-times-sphere
//! products, and the whole space corresponds to principal torus bundles.

use contact_pi1::cone::MomentCone;
use contact_pi1::lattice::IntVector;

fn show(name: &str, normals: &[&[i64]], dim: usize) -> contact_pi1::Result<()> {
    let vs: Vec<IntVector> = normals.iter().map(|r| IntVector::from_i64(r)).collect();
    let (cone, _) = MomentCone::build(vs, dim)?;
    let v = cone.validate();
    println!(
        "{name:<24} lineality {}  strictly convex {}  good {}  ->  {}",
        v.lineality_dim,
        v.strictly_convex,
        v.good,
        cone.classify()
    );
    Ok(())
}

fn main() -> contact_pi1::Result<()> {
    show("lens cone L(3,1)", &[&[1, 0], &[-1, 3]], 2)?;
    show("non-good cone", &[&[1, 0, 0], &[1, 2, 0], &[-1, -1, 1]], 3)?;
    show("half space, dim 2", &[&[1, 0]], 2)?;
    show("lineality 2, dim 4", &[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4)?;
    show("whole space, dim 2", &[], 2)?;
    show("whole space, dim 3", &[], 3)?;
    Ok(())
}
