//! From a good cone to a transverse polytope.
//!
//! A Reeb vector lying in the interior of the cone is moved onto the last
//! coordinate axis by a unimodular change of lattice basis; slicing the
//! reparametrized cone at height one produces the rational polytope whose
//! combinatorics carry the rest of the computation.

use num_rational::BigRational;

use contact_pi1::cone::MomentCone;
use contact_pi1::lattice::IntVector;

fn render(point: &[BigRational]) -> String {
    let coords: Vec<String> = point.iter().map(|x| x.to_string()).collect();
    format!("({})", coords.join(", "))
}

fn main() -> contact_pi1::Result<()> {
    // Cone over a square, the moment cone of S^2 x S^3 (p = 1 twist class).
    let normals = vec![
        IntVector::from_i64(&[1, 0, 0]),
        IntVector::from_i64(&[0, 1, 0]),
        IntVector::from_i64(&[-1, 0, 1]),
        IntVector::from_i64(&[0, -1, 1]),
    ];
    let (cone, _) = MomentCone::build(normals, 3)?;

    let reeb = cone.reeb_vector()?;
    println!("derived reeb vector: {reeb}");

    let (reparametrized, basis_change) = cone.reparametrize_to_last_axis(&reeb)?;
    println!("lattice basis change:");
    for i in 0..basis_change.rows() {
        println!("    {}", basis_change.row(i));
    }

    let (polytope, warnings) = reparametrized.slice_at_height_one()?;
    for w in warnings {
        println!("warning: {w}");
    }
    println!("slice has {} halfspaces, dim {}", polytope.halfspaces().len(), polytope.dim());
    for (normal, offset) in polytope.halfspaces() {
        println!("    <x, {normal}> >= {offset}");
    }
    println!("vertices:");
    for v in polytope.vertices() {
        println!("    {}  integral: {}", render(&v.point), v.is_integral());
    }
    println!("integral: {}   delzant: {}", polytope.is_integral(), polytope.is_delzant().0);
    Ok(())
}
