//! Orbifold vertex orders of a non-Delzant slice.
//!
//! When the transverse polytope is rational but not Delzant the quotient is
//! an orbifold: each vertex carries the order |det| of its facet-normal
//! matrix. The report records the orders and their least common multiple
//! while the edge-length method is skipped.

use num_bigint::BigInt;
use num_rational::BigRational;

use contact_pi1::pi1::{compute_pi1_polytope, Method, MethodOutcome};
use contact_pi1::polytope::RationalPolytope;

fn main() -> contact_pi1::Result<()> {
    // Triangle (0,0), (3,0), (0, 3/2): the top vertex is an order-2 point.
    let r = |x: i64| BigRational::from_integer(BigInt::from(x));
    let halfspaces = vec![
        (contact_pi1::lattice::IntVector::from_i64(&[1, 0]), r(0)),
        (contact_pi1::lattice::IntVector::from_i64(&[0, 1]), r(0)),
        (contact_pi1::lattice::IntVector::from_i64(&[-1, -2]), r(-3)),
    ];
    let (triangle, _) = RationalPolytope::from_halfspaces(2, halfspaces)?;

    let orb = triangle.orbifold_vertex_orders()?;
    for (v, order) in triangle.vertices().iter().zip(&orb.orders) {
        let coords: Vec<String> = v.point.iter().map(|c| c.to_string()).collect();
        println!("vertex ({})  order {order}", coords.join(", "));
    }
    println!("m_lcm = {}", orb.m_lcm);

    // The full pipeline still answers through the cone routes.
    let report = compute_pi1_polytope(&triangle, &Method::ALL)?;
    println!("\nclass {}  pi1 = {}", report.class, report.pi1);
    for m in &report.methods {
        match &m.outcome {
            MethodOutcome::Computed(g) => println!("    {:<8} {g}", m.method.token()),
            MethodOutcome::Skipped { reason } => {
                println!("    {:<8} skipped: {reason}", m.method.token())
            }
        }
    }
    Ok(())
}
