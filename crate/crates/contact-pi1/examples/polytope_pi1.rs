//! The edge-length route to pi_1 on integral Delzant polytopes.
//!
//! For a segment [0, p] the group is Z/p; for a dilated simplex k*Delta^n it
//! is Z/k. Non-Delzant or non-integral polytopes are refused with a typed
//! error instead of a wrong answer.

use num_bigint::BigInt;
use num_rational::BigRational;

use contact_pi1::lattice::IntVector;
use contact_pi1::polytope::{pi1_edge_lengths, segment, unit_simplex, RationalPolytope};

fn main() -> contact_pi1::Result<()> {
    for p in [1i64, 2, 5, 12] {
        let g = pi1_edge_lengths(&segment(&BigInt::from(p)))?;
        println!("segment [0,{p}]          pi1 = {g}");
    }

    for (n, k) in [(2usize, 1i64), (2, 3), (3, 2), (3, 5)] {
        let (dilated, _) = unit_simplex(n).dilate(&BigInt::from(k))?;
        let g = pi1_edge_lengths(&dilated)?;
        println!("{k} * Delta^{n}           pi1 = {g}");
    }

    // Products multiply the spaces but gcd the orders.
    let (box_2_4, _) = segment(&BigInt::from(2)).product(&segment(&BigInt::from(4)))?;
    println!("[0,2] x [0,4]         pi1 = {}", pi1_edge_lengths(&box_2_4)?);

    // A triangle with a vertex of determinant 2 is integral but not Delzant.
    let halfspaces = vec![
        (IntVector::from_i64(&[1, 0]), BigRational::from_integer(BigInt::from(0))),
        (IntVector::from_i64(&[0, 1]), BigRational::from_integer(BigInt::from(0))),
        (IntVector::from_i64(&[-1, -2]), BigRational::from_integer(BigInt::from(-2))),
    ];
    let (sharp, _) = RationalPolytope::from_halfspaces(2, halfspaces)?;
    match pi1_edge_lengths(&sharp) {
        Err(e) => println!("conv{{(0,0),(2,0),(0,1)}}  refused: {e}"),
        Ok(g) => println!("unexpected success: {g}"),
    }
    Ok(())
}
