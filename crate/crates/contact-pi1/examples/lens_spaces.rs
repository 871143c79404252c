//! Fundamental groups of lens spaces from their moment cones.
//!
//! The cone over the moment image of L(p, q) has inward normals (1, 0) and
//! (-q, p). Both independent routes must produce the cyclic group of order p.

use contact_pi1::cone::MomentCone;
use contact_pi1::lattice::IntVector;
use contact_pi1::pi1::{pi1_lattice_quotient, pi1_ray_determinants};

fn main() -> contact_pi1::Result<()> {
    println!("moment cones {{(1,0), (-q,p)}} for lens spaces L(p, q)\n");
    println!("{:>4} {:>4} {:>12} {:>12}", "p", "q", "thmB", "lerman");
    for (p, q) in [(1i64, 0i64), (2, 1), (3, 1), (5, 2), (7, 3), (12, 5), (30, 11)] {
        let normals = vec![IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[-q, p])];
        let (cone, _) = MomentCone::build(normals, 2)?;
        let ray_route = pi1_ray_determinants(&cone)?;
        let quotient_route = pi1_lattice_quotient(&cone)?;
        assert_eq!(ray_route, quotient_route);
        println!("{p:>4} {q:>4} {:>12} {:>12}", ray_route.to_string(), quotient_route.to_string());
    }
    Ok(())
}
