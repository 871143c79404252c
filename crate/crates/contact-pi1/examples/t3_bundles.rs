//! Principal T^3-bundles over S^2: the free case of the classification.
//!
//! When the moment cone is all of R^3 the manifold is a principal torus
//! bundle determined by an integral Euler class (a, b, c); pi_1 depends only
//! on k = gcd(|a|, |b|, |c|) and pi_2 detects the trivial class.

use num_bigint::BigInt;

use contact_pi1::pi1::{compute_pi1_bundle, Method};

fn main() -> contact_pi1::Result<()> {
    println!("{:>12}  {:>12} {:>8}", "euler class", "pi1", "pi2");
    for class in [[2i64, 4, 6], [0, 0, 0], [1, 5, 7], [-3, 6, 9], [0, 0, 5]] {
        let bundle = [
            BigInt::from(class[0]),
            BigInt::from(class[1]),
            BigInt::from(class[2]),
        ];
        let report = compute_pi1_bundle(&bundle, &Method::ALL)?;
        let pi2 = report
            .pi2
            .as_ref()
            .map(|g| g.to_string())
            .unwrap_or_else(|| "-".to_string());
        println!(
            "{:>12}  {:>12} {:>8}",
            format!("({},{},{})", class[0], class[1], class[2]),
            report.pi1.to_string(),
            pi2
        );
    }
    Ok(())
}
