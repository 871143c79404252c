//! Morse theory on the edge graph of a simple polytope.
//!
//! A generic linear functional orders the vertices; the index of a vertex is
//! twice the number of edge-neighbors below it. Index-2 vertices each carry a
//! unique downward edge, and those edges generate the relations for pi_1.

use contact_pi1::polytope::hirzebruch_trapezoid;

fn main() -> contact_pi1::Result<()> {
    let (p, _) = hirzebruch_trapezoid(1, 2, 5)?;
    println!("trapezoid with {} vertices, {} halfspaces", p.vertices().len(), p.halfspaces().len());

    let x = p.choose_generic_functional();
    println!("generic functional: {x}");

    let morse = p.morse_indices(&x)?;
    println!("vertex indices:");
    for (v, index) in p.vertices().iter().zip(&morse.indices) {
        let coords: Vec<String> = v.point.iter().map(|c| c.to_string()).collect();
        println!("    ({})  index {index}", coords.join(", "));
    }

    println!("down-edges at index-2 vertices:");
    for (vertex, edge) in &morse.index2_down_edges {
        println!(
            "    vertex {vertex}: direction {}, lattice length {}",
            edge.direction,
            edge.lattice_length
                .as_ref()
                .map(|l| l.to_string())
                .unwrap_or_else(|| "-".to_string())
        );
    }

    // The count of index-2 vertices is determined by the face numbers alone.
    let expected = p.halfspaces().len() - p.dim();
    let got = morse.indices.iter().filter(|&&i| i == 2).count();
    println!("index-2 vertices: {got} (halfspaces - dim = {expected})");
    Ok(())
}
