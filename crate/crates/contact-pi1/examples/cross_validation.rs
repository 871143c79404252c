//! Seeded cross-validation of the three methods, in process.
//!
//! Every trial applies a random unimodular lattice automorphism to a known
//! good cone, or a random dilation/product to a known Delzant polytope, and
//! requires all applicable methods to land on the same group. A failure would
//! come with a minimized reproduction document.

use contact_pi1::cli::crossval::{run_crossval, CrossvalOptions};

fn main() {
    let mut opts = CrossvalOptions::new(60, 7);
    opts.dim = (2, 6);
    opts.facets = (2, 24);
    let summary = run_crossval(&opts);
    print!("{}", summary.render());
    if summary.ok() {
        println!("all trials agree");
    } else {
        println!("disagreements found");
        std::process::exit(2);
    }
}
