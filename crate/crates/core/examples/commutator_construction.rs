//! Builds the super-commutator bracket of a Hom-associative superalgebra and
//! verifies the resulting Hom-Lie and Hom-Poisson structures.
//!
//! ```text
//! cargo run --example commutator_construction
//! ```

use hnk::binary::{check_hom_lie, check_hom_poisson};
use hnk::constructions::{commutator_bracket, commutator_poisson};
use hnk::fixtures;

fn main() -> Result<(), hnk::Error> {
    let a = fixtures::example_1_2();
    let lie = commutator_bracket(&a)?;
    println!("bracket [x,y] = xy − (−1)^|x||y| yx:");
    for (t, v) in lie.bracket().entries() {
        let labels: Vec<&str> = t.iter().map(|&i| lie.space().label(i)).collect();
        println!("  [{}] = {}", labels.join(","), lie.space().render(&v));
    }
    println!("{}", check_hom_lie(&lie));

    // Together with the original product this is a (non-commutative)
    // Hom-Poisson superalgebra.
    let p = commutator_poisson(&fixtures::twisted_exterior())?;
    println!("{}", check_hom_poisson(&p));
    Ok(())
}
