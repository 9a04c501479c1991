//! Checks the defining identities of the built-in structures and prints the
//! verdicts, including a failing one with its witness.
//!
//! ```text
//! cargo run --example verify_structures
//! ```

use hnk::binary::{check_adjoint_identity, check_hom_associative, check_hom_lie, check_hom_poisson, check_multiplicative};
use hnk::fixtures;
use hnk::nary::{check_n_hom_lie, check_nambu_identity, check_nary_poisson};
use hnk::scalar::int;

fn main() -> Result<(), hnk::Error> {
    let a = fixtures::example_1_2();
    println!("3-dimensional Hom-associative superalgebra");
    println!("{}", check_hom_associative(&a));

    for lambda in [1, 2] {
        let lie = fixtures::odd_square_lie(int(lambda));
        println!("[e2,e2] = 2λe1, α = λ·id with λ = {lambda}");
        println!("{}", check_hom_lie(&lie));
        println!("{}", check_adjoint_identity(&lie));
        // α = λ·id is multiplicative only when λ² = λ.
        println!("{}", check_multiplicative(&lie));
    }

    let p = fixtures::example_1_8();
    println!("Non-commutative Hom-Poisson superalgebra");
    println!("{}", check_hom_poisson(&p));

    let ternary = fixtures::odd_square_ternary();
    println!("Ternary bracket induced by φ(e1) = 1 (the fundamental identity fails)");
    println!("{}", check_nambu_identity(&ternary)?);

    let quaternary = fixtures::odd_square_quaternary_poisson();
    println!("4-ary Nambu–Poisson superalgebra");
    println!("{}", check_n_hom_lie(quaternary.base())?);
    println!("{}", check_nary_poisson(&quaternary)?);
    Ok(())
}
