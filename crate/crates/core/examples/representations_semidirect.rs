//! Checks representations directly and through their semidirect products,
//! which agree verdict for verdict.
//!
//! ```text
//! cargo run --example representations_semidirect
//! ```

use hnk::binary::{check_hom_associative, check_hom_lie, check_hom_poisson};
use hnk::fixtures;
use hnk::nary::check_n_hom_lie;
use hnk::representations::*;
use hnk::scalar::int;

fn main() -> Result<(), hnk::Error> {
    // The module conditions include super-commutativity, so the regular
    // representation is taken on the commutative reading.
    let a = fixtures::example_1_2_commutative();
    let regular = fixtures::regular_rep(&a);
    println!("{}", check_rep_assoc(&a, &regular)?);
    println!("{}", check_hom_associative(&semidirect_assoc(&a, &regular)?));

    let lie = fixtures::odd_square_lie(int(1));
    let adjoint = fixtures::adjoint_rep(&lie);
    println!("{}", check_rep_lie(&lie, &adjoint)?);
    println!("{}", check_hom_lie(&semidirect_lie(&lie, &adjoint)?));

    // A commutative Hom-Poisson superalgebra acts on itself …
    let p = fixtures::odd_square_poisson(int(1));
    let rep = fixtures::poisson_self_rep(&p);
    println!("{}", check_rep_poisson(&p, &rep)?);
    println!("{}", check_hom_poisson(&semidirect_poisson(&p, &rep)?));
    // … a non-commutative one does not, and neither test hides it.
    let p = fixtures::example_1_8();
    let rep = fixtures::poisson_self_rep(&p);
    println!("{}", check_rep_poisson(&p, &rep)?);
    println!("{}", check_hom_poisson(&semidirect_poisson(&p, &rep)?));

    let nambu = fixtures::seed_ternary();
    let rep = fixtures::nary_adjoint_rep(&nambu)?;
    println!("{}", check_rep_n_hom_lie(&nambu, &rep)?);
    println!("{}", check_n_hom_lie(&semidirect_n_hom_lie(&nambu, &rep)?)?);
    Ok(())
}
