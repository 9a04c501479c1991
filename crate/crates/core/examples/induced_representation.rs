//! Induces a representation of the n-ary bracket from a representation of
//! the binary one, and shows a case where the Poisson compatibility of the
//! induced representation fails although every hypothesis holds.
//!
//! ```text
//! cargo run --example induced_representation
//! ```

use hnk::constructions::{check_phi_conditions, check_phi_poisson};
use hnk::fixtures;
use hnk::nary::check_nary_poisson;
use hnk::representations::*;
use hnk::scalar::int;

fn main() -> Result<(), hnk::Error> {
    let l = fixtures::seed_lie();
    let rep = induced_rep(&l, &fixtures::adjoint_rep(&l), &fixtures::seed_phi(l.space()))?;
    println!("{}", check_rep_n_hom_lie(&fixtures::seed_ternary(), &rep)?);

    // Cochains failing the conditions are refused.
    let l = fixtures::odd_square_lie(int(1));
    if let Err(e) = induced_rep(&l, &fixtures::adjoint_rep(&l), &fixtures::phi_first(l.space())) {
        println!("refused: {e}");
    }

    // Counterexample: [e2,e2] = 2e1 with the unital product, φ(e2,e2) = 1.
    let p = fixtures::odd_square_poisson(int(1));
    let phi = fixtures::phi_odd_pair();
    println!("hypotheses:");
    println!("{}", check_rep_poisson(&p, &fixtures::poisson_self_rep(&p))?);
    println!("{}", check_phi_conditions(p.lie(), &phi)?);
    println!("{}", check_phi_poisson(&p, &phi)?);
    let (algebra, rep) = fixtures::induced_poisson_rep_counterexample();
    println!("{}", check_nary_poisson(&algebra)?);
    println!("conclusion:");
    println!("{}", check_rep_nary_poisson(&algebra, &rep)?);
    println!("{}", check_nary_poisson(&semidirect_nary_poisson(&algebra, &rep)?)?);
    Ok(())
}
