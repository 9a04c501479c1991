//! Induces an n-ary bracket [x₁,…,xₙ]_φ from a Hom-Lie bracket and an even
//! (n−2)-cochain φ, checking the cochain conditions first.
//!
//! ```text
//! cargo run --example induced_nary_bracket
//! ```

use hnk::constructions::{check_phi_conditions, induced_nary_bracket, induced_nary_poisson};
use hnk::fixtures;
use hnk::nary::{check_n_hom_lie, check_nambu_identity, check_nary_poisson};
use hnk::scalar::int;

fn main() -> Result<(), hnk::Error> {
    // A cochain satisfying both conditions: the induced bracket is 3-Hom-Lie.
    let l = fixtures::seed_lie();
    let phi = fixtures::seed_phi(l.space());
    println!("{}", check_phi_conditions(&l, &phi)?);
    let nambu = induced_nary_bracket(&l, &phi)?;
    println!("{}", check_n_hom_lie(&nambu)?);

    let p = fixtures::seed_poisson();
    let induced = induced_nary_poisson(&p, &fixtures::seed_phi(p.space()))?;
    println!("{}", check_nary_poisson(&induced)?);

    // φ(e1) = 1 on [e2,e2] = 2e1 violates the annihilation condition, and the
    // induced ternary bracket indeed fails the fundamental identity.
    let l = fixtures::odd_square_lie(int(1));
    let phi = fixtures::phi_first(l.space());
    println!("{}", check_phi_conditions(&l, &phi)?);
    println!("{}", check_nambu_identity(&induced_nary_bracket(&l, &phi)?)?);
    Ok(())
}
