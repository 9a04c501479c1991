//! Pins n−2 arguments of an n-ary bracket to obtain a binary bracket, and
//! reports whether the pinned elements satisfy the reduction conditions.
//!
//! ```text
//! cargo run --example reduction
//! ```

use hnk::binary::{check_hom_lie, check_hom_poisson};
use hnk::constructions::{reduce_bracket, reduce_nambu_bracket};
use hnk::fixtures;

fn main() -> Result<(), hnk::Error> {
    let nambu = fixtures::seed_ternary();
    let s = nambu.space();

    // e1 is even and α-fixed: the reduction is a Hom-Lie superalgebra.
    let reduced = reduce_nambu_bracket(&nambu, &[s.basis(0)])?;
    println!("{}", reduced.conditions);
    println!("{}", check_hom_lie(&reduced.algebra));

    // e2 is odd and not α-fixed: both conditions are reported as failing.
    let reduced = reduce_nambu_bracket(&nambu, &[s.basis(1)])?;
    println!("{}", reduced.conditions);

    let p = fixtures::seed_ternary_poisson();
    let reduced = reduce_bracket(&p, &[p.space().basis(0)])?;
    println!("{}", check_hom_poisson(&reduced.algebra));
    Ok(())
}
