//! Twists a bracket and a product by Rota–Baxter operators and verifies the
//! twisted structures. An operator that is not Rota–Baxter is refused.
//!
//! ```text
//! cargo run --example rota_baxter_twist
//! ```

use hnk::binary::{check_hom_associative, check_hom_lie};
use hnk::constructions::{check_rota_baxter, twist_by_rota_baxter, RotaBaxterOperator};
use hnk::fixtures;
use hnk::scalar::int;
use hnk::LinearMap;

fn main() -> Result<(), hnk::Error> {
    let lie = fixtures::odd_square_lie(int(1));
    let r = fixtures::rb_diag_1_2();
    println!("{}", check_rota_baxter(&r, &lie)?);
    let twisted = twist_by_rota_baxter(&lie, &r)?;
    println!("[e2,e2]_R = {}", lie.space().render(&twisted.bracket().value(&[1, 1])));
    println!("{}", check_hom_lie(&twisted));

    // R = −λ·id has weight λ for every product.
    let a = fixtures::example_1_2();
    let (map, weight) = fixtures::rb_minus_weight(a.space(), int(3));
    let twisted = twist_by_rota_baxter(&a, &RotaBaxterOperator::associative(map, weight))?;
    println!("{}", check_hom_associative(&twisted));

    let not_rb = RotaBaxterOperator::lie(LinearMap::identity(lie.space()), int(0));
    match twist_by_rota_baxter(&lie, &not_rb) {
        Err(e) => println!("identity of weight 0 refused: {e}"),
        Ok(_) => unreachable!("the identity is not a weight-0 Rota–Baxter operator here"),
    }
    Ok(())
}
