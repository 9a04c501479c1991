//! Evaluates the Koszul sign exponents on a sample tuple and shows
//! super-alternation of a completed bracket.
//!
//! ```text
//! cargo run --example sign_conventions
//! ```

use hnk::graded::{koszul_sign, ParityBook, SignKind};
use hnk::{MultiLinearMap, SuperSpace, Vector};

fn main() -> Result<(), hnk::Error> {
    let s = SuperSpace::from_bits(&[0, 1, 1]);
    let tuple = [1, 0, 2, 1];
    let book = ParityBook::from_tuple(&s, &tuple);
    let labels: Vec<&str> = tuple.iter().map(|&i| s.label(i)).collect();
    println!("X = ({}) with parities {:?}", labels.join(","), tuple.map(|i| s.parity(i).bit()));
    println!("|X| = {}", koszul_sign(&book, SignKind::Total)?.bit());
    println!("|X|_2^3 = {}", koszul_sign(&book, SignKind::Range(2, 3))?.bit());
    for i in 1..=4 {
        for j in i + 1..=4 {
            println!("γ_{i}{j} = {}", koszul_sign(&book, SignKind::Gamma(i, j))?.bit());
        }
    }

    // Listing [e2,e3] = e1 and completing: [e3,e2] = +e1 since both are odd,
    // while an even–odd swap changes sign.
    let mut generators = MultiLinearMap::zero(&s, 2);
    generators.set(&[1, 2], &Vector::from_ints(&[1, 0, 0]));
    generators.set(&[0, 1], &Vector::from_ints(&[0, 0, 1]));
    let full = generators.skew_completed()?;
    for t in [[1, 2], [2, 1], [0, 1], [1, 0]] {
        println!("[{},{}] = {}", s.label(t[0]), s.label(t[1]), s.render(&full.value(&t)));
    }
    Ok(())
}
