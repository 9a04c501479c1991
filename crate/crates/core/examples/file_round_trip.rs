//! Loads an algebra file, checks it, and writes it back byte for byte.
//! Also shows a parse error naming the offending entry.
//!
//! ```text
//! cargo run --example file_round_trip [-- path/to/algebra.json]
//! ```

use hnk::file::{load_algebra, parse_algebra_str, Presentation};
use hnk::binary::check_hom_poisson;
use std::path::PathBuf;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/example-1-8.json"));
    let (loaded, digest) = load_algebra(&path, false)?;
    println!("{}: kind {}, sha256 {digest}", path.display(), loaded.presentation.kind().as_str());
    if let Presentation::Poisson(p) = &loaded.presentation {
        println!("{}", check_hom_poisson(p));
    }
    let original = std::fs::read_to_string(&path)?;
    println!("serializer reproduces the file: {}", loaded.to_json() == original);

    let bad = r#"{"kind": "hom-lie", "basis": [{"label": "e1", "parity": 0}],
        "products": {"bracket": [{"args": ["e1", "e9"], "value": {"e1": "1"}}]},
        "maps": {"alpha": {"e1": {"e1": "1"}}}}"#;
    match parse_algebra_str(bad, false) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("e9 is not a basis label"),
    }
    Ok(())
}
