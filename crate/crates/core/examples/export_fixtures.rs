//! Writes the built-in fixtures as algebra files.
//!
//! ```text
//! cargo run --example export_fixtures -- <directory>
//! ```
//!
//! Every file is produced by the same deterministic serializer the CLI uses,
//! so re-running the example reproduces the shipped `fixtures/` directory
//! byte for byte.

use hnk::file::{cochain_file, map_images, LoadedAlgebra, MapFile, Presentation};
use hnk::fixtures;
use hnk::scalar::int;
use std::path::PathBuf;

fn described(presentation: Presentation, comment: &str) -> LoadedAlgebra {
    let mut loaded = LoadedAlgebra::new(presentation);
    loaded.comment = Some(comment.to_string());
    loaded
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir)?;

    let mut seed_lie = described(
        Presentation::Lie(fixtures::seed_lie()),
        "Hom-Lie superalgebra [e2,e2] = e3, alpha = diag(1,2,4); phi satisfies both cochain conditions",
    );
    seed_lie.cochains.insert("phi".into(), fixtures::seed_phi(fixtures::seed_lie().space()));

    let lie = fixtures::odd_square_lie(int(1));
    let mut lie_with_phi = described(
        Presentation::Lie(lie.clone()),
        "[e2,e2] = 2e1 with alpha = id and the cochain phi(e1) = 1",
    );
    lie_with_phi.cochains.insert("phi".into(), fixtures::phi_first(lie.space()));

    let mut corrupted = fixtures::example_1_8();
    let mut bracket = corrupted.bracket().clone();
    bracket.set(&[1, 0], &corrupted.space().zero());
    corrupted = hnk::binary::HomPoissonSuperalgebra::new(bracket, corrupted.mu().clone(), corrupted.alpha().clone())?;

    let files = vec![
        (
            "example-1-2",
            described(
                Presentation::Associative(fixtures::example_1_2()),
                "Hom-associative superalgebra of dimension 3 with parities (0,0,1)",
            ),
        ),
        (
            "example-1-4",
            described(Presentation::Lie(lie.clone()), "[e2,e2] = 2 lambda e1, alpha = lambda id, lambda = 1"),
        ),
        (
            "example-1-4-poisson",
            described(
                Presentation::Poisson(fixtures::odd_square_poisson(int(1))),
                "the bracket [e2,e2] = 2e1 with the unital super-commutative product",
            ),
        ),
        (
            "example-1-4-phi",
            lie_with_phi,
        ),
        (
            "example-1-8",
            described(
                Presentation::Poisson(fixtures::example_1_8()),
                "non-commutative Hom-Poisson superalgebra of dimension 3",
            ),
        ),
        (
            "example-1-8-corrupted",
            described(
                Presentation::Poisson(corrupted),
                "the same data with [e2,e1] removed: the bracket is no longer super-skew-symmetric",
            ),
        ),
        (
            "zero",
            described(Presentation::Lie(fixtures::zero_lie()), "the zero bracket with alpha = id"),
        ),
        (
            "twisted-exterior",
            described(
                Presentation::Associative(fixtures::twisted_exterior()),
                "exterior superalgebra on two odd generators twisted by diag(1,2,3,6)",
            ),
        ),
        ("seed-lie", seed_lie),
        (
            "seed-poisson",
            described(
                Presentation::Poisson(fixtures::seed_poisson()),
                "seed-lie extended by a central even idempotent e4",
            ),
        ),
        (
            "seed-ternary",
            described(
                Presentation::Nambu(fixtures::seed_ternary()),
                "ternary bracket induced on seed-lie by phi(e1) = 1",
            ),
        ),
        (
            "seed-ternary-poisson",
            described(
                Presentation::NambuPoisson(fixtures::seed_ternary_poisson()),
                "ternary Hom-Nambu-Poisson superalgebra induced on seed-poisson by phi(e1) = 1",
            ),
        ),
        (
            "quaternary-poisson",
            described(
                Presentation::NambuPoisson(fixtures::odd_square_quaternary_poisson()),
                "4-ary structure induced on example-1-4-poisson by phi(e2,e2) = 1",
            ),
        ),
    ];
    for (name, loaded) in files {
        std::fs::write(dir.join(format!("{name}.json")), loaded.to_json())?;
    }

    let write_json = |name: &str, value: &dyn erased::Json| -> std::io::Result<()> {
        std::fs::write(dir.join(name), value.json())
    };
    write_json("phi.json", &cochain_file(&fixtures::phi_first(lie.space())))?;
    write_json("phi-pair.json", &cochain_file(&fixtures::phi_odd_pair()))?;
    let r = fixtures::rb_diag_1_2();
    write_json("R.json", &MapFile { images: map_images(&r.map) })?;
    println!("wrote fixtures to {}", dir.display());
    Ok(())
}

mod erased {
    pub trait Json {
        fn json(&self) -> String;
    }
    impl<T: serde::Serialize> Json for T {
        fn json(&self) -> String {
            let mut s = serde_json::to_string_pretty(self).expect("serializes");
            s.push('\n');
            s
        }
    }
}
