//! Ready-made structures, cochains, operators and representations.
//!
//! These are the worked examples used throughout the documentation, the
//! examples directory and the test suites. Every constructor builds the
//! presentation only; whether it satisfies a given identity is always left
//! to the `check_*` functions.
//!
//! Basis labels are `e1, e2, …`; parities are listed in the docs of each
//! constructor as `(p₁, p₂, …)`.

use crate::binary::{HomAssociativeSuperalgebra, HomLieSuperalgebra, HomPoissonSuperalgebra};
use crate::constructions::{induced_nary_bracket, induced_nary_poisson, RotaBaxterOperator};
use crate::error::Error;
use crate::graded::{Cochain, LinearMap, MultiLinearMap, SuperSpace, Tuples, Vector};
use crate::nary::{NaryHomNambuPoissonSuperalgebra, NaryHomNambuSuperalgebra};
use crate::representations::{induced_rep, Action, BinaryRepresentation, HomModule, NaryRepresentation};
use crate::scalar::{int, sign, Scalar};

fn bilinear(space: &SuperSpace, entries: &[(usize, usize, &[i64])]) -> MultiLinearMap {
    MultiLinearMap::from_entries(
        space,
        2,
        entries.iter().map(|(i, j, v)| (vec![*i, *j], Vector::from_ints(v))),
    )
    .expect("fixture entries are well formed")
}

fn diag(space: &SuperSpace, d: &[i64]) -> LinearMap {
    let d: Vec<Scalar> = d.iter().map(|&x| int(x)).collect();
    LinearMap::diagonal(space, &d).expect("fixture diagonal has the space dimension")
}

fn images(space: &SuperSpace, cols: &[&[i64]]) -> LinearMap {
    let v: Vec<Vector> = cols.iter().map(|c| Vector::from_ints(c)).collect();
    LinearMap::from_images(space, space, &v).expect("fixture images have the space dimension")
}

// ---------------------------------------------------------------------------
// Binary structures.
// ---------------------------------------------------------------------------

/// Three-dimensional Hom-associative superalgebra, parities `(0, 0, 1)`:
/// `μ(e1,e2) = −e1`, `μ(e2,e2) = e1 + e2`, `α(e1) = −e1`,
/// `α(e2) = e1 + e2`, `α(e3) = 0`. Not super-commutative.
pub fn example_1_2() -> HomAssociativeSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 0, 1]);
    let mu = bilinear(&s, &[(0, 1, &[-1, 0, 0]), (1, 1, &[1, 1, 0])]);
    let alpha = images(&s, &[&[-1, 0, 0], &[1, 1, 0], &[0, 0, 0]]);
    HomAssociativeSuperalgebra::new(mu, alpha).expect("shapes agree")
}

/// [`example_1_2`] with the symmetric entry `μ(e2,e1) = −e1` added, claimed
/// super-commutative.
pub fn example_1_2_commutative() -> HomAssociativeSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 0, 1]);
    let mu = bilinear(&s, &[(0, 1, &[-1, 0, 0]), (1, 0, &[-1, 0, 0]), (1, 1, &[1, 1, 0])]);
    let alpha = images(&s, &[&[-1, 0, 0], &[1, 1, 0], &[0, 0, 0]]);
    HomAssociativeSuperalgebra::new(mu, alpha)
        .expect("shapes agree")
        .with_commutative(true)
}

/// Two-dimensional Hom-Lie superalgebra, parities `(0, 1)`:
/// `[e2,e2] = 2λe1`, `α = λ·id`.
pub fn odd_square_lie(lambda: Scalar) -> HomLieSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 1]);
    let mut bracket = MultiLinearMap::zero(&s, 2);
    bracket.set(&[1, 1], &Vector::new(vec![int(2) * &lambda, int(0)]));
    HomLieSuperalgebra::new(bracket, LinearMap::scalar(&s, lambda)).expect("shapes agree")
}

/// The bracket of [`odd_square_lie`] with `λ = 1` and the twist
/// `α = diag(1, −1)`.
pub fn odd_square_lie_twisted() -> HomLieSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 1]);
    let bracket = bilinear(&s, &[(1, 1, &[2, 0])]);
    HomLieSuperalgebra::new(bracket, diag(&s, &[1, -1])).expect("shapes agree")
}

/// [`odd_square_lie`] together with the unital super-commutative product
/// `μ(e1,e1) = e1`, `μ(e1,e2) = μ(e2,e1) = e2`.
pub fn odd_square_poisson(lambda: Scalar) -> HomPoissonSuperalgebra {
    let lie = odd_square_lie(lambda);
    let s = lie.space().clone();
    let mu = bilinear(&s, &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1])]);
    HomPoissonSuperalgebra::new(lie.bracket().clone(), mu, lie.alpha().clone())
        .expect("shapes agree")
        .with_commutative(true)
}

/// Three-dimensional non-commutative Hom-Poisson superalgebra, parities
/// `(0, 0, 1)`: `α(e1) = e1`, `α(e2) = e1 + e2`, `α(e3) = 0`,
/// `μ(e1,e2) = e1`, `μ(e2,e2) = e1 + e2`, `[e1,e2] = −[e2,e1] = e1`.
pub fn example_1_8() -> HomPoissonSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 0, 1]);
    let mu = bilinear(&s, &[(0, 1, &[1, 0, 0]), (1, 1, &[1, 1, 0])]);
    let bracket = bilinear(&s, &[(0, 1, &[1, 0, 0]), (1, 0, &[-1, 0, 0])]);
    let alpha = images(&s, &[&[1, 0, 0], &[1, 1, 0], &[0, 0, 0]]);
    HomPoissonSuperalgebra::new(bracket, mu, alpha).expect("shapes agree")
}

/// The exterior superalgebra on two odd generators, basis
/// `e1 = 1, e2 = θ₁, e3 = θ₂, e4 = θ₁θ₂` (parities `(0, 1, 1, 0)`), twisted
/// by the automorphism `α = diag(1, 2, 3, 6)`: `μ_α = α∘μ`. Super-commutative.
pub fn twisted_exterior() -> HomAssociativeSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 1, 1, 0]);
    let mu = bilinear(
        &s,
        &[
            (0, 0, &[1, 0, 0, 0]),
            (0, 1, &[0, 2, 0, 0]),
            (1, 0, &[0, 2, 0, 0]),
            (0, 2, &[0, 0, 3, 0]),
            (2, 0, &[0, 0, 3, 0]),
            (0, 3, &[0, 0, 0, 6]),
            (3, 0, &[0, 0, 0, 6]),
            (1, 2, &[0, 0, 0, 6]),
            (2, 1, &[0, 0, 0, -6]),
        ],
    );
    HomAssociativeSuperalgebra::new(mu, diag(&s, &[1, 2, 3, 6]))
        .expect("shapes agree")
        .with_commutative(true)
}

/// The zero Hom-Lie superalgebra on parities `(0, 1)` with `α = id`.
pub fn zero_lie() -> HomLieSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 1]);
    HomLieSuperalgebra::new(MultiLinearMap::zero(&s, 2), LinearMap::identity(&s)).expect("shapes agree")
}

/// Three-dimensional Hom-Lie superalgebra, parities `(0, 1, 0)`:
/// `[e2,e2] = e3`, `α = diag(1, 2, 4)`. The cochain [`seed_phi`] satisfies
/// both conditions of the induced-bracket theorem on it.
pub fn seed_lie() -> HomLieSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 1, 0]);
    let bracket = bilinear(&s, &[(1, 1, &[0, 0, 1])]);
    HomLieSuperalgebra::new(bracket, diag(&s, &[1, 2, 4])).expect("shapes agree")
}

/// [`seed_lie`] extended by an even idempotent `e4` (`μ(e4,e4) = e4`,
/// `α(e4) = 0`, central for the bracket): a commutative Hom-Poisson
/// superalgebra, parities `(0, 1, 0, 0)`.
pub fn seed_poisson() -> HomPoissonSuperalgebra {
    let s = SuperSpace::from_bits(&[0, 1, 0, 0]);
    let bracket = bilinear(&s, &[(1, 1, &[0, 0, 1, 0])]);
    let mu = bilinear(&s, &[(3, 3, &[0, 0, 0, 1])]);
    HomPoissonSuperalgebra::new(bracket, mu, diag(&s, &[1, 2, 4, 0]))
        .expect("shapes agree")
        .with_commutative(true)
}

// ---------------------------------------------------------------------------
// Cochains and induced n-ary structures.
// ---------------------------------------------------------------------------

/// The degree-1 cochain with `φ(e1) = 1` and `φ = 0` on the other basis
/// vectors.
pub fn phi_first(space: &SuperSpace) -> Cochain {
    Cochain::from_generators(space, 1, vec![(vec![0], int(1))]).expect("even generator")
}

/// The cochain that drives the seed fixtures (`φ(e1) = 1`).
pub fn seed_phi(space: &SuperSpace) -> Cochain {
    phi_first(space)
}

/// The degree-2 cochain on [`odd_square_lie`]'s space with `φ(e2,e2) = 1`.
pub fn phi_odd_pair() -> Cochain {
    let s = SuperSpace::from_bits(&[0, 1]);
    Cochain::from_generators(&s, 2, vec![(vec![1, 1], int(1))]).expect("even generator")
}

/// The ternary bracket induced on [`odd_square_lie`] (`λ = 1`) by
/// [`phi_first`]: its only generator is `[e1,e2,e2] = 2e1`.
pub fn odd_square_ternary() -> NaryHomNambuSuperalgebra {
    let l = odd_square_lie(int(1));
    induced_nary_bracket(&l, &phi_first(l.space())).expect("even cochain")
}

/// The 4-ary bracket induced on [`odd_square_lie`] (`λ = 1`) by
/// [`phi_odd_pair`]: `[e2,e2,e2,e2] = 12e1`.
pub fn odd_square_quaternary() -> NaryHomNambuSuperalgebra {
    let l = odd_square_lie(int(1));
    induced_nary_bracket(&l, &phi_odd_pair()).expect("even cochain")
}

/// The 4-ary Hom-Nambu–Poisson superalgebra induced on
/// [`odd_square_poisson`] (`λ = 1`) by [`phi_odd_pair`].
pub fn odd_square_quaternary_poisson() -> NaryHomNambuPoissonSuperalgebra {
    induced_nary_poisson(&odd_square_poisson(int(1)), &phi_odd_pair()).expect("even cochain")
}

/// The ternary bracket induced on [`seed_lie`] by [`seed_phi`]:
/// `[e1,e2,e2] = e3` and its super-alternating images.
pub fn seed_ternary() -> NaryHomNambuSuperalgebra {
    let l = seed_lie();
    induced_nary_bracket(&l, &seed_phi(l.space())).expect("even cochain")
}

/// The ternary Hom-Nambu–Poisson superalgebra induced on [`seed_poisson`]
/// by [`seed_phi`].
pub fn seed_ternary_poisson() -> NaryHomNambuPoissonSuperalgebra {
    let p = seed_poisson();
    induced_nary_poisson(&p, &seed_phi(p.space())).expect("even cochain")
}

// ---------------------------------------------------------------------------
// Rota–Baxter operators.
// ---------------------------------------------------------------------------

/// `R = diag(1, 2)` as a weight-0 Rota–Baxter operator for the bracket of
/// [`odd_square_lie`] (`λ = 1`).
pub fn rb_diag_1_2() -> RotaBaxterOperator {
    let s = SuperSpace::from_bits(&[0, 1]);
    RotaBaxterOperator::lie(diag(&s, &[1, 2]), int(0))
}

/// `R = −λ·id`, a Rota–Baxter operator of weight `λ` for any product on
/// `space` (of the requested flavor: associative, Lie, or both).
pub fn rb_minus_weight(space: &SuperSpace, weight: Scalar) -> (LinearMap, Scalar) {
    (LinearMap::scalar(space, -weight.clone()), weight)
}

// ---------------------------------------------------------------------------
// Representations.
// ---------------------------------------------------------------------------

/// The module `(𝒜, α)` of a structure acting on itself.
pub fn self_module(space: &SuperSpace, alpha: &LinearMap) -> HomModule {
    HomModule::new(space.clone(), alpha.clone()).expect("α is an endomorphism")
}

/// The regular representation `η(x) = μ(x,·)` on `(𝒜, α)`.
pub fn regular_rep(a: &HomAssociativeSuperalgebra) -> BinaryRepresentation {
    let eta = Action::regular(a.mu()).expect("binary product");
    BinaryRepresentation::associative(self_module(a.space(), a.alpha()), eta).expect("shapes agree")
}

/// The adjoint representation `ρ(x) = [x,·]` on `(𝒜, α)`.
pub fn adjoint_rep(l: &HomLieSuperalgebra) -> BinaryRepresentation {
    let rho = Action::adjoint(l.bracket()).expect("binary bracket");
    BinaryRepresentation::lie(self_module(l.space(), l.alpha()), rho).expect("shapes agree")
}

/// The pair `(ρ, η) = (ad, regular)` on `(𝒜, α)`.
pub fn poisson_self_rep(p: &HomPoissonSuperalgebra) -> BinaryRepresentation {
    let rho = Action::adjoint(p.bracket()).expect("binary bracket");
    let eta = Action::regular(p.mu()).expect("binary product");
    BinaryRepresentation::poisson(self_module(p.space(), p.alpha()), rho, eta).expect("shapes agree")
}

/// The adjoint representation `ρ(X) = [X,·]` of an n-ary structure with a
/// single twist.
pub fn nary_adjoint_rep(nambu: &NaryHomNambuSuperalgebra) -> Result<NaryRepresentation, Error> {
    let rho = Action::adjoint(nambu.bracket())?;
    NaryRepresentation::new(self_module(nambu.space(), nambu.alpha()?), rho)
}

/// `(ρ, η) = (ad, regular)` for an n-ary Hom-Nambu–Poisson superalgebra.
pub fn nary_poisson_self_rep(p: &NaryHomNambuPoissonSuperalgebra) -> Result<NaryRepresentation, Error> {
    let rho = Action::adjoint(p.bracket())?;
    let eta = Action::regular(p.mu())?;
    NaryRepresentation::with_eta(self_module(p.space(), p.alpha()?), rho, eta)
}

/// The zero action on a trivially twisted copy of `module`.
pub fn zero_action(algebra: &SuperSpace, module: &SuperSpace, slots: usize) -> (HomModule, Action) {
    (HomModule::untwisted(module.clone()), Action::zero(algebra, module, slots))
}

/// Adds `delta` to the matrix entry `(row, col)` of the operator attached to
/// `tuple` and to every super-permutation of `tuple` (with the matching
/// sign), so that a super-alternating action stays super-alternating.
///
/// For a single slot this is a plain one-entry change.
pub fn perturb(action: &Action, tuple: &[usize], row: usize, col: usize, delta: Scalar) -> Result<Action, Error> {
    let s = action.algebra().clone();
    let mut out = action.clone();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for perm in Tuples::uniform(tuple.len(), tuple.len()) {
        let mut used = perm.clone();
        used.sort_unstable();
        used.dedup();
        if used.len() != tuple.len() {
            continue;
        }
        let permuted: Vec<usize> = perm.iter().map(|&k| tuple[k]).collect();
        if seen.contains(&permuted) {
            continue;
        }
        seen.push(permuted.clone());
        // Sign of moving the elements of `tuple` into the order `perm`: each
        // inversion contributes −(−1)^{|a||b|}.
        let mut negative = false;
        for a in 0..perm.len() {
            for b in a + 1..perm.len() {
                if perm[a] > perm[b] {
                    let both_odd = (s.parity(tuple[perm[a]]) * s.parity(tuple[perm[b]])).is_odd();
                    negative ^= !both_odd;
                }
            }
        }
        let current = out.operator(&permuted).entry(row, col).clone();
        out.set_entry(&permuted, row, col, current + sign(negative) * &delta)?;
    }
    Ok(out)
}

/// A named algebra–representation pair used by the equivalence suites.
#[derive(Clone, Debug)]
pub struct RepFixture<S, R> {
    pub name: String,
    pub algebra: S,
    pub rep: R,
    /// Whether the representation was built by a valid construction (as
    /// opposed to deliberately corrupted).
    pub intact: bool,
}

fn fixture<S, R>(name: &str, algebra: S, rep: R, intact: bool) -> RepFixture<S, R> {
    RepFixture { name: name.to_string(), algebra, rep, intact }
}

fn corrupt_binary(rep: &BinaryRepresentation, which: Which, tuple: &[usize], row: usize, col: usize) -> BinaryRepresentation {
    let module = rep.module().clone();
    let bump = |a: &Action| perturb(a, tuple, row, col, int(1)).expect("indices in range");
    match (rep.rho(), rep.eta(), which) {
        (Some(rho), Some(eta), Which::Rho) => BinaryRepresentation::poisson(module, bump(rho), eta.clone()),
        (Some(rho), Some(eta), Which::Eta) => BinaryRepresentation::poisson(module, rho.clone(), bump(eta)),
        (Some(rho), None, _) => BinaryRepresentation::lie(module, bump(rho)),
        (None, Some(eta), _) => BinaryRepresentation::associative(module, bump(eta)),
        _ => unreachable!("a binary representation carries at least one action"),
    }
    .expect("shapes agree")
}

fn corrupt_nary(rep: &NaryRepresentation, which: Which, tuple: &[usize], row: usize, col: usize) -> NaryRepresentation {
    let module = rep.module().clone();
    match (rep.eta(), which) {
        (Some(eta), Which::Eta) => {
            let eta = perturb(eta, tuple, row, col, int(1)).expect("indices in range");
            NaryRepresentation::with_eta(module, rep.rho().clone(), eta)
        }
        (eta, _) => {
            let rho = perturb(rep.rho(), tuple, row, col, int(1)).expect("indices in range");
            match eta {
                Some(eta) => NaryRepresentation::with_eta(module, rho, eta.clone()),
                None => NaryRepresentation::new(module, rho),
            }
        }
    }
    .expect("shapes agree")
}

#[derive(Clone, Copy)]
enum Which {
    Rho,
    Eta,
}

/// Representations of commutative Hom-associative superalgebras: regular
/// representations, a zero representation, and one-entry corruptions.
pub fn assoc_rep_fixtures() -> Vec<RepFixture<HomAssociativeSuperalgebra, BinaryRepresentation>> {
    let ex12 = example_1_2_commutative();
    let ext = twisted_exterior();
    let unit = odd_square_poisson(int(1)).assoc().clone();
    let unit2 = odd_square_poisson(int(2)).assoc().clone();
    let seed = seed_poisson().assoc().clone();
    let (m, z) = zero_action(ext.space(), &SuperSpace::from_bits(&[0, 1]), 1);
    let zero = BinaryRepresentation::associative(m, z).expect("shapes agree");
    vec![
        fixture("regular/example-1-2-commutative", ex12.clone(), regular_rep(&ex12), true),
        fixture("regular/twisted-exterior", ext.clone(), regular_rep(&ext), true),
        fixture("regular/odd-square-unit", unit.clone(), regular_rep(&unit), true),
        fixture("regular/odd-square-unit-2", unit2.clone(), regular_rep(&unit2), true),
        fixture("regular/seed", seed.clone(), regular_rep(&seed), true),
        fixture("zero/twisted-exterior", ext.clone(), zero, true),
        fixture(
            "corrupt/example-1-2-commutative",
            ex12.clone(),
            corrupt_binary(&regular_rep(&ex12), Which::Eta, &[0], 0, 0),
            false,
        ),
        fixture(
            "corrupt/twisted-exterior",
            ext.clone(),
            corrupt_binary(&regular_rep(&ext), Which::Eta, &[1], 3, 2),
            false,
        ),
        fixture(
            "corrupt/odd-square-unit",
            unit.clone(),
            corrupt_binary(&regular_rep(&unit), Which::Eta, &[1], 0, 1),
            false,
        ),
        fixture("corrupt/seed", seed.clone(), corrupt_binary(&regular_rep(&seed), Which::Eta, &[0], 0, 0), false),
    ]
}

/// Representations of Hom-Lie superalgebras: adjoint representations, a
/// zero representation, and one-entry corruptions.
pub fn lie_rep_fixtures() -> Vec<RepFixture<HomLieSuperalgebra, BinaryRepresentation>> {
    let l1 = odd_square_lie(int(1));
    let l2 = odd_square_lie(int(2));
    let tw = odd_square_lie_twisted();
    let seed = seed_lie();
    let (m, z) = zero_action(l1.space(), &SuperSpace::from_bits(&[0, 0, 1]), 1);
    let zero = BinaryRepresentation::lie(m, z).expect("shapes agree");
    vec![
        fixture("adjoint/odd-square-1", l1.clone(), adjoint_rep(&l1), true),
        fixture("adjoint/odd-square-2", l2.clone(), adjoint_rep(&l2), true),
        fixture("adjoint/odd-square-twisted", tw.clone(), adjoint_rep(&tw), true),
        fixture("adjoint/seed", seed.clone(), adjoint_rep(&seed), true),
        fixture("zero/odd-square-1", l1.clone(), zero, true),
        fixture("corrupt/odd-square-1", l1.clone(), corrupt_binary(&adjoint_rep(&l1), Which::Rho, &[0], 0, 0), false),
        fixture("corrupt/odd-square-2", l2.clone(), corrupt_binary(&adjoint_rep(&l2), Which::Rho, &[1], 1, 0), false),
        fixture("corrupt/seed", seed.clone(), corrupt_binary(&adjoint_rep(&seed), Which::Rho, &[2], 0, 0), false),
    ]
}

/// Representations of commutative Hom-Poisson superalgebras: `(ad, regular)`
/// pairs and one-entry corruptions of either action.
pub fn poisson_rep_fixtures() -> Vec<RepFixture<HomPoissonSuperalgebra, BinaryRepresentation>> {
    let p1 = odd_square_poisson(int(1));
    let p2 = odd_square_poisson(int(2));
    let seed = seed_poisson();
    let ext = HomPoissonSuperalgebra::from_parts(
        HomLieSuperalgebra::new(
            MultiLinearMap::zero(twisted_exterior().space(), 2),
            twisted_exterior().alpha().clone(),
        )
        .expect("shapes agree"),
        twisted_exterior(),
    )
    .expect("same twist")
    .with_commutative(true);
    vec![
        fixture("self/odd-square-unit", p1.clone(), poisson_self_rep(&p1), true),
        fixture("self/odd-square-unit-2", p2.clone(), poisson_self_rep(&p2), true),
        fixture("self/seed", seed.clone(), poisson_self_rep(&seed), true),
        fixture("self/twisted-exterior", ext.clone(), poisson_self_rep(&ext), true),
        fixture(
            "corrupt-rho/odd-square-unit",
            p1.clone(),
            corrupt_binary(&poisson_self_rep(&p1), Which::Rho, &[0], 0, 0),
            false,
        ),
        fixture(
            "corrupt-eta/odd-square-unit-2",
            p2.clone(),
            corrupt_binary(&poisson_self_rep(&p2), Which::Eta, &[1], 0, 1),
            false,
        ),
        fixture(
            "corrupt-rho/seed",
            seed.clone(),
            corrupt_binary(&poisson_self_rep(&seed), Which::Rho, &[2], 0, 0),
            false,
        ),
        fixture(
            "corrupt-eta/twisted-exterior",
            ext.clone(),
            corrupt_binary(&poisson_self_rep(&ext), Which::Eta, &[0], 0, 0),
            false,
        ),
    ]
}

/// Representations of n-Hom-Lie superalgebras (`n = 3, 4`): adjoint and
/// induced representations, a zero representation and corruptions that keep
/// `ρ` super-alternating.
pub fn n_hom_lie_rep_fixtures() -> Vec<RepFixture<NaryHomNambuSuperalgebra, NaryRepresentation>> {
    let seed = seed_ternary();
    let quaternary = odd_square_quaternary();
    let seed_l = seed_lie();
    let seed_induced = induced_rep(&seed_l, &adjoint_rep(&seed_l), &seed_phi(seed_l.space())).expect("φ conditions hold");
    let l1 = odd_square_lie(int(1));
    let quaternary_induced = induced_rep(&l1, &adjoint_rep(&l1), &phi_odd_pair()).expect("φ conditions hold");
    let (m, z) = zero_action(seed.space(), &SuperSpace::from_bits(&[1, 0]), 2);
    let zero = NaryRepresentation::new(m, z).expect("shapes agree");
    let seed_ad = nary_adjoint_rep(&seed).expect("single twist");
    let quaternary_ad = nary_adjoint_rep(&quaternary).expect("single twist");
    vec![
        fixture("adjoint/seed-ternary", seed.clone(), seed_ad.clone(), true),
        fixture("adjoint/odd-square-quaternary", quaternary.clone(), quaternary_ad.clone(), true),
        fixture("induced/seed-ternary", seed.clone(), seed_induced.clone(), true),
        fixture("induced/odd-square-quaternary", quaternary.clone(), quaternary_induced, true),
        fixture("zero/seed-ternary", seed.clone(), zero, true),
        fixture("corrupt/seed-ternary-adjoint", seed.clone(), corrupt_nary(&seed_ad, Which::Rho, &[0, 2], 0, 0), false),
        fixture(
            "corrupt/seed-ternary-induced",
            seed.clone(),
            corrupt_nary(&seed_induced, Which::Rho, &[0, 2], 0, 0),
            false,
        ),
        fixture(
            "corrupt/odd-square-quaternary",
            quaternary.clone(),
            corrupt_nary(&quaternary_ad, Which::Rho, &[0, 1, 1], 1, 1),
            false,
        ),
        fixture("corrupt/seed-ternary-unalternating", seed.clone(), corrupt_one_tuple(&seed_ad, &[0, 2], 0, 0), false),
    ]
}

/// A single-tuple change that ignores super-alternation.
fn corrupt_one_tuple(rep: &NaryRepresentation, tuple: &[usize], row: usize, col: usize) -> NaryRepresentation {
    let mut rho = rep.rho().clone();
    let current = rho.operator(tuple).entry(row, col).clone();
    rho.set_entry(tuple, row, col, current + int(1)).expect("indices in range");
    match rep.eta() {
        Some(eta) => NaryRepresentation::with_eta(rep.module().clone(), rho, eta.clone()),
        None => NaryRepresentation::new(rep.module().clone(), rho),
    }
    .expect("shapes agree")
}

/// Representations of n-ary Hom-Nambu–Poisson superalgebras: `(ad, regular)`
/// pairs, induced representations and corruptions of either action.
pub fn nary_poisson_rep_fixtures() -> Vec<RepFixture<NaryHomNambuPoissonSuperalgebra, NaryRepresentation>> {
    let seed = seed_ternary_poisson();
    let quaternary = odd_square_quaternary_poisson();
    let seed_p = seed_poisson();
    let seed_induced =
        induced_rep(seed_p.lie(), &poisson_self_rep(&seed_p), &seed_phi(seed_p.space())).expect("φ conditions hold");
    let (m, z) = zero_action(seed.space(), &SuperSpace::from_bits(&[0, 1]), 2);
    let zero = NaryRepresentation::with_eta(m, z, Action::zero(seed.space(), &SuperSpace::from_bits(&[0, 1]), 1))
        .expect("shapes agree");
    let seed_self = nary_poisson_self_rep(&seed).expect("single twist");
    let quaternary_self = nary_poisson_self_rep(&quaternary).expect("single twist");
    vec![
        fixture("self/seed-ternary", seed.clone(), seed_self.clone(), true),
        fixture("self/odd-square-quaternary", quaternary.clone(), quaternary_self.clone(), true),
        fixture("induced/seed-ternary", seed.clone(), seed_induced.clone(), true),
        fixture("zero/seed-ternary", seed.clone(), zero, true),
        fixture("corrupt-rho/seed-ternary", seed.clone(), corrupt_nary(&seed_self, Which::Rho, &[0, 2], 3, 3), false),
        fixture("corrupt-eta/seed-ternary", seed.clone(), corrupt_nary(&seed_self, Which::Eta, &[0], 0, 0), false),
        fixture(
            "corrupt-eta/odd-square-quaternary",
            quaternary.clone(),
            corrupt_nary(&quaternary_self, Which::Eta, &[1], 0, 1),
            false,
        ),
        fixture(
            "corrupt-rho/seed-ternary-induced",
            seed.clone(),
            corrupt_nary(&seed_induced, Which::Rho, &[0, 3], 2, 0),
            false,
        ),
    ]
}

/// `(ad, regular)` of [`odd_square_poisson`] (`λ = 1`) pushed through the
/// 4-ary induction by [`phi_odd_pair`], together with the induced 4-ary
/// Hom-Nambu–Poisson superalgebra.
///
/// Both inputs pass their checks (the binary representation, the cochain
/// conditions and the cochain Poisson condition), yet the induced pair
/// `(ρ_φ, η)` violates `η([X,y])α_V = ρ_φ(αX)η(y) − (−1)^{|y||X|}η(αy)ρ_φ(X)`
/// at `X = (e2,e2,e2)`, `y = e2` on `e1` (`12e1` against `6e1`): the term
/// `Σ_{i<j<n} … φ(…,y)[xᵢ,xⱼ]` of the induced bracket does not vanish.
/// `ρ_φ` alone is still a representation of the induced 4-Hom-Lie
/// superalgebra.
pub fn induced_poisson_rep_counterexample() -> (NaryHomNambuPoissonSuperalgebra, NaryRepresentation) {
    let p = odd_square_poisson(int(1));
    let rep = induced_rep(p.lie(), &poisson_self_rep(&p), &phi_odd_pair()).expect("φ conditions hold");
    (odd_square_quaternary_poisson(), rep)
}
