//! Hom-associative, Hom-Lie and Hom-Poisson superalgebras.
//!
//! A structure is a *presentation*: structure constants plus a twisting map
//! and, where relevant, a commutativity claim. Nothing about the defining
//! identities is assumed at construction time; the `check_*` functions scan
//! every basis tuple and return a [`CheckReport`] with the lexicographically
//! first counterexample on failure.
//!
//! Sign conventions: for homogeneous `x, y`, `(−1)^{xy}` abbreviates
//! `(−1)^{|x||y|}`.

use crate::error::Error;
use crate::graded::{
    linear_map_evenness, maps_commute, multilinear_evenness, LinearMap, MultiLinearMap, Parity, SuperSpace, Tuples,
    Vector,
};
use crate::report::{scan_vectors, CheckReport};
use crate::scalar::sign;

/// Common view of every structure: a graded space, a twisting map and the
/// operations it carries.
pub trait HomStructure {
    fn space(&self) -> &SuperSpace;

    /// The twisting map, or `None` when the structure carries several
    /// distinct twisting maps (general n-ary case).
    fn twist(&self) -> Option<&LinearMap>;

    /// The Lie-type bracket (binary or n-ary), if any.
    fn bracket(&self) -> Option<&MultiLinearMap> {
        None
    }

    /// The associative-type product, if any.
    fn product(&self) -> Option<&MultiLinearMap> {
        None
    }

    /// Named operations, bracket first.
    fn operations(&self) -> Vec<(&'static str, &MultiLinearMap)> {
        let mut ops = Vec::new();
        if let Some(b) = self.bracket() {
            ops.push(("bracket", b));
        }
        if let Some(m) = self.product() {
            ops.push(("mu", m));
        }
        ops
    }
}

fn validate_operation(op: &MultiLinearMap, arity: usize, alpha: &LinearMap) -> Result<(), Error> {
    if op.arity() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: op.arity(),
        });
    }
    if !alpha.is_endomorphism_of(op.space()) {
        return Err(Error::SpaceMismatch(
            "the twisting map must be an endomorphism of the algebra's space".into(),
        ));
    }
    Ok(())
}

/// `(𝒜, μ, α)` with an optional super-commutativity claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAssociativeSuperalgebra {
    mu: MultiLinearMap,
    alpha: LinearMap,
    commutative: bool,
}

impl HomAssociativeSuperalgebra {
    pub fn new(mu: MultiLinearMap, alpha: LinearMap) -> Result<Self, Error> {
        validate_operation(&mu, 2, &alpha)?;
        Ok(HomAssociativeSuperalgebra {
            mu,
            alpha,
            commutative: false,
        })
    }

    /// Sets the super-commutativity claim (verified by the checks).
    pub fn with_commutative(mut self, commutative: bool) -> Self {
        self.commutative = commutative;
        self
    }

    pub fn space(&self) -> &SuperSpace {
        self.mu.space()
    }

    pub fn mu(&self) -> &MultiLinearMap {
        &self.mu
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }
}

impl HomStructure for HomAssociativeSuperalgebra {
    fn space(&self) -> &SuperSpace {
        self.mu.space()
    }
    fn twist(&self) -> Option<&LinearMap> {
        Some(&self.alpha)
    }
    fn product(&self) -> Option<&MultiLinearMap> {
        Some(&self.mu)
    }
}

/// `(𝒜, [·,·], α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieSuperalgebra {
    bracket: MultiLinearMap,
    alpha: LinearMap,
}

impl HomLieSuperalgebra {
    pub fn new(bracket: MultiLinearMap, alpha: LinearMap) -> Result<Self, Error> {
        validate_operation(&bracket, 2, &alpha)?;
        Ok(HomLieSuperalgebra { bracket, alpha })
    }

    pub fn space(&self) -> &SuperSpace {
        self.bracket.space()
    }

    pub fn bracket(&self) -> &MultiLinearMap {
        &self.bracket
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }
}

impl HomStructure for HomLieSuperalgebra {
    fn space(&self) -> &SuperSpace {
        self.bracket.space()
    }
    fn twist(&self) -> Option<&LinearMap> {
        Some(&self.alpha)
    }
    fn bracket(&self) -> Option<&MultiLinearMap> {
        Some(&self.bracket)
    }
}

/// `(𝒜, [·,·], μ, α)`: a (possibly non-commutative) Hom-Poisson
/// superalgebra presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoissonSuperalgebra {
    lie: HomLieSuperalgebra,
    assoc: HomAssociativeSuperalgebra,
}

impl HomPoissonSuperalgebra {
    pub fn new(bracket: MultiLinearMap, mu: MultiLinearMap, alpha: LinearMap) -> Result<Self, Error> {
        let lie = HomLieSuperalgebra::new(bracket, alpha.clone())?;
        let assoc = HomAssociativeSuperalgebra::new(mu, alpha)?;
        Self::from_parts(lie, assoc)
    }

    /// Pairs a Hom-Lie and a Hom-associative structure sharing space and α.
    pub fn from_parts(lie: HomLieSuperalgebra, assoc: HomAssociativeSuperalgebra) -> Result<Self, Error> {
        if lie.alpha != assoc.alpha {
            return Err(Error::SpaceMismatch(
                "the Lie and associative parts must share the twisting map".into(),
            ));
        }
        Ok(HomPoissonSuperalgebra { lie, assoc })
    }

    pub fn with_commutative(mut self, commutative: bool) -> Self {
        self.assoc.commutative = commutative;
        self
    }

    pub fn space(&self) -> &SuperSpace {
        self.lie.space()
    }

    pub fn bracket(&self) -> &MultiLinearMap {
        &self.lie.bracket
    }

    pub fn mu(&self) -> &MultiLinearMap {
        &self.assoc.mu
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.lie.alpha
    }

    pub fn is_commutative(&self) -> bool {
        self.assoc.commutative
    }

    pub fn lie(&self) -> &HomLieSuperalgebra {
        &self.lie
    }

    pub fn assoc(&self) -> &HomAssociativeSuperalgebra {
        &self.assoc
    }
}

impl HomStructure for HomPoissonSuperalgebra {
    fn space(&self) -> &SuperSpace {
        self.lie.space()
    }
    fn twist(&self) -> Option<&LinearMap> {
        Some(&self.lie.alpha)
    }
    fn bracket(&self) -> Option<&MultiLinearMap> {
        Some(&self.lie.bracket)
    }
    fn product(&self) -> Option<&MultiLinearMap> {
        Some(&self.assoc.mu)
    }
}

// ---------------------------------------------------------------------------
// Identity kernels over raw structure constants. These are shared with the
// n = 2 specialisations, the semidirect products and the constructions.
// ---------------------------------------------------------------------------

fn koszul(space: &SuperSpace, i: usize, j: usize) -> bool {
    (space.parity(i) * space.parity(j)).is_odd()
}

/// `μ(μ(x,y),αz) = μ(αx,μ(y,z))` on basis triples.
pub(crate) fn associativity_report(mu: &MultiLinearMap, alpha: &LinearMap) -> CheckReport {
    let s = mu.space();
    scan_vectors("hom-associativity", &[s, s, s], s, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = mu.eval_unchecked(&[&mu.value(&[x, y]), &alpha.image(z)]);
        let rhs = mu.eval_unchecked(&[&alpha.image(x), &mu.value(&[y, z])]);
        (lhs, rhs)
    })
}

/// `μ(x,y) = (−1)^{xy} μ(y,x)` on basis pairs.
pub(crate) fn super_commutativity_report(mu: &MultiLinearMap) -> CheckReport {
    let s = mu.space();
    scan_vectors("super-commutativity", &[s, s], s, |t| {
        let rhs = mu.value(&[t[1], t[0]]).scaled(&sign(koszul(s, t[0], t[1])));
        (mu.value(t), rhs)
    })
}

/// `[x,y] = −(−1)^{xy}[y,x]` on basis pairs.
pub(crate) fn super_skew_report(bracket: &MultiLinearMap) -> CheckReport {
    let s = bracket.space();
    scan_vectors("super-skew-symmetry", &[s, s], s, |t| {
        let rhs = bracket.value(&[t[1], t[0]]).scaled(&sign(!koszul(s, t[0], t[1])));
        (bracket.value(t), rhs)
    })
}

/// `[αx,[y,z]] = [[x,y],αz] + (−1)^{xy}[αy,[x,z]]` on basis triples.
pub(crate) fn jacobi_report(bracket: &MultiLinearMap, alpha: &LinearMap) -> CheckReport {
    let b = bracket;
    let s = b.space();
    scan_vectors("hom-super-jacobi", &[s, s, s], s, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = b.eval_unchecked(&[&alpha.image(x), &b.value(&[y, z])]);
        let mut rhs = b.eval_unchecked(&[&b.value(&[x, y]), &alpha.image(z)]);
        let third = b.eval_unchecked(&[&alpha.image(y), &b.value(&[x, z])]);
        rhs.add_scaled(&sign(koszul(s, x, y)), &third);
        (lhs, rhs)
    })
}

/// `[αx,μ(y,z)] = μ([x,y],αz) + (−1)^{xy} μ(αy,[x,z])` on basis triples.
pub(crate) fn leibniz_report(bracket: &MultiLinearMap, mu: &MultiLinearMap, alpha: &LinearMap) -> CheckReport {
    let s = mu.space();
    scan_vectors("hom-leibniz", &[s, s, s], s, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = bracket.eval_unchecked(&[&alpha.image(x), &mu.value(&[y, z])]);
        let mut rhs = mu.eval_unchecked(&[&bracket.value(&[x, y]), &alpha.image(z)]);
        let second = mu.eval_unchecked(&[&alpha.image(y), &bracket.value(&[x, z])]);
        rhs.add_scaled(&sign(koszul(s, x, y)), &second);
        (lhs, rhs)
    })
}

/// `[αx,μ(y,z)] = μ([x,y],αz) + (−1)^{yz} μ([x,z],αy)` on basis triples.
pub(crate) fn leibniz_commutative_form_report(
    bracket: &MultiLinearMap,
    mu: &MultiLinearMap,
    alpha: &LinearMap,
) -> CheckReport {
    let s = mu.space();
    scan_vectors("hom-leibniz-commutative-form", &[s, s, s], s, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = bracket.eval_unchecked(&[&alpha.image(x), &mu.value(&[y, z])]);
        let mut rhs = mu.eval_unchecked(&[&bracket.value(&[x, y]), &alpha.image(z)]);
        let second = mu.eval_unchecked(&[&bracket.value(&[x, z]), &alpha.image(y)]);
        rhs.add_scaled(&sign(koszul(s, y, z)), &second);
        (lhs, rhs)
    })
}

/// `α(op(x₁,…,x_k)) = op(αx₁,…,αx_k)` on basis tuples.
pub(crate) fn multiplicativity_report(name: &str, op: &MultiLinearMap, alpha: &LinearMap) -> CheckReport {
    let s = op.space();
    let slots = vec![s; op.arity()];
    scan_vectors(name, &slots, s, |t| {
        let lhs = alpha.apply_unchecked(&op.value(t));
        let images: Vec<Vector> = t.iter().map(|&i| alpha.image(i)).collect();
        let refs: Vec<&Vector> = images.iter().collect();
        (lhs, op.eval_unchecked(&refs))
    })
}

fn evenness_reports(ops: &[(&str, &MultiLinearMap)], alpha: &LinearMap) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = ops
        .iter()
        .map(|(name, op)| multilinear_evenness(&format!("{name}-even"), op))
        .collect();
    out.push(linear_map_evenness("alpha-even", alpha));
    out
}

// ---------------------------------------------------------------------------
// Public checks.
// ---------------------------------------------------------------------------

/// `ass_μ(x,y,z) = μ(μ(x,y),α(z)) − μ(α(x),μ(y,z))` for arbitrary vectors.
pub fn hom_associator(
    a: &HomAssociativeSuperalgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, Error> {
    let (mu, alpha) = (a.mu(), a.alpha());
    let left = mu.eval(&[&mu.eval(&[x, y])?, &alpha.apply(z)?])?;
    let right = mu.eval(&[&alpha.apply(x)?, &mu.eval(&[y, z])?])?;
    Ok(left - right)
}

/// Hom-associativity on all basis triples, plus super-commutativity when
/// the algebra claims it, plus evenness of μ and α.
pub fn check_hom_associative(a: &HomAssociativeSuperalgebra) -> CheckReport {
    let mut subs = evenness_reports(&[("mu", a.mu())], a.alpha());
    subs.push(associativity_report(a.mu(), a.alpha()));
    if a.is_commutative() {
        subs.push(super_commutativity_report(a.mu()));
    }
    CheckReport::aggregate("hom-associative", subs)
}

/// Super-skew-symmetry and the Hom super-Jacobi identity.
pub fn check_hom_lie(l: &HomLieSuperalgebra) -> CheckReport {
    let mut subs = evenness_reports(&[("bracket", l.bracket())], l.alpha());
    subs.push(super_skew_report(l.bracket()));
    subs.push(jacobi_report(l.bracket(), l.alpha()));
    CheckReport::aggregate("hom-lie", subs)
}

/// The Hom-Leibniz identity; when μ is claimed commutative the equivalent
/// commutative form is verified as a second sub-check.
pub fn check_hom_leibniz(p: &HomPoissonSuperalgebra) -> CheckReport {
    let mut subs = vec![leibniz_report(p.bracket(), p.mu(), p.alpha())];
    if p.is_commutative() {
        subs.push(leibniz_commutative_form_report(p.bracket(), p.mu(), p.alpha()));
    }
    CheckReport::aggregate("hom-leibniz", subs)
}

/// The commutative form of the Hom-Leibniz identity on its own.
pub fn check_hom_leibniz_commutative_form(p: &HomPoissonSuperalgebra) -> CheckReport {
    leibniz_commutative_form_report(p.bracket(), p.mu(), p.alpha())
}

/// Hom-Lie part, Hom-associative part and Hom-Leibniz identity.
pub fn check_hom_poisson(p: &HomPoissonSuperalgebra) -> CheckReport {
    CheckReport::aggregate(
        "hom-poisson",
        vec![check_hom_lie(p.lie()), check_hom_associative(p.assoc()), check_hom_leibniz(p)],
    )
}

/// `α ∘ op = op ∘ α^{⊗k}` for every operation of the structure.
pub fn check_multiplicative<S: HomStructure + ?Sized>(s: &S) -> CheckReport {
    let Some(alpha) = s.twist() else {
        return CheckReport::fail_unwitnessed(
            "multiplicative",
            "twisting maps are not all equal; not multiplicative",
        );
    };
    let subs = s
        .operations()
        .into_iter()
        .map(|(name, op)| multiplicativity_report(&format!("multiplicative-{name}"), op, alpha))
        .collect();
    CheckReport::aggregate("multiplicative", subs)
}

/// Morphism check `f: A → B`: `f∘op = op′∘f^{⊗2}` for every operation the two
/// structures share and, unless `weak`, `f∘α = β∘f`.
pub fn check_morphism<A, B>(f: &LinearMap, a: &A, b: &B, weak: bool) -> Result<CheckReport, Error>
where
    A: HomStructure + ?Sized,
    B: HomStructure + ?Sized,
{
    if f.domain() != a.space() || f.codomain() != b.space() {
        return Err(Error::SpaceMismatch("morphism must map the first algebra to the second".into()));
    }
    let ops_a = a.operations();
    let ops_b = b.operations();
    if ops_a.iter().map(|o| o.0).ne(ops_b.iter().map(|o| o.0)) {
        return Err(Error::SpaceMismatch("the two structures carry different operations".into()));
    }
    let (sa, sb) = (a.space(), b.space());
    let mut subs = Vec::new();
    for ((name, op_a), (_, op_b)) in ops_a.into_iter().zip(ops_b) {
        if op_a.arity() != op_b.arity() {
            return Err(Error::ArityMismatch {
                expected: op_a.arity(),
                found: op_b.arity(),
            });
        }
        let slots = vec![sa; op_a.arity()];
        subs.push(scan_vectors(&format!("morphism-{name}"), &slots, sb, |t| {
            let lhs = f.apply_unchecked(&op_a.value(t));
            let images: Vec<Vector> = t.iter().map(|&i| f.image(i)).collect();
            let refs: Vec<&Vector> = images.iter().collect();
            (lhs, op_b.eval_unchecked(&refs))
        }));
    }
    if !weak {
        let (Some(alpha), Some(beta)) = (a.twist(), b.twist()) else {
            return Err(Error::NonMultiplicative);
        };
        let fa = f.compose_unchecked(alpha);
        let bf = beta.compose_unchecked(f);
        subs.push(scan_vectors("morphism-twist", &[sa], sb, |t| (fa.image(t[0]), bf.image(t[0]))));
    }
    Ok(CheckReport::aggregate(if weak { "weak-morphism" } else { "morphism" }, subs))
}

/// Which laws a derivation must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivationLaws {
    /// `D(μ(x,y)) = μ(Dx,y) + (−1)^{|D||x|} μ(x,Dy)`.
    Product,
    /// `D([x,y]) = [Dx,y] + (−1)^{|D||x|} [x,Dy]`.
    Bracket,
    /// Both laws.
    Both,
}

fn derivation_law(name: &str, d: &LinearMap, op: &MultiLinearMap, parity: Parity) -> CheckReport {
    let s = op.space();
    scan_vectors(name, &[s, s], s, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = d.apply_unchecked(&op.value(t));
        let mut rhs = op.eval_unchecked(&[&d.image(x), &s.basis(y)]);
        let second = op.eval_unchecked(&[&s.basis(x), &d.image(y)]);
        rhs.add_scaled(&sign((parity * s.parity(x)).is_odd()), &second);
        (lhs, rhs)
    })
}

/// Derivation check of caller-supplied parity `|D|` for any structure.
///
/// Sub-checks: `D` is homogeneous of parity `|D|`, `Dα = αD`, and the
/// requested laws for the operations the structure carries.
pub fn check_derivation_with<S: HomStructure + ?Sized>(
    d: &LinearMap,
    s: &S,
    parity: Parity,
    laws: DerivationLaws,
) -> Result<CheckReport, Error> {
    if !d.is_endomorphism_of(s.space()) {
        return Err(Error::SpaceMismatch("derivation must be an endomorphism of the algebra".into()));
    }
    let alpha = s.twist().ok_or(Error::NonMultiplicative)?;
    let space = s.space();
    let component = d.homogeneous_component(parity);
    let mut subs = vec![scan_vectors("derivation-homogeneous", &[space], space, |t| {
        (d.image(t[0]), component.image(t[0]))
    })];
    let mut commute = maps_commute(d, alpha)?;
    commute.check = "derivation-commutes-with-alpha".into();
    subs.push(commute);
    let wants_product = matches!(laws, DerivationLaws::Product | DerivationLaws::Both);
    let wants_bracket = matches!(laws, DerivationLaws::Bracket | DerivationLaws::Both);
    if wants_product {
        let mu = s
            .product()
            .ok_or_else(|| Error::InvalidArgument("structure has no product".into()))?;
        subs.push(derivation_law("derivation-product-law", d, mu, parity));
    }
    if wants_bracket {
        let b = s
            .bracket()
            .ok_or_else(|| Error::InvalidArgument("structure has no bracket".into()))?;
        if b.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: b.arity(),
            });
        }
        subs.push(derivation_law("derivation-bracket-law", d, b, parity));
    }
    Ok(CheckReport::aggregate("derivation", subs))
}

/// Derivation of a Hom-Poisson superalgebra (both laws).
pub fn check_derivation(d: &LinearMap, p: &HomPoissonSuperalgebra, parity: Parity) -> Result<CheckReport, Error> {
    check_derivation_with(d, p, parity, DerivationLaws::Both)
}

/// `ad_x: y ↦ [x,y]` for a homogeneous `x`.
pub fn adjoint<S: HomStructure + ?Sized>(x: &Vector, s: &S) -> Result<LinearMap, Error> {
    let b = s
        .bracket()
        .ok_or_else(|| Error::InvalidArgument("structure has no bracket".into()))?;
    if b.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: b.arity(),
        });
    }
    let space = s.space();
    space.check_vector(x)?;
    if space.parity_of(x).is_none() {
        return Err(Error::NotHomogeneous);
    }
    Ok(adjoint_unchecked(x, b))
}

pub(crate) fn adjoint_unchecked(x: &Vector, b: &MultiLinearMap) -> LinearMap {
    let space = b.space();
    let images: Vec<Vector> = (0..space.dim())
        .map(|j| b.eval_unchecked(&[x, &space.basis(j)]))
        .collect();
    LinearMap::from_images(space, space, &images).expect("shapes agree")
}

/// `ad_{[x,y]}(αz) = ad_{αx} ad_y(z) − (−1)^{xy} ad_{αy} ad_x(z)` on basis
/// triples, computed through adjoint operators.
pub fn check_adjoint_identity(l: &HomLieSuperalgebra) -> CheckReport {
    let (b, alpha) = (l.bracket(), l.alpha());
    let s = l.space();
    let ad_basis: Vec<LinearMap> = (0..s.dim()).map(|i| adjoint_unchecked(&s.basis(i), b)).collect();
    let ad_alpha: Vec<LinearMap> = (0..s.dim()).map(|i| adjoint_unchecked(&alpha.image(i), b)).collect();
    let mut ad_bracket = Vec::new();
    for t in Tuples::uniform(s.dim(), 2) {
        ad_bracket.push(adjoint_unchecked(&b.value(&t), b));
    }
    scan_vectors("adjoint-identity", &[s, s, s], s, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = ad_bracket[x * s.dim() + y].apply_unchecked(&alpha.image(z));
        let mut rhs = ad_alpha[x].apply_unchecked(&ad_basis[y].image(z));
        let second = ad_alpha[y].apply_unchecked(&ad_basis[x].image(z));
        rhs.add_scaled(&sign(!koszul(s, x, y)), &second);
        (lhs, rhs)
    })
}
