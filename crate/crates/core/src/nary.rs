//! n-ary Hom-Nambu, n-Hom-Lie and n-ary Hom-Nambu–Poisson superalgebras.
//!
//! For tuples `X = (x₁,…,x_{n−1})` and `Y = (y₁,…,y_n)` of homogeneous
//! elements, `|X|` is the total parity and `|Y|^{i−1} = |y₁|+…+|y_{i−1}|`.
//! Identity checks are defined for the multiplicative case where every
//! twisting map coincides; a presentation with distinct twisting maps can be
//! stored but its identity checks return [`Error::NonMultiplicative`].

use crate::binary::{check_hom_associative, HomLieSuperalgebra, HomPoissonSuperalgebra, HomStructure};
use crate::error::Error;
use crate::graded::{
    linear_map_evenness, multilinear_evenness, LinearMap, MultiLinearMap, Parity, ParityBook, SuperSpace, Tuples,
    Vector,
};
use crate::report::{scan_vectors, CheckReport, Witness};
use crate::scalar::sign;

/// `(𝒩, [·,…,·], α₁,…,α_{n−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaryHomNambuSuperalgebra {
    bracket: MultiLinearMap,
    alphas: Vec<LinearMap>,
}

impl NaryHomNambuSuperalgebra {
    /// Multiplicative presentation: every twisting map equals `alpha`.
    pub fn new(bracket: MultiLinearMap, alpha: LinearMap) -> Result<Self, Error> {
        let n = bracket.arity();
        if n < 2 {
            return Err(Error::ArityMismatch { expected: 2, found: n });
        }
        Self::with_twists(bracket, vec![alpha; n - 1])
    }

    /// General presentation with one twisting map per slot `1..n−1`.
    pub fn with_twists(bracket: MultiLinearMap, alphas: Vec<LinearMap>) -> Result<Self, Error> {
        let n = bracket.arity();
        if n < 2 {
            return Err(Error::ArityMismatch { expected: 2, found: n });
        }
        if alphas.len() != n - 1 {
            return Err(Error::ArityMismatch {
                expected: n - 1,
                found: alphas.len(),
            });
        }
        if alphas.iter().any(|a| !a.is_endomorphism_of(bracket.space())) {
            return Err(Error::SpaceMismatch(
                "every twisting map must be an endomorphism of the algebra's space".into(),
            ));
        }
        Ok(NaryHomNambuSuperalgebra { bracket, alphas })
    }

    /// The arity `n`.
    pub fn n(&self) -> usize {
        self.bracket.arity()
    }

    pub fn space(&self) -> &SuperSpace {
        self.bracket.space()
    }

    pub fn bracket(&self) -> &MultiLinearMap {
        &self.bracket
    }

    pub fn alphas(&self) -> &[LinearMap] {
        &self.alphas
    }

    /// True when all twisting maps coincide.
    pub fn has_uniform_twist(&self) -> bool {
        self.alphas.windows(2).all(|w| w[0] == w[1])
    }

    /// The common twisting map of a multiplicative presentation.
    pub fn alpha(&self) -> Result<&LinearMap, Error> {
        if self.has_uniform_twist() {
            Ok(&self.alphas[0])
        } else {
            Err(Error::NonMultiplicative)
        }
    }
}

impl HomStructure for NaryHomNambuSuperalgebra {
    fn space(&self) -> &SuperSpace {
        self.bracket.space()
    }
    fn twist(&self) -> Option<&LinearMap> {
        self.alpha().ok()
    }
    fn bracket(&self) -> Option<&MultiLinearMap> {
        Some(&self.bracket)
    }
}

impl From<&HomLieSuperalgebra> for NaryHomNambuSuperalgebra {
    /// The `n = 2` view of a Hom-Lie superalgebra.
    fn from(l: &HomLieSuperalgebra) -> Self {
        NaryHomNambuSuperalgebra {
            bracket: l.bracket().clone(),
            alphas: vec![l.alpha().clone()],
        }
    }
}

/// `(𝒜, [·,…,·], μ, α)`: an n-Hom-Lie part plus a (commutative)
/// Hom-associative product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaryHomNambuPoissonSuperalgebra {
    base: NaryHomNambuSuperalgebra,
    mu: MultiLinearMap,
    commutative: bool,
}

impl NaryHomNambuPoissonSuperalgebra {
    pub fn new(base: NaryHomNambuSuperalgebra, mu: MultiLinearMap) -> Result<Self, Error> {
        if mu.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: mu.arity(),
            });
        }
        if mu.space() != base.space() {
            return Err(Error::SpaceMismatch("product and bracket live on different spaces".into()));
        }
        Ok(NaryHomNambuPoissonSuperalgebra {
            base,
            mu,
            commutative: true,
        })
    }

    /// Sets the super-commutativity claim (default `true`, as the n-ary
    /// Poisson axioms require a commutative product).
    pub fn with_commutative(mut self, commutative: bool) -> Self {
        self.commutative = commutative;
        self
    }

    pub fn base(&self) -> &NaryHomNambuSuperalgebra {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn space(&self) -> &SuperSpace {
        self.base.space()
    }

    pub fn bracket(&self) -> &MultiLinearMap {
        self.base.bracket()
    }

    pub fn mu(&self) -> &MultiLinearMap {
        &self.mu
    }

    pub fn alpha(&self) -> Result<&LinearMap, Error> {
        self.base.alpha()
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// The Hom-associative part `(𝒜, μ, α)`.
    pub fn assoc(&self) -> Result<crate::binary::HomAssociativeSuperalgebra, Error> {
        Ok(
            crate::binary::HomAssociativeSuperalgebra::new(self.mu.clone(), self.alpha()?.clone())?
                .with_commutative(self.commutative),
        )
    }
}

impl HomStructure for NaryHomNambuPoissonSuperalgebra {
    fn space(&self) -> &SuperSpace {
        self.base.space()
    }
    fn twist(&self) -> Option<&LinearMap> {
        self.base.alpha().ok()
    }
    fn bracket(&self) -> Option<&MultiLinearMap> {
        Some(self.base.bracket())
    }
    fn product(&self) -> Option<&MultiLinearMap> {
        Some(&self.mu)
    }
}

impl From<&HomPoissonSuperalgebra> for NaryHomNambuPoissonSuperalgebra {
    /// The `n = 2` view of a Hom-Poisson superalgebra.
    fn from(p: &HomPoissonSuperalgebra) -> Self {
        NaryHomNambuPoissonSuperalgebra {
            base: NaryHomNambuSuperalgebra::from(p.lie()),
            mu: p.mu().clone(),
            commutative: p.is_commutative(),
        }
    }
}

fn parities_of(space: &SuperSpace, tuple: &[usize]) -> Vec<Parity> {
    tuple.iter().map(|&i| space.parity(i)).collect()
}

fn eval_refs(op: &MultiLinearMap, args: &[Vector]) -> Vector {
    let refs: Vec<&Vector> = args.iter().collect();
    op.eval_unchecked(&refs)
}

/// Right-hand side of the Nambu identity for basis tuples `x` (length n−1)
/// and `y` (length n), with `inner(y_i)` supplying `[x₁,…,x_{n−1},y_i]`.
fn nambu_rhs(
    b: &MultiLinearMap,
    alpha_images: &[Vector],
    x: &[usize],
    y: &[usize],
    mut inner: impl FnMut(usize) -> Vector,
) -> Vector {
    let s = b.space();
    let x_parity: Parity = s.tuple_parity(x);
    let book = ParityBook::new(parities_of(s, y));
    let mut rhs = s.zero();
    for i in 1..=y.len() {
        let args: Vec<Vector> = y
            .iter()
            .enumerate()
            .map(|(k, &yk)| if k + 1 == i { inner(yk) } else { alpha_images[yk].clone() })
            .collect();
        let term = eval_refs(b, &args);
        rhs.add_scaled(&sign((x_parity * book.prefix(i)).is_odd()), &term);
    }
    rhs
}

/// The super-Hom-Nambu identity
/// `[αx₁,…,αx_{n−1},[y₁,…,y_n]] = Σᵢ (−1)^{|X||Y|^{i−1}} [αy₁,…,[x₁,…,x_{n−1},yᵢ],…,αy_n]`
/// on all basis tuples.
pub fn check_nambu_identity(nambu: &NaryHomNambuSuperalgebra) -> Result<CheckReport, Error> {
    let alpha = nambu.alpha()?;
    let b = nambu.bracket();
    let s = nambu.space();
    let n = nambu.n();
    let alpha_images: Vec<Vector> = (0..s.dim()).map(|i| alpha.image(i)).collect();
    let slots = vec![s; 2 * n - 1];
    Ok(scan_vectors("nambu-identity", &slots, s, |t| {
        let (x, y) = t.split_at(n - 1);
        let mut lhs_args: Vec<Vector> = x.iter().map(|&xi| alpha_images[xi].clone()).collect();
        lhs_args.push(b.value(y));
        let lhs = eval_refs(b, &lhs_args);
        let rhs = nambu_rhs(b, &alpha_images, x, y, |yi| {
            let mut xt = x.to_vec();
            xt.push(yi);
            b.value(&xt)
        });
        (lhs, rhs)
    }))
}

/// The same identity restated through adjoint operators:
/// `ad_{αX}([Y]) = Σᵢ (−1)^{|X||Y|^{i−1}} [αy₁,…,ad_X(yᵢ),…,αy_n]`, where
/// each `ad_X` is materialised as a linear map first.
pub fn check_nambu_via_adjoints(nambu: &NaryHomNambuSuperalgebra) -> Result<CheckReport, Error> {
    let alpha = nambu.alpha()?;
    let b = nambu.bracket();
    let s = nambu.space();
    let n = nambu.n();
    let alpha_images: Vec<Vector> = (0..s.dim()).map(|i| alpha.image(i)).collect();
    let ad_of = |args: &[Vector]| -> LinearMap {
        let images: Vec<Vector> = (0..s.dim())
            .map(|j| {
                let mut full = args.to_vec();
                full.push(s.basis(j));
                eval_refs(b, &full)
            })
            .collect();
        LinearMap::from_images(s, s, &images).expect("shapes agree")
    };
    let mut ad_x = Vec::new();
    let mut ad_alpha_x = Vec::new();
    for x in Tuples::uniform(s.dim(), n - 1) {
        let plain: Vec<Vector> = x.iter().map(|&i| s.basis(i)).collect();
        let twisted: Vec<Vector> = x.iter().map(|&i| alpha_images[i].clone()).collect();
        ad_x.push(ad_of(&plain));
        ad_alpha_x.push(ad_of(&twisted));
    }
    let index = |x: &[usize]| x.iter().fold(0, |acc, &i| acc * s.dim() + i);
    let slots = vec![s; 2 * n - 1];
    Ok(scan_vectors("nambu-adjoint-form", &slots, s, |t| {
        let (x, y) = t.split_at(n - 1);
        let k = index(x);
        let lhs = ad_alpha_x[k].apply_unchecked(&b.value(y));
        let rhs = nambu_rhs(b, &alpha_images, x, y, |yi| ad_x[k].image(yi));
        (lhs, rhs)
    }))
}

/// Adjacent transpositions:
/// `[…,xᵢ,x_{i+1},…] = −(−1)^{|xᵢ||x_{i+1}|}[…,x_{i+1},xᵢ,…]`.
fn adjacent_skew_report(b: &MultiLinearMap) -> CheckReport {
    let s = b.space();
    let n = b.arity();
    for tuple in Tuples::uniform(s.dim(), n) {
        for i in 0..n - 1 {
            let mut swapped = tuple.clone();
            swapped.swap(i, i + 1);
            let both_odd = (s.parity(tuple[i]) * s.parity(tuple[i + 1])).is_odd();
            let lhs = b.value(&tuple);
            let rhs = b.value(&swapped).scaled(&sign(!both_odd));
            if lhs != rhs {
                let labels = tuple.iter().map(|&k| s.label(k).to_string()).collect();
                return CheckReport::fail(
                    "adjacent-transposition",
                    Witness::vectors(labels, tuple.clone(), s, &lhs, &rhs),
                )
                .with_note(format!("slots {} and {} swapped", i + 1, i + 2));
            }
        }
    }
    CheckReport::pass("adjacent-transposition")
}

/// Arbitrary transpositions `i < j` with sign
/// `−(−1)^{|X|_{i+1}^{j−1}(|xᵢ|+|xⱼ|) + |xᵢ||xⱼ|}`.
fn general_skew_report(b: &MultiLinearMap) -> CheckReport {
    let s = b.space();
    let n = b.arity();
    for tuple in Tuples::uniform(s.dim(), n) {
        let book = ParityBook::new(parities_of(s, &tuple));
        for i in 1..=n {
            for j in i + 1..=n {
                let mut swapped = tuple.clone();
                swapped.swap(i - 1, j - 1);
                let exponent = book.range(i + 1, j - 1) * (book.at(i) + book.at(j)) + book.at(i) * book.at(j);
                let lhs = b.value(&tuple);
                let rhs = b.value(&swapped).scaled(&sign(!exponent.is_odd()));
                if lhs != rhs {
                    let labels = tuple.iter().map(|&k| s.label(k).to_string()).collect();
                    return CheckReport::fail(
                        "general-transposition",
                        Witness::vectors(labels, tuple.clone(), s, &lhs, &rhs),
                    )
                    .with_note(format!("slots {i} and {j} swapped"));
                }
            }
        }
    }
    CheckReport::pass("general-transposition")
}

/// Super-skew-symmetry of the n-ary bracket: adjacent transpositions and,
/// as a consequence, arbitrary transpositions.
pub fn check_nary_skew(nambu: &NaryHomNambuSuperalgebra) -> CheckReport {
    CheckReport::aggregate(
        "nary-skew",
        vec![
            adjacent_skew_report(nambu.bracket()),
            general_skew_report(nambu.bracket()),
        ],
    )
}

/// Evenness, super-skew-symmetry and the Nambu identity.
pub fn check_n_hom_lie(nambu: &NaryHomNambuSuperalgebra) -> Result<CheckReport, Error> {
    let alpha = nambu.alpha()?;
    let subs = vec![
        multilinear_evenness("bracket-even", nambu.bracket()),
        linear_map_evenness("alpha-even", alpha),
        check_nary_skew(nambu),
        check_nambu_identity(nambu)?,
    ];
    Ok(CheckReport::aggregate("n-hom-lie", subs))
}

fn nary_leibniz_report(
    name: &str,
    p: &NaryHomNambuPoissonSuperalgebra,
    commutative_form: bool,
) -> Result<CheckReport, Error> {
    let alpha = p.alpha()?;
    let (b, mu) = (p.bracket(), p.mu());
    let s = p.space();
    let n = p.n();
    let alpha_images: Vec<Vector> = (0..s.dim()).map(|i| alpha.image(i)).collect();
    let slots = vec![s; n + 1];
    Ok(scan_vectors(name, &slots, s, |t| {
        let (x, rest) = t.split_at(n - 1);
        let (y, z) = (rest[0], rest[1]);
        let x_parity = s.tuple_parity(x);
        let mut lhs_args: Vec<Vector> = x.iter().map(|&xi| alpha_images[xi].clone()).collect();
        lhs_args.push(mu.value(&[y, z]));
        let lhs = eval_refs(b, &lhs_args);
        let bracket_with = |last: usize| {
            let mut xt = x.to_vec();
            xt.push(last);
            b.value(&xt)
        };
        let mut rhs = mu.eval_unchecked(&[&bracket_with(y), &alpha_images[z]]);
        if commutative_form {
            let second = mu.eval_unchecked(&[&bracket_with(z), &alpha_images[y]]);
            rhs.add_scaled(&sign((s.parity(y) * s.parity(z)).is_odd()), &second);
        } else {
            let second = mu.eval_unchecked(&[&alpha_images[y], &bracket_with(z)]);
            rhs.add_scaled(&sign((s.parity(y) * x_parity).is_odd()), &second);
        }
        (lhs, rhs)
    }))
}

/// The n-ary Hom-Leibniz identity
/// `[αx₁,…,αx_{n−1},μ(y,z)] = (−1)^{|y||X|}μ(αy,[X,z]) + μ([X,y],αz)`;
/// with a commutative product the equivalent form
/// `(−1)^{|y||z|}μ([X,z],αy) + μ([X,y],αz)` is checked as well.
pub fn check_nary_hom_leibniz(p: &NaryHomNambuPoissonSuperalgebra) -> Result<CheckReport, Error> {
    let mut subs = vec![nary_leibniz_report("nary-hom-leibniz-identity", p, false)?];
    if p.is_commutative() {
        subs.push(nary_leibniz_report("nary-hom-leibniz-commutative-form", p, true)?);
    }
    Ok(CheckReport::aggregate("nary-hom-leibniz", subs))
}

/// The commutative form of the n-ary Hom-Leibniz identity on its own.
pub fn check_nary_hom_leibniz_commutative_form(p: &NaryHomNambuPoissonSuperalgebra) -> Result<CheckReport, Error> {
    nary_leibniz_report("nary-hom-leibniz-commutative-form", p, true)
}

/// n-Hom-Lie part, commutative Hom-associative part and the n-ary
/// Hom-Leibniz identity.
pub fn check_nary_poisson(p: &NaryHomNambuPoissonSuperalgebra) -> Result<CheckReport, Error> {
    Ok(CheckReport::aggregate(
        "nary-poisson",
        vec![
            check_n_hom_lie(p.base())?,
            check_hom_associative(&p.assoc()?),
            check_nary_hom_leibniz(p)?,
        ],
    ))
}

/// `ad_X: y ↦ [x₁,…,x_{n−1},y]` for homogeneous `xᵢ`.
pub fn adjoint_nary(x: &[Vector], nambu: &NaryHomNambuSuperalgebra) -> Result<LinearMap, Error> {
    let n = nambu.n();
    if x.len() != n - 1 {
        return Err(Error::ArityMismatch {
            expected: n - 1,
            found: x.len(),
        });
    }
    let s = nambu.space();
    for v in x {
        s.check_vector(v)?;
        if s.parity_of(v).is_none() {
            return Err(Error::NotHomogeneous);
        }
    }
    let images: Vec<Vector> = (0..s.dim())
        .map(|j| {
            let mut args = x.to_vec();
            args.push(s.basis(j));
            eval_refs(nambu.bracket(), &args)
        })
        .collect();
    LinearMap::from_images(s, s, &images)
}
