//! Structure-producing constructions.
//!
//! * [`commutator_bracket`] / [`commutator_poisson`]: the super-commutator of
//!   a Hom-associative product.
//! * [`RotaBaxterOperator`], [`check_rota_baxter`], [`twist_by_rota_baxter`],
//!   [`check_inverse_derivation`]: Rota–Baxter operators of weight `λ` and
//!   the twisted products `μ_R`, `[·,·]_R`.
//! * [`induced_nary_bracket`], [`check_phi_conditions`],
//!   [`check_phi_poisson`], [`induced_nary_poisson`]: the n-ary bracket
//!   induced by an even cochain `φ` of degree `n − 2`.
//! * [`reduce_bracket`]: the binary bracket `[x,y]_A = [x,y,a₁,…,a_{n−2}]`.
//!
//! Construction preconditions that make the computation meaningful are
//! enforced (as [`Error::Precondition`]); theorem hypotheses that only
//! *guarantee* properties of the output are reported, never assumed.

use crate::binary::{
    check_derivation_with, check_hom_associative, check_hom_lie, check_hom_poisson, DerivationLaws,
    HomAssociativeSuperalgebra, HomLieSuperalgebra, HomPoissonSuperalgebra, HomStructure,
};
use crate::error::Error;
use crate::graded::{
    is_even, linear_map_evenness, maps_commute, Cochain, LinearMap, MultiLinearMap, Parity,
    ParityBook, SuperSpace, Vector,
};
use crate::nary::{NaryHomNambuPoissonSuperalgebra, NaryHomNambuSuperalgebra};
use crate::report::{scan_scalars, scan_vectors, CheckReport, Witness};
use crate::scalar::{sign, Scalar};
use num::Zero;

// ---------------------------------------------------------------------------
// Commutator brackets.
// ---------------------------------------------------------------------------

fn commutator_map(mu: &MultiLinearMap) -> MultiLinearMap {
    let s = mu.space();
    MultiLinearMap::from_fn(s, 2, |t| {
        let swapped = mu.value(&[t[1], t[0]]);
        let both_odd = (s.parity(t[0]) * s.parity(t[1])).is_odd();
        let mut v = mu.value(t);
        v.add_scaled(&sign(!both_odd), &swapped);
        v
    })
}

/// `[x,y]_μ = μ(x,y) − (−1)^{|x||y|}μ(y,x)` with the same twist.
///
/// The input must pass [`check_hom_associative`]; the output is then a
/// Hom-Lie superalgebra.
pub fn commutator_bracket(a: &HomAssociativeSuperalgebra) -> Result<HomLieSuperalgebra, Error> {
    Error::require(check_hom_associative(a))?;
    HomLieSuperalgebra::new(commutator_map(a.mu()), a.alpha().clone())
}

/// `(𝒜, [·,·]_μ, μ, α)`: the commutator paired with the original product,
/// a (non-commutative) Hom-Poisson superalgebra.
pub fn commutator_poisson(a: &HomAssociativeSuperalgebra) -> Result<HomPoissonSuperalgebra, Error> {
    let lie = commutator_bracket(a)?;
    HomPoissonSuperalgebra::from_parts(lie, a.clone())
}

// ---------------------------------------------------------------------------
// Rota–Baxter operators.
// ---------------------------------------------------------------------------

/// Which identity a Rota–Baxter operator is meant to satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RotaBaxterFlavor {
    /// `μ(Rx,Ry) = R(μ(Rx,y) + μ(x,Ry) + λμ(x,y))`.
    Associative,
    /// `[Rx,Ry] = R([Rx,y] + [x,Ry] + λ[x,y])`.
    Lie,
    /// A pair `(R, R′)` of weight `(λ, λ′)`: `R` for the product and `R′`
    /// for the bracket of a Hom-Poisson superalgebra.
    PoissonPair { lie_map: LinearMap, lie_weight: Scalar },
}

/// Rota–Baxter operator of weight `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterOperator {
    pub map: LinearMap,
    pub weight: Scalar,
    pub flavor: RotaBaxterFlavor,
}

impl RotaBaxterOperator {
    pub fn associative(map: LinearMap, weight: Scalar) -> Self {
        RotaBaxterOperator {
            map,
            weight,
            flavor: RotaBaxterFlavor::Associative,
        }
    }

    pub fn lie(map: LinearMap, weight: Scalar) -> Self {
        RotaBaxterOperator {
            map,
            weight,
            flavor: RotaBaxterFlavor::Lie,
        }
    }

    /// The pair `(R, R′)` of weight `(λ, λ′)`.
    pub fn poisson_pair(map: LinearMap, weight: Scalar, lie_map: LinearMap, lie_weight: Scalar) -> Self {
        RotaBaxterOperator {
            map,
            weight,
            flavor: RotaBaxterFlavor::PoissonPair { lie_map, lie_weight },
        }
    }

    /// The diagonal pair `(R, R)` of weight `(λ, λ)`.
    pub fn poisson(map: LinearMap, weight: Scalar) -> Self {
        let (lie_map, lie_weight) = (map.clone(), weight.clone());
        Self::poisson_pair(map, weight, lie_map, lie_weight)
    }
}

fn rb_identity_report(name: &str, op: &MultiLinearMap, r: &LinearMap, weight: &Scalar) -> CheckReport {
    let s = op.space();
    scan_vectors(name, &[s, s], s, |t| {
        let (rx, ry) = (r.image(t[0]), r.image(t[1]));
        let lhs = op.eval_unchecked(&[&rx, &ry]);
        let mut inner = op.eval_unchecked(&[&rx, &s.basis(t[1])]);
        inner += &op.eval_unchecked(&[&s.basis(t[0]), &ry]);
        inner.add_scaled(weight, &op.value(t));
        (lhs, r.apply_unchecked(&inner))
    })
}

fn rb_map_reports(prefix: &str, r: &LinearMap, alpha: &LinearMap) -> Result<Vec<CheckReport>, Error> {
    let mut commute = maps_commute(r, alpha)?;
    commute.check = format!("{prefix}commutes-with-alpha");
    Ok(vec![linear_map_evenness(&format!("{prefix}even"), r), commute])
}

/// `op(Rx,y) + op(x,Ry) + λ op(x,y)`.
fn twisted_operation(op: &MultiLinearMap, r: &LinearMap, weight: &Scalar) -> MultiLinearMap {
    let s = op.space();
    MultiLinearMap::from_fn(s, 2, |t| {
        let mut v = op.eval_unchecked(&[&r.image(t[0]), &s.basis(t[1])]);
        v += &op.eval_unchecked(&[&s.basis(t[0]), &r.image(t[1])]);
        v.add_scaled(weight, &op.value(t));
        v
    })
}

/// Structures that admit Rota–Baxter operators and their twists.
pub trait RotaBaxterTarget: HomStructure + Sized {
    /// Verifies evenness, commutation with α and the weight identity.
    fn rota_baxter_report(&self, r: &RotaBaxterOperator) -> Result<CheckReport, Error>;
    /// Builds the twisted structure without checking the operator.
    fn twisted_unchecked(&self, r: &RotaBaxterOperator) -> Result<Self, Error>;
    /// The structure's own defining check.
    fn structure_check(&self) -> CheckReport;
    /// Which derivation laws apply to this kind of structure.
    fn derivation_laws() -> DerivationLaws;
}

fn check_space(r: &LinearMap, s: &SuperSpace) -> Result<(), Error> {
    if r.is_endomorphism_of(s) {
        Ok(())
    } else {
        Err(Error::SpaceMismatch("the operator must be an endomorphism of the algebra".into()))
    }
}

impl RotaBaxterTarget for HomAssociativeSuperalgebra {
    fn rota_baxter_report(&self, r: &RotaBaxterOperator) -> Result<CheckReport, Error> {
        if r.flavor != RotaBaxterFlavor::Associative {
            return Err(Error::FlavorMismatch("expected an associative Rota-Baxter operator".into()));
        }
        check_space(&r.map, self.space())?;
        let mut subs = rb_map_reports("rota-baxter-", &r.map, self.alpha())?;
        subs.push(rb_identity_report("rota-baxter-identity", self.mu(), &r.map, &r.weight));
        Ok(CheckReport::aggregate("rota-baxter", subs))
    }

    fn twisted_unchecked(&self, r: &RotaBaxterOperator) -> Result<Self, Error> {
        Ok(
            HomAssociativeSuperalgebra::new(twisted_operation(self.mu(), &r.map, &r.weight), self.alpha().clone())?
                .with_commutative(self.is_commutative()),
        )
    }

    fn structure_check(&self) -> CheckReport {
        check_hom_associative(self)
    }

    fn derivation_laws() -> DerivationLaws {
        DerivationLaws::Product
    }
}

impl RotaBaxterTarget for HomLieSuperalgebra {
    fn rota_baxter_report(&self, r: &RotaBaxterOperator) -> Result<CheckReport, Error> {
        if r.flavor != RotaBaxterFlavor::Lie {
            return Err(Error::FlavorMismatch("expected a Lie Rota-Baxter operator".into()));
        }
        check_space(&r.map, self.space())?;
        let mut subs = rb_map_reports("rota-baxter-", &r.map, self.alpha())?;
        subs.push(rb_identity_report("rota-baxter-identity", self.bracket(), &r.map, &r.weight));
        Ok(CheckReport::aggregate("rota-baxter", subs))
    }

    fn twisted_unchecked(&self, r: &RotaBaxterOperator) -> Result<Self, Error> {
        HomLieSuperalgebra::new(twisted_operation(self.bracket(), &r.map, &r.weight), self.alpha().clone())
    }

    fn structure_check(&self) -> CheckReport {
        check_hom_lie(self)
    }

    fn derivation_laws() -> DerivationLaws {
        DerivationLaws::Bracket
    }
}

impl RotaBaxterTarget for HomPoissonSuperalgebra {
    fn rota_baxter_report(&self, r: &RotaBaxterOperator) -> Result<CheckReport, Error> {
        let RotaBaxterFlavor::PoissonPair { lie_map, lie_weight } = &r.flavor else {
            return Err(Error::FlavorMismatch("expected a Poisson pair of Rota-Baxter operators".into()));
        };
        check_space(&r.map, self.space())?;
        check_space(lie_map, self.space())?;
        let mut subs = rb_map_reports("rota-baxter-product-", &r.map, self.alpha())?;
        subs.push(rb_identity_report("rota-baxter-product-identity", self.mu(), &r.map, &r.weight));
        subs.extend(rb_map_reports("rota-baxter-bracket-", lie_map, self.alpha())?);
        subs.push(rb_identity_report("rota-baxter-bracket-identity", self.bracket(), lie_map, lie_weight));
        Ok(CheckReport::aggregate("rota-baxter", subs))
    }

    fn twisted_unchecked(&self, r: &RotaBaxterOperator) -> Result<Self, Error> {
        let RotaBaxterFlavor::PoissonPair { lie_map, lie_weight } = &r.flavor else {
            return Err(Error::FlavorMismatch("expected a Poisson pair of Rota-Baxter operators".into()));
        };
        if lie_map != &r.map || lie_weight != &r.weight {
            return Err(Error::InvalidArgument(
                "the Poisson twist is defined for a pair (R, R) of equal weights only".into(),
            ));
        }
        Ok(HomPoissonSuperalgebra::new(
            twisted_operation(self.bracket(), &r.map, &r.weight),
            twisted_operation(self.mu(), &r.map, &r.weight),
            self.alpha().clone(),
        )?
        .with_commutative(self.is_commutative()))
    }

    fn structure_check(&self) -> CheckReport {
        check_hom_poisson(self)
    }

    fn derivation_laws() -> DerivationLaws {
        DerivationLaws::Both
    }
}

/// Verifies a Rota–Baxter operator against a structure of matching flavor.
pub fn check_rota_baxter<S: RotaBaxterTarget>(r: &RotaBaxterOperator, s: &S) -> Result<CheckReport, Error> {
    s.rota_baxter_report(r)
}

/// The twisted structure `μ_R`, `[·,·]_R`. The operator is verified first;
/// twisting never proceeds from an operator that fails its check.
pub fn twist_by_rota_baxter<S: RotaBaxterTarget>(s: &S, r: &RotaBaxterOperator) -> Result<S, Error> {
    Error::require(s.rota_baxter_report(r)?)?;
    s.twisted_unchecked(r)
}

/// For a weight-0 operator `R`: reports the Rota–Baxter verdict and whether
/// `R⁻¹` is a derivation (of the laws matching the structure). The report
/// passes iff the derivation check passes; a singular `R` is an error.
pub fn check_inverse_derivation<S: RotaBaxterTarget>(r: &RotaBaxterOperator, s: &S) -> Result<CheckReport, Error> {
    if !r.weight.is_zero() {
        return Err(Error::InvalidArgument("the operator must have weight 0".into()));
    }
    let maps: Vec<&LinearMap> = match &r.flavor {
        RotaBaxterFlavor::PoissonPair { lie_map, .. } if lie_map != &r.map => {
            return Err(Error::InvalidArgument("a Poisson pair must use one map".into()))
        }
        _ => vec![&r.map],
    };
    let inverse = maps[0].inverse()?;
    let rb = s.rota_baxter_report(r)?;
    let parity = inverse.parity().unwrap_or(Parity::Even);
    let derivation = check_derivation_with(&inverse, s, parity, S::derivation_laws())?;
    let rb_verdict = if rb.passed() { "pass" } else { "fail" };
    let out = CheckReport::aggregate("inverse-derivation", vec![derivation])
        .with_note(format!("Rota-Baxter identity of the operator: {rb_verdict}"));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Cochain-induced n-ary brackets.
// ---------------------------------------------------------------------------

fn require_even_cochain(phi: &Cochain, space: &SuperSpace) -> Result<(), Error> {
    if phi.space() != space {
        return Err(Error::SpaceMismatch("cochain over a different space".into()));
    }
    let even = is_even(phi);
    if !even.passed() {
        let at = even.witness.map(|w| w.tuple.join(", ")).unwrap_or_default();
        return Err(Error::ParityViolation(format!("cochain is not even (nonzero on ({at}))")));
    }
    Ok(())
}

/// `[x₁,…,x_n]_φ` on a basis tuple, through the defining sum
/// `Σ_{i<j} (−1)^{i+j+1}(−1)^{γ_{ij}} φ(…x̂ᵢ…x̂ⱼ…)[xᵢ,xⱼ]`.
fn induced_value(bracket: &MultiLinearMap, phi: &Cochain, tuple: &[usize]) -> Vector {
    let s = bracket.space();
    let n = tuple.len();
    let book = ParityBook::from_tuple(s, tuple);
    let mut out = s.zero();
    for i in 1..=n {
        for j in i + 1..=n {
            let rest: Vec<usize> = tuple
                .iter()
                .enumerate()
                .filter(|(k, _)| *k + 1 != i && *k + 1 != j)
                .map(|(_, &v)| v)
                .collect();
            let coeff = phi.value(&rest);
            if coeff.is_zero() {
                continue;
            }
            let exponent = (i + j + 1) % 2 == 1;
            let s_ij = sign(exponent ^ book.gamma(i, j).is_odd());
            out.add_scaled(&(s_ij * coeff), &bracket.value(&[tuple[i - 1], tuple[j - 1]]));
        }
    }
    out
}

fn induced_map(bracket: &MultiLinearMap, phi: &Cochain) -> MultiLinearMap {
    let n = phi.arity() + 2;
    MultiLinearMap::from_fn(bracket.space(), n, |t| induced_value(bracket, phi, t))
}

/// The n-ary bracket induced by an even cochain of degree `n − 2`, with the
/// same twisting map. Whether the result is an n-Hom-Lie superalgebra is
/// governed by [`check_phi_conditions`]; the construction itself only needs
/// `φ` to be even.
pub fn induced_nary_bracket(l: &HomLieSuperalgebra, phi: &Cochain) -> Result<NaryHomNambuSuperalgebra, Error> {
    require_even_cochain(phi, l.space())?;
    NaryHomNambuSuperalgebra::new(induced_map(l.bracket(), phi), l.alpha().clone())
}

/// The induced n-ary bracket together with the original product.
pub fn induced_nary_poisson(
    p: &HomPoissonSuperalgebra,
    phi: &Cochain,
) -> Result<NaryHomNambuPoissonSuperalgebra, Error> {
    let base = induced_nary_bracket(p.lie(), phi)?;
    Ok(NaryHomNambuPoissonSuperalgebra::new(base, p.mu().clone())?.with_commutative(p.is_commutative()))
}

/// The two cochain conditions of the induced-bracket theorem:
///
/// * (a) `φ(α(x₁),x₂,…,x_{n−2}) = φ(x₁,…,x_{n−2})`;
/// * (b) the expanded form of `φ ∧ δφ_X = 0`:
///   `Σ_{i<j} (−1)^{i+j+1}(−1)^{γ_{ij}} φ(…x̂ᵢ…x̂ⱼ…) φ(Y,[xᵢ,xⱼ]) = 0` for all
///   `X ∈ basisⁿ`, `Y ∈ basis^{n−3}` (vacuous for `n = 2`).
pub fn check_phi_conditions(l: &HomLieSuperalgebra, phi: &Cochain) -> Result<CheckReport, Error> {
    if phi.space() != l.space() {
        return Err(Error::SpaceMismatch("cochain over a different space".into()));
    }
    let s = l.space();
    let (alpha, bracket) = (l.alpha(), l.bracket());
    let k = phi.arity();
    let n = k + 2;
    let invariance = if k == 0 {
        CheckReport::pass("phi-alpha-invariance")
    } else {
        let slots = vec![s; k];
        scan_scalars("phi-alpha-invariance", &slots, |t| {
            let mut args: Vec<Vector> = t.iter().map(|&i| s.basis(i)).collect();
            args[0] = alpha.image(t[0]);
            let refs: Vec<&Vector> = args.iter().collect();
            (phi.eval(&refs).expect("shapes agree"), phi.value(t).clone())
        })
    };
    let annihilation = if n < 3 {
        CheckReport::pass("phi-bracket-annihilation")
    } else {
        let slots = vec![s; n + (n - 3)];
        scan_scalars("phi-bracket-annihilation", &slots, |t| {
            let (x, y) = t.split_at(n);
            let book = ParityBook::from_tuple(s, x);
            let mut total = Scalar::zero();
            for i in 1..=n {
                for j in i + 1..=n {
                    let rest: Vec<usize> = x
                        .iter()
                        .enumerate()
                        .filter(|(p, _)| *p + 1 != i && *p + 1 != j)
                        .map(|(_, &v)| v)
                        .collect();
                    let c = phi.value(&rest);
                    if c.is_zero() {
                        continue;
                    }
                    let mut args: Vec<Vector> = y.iter().map(|&v| s.basis(v)).collect();
                    args.push(bracket.value(&[x[i - 1], x[j - 1]]));
                    let refs: Vec<&Vector> = args.iter().collect();
                    let inner = phi.eval(&refs).expect("shapes agree");
                    let sgn = sign(((i + j + 1) % 2 == 1) ^ book.gamma(i, j).is_odd());
                    total += sgn * c * inner;
                }
            }
            (total, Scalar::zero())
        })
    };
    Ok(CheckReport::aggregate("phi-conditions", vec![invariance, annihilation]))
}

/// `φ([x₁,…,x_n]_φ, y₁,…,y_{n−3}) = 0`, evaluated through the induced
/// bracket itself (a consequence of the cochain conditions).
pub fn check_phi_annihilates_induced(l: &HomLieSuperalgebra, phi: &Cochain) -> Result<CheckReport, Error> {
    require_even_cochain(phi, l.space())?;
    let s = l.space();
    let n = phi.arity() + 2;
    if n < 3 {
        return Ok(CheckReport::pass("phi-annihilates-induced"));
    }
    let induced = induced_map(l.bracket(), phi);
    let slots = vec![s; 2 * n - 3];
    Ok(scan_scalars("phi-annihilates-induced", &slots, |t| {
        let (x, y) = t.split_at(n);
        let mut args = vec![induced.value(x)];
        args.extend(y.iter().map(|&v| s.basis(v)));
        let refs: Vec<&Vector> = args.iter().collect();
        (phi.eval(&refs).expect("shapes agree"), Scalar::zero())
    }))
}

/// `φ(X,μ(y,z))α(t) = φ(X,y)μ(αz,t) + (−1)^{|y||z|}φ(X,z)μ(αy,t)` for all
/// `X ∈ basis^{n−3}` and basis `y, z, t`.
pub fn check_phi_poisson(p: &HomPoissonSuperalgebra, phi: &Cochain) -> Result<CheckReport, Error> {
    if phi.space() != p.space() {
        return Err(Error::SpaceMismatch("cochain over a different space".into()));
    }
    if phi.arity() == 0 {
        return Err(Error::ArityMismatch { expected: 1, found: 0 });
    }
    let s = p.space();
    let (mu, alpha) = (p.mu(), p.alpha());
    let m = phi.arity() - 1;
    let slots = vec![s; m + 3];
    Ok(scan_vectors("phi-poisson", &slots, s, |tuple| {
        let (x, rest) = tuple.split_at(m);
        let (y, z, t) = (rest[0], rest[1], rest[2]);
        let phi_x = |last: &Vector| -> Scalar {
            let mut args: Vec<Vector> = x.iter().map(|&v| s.basis(v)).collect();
            args.push(last.clone());
            let refs: Vec<&Vector> = args.iter().collect();
            phi.eval(&refs).expect("shapes agree")
        };
        let lhs = alpha.image(t).scaled(&phi_x(&mu.value(&[y, z])));
        let mut rhs = mu
            .eval_unchecked(&[&alpha.image(z), &s.basis(t)])
            .scaled(&phi_x(&s.basis(y)));
        let second = mu
            .eval_unchecked(&[&alpha.image(y), &s.basis(t)])
            .scaled(&phi_x(&s.basis(z)));
        rhs.add_scaled(&sign((s.parity(y) * s.parity(z)).is_odd()), &second);
        (lhs, rhs)
    }))
}

// ---------------------------------------------------------------------------
// Reduction to binary brackets.
// ---------------------------------------------------------------------------

/// Result of pinning the last `n − 2` slots of an n-ary bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction<S> {
    /// The reduced structure (returned even when the conditions fail).
    pub algebra: S,
    /// Per-condition verdicts: α-fixity of every `aᵢ` and `|A| = 0`.
    pub conditions: CheckReport,
}

impl<S> Reduction<S> {
    /// True when both reduction conditions hold, i.e. the output is
    /// guaranteed to inherit the input's structure.
    pub fn verified(&self) -> bool {
        self.conditions.passed()
    }
}

fn reduction_conditions(nambu: &NaryHomNambuSuperalgebra, a: &[Vector]) -> Result<(MultiLinearMap, CheckReport), Error> {
    let n = nambu.n();
    if a.len() != n - 2 {
        return Err(Error::ArityMismatch {
            expected: n - 2,
            found: a.len(),
        });
    }
    let s = nambu.space();
    let alpha = nambu.alpha()?;
    let mut total = Parity::Even;
    let mut subs = Vec::new();
    for (idx, v) in a.iter().enumerate() {
        s.check_vector(v)?;
        let p = s.parity_of(v).ok_or(Error::NotHomogeneous)?;
        total += p;
        let image = alpha.apply_unchecked(v);
        let name = format!("alpha-fixed-a{}", idx + 1);
        subs.push(if &image == v {
            CheckReport::pass(name)
        } else {
            CheckReport::fail(name, Witness::vectors(vec![format!("a{}", idx + 1)], vec![idx], s, &image, v))
                .with_note("α(a) ≠ a")
        });
    }
    subs.push(if total.is_odd() {
        CheckReport::fail_unwitnessed("total-parity-even", "parity ≠ 0: the pinned elements have odd total parity")
    } else {
        CheckReport::pass("total-parity-even")
    });
    let bracket = nambu.bracket();
    let reduced = MultiLinearMap::from_fn(s, 2, |t| {
        let mut args = vec![s.basis(t[0]), s.basis(t[1])];
        args.extend(a.iter().cloned());
        let refs: Vec<&Vector> = args.iter().collect();
        bracket.eval_unchecked(&refs)
    });
    Ok((reduced, CheckReport::aggregate("reduction-conditions", subs)))
}

/// `(𝒜, [·,·]_A, μ, α)` with `[x,y]_A = [x,y,a₁,…,a_{n−2}]`. Each `aᵢ` must
/// be homogeneous; the conditions `aᵢ ∈ ker(α − Id)` and `|A| = 0` are
/// reported in [`Reduction::conditions`].
pub fn reduce_bracket(
    p: &NaryHomNambuPoissonSuperalgebra,
    a: &[Vector],
) -> Result<Reduction<HomPoissonSuperalgebra>, Error> {
    let (reduced, conditions) = reduction_conditions(p.base(), a)?;
    let algebra = HomPoissonSuperalgebra::new(reduced, p.mu().clone(), p.alpha()?.clone())?
        .with_commutative(p.is_commutative());
    Ok(Reduction { algebra, conditions })
}

/// Reduction of an n-Hom-Lie superalgebra to a binary Hom-Lie bracket.
pub fn reduce_nambu_bracket(
    nambu: &NaryHomNambuSuperalgebra,
    a: &[Vector],
) -> Result<Reduction<HomLieSuperalgebra>, Error> {
    let (reduced, conditions) = reduction_conditions(nambu, a)?;
    let algebra = HomLieSuperalgebra::new(reduced, nambu.alpha()?.clone())?;
    Ok(Reduction { algebra, conditions })
}
