//! Representations of Hom-type superalgebras and their semidirect products.
//!
//! An action of an algebra `𝒜` on a Hom-module `(V, α_V)` is stored as one
//! endomorphism of `V` per basis tuple of `𝒜` (one slot for `η` and binary
//! `ρ`, `n − 1` slots for an n-ary `ρ`). Representation conditions are
//! operator identities; they are checked as equalities of endomorphisms,
//! column by column, so a failure is witnessed by an algebra tuple followed
//! by the module basis vector on which the two sides differ.
//!
//! Every representation check has a structural counterpart: the semidirect
//! product `𝒜 ⊕ V` built by the `semidirect_*` functions is a structure of
//! the same kind exactly when the representation conditions hold.
//!
//! Conventions:
//! * Hom-Poisson product condition: `ρ(μ(x,y))α_V = η(αx)ρ(y) + (−1)^{xy}η(αy)ρ(x)`.
//! * n-ary semidirect bracket: `[x₁+a₁,…,x_n+a_n] = [x₁,…,x_n] +
//!   Σ_k (−1)^{n−k}(−1)^{|a_k||X|_{k+1}} ρ(x₁,…,x̂_k,…,x_n)a_k`; the factor
//!   `(−1)^{n−k}` moves `a_k` to the last slot and makes the bracket
//!   super-skew-symmetric (for `n = 2` it reproduces the binary formula).

use crate::binary::{HomAssociativeSuperalgebra, HomLieSuperalgebra, HomPoissonSuperalgebra};
use crate::constructions::check_phi_conditions;
use crate::error::Error;
use crate::graded::{
    describe_tuple, linear_map_evenness, Cochain, LinearMap, MultiLinearMap, Parity, ParityBook, SuperSpace,
    Tuples, Vector,
};
use crate::nary::{NaryHomNambuPoissonSuperalgebra, NaryHomNambuSuperalgebra};
use crate::report::{scan_operators, CheckReport, Witness};
use crate::scalar::{sign, Scalar};
use num::Zero;

// ---------------------------------------------------------------------------
// Modules and actions.
// ---------------------------------------------------------------------------

/// A graded space `V` with an even twisting map `α_V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomModule {
    space: SuperSpace,
    alpha_v: LinearMap,
}

impl HomModule {
    /// `alpha_v` must be an endomorphism of `space`; its evenness is a
    /// sub-check of every representation check.
    pub fn new(space: SuperSpace, alpha_v: LinearMap) -> Result<Self, Error> {
        if !alpha_v.is_endomorphism_of(&space) {
            return Err(Error::SpaceMismatch("alpha_v is not an endomorphism of the module".into()));
        }
        Ok(HomModule { space, alpha_v })
    }

    /// The module with `α_V = id`.
    pub fn untwisted(space: SuperSpace) -> Self {
        let alpha_v = LinearMap::identity(&space);
        HomModule { space, alpha_v }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn alpha_v(&self) -> &LinearMap {
        &self.alpha_v
    }

    /// Evenness of `α_V`.
    pub fn check_even(&self) -> CheckReport {
        linear_map_evenness("alpha-v-even", &self.alpha_v)
    }
}

/// A multilinear action `𝒜^{slots} → End(V)`, stored as one endomorphism of
/// `V` per basis tuple of `𝒜` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    algebra: SuperSpace,
    module: SuperSpace,
    slots: usize,
    operators: Vec<LinearMap>,
}

impl Action {
    /// The zero action.
    pub fn zero(algebra: &SuperSpace, module: &SuperSpace, slots: usize) -> Self {
        let count = algebra.dim().pow(slots as u32);
        Action {
            algebra: algebra.clone(),
            module: module.clone(),
            slots,
            operators: vec![LinearMap::zero(module, module); count],
        }
    }

    /// Builds the action tuple by tuple; every operator must be an
    /// endomorphism of `module`.
    pub fn from_fn(
        algebra: &SuperSpace,
        module: &SuperSpace,
        slots: usize,
        mut f: impl FnMut(&[usize]) -> LinearMap,
    ) -> Result<Self, Error> {
        let mut operators = Vec::new();
        for tuple in Tuples::uniform(algebra.dim(), slots) {
            let op = f(&tuple);
            if !op.is_endomorphism_of(module) {
                return Err(Error::SpaceMismatch(format!(
                    "operator for ({}) is not an endomorphism of the module",
                    describe_tuple(algebra, &tuple)
                )));
            }
            operators.push(op);
        }
        Ok(Action { algebra: algebra.clone(), module: module.clone(), slots, operators })
    }

    /// The regular action `η(x) = μ(x,·)` of a binary product on its own
    /// space.
    pub fn regular(mu: &MultiLinearMap) -> Result<Self, Error> {
        if mu.arity() != 2 {
            return Err(Error::ArityMismatch { expected: 2, found: mu.arity() });
        }
        Self::adjoint(mu)
    }

    /// The adjoint action `ad_X = [x₁,…,x_{k},·]` of a `(k+1)`-ary operation
    /// on its own space (`k = arity − 1` slots).
    pub fn adjoint(bracket: &MultiLinearMap) -> Result<Self, Error> {
        if bracket.arity() < 2 {
            return Err(Error::ArityMismatch { expected: 2, found: bracket.arity() });
        }
        let s = bracket.space();
        Self::from_fn(s, s, bracket.arity() - 1, |t| {
            let images: Vec<Vector> = (0..s.dim())
                .map(|v| {
                    let mut full = t.to_vec();
                    full.push(v);
                    bracket.value(&full)
                })
                .collect();
            LinearMap::from_images(s, s, &images).expect("images have the space dimension")
        })
    }

    pub fn algebra(&self) -> &SuperSpace {
        &self.algebra
    }

    pub fn module(&self) -> &SuperSpace {
        &self.module
    }

    /// Number of algebra slots.
    pub fn slots(&self) -> usize {
        self.slots
    }

    fn flat(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &i| acc * self.algebra.dim() + i)
    }

    /// The operator attached to a basis tuple.
    ///
    /// # Panics
    /// If the tuple length differs from [`Action::slots`] or an index is out
    /// of range.
    pub fn operator(&self, tuple: &[usize]) -> &LinearMap {
        assert_eq!(tuple.len(), self.slots, "tuple length must equal the number of slots");
        assert!(tuple.iter().all(|&i| i < self.algebra.dim()), "basis index out of range");
        &self.operators[self.flat(tuple)]
    }

    /// Replaces the operator attached to a basis tuple.
    pub fn set(&mut self, tuple: &[usize], op: LinearMap) -> Result<(), Error> {
        if tuple.len() != self.slots {
            return Err(Error::ArityMismatch { expected: self.slots, found: tuple.len() });
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.algebra.dim()) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.algebra.dim() });
        }
        if !op.is_endomorphism_of(&self.module) {
            return Err(Error::SpaceMismatch("operator is not an endomorphism of the module".into()));
        }
        let k = self.flat(tuple);
        self.operators[k] = op;
        Ok(())
    }

    /// Sets one matrix entry `⟨row| ρ(tuple) |col⟩`.
    pub fn set_entry(&mut self, tuple: &[usize], row: usize, col: usize, value: Scalar) -> Result<(), Error> {
        if tuple.len() != self.slots {
            return Err(Error::ArityMismatch { expected: self.slots, found: tuple.len() });
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.algebra.dim()) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.algebra.dim() });
        }
        let d = self.module.dim();
        if row >= d || col >= d {
            return Err(Error::IndexOutOfRange { index: row.max(col), len: d });
        }
        let mut op = self.operator(tuple).clone();
        op.set(row, col, value);
        self.set(tuple, op)
    }

    /// All `(tuple, operator)` pairs with a nonzero operator.
    pub fn entries(&self) -> Vec<(Vec<usize>, &LinearMap)> {
        Tuples::uniform(self.algebra.dim(), self.slots)
            .zip(&self.operators)
            .filter(|(_, op)| !op.is_zero())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.operators.iter().all(LinearMap::is_zero)
    }

    /// Multilinear extension to arbitrary algebra vectors.
    pub fn operator_of(&self, args: &[&Vector]) -> Result<LinearMap, Error> {
        if args.len() != self.slots {
            return Err(Error::ArityMismatch { expected: self.slots, found: args.len() });
        }
        for a in args {
            self.algebra.check_vector(a)?;
        }
        Ok(self.operator_of_unchecked(args))
    }

    pub(crate) fn operator_of_unchecked(&self, args: &[&Vector]) -> LinearMap {
        let mut out = LinearMap::zero(&self.module, &self.module);
        let supports: Vec<Vec<(usize, &Scalar)>> = args.iter().map(|a| a.support().collect()).collect();
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let radices: Vec<usize> = supports.iter().map(Vec::len).collect();
        for pick in Tuples::new(radices) {
            let mut coeff = Scalar::from_integer(1.into());
            let mut tuple = Vec::with_capacity(pick.len());
            for (slot, &p) in pick.iter().enumerate() {
                let (index, c) = supports[slot][p];
                coeff *= c;
                tuple.push(index);
            }
            out.add_scaled_unchecked(&coeff, &self.operators[self.flat(&tuple)]);
        }
        out
    }

    /// The action applied to a module vector.
    pub fn apply(&self, args: &[&Vector], v: &Vector) -> Result<Vector, Error> {
        self.operator_of(args)?.apply(v)
    }

    /// Evenness as a map `𝒜^{⊗slots} ⊗ V → V`: the operator of a tuple of
    /// total parity `p` shifts module parities by `p`.
    pub fn check_even(&self, name: &str) -> CheckReport {
        for (tuple, op) in Tuples::uniform(self.algebra.dim(), self.slots).zip(&self.operators) {
            let p = self.algebra.tuple_parity(&tuple);
            for col in 0..self.module.dim() {
                let target = self.module.parity(col) + p;
                let image = op.image(col);
                let mut allowed = image.clone();
                for row in 0..self.module.dim() {
                    if self.module.parity(row) != target {
                        allowed.set(row, Scalar::zero());
                    }
                }
                if allowed != image {
                    let mut labels: Vec<String> = tuple.iter().map(|&i| self.algebra.label(i).to_string()).collect();
                    labels.push(self.module.label(col).to_string());
                    let mut indices = tuple.clone();
                    indices.push(col);
                    return CheckReport::fail(name, Witness::vectors(labels, indices, &self.module, &image, &allowed))
                        .with_note("image has a component of the wrong parity (lhs: image, rhs: admissible part)");
                }
            }
        }
        CheckReport::pass(name)
    }

    /// Super-alternation in the algebra slots:
    /// `ρ(…,xᵢ,xᵢ₊₁,…) = −(−1)^{|xᵢ||xᵢ₊₁|} ρ(…,xᵢ₊₁,xᵢ,…)`.
    pub fn check_alternating(&self, name: &str) -> CheckReport {
        let s = &self.algebra;
        let slots = vec![s; self.slots];
        scan_operators(name, &slots, &self.module, |t| {
            let lhs = self.operator(t).clone();
            for i in 0..t.len().saturating_sub(1) {
                let mut swapped = t.to_vec();
                swapped.swap(i, i + 1);
                let both_odd = (s.parity(t[i]) * s.parity(t[i + 1])).is_odd();
                let rhs = self.operator(&swapped).scaled(&sign(!both_odd));
                if rhs != lhs {
                    return (lhs, rhs);
                }
            }
            (lhs.clone(), lhs)
        })
    }
}

// ---------------------------------------------------------------------------
// Representation data.
// ---------------------------------------------------------------------------

fn require_action(action: &Action, algebra: &SuperSpace, module: &SuperSpace, slots: usize) -> Result<(), Error> {
    if action.algebra() != algebra {
        return Err(Error::SpaceMismatch("action over a different algebra space".into()));
    }
    if action.module() != module {
        return Err(Error::SpaceMismatch("action on a different module space".into()));
    }
    if action.slots() != slots {
        return Err(Error::ArityMismatch { expected: slots, found: action.slots() });
    }
    Ok(())
}

/// A representation of a binary structure: a Hom-module together with an
/// associative action `η`, a Lie action `ρ`, or both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryRepresentation {
    module: HomModule,
    eta: Option<Action>,
    rho: Option<Action>,
}

impl BinaryRepresentation {
    /// `(V, η, α_V)` for a Hom-associative superalgebra.
    pub fn associative(module: HomModule, eta: Action) -> Result<Self, Error> {
        require_action(&eta, eta.algebra(), module.space(), 1)?;
        Ok(BinaryRepresentation { module, eta: Some(eta), rho: None })
    }

    /// `(V, ρ, α_V)` for a Hom-Lie superalgebra.
    pub fn lie(module: HomModule, rho: Action) -> Result<Self, Error> {
        require_action(&rho, rho.algebra(), module.space(), 1)?;
        Ok(BinaryRepresentation { module, eta: None, rho: Some(rho) })
    }

    /// `(V, ρ, η, α_V)` for a Hom-Poisson superalgebra.
    pub fn poisson(module: HomModule, rho: Action, eta: Action) -> Result<Self, Error> {
        require_action(&rho, rho.algebra(), module.space(), 1)?;
        require_action(&eta, rho.algebra(), module.space(), 1)?;
        Ok(BinaryRepresentation { module, eta: Some(eta), rho: Some(rho) })
    }

    pub fn module(&self) -> &HomModule {
        &self.module
    }

    pub fn eta(&self) -> Option<&Action> {
        self.eta.as_ref()
    }

    pub fn rho(&self) -> Option<&Action> {
        self.rho.as_ref()
    }

    fn require_eta(&self, algebra: &SuperSpace) -> Result<&Action, Error> {
        let eta = self
            .eta
            .as_ref()
            .ok_or_else(|| Error::FlavorMismatch("representation carries no associative action".into()))?;
        require_action(eta, algebra, self.module.space(), 1)?;
        Ok(eta)
    }

    fn require_rho(&self, algebra: &SuperSpace) -> Result<&Action, Error> {
        let rho = self
            .rho
            .as_ref()
            .ok_or_else(|| Error::FlavorMismatch("representation carries no Lie action".into()))?;
        require_action(rho, algebra, self.module.space(), 1)?;
        Ok(rho)
    }
}

/// A representation of an n-ary structure: `ρ` with `n − 1` slots and, for
/// the Poisson case, an associative action `η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaryRepresentation {
    module: HomModule,
    rho: Action,
    eta: Option<Action>,
}

impl NaryRepresentation {
    /// `(V, ρ, α_V)` for an n-Hom-Lie superalgebra (`n = ρ.slots() + 1`).
    pub fn new(module: HomModule, rho: Action) -> Result<Self, Error> {
        require_action(&rho, rho.algebra(), module.space(), rho.slots())?;
        if rho.slots() == 0 {
            return Err(Error::ArityMismatch { expected: 1, found: 0 });
        }
        Ok(NaryRepresentation { module, rho, eta: None })
    }

    /// `(V, ρ, η, α_V)` for an n-ary Hom-Nambu–Poisson superalgebra.
    pub fn with_eta(module: HomModule, rho: Action, eta: Action) -> Result<Self, Error> {
        let mut rep = Self::new(module, rho)?;
        require_action(&eta, rep.rho.algebra(), rep.module.space(), 1)?;
        rep.eta = Some(eta);
        Ok(rep)
    }

    /// The `n = 2` reading of a binary representation (requires `ρ`).
    pub fn from_binary(rep: &BinaryRepresentation) -> Result<Self, Error> {
        let rho = rep
            .rho
            .clone()
            .ok_or_else(|| Error::FlavorMismatch("representation carries no Lie action".into()))?;
        Ok(NaryRepresentation { module: rep.module.clone(), rho, eta: rep.eta.clone() })
    }

    /// Arity `n` of the structures this represents.
    pub fn n(&self) -> usize {
        self.rho.slots() + 1
    }

    pub fn module(&self) -> &HomModule {
        &self.module
    }

    pub fn rho(&self) -> &Action {
        &self.rho
    }

    pub fn eta(&self) -> Option<&Action> {
        self.eta.as_ref()
    }

    /// The binary representation carried by `η` alone.
    pub fn associative_part(&self) -> Option<BinaryRepresentation> {
        self.eta
            .clone()
            .map(|eta| BinaryRepresentation { module: self.module.clone(), eta: Some(eta), rho: None })
    }
}

// ---------------------------------------------------------------------------
// Operator helpers.
// ---------------------------------------------------------------------------

/// Accumulates signed compositions of module endomorphisms.
struct OperatorSum {
    value: LinearMap,
}

impl OperatorSum {
    fn new(module: &SuperSpace) -> Self {
        OperatorSum { value: LinearMap::zero(module, module) }
    }

    fn add(&mut self, negative: bool, op: &LinearMap) {
        self.value.add_scaled_unchecked(&sign(negative), op);
    }

    fn add_composite(&mut self, negative: bool, left: &LinearMap, right: &LinearMap) {
        self.add(negative, &left.compose_unchecked(right));
    }
}

fn images(map: &LinearMap) -> Vec<Vector> {
    (0..map.domain().dim()).map(|i| map.image(i)).collect()
}

fn op_of(action: &Action, args: &[Vector]) -> LinearMap {
    let refs: Vec<&Vector> = args.iter().collect();
    action.operator_of_unchecked(&refs)
}

fn koszul(space: &SuperSpace, i: usize, j: usize) -> bool {
    (space.parity(i) * space.parity(j)).is_odd()
}

// ---------------------------------------------------------------------------
// Binary representation checks.
// ---------------------------------------------------------------------------

fn rep_assoc_reports(a: &HomAssociativeSuperalgebra, module: &HomModule, eta: &Action) -> Vec<CheckReport> {
    let s = a.space();
    let (mu, alpha, alpha_v) = (a.mu(), a.alpha(), module.alpha_v());
    let alpha_imgs = images(alpha);
    let v = module.space();
    let compatibility = scan_operators("rep-assoc-compatibility", &[s, s], v, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = eta.operator_of_unchecked(&[&mu.value(&[x, y])]).compose_unchecked(alpha_v);
        let rhs = eta.operator_of_unchecked(&[&alpha_imgs[x]]).compose_unchecked(eta.operator(&[y]));
        (lhs, rhs)
    });
    let symmetry = scan_operators("rep-assoc-symmetry", &[s, s], v, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = eta.operator_of_unchecked(&[&alpha_imgs[x]]).compose_unchecked(eta.operator(&[y]));
        let mut rhs = OperatorSum::new(v);
        rhs.add_composite(
            koszul(s, x, y),
            &eta.operator_of_unchecked(&[&alpha_imgs[y]]),
            eta.operator(&[x]),
        );
        (lhs, rhs.value)
    });
    vec![eta.check_even("eta-even"), module.check_even(), compatibility, symmetry]
}

/// Representation of a commutative Hom-associative superalgebra:
///
/// * `η(μ(x,y))α_V = η(αx)η(y)`;
/// * `η(αx)η(y) = (−1)^{xy}η(αy)η(x)`.
pub fn check_rep_assoc(a: &HomAssociativeSuperalgebra, rep: &BinaryRepresentation) -> Result<CheckReport, Error> {
    let eta = rep.require_eta(a.space())?;
    Ok(CheckReport::aggregate("rep-assoc", rep_assoc_reports(a, &rep.module, eta)))
}

fn rep_lie_identity(l: &HomLieSuperalgebra, module: &HomModule, rho: &Action) -> CheckReport {
    let s = l.space();
    let (bracket, alpha_v) = (l.bracket(), module.alpha_v());
    let alpha_imgs = images(l.alpha());
    let v = module.space();
    scan_operators("rep-lie", &[s, s], v, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = rho.operator_of_unchecked(&[&bracket.value(&[x, y])]).compose_unchecked(alpha_v);
        let mut rhs = OperatorSum::new(v);
        rhs.add_composite(false, &rho.operator_of_unchecked(&[&alpha_imgs[x]]), rho.operator(&[y]));
        rhs.add_composite(!koszul(s, x, y), &rho.operator_of_unchecked(&[&alpha_imgs[y]]), rho.operator(&[x]));
        (lhs, rhs.value)
    })
}

/// Representation of a Hom-Lie superalgebra:
/// `ρ([x,y])α_V = ρ(αx)ρ(y) − (−1)^{xy}ρ(αy)ρ(x)`.
pub fn check_rep_lie(l: &HomLieSuperalgebra, rep: &BinaryRepresentation) -> Result<CheckReport, Error> {
    let rho = rep.require_rho(l.space())?;
    Ok(CheckReport::aggregate(
        "rep-lie",
        vec![rho.check_even("rho-even"), rep.module.check_even(), rep_lie_identity(l, &rep.module, rho)],
    ))
}

/// Representation of a Hom-Poisson superalgebra: the associative and Lie
/// conditions together with
///
/// * `η([x,y])α_V = ρ(αx)η(y) − (−1)^{xy}η(αy)ρ(x)`;
/// * `ρ(μ(x,y))α_V = η(αx)ρ(y) + (−1)^{xy}η(αy)ρ(x)`.
pub fn check_rep_poisson(p: &HomPoissonSuperalgebra, rep: &BinaryRepresentation) -> Result<CheckReport, Error> {
    let s = p.space();
    let eta = rep.require_eta(s)?;
    let rho = rep.require_rho(s)?;
    let (mu, bracket, alpha_v) = (p.mu(), p.bracket(), rep.module.alpha_v());
    let alpha_imgs = images(p.alpha());
    let v = rep.module.space();
    let assoc = CheckReport::aggregate("rep-assoc", rep_assoc_reports(p.assoc(), &rep.module, eta));
    let lie = CheckReport::aggregate(
        "rep-lie",
        vec![rho.check_even("rho-even"), rep.module.check_even(), rep_lie_identity(p.lie(), &rep.module, rho)],
    );
    let bracket_law = scan_operators("rep-poisson-bracket", &[s, s], v, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = eta.operator_of_unchecked(&[&bracket.value(&[x, y])]).compose_unchecked(alpha_v);
        let mut rhs = OperatorSum::new(v);
        rhs.add_composite(false, &rho.operator_of_unchecked(&[&alpha_imgs[x]]), eta.operator(&[y]));
        rhs.add_composite(!koszul(s, x, y), &eta.operator_of_unchecked(&[&alpha_imgs[y]]), rho.operator(&[x]));
        (lhs, rhs.value)
    });
    let product_law = scan_operators("rep-poisson-product", &[s, s], v, |t| {
        let (x, y) = (t[0], t[1]);
        let lhs = rho.operator_of_unchecked(&[&mu.value(&[x, y])]).compose_unchecked(alpha_v);
        let mut rhs = OperatorSum::new(v);
        rhs.add_composite(false, &eta.operator_of_unchecked(&[&alpha_imgs[x]]), rho.operator(&[y]));
        rhs.add_composite(koszul(s, x, y), &eta.operator_of_unchecked(&[&alpha_imgs[y]]), rho.operator(&[x]));
        (lhs, rhs.value)
    });
    Ok(CheckReport::aggregate("rep-poisson", vec![assoc, lie, bracket_law, product_law]))
}

// ---------------------------------------------------------------------------
// n-ary representation checks.
// ---------------------------------------------------------------------------

fn require_nary(nambu: &NaryHomNambuSuperalgebra, rep: &NaryRepresentation) -> Result<(), Error> {
    if rep.n() != nambu.n() {
        return Err(Error::ArityMismatch { expected: nambu.n() - 1, found: rep.rho.slots() });
    }
    require_action(&rep.rho, nambu.space(), rep.module.space(), nambu.n() - 1)
}

/// Representation of an n-Hom-Lie superalgebra (multiplicative twist):
///
/// * `ρ(αX)ρ(Y) − (−1)^{|X||Y|}ρ(αY)ρ(X) =
///   Σ_{i=1}^{n−1} (−1)^{|X||Y|^{i−1}} ρ(αy₁,…,[X,yᵢ],…,αy_{n−1})α_V`
///   for `X, Y ∈ basis^{n−1}`;
/// * `ρ(αx₁,…,αx_{n−2},[y₁,…,y_n])α_V = Σ_{i=1}^{n} (−1)^{n−i}
///   (−1)^{|X|(|Y|+|yᵢ|)+|yᵢ||Y|_{i+1}} ρ(αy₁,…,ŷᵢ,…,αy_n)ρ(x₁,…,x_{n−2},yᵢ)`
///   for `X ∈ basis^{n−2}`, `Y ∈ basis^n`;
///
/// together with evenness of `ρ` and `α_V` and super-alternation of `ρ`.
pub fn check_rep_n_hom_lie(nambu: &NaryHomNambuSuperalgebra, rep: &NaryRepresentation) -> Result<CheckReport, Error> {
    require_nary(nambu, rep)?;
    let alpha = nambu.alpha()?;
    let s = nambu.space();
    let n = nambu.n();
    let bracket = nambu.bracket();
    let rho = &rep.rho;
    let alpha_v = rep.module.alpha_v();
    let alpha_imgs = images(alpha);
    let v = rep.module.space();

    let slots1 = vec![s; 2 * (n - 1)];
    let commutator = scan_operators("rep-n-hom-lie-commutator", &slots1, v, |t| {
        let (x, y) = t.split_at(n - 1);
        let px = s.tuple_parity(x);
        let py = s.tuple_parity(y);
        let ax: Vec<Vector> = x.iter().map(|&i| alpha_imgs[i].clone()).collect();
        let ay: Vec<Vector> = y.iter().map(|&i| alpha_imgs[i].clone()).collect();
        let mut lhs = OperatorSum::new(v);
        lhs.add_composite(false, &op_of(rho, &ax), rho.operator(y));
        lhs.add_composite(!(px * py).is_odd(), &op_of(rho, &ay), rho.operator(x));
        let mut rhs = OperatorSum::new(v);
        let mut prefix = Parity::Even;
        for i in 0..n - 1 {
            let mut full = x.to_vec();
            full.push(y[i]);
            let mut args = ay.clone();
            args[i] = bracket.value(&full);
            rhs.add((px * prefix).is_odd(), &op_of(rho, &args).compose_unchecked(alpha_v));
            prefix += s.parity(y[i]);
        }
        (lhs.value, rhs.value)
    });

    let slots2 = vec![s; (n - 2) + n];
    let bracket_slot = scan_operators("rep-n-hom-lie-bracket-slot", &slots2, v, |t| {
        let (x, y) = t.split_at(n - 2);
        let px = s.tuple_parity(x);
        let book = ParityBook::from_tuple(s, y);
        let py = book.total();
        let mut args: Vec<Vector> = x.iter().map(|&i| alpha_imgs[i].clone()).collect();
        args.push(bracket.value(y));
        let lhs = op_of(rho, &args).compose_unchecked(alpha_v);
        let mut rhs = OperatorSum::new(v);
        for i in 1..=n {
            let yi = y[i - 1];
            let exponent = (px * (py + s.parity(yi))) + s.parity(yi) * book.range(i + 1, n);
            let negative = ((n - i) % 2 == 1) ^ exponent.is_odd();
            let rest: Vec<Vector> = y
                .iter()
                .enumerate()
                .filter(|(k, _)| *k + 1 != i)
                .map(|(_, &j)| alpha_imgs[j].clone())
                .collect();
            let mut inner = x.to_vec();
            inner.push(yi);
            rhs.add_composite(negative, &op_of(rho, &rest), rho.operator(&inner));
        }
        (lhs, rhs.value)
    });

    Ok(CheckReport::aggregate(
        "rep-n-hom-lie",
        vec![
            rho.check_even("rho-even"),
            rep.module.check_even(),
            rho.check_alternating("rho-alternating"),
            commutator,
            bracket_slot,
        ],
    ))
}

/// Representation of an n-ary Hom-Nambu–Poisson superalgebra: the n-Hom-Lie
/// and associative conditions together with
///
/// * `η([X,y])α_V = ρ(αX)η(y) − (−1)^{|y||X|}η(αy)ρ(X)` for `X ∈ basis^{n−1}`;
/// * `ρ(αX,μ(y,z))α_V = (−1)^{|y||X|}η(αy)ρ(X,z) + (−1)^{|z|(|X|+|y|)}η(αz)ρ(X,y)`
///   for `X ∈ basis^{n−2}`.
pub fn check_rep_nary_poisson(
    p: &NaryHomNambuPoissonSuperalgebra,
    rep: &NaryRepresentation,
) -> Result<CheckReport, Error> {
    let nambu = p.base();
    require_nary(nambu, rep)?;
    let s = p.space();
    let eta = rep
        .eta
        .as_ref()
        .ok_or_else(|| Error::FlavorMismatch("representation carries no associative action".into()))?;
    require_action(eta, s, rep.module.space(), 1)?;
    let n = p.n();
    let lie = check_rep_n_hom_lie(nambu, rep)?;
    let assoc = CheckReport::aggregate("rep-assoc", rep_assoc_reports(&p.assoc()?, &rep.module, eta));
    let alpha_imgs = images(p.alpha()?);
    let (bracket, mu) = (p.bracket(), p.mu());
    let rho = &rep.rho;
    let alpha_v = rep.module.alpha_v();
    let v = rep.module.space();

    let bracket_law = scan_operators("rep-nary-poisson-bracket", &vec![s; n], v, |t| {
        let (x, y) = (&t[..n - 1], t[n - 1]);
        let px = s.tuple_parity(x);
        let lhs = eta.operator_of_unchecked(&[&bracket.value(t)]).compose_unchecked(alpha_v);
        let ax: Vec<Vector> = x.iter().map(|&i| alpha_imgs[i].clone()).collect();
        let mut rhs = OperatorSum::new(v);
        rhs.add_composite(false, &op_of(rho, &ax), eta.operator(&[y]));
        rhs.add_composite(
            !(s.parity(y) * px).is_odd(),
            &eta.operator_of_unchecked(&[&alpha_imgs[y]]),
            rho.operator(x),
        );
        (lhs, rhs.value)
    });

    let product_law = scan_operators("rep-nary-poisson-product", &vec![s; n], v, |t| {
        let (x, y, z) = (&t[..n - 2], t[n - 2], t[n - 1]);
        let px = s.tuple_parity(x);
        let mut args: Vec<Vector> = x.iter().map(|&i| alpha_imgs[i].clone()).collect();
        args.push(mu.value(&[y, z]));
        let lhs = op_of(rho, &args).compose_unchecked(alpha_v);
        let with_last = |last: usize| {
            let mut full = x.to_vec();
            full.push(last);
            rho.operator(&full).clone()
        };
        let mut rhs = OperatorSum::new(v);
        rhs.add_composite(
            (s.parity(y) * px).is_odd(),
            &eta.operator_of_unchecked(&[&alpha_imgs[y]]),
            &with_last(z),
        );
        rhs.add_composite(
            (s.parity(z) * (px + s.parity(y))).is_odd(),
            &eta.operator_of_unchecked(&[&alpha_imgs[z]]),
            &with_last(y),
        );
        (lhs, rhs.value)
    });

    Ok(CheckReport::aggregate("rep-nary-poisson", vec![lie, assoc, bracket_law, product_law]))
}

// ---------------------------------------------------------------------------
// Semidirect products.
// ---------------------------------------------------------------------------

/// Algebra basis index `i` or module basis index `i − dim 𝒜` of `𝒜 ⊕ V`.
enum Summand {
    Algebra(usize),
    Module(usize),
}

struct SumLayout {
    algebra: SuperSpace,
    module: SuperSpace,
    space: SuperSpace,
}

impl SumLayout {
    fn new(algebra: &SuperSpace, module: &SuperSpace) -> Self {
        SumLayout { algebra: algebra.clone(), module: module.clone(), space: algebra.direct_sum(module) }
    }

    fn split(&self, i: usize) -> Summand {
        if i < self.algebra.dim() {
            Summand::Algebra(i)
        } else {
            Summand::Module(i - self.algebra.dim())
        }
    }

    fn embed_algebra(&self, v: &Vector) -> Vector {
        v.concat(&self.module.zero())
    }

    fn embed_module(&self, v: &Vector) -> Vector {
        self.algebra.zero().concat(v)
    }

    fn twist(&self, alpha: &LinearMap, alpha_v: &LinearMap) -> LinearMap {
        let mut images: Vec<Vector> = images(alpha).iter().map(|v| self.embed_algebra(v)).collect();
        images.extend(self::images(alpha_v).iter().map(|v| self.embed_module(v)));
        LinearMap::from_images(&self.space, &self.space, &images).expect("block images have the sum dimension")
    }

    /// `μ(x+u, y+v) = μ(x,y) + η(x)v + (−1)^{|y||u|}η(y)u` (also the binary
    /// Lie formula with `η → ρ` and the second term negated).
    fn binary(&self, op: &MultiLinearMap, action: &Action, antisymmetric: bool) -> MultiLinearMap {
        MultiLinearMap::from_fn(&self.space, 2, |t| match (self.split(t[0]), self.split(t[1])) {
            (Summand::Algebra(x), Summand::Algebra(y)) => self.embed_algebra(&op.value(&[x, y])),
            (Summand::Algebra(x), Summand::Module(v)) => self.embed_module(&action.operator(&[x]).image(v)),
            (Summand::Module(u), Summand::Algebra(y)) => {
                let negative = antisymmetric ^ (self.algebra.parity(y) * self.module.parity(u)).is_odd();
                self.embed_module(&action.operator(&[y]).image(u).scaled(&sign(negative)))
            }
            (Summand::Module(_), Summand::Module(_)) => self.space.zero(),
        })
    }

    /// `[x₁+a₁,…,x_n+a_n] = [X] + Σ_k (−1)^{n−k}(−1)^{|a_k||X|_{k+1}} ρ(X̂_k)a_k`.
    fn nary(&self, bracket: &MultiLinearMap, rho: &Action) -> MultiLinearMap {
        let n = bracket.arity();
        MultiLinearMap::from_fn(&self.space, n, |t| {
            let parts: Vec<Summand> = t.iter().map(|&i| self.split(i)).collect();
            let module_slots: Vec<usize> = parts
                .iter()
                .enumerate()
                .filter(|(_, p)| matches!(p, Summand::Module(_)))
                .map(|(k, _)| k)
                .collect();
            match module_slots.as_slice() {
                [] => self.embed_algebra(&bracket.value(t)),
                [k] => {
                    let k = *k;
                    let a = t[k] - self.algebra.dim();
                    let rest: Vec<usize> = t.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &i)| i).collect();
                    let after: Parity = t[k + 1..].iter().map(|&i| self.algebra.parity(i)).sum();
                    let negative = ((n - (k + 1)) % 2 == 1) ^ (self.module.parity(a) * after).is_odd();
                    self.embed_module(&rho.operator(&rest).image(a).scaled(&sign(negative)))
                }
                _ => self.space.zero(),
            }
        })
    }
}

/// Semidirect product `𝒜 ⊕ V` of a Hom-associative superalgebra and an
/// associative action, twisted by `α ⊕ α_V`; it is a commutative
/// Hom-associative superalgebra exactly when the representation conditions
/// hold (for commutative `𝒜`).
pub fn semidirect_assoc(
    a: &HomAssociativeSuperalgebra,
    rep: &BinaryRepresentation,
) -> Result<HomAssociativeSuperalgebra, Error> {
    let eta = rep.require_eta(a.space())?;
    let layout = SumLayout::new(a.space(), rep.module.space());
    let mu = layout.binary(a.mu(), eta, false);
    let alpha = layout.twist(a.alpha(), rep.module.alpha_v());
    Ok(HomAssociativeSuperalgebra::new(mu, alpha)?.with_commutative(a.is_commutative()))
}

/// Semidirect product `𝒜 ⊕ V` with bracket `[x+u,y+v] = [x,y] + ρ(x)v −
/// (−1)^{|y||u|}ρ(y)u` and twist `α ⊕ α_V`.
pub fn semidirect_lie(l: &HomLieSuperalgebra, rep: &BinaryRepresentation) -> Result<HomLieSuperalgebra, Error> {
    let rho = rep.require_rho(l.space())?;
    let layout = SumLayout::new(l.space(), rep.module.space());
    let bracket = layout.binary(l.bracket(), rho, true);
    let alpha = layout.twist(l.alpha(), rep.module.alpha_v());
    HomLieSuperalgebra::new(bracket, alpha)
}

/// Semidirect product of a Hom-Poisson superalgebra: both formulas at once.
pub fn semidirect_poisson(
    p: &HomPoissonSuperalgebra,
    rep: &BinaryRepresentation,
) -> Result<HomPoissonSuperalgebra, Error> {
    let lie = semidirect_lie(p.lie(), rep)?;
    let assoc = semidirect_assoc(p.assoc(), rep)?;
    HomPoissonSuperalgebra::from_parts(lie, assoc)
}

/// Semidirect product of an n-Hom-Lie superalgebra (multiplicative twist):
/// `[x₁+a₁,…,x_n+a_n] = [X] + Σ_k (−1)^{n−k}(−1)^{|a_k||X|_{k+1}}
/// ρ(x₁,…,x̂_k,…,x_n)a_k`, twisted by `α ⊕ α_V`.
pub fn semidirect_n_hom_lie(
    nambu: &NaryHomNambuSuperalgebra,
    rep: &NaryRepresentation,
) -> Result<NaryHomNambuSuperalgebra, Error> {
    require_nary(nambu, rep)?;
    let alpha = nambu.alpha()?;
    let layout = SumLayout::new(nambu.space(), rep.module.space());
    let bracket = layout.nary(nambu.bracket(), &rep.rho);
    NaryHomNambuSuperalgebra::new(bracket, layout.twist(alpha, rep.module.alpha_v()))
}

/// Semidirect product of an n-ary Hom-Nambu–Poisson superalgebra: the n-ary
/// bracket of [`semidirect_n_hom_lie`] and the product of
/// [`semidirect_assoc`].
pub fn semidirect_nary_poisson(
    p: &NaryHomNambuPoissonSuperalgebra,
    rep: &NaryRepresentation,
) -> Result<NaryHomNambuPoissonSuperalgebra, Error> {
    let eta = rep
        .eta
        .as_ref()
        .ok_or_else(|| Error::FlavorMismatch("representation carries no associative action".into()))?;
    require_action(eta, p.space(), rep.module.space(), 1)?;
    let base = semidirect_n_hom_lie(p.base(), rep)?;
    let layout = SumLayout::new(p.space(), rep.module.space());
    let mu = layout.binary(p.mu(), eta, false);
    Ok(NaryHomNambuPoissonSuperalgebra::new(base, mu)?.with_commutative(p.is_commutative()))
}

// ---------------------------------------------------------------------------
// Induced representations.
// ---------------------------------------------------------------------------

/// `ρ_φ(x₁,…,x_{n−1}) = Σᵢ (−1)^{n−i−1}(−1)^{|xᵢ||X|_{i+1}}
/// φ(x₁,…,x̂ᵢ,…,x_{n−1}) ρ(xᵢ)` on a basis tuple.
fn induced_operator(rho: &Action, phi: &Cochain, tuple: &[usize]) -> LinearMap {
    let s = rho.algebra();
    let n = tuple.len() + 1;
    let book = ParityBook::from_tuple(s, tuple);
    let mut out = OperatorSum::new(rho.module());
    for i in 1..n {
        let rest: Vec<usize> = tuple
            .iter()
            .enumerate()
            .filter(|(k, _)| *k + 1 != i)
            .map(|(_, &j)| j)
            .collect();
        let c = phi.value(&rest);
        if c.is_zero() {
            continue;
        }
        let negative = ((n - i - 1) % 2 == 1) ^ (s.parity(tuple[i - 1]) * book.range(i + 1, n - 1)).is_odd();
        out.value.add_scaled_unchecked(&(sign(negative) * c), rho.operator(&[tuple[i - 1]]));
    }
    out.value
}

/// The representation `(V, ρ_φ, η, α_V)` of the n-ary structure induced by
/// `φ` (degree `n − 2`) from a representation `(V, ρ, η, α_V)` of the binary
/// structure `l`.
///
/// `φ` must satisfy [`check_phi_conditions`] against `l`; otherwise the
/// failing sub-check is returned as [`Error::Precondition`]. The associative
/// action `η`, if present, is carried over unchanged.
pub fn induced_rep(l: &HomLieSuperalgebra, rep: &BinaryRepresentation, phi: &Cochain) -> Result<NaryRepresentation, Error> {
    let rho = rep.require_rho(l.space())?;
    if phi.space() != l.space() {
        return Err(Error::SpaceMismatch("cochain over a different space".into()));
    }
    let even = crate::graded::is_even(phi);
    if !even.passed() {
        return Err(Error::Precondition(Box::new(even)));
    }
    Error::require(check_phi_conditions(l, phi)?)?;
    let slots = phi.arity() + 1;
    let rho_phi = Action::from_fn(l.space(), rep.module.space(), slots, |t| induced_operator(rho, phi, t))?;
    Ok(NaryRepresentation { module: rep.module.clone(), rho: rho_phi, eta: rep.eta.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn odd_square() -> HomLieSuperalgebra {
        // [e2,e2] = 2e1 with e1 even, e2 odd; α = id.
        let s = SuperSpace::from_bits(&[0, 1]);
        let b = MultiLinearMap::from_entries(&s, 2, vec![(vec![1, 1], Vector::from_ints(&[2, 0]))]).unwrap();
        HomLieSuperalgebra::new(b, LinearMap::identity(&s)).unwrap()
    }

    #[test]
    fn adjoint_action_matches_bracket() {
        let l = odd_square();
        let ad = Action::adjoint(l.bracket()).unwrap();
        assert_eq!(ad.operator(&[1]).image(1), Vector::from_ints(&[2, 0]));
        assert!(ad.operator(&[0]).is_zero());
        assert!(ad.check_even("ad-even").passed());
    }

    #[test]
    fn operator_of_is_multilinear() {
        let l = odd_square();
        let ad = Action::adjoint(l.bracket()).unwrap();
        let x = Vector::from_ints(&[5, 3]);
        let op = ad.operator_of(&[&x]).unwrap();
        assert_eq!(op, ad.operator(&[1]).scaled(&int(3)));
    }

    #[test]
    fn adjoint_rep_of_lie_passes() {
        let l = odd_square();
        let module = HomModule::new(l.space().clone(), l.alpha().clone()).unwrap();
        let rep = BinaryRepresentation::lie(module, Action::adjoint(l.bracket()).unwrap()).unwrap();
        assert!(check_rep_lie(&l, &rep).unwrap().passed());
        let semi = semidirect_lie(&l, &rep).unwrap();
        assert!(crate::binary::check_hom_lie(&semi).passed());
        assert_eq!(semi.space().dim(), 4);
    }

    #[test]
    fn odd_operator_entry_breaks_evenness() {
        let s = SuperSpace::from_bits(&[0, 1]);
        let mut eta = Action::zero(&s, &s, 1);
        eta.set_entry(&[0], 1, 0, int(1)).unwrap();
        let r = eta.check_even("eta-even");
        assert!(!r.passed());
        assert_eq!(r.witness.unwrap().tuple, vec!["e1".to_string(), "e1".to_string()]);
    }

    #[test]
    fn missing_action_is_a_flavor_error() {
        let l = odd_square();
        let module = HomModule::untwisted(l.space().clone());
        let rep = BinaryRepresentation::lie(module, Action::zero(l.space(), l.space(), 1)).unwrap();
        let a = HomAssociativeSuperalgebra::new(MultiLinearMap::zero(l.space(), 2), LinearMap::identity(l.space()))
            .unwrap();
        assert!(matches!(check_rep_assoc(&a, &rep), Err(Error::FlavorMismatch(_))));
    }
}
