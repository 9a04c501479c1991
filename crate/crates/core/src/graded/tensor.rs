use super::linear::{linear_map_evenness, LinearMap};
use super::sign::sort_with_sign;
use super::space::{Parity, SuperSpace, Tuples, Vector};
use crate::error::Error;
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;
use num::Zero;
use std::collections::HashMap;

/// Arity-`k` multilinear map `Vᵏ → V` given by dense structure constants
/// `c[i₁…i_k][j]`, meaning `m(e_{i₁},…,e_{i_k}) = Σ_j c[i₁…i_k][j] e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiLinearMap {
    arity: usize,
    space: SuperSpace,
    constants: Vec<Scalar>,
}

fn flat_index(dim: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * dim + i)
}

impl MultiLinearMap {
    /// The zero map of the given arity.
    pub fn zero(space: &SuperSpace, arity: usize) -> Self {
        let d = space.dim();
        MultiLinearMap {
            arity,
            space: space.clone(),
            constants: vec![Scalar::zero(); d.pow(arity as u32) * d],
        }
    }

    /// Builds a map from sparse `(tuple, value)` entries; unlisted tuples map
    /// to zero. Listing the same tuple twice is an error.
    pub fn from_entries<I>(space: &SuperSpace, arity: usize, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<usize>, Vector)>,
    {
        let mut map = Self::zero(space, arity);
        let mut seen = std::collections::HashSet::new();
        for (tuple, value) in entries {
            map.check_tuple(&tuple)?;
            space.check_vector(&value)?;
            if !seen.insert(tuple.clone()) {
                return Err(Error::Conflict(format!(
                    "duplicate entry for {}",
                    describe_tuple(space, &tuple)
                )));
            }
            map.set(&tuple, &value);
        }
        Ok(map)
    }

    /// Builds a map by evaluating `f` on every basis tuple.
    pub fn from_fn(space: &SuperSpace, arity: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut map = Self::zero(space, arity);
        for tuple in Tuples::uniform(space.dim(), arity) {
            let v = f(&tuple);
            map.set(&tuple, &v);
        }
        map
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    fn check_tuple(&self, tuple: &[usize]) -> Result<(), Error> {
        if tuple.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: tuple.len(),
            });
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.space.dim()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.space.dim(),
            });
        }
        Ok(())
    }

    /// Value on a basis tuple (indices must be in range).
    pub fn value(&self, tuple: &[usize]) -> Vector {
        Vector::new(self.value_slice(tuple).to_vec())
    }

    pub(crate) fn value_slice(&self, tuple: &[usize]) -> &[Scalar] {
        let d = self.space.dim();
        let start = flat_index(d, tuple) * d;
        &self.constants[start..start + d]
    }

    /// Overwrites the value on a basis tuple.
    pub fn set(&mut self, tuple: &[usize], value: &Vector) {
        let d = self.space.dim();
        let start = flat_index(d, tuple) * d;
        self.constants[start..start + d].clone_from_slice(value.coeffs());
    }

    /// Nonzero entries in lexicographic tuple order.
    pub fn entries(&self) -> Vec<(Vec<usize>, Vector)> {
        Tuples::uniform(self.space.dim(), self.arity)
            .map(|t| {
                let v = self.value(&t);
                (t, v)
            })
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.constants.iter().all(Zero::is_zero)
    }

    /// Multilinear extension of the structure constants.
    pub fn eval(&self, args: &[&Vector]) -> Result<Vector, Error> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        for a in args {
            self.space.check_vector(a)?;
        }
        Ok(self.eval_unchecked(args))
    }

    pub(crate) fn eval_unchecked(&self, args: &[&Vector]) -> Vector {
        let mut out = Vector::zero(self.space.dim());
        let supports: Vec<Vec<(usize, &Scalar)>> = args.iter().map(|a| a.support().collect()).collect();
        if supports.iter().any(|s| s.is_empty()) && self.arity > 0 {
            return out;
        }
        let radices: Vec<usize> = supports.iter().map(|s| s.len()).collect();
        let mut tuple = vec![0; self.arity];
        for pick in Tuples::new(radices) {
            let mut coeff = Scalar::from_integer(1.into());
            for (slot, &k) in pick.iter().enumerate() {
                let (idx, c) = supports[slot][k];
                tuple[slot] = idx;
                coeff *= c;
            }
            let vals = self.value_slice(&tuple);
            for (j, v) in vals.iter().enumerate() {
                if !v.is_zero() {
                    let cur = out.get(j) + &coeff * v;
                    out.set(j, cur);
                }
            }
        }
        out
    }

    /// Super-alternating completion.
    ///
    /// Every listed value is propagated to all reorderings of its tuple with
    /// the Koszul sign of the permutation (each adjacent swap of `a, b`
    /// contributes `−(−1)^{|a||b|}`). Two listed values that disagree after
    /// propagation, or a nonzero value on a tuple forced to vanish (a repeated
    /// even argument), raise [`Error::Conflict`].
    pub fn skew_completed(&self) -> Result<Self, Error> {
        let parities = self.space.parities();
        let mut canonical: HashMap<Vec<usize>, Vector> = HashMap::new();
        for (tuple, value) in self.entries() {
            let (sorted, odd) = sort_with_sign(parities, &tuple);
            if forced_zero(parities, &sorted) {
                return Err(Error::Conflict(format!(
                    "{} must vanish (repeated even argument)",
                    describe_tuple(&self.space, &tuple)
                )));
            }
            let candidate = if odd { -value } else { value };
            match canonical.get(&sorted) {
                Some(existing) if existing != &candidate => {
                    return Err(Error::Conflict(format!(
                        "{} is inconsistent with the super-skew value implied by another entry",
                        describe_tuple(&self.space, &tuple)
                    )))
                }
                Some(_) => {}
                None => {
                    canonical.insert(sorted, candidate);
                }
            }
        }
        Ok(Self::from_fn(&self.space, self.arity, |tuple| {
            let (sorted, odd) = sort_with_sign(parities, tuple);
            match canonical.get(&sorted) {
                Some(v) if odd => -v.clone(),
                Some(v) => v.clone(),
                None => Vector::zero(self.space.dim()),
            }
        }))
    }

    /// `f ∘ m` for an endomorphism `f` of the space.
    pub fn post_compose(&self, f: &LinearMap) -> Result<Self, Error> {
        if !f.is_endomorphism_of(&self.space) {
            return Err(Error::SpaceMismatch("post-composition with a map over another space".into()));
        }
        Ok(Self::from_fn(&self.space, self.arity, |t| f.apply_unchecked(&self.value(t))))
    }

    /// Linear combination `a·self + b·other`.
    pub fn combine(&self, a: &Scalar, other: &MultiLinearMap, b: &Scalar) -> Result<Self, Error> {
        if self.space != other.space || self.arity != other.arity {
            return Err(Error::SpaceMismatch("combining maps of different shapes".into()));
        }
        Ok(MultiLinearMap {
            arity: self.arity,
            space: self.space.clone(),
            constants: self
                .constants
                .iter()
                .zip(&other.constants)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        })
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        MultiLinearMap {
            arity: self.arity,
            space: self.space.clone(),
            constants: self.constants.iter().map(|x| x * c).collect(),
        }
    }
}

fn forced_zero(parities: &[Parity], sorted: &[usize]) -> bool {
    sorted
        .windows(2)
        .any(|w| w[0] == w[1] && !parities[w[0]].is_odd())
}

pub(crate) fn describe_tuple(space: &SuperSpace, tuple: &[usize]) -> String {
    let labels: Vec<&str> = tuple.iter().map(|&i| space.label(i)).collect();
    format!("({})", labels.join(", "))
}

/// Even, super-alternating multilinear functional `Vᵏ → 𝕂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    arity: usize,
    space: SuperSpace,
    values: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(space: &SuperSpace, arity: usize) -> Self {
        Cochain {
            arity,
            space: space.clone(),
            values: vec![Scalar::zero(); space.dim().pow(arity as u32)],
        }
    }

    /// Builds the super-alternating cochain generated by the listed values.
    ///
    /// Values on tuples of odd total parity are rejected (the cochain must
    /// be even), as are listings inconsistent with super-alternation.
    pub fn from_generators<I>(space: &SuperSpace, arity: usize, generators: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let parities = space.parities();
        let mut canonical: HashMap<Vec<usize>, Scalar> = HashMap::new();
        let mut seen = std::collections::HashSet::new();
        for (tuple, value) in generators {
            if tuple.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: tuple.len(),
                });
            }
            if let Some(&bad) = tuple.iter().find(|&&i| i >= space.dim()) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    len: space.dim(),
                });
            }
            if !seen.insert(tuple.clone()) {
                return Err(Error::Conflict(format!("duplicate entry for {}", describe_tuple(space, &tuple))));
            }
            if value.is_zero() {
                continue;
            }
            if space.tuple_parity(&tuple).is_odd() {
                return Err(Error::ParityViolation(format!(
                    "cochain value on {} has odd total parity",
                    describe_tuple(space, &tuple)
                )));
            }
            let (sorted, odd) = sort_with_sign(parities, &tuple);
            if forced_zero(parities, &sorted) {
                return Err(Error::Conflict(format!(
                    "{} must vanish (repeated even argument)",
                    describe_tuple(space, &tuple)
                )));
            }
            let candidate = if odd { -value } else { value };
            match canonical.get(&sorted) {
                Some(existing) if existing != &candidate => {
                    return Err(Error::Conflict(format!(
                        "{} is inconsistent with super-alternation",
                        describe_tuple(space, &tuple)
                    )))
                }
                Some(_) => {}
                None => {
                    canonical.insert(sorted, candidate);
                }
            }
        }
        let mut out = Self::zero(space, arity);
        for tuple in Tuples::uniform(space.dim(), arity) {
            let (sorted, odd) = sort_with_sign(parities, &tuple);
            if let Some(v) = canonical.get(&sorted) {
                out.set(&tuple, if odd { -v.clone() } else { v.clone() });
            }
        }
        Ok(out)
    }

    /// Cochain with explicitly given values on every tuple (no completion).
    pub fn from_fn(space: &SuperSpace, arity: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let mut out = Self::zero(space, arity);
        for tuple in Tuples::uniform(space.dim(), arity) {
            let v = f(&tuple);
            out.set(&tuple, v);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn value(&self, tuple: &[usize]) -> &Scalar {
        &self.values[flat_index(self.space.dim(), tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], value: Scalar) {
        let i = flat_index(self.space.dim(), tuple);
        self.values[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Nonzero values in lexicographic order.
    pub fn entries(&self) -> Vec<(Vec<usize>, Scalar)> {
        Tuples::uniform(self.space.dim(), self.arity)
            .map(|t| {
                let v = self.value(&t).clone();
                (t, v)
            })
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Multilinear evaluation.
    pub fn eval(&self, args: &[&Vector]) -> Result<Scalar, Error> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        for a in args {
            self.space.check_vector(a)?;
        }
        let supports: Vec<Vec<(usize, &Scalar)>> = args.iter().map(|a| a.support().collect()).collect();
        let radices = supports.iter().map(|s| s.len()).collect();
        let mut total = Scalar::zero();
        let mut tuple = vec![0; self.arity];
        for pick in Tuples::new(radices) {
            let mut coeff = Scalar::from_integer(1.into());
            for (slot, &k) in pick.iter().enumerate() {
                tuple[slot] = supports[slot][k].0;
                coeff *= supports[slot][k].1;
            }
            total += coeff * self.value(&tuple);
        }
        Ok(total)
    }

    /// Verifies super-alternation under every adjacent transposition:
    /// `φ(…,a,b,…) = −(−1)^{|a||b|} φ(…,b,a,…)`.
    pub fn check_alternating(&self) -> CheckReport {
        let slots = vec![&self.space; self.arity];
        let mut failure = None;
        if self.arity >= 2 {
            'outer: for tuple in Tuples::uniform(self.space.dim(), self.arity) {
                for i in 0..self.arity - 1 {
                    let mut swapped = tuple.clone();
                    swapped.swap(i, i + 1);
                    let s = (self.space.parity(tuple[i]) * self.space.parity(tuple[i + 1])).is_odd();
                    let rhs = if s {
                        self.value(&swapped).clone()
                    } else {
                        -self.value(&swapped).clone()
                    };
                    if self.value(&tuple) != &rhs {
                        let labels = slots.iter().zip(&tuple).map(|(s, &k)| s.label(k).to_string()).collect();
                        failure = Some(
                            Witness::scalars(labels, tuple.clone(), self.value(&tuple).clone(), rhs),
                        );
                        break 'outer;
                    }
                }
            }
        }
        CheckReport::from_witness("cochain-super-alternating", failure)
    }
}

/// Objects whose evenness can be verified entry by entry.
pub trait EvenMap {
    /// Passes iff every structure constant respects the grading.
    fn check_even(&self) -> CheckReport;
}

/// Evenness check for linear maps, multilinear maps and cochains.
pub fn is_even<T: EvenMap + ?Sized>(m: &T) -> CheckReport {
    m.check_even()
}

impl EvenMap for LinearMap {
    fn check_even(&self) -> CheckReport {
        linear_map_evenness("is-even", self)
    }
}

impl EvenMap for MultiLinearMap {
    fn check_even(&self) -> CheckReport {
        multilinear_evenness("is-even", self)
    }
}

impl EvenMap for Cochain {
    fn check_even(&self) -> CheckReport {
        for tuple in Tuples::uniform(self.space.dim(), self.arity) {
            let v = self.value(&tuple);
            if !v.is_zero() && self.space.tuple_parity(&tuple).is_odd() {
                let labels = tuple.iter().map(|&k| self.space.label(k).to_string()).collect();
                return CheckReport::fail("is-even", Witness::scalars(labels, tuple, v.clone(), Scalar::zero()))
                    .with_note("nonzero value on a tuple of odd total parity");
            }
        }
        CheckReport::pass("is-even")
    }
}

/// Evenness of a multilinear map under a caller-chosen check name; the
/// witness shows the value and its admissible (correct-parity) part.
pub(crate) fn multilinear_evenness(name: &str, m: &MultiLinearMap) -> CheckReport {
    let space = m.space();
    for tuple in Tuples::uniform(space.dim(), m.arity()) {
        let p = space.tuple_parity(&tuple);
        let value = m.value(&tuple);
        let mut allowed = value.clone();
        for j in 0..space.dim() {
            if space.parity(j) != p {
                allowed.set(j, Scalar::zero());
            }
        }
        if allowed != value {
            let labels = tuple.iter().map(|&k| space.label(k).to_string()).collect();
            return CheckReport::fail(name, Witness::vectors(labels, tuple, space, &value, &allowed))
                .with_note("output has a component of the wrong parity (lhs: value, rhs: admissible part)");
        }
    }
    CheckReport::pass(name)
}
