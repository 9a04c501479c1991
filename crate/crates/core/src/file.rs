//! JSON presentation files.
//!
//! An algebra file lists a graded basis, sparse structure constants for the
//! named operations (`mu`, `bracket`), named linear maps (`alpha` and any
//! auxiliary maps), optional cochains and the claims attached to the
//! presentation. Scalars are exact rationals written as strings (`"3"`,
//! `"-1/2"`), never JSON numbers.
//!
//! ```json
//! {
//!   "kind": "hom-lie",
//!   "basis": [{"label": "e1", "parity": 0}, {"label": "e2", "parity": 1}],
//!   "products": {"bracket": [{"args": ["e2", "e2"], "value": {"e1": "2"}}]},
//!   "maps": {"alpha": {"e1": {"e1": "1"}, "e2": {"e2": "1"}}},
//!   "claims": {"skew-complete": true}
//! }
//! ```
//!
//! Parsing validates every label, the evenness of every product entry, every
//! rational literal and the absence of duplicate tuples. When the bracket is
//! claimed (or requested) skew-complete, the listed entries are generators
//! and the bracket is completed by super-skew-symmetry before validation.
//!
//! Serialization is deterministic: entries appear in lexicographic basis
//! order, and a super-skew-symmetric bracket is written through its
//! generators (nondecreasing tuples) with `skew-complete` set.

use crate::binary::{
    check_multiplicative, HomAssociativeSuperalgebra, HomLieSuperalgebra, HomPoissonSuperalgebra,
};
use crate::error::Error;
use crate::graded::{Cochain, LinearMap, MultiLinearMap, Parity, SuperSpace, Tuples, Vector};
use crate::nary::{check_nary_skew, NaryHomNambuPoissonSuperalgebra, NaryHomNambuSuperalgebra};
use crate::scalar::{format_scalar, parse_scalar, Scalar, ScalarParseError};
use indexmap::IndexMap;
use num::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

/// Structure kind claimed by a file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    HomAssociative,
    HomLie,
    HomPoisson,
    NaryNambu,
    NaryNambuPoisson,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::HomAssociative => "hom-associative",
            Kind::HomLie => "hom-lie",
            Kind::HomPoisson => "hom-poisson",
            Kind::NaryNambu => "nary-nambu",
            Kind::NaryNambuPoisson => "nary-nambu-poisson",
        }
    }

    fn is_nary(self) -> bool {
        matches!(self, Kind::NaryNambu | Kind::NaryNambuPoisson)
    }

    fn has_bracket(self) -> bool {
        !matches!(self, Kind::HomAssociative)
    }

    fn has_product(self) -> bool {
        matches!(self, Kind::HomAssociative | Kind::HomPoisson | Kind::NaryNambuPoisson)
    }
}

/// One basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub label: String,
    pub parity: u8,
}

/// One nonzero structure constant row: `op(args) = value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub args: Vec<String>,
    pub value: IndexMap<String, String>,
}

/// One cochain value: `φ(args) = value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub args: Vec<String>,
    pub value: String,
}

/// A cochain listed by its generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub arity: usize,
    #[serde(default)]
    pub values: Vec<CochainEntry>,
}

/// A linear map listed by the images of basis vectors (missing columns are
/// zero).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub images: IndexMap<String, IndexMap<String, String>>,
}

/// Claims attached to a presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Claims {
    #[serde(default)]
    pub commutative: bool,
    #[serde(default)]
    pub multiplicative: bool,
    #[serde(default)]
    pub skew_complete: bool,
}

/// Where a constructed file came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Provenance {
    pub construction: String,
    #[serde(default)]
    pub parameters: IndexMap<String, String>,
    pub input_digest: String,
}

/// The on-disk form of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub products: IndexMap<String, Vec<ProductEntry>>,
    #[serde(default)]
    pub maps: IndexMap<String, IndexMap<String, IndexMap<String, String>>>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub cochains: IndexMap<String, CochainFile>,
    #[serde(default)]
    pub claims: Claims,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
}

/// Problems found while reading a file.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unknown label `{label}` in {context}")]
    UnknownLabel { label: String, context: String },

    #[error("parity violation in {context}: {detail}")]
    ParityViolation { context: String, detail: String },

    #[error("malformed rational in {context}: {source}")]
    MalformedRational {
        context: String,
        #[source]
        source: ScalarParseError,
    },

    #[error("duplicate entry in {context}: ({args})")]
    DuplicateEntry { context: String, args: String },

    #[error("invalid presentation: {0}")]
    Invalid(String),

    #[error(transparent)]
    Algebra(#[from] Error),
}

/// A validated presentation of one of the supported kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Associative(HomAssociativeSuperalgebra),
    Lie(HomLieSuperalgebra),
    Poisson(HomPoissonSuperalgebra),
    Nambu(NaryHomNambuSuperalgebra),
    NambuPoisson(NaryHomNambuPoissonSuperalgebra),
}

impl Presentation {
    pub fn kind(&self) -> Kind {
        match self {
            Presentation::Associative(_) => Kind::HomAssociative,
            Presentation::Lie(_) => Kind::HomLie,
            Presentation::Poisson(_) => Kind::HomPoisson,
            Presentation::Nambu(_) => Kind::NaryNambu,
            Presentation::NambuPoisson(_) => Kind::NaryNambuPoisson,
        }
    }

    pub fn space(&self) -> &SuperSpace {
        match self {
            Presentation::Associative(a) => a.space(),
            Presentation::Lie(l) => l.space(),
            Presentation::Poisson(p) => p.space(),
            Presentation::Nambu(n) => n.space(),
            Presentation::NambuPoisson(p) => p.space(),
        }
    }
}

/// A parsed file: the validated presentation plus auxiliary data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedAlgebra {
    pub presentation: Presentation,
    /// Named maps other than the twisting map(s).
    pub maps: IndexMap<String, LinearMap>,
    pub cochains: IndexMap<String, Cochain>,
    pub claims: Claims,
    pub provenance: Option<Provenance>,
    pub comment: Option<String>,
}

/// Hex-encoded SHA-256 digest of raw input bytes.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

fn rational(text: &str, context: &str) -> Result<Scalar, FileError> {
    parse_scalar(text).map_err(|source| FileError::MalformedRational { context: context.to_string(), source })
}

fn index(space: &SuperSpace, label: &str, context: &str) -> Result<usize, FileError> {
    space
        .index_of(label)
        .ok_or_else(|| FileError::UnknownLabel { label: label.to_string(), context: context.to_string() })
}

fn vector(space: &SuperSpace, coords: &IndexMap<String, String>, context: &str) -> Result<Vector, FileError> {
    let mut v = space.zero();
    for (label, text) in coords {
        let i = index(space, label, context)?;
        v.set(i, rational(text, context)?);
    }
    Ok(v)
}

/// Builds the graded space of a basis listing.
pub fn parse_basis(basis: &[BasisEntry]) -> Result<SuperSpace, FileError> {
    let mut parities = Vec::with_capacity(basis.len());
    for b in basis {
        let p = Parity::from_bit(b.parity).ok_or_else(|| FileError::ParityViolation {
            context: format!("basis element {}", b.label),
            detail: format!("parity must be 0 or 1, found {}", b.parity),
        })?;
        parities.push(p);
    }
    Ok(SuperSpace::new(basis.iter().map(|b| b.label.clone()).collect(), parities)?)
}

/// Parses a linear map given by images of basis vectors.
pub fn parse_map(
    space: &SuperSpace,
    images: &IndexMap<String, IndexMap<String, String>>,
    name: &str,
) -> Result<LinearMap, FileError> {
    let mut cols = vec![space.zero(); space.dim()];
    for (label, image) in images {
        let context = format!("map {name}, image of {label}");
        let i = index(space, label, &context)?;
        cols[i] = vector(space, image, &context)?;
    }
    Ok(LinearMap::from_images(space, space, &cols)?)
}

/// Parses a cochain listed by generators (completed by super-alternation).
pub fn parse_cochain(space: &SuperSpace, file: &CochainFile, name: &str) -> Result<Cochain, FileError> {
    let mut generators = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for entry in &file.values {
        let context = format!("cochain {name}");
        if entry.args.len() != file.arity {
            return Err(Error::ArityMismatch { expected: file.arity, found: entry.args.len() }.into());
        }
        let tuple = entry
            .args
            .iter()
            .map(|l| index(space, l, &context))
            .collect::<Result<Vec<_>, _>>()?;
        if !seen.insert(tuple.clone()) {
            return Err(FileError::DuplicateEntry { context, args: entry.args.join(", ") });
        }
        generators.push((tuple, rational(&entry.value, &context)?));
    }
    Cochain::from_generators(space, file.arity, generators).map_err(|e| match e {
        Error::ParityViolation(detail) => FileError::ParityViolation { context: format!("cochain {name}"), detail },
        other => other.into(),
    })
}

fn parse_operation(
    space: &SuperSpace,
    name: &str,
    arity: usize,
    entries: &[ProductEntry],
) -> Result<MultiLinearMap, FileError> {
    let mut op = MultiLinearMap::zero(space, arity);
    let mut seen = std::collections::HashSet::new();
    for entry in entries {
        let context = format!("product {name}({})", entry.args.join(", "));
        if entry.args.len() != arity {
            return Err(FileError::Invalid(format!("{context}: expected {arity} arguments")));
        }
        let tuple = entry
            .args
            .iter()
            .map(|l| index(space, l, &context))
            .collect::<Result<Vec<_>, _>>()?;
        if !seen.insert(tuple.clone()) {
            return Err(FileError::DuplicateEntry { context: format!("product {name}"), args: entry.args.join(", ") });
        }
        let value = vector(space, &entry.value, &context)?;
        let expected = space.tuple_parity(&tuple);
        if let Some((j, _)) = value.support().find(|(j, _)| space.parity(*j) != expected) {
            return Err(FileError::ParityViolation {
                context,
                detail: format!(
                    "arguments have total parity {expected} but the value has a component along {} (parity {})",
                    space.label(j),
                    space.parity(j)
                ),
            });
        }
        op.set(&tuple, &value);
    }
    Ok(op)
}

impl AlgebraFile {
    /// Reads and deserializes a file (no validation).
    pub fn read(path: &Path) -> Result<(AlgebraFile, Vec<u8>), FileError> {
        let bytes = std::fs::read(path).map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
        let file = serde_json::from_slice(&bytes)?;
        Ok((file, bytes))
    }

    /// Validates the file. `complete_skew` forces super-skew completion of
    /// the bracket even when the file does not claim it.
    pub fn validate(&self, complete_skew: bool) -> Result<LoadedAlgebra, FileError> {
        let space = parse_basis(&self.basis)?;
        let kind = self.kind;
        let n = match (kind.is_nary(), self.arity) {
            (true, Some(n)) if n >= 2 => n,
            (true, Some(n)) => return Err(FileError::Invalid(format!("n-ary arity must be at least 2, found {n}"))),
            (true, None) => return Err(FileError::Invalid(format!("kind {} requires `arity`", kind.as_str()))),
            (false, Some(n)) if n != 2 => {
                return Err(FileError::Invalid(format!("kind {} is binary, found arity {n}", kind.as_str())))
            }
            (false, _) => 2,
        };
        for name in self.products.keys() {
            let allowed = (name == "bracket" && kind.has_bracket()) || (name == "mu" && kind.has_product());
            if !allowed {
                return Err(FileError::Invalid(format!("operation `{name}` is not part of kind {}", kind.as_str())));
            }
        }
        let empty = Vec::new();
        let listed = |name: &str| self.products.get(name).unwrap_or(&empty);

        let mut bracket = parse_operation(&space, "bracket", n, listed("bracket"))?;
        if complete_skew || self.claims.skew_complete {
            bracket = bracket.skew_completed()?;
        }
        let mu = parse_operation(&space, "mu", 2, listed("mu"))?;

        let mut maps = IndexMap::new();
        for (name, images) in &self.maps {
            maps.insert(name.clone(), parse_map(&space, images, name)?);
        }
        let alphas = if let Some(alpha) = maps.shift_remove("alpha") {
            vec![alpha; n - 1]
        } else if kind.is_nary() && (1..n).all(|i| maps.contains_key(&format!("alpha-{i}"))) {
            (1..n)
                .map(|i| maps.shift_remove(&format!("alpha-{i}")).expect("checked above"))
                .collect()
        } else {
            return Err(FileError::Invalid("missing twisting map `alpha`".into()));
        };
        let alpha = alphas[0].clone();

        let presentation = match kind {
            Kind::HomAssociative => Presentation::Associative(
                HomAssociativeSuperalgebra::new(mu, alpha)?.with_commutative(self.claims.commutative),
            ),
            Kind::HomLie => Presentation::Lie(HomLieSuperalgebra::new(bracket, alpha)?),
            Kind::HomPoisson => Presentation::Poisson(
                HomPoissonSuperalgebra::new(bracket, mu, alpha)?.with_commutative(self.claims.commutative),
            ),
            Kind::NaryNambu => Presentation::Nambu(NaryHomNambuSuperalgebra::with_twists(bracket, alphas)?),
            Kind::NaryNambuPoisson => {
                let base = NaryHomNambuSuperalgebra::with_twists(bracket, alphas)?;
                Presentation::NambuPoisson(
                    NaryHomNambuPoissonSuperalgebra::new(base, mu)?.with_commutative(self.claims.commutative),
                )
            }
        };
        let mut cochains = IndexMap::new();
        for (name, c) in &self.cochains {
            cochains.insert(name.clone(), parse_cochain(&space, c, name)?);
        }
        Ok(LoadedAlgebra {
            presentation,
            maps,
            cochains,
            claims: self.claims.clone(),
            provenance: self.provenance.clone(),
            comment: self.comment.clone(),
        })
    }
}

/// Parses and validates JSON text.
pub fn parse_algebra_str(text: &str, complete_skew: bool) -> Result<LoadedAlgebra, FileError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.validate(complete_skew)
}

/// Reads, parses and validates a file; also returns the digest of its bytes.
pub fn load_algebra(path: &Path, complete_skew: bool) -> Result<(LoadedAlgebra, String), FileError> {
    let (file, bytes) = AlgebraFile::read(path)?;
    Ok((file.validate(complete_skew)?, digest(&bytes)))
}

/// Reads a JSON parameter file of type `T`.
pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, FileError> {
    let bytes = std::fs::read(path).map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
    Ok(serde_json::from_slice(&bytes)?)
}

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------

fn coords(space: &SuperSpace, v: &Vector) -> IndexMap<String, String> {
    v.support().map(|(j, c)| (space.label(j).to_string(), format_scalar(c))).collect()
}

fn operation_entries(op: &MultiLinearMap, generators_only: bool) -> Vec<ProductEntry> {
    let s = op.space();
    Tuples::uniform(s.dim(), op.arity())
        .filter(|t| !generators_only || t.windows(2).all(|w| w[0] <= w[1]))
        .filter_map(|t| {
            let v = op.value(&t);
            (!v.is_zero()).then(|| ProductEntry {
                args: t.iter().map(|&i| s.label(i).to_string()).collect(),
                value: coords(s, &v),
            })
        })
        .collect()
}

/// Sparse image listing of a linear map (zero images omitted).
pub fn map_images(map: &LinearMap) -> IndexMap<String, IndexMap<String, String>> {
    let s = map.domain();
    (0..s.dim())
        .filter_map(|i| {
            let img = map.image(i);
            (!img.is_zero()).then(|| (s.label(i).to_string(), coords(map.codomain(), &img)))
        })
        .collect()
}

/// Generator listing of a cochain (nondecreasing tuples).
pub fn cochain_file(c: &Cochain) -> CochainFile {
    let s = c.space();
    let values = Tuples::uniform(s.dim(), c.arity())
        .filter(|t| t.windows(2).all(|w| w[0] <= w[1]))
        .filter_map(|t| {
            let v = c.value(&t);
            (!v.is_zero()).then(|| CochainEntry {
                args: t.iter().map(|&i| s.label(i).to_string()).collect(),
                value: format_scalar(v),
            })
        })
        .collect();
    CochainFile { arity: c.arity(), values }
}

fn bracket_is_skew(bracket: &MultiLinearMap, alpha: &LinearMap) -> bool {
    // Reuses the n-ary checker, which specialises to the binary one.
    NaryHomNambuSuperalgebra::new(bracket.clone(), alpha.clone())
        .map(|n| check_nary_skew(&n).passed())
        .unwrap_or(false)
}

impl LoadedAlgebra {
    /// Wraps a presentation without auxiliary data.
    pub fn new(presentation: Presentation) -> Self {
        let commutative = match &presentation {
            Presentation::Associative(a) => a.is_commutative(),
            Presentation::Poisson(p) => p.is_commutative(),
            Presentation::NambuPoisson(p) => p.is_commutative(),
            _ => false,
        };
        let multiplicative = match &presentation {
            Presentation::Associative(a) => check_multiplicative(a),
            Presentation::Lie(l) => check_multiplicative(l),
            Presentation::Poisson(p) => check_multiplicative(p),
            Presentation::Nambu(n) => check_multiplicative(n),
            Presentation::NambuPoisson(p) => check_multiplicative(p),
        }
        .passed();
        LoadedAlgebra {
            presentation,
            maps: IndexMap::new(),
            cochains: IndexMap::new(),
            claims: Claims { commutative, multiplicative, skew_complete: false },
            provenance: None,
            comment: None,
        }
    }

    /// The on-disk form (deterministic).
    pub fn to_file(&self) -> AlgebraFile {
        let p = &self.presentation;
        let space = p.space();
        let basis = space
            .labels()
            .iter()
            .zip(space.parities())
            .map(|(l, q)| BasisEntry { label: l.clone(), parity: q.bit() })
            .collect();
        let (bracket, mu, alphas): (Option<&MultiLinearMap>, Option<&MultiLinearMap>, Vec<LinearMap>) = match p {
            Presentation::Associative(a) => (None, Some(a.mu()), vec![a.alpha().clone()]),
            Presentation::Lie(l) => (Some(l.bracket()), None, vec![l.alpha().clone()]),
            Presentation::Poisson(q) => (Some(q.bracket()), Some(q.mu()), vec![q.alpha().clone()]),
            Presentation::Nambu(n) => (Some(n.bracket()), None, n.alphas().to_vec()),
            Presentation::NambuPoisson(q) => (Some(q.bracket()), Some(q.mu()), q.base().alphas().to_vec()),
        };
        let uniform = alphas.windows(2).all(|w| w[0] == w[1]);
        let skew = bracket.is_some_and(|b| bracket_is_skew(b, &alphas[0]));
        let mut products = IndexMap::new();
        if let Some(b) = bracket {
            products.insert("bracket".to_string(), operation_entries(b, skew));
        }
        if let Some(m) = mu {
            products.insert("mu".to_string(), operation_entries(m, false));
        }
        let mut maps = IndexMap::new();
        if uniform {
            maps.insert("alpha".to_string(), map_images(&alphas[0]));
        } else {
            for (i, a) in alphas.iter().enumerate() {
                maps.insert(format!("alpha-{}", i + 1), map_images(a));
            }
        }
        for (name, m) in &self.maps {
            maps.insert(name.clone(), map_images(m));
        }
        let arity = match p {
            Presentation::Nambu(n) => Some(n.n()),
            Presentation::NambuPoisson(q) => Some(q.n()),
            _ => None,
        };
        AlgebraFile {
            kind: p.kind(),
            arity,
            basis,
            products,
            maps,
            cochains: self.cochains.iter().map(|(k, c)| (k.clone(), cochain_file(c))).collect(),
            claims: Claims { skew_complete: skew, ..self.claims.clone() },
            provenance: self.provenance.clone(),
            comment: self.comment.clone(),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("file model serializes");
        s.push('\n');
        s
    }
}
