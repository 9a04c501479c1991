use super::space::{Parity, SuperSpace, Vector};
use crate::error::Error;
use crate::report::{scan_vectors, CheckReport, Witness};
use crate::scalar::Scalar;
use num::{One, Zero};

/// Linear map between graded spaces, stored as a dense
/// `codomain.dim() × domain.dim()` matrix (column `j` is the image of `e_j`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    domain: SuperSpace,
    codomain: SuperSpace,
    entries: Vec<Scalar>,
}

impl LinearMap {
    /// Builds a map from the images of the domain basis vectors.
    pub fn from_images(
        domain: &SuperSpace,
        codomain: &SuperSpace,
        images: &[Vector],
    ) -> Result<Self, Error> {
        if images.len() != domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim(),
                found: images.len(),
            });
        }
        let mut map = Self::zero(domain, codomain);
        for (j, img) in images.iter().enumerate() {
            codomain.check_vector(img)?;
            for (i, c) in img.support() {
                map.set(i, j, c.clone());
            }
        }
        Ok(map)
    }

    /// Builds a map from integer rows (`rows[i][j]` = coefficient of `e_i`
    /// in the image of `e_j`).
    pub fn from_rows(domain: &SuperSpace, codomain: &SuperSpace, rows: &[Vec<Scalar>]) -> Result<Self, Error> {
        if rows.len() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                expected: codomain.dim(),
                found: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(codomain.dim() * domain.dim());
        for row in rows {
            if row.len() != domain.dim() {
                return Err(Error::DimensionMismatch {
                    expected: domain.dim(),
                    found: row.len(),
                });
            }
            entries.extend(row.iter().cloned());
        }
        Ok(LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            entries,
        })
    }

    pub fn zero(domain: &SuperSpace, codomain: &SuperSpace) -> Self {
        LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            entries: vec![Scalar::zero(); domain.dim() * codomain.dim()],
        }
    }

    pub fn identity(space: &SuperSpace) -> Self {
        Self::scalar(space, Scalar::one())
    }

    /// `c · Id`.
    pub fn scalar(space: &SuperSpace, c: Scalar) -> Self {
        let mut m = Self::zero(space, space);
        for i in 0..space.dim() {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Diagonal endomorphism `e_i ↦ d_i e_i`.
    pub fn diagonal(space: &SuperSpace, diag: &[Scalar]) -> Result<Self, Error> {
        if diag.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: diag.len(),
            });
        }
        let mut m = Self::zero(space, space);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        Ok(m)
    }

    pub fn domain(&self) -> &SuperSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &SuperSpace {
        &self.codomain
    }

    pub fn is_endomorphism_of(&self, space: &SuperSpace) -> bool {
        &self.domain == space && &self.codomain == space
    }

    /// Coefficient of `e_row` in the image of `e_col`.
    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.domain.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        let d = self.domain.dim();
        self.entries[row * d + col] = value;
    }

    /// Image of the basis vector `e_col`.
    pub fn image(&self, col: usize) -> Vector {
        Vector::new(
            (0..self.codomain.dim())
                .map(|r| self.entry(r, col).clone())
                .collect(),
        )
    }

    /// Applies the map to a vector of the domain.
    pub fn apply(&self, v: &Vector) -> Result<Vector, Error> {
        self.domain.check_vector(v)?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vector) -> Vector {
        let d = self.domain.dim();
        let mut out = Vector::zero(self.codomain.dim());
        for (j, c) in v.support() {
            for r in 0..self.codomain.dim() {
                let e = &self.entries[r * d + j];
                if !e.is_zero() {
                    let cur = out.get(r) + c * e;
                    out.set(r, cur);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap, Error> {
        if other.codomain != self.domain {
            return Err(Error::SpaceMismatch(
                "composition: codomain of the inner map differs from the domain of the outer map"
                    .into(),
            ));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &LinearMap) -> LinearMap {
        let images: Vec<Vector> = (0..other.domain.dim())
            .map(|j| self.apply_unchecked(&other.image(j)))
            .collect();
        let mut out = LinearMap::zero(&other.domain, &self.codomain);
        for (j, img) in images.iter().enumerate() {
            for (i, c) in img.support() {
                out.set(i, j, c.clone());
            }
        }
        out
    }

    fn same_shape(&self, other: &LinearMap) -> Result<(), Error> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::SpaceMismatch("linear maps over different spaces".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap, Error> {
        self.same_shape(other)?;
        Ok(self.combine(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap, Error> {
        self.same_shape(other)?;
        Ok(self.combine(other, |a, b| a - b))
    }

    pub(crate) fn add_scaled_unchecked(&mut self, c: &Scalar, other: &LinearMap) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    fn combine(&self, other: &LinearMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> LinearMap {
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Component of parity `p`: keeps the entries mapping degree `q` to
    /// degree `q + p`.
    pub fn homogeneous_component(&self, p: Parity) -> LinearMap {
        let mut out = LinearMap::zero(&self.domain, &self.codomain);
        for r in 0..self.codomain.dim() {
            for c in 0..self.domain.dim() {
                if self.codomain.parity(r) == self.domain.parity(c) + p {
                    out.set(r, c, self.entry(r, c).clone());
                }
            }
        }
        out
    }

    /// `Some(p)` when the map is homogeneous of parity `p` (the zero map is
    /// reported as even), `None` when it mixes degrees.
    pub fn parity(&self) -> Option<Parity> {
        if self.homogeneous_component(Parity::Odd).is_zero() {
            Some(Parity::Even)
        } else if self.homogeneous_component(Parity::Even).is_zero() {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    /// Inverse by exact Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<LinearMap, Error> {
        let n = self.domain.dim();
        if self.codomain.dim() != n {
            return Err(Error::NotInvertible);
        }
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::NotInvertible)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = &a[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let da = &factor * &a[col][c];
                    let di = &factor * &inv[col][c];
                    a[r][c] -= da;
                    inv[r][c] -= di;
                }
            }
        }
        LinearMap::from_rows(&self.codomain, &self.domain, &inv)
    }
}

/// Passes iff `f ∘ g = g ∘ f`; the witness is the first basis vector on
/// which the two compositions differ.
pub fn maps_commute(f: &LinearMap, g: &LinearMap) -> Result<CheckReport, Error> {
    let space = f.domain();
    if !f.is_endomorphism_of(space) || !g.is_endomorphism_of(space) {
        if f.domain().dim() != g.domain().dim() {
            return Err(Error::DimensionMismatch {
                expected: f.domain().dim(),
                found: g.domain().dim(),
            });
        }
        return Err(Error::SpaceMismatch("maps_commute needs two endomorphisms of one space".into()));
    }
    let fg = f.compose_unchecked(g);
    let gf = g.compose_unchecked(f);
    Ok(scan_vectors("maps-commute", &[space], space, |t| (fg.image(t[0]), gf.image(t[0]))))
}

/// Evenness check of a linear map: every basis vector of parity `p` must be
/// sent into the parity-`p` subspace.
pub(crate) fn linear_map_evenness(name: &str, map: &LinearMap) -> CheckReport {
    for c in 0..map.domain().dim() {
        for r in 0..map.codomain().dim() {
            if !map.entry(r, c).is_zero() && map.codomain().parity(r) != map.domain().parity(c) {
                let img = map.image(c);
                let w = Witness::vectors(
                    vec![map.domain().label(c).to_string()],
                    vec![c],
                    map.codomain(),
                    &img,
                    &img.scaled(&Scalar::zero()),
                );
                return CheckReport::fail(name, w)
                    .with_note("image has a component of the wrong parity (lhs: image, rhs: allowed part)");
            }
        }
    }
    CheckReport::pass(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn apply_and_compose() {
        let s = SuperSpace::from_bits(&[0, 0]);
        let a = LinearMap::from_rows(&s, &s, &[ints(&[1, 2]), ints(&[3, 4])]).unwrap();
        let v = Vector::from_ints(&[1, 1]);
        assert_eq!(a.apply(&v).unwrap(), Vector::from_ints(&[3, 7]));
        let sq = a.compose(&a).unwrap();
        assert_eq!(sq.image(0), Vector::from_ints(&[7, 15]));
        assert_eq!(sq.image(1), Vector::from_ints(&[10, 22]));
    }

    #[test]
    fn inverse_is_exact() {
        let s = SuperSpace::from_bits(&[0, 0]);
        let a = LinearMap::from_rows(&s, &s, &[ints(&[2, 1]), ints(&[1, 1])]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv).unwrap(), LinearMap::identity(&s));
        let d = LinearMap::diagonal(&s, &ints(&[1, 2])).unwrap();
        assert_eq!(d.inverse().unwrap(), LinearMap::diagonal(&s, &[int(1), ratio(1, 2)]).unwrap());
        assert_eq!(LinearMap::zero(&s, &s).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn commuting_maps() {
        // Example 1.2's twist does not commute with the swap of e1, e2.
        let s = SuperSpace::from_bits(&[0, 0, 1]);
        let alpha = LinearMap::from_images(
            &s,
            &s,
            &[
                Vector::from_ints(&[-1, 0, 0]),
                Vector::from_ints(&[1, 1, 0]),
                Vector::from_ints(&[0, 0, 0]),
            ],
        )
        .unwrap();
        let swap = LinearMap::from_images(
            &s,
            &s,
            &[
                Vector::from_ints(&[0, 1, 0]),
                Vector::from_ints(&[1, 0, 0]),
                Vector::from_ints(&[0, 0, 1]),
            ],
        )
        .unwrap();
        assert!(maps_commute(&alpha, &alpha).unwrap().passed());
        let r = maps_commute(&swap, &alpha).unwrap();
        assert!(!r.passed());
        assert_eq!(r.witness.unwrap().tuple, vec!["e1"]);
    }

    #[test]
    fn parity_of_maps() {
        let s = SuperSpace::from_bits(&[0, 1]);
        let odd = LinearMap::from_rows(&s, &s, &[ints(&[0, 1]), ints(&[0, 0])]).unwrap();
        assert_eq!(odd.parity(), Some(Parity::Odd));
        assert_eq!(LinearMap::identity(&s).parity(), Some(Parity::Even));
        assert_eq!(odd.add(&LinearMap::identity(&s)).unwrap().parity(), None);
        assert!(!linear_map_evenness("even", &odd).passed());
    }
}
