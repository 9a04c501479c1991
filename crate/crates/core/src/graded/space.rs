use crate::error::Error;
use crate::scalar::{sign, Scalar};
use num::Zero;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Element of ℤ₂: the degree of a homogeneous element.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    /// `0 → Even`, `1 → Odd`, anything else `None`.
    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn from_bool(odd: bool) -> Parity {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^self` as a scalar.
    pub fn sign(self) -> Scalar {
        sign(self.is_odd())
    }
}

impl Add for Parity {
    type Output = Parity;
    // ℤ₂ addition is exclusive or.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bool(self.is_odd() ^ rhs.is_odd())
    }
}

impl AddAssign for Parity {
    fn add_assign(&mut self, rhs: Parity) {
        *self = *self + rhs;
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_bool(self.is_odd() && rhs.is_odd())
    }
}

impl std::iter::Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::Even, |a, b| a + b)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Finite-dimensional ℤ₂-graded vector space with a fixed ordered basis of
/// homogeneous elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

impl SuperSpace {
    /// Builds a space from distinct labels and one parity per label.
    pub fn new(labels: Vec<String>, parities: Vec<Parity>) -> Result<Self, Error> {
        if labels.is_empty() {
            return Err(Error::InvalidBasis("a space needs at least one basis element".into()));
        }
        if labels.len() != parities.len() {
            return Err(Error::InvalidBasis(format!(
                "{} labels but {} parities",
                labels.len(),
                parities.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidBasis("empty basis label".into()));
            }
            if labels[..i].contains(l) {
                return Err(Error::InvalidBasis(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(SuperSpace { labels, parities })
    }

    /// Space with basis `e1, …, ed` and the given parity bits (0 or 1).
    ///
    /// Panics on an empty list or a bit other than 0/1; intended for fixtures.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::with_prefix("e", bits)
    }

    /// Space with basis `{prefix}1, …` and the given parity bits.
    pub fn with_prefix(prefix: &str, bits: &[u8]) -> Self {
        let labels = (1..=bits.len()).map(|i| format!("{prefix}{i}")).collect();
        let parities = bits
            .iter()
            .map(|&b| Parity::from_bit(b).expect("parity bit must be 0 or 1"))
            .collect();
        Self::new(labels, parities).expect("valid generated basis")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Indices of the even basis elements.
    pub fn even_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.parities[i].is_odd()).collect()
    }

    /// Indices of the odd basis elements.
    pub fn odd_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i].is_odd()).collect()
    }

    /// Total parity of a tuple of basis indices.
    pub fn tuple_parity(&self, tuple: &[usize]) -> Parity {
        tuple.iter().map(|&i| self.parities[i]).sum()
    }

    /// Basis vector `e_i`.
    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        Vector::zero(self.dim())
    }

    /// `self ⊕ other`, basis of `self` first. Labels of `other` that collide
    /// with labels of `self` receive a trailing `'` until they are unique.
    pub fn direct_sum(&self, other: &SuperSpace) -> SuperSpace {
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut candidate = l.clone();
            while labels.contains(&candidate) {
                candidate.push('\'');
            }
            labels.push(candidate);
        }
        let mut parities = self.parities.clone();
        parities.extend_from_slice(&other.parities);
        SuperSpace { labels, parities }
    }

    /// Parity of a vector: `Some(p)` if it is homogeneous (the zero vector
    /// counts as even), `None` for a mixed vector.
    pub fn parity_of(&self, v: &Vector) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (i, _) in v.support() {
            let p = self.parities[i];
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub(crate) fn check_vector(&self, v: &Vector) -> Result<(), Error> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Renders `v` in this basis, e.g. `2*e1 - e2`.
    pub fn render(&self, v: &Vector) -> String {
        crate::report::Witness::vectors(Vec::new(), Vec::new(), self, v, v).lhs_text()
    }
}

/// Coordinate vector over some [`SuperSpace`] basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    coeffs: Vec<Scalar>,
}

impl Vector {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Vector { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coeffs: vec![Scalar::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coeffs[i] = num::One::one();
        v
    }

    /// Builds a vector from integer coefficients; handy in fixtures.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Vector {
            coeffs: coeffs.iter().map(|&c| crate::scalar::int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.coeffs[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates `(index, coefficient)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        Vector {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Concatenation `(self, other)`: coordinates in a direct sum.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend_from_slice(&other.coeffs);
        Vector { coeffs }
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&num::One::one(), rhs);
        out
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::from_integer(1.into()), rhs);
        out
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl AddAssign<&Vector> for Vector {
    fn add_assign(&mut self, rhs: &Vector) {
        self.add_scaled(&num::One::one(), rhs);
    }
}

/// Lexicographic odometer over `[0, r₁) × … × [0, r_k)`.
///
/// The empty radix list yields exactly one (empty) tuple.
#[derive(Clone, Debug)]
pub struct Tuples {
    radices: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Tuples {
    pub fn new(radices: Vec<usize>) -> Self {
        let next = if radices.contains(&0) {
            None
        } else {
            Some(vec![0; radices.len()])
        };
        Tuples { radices, next }
    }

    /// All `k`-tuples of basis indices of a `dim`-dimensional space.
    pub fn uniform(dim: usize, k: usize) -> Self {
        Self::new(vec![dim; k])
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.radices[pos] {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_arithmetic_is_mod_two() {
        use Parity::*;
        assert_eq!(Odd + Odd, Even);
        assert_eq!(Odd + Even, Odd);
        assert_eq!(Odd * Odd, Odd);
        assert_eq!(Odd * Even, Even);
        assert_eq!([Odd, Odd, Odd].into_iter().sum::<Parity>(), Odd);
    }

    #[test]
    fn space_validation() {
        assert!(SuperSpace::new(vec![], vec![]).is_err());
        assert!(SuperSpace::new(vec!["a".into(), "a".into()], vec![Parity::Even; 2]).is_err());
        assert!(SuperSpace::new(vec!["a".into()], vec![]).is_err());
        let s = SuperSpace::from_bits(&[0, 0, 1]);
        assert_eq!(s.even_basis(), vec![0, 1]);
        assert_eq!(s.odd_basis(), vec![2]);
        assert_eq!(s.index_of("e3"), Some(2));
    }

    #[test]
    fn direct_sum_relabels_collisions() {
        let a = SuperSpace::from_bits(&[0, 1]);
        let sum = a.direct_sum(&a);
        assert_eq!(sum.labels(), &["e1", "e2", "e1'", "e2'"]);
        assert_eq!(sum.parity(3), Parity::Odd);
    }

    #[test]
    fn tuples_are_lexicographic() {
        let all: Vec<_> = Tuples::new(vec![2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(Tuples::new(vec![]).count(), 1);
        assert_eq!(Tuples::new(vec![3, 0]).count(), 0);
    }

    #[test]
    fn homogeneity_of_vectors() {
        let s = SuperSpace::from_bits(&[0, 1, 0]);
        assert_eq!(s.parity_of(&Vector::from_ints(&[1, 0, 2])), Some(Parity::Even));
        assert_eq!(s.parity_of(&Vector::from_ints(&[0, 5, 0])), Some(Parity::Odd));
        assert_eq!(s.parity_of(&Vector::from_ints(&[1, 1, 0])), None);
        assert_eq!(s.parity_of(&s.zero()), Some(Parity::Even));
    }
}
