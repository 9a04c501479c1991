use super::space::{Parity, SuperSpace};
use crate::error::Error;

/// Read-only parity bookkeeping for a tuple `X = (x₁,…,x_m)` of homogeneous
/// elements. Positions are **1-based** throughout, to match the usual way
/// the sign formulas are written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityBook {
    parities: Vec<Parity>,
}

/// Which Koszul exponent to compute from a [`ParityBook`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignKind {
    /// `|X| = Σ_k |x_k|`.
    Total,
    /// `|X|ᵢʲ = Σ_{k=i}^{j} |x_k|`; empty (zero) when `i > j`.
    Range(usize, usize),
    /// `|X|^{i−1} = Σ_{k<i} |x_k|`.
    Prefix(usize),
    /// `γ_{ij} = |X|_{j+1}^{m}(|xᵢ|+|xⱼ|) + |xᵢ||X|_{i+1}^{j−1}` for `i < j`.
    Gamma(usize, usize),
}

impl ParityBook {
    pub fn new(parities: Vec<Parity>) -> Self {
        ParityBook { parities }
    }

    /// Book for a tuple of basis indices of `space`.
    pub fn from_tuple(space: &SuperSpace, tuple: &[usize]) -> Self {
        ParityBook::new(tuple.iter().map(|&i| space.parity(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.parities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parities.is_empty()
    }

    /// `|x_i|` (1-based).
    pub fn at(&self, i: usize) -> Parity {
        self.parities[i - 1]
    }

    pub fn total(&self) -> Parity {
        self.parities.iter().copied().sum()
    }

    /// `|X|ᵢʲ`, zero for an empty range. Requires `1 ≤ i` and `j ≤ m`.
    pub fn range(&self, i: usize, j: usize) -> Parity {
        if i > j {
            return Parity::Even;
        }
        self.parities[i - 1..j].iter().copied().sum()
    }

    /// `|X|^{i−1}`.
    pub fn prefix(&self, i: usize) -> Parity {
        self.range(1, i - 1)
    }

    /// `γ_{ij}` for `i < j`.
    pub fn gamma(&self, i: usize, j: usize) -> Parity {
        let m = self.len();
        self.range(j + 1, m) * (self.at(i) + self.at(j)) + self.at(i) * self.range(i + 1, j - 1)
    }
}

/// Evaluates a Koszul exponent, validating the indices against the tuple
/// length `m`.
///
/// * `Range(i, j)`: `1 ≤ i ≤ m + 1`, `j ≤ m` (so `Range(m+1, m)` is the
///   empty tail).
/// * `Prefix(i)`: `1 ≤ i ≤ m + 1`.
/// * `Gamma(i, j)`: `1 ≤ i < j ≤ m`.
pub fn koszul_sign(book: &ParityBook, kind: SignKind) -> Result<Parity, Error> {
    let m = book.len();
    let out_of_range = |index| Error::IndexOutOfRange { index, len: m };
    match kind {
        SignKind::Total => Ok(book.total()),
        SignKind::Range(i, j) => {
            if i == 0 || i > m + 1 {
                return Err(out_of_range(i));
            }
            if j > m {
                return Err(out_of_range(j));
            }
            Ok(book.range(i, j))
        }
        SignKind::Prefix(i) => {
            if i == 0 || i > m + 1 {
                return Err(out_of_range(i));
            }
            Ok(book.prefix(i))
        }
        SignKind::Gamma(i, j) => {
            if i == 0 || i > m {
                return Err(out_of_range(i));
            }
            if j > m || j <= i {
                return Err(out_of_range(j));
            }
            Ok(book.gamma(i, j))
        }
    }
}

/// Sorts a tuple of basis indices by adjacent swaps and returns the sorted
/// tuple together with the accumulated super-alternating exponent: each swap
/// of neighbours `a, b` contributes `1 + |a||b|` (the sign `−(−1)^{|a||b|}`).
pub(crate) fn sort_with_sign(parities: &[Parity], tuple: &[usize]) -> (Vec<usize>, bool) {
    let mut t = tuple.to_vec();
    let mut odd = false;
    let n = t.len();
    for pass in 0..n {
        for k in 0..n.saturating_sub(1 + pass) {
            if t[k] > t[k + 1] {
                let both_odd = parities[t[k]].is_odd() && parities[t[k + 1]].is_odd();
                odd ^= !both_odd;
                t.swap(k, k + 1);
            }
        }
    }
    (t, odd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parity::*;

    #[test]
    fn sign_examples() {
        let x = ParityBook::new(vec![Even, Even, Odd]);
        assert_eq!(koszul_sign(&x, SignKind::Total).unwrap(), Odd);
        let y = ParityBook::new(vec![Odd, Odd, Even]);
        assert_eq!(koszul_sign(&y, SignKind::Gamma(1, 2)).unwrap(), Even);
        assert_eq!(koszul_sign(&y, SignKind::Prefix(1)).unwrap(), Even);
        assert_eq!(koszul_sign(&y, SignKind::Range(4, 3)).unwrap(), Even);
    }

    #[test]
    fn out_of_range_indices() {
        let x = ParityBook::new(vec![Odd, Even]);
        assert!(koszul_sign(&x, SignKind::Range(0, 1)).is_err());
        assert!(koszul_sign(&x, SignKind::Range(1, 3)).is_err());
        assert!(koszul_sign(&x, SignKind::Prefix(4)).is_err());
        assert!(koszul_sign(&x, SignKind::Gamma(2, 2)).is_err());
        assert!(koszul_sign(&x, SignKind::Gamma(1, 3)).is_err());
    }

    #[test]
    fn sorting_sign() {
        let p = [Even, Odd, Odd];
        // (e2, e1): one swap of an odd with an even element → −1.
        assert_eq!(sort_with_sign(&p, &[1, 0]), (vec![0, 1], true));
        // (e3, e2): both odd → +1.
        assert_eq!(sort_with_sign(&p, &[2, 1]), (vec![1, 2], false));
        // (e3, e2, e1): three swaps, one of them odd-odd → (−1)².
        assert_eq!(sort_with_sign(&p, &[2, 1, 0]), (vec![0, 1, 2], false));
    }
}
