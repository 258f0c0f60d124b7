//! Binary linear codes: construction, hull analysis, weights and file formats.

mod families;
mod hull;
mod io;
mod weights;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BitVector, Echelon};

pub use families::{even_code, hamming, reed_muller, simplex};
pub use hull::HullDecomposition;
pub use io::{emit_hex, parse_code_file, parse_hex, write_code_file, write_hex_file};
pub use weights::{for_each_codeword, WeightDistribution};

/// Largest dimension for which codewords are enumerated exhaustively.
pub const DEFAULT_ENUMERATION_BOUND: usize = 28;

/// An `[n, k]` binary linear code held as a full-rank `k x n` generator matrix.
///
/// The generator keeps the caller's rows (minus dependent ones) in their
/// original order. Derived data is computed lazily and cached; the cache is
/// write-once, so a shared code can be read from several threads.
#[derive(Clone)]
pub struct LinearCode {
    gen: BinaryMatrix,
    echelon: OnceLock<Echelon>,
    hull_dim: OnceLock<usize>,
    weights: OnceLock<WeightDistribution>,
}

impl LinearCode {
    /// The code spanned by the rows of `m`. Rows that depend on earlier rows are dropped.
    pub fn from_generator(m: &BinaryMatrix) -> Result<Self> {
        let mut kept = Vec::new();
        let mut basis: Vec<(usize, BitVector)> = Vec::new();
        for row in m.row_vectors() {
            let mut r = row.clone();
            for (p, b) in &basis {
                if r.get(*p) {
                    r.xor_assign(b);
                }
            }
            if let Some(p) = r.first_one() {
                for (_, b) in basis.iter_mut() {
                    if b.get(p) {
                        b.xor_assign(&r);
                    }
                }
                basis.push((p, r));
                kept.push(row.clone());
            }
        }
        if kept.is_empty() {
            return Err(Error::EmptyCode);
        }
        Ok(LinearCode::from_basis(
            BinaryMatrix::from_rows(m.cols(), kept).expect("rows share a length"),
        ))
    }

    /// Wraps rows already known to be linearly independent.
    pub(crate) fn from_basis(gen: BinaryMatrix) -> Self {
        debug_assert_eq!(gen.rank(), gen.rows());
        LinearCode {
            gen,
            echelon: OnceLock::new(),
            hull_dim: OnceLock::new(),
            weights: OnceLock::new(),
        }
    }

    /// The zero code of length `n` (dimension 0).
    pub fn zero(n: usize) -> Self {
        LinearCode::from_basis(BinaryMatrix::zeros(0, n))
    }

    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        LinearCode::from_generator(&BinaryMatrix::from_strs(rows)?)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &BinaryMatrix {
        &self.gen
    }

    /// Reduced row echelon form of the generator; identical for equal codes.
    pub fn echelon(&self) -> &Echelon {
        self.echelon.get_or_init(|| self.gen.echelon())
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.n() && self.echelon().contains(v)
    }

    /// True when every row of `other` lies in `self`.
    pub fn contains_code(&self, other: &LinearCode) -> bool {
        other.gen.row_vectors().iter().all(|r| self.contains(r))
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_basis(self.gen.nullspace_basis())
    }

    /// Dimension of `C ∩ C^⊥`, as `k - rank(G G^T)`.
    pub fn hull_dim(&self) -> usize {
        *self
            .hull_dim
            .get_or_init(|| self.k() - self.gen.gram().rank())
    }

    /// A basis of the hull. Generator rows lying in the hull are used first.
    pub fn hull_basis(&self) -> BinaryMatrix {
        hull::hull_basis(self)
    }

    pub fn hull_decompose(&self) -> HullDecomposition {
        hull::decompose(self)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gen.gram().is_zero()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n() && self.is_self_orthogonal()
    }

    /// Every codeword has even weight. Over GF(2), `wt(u + v) = wt(u) + wt(v) - 2 wt(u & v)`,
    /// so checking the generator rows suffices.
    pub fn is_even(&self) -> bool {
        self.gen.row_vectors().iter().all(|r| r.weight() % 2 == 0)
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dim() == 0
    }

    pub fn contains_dual(&self) -> bool {
        self.contains_code(&self.dual())
    }

    /// Weight distribution by exhaustive enumeration, refused above
    /// [`DEFAULT_ENUMERATION_BOUND`].
    pub fn weight_distribution(&self) -> Result<&WeightDistribution> {
        self.weight_distribution_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn weight_distribution_bounded(&self, bound: usize) -> Result<&WeightDistribution> {
        if let Some(w) = self.weights.get() {
            return Ok(w);
        }
        check_bound(self.k(), bound)?;
        Ok(self
            .weights
            .get_or_init(|| WeightDistribution::of_generator(&self.gen)))
    }

    /// Minimum nonzero weight (the length `n` is never returned for k = 0; that is `None`).
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn min_distance_bounded(&self, bound: usize) -> Result<usize> {
        let w = self.weight_distribution_bounded(bound)?;
        w.min_distance()
            .ok_or_else(|| Error::Domain("the zero code has no minimum distance".into()))
    }

    /// The code `σC`: coordinate `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> LinearCode {
        LinearCode::from_basis(self.gen.permute_columns(perm))
    }

    /// Parameters `(n, k)`.
    pub fn params(&self) -> (usize, usize) {
        (self.n(), self.k())
    }
}

pub(crate) fn check_bound(k: usize, bound: usize) -> Result<()> {
    if k > bound {
        Err(Error::Capability {
            what: "dimension k",
            value: k,
            bound,
        })
    } else {
        Ok(())
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.k() == other.k() && self.echelon() == other.echelon()
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}] {:?}", self.n(), self.k(), self.gen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    pub(crate) fn random_code(n: usize, k: usize, seed: u64) -> Option<LinearCode> {
        let mut s = seed | 1;
        let rows: Vec<BitVector> = (0..k)
            .map(|_| {
                let bits: Vec<bool> = (0..n)
                    .map(|_| {
                        s ^= s << 13;
                        s ^= s >> 7;
                        s ^= s << 17;
                        s & 1 == 1
                    })
                    .collect();
                BitVector::from_bools(&bits)
            })
            .collect();
        LinearCode::from_generator(&BinaryMatrix::from_rows(n, rows).unwrap()).ok()
    }

    fn exhaustive_even(c: &LinearCode) -> bool {
        let mut even = true;
        for_each_codeword(c.generator(), |w| {
            if w.iter().map(|x| x.count_ones()).sum::<u32>() % 2 == 1 {
                even = false;
            }
        });
        even
    }

    #[test]
    fn from_generator_examples() {
        let c = LinearCode::from_generator(&BinaryMatrix::identity(4)).unwrap();
        assert_eq!(c.params(), (4, 4));
        let ex = LinearCode::from_strs(fixtures::EX1_G).unwrap();
        assert_eq!(ex.params(), (9, 5));
        let rep = LinearCode::from_strs(&["1100", "0011", "1100"]).unwrap();
        assert_eq!(rep.k(), 2);
        assert_eq!(
            LinearCode::from_generator(&BinaryMatrix::zeros(3, 5)),
            Err(Error::EmptyCode)
        );
    }

    #[test]
    fn duals() {
        for r in 2..=5 {
            assert_eq!(hamming(r).unwrap().dual(), simplex(r).unwrap());
        }
        for n in 2..=9 {
            let e = even_code(n).unwrap();
            assert_eq!(
                e.dual(),
                LinearCode::from_generator(
                    &BinaryMatrix::from_rows(n, vec![BitVector::ones(n)]).unwrap()
                )
                .unwrap()
            );
        }
        let full = LinearCode::from_generator(&BinaryMatrix::identity(5)).unwrap();
        assert_eq!(full.dual().k(), 0);
        assert!(full.contains_dual());
    }

    #[test]
    fn hull_dimensions() {
        assert_eq!(hamming(4).unwrap().hull_dim(), 4);
        assert_eq!(
            LinearCode::from_strs(fixtures::EX1_G).unwrap().hull_dim(),
            3
        );
        assert_eq!(
            LinearCode::from_strs(fixtures::EX2_G).unwrap().hull_dim(),
            2
        );
        assert_eq!(even_code(4).unwrap().hull_dim(), 1);
        assert_eq!(even_code(5).unwrap().hull_dim(), 0);
    }

    #[test]
    fn predicates() {
        assert!(even_code(6).unwrap().is_even());
        let h4 = hamming(4).unwrap();
        assert!(!h4.is_even());
        assert!(h4.contains_dual());
        assert!(simplex(3).unwrap().is_self_orthogonal());
        assert!(!simplex(3).unwrap().contains_dual());
    }

    #[test]
    fn minimum_distances() {
        assert_eq!(hamming(3).unwrap().min_distance().unwrap(), 3);
        assert_eq!(hamming(4).unwrap().min_distance().unwrap(), 3);
        assert_eq!(even_code(4).unwrap().min_distance().unwrap(), 2);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let big = LinearCode::from_generator(&BinaryMatrix::identity(30)).unwrap();
        assert_eq!(
            big.min_distance(),
            Err(Error::Capability {
                what: "dimension k",
                value: 30,
                bound: 28
            })
        );
        assert_eq!(
            big.min_distance_bounded(5).unwrap_err().to_string(),
            "dimension k = 30 exceeds the configured bound 5"
        );
    }

    #[test]
    fn repetition_weights() {
        for n in 1..10 {
            let rep = LinearCode::from_generator(
                &BinaryMatrix::from_rows(n, vec![BitVector::ones(n)]).unwrap(),
            )
            .unwrap();
            let w = rep.weight_distribution().unwrap();
            assert_eq!(w.get(0), 1);
            assert_eq!(w.get(n), 1);
            assert_eq!(w.total(), 2);
        }
    }

    #[test]
    fn hamming_simplex_orthogonal() {
        for r in 2..=6 {
            let h = hamming(r).unwrap();
            let s = simplex(r).unwrap();
            for a in h.generator().row_vectors() {
                for b in s.generator().row_vectors() {
                    assert!(!a.dot_unchecked(b));
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn hull_is_symmetric_under_duality(n in 2usize..=14, k in 1usize..=14, seed in any::<u64>()) {
            prop_assume!(k < n);
            if let Some(c) = random_code(n, k, seed) {
                let d = c.dual();
                prop_assert_eq!(c.hull_dim(), d.hull_dim());
                prop_assert_eq!(c.is_self_orthogonal(), c.hull_dim() == c.k());
                prop_assert_eq!(c.is_lcd(), c.hull_dim() == 0);
                prop_assert!(c.hull_dim() <= c.k().min(c.n() - c.k()));
                prop_assert_eq!(d.dual(), c.clone());
                prop_assert_eq!(c.hull_basis().rows(), c.hull_dim());
            }
        }

        #[test]
        fn evenness_criterion_matches_exhaustive(n in 1usize..=16, k in 1usize..=10, seed in any::<u64>()) {
            if let Some(c) = random_code(n, k, seed) {
                prop_assert_eq!(c.is_even(), exhaustive_even(&c));
            }
        }

        #[test]
        fn self_orthogonal_codes_have_no_odd_weights(seed in any::<u64>(), n in 4usize..=16) {
            // D = [I | I] style doubled codes are self-orthogonal
            if let Some(c) = random_code(n, 3, seed) {
                let doubled = LinearCode::from_generator(&c.generator().hstack(c.generator()).unwrap()).unwrap();
                prop_assert!(doubled.is_self_orthogonal());
                let w = doubled.weight_distribution().unwrap();
                for i in (1..=doubled.n()).step_by(2) {
                    prop_assert_eq!(w.get(i), 0);
                }
            }
        }

        #[test]
        fn min_distance_matches_pairwise(n in 2usize..=16, k in 1usize..=8, seed in any::<u64>()) {
            if let Some(c) = random_code(n, k, seed) {
                // all codewords via explicit combinations, then all pairwise distances
                let rows = c.generator().row_vectors();
                let words: Vec<BitVector> = (0u32..1 << c.k())
                    .map(|m| {
                        let mut w = BitVector::zeros(n);
                        for (i, r) in rows.iter().enumerate() {
                            if (m >> i) & 1 == 1 { w.xor_assign(r); }
                        }
                        w
                    })
                    .collect();
                let mut best = usize::MAX;
                for i in 0..words.len() {
                    for j in i + 1..words.len() {
                        best = best.min(words[i].xor(&words[j]).weight());
                    }
                }
                prop_assert_eq!(c.min_distance().unwrap(), best);
            }
        }
    }
}
