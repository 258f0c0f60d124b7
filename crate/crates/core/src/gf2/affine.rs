//! Solution sets of affine systems `c_i . v = b_i` over GF(2).

use super::vector::BitVector;

/// A nonempty affine subspace `particular + span(basis)`.
///
/// The basis is in reduced form: basis vector `j` has its highest set
/// coordinate at a position no other basis vector (and not `particular`)
/// touches, and vectors are sorted by that position. Counting through the
/// coefficients in binary therefore lists the solutions in ascending
/// integer order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: BitVector,
    pub basis: Vec<BitVector>,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of solutions, saturating at `u128::MAX` for huge spaces.
    pub fn count(&self) -> u128 {
        1u128
            .checked_shl(self.basis.len() as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut r = v.xor(&self.particular);
        for b in self.basis.iter().rev() {
            let top = b.iter_ones().last().expect("basis vectors are nonzero");
            if r.get(top) {
                r.xor_assign(b);
            }
        }
        r.is_zero()
    }

    /// All solutions in ascending integer order (coordinate 0 least significant).
    pub fn iter(&self) -> impl Iterator<Item = BitVector> + '_ {
        assert!(self.basis.len() < 64, "affine space too large to enumerate");
        let total = 1u64 << self.basis.len();
        let mut current = self.particular.clone();
        let mut index = 0u64;
        std::iter::from_fn(move || {
            if index == total {
                return None;
            }
            let out = current.clone();
            index += 1;
            if index < total {
                // binary counting: flip the lowest bits that changed
                let changed = index ^ (index - 1);
                for j in 0..self.basis.len() {
                    if (changed >> j) & 1 == 1 {
                        current.xor_assign(&self.basis[j]);
                    }
                }
            }
            Some(out)
        })
    }
}

/// Solves `c . v = b` for every `(c, b)` in `constraints`, with `v` of length `dim`.
///
/// Returns `None` when the system is inconsistent. Elimination uses the
/// leftmost-column, topmost-row pivot rule, so the result is deterministic.
pub fn solve_affine(constraints: &[(BitVector, bool)], dim: usize) -> Option<AffineSpace> {
    let mut rows: Vec<(BitVector, bool)> = constraints
        .iter()
        .map(|(c, b)| {
            assert_eq!(c.len(), dim, "constraint length {} != dim {dim}", c.len());
            (c.clone(), *b)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0.get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let (pivot_vec, pivot_rhs) = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0.get(col) {
                row.0.xor_assign(&pivot_vec);
                row.1 ^= pivot_rhs;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|(_, b)| *b) {
        return None;
    }
    let mut particular = BitVector::zeros(dim);
    for (i, &p) in pivots.iter().enumerate() {
        if rows[i].1 {
            particular.set(p, true);
        }
    }
    let mut is_pivot = vec![false; dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..dim)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVector::zeros(dim);
            v.set(f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if rows[i].0.get(f) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    Some(AffineSpace { particular, basis })
}

/// Single-word affine space, for search loops over vectors of length at most 64.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordAffine {
    pub particular: u64,
    pub basis: Vec<u64>,
}

impl WordAffine {
    /// Solutions in ascending integer order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let total = 1u64 << self.basis.len();
        (0..total).map(move |c| {
            let mut v = self.particular;
            let mut c = c;
            while c != 0 {
                let j = c.trailing_zeros() as usize;
                v ^= self.basis[j];
                c &= c - 1;
            }
            v
        })
    }

    pub fn len(&self) -> usize {
        1usize << self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Word-level twin of [`solve_affine`]: constraints are `(mask, rhs)` with `dim <= 64`.
pub fn solve_affine_words(constraints: &[(u64, bool)], dim: usize) -> Option<WordAffine> {
    assert!(dim <= 64);
    let mut rows: Vec<(u64, bool)> = constraints.to_vec();
    let mut pivots: Vec<usize> = Vec::with_capacity(rows.len());
    let mut r = 0;
    for col in 0..dim {
        if r == rows.len() {
            break;
        }
        let bit = 1u64 << col;
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0 & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let (pv, pb) = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0 & bit != 0 {
                row.0 ^= pv;
                row.1 ^= pb;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|&(_, b)| b) {
        return None;
    }
    let mut particular = 0u64;
    let mut pivot_mask = 0u64;
    for (i, &p) in pivots.iter().enumerate() {
        pivot_mask |= 1 << p;
        if rows[i].1 {
            particular |= 1 << p;
        }
    }
    let mut basis = Vec::with_capacity(dim - pivots.len());
    for f in 0..dim {
        if pivot_mask & (1 << f) != 0 {
            continue;
        }
        let mut v = 1u64 << f;
        for (i, &p) in pivots.iter().enumerate() {
            if rows[i].0 & (1 << f) != 0 {
                v |= 1 << p;
            }
        }
        basis.push(v);
    }
    Some(WordAffine { particular, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(constraints: &[(u64, bool)], dim: usize) -> Vec<u64> {
        (0..1u64 << dim)
            .filter(|v| {
                constraints
                    .iter()
                    .all(|&(c, b)| ((c & v).count_ones() & 1 == 1) == b)
            })
            .collect()
    }

    #[test]
    fn no_constraints_is_whole_space() {
        let s = solve_affine(&[], 3).unwrap();
        assert_eq!(s.count(), 8);
        assert_eq!(s.iter().count(), 8);
    }

    #[test]
    fn single_constraint_has_four_solutions() {
        let c: BitVector = "110".parse().unwrap();
        let s = solve_affine(&[(c.clone(), true)], 3).unwrap();
        let sols: Vec<BitVector> = s.iter().collect();
        assert_eq!(sols.len(), 4);
        for v in &sols {
            assert!(c.dot(v).unwrap());
        }
        // the 8-vector enumeration agrees
        let all = brute(&[(0b011, true)], 3);
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn contradiction_is_empty() {
        let c: BitVector = "10".parse().unwrap();
        assert!(solve_affine(&[(c.clone(), false), (c, true)], 2).is_none());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn matches_enumeration(dim in 0usize..=12,
                               raw in proptest::collection::vec((any::<u64>(), any::<bool>()), 0..8)) {
            let mask = if dim == 64 { u64::MAX } else { (1u64 << dim) - 1 };
            let cons: Vec<(u64, bool)> = raw.iter().map(|&(c, b)| (c & mask, b)).collect();
            let expected = brute(&cons, dim);

            let words = solve_affine_words(&cons, dim);
            let got: Vec<u64> = words.as_ref().map(|w| w.iter().collect()).unwrap_or_default();
            prop_assert_eq!(&got, &expected, "word solver, ascending order");

            let bitcons: Vec<(BitVector, bool)> = cons
                .iter()
                .map(|&(c, b)| (BitVector::from_word(dim, c), b))
                .collect();
            let space = solve_affine(&bitcons, dim);
            let got2: Vec<u64> = space
                .as_ref()
                .map(|s| s.iter().map(|v| v.to_word().unwrap()).collect())
                .unwrap_or_default();
            prop_assert_eq!(&got2, &expected, "vector solver, ascending order");
            if let Some(s) = space {
                for v in 0..1u64 << dim {
                    let bv = BitVector::from_word(dim, v);
                    prop_assert_eq!(s.contains(&bv), expected.binary_search(&v).is_ok());
                }
            }
        }
    }
}
