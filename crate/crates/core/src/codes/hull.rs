use super::LinearCode;
use crate::gf2::{BinaryMatrix, BitVector};

/// A generator of `C` split as `[hull rows; complement rows]`.
///
/// The complement spans an LCD code. When `C` is odd, the first complement row
/// is an odd-weight vector `x` and every other complement row has even weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullDecomposition {
    pub hull_rows: BinaryMatrix,
    pub comp_rows: BinaryMatrix,
    pub odd_row_index: Option<usize>,
}

impl HullDecomposition {
    /// The stacked generator `[hull_rows; comp_rows]`.
    pub fn generator(&self) -> BinaryMatrix {
        self.hull_rows.vstack(&self.comp_rows).expect("same length")
    }

    /// The odd row `x`, if `C` is odd.
    pub fn odd_row(&self) -> Option<&BitVector> {
        self.odd_row_index.map(|i| self.comp_rows.row(i))
    }

    /// Complement rows other than `x`.
    pub fn even_rows(&self) -> BinaryMatrix {
        let keep: Vec<usize> = (0..self.comp_rows.rows())
            .filter(|&i| Some(i) != self.odd_row_index)
            .collect();
        self.comp_rows.select_rows(&keep)
    }
}

struct Span {
    basis: Vec<(usize, BitVector)>,
}

impl Span {
    fn new() -> Self {
        Span { basis: Vec::new() }
    }

    /// Adds `v` if it is independent of the span; reports whether it was added.
    fn insert(&mut self, v: &BitVector) -> bool {
        let mut r = v.clone();
        for (p, b) in &self.basis {
            if r.get(*p) {
                r.xor_assign(b);
            }
        }
        match r.first_one() {
            Some(p) => {
                for (_, b) in self.basis.iter_mut() {
                    if b.get(p) {
                        b.xor_assign(&r);
                    }
                }
                self.basis.push((p, r));
                true
            }
            None => false,
        }
    }
}

pub(super) fn hull_basis(c: &LinearCode) -> BinaryMatrix {
    let gen = c.generator();
    let gram = gen.gram();
    let mut span = Span::new();
    let mut rows = Vec::new();
    // generator rows orthogonal to every row already lie in the hull
    for i in 0..gen.rows() {
        if gram.row(i).is_zero() && span.insert(gen.row(i)) {
            rows.push(gen.row(i).clone());
        }
    }
    if rows.len() < c.hull_dim() {
        // hull = { y G : y (G G^T) = 0 }
        let coeffs = gram.nullspace_basis();
        let vectors = coeffs.mul(gen).expect("k columns");
        for v in vectors.into_rows() {
            if span.insert(&v) {
                rows.push(v);
            }
        }
    }
    debug_assert_eq!(rows.len(), c.hull_dim());
    BinaryMatrix::from_rows(c.n(), rows).expect("uniform length")
}

pub(super) fn decompose(c: &LinearCode) -> HullDecomposition {
    let hull_rows = hull_basis(c);
    let mut span = Span::new();
    for r in hull_rows.row_vectors() {
        span.insert(r);
    }
    let mut comp: Vec<BitVector> = c
        .generator()
        .row_vectors()
        .iter()
        .filter(|r| span.insert(r))
        .cloned()
        .collect();
    let odd_row_index = comp.iter().position(|r| r.weight() % 2 == 1).map(|i| {
        let x = comp.remove(i);
        for z in comp.iter_mut() {
            if z.weight() % 2 == 1 {
                z.xor_assign(&x);
            }
        }
        comp.insert(0, x);
        0
    });
    HullDecomposition {
        hull_rows,
        comp_rows: BinaryMatrix::from_rows(c.n(), comp).expect("uniform length"),
        odd_row_index,
    }
}
