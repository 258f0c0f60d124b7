//! Orthonormal bases, the orthogonal group `O(s, 2)`, and self-dual embeddings
//! of odd dual-containing codes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codes::{LinearCode, WeightDistribution};
use crate::embed::{EmbeddingResult, Strategy};
use crate::error::{Error, Result};
use crate::gf2::{solve_affine_words, BinaryMatrix, BitVector};
use crate::search::{EquivalenceClassSet, DEFAULT_EQUIVALENCE_BUDGET};

/// Default bound on `s` for group enumeration.
pub const DEFAULT_GROUP_BOUND: usize = 8;

/// Rows `b_i` with `<b_i, b_j> = [i == j]`, spanning the rows of `source`.
#[derive(Clone, Debug)]
pub struct OrthonormalBasis {
    pub vectors: BinaryMatrix,
    pub source: BinaryMatrix,
}

impl OrthonormalBasis {
    /// Gram matrix is the identity and the two row spaces coincide.
    pub fn verify(&self) -> bool {
        let s = self.vectors.rows();
        let a = self.vectors.echelon();
        let b = self.source.echelon();
        self.vectors.gram() == BinaryMatrix::identity(s)
            && a.rank() == b.rank()
            && self.source.row_vectors().iter().all(|r| a.contains(r))
            && self.vectors.row_vectors().iter().all(|r| b.contains(r))
    }
}

fn project(v: &mut BitVector, onto: &BitVector) {
    if onto.dot_unchecked(v) {
        v.xor_assign(onto);
    }
}

/// Turns a basis of an odd LCD code into an orthonormal one.
///
/// The first odd vector left is taken and projected out of the others. When
/// only even vectors remain, the first of them `a_2` and the first `a_3` with
/// `<a_2, a_3> = 1` are merged with the first output vector `b_1`:
/// `b_1 <- b_1 + a_2 + a_3`, `b_2 = a_2 + b_1`, `b_3 = a_3 + b_1`, and the
/// remaining vectors are projected against all three.
pub fn orthonormalize(basis: &BinaryMatrix) -> Result<OrthonormalBasis> {
    if basis.rank() != basis.rows() {
        return Err(Error::Domain("basis rows are dependent".into()));
    }
    let mut remaining: Vec<BitVector> = basis.row_vectors().to_vec();
    let mut out: Vec<BitVector> = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        if let Some(p) = remaining.iter().position(|v| v.weight() % 2 == 1) {
            let b = remaining.remove(p);
            for a in remaining.iter_mut() {
                project(a, &b);
            }
            out.push(b);
            continue;
        }
        if out.is_empty() {
            return Err(Error::Domain(
                "step 2.1: the span has no odd-weight vector".into(),
            ));
        }
        let a2 = remaining.remove(0);
        let Some(p) = remaining.iter().position(|a| a.dot_unchecked(&a2)) else {
            return Err(Error::Domain(
                "step 2.2: an even vector is orthogonal to everything left; the code is not LCD"
                    .into(),
            ));
        };
        let a3 = remaining.remove(p);
        let b1 = out[0].xor(&a2).xor(&a3);
        let b2 = a2.xor(&b1);
        let b3 = a3.xor(&b1);
        for a in remaining.iter_mut() {
            project(a, &b1);
            project(a, &b2);
            project(a, &b3);
        }
        out[0] = b1;
        out.push(b2);
        out.push(b3);
    }
    Ok(OrthonormalBasis {
        vectors: BinaryMatrix::from_rows(basis.cols(), out)?,
        source: basis.clone(),
    })
}

/// A systematic generator `[I_k | A]` of a code, reached by a column permutation.
#[derive(Clone, Debug)]
pub struct SystematicFrame {
    pub source: LinearCode,
    /// Coordinate `j` of the systematic form is coordinate `columns[j]` of the source.
    pub columns: Vec<usize>,
    pub a: BinaryMatrix,
    /// The `k x s` block whose columns are an orthonormal basis of `{x : A^T x = 0}`.
    pub b: BinaryMatrix,
}

impl SystematicFrame {
    /// Builds the frame of an odd dual-containing code, checking `A^T A = I`
    /// and that both `<A^T>` and its dual contain odd words.
    pub fn new(c: &LinearCode) -> Result<Self> {
        if c.is_even() || !c.contains_dual() {
            return Err(Error::Hypothesis(
                "a self-dual embedding needs an odd code containing its dual".into(),
            ));
        }
        let (n, k) = c.params();
        let ech = c.echelon();
        let mut columns = ech.pivots.clone();
        columns.extend((0..n).filter(|j| !ech.pivots.contains(j)));
        let sys = ech.matrix.select_columns(&columns);
        let a = sys.select_columns(&(k..n).collect::<Vec<_>>());
        let at = a.transpose();
        if at.gram() != BinaryMatrix::identity(n - k) {
            return Err(Error::Hypothesis("A^T A is not the identity".into()));
        }
        let null = at.nullspace_basis();
        if n - k > 0 && null.rows() > 0 {
            let odd = |m: &BinaryMatrix| m.row_vectors().iter().any(|r| r.weight() % 2 == 1);
            if !odd(&at) || !odd(&null) {
                return Err(Error::Hypothesis(
                    "<A^T> is not an LCD code with odd words on both sides".into(),
                ));
            }
        }
        let ortho = orthonormalize(&null)?;
        Ok(SystematicFrame {
            source: c.clone(),
            columns,
            a,
            b: ortho.vectors.transpose(),
        })
    }

    /// `s = k - (n - k)`, the size of the orthogonal matrices acting on `B`.
    pub fn s(&self) -> usize {
        self.b.cols()
    }

    /// Generator `[I | A | B R]` with the first `n` coordinates put back in source order.
    pub fn generator(&self, r: Option<&BinaryMatrix>) -> Result<BinaryMatrix> {
        let k = self.source.k();
        let n = self.source.n();
        let block = match r {
            Some(r) => self.b.mul(r)?,
            None => self.b.clone(),
        };
        let g = BinaryMatrix::identity(k).hstack(&self.a)?.hstack(&block)?;
        let mut perm: Vec<usize> = self.columns.clone();
        perm.extend(n..g.cols());
        Ok(g.permute_columns(&perm))
    }

    pub fn code(&self, r: Option<&BinaryMatrix>) -> Result<LinearCode> {
        LinearCode::from_generator(&self.generator(r)?)
    }
}

/// The self-dual `[2k, k]` embedding `[I | A | B]` of an odd dual-containing code.
pub fn selfdual_embed_systematic(c: &LinearCode) -> Result<EmbeddingResult> {
    let frame = SystematicFrame::new(c)?;
    EmbeddingResult::from_result(c, &frame.code(None)?, Strategy::Orthobasis)
}

fn check_group_bound(s: usize, bound: usize) -> Result<()> {
    if s > bound || s > 63 {
        return Err(Error::Capability {
            what: "s",
            value: s,
            bound: bound.min(63),
        });
    }
    Ok(())
}

/// Candidates for the next column: odd weight and orthogonal to `chosen`.
/// Empty when the chosen columns cannot be completed.
fn next_columns(s: usize, chosen: &[u64]) -> Vec<u64> {
    let ones = (1u64 << s) - 1;
    let t = chosen.len();
    if t > 0 && t < s && chosen.iter().fold(0, |a, &c| a ^ c) == ones {
        // the complement is alternating and has no orthonormal basis
        return Vec::new();
    }
    let mut cons = vec![(ones, true)];
    cons.extend(chosen.iter().map(|&c| (c, false)));
    solve_affine_words(&cons, s).map_or_else(Vec::new, |sp| sp.iter().collect())
}

fn walk(s: usize, chosen: &mut Vec<u64>, ascending: bool, f: &mut dyn FnMut(&[u64])) {
    if chosen.len() == s {
        f(chosen);
        return;
    }
    let floor = if ascending {
        chosen.last().map_or(0, |&c| c + 1)
    } else {
        0
    };
    for c in next_columns(s, chosen) {
        if c < floor {
            continue;
        }
        chosen.push(c);
        walk(s, chosen, ascending, f);
        chosen.pop();
    }
}

/// Calls `f` with the columns (row 0 is bit 0) of every `R` in `O(s, 2)`, in
/// ascending lexicographic order of the column sequence.
pub fn for_each_orthogonal(s: usize, bound: usize, mut f: impl FnMut(&[u64])) -> Result<()> {
    check_group_bound(s, bound)?;
    walk(s, &mut Vec::with_capacity(s), false, &mut f);
    Ok(())
}

/// All of `O(s, 2)`, in enumeration order.
pub fn orthogonal_group(s: usize) -> Result<Vec<BinaryMatrix>> {
    let mut out = Vec::new();
    for_each_orthogonal(s, DEFAULT_GROUP_BOUND, |cols| {
        out.push(BinaryMatrix::from_column_words(s, cols))
    })?;
    Ok(out)
}

/// `|O(s, 2)|`, counted with one task per first column.
pub fn orthogonal_group_order(s: usize, bound: usize) -> Result<u64> {
    check_group_bound(s, bound)?;
    if s == 0 {
        return Ok(1);
    }
    Ok(next_columns(s, &[])
        .into_par_iter()
        .map(|c| {
            let mut n = 0u64;
            walk(s, &mut vec![c], false, &mut |_| n += 1);
            n
        })
        .sum())
}

/// One orthogonal matrix per orbit of `R -> R P` over permutation matrices `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRep {
    pub matrix: BinaryMatrix,
    /// Columns as integers, sorted; constant on the orbit.
    pub canonical_key: Vec<u64>,
}

/// Sorted columns of `r`.
pub fn canonical_key(r: &BinaryMatrix) -> Vec<u64> {
    let mut cols = r.column_words();
    cols.sort_unstable();
    cols
}

/// Representatives of `O(s, 2) / S_s`: the matrices whose columns strictly ascend.
pub fn coset_representatives(s: usize) -> Result<Vec<CosetRep>> {
    check_group_bound(s, DEFAULT_GROUP_BOUND)?;
    let mut out = Vec::new();
    walk(s, &mut Vec::with_capacity(s), true, &mut |cols| {
        out.push(CosetRep {
            matrix: BinaryMatrix::from_column_words(s, cols),
            canonical_key: cols.to_vec(),
        })
    });
    Ok(out)
}

/// A random element of `O(s, 2)` built column by column.
pub fn random_orthogonal(s: usize, rng: &mut impl Rng) -> BinaryMatrix {
    let mut cols = Vec::with_capacity(s);
    while cols.len() < s {
        let cands = next_columns(s, &cols);
        if cands.is_empty() {
            cols.clear();
            continue;
        }
        cols.push(cands[rng.gen_range(0..cands.len())]);
    }
    BinaryMatrix::from_column_words(s, &cols)
}

/// One class of self-dual embeddings found by a sweep.
#[derive(Clone, Debug)]
pub struct SweepClass {
    pub code: LinearCode,
    pub d: usize,
    pub weights: WeightDistribution,
    /// Index of the first orthogonal matrix that produced the class.
    pub first_index: usize,
    pub orthogonal: BinaryMatrix,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub frame: SystematicFrame,
    pub matrices_swept: usize,
    pub classes: Vec<SweepClass>,
    /// Pairs the equivalence engine could not decide within its budget.
    pub undecided: usize,
}

/// Classifies the embeddings `[I | A | B R]` over the given matrices.
pub fn sweep_with(frame: &SystematicFrame, matrices: &[BinaryMatrix]) -> Result<SweepReport> {
    let codes: Vec<LinearCode> = matrices
        .par_iter()
        .map(|r| {
            let c = frame.code(Some(r))?;
            c.weight_distribution()?;
            Ok(c)
        })
        .collect::<Result<_>>()?;
    let mut set = EquivalenceClassSet::new(DEFAULT_EQUIVALENCE_BUDGET);
    let mut classes = Vec::new();
    for (i, c) in codes.into_iter().enumerate() {
        if set.insert(c.clone())?.is_new() {
            let w = c.weight_distribution()?.clone();
            classes.push(SweepClass {
                d: w.min_distance().unwrap_or(0),
                weights: w,
                code: c,
                first_index: i,
                orthogonal: matrices[i].clone(),
            });
        }
    }
    Ok(SweepReport {
        frame: frame.clone(),
        matrices_swept: matrices.len(),
        classes,
        undecided: set.undecided(),
    })
}

/// Every self-dual embedding of `c` up to equivalence, via one matrix per coset of `O(s, 2)`.
pub fn sweep_selfdual_embeddings(c: &LinearCode) -> Result<SweepReport> {
    let frame = SystematicFrame::new(c)?;
    let reps: Vec<BinaryMatrix> = coset_representatives(frame.s())?
        .into_iter()
        .map(|r| r.matrix)
        .collect();
    sweep_with(&frame, &reps)
}

/// A best-effort sweep over `seed` (if any) followed by `samples` random
/// orthogonal matrices, for `s` too large to enumerate.
pub fn sweep_sampled(
    frame: &SystematicFrame,
    seed: Option<&BinaryMatrix>,
    samples: usize,
    rng_seed: u64,
) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let s = frame.s();
    let mut mats: Vec<BinaryMatrix> = seed.into_iter().cloned().collect();
    for _ in 0..samples {
        let mut r = random_orthogonal(s, &mut rng);
        let mut perm: Vec<usize> = (0..s).collect();
        perm.shuffle(&mut rng);
        r = r.permute_columns(&perm);
        mats.push(r);
    }
    sweep_with(frame, &mats)
}

/// `R = B^T B'`, the orthogonal matrix carrying the frame's block onto `b_prime`,
/// if `b_prime = B R` holds.
pub fn recover_orthogonal(frame: &SystematicFrame, b_prime: &BinaryMatrix) -> Option<BinaryMatrix> {
    let r = frame.b.transpose().mul(b_prime).ok()?;
    let s = frame.s();
    (r.rows() == s
        && r.gram() == BinaryMatrix::identity(s)
        && frame.b.mul(&r).ok().as_ref() == Some(b_prime))
    .then_some(r)
}
