//! Shortest self-orthogonal embeddings: the length rule and constructions reaching it.

use std::fmt;

use crate::codes::{LinearCode, DEFAULT_ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::gf2::{solve_affine_words, BinaryMatrix, BitVector};
use crate::orthosearch;

/// How an embedding was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Identity,
    Dfs,
    EvenCanonical,
    Orthobasis,
    TheoremOdd,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Identity => "identity",
            Strategy::Dfs => "dfs",
            Strategy::EvenCanonical => "even-canonical",
            Strategy::Orthobasis => "orthobasis",
            Strategy::TheoremOdd => "theorem-odd-case",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "identity" => Strategy::Identity,
            "dfs" => Strategy::Dfs,
            "even-canonical" => Strategy::EvenCanonical,
            "orthobasis" => Strategy::Orthobasis,
            "theorem-odd-case" | "theorem-odd" => Strategy::TheoremOdd,
            other => return Err(Error::Parameter(format!("unknown strategy {other:?}"))),
        })
    }
}

/// Default bound on `k - l` for the depth-first search.
pub const DEFAULT_DFS_BOUND: usize = 16;

#[derive(Clone, Copy, Debug)]
pub struct DfsConfig {
    /// Largest `k - l` the search accepts.
    pub bound: usize,
}

impl Default for DfsConfig {
    fn default() -> Self {
        DfsConfig {
            bound: DEFAULT_DFS_BOUND,
        }
    }
}

/// A self-orthogonal embedding `[G_a | B]` of a code.
///
/// `adapted` is a generator of the source whose first `hull_rows` rows span
/// the hull; row `i` of `appended` is the tail attached to row `i` of
/// `adapted`.
#[derive(Clone, Debug)]
pub struct EmbeddingResult {
    pub source: LinearCode,
    pub adapted: BinaryMatrix,
    pub hull_rows: usize,
    pub appended: BinaryMatrix,
    pub result: LinearCode,
    pub predicted_m: usize,
    pub strategy: Strategy,
}

/// What [`EmbeddingResult::verify`] established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub self_dual: bool,
    pub source_distance: Option<usize>,
    pub result_distance: Option<usize>,
}

/// Outcome of [`check_structure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureCertificate {
    pub self_dual: bool,
}

impl EmbeddingResult {
    /// Number of appended coordinates.
    pub fn m(&self) -> usize {
        self.appended.cols()
    }

    /// Rewrites an arbitrary embedding of `source` (source on the first `n`
    /// coordinates) over the hull-adapted generator of `source`.
    pub fn from_result(
        source: &LinearCode,
        embedded: &LinearCode,
        strategy: Strategy,
    ) -> Result<Self> {
        let n = source.n();
        if embedded.n() < n || embedded.k() != source.k() {
            return Err(Error::Structure(format!(
                "[{}, {}] cannot embed [{n}, {}]",
                embedded.n(),
                embedded.k(),
                source.k()
            )));
        }
        let m = embedded.n() - n;
        let dec = source.hull_decompose();
        let adapted = dec.generator();
        let gen = embedded.generator();
        let head = gen.select_columns(&(0..n).collect::<Vec<_>>());
        let tail = gen.select_columns(&(n..n + m).collect::<Vec<_>>());
        let mut rows = Vec::with_capacity(source.k());
        for (i, g) in adapted.row_vectors().iter().enumerate() {
            let x = head.solve_left(g).ok_or_else(|| {
                Error::Structure(format!(
                    "adapted row {i} is not a puncture of the embedding"
                ))
            })?;
            let mut t = BitVector::zeros(m);
            for j in x.iter_ones() {
                t.xor_assign(tail.row(j));
            }
            rows.push(t);
        }
        let appended = BinaryMatrix::from_rows(m, rows)?;
        let full = adapted.hstack(&appended)?;
        Ok(EmbeddingResult {
            source: source.clone(),
            hull_rows: dec.hull_rows.rows(),
            adapted,
            appended,
            result: LinearCode::from_generator(&full)?,
            predicted_m: shortest_length(source),
            strategy,
        })
    }

    /// Checks every invariant of a shortest embedding.
    ///
    /// Minimum distances are compared only when `k` is within the enumeration bound.
    pub fn verify(&self) -> Result<Certificate> {
        let n = self.source.n();
        if !self.result.is_self_orthogonal() {
            return Err(Error::Structure("result is not self-orthogonal".into()));
        }
        let back = puncture(&self.result, &(n..n + self.m()).collect::<Vec<_>>())?;
        if back != self.source {
            return Err(Error::Structure(
                "puncturing does not recover the source".into(),
            ));
        }
        if self.m() != self.predicted_m {
            return Err(Error::Structure(format!(
                "appended {} columns, shortest is {}",
                self.m(),
                self.predicted_m
            )));
        }
        let structure = check_structure(self)?;
        let (mut ds, mut dr) = (None, None);
        if self.source.k() <= DEFAULT_ENUMERATION_BOUND {
            let d = self.source.min_distance()?;
            let d1 = self.result.min_distance()?;
            if d1 < d {
                return Err(Error::Structure(format!(
                    "distance dropped from {d} to {d1}"
                )));
            }
            ds = Some(d);
            dr = Some(d1);
        }
        Ok(Certificate {
            self_dual: structure.self_dual,
            source_distance: ds,
            result_distance: dr,
        })
    }
}

/// The smallest number of columns whose addition makes `c` self-orthogonal.
pub fn shortest_length(c: &LinearCode) -> usize {
    let r = c.k() - c.hull_dim();
    if r == 0 {
        0
    } else if r % 2 == 1 || !c.is_even() {
        r
    } else {
        r + 1
    }
}

/// Deletes the coordinates in `coords`.
pub fn puncture(c: &LinearCode, coords: &[usize]) -> Result<LinearCode> {
    let n = c.n();
    let mut drop = vec![false; n];
    for &i in coords {
        if i >= n {
            return Err(Error::Parameter(format!(
                "coordinate {i} outside length {n}"
            )));
        }
        drop[i] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&i| !drop[i]).collect();
    let g = c.generator().select_columns(&keep);
    match LinearCode::from_generator(&g) {
        Err(Error::EmptyCode) => Ok(LinearCode::zero(keep.len())),
        other => other,
    }
}

/// Checks that the hull rows received zero tails and that self-duality
/// matches the length.
pub fn check_structure(e: &EmbeddingResult) -> Result<StructureCertificate> {
    for i in 0..e.hull_rows {
        if !e.appended.row(i).is_zero() {
            return Err(Error::Structure(format!(
                "hull row {i} has a nonzero appended part"
            )));
        }
    }
    let self_dual = e.result.is_self_dual();
    let expected = e.source.is_self_dual() || (!e.source.is_even() && e.source.contains_dual());
    if self_dual != expected {
        return Err(Error::Structure(format!(
            "result self-dual = {self_dual}, expected {expected}"
        )));
    }
    if self_dual && e.result.n() != 2 * e.source.k() {
        return Err(Error::Structure(
            "self-dual result of the wrong length".into(),
        ));
    }
    Ok(StructureCertificate { self_dual })
}

/// Finds `v_0..v_{r-1}` in `F_2^m` with `<v_i, v_j> = target[i][j]` for all
/// `i, j` (the diagonal fixes the weight parity). Depth first, candidates in
/// ascending order; returns the first complete assignment.
pub(crate) fn solve_gram(target: &BinaryMatrix, m: usize) -> Option<Vec<u64>> {
    assert!(m <= 64);
    let r = target.rows();
    let ones = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut chosen = Vec::with_capacity(r);
    fn go(target: &BinaryMatrix, m: usize, ones: u64, chosen: &mut Vec<u64>) -> bool {
        let i = chosen.len();
        if i == target.rows() {
            return true;
        }
        let mut cons = Vec::with_capacity(i + 1);
        cons.push((ones, target.get(i, i)));
        for (j, &v) in chosen.iter().enumerate() {
            cons.push((v, target.get(j, i)));
        }
        let Some(space) = solve_affine_words(&cons, m) else {
            return false;
        };
        for v in space.iter() {
            chosen.push(v);
            if go(target, m, ones, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(target, m, ones, &mut chosen).then_some(chosen)
}

fn words_to_matrix(rows: &[u64], m: usize) -> BinaryMatrix {
    BinaryMatrix::from_rows(
        m,
        rows.iter().map(|&w| BitVector::from_word(m, w)).collect(),
    )
    .expect("uniform length")
}

fn check_rank(c: &LinearCode, cfg: &DfsConfig) -> Result<usize> {
    let r = c.k() - c.hull_dim();
    if r > cfg.bound {
        return Err(Error::Capability {
            what: "k - l",
            value: r,
            bound: cfg.bound,
        });
    }
    Ok(r)
}

/// The unchanged code as its own embedding; `c` must be self-orthogonal.
pub fn embed_identity(c: &LinearCode) -> Result<EmbeddingResult> {
    if !c.is_self_orthogonal() {
        return Err(Error::Domain("code is not self-orthogonal".into()));
    }
    EmbeddingResult::from_result(c, c, Strategy::Identity)
}

/// Depth-first construction of an embedding with exactly `target_m` appended columns.
pub fn embed_dfs(c: &LinearCode, target_m: usize, cfg: &DfsConfig) -> Result<EmbeddingResult> {
    check_rank(c, cfg)?;
    if target_m > 64 {
        return Err(Error::Capability {
            what: "m",
            value: target_m,
            bound: 64,
        });
    }
    let dec = c.hull_decompose();
    let h = dec.hull_rows.rows();
    let target = dec.comp_rows.gram();
    let tails = solve_gram(&target, target_m).ok_or_else(|| {
        Error::Infeasible(format!(
            "no self-orthogonal embedding with {target_m} appended columns"
        ))
    })?;
    let appended = BinaryMatrix::zeros(h, target_m).vstack(&words_to_matrix(&tails, target_m))?;
    let full = dec.generator().hstack(&appended)?;
    assert!(
        full.gram().is_zero(),
        "depth-first search produced a non-orthogonal leaf"
    );
    EmbeddingResult::from_result(c, &LinearCode::from_generator(&full)?, Strategy::Dfs)
}

/// The closed-form embedding of the even-weight code `E_n`.
pub fn embed_even_canonical(c: &LinearCode) -> Result<EmbeddingResult> {
    let n = c.n();
    if n < 3 || c.k() != n - 1 || !c.is_even() {
        return Err(Error::Domain(format!(
            "[{n}, {}] code is not an even-weight code E_n with n >= 3",
            c.k()
        )));
    }
    let k = n - 1;
    let ones = BinaryMatrix::from_rows(1, vec![BitVector::ones(1); k])?;
    let g = BinaryMatrix::identity(k).hstack(&ones)?;
    let full = if n.is_multiple_of(2) {
        let d = BinaryMatrix::from_rows(
            k,
            (0..k)
                .map(|i| {
                    let mut r = BitVector::ones(k);
                    r.set(i, false);
                    r
                })
                .collect(),
        )?;
        g.hstack(&d)?
    } else {
        g.hstack(&g)?
    };
    EmbeddingResult::from_result(
        c,
        &LinearCode::from_generator(&full)?,
        Strategy::EvenCanonical,
    )
}

/// The explicit construction for odd codes with `k - l` even and positive.
/// Odd `k - l` goes to [`embed_dfs`].
pub fn embed_theorem_odd(c: &LinearCode, cfg: &DfsConfig) -> Result<EmbeddingResult> {
    let r = check_rank(c, cfg)?;
    if c.is_even() || r == 0 {
        return Err(Error::Domain(
            "needs an odd code whose k - l is positive".into(),
        ));
    }
    if r % 2 == 1 {
        return embed_dfs(c, r, cfg);
    }
    let dec = c.hull_decompose();
    let n = c.n();
    let x = dec.odd_row().expect("odd code has an odd row").clone();
    let mut rest: Vec<BitVector> = dec.even_rows().into_rows();
    // never fires: the even rows would span an even LCD code of odd dimension
    let p = rest
        .iter()
        .position(|a| x.dot_unchecked(a))
        .ok_or_else(|| Error::Structure("odd row is orthogonal to every even row".into()))?;
    let y = rest.remove(p);
    for z in rest.iter_mut() {
        if x.dot_unchecked(z) {
            z.xor_assign(&y);
        }
    }
    rest.insert(0, y);
    // y picks up the one in the first appended column
    let mut sub_rows = rest.clone();
    sub_rows[0] = sub_rows[0].concat(&BitVector::ones(1));
    for s in sub_rows.iter_mut().skip(1) {
        *s = s.concat(&BitVector::zeros(1));
    }
    let sub = BinaryMatrix::from_rows(sub_rows[0].len(), sub_rows)?;
    let tails = solve_gram(&sub.gram(), r - 1).ok_or_else(|| {
        Error::Infeasible("residual block admits no embedding of the expected length".into())
    })?;

    let mut rows = dec.hull_rows.row_vectors().to_vec();
    let mut tail_rows = vec![BitVector::zeros(r); rows.len()];
    let mut comp = vec![x];
    comp.extend(rest);
    for (i, g) in comp.into_iter().enumerate() {
        let mut t = BitVector::zeros(r);
        t.set(0, i < 2);
        if i > 0 {
            let w = tails[i - 1];
            for b in 0..r - 1 {
                t.set(b + 1, (w >> b) & 1 == 1);
            }
        }
        rows.push(g);
        tail_rows.push(t);
    }
    let g = BinaryMatrix::from_rows(n, rows)?;
    let full = g.hstack(&BinaryMatrix::from_rows(r, tail_rows)?)?;
    if !full.gram().is_zero() {
        return Err(Error::Structure(
            "odd-case construction is not self-orthogonal".into(),
        ));
    }
    EmbeddingResult::from_result(c, &LinearCode::from_generator(&full)?, Strategy::TheoremOdd)
}

/// Picks a construction by the shape of `c` and returns a shortest embedding.
pub fn embed_shortest(c: &LinearCode, cfg: &DfsConfig) -> Result<EmbeddingResult> {
    let r = c.k() - c.hull_dim();
    if r == 0 {
        embed_identity(c)
    } else if c.is_even() && c.n() >= 3 && c.k() == c.n() - 1 {
        embed_even_canonical(c)
    } else if !c.is_even() && c.contains_dual() {
        orthosearch::selfdual_embed_systematic(c)
    } else if !c.is_even() && r.is_multiple_of(2) {
        embed_theorem_odd(c, cfg)
    } else {
        embed_dfs(c, shortest_length(c), cfg)
    }
}

/// Runs one named strategy.
pub fn embed_with(c: &LinearCode, strategy: Strategy, cfg: &DfsConfig) -> Result<EmbeddingResult> {
    match strategy {
        Strategy::Identity => embed_identity(c),
        Strategy::Dfs => embed_dfs(c, shortest_length(c), cfg),
        Strategy::EvenCanonical => embed_even_canonical(c),
        Strategy::Orthobasis => orthosearch::selfdual_embed_systematic(c),
        Strategy::TheoremOdd => embed_theorem_odd(c, cfg),
    }
}
