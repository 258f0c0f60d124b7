//! Exhaustive enumeration of self-orthogonal embeddings up to permutation
//! equivalence, and the equivalence test it relies on.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;

use crate::codes::{for_each_codeword, LinearCode};
use crate::embed::{shortest_length, DEFAULT_DFS_BOUND};
use crate::error::{Error, Result};
use crate::gf2::{solve_affine_words, BinaryMatrix, BitVector};

/// Backtracking nodes allowed before an equivalence test gives up.
pub const DEFAULT_EQUIVALENCE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Columns to add; `None` means the shortest possible.
    pub m: Option<usize>,
    /// Restrict the first non-hull row's tail to `1..10..0` patterns.
    pub normalize_first_row: bool,
    /// Stop after this many distinct leaves.
    pub max_solutions: Option<usize>,
    /// Depth at which the tree is cut into independent work items.
    pub thread_partition_depth: usize,
    /// Worker threads; 1 runs everything on the calling thread.
    pub threads: usize,
    /// Largest `k - l` accepted.
    pub bound: usize,
    pub equivalence_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            m: None,
            normalize_first_row: true,
            max_solutions: None,
            thread_partition_depth: 0,
            threads: 1,
            bound: DEFAULT_DFS_BOUND,
            equivalence_budget: DEFAULT_EQUIVALENCE_BUDGET,
        }
    }
}

/// Permutation-invariant summary of a code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub n: usize,
    pub k: usize,
    pub weights: Vec<u64>,
    /// Per coordinate, how many words of each of the smallest nonzero weights
    /// cover it; sorted.
    pub coordinates: Vec<Vec<u64>>,
}

const SIGNATURE_WEIGHTS: usize = 3;

fn popcount(w: &[u64]) -> usize {
    w.iter().map(|x| x.count_ones() as usize).sum()
}

fn for_each_set_bit(w: &[u64], mut f: impl FnMut(usize)) {
    for (i, &x) in w.iter().enumerate() {
        let mut x = x;
        while x != 0 {
            f(i * 64 + x.trailing_zeros() as usize);
            x &= x - 1;
        }
    }
}

pub fn fingerprint(c: &LinearCode) -> Result<Fingerprint> {
    let n = c.n();
    let wd = c.weight_distribution()?;
    let sig: Vec<usize> = wd
        .nonzero()
        .map(|(w, _)| w)
        .filter(|&w| w > 0)
        .take(SIGNATURE_WEIGHTS)
        .collect();
    let mut slot = vec![usize::MAX; n + 1];
    for (i, &w) in sig.iter().enumerate() {
        slot[w] = i;
    }
    let mut counts = vec![vec![0u64; sig.len()]; n];
    for_each_codeword(c.generator(), |w| {
        let s = slot[popcount(w)];
        if s != usize::MAX {
            for_each_set_bit(w, |p| counts[p][s] += 1);
        }
    });
    counts.sort();
    Ok(Fingerprint {
        n,
        k: c.k(),
        weights: wd.counts().to_vec(),
        coordinates: counts,
    })
}

/// Result of an equivalence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// `perm` with `c1.permuted(perm) == c2`.
    Equivalent(Vec<usize>),
    NotEquivalent,
    /// The backtracking budget ran out.
    Undecided,
}

/// Words of the smallest weights, used as blocks of an incidence structure.
struct Blocks {
    n: usize,
    blocks: Vec<(usize, Vec<usize>)>,
    point_blocks: Vec<Vec<usize>>,
}

const BLOCK_LIMIT: u64 = 600;

fn block_weights(c: &LinearCode) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut total = 0;
    for (w, a) in c.weight_distribution()?.nonzero() {
        if w == 0 {
            continue;
        }
        if !out.is_empty() && total + a > BLOCK_LIMIT {
            break;
        }
        total += a;
        out.push(w);
    }
    Ok(out)
}

impl Blocks {
    fn of(c: &LinearCode, weights: &[usize]) -> Self {
        let n = c.n();
        let mut take = vec![false; n + 1];
        for &w in weights {
            take[w] = true;
        }
        let mut blocks = Vec::new();
        for_each_codeword(c.generator(), |w| {
            let wt = popcount(w);
            if take[wt] {
                let mut pts = Vec::with_capacity(wt);
                for_each_set_bit(w, |p| pts.push(p));
                blocks.push((wt, pts));
            }
        });
        let mut point_blocks = vec![Vec::new(); n];
        for (b, (_, pts)) in blocks.iter().enumerate() {
            for &p in pts {
                point_blocks[p].push(b);
            }
        }
        Blocks {
            n,
            blocks,
            point_blocks,
        }
    }

    /// Equitable refinement of `colors`; identical inputs up to relabeling give
    /// identical outputs up to the same relabeling.
    fn refine(&self, colors: &mut Vec<u64>) {
        let mut classes = distinct(colors);
        loop {
            let block_colors: Vec<u64> = self
                .blocks
                .iter()
                .map(|(w, pts)| {
                    let mut cs: Vec<u64> = pts.iter().map(|&p| colors[p]).collect();
                    cs.sort_unstable();
                    hash(&(w, cs))
                })
                .collect();
            let next: Vec<u64> = (0..self.n)
                .map(|p| {
                    let mut bs: Vec<u64> = self.point_blocks[p]
                        .iter()
                        .map(|&b| block_colors[b])
                        .collect();
                    bs.sort_unstable();
                    hash(&(colors[p], bs))
                })
                .collect();
            let c = distinct(&next);
            *colors = next;
            if c == classes {
                return;
            }
            classes = c;
        }
    }
}

fn hash<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

fn distinct(colors: &[u64]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn sorted(colors: &[u64]) -> Vec<u64> {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v
}

struct Matcher<'a> {
    c1: &'a LinearCode,
    c2: &'a LinearCode,
    b1: Blocks,
    b2: Blocks,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found(Vec<usize>),
    Fail,
    OutOfBudget,
}

impl Matcher<'_> {
    fn search(&mut self, mut x: Vec<u64>, mut y: Vec<u64>, depth: u64) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        self.b1.refine(&mut x);
        self.b2.refine(&mut y);
        if sorted(&x) != sorted(&y) {
            return Step::Fail;
        }
        let n = x.len();
        // smallest nontrivial cell, ties broken by color value
        let mut cells: std::collections::BTreeMap<u64, Vec<usize>> = Default::default();
        for (p, &c) in x.iter().enumerate() {
            cells.entry(c).or_default().push(p);
        }
        let target = cells
            .iter()
            .filter(|(_, ps)| ps.len() > 1)
            .min_by_key(|(c, ps)| (ps.len(), **c))
            .map(|(c, ps)| (*c, ps[0]));
        let Some((color, p)) = target else {
            let mut perm = vec![0; n];
            for (q, &c) in y.iter().enumerate() {
                perm[cells[&c][0]] = q;
            }
            return if self.c1.permuted(&perm) == *self.c2 {
                Step::Found(perm)
            } else {
                Step::Fail
            };
        };
        let fresh = hash(&(color, depth, "individualized"));
        for q in (0..n).filter(|&q| y[q] == color) {
            let mut x2 = x.clone();
            let mut y2 = y.clone();
            x2[p] = fresh;
            y2[q] = fresh;
            match self.search(x2, y2, depth + 1) {
                Step::Fail => continue,
                other => return other,
            }
        }
        Step::Fail
    }
}

/// Decides whether a column permutation carries `c1` onto `c2`.
pub fn are_equivalent(c1: &LinearCode, c2: &LinearCode) -> Result<Equivalence> {
    are_equivalent_with_budget(c1, c2, DEFAULT_EQUIVALENCE_BUDGET)
}

pub fn are_equivalent_with_budget(
    c1: &LinearCode,
    c2: &LinearCode,
    budget: u64,
) -> Result<Equivalence> {
    if c1.params() != c2.params() {
        return Ok(Equivalence::NotEquivalent);
    }
    if c1 == c2 {
        return Ok(Equivalence::Equivalent((0..c1.n()).collect()));
    }
    if c1.k() == 0 {
        return Ok(Equivalence::Equivalent((0..c1.n()).collect()));
    }
    if fingerprint(c1)? != fingerprint(c2)? {
        return Ok(Equivalence::NotEquivalent);
    }
    match_codes(c1, c2, budget)
}

/// Backtracking stage for codes already known to share a fingerprint.
fn match_codes(c1: &LinearCode, c2: &LinearCode, budget: u64) -> Result<Equivalence> {
    if c1 == c2 {
        return Ok(Equivalence::Equivalent((0..c1.n()).collect()));
    }
    let weights = block_weights(c1)?;
    let mut m = Matcher {
        c1,
        c2,
        b1: Blocks::of(c1, &weights),
        b2: Blocks::of(c2, &weights),
        nodes: 0,
        budget,
    };
    let n = c1.n();
    Ok(match m.search(vec![0; n], vec![0; n], 0) {
        Step::Found(p) => Equivalence::Equivalent(p),
        Step::Fail => Equivalence::NotEquivalent,
        Step::OutOfBudget => Equivalence::Undecided,
    })
}

/// One stored class.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub code: LinearCode,
    pub fingerprint: Fingerprint,
}

/// Outcome of [`EquivalenceClassSet::insert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inserted {
    New(usize),
    Existing(usize),
}

impl Inserted {
    pub fn is_new(self) -> bool {
        matches!(self, Inserted::New(_))
    }

    pub fn index(self) -> usize {
        match self {
            Inserted::New(i) | Inserted::Existing(i) => i,
        }
    }
}

/// Pairwise inequivalent codes, each compared only with stored codes of equal fingerprint.
#[derive(Clone, Debug)]
pub struct EquivalenceClassSet {
    entries: Vec<ClassEntry>,
    budget: u64,
    undecided: usize,
}

impl EquivalenceClassSet {
    pub fn new(budget: u64) -> Self {
        EquivalenceClassSet {
            entries: Vec::new(),
            budget,
            undecided: 0,
        }
    }

    pub fn insert(&mut self, code: LinearCode) -> Result<Inserted> {
        let fp = fingerprint(&code)?;
        self.insert_with(code, fp)
    }

    fn insert_with(&mut self, code: LinearCode, fp: Fingerprint) -> Result<Inserted> {
        for (i, e) in self.entries.iter().enumerate() {
            if e.fingerprint != fp {
                continue;
            }
            match match_codes(&e.code, &code, self.budget)? {
                Equivalence::Equivalent(_) => return Ok(Inserted::Existing(i)),
                Equivalence::NotEquivalent => {}
                Equivalence::Undecided => self.undecided += 1,
            }
        }
        self.entries.push(ClassEntry {
            code,
            fingerprint: fp,
        });
        Ok(Inserted::New(self.entries.len() - 1))
    }

    pub fn entries(&self) -> &[ClassEntry] {
        &self.entries
    }

    pub fn representatives(&self) -> impl Iterator<Item = &LinearCode> {
        self.entries.iter().map(|e| &e.code)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Comparisons that ran out of budget; each left the codes in separate classes.
    pub fn undecided(&self) -> usize {
        self.undecided
    }
}

/// All classes found by [`search_all`], with the raw leaf count.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub classes: EquivalenceClassSet,
    pub m: usize,
    /// Distinct appended blocks up to column order.
    pub distinct_leaves: usize,
}

struct Tree<'a> {
    target: &'a BinaryMatrix,
    m: usize,
    ones: u64,
    normalize: bool,
}

impl Tree<'_> {
    fn candidates(&self, chosen: &[u64]) -> Vec<u64> {
        let i = chosen.len();
        let parity = self.target.get(i, i);
        if i == 0 && self.normalize {
            return (0..=self.m)
                .filter(|w| (w % 2 == 1) == parity)
                .map(|w| if w == 64 { u64::MAX } else { (1u64 << w) - 1 })
                .collect();
        }
        let mut cons = vec![(self.ones, parity)];
        for (j, &v) in chosen.iter().enumerate() {
            cons.push((v, self.target.get(j, i)));
        }
        solve_affine_words(&cons, self.m).map_or_else(Vec::new, |s| s.iter().collect())
    }

    fn prefixes(&self, depth: usize) -> Vec<Vec<u64>> {
        let mut level = vec![Vec::new()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for p in level {
                for v in self.candidates(&p) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
            level = next;
        }
        level
    }

    fn leaves(
        &self,
        prefix: Vec<u64>,
        out: &mut Vec<(Vec<u64>, Vec<u64>)>,
        seen: &mut HashSet<Vec<u64>>,
    ) {
        let mut chosen = prefix;
        self.walk(&mut chosen, out, seen);
    }

    fn walk(
        &self,
        chosen: &mut Vec<u64>,
        out: &mut Vec<(Vec<u64>, Vec<u64>)>,
        seen: &mut HashSet<Vec<u64>>,
    ) {
        if chosen.len() == self.target.rows() {
            let key = column_key(chosen, self.m);
            if seen.insert(key.clone()) {
                out.push((key, chosen.clone()));
            }
            return;
        }
        for v in self.candidates(chosen) {
            chosen.push(v);
            self.walk(chosen, out, seen);
            chosen.pop();
        }
    }
}

/// Columns of the tail block (row `i` is bit `i`), sorted.
fn column_key(rows: &[u64], m: usize) -> Vec<u64> {
    let mut cols: Vec<u64> = (0..m)
        .map(|t| {
            rows.iter()
                .enumerate()
                .fold(0u64, |acc, (i, &v)| acc | (((v >> t) & 1) << i))
        })
        .collect();
    cols.sort_unstable();
    cols
}

/// Every self-orthogonal code `[G_a | B]` with `m` appended columns, up to equivalence.
///
/// `G_a` is the hull-adapted generator; hull rows get zero tails and each
/// other row's tail is constrained by the inner products of the rows above
/// it. Leaves that differ only by the order of appended columns are merged
/// before the equivalence test runs.
pub fn search_all(c: &LinearCode, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let dec = c.hull_decompose();
    let adapted = dec.generator();
    let h = dec.hull_rows.rows();
    let r = dec.comp_rows.rows();
    if r > cfg.bound.min(64) {
        return Err(Error::Capability {
            what: "k - l",
            value: r,
            bound: cfg.bound.min(64),
        });
    }
    let m = cfg.m.unwrap_or_else(|| shortest_length(c));
    if m > 64 {
        return Err(Error::Capability {
            what: "m",
            value: m,
            bound: 64,
        });
    }
    let target = dec.comp_rows.gram();
    let tree = Tree {
        target: &target,
        m,
        ones: if m == 64 { u64::MAX } else { (1u64 << m) - 1 },
        normalize: cfg.normalize_first_row && r > 0,
    };
    let depth = cfg.thread_partition_depth.min(r.saturating_sub(1));
    let run = || -> Vec<Vec<(Vec<u64>, Vec<u64>)>> {
        tree.prefixes(depth)
            .into_par_iter()
            .map(|p| {
                let mut out = Vec::new();
                tree.leaves(p, &mut out, &mut HashSet::new());
                out
            })
            .collect()
    };
    let parts = if cfg.threads <= 1 {
        tree.prefixes(depth)
            .into_iter()
            .map(|p| {
                let mut out = Vec::new();
                tree.leaves(p, &mut out, &mut HashSet::new());
                out
            })
            .collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?
            .install(run)
    };

    let mut seen = HashSet::new();
    let mut leaves = Vec::new();
    'merge: for part in parts {
        for (key, rows) in part {
            if cfg.max_solutions.is_some_and(|cap| leaves.len() >= cap) {
                break 'merge;
            }
            if seen.insert(key) {
                leaves.push(rows);
            }
        }
    }

    let codes: Vec<(LinearCode, Fingerprint)> = leaves
        .par_iter()
        .map(|rows| {
            let mut tail: Vec<BitVector> = vec![BitVector::zeros(m); h];
            tail.extend(rows.iter().map(|&w| BitVector::from_word(m, w)));
            let full = adapted.hstack(&BinaryMatrix::from_rows(m, tail)?)?;
            assert!(full.gram().is_zero(), "search leaf is not self-orthogonal");
            let code = LinearCode::from_generator(&full)?;
            let fp = fingerprint(&code)?;
            Ok((code, fp))
        })
        .collect::<Result<_>>()?;
    let mut order: Vec<usize> = (0..codes.len()).collect();
    order.sort_by(|&a, &b| codes[a].1.cmp(&codes[b].1).then(a.cmp(&b)));

    let mut classes = EquivalenceClassSet::new(cfg.equivalence_budget);
    let mut codes: Vec<Option<(LinearCode, Fingerprint)>> = codes.into_iter().map(Some).collect();
    for i in order {
        let (code, fp) = codes[i].take().expect("each leaf visited once");
        classes.insert_with(code, fp)?;
    }
    Ok(SearchOutcome {
        classes,
        m,
        distinct_leaves: leaves.len(),
    })
}
