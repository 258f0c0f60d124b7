use crate::gf2::BinaryMatrix;

/// Counts `A_0..A_n` of codewords of each weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        WeightDistribution { counts }
    }

    pub(crate) fn of_generator(gen: &BinaryMatrix) -> Self {
        let mut counts = vec![0u64; gen.cols() + 1];
        if gen.cols() <= 64 {
            let rows: Vec<u64> = gen
                .row_vectors()
                .iter()
                .map(|r| r.to_word().unwrap())
                .collect();
            gray_single(&rows, |w| counts[w.count_ones() as usize] += 1);
        } else {
            for_each_codeword(gen, |w| {
                counts[w.iter().map(|x| x.count_ones() as usize).sum::<usize>()] += 1
            });
        }
        WeightDistribution { counts }
    }

    /// `A_w`, zero past the length.
    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .skip(1)
            .position(|&c| c > 0)
            .map(|i| i + 1)
    }

    /// `(weight, count)` pairs with nonzero count.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
    }
}

fn gray_single(rows: &[u64], mut f: impl FnMut(u64)) {
    let mut cur = 0u64;
    f(cur);
    let total: u64 = 1 << rows.len();
    for i in 1..total {
        cur ^= rows[i.trailing_zeros() as usize];
        f(cur);
    }
}

/// Visits all `2^k` codewords (zero first) in Gray-code order, one row XOR per step.
pub fn for_each_codeword(gen: &BinaryMatrix, mut f: impl FnMut(&[u64])) {
    let words = gen.row_vectors().first().map_or(0, |r| r.words().len());
    let mut cur = vec![0u64; words.max(gen.cols().div_ceil(64))];
    f(&cur);
    let total: u64 = 1 << gen.rows();
    for i in 1..total {
        let row = gen.row(i.trailing_zeros() as usize).words();
        for (c, r) in cur.iter_mut().zip(row) {
            *c ^= r;
        }
        f(&cur);
    }
}
