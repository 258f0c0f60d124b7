use super::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BitVector};

// Columns are the nonzero vectors of F_2^r in ascending order; column j has row i = bit i of j+1.
fn hamming_parity_check(r: usize) -> BinaryMatrix {
    let n = (1usize << r) - 1;
    let mut h = BinaryMatrix::zeros(r, n);
    for j in 0..n {
        let v = j + 1;
        for i in 0..r {
            if (v >> i) & 1 == 1 {
                h.set(i, j, true);
            }
        }
    }
    h
}

fn check_r(r: usize) -> Result<()> {
    if !(2..=16).contains(&r) {
        return Err(Error::Parameter(format!("r must be in 2..=16, got {r}")));
    }
    Ok(())
}

/// The `[2^r - 1, 2^r - 1 - r, 3]` Hamming code.
pub fn hamming(r: usize) -> Result<LinearCode> {
    check_r(r)?;
    Ok(LinearCode::from_basis(
        hamming_parity_check(r).nullspace_basis(),
    ))
}

/// The `[2^r - 1, r, 2^(r-1)]` simplex code, the dual of [`hamming`].
pub fn simplex(r: usize) -> Result<LinearCode> {
    check_r(r)?;
    Ok(LinearCode::from_basis(hamming_parity_check(r)))
}

/// The even-weight code `E_n`, generated by `[I_{n-1} | 1]`.
pub fn even_code(n: usize) -> Result<LinearCode> {
    if n < 2 {
        return Err(Error::Parameter(format!("even code needs n >= 2, got {n}")));
    }
    let mut g = BinaryMatrix::zeros(n - 1, n);
    for i in 0..n - 1 {
        g.set(i, i, true);
        g.set(i, n - 1, true);
    }
    Ok(LinearCode::from_basis(g))
}

/// Reed–Muller code `RM(r, m)`: evaluations of the monomials of degree at most `r`
/// on the points of F_2^m.
///
/// Point `j` is the binary expansion of `j` (variable `i` = bit `i`). Monomials are
/// variable subsets taken in ascending order of their bit masks.
pub fn reed_muller(r: usize, m: usize) -> Result<LinearCode> {
    if m == 0 || m > 16 || r > m {
        return Err(Error::Parameter(format!(
            "Reed-Muller needs 0 <= r <= m and 1 <= m <= 16, got r={r} m={m}"
        )));
    }
    let n = 1usize << m;
    let rows: Vec<BitVector> = (0..n)
        .filter(|mask: &usize| mask.count_ones() as usize <= r)
        .map(|mask| {
            let mut row = BitVector::zeros(n);
            for point in 0..n {
                if point & mask == mask {
                    row.set(point, true);
                }
            }
            row
        })
        .collect();
    Ok(LinearCode::from_basis(
        BinaryMatrix::from_rows(n, rows).expect("uniform length"),
    ))
}
