//! Generator matrices and reference values for the published constructions.
//!
//! Matrices are stored row by row as `0`/`1` strings (or hex rows for the
//! length-91..191 codes) exactly as printed, so that transcription errors show
//! up as failed checks rather than silently different codes.

use crate::codes::{parse_hex, LinearCode};
use crate::error::Result;
use crate::gf2::BinaryMatrix;

/// |O(7, 2)|.
pub const ORTHOGONAL_GROUP_7_ORDER: u64 = 1_451_520;

/// Orbits of O(7, 2) under column permutations.
pub const COSETS_7: usize = 288;

/// Nonzero entries of the weight distribution of the [16,7,4] embedding.
pub const EX2_G1_WEIGHTS: &[(usize, u64)] =
    &[(0, 1), (4, 6), (6, 32), (8, 50), (10, 32), (12, 6), (16, 1)];

/// Nonzero entries of the weight distribution of the self-dual [22,11,4] code.
pub const C22_11_4_WEIGHTS: &[(usize, u64)] = &[
    (0, 1),
    (4, 4),
    (6, 73),
    (8, 318),
    (10, 628),
    (12, 628),
    (14, 318),
    (16, 73),
    (18, 4),
    (22, 1),
];

/// Generator of the [9,5,3] code: hull rows, the odd row x, then A_0.
pub const EX1_G: &[&str] = &[
    "010011001",
    "001011010",
    "000111100",
    "100010111",
    "000001111",
];

/// Its [11,5,4] self-orthogonal embedding.
pub const EX1_G1: &[&str] = &[
    "01001100100",
    "00101101000",
    "00011110000",
    "10001011110",
    "00000111111",
];

/// Generator of the [11,7,3] code: hull rows, x, then A_0.
pub const EX2_G: &[&str] = &[
    "00011110000",
    "00000001111",
    "10000000011",
    "11000000110",
    "01100000011",
    "00110010000",
    "00011000011",
];

/// Its [16,7,4] self-orthogonal embedding.
pub const EX2_G1: &[&str] = &[
    "0001111000000000",
    "0000000111100000",
    "1000000001110000",
    "1011001001111000",
    "0110000001101111",
    "1100000011000110",
    "0111100000000101",
];

/// A self-dual [22,11,4] embedding of the Hamming [15,11,3] code.
pub const C22_11_4: &[&str] = &[
    "1010101010101010000000",
    "0110011001100110000000",
    "0001111000011110000000",
    "0000000111111110000000",
    "1000000000000111000000",
    "1100000000001100000110",
    "0110000000000110110000",
    "0011000000101110011000",
    "0001100000000110001100",
    "0000110000001101100000",
    "0000011000000110000011",
];

/// The shortened Golay [22,11,6] code as an embedding of the same Hamming code.
pub const C22_11_6: &[&str] = &[
    "1010101010101010000000",
    "0110011001100110000000",
    "0001111000011110000000",
    "0000000111111110000000",
    "1000000000000111110000",
    "1100000000001101101100",
    "0110000000000111011010",
    "0011000000101111100000",
    "0001100000000110111100",
    "0000110000001101110010",
    "0000011000000111101001",
];

/// Block A of a systematic generator [I_11 | A] of the Hamming [15,11,3] code.
pub const H4_A: &[&str] = &[
    "1100", "0110", "0011", "1101", "1010", "0101", "1110", "0111", "1111", "1011", "1001",
];

/// A generator of the dual of the code spanned by the columns of H4_A.
pub const H4_CA_DUAL: &[&str] = &[
    "10000001010",
    "01000000101",
    "00100001110",
    "00010000111",
    "00001001111",
    "00000101011",
    "00000011001",
];

/// Orthonormal basis of that dual code (rows are the columns of B).
pub const H4_BT: &[&str] = &[
    "10000001010",
    "01000000101",
    "01100001011",
    "10010001101",
    "11111001001",
    "11000010110",
    "11100110011",
];

/// Orthogonal matrix with [I | A | B R] generating a [22,11,6] code.
pub const H4_R: &[&str] = &[
    "0110010", "0100110", "1110101", "0001000", "0100011", "1010111", "1100010",
];

/// Block A_26 of a generator [I_26 | A_26] of a self-dual [52,26,8] code.
pub const A26: &[&str] = &[
    "10100001010000111000100010",
    "01010111100010000100001110",
    "00101000111001001100100000",
    "10110101101000001001001100",
    "01011010010000110011011110",
    "10001101110000110101010110",
    "11100110110100100111011001",
    "01110101111010011011100001",
    "00111100011111010101011010",
    "10111101000100110001000010",
    "11111110011110101011110101",
    "11011100000100000100011011",
    "11001011001111011110100010",
    "11000110101001100101010101",
    "01100000110101100111100101",
    "00110100111110000101100011",
    "00011011000111000011010111",
    "10101011010000101100110011",
    "11110001010010111101011111",
    "01111011101010100010000110",
    "10011111111011111011001101",
    "11101100100110100000110000",
    "11010000011100001110011110",
    "01101001001111111111000111",
    "10010100000111000010110101",
    "01001110111000110110100100",
];

const HEX_91: &[&str] = &[
    "9178c93aad6db724a17528e",
    "524e3aa98bd1d2a3d2e97c8",
    "302ae870277bdc487aa05b4",
    "0b12221ce1c887cef9dbcee",
    "070e41fc1ff701c1f1073f0",
    "00fe7803ff87ffc03e1f02c",
    "0001f800007fffffc01ffcc",
    "000007ffffffffffffe0006",
];

const HEX_98: &[&str] = &[
    "80c090d0a8f8e4ecdcbcdafb8",
    "40604868547c72766e5e6d7d0",
    "203024342a3e393b372fb6bf8",
    "1018121a151f9c9d9b975b5f0",
    "080c090d8a8f4ececdcbadae4",
    "0406848645c72767e6e5d6d70",
    "02034243a2e393b373f26bea4",
    "018121a151f1c9d9b979b5f50",
];

const HEX_114: &[&str] = &[
    "80e090b0a898f8a4d4f4ecdcbcff8",
    "40704858544c7c526a7a766e5e7f0",
    "2038242c2a263e29353d3b372fbe4",
    "101c121615131f949a9e9d9b97df0",
    "080e090b8a898f4a4d4fcecdcbee4",
    "0407848545c4c725a6a767e6e5f70",
    "028342c2a262e39253d3b373f2fa4",
    "01c121615131f149a9e9d9b979fd0",
];

const HEX_191: &[&str] = &[
    "80b651765a7a08cb754997e9700e853acce5f301d7b8d1f0",
    "412edb24a676e85bece929278b70dcfcce124854b11e71bc",
    "210b43ef6f85d10d00d633f55764b8bb8959f8a1faee0188",
    "1036f4a81c1885b45aafcb87cfc8f1e8db0d3f83e1f048c6",
    "099cc9b65fffbfb4aadb2a19329df8981180900c47bb2ae4",
    "05215e997ff8240c8ef265c31041575498e35bba0776d7ec",
    "028caea7f532f75d2d15c371119b4272a337bf84ed22c538",
    "006106140007bffe9bd3bdef901800896a5abedbffdfd4e0",
];

/// A hex-encoded generator matrix of length `n`.
#[derive(Clone, Copy, Debug)]
pub struct HexCode {
    pub n: usize,
    pub d: usize,
    pub rows: &'static [&'static str],
}

/// The dimension-8 self-orthogonal codes given in hex.
pub const HEX_CODES: &[HexCode] = &[
    HexCode {
        n: 91,
        d: 42,
        rows: HEX_91,
    },
    HexCode {
        n: 98,
        d: 46,
        rows: HEX_98,
    },
    HexCode {
        n: 114,
        d: 54,
        rows: HEX_114,
    },
    HexCode {
        n: 191,
        d: 94,
        rows: HEX_191,
    },
];

/// `[I_k | A]` for a `k x r` block `A`.
pub fn systematic(block: &BinaryMatrix) -> BinaryMatrix {
    BinaryMatrix::identity(block.rows())
        .hstack(block)
        .expect("same row count")
}

fn matrix(rows: &[&str]) -> BinaryMatrix {
    BinaryMatrix::from_strs(rows).expect("fixture rows are well formed")
}

/// The block `B` (11 x 7): transpose of [`H4_BT`].
pub fn h4_b() -> BinaryMatrix {
    matrix(H4_BT).transpose()
}

/// `[I_11 | A | B]`, the self-dual [22,11,4] embedding.
pub fn h4_gb() -> BinaryMatrix {
    systematic(&matrix(H4_A)).hstack(&h4_b()).unwrap()
}

/// `[I_11 | A | B R]`, the self-dual [22,11,6] embedding.
pub fn h4_gbr() -> BinaryMatrix {
    let br = h4_b().mul(&matrix(H4_R)).unwrap();
    systematic(&matrix(H4_A)).hstack(&br).unwrap()
}

/// One published code together with the properties it must have.
#[derive(Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub build: fn() -> Result<LinearCode>,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub hull: usize,
    pub self_orthogonal: bool,
    pub weights: Option<&'static [(usize, u64)]>,
}

fn rows_code(rows: &[&str]) -> Result<LinearCode> {
    LinearCode::from_generator(&matrix(rows))
}

/// Every fixture, in a fixed order.
#[rustfmt::skip]
pub fn fixture_set() -> Vec<Fixture> {
    let mut v = vec![
        Fixture {
            name: "ex1-source-9-5-3",
            build: || rows_code(EX1_G),
            n: 9, k: 5, d: 3, hull: 3, self_orthogonal: false, weights: None,
        },
        Fixture {
            name: "ex1-embedding-11-5-4",
            build: || rows_code(EX1_G1),
            n: 11, k: 5, d: 4, hull: 5, self_orthogonal: true, weights: None,
        },
        Fixture {
            name: "ex2-source-11-7-3",
            build: || rows_code(EX2_G),
            n: 11, k: 7, d: 3, hull: 2, self_orthogonal: false, weights: None,
        },
        Fixture {
            name: "ex2-embedding-16-7-4",
            build: || rows_code(EX2_G1),
            n: 16, k: 7, d: 4, hull: 7, self_orthogonal: true, weights: Some(EX2_G1_WEIGHTS),
        },
        Fixture {
            name: "hamming-15-11-3-systematic",
            build: || LinearCode::from_generator(&systematic(&matrix(H4_A))),
            n: 15, k: 11, d: 3, hull: 4, self_orthogonal: false, weights: None,
        },
        Fixture {
            name: "c-22-11-4",
            build: || rows_code(C22_11_4),
            n: 22, k: 11, d: 4, hull: 11, self_orthogonal: true, weights: Some(C22_11_4_WEIGHTS),
        },
        Fixture {
            name: "shortened-golay-22-11-6",
            build: || rows_code(C22_11_6),
            n: 22, k: 11, d: 6, hull: 11, self_orthogonal: true, weights: None,
        },
        Fixture {
            name: "orthobasis-22-11-4",
            build: || LinearCode::from_generator(&h4_gb()),
            n: 22, k: 11, d: 4, hull: 11, self_orthogonal: true, weights: Some(C22_11_4_WEIGHTS),
        },
        Fixture {
            name: "orthobasis-rotated-22-11-6",
            build: || LinearCode::from_generator(&h4_gbr()),
            n: 22, k: 11, d: 6, hull: 11, self_orthogonal: true, weights: None,
        },
        Fixture {
            name: "self-dual-52-26-8",
            build: || LinearCode::from_generator(&systematic(&matrix(A26))),
            n: 52, k: 26, d: 8, hull: 26, self_orthogonal: true, weights: None,
        },
    ];
    let hex: [fn() -> Result<LinearCode>; 4] = [
        || parse_hex(HEX_CODES[0].rows, HEX_CODES[0].n),
        || parse_hex(HEX_CODES[1].rows, HEX_CODES[1].n),
        || parse_hex(HEX_CODES[2].rows, HEX_CODES[2].n),
        || parse_hex(HEX_CODES[3].rows, HEX_CODES[3].n),
    ];
    const HEX_NAMES: [&str; 4] = ["so-91-8-42", "so-98-8-46", "so-114-8-54", "so-191-8-94"];
    for ((h, build), name) in HEX_CODES.iter().zip(hex).zip(HEX_NAMES) {
        v.push(Fixture {
            name,
            build,
            n: h.n, k: 8, d: h.d, hull: 8, self_orthogonal: true, weights: None,
        });
    }
    v
}
