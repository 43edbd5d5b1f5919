//! The defining ideal of Sp(2g), the fixed permutation matrices of the relation
//! construction, and random rational symplectic matrices.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, BigRat, QPoly, VarIndex};
use crate::error::SymplecticError;

/// Dense rational matrix (row-major, square).
pub type RatMatrix = Vec<Vec<BigRat>>;

fn check_g(g: usize) -> Result<(), SymplecticError> {
    if (1..=3).contains(&g) {
        Ok(())
    } else {
        Err(SymplecticError::UnsupportedG(g))
    }
}

/// The standard form `[[0, I_g], [-I_g, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    g: usize,
    matrix: Vec<Vec<i64>>,
}

impl SymplecticForm {
    pub fn new(g: usize) -> Result<Self, SymplecticError> {
        check_g(g)?;
        let n = 2 * g;
        let mut matrix = vec![vec![0i64; n]; n];
        for i in 0..g {
            matrix[i][i + g] = 1;
            matrix[i + g][i] = -1;
        }
        Ok(Self { g, matrix })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        2 * self.g
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.matrix.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }
}

/// Entries `(X^T J X - J)[i][j]` for `i < j` over the top-left `2g x 2g` block of
/// variables, in row-major order of `(i, j)`. For `g = 3` these are the 15 quadratic
/// generators of `I(Sp6)`.
pub fn sp_generators(g: usize) -> Result<Vec<QPoly>, SymplecticError> {
    let form = SymplecticForm::new(g)?;
    let n = form.dim();
    let x = |r: usize, c: usize| QPoly::var(VarIndex::at(r + 1, c + 1));
    let mut gens = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut p = QPoly::constant(rat(-form.entry(i, j)));
            for k in 0..n {
                for l in 0..n {
                    let jkl = form.entry(k, l);
                    if jkl != 0 {
                        p = p.add(&x(k, i).mul(&x(l, j)).scale(&rat(jkl)));
                    }
                }
            }
            gens.push(p);
        }
    }
    Ok(gens)
}

/// `g(X) = X11 X44 - X14 X41 + X21 X54 - X24 X51 + X31 X64 - X34 X61`.
pub fn g_polynomial() -> QPoly {
    let x = |r, c| QPoly::var(VarIndex::at(r, c));
    let mut p = QPoly::zero();
    for k in 1..=3 {
        p = p.add(&x(k, 1).mul(&x(k + 3, 4))).sub(&x(k, 4).mul(&x(k + 3, 1)));
    }
    p
}

/// The two 0/1 permutation matrices used to conjugate the block product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPair {
    pub j: [[u8; 6]; 6],
    pub j1: [[u8; 6]; 6],
}

pub fn permutation_pair() -> PermutationPair {
    PermutationPair {
        j: [
            [1, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
        ],
        j1: [
            [1, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 1],
        ],
    }
}

pub fn identity(n: usize) -> RatMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }).collect()).collect()
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = BigRat::zero();
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            s += &a[i][k] * &bk[j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &RatMatrix) -> RatMatrix {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Inverse by Gauss–Jordan elimination; `None` if singular.
pub fn inverse(a: &RatMatrix) -> Option<RatMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<BigRat>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = BigRat::one() / &m[col][col];
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Exact determinant by fraction-based elimination.
pub fn determinant(a: &RatMatrix) -> BigRat {
    let n = a.len();
    let mut m = a.clone();
    let mut det = BigRat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRat::zero();
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det *= &m[col][col];
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot_row[col];
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
    }
    det
}

/// `M^T J M == J`.
pub fn is_symplectic(m: &RatMatrix, form: &SymplecticForm) -> bool {
    let j = form.to_rational();
    mat_mul(&mat_mul(&transpose(m), &j), m) == j
}

/// Number of generator factors in a random word.
const WORD_LENGTH: usize = 6;

/// Deterministic random element of `Sp(2g, Q)`: a product of six factors drawn from
/// `[[A, 0], [0, A^-T]]`, `[[I, 0], [S, I]]` (S symmetric) and the form itself, with
/// integer entries uniform in `[-size_bound, size_bound]`.
pub fn random_symplectic(g: usize, seed: u64, size_bound: i64) -> Result<RatMatrix, SymplecticError> {
    let form = SymplecticForm::new(g)?;
    let bound = size_bound.max(1);
    let n = 2 * g;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = identity(n);
    for _ in 0..WORD_LENGTH {
        let factor = match rng.gen_range(0..3) {
            0 => loop {
                let a: RatMatrix =
                    (0..g).map(|_| (0..g).map(|_| rat(rng.gen_range(-bound..=bound))).collect()).collect();
                // singular blocks are redrawn
                if let Some(ainv) = inverse(&a) {
                    let ait = transpose(&ainv);
                    let mut f = vec![vec![BigRat::zero(); n]; n];
                    for i in 0..g {
                        for j in 0..g {
                            f[i][j] = a[i][j].clone();
                            f[i + g][j + g] = ait[i][j].clone();
                        }
                    }
                    break f;
                }
            },
            1 => {
                let mut f = identity(n);
                for i in 0..g {
                    for j in i..g {
                        let s = rat(rng.gen_range(-bound..=bound));
                        f[i + g][j] = s.clone();
                        f[j + g][i] = s;
                    }
                }
                f
            }
            _ => form.to_rational(),
        };
        m = mat_mul(&m, &factor);
    }
    Ok(m)
}

/// Embed a `2g x 2g` matrix into the top-left of a 6x6 identity, as an evaluation point.
pub fn embed6(m: &RatMatrix) -> [[BigRat; 6]; 6] {
    let mut out: [[BigRat; 6]; 6] = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { BigRat::one() } else { BigRat::zero() }));
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[i][j] = v.clone();
        }
    }
    out
}
