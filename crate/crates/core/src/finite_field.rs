//! Small finite fields `GF(q)`, `q <= 16`, by lookup table.

use crate::{Error, Result};

/// Field elements are `0..q`. For `q = p^k` an element encodes the
/// polynomial whose base-`p` digits are its coefficients.
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

/// `(p, k, low coefficients of a monic irreducible of degree k)`.
fn parameters(q: u64) -> Option<(usize, usize, &'static [usize])> {
    Some(match q {
        2 | 3 | 5 | 7 | 11 | 13 => (q as usize, 1, &[]),
        // x^2 + x + 1
        4 => (2, 2, &[1, 1]),
        // x^3 + x + 1
        8 => (2, 3, &[1, 1, 0]),
        // x^2 + 1
        9 => (3, 2, &[1, 0]),
        // x^4 + x + 1
        16 => (2, 4, &[1, 1, 0, 0]),
        _ => return None,
    })
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k, modulus) = parameters(q).ok_or(Error::UnsupportedField { q })?;
        let q = q as usize;
        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |ds: &[usize]| ds.iter().rev().fold(0, |acc, &d| acc * p + d);

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u8;

                let mut prod = vec![0usize; 2 * k];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce with x^k = -(modulus)
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, m) in modulus.iter().enumerate() {
                        let sub = c * m % p;
                        prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
                    }
                }
                mul[a * q + b] = encode(&prod[..k]) as u8;
            }
        }
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).expect("field without inverse") as u8;
        }
        Ok(FiniteField { q, add, mul, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    /// Rank of a set of vectors, by Gaussian elimination.
    pub fn rank(&self, vectors: &[Vec<u8>]) -> usize {
        let mut rows: Vec<Vec<u8>> = vectors.to_vec();
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pinv = self.inv(rows[rank][c]);
            let pivot: Vec<u8> = rows[rank].iter().map(|&x| self.mul(x, pinv)).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            rows[rank] = pivot;
            rank += 1;
        }
        rank
    }

    /// Representatives of the one-dimensional subspaces of `GF(q)^dim`: the
    /// nonzero vectors whose first nonzero coordinate is 1.
    pub fn projective_points(&self, dim: usize) -> Vec<Vec<u8>> {
        let total = self.q.pow(dim as u32);
        (1..total)
            .map(|mut x| {
                let mut v = vec![0u8; dim];
                for c in v.iter_mut().rev() {
                    *c = (x % self.q) as u8;
                    x /= self.q;
                }
                v
            })
            .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
            .collect()
    }
}
