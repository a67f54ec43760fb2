use alloc::vec::Vec;

use crate::error::{Error, Result};

/// `F₂^dim` (vectors are bitmasks) with a symmetric bilinear form and,
/// optionally, a quadratic refinement given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Space {
    dim: usize,
    rows: Vec<u32>,
    q_basis: Option<u32>,
}

impl F2Space {
    /// `rows[i]` has bit `j` set iff `B(eᵢ, eⱼ) = 1`.
    pub fn new(dim: usize, rows: Vec<u32>) -> Result<Self> {
        if dim > 31 || rows.len() != dim {
            return Err(Error::InvalidArgument(
                "form rows must match the dimension (≤ 31)",
            ));
        }
        let mask = (1u32 << dim) - 1;
        for i in 0..dim {
            if rows[i] & !mask != 0 {
                return Err(Error::InvalidArgument(
                    "form row has bits outside the space",
                ));
            }
            for j in 0..dim {
                if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                    return Err(Error::InvalidArgument("form must be symmetric"));
                }
            }
        }
        Ok(Self {
            dim,
            rows,
            q_basis: None,
        })
    }

    /// The reduction mod 2 of an integer Gram matrix; for an even Gram the
    /// quadratic refinement `q(x) = (x,x)/2 mod 2` is attached.
    pub fn from_integer_gram(gram: &[Vec<i64>]) -> Result<Self> {
        let dim = gram.len();
        let rows = gram
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &v)| acc | ((v.rem_euclid(2) as u32) << j))
            })
            .collect();
        let mut space = Self::new(dim, rows)?;
        if (0..dim).all(|i| gram[i][i] % 2 == 0) {
            let q = (0..dim).fold(0u32, |acc, i| {
                acc | (((gram[i][i] / 2).rem_euclid(2) as u32) << i)
            });
            space.q_basis = Some(q);
        }
        Ok(space)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn pair(&self, x: u32, y: u32) -> u32 {
        let mut acc = 0;
        for i in 0..self.dim {
            if (x >> i) & 1 == 1 {
                acc ^= (self.rows[i] & y).count_ones() & 1;
            }
        }
        acc
    }

    /// `B(x, x) = 0` for all `x`.
    pub fn is_alternating(&self) -> bool {
        (0..self.dim).all(|i| (self.rows[i] >> i) & 1 == 0)
    }

    /// Bitmask `r` with `B(x, y) = popcount(r & y) mod 2`.
    pub fn functional(&self, x: u32) -> u32 {
        (0..self.dim)
            .filter(|i| (x >> i) & 1 == 1)
            .fold(0, |acc, i| acc ^ self.rows[i])
    }

    /// `q(x)` extended from basis values by `q(a+b) = q(a) + q(b) + B(a,b)`.
    pub fn q(&self, x: u32) -> Option<u32> {
        let qb = self.q_basis?;
        let mut acc = (qb & x).count_ones() & 1;
        for i in 0..self.dim {
            if (x >> i) & 1 == 0 {
                continue;
            }
            for j in i + 1..self.dim {
                if (x >> j) & 1 == 1 {
                    acc ^= (self.rows[i] >> j) & 1;
                }
            }
        }
        Some(acc)
    }

    pub fn rank(&self) -> usize {
        f2_rank(&self.rows)
    }
}

/// Rank over `F₂` of a set of bitmask vectors.
pub fn f2_rank(vectors: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &v in vectors {
        let mut v = v;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rank_and_pairing() {
        assert_eq!(f2_rank(&[0b011, 0b110, 0b101]), 2);
        assert_eq!(f2_rank(&[0b001, 0b010, 0b100]), 3);
        let s = F2Space::new(2, vec![0b10, 0b01]).unwrap();
        assert!(s.is_alternating());
        assert_eq!(s.pair(0b01, 0b10), 1);
        assert_eq!(s.pair(0b11, 0b11), 0);
        assert!(F2Space::new(2, vec![0b10, 0b00]).is_err());
    }

    #[test]
    fn quadratic_refinement_of_a2() {
        let s = F2Space::from_integer_gram(&[vec![-2, 1], vec![1, -2]]).unwrap();
        // (x,x)/2 = −(a² − ab + b²): odd for every nonzero class.
        assert_eq!(s.q(0b00), Some(0));
        assert_eq!(s.q(0b01), Some(1));
        assert_eq!(s.q(0b10), Some(1));
        assert_eq!(s.q(0b11), Some(1));
    }
}
