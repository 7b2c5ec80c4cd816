use num_bigint::BigUint;
use num_traits::One;

use crate::exact::RadicalNumber;

/// The (d+1)³ array of structure constants λ_ijk of a basis b_0..b_d,
/// defined by b_i b_j = Σ_k λ_ijk b_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTensor {
    d: usize,
    lambda: Vec<RadicalNumber>,
}

impl StructureTensor {
    /// Zero tensor on d+1 basis elements.
    pub fn zeros(d: usize) -> Self {
        let size = d + 1;
        StructureTensor {
            d,
            lambda: vec![RadicalNumber::zero(); size * size * size],
        }
    }

    /// Zero tensor with the identity rows of b_0 filled in:
    /// λ_0jk = λ_j0k = [j = k].
    pub fn with_identity(d: usize) -> Self {
        let mut tensor = Self::zeros(d);
        for j in 0..=d {
            tensor.set(0, j, j, RadicalNumber::one());
            if j != 0 {
                tensor.set(j, 0, j, RadicalNumber::one());
            }
        }
        tensor
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of basis elements, d + 1.
    pub fn size(&self) -> usize {
        self.d + 1
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.size();
        (i * n + j) * n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &RadicalNumber {
        &self.lambda[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: RadicalNumber) {
        let idx = self.index(i, j, k);
        self.lambda[idx] = value;
    }

    /// The row λ_ij· as a slice over k.
    pub fn row(&self, i: usize, j: usize) -> &[RadicalNumber] {
        let start = self.index(i, j, 0);
        &self.lambda[start..start + self.size()]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &RadicalNumber)> {
        let n = self.size();
        self.lambda
            .iter()
            .enumerate()
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &RadicalNumber)> {
        self.entries().filter(|(_, _, _, v)| !v.is_zero())
    }

    /// Product of two coordinate vectors in the algebra presented by this
    /// tensor.
    pub fn multiply(&self, x: &[RadicalNumber], y: &[RadicalNumber]) -> Vec<RadicalNumber> {
        let n = self.size();
        assert_eq!(x.len(), n, "left coordinate length");
        assert_eq!(y.len(), n, "right coordinate length");
        let mut out = vec![RadicalNumber::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let scale = xi * yj;
                for (k, lambda) in self.row(i, j).iter().enumerate() {
                    if !lambda.is_zero() {
                        out[k] = &out[k] + &(&scale * lambda);
                    }
                }
            }
        }
        out
    }

    /// True when every entry lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.lambda.iter().all(RadicalNumber::is_rational)
    }

    /// True when every entry lies in ℤ.
    pub fn is_integral(&self) -> bool {
        self.lambda.iter().all(RadicalNumber::is_integer)
    }

    /// True when every entry is ≥ 0 (exact signs).
    pub fn is_nonnegative(&self) -> bool {
        self.lambda.iter().all(|v| v.sign() >= 0)
    }

    /// Largest coefficient denominator across all entries.
    pub fn max_denominator(&self) -> BigUint {
        self.lambda
            .iter()
            .map(RadicalNumber::max_denominator)
            .max()
            .unwrap_or_else(BigUint::one)
    }

    /// Sorted radicand values appearing anywhere in the tensor (1 included
    /// whenever a rational entry is present).
    pub fn radicand_values(&self) -> Vec<BigUint> {
        let mut values: Vec<BigUint> = self
            .lambda
            .iter()
            .flat_map(RadicalNumber::radicand_values)
            .collect();
        values.sort();
        values.dedup();
        values
    }
}
