use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{RadicalNumber, Rational};

/// Dense square matrix over the exact scalar ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    n: usize,
    entries: Vec<RadicalNumber>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat {
            n,
            entries: vec![RadicalNumber::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m.set(i, i, RadicalNumber::one());
        }
        m
    }

    /// All-ones matrix.
    pub fn ones(n: usize) -> Self {
        Mat {
            n,
            entries: vec![RadicalNumber::one(); n * n],
        }
    }

    pub fn diagonal(values: &[RadicalNumber]) -> Self {
        let mut m = Mat::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Elementary matrix with a single 1 at (row, col); zero-based indices.
    pub fn elementary(n: usize, row: usize, col: usize) -> Self {
        let mut m = Mat::zeros(n);
        m.set(row, col, RadicalNumber::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<RadicalNumber>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        Ok(Mat {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &RadicalNumber {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RadicalNumber) {
        self.entries[row * self.n + col] = value;
    }

    pub fn entries(&self) -> &[RadicalNumber] {
        &self.entries
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n);
        Mat {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n);
        Mat {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            n: self.n,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, scalar: &RadicalNumber) -> Mat {
        Mat {
            n: self.n,
            entries: self.entries.iter().map(|a| a * scalar).collect(),
        }
    }

    pub fn scale_rational(&self, scalar: &Rational) -> Mat {
        self.scale(&RadicalNumber::from_rational(scalar.clone()))
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let left = self.get(i, k);
                if left.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let right = rhs.get(k, j);
                    if right.is_zero() {
                        continue;
                    }
                    let sum = out.get(i, j) + &(left * right);
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalNumber::is_zero)
    }

    pub fn trace(&self) -> RadicalNumber {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// Euclidean pairing (X, Y) = tr(XYᵀ) = Σ entrywise products.
    pub fn frobenius(&self, rhs: &Mat) -> RadicalNumber {
        assert_eq!(self.n, rhs.n);
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Inverse of a 2×2 matrix via the adjugate.
    pub fn inverse_2x2(&self) -> Result<Mat> {
        if self.n != 2 {
            return Err(Error::DimensionMismatch("expected a 2×2 matrix".into()));
        }
        let det = &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0));
        if det.is_zero() {
            return Err(Error::RankDeficient {
                rank: 1,
                expected: 2,
            });
        }
        let inv_det = det.inverse()?;
        Mat::from_rows(vec![
            vec![self.get(1, 1) * &inv_det, -&(self.get(0, 1) * &inv_det)],
            vec![-&(self.get(1, 0) * &inv_det), self.get(0, 0) * &inv_det],
        ])
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Component sizes (m₁, …, m_c) of a block decomposition ⊕ M_{m_c}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockShape(Vec<usize>);

impl BlockShape {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidParameter(
                "block shape needs positive component sizes".into(),
            ));
        }
        Ok(BlockShape(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn components(&self) -> usize {
        self.0.len()
    }

    /// Dimension Σ m_c² of the ambient algebra.
    pub fn flat_dim(&self) -> usize {
        self.0.iter().map(|m| m * m).sum()
    }
}

/// One basis element: a tuple of square blocks, one per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMat {
    blocks: Vec<Mat>,
}

impl BlockMat {
    pub fn new(blocks: Vec<Mat>) -> Self {
        BlockMat { blocks }
    }

    pub fn identity(shape: &BlockShape) -> Self {
        BlockMat {
            blocks: shape.sizes().iter().map(|&m| Mat::identity(m)).collect(),
        }
    }

    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    pub fn block(&self, component: usize) -> &Mat {
        &self.blocks[component]
    }

    pub fn matches(&self, shape: &BlockShape) -> bool {
        self.blocks.len() == shape.components()
            && self
                .blocks
                .iter()
                .zip(shape.sizes())
                .all(|(b, &m)| b.size() == m)
    }

    pub fn mul(&self, rhs: &BlockMat) -> BlockMat {
        BlockMat {
            blocks: self
                .blocks
                .iter()
                .zip(&rhs.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &BlockMat) -> BlockMat {
        BlockMat {
            blocks: self
                .blocks
                .iter()
                .zip(&rhs.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &BlockMat) -> BlockMat {
        BlockMat {
            blocks: self
                .blocks
                .iter()
                .zip(&rhs.blocks)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, scalar: &RadicalNumber) -> BlockMat {
        BlockMat {
            blocks: self.blocks.iter().map(|b| b.scale(scalar)).collect(),
        }
    }

    /// Blockwise transpose — the involution of every basis in this crate.
    pub fn transpose(&self) -> BlockMat {
        BlockMat {
            blocks: self.blocks.iter().map(Mat::transpose).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    /// Entries in reading order across components.
    pub fn flatten(&self) -> Vec<RadicalNumber> {
        self.blocks
            .iter()
            .flat_map(|b| b.entries().iter().cloned())
            .collect()
    }
}

/// A sequence of block-matrix tuples realizing a basis inside ⊕ M_{m_c};
/// the first element is the identity tuple and the involution is blockwise
/// transpose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixBasis {
    shape: BlockShape,
    elements: Vec<BlockMat>,
}

impl MatrixBasis {
    pub fn new(shape: BlockShape, elements: Vec<BlockMat>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidParameter("empty basis".into()));
        }
        if let Some(bad) = elements.iter().position(|e| !e.matches(&shape)) {
            return Err(Error::DimensionMismatch(format!(
                "element {bad} does not match the block shape"
            )));
        }
        Ok(MatrixBasis { shape, elements })
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &BlockMat {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[BlockMat] {
        &self.elements
    }

    /// Degree map read off the first 1×1 component, when there is one and
    /// b₀ projects to 1 there.
    pub fn projection_degree_map(&self) -> Option<crate::rba::DegreeMap> {
        let component = self.shape.sizes().iter().position(|&m| m == 1)?;
        let values: Vec<RadicalNumber> = self
            .elements
            .iter()
            .map(|e| e.block(component).get(0, 0).clone())
            .collect();
        crate::rba::DegreeMap::new(values).ok()
    }
}

/// Conjugates the 2×2 block of every element of a shape-(1, 2) basis by an
/// invertible matrix, leaving the scalar component untouched.
pub fn conjugate_basis(basis: &MatrixBasis, transform: &Mat) -> Result<MatrixBasis> {
    if basis.shape().sizes() != [1, 2] {
        return Err(Error::DimensionMismatch(
            "conjugation applies to shape (1, 2) bases".into(),
        ));
    }
    let inverse = transform.inverse_2x2()?;
    let elements = basis
        .elements()
        .iter()
        .map(|e| {
            BlockMat::new(vec![
                e.block(0).clone(),
                transform.mul(e.block(1)).mul(&inverse),
            ])
        })
        .collect();
    MatrixBasis::new(basis.shape().clone(), elements)
}
