use crate::error::{Error, Result};

/// Involutive permutation of basis indices {0..d} fixing 0; houses i ↦ i*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionPerm {
    image: Vec<usize>,
}

impl InvolutionPerm {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        if image.is_empty() {
            return Err(Error::InvalidInvolution("empty index map".into()));
        }
        if image[0] != 0 {
            return Err(Error::InvalidInvolution("must fix index 0".into()));
        }
        for (i, &j) in image.iter().enumerate() {
            if j >= image.len() {
                return Err(Error::InvalidInvolution(format!(
                    "image {j} of {i} out of range"
                )));
            }
            if image[j] != i {
                return Err(Error::InvalidInvolution(format!(
                    "not involutive at index {i}"
                )));
            }
        }
        Ok(InvolutionPerm { image })
    }

    pub fn identity(len: usize) -> Self {
        InvolutionPerm {
            image: (0..len).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.image
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .count()
    }
}
