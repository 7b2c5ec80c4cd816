use crate::error::{Error, Result};
use crate::rba::involution::InvolutionPerm;
use crate::rba::tensor::StructureTensor;

/// Abstract presentation of an algebra with distinguished basis: structure
/// tensor plus the star permutation on indices. Claims nothing by itself;
/// run the verifier to check the reality-based-algebra axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbaPresentation {
    pub tensor: StructureTensor,
    pub star: InvolutionPerm,
}

impl RbaPresentation {
    pub fn new(tensor: StructureTensor, star: InvolutionPerm) -> Result<Self> {
        if star.len() != tensor.size() {
            return Err(Error::DimensionMismatch(format!(
                "tensor on {} elements, star on {}",
                tensor.size(),
                star.len()
            )));
        }
        Ok(RbaPresentation { tensor, star })
    }

    /// Number of basis elements d + 1.
    pub fn size(&self) -> usize {
        self.tensor.size()
    }

    pub fn d(&self) -> usize {
        self.tensor.d()
    }

    /// The presentation of ℂ itself: one basis element, λ_000 = 1.
    pub fn trivial() -> Self {
        RbaPresentation {
            tensor: StructureTensor::with_identity(0),
            star: InvolutionPerm::identity(1),
        }
    }

    /// Group algebra of the cyclic group of order 2 with the identity
    /// involution; the smallest nontrivial table algebra.
    pub fn c2_group_algebra() -> Self {
        let mut tensor = StructureTensor::with_identity(1);
        tensor.set(1, 1, 0, crate::exact::RadicalNumber::one());
        RbaPresentation {
            tensor,
            star: InvolutionPerm::identity(2),
        }
    }
}
