use serde::Serialize;

use crate::error::Result;
use crate::tree::CensusTable;

/// Both sides of
/// `N(g+2) = N(g+1) - N(g) + 𝒮(g+1) + 1 + Σ_{S ∈ 𝒩_g} C(h(S) - 1, 2)`,
/// and the corollary `N(g+2) ≥ N(g+1) - N(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct YeCheck {
    pub g: u32,
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
    pub corollary: bool,
}

pub fn ye_identity(g: u32, census: &CensusTable) -> Result<YeCheck> {
    census.require(g + 2)?;
    let n = |x: u32| i128::from(census.n(x));
    let lhs = n(g + 2);
    let rhs = n(g + 1) - n(g) + i128::from(census.strong(g + 1)) + 1 + i128::from(census.ye_correction(g));
    Ok(YeCheck { g, lhs, rhs, holds: lhs == rhs, corollary: lhs >= n(g + 1) - n(g) })
}
