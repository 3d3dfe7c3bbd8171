//! The dimension identity `dim g_{-1} + dim g′_{-1} = dim W₀ − dim Ker T ·
//! dim (V′)^{γ′,1}_0`, computed entirely from matrices.

use serde::{Deserialize, Serialize};

use super::descent::construct_descent_element;
use super::identify::ad_grading;
use super::realize::realize_triple;
use crate::error::{Error, Result};
use crate::theta::{self, DescentResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub g_minus1: usize,
    pub gp_minus1: usize,
    pub w0: usize,
    /// D-dimension of `Ker T`
    pub ker_t: usize,
    /// D-dimension of the 1-row multiplicity space of `O′`
    pub fixed: usize,
    /// `dim Hom_D(Ker T, (V′)^{γ′,1}_0)` over the base field
    pub correction: usize,
}

impl DimensionReport {
    pub fn holds(&self) -> bool {
        self.g_minus1 + self.gp_minus1 + self.correction == self.w0
    }
}

pub fn verify_dimension_identity(dr: &DescentResult) -> Result<DimensionReport> {
    let real = realize_triple(&dr.source)?;
    let r = construct_descent_element(&real, &dr.target.space)?;
    let g = ad_grading(&r.h, r.map.v.lie_algebra());
    let gp = ad_grading(&r.hp, r.map.vp.lie_algebra());
    let ker_t = r.kernel_dim();
    let fixed = dr.source_fixed_space().dim() as usize;
    let d = dr.target.space.ty.d() as usize;
    let rep = DimensionReport {
        g_minus1: g.get(&-1).copied().unwrap_or(0),
        gp_minus1: gp.get(&-1).copied().unwrap_or(0),
        w0: theta::w0(&r),
        ker_t,
        fixed,
        correction: d * ker_t * fixed,
    };
    if !rep.holds() {
        return Err(Error::IdentityViolated(format!(
            "{} + {} ≠ {} − {} for {}",
            rep.g_minus1, rep.gp_minus1, rep.w0, rep.correction, dr.source
        )));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{Epsilon, FormedSpace};
    use crate::orbits::complex_orbit;
    use crate::theta::generalized_descent;

    fn report(eps: Epsilon, p: &[u32], v: FormedSpace) -> DimensionReport {
        let dr = generalized_descent(&complex_orbit(eps, p).unwrap(), &v).unwrap();
        verify_dimension_identity(&dr).unwrap()
    }

    #[test]
    fn worked_instances() {
        let r = report(Epsilon::Plus, &[3, 1], FormedSpace::complex(Epsilon::Minus, 4).unwrap());
        assert_eq!((r.g_minus1, r.gp_minus1, r.w0, r.ker_t, r.fixed), (2, 0, 4, 2, 1));
        let r = report(Epsilon::Minus, &[2, 2], FormedSpace::complex(Epsilon::Plus, 2).unwrap());
        assert_eq!((r.g_minus1, r.gp_minus1, r.w0, r.correction), (0, 0, 0, 0));
        let r = report(Epsilon::Plus, &[3], FormedSpace::complex(Epsilon::Minus, 2).unwrap());
        assert_eq!((r.g_minus1, r.gp_minus1, r.w0, r.correction), (0, 0, 0, 0));
    }

    #[test]
    fn real_instances() {
        use crate::orbits::enumerate_orbits;
        let cases = [
            (FormedSpace::real_symplectic(4).unwrap(), FormedSpace::orthogonal(2, 2)),
            (FormedSpace::orthogonal(2, 1), FormedSpace::real_symplectic(4).unwrap()),
        ];
        for (v, vp) in cases {
            for op in enumerate_orbits(&vp).unwrap() {
                if let Ok(dr) = generalized_descent(&op, &v) {
                    verify_dimension_identity(&dr).unwrap();
                }
            }
        }
    }
}
