//! Generalized descent and theta lift of nilpotent orbits along the moment
//! maps of a dual pair `(G(V), G(V′))`.
//!
//! Descent erases the first column of the diagram of `O′ ⊂ g′`: rows of
//! length `t ≥ 2` become rows of length `t − 1` with the same multiplicity
//! space, and whatever is left of `V` is added as rows of length 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{self, Base, FormedSpace, GroupDescriptor};
use crate::oracle::{self, identify::weight_dims};
use crate::orbits::{self, AdmissibleTableau, Row, DEFAULT_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentResult {
    pub source: AdmissibleTableau,
    pub target: AdmissibleTableau,
    #[serde(rename = "U")]
    pub u: FormedSpace,
    #[serde(rename = "U1")]
    pub u1: FormedSpace,
    pub a: u32,
    pub b: u32,
    pub s: u32,
    pub strict: bool,
}

impl DescentResult {
    /// `Ker T`, the orthogonal complement of `U₁` in `U`.
    pub fn kernel(&self) -> FormedSpace {
        forms::orth_complement(&self.u1, &self.u).expect("U₁ ⊂ U by construction")
    }

    /// The 1-row multiplicity space of `O′` (possibly zero).
    pub fn source_fixed_space(&self) -> FormedSpace {
        self.source.mult_of(1).copied().unwrap_or_else(|| self.source.space.ty.zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFactorization {
    #[serde(rename = "M_XXp")]
    pub m_xxp: GroupDescriptor,
    #[serde(rename = "L")]
    pub l: GroupDescriptor,
    #[serde(rename = "Lp")]
    pub lp: GroupDescriptor,
    #[serde(rename = "L_space")]
    pub l_space: FormedSpace,
    #[serde(rename = "Lp_space")]
    pub lp_space: FormedSpace,
    /// Block description of `α_T` on `M′_{X′} = M_{X,X′} × L′`.
    pub alpha: Vec<AlphaBlock>,
}

/// How `α_T` acts on one factor of the stabilizer of `X′`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaBlock {
    /// the `M_{X,X′}` factor maps identically into `M_X`
    Identity,
    /// the `L′` factor maps to the identity
    Trivial,
}

/// Both spaces over the same base and division algebra, with `ε·ε′ = −1`.
pub fn check_pair(v: &FormedSpace, vp: &FormedSpace) -> Result<()> {
    if v.base() != vp.base() || v.division() != vp.division() || v.epsilon() == vp.epsilon() {
        return Err(Error::IncompatiblePair(format!("{v} and {vp}")));
    }
    Ok(())
}

/// `⊕_{t_j ≥ 3} mult_j ⊗ F^{t_j − 1}` and the 2-row multiplicity `U₁`, both
/// of the type of `V`.
fn image_pieces(op: &AdmissibleTableau, v: &FormedSpace) -> Result<(FormedSpace, FormedSpace)> {
    let mut big = v.ty.zero();
    let mut u1 = v.ty.zero();
    for r in &op.rows {
        if r.t >= 3 {
            big = forms::direct_sum(&big, &forms::tensor_with_sl2(&r.mult, r.t - 1)?)?;
        } else if r.t == 2 {
            u1 = r.mult;
        }
    }
    Ok((big, u1))
}

/// Whether `O′` meets the image of `φ′` on `Hom(V, V′)`.
pub fn in_moment_image(op: &AdmissibleTableau, v: &FormedSpace) -> Result<bool> {
    check_pair(v, &op.space)?;
    orbits::validate(op)?;
    let (big, u1) = image_pieces(op, v)?;
    forms::embeds(&forms::direct_sum(&big, &u1)?, v)
}

pub fn generalized_descent(op: &AdmissibleTableau, v: &FormedSpace) -> Result<DescentResult> {
    if !in_moment_image(op, v)? {
        return Err(Error::NotInImage);
    }
    let (big, u1) = image_pieces(op, v)?;
    let u = forms::orth_complement(&big, v)?;
    let mut rows: Vec<Row> = op.rows.iter().filter(|r| r.t >= 3).map(|r| Row { t: r.t - 1, mult: r.mult }).collect();
    if !u.is_zero() {
        rows.push(Row { t: 1, mult: u });
    }
    let target = AdmissibleTableau::new(*v, rows)?;
    let a = u1.dim();
    let b = u.dim() - a;
    let s = op.mult_of(1).map_or(0, FormedSpace::dim);
    Ok(DescentResult { source: op.clone(), target, u, u1, a, b, s, strict: b == 0 })
}

/// The real-form descent, or `None` when the needed embedding fails over ℝ.
pub fn k_descent(op: &AdmissibleTableau, v: &FormedSpace) -> Result<Option<AdmissibleTableau>> {
    check_pair(v, &op.space)?;
    if v.base() != Base::R {
        return Err(Error::Unsupported("k_descent is for real dual pairs".into()));
    }
    match generalized_descent(op, v) {
        Ok(dr) => Ok(Some(dr.target)),
        Err(Error::NotInImage) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn theta_lift(o: &AdmissibleTableau, vp: &FormedSpace) -> Result<AdmissibleTableau> {
    theta_lift_bounded(o, vp, DEFAULT_BOUND)
}

/// The closure-maximal `O′ ⊂ g′` whose generalized descent is `O`.
pub fn theta_lift_bounded(o: &AdmissibleTableau, vp: &FormedSpace, bound: usize) -> Result<AdmissibleTableau> {
    check_pair(&o.space, vp)?;
    orbits::validate(o)?;
    if o.space.base() != Base::C {
        return Err(Error::UnsupportedRealClosure);
    }
    let mut candidates = Vec::new();
    for op in orbits::enumerate_orbits_bounded(vp, bound)? {
        if in_moment_image(&op, &o.space)? && generalized_descent(&op, &o.space)?.target == *o {
            candidates.push(op);
        }
    }
    let maximal: Vec<&AdmissibleTableau> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.diagram() != c.diagram() && orbits::dominates(&d.diagram(), &c.diagram()))
        })
        .collect();
    match maximal.as_slice() {
        [] => Err(Error::EmptyLift),
        [one] => Ok((*one).clone()),
        many => Err(Error::AmbiguousMaximum(
            many.iter().map(|t| t.diagram_string()).collect::<Vec<_>>().join(", "),
        )),
    }
}

/// `M′_{X′} = M_{X,X′} × L′` and `M_X ⊇ M_{X,X′} × L`.
pub fn pair_factorization(dr: &DescentResult) -> PairFactorization {
    let mut m = Vec::new();
    for r in &dr.source.rows {
        if r.t >= 3 {
            m.push(forms::isometry_group(&r.mult));
        }
    }
    m.push(forms::isometry_group(&dr.u1));
    let l_space = dr.kernel();
    let lp_space = dr.source_fixed_space();
    let mut alpha = Vec::new();
    let m_xxp = GroupDescriptor::product(m);
    if !m_xxp.is_trivial() {
        alpha.push(AlphaBlock::Identity);
    }
    let lp = forms::isometry_group(&lp_space);
    if !lp.is_trivial() {
        alpha.push(AlphaBlock::Trivial);
    }
    PairFactorization { m_xxp, l: forms::isometry_group(&l_space), lp, l_space, lp_space, alpha }
}

/// `(dim W_{γ,γ′}, dim W₀)` over the base field: `W_{γ,γ′} = Hom(Ker T,
/// (V′)^{γ′,1}_0)` and `W₀ = ⊕_k Hom(V_k, V′_k)` for the weight spaces of a
/// realizer.
pub fn reduced_pair_dims(dr: &DescentResult) -> Result<(usize, usize)> {
    let d = dr.target.space.ty.d() as usize;
    let w = d * dr.b as usize * dr.s as usize;
    let real = oracle::realize_triple(&dr.source)?;
    let r = oracle::construct_descent_element(&real, &dr.target.space)?;
    Ok((w, w0(&r)))
}

pub(crate) fn w0(r: &oracle::DescentRealizer) -> usize {
    let d = r.map.v.d;
    let wv = weight_dims(&r.h, d);
    let wvp = weight_dims(&r.hp, d);
    let unit = r.map.v.space.ty.d() as usize;
    wv.iter().map(|(k, a)| unit * a * wvp.get(k).copied().unwrap_or(0)).sum()
}
