//! Elements of `Hom(V, V′)`, their moment maps, and explicit realizers of
//! generalized descent.

use super::division::{self, Quat};
use super::identify::{identify, jacobson_morozov};
use super::linalg::{intersect, q, span_dim, Mat, Q};
use super::realize::{assemble, Ambient, MatrixRealization};
use crate::error::{Error, Result};
use crate::forms::FormedSpace;
use crate::orbits::AdmissibleTableau;
use crate::theta;

/// `t : V → V′` between two realized formed spaces.
#[derive(Debug, Clone)]
pub struct RationalMap {
    pub v: Ambient,
    pub vp: Ambient,
    pub t: Mat,
}

impl RationalMap {
    pub fn new(v: Ambient, vp: Ambient, t: Mat) -> Self {
        assert_eq!((t.rows(), t.cols()), (vp.n(), v.n()), "shape of T");
        RationalMap { v, vp, t }
    }

    /// `T*` with `B′(T v, v′) = B(v, T* v′)`.
    pub fn adjoint(&self) -> Mat {
        self.v.adjoint(&self.vp, &self.t)
    }

    /// `B′(T v, v′) = B(v, T* v′)` on all basis pairs.
    pub fn check_adjoint(&self) -> bool {
        let ts = self.adjoint();
        // Tᵀ G′ = G T*
        &self.t.transpose() * &self.vp.gram == &self.v.gram * &ts
    }

    /// Whether `T` is D-linear.
    pub fn is_linear(&self) -> bool {
        self.v.structure.iter().zip(&self.vp.structure).all(|(r, rp)| &self.t * r == rp * &self.t)
    }

    pub fn kernel(&self) -> Vec<Vec<Q>> {
        self.t.nullspace()
    }

    /// Whether the form restricted to `Ker T` is non-degenerate.
    pub fn kernel_nondegenerate(&self) -> bool {
        let k = self.kernel();
        k.is_empty() || self.v.gram.restrict_form(&k).rank() == k.len()
    }
}

/// `(φ(T), φ′(T)) = (T*T, TT*)`; both lie in the respective Lie algebras.
pub fn moment_maps(map: &RationalMap) -> (Mat, Mat) {
    let ts = map.adjoint();
    let x = &ts * &map.t;
    let xp = &map.t * &ts;
    assert!(map.v.contains(&x), "φ(T) left g");
    assert!(map.vp.contains(&xp), "φ′(T) left g′");
    (x, xp)
}

/// A map `T` together with neutral elements on both sides for which
/// `H′T − TH = T`, i.e. `T(V_k) ⊆ V′_{k+1}`.
#[derive(Debug, Clone)]
pub struct DescentRealizer {
    pub map: RationalMap,
    pub h: Mat,
    pub hp: Mat,
}

impl DescentRealizer {
    /// `H′T − TH = T`
    pub fn lifts(&self) -> bool {
        &(&self.hp * &self.map.t) - &(&self.map.t * &self.h) == self.map.t
    }

    pub fn kernel_dim(&self) -> usize {
        self.map.kernel().len() / self.map.v.d
    }
}

/// Build `T` on the realization of `O′` following the block structure: each
/// string of length `t ≥ 2` of `V′` receives a string of length `t − 1` of
/// `V` shifted up by one step, and the complement of those strings is
/// `Ker T`.
pub fn construct_descent_element(op: &MatrixRealization, v: &FormedSpace) -> Result<DescentRealizer> {
    let dr = theta::generalized_descent(&op.tableau, v)?;
    let d = op.ambient.d;
    let mut parts: Vec<(usize, FormedSpace)> = Vec::new();
    for b in &op.blocks {
        if b.t >= 2 {
            parts.push((b.t - 1, b.mult));
        }
    }
    let kernel = crate::forms::orth_complement(&dr.u1, &dr.u)?;
    if !kernel.is_zero() {
        parts.push((1, kernel));
    }
    let data = assemble(&parts);
    let n = data.weights.len();
    let np = op.ambient.n() / d;
    // V-string of length t-1 sits inside the V′-string of length t, one
    // step up; with the top vector first, index k of V goes to index k of V′
    let mut t_d = vec![vec![Quat::zero(); n]; np];
    let mut vb = data.blocks.iter();
    for b in &op.blocks {
        if b.t < 2 {
            continue;
        }
        let target = vb.next().expect("one V-block per long V′-block");
        for a in 0..b.mult.dim() as usize {
            for k in 0..b.t - 1 {
                t_d[b.offset + a * b.t + k][target.offset + a * target.t + k] = Quat::real(q(1));
            }
        }
    }
    let gram = division::realify_form(&data.gram, d);
    let va = Ambient::new(*v, gram, division::structure_matrices(n, d));
    let t = division::realify(&t_d, d);
    let h = Mat::diag(&data.weights.iter().flat_map(|&w| std::iter::repeat_n(q(w), d)).collect::<Vec<_>>());
    let map = RationalMap::new(va, op.ambient.clone(), t);
    Ok(DescentRealizer { map, h, hp: op.h.clone() })
}

/// The truncation of an arbitrary `S` with `φ′(S) = X′`: `T* = S*` on the
/// non-top vectors of every `X′`-string and `T* = 0` on the tops. Then
/// `TT* = X′`, `Ker T` is non-degenerate, and grading `T* v′` one step above
/// `v′` makes `T` lift the triple of `X′`.
pub fn truncate(s: &RationalMap) -> Result<DescentRealizer> {
    let (_, xp) = moment_maps(s);
    let vp = &s.vp;
    let np = vp.n();
    let (hp, yp) = jacobson_morozov(&xp, vp)?;
    let weights = super::identify::weight_dims(&hp, 1);
    let ss = s.adjoint();
    // T* = S* ∘ (projection onto Im Y′ along Ker X′)
    let im_y: Vec<Vec<Q>> = {
        let cols: Vec<Vec<Q>> = (0..np).map(|j| yp.col(j)).collect();
        let mut basis: Vec<Vec<Q>> = Vec::new();
        for c in cols {
            let mut cand = basis.clone();
            cand.push(c.clone());
            if span_dim(np, &cand) > basis.len() {
                basis.push(c);
            }
        }
        basis
    };
    let ker_x = xp.nullspace();
    let mut cols = im_y.clone();
    cols.extend(ker_x.iter().cloned());
    let c = Mat::from_cols(np, &cols);
    let cinv = c.inverse().ok_or_else(|| Error::IdentityViolated("Im Y′ and Ker X′ are not complementary".into()))?;
    let mut diag = vec![q(0); np];
    for x in diag.iter_mut().take(im_y.len()) {
        *x = q(1);
    }
    let proj = &(&c * &Mat::diag(&diag)) * &cinv;
    let ts = &ss * &proj;
    // T from T*: Tᵀ G′ = G T*
    let gp_inv = vp.gram.inverse().expect("non-degenerate form");
    let t = (&(&s.v.gram * &ts) * &gp_inv).transpose();
    let map = RationalMap::new(s.v.clone(), vp.clone(), t);
    if !map.kernel_nondegenerate() {
        return Err(Error::IdentityViolated("Ker T is degenerate".into()));
    }
    // grade V: T* sends V′_w ∩ Im Y′ to weight w + 1, Ker T has weight 0
    let n = s.v.n();
    let mut vecs: Vec<Vec<Q>> = Vec::new();
    let mut ws: Vec<Q> = Vec::new();
    for &w in weights.keys() {
        let eig = (&hp - &Mat::identity(np).scale(&q(w))).nullspace();
        for v in intersect(np, &eig, &im_y) {
            vecs.push(ts.mul_vec(&v));
            ws.push(q(w + 1));
        }
    }
    for k in map.kernel() {
        vecs.push(k);
        ws.push(q(0));
    }
    let cv = Mat::from_cols(n, &vecs);
    let cv_inv = cv.inverse().ok_or_else(|| Error::IdentityViolated("Im T* ⊕ Ker T ≠ V".into()))?;
    let h = &(&cv * &Mat::diag(&ws)) * &cv_inv;
    Ok(DescentRealizer { map, h, hp })
}

/// Outcome of checking a realizer against the combinatorics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizerCheck {
    pub source: AdmissibleTableau,
    pub target: AdmissibleTableau,
    pub lifts: bool,
    pub kernel_nondegenerate: bool,
    pub h_in_algebra: bool,
}

pub fn check_realizer(r: &DescentRealizer) -> Result<RealizerCheck> {
    let (x, xp) = moment_maps(&r.map);
    Ok(RealizerCheck {
        source: identify(&xp, &r.map.vp)?,
        target: identify(&x, &r.map.v)?,
        lifts: r.lifts(),
        kernel_nondegenerate: r.map.kernel_nondegenerate(),
        h_in_algebra: r.map.v.contains(&r.h) && r.map.vp.contains(&r.hp),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Epsilon;
    use crate::oracle::realize::realize_triple;
    use crate::orbits::complex_orbit;

    fn orth(n: u32) -> FormedSpace {
        FormedSpace::complex(Epsilon::Plus, n).unwrap()
    }

    fn symp(n: u32) -> FormedSpace {
        FormedSpace::complex(Epsilon::Minus, n).unwrap()
    }

    #[test]
    fn zero_orbit_gives_zero_map() {
        let op = realize_triple(&complex_orbit(Epsilon::Minus, &[1, 1]).unwrap()).unwrap();
        let r = construct_descent_element(&op, &orth(3)).unwrap();
        assert!(r.map.t.is_zero());
        assert_eq!(r.kernel_dim(), 3);
    }

    #[test]
    fn sp2_from_a_line() {
        let op = realize_triple(&complex_orbit(Epsilon::Minus, &[2]).unwrap()).unwrap();
        let r = construct_descent_element(&op, &orth(1)).unwrap();
        let (x, xp) = moment_maps(&r.map);
        assert!(x.is_zero());
        assert_eq!(xp, op.x);
        assert!(r.lifts());
    }

    #[test]
    fn o4_from_sp4_has_two_dimensional_kernel() {
        let op = realize_triple(&complex_orbit(Epsilon::Plus, &[3, 1]).unwrap()).unwrap();
        let r = construct_descent_element(&op, &symp(4)).unwrap();
        assert_eq!(r.kernel_dim(), 2);
        let c = check_realizer(&r).unwrap();
        assert!(c.kernel_nondegenerate && c.lifts && c.h_in_algebra);
        assert_eq!(c.target.diagram(), vec![2, 1, 1]);
        assert_eq!(c.source.diagram(), vec![3, 1]);
    }

    #[test]
    fn not_in_image() {
        let op = realize_triple(&complex_orbit(Epsilon::Minus, &[4]).unwrap()).unwrap();
        assert_eq!(construct_descent_element(&op, &orth(2)).unwrap_err(), Error::NotInImage);
    }

    #[test]
    fn truncation_of_the_standard_realizer_is_itself() {
        let op = realize_triple(&complex_orbit(Epsilon::Plus, &[3, 1]).unwrap()).unwrap();
        let r = construct_descent_element(&op, &symp(4)).unwrap();
        let tr = truncate(&r.map).unwrap();
        assert_eq!(tr.map.t, r.map.t);
        assert!(tr.lifts());
    }
}

#[cfg(test)]
mod convention {
    use super::*;
    use crate::oracle::sample::random_nullcone_map;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn truncation_preserves_real_multiplicity_forms() {
        let pairs = [
            (FormedSpace::real_symplectic(2).unwrap(), FormedSpace::orthogonal(2, 1)),
            (FormedSpace::real_symplectic(4).unwrap(), FormedSpace::orthogonal(3, 2)),
            (FormedSpace::orthogonal(2, 1), FormedSpace::real_symplectic(4).unwrap()),
            (FormedSpace::orthogonal(2, 2), FormedSpace::real_symplectic(6).unwrap()),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut nontrivial = 0;
        for (v, vp) in pairs {
            for _ in 0..40 {
                let s = random_nullcone_map(&v, &vp, &mut rng).unwrap();
                let r = truncate(&s).unwrap();
                let c = check_realizer(&r).unwrap();
                assert!(c.lifts && c.kernel_nondegenerate && c.h_in_algebra);
                let expected = crate::theta::k_descent(&c.source, &v).unwrap().unwrap();
                assert_eq!(c.target, expected, "source {}", c.source);
                if c.source.rows.iter().any(|r| r.t >= 3) {
                    nontrivial += 1;
                }
            }
        }
        assert!(nontrivial > 10);
    }
}
