//! Recognizing the orbit of a nilpotent matrix: Jacobson–Morozov completion,
//! rank sequences and multiplicity forms.

use std::collections::BTreeMap;

use super::division;
use super::linalg::{intersect, q, Mat, Q};
use super::realize::Ambient;
use crate::error::{Error, Result};
use crate::forms::{Base, Division, Epsilon, FormedSpace, Invariant};
use crate::orbits::{AdmissibleTableau, Row};

/// Coefficients `c` with `Σ c_i basis_i` solving `f(Σ c_i basis_i) = rhs`
/// for a linear map `f` on matrices.
fn solve_in(basis: &[Mat], f: impl Fn(&Mat) -> Vec<Q>, rhs: Vec<Q>) -> Option<Mat> {
    let cols: Vec<Vec<Q>> = basis.iter().map(f).collect();
    let a = Mat::from_cols(rhs.len(), &cols);
    let c = a.solve(&rhs)?;
    let n = basis.first().map_or(0, Mat::rows);
    let mut out = Mat::zeros(n, n);
    for (ci, b) in c.iter().zip(basis) {
        if *ci != q(0) {
            out = &out + &b.scale(ci);
        }
    }
    Some(out)
}

/// Complete a nilpotent `x ∈ g` to an sl2-triple `(x, h, y)` inside `g`.
pub fn jacobson_morozov(x: &Mat, ambient: &Ambient) -> Result<(Mat, Mat)> {
    let n = ambient.n();
    if x.is_zero() {
        return Ok((Mat::zeros(n, n), Mat::zeros(n, n)));
    }
    let g = ambient.lie_algebra();
    // z ∈ g with [x,[x,z]] = -2x; then h = [x,z] has [h,x] = 2x
    let rhs: Vec<Q> = x.scale(&q(-2)).entries().to_vec();
    let z = solve_in(g, |b| x.bracket(&x.bracket(b)).entries().to_vec(), rhs).ok_or(Error::NotNilpotent)?;
    let h = x.bracket(&z);
    // y ∈ g with [x,y] = h and [h,y] = -2y
    let mut rhs = h.entries().to_vec();
    rhs.extend(std::iter::repeat_n(q(0), n * n));
    let two = q(2);
    let y = solve_in(
        g,
        |b| {
            let mut v = x.bracket(b).entries().to_vec();
            v.extend((&h.bracket(b) + &b.scale(&two)).entries().iter().cloned());
            v
        },
        rhs,
    )
    .ok_or(Error::NotNilpotent)?;
    Ok((h, y))
}

/// `rank(x^k)` over the base field, for `k = 0, 1, …` until it vanishes.
pub fn rank_sequence(x: &Mat) -> Result<Vec<usize>> {
    let n = x.rows();
    let mut out = vec![n];
    let mut p = Mat::identity(n);
    while *out.last().unwrap() > 0 {
        if out.len() > n {
            return Err(Error::NotNilpotent);
        }
        p = &p * x;
        out.push(p.rank());
    }
    Ok(out)
}

/// Row lengths with their D-multiplicities, longest first.
pub fn diagram_from_ranks(ranks: &[usize], d: usize) -> Vec<(u32, u32)> {
    let r = |k: usize| ranks.get(k).copied().unwrap_or(0) / d;
    let mut out = Vec::new();
    for t in (1..ranks.len()).rev() {
        let at_least_t = r(t - 1) - r(t);
        let at_least_t1 = r(t) - r(t + 1);
        let exactly = at_least_t - at_least_t1;
        if exactly > 0 {
            out.push((t as u32, exactly as u32));
        }
    }
    out
}

/// The orbit of a nilpotent `x` in the Lie algebra of `ambient`.
pub fn identify(x: &Mat, ambient: &Ambient) -> Result<AdmissibleTableau> {
    if !ambient.contains(x) {
        return Err(Error::NotInAlgebra);
    }
    let ranks = rank_sequence(x)?;
    let d = ambient.d;
    let shape = diagram_from_ranks(&ranks, d);
    let space = ambient.space;
    let needs_forms = shape
        .iter()
        .any(|&(t, _)| space.ty.with_epsilon(space.epsilon().twist(t - 1)).signature_classified());
    let triple = if needs_forms { Some(jacobson_morozov(x, ambient)?) } else { None };
    let mut rows = Vec::new();
    for (t, i) in shape {
        let ty = space.ty.with_epsilon(space.epsilon().twist(t - 1));
        let invariant = if ty.signature_classified() {
            let (h, y) = triple.as_ref().expect("triple computed when forms are needed");
            let (p, m) = multiplicity_signature(x, h, y, ambient, t as usize);
            debug_assert_eq!(p + m, i);
            Invariant::Signature(p, m)
        } else {
            Invariant::Dim(i)
        };
        let mult = FormedSpace::new(ty.base, ty.division, ty.epsilon, invariant)?;
        rows.push(Row { t, mult });
    }
    if rows.is_empty() && !space.is_zero() {
        unreachable!("a nonzero space has at least one row");
    }
    Ok(AdmissibleTableau { space, rows })
}

/// Basis of the t-th highest weight space `ker x ∩ V_{t-1}`.
pub fn highest_weight_space(x: &Mat, h: &Mat, t: usize) -> Vec<Vec<Q>> {
    let n = x.rows();
    let ker_x = x.nullspace();
    let shifted = &(h - &Mat::identity(n).scale(&q(t as i64 - 1)));
    intersect(n, &ker_x, &shifted.nullspace())
}

/// Signature of `(u, v) ↦ B(u, y^{t-1} v)` on the highest weight space of
/// strings of length `t`, over the division algebra.
fn multiplicity_signature(x: &Mat, h: &Mat, y: &Mat, ambient: &Ambient, t: usize) -> (u32, u32) {
    let top = highest_weight_space(x, h, t);
    let yt = y.pow(t as u32 - 1);
    let images: Vec<Vec<Q>> = top.iter().map(|v| yt.mul_vec(v)).collect();
    let ty = ambient.space.ty.with_epsilon(ambient.space.epsilon().twist(t as u32 - 1));
    let skew_complex = ty.base == Base::R && ty.division == Division::C && ty.epsilon == Epsilon::Minus;
    let left: Vec<Vec<Q>> = if skew_complex {
        top.iter().map(|v| ambient.structure[0].mul_vec(v)).collect()
    } else {
        top.clone()
    };
    let m = Mat::from_fn(top.len(), top.len(), |a, b| ambient.form(&left[a], &images[b]));
    let (p, n, z) = m.inertia();
    assert_eq!(z, 0, "multiplicity form is degenerate");
    ((p / ambient.d) as u32, (n / ambient.d) as u32)
}

fn vec_coeffs(basis: &[Mat], f: impl Fn(&Mat) -> Mat) -> Mat {
    let cols: Vec<Vec<Q>> = basis.iter().map(|b| f(b).entries().to_vec()).collect();
    let len = cols.first().map_or(0, Vec::len);
    Mat::from_cols(len, &cols)
}

/// `dim ker(ad x)` on the Lie algebra spanned by `basis`.
pub fn centralizer_dim_in(x: &Mat, basis: &[Mat]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    basis.len() - vec_coeffs(basis, |b| x.bracket(b)).rank()
}

pub fn centralizer_dim(x: &Mat, ambient: &Ambient) -> Result<usize> {
    if !ambient.contains(x) {
        return Err(Error::NotInAlgebra);
    }
    Ok(centralizer_dim_in(x, ambient.lie_algebra()))
}

/// `dim {z ∈ g : [z,x] = 0, [z,h] = 0}`, the Lie algebra of the reductive
/// part of the stabilizer.
pub fn triple_centralizer_dim(x: &Mat, h: &Mat, ambient: &Ambient) -> usize {
    let basis = ambient.lie_algebra();
    if basis.is_empty() {
        return 0;
    }
    let m = vec_coeffs(basis, |b| {
        let mut e = x.bracket(b).entries().to_vec();
        e.extend(h.bracket(b).entries().iter().cloned());
        let len = e.len();
        Mat::from_entries(len, 1, e)
    });
    basis.len() - m.rank()
}

/// `j ↦ dim g_j` for the `ad h` grading of the Lie algebra spanned by
/// `basis`; `h` must be semisimple with integer eigenvalues.
pub fn ad_grading(h: &Mat, basis: &[Mat]) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if basis.is_empty() {
        return out;
    }
    let top = weight_dims(h, 1).keys().map(|w| w.abs()).max().unwrap_or(0);
    let bound = 2 * top;
    let mut total = 0;
    for j in -bound..=bound {
        let qj = q(j);
        let m = vec_coeffs(basis, |b| &h.bracket(b) - &b.scale(&qj));
        let dim = basis.len() - m.rank();
        if dim > 0 {
            out.insert(j, dim);
            total += dim;
        }
    }
    assert_eq!(total, basis.len(), "ad h is not diagonalizable with integer weights in range");
    out
}

/// Multiplicities of the eigenvalues of a diagonalizable `h`, over D.
pub fn weight_dims(h: &Mat, d: usize) -> BTreeMap<i64, usize> {
    let n = h.rows();
    let mut out = BTreeMap::new();
    let mut total = 0;
    for w in -(n as i64)..=(n as i64) {
        let k = (h - &Mat::identity(n).scale(&q(w))).nullspace().len();
        if k > 0 {
            out.insert(w, k / d);
            total += k;
        }
    }
    assert_eq!(total, n, "h is not diagonalizable with small integer weights");
    out
}

/// The division-algebra signature of a real Gram matrix restricted to a
/// D-stable subspace, or its D-dimension for dimension-classified types.
pub fn subspace_invariant(ambient: &Ambient, basis: &[Vec<Q>]) -> Result<FormedSpace> {
    let ty = ambient.space.ty;
    let dim = (basis.len() / ambient.d) as u32;
    let invariant = if ty.signature_classified() {
        let skew_complex = ty.division == Division::C && ty.base == Base::R && ty.epsilon == Epsilon::Minus;
        let (p, m, z) = division::hermitian_signature(
            |a, b| ambient.form(a, b),
            basis,
            &ambient.structure,
            ambient.d,
            skew_complex,
        );
        if z != 0 {
            return Err(Error::IdentityViolated("degenerate subspace".into()));
        }
        Invariant::Signature(p, m)
    } else {
        let g = ambient.gram.restrict_form(basis);
        if g.rank() != basis.len() {
            return Err(Error::IdentityViolated("degenerate subspace".into()));
        }
        Invariant::Dim(dim)
    };
    FormedSpace::new(ty.base, ty.division, ty.epsilon, invariant)
}
