//! Matrix realizations of formed spaces, their Lie algebras, and of
//! sl2-triples attached to tableaux.

use std::cell::OnceCell;
use std::collections::BTreeMap;

use super::division::{self, Quat};
use super::linalg::{q, Mat, Q};
use crate::error::{Error, Result};
use crate::forms::{Epsilon, FormedSpace};
use crate::orbits::{AdmissibleTableau, DEFAULT_BOUND};

/// A formed space in real (or, over ℂ, rational) coordinates.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub space: FormedSpace,
    /// real units per D-coordinate
    pub d: usize,
    pub gram: Mat,
    pub structure: Vec<Mat>,
    lie: OnceCell<Vec<Mat>>,
}

impl Ambient {
    pub fn new(space: FormedSpace, gram: Mat, structure: Vec<Mat>) -> Self {
        let d = division::real_units(&space);
        assert_eq!(gram.rows(), d * space.dim() as usize, "gram does not match {space}");
        Ambient { space, d, gram, structure, lie: OnceCell::new() }
    }

    /// The space with its standard Gram matrix.
    pub fn standard(space: &FormedSpace) -> Self {
        let d = division::real_units(space);
        let n = space.dim() as usize;
        let gram = division::realify_form(&division::standard_gram(space), d);
        Ambient::new(*space, gram, division::structure_matrices(n, d))
    }

    pub fn n(&self) -> usize {
        self.gram.rows()
    }

    pub fn form(&self, x: &[Q], y: &[Q]) -> Q {
        super::linalg::dot(x, &self.gram.mul_vec(y))
    }

    /// Whether `z` is D-linear and skew for the form.
    pub fn contains(&self, z: &Mat) -> bool {
        if z.rows() != self.n() || z.cols() != self.n() {
            return false;
        }
        let skew = &(&z.transpose() * &self.gram) + &(&self.gram * z);
        skew.is_zero() && self.structure.iter().all(|r| z.bracket(r).is_zero())
    }

    /// A basis of the Lie algebra of the isometry group, as a real (or
    /// rational) vector space.
    pub fn lie_algebra(&self) -> &[Mat] {
        self.lie.get_or_init(|| {
            let n = self.n();
            let mut rows: Vec<Vec<Q>> = Vec::new();
            // (Zᵀ G + G Z)_{ij} = Σ_k Z_{ki} G_{kj} + G_{ik} Z_{kj}
            for i in 0..n {
                for j in i..n {
                    let mut row = vec![q(0); n * n];
                    for k in 0..n {
                        row[k * n + i] += self.gram.get(k, j);
                        row[k * n + j] += self.gram.get(i, k);
                    }
                    rows.push(row);
                }
            }
            // (Z R − R Z)_{ij} = Σ_k Z_{ik} R_{kj} − R_{ik} Z_{kj}
            for r in &self.structure {
                for i in 0..n {
                    for j in 0..n {
                        let mut row = vec![q(0); n * n];
                        for k in 0..n {
                            row[i * n + k] += r.get(k, j);
                            row[k * n + j] -= r.get(i, k);
                        }
                        rows.push(row);
                    }
                }
            }
            Mat::from_rows(rows)
                .nullspace()
                .into_iter()
                .map(|v| Mat::from_entries(n, n, v))
                .collect()
        })
    }

    /// The adjoint of `t : self → other`, i.e. `t* : other → self` with
    /// `B′(t v, v′) = B(v, t* v′)`.
    pub fn adjoint(&self, other: &Ambient, t: &Mat) -> Mat {
        let inv = self.gram.inverse().expect("non-degenerate form");
        &(&inv * &t.transpose()) * &other.gram
    }
}

/// The invariant form `(·,·)_t` on the t-dimensional sl2 module with basis
/// `e_0, …, e_{t-1}`, `x e_k = e_{k+1}`: `(e_i, e_{t-1-i}) = (-1)^{i+t-1}`,
/// so the top vector pairs with the bottom one to `+1`.
pub fn sl2_form(t: usize) -> Mat {
    Mat::from_fn(t, t, |i, j| {
        if i + j + 1 == t {
            q(if (i + t - 1).is_multiple_of(2) { 1 } else { -1 })
        } else {
            q(0)
        }
    })
}

/// One block `mult ⊗ F^t` of a realization.
#[derive(Debug, Clone)]
pub struct Block {
    pub t: usize,
    pub mult: FormedSpace,
    /// first D-coordinate of the block
    pub offset: usize,
}

#[derive(Debug, Clone)]
pub struct MatrixRealization {
    pub tableau: AdmissibleTableau,
    pub ambient: Ambient,
    pub x: Mat,
    pub h: Mat,
    pub y: Mat,
    pub blocks: Vec<Block>,
    /// weight → real coordinate indices spanning the weight space
    pub weight_spaces: BTreeMap<i64, Vec<usize>>,
}

/// D-valued data of a sum of blocks `mult_j ⊗ F^{t_j}`; coordinates of a
/// block are ordered by multiplicity index, then from the top vector down.
pub(crate) struct BlockData {
    pub gram: Vec<Vec<Quat>>,
    pub x: Vec<Vec<Quat>>,
    pub weights: Vec<i64>,
    pub blocks: Vec<Block>,
}

/// Assemble blocks `(t, mult)`; each contributes `mult ⊗ F^t` with the
/// standard Gram matrix of `mult` and weights shifted so the block is a sum
/// of irreducible sl2 strings.
pub(crate) fn assemble(parts: &[(usize, FormedSpace)]) -> BlockData {
    let n: usize = parts.iter().map(|(t, m)| t * m.dim() as usize).sum();
    let mut gram = vec![vec![Quat::zero(); n]; n];
    let mut x = vec![vec![Quat::zero(); n]; n];
    let mut weights = vec![0i64; n];
    let mut blocks = Vec::new();
    let mut off = 0;
    for &(t, mult) in parts {
        let gm = division::standard_gram(&mult);
        let bt = sl2_form(t);
        let i = mult.dim() as usize;
        // top vector first within each string
        let idx = |a: usize, k: usize| off + a * t + (t - 1 - k);
        for a in 0..i {
            for k in 0..t {
                weights[idx(a, k)] = 2 * k as i64 - (t as i64 - 1);
                if k + 1 < t {
                    x[idx(a, k + 1)][idx(a, k)] = Quat::real(q(1));
                }
                for b in 0..i {
                    for l in 0..t {
                        let s = bt.get(k, l);
                        if *s != q(0) {
                            gram[idx(a, k)][idx(b, l)] = gm[a][b].scale(s);
                        }
                    }
                }
            }
        }
        blocks.push(Block { t, mult, offset: off });
        off += t * i;
    }
    BlockData { gram, x, weights, blocks }
}

/// Realize the standard triple of a tableau on `⊕_j mult_j ⊗ F^{t_j}`.
pub fn realize_triple(tab: &AdmissibleTableau) -> Result<MatrixRealization> {
    realize_triple_bounded(tab, DEFAULT_BOUND)
}

pub fn realize_triple_bounded(tab: &AdmissibleTableau, bound: usize) -> Result<MatrixRealization> {
    crate::orbits::validate(tab)?;
    let dim = tab.space.dim_f() as usize;
    if dim > bound {
        return Err(Error::BoundExceeded { dim, bound });
    }
    let parts: Vec<(usize, FormedSpace)> = tab.rows.iter().map(|r| (r.t as usize, r.mult)).collect();
    let data = assemble(&parts);
    let d = division::real_units(&tab.space);
    let n = data.weights.len();
    let gram = division::realify_form(&data.gram, d);
    let ambient = Ambient::new(tab.space, gram, division::structure_matrices(n, d));
    let x = division::realify(&data.x, d);
    let h = Mat::diag(&data.weights.iter().flat_map(|&w| std::iter::repeat_n(q(w), d)).collect::<Vec<_>>());
    // y e_k = k (t - k) e_{k-1}
    let mut yd = vec![vec![Quat::zero(); n]; n];
    for b in &data.blocks {
        for a in 0..b.mult.dim() as usize {
            for k in 1..b.t {
                let c = b.offset + a * b.t + (b.t - 1 - k);
                yd[c + 1][c] = Quat::real(q((k * (b.t - k)) as i64));
            }
        }
    }
    let y = division::realify(&yd, d);
    let mut weight_spaces: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (c, &w) in data.weights.iter().enumerate() {
        weight_spaces.entry(w).or_default().extend(c * d..(c + 1) * d);
    }
    Ok(MatrixRealization { tableau: tab.clone(), ambient, x, h, y, blocks: data.blocks, weight_spaces })
}

impl MatrixRealization {
    /// The bracket and form identities of an sl2-triple in `g`.
    pub fn check(&self) -> bool {
        let two = q(2);
        self.h.bracket(&self.x) == self.x.scale(&two)
            && self.h.bracket(&self.y) == self.y.scale(&-two)
            && self.x.bracket(&self.y) == self.h
            && self.ambient.contains(&self.x)
            && self.ambient.contains(&self.h)
            && self.ambient.contains(&self.y)
    }
}

/// ε of `(·,·)_t`.
pub fn sl2_form_epsilon(t: usize) -> Epsilon {
    Epsilon::Plus.twist(t as u32 - 1)
}
