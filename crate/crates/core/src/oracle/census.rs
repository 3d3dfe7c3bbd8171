//! Brute-force orbit census: identify many nilpotent matrices and collect
//! the distinct answers.

use std::collections::BTreeSet;

use super::identify::{diagram_from_ranks, identify, rank_sequence};
use super::linalg::{q, Mat, Q};
use super::realize::Ambient;
use super::sample::witt_basis;
use crate::error::Result;
use crate::forms::{Base, FormedSpace};
use crate::orbits::AdmissibleTableau;

/// Basis of the nilradical `n⁺` of a Borel subalgebra of `g`, for a Witt
/// basis graded by a regular cocharacter.
fn borel_nilradical(space: &FormedSpace) -> Result<(Ambient, Vec<Mat>)> {
    let b = witt_basis(space)?;
    let n = b.ambient.n();
    let mut w = vec![0i64; n];
    for (i, &(e, f)) in b.pairs.iter().enumerate() {
        w[e] = i as i64 + 1;
        w[f] = -(i as i64) - 1;
    }
    let g = b.ambient.lie_algebra().to_vec();
    // coefficients c with Σ c_k g_k vanishing on all entries (a, b) with w_a ≤ w_b
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for a in 0..n {
        for c in 0..n {
            if w[a] <= w[c] {
                rows.push(g.iter().map(|m| m.get(a, c).clone()).collect());
            }
        }
    }
    let coeffs = if rows.is_empty() {
        (0..g.len()).map(|k| (0..g.len()).map(|j| q((j == k) as i64)).collect()).collect()
    } else {
        Mat::from_rows(rows).nullspace()
    };
    let basis = coeffs
        .into_iter()
        .map(|c| {
            c.iter().zip(&g).fold(Mat::zeros(n, n), |acc, (ci, m)| if *ci == q(0) { acc } else { &acc + &m.scale(ci) })
        })
        .collect();
    Ok((b.ambient, basis))
}

/// Diagrams of the nilpotent orbits of a complex classical Lie algebra met
/// by the 0/1-combinations of a root-vector basis of `n⁺`.
pub fn complex_diagrams(space: &FormedSpace) -> Result<BTreeSet<Vec<u32>>> {
    assert_eq!(space.base(), Base::C);
    let (amb, basis) = borel_nilradical(space)?;
    let n = amb.n();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << basis.len()) {
        let mut x = Mat::zeros(n, n);
        for (k, b) in basis.iter().enumerate() {
            if mask >> k & 1 == 1 {
                x = &x + b;
            }
        }
        let shape = diagram_from_ranks(&rank_sequence(&x)?, 1);
        out.insert(shape.iter().flat_map(|&(t, i)| std::iter::repeat_n(t, i as usize)).collect());
    }
    Ok(out)
}

/// Real orbits met by integer combinations of a basis of `g` with
/// coefficients in `[-r, r]`.
pub fn real_orbits(space: &FormedSpace, r: i64) -> Result<BTreeSet<AdmissibleTableau>> {
    let amb = Ambient::standard(space);
    let g = amb.lie_algebra().to_vec();
    let n = amb.n();
    let mut out = BTreeSet::new();
    let width = (2 * r + 1) as u64;
    let total = width.pow(g.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut x = Mat::zeros(n, n);
        for m in &g {
            let k = (c % width) as i64 - r;
            c /= width;
            if k != 0 {
                x = &x + &m.scale(&q(k));
            }
        }
        if !x.pow(n as u32).is_zero() {
            continue;
        }
        out.insert(identify(&x, &amb)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Epsilon;

    #[test]
    fn sp4_census() {
        let d = complex_diagrams(&FormedSpace::complex(Epsilon::Minus, 4).unwrap()).unwrap();
        assert_eq!(d.len(), 4);
    }

    #[test]
    fn sl2_real_census() {
        assert_eq!(real_orbits(&FormedSpace::real_symplectic(2).unwrap(), 1).unwrap().len(), 3);
        assert_eq!(real_orbits(&FormedSpace::orthogonal(2, 1), 1).unwrap().len(), 2);
    }
}
