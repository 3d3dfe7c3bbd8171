//! Restriction of scalars: vectors over ℝ, ℂ or ℍ written in real
//! coordinates, coordinate `c·d + a` standing for the `a`-th real unit
//! (`1, i, j, k`) of the `c`-th D-coordinate.

use num_traits::Zero;

use super::linalg::{q, Mat, Q};
use crate::forms::{Base, Division, Epsilon, FormedSpace, Invariant};

/// A quaternion `a + b i + c j + d k`; complex numbers and reals sit inside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quat(pub Q, pub Q, pub Q, pub Q);

impl Quat {
    pub fn real(x: Q) -> Self {
        Quat(x, Q::zero(), Q::zero(), Q::zero())
    }

    pub fn zero() -> Self {
        Quat::real(Q::zero())
    }

    /// The `a`-th real unit.
    pub fn unit(a: usize) -> Self {
        let mut c = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
        c[a] = q(1);
        let [w, x, y, z] = c;
        Quat(w, x, y, z)
    }

    pub fn conj(&self) -> Self {
        Quat(self.0.clone(), -self.1.clone(), -self.2.clone(), -self.3.clone())
    }

    pub fn mul(&self, o: &Quat) -> Quat {
        let (a1, b1, c1, d1) = (&self.0, &self.1, &self.2, &self.3);
        let (a2, b2, c2, d2) = (&o.0, &o.1, &o.2, &o.3);
        Quat(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    pub fn coord(&self, a: usize) -> &Q {
        match a {
            0 => &self.0,
            1 => &self.1,
            2 => &self.2,
            _ => &self.3,
        }
    }

    pub fn scale(&self, s: &Q) -> Quat {
        Quat(&self.0 * s, &self.1 * s, &self.2 * s, &self.3 * s)
    }
}

/// Real dimension of the division algebra used for the realization. Over
/// the complex base field everything is done over ℚ ⊂ ℂ, so this is 1.
pub fn real_units(space: &FormedSpace) -> usize {
    match (space.base(), space.division()) {
        (Base::C, _) | (Base::R, Division::R) => 1,
        (Base::R, Division::C) => 2,
        (Base::R, Division::H) => 4,
    }
}

/// Real matrix of `v ↦ z·v` on a D-matrix of size rows × cols.
pub fn realify(m: &[Vec<Quat>], d: usize) -> Mat {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Mat::zeros(rows * d, cols * d);
    for (r, row) in m.iter().enumerate() {
        for (c, z) in row.iter().enumerate() {
            if *z == Quat::zero() {
                continue;
            }
            for b in 0..d {
                let img = z.mul(&Quat::unit(b));
                for a in 0..d {
                    out.set(r * d + a, c * d + b, img.coord(a).clone());
                }
            }
        }
    }
    out
}

/// Real Gram matrix of `Re h` for a D-valued Gram matrix `g` of an
/// ε-Hermitian form, conjugate-linear in the first slot.
pub fn realify_form(g: &[Vec<Quat>], d: usize) -> Mat {
    let n = g.len();
    let mut out = Mat::zeros(n * d, n * d);
    for (r, row) in g.iter().enumerate() {
        for (c, z) in row.iter().enumerate() {
            if *z == Quat::zero() {
                continue;
            }
            for a in 0..d {
                let left = Quat::unit(a).conj().mul(z);
                for b in 0..d {
                    out.set(r * d + a, c * d + b, left.mul(&Quat::unit(b)).0);
                }
            }
        }
    }
    out
}

/// Real matrices of right multiplication by `i` (and `j` for ℍ) on `n`
/// D-coordinates. D-linear maps are the real maps commuting with these.
pub fn structure_matrices(n: usize, d: usize) -> Vec<Mat> {
    let units: &[usize] = match d {
        1 => &[],
        2 => &[1],
        _ => &[1, 2],
    };
    units
        .iter()
        .map(|&u| {
            let mut block = Mat::zeros(d, d);
            for b in 0..d {
                let img = Quat::unit(b).mul(&Quat::unit(u));
                for a in 0..d {
                    block.set(a, b, img.coord(a).clone());
                }
            }
            Mat::identity(n).kron(&block)
        })
        .collect()
}

/// A D-valued Gram matrix in the isometry class of `space`.
pub fn standard_gram(space: &FormedSpace) -> Vec<Vec<Quat>> {
    let n = space.dim() as usize;
    let mut g = vec![vec![Quat::zero(); n]; n];
    match (space.base(), space.division(), space.epsilon(), space.invariant) {
        (Base::R, Division::C, Epsilon::Minus, Invariant::Signature(p, _)) => {
            for (i, row) in g.iter_mut().enumerate() {
                let s = if i < p as usize { 1 } else { -1 };
                row[i] = Quat(Q::zero(), q(s), Q::zero(), Q::zero());
            }
        }
        (_, _, Epsilon::Plus, Invariant::Signature(p, _)) => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = Quat::real(q(if i < p as usize { 1 } else { -1 }));
            }
        }
        (Base::R, Division::H, Epsilon::Minus, _) => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = Quat::unit(2);
            }
        }
        (_, _, Epsilon::Minus, _) => {
            let h = n / 2;
            for i in 0..h {
                g[i][h + i] = Quat::real(q(1));
                g[h + i][i] = Quat::real(q(-1));
            }
        }
        (Base::C, _, Epsilon::Plus, _) => {
            for i in 0..n {
                g[i][n - 1 - i] = Quat::real(q(1));
            }
        }
        _ => unreachable!("invariant kind is fixed by the type"),
    }
    g
}

/// Signature of the real symmetric form `B(x, y)` on a real basis, divided
/// by `d`; for skew-Hermitian complex forms the form `B(x·i, y)` is used.
pub fn hermitian_signature(
    form: impl Fn(&[Q], &[Q]) -> Q,
    basis: &[Vec<Q>],
    structure: &[Mat],
    d: usize,
    skew_complex: bool,
) -> (u32, u32, u32) {
    let left: Vec<Vec<Q>> = if skew_complex {
        basis.iter().map(|v| structure[0].mul_vec(v)).collect()
    } else {
        basis.to_vec()
    };
    let m = Mat::from_fn(basis.len(), basis.len(), |a, b| form(&left[a], &basis[b]));
    let (p, n, z) = m.inertia();
    ((p / d) as u32, (n / d) as u32, (z / d) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = (Quat::unit(1), Quat::unit(2), Quat::unit(3));
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.scale(&q(-1)));
        assert_eq!(i.mul(&i), Quat::real(q(-1)));
        assert_eq!(k.mul(&k), Quat::real(q(-1)));
    }

    #[test]
    fn realified_forms_have_the_right_symmetry() {
        let cases = [
            FormedSpace::new(Base::R, Division::C, Epsilon::Plus, Invariant::Signature(1, 1)).unwrap(),
            FormedSpace::new(Base::R, Division::C, Epsilon::Minus, Invariant::Signature(2, 0)).unwrap(),
            FormedSpace::new(Base::R, Division::H, Epsilon::Plus, Invariant::Signature(1, 1)).unwrap(),
            FormedSpace::new(Base::R, Division::H, Epsilon::Minus, Invariant::Dim(2)).unwrap(),
        ];
        for s in cases {
            let d = real_units(&s);
            let g = realify_form(&standard_gram(&s), d);
            let sign = if s.epsilon() == Epsilon::Plus { q(1) } else { q(-1) };
            assert_eq!(g.transpose(), g.scale(&sign), "{s}");
            assert!(g.inverse().is_some());
        }
    }

    #[test]
    fn standard_signatures() {
        let s = FormedSpace::new(Base::R, Division::C, Epsilon::Minus, Invariant::Signature(2, 1)).unwrap();
        let g = realify_form(&standard_gram(&s), 2);
        let st = structure_matrices(3, 2);
        let basis: Vec<Vec<Q>> = (0..6).map(|i| (0..6).map(|j| q((i == j) as i64)).collect()).collect();
        let form = |x: &[Q], y: &[Q]| super::super::linalg::dot(x, &g.mul_vec(y));
        assert_eq!(hermitian_signature(form, &basis, &st, 2, true), (2, 1, 0));
        let h = FormedSpace::new(Base::R, Division::H, Epsilon::Plus, Invariant::Signature(1, 2)).unwrap();
        let g = realify_form(&standard_gram(&h), 4);
        assert_eq!(g.inertia(), (4, 8, 0));
    }

    #[test]
    fn structure_commutes_with_left_multiplication() {
        let z = vec![vec![Quat(q(1), q(2), q(-1), q(3))]];
        let m = realify(&z, 4);
        for r in structure_matrices(1, 4) {
            assert_eq!(&m * &r, &r * &m);
        }
    }
}
