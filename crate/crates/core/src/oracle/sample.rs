//! Seeded random elements of the nullcone of `Hom(V, V′)`.
//!
//! Both spaces are written in Witt bases (hyperbolic pairs plus an
//! anisotropic part). A random cocharacter gives each pair weights `±w` and
//! the anisotropic part weight 0; a map that strictly raises weight has
//! `T*` raising weight too, so `T*T` and `TT*` are nilpotent.

use rand::Rng;

use super::descent::RationalMap;
use super::linalg::{q, Mat};
use super::realize::Ambient;
use crate::error::{Error, Result};
use crate::forms::{Base, Division, Epsilon, FormedSpace, Invariant};

/// A Witt basis: Gram matrix, hyperbolic pairs `(e, f)` and anisotropic
/// coordinates.
#[derive(Debug, Clone)]
pub struct WittBasis {
    pub ambient: Ambient,
    pub pairs: Vec<(usize, usize)>,
    pub anisotropic: Vec<usize>,
}

pub fn witt_basis(space: &FormedSpace) -> Result<WittBasis> {
    let n = space.dim() as usize;
    let mut g = Mat::zeros(n, n);
    let mut pairs = Vec::new();
    let mut anisotropic = Vec::new();
    let sign = |e: Epsilon| if e == Epsilon::Plus { 1 } else { -1 };
    match (space.base(), space.division(), space.invariant) {
        (Base::C, _, _) => {
            for i in 0..n / 2 {
                let j = n - 1 - i;
                g.set(i, j, q(1));
                g.set(j, i, q(sign(space.epsilon())));
                pairs.push((i, j));
            }
            if n % 2 == 1 {
                g.set(n / 2, n / 2, q(1));
                anisotropic.push(n / 2);
            }
        }
        (Base::R, Division::R, Invariant::Dim(_)) => {
            for i in 0..n / 2 {
                g.set(2 * i, 2 * i + 1, q(1));
                g.set(2 * i + 1, 2 * i, q(-1));
                pairs.push((2 * i, 2 * i + 1));
            }
        }
        (Base::R, Division::R, Invariant::Signature(p, qq)) => {
            let m = p.min(qq) as usize;
            for i in 0..m {
                g.set(2 * i, 2 * i + 1, q(1));
                g.set(2 * i + 1, 2 * i, q(1));
                pairs.push((2 * i, 2 * i + 1));
            }
            for k in 2 * m..n {
                let s = if (k - 2 * m) < (p as usize - m) { 1 } else { -1 };
                g.set(k, k, q(s));
                anisotropic.push(k);
            }
        }
        _ => return Err(Error::Unsupported(format!("random sampling over {space}"))),
    }
    Ok(WittBasis { ambient: Ambient::new(*space, g, Vec::new()), pairs, anisotropic })
}

fn random_weights<R: Rng>(b: &WittBasis, rng: &mut R) -> Vec<i64> {
    let mut w = vec![0i64; b.ambient.n()];
    for &(e, f) in &b.pairs {
        let k = rng.gen_range(0..=3);
        w[e] = k;
        w[f] = -k;
    }
    w
}

/// A random `T ∈ Hom(V, V′)` in the nullcone with integer entries in
/// `[-9, 9]`.
pub fn random_nullcone_map<R: Rng>(v: &FormedSpace, vp: &FormedSpace, rng: &mut R) -> Result<RationalMap> {
    let bv = witt_basis(v)?;
    let bvp = witt_basis(vp)?;
    let w = random_weights(&bv, rng);
    let wp = random_weights(&bvp, rng);
    let t = Mat::from_fn(bvp.ambient.n(), bv.ambient.n(), |i, j| {
        if wp[i] - w[j] >= 1 && rng.gen_bool(0.7) {
            q(rng.gen_range(-9..=9))
        } else {
            q(0)
        }
    });
    Ok(RationalMap::new(bv.ambient, bvp.ambient, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::descent::moment_maps;
    use crate::oracle::identify::rank_sequence;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn witt_bases_have_the_right_invariants() {
        let b = witt_basis(&FormedSpace::orthogonal(3, 1)).unwrap();
        assert_eq!(b.ambient.gram.inertia(), (3, 1, 0));
        assert_eq!(b.pairs.len(), 1);
        let b = witt_basis(&FormedSpace::complex(Epsilon::Minus, 4).unwrap()).unwrap();
        assert_eq!(b.ambient.gram.transpose(), b.ambient.gram.scale(&q(-1)));
    }

    #[test]
    fn samples_are_nilpotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let v = FormedSpace::complex(Epsilon::Plus, 4).unwrap();
        let vp = FormedSpace::complex(Epsilon::Minus, 6).unwrap();
        for _ in 0..20 {
            let m = random_nullcone_map(&v, &vp, &mut rng).unwrap();
            assert!(m.check_adjoint());
            let (x, xp) = moment_maps(&m);
            assert!(rank_sequence(&x).is_ok());
            assert!(rank_sequence(&xp).is_ok());
        }
    }
}
