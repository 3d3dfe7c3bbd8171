//! Associated cycles at the level of dimensions: formal sums of real orbits
//! over one complex orbit, their transport along a descent pair, and the
//! convergent-range arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{FormedSpace, GroupDescriptor};
use crate::orbits::{self, AdmissibleTableau};
use crate::theta;

/// `Σ m_i [sO_i]` with all `sO_i` real forms of one complex orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub complex_orbit: AdmissibleTableau,
    pub real_space: FormedSpace,
    terms: BTreeMap<AdmissibleTableau, u64>,
}

impl Cycle {
    pub fn new(complex_orbit: AdmissibleTableau, real_space: FormedSpace) -> Result<Self> {
        orbits::validate(&complex_orbit)?;
        if orbits::complexify_space(&real_space)? != complex_orbit.space {
            return Err(Error::MismatchedType(format!(
                "{real_space} does not complexify to {}",
                complex_orbit.space
            )));
        }
        Ok(Cycle { complex_orbit, real_space, terms: BTreeMap::new() })
    }

    /// Add `mult · [orbit]`.
    pub fn add_term(&mut self, orbit: AdmissibleTableau, mult: u64) -> Result<()> {
        orbits::validate(&orbit)?;
        if orbit.space != self.real_space || orbits::complexify(&orbit)? != self.complex_orbit {
            return Err(Error::MismatchedType(format!("{orbit} is not a real form of {}", self.complex_orbit)));
        }
        if mult > 0 {
            *self.terms.entry(orbit).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn mult(&self, orbit: &AdmissibleTableau) -> u64 {
        self.terms.get(orbit).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AdmissibleTableau, u64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_support(&self, other: &Cycle) -> Result<()> {
        if self.complex_orbit != other.complex_orbit || self.real_space != other.real_space {
            return Err(Error::IncomparableSupports(format!(
                "{} over {} vs {} over {}",
                self.complex_orbit, self.real_space, other.complex_orbit, other.real_space
            )));
        }
        Ok(())
    }

    pub fn plus(&self, other: &Cycle) -> Result<Cycle> {
        self.same_support(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            *out.terms.entry(k.clone()).or_insert(0) += v;
        }
        Ok(out)
    }

    pub fn times(&self, m: u64) -> Cycle {
        let mut out = self.clone();
        out.terms = if m == 0 { BTreeMap::new() } else { self.terms.iter().map(|(k, v)| (k.clone(), v * m)).collect() };
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    orbit: AdmissibleTableau,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct CycleWire {
    complex_orbit: AdmissibleTableau,
    real_space: FormedSpace,
    terms: Vec<TermWire>,
}

impl Serialize for Cycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycleWire {
            complex_orbit: self.complex_orbit.clone(),
            real_space: self.real_space,
            terms: self.terms.iter().map(|(k, &v)| TermWire { orbit: k.clone(), mult: v }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cycle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = CycleWire::deserialize(d)?;
        let mut c = Cycle::new(w.complex_orbit, w.real_space).map_err(D::Error::custom)?;
        for t in w.terms {
            c.add_term(t.orbit, t.mult).map_err(D::Error::custom)?;
        }
        Ok(c)
    }
}

/// Transport a cycle over `O` to the real forms of `O′` in `V′`: each real
/// orbit over `O′` whose real descent is a term of `c` inherits its
/// multiplicity.
///
/// The complex pair must be a strict descent; a non-injective realizer would
/// let several real orbits over `O′` descend to the same term.
pub fn dlift_cycle(o: &AdmissibleTableau, op: &AdmissibleTableau, c: &Cycle, vp_real: &FormedSpace) -> Result<Cycle> {
    if c.complex_orbit != *o {
        return Err(Error::IncomparableSupports(format!("cycle lives over {}, not {o}", c.complex_orbit)));
    }
    let not_pair = |why: String| Error::NotDescentPair(why);
    let dr = match theta::generalized_descent(op, &o.space) {
        Ok(dr) => dr,
        Err(Error::NotInImage) | Err(Error::IncompatiblePair(_)) => {
            return Err(not_pair(format!("{op} does not descend to {}", o.space)))
        }
        Err(e) => return Err(e),
    };
    if dr.target != *o {
        return Err(not_pair(format!("{op} descends to {}, not {o}", dr.target)));
    }
    if !dr.strict {
        return Err(not_pair(format!("descent of {op} is not strict")));
    }
    if orbits::complexify_space(vp_real)? != op.space {
        return Err(not_pair(format!("{vp_real} does not complexify to {}", op.space)));
    }
    let mut out = Cycle::new(op.clone(), *vp_real)?;
    for sop in orbits::enumerate_orbits(vp_real)? {
        if orbits::complexify(&sop)? != *op {
            continue;
        }
        if let Some(so) = theta::k_descent(&sop, &c.real_space)? {
            let m = c.mult(&so);
            if m > 0 {
                out.add_term(sop, m)?;
            }
        }
    }
    Ok(out)
}

/// Componentwise `c1 ≤ c2`.
pub fn cycle_leq(c1: &Cycle, c2: &Cycle) -> Result<bool> {
    c1.same_support(c2)?;
    Ok(c1.terms.iter().all(|(k, &v)| v <= c2.mult(k)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeReport {
    #[serde(rename = "dim_circ_V", with = "crate::rational")]
    pub dim_circ_v: BigRational,
    #[serde(with = "crate::rational")]
    pub exponent: BigRational,
    #[serde(with = "crate::rational")]
    pub threshold: BigRational,
    #[serde(with = "crate::rational")]
    pub nu: BigRational,
    pub in_range: bool,
}

/// `dim°V = dim_F V − 2 d₁ / d`.
pub fn dim_circ(v: &FormedSpace) -> BigRational {
    let int = |n: u32| BigRational::from_integer(BigInt::from(n));
    int(v.dim_f()) - int(2 * v.ty.d1()) / int(v.ty.d())
}

pub fn range_report(nu: &BigRational, v: &FormedSpace, vp: &FormedSpace) -> Result<RangeReport> {
    let dc = dim_circ(v);
    if dc <= BigRational::from_integer(0.into()) {
        return Err(Error::NonpositiveDimCirc);
    }
    let exponent = BigRational::from_integer(vp.dim_f().into()) / &dc;
    let threshold = BigRational::from_integer(2.into()) - &exponent;
    Ok(RangeReport { in_range: *nu > threshold, dim_circ_v: dc, exponent, threshold, nu: nu.clone() })
}

/// The column-partition hypothesis: at least two columns, and `c₀ > c₁` when
/// `G` is a real symplectic group.
pub fn equality_hypotheses(op: &AdmissibleTableau, g: &GroupDescriptor) -> bool {
    let cols = orbits::column_partition(op);
    if cols.len() < 2 {
        return false;
    }
    !g.is_real_symplectic() || cols[0] > cols[1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{Base, Division, Epsilon, Invariant};
    use crate::orbits::{complex_orbit, Row};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sp2r_orbit(p: u32, q: u32) -> AdmissibleTableau {
        AdmissibleTableau::new(
            FormedSpace::real_symplectic(2).unwrap(),
            vec![Row { t: 2, mult: FormedSpace::orthogonal(p, q) }],
        )
        .unwrap()
    }

    #[test]
    fn dlift_sp2_to_o21() {
        let o = complex_orbit(Epsilon::Minus, &[2]).unwrap();
        let op = complex_orbit(Epsilon::Plus, &[3]).unwrap();
        let mut c = Cycle::new(o.clone(), FormedSpace::real_symplectic(2).unwrap()).unwrap();
        c.add_term(sp2r_orbit(1, 0), 2).unwrap();
        c.add_term(sp2r_orbit(0, 1), 5).unwrap();
        let out = dlift_cycle(&o, &op, &c, &FormedSpace::orthogonal(2, 1)).unwrap();
        let terms: Vec<(AdmissibleTableau, u64)> = out.terms().map(|(k, v)| (k.clone(), v)).collect();
        let o21 = AdmissibleTableau::new(
            FormedSpace::orthogonal(2, 1),
            vec![Row { t: 3, mult: FormedSpace::orthogonal(0, 1) }],
        )
        .unwrap();
        assert_eq!(terms, vec![(o21, 5)]);

        let empty = Cycle::new(o.clone(), FormedSpace::real_symplectic(2).unwrap()).unwrap();
        assert!(dlift_cycle(&o, &op, &empty, &FormedSpace::orthogonal(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn dlift_rejects_non_descent_pairs() {
        let o = complex_orbit(Epsilon::Minus, &[2]).unwrap();
        let op = complex_orbit(Epsilon::Plus, &[2, 2]).unwrap();
        let c = Cycle::new(o.clone(), FormedSpace::real_symplectic(2).unwrap()).unwrap();
        assert_eq!(dlift_cycle(&o, &op, &c, &FormedSpace::orthogonal(2, 2)).unwrap_err().code(), "NotDescentPair");
    }

    #[test]
    fn partial_order() {
        let o = complex_orbit(Epsilon::Minus, &[2]).unwrap();
        let mk = |a: u64, b: u64| {
            let mut c = Cycle::new(o.clone(), FormedSpace::real_symplectic(2).unwrap()).unwrap();
            c.add_term(sp2r_orbit(1, 0), a).unwrap();
            c.add_term(sp2r_orbit(0, 1), b).unwrap();
            c
        };
        assert!(cycle_leq(&mk(1, 2), &mk(2, 2)).unwrap());
        assert!(!cycle_leq(&mk(2, 1), &mk(1, 2)).unwrap());
        assert!(!cycle_leq(&mk(1, 2), &mk(2, 1)).unwrap());
        assert!(cycle_leq(&mk(3, 4), &mk(3, 4)).unwrap());
        let other = Cycle::new(complex_orbit(Epsilon::Minus, &[1, 1]).unwrap(), FormedSpace::real_symplectic(2).unwrap())
            .unwrap();
        assert_eq!(cycle_leq(&mk(1, 1), &other).unwrap_err().code(), "IncomparableSupports");
    }

    #[test]
    fn dim_circ_table() {
        assert_eq!(dim_circ(&FormedSpace::orthogonal(3, 2)), r(3, 1));
        assert_eq!(dim_circ(&FormedSpace::real_symplectic(6).unwrap()), r(6, 1));
        let u = FormedSpace::new(Base::R, Division::C, Epsilon::Minus, Invariant::Signature(2, 1)).unwrap();
        assert_eq!(dim_circ(&u), r(5, 1));
        let h = FormedSpace::new(Base::R, Division::H, Epsilon::Plus, Invariant::Signature(1, 1)).unwrap();
        assert_eq!(dim_circ(&h), r(15, 2));
        let hs = FormedSpace::new(Base::R, Division::H, Epsilon::Minus, Invariant::Dim(2)).unwrap();
        assert_eq!(dim_circ(&hs), r(13, 2));
    }

    #[test]
    fn range_examples() {
        let v = FormedSpace::real_symplectic(4).unwrap();
        let rep = range_report(&r(1, 1), &v, &FormedSpace::orthogonal(5, 0)).unwrap();
        assert_eq!(rep.threshold, r(3, 4));
        assert!(rep.in_range);
        let rep = range_report(&r(1, 1), &v, &FormedSpace::orthogonal(4, 0)).unwrap();
        assert_eq!(rep.threshold, r(1, 1));
        assert!(!rep.in_range);
        assert_eq!(
            range_report(&r(1, 1), &FormedSpace::orthogonal(2, 0), &v).unwrap_err(),
            Error::NonpositiveDimCirc
        );
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["threshold"], "1/1");
        assert_eq!(json["dim_circ_V"], "4/1");
    }

    #[test]
    fn column_hypotheses() {
        let sp = GroupDescriptor { factors: vec![crate::forms::GroupFactor::SpR { dim: 4 }] };
        assert!(equality_hypotheses(&complex_orbit(Epsilon::Plus, &[3, 1]).unwrap(), &sp));
        assert!(!equality_hypotheses(&complex_orbit(Epsilon::Minus, &[2, 2]).unwrap(), &sp));
        assert!(!equality_hypotheses(&complex_orbit(Epsilon::Minus, &[1, 1, 1, 1]).unwrap(), &sp));
    }

    #[test]
    fn cycle_json_round_trip() {
        let o = complex_orbit(Epsilon::Minus, &[2]).unwrap();
        let mut c = Cycle::new(o, FormedSpace::real_symplectic(2).unwrap()).unwrap();
        c.add_term(sp2r_orbit(1, 0), 3).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let back: Cycle = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
