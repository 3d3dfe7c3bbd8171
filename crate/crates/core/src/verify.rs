//! Verification suites: sweeps comparing every combinatorial answer with the
//! matrix oracle. Each suite reports how many cases it checked and a
//! description of every failure.

use std::collections::HashMap;
use std::str::FromStr;
use std::time::Instant;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cycles::{self, Cycle};
use crate::error::{Error, Result};
use crate::forms::{Base, Division, Epsilon, FormedSpace, GroupDescriptor, GroupFactor, Invariant};
use crate::oracle::{self, census, sample};
use crate::orbits::{self, AdmissibleTableau, Row};
use crate::theta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Enumeration,
    Descent,
    DimIdentity,
    Lift,
    Stabilizer,
    Cycles,
    Range,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Enumeration,
        Suite::Descent,
        Suite::DimIdentity,
        Suite::Lift,
        Suite::Stabilizer,
        Suite::Cycles,
        Suite::Range,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Enumeration => "enumeration",
            Suite::Descent => "descent",
            Suite::DimIdentity => "dim-identity",
            Suite::Lift => "lift",
            Suite::Stabilizer => "stabilizer",
            Suite::Cycles => "cycles",
            Suite::Range => "range",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    /// largest dimension of `V` in pair sweeps
    pub max_v: u32,
    /// largest dimension of `V′` in pair sweeps
    pub max_vp: u32,
    pub seed: u64,
    /// random maps per pair
    pub samples: usize,
    /// random cycles per pair
    pub cycles: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_v: 4, max_vp: 6, seed: 0, samples: 200, cycles: 60 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    /// cases where the statement under test does not apply (e.g. undefined
    /// lift)
    pub skipped: usize,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport { suite: suite.name().into(), checked: 0, skipped: 0, failures: Vec::new(), millis: 0 }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.checked += 1;
        self.failures.push(what);
    }
}

pub fn run(suite: Suite, cfg: &Config) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::EACH.iter().map(|&s| run_one(s, cfg)).collect(),
        s => vec![run_one(s, cfg)],
    }
}

fn run_one(suite: Suite, cfg: &Config) -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new(suite);
    match suite {
        Suite::Enumeration => enumeration(cfg, &mut rep),
        Suite::Descent => descent(cfg, &mut rep),
        Suite::DimIdentity => dim_identity(cfg, &mut rep),
        Suite::Lift => lift(cfg, &mut rep),
        Suite::Stabilizer => stabilizer(cfg, &mut rep),
        Suite::Cycles => cycle_laws(cfg, &mut rep),
        Suite::Range => range(&mut rep),
        Suite::All => unreachable!(),
    }
    rep.millis = start.elapsed().as_millis();
    rep
}

fn complex(eps: Epsilon, n: u32) -> FormedSpace {
    FormedSpace::complex(eps, n).expect("valid complex space")
}

/// All complex dual pairs `(V, V′)` with `dim V ≤ max_v`, `dim V′ ≤ max_vp`.
pub fn complex_pairs(max_v: u32, max_vp: u32) -> Vec<(FormedSpace, FormedSpace)> {
    let mut out = Vec::new();
    for a in 1..=max_v {
        for b in (2..=max_vp).step_by(2) {
            out.push((complex(Epsilon::Plus, a), complex(Epsilon::Minus, b)));
        }
    }
    for a in (2..=max_v).step_by(2) {
        for b in 1..=max_vp {
            out.push((complex(Epsilon::Minus, a), complex(Epsilon::Plus, b)));
        }
    }
    out
}

/// Every `(O′, descent)` with `O′` in the moment image, over the complex
/// pairs in range.
fn descent_pairs(cfg: &Config) -> Result<Vec<(FormedSpace, FormedSpace, theta::DescentResult)>> {
    let mut out = Vec::new();
    for (v, vp) in complex_pairs(cfg.max_v, cfg.max_vp) {
        for op in orbits::enumerate_orbits(&vp)? {
            if theta::in_moment_image(&op, &v)? {
                out.push((v, vp, theta::generalized_descent(&op, &v)?));
            }
        }
    }
    Ok(out)
}

fn enumeration(_cfg: &Config, rep: &mut SuiteReport) {
    let mut cases: Vec<FormedSpace> = Vec::new();
    for n in 1..=6 {
        cases.push(complex(Epsilon::Plus, n));
        if n % 2 == 0 {
            cases.push(complex(Epsilon::Minus, n));
        }
    }
    for s in cases {
        let combinatorial = match orbits::enumerate_orbits(&s) {
            Ok(v) => v,
            Err(e) => return rep.fail(format!("{s}: {e}")),
        };
        match census::complex_diagrams(&s) {
            Ok(found) => {
                let ours: std::collections::BTreeSet<Vec<u32>> = combinatorial.iter().map(|t| t.diagram()).collect();
                rep.check(ours == found && ours.len() == combinatorial.len(), || {
                    format!("{s}: enumerated {:?}, oracle found {:?}", ours, found)
                });
            }
            Err(e) => rep.fail(format!("{s}: {e}")),
        }
    }
    let real = [
        FormedSpace::orthogonal(2, 1),
        FormedSpace::orthogonal(1, 1),
        FormedSpace::orthogonal(3, 0),
        FormedSpace::real_symplectic(2).unwrap(),
    ];
    for s in real {
        let ours: std::collections::BTreeSet<AdmissibleTableau> = match orbits::enumerate_orbits(&s) {
            Ok(v) => v.into_iter().collect(),
            Err(e) => return rep.fail(format!("{s}: {e}")),
        };
        match census::real_orbits(&s, 1) {
            Ok(found) => rep.check(ours == found, || format!("{s}: enumerated {} orbits, oracle found {}", ours.len(), found.len())),
            Err(e) => rep.fail(format!("{s}: {e}")),
        }
    }
    // every enumerated tableau validates; the order has no duplicates
    for s in [FormedSpace::orthogonal(3, 2), FormedSpace::real_symplectic(6).unwrap(), complex(Epsilon::Minus, 8)] {
        let list = orbits::enumerate_orbits(&s).unwrap_or_default();
        let valid = list.iter().all(|t| orbits::validate(t).is_ok());
        let sorted = list.windows(2).all(|w| w[0] < w[1]);
        rep.check(valid && sorted && !list.is_empty(), || format!("{s}: enumeration not canonical"));
    }
}

fn descent(cfg: &Config, rep: &mut SuiteReport) {
    let pairs = match descent_pairs(cfg) {
        Ok(p) => p,
        Err(e) => return rep.fail(e.to_string()),
    };
    for (v, _, dr) in pairs {
        let outcome = oracle::realize_triple(&dr.source)
            .and_then(|real| oracle::construct_descent_element(&real, &v))
            .and_then(|r| Ok((oracle::check_realizer(&r)?, r.kernel_dim())));
        match outcome {
            Ok((c, k)) => rep.check(
                c.source == dr.source
                    && c.target == dr.target
                    && c.lifts
                    && c.kernel_nondegenerate
                    && c.h_in_algebra
                    && k == dr.b as usize,
                || format!("{} → {}: realizer gives {} → {}", dr.source, dr.target, c.source, c.target),
            ),
            Err(e) => rep.fail(format!("{}: {e}", dr.source)),
        }
    }
    // truncation of random maps
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (v, vp) in complex_pairs(cfg.max_v, cfg.max_vp) {
        for _ in 0..cfg.samples / 10 {
            let outcome = sample::random_nullcone_map(&v, &vp, &mut rng)
                .and_then(|s| oracle::truncate(&s))
                .and_then(|r| oracle::check_realizer(&r));
            match outcome {
                Ok(c) => {
                    let expected = theta::generalized_descent(&c.source, &v).map(|d| d.target);
                    rep.check(
                        c.lifts && c.kernel_nondegenerate && c.h_in_algebra && expected.as_ref() == Ok(&c.target),
                        || format!("truncation over ({v}, {vp}): {} → {}", c.source, c.target),
                    );
                }
                Err(e) => rep.fail(format!("truncation over ({v}, {vp}): {e}")),
            }
        }
    }
}

fn dim_identity(cfg: &Config, rep: &mut SuiteReport) {
    let pairs = match descent_pairs(cfg) {
        Ok(p) => p,
        Err(e) => return rep.fail(e.to_string()),
    };
    for (_, _, dr) in pairs {
        match oracle::verify_dimension_identity(&dr) {
            Ok(r) => rep.check(r.holds(), || format!("{}", dr.source)),
            Err(e) => rep.fail(format!("{}: {e}", dr.source)),
        }
    }
}

fn lift(cfg: &Config, rep: &mut SuiteReport) {
    let pairs = match descent_pairs(cfg) {
        Ok(p) => p,
        Err(e) => return rep.fail(e.to_string()),
    };
    let mut cache: HashMap<(AdmissibleTableau, FormedSpace), Result<AdmissibleTableau>> = HashMap::new();
    let mut lift_of = |o: &AdmissibleTableau, vp: &FormedSpace| {
        cache.entry((o.clone(), *vp)).or_insert_with(|| theta::theta_lift(o, vp)).clone()
    };
    for (_, vp, dr) in &pairs {
        match lift_of(&dr.target, vp) {
            Ok(l) => {
                let contains = orbits::closure_leq(&dr.source, &l).unwrap_or(false);
                rep.check(contains, || format!("lift of descent of {} is {}", dr.source, l));
                if dr.strict {
                    rep.check(l == dr.source, || format!("strict {}: lift of descent is {}", dr.source, l));
                }
            }
            Err(e) => rep.fail(format!("lift of {} to {vp}: {e}", dr.target)),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    for (v, vp) in complex_pairs(cfg.max_v, cfg.max_vp) {
        for _ in 0..cfg.samples {
            let sampled = sample::random_nullcone_map(&v, &vp, &mut rng).and_then(|t| {
                let (x, xp) = oracle::moment_maps(&t);
                Ok((oracle::identify(&x, &t.v)?, oracle::identify(&xp, &t.vp)?))
            });
            let (o, op) = match sampled {
                Ok(p) => p,
                Err(e) => {
                    rep.fail(format!("sampling over ({v}, {vp}): {e}"));
                    continue;
                }
            };
            match lift_of(&o, &vp) {
                Ok(l) => rep.check(orbits::closure_leq(&op, &l).unwrap_or(false), || {
                    format!("φ′(T) in {} is not below the lift {} of {}", op.diagram_string(), l.diagram_string(), o.diagram_string())
                }),
                Err(Error::EmptyLift) | Err(Error::AmbiguousMaximum(_)) => rep.skipped += 1,
                Err(e) => rep.fail(format!("lift of {o}: {e}")),
            }
        }
    }
}

/// Real spaces of small dimension over each division algebra.
fn small_real_spaces(max_dim: u32) -> Vec<FormedSpace> {
    let mut out = Vec::new();
    for n in 1..=max_dim {
        for p in 0..=n {
            out.push(FormedSpace::orthogonal(p, n - p));
        }
        if n % 2 == 0 {
            out.push(FormedSpace::real_symplectic(n).unwrap());
        }
    }
    for n in 1..=max_dim / 2 {
        for p in 0..=n {
            for eps in [Epsilon::Plus, Epsilon::Minus] {
                out.push(FormedSpace::new(Base::R, Division::C, eps, Invariant::Signature(p, n - p)).unwrap());
            }
        }
    }
    for n in 1..=2 {
        for p in 0..=n {
            out.push(FormedSpace::new(Base::R, Division::H, Epsilon::Plus, Invariant::Signature(p, n - p)).unwrap());
        }
        out.push(FormedSpace::new(Base::R, Division::H, Epsilon::Minus, Invariant::Dim(n)).unwrap());
    }
    out
}

fn stabilizer(cfg: &Config, rep: &mut SuiteReport) {
    let top = cfg.max_v.max(cfg.max_vp);
    let mut spaces: Vec<FormedSpace> = (1..=top).map(|n| complex(Epsilon::Plus, n)).collect();
    spaces.extend((2..=top).step_by(2).map(|n| complex(Epsilon::Minus, n)));
    spaces.extend(small_real_spaces(top));
    for s in spaces {
        let list = match orbits::enumerate_orbits(&s) {
            Ok(l) => l,
            Err(e) => return rep.fail(format!("{s}: {e}")),
        };
        for tab in list {
            let outcome = orbits::stabilizer(&tab).and_then(|g| {
                let r = oracle::realize_triple(&tab)?;
                Ok((g.lie_dim() as usize, oracle::triple_centralizer_dim(&r.x, &r.h, &r.ambient)))
            });
            match outcome {
                Ok((ours, theirs)) => rep.check(ours == theirs, || format!("{tab}: M_X has dim {ours}, oracle {theirs}")),
                Err(e) => rep.fail(format!("{tab}: {e}")),
            }
        }
    }
    let pairs = match descent_pairs(cfg) {
        Ok(p) => p,
        Err(e) => return rep.fail(e.to_string()),
    };
    for (_, _, dr) in pairs {
        let pf = theta::pair_factorization(&dr);
        let (Ok(sp), Ok(s)) = (orbits::stabilizer(&dr.source), orbits::stabilizer(&dr.target)) else {
            rep.fail(format!("{}: invalid tableau", dr.source));
            continue;
        };
        rep.check(sp.lie_dim() == pf.m_xxp.lie_dim() + pf.lp.lie_dim(), || {
            format!("{}: M′ = {sp}, M_XX′ × L′ = {} × {}", dr.source, pf.m_xxp, pf.lp)
        });
        rep.check(s.lie_dim() >= pf.m_xxp.lie_dim() + pf.l.lie_dim(), || {
            format!("{}: M = {s}, M_XX′ × L = {} × {}", dr.target, pf.m_xxp, pf.l)
        });
        rep.check(
            pf.l_space.epsilon() == dr.target.space.epsilon() && pf.lp_space.epsilon() == dr.source.space.epsilon(),
            || format!("{}: (L, L′) is not of the type of (G, G′)", dr.source),
        );
    }
}

/// The two real pairs used for cycle transport: `(V, V′, O, O′)`.
pub fn cycle_pairs() -> Vec<(FormedSpace, FormedSpace, AdmissibleTableau, AdmissibleTableau)> {
    let c = |eps, p: &[u32]| orbits::complex_orbit(eps, p).expect("valid complex orbit");
    vec![
        (
            FormedSpace::real_symplectic(2).unwrap(),
            FormedSpace::orthogonal(2, 1),
            c(Epsilon::Minus, &[2]),
            c(Epsilon::Plus, &[3]),
        ),
        (
            FormedSpace::orthogonal(2, 1),
            FormedSpace::real_symplectic(4).unwrap(),
            c(Epsilon::Plus, &[3]),
            c(Epsilon::Minus, &[4]),
        ),
    ]
}

/// A random cycle over `o` in `v` with multiplicities in `0..=9`.
pub fn random_cycle<R: Rng>(o: &AdmissibleTableau, v: &FormedSpace, rng: &mut R) -> Result<Cycle> {
    let mut c = Cycle::new(o.clone(), *v)?;
    for so in orbits::enumerate_orbits(v)? {
        if orbits::complexify(&so)? == *o {
            c.add_term(so, rng.gen_range(0..=9))?;
        }
    }
    Ok(c)
}

fn cycle_laws(cfg: &Config, rep: &mut SuiteReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
    for (v, vp, o, op) in cycle_pairs() {
        let lift = |c: &Cycle| cycles::dlift_cycle(&o, &op, c, &vp);
        for _ in 0..cfg.cycles {
            let outcome = (|| -> Result<()> {
                let c1 = random_cycle(&o, &v, &mut rng)?;
                let c2 = random_cycle(&o, &v, &mut rng)?;
                let m = rng.gen_range(0..=5);
                let (l1, l2) = (lift(&c1)?, lift(&c2)?);
                rep.check(lift(&c1.plus(&c2)?)? == l1.plus(&l2)?, || format!("additivity fails on {v}"));
                rep.check(lift(&c1.times(m))? == l1.times(m), || format!("scaling fails on {v}"));
                rep.check(l1.total() <= c1.total(), || format!("dlift creates multiplicity on {v}"));
                let bigger = c1.plus(&c2)?;
                rep.check(cycles::cycle_leq(&l1, &lift(&bigger)?)?, || format!("monotonicity fails on {v}"));
                if cycles::cycle_leq(&c1, &c2)? {
                    rep.check(cycles::cycle_leq(&l1, &l2)?, || format!("monotonicity fails on {v}"));
                }
                Ok(())
            })();
            if let Err(e) = outcome {
                rep.fail(format!("{v}: {e}"));
            }
        }
    }
}

fn range(rep: &mut SuiteReport) {
    let r = |s: &str| crate::rational::parse(s).expect("literal");
    let cases: Vec<(FormedSpace, BigRational)> = vec![
        (FormedSpace::orthogonal(3, 2), r("3")),
        (FormedSpace::real_symplectic(6).unwrap(), r("6")),
        (FormedSpace::new(Base::R, Division::C, Epsilon::Plus, Invariant::Signature(2, 1)).unwrap(), r("5")),
        (FormedSpace::new(Base::R, Division::C, Epsilon::Minus, Invariant::Signature(1, 1)).unwrap(), r("3")),
        (FormedSpace::new(Base::R, Division::H, Epsilon::Plus, Invariant::Signature(1, 1)).unwrap(), r("15/2")),
        (FormedSpace::new(Base::R, Division::H, Epsilon::Minus, Invariant::Dim(2)).unwrap(), r("13/2")),
    ];
    for (v, expected) in cases {
        let got = cycles::dim_circ(&v);
        rep.check(got == expected, || format!("dim° {v} = {got}, expected {expected}"));
    }
    let sp4 = FormedSpace::real_symplectic(4).unwrap();
    let one = r("1");
    match cycles::range_report(&one, &sp4, &FormedSpace::orthogonal(5, 0)) {
        Ok(rr) => rep.check(rr.in_range && rr.threshold == r("3/4"), || format!("{rr:?}")),
        Err(e) => rep.fail(e.to_string()),
    }
    match cycles::range_report(&one, &sp4, &FormedSpace::orthogonal(4, 0)) {
        Ok(rr) => rep.check(!rr.in_range && rr.threshold == one, || format!("{rr:?}")),
        Err(e) => rep.fail(e.to_string()),
    }
    // the threshold strictly decreases in dim V′
    let mut last: Option<BigRational> = None;
    for m in 1..=8 {
        match cycles::range_report(&one, &sp4, &FormedSpace::orthogonal(m, 0)) {
            Ok(rr) => {
                if let Some(prev) = &last {
                    rep.check(rr.threshold < *prev, || format!("threshold not decreasing at dim V′ = {m}"));
                }
                last = Some(rr.threshold);
            }
            Err(e) => rep.fail(e.to_string()),
        }
    }
    let sp = GroupDescriptor { factors: vec![GroupFactor::SpR { dim: 4 }] };
    let o = GroupDescriptor { factors: vec![GroupFactor::O { p: 2, q: 2 }] };
    let tab = |eps, p: &[u32]| orbits::complex_orbit(eps, p).expect("valid");
    rep.check(cycles::equality_hypotheses(&tab(Epsilon::Plus, &[3, 1]), &sp), || "[3,1] with Sp".into());
    rep.check(!cycles::equality_hypotheses(&tab(Epsilon::Minus, &[2, 2]), &sp), || "[2,2] with Sp".into());
    rep.check(cycles::equality_hypotheses(&tab(Epsilon::Minus, &[2, 2]), &o), || "[2,2] with O".into());
    rep.check(!cycles::equality_hypotheses(&tab(Epsilon::Minus, &[1, 1, 1, 1]), &o), || "[1^4]".into());
    let _ = Row { t: 1, mult: FormedSpace::orthogonal(1, 0) };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let cfg = Config { max_v: 3, max_vp: 4, seed: 7, samples: 20, cycles: 10 };
        for rep in run(Suite::All, &cfg) {
            assert!(rep.passed(), "{}: {:?}", rep.suite, rep.failures);
            assert!(rep.checked > 0, "{}", rep.suite);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
