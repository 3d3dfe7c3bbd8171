//! Nilpotent orbits as admissible ε-Hermitian Young tableaux.
//!
//! A tableau lists the distinct row lengths `t_1 > t_2 > … > t_l` of the
//! Young diagram; each row length carries its multiplicity space, itself a
//! formed space of sign `(-1)^{t_j-1}·ε`. Admissibility asks that
//! `⊕_j mult_j ⊗ (F^{t_j}, (·,·)_{t_j})` reassemble the ambient space.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{self, Base, Division, Epsilon, FormType, FormedSpace, GroupDescriptor};
use crate::oracle;

/// Largest base-field dimension handled by enumeration and by the oracle.
pub const DEFAULT_BOUND: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Row {
    pub t: u32,
    pub mult: FormedSpace,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdmissibleTableau {
    pub space: FormedSpace,
    pub rows: Vec<Row>,
}

impl AdmissibleTableau {
    /// Build and validate.
    pub fn new(space: FormedSpace, rows: Vec<Row>) -> Result<Self> {
        let tab = AdmissibleTableau { space, rows };
        validate(&tab)?;
        Ok(tab)
    }

    /// The zero orbit `[1^n]`.
    pub fn zero(space: FormedSpace) -> Self {
        let rows = if space.is_zero() { Vec::new() } else { vec![Row { t: 1, mult: space }] };
        AdmissibleTableau { space, rows }
    }

    /// The Young diagram as a weakly decreasing list of row lengths, with
    /// multiplicities counted over the division algebra.
    pub fn diagram(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.t, r.mult.dim() as usize))
            .collect()
    }

    /// The multiplicity space attached to row length `t`, if present.
    pub fn mult_of(&self, t: u32) -> Option<&FormedSpace> {
        self.rows.iter().find(|r| r.t == t).map(|r| &r.mult)
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.rows.iter().all(|r| r.t == 1)
    }

    /// `d^γ` in exponent notation, e.g. `[3,1^2]`.
    pub fn diagram_string(&self) -> String {
        let parts: Vec<String> = self
            .rows
            .iter()
            .map(|r| match r.mult.dim() {
                1 => r.t.to_string(),
                i => format!("{}^{}", r.t, i),
            })
            .collect();
        format!("[{}]", parts.join(","))
    }

    /// ASCII rendering: one line per row length, `#` per box, with the
    /// multiplicity form in brackets.
    pub fn render_ascii(&self) -> String {
        let width = self.rows.first().map(|r| r.t as usize).unwrap_or(0);
        let mut out = String::new();
        for r in &self.rows {
            let boxes = "# ".repeat(r.t as usize);
            let annot = match r.mult.invariant {
                forms::Invariant::Signature(p, q) => format!("x{} ({p},{q})", r.mult.dim()),
                forms::Invariant::Dim(n) => format!("x{n}"),
            };
            out.push_str(&format!("{:<w$} [{}]\n", boxes.trim_end(), annot, w = 2 * width));
        }
        if self.rows.is_empty() {
            out.push_str("(empty)\n");
        }
        out
    }
}

impl fmt::Display for AdmissibleTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.diagram_string(), self.space)?;
        if self.space.ty.signature_classified() {
            let forms: Vec<String> = self.rows.iter().map(|r| format!("{}:{}", r.t, r.mult.invariant)).collect();
            write!(f, " {{{}}}", forms.join(" "))?;
        }
        Ok(())
    }
}

/// Canonical order: diagrams in decreasing lexicographic order, then the
/// multiplicity invariants (signatures by decreasing `p`).
impl Ord for AdmissibleTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.space
            .cmp(&other.space)
            .then_with(|| other.diagram().cmp(&self.diagram()))
            .then_with(|| {
                let key = |t: &AdmissibleTableau| -> Vec<(u32, i64)> {
                    t.rows
                        .iter()
                        .map(|r| match r.mult.invariant {
                            forms::Invariant::Signature(p, _) => (r.t, -(p as i64)),
                            forms::Invariant::Dim(_) => (r.t, 0),
                        })
                        .collect()
                };
                key(self).cmp(&key(other))
            })
    }
}

impl PartialOrd for AdmissibleTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Check shape, signs and admissibility.
pub fn validate(tab: &AdmissibleTableau) -> Result<()> {
    for (i, r) in tab.rows.iter().enumerate() {
        if r.t == 0 {
            return Err(Error::BadShape(format!("row {i} has length 0")));
        }
        if r.mult.is_zero() {
            return Err(Error::BadShape(format!("row {i} has a zero multiplicity space")));
        }
        if i > 0 && tab.rows[i - 1].t <= r.t {
            return Err(Error::BadShape("row lengths must be strictly decreasing".into()));
        }
    }
    for (i, r) in tab.rows.iter().enumerate() {
        if r.mult.base() != tab.space.base() || r.mult.division() != tab.space.division() {
            return Err(Error::MismatchedType(format!("row {i}: {} in {}", r.mult, tab.space)));
        }
        if r.mult.epsilon() != tab.space.epsilon().twist(r.t - 1) {
            return Err(Error::BadSign { row: i });
        }
    }
    let total = reassemble(tab.space.ty, &tab.rows)?;
    if total != tab.space {
        return Err(Error::NotAdmissible { got: total.to_string(), expected: tab.space.to_string() });
    }
    Ok(())
}

/// `⊕_j mult_j ⊗ F^{t_j}` as a space of type `ty`.
pub(crate) fn reassemble(ty: FormType, rows: &[Row]) -> Result<FormedSpace> {
    rows.iter().try_fold(ty.zero(), |acc, r| {
        let piece = forms::tensor_with_sl2(&r.mult, r.t)?;
        forms::direct_sum(&acc, &piece)
    })
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Group a partition into `(row length, multiplicity)` pairs.
fn grouped(partition: &[u32]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &p in partition {
        match out.last_mut() {
            Some((t, i)) if *t == p => *i += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

pub fn enumerate_orbits(space: &FormedSpace) -> Result<Vec<AdmissibleTableau>> {
    enumerate_orbits_bounded(space, DEFAULT_BOUND)
}

/// All nilpotent orbits of the isometry group of `space`, canonically ordered.
pub fn enumerate_orbits_bounded(space: &FormedSpace, bound: usize) -> Result<Vec<AdmissibleTableau>> {
    let dim = space.dim_f() as usize;
    if dim > bound {
        return Err(Error::BoundExceeded { dim, bound });
    }
    let mut out = Vec::new();
    for partition in partitions(space.dim()) {
        let shape = grouped(&partition);
        let choices: Vec<Vec<FormedSpace>> = shape
            .iter()
            .map(|&(t, i)| space.ty.with_epsilon(space.epsilon().twist(t - 1)).spaces_of_dim(i))
            .collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        let mut idx = vec![0usize; shape.len()];
        'product: loop {
            let rows: Vec<Row> = shape
                .iter()
                .zip(&idx)
                .zip(&choices)
                .map(|((&(t, _), &k), c)| Row { t, mult: c[k] })
                .collect();
            if reassemble(space.ty, &rows)? == *space {
                out.push(AdmissibleTableau { space: *space, rows });
            }
            for j in (0..idx.len()).rev() {
                idx[j] += 1;
                if idx[j] < choices[j].len() {
                    continue 'product;
                }
                idx[j] = 0;
            }
            break;
        }
    }
    if space.is_zero() && out.is_empty() {
        out.push(AdmissibleTableau::zero(*space));
    }
    out.sort();
    Ok(out)
}

/// `M_X ≅ ∏_j G(mult_j)`.
pub fn stabilizer(tab: &AdmissibleTableau) -> Result<GroupDescriptor> {
    validate(tab)?;
    Ok(GroupDescriptor::product(tab.rows.iter().map(|r| forms::isometry_group(&r.mult))))
}

/// Dimension of the orbit (complex for base C, real for base R), as
/// `dim g − dim ker ad X` on the matrix realization.
pub fn orbit_dimension(tab: &AdmissibleTableau) -> Result<usize> {
    validate(tab)?;
    let real = oracle::realize_triple(tab)?;
    let g = real.ambient.lie_algebra();
    Ok(g.len() - oracle::centralizer_dim_in(&real.x, g))
}

/// Dominance order on partitions: `a ≤ b` iff every partial sum of `a` is
/// at most the corresponding partial sum of `b`.
pub fn dominates(b: &[u32], a: &[u32]) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0u32, 0u32);
    for k in 0..n {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// `Ō_a ⊆ Ō_b` for complex orbits (dominance of diagrams).
pub fn closure_leq(a: &AdmissibleTableau, b: &AdmissibleTableau) -> Result<bool> {
    if a.space != b.space {
        return Err(Error::MismatchedType(format!("{} vs {}", a.space, b.space)));
    }
    if a.space.base() != Base::C {
        return Err(Error::UnsupportedRealClosure);
    }
    Ok(dominates(&b.diagram(), &a.diagram()))
}

/// The conjugate partition of the diagram.
pub fn column_partition(tab: &AdmissibleTableau) -> Vec<u32> {
    conjugate(&tab.diagram())
}

pub fn conjugate(partition: &[u32]) -> Vec<u32> {
    let longest = partition.first().copied().unwrap_or(0);
    (1..=longest).map(|k| partition.iter().filter(|&&p| p >= k).count() as u32).collect()
}

/// Complexify a space over ℝ with division algebra ℝ or ℍ. Unitary spaces
/// complexify to general linear groups, which are not modeled.
pub fn complexify_space(space: &FormedSpace) -> Result<FormedSpace> {
    match (space.base(), space.division()) {
        (Base::C, _) => Ok(*space),
        (Base::R, Division::R) => FormedSpace::complex(space.epsilon(), space.dim()),
        (Base::R, Division::H) => FormedSpace::complex(space.epsilon().flip(), 2 * space.dim()),
        (Base::R, Division::C) => Err(Error::Unsupported("unitary groups complexify to GL(n,C)".into())),
    }
}

/// Forget the real forms of the multiplicity spaces.
pub fn complexify(tab: &AdmissibleTableau) -> Result<AdmissibleTableau> {
    let space = complexify_space(&tab.space)?;
    let rows = tab
        .rows
        .iter()
        .map(|r| Ok(Row { t: r.t, mult: complexify_space(&r.mult)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(AdmissibleTableau { space, rows })
}

/// Multiplicities of the weights of `H` on `V` (over the division
/// algebra): a row of length `t` contributes `t-1, t-3, …, 1-t`.
pub fn weight_multiplicities(tab: &AdmissibleTableau) -> BTreeMap<i64, u32> {
    let mut out = BTreeMap::new();
    for r in &tab.rows {
        for k in 0..r.t {
            let w = 2 * k as i64 - (r.t as i64 - 1);
            *out.entry(w).or_insert(0) += r.mult.dim();
        }
    }
    out
}

/// Discrete data of the generalized Whittaker model attached to an orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhittakerDatum {
    /// `j ↦ dim g_j`, base-field dimensions, zero entries omitted.
    pub grading: BTreeMap<i64, usize>,
    pub dim_u: usize,
    pub dim_n: usize,
    pub dim_g_minus1: usize,
    pub heisenberg_case: bool,
    pub stabilizer: GroupDescriptor,
}

/// Grading of `g` under `ad H`, read off the oracle realization.
pub fn whittaker_datum(tab: &AdmissibleTableau) -> Result<WhittakerDatum> {
    let stabilizer = stabilizer(tab)?;
    let real = oracle::realize_triple(tab)?;
    let grading = oracle::ad_grading(&real.h, real.ambient.lie_algebra());
    let dim_u: usize = grading.iter().filter(|(j, _)| **j <= -2).map(|(_, d)| d).sum();
    let dim_g_minus1 = grading.get(&-1).copied().unwrap_or(0);
    Ok(WhittakerDatum {
        grading,
        dim_u,
        dim_n: dim_u + dim_g_minus1,
        dim_g_minus1,
        heisenberg_case: dim_g_minus1 != 0,
        stabilizer,
    })
}

/// Shorthand used throughout the tests: a complex orbit given by its
/// partition.
pub fn complex_orbit(epsilon: Epsilon, partition: &[u32]) -> Result<AdmissibleTableau> {
    let n: u32 = partition.iter().sum();
    let space = FormedSpace::complex(epsilon, n)?;
    let rows = grouped(partition)
        .into_iter()
        .map(|(t, i)| Ok(Row { t, mult: FormedSpace::complex(epsilon.twist(t - 1), i)? }))
        .collect::<Result<Vec<_>>>()?;
    AdmissibleTableau::new(space, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Invariant;

    fn c(eps: Epsilon, p: &[u32]) -> AdmissibleTableau {
        complex_orbit(eps, p).unwrap()
    }

    #[test]
    fn validate_examples() {
        // o(2,1), the [3] orbit: with (·,·)_3 of signature (1,2) the
        // multiplicity line must be negative definite
        let v = FormedSpace::orthogonal(2, 1);
        let ok = AdmissibleTableau { space: v, rows: vec![Row { t: 3, mult: FormedSpace::orthogonal(0, 1) }] };
        assert!(validate(&ok).is_ok());
        let bad = AdmissibleTableau { space: v, rows: vec![Row { t: 3, mult: FormedSpace::orthogonal(1, 0) }] };
        assert_eq!(validate(&bad).unwrap_err().code(), "NotAdmissible");
        let shape = AdmissibleTableau {
            space: v,
            rows: vec![
                Row { t: 2, mult: FormedSpace::real_symplectic(2).unwrap() },
                Row { t: 2, mult: FormedSpace::real_symplectic(2).unwrap() },
            ],
        };
        assert_eq!(validate(&shape).unwrap_err().code(), "BadShape");
        let sign = AdmissibleTableau { space: v, rows: vec![Row { t: 2, mult: FormedSpace::orthogonal(1, 0) }] };
        assert_eq!(validate(&sign).unwrap_err(), Error::BadSign { row: 0 });
    }

    #[test]
    fn complex_enumeration() {
        let sp4 = FormedSpace::complex(Epsilon::Minus, 4).unwrap();
        let diagrams: Vec<Vec<u32>> = enumerate_orbits(&sp4).unwrap().iter().map(|t| t.diagram()).collect();
        assert_eq!(diagrams, vec![vec![4], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        let o3 = FormedSpace::complex(Epsilon::Plus, 3).unwrap();
        let diagrams: Vec<Vec<u32>> = enumerate_orbits(&o3).unwrap().iter().map(|t| t.diagram()).collect();
        assert_eq!(diagrams, vec![vec![3], vec![1, 1, 1]]);
    }

    #[test]
    fn real_enumeration() {
        let orbits = enumerate_orbits(&FormedSpace::orthogonal(2, 1)).unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].rows, vec![Row { t: 3, mult: FormedSpace::orthogonal(0, 1) }]);
        assert!(orbits[1].is_zero_orbit());
        let sp2 = enumerate_orbits(&FormedSpace::real_symplectic(2).unwrap()).unwrap();
        assert_eq!(sp2.len(), 3);
        assert_eq!(sp2[0].rows[0].mult.invariant, Invariant::Signature(1, 0));
        assert_eq!(sp2[1].rows[0].mult.invariant, Invariant::Signature(0, 1));
    }

    #[test]
    fn bound_is_enforced() {
        let big = FormedSpace::complex(Epsilon::Plus, 13).unwrap();
        assert_eq!(enumerate_orbits(&big).unwrap_err().code(), "BoundExceeded");
    }

    #[test]
    fn stabilizers() {
        let s = stabilizer(&c(Epsilon::Minus, &[2, 1, 1])).unwrap();
        assert_eq!(s.to_string(), "O(1,C) × Sp(2,C)");
        assert_eq!(s.lie_dim(), 3);
        let zero = AdmissibleTableau::zero(FormedSpace::orthogonal(2, 2));
        assert_eq!(stabilizer(&zero).unwrap().to_string(), "O(2,2)");
        let sp2 = FormedSpace::real_symplectic(2).unwrap();
        let t = AdmissibleTableau::new(sp2, vec![Row { t: 2, mult: FormedSpace::orthogonal(1, 0) }]).unwrap();
        assert_eq!(stabilizer(&t).unwrap().to_string(), "O(1,0)");
    }

    #[test]
    fn closure_order() {
        let a = c(Epsilon::Minus, &[2, 1, 1]);
        let b = c(Epsilon::Minus, &[2, 2]);
        assert!(closure_leq(&a, &b).unwrap());
        assert!(!closure_leq(&b, &a).unwrap());
        assert!(closure_leq(&a, &a).unwrap());
        let r = AdmissibleTableau::zero(FormedSpace::orthogonal(1, 1));
        assert_eq!(closure_leq(&r, &r).unwrap_err(), Error::UnsupportedRealClosure);
    }

    #[test]
    fn columns() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate(&[2, 2]), vec![2, 2]);
        assert_eq!(conjugate(&[1, 1, 1, 1]), vec![4]);
        assert_eq!(column_partition(&c(Epsilon::Plus, &[3, 1])), vec![2, 1, 1]);
    }

    #[test]
    fn complexification_of_quaternionic_rows_doubles() {
        let v = FormedSpace::new(Base::R, Division::H, Epsilon::Plus, Invariant::Signature(1, 0)).unwrap();
        let z = AdmissibleTableau::zero(v);
        let cz = complexify(&z).unwrap();
        assert_eq!(cz.diagram(), vec![1, 1]);
        assert_eq!(cz.space, FormedSpace::complex(Epsilon::Minus, 2).unwrap());
    }

    #[test]
    fn ascii_rendering() {
        let t = AdmissibleTableau::new(
            FormedSpace::orthogonal(2, 2),
            vec![
                Row { t: 3, mult: FormedSpace::orthogonal(0, 1) },
                Row { t: 1, mult: FormedSpace::orthogonal(0, 1) },
            ],
        )
        .unwrap();
        assert_eq!(t.render_ascii(), "# # #  [x1 (0,1)]\n#      [x1 (0,1)]\n");
    }
}
