//! Formed spaces: finite-dimensional right modules over a division algebra
//! carrying a non-degenerate ε-Hermitian form, recorded by their discrete
//! invariants only (signature or dimension, depending on the type).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Base {
    R,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Division {
    R,
    C,
    H,
}

/// Symmetry sign of a form: `Plus` for Hermitian/symmetric, `Minus` for
/// skew-Hermitian/alternating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn value(self) -> i8 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Epsilon::Plus),
            -1 => Ok(Epsilon::Minus),
            _ => Err(Error::InvalidSpace(format!("epsilon must be 1 or -1, got {v}"))),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Epsilon::Plus => Epsilon::Minus,
            Epsilon::Minus => Epsilon::Plus,
        }
    }

    /// `(-1)^k · self`
    pub fn twist(self, k: u32) -> Self {
        if k.is_multiple_of(2) {
            self
        } else {
            self.flip()
        }
    }
}

impl Serialize for Epsilon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Epsilon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Epsilon::from_value(v).map_err(serde::de::Error::custom)
    }
}

/// The classifying invariant of a formed space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    Signature(u32, u32),
    Dim(u32),
}

/// The type of a formed space: everything except its invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormType {
    pub base: Base,
    pub division: Division,
    pub epsilon: Epsilon,
}

impl FormType {
    pub fn new(base: Base, division: Division, epsilon: Epsilon) -> Result<Self> {
        if base == Base::C && division != Division::C {
            return Err(Error::InvalidSpace(
                "over the complex base field the division algebra must be C".into(),
            ));
        }
        Ok(FormType { base, division, epsilon })
    }

    /// Whether spaces of this type are classified by a signature (as opposed
    /// to their dimension alone).
    pub fn signature_classified(self) -> bool {
        match (self.base, self.division, self.epsilon) {
            (Base::C, _, _) => false,
            (Base::R, Division::R, Epsilon::Plus) => true,
            (Base::R, Division::R, Epsilon::Minus) => false,
            (Base::R, Division::C, _) => true,
            (Base::R, Division::H, Epsilon::Plus) => true,
            (Base::R, Division::H, Epsilon::Minus) => false,
        }
    }

    /// Dimension-classified types which only exist in even dimension.
    pub fn needs_even_dim(self) -> bool {
        self.epsilon == Epsilon::Minus
            && matches!(
                (self.base, self.division),
                (Base::R, Division::R) | (Base::C, Division::C)
            )
    }

    /// `dim_F D`
    pub fn d(self) -> u32 {
        match (self.base, self.division) {
            (Base::C, _) => 1,
            (Base::R, Division::R) => 1,
            (Base::R, Division::C) => 2,
            (Base::R, Division::H) => 4,
        }
    }

    /// `dim_F {t ∈ D : t̄ = ε t}`
    pub fn d1(self) -> u32 {
        match (self.base, self.division, self.epsilon) {
            (Base::C, _, Epsilon::Plus) => 1,
            (Base::C, _, Epsilon::Minus) => 0,
            (Base::R, Division::R, Epsilon::Plus) => 1,
            (Base::R, Division::R, Epsilon::Minus) => 0,
            (Base::R, Division::C, _) => 1,
            (Base::R, Division::H, Epsilon::Plus) => 1,
            (Base::R, Division::H, Epsilon::Minus) => 3,
        }
    }

    pub fn with_epsilon(self, epsilon: Epsilon) -> Self {
        FormType { epsilon, ..self }
    }

    /// The zero space of this type.
    pub fn zero(self) -> FormedSpace {
        let invariant = if self.signature_classified() {
            Invariant::Signature(0, 0)
        } else {
            Invariant::Dim(0)
        };
        FormedSpace { ty: self, invariant }
    }

    /// All spaces of this type of D-dimension `n`, in canonical order
    /// (signatures by decreasing `p`).
    pub fn spaces_of_dim(self, n: u32) -> Vec<FormedSpace> {
        if self.signature_classified() {
            (0..=n)
                .rev()
                .map(|p| FormedSpace { ty: self, invariant: Invariant::Signature(p, n - p) })
                .collect()
        } else if self.needs_even_dim() && n % 2 == 1 {
            Vec::new()
        } else {
            vec![FormedSpace { ty: self, invariant: Invariant::Dim(n) }]
        }
    }
}

/// An ε-Hermitian space up to isometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormedSpace {
    pub ty: FormType,
    pub invariant: Invariant,
}

impl FormedSpace {
    pub fn new(base: Base, division: Division, epsilon: Epsilon, invariant: Invariant) -> Result<Self> {
        let ty = FormType::new(base, division, epsilon)?;
        match (ty.signature_classified(), invariant) {
            (true, Invariant::Signature(..)) => {}
            (false, Invariant::Dim(n)) => {
                if ty.needs_even_dim() && n % 2 == 1 {
                    return Err(Error::InvalidSpace(format!(
                        "alternating forms need even dimension, got {n}"
                    )));
                }
            }
            (true, Invariant::Dim(_)) => {
                return Err(Error::InvalidSpace("this type is classified by a signature".into()))
            }
            (false, Invariant::Signature(..)) => {
                return Err(Error::InvalidSpace("this type is classified by its dimension".into()))
            }
        }
        Ok(FormedSpace { ty, invariant })
    }

    /// Real quadratic space of signature (p, q).
    pub fn orthogonal(p: u32, q: u32) -> Self {
        FormedSpace::new(Base::R, Division::R, Epsilon::Plus, Invariant::Signature(p, q)).unwrap()
    }

    /// Real symplectic space of dimension `n` (even).
    pub fn real_symplectic(n: u32) -> Result<Self> {
        FormedSpace::new(Base::R, Division::R, Epsilon::Minus, Invariant::Dim(n))
    }

    /// Complex orthogonal (`Plus`) or symplectic (`Minus`) space.
    pub fn complex(epsilon: Epsilon, n: u32) -> Result<Self> {
        FormedSpace::new(Base::C, Division::C, epsilon, Invariant::Dim(n))
    }

    pub fn base(&self) -> Base {
        self.ty.base
    }

    pub fn division(&self) -> Division {
        self.ty.division
    }

    pub fn epsilon(&self) -> Epsilon {
        self.ty.epsilon
    }

    /// Dimension over the division algebra.
    pub fn dim(&self) -> u32 {
        match self.invariant {
            Invariant::Signature(p, q) => p + q,
            Invariant::Dim(n) => n,
        }
    }

    /// Dimension over the base field.
    pub fn dim_f(&self) -> u32 {
        self.ty.d() * self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The same space with the form negated. Only signatures notice.
    pub fn negate(&self) -> Self {
        match self.invariant {
            Invariant::Signature(p, q) => FormedSpace { ty: self.ty, invariant: Invariant::Signature(q, p) },
            Invariant::Dim(_) => *self,
        }
    }

    fn same_type(&self, other: &FormedSpace) -> Result<()> {
        if self.ty != other.ty {
            return Err(Error::MismatchedType(format!("{self} vs {other}")));
        }
        Ok(())
    }
}

/// Orthogonal direct sum.
pub fn direct_sum(a: &FormedSpace, b: &FormedSpace) -> Result<FormedSpace> {
    a.same_type(b)?;
    let invariant = match (a.invariant, b.invariant) {
        (Invariant::Signature(p1, q1), Invariant::Signature(p2, q2)) => Invariant::Signature(p1 + p2, q1 + q2),
        (Invariant::Dim(n1), Invariant::Dim(n2)) => Invariant::Dim(n1 + n2),
        _ => unreachable!("same type implies same invariant kind"),
    };
    Ok(FormedSpace { ty: a.ty, invariant })
}

/// Signature of the invariant form `(·,·)_m` on the `m`-dimensional sl2
/// module, for odd `m` (for even `m` the form is alternating).
///
/// The form is normalized so that it pairs the highest weight vector with
/// the lowest weight vector `x^{m-1}`-image positively: `(e_{m-1}, e_0) = 1`
/// where `x e_k = e_{k+1}`. The weight-zero vector then has norm
/// `(-1)^{(m-1)/2}`, so the signature alternates between `((m+1)/2, (m-1)/2)`
/// for `m ≡ 1 (mod 4)` and `((m-1)/2, (m+1)/2)` for `m ≡ 3 (mod 4)`. With this
/// choice the multiplicity forms survive descent unchanged.
pub fn sl2_form_signature(m: u32) -> (u32, u32) {
    assert!(m % 2 == 1, "(·,·)_m is symmetric only for odd m");
    let half = (m - 1) / 2;
    if half.is_multiple_of(2) {
        (half + 1, half)
    } else {
        (half, half + 1)
    }
}

/// `A ⊗ (F^m, (·,·)_m)`.
pub fn tensor_with_sl2(a: &FormedSpace, m: u32) -> Result<FormedSpace> {
    if m == 0 {
        return Err(Error::BadShape("sl2 module of dimension 0".into()));
    }
    let ty = a.ty.with_epsilon(a.ty.epsilon.twist(m - 1));
    let n = a.dim() * m;
    let invariant = if !ty.signature_classified() {
        Invariant::Dim(n)
    } else if m.is_multiple_of(2) {
        // an alternating factor has a Lagrangian, so the product is split
        Invariant::Signature(n / 2, n / 2)
    } else {
        let (sp, sq) = sl2_form_signature(m);
        match a.invariant {
            Invariant::Signature(p, q) => Invariant::Signature(p * sp + q * sq, p * sq + q * sp),
            Invariant::Dim(_) => unreachable!("odd m keeps the type"),
        }
    };
    Ok(FormedSpace { ty, invariant })
}

/// Whether `b ≅ a ⊕ c` for some formed space `c`.
pub fn embeds(a: &FormedSpace, b: &FormedSpace) -> Result<bool> {
    a.same_type(b)?;
    Ok(match (a.invariant, b.invariant) {
        (Invariant::Signature(p1, q1), Invariant::Signature(p2, q2)) => p1 <= p2 && q1 <= q2,
        (Invariant::Dim(n1), Invariant::Dim(n2)) => n1 <= n2,
        _ => unreachable!(),
    })
}

/// The orthogonal complement of `a` in `b`, unique by Witt cancellation.
pub fn orth_complement(a: &FormedSpace, b: &FormedSpace) -> Result<FormedSpace> {
    if !embeds(a, b)? {
        return Err(Error::NotEmbeddable { inner: a.to_string(), outer: b.to_string() });
    }
    let invariant = match (a.invariant, b.invariant) {
        (Invariant::Signature(p1, q1), Invariant::Signature(p2, q2)) => Invariant::Signature(p2 - p1, q2 - q1),
        (Invariant::Dim(n1), Invariant::Dim(n2)) => Invariant::Dim(n2 - n1),
        _ => unreachable!(),
    };
    Ok(FormedSpace { ty: a.ty, invariant })
}

/// One simple factor of an isometry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum GroupFactor {
    /// `O(p,q)`
    O { p: u32, q: u32 },
    /// `Sp(2n,R)`; `dim` is `2n`.
    SpR { dim: u32 },
    /// `U(p,q)`
    U { p: u32, q: u32 },
    /// quaternionic `Sp(p,q)`
    SpPQ { p: u32, q: u32 },
    /// `O*(2n)`; `n` is the quaternionic dimension.
    OStar { n: u32 },
    /// `O(n,C)`
    OC { n: u32 },
    /// `Sp(2n,C)`; `dim` is `2n`.
    SpC { dim: u32 },
}

impl GroupFactor {
    /// Dimension of the Lie algebra, real for real groups and complex for
    /// complex ones.
    pub fn lie_dim(&self) -> u32 {
        match *self {
            GroupFactor::O { p, q } => {
                let n = p + q;
                n * n.saturating_sub(1) / 2
            }
            GroupFactor::OC { n } => n * n.saturating_sub(1) / 2,
            GroupFactor::SpR { dim } | GroupFactor::SpC { dim } => {
                let n = dim / 2;
                n * (2 * n + 1)
            }
            GroupFactor::U { p, q } => (p + q) * (p + q),
            GroupFactor::SpPQ { p, q } => {
                let n = p + q;
                n * (2 * n + 1)
            }
            GroupFactor::OStar { n } => n * (2 * n).saturating_sub(1),
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, GroupFactor::OC { .. } | GroupFactor::SpC { .. })
    }
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupFactor::O { p, q } => write!(f, "O({p},{q})"),
            GroupFactor::SpR { dim } => write!(f, "Sp({dim},R)"),
            GroupFactor::U { p, q } => write!(f, "U({p},{q})"),
            GroupFactor::SpPQ { p, q } => write!(f, "Sp({p},{q})"),
            GroupFactor::OStar { n } => write!(f, "O*({})", 2 * n),
            GroupFactor::OC { n } => write!(f, "O({n},C)"),
            GroupFactor::SpC { dim } => write!(f, "Sp({dim},C)"),
        }
    }
}

/// A product of classical groups. The empty product is the trivial group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub factors: Vec<GroupFactor>,
}

impl GroupDescriptor {
    pub fn trivial() -> Self {
        GroupDescriptor::default()
    }

    pub fn product(parts: impl IntoIterator<Item = GroupDescriptor>) -> Self {
        GroupDescriptor { factors: parts.into_iter().flat_map(|g| g.factors).collect() }
    }

    pub fn lie_dim(&self) -> u32 {
        self.factors.iter().map(GroupFactor::lie_dim).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// A single real symplectic factor `Sp(2n,R)`.
    pub fn is_real_symplectic(&self) -> bool {
        matches!(self.factors.as_slice(), [GroupFactor::SpR { .. }])
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" × "))
    }
}

/// The isometry group of `a`. The zero space gives the trivial group.
pub fn isometry_group(a: &FormedSpace) -> GroupDescriptor {
    if a.is_zero() {
        return GroupDescriptor::trivial();
    }
    let factor = match (a.base(), a.division(), a.epsilon(), a.invariant) {
        (Base::R, Division::R, Epsilon::Plus, Invariant::Signature(p, q)) => GroupFactor::O { p, q },
        (Base::R, Division::R, Epsilon::Minus, Invariant::Dim(n)) => GroupFactor::SpR { dim: n },
        (Base::R, Division::C, _, Invariant::Signature(p, q)) => GroupFactor::U { p, q },
        (Base::R, Division::H, Epsilon::Plus, Invariant::Signature(p, q)) => GroupFactor::SpPQ { p, q },
        (Base::R, Division::H, Epsilon::Minus, Invariant::Dim(n)) => GroupFactor::OStar { n },
        (Base::C, _, Epsilon::Plus, Invariant::Dim(n)) => GroupFactor::OC { n },
        (Base::C, _, Epsilon::Minus, Invariant::Dim(n)) => GroupFactor::SpC { dim: n },
        _ => unreachable!("invariant kind is fixed by the type"),
    };
    GroupDescriptor { factors: vec![factor] }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::R => "R",
            Base::C => "C",
        })
    }
}

impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Division::R => "R",
            Division::C => "C",
            Division::H => "H",
        })
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::Signature(p, q) => write!(f, "({p},{q})"),
            Invariant::Dim(n) => write!(f, "dim {n}"),
        }
    }
}

impl fmt::Display for FormedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.epsilon() == Epsilon::Plus { "+1" } else { "-1" };
        write!(f, "({},{},{},{})", self.base(), self.division(), sign, self.invariant)
    }
}

#[derive(Serialize, Deserialize)]
struct FormedSpaceWire {
    base: Base,
    division: Division,
    epsilon: Epsilon,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signature: Option<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<u32>,
}

impl Serialize for FormedSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (signature, dim) = match self.invariant {
            Invariant::Signature(p, q) => (Some([p, q]), None),
            Invariant::Dim(n) => (None, Some(n)),
        };
        FormedSpaceWire {
            base: self.base(),
            division: self.division(),
            epsilon: self.epsilon(),
            signature,
            dim,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormedSpace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = FormedSpaceWire::deserialize(d)?;
        let invariant = match (w.signature, w.dim) {
            (Some([p, q]), None) => Invariant::Signature(p, q),
            (None, Some(n)) => Invariant::Dim(n),
            _ => return Err(D::Error::custom("exactly one of \"signature\" and \"dim\" must be present")),
        };
        FormedSpace::new(w.base, w.division, w.epsilon, invariant).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(p: u32, q: u32) -> FormedSpace {
        FormedSpace::orthogonal(p, q)
    }

    fn alt(n: u32) -> FormedSpace {
        FormedSpace::real_symplectic(n).unwrap()
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&sym(1, 0), &sym(0, 1)).unwrap(), sym(1, 1));
        assert_eq!(direct_sum(&alt(2), &alt(4)).unwrap(), alt(6));
        assert_eq!(direct_sum(&sym(1, 0), &alt(2)).unwrap_err().code(), "MismatchedType");
    }

    #[test]
    fn tensor_examples() {
        // (·,·)_3 has signature (1,2) in our normalization
        assert_eq!(tensor_with_sl2(&sym(1, 0), 3).unwrap(), sym(1, 2));
        assert_eq!(tensor_with_sl2(&sym(0, 1), 3).unwrap(), sym(2, 1));
        assert_eq!(tensor_with_sl2(&sym(1, 0), 2).unwrap(), alt(2));
        assert_eq!(tensor_with_sl2(&alt(2), 2).unwrap(), sym(2, 2));
        assert_eq!(tensor_with_sl2(&sym(2, 1), 1).unwrap(), sym(2, 1));
    }

    #[test]
    fn sl2_signatures() {
        assert_eq!(sl2_form_signature(1), (1, 0));
        assert_eq!(sl2_form_signature(3), (1, 2));
        assert_eq!(sl2_form_signature(5), (3, 2));
        assert_eq!(sl2_form_signature(7), (3, 4));
    }

    #[test]
    fn embedding_and_complement() {
        assert!(embeds(&sym(1, 1), &sym(2, 1)).unwrap());
        assert!(!embeds(&sym(0, 2), &sym(2, 1)).unwrap());
        assert!(embeds(&alt(2), &alt(6)).unwrap());
        assert_eq!(orth_complement(&sym(1, 0), &sym(2, 1)).unwrap(), sym(1, 1));
        assert_eq!(orth_complement(&sym(2, 0), &sym(1, 1)).unwrap_err().code(), "NotEmbeddable");
        assert_eq!(orth_complement(&alt(2), &alt(6)).unwrap(), alt(4));
    }

    #[test]
    fn isometry_groups() {
        let g = isometry_group(&sym(2, 1));
        assert_eq!(g.to_string(), "O(2,1)");
        assert_eq!(g.lie_dim(), 3);
        let g = isometry_group(&alt(4));
        assert_eq!(g.to_string(), "Sp(4,R)");
        assert_eq!(g.lie_dim(), 10);
        let g = isometry_group(&FormedSpace::complex(Epsilon::Minus, 4).unwrap());
        assert_eq!(g.to_string(), "Sp(4,C)");
        assert_eq!(g.lie_dim(), 10);
        let h = FormedSpace::new(Base::R, Division::H, Epsilon::Minus, Invariant::Dim(3)).unwrap();
        assert_eq!(isometry_group(&h).to_string(), "O*(6)");
        assert_eq!(isometry_group(&h).lie_dim(), 15);
        assert!(isometry_group(&sym(0, 0)).is_trivial());
    }

    #[test]
    fn validity() {
        assert!(FormedSpace::real_symplectic(3).is_err());
        assert!(FormedSpace::new(Base::C, Division::H, Epsilon::Plus, Invariant::Dim(1)).is_err());
        assert!(FormedSpace::new(Base::R, Division::R, Epsilon::Plus, Invariant::Dim(2)).is_err());
        assert!(FormedSpace::new(Base::R, Division::H, Epsilon::Minus, Invariant::Dim(3)).is_ok());
    }

    #[test]
    fn json_wire_format() {
        let s: FormedSpace =
            serde_json::from_str(r#"{"base":"R","division":"R","epsilon":1,"signature":[2,1]}"#).unwrap();
        assert_eq!(s, sym(2, 1));
        let t: FormedSpace = serde_json::from_str(r#"{"base":"C","division":"C","epsilon":-1,"dim":4}"#).unwrap();
        assert_eq!(t, FormedSpace::complex(Epsilon::Minus, 4).unwrap());
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"base":"C","division":"C","epsilon":-1,"dim":4}"#
        );
        assert!(serde_json::from_str::<FormedSpace>(
            r#"{"base":"R","division":"R","epsilon":1,"signature":[1,1],"dim":2}"#
        )
        .is_err());
        assert!(serde_json::from_str::<FormedSpace>(r#"{"base":"R","division":"R","epsilon":-1,"signature":[1,1]}"#)
            .is_err());
    }
}
