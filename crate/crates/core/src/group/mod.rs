//! Finite groups with dense element indexing.
//!
//! Every group stores its elements as indices `0..order` with index `0`
//! reserved for the identity. Products follow the left-to-right
//! convention `mul(g, h) = g·h`; for the function groups (symmetric and
//! affine) this is composition `(g·h)(x) = g(h(x))`.

mod affqr;
mod conjugacy;
mod perm;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use conjugacy::{
    audit_conditions, centralizer_count, conjugacy_profile, conjugacy_profile_with_cap, square_root_count,
    square_root_histogram, AuditReport, Centralizer, ConjugacyProfile, DEFAULT_PROFILE_CAP,
};

/// Index of a group element. `0` is always the identity.
pub type Elem = usize;

pub const IDENTITY: Elem = 0;

/// Largest group order the library will construct.
pub const MAX_ORDER: usize = 1 << 32;

/// Largest `n` accepted for the symmetric family.
pub const MAX_SYMMETRIC_DEGREE: usize = 8;

/// The built-in group families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "param", rename_all = "lowercase")]
pub enum Family {
    /// Z_N.
    Cyclic(usize),
    /// Z_2^n.
    Elem2(u32),
    /// Dihedral group of the m-gon, order 2m.
    Dihedral(usize),
    /// S_n, n ≤ 8.
    Symmetric(usize),
    /// Maps x ↦ ax + b over F_p with a a nonzero square, p ≡ 3 (mod 4).
    AffQr(u64),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclic(_) => "cyclic",
            Family::Elem2(_) => "elem2",
            Family::Dihedral(_) => "dihedral",
            Family::Symmetric(_) => "symmetric",
            Family::AffQr(_) => "affqr",
        }
    }

    /// The numeric parameter as written in a family specifier.
    pub fn param(&self) -> u64 {
        match *self {
            Family::Cyclic(n) => n as u64,
            Family::Elem2(n) => n as u64,
            Family::Dihedral(m) => m as u64,
            Family::Symmetric(n) => n as u64,
            Family::AffQr(p) => p,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match *self {
            Family::Cyclic(_) | Family::Elem2(_) => true,
            Family::Dihedral(m) => m <= 2,
            Family::Symmetric(n) => n <= 2,
            Family::AffQr(p) => p == 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name(), self.param())
    }
}

/// Parses `cyclic:N`, `elem2:n`, `dihedral:m`, `symmetric:n` and `affqr:p`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, param) =
            s.split_once(':').ok_or_else(|| Error::arg(format!("family spec `{s}` is not of the form name:param")))?;
        let param: u64 =
            param.trim().parse().map_err(|_| Error::arg(format!("family spec `{s}`: parameter is not an integer")))?;
        let too_big = || Error::construction(format!("family spec `{s}`: parameter overflows"));
        Ok(match name.trim().to_ascii_lowercase().as_str() {
            "cyclic" => Family::Cyclic(usize::try_from(param).map_err(|_| too_big())?),
            "elem2" => Family::Elem2(u32::try_from(param).map_err(|_| too_big())?),
            "dihedral" => Family::Dihedral(usize::try_from(param).map_err(|_| too_big())?),
            "symmetric" => Family::Symmetric(usize::try_from(param).map_err(|_| too_big())?),
            "affqr" => Family::AffQr(param),
            other => return Err(Error::arg(format!("unknown group family `{other}`"))),
        })
    }
}

#[derive(Debug, Clone)]
enum Repr {
    Cyclic,
    Elem2,
    Dihedral { m: usize },
    Symmetric(perm::PermTable),
    AffQr(affqr::AffQrTables),
}

/// A finite group with elements `0..order()`.
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct Group {
    family: Family,
    order: usize,
    repr: Repr,
}

impl Group {
    /// Builds a member of one of the built-in families.
    pub fn new(family: Family) -> Result<Self> {
        let (order, repr) = match family {
            Family::Cyclic(n) => {
                if n == 0 {
                    return Err(Error::construction("cyclic order must be at least 1"));
                }
                if n > MAX_ORDER {
                    return Err(Error::construction(format!("cyclic order {n} exceeds {MAX_ORDER}")));
                }
                (n, Repr::Cyclic)
            }
            Family::Elem2(n) => {
                if n > 32 {
                    return Err(Error::construction(format!("elem2 rank {n} overflows the order limit 2^32")));
                }
                (1usize << n, Repr::Elem2)
            }
            Family::Dihedral(m) => {
                if m == 0 {
                    return Err(Error::construction("dihedral parameter m must be at least 1"));
                }
                if m > MAX_ORDER / 2 {
                    return Err(Error::construction(format!("dihedral order 2·{m} exceeds {MAX_ORDER}")));
                }
                (2 * m, Repr::Dihedral { m })
            }
            Family::Symmetric(n) => {
                if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                    return Err(Error::construction(format!(
                        "symmetric degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {n}"
                    )));
                }
                let table = perm::PermTable::new(n);
                (table.len(), Repr::Symmetric(table))
            }
            Family::AffQr(p) => {
                let tables = affqr::AffQrTables::new(p)?;
                (tables.order(), Repr::AffQr(tables))
            }
        };
        Ok(Group { family, order, repr })
    }

    /// Parses a family specifier and builds the group.
    pub fn from_spec(spec: &str) -> Result<Self> {
        Group::new(spec.parse()?)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.family.is_abelian()
    }

    #[inline]
    pub fn contains(&self, g: Elem) -> bool {
        g < self.order
    }

    /// Product `g·h`. Indices must be in range.
    #[inline]
    pub fn mul(&self, g: Elem, h: Elem) -> Elem {
        debug_assert!(g < self.order && h < self.order);
        match &self.repr {
            Repr::Cyclic => {
                let s = g + h;
                if s >= self.order {
                    s - self.order
                } else {
                    s
                }
            }
            Repr::Elem2 => g ^ h,
            Repr::Dihedral { m } => {
                let m = *m;
                let (a, i) = (g % m, g / m);
                let (b, j) = (h % m, h / m);
                let k = if i == 0 { a + b } else { a + m - b };
                (i ^ j) * m + k % m
            }
            Repr::Symmetric(t) => t.compose(g, h),
            Repr::AffQr(t) => t.mul(g, h),
        }
    }

    /// Inverse `g⁻¹`.
    #[inline]
    pub fn inv(&self, g: Elem) -> Elem {
        debug_assert!(g < self.order);
        match &self.repr {
            Repr::Cyclic => {
                if g == 0 {
                    0
                } else {
                    self.order - g
                }
            }
            Repr::Elem2 => g,
            Repr::Dihedral { m } => {
                let m = *m;
                if g < m {
                    (m - g) % m
                } else {
                    g
                }
            }
            Repr::Symmetric(t) => t.inverse(g),
            Repr::AffQr(t) => t.inv(g),
        }
    }

    /// `g^a` for a sign `a = ±1`.
    #[inline]
    pub fn signed(&self, g: Elem, positive: bool) -> Elem {
        if positive {
            g
        } else {
            self.inv(g)
        }
    }

    /// Checked product; errors on out-of-range indices.
    pub fn op(&self, g: Elem, h: Elem) -> Result<Elem> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul(g, h))
    }

    /// Checked inverse; errors on an out-of-range index.
    pub fn try_inv(&self, g: Elem) -> Result<Elem> {
        self.check(g)?;
        Ok(self.inv(g))
    }

    pub fn check(&self, g: Elem) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::arg(format!("element index {g} out of range for {} (order {})", self.family, self.order)))
        }
    }

    /// Index of `f_{a,b}` in an affqr group, if the coefficients are valid.
    pub fn affine(&self, a: u64, b: u64) -> Option<Elem> {
        match &self.repr {
            Repr::AffQr(t) => t.index_of(a, b),
            _ => None,
        }
    }

    /// Coefficients `(a, b)` of an affqr element.
    pub fn affine_coeffs(&self, g: Elem) -> Option<(u64, u64)> {
        match &self.repr {
            Repr::AffQr(t) if g < self.order => Some(t.coeffs(g)),
            _ => None,
        }
    }

    /// Index of the permutation with images `images` (one-line notation,
    /// 0-based) in a symmetric group.
    pub fn permutation(&self, images: &[usize]) -> Option<Elem> {
        match &self.repr {
            Repr::Symmetric(t) => t.index_of(images),
            _ => None,
        }
    }

    /// Human-readable name of an element.
    pub fn label(&self, g: Elem) -> String {
        match &self.repr {
            Repr::Cyclic => g.to_string(),
            Repr::Elem2 => {
                let n = match self.family {
                    Family::Elem2(n) => n as usize,
                    _ => unreachable!(),
                };
                (0..n).map(|i| if g >> i & 1 == 1 { '1' } else { '0' }).collect()
            }
            Repr::Dihedral { m } => {
                let (k, s) = (g % m, g / m);
                match (k, s) {
                    (0, 0) => "1".into(),
                    (k, 0) => format!("r^{k}"),
                    (0, _) => "s".into(),
                    (k, _) => format!("r^{k}s"),
                }
            }
            Repr::Symmetric(t) => format!("{:?}", t.images(g)),
            Repr::AffQr(t) => {
                let (a, b) = t.coeffs(g);
                format!("f_{{{a},{b}}}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn families() -> Vec<Family> {
        vec![
            Family::Cyclic(1),
            Family::Cyclic(5),
            Family::Cyclic(97),
            Family::Elem2(0),
            Family::Elem2(5),
            Family::Dihedral(1),
            Family::Dihedral(4),
            Family::Dihedral(9),
            Family::Symmetric(1),
            Family::Symmetric(4),
            Family::Symmetric(6),
            Family::AffQr(3),
            Family::AffQr(7),
            Family::AffQr(23),
        ]
    }

    #[test]
    fn group_laws_on_random_triples() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for fam in families() {
            let g = Group::new(fam).unwrap();
            let n = g.order();
            for _ in 0..10_000 {
                let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{fam} associativity");
                assert_eq!(g.mul(a, IDENTITY), a);
                assert_eq!(g.mul(IDENTITY, a), a);
                assert_eq!(g.mul(a, g.inv(a)), IDENTITY);
                assert_eq!(g.mul(g.inv(a), a), IDENTITY);
            }
        }
    }

    #[test]
    fn multiplication_table_is_latin() {
        for fam in families() {
            let g = Group::new(fam).unwrap();
            let n = g.order();
            if n > 800 {
                continue;
            }
            for a in 0..n {
                let mut seen = vec![false; n];
                for b in 0..n {
                    let c = g.mul(a, b);
                    assert!(!seen[c], "{fam}: row {a} repeats {c}");
                    seen[c] = true;
                }
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(Group::from_spec("cyclic:5").unwrap().order(), 5);
        assert_eq!(Group::from_spec("elem2:3").unwrap().order(), 8);
        assert_eq!(Group::from_spec("dihedral:4").unwrap().order(), 8);
        assert_eq!(Group::from_spec("symmetric:5").unwrap().order(), 120);
        assert_eq!(Group::from_spec("affqr:7").unwrap().order(), 21);
        assert_eq!(Group::from_spec("affqr:179").unwrap().order(), 15931);
    }

    #[test]
    fn construction_errors_name_the_constraint() {
        let err = Group::from_spec("affqr:13").unwrap_err();
        assert!(matches!(err, Error::Construction(ref m) if m.contains("3 mod 4")), "{err}");
        let err = Group::from_spec("affqr:15").unwrap_err();
        assert!(matches!(err, Error::Construction(ref m) if m.contains("prime")), "{err}");
        assert!(Group::from_spec("symmetric:9").is_err());
        assert!(Group::from_spec("cyclic:0").is_err());
        assert!(Group::from_spec("elem2:40").is_err());
        assert!(matches!(Group::from_spec("torus:3"), Err(Error::InvalidArgument(_))));
        assert!(matches!(Group::from_spec("cyclic"), Err(Error::InvalidArgument(_))));
        assert!(matches!(Group::from_spec("cyclic:x"), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn cyclic_arithmetic() {
        let z5 = Group::from_spec("cyclic:5").unwrap();
        assert_eq!(z5.op(2, 4).unwrap(), 1);
        assert_eq!(z5.inv(2), 3);
        assert!(z5.op(5, 1).is_err());
        assert!(z5.try_inv(7).is_err());
    }

    #[test]
    fn affqr_composition_convention() {
        let g = Group::from_spec("affqr:7").unwrap();
        let f23 = g.affine(2, 3).unwrap();
        let f41 = g.affine(4, 1).unwrap();
        assert_eq!(g.affine_coeffs(g.mul(f23, f41)), Some((1, 5)));
        assert_eq!(g.affine_coeffs(g.inv(f23)), Some((4, 2)));
        assert_eq!(g.affine(1, 0), Some(IDENTITY));
        // 3 is a non-residue mod 7
        assert_eq!(g.affine(3, 0), None);
        assert_eq!(g.label(f23), "f_{2,3}");
    }

    #[test]
    fn dihedral_relations() {
        let d = Group::from_spec("dihedral:4").unwrap();
        let r = 1;
        let s = 4;
        // s r s = r⁻¹
        assert_eq!(d.mul(d.mul(s, r), s), d.inv(r));
        assert_eq!(d.mul(s, s), IDENTITY);
        assert_eq!(d.label(d.mul(r, s)), "r^1s");
    }

    #[test]
    fn symmetric_composition() {
        let s3 = Group::from_spec("symmetric:3").unwrap();
        let a = s3.permutation(&[1, 0, 2]).unwrap();
        let b = s3.permutation(&[0, 2, 1]).unwrap();
        // (a·b)(i) = a(b(i)): 0→a(0)=1, 1→a(2)=2, 2→a(1)=0
        assert_eq!(s3.mul(a, b), s3.permutation(&[1, 2, 0]).unwrap());
        assert_eq!(s3.permutation(&[0, 1, 2]), Some(IDENTITY));
    }

    #[test]
    fn family_spec_round_trip() {
        for fam in families() {
            let s = fam.to_string();
            assert_eq!(s.parse::<Family>().unwrap(), fam);
        }
    }
}
