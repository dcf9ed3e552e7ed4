//! Conjugacy classes, involutions, square roots and centralizers.

use serde::{Deserialize, Serialize};

use super::{Elem, Family, Group, IDENTITY};
use crate::error::{Error, Result};

/// Default cap on the group order for orbit-based class computation.
pub const DEFAULT_PROFILE_CAP: usize = 200_000;

/// Conjugacy class data for every element of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyProfile {
    /// `cl(x)` indexed by element.
    pub class_size: Vec<usize>,
    /// `cl(G)`.
    pub class_count: usize,
    /// `#{x ≠ 1 : x² = 1}`.
    pub involution_count: usize,
    /// One element per class, in increasing index order.
    pub class_representatives: Vec<Elem>,
    /// Class id of each element; ids follow `class_representatives`.
    pub class_of: Vec<u32>,
}

impl ConjugacyProfile {
    /// Closed-form profile for the cyclic, elementary abelian and dihedral
    /// families. `None` for the others.
    pub fn analytic(g: &Group) -> Option<Self> {
        let n = g.order();
        match g.family() {
            Family::Cyclic(_) | Family::Elem2(_) => {
                let involutions = (1..n).filter(|&x| g.mul(x, x) == IDENTITY).count();
                Some(ConjugacyProfile {
                    class_size: vec![1; n],
                    class_count: n,
                    involution_count: involutions,
                    class_representatives: (0..n).collect(),
                    class_of: (0..n as u32).collect(),
                })
            }
            Family::Dihedral(m) => {
                // Rotations r^k and r^{-k} pair up. Reflections form one class
                // for odd m and two (by parity of k) for even m.
                let mut class_of = vec![u32::MAX; n];
                let mut reps = Vec::new();
                let mut sizes = vec![0usize; n];
                for k in 0..m {
                    if class_of[k] != u32::MAX {
                        continue;
                    }
                    let id = reps.len() as u32;
                    reps.push(k);
                    let partner = (m - k) % m;
                    class_of[k] = id;
                    class_of[partner] = id;
                    let size = if partner == k { 1 } else { 2 };
                    sizes[k] = size;
                    sizes[partner] = size;
                }
                let parities = if m % 2 == 0 { 2 } else { 1 };
                let refl_size = m / parities;
                for par in 0..parities {
                    let id = reps.len() as u32;
                    reps.push(m + par);
                    for k in (par..m).step_by(parities) {
                        class_of[m + k] = id;
                        sizes[m + k] = refl_size;
                    }
                }
                let involutions = m + usize::from(m % 2 == 0);
                Some(ConjugacyProfile {
                    class_size: sizes,
                    class_count: reps.len(),
                    involution_count: involutions,
                    class_representatives: reps,
                    class_of,
                })
            }
            Family::Symmetric(_) | Family::AffQr(_) => None,
        }
    }

    /// `Σ_x N / cl(x)`, which equals `N · cl(G)` exactly.
    pub fn scaled_reciprocal_sum(&self) -> u128 {
        let n = self.class_size.len() as u128;
        self.class_size.iter().map(|&c| n / c as u128).sum()
    }

    /// Number of elements with `cl(x) ≤ m`.
    pub fn small_class_elements(&self, m: f64) -> usize {
        self.class_size.iter().filter(|&&c| c as f64 <= m).count()
    }
}

/// Profile via analytic formulas where available, else orbit computation
/// under [`DEFAULT_PROFILE_CAP`].
pub fn conjugacy_profile(g: &Group) -> Result<ConjugacyProfile> {
    match ConjugacyProfile::analytic(g) {
        Some(p) => Ok(p),
        None => conjugacy_profile_with_cap(g, DEFAULT_PROFILE_CAP),
    }
}

/// Orbit-by-orbit class computation for any family, refusing groups larger
/// than `cap`.
pub fn conjugacy_profile_with_cap(g: &Group, cap: usize) -> Result<ConjugacyProfile> {
    if g.order() > cap {
        let hint = match g.family() {
            Family::Cyclic(_) | Family::Elem2(_) | Family::Dihedral(_) => {
                "use the analytic profile available for this family".to_string()
            }
            _ => "raise the cap or use a smaller group".to_string(),
        };
        return Err(Error::Capacity { what: "conjugacy profile", cost: g.order() as f64, cap: cap as f64, hint });
    }
    Ok(orbit_profile(g))
}

fn orbit_profile(g: &Group) -> ConjugacyProfile {
    let n = g.order();
    let inverses: Vec<Elem> = (0..n).map(|y| g.inv(y)).collect();
    let mut class_of = vec![u32::MAX; n];
    let mut class_size = vec![0usize; n];
    let mut reps = Vec::new();
    let mut orbit = Vec::new();
    for x in 0..n {
        if class_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        orbit.clear();
        for (y, &yi) in inverses.iter().enumerate() {
            let c = g.mul(g.mul(yi, x), y);
            if class_of[c] == u32::MAX {
                class_of[c] = id;
                orbit.push(c);
            }
        }
        for &c in &orbit {
            class_size[c] = orbit.len();
        }
    }
    let involutions = (1..n).filter(|&x| g.mul(x, x) == IDENTITY).count();
    ConjugacyProfile {
        class_size,
        class_count: reps.len(),
        involution_count: involutions,
        class_representatives: reps,
        class_of,
    }
}

/// `#{y : y² = x}`.
pub fn square_root_count(g: &Group, x: Elem) -> Result<usize> {
    g.check(x)?;
    Ok((0..g.order()).filter(|&y| g.mul(y, y) == x).count())
}

/// Square-root counts for every element at once; sums to `N`.
pub fn square_root_histogram(g: &Group) -> Vec<usize> {
    let mut counts = vec![0usize; g.order()];
    for y in 0..g.order() {
        counts[g.mul(y, y)] += 1;
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Centralizer {
    /// `#{y : y⁻¹xy = x}`.
    pub commuting: usize,
    /// `#{y : y⁻¹xy = x⁻¹}`.
    pub inverting: usize,
}

pub fn centralizer_count(g: &Group, x: Elem) -> Result<Centralizer> {
    g.check(x)?;
    let xi = g.inv(x);
    let mut c = Centralizer { commuting: 0, inverting: 0 };
    for y in 0..g.order() {
        let conj = g.mul(g.mul(g.inv(y), x), y);
        c.commuting += usize::from(conj == x);
        c.inverting += usize::from(conj == xi);
    }
    Ok(c)
}

/// Involution and small-class counts against the three structural
/// conditions of the special-group upper threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub family: String,
    #[serde(rename = "N")]
    pub order: usize,
    pub d: u32,
    pub epsilon: f64,
    /// Class-size cutoff `exp{2 √(ln N · ln ln N)}`.
    #[serde(rename = "M")]
    pub m_cutoff: f64,
    pub involutions: usize,
    pub small_class_elements: usize,
    pub small_class_involutions: usize,
    pub bound_a: f64,
    pub bound_b: f64,
    pub bound_c: f64,
    pub pass_a: bool,
    pub pass_b: bool,
    pub pass_c: bool,
}

/// The class-size cutoff `M(N) = exp{2 √(ln N ln ln N)}`. Requires `N > e`.
pub fn class_size_cutoff(n: f64) -> Result<f64> {
    if !(n > std::f64::consts::E) {
        return Err(Error::arg(format!("N = {n} must exceed e for ln ln N to be defined")));
    }
    let ln = n.ln();
    Ok((2.0 * (ln * ln.ln()).sqrt()).exp())
}

pub fn audit_conditions(g: &Group, d: u32, epsilon: f64) -> Result<AuditReport> {
    if d < 2 {
        return Err(Error::arg(format!("audit needs d ≥ 2, got {d}")));
    }
    if !(epsilon > 0.0) {
        return Err(Error::arg(format!("audit needs ε > 0, got {epsilon}")));
    }
    let n = g.order();
    let m_cutoff = class_size_cutoff(n as f64)?;
    let profile = conjugacy_profile(g)?;
    let nf = n as f64;
    let small = |x: usize| profile.class_size[x] as f64 <= m_cutoff;
    let is_involution = |x: usize| x != IDENTITY && g.mul(x, x) == IDENTITY;
    let small_class_elements = (0..n).filter(|&x| small(x)).count();
    let small_class_involutions = (0..n).filter(|&x| is_involution(x) && small(x)).count();
    let bound_a = nf.powf((2.0 + epsilon) / 4.0);
    let bound_b = nf.powf(1.0 / d as f64);
    let bound_c = nf.powf(1.0 / (2.0 * d as f64));
    Ok(AuditReport {
        family: g.family().to_string(),
        order: n,
        d,
        epsilon,
        m_cutoff,
        involutions: profile.involution_count,
        small_class_elements,
        small_class_involutions,
        bound_a,
        bound_b,
        bound_c,
        pass_a: profile.involution_count as f64 <= bound_a,
        pass_b: small_class_elements as f64 <= bound_b,
        pass_c: small_class_involutions as f64 <= bound_c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> Group {
        Group::from_spec(s).unwrap()
    }

    #[test]
    fn abelian_profiles() {
        let p = conjugacy_profile(&grp("cyclic:6")).unwrap();
        assert!(p.class_size.iter().all(|&c| c == 1));
        assert_eq!(p.class_count, 6);
        assert_eq!(p.involution_count, 1);

        let p = conjugacy_profile(&grp("elem2:3")).unwrap();
        assert_eq!(p.involution_count, 7);
        assert_eq!(p.class_count, 8);
    }

    #[test]
    fn affqr7_profile() {
        let p = conjugacy_profile(&grp("affqr:7")).unwrap();
        assert_eq!(p.involution_count, 0);
        assert_eq!(p.class_count, 5);
        let mut sizes: Vec<usize> = p.class_representatives.iter().map(|&r| p.class_size[r]).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 3, 3, 7, 7]);
    }

    #[test]
    fn analytic_matches_orbits() {
        for spec in [
            "cyclic:1",
            "cyclic:12",
            "elem2:4",
            "dihedral:1",
            "dihedral:2",
            "dihedral:3",
            "dihedral:4",
            "dihedral:9",
            "dihedral:10",
        ] {
            let g = grp(spec);
            let a = ConjugacyProfile::analytic(&g).unwrap();
            let o = orbit_profile(&g);
            assert_eq!(a.class_size, o.class_size, "{spec}");
            assert_eq!(a.class_count, o.class_count, "{spec}");
            assert_eq!(a.involution_count, o.involution_count, "{spec}");
        }
    }

    #[test]
    fn cap_is_enforced_with_hint() {
        let err = conjugacy_profile_with_cap(&grp("cyclic:100"), 50).unwrap_err();
        match err {
            Error::Capacity { hint, .. } => assert!(hint.contains("analytic")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(conjugacy_profile(&grp("cyclic:300000")).is_ok());
    }

    #[test]
    fn square_roots() {
        assert_eq!(square_root_count(&grp("elem2:3"), 0).unwrap(), 8);
        assert_eq!(square_root_count(&grp("cyclic:5"), 3).unwrap(), 1);
        assert_eq!(square_root_count(&grp("dihedral:4"), 0).unwrap(), 6);
        assert!(square_root_count(&grp("cyclic:5"), 5).is_err());
        let h = square_root_histogram(&grp("symmetric:4"));
        assert_eq!(h.iter().sum::<usize>(), 24);
    }

    #[test]
    fn centralizers() {
        let z = grp("cyclic:9");
        for x in 0..9 {
            assert_eq!(centralizer_count(&z, x).unwrap().commuting, 9);
        }
        let d4 = grp("dihedral:4");
        assert_eq!(centralizer_count(&d4, 1).unwrap().commuting, 4);
        let a7 = grp("affqr:7");
        let f20 = a7.affine(2, 0).unwrap();
        assert_eq!(centralizer_count(&a7, f20).unwrap().commuting, 3);
    }

    #[test]
    fn centralizer_matches_orbit_stabilizer() {
        for spec in ["dihedral:6", "symmetric:4", "affqr:11"] {
            let g = grp(spec);
            let p = conjugacy_profile(&g).unwrap();
            for x in 0..g.order() {
                let c = centralizer_count(&g, x).unwrap();
                assert_eq!(c.commuting * p.class_size[x], g.order());
                assert!(c.inverting * p.class_size[x] <= g.order());
            }
        }
    }

    #[test]
    fn audit_examples() {
        let r = audit_conditions(&grp("elem2:10"), 2, 0.1).unwrap();
        assert_eq!(r.involutions, 1023);
        assert!((r.bound_a - 1024f64.powf(0.525)).abs() < 1e-9);
        assert!(!r.pass_a);

        let r = audit_conditions(&grp("cyclic:50"), 2, 0.1).unwrap();
        assert_eq!(r.small_class_elements, 50);
        assert!(!r.pass_b);

        assert!(audit_conditions(&grp("cyclic:2"), 2, 0.1).is_err());
        assert!(audit_conditions(&grp("cyclic:20"), 1, 0.1).is_err());
        assert!(audit_conditions(&grp("cyclic:20"), 2, 0.0).is_err());
    }

    #[test]
    fn audit_affqr179() {
        let r = audit_conditions(&grp("affqr:179"), 2, 0.1).unwrap();
        assert_eq!(r.order, 15931);
        assert!(r.pass_a);
        assert_eq!(r.involutions, 0);
        assert!((r.m_cutoff - 1.17e4).abs() < 0.01e4, "M = {}", r.m_cutoff);
        assert_eq!(r.small_class_elements, 15931);
        assert!(!r.pass_b);
    }
}
