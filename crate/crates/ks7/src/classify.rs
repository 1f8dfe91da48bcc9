//! The classification layer: which homotopy 7-spheres admit free circle
//! actions, which residues r mod 28 are realized by circle-bundle total
//! spaces homeomorphic to S2 x S5 (with spin or nonspin orbit), and the
//! resulting decision procedure for k S2xS5 # l S3xS4 # Sigma_r.
//!
//! Realization sets are produced by bounded exhaustive search over the
//! constrained parameter families, with every stored witness re-verified
//! through the generic characteristic-number pipeline rather than just the
//! closed forms. The witness kept per residue is the lexicographically least
//! tuple encountered.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::exactmath::QmodZ;
use crate::kreckstolz::{
    s_closed_type1, s_generic_type1, same_diffeo_class, target_invariants_type1, SInvariants,
};
use crate::sixfold::{SpinType, TypeIBase};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("sphere index {0} is out of range 0..28")]
    SphereIndexOutOfRange(i64),
}

/// A homotopy 7-sphere Sigma_r, indexed by r mod 28; Sigma_0 is the standard
/// sphere and the smooth invariant of Sigma_r is r/28 mod 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SphereClass {
    r: u8,
}

impl SphereClass {
    /// Strict constructor: r must already lie in 0..28.
    pub fn new(r: i64) -> Result<Self, ClassifyError> {
        if (0..28).contains(&r) {
            Ok(SphereClass { r: r as u8 })
        } else {
            Err(ClassifyError::SphereIndexOutOfRange(r))
        }
    }

    /// Canonicalizing constructor: reduces any integer mod 28.
    pub fn reduce(r: &BigInt) -> Self {
        let r = r.mod_floor(&BigInt::from(28)).to_u8().unwrap();
        SphereClass { r }
    }

    pub fn r(self) -> u8 {
        self.r
    }

    /// The smooth invariant r/28 in Q/Z.
    pub fn mu(self) -> QmodZ {
        QmodZ::reduce(crate::exactmath::Rational::ratio(i64::from(self.r), 28))
    }
}

/// The connected sum k S2xS5 # l S3xS4 # Sigma_r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldSpec {
    pub k: u64,
    pub l: u64,
    pub sphere: SphereClass,
}

impl ManifoldSpec {
    pub fn new(k: u64, l: u64, sphere: SphereClass) -> Self {
        ManifoldSpec { k, l, sphere }
    }
}

/// The residues r mod 28 of the homotopy 7-spheres admitting a free circle
/// action: { (18 eps u^2 + 4u) mod 28 : eps = +-1, u mod 14 }.
pub fn sphere_action_set() -> BTreeSet<u8> {
    let r_of = |eps: i64, u: i64| (18 * eps * u * u + 4 * u).rem_euclid(28) as u8;
    // the parameterization has period 14 in u; confirm before truncating
    for eps in [1i64, -1] {
        for u in 0..14 {
            assert_eq!(r_of(eps, u), r_of(eps, u + 14));
        }
    }
    let mut set = BTreeSet::new();
    for eps in [1i64, -1] {
        for u in 0..14 {
            set.insert(r_of(eps, u));
        }
    }
    set
}

/// Whether Sigma_r admits a free circle action.
pub fn sphere_admits_free_action(sphere: SphereClass) -> bool {
    sphere_action_set().contains(&sphere.r())
}

/// Residues realized as orbit invariants, with one witness base per residue.
/// Every witness reproduces (r/28, 0, 0, 0) through the generic pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationSet {
    pub members: BTreeSet<u8>,
    pub witnesses: BTreeMap<u8, TypeIBase>,
}

impl Serialize for RealizationSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("members", &self.members)?;
        let witnesses: BTreeMap<String, &TypeIBase> = self
            .witnesses
            .iter()
            .map(|(r, base)| (r.to_string(), base))
            .collect();
        map.serialize_entry("witnesses", &witnesses)?;
        map.end()
    }
}

/// Reads r from s1 = r/28; callers must have checked 28 s1 = 0 first, which
/// forces the denominator of s1 to divide 28.
fn residue_from_s1(s: &SInvariants) -> u8 {
    assert!(s.s1_times_28.is_zero(), "s1 must be a multiple of 1/28");
    let s1 = s.s1.residue();
    let den = s1.denominator();
    let quot = BigInt::from(28) / den;
    debug_assert_eq!(&quot * den, BigInt::from(28));
    (s1.numerator() * quot).to_u8().unwrap()
}

fn verify_witness_through_pipeline(base: &TypeIBase, r: u8) {
    let s = s_generic_type1(base).expect("witness must have unimodular M_e");
    let target = target_invariants_type1(&BigInt::from(r));
    assert!(
        same_diffeo_class(&s, &target) && s.s1_times_28.is_zero(),
        "witness {base:?} fails pipeline re-verification for r = {r}"
    );
}

/// Enumerates the residues r such that some base of the given spin type has
/// orbit-space invariants (r/28, 0, 0, 0), searching the constrained
/// parameter families with all coordinates in [-bound, bound]:
///
/// - spin: A = 8 A1 with B^2 = 8 A1 C + 1, C odd, and A1, B, C, D, u, v
///   ranging over the bound;
/// - nonspin: A = 2 A1, C = 2 C1 with 4 A1 C1 - B^2 = -1, and A1, B, C1, D,
///   u, v ranging over the bound.
///
/// A tuple is kept exactly when its closed-form invariants satisfy
/// 28 s1 = s2 = s3 = 0.
pub fn realization_set(orbit: SpinType, bound: u32) -> RealizationSet {
    let b = i64::from(bound);
    let mut members = BTreeSet::new();
    let mut witnesses: BTreeMap<u8, TypeIBase> = BTreeMap::new();

    let mut consider_form = |spin: SpinType, a: i64, bb: i64, c: i64, d: i64| {
        // s2, s3 and 28 s1 do not depend on (u, v) once they vanish at
        // (0, 0): the u and v terms of the closed forms are integral for
        // every form passing the (0, 0) filter.
        let at_origin = TypeIBase::new(spin, a, bb, c, d, 0, 0);
        let s0 = s_closed_type1(&at_origin).expect("enumerated form must satisfy preconditions");
        if !(s0.s1_times_28.is_zero() && s0.s2.is_zero() && s0.s3.is_zero()) {
            return;
        }
        for u in -b..=b {
            for v in -b..=b {
                let base = TypeIBase::new(spin, a, bb, c, d, u, v);
                let s = s_closed_type1(&base).unwrap();
                debug_assert!(s.s1_times_28.is_zero() && s.s2.is_zero() && s.s3.is_zero());
                let r = residue_from_s1(&s);
                if members.insert(r) {
                    verify_witness_through_pipeline(&base, r);
                    witnesses.insert(r, base);
                }
            }
        }
    };

    match orbit {
        SpinType::Spin => {
            for a1 in -b..=b {
                for bb in -b..=b {
                    for c in (-b..=b).filter(|c| c.rem_euclid(2) == 1) {
                        if bb * bb != 8 * a1 * c + 1 {
                            continue; // det(M_e) = -1 with A = 8 A1
                        }
                        for d in -b..=b {
                            consider_form(SpinType::Spin, 8 * a1, bb, c, d);
                        }
                    }
                }
            }
        }
        SpinType::NonspinE => {
            for a1 in -b..=b {
                for bb in -b..=b {
                    for c1 in -b..=b {
                        if 4 * a1 * c1 - bb * bb != -1 {
                            continue; // det(M_e) = -1 with A = 2 A1, C = 2 C1
                        }
                        for d in -b..=b {
                            consider_form(SpinType::NonspinE, 2 * a1, bb, 2 * c1, d);
                        }
                    }
                }
            }
        }
    }

    RealizationSet { members, witnesses }
}

/// A base realizing the given residue within the search bound, verified
/// through the generic pipeline; `None` if the bounded search finds nothing.
pub fn find_witness(r: SphereClass, orbit: SpinType, bound: u32) -> Option<TypeIBase> {
    let set = realization_set(orbit, bound);
    set.witnesses.get(&r.r()).cloned()
}

/// Uniform sample of structurally valid nonspin bases with all coordinates
/// in [-coord_bound, coord_bound]: B odd is drawn first, then a divisor
/// splitting of (B^2 - 1)/4 into A1 * C1 within range.
pub fn sample_nonspin_bases(
    count: usize,
    coord_bound: u32,
    seed: u64,
) -> impl Iterator<Item = TypeIBase> {
    let bound = i64::from(coord_bound);
    let half = bound / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |_| loop {
        let b = 2 * rng.gen_range(-(bound + 1) / 2..=(bound - 1) / 2) + 1;
        debug_assert!(b.abs() <= bound && b % 2 != 0);
        let m = (b * b - 1) / 4; // A1 * C1
        let mut splits: Vec<(i64, i64)> = Vec::new();
        if m == 0 {
            for x in -half..=half {
                splits.push((0, x));
                splits.push((x, 0));
            }
        } else {
            for a1 in -half..=half {
                if a1 != 0 && m % a1 == 0 && (m / a1).abs() <= half {
                    splits.push((a1, m / a1));
                }
            }
        }
        if splits.is_empty() {
            continue;
        }
        let (a1, c1) = splits[rng.gen_range(0..splits.len())];
        let d = rng.gen_range(-bound..=bound);
        let u = rng.gen_range(-bound..=bound);
        let v = rng.gen_range(-bound..=bound);
        let base = TypeIBase::new(SpinType::NonspinE, 2 * a1, b, 2 * c1, d, u, v);
        debug_assert!(crate::sixfold::validate_type1(&base).is_valid());
        return base;
    })
}

/// Verdict on whether a free circle action with nonspin orbit can exist on a
/// spin manifold with the cohomology of k S2 x S5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NonspinOrbitVerdict {
    No,
    Possible,
    Unknown,
}

/// Even k: impossible, by the parity of determinants of odd-size symmetric
/// zero-diagonal matrices over the two-element field. k = 1: possible (for
/// even r). Odd k >= 3: undecided; no verdict is extrapolated.
pub fn nonspin_orbit_possible(k: u64) -> NonspinOrbitVerdict {
    assert!(k >= 1, "k must be positive");
    if k % 2 == 0 {
        NonspinOrbitVerdict::No
    } else if k == 1 {
        NonspinOrbitVerdict::Possible
    } else {
        NonspinOrbitVerdict::Unknown
    }
}

/// Decision for k S2xS5 # l S3xS4 # Sigma_r, together with which clause of
/// the case split applied and, where it mattered, whether Sigma_r itself
/// admits a free circle action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub admits: bool,
    pub case: u8,
    pub sphere_admits: Option<bool>,
}

/// The five-clause case split:
/// 1. k >= 2: yes.
/// 2. k = 1, l even: yes.
/// 3. k = 1, l odd: iff Sigma_r admits a free circle action.
/// 4. k = 0, l even: iff Sigma_r admits a free circle action.
/// 5. k = 0, l odd: iff r = 0.
pub fn admits_free_circle_action(spec: &ManifoldSpec) -> Decision {
    let ManifoldSpec { k, l, sphere } = *spec;
    if k >= 2 {
        Decision {
            admits: true,
            case: 1,
            sphere_admits: None,
        }
    } else if k == 1 && l % 2 == 0 {
        Decision {
            admits: true,
            case: 2,
            sphere_admits: None,
        }
    } else if k == 1 {
        let member = sphere_admits_free_action(sphere);
        Decision {
            admits: member,
            case: 3,
            sphere_admits: Some(member),
        }
    } else if l % 2 == 0 {
        let member = sphere_admits_free_action(sphere);
        Decision {
            admits: member,
            case: 4,
            sphere_admits: Some(member),
        }
    } else {
        Decision {
            admits: sphere.r() == 0,
            case: 5,
            sphere_admits: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kreckstolz::s_closed_type1_nonspin;

    fn sphere(r: i64) -> SphereClass {
        SphereClass::new(r).unwrap()
    }

    #[test]
    fn sphere_class_bounds() {
        assert!(SphereClass::new(27).is_ok());
        assert_eq!(
            SphereClass::new(28).unwrap_err(),
            ClassifyError::SphereIndexOutOfRange(28)
        );
        assert!(SphereClass::new(-1).is_err());
        assert_eq!(SphereClass::reduce(&BigInt::from(-6)).r(), 22);
    }

    #[test]
    fn sphere_set_is_the_expected_ten_residues() {
        let set = sphere_action_set();
        assert_eq!(
            set.iter().copied().collect::<Vec<_>>(),
            vec![0, 4, 6, 8, 10, 14, 18, 20, 22, 24]
        );
    }

    #[test]
    fn sphere_set_is_negation_closed() {
        let set = sphere_action_set();
        for &r in &set {
            assert!(set.contains(&((28 - r) % 28)), "missing 28 - {r}");
        }
    }

    #[test]
    fn sphere_admits_examples() {
        assert!(sphere_admits_free_action(sphere(0)));
        assert!(!sphere_admits_free_action(sphere(2)));
        assert!(sphere_admits_free_action(sphere(14)));
        assert!(sphere_admits_free_action(sphere(22)));
        assert!(!sphere_admits_free_action(sphere(13)));
    }

    #[test]
    fn decision_examples() {
        let d = admits_free_circle_action(&ManifoldSpec::new(2, 5, sphere(13)));
        assert_eq!((d.admits, d.case), (true, 1));

        let d = admits_free_circle_action(&ManifoldSpec::new(1, 2, sphere(13)));
        assert_eq!((d.admits, d.case), (true, 2));

        let d = admits_free_circle_action(&ManifoldSpec::new(1, 1, sphere(13)));
        assert_eq!((d.admits, d.case, d.sphere_admits), (false, 3, Some(false)));

        let d = admits_free_circle_action(&ManifoldSpec::new(1, 1, sphere(14)));
        assert_eq!((d.admits, d.case), (true, 3));

        let d = admits_free_circle_action(&ManifoldSpec::new(0, 2, sphere(2)));
        assert_eq!((d.admits, d.case, d.sphere_admits), (false, 4, Some(false)));

        let d = admits_free_circle_action(&ManifoldSpec::new(0, 3, sphere(0)));
        assert_eq!((d.admits, d.case), (true, 5));
        let d = admits_free_circle_action(&ManifoldSpec::new(0, 3, sphere(1)));
        assert_eq!((d.admits, d.case), (false, 5));
    }

    #[test]
    fn nonspin_orbit_verdicts() {
        assert_eq!(nonspin_orbit_possible(2), NonspinOrbitVerdict::No);
        assert_eq!(nonspin_orbit_possible(4), NonspinOrbitVerdict::No);
        assert_eq!(nonspin_orbit_possible(1), NonspinOrbitVerdict::Possible);
        assert_eq!(nonspin_orbit_possible(3), NonspinOrbitVerdict::Unknown);
    }

    #[test]
    fn realization_bound_zero_is_empty() {
        let set = realization_set(SpinType::NonspinE, 0);
        assert!(set.members.is_empty());
    }

    #[test]
    fn witness_search_small_bounds() {
        // r = 0 is realizable already at bound 1
        let w = find_witness(sphere(0), SpinType::Spin, 1).expect("bound 1 realizes r = 0");
        let s = s_closed_type1(&w).unwrap();
        assert_eq!(s, SInvariants::zero());

        // odd residues never arise from nonspin orbits
        assert!(find_witness(sphere(1), SpinType::NonspinE, 6).is_none());

        let w = find_witness(sphere(14), SpinType::Spin, 6).expect("bound 6 realizes r = 14");
        let s = s_generic_type1(&w).unwrap();
        assert_eq!(s.s1, sphere(14).mu());
    }

    #[test]
    fn sampled_nonspin_bases_are_valid_and_give_even_r() {
        for base in sample_nonspin_bases(500, 50, 123) {
            assert!(crate::sixfold::validate_type1(&base).is_valid());
            let s = s_closed_type1_nonspin(&base).unwrap();
            let r = super::residue_from_s1(&s);
            assert_eq!(r % 2, 0, "odd residue from {base:?}");
        }
    }

    #[test]
    fn realization_set_json_schema() {
        let set = realization_set(SpinType::NonspinE, 1);
        let json = serde_json::to_value(&set).unwrap();
        assert!(json.get("members").is_some());
        assert!(json.get("witnesses").is_some());
        for (key, value) in json["witnesses"].as_object().unwrap() {
            assert!(key.parse::<u8>().unwrap() < 28);
            assert_eq!(value["type"], "I");
        }
    }
}
