//! Models of the simply connected 6-manifolds that arise as orbit spaces of
//! free circle actions: spin type, cubic-form coefficients and first
//! Pontryagin class parameters, together with the parity constraints from the
//! Wu formula, the mod-2 relation between p1 and w2, and the mod-24/mod-48
//! cubic congruence that the cup form must satisfy against p1.
//!
//! Steenrod squares are not modeled; the module encodes the derived parity
//! conditions, which is what every downstream computation consumes. The
//! congruence checks enumerate residues exhaustively: the constraints are
//! polynomial with fixed moduli, so residue exhaustion is a complete decision
//! procedure.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactmath::SymMat2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SixfoldError {
    #[error("cubic form violates the parity constraints for {0:?} bases")]
    ParityViolation(SpinType),
}

/// Spin type of a base: `Spin` means w2 = 0, `NonspinE` means w2 is the
/// mod-2 reduction of the Euler class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpinType {
    Spin,
    NonspinE,
}

impl SpinType {
    pub fn as_str(self) -> &'static str {
        match self {
            SpinType::Spin => "spin",
            SpinType::NonspinE => "nonspinE",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "spin" => Some(SpinType::Spin),
            "nonspinE" => Some(SpinType::NonspinE),
            _ => None,
        }
    }
}

impl fmt::Display for SpinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for SpinType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for SpinType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        SpinType::parse(&s).ok_or_else(|| de::Error::custom(format!("unknown spin type {s:?}")))
    }
}

/// The cubic cup form on a rank-2 second cohomology group, recorded by its
/// values A, B, C, D on the ordered basis (e, f):
/// A = mu(e,e,e), B = mu(e,e,f), C = mu(e,f,f), D = mu(f,f,f).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl CubicForm {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        CubicForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    /// The matrix of cup product with e: [[A, B], [B, C]].
    pub fn me_matrix(&self) -> SymMat2 {
        SymMat2::new(self.a.clone(), self.b.clone(), self.c.clone())
    }

    pub fn det_me(&self) -> BigInt {
        self.me_matrix().det()
    }
}

/// A base whose circle-bundle total space has the cohomology of S2 x S5:
/// spin type, cubic form, and the two integers (u, v) parameterizing p1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeIBase {
    pub spin: SpinType,
    pub form: CubicForm,
    pub u: BigInt,
    pub v: BigInt,
}

impl TypeIBase {
    pub fn new(
        spin: SpinType,
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
        u: impl Into<BigInt>,
        v: impl Into<BigInt>,
    ) -> Self {
        TypeIBase {
            spin,
            form: CubicForm::new(a, b, c, d),
            u: u.into(),
            v: v.into(),
        }
    }

    /// Coefficients (k, l) of p1 on the dual basis:
    /// spin bases have k = 24u + 4A, l = 24v + 4D;
    /// nonspin bases have k = 48u + A, l = 24v + 3B + 6C + 4D.
    pub fn p1_coefficients(&self) -> (BigInt, BigInt) {
        let f = &self.form;
        match self.spin {
            SpinType::Spin => (24 * &self.u + 4 * &f.a, 24 * &self.v + 4 * &f.d),
            SpinType::NonspinE => (
                48 * &self.u + &f.a,
                24 * &self.v + 3 * &f.b + 6 * &f.c + 4 * &f.d,
            ),
        }
    }
}

/// A base whose circle-bundle total space has the cohomology of
/// S2 x S5 # S3 x S4: sign epsilon, the single cubic coefficient A (the full
/// form is (eps, A, eps A^2, A^3)), and the p1 parameter u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeIIBase {
    pub epsilon: BigInt,
    pub a: BigInt,
    pub u: BigInt,
}

impl TypeIIBase {
    pub fn new(epsilon: impl Into<BigInt>, a: impl Into<BigInt>, u: impl Into<BigInt>) -> Self {
        TypeIIBase {
            epsilon: epsilon.into(),
            a: a.into(),
            u: u.into(),
        }
    }

    pub fn cubic_form(&self) -> CubicForm {
        let e = &self.epsilon;
        let a = &self.a;
        CubicForm::new(e.clone(), a.clone(), e * a * a, a * a * a)
    }
}

/// Outcome of structural validation; lists every violated clause so callers
/// can explain a rejection.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, clause: &str) {
        if !ok {
            self.violations.push(clause.to_string());
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            f.write_str("valid")
        } else {
            write!(f, "invalid: {}", self.violations.join("; "))
        }
    }
}

/// Validates a type I base: det(M_e) must be +1 or -1, and the parities must
/// match the spin type (spin: A even, B and C odd; nonspin: A and C even,
/// B odd).
pub fn validate_type1(base: &TypeIBase) -> ValidationReport {
    let mut report = ValidationReport::default();
    let f = &base.form;
    let det = f.det_me();
    report.check(
        det == BigInt::from(1) || det == BigInt::from(-1),
        &format!("det(M_e) = AC - B^2 must be +1 or -1 (got {det})"),
    );
    match base.spin {
        SpinType::Spin => {
            report.check(f.a.is_even(), "A must be even");
            report.check(f.b.is_odd(), "B must be odd");
            report.check(f.c.is_odd(), "C must be odd");
        }
        SpinType::NonspinE => {
            report.check(f.a.is_even(), "A must be even");
            report.check(f.c.is_even(), "C must be even");
            report.check(f.b.is_odd(), "B must be odd");
        }
    }
    report
}

/// Validates a type II base: epsilon must be +1 or -1.
pub fn validate_type2(base: &TypeIIBase) -> ValidationReport {
    let mut report = ValidationReport::default();
    report.check(
        base.epsilon == BigInt::from(1) || base.epsilon == BigInt::from(-1),
        &format!("epsilon must be +1 or -1 (got {})", base.epsilon),
    );
    report
}

/// Parity constraints derived from the Wu formula: spin bases need B + C
/// even; nonspin bases need A and C even.
pub fn wu_parity_constraints(spin: SpinType, form: &CubicForm) -> bool {
    match spin {
        SpinType::Spin => (&form.b + &form.c).is_even(),
        SpinType::NonspinE => form.a.is_even() && form.c.is_even(),
    }
}

/// The mod-2 relation between p1 and the square of w2: spin bases need k
/// and l even; nonspin bases need k = A and l = B mod 2.
pub fn p1_mod2_constraint(spin: SpinType, form: &CubicForm, k: &BigInt, l: &BigInt) -> bool {
    match spin {
        SpinType::Spin => k.is_even() && l.is_even(),
        SpinType::NonspinE => {
            (k - &form.a).is_even() && (l - &form.b).is_even()
        }
    }
}

fn red(x: &BigInt, m: i64) -> i64 {
    x.mod_floor(&BigInt::from(m)).to_i64().unwrap()
}

/// Whether (k, l) is consistent with the cubic congruence linking the cup
/// form and p1.
///
/// Spin: 4AX^3 + 12BX^2Y + 12CXY^2 + 4DY^3 = kX + lY (mod 24) for all X, Y.
/// Nonspin: AX^3 + 6BX^2Y + 12CXY^2 + 8DY^3 = kX + 2lY (mod 48) for all odd
/// X and all Y. Both sides are polynomial in X and Y, so checking one full
/// residue system is a complete decision procedure.
pub fn jupp_check(spin: SpinType, form: &CubicForm, k: &BigInt, l: &BigInt) -> bool {
    match spin {
        SpinType::Spin => {
            const M: i64 = 24;
            let (a, b, c, d) = (
                red(&form.a, M),
                red(&form.b, M),
                red(&form.c, M),
                red(&form.d, M),
            );
            let (k, l) = (red(k, M), red(l, M));
            for x in 0..M {
                for y in 0..M {
                    let lhs = 4 * a * x * x * x
                        + 12 * b * x * x * y
                        + 12 * c * x * y * y
                        + 4 * d * y * y * y;
                    if (lhs - k * x - l * y).rem_euclid(M) != 0 {
                        return false;
                    }
                }
            }
            true
        }
        SpinType::NonspinE => {
            const M: i64 = 48;
            let (a, b, c, d) = (
                red(&form.a, M),
                red(&form.b, M),
                red(&form.c, M),
                red(&form.d, M),
            );
            let (k, l) = (red(k, M), red(l, M));
            for x in (1..M).step_by(2) {
                for y in 0..M {
                    let lhs =
                        a * x * x * x + 6 * b * x * x * y + 12 * c * x * y * y + 8 * d * y * y * y;
                    if (lhs - k * x - 2 * l * y).rem_euclid(M) != 0 {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// All residue pairs (k, l) passing `jupp_check`, with k mod 24 and l mod 24
/// for spin forms, k mod 48 and l mod 24 for nonspin forms. For a form with
/// the right parities the result is the singleton (4A, 4D) resp.
/// (A, 3B + 6C + 4D).
pub fn jupp_solve(spin: SpinType, form: &CubicForm) -> Result<BTreeSet<(i64, i64)>, SixfoldError> {
    if !wu_parity_constraints(spin, form) {
        return Err(SixfoldError::ParityViolation(spin));
    }
    let (k_mod, l_mod) = match spin {
        SpinType::Spin => (24i64, 24i64),
        SpinType::NonspinE => (48, 24),
    };
    let mut solutions = BTreeSet::new();
    for k in 0..k_mod {
        for l in 0..l_mod {
            if jupp_check(spin, form, &BigInt::from(k), &BigInt::from(l)) {
                solutions.insert((k, l));
            }
        }
    }
    Ok(solutions)
}

/// The residue pair predicted by the closed congruences, for comparison with
/// the exhaustive solver.
pub fn jupp_predicted(spin: SpinType, form: &CubicForm) -> (i64, i64) {
    match spin {
        SpinType::Spin => (red(&(4 * &form.a), 24), red(&(4 * &form.d), 24)),
        SpinType::NonspinE => (
            red(&form.a, 48),
            red(&(3 * &form.b + 6 * &form.c + 4 * &form.d), 24),
        ),
    }
}

/// Every cubic form with coordinates in [-bound, bound] that, together with
/// the given spin type, passes `validate_type1`. Ordered lexicographically
/// by (A, B, C, D).
pub fn valid_type1_forms(spin: SpinType, bound: i64) -> Vec<CubicForm> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                let det = a * c - b * b;
                if det != 1 && det != -1 {
                    continue;
                }
                for d in -bound..=bound {
                    let form = CubicForm::new(a, b, c, d);
                    let base = TypeIBase {
                        spin,
                        form: form.clone(),
                        u: BigInt::from(0),
                        v: BigInt::from(0),
                    };
                    if validate_type1(&base).is_valid() {
                        out.push(form);
                    }
                }
            }
        }
    }
    out
}

// JSON wire format for bases. Coordinates are plain JSON integers; the
// serializer rejects values outside i64 range rather than silently rounding.

#[derive(Serialize, Deserialize)]
struct TypeIRepr {
    #[serde(rename = "type")]
    ty: String,
    spin: SpinType,
    #[serde(rename = "A")]
    a: i64,
    #[serde(rename = "B")]
    b: i64,
    #[serde(rename = "C")]
    c: i64,
    #[serde(rename = "D")]
    d: i64,
    u: i64,
    v: i64,
}

#[derive(Serialize, Deserialize)]
struct TypeIIRepr {
    #[serde(rename = "type")]
    ty: String,
    epsilon: i64,
    #[serde(rename = "A")]
    a: i64,
    u: i64,
}

fn to_i64<E: serde::ser::Error>(x: &BigInt, name: &str) -> Result<i64, E> {
    x.to_i64()
        .ok_or_else(|| E::custom(format!("{name} = {x} does not fit a JSON integer")))
}

impl Serialize for TypeIBase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TypeIRepr {
            ty: "I".to_string(),
            spin: self.spin,
            a: to_i64(&self.form.a, "A")?,
            b: to_i64(&self.form.b, "B")?,
            c: to_i64(&self.form.c, "C")?,
            d: to_i64(&self.form.d, "D")?,
            u: to_i64(&self.u, "u")?,
            v: to_i64(&self.v, "v")?,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TypeIBase {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TypeIRepr::deserialize(deserializer)?;
        if repr.ty != "I" {
            return Err(de::Error::custom(format!(
                "expected base type \"I\", got {:?}",
                repr.ty
            )));
        }
        Ok(TypeIBase::new(
            repr.spin, repr.a, repr.b, repr.c, repr.d, repr.u, repr.v,
        ))
    }
}

impl Serialize for TypeIIBase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TypeIIRepr {
            ty: "II".to_string(),
            epsilon: to_i64(&self.epsilon, "epsilon")?,
            a: to_i64(&self.a, "A")?,
            u: to_i64(&self.u, "u")?,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TypeIIBase {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TypeIIRepr::deserialize(deserializer)?;
        if repr.ty != "II" {
            return Err(de::Error::custom(format!(
                "expected base type \"II\", got {:?}",
                repr.ty
            )));
        }
        Ok(TypeIIBase::new(repr.epsilon, repr.a, repr.u))
    }
}
