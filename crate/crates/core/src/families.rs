//! Parameter families of twisted torus knots with essential tangle
//! decompositions, the composite family they are built from, and cable
//! detection.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alexander::{alexander_from_braid, torus_alexander};
use crate::braid::{parallelize_framed, twisted_torus_braid, twisted_torus_framed};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::modarith::{coeff_quadruple, family_quadruple, gcd, CoeffQuadruple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    pub e: i64,
    pub k1: i64,
    pub k2: i64,
    pub x1: i64,
    pub x2: i64,
}

impl FamilyParams {
    pub fn new(e: i64, k1: i64, k2: i64, x1: i64, x2: i64) -> Result<Self> {
        let fp = Self { e, k1, k2, x1, x2 };
        fp.validate()?;
        Ok(fp)
    }

    pub fn validate(&self) -> Result<()> {
        let Self { e, k1, k2, x1, x2 } = *self;
        if e < 1 || k1 < 2 || k2 < 2 || x1 < 1 || x2 < 1 {
            return Err(Error::OutOfRange(format!(
                "need e > 0, k1 > 1, k2 > 1, x1 > 0, x2 > 0 (got {self})"
            )));
        }
        if gcd(x1, x2) != 1 {
            return Err(Error::NotCoprime(x1, x2));
        }
        Ok(())
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e={} k1={} k2={} x1={} x2={}",
            self.e, self.k1, self.k2, self.x1, self.x2
        )
    }
}

/// Parameters of `T(p, q; r, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwistedTorusParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl TwistedTorusParams {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        let tp = Self { p, q, r, s };
        tp.validate()?;
        Ok(tp)
    }

    /// `p > r > 1`, `q > 0`, `gcd(p, q) = 1`.
    pub fn validate(&self) -> Result<()> {
        let Self { p, q, r, .. } = *self;
        if !(p > r && r > 1 && q > 0) {
            return Err(Error::OutOfRange(format!("need p > r > 1 and q > 0 (got {self})")));
        }
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        Ok(())
    }
}

impl fmt::Display for TwistedTorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}, {}; {}, {})", self.p, self.q, self.r, self.s)
    }
}

/// `T(p, q)`; a link when `gcd(p, q) > 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusParams {
    pub p: i64,
    pub q: i64,
}

impl TorusParams {
    pub fn new(p: i64, q: i64) -> Self {
        Self { p, q }
    }

    pub fn components(&self) -> i64 {
        gcd(self.p, self.q)
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}, {})", self.p, self.q)
    }
}

/// The fusion factors and companion of a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionDescription {
    pub strings: i64,
    pub factor_knot: TorusParams,
    pub factor_link: TorusParams,
    pub companion: TorusParams,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableDescription {
    pub k: i64,
    pub cable: TorusParams,
    pub companion: TorusParams,
    /// The companion is an unknot, so the cable structure is trivial.
    pub degenerate: bool,
}

/// The composite knot `T(p0, q0; p0 - k1, -1)` and its two summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeBase {
    pub base: TwistedTorusParams,
    pub factors: [TorusParams; 2],
}

pub fn theorem11_params(fp: &FamilyParams) -> Result<TwistedTorusParams> {
    fp.validate()?;
    let FamilyParams { e, k1, k2, x1, x2 } = *fp;
    let k = k1 + k2 - 1;
    TwistedTorusParams::new(
        ((e + 1) * k + 1) * x1 + (e + 1) * x2,
        (e * k + 1) * x1 + e * x2,
        ((e + 1) * k - k1 + 2) * x1 + e * x2,
        -1,
    )
}

pub fn theorem11_fusion(fp: &FamilyParams) -> Result<FusionDescription> {
    fp.validate()?;
    let FamilyParams { e, k1, k2, x1, x2 } = *fp;
    let m = (k1 - 1) * x1 + x2;
    Ok(FusionDescription {
        strings: x1,
        factor_knot: TorusParams::new(m, e * m + x1),
        factor_link: TorusParams::new(k2 * x1, -((e + 1) * k2 + 1) * x1),
        companion: TorusParams::new(k2, -(e + 1) * k2 - 1),
    })
}

pub fn theorem31_params(e: i64, k1: i64, k2: i64) -> Result<CompositeBase> {
    if e < 1 || k1 < 2 || k2 < 2 {
        return Err(Error::OutOfRange(format!(
            "need e > 0, k1 > 1, k2 > 1 (got e = {e}, k1 = {k1}, k2 = {k2})"
        )));
    }
    let p0 = (e + 1) * (k1 + k2) + 1;
    let q0 = e * (k1 + k2) + 1;
    Ok(CompositeBase {
        base: TwistedTorusParams::new(p0, q0, p0 - k1, -1)?,
        factors: [
            TorusParams::new(k1, e * k1 + 1),
            TorusParams::new(k2, -(e + 1) * k2 - 1),
        ],
    })
}

/// For `x1 = 1`, the composite-family parameters `(k1 + x2 - 1, k2)` that
/// describe the same knot.
pub fn remark13_reduce(fp: &FamilyParams) -> Result<(i64, i64)> {
    fp.validate()?;
    if fp.x1 != 1 {
        return Err(Error::OutOfRange(format!("reduction needs x1 = 1 (got {})", fp.x1)));
    }
    Ok((fp.k1 + fp.x2 - 1, fp.k2))
}

/// Cable structure when `q` divides `r`.
pub fn cable_detect(tp: &TwistedTorusParams) -> Option<CableDescription> {
    let TwistedTorusParams { p, q, r, s } = *tp;
    if q == 0 || r % q != 0 {
        return None;
    }
    let k = r / q;
    let companion = TorusParams::new(k, k * s + 1);
    Some(CableDescription {
        k,
        cable: TorusParams::new(q, p + k * k * q * s),
        companion,
        degenerate: companion.p.abs() <= 1 || companion.q.abs() <= 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub max_e: i64,
    pub max_k: i64,
    pub max_x: i64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self { max_e: 4, max_k: 6, max_x: 6 }
    }
}

impl SearchBounds {
    pub fn uniform(n: i64) -> Self {
        Self { max_e: n, max_k: n, max_x: n }
    }
}

/// Every family member within `bounds` whose parameters equal `tp`, in
/// lexicographic order of `(e, k1, k2, x1, x2)`.
pub fn family_membership(tp: &TwistedTorusParams, bounds: &SearchBounds) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    if tp.s != -1 {
        return out;
    }
    for e in 1..=bounds.max_e {
        for k1 in 2..=bounds.max_k {
            for k2 in 2..=bounds.max_k {
                for x1 in 1..=bounds.max_x {
                    for x2 in 1..=bounds.max_x {
                        let Ok(fp) = FamilyParams::new(e, k1, k2, x1, x2) else {
                            continue;
                        };
                        if theorem11_params(&fp).is_ok_and(|derived| derived == *tp) {
                            out.push(fp);
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    /// Not computed; rests on a published theorem.
    Cited,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Computed,
    CitedTheorem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub evidence: Evidence,
    pub detail: String,
}

impl Check {
    fn computed(name: &str, ok: bool, detail: String) -> Self {
        Self {
            name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            evidence: Evidence::Computed,
            detail,
        }
    }

    fn cited(name: &str, detail: &str) -> Self {
        Self {
            name: name.into(),
            status: CheckStatus::Cited,
            evidence: Evidence::CitedTheorem,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSummary {
    pub params: TwistedTorusParams,
    pub factors: [TorusParams; 2],
    pub coefficients: CoeffQuadruple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCounts {
    pub parallelized: usize,
    pub direct: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderPair {
    pub parallelized: LaurentPoly,
    pub direct: LaurentPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: FamilyParams,
    pub derived: TwistedTorusParams,
    pub base: BaseSummary,
    pub fusion: FusionDescription,
    pub components: ComponentCounts,
    pub alexander_match: bool,
    pub alexander: AlexanderPair,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

/// Alexander computations a full verification performs.
pub const VERIFY_COST: usize = 3;

/// Builds the family member twice, once by parallelizing the composite base
/// and once directly, and compares everything computable. Needs at least two
/// Alexander computations of budget; the third (the base as a connected sum)
/// is skipped when the budget is exactly two.
pub fn verify_family_instance(fp: &FamilyParams, budget: usize) -> Result<VerificationReport> {
    fp.validate()?;
    if budget < 2 {
        return Err(Error::BudgetExhausted { budget });
    }
    let FamilyParams { e, k1, k2, x1, x2 } = *fp;
    let derived = theorem11_params(fp)?;
    let fusion = theorem11_fusion(fp)?;
    let composite = theorem31_params(e, k1, k2)?;
    let base = composite.base;
    let closed_form = family_quadruple(e, k1, k2)?;
    let solved = coeff_quadruple(base.p, base.q)?;

    let mut checks = Vec::new();
    checks.push(Check::computed(
        "coefficients",
        closed_form == solved,
        format!(
            "closed form (a,b,c,d) = ({},{},{},{}), solver ({},{},{},{})",
            closed_form.a, closed_form.b, closed_form.c, closed_form.d, solved.a, solved.b, solved.c, solved.d
        ),
    ));
    let (p, q) = solved.apply(x1, x2);
    checks.push(Check::computed(
        "parallel_pq",
        (p, q) == (derived.p, derived.q),
        format!("(a x1 + b x2, c x1 + d x2) = ({p}, {q})"),
    ));
    let tail = (k1 - 1) * x1 + x2;
    checks.push(Check::computed(
        "r_formula",
        derived.r == derived.p - tail,
        format!("r = {} and p - ((k1-1)x1 + x2) = {}", derived.r, derived.p - tail),
    ));
    checks.push(Check::computed(
        "fusion_factors",
        fusion.factor_knot.components() == 1 && fusion.factor_link.components() == x1,
        format!(
            "{} has {} component(s), {} has {}",
            fusion.factor_knot,
            fusion.factor_knot.components(),
            fusion.factor_link,
            fusion.factor_link.components()
        ),
    ));

    let parallel = parallelize_framed(&twisted_torus_framed(base.p, base.q, base.r, base.s)?, x1, x2)?;
    let direct = twisted_torus_braid(derived.p, derived.q, derived.r, derived.s)?;
    let components = ComponentCounts {
        parallelized: parallel.component_count(),
        direct: direct.component_count(),
    };
    let knots = components.parallelized == 1 && components.direct == 1;
    checks.push(Check::computed(
        "components",
        knots,
        format!(
            "parallelized closure: {}, direct closure: {}",
            components.parallelized, components.direct
        ),
    ));
    checks.push(Check::computed(
        "strand_count",
        parallel.strands() as i64 == derived.p,
        format!("parallelized braid has {} strands", parallel.strands()),
    ));
    if !knots {
        return Err(Error::NotAKnot(components.parallelized.max(components.direct)));
    }

    let alexander = AlexanderPair {
        parallelized: alexander_from_braid(&parallel)?,
        direct: alexander_from_braid(&direct)?,
    };
    let alexander_match = alexander.parallelized == alexander.direct;
    checks.push(Check::computed(
        "alexander",
        alexander_match,
        format!("direct: {}", alexander.direct),
    ));

    if budget >= VERIFY_COST {
        let base_poly = alexander_from_braid(&twisted_torus_braid(base.p, base.q, base.r, base.s)?)?;
        let [f1, f2] = composite.factors;
        let expected = torus_alexander(f1.p, f1.q)?.product(&torus_alexander(f2.p, f2.q)?);
        checks.push(Check::computed(
            "base_connected_sum",
            base_poly == expected,
            format!("{base} vs {f1} # {f2}: {base_poly}"),
        ));
    } else {
        checks.push(Check {
            name: "base_connected_sum".into(),
            status: CheckStatus::Skipped,
            evidence: Evidence::Computed,
            detail: format!("budget {budget} < {VERIFY_COST}"),
        });
    }

    checks.push(Check::cited(
        "essential_tangles",
        "both x1-string tangles are essential (torus-knot tangle essentiality theorem); not decided here",
    ));
    checks.push(Check::cited(
        "essential_torus",
        &format!(
            "essential torus with companion {} obtained by tubing the decomposing sphere",
            fusion.companion
        ),
    ));

    let verdict = if checks.iter().any(|c| c.status == CheckStatus::Fail) {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    Ok(VerificationReport {
        family: *fp,
        derived,
        base: BaseSummary {
            params: base,
            factors: composite.factors,
            coefficients: solved,
        },
        fusion,
        components,
        alexander_match,
        alexander,
        checks,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(e: i64, k1: i64, k2: i64, x1: i64, x2: i64) -> FamilyParams {
        FamilyParams::new(e, k1, k2, x1, x2).unwrap()
    }

    fn tp(p: i64, q: i64, r: i64, s: i64) -> TwistedTorusParams {
        TwistedTorusParams { p, q, r, s }
    }

    #[test]
    fn params_examples() {
        assert_eq!(theorem11_params(&fp(1, 2, 2, 2, 3)).unwrap(), tp(20, 11, 15, -1));
        assert_eq!(theorem11_params(&fp(1, 2, 2, 2, 1)).unwrap(), tp(16, 9, 13, -1));
        assert_eq!(theorem11_params(&fp(1, 2, 2, 3, 1)).unwrap(), tp(23, 13, 19, -1));
        for x1 in 1..5 {
            for x2 in 1..5 {
                if gcd(x1, x2) != 1 {
                    continue;
                }
                let expected = tp(7 * x1 + 2 * x2, 4 * x1 + x2, 6 * x1 + x2, -1);
                assert_eq!(theorem11_params(&fp(1, 2, 2, x1, x2)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn invalid_family_params() {
        assert!(FamilyParams::new(0, 2, 2, 1, 1).is_err());
        assert!(FamilyParams::new(1, 1, 2, 1, 1).is_err());
        assert!(matches!(FamilyParams::new(1, 2, 2, 2, 4), Err(Error::NotCoprime(2, 4))));
        let bad = FamilyParams { e: 1, k1: 2, k2: 2, x1: 2, x2: 2 };
        assert!(theorem11_params(&bad).is_err());
    }

    #[test]
    fn fusion_examples() {
        let f = theorem11_fusion(&fp(1, 2, 2, 2, 3)).unwrap();
        assert_eq!(f.strings, 2);
        assert_eq!(f.factor_knot, TorusParams::new(5, 7));
        assert_eq!(f.factor_link, TorusParams::new(4, -10));
        assert_eq!(f.companion, TorusParams::new(2, -5));
        let f = theorem11_fusion(&fp(1, 2, 2, 2, 1)).unwrap();
        assert_eq!((f.factor_knot, f.factor_link), (TorusParams::new(3, 5), TorusParams::new(4, -10)));
        let f = theorem11_fusion(&fp(2, 3, 4, 1, 1)).unwrap();
        let c = theorem31_params(2, 3, 4).unwrap();
        assert_eq!([f.factor_knot, f.factor_link], c.factors);
    }

    #[test]
    fn composite_examples() {
        let c = theorem31_params(1, 3, 2).unwrap();
        assert_eq!(c.base, tp(11, 6, 8, -1));
        assert_eq!(c.factors, [TorusParams::new(3, 4), TorusParams::new(2, -5)]);
        let c = theorem31_params(1, 2, 2).unwrap();
        assert_eq!(c.base, tp(9, 5, 7, -1));
        assert_eq!(c.factors, [TorusParams::new(2, 3), TorusParams::new(2, -5)]);
        let c = theorem31_params(2, 2, 3).unwrap();
        assert_eq!(c.base, tp(16, 11, 14, -1));
        assert_eq!(c.factors, [TorusParams::new(2, 5), TorusParams::new(3, -10)]);
        assert!(theorem31_params(1, 1, 3).is_err());
    }

    #[test]
    fn reduction_examples() {
        let f = fp(1, 2, 2, 1, 3);
        assert_eq!(remark13_reduce(&f).unwrap(), (4, 2));
        assert_eq!(theorem11_params(&f).unwrap(), tp(13, 7, 9, -1));
        assert_eq!(theorem31_params(1, 4, 2).unwrap().base, tp(13, 7, 9, -1));
        assert_eq!(remark13_reduce(&fp(3, 4, 5, 1, 1)).unwrap(), (4, 5));
        let f = fp(2, 3, 2, 1, 2);
        let (a, b) = remark13_reduce(&f).unwrap();
        assert_eq!((a, b), (4, 2));
        assert_eq!(theorem11_params(&f).unwrap(), theorem31_params(2, a, b).unwrap().base);
        assert!(remark13_reduce(&fp(1, 2, 2, 2, 1)).is_err());
    }

    #[test]
    fn cable_examples() {
        let c = cable_detect(&tp(7, 3, 6, 1)).unwrap();
        assert_eq!(c.k, 2);
        assert_eq!(c.cable, TorusParams::new(3, 19));
        assert_eq!(c.companion, TorusParams::new(2, 3));
        assert!(!c.degenerate);
        assert!(cable_detect(&tp(20, 11, 15, -1)).is_none());
        let c = cable_detect(&tp(8, 3, 3, 2)).unwrap();
        assert_eq!(c.k, 1);
        assert_eq!(c.companion, TorusParams::new(1, 3));
        assert_eq!(c.cable, TorusParams::new(3, 14));
        assert!(c.degenerate);
    }

    #[test]
    fn membership_examples() {
        let b = SearchBounds::uniform(5);
        assert!(family_membership(&tp(20, 11, 15, -1), &b).contains(&fp(1, 2, 2, 2, 3)));
        assert!(family_membership(&tp(16, 9, 13, -1), &b).contains(&fp(1, 2, 2, 2, 1)));
        assert!(family_membership(&tp(7, 3, 6, 1), &b).is_empty());
    }

    #[test]
    fn verify_smallest_member() {
        let report = verify_family_instance(&fp(1, 2, 2, 1, 1), VERIFY_COST).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.alexander_match);
        assert_eq!(report.derived, tp(9, 5, 7, -1));
        let cited: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.evidence == Evidence::CitedTheorem)
            .collect();
        assert_eq!(cited.len(), 2);
        assert!(cited.iter().all(|c| c.status == CheckStatus::Cited));
    }

    #[test]
    fn verify_budget() {
        let f = fp(1, 2, 2, 1, 1);
        assert!(matches!(verify_family_instance(&f, 1), Err(Error::BudgetExhausted { budget: 1 })));
        let report = verify_family_instance(&f, 2).unwrap();
        let skipped = report.checks.iter().find(|c| c.name == "base_connected_sum").unwrap();
        assert_eq!(skipped.status, CheckStatus::Skipped);
        assert_eq!(report.verdict, Verdict::Pass);
    }
}
