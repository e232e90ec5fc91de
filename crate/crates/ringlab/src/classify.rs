//! Element decompositions (clean / nil-clean / strongly nil-clean) and
//! ring-level predicates, with witnesses on success and refutation traces
//! on failure. The central predicate is GNC: every non-unit is nil-clean.

use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::construct::{build_matrix, build_zn, BuildConfig, MatrixShape};
use crate::error::{Result, RingError};
use crate::iso;
use crate::par;
use crate::ring::{ElementSets, FiniteRing};

/// An element index together with its decoded structured form, for reports.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ElemRef {
    pub index: usize,
    pub decoded: String,
}

impl ElemRef {
    pub fn new(ring: &FiniteRing, index: usize) -> ElemRef {
        ElemRef {
            index,
            decoded: ring.describe(index),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompKind {
    Clean,
    NilClean,
    StronglyNilClean,
}

impl FromStr for DecompKind {
    type Err = RingError;
    fn from_str(s: &str) -> Result<DecompKind> {
        match s {
            "clean" => Ok(DecompKind::Clean),
            "nil_clean" => Ok(DecompKind::NilClean),
            "strongly_nil_clean" => Ok(DecompKind::StronglyNilClean),
            other => Err(RingError::input(format!("unknown decomposition kind: {other}"))),
        }
    }
}

/// x = e + q with e idempotent and q a unit (clean) or nilpotent (nil-clean).
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Decomposition {
    pub element: ElemRef,
    pub kind: DecompKind,
    pub idempotent_part: ElemRef,
    pub other_part: ElemRef,
    pub commuting: bool,
}

/// Why one idempotent fails to decompose a given element.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RefutationRow {
    pub idempotent: ElemRef,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub enum DecomposeResult {
    Witness(Decomposition),
    Refutation {
        element: ElemRef,
        kind: DecompKind,
        rows: Vec<RefutationRow>,
    },
}

impl DecomposeResult {
    pub fn is_witness(&self) -> bool {
        matches!(self, DecomposeResult::Witness(_))
    }
}

/// Scan idempotents in ascending index order and return the first (e, x - e)
/// pair of the requested kind, else a refutation row for every idempotent.
pub fn decompose(ring: &FiniteRing, x: usize, kind: DecompKind) -> Result<DecomposeResult> {
    if x >= ring.size() {
        return Err(RingError::input(format!(
            "element {x} out of range for {}",
            ring.label()
        )));
    }
    let sets = ring.element_sets();
    let mut rows = Vec::new();
    for e in sets.idempotent_list() {
        let q = ring.sub(x, e);
        let commuting = ring.mul(e, q) == ring.mul(q, e);
        let reason = match kind {
            DecompKind::Clean => {
                if sets.units[q] {
                    None
                } else {
                    Some(format!("difference {} is not a unit", ring.describe(q)))
                }
            }
            DecompKind::NilClean => {
                if sets.nilpotents[q] {
                    None
                } else {
                    Some(format!("difference {} is not nilpotent", ring.describe(q)))
                }
            }
            DecompKind::StronglyNilClean => {
                if !sets.nilpotents[q] {
                    Some(format!("difference {} is not nilpotent", ring.describe(q)))
                } else if !commuting {
                    Some(format!(
                        "parts {} and {} do not commute",
                        ring.describe(e),
                        ring.describe(q)
                    ))
                } else {
                    None
                }
            }
        };
        match reason {
            None => {
                return Ok(DecomposeResult::Witness(Decomposition {
                    element: ElemRef::new(ring, x),
                    kind,
                    idempotent_part: ElemRef::new(ring, e),
                    other_part: ElemRef::new(ring, q),
                    commuting,
                }))
            }
            Some(reason) => rows.push(RefutationRow {
                idempotent: ElemRef::new(ring, e),
                reason,
            }),
        }
    }
    Ok(DecomposeResult::Refutation {
        element: ElemRef::new(ring, x),
        kind,
        rows,
    })
}

/// Fast decomposability test used by the bulk scans (no trace assembly).
fn decomposable(ring: &FiniteRing, sets: &ElementSets, idems: &[usize], x: usize, kind: DecompKind) -> bool {
    idems.iter().any(|&e| {
        let q = ring.sub(x, e);
        match kind {
            DecompKind::Clean => sets.units[q],
            DecompKind::NilClean => sets.nilpotents[q],
            DecompKind::StronglyNilClean => {
                sets.nilpotents[q] && ring.mul(e, q) == ring.mul(q, e)
            }
        }
    })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub enum Certificate {
    /// elements witnessing a failure jointly (e.g. two non-units with a unit sum)
    WitnessElements { elements: Vec<ElemRef> },
    /// a single element refuting the property, with the per-idempotent trace
    /// when the property is decomposition-shaped
    FailingElement {
        element: ElemRef,
        rows: Vec<RefutationRow>,
    },
    /// an offending or characterizing element set
    SubsetListing { elements: Vec<ElemRef> },
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    fn yes() -> Verdict {
        Verdict {
            holds: true,
            certificate: None,
        }
    }
    fn no(certificate: Certificate) -> Verdict {
        Verdict {
            holds: false,
            certificate: Some(certificate),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingProperty {
    Gnc,
    NilClean,
    Clean,
    StronglyNilClean,
    Uu,
    Nr,
    Ni,
    Local,
    Abelian,
    Boolean,
    Reduced,
    Division,
    Field,
    TwoPrimalFinite,
}

pub const ALL_PROPERTIES: [RingProperty; 14] = [
    RingProperty::Gnc,
    RingProperty::NilClean,
    RingProperty::Clean,
    RingProperty::StronglyNilClean,
    RingProperty::Uu,
    RingProperty::Nr,
    RingProperty::Ni,
    RingProperty::Local,
    RingProperty::Abelian,
    RingProperty::Boolean,
    RingProperty::Reduced,
    RingProperty::Division,
    RingProperty::Field,
    RingProperty::TwoPrimalFinite,
];

impl RingProperty {
    pub fn name(self) -> &'static str {
        match self {
            RingProperty::Gnc => "gnc",
            RingProperty::NilClean => "nil_clean",
            RingProperty::Clean => "clean",
            RingProperty::StronglyNilClean => "strongly_nil_clean",
            RingProperty::Uu => "uu",
            RingProperty::Nr => "nr",
            RingProperty::Ni => "ni",
            RingProperty::Local => "local",
            RingProperty::Abelian => "abelian",
            RingProperty::Boolean => "boolean",
            RingProperty::Reduced => "reduced",
            RingProperty::Division => "division",
            RingProperty::Field => "field",
            RingProperty::TwoPrimalFinite => "two_primal_finite",
        }
    }
}

impl FromStr for RingProperty {
    type Err = RingError;
    fn from_str(s: &str) -> Result<RingProperty> {
        ALL_PROPERTIES
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| RingError::input(format!("unknown ring property: {s}")))
    }
}

/// GNC: every non-unit has a nil-clean decomposition. On failure the
/// certificate names the least failing non-unit with its refutation trace.
pub fn is_gnc(ring: &FiniteRing) -> Verdict {
    let sets = ring.element_sets();
    let idems = sets.idempotent_list();
    let fail = par::find_first(ring.size(), |x| {
        !sets.units[x] && !decomposable(ring, sets, &idems, x, DecompKind::NilClean)
    });
    match fail {
        None => Verdict::yes(),
        Some(x) => {
            let rows = match decompose(ring, x, DecompKind::NilClean) {
                Ok(DecomposeResult::Refutation { rows, .. }) => rows,
                _ => unreachable!("non-decomposable element must refute"),
            };
            Verdict::no(Certificate::FailingElement {
                element: ElemRef::new(ring, x),
                rows,
            })
        }
    }
}

/// All x admitting a nil-clean decomposition.
pub fn nil_clean_set(ring: &FiniteRing) -> Vec<usize> {
    let sets = ring.element_sets();
    let idems = sets.idempotent_list();
    let mask =
        par::map_indices(ring.size(), |x| decomposable(ring, sets, &idems, x, DecompKind::NilClean));
    ElementSets::members(&mask)
}

fn whole_ring_decomposes(ring: &FiniteRing, kind: DecompKind) -> Verdict {
    let sets = ring.element_sets();
    let idems = sets.idempotent_list();
    match par::find_first(ring.size(), |x| !decomposable(ring, sets, &idems, x, kind)) {
        None => Verdict::yes(),
        Some(x) => {
            let rows = match decompose(ring, x, kind) {
                Ok(DecomposeResult::Refutation { rows, .. }) => rows,
                _ => unreachable!("non-decomposable element must refute"),
            };
            Verdict::no(Certificate::FailingElement {
                element: ElemRef::new(ring, x),
                rows,
            })
        }
    }
}

fn elem_fail(ring: &FiniteRing, x: usize) -> Verdict {
    Verdict::no(Certificate::FailingElement {
        element: ElemRef::new(ring, x),
        rows: Vec::new(),
    })
}

fn pair_fail(ring: &FiniteRing, a: usize, b: usize) -> Verdict {
    Verdict::no(Certificate::WitnessElements {
        elements: vec![ElemRef::new(ring, a), ElemRef::new(ring, b)],
    })
}

/// Decide one structural property by its definitional exhaustive test.
pub fn ring_predicate(ring: &FiniteRing, property: RingProperty) -> Verdict {
    let sets = ring.element_sets();
    let n = ring.size();
    match property {
        RingProperty::Gnc => is_gnc(ring),
        RingProperty::NilClean => whole_ring_decomposes(ring, DecompKind::NilClean),
        RingProperty::Clean => whole_ring_decomposes(ring, DecompKind::Clean),
        RingProperty::StronglyNilClean => {
            whole_ring_decomposes(ring, DecompKind::StronglyNilClean)
        }
        RingProperty::Uu => {
            // U(R) = 1 + Nil(R); one direction suffices since 1 + q is
            // always a unit for nilpotent q, but both are checked
            for x in 0..n {
                let shifted = ring.sub(x, ring.one());
                if sets.units[x] != sets.nilpotents[shifted] {
                    return elem_fail(ring, x);
                }
            }
            Verdict::yes()
        }
        RingProperty::Nr => {
            let nils = ElementSets::members(&sets.nilpotents);
            for &a in &nils {
                for &b in &nils {
                    if !sets.nilpotents[ring.sub(a, b)] || !sets.nilpotents[ring.mul(a, b)] {
                        return pair_fail(ring, a, b);
                    }
                }
            }
            Verdict::yes()
        }
        RingProperty::Ni => {
            let nr = ring_predicate(ring, RingProperty::Nr);
            if !nr.holds {
                return nr;
            }
            for a in ElementSets::members(&sets.nilpotents) {
                for y in 0..n {
                    if !sets.nilpotents[ring.mul(y, a)] || !sets.nilpotents[ring.mul(a, y)] {
                        return pair_fail(ring, a, y);
                    }
                }
            }
            Verdict::yes()
        }
        RingProperty::Local => {
            let non_units = ElementSets::members_complement(&sets.units);
            for &a in &non_units {
                for &b in &non_units {
                    if sets.units[ring.add(a, b)] {
                        return pair_fail(ring, a, b);
                    }
                }
            }
            Verdict::yes()
        }
        RingProperty::Abelian => {
            match (0..n).find(|&e| sets.idempotents[e] && !sets.center[e]) {
                Some(e) => elem_fail(ring, e),
                None => Verdict::yes(),
            }
        }
        RingProperty::Boolean => match (0..n).find(|&x| !ring.is_idempotent(x)) {
            Some(x) => elem_fail(ring, x),
            None => Verdict::yes(),
        },
        RingProperty::Reduced => {
            match (0..n).find(|&x| sets.nilpotents[x] && x != ring.zero()) {
                Some(x) => elem_fail(ring, x),
                None => Verdict::yes(),
            }
        }
        RingProperty::Division => {
            let non_units = ElementSets::members_complement(&sets.units);
            if non_units == vec![ring.zero()] {
                Verdict::yes()
            } else {
                Verdict::no(Certificate::SubsetListing {
                    elements: non_units.iter().map(|&x| ElemRef::new(ring, x)).collect(),
                })
            }
        }
        RingProperty::Field => {
            let div = ring_predicate(ring, RingProperty::Division);
            if !div.holds {
                return div;
            }
            match (0..n).find(|&x| !sets.center[x]) {
                Some(x) => elem_fail(ring, x),
                None => Verdict::yes(),
            }
        }
        RingProperty::TwoPrimalFinite => {
            match (0..n).find(|&x| sets.nilpotents[x] != sets.jacobson[x]) {
                Some(x) => elem_fail(ring, x),
                None => Verdict::yes(),
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyVerdict {
    pub property: RingProperty,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct RingProfile {
    pub label: String,
    pub size: usize,
    pub verdicts: Vec<PropertyVerdict>,
}

impl RingProfile {
    pub fn get(&self, property: RingProperty) -> &Verdict {
        &self
            .verdicts
            .iter()
            .find(|v| v.property == property)
            .expect("all properties present")
            .verdict
    }
}

/// Evaluate the requested properties (all 14 when `props` is None).
pub fn profile_ring(ring: &FiniteRing, props: Option<&[RingProperty]>) -> RingProfile {
    let props = props.unwrap_or(&ALL_PROPERTIES);
    RingProfile {
        label: ring.label().to_string(),
        size: ring.size(),
        verdicts: props
            .iter()
            .map(|&property| PropertyVerdict {
                property,
                verdict: ring_predicate(ring, property),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SemilocalBranch {
    LocalNilJ,
    QuotientIsMatrixOverZ2 { n: usize },
    NilClean,
    None,
}

impl std::fmt::Display for SemilocalBranch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SemilocalBranch::LocalNilJ => write!(f, "local_nil_J"),
            SemilocalBranch::QuotientIsMatrixOverZ2 { n } => {
                write!(f, "quotient_is_M{n}(Z2)")
            }
            SemilocalBranch::NilClean => write!(f, "nil_clean"),
            SemilocalBranch::None => write!(f, "none"),
        }
    }
}

/// Assign the trichotomy branch: local with nil radical, or R/J isomorphic
/// to some M_n(Z2) (tested only when J is nonzero, so that nil-clean rings
/// with zero radical such as M_2(Z2) report the nil_clean branch), or
/// nil-clean outright. `None` only ever comes back on non-GNC rings.
pub fn semilocal_branch(ring: &Arc<FiniteRing>) -> Result<SemilocalBranch> {
    let sets = ring.element_sets();
    let j_nil = ElementSets::members(&sets.jacobson)
        .into_iter()
        .all(|x| sets.nilpotents[x]);
    if j_nil && ring_predicate(ring, RingProperty::Local).holds {
        return Ok(SemilocalBranch::LocalNilJ);
    }
    let j_nonzero = sets.jacobson.iter().filter(|&&m| m).count() > 1;
    if j_nonzero && j_nil {
        let (q, _) = iso::quotient(ring, &sets.jacobson)?;
        if let Some(n) = iso::matrix_z2_dim(q.size()) {
            let cfg = BuildConfig::default();
            let target = build_matrix(build_zn(2, &cfg)?, n, MatrixShape::Full, &cfg)?;
            if iso::find_isomorphism(&q, &target).is_some() {
                return Ok(SemilocalBranch::QuotientIsMatrixOverZ2 { n });
            }
        }
    }
    if ring_predicate(ring, RingProperty::NilClean).holds {
        return Ok(SemilocalBranch::NilClean);
    }
    Ok(SemilocalBranch::None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        build_group, build_group_ring, build_product, build_rn, BuildConfig,
    };

    fn cfg() -> BuildConfig {
        BuildConfig::default()
    }

    fn zn(n: usize) -> Arc<FiniteRing> {
        build_zn(n, &cfg()).unwrap()
    }

    #[test]
    fn decompose_z6_examples() {
        let z6 = zn(6);
        match decompose(&z6, 2, DecompKind::NilClean).unwrap() {
            DecomposeResult::Refutation { rows, .. } => {
                let idems: Vec<usize> = rows.iter().map(|r| r.idempotent.index).collect();
                assert_eq!(idems, vec![0, 1, 3, 4]);
            }
            other => panic!("expected refutation, got {other:?}"),
        }
        match decompose(&z6, 3, DecompKind::NilClean).unwrap() {
            DecomposeResult::Witness(d) => {
                assert_eq!(d.idempotent_part.index, 3);
                assert_eq!(d.other_part.index, 0);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn decompose_z3c2_one_plus_g() {
        let rg = build_group_ring(zn(3), build_group(&[2]).unwrap(), &cfg()).unwrap();
        // 1 + g has coefficient vector (1,1), identity coefficient first
        let x = 4;
        assert!(!rg.element_sets().units[x]);
        match decompose(&rg, x, DecompKind::NilClean).unwrap() {
            DecomposeResult::Refutation { rows, .. } => assert_eq!(rows.len(), 4),
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn nil_clean_witness_implies_negation_clean() {
        // x = e + q nil-clean forces -x = (1 - e) + (-(1 + q)) clean
        for r in [zn(6), zn(8), zn(9), zn(12)] {
            let sets = r.element_sets();
            for x in 0..r.size() {
                if let DecomposeResult::Witness(d) = decompose(&r, x, DecompKind::NilClean).unwrap()
                {
                    let e2 = r.sub(r.one(), d.idempotent_part.index);
                    let u2 = r.neg(r.add(r.one(), d.other_part.index));
                    assert!(r.is_idempotent(e2));
                    assert!(sets.units[u2]);
                    assert_eq!(r.add(e2, u2), r.neg(x));
                }
            }
        }
    }

    #[test]
    fn gnc_examples() {
        assert!(is_gnc(&zn(3)).holds);
        let v = is_gnc(&zn(6));
        assert!(!v.holds);
        match v.certificate.unwrap() {
            Certificate::FailingElement { element, rows } => {
                assert_eq!(element.index, 2);
                assert_eq!(rows.len(), 4);
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        let m = build_matrix(zn(2), 2, MatrixShape::Full, &cfg()).unwrap();
        assert!(is_gnc(&m).holds);
    }

    #[test]
    fn nil_clean_set_examples() {
        assert_eq!(nil_clean_set(&zn(3)), vec![0, 1]);
        assert_eq!(nil_clean_set(&zn(2)), vec![0, 1]);
        assert_eq!(nil_clean_set(&zn(6)), vec![0, 1, 3, 4]);
    }

    #[test]
    fn z4_strongly_nil_clean_and_uu() {
        let z4 = zn(4);
        assert!(ring_predicate(&z4, RingProperty::StronglyNilClean).holds);
        assert!(ring_predicate(&z4, RingProperty::Uu).holds);
        assert!(ring_predicate(&z4, RingProperty::Local).holds);
        assert!(!ring_predicate(&z4, RingProperty::Boolean).holds);
    }

    #[test]
    fn boolean_product() {
        let klein = build_product(vec![zn(2), zn(2)], &cfg()).unwrap();
        assert!(ring_predicate(&klein, RingProperty::Boolean).holds);
        assert!(ring_predicate(&klein, RingProperty::StronglyNilClean).holds);
        assert!(!ring_predicate(&klein, RingProperty::Local).holds);
    }

    #[test]
    fn field_and_division_predicates() {
        assert!(ring_predicate(&zn(7), RingProperty::Field).holds);
        assert!(ring_predicate(&zn(7), RingProperty::Division).holds);
        assert!(!ring_predicate(&zn(6), RingProperty::Division).holds);
        let m = build_matrix(zn(2), 2, MatrixShape::Full, &cfg()).unwrap();
        assert!(!ring_predicate(&m, RingProperty::Division).holds);
        assert!(!ring_predicate(&m, RingProperty::Abelian).holds);
        assert!(!ring_predicate(&m, RingProperty::TwoPrimalFinite).holds);
    }

    #[test]
    fn nr_ni_local_examples() {
        let t = build_matrix(zn(2), 2, MatrixShape::Upper, &cfg()).unwrap();
        // strictly-upper nilpotents of T_2(Z2) form an ideal
        assert!(ring_predicate(&t, RingProperty::Nr).holds);
        assert!(ring_predicate(&t, RingProperty::Ni).holds);
        let m = build_matrix(zn(2), 2, MatrixShape::Full, &cfg()).unwrap();
        // [[0,1],[0,0]] + [[0,0],[1,0]] is a unit, so Nil is not closed
        assert!(!ring_predicate(&m, RingProperty::Nr).holds);
        assert!(!ring_predicate(&m, RingProperty::Ni).holds);
        assert!(ring_predicate(&zn(9), RingProperty::Local).holds);
        assert!(!ring_predicate(&zn(6), RingProperty::Local).holds);
    }

    #[test]
    fn profile_z6() {
        let p = profile_ring(&zn(6), None);
        assert_eq!(p.verdicts.len(), 14);
        assert!(p.get(RingProperty::Clean).holds);
        assert!(!p.get(RingProperty::Gnc).holds);
        assert!(p.get(RingProperty::Reduced).holds);
        assert!(p.get(RingProperty::Abelian).holds);
    }

    #[test]
    fn semilocal_branch_examples() {
        assert_eq!(semilocal_branch(&zn(9)).unwrap(), SemilocalBranch::LocalNilJ);
        let m = build_matrix(zn(2), 2, MatrixShape::Full, &cfg()).unwrap();
        assert_eq!(semilocal_branch(&m).unwrap(), SemilocalBranch::NilClean);
        assert_eq!(semilocal_branch(&zn(6)).unwrap(), SemilocalBranch::None);
        let m4 = build_matrix(zn(4), 2, MatrixShape::Full, &cfg()).unwrap();
        assert_eq!(
            semilocal_branch(&m4).unwrap(),
            SemilocalBranch::QuotientIsMatrixOverZ2 { n: 2 }
        );
    }

    #[test]
    fn rn_z3_is_local_not_strongly_nil_clean() {
        let r = build_rn(zn(3), 2, &cfg()).unwrap();
        assert_eq!(semilocal_branch(&r).unwrap(), SemilocalBranch::LocalNilJ);
        assert!(is_gnc(&r).holds);
        assert!(!ring_predicate(&r, RingProperty::NilClean).holds);
    }

    #[test]
    fn zero_ring_vacuous_properties() {
        let z1 = zn(1);
        assert!(is_gnc(&z1).holds);
        assert!(ring_predicate(&z1, RingProperty::NilClean).holds);
        assert!(ring_predicate(&z1, RingProperty::Clean).holds);
        assert!(ring_predicate(&z1, RingProperty::Boolean).holds);
    }

    #[test]
    fn property_round_trip_names() {
        for p in ALL_PROPERTIES {
            assert_eq!(p.name().parse::<RingProperty>().unwrap(), p);
        }
        assert!("bogus".parse::<RingProperty>().is_err());
    }
}
