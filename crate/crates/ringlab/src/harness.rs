//! Executable structure-theorem suite: 25 checks (C1-C25) evaluated over a
//! catalog of ring expressions, each reporting pass/fail with a replayable
//! counterexample certificate on failure.

use std::time::Instant;

use serde::Serialize;

use crate::classify::{
    self, is_gnc, ring_predicate, Certificate, DecompKind, RingProperty, SemilocalBranch,
};
use crate::construct::{self, BuildConfig, Ring};
use crate::error::{Result, RingError};
use crate::expr::{self, RingExpr};
use crate::iso;
use crate::ring::{ElementSets, FiniteRing};

#[derive(Debug, Clone, Serialize)]
pub struct CheckDef {
    pub id: &'static str,
    pub anchor: &'static str,
    pub description: &'static str,
}

pub static CHECK_DEFS: [CheckDef; 25] = [
    CheckDef { id: "C1", anchor: "every GNC ring is clean", description: "every GNC catalog ring is clean" },
    CheckDef { id: "C2", anchor: "every GNC ring has nil Jacobson radical", description: "every GNC catalog ring has nil Jacobson radical" },
    CheckDef { id: "C3", anchor: "in a GNC ring every integer image n·1 is nilpotent or a unit", description: "integer images n·1 in GNC rings are nilpotent or units" },
    CheckDef { id: "C4", anchor: "a GNC ring with 2 invertible and u² = 1 for all units is a field", description: "GNC + 2 a unit + u²=1 for all units forces a field" },
    CheckDef { id: "C5", anchor: "Nil(R) + J(R) = Nil(R) in a GNC ring", description: "nilpotent plus radical stays nilpotent in GNC rings" },
    CheckDef { id: "C6", anchor: "for a nil ideal I, R is GNC iff R/I is GNC", description: "nil-ideal quotient preserves and reflects GNC on Rn/Triv/Anm/Bnm pairs" },
    CheckDef { id: "C7", anchor: "a finite product is GNC iff every factor is nil-clean", description: "a product is GNC exactly when every factor is nil-clean" },
    CheckDef { id: "C8", anchor: "Triv(R), S_n(R), R_n, A_{n,m}(R), B_{n,m}(R) are GNC iff R is GNC", description: "Triv/Sn/Rn/Anm/Bnm are GNC exactly when the base is GNC" },
    CheckDef { id: "C9", anchor: "with only trivial idempotents, GNC iff local with nil radical", description: "with only trivial idempotents, GNC ⇔ local with nil radical" },
    CheckDef { id: "C10", anchor: "M_n(D) over a division ring D is GNC iff D = F2", description: "M_n over a finite field is GNC exactly for F2" },
    CheckDef { id: "C11", anchor: "every GNC ring is local-with-nil-J, has R/J a matrix ring over F2, or is nil-clean", description: "the trichotomy assigns a branch to every GNC catalog ring" },
    CheckDef { id: "C12", anchor: "Z_n is GNC iff n is a prime power", description: "Z_n is GNC exactly when n is a prime power (n ≤ 64)" },
    CheckDef { id: "C13", anchor: "an abelian ring is GNC iff local-with-nil-J or strongly nil-clean", description: "abelian rings: GNC ⇔ local-with-nil-J or strongly nil-clean" },
    CheckDef { id: "C14", anchor: "on GNC rings NR iff NI, and NR forces J(R) = Nil(R)", description: "NR dichotomy, NR ⇔ NI on GNC rings, and J = Nil when NR" },
    CheckDef { id: "C15", anchor: "strongly nil-clean iff UU and GNC", description: "strongly nil-clean ⇔ UU and GNC" },
    CheckDef { id: "C16", anchor: "M_n(R) is GNC iff R/J(R) is Boolean and J(M_n(R)) is nil", description: "M_n over Z_k is GNC exactly when Z_k/J is Boolean with nil radical" },
    CheckDef { id: "C17", anchor: "T_n(R) is GNC iff R is nil-clean", description: "upper triangular matrices over nil-clean bases" },
    CheckDef { id: "C18", anchor: "K_s(R) with s central nilpotent is GNC iff R is nil-clean", description: "twisted 2×2 rings with central nilpotent s" },
    CheckDef { id: "C19", anchor: "M_n(R;s) with s central nilpotent is GNC iff R is nil-clean", description: "δ-twisted formal matrix rings with central nilpotent s" },
    CheckDef { id: "C20", anchor: "the formal triangular ring T(R,S,M) is GNC iff R and S are nil-clean", description: "T(R,S,M) is GNC exactly when R and S are nil-clean" },
    CheckDef { id: "C21", anchor: "RG is GNC when R is GNC, p is nilpotent in R, and G is a locally finite p-group", description: "RG is GNC when R is GNC, p nilpotent, G a p-group" },
    CheckDef { id: "C22", anchor: "if the group ring RG is GNC then R is GNC", description: "a GNC group ring forces a GNC coefficient ring" },
    CheckDef { id: "C23", anchor: "Z3[C2] has Id = {0, 1, 2+g, 2+2g}, Nil = {0}, and 1+g not nil-clean", description: "the Z3C2 counterexample fixture, exact element sets" },
    CheckDef { id: "C24", anchor: "if RG is GNC with G abelian then G is a p-group with p nilpotent in R", description: "a GNC group ring over abelian G forces a p-group with p nilpotent" },
    CheckDef { id: "C25", anchor: "the augmentation map identifies RG/Δ(RG) with R", description: "RG modulo the augmentation ideal matches R" },
];

pub fn check_def(id: &str) -> Option<&'static CheckDef> {
    CHECK_DEFS.iter().find(|d| d.id == id)
}

pub struct CatalogEntry {
    pub text: String,
    pub expr: RingExpr,
    pub built: std::result::Result<Ring, String>,
}

pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Parse and build every expression; capacity overflows become recorded
    /// skips instead of hard errors, so oversized entries degrade gracefully.
    pub fn from_exprs<S: AsRef<str>>(texts: &[S], cfg: &BuildConfig) -> Result<Catalog> {
        let mut entries = Vec::with_capacity(texts.len());
        for text in texts {
            let text = text.as_ref().trim().to_string();
            if text.is_empty() {
                continue;
            }
            let parsed = expr::parse_ring_expr(&text)?;
            let built = match expr::build(&parsed, cfg) {
                Ok(ring) => Ok(ring),
                Err(e @ RingError::Capacity { .. }) => Err(e.to_string()),
                Err(e) => return Err(e),
            };
            entries.push(CatalogEntry {
                text,
                expr: parsed,
                built,
            });
        }
        Ok(Catalog { entries })
    }

    pub fn default_catalog(cfg: &BuildConfig) -> Result<Catalog> {
        let texts = default_catalog();
        Catalog::from_exprs(&texts, cfg)
    }

    pub fn rings(&self) -> impl Iterator<Item = &Ring> {
        self.entries.iter().filter_map(|e| e.built.as_ref().ok())
    }

    fn rings_with_exprs(&self) -> impl Iterator<Item = (&RingExpr, &Ring)> {
        self.entries
            .iter()
            .filter_map(|e| e.built.as_ref().ok().map(|r| (&e.expr, r)))
    }
}

/// The deterministic default ring list (134 expressions).
pub fn default_catalog() -> Vec<String> {
    let small = ["Zn(2)", "Zn(3)", "Zn(4)", "Zn(8)", "Zn(9)"];
    let bases3 = ["Zn(2)", "Zn(3)", "Zn(4)"];
    let mut texts: Vec<String> = (1..=64).map(|n| format!("Zn({n})")).collect();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            texts.push(format!("Prod({a},{b})"));
        }
    }
    for k in [2, 3, 4, 9] {
        texts.push(format!("M(2,Zn({k}))"));
    }
    for n in [2, 3] {
        for b in bases3 {
            texts.push(format!("T({n},{b})"));
        }
    }
    for n in [2, 3] {
        for b in bases3 {
            texts.push(format!("S({n},{b})"));
        }
    }
    for b in bases3 {
        texts.push(format!("Triv({b})"));
    }
    for n in [2, 3] {
        for b in bases3 {
            texts.push(format!("Rn({b},{n})"));
        }
    }
    for b in bases3 {
        texts.push(format!("Anm({b},2,2)"));
    }
    for b in bases3 {
        texts.push(format!("Bnm({b},2,2)"));
    }
    // central nilpotent and unit twists: Z2 has s ∈ {0,1}, Z4 has {0,2,1,3}
    for (b, ss) in [("Zn(2)", vec![0, 1]), ("Zn(4)", vec![0, 2, 1, 3])] {
        for &s in &ss {
            texts.push(format!("Ks({b},{s})"));
        }
        for &s in &ss {
            texts.push(format!("Ms(2,{b},{s})"));
        }
    }
    for b in bases3 {
        for g in ["C(2)", "C(3)", "C(4)", "C(2)xC(2)"] {
            texts.push(format!("RG({b},{g})"));
        }
    }
    texts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub ring: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub status: CheckStatus,
    pub rings_examined: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub runtime_ms: u128,
}

fn cx(ring: &FiniteRing, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        ring: ring.label().to_string(),
        detail: detail.into(),
        certificate: None,
    }
}

fn cx_cert(ring: &FiniteRing, detail: impl Into<String>, cert: Option<Certificate>) -> Counterexample {
    Counterexample {
        ring: ring.label().to_string(),
        detail: detail.into(),
        certificate: cert,
    }
}

fn holds(r: &FiniteRing, p: RingProperty) -> bool {
    ring_predicate(r, p).holds
}

fn j_is_nil(r: &FiniteRing) -> bool {
    let sets = r.element_sets();
    ElementSets::members(&sets.jacobson)
        .into_iter()
        .all(|x| sets.nilpotents[x])
}

/// 1 counts as a degenerate prime power here so the Z_n scan biconditional
/// covers the zero ring (which is vacuously GNC).
pub fn is_prime_power(n: usize) -> bool {
    if n == 1 {
        return true;
    }
    let mut n = n;
    let mut p = 0;
    for d in 2.. {
        if d * d > n {
            break;
        }
        if n % d == 0 {
            p = d;
            while n % d == 0 {
                n /= d;
            }
            break;
        }
    }
    if p == 0 {
        return true; // n itself is prime
    }
    n == 1
}

#[derive(Debug, Clone, Serialize)]
pub struct ZnScanRow {
    pub n: usize,
    pub gnc: bool,
    pub branch: SemilocalBranch,
    pub prime_power: bool,
}

/// Per-n GNC verdict and trichotomy branch; each row also records the
/// prime-power oracle so callers can assert the biconditional.
pub fn scan_zn(max_n: usize, cfg: &BuildConfig) -> Result<Vec<ZnScanRow>> {
    if max_n == 0 {
        return Err(RingError::input("scan requires max_n >= 1"));
    }
    (1..=max_n)
        .map(|n| {
            let ring = construct::build_zn(n, cfg)?;
            Ok(ZnScanRow {
                n,
                gnc: is_gnc(&ring).holds,
                branch: classify::semilocal_branch(&ring)?,
                prime_power: is_prime_power(n),
            })
        })
        .collect()
}

type CheckOutcome = (usize, Option<Counterexample>);

/// Run a closure over a family of rings, counting rings examined and
/// stopping at the first counterexample. Deterministic (catalog order).
fn sweep<'a, I>(rings: I, f: impl Fn(&Ring) -> Option<Counterexample>) -> CheckOutcome
where
    I: IntoIterator<Item = &'a Ring>,
{
    let mut examined = 0;
    for ring in rings {
        examined += 1;
        if let Some(c) = f(ring) {
            return (examined, Some(c));
        }
    }
    (examined, None)
}

pub fn run_check(id: &str, catalog: &Catalog, cfg: &BuildConfig) -> Result<CheckResult> {
    let def = check_def(id)
        .ok_or_else(|| RingError::input(format!("unknown check id: {id}")))?;
    let start = Instant::now();
    let outcome = match id {
        "C1" => sweep(catalog.rings(), |r| {
            if is_gnc(r).holds && !holds(r, RingProperty::Clean) {
                let v = ring_predicate(r, RingProperty::Clean);
                Some(cx_cert(r, "GNC ring is not clean", v.certificate))
            } else {
                None
            }
        }),
        "C2" => sweep(catalog.rings(), |r| {
            if is_gnc(r).holds && !j_is_nil(r) {
                Some(cx(r, "GNC ring has a non-nil Jacobson radical"))
            } else {
                None
            }
        }),
        "C3" => sweep(catalog.rings(), |r| {
            if !is_gnc(r).holds {
                return None;
            }
            let sets = r.element_sets();
            let mut img = r.zero();
            for n in 0..=2 * r.size() {
                if !sets.nilpotents[img] && !sets.units[img] {
                    return Some(cx(
                        r,
                        format!("{n}·1 = {} is neither nilpotent nor a unit", r.describe(img)),
                    ));
                }
                img = r.add(img, r.one());
            }
            None
        }),
        "C4" => sweep(catalog.rings(), |r| {
            // the field conclusion needs 1 ≠ 0; the zero ring satisfies the
            // hypotheses vacuously and is excluded
            if r.size() == 1 {
                return None;
            }
            let sets = r.element_sets();
            let two = r.int_image(2);
            let hyp = is_gnc(r).holds
                && sets.units[two]
                && ElementSets::members(&sets.units)
                    .into_iter()
                    .all(|u| r.mul(u, u) == r.one());
            if hyp && !holds(r, RingProperty::Field) {
                Some(cx(r, "hypotheses of the field theorem hold but the ring is not a field"))
            } else {
                None
            }
        }),
        "C5" => sweep(catalog.rings(), |r| {
            if !is_gnc(r).holds {
                return None;
            }
            let sets = r.element_sets();
            for q in ElementSets::members(&sets.nilpotents) {
                for j in ElementSets::members(&sets.jacobson) {
                    if !sets.nilpotents[r.add(q, j)] {
                        return Some(cx(
                            r,
                            format!(
                                "nilpotent {} + radical {} is not nilpotent",
                                r.describe(q),
                                r.describe(j)
                            ),
                        ));
                    }
                }
            }
            None
        }),
        "C6" => {
            let mut pairs = Vec::new();
            for b in ["Zn(2)", "Zn(3)", "Zn(4)"] {
                for shape in [
                    format!("Rn({b},2)"),
                    format!("Rn({b},3)"),
                    format!("Triv({b})"),
                    format!("Anm({b},2,2)"),
                    format!("Bnm({b},2,2)"),
                ] {
                    pairs.push((shape, b.to_string()));
                }
            }
            let mut examined = 0;
            let mut found = None;
            'outer: for (ext_text, base_text) in pairs {
                let ext = expr::build_from_text(&ext_text, cfg)?;
                let base = expr::build_from_text(&base_text, cfg)?;
                examined += 1;
                // the augmentation-free ideal: elements with zero constant
                // coordinate, which the encodings place at the low indices
                let block = ext.size() / base.size();
                let mask: Vec<bool> = (0..ext.size()).map(|x| x < block).collect();
                let sets = ext.element_sets();
                if let Some(x) = (0..block).find(|&x| !sets.nilpotents[x]) {
                    found = Some(cx(&ext, format!("ideal element {x} is not nilpotent")));
                    break 'outer;
                }
                let (quot, _) = iso::quotient(&ext, &mask)?;
                if !iso::tables_equal(&quot, &base) {
                    found = Some(cx(&ext, "quotient by the nil ideal differs from the base ring"));
                    break 'outer;
                }
                if is_gnc(&ext).holds != is_gnc(&base).holds {
                    found = Some(cx(&ext, "GNC disagrees between the ring and its nil-ideal quotient"));
                    break 'outer;
                }
            }
            (examined, found)
        }
        "C7" => {
            let small = ["Zn(2)", "Zn(3)", "Zn(4)", "Zn(8)", "Zn(9)"];
            let mut examined = 0;
            let mut found = None;
            'pairs: for (i, a) in small.iter().enumerate() {
                for b in &small[i..] {
                    let prod = expr::build_from_text(&format!("Prod({a},{b})"), cfg)?;
                    let fa = expr::build_from_text(a, cfg)?;
                    let fb = expr::build_from_text(b, cfg)?;
                    examined += 1;
                    let both_nc = holds(&fa, RingProperty::NilClean)
                        && holds(&fb, RingProperty::NilClean);
                    if is_gnc(&prod).holds != both_nc {
                        found = Some(cx(
                            &prod,
                            "product GNC disagrees with factors being nil-clean",
                        ));
                        break 'pairs;
                    }
                }
            }
            (examined, found)
        }
        "C8" => {
            let mut exprs = Vec::new();
            for b in ["Zn(2)", "Zn(3)", "Zn(4)"] {
                for shape in [
                    format!("Triv({b})"),
                    format!("S(2,{b})"),
                    format!("S(3,{b})"),
                    format!("Rn({b},2)"),
                    format!("Rn({b},3)"),
                    format!("Anm({b},2,2)"),
                    format!("Bnm({b},2,2)"),
                ] {
                    exprs.push((shape, b.to_string()));
                }
            }
            let mut examined = 0;
            let mut found = None;
            for (ext_text, base_text) in exprs {
                let ext = expr::build_from_text(&ext_text, cfg)?;
                let base = expr::build_from_text(&base_text, cfg)?;
                examined += 1;
                if is_gnc(&ext).holds != is_gnc(&base).holds {
                    found = Some(cx(&ext, format!("GNC disagrees with the base {base_text}")));
                    break;
                }
            }
            (examined, found)
        }
        "C9" => sweep(catalog.rings(), |r| {
            let sets = r.element_sets();
            let trivial_idems = sets.idempotents.iter().filter(|&&m| m).count() <= 2;
            if !trivial_idems {
                return None;
            }
            let gnc = is_gnc(r).holds;
            let local_nil = holds(r, RingProperty::Local) && j_is_nil(r);
            (gnc != local_nil).then(|| {
                cx(r, "trivial-idempotent ring: GNC disagrees with local-with-nil-J")
            })
        }),
        "C10" => {
            let f2 = construct::build_zn(2, cfg)?;
            let f3 = construct::build_zn(3, cfg)?;
            let f4 = construct::build_gf4(cfg)?;
            let mut family = vec![
                construct::build_matrix(f2.clone(), 2, construct::MatrixShape::Full, cfg)?,
                construct::build_matrix(f2, 3, construct::MatrixShape::Full, cfg)?,
                construct::build_matrix(f3, 2, construct::MatrixShape::Full, cfg)?,
                construct::build_matrix(f4, 2, construct::MatrixShape::Full, cfg)?,
            ];
            let mut examined = 0;
            let mut found = None;
            for m in family.drain(..) {
                examined += 1;
                // the base is F2 exactly when the matrix ring has 2^(n²) elements
                let over_f2 = iso::matrix_z2_dim(m.size()).is_some();
                let v = is_gnc(&m);
                if v.holds != over_f2 {
                    found = Some(cx_cert(
                        &m,
                        "GNC disagrees with the base field being F2",
                        v.certificate,
                    ));
                    break;
                }
            }
            (examined, found)
        }
        "C11" => {
            let mut examined = 0;
            let mut found = None;
            for r in catalog.rings() {
                if !is_gnc(r).holds {
                    continue;
                }
                examined += 1;
                if classify::semilocal_branch(r)? == SemilocalBranch::None {
                    found = Some(cx(r, "GNC ring received no trichotomy branch"));
                    break;
                }
            }
            (examined, found)
        }
        "C12" => {
            let rows = scan_zn(64, cfg)?;
            let examined = rows.len();
            let found = rows.iter().find(|row| row.gnc != row.prime_power).map(|row| {
                Counterexample {
                    ring: format!("Zn({})", row.n),
                    detail: format!(
                        "gnc = {} but prime-power = {}",
                        row.gnc, row.prime_power
                    ),
                    certificate: None,
                }
            });
            (examined, found)
        }
        "C13" => sweep(catalog.rings(), |r| {
            if !holds(r, RingProperty::Abelian) {
                return None;
            }
            let gnc = is_gnc(r).holds;
            let dichotomy = (holds(r, RingProperty::Local) && j_is_nil(r))
                || holds(r, RingProperty::StronglyNilClean);
            (gnc != dichotomy)
                .then(|| cx(r, "abelian ring: GNC disagrees with the local/strongly-nil-clean dichotomy"))
        }),
        "C14" => sweep(catalog.rings(), |r| {
            let nr = holds(r, RingProperty::Nr);
            if nr {
                // NR dichotomy: GNC ⇔ local-with-nil-J or strongly nil-clean
                let gnc = is_gnc(r).holds;
                let dichotomy = (holds(r, RingProperty::Local) && j_is_nil(r))
                    || holds(r, RingProperty::StronglyNilClean);
                if gnc != dichotomy {
                    return Some(cx(r, "NR ring: GNC disagrees with the dichotomy"));
                }
            }
            if !is_gnc(r).holds {
                return None;
            }
            if nr != holds(r, RingProperty::Ni) {
                return Some(cx(r, "GNC ring: NR and NI verdicts disagree"));
            }
            if nr && !holds(r, RingProperty::TwoPrimalFinite) {
                return Some(cx(r, "GNC NR ring with J(R) ≠ Nil(R)"));
            }
            None
        }),
        "C15" => sweep(catalog.rings(), |r| {
            let snc = holds(r, RingProperty::StronglyNilClean);
            let both = holds(r, RingProperty::Uu) && is_gnc(r).holds;
            (snc != both).then(|| cx(r, "strongly nil-clean disagrees with UU ∧ GNC"))
        }),
        "C16" => {
            let mut examined = 0;
            let mut found = None;
            for (e, m) in catalog.rings_with_exprs() {
                let base = match e {
                    RingExpr::Matrix {
                        shape: construct::MatrixShape::Full,
                        base,
                        ..
                    } => match base.as_ref() {
                        RingExpr::Zn(k) => construct::build_zn(*k, cfg)?,
                        _ => continue,
                    },
                    _ => continue,
                };
                examined += 1;
                let (base_mod_j, _) = iso::quotient(&base, &base.element_sets().jacobson)?;
                let expected =
                    holds(&base_mod_j, RingProperty::Boolean) && j_is_nil(m);
                if is_gnc(m).holds != expected {
                    found = Some(cx(m, "GNC disagrees with base/J Boolean ∧ nil radical"));
                    break;
                }
            }
            (examined, found)
        }
        "C17" => {
            let mut examined = 0;
            let mut found = None;
            'c17: for n in [2usize, 3] {
                for b in ["Zn(2)", "Zn(3)", "Zn(4)"] {
                    let t = expr::build_from_text(&format!("T({n},{b})"), cfg)?;
                    let base = expr::build_from_text(b, cfg)?;
                    examined += 1;
                    if is_gnc(&t).holds != holds(&base, RingProperty::NilClean) {
                        found = Some(cx(&t, format!("GNC disagrees with nil-clean({b})")));
                        break 'c17;
                    }
                }
            }
            (examined, found)
        }
        "C18" | "C19" => {
            // central nilpotent twists only, per the corollaries
            let families = [("Zn(2)", vec![0usize]), ("Zn(4)", vec![0, 2])];
            let mut examined = 0;
            let mut found = None;
            'twists: for (b, ss) in families {
                for s in ss {
                    let text = if id == "C18" {
                        format!("Ks({b},{s})")
                    } else {
                        format!("Ms(2,{b},{s})")
                    };
                    let k = expr::build_from_text(&text, cfg)?;
                    let base = expr::build_from_text(b, cfg)?;
                    examined += 1;
                    if is_gnc(&k).holds != holds(&base, RingProperty::NilClean) {
                        found = Some(cx(&k, format!("GNC disagrees with nil-clean({b})")));
                        break 'twists;
                    }
                }
            }
            (examined, found)
        }
        "C20" => {
            let bases = ["Zn(2)", "Zn(3)", "Zn(4)"];
            let mut texts: Vec<(String, String, String)> = Vec::new();
            for a in bases {
                for b in bases {
                    texts.push((format!("TT({a},{b},zero)"), a.into(), b.into()));
                }
                texts.push((format!("TT({a},{a},regular)"), a.into(), a.into()));
            }
            let mut examined = 0;
            let mut found = None;
            for (text, a, b) in texts {
                let t = expr::build_from_text(&text, cfg)?;
                let ra = expr::build_from_text(&a, cfg)?;
                let rb = expr::build_from_text(&b, cfg)?;
                examined += 1;
                let both = holds(&ra, RingProperty::NilClean)
                    && holds(&rb, RingProperty::NilClean);
                if is_gnc(&t).holds != both {
                    found = Some(cx(&t, "GNC disagrees with both corners being nil-clean"));
                    break;
                }
            }
            (examined, found)
        }
        "C21" => {
            let mut examined = 0;
            let mut found = None;
            for (e, rg) in catalog.rings_with_exprs() {
                let RingExpr::Rg(base_expr, orders) = e else { continue };
                let base = expr::build(base_expr, cfg)?;
                let group = construct::build_group(orders)?;
                let hyp = is_gnc(&base).holds
                    && primes_dividing(group.size).iter().any(|&p| {
                        group.is_p_group(p) && base.element_sets().nilpotents[base.int_image(p)]
                    });
                if !hyp {
                    continue;
                }
                examined += 1;
                if !is_gnc(rg).holds {
                    found = Some(cx(rg, "hypotheses of the group-ring lemma hold but RG is not GNC"));
                    break;
                }
            }
            (examined, found)
        }
        "C22" => {
            let mut examined = 0;
            let mut found = None;
            for (e, rg) in catalog.rings_with_exprs() {
                let RingExpr::Rg(base_expr, _) = e else { continue };
                examined += 1;
                if is_gnc(rg).holds {
                    let base = expr::build(base_expr, cfg)?;
                    if !is_gnc(&base).holds {
                        found = Some(cx(rg, "GNC group ring over a non-GNC coefficient ring"));
                        break;
                    }
                }
            }
            (examined, found)
        }
        "C23" => {
            let rg = expr::build_from_text("RG(Zn(3),C(2))", cfg)?;
            let sets = rg.element_sets();
            let idems = ElementSets::members(&sets.idempotents);
            let nils = ElementSets::members(&sets.nilpotents);
            let one_plus_g = 4; // coefficient vector (1,1)
            let mut found = None;
            if idems != vec![0, 3, 7, 8] {
                found = Some(cx(&rg, format!("Id(RG) = {idems:?}, expected [0, 3, 7, 8]")));
            } else if nils != vec![0] {
                found = Some(cx(&rg, format!("Nil(RG) = {nils:?}, expected [0]")));
            } else if sets.units[one_plus_g] {
                found = Some(cx(&rg, "1+g is unexpectedly a unit"));
            } else if classify::decompose(&rg, one_plus_g, DecompKind::NilClean)?.is_witness() {
                found = Some(cx(&rg, "1+g is unexpectedly nil-clean"));
            }
            (1, found)
        }
        "C24" => {
            let mut examined = 0;
            let mut found = None;
            for (e, rg) in catalog.rings_with_exprs() {
                let RingExpr::Rg(base_expr, orders) = e else { continue };
                examined += 1;
                if !is_gnc(rg).holds {
                    continue;
                }
                let base = expr::build(base_expr, cfg)?;
                let group = construct::build_group(orders)?;
                let ok = group.abelian
                    && primes_dividing(group.size).iter().any(|&p| {
                        group.is_p_group(p) && base.element_sets().nilpotents[base.int_image(p)]
                    });
                if !ok {
                    found = Some(cx(
                        rg,
                        "GNC group ring but G is not a p-group with p nilpotent in R",
                    ));
                    break;
                }
            }
            (examined, found)
        }
        "C25" => {
            let mut examined = 0;
            let mut found = None;
            for (e, rg) in catalog.rings_with_exprs() {
                let RingExpr::Rg(base_expr, _) = e else { continue };
                examined += 1;
                let base = expr::build(base_expr, cfg)?;
                let delta = construct::augmentation_ideal(rg)?;
                let mut mask = vec![false; rg.size()];
                for x in delta {
                    mask[x] = true;
                }
                let (quot, _) = iso::quotient(rg, &mask)?;
                if !iso::tables_equal(&quot, &base) {
                    found = Some(cx(rg, "RG/Δ differs from the coefficient ring"));
                    break;
                }
            }
            (examined, found)
        }
        _ => unreachable!("ids validated against CHECK_DEFS"),
    };
    let (rings_examined, counterexample) = outcome;
    Ok(CheckResult {
        id: def.id.to_string(),
        anchor: def.anchor.to_string(),
        status: if counterexample.is_some() {
            CheckStatus::Fail
        } else {
            CheckStatus::Pass
        },
        rings_examined,
        counterexample,
        runtime_ms: start.elapsed().as_millis(),
    })
}

fn primes_dividing(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

/// Run the requested checks (all 25 when `only` is None) in check-ID order.
pub fn run_all(catalog: &Catalog, cfg: &BuildConfig, only: Option<&[String]>) -> Result<SuiteReport> {
    if let Some(ids) = only {
        for id in ids {
            if check_def(id).is_none() {
                return Err(RingError::input(format!("unknown check id: {id}")));
            }
        }
    }
    let mut results = Vec::new();
    for def in &CHECK_DEFS {
        if let Some(ids) = only {
            if !ids.iter().any(|i| i == def.id) {
                continue;
            }
        }
        let result = match run_check(def.id, catalog, cfg) {
            Ok(r) => r,
            Err(RingError::Capacity { label, .. }) => CheckResult {
                id: def.id.to_string(),
                anchor: def.anchor.to_string(),
                status: CheckStatus::Skipped,
                rings_examined: 0,
                counterexample: Some(Counterexample {
                    ring: label,
                    detail: "capacity exceeded".into(),
                    certificate: None,
                }),
                runtime_ms: 0,
            },
            Err(e) => return Err(e),
        };
        results.push(result);
    }
    let summary = Summary {
        pass: results.iter().filter(|r| r.status == CheckStatus::Pass).count(),
        fail: results.iter().filter(|r| r.status == CheckStatus::Fail).count(),
        skipped: results.iter().filter(|r| r.status == CheckStatus::Skipped).count(),
    };
    Ok(SuiteReport { results, summary })
}

/// Markdown rendering of a suite report: one table row per check.
pub fn render_markdown(report: &SuiteReport) -> String {
    let mut out = String::from("| id | status | rings | anchor |\n|---|---|---|---|\n");
    for r in &report.results {
        let status = match r.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            r.id,
            status,
            r.rings_examined,
            r.anchor.replace('|', "\\|")
        ));
        if let Some(c) = &r.counterexample {
            out.push_str(&format!("|  |  |  | ↳ {}: {} |\n", c.ring, c.detail));
        }
    }
    out.push_str(&format!(
        "\n{} pass, {} fail, {} skipped\n",
        report.summary.pass, report.summary.fail, report.summary.skipped
    ));
    out
}
