//! Finite unital rings on a dense index carrier `0..size`, with element-level
//! classification (units, idempotents, nilpotents, Jacobson radical, center)
//! and exhaustive/sampled axiom validation.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Result, RingError};
use crate::par;

/// Structural operations for one constructed ring. Rings small enough to
/// materialize keep the kernel only for decoding elements into human-readable
/// form; larger rings evaluate every operation through it.
pub trait Kernel: Send + Sync {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn one(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;

    /// Structured rendering of an element ("2+2g", "[[1,0],[0,1]]", ...).
    fn describe(&self, x: usize) -> String {
        x.to_string()
    }

    /// Group-ring kernels expose their base ring and group; everything else
    /// reports None. Used by the augmentation operations.
    fn group_ring_parts(&self) -> Option<(&Arc<FiniteRing>, &Arc<crate::construct::FiniteGroup>)> {
        None
    }
}

/// Materialization threshold: rings at or below this carrier size get eager
/// operation tables, larger ones evaluate through their kernel.
pub const DEFAULT_MATERIALIZE_BOUND: usize = 4096;

/// Exhaustive-validation threshold; above it, validation samples triples.
pub const DEFAULT_VALIDATE_BOUND: usize = 512;

/// Hard cap on constructible carrier sizes.
pub const DEFAULT_CARRIER_CAP: usize = 1 << 20;

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

/// An immutable finite unital ring. The carrier is `0..size`; `zero` and
/// `one` are distinguished indices. Derived element sets are computed once
/// and cached; concurrent readers are safe.
pub struct FiniteRing {
    label: String,
    size: usize,
    zero: usize,
    one: usize,
    tables: Option<Tables>,
    kernel: Option<Arc<dyn Kernel>>,
    sets: OnceLock<ElementSets>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("size", &self.size)
            .finish()
    }
}

impl FiniteRing {
    /// Build from a structural kernel, materializing operation tables when
    /// the carrier fits under `materialize_bound`.
    pub fn from_kernel(
        label: impl Into<String>,
        kernel: Arc<dyn Kernel>,
        materialize_bound: usize,
    ) -> FiniteRing {
        let size = kernel.size();
        let tables = if size <= materialize_bound {
            let add = par::map_indices(size * size, |i| kernel.add(i / size, i % size) as u16);
            let mul = par::map_indices(size * size, |i| kernel.mul(i / size, i % size) as u16);
            let neg = (0..size).map(|a| kernel.neg(a) as u16).collect();
            Some(Tables { add, mul, neg })
        } else {
            None
        };
        FiniteRing {
            label: label.into(),
            size,
            zero: kernel.zero(),
            one: kernel.one(),
            tables,
            kernel: Some(kernel),
            sets: OnceLock::new(),
        }
    }

    /// Build from explicit Cayley tables (`add` and `mul` are row-major
    /// `size*size`). Negation is derived from the addition table.
    pub fn from_tables(
        label: impl Into<String>,
        size: usize,
        zero: usize,
        one: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
    ) -> Result<FiniteRing> {
        let label = label.into();
        if size == 0 {
            return Err(RingError::input("ring size must be positive"));
        }
        if size > u16::MAX as usize + 1 || size > DEFAULT_MATERIALIZE_BOUND {
            return Err(RingError::Capacity {
                label,
                required: size as u128,
                cap: DEFAULT_MATERIALIZE_BOUND,
            });
        }
        if add.len() != size * size || mul.len() != size * size {
            return Err(RingError::input(format!(
                "table shape mismatch for {label}: expected {n}x{n} add and mul",
                n = size
            )));
        }
        if zero >= size || one >= size {
            return Err(RingError::input("zero/one index out of range"));
        }
        if let Some(&bad) = add.iter().chain(mul.iter()).find(|&&v| v >= size) {
            return Err(RingError::input(format!(
                "table entry {bad} out of range for size {size}"
            )));
        }
        let mut neg = vec![u16::MAX; size];
        for a in 0..size {
            match (0..size).find(|&b| add[a * size + b] == zero) {
                Some(b) => neg[a] = b as u16,
                None => {
                    return Err(RingError::Validation {
                        label,
                        law: "additive inverse",
                        witness: (a, 0, 0),
                    })
                }
            }
        }
        Ok(FiniteRing {
            label,
            size,
            zero,
            one,
            tables: Some(Tables {
                add: add.into_iter().map(|v| v as u16).collect(),
                mul: mul.into_iter().map(|v| v as u16).collect(),
                neg,
            }),
            kernel: None,
            sets: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_materialized(&self) -> bool {
        self.tables.is_some()
    }

    pub fn kernel(&self) -> Option<&Arc<dyn Kernel>> {
        self.kernel.as_ref()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.add[a * self.size + b] as usize,
            None => self.kernel.as_ref().unwrap().add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.mul[a * self.size + b] as usize,
            None => self.kernel.as_ref().unwrap().mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        match &self.tables {
            Some(t) => t.neg[a] as usize,
            None => self.kernel.as_ref().unwrap().neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// x^k by repeated squaring, with x^0 = 1.
    pub fn pow(&self, x: usize, k: usize) -> Result<usize> {
        if x >= self.size {
            return Err(RingError::input(format!(
                "element {x} out of range for {} (size {})",
                self.label, self.size
            )));
        }
        let mut acc = self.one;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(base, base);
            }
        }
        Ok(acc)
    }

    /// Two-sided inverse of `x`, if it exists.
    pub fn unit_check(&self, x: usize) -> Result<Option<usize>> {
        if x >= self.size {
            return Err(RingError::input(format!(
                "element {x} out of range for {}",
                self.label
            )));
        }
        Ok((0..self.size).find(|&y| self.mul(x, y) == self.one && self.mul(y, x) == self.one))
    }

    /// Least t >= 1 with x^t = 0, if x is nilpotent. Nilpotency is decided by
    /// one fast power x^|R| (the power sequence enters its cycle within |R|
    /// steps, and a nilpotent's cycle is {0}); the index is then found by a
    /// forward scan.
    pub fn nilpotency_index(&self, x: usize) -> Result<Option<usize>> {
        if x >= self.size {
            return Err(RingError::input(format!(
                "element {x} out of range for {}",
                self.label
            )));
        }
        if self.pow(x, self.size)? != self.zero {
            return Ok(None);
        }
        let mut p = x;
        let mut t = 1usize;
        while p != self.zero {
            p = self.mul(p, x);
            t += 1;
        }
        Ok(Some(t))
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// Cached element sets; computed on first use.
    pub fn element_sets(&self) -> &ElementSets {
        self.sets.get_or_init(|| ElementSets::compute(self))
    }

    /// Per-element classification record.
    pub fn profile(&self, x: usize) -> Result<ElementProfile> {
        if x >= self.size {
            return Err(RingError::input(format!(
                "element {x} out of range for {}",
                self.label
            )));
        }
        let sets = self.element_sets();
        Ok(ElementProfile {
            element: x,
            is_unit: sets.units[x],
            inverse: sets.inverses[x].map(|v| v as usize),
            is_idempotent: self.is_idempotent(x),
            nilpotency_index: if sets.nilpotents[x] {
                self.nilpotency_index(x)?
            } else {
                None
            },
            in_jacobson: sets.jacobson[x],
            is_central: sets.center[x],
        })
    }

    /// Human-readable structured form of an element.
    pub fn describe(&self, x: usize) -> String {
        match &self.kernel {
            Some(k) => k.describe(x),
            None => x.to_string(),
        }
    }

    /// n·1 for an ordinary integer n (image of n under Z -> R).
    pub fn int_image(&self, n: usize) -> usize {
        let mut acc = self.zero;
        for _ in 0..n {
            acc = self.add(acc, self.one);
        }
        acc
    }

    /// Exhaustively (or, above `bound`, by a deterministic pseudorandom
    /// sample of 10·size triples) check the ring axioms.
    pub fn validate(&self, bound: usize, seed: u64) -> ValidationReport {
        let n = self.size;
        if n > 1 && self.zero == self.one {
            return ValidationReport {
                label: self.label.clone(),
                mode: ValidationMode::Exhaustive,
                violation: Some(AxiomViolation {
                    law: "zero and one distinct",
                    witness: (self.zero, self.one, 0),
                }),
            };
        }
        if n <= bound {
            let violation = self.validate_exhaustive();
            ValidationReport {
                label: self.label.clone(),
                mode: ValidationMode::Exhaustive,
                violation,
            }
        } else {
            let triples = 10 * n;
            let violation = self.validate_sampled(triples, seed);
            ValidationReport {
                label: self.label.clone(),
                mode: ValidationMode::Sampled { triples },
                violation,
            }
        }
    }

    fn check_triple(&self, a: usize, b: usize, c: usize) -> Option<AxiomViolation> {
        let fail = |law| Some(AxiomViolation { law, witness: (a, b, c) });
        if c == 0 {
            // pair and unary laws, hung off c == 0 so each (a, b) runs once
            if self.add(a, b) != self.add(b, a) {
                return fail("add commutative");
            }
            if b == 0 {
                if self.add(a, self.zero) != a {
                    return fail("additive identity");
                }
                if self.add(a, self.neg(a)) != self.zero {
                    return fail("additive inverse");
                }
                if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                    return fail("multiplicative identity");
                }
            }
        }
        if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
            return fail("add associative");
        }
        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
            return fail("mul associative");
        }
        if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
            return fail("left distributive");
        }
        if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
            return fail("right distributive");
        }
        None
    }

    fn validate_exhaustive(&self) -> Option<AxiomViolation> {
        let n = self.size;
        let hit = par::find_first(n * n, |ab| {
            let (a, b) = (ab / n, ab % n);
            (0..n).any(|c| self.check_triple(a, b, c).is_some())
        })?;
        let (a, b) = (hit / n, hit % n);
        (0..n).find_map(|c| self.check_triple(a, b, c))
    }

    fn validate_sampled(&self, triples: usize, seed: u64) -> Option<AxiomViolation> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.size;
        for _ in 0..triples {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            // run the pair laws too, on every sampled triple
            if let Some(v) = self
                .check_triple(a, b, 0)
                .or_else(|| self.check_triple(a, 0, 0))
                .or_else(|| self.check_triple(a, b, c))
            {
                return Some(v);
            }
        }
        None
    }
}

/// Cached carrier-wide classification sets, as membership masks over indices.
pub struct ElementSets {
    pub units: Vec<bool>,
    pub inverses: Vec<Option<u32>>,
    pub idempotents: Vec<bool>,
    pub nilpotents: Vec<bool>,
    pub jacobson: Vec<bool>,
    pub center: Vec<bool>,
}

impl ElementSets {
    fn compute(ring: &FiniteRing) -> ElementSets {
        let n = ring.size;
        let one = ring.one;
        let inverses: Vec<Option<u32>> = par::map_indices(n, |x| {
            (0..n)
                .find(|&y| ring.mul(x, y) == one && ring.mul(y, x) == one)
                .map(|y| y as u32)
        });
        let units: Vec<bool> = inverses.iter().map(|v| v.is_some()).collect();
        let idempotents: Vec<bool> = par::map_indices(n, |x| ring.mul(x, x) == x);
        let nilpotents: Vec<bool> =
            par::map_indices(n, |x| ring.pow(x, n).expect("in range") == ring.zero);
        // quasi-regular characterization: x in J iff 1 - yx is a unit for all y
        let jacobson: Vec<bool> = par::map_indices(n, |x| {
            (0..n).all(|y| units[ring.sub(one, ring.mul(y, x))])
        });
        let center: Vec<bool> =
            par::map_indices(n, |x| (0..n).all(|y| ring.mul(x, y) == ring.mul(y, x)));
        ElementSets {
            units,
            inverses,
            idempotents,
            nilpotents,
            jacobson,
            center,
        }
    }

    pub fn members(mask: &[bool]) -> Vec<usize> {
        mask.iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect()
    }

    pub fn members_complement(mask: &[bool]) -> Vec<usize> {
        mask.iter()
            .enumerate()
            .filter_map(|(i, &m)| (!m).then_some(i))
            .collect()
    }

    pub fn idempotent_list(&self) -> Vec<usize> {
        Self::members(&self.idempotents)
    }
}

/// Per-element classification record.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ElementProfile {
    pub element: usize,
    pub is_unit: bool,
    pub inverse: Option<usize>,
    pub is_idempotent: bool,
    pub nilpotency_index: Option<usize>,
    pub in_jacobson: bool,
    pub is_central: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub enum ValidationMode {
    Exhaustive,
    Sampled { triples: usize },
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub witness: (usize, usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub label: String,
    pub mode: ValidationMode,
    pub violation: Option<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn is_exhaustive(&self) -> bool {
        self.mode == ValidationMode::Exhaustive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_zn, BuildConfig};

    fn zn(n: usize) -> Arc<FiniteRing> {
        build_zn(n, &BuildConfig::default()).unwrap()
    }

    #[test]
    fn pow_examples() {
        let z4 = zn(4);
        assert_eq!(z4.pow(2, 2).unwrap(), 0);
        assert_eq!(z4.pow(3, 0).unwrap(), 1);
        let z8 = zn(8);
        assert_eq!(z8.pow(2, 3).unwrap(), 0);
        assert_eq!(z8.pow(2, 2).unwrap(), 4);
    }

    #[test]
    fn pow_matches_naive_iteration() {
        for n in [1usize, 2, 6, 12, 64] {
            let r = zn(n);
            for x in 0..r.size() {
                let mut acc = r.one();
                for k in 0..=16usize {
                    assert_eq!(r.pow(x, k).unwrap(), acc, "Z{n}, x={x}, k={k}");
                    acc = r.mul(acc, x);
                }
            }
        }
    }

    #[test]
    fn unit_check_examples() {
        let z6 = zn(6);
        assert_eq!(z6.unit_check(5).unwrap(), Some(5));
        assert_eq!(z6.unit_check(2).unwrap(), None);
        assert!(z6.unit_check(7).is_err());
    }

    #[test]
    fn nilpotency_examples() {
        let z8 = zn(8);
        assert_eq!(z8.nilpotency_index(2).unwrap(), Some(3));
        let z6 = zn(6);
        assert_eq!(z6.nilpotency_index(2).unwrap(), None);
        assert_eq!(z6.nilpotency_index(0).unwrap(), Some(1));
    }

    #[test]
    fn element_sets_z6() {
        let z6 = zn(6);
        let s = z6.element_sets();
        assert_eq!(ElementSets::members(&s.units), vec![1, 5]);
        assert_eq!(ElementSets::members(&s.idempotents), vec![0, 1, 3, 4]);
        assert_eq!(ElementSets::members(&s.nilpotents), vec![0]);
        assert_eq!(ElementSets::members(&s.jacobson), vec![0]);
    }

    #[test]
    fn jacobson_z12() {
        let z12 = zn(12);
        let s = z12.element_sets();
        assert_eq!(ElementSets::members(&s.jacobson), vec![0, 6]);
    }

    /// Independent two-sided oracle: J = { x : 1 - a·x·b is a unit for all a, b }.
    fn jacobson_two_sided_oracle(r: &FiniteRing) -> Vec<usize> {
        let units: Vec<bool> = (0..r.size())
            .map(|x| {
                (0..r.size()).any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
            })
            .collect();
        (0..r.size())
            .filter(|&x| {
                (0..r.size()).all(|a| {
                    (0..r.size())
                        .all(|b| units[r.sub(r.one(), r.mul(r.mul(a, x), b))])
                })
            })
            .collect()
    }

    #[test]
    fn jacobson_matches_two_sided_oracle() {
        use crate::construct::{build_matrix, MatrixShape};
        let cfg = BuildConfig::default();
        let mut rings = vec![zn(1), zn(4), zn(12), zn(36)];
        rings.push(build_matrix(zn(2), 2, MatrixShape::Full, &cfg).unwrap());
        rings.push(build_matrix(zn(2), 2, MatrixShape::Upper, &cfg).unwrap());
        rings.push(build_matrix(zn(3), 2, MatrixShape::Upper, &cfg).unwrap());
        for r in rings {
            assert!(r.size() <= 100);
            let s = r.element_sets();
            assert_eq!(
                ElementSets::members(&s.jacobson),
                jacobson_two_sided_oracle(&r),
                "ring {}",
                r.label()
            );
        }
    }

    #[test]
    fn jacobson_is_ideal_and_nil() {
        for n in [4usize, 6, 12, 16, 27] {
            let r = zn(n);
            let s = r.element_sets();
            let j = ElementSets::members(&s.jacobson);
            for &a in &j {
                assert!(s.nilpotents[a]);
                for &b in &j {
                    assert!(s.jacobson[r.add(a, b)]);
                }
                for y in 0..r.size() {
                    assert!(s.jacobson[r.mul(y, a)]);
                    assert!(s.jacobson[r.mul(a, y)]);
                }
            }
        }
    }

    #[test]
    fn unit_and_nilpotent_exclusive() {
        for n in [1usize, 2, 8, 12] {
            let r = zn(n);
            let s = r.element_sets();
            for x in 0..r.size() {
                if r.size() > 1 {
                    assert!(!(s.units[x] && s.nilpotents[x]));
                }
            }
        }
    }

    #[test]
    fn profile_z4() {
        let z4 = zn(4);
        let p = z4.profile(2).unwrap();
        assert!(!p.is_unit);
        assert!(!p.is_idempotent);
        assert_eq!(p.nilpotency_index, Some(2));
        assert!(p.in_jacobson);
        assert!(p.is_central);
        let p3 = z4.profile(3).unwrap();
        assert!(p3.is_unit);
        assert_eq!(p3.inverse, Some(3));
        assert!(!p3.is_idempotent);
        assert_eq!(p3.nilpotency_index, None);
        let pone = z4.profile(1).unwrap();
        assert!(pone.is_unit && pone.is_idempotent);
        assert_eq!(pone.inverse, Some(1));
    }

    #[test]
    fn validate_z7_and_broken_table() {
        let z7 = zn(7);
        let rep = z7.validate(DEFAULT_VALIDATE_BOUND, 0);
        assert!(rep.is_valid() && rep.is_exhaustive());

        // force mul(1,1) = 0: breaks the identity axiom
        let n = 2;
        let add = vec![0, 1, 1, 0];
        let mul = vec![0, 0, 0, 0];
        let broken = FiniteRing::from_tables("broken", n, 0, 1, add, mul).unwrap();
        let rep = broken.validate(DEFAULT_VALIDATE_BOUND, 0);
        assert!(!rep.is_valid());
        assert_eq!(rep.violation.unwrap().law, "multiplicative identity");
    }

    #[test]
    fn zero_ring_edge_cases() {
        let z1 = zn(1);
        assert_eq!(z1.zero(), z1.one());
        let s = z1.element_sets();
        assert!(s.units[0] && s.nilpotents[0] && s.idempotents[0]);
        assert_eq!(z1.nilpotency_index(0).unwrap(), Some(1));
        assert!(z1.validate(DEFAULT_VALIDATE_BOUND, 0).is_valid());
    }

    #[test]
    fn sampled_validation_above_bound() {
        let z16 = zn(16);
        let rep = z16.validate(8, 42);
        assert!(matches!(rep.mode, ValidationMode::Sampled { triples } if triples == 160));
        assert!(rep.is_valid());
    }
}
