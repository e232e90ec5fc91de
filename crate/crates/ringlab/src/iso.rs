//! Quotient rings by two-sided ideals, table equality, and a small ring
//! isomorphism search used to recognize quotients of the form M_n(Z2).

use std::sync::Arc;

use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

/// Same carrier, same distinguished elements, same operation tables.
pub fn tables_equal(a: &FiniteRing, b: &FiniteRing) -> bool {
    if a.size() != b.size() || a.zero() != b.zero() || a.one() != b.one() {
        return false;
    }
    let n = a.size();
    (0..n * n).all(|i| {
        let (x, y) = (i / n, i % n);
        a.add(x, y) == b.add(x, y) && a.mul(x, y) == b.mul(x, y)
    })
}

/// Verify that `ideal` (an index set) really is a two-sided ideal of `ring`.
fn check_ideal(ring: &FiniteRing, ideal: &[bool]) -> Result<()> {
    let members: Vec<usize> = ideal
        .iter()
        .enumerate()
        .filter_map(|(i, &m)| m.then_some(i))
        .collect();
    let fail = |law, w| {
        Err(RingError::Validation {
            label: format!("{}/I", ring.label()),
            law,
            witness: w,
        })
    };
    if !ideal[ring.zero()] {
        return fail("ideal contains zero", (ring.zero(), 0, 0));
    }
    for &a in &members {
        for &b in &members {
            if !ideal[ring.sub(a, b)] {
                return fail("ideal closed under subtraction", (a, b, 0));
            }
        }
        for y in 0..ring.size() {
            if !ideal[ring.mul(y, a)] || !ideal[ring.mul(a, y)] {
                return fail("ideal absorbs multiplication", (a, y, 0));
            }
        }
    }
    Ok(())
}

/// The quotient R/I over a two-sided ideal given as a membership mask.
/// Cosets are represented by their least member, so when I = {0} the
/// projection is the identity and the quotient is table-identical to R.
/// Returns the quotient and the projection R -> R/I as index maps.
pub fn quotient(ring: &Arc<FiniteRing>, ideal: &[bool]) -> Result<(Arc<FiniteRing>, Vec<usize>)> {
    if ideal.len() != ring.size() {
        return Err(RingError::input("ideal mask size mismatch"));
    }
    check_ideal(ring, ideal)?;
    let n = ring.size();
    // coset of x = { x + i : i in I }; least member is the representative
    let mut rep_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if rep_of[x] != usize::MAX {
            continue;
        }
        let rep = reps.len();
        reps.push(x);
        for (i, &in_ideal) in ideal.iter().enumerate() {
            if in_ideal {
                rep_of[ring.add(x, i)] = rep;
            }
        }
        if rep_of[x] == usize::MAX {
            return Err(RingError::input("ideal mask is not additively closed"));
        }
    }
    let q = reps.len();
    let add: Vec<usize> = (0..q * q)
        .map(|i| rep_of[ring.add(reps[i / q], reps[i % q])])
        .collect();
    let mul: Vec<usize> = (0..q * q)
        .map(|i| rep_of[ring.mul(reps[i / q], reps[i % q])])
        .collect();
    let label = format!("{}/I", ring.label());
    let quot = FiniteRing::from_tables(label, q, rep_of[ring.zero()], rep_of[ring.one()], add, mul)?;
    Ok((Arc::new(quot), rep_of))
}

/// If `size` = 2^(n^2) for some n >= 1, the n.
pub fn matrix_z2_dim(size: usize) -> Option<usize> {
    if !size.is_power_of_two() {
        return None;
    }
    let e = size.trailing_zeros() as usize;
    let n = (e as f64).sqrt().round() as usize;
    (n >= 1 && n * n == e).then_some(n)
}

/// Search for a ring isomorphism a -> b by assigning images of additive
/// generators and extending additively; backtracks on any multiplicative
/// clash. Returns the image map when one exists. Intended for small rings
/// (the quotient-recognition checks cap at size 16 = M_2(Z2)).
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    if n == 1 {
        return Some(vec![0]);
    }
    // quick invariant screen before searching
    let (sa, sb) = (a.element_sets(), b.element_sets());
    let count = |m: &[bool]| m.iter().filter(|&&v| v).count();
    if count(&sa.units) != count(&sb.units)
        || count(&sa.idempotents) != count(&sb.idempotents)
        || count(&sa.nilpotents) != count(&sb.nilpotents)
        || count(&sa.center) != count(&sb.center)
    {
        return None;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.zero()] = b.zero();
    used[b.zero()] = true;
    if a.one() != a.zero() {
        map[a.one()] = b.one();
        if used[b.one()] {
            return None;
        }
        used[b.one()] = true;
    }
    if !close_additively(a, b, &mut map, &mut used) {
        return None;
    }
    extend(a, b, &mut map, &mut used).then(|| map)
}

/// Propagate phi(x + y) = phi(x) + phi(y) over all already-mapped pairs.
/// Fails on any clash with existing assignments.
fn close_additively(
    a: &FiniteRing,
    b: &FiniteRing,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = a.size();
    loop {
        let mut changed = false;
        let assigned: Vec<usize> = (0..n).filter(|&x| map[x] != usize::MAX).collect();
        for &x in &assigned {
            for &y in &assigned {
                let s = a.add(x, y);
                let img = b.add(map[x], map[y]);
                if map[s] == usize::MAX {
                    if used[img] {
                        return false;
                    }
                    map[s] = img;
                    used[img] = true;
                    changed = true;
                } else if map[s] != img {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn is_full_hom(a: &FiniteRing, b: &FiniteRing, map: &[usize]) -> bool {
    let n = a.size();
    (0..n * n).all(|i| {
        let (x, y) = (i / n, i % n);
        map[a.add(x, y)] == b.add(map[x], map[y]) && map[a.mul(x, y)] == b.mul(map[x], map[y])
    })
}

fn extend(a: &FiniteRing, b: &FiniteRing, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = a.size();
    let next = match (0..n).find(|&x| map[x] == usize::MAX) {
        Some(x) => x,
        None => return is_full_hom(a, b, map),
    };
    let snapshot_map = map.to_vec();
    let snapshot_used = used.to_vec();
    for img in 0..n {
        if used[img] {
            continue;
        }
        map[next] = img;
        used[img] = true;
        if close_additively(a, b, map, used) && extend(a, b, map, used) {
            return true;
        }
        map.copy_from_slice(&snapshot_map);
        used.copy_from_slice(&snapshot_used);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        build_group, build_group_ring, build_matrix, build_product, build_zn, BuildConfig,
        MatrixShape,
    };
    use crate::ring::ElementSets;

    fn cfg() -> BuildConfig {
        BuildConfig::default()
    }

    fn zn(n: usize) -> Arc<FiniteRing> {
        build_zn(n, &cfg()).unwrap()
    }

    #[test]
    fn quotient_z12_by_multiples_of_4() {
        let z12 = zn(12);
        let ideal: Vec<bool> = (0..12).map(|x| x % 4 == 0).collect();
        let (q, proj) = quotient(&z12, &ideal).unwrap();
        assert_eq!(q.size(), 4);
        assert!(tables_equal(&q, &zn(4)));
        assert_eq!(proj[5], 1);
        assert_eq!(proj[11], 3);
    }

    #[test]
    fn quotient_by_zero_ideal_is_identity() {
        let z6 = zn(6);
        let ideal: Vec<bool> = (0..6).map(|x| x == 0).collect();
        let (q, proj) = quotient(&z6, &ideal).unwrap();
        assert!(tables_equal(&q, &z6));
        assert_eq!(proj, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn quotient_by_jacobson_radical() {
        let z12 = zn(12);
        let j = z12.element_sets().jacobson.clone();
        let (q, _) = quotient(&z12, &j).unwrap();
        assert_eq!(q.size(), 6);
        assert!(tables_equal(&q, &zn(6)));
        // the quotient by J is semisimple: J(R/J) = 0
        assert_eq!(ElementSets::members(&q.element_sets().jacobson), vec![0]);
    }

    #[test]
    fn non_ideal_rejected() {
        let z6 = zn(6);
        let not_ideal: Vec<bool> = (0..6).map(|x| x < 2).collect();
        assert!(quotient(&z6, &not_ideal).is_err());
    }

    #[test]
    fn matrix_z2_dim_examples() {
        assert_eq!(matrix_z2_dim(2), Some(1));
        assert_eq!(matrix_z2_dim(16), Some(2));
        assert_eq!(matrix_z2_dim(512), Some(3));
        assert_eq!(matrix_z2_dim(4), None);
        assert_eq!(matrix_z2_dim(6), None);
        assert_eq!(matrix_z2_dim(1), None);
    }

    #[test]
    fn iso_z2c2_vs_rn() {
        // Z2[C2] and Z2[x]/(x^2) are isomorphic via g -> 1 + x
        let rg = build_group_ring(zn(2), build_group(&[2]).unwrap(), &cfg()).unwrap();
        let r2 = crate::construct::build_rn(zn(2), 2, &cfg()).unwrap();
        let map = find_isomorphism(&rg, &r2).unwrap();
        assert!(is_full_hom(&rg, &r2, &map));
    }

    #[test]
    fn iso_rejects_non_isomorphic_same_size() {
        // Z4 and Z2 x Z2 share a carrier size but are not isomorphic
        let z4 = zn(4);
        let klein = build_product(vec![zn(2), zn(2)], &cfg()).unwrap();
        assert!(find_isomorphism(&z4, &klein).is_none());
    }

    #[test]
    fn iso_m2z2_against_itself_via_ks() {
        let m = build_matrix(zn(2), 2, MatrixShape::Full, &cfg()).unwrap();
        let k = crate::construct::build_ks(zn(2), 1, &cfg()).unwrap();
        let map = find_isomorphism(&k, &m).unwrap();
        assert!(is_full_hom(&k, &m, &map));
    }

    #[test]
    fn quotient_t2z2_by_strict_upper_is_z2_squared() {
        // T_2(Z2) mod its strictly-upper-triangular ideal = Z2 x Z2
        let t = build_matrix(zn(2), 2, MatrixShape::Upper, &cfg()).unwrap();
        // coords (a, b, d) for [[a,b],[0,d]]; ideal = {b free, a = d = 0}
        let ideal: Vec<bool> = (0..8).map(|x| x == 0 || x == 2).collect();
        let (q, _) = quotient(&t, &ideal).unwrap();
        assert_eq!(q.size(), 4);
        let klein = build_product(vec![zn(2), zn(2)], &cfg()).unwrap();
        assert!(find_isomorphism(&q, &klein).is_some());
    }
}
