//! Complemented-pointwise maps, the formally compatible families, and an
//! exhaustive scan comparing them with the compatible images on small
//! S(n,r).
//!
//! A map is complemented pointwise when no domain string `w` splits into a
//! partition `w : w_1 ≀ .. ≀ w_k` whose blocks all lie in the domain and all
//! carry the sign opposite to `A(w)`. Strings with no in-domain partition
//! satisfy the condition vacuously.

use alloc::vec::Vec;

use crate::core_engine::{enumerate_family, fundamental_core};
use crate::error::Result;
use crate::maps::{MapFamily, PartialMap, Polarity, Sign};
use crate::snr::{SnrLattice, SnrParams, SnrString};
use crate::system::{compatible, NrSystem};

/// A string and an in-domain partition of it whose blocks all have the
/// opposite sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointwiseViolation {
    pub string: SnrString,
    pub sign: Sign,
    pub blocks: Vec<SnrString>,
}

/// Searches an opposite-signed exact cover of `mask` by domain strings;
/// blocks are chosen by their lowest bit so each partition is seen once.
fn opposite_cover(a: &PartialMap, mask: usize, opposite: Sign, out: &mut Vec<usize>) -> bool {
    if mask == 0 {
        return true;
    }
    let low = mask & mask.wrapping_neg();
    let rest = mask ^ low;
    // submasks of `rest`, each joined with `low`
    let mut sub = rest;
    loop {
        let block = sub | low;
        if a.get(block) == Some(opposite) {
            out.push(block);
            if opposite_cover(a, mask ^ block, opposite, out) {
                return true;
            }
            out.pop();
        }
        if sub == 0 {
            return false;
        }
        sub = (sub - 1) & rest;
    }
}

/// `Ok(())` if `a` is complemented pointwise, else the first violation in
/// element-index order.
pub fn is_complemented_pointwise(
    params: SnrParams,
    a: &PartialMap,
) -> core::result::Result<(), PointwiseViolation> {
    assert_eq!(a.universe(), params.element_count());
    for w in a.domain().iter().filter(|&w| w != 0) {
        let sign = a.get(w).expect("in domain");
        let mut blocks = Vec::new();
        // the whole string is never opposite to itself, so covers have >= 2 blocks
        if opposite_cover(a, w, sign.opposite(), &mut blocks) {
            return Err(PointwiseViolation {
                string: SnrString::from_index(params, w),
                sign,
                blocks: blocks
                    .into_iter()
                    .map(|b| SnrString::from_index(params, b))
                    .collect(),
            });
        }
    }
    Ok(())
}

/// Whether `blocks` is an in-domain partition of `w` with every block signed
/// opposite to `A(w)`.
pub fn violates_pointwise(a: &PartialMap, w: &SnrString, blocks: &[SnrString]) -> bool {
    let Some(sign) = a.get(w.index()) else {
        return false;
    };
    let mut union = 0usize;
    for b in blocks {
        let idx = b.index();
        if b.is_empty() || union & idx != 0 || a.get(idx) != Some(sign.opposite()) {
            return false;
        }
        union |= idx;
    }
    blocks.len() >= 2 && union == w.index()
}

/// `FC+(n,r)` / `FC-(n,r)`: total, order-preserving, complemented
/// pointwise, with the full string signed `P` / `N`.
pub fn in_fc(lattice: &SnrLattice, a: &PartialMap, polarity: Polarity) -> bool {
    a.is_total()
        && a.get(lattice.full_index()) == Some(polarity.full_string_sign())
        && a.is_order_preserving(lattice.poset())
        && is_complemented_pointwise(lattice.params(), a).is_ok()
}

pub fn in_fc_plus(lattice: &SnrLattice, a: &PartialMap) -> bool {
    in_fc(lattice, a, Polarity::Plus)
}

pub fn in_fc_minus(lattice: &SnrLattice, a: &PartialMap) -> bool {
    in_fc(lattice, a, Polarity::Minus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Question {
    /// Is every map in `FC+(n,r)` the image of a compatible total system?
    Q2,
    /// The same for `FC-(n,r)`.
    Q3,
}

impl Question {
    pub fn polarity(self) -> Polarity {
        match self {
            Question::Q2 => Polarity::Plus,
            Question::Q3 => Polarity::Minus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanVerdict {
    Equal,
    /// A formally compatible map whose system is not compatible.
    StrictWithWitness(PartialMap),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub params: SnrParams,
    pub which: Question,
    pub family_count: usize,
    pub fc_count: usize,
    /// Family members whose system is compatible.
    pub compatible_count: usize,
    /// Compatible members outside the formally compatible family; always 0
    /// if the known inclusion holds.
    pub compatible_outside_fc: usize,
    pub verdict: ScanVerdict,
}

/// Compatibility of `τ(a)` decided through the fundamental core.
pub fn compatible_via_core(
    lattice: &SnrLattice,
    a: &PartialMap,
    polarity: Polarity,
) -> Result<bool> {
    let core = fundamental_core(lattice.sip(), a, polarity)?;
    let system = NrSystem::from_partial_map(lattice.params(), &core.core)?;
    Ok(compatible(&system).is_compatible())
}

pub fn conjecture_scan(
    lattice: &SnrLattice,
    which: Question,
    cap: usize,
) -> Result<ConjectureReport> {
    let polarity = which.polarity();
    let family = match polarity {
        Polarity::Plus => MapFamily::WPlusNr,
        Polarity::Minus => MapFamily::WMinusNr,
    };
    let mut report = ConjectureReport {
        params: lattice.params(),
        which,
        family_count: 0,
        fc_count: 0,
        compatible_count: 0,
        compatible_outside_fc: 0,
        verdict: ScanVerdict::Equal,
    };
    for a in enumerate_family(lattice, family, cap)? {
        report.family_count += 1;
        let fc = in_fc(lattice, &a, polarity);
        let ok = compatible_via_core(lattice, &a, polarity)?;
        report.fc_count += usize::from(fc);
        report.compatible_count += usize::from(ok);
        if ok && !fc {
            report.compatible_outside_fc += 1;
        }
        if fc && !ok && report.verdict == ScanVerdict::Equal {
            report.verdict = ScanVerdict::StrictWithWitness(a);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(n: usize, r: usize) -> SnrLattice {
        SnrLattice::build(SnrParams::new(n, r).unwrap()).unwrap()
    }

    fn map(l: &SnrLattice, entries: &[(&str, Sign)]) -> PartialMap {
        let mut a = PartialMap::empty(l.len());
        for (t, s) in entries {
            a.set(SnrString::parse(t, l.params()).unwrap().index(), *s);
        }
        a
    }

    #[test]
    fn constant_maps_are_pointwise() {
        let l = lattice(4, 2);
        for s in [Sign::P, Sign::N] {
            assert!(
                is_complemented_pointwise(l.params(), &PartialMap::constant(l.len(), s)).is_ok()
            );
        }
        assert!(in_fc_plus(&l, &PartialMap::constant(l.len(), Sign::P)));
        assert!(!in_fc_minus(&l, &PartialMap::constant(l.len(), Sign::P)));
    }

    #[test]
    fn two_block_violation() {
        let l = lattice(3, 2);
        let a = map(
            &l,
            &[("21|0", Sign::N), ("20|0", Sign::P), ("10|0", Sign::P)],
        );
        let v = is_complemented_pointwise(l.params(), &a).unwrap_err();
        assert_eq!(v.string.format(), "21|0");
        assert_eq!(v.blocks.len(), 2);
        assert!(violates_pointwise(&a, &v.string, &v.blocks));
        // without one block the partition leaves the domain
        let b = map(&l, &[("21|0", Sign::N), ("20|0", Sign::P)]);
        assert!(is_complemented_pointwise(l.params(), &b).is_ok());
    }

    #[test]
    fn violation_helper_rejects_non_partitions() {
        let l = lattice(3, 2);
        let a = map(
            &l,
            &[
                ("21|0", Sign::N),
                ("20|0", Sign::P),
                ("10|0", Sign::P),
                ("21|1", Sign::P),
            ],
        );
        let w = SnrString::parse("21|0", l.params()).unwrap();
        let b1 = SnrString::parse("20|0", l.params()).unwrap();
        let b2 = SnrString::parse("10|0", l.params()).unwrap();
        let big = SnrString::parse("21|1", l.params()).unwrap();
        assert!(violates_pointwise(&a, &w, &[b1, b2]));
        assert!(!violates_pointwise(&a, &w, &[b1]));
        assert!(!violates_pointwise(&a, &w, &[b1, b1]));
        assert!(!violates_pointwise(&a, &w, &[big]));
    }

    #[test]
    fn small_scans_are_consistent() {
        let l = lattice(3, 2);
        for which in [Question::Q2, Question::Q3] {
            let report = conjecture_scan(&l, which, 32).unwrap();
            assert!(report.compatible_count <= report.fc_count);
            assert!(report.fc_count <= report.family_count);
            assert_eq!(report.compatible_outside_fc, 0);
        }
    }
}
