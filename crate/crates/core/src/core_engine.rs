//! Cores and fundamental cores of weighted total maps, w-bases and the maps
//! they span, and brute-force family enumeration used to check uniqueness.
//!
//! For a map `A` in `W+(X,2)` with minimal positives `Min P` and maximal
//! negatives `Max N`, the fundamental core is
//! `(Min P \ (Max N)^c) ∪ Max N`; dually for `W-(X,2)`. A w+-basis
//! `<Y+ | Y->` spans the map that is `P` on `up(Y+) ∪ up(Y-^c)` and `N` on
//! `down(Y-)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::maps::{classify, MapFamily, PartialMap, Polarity, Sign};
use crate::poset::Sip;
use crate::set::ElementSet;
use crate::snr::SnrLattice;

/// Default bound on `|X|` for brute-force enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 32;

/// An ordered couple `<Y+ | Y->`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorePair {
    pub positive: ElementSet,
    pub negative: ElementSet,
}

impl CorePair {
    pub fn new(positive: ElementSet, negative: ElementSet) -> CorePair {
        CorePair { positive, negative }
    }

    /// The partial map `Y+ -> P`, `Y- -> N`; `None` if the parts overlap.
    pub fn to_map(&self) -> Option<PartialMap> {
        PartialMap::from_sets(self.positive.clone(), self.negative.clone())
    }

    pub fn from_map(a: &PartialMap) -> CorePair {
        CorePair::new(a.positives().clone(), a.negatives().clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreReport {
    pub core: PartialMap,
    pub pair: CorePair,
    pub polarity: Polarity,
}

/// The first basis axiom that fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisViolation {
    /// `Y+` and `Y-` share an element.
    NotDisjoint,
    /// The part with this sign is not an antichain.
    NotAntichain(Sign),
    B1(Polarity),
    B2(Polarity),
    B3(Polarity),
}

impl fmt::Display for BasisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = |p: &Polarity| match p {
            Polarity::Plus => "+",
            Polarity::Minus => "-",
        };
        match self {
            BasisViolation::NotDisjoint => f.write_str("disjoint"),
            BasisViolation::NotAntichain(Sign::P) => f.write_str("antichain(Y+)"),
            BasisViolation::NotAntichain(Sign::N) => f.write_str("antichain(Y-)"),
            BasisViolation::B1(p) => write!(f, "B1{}", tag(p)),
            BasisViolation::B2(p) => write!(f, "B2{}", tag(p)),
            BasisViolation::B3(p) => write!(f, "B3{}", tag(p)),
        }
    }
}

/// `N(A) = Min(A^{-1}(P)) ∪ Max(A^{-1}(N))`, as a restriction of `a`.
pub fn n_core(sip: &Sip, a: &PartialMap) -> Result<PartialMap> {
    if !a.is_weighted(sip, Polarity::Plus) && !a.is_weighted(sip, Polarity::Minus) {
        return Err(Error::NotWeighted);
    }
    let domain = a
        .minimal_positives(&sip.poset)
        .union(&a.maximal_negatives(&sip.poset));
    Ok(a.restrict(&domain))
}

pub fn fundamental_core(sip: &Sip, a: &PartialMap, polarity: Polarity) -> Result<CoreReport> {
    if !a.is_weighted(sip, polarity) {
        return Err(Error::NotWeighted);
    }
    let min_pos = a.minimal_positives(&sip.poset);
    let max_neg = a.maximal_negatives(&sip.poset);
    let pair = match polarity {
        Polarity::Plus => {
            let positive = min_pos.difference(&sip.complement_image(&max_neg));
            CorePair::new(positive, max_neg)
        }
        Polarity::Minus => {
            let negative = max_neg.difference(&sip.complement_image(&min_pos));
            CorePair::new(min_pos, negative)
        }
    };
    let core = pair.to_map().expect("preimages are disjoint");
    Ok(CoreReport {
        core,
        pair,
        polarity,
    })
}

pub fn fundamental_core_plus(sip: &Sip, a: &PartialMap) -> Result<CoreReport> {
    fundamental_core(sip, a, Polarity::Plus)
}

pub fn fundamental_core_minus(sip: &Sip, a: &PartialMap) -> Result<CoreReport> {
    fundamental_core(sip, a, Polarity::Minus)
}

/// `h+` / `h-`: the fundamental core split into its positive and negative parts.
pub fn h(sip: &Sip, a: &PartialMap, polarity: Polarity) -> Result<CorePair> {
    fundamental_core(sip, a, polarity).map(|report| report.pair)
}

pub fn check_w_basis(sip: &Sip, pair: &CorePair, polarity: Polarity) -> Result<(), BasisViolation> {
    let poset = &sip.poset;
    let (y_pos, y_neg) = (&pair.positive, &pair.negative);
    if y_pos.intersects(y_neg) {
        return Err(BasisViolation::NotDisjoint);
    }
    if !poset.is_antichain(y_pos) {
        return Err(BasisViolation::NotAntichain(Sign::P));
    }
    if !poset.is_antichain(y_neg) {
        return Err(BasisViolation::NotAntichain(Sign::N));
    }
    match polarity {
        Polarity::Plus => {
            let neg_c = sip.complement_image(y_neg);
            if poset.down_closure(y_pos).intersects(&neg_c) {
                return Err(BasisViolation::B1(polarity));
            }
            let upper = poset.up_closure(y_pos).union(&poset.up_closure(&neg_c));
            let lower = poset.down_closure(y_neg);
            if upper.intersects(&lower) {
                return Err(BasisViolation::B2(polarity));
            }
            if upper.union(&lower).len() != sip.len() {
                return Err(BasisViolation::B3(polarity));
            }
        }
        Polarity::Minus => {
            let pos_c = sip.complement_image(y_pos);
            if poset.up_closure(y_neg).intersects(&pos_c) {
                return Err(BasisViolation::B1(polarity));
            }
            let lower = poset.down_closure(y_neg).union(&poset.down_closure(&pos_c));
            let upper = poset.up_closure(y_pos);
            if lower.intersects(&upper) {
                return Err(BasisViolation::B2(polarity));
            }
            if upper.union(&lower).len() != sip.len() {
                return Err(BasisViolation::B3(polarity));
            }
        }
    }
    Ok(())
}

pub fn is_w_basis_plus(sip: &Sip, pair: &CorePair) -> bool {
    check_w_basis(sip, pair, Polarity::Plus).is_ok()
}

pub fn is_w_basis_minus(sip: &Sip, pair: &CorePair) -> bool {
    check_w_basis(sip, pair, Polarity::Minus).is_ok()
}

/// The unique weighted total map whose fundamental core is `pair`.
pub fn span(sip: &Sip, pair: &CorePair, polarity: Polarity) -> Result<PartialMap> {
    check_w_basis(sip, pair, polarity).map_err(Error::NotABasis)?;
    let poset = &sip.poset;
    let positives = match polarity {
        Polarity::Plus => poset
            .up_closure(&pair.positive)
            .union(&poset.up_closure(&sip.complement_image(&pair.negative))),
        Polarity::Minus => poset.up_closure(&pair.positive),
    };
    let map = PartialMap::total_from_positives(positives);
    debug_assert!(map.is_weighted(sip, polarity));
    Ok(map)
}

pub fn span_plus(sip: &Sip, pair: &CorePair) -> Result<PartialMap> {
    span(sip, pair, Polarity::Plus)
}

pub fn span_minus(sip: &Sip, pair: &CorePair) -> Result<PartialMap> {
    span(sip, pair, Polarity::Minus)
}

/// Depth-first enumeration of the weighted total maps of one polarity,
/// optionally with some signs fixed in advance.
///
/// Elements are decided top-down along a linear extension, so the `P`
/// region is an up-set by construction; the complemented filter prunes as
/// soon as both `x` and `x^c` are decided.
#[derive(Debug, Clone)]
pub struct FamilyIter<'a> {
    sip: &'a Sip,
    polarity: Polarity,
    order: Vec<usize>,
    fixed: Vec<Option<Sign>>,
    assign: Vec<Option<Sign>>,
    negatives: ElementSet,
    stack: Vec<Frame>,
    started: bool,
    exhausted: bool,
}

#[derive(Debug, Clone)]
struct Frame {
    element: usize,
    options: [Option<Sign>; 2],
    chosen: usize,
}

impl<'a> FamilyIter<'a> {
    pub fn new(sip: &'a Sip, polarity: Polarity, fixed: Vec<Option<Sign>>) -> FamilyIter<'a> {
        assert_eq!(fixed.len(), sip.len());
        FamilyIter {
            sip,
            polarity,
            order: sip.poset.top_down_order(),
            fixed,
            assign: vec![None; sip.len()],
            negatives: ElementSet::empty(sip.len()),
            stack: Vec::new(),
            started: false,
            exhausted: false,
        }
    }

    fn options(&self, x: usize) -> [Option<Sign>; 2] {
        let mut strictly_above = self.sip.poset.principal_up(x).clone();
        strictly_above.remove(x);
        let forced_n = strictly_above.intersects(&self.negatives);
        let cx = self.sip.complement(x);
        let allowed = |s: Sign| {
            if self.fixed[x].is_some_and(|f| f != s) {
                return false;
            }
            if s == Sign::P && forced_n {
                return false;
            }
            match (self.polarity, self.assign[cx]) {
                (Polarity::Plus, Some(Sign::N)) => s != Sign::N,
                (Polarity::Minus, Some(Sign::P)) => s != Sign::P,
                _ => true,
            }
        };
        let mut out = [None, None];
        let mut k = 0;
        for s in [Sign::P, Sign::N] {
            if allowed(s) {
                out[k] = Some(s);
                k += 1;
            }
        }
        out
    }

    fn apply(&mut self, x: usize, s: Sign) {
        self.assign[x] = Some(s);
        if s == Sign::N {
            self.negatives.insert(x);
        }
    }

    fn unapply(&mut self, x: usize) {
        self.assign[x] = None;
        self.negatives.remove(x);
    }

    /// Moves to the next untried option; false when the search is over.
    fn backtrack(&mut self) -> bool {
        while let Some(mut frame) = self.stack.pop() {
            self.unapply(frame.element);
            let next = frame.chosen + 1;
            if let Some(Some(s)) = frame.options.get(next) {
                frame.chosen = next;
                self.apply(frame.element, *s);
                self.stack.push(frame);
                return true;
            }
        }
        false
    }

    fn current_map(&self) -> PartialMap {
        let positives = ElementSet::from_indices(
            self.sip.len(),
            (0..self.sip.len()).filter(|&x| self.assign[x] == Some(Sign::P)),
        );
        PartialMap::total_from_positives(positives)
    }
}

impl Iterator for FamilyIter<'_> {
    type Item = PartialMap;

    fn next(&mut self) -> Option<PartialMap> {
        if self.exhausted {
            return None;
        }
        if self.started && !self.backtrack() {
            self.exhausted = true;
            return None;
        }
        self.started = true;
        loop {
            if self.stack.len() == self.order.len() {
                return Some(self.current_map());
            }
            let x = self.order[self.stack.len()];
            let options = self.options(x);
            match options[0] {
                Some(s) => {
                    self.stack.push(Frame {
                        element: x,
                        options,
                        chosen: 0,
                    });
                    self.apply(x, s);
                }
                None => {
                    if !self.backtrack() {
                        self.exhausted = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Weighted total maps of one polarity on an arbitrary SIP.
pub fn enumerate_weighted(sip: &Sip, polarity: Polarity, cap: usize) -> Result<FamilyIter<'_>> {
    check_cap(sip.len(), cap)?;
    Ok(FamilyIter::new(sip, polarity, vec![None; sip.len()]))
}

/// Members of `W+`, `W-`, `W+(n,r)` or `W-(n,r)` on S(n,r).
pub fn enumerate_family(
    lattice: &SnrLattice,
    family: MapFamily,
    cap: usize,
) -> Result<FamilyIter<'_>> {
    check_cap(lattice.len(), cap)?;
    let sip = lattice.sip();
    let mut fixed = vec![None; lattice.len()];
    let polarity = match family {
        MapFamily::WPlus => Polarity::Plus,
        MapFamily::WMinus => Polarity::Minus,
        MapFamily::WPlusNr | MapFamily::WMinusNr => {
            let polarity = if family == MapFamily::WPlusNr {
                Polarity::Plus
            } else {
                Polarity::Minus
            };
            for x in lattice.xi_indices() {
                fixed[x] = Some(Sign::P);
            }
            for x in lattice.eta_indices() {
                fixed[x] = Some(Sign::N);
            }
            let full = lattice.full_index();
            let wanted = polarity.full_string_sign();
            if fixed[full].is_some_and(|s| s != wanted) {
                // S(1,1): the full string is xi_1, which must be P
                return Ok(FamilyIter {
                    exhausted: true,
                    ..FamilyIter::new(sip, polarity, fixed)
                });
            }
            fixed[full] = Some(wanted);
            polarity
        }
        other => {
            return Err(Error::InvalidSystem(alloc::format!(
                "family {other:?} is not enumerable"
            )))
        }
    };
    Ok(FamilyIter::new(sip, polarity, fixed))
}

/// Members of an enumerable family that agree with `base` on its domain.
pub fn enumerate_extensions<'a>(
    lattice: &'a SnrLattice,
    family: MapFamily,
    base: &PartialMap,
    cap: usize,
) -> Result<FamilyIter<'a>> {
    if base.universe() != lattice.len() {
        return Err(Error::DimensionMismatch {
            expected: lattice.len(),
            found: base.universe(),
        });
    }
    let mut iter = enumerate_family(lattice, family, cap)?;
    for x in base.domain().iter() {
        let sign = base.get(x);
        match iter.fixed[x] {
            Some(s) if Some(s) != sign => iter.exhausted = true,
            _ => iter.fixed[x] = sign,
        }
    }
    Ok(iter)
}

fn check_cap(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        return Err(Error::CapExceeded {
            what: "|X|",
            value: len,
            cap,
        });
    }
    Ok(())
}

/// Uniqueness-of-extension checks against a pre-enumerated family.
#[derive(Debug, Clone)]
pub struct CoreOracle {
    members: Vec<PartialMap>,
}

impl CoreOracle {
    pub fn new(members: Vec<PartialMap>) -> CoreOracle {
        CoreOracle { members }
    }

    pub fn weighted(sip: &Sip, polarity: Polarity, cap: usize) -> Result<CoreOracle> {
        Ok(Self::new(enumerate_weighted(sip, polarity, cap)?.collect()))
    }

    pub fn family(lattice: &SnrLattice, family: MapFamily, cap: usize) -> Result<CoreOracle> {
        Ok(Self::new(enumerate_family(lattice, family, cap)?.collect()))
    }

    pub fn members(&self) -> &[PartialMap] {
        &self.members
    }

    /// Number of members agreeing with `a` on `w`, counted up to `limit`.
    pub fn extensions(&self, w: &ElementSet, a: &PartialMap, limit: usize) -> usize {
        let target = a.restrict(w);
        self.members
            .iter()
            .filter(|m| m.restrict(w) == target)
            .take(limit)
            .count()
    }

    /// `w` is a core for `a`: exactly one member restricts to `a|w`.
    pub fn is_core(&self, w: &ElementSet, a: &PartialMap) -> bool {
        self.extensions(w, a, 2) == 1
    }
}

/// Enumerates the family and checks that `a|w` has a unique extension in it.
pub fn is_core_brute(
    lattice: &SnrLattice,
    w: &ElementSet,
    a: &PartialMap,
    family: MapFamily,
) -> Result<bool> {
    let members = enumerate_family(lattice, family, DEFAULT_ENUMERATION_CAP)?;
    let target = a.restrict(w);
    let matching = members.filter(|m| m.restrict(w) == target).take(2).count();
    Ok(matching == 1 && classify(lattice, a, family))
}
