//! Boolean partial maps into the two-element chain `N < P`.
//!
//! A map is stored as its positive and negative preimages. Predicates on
//! partial maps only quantify over domain elements.

use core::fmt;

use crate::formal;
use crate::poset::{Poset, Sip};
use crate::set::ElementSet;
use crate::snr::SnrLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    N,
    P,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::N => Sign::P,
            Sign::P => Sign::N,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::N => "N",
            Sign::P => "P",
        })
    }
}

/// Which weighted family: complemented-positive (`+`) or complemented-negative (`-`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Plus,
    Minus,
}

impl Polarity {
    /// The sign the full string must carry in the `(n,r)` family.
    pub fn full_string_sign(self) -> Sign {
        match self {
            Polarity::Plus => Sign::P,
            Polarity::Minus => Sign::N,
        }
    }
}

/// Families of total maps used for classification and enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapFamily {
    /// Order-preserving total maps.
    Op,
    WPlus,
    WMinus,
    WPlusNr,
    WMinusNr,
    FcPlus,
    FcMinus,
    /// Partial maps fixing `xi_0..xi_r -> P` and `eta_1..eta_{n-r} -> N`.
    Bnr,
    /// Total members of `Bnr`.
    BtNr,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    positives: ElementSet,
    negatives: ElementSet,
}

impl PartialMap {
    /// The nowhere-defined map on `len` elements.
    pub fn empty(len: usize) -> PartialMap {
        PartialMap {
            positives: ElementSet::empty(len),
            negatives: ElementSet::empty(len),
        }
    }

    /// `None` if the two sets overlap.
    pub fn from_sets(positives: ElementSet, negatives: ElementSet) -> Option<PartialMap> {
        if positives.intersects(&negatives) {
            return None;
        }
        Some(PartialMap {
            positives,
            negatives,
        })
    }

    /// The total map that is `P` exactly on `positives`.
    pub fn total_from_positives(positives: ElementSet) -> PartialMap {
        let negatives = positives.complement();
        PartialMap {
            positives,
            negatives,
        }
    }

    pub fn constant(len: usize, sign: Sign) -> PartialMap {
        match sign {
            Sign::P => Self::total_from_positives(ElementSet::full(len)),
            Sign::N => Self::total_from_positives(ElementSet::empty(len)),
        }
    }

    pub fn universe(&self) -> usize {
        self.positives.universe()
    }

    pub fn get(&self, x: usize) -> Option<Sign> {
        if self.positives.contains(x) {
            Some(Sign::P)
        } else if self.negatives.contains(x) {
            Some(Sign::N)
        } else {
            None
        }
    }

    pub fn set(&mut self, x: usize, sign: Sign) {
        match sign {
            Sign::P => {
                self.negatives.remove(x);
                self.positives.insert(x);
            }
            Sign::N => {
                self.positives.remove(x);
                self.negatives.insert(x);
            }
        }
    }

    pub fn unset(&mut self, x: usize) {
        self.positives.remove(x);
        self.negatives.remove(x);
    }

    pub fn positives(&self) -> &ElementSet {
        &self.positives
    }

    pub fn negatives(&self) -> &ElementSet {
        &self.negatives
    }

    pub fn domain(&self) -> ElementSet {
        self.positives.union(&self.negatives)
    }

    pub fn is_total(&self) -> bool {
        self.domain().len() == self.universe()
    }

    pub fn restrict(&self, domain: &ElementSet) -> PartialMap {
        PartialMap {
            positives: self.positives.intersection(domain),
            negatives: self.negatives.intersection(domain),
        }
    }

    /// The extension order: `self ⊴ other` iff `other` agrees with `self` on `dom(self)`.
    pub fn extends_leq(&self, other: &PartialMap) -> bool {
        self.positives.is_subset(&other.positives) && self.negatives.is_subset(&other.negatives)
    }

    /// `up(P) ∩ dom ⊆ P`
    pub fn is_up_positive(&self, poset: &Poset) -> bool {
        poset
            .up_closure(&self.positives)
            .is_disjoint(&self.negatives)
    }

    /// `down(N) ∩ dom ⊆ N`
    pub fn is_down_negative(&self, poset: &Poset) -> bool {
        poset
            .down_closure(&self.negatives)
            .is_disjoint(&self.positives)
    }

    /// `x <= y` implies `a(x) <= a(y)`; checked pair by pair over the domain.
    pub fn is_order_preserving(&self, poset: &Poset) -> bool {
        let domain = self.domain();
        domain.iter().all(|x| {
            let sx = self.get(x).unwrap();
            poset
                .principal_up(x)
                .intersection(&domain)
                .iter()
                .all(|y| sx <= self.get(y).unwrap())
        })
    }

    /// `A^{-1}(N)^c ⊆ A^{-1}(P)`
    pub fn is_complemented_positive(&self, sip: &Sip) -> bool {
        sip.complement_image(&self.negatives)
            .is_subset(&self.positives)
    }

    /// `A^{-1}(P)^c ⊆ A^{-1}(N)`
    pub fn is_complemented_negative(&self, sip: &Sip) -> bool {
        sip.complement_image(&self.positives)
            .is_subset(&self.negatives)
    }

    pub fn is_complemented(&self, sip: &Sip, polarity: Polarity) -> bool {
        match polarity {
            Polarity::Plus => self.is_complemented_positive(sip),
            Polarity::Minus => self.is_complemented_negative(sip),
        }
    }

    /// Up-positive, down-negative and complemented for the given polarity.
    pub fn is_weighted_partial(&self, sip: &Sip, polarity: Polarity) -> bool {
        self.is_up_positive(&sip.poset)
            && self.is_down_negative(&sip.poset)
            && self.is_complemented(sip, polarity)
    }

    /// Membership in `W+(X,2)` / `W-(X,2)`: total and weighted.
    pub fn is_weighted(&self, sip: &Sip, polarity: Polarity) -> bool {
        self.is_total() && self.is_weighted_partial(sip, polarity)
    }

    pub fn minimal_positives(&self, poset: &Poset) -> ElementSet {
        poset.minimals(&self.positives)
    }

    pub fn maximal_negatives(&self, poset: &Poset) -> ElementSet {
        poset.maximals(&self.negatives)
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialMap")
            .field("P", &self.positives)
            .field("N", &self.negatives)
            .finish()
    }
}

/// `{w : w^c <= w}`
pub fn complemented_elements(sip: &Sip) -> ElementSet {
    ElementSet::from_indices(
        sip.len(),
        (0..sip.len()).filter(|&w| sip.poset.leq(sip.complement(w), w)),
    )
}

/// True when `xi_0..xi_r` are `P` and `eta_1..eta_{n-r}` are `N`.
pub fn in_bnr(lattice: &SnrLattice, a: &PartialMap) -> bool {
    lattice
        .xi_indices()
        .iter()
        .all(|&x| a.get(x) == Some(Sign::P))
        && lattice
            .eta_indices()
            .iter()
            .all(|&x| a.get(x) == Some(Sign::N))
}

/// Family membership on S(n,r).
///
/// The `(n,r)` families are intersected with `BT(n,r)`, so `WPlusNr` means
/// `W+(S(n,r),2)`, total with the `xi`/`eta` signs, and `P` at the full string.
pub fn classify(lattice: &SnrLattice, a: &PartialMap, family: MapFamily) -> bool {
    let sip = lattice.sip();
    let full = a.get(lattice.full_index());
    match family {
        MapFamily::Op => a.is_total() && a.is_order_preserving(&sip.poset),
        MapFamily::WPlus => a.is_weighted(sip, Polarity::Plus),
        MapFamily::WMinus => a.is_weighted(sip, Polarity::Minus),
        MapFamily::WPlusNr => {
            a.is_weighted(sip, Polarity::Plus) && in_bnr(lattice, a) && full == Some(Sign::P)
        }
        MapFamily::WMinusNr => {
            a.is_weighted(sip, Polarity::Minus) && in_bnr(lattice, a) && full == Some(Sign::N)
        }
        MapFamily::FcPlus => formal::in_fc(lattice, a, Polarity::Plus),
        MapFamily::FcMinus => formal::in_fc(lattice, a, Polarity::Minus),
        MapFamily::Bnr => in_bnr(lattice, a),
        MapFamily::BtNr => a.is_total() && in_bnr(lattice, a),
    }
}
