//! Finite posets with a dense precomputed order relation, and involutions on them.
//!
//! Elements are plain indices `0..len`. Each element stores two bit rows: the
//! principal up-set and the principal down-set, so comparability is a single
//! bit test and closures are word-parallel unions.

use alloc::vec::Vec;

use crate::error::{Error, InvolutionAxiom, OrderAxiom, Result};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

impl Poset {
    /// Builds a poset from an arbitrary relation, checking all three axioms.
    pub fn from_relation<F>(len: usize, leq: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        let poset = Self::from_relation_unchecked(len, leq);
        poset.validate()?;
        Ok(poset)
    }

    /// Builds without validation; the caller guarantees a partial order.
    #[allow(clippy::needless_range_loop)]
    pub(crate) fn from_relation_unchecked<F>(len: usize, leq: F) -> Poset
    where
        F: Fn(usize, usize) -> bool,
    {
        let mut up: Vec<ElementSet> = (0..len).map(|_| ElementSet::empty(len)).collect();
        let mut down: Vec<ElementSet> = (0..len).map(|_| ElementSet::empty(len)).collect();
        for x in 0..len {
            for y in 0..len {
                if leq(x, y) {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        Poset { up, down }
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            if !self.leq(x, x) {
                return Err(Error::PartialOrderViolation {
                    axiom: OrderAxiom::Reflexivity,
                    x,
                    y: x,
                });
            }
        }
        for x in 0..n {
            for y in self.up[x].iter() {
                if y != x && self.leq(y, x) {
                    return Err(Error::PartialOrderViolation {
                        axiom: OrderAxiom::Antisymmetry,
                        x,
                        y,
                    });
                }
            }
        }
        for x in 0..n {
            for y in self.up[x].iter() {
                if !self.up[y].is_subset(&self.up[x]) {
                    let z = self.up[y].difference(&self.up[x]).first().unwrap();
                    return Err(Error::PartialOrderViolation {
                        axiom: OrderAxiom::Transitivity,
                        x,
                        y: z,
                    });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `{y : x <= y}`
    pub fn principal_up(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    /// `{y : y <= x}`
    pub fn principal_down(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.len())
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn down_closure(&self, z: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in z {
            out.union_with(&self.down[x]);
        }
        out
    }

    pub fn up_closure(&self, z: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in z {
            out.union_with(&self.up[x]);
        }
        out
    }

    pub fn is_down_set(&self, z: &ElementSet) -> bool {
        self.down_closure(z) == *z
    }

    pub fn is_up_set(&self, z: &ElementSet) -> bool {
        self.up_closure(z) == *z
    }

    /// Elements of `z` with nothing strictly below them inside `z`.
    pub fn minimals(&self, z: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in z {
            let below = self.down[x].intersection(z);
            if below.len() == 1 {
                out.insert(x);
            }
        }
        out
    }

    /// Elements of `z` with nothing strictly above them inside `z`.
    pub fn maximals(&self, z: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in z {
            let above = self.up[x].intersection(z);
            if above.len() == 1 {
                out.insert(x);
            }
        }
        out
    }

    pub fn is_antichain(&self, z: &ElementSet) -> bool {
        z.iter().all(|x| self.up[x].intersection(z).len() == 1)
    }

    /// Hasse diagram edges `(x, y)` with `y` covering `x`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for x in 0..self.len() {
            let mut strictly_above = self.up[x].clone();
            strictly_above.remove(x);
            for y in strictly_above.iter() {
                let mut between = strictly_above.intersection(&self.down[y]);
                between.remove(y);
                if between.is_empty() {
                    edges.push((x, y));
                }
            }
        }
        edges
    }

    /// A linear extension listing every element after all elements above it.
    pub fn top_down_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (core::cmp::Reverse(self.down[x].len()), x));
        order
    }
}

/// A complement map on a poset satisfying I1 and I2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    complement: Vec<usize>,
    strong: bool,
}

impl Involution {
    /// Checks I1 and I2 and records whether I3 holds as well.
    pub fn new(poset: &Poset, complement: Vec<usize>) -> Result<Involution> {
        check_permutation(poset, &complement)?;
        check_i1(&complement)?;
        check_i2(poset, &complement)?;
        let strong = has_no_fixed_points(&complement);
        Ok(Involution { complement, strong })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.complement[x]
    }

    pub fn is_strong(&self) -> bool {
        self.strong
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.complement
    }

    /// `Z^c = {z^c : z in Z}`
    pub fn image(&self, z: &ElementSet) -> ElementSet {
        ElementSet::from_indices(z.universe(), z.iter().map(|x| self.complement[x]))
    }
}

/// Validates a strong involution: I1, then I3, then I2.
pub fn validate_involution(poset: &Poset, complement: Vec<usize>) -> Result<Involution> {
    check_permutation(poset, &complement)?;
    check_i1(&complement)?;
    if complement.len() >= 2 {
        if let Some(x) = (0..complement.len()).find(|&x| complement[x] == x) {
            return Err(Error::InvolutionViolation {
                axiom: InvolutionAxiom::I3,
                x,
            });
        }
    }
    check_i2(poset, &complement)?;
    Ok(Involution {
        complement,
        strong: true,
    })
}

fn check_permutation(poset: &Poset, complement: &[usize]) -> Result<()> {
    if complement.len() != poset.len() {
        return Err(Error::DimensionMismatch {
            expected: poset.len(),
            found: complement.len(),
        });
    }
    let mut seen = ElementSet::empty(poset.len());
    for (x, &cx) in complement.iter().enumerate() {
        if cx >= poset.len() || !seen.insert(cx) {
            return Err(Error::InvolutionViolation {
                axiom: InvolutionAxiom::NotAPermutation,
                x,
            });
        }
    }
    Ok(())
}

fn check_i1(complement: &[usize]) -> Result<()> {
    match (0..complement.len()).find(|&x| complement[complement[x]] != x) {
        Some(x) => Err(Error::InvolutionViolation {
            axiom: InvolutionAxiom::I1,
            x,
        }),
        None => Ok(()),
    }
}

fn check_i2(poset: &Poset, complement: &[usize]) -> Result<()> {
    for x in 0..poset.len() {
        for y in poset.principal_up(x).iter() {
            if !poset.leq(complement[y], complement[x]) {
                return Err(Error::InvolutionViolation {
                    axiom: InvolutionAxiom::I2,
                    x,
                });
            }
        }
    }
    Ok(())
}

fn has_no_fixed_points(complement: &[usize]) -> bool {
    complement.len() < 2 || complement.iter().enumerate().all(|(x, &cx)| cx != x)
}

/// A strongly involution poset: the setting of every weighted-map result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sip {
    pub poset: Poset,
    pub involution: Involution,
}

impl Sip {
    pub fn new(poset: Poset, complement: Vec<usize>) -> Result<Sip> {
        let involution = validate_involution(&poset, complement)?;
        Ok(Sip { poset, involution })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn complement(&self, x: usize) -> usize {
        self.involution.apply(x)
    }

    pub fn complement_image(&self, z: &ElementSet) -> ElementSet {
        self.involution.image(z)
    }

    /// The boolean lattice of subsets of a `k`-set under inclusion and set complement.
    pub fn boolean_lattice(k: u32) -> Sip {
        let len = 1usize << k;
        let poset = Poset::from_relation_unchecked(len, |a, b| a & !b == 0);
        let full = len - 1;
        let complement = (0..len).map(|a| full ^ a).collect();
        Sip::new(poset, complement).expect("set complement is a strong involution")
    }
}
