//! `(n,r)`-systems: subset-sum inequalities over the chain
//! `x_r >= .. >= x_1 >= 0 > y_1 >= .. >= y_{n-r}`, and their translation to
//! and from boolean partial maps on S(n,r).
//!
//! A row `(w, >=)` reads `Σ_{w*} t >= 0` and `(w, <)` reads `Σ_{w*} t < 0`.
//! Rows never use the empty string or a singleton; those carry the fixed
//! signs `xi_i -> P` and `eta_j -> N` implied by the chain.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::core_engine::{fundamental_core, CoreReport};
use crate::error::{Error, Result};
use crate::feasibility::{feasible, implies, to_linear, FeasibilityResult, LinearSystem};
use crate::maps::{in_bnr, MapFamily, PartialMap, Polarity, Sign};
use crate::snr::{SnrLattice, SnrParams, SnrString};
use crate::weights::WeightFunction;

/// Largest `n` for which generativity is decided.
pub const MAX_GENERATIVE_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowRelation {
    /// `Σ >= 0`
    Geq0,
    /// `Σ < 0`
    Lt0,
}

impl RowRelation {
    pub fn sign(self) -> Sign {
        match self {
            RowRelation::Geq0 => Sign::P,
            RowRelation::Lt0 => Sign::N,
        }
    }

    pub fn from_sign(sign: Sign) -> RowRelation {
        match sign {
            Sign::P => RowRelation::Geq0,
            Sign::N => RowRelation::Lt0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NrSystem {
    params: SnrParams,
    rows: BTreeMap<usize, RowRelation>,
}

impl NrSystem {
    pub fn new(params: SnrParams) -> NrSystem {
        NrSystem {
            params,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_rows<I>(params: SnrParams, rows: I) -> Result<NrSystem>
    where
        I: IntoIterator<Item = (SnrString, RowRelation)>,
    {
        let mut s = NrSystem::new(params);
        for (w, relation) in rows {
            s.insert(w, relation)?;
        }
        Ok(s)
    }

    /// Adds a row; repeating an identical row is a no-op.
    pub fn insert(&mut self, w: SnrString, relation: RowRelation) -> Result<()> {
        if w.params() != self.params {
            return Err(Error::InvalidSystem(format!(
                "{w} is not a string of this S(n,r)"
            )));
        }
        if w.is_empty() || w.is_singleton() {
            return Err(Error::InvalidSystem(format!(
                "{w} is empty or a singleton and cannot be a row"
            )));
        }
        match self.rows.get(&w.index()) {
            Some(existing) if *existing != relation => {
                Err(Error::InvalidSystem(format!("contradictory rows for {w}")))
            }
            _ => {
                self.rows.insert(w.index(), relation);
                Ok(())
            }
        }
    }

    pub fn params(&self) -> SnrParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn relation(&self, w: &SnrString) -> Option<RowRelation> {
        self.rows.get(&w.index()).copied()
    }

    /// Rows in element-index order.
    pub fn rows(&self) -> impl Iterator<Item = (SnrString, RowRelation)> + '_ {
        self.rows
            .iter()
            .map(|(&idx, &rel)| (SnrString::from_index(self.params, idx), rel))
    }

    /// Rows sorted by the text of their strings.
    pub fn sorted_rows(&self) -> Vec<(SnrString, RowRelation)> {
        let mut rows: Vec<_> = self.rows().collect();
        rows.sort_by_cached_key(|(w, _)| w.format());
        rows
    }

    /// Number of admissible strings, `2^n - (n + 1)`.
    pub fn admissible_count(params: SnrParams) -> usize {
        params.element_count() - params.n() - 1
    }

    /// The rows of a partial map, ignoring `xi`/`eta` entries, which must
    /// carry their fixed signs when present.
    pub fn from_partial_map(params: SnrParams, a: &PartialMap) -> Result<NrSystem> {
        if a.universe() != params.element_count() {
            return Err(Error::DimensionMismatch {
                expected: params.element_count(),
                found: a.universe(),
            });
        }
        let mut s = NrSystem::new(params);
        for x in a.domain().iter() {
            let w = SnrString::from_index(params, x);
            let sign = a.get(x).expect("in domain");
            if w.is_empty() || (w.is_singleton() && w.bar_mask() == 0) {
                if sign != Sign::P {
                    return Err(Error::NotInBnr(format!("{w} must be P")));
                }
            } else if w.is_singleton() {
                if sign != Sign::N {
                    return Err(Error::NotInBnr(format!("{w} must be N")));
                }
            } else {
                s.rows.insert(x, RowRelation::from_sign(sign));
            }
        }
        Ok(s)
    }
}

/// `χ(S)`: rows as signs, plus `xi_i -> P` and `eta_j -> N`.
pub fn chi(s: &NrSystem) -> PartialMap {
    let params = s.params();
    let mut a = PartialMap::empty(params.element_count());
    for i in 0..=params.r() {
        a.set(SnrString::xi(params, i).unwrap().index(), Sign::P);
    }
    for j in 1..=params.bars() {
        a.set(SnrString::eta(params, j).unwrap().index(), Sign::N);
    }
    for (&idx, rel) in &s.rows {
        a.set(idx, rel.sign());
    }
    a
}

/// `τ = χ^{-1}` on `B(n,r)`.
pub fn tau(lattice: &SnrLattice, a: &PartialMap) -> Result<NrSystem> {
    if a.universe() != lattice.len() || !in_bnr(lattice, a) {
        return Err(Error::NotInBnr(
            "xi_0..xi_r must be P and eta_1..eta_{n-r} must be N".into(),
        ));
    }
    NrSystem::from_partial_map(lattice.params(), a)
}

/// `S ≲ S'`: every row of `S` is a row of `S'`.
pub fn subsystem_leq(s: &NrSystem, t: &NrSystem) -> bool {
    s.params == t.params && s.rows.iter().all(|(k, v)| t.rows.get(k) == Some(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SystemClass {
    pub total: bool,
    pub weighted_positive: bool,
    pub weighted_negative: bool,
    /// Filled only when requested.
    pub compatible: Option<bool>,
}

pub fn classify_system(s: &NrSystem, with_compatibility: bool) -> SystemClass {
    let params = s.params();
    let full = s.relation(&SnrString::full(params));
    SystemClass {
        total: s.len() == NrSystem::admissible_count(params),
        weighted_positive: full == Some(RowRelation::Geq0),
        weighted_negative: full == Some(RowRelation::Lt0),
        compatible: with_compatibility.then(|| compatible(s).feasibility.is_feasible()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compatibility {
    pub feasibility: FeasibilityResult,
    pub witness: Option<WeightFunction>,
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        self.feasibility.is_feasible()
    }
}

fn compatibility_of(params: SnrParams, feasibility: FeasibilityResult) -> Compatibility {
    let witness = feasibility.witness.clone().map(|values| {
        WeightFunction::from_values(params, values).expect("chain constraints hold at a witness")
    });
    Compatibility {
        feasibility,
        witness,
    }
}

pub fn compatible(s: &NrSystem) -> Compatibility {
    compatibility_of(s.params(), feasible(&to_linear(s)))
}

pub fn compatible_with(s: &NrSystem, options: &crate::feasibility::FmOptions) -> Compatibility {
    compatibility_of(
        s.params(),
        crate::feasibility::feasible_with(&to_linear(s), options),
    )
}

fn implies_all(base: &LinearSystem, other: &NrSystem) -> bool {
    other.rows().all(|(w, rel)| {
        implies(base, &crate::feasibility::row_constraint(&w, rel)).expect("same dimension")
    })
}

/// Same solution sets, decided by mutual row implication.
pub fn equivalent(s: &NrSystem, t: &NrSystem) -> Result<bool> {
    if s.params() != t.params() {
        return Ok(false);
    }
    let (ls, lt) = (to_linear(s), to_linear(t));
    if !feasible(&ls).is_feasible() || !feasible(&lt).is_feasible() {
        return Err(Error::Incompatible);
    }
    Ok(implies_all(&ls, t) && implies_all(&lt, s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generativity {
    /// The compatible total system the input forces.
    Generative(NrSystem),
    /// A string whose sign the input leaves open.
    NotGenerative(SnrString),
}

/// Probes both signs of every admissible string the system does not fix.
pub fn is_generative(s: &NrSystem) -> Result<Generativity> {
    let params = s.params();
    if params.n() > MAX_GENERATIVE_N {
        return Err(Error::CapExceeded {
            what: "n",
            value: params.n(),
            cap: MAX_GENERATIVE_N,
        });
    }
    let base = to_linear(s);
    if !feasible(&base).is_feasible() {
        return Err(Error::Incompatible);
    }
    let mut total = s.clone();
    for idx in 0..params.element_count() {
        let w = SnrString::from_index(params, idx);
        if w.is_empty() || w.is_singleton() || s.rows.contains_key(&idx) {
            continue;
        }
        let geq = crate::feasibility::row_constraint(&w, RowRelation::Geq0);
        let can_p = feasible(&base.with(geq.clone())?).is_feasible();
        let can_n = feasible(&base.with(geq.negated())?).is_feasible();
        match (can_p, can_n) {
            (true, true) => return Ok(Generativity::NotGenerative(w)),
            (true, false) => total.rows.insert(idx, RowRelation::Geq0),
            (false, true) => total.rows.insert(idx, RowRelation::Lt0),
            (false, false) => unreachable!("a feasible system admits one sign"),
        };
    }
    Ok(Generativity::Generative(total))
}

/// Outcome of the positive or negative local criterion on one total map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCriterionReport {
    pub core: CoreReport,
    pub total_system: NrSystem,
    pub core_system: NrSystem,
    pub total_compatible: bool,
    pub core_compatible: bool,
    /// A solution of the core system in the weight class of the map.
    pub core_witness: Option<WeightFunction>,
    /// Whether the core witness solves the total system, when there is one.
    pub witness_lifts: Option<bool>,
}

impl LocalCriterionReport {
    pub fn holds(&self) -> bool {
        self.total_compatible == self.core_compatible && self.witness_lifts != Some(false)
    }
}

fn local_criterion(
    lattice: &SnrLattice,
    a: &PartialMap,
    polarity: Polarity,
) -> Result<LocalCriterionReport> {
    let family = match polarity {
        Polarity::Plus => MapFamily::WPlusNr,
        Polarity::Minus => MapFamily::WMinusNr,
    };
    if !crate::maps::classify(lattice, a, family) {
        return Err(Error::NotWeighted);
    }
    let core = fundamental_core(lattice.sip(), a, polarity)?;
    let total_system = tau(lattice, a)?;
    let core_system = NrSystem::from_partial_map(lattice.params(), &core.core)?;
    let total_compatible = compatible(&total_system).is_compatible();
    let core_compatible = compatible(&core_system).is_compatible();
    // the lifting statement is about solutions in WF+ (resp. WF-), so the
    // witness is taken with the weighted row added
    let mut weighted = core_system.clone();
    weighted.insert(
        SnrString::full(lattice.params()),
        RowRelation::from_sign(polarity.full_string_sign()),
    )?;
    let core_witness = compatible(&weighted).witness;
    let witness_lifts = core_witness.as_ref().map(|f| f.is_solution(&total_system));
    Ok(LocalCriterionReport {
        core,
        total_system,
        core_system,
        total_compatible,
        core_compatible,
        core_witness,
        witness_lifts,
    })
}

/// Positive local criterion for a map in `W+(n,r)`.
pub fn plc_check(lattice: &SnrLattice, a: &PartialMap) -> Result<LocalCriterionReport> {
    local_criterion(lattice, a, Polarity::Plus)
}

/// Negative local criterion for a map in `W-(n,r)`.
pub fn nlc_check(lattice: &SnrLattice, a: &PartialMap) -> Result<LocalCriterionReport> {
    local_criterion(lattice, a, Polarity::Minus)
}
