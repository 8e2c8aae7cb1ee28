//! `(n,r)`-functions: weights on the symbols of `I(n,r)`.
//!
//! Values are stored in variable order `x_r, .., x_1, y_1, .., y_{n-r}`, so a
//! weight function and a witness of a system share one layout.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::feasibility::Rational;
use crate::maps::PartialMap;
use crate::set::ElementSet;
use crate::snr::{SnrParams, SnrString};
use crate::system::{NrSystem, RowRelation};

/// Largest `n` accepted by the full scans behind `pos_set` and friends.
pub const MAX_SCAN_N: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightClass {
    /// Total weight `>= 0`.
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    params: SnrParams,
    values: Vec<Rational>,
}

impl WeightFunction {
    /// `tilde` is `f(r~), .., f(1~)` and `bar` is `f(1-), .., f((n-r)-)`.
    ///
    /// Requires `f(r~) >= .. >= f(1~) >= 0 > f(1-) >= .. >= f((n-r)-)`.
    pub fn new(params: SnrParams, tilde: Vec<Rational>, bar: Vec<Rational>) -> Result<Self> {
        if tilde.len() != params.r() || bar.len() != params.bars() {
            return Err(Error::InvalidWeightFunction(format!(
                "expected {} tilde and {} bar values, found {} and {}",
                params.r(),
                params.bars(),
                tilde.len(),
                bar.len()
            )));
        }
        let mut values = tilde;
        values.extend(bar);
        Self::from_values(params, values)
    }

    pub fn from_values(params: SnrParams, values: Vec<Rational>) -> Result<Self> {
        if values.len() != params.n() {
            return Err(Error::DimensionMismatch {
                expected: params.n(),
                found: values.len(),
            });
        }
        let r = params.r();
        for k in 1..values.len() {
            if values[k] > values[k - 1] {
                return Err(Error::InvalidWeightFunction(format!(
                    "values must be non-increasing, position {k} rises"
                )));
            }
        }
        if values[r - 1].is_negative() {
            return Err(Error::InvalidWeightFunction("f(1~) must be >= 0".into()));
        }
        if r < values.len() && !values[r].is_negative() {
            return Err(Error::InvalidWeightFunction("f(1-) must be < 0".into()));
        }
        Ok(WeightFunction { params, values })
    }

    pub fn params(&self) -> SnrParams {
        self.params
    }

    /// Values in variable order.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `f(r~), .., f(1~)`.
    pub fn tilde_values(&self) -> &[Rational] {
        &self.values[..self.params.r()]
    }

    /// `f(1-), .., f((n-r)-)`.
    pub fn bar_values(&self) -> &[Rational] {
        &self.values[self.params.r()..]
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn class(&self) -> WeightClass {
        if self.total().is_negative() {
            WeightClass::Negative
        } else {
            WeightClass::Positive
        }
    }

    /// `f(i~)` for `1 <= i <= r`.
    pub fn tilde(&self, i: usize) -> &Rational {
        &self.values[self.params.r() - i]
    }

    /// `f(j-)` for `1 <= j <= n - r`.
    pub fn bar(&self, j: usize) -> &Rational {
        &self.values[self.params.r() + j - 1]
    }

    /// `Σ_f(w)`, the sum of `f` over `w*`.
    pub fn sigma(&self, w: &SnrString) -> Rational {
        let tildes = w.tilde_indices().into_iter().map(|i| self.tilde(i));
        let bars = w.bar_indices().into_iter().map(|j| self.bar(j));
        tildes.chain(bars).sum()
    }

    /// Values scaled by the common denominator, as integers.
    fn integer_values(&self) -> Vec<BigInt> {
        let lcm = self
            .values
            .iter()
            .fold(BigInt::one(), |l, v| l.lcm(v.denom()));
        self.values
            .iter()
            .map(|v| v.numer() * (&lcm / v.denom()))
            .collect()
    }

    /// `Pos(f)`, as element indices of S(n,r).
    pub fn pos_set(&self) -> Result<ElementSet> {
        let n = self.params.n();
        if n > MAX_SCAN_N {
            return Err(Error::CapExceeded {
                what: "n",
                value: n,
                cap: MAX_SCAN_N,
            });
        }
        let r = self.params.r();
        let ints = self.integer_values();
        // bit k of the tilde mask is (k+1)~, i.e. variable r-1-k
        let tilde_weights: Vec<BigInt> = (0..r).map(|k| ints[r - 1 - k].clone()).collect();
        let bar_weights: Vec<BigInt> = ints[r..].to_vec();
        let tilde_sums = subset_sums(&tilde_weights);
        let bar_sums = subset_sums(&bar_weights);
        let mut out = ElementSet::empty(self.params.element_count());
        for (bar, b) in bar_sums.iter().enumerate() {
            let threshold = -b;
            for (tilde, t) in tilde_sums.iter().enumerate() {
                if *t >= threshold {
                    out.insert(tilde | bar << r);
                }
            }
        }
        Ok(out)
    }

    /// `Neg(f)`.
    pub fn neg_set(&self) -> Result<ElementSet> {
        self.pos_set().map(|p| p.complement())
    }

    /// `α+(f) = |Pos(f)|`.
    pub fn alpha_plus(&self) -> Result<usize> {
        self.pos_set().map(|p| p.len())
    }

    /// `α-(f) = |Neg(f)|`.
    pub fn alpha_minus(&self) -> Result<usize> {
        self.neg_set().map(|p| p.len())
    }

    /// `A_f`: `P` where `Σ_f >= 0`, `N` elsewhere.
    pub fn induced_map(&self) -> Result<PartialMap> {
        self.pos_set().map(PartialMap::total_from_positives)
    }

    /// Whether `f` solves the system: `Σ_f >= 0` on `>=` rows, `< 0` on `<` rows.
    pub fn is_solution(&self, system: &NrSystem) -> bool {
        system.params() == self.params
            && system.rows().all(|(w, relation)| {
                let s = self.sigma(&w);
                match relation {
                    RowRelation::Geq0 => !s.is_negative(),
                    RowRelation::Lt0 => s.is_negative(),
                }
            })
    }
}

fn subset_sums(weights: &[BigInt]) -> Vec<BigInt> {
    let mut sums = Vec::with_capacity(1 << weights.len());
    sums.push(BigInt::zero());
    for w in weights {
        let current = sums.len();
        for k in 0..current {
            let s = &sums[k] + w;
            sums.push(s);
        }
    }
    sums
}
