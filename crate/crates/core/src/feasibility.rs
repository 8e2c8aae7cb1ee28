//! Exact feasibility of homogeneous systems of weak and strict linear
//! inequalities by Fourier–Motzkin elimination.
//!
//! Every constraint reads `a·x >= 0` or `a·x > 0`. Rows are kept as
//! primitive integer vectors (rational input is cleared of denominators and
//! divided by the gcd), so combining a lower and an upper bound on the
//! eliminated variable is exact and the relation of the result is strict iff
//! either parent is strict.
//!
//! Rows whose set of original ancestors exceeds the number of eliminated
//! variables plus one are dropped (Chernikov's rule). A feasible verdict is
//! always confirmed against the original constraints; if the pruned run
//! cannot produce a valid witness, elimination is repeated without pruning.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::snr::{SnrParams, SnrString};
use crate::system::{NrSystem, RowRelation};

pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `a·x >= 0`
    Geq,
    /// `a·x > 0`
    Gt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
}

impl LinearConstraint {
    pub fn new(coefficients: Vec<Rational>, relation: Relation) -> LinearConstraint {
        LinearConstraint {
            coefficients,
            relation,
        }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coefficients: I, relation: Relation) -> Self {
        LinearConstraint::new(
            coefficients
                .into_iter()
                .map(|c| Rational::from_integer(BigInt::from(c)))
                .collect(),
            relation,
        )
    }

    /// `¬(a·x >= 0)` is `-a·x > 0` and `¬(a·x > 0)` is `-a·x >= 0`.
    pub fn negated(&self) -> LinearConstraint {
        let relation = match self.relation {
            Relation::Geq => Relation::Gt,
            Relation::Gt => Relation::Geq,
        };
        LinearConstraint::new(self.coefficients.iter().map(|c| -c).collect(), relation)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .zip(point)
            .fold(Rational::zero(), |acc, (a, v)| acc + a * v)
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        let value = self.evaluate(point);
        match self.relation {
            Relation::Geq => !value.is_negative(),
            Relation::Gt => value.is_positive(),
        }
    }
}

/// A constraint set over a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    variables: usize,
    constraints: Vec<LinearConstraint>,
}

impl LinearSystem {
    pub fn new(variables: usize) -> LinearSystem {
        LinearSystem {
            variables,
            constraints: Vec::new(),
        }
    }

    pub fn from_constraints(variables: usize, constraints: Vec<LinearConstraint>) -> Result<Self> {
        let mut system = LinearSystem::new(variables);
        for c in constraints {
            system.push(c)?;
        }
        Ok(system)
    }

    pub fn push(&mut self, constraint: LinearConstraint) -> Result<()> {
        if constraint.coefficients.len() != self.variables {
            return Err(Error::DimensionMismatch {
                expected: self.variables,
                found: constraint.coefficients.len(),
            });
        }
        self.constraints.push(constraint);
        Ok(())
    }

    pub fn with(&self, constraint: LinearConstraint) -> Result<LinearSystem> {
        let mut out = self.clone();
        out.push(constraint)?;
        Ok(out)
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationStep {
    pub variable: usize,
    pub lower: usize,
    pub upper: usize,
    /// Rows surviving after dedup and pruning.
    pub kept: usize,
}

/// The variable-free row `0 > 0` that ends an infeasible run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contradiction {
    /// Number of variables eliminated when it appeared.
    pub after_steps: usize,
    /// Original constraints of each parent row, or `None` for an input row.
    pub parents: Option<(Vec<usize>, Vec<usize>)>,
    /// All original constraints it was derived from.
    pub ancestors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trace {
    pub order: Vec<usize>,
    pub steps: Vec<EliminationStep>,
    pub contradiction: Option<Contradiction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub verdict: Verdict,
    pub witness: Option<Vec<Rational>>,
    pub trace: Trace,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FmOptions {
    /// Elimination order; `None` eliminates the last variable first.
    pub order: Option<Vec<usize>>,
    /// Offset used when a variable has a bound on one side only.
    pub step: Rational,
    pub prune: bool,
}

impl Default for FmOptions {
    fn default() -> Self {
        FmOptions {
            order: None,
            step: Rational::one(),
            prune: true,
        }
    }
}

#[derive(Debug, Clone)]
struct Row {
    coefficients: Vec<BigInt>,
    strict: bool,
    ancestors: ElementSet,
    parents: Option<(ElementSet, ElementSet)>,
}

impl Row {
    fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Divides by the gcd of the coefficients; the direction is unchanged.
    fn normalize(&mut self) {
        let g = self
            .coefficients
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.coefficients {
                *c /= &g;
            }
        }
    }
}

fn integer_row(constraint: &LinearConstraint, id: usize, originals: usize) -> Row {
    let lcm = constraint
        .coefficients
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let coefficients = constraint
        .coefficients
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut row = Row {
        coefficients,
        strict: constraint.relation == Relation::Gt,
        ancestors: ElementSet::from_indices(originals, [id]),
        parents: None,
    };
    row.normalize();
    row
}

/// Keeps one row per coefficient vector, preferring strict rows and then
/// rows with fewer ancestors. Returns a `0 > 0` row instead of storing it.
fn insert_row(table: &mut BTreeMap<Vec<BigInt>, Row>, row: Row) -> Option<Row> {
    if row.is_zero() {
        return row.strict.then_some(row);
    }
    match table.get(&row.coefficients) {
        Some(existing)
            if (existing.strict && !row.strict)
                || (existing.strict == row.strict
                    && existing.ancestors.len() <= row.ancestors.len()) => {}
        _ => {
            table.insert(row.coefficients.clone(), row);
        }
    }
    None
}

fn contradiction(row: Row, after_steps: usize) -> Contradiction {
    Contradiction {
        after_steps,
        parents: row
            .parents
            .map(|(a, b)| (a.iter().collect(), b.iter().collect())),
        ancestors: row.ancestors.iter().collect(),
    }
}

fn combine(lower: &Row, upper: &Row, v: usize) -> Row {
    // lower has a positive coefficient on v, upper a negative one
    let a = &lower.coefficients[v];
    let b = -&upper.coefficients[v];
    let coefficients = lower
        .coefficients
        .iter()
        .zip(&upper.coefficients)
        .map(|(l, u)| l * &b + u * a)
        .collect();
    let mut row = Row {
        coefficients,
        strict: lower.strict || upper.strict,
        ancestors: lower.ancestors.union(&upper.ancestors),
        parents: Some((lower.ancestors.clone(), upper.ancestors.clone())),
    };
    row.coefficients[v] = BigInt::zero();
    row.normalize();
    row
}

struct Elimination {
    levels: Vec<Vec<Row>>,
    trace: Trace,
}

fn eliminate(system: &LinearSystem, order: &[usize], prune: bool) -> Elimination {
    let originals = system.len();
    let mut trace = Trace {
        order: order.to_vec(),
        ..Trace::default()
    };
    let mut table = BTreeMap::new();
    for (id, c) in system.constraints().iter().enumerate() {
        if let Some(row) = insert_row(&mut table, integer_row(c, id, originals)) {
            trace.contradiction = Some(contradiction(row, 0));
            return Elimination {
                levels: Vec::new(),
                trace,
            };
        }
    }
    let mut levels: Vec<Vec<Row>> = vec![table.into_values().collect()];
    for (step, &v) in order.iter().enumerate() {
        let current = levels.last().expect("at least one level");
        let (mut lower, mut upper, mut table) = (Vec::new(), Vec::new(), BTreeMap::new());
        for row in current {
            if row.coefficients[v].is_positive() {
                lower.push(row);
            } else if row.coefficients[v].is_negative() {
                upper.push(row);
            } else {
                table.insert(row.coefficients.clone(), row.clone());
            }
        }
        let limit = step + 2;
        for l in &lower {
            for u in &upper {
                if prune && l.ancestors.union(&u.ancestors).len() > limit {
                    continue;
                }
                if let Some(row) = insert_row(&mut table, combine(l, u, v)) {
                    trace.steps.push(EliminationStep {
                        variable: v,
                        lower: lower.len(),
                        upper: upper.len(),
                        kept: table.len(),
                    });
                    trace.contradiction = Some(contradiction(row, step + 1));
                    return Elimination { levels, trace };
                }
            }
        }
        trace.steps.push(EliminationStep {
            variable: v,
            lower: lower.len(),
            upper: upper.len(),
            kept: table.len(),
        });
        levels.push(table.into_values().collect());
    }
    Elimination { levels, trace }
}

/// Back-substitutes in reverse elimination order, or `None` if some
/// variable has an empty range (only possible after over-eager pruning).
fn back_substitute(
    variables: usize,
    levels: &[Vec<Row>],
    order: &[usize],
    step: &Rational,
) -> Option<Vec<Rational>> {
    let mut point = vec![Rational::zero(); variables];
    for (i, &v) in order.iter().enumerate().rev() {
        let mut lower: Option<(Rational, bool)> = None;
        let mut upper: Option<(Rational, bool)> = None;
        for row in &levels[i] {
            let a = &row.coefficients[v];
            if a.is_zero() {
                continue;
            }
            let rest = row
                .coefficients
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != v)
                .fold(Rational::zero(), |acc, (k, c)| {
                    acc + Rational::from_integer(c.clone()) * &point[k]
                });
            let bound = -rest / Rational::from_integer(a.clone());
            if a.is_positive() {
                let tighter = match &lower {
                    None => true,
                    Some((l, s)) => bound > *l || (bound == *l && row.strict && !s),
                };
                if tighter {
                    lower = Some((bound, row.strict));
                }
            } else {
                let tighter = match &upper {
                    None => true,
                    Some((u, s)) => bound < *u || (bound == *u && row.strict && !s),
                };
                if tighter {
                    upper = Some((bound, row.strict));
                }
            }
        }
        point[v] = match (lower, upper) {
            (Some((l, ls)), Some((u, us))) => {
                if l < u {
                    (l + u) / Rational::from_integer(BigInt::from(2))
                } else if l == u && !ls && !us {
                    l
                } else {
                    return None;
                }
            }
            (Some((l, _)), None) => l + step,
            (None, Some((u, _))) => u - step,
            (None, None) => Rational::zero(),
        };
    }
    Some(point)
}

fn default_order(variables: usize) -> Vec<usize> {
    (0..variables).rev().collect()
}

pub fn feasible(system: &LinearSystem) -> FeasibilityResult {
    feasible_with(system, &FmOptions::default())
}

pub fn feasible_with(system: &LinearSystem, options: &FmOptions) -> FeasibilityResult {
    let order = options
        .order
        .clone()
        .unwrap_or_else(|| default_order(system.variables()));
    let mut seen = vec![false; system.variables()];
    for &v in &order {
        assert!(
            v < system.variables() && !seen[v],
            "order must be a permutation"
        );
        seen[v] = true;
    }
    assert!(seen.iter().all(|&s| s), "order must be a permutation");

    let run = eliminate(system, &order, options.prune);
    if run.trace.contradiction.is_some() {
        return FeasibilityResult {
            verdict: Verdict::Infeasible,
            witness: None,
            trace: run.trace,
        };
    }
    let witness = back_substitute(system.variables(), &run.levels, &order, &options.step)
        .filter(|w| check_witness(system, w));
    match witness {
        Some(witness) => FeasibilityResult {
            verdict: Verdict::Feasible,
            witness: Some(witness),
            trace: run.trace,
        },
        None if options.prune => feasible_with(
            system,
            &FmOptions {
                prune: false,
                ..options.clone()
            },
        ),
        None => panic!("Fourier-Motzkin produced no valid witness for a feasible system"),
    }
}

pub fn check_witness(system: &LinearSystem, point: &[Rational]) -> bool {
    point.len() == system.variables()
        && system
            .constraints()
            .iter()
            .all(|c| c.is_satisfied_by(point))
}

/// `system ⊢ c` iff `system ∧ ¬c` is infeasible.
pub fn implies(system: &LinearSystem, c: &LinearConstraint) -> Result<bool> {
    let probe = system.with(c.negated())?;
    Ok(!feasible(&probe).is_feasible())
}

/// Name of variable `k`: `x_r .. x_1` then `y_1 .. y_{n-r}`.
pub fn variable_label(params: SnrParams, k: usize) -> String {
    let r = params.r();
    if k < r {
        format!("x{}", r - k)
    } else {
        format!("y{}", k - r + 1)
    }
}

/// `x_{i+1} - x_i >= 0`, `x_1 >= 0`, `-y_1 > 0`, `y_j - y_{j+1} >= 0`.
pub fn chain_constraints(params: SnrParams) -> Vec<LinearConstraint> {
    let (n, r) = (params.n(), params.r());
    let unit = |pairs: &[(usize, i64)], relation| {
        let mut c = vec![0i64; n];
        for &(k, v) in pairs {
            c[k] = v;
        }
        LinearConstraint::from_integers(c, relation)
    };
    let mut out = Vec::new();
    // variable k holds x_{r-k}, so x_{i+1} sits just before x_i
    for k in 0..r - 1 {
        out.push(unit(&[(k, 1), (k + 1, -1)], Relation::Geq));
    }
    out.push(unit(&[(r - 1, 1)], Relation::Geq));
    if n > r {
        out.push(unit(&[(r, -1)], Relation::Gt));
        for k in r..n - 1 {
            out.push(unit(&[(k, 1), (k + 1, -1)], Relation::Geq));
        }
    }
    out
}

/// `Σ_{w*} t >= 0`, or `-Σ_{w*} t > 0` for a `<` row.
pub fn row_constraint(w: &SnrString, relation: RowRelation) -> LinearConstraint {
    let params = w.params();
    let r = params.r();
    let mut c = vec![0i64; params.n()];
    for i in w.tilde_indices() {
        c[r - i] = 1;
    }
    for j in w.bar_indices() {
        c[r + j - 1] = 1;
    }
    match relation {
        RowRelation::Geq0 => LinearConstraint::from_integers(c, Relation::Geq),
        RowRelation::Lt0 => {
            LinearConstraint::from_integers(c.into_iter().map(|v| -v), Relation::Gt)
        }
    }
}

/// The chain followed by one constraint per row, in element-index order.
pub fn to_linear(s: &NrSystem) -> LinearSystem {
    let params = s.params();
    let mut constraints = chain_constraints(params);
    constraints.extend(s.rows().map(|(w, rel)| row_constraint(&w, rel)));
    LinearSystem {
        variables: params.n(),
        constraints,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sys(variables: usize, rows: &[(&[i64], Relation)]) -> LinearSystem {
        LinearSystem::from_constraints(
            variables,
            rows.iter()
                .map(|(c, r)| LinearConstraint::from_integers(c.iter().copied(), *r))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_strict_variable() {
        let s = sys(1, &[(&[1], Relation::Gt)]);
        let result = feasible(&s);
        assert!(result.is_feasible());
        assert_eq!(result.witness.unwrap(), vec![q(1, 1)]);
    }

    #[test]
    fn opposite_strict_rows_conflict() {
        let s = sys(1, &[(&[1], Relation::Gt), (&[-1], Relation::Geq)]);
        let result = feasible(&s);
        assert_eq!(result.verdict, Verdict::Infeasible);
        let c = result.trace.contradiction.unwrap();
        assert_eq!(c.ancestors, vec![0, 1]);
        assert_eq!(c.after_steps, 1);
    }

    #[test]
    fn weak_opposites_pin_to_zero() {
        let s = sys(
            2,
            &[
                (&[1, -1], Relation::Geq),
                (&[-1, 1], Relation::Geq),
                (&[1, 0], Relation::Geq),
            ],
        );
        let result = feasible(&s);
        assert!(result.is_feasible());
        let w = result.witness.unwrap();
        assert_eq!(w[0], w[1]);
    }

    #[test]
    fn zero_row() {
        assert!(!feasible(&sys(2, &[(&[0, 0], Relation::Gt)])).is_feasible());
        assert!(feasible(&sys(2, &[(&[0, 0], Relation::Geq)])).is_feasible());
    }

    #[test]
    fn rational_coefficients_are_cleared() {
        let c = LinearConstraint::new(vec![q(1, 2), q(-1, 3)], Relation::Gt);
        let row = integer_row(&c, 0, 1);
        assert_eq!(row.coefficients, vec![BigInt::from(3), BigInt::from(-2)]);
    }

    #[test]
    fn implication() {
        // x > y, y > z  ⊢  x > z, but not z > x
        let s = sys(
            3,
            &[(&[1, -1, 0], Relation::Gt), (&[0, 1, -1], Relation::Gt)],
        );
        assert!(implies(
            &s,
            &LinearConstraint::from_integers([1, 0, -1], Relation::Gt)
        )
        .unwrap());
        assert!(!implies(
            &s,
            &LinearConstraint::from_integers([-1, 0, 1], Relation::Geq)
        )
        .unwrap());
        for c in s.constraints() {
            assert!(implies(&s, c).unwrap());
        }
    }

    #[test]
    fn dimension_is_checked() {
        let mut s = LinearSystem::new(2);
        assert_eq!(
            s.push(LinearConstraint::from_integers([1], Relation::Geq)),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn step_changes_one_sided_values() {
        let s = sys(2, &[(&[1, 0], Relation::Gt), (&[0, 1], Relation::Geq)]);
        let one = feasible(&s).witness.unwrap();
        let two = feasible_with(
            &s,
            &FmOptions {
                step: q(2, 1),
                ..FmOptions::default()
            },
        )
        .witness
        .unwrap();
        assert_ne!(one, two);
        assert!(check_witness(&s, &two));
    }

    #[test]
    fn pruning_keeps_verdicts() {
        let s = sys(
            3,
            &[
                (&[1, -1, 0], Relation::Geq),
                (&[0, 1, -1], Relation::Geq),
                (&[0, 0, 1], Relation::Geq),
                (&[-1, 0, 0], Relation::Gt),
                (&[1, 1, 1], Relation::Geq),
            ],
        );
        for prune in [true, false] {
            let r = feasible_with(
                &s,
                &FmOptions {
                    prune,
                    ..FmOptions::default()
                },
            );
            assert_eq!(r.verdict, Verdict::Infeasible);
        }
    }
}
