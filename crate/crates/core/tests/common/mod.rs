#![allow(dead_code)]

use snr_core::{
    CorePair, ElementSet, NrSystem, Polarity, Rational, RowRelation, SnrLattice, SnrParams,
    SnrString, WeightFunction,
};

pub fn params(n: usize, r: usize) -> SnrParams {
    SnrParams::new(n, r).unwrap()
}

pub fn lattice(n: usize, r: usize) -> SnrLattice {
    SnrLattice::build(params(n, r)).unwrap()
}

pub fn string(params: SnrParams, text: &str) -> SnrString {
    SnrString::parse(text, params).unwrap()
}

pub fn set(l: &SnrLattice, texts: &[&str]) -> ElementSet {
    ElementSet::from_indices(l.len(), texts.iter().map(|t| string(l.params(), t).index()))
}

pub fn pair(l: &SnrLattice, positive: &[&str], negative: &[&str]) -> CorePair {
    CorePair::new(set(l, positive), set(l, negative))
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn weights(params: SnrParams, values: &[Rational]) -> WeightFunction {
    WeightFunction::from_values(params, values.to_vec()).unwrap()
}

pub fn system(params: SnrParams, rows: &[(&str, RowRelation)]) -> NrSystem {
    NrSystem::from_rows(params, rows.iter().map(|(t, r)| (string(params, t), *r))).unwrap()
}

/// A published fundamental core together with the lattice it lives on.
pub struct Fixture {
    pub lattice: SnrLattice,
    pub pair: CorePair,
    pub polarity: Polarity,
}

/// W- map on S(5,3) with a compatible core.
pub fn five_three_minus() -> Fixture {
    let lattice = lattice(5, 3);
    let pair = pair(&lattice, &["000|00", "200|01"], &["321|02", "100|01"]);
    Fixture {
        lattice,
        pair,
        polarity: Polarity::Minus,
    }
}

/// Solution of the core system of [`five_three_minus`].
pub fn five_three_minus_witness() -> Vec<Rational> {
    vec![q(1, 2), q(1, 3), q(1, 6), q(-1, 5), q(-6, 5)]
}

/// W+ map on S(5,3) with a compatible core.
pub fn five_three_plus() -> Fixture {
    let lattice = lattice(5, 3);
    let pair = pair(&lattice, &["321|12", "000|00"], &["320|02", "000|01"]);
    Fixture {
        lattice,
        pair,
        polarity: Polarity::Plus,
    }
}

/// `1, 1, 0.9 | -0.8, -2.1`.
pub fn five_three_plus_witness() -> Vec<Rational> {
    vec![q(1, 1), q(1, 1), q(9, 10), q(-4, 5), q(-21, 10)]
}

/// W+ map on S(6,3) whose system has no solution.
pub fn six_three_incompatible() -> Fixture {
    let lattice = lattice(6, 3);
    let pair = pair(
        &lattice,
        &["321|123", "000|000"],
        &["300|003", "210|003", "200|002", "100|001"],
    );
    Fixture {
        lattice,
        pair,
        polarity: Polarity::Plus,
    }
}

/// W- map on S(6,3) whose core is complemented pointwise but which is not.
pub fn six_three_pointwise_core() -> Fixture {
    let lattice = lattice(6, 3);
    let pair = pair(&lattice, &["100|003", "000|000"], &["321|012", "000|001"]);
    Fixture {
        lattice,
        pair,
        polarity: Polarity::Minus,
    }
}

/// `x_2 + x_1 + Σy >= 0`, `x_1 + y_2 + y_3 < 0` on (6,2): solutions disagree.
pub fn undetermined_system() -> NrSystem {
    system(
        params(6, 2),
        &[
            ("21|1234", RowRelation::Geq0),
            ("10|0023", RowRelation::Lt0),
        ],
    )
}

/// `x_2 + x_1 + Σy >= 0`, `x_1 + Σy >= 0` on (6,2): all solutions agree.
pub fn generative_system() -> NrSystem {
    system(
        params(6, 2),
        &[
            ("21|1234", RowRelation::Geq0),
            ("10|1234", RowRelation::Geq0),
        ],
    )
}

pub fn integers(params: SnrParams, values: &[i64]) -> WeightFunction {
    weights(params, &values.iter().map(|&v| q(v, 1)).collect::<Vec<_>>())
}
