mod common;

use common::*;
use snr_core::feasibility::{chain_constraints, row_constraint, LinearConstraint, Relation};
use snr_core::*;

fn texts(l: &SnrLattice, s: &ElementSet) -> Vec<String> {
    let mut v: Vec<String> = s.iter().map(|x| l.string(x).format()).collect();
    v.sort();
    v
}

fn sorted(v: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

#[test]
fn three_two_closures() {
    let l = lattice(3, 2);
    let poset = l.poset();
    assert_eq!(
        texts(&l, &poset.down_closure(&set(&l, &["10|0"]))),
        sorted(&["10|0", "10|1", "00|0", "00|1"])
    );
    assert_eq!(
        texts(&l, &poset.up_closure(&set(&l, &["10|1"]))),
        sorted(&["10|1", "10|0", "20|1", "20|0", "21|1", "21|0"])
    );
    assert_eq!(texts(&l, &poset.minimals(&poset.all())), ["00|1"]);
    assert_eq!(texts(&l, &poset.maximals(&poset.all())), ["21|0"]);
    assert!(!poset.is_antichain(&set(&l, &["10|0", "10|1"])));
    assert!(!poset.is_antichain(&set(&l, &["10|0", "00|0"])));
    assert!(poset.is_antichain(&set(&l, &["21|1", "20|0"])));
    // a 4-chain times a 2-chain: 3*2 + 4*1 covers
    assert_eq!(poset.cover_edges().len(), 10);
}

#[test]
fn cover_edges_match_a_brute_force_count() {
    for (n, r) in [(3, 1), (4, 2), (5, 3)] {
        let l = lattice(n, r);
        let p = l.poset();
        let mut count = 0;
        for x in 0..l.len() {
            for y in 0..l.len() {
                if p.lt(x, y) && !(0..l.len()).any(|z| p.lt(x, z) && p.lt(z, y)) {
                    count += 1;
                }
            }
        }
        assert_eq!(p.cover_edges().len(), count, "S({n},{r})");
    }
}

#[test]
fn string_order_and_complement() {
    let p = params(3, 2);
    assert!(string(p, "10|1").leq(&string(p, "20|0")));
    assert!(!string(p, "20|0").leq(&string(p, "10|1")));
    assert_eq!(string(p, "10|0").complement().format(), "20|1");
    let l = lattice(5, 3);
    assert_eq!(snr_core::snr::minimum(l.params()).format(), "000|12");
    assert_eq!(snr_core::snr::maximum(l.params()).format(), "321|00");
    assert_eq!(SnrString::full(l.params()).format(), "321|12");
    assert_eq!(SnrString::xi(l.params(), 0).unwrap().format(), "000|00");
    assert_eq!(SnrString::eta(params(6, 3), 1).unwrap().format(), "000|001");
    assert!(SnrString::parse("312|00", l.params()).is_err());
}

#[test]
fn star_of_a_seven_four_string() {
    let p = params(7, 4);
    let w = string(p, "4310|013");
    assert_eq!(w.tilde_indices(), [4, 3, 1]);
    assert_eq!(w.bar_indices(), [1, 3]);
    assert!(string(p, "0000|000").star().is_empty());
}

#[test]
fn eleven_seven_partition() {
    let p = params(11, 7);
    let w = string(p, "7543100|0013");
    let wanted = sorted(&["7000000|0000", "5430000|0001", "1000000|0003"]);
    let mut count = 0;
    let mut found = false;
    for blocks in w.partitions() {
        count += 1;
        let mut t: Vec<String> = blocks.iter().map(|b| b.format()).collect();
        t.sort();
        found |= t == wanted;
    }
    assert!(found);
    // Bell(7)
    assert_eq!(count, 877);
}

#[test]
fn weighted_cores_on_five_three() {
    let fx = five_three_minus();
    let l = &fx.lattice;
    let a = span_minus(l.sip(), &fx.pair).unwrap();
    assert!(classify(l, &a, MapFamily::WMinusNr));
    assert_eq!(
        texts(l, &a.maximal_negatives(l.poset())),
        sorted(&["321|02", "100|01"])
    );
    let report = fundamental_core_minus(l.sip(), &a).unwrap();
    assert_eq!(report.pair, fx.pair);
    assert!(report.core.extends_leq(&a));
    let nc = n_core(l.sip(), &a).unwrap();
    assert!(report.core.extends_leq(&nc));
    assert_eq!(nc.negatives(), &a.maximal_negatives(l.poset()));
    assert_eq!(nc.positives(), &a.minimal_positives(l.poset()));
    assert!(nc
        .positives()
        .contains(string(l.params(), "200|01").index()));

    let witness = weights(l.params(), &five_three_minus_witness());
    assert_eq!(witness.class(), WeightClass::Negative);
    assert_eq!(witness.total(), q(-2, 5));
    assert_eq!(witness.induced_map().unwrap(), a);

    let core_system = NrSystem::from_partial_map(l.params(), &report.core).unwrap();
    assert_eq!(to_linear(&core_system).len(), 5 + 3);
    assert!(witness.is_solution(&core_system));
    let report = nlc_check(l, &a).unwrap();
    assert!(report.holds());
    assert!(report.total_compatible && report.core_compatible);

    let plus = five_three_plus();
    let b = span_plus(plus.lattice.sip(), &plus.pair).unwrap();
    assert!(is_w_basis_plus(plus.lattice.sip(), &plus.pair));
    assert!(b.is_up_positive(plus.lattice.poset()) && b.is_down_negative(plus.lattice.poset()));
    let report = plc_check(&plus.lattice, &b).unwrap();
    assert!(report.holds() && report.total_compatible);
    let f = weights(plus.lattice.params(), &five_three_plus_witness());
    assert_eq!(f.class(), WeightClass::Positive);
    assert!(f.is_solution(&report.core_system));
}

#[test]
fn perturbed_witness_breaks_a_strict_row() {
    let fx = five_three_minus();
    let l = &fx.lattice;
    let s = NrSystem::from_partial_map(l.params(), &fx.pair.to_map().unwrap()).unwrap();
    assert!(weights(l.params(), &five_three_minus_witness()).is_solution(&s));
    // x1 = 1/5 puts 100|01 at exactly zero
    let mut v = five_three_minus_witness();
    v[2] = q(1, 5);
    let moved = weights(l.params(), &v);
    assert_eq!(moved.sigma(&string(l.params(), "100|01")), q(0, 1));
    assert!(!moved.is_solution(&s));
}

#[test]
fn incompatible_six_three_rows() {
    let fx = six_three_incompatible();
    let l = &fx.lattice;
    let rows = NrSystem::from_partial_map(l.params(), &fx.pair.to_map().unwrap()).unwrap();
    let r = feasible(&to_linear(&rows));
    assert!(!r.is_feasible());
    assert!(r.trace.contradiction.is_some());
    let map = span_plus(l.sip(), &fx.pair);
    assert!(matches!(
        map,
        Err(Error::NotABasis(BasisViolation::B3(Polarity::Plus)))
    ));
}

#[test]
fn pointwise_core_on_six_three() {
    let fx = six_three_pointwise_core();
    let l = &fx.lattice;
    let core = fx.pair.to_map().unwrap();
    assert!(is_complemented_pointwise(l.params(), &core).is_ok());
    let a = span_minus(l.sip(), &fx.pair).unwrap();
    assert!(!in_fc_minus(l, &a));
    assert!(classify(l, &a, MapFamily::WMinusNr));
    let report = fundamental_core_minus(l.sip(), &a).unwrap();
    assert_eq!(report.core, core);
    // the full string is not a row of the core system
    let s = NrSystem::from_partial_map(l.params(), &core).unwrap();
    let class = classify_system(&s, true);
    assert!(!class.weighted_positive && !class.weighted_negative && !class.total);
    assert_eq!(class.compatible, Some(false));
}

#[test]
fn six_two_weights_and_implication() {
    let p = params(6, 2);
    let f = integers(p, &[3, 1, -1, -1, -1, -1]);
    let g = integers(p, &[4, 0, -1, -1, -1, -1]);
    assert_eq!(f.class(), WeightClass::Positive);
    assert_eq!(g.class(), WeightClass::Positive);
    let w = string(p, "20|0012");
    assert_eq!(f.sigma(&w), q(1, 1));
    let probe = string(p, "10|0001");
    assert_eq!(f.sigma(&probe), q(0, 1));
    assert_eq!(g.sigma(&probe), q(-1, 1));
    assert_eq!(f.alpha_plus().unwrap() + f.alpha_minus().unwrap(), 64);
    assert_eq!(f.alpha_plus().unwrap(), 37);
    assert_eq!(g.alpha_plus().unwrap(), 34);

    let x1_y1 = LinearConstraint::from_integers([0, 1, 1, 0, 0, 0], Relation::Geq);
    assert_eq!(x1_y1, row_constraint(&probe, RowRelation::Geq0));
    let generative = to_linear(&generative_system());
    // six chain constraints and two rows
    assert_eq!(generative.len(), 8);
    assert!(implies(&generative, &x1_y1).unwrap());
    let undetermined = to_linear(&undetermined_system());
    assert!(!implies(&undetermined, &x1_y1).unwrap());
    assert!(!implies(&undetermined, &x1_y1.negated()).unwrap());
    for c in undetermined.constraints() {
        assert!(implies(&undetermined, c).unwrap());
    }

    assert!(matches!(
        is_generative(&generative_system()).unwrap(),
        Generativity::Generative(_)
    ));
    assert!(matches!(
        is_generative(&undetermined_system()).unwrap(),
        Generativity::NotGenerative(_)
    ));
}

#[test]
fn chain_shapes() {
    assert_eq!(chain_constraints(params(5, 3)).len(), 5);
    assert_eq!(to_linear(&NrSystem::new(params(5, 3))).len(), 5);
    let only_tildes = chain_constraints(params(3, 3));
    assert_eq!(only_tildes.len(), 3);
    assert!(only_tildes.iter().all(|c| c.relation == Relation::Geq));

    let one = params(1, 1);
    let mut s =
        snr_core::feasibility::LinearSystem::from_constraints(1, chain_constraints(one)).unwrap();
    s.push(LinearConstraint::from_integers([1], Relation::Gt))
        .unwrap();
    let r = feasible(&s);
    assert_eq!(r.witness, Some(vec![q(1, 1)]));
}

#[test]
fn chi_and_tau_on_five_three() {
    let fx = five_three_minus();
    let l = &fx.lattice;
    let core = fx.pair.to_map().unwrap();
    let s = NrSystem::from_partial_map(l.params(), &core).unwrap();
    assert_eq!(s.len(), 3);
    assert_eq!(
        s.relation(&string(l.params(), "100|01")),
        Some(RowRelation::Lt0)
    );
    let image = chi(&s);
    assert!(core.extends_leq(&image));
    assert_eq!(image.domain().len(), 3 + 4 + 2);
    assert_eq!(tau(l, &image).unwrap(), s);

    let empty = chi(&NrSystem::new(l.params()));
    assert_eq!(empty.domain().len(), 4 + 2);
    assert!(tau(l, &PartialMap::constant(l.len(), Sign::N)).is_err());
}

#[test]
fn three_two_scan_counts() {
    let l = lattice(3, 2);
    let plus = conjecture_scan(&l, formal::Question::Q2, 32).unwrap();
    let minus = conjecture_scan(&l, formal::Question::Q3, 32).unwrap();
    for report in [&plus, &minus] {
        let family = match report.which {
            formal::Question::Q2 => MapFamily::WPlusNr,
            formal::Question::Q3 => MapFamily::WMinusNr,
        };
        let members: Vec<_> = enumerate_family(&l, family, 32).unwrap().collect();
        assert_eq!(report.family_count, members.len());
        let fc = members
            .iter()
            .filter(|a| in_fc(&l, a, report.which.polarity()))
            .count();
        assert_eq!(report.fc_count, fc);
        let ok = members
            .iter()
            .filter(|a| compatible(&tau(&l, a).unwrap()).is_compatible())
            .count();
        assert_eq!(report.compatible_count, ok);
        assert_eq!(report.compatible_outside_fc, 0);
    }
}
