mod common;

use common::{compare_with_fixture, fixture};
use polysym::oracle::{oracle_transition, rule_transition};
use polysym::types::enumerate_types;
use polysym::Basis;

fn check(from: Basis, to: Basis, oracle: bool) {
    let fx = fixture();
    let want = fx
        .matrices
        .iter()
        .find(|m| m.from == from && m.to == to)
        .expect("matrix present in fixture");
    let got = if oracle {
        oracle_transition(from, to, fx.weight).unwrap()
    } else {
        rule_transition(from, to, fx.weight).unwrap()
    };
    let diffs = compare_with_fixture(&got, want);
    assert!(diffs.is_empty(), "M({from}, {to}):\n{}", diffs.join("\n"));
}

macro_rules! golden {
    ($($name:ident: $from:expr => $to:expr;)*) => {
        $(
            #[test]
            fn $name() {
                check($from, $to, false);
                check($from, $to, true);
            }
        )*
    };
}

golden! {
    power_into_schur: Basis::P => Basis::S;
    complete_into_schur: Basis::H => Basis::S;
    square_free_into_schur: Basis::EPlus => Basis::S;
    signed_into_schur: Basis::E => Basis::S;
    power_into_power_sums: Basis::P => Basis::PT;
    complete_into_power_sums: Basis::H => Basis::PT;
    square_free_into_power_sums: Basis::EPlus => Basis::PT;
    signed_into_power_sums: Basis::E => Basis::PT;
    power_into_monomials: Basis::P => Basis::M;
    complete_into_monomials: Basis::H => Basis::M;
    square_free_into_monomials: Basis::EPlus => Basis::M;
    signed_into_monomials: Basis::E => Basis::M;
}

#[test]
fn fixture_covers_every_type_once() {
    let fx = fixture();
    assert_eq!(fx.matrices.len(), 12);
    let mut want = enumerate_types(fx.weight);
    want.sort();
    for m in &fx.matrices {
        let mut labels = m.labels.clone();
        labels.sort();
        assert_eq!(labels, want);
    }
}

#[test]
fn canonical_order_matches_fixture_layout() {
    let fx = fixture();
    assert_eq!(enumerate_types(fx.weight), fx.matrices[0].labels);
}
