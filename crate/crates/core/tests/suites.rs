use hsstable::checks::{run_suite, CheckOptions, Status, Suite};
use hsstable::constructions::rees_example;
use hsstable::corpus::full;
use hsstable::InvolutionSemigroup;

/// Every suite over every corpus member. The only tolerated failure is the
/// kernel leg of the commutative description on semigroups with S != S^2,
/// where an HS-stable set need not be closed while every kernel is.
#[test]
fn every_suite_over_the_corpus() {
    let opts = CheckOptions {
        exhaustive_order: 10,
        samples: 150,
        seed: 11,
    };
    let mut unexpected = Vec::new();
    let mut kernel_leg = 0;
    for s in full() {
        for r in run_suite(&s, Suite::All, opts) {
            if r.status != Status::Fail {
                continue;
            }
            if r.name == "HS-stable iff kernel of a group image" && !s.square_set().is_full() {
                kernel_leg += 1;
            } else {
                unexpected.push(format!("{}: {r}", s.name().unwrap_or("?")));
            }
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
    assert!(kernel_leg > 0);
}

#[test]
fn corpus_members_round_trip_through_json() {
    for s in full() {
        let back = InvolutionSemigroup::from_json_str(&s.to_json_string()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.name(), s.name());
        assert_eq!(back.to_json_string(), s.to_json_string());
    }
}

#[test]
fn rees_instance_is_regular_not_orthodox() {
    let ex = rees_example();
    let c = ex.semigroup().classify();
    assert!(c.regular_star);
    assert!(!c.orthodox_star);
    assert!(!ex.semigroup().is_e_unitary());
    assert_eq!(c.order, 54);
}
