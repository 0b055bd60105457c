mod common;

use plr_atop::search::{alphabeta_atop, brute_force_atop, entrywise_atop, SearchOptions};
use plr_atop::{compute_atop, InvariantKind, Limits, MethodSpec, PartialLatinRectangle};

fn backtrack_options() -> Vec<SearchOptions> {
    let mut v = vec![SearchOptions::plain(), SearchOptions::cv(None)];
    for k in InvariantKind::ALL {
        v.push(SearchOptions::with_invariant(k));
        v.push(SearchOptions::cv(Some(k)));
    }
    v
}

fn check_all_methods(l: &PartialLatinRectangle) {
    let oracle = brute_force_atop(l).unwrap();
    assert!(oracle.is_closed());
    for spec in MethodSpec::all() {
        let g = compute_atop(l, spec, &Limits::default()).unwrap();
        assert_eq!(g, oracle, "{spec} on\n{l}");
    }
}

#[test]
fn every_method_on_all_small_rectangles() {
    for r in 1..=2 {
        for s in 1..=2 {
            for n in 1..=2 {
                for l in common::all_plrs(r, s, n) {
                    check_all_methods(&l);
                }
            }
        }
    }
}

#[test]
fn backtrackers_on_all_rectangles_up_to_three() {
    let mut checked = 0;
    for r in 1..=3 {
        for s in 1..=3 {
            for n in 1..=3 {
                for l in common::all_plrs(r, s, n) {
                    let oracle = brute_force_atop(&l).unwrap();
                    for opts in backtrack_options() {
                        assert_eq!(alphabeta_atop(&l, &opts).unwrap(), oracle, "{opts:?}\n{l}");
                    }
                    for opts in backtrack_options().into_iter().filter(|o| !o.use_cv) {
                        assert_eq!(entrywise_atop(&l, &opts).unwrap(), oracle, "{opts:?}\n{l}");
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn every_method_on_random_4x4x4() {
    for l in common::random_suite(4, 4, 4, 200, 0x0a7e) {
        check_all_methods(&l);
    }
}

#[test]
fn every_method_on_random_rectangles() {
    for (r, s, n) in [(3, 4, 5), (4, 3, 4), (2, 5, 5), (4, 5, 6)] {
        for l in common::random_suite(r, s, n, 40, 17) {
            check_all_methods(&l);
        }
    }
}
