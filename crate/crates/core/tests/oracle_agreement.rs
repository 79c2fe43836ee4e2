use hessenberg_schubert::oracles::{
    acyclic_orientations_by_enumeration, bruhat_leq_by_covers, class_by_filter, set_reachable_by_enumeration,
    weak_extremes, CoverClosure, MAX_COVER_N,
};
use hessenberg_schubert::verify::{verify, LEMMAS};
use hessenberg_schubert::{
    bruhat_leq, enumerate_hessenberg, enumerate_weyl_subsets, set_reachable, Exec, HessenbergFunction, Permutation,
};

fn subsets_of(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect())
        .collect()
}

#[test]
fn classes_match_filter_through_n5() {
    for n in 1..=5 {
        for h in enumerate_hessenberg(n).unwrap() {
            for s in enumerate_weyl_subsets(&h) {
                let filtered = class_by_filter(s.roots(), &h).unwrap();
                assert_eq!(filtered, s.class(), "h={h} S={:?}", s.roots());
                assert_eq!(weak_extremes(&filtered), Some((s.z_min(), s.w_max())));
            }
        }
    }
}

#[test]
fn full_function_classes_are_singletons() {
    let h = HessenbergFunction::full(5).unwrap();
    for s in enumerate_weyl_subsets(&h) {
        assert_eq!(class_by_filter(s.roots(), &h).unwrap().len(), 1);
    }
}

#[test]
fn matching_agrees_with_all_pairings_through_n5() {
    for n in 1..=5 {
        let sets = subsets_of(n);
        for h in enumerate_hessenberg(n).unwrap() {
            for s in enumerate_weyl_subsets(&h) {
                let o = s.orientation();
                for b in &sets {
                    for a in sets.iter().filter(|a| a.len() == b.len()) {
                        assert_eq!(
                            set_reachable(b, a, &o).unwrap(),
                            set_reachable_by_enumeration(b, a, &o).unwrap(),
                            "h={h} S={:?} B={b:?} A={a:?}",
                            s.roots()
                        );
                    }
                    assert!(set_reachable_by_enumeration(b, b, &o).unwrap());
                }
            }
        }
    }
}

#[test]
fn pairing_oracle_rejects_oversized_sets() {
    let h = HessenbergFunction::full(7).unwrap();
    let s = enumerate_weyl_subsets(&HessenbergFunction::minimal(7).unwrap()).remove(0);
    let all: Vec<usize> = (1..=7).collect();
    assert!(set_reachable_by_enumeration(&all, &all, &s.orientation()).is_err());
    assert!(acyclic_orientations_by_enumeration(&h.incomparability_graph()).is_err());
}

#[test]
fn orientation_counts_through_n6() {
    for n in 1..=6 {
        for h in enumerate_hessenberg(n).unwrap() {
            let oracle = acyclic_orientations_by_enumeration(&h.incomparability_graph()).unwrap();
            assert_eq!(oracle.len(), enumerate_weyl_subsets(&h).len(), "h={h}");
        }
    }
    let complete = HessenbergFunction::full(4).unwrap().incomparability_graph();
    assert_eq!(acyclic_orientations_by_enumeration(&complete).unwrap().len(), 24);
}

#[test]
fn cover_closure_agrees_through_cap() {
    for n in 1..=MAX_COVER_N {
        let closure = CoverClosure::new(n).unwrap();
        let perms = hessenberg_schubert::perm::all(n).unwrap();
        for w in &perms {
            for v in &perms {
                assert_eq!(closure.leq(w, v).unwrap(), bruhat_leq(w, v).unwrap(), "{w} {v}");
            }
        }
    }
    assert!(CoverClosure::new(MAX_COVER_N + 1).is_err());
    let e = Permutation::identity(3).unwrap();
    let w0 = Permutation::longest(3).unwrap();
    assert!(bruhat_leq_by_covers(&e, &w0).unwrap());
    assert!(!bruhat_leq_by_covers(&w0, &e).unwrap());
}

#[test]
fn full_sweep_at_n5() {
    let report = verify(5, None, Exec::default()).unwrap();
    assert_eq!(report.hessenberg_functions, 42);
    assert_eq!(report.lemmas.len(), LEMMAS.len());
    for line in report.discrepancies.iter().map(|d| d.to_json_line()) {
        eprint!("{line}");
    }
    assert!(report.passed);
}
