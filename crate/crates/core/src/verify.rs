//! Exhaustive property sweep over every Hessenberg function of a given size.
//!
//! Each named lemma is checked against the brute-force oracles in
//! [`crate::oracles`]. Counts are tallied per lemma; every failure is also
//! recorded as a [`Discrepancy`].

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixed::{
    fixed_points_cell, fixed_points_chl, fixed_points_interval, fixed_points_schubert, reducibility_witness,
};
use crate::hessenberg::{enumerate_hessenberg, HessenbergFunction};
use crate::oracles::{self, CoverClosure, Discrepancy};
use crate::order::{self, bruhat_leq, weak_left_leq};
use crate::par::{self, Exec};
use crate::perm::{self, Permutation, RootSet};
use crate::reach::{j_set, j_set_by_maximal_element, k_subsets, largest_source, sources, ReachabilityTable};
use crate::weyl::{descent_roots_within, enumerate_weyl_subsets, subset_of_orientation, WeylSubset};

pub const MAX_VERIFY_N: usize = 6;

/// Largest size at which set reachability is checked for every origin set.
/// Above it only the initial segments `{1..k}` are used as origins.
pub const MAX_ALL_ORIGINS_N: usize = 5;

const MAX_RECORDED: usize = 200;

pub const LEMMAS: &[&str] = &[
    "inversion-complement",
    "bruhat-cover-oracle",
    "bruhat-partial-order",
    "weak-order",
    "hessenberg-dimension",
    "reduction",
    "orientation-bijection",
    "partition",
    "weak-interval",
    "involution",
    "sommers-tymoczko",
    "induction",
    "sources",
    "largest-source-reach",
    "reachable-monotone",
    "reachability-order",
    "set-reachability",
    "j-set",
    "main-theorem",
    "cell-translation",
    "schubert-interval",
    "containment",
    "permutohedral-witness",
];

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaTally {
    pub checked: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub hessenberg_functions: usize,
    pub weyl_subsets: usize,
    pub lemmas: BTreeMap<String, LemmaTally>,
    pub passed: bool,
    #[serde(skip)]
    pub discrepancies: Vec<Discrepancy>,
}

impl VerifyReport {
    pub fn total_failures(&self) -> u64 {
        self.lemmas.values().map(|t| t.failures).sum()
    }
}

#[derive(Default)]
struct Ledger {
    tallies: BTreeMap<&'static str, LemmaTally>,
    discrepancies: Vec<Discrepancy>,
}

impl Ledger {
    fn check(&mut self, lemma: &'static str, ok: bool, describe: impl FnOnce() -> Discrepancy) {
        let tally = self.tallies.entry(lemma).or_default();
        tally.checked += 1;
        if !ok {
            tally.failures += 1;
            if self.discrepancies.len() < MAX_RECORDED {
                self.discrepancies.push(describe());
            }
        }
    }

    fn absorb(&mut self, other: Ledger) {
        for (name, t) in other.tallies {
            let mine = self.tallies.entry(name).or_default();
            mine.checked += t.checked;
            mine.failures += t.failures;
        }
        let room = MAX_RECORDED.saturating_sub(self.discrepancies.len());
        self.discrepancies.extend(other.discrepancies.into_iter().take(room));
    }
}

struct Selection<'a>(Option<&'a str>);

impl Selection<'_> {
    fn wants(&self, lemma: &str) -> bool {
        self.0.is_none_or(|only| only == lemma)
    }
}

/// Runs the sweep for size `n`. `lemma` restricts it to one entry of [`LEMMAS`].
pub fn verify(n: usize, lemma: Option<&str>, exec: Exec) -> Result<VerifyReport> {
    if n == 0 || n > MAX_VERIFY_N {
        return Err(Error::LimitExceeded {
            what: "verify size",
            got: n,
            max: MAX_VERIFY_N,
        });
    }
    if let Some(name) = lemma {
        if !LEMMAS.contains(&name) {
            return Err(Error::UnknownLemma(name.to_string()));
        }
    }
    let sel = Selection(lemma);
    let perms = perm::all(n)?;
    let functions = enumerate_hessenberg(n)?;

    let mut ledger = check_global(n, &perms, &sel)?;
    let units = par::map(exec, &functions, |h| check_hessenberg(h, &perms, &sel));
    let mut weyl_subsets = 0;
    for unit in units {
        let (count, part) = unit?;
        weyl_subsets += count;
        ledger.absorb(part);
    }

    let lemmas: BTreeMap<String, LemmaTally> = LEMMAS
        .iter()
        .filter(|name| sel.wants(name))
        .map(|name| (name.to_string(), ledger.tallies.get(name).copied().unwrap_or_default()))
        .collect();
    let passed = lemmas.values().all(|t| t.failures == 0);
    Ok(VerifyReport {
        n,
        hessenberg_functions: functions.len(),
        weyl_subsets,
        lemmas,
        passed,
        discrepancies: ledger.discrepancies,
    })
}

fn global(n: usize, op: &str, detail: String) -> Discrepancy {
    Discrepancy::new(n, None, None, op, detail)
}

fn check_global(n: usize, perms: &[Permutation], sel: &Selection) -> Result<Ledger> {
    let mut ledger = Ledger::default();
    let w0 = Permutation::longest(n)?;
    let all_roots = RootSet::positive(n);

    if sel.wants("inversion-complement") {
        for w in perms {
            let ok = (&w0 * w).inversion_set() == all_roots.difference(&w.inversion_set())
                && w.inversion_set()
                    .iter()
                    .all(|r| w.apply_to_root(r).is_ok_and(|x| !x.is_positive()));
            ledger.check("inversion-complement", ok, || {
                global(n, "inversion-complement", format!("w={w}"))
            });
        }
    }

    let needs_bruhat = ["bruhat-cover-oracle", "bruhat-partial-order", "weak-order"]
        .iter()
        .any(|l| sel.wants(l));
    if !needs_bruhat {
        return Ok(ledger);
    }
    // leq[a] has bit b set iff perms[a] <= perms[b] under the tableau criterion
    let words = perms.len().div_ceil(64);
    let mut leq = vec![vec![0u64; words]; perms.len()];
    for (a, w) in perms.iter().enumerate() {
        for (b, v) in perms.iter().enumerate() {
            if bruhat_leq(w, v)? {
                leq[a][b / 64] |= 1 << (b % 64);
            }
        }
    }
    let below = |a: usize, b: usize| leq[a][b / 64] >> (b % 64) & 1 == 1;

    if sel.wants("bruhat-cover-oracle") {
        let closure = CoverClosure::new(n)?;
        for (a, w) in perms.iter().enumerate() {
            for (b, v) in perms.iter().enumerate() {
                let ok = closure.leq(w, v)? == below(a, b);
                ledger.check("bruhat-cover-oracle", ok, || {
                    global(n, "bruhat-cover-oracle", format!("w={w} v={v} tableau={}", below(a, b)))
                });
            }
        }
    }

    if sel.wants("bruhat-partial-order") {
        for (a, w) in perms.iter().enumerate() {
            let mut ok = below(a, a);
            for b in 0..perms.len() {
                if below(a, b) {
                    ok &= b == a || !below(b, a);
                    ok &= leq[b].iter().zip(&leq[a]).all(|(up_b, up_a)| up_b & !up_a == 0);
                }
            }
            ledger.check("bruhat-partial-order", ok, || {
                global(n, "bruhat-partial-order", format!("w={w}"))
            });
        }
    }

    if sel.wants("weak-order") {
        let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(a, w)| (w, a)).collect();
        for (a, u) in perms.iter().enumerate() {
            let flipped_u = index[&(&w0 * u)];
            for (b, v) in perms.iter().enumerate() {
                let weak = weak_left_leq(u, v)?;
                let flipped_v = index[&(&w0 * v)];
                let ok = (!weak || below(a, b))
                    && weak == weak_left_leq(&perms[flipped_v], &perms[flipped_u])?
                    && below(a, b) == below(flipped_v, flipped_u);
                ledger.check("weak-order", ok, || global(n, "weak-order", format!("u={u} v={v}")));
            }
        }
    }
    Ok(ledger)
}

fn check_hessenberg(h: &HessenbergFunction, perms: &[Permutation], sel: &Selection) -> Result<(usize, Ledger)> {
    let n = h.n();
    let mut ledger = Ledger::default();
    let w0 = Permutation::longest(n)?;
    let e = Permutation::identity(n)?;
    let phi = h.phi_plus();
    let graph = h.incomparability_graph();
    let about = |s: Option<&WeylSubset>, op: &str, detail: String| Discrepancy::new(n, Some(h), s, op, detail);

    if sel.wants("hessenberg-dimension") {
        let ok = phi.len() == h.total_dimension() && graph.edge_count() == phi.len();
        ledger.check("hessenberg-dimension", ok, || {
            about(
                None,
                "hessenberg-dimension",
                format!("|Φ_h⁺|={} N_h={}", phi.len(), h.total_dimension()),
            )
        });
        for w in perms {
            let ok = h.hess_length(w)? == w.inversion_set().intersection(&phi).len();
            ledger.check("hessenberg-dimension", ok, || {
                about(None, "hessenberg-dimension", format!("w={w}"))
            });
        }
    }

    if sel.wants("reduction") && n >= 2 {
        for k in 1..=n {
            let red = h.reduce(k)?;
            let red_graph = red.function().incomparability_graph();
            let mut expected: Vec<(usize, usize)> = graph
                .edges()
                .into_iter()
                .filter(|&(a, b)| a != k && b != k)
                .map(|(a, b)| (red.reduced_vertex(a).unwrap(), red.reduced_vertex(b).unwrap()))
                .collect();
            expected.sort_unstable();
            let u = Permutation::u_k(n, k)?;
            let image: RootSet = phi
                .iter()
                .map(|r| u.apply_to_root(r))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|r| r.i() >= 2 && r.j() >= 2)
                .collect();
            let labels_ok = (1..n).all(|a| red.shifted_label(a) == u.at(red.original_vertex(a)));
            let ok = red_graph.edges() == expected && red.shifted_phi_plus() == image && labels_ok;
            ledger.check("reduction", ok, || about(None, "reduction", format!("k={k}")));
        }
    }

    let subsets = enumerate_weyl_subsets(h);

    if sel.wants("orientation-bijection") {
        let acyclic = oracles::acyclic_orientations_by_enumeration(&graph)?;
        let mut from_oracle: Vec<Vec<(usize, usize)>> = acyclic.iter().map(|o| sorted_arcs(o.arcs())).collect();
        from_oracle.sort();
        let mut from_subsets: Vec<Vec<(usize, usize)>> =
            subsets.iter().map(|s| sorted_arcs(s.orientation().arcs())).collect();
        from_subsets.sort();
        ledger.check("orientation-bijection", from_oracle == from_subsets, || {
            about(
                None,
                "orientation-bijection",
                format!(
                    "{} acyclic orientations, {} subsets",
                    from_oracle.len(),
                    from_subsets.len()
                ),
            )
        });
        for o in &acyclic {
            let ok =
                subset_of_orientation(o).is_ok_and(|s| sorted_arcs(s.orientation().arcs()) == sorted_arcs(o.arcs()));
            ledger.check("orientation-bijection", ok, || {
                about(None, "orientation-bijection", format!("arcs={:?}", o.arcs()))
            });
        }
    }

    // Classes by a single filtering pass over S_n, independent of the BFS in `class()`.
    let mut by_filter: HashMap<RootSet, Vec<Permutation>> = HashMap::new();
    for w in perms {
        by_filter
            .entry(w.inversion_set().intersection(&phi))
            .or_default()
            .push(w.clone());
    }
    let classes: Vec<Vec<Permutation>> = subsets.iter().map(WeylSubset::class).collect();

    if sel.wants("partition") {
        let total: usize = classes.iter().map(Vec::len).sum();
        let ok = total == perms.len() && by_filter.len() == subsets.len();
        ledger.check("partition", ok, || {
            about(
                None,
                "partition",
                format!("class sizes sum to {total}, {} distinct", by_filter.len()),
            )
        });
        for (s, class) in subsets.iter().zip(&classes) {
            let ok = by_filter.get(s.roots()) == Some(class);
            ledger.check("partition", ok, || {
                about(Some(s), "partition", "BFS class differs from filter".into())
            });
        }
    }

    for (s, class) in subsets.iter().zip(&classes) {
        let w_s = s.w_max();
        let z_s = s.z_min();

        if sel.wants("weak-interval") {
            let ok = order::weak_interval(&z_s, &w_s)? == *class
                && oracles::weak_extremes(class) == Some((z_s.clone(), w_s.clone()));
            ledger.check("weak-interval", ok, || {
                about(Some(s), "weak-interval", format!("z_min={z_s} w_max={w_s}"))
            });
        }

        if sel.wants("involution") {
            let mut flipped: Vec<Permutation> = class.iter().map(|w| &w0 * w).collect();
            flipped.sort_unstable();
            let complement = s.complement();
            let ok = flipped == complement.class() && complement.w_max() == &w0 * &z_s;
            ledger.check("involution", ok, || about(Some(s), "involution", String::new()));
        }

        if sel.wants("sommers-tymoczko") {
            let satisfying: Vec<&Permutation> = class.iter().filter(|z| descent_roots_within(z, h)).collect();
            let minimal = perms
                .iter()
                .filter(|y| s.roots().is_subset(&y.inversion_set()))
                .all(|y| z_s.inversion_set().is_subset(&y.inversion_set()));
            let ok = satisfying == [&z_s] && minimal;
            ledger.check("sommers-tymoczko", ok, || {
                about(
                    Some(s),
                    "sommers-tymoczko",
                    format!("criterion holds for {satisfying:?}"),
                )
            });
        }

        let o = s.orientation();
        let table = ReachabilityTable::new(&o);
        let srcs = sources(&o)?;

        if sel.wants("induction") && n >= 2 {
            for &k in &srcs {
                let ind = s.induced(k)?;
                let small = ind.subset();
                let small_phi = small.hessenberg().phi_plus();
                let mut ok = true;
                for y in perm::enumerate(n - 1)? {
                    let in_small = y.inversion_set().intersection(&small_phi) == *small.roots();
                    let lifted = ind.lift(&y)?;
                    ok &= lifted.at(k) == 1 && in_small == class.binary_search(&lifted).is_ok();
                }
                ledger.check("induction", ok, || about(Some(s), "induction", format!("source k={k}")));
            }
        }

        if sel.wants("sources") {
            let ones: Vec<usize> = {
                let mut v: Vec<usize> = class.iter().map(|w| w.position_of(1)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let ok = ones == srcs && largest_source(&o)? == w_s.position_of(1);
            ledger.check("sources", ok, || {
                about(Some(s), "sources", format!("sources={srcs:?} positions of 1={ones:?}"))
            });
        }

        if sel.wants("largest-source-reach") {
            let top = largest_source(&o)?;
            let ok = (top + 1..=n).all(|i| table.reaches(top, i));
            ledger.check("largest-source-reach", ok, || {
                about(Some(s), "largest-source-reach", format!("largest source {top}"))
            });
        }

        if sel.wants("reachable-monotone") || sel.wants("reachability-order") {
            for j in 1..=n {
                for i in j..=n {
                    let reach = table.is_reachable(j, i)?;
                    if sel.wants("reachable-monotone") {
                        let ok = !reach || class.iter().all(|w| w.at(j) <= w.at(i));
                        ledger.check("reachable-monotone", ok, || {
                            about(Some(s), "reachable-monotone", format!("j={j} i={i}"))
                        });
                    }
                    if sel.wants("reachability-order") {
                        let ok = reach == (w_s.at(j) <= w_s.at(i));
                        ledger.check("reachability-order", ok, || {
                            about(Some(s), "reachability-order", format!("j={j} i={i} reachable={reach}"))
                        });
                    }
                }
            }
        }

        if sel.wants("set-reachability") {
            for size in 1..=n {
                let origins: Vec<u32> = if n <= MAX_ALL_ORIGINS_N {
                    k_subsets(n, size)
                } else {
                    vec![(1u32 << size) - 1]
                };
                for &b in &origins {
                    let b_list = mask_to_vec(b);
                    for a in k_subsets(n, size) {
                        let a_list = mask_to_vec(a);
                        let fast = table.set_reachable_mask(b, a);
                        let slow = oracles::set_reachable_by_enumeration(&b_list, &a_list, &o)?;
                        ledger.check("set-reachability", fast == slow, || {
                            about(
                                Some(s),
                                "set-reachability",
                                format!("B={b_list:?} A={a_list:?} matching={fast}"),
                            )
                        });
                    }
                }
            }
        }

        if sel.wants("main-theorem") {
            let ok = fixed_points_chl(&w_s, h)? == fixed_points_interval(s);
            ledger.check("main-theorem", ok, || {
                about(Some(s), "main-theorem", format!("w_max={w_s}"))
            });
        }

        if sel.wants("schubert-interval") {
            let mut flipped: Vec<Permutation> =
                fixed_points_interval(&s.complement()).iter().map(|u| &w0 * u).collect();
            flipped.sort_unstable();
            let schubert = fixed_points_schubert(s);
            let ok = schubert == flipped && schubert == order::bruhat_interval(&e, &z_s)?;
            ledger.check("schubert-interval", ok, || {
                about(Some(s), "schubert-interval", format!("z_min={z_s}"))
            });
        }

        if sel.wants("permutohedral-witness") && (h.is_full() || *h == HessenbergFunction::permutohedral(n)?) {
            let witness = reducibility_witness(s);
            ledger.check("permutohedral-witness", witness.is_none(), || {
                about(Some(s), "permutohedral-witness", format!("witness {witness:?}"))
            });
        }
    }

    if sel.wants("j-set") && n >= 2 {
        for w in perms {
            for k in 1..n {
                let ok = j_set(w, h, k)? == j_set_by_maximal_element(w, h, k)?;
                ledger.check("j-set", ok, || about(None, "j-set", format!("w={w} k={k}")));
            }
        }
    }

    if sel.wants("cell-translation") || sel.wants("containment") {
        let maxima: HashMap<RootSet, Permutation> = subsets.iter().map(|s| (*s.roots(), s.w_max())).collect();
        for v in perms {
            let chl = fixed_points_chl(v, h)?;
            if sel.wants("cell-translation") {
                let ok = fixed_points_cell(v, h)? == chl;
                ledger.check("cell-translation", ok, || {
                    about(None, "cell-translation", format!("v={v}"))
                });
            }
            if sel.wants("containment") {
                let upper = order::bruhat_interval(v, &w0)?;
                let is_max = maxima[&v.inversion_set().intersection(&phi)] == *v;
                let ok = chl.iter().all(|u| upper.binary_search(u).is_ok()) && (chl == upper) == is_max;
                ledger.check("containment", ok, || {
                    about(
                        None,
                        "containment",
                        format!("v={v} |fixed|={} |[v,w0]|={}", chl.len(), upper.len()),
                    )
                });
            }
        }
    }

    Ok((subsets.len(), ledger))
}

fn sorted_arcs(mut arcs: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    arcs.sort_unstable();
    arcs
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    crate::reach::bits(mask).map(|b| b + 1).collect()
}
