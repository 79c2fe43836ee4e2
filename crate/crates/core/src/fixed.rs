//! Torus-fixed points of opposite Hessenberg Schubert varieties.
//!
//! Two independent routes are provided:
//!
//! * [`fixed_points_chl`] evaluates the reachability description directly:
//!   `u` is fixed iff for every `k < n`, `u · (1..k) = w · i` for some
//!   `i ∈ J_{w,h,k}`.
//! * [`fixed_points_interval`] and [`fixed_points_cell`] use Bruhat order:
//!   `[w_S, w_0]` for the maximal element of a class, translated by
//!   `u = v · w_S^{-1}` for any other member `v`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergFunction;
use crate::order::{self, sort_action_mask};
use crate::perm::{self, Permutation};
use crate::reach::{j_set_masks, ReachabilityTable};
use crate::weyl::WeylSubset;

/// `(Ω_{w,h})^T` from the reachability sets `J_{w,h,k}`. Sorted lexicographically.
pub fn fixed_points_chl(w: &Permutation, h: &HessenbergFunction) -> Result<Vec<Permutation>> {
    let s = WeylSubset::of_permutation(w, h)?;
    let n = w.n();
    let table = ReachabilityTable::new(&s.orientation());
    // allowed[k-1] is a membership table over vertex masks: w · i for i ∈ J_{w,h,k}.
    let allowed: Vec<Vec<bool>> = (1..n)
        .map(|k| {
            let mut seen = vec![false; 1 << n];
            for m in j_set_masks(&table, k) {
                seen[sort_action_mask(w.raw(), m) as usize] = true;
            }
            seen
        })
        .collect();
    Ok(perm::enumerate(n)?
        .filter(|u| {
            let mut prefix = 0u32;
            u.raw()[..n - 1].iter().enumerate().all(|(p, &value)| {
                prefix |= 1 << (value - 1);
                allowed[p][prefix as usize]
            })
        })
        .collect())
}

/// `[w_S, w_0]`, the fixed points for the maximal element of the class of `S`.
pub fn fixed_points_interval(s: &WeylSubset) -> Vec<Permutation> {
    let w0 = Permutation::longest(s.n()).expect("size already validated");
    order::bruhat_interval(&s.w_max(), &w0).expect("sizes agree")
}

/// `(Ω_{v,h})^T = u [w_S, w_0]` with `S = N(v) ∩ Φ_h⁺` and `u = v · w_S^{-1}`.
/// Sorted lexicographically.
pub fn fixed_points_cell(v: &Permutation, h: &HessenbergFunction) -> Result<Vec<Permutation>> {
    let s = WeylSubset::of_permutation(v, h)?;
    let w_s = s.w_max();
    let u = v * &w_s.inverse();
    if w_s.length() != v.length() + u.length() {
        return Err(Error::Inconsistent(format!(
            "{v} is not below w_S = {w_s} in the weak order: ℓ(w_S) = {}, ℓ(v) + ℓ(u) = {}",
            w_s.length(),
            v.length() + u.length()
        )));
    }
    let mut points: Vec<Permutation> = fixed_points_interval(&s).iter().map(|x| &u * x).collect();
    points.sort_unstable();
    Ok(points)
}

/// `X_{z_S,h}^T = [e, z_S]`.
pub fn fixed_points_schubert(s: &WeylSubset) -> Vec<Permutation> {
    let e = Permutation::identity(s.n()).expect("size already validated");
    order::bruhat_interval(&e, &s.z_min()).expect("sizes agree")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    #[serde(rename = "N_h")]
    pub total: usize,
    pub cell_dim: usize,
    pub opp_cell_dim: usize,
}

/// Dimensions of the Hessenberg variety and of the cells of `w`.
pub fn dimension_report(w: &Permutation, h: &HessenbergFunction) -> Result<DimensionReport> {
    let cell_dim = h.hess_length(w)?;
    let total = h.total_dimension();
    Ok(DimensionReport {
        total,
        cell_dim,
        opp_cell_dim: total - cell_dim,
    })
}

/// Lexicographically smallest `u > w_S` in Bruhat order with `ℓ_h(u) = ℓ_h(w_S)`.
///
/// A witness means `Ω_{w_S} ∩ Hess(S, h)` has a second top-dimensional
/// component and is therefore reducible. `None` proves nothing.
pub fn reducibility_witness(s: &WeylSubset) -> Option<Permutation> {
    let h = s.hessenberg();
    let w_s = s.w_max();
    let target = h.hess_length(&w_s).expect("sizes agree");
    perm::enumerate(s.n()).expect("size already validated").find(|u| {
        *u != w_s && order::bruhat_leq_raw(w_s.raw(), u.raw()) && h.hess_length(u).expect("sizes agree") == target
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Root, RootSet};

    fn h(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v).unwrap()
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    fn key_subset() -> WeylSubset {
        let roots: RootSet = [Root::new(2, 3).unwrap(), Root::new(1, 3).unwrap()]
            .into_iter()
            .collect();
        WeylSubset::new(h(&[3, 4, 4, 4]), roots).unwrap()
    }

    #[test]
    fn longest_element_is_fixed_alone() {
        for hf in crate::hessenberg::enumerate_hessenberg(4).unwrap() {
            let w0 = Permutation::longest(4).unwrap();
            assert_eq!(fixed_points_chl(&w0, &hf).unwrap(), vec![w0.clone()]);
        }
    }

    #[test]
    fn key_example_routes_agree() {
        let s = key_subset();
        let w0 = Permutation::longest(4).unwrap();
        let interval = order::bruhat_interval(&p(&[2, 3, 1, 4]), &w0).unwrap();
        assert_eq!(fixed_points_chl(&p(&[2, 3, 1, 4]), s.hessenberg()).unwrap(), interval);
        assert_eq!(fixed_points_interval(&s), interval);
        assert_eq!(fixed_points_cell(&p(&[2, 3, 1, 4]), s.hessenberg()).unwrap(), interval);
    }

    #[test]
    fn full_hessenberg_is_classical() {
        let hf = HessenbergFunction::full(4).unwrap();
        let w0 = Permutation::longest(4).unwrap();
        for w in perm::enumerate(4).unwrap() {
            assert_eq!(
                fixed_points_chl(&w, &hf).unwrap(),
                order::bruhat_interval(&w, &w0).unwrap()
            );
        }
    }

    #[test]
    fn minimal_hessenberg_only_w0() {
        let hf = HessenbergFunction::minimal(4).unwrap();
        let s = WeylSubset::new(hf.clone(), RootSet::empty()).unwrap();
        let w0 = Permutation::longest(4).unwrap();
        assert_eq!(fixed_points_interval(&s), vec![w0.clone()]);
        // e is in the class; u = e · w_0^{-1} = w_0 and u [w_0, w_0] = {e}.
        let e = Permutation::identity(4).unwrap();
        assert_eq!(fixed_points_cell(&e, &hf).unwrap(), vec![e.clone()]);
        assert_eq!(fixed_points_chl(&e, &hf).unwrap(), vec![e]);
    }

    #[test]
    fn cell_matches_chl_small() {
        for n in 1..=4 {
            for hf in crate::hessenberg::enumerate_hessenberg(n).unwrap() {
                for v in perm::enumerate(n).unwrap() {
                    assert_eq!(
                        fixed_points_cell(&v, &hf).unwrap(),
                        fixed_points_chl(&v, &hf).unwrap(),
                        "v={v} h={hf}"
                    );
                }
            }
        }
    }

    #[test]
    fn schubert_examples() {
        let full = HessenbergFunction::full(4).unwrap();
        let bottom = WeylSubset::new(full.clone(), RootSet::empty()).unwrap();
        assert_eq!(fixed_points_schubert(&bottom), vec![Permutation::identity(4).unwrap()]);
        let top = WeylSubset::new(full.clone(), full.phi_plus()).unwrap();
        assert_eq!(fixed_points_schubert(&top).len(), 24);
    }

    #[test]
    fn dimension_examples() {
        let hf = h(&[3, 4, 4, 4]);
        let r = dimension_report(&p(&[2, 3, 1, 4]), &hf).unwrap();
        assert_eq!((r.total, r.cell_dim, r.opp_cell_dim), (5, 2, 3));
        assert_eq!(dimension_report(&p(&[2, 3, 4, 1]), &hf).unwrap().opp_cell_dim, 3);
        assert_eq!(
            dimension_report(&Permutation::identity(4).unwrap(), &hf)
                .unwrap()
                .opp_cell_dim,
            5
        );
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"N_h":5,"cell_dim":2,"opp_cell_dim":3}"#
        );
    }

    #[test]
    fn witness_examples() {
        assert_eq!(reducibility_witness(&key_subset()), Some(p(&[2, 3, 4, 1])));
        for n in 1..=5 {
            let full = HessenbergFunction::full(n).unwrap();
            for s in crate::weyl::enumerate_weyl_subsets(&full) {
                assert_eq!(reducibility_witness(&s), None);
            }
        }
    }
}
