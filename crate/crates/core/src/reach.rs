//! Reachability along increasing directed paths in an oriented
//! incomparability graph, sources, and the index sets `J_{w,h,k}`.
//!
//! A path `j = v_0 < v_1 < ... < v_m = i` only uses arcs pointing to a
//! larger vertex, so reachability is computed once per orientation as a
//! transitive-closure bit table over the rightward arcs.

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergFunction;
use crate::order::KTuple;
use crate::perm::Permutation;
use crate::weyl::{Orientation, WeylSubset};

/// Bit table: `rows[j-1]` has bit `i-1` set iff `i` is reachable from `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityTable {
    rows: Vec<u32>,
}

impl ReachabilityTable {
    pub fn new(o: &Orientation) -> ReachabilityTable {
        let n = o.n();
        let mut rows = vec![0u32; n];
        for j in (1..=n).rev() {
            let forward = o.out_mask(j) & !((1u32 << j) - 1);
            let mut row = 1u32 << (j - 1);
            let mut rest = forward;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                row |= rows[b];
            }
            rows[j - 1] = row;
        }
        ReachabilityTable { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, v: usize) -> Result<()> {
        if (1..=self.n()).contains(&v) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v,
                max: self.n(),
            })
        }
    }

    /// Whether `i` is reachable from `j`; always `false` when `j > i`.
    pub fn is_reachable(&self, j: usize, i: usize) -> Result<bool> {
        self.check(j)?;
        self.check(i)?;
        Ok(self.reaches(j, i))
    }

    pub(crate) fn reaches(&self, j: usize, i: usize) -> bool {
        self.rows[j - 1] & (1 << (i - 1)) != 0
    }

    /// Whether the vertex set `targets` is reachable from `origins`
    /// (equal-size masks): a perfect matching pairing each origin with a
    /// target reachable from it.
    pub(crate) fn set_reachable_mask(&self, origins: u32, targets: u32) -> bool {
        debug_assert_eq!(origins.count_ones(), targets.count_ones());
        let origin_list: Vec<usize> = bits(origins).collect();
        // matched_to[target bit] = index into origin_list
        let mut matched_to = [usize::MAX; 32];
        for (idx, &b) in origin_list.iter().enumerate() {
            let mut visited = 0u32;
            if !self.augment(idx, b, targets, &origin_list, &mut matched_to, &mut visited) {
                return false;
            }
        }
        true
    }

    fn augment(
        &self,
        idx: usize,
        origin: usize,
        targets: u32,
        origin_list: &[usize],
        matched_to: &mut [usize; 32],
        visited: &mut u32,
    ) -> bool {
        let candidates = self.rows[origin] & targets & !*visited;
        for t in bits(candidates) {
            *visited |= 1 << t;
            let holder = matched_to[t];
            if holder == usize::MAX
                || self.augment(holder, origin_list[holder], targets, origin_list, matched_to, visited)
            {
                matched_to[t] = idx;
                return true;
            }
        }
        false
    }
}

/// Bit positions (0-based) of `mask`, ascending.
pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(b)
    })
}

fn vertex_mask(vertices: &[usize], n: usize) -> Result<u32> {
    let mut mask = 0u32;
    for &v in vertices {
        if !(1..=n).contains(&v) {
            return Err(Error::IndexOutOfRange { index: v, max: n });
        }
        mask |= 1 << (v - 1);
    }
    Ok(mask)
}

pub fn is_reachable(j: usize, i: usize, o: &Orientation) -> Result<bool> {
    ReachabilityTable::new(o).is_reachable(j, i)
}

/// Vertices whose incident edges all point outward, ascending.
pub fn sources(o: &Orientation) -> Result<Vec<usize>> {
    if !o.is_acyclic() {
        return Err(Error::CyclicOrientation);
    }
    let all = (1u32 << o.n()) - 1;
    Ok(bits(o.sources_within(all)).map(|b| b + 1).collect())
}

pub fn largest_source(o: &Orientation) -> Result<usize> {
    Ok(*sources(o)?.last().expect("acyclic orientations always have a source"))
}

/// Whether the set `targets` is reachable from `origins` with respect to `o`.
///
/// Duplicate entries are collapsed before the sizes are compared.
pub fn set_reachable(origins: &[usize], targets: &[usize], o: &Orientation) -> Result<bool> {
    let from = vertex_mask(origins, o.n())?;
    let to = vertex_mask(targets, o.n())?;
    if from.count_ones() != to.count_ones() {
        return Err(Error::CardinalityMismatch {
            left: from.count_ones() as usize,
            right: to.count_ones() as usize,
        });
    }
    Ok(ReachabilityTable::new(o).set_reachable_mask(from, to))
}

/// All `k`-subsets of `[n]` as masks, in lexicographic order of their sorted entries.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, n: usize, left: usize, acc: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for v in start..=n + 1 - left {
            rec(v + 1, n, left - 1, acc | 1 << (v - 1), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, 0, &mut out);
    }
    out
}

/// Masks of `J_{w,h,k}` given the reachability table of `o_h(N(w) ∩ Φ_h⁺)`.
pub(crate) fn j_set_masks(table: &ReachabilityTable, k: usize) -> Vec<u32> {
    let initial = (1u32 << k) - 1;
    k_subsets(table.n(), k)
        .into_iter()
        .filter(|&m| table.set_reachable_mask(initial, m))
        .collect()
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// `J_{w,h,k}`: increasing `k`-tuples whose entries form a set reachable
/// from `{1, ..., k}` under `o_h(N(w) ∩ Φ_h⁺)`. Sorted lexicographically.
pub fn j_set(w: &Permutation, h: &HessenbergFunction, k: usize) -> Result<Vec<KTuple>> {
    let s = WeylSubset::of_permutation(w, h)?;
    check_k(k, w.n())?;
    let table = ReachabilityTable::new(&s.orientation());
    Ok(j_set_masks(&table, k).into_iter().map(KTuple::from_mask).collect())
}

/// `{ i : w_S · i >= w_S · (1..k) }` for `S = N(w) ∩ Φ_h⁺`; equal to [`j_set`].
pub fn j_set_by_maximal_element(w: &Permutation, h: &HessenbergFunction, k: usize) -> Result<Vec<KTuple>> {
    let s = WeylSubset::of_permutation(w, h)?;
    check_k(k, w.n())?;
    let w_s = s.w_max();
    let floor = crate::order::sort_action(&w_s, &KTuple::initial(k))?;
    let mut out = Vec::new();
    for m in k_subsets(w.n(), k) {
        let t = KTuple::from_mask(m);
        if crate::order::ktuple_leq(&floor, &crate::order::sort_action(&w_s, &t)?)? {
            out.push(t);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Root, RootSet};
    use crate::weyl::Direction;

    fn key_orientation() -> Orientation {
        let h = HessenbergFunction::new(&[3, 4, 4, 4]).unwrap();
        let roots: RootSet = [Root::new(2, 3).unwrap(), Root::new(1, 3).unwrap()]
            .into_iter()
            .collect();
        WeylSubset::new(h, roots).unwrap().orientation()
    }

    #[test]
    fn reachability_examples() {
        let o = key_orientation();
        for j in 1..=4 {
            assert!(is_reachable(j, j, &o).unwrap());
        }
        assert!(is_reachable(3, 4, &o).unwrap());
        assert!(!is_reachable(1, 3, &o).unwrap());
        assert!(is_reachable(1, 4, &o).unwrap()); // 1 -> 2 -> 4
        assert!(!is_reachable(4, 1, &o).unwrap());
        assert!(is_reachable(0, 1, &o).is_err());
        assert!(is_reachable(1, 5, &o).is_err());
    }

    #[test]
    fn source_examples() {
        let o = key_orientation();
        assert_eq!(sources(&o).unwrap(), vec![3]);
        assert_eq!(largest_source(&o).unwrap(), 3);

        // (2,2,3): edge 1-2 only; vertex 3 is isolated.
        let g = HessenbergFunction::new(&[2, 2, 3]).unwrap().incomparability_graph();
        let right = Orientation::new(g.clone(), vec![Direction::Right]).unwrap();
        assert_eq!(sources(&right).unwrap(), vec![1, 3]);

        let h = HessenbergFunction::new(&[3, 3, 3]).unwrap().incomparability_graph();
        // 1 -> 2 -> 3 -> 1
        let cyclic = Orientation::new(h, vec![Direction::Right, Direction::Left, Direction::Right]).unwrap();
        assert!(matches!(sources(&cyclic), Err(Error::CyclicOrientation)));
    }

    #[test]
    fn set_reachability_examples() {
        let o = key_orientation();
        assert!(set_reachable(&[1, 2], &[2, 4], &o).unwrap());
        assert!(set_reachable(&[2, 3], &[2, 3], &o).unwrap());
        assert!(set_reachable(&[], &[], &o).unwrap());
        assert!(!set_reachable(&[1], &[3], &o).unwrap());
        assert!(matches!(
            set_reachable(&[1], &[2, 3], &o),
            Err(Error::CardinalityMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn matching_needs_reassignment() {
        // 1 -> 2, 1 -> 3, 2 -> 3
        let g = HessenbergFunction::new(&[3, 3, 3]).unwrap().incomparability_graph();
        let o = Orientation::new(g, vec![Direction::Right; 3]).unwrap();
        assert!(set_reachable(&[1, 2], &[2, 3], &o).unwrap());
        assert!(set_reachable(&[1, 3], &[2, 3], &o).unwrap());
        assert!(!set_reachable(&[2, 3], &[1, 3], &o).unwrap());
    }

    #[test]
    fn k_subsets_are_lexicographic() {
        let subsets: Vec<Vec<usize>> = k_subsets(4, 2)
            .into_iter()
            .map(|m| KTuple::from_mask(m).entries())
            .collect();
        assert_eq!(
            subsets,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(k_subsets(5, 0), vec![0]);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn j_set_examples() {
        let h = HessenbergFunction::new(&[3, 4, 4, 4]).unwrap();
        let w = Permutation::from_one_line(&[2, 3, 1, 4]).unwrap();
        for k in 1..4 {
            let j = j_set(&w, &h, k).unwrap();
            assert!(j.contains(&KTuple::initial(k)));
            assert!(j.windows(2).all(|p| p[0] < p[1]));
            assert_eq!(j, j_set_by_maximal_element(&w, &h, k).unwrap());
        }
        assert!(j_set(&w, &h, 0).is_err());
        assert!(j_set(&w, &h, 4).is_err());
    }

    #[test]
    fn j_set_full_hessenberg_is_bruhat_data() {
        let h = HessenbergFunction::full(4).unwrap();
        for w in crate::perm::enumerate(4).unwrap() {
            for k in 1..4 {
                let floor = crate::order::sort_action(&w, &KTuple::initial(k)).unwrap();
                let expected: Vec<KTuple> = k_subsets(4, k)
                    .into_iter()
                    .map(KTuple::from_mask)
                    .filter(|t| crate::order::ktuple_leq(&floor, &crate::order::sort_action(&w, t).unwrap()).unwrap())
                    .collect();
                assert_eq!(j_set(&w, &h, k).unwrap(), expected);
            }
        }
    }

    #[test]
    fn j_set_serialization() {
        let h = HessenbergFunction::full(3).unwrap();
        let w = Permutation::longest(3).unwrap();
        // every arc points left, so nothing is reachable from 1 except itself
        assert_eq!(serde_json::to_string(&j_set(&w, &h, 1).unwrap()).unwrap(), "[[1]]");
    }
}
