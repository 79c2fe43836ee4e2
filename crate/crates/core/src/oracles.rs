//! Brute-force reference implementations. They share no code path with the
//! production routes they check and may be exponential.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessenberg::{HessenbergFunction, IncomparabilityGraph};
use crate::perm::{self, Permutation, RootSet};
use crate::weyl::{Direction, Orientation, WeylSubset};

pub const MAX_COVER_N: usize = 6;
pub const MAX_PAIRING_SIZE: usize = 6;
pub const MAX_ORIENTATION_EDGES: usize = 20;
pub const MAX_FILTER_N: usize = 7;

/// Bruhat order as the reflexive-transitive closure of its covers:
/// `v` covers `u` iff `v = u · t` for a transposition `t` and `ℓ(v) = ℓ(u) + 1`.
pub struct CoverClosure {
    index: HashMap<Permutation, usize>,
    // above[a] has bit b set iff perms[a] <= perms[b]
    above: Vec<Vec<u64>>,
    covers: Vec<Vec<usize>>,
    perms: Vec<Permutation>,
}

impl CoverClosure {
    pub fn new(n: usize) -> Result<CoverClosure> {
        if n > MAX_COVER_N {
            return Err(Error::LimitExceeded {
                what: "cover-closure size",
                got: n,
                max: MAX_COVER_N,
            });
        }
        let perms = perm::all(n)?;
        let index: HashMap<Permutation, usize> = perms.iter().cloned().enumerate().map(|(a, w)| (w, a)).collect();
        let lengths: Vec<usize> = perms.iter().map(Permutation::length).collect();
        let covers: Vec<Vec<usize>> = perms
            .iter()
            .enumerate()
            .map(|(a, u)| {
                let mut up = Vec::new();
                for x in 0..n {
                    for y in x + 1..n {
                        let mut one_line = u.one_line();
                        one_line.swap(x, y);
                        let v = Permutation::from_one_line(&one_line).unwrap();
                        let b = index[&v];
                        if lengths[b] == lengths[a] + 1 {
                            up.push(b);
                        }
                    }
                }
                up
            })
            .collect();
        let words = perms.len().div_ceil(64);
        let above = (0..perms.len())
            .map(|start| {
                let mut reach = vec![0u64; words];
                let mut queue = VecDeque::from([start]);
                reach[start / 64] |= 1 << (start % 64);
                while let Some(a) = queue.pop_front() {
                    for &b in &covers[a] {
                        if reach[b / 64] & (1 << (b % 64)) == 0 {
                            reach[b / 64] |= 1 << (b % 64);
                            queue.push_back(b);
                        }
                    }
                }
                reach
            })
            .collect();
        Ok(CoverClosure {
            index,
            above,
            covers,
            perms,
        })
    }

    pub fn leq(&self, w: &Permutation, v: &Permutation) -> Result<bool> {
        let a = self.lookup(w)?;
        let b = self.lookup(v)?;
        Ok(self.above[a][b / 64] & (1 << (b % 64)) != 0)
    }

    /// Elements covered by `w`.
    pub fn covered_by(&self, w: &Permutation) -> Result<Vec<Permutation>> {
        let b = self.lookup(w)?;
        let mut below: Vec<Permutation> = (0..self.perms.len())
            .filter(|&a| self.covers[a].contains(&b))
            .map(|a| self.perms[a].clone())
            .collect();
        below.sort_unstable();
        Ok(below)
    }

    fn lookup(&self, w: &Permutation) -> Result<usize> {
        self.index.get(w).copied().ok_or(Error::SizeMismatch {
            left: w.n(),
            right: self.perms[0].n(),
        })
    }
}

/// One-shot cover-closure comparison.
pub fn bruhat_leq_by_covers(w: &Permutation, v: &Permutation) -> Result<bool> {
    if w.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: w.n(),
            right: v.n(),
        });
    }
    CoverClosure::new(w.n())?.leq(w, v)
}

/// `{ w ∈ S_n : N(w) ∩ Φ_h⁺ = S }` by scanning all of `S_n`.
pub fn class_by_filter(s: &RootSet, h: &HessenbergFunction) -> Result<Vec<Permutation>> {
    if h.n() > MAX_FILTER_N {
        return Err(Error::LimitExceeded {
            what: "class filter size",
            got: h.n(),
            max: MAX_FILTER_N,
        });
    }
    let phi = h.phi_plus();
    Ok(perm::enumerate(h.n())?
        .filter(|w| w.inversion_set().intersection(&phi) == *s)
        .collect())
}

/// Path reachability by depth-first search over increasing arcs.
fn reachable_by_search(o: &Orientation, j: usize, i: usize) -> bool {
    if j == i {
        return true;
    }
    if j > i {
        return false;
    }
    (j + 1..=i).any(|next| o.has_arc(j, next) && reachable_by_search(o, next, i))
}

/// Set reachability by trying every pairing of `origins` with `targets`.
pub fn set_reachable_by_enumeration(origins: &[usize], targets: &[usize], o: &Orientation) -> Result<bool> {
    if origins.len() != targets.len() {
        return Err(Error::CardinalityMismatch {
            left: origins.len(),
            right: targets.len(),
        });
    }
    if origins.len() > MAX_PAIRING_SIZE {
        return Err(Error::LimitExceeded {
            what: "pairing size",
            got: origins.len(),
            max: MAX_PAIRING_SIZE,
        });
    }
    for &v in origins.iter().chain(targets) {
        if !(1..=o.n()).contains(&v) {
            return Err(Error::IndexOutOfRange { index: v, max: o.n() });
        }
    }
    let r = origins.len();
    if r == 0 {
        return Ok(true);
    }
    Ok(perm::enumerate(r)?
        .any(|sigma| (0..r).all(|idx| reachable_by_search(o, origins[idx], targets[sigma.at(idx + 1) - 1]))))
}

/// Every orientation of `g` that has no directed cycle, checked by DFS colouring.
pub fn acyclic_orientations_by_enumeration(g: &IncomparabilityGraph) -> Result<Vec<Orientation>> {
    let m = g.edge_count();
    if m > MAX_ORIENTATION_EDGES {
        return Err(Error::LimitExceeded {
            what: "edge count",
            got: m,
            max: MAX_ORIENTATION_EDGES,
        });
    }
    let mut out = Vec::new();
    for bits in 0u32..(1 << m) {
        let directions: Vec<Direction> = (0..m)
            .map(|e| {
                if bits & (1 << e) != 0 {
                    Direction::Left
                } else {
                    Direction::Right
                }
            })
            .collect();
        let o = Orientation::new(g.clone(), directions)?;
        if !has_cycle(&o) {
            out.push(o);
        }
    }
    Ok(out)
}

fn has_cycle(o: &Orientation) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    fn visit(o: &Orientation, v: usize, marks: &mut [Mark]) -> bool {
        marks[v - 1] = Mark::Active;
        for next in 1..=o.n() {
            if o.has_arc(v, next) {
                let mark = marks[next - 1];
                if mark == Mark::Active || (mark == Mark::New && visit(o, next, marks)) {
                    return true;
                }
            }
        }
        marks[v - 1] = Mark::Done;
        false
    }
    let mut marks = vec![Mark::New; o.n()];
    (1..=o.n()).any(|v| marks[v - 1] == Mark::New && visit(o, v, &mut marks))
}

/// Weak-order maximum and minimum of a class, by pairwise inversion-set containment.
pub fn weak_extremes(class: &[Permutation]) -> Option<(Permutation, Permutation)> {
    let inv: Vec<RootSet> = class.iter().map(Permutation::inversion_set).collect();
    let top = (0..class.len()).find(|&a| inv.iter().all(|s| s.is_subset(&inv[a])))?;
    let bottom = (0..class.len()).find(|&a| inv.iter().all(|s| inv[a].is_subset(s)))?;
    Some((class[bottom].clone(), class[top].clone()))
}

/// One failing `(n, h, S, operation)` instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<usize>>,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub subset: Option<RootSet>,
    pub operation: String,
    pub detail: String,
}

impl Discrepancy {
    pub fn new(
        n: usize,
        h: Option<&HessenbergFunction>,
        subset: Option<&WeylSubset>,
        operation: &str,
        detail: String,
    ) -> Discrepancy {
        Discrepancy {
            n,
            h: h.map(HessenbergFunction::values),
            subset: subset.map(|s| *s.roots()),
            operation: operation.to_string(),
            detail,
        }
    }

    /// A single JSON object followed by a newline.
    pub fn to_json_line(&self) -> String {
        let value = serde_json::to_value(self).expect("plain data serializes");
        format!("{value}\n")
    }
}
