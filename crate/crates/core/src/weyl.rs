//! Subsets of Weyl type inside `Φ_h⁺`, the partition of `S_n` they induce,
//! and acyclic orientations of the incomparability graph.
//!
//! For `S` of Weyl type the class `W(S, h) = { w : N(w) ∩ Φ_h⁺ = S }` is the
//! left weak interval `[z_S, w_S]_L`. The maximum `w_S` is read off the
//! orientation `o_h(S)` by repeatedly removing the largest source; the
//! minimum is `z_S = w_0 · w_{S̄}` for the complement `S̄ = Φ_h⁺ \ S`.

use std::collections::{HashSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Serialize, Serializer};

use crate::error::{ClosureViolation, Error, Result};
use crate::hessenberg::{HessenbergFunction, IncomparabilityGraph, ReducedHessenberg};
use crate::perm::{self, Permutation, Root, RootSet};

/// Finds a pair `α, β` of `roots` with `α + β ∈ Φ_h⁺` but `α + β ∉ roots`.
fn closure_gap(roots: &RootSet, h: &HessenbergFunction) -> Option<(Root, Root, Root)> {
    for a in roots.iter() {
        for b in roots.iter().filter(|b| b.i() == a.j()) {
            if h.admits(a.i(), b.j()) {
                let sum = Root::new_unchecked(a.i(), b.j());
                if !roots.contains(sum) {
                    return Some((a, b, sum));
                }
            }
        }
    }
    None
}

fn check_inside(roots: &RootSet, h: &HessenbergFunction) -> Result<RootSet> {
    let phi = h.phi_plus();
    match roots.iter().find(|r| !phi.contains(*r)) {
        Some(r) => Err(Error::RootOutsidePhiH(r)),
        None => Ok(phi),
    }
}

/// The first closure failure of `roots` or of its complement in `Φ_h⁺`.
pub fn closure_violation(roots: &RootSet, h: &HessenbergFunction) -> Result<Option<ClosureViolation>> {
    let phi = check_inside(roots, h)?;
    let violation = |set: &RootSet, in_subset| {
        closure_gap(set, h).map(|(first, second, sum)| ClosureViolation {
            first,
            second,
            sum,
            in_subset,
        })
    };
    Ok(violation(roots, true).or_else(|| violation(&phi.difference(roots), false)))
}

/// Whether both `roots` and `Φ_h⁺ \ roots` are `Φ_h⁺`-closed.
///
/// Roots outside `Φ_h⁺` are an error rather than `false`.
pub fn is_weyl_type(roots: &RootSet, h: &HessenbergFunction) -> Result<bool> {
    Ok(closure_violation(roots, h)?.is_none())
}

/// A subset of Weyl type with respect to `h`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylSubset {
    h: HessenbergFunction,
    roots: RootSet,
}

impl WeylSubset {
    pub fn new(h: HessenbergFunction, roots: RootSet) -> Result<WeylSubset> {
        match closure_violation(&roots, &h)? {
            Some(v) => Err(Error::NotWeylType(v)),
            None => Ok(WeylSubset { h, roots }),
        }
    }

    /// `N(w) ∩ Φ_h⁺`.
    pub fn of_permutation(w: &Permutation, h: &HessenbergFunction) -> Result<WeylSubset> {
        if w.n() != h.n() {
            return Err(Error::SizeMismatch {
                left: w.n(),
                right: h.n(),
            });
        }
        let roots = w.inversion_set().intersection(&h.phi_plus());
        debug_assert!(is_weyl_type(&roots, h).unwrap());
        Ok(WeylSubset { h: h.clone(), roots })
    }

    pub fn hessenberg(&self) -> &HessenbergFunction {
        &self.h
    }

    pub fn roots(&self) -> &RootSet {
        &self.roots
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `Φ_h⁺ \ S`, again of Weyl type.
    pub fn complement(&self) -> WeylSubset {
        WeylSubset {
            h: self.h.clone(),
            roots: self.h.phi_plus().difference(&self.roots),
        }
    }

    /// `o_h(S)`: edge `{j, i}` with `j < i` points `i → j` iff `t_j - t_i ∈ S`.
    pub fn orientation(&self) -> Orientation {
        let graph = self.h.incomparability_graph();
        let directions = graph
            .edges()
            .into_iter()
            .map(|(j, i)| {
                if self.roots.contains(Root::new_unchecked(j, i)) {
                    Direction::Left
                } else {
                    Direction::Right
                }
            })
            .collect();
        Orientation::build(graph, directions)
    }

    /// The weak-order maximum `w_S` of the class, by peeling off largest sources.
    pub fn w_max(&self) -> Permutation {
        let o = self.orientation();
        let n = self.n();
        let mut alive: u32 = (1u32 << n) - 1;
        let mut one_line = vec![0u8; n];
        for value in 1..=n {
            let sources = o.sources_within(alive);
            debug_assert!(sources != 0, "acyclic orientations always have a source");
            let v = 31 - sources.leading_zeros() as usize;
            one_line[v] = value as u8;
            alive &= !(1 << v);
        }
        Permutation::from_raw(one_line)
    }

    /// The weak-order minimum `z_S = w_0 · w_{Φ_h⁺ \ S}`.
    pub fn z_min(&self) -> Permutation {
        let w0 = Permutation::longest(self.n()).expect("size already validated");
        let z = &w0 * &self.complement().w_max();
        debug_assert_eq!(z.inversion_set().intersection(&self.h.phi_plus()), self.roots);
        debug_assert!(descent_roots_within(&z, &self.h));
        z
    }

    /// `W(S, h)`, sorted lexicographically.
    ///
    /// Walks upward from `z_S` by left multiplication with simple reflections,
    /// staying below `w_S` in the weak order.
    pub fn class(&self) -> Vec<Permutation> {
        let bound = self.w_max().inversion_set();
        let start = self.z_min();
        let mut seen: HashSet<Permutation> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let raw = v.raw();
            for value in 1..v.n() as u8 {
                let p = raw.iter().position(|&x| x == value).unwrap();
                let q = raw.iter().position(|&x| x == value + 1).unwrap();
                if p > q {
                    continue;
                }
                let mut next = raw.to_vec();
                next.swap(p, q);
                let next = Permutation::from_raw(next);
                if next.inversion_set().is_subset(&bound) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut class: Vec<Permutation> = seen.into_iter().collect();
        class.sort_unstable();
        class
    }

    /// `S' = u_k(S) ∩ Ψ` on the graph with vertex `k` deleted.
    pub fn induced(&self, k: usize) -> Result<InducedSubset> {
        let reduced = self.h.reduce(k)?;
        let u = Permutation::u_k(self.n(), k)?;
        let roots: RootSet = self
            .roots
            .iter()
            .map(|r| u.apply_to_root(r).expect("root inside [n]"))
            .filter(|r| r.i() >= 2 && r.j() >= 2)
            .map(|r| Root::new_unchecked(r.i() - 1, r.j() - 1))
            .collect();
        let subset = WeylSubset::new(reduced.function().clone(), roots)
            .map_err(|e| Error::Inconsistent(format!("induced subset of {self:?} at {k}: {e}")))?;
        Ok(InducedSubset {
            reduced,
            subset,
            u_k: u,
        })
    }

    fn sort_key(&self) -> Vec<Root> {
        self.roots.to_vec()
    }
}

impl fmt::Debug for WeylSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} ⊆ Φ⁺ of {}", self.roots, self.h)
    }
}

impl Serialize for WeylSubset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.roots.serialize(s)
    }
}

/// The subset `S'` of Weyl type for `h^(k)` induced by deleting vertex `k`.
#[derive(Debug, Clone)]
pub struct InducedSubset {
    reduced: ReducedHessenberg,
    subset: WeylSubset,
    u_k: Permutation,
}

impl InducedSubset {
    pub fn reduced(&self) -> &ReducedHessenberg {
        &self.reduced
    }

    pub fn subset(&self) -> &WeylSubset {
        &self.subset
    }

    /// Embeds `y ∈ S_{n-1}` as an element of `<s_2, ..., s_{n-1}>` (fixing 1,
    /// acting on the shifted labels `2..n`) and returns `y · u_k`.
    pub fn lift(&self, y: &Permutation) -> Result<Permutation> {
        let n = self.u_k.n();
        if y.n() + 1 != n {
            return Err(Error::SizeMismatch {
                left: y.n(),
                right: n - 1,
            });
        }
        let mut shifted = vec![1u8];
        shifted.extend(y.raw().iter().map(|&v| v + 1));
        Ok(&Permutation::from_raw(shifted) * &self.u_k)
    }
}

/// `z^{-1}(-Δ) ∩ Φ⁺ ⊆ Φ_h⁺`: every positive root `t_{z⁻¹(a+1)} - t_{z⁻¹(a)}`
/// lies in `Φ_h⁺`. Among the elements of a class only `z_S` satisfies this.
pub fn descent_roots_within(z: &Permutation, h: &HessenbergFunction) -> bool {
    let inv = z.inverse();
    (1..z.n()).all(|a| {
        let (i, j) = (inv.at(a + 1), inv.at(a));
        i > j || h.admits(i, j)
    })
}

pub fn weyl_subset_of(w: &Permutation, h: &HessenbergFunction) -> Result<WeylSubset> {
    WeylSubset::of_permutation(w, h)
}

/// `W_h`, obtained by collecting `N(w) ∩ Φ_h⁺` over all of `S_n`; sorted by root list.
pub fn enumerate_weyl_subsets(h: &HessenbergFunction) -> Vec<WeylSubset> {
    let phi = h.phi_plus();
    let distinct: HashSet<RootSet> = perm::enumerate(h.n())
        .expect("size already validated")
        .map(|w| w.inversion_set().intersection(&phi))
        .collect();
    let mut subsets: Vec<WeylSubset> = distinct
        .into_iter()
        .map(|roots| WeylSubset { h: h.clone(), roots })
        .collect();
    subsets.sort_by_cached_key(WeylSubset::sort_key);
    subsets
}

/// Inverse of [`WeylSubset::orientation`]: the roots of left-pointing edges.
pub fn subset_of_orientation(o: &Orientation) -> Result<WeylSubset> {
    if !o.is_acyclic() {
        return Err(Error::CyclicOrientation);
    }
    let roots = o
        .graph
        .edges()
        .into_iter()
        .zip(&o.directions)
        .filter(|(_, &d)| d == Direction::Left)
        .map(|((j, i), _)| Root::new_unchecked(j, i))
        .collect();
    WeylSubset::new(o.graph.hessenberg().clone(), roots)
}

/// Direction of an edge `{j, i}` with `j < i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `i → j`
    Left,
    /// `j → i`
    Right,
}

/// An orientation of every edge of an incomparability graph. Not necessarily acyclic.
#[derive(Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: IncomparabilityGraph,
    directions: Vec<Direction>,
    out: Vec<u32>,
    inc: Vec<u32>,
}

impl Orientation {
    /// `directions` follows the order of [`IncomparabilityGraph::edges`].
    pub fn new(graph: IncomparabilityGraph, directions: Vec<Direction>) -> Result<Orientation> {
        if directions.len() != graph.edge_count() {
            return Err(Error::DirectionCount {
                expected: graph.edge_count(),
                got: directions.len(),
            });
        }
        Ok(Orientation::build(graph, directions))
    }

    fn build(graph: IncomparabilityGraph, directions: Vec<Direction>) -> Orientation {
        let n = graph.n();
        let mut out = vec![0u32; n];
        let mut inc = vec![0u32; n];
        for ((j, i), d) in graph.edges().into_iter().zip(&directions) {
            let (tail, head) = match d {
                Direction::Left => (i, j),
                Direction::Right => (j, i),
            };
            out[tail - 1] |= 1 << (head - 1);
            inc[head - 1] |= 1 << (tail - 1);
        }
        Orientation {
            graph,
            directions,
            out,
            inc,
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &IncomparabilityGraph {
        &self.graph
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    /// Arcs `(tail, head)` in edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .zip(&self.directions)
            .map(|((j, i), d)| match d {
                Direction::Left => (i, j),
                Direction::Right => (j, i),
            })
            .collect()
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        (1..=self.n()).contains(&tail) && (1..=self.n()).contains(&head) && self.out[tail - 1] & (1 << (head - 1)) != 0
    }

    pub(crate) fn out_mask(&self, v: usize) -> u32 {
        self.out[v - 1]
    }

    /// Vertices in `alive` with no incoming arc from another vertex in `alive`.
    pub(crate) fn sources_within(&self, alive: u32) -> u32 {
        let mut mask = 0;
        let mut rest = alive;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.inc[b] & alive == 0 {
                mask |= 1 << b;
            }
        }
        mask
    }

    pub fn is_acyclic(&self) -> bool {
        let mut alive: u32 = (1u32 << self.n()) - 1;
        while alive != 0 {
            let sources = self.sources_within(alive);
            if sources == 0 {
                return false;
            }
            alive &= !sources;
        }
        true
    }

    /// DOT digraph with vertices `1..n` and arcs in edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 1..=self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (a, b) in self.arcs() {
            let _ = writeln!(out, "  {a} -> {b};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Orientation")
            .field("n", &self.n())
            .field("arcs", &self.arcs())
            .finish()
    }
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Orientation", 2)?;
        st.serialize_field("arcs", &self.arcs())?;
        st.serialize_field("n", &self.n())?;
        st.end()
    }
}
