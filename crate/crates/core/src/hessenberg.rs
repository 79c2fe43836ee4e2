//! Hessenberg functions, their root sets and incomparability graphs.

use std::fmt;
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{check_size, Permutation, Root, RootSet};

/// A nondecreasing `h: [n] -> [n]` with `h(i) >= i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HessenbergFunction {
    values: Vec<u8>,
}

impl HessenbergFunction {
    /// Checks the defining conditions and reports the first violation.
    pub fn new(values: &[usize]) -> Result<HessenbergFunction> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyHessenberg);
        }
        check_size(n)?;
        for (p, &value) in values.iter().enumerate() {
            let index = p + 1;
            if value > n {
                return Err(Error::AboveRange { index, value, n });
            }
            if value < index {
                return Err(Error::BelowDiagonal { index, value });
            }
            if let Some(&next_value) = values.get(p + 1) {
                if next_value < value {
                    return Err(Error::NonMonotone {
                        index,
                        value,
                        next_value,
                    });
                }
            }
        }
        Ok(HessenbergFunction {
            values: values.iter().map(|&v| v as u8).collect(),
        })
    }

    /// `h = (n, ..., n)`.
    pub fn full(n: usize) -> Result<HessenbergFunction> {
        HessenbergFunction::new(&vec![n; n])
    }

    /// `h = (1, 2, ..., n)`.
    pub fn minimal(n: usize) -> Result<HessenbergFunction> {
        HessenbergFunction::new(&(1..=n).collect::<Vec<_>>())
    }

    /// `h = (2, 3, ..., n, n)`, the permutohedral case.
    pub fn permutohedral(n: usize) -> Result<HessenbergFunction> {
        HessenbergFunction::new(&(1..=n).map(|i| (i + 1).min(n)).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn values(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize).collect()
    }

    pub fn is_full(&self) -> bool {
        self.values.iter().all(|&v| v as usize == self.n())
    }

    /// `Φ_h⁺ = { t_i - t_j : i < j <= h(i) }`.
    pub fn phi_plus(&self) -> RootSet {
        let mut set = RootSet::empty();
        for i in 1..=self.n() {
            for j in i + 1..=self.at(i) {
                set.insert(Root::new_unchecked(i, j));
            }
        }
        set
    }

    /// Whether `t_i - t_j` (with `i < j`) lies in `Φ_h⁺`.
    pub(crate) fn admits(&self, i: usize, j: usize) -> bool {
        i < j && j <= self.at(i)
    }

    /// `N_h = Σ (h(i) - i)`, the dimension of the regular semisimple Hessenberg variety.
    pub fn total_dimension(&self) -> usize {
        (1..=self.n()).map(|i| self.at(i) - i).sum()
    }

    /// `ℓ_h(w) = |{ i < j : w(i) > w(j), j <= h(i) }|`.
    pub fn hess_length(&self, w: &Permutation) -> Result<usize> {
        if w.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: w.n(),
                right: self.n(),
            });
        }
        let mut count = 0;
        for i in 1..=self.n() {
            for j in i + 1..=self.at(i) {
                if w.at(i) > w.at(j) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    pub fn incomparability_graph(&self) -> IncomparabilityGraph {
        IncomparabilityGraph::new(self.clone())
    }

    /// Deletes vertex `k` from `Γ_h`: row and column `k` of the staircase
    /// `{ (i, j) : i <= h(j) }` are removed and the remaining columns re-read.
    pub fn reduce(&self, k: usize) -> Result<ReducedHessenberg> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        if n == 1 {
            return Err(Error::UnsupportedSize(0));
        }
        let values: Vec<u8> = (1..=n)
            .filter(|&j| j != k)
            .map(|j| {
                let height = self.at(j);
                (if k <= height { height - 1 } else { height }) as u8
            })
            .collect();
        Ok(ReducedHessenberg {
            function: HessenbergFunction { values },
            removed: k,
            n,
        })
    }
}

impl fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{:?}", self.values)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (p, v) in self.values.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for HessenbergFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.values.iter().map(|&v| v as usize))
    }
}

/// `h^(k)` together with the bookkeeping between its vertices `1..n-1`,
/// the original vertices `[n] \ {k}`, and the shifted labels `2..n`
/// (the image of the original vertices under `u_k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHessenberg {
    function: HessenbergFunction,
    removed: usize,
    n: usize,
}

impl ReducedHessenberg {
    pub fn function(&self) -> &HessenbergFunction {
        &self.function
    }

    pub fn removed_vertex(&self) -> usize {
        self.removed
    }

    /// Original vertex for reduced vertex `a` in `1..n-1`.
    pub fn original_vertex(&self, a: usize) -> usize {
        if a < self.removed {
            a
        } else {
            a + 1
        }
    }

    /// Reduced vertex for an original vertex other than the removed one.
    pub fn reduced_vertex(&self, v: usize) -> Option<usize> {
        match v.cmp(&self.removed) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        }
    }

    /// Shifted label in `2..n` for reduced vertex `a`; equals `u_k(original_vertex(a))`.
    pub fn shifted_label(&self, a: usize) -> usize {
        a + 1
    }

    /// `Ψ⁺_{h^(k)}` written in the shifted labels `2..n`.
    pub fn shifted_phi_plus(&self) -> RootSet {
        self.function
            .phi_plus()
            .iter()
            .map(|r| Root::new_unchecked(r.i() + 1, r.j() + 1))
            .collect()
    }

    pub fn original_size(&self) -> usize {
        self.n
    }
}

/// `Γ_h`: vertices `1..n`, an edge `{j, i}` (`j < i`) whenever `i <= h(j)`.
#[derive(Clone, PartialEq, Eq)]
pub struct IncomparabilityGraph {
    h: HessenbergFunction,
    edges: Vec<(u8, u8)>,
    adjacency: Vec<u32>,
}

impl IncomparabilityGraph {
    fn new(h: HessenbergFunction) -> IncomparabilityGraph {
        let n = h.n();
        let mut edges = Vec::new();
        let mut adjacency = vec![0u32; n];
        for j in 1..=n {
            for i in j + 1..=h.at(j) {
                edges.push((j as u8, i as u8));
                adjacency[j - 1] |= 1 << (i - 1);
                adjacency[i - 1] |= 1 << (j - 1);
            }
        }
        IncomparabilityGraph { h, edges, adjacency }
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn hessenberg(&self) -> &HessenbergFunction {
        &self.h
    }

    /// Edges as `(j, i)` with `j < i`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(j, i)| (j as usize, i as usize)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b
            && (1..=self.n()).contains(&a)
            && (1..=self.n()).contains(&b)
            && self.adjacency[a - 1] & (1 << (b - 1)) != 0
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 1..=self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (j, i) in self.edges() {
            let _ = writeln!(out, "  {j} -- {i};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for IncomparabilityGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IncomparabilityGraph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Serialize for IncomparabilityGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IncomparabilityGraph", 2)?;
        st.serialize_field("edges", &self.edges())?;
        st.serialize_field("n", &self.n())?;
        st.end()
    }
}

/// Every Hessenberg function on `[n]`, in lexicographic order of values.
pub fn enumerate_hessenberg(n: usize) -> Result<Vec<HessenbergFunction>> {
    check_size(n)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    extend(n, &mut current, &mut out);
    Ok(out)
}

fn extend(n: usize, current: &mut Vec<u8>, out: &mut Vec<HessenbergFunction>) {
    let i = current.len() + 1;
    if i > n {
        out.push(HessenbergFunction {
            values: current.clone(),
        });
        return;
    }
    let floor = current.last().map_or(i, |&prev| (prev as usize).max(i));
    for v in floor..=n {
        current.push(v as u8);
        extend(n, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    fn h(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v).unwrap()
    }

    fn r(i: usize, j: usize) -> Root {
        Root::new(i, j).unwrap()
    }

    #[test]
    fn validation() {
        assert!(HessenbergFunction::new(&[3, 4, 4, 4]).is_ok());
        assert!(HessenbergFunction::new(&[1, 2, 3, 4, 5]).is_ok());
        assert!(matches!(
            HessenbergFunction::new(&[2, 1, 3]),
            Err(Error::NonMonotone {
                index: 1,
                value: 2,
                next_value: 1
            })
        ));
        assert!(matches!(
            HessenbergFunction::new(&[3, 3, 2]),
            Err(Error::NonMonotone {
                index: 2,
                value: 3,
                next_value: 2
            })
        ));
        assert!(matches!(
            HessenbergFunction::new(&[1, 1, 3]),
            Err(Error::BelowDiagonal { index: 2, value: 1 })
        ));
        assert!(matches!(
            HessenbergFunction::new(&[2, 4, 3]),
            Err(Error::AboveRange {
                index: 2,
                value: 4,
                n: 3
            })
        ));
        assert!(matches!(HessenbergFunction::new(&[]), Err(Error::EmptyHessenberg)));
    }

    #[test]
    fn non_monotone_diagnostic_is_distinct() {
        let err = HessenbergFunction::new(&[3, 2, 3]).unwrap_err();
        assert!(matches!(
            err,
            Error::NonMonotone {
                index: 1,
                value: 3,
                next_value: 2
            }
        ));
    }

    #[test]
    fn phi_plus_examples() {
        let expected = RootSet::positive(4).difference(&[r(1, 4)].into_iter().collect());
        assert_eq!(h(&[3, 4, 4, 4]).phi_plus(), expected);
        assert_eq!(HessenbergFunction::full(5).unwrap().phi_plus(), RootSet::positive(5));
        assert!(HessenbergFunction::minimal(5).unwrap().phi_plus().is_empty());
    }

    #[test]
    fn hess_length_examples() {
        let hf = h(&[3, 4, 4, 4]);
        let w = Permutation::from_one_line(&[2, 3, 4, 1]).unwrap();
        assert_eq!(hf.hess_length(&w).unwrap(), 2);
        assert_eq!(hf.hess_length(&Permutation::identity(4).unwrap()).unwrap(), 0);
        let full = HessenbergFunction::full(4).unwrap();
        for w in perm::enumerate(4).unwrap() {
            assert_eq!(full.hess_length(&w).unwrap(), w.length());
        }
    }

    #[test]
    fn total_dimension_examples() {
        assert_eq!(h(&[3, 4, 4, 4]).total_dimension(), 5);
        assert_eq!(HessenbergFunction::minimal(6).unwrap().total_dimension(), 0);
        assert_eq!(HessenbergFunction::full(6).unwrap().total_dimension(), 15);
    }

    #[test]
    fn graph_examples() {
        assert_eq!(
            h(&[2, 4, 4, 4]).incomparability_graph().edges(),
            vec![(1, 2), (2, 3), (2, 4), (3, 4)]
        );
        assert_eq!(
            h(&[3, 4, 5, 5, 5]).incomparability_graph().edges(),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
        );
        let k5 = HessenbergFunction::full(5).unwrap().incomparability_graph();
        assert_eq!(k5.edge_count(), 10);
        assert!(HessenbergFunction::minimal(3)
            .unwrap()
            .incomparability_graph()
            .edges()
            .is_empty());
    }

    #[test]
    fn enumeration_counts_are_catalan() {
        assert_eq!(enumerate_hessenberg(1).unwrap(), vec![h(&[1])]);
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_hessenberg(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
        let four = enumerate_hessenberg(4).unwrap();
        assert!(four.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dimension_identities() {
        for n in 1..=6 {
            for hf in enumerate_hessenberg(n).unwrap() {
                let d = hf.total_dimension();
                assert_eq!(hf.phi_plus().len(), d);
                assert_eq!(hf.incomparability_graph().edge_count(), d);
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let red = h(&[3, 4, 4, 4]).reduce(3).unwrap();
        // Remaining vertices 1, 2, 4 relabelled 1, 2, 3: edges 1-2 and 2-4.
        assert_eq!(red.function().incomparability_graph().edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(red.original_vertex(3), 4);
        for k in 1..=5 {
            let red = HessenbergFunction::full(5).unwrap().reduce(k).unwrap();
            assert_eq!(red.function(), &HessenbergFunction::full(4).unwrap());
        }
        assert!(h(&[3, 4, 4, 4]).reduce(0).is_err());
        assert!(h(&[3, 4, 4, 4]).reduce(5).is_err());
    }

    #[test]
    fn reduce_deletes_vertex_exhaustive() {
        for n in 2..=5 {
            for hf in enumerate_hessenberg(n).unwrap() {
                let g = hf.incomparability_graph();
                for k in 1..=n {
                    let red = hf.reduce(k).unwrap();
                    let mut expected: Vec<(usize, usize)> = g
                        .edges()
                        .into_iter()
                        .filter(|&(a, b)| a != k && b != k)
                        .map(|(a, b)| (red.reduced_vertex(a).unwrap(), red.reduced_vertex(b).unwrap()))
                        .collect();
                    expected.sort();
                    assert_eq!(red.function().incomparability_graph().edges(), expected);
                }
            }
        }
    }

    #[test]
    fn reduce_matches_root_identity() {
        // Ψ⁺_{h^(k)} = u_k(Φ_h⁺) ∩ Ψ, Ψ = roots on {2..n}.
        for n in 2..=5 {
            for hf in enumerate_hessenberg(n).unwrap() {
                for k in 1..=n {
                    let u = Permutation::u_k(n, k).unwrap();
                    let image: RootSet = hf
                        .phi_plus()
                        .iter()
                        .map(|r| u.apply_to_root(r).unwrap())
                        .filter(|r| r.i() >= 2 && r.j() >= 2)
                        .collect();
                    let red = hf.reduce(k).unwrap();
                    assert_eq!(red.shifted_phi_plus(), image, "h={hf} k={k}");
                    for a in 1..n {
                        assert_eq!(red.shifted_label(a), u.at(red.original_vertex(a)));
                    }
                }
            }
        }
    }

    #[test]
    fn dot_and_json_output() {
        let g = h(&[2, 2]).incomparability_graph();
        assert_eq!(g.to_dot(), "graph G {\n  1;\n  2;\n  1 -- 2;\n}\n");
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"edges":[[1,2]],"n":2}"#);
    }
}
