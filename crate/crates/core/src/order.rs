//! Bruhat order, left weak order, their intervals, and the componentwise
//! order on strictly increasing k-tuples.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::perm::{self, Permutation};

/// A strictly increasing tuple `1 <= i_1 < ... < i_k <= n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KTuple {
    entries: Vec<u8>,
}

impl KTuple {
    pub fn new(entries: &[usize], n: usize) -> Result<KTuple> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let in_range = entries.iter().all(|&e| (1..=n).contains(&e));
        if !increasing || !in_range || n > crate::MAX_N {
            return Err(Error::InvalidTuple {
                entries: entries.to_vec(),
                n,
            });
        }
        Ok(KTuple {
            entries: entries.iter().map(|&e| e as u8).collect(),
        })
    }

    /// `(1, 2, ..., k)`.
    pub fn initial(k: usize) -> KTuple {
        KTuple {
            entries: (1..=k as u8).collect(),
        }
    }

    /// The tuple listing the members of a vertex mask (bit `v-1` for vertex `v`).
    pub(crate) fn from_mask(mask: u32) -> KTuple {
        KTuple {
            entries: (0..32u8).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> Vec<usize> {
        self.entries.iter().map(|&e| e as usize).collect()
    }
}

impl fmt::Debug for KTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (p, e) in self.entries.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for KTuple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(|&e| e as usize))
    }
}

/// `w · i`: the values `w(i_1), ..., w(i_k)` sorted increasingly.
pub fn sort_action(w: &Permutation, t: &KTuple) -> Result<KTuple> {
    if let Some(&e) = t.entries.iter().find(|&&e| e as usize > w.n()) {
        return Err(Error::IndexOutOfRange {
            index: e as usize,
            max: w.n(),
        });
    }
    let mut entries: Vec<u8> = t.entries.iter().map(|&e| w.raw()[e as usize - 1]).collect();
    entries.sort_unstable();
    Ok(KTuple { entries })
}

/// Vertex-mask form of [`sort_action`].
pub(crate) fn sort_action_mask(w: &[u8], mask: u32) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << (w[b] - 1);
    }
    out
}

/// Componentwise comparison `a_l <= b_l` for every `l`.
pub fn ktuple_leq(a: &KTuple, b: &KTuple) -> Result<bool> {
    if a.k() != b.k() {
        return Err(Error::TupleLengthMismatch {
            left: a.k(),
            right: b.k(),
        });
    }
    Ok(a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y))
}

fn same_size(w: &Permutation, v: &Permutation) -> Result<()> {
    if w.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: w.n(),
            right: v.n(),
        });
    }
    Ok(())
}

/// Bruhat order by the tableau criterion: `w·(1..k) <= v·(1..k)` for all `k < n`.
pub fn bruhat_leq(w: &Permutation, v: &Permutation) -> Result<bool> {
    same_size(w, v)?;
    Ok(bruhat_leq_raw(w.raw(), v.raw()))
}

pub(crate) fn bruhat_leq_raw(w: &[u8], v: &[u8]) -> bool {
    let n = w.len();
    let mut a = [0u8; crate::MAX_N];
    let mut b = [0u8; crate::MAX_N];
    for k in 0..n.saturating_sub(1) {
        insert_sorted(&mut a[..=k], w[k]);
        insert_sorted(&mut b[..=k], v[k]);
        if a[..=k].iter().zip(&b[..=k]).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

// `slice[..len-1]` is sorted; place `x` so that the whole slice is sorted.
fn insert_sorted(slice: &mut [u8], x: u8) {
    let mut p = slice.len() - 1;
    while p > 0 && slice[p - 1] > x {
        slice[p] = slice[p - 1];
        p -= 1;
    }
    slice[p] = x;
}

/// Left weak order: `u <=_L v` iff `N(u) ⊆ N(v)`.
pub fn weak_left_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    same_size(u, v)?;
    Ok(u.inversion_set().is_subset(&v.inversion_set()))
}

/// The Bruhat interval `[lo, hi]`, sorted lexicographically; empty when `lo ≰ hi`.
pub fn bruhat_interval(lo: &Permutation, hi: &Permutation) -> Result<Vec<Permutation>> {
    bruhat_interval_with(Exec::default(), lo, hi)
}

pub fn bruhat_interval_with(exec: Exec, lo: &Permutation, hi: &Permutation) -> Result<Vec<Permutation>> {
    same_size(lo, hi)?;
    if !bruhat_leq_raw(lo.raw(), hi.raw()) {
        return Ok(Vec::new());
    }
    let everything = perm::all(lo.n())?;
    Ok(par::filter(exec, &everything, |v| {
        bruhat_leq_raw(lo.raw(), v.raw()) && bruhat_leq_raw(v.raw(), hi.raw())
    }))
}

/// The left weak interval `[lo, hi]_L`, sorted lexicographically.
pub fn weak_interval(lo: &Permutation, hi: &Permutation) -> Result<Vec<Permutation>> {
    same_size(lo, hi)?;
    let (low, high) = (lo.inversion_set(), hi.inversion_set());
    if !low.is_subset(&high) {
        return Ok(Vec::new());
    }
    let everything = perm::all(lo.n())?;
    Ok(par::filter(Exec::default(), &everything, |v| {
        let inv = v.inversion_set();
        low.is_subset(&inv) && inv.is_subset(&high)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    fn t(v: &[usize], n: usize) -> KTuple {
        KTuple::new(v, n).unwrap()
    }

    #[test]
    fn sort_action_examples() {
        let w = p(&[2, 3, 1, 4]);
        assert_eq!(sort_action(&w, &t(&[1, 2, 3], 4)).unwrap(), t(&[1, 2, 3], 4));
        assert_eq!(sort_action(&w, &t(&[1, 2], 4)).unwrap(), t(&[2, 3], 4));
        let e = Permutation::identity(4).unwrap();
        assert_eq!(sort_action(&e, &t(&[2, 4], 4)).unwrap(), t(&[2, 4], 4));
        assert_eq!(sort_action_mask(w.raw(), 0b0011), 0b0110);
    }

    #[test]
    fn ktuple_order_examples() {
        assert!(ktuple_leq(&t(&[1, 2, 3], 4), &t(&[1, 2, 3], 4)).unwrap());
        assert!(ktuple_leq(&t(&[1, 2], 4), &t(&[2, 3], 4)).unwrap());
        assert!(!ktuple_leq(&t(&[1, 4], 4), &t(&[2, 3], 4)).unwrap());
        assert!(matches!(
            ktuple_leq(&t(&[1], 4), &t(&[1, 2], 4)),
            Err(Error::TupleLengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn invalid_tuples() {
        assert!(KTuple::new(&[2, 1], 4).is_err());
        assert!(KTuple::new(&[1, 5], 4).is_err());
        assert!(KTuple::new(&[0, 1], 4).is_err());
        assert!(KTuple::new(&[], 4).is_ok());
    }

    #[test]
    fn bruhat_examples() {
        let w0 = Permutation::longest(4).unwrap();
        for w in perm::enumerate(4).unwrap() {
            assert!(bruhat_leq(&w, &w0).unwrap());
        }
        assert!(bruhat_leq(&p(&[2, 3, 1, 4]), &p(&[2, 3, 4, 1])).unwrap());
        assert!(!bruhat_leq(&p(&[2, 3, 4, 1]), &p(&[2, 3, 1, 4])).unwrap());
        assert!(bruhat_leq(&p(&[1, 2]), &p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn weak_examples() {
        let e = Permutation::identity(4).unwrap();
        for v in perm::enumerate(4).unwrap() {
            assert!(weak_left_leq(&e, &v).unwrap());
        }
        assert!(weak_left_leq(&p(&[2, 3, 1, 4]), &p(&[3, 2, 1, 4])).unwrap());
        assert!(!weak_left_leq(&p(&[3, 2, 1, 4]), &p(&[2, 3, 1, 4])).unwrap());
    }

    #[test]
    fn intervals() {
        let w0 = Permutation::longest(4).unwrap();
        let e = Permutation::identity(4).unwrap();
        assert_eq!(bruhat_interval(&w0, &w0).unwrap(), vec![w0.clone()]);
        assert_eq!(bruhat_interval(&e, &w0).unwrap().len(), 24);
        assert!(bruhat_interval(&w0, &e).unwrap().is_empty());

        let lo = p(&[2, 3, 1, 4]);
        let filtered: Vec<_> = perm::enumerate(4)
            .unwrap()
            .filter(|v| bruhat_leq(&lo, v).unwrap())
            .collect();
        assert_eq!(bruhat_interval(&lo, &w0).unwrap(), filtered);
        assert_eq!(weak_interval(&e, &w0).unwrap().len(), 24);
    }

    #[test]
    fn weak_implies_bruhat_and_w0_reverses_weak() {
        for n in 1..=5 {
            let w0 = Permutation::longest(n).unwrap();
            let all = perm::all(n).unwrap();
            for u in &all {
                for v in &all {
                    let weak = weak_left_leq(u, v).unwrap();
                    if weak {
                        assert!(bruhat_leq(u, v).unwrap(), "{u} <=_L {v}");
                    }
                    assert_eq!(weak, weak_left_leq(&(&w0 * v), &(&w0 * u)).unwrap());
                }
            }
        }
    }

    #[test]
    fn bruhat_is_partial_order() {
        for n in 1..=4 {
            let all = perm::all(n).unwrap();
            for a in &all {
                assert!(bruhat_leq(a, a).unwrap());
                for b in &all {
                    let ab = bruhat_leq(a, b).unwrap();
                    if ab && bruhat_leq(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if ab {
                        for c in &all {
                            if bruhat_leq(b, c).unwrap() {
                                assert!(bruhat_leq(a, c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn interval_serialization() {
        let w0 = Permutation::longest(3).unwrap();
        let lo = p(&[2, 3, 1]);
        let text = serde_json::to_string(&bruhat_interval(&lo, &w0).unwrap()).unwrap();
        assert_eq!(text, "[[2,3,1],[3,2,1]]");
    }
}
