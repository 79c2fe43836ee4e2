//! Permutations of `[n]` in one-line notation, roots `t_i - t_j` and
//! inversion sets.
//!
//! All external indices and values are 1-based.

use std::fmt;
use std::ops::Mul;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::MAX_N;

/// The root `t_i - t_j` of `gl_n`, stored as the ordered pair `(i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    i: u8,
    j: u8,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Result<Root> {
        if i == j || i == 0 || j == 0 || i > MAX_N || j > MAX_N {
            return Err(Error::InvalidRoot { i, j });
        }
        Ok(Root { i: i as u8, j: j as u8 })
    }

    pub(crate) fn new_unchecked(i: usize, j: usize) -> Root {
        debug_assert!(i != j && (1..=MAX_N).contains(&i) && (1..=MAX_N).contains(&j));
        Root { i: i as u8, j: j as u8 }
    }

    pub fn i(self) -> usize {
        self.i as usize
    }

    pub fn j(self) -> usize {
        self.j as usize
    }

    pub fn is_positive(self) -> bool {
        self.i < self.j
    }

    pub fn negate(self) -> Root {
        Root { i: self.j, j: self.i }
    }

    /// `(t_i - t_j) + (t_j - t_k) = t_i - t_k`; any other sum is not a root.
    pub fn checked_add(self, other: Root) -> Option<Root> {
        if self.j == other.i && self.i != other.j {
            Some(Root { i: self.i, j: other.j })
        } else if other.j == self.i && other.i != self.j {
            Some(Root { i: other.i, j: self.j })
        } else {
            None
        }
    }

    fn bit(self) -> u128 {
        1u128 << ((self.i as usize - 1) * MAX_N + (self.j as usize - 1))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}-t{}", self.i, self.j)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{} - t{}", self.i, self.j)
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i(), self.j()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [i, j] = <[usize; 2]>::deserialize(d)?;
        Root::new(i, j).map_err(D::Error::custom)
    }
}

/// A set of roots, packed into a bitmask. Iteration is lexicographic in `(i, j)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RootSet(u128);

impl RootSet {
    pub const fn empty() -> RootSet {
        RootSet(0)
    }

    /// All positive roots `t_i - t_j`, `i < j <= n`.
    pub fn positive(n: usize) -> RootSet {
        let mut set = RootSet::empty();
        for i in 1..=n {
            for j in i + 1..=n {
                set.insert(Root::new_unchecked(i, j));
            }
        }
        set
    }

    pub fn insert(&mut self, r: Root) -> bool {
        let fresh = self.0 & r.bit() == 0;
        self.0 |= r.bit();
        fresh
    }

    pub fn remove(&mut self, r: Root) -> bool {
        let present = self.0 & r.bit() != 0;
        self.0 &= !r.bit();
        present
    }

    pub fn contains(&self, r: Root) -> bool {
        self.0 & r.bit() != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Root> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let idx = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(Root::new_unchecked(idx / MAX_N + 1, idx % MAX_N + 1))
        })
    }

    pub fn to_vec(&self) -> Vec<Root> {
        self.iter().collect()
    }
}

impl FromIterator<Root> for RootSet {
    fn from_iter<I: IntoIterator<Item = Root>>(iter: I) -> Self {
        let mut set = RootSet::empty();
        for r in iter {
            set.insert(r);
        }
        set
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for RootSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<Root>::deserialize(d)?.into_iter().collect())
    }
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedSize(n))
    }
}

/// A permutation `w` of `[n]`, stored as its one-line notation `[w(1), ..., w(n)]`.
///
/// The derived ordering is lexicographic on the one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn from_one_line(values: &[usize]) -> Result<Permutation> {
        let n = values.len();
        check_size(n)?;
        let mut seen = 0u32;
        for &v in values {
            if v == 0 || v > n || seen & (1 << v) != 0 {
                return Err(Error::NotAPermutation {
                    n,
                    values: values.to_vec(),
                });
            }
            seen |= 1 << v;
        }
        Ok(Permutation {
            one_line: values.iter().map(|&v| v as u8).collect(),
        })
    }

    pub(crate) fn from_raw(one_line: Vec<u8>) -> Permutation {
        debug_assert!(Permutation::from_one_line(&one_line.iter().map(|&v| v as usize).collect::<Vec<_>>()).is_ok());
        Permutation { one_line }
    }

    pub fn identity(n: usize) -> Result<Permutation> {
        check_size(n)?;
        Ok(Permutation::from_raw((1..=n as u8).collect()))
    }

    /// `w_0 = [n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Result<Permutation> {
        check_size(n)?;
        Ok(Permutation::from_raw((1..=n as u8).rev().collect()))
    }

    /// `u_k = s_1 s_2 ... s_{k-1} = [2, 3, ..., k, 1, k+1, ..., n]`; `u_1` is the identity.
    pub fn u_k(n: usize, k: usize) -> Result<Permutation> {
        check_size(n)?;
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        let mut one_line: Vec<u8> = (1..=n as u8).collect();
        one_line[..k].rotate_left(1);
        Ok(Permutation::from_raw(one_line))
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Permutation> {
        check_size(n)?;
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut one_line: Vec<u8> = (1..=n as u8).collect();
        one_line.swap(i - 1, i);
        Ok(Permutation::from_raw(one_line))
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    ///
    /// Panics if `i` is out of range.
    pub fn at(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.one_line.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.one_line
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(p, &v)| v as usize == p + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (p, &v) in self.one_line.iter().enumerate() {
            inv[v as usize - 1] = (p + 1) as u8;
        }
        Permutation::from_raw(inv)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation::from_raw(
            other.one_line.iter().map(|&x| self.one_line[x as usize - 1]).collect(),
        ))
    }

    /// `w(t_i - t_j) = t_{w(i)} - t_{w(j)}`.
    pub fn apply_to_root(&self, r: Root) -> Result<Root> {
        let max = self.n();
        for index in [r.i(), r.j()] {
            if index > max {
                return Err(Error::IndexOutOfRange { index, max });
            }
        }
        Ok(Root::new_unchecked(self.at(r.i()), self.at(r.j())))
    }

    /// `N(w) = { t_i - t_j : i < j, w(i) > w(j) }`.
    pub fn inversion_set(&self) -> RootSet {
        let w = &self.one_line;
        let mut set = RootSet::empty();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    set.insert(Root::new_unchecked(i + 1, j + 1));
                }
            }
        }
        set
    }

    /// `ℓ(w)`, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    /// Position of the value `v`, i.e. `w^{-1}(v)`.
    pub fn position_of(&self, v: usize) -> usize {
        self.one_line
            .iter()
            .position(|&x| x as usize == v)
            .map(|p| p + 1)
            .unwrap_or_else(|| panic!("value {v} not in permutation of size {}", self.n()))
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Composition; panics on a size mismatch. Use [`Permutation::compose`]
    /// for a fallible version.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation sizes must agree")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (p, v) in self.one_line.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.one_line.iter().map(|&v| v as usize))
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&values).map_err(D::Error::custom)
    }
}

/// All permutations of `[n]` in lexicographic order of their one-line notation.
pub struct Permutations {
    next: Option<Vec<u8>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_raw(current))
    }
}

fn next_lexicographic(a: &mut [u8]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let pivot = i - 1;
    let j = (i..a.len()).rev().find(|&j| a[j] > a[pivot]).unwrap();
    a.swap(pivot, j);
    a[i..].reverse();
    true
}

pub fn enumerate(n: usize) -> Result<Permutations> {
    check_size(n)?;
    Ok(Permutations {
        next: Some((1..=n as u8).collect()),
    })
}

/// [`enumerate`] collected into a vector.
pub fn all(n: usize) -> Result<Vec<Permutation>> {
    Ok(enumerate(n)?.collect())
}
