//! Signed indices, sorted index sets and shuffle signs.

use std::fmt;

use crate::error::{Error, Result};

/// An index in `[±n] = {-n, …, -1, 1, …, n}`.
///
/// Positions follow the convention that `-i` stands for `2n + 1 - i`, so
/// `1..=n` occupy positions `1..=n` and `-n..=-1` occupy `n+1..=2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedIndex {
    value: i32,
    n: usize,
}

impl SignedIndex {
    pub fn new(value: i32, n: usize) -> Result<Self> {
        if value == 0 || value.unsigned_abs() as usize > n {
            return Err(Error::SignedIndexOutOfRange {
                value: value.into(),
                n,
            });
        }
        Ok(SignedIndex { value, n })
    }

    /// The signed index sitting at 1-based `position` in `[1..=2n]`.
    pub fn from_position(position: usize, n: usize) -> Result<Self> {
        if position == 0 || position > 2 * n {
            return Err(Error::SignedIndexOutOfRange {
                value: position as i64,
                n,
            });
        }
        let value = if position <= n {
            position as i32
        } else {
            position as i32 - (2 * n + 1) as i32
        };
        Ok(SignedIndex { value, n })
    }

    pub fn value(self) -> i32 {
        self.value
    }

    pub fn ambient(self) -> usize {
        self.n
    }

    /// 1-based position in `[1..=2n]`.
    pub fn position(self) -> usize {
        if self.value > 0 {
            self.value as usize
        } else {
            (2 * self.n as i32 + 1 + self.value) as usize
        }
    }

    pub fn negate(self) -> Self {
        SignedIndex {
            value: -self.value,
            n: self.n,
        }
    }

    /// All of `[±n]` in position order: `1, …, n, -n, …, -1`.
    pub fn all(n: usize) -> impl Iterator<Item = SignedIndex> {
        (1..=2 * n).map(move |p| SignedIndex::from_position(p, n).expect("in range"))
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A strictly increasing list of indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet {
    elements: Vec<usize>,
}

impl IndexSet {
    /// Builds a set from arbitrary input, sorting and rejecting duplicates.
    pub fn new(mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSplit(format!(
                "repeated element in {elements:?}"
            )));
        }
        Ok(IndexSet { elements })
    }

    /// `{1, …, m}`.
    pub fn range(m: usize) -> Self {
        IndexSet {
            elements: (1..=m).collect(),
        }
    }

    pub fn empty() -> Self {
        IndexSet::default()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// Complement inside `universe`.
    pub fn complement_in(&self, universe: &IndexSet) -> Result<IndexSet> {
        if !self.is_subset_of(universe) {
            return Err(Error::NotSubset);
        }
        Ok(IndexSet {
            elements: universe
                .elements
                .iter()
                .copied()
                .filter(|&x| !self.contains(x))
                .collect(),
        })
    }

    /// All subsets of `self` with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<IndexSet> {
        fn go(src: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if cur.len() == k {
                out.push(IndexSet {
                    elements: cur.clone(),
                });
                return;
            }
            let need = k - cur.len();
            for idx in start..=src.len().saturating_sub(need) {
                if idx >= src.len() {
                    break;
                }
                cur.push(src[idx]);
                go(src, k, idx + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k <= self.len() {
            go(&self.elements, k, 0, &mut Vec::with_capacity(k), &mut out);
        }
        out
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.elements.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Number of inversions of `seq`, by merge sort.
pub fn inversions<T: Ord + Clone>(seq: &[T]) -> usize {
    fn sort_count<T: Ord + Clone>(v: &mut Vec<T>) -> usize {
        if v.len() < 2 {
            return 0;
        }
        let mut right = v.split_off(v.len() / 2);
        let mut count = sort_count(v) + sort_count(&mut right);
        let left = std::mem::take(v);
        let (mut i, mut j) = (0, 0);
        while i < left.len() && j < right.len() {
            if right[j] < left[i] {
                count += left.len() - i;
                v.push(right[j].clone());
                j += 1;
            } else {
                v.push(left[i].clone());
                i += 1;
            }
        }
        v.extend_from_slice(&left[i..]);
        v.extend_from_slice(&right[j..]);
        count
    }
    sort_count(&mut seq.to_vec())
}

/// `+1` or `-1` according to the parity of the permutation `seq`.
pub fn permutation_sign<T: Ord + Clone>(seq: &[T]) -> i32 {
    if inversions(seq).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of the permutation taking `K` (sorted) to the concatenation `(I, J)`.
pub fn split_sign(k: &IndexSet, i: &IndexSet, j: &IndexSet) -> Result<i32> {
    if i.elements.iter().any(|&x| j.contains(x)) {
        return Err(Error::InvalidSplit(format!("{i} and {j} intersect")));
    }
    if i.len() + j.len() != k.len() || !i.is_subset_of(k) || !j.is_subset_of(k) {
        return Err(Error::InvalidSplit(format!("{i} and {j} do not cover {k}")));
    }
    let concat: Vec<usize> = i.elements.iter().chain(&j.elements).copied().collect();
    Ok(permutation_sign(&concat))
}

/// `sgn(Ī, I)` with the complement taken in `universe`.
pub fn complement_sign(i: &IndexSet, universe: &IndexSet) -> Result<i32> {
    let bar = i.complement_in(universe)?;
    split_sign(universe, &bar, i)
}

/// All permutations of `0..m` together with their signs.
pub fn signed_permutations(m: usize) -> Vec<(Vec<usize>, i32)> {
    fn go(m: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in 0..m {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(m, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(m, &mut Vec::with_capacity(m), &mut vec![false; m], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect()
}
