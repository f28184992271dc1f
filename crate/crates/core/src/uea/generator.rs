//! The colored basis `{a[i,j]} ∪ {b[i,j] : i<j} ∪ {c[i,j] : i<j}` of `o_2n`.
//!
//! In signed-index form `a[i,j] = X[i,j]`, `b[i,j] = X[i,-j]` and
//! `c[i,j] = X[-j,i]`, where `X[i,j] = E[i,j] - E[-j,-i]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::foundations::SignedIndex;

/// Generator families. The derived order `C < A < B` is the tie-break
/// inside a triangular class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    C,
    A,
    B,
}

/// Triangular decomposition class, ordered `Lowering < Cartan < Raising`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenClass {
    Lowering,
    Cartan,
    Raising,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    kind: GenKind,
    i: u32,
    j: u32,
}

impl Generator {
    pub fn a(i: u32, j: u32) -> Generator {
        assert!(i > 0 && j > 0, "generator indices are 1-based");
        Generator { kind: GenKind::A, i, j }
    }

    /// `b[i,j]` with `i < j`.
    pub fn b(i: u32, j: u32) -> Generator {
        assert!(0 < i && i < j, "b[i,j] requires 0 < i < j");
        Generator { kind: GenKind::B, i, j }
    }

    /// `c[i,j]` with `i < j`.
    pub fn c(i: u32, j: u32) -> Generator {
        assert!(0 < i && i < j, "c[i,j] requires 0 < i < j");
        Generator { kind: GenKind::C, i, j }
    }

    /// Resolves `b[i,j]`/`c[i,j]` with arbitrary `i, j` through
    /// antisymmetry. `None` when `i == j`.
    pub fn antisymmetric(kind: GenKind, i: u32, j: u32) -> Option<(Generator, i32)> {
        debug_assert!(kind != GenKind::A);
        match i.cmp(&j) {
            Ordering::Equal => None,
            Ordering::Less => Some((Generator { kind, i, j }, 1)),
            Ordering::Greater => Some((Generator { kind, i: j, j: i }, -1)),
        }
    }

    pub fn kind(self) -> GenKind {
        self.kind
    }

    pub fn row(self) -> u32 {
        self.i
    }

    pub fn col(self) -> u32 {
        self.j
    }

    pub fn class(self) -> GenClass {
        match self.kind {
            GenKind::C => GenClass::Lowering,
            GenKind::B => GenClass::Raising,
            GenKind::A => match self.i.cmp(&self.j) {
                Ordering::Greater => GenClass::Lowering,
                Ordering::Equal => GenClass::Cartan,
                Ordering::Less => GenClass::Raising,
            },
        }
    }

    pub fn is_cartan(self) -> bool {
        self.class() == GenClass::Cartan
    }

    /// Largest index occurring, i.e. the smallest `n` it belongs to.
    pub fn min_rank(self) -> u32 {
        self.i.max(self.j)
    }

    /// The `(i, j)` with this generator equal to `X[i,j]`.
    pub fn signed(self) -> (i32, i32) {
        let (i, j) = (self.i as i32, self.j as i32);
        match self.kind {
            GenKind::A => (i, j),
            GenKind::B => (i, -j),
            GenKind::C => (-j, i),
        }
    }

    /// Canonical form of `X[i,j]` as `sign * generator`; `None` when it
    /// vanishes (`j = -i`). Indices must be nonzero.
    pub fn from_signed(i: i32, j: i32) -> Option<(Generator, i32)> {
        debug_assert!(i != 0 && j != 0);
        match (i > 0, j > 0) {
            (true, true) => Some((Generator::a(i as u32, j as u32), 1)),
            // X[i,-m] = b[i,m]
            (true, false) => Generator::antisymmetric(GenKind::B, i as u32, (-j) as u32),
            // X[-m,j] = c[j,m]
            (false, true) => Generator::antisymmetric(GenKind::C, j as u32, (-i) as u32),
            // X[i,j] = -X[-j,-i]
            (false, false) => Some((Generator::a((-j) as u32, (-i) as u32), -1)),
        }
    }

    /// Checked version of [`Generator::from_signed`] for the ambient `n`.
    pub fn from_signed_indices(i: SignedIndex, j: SignedIndex) -> Result<Option<(Generator, i32)>> {
        if i.ambient() != j.ambient() {
            return Err(Error::DimensionMismatch("signed indices with different n".into()));
        }
        Ok(Generator::from_signed(i.value(), j.value()))
    }

    /// The `n(2n-1)` basis elements of `o_2n` in PBW order.
    pub fn all(n: u32) -> Vec<Generator> {
        let mut out = Vec::with_capacity((n * (2 * n - 1)) as usize);
        for i in 1..=n {
            for j in 1..=n {
                out.push(Generator::a(i, j));
                if i < j {
                    out.push(Generator::b(i, j));
                    out.push(Generator::c(i, j));
                }
            }
        }
        out.sort();
        out
    }

    fn key(self) -> (GenClass, GenKind, u32, u32) {
        (self.class(), self.kind, self.i, self.j)
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GenKind::A => 'a',
            GenKind::B => 'b',
            GenKind::C => 'c',
        };
        write!(f, "{k}[{},{}]", self.i, self.j)
    }
}

/// `[g, h]` as a merged list of `(generator, coefficient)`, from
/// `[X_ij, X_kl] = δ_jk X_il + δ_il X_{-j,-k} - δ_{j,-l} X_{i,-k} - δ_{i,-k} X_{-j,l}`.
pub fn bracket_terms(g: Generator, h: Generator) -> Vec<(Generator, i32)> {
    let (i, j) = g.signed();
    let (k, l) = h.signed();
    let mut raw: Vec<(i32, i32, i32)> = Vec::with_capacity(4);
    if j == k {
        raw.push((i, l, 1));
    }
    if i == l {
        raw.push((-j, -k, 1));
    }
    if j == -l {
        raw.push((i, -k, -1));
    }
    if i == -k {
        raw.push((-j, l, -1));
    }
    let mut out: Vec<(Generator, i32)> = Vec::new();
    for (r, s, c) in raw {
        if let Some((gen, sign)) = Generator::from_signed(r, s) {
            match out.iter_mut().find(|(x, _)| *x == gen) {
                Some(slot) => slot.1 += c * sign,
                None => out.push((gen, c * sign)),
            }
        }
    }
    out.retain(|(_, c)| *c != 0);
    out.sort();
    out
}
