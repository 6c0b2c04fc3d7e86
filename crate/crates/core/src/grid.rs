//! Dense bit matrices and operation tables indexed by element pairs.
//!
//! `BitGrid` packs a rows x cols boolean matrix into u64 words (row-major bit
//! order), which keeps subset tests and unions word-parallel. It backs both
//! `leq` relations and bi-ideal membership grids. `OpTable` is a plain dense
//! table of element indices for binary operations.

use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitGrid {
    rows: usize,
    cols: usize,
    words: Vec<u64>,
}

impl BitGrid {
    pub fn new(rows: usize, cols: usize) -> Self {
        let bits = rows * cols;
        BitGrid {
            rows,
            cols,
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    #[inline]
    fn slot(&self, r: usize, c: usize) -> (usize, u64) {
        debug_assert!(r < self.rows && c < self.cols);
        let bit = r * self.cols + c;
        (bit / 64, 1u64 << (bit % 64))
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        let (w, m) = self.slot(r, c);
        self.words[w] & m != 0
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let (w, m) = self.slot(r, c);
        if value {
            self.words[w] |= m;
        } else {
            self.words[w] &= !m;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn or_assign(&mut self, other: &Self) {
        debug_assert!(self.same_shape(other));
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn and_assign(&mut self, other: &Self) {
        debug_assert!(self.same_shape(other));
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.or_assign(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        debug_assert!(self.same_shape(other));
        self.words
            .iter()
            .zip(&other.words)
            .all(|(w, o)| w & !o == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let cols = self.cols;
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let idx = wi * 64 + bit;
                Some((idx / cols, idx % cols))
            })
        })
    }

    /// Total order used for canonical element numbering of bi-ideal sets:
    /// fewer cells first, ties by row-major lexicographic comparison where an
    /// absent cell sorts before a present one.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        debug_assert!(self.same_shape(other));
        self.count().cmp(&other.count()).then_with(|| {
            for (w, o) in self.words.iter().zip(&other.words) {
                if w != o {
                    // Lowest differing bit is the first differing cell in
                    // row-major order.
                    let diff = w ^ o;
                    let bit = diff & diff.wrapping_neg();
                    return if w & bit == 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        })
    }
}

/// Dense table of a binary operation (or any pair-indexed data).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OpTable {
    rows: usize,
    cols: usize,
    data: Vec<usize>,
}

impl OpTable {
    pub fn new(rows: usize, cols: usize) -> Self {
        OpTable {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn square(n: usize) -> Self {
        Self::new(n, n)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut t = Self::new(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                t.data[i * cols + j] = f(i, j);
            }
        }
        t
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_set_get_count() {
        let mut g = BitGrid::new(3, 30);
        assert!(!g.get(2, 29));
        g.set(2, 29, true);
        g.set(0, 0, true);
        assert!(g.get(2, 29));
        assert_eq!(g.count(), 2);
        g.set(2, 29, false);
        assert_eq!(g.count(), 1);
    }

    #[test]
    fn grid_subset_and_union() {
        let mut a = BitGrid::new(2, 70);
        let mut b = BitGrid::new(2, 70);
        a.set(0, 65, true);
        b.set(0, 65, true);
        b.set(1, 3, true);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert_eq!(a.union(&b), b);
        assert_eq!(a.intersection(&b), a);
    }

    #[test]
    fn grid_iter_ones_row_major() {
        let mut g = BitGrid::new(3, 5);
        g.set(1, 4, true);
        g.set(0, 2, true);
        g.set(2, 0, true);
        let ones: Vec<_> = g.iter_ones().collect();
        assert_eq!(ones, vec![(0, 2), (1, 4), (2, 0)]);
    }

    #[test]
    fn canonical_cmp_sorts_by_count_then_lex() {
        let mut a = BitGrid::new(1, 4);
        let mut b = BitGrid::new(1, 4);
        a.set(0, 3, true);
        b.set(0, 0, true);
        b.set(0, 1, true);
        // a has one cell, b has two.
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        let mut c = BitGrid::new(1, 4);
        c.set(0, 0, true);
        c.set(0, 2, true);
        // Same count, first differing cell is (0,1): b has it, c does not.
        assert_eq!(c.canonical_cmp(&b), Ordering::Less);
        assert_eq!(b.canonical_cmp(&b.clone()), Ordering::Equal);
    }
}
