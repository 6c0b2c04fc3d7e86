//! Finite join-semilattices with zero, their homomorphisms, and their
//! congruences.
//!
//! A finite join-semilattice with zero always carries a full lattice
//! structure (meets exist as joins of common lower bounds), so the carrier
//! types here and in `lattice` describe the same objects. The distinction
//! matters for maps and congruences: a {∨,0}-homomorphism need not preserve
//! meets, and a join-congruence need not be a lattice congruence.

use crate::error::{Error, Result};
use crate::grid::{BitGrid, OpTable};
use crate::lattice::FinLattice;
use crate::partition;
use crate::poset::FinPoset;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinJoinSemilattice {
    labels: Vec<String>,
    zero: usize,
    join: OpTable,
    leq: BitGrid,
}

impl FinJoinSemilattice {
    /// Builds from an explicit join table. Element order follows `labels`.
    pub fn from_join_table(labels: Vec<String>, join: OpTable) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyStructure);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if join.rows() != n || join.cols() != n {
            return Err(Error::DimensionMismatch);
        }
        let (leq, zero) = check_join_laws(&labels, &join)?;
        Ok(FinJoinSemilattice {
            labels,
            zero,
            join,
            leq,
        })
    }

    /// Builds from a poset that has all pairwise joins and a least element.
    pub fn from_poset(poset: FinPoset) -> Result<Self> {
        let n = poset.size();
        if n == 0 {
            return Err(Error::EmptyStructure);
        }
        let minimals = poset.minimal_elements();
        if minimals.len() != 1 {
            return Err(Error::NoZero);
        }
        let zero = minimals[0];
        let mut join = OpTable::square(n);
        for a in 0..n {
            for b in a..n {
                let ubs: Vec<usize> = (0..n)
                    .filter(|&u| poset.leq(a, u) && poset.leq(b, u))
                    .collect();
                match ubs
                    .iter()
                    .copied()
                    .find(|&u| ubs.iter().all(|&v| poset.leq(u, v)))
                {
                    Some(u) => {
                        join.set(a, b, u);
                        join.set(b, a, u);
                    }
                    None => {
                        return Err(Error::MissingJoin {
                            a: poset.label(a).to_string(),
                            b: poset.label(b).to_string(),
                        })
                    }
                }
            }
        }
        let leq = poset.leq_grid().clone();
        Ok(FinJoinSemilattice {
            labels: poset.labels().to_vec(),
            zero,
            join,
            leq,
        })
    }

    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Self> {
        Self::from_poset(FinPoset::from_covers(labels, covers)?)
    }

    /// The {∨,0}-reduct of a lattice: same carrier, meets forgotten.
    pub fn join_reduct(l: &FinLattice) -> Self {
        FinJoinSemilattice {
            labels: l.labels().to_vec(),
            zero: l.zero(),
            join: l.join_table().clone(),
            leq: l.poset().leq_grid().clone(),
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq.get(a, b)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// The top element, the join of everything.
    pub fn one(&self) -> usize {
        (0..self.size())
            .find(|&t| (0..self.size()).all(|a| self.leq(a, t)))
            .expect("a finite join-semilattice has a top")
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    pub fn join_table(&self) -> &OpTable {
        &self.join
    }

    pub fn join_many(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(self.zero, |acc, x| self.join(acc, x))
    }

    /// Elements whose only strict lower bound is zero.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| {
                a != self.zero && (0..self.size()).all(|x| !self.lt(x, a) || x == self.zero)
            })
            .collect()
    }

    /// A witness (u, x0, x1) with u below x0 ∨ x1 that does not split as a
    /// join of elements below x0 and x1, or None when every such u splits.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        // best[x][u]: the largest element below both x and u.
        let mut best = vec![vec![self.zero; n]; n];
        for x in 0..n {
            for u in 0..n {
                best[x][u] = self.join_many((0..n).filter(|&w| self.leq(w, x) && self.leq(w, u)));
            }
        }
        for u in 0..n {
            for x0 in 0..n {
                for x1 in 0..n {
                    if self.leq(u, self.join(x0, x1)) && self.join(best[x0][u], best[x1][u]) != u {
                        return Some((u, x0, x1));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Reattaches the meet structure. Always succeeds on a valid carrier.
    pub fn to_lattice(&self) -> Result<FinLattice> {
        let poset = FinPoset::from_parts(self.labels.clone(), self.leq.clone())?;
        FinLattice::from_poset(poset)
    }

    /// Non-zero elements with exactly one lower cover. Every element is the
    /// join of the join-irreducibles below it.
    pub fn join_irreducible_indices(&self) -> Vec<usize> {
        let n = self.size();
        let is_cover =
            |y: usize, x: usize| self.lt(y, x) && (0..n).all(|z| !(self.lt(y, z) && self.lt(z, x)));
        (0..n)
            .filter(|&x| (0..n).filter(|&y| is_cover(y, x)).count() == 1)
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let (leq, zero) = check_join_laws(&self.labels, &self.join)?;
        if leq != self.leq || zero != self.zero {
            return Err(Error::InvalidJoinTable(
                "stored order or zero disagrees with the join table".into(),
            ));
        }
        Ok(())
    }
}

/// Every {∨,0}-homomorphism from `a` to `b`, as image vectors in
/// lexicographic order.
///
/// A homomorphism is determined by its values on join-irreducibles, so the
/// search assigns those, prunes on monotonicity, extends by joins, and keeps
/// the candidates that satisfy the homomorphism law everywhere.
pub fn join_homomorphisms(a: &FinJoinSemilattice, b: &FinJoinSemilattice) -> Vec<Vec<usize>> {
    let irr = a.join_irreducible_indices();
    let mut values = vec![0usize; irr.len()];
    let mut out = Vec::new();
    fn assign(
        a: &FinJoinSemilattice,
        b: &FinJoinSemilattice,
        irr: &[usize],
        values: &mut Vec<usize>,
        pos: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == irr.len() {
            let image: Vec<usize> = (0..a.size())
                .map(|x| {
                    b.join_many(
                        irr.iter()
                            .zip(values.iter())
                            .filter(|(&j, _)| a.leq(j, x))
                            .map(|(_, &v)| v),
                    )
                })
                .collect();
            let ok = (0..a.size())
                .all(|x| (0..a.size()).all(|y| image[a.join(x, y)] == b.join(image[x], image[y])));
            if ok {
                out.push(image);
            }
            return;
        }
        'next: for v in 0..b.size() {
            for k in 0..pos {
                if a.leq(irr[k], irr[pos]) && !b.leq(values[k], v) {
                    continue 'next;
                }
                if a.leq(irr[pos], irr[k]) && !b.leq(v, values[k]) {
                    continue 'next;
                }
            }
            values[pos] = v;
            assign(a, b, irr, values, pos + 1, out);
        }
    }
    assign(a, b, &irr, &mut values, 0, &mut out);
    out.sort();
    out
}

fn check_join_laws(labels: &[String], join: &OpTable) -> Result<(BitGrid, usize)> {
    let n = labels.len();
    for a in 0..n {
        for b in 0..n {
            let v = join.get(a, b);
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, size: n });
            }
        }
    }
    for a in 0..n {
        if join.get(a, a) != a {
            return Err(Error::InvalidJoinTable(format!(
                "{0:?} ∨ {0:?} is not {0:?}",
                labels[a]
            )));
        }
        for b in 0..n {
            if join.get(a, b) != join.get(b, a) {
                return Err(Error::InvalidJoinTable(format!(
                    "{:?} ∨ {:?} depends on the argument order",
                    labels[a], labels[b]
                )));
            }
            for c in 0..n {
                if join.get(join.get(a, b), c) != join.get(a, join.get(b, c)) {
                    return Err(Error::InvalidJoinTable(format!(
                        "associativity fails at ({:?}, {:?}, {:?})",
                        labels[a], labels[b], labels[c]
                    )));
                }
            }
        }
    }
    let zero = (0..n)
        .find(|&z| (0..n).all(|a| join.get(z, a) == a))
        .ok_or(Error::NoZero)?;
    let mut leq = BitGrid::new(n, n);
    for a in 0..n {
        for b in 0..n {
            leq.set(a, b, join.get(a, b) == b);
        }
    }
    Ok((leq, zero))
}

/// The direct sum of two join-semilattices with zero: componentwise joins on
/// the product carrier, with (a, 0) and (0, b) embedding the summands.
pub fn direct_sum(a: &FinJoinSemilattice, b: &FinJoinSemilattice) -> FinJoinSemilattice {
    let (na, nb) = (a.size(), b.size());
    let idx = |x: usize, y: usize| x * nb + y;
    let mut labels = Vec::with_capacity(na * nb);
    for x in 0..na {
        for y in 0..nb {
            labels.push(format!("({},{})", a.label(x), b.label(y)));
        }
    }
    let join = OpTable::from_fn(na * nb, na * nb, |p, q| {
        idx(a.join(p / nb, q / nb), b.join(p % nb, q % nb))
    });
    let mut leq = BitGrid::new(na * nb, na * nb);
    for p in 0..na * nb {
        for q in 0..na * nb {
            leq.set(p, q, a.leq(p / nb, q / nb) && b.leq(p % nb, q % nb));
        }
    }
    FinJoinSemilattice {
        labels,
        zero: idx(a.zero(), b.zero()),
        join,
        leq,
    }
}

/// A {∨,0}-homomorphism between join-semilattices, stored by image vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemilatticeMap {
    source: FinJoinSemilattice,
    target: FinJoinSemilattice,
    image: Vec<usize>,
}

impl SemilatticeMap {
    pub fn new(
        source: FinJoinSemilattice,
        target: FinJoinSemilattice,
        image: Vec<usize>,
    ) -> Result<Self> {
        if image.len() != source.size() {
            return Err(Error::DimensionMismatch);
        }
        for &v in &image {
            if v >= target.size() {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    size: target.size(),
                });
            }
        }
        if image[source.zero()] != target.zero() {
            return Err(Error::NotAHomomorphism(format!(
                "zero maps to {:?}",
                target.label(image[source.zero()])
            )));
        }
        for a in 0..source.size() {
            for b in 0..source.size() {
                if image[source.join(a, b)] != target.join(image[a], image[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "f({0:?} ∨ {1:?}) = {2:?} but f({0:?}) ∨ f({1:?}) = {3:?}",
                        source.label(a),
                        source.label(b),
                        target.label(image[source.join(a, b)]),
                        target.label(target.join(image[a], image[b])),
                    )));
                }
            }
        }
        Ok(SemilatticeMap {
            source,
            target,
            image,
        })
    }

    /// Builds from (source label, target label) pairs covering the source.
    pub fn from_pairs<S: AsRef<str>>(
        source: FinJoinSemilattice,
        target: FinJoinSemilattice,
        pairs: &[(S, S)],
    ) -> Result<Self> {
        let mut image = vec![usize::MAX; source.size()];
        for (s, t) in pairs {
            let si = source
                .index_of(s.as_ref())
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))?;
            let ti = target
                .index_of(t.as_ref())
                .ok_or_else(|| Error::UnknownLabel(t.as_ref().to_string()))?;
            image[si] = ti;
        }
        if let Some(missing) = image.iter().position(|&v| v == usize::MAX) {
            return Err(Error::NotAHomomorphism(format!(
                "no image given for {:?}",
                source.label(missing)
            )));
        }
        Self::new(source, target, image)
    }

    pub fn source(&self) -> &FinJoinSemilattice {
        &self.source
    }

    pub fn target(&self) -> &FinJoinSemilattice {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, a: usize) -> usize {
        self.image[a]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.image
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.image {
            seen[v] = true;
        }
        seen.iter().all(|&s| s)
    }

    /// Looks for (a0, a1, b) with b below f(a0) and f(a1) such that no common
    /// lower bound x of a0 and a1 has b below f(x).
    ///
    /// Maps without such a witness are exactly the L-homomorphisms. Every
    /// lattice homomorphism qualifies via x = a0 ∧ a1; a general
    /// {∨,0}-homomorphism can fail.
    pub fn l_homomorphism_witness(&self) -> Option<(usize, usize, usize)> {
        let (s, t) = (&self.source, &self.target);
        for a0 in 0..s.size() {
            for a1 in 0..s.size() {
                for b in 0..t.size() {
                    if t.leq(b, self.image[a0])
                        && t.leq(b, self.image[a1])
                        && !(0..s.size())
                            .any(|x| s.leq(x, a0) && s.leq(x, a1) && t.leq(b, self.image[x]))
                    {
                        return Some((a0, a1, b));
                    }
                }
            }
        }
        None
    }

    pub fn is_l_homomorphism(&self) -> bool {
        self.l_homomorphism_witness().is_none()
    }

    /// The kernel: elements identified iff they share an image. Image
    /// values may come from a larger carrier, so blocks are renumbered by
    /// first occurrence here rather than through `partition::normalize`.
    pub fn kernel(&self) -> JoinCongruence {
        let mut first = std::collections::HashMap::new();
        let block_of = self
            .image
            .iter()
            .map(|&v| {
                let next = first.len();
                *first.entry(v).or_insert(next)
            })
            .collect();
        JoinCongruence::new(self.source.clone(), block_of)
            .expect("the kernel of a homomorphism is a congruence")
    }
}

/// A join-congruence: a partition compatible with ∨.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JoinCongruence {
    carrier: FinJoinSemilattice,
    block_of: Vec<usize>,
}

impl JoinCongruence {
    pub fn new(carrier: FinJoinSemilattice, mut block_of: Vec<usize>) -> Result<Self> {
        if block_of.len() != carrier.size() {
            return Err(Error::DimensionMismatch);
        }
        partition::normalize(&mut block_of);
        let n = carrier.size();
        for x in 0..n {
            for y in x + 1..n {
                if block_of[x] != block_of[y] {
                    continue;
                }
                for z in 0..n {
                    let (xz, yz) = (carrier.join(x, z), carrier.join(y, z));
                    if block_of[xz] != block_of[yz] {
                        return Err(Error::NotACongruence(format!(
                            "{:?} ≡ {:?} but joining {:?} separates them",
                            carrier.label(x),
                            carrier.label(y),
                            carrier.label(z),
                        )));
                    }
                }
            }
        }
        Ok(JoinCongruence { carrier, block_of })
    }

    pub fn from_blocks<S: AsRef<str>>(
        carrier: FinJoinSemilattice,
        blocks: &[Vec<S>],
    ) -> Result<Self> {
        let mut block_of = vec![usize::MAX; carrier.size()];
        for (b, blk) in blocks.iter().enumerate() {
            for l in blk {
                let i = carrier
                    .index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
                if block_of[i] != usize::MAX {
                    return Err(Error::NotACongruence(format!(
                        "{:?} appears in two blocks",
                        l.as_ref()
                    )));
                }
                block_of[i] = b;
            }
        }
        if let Some(missing) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::NotACongruence(format!(
                "{:?} appears in no block",
                carrier.label(missing)
            )));
        }
        Self::new(carrier, block_of)
    }

    /// The least congruence: every element alone.
    pub fn equality(carrier: FinJoinSemilattice) -> Self {
        let n = carrier.size();
        JoinCongruence {
            carrier,
            block_of: partition::finest(n),
        }
    }

    /// The greatest congruence: one block.
    pub fn total(carrier: FinJoinSemilattice) -> Self {
        let n = carrier.size();
        JoinCongruence {
            carrier,
            block_of: partition::coarsest(n),
        }
    }

    pub fn carrier(&self) -> &FinJoinSemilattice {
        &self.carrier
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn block(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn num_blocks(&self) -> usize {
        partition::num_blocks(&self.block_of)
    }

    /// Blocks as sorted index lists, ordered by least member.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        partition::blocks(&self.block_of)
    }

    pub fn is_finer_than(&self, other: &JoinCongruence) -> Result<bool> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        Ok(partition::is_finer(&self.block_of, &other.block_of))
    }

    pub fn join_with(&self, other: &JoinCongruence) -> Result<JoinCongruence> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        // The equivalence join of two congruences is substitution closed.
        let block_of = partition::join(&self.block_of, &other.block_of);
        Ok(JoinCongruence {
            carrier: self.carrier.clone(),
            block_of,
        })
    }

    pub fn meet_with(&self, other: &JoinCongruence) -> Result<JoinCongruence> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        let block_of = partition::meet(&self.block_of, &other.block_of);
        Ok(JoinCongruence {
            carrier: self.carrier.clone(),
            block_of,
        })
    }

    /// The quotient semilattice and the canonical projection onto it.
    /// Quotient elements are ordered and labeled by least block members.
    pub fn quotient(&self) -> (FinJoinSemilattice, SemilatticeMap) {
        let blocks = self.blocks();
        let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
        let labels: Vec<String> = reps
            .iter()
            .map(|&r| self.carrier.label(r).to_string())
            .collect();
        let join = OpTable::from_fn(reps.len(), reps.len(), |p, q| {
            self.block_of[self.carrier.join(reps[p], reps[q])]
        });
        let q = FinJoinSemilattice::from_join_table(labels, join)
            .expect("quotient by a congruence is a semilattice");
        let proj = SemilatticeMap::new(self.carrier.clone(), q.clone(), self.block_of.clone())
            .expect("projection onto a quotient is a homomorphism");
        (q, proj)
    }

    /// Whether this congruence is the kernel of some L-homomorphism, decided
    /// by testing the canonical projection.
    pub fn is_l_congruence(&self) -> bool {
        self.quotient().1.is_l_homomorphism()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::iso::are_isomorphic;

    fn reduct(name: &str) -> FinJoinSemilattice {
        FinJoinSemilattice::join_reduct(&catalog(name).unwrap())
    }

    #[test]
    fn diamond_joins_from_poset() {
        let d = FinJoinSemilattice::from_covers(
            &["0", "p", "q", "1"],
            &[("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
        )
        .unwrap();
        let (p, q) = (d.index_of("p").unwrap(), d.index_of("q").unwrap());
        assert_eq!(d.join(p, q), d.one());
        assert_eq!(d.zero(), 0);
        assert_eq!(d.atoms(), vec![p, q]);
        assert!(d.validate().is_ok());
    }

    #[test]
    fn missing_zero_is_reported() {
        let r = FinJoinSemilattice::from_covers(&["a", "b", "1"], &[("a", "1"), ("b", "1")]);
        assert!(matches!(r, Err(Error::NoZero)));
    }

    #[test]
    fn missing_join_is_reported() {
        let r = FinJoinSemilattice::from_covers(&["0", "a", "b"], &[("0", "a"), ("0", "b")]);
        match r {
            Err(Error::MissingJoin { a, b }) => {
                assert_eq!((a.as_str(), b.as_str()), ("a", "b"));
            }
            other => panic!("expected MissingJoin, got {other:?}"),
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        let labels = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
        let not_idem = OpTable::from_fn(2, 2, |a, b| (a + b) % 2);
        assert!(matches!(
            FinJoinSemilattice::from_join_table(labels(2), not_idem),
            Err(Error::InvalidJoinTable(_))
        ));
        // 0 ∨ 1 = 1, 1 ∨ 2 = 2, 0 ∨ 2 = 1 breaks associativity.
        let mut t = OpTable::square(3);
        for i in 0..3 {
            t.set(i, i, i);
        }
        for (a, b, v) in [(0, 1, 1), (1, 2, 2), (0, 2, 1)] {
            t.set(a, b, v);
            t.set(b, a, v);
        }
        assert!(matches!(
            FinJoinSemilattice::from_join_table(labels(3), t),
            Err(Error::InvalidJoinTable(_))
        ));
        // A valid join table for a vee shape has no zero.
        let mut v = OpTable::from_fn(3, 3, |_, _| 2);
        v.set(0, 0, 0);
        v.set(1, 1, 1);
        assert!(matches!(
            FinJoinSemilattice::from_join_table(labels(3), v),
            Err(Error::NoZero)
        ));
    }

    #[test]
    fn reduct_round_trips_through_lattice() {
        for name in ["chain:4", "bool:2", "M3", "N5"] {
            let l = catalog(name).unwrap();
            let s = FinJoinSemilattice::join_reduct(&l);
            assert!(s.validate().is_ok());
            assert_eq!(s.to_lattice().unwrap(), l);
        }
    }

    #[test]
    fn direct_sum_of_chains_is_a_grid() {
        let c2 = reduct("chain:2");
        let s = direct_sum(&c2, &c2);
        assert_eq!(s.size(), 4);
        assert_eq!(s.label(s.zero()), "(0,0)");
        assert_eq!(s.label(s.one()), "(1,1)");
        assert!(are_isomorphic(&s, &reduct("bool:2")).is_some());
        assert!(s.is_distributive());
    }

    #[test]
    fn distributivity_matches_known_cases() {
        assert!(reduct("chain:4").is_distributive());
        assert!(reduct("bool:3").is_distributive());
        let m3 = reduct("M3");
        let (u, x0, x1) = m3.distributivity_witness().unwrap();
        assert!(m3.leq(u, m3.join(x0, x1)));
        assert!(!reduct("N5").is_distributive());
    }

    #[test]
    fn join_many_folds_from_zero() {
        let m3 = reduct("M3");
        assert_eq!(m3.join_many([]), m3.zero());
        assert_eq!(m3.join_many(m3.atoms()), m3.one());
    }

    #[test]
    fn collapse_of_diamond_top_is_not_l() {
        // bool:2 onto chain:2, sending both atoms and the top to 1. This is
        // a {∨,0}-homomorphism but not an L-homomorphism: 1 sits below the
        // images of both atoms, yet their only common lower bound maps to 0.
        let b2 = reduct("bool:2");
        let c2 = reduct("chain:2");
        let f = SemilatticeMap::new(b2.clone(), c2.clone(), vec![0, 1, 1, 1]).unwrap();
        assert!(!f.is_injective());
        assert!(f.is_surjective());
        assert_eq!(f.l_homomorphism_witness(), Some((1, 2, 1)));

        let ker = f.kernel();
        assert_eq!(ker.blocks(), vec![vec![0], vec![1, 2, 3]]);
        assert!(!ker.is_l_congruence());
    }

    #[test]
    fn chain_collapse_is_an_l_congruence() {
        let c3 = reduct("chain:3");
        let theta = JoinCongruence::from_blocks(c3, &[vec!["0"], vec!["1", "2"]]).unwrap();
        assert!(theta.is_l_congruence());
        let (q, proj) = theta.quotient();
        assert_eq!(q.size(), 2);
        assert_eq!(q.labels(), ["0", "1"]);
        assert!(proj.is_l_homomorphism());
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        let b2 = reduct("bool:2");
        let r = JoinCongruence::from_blocks(b2, &[vec!["0", "3"], vec!["1"], vec!["2"]]);
        assert!(matches!(r, Err(Error::NotACongruence(_))));
    }

    #[test]
    fn congruence_lattice_operations() {
        let c3 = reduct("chain:3");
        let low = JoinCongruence::from_blocks(c3.clone(), &[vec!["0", "1"], vec!["2"]]).unwrap();
        let high = JoinCongruence::from_blocks(c3.clone(), &[vec!["0"], vec!["1", "2"]]).unwrap();
        let j = low.join_with(&high).unwrap();
        assert_eq!(j, JoinCongruence::total(c3.clone()));
        let m = low.meet_with(&high).unwrap();
        assert_eq!(m, JoinCongruence::equality(c3.clone()));
        assert!(m.is_finer_than(&low).unwrap());
        assert!(low.is_finer_than(&j).unwrap());
        let other = JoinCongruence::equality(reduct("chain:4"));
        assert!(matches!(
            low.is_finer_than(&other),
            Err(Error::CarrierMismatch)
        ));
    }

    #[test]
    fn map_construction_validates() {
        let c3 = reduct("chain:3");
        let c2 = reduct("chain:2");
        assert!(matches!(
            SemilatticeMap::new(c3.clone(), c2.clone(), vec![0, 1]),
            Err(Error::DimensionMismatch)
        ));
        assert!(matches!(
            SemilatticeMap::new(c3.clone(), c2.clone(), vec![0, 5, 1]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            SemilatticeMap::new(c3.clone(), c2.clone(), vec![1, 1, 1]),
            Err(Error::NotAHomomorphism(_))
        ));
        // Monotone but not join preserving: atoms to 0, their join to 1.
        let b2 = reduct("bool:2");
        assert!(matches!(
            SemilatticeMap::new(b2, c2.clone(), vec![0, 0, 0, 1]),
            Err(Error::NotAHomomorphism(_))
        ));
        let ok = SemilatticeMap::from_pairs(
            c3.clone(),
            c2.clone(),
            &[("0", "0"), ("1", "1"), ("2", "1")],
        )
        .unwrap();
        assert!(ok.is_l_homomorphism());
    }
}
