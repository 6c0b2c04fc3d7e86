//! Congruences over a sub-tensor product, and executable verification of the
//! structural laws tying `Con A` and `Con B` to the congruences of the
//! tensor.
//!
//! The key objects: the box congruence of a pair of factor congruences, the
//! two embeddings of `Con A` and `Con B` into `Con C`, their meet (the
//! tensor of two congruences inside `Con C`), and the natural map from the
//! tensor product of the congruence semilattices into `Con C`.  The verify
//! functions run the laws on a concrete pair of lattices and return a
//! structured report instead of panicking, so a whole suite can run to
//! completion and show every failure.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::congruence::{congruence_lattice, ConLattice, LatticeCongruence};
use crate::error::{Error, Result};
use crate::grid::BitGrid;
use crate::iso::are_isomorphic;
use crate::lattice::FinLattice;
use crate::partition;
use crate::poset::FinPoset;
use crate::semilattice::{FinJoinSemilattice, JoinCongruence};
use crate::tensor::{tensor_product, BiIdeal, TensorAlgebra};

/// A subset of a tensor algebra that contains every mixed tensor, is closed
/// under pairwise intersection, and forms a lattice under containment.  The
/// join of two members is the least member containing both, which can lie
/// strictly above their join in the full algebra.
#[derive(Clone, Debug)]
pub struct SubTensorProduct {
    algebra: TensorAlgebra,
    member: Vec<usize>,
    position: Vec<Option<usize>>,
    lattice: FinLattice,
    join_carrier: FinJoinSemilattice,
    factor_a_lattice: FinLattice,
    factor_b_lattice: FinLattice,
}

fn member_lattice(t: &TensorAlgebra, member: &[usize]) -> Result<FinLattice> {
    let labels: Vec<String> = member.iter().map(|&i| t.label(i).to_string()).collect();
    let mut leq = BitGrid::new(member.len(), member.len());
    for (p, &i) in member.iter().enumerate() {
        for (q, &j) in member.iter().enumerate() {
            if t.leq(i, j) {
                leq.set(p, q, true);
            }
        }
    }
    FinLattice::from_poset(FinPoset::from_parts(labels, leq)?)
}

/// Validate a member subset and build the sub-tensor product over it.
/// Rejects with a message naming the first failed condition.
pub fn sub_tensor_product(t: &TensorAlgebra, member: &[usize]) -> Result<SubTensorProduct> {
    let mut member: Vec<usize> = member.to_vec();
    member.sort_unstable();
    member.dedup();
    for &i in &member {
        if i >= t.size() {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: t.size(),
            });
        }
    }
    let position = {
        let mut pos = vec![None; t.size()];
        for (p, &i) in member.iter().enumerate() {
            pos[i] = Some(p);
        }
        pos
    };
    let (a, b) = (t.factor_a(), t.factor_b());
    for a0 in 0..a.size() {
        for b0 in 0..b.size() {
            for a1 in 0..a.size() {
                for b1 in 0..b.size() {
                    let opposite =
                        (a.leq(a0, a1) && b.leq(b1, b0)) || (a.leq(a1, a0) && b.leq(b0, b1));
                    if !opposite {
                        continue;
                    }
                    let grid = t
                        .element(t.pure(a0, b0))
                        .grid()
                        .union(t.element(t.pure(a1, b1)).grid());
                    let idx = t
                        .element_index(&grid)
                        .expect("a mixed tensor is an element of the algebra");
                    if position[idx].is_none() {
                        return Err(Error::NotASubTensorProduct(format!(
                            "missing the mixed tensor {}⊗{} ∨ {}⊗{}",
                            a.label(a0),
                            b.label(b0),
                            a.label(a1),
                            b.label(b1)
                        )));
                    }
                }
            }
        }
    }
    for (p, &i) in member.iter().enumerate() {
        for &j in &member[p + 1..] {
            let grid = t.element(i).grid().intersection(t.element(j).grid());
            let idx = t
                .element_index(&grid)
                .expect("an intersection of bi-ideals is a bi-ideal");
            if position[idx].is_none() {
                return Err(Error::NotASubTensorProduct(format!(
                    "not closed under intersection: {} ∧ {} is missing",
                    t.label(i),
                    t.label(j)
                )));
            }
        }
    }
    let lattice = match member_lattice(t, &member) {
        Ok(l) => l,
        Err(Error::NotALattice { a, b, missing }) => {
            return Err(Error::NotASubTensorProduct(format!(
                "members {a:?} and {b:?} have no {missing} among the members"
            )))
        }
        Err(e) => return Err(e),
    };
    let join_carrier = FinJoinSemilattice::join_reduct(&lattice);
    let factor_a_lattice = a.to_lattice()?;
    let factor_b_lattice = b.to_lattice()?;
    Ok(SubTensorProduct {
        algebra: t.clone(),
        member,
        position,
        lattice,
        join_carrier,
        factor_a_lattice,
        factor_b_lattice,
    })
}

/// Does the subset satisfy all three sub-tensor product conditions?
pub fn is_sub_tensor_product(t: &TensorAlgebra, member: &[usize]) -> bool {
    sub_tensor_product(t, member).is_ok()
}

/// The whole algebra viewed as a sub-tensor product of its factors.
pub fn full_sub_tensor_product(t: &TensorAlgebra) -> SubTensorProduct {
    let member: Vec<usize> = (0..t.size()).collect();
    let position = (0..t.size()).map(Some).collect();
    SubTensorProduct {
        algebra: t.clone(),
        member,
        position,
        lattice: t.lattice().clone(),
        join_carrier: t.join_carrier().clone(),
        factor_a_lattice: t.factor_a().to_lattice().expect("factor is a lattice"),
        factor_b_lattice: t.factor_b().to_lattice().expect("factor is a lattice"),
    }
}

impl SubTensorProduct {
    pub fn algebra(&self) -> &TensorAlgebra {
        &self.algebra
    }

    pub fn size(&self) -> usize {
        self.member.len()
    }

    pub fn is_full(&self) -> bool {
        self.member.len() == self.algebra.size()
    }

    /// Algebra indices of the members, ascending.
    pub fn member_indices(&self) -> &[usize] {
        &self.member
    }

    /// Member position of an algebra element, if it is a member.
    pub fn position(&self, algebra_index: usize) -> Option<usize> {
        self.position[algebra_index]
    }

    pub fn algebra_index(&self, pos: usize) -> usize {
        self.member[pos]
    }

    pub fn element(&self, pos: usize) -> &BiIdeal {
        self.algebra.element(self.member[pos])
    }

    /// Member position of the pure tensor `x (x) y`.
    pub fn pure(&self, x: usize, y: usize) -> usize {
        self.position[self.algebra.pure(x, y)].expect("pure tensors are members")
    }

    /// The member lattice, ordered by containment.
    pub fn lattice(&self) -> &FinLattice {
        &self.lattice
    }

    pub fn join_carrier(&self) -> &FinJoinSemilattice {
        &self.join_carrier
    }

    /// First factor with its meets filled in.
    pub fn factor_a_lattice(&self) -> &FinLattice {
        &self.factor_a_lattice
    }

    pub fn factor_b_lattice(&self) -> &FinLattice {
        &self.factor_b_lattice
    }
}

/// A congruence on each factor, checked against a sub-tensor product's
/// carriers.
#[derive(Clone, Debug)]
pub struct CongruencePair {
    alpha: LatticeCongruence,
    beta: LatticeCongruence,
}

impl CongruencePair {
    pub fn new(
        c: &SubTensorProduct,
        alpha: LatticeCongruence,
        beta: LatticeCongruence,
    ) -> Result<Self> {
        if FinJoinSemilattice::join_reduct(alpha.carrier()) != *c.algebra.factor_a()
            || FinJoinSemilattice::join_reduct(beta.carrier()) != *c.algebra.factor_b()
        {
            return Err(Error::CarrierMismatch);
        }
        Ok(CongruencePair { alpha, beta })
    }

    pub fn alpha(&self) -> &LatticeCongruence {
        &self.alpha
    }

    pub fn beta(&self) -> &LatticeCongruence {
        &self.beta
    }
}

fn blur(
    c: &SubTensorProduct,
    pos: usize,
    alpha: &LatticeCongruence,
    beta: &LatticeCongruence,
) -> BitGrid {
    let mut g = BitGrid::new(alpha.num_blocks(), beta.num_blocks());
    for (x, y) in c.element(pos).grid().iter_ones() {
        g.set(alpha.block(x), beta.block(y), true);
    }
    g
}

/// The box congruence of the pair, restricted to the members: two bi-ideals
/// are related when each cell of one is matched, blockwise, by a cell of the
/// other. Computed by comparing block-level footprints.
pub fn box_congruence(c: &SubTensorProduct, p: &CongruencePair) -> Result<JoinCongruence> {
    let mut seen: HashMap<BitGrid, usize> = HashMap::new();
    let mut block_of = Vec::with_capacity(c.size());
    for pos in 0..c.size() {
        let g = blur(c, pos, &p.alpha, &p.beta);
        let next = seen.len();
        block_of.push(*seen.entry(g).or_insert(next));
    }
    JoinCongruence::new(c.join_carrier.clone(), block_of)
}

/// Embed a congruence of the first factor into `Con C`: box it with the
/// equality congruence on the other factor.
pub fn epsilon_a(c: &SubTensorProduct, alpha: &LatticeCongruence) -> Result<JoinCongruence> {
    let pair = CongruencePair::new(
        c,
        alpha.clone(),
        LatticeCongruence::equality(c.factor_b_lattice.clone()),
    )?;
    box_congruence(c, &pair)
}

/// Embed a congruence of the second factor into `Con C`.
pub fn epsilon_b(c: &SubTensorProduct, beta: &LatticeCongruence) -> Result<JoinCongruence> {
    let pair = CongruencePair::new(
        c,
        LatticeCongruence::equality(c.factor_a_lattice.clone()),
        beta.clone(),
    )?;
    box_congruence(c, &pair)
}

/// The tensor of two factor congruences inside `Con C`: the meet of their
/// two embeddings. Always a congruence of the member lattice.
pub fn odot(c: &SubTensorProduct, p: &CongruencePair) -> Result<LatticeCongruence> {
    let ea = epsilon_a(c, &p.alpha)?;
    let eb = epsilon_b(c, &p.beta)?;
    let met = ea.meet_with(&eb)?;
    LatticeCongruence::new(c.lattice.clone(), met.block_of().to_vec())
}

/// Project a congruence of the member lattice back to the first factor
/// through a comparable pair `b <= b1` of the second factor: `x` and `y` are
/// related when joining `(x ∨ y) ⊗ b` onto `(x ∧ y) ⊗ b1` already reaches
/// `(x ∨ y) ⊗ b1` modulo `gamma`.
pub fn projection_congruence(
    c: &SubTensorProduct,
    gamma: &LatticeCongruence,
    b: usize,
    b1: usize,
) -> Result<LatticeCongruence> {
    if gamma.carrier() != &c.lattice {
        return Err(Error::CarrierMismatch);
    }
    let fb = c.algebra.factor_b();
    if b >= fb.size() {
        return Err(Error::IndexOutOfRange {
            index: b,
            size: fb.size(),
        });
    }
    if b1 >= fb.size() {
        return Err(Error::IndexOutOfRange {
            index: b1,
            size: fb.size(),
        });
    }
    if !fb.leq(b, b1) {
        return Err(Error::NotComparable {
            a: fb.label(b).to_string(),
            b: fb.label(b1).to_string(),
        });
    }
    let al = &c.factor_a_lattice;
    let n = al.size();
    let related = |x: usize, y: usize| {
        let top = al.join(x, y);
        let bot = al.meet(x, y);
        let lhs = c.lattice.join(c.pure(top, b), c.pure(bot, b1));
        gamma.same_block(lhs, c.pure(top, b1))
    };
    let mut block_of: Vec<usize> = (0..n).collect();
    for x in 0..n {
        for y in x + 1..n {
            if related(x, y) {
                let (bx, by) = (block_of[x], block_of[y]);
                if bx != by {
                    let keep = bx.min(by);
                    let drop = bx.max(by);
                    for v in block_of.iter_mut() {
                        if *v == drop {
                            *v = keep;
                        }
                    }
                }
            }
        }
    }
    partition::normalize(&mut block_of);
    LatticeCongruence::new(al.clone(), block_of)
}

/// The congruence semilattices of two lattices and their tensor product.
/// Elements of the tensor index joins of pure tensors of compact factor
/// congruences.
#[derive(Clone, Debug)]
pub struct CongruenceTensor {
    con_a: ConLattice,
    con_b: ConLattice,
    tensor: TensorAlgebra,
}

pub fn congruence_tensor(a: &FinLattice, b: &FinLattice, guard: usize) -> Result<CongruenceTensor> {
    let con_a = congruence_lattice(a);
    let con_b = congruence_lattice(b);
    let tensor = tensor_product(&con_a.join_semilattice(), &con_b.join_semilattice(), guard)?;
    Ok(CongruenceTensor {
        con_a,
        con_b,
        tensor,
    })
}

impl CongruenceTensor {
    pub fn con_a(&self) -> &ConLattice {
        &self.con_a
    }

    pub fn con_b(&self) -> &ConLattice {
        &self.con_b
    }

    pub fn tensor(&self) -> &TensorAlgebra {
        &self.tensor
    }

    pub fn size(&self) -> usize {
        self.tensor.size()
    }

    fn matches(&self, c: &SubTensorProduct) -> bool {
        FinJoinSemilattice::join_reduct(self.con_a.base()) == *c.algebra.factor_a()
            && FinJoinSemilattice::join_reduct(self.con_b.base()) == *c.algebra.factor_b()
    }
}

/// Evaluate the natural map on one element of the congruence tensor: the
/// join in `Con C` of the factor-congruence tensors over the element's
/// minimal cap.
pub fn epsilon_map(
    c: &SubTensorProduct,
    ct: &CongruenceTensor,
    xi: usize,
) -> Result<LatticeCongruence> {
    epsilon_map_with_cap(c, ct, ct.tensor.cap(xi))
}

/// Same evaluation over an arbitrary family of index pairs into the two
/// congruence lattices. Feeding any valid cap of an element produces the
/// same congruence as the minimal cap.
pub fn epsilon_map_with_cap(
    c: &SubTensorProduct,
    ct: &CongruenceTensor,
    cells: &[(usize, usize)],
) -> Result<LatticeCongruence> {
    if !ct.matches(c) {
        return Err(Error::CarrierMismatch);
    }
    let mut acc = LatticeCongruence::equality(c.lattice.clone());
    for &(i, j) in cells {
        let pair = CongruencePair::new(c, ct.con_a.member(i).clone(), ct.con_b.member(j).clone())?;
        acc = acc.join_with(&odot(c, &pair)?)?;
    }
    Ok(acc)
}

/// Outcome of one verification run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Pass,
    Fail,
}

/// Structured result of a single check on a pair of lattices.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub pair: [String; 2],
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub sizes: BTreeMap<String, usize>,
    pub law: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }
}

pub(crate) fn report(
    check: &str,
    pair: (&str, &str),
    law: &str,
    sizes: BTreeMap<String, usize>,
    failure: Option<String>,
) -> Report {
    Report {
        check: check.to_string(),
        pair: [pair.0.to_string(), pair.1.to_string()],
        status: if failure.is_none() {
            ReportStatus::Pass
        } else {
            ReportStatus::Fail
        },
        witness: failure,
        sizes,
        law: law.to_string(),
    }
}

struct EpsilonRun {
    ct: CongruenceTensor,
    images: Vec<LatticeCongruence>,
    sizes: BTreeMap<String, usize>,
}

fn epsilon_run(c: &SubTensorProduct, guard: usize) -> Result<EpsilonRun> {
    let a = &c.factor_a_lattice;
    let b = &c.factor_b_lattice;
    let ct = congruence_tensor(a, b, guard)?;
    let mut odots: Vec<Vec<LatticeCongruence>> = Vec::with_capacity(ct.con_a.size());
    for alpha in ct.con_a.members() {
        let mut row = Vec::with_capacity(ct.con_b.size());
        for beta in ct.con_b.members() {
            let pair = CongruencePair::new(c, alpha.clone(), beta.clone())?;
            row.push(odot(c, &pair)?);
        }
        odots.push(row);
    }
    let images: Vec<LatticeCongruence> = (0..ct.size())
        .map(|xi| {
            let mut acc = LatticeCongruence::equality(c.lattice().clone());
            for &(i, j) in ct.tensor.cap(xi) {
                acc = acc.join_with(&odots[i][j]).expect("same carrier");
            }
            acc
        })
        .collect();
    let mut sizes = BTreeMap::new();
    sizes.insert("a".to_string(), a.size());
    sizes.insert("b".to_string(), b.size());
    sizes.insert("tensor".to_string(), c.size());
    sizes.insert("con_a".to_string(), ct.con_a.size());
    sizes.insert("con_b".to_string(), ct.con_b.size());
    sizes.insert("congruence_tensor".to_string(), ct.size());
    Ok(EpsilonRun { ct, images, sizes })
}

fn embedding_failure(c: &SubTensorProduct, run: &EpsilonRun) -> Option<String> {
    let ct = &run.ct;
    let images = &run.images;
    let zero = ct.tensor.zero();
    if images[zero].num_blocks() != c.size() {
        return Some("the bottom element does not map to the equality congruence".to_string());
    }
    for xi in 0..ct.size() {
        for xj in 0..ct.size() {
            let joined = partition::join(images[xi].block_of(), images[xj].block_of());
            if joined != images[ct.tensor.join(xi, xj)].block_of() {
                return Some(format!(
                    "join not preserved at elements {} and {}",
                    ct.tensor.label(xi),
                    ct.tensor.label(xj)
                ));
            }
        }
    }
    let mut seen: HashMap<&[usize], usize> = HashMap::new();
    for xi in 0..ct.size() {
        if let Some(&xj) = seen.get(images[xi].block_of()) {
            return Some(format!(
                "not injective: elements {} and {} share an image",
                ct.tensor.label(xj),
                ct.tensor.label(xi)
            ));
        }
        seen.insert(images[xi].block_of(), xi);
    }
    None
}

/// Check that the natural map from the congruence tensor into the
/// congruences of the sub-tensor product is a `{v,0}`-embedding.
pub fn verify_embedding(pair: (&str, &str), c: &SubTensorProduct, guard: usize) -> Result<Report> {
    let run = epsilon_run(c, guard)?;
    Ok(report(
        "embedding",
        pair,
        "the natural map from Con_c A ⊗ Con_c B into Con_c of the tensor is a {∨,0}-embedding",
        run.sizes.clone(),
        embedding_failure(c, &run),
    ))
}

fn capped_failure(c: &SubTensorProduct) -> Option<String> {
    // every member must be a union of pure tensors; with bi-ideal members
    // the cap cells already witness this
    for pos in 0..c.size() {
        let idx = c.algebra_index(pos);
        let mut covered = c.algebra.element(c.algebra.zero()).grid().clone();
        for &(x, y) in c.algebra.cap(idx) {
            covered.or_assign(c.algebra.element(c.algebra.pure(x, y)).grid());
        }
        if &covered != c.element(pos).grid() {
            return Some(format!(
                "member {} is not a union of pure tensors",
                c.algebra.label(idx)
            ));
        }
    }
    None
}

/// Check that the natural map is an isomorphism onto the congruence
/// semilattice of the sub-tensor product: the embedding checks plus the
/// cappedness of every member and surjectivity by exhaustive matching of
/// both enumerated sides.
pub fn verify_isomorphism(
    pair: (&str, &str),
    c: &SubTensorProduct,
    guard: usize,
) -> Result<Report> {
    let run = epsilon_run(c, guard)?;
    let con_c = congruence_lattice(c.lattice());
    let mut sizes = run.sizes.clone();
    sizes.insert("con_tensor".to_string(), con_c.size());
    let failure = capped_failure(c)
        .or_else(|| embedding_failure(c, &run))
        .or_else(|| {
            for (xi, image) in run.images.iter().enumerate() {
                if con_c.index_of_partition(image.block_of()).is_none() {
                    return Some(format!(
                        "image of {} is not a congruence of the tensor",
                        run.ct.tensor.label(xi)
                    ));
                }
            }
            if run.images.len() != con_c.size() {
                return Some(format!(
                    "not surjective: {} images against {} congruences",
                    run.images.len(),
                    con_c.size()
                ));
            }
            None
        });
    Ok(report(
        "isomorphism",
        pair,
        "the natural map from Con_c A ⊗ Con_c B onto Con_c of the tensor is an isomorphism",
        sizes,
        failure,
    ))
}

/// Check that tensoring the canonical projections factors into an
/// isomorphism from the tensor modulo the box congruence onto the tensor of
/// the two quotients.
pub fn verify_quotient_factorization(
    pair: (&str, &str),
    alpha: &LatticeCongruence,
    beta: &LatticeCongruence,
    guard: usize,
) -> Result<Report> {
    let a = alpha.carrier();
    let b = beta.carrier();
    let t = tensor_product(
        &FinJoinSemilattice::join_reduct(a),
        &FinJoinSemilattice::join_reduct(b),
        guard,
    )?;
    let c = full_sub_tensor_product(&t);
    let p = CongruencePair::new(&c, alpha.clone(), beta.clone())?;
    let boxed = box_congruence(&c, &p)?;
    let (quotient, _) = boxed.quotient();
    let rhs = tensor_product(
        &FinJoinSemilattice::join_reduct(&alpha.quotient()),
        &FinJoinSemilattice::join_reduct(&beta.quotient()),
        guard,
    )?;
    let mut sizes = BTreeMap::new();
    sizes.insert("tensor".to_string(), t.size());
    sizes.insert("quotient".to_string(), quotient.size());
    sizes.insert("factored".to_string(), rhs.size());
    let failure = match are_isomorphic(&quotient, rhs.join_carrier()) {
        Some(_) => None,
        None => Some("the quotient and the tensor of the quotients are not isomorphic".to_string()),
    };
    Ok(report(
        "quotient-factorization",
        pair,
        "the tensor of the canonical projections factors into an isomorphism from the tensor modulo the box congruence onto the tensor of the quotients",
        sizes,
        failure,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::grid::OpTable;

    const GUARD: usize = 1 << 14;

    fn reduct(name: &str) -> FinJoinSemilattice {
        FinJoinSemilattice::join_reduct(&catalog(name).unwrap())
    }

    fn full(name_a: &str, name_b: &str) -> SubTensorProduct {
        let t = tensor_product(&reduct(name_a), &reduct(name_b), GUARD).unwrap();
        full_sub_tensor_product(&t)
    }

    #[test]
    fn full_subset_validates_and_pure_only_fails() {
        for (na, nb) in [("chain:2", "chain:2"), ("M3", "chain:3"), ("N5", "bool:2")] {
            let t = tensor_product(&reduct(na), &reduct(nb), GUARD).unwrap();
            let all: Vec<usize> = (0..t.size()).collect();
            assert!(is_sub_tensor_product(&t, &all), "{na} (x) {nb}");
        }
        let t = tensor_product(&reduct("bool:2"), &reduct("bool:2"), GUARD).unwrap();
        let pures: Vec<usize> = {
            let mut v: Vec<usize> = (0..4)
                .flat_map(|x| (0..4).map(move |y| (x, y)))
                .map(|(x, y)| t.pure(x, y))
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        assert!(!is_sub_tensor_product(&t, &pures));
        // dropping a mixed tensor from the full set fails condition (i)
        let mixed =
            crate::tensor::mixed_tensor(t.factor_a(), t.factor_b(), (1, 3), (3, 1)).unwrap();
        let mixed_idx = t.element_index(mixed.grid()).unwrap();
        let without: Vec<usize> = (0..t.size()).filter(|&i| i != mixed_idx).collect();
        assert!(matches!(
            sub_tensor_product(&t, &without),
            Err(Error::NotASubTensorProduct(_))
        ));
    }

    #[test]
    fn box_congruence_extremes() {
        let c = full("chain:3", "chain:2");
        assert_eq!(c.size(), 3);
        let alat = c.factor_a_lattice().clone();
        let blat = c.factor_b_lattice().clone();
        let omega = CongruencePair::new(
            &c,
            LatticeCongruence::equality(alat.clone()),
            LatticeCongruence::equality(blat.clone()),
        )
        .unwrap();
        assert_eq!(box_congruence(&c, &omega).unwrap().num_blocks(), c.size());
        let iota = CongruencePair::new(
            &c,
            LatticeCongruence::total(alat.clone()),
            LatticeCongruence::total(blat.clone()),
        )
        .unwrap();
        assert_eq!(box_congruence(&c, &iota).unwrap().num_blocks(), 1);
        // collapsing the top edge of chain:3 merges exactly the top two members
        let theta = LatticeCongruence::principal(&alat, 1, 2);
        let p = CongruencePair::new(&c, theta, LatticeCongruence::equality(blat)).unwrap();
        let boxed = box_congruence(&c, &p).unwrap();
        assert_eq!(boxed.num_blocks(), 2);
        assert!(boxed.same_block(1, 2));
        assert!(!boxed.same_block(0, 1));
    }

    #[test]
    fn epsilon_extremes() {
        let c = full("M3", "chain:3");
        let alat = c.factor_a_lattice().clone();
        let ea_omega = epsilon_a(&c, &LatticeCongruence::equality(alat.clone())).unwrap();
        assert_eq!(ea_omega.num_blocks(), c.size());
        let ea_iota = epsilon_a(&c, &LatticeCongruence::total(alat)).unwrap();
        assert_eq!(ea_iota.num_blocks(), 1);
        let blat = c.factor_b_lattice().clone();
        let eb_iota = epsilon_b(&c, &LatticeCongruence::total(blat)).unwrap();
        assert_eq!(eb_iota.num_blocks(), 1);
    }

    #[test]
    fn epsilon_respects_joins() {
        let c = full("chain:3", "chain:3");
        let alat = c.factor_a_lattice().clone();
        let con_a = congruence_lattice(&alat);
        for a0 in con_a.members() {
            for a1 in con_a.members() {
                let joined = a0.join_with(a1).unwrap();
                let lhs = epsilon_a(&c, &joined).unwrap();
                let rhs = epsilon_a(&c, a0)
                    .unwrap()
                    .join_with(&epsilon_a(&c, a1).unwrap())
                    .unwrap();
                assert_eq!(lhs.block_of(), rhs.block_of());
            }
        }
    }

    #[test]
    fn odot_absorbs_and_meets() {
        let c = full("chain:3", "chain:3");
        let alat = c.factor_a_lattice().clone();
        let blat = c.factor_b_lattice().clone();
        let omega_a = LatticeCongruence::equality(alat.clone());
        let iota_a = LatticeCongruence::total(alat.clone());
        let iota_b = LatticeCongruence::total(blat.clone());
        let p = CongruencePair::new(&c, omega_a, iota_b.clone()).unwrap();
        assert_eq!(odot(&c, &p).unwrap().num_blocks(), c.size());
        let q = CongruencePair::new(&c, iota_a, iota_b).unwrap();
        assert_eq!(odot(&c, &q).unwrap().num_blocks(), 1);
    }

    #[test]
    fn odot_of_principal_pairs_is_the_principal_formula() {
        for (na, nb) in [("chain:3", "chain:3"), ("M3", "chain:3")] {
            let c = full(na, nb);
            let alat = c.factor_a_lattice().clone();
            let blat = c.factor_b_lattice().clone();
            for a0 in 0..alat.size() {
                for a1 in 0..alat.size() {
                    if !alat.leq(a0, a1) {
                        continue;
                    }
                    for b0 in 0..blat.size() {
                        for b1 in 0..blat.size() {
                            if !blat.leq(b0, b1) {
                                continue;
                            }
                            let p = CongruencePair::new(
                                &c,
                                LatticeCongruence::principal(&alat, a0, a1),
                                LatticeCongruence::principal(&blat, b0, b1),
                            )
                            .unwrap();
                            let lhs = odot(&c, &p).unwrap();
                            let u = c.lattice().join(c.pure(a0, b1), c.pure(a1, b0));
                            let v = c.pure(a1, b1);
                            let rhs = LatticeCongruence::principal(c.lattice(), u, v);
                            assert_eq!(lhs, rhs, "{na} (x) {nb} at {a0},{a1},{b0},{b1}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projection_congruence_extremes() {
        let c = full("M3", "chain:3");
        let gamma_top = LatticeCongruence::total(c.lattice().clone());
        let gamma_bot = LatticeCongruence::equality(c.lattice().clone());
        let proj_top = projection_congruence(&c, &gamma_top, 0, 2).unwrap();
        assert_eq!(proj_top.num_blocks(), 1);
        let proj_bot = projection_congruence(&c, &gamma_bot, 0, 2).unwrap();
        assert_eq!(proj_bot.num_blocks(), c.factor_a_lattice().size());
        // with b = b1 both sides of the defining equation coincide
        let proj_same = projection_congruence(&c, &gamma_bot, 1, 1).unwrap();
        assert_eq!(proj_same.num_blocks(), 1);
        assert!(matches!(
            projection_congruence(&c, &gamma_bot, 2, 0),
            Err(Error::NotComparable { .. })
        ));
    }

    #[test]
    fn epsilon_map_bottom_and_pure() {
        let a = catalog("chain:3").unwrap();
        let b = catalog("chain:3").unwrap();
        let c = full("chain:3", "chain:3");
        let ct = congruence_tensor(&a, &b, GUARD).unwrap();
        let bottom = epsilon_map(&c, &ct, ct.tensor().zero()).unwrap();
        assert_eq!(bottom.num_blocks(), c.size());
        for i in 0..ct.con_a().size() {
            for j in 0..ct.con_b().size() {
                let xi = ct.tensor().pure(i, j);
                let via_map = epsilon_map(&c, &ct, xi).unwrap();
                let pair = CongruencePair::new(
                    &c,
                    ct.con_a().member(i).clone(),
                    ct.con_b().member(j).clone(),
                )
                .unwrap();
                assert_eq!(via_map, odot(&c, &pair).unwrap());
            }
        }
    }

    #[test]
    fn epsilon_map_is_cap_independent() {
        let a = catalog("M3").unwrap();
        let b = catalog("chain:3").unwrap();
        let c = full("M3", "chain:3");
        let ct = congruence_tensor(&a, &b, GUARD).unwrap();
        let nabla = crate::tensor::nabla(ct.tensor().factor_a(), ct.tensor().factor_b());
        for xi in 0..ct.size() {
            // the full off-axis cell set of an element is always a valid cap
            let fat: Vec<(usize, usize)> = ct
                .tensor()
                .element(xi)
                .cells()
                .into_iter()
                .filter(|&(x, y)| !nabla.contains(x, y))
                .collect();
            let via_min = epsilon_map(&c, &ct, xi).unwrap();
            let via_fat = epsilon_map_with_cap(&c, &ct, &fat).unwrap();
            assert_eq!(via_min, via_fat);
        }
    }

    #[test]
    fn epsilon_map_lifts_the_odot_bimorphism() {
        // the natural map is exactly the universal lift of the odot table
        let a = catalog("chain:3").unwrap();
        let b = catalog("chain:2").unwrap();
        let c = full("chain:3", "chain:2");
        let ct = congruence_tensor(&a, &b, GUARD).unwrap();
        let con_c = congruence_lattice(c.lattice());
        let table = OpTable::from_fn(ct.con_a().size(), ct.con_b().size(), |i, j| {
            let pair = CongruencePair::new(
                &c,
                ct.con_a().member(i).clone(),
                ct.con_b().member(j).clone(),
            )
            .unwrap();
            con_c.index_of(&odot(&c, &pair).unwrap()).unwrap()
        });
        let lift =
            crate::tensor::lift_bimorphism(ct.tensor(), &con_c.join_semilattice(), &table).unwrap();
        for xi in 0..ct.size() {
            let image = epsilon_map(&c, &ct, xi).unwrap();
            assert_eq!(con_c.index_of(&image), Some(lift.apply(xi)));
        }
    }

    #[test]
    fn embedding_and_isomorphism_reports_pass() {
        for (na, nb) in [("chain:3", "chain:3"), ("M3", "chain:3"), ("M3", "M3")] {
            let c = full(na, nb);
            let emb = verify_embedding((na, nb), &c, GUARD).unwrap();
            assert!(emb.passed(), "{na} (x) {nb}: {:?}", emb.witness);
            let iso = verify_isomorphism((na, nb), &c, GUARD).unwrap();
            assert!(iso.passed(), "{na} (x) {nb}: {:?}", iso.witness);
            assert_eq!(iso.sizes["congruence_tensor"], iso.sizes["con_tensor"]);
        }
    }

    #[test]
    fn simple_factor_pair_matches_expected_sizes() {
        let c = full("M3", "chain:3");
        let iso = verify_isomorphism(("M3", "chain:3"), &c, GUARD).unwrap();
        assert!(iso.passed());
        // M3 is simple, so the congruence tensor collapses onto Con chain:3
        assert_eq!(iso.sizes["con_a"], 2);
        assert_eq!(iso.sizes["con_b"], 4);
        assert_eq!(iso.sizes["congruence_tensor"], 4);
        assert_eq!(iso.sizes["con_tensor"], 4);
    }

    #[test]
    fn quotient_factorization_reports() {
        let a = catalog("chain:3").unwrap();
        let b = catalog("chain:3").unwrap();
        let alpha = LatticeCongruence::principal(&a, 0, 1);
        let beta = LatticeCongruence::equality(b.clone());
        let r =
            verify_quotient_factorization(("chain:3", "chain:3"), &alpha, &beta, GUARD).unwrap();
        assert!(r.passed(), "{:?}", r.witness);
        assert_eq!(r.sizes["quotient"], 3);
        assert_eq!(r.sizes["factored"], 3);
        let total = verify_quotient_factorization(
            ("chain:3", "chain:3"),
            &LatticeCongruence::total(a.clone()),
            &LatticeCongruence::total(b.clone()),
            GUARD,
        )
        .unwrap();
        assert!(total.passed());
        assert_eq!(total.sizes["quotient"], 1);
    }

    #[test]
    fn report_serialization_shape() {
        let c = full("chain:2", "chain:2");
        let r = verify_isomorphism(("chain:2", "chain:2"), &c, GUARD).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["check"], "isomorphism");
        assert_eq!(json["status"], "pass");
        assert_eq!(json["pair"][0], "chain:2");
        assert!(json.get("witness").is_none());
        assert_eq!(json["sizes"]["tensor"], 2);
    }
}
