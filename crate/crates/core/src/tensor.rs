//! Bi-ideals of a product of two finite join-semilattices with zero, and the
//! tensor product built from them.
//!
//! A bi-ideal of `A x B` is a subset that is hereditary (downward closed in
//! the componentwise order), contains both axes, and is closed under joining
//! two cells that agree in one coordinate.  The pure tensor `a (x) b` is the
//! least bi-ideal containing the cell `(a, b)`.  Over finite factors every
//! bi-ideal is a finite join of pure tensors, so closing the pure tensors
//! under binary join enumerates the whole tensor product, which is then a
//! finite lattice ordered by containment.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grid::{BitGrid, OpTable};
use crate::lattice::FinLattice;
use crate::poset::FinPoset;
use crate::semilattice::{FinJoinSemilattice, SemilatticeMap};

/// One bi-ideal, stored as its membership grid: rows index the first factor,
/// columns the second, both in carrier order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiIdeal {
    grid: BitGrid,
}

impl BiIdeal {
    pub fn grid(&self) -> &BitGrid {
        &self.grid
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.grid.get(a, b)
    }

    /// Member cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.grid.iter_ones().collect()
    }
}

fn check_index(i: usize, size: usize) -> Result<()> {
    if i >= size {
        return Err(Error::IndexOutOfRange { index: i, size });
    }
    Ok(())
}

fn check_dims(a: &FinJoinSemilattice, b: &FinJoinSemilattice, g: &BitGrid) -> Result<()> {
    if g.rows() != a.size() || g.cols() != b.size() {
        return Err(Error::DimensionMismatch);
    }
    Ok(())
}

fn nabla_grid(a: &FinJoinSemilattice, b: &FinJoinSemilattice) -> BitGrid {
    let mut g = BitGrid::new(a.size(), b.size());
    for x in 0..a.size() {
        g.set(x, b.zero(), true);
    }
    for y in 0..b.size() {
        g.set(a.zero(), y, true);
    }
    g
}

/// The union of the two axes: `(A x {0}) u ({0} x B)`.  Bottom element of
/// every tensor algebra over `(A, B)`.
pub fn nabla(a: &FinJoinSemilattice, b: &FinJoinSemilattice) -> BiIdeal {
    BiIdeal {
        grid: nabla_grid(a, b),
    }
}

/// The pure tensor of two elements: the axes together with the full lower
/// rectangle `{(u, v) : u <= x, v <= y}`.
pub fn pure_tensor(
    a: &FinJoinSemilattice,
    b: &FinJoinSemilattice,
    x: usize,
    y: usize,
) -> Result<BiIdeal> {
    check_index(x, a.size())?;
    check_index(y, b.size())?;
    let mut g = nabla_grid(a, b);
    for u in 0..a.size() {
        if !a.leq(u, x) {
            continue;
        }
        for v in 0..b.size() {
            if b.leq(v, y) {
                g.set(u, v, true);
            }
        }
    }
    Ok(BiIdeal { grid: g })
}

/// Does the grid satisfy all three bi-ideal conditions?  Full scan, used as
/// the soundness check for the closure machinery.
pub fn is_biideal(a: &FinJoinSemilattice, b: &FinJoinSemilattice, g: &BitGrid) -> bool {
    if g.rows() != a.size() || g.cols() != b.size() {
        return false;
    }
    if !nabla_grid(a, b).is_subset_of(g) {
        return false;
    }
    // hereditary
    for (x, y) in g.iter_ones() {
        for u in 0..a.size() {
            if !a.leq(u, x) {
                continue;
            }
            for v in 0..b.size() {
                if b.leq(v, y) && !g.get(u, v) {
                    return false;
                }
            }
        }
    }
    // lateral joins
    for y in 0..b.size() {
        let xs: Vec<usize> = (0..a.size()).filter(|&x| g.get(x, y)).collect();
        for (i, &x0) in xs.iter().enumerate() {
            for &x1 in &xs[i + 1..] {
                if !g.get(a.join(x0, x1), y) {
                    return false;
                }
            }
        }
    }
    for x in 0..a.size() {
        let ys: Vec<usize> = (0..b.size()).filter(|&y| g.get(x, y)).collect();
        for (i, &y0) in ys.iter().enumerate() {
            for &y1 in &ys[i + 1..] {
                if !g.get(x, b.join(y0, y1)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Shared closure context: the axes plus one lower rectangle per cell.
struct TensorCtx<'x> {
    a: &'x FinJoinSemilattice,
    b: &'x FinJoinSemilattice,
    nabla: BitGrid,
    rect: Vec<Vec<BitGrid>>,
}

impl<'x> TensorCtx<'x> {
    fn new(a: &'x FinJoinSemilattice, b: &'x FinJoinSemilattice) -> Self {
        let down_a: Vec<Vec<usize>> = (0..a.size())
            .map(|x| (0..a.size()).filter(|&u| a.leq(u, x)).collect())
            .collect();
        let down_b: Vec<Vec<usize>> = (0..b.size())
            .map(|y| (0..b.size()).filter(|&v| b.leq(v, y)).collect())
            .collect();
        let rect = (0..a.size())
            .map(|x| {
                (0..b.size())
                    .map(|y| {
                        let mut g = BitGrid::new(a.size(), b.size());
                        for &u in &down_a[x] {
                            for &v in &down_b[y] {
                                g.set(u, v, true);
                            }
                        }
                        g
                    })
                    .collect()
            })
            .collect();
        TensorCtx {
            a,
            b,
            nabla: nabla_grid(a, b),
            rect,
        }
    }

    fn pure(&self, x: usize, y: usize) -> BitGrid {
        self.nabla.union(&self.rect[x][y])
    }

    /// Least bi-ideal containing `g`: add the axes, then alternate a
    /// hereditary pass and a lateral-join pass until nothing changes.
    fn close(&self, mut g: BitGrid) -> BitGrid {
        g.or_assign(&self.nabla);
        loop {
            let before = g.clone();
            for (x, y) in before.iter_ones() {
                g.or_assign(&self.rect[x][y]);
            }
            for y in 0..self.b.size() {
                let xs: Vec<usize> = (0..self.a.size()).filter(|&x| g.get(x, y)).collect();
                for (i, &x0) in xs.iter().enumerate() {
                    for &x1 in &xs[i + 1..] {
                        g.set(self.a.join(x0, x1), y, true);
                    }
                }
            }
            for x in 0..self.a.size() {
                let ys: Vec<usize> = (0..self.b.size()).filter(|&y| g.get(x, y)).collect();
                for (i, &y0) in ys.iter().enumerate() {
                    for &y1 in &ys[i + 1..] {
                        g.set(x, self.b.join(y0, y1), true);
                    }
                }
            }
            if g == before {
                debug_assert!(is_biideal(self.a, self.b, &g));
                return g;
            }
        }
    }
}

/// Least bi-ideal containing the given cells.
pub fn biideal_generate(
    a: &FinJoinSemilattice,
    b: &FinJoinSemilattice,
    cells: &[(usize, usize)],
) -> Result<BiIdeal> {
    let mut g = BitGrid::new(a.size(), b.size());
    for &(x, y) in cells {
        check_index(x, a.size())?;
        check_index(y, b.size())?;
        g.set(x, y, true);
    }
    Ok(BiIdeal {
        grid: TensorCtx::new(a, b).close(g),
    })
}

/// Join of two bi-ideals: the closure of their union.
pub fn biideal_join(
    a: &FinJoinSemilattice,
    b: &FinJoinSemilattice,
    i: &BiIdeal,
    j: &BiIdeal,
) -> Result<BiIdeal> {
    check_dims(a, b, &i.grid)?;
    check_dims(a, b, &j.grid)?;
    Ok(BiIdeal {
        grid: TensorCtx::new(a, b).close(i.grid.union(&j.grid)),
    })
}

/// Meet of two bi-ideals: the plain intersection, which is again a bi-ideal.
pub fn biideal_meet(i: &BiIdeal, j: &BiIdeal) -> Result<BiIdeal> {
    if !i.grid.same_shape(&j.grid) {
        return Err(Error::DimensionMismatch);
    }
    Ok(BiIdeal {
        grid: i.grid.intersection(&j.grid),
    })
}

/// Join of two pure tensors whose coordinates are oppositely comparable.
/// For such a pair the join is the plain union of the two pure tensors.
pub fn mixed_tensor(
    a: &FinJoinSemilattice,
    b: &FinJoinSemilattice,
    p0: (usize, usize),
    p1: (usize, usize),
) -> Result<BiIdeal> {
    let (a0, b0) = p0;
    let (a1, b1) = p1;
    check_index(a0, a.size())?;
    check_index(a1, a.size())?;
    check_index(b0, b.size())?;
    check_index(b1, b.size())?;
    let opposite = (a.leq(a0, a1) && b.leq(b1, b0)) || (a.leq(a1, a0) && b.leq(b0, b1));
    if !opposite {
        return Err(Error::NotComparablePair {
            a0: a.label(a0).to_string(),
            b0: b.label(b0).to_string(),
            a1: a.label(a1).to_string(),
            b1: b.label(b1).to_string(),
        });
    }
    let t0 = pure_tensor(a, b, a0, b0)?;
    let t1 = pure_tensor(a, b, a1, b1)?;
    let union = BiIdeal {
        grid: t0.grid.union(&t1.grid),
    };
    debug_assert_eq!(union, biideal_join(a, b, &t0, &t1).unwrap());
    Ok(union)
}

/// The maximal cells of `I` off the axes, in row-major order.  Regenerating
/// from these cells reproduces `I`, and no generating set off the axes can be
/// smaller.
pub fn minimal_cap(
    a: &FinJoinSemilattice,
    b: &FinJoinSemilattice,
    i: &BiIdeal,
) -> Vec<(usize, usize)> {
    let nab = nabla_grid(a, b);
    let off: Vec<(usize, usize)> = i
        .grid
        .iter_ones()
        .filter(|&(x, y)| !nab.get(x, y))
        .collect();
    off.iter()
        .copied()
        .filter(|&(x, y)| {
            !off.iter()
                .any(|&(u, v)| (u, v) != (x, y) && a.leq(x, u) && b.leq(y, v))
        })
        .collect()
}

/// The tensor product of two finite join-semilattices with zero: all
/// bi-ideals of `A x B`, ordered by containment.
///
/// Carries the factors, the canonically ordered element list, minimal caps,
/// the pure-tensor index table, and the element lattice.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    a: FinJoinSemilattice,
    b: FinJoinSemilattice,
    elements: Vec<BiIdeal>,
    caps: Vec<Vec<(usize, usize)>>,
    pure_index: OpTable,
    index: HashMap<BitGrid, usize>,
    lattice: FinLattice,
    join_carrier: FinJoinSemilattice,
}

/// Enumerate all bi-ideals of `A x B` by closing the pure tensors under
/// binary join.  Fails with `SizeGuardExceeded` once more than `guard`
/// elements have been found.
pub fn tensor_product(
    a: &FinJoinSemilattice,
    b: &FinJoinSemilattice,
    guard: usize,
) -> Result<TensorAlgebra> {
    let ctx = TensorCtx::new(a, b);
    let mut elements: Vec<BitGrid> = Vec::new();
    let mut index: HashMap<BitGrid, usize> = HashMap::new();
    let mut work: Vec<usize> = Vec::new();
    let push = |g: BitGrid,
                elements: &mut Vec<BitGrid>,
                index: &mut HashMap<BitGrid, usize>,
                work: &mut Vec<usize>|
     -> Result<()> {
        if !index.contains_key(&g) {
            index.insert(g.clone(), elements.len());
            work.push(elements.len());
            elements.push(g);
            if elements.len() > guard {
                return Err(Error::SizeGuardExceeded {
                    reached: elements.len(),
                    limit: guard,
                });
            }
        }
        Ok(())
    };
    for x in 0..a.size() {
        for y in 0..b.size() {
            push(ctx.pure(x, y), &mut elements, &mut index, &mut work)?;
        }
    }
    while let Some(i) = work.pop() {
        for j in 0..elements.len() {
            if i == j {
                continue;
            }
            let g = ctx.close(elements[i].union(&elements[j]));
            push(g, &mut elements, &mut index, &mut work)?;
        }
    }

    elements.sort_by(|g, h| g.canonical_cmp(h));
    let index: HashMap<BitGrid, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, g)| (g.clone(), i))
        .collect();
    debug_assert_eq!(elements[0], ctx.nabla);

    let elements: Vec<BiIdeal> = elements.into_iter().map(|grid| BiIdeal { grid }).collect();
    let caps: Vec<Vec<(usize, usize)>> = elements.iter().map(|e| minimal_cap(a, b, e)).collect();
    let pure_index = OpTable::from_fn(a.size(), b.size(), |x, y| index[&ctx.pure(x, y)]);

    let mut labels: Vec<String> = caps
        .iter()
        .map(|cap| {
            if cap.is_empty() {
                "∇".to_string()
            } else {
                cap.iter()
                    .map(|&(x, y)| format!("{}⊗{}", a.label(x), b.label(y)))
                    .collect::<Vec<_>>()
                    .join(" ∨ ")
            }
        })
        .collect();
    {
        let mut seen = std::collections::HashSet::new();
        if labels.iter().any(|l| !seen.insert(l.clone())) {
            labels = (0..elements.len()).map(|i| format!("t{i}")).collect();
        }
    }

    let n = elements.len();
    let mut leq = BitGrid::new(n, n);
    for i in 0..n {
        for j in 0..n {
            if elements[i].grid.is_subset_of(&elements[j].grid) {
                leq.set(i, j, true);
            }
        }
    }
    let poset = FinPoset::from_parts(labels, leq)?;
    let lattice = FinLattice::from_poset(poset)?;
    let join_carrier = FinJoinSemilattice::join_reduct(&lattice);

    Ok(TensorAlgebra {
        a: a.clone(),
        b: b.clone(),
        elements,
        caps,
        pure_index,
        index,
        lattice,
        join_carrier,
    })
}

impl TensorAlgebra {
    pub fn factor_a(&self) -> &FinJoinSemilattice {
        &self.a
    }

    pub fn factor_b(&self) -> &FinJoinSemilattice {
        &self.b
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &BiIdeal {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[BiIdeal] {
        &self.elements
    }

    pub fn element_index(&self, grid: &BitGrid) -> Option<usize> {
        self.index.get(grid).copied()
    }

    /// Index of the pure tensor `x (x) y`.
    pub fn pure(&self, x: usize, y: usize) -> usize {
        self.pure_index.get(x, y)
    }

    /// Minimal cap of element `i`.
    pub fn cap(&self, i: usize) -> &[(usize, usize)] {
        &self.caps[i]
    }

    pub fn label(&self, i: usize) -> &str {
        self.lattice.label(i)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.lattice.leq(i, j)
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.lattice.join(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.lattice.meet(i, j)
    }

    pub fn zero(&self) -> usize {
        self.lattice.zero()
    }

    pub fn one(&self) -> usize {
        self.lattice.one()
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.lattice.atoms()
    }

    /// The element lattice, ordered by containment.
    pub fn lattice(&self) -> &FinLattice {
        &self.lattice
    }

    /// The `{v,0}`-semilattice of elements under bi-ideal join.
    pub fn join_carrier(&self) -> &FinJoinSemilattice {
        &self.join_carrier
    }

    /// Rows of element `i` as 0/1 strings, one per first-factor element.
    pub fn element_rows(&self, i: usize) -> Vec<String> {
        let g = &self.elements[i].grid;
        (0..g.rows())
            .map(|r| {
                (0..g.cols())
                    .map(|c| if g.get(r, c) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

/// Turn a bimorphism table `A x B -> C` into the unique `{v,0}`-homomorphism
/// from the tensor product to `C` agreeing with it on pure tensors.
///
/// The table must kill both axes and preserve joins in each variable
/// separately; these laws are validated before lifting.  The lift sends a
/// bi-ideal to the join of the table over all its cells.
pub fn lift_bimorphism(
    t: &TensorAlgebra,
    c: &FinJoinSemilattice,
    table: &OpTable,
) -> Result<SemilatticeMap> {
    let (a, b) = (&t.a, &t.b);
    if table.rows() != a.size() || table.cols() != b.size() {
        return Err(Error::DimensionMismatch);
    }
    for x in 0..a.size() {
        for y in 0..b.size() {
            check_index(table.get(x, y), c.size())?;
        }
    }
    for x in 0..a.size() {
        if table.get(x, b.zero()) != c.zero() {
            return Err(Error::NotABimorphism(format!(
                "f({}, 0) is not 0",
                a.label(x)
            )));
        }
    }
    for y in 0..b.size() {
        if table.get(a.zero(), y) != c.zero() {
            return Err(Error::NotABimorphism(format!(
                "f(0, {}) is not 0",
                b.label(y)
            )));
        }
    }
    for x0 in 0..a.size() {
        for x1 in 0..a.size() {
            for y in 0..b.size() {
                if table.get(a.join(x0, x1), y) != c.join(table.get(x0, y), table.get(x1, y)) {
                    return Err(Error::NotABimorphism(format!(
                        "f({} ∨ {}, {}) differs from f({}, {}) ∨ f({}, {})",
                        a.label(x0),
                        a.label(x1),
                        b.label(y),
                        a.label(x0),
                        b.label(y),
                        a.label(x1),
                        b.label(y)
                    )));
                }
            }
        }
    }
    for y0 in 0..b.size() {
        for y1 in 0..b.size() {
            for x in 0..a.size() {
                if table.get(x, b.join(y0, y1)) != c.join(table.get(x, y0), table.get(x, y1)) {
                    return Err(Error::NotABimorphism(format!(
                        "f({}, {} ∨ {}) differs from f({}, {}) ∨ f({}, {})",
                        a.label(x),
                        b.label(y0),
                        b.label(y1),
                        a.label(x),
                        b.label(y0),
                        a.label(x),
                        b.label(y1)
                    )));
                }
            }
        }
    }
    let image: Vec<usize> = (0..t.size())
        .map(|i| c.join_many(t.elements[i].grid.iter_ones().map(|(x, y)| table.get(x, y))))
        .collect();
    SemilatticeMap::new(t.join_carrier.clone(), c.clone(), image)
}

/// The map `f (x) g` between tensor products induced by a pair of
/// L-homomorphisms on the factors.  The image of a bi-ideal `I` is the union
/// of the target axes with every cell lying below `(f(x), g(y))` for some
/// cell `(x, y)` of `I`.
pub fn tensor_of_maps(
    t: &TensorAlgebra,
    t2: &TensorAlgebra,
    f: &SemilatticeMap,
    g: &SemilatticeMap,
) -> Result<SemilatticeMap> {
    if f.source() != &t.a || g.source() != &t.b || f.target() != &t2.a || g.target() != &t2.b {
        return Err(Error::CarrierMismatch);
    }
    for (m, src, tgt) in [(f, &t.a, &t2.a), (g, &t.b, &t2.b)] {
        if let Some((a0, a1, w)) = m.l_homomorphism_witness() {
            return Err(Error::NotAnLHomomorphism {
                a0: src.label(a0).to_string(),
                a1: src.label(a1).to_string(),
                b: tgt.label(w).to_string(),
            });
        }
    }
    let image: Vec<usize> = (0..t.size())
        .map(|i| {
            let mut grid = t2.elements[t2.zero()].grid.clone();
            for &(x, y) in t.cap(i) {
                grid.or_assign(&t2.elements[t2.pure(f.apply(x), g.apply(y))].grid);
            }
            t2.element_index(&grid)
                .expect("image of a bi-ideal under an L-homomorphism pair is a bi-ideal")
        })
        .collect();
    SemilatticeMap::new(t.join_carrier.clone(), t2.join_carrier.clone(), image)
}
