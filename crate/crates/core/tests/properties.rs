//! Randomized law checks: structures drawn from the catalog with random
//! cell sets, partitions, and maps thrown at the invariants the unit tests
//! probe pointwise.

use proptest::prelude::*;

use tensorlat_core::catalog::catalog;
use tensorlat_core::congruence::{congruence_lattice, LatticeCongruence};
use tensorlat_core::json::{parse_lattice_document, LatticeDoc};
use tensorlat_core::oracle;
use tensorlat_core::semilattice::SemilatticeMap;
use tensorlat_core::tensor::{biideal_generate, is_biideal, minimal_cap, tensor_product};
use tensorlat_core::{FinJoinSemilattice, JoinCongruence};

const GUARD: usize = 1 << 14;

fn catalog_name() -> impl Strategy<Value = String> {
    prop_oneof![
        (1usize..=5).prop_map(|n| format!("chain:{n}")),
        (1usize..=2).prop_map(|n| format!("bool:{n}")),
        (3usize..=5).prop_map(|k| format!("Mn:{k}")),
        Just("M3".to_string()),
        Just("N5".to_string()),
    ]
}

fn small_pair() -> impl Strategy<Value = (String, String)> {
    let small = prop_oneof![
        (1usize..=4).prop_map(|n| format!("chain:{n}")),
        Just("bool:2".to_string()),
        Just("M3".to_string()),
    ];
    (small.clone(), small)
}

fn reduct(name: &str) -> FinJoinSemilattice {
    FinJoinSemilattice::join_reduct(&catalog(name).unwrap())
}

proptest! {
    // any cell set generates a valid bi-ideal, and its minimal cap
    // regenerates the same bi-ideal
    #[test]
    fn generated_biideals_are_sound((na, nb) in small_pair(), seed in any::<u64>()) {
        let a = reduct(&na);
        let b = reduct(&nb);
        let mut cells = Vec::new();
        let mut state = seed;
        for x in 0..a.size() {
            for y in 0..b.size() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 63 == 1 {
                    cells.push((x, y));
                }
            }
        }
        let i = biideal_generate(&a, &b, &cells).unwrap();
        prop_assert!(is_biideal(&a, &b, i.grid()));
        let cap = minimal_cap(&a, &b, &i);
        let back = biideal_generate(&a, &b, &cap).unwrap();
        prop_assert_eq!(back.grid(), i.grid());
    }

    // the join table of a tensor dominates both arguments, and meet is
    // the largest common lower bound
    #[test]
    fn tensor_tables_are_lattice_orders((na, nb) in small_pair(), i in 0usize..64, j in 0usize..64) {
        let t = tensor_product(&reduct(&na), &reduct(&nb), GUARD).unwrap();
        let (i, j) = (i % t.size(), j % t.size());
        let join = t.join(i, j);
        prop_assert!(t.leq(i, join) && t.leq(j, join));
        let meet = t.meet(i, j);
        prop_assert!(t.leq(meet, i) && t.leq(meet, j));
        for k in 0..t.size() {
            if t.leq(i, k) && t.leq(j, k) {
                prop_assert!(t.leq(join, k));
            }
            if t.leq(k, i) && t.leq(k, j) {
                prop_assert!(t.leq(k, meet));
            }
        }
    }

    // a random partition loads as a join congruence exactly when the
    // brute-force enumeration lists it
    #[test]
    fn congruence_validation_matches_enumeration(name in catalog_name(), raw in proptest::collection::vec(0usize..5, 1..8)) {
        let s = reduct(&name);
        let mut block_of: Vec<usize> = (0..s.size()).map(|i| raw[i % raw.len()] % s.size().max(1)).collect();
        // renumber by first occurrence so equality against the oracle works
        let mut remap = std::collections::HashMap::new();
        for b in block_of.iter_mut() {
            let next = remap.len();
            *b = *remap.entry(*b).or_insert(next);
        }
        let listed = oracle::join_congruences(&s).contains(&block_of);
        let loaded = JoinCongruence::new(s.clone(), block_of).is_ok();
        prop_assert_eq!(loaded, listed);
    }

    // quotient then kernel returns the congruence it started from
    #[test]
    fn quotient_kernel_round_trip(name in catalog_name(), pick in any::<prop::sample::Index>()) {
        let s = reduct(&name);
        let all = oracle::join_congruences(&s);
        let block_of = all[pick.index(all.len())].clone();
        let theta = JoinCongruence::new(s, block_of.clone()).unwrap();
        let (_, projection) = theta.quotient();
        let kernel = projection.kernel();
        prop_assert_eq!(kernel.block_of(), block_of.as_slice());
    }

    // principal congruences are minimal among the collapses
    #[test]
    fn principal_is_least_collapse(name in catalog_name(), x in 0usize..16, y in 0usize..16) {
        let l = catalog(&name).unwrap();
        let (x, y) = (x % l.size(), y % l.size());
        let principal = LatticeCongruence::principal(&l, x, y);
        prop_assert!(principal.same_block(x, y));
        for theta in congruence_lattice(&l).members() {
            if theta.same_block(x, y) {
                prop_assert!(principal.is_finer_than(theta).unwrap());
            }
        }
    }

    // a lattice survives the JSON document round trip unchanged
    #[test]
    fn document_round_trip(name in catalog_name()) {
        let l = catalog(&name).unwrap();
        let text = serde_json::to_string(&LatticeDoc::from_lattice(&name, &l)).unwrap();
        prop_assert_eq!(parse_lattice_document(&text).unwrap(), l);
    }

    // random join homomorphisms validate, and the L-property implies the
    // lower-bound refinement on every image pair
    #[test]
    fn l_homomorphism_definition_agrees((na, nb) in small_pair(), pick in any::<prop::sample::Index>()) {
        let s = reduct(&na);
        let t = reduct(&nb);
        let homs = tensorlat_core::semilattice::join_homomorphisms(&s, &t);
        let image = homs[pick.index(homs.len())].clone();
        let m = SemilatticeMap::new(s.clone(), t.clone(), image).unwrap();
        let refined = (0..s.size()).all(|a0| (0..s.size()).all(|a1| {
            (0..t.size()).all(|b| {
                !(t.leq(b, m.apply(a0)) && t.leq(b, m.apply(a1)))
                    || (0..s.size()).any(|x| {
                        s.leq(x, a0) && s.leq(x, a1) && t.leq(b, m.apply(x))
                    })
            })
        }));
        prop_assert_eq!(m.is_l_homomorphism(), refined);
    }
}
