//! Acceptance gate: thirteen end-to-end criteria over the standard catalog.
//! Each test prints exactly one line, `[acceptance] criterion NN <name>: PASS`
//! or `... FAIL`, then asserts.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use tensorlat_core::catalog::catalog;
use tensorlat_core::congruence::{congruence_lattice, is_simple, is_subdirectly_irreducible};
use tensorlat_core::iso::verify_witness;
use tensorlat_core::lattice::l_of_d;
use tensorlat_core::oracle;
use tensorlat_core::semilattice::join_homomorphisms;
use tensorlat_core::suite::{self, SuiteConfig};
use tensorlat_core::tensor::{nabla, tensor_product};
use tensorlat_core::theorems::{congruence_tensor, full_sub_tensor_product, verify_isomorphism};
use tensorlat_core::{
    are_isomorphic, BitGrid, FinJoinSemilattice, JoinCongruence, SemilatticeMap, TensorAlgebra,
};

const GUARD: usize = 100_000;
const CATALOG: [&str; 6] = ["chain:2", "chain:3", "chain:4", "bool:2", "M3", "N5"];

fn announce(num: usize, name: &str, pass: bool) {
    println!(
        "[acceptance] criterion {num:02} {name}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {num:02} {name} failed");
}

fn reduct(name: &str) -> FinJoinSemilattice {
    FinJoinSemilattice::join_reduct(&catalog(name).unwrap())
}

#[test]
fn criterion_01_isomorphism_theorem() {
    let start = Instant::now();
    let mut ok = true;
    for a in CATALOG {
        for b in CATALOG {
            let t = tensor_product(&reduct(a), &reduct(b), GUARD).unwrap();
            let c = full_sub_tensor_product(&t);
            let r = verify_isomorphism((a, b), &c, GUARD).unwrap();
            let ct = congruence_tensor(&catalog(a).unwrap(), &catalog(b).unwrap(), GUARD).unwrap();
            let con_t = congruence_lattice(t.lattice());
            ok &= r.passed() && ct.size() == con_t.size();
        }
    }
    ok &= start.elapsed() < Duration::from_secs(120);
    announce(1, "isomorphism theorem over the catalog", ok);
}

#[test]
fn criterion_02_simple_factor_collapse() {
    let mut ok = true;
    for d in ["chain:2", "chain:3", "chain:4", "bool:2"] {
        let t = tensor_product(&reduct("M3"), &reduct(d), GUARD).unwrap();
        let con_t = congruence_lattice(t.lattice()).to_lattice();
        let con_d = congruence_lattice(&catalog(d).unwrap()).to_lattice();
        match are_isomorphic(&con_t, &con_d) {
            Some(w) => ok &= verify_witness(&con_t, &con_d, &w),
            None => ok = false,
        }
    }
    announce(2, "congruences of M3 tensor D match D", ok);
}

#[test]
fn criterion_03_enumeration_oracle() {
    let reports = suite::check_enumeration_completeness(&SuiteConfig::default()).unwrap();
    let ok = reports.len() == 16 && reports.iter().all(|r| r.passed());
    announce(3, "bi-ideal enumeration equals subset filtering", ok);
}

#[test]
fn criterion_04_pure_tensor_identities() {
    let cfg = SuiteConfig::default();
    let laws = suite::check_pure_tensor_laws(&cfg).unwrap();
    let mixed = suite::check_mixed_distributive_law(&cfg).unwrap();
    let ok = laws.len() == 36
        && mixed.len() == 36
        && laws.iter().chain(mixed.iter()).all(|r| r.passed());
    announce(4, "meet, join, union, and distributive identities", ok);
}

#[test]
fn criterion_05_congruence_oracle() {
    let names = [
        "chain:1", "chain:2", "chain:3", "chain:4", "chain:5", "chain:6", "chain:7", "bool:1",
        "bool:2", "M3", "Mn:4", "Mn:5", "N5",
    ];
    let mut ok = true;
    for name in names {
        let l = catalog(name).unwrap();
        assert!(l.size() <= 7);
        let con = congruence_lattice(&l);
        let brute = oracle::lattice_congruences(&l);
        ok &= con.size() == brute.len();
        ok &= brute.iter().all(|p| con.index_of_partition(p).is_some());
        ok &= con.to_lattice().is_distributive();
    }
    announce(
        5,
        "congruence lattices match brute force and are distributive",
        ok,
    );
}

#[test]
fn criterion_06_lemma_battery() {
    let cfg = SuiteConfig::default();
    let mut reports = Vec::new();
    reports.extend(suite::check_principal_odot(&cfg).unwrap());
    reports.extend(suite::check_epsilon_homomorphism(&cfg).unwrap());
    reports.extend(suite::check_box_decomposition(&cfg).unwrap());
    reports.extend(suite::check_containment_criterion(&cfg).unwrap());
    reports.extend(suite::check_odot_bimorphism(&cfg).unwrap());
    let pairs: HashSet<[String; 2]> = reports.iter().map(|r| r.pair.clone()).collect();
    let ok = reports.len() == 10
        && reports.iter().all(|r| r.passed())
        && pairs.contains(&["chain:3".to_string(), "chain:3".to_string()])
        && pairs.contains(&["M3".to_string(), "chain:3".to_string()]);
    announce(
        6,
        "principal, epsilon, decomposition, and containment lemmas",
        ok,
    );
}

#[test]
fn criterion_07_distributivity_preservation() {
    let cfg = SuiteConfig::default();
    let reports = suite::check_distributivity_preservation(&cfg).unwrap();
    let mut ok = reports.len() == 16 && reports.iter().all(|r| r.passed());
    for b in CATALOG {
        let ct = congruence_tensor(&catalog("M3").unwrap(), &catalog(b).unwrap(), GUARD).unwrap();
        ok &= ct.tensor().join_carrier().is_distributive();
    }
    announce(7, "distributivity survives tensoring", ok);
}

#[test]
fn criterion_08_structure_transfer() {
    let cfg = SuiteConfig::default();
    let atom_reports = suite::check_atom_law(&cfg).unwrap();
    let mut ok = atom_reports.len() == 36 && atom_reports.iter().all(|r| r.passed());
    let m3m3 = tensor_product(&reduct("M3"), &reduct("M3"), GUARD).unwrap();
    ok &= is_simple(m3m3.lattice()).unwrap();
    let n5n5 = tensor_product(&reduct("N5"), &reduct("N5"), GUARD).unwrap();
    ok &= is_subdirectly_irreducible(n5n5.lattice()).unwrap();
    announce(
        8,
        "atoms, simplicity, and subdirect irreducibility transfer",
        ok,
    );
}

#[test]
fn criterion_09_rectangle_model() {
    let mut ok = true;
    for n in [1usize, 2] {
        let b = reduct(&format!("bool:{n}"));
        let t = tensor_product(&b, &b, GUARD).unwrap();
        let rect = oracle::rectangle_union_semilattice(n);
        match are_isomorphic(t.join_carrier(), &rect) {
            Some(w) => ok &= verify_witness(t.join_carrier(), &rect, &w),
            None => ok = false,
        }
    }
    announce(9, "boolean tensors are rectangle-union semilattices", ok);
}

#[test]
fn criterion_10_function_lattice_formulas() {
    let mut ok = true;
    for l in ["M3", "N5"] {
        for d in ["bool:2", "chain:3"] {
            let ll = catalog(l).unwrap();
            let ld = catalog(d).unwrap();
            let left = l_of_d(&ll, &ld, GUARD).unwrap();
            let t = tensor_product(
                &FinJoinSemilattice::join_reduct(&ll.dual()),
                &FinJoinSemilattice::join_reduct(&ld),
                GUARD,
            )
            .unwrap();
            let right = t.lattice().dual();
            match are_isomorphic(&left, &right) {
                Some(w) => ok &= verify_witness(&left, &right, &w),
                None => ok = false,
            }
            let con_left = congruence_lattice(&left).to_lattice();
            let con_right = l_of_d(
                &congruence_lattice(&ll).to_lattice(),
                &congruence_lattice(&ld).to_lattice(),
                GUARD,
            )
            .unwrap();
            match are_isomorphic(&con_left, &con_right) {
                Some(w) => ok &= verify_witness(&con_left, &con_right, &w),
                None => ok = false,
            }
        }
    }
    announce(
        10,
        "function lattices factor through duals and congruences",
        ok,
    );
}

fn injective_l_homs(s: &FinJoinSemilattice, t: &FinJoinSemilattice) -> Vec<Vec<usize>> {
    join_homomorphisms(s, t)
        .into_iter()
        .filter(|img| {
            let m = SemilatticeMap::new(s.clone(), t.clone(), img.clone()).unwrap();
            m.is_injective() && m.is_l_homomorphism()
        })
        .collect()
}

#[test]
fn criterion_11_kernel_law_and_embeddings() {
    let cfg = SuiteConfig::default();
    let reports = suite::check_kernel_law(&cfg).unwrap();
    let mut ok = reports.len() == 36
        && reports
            .iter()
            .all(|r| r.passed() && r.sizes["map_pairs"] > 0);

    // tensors of injective L-homomorphism pairs embed, preserving meets
    let reducts: Vec<FinJoinSemilattice> = CATALOG.iter().map(|n| reduct(n)).collect();
    let tensors: Vec<Vec<TensorAlgebra>> = reducts
        .iter()
        .map(|a| {
            reducts
                .iter()
                .map(|b| tensor_product(a, b, GUARD).unwrap())
                .collect()
        })
        .collect();
    let mut hom_cache: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
    for i in 0..reducts.len() {
        for j in 0..reducts.len() {
            hom_cache.insert((i, j), injective_l_homs(&reducts[i], &reducts[j]));
        }
    }
    let mut embeddings = 0usize;
    for (ia, _a) in reducts.iter().enumerate() {
        for (ib, _b) in reducts.iter().enumerate() {
            let t = &tensors[ia][ib];
            for (ia2, a2) in reducts.iter().enumerate() {
                for (ib2, b2) in reducts.iter().enumerate() {
                    let homs_a = &hom_cache[&(ia, ia2)];
                    let homs_b = &hom_cache[&(ib, ib2)];
                    if homs_a.is_empty() || homs_b.is_empty() {
                        continue;
                    }
                    let t2 = &tensors[ia2][ib2];
                    let (na2, nb2) = (a2.size(), b2.size());
                    let bottom = nabla(a2, b2);
                    let mut down_grid = Vec::with_capacity(na2 * nb2);
                    for x in 0..na2 {
                        for y in 0..nb2 {
                            let mut g = BitGrid::new(na2, nb2);
                            for u in 0..na2 {
                                for v in 0..nb2 {
                                    if a2.leq(u, x) && b2.leq(v, y) {
                                        g.set(u, v, true);
                                    }
                                }
                            }
                            down_grid.push(g);
                        }
                    }
                    for f in homs_a {
                        for g in homs_b {
                            let mut image = Vec::with_capacity(t.size());
                            for i in 0..t.size() {
                                let mut grid = bottom.grid().clone();
                                for &(x, y) in t.cap(i) {
                                    grid.or_assign(&down_grid[f[x] * nb2 + g[y]]);
                                }
                                match t2.element_index(&grid) {
                                    Some(idx) => image.push(idx),
                                    None => {
                                        ok = false;
                                        image.push(t2.zero());
                                    }
                                }
                            }
                            let distinct: HashSet<usize> = image.iter().copied().collect();
                            ok &= distinct.len() == image.len();
                            for i in 0..t.size() {
                                for j in i..t.size() {
                                    ok &= image[t.join(i, j)] == t2.join(image[i], image[j]);
                                    ok &= image[t.meet(i, j)] == t2.meet(image[i], image[j]);
                                }
                            }
                            embeddings += 1;
                        }
                    }
                }
            }
        }
    }
    ok &= embeddings > 0;
    announce(11, "kernels compose boxwise and inclusions embed", ok);
}

#[test]
fn criterion_12_universal_property() {
    let mut cfg = SuiteConfig::default();
    cfg.catalog.push("Mn:4".to_string());
    let reports = suite::check_lift_uniqueness(&cfg).unwrap();
    let ok = reports.len() == 112
        && reports
            .iter()
            .all(|r| r.passed() && r.sizes["bimorphisms"] > 0);
    announce(12, "every bimorphism lifts uniquely", ok);
}

#[test]
fn criterion_13_l_congruence_reduction() {
    let sls = oracle::small_semilattices(5);
    let mut ok = sls.len() == 10;
    for s in &sls {
        let mut kernels: HashSet<Vec<usize>> = HashSet::new();
        for t in &sls {
            for img in join_homomorphisms(s, t) {
                let m = SemilatticeMap::new(s.clone(), t.clone(), img).unwrap();
                if m.is_l_homomorphism() {
                    kernels.insert(m.kernel().block_of().to_vec());
                }
            }
        }
        for p in oracle::join_congruences(s) {
            let theta = JoinCongruence::new(s.clone(), p).unwrap();
            ok &= theta.is_l_congruence() == kernels.contains(theta.block_of());
        }
    }
    announce(
        13,
        "projection test matches the existential L-congruence",
        ok,
    );
}
