mod common;

use common::{dense_cophenetic_rank, dense_cycles_boundaries, dense_rank, q, random_complex};
use cophenet::distance::{distance_matrix, MergeRule};
use cophenet::filtration::{build_cech, build_vietoris_rips, FilteredComplex, PointCloud};
use cophenet::forest::{auto_seed, export_dot, export_newick, RamificationForest};
use cophenet::homology::{
    boundary_apply, compute_persistence, cophenetic_rank, cycle_snapshot, ChainVector,
};
use cophenet::matroid::{
    check_functoriality, check_submodular, circuits, cophenetic_matroid, cz_rank,
    generators_from_barcode, irreducible_cover, is_irreducible, linear_rank, AtLevel,
    CopheneticMatroid, FilteredMatroid, HomologyModule, IntervalModule, LevelOracle,
    LinearMatroid, RankOracle,
};
use cophenet::scalar::Gf;
use cophenet::{Error, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn matroid_of(c: &FilteredComplex, k: usize) -> CopheneticMatroid<'_, Rational> {
    let bars = compute_persistence::<Rational>(c, k);
    cophenetic_matroid(c, k, generators_from_barcode(&bars, k)).unwrap()
}

/// Tiny DOT grammar: header, then node and edge statements, then `}`.
fn valid_dot(text: &str) -> bool {
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with("//"));
    if lines.next() != Some("digraph ramification {") {
        return false;
    }
    let mut closed = false;
    for line in lines {
        let l = line.trim();
        if closed {
            return false;
        }
        if l == "}" {
            closed = true;
            continue;
        }
        let Some(stmt) = l.strip_suffix(';') else {
            return false;
        };
        let head = stmt.split(" [").next().unwrap();
        let ident = |s: &str| !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        let ok = match head.split_once(" -> ") {
            Some((a, b)) => ident(a) && ident(b),
            None => ident(head) || head.contains('='),
        };
        let balanced = stmt.matches('[').count() == stmt.matches(']').count()
            && stmt.matches('"').count() % 2 == 0;
        if !ok || !balanced {
            return false;
        }
    }
    closed
}

fn check_forest(fm: &dyn FilteredMatroid, f: &RamificationForest) {
    for (id, node) in f.nodes().iter().enumerate() {
        assert!(is_irreducible(&AtLevel::new(fm, node.birth_level), &node.set));
        for &c in &node.children {
            let child = f.node(c);
            assert_eq!(Some(child.birth), node.ramification);
            assert!(child.rank < node.rank || node.rank == 0);
            assert!(child.ramification.is_none_or(|r| r > child.birth));
        }
        if let Some(r) = node.ramification {
            assert!(r > node.birth, "node {id}");
            let mut covered: Vec<usize> = node
                .children
                .iter()
                .flat_map(|&c| f.node(c).set.clone())
                .chain(node.free.iter().copied())
                .collect();
            covered.sort_unstable();
            covered.dedup();
            assert_eq!(covered, node.set, "children cover the image of node {id}");
        }
    }
    for &r in f.roots() {
        assert!(f.depth(r) <= f.node(r).rank + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn boundary_of_boundary_vanishes(seed in any::<u64>()) {
        let c = random_complex(seed, 7, 40, 3);
        for i in 0..c.len() {
            let dim = c.simplex(i).dimension();
            if dim == 0 {
                continue;
            }
            let b = ChainVector::<Rational>::new(dim - 1, c.boundary(i));
            prop_assert!(boundary_apply(&b, &c).unwrap().is_zero());
            let b2 = ChainVector::<Gf<2>>::new(dim - 1, c.boundary(i));
            prop_assert!(boundary_apply(&b2, &c).unwrap().is_zero());
        }
    }

    #[test]
    fn betti_numbers_match_dense_elimination(seed in any::<u64>()) {
        let c = random_complex(seed, 6, 30, 2);
        let bars = compute_persistence::<Rational>(&c, 2);
        for &eps in c.critical_values() {
            for k in 0..=2 {
                let (z, b) = dense_cycles_boundaries(&c, eps, k);
                prop_assert_eq!(bars.betti(k, eps), z - b, "k={} eps={}", k, eps);
                let snap = cycle_snapshot::<Rational>(&c, eps, k).unwrap();
                prop_assert_eq!((snap.dim_cycles(), snap.dim_boundaries()), (z, b));
            }
        }
    }

    #[test]
    fn prime_fields_agree_on_torsion_free_complexes(seed in any::<u64>()) {
        // Complexes of at most dimension 2 on a handful of vertices have no
        // torsion, so every field gives the same Betti numbers.
        let c = random_complex(seed, 6, 30, 2);
        let q = compute_persistence::<Rational>(&c, 1);
        let f3 = compute_persistence::<Gf<3>>(&c, 1);
        for &eps in c.critical_values() {
            prop_assert_eq!(q.betti(1, eps), f3.betti(1, eps));
        }
    }

    #[test]
    fn representatives_are_cycles_born_with_their_bar(seed in any::<u64>()) {
        let c = random_complex(seed, 7, 40, 3);
        let bars = compute_persistence::<Rational>(&c, 2);
        for p in bars.pairs() {
            let r = &p.representative;
            prop_assert!(boundary_apply(r, &c).unwrap().is_zero());
            prop_assert_eq!(r.birth(&c), Some(p.birth));
            prop_assert!(p.death.is_none_or(|d| d > p.birth));
        }
    }

    #[test]
    fn cophenetic_rank_is_submodular_and_bounded(seed in any::<u64>()) {
        let c = random_complex(seed, 6, 30, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 1..=2 {
            for &eps in c.critical_values() {
                let z = cycle_snapshot::<Rational>(&c, eps, k).unwrap().cycles;
                if z.is_empty() {
                    continue;
                }
                let pick = |rng: &mut ChaCha8Rng| -> Vec<usize> {
                    (0..z.len()).filter(|_| rng.gen_bool(0.5)).collect()
                };
                let (a, b) = (pick(&mut rng), pick(&mut rng));
                let rank = |ids: &[usize]| {
                    let chains: Vec<_> = ids.iter().map(|&i| z[i].clone()).collect();
                    cophenetic_rank(&chains, &c, eps, k).unwrap()
                };
                let union: Vec<usize> = (0..z.len()).filter(|i| a.contains(i) || b.contains(i)).collect();
                let inter: Vec<usize> = a.iter().copied().filter(|i| b.contains(i)).collect();
                prop_assert!(rank(&a) <= a.len());
                prop_assert!(rank(&union) + rank(&inter) <= rank(&a) + rank(&b));
                // Later scales never raise the rank.
                for &eta in c.critical_values().iter().filter(|&&e| e >= eps) {
                    let chains: Vec<_> = a.iter().map(|&i| z[i].clone()).collect();
                    prop_assert!(cophenetic_rank(&chains, &c, eta, k).unwrap() <= rank(&a));
                }
            }
        }
    }

    #[test]
    fn matroid_ranks_match_from_scratch_oracle(seed in any::<u64>()) {
        let c = random_complex(seed, 6, 30, 2);
        let m = matroid_of(&c, 1);
        let chains: Vec<_> = m.generators().iter().map(|g| g.chain.clone()).collect();
        for level in 0..m.levels() {
            let ground = m.ground_set(level);
            for mask in 0u32..(1 << ground.len().min(6)) {
                let s: Vec<usize> = (0..ground.len().min(6)).filter(|i| mask >> i & 1 == 1).map(|i| ground[i]).collect();
                let refs: Vec<_> = s.iter().map(|&i| &chains[i]).collect();
                prop_assert_eq!(m.rank_at(level, &s), dense_cophenetic_rank(&c, &refs, m.scale(level), 1));
            }
            prop_assert!(check_submodular(&LevelOracle::whole(&m, level)).holds());
        }
        prop_assert!(check_functoriality(&m, 10).is_ok());
    }

    #[test]
    fn distances_are_ultrametric(seed in any::<u64>()) {
        let c = random_complex(seed, 7, 35, 2);
        let m = matroid_of(&c, 1);
        for level in 0..m.levels() {
            let alive: Vec<usize> = m.ground_set(level).into_iter().filter(|&e| m.rank_at(level, &[e]) > 0).collect();
            let d = distance_matrix(&m, m.scale(level), &alive, MergeRule::SameSpan).unwrap();
            for i in 0..d.len() {
                prop_assert_eq!(d.get(i, i), Some(0.0));
                for j in 0..d.len() {
                    prop_assert_eq!(d.get(i, j), d.get(j, i));
                }
            }
        }
    }

    #[test]
    fn forests_satisfy_their_invariants(seed in any::<u64>()) {
        let c = random_complex(seed, 7, 35, 2);
        let m = matroid_of(&c, 1);
        let (seeds, f) = auto_seed(&m).unwrap();
        prop_assert_eq!(seeds.is_empty(), f.is_empty());
        check_forest(&m, &f);
        let dot = export_dot(&f);
        prop_assert!(valid_dot(&dot), "{}", dot);
        let (_, again) = auto_seed(&m).unwrap();
        prop_assert_eq!(export_newick(&f), export_newick(&again));
    }

    #[test]
    fn interval_and_elimination_ranks_agree(seed in any::<u64>()) {
        let c = random_complex(seed, 6, 25, 2);
        let bars = compute_persistence::<Rational>(&c, 1);
        let intervals = IntervalModule::from_barcode(&bars, 1);
        let h = HomologyModule::<Rational>::new(&c, 1);
        let cv = c.critical_values();
        for (i, &a) in cv.iter().enumerate() {
            for &b in &cv[i..] {
                prop_assert_eq!(cz_rank(&h, a, b).unwrap(), cz_rank(&intervals, a, b).unwrap());
            }
        }
    }

    #[test]
    fn rips_and_cech_births_interleave(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(3..=10);
        let pts: Vec<Vec<f64>> = (0..n).map(|_| vec![rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)]).collect();
        let cloud = PointCloud::new(pts).unwrap();
        let rips = build_vietoris_rips(&cloud, 2, f64::INFINITY).unwrap();
        let cech = build_cech(&cloud, 2, f64::INFINITY).unwrap();
        prop_assert_eq!(rips.len(), cech.len());
        for (s, r) in rips.iter() {
            let cb = cech.birth(cech.index_of(s).unwrap());
            prop_assert!(cb <= r && r <= 2.0 * cb, "{} cech {} rips {}", s, cb, r);
        }
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, max: usize) -> Vec<Vec<Rational>> {
    let rows = rng.gen_range(1..=max);
    let cols = rng.gen_range(1..=max);
    (0..rows)
        .map(|_| (0..cols).map(|_| q(rng.gen_range(-2..=2))).collect())
        .collect()
}

#[test]
fn linear_rank_matches_dense_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let m = random_matrix(&mut rng, 8);
        assert_eq!(linear_rank(&m).unwrap(), dense_rank(m.clone()));
    }
}

#[test]
fn irreducible_covers_of_random_vector_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut dependent = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let dim = rng.gen_range(1..=4);
        let vs: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..dim).map(|_| q(rng.gen_range(-1..=1))).collect())
            .collect();
        let m = LinearMatroid::new(vs).unwrap();
        assert!(check_submodular(&m).holds());
        let x: Vec<usize> = (0..n).collect();
        match irreducible_cover(&m, &x) {
            Ok(cover) => {
                dependent += 1;
                let mut union: Vec<usize> = cover.iter().flat_map(|c| c.elements.clone()).collect();
                union.sort_unstable();
                union.dedup();
                assert_eq!(union, x);
                for c in &cover {
                    assert!(is_irreducible(&m, &c.elements));
                    for d in &cover {
                        let inside = c.elements.iter().all(|e| d.elements.contains(e));
                        assert!(c == d || !inside);
                    }
                }
            }
            Err(Error::IndependentSet) => assert_eq!(m.rank(&x), n),
            Err(Error::NoIrreducibleContaining(e)) => {
                // e is a coloop: it lies in no irreducible set.
                assert!(circuits(&m, &x).unwrap().iter().all(|c| !c.contains(&e)));
            }
            Err(e) => panic!("unexpected {e}"),
        }
    }
    assert!(dependent > 50);
}

#[test]
fn induced_oracles_stay_matroids() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let base = LinearMatroid::new(random_matrix(&mut rng, 5)).unwrap();
        let map: Vec<usize> = (0..rng.gen_range(1..=8))
            .map(|_| rng.gen_range(0..base.ground_size()))
            .collect();
        let pulled = cophenet::matroid::induced_rank(map, &base).unwrap();
        assert!(check_submodular(&pulled).holds());
    }
}
