//! Engine output against independent slow implementations.

mod common;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_force_expansion, rp2, sample, subsets};
use dclique_core::expansion::{d_clique_complex, ExpansionParams};
use dclique_core::homology::{
    betti_profile, boundary_matrix, rank_mod_p, smith_normal_form, IntegerMatrix,
};
use dclique_core::invariants::{contains_subcomplex_copy, Embedding};
use dclique_core::Complex;

#[test]
fn expansion_matches_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..300 {
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(d + 1..=8usize);
        let x = sample(n, d, rng.gen_range(0.05..1.0), rng.gen());
        assert_eq!(
            d_clique_complex(&x, ExpansionParams::full(d).unwrap()),
            brute_force_expansion(&x, d)
        );
    }
}

/// Bron-Kerbosch maximal cliques; their closure is the clique complex.
fn clique_complex_reference(g: &Complex) -> Complex {
    let n = g.num_vertices();
    let adj = |a: usize, b: usize| g.contains(&[a.min(b), a.max(b)]);
    fn bk(
        r: Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        adj: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut r = r;
            r.sort_unstable();
            out.push(r);
            return;
        }
        let (mut p, mut x) = (p, x);
        while let Some(v) = p.pop() {
            let mut r2 = r.clone();
            r2.push(v);
            let p2 = p.iter().copied().filter(|&w| adj(v, w)).collect();
            let x2 = x.iter().copied().filter(|&w| adj(v, w)).collect();
            bk(r2, p2, x2, adj, out);
            x.push(v);
        }
    }
    let mut maximal = Vec::new();
    bk(Vec::new(), (0..n).collect(), Vec::new(), &adj, &mut maximal);
    Complex::from_facets(&maximal, &(0..n).collect::<Vec<_>>()).unwrap()
}

#[test]
fn graph_case_matches_bron_kerbosch() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12usize);
        let g = sample(n, 1, rng.gen_range(0.0..1.0), rng.gen());
        assert_eq!(
            d_clique_complex(&g, ExpansionParams::full(1).unwrap()),
            clique_complex_reference(&g)
        );
    }
}

fn injections_oracle(host: &Complex, pattern: &Complex) -> bool {
    let hv: Vec<usize> = host.vertices().iter().collect();
    let pv: Vec<usize> = pattern.vertices().iter().collect();
    hv.iter().copied().permutations(pv.len()).any(|img| {
        let e = Embedding {
            pairs: pv.iter().copied().zip(img).collect(),
        };
        e.is_valid(pattern, host)
    })
}

#[test]
fn containment_matches_all_injections() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..150 {
        let d = rng.gen_range(1..=2usize);
        let host = sample(
            rng.gen_range(d + 1..=8),
            d,
            rng.gen_range(0.2..1.0),
            rng.gen(),
        );
        let host = d_clique_complex(&host, ExpansionParams::full(d).unwrap());
        let pattern = sample(
            rng.gen_range(d + 1..=5),
            d,
            rng.gen_range(0.3..1.0),
            rng.gen(),
        );
        let found = contains_subcomplex_copy(&host, &pattern);
        if let Some(e) = &found {
            assert!(e.is_valid(&pattern, &host));
        }
        assert_eq!(found.is_some(), injections_oracle(&host, &pattern));
    }
}

fn det(m: &[Vec<i64>]) -> i128 {
    if m.len() == 1 {
        return m[0][0] as i128;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

/// Invariant factors as ratios of successive gcds of k x k minors.
fn determinantal_invariants(a: &[Vec<i64>]) -> Vec<BigInt> {
    let (rows, cols) = (a.len(), a[0].len());
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(&(0..rows).collect::<Vec<_>>(), k) {
            for cs in subsets(&(0..cols).collect::<Vec<_>>(), k) {
                let minor: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| a[r][c]).collect())
                    .collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(BigInt::from(g / prev));
        prev = g;
    }
    out
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..400 {
        let rows = rng.gen_range(1..=4usize);
        let cols = rng.gen_range(1..=4usize);
        let dense: Vec<Vec<i64>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if rng.gen_bool(0.3) {
                            0
                        } else {
                            rng.gen_range(-9..=9)
                        }
                    })
                    .collect()
            })
            .collect();
        let m = IntegerMatrix::from_dense(rows, cols, &dense).unwrap();
        assert_eq!(
            smith_normal_form(&m),
            determinantal_invariants(&dense),
            "{dense:?}"
        );
    }
}

/// Rank over F_p by dense Gaussian elimination.
fn dense_rank_mod(m: &IntegerMatrix, p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.rem_euclid(p)).collect())
        .collect();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = (1..p).find(|x| a[rank][c] * x % p == 1).unwrap();
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * inv % p;
                for j in 0..cols {
                    a[r][j] = (a[r][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn projective_plane_ranks_depend_on_characteristic() {
    let c = rp2();
    let d2 = boundary_matrix(&c, 2).unwrap();
    assert_eq!(dense_rank_mod(&d2, 2), 9);
    assert_eq!(dense_rank_mod(&d2, 3), 10);
    assert_eq!(rank_mod_p(&d2, 2).unwrap(), 9);
    assert_eq!(rank_mod_p(&d2, 3).unwrap(), 10);
    let snf = smith_normal_form(&d2);
    assert_eq!(snf.len(), 10);
    assert_eq!(snf.last(), Some(&BigInt::from(2)));
    let h = betti_profile(&c, 2);
    assert_eq!(h[1].torsion, vec![BigInt::from(2)]);
}

#[test]
fn sparse_mod_p_rank_matches_dense() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let x = sample(rng.gen_range(4..=9), 2, rng.gen_range(0.2..0.9), rng.gen());
        let delta = d_clique_complex(&x, ExpansionParams::full(2).unwrap());
        for k in 1..=delta.dim().max(0) as usize {
            let m = boundary_matrix(&delta, k).unwrap();
            for p in [2, 3, 7] {
                assert_eq!(rank_mod_p(&m, p as u64).unwrap(), dense_rank_mod(&m, p));
            }
        }
    }
}
