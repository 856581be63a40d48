//! Property tests with independent oracles: composition against a naive
//! dot-product, contraction data against rank-nullity, Koszul signs
//! against double-swap involution, and document round-trips.

use proptest::prelude::*;

use opalg::cli::AlgebraDocument;
use opalg::exactlin::{
    homology_with_contraction, permutation_map, tensor_power_map, GradedMap, GradedSpace, Mat,
    Scalar,
};

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::new(n, d))
}

fn space_of_dim(dim: usize, tag: &str) -> GradedSpace {
    GradedSpace::new(
        (0..dim)
            .map(|k| (format!("{tag}{k}"), 0i64))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

/// Independent oracle: entry-wise dot products through the public
/// `entry` accessor.
fn naive_product(g: &GradedMap, f: &GradedMap) -> Vec<Vec<Scalar>> {
    let rows = g.target().dim();
    let cols = f.source().dim();
    let inner = f.target().dim();
    let mut out = vec![vec![Scalar::zero(); cols]; rows];
    for r in 0..rows {
        for c in 0..cols {
            let mut acc = Scalar::zero();
            for k in 0..inner {
                acc += &(&g.entry(r, k) * &f.entry(k, c));
            }
            out[r][c] = acc;
        }
    }
    out
}

/// Independent rank oracle for tiny matrices: largest nonvanishing minor,
/// determinants by Laplace expansion.
fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Scalar::zero();
    for (j, pivot) in m[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * &det(&minor);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn rank_by_minors(m: &[Vec<Scalar>]) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let max = rows.min(cols);
    for size in (1..=max).rev() {
        for row_set in subsets(rows, size) {
            for col_set in subsets(cols, size) {
                let sub: Vec<Vec<Scalar>> = row_set
                    .iter()
                    .map(|&r| col_set.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return size;
                }
            }
        }
    }
    0
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for v in start..n {
            acc.push(v);
            go(v + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_matches_the_dot_product_oracle_and_associates(
        a_entries in proptest::collection::vec(small_scalar(), 9),
        b_entries in proptest::collection::vec(small_scalar(), 9),
        c_entries in proptest::collection::vec(small_scalar(), 9),
    ) {
        let v = space_of_dim(3, "e");
        let from9 = |es: Vec<Scalar>| {
            let list = es
                .into_iter()
                .enumerate()
                .map(|(k, c)| (k / 3, k % 3, c))
                .collect();
            GradedMap::from_entries(v.clone(), v.clone(), 0, list).unwrap()
        };
        let f = from9(a_entries);
        let g = from9(b_entries);
        let h = from9(c_entries);

        let gf = g.compose(&f).unwrap();
        let oracle = naive_product(&g, &f);
        for r in 0..3 {
            for c in 0..3 {
                prop_assert_eq!(gf.entry(r, c), oracle[r][c].clone());
            }
        }

        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn double_swap_of_graded_factors_is_the_identity(
        degrees in proptest::collection::vec(-2i64..=3, 2..=3),
    ) {
        let v = GradedSpace::new(
            degrees
                .iter()
                .enumerate()
                .map(|(k, &d)| (format!("g{k}"), d))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let n = 2;
        let swap = permutation_map(&v, &[2, 1]);
        let twice = swap.compose(&swap).unwrap();
        prop_assert_eq!(twice, GradedMap::identity(v.tensor_power(n)));
    }

    #[test]
    fn contraction_identities_hold_on_random_complexes(
        n0 in 1usize..=3,
        n1 in 1usize..=3,
        n2 in 1usize..=2,
        a_raw in proptest::collection::vec(-2i64..=2, 9),
        m_raw in proptest::collection::vec(-2i64..=2, 6),
    ) {
        // degrees 0, 1, 2; d restricted to 1→0 is random, and 2→1 is a
        // random combination of kernel vectors so d∘d = 0 exactly
        let mut basis: Vec<(String, i64)> = Vec::new();
        for k in 0..n0 { basis.push((format!("a{k}"), 0)); }
        for k in 0..n1 { basis.push((format!("b{k}"), 1)); }
        for k in 0..n2 { basis.push((format!("c{k}"), 2)); }
        let v = GradedSpace::new(basis).unwrap();

        let mut a = Mat::zeros(n0, n1);
        for r in 0..n0 {
            for c in 0..n1 {
                a[(r, c)] = Scalar::from_int(a_raw[(r * 3 + c) % a_raw.len()]);
            }
        }
        let kernel = a.kernel_basis();
        let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
        for r in 0..n0 {
            for c in 0..n1 {
                if !a[(r, c)].is_zero() {
                    entries.push((r, n0 + c, a[(r, c)].clone()));
                }
            }
        }
        // b-columns: combinations of kernel vectors of a
        let mut b = vec![vec![Scalar::zero(); n2]; n1];
        for (kv, kvec) in kernel.iter().enumerate() {
            for c in 0..n2 {
                let coeff = Scalar::from_int(m_raw[(kv * 2 + c) % m_raw.len()]);
                for (r, kv_r) in kvec.iter().enumerate() {
                    b[r][c] += &(&coeff * kv_r);
                }
            }
        }
        for (r, row) in b.iter().enumerate() {
            for (c, val) in row.iter().enumerate() {
                if !val.is_zero() {
                    entries.push((n0 + r, n0 + n1 + c, val.clone()));
                }
            }
        }
        let d = GradedMap::from_entries(v.clone(), v.clone(), -1, entries).unwrap();
        let contraction = homology_with_contraction(&v, &d).unwrap();
        contraction.validate().unwrap();

        // rank-nullity oracle on the blocks, with ranks from minors
        let a_dense: Vec<Vec<Scalar>> = (0..n0)
            .map(|r| (0..n1).map(|c| a[(r, c)].clone()).collect())
            .collect();
        let rank_a = rank_by_minors(&a_dense);
        let rank_b = rank_by_minors(&b);
        let expect: Vec<(i64, usize)> = [
            (0i64, n0 - rank_a),
            (1, n1 - rank_a - rank_b),
            (2, n2 - rank_b),
        ]
        .into_iter()
        .filter(|(_, d)| *d > 0)
        .collect();
        let mut got: Vec<(i64, usize)> = Vec::new();
        for deg in contraction.homology.degrees() {
            got.push((deg, contraction.homology.indices_in_degree(deg).len()));
        }
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn tensor_of_identities_is_the_identity(
        degrees in proptest::collection::vec(-1i64..=2, 1..=3),
    ) {
        let v = GradedSpace::new(
            degrees
                .iter()
                .enumerate()
                .map(|(k, &d)| (format!("g{k}"), d))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let id = GradedMap::identity(v.clone());
        let t = tensor_power_map(&[&id, &id, &id]);
        prop_assert_eq!(t, GradedMap::identity(v.tensor_power(3)));
    }

    #[test]
    fn document_round_trip_is_the_identity(
        degrees in proptest::collection::vec(0i64..=3, 2..=5),
        d_picks in proptest::collection::vec((0usize..25, 0usize..25, small_scalar()), 0..6),
        op_picks in proptest::collection::vec(
            (0usize..25, 0usize..25, 0usize..25, small_scalar()),
            0..6
        ),
    ) {
        let names: Vec<String> = (0..degrees.len()).map(|k| format!("g{k}")).collect();
        let deg = |k: usize| degrees[k % degrees.len()];
        let name = |k: usize| names[k % names.len()].clone();

        let mut text = String::from("kind ainf\n");
        for (k, n) in names.iter().enumerate() {
            text.push_str(&format!("basis {n} {}\n", degrees[k]));
        }
        let mut seen_d = std::collections::BTreeSet::new();
        for (from, to, c) in &d_picks {
            if c.is_zero() { continue; }
            let (from, to) = (from % names.len(), to % names.len());
            if deg(to) != deg(from) - 1 || !seen_d.insert((from, to)) {
                continue;
            }
            text.push_str(&format!("d {} {} {c}\n", name(from), name(to)));
        }
        let mut seen_op = std::collections::BTreeSet::new();
        for (x, y, out, c) in &op_picks {
            if c.is_zero() { continue; }
            let (x, y, out) = (x % names.len(), y % names.len(), out % names.len());
            if deg(out) != deg(x) + deg(y) || !seen_op.insert((x, y, out)) {
                continue;
            }
            text.push_str(&format!("op 2 {} {} {} {c}\n", name(x), name(y), name(out)));
        }

        let doc = AlgebraDocument::parse(&text).unwrap();
        let round = AlgebraDocument::parse(&doc.serialize()).unwrap();
        prop_assert_eq!(&doc, &round);
        prop_assert_eq!(doc.serialize(), round.serialize());
    }
}
