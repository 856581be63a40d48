//! Shared example structures used by the test suites and the command line.
//!
//! The main fixture is a small differential graded algebra with classes
//! whose pairwise products vanish only up to exact terms, so the
//! structure transferred onto its homology carries a nonzero ternary
//! operation. Associativity and the Leibniz rule are exercised by the
//! regular checkers.

use std::collections::BTreeMap;

use crate::exactlin::{GradedMap, GradedSpace, Scalar};
use crate::halg::{AInfAlgebra, LInfAlgebra};

fn space(items: &[(&str, i64)]) -> GradedSpace {
    GradedSpace::new(items.to_vec()).expect("fixture basis")
}

fn endo(space: &GradedSpace, degree: i64, entries: &[(&str, &str, i64)]) -> GradedMap {
    let list = entries
        .iter()
        .map(|(to, from, c)| {
            (
                space.index_of(to).expect("target name"),
                space.index_of(from).expect("source name"),
                Scalar::from_int(*c),
            )
        })
        .collect();
    GradedMap::from_entries(space.clone(), space.clone(), degree, list).expect("fixture map")
}

fn operation(space: &GradedSpace, n: usize, entries: &[(&[&str], &str, i64)]) -> GradedMap {
    let power = space.tensor_power(n);
    let dim = space.dim();
    let list = entries
        .iter()
        .map(|(inputs, out, c)| {
            assert_eq!(inputs.len(), n);
            let parts: Vec<usize> = inputs
                .iter()
                .map(|name| space.index_of(name).expect("input name"))
                .collect();
            let col = GradedSpace::tensor_index_encode(dim, &parts);
            let row = space.index_of(out).expect("output name");
            (row, col, Scalar::from_int(*c))
        })
        .collect();
    GradedMap::from_entries(power, space.clone(), n as i64 - 2, list).expect("fixture operation")
}

/// A ten-dimensional associative dg algebra where `a·b` and `b·c` are
/// nonzero boundaries: `a·b = ∂x`, `b·c = ∂y`, with
/// `(a·b)·c = a·(b·c) = w`, `∂(x·c) = w` and `∂(a·y) = -w`. Its homology
/// has three classes in degree 1 and one in degree 4, the class of
/// `x·c + a·y`.
pub fn massey_dga() -> AInfAlgebra {
    let sp = space(&[
        ("a", 1),
        ("b", 1),
        ("c", 1),
        ("u", 2),
        ("v", 2),
        ("x", 3),
        ("y", 3),
        ("w", 3),
        ("z1", 4),
        ("z2", 4),
    ]);
    let d = endo(
        &sp,
        -1,
        &[("u", "x", 1), ("v", "y", 1), ("w", "z1", 1), ("w", "z2", -1)],
    );
    let mu2 = operation(
        &sp,
        2,
        &[
            (&["a", "b"], "u", 1),
            (&["b", "c"], "v", 1),
            (&["u", "c"], "w", 1),
            (&["a", "v"], "w", 1),
            (&["x", "c"], "z1", 1),
            (&["a", "y"], "z2", 1),
        ],
    );
    let mut ops = BTreeMap::new();
    ops.insert(2, mu2);
    AInfAlgebra::new(sp, d, ops, 5).expect("fixture algebra")
}

/// Two-dimensional dga in degree 0 with `e·e = f` and all other products
/// zero; strictly associative.
pub fn square_dga() -> AInfAlgebra {
    let sp = space(&[("e", 0), ("f", 0)]);
    let d = GradedMap::zero(sp.clone(), sp.clone(), -1);
    let mu2 = operation(&sp, 2, &[(&["e", "e"], "f", 1)]);
    let mut ops = BTreeMap::new();
    ops.insert(2, mu2);
    AInfAlgebra::new(sp, d, ops, 4).expect("fixture algebra")
}

/// `e·e = f`, `e·f = e`: then `(e·e)·e = 0` but `e·(e·e) = e`, so the
/// associativity check fails at arity 3.
pub fn non_associative_dga() -> AInfAlgebra {
    let sp = space(&[("e", 0), ("f", 0)]);
    let d = GradedMap::zero(sp.clone(), sp.clone(), -1);
    let mu2 = operation(&sp, 2, &[(&["e", "e"], "f", 1), (&["e", "f"], "e", 1)]);
    let mut ops = BTreeMap::new();
    ops.insert(2, mu2);
    AInfAlgebra::new(sp, d, ops, 3).expect("fixture algebra")
}

/// The nonabelian two-dimensional Lie algebra `[e, f] = f` in degree 0.
pub fn two_dim_lie() -> LInfAlgebra {
    let sp = space(&[("e", 0), ("f", 0)]);
    let d = GradedMap::zero(sp.clone(), sp.clone(), -1);
    let l2 = operation(&sp, 2, &[(&["e", "f"], "f", 1), (&["f", "e"], "f", -1)]);
    let mut ops = BTreeMap::new();
    ops.insert(2, l2);
    LInfAlgebra::new(sp, d, ops, 4).expect("fixture algebra")
}

/// An antisymmetric bracket violating the Jacobi identity:
/// `[a,b] = c`, `[b,c] = b`, `[a,c] = 0`.
pub fn jacobi_violating_bracket() -> LInfAlgebra {
    let sp = space(&[("a", 0), ("b", 0), ("c", 0)]);
    let d = GradedMap::zero(sp.clone(), sp.clone(), -1);
    let l2 = operation(
        &sp,
        2,
        &[
            (&["a", "b"], "c", 1),
            (&["b", "a"], "c", -1),
            (&["b", "c"], "b", 1),
            (&["c", "b"], "b", -1),
        ],
    );
    let mut ops = BTreeMap::new();
    ops.insert(2, l2);
    LInfAlgebra::new(sp, d, ops, 3).expect("fixture algebra")
}

/// A bracket that is not graded antisymmetric: `l(e,f) = f` but
/// `l(f,e) = 0`. Rejected by the antisymmetry gate.
pub fn non_antisymmetric_bracket() -> LInfAlgebra {
    let sp = space(&[("e", 0), ("f", 0)]);
    let d = GradedMap::zero(sp.clone(), sp.clone(), -1);
    let l2 = operation(&sp, 2, &[(&["e", "f"], "f", 1)]);
    let mut ops = BTreeMap::new();
    ops.insert(2, l2);
    LInfAlgebra::new(sp, d, ops, 2).expect("fixture algebra")
}

/// Two generators in degrees 0 and 1 with every bracket zero.
pub fn abelian_linf() -> LInfAlgebra {
    let sp = space(&[("g0", 0), ("g1", 1)]);
    let d = GradedMap::zero(sp.clone(), sp.clone(), -1);
    LInfAlgebra::new(sp, d, BTreeMap::new(), 3).expect("fixture algebra")
}

/// A graded bracket with an odd generator: `l(t,t) = s` with `|t| = 1`,
/// `|s| = 2`, allowed by graded antisymmetry.
pub fn odd_square_linf() -> LInfAlgebra {
    let sp = space(&[("t", 1), ("s", 2)]);
    let d = GradedMap::zero(sp.clone(), sp.clone(), -1);
    let l2 = operation(&sp, 2, &[(&["t", "t"], "s", 1)]);
    let mut ops = BTreeMap::new();
    ops.insert(2, l2);
    LInfAlgebra::new(sp, d, ops, 4).expect("fixture algebra")
}
