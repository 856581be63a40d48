//! The plain-text algebra description format.
//!
//! One statement per line, `#` starts a comment. Declarations must
//! precede use. The formal grammar lives in `docs/algebra-format.md`;
//! in short:
//!
//! ```text
//! kind (ainf|linf)
//! basis <name> <degree>
//! d <from> <to> <scalar>
//! op <n> <in_1> … <in_n> <out> <scalar>
//! morphism <n> <in_1> … <in_n> <out> <scalar>
//! ```
//!
//! Scalars are exact rationals `p` or `p/q`. Every entry is checked for
//! degree homogeneity at load time, and the differential must square to
//! zero before an algebra is built.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exactlin::{GradedMap, GradedSpace, Scalar};
use crate::halg::{AInfAlgebra, LInfAlgebra};
use crate::transfer::TransferResult;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    Ainf,
    Linf,
}

impl AlgebraKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AlgebraKind::Ainf => "ainf",
            AlgebraKind::Linf => "linf",
        }
    }
}

/// One sparse structure constant: `op(in_1, …, in_n) += coeff · out`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpEntry {
    pub arity: usize,
    pub inputs: Vec<String>,
    pub output: String,
    pub coeff: Scalar,
}

/// Parsed form of an algebra description file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraDocument {
    pub kind: AlgebraKind,
    pub basis: Vec<(String, i64)>,
    /// differential entries `(from, to, coeff)`
    pub differential: Vec<(String, String, Scalar)>,
    pub operations: Vec<OpEntry>,
    /// a transfer output also records the morphism back into the source
    /// complex; its output names refer to that complex, not this basis
    pub morphism: Vec<OpEntry>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, msg: String| Error::Parse { line, msg };
        let mut kind: Option<AlgebraKind> = None;
        let mut basis: Vec<(String, i64)> = Vec::new();
        let mut degrees: BTreeMap<String, i64> = BTreeMap::new();
        let mut differential = Vec::new();
        let mut operations = Vec::new();
        let mut morphism = Vec::new();
        let mut seen_d: BTreeSet<(String, String)> = BTreeSet::new();
        let mut seen_op: BTreeSet<(usize, Vec<String>, String)> = BTreeSet::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            match fields[0] {
                "kind" => {
                    if fields.len() != 2 {
                        return Err(err(line, "kind takes one value: ainf or linf".into()));
                    }
                    if kind.is_some() {
                        return Err(err(line, "duplicate kind line".into()));
                    }
                    kind = Some(match fields[1] {
                        "ainf" => AlgebraKind::Ainf,
                        "linf" => AlgebraKind::Linf,
                        other => {
                            return Err(err(line, format!("unknown kind `{other}`")));
                        }
                    });
                }
                "basis" => {
                    if fields.len() != 3 {
                        return Err(err(line, "basis takes a name and a degree".into()));
                    }
                    let name = fields[1];
                    if !is_identifier(name) {
                        return Err(err(line, format!("`{name}` is not a valid identifier")));
                    }
                    let degree: i64 = fields[2]
                        .parse()
                        .map_err(|_| err(line, format!("bad degree `{}`", fields[2])))?;
                    if degrees.insert(name.to_string(), degree).is_some() {
                        return Err(err(line, format!("duplicate basis name `{name}`")));
                    }
                    basis.push((name.to_string(), degree));
                }
                "d" => {
                    if fields.len() != 4 {
                        return Err(err(line, "d takes: from to scalar".into()));
                    }
                    let (from, to) = (fields[1], fields[2]);
                    for name in [from, to] {
                        if !degrees.contains_key(name) {
                            return Err(err(line, format!("unknown basis name `{name}`")));
                        }
                    }
                    let coeff: Scalar = fields[3].parse().map_err(|e| err(line, e))?;
                    if degrees[to] != degrees[from] - 1 {
                        return Err(err(
                            line,
                            format!(
                                "degree violation: |{to}| = {} but |{from}| - 1 = {}",
                                degrees[to],
                                degrees[from] - 1
                            ),
                        ));
                    }
                    if !seen_d.insert((from.to_string(), to.to_string())) {
                        return Err(err(line, format!("duplicate entry d {from} {to}")));
                    }
                    differential.push((from.to_string(), to.to_string(), coeff));
                }
                "op" | "morphism" => {
                    let what = fields[0];
                    if fields.len() < 2 {
                        return Err(err(line, format!("{what} takes: n inputs… out scalar")));
                    }
                    let n: usize = fields[1]
                        .parse()
                        .map_err(|_| err(line, format!("bad arity `{}`", fields[1])))?;
                    if fields.len() != n + 4 {
                        return Err(err(
                            line,
                            format!("{what} {n} needs {n} inputs, an output and a scalar"),
                        ));
                    }
                    let inputs: Vec<String> = fields[2..2 + n].iter().map(|s| s.to_string()).collect();
                    let output = fields[2 + n].to_string();
                    let coeff: Scalar = fields[3 + n].parse().map_err(|e| err(line, e))?;
                    for name in &inputs {
                        if !degrees.contains_key(name) {
                            return Err(err(line, format!("unknown basis name `{name}`")));
                        }
                    }
                    let in_degree: i64 = inputs.iter().map(|m| degrees[m]).sum();
                    if what == "op" {
                        if n < 2 {
                            return Err(err(line, "operations start at arity 2".into()));
                        }
                        if !degrees.contains_key(&output) {
                            return Err(err(line, format!("unknown basis name `{output}`")));
                        }
                        if degrees[&output] != in_degree + n as i64 - 2 {
                            return Err(err(
                                line,
                                format!(
                                    "degree violation: |{output}| = {} but inputs + {} = {}",
                                    degrees[&output],
                                    n as i64 - 2,
                                    in_degree + n as i64 - 2
                                ),
                            ));
                        }
                        let key = (n, inputs.clone(), output.clone());
                        if !seen_op.insert(key) {
                            return Err(err(line, "duplicate operation entry".into()));
                        }
                        operations.push(OpEntry {
                            arity: n,
                            inputs,
                            output,
                            coeff,
                        });
                    } else {
                        // morphism outputs name a foreign complex; only the
                        // inputs are checked here
                        morphism.push(OpEntry {
                            arity: n,
                            inputs,
                            output,
                            coeff,
                        });
                    }
                }
                other => {
                    return Err(err(line, format!("unknown keyword `{other}`")));
                }
            }
        }
        let kind = kind.ok_or(Error::Parse {
            line: 0,
            msg: "missing `kind` line".into(),
        })?;
        Ok(AlgebraDocument {
            kind,
            basis,
            differential,
            operations,
            morphism,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("kind {}\n", self.kind.as_str()));
        for (name, degree) in &self.basis {
            out.push_str(&format!("basis {name} {degree}\n"));
        }
        for (from, to, c) in &self.differential {
            out.push_str(&format!("d {from} {to} {c}\n"));
        }
        for e in &self.operations {
            out.push_str(&format!(
                "op {} {} {} {}\n",
                e.arity,
                e.inputs.join(" "),
                e.output,
                e.coeff
            ));
        }
        for e in &self.morphism {
            out.push_str(&format!(
                "morphism {} {} {} {}\n",
                e.arity,
                e.inputs.join(" "),
                e.output,
                e.coeff
            ));
        }
        out
    }

    pub fn space(&self) -> Result<GradedSpace> {
        GradedSpace::new(self.basis.clone())
    }

    fn maps(&self) -> Result<(GradedSpace, GradedMap, BTreeMap<usize, GradedMap>)> {
        let space = self.space()?;
        let mut d_entries = Vec::new();
        for (from, to, c) in &self.differential {
            let col = space
                .index_of(from)
                .ok_or_else(|| Error::UnknownBasisName(from.clone()))?;
            let row = space
                .index_of(to)
                .ok_or_else(|| Error::UnknownBasisName(to.clone()))?;
            d_entries.push((row, col, c.clone()));
        }
        let d = GradedMap::from_entries(space.clone(), space.clone(), -1, d_entries)?;

        let mut grouped: BTreeMap<usize, Vec<(usize, usize, Scalar)>> = BTreeMap::new();
        let dim = space.dim();
        for e in &self.operations {
            let parts: Vec<usize> = e
                .inputs
                .iter()
                .map(|m| {
                    space
                        .index_of(m)
                        .ok_or_else(|| Error::UnknownBasisName(m.clone()))
                })
                .collect::<Result<_>>()?;
            let col = GradedSpace::tensor_index_encode(dim, &parts);
            let row = space
                .index_of(&e.output)
                .ok_or_else(|| Error::UnknownBasisName(e.output.clone()))?;
            grouped
                .entry(e.arity)
                .or_default()
                .push((row, col, e.coeff.clone()));
        }
        let mut ops = BTreeMap::new();
        for (n, entries) in grouped {
            ops.insert(
                n,
                GradedMap::from_entries(
                    space.tensor_power(n),
                    space.clone(),
                    n as i64 - 2,
                    entries,
                )?,
            );
        }
        Ok((space, d, ops))
    }

    pub fn to_ainf(&self, max_arity: usize) -> Result<AInfAlgebra> {
        if self.kind != AlgebraKind::Ainf {
            return Err(Error::Parse {
                line: 0,
                msg: format!("document kind is {}, expected ainf", self.kind.as_str()),
            });
        }
        let (space, d, ops) = self.maps()?;
        AInfAlgebra::new(space, d, ops, max_arity)
    }

    pub fn to_linf(&self, max_arity: usize) -> Result<LInfAlgebra> {
        if self.kind != AlgebraKind::Linf {
            return Err(Error::Parse {
                line: 0,
                msg: format!("document kind is {}, expected linf", self.kind.as_str()),
            });
        }
        let (space, d, ops) = self.maps()?;
        LInfAlgebra::new(space, d, ops, max_arity)
    }

    /// Canonical document for an algebra: basis order preserved, entries
    /// in column-major order.
    pub fn from_ainf(alg: &AInfAlgebra) -> Self {
        let space = &alg.space;
        let basis: Vec<(String, i64)> = space.iter().map(|(n, d)| (n.to_string(), d)).collect();
        let mut differential = Vec::new();
        for col in 0..space.dim() {
            for (row, c) in alg.d.column(col) {
                differential.push((
                    space.name(col).to_string(),
                    space.name(*row).to_string(),
                    c.clone(),
                ));
            }
        }
        let mut operations = Vec::new();
        for (n, op) in alg.ops() {
            operations.extend(sparse_entries(op, space, space, n));
        }
        AlgebraDocument {
            kind: AlgebraKind::Ainf,
            basis,
            differential,
            operations,
            morphism: Vec::new(),
        }
    }

    /// Document for a transfer output: the transferred algebra plus the
    /// morphism table, whose outputs name the source complex.
    pub fn from_transfer(result: &TransferResult) -> Self {
        let mut doc = AlgebraDocument::from_ainf(&result.transferred);
        let h_space = &result.transferred.space;
        let target = &result.morphism.target.space;
        for (n, f) in result.morphism.components() {
            doc.morphism.extend(sparse_entries(f, h_space, target, n));
        }
        doc
    }
}

fn sparse_entries(
    map: &GradedMap,
    source: &GradedSpace,
    target: &GradedSpace,
    n: usize,
) -> Vec<OpEntry> {
    let dim = source.dim();
    let mut out = Vec::new();
    for col in 0..map.source().dim() {
        let parts = GradedSpace::tensor_index_decode(dim, n, col);
        for (row, c) in map.column(col) {
            out.push(OpEntry {
                arity: n,
                inputs: parts.iter().map(|&p| source.name(p).to_string()).collect(),
                output: target.name(*row).to_string(),
                coeff: c.clone(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip_is_identity_on_documents() {
        let doc = AlgebraDocument::from_ainf(&fixtures::massey_dga());
        let text = doc.serialize();
        let again = AlgebraDocument::parse(&text).unwrap();
        assert_eq!(doc, again);
        assert_eq!(again.serialize(), text);
    }

    #[test]
    fn loaded_algebra_matches_fixture() {
        let a = fixtures::massey_dga();
        let doc = AlgebraDocument::from_ainf(&a);
        let b = doc.to_ainf(5).unwrap();
        assert_eq!(a.space, b.space);
        assert_eq!(a.d, b.d);
        assert_eq!(a.op(2), b.op(2));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad_scalar = "kind ainf\nbasis a 0\nop 2 a a a 1/0\n";
        match AlgebraDocument::parse(bad_scalar) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }

        let unknown = "kind ainf\nbasis a 1\nd b a 1\n";
        match AlgebraDocument::parse(unknown) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("unknown basis name"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }

        // degree homogeneity is validated at load
        let inhomogeneous = "kind ainf\nbasis a 1\nbasis b 3\nd a b 1\n";
        match AlgebraDocument::parse(inhomogeneous) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("degree violation"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn differential_must_square_to_zero_at_load() {
        let text = "kind ainf\nbasis a 2\nbasis b 1\nbasis c 0\nd a b 1\nd b c 1\n";
        let doc = AlgebraDocument::parse(text).unwrap();
        assert!(matches!(doc.to_ainf(2), Err(Error::NotSquareZero { .. })));
    }

    #[test]
    fn duplicate_entries_rejected() {
        let text = "kind ainf\nbasis a 0\nbasis f 0\nop 2 a a f 1\nop 2 a a f 2\n";
        assert!(matches!(
            AlgebraDocument::parse(text),
            Err(Error::Parse { line: 5, .. })
        ));
    }
}
