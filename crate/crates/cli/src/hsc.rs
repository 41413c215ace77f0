//! The HSC text format for structure constants.
//!
//! ```text
//! hsc 1 algebra                 hsc 1 module lr | hsc 1 module yd
//! field Q | field GF <p>        field ...
//! dim <n>                       algdim <n>
//! labels <n names>              dim <m>
//! [provenance <text>]           algebra <path | sha256:hex>
//! MULT                          [base tensor_with_dual]
//! <i> <j> <k> <v>               [labels <m names>]
//! ...                           LACT ...
//! ```
//!
//! Every section is one linear map written as lines of domain indices,
//! then codomain indices, then the coefficient:
//!
//! | section   | line          | meaning                               |
//! |-----------|---------------|---------------------------------------|
//! | MULT      | `i j k v`     | `e_i·e_j` has `v` on `e_k`            |
//! | UNIT      | `k v`         | `1` has `v` on `e_k`                  |
//! | COMULT    | `i j k v`     | `Δ(e_i)` has `v` on `e_j⊗e_k`         |
//! | COUNIT    | `i v`         | `ε(e_i) = v`                          |
//! | ANTIPODE  | `i j v`       | `S(e_i)` has `v` on `e_j`             |
//! | LACT, ACT | `i a b v`     | `e_i·m_a` has `v` on `m_b`            |
//! | RACT      | `a i b v`     | `m_a·e_i` has `v` on `m_b`            |
//! | LCOACT, COACT | `a i b v` | `ρ(m_a)` has `v` on `e_i⊗m_b`         |
//! | RCOACT    | `a b i v`     | `ρ(m_a)` has `v` on `m_b⊗e_i`         |
//!
//! Omitted entries are zero, `#` starts a comment, and [`emit`] writes
//! entries in row-major order of (domain, codomain) so that emitting a
//! parsed canonical file reproduces it byte for byte.

use std::fmt::Write as _;

use lrcert_core::{Bialgebra, Error, FieldSpec, LinMap, Result, Scalar};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Lr,
    Yd,
}

impl ModuleKind {
    fn tag(self) -> &'static str {
        match self {
            ModuleKind::Lr => "lr",
            ModuleKind::Yd => "yd",
        }
    }

    fn sections(self) -> &'static [&'static str] {
        match self {
            ModuleKind::Lr => &["LACT", "RACT", "LCOACT", "RCOACT"],
            ModuleKind::Yd => &["ACT", "COACT"],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDoc {
    pub bialgebra: Bialgebra,
    pub antipode: Option<LinMap>,
    pub provenance: Option<String>,
}

/// Structure maps of a module, in the section order of its kind.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleDoc {
    pub kind: ModuleKind,
    pub field: FieldSpec,
    pub algdim: usize,
    pub dim: usize,
    pub algebra: String,
    /// The module lives over `A⊗A*` for the referenced `A`.
    pub tensor_with_dual: bool,
    pub labels: Option<Vec<String>>,
    pub maps: Vec<LinMap>,
}

#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum HscDocument {
    Algebra(AlgebraDoc),
    Module(ModuleDoc),
}

/// `(domain dims, codomain dims)` of a section.
fn section_shape(name: &str, n: usize, m: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    Some(match name {
        "MULT" => (vec![n, n], vec![n]),
        "UNIT" => (vec![], vec![n]),
        "COMULT" => (vec![n], vec![n, n]),
        "COUNIT" => (vec![n], vec![]),
        "ANTIPODE" => (vec![n], vec![n]),
        "LACT" | "ACT" => (vec![n, m], vec![m]),
        "RACT" => (vec![m, n], vec![m]),
        "LCOACT" | "COACT" => (vec![m], vec![n, m]),
        "RCOACT" => (vec![m], vec![m, n]),
        _ => return None,
    })
}

fn flatten(dims: &[usize], idx: &[usize]) -> usize {
    dims.iter().zip(idx).fold(0, |acc, (d, i)| acc * d + i)
}

fn unflatten(dims: &[usize], mut j: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, d) in out.iter_mut().zip(dims).rev() {
        *slot = j % d;
        j /= d;
    }
    out
}

fn check_label(l: &str) -> Result<()> {
    if l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == '#') {
        return Err(Error::InvalidSpec(format!("label {l:?} cannot be written to HSC")));
    }
    Ok(())
}

fn write_section(out: &mut String, name: &str, map: &LinMap, n: usize, m: usize) {
    let (dom, cod) = section_shape(name, n, m).expect("known section");
    let _ = writeln!(out, "{name}");
    for (c, col) in map.columns().iter().enumerate() {
        let ci = unflatten(&dom, c);
        for (r, v) in col {
            let ri = unflatten(&cod, *r);
            let mut line: Vec<String> = ci.iter().chain(&ri).map(usize::to_string).collect();
            line.push(v.to_string());
            let _ = writeln!(out, "{}", line.join(" "));
        }
    }
}

/// Canonical text of a document.
pub fn emit(doc: &HscDocument) -> Result<String> {
    let mut out = String::new();
    match doc {
        HscDocument::Algebra(a) => {
            let b = &a.bialgebra;
            let n = b.dim();
            for l in b.labels() {
                check_label(l)?;
            }
            let _ = writeln!(out, "hsc 1 algebra");
            let _ = writeln!(out, "field {}", b.field());
            let _ = writeln!(out, "dim {n}");
            let _ = writeln!(out, "labels {}", b.labels().join(" "));
            if let Some(p) = &a.provenance {
                if p.contains('\n') {
                    return Err(Error::InvalidSpec("provenance must be a single line".into()));
                }
                let _ = writeln!(out, "provenance {p}");
            }
            write_section(&mut out, "MULT", b.mult(), n, 0);
            write_section(&mut out, "UNIT", b.unit(), n, 0);
            write_section(&mut out, "COMULT", b.comult(), n, 0);
            write_section(&mut out, "COUNIT", b.counit(), n, 0);
            if let Some(s) = &a.antipode {
                write_section(&mut out, "ANTIPODE", s, n, 0);
            }
        }
        HscDocument::Module(d) => {
            check_label(&d.algebra)?;
            let _ = writeln!(out, "hsc 1 module {}", d.kind.tag());
            let _ = writeln!(out, "field {}", d.field);
            let _ = writeln!(out, "algdim {}", d.algdim);
            let _ = writeln!(out, "dim {}", d.dim);
            let _ = writeln!(out, "algebra {}", d.algebra);
            if d.tensor_with_dual {
                let _ = writeln!(out, "base tensor_with_dual");
            }
            if let Some(ls) = &d.labels {
                for l in ls {
                    check_label(l)?;
                }
                let _ = writeln!(out, "labels {}", ls.join(" "));
            }
            let n = if d.tensor_with_dual { d.algdim * d.algdim } else { d.algdim };
            for (name, map) in d.kind.sections().iter().zip(&d.maps) {
                write_section(&mut out, name, map, n, d.dim);
            }
        }
    }
    Ok(out)
}

/// `sha256:<hex>` of the canonical text.
pub fn digest_text(text: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}

struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("");
                let words: Vec<&str> = l.split_whitespace().collect();
                (!words.is_empty()).then_some((i + 1, words))
            })
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(1, |(l, _)| *l)
    }

    /// The next line, which must start with `key`; returns its arguments.
    fn expect(&mut self, key: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.items.get(self.pos) {
            Some((line, w)) if w[0] == key => {
                self.pos += 1;
                Ok((*line, w[1..].to_vec()))
            }
            Some((line, w)) => Err(parse_err(*line, format!("expected `{key}`, found `{}`", w[0]))),
            None => Err(parse_err(self.last_line(), format!("missing `{key}` line"))),
        }
    }

    fn optional(&mut self, key: &str) -> Option<(usize, Vec<&'a str>)> {
        match self.peek() {
            Some((_, w)) if w[0] == key => self.expect(key).ok(),
            _ => None,
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn one_arg<'a>(line: usize, key: &str, args: &[&'a str]) -> Result<&'a str> {
    match args {
        [a] => Ok(a),
        _ => Err(parse_err(line, format!("`{key}` takes exactly one argument"))),
    }
}

fn parse_usize(line: usize, s: &str) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return Err(parse_err(line, format!("expected a non-negative integer, found `{s}`")));
    }
    s.parse().map_err(|_| parse_err(line, format!("integer `{s}` is too large")))
}

fn parse_dim(lines: &mut Lines<'_>, key: &str) -> Result<usize> {
    let (line, args) = lines.expect(key)?;
    let n = parse_usize(line, one_arg(line, key, &args)?)?;
    if n == 0 {
        return Err(parse_err(line, format!("`{key}` must be positive")));
    }
    Ok(n)
}

fn parse_field(lines: &mut Lines<'_>) -> Result<FieldSpec> {
    let (line, args) = lines.expect("field")?;
    match args.as_slice() {
        ["Q"] => Ok(FieldSpec::Rationals),
        ["GF", p] => FieldSpec::prime(parse_usize(line, p)? as u64),
        _ => Err(parse_err(line, "expected `field Q` or `field GF <p>`")),
    }
}

fn parse_labels(line: usize, args: Vec<&str>, n: usize) -> Result<Vec<String>> {
    if args.len() != n {
        return Err(parse_err(line, format!("expected {n} labels, found {}", args.len())));
    }
    Ok(args.into_iter().map(String::from).collect())
}

/// Reads the section named `name`; it must come next.
fn parse_section(lines: &mut Lines<'_>, name: &str, field: FieldSpec, n: usize, m: usize) -> Result<LinMap> {
    let (line, args) = lines.expect(name)?;
    if !args.is_empty() {
        return Err(parse_err(line, format!("section header `{name}` takes no arguments")));
    }
    let (dom, cod) = section_shape(name, n, m).expect("known section");
    let arity = dom.len() + cod.len();
    let mut entries: Vec<(usize, usize, Scalar, usize)> = Vec::new();
    while let Some((line, w)) = lines.peek() {
        if section_shape(w[0], n, m).is_some() {
            break;
        }
        let line = *line;
        if w.len() != arity + 1 {
            return Err(parse_err(line, format!("{name} lines have {arity} indices and a value")));
        }
        let mut idx = Vec::with_capacity(arity);
        for (s, bound) in w[..arity].iter().zip(dom.iter().chain(&cod)) {
            let i = parse_usize(line, s)?;
            if i >= *bound {
                return Err(Error::Range { line, msg: format!("{name} index {i} must be below {bound}") });
            }
            idx.push(i);
        }
        let v = field.parse_scalar(w[arity]).map_err(|e| parse_err(line, e.to_string()))?;
        entries.push((flatten(&cod, &idx[dom.len()..]), flatten(&dom, &idx[..dom.len()]), v, line));
        lines.pos += 1;
    }
    let rows = cod.iter().product();
    let cols = dom.iter().product();
    let mut seen = std::collections::HashSet::new();
    for (r, c, _, line) in &entries {
        if !seen.insert((*r, *c)) {
            return Err(parse_err(*line, format!("duplicate {name} entry")));
        }
    }
    LinMap::from_triplets(field, rows, cols, entries.into_iter().map(|(r, c, v, _)| (r, c, v)))
}

pub fn parse(text: &str) -> Result<HscDocument> {
    let mut lines = Lines::new(text);
    let (line, head) = lines.expect("hsc")?;
    let doc = match head.as_slice() {
        ["1", "algebra"] => HscDocument::Algebra(parse_algebra(&mut lines)?),
        ["1", "module", kind] => {
            let kind = match *kind {
                "lr" => ModuleKind::Lr,
                "yd" => ModuleKind::Yd,
                k => return Err(parse_err(line, format!("unknown module kind `{k}`"))),
            };
            HscDocument::Module(parse_module(&mut lines, kind)?)
        }
        _ => return Err(parse_err(line, "expected `hsc 1 algebra` or `hsc 1 module lr|yd`")),
    };
    if let Some((line, w)) = lines.peek() {
        return Err(parse_err(*line, format!("unexpected `{}`", w[0])));
    }
    Ok(doc)
}

fn parse_algebra(lines: &mut Lines<'_>) -> Result<AlgebraDoc> {
    let field = parse_field(lines)?;
    let n = parse_dim(lines, "dim")?;
    let (line, args) = lines.expect("labels")?;
    let labels = parse_labels(line, args, n)?;
    let provenance = lines.optional("provenance").map(|(_, a)| a.join(" "));
    let mult = parse_section(lines, "MULT", field, n, 0)?;
    let unit = parse_section(lines, "UNIT", field, n, 0)?;
    let comult = parse_section(lines, "COMULT", field, n, 0)?;
    let counit = parse_section(lines, "COUNIT", field, n, 0)?;
    let antipode = match lines.peek() {
        Some((_, w)) if w[0] == "ANTIPODE" => Some(parse_section(lines, "ANTIPODE", field, n, 0)?),
        _ => None,
    };
    let bialgebra = Bialgebra::new(labels, mult, unit, comult, counit)?;
    Ok(AlgebraDoc { bialgebra, antipode, provenance })
}

fn parse_module(lines: &mut Lines<'_>, kind: ModuleKind) -> Result<ModuleDoc> {
    let field = parse_field(lines)?;
    let algdim = parse_dim(lines, "algdim")?;
    let dim = parse_dim(lines, "dim")?;
    let (line, args) = lines.expect("algebra")?;
    let algebra = one_arg(line, "algebra", &args)?.to_string();
    let tensor_with_dual = match lines.optional("base") {
        None => false,
        Some((_, a)) if a == ["tensor_with_dual"] => true,
        Some((line, _)) => return Err(parse_err(line, "expected `base tensor_with_dual`")),
    };
    let labels = match lines.optional("labels") {
        Some((line, args)) => Some(parse_labels(line, args, dim)?),
        None => None,
    };
    let n = if tensor_with_dual { algdim * algdim } else { algdim };
    let maps =
        kind.sections().iter().map(|s| parse_section(lines, s, field, n, dim)).collect::<Result<Vec<_>>>()?;
    Ok(ModuleDoc { kind, field, algdim, dim, algebra, tensor_with_dual, labels, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lrcert_core::hopf::{sweedler, trivial_bialgebra, zoo};

    fn algebra_doc(b: Bialgebra, antipode: Option<LinMap>) -> HscDocument {
        HscDocument::Algebra(AlgebraDoc { bialgebra: b, antipode, provenance: None })
    }

    #[test]
    fn minimal_trivial_document() {
        let text = "hsc 1 algebra\nfield Q\ndim 1\nlabels 1\nMULT\n0 0 0 1\nUNIT\n0 1\nCOMULT\n0 0 0 1\nCOUNIT\n0 1\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc, algebra_doc(trivial_bialgebra(FieldSpec::Rationals), None));
        assert_eq!(emit(&doc).unwrap(), text);
    }

    #[test]
    fn zoo_round_trips() {
        for z in zoo().unwrap() {
            let doc = algebra_doc((**z.hopf.bialgebra()).clone(), Some(z.hopf.antipode().clone()));
            let text = emit(&doc).unwrap();
            let back = parse(&text).unwrap();
            assert_eq!(back, doc, "{}", z.name);
            assert_eq!(emit(&back).unwrap(), text);
        }
    }

    #[test]
    fn sweedler_labels_survive() {
        let b = sweedler(FieldSpec::Rationals).unwrap();
        let HscDocument::Algebra(a) = parse(&emit(&algebra_doc(b.clone(), None)).unwrap()).unwrap() else {
            panic!("kind")
        };
        assert_eq!(a.bialgebra.labels(), b.labels());
    }

    #[test]
    fn index_out_of_range_names_line() {
        let text = "hsc 1 algebra\nfield Q\ndim 1\nlabels 1\nMULT\n0 0 1 1\n";
        assert_eq!(parse(text).unwrap_err(), Error::Range { line: 6, msg: "MULT index 1 must be below 1".into() });
    }

    #[test]
    fn malformed_inputs_are_errors() {
        let cases = [
            ("", 1),
            ("hsc 2 algebra\n", 1),
            ("hsc 1 algebra\nfield GF 8\n", 0),
            ("hsc 1 algebra\nfield Q\ndim 1\nlabels a b\n", 4),
            ("hsc 1 algebra\nfield Q\ndim 1\nlabels a\nMULT\n0 0 0 1/0\n", 6),
            ("hsc 1 algebra\nfield Q\ndim 1\nlabels a\nMULT\n0 0 0 1\n0 0 0 2\n", 7),
            ("hsc 1 algebra\nfield Q\ndim 1\nlabels a\nMULT\n0 0 1\n", 6),
        ];
        for (text, line) in cases {
            match parse(text).unwrap_err() {
                Error::Parse { line: l, .. } | Error::Range { line: l, .. } => assert_eq!(l, line, "{text:?}"),
                Error::InvalidField(_) => assert_eq!(line, 0),
                e => panic!("{text:?}: {e}"),
            }
        }
    }

    #[test]
    fn comments_are_ignored() {
        let text = "# header\nhsc 1 algebra # kind\nfield Q\ndim 1\nlabels 1\nMULT\n0 0 0 1\nUNIT\n0 1\nCOMULT\n0 0 0 1\nCOUNIT\n0 1\n";
        assert!(matches!(parse(text).unwrap(), HscDocument::Algebra(_)));
    }
}
