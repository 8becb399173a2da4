//! Translation-invariant stabilizer codes: validation, files and built-ins.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fp_linalg::is_prime;
use crate::laurent::{LaurentError, LaurentPoly, Monomial};
use crate::pauli::{pairing_poly, PauliVector};

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("q must be positive")]
    NoQudits,
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("generators do not commute: pairs {0:?}")]
    NotCommuting(Vec<(usize, usize)>),
    #[error("unknown built-in code {0:?}")]
    UnknownBuiltin(String),
    #[error("bad built-in parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error in {path} at line {line}, column {column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("invalid field in {path}: {field}: {message}")]
    Field { path: String, field: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub name: String,
    pub p: u32,
    pub q: usize,
    pub labels: Vec<String>,
    pub generators: Vec<PauliVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub commuting: bool,
    pub violating_pairs: Vec<(usize, usize)>,
    pub range: i64,
}

/// Translate so that the support box of `g` starts at the origin.
pub fn normalize_generator(g: &PauliVector) -> PauliVector {
    match g.support_box() {
        None => g.clone(),
        Some(b) => g.shift(Monomial::new(-b.xmin, -b.ymin)),
    }
}

impl CodeSpec {
    /// Build a code, normalizing every generator; commutation is not checked.
    pub fn new(
        name: impl Into<String>,
        p: u32,
        q: usize,
        labels: Vec<String>,
        generators: Vec<PauliVector>,
    ) -> Result<Self, CodeError> {
        if !is_prime(p) {
            return Err(CodeError::NotPrime(p));
        }
        if q == 0 {
            return Err(CodeError::NoQudits);
        }
        for (i, g) in generators.iter().enumerate() {
            if g.is_zero() {
                return Err(CodeError::ZeroGenerator(i));
            }
            if g.p() != p || g.q() != q {
                return Err(CodeError::BadParams(format!("generator {i} has the wrong shape")));
            }
        }
        let mut labels = labels;
        for i in labels.len()..generators.len() {
            labels.push(format!("g{}", i + 1));
        }
        labels.truncate(generators.len());
        let generators = generators.iter().map(normalize_generator).collect();
        Ok(CodeSpec { name: name.into(), p, q, labels, generators })
    }

    /// Like [`CodeSpec::new`] but rejects non-commuting generator sets.
    pub fn validated(
        name: impl Into<String>,
        p: u32,
        q: usize,
        labels: Vec<String>,
        generators: Vec<PauliVector>,
    ) -> Result<Self, CodeError> {
        let code = CodeSpec::new(name, p, q, labels, generators)?;
        let report = validate(&code);
        if report.commuting {
            Ok(code)
        } else {
            Err(CodeError::NotCommuting(report.violating_pairs))
        }
    }

    pub fn n_s(&self) -> usize {
        self.generators.len()
    }

    /// `(l_x, l_y)`: the largest x and y extents of the normalized generators.
    pub fn extents(&self) -> (i64, i64) {
        self.generators.iter().filter_map(|g| g.support_box()).fold((0, 0), |(lx, ly), b| {
            (lx.max(b.xmax - b.xmin), ly.max(b.ymax - b.ymin))
        })
    }

    /// Side of the smallest square window holding every generator.
    pub fn range(&self) -> i64 {
        let (lx, ly) = self.extents();
        lx.max(ly) + 1
    }

    /// The code under `y ↦ -y`, renormalized.
    pub fn reflect_y(&self) -> CodeSpec {
        let generators = self.generators.iter().map(|g| normalize_generator(&g.reflect_y())).collect();
        CodeSpec { name: format!("{}-reflected", self.name), p: self.p, q: self.q, labels: self.labels.clone(), generators }
    }

    pub fn to_file(&self) -> CodeFile {
        let generators = self
            .generators
            .iter()
            .zip(&self.labels)
            .map(|(g, label)| {
                let mut terms = Vec::new();
                for (block, offset) in [("X", 0), ("Z", self.q)] {
                    for qudit in 0..self.q {
                        for (m, c) in g.comp(offset + qudit).terms() {
                            terms.push(TermFile { block: block.to_string(), qudit, x: m.xexp, y: m.yexp, coeff: c });
                        }
                    }
                }
                GeneratorFile { label: label.clone(), terms }
            })
            .collect();
        CodeFile { name: self.name.clone(), p: self.p, q: self.q, generators }
    }

    pub fn from_file(file: &CodeFile, origin: &str) -> Result<CodeSpec, CodeError> {
        let field = |f: String, m: &str| CodeError::Field { path: origin.to_string(), field: f, message: m.to_string() };
        if !is_prime(file.p) {
            return Err(field("p".into(), &format!("{} is not prime", file.p)));
        }
        if file.q == 0 {
            return Err(field("q".into(), "must be positive"));
        }
        let mut gens = Vec::new();
        let mut labels = Vec::new();
        for (gi, g) in file.generators.iter().enumerate() {
            let mut v = PauliVector::zero(file.p, file.q);
            for (ti, t) in g.terms.iter().enumerate() {
                let at = format!("generators[{gi}].terms[{ti}]");
                let offset = match t.block.as_str() {
                    "X" => 0,
                    "Z" => file.q,
                    other => return Err(field(format!("{at}.block"), &format!("expected \"X\" or \"Z\", got {other:?}"))),
                };
                if t.qudit >= file.q {
                    return Err(field(format!("{at}.qudit"), &format!("{} out of range 0..{}", t.qudit, file.q)));
                }
                if t.coeff == 0 || t.coeff >= file.p {
                    return Err(field(format!("{at}.coeff"), &format!("{} out of range 1..{}", t.coeff, file.p)));
                }
                v.comp_mut(offset + t.qudit).add_term(Monomial::new(t.x, t.y), t.coeff as i64);
            }
            if v.is_zero() {
                return Err(field(format!("generators[{gi}]"), "generator is the identity"));
            }
            gens.push(v);
            labels.push(g.label.clone());
        }
        CodeSpec::new(file.name.clone(), file.p, file.q, labels, gens)
    }
}

/// Commutation report over all translates of all generator pairs.
pub fn validate(code: &CodeSpec) -> ValidationReport {
    let mut violating_pairs = Vec::new();
    for mu in 0..code.n_s() {
        for nu in mu..code.n_s() {
            let poly = pairing_poly(&code.generators[mu], &code.generators[nu]).expect("shapes agree");
            if !poly.is_zero() {
                violating_pairs.push((mu, nu));
            }
        }
    }
    ValidationReport { commuting: violating_pairs.is_empty(), violating_pairs, range: code.range() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub block: String,
    pub qudit: usize,
    pub x: i64,
    pub y: i64,
    pub coeff: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    pub label: String,
    pub terms: Vec<TermFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub name: String,
    pub p: u32,
    pub q: usize,
    pub generators: Vec<GeneratorFile>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OnConflict {
    Reject,
    Warn,
}

pub fn parse_code(text: &str, origin: &str, policy: OnConflict) -> Result<(CodeSpec, ValidationReport), CodeError> {
    let file: CodeFile = serde_json::from_str(text).map_err(|e| CodeError::Parse {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let code = CodeSpec::from_file(&file, origin)?;
    let report = validate(&code);
    if !report.commuting && policy == OnConflict::Reject {
        return Err(CodeError::NotCommuting(report.violating_pairs));
    }
    Ok((code, report))
}

pub fn load(path: impl AsRef<Path>) -> Result<CodeSpec, CodeError> {
    load_with(path, OnConflict::Reject).map(|(c, _)| c)
}

pub fn load_with(path: impl AsRef<Path>, policy: OnConflict) -> Result<(CodeSpec, ValidationReport), CodeError> {
    let path = path.as_ref();
    let origin = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CodeError::Io { path: origin.clone(), source })?;
    parse_code(&text, &origin, policy)
}

pub fn to_json(code: &CodeSpec) -> String {
    let mut s = serde_json::to_string_pretty(&code.to_file()).expect("serializable");
    s.push('\n');
    s
}

pub fn save(code: &CodeSpec, path: impl AsRef<Path>) -> Result<(), CodeError> {
    let path = path.as_ref();
    fs::write(path, to_json(code)).map_err(|source| CodeError::Io { path: path.display().to_string(), source })
}

fn x_term(v: &mut PauliVector, qudit: usize, x: i64, y: i64) {
    v.comp_mut(qudit).add_term(Monomial::new(x, y), 1);
}

fn z_term(v: &mut PauliVector, qudit: usize, x: i64, y: i64) {
    let q = v.q();
    v.comp_mut(q + qudit).add_term(Monomial::new(x, y), 1);
}

/// Toric code with the vertical-edge parts raised by `h` rows.
///
/// Qudit 0 is the horizontal edge ending at a site, qudit 1 the vertical edge
/// ending at it. `h = 0` is the ordinary toric code.
pub fn shifted_toric(h: i64) -> CodeSpec {
    let mut star = PauliVector::zero(2, 2);
    x_term(&mut star, 0, 0, 0);
    x_term(&mut star, 0, 1, 0);
    x_term(&mut star, 1, 0, h);
    x_term(&mut star, 1, 0, h + 1);
    let mut plaquette = PauliVector::zero(2, 2);
    z_term(&mut plaquette, 0, 1, 0);
    z_term(&mut plaquette, 0, 1, 1);
    z_term(&mut plaquette, 1, 0, 1 + h);
    z_term(&mut plaquette, 1, 1, 1 + h);
    let name = if h == 0 { "toric".to_string() } else { format!("shifted_toric({h})") };
    CodeSpec::new(name, 2, 2, vec!["A_v".into(), "B_p".into()], vec![star, plaquette]).expect("valid")
}

pub fn toric() -> CodeSpec {
    shifted_toric(0)
}

/// One qubit per site: X at the origin times Z on the four neighbours.
pub fn cluster2d() -> CodeSpec {
    let mut g = PauliVector::zero(2, 1);
    x_term(&mut g, 0, 0, 0);
    for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
        z_term(&mut g, 0, dx, dy);
    }
    CodeSpec::new("cluster2d", 2, 1, vec!["K".into()], vec![g]).expect("valid")
}

/// Product state: Z on every site.
pub fn trivial() -> CodeSpec {
    let mut g = PauliVector::zero(2, 1);
    z_term(&mut g, 0, 0, 0);
    CodeSpec::new("trivial", 2, 1, vec!["Z".into()], vec![g]).expect("valid")
}

/// Bivariate bicycle code: X check `(a, b | 0, 0)`, Z check `(0, 0 | b̄, -ā)`.
pub fn bb(p: u32, a: &LaurentPoly, b: &LaurentPoly) -> Result<CodeSpec, CodeError> {
    if a.is_zero() || b.is_zero() {
        return Err(CodeError::BadParams("bb polynomials must be nonzero".into()));
    }
    let zero = LaurentPoly::zero(p);
    let xs = PauliVector::new(p, 2, vec![a.clone(), b.clone(), zero.clone(), zero.clone()])
        .map_err(|e| CodeError::BadParams(e.to_string()))?;
    let zs = PauliVector::new(p, 2, vec![zero.clone(), zero, b.antipode(), a.antipode().scale(-1)])
        .map_err(|e| CodeError::BadParams(e.to_string()))?;
    let name = format!("bb({a}, {b})");
    CodeSpec::validated(name, p, 2, vec!["X".into(), "Z".into()], vec![xs, zs])
}

/// Resolve a built-in by name, e.g. `toric`, `shifted_toric(2)`,
/// `bb(x^3+y+y^2, y^3+x+x^2)`.
pub fn builtin(spec: &str) -> Result<CodeSpec, CodeError> {
    let spec = spec.trim();
    let (name, args) = match spec.split_once('(') {
        Some((n, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| CodeError::BadParams(format!("unclosed parameters in {spec:?}")))?;
            (n.trim(), Some(inner))
        }
        None => (spec, None),
    };
    match (name, args) {
        ("toric", None) => Ok(toric()),
        ("trivial", None) => Ok(trivial()),
        ("cluster2d", None) => Ok(cluster2d()),
        ("shifted_toric", Some(h)) => {
            let h: i64 = h.trim().trim_start_matches("h=").parse().map_err(|_| CodeError::BadParams(format!("bad height {h:?}")))?;
            if h < 0 {
                return Err(CodeError::BadParams("height must be nonnegative".into()));
            }
            Ok(shifted_toric(h))
        }
        ("bb", Some(polys)) => {
            let parts: Vec<&str> = polys.split(',').collect();
            if parts.len() != 2 {
                return Err(CodeError::BadParams("bb takes two polynomials".into()));
            }
            let a = LaurentPoly::parse(2, parts[0])?;
            let b = LaurentPoly::parse(2, parts[1])?;
            bb(2, &a, &b)
        }
        _ => Err(CodeError::UnknownBuiltin(spec.to_string())),
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["toric", "shifted_toric(h)", "cluster2d", "bb(a_poly, b_poly)", "trivial"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for name in ["toric", "trivial", "cluster2d", "shifted_toric(1)", "shifted_toric(3)", "bb(x^3+y+y^2, y^3+x+x^2)"] {
            let code = builtin(name).unwrap();
            assert!(validate(&code).commuting, "{name}");
        }
        assert_eq!(validate(&toric()).range, 2);
        assert!(matches!(builtin("nope"), Err(CodeError::UnknownBuiltin(_))));
    }

    #[test]
    fn anticommuting_pair_is_reported() {
        let x = PauliVector::single(2, 1, 0, Monomial::ONE, 1, 0);
        let z = PauliVector::single(2, 1, 0, Monomial::ONE, 0, 1);
        let code = CodeSpec::new("xz", 2, 1, vec![], vec![x, z]).unwrap();
        let report = validate(&code);
        assert!(!report.commuting);
        assert_eq!(report.violating_pairs, vec![(0, 1)]);
    }

    #[test]
    fn json_round_trip() {
        let code = builtin("shifted_toric(2)").unwrap();
        let (back, report) = parse_code(&to_json(&code), "mem", OnConflict::Reject).unwrap();
        assert!(report.commuting);
        assert_eq!(back, code);
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = parse_code("{\n \"name\": 3 }", "mem", OnConflict::Reject).unwrap_err();
        assert!(matches!(err, CodeError::Parse { line: 2, .. }), "{err}");
        let bad_p = r#"{"name":"n","p":4,"q":1,"generators":[]}"#;
        assert!(matches!(parse_code(bad_p, "mem", OnConflict::Reject), Err(CodeError::Field { .. })));
    }
}
