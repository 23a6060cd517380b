//! JSON file formats for problems, solutions and set families, plus the
//! human-readable rendering of polyhedra.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`); integer literals are
//! accepted on input. Keys are printed in sorted order with a fixed layout,
//! so printing a parsed canonical file reproduces it byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::arith::{self, format_rational, parse_rational, RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};
use crate::poly::{Cone, HRep, VRep};
use crate::setopt::{
    NoSolutionWitness, PRep, Problem, SolutionPair, SolveResult, UpperImage, VerificationReport,
};
use crate::vlp::VlpProblem;

// ---------------------------------------------------------------- reading

fn read_json(path: &Path) -> Result<Value> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_json(&text)
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::format("<document>", e.to_string()))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::format(path, "expected an object"))
}

fn check_keys(map: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<()> {
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::format(join(path, key), "unknown key"));
        }
    }
    Ok(())
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn field<'a>(map: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value> {
    map.get(key)
        .ok_or_else(|| Error::format(join(path, key), "missing key"))
}

fn parse_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::format(path, "expected a nonnegative integer"))
}

fn parse_bool(v: &Value, path: &str) -> Result<bool> {
    v.as_bool()
        .ok_or_else(|| Error::format(path, "expected true or false"))
}

fn parse_rat(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| Error::format(path, e.to_string())),
        Value::Number(num) => num.as_i64().map(arith::int).ok_or_else(|| {
            Error::format(path, "numbers must be integers; write fractions as \"p/q\"")
        }),
        _ => Err(Error::format(
            path,
            "expected an integer or a \"p/q\" string",
        )),
    }
}

fn parse_vec(v: &Value, path: &str, len: Option<usize>) -> Result<RatVector> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::format(path, "expected a list of rationals"))?;
    if let Some(len) = len {
        if items.len() != len {
            return Err(Error::format(
                path,
                format!("expected {len} entries, found {}", items.len()),
            ));
        }
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_rat(x, &format!("{path}[{i}]")))
        .collect()
}

fn parse_vec_list(v: &Value, path: &str, len: usize) -> Result<Vec<RatVector>> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::format(path, "expected a list of vectors"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_vec(x, &format!("{path}[{i}]"), Some(len)))
        .collect()
}

/// Rows of a matrix. Without a known column count it is taken from the
/// first row (zero for an empty matrix).
fn parse_matrix(v: &Value, path: &str, ncols: Option<usize>) -> Result<RatMatrix> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::format(path, "expected a list of rows"))?;
    let ncols = match ncols {
        Some(c) => c,
        None => match items.first() {
            Some(first) => first
                .as_array()
                .map(Vec::len)
                .ok_or_else(|| Error::format(format!("{path}[0]"), "expected a row"))?,
            None => 0,
        },
    };
    let rows = parse_vec_list(v, path, ncols)?;
    RatMatrix::from_rows(ncols, rows).map_err(|e| Error::format(path, e.to_string()))
}

fn expect_rows(path: &str, m: &RatMatrix, rows: usize) -> Result<()> {
    if m.nrows() != rows {
        return Err(Error::format(
            path,
            format!("expected {rows} rows, found {}", m.nrows()),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------- writing

fn rat_value(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

fn vec_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat_value).collect())
}

fn vec_list_value(vs: &[RatVector]) -> Value {
    Value::Array(vs.iter().map(|v| vec_value(v)).collect())
}

fn matrix_value(m: &RatMatrix) -> Value {
    Value::Array(m.rows().map(vec_value).collect())
}

fn obj(entries: Vec<(&str, Value)>) -> Value {
    Value::Object(
        entries
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    )
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Deterministic layout: sorted keys, two-space indent, scalar lists on one
/// line, one line per row for lists of scalar lists.
pub fn to_canonical_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent + 1);
    let close = "  ".repeat(indent);
    match value {
        Value::Object(map) if !map.is_empty() => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, key) in keys.iter().enumerate() {
                let _ = write!(out, "{pad}{}: ", Value::String((*key).clone()));
                write_value(out, &map[key.as_str()], indent + 1);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{close}}}");
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_scalar) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, item, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{close}]");
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            let _ = write!(out, "[{}]", parts.join(", "));
        }
        other => out.push_str(&other.to_string()),
    }
}

// ---------------------------------------------------------------- problems

/// How the graph of `F_C` is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphForm {
    /// `A x + B y >= b`.
    H {
        a: RatMatrix,
        b: RatMatrix,
        rhs: RatVector,
    },
    /// `Mx x + My y + Mz z >= c`, `z` projected out.
    P(PRep),
    /// `F(x) = {M x}` subject to `A x >= b`.
    Vlp {
        objective: RatMatrix,
        constraints: RatMatrix,
        rhs: RatVector,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeForm {
    Generators(Vec<RatVector>),
    /// `{y : G y >= 0}`.
    H(RatMatrix),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub n: usize,
    pub q: usize,
    pub graph: GraphForm,
    pub cone: ConeForm,
}

impl ProblemFile {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_value(&read_json(path.as_ref())?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_value(&parse_json(text)?)
    }

    fn from_value(doc: &Value) -> Result<Self> {
        let top = object(doc, "<document>")?;
        check_keys(top, "", &["n", "q", "graph", "cone"])?;
        let n = parse_usize(field(top, "", "n")?, "n")?;
        let q = parse_usize(field(top, "", "q")?, "q")?;
        let graph = object(field(top, "", "graph")?, "graph")?;
        check_keys(graph, "graph", &["h", "p", "vlp"])?;
        if graph.len() != 1 {
            return Err(Error::format(
                "graph",
                "exactly one of \"h\", \"p\", \"vlp\" is required",
            ));
        }
        let (form, body) = graph.iter().next().expect("one entry");
        let path = format!("graph.{form}");
        let body = object(body, &path)?;
        let graph = match form.as_str() {
            "h" => {
                check_keys(body, &path, &["A", "B", "b"])?;
                let a = parse_matrix(field(body, &path, "A")?, &join(&path, "A"), Some(n))?;
                let m = a.nrows();
                let b = parse_matrix(field(body, &path, "B")?, &join(&path, "B"), Some(q))?;
                expect_rows(&join(&path, "B"), &b, m)?;
                let rhs = parse_vec(field(body, &path, "b")?, &join(&path, "b"), Some(m))?;
                GraphForm::H { a, b, rhs }
            }
            "p" => {
                check_keys(body, &path, &["Mx", "My", "Mz", "c"])?;
                let mx = parse_matrix(field(body, &path, "Mx")?, &join(&path, "Mx"), Some(n))?;
                let m = mx.nrows();
                let my = parse_matrix(field(body, &path, "My")?, &join(&path, "My"), Some(q))?;
                expect_rows(&join(&path, "My"), &my, m)?;
                let mz = parse_matrix(field(body, &path, "Mz")?, &join(&path, "Mz"), None)?;
                expect_rows(&join(&path, "Mz"), &mz, m)?;
                let c = parse_vec(field(body, &path, "c")?, &join(&path, "c"), Some(m))?;
                GraphForm::P(PRep { mx, my, mz, c })
            }
            _ => {
                check_keys(body, &path, &["M", "A", "b"])?;
                let objective = parse_matrix(field(body, &path, "M")?, &join(&path, "M"), Some(n))?;
                expect_rows(&join(&path, "M"), &objective, q)?;
                let constraints =
                    parse_matrix(field(body, &path, "A")?, &join(&path, "A"), Some(n))?;
                let rhs = parse_vec(
                    field(body, &path, "b")?,
                    &join(&path, "b"),
                    Some(constraints.nrows()),
                )?;
                GraphForm::Vlp {
                    objective,
                    constraints,
                    rhs,
                }
            }
        };
        let cone = object(field(top, "", "cone")?, "cone")?;
        check_keys(cone, "cone", &["generators", "h"])?;
        if cone.len() != 1 {
            return Err(Error::format(
                "cone",
                "exactly one of \"generators\", \"h\" is required",
            ));
        }
        let cone = if let Some(gens) = cone.get("generators") {
            ConeForm::Generators(parse_vec_list(gens, "cone.generators", q)?)
        } else {
            let h = object(&cone["h"], "cone.h")?;
            check_keys(h, "cone.h", &["G"])?;
            ConeForm::H(parse_matrix(field(h, "cone.h", "G")?, "cone.h.G", Some(q))?)
        };
        Ok(ProblemFile { n, q, graph, cone })
    }

    pub fn to_value(&self) -> Value {
        let graph = match &self.graph {
            GraphForm::H { a, b, rhs } => obj(vec![(
                "h",
                obj(vec![
                    ("A", matrix_value(a)),
                    ("B", matrix_value(b)),
                    ("b", vec_value(rhs)),
                ]),
            )]),
            GraphForm::P(p) => obj(vec![(
                "p",
                obj(vec![
                    ("Mx", matrix_value(&p.mx)),
                    ("My", matrix_value(&p.my)),
                    ("Mz", matrix_value(&p.mz)),
                    ("c", vec_value(&p.c)),
                ]),
            )]),
            GraphForm::Vlp {
                objective,
                constraints,
                rhs,
            } => obj(vec![(
                "vlp",
                obj(vec![
                    ("M", matrix_value(objective)),
                    ("A", matrix_value(constraints)),
                    ("b", vec_value(rhs)),
                ]),
            )]),
        };
        let cone = match &self.cone {
            ConeForm::Generators(g) => obj(vec![("generators", vec_list_value(g))]),
            ConeForm::H(g) => obj(vec![("h", obj(vec![("G", matrix_value(g))]))]),
        };
        obj(vec![
            ("n", Value::from(self.n)),
            ("q", Value::from(self.q)),
            ("graph", graph),
            ("cone", cone),
        ])
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(&self.to_value())
    }

    pub fn cone(&self) -> Result<Cone> {
        match &self.cone {
            ConeForm::Generators(g) => Cone::from_generators(self.q, g.clone()),
            ConeForm::H(g) => Ok(Cone::from_inequalities(g.clone())),
        }
    }

    pub fn vlp(&self) -> Result<Option<VlpProblem>> {
        match &self.graph {
            GraphForm::Vlp {
                objective,
                constraints,
                rhs,
            } => Ok(Some(VlpProblem::new(
                objective.clone(),
                constraints.clone(),
                rhs.clone(),
                self.cone()?,
            )?)),
            _ => Ok(None),
        }
    }

    pub fn problem(&self) -> Result<Problem> {
        let cone = self.cone()?;
        match &self.graph {
            GraphForm::H { a, b, rhs } => Problem::new(a.clone(), b.clone(), rhs.clone(), cone),
            GraphForm::P(p) => Problem::from_prep(p, cone),
            GraphForm::Vlp { .. } => self.vlp()?.expect("vlp form").to_setopt(),
        }
    }

    /// An H-form file describing an already built problem.
    pub fn from_problem(problem: &Problem) -> Self {
        ProblemFile {
            n: problem.n(),
            q: problem.q(),
            graph: GraphForm::H {
                a: problem.a().clone(),
                b: problem.b().clone(),
                rhs: problem.rhs().to_vec(),
            },
            cone: ConeForm::Generators(problem.cone().generators().to_vec()),
        }
    }
}

// ---------------------------------------------------------------- solutions

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Solution,
    NoSolution,
    Infeasible,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Solution => "solution",
            Status::NoSolution => "no_solution",
            Status::Infeasible => "infeasible",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        [Status::Solution, Status::NoSolution, Status::Infeasible]
            .into_iter()
            .find(|st| st.as_str() == s)
    }

    /// Process exit code for `solve`.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Solution => 0,
            Status::NoSolution => 2,
            Status::Infeasible => 3,
        }
    }
}

impl SolveResult {
    pub fn status(&self) -> Status {
        match self {
            SolveResult::Infeasible => Status::Infeasible,
            SolveResult::NoSolution(_) => Status::NoSolution,
            SolveResult::Solution { .. } => Status::Solution,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFile {
    pub status: Status,
    pub points: Vec<RatVector>,
    pub directions: Vec<RatVector>,
    pub upper_image: Option<UpperImage>,
    pub witness: Option<NoSolutionWitness>,
    pub verification: Option<VerificationReport>,
}

impl SolutionFile {
    pub fn from_result(result: &SolveResult, verification: Option<VerificationReport>) -> Self {
        let mut file = SolutionFile {
            status: result.status(),
            points: vec![],
            directions: vec![],
            upper_image: None,
            witness: None,
            verification,
        };
        match result {
            SolveResult::Infeasible => {}
            SolveResult::NoSolution(w) => file.witness = Some(w.clone()),
            SolveResult::Solution { pair, upper_image } => {
                file.points = pair.points.clone();
                file.directions = pair.directions.clone();
                file.upper_image = Some(upper_image.clone());
            }
        }
        file
    }

    pub fn pair(&self) -> SolutionPair {
        SolutionPair {
            points: self.points.clone(),
            directions: self.directions.clone(),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_value(&read_json(path.as_ref())?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_value(&parse_json(text)?)
    }

    fn from_value(doc: &Value) -> Result<Self> {
        let top = object(doc, "<document>")?;
        check_keys(
            top,
            "",
            &[
                "status",
                "S_bar",
                "S_hat",
                "upper_image",
                "witness",
                "verification",
            ],
        )?;
        let status_text = field(top, "", "status")?
            .as_str()
            .ok_or_else(|| Error::format("status", "expected a string"))?;
        let status = Status::parse(status_text).ok_or_else(|| {
            Error::format(
                "status",
                "expected \"solution\", \"no_solution\" or \"infeasible\"",
            )
        })?;
        let vectors = |key: &str| -> Result<Vec<RatVector>> {
            match top.get(key) {
                None => Ok(vec![]),
                Some(v) => {
                    let len = v
                        .as_array()
                        .and_then(|a| a.first())
                        .and_then(Value::as_array)
                        .map(Vec::len);
                    match len {
                        Some(len) => parse_vec_list(v, key, len),
                        None => parse_vec_list(v, key, 0),
                    }
                }
            }
        };
        let points = vectors("S_bar")?;
        let directions = vectors("S_hat")?;
        let upper_image = top
            .get("upper_image")
            .map(|v| parse_upper_image(v, "upper_image"))
            .transpose()?;
        let witness = match top.get("witness") {
            None => None,
            Some(v) => {
                let w = object(v, "witness")?;
                check_keys(w, "witness", &["x", "y"])?;
                Some(NoSolutionWitness {
                    x: parse_vec(field(w, "witness", "x")?, "witness.x", None)?,
                    y: parse_vec(field(w, "witness", "y")?, "witness.y", None)?,
                })
            }
        };
        let verification = match top.get("verification") {
            None => None,
            Some(v) => {
                let r = object(v, "verification")?;
                let keys = [
                    "infimum_attained",
                    "points_minimizing",
                    "directions_minimizing",
                    "issues",
                ];
                check_keys(r, "verification", &keys)?;
                let flag =
                    |k: &str| parse_bool(field(r, "verification", k)?, &join("verification", k));
                let issues = field(r, "verification", "issues")?
                    .as_array()
                    .and_then(|a| a.iter().map(|s| s.as_str().map(String::from)).collect())
                    .ok_or_else(|| {
                        Error::format("verification.issues", "expected a list of strings")
                    })?;
                Some(VerificationReport {
                    infimum_attained: flag("infimum_attained")?,
                    points_minimizing: flag("points_minimizing")?,
                    directions_minimizing: flag("directions_minimizing")?,
                    issues,
                })
            }
        };
        Ok(SolutionFile {
            status,
            points,
            directions,
            upper_image,
            witness,
            verification,
        })
    }

    pub fn to_value(&self) -> Value {
        let mut entries = vec![
            ("status", Value::from(self.status.as_str())),
            ("S_bar", vec_list_value(&self.points)),
            ("S_hat", vec_list_value(&self.directions)),
        ];
        if let Some(u) = &self.upper_image {
            entries.push(("upper_image", upper_image_value(u)));
        }
        if let Some(w) = &self.witness {
            entries.push((
                "witness",
                obj(vec![("x", vec_value(&w.x)), ("y", vec_value(&w.y))]),
            ));
        }
        if let Some(r) = &self.verification {
            entries.push((
                "verification",
                obj(vec![
                    ("infimum_attained", Value::from(r.infimum_attained)),
                    ("points_minimizing", Value::from(r.points_minimizing)),
                    (
                        "directions_minimizing",
                        Value::from(r.directions_minimizing),
                    ),
                    (
                        "issues",
                        Value::Array(r.issues.iter().map(|s| Value::from(s.as_str())).collect()),
                    ),
                ]),
            ));
        }
        obj(entries)
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(&self.to_value())
    }
}

fn hrep_value(h: &HRep) -> Value {
    obj(vec![
        ("M", matrix_value(h.matrix())),
        ("v", vec_value(h.rhs())),
    ])
}

fn parse_hrep(v: &Value, path: &str, dim: usize) -> Result<HRep> {
    let h = object(v, path)?;
    check_keys(h, path, &["M", "v"])?;
    let m = parse_matrix(field(h, path, "M")?, &join(path, "M"), Some(dim))?;
    let rhs = parse_vec(field(h, path, "v")?, &join(path, "v"), Some(m.nrows()))?;
    HRep::new(m, rhs).map_err(|e| Error::format(path, e.to_string()))
}

fn upper_image_value(u: &UpperImage) -> Value {
    obj(vec![
        ("dim", Value::from(u.vrep.dim())),
        ("points", vec_list_value(u.vrep.points())),
        ("rays", vec_list_value(u.vrep.rays())),
        ("lines", vec_list_value(u.vrep.lines())),
        ("hrep", hrep_value(&u.hrep)),
    ])
}

fn parse_upper_image(v: &Value, path: &str) -> Result<UpperImage> {
    let u = object(v, path)?;
    check_keys(u, path, &["dim", "points", "rays", "lines", "hrep"])?;
    let dim = parse_usize(field(u, path, "dim")?, &join(path, "dim"))?;
    let list = |k: &str| parse_vec_list(field(u, path, k)?, &join(path, k), dim);
    let vrep = VRep::new(dim, list("points")?, list("rays")?, list("lines")?)
        .map_err(|e| Error::format(path, e.to_string()))?;
    let hrep = parse_hrep(field(u, path, "hrep")?, &join(path, "hrep"), dim)?;
    Ok(UpperImage { hrep, vrep })
}

// ---------------------------------------------------------------- families

/// Named finite sets and named ordering cones in a common space `R^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFile {
    pub q: usize,
    pub sets: Vec<(String, Vec<RatVector>)>,
    pub cones: Vec<(String, Vec<RatVector>)>,
}

impl FamilyFile {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_value(&read_json(path.as_ref())?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_value(&parse_json(text)?)
    }

    fn from_value(doc: &Value) -> Result<Self> {
        let top = object(doc, "<document>")?;
        check_keys(top, "", &["q", "sets", "cones"])?;
        let q = parse_usize(field(top, "", "q")?, "q")?;
        let named = |key: &str, inner: &str| -> Result<Vec<(String, Vec<RatVector>)>> {
            let items = field(top, "", key)?
                .as_array()
                .ok_or_else(|| Error::format(key, "expected a list"))?;
            items
                .iter()
                .enumerate()
                .map(|(i, item)| {
                    let path = format!("{key}[{i}]");
                    let o = object(item, &path)?;
                    check_keys(o, &path, &["name", inner])?;
                    let name = field(o, &path, "name")?
                        .as_str()
                        .ok_or_else(|| Error::format(join(&path, "name"), "expected a string"))?;
                    let vs = parse_vec_list(field(o, &path, inner)?, &join(&path, inner), q)?;
                    Ok((name.to_string(), vs))
                })
                .collect()
        };
        Ok(FamilyFile {
            q,
            sets: named("sets", "points")?,
            cones: named("cones", "generators")?,
        })
    }

    pub fn to_json(&self) -> String {
        let named = |items: &[(String, Vec<RatVector>)], inner: &str| {
            Value::Array(
                items
                    .iter()
                    .map(|(name, vs)| {
                        obj(vec![
                            ("name", Value::from(name.as_str())),
                            (inner, vec_list_value(vs)),
                        ])
                    })
                    .collect(),
            )
        };
        to_canonical_json(&obj(vec![
            ("q", Value::from(self.q)),
            ("sets", named(&self.sets, "points")),
            ("cones", named(&self.cones, "generators")),
        ]))
    }

    /// Each set as the polytope spanned by its points.
    pub fn set_vreps(&self) -> Result<Vec<VRep>> {
        self.sets
            .iter()
            .map(|(_, pts)| VRep::new(self.q, pts.clone(), vec![], vec![]))
            .collect()
    }

    pub fn cone(&self, name: &str) -> Option<Result<Cone>> {
        self.cones
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| Cone::from_generators(self.q, g.clone()))
    }
}

// ---------------------------------------------------------------- display

fn subscript(mut i: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let mut out = Vec::new();
    loop {
        out.push(DIGITS[i % 10]);
        i /= 10;
        if i == 0 {
            break;
        }
    }
    out.iter().rev().collect()
}

/// Uses `−` (U+2212) for negative values.
pub fn display_rational(x: &Rational) -> String {
    let text = format_rational(&x.abs());
    if x.is_negative() {
        format!("−{text}")
    } else {
        text
    }
}

pub fn display_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(display_rational).collect();
    format!("({})", parts.join(", "))
}

/// `a·z >= v` as e.g. `y₁ + 2y₂ ≥ 0`. `names[i]` labels coordinate `i`.
pub fn display_inequality(row: &[Rational], rhs: &Rational, names: &[String]) -> String {
    let mut out = String::new();
    for (coef, name) in row.iter().zip(names) {
        if coef.is_zero() {
            continue;
        }
        let magnitude = coef.abs();
        let sign = if coef.is_negative() { "−" } else { "+" };
        if out.is_empty() {
            if coef.is_negative() {
                out.push('−');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        if !magnitude.is_one() {
            let m = format_rational(&magnitude);
            if magnitude.is_integer() {
                out.push_str(&m);
            } else {
                let _ = write!(out, "({m})");
            }
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    let _ = write!(out, " ≥ {}", display_rational(rhs));
    out
}

/// Coordinate labels `prefix₁ … prefix_dim`.
pub fn coordinate_names(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim)
        .map(|i| format!("{prefix}{}", subscript(i)))
        .collect()
}

/// Comma-separated inequalities; `R^d` when there are none.
pub fn display_hrep(h: &HRep, names: &[String]) -> String {
    if h.num_rows() == 0 {
        return format!("R^{}", h.dim());
    }
    let parts: Vec<String> = h
        .rows()
        .map(|(row, rhs)| display_inequality(row, rhs, names))
        .collect();
    parts.join(", ")
}

pub fn display_vrep(v: &VRep) -> String {
    if v.is_empty() {
        return "empty".to_string();
    }
    let list = |vs: &[RatVector]| {
        vs.iter()
            .map(|x| display_vector(x))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = format!("points: {}", list(v.points()));
    if !v.rays().is_empty() {
        let _ = write!(out, "; rays: {}", list(v.rays()));
    }
    if !v.lines().is_empty() {
        let _ = write!(out, "; lines: {}", list(v.lines()));
    }
    out
}

/// Parses `"1, -1/2"` (commas and/or whitespace) into a vector.
pub fn parse_vector_arg(text: &str) -> Result<RatVector> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int_vec;

    const EX1: &str = r#"{
  "n": 1,
  "q": 2,
  "graph": {"h": {"A": [[1], [-1], [1]], "B": [[1, 0], [0, 1], [0, 0]], "b": [0, 0, 0]}},
  "cone": {"generators": [[1, 0], [0, 1]]}
}"#;

    #[test]
    fn parse_and_canonical_round_trip() {
        let f = ProblemFile::parse(EX1).unwrap();
        assert_eq!(f.n, 1);
        let text = f.to_json();
        let again = ProblemFile::parse(&text).unwrap();
        assert_eq!(again, f);
        assert_eq!(again.to_json(), text);
        let p = f.problem().unwrap();
        assert_eq!(p.m(), 3);
    }

    #[test]
    fn diagnostics_name_the_key() {
        let bad = EX1.replace("\"b\": [0, 0, 0]", "\"b\": [0, \"x\", 0]");
        let err = ProblemFile::parse(&bad).unwrap_err().to_string();
        assert!(err.contains("graph.h.b[1]"), "{err}");
        let bad = EX1.replace("[[1], [-1], [1]]", "[[1, 2], [-1], [1]]");
        assert!(ProblemFile::parse(&bad)
            .unwrap_err()
            .to_string()
            .contains("graph.h.A[0]"));
        let bad = EX1.replace("\"cone\"", "\"cones\"");
        assert!(ProblemFile::parse(&bad)
            .unwrap_err()
            .to_string()
            .contains("cones"));
        let truncated = &EX1[..EX1.len() / 2];
        assert!(ProblemFile::parse(truncated).is_err());
        let two = EX1.replace(
            "\"graph\": {",
            "\"graph\": {\"vlp\": {\"M\": [[1],[1]], \"A\": [], \"b\": []}, ",
        );
        assert!(ProblemFile::parse(&two)
            .unwrap_err()
            .to_string()
            .starts_with("graph:"));
        let float = EX1.replace("[0, 0, 0]", "[0, 0.5, 0]");
        assert!(ProblemFile::parse(&float).is_err());
    }

    #[test]
    fn solution_round_trip() {
        let p = ProblemFile::parse(EX1).unwrap().problem().unwrap();
        let result = p.solve().unwrap();
        let SolveResult::Solution { pair, .. } = &result else {
            panic!("expected a solution");
        };
        let report = p.verify(pair).unwrap();
        let file = SolutionFile::from_result(&result, Some(report));
        let text = file.to_json();
        let again = SolutionFile::parse(&text).unwrap();
        assert_eq!(again, file);
        assert_eq!(again.to_json(), text);
        assert!(p.verify(&again.pair()).unwrap().passed());
    }

    #[test]
    fn display_forms() {
        let names = coordinate_names("y", 2);
        let h = HRep::from_i64(2, &[&[1, 2], &[-1, 0], &[0, 0]], &[0, -1, 3]);
        assert_eq!(display_hrep(&h, &names), "y₁ + 2y₂ ≥ 0, −y₁ ≥ −1, 0 ≥ 3");
        let row = vec![arith::frac(1, 2), arith::frac(-3, 2)];
        assert_eq!(
            display_inequality(&row, &arith::int(0), &names),
            "(1/2)y₁ − (3/2)y₂ ≥ 0"
        );
        assert_eq!(subscript(12), "₁₂");
        assert_eq!(
            parse_vector_arg("1, -1/2 3").unwrap(),
            vec![arith::int(1), arith::frac(-1, 2), arith::int(3)]
        );
        assert_eq!(display_vector(&int_vec(&[1, -2])), "(1, −2)");
    }
}
