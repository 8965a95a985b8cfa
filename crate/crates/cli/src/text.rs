//! Human-readable renderings for `--output text`.

use std::fmt::Write;

use omega_lie::catalog::CatalogEntry;
use omega_lie::extend::Restriction;
use omega_lie::omega::{AffineFamily, IdealFamily, IdealReport, IdealSearch, OmegaKernel, ValidationReport};
use omega_lie::omega::SolubilityReport;
use omega_lie::repr::{CochainDefect, Decomposition, ModuleReport, SubmoduleSearch, WeightDecomposition};
use omega_lie::{Matrix, OmegaAlgebra, PolySystem, Representation, Scalar, Subspace, TailedDerivation};

fn vector(v: &[Scalar]) -> String {
    let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", cells.join(", "))
}

fn subspace(s: &Subspace) -> String {
    let vs: Vec<String> = s.basis_vectors().iter().map(|v| vector(v)).collect();
    format!("span{{{}}}", vs.join(", "))
}

pub fn validation(a: &OmegaAlgebra, r: &ValidationReport) -> String {
    let mut out = String::new();
    if r.valid {
        let kind = if r.is_lie { "Lie algebra" } else { "omega-Lie algebra, not Lie" };
        let _ = writeln!(out, "valid: {kind} of dimension {}", a.dim());
    }
    for v in &r.violations {
        let [x, y, z] = &v.labels;
        let _ = writeln!(out, "violation at ({x}, {y}, {z}): jacobiator {} != {}", vector(&v.lhs), vector(&v.rhs));
    }
    out
}

pub fn catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let params = if e.params.is_empty() { String::new() } else { format!(" [{}]", e.params.join(", ")) };
        let _ = writeln!(out, "{}{params}  basis {}  {}", e.name, e.basis, e.summary);
    }
    out
}

pub fn algebra(a: &OmegaAlgebra) -> String {
    let zero = Scalar::from_int(0);
    let labels = a.basis_labels();
    let n = a.dim();
    let mut out = format!("basis: {}\n", labels.join(", "));
    let combo = |v: &[Scalar]| -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(labels)
            .filter(|(c, _)| *c != &zero)
            .map(|(c, l)| format!("({c}){l}"))
            .collect();
        if terms.is_empty() { "0".into() } else { terms.join(" + ") }
    };
    for i in 0..n {
        for j in i + 1..n {
            let b = a.bracket_basis(i, j);
            if b.iter().any(|c| c != &zero) {
                let _ = writeln!(out, "[{}, {}] = {}", labels[i], labels[j], combo(b));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let w = &a.omega_matrix()[(i, j)];
            if w != &zero {
                let _ = writeln!(out, "omega({}, {}) = {w}", labels[i], labels[j]);
            }
        }
    }
    out
}

pub fn matrices(ms: &[Matrix]) -> String {
    let mut out = format!("dimension {}\n", ms.len());
    for (i, m) in ms.iter().enumerate() {
        let _ = write!(out, "#{}\n{m}", i + 1);
    }
    out
}

pub fn tails(ts: &[TailedDerivation]) -> String {
    let mut out = format!("dimension {}\n", ts.len());
    for (i, t) in ts.iter().enumerate() {
        let _ = write!(out, "#{} tail {}\n{}", i + 1, vector(t.tail.coeffs()), t.map);
    }
    out
}

pub fn restriction(r: &Restriction) -> String {
    let mut out = format!("tail {}\n{}", vector(r.derivation.tail.coeffs()), r.derivation.map);
    if r.projected {
        out.push_str("note: [x, g] leaves g; x-components were dropped\n");
    }
    out
}

fn ideal_family(f: &IdealFamily) -> String {
    match f {
        IdealFamily::Single { ideal } => subspace(ideal),
        IdealFamily::Interval { dim, lower, upper } => {
            format!("every {dim}-dimensional subspace between {} and {}", subspace(lower), subspace(upper))
        }
        IdealFamily::Variety { dim, chart, equations, .. } => format!(
            "{dim}-dimensional family in Pluecker chart {chart} cut out by {} equations",
            equations.len()
        ),
    }
}

pub fn ideals(r: &IdealSearch) -> String {
    let mut out = format!(
        "ideals of dimension {} ({}):\n",
        r.dim,
        if r.exhaustive { "exhaustive" } else { "not exhaustive" }
    );
    if r.families.is_empty() {
        out.push_str("none\n");
    }
    for f in &r.families {
        let _ = writeln!(out, "{}", ideal_family(f));
    }
    out
}

pub fn degree(r: &IdealReport) -> String {
    let mut out = match r.degree {
        Some(d) => format!("degree {d}\n"),
        None if r.normal => "degree not certified\n".into(),
        None => "no proper ideal\n".into(),
    };
    for w in &r.witnesses {
        let _ = writeln!(out, "witness of dimension {}: {}", w.dim, subspace(&w.ideal));
    }
    for c in &r.completeness {
        let _ = writeln!(out, "dimension {}: {}", c.dim, if c.exhaustive { "exhaustive" } else { "not exhaustive" });
    }
    out
}

pub fn solubility(r: &SolubilityReport) -> String {
    let mut out = format!("{}\n", if r.soluble { "soluble" } else { "not soluble" });
    for s in &r.derived_series {
        let _ = writeln!(out, "{}", subspace(s));
    }
    out
}

pub fn family(f: Option<&AffineFamily>) -> String {
    match f {
        None => "no multiplicative form".into(),
        Some(f) => {
            let hom: Vec<String> = f.homogeneous.iter().map(|h| vector(h.coeffs())).collect();
            format!("{} + span{{{}}}", vector(f.particular.coeffs()), hom.join(", "))
        }
    }
}

pub fn kernel(k: &OmegaKernel) -> String {
    let mut out = format!("kernel {}\n", subspace(&k.subspace));
    if k.not_preserved_by.is_empty() {
        let valid = k.report.as_ref().is_some_and(|r| r.valid);
        let _ = writeln!(out, "adjoint action is {}", if valid { "a module" } else { "not a module" });
    } else {
        let _ = writeln!(out, "not ad-invariant under {}", k.not_preserved_by.join(", "));
    }
    out
}

pub fn system(s: &PolySystem) -> String {
    let mut out = format!("variables: {}\n", s.vars().join(", "));
    for p in s.polys() {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn module_report(r: &ModuleReport) -> String {
    let mut out = String::new();
    if r.valid {
        out.push_str("valid module\n");
    }
    for v in &r.violations {
        let _ = write!(out, "violation at ({}, {}):\n{}", v.labels[0], v.labels[1], v.residual);
    }
    out
}

pub fn weights(w: &WeightDecomposition) -> String {
    let mut out = String::new();
    for x in &w.weights {
        let _ = writeln!(out, "{}: {}", x.weight, subspace(&x.space));
    }
    let _ = writeln!(out, "weight spaces are {}submodules", if w.all_submodules { "" } else { "not all " });
    out
}

pub fn submodule(s: &SubmoduleSearch) -> String {
    match s {
        SubmoduleSearch::ProperSubmodule { subspace: sub } => format!("proper submodule {}", subspace(sub)),
        SubmoduleSearch::Irreducible => "irreducible".into(),
        SubmoduleSearch::Inconclusive => "inconclusive".into(),
    }
}

pub fn decomposition(d: &Decomposition) -> String {
    let mut out = String::new();
    for s in &d.summands {
        let _ = writeln!(
            out,
            "{}{}",
            subspace(&s.subspace),
            if s.certified { " (indecomposable)" } else { "" }
        );
    }
    out
}

pub fn module(r: &Representation) -> String {
    let mut out = format!("module of dimension {}\n", r.dim());
    for (l, m) in r.algebra().basis_labels().iter().zip(r.rho()) {
        let _ = write!(out, "{l}:\n{m}");
    }
    out
}

pub fn defect(d: &CochainDefect) -> String {
    format!(
        "defect {}\nexpected {}\n{}",
        vector(&d.defect),
        vector(&d.expected),
        if d.agrees { "agrees" } else { "disagrees" }
    )
}
