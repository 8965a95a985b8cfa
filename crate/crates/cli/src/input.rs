//! Reading JSON inputs from files or stdin and parsing small command-line values.

use std::io::Read;
use std::path::{Path, PathBuf};

use omega_lie::repr::RepresentationFile;
use omega_lie::{parse_scalar, LinearForm, Matrix, OmegaAlgebra, PolySystem, Representation, Scalar, Subspace, TailedDerivation};
use serde::de::DeserializeOwned;

use crate::CliError;

/// A file argument; `None` or `-` means stdin.
pub struct Source {
    path: Option<PathBuf>,
}

impl Source {
    pub fn new(path: Option<PathBuf>) -> Self {
        Source {
            path: path.filter(|p| p.as_os_str() != "-"),
        }
    }

    pub fn name(&self) -> String {
        match &self.path {
            Some(p) => p.display().to_string(),
            None => "<stdin>".into(),
        }
    }

    fn dir(&self) -> Option<&Path> {
        self.path.as_deref().and_then(Path::parent)
    }

    fn read(&self) -> Result<String, CliError> {
        let mut text = String::new();
        let res = match &self.path {
            Some(p) => std::fs::read_to_string(p).map(|t| text = t),
            None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
        };
        res.map_err(|e| CliError::usage(format!("{}: {e}", self.name())))?;
        Ok(text)
    }

    pub fn json<T: DeserializeOwned>(&self) -> Result<T, CliError> {
        let text = self.read()?;
        serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", self.name())))
    }

    pub fn algebra(&self) -> Result<OmegaAlgebra, CliError> {
        self.json()
    }

    pub fn representation(&self) -> Result<Representation, CliError> {
        let file: RepresentationFile = self.json()?;
        file.resolve(self.dir()).map_err(|e| CliError::from_lib(&self.name(), e))
    }

    pub fn tailed_derivation(&self) -> Result<TailedDerivation, CliError> {
        self.json()
    }

    pub fn matrix(&self) -> Result<Matrix, CliError> {
        self.json()
    }

    pub fn system(&self) -> Result<PolySystem, CliError> {
        self.json()
    }
}

/// A basis label, or comma-separated coordinates such as `1,0,-1/2+i`.
pub fn vector(a: &OmegaAlgebra, arg: &str, what: &str) -> Result<Vec<Scalar>, CliError> {
    if let Some(i) = a.index_of(arg) {
        return Ok(omega_lie::linalg::unit_vector(a.dim(), i));
    }
    let v = scalars(arg, what)?;
    if v.len() != a.dim() {
        return Err(CliError::usage(format!(
            "{what}: expected {} coordinates or a basis label, found {}",
            a.dim(),
            v.len()
        )));
    }
    Ok(v)
}

pub fn scalars(arg: &str, what: &str) -> Result<Vec<Scalar>, CliError> {
    arg.split(',')
        .enumerate()
        .map(|(i, s)| parse_scalar(s.trim()).map_err(|e| CliError::usage(format!("{what}, entry {}: {e}", i + 1))))
        .collect()
}

pub fn form(a: &OmegaAlgebra, arg: &str, what: &str) -> Result<LinearForm, CliError> {
    let v = scalars(arg, what)?;
    if v.len() != a.dim() {
        return Err(CliError::usage(format!("{what}: expected {} coefficients, found {}", a.dim(), v.len())));
    }
    Ok(LinearForm::new(v))
}

pub fn label(a: &OmegaAlgebra, arg: &str, what: &str) -> Result<usize, CliError> {
    a.index_of(arg)
        .ok_or_else(|| CliError::usage(format!("{what}: no basis element named {arg:?}")))
}

/// Span of comma-separated basis labels.
pub fn span(a: &OmegaAlgebra, arg: &str, what: &str) -> Result<Subspace, CliError> {
    let idx = arg
        .split(',')
        .map(|l| label(a, l.trim(), what))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subspace::coordinate(a.dim(), &idx))
}
