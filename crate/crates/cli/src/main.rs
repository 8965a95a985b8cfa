//! `omega-lie`: command-line front end over JSON files.
//!
//! Exit codes: 0 success, 1 checked negative, 2 usage or input error,
//! 3 polynomial budget exhausted.

mod input;
mod text;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use omega_lie::catalog;
use omega_lie::derive::{derivations, tailed_derivations};
use omega_lie::extend::{extend, restrict};
use omega_lie::omega::{
    degree_with_budget, ideals_of_dim_with_budget, is_multiplicative, is_soluble, multiplicative_form, omega_kernel,
};
use omega_lie::polysolve::{groebner, is_inconsistent, DEFAULT_BUDGET};
use omega_lie::repr::{
    classify_indecomposable, cochain_defect, exterior_power, find_submodule, fitting_decompose, module_iso,
    module_structure_system, tensor_module, weight_decomposition, FixedAssignment, FixedFile, SubmoduleSearch,
};
use omega_lie::{Error, Subspace};
use serde::Serialize;

use input::Source;

#[derive(Parser)]
#[command(name = "omega-lie", version, about = "Exact computations with finite-dimensional omega-Lie algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// An algebra JSON file, given positionally or with `--algebra`; stdin when absent.
#[derive(Args)]
struct AlgebraIn {
    #[arg(value_name = "FILE", conflicts_with = "algebra")]
    file: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,
}

impl AlgebraIn {
    fn source(self) -> Source {
        Source::new(self.algebra.or(self.file))
    }
}

/// A representation JSON file; stdin when absent.
#[derive(Args)]
struct ModuleIn {
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the omega-Jacobi identity; exit 1 when it fails.
    Validate(AlgebraIn),
    /// Built-in algebras.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Basis of the derivation algebra.
    Der(AlgebraIn),
    /// Basis of the tailed derivations (D, d).
    Tder(AlgebraIn),
    /// One-dimensional extension by a tailed derivation of a Lie algebra.
    Extend {
        #[command(flatten)]
        input: AlgebraIn,
        /// Tailed derivation JSON `{"D", "d"}`.
        #[arg(long, value_name = "FILE")]
        tder: PathBuf,
    },
    /// Tailed derivation induced by x on a codimension-one Lie subalgebra.
    Restrict {
        #[command(flatten)]
        input: AlgebraIn,
        /// Subalgebra spanned by these comma-separated basis labels.
        #[arg(long, value_name = "LABELS", required_unless_present = "subspace")]
        span: Option<String>,
        /// Subalgebra given as subspace JSON `{"ambient", "basis"}`.
        #[arg(long, value_name = "FILE", conflicts_with = "span")]
        subspace: Option<PathBuf>,
        /// Complementary element: a basis label or comma-separated coordinates.
        #[arg(long)]
        x: String,
    },
    /// Ideals of a given dimension.
    Ideals {
        #[command(flatten)]
        input: AlgebraIn,
        #[arg(long)]
        dim: usize,
    },
    /// Smallest codimension of a proper ideal; exit 1 when none exists.
    Degree(AlgebraIn),
    /// Derived series; exit 1 when the algebra is not soluble.
    Soluble(AlgebraIn),
    /// Multiplicative forms; exit 1 when there are none, or when `--form` is not one.
    Multiplicative {
        #[command(flatten)]
        input: AlgebraIn,
        /// Check one form, given by comma-separated coefficients.
        #[arg(long)]
        form: Option<String>,
    },
    /// Radical of omega and the adjoint action on it.
    OmegaKernel(AlgebraIn),
    /// Reduced Groebner basis of a polynomial system; exit 1 when it is {1}.
    Groebner {
        #[arg(value_name = "FILE")]
        file: Option<PathBuf>,
    },
    /// Modules over an algebra.
    #[command(subcommand)]
    Module(ModuleCmd),
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Names, parameters and basis orders.
    List,
    /// Emit an algebra as JSON.
    Get {
        name: String,
        /// Positional parameter (alpha or n); repeatable.
        #[arg(long = "param", value_name = "P")]
        params: Vec<String>,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Check the module identity; exit 1 when it fails.
    Validate(ModuleIn),
    /// Generalized eigenspaces of one basis element.
    Weights {
        #[command(flatten)]
        input: ModuleIn,
        #[arg(long, value_name = "LABEL")]
        h: String,
    },
    /// The (lambda, partition) invariant of an indecomposable; exit 1 for several weights.
    Classify {
        #[command(flatten)]
        input: ModuleIn,
        #[arg(long, value_name = "LABEL")]
        h: String,
    },
    /// Search for a proper submodule; exit 1 unless one is found.
    Submodule(ModuleIn),
    /// Fitting decomposition into summands.
    Decompose(ModuleIn),
    /// Module isomorphism; exit 1 when none exists.
    Iso { first: PathBuf, second: PathBuf },
    /// Tensor product twisted by a linear form.
    Tensor {
        first: PathBuf,
        second: PathBuf,
        /// Comma-separated coefficients of the twisting form.
        #[arg(long)]
        lambda: String,
    },
    /// Exterior power twisted by a linear form.
    Exterior {
        #[command(flatten)]
        input: ModuleIn,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Defect of the cochain differential at (x, y, z); exit 1 when it disagrees with the closed form.
    Defect {
        #[command(flatten)]
        input: ModuleIn,
        /// Cochain as a dim(V) x dim(L) matrix JSON.
        #[arg(long, value_name = "FILE")]
        cochain: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
    },
    /// Polynomial system whose zeros are the modules of a given dimension.
    System {
        #[command(flatten)]
        input: AlgebraIn,
        #[arg(long)]
        dim: usize,
        /// Fixed entries JSON `{"matrices": {label: matrix}, "entries": [...]}`.
        #[arg(long, value_name = "FILE")]
        fixed: Option<PathBuf>,
        /// Emit the reduced Groebner basis instead; exit 1 when it is {1}.
        #[arg(long)]
        solve: bool,
    },
}

pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        CliError { code: 2, message }
    }

    pub fn from_lib(context: &str, e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted { .. } => 3,
            Error::MultipleWeights { .. } => 1,
            _ => 2,
        };
        CliError {
            code,
            message: format!("{context}: {e}"),
        }
    }
}

struct Outcome {
    json: String,
    text: String,
    negative: bool,
}

fn outcome<T: Serialize>(value: &T, text: String, negative: bool) -> Result<Outcome, CliError> {
    let json = serde_json::to_string(value).map_err(|e| CliError::usage(format!("serializing output: {e}")))?;
    Ok(Outcome { json, text, negative })
}

fn budget() -> Result<usize, CliError> {
    match std::env::var("OMEGA_LIE_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("OMEGA_LIE_BUDGET: not a nonnegative integer: {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Validate(input) => {
            let src = input.source();
            let a = src.algebra()?;
            let r = a.validate();
            outcome(&r, text::validation(&a, &r), !r.valid)
        }
        Command::Catalog(CatalogCmd::List) => {
            let entries = catalog::list();
            outcome(&entries, text::catalog(entries), false)
        }
        Command::Catalog(CatalogCmd::Get { name, params }) => {
            let params = params
                .iter()
                .enumerate()
                .map(|(i, p)| input::scalars(p, &format!("--param {}", i + 1)).map(|mut v| v.remove(0)))
                .collect::<Result<Vec<_>, _>>()?;
            let a = catalog::get(&name, &params).map_err(|e| CliError::from_lib(&name, e))?;
            outcome(&a, text::algebra(&a), false)
        }
        Command::Der(input) => {
            let a = input.source().algebra()?;
            let der = derivations(&a);
            outcome(&der, text::matrices(&der), false)
        }
        Command::Tder(input) => {
            let a = input.source().algebra()?;
            let t = tailed_derivations(&a);
            outcome(&t, text::tails(&t), false)
        }
        Command::Extend { input, tder } => {
            let src = input.source();
            let a = src.algebra()?;
            let tsrc = Source::new(Some(tder));
            let t = tsrc.tailed_derivation()?;
            let l = extend(&a, &t).map_err(|e| CliError::from_lib(&format!("{} with {}", src.name(), tsrc.name()), e))?;
            outcome(&l, text::algebra(&l), false)
        }
        Command::Restrict { input, span, subspace, x } => {
            let src = input.source();
            let a = src.algebra()?;
            let g: Subspace = match (span, subspace) {
                (Some(s), _) => input::span(&a, &s, "--span")?,
                (None, Some(p)) => Source::new(Some(p)).json()?,
                (None, None) => unreachable!("clap requires one of --span and --subspace"),
            };
            let x = input::vector(&a, &x, "--x")?;
            let r = restrict(&a, &g, &x).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&r, text::restriction(&r), false)
        }
        Command::Ideals { input, dim } => {
            let src = input.source();
            let a = src.algebra()?;
            let r = ideals_of_dim_with_budget(&a, dim, budget()?).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&r, text::ideals(&r), false)
        }
        Command::Degree(input) => {
            let src = input.source();
            let a = src.algebra()?;
            let r = degree_with_budget(&a, budget()?).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&r, text::degree(&r), r.degree.is_none())
        }
        Command::Soluble(input) => {
            let a = input.source().algebra()?;
            let r = is_soluble(&a);
            outcome(&r, text::solubility(&r), !r.soluble)
        }
        Command::Multiplicative { input, form } => {
            let src = input.source();
            let a = src.algebra()?;
            match form {
                Some(f) => {
                    let lam = input::form(&a, &f, "--form")?;
                    let ok = is_multiplicative(&a, &lam).map_err(|e| CliError::from_lib(&src.name(), e))?;
                    outcome(&ok, ok.to_string(), !ok)
                }
                None => {
                    let fam = multiplicative_form(&a);
                    outcome(&fam, text::family(fam.as_ref()), fam.is_none())
                }
            }
        }
        Command::OmegaKernel(input) => {
            let a = input.source().algebra()?;
            let k = omega_kernel(&a);
            outcome(&k, text::kernel(&k), false)
        }
        Command::Groebner { file } => {
            let src = Source::new(file);
            let sys = src.system()?;
            let gb = groebner(&sys, budget()?).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&gb, text::system(&gb), is_inconsistent(&gb))
        }
        Command::Module(cmd) => run_module(cmd),
    }
}

fn run_module(cmd: ModuleCmd) -> Result<Outcome, CliError> {
    match cmd {
        ModuleCmd::Validate(m) => {
            let r = Source::new(m.file).representation()?;
            let rep = r.validate();
            outcome(&rep, text::module_report(&rep), !rep.valid)
        }
        ModuleCmd::Weights { input, h } => {
            let src = Source::new(input.file);
            let r = src.representation()?;
            let i = input::label(r.algebra(), &h, "--h")?;
            let w = weight_decomposition(&r, i).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&w, text::weights(&w), false)
        }
        ModuleCmd::Classify { input, h } => {
            let src = Source::new(input.file);
            let r = src.representation()?;
            let i = input::label(r.algebra(), &h, "--h")?;
            let c = classify_indecomposable(&r, i).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&c, format!("lambda = {}, partition = {}", c.lambda, c.partition), false)
        }
        ModuleCmd::Submodule(m) => {
            let r = Source::new(m.file).representation()?;
            let s = find_submodule(&r);
            let found = matches!(s, SubmoduleSearch::ProperSubmodule { .. });
            outcome(&s, text::submodule(&s), !found)
        }
        ModuleCmd::Decompose(m) => {
            let src = Source::new(m.file);
            let r = src.representation()?;
            let d = fitting_decompose(&r).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&d, text::decomposition(&d), false)
        }
        ModuleCmd::Iso { first, second } => {
            let (s1, s2) = (Source::new(Some(first)), Source::new(Some(second)));
            let (r1, r2) = (s1.representation()?, s2.representation()?);
            let iso = module_iso(&r1, &r2).map_err(|e| CliError::from_lib(&format!("{} and {}", s1.name(), s2.name()), e))?;
            let t = match &iso {
                Some(p) => format!("isomorphic via\n{p}"),
                None => "not isomorphic".into(),
            };
            outcome(&iso, t, iso.is_none())
        }
        ModuleCmd::Tensor { first, second, lambda } => {
            let (s1, s2) = (Source::new(Some(first)), Source::new(Some(second)));
            let (r1, r2) = (s1.representation()?, s2.representation()?);
            let lam = input::form(r1.algebra(), &lambda, "--lambda")?;
            let t = tensor_module(&r1, &r2, &lam)
                .map_err(|e| CliError::from_lib(&format!("{} and {}", s1.name(), s2.name()), e))?;
            outcome(&t, text::module(&t), false)
        }
        ModuleCmd::Exterior { input, k, lambda } => {
            let src = Source::new(input.file);
            let r = src.representation()?;
            let lam = input::form(r.algebra(), &lambda, "--lambda")?;
            let e = exterior_power(&r, k, &lam).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&e, text::module(&e), false)
        }
        ModuleCmd::Defect { input, cochain, x, y, z } => {
            let src = Source::new(input.file);
            let r = src.representation()?;
            let f = Source::new(Some(cochain)).matrix()?;
            let a = r.algebra();
            let (x, y, z) = (input::vector(a, &x, "--x")?, input::vector(a, &y, "--y")?, input::vector(a, &z, "--z")?);
            let d = cochain_defect(&f, &r, &x, &y, &z).map_err(|e| CliError::from_lib(&src.name(), e))?;
            outcome(&d, text::defect(&d), !d.agrees)
        }
        ModuleCmd::System { input, dim, fixed, solve } => {
            let src = input.source();
            let a = src.algebra()?;
            let fixed = match fixed {
                Some(p) => {
                    let fsrc = Source::new(Some(p));
                    let file: FixedFile = fsrc.json()?;
                    FixedAssignment::from_file(&a, file).map_err(|e| CliError::from_lib(&fsrc.name(), e))?
                }
                None => FixedAssignment::new(),
            };
            let sys = module_structure_system(&a, dim, &fixed).map_err(|e| CliError::from_lib(&src.name(), e))?;
            if solve {
                let gb = groebner(&sys, budget()?).map_err(|e| CliError::from_lib(&src.name(), e))?;
                outcome(&gb, text::system(&gb), is_inconsistent(&gb))
            } else {
                outcome(&sys, text::system(&sys), false)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let body = match cli.output {
                Format::Json => out.json,
                Format::Text => out.text.trim_end().to_string(),
            };
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(u8::from(out.negative))
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
