//! `lrcert`: HSC files in, exact certification reports out.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails (the
//! summary is still written), 2 for unreadable input or bad usage.

pub mod certify;
pub mod hsc;
pub mod summary;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use lrcert_core::double::{drinfeld_double, DoubleConvention};
use lrcert_core::hopf::{check_antipode, check_bialgebra, dual_bialgebra, tensor_bialgebra, tensor_with_dual, zoo};
use lrcert_core::lr::{
    check_braid_relation, check_braiding_inverse_with, check_braiding_transport_with, check_lr, check_roundtrip,
    functor_f_over, functor_g, pseudosym_determination, standard_objects, STANDARD_NAMES,
};
use lrcert_core::rep::check_yd;
use lrcert_core::report::DEFAULT_SEED;
use lrcert_core::{Bialgebra, Error, HopfAlgebra, LrBimodule, YdModule};

use certify::Budget;
use hsc::{AlgebraDoc, HscDocument, ModuleDoc, ModuleKind};
use summary::CheckSummary;

#[derive(Parser, Debug)]
#[command(name = "lrcert", version, about = "Exact certification of Yetter-Drinfeld-Long bimodules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Columns sampled per identity on large pairs and triples.
    #[arg(long, global = true, default_value_t = 1000)]
    pub sample: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural parse plus the axioms of an algebra or module file.
    Validate { file: PathBuf },
    /// Emit the algebra with its computed antipode.
    Antipode { algebra: PathBuf },
    /// Emit the dual bialgebra.
    Dual { algebra: PathBuf },
    /// Emit the tensor product of two bialgebras.
    Tensor { left: PathBuf, right: PathBuf },
    /// Emit the Drinfeld double.
    Double { algebra: PathBuf },
    /// Check the ten LR identities of a module file.
    LrCheck { module: PathBuf },
    /// Check a Yetter-Drinfeld module file.
    YdCheck { module: PathBuf },
    /// Emit F(M) for an LR module file.
    MapF { module: PathBuf },
    /// Emit G(M) for a YD module over `A⊗A*`.
    MapG { module: PathBuf },
    /// G∘F and F∘G on an LR module (and optionally a YD module over `A⊗A*`).
    Roundtrip { lr: PathBuf, yd: Option<PathBuf> },
    /// Braid relation and braiding inverse on three LR modules.
    BraidCheck { m: PathBuf, n: PathBuf, p: PathBuf },
    /// `c^{YD}_{F(M),F(N)} = c_{M,N}` on two LR modules.
    TransportCheck { m: PathBuf, n: PathBuf },
    /// Pseudosymmetry criterion against the equation on the built-in objects.
    Pseudosym { algebra: PathBuf },
    /// The whole suite over the built-in LR objects of an algebra.
    Certify { algebra: PathBuf },
    /// Write the built-in algebras (and with `--modules` their small LR
    /// objects) as HSC files into a directory.
    Zoo {
        dir: PathBuf,
        #[arg(long)]
        modules: bool,
    },
}

/// Input or usage problems; exit code 2.
#[derive(Debug)]
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = std::result::Result<i32, InputError>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn parse_file(path: &Path) -> std::result::Result<(HscDocument, String), InputError> {
    let text = read(path)?;
    let doc = hsc::parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((doc, hsc::digest_text(&text)))
}

fn load_algebra(path: &Path) -> std::result::Result<(AlgebraDoc, String), InputError> {
    match parse_file(path)? {
        (HscDocument::Algebra(a), d) => Ok((a, d)),
        _ => Err(InputError(format!("{}: expected an algebra file", path.display()))),
    }
}

fn hopf_of(a: &AlgebraDoc) -> std::result::Result<HopfAlgebra, InputError> {
    Ok(HopfAlgebra::from_bialgebra(a.bialgebra.clone())?)
}

/// A module file with its algebra resolved.
struct LoadedModule {
    doc: ModuleDoc,
    algebra_path: PathBuf,
    hopf: HopfAlgebra,
    digest: String,
}

/// `algebra <ref>` is a path relative to the module file, or a digest
/// matched against the `.hsc` files beside it.
fn resolve_algebra(module: &Path, reference: &str) -> std::result::Result<PathBuf, InputError> {
    let dir = module.parent().unwrap_or(Path::new("."));
    if !reference.starts_with("sha256:") {
        return Ok(dir.join(reference));
    }
    let mut entries: Vec<PathBuf> = fs::read_dir(dir)?.filter_map(|e| e.ok().map(|e| e.path())).collect();
    entries.sort();
    for p in entries {
        if p.extension().is_some_and(|x| x == "hsc") {
            if let Ok(text) = fs::read_to_string(&p) {
                if hsc::digest_text(&text) == reference {
                    return Ok(p);
                }
            }
        }
    }
    Err(InputError(format!("no algebra file with digest {reference} next to {}", module.display())))
}

fn load_module(path: &Path) -> std::result::Result<LoadedModule, InputError> {
    let (doc, digest) = match parse_file(path)? {
        (HscDocument::Module(m), d) => (m, d),
        _ => return Err(InputError(format!("{}: expected a module file", path.display()))),
    };
    let algebra_path = resolve_algebra(path, &doc.algebra)?;
    let (a, _) = load_algebra(&algebra_path)?;
    if a.bialgebra.dim() != doc.algdim || a.bialgebra.field() != doc.field {
        return Err(InputError(format!("{}: algebra does not match algdim/field", path.display())));
    }
    let hopf = hopf_of(&a)?;
    Ok(LoadedModule { doc, algebra_path, hopf, digest })
}

impl LoadedModule {
    fn lr(&self) -> std::result::Result<LrBimodule, InputError> {
        if self.doc.kind != ModuleKind::Lr || self.doc.tensor_with_dual {
            return Err(InputError("expected an LR module over a plain algebra".into()));
        }
        let [l, r, lc, rc] = <[_; 4]>::try_from(self.doc.maps.clone()).expect("four sections");
        Ok(LrBimodule::new(self.hopf.bialgebra().clone(), l, r, lc, rc)?)
    }

    fn base(&self) -> std::result::Result<Arc<Bialgebra>, InputError> {
        if self.doc.tensor_with_dual {
            Ok(Arc::new(tensor_with_dual(self.hopf.bialgebra())?))
        } else {
            Ok(self.hopf.bialgebra().clone())
        }
    }

    fn yd_over(&self, base: Arc<Bialgebra>) -> std::result::Result<YdModule, InputError> {
        if self.doc.kind != ModuleKind::Yd {
            return Err(InputError("expected a YD module".into()));
        }
        Ok(YdModule::new(base, self.doc.maps[0].clone(), self.doc.maps[1].clone())?)
    }
}

fn module_doc_lr(m: &LrBimodule, algebra: &str) -> HscDocument {
    HscDocument::Module(ModuleDoc {
        kind: ModuleKind::Lr,
        field: m.field(),
        algdim: m.algebra().dim(),
        dim: m.dim(),
        algebra: algebra.to_string(),
        tensor_with_dual: false,
        labels: None,
        maps: m.maps().iter().map(|(_, x)| (*x).clone()).collect(),
    })
}

fn module_doc_yd(y: &YdModule, algdim: usize, algebra: &str) -> HscDocument {
    HscDocument::Module(ModuleDoc {
        kind: ModuleKind::Yd,
        field: y.field(),
        algdim,
        dim: y.dim(),
        algebra: algebra.to_string(),
        tensor_with_dual: true,
        labels: None,
        maps: vec![y.act().clone(), y.coact().clone()],
    })
}

/// Derived labels may contain `#` (the comment marker) or spaces.
fn algebra_doc(b: Bialgebra, antipode: Option<lrcert_core::LinMap>, provenance: Option<String>) -> HscDocument {
    let safe = b
        .labels()
        .iter()
        .map(|l| l.chars().map(|c| if c == '#' { '.' } else if c.is_whitespace() { '_' } else { c }).collect())
        .collect();
    let b = b.clone().with_labels(safe).unwrap_or(b);
    HscDocument::Algebra(AlgebraDoc { bialgebra: b, antipode, provenance })
}

fn write_out(opts: &Opts, stdout: &mut dyn Write, text: &str) -> std::result::Result<(), InputError> {
    match &opts.out {
        Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn emit_out(opts: &Opts, stdout: &mut dyn Write, doc: &HscDocument) -> Outcome {
    write_out(opts, stdout, &hsc::emit(doc)?)?;
    Ok(0)
}

fn finish(opts: &Opts, stdout: &mut dyn Write, s: &CheckSummary) -> Outcome {
    write_out(opts, stdout, &s.to_string())?;
    Ok(if s.passed() { 0 } else { 1 })
}

/// The `algebra` reference to write into a derived module file.
fn algebra_ref(m: &LoadedModule, module_path: &Path) -> String {
    let dir = module_path.parent().unwrap_or(Path::new("."));
    match m.algebra_path.strip_prefix(dir) {
        Ok(rel) if !rel.as_os_str().is_empty() => rel.to_string_lossy().into_owned(),
        _ => m.doc.algebra.clone(),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Outcome {
    let opts = &cli.opts;
    let budget = Budget { seed: opts.seed, sample: opts.sample };
    match &cli.command {
        Command::Validate { file } => {
            let (doc, digest) = parse_file(file)?;
            let mut s = CheckSummary::new();
            s.input(file.display().to_string(), digest);
            match doc {
                HscDocument::Algebra(a) => {
                    s.report("bialgebra", &check_bialgebra(&a.bialgebra)?);
                    if let Some(ap) = &a.antipode {
                        s.report("antipode", &check_antipode(&a.bialgebra, ap)?);
                    }
                }
                HscDocument::Module(_) => {
                    let m = load_module(file)?;
                    match m.doc.kind {
                        ModuleKind::Lr => s.report("lr", &check_lr(&m.lr()?)?),
                        ModuleKind::Yd => s.report("yd", &check_yd(&m.yd_over(m.base()?)?)?),
                    }
                }
            }
            finish(opts, stdout, &s)
        }
        Command::Antipode { algebra } => {
            let (a, _) = load_algebra(algebra)?;
            match HopfAlgebra::from_bialgebra(a.bialgebra.clone()) {
                Ok(h) => emit_out(opts, stdout, &algebra_doc(a.bialgebra, Some(h.antipode().clone()), a.provenance)),
                Err(Error::NotHopf) => {
                    let mut s = CheckSummary::new();
                    s.error("hopf", "antipode", Error::NotHopf);
                    finish(opts, stdout, &s)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Dual { algebra } => {
            let (a, _) = load_algebra(algebra)?;
            let s = a.antipode.as_ref().map(|s| s.transpose());
            emit_out(opts, stdout, &algebra_doc(dual_bialgebra(&a.bialgebra), s, None))
        }
        Command::Tensor { left, right } => {
            let (a, _) = load_algebra(left)?;
            let (b, _) = load_algebra(right)?;
            let s = match (&a.antipode, &b.antipode) {
                (Some(x), Some(y)) => Some(x.kron(y)?),
                _ => None,
            };
            emit_out(opts, stdout, &algebra_doc(tensor_bialgebra(&a.bialgebra, &b.bialgebra)?, s, None))
        }
        Command::Double { algebra } => {
            let (a, digest) = load_algebra(algebra)?;
            let d = drinfeld_double(&hopf_of(&a)?)?;
            let h = d.materialize()?;
            let b = (**h.bialgebra()).clone();
            let prov = format!("drinfeld_double {} {digest}", convention_name(d.convention()));
            emit_out(opts, stdout, &algebra_doc(b, Some(h.antipode().clone()), Some(prov)))
        }
        Command::LrCheck { module } => {
            let m = load_module(module)?;
            let mut s = CheckSummary::new();
            s.input(module.display().to_string(), m.digest.clone());
            s.report("lr", &check_lr(&m.lr()?)?);
            finish(opts, stdout, &s)
        }
        Command::YdCheck { module } => {
            let m = load_module(module)?;
            let mut s = CheckSummary::new();
            s.input(module.display().to_string(), m.digest.clone());
            s.report("yd", &check_yd(&m.yd_over(m.base()?)?)?);
            finish(opts, stdout, &s)
        }
        Command::MapF { module } => {
            let m = load_module(module)?;
            let lr = m.lr()?;
            let r = check_lr(&lr)?;
            if !r.passed() {
                let mut s = CheckSummary::new();
                s.input(module.display().to_string(), m.digest.clone());
                s.report("lr", &r);
                return finish(opts, stdout, &s);
            }
            let y = functor_f_over(&lr, &Arc::new(tensor_with_dual(lr.algebra())?))?;
            emit_out(opts, stdout, &module_doc_yd(&y, m.doc.algdim, &algebra_ref(&m, module)))
        }
        Command::MapG { module } => {
            let m = load_module(module)?;
            if !m.doc.tensor_with_dual {
                return Err(Error::BaseNotTensorSquare.into());
            }
            let y = m.yd_over(m.base()?)?;
            let r = check_yd(&y)?;
            if !r.passed() {
                let mut s = CheckSummary::new();
                s.input(module.display().to_string(), m.digest.clone());
                s.report("yd", &r);
                return finish(opts, stdout, &s);
            }
            emit_out(opts, stdout, &module_doc_lr(&functor_g(&y)?, &algebra_ref(&m, module)))
        }
        Command::Roundtrip { lr, yd } => {
            let m = load_module(lr)?;
            let obj = m.lr()?;
            let k = Arc::new(tensor_with_dual(obj.algebra())?);
            let y = match yd {
                Some(p) => {
                    let ym = load_module(p)?;
                    if !ym.doc.tensor_with_dual || ym.hopf.bialgebra() != obj.algebra() {
                        return Err(InputError("YD module must live over A⊗A* for the LR module's A".into()));
                    }
                    ym.yd_over(k)?
                }
                None => functor_f_over(&obj, &k)?,
            };
            let mut s = CheckSummary::new();
            s.input(lr.display().to_string(), m.digest.clone());
            s.report("roundtrip", &check_roundtrip(&obj, &y)?);
            finish(opts, stdout, &s)
        }
        Command::BraidCheck { m, n, p } => {
            let mods = [m, n, p].map(|x| load_module(x));
            let mut loaded = Vec::new();
            for x in mods {
                loaded.push(x?);
            }
            let objs = loaded.iter().map(LoadedModule::lr).collect::<std::result::Result<Vec<_>, _>>()?;
            let h = &loaded[0].hopf;
            let mut s = CheckSummary::new();
            for (path, l) in [m, n, p].iter().zip(&loaded) {
                s.input(path.display().to_string(), l.digest.clone());
            }
            s.report("braid", &check_braid_relation(&objs[0], &objs[1], &objs[2], budget.combined())?);
            for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                let r = check_braiding_inverse_with(h, &objs[i], &objs[j], budget.combined())?;
                s.report(&format!("inverse/{i},{j}"), &r);
            }
            finish(opts, stdout, &s)
        }
        Command::TransportCheck { m, n } => {
            let (a, b) = (load_module(m)?, load_module(n)?);
            let (x, y) = (a.lr()?, b.lr()?);
            let k = Arc::new(tensor_with_dual(x.algebra())?);
            let (fx, fy) = (functor_f_over(&x, &k)?, functor_f_over(&y, &k)?);
            let mut s = CheckSummary::new();
            s.input(m.display().to_string(), a.digest.clone());
            s.input(n.display().to_string(), b.digest.clone());
            s.report("transport", &check_braiding_transport_with(&x, &fx, &y, &fy, budget.combined())?);
            finish(opts, stdout, &s)
        }
        Command::Pseudosym { algebra } => {
            let (a, digest) = load_algebra(algebra)?;
            let h = hopf_of(&a)?;
            let objects = standard_objects(&h)?;
            let d = pseudosym_determination(&h, &objects, budget.combined())?;
            let mut s = CheckSummary::new();
            s.input(algebra.display().to_string(), digest);
            let criterion = lrcert_core::AxiomEntry::pass(format!("criterion={}", d.criterion));
            s.entry("pseudosym", &criterion);
            let holds = d.equation_holds();
            let verdict = match d.counterexample() {
                None => lrcert_core::AxiomEntry::pass("equation=holds"),
                Some(o) => lrcert_core::AxiomEntry::pass("equation=fails")
                    .with_detail(format!("counterexample ({}) {}", o.names.join(", "), o.entry)),
            };
            debug_assert_eq!(verdict.name == "equation=holds", holds);
            s.entry("pseudosym", &verdict);
            s.entry("pseudosym", &d.agreement);
            finish(opts, stdout, &s)
        }
        Command::Certify { algebra } => {
            let (a, digest) = load_algebra(algebra)?;
            let mut s = CheckSummary::new();
            s.input(algebra.display().to_string(), digest);
            if let Some(h) = certify::certify_hopf(a.bialgebra, a.antipode, &mut s) {
                certify::certify(&h, budget, &mut s);
            }
            finish(opts, stdout, &s)
        }
        Command::Zoo { dir, modules } => {
            fs::create_dir_all(dir)?;
            let mut listing = String::new();
            for z in zoo()? {
                let file = format!("{}.hsc", z.name);
                let b = (**z.hopf.bialgebra()).clone();
                let text = hsc::emit(&algebra_doc(b, Some(z.hopf.antipode().clone()), None))?;
                fs::write(dir.join(&file), &text)?;
                listing.push_str(&format!("{file}\t{}\n", hsc::digest_text(&text)));
                if *modules {
                    for (name, m) in standard_objects(&z.hopf)? {
                        if name == STANDARD_NAMES[STANDARD_NAMES.len() - 1] {
                            continue;
                        }
                        let mfile = format!("{}.{name}.hsc", z.name);
                        fs::write(dir.join(&mfile), hsc::emit(&module_doc_lr(&m, &file))?)?;
                        listing.push_str(&format!("{mfile}\n"));
                    }
                }
            }
            write_out(opts, stdout, &listing)?;
            Ok(0)
        }
    }
}

fn convention_name(c: DoubleConvention) -> &'static str {
    match c {
        DoubleConvention::LeftLeftYd => "left_left_yd",
        DoubleConvention::CoOppositeDual => "co_opposite_dual",
    }
}
