//! Command-line interface: argument definitions and command handlers.
//!
//! Exit status is 0 when every check passes, 1 when any check fails, 2 on
//! usage or parse errors.

use std::error::Error;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{resolve, CatalogFile};
use crate::cr::{from_spec, is_cr_integrable, is_normal, k_to_pair, levi, reeb, CRStructure, CRSubalgebra, Reeb};
use crate::embed::{
    embed_heisenberg, embed_sl2, embed_su2, quadric_residual, random_heis, random_s3, random_sl2, EmbeddingParams,
    Hyperquadric, LAW_TOL,
};
use crate::flat::{flat_locus, is_flat_model, phi_family, thm4_harness, PhiKind, Verdict};
use crate::liealg::LieAlgebra;
use crate::report::CheckReport;
use crate::scalar::{GaussRational, Rational};
use crate::suites::{self, DEFAULT_SEED};
use crate::sugrp::build_su;

#[derive(Debug, Parser)]
#[command(name = "crlie", version, about = "Exact checks for CR structures and Cartan flat models on Lie algebras")]
pub struct Cli {
    /// Output format of the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural checks on a catalog algebra.
    Verify {
        /// Catalog file path or builtin name.
        catalog: String,
        #[arg(long, value_delimiter = ',', default_value = "jacobi")]
        checks: Vec<VerifyCheck>,
    },
    /// Integrability, Levi form, contact form, Reeb field and normality.
    Cr(CrArgs),
    /// su(p+1, q+1) model.
    #[command(subcommand)]
    Su(SuCommand),
    /// Flat-model checks for the calibrated families.
    #[command(subcommand)]
    Flat(FlatCommand),
    /// Three-dimensional candidates in su(2,1).
    Classify3,
    /// Heisenberg modifications in dimension 2m+1.
    Thm4 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Embedding maps and quadric residuals.
    #[command(subcommand)]
    Embed(EmbedCommand),
    /// Named check suite.
    Suite {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(suites::SUITES))]
        name: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyCheck {
    Jacobi,
    Center,
    Series,
    Killing,
    Radical,
}

#[derive(Debug, Args)]
pub struct CrArgs {
    /// Catalog file path or builtin name.
    pub catalog: String,
    /// Named CR structure from the catalog.
    #[arg(long, conflicts_with = "k")]
    pub cr: Option<String>,
    /// Generators of k: vectors separated by `;`, entries by `,`, e.g. `1,-i,0`.
    #[arg(long)]
    pub k: Option<String>,
    /// Contact form by its values on the basis, e.g. `0,0,1`.
    #[arg(long)]
    pub phi: Option<String>,
    /// Required property values, e.g. `normal=false` or `signature=0,1,0`.
    #[arg(long = "expect")]
    pub expect: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum SuCommand {
    Build {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Write the algebra in catalog format; the parts manifest goes to
        /// `<stem>.parts.json` next to it.
        #[arg(long)]
        dump_catalog: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlatCommand {
    /// Is the calibrated map at parameter s a flat model?
    Check {
        #[arg(long, value_parser = parse_kind)]
        kind: PhiKind,
        #[arg(long, default_value = "1")]
        s: Rational,
    },
    /// Parameters s > 0 where the calibrated map is flat.
    Locus {
        #[arg(long, value_parser = parse_kind)]
        kind: PhiKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum EmbedCommand {
    Heisenberg {
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Signs, e.g. `+-`; defaults to all `+`.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, default_value = "1")]
        delta: GaussRational,
        #[arg(long, default_value = "0")]
        t: Rational,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    Su2 {
        #[arg(long, default_value = "1")]
        delta: GaussRational,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    Sl2 {
        #[arg(long, default_value = "1")]
        delta: GaussRational,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<PhiKind, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Usage or input error; maps to exit status 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

impl UsageError {
    fn from_err(e: impl std::fmt::Display) -> Self {
        UsageError(e.to_string())
    }
}

pub fn render(report: &CheckReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    }
}

/// Runs a command; writes the report and returns the exit status.
pub fn main_with(cli: Cli) -> i32 {
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = render(&report, cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    report.exit_code()
}

pub fn execute(cli: &Cli) -> Result<CheckReport, UsageError> {
    match &cli.command {
        Command::Verify { catalog, checks } => cmd_verify(catalog, checks),
        Command::Cr(args) => cmd_cr(args),
        Command::Su(SuCommand::Build { p, q, dump_catalog }) => cmd_su_build(*p, *q, dump_catalog.as_deref()),
        Command::Flat(FlatCommand::Check { kind, s }) => cmd_flat_check(*kind, s),
        Command::Flat(FlatCommand::Locus { kind }) => cmd_flat_locus(*kind),
        Command::Classify3 => suites::run("classify3", cli.seed).map_err(UsageError::from_err),
        Command::Thm4 { m, p, q } => cmd_thm4(*m, *p, *q),
        Command::Embed(e) => cmd_embed(e, cli.seed),
        Command::Suite { name } => suites::run(name, cli.seed).map_err(UsageError::from_err),
    }
}

fn load(catalog: &str) -> Result<(CatalogFile, Arc<LieAlgebra>), UsageError> {
    let file = resolve(catalog).map_err(UsageError::from_err)?;
    let g = file.to_algebra().map_err(UsageError::from_err)?;
    Ok((file, Arc::new(g)))
}

pub fn cmd_verify(catalog: &str, checks: &[VerifyCheck]) -> Result<CheckReport, UsageError> {
    let (_, g) = load(catalog)?;
    let mut r = CheckReport::new(format!("verify {}", g.name()));
    let jacobi = g.check_jacobi();
    for c in checks {
        match c {
            VerifyCheck::Jacobi => {
                let w = jacobi
                    .violations
                    .first()
                    .map(|v| format!("{v:?}"))
                    .unwrap_or_default();
                r.record("jacobi", jacobi.passed(), w);
            }
            _ if !jacobi.passed() => r.record(format!("{c:?}").to_lowercase(), false, "requires Jacobi"),
            VerifyCheck::Center => {
                let z = g.center();
                let basis: Vec<String> = z.basis().iter().map(|v| g.render(v)).collect();
                r.record("center", true, format!("dim {} [{}]", z.dim(), basis.join(", ")));
            }
            VerifyCheck::Series => {
                let d: Vec<usize> = g.derived_series().iter().map(|s| s.dim()).collect();
                let l: Vec<usize> = g.lower_central_series().iter().map(|s| s.dim()).collect();
                r.record(
                    "series",
                    true,
                    format!("derived {d:?}, lower central {l:?}, solvable {}, nilpotent {}", g.is_solvable(), g.is_nilpotent()),
                );
            }
            VerifyCheck::Killing => r.record("killing", true, format!("signature {}", g.killing_signature())),
            VerifyCheck::Radical => match g.radical() {
                Ok(rad) => r.record("radical", true, format!("dim {}", rad.dim())),
                Err(e) => r.record("radical", false, e.to_string()),
            },
        }
    }
    Ok(r)
}

fn parse_vectors(s: &str, n: usize) -> Result<Vec<Vec<GaussRational>>, UsageError> {
    s.split(';')
        .map(|v| {
            let entries: Result<Vec<GaussRational>, _> = v.split(',').map(str::parse).collect();
            let entries = entries.map_err(UsageError::from_err)?;
            if entries.len() != n {
                return Err(UsageError(format!("vector {v:?} has {} entries, expected {n}", entries.len())));
            }
            Ok(entries)
        })
        .collect()
}

/// Property values of a CR structure with a contact form.
pub fn cr_properties(g: &Arc<LieAlgebra>, cr: &CRStructure, phi: &[GaussRational]) -> Result<Vec<(&'static str, String)>, Box<dyn Error>> {
    let k = cr.to_k();
    let lev = levi(g, &k, phi)?;
    let sig = lev.signature;
    let r = reeb(g, phi, cr.half_dim());
    let (contact, reeb_text, normal) = match &r {
        Reeb::Unique { eta } => (true, g.render(eta), is_normal(g, &k, eta).to_string()),
        Reeb::NonContact { .. } => (false, "none".to_string(), "n/a".to_string()),
    };
    Ok(vec![
        ("integrable", is_cr_integrable(cr).to_string()),
        ("signature", format!("{},{},{}", sig.pos, sig.neg, sig.zero)),
        ("levi", lev.render_matrix()),
        ("nondegenerate", sig.is_nondegenerate().to_string()),
        ("pseudoconvex", sig.is_definite().to_string()),
        ("contact", contact.to_string()),
        ("reeb", reeb_text),
        ("normal", normal),
    ])
}

pub fn cmd_cr(args: &CrArgs) -> Result<CheckReport, UsageError> {
    let (file, g) = load(&args.catalog)?;
    let n = g.dim();
    let (cr, spec_phi) = match (&args.cr, &args.k) {
        (Some(name), _) => {
            let spec = file.cr_structure(name).ok_or_else(|| UsageError(format!("no CR structure {name:?} in {}", file.name)))?;
            from_spec(g.clone(), spec).map_err(UsageError::from_err)?
        }
        (None, Some(k)) => {
            let vecs = parse_vectors(k, n)?;
            (k_to_pair(&CRSubalgebra::new(g.clone(), &vecs)).map_err(UsageError::from_err)?, None)
        }
        (None, None) => return Err(UsageError("give --cr NAME or --k VECTORS".into())),
    };
    let phi = match &args.phi {
        Some(p) => parse_vectors(p, n)?.remove(0),
        None => spec_phi.unwrap_or_else(|| cr.contact_form()),
    };
    let mut expect = Vec::new();
    for e in &args.expect {
        let (key, val) = e.split_once('=').ok_or_else(|| UsageError(format!("expectation {e:?} is not KEY=VALUE")))?;
        expect.push((key.trim().to_string(), val.trim().to_string()));
    }
    let props = cr_properties(&g, &cr, &phi).map_err(UsageError::from_err)?;
    for (key, _) in &expect {
        if !props.iter().any(|(k, _)| k == key) {
            return Err(UsageError(format!("unknown property {key:?}")));
        }
    }
    let mut r = CheckReport::new(format!("cr {}", g.name()));
    for (key, val) in props {
        let ok = expect.iter().filter(|(k, _)| k == key).all(|(_, want)| *want == val);
        r.record(key, ok, val);
    }
    Ok(r)
}

pub fn cmd_su_build(p: usize, q: usize, dump: Option<&Path>) -> Result<CheckReport, UsageError> {
    let model = build_su(p, q).map_err(UsageError::from_err)?;
    let tag = format!("su({},{})", p + 1, q + 1);
    let mut r = CheckReport::new(format!("su build {tag}"));
    let m = model.m();
    r.record("dim", model.dim() == (m + 2) * (m + 2) - 1, model.dim().to_string());
    r.record("jacobi", model.algebra().check_jacobi().passed(), "");
    let (dims, bad) = model.grading();
    r.record("grading", bad.is_empty(), format!("{dims:?}"));
    let bad = model.parts_check();
    r.record("parts", bad.is_empty(), bad.iter().map(|b| b.detail.clone()).collect::<Vec<_>>().join(", "));
    let bad = model.ad_table_check();
    r.record("ad tables", bad.is_empty(), bad.iter().map(|b| b.detail.clone()).collect::<Vec<_>>().join(", "));
    let manifest = serde_json::to_string(model.parts().manifest()).expect("manifest serializes");
    r.record("parts manifest", true, manifest.clone());
    if let Some(path) = dump {
        let file = CatalogFile::from_algebra(model.algebra());
        let json = serde_json::to_string_pretty(&file).expect("catalog serializes");
        std::fs::write(path, json + "\n").map_err(UsageError::from_err)?;
        let parts = path.with_extension("parts.json");
        let manifest = serde_json::to_string_pretty(model.parts().manifest()).expect("manifest serializes");
        std::fs::write(&parts, manifest + "\n").map_err(UsageError::from_err)?;
    }
    Ok(r)
}

fn su21() -> Result<crate::sugrp::SUModel, UsageError> {
    build_su(1, 0).map_err(UsageError::from_err)
}

pub fn cmd_flat_check(kind: PhiKind, s: &Rational) -> Result<CheckReport, UsageError> {
    let model = su21()?;
    let c = phi_family(kind, &model, s).map_err(UsageError::from_err)?;
    let v = is_flat_model(&c, &model);
    let mut r = CheckReport::new(format!("flat check {kind} s={s}"));
    r.record("flat model", v == Verdict::Flat, v.to_string());
    Ok(r)
}

pub fn cmd_flat_locus(kind: PhiKind) -> Result<CheckReport, UsageError> {
    let model = su21()?;
    let loc = flat_locus(kind, &model).map_err(UsageError::from_err)?;
    let mut r = CheckReport::new(format!("flat locus {kind}"));
    let roots: Vec<String> = loc.positive_roots.iter().map(|x| x.to_string()).collect();
    let text = if loc.identically_flat {
        "flat for every s".to_string()
    } else {
        format!("s in {{{}}}; gcd {}; cofactor {}", roots.join(", "), loc.gcd, loc.cofactor)
    };
    r.record("locus", true, text);
    Ok(r)
}

pub fn cmd_thm4(m: usize, p: usize, q: usize) -> Result<CheckReport, UsageError> {
    if p + q != m {
        return Err(UsageError(format!("m must equal p + q, got m = {m}, p + q = {}", p + q)));
    }
    let model = build_su(p, q).map_err(UsageError::from_err)?;
    let rows = thm4_harness(&model).map_err(UsageError::from_err)?;
    let mut r = CheckReport::new(format!("thm4 su({},{})", p + 1, q + 1));
    for row in rows {
        r.push(row.id.clone(), row.status, Some(row.summary()));
    }
    Ok(r)
}

fn parse_eps(eps: Option<&str>, m: usize) -> Result<Vec<i64>, UsageError> {
    let Some(s) = eps else { return Ok(vec![1; m]) };
    let v: Vec<i64> = s
        .chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(UsageError(format!("eps must consist of + and -, got {s:?}"))),
        })
        .collect::<Result<_, _>>()?;
    if v.len() != m {
        return Err(UsageError(format!("eps has {} signs but m = {m}", v.len())));
    }
    Ok(v)
}

fn to_complex(z: &GaussRational) -> Complex64 {
    Complex64::new(z.re.to_f64(), z.im.to_f64())
}

fn open_csv(path: &Option<PathBuf>) -> Result<Option<csv::Writer<std::fs::File>>, UsageError> {
    path.as_ref().map(|p| csv::Writer::from_path(p).map_err(UsageError::from_err)).transpose()
}

fn csv_row(w: &mut Option<csv::Writer<std::fs::File>>, row: Vec<String>) -> Result<(), UsageError> {
    if let Some(w) = w {
        w.write_record(&row).map_err(UsageError::from_err)?;
    }
    Ok(())
}

pub fn cmd_embed(cmd: &EmbedCommand, seed: u64) -> Result<CheckReport, UsageError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match cmd {
        EmbedCommand::Heisenberg { m, eps, delta, t, samples, csv } => {
            let eps = parse_eps(eps.as_deref(), *m)?;
            let params = EmbeddingParams::new(delta.clone(), eps.clone()).map_err(UsageError::from_err)?;
            let q = Hyperquadric::heisenberg(&eps);
            let mut w = open_csv(csv)?;
            let mut header = vec!["t".to_string()];
            header.extend((1..=*m).map(|i| format!("x{i}")));
            header.extend((1..=*m).map(|i| format!("y{i}")));
            header.push("z".into());
            for i in 1..=m + 1 {
                header.push(format!("re_w{i}"));
                header.push(format!("im_w{i}"));
            }
            header.push("residual".into());
            csv_row(&mut w, header)?;
            // off the t = 0 slice the image lies on the quadric shifted by 2kt
            let shift = &(&Rational::from_integer(2) * &delta.re) * t;
            let mut bad = 0;
            for _ in 0..*samples {
                let g = random_heis(&mut rng, *m);
                let img = embed_heisenberg(&params, t, &g).map_err(UsageError::from_err)?;
                let res = quadric_residual(&q, &img).map_err(UsageError::from_err)?;
                if res != GaussRational::real(shift.clone()) {
                    bad += 1;
                }
                let mut row = vec![t.to_string()];
                row.extend(g.x.iter().chain(&g.y).map(|v| v.to_string()));
                row.push(g.z.to_string());
                for c in &img {
                    row.push(c.re.to_string());
                    row.push(c.im.to_string());
                }
                row.push(res.re.to_string());
                csv_row(&mut w, row)?;
            }
            let mut r = CheckReport::new(format!("embed heisenberg m={m} eps={eps:?} delta={delta}"));
            r.record("residual", bad == 0, format!("{bad} of {samples} samples off Re w = 2kt + form, 2kt = {shift}"));
            if let Some(w) = &mut w {
                w.flush().map_err(UsageError::from_err)?;
            }
            Ok(r)
        }
        EmbedCommand::Su2 { delta, samples, csv } => {
            let d = to_complex(delta);
            let mut w = open_csv(csv)?;
            csv_row(&mut w, ["t", "re_z1", "im_z1", "re_z2", "im_z2", "re_w1", "im_w1", "re_w2", "im_w2", "residual"].map(String::from).to_vec())?;
            let mut worst = 0.0f64;
            for _ in 0..*samples {
                let t: f64 = rand::Rng::gen_range(&mut rng, -2.0..2.0);
                let (z1, z2) = random_s3(&mut rng);
                let [w1, w2] = embed_su2(d, t, z1, z2).map_err(UsageError::from_err)?;
                let res = (w1.norm_sqr() + w2.norm_sqr()).ln() - 2.0 * d.re * t;
                worst = worst.max(res.abs());
                csv_row(&mut w, [t, z1.re, z1.im, z2.re, z2.im, w1.re, w1.im, w2.re, w2.im, res].iter().map(|v| format!("{v:e}")).collect())?;
            }
            let mut r = CheckReport::new(format!("embed su2 delta={delta}"));
            r.record("norm law", worst < LAW_TOL, format!("max |ln|w|^2 - 2kt| = {worst:.2e}"));
            if let Some(w) = &mut w {
                w.flush().map_err(UsageError::from_err)?;
            }
            Ok(r)
        }
        EmbedCommand::Sl2 { delta, samples, csv } => {
            let d = to_complex(delta);
            let mut w = open_csv(csv)?;
            csv_row(&mut w, ["t", "a", "b", "c", "d", "re_w", "im_w", "re_v", "im_v", "residual"].map(String::from).to_vec())?;
            let mut outside = 0;
            let mut worst = 0.0f64;
            for _ in 0..*samples {
                let t: f64 = rand::Rng::gen_range(&mut rng, -2.0..2.0);
                let [a, b, c, dd] = random_sl2(&mut rng);
                let (wv, v) = embed_sl2(d, t, a, b, c, dd).map_err(UsageError::from_err)?;
                let res = wv.im - 1.0 / (c * c + dd * dd);
                worst = worst.max(res.abs());
                if !(wv.im > 0.0 && v.norm() > 0.0) {
                    outside += 1;
                }
                csv_row(&mut w, [t, a, b, c, dd, wv.re, wv.im, v.re, v.im, res].iter().map(|v| format!("{v:e}")).collect())?;
            }
            let mut r = CheckReport::new(format!("embed sl2 delta={delta}"));
            r.record("membership", outside == 0 && worst < LAW_TOL, format!("{outside} of {samples} outside H x C*, max Im defect {worst:.2e}"));
            if let Some(w) = &mut w {
                w.flush().map_err(UsageError::from_err)?;
            }
            Ok(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("crlie").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn cr_examples() {
        let r = execute(&parse(&["cr", "heis3", "--k", "1,-i,0", "--phi", "0,0,1", "--expect", "signature=0,1,0", "--expect", "normal=true", "--expect", "reeb=Z"])).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = execute(&parse(&["cr", "su2", "--k", "1,2i,0", "--phi", "0,0,2", "--expect", "integrable=true", "--expect", "pseudoconvex=true", "--expect", "normal=false"])).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = execute(&parse(&["cr", "sl2R", "--cr", "k_X1", "--expect", "nondegenerate=true", "--expect", "normal=false"])).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = execute(&parse(&["cr", "sl2R", "--cr", "k_X1", "--expect", "normal=true"])).unwrap();
        assert!(!r.passed());
        assert!(execute(&parse(&["cr", "heis3", "--k", "1,0"])).is_err());
    }

    #[test]
    fn verify_examples() {
        let r = execute(&parse(&["verify", "su2", "--checks", "jacobi,killing"])).unwrap();
        assert!(r.passed());
        assert!(r.checks[1].witness.as_deref().unwrap().contains("(0,3,0)"), "{:?}", r.checks[1]);
        assert!(!execute(&parse(&["verify", "broken_heis3"])).unwrap().passed());
        assert!(execute(&parse(&["verify", "abelian3", "--checks", "jacobi,center,series,killing,radical"])).unwrap().passed());
        assert!(execute(&parse(&["verify", "no_such_algebra"])).is_err());
    }

    #[test]
    fn eps_parsing() {
        assert_eq!(parse_eps(Some("+-"), 2).unwrap(), vec![1, -1]);
        assert!(parse_eps(Some("+x"), 2).is_err());
        assert!(parse_eps(Some("+"), 2).is_err());
        assert_eq!(parse_eps(None, 3).unwrap(), vec![1, 1, 1]);
    }
}
