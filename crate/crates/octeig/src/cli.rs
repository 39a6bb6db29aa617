//! The `octeig` command line: read matrix files, report eigen-decompositions,
//! cross-check against the embedding oracle, generate seeded instances.
//!
//! Matrix files are UTF-8 JSON:
//!
//! ```json
//! {"dim": 3, "diag": [p, m, n], "a": [..8], "b": [..8], "c": [..8]}
//! ```
//!
//! Octonions serialize as 8 reals on the basis `(1, i, j, k, l, il, jl, kl)`;
//! 2x2 files carry `"diag": [p, m]` and only `"a"`.
//!
//! Exit codes: 0 pass, 2 parse error, 3 solver defect, 4 verification
//! failure.

use crate::eigensolve::{
    self, eigen_tol, ortho_residual, r_roots, recon_tol, solve2, solve3, Family, Spectrum3,
};
use crate::embed::{embed2, jacobi_eigen, spectrum_with_multiplicity};
use crate::hermitian::{outer, Herm2, Herm3, OctMatrix, OctVec2, OctVec3};
use crate::octonion::Octonion;
use crate::rng::{random_herm2, random_herm3, MatrixClass, SplitMix64};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// A command failure carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Solver(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Solver(_) => EXIT_SOLVER,
            CliError::Verification(_) => EXIT_VERIFY,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Solver(m) | CliError::Verification(m) => m,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::InvalidInput(m) => CliError::Parse(m),
            other => CliError::Solver(other.to_string()),
        }
    }
}

/// On-disk matrix format. The diagonal is a plain real array by
/// construction; anything else fails to parse.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub dim: u8,
    pub diag: Vec<f64>,
    pub a: [f64; 8],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<[f64; 8]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<[f64; 8]>,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: MatrixFile =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<(), CliError> {
        match self.dim {
            2 => {
                if self.diag.len() != 2 {
                    return Err(CliError::Parse(format!(
                        "dim 2 requires 2 diagonal entries, got {}",
                        self.diag.len()
                    )));
                }
                if self.b.is_some() || self.c.is_some() {
                    return Err(CliError::Parse(
                        "dim 2 matrices have a single off-diagonal \"a\"".into(),
                    ));
                }
            }
            3 => {
                if self.diag.len() != 3 {
                    return Err(CliError::Parse(format!(
                        "dim 3 requires 3 diagonal entries, got {}",
                        self.diag.len()
                    )));
                }
                if self.b.is_none() || self.c.is_none() {
                    return Err(CliError::Parse(
                        "dim 3 matrices require off-diagonals \"a\", \"b\", \"c\"".into(),
                    ));
                }
            }
            d => return Err(CliError::Parse(format!("unsupported dimension {d}"))),
        }
        let mut entries: Vec<f64> = self.diag.clone();
        entries.extend_from_slice(&self.a);
        if let Some(b) = &self.b {
            entries.extend_from_slice(b);
        }
        if let Some(c) = &self.c {
            entries.extend_from_slice(c);
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(CliError::Parse("matrix entries must be finite".into()));
        }
        Ok(())
    }

    pub fn to_herm2(&self) -> Result<Herm2, CliError> {
        if self.dim != 2 {
            return Err(CliError::Parse("not a 2x2 matrix file".into()));
        }
        Ok(Herm2::new(self.diag[0], self.diag[1], Octonion::new(self.a)))
    }

    pub fn to_herm3(&self) -> Result<Herm3, CliError> {
        if self.dim != 3 {
            return Err(CliError::Parse("not a 3x3 matrix file".into()));
        }
        Ok(Herm3::new(
            self.diag[0],
            self.diag[1],
            self.diag[2],
            Octonion::new(self.a),
            Octonion::new(self.b.expect("validated")),
            Octonion::new(self.c.expect("validated")),
        ))
    }

    pub fn from_herm2(a: &Herm2) -> Self {
        MatrixFile {
            dim: 2,
            diag: vec![a.p, a.m],
            a: a.a.c,
            b: None,
            c: None,
        }
    }

    pub fn from_herm3(a: &Herm3) -> Self {
        MatrixFile {
            dim: 3,
            diag: vec![a.p, a.m, a.n],
            a: a.a.c,
            b: Some(a.b.c),
            c: Some(a.c.c),
        }
    }
}

fn vec3_coeffs(v: &OctVec3) -> [[f64; 8]; 3] {
    [v.0[0].c, v.0[1].c, v.0[2].c]
}

fn vec2_coeffs(v: &OctVec2) -> [[f64; 8]; 2] {
    [v.0[0].c, v.0[1].c]
}

/// Per-family slice of the eigen report.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub r: f64,
    pub eigenvalues: [f64; 3],
    pub eigenvectors: [[[f64; 8]; 3]; 3],
    pub eigen_residual: f64,
    pub orthogonality_residual: f64,
    pub completeness_residual: f64,
    pub reconstruction_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport3 {
    pub input: MatrixFile,
    pub r_values: [f64; 2],
    pub degenerate_doubled: bool,
    pub families: Vec<FamilyReport>,
    /// Largest `|Re(v†w)|` across families: always ~0 (weak orthogonality).
    pub cross_family_weak_orthogonality: f64,
    /// Largest `(vv†)w` residual across families: measured only, the theory
    /// asserts orthogonality within one family, not across.
    pub cross_family_ortho_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub eigenvalue: f64,
    pub eigenvector: [[f64; 8]; 2],
    pub eigen_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport2 {
    pub input: MatrixFile,
    pub pairs: [PairReport; 2],
    pub orthogonality_residual: f64,
    pub completeness_residual: f64,
    pub reconstruction_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum EigenReport {
    Two(Box<EigenReport2>),
    Three(Box<EigenReport3>),
}

impl EigenReport {
    pub fn pass(&self) -> bool {
        match self {
            EigenReport::Two(r) => r.pass,
            EigenReport::Three(r) => r.pass,
        }
    }
}

fn family_report(a: &Herm3, fam: &Family) -> FamilyReport {
    let grid = a.to_matrix();
    let mut eigen_residual = 0.0f64;
    let mut ortho = 0.0f64;
    for (lam, v) in fam.lambdas.iter().zip(fam.eigvecs.iter()) {
        eigen_residual = eigen_residual.max(eigensolve::verify_right_eigen(
            &grid,
            v,
            Octonion::from_real(*lam),
        ));
    }
    let mut complete = OctMatrix::<3>::zero();
    let mut recon = OctMatrix::<3>::zero();
    for (i, (lam, v)) in fam.lambdas.iter().zip(fam.eigvecs.iter()).enumerate() {
        for (j, w) in fam.eigvecs.iter().enumerate() {
            if i != j {
                ortho = ortho.max(ortho_residual(v, w));
            }
        }
        let o = outer(v);
        complete = complete.add(&o);
        recon = recon.add(&o.scale(*lam));
    }
    FamilyReport {
        r: fam.r,
        eigenvalues: fam.lambdas,
        eigenvectors: [
            vec3_coeffs(&fam.eigvecs[0]),
            vec3_coeffs(&fam.eigvecs[1]),
            vec3_coeffs(&fam.eigvecs[2]),
        ],
        eigen_residual,
        orthogonality_residual: ortho,
        completeness_residual: complete.sub(&OctMatrix::identity()).max_abs_coeff(),
        reconstruction_residual: recon.sub(&grid).max_abs_coeff(),
    }
}

/// Which family of a 3x3 spectrum to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilySelect {
    /// The larger root r₊.
    #[value(name = "r+")]
    Plus,
    /// The smaller root r₋.
    #[value(name = "r-")]
    Minus,
}

pub struct EigenOptions {
    pub family: Option<FamilySelect>,
    pub tolerance: Option<f64>,
}

/// Solve and report. `pass` compares every residual against the tolerance
/// (default: the decomposition tolerance `1e-8·(1+‖A‖)`).
pub fn cmd_eigen(file: &MatrixFile, opts: &EigenOptions) -> Result<EigenReport, CliError> {
    if file.dim == 2 {
        return cmd_eigen2(file, opts);
    }
    let a = file.to_herm3()?;
    let spectrum = solve3(&a).map_err(|e| CliError::Solver(e.to_string()))?;
    let (rp, rm) = r_roots(&a);
    let tolerance = opts.tolerance.unwrap_or_else(|| recon_tol(&a));

    let selected: Vec<&Family> = match opts.family {
        None => spectrum.families.iter().collect(),
        Some(FamilySelect::Plus) => vec![&spectrum.families[0]],
        Some(FamilySelect::Minus) => vec![spectrum.families.last().expect("nonempty")],
    };
    let families: Vec<FamilyReport> = selected.iter().map(|f| family_report(&a, f)).collect();

    let (weak, cross) = cross_family_measurements(&spectrum);
    let pass = families.iter().all(|f| {
        f.eigen_residual <= tolerance
            && f.orthogonality_residual <= tolerance
            && f.completeness_residual <= tolerance
            && f.reconstruction_residual <= tolerance
    });
    Ok(EigenReport::Three(Box::new(EigenReport3 {
        input: file.clone(),
        r_values: [rp, rm],
        degenerate_doubled: spectrum.doubled,
        families,
        cross_family_weak_orthogonality: weak,
        cross_family_ortho_residual: cross,
        tolerance,
        pass,
    })))
}

fn cross_family_measurements(spectrum: &Spectrum3) -> (f64, f64) {
    let mut weak = 0.0f64;
    let mut cross = 0.0f64;
    if spectrum.families.len() == 2 {
        let (fa, fb) = (&spectrum.families[0], &spectrum.families[1]);
        for (la, va) in fa.lambdas.iter().zip(fa.eigvecs.iter()) {
            for (lb, vb) in fb.lambdas.iter().zip(fb.eigvecs.iter()) {
                if (la - lb).abs() <= 1e-9 * (1.0 + la.abs()) {
                    continue; // weak orthogonality only claimed for distinct eigenvalues
                }
                weak = weak.max(va.dagger_dot(vb).re().abs());
                cross = cross.max(ortho_residual(va, vb));
            }
        }
    }
    (weak, cross)
}

fn cmd_eigen2(file: &MatrixFile, opts: &EigenOptions) -> Result<EigenReport, CliError> {
    let a = file.to_herm2()?;
    let spectrum = solve2(&a);
    let tolerance = opts
        .tolerance
        .unwrap_or_else(|| 1e-8 * (1.0 + a.max_coeff_norm()));
    let grid = a.to_matrix();
    let pairs: Vec<PairReport> = spectrum
        .pairs
        .iter()
        .map(|p| PairReport {
            eigenvalue: p.lambda,
            eigenvector: vec2_coeffs(&p.v),
            eigen_residual: eigensolve::verify_right_eigen(
                &grid,
                &p.v,
                Octonion::from_real(p.lambda),
            ),
        })
        .collect();
    let (v0, v1) = (&spectrum.pairs[0].v, &spectrum.pairs[1].v);
    let ortho = ortho_residual(v0, v1).max(ortho_residual(v1, v0));
    let complete = outer(v0)
        .add(&outer(v1))
        .sub(&OctMatrix::identity())
        .max_abs_coeff();
    let recon = outer(v0)
        .scale(spectrum.pairs[0].lambda)
        .add(&outer(v1).scale(spectrum.pairs[1].lambda))
        .sub(&grid)
        .max_abs_coeff();
    let pass = pairs.iter().all(|p| p.eigen_residual <= tolerance)
        && ortho <= tolerance
        && complete <= tolerance
        && recon <= tolerance;
    Ok(EigenReport::Two(Box::new(EigenReport2 {
        input: file.clone(),
        pairs: [pairs[0].clone(), pairs[1].clone()],
        orthogonality_residual: ortho,
        completeness_residual: complete,
        reconstruction_residual: recon,
        tolerance,
        pass,
    })))
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub input: MatrixFile,
    pub checks: Vec<Check>,
    pub pass: bool,
}

fn check(name: &str, residual: f64, tolerance: f64) -> Check {
    Check {
        name: name.to_string(),
        residual,
        tolerance,
        pass: residual <= tolerance,
    }
}

/// Run the identity suite on one matrix. With `corrupt` set, the first
/// eigenvector is perturbed before checking: the orthogonality and
/// reconstruction checks must then fail (negative control).
pub fn cmd_verify(file: &MatrixFile, corrupt: bool) -> Result<VerifyReport, CliError> {
    let checks = if file.dim == 2 {
        verify2(&file.to_herm2()?, corrupt)?
    } else {
        verify3(&file.to_herm3()?, corrupt)?
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport {
        input: file.clone(),
        checks,
        pass,
    })
}

fn corrupt_vec3(v: &OctVec3) -> OctVec3 {
    let mut out = *v;
    out.0[0] += Octonion::from_real(0.3) + Octonion::JL * 0.2;
    out
}

fn verify3(a: &Herm3, corrupt: bool) -> Result<Vec<Check>, CliError> {
    let scale = a.max_coeff_norm();
    let mut checks = vec![
        check(
            "characteristic_equation",
            a.char_residual(),
            1e-9 * (1.0 + scale.powi(3)),
        ),
        check(
            "det_conj_identity",
            (a.conj().det() - (a.det() - 4.0 * a.phi())).abs(),
            1e-10 * (1.0 + a.det().abs() + 4.0 * a.phi().abs()),
        ),
    ];
    let mut spectrum = solve3(a).map_err(|e| CliError::Solver(e.to_string()))?;
    if corrupt {
        for fam in spectrum.families.iter_mut() {
            fam.eigvecs[0] = corrupt_vec3(&fam.eigvecs[0]);
        }
    }
    let tol = recon_tol(a);
    for (idx, fam) in spectrum.families.iter().enumerate() {
        let rep = family_report(a, fam);
        let label = |what: &str| format!("family{idx}_{what}");
        checks.push(check(&label("eigen_equation"), rep.eigen_residual, eigen_tol(a)));
        checks.push(check(&label("orthogonality"), rep.orthogonality_residual, tol));
        checks.push(check(&label("completeness"), rep.completeness_residual, tol));
        checks.push(check(&label("reconstruction"), rep.reconstruction_residual, tol));
    }
    Ok(checks)
}

fn verify2(a: &Herm2, corrupt: bool) -> Result<Vec<Check>, CliError> {
    let mut spectrum = solve2(a);
    if corrupt {
        spectrum.pairs[0].v.0[0] += Octonion::from_real(0.3) + Octonion::JL * 0.2;
    }
    let tol = 1e-8 * (1.0 + a.max_coeff_norm());
    let grid = a.to_matrix();
    let (p0, p1) = (&spectrum.pairs[0], &spectrum.pairs[1]);
    let mut checks = vec![
        check(
            "eigen_equation",
            eigensolve::verify_right_eigen(&grid, &p0.v, Octonion::from_real(p0.lambda)).max(
                eigensolve::verify_right_eigen(&grid, &p1.v, Octonion::from_real(p1.lambda)),
            ),
            eigen_tol3_like(a),
        ),
        check(
            "orthogonality",
            ortho_residual(&p0.v, &p1.v).max(ortho_residual(&p1.v, &p0.v)),
            tol,
        ),
    ];
    let complete = outer(&p0.v)
        .add(&outer(&p1.v))
        .sub(&OctMatrix::identity())
        .max_abs_coeff();
    checks.push(check("completeness", complete, tol));
    let recon = outer(&p0.v)
        .scale(p0.lambda)
        .add(&outer(&p1.v).scale(p1.lambda))
        .sub(&grid)
        .max_abs_coeff();
    checks.push(check("reconstruction", recon, tol));
    Ok(checks)
}

fn eigen_tol3_like(a: &Herm2) -> f64 {
    1e-9 * (1.0 + a.max_coeff_norm())
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterReport {
    pub value: f64,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub input: MatrixFile,
    /// Analytic eigenvalues with their expected embedding multiplicities.
    pub analytic: Vec<ClusterReport>,
    /// Clustered spectrum of the real symmetric embedding.
    pub oracle: Vec<ClusterReport>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Side-by-side analytic vs embedding spectrum with multiplicity structure.
pub fn cmd_oracle(file: &MatrixFile) -> Result<OracleReport, CliError> {
    if file.dim == 2 {
        return cmd_oracle2(file);
    }
    let a = file.to_herm3()?;
    let spectrum = solve3(&a).map_err(|e| CliError::Solver(e.to_string()))?;
    let per_family = if spectrum.doubled { 8 } else { 4 };
    let mut expected: Vec<f64> = Vec::with_capacity(24);
    for fam in &spectrum.families {
        for lam in fam.lambdas {
            expected.extend(std::iter::repeat(lam).take(per_family));
        }
    }
    expected.sort_by(f64::total_cmp);

    let clusters = spectrum_with_multiplicity(&a).map_err(|e| CliError::Solver(e.to_string()))?;
    let mut oracle_flat: Vec<f64> = Vec::with_capacity(24);
    for c in &clusters {
        oracle_flat.extend(std::iter::repeat(c.value).take(c.count));
    }

    let tolerance = 1e-8 * (1.0 + a.max_coeff_norm());
    let max_deviation = expected
        .iter()
        .zip(oracle_flat.iter())
        .fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs()));
    let analytic = cluster_reports(&expected, &a);
    Ok(OracleReport {
        input: file.clone(),
        analytic,
        oracle: clusters
            .iter()
            .map(|c| ClusterReport {
                value: c.value,
                count: c.count,
            })
            .collect(),
        max_deviation,
        tolerance,
        pass: oracle_flat.len() == 24 && max_deviation <= tolerance,
    })
}

fn cluster_reports(sorted: &[f64], a: &Herm3) -> Vec<ClusterReport> {
    let gap = crate::embed::cluster_gap(a);
    let mut out: Vec<ClusterReport> = Vec::new();
    for &x in sorted {
        match out.last_mut() {
            Some(last) if (x - last.value).abs() <= gap => last.count += 1,
            _ => out.push(ClusterReport { value: x, count: 1 }),
        }
    }
    out
}

fn cmd_oracle2(file: &MatrixFile) -> Result<OracleReport, CliError> {
    let a = file.to_herm2()?;
    let spectrum = solve2(&a);
    let mut expected: Vec<f64> = Vec::with_capacity(16);
    for p in &spectrum.pairs {
        expected.extend(std::iter::repeat(p.lambda).take(8));
    }
    expected.sort_by(f64::total_cmp);
    let spec = jacobi_eigen(&embed2(&a)).map_err(|e| CliError::Solver(e.to_string()))?;
    let tolerance = 1e-8 * (1.0 + a.max_coeff_norm());
    let max_deviation = expected
        .iter()
        .zip(spec.eigenvalues.iter())
        .fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs()));
    let gap = 1e-7 * (1.0 + a.max_coeff_norm());
    let mut oracle: Vec<ClusterReport> = Vec::new();
    for &x in &spec.eigenvalues {
        match oracle.last_mut() {
            Some(last) if (x - last.value).abs() <= gap => last.count += 1,
            _ => oracle.push(ClusterReport { value: x, count: 1 }),
        }
    }
    let mut analytic: Vec<ClusterReport> = Vec::new();
    for &x in &expected {
        match analytic.last_mut() {
            Some(last) if (x - last.value).abs() <= gap => last.count += 1,
            _ => analytic.push(ClusterReport { value: x, count: 1 }),
        }
    }
    Ok(OracleReport {
        input: file.clone(),
        analytic,
        oracle,
        max_deviation,
        tolerance,
        pass: max_deviation <= tolerance,
    })
}

/// Deterministic random matrix file from a 64-bit seed.
pub fn cmd_random(seed: u64, class: MatrixClass, scale: f64, dim: u8) -> Result<MatrixFile, CliError> {
    if !(scale.is_finite() && scale > 0.0) {
        return Err(CliError::Parse(format!("scale must be positive, got {scale}")));
    }
    let mut rng = SplitMix64::new(seed);
    match dim {
        2 => Ok(MatrixFile::from_herm2(&random_herm2(&mut rng, class, scale))),
        3 => Ok(MatrixFile::from_herm3(&random_herm3(&mut rng, class, scale))),
        d => Err(CliError::Parse(format!("unsupported dimension {d}"))),
    }
}

// --- argument parsing and dispatch ---

#[derive(Parser)]
#[command(
    name = "octeig",
    about = "Eigen-decomposition of 2x2 and 3x3 octonionic Hermitian matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    Complex,
    Quaternionic,
    Octonionic,
}

impl From<ClassArg> for MatrixClass {
    fn from(c: ClassArg) -> MatrixClass {
        match c {
            ClassArg::Complex => MatrixClass::Complex,
            ClassArg::Quaternionic => MatrixClass::Quaternionic,
            ClassArg::Octonionic => MatrixClass::Octonionic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve the real right-eigenvalue problem and report both families.
    Eigen {
        file: PathBuf,
        /// Report a single family.
        #[arg(long, value_enum)]
        family: Option<FamilySelect>,
        /// Residual tolerance override.
        #[arg(long)]
        tol: Option<f64>,
        /// Human-readable table instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Run the identity suite and report a verdict table.
    Verify {
        file: PathBuf,
        /// Negative control: perturb an eigenvector before checking.
        #[arg(long)]
        corrupt: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Compare analytic eigenvalues against the real-embedding spectrum.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Generate a seeded random matrix file on standard output.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long, default_value_t = 3)]
        dim: u8,
    },
}

fn read_file(path: &PathBuf) -> Result<MatrixFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    MatrixFile::parse(&text)
}

fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn print_eigen_pretty(report: &EigenReport) {
    match report {
        EigenReport::Three(r) => {
            println!(
                "r values: {}  {}{}",
                sig12(r.r_values[0]),
                sig12(r.r_values[1]),
                if r.degenerate_doubled {
                    "  (doubled complex-type family)"
                } else {
                    ""
                }
            );
            for fam in &r.families {
                println!("family r = {}", sig12(fam.r));
                for (i, lam) in fam.eigenvalues.iter().enumerate() {
                    println!("  λ{} = {}", i + 1, sig12(*lam));
                    let v = &fam.eigenvectors[i];
                    for (comp, coeffs) in v.iter().enumerate() {
                        let formatted: Vec<String> =
                            coeffs.iter().map(|x| sig12(*x)).collect();
                        println!("    v[{}] = [{}]", comp, formatted.join(", "));
                    }
                }
                println!(
                    "  residuals: eigen {}, ortho {}, completeness {}, reconstruction {}",
                    sig12(fam.eigen_residual),
                    sig12(fam.orthogonality_residual),
                    sig12(fam.completeness_residual),
                    sig12(fam.reconstruction_residual)
                );
            }
            println!(
                "cross-family: weak orthogonality {}, generalized residual {} (measured only)",
                sig12(r.cross_family_weak_orthogonality),
                sig12(r.cross_family_ortho_residual)
            );
            println!("pass: {}", r.pass);
        }
        EigenReport::Two(r) => {
            for p in &r.pairs {
                println!("λ = {}", sig12(p.eigenvalue));
                for (comp, coeffs) in p.eigenvector.iter().enumerate() {
                    let formatted: Vec<String> = coeffs.iter().map(|x| sig12(*x)).collect();
                    println!("  v[{}] = [{}]", comp, formatted.join(", "));
                }
                println!("  eigen residual {}", sig12(p.eigen_residual));
            }
            println!(
                "residuals: ortho {}, completeness {}, reconstruction {}",
                sig12(r.orthogonality_residual),
                sig12(r.completeness_residual),
                sig12(r.reconstruction_residual)
            );
            println!("pass: {}", r.pass);
        }
    }
}

fn print_verify_pretty(report: &VerifyReport) {
    for c in &report.checks {
        println!(
            "{:<28} residual {}  tol {}  {}",
            c.name,
            sig12(c.residual),
            sig12(c.tolerance),
            if c.pass { "PASS" } else { "FAIL" }
        );
    }
    println!("pass: {}", report.pass);
}

fn print_oracle_pretty(report: &OracleReport) {
    println!("analytic spectrum (value x multiplicity):");
    for c in &report.analytic {
        println!("  {} x{}", sig12(c.value), c.count);
    }
    println!("embedding spectrum:");
    for c in &report.oracle {
        println!("  {} x{}", sig12(c.value), c.count);
    }
    println!(
        "max deviation {} (tol {})  pass: {}",
        sig12(report.max_deviation),
        sig12(report.tolerance),
        report.pass
    );
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization")
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Eigen {
            file,
            family,
            tol,
            pretty,
        } => {
            let input = read_file(&file)?;
            let report = cmd_eigen(
                &input,
                &EigenOptions {
                    family,
                    tolerance: tol,
                },
            )?;
            if pretty {
                print_eigen_pretty(&report);
            } else {
                println!("{}", to_json(&report));
            }
            Ok(if report.pass() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Verify {
            file,
            corrupt,
            pretty,
        } => {
            let input = read_file(&file)?;
            let report = cmd_verify(&input, corrupt)?;
            if pretty {
                print_verify_pretty(&report);
            } else {
                println!("{}", to_json(&report));
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Oracle { file, pretty } => {
            let input = read_file(&file)?;
            let report = cmd_oracle(&input)?;
            if pretty {
                print_oracle_pretty(&report);
            } else {
                println!("{}", to_json(&report));
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Random {
            seed,
            class,
            scale,
            dim,
        } => {
            let file = cmd_random(seed, class.into(), scale, dim)?;
            println!("{}", to_json(&file));
            Ok(EXIT_OK)
        }
    }
}

/// Entry point used by the `octeig` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
