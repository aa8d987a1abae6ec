use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ptpartner",
    version,
    about = "PT-symmetric Hamiltonians and their Hermitian partners"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply one map to a Hamiltonian.
    Transform {
        #[arg(long = "in")]
        input: PathBuf,
        /// rotate-minus | rotate-plus | eta:<beta> | mass-flip | coupling-flip:<i>
        #[arg(long)]
        map: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Lowest levels as CSV.
    Spectrum {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        method: SpectrumMethod,
        /// real:<xmin>:<xmax>:<N> | shifted:<xmin>:<xmax>:<c>:<N>
        #[arg(long, allow_hyphen_values = true)]
        contour: Option<String>,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        /// Extrapolate finite differences from N and 2N-1 samples.
        #[arg(long)]
        richardson: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve a PT Hamiltonian and its Hermitian partner and pair the spectra.
    Verify {
        #[arg(long)]
        pt: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        contour: String,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        #[arg(long, value_enum, default_value_t = Sign::Minus)]
        sign: Sign,
        /// Exit with 1 when the verdict is `failed`.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Gram matrices of the lowest eigenvectors.
    Ortho {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        contour: String,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Packaged numerical experiments
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Debug, Subcommand)]
pub enum Experiment {
    /// H± = p² ± m²x² + i f x³ in two boxes.
    Znojil {
        #[arg(long, allow_hyphen_values = true)]
        m2: f64,
        #[arg(long, allow_hyphen_values = true)]
        f: f64,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        /// Grid step, shared by both boxes.
        #[arg(long, default_value_t = 0.006)]
        step: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Finite-difference convergence of the lowest levels.
    Convergence {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        levels: usize,
        /// Coarsest grid; each further grid doubles N.
        #[arg(long, allow_hyphen_values = true, default_value = "real:-12:12:500")]
        contour: String,
        #[arg(long, default_value_t = 4)]
        grids: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also plot the ground level as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumMethod {
    Fd,
    Shoot,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    Minus,
    Plus,
}
