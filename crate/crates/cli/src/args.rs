use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

/// Exact invariants of surface bundles.
#[derive(Debug, Parser)]
#[command(name = "surfinv", version)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arf invariant of a quadratic form on F2^{2g}.
    Arf(FormArgs),
    /// Count (or list) the quadratic forms of a given genus by Arf invariant.
    Forms {
        #[arg(long)]
        g: usize,
        /// List every form instead of counting.
        #[arg(long)]
        list: bool,
    },
    /// Number of zeros of a quadratic form, brute force and closed form.
    Zeros(FormArgs),
    /// Bernoulli number B_k (positive convention) and B_k/2k.
    Bernoulli {
        #[arg(long)]
        k: u64,
    },
    /// Denominator of B_k/2k from the exact rational and from the von Staudt product.
    Vonstaudt {
        #[arg(long)]
        k: u64,
    },
    /// Divisor of the MMM-class kappa_n.
    Divisibility {
        #[arg(long)]
        index: u64,
        /// Bound for spin surface bundles instead of oriented ones.
        #[arg(long)]
        spin: bool,
    },
    /// MMM-class kappa_n of a universal genus-0 or genus-1 bundle.
    Kappa {
        #[arg(long, value_enum)]
        family: KappaFamily,
        #[arg(long)]
        n: u32,
    },
    /// Analytic class lambda_n of a universal genus-0 or genus-1 bundle.
    Lambda {
        #[arg(long, value_enum)]
        family: LambdaFamily,
        #[arg(long)]
        n: u32,
    },
    /// Kernel, cokernel and index of dbar on the m-th power of the canonical bundle.
    Rr {
        #[arg(long)]
        genus: u64,
        #[arg(long, allow_hyphen_values = true)]
        power: i64,
    },
    /// Homology-sphere criterion and presentation of a Seifert fibration.
    SeifertCheck {
        #[arg(long)]
        input: PathBuf,
    },
    /// e-invariant of a flat bundle over a Seifert homology sphere.
    #[command(group(ArgGroup::new("source").required(true).args(["input", "example"])))]
    Einvariant {
        #[arg(long)]
        input: Option<PathBuf>,
        /// One of the icosahedral examples.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        example: Option<u32>,
    },
    /// e-invariant of icosahedral example 3 stabilized n times.
    Stabilize {
        #[arg(long)]
        n: u64,
    },
    /// Facts about the binary icosahedral group SL2(F5).
    #[command(group(ArgGroup::new("mode").required(true).args(["census", "verify"])))]
    Icosa {
        /// Number of elements of each order.
        #[arg(long)]
        census: bool,
        /// Order, perfectness, center and a presentation witness.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, clap::Args)]
pub struct FormArgs {
    #[arg(long)]
    pub g: usize,
    /// Bitstring of length 2g: q(a_1)..q(a_g) then q(b_1)..q(b_g).
    #[arg(long)]
    pub basis_values: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KappaFamily {
    /// Oriented sphere bundles over BSO(3), in p1.
    Sphere,
    /// Projectivized rank-2 complex bundles, in c1 and c2.
    Proj,
    /// Spin sphere bundles over HP^infinity, in u.
    Hp,
    /// Torus bundles.
    Torus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LambdaFamily {
    /// In Z[c2, c3]/(2 c3).
    Sphere,
    /// In u.
    Torus,
}
