use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "knotorder", version, about = "Twisted Alexander polynomials and concordance-order certificates")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial, checked across every representation in the file.
    Alex { knot: PathBuf },
    /// Twisted Alexander polynomial of the n-fold cyclic cover.
    Twisted {
        knot: PathBuf,
        #[arg(long)]
        cover: usize,
        #[arg(long)]
        modulus: u64,
        /// Character values on the invariant-factor generators, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        character: Vec<i64>,
        /// Cover generator whose Fox column is deleted.
        #[arg(long)]
        column: Option<usize>,
    },
    /// H₁ of the n-fold branched cyclic cover.
    CoverHomology {
        knot: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Metabolizers of H₁ of the 2-fold branched cover of K # K.
    Metabolizers {
        knot: PathBuf,
        /// Use the cover of K itself instead of K # K.
        #[arg(long)]
        single: bool,
        /// Also run the exhaustive search and compare.
        #[arg(long)]
        brute_force: bool,
    },
    /// Order-two obstruction for K via twisted polynomials of K # K.
    Order2 {
        knot: PathBuf,
        /// Test every prime-power-order element of each metabolizer.
        #[arg(long)]
        full_orbit: bool,
    },
    /// Signature certificates for twisted doubles of the unknot.
    Lens {
        #[command(subcommand)]
        command: LensCommand,
    },
    /// Fox–Milnor factorization test for an integer polynomial.
    FoxMilnor {
        /// Coefficients from t⁰ upward, separated by commas or spaces.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Algebraic concordance order of the twist knot T_k.
    TwistKnot {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum LensCommand {
    /// σ(T_k, χ^r) by closed form and by lattice count.
    Sigma {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// Signature chain bounding σ₁τ(n·T_k).
    InfiniteOrder {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Accept k < 3, where the bound is not negative.
        #[arg(long)]
        allow_small_k: bool,
    },
    /// Whether a connected sum of multiples of twisted doubles can be slice.
    Independence {
        /// Pairs k:n separated by commas.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        pairs: Vec<String>,
    },
}
