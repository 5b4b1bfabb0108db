use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "metawhit", version, about = "Metaplectic Whittaker functions via crystals, patterns and cell integrals")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 20240611)]
    pub seed: u64,
    /// Worker threads; defaults to the rayon choice.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    Classical,
    Printed,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    A1xa1,
    A2,
    B2,
    G2,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct WeightArgs {
    /// Rank r of SL(r+1).
    #[arg(short = 'r', long)]
    pub rank: usize,
    /// Cover degree n.
    #[arg(short = 'n', long, default_value_t = 1)]
    pub cover: u32,
    /// Dominant weight in fundamental-weight coordinates, e.g. 1,0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Vec<i64>,
    #[arg(long, value_enum, default_value_t = Norm::Classical)]
    pub normalization: Norm,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Weighted crystal sum.
    Whittaker(WeightArgs),
    /// Gelfand-Tsetlin pattern sum.
    GtPpart(WeightArgs),
    /// Compare the crystal and pattern sums.
    Compare {
        #[command(flatten)]
        w: WeightArgs,
        /// Prime for the numeric check.
        #[arg(short = 'p', long)]
        prime: Option<u64>,
    },
    /// Gindikin-Karpelevich identity up to total degree D.
    Gk {
        #[arg(short = 'r', long)]
        rank: usize,
        #[arg(short = 'n', long, default_value_t = 1)]
        cover: u32,
        #[arg(short = 'D', long, default_value_t = 6)]
        degree: u32,
    },
    /// Restricted identity over the inversion set of w (all of W when omitted).
    Gkw {
        #[arg(short = 'r', long)]
        rank: usize,
        #[arg(short = 'n', long, default_value_t = 1)]
        cover: u32,
        #[arg(short = 'D', long, default_value_t = 5)]
        degree: u32,
        /// Letters of w, e.g. 1,2.
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
    },
    /// Gauss sums g(a,b) symbolically and at p.
    GaussTable {
        #[arg(short = 'p', long)]
        prime: u64,
        #[arg(short = 'n', long)]
        cover: u32,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        b_min: i64,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        b_max: i64,
    },
    /// Decorated tuples of B(lambda + rho) with their weights.
    CrystalEnum(WeightArgs),
    /// Transport a tuple between reduced words, or apply one rank-two move.
    Transition {
        /// Source word letters; omitted with --case.
        #[arg(long, value_delimiter = ',')]
        from: Option<Vec<usize>>,
        /// Target word letters.
        #[arg(long, value_delimiter = ',')]
        to: Option<Vec<usize>>,
        /// Rank-two move to apply to --m directly.
        #[arg(long, value_enum)]
        case: Option<Case>,
        /// Apply the move in the opposite direction.
        #[arg(long)]
        inverse: bool,
        /// Tuple entries.
        #[arg(long, value_delimiter = ',')]
        m: Vec<u64>,
    },
    /// Random decompositions over F_p(t) with consistency checks.
    Simulate {
        #[arg(short = 'r', long, default_value_t = 2)]
        rank: usize,
        #[arg(short = 'p', long, default_value_t = 5)]
        prime: u64,
        #[arg(short = 'n', long, default_value_t = 2)]
        cover: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Lowest power of t in sampled coordinates.
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        min_valuation: i64,
        /// Include every sample in the output.
        #[arg(long)]
        detail: bool,
    },
    /// Exact cell integration against the closed form.
    Integrate {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(short = 'p', long, default_value_t = 5)]
        prime: u64,
        /// A single cell; every cell with total at most --max-sum when omitted.
        #[arg(long, value_delimiter = ',')]
        m: Option<Vec<u32>>,
        #[arg(long, default_value_t = 2)]
        max_sum: u32,
        /// Evaluation point as re:im pairs, e.g. 0.31:0.17,-0.23:0.29.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<String>>,
        #[arg(long, default_value_t = 5)]
        max_depth: u32,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Whittaker(_) => "whittaker",
            Command::GtPpart(_) => "gt-ppart",
            Command::Compare { .. } => "compare",
            Command::Gk { .. } => "gk",
            Command::Gkw { .. } => "gkw",
            Command::GaussTable { .. } => "gauss-table",
            Command::CrystalEnum(_) => "crystal-enum",
            Command::Transition { .. } => "transition",
            Command::Simulate { .. } => "simulate",
            Command::Integrate { .. } => "integrate",
        }
    }
}
