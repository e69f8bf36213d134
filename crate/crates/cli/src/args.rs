use clap::{Args, Parser, Subcommand, ValueEnum};
use gordon_core::arc::MonomialOrder;

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(name = "gordon-verify", version, about = "Exact verification campaigns for Gordon-type partition identities")]
pub struct Cli {
    /// Output format; CSV carries the tables only.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads; overrides GORDON_JOBS.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the partitions of n in one family.
    Count(CountArgs),
    /// Print a truncated q-series.
    Series(SeriesArgs),
    /// A_{r,i} = B_{r,i} = product side = multisum, coefficient by coefficient.
    VerifyGordon(GordonArgs),
    /// Shifted Rogers-Ramanujan counts and their recursive system.
    VerifyRrk(RrkArgs),
    /// r = 3 new-part counts, their system and bijections.
    VerifyGordon3(Gordon3Args),
    /// New-part counts against difference counts for general r.
    VerifyConjecture(ConjectureArgs),
    /// Hilbert series recursion and coefficient tables.
    VerifyRecursion(RecursionArgs),
    /// The G-series recursion, divisibility hypothesis and convergence.
    VerifyLz(LzArgs),
    /// Hilbert series of one monomial ideal by both methods.
    Hilbert(HilbertArgs),
    /// Leading ideal of the differential ideal generated by x1^r.
    LeadingIdeal(LeadingIdealArgs),
    /// Exhaustive checks of the explicit bijections.
    VerifyBijections(BijectionArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Count(_) => "count",
            Command::Series(_) => "series",
            Command::VerifyGordon(_) => "verify-gordon",
            Command::VerifyRrk(_) => "verify-rrk",
            Command::VerifyGordon3(_) => "verify-gordon3",
            Command::VerifyConjecture(_) => "verify-conjecture",
            Command::VerifyRecursion(_) => "verify-recursion",
            Command::VerifyLz(_) => "verify-lz",
            Command::Hilbert(_) => "hilbert",
            Command::LeadingIdeal(_) => "leading-ideal",
            Command::VerifyBijections(_) => "verify-bijections",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    /// A, B, C, c2k, b2k, c3 or b3.
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long)]
    pub n: u32,
    /// Count only partitions with exactly this many parts.
    #[arg(long)]
    pub length: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Partitions,
    Pochhammer,
    InvPochhammer,
    Product,
    AndrewsGordon,
    QBinomial,
    LemmaQBinomial,
    DoubleSumR3,
    ChainSumR3,
    Conjecture,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Rank2,
    Rank3,
    General,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub kind: SeriesKind,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub j: usize,
    #[arg(long, default_value_t = 1)]
    pub c: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = FormArg::General)]
    pub form: FormArg,
    #[arg(long, default_value_t = 20)]
    pub order: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GordonArgs {
    #[arg(long = "r", value_delimiter = ',', default_values_t = [2, 3])]
    pub r: Vec<usize>,
    #[arg(long, default_value_t = 20)]
    pub max_n: u32,
}

#[derive(Debug, Clone, Args)]
pub struct RrkArgs {
    #[arg(long = "k", value_delimiter = ',', default_values_t = [1, 2, 3])]
    pub k: Vec<u32>,
    #[arg(long, default_value_t = 12)]
    pub max_m: usize,
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct Gordon3Args {
    #[arg(long, default_value_t = 15)]
    pub max_m: usize,
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
    /// Largest weight for the exhaustive bijection checks.
    #[arg(long, default_value_t = 16)]
    pub bijection_n: u32,
}

#[derive(Debug, Clone, Args)]
pub struct ConjectureArgs {
    #[arg(long = "r", value_delimiter = ',', default_values_t = [4])]
    pub r: Vec<usize>,
    #[arg(long, default_value_t = 20)]
    pub max_n: u32,
    /// Truncation order of the series comparisons.
    #[arg(long, default_value_t = 20)]
    pub order: usize,
    #[arg(long, default_value_t = 2)]
    pub max_c: usize,
    #[arg(long, default_value_t = 2)]
    pub max_m: usize,
}

#[derive(Debug, Clone, Args)]
pub struct RecursionArgs {
    #[arg(long = "r", value_delimiter = ',', default_values_t = [2, 3])]
    pub r: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    pub max_k: usize,
    /// Deepest table level.
    #[arg(long, default_value_t = 6)]
    pub max_d: usize,
    #[arg(long, default_value_t = 20)]
    pub order: usize,
}

#[derive(Debug, Clone, Args)]
pub struct LzArgs {
    #[arg(long = "r", value_delimiter = ',', default_values_t = [2, 3])]
    pub r: Vec<usize>,
    #[arg(long, default_value_t = 6)]
    pub max_d: usize,
    #[arg(long, default_value_t = 20)]
    pub order: usize,
    /// Deepest level of the convergence check; defaults to order + 2.
    #[arg(long)]
    pub max_level: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdealArg {
    #[value(name = "I_ri")]
    Iri,
    #[value(name = "Iprime_ri")]
    IPrime,
    #[value(name = "J_k_l")]
    J,
    #[value(name = "block")]
    Block,
}

#[derive(Debug, Clone, Args)]
pub struct HilbertArgs {
    #[arg(long, value_enum)]
    pub family: IdealArg,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long, default_value_t = 1)]
    pub l: usize,
    #[arg(long, default_value_t = 1)]
    pub c: u32,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    #[arg(long, default_value_t = 20)]
    pub order: usize,
}

#[derive(Debug, Clone, Args)]
pub struct LeadingIdealArgs {
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 10)]
    pub max_weight: u64,
    /// wlex or wrevlex.
    #[arg(long, default_value = "wlex")]
    pub order: MonomialOrder,
}

#[derive(Debug, Clone, Args)]
pub struct BijectionArgs {
    #[arg(long = "k", value_delimiter = ',', default_values_t = [1])]
    pub k: Vec<u32>,
    #[arg(long, default_value_t = 16)]
    pub max_n: u32,
    /// Restrict to one map by name.
    #[arg(long)]
    pub map: Option<String>,
}
