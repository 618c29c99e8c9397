use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cartan",
    version,
    about = "Invariant factors of Cartan matrices of Hecke algebras of type A"
)]
pub struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "CARTAN_FORMAT",
        default_value = "table"
    )]
    pub format: Format,
    /// Truncation order for series (keeps q^0 … q^N).
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Largest number of partitions a matrix over Par(d) may have.
    #[arg(long, global = true, default_value_t = 1000)]
    pub max_partitions: usize,
    /// Largest number of multipartitions a matrix over M_k(d) may have.
    #[arg(long, global = true, default_value_t = 3000)]
    pub max_multipartitions: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded invariant factors of C_ℓ(n) (with --n) or of a block (with --weight).
    Invariants(InvariantsArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print a matrix or its Smith normal form.
    Matrix(MatrixArgs),
    /// Print a named generating function.
    Series(SeriesArgs),
    /// Regenerate the golden files for the worked examples.
    SeedTables(SeedArgs),
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[arg(long)]
    pub ell: u64,
    #[arg(long, conflicts_with = "weight", required_unless_present = "weight")]
    pub n: Option<usize>,
    #[arg(long, alias = "w")]
    pub weight: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Series,
    Det,
    Snf,
    Splitting,
    Reduction,
    Kor,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub n: Option<usize>,
    /// A single degree.
    #[arg(long, conflicts_with = "dmax")]
    pub d: Option<usize>,
    /// All degrees 0..=dmax.
    #[arg(long)]
    pub dmax: Option<usize>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
    /// Smallest parameter for the series identities.
    #[arg(long, default_value_t = 2)]
    pub lo: usize,
    /// Largest parameter for the series identities.
    #[arg(long, default_value_t = 12)]
    pub hi: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    #[value(name = "X_ell")]
    XEll,
    #[value(name = "X_A")]
    XA,
    #[value(name = "B_ell")]
    BEll,
    #[value(name = "M_pm")]
    MPm,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[arg(value_enum)]
    pub kind: MatrixKind,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub d: usize,
    /// Print the invariant factors instead of the entries.
    #[arg(long)]
    pub snf: bool,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// One of P, P_ℓ, T, T_ℓ, L, L_ℓ, D0_ℓ, C_ℓ, B_ℓ, P^k (e.g. `P_6`, `P^4`).
    pub name: String,
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    /// Directory receiving the golden files.
    #[arg(long, default_value = "crates/cli/tests/golden")]
    pub dir: std::path::PathBuf,
}
