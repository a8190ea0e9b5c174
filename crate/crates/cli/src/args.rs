use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Pole sets, Baxter polynomials and cyclicity criteria for Yangian modules.
///
/// Nodes are numbered from 1 in Bourbaki order. Spectral parameters are
/// exact rationals in units of ℏ, written like `3`, `-1/2`.
#[derive(Parser, Debug)]
#[command(name = "yp", version)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Lie type family, one of A..G.
    #[arg(long = "type", value_name = "FAMILY")]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan matrix, symmetrizers, 2κ, h∨ and the involution i ↦ i*.
    Cartan(TypeArgs),
    /// B(q), C(q) and the v-windows of every pair of nodes.
    Qcartan(TypeArgs),
    /// Roots of the Baxter polynomial Q_{i,V}(u) for V = L_ϖj or L(P).
    Baxter {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        i: usize,
        /// Fundamental module L_ϖj(0).
        #[arg(long, conflicts_with = "drinfeld", required_unless_present = "drinfeld")]
        j: Option<usize>,
        /// Drinfeld tuple as JSON.
        #[arg(long)]
        drinfeld: Option<PathBuf>,
    },
    /// σ_i(L_ϖj), or σ(L_ϖj) when --i is omitted.
    Poles {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: usize,
    },
    /// σ_i(L(P)) of an irreducible module, or σ(L(P)) without --node.
    Sigma {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        drinfeld: PathBuf,
        #[arg(long)]
        node: Option<usize>,
    },
    /// Pole set and Baxter polynomial of the Kirillov–Reshetikhin module L_{ℓϖj}.
    Kr {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 1)]
        l: u32,
    },
    /// Sufficient test for L(P) ⊗ L(Q) to be highest weight (exit 3 when inconclusive).
    Cyclic(PairArgs),
    /// Sufficient test for L(P) ⊗ L(Q) ≅ L(PQ) (exit 3 when inconclusive).
    Irreducible(PairArgs),
    /// Whether L(P) extends to the Yangian double (exit 3 when it does not).
    DoubleAdmissible {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long = "P", value_name = "FILE")]
        p: PathBuf,
    },
    /// Explicit fundamental representations of Y(sl_n).
    Slnrep {
        #[command(subcommand)]
        action: SlnAction,
    },
    /// Tensor products of sl_2 evaluation modules L_r(a).
    Sl2 {
        /// A factor `r:a`, repeatable; factors are tensored left to right.
        #[arg(long = "factor", value_name = "R:A", required = true)]
        factors: Vec<String>,
        /// Also check the defining relations up to this degree.
        #[arg(long, value_name = "R")]
        verify: Option<usize>,
    },
    /// Coxeter-element checks in simply-laced types.
    Coxeter {
        #[command(subcommand)]
        action: CoxeterAction,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Run only the listed criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long = "P", value_name = "FILE")]
    pub p: PathBuf,
    #[arg(long = "Q", value_name = "FILE")]
    pub q: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum SlnAction {
    /// Build L_ϖm(a) of Y(sl_n) and print its currents.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        a: String,
        /// Check the defining relations up to this degree.
        #[arg(long, value_name = "R")]
        verify: Option<usize>,
        /// Print a maximal chain and the Baxter polynomials it gives.
        #[arg(long)]
        chain: bool,
        /// Print the poles of the node-i currents.
        #[arg(long, value_name = "I")]
        poles: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CoxeterAction {
    /// Compare the Coxeter formula for v_ij^(r) with the q-Cartan matrix.
    Verify(TypeArgs),
}
