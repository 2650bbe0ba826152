//! Command-line grammar.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use macfrob_core::FieldSpec;

use crate::config::Threads;

#[derive(Debug, Parser)]
#[command(
    name = "macfrob",
    version,
    about = "Hilbert functions of subalgebras generated by degree-d forms",
    propagate_version = true
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default)]
pub struct GlobalOpts {
    /// Coefficient field: a prime p (default 32003) or Q
    #[arg(long, global = true, value_name = "p|Q")]
    pub field: Option<FieldSpec>,
    /// Random subspaces per sampled quantity (default 50)
    #[arg(long, global = true, value_name = "k")]
    pub samples: Option<usize>,
    /// Base seed; sample i uses stream i of this seed
    #[arg(long, global = true, value_name = "s")]
    pub seed: Option<u64>,
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long, global = true)]
    pub csv: bool,
    /// Largest dense matrix, in cells
    #[arg(long = "cap-matrix-cells", global = true, value_name = "N")]
    pub cap_matrix_cells: Option<u128>,
    /// Largest number of strongly stable spaces an enumeration may return
    #[arg(long = "cap-enum-spaces", global = true, value_name = "N")]
    pub cap_enum_spaces: Option<usize>,
    /// Largest monomial sumset
    #[arg(long = "cap-sumset-size", global = true, value_name = "N")]
    pub cap_sumset_size: Option<usize>,
    /// Worker threads, or auto; falls back to MACFROB_THREADS
    #[arg(long, global = true, value_name = "N|auto")]
    pub threads: Option<Threads>,
    /// Start from the config of a saved JSON report (or a bare config file)
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

/// Inclusive range written `a..b`, `a..=b` or `a`.
pub fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>, String>
where
    T: std::str::FromStr + PartialOrd + Copy,
{
    let num = |t: &str| {
        t.trim()
            .parse::<T>()
            .map_err(|_| format!("bad range {s:?}; expected a..b or a single value"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn parse_u32_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    parse_range(s)
}

fn parse_usize_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    parse_range(s)
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Ndu {
    /// Number of variables
    pub n: usize,
    /// Degree of the generating forms
    pub d: u32,
    /// Dimension of the subspace
    pub u: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all strongly stable spaces in G(u, S_d)
    Stable(Ndu),
    /// Exact minimum of dim V^j, by exhaustive stable search
    #[command(name = "L")]
    L {
        #[command(flatten)]
        ndu: Ndu,
        #[arg(long, default_value = "1", value_parser = parse_u32_range)]
        j: RangeInclusive<u32>,
        /// Minimize over random stable spaces instead (an upper bound on L)
        #[arg(long)]
        sampled: bool,
    },
    /// Sampled maximum of dim V^j (a lower bound on M)
    #[command(name = "M")]
    M {
        #[command(flatten)]
        ndu: Ndu,
        #[arg(long, default_value = "2", value_parser = parse_u32_range)]
        j: RangeInclusive<u32>,
        /// Also sample small-integer subspaces exactly over the rationals
        #[arg(long = "recheck-q")]
        recheck_q: bool,
    },
    /// Hilbert function and series of K[W] for a monomial space W
    Hilbert {
        /// Number of variables
        n: usize,
        /// Monomials `x^2z^3, xy^3z`, or `St{...}` for a Borel closure
        space: Option<String>,
        /// Read the space from a file (same syntax, or JSON with members/generators)
        #[arg(long, conflicts_with = "space")]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        jmax: u32,
    },
    /// Ideal growth: segments, Macaulay bound, Gotzmann, Froberg
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// The eight-quadrics construction in four variables
    #[command(subcommand)]
    Quadrics(QuadricsCmd),
    /// Do minimizers of dim W^2 stay minimal for larger j?
    ProbePersistence {
        #[command(flatten)]
        ndu: Ndu,
        #[arg(long, default_value_t = 5)]
        jmax: u32,
    },
    /// Look for u >= 2n where sampling stays below the naive bound
    Scan {
        #[arg(long, default_value = "3..4", value_parser = parse_usize_range)]
        n: RangeInclusive<usize>,
        #[arg(long, default_value = "2", value_parser = parse_u32_range)]
        d: RangeInclusive<u32>,
        #[arg(long, default_value_t = 2)]
        j: u32,
    },
    /// Recompute every worked example and report pass/fail
    VerifyPaper,
}

#[derive(Debug, Subcommand)]
pub enum IdealCmd {
    /// The u largest monomials under Lex
    Lex(Ndu),
    /// The u largest monomials under RevLex
    Revlex(Ndu),
    /// dim S_j Lex(u, S_d), the minimal growth of a u-dimensional space
    MacaulayBound {
        #[command(flatten)]
        ndu: Ndu,
        j: u32,
    },
    /// Gotzmann test and persistence chain for a monomial space
    Gotzmann {
        n: usize,
        space: String,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
    /// Coefficients of [(1-z^d)^u / (1-z)^n]_+ up to z^J
    Froberg {
        #[command(flatten)]
        ndu: Ndu,
        #[arg(long = "J", default_value_t = 10)]
        big_j: usize,
    },
    /// Predicted dim S_j V for generic V, against sampling
    Predict {
        #[command(flatten)]
        ndu: Ndu,
        #[arg(long, default_value = "1", value_parser = parse_u32_range)]
        j: RangeInclusive<u32>,
    },
}

#[derive(Debug, Args, Clone, Default)]
pub struct QuadricArgs {
    /// Coefficients of F = sum a_i x_i^2, comma-separated
    #[arg(long, allow_hyphen_values = true, requires = "b", conflicts_with = "alpha")]
    pub a: Option<String>,
    /// Coefficients of G = sum b_i x_i^2, comma-separated
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    pub b: Option<String>,
    /// Use F = x1^2+x3^2+x4^2, G = x2^2+alpha x3^2+x4^2 (the default, alpha = 2)
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum QuadricsCmd {
    /// Build W and compute dim W^2
    Build(QuadricArgs),
    /// Evaluate the two coefficient conditions; exit 1 unless both hold
    Check(QuadricArgs),
}
