//! Classical bounds for the growth of ideals generated by a space of forms:
//! Macaulay expansions and lex segments (minimal growth), the Gotzmann
//! predicate, and the truncated series predicting generic growth.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{random_subspace_with, sample_rng, Caps};
use crate::monomial::{
    binomial, binomial_u128, dim_graded_component, dim_graded_usize, enumerate_monomials,
    MonomialSpace, TermOrder,
};

/// `value = sum C(k_i, i)` over `terms`, with `i` descending from `degree`
/// and `k_degree > k_{degree-1} > ... >= i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayExpansion {
    pub degree: u32,
    pub value: u128,
    /// `(k_i, i)` pairs.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayExpansion {
    /// The Macaulay upper function `a^<d> = sum C(k_i + 1, i + 1)`.
    pub fn successor_bound(&self) -> u128 {
        self.terms
            .iter()
            .map(|&(k, i)| binomial_u128(k + 1, i as u64 + 1))
            .sum()
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.value)?;
        for (idx, (k, i)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C({k},{i})")?;
        }
        Ok(())
    }
}

/// Greedy expansion: take the largest `k` with `C(k, d) <= a` and recurse on
/// the remainder in degree `d - 1`.
pub fn macaulay_expansion(a: u128, d: u32) -> Result<MacaulayExpansion> {
    if a == 0 || d == 0 {
        return Err(Error::OutOfRange {
            what: "Macaulay expansion input",
            value: format!("a={a}, d={d}"),
            allowed: "a >= 1, d >= 1".into(),
        });
    }
    let mut terms = Vec::new();
    let mut rest = a;
    let mut i = d;
    while rest > 0 && i > 0 {
        let k = largest_k(rest, i);
        terms.push((k, i));
        rest -= binomial_u128(k, i as u64);
        i -= 1;
    }
    debug_assert_eq!(rest, 0);
    Ok(MacaulayExpansion {
        degree: d,
        value: a,
        terms,
    })
}

/// Largest `k >= i` with `C(k, i) <= a`, for `a >= 1`.
fn largest_k(a: u128, i: u32) -> u64 {
    let i = i as u64;
    let mut hi = i + 1;
    while binomial_u128(hi, i) <= a {
        hi = i + (hi - i) * 2;
    }
    let mut lo = i; // C(i, i) = 1 <= a
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial_u128(mid, i) <= a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn check_u(n: usize, d: u32, u: usize) -> Result<usize> {
    let total = dim_graded_usize(n, d);
    if u == 0 || u > total {
        return Err(Error::OutOfRange {
            what: "subspace dimension u",
            value: u.to_string(),
            allowed: format!("1..={total}"),
        });
    }
    Ok(total)
}

/// The `u` largest degree-`d` monomials under `Lex`.
pub fn lex_segment(n: usize, d: u32, u: usize) -> Result<MonomialSpace> {
    segment(n, d, u, TermOrder::Lex)
}

/// The `u` largest degree-`d` monomials under `RevLex`.
pub fn revlex_segment(n: usize, d: u32, u: usize) -> Result<MonomialSpace> {
    segment(n, d, u, TermOrder::RevLex)
}

fn segment(n: usize, d: u32, u: usize, order: TermOrder) -> Result<MonomialSpace> {
    check_u(n, d, u)?;
    let mut all = enumerate_monomials(n, d, order);
    all.truncate(u);
    MonomialSpace::new(n, d, all)
}

/// Support of `S_j W` for a monomial space `W`.
pub fn multiply_by_component(w: &MonomialSpace, j: u32) -> MonomialSpace {
    let mults = enumerate_monomials(w.arity(), j, TermOrder::Lex);
    let set: BTreeSet<_> = w
        .iter()
        .flat_map(|m| mults.iter().map(move |t| m * t))
        .collect();
    MonomialSpace::from_set_unchecked(w.arity(), w.degree() + j, set)
}

/// `dim S_j Lex(u, S_d)`, counted from the actual monomial products.
pub fn macaulay_lower_bound(n: usize, d: u32, u: usize, j: u32) -> Result<usize> {
    let lex = lex_segment(n, d, u)?;
    Ok(multiply_by_component(&lex, j).dim())
}

/// The same quantity through Macaulay's upper function: the quotient
/// dimension `h = dim S_d - u` grows as `h -> h^<e>` from degree `e` to
/// `e + 1` for lex ideals.
pub fn macaulay_bound_closed_form(n: usize, d: u32, u: usize, j: u32) -> Result<u128> {
    let total = check_u(n, d, u)? as u128;
    let mut h = total - u as u128;
    for e in d..d + j {
        h = if h == 0 {
            0
        } else {
            macaulay_expansion(h, e)?.successor_bound()
        };
    }
    let dim = binomial_u128(n as u64 - 1 + (d + j) as u64, n as u64 - 1);
    Ok(dim - h)
}

/// `dim S_1 W == dim S_1 Lex(|W|, S_d)`.
pub fn is_gotzmann(w: &MonomialSpace) -> bool {
    if w.is_empty() {
        return true;
    }
    let grown = multiply_by_component(w, 1).dim();
    let lex = lex_segment(w.arity(), w.degree(), w.dim()).expect("|W| is a valid dimension");
    grown == multiply_by_component(&lex, 1).dim()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceStep {
    pub degree: u32,
    pub dimension: usize,
    pub gotzmann: bool,
}

/// The chain `W, S_1 W, S_2 W, ...` with the Gotzmann predicate at each step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceReport {
    pub chain: Vec<PersistenceStep>,
    /// False means the implementation disagrees with the persistence theorem.
    pub all_gotzmann: bool,
}

/// Iterate `W <- S_1 W` `steps` times. The first entry is `W` itself, whose
/// predicate is the precondition.
pub fn gotzmann_persistence_check(w: &MonomialSpace, steps: usize) -> PersistenceReport {
    let mut chain = Vec::with_capacity(steps + 1);
    let mut cur = w.clone();
    for step in 0..=steps {
        chain.push(PersistenceStep {
            degree: cur.degree(),
            dimension: cur.dim(),
            gotzmann: is_gotzmann(&cur),
        });
        if step < steps {
            cur = multiply_by_component(&cur, 1);
        }
    }
    let all_gotzmann = chain.iter().all(|s| s.gotzmann);
    PersistenceReport {
        chain,
        all_gotzmann,
    }
}

/// Coefficients `c_0..c_J` of `[(1 - z^d)^u / (1 - z)^n]_+`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub n: usize,
    pub d: u32,
    pub u: usize,
    pub coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn coefficient(&self, i: usize) -> Option<&BigInt> {
        self.coefficients.get(i)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} z")?,
                _ => write!(f, "{c} z^{i}")?,
            }
        }
        Ok(())
    }
}

/// Untruncated coefficients of `(1 - z^d)^u / (1 - z)^n` through `J`.
fn froberg_raw(n: usize, d: u32, u: usize, big_j: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); big_j + 1];
    for k in 0..=u {
        let shift = k * d as usize;
        if shift > big_j {
            break;
        }
        let mut c = BigInt::from(binomial(u as u64, k as u64));
        if k % 2 == 1 {
            c = -c;
        }
        for (i, slot) in out.iter_mut().enumerate().skip(shift) {
            let tail = (i - shift) as u64;
            *slot += &c * BigInt::from(binomial(tail + n as u64 - 1, n as u64 - 1));
        }
    }
    out
}

pub fn froberg_series(n: usize, d: u32, u: usize, big_j: usize) -> TruncatedSeries {
    assert!(n >= 1 && d >= 1, "need n >= 1 and d >= 1");
    let mut coefficients = froberg_raw(n, d, u, big_j);
    if let Some(first_neg) = coefficients.iter().position(Signed::is_negative) {
        for c in &mut coefficients[first_neg..] {
            *c = BigInt::zero();
        }
    }
    TruncatedSeries {
        n,
        d,
        u,
        coefficients,
    }
}

/// Predicted `dim S_j W` for generic `W`: `dim S_{d+j} - c_{d+j}`.
pub fn froberg_prediction(n: usize, d: u32, u: usize, j: u32) -> BigInt {
    let deg = (d + j) as usize;
    let series = froberg_series(n, d, u, deg);
    BigInt::from(dim_graded_component(n, d + j)) - &series.coefficients[deg]
}

/// Largest `dim S_j V` over `samples` random `V in G(u, S_d)`; sample `i`
/// draws from stream `i` of `seed`.
#[allow(clippy::too_many_arguments)]
pub fn sampled_generic_growth(
    field: &PrimeField,
    n: usize,
    d: u32,
    u: usize,
    j: u32,
    samples: usize,
    seed: u64,
    caps: &Caps,
) -> Result<usize> {
    (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let v = random_subspace_with(field, n, d, u, TermOrder::Lex, &mut sample_rng(seed, i))?;
            v.ideal_growth_dimension(j, caps)
        })
        .try_reduce(|| 0, |a, b| Ok(a.max(b)))
}
