//! Strongly stable (Borel) monomial spaces.
//!
//! The Borel moves on degree-`d` monomials are `m -> m * x_i / x_j` with
//! `i < j` and `x_j | m`. A monomial space is strongly stable when it is
//! closed under these moves. Lex order is a linear extension of the move
//! order, which the enumerator relies on.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::rank;
use crate::monomial::{enumerate_monomials, Monomial, MonomialSpace, TermOrder};

/// A strongly stable space together with its minimal Borel generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StableSpace {
    space: MonomialSpace,
    generators: Vec<Monomial>,
}

impl StableSpace {
    /// Wrap an up-closed monomial space; `None` if it is not strongly stable.
    pub fn from_space(space: MonomialSpace) -> Option<Self> {
        if !is_strongly_stable(&space) {
            return None;
        }
        let generators = borel_generators(&space);
        Some(StableSpace { space, generators })
    }

    pub fn space(&self) -> &MonomialSpace {
        &self.space
    }

    /// Minimal generators, largest first under Lex.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `St{...}` rendering with short variable names.
    pub fn label(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(Monomial::to_xyz).collect();
        format!("St{{{}}}", gens.join(", "))
    }

    pub fn to_record(&self) -> StableSpaceRecord {
        StableSpaceRecord {
            n: self.space.arity(),
            d: self.space.degree(),
            generators: self.generators.iter().map(ToString::to_string).collect(),
            members: self.space.to_strings(),
        }
    }
}

impl fmt::Debug for StableSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {:?}", self.label(), self.space)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSpaceRecord {
    pub n: usize,
    pub d: u32,
    pub generators: Vec<String>,
    pub members: Vec<String>,
}

/// Members of `w` not reachable by a Borel move from another member.
pub fn borel_generators(w: &MonomialSpace) -> Vec<Monomial> {
    let mut gens: Vec<Monomial> = w
        .iter()
        .filter(|m| m.borel_down().all(|lower| !w.contains(&lower)))
        .cloned()
        .collect();
    gens.sort_by(|a, b| b.cmp(a));
    gens
}

/// The smallest strongly stable space containing `generators`.
pub fn borel_closure(generators: &[Monomial]) -> Result<StableSpace> {
    let first = generators.first().ok_or(Error::OutOfRange {
        what: "generator list",
        value: "empty".into(),
        allowed: "at least one monomial".into(),
    })?;
    let (n, d) = (first.arity(), first.degree());
    for g in generators {
        if g.arity() != n {
            return Err(Error::ArityMismatch {
                left: n,
                right: g.arity(),
            });
        }
        if g.degree() != d {
            return Err(Error::DegreeMismatch {
                left: d,
                right: g.degree(),
            });
        }
    }
    let mut seen: HashSet<Monomial> = generators.iter().cloned().collect();
    let mut queue: VecDeque<Monomial> = generators.iter().cloned().collect();
    while let Some(m) = queue.pop_front() {
        for up in m.borel_up() {
            if seen.insert(up.clone()) {
                queue.push_back(up);
            }
        }
    }
    let space = MonomialSpace::new(n, d, seen)?;
    let generators = borel_generators(&space);
    Ok(StableSpace { space, generators })
}

pub fn is_strongly_stable(w: &MonomialSpace) -> bool {
    w.iter().all(|m| m.borel_up().all(|up| w.contains(&up)))
}

/// Every strongly stable `u`-dimensional subspace of `S_d`, ordered by their
/// Lex-sorted generator lists.
pub fn enumerate_stable(n: usize, d: u32, u: usize, max_spaces: usize) -> Result<Vec<StableSpace>> {
    let elems = enumerate_monomials(n, d, TermOrder::Lex);
    let total = elems.len();
    if u == 0 || u > total {
        return Err(Error::OutOfRange {
            what: "subspace dimension u",
            value: u.to_string(),
            allowed: format!("1..={total}"),
        });
    }
    let index: std::collections::HashMap<&Monomial, usize> =
        elems.iter().enumerate().map(|(i, m)| (m, i)).collect();
    // every upward move lands on a strictly smaller Lex index
    let ups: Vec<Vec<usize>> = elems
        .iter()
        .map(|m| m.borel_up().map(|up| index[&up]).collect())
        .collect();

    struct Search<'a> {
        ups: &'a [Vec<usize>],
        u: usize,
        included: Vec<bool>,
        found: Vec<Vec<usize>>,
        max_spaces: usize,
    }

    impl Search<'_> {
        fn run(&mut self, idx: usize, count: usize) -> Result<()> {
            if count == self.u {
                if self.found.len() == self.max_spaces {
                    return Err(Error::SizeCap {
                        what: "strongly stable enumeration",
                        requested: self.max_spaces as u128 + 1,
                        cap: self.max_spaces as u128,
                    });
                }
                let members = (0..idx).filter(|&i| self.included[i]).collect();
                self.found.push(members);
                return Ok(());
            }
            let n = self.included.len();
            if idx == n || count + (n - idx) < self.u {
                return Ok(());
            }
            if self.ups[idx].iter().all(|&k| self.included[k]) {
                self.included[idx] = true;
                self.run(idx + 1, count + 1)?;
                self.included[idx] = false;
            }
            self.run(idx + 1, count)
        }
    }

    let mut search = Search {
        ups: &ups,
        u,
        included: vec![false; total],
        found: Vec::new(),
        max_spaces,
    };
    search.run(0, 0)?;

    let mut spaces: Vec<StableSpace> = search
        .found
        .into_iter()
        .map(|members| {
            let space = MonomialSpace::new(n, d, members.into_iter().map(|i| elems[i].clone()))
                .expect("members share degree and arity");
            let generators = borel_generators(&space);
            StableSpace { space, generators }
        })
        .collect();
    spaces.sort_by(|a, b| a.generators.cmp(&b.generators));
    Ok(spaces)
}

/// Grow a random strongly stable space one addable monomial at a time.
pub fn random_stable_space(n: usize, d: u32, u: usize, rng: &mut impl Rng) -> Result<StableSpace> {
    let elems = enumerate_monomials(n, d, TermOrder::Lex);
    if u == 0 || u > elems.len() {
        return Err(Error::OutOfRange {
            what: "subspace dimension u",
            value: u.to_string(),
            allowed: format!("1..={}", elems.len()),
        });
    }
    let mut members: HashSet<Monomial> = HashSet::with_capacity(u);
    while members.len() < u {
        let addable: Vec<&Monomial> = elems
            .iter()
            .filter(|m| !members.contains(*m) && m.borel_up().all(|up| members.contains(&up)))
            .collect();
        let pick = addable[rng.gen_range(0..addable.len())].clone();
        members.insert(pick);
    }
    let space = MonomialSpace::new(n, d, members)?;
    let generators = borel_generators(&space);
    Ok(StableSpace { space, generators })
}

fn sumset_step(prev: &HashSet<Monomial>, w: &MonomialSpace, cap: usize) -> Result<HashSet<Monomial>> {
    let mut next = HashSet::with_capacity(prev.len() * 2);
    for a in prev {
        for b in w.iter() {
            next.insert(a * b);
        }
        if next.len() > cap {
            return Err(Error::SizeCap {
                what: "monomial sumset",
                requested: next.len() as u128,
                cap: cap as u128,
            });
        }
    }
    Ok(next)
}

/// Support of `W^j` for a monomial space: the `j`-fold sumset of exponent
/// vectors.
pub fn monomial_power_support(w: &MonomialSpace, j: u32, cap: usize) -> Result<MonomialSpace> {
    if j == 0 {
        return Err(Error::OutOfRange {
            what: "power exponent j",
            value: "0".into(),
            allowed: ">= 1".into(),
        });
    }
    let mut cur: HashSet<Monomial> = w.iter().cloned().collect();
    for _ in 1..j {
        cur = sumset_step(&cur, w, cap)?;
    }
    MonomialSpace::new(w.arity(), w.degree() * j, cur)
}

/// `dim W^j` for `j = 0..=jmax`, with `dim W^0 = 1`.
pub fn power_hilbert_function(w: &MonomialSpace, jmax: u32, cap: usize) -> Result<Vec<u64>> {
    let mut out = vec![1u64];
    if jmax == 0 || w.is_empty() {
        out.resize(jmax as usize + 1, if w.is_empty() { 0 } else { 1 });
        out[0] = 1;
        return Ok(out);
    }
    let mut cur: HashSet<Monomial> = w.iter().cloned().collect();
    out.push(cur.len() as u64);
    for _ in 2..=jmax {
        cur = sumset_step(&cur, w, cap)?;
        out.push(cur.len() as u64);
    }
    Ok(out)
}

/// Rank of the exponent matrix: the Krull dimension of `K[W]`.
pub fn krull_dimension(w: &MonomialSpace) -> usize {
    let q = Rationals;
    let rows: Vec<Vec<_>> = w
        .iter()
        .map(|m| m.exponents().iter().map(|&e| q.from_i64(e as i64)).collect())
        .collect();
    rank(&q, &rows)
}

/// `h(z) / (1 - z)^D`, fitted against computed values through `fitted_through`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalHilbertSeries {
    pub numerator: Vec<i64>,
    pub denom_power: usize,
    pub fitted_through: usize,
}

impl RationalHilbertSeries {
    /// Coefficients of the series through degree `upto`.
    pub fn expand(&self, upto: usize) -> Vec<i64> {
        let mut c = vec![0i64; upto + 1];
        for (i, &h) in self.numerator.iter().enumerate().take(upto + 1) {
            c[i] = h;
        }
        for _ in 0..self.denom_power {
            for i in 1..=upto {
                c[i] += c[i - 1];
            }
        }
        c
    }
}

impl fmt::Display for RationalHilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}z"),
                _ => format!("{coef}z^{i}"),
            });
        }
        let mut num = terms.join(" + ").replace("+ -", "- ");
        if terms.len() > 1 && self.denom_power > 0 {
            num = format!("({num})");
        }
        match self.denom_power {
            0 => write!(f, "{num}"),
            1 => write!(f, "{num}/(1-z)"),
            p => write!(f, "{num}/(1-z)^{p}"),
        }
    }
}

const SERIES_DEGREE_LIMIT: usize = 256;

/// Fit `sum dim W^j z^j = h(z) / (1 - z)^D` with `D` the Krull dimension.
/// Accepted once `h` has at least `D + 1` confirmed zero coefficients past its
/// degree; `jmax` is raised internally when that fails.
pub fn fit_hilbert_series(w: &MonomialSpace, jmax: usize, cap: usize) -> Result<RationalHilbertSeries> {
    let dim = krull_dimension(w);
    if jmax < dim + 2 {
        return Err(Error::OutOfRange {
            what: "fitting degree jmax",
            value: jmax.to_string(),
            allowed: format!(">= {}", dim + 2),
        });
    }
    let mut big_j = jmax;
    loop {
        let hf = power_hilbert_function(w, big_j as u32, cap)?;
        let mut h: Vec<i64> = hf.iter().map(|&x| x as i64).collect();
        for _ in 0..dim {
            for i in (1..=big_j).rev() {
                h[i] -= h[i - 1];
            }
        }
        let deg = h.iter().rposition(|&c| c != 0).unwrap_or(0);
        if big_j - deg > dim {
            h.truncate(deg + 1);
            return Ok(RationalHilbertSeries {
                numerator: h,
                denom_power: dim,
                fitted_through: big_j,
            });
        }
        if big_j >= SERIES_DEGREE_LIMIT {
            return Err(Error::NotStabilized(big_j));
        }
        big_j = (big_j * 2).min(SERIES_DEGREE_LIMIT);
    }
}
