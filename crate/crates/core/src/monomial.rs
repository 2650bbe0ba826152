//! Monomials, term orders within a graded component, and the monomial
//! spaces built on top of them.
//!
//! Variables are `x1 > x2 > ... > xn`. All orders here compare monomials of
//! the same degree only:
//!
//! * `Lex`: compare exponent vectors left to right; the larger first
//!   differing exponent wins.
//! * `RevLex`: `a > b` iff the last nonzero entry of `exp(a) - exp(b)` is
//!   negative.
//! * `DegRevLex`: identical to `RevLex` once degrees agree.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 6]>;

/// A monomial `x1^a1 * ... * xn^an` with its cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u16>) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; n],
            degree: 0,
        }
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(i: usize, n: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// Apply the move `m -> m * x_to / x_from`, if `x_from` divides `m`.
    pub fn shift(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Some(Monomial {
            exps,
            degree: self.degree,
        })
    }

    /// Borel moves upward: `m * x_i / x_j` for `i < j` with `x_j | m`.
    pub fn borel_up(&self) -> impl Iterator<Item = Monomial> + '_ {
        let n = self.arity();
        (0..n).flat_map(move |i| ((i + 1)..n).filter_map(move |j| self.shift(j, i)))
    }

    /// Borel moves downward: `m * x_j / x_i` for `i < j` with `x_i | m`.
    pub fn borel_down(&self) -> impl Iterator<Item = Monomial> + '_ {
        let n = self.arity();
        (0..n).flat_map(move |i| ((i + 1)..n).filter_map(move |j| self.shift(i, j)))
    }

    /// Short rendering with `x, y, z, w` for up to four variables,
    /// e.g. `x^2yz`. Falls back to the canonical format for larger arity.
    pub fn to_xyz(&self) -> String {
        const NAMES: [char; 4] = ['x', 'y', 'z', 'w'];
        if self.arity() > 4 {
            return self.to_string();
        }
        if self.degree == 0 {
            return "1".into();
        }
        let mut s = String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push(NAMES[i]),
                _ => {
                    s.push(NAMES[i]);
                    s.push('^');
                    s.push_str(&e.to_string());
                }
            }
        }
        s
    }

    /// Parse `x1^2*x3`, `1`, or the aliases `x^2 y z` / `x^2yz` where
    /// `x, y, z, w` stand for `x1..x4`.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let err = |msg: &str| Error::Parse(format!("{msg} in monomial {s:?}"));
        let t = s.trim();
        if t == "1" {
            return Ok(Monomial::one(n));
        }
        if t.is_empty() {
            return Err(err("empty input"));
        }
        let chars: Vec<char> = t.chars().collect();
        let mut exps: Exponents = smallvec::smallvec![0; n];
        let mut pos = 0;
        let read_number = |pos: &mut usize| -> Option<u32> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if start == *pos {
                return None;
            }
            chars[start..*pos].iter().collect::<String>().parse().ok()
        };
        while pos < chars.len() {
            let c = chars[pos];
            if c.is_whitespace() || c == '*' {
                pos += 1;
                continue;
            }
            pos += 1;
            let var = match c {
                'x' => match read_number(&mut pos) {
                    Some(k) if k >= 1 => k as usize - 1,
                    Some(_) => return Err(err("variable index must be >= 1")),
                    None => 0,
                },
                'y' => 1,
                'z' => 2,
                'w' => 3,
                _ => return Err(err(&format!("unexpected character {c:?}"))),
            };
            if var >= n {
                return Err(err(&format!("variable index {} exceeds arity {n}", var + 1)));
            }
            let mut e = 1u32;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                e = read_number(&mut pos).ok_or_else(|| err("missing exponent after '^'"))?;
            }
            let total = exps[var] as u32 + e;
            exps[var] = u16::try_from(total).map_err(|_| err("exponent too large"))?;
        }
        Ok(Monomial::new(exps))
    }
}

impl Ord for Monomial {
    /// Lexicographic comparison of exponent vectors. On a fixed degree this
    /// is the `Lex` term order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    /// Panics on arity mismatch; use [`Monomial::checked_mul`] for a fallible
    /// product.
    fn mul(self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.arity(), rhs.arity(), "monomial arity mismatch");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum TermOrder {
    #[default]
    Lex,
    RevLex,
    DegRevLex,
}

impl TermOrder {
    /// Compare two monomials of equal arity and degree. Greater means
    /// "larger in the order".
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch {
                left: a.arity(),
                right: b.arity(),
            });
        }
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch {
                left: a.degree(),
                right: b.degree(),
            });
        }
        Ok(self.cmp_same_degree(a, b))
    }

    pub(crate) fn cmp_same_degree(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::RevLex | TermOrder::DegRevLex => {
                for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                    if x != y {
                        // last nonzero entry of a - b negative => a is larger
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermOrder::Lex => "lex",
            TermOrder::RevLex => "revlex",
            TermOrder::DegRevLex => "degrevlex",
        })
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(TermOrder::Lex),
            "revlex" => Ok(TermOrder::RevLex),
            "degrevlex" | "grevlex" => Ok(TermOrder::DegRevLex),
            _ => Err(Error::Parse(format!("unknown term order {s:?}"))),
        }
    }
}

/// All monomials of degree `d` in `n` variables, largest first under `order`.
pub fn enumerate_monomials(n: usize, d: u32, order: TermOrder) -> Vec<Monomial> {
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut exps: Exponents = smallvec::smallvec![0; n];
    // generating the first exponent from high to low yields Lex-descending output
    fn rec(pos: usize, left: u32, exps: &mut Exponents, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if pos == n - 1 {
            exps[pos] = left as u16;
            out.push(Monomial::new(exps.iter().copied()));
            return;
        }
        for e in (0..=left).rev() {
            exps[pos] = e as u16;
            rec(pos + 1, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    if order != TermOrder::Lex {
        out.sort_by(|a, b| order.cmp_same_degree(b, a));
    }
    out
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Saturating `u128` binomial for size estimates and cap checks.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    binomial(n, k).to_u128().unwrap_or(u128::MAX)
}

/// `dim S_j = C(n-1+j, n-1)`.
pub fn dim_graded_component(n: usize, j: u32) -> BigUint {
    assert!(n >= 1, "need at least one variable");
    binomial(n as u64 - 1 + j as u64, n as u64 - 1)
}

pub fn dim_graded_usize(n: usize, j: u32) -> usize {
    dim_graded_component(n, j)
        .to_usize()
        .expect("graded component too large to index")
}

/// Dense interning of the monomials of one graded component: index 0 is the
/// largest monomial under `order`.
#[derive(Debug, Clone)]
pub struct GradedComponent {
    n: usize,
    d: u32,
    order: TermOrder,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedComponent {
    pub fn new(n: usize, d: u32, order: TermOrder) -> Self {
        let monomials = enumerate_monomials(n, d, order);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        GradedComponent {
            n,
            d,
            order,
            monomials,
            index,
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, rank: usize) -> &Monomial {
        &self.monomials[rank]
    }

    pub fn rank_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// A set of monomials of one common degree; its span has dimension equal to
/// the number of members.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialSpace {
    n: usize,
    d: u32,
    members: BTreeSet<Monomial>,
}

impl MonomialSpace {
    pub fn new(n: usize, d: u32, members: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for m in members {
            if m.arity() != n {
                return Err(Error::ArityMismatch {
                    left: n,
                    right: m.arity(),
                });
            }
            if m.degree() != d {
                return Err(Error::DegreeMismatch {
                    left: d,
                    right: m.degree(),
                });
            }
            set.insert(m);
        }
        Ok(MonomialSpace { n, d, members: set })
    }

    pub(crate) fn from_set_unchecked(n: usize, d: u32, members: BTreeSet<Monomial>) -> Self {
        MonomialSpace { n, d, members }
    }

    /// Parse a comma-separated list of monomials.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let ms = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| Monomial::parse(t, n))
            .collect::<Result<Vec<_>>>()?;
        let d = ms
            .first()
            .map(Monomial::degree)
            .ok_or_else(|| Error::Parse("empty monomial list".into()))?;
        MonomialSpace::new(n, d, ms)
    }

    pub fn full(n: usize, d: u32) -> Self {
        MonomialSpace {
            n,
            d,
            members: enumerate_monomials(n, d, TermOrder::Lex).into_iter().collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.contains(m)
    }

    /// Members in ascending Lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Monomial> {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<Monomial> {
        &self.members
    }

    /// Members sorted largest-first under `order`.
    pub fn sorted(&self, order: TermOrder) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = self.members.iter().cloned().collect();
        v.sort_by(|a, b| order.cmp_same_degree(b, a));
        v
    }

    pub fn is_subset(&self, other: &MonomialSpace) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Canonical text rendering `x1^a*..., ...`, Lex-descending.
    pub fn to_strings(&self) -> Vec<String> {
        self.members.iter().rev().map(|m| m.to_string()).collect()
    }
}

impl fmt::Debug for MonomialSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, m) in self.members.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&m.to_xyz())?;
        }
        f.write_str(">")
    }
}
