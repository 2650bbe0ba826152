//! Extremal Hilbert functions of subalgebras `K[V]`, `V in G(u, S_d)`.
//!
//! `L(n,d,u,j)` is found exactly by scanning every strongly stable space.
//! `M(n,d,u,j)` is only ever sampled: the observed maximum is a lower bound
//! on `M` over the chosen field, compared against
//! `min{dim S_jd, C(u-1+j, u-1)}`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField};
use crate::linalg::{random_rational_subspace, random_subspace_with, rank, sample_rng, Caps, Form, Subspace};
use crate::monomial::{binomial_u128, dim_graded_usize, Monomial, TermOrder};
use crate::stable::{enumerate_stable, power_hilbert_function, random_stable_space, StableSpace, StableSpaceRecord};

/// Exhaustive enumeration is refused above this many monomials in `S_d`.
pub const MAX_ENUMERATION_MONOMIALS: u128 = 28;

/// All strongly stable spaces for `(n, d, u)` with their Hilbert functions
/// `H(0..=jmax)`.
#[derive(Debug, Clone)]
pub struct StableCatalog {
    pub n: usize,
    pub d: u32,
    pub u: usize,
    pub spaces: Vec<StableSpace>,
    pub hilbert: Vec<Vec<u64>>,
}

impl StableCatalog {
    pub fn build(n: usize, d: u32, u: usize, jmax: u32, caps: &Caps) -> Result<Self> {
        let monomials = binomial_u128(n as u64 - 1 + d as u64, n as u64 - 1);
        if monomials > MAX_ENUMERATION_MONOMIALS {
            return Err(Error::EnumerationInfeasible {
                d,
                monomials,
                limit: MAX_ENUMERATION_MONOMIALS,
            });
        }
        let spaces = enumerate_stable(n, d, u, caps.enum_spaces)?;
        let hilbert = spaces
            .par_iter()
            .map(|s| power_hilbert_function(s.space(), jmax, caps.sumset_size))
            .collect::<Result<Vec<_>>>()?;
        Ok(StableCatalog {
            n,
            d,
            u,
            spaces,
            hilbert,
        })
    }

    pub fn jmax(&self) -> u32 {
        self.hilbert.first().map_or(0, |h| h.len() as u32 - 1)
    }

    /// Minimum of `dim W^j` and the indices attaining it.
    pub fn minimum(&self, j: u32) -> (u64, Vec<usize>) {
        let j = j as usize;
        let value = self.hilbert.iter().map(|h| h[j]).min().expect("catalog is never empty");
        let at = (0..self.spaces.len()).filter(|&i| self.hilbert[i][j] == value).collect();
        (value, at)
    }

    pub fn l_result(&self, j: u32) -> LResult {
        let (value, at) = self.minimum(j);
        LResult {
            n: self.n,
            d: self.d,
            u: self.u,
            j,
            value,
            minimizer_ids: at.clone(),
            minimizers: at.into_iter().map(|i| self.spaces[i].clone()).collect(),
        }
    }
}

/// `L(n,d,u,j)` with every strongly stable space attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LResult {
    pub n: usize,
    pub d: u32,
    pub u: usize,
    pub j: u32,
    pub value: u64,
    /// Positions in the canonical enumeration order.
    pub minimizer_ids: Vec<usize>,
    pub minimizers: Vec<StableSpace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LRecord {
    pub n: usize,
    pub d: u32,
    pub u: usize,
    pub j: u32,
    pub value: u64,
    pub minimizer_ids: Vec<usize>,
    pub minimizers: Vec<StableSpaceRecord>,
}

impl LResult {
    pub fn to_record(&self) -> LRecord {
        LRecord {
            n: self.n,
            d: self.d,
            u: self.u,
            j: self.j,
            value: self.value,
            minimizer_ids: self.minimizer_ids.clone(),
            minimizers: self.minimizers.iter().map(StableSpace::to_record).collect(),
        }
    }
}

pub fn lower_bound_l(n: usize, d: u32, u: usize, j: u32, caps: &Caps) -> Result<LResult> {
    if j == 0 {
        return Err(Error::OutOfRange {
            what: "power exponent j",
            value: "0".into(),
            allowed: ">= 1".into(),
        });
    }
    Ok(StableCatalog::build(n, d, u, j, caps)?.l_result(j))
}

/// Smallest `dim W^j` over randomly grown strongly stable spaces. An upper
/// bound on `L`, for sizes where enumeration is refused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampledL {
    pub upper_bound: u64,
    pub witness: StableSpaceRecord,
    pub witness_index: u64,
    pub samples: usize,
    pub seed: u64,
}

pub fn sample_l_upper(
    n: usize,
    d: u32,
    u: usize,
    j: u32,
    samples: usize,
    seed: u64,
    caps: &Caps,
) -> Result<SampledL> {
    if samples == 0 || j == 0 {
        return Err(Error::OutOfRange {
            what: "samples and j",
            value: format!("samples={samples}, j={j}"),
            allowed: ">= 1 each".into(),
        });
    }
    let best = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let s = random_stable_space(n, d, u, &mut sample_rng(seed, i))?;
            let h = power_hilbert_function(s.space(), j, caps.sumset_size)?;
            Ok((h[j as usize], i, s))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min_by_key(|(v, i, _)| (*v, *i))
        .expect("at least one sample");
    Ok(SampledL {
        upper_bound: best.0,
        witness: best.2.to_record(),
        witness_index: best.1,
        samples,
        seed,
    })
}

/// `min{dim S_jd, C(u-1+j, u-1)}`.
pub fn naive_upper(n: usize, d: u32, u: usize, j: u32) -> u128 {
    let ambient = binomial_u128(n as u64 - 1 + (j * d) as u64, n as u64 - 1);
    let products = binomial_u128(u as u64 - 1 + j as u64, u as u64 - 1);
    ambient.min(products)
}

/// Proven upper bounds on `M` that are below the naive bound.
pub fn proven_cap(n: usize, d: u32, u: usize, j: u32) -> Option<u128> {
    match (n, d, u, j) {
        (4, 2, 8, 2) => Some(34),
        _ => None,
    }
}

/// Sampled lower bound on `M(n,d,u,j)` over one prime field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MResult {
    pub n: usize,
    pub d: u32,
    pub u: usize,
    pub j: u32,
    pub field: FieldSpec,
    pub samples: usize,
    pub seed: u64,
    pub observed_max: usize,
    /// Sample stream index that first attained `observed_max`.
    pub witness_index: u64,
    pub naive_bound: u128,
    pub proven_cap: Option<u128>,
}

impl MResult {
    pub fn below_naive(&self) -> bool {
        (self.observed_max as u128) < self.naive_bound
    }
}

#[allow(clippy::too_many_arguments)]
fn sample_power_dimension(
    field: &PrimeField,
    n: usize,
    d: u32,
    u: usize,
    j: u32,
    seed: u64,
    index: u64,
    caps: &Caps,
) -> Result<usize> {
    let v = random_subspace_with(field, n, d, u, TermOrder::Lex, &mut sample_rng(seed, index))?;
    v.power_dimension(j, caps)
}

#[allow(clippy::too_many_arguments)]
pub fn sample_m(
    field: &PrimeField,
    n: usize,
    d: u32,
    u: usize,
    j: u32,
    samples: usize,
    seed: u64,
    caps: &Caps,
) -> Result<MResult> {
    if samples == 0 {
        return Err(Error::OutOfRange {
            what: "sample count",
            value: "0".into(),
            allowed: ">= 1".into(),
        });
    }
    let dims = (0..samples as u64)
        .into_par_iter()
        .map(|i| sample_power_dimension(field, n, d, u, j, seed, i, caps))
        .collect::<Result<Vec<_>>>()?;
    let observed_max = *dims.iter().max().expect("samples >= 1");
    let witness_index = dims.iter().position(|&x| x == observed_max).expect("max exists") as u64;
    Ok(MResult {
        n,
        d,
        u,
        j,
        field: field.spec(),
        samples,
        seed,
        observed_max,
        witness_index,
        naive_bound: naive_upper(n, d, u, j),
        proven_cap: proven_cap(n, d, u, j),
    })
}

/// Recompute the witness sample of an `MResult`.
pub fn replay_m_witness(result: &MResult, caps: &Caps) -> Result<usize> {
    let field = result.field.prime_field()?;
    sample_power_dimension(
        &field,
        result.n,
        result.d,
        result.u,
        result.j,
        result.seed,
        result.witness_index,
        caps,
    )
}

/// Largest `dim V^j` over `samples` random subspaces with coefficients in
/// `-9..=9`, computed exactly over the rationals.
pub fn sample_m_rational(
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
            let v = random_rational_subspace(n, d, u, 9, TermOrder::Lex, &mut sample_rng(seed, i))?;
            v.power_dimension(j, caps)
        })
        .try_reduce(|| 0, |a, b| Ok(a.max(b)))
}

/// Second prime used to recheck scan candidates.
pub const RECHECK_PRIME: u64 = 1_000_003;

/// Product matrices above this many cells are not rechecked over the
/// rationals, where entries grow.
pub const RATIONAL_RECHECK_CELLS: u128 = 250_000;

/// A case `u >= 2n` where sampling stayed below the naive bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCandidate {
    pub result: MResult,
    /// Sampled max over `GF(RECHECK_PRIME)`.
    pub recheck_prime: usize,
    /// Sampled max over the rationals, when the instance is small enough.
    pub recheck_rationals: Option<usize>,
    /// Always true: sampling cannot certify a gap.
    pub conjectural: bool,
}

/// Sample `M` for every `u >= 2n` with `n in ns`, `d in ds` and report the
/// cases that never reached the naive bound, rechecked over a second prime
/// and the rationals.
pub fn scan_naive_gaps(
    field: &PrimeField,
    ns: std::ops::RangeInclusive<usize>,
    ds: std::ops::RangeInclusive<u32>,
    j: u32,
    samples: usize,
    seed: u64,
    caps: &Caps,
) -> Result<Vec<GapCandidate>> {
    let second = PrimeField::new(RECHECK_PRIME)?;
    let mut out = Vec::new();
    for n in ns {
        for d in ds.clone() {
            let total = dim_graded_usize(n, d);
            for u in (2 * n)..=total {
                let r = sample_m(field, n, d, u, j, samples, seed, caps)?;
                if !r.below_naive() {
                    continue;
                }
                let recheck_prime = sample_m(&second, n, d, u, j, samples, seed, caps)?.observed_max;
                let cells = binomial_u128(u as u64 - 1 + j as u64, j as u64)
                    * binomial_u128(n as u64 - 1 + (j * d) as u64, n as u64 - 1);
                let recheck_rationals = if cells <= RATIONAL_RECHECK_CELLS {
                    Some(sample_m_rational(n, d, u, j, samples.min(5), seed, caps)?)
                } else {
                    None
                };
                out.push(GapCandidate {
                    result: r,
                    recheck_prime,
                    recheck_rationals,
                    conjectural: true,
                });
            }
        }
    }
    Ok(out)
}

/// Coefficients of `F = sum a_i x_i^2` and `G = sum b_i x_i^2` in four
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricPairParams<E> {
    pub a: [E; 4],
    pub b: [E; 4],
}

impl<E: Clone> QuadricPairParams<E> {
    pub fn new(a: [E; 4], b: [E; 4]) -> Self {
        QuadricPairParams { a, b }
    }
}

/// `F = x1^2 + x3^2 + x4^2`, `G = x2^2 + alpha x3^2 + x4^2`.
pub fn alpha_family<F: Field>(field: &F, alpha: F::Elem) -> QuadricPairParams<F::Elem> {
    let (zero, one) = (field.zero(), field.one());
    QuadricPairParams {
        a: [one.clone(), zero.clone(), one.clone(), one.clone()],
        b: [zero, one.clone(), alpha, one],
    }
}

fn square(i: usize) -> Monomial {
    let mut e = [0u16; 4];
    e[i] = 2;
    Monomial::new(e)
}

/// `W = <x_i x_j : i < j> + <F, G>`. Degenerate parameters give `u < 8`.
pub fn build_eight_quadrics<F: Field>(field: &F, params: &QuadricPairParams<F::Elem>) -> Subspace<F> {
    let mut forms: Vec<Form<F>> = Vec::with_capacity(8);
    for i in 0..4 {
        for k in (i + 1)..4 {
            let m = &Monomial::var(i, 4) * &Monomial::var(k, 4);
            forms.push(vec![(m, field.one())]);
        }
    }
    for coeffs in [&params.a, &params.b] {
        forms.push(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !field.is_zero(c))
                .map(|(i, c)| (square(i), c.clone()))
                .collect(),
        );
    }
    Subspace::from_sparse(field.clone(), 4, 2, TermOrder::Lex, &forms)
        .expect("quadrics in four variables")
}

/// All six minors `a_i b_k - a_k b_i` are nonzero.
pub fn check_condition1<F: Field>(field: &F, params: &QuadricPairParams<F::Elem>) -> bool {
    let (a, b) = (&params.a, &params.b);
    (0..4).all(|i| {
        ((i + 1)..4).all(|k| {
            let minor = field.sub(&field.mul(&a[i], &b[k]), &field.mul(&a[k], &b[i]));
            !field.is_zero(&minor)
        })
    })
}

/// The rows `(a_i^2)`, `(b_i^2)`, `(a_i b_i)` are independent.
pub fn check_condition2<F: Field>(field: &F, params: &QuadricPairParams<F::Elem>) -> bool {
    let (a, b) = (&params.a, &params.b);
    let rows = vec![
        a.iter().map(|x| field.mul(x, x)).collect::<Vec<_>>(),
        b.iter().map(|x| field.mul(x, x)).collect(),
        a.iter().zip(b.iter()).map(|(x, y)| field.mul(x, y)).collect(),
    ];
    rank(field, &rows) == 3
}

/// Eight quadrics over `GF(2)` with `dim W^2 = 34`:
/// `x1^2, x2^2, x3^2, x1x3, x2x4, x3x4, x2x3 + x1x4, x1x2 + x4^2`.
pub fn gf2_witness() -> Subspace<PrimeField> {
    let f = PrimeField::new(2).expect("2 is prime");
    let forms: Vec<Form<PrimeField>> = [
        "x1^2",
        "x2^2",
        "x3^2",
        "x1*x3",
        "x2*x4",
        "x3*x4",
        "x2*x3 + x1*x4",
        "x1*x2 + x4^2",
    ]
    .iter()
    .map(|s| {
        s.split('+')
            .map(|t| (Monomial::parse(t, 4).expect("valid monomial"), 1u64))
            .collect()
    })
    .collect();
    Subspace::from_sparse(f, 4, 2, TermOrder::Lex, &forms).expect("quadrics in four variables")
}

/// An explicit space known to attain the proven cap, when one exists for
/// these parameters over `field`.
pub fn known_witness(field: &PrimeField, n: usize, d: u32, u: usize) -> Option<Subspace<PrimeField>> {
    match (n, d, u) {
        (4, 2, 8) if field.modulus() == 2 => Some(gf2_witness()),
        (4, 2, 8) => Some(build_eight_quadrics(field, &alpha_family(field, 2 % field.modulus()))),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMinimizers {
    pub j: u32,
    pub value: u64,
    pub minimizer_ids: Vec<usize>,
}

/// Evidence on whether minimizers of `dim W^j` persist across `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceProbe {
    pub n: usize,
    pub d: u32,
    pub u: usize,
    pub jmax: u32,
    /// Labels of all strongly stable spaces, indexed like `minimizer_ids`.
    pub spaces: Vec<String>,
    pub per_degree: Vec<DegreeMinimizers>,
    /// Spaces minimal for every `j` in `1..=jmax`.
    pub common_minimizers: Vec<usize>,
    /// Every `j = 2` minimizer stays minimal for all `j <= jmax`.
    pub square_minimizers_persist: bool,
    pub consistent: bool,
    pub counterexample: Option<String>,
}

pub fn persistence_probe(n: usize, d: u32, u: usize, jmax: u32, caps: &Caps) -> Result<PersistenceProbe> {
    if jmax < 2 {
        return Err(Error::OutOfRange {
            what: "jmax",
            value: jmax.to_string(),
            allowed: ">= 2".into(),
        });
    }
    let catalog = StableCatalog::build(n, d, u, jmax, caps)?;
    let per_degree: Vec<DegreeMinimizers> = (1..=jmax)
        .map(|j| {
            let (value, minimizer_ids) = catalog.minimum(j);
            DegreeMinimizers {
                j,
                value,
                minimizer_ids,
            }
        })
        .collect();
    let common_minimizers: Vec<usize> = (0..catalog.spaces.len())
        .filter(|i| per_degree.iter().all(|m| m.minimizer_ids.contains(i)))
        .collect();
    let square = &per_degree[1].minimizer_ids;
    let mut counterexample = None;
    for m in &per_degree[2..] {
        if let Some(&bad) = square.iter().find(|i| !m.minimizer_ids.contains(i)) {
            counterexample = Some(format!(
                "{} is minimal for j=2 but dim W^{} = {} > {}",
                catalog.spaces[bad].label(),
                m.j,
                catalog.hilbert[bad][m.j as usize],
                m.value
            ));
            break;
        }
    }
    let square_minimizers_persist = counterexample.is_none();
    if counterexample.is_none() && common_minimizers.is_empty() {
        counterexample = Some("no single space is minimal for every j".into());
    }
    Ok(PersistenceProbe {
        n,
        d,
        u,
        jmax,
        spaces: catalog.spaces.iter().map(StableSpace::label).collect(),
        per_degree,
        consistent: square_minimizers_persist && !common_minimizers.is_empty(),
        common_minimizers,
        square_minimizers_persist,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialSpace;
    use std::collections::HashSet;

    fn caps() -> Caps {
        Caps::default()
    }

    fn space(s: &str) -> MonomialSpace {
        MonomialSpace::parse(s, 3).unwrap()
    }

    fn minimizer_spaces(r: &LResult) -> HashSet<MonomialSpace> {
        r.minimizers.iter().map(|s| s.space().clone()).collect()
    }

    #[test]
    fn l_for_twelve_quintics() {
        let w2 = space("x^5,x^4y,x^4z,x^3y^2,x^3yz,x^3z^2,x^2y^3,x^2y^2z,x^2yz^2,xy^4,xy^3z,xy^2z^2");
        let w4 = space("x^5,x^4y,x^4z,x^3y^2,x^3yz,x^3z^2,x^2y^3,x^2y^2z,x^2yz^2,xy^4,xy^3z,y^5");
        let catalog = StableCatalog::build(3, 5, 12, 4, &caps()).unwrap();
        for j in 1..=4u32 {
            let r = catalog.l_result(j);
            let jj = j as u64;
            assert_eq!(r.value, 6 * jj * jj + 5 * jj + 1);
            if j >= 2 {
                assert_eq!(minimizer_spaces(&r), HashSet::from([w2.clone(), w4.clone()]));
            } else {
                assert_eq!(r.minimizers.len(), 5);
            }
        }
        assert_eq!(lower_bound_l(3, 5, 12, 2, &caps()).unwrap().value, 35);
    }

    #[test]
    fn l_for_seven_quartics() {
        let scroll_a = space("xy^2z, xy^3, x^2yz, x^2y^2, x^3z, x^3y, x^4");
        let scroll_b = space("y^4, xy^3, x^2yz, x^2y^2, x^3z, x^3y, x^4");
        let catalog = StableCatalog::build(3, 4, 7, 6, &caps()).unwrap();
        assert_eq!(catalog.l_result(1).value, 7);
        for j in 2..=6 {
            let r = catalog.l_result(j);
            assert_eq!(minimizer_spaces(&r), HashSet::from([scroll_a.clone(), scroll_b.clone()]), "j={j}");
        }
    }

    #[test]
    fn l_guard_and_monotonicity() {
        assert!(lower_bound_l(3, 6, 5, 2, &caps()).is_ok());
        assert!(matches!(
            lower_bound_l(3, 7, 5, 2, &caps()),
            Err(Error::EnumerationInfeasible { .. })
        ));
        assert!(lower_bound_l(3, 4, 7, 0, &caps()).is_err());
        for (n, d, u) in [(3, 3, 4), (3, 4, 9), (4, 2, 6), (2, 6, 3)] {
            let c = StableCatalog::build(n, d, u, 5, &caps()).unwrap();
            assert_eq!(c.l_result(1).value, u as u64);
            for j in 1..5 {
                assert!(c.l_result(j + 1).value >= c.l_result(j).value);
            }
        }
    }

    #[test]
    fn sampled_l_is_an_upper_bound() {
        let exact = lower_bound_l(3, 5, 12, 3, &caps()).unwrap().value;
        let s = sample_l_upper(3, 5, 12, 3, 40, 7, &caps()).unwrap();
        assert!(s.upper_bound >= exact);
        let again = sample_l_upper(3, 5, 12, 3, 40, 7, &caps()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn naive_bounds() {
        assert_eq!(naive_upper(4, 2, 8, 2), 35);
        assert_eq!(naive_upper(5, 3, 1, 4), 1);
        assert_eq!(naive_upper(3, 5, 12, 2), 66);
        assert_eq!(naive_upper(3, 4, 7, 2), 28);
    }

    #[test]
    fn sampled_m_for_eight_quadrics() {
        let f = PrimeField::default();
        let r = sample_m(&f, 4, 2, 8, 2, 20, 1, &caps()).unwrap();
        assert_eq!(r.observed_max, 34);
        assert_eq!(r.naive_bound, 35);
        assert_eq!(r.proven_cap, Some(34));
        assert_eq!(replay_m_witness(&r, &caps()).unwrap(), 34);
    }

    #[test]
    fn sampled_m_full_space() {
        let f = PrimeField::default();
        let r = sample_m(&f, 3, 2, 6, 3, 3, 5, &caps()).unwrap();
        assert_eq!(r.observed_max, dim_graded_usize(3, 6));
        assert!(sample_m(&f, 3, 2, 6, 3, 0, 5, &caps()).is_err());
    }

    #[test]
    fn condition_checks() {
        let f = PrimeField::default();
        let p = QuadricPairParams::new([1, 0, 1, 1], [0, 1, 2, 1]);
        assert!(check_condition1(&f, &p));
        assert!(check_condition2(&f, &p));
        let p0 = QuadricPairParams::new([1, 0, 1, 1], [0, 1, 0, 1]);
        assert!(!check_condition1(&f, &p0));
        let p1 = QuadricPairParams::new([1, 0, 1, 1], [0, 1, 1, 1]);
        assert!(!check_condition1(&f, &p1));
        // the rows (1,0,1,1), (0,1,1,1), (0,0,1,1) are independent, so only
        // condition (1) fails at alpha = 1
        assert!(check_condition2(&f, &p1));
        let same = QuadricPairParams::new([1, 2, 3, 4], [1, 2, 3, 4]);
        assert!(!check_condition1(&f, &same));
        assert!(!check_condition2(&f, &same));
    }

    #[test]
    fn eight_quadrics_construction() {
        let f = PrimeField::default();
        let w = build_eight_quadrics(&f, &alpha_family(&f, 2));
        assert_eq!(w.u(), 8);
        assert_eq!(w.power_dimension(2, &caps()).unwrap(), 34);

        let degenerate = QuadricPairParams::new([1, 0, 1, 1], [1, 0, 1, 1]);
        assert_eq!(build_eight_quadrics(&f, &degenerate).u(), 7);
        let proportional = QuadricPairParams::new([1, 1, 1, 1], [3, 3, 3, 3]);
        assert_eq!(build_eight_quadrics(&f, &proportional).u(), 7);

        // over the rationals as an independent recheck
        let q = Rationals;
        let wq = build_eight_quadrics(&q, &alpha_family(&q, q.from_i64(2)));
        assert_eq!(wq.power_dimension(2, &caps()).unwrap(), 34);
    }

    #[test]
    fn gf2_witness_space() {
        let w = gf2_witness();
        assert_eq!(w.u(), 8);
        assert_eq!(w.power_dimension(2, &caps()).unwrap(), 34);
        let f2 = PrimeField::new(2).unwrap();
        for seed in 0..30 {
            let v = random_subspace_with(&f2, 4, 2, 8, TermOrder::Lex, &mut sample_rng(seed, 0)).unwrap();
            assert!(v.power_dimension(2, &caps()).unwrap() <= 34);
        }
        let k3 = known_witness(&PrimeField::new(3).unwrap(), 4, 2, 8).unwrap();
        assert_eq!(k3.power_dimension(2, &caps()).unwrap(), 34);
        assert!(known_witness(&f2, 3, 2, 8).is_none());
    }

    #[test]
    fn persistence_probes() {
        let p = persistence_probe(3, 5, 12, 5, &caps()).unwrap();
        assert!(p.consistent);
        assert_eq!(p.common_minimizers.len(), 2);
        for m in &p.per_degree[1..] {
            assert_eq!(m.minimizer_ids, p.common_minimizers);
        }
        let p = persistence_probe(3, 4, 7, 5, &caps()).unwrap();
        assert!(p.consistent);
        assert_eq!(p.common_minimizers.len(), 2);
        let p = persistence_probe(2, 7, 4, 5, &caps()).unwrap();
        assert!(p.consistent);
        assert_eq!(p.spaces.len(), 1);
        assert!(persistence_probe(3, 4, 7, 1, &caps()).is_err());
    }

    #[test]
    fn gap_scan_flags_eight_quadrics() {
        let f = PrimeField::default();
        let gaps = scan_naive_gaps(&f, 4..=4, 2..=2, 2, 3, 1, &caps()).unwrap();
        assert!(gaps.iter().all(|g| g.conjectural));
        let eight = gaps.iter().find(|g| g.result.u == 8).expect("u = 8 is flagged");
        assert_eq!(eight.result.observed_max, 34);
        assert_eq!(eight.recheck_prime, 34);
        assert_eq!(eight.recheck_rationals, Some(34));
    }

    #[test]
    fn rational_sampling_agrees_with_modular() {
        let c = caps();
        assert_eq!(sample_m_rational(4, 2, 8, 2, 3, 0, &c).unwrap(), 34);
        assert_eq!(sample_m_rational(3, 4, 7, 2, 3, 0, &c).unwrap(), 28);
    }
}
