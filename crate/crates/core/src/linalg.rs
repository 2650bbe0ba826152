//! Exact linear algebra on spaces of forms.
//!
//! A [`Subspace`] of `S_d` is stored as a reduced row echelon matrix whose
//! columns are the degree-`d` monomials, largest first under the subspace's
//! term order. Pivots are always taken in the leftmost nonzero column, so the
//! pivot monomials are exactly the leading monomials of the space.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::monomial::{
    binomial_u128, dim_graded_usize, GradedComponent, Monomial, MonomialSpace, TermOrder,
};

/// Resource limits shared by the dense and combinatorial engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest dense matrix (rows x columns) we are willing to eliminate.
    pub matrix_cells: u128,
    /// Largest number of strongly stable spaces an enumeration may return.
    pub enum_spaces: usize,
    /// Largest monomial support a sumset may grow to.
    pub sumset_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            matrix_cells: 50_000_000,
            enum_spaces: 2_000_000,
            sumset_size: 20_000_000,
        }
    }
}

/// A sparse polynomial: distinct monomials with nonzero coefficients.
pub type Form<F> = Vec<(Monomial, <F as Field>::Elem)>;

/// Incremental Gaussian elimination. Rows are kept in insertion order; each
/// stored row is zero left of its pivot, has a unit pivot, and is zero in the
/// pivot columns of all earlier rows.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `row` against the stored basis; keep it if it is independent.
    pub fn insert(&mut self, mut row: Vec<F::Elem>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        let f = &self.field;
        for (p, r) in self.pivots.iter().zip(self.rows.iter()) {
            if f.is_zero(&row[*p]) {
                continue;
            }
            let factor = row[*p].clone();
            for k in *p..self.cols {
                if !f.is_zero(&r[k]) {
                    f.sub_mul_assign(&mut row[k], &factor, &r[k]);
                }
            }
        }
        let Some(pivot) = row.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&row[pivot]);
        for x in row[pivot..].iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        self.rows.push(row);
        self.pivots.push(pivot);
        true
    }

    /// Fully reduced row echelon form, rows sorted by pivot column.
    pub fn into_rref(self) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
        let f = self.field;
        let mut pairs: Vec<(usize, Vec<F::Elem>)> =
            self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        for i in (0..pairs.len()).rev() {
            let (p, pivot_row) = {
                let (p, r) = &pairs[i];
                (*p, r.clone())
            };
            for (_, row) in pairs[..i].iter_mut() {
                if f.is_zero(&row[p]) {
                    continue;
                }
                let factor = row[p].clone();
                for k in p..row.len() {
                    if !f.is_zero(&pivot_row[k]) {
                        f.sub_mul_assign(&mut row[k], &factor, &pivot_row[k]);
                    }
                }
            }
        }
        let (pivots, rows) = pairs.into_iter().unzip();
        (rows, pivots)
    }
}

/// Exact rank of a dense matrix.
pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut e = Echelon::new(field.clone(), cols);
    for r in rows {
        e.insert(r.clone());
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

pub fn poly_mul<F: Field>(field: &F, a: &Form<F>, b: &Form<F>) -> Form<F> {
    let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(a.len() * b.len());
    for (ma, ca) in a {
        for (mb, cb) in b {
            let entry = acc.entry(ma * mb).or_insert_with(|| field.zero());
            field.add_mul_assign(entry, ca, cb);
        }
    }
    acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect()
}

fn check_cells(what: &'static str, rows: u128, cols: u128, caps: &Caps) -> Result<()> {
    let cells = rows.saturating_mul(cols);
    if cells > caps.matrix_cells {
        return Err(Error::SizeCap {
            what,
            requested: cells,
            cap: caps.matrix_cells,
        });
    }
    Ok(())
}

/// A `u`-dimensional subspace of `S_d`, in canonical reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    field: F,
    component: Arc<GradedComponent>,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field.spec() == other.field.spec()
            && self.n() == other.n()
            && self.d() == other.d()
            && self.order() == other.order()
            && self.rows == other.rows
    }
}

impl<F: Field> Subspace<F> {
    /// Span of dense coefficient vectors indexed by monomial rank under
    /// `order`. Dependent input rows are dropped, so `u()` may be smaller than
    /// `forms.len()`.
    pub fn from_forms(
        field: F,
        n: usize,
        d: u32,
        order: TermOrder,
        forms: &[Vec<F::Elem>],
    ) -> Result<Self> {
        let component = Arc::new(GradedComponent::new(n, d, order));
        let cols = component.len();
        let mut e = Echelon::new(field.clone(), cols);
        for v in forms {
            if v.len() != cols {
                return Err(Error::WrongLength {
                    got: v.len(),
                    expected: cols,
                });
            }
            e.insert(v.clone());
        }
        Ok(Self::from_echelon(field, component, e))
    }

    /// Span of sparse forms of degree `d`.
    pub fn from_sparse(
        field: F,
        n: usize,
        d: u32,
        order: TermOrder,
        forms: &[Form<F>],
    ) -> Result<Self> {
        let component = Arc::new(GradedComponent::new(n, d, order));
        let mut e = Echelon::new(field.clone(), component.len());
        for form in forms {
            e.insert(densify(&field, &component, form)?);
        }
        Ok(Self::from_echelon(field, component, e))
    }

    /// The span of a set of monomials.
    pub fn monomial(field: F, space: &MonomialSpace, order: TermOrder) -> Self {
        let forms: Vec<Form<F>> = space
            .iter()
            .map(|m| vec![(m.clone(), field.one())])
            .collect();
        Self::from_sparse(field, space.arity(), space.degree(), order, &forms)
            .expect("monomial space members are well formed")
    }

    fn from_echelon(field: F, component: Arc<GradedComponent>, e: Echelon<F>) -> Self {
        let (rows, pivots) = e.into_rref();
        Subspace {
            field,
            component,
            rows,
            pivots,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.component.arity()
    }

    pub fn d(&self) -> u32 {
        self.component.degree()
    }

    pub fn u(&self) -> usize {
        self.rows.len()
    }

    pub fn order(&self) -> TermOrder {
        self.component.order()
    }

    pub fn component(&self) -> &GradedComponent {
        &self.component
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn forms(&self) -> Vec<Form<F>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !self.field.is_zero(c))
                    .map(|(i, c)| (self.component.monomial(i).clone(), c.clone()))
                    .collect()
            })
            .collect()
    }

    /// Re-run the canonical reduction. Always equal to `self`.
    pub fn recanonicalize(&self) -> Self {
        Self::from_forms(self.field.clone(), self.n(), self.d(), self.order(), &self.rows)
            .expect("rows have the component length")
    }

    /// The same space with columns re-sorted under another order.
    pub fn reorder(&self, order: TermOrder) -> Self {
        if same_within_degree(order, self.order()) {
            return self.clone();
        }
        Self::from_sparse(self.field.clone(), self.n(), self.d(), order, &self.forms())
            .expect("forms come from a valid subspace")
    }

    /// Leading monomials of the echelon basis under `order`; always `u` of them.
    pub fn initial_space(&self, order: TermOrder) -> MonomialSpace {
        let s = self.reorder(order);
        let lead = s.pivots.iter().map(|&p| s.component.monomial(p).clone());
        MonomialSpace::new(self.n(), self.d(), lead).expect("pivots lie in S_d")
    }

    /// The support, if every basis vector is a single monomial.
    pub fn as_monomial_space(&self) -> Option<MonomialSpace> {
        let mut ms = Vec::with_capacity(self.u());
        for row in &self.rows {
            let mut nz = row.iter().enumerate().filter(|(_, c)| !self.field.is_zero(c));
            let (i, _) = nz.next()?;
            if nz.next().is_some() {
                return None;
            }
            ms.push(self.component.monomial(i).clone());
        }
        MonomialSpace::new(self.n(), self.d(), ms).ok()
    }

    /// `dim V^j`: the rank of all `C(u+j-1, j)` products of `j` basis forms,
    /// inside `S_{jd}`.
    pub fn power_dimension(&self, j: u32, caps: &Caps) -> Result<usize> {
        if j == 0 {
            return Err(Error::OutOfRange {
                what: "power exponent j",
                value: "0".into(),
                allowed: ">= 1".into(),
            });
        }
        let u = self.u();
        if u == 0 {
            return Ok(0);
        }
        let products = binomial_u128(u as u64 + j as u64 - 1, j as u64);
        let target_dim = binomial_u128(self.n() as u64 - 1 + (j * self.d()) as u64, self.n() as u64 - 1);
        check_cells("power matrix", products, target_dim, caps)?;

        let target = GradedComponent::new(self.n(), j * self.d(), self.order());
        let forms = self.forms();
        let mut e = Echelon::new(self.field.clone(), target.len());
        let mut prefix: Vec<Form<F>> = Vec::with_capacity(j as usize);
        power_products(&self.field, &forms, j as usize, 0, &mut prefix, &mut |prod| {
            e.insert(densify(&self.field, &target, prod).expect("product lies in S_jd"));
            !e.is_full()
        });
        Ok(e.rank())
    }

    /// `dim S_j V`: the rank of every basis form times every degree-`j`
    /// monomial; `j = 0` gives `u`.
    pub fn ideal_growth_dimension(&self, j: u32, caps: &Caps) -> Result<usize> {
        if j == 0 {
            return Ok(self.u());
        }
        let multipliers = crate::monomial::enumerate_monomials(self.n(), j, TermOrder::Lex);
        let target_dim = binomial_u128(self.n() as u64 - 1 + (j + self.d()) as u64, self.n() as u64 - 1);
        check_cells(
            "ideal growth matrix",
            (self.u() * multipliers.len()) as u128,
            target_dim,
            caps,
        )?;
        let target = GradedComponent::new(self.n(), j + self.d(), self.order());
        let mut e = Echelon::new(self.field.clone(), target.len());
        'outer: for form in self.forms() {
            for mult in &multipliers {
                let mut row = vec![self.field.zero(); target.len()];
                for (m, c) in &form {
                    let idx = target.rank_of(&(m * mult)).expect("product lies in S_{d+j}");
                    row[idx] = c.clone();
                }
                e.insert(row);
                if e.is_full() {
                    break 'outer;
                }
            }
        }
        Ok(e.rank())
    }

    /// Substitute `x_i -> sum_k a[i][k] x_k` in every form.
    pub fn change_of_coordinates(&self, a: &[Vec<F::Elem>]) -> Result<Self> {
        let n = self.n();
        if a.len() != n || a.iter().any(|r| r.len() != n) {
            return Err(Error::WrongLength {
                got: a.len(),
                expected: n,
            });
        }
        if rank(&self.field, a) < n {
            return Err(Error::Singular);
        }
        let f = &self.field;
        let linear: Vec<Form<F>> = a
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !f.is_zero(c))
                    .map(|(k, c)| (Monomial::var(k, n), c.clone()))
                    .collect()
            })
            .collect();
        let mut images: HashMap<Monomial, Form<F>> = HashMap::new();
        let mut out = Vec::with_capacity(self.u());
        for form in self.forms() {
            let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
            for (m, c) in &form {
                let img = images
                    .entry(m.clone())
                    .or_insert_with(|| substitute_monomial(f, &linear, m));
                for (mi, ci) in img.iter() {
                    let entry = acc.entry(mi.clone()).or_insert_with(|| f.zero());
                    f.add_mul_assign(entry, c, ci);
                }
            }
            out.push(acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect());
        }
        Self::from_sparse(f.clone(), n, self.d(), self.order(), &out)
    }

    pub fn to_record(&self) -> SubspaceRecord {
        SubspaceRecord {
            field: self.field.spec(),
            n: self.n(),
            d: self.d(),
            order: self.order(),
            rows: self
                .forms()
                .into_iter()
                .map(|form| {
                    let mut terms: Vec<_> = form.into_iter().collect();
                    terms.sort_by(|(a, _), (b, _)| self.order().cmp_same_degree(b, a));
                    terms
                        .into_iter()
                        .map(|(m, c)| (m.to_string(), self.field.format_elem(&c)))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_record(field: F, rec: &SubspaceRecord) -> Result<Self> {
        if field.spec() != rec.field {
            return Err(Error::Parse(format!(
                "record is over field {} but {} was requested",
                rec.field,
                field.spec()
            )));
        }
        let forms = rec
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(m, c)| Ok((Monomial::parse(m, rec.n)?, field.parse_elem(c)?)))
                    .collect::<Result<Form<F>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_sparse(field, rec.n, rec.d, rec.order, &forms)
    }
}

fn same_within_degree(a: TermOrder, b: TermOrder) -> bool {
    a == b || (a != TermOrder::Lex && b != TermOrder::Lex)
}

fn densify<F: Field>(field: &F, component: &GradedComponent, form: &Form<F>) -> Result<Vec<F::Elem>> {
    let mut row = vec![field.zero(); component.len()];
    for (m, c) in form {
        if m.arity() != component.arity() {
            return Err(Error::ArityMismatch {
                left: component.arity(),
                right: m.arity(),
            });
        }
        let idx = component.rank_of(m).ok_or(Error::DegreeMismatch {
            left: component.degree(),
            right: m.degree(),
        })?;
        field.add_mul_assign(&mut row[idx], &field.one(), c);
    }
    Ok(row)
}

/// Visit every product of `depth` forms with non-decreasing indices; the
/// visitor returns `false` to stop early.
fn power_products<F: Field>(
    field: &F,
    forms: &[Form<F>],
    depth: usize,
    start: usize,
    prefix: &mut Vec<Form<F>>,
    visit: &mut dyn FnMut(&Form<F>) -> bool,
) -> bool {
    for i in start..forms.len() {
        let next = match prefix.last() {
            Some(p) => poly_mul(field, p, &forms[i]),
            None => forms[i].clone(),
        };
        if prefix.len() + 1 == depth {
            if !visit(&next) {
                return false;
            }
        } else {
            prefix.push(next);
            let go_on = power_products(field, forms, depth, i, prefix, visit);
            prefix.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

fn substitute_monomial<F: Field>(field: &F, linear: &[Form<F>], m: &Monomial) -> Form<F> {
    let mut acc: Form<F> = vec![(Monomial::one(m.arity()), field.one())];
    for (i, &e) in m.exponents().iter().enumerate() {
        for _ in 0..e {
            acc = poly_mul(field, &acc, &linear[i]);
        }
    }
    acc
}

/// JSON form of a subspace: each row is a list of `[monomial, coefficient]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub field: FieldSpec,
    pub n: usize,
    pub d: u32,
    pub order: TermOrder,
    pub rows: Vec<Vec<(String, String)>>,
}

/// A ChaCha stream for sample `index` under `seed`. Streams are independent,
/// so parallel jobs are reproducible regardless of scheduling.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

const MAX_DRAWS: usize = 64;

/// A uniformly random `u`-dimensional subspace of `S_d` over `GF(p)`,
/// deterministic in `seed`.
pub fn random_subspace(
    field: &PrimeField,
    n: usize,
    d: u32,
    u: usize,
    seed: u64,
) -> Result<Subspace<PrimeField>> {
    random_subspace_with(field, n, d, u, TermOrder::Lex, &mut sample_rng(seed, 0))
}

pub fn random_subspace_with(
    field: &PrimeField,
    n: usize,
    d: u32,
    u: usize,
    order: TermOrder,
    rng: &mut impl Rng,
) -> Result<Subspace<PrimeField>> {
    let cols = dim_graded_usize(n, d);
    if u == 0 || u > cols {
        return Err(Error::OutOfRange {
            what: "subspace dimension u",
            value: u.to_string(),
            allowed: format!("1..={cols}"),
        });
    }
    let p = field.modulus();
    for _ in 0..MAX_DRAWS {
        let rows: Vec<Vec<u64>> = (0..u)
            .map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let s = Subspace::from_forms(*field, n, d, order, &rows)?;
        if s.u() == u {
            return Ok(s);
        }
    }
    Err(Error::RetryExhausted(MAX_DRAWS))
}

/// A random `u`-dimensional subspace of `S_d` over the rationals with integer
/// coefficients in `-bound..=bound`. Used to recheck modular samples exactly.
pub fn random_rational_subspace(
    n: usize,
    d: u32,
    u: usize,
    bound: i64,
    order: TermOrder,
    rng: &mut impl Rng,
) -> Result<Subspace<Rationals>> {
    let cols = dim_graded_usize(n, d);
    if u == 0 || u > cols {
        return Err(Error::OutOfRange {
            what: "subspace dimension u",
            value: u.to_string(),
            allowed: format!("1..={cols}"),
        });
    }
    let q = Rationals;
    for _ in 0..MAX_DRAWS {
        let rows: Vec<Vec<_>> = (0..u)
            .map(|_| (0..cols).map(|_| q.from_i64(rng.gen_range(-bound..=bound))).collect())
            .collect();
        let s = Subspace::from_forms(q, n, d, order, &rows)?;
        if s.u() == u {
            return Ok(s);
        }
    }
    Err(Error::RetryExhausted(MAX_DRAWS))
}

/// A uniformly random invertible `n x n` matrix over `GF(p)`.
pub fn random_invertible(field: &PrimeField, n: usize, rng: &mut impl Rng) -> Result<Vec<Vec<u64>>> {
    let p = field.modulus();
    for _ in 0..MAX_DRAWS {
        let a: Vec<Vec<u64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        if rank(field, &a) == n {
            return Ok(a);
        }
    }
    Err(Error::RetryExhausted(MAX_DRAWS))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Exact,
    SampledLowerBound,
    SampledUpperBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertEntry {
    pub j: u32,
    pub value: u64,
    pub provenance: Provenance,
}

/// Values of a Hilbert function on a contiguous range `0..=J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertTable {
    pub context: String,
    pub entries: Vec<HilbertEntry>,
}

impl HilbertTable {
    pub fn new(context: impl Into<String>, values: &[u64], provenance: Provenance) -> Self {
        HilbertTable {
            context: context.into(),
            entries: values
                .iter()
                .enumerate()
                .map(|(j, &value)| HilbertEntry {
                    j: j as u32,
                    value,
                    provenance,
                })
                .collect(),
        }
    }

    pub fn value(&self, j: u32) -> Option<u64> {
        self.entries.get(j as usize).map(|e| e.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use proptest::prelude::*;

    fn gf() -> PrimeField {
        PrimeField::default()
    }

    fn mono(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn sparse<F: Field>(field: &F, n: usize, terms: &[(&str, i64)]) -> Form<F> {
        terms
            .iter()
            .map(|(m, c)| (mono(m, n), field.from_i64(*c)))
            .collect()
    }

    #[test]
    fn rank_basics() {
        let f = gf();
        let id: Vec<Vec<u64>> = (0..5)
            .map(|i| (0..5).map(|k| u64::from(i == k)).collect())
            .collect();
        assert_eq!(rank(&f, &id), 5);
        assert_eq!(rank(&f, &vec![vec![0u64; 4]; 3]), 0);
        assert_eq!(rank(&f, &[]), 0);
    }

    #[test]
    fn rank_of_quadric_pair_matrix() {
        // rows a_i^2, b_i^2, a_i b_i for a = (1,0,1,1), b = (0,1,alpha,1)
        let f = gf();
        for alpha in [2u64, 3, 17, 31999] {
            let a = [1, 0, 1, 1];
            let b = [0, 1, alpha, 1];
            let m: Vec<Vec<u64>> = vec![
                a.iter().map(|x| f.mul(x, x)).collect(),
                b.iter().map(|x| f.mul(x, x)).collect(),
                a.iter().zip(b.iter()).map(|(x, y)| f.mul(x, y)).collect(),
            ];
            assert_eq!(rank(&f, &m), 3);
        }
    }

    #[test]
    fn forms_construction() {
        let f = gf();
        let all: Vec<Vec<u64>> = (0..15)
            .map(|i| (0..15).map(|k| u64::from(i == k)).collect())
            .collect();
        let s = Subspace::from_forms(f, 3, 4, TermOrder::Lex, &all).unwrap();
        assert_eq!(s.u(), 15);

        let dup = vec![all[0].clone(), all[0].clone(), all[3].clone()];
        assert_eq!(Subspace::from_forms(f, 3, 4, TermOrder::Lex, &dup).unwrap().u(), 2);

        let err = Subspace::from_forms(f, 3, 4, TermOrder::Lex, &[vec![1u64; 14]]);
        assert_eq!(err.unwrap_err(), Error::WrongLength { got: 14, expected: 15 });
    }

    #[test]
    fn power_of_single_monomial() {
        let f = gf();
        let s = Subspace::monomial(f, &MonomialSpace::parse("x^3", 3).unwrap(), TermOrder::Lex);
        for j in 1..6 {
            assert_eq!(s.power_dimension(j, &Caps::default()).unwrap(), 1);
        }
        assert!(s.power_dimension(0, &Caps::default()).is_err());
    }

    #[test]
    fn power_dimension_respects_cap() {
        let s = random_subspace(&gf(), 3, 4, 7, 1).unwrap();
        let tiny = Caps {
            matrix_cells: 100,
            ..Caps::default()
        };
        assert!(matches!(
            s.power_dimension(2, &tiny),
            Err(Error::SizeCap { .. })
        ));
        assert!(matches!(
            s.ideal_growth_dimension(2, &tiny),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn principal_ideal_growth() {
        let f = gf();
        let s = Subspace::monomial(f, &MonomialSpace::parse("x^2", 3).unwrap(), TermOrder::Lex);
        assert_eq!(s.ideal_growth_dimension(0, &Caps::default()).unwrap(), 1);
        assert_eq!(s.ideal_growth_dimension(2, &Caps::default()).unwrap(), 6);
    }

    #[test]
    fn initial_space_examples() {
        let f = gf();
        let w = MonomialSpace::parse("x^2yz, y^4, x^4", 3).unwrap();
        let s = Subspace::monomial(f, &w, TermOrder::RevLex);
        assert_eq!(s.initial_space(TermOrder::Lex), w);
        assert_eq!(s.as_monomial_space(), Some(w));

        let forms = vec![
            sparse(&f, 2, &[("x^2", 1), ("y^2", 1)]),
            sparse(&f, 2, &[("xy", 1)]),
        ];
        let s = Subspace::from_sparse(f, 2, 2, TermOrder::Lex, &forms).unwrap();
        assert_eq!(s.initial_space(TermOrder::Lex), MonomialSpace::parse("x^2, xy", 2).unwrap());
        assert_eq!(s.as_monomial_space(), None);
        // under revlex y^2 < x^2 still, so the leading terms agree here
        assert_eq!(s.initial_space(TermOrder::RevLex), MonomialSpace::parse("x^2, xy", 2).unwrap());
    }

    #[test]
    fn random_subspace_contract() {
        let f = gf();
        let a = random_subspace(&f, 3, 4, 7, 1).unwrap();
        let b = random_subspace(&f, 3, 4, 7, 1).unwrap();
        assert_eq!(a.u(), 7);
        assert_eq!(a, b);
        assert_ne!(a, random_subspace(&f, 3, 4, 7, 2).unwrap());
        assert!(random_subspace(&f, 3, 4, 16, 1).is_err());
        assert_eq!(FieldSpec::Rationals.prime_field(), Err(Error::SamplingOverRationals));
    }

    #[test]
    fn coordinate_changes() {
        let f = gf();
        let v = random_subspace(&f, 3, 3, 4, 9).unwrap();
        let id: Vec<Vec<u64>> = (0..3)
            .map(|i| (0..3).map(|k| u64::from(i == k)).collect())
            .collect();
        assert_eq!(v.change_of_coordinates(&id).unwrap(), v);

        // swap x and z
        let perm = vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]];
        let w = MonomialSpace::parse("x^3, x^2y, xyz", 3).unwrap();
        let s = Subspace::monomial(f, &w, TermOrder::Lex);
        let t = s.change_of_coordinates(&perm).unwrap();
        assert_eq!(t.as_monomial_space(), Some(MonomialSpace::parse("z^3, yz^2, xyz", 3).unwrap()));

        let singular = vec![vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]];
        assert_eq!(s.change_of_coordinates(&singular), Err(Error::Singular));
    }

    #[test]
    fn record_roundtrip() {
        let f = gf();
        let v = random_subspace(&f, 3, 2, 3, 4).unwrap();
        let rec = v.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        let back: SubspaceRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Subspace::from_record(f, &back).unwrap(), v);
        assert!(Subspace::from_record(PrimeField::new(7).unwrap(), &back).is_err());

        let q = Rationals;
        let forms = vec![sparse(&q, 2, &[("x^2", 2), ("xy", 3)])];
        let s = Subspace::from_sparse(q, 2, 2, TermOrder::Lex, &forms).unwrap();
        let rec = s.to_record();
        assert_eq!(rec.rows[0], vec![("x1^2".to_string(), "1".to_string()), ("x1*x2".to_string(), "3/2".to_string())]);
        assert_eq!(Subspace::from_record(q, &rec).unwrap(), s);
    }

    #[test]
    fn hilbert_table_accessors() {
        let t = HilbertTable::new("demo", &[1, 12, 35], Provenance::Exact);
        assert_eq!(t.value(2), Some(35));
        assert_eq!(t.value(3), None);
    }

    fn small_int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn modular_rank_bounded_by_rational_rank(m in small_int_matrix(), p in prop_oneof![Just(2u64), Just(3), Just(5)]) {
            let q = Rationals;
            let gfp = PrimeField::new(p).unwrap();
            let big = gf();
            let as_q: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect()).collect();
            let as_p: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&x| gfp.from_i64(x)).collect()).collect();
            let as_big: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&x| big.from_i64(x)).collect()).collect();
            let rq = rank(&q, &as_q);
            prop_assert!(rank(&gfp, &as_p) <= rq);
            // entries far below p: no accidental cancellation for 5x5 minors
            prop_assert_eq!(rank(&big, &as_big), rq);
        }

        #[test]
        fn canonical_form_is_idempotent(seed in 0u64..1000, u in 1usize..=10) {
            let v = random_subspace(&gf(), 3, 3, u, seed).unwrap();
            prop_assert_eq!(v.recanonicalize(), v.clone());
            let r = v.reorder(TermOrder::RevLex);
            prop_assert_eq!(r.reorder(TermOrder::Lex), v);
        }

        #[test]
        fn initial_space_keeps_dimension(seed in 0u64..1000, u in 1usize..=10) {
            let v = random_subspace(&gf(), 3, 3, u, seed).unwrap();
            for order in [TermOrder::Lex, TermOrder::RevLex, TermOrder::DegRevLex] {
                prop_assert_eq!(v.initial_space(order).dim(), u);
            }
        }

        #[test]
        fn ideal_growth_is_monotone(seed in 0u64..500, u in 1usize..=6) {
            let v = random_subspace(&gf(), 3, 2, u, seed).unwrap();
            let caps = Caps::default();
            let dims: Vec<usize> = (0..4).map(|j| v.ideal_growth_dimension(j, &caps).unwrap()).collect();
            for w in dims.windows(2) {
                prop_assert!(w[0] <= w[1]);
            }
        }
    }
}
