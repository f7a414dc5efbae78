//! Brute-force graded dimensions by exact linear algebra.
//!
//! `dim [R/I]_n` is the number of degree-`n` monomials minus the rank of the
//! matrix whose rows are `m * g` for every generator `g` and every monomial
//! `m` of complementary degree. Shares no code with the series pipeline
//! beyond polynomial arithmetic.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, Polynomial};
use crate::presentation::CyclicModule;
use crate::series::{binomial, HilbertSeries};

/// Default top degree for oracle comparisons.
pub const DEFAULT_ORACLE_DEGREE: usize = 12;

/// `dims[n] = dim_K [R/I]_n` for `n <= max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimensionProfile {
    pub dims: Vec<BigInt>,
    pub max_degree: usize,
}

impl GradedDimensionProfile {
    pub fn compute(d: usize, gens: &[Polynomial], max_degree: usize) -> Self {
        let dims = (0..=max_degree).map(|n| BigInt::from(graded_dimension(d, gens, n))).collect();
        GradedDimensionProfile { dims, max_degree }
    }
}

/// All monomials of total degree `n` in `d` variables.
pub fn monomials_of_degree(d: usize, n: u32) -> Vec<Monomial> {
    fn rec(d: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == d {
            cur.push(left);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(d, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if n == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(d, n, &mut Vec::with_capacity(d), &mut out);
    out
}

/// `dim_K [R/I]_n` for the ideal generated by homogeneous `gens`.
pub fn graded_dimension(d: usize, gens: &[Polynomial], n: usize) -> usize {
    let cols = monomials_of_degree(d, n as u32);
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    for g in gens {
        assert!(g.is_homogeneous(), "oracle needs homogeneous generators");
        let Some(deg) = g.homogeneous_degree() else { continue };
        if deg as usize > n {
            continue;
        }
        for m in monomials_of_degree(d, n as u32 - deg) {
            let row = integer_row(g, &m, &index);
            if seen.insert(row.clone()) {
                rows.push(row);
            }
        }
    }
    cols.len() - sparse_rank(rows)
}

type SparseRow = Vec<(usize, BigInt)>;

/// `m * g` as a primitive integer row with positive leading entry.
fn integer_row(g: &Polynomial, m: &Monomial, index: &HashMap<&Monomial, usize>) -> SparseRow {
    let denom = g.terms().iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut row: SparseRow =
        g.terms().iter().map(|(t, c)| (index[&t.mul(m)], (c * &denom).to_integer())).collect();
    row.sort_by_key(|(i, _)| *i);
    normalize(&mut row);
    row
}

fn normalize(row: &mut SparseRow) {
    let content = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    let content = if row.first().is_some_and(|(_, c)| c.is_negative()) { -content } else { content };
    if !content.is_zero() && !content.is_one() {
        for (_, c) in row.iter_mut() {
            *c /= &content;
        }
    }
}

/// Rank by incremental fraction-free row echelon form.
fn sparse_rank(rows: Vec<SparseRow>) -> usize {
    let mut pivots: HashMap<usize, SparseRow> = HashMap::new();
    for mut row in rows {
        while let Some((lead, _)) = row.first() {
            let Some(p) = pivots.get(lead) else { break };
            row = eliminate(&row, p);
        }
        if let Some((lead, _)) = row.first() {
            pivots.insert(*lead, row);
        }
    }
    pivots.len()
}

/// `p_lead * row - row_lead * p`, which cancels the shared leading column.
fn eliminate(row: &SparseRow, p: &SparseRow) -> SparseRow {
    let (a, b) = (&p[0].1, &row[0].1);
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < p.len() {
        let take_row = j >= p.len() || (i < row.len() && row[i].0 < p[j].0);
        let take_p = i >= row.len() || (j < p.len() && p[j].0 < row[i].0);
        let (col, v) = if take_row {
            i += 1;
            (row[i - 1].0, a * &row[i - 1].1)
        } else if take_p {
            j += 1;
            (p[j - 1].0, -(b * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (row[i - 1].0, a * &row[i - 1].1 - b * &p[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    normalize(&mut out);
    out
}

/// Degree-by-degree comparison of a series against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleComparison {
    pub expected: Vec<BigInt>,
    pub actual: Vec<BigInt>,
    pub mismatches: Vec<usize>,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Oracle dimensions of `(R/I)(-r)` in degrees `0..=max_degree`.
pub fn module_dimensions(module: &CyclicModule, max_degree: usize) -> Vec<BigInt> {
    let profile = GradedDimensionProfile::compute(module.ring_dim(), module.ideal().generators(), max_degree);
    (0..=max_degree)
        .map(|n| if n < module.shift() { BigInt::zero() } else { profile.dims[n - module.shift()].clone() })
        .collect()
}

/// Compares a candidate series for `module` against the oracle.
pub fn verify_series_against(
    module: &CyclicModule,
    series: &HilbertSeries,
    max_degree: usize,
) -> OracleComparison {
    let expected = module_dimensions(module, max_degree);
    let actual = series.expansion(max_degree + 1);
    let mismatches = (0..=max_degree).filter(|&n| expected[n] != actual[n]).collect();
    OracleComparison { expected, actual, mismatches }
}

/// True iff the computed series of `module` matches the oracle up to `max_degree`.
pub fn verify_series(module: &CyclicModule, max_degree: usize) -> bool {
    verify_series_against(module, &module.series(), max_degree).agrees()
}

/// `binomial(n + d - 1, d - 1)`, the dimension of `[R]_n`.
pub fn ring_dimension_in_degree(d: usize, n: usize) -> BigInt {
    if d == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binomial((n + d - 1) as u64, (d - 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::IntPolynomial;
    use crate::poly::PolyIdeal;

    fn v(d: usize, i: usize) -> Polynomial {
        Polynomial::var(d, i)
    }

    #[test]
    fn closed_forms() {
        assert_eq!(graded_dimension(3, &[], 4), 15);
        assert_eq!(graded_dimension(3, &[v(3, 0), v(3, 1), v(3, 2)], 1), 0);
        assert_eq!(graded_dimension(3, &[v(3, 0), v(3, 1), v(3, 2)], 0), 1);
        let gens = [v(3, 0).mul(&v(3, 2)), v(3, 1).mul(&v(3, 2))];
        assert_eq!(graded_dimension(3, &gens, 2), 4);
        for n in 0..8 {
            assert_eq!(BigInt::from(graded_dimension(4, &[], n)), ring_dimension_in_degree(4, n));
        }
    }

    #[test]
    fn dependent_rows_are_detected() {
        // x^2 - y^2 and (x - y)(x + y) coincide; x*(x+y), y*(x+y) span the same as x^2 + xy, xy + y^2
        let (x, y) = (v(2, 0), v(2, 1));
        let f = x.add(&y);
        let gens = [x.mul(&f), y.mul(&f), x.pow(2).sub(&y.pow(2))];
        assert_eq!(graded_dimension(2, &gens, 2), 1);
        assert_eq!(graded_dimension(2, &gens, 3), 1);
    }

    #[test]
    fn shifted_free_module() {
        let m = CyclicModule::free(3, 3);
        let dims = module_dimensions(&m, 5);
        let ints: Vec<i64> = dims.iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(ints, vec![0, 0, 0, 1, 3, 6]);
        assert!(verify_series(&m, 12));
    }

    #[test]
    fn mutation_is_caught() {
        let ideal = PolyIdeal::new(3, vec![v(3, 0).mul(&v(3, 2)), v(3, 1).mul(&v(3, 2))]).unwrap();
        let m = CyclicModule::quotient(ideal);
        assert!(verify_series(&m, 12));
        let bad = HilbertSeries::new(3, IntPolynomial::from_i64(&[1, 0, -2, 2]));
        let cmp = verify_series_against(&m, &bad, 12);
        assert!(!cmp.agrees());
        assert_eq!(cmp.mismatches[0], 3);
    }
}
