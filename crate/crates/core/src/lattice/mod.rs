//! Exact integer lattices in Hermite normal form.

mod oracle;

pub use oracle::{
    alternating_cycle_sum, check_condition_one, check_condition_two, edge_vector, group_of_monoid,
    oracle_facet_checks, oracle_r1, verify_decomposition, verify_facet_rank, verify_tree_cycle_basis,
    FacetCheck,
};

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// An integer vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntVec(pub Vec<i64>);

impl IntVec {
    pub fn zeros(dim: usize) -> Self {
        IntVec(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = IntVec::zeros(dim);
        v.0[i] = 1;
        v
    }

    pub fn checked_add(&self, other: &IntVec) -> Result<IntVec> {
        combine(&self.0, 1, &other.0).map(IntVec)
    }

    pub fn checked_sub(&self, other: &IntVec) -> Result<IntVec> {
        combine(&self.0, -1, &other.0).map(IntVec)
    }

    pub fn checked_scale(&self, k: i64) -> Result<IntVec> {
        self.0.iter().map(|&x| x.checked_mul(k).ok_or(Error::Overflow)).collect::<Result<_>>().map(IntVec)
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Deref for IntVec {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl AsRef<[i64]> for IntVec {
    fn as_ref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec(v)
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `a + k * b`, entrywise with overflow checks.
fn combine(a: &[i64], k: i64, b: &[i64]) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    a.iter()
        .zip(b)
        .map(|(&x, &y)| y.checked_mul(k).and_then(|ky| x.checked_add(ky)).ok_or(Error::Overflow))
        .collect()
}

/// `row -= q * pivot_row` in place.
fn sub_multiple(row: &mut [i64], q: i64, pivot_row: &[i64]) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for (x, &p) in row.iter_mut().zip(pivot_row) {
        *x = p.checked_mul(q).and_then(|qp| x.checked_sub(qp)).ok_or(Error::Overflow)?;
    }
    Ok(())
}

/// Row Hermite normal form of the integer row span of `rows`.
///
/// The result is in echelon form with positive pivots, every entry above a
/// pivot reduced into `[0, pivot)`, and zero rows removed. Two row sets span
/// the same lattice iff their results are identical.
pub fn hermite_normal_form(mut rows: Vec<Vec<i64>>, dim: usize) -> Result<Vec<Vec<i64>>> {
    for row in &rows {
        if row.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
        }
    }
    let mut r = 0;
    for c in 0..dim {
        if r == rows.len() {
            break;
        }
        // Euclid on column c over rows r.., always pivoting on the smallest entry
        while let Some(p) = (r..rows.len())
            .filter(|&i| rows[i][c] != 0)
            .min_by_key(|&i| rows[i][c].unsigned_abs())
        {
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let mut cleared = true;
            for row in tail.iter_mut() {
                if row[c] != 0 {
                    let q = row[c] / pivot_row[c];
                    sub_multiple(row, q, pivot_row)?;
                    cleared &= row[c] == 0;
                }
            }
            if cleared {
                break;
            }
        }
        if rows[r][c] == 0 {
            continue;
        }
        if rows[r][c] < 0 {
            for x in rows[r].iter_mut() {
                *x = x.checked_neg().ok_or(Error::Overflow)?;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            let q = row[c].div_euclid(pivot_row[c]);
            sub_multiple(row, q, pivot_row)?;
        }
        r += 1;
    }
    rows.truncate(r);
    debug_assert!(rows.iter().all(|row| row.iter().any(|&x| x != 0)));
    Ok(rows)
}

/// A sublattice of `Z^dim`, stored as its Hermite normal form basis.
///
/// Equality is equality of lattices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
}

impl IntegerLattice {
    /// The lattice spanned by `vectors` inside `Z^dim`.
    pub fn span<I, V>(dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[i64]>,
    {
        let rows = vectors.into_iter().map(|v| v.as_ref().to_vec()).collect();
        Ok(IntegerLattice { dim, basis: hermite_normal_form(rows, dim)? })
    }

    pub fn zero(dim: usize) -> Self {
        IntegerLattice { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        IntegerLattice { dim, basis: (0..dim).map(|i| IntVec::unit(dim, i).0).collect() }
    }

    /// Vectors of `Z^dim` supported on `support`.
    pub fn coordinate(dim: usize, support: VertexSet) -> Self {
        IntegerLattice { dim, basis: support.iter().map(|i| IntVec::unit(dim, i).0).collect() }
    }

    /// Vectors of `Z^dim` supported on `support` with even coordinate sum.
    pub fn even_sum_on(dim: usize, support: VertexSet) -> Result<Self> {
        let Some(first) = support.min() else { return Ok(IntegerLattice::zero(dim)) };
        let mut gens = vec![IntVec::unit(dim, first).checked_scale(2)?];
        for j in support.iter().skip(1) {
            gens.push(IntVec::unit(dim, first).checked_add(&IntVec::unit(dim, j))?);
        }
        IntegerLattice::span(dim, gens)
    }

    /// Vectors of `Z^dim` with even coordinate sum.
    pub fn even_sum(dim: usize) -> Result<Self> {
        IntegerLattice::even_sum_on(dim, VertexSet::full(dim))
    }

    /// `{x in Z^dim : coeffs . x = 0}`.
    pub fn kernel_of_form(coeffs: &[i64]) -> Result<Self> {
        let rows: Vec<Vec<i64>> = coeffs.iter().map(|&c| vec![c]).collect();
        let dim = coeffs.len();
        IntegerLattice::span(dim, left_kernel(&rows, 1)?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Index in `Z^dim` (product of the pivots), or `None` below full rank.
    pub fn determinant(&self) -> Option<i64> {
        if self.rank() != self.dim {
            return None;
        }
        self.basis.iter().enumerate().try_fold(1i64, |acc, (k, row)| acc.checked_mul(row[k]))
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        let mut rest = v.to_vec();
        for row in &self.basis {
            let c = row.iter().position(|&x| x != 0).expect("HNF rows are nonzero");
            if rest[..c].iter().any(|&x| x != 0) {
                return Ok(false);
            }
            if rest[c] % row[c] != 0 {
                return Ok(false);
            }
            let q = rest[c] / row[c];
            sub_multiple(&mut rest, q, row)?;
        }
        Ok(rest.iter().all(|&x| x == 0))
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> Result<bool> {
        for row in &other.basis {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The lattice sum `self + other`.
    pub fn sum(&self, other: &IntegerLattice) -> Result<Self> {
        self.check_dim(other)?;
        IntegerLattice::span(self.dim, self.basis.iter().chain(&other.basis))
    }

    /// `self ∩ other`, from the integer left kernel of the stacked bases:
    /// `a·B1 + b·B2 = 0` exactly when `a·B1 = -b·B2` lies in both.
    pub fn intersection(&self, other: &IntegerLattice) -> Result<Self> {
        self.check_dim(other)?;
        let stacked: Vec<Vec<i64>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let kernel = left_kernel(&stacked, self.dim)?;
        let mut gens = Vec::with_capacity(kernel.len());
        for y in kernel {
            let mut x = vec![0i64; self.dim];
            for (coef, row) in y.iter().zip(&self.basis) {
                sub_multiple(&mut x, coef.checked_neg().ok_or(Error::Overflow)?, row)?;
            }
            gens.push(x);
        }
        IntegerLattice::span(self.dim, gens)
    }

    fn check_dim(&self, other: &IntegerLattice) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: other.dim })
        }
    }
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lattice of rank {} in Z^{}: {:?}", self.rank(), self.dim, self.basis)
    }
}

/// A basis of `{y in Z^m : y · rows = 0}` for an `m x cols` matrix.
///
/// Reduces `[rows | I_m]`; the identity part of the rows whose left block
/// vanishes is a kernel basis, since the accumulated transform is unimodular.
fn left_kernel(rows: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<i64>>> {
    let m = rows.len();
    let augmented: Vec<Vec<i64>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..m).map(|j| (i == j) as i64));
            r
        })
        .collect();
    let reduced = hermite_normal_form(augmented, cols + m)?;
    debug_assert_eq!(reduced.len(), m);
    Ok(reduced
        .into_iter()
        .filter(|r| r[..cols].iter().all(|&x| x == 0))
        .map(|r| r[cols..].to_vec())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn index_two_lattice() {
        let l = IntegerLattice::span(2, [[2, 0], [0, 2], [1, 1]]).unwrap();
        assert_eq!(l.basis(), &[vec![1, 1], vec![0, 2]]);
        assert_eq!(l.determinant(), Some(2));
        assert_eq!(l, IntegerLattice::even_sum(2).unwrap());
        assert!(l.contains(&[3, 5]).unwrap());
        assert!(!l.contains(&[1, 0]).unwrap());
    }

    #[test]
    fn trivial_spans() {
        let empty: [[i64; 2]; 0] = [];
        let z = IntegerLattice::span(2, empty).unwrap();
        assert_eq!(z.rank(), 0);
        assert_eq!(z, IntegerLattice::zero(2));
        let id = IntegerLattice::span(2, [[1, 0], [0, 1]]).unwrap();
        assert_eq!(id, IntegerLattice::full(2));
        assert_eq!(id.determinant(), Some(1));
    }

    #[test]
    fn kernel_and_intersection() {
        let k = IntegerLattice::kernel_of_form(&[1, 1, -1]).unwrap();
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&[1, 0, 1]).unwrap());
        assert!(k.contains(&[0, 1, 1]).unwrap());
        assert!(!k.contains(&[1, 0, 0]).unwrap());
        let even = IntegerLattice::even_sum(3).unwrap();
        let both = k.intersection(&even).unwrap();
        // x1 + x2 = x3 forces the sum 2*x3 to be even already
        assert_eq!(both, k);
        let a = IntegerLattice::span(1, [[4]]).unwrap();
        let b = IntegerLattice::span(1, [[6]]).unwrap();
        assert_eq!(a.intersection(&b).unwrap().basis(), &[vec![12]]);
        assert_eq!(a.sum(&b).unwrap().basis(), &[vec![2]]);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            IntegerLattice::span(2, [vec![1, 2, 3]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn overflow_is_reported() {
        // making the pivot positive would negate i64::MIN
        assert_eq!(IntegerLattice::span(1, [[i64::MIN]]), Err(Error::Overflow));
        assert_eq!(IntVec(vec![i64::MAX]).checked_scale(2), Err(Error::Overflow));
    }

    fn small_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 0..6)
    }

    proptest! {
        #[test]
        fn hnf_is_canonical_and_spans(rows in small_rows(), perm_seed in any::<u64>()) {
            let l = IntegerLattice::span(4, &rows).unwrap();
            // shuffled and with redundant sums added: same lattice, same basis
            let mut shuffled = rows.clone();
            if !shuffled.is_empty() {
                let k = (perm_seed as usize) % shuffled.len();
                shuffled.rotate_left(k);
                let extra = combine(&shuffled[0], 3, shuffled.last().unwrap()).unwrap();
                shuffled.push(extra);
            }
            prop_assert_eq!(&IntegerLattice::span(4, &shuffled).unwrap(), &l);
            for row in &rows {
                prop_assert!(l.contains(row).unwrap());
            }
            for (k, b) in l.basis().iter().enumerate() {
                let c = b.iter().position(|&x| x != 0).unwrap();
                prop_assert!(b[c] > 0);
                for above in &l.basis()[..k] {
                    prop_assert!(0 <= above[c] && above[c] < b[c]);
                }
            }
        }

        #[test]
        fn intersection_is_largest_common_sublattice(
            a in small_rows(), b in small_rows(), probe in prop::collection::vec(-6i64..=6, 4)
        ) {
            let la = IntegerLattice::span(4, &a).unwrap();
            let lb = IntegerLattice::span(4, &b).unwrap();
            let both = la.intersection(&lb).unwrap();
            prop_assert!(la.contains_lattice(&both).unwrap());
            prop_assert!(lb.contains_lattice(&both).unwrap());
            let in_both = la.contains(&probe).unwrap() && lb.contains(&probe).unwrap();
            prop_assert_eq!(both.contains(&probe).unwrap(), in_both);
        }
    }
}
