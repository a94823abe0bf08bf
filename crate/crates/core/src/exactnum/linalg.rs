//! Exact rank over the rationals.

use std::collections::BTreeMap;

use super::Rational;

/// A sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, Rational>;

/// Row echelon form built one row at a time.
///
/// Pivot rows are normalized to a leading 1 and indexed by their leading
/// column, so reducing an incoming row touches only its own support.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the current pivots and keep the remainder.
    /// Returns whether the row was independent of the rows seen so far.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        let mut col_floor = 0usize;
        loop {
            let Some((&col, _)) = row.range(col_floor..).next() else {
                return false;
            };
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = row[&col].clone();
                    for (c, v) in pivot {
                        let entry = row.entry(*c).or_insert_with(Rational::zero);
                        *entry = &*entry - &(&factor * v);
                        if entry.is_zero() {
                            row.remove(c);
                        }
                    }
                    col_floor = col + 1;
                }
                None => {
                    let lead = row[&col].recip().expect("nonzero lead");
                    for v in row.values_mut() {
                        *v = &*v * &lead;
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }
}

/// Rank of a sparse matrix given by rows.
pub fn sparse_rank<I: IntoIterator<Item = SparseRow>>(rows: I) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    sparse_rank(rows.iter().map(|r| {
        r.iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    #[test]
    fn dense_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![q(0), q(0)]]), 0);
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(&m), 2);
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| if i == j { q(1) } else { q(0) }).collect())
            .collect();
        assert_eq!(rank(&id), 4);
    }

    #[test]
    fn insert_reports_dependence() {
        let mut e = Echelon::new();
        assert!(e.insert([(3, q(2)), (5, q(1))].into_iter().collect()));
        assert!(e.insert([(5, q(1))].into_iter().collect()));
        assert!(!e.insert([(3, q(1))].into_iter().collect()));
        assert_eq!(e.rank(), 2);
    }
}
