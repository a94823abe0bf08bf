use std::collections::BTreeMap;

use crate::exactnum::Rational;

use super::PresentationError;

/// Structure constants `c^k_{ij}` of a Lie algebra with basis `x1..xn`,
/// `[x_i, x_j] = Σ_k c^k_{ij} x_k`. Indices are 1-based. Only the entries
/// with `i < j` are stored; the rest follow from antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    upper: BTreeMap<(usize, usize, usize), Rational>,
}

impl StructureConstants {
    /// The abelian Lie algebra of dimension `dim`.
    pub fn abelian(dim: usize) -> Self {
        StructureConstants { dim, upper: BTreeMap::new() }
    }

    /// Build from `(i, j, k, c^k_{ij})` entries. Entries with `i > j` are
    /// folded in by antisymmetry; conflicting entries and nonzero `c^k_{ii}`
    /// are rejected.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self, PresentationError>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut sc = Self::abelian(dim);
        let mut seen: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if [i, j, k].iter().any(|&x| x == 0 || x > dim) {
                return Err(PresentationError::Structure(format!("index out of range in ({i}, {j}, {k})")));
            }
            if i == j {
                if !c.is_zero() {
                    return Err(PresentationError::Structure(format!("[x{i}, x{i}] must vanish")));
                }
                continue;
            }
            let (key, value) = if i < j { ((i, j, k), c) } else { ((j, i, k), -c) };
            if let Some(prev) = seen.get(&key) {
                if *prev != value {
                    return Err(PresentationError::Structure(format!(
                        "inconsistent constants for [x{}, x{}] in direction x{}",
                        key.0, key.1, key.2
                    )));
                }
                continue;
            }
            seen.insert(key, value.clone());
            if !value.is_zero() {
                sc.upper.insert(key, value);
            }
        }
        Ok(sc)
    }

    /// Parse the whitespace-separated `i j k value` format. Blank lines and
    /// `#` comments are skipped; an optional `dim n` line fixes the
    /// dimension, otherwise it is the largest index used.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut dim = None;
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |what: &str| PresentationError::Structure(format!("line {}: {what}", n + 1));
            if fields[0] == "dim" {
                let d = fields.get(1).and_then(|s| s.parse().ok()).ok_or_else(|| bad("expected `dim n`"))?;
                dim = Some(d);
                continue;
            }
            if fields.len() != 4 {
                return Err(bad("expected `i j k value`"));
            }
            let idx = |s: &str| s.parse::<usize>().map_err(|_| bad("bad index"));
            let value: Rational = fields[3].parse().map_err(|_| bad("bad rational"))?;
            entries.push((idx(fields[0])?, idx(fields[1])?, idx(fields[2])?, value));
        }
        let dim = dim.unwrap_or_else(|| entries.iter().map(|e| e.0.max(e.1).max(e.2)).max().unwrap_or(0));
        let sc = Self::from_entries(dim, entries)?;
        if !sc.satisfies_jacobi() {
            return Err(PresentationError::Structure("Jacobi identity fails".into()));
        }
        Ok(sc)
    }

    /// The Lie algebra with `[x1,x2] = x3`, `[x1,x3] = −x2`, `[x2,x3] = 0`
    /// (the Euclidean motion algebra of the plane).
    pub fn euclidean_e2() -> Self {
        Self::from_entries(3, [(1, 2, 3, Rational::one()), (1, 3, 2, Rational::integer(-1))])
            .expect("valid constants")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c^k_{ij}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper.get(&(i, j, k)).cloned().unwrap_or_else(Rational::zero),
            Greater => -self.upper.get(&(j, i, k)).cloned().unwrap_or_else(Rational::zero),
            Equal => Rational::zero(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.upper.is_empty()
    }

    /// Nonzero entries with `i < j`, in the file format order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> {
        self.upper.iter().map(|(k, v)| (*k, v))
    }

    /// `[x_i, x_j]` as a coefficient vector (index 0 is `x1`).
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        (1..=self.dim).map(|k| self.get(i, j, k)).collect()
    }

    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim;
        // [[x_a, x_b], x_c] + cyclic = 0, coordinatewise
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for m in 1..=n {
                        let mut total = Rational::zero();
                        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                            for k in 1..=n {
                                total = total + self.get(x, y, k) * self.get(k, z, m);
                            }
                        }
                        if !total.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        for ((i, j, k), v) in &self.upper {
            out.push_str(&format!("{i} {j} {k} {v}\n"));
        }
        out
    }
}

/// Quotient of a Lie algebra by the ideal spanned by the basis vectors with
/// the given (1-based) indices. The quotient basis is the remaining vectors
/// in their original order.
pub fn lie_quotient(sc: &StructureConstants, ideal: &[usize]) -> Result<StructureConstants, PresentationError> {
    let n = sc.dim();
    if ideal.iter().any(|&i| i == 0 || i > n) {
        return Err(PresentationError::NotAnIdeal(ideal.to_vec()));
    }
    let kept: Vec<usize> = (1..=n).filter(|i| !ideal.contains(i)).collect();
    for g in 1..=n {
        for &i in ideal {
            if kept.iter().any(|&k| !sc.get(g, i, k).is_zero()) {
                return Err(PresentationError::NotAnIdeal(ideal.to_vec()));
            }
        }
    }
    let mut entries = Vec::new();
    for (a, &i) in kept.iter().enumerate() {
        for (b, &j) in kept.iter().enumerate().skip(a + 1) {
            for (c, &k) in kept.iter().enumerate() {
                entries.push((a + 1, b + 1, c + 1, sc.get(i, j, k)));
            }
        }
    }
    StructureConstants::from_entries(kept.len(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetry_is_filled_in() {
        let sc = StructureConstants::euclidean_e2();
        assert_eq!(sc.get(2, 1, 3), Rational::integer(-1));
        assert_eq!(sc.get(3, 1, 2), Rational::one());
        assert!(sc.satisfies_jacobi());
    }

    #[test]
    fn parse_format() {
        let text = "# e2\n1 2 3 1\n1 3 2 -1\n2 1 3 -1\n";
        assert_eq!(StructureConstants::parse(text).unwrap(), StructureConstants::euclidean_e2());
        assert!(StructureConstants::parse("1 2 3 1\n2 1 3 1\n").is_err());
        assert!(StructureConstants::parse("1 1 2 1\n").is_err());
        assert!(StructureConstants::parse("1 2\n").is_err());
        let round = StructureConstants::parse(&StructureConstants::euclidean_e2().to_text()).unwrap();
        assert_eq!(round, StructureConstants::euclidean_e2());
    }

    #[test]
    fn jacobi_violation_is_rejected() {
        // [x1,x2] = x1, [x2,x3] = x2, [x1,x3] = x3 breaks Jacobi
        let text = "1 2 1 1\n2 3 2 1\n1 3 3 1\n";
        assert!(StructureConstants::parse(text).is_err());
    }

    #[test]
    fn quotients() {
        let e2 = StructureConstants::euclidean_e2();
        let q = lie_quotient(&e2, &[2, 3]).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.is_abelian());
        assert_eq!(lie_quotient(&e2, &[]).unwrap(), e2);
        let ab = StructureConstants::abelian(3);
        assert_eq!(lie_quotient(&ab, &[2]).unwrap(), StructureConstants::abelian(2));
        assert_eq!(lie_quotient(&e2, &[2]).unwrap_err(), PresentationError::NotAnIdeal(vec![2]));
        assert!(lie_quotient(&e2, &[1]).is_err());
    }
}
