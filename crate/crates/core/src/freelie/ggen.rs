use std::fmt;
use std::str::FromStr;

use crate::exactnum::Rational;
use crate::freealg::{Gen, NCPoly};

use super::FreeLieError;

/// The generator `g_{(l,j),β} = (ad e_1)^{β_1}⋯(ad e_{l−1})^{β_{l−1}}(ad e_l)^{β_l+1}(e_j)`
/// of the commutant of the free Lie algebra, with `l > j ≥ 1` and
/// `β ∈ Z₊^l`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GGen {
    l: usize,
    j: usize,
    beta: Vec<u32>,
}

impl GGen {
    pub fn new(l: usize, j: usize, beta: Vec<u32>) -> Result<Self, FreeLieError> {
        if !(l > j && j >= 1) || beta.len() != l {
            return Err(FreeLieError::InvalidGGen(format!("l={l}, j={j}, beta={beta:?}")));
        }
        Ok(GGen { l, j, beta })
    }

    /// `g_{(2,1),(b1,b2)}`, the only family when `k = 2`.
    pub fn two(b1: u32, b2: u32) -> Self {
        GGen { l: 2, j: 1, beta: vec![b1, b2] }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    /// Number of `e`-letters in the expansion: `Σβ + 2`.
    pub fn letters(&self) -> usize {
        self.beta.iter().sum::<u32>() as usize + 2
    }

    fn sort_key(&self) -> (usize, usize, usize, &[u32]) {
        (self.letters(), self.l, self.j, &self.beta)
    }
}

impl fmt::Display for GGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.beta.iter().map(u32::to_string).collect();
        write!(f, "g[{},{};{}]", self.l, self.j, b.join(","))
    }
}

impl fmt::Debug for GGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GGen {
    type Err = FreeLieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FreeLieError::InvalidGGen(s.to_string());
        let inner = s.trim().strip_prefix("g[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let (delta, beta) = inner.split_once(';').ok_or_else(bad)?;
        let (l, j) = delta.split_once(',').ok_or_else(bad)?;
        let l: usize = l.trim().parse().map_err(|_| bad())?;
        let j: usize = j.trim().parse().map_err(|_| bad())?;
        let beta = beta
            .split(',')
            .map(|b| b.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        GGen::new(l, j, beta)
    }
}

/// All `g_{δ,β}` for `f_k` with at most `max_letters` letters, sorted by
/// letter count, then `δ`, then `β`. Empty when `k < 2`.
pub fn enumerate_ggens(k: usize, max_letters: usize) -> Vec<GGen> {
    let mut out = Vec::new();
    if max_letters < 2 {
        return out;
    }
    let budget = (max_letters - 2) as u32;
    for l in 2..=k {
        for j in 1..l {
            for beta in compositions_up_to(l, budget) {
                out.push(GGen { l, j, beta });
            }
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Vectors of length `len` with entry sum at most `budget`.
fn compositions_up_to(len: usize, budget: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=budget {
        for mut rest in compositions_up_to(len - 1, budget - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Generator `e_i` of the free algebra.
pub fn e(i: usize) -> Gen {
    Gen::named(&format!("e{i}"))
}

/// The alphabet `e1..ek`.
pub fn e_alphabet(k: usize) -> Vec<Gen> {
    (1..=k).map(e).collect()
}

/// `ad a(b) = ab − ba`.
pub fn ad(a: &NCPoly<Rational>, b: &NCPoly<Rational>) -> NCPoly<Rational> {
    a.commutator(b)
}

/// Fully expanded `g` as a noncommutative polynomial in `e1..ek`.
pub fn expand_g(g: &GGen) -> NCPoly<Rational> {
    let mut acc = NCPoly::gen(&e(g.j));
    for _ in 0..=g.beta[g.l - 1] {
        acc = ad(&NCPoly::gen(&e(g.l)), &acc);
    }
    for i in (1..g.l).rev() {
        for _ in 0..g.beta[i - 1] {
            acc = ad(&NCPoly::gen(&e(i)), &acc);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_rational;

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_ggens(2, 2), vec![GGen::two(0, 0)]);
        assert_eq!(enumerate_ggens(2, 3), vec![GGen::two(0, 0), GGen::two(0, 1), GGen::two(1, 0)]);
        assert!(enumerate_ggens(1, 6).is_empty());
        // Σβ ≤ n − 2 over Z₊² has (n−1)n/2 solutions
        assert_eq!(enumerate_ggens(2, 6).len(), 15);
        let k3 = enumerate_ggens(3, 3);
        assert_eq!(k3.iter().filter(|g| g.letters() == 2).count(), 3);
    }

    #[test]
    fn expansions() {
        let g = e_alphabet(2);
        assert_eq!(expand_g(&GGen::two(0, 0)), parse_rational("e2*e1 - e1*e2", &g).unwrap());
        assert_eq!(
            expand_g(&GGen::two(1, 0)),
            parse_rational("2*e1*e2*e1 - e1^2*e2 - e2*e1^2", &g).unwrap()
        );
        // [e2, [e2, e1]] by hand
        assert_eq!(
            expand_g(&GGen::two(0, 1)),
            parse_rational("e2^2*e1 - 2*e2*e1*e2 + e1*e2^2", &g).unwrap()
        );
        for gg in enumerate_ggens(2, 5) {
            let p = expand_g(&gg);
            assert!(p.terms().all(|(w, _)| w.len() == gg.letters()));
        }
    }

    #[test]
    fn text_form() {
        let g: GGen = "g[2,1;0,3]".parse().unwrap();
        assert_eq!(g, GGen::two(0, 3));
        assert_eq!(g.to_string(), "g[2,1;0,3]");
        assert!("g[1,1;0]".parse::<GGen>().is_err());
        assert!("g[2,1;0]".parse::<GGen>().is_err());
        assert!("h[2,1;0,0]".parse::<GGen>().is_err());
    }
}
