use std::collections::BTreeMap;
use std::fmt;

use super::{GaussianRational, Rational, Ring};

/// One summand `coeff · s^power · e^{i·freq·s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpTerm {
    pub coeff: GaussianRational,
    pub power: u32,
    pub freq: Rational,
}

/// An exponential polynomial `Σ c·s^k·e^{i·d·s}` in one real variable `s`,
/// with Gaussian-rational coefficients and rational frequencies.
///
/// Terms are merged by `(k, d)`; since the functions `s^k e^{ids}` are
/// linearly independent, this representation is canonical.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExpPoly {
    terms: BTreeMap<(u32, Rational), GaussianRational>,
}

impl ExpPoly {
    pub fn term(coeff: GaussianRational, power: u32, freq: Rational) -> Self {
        let mut p = ExpPoly::default();
        p.push(coeff, power, freq);
        p
    }

    /// `e^{i·freq·s}`.
    pub fn exp(freq: Rational) -> Self {
        Self::term(GaussianRational::one(), 0, freq)
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, 0, Rational::zero())
    }

    fn push(&mut self, coeff: GaussianRational, power: u32, freq: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((power, freq)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&coeff);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ExpTerm> + '_ {
        self.terms.iter().map(|((k, d), c)| ExpTerm {
            coeff: c.clone(),
            power: *k,
            freq: d.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest power of `s`, `None` for the zero function.
    pub fn max_power(&self) -> Option<u32> {
        self.terms.keys().map(|(k, _)| *k).max()
    }

    pub fn scale(&self, c: &GaussianRational) -> ExpPoly {
        let mut out = ExpPoly::default();
        for ((k, d), a) in &self.terms {
            out.push(a.mul_ref(c), *k, d.clone());
        }
        out
    }

    /// Formal derivative in `s`.
    pub fn derivative(&self) -> ExpPoly {
        let mut out = ExpPoly::default();
        for ((k, d), c) in &self.terms {
            if *k > 0 {
                out.push(c.scale(&Rational::integer(*k as i64)), k - 1, d.clone());
            }
            if !d.is_zero() {
                out.push(c.mul_ref(&GaussianRational::imag(d.clone())), *k, d.clone());
            }
        }
        out
    }

    /// The antiderivative vanishing at `s = 0`.
    pub fn antiderivative(&self) -> ExpPoly {
        let mut out = ExpPoly::default();
        for ((k, d), c) in &self.terms {
            if d.is_zero() {
                out.push(c.scale(&Rational::new(1, *k as i64 + 1)), k + 1, Rational::zero());
                continue;
            }
            // ∫ s^k e^{ids} = e^{ids} Σ_j (-1)^j k!/(k-j)! s^{k-j} (id)^{-(j+1)}
            let inv = GaussianRational::imag(d.clone()).inv().expect("nonzero frequency");
            let mut inv_pow = inv.clone();
            let mut falling = Rational::one();
            for j in 0..=*k {
                let sign = if j % 2 == 0 { Rational::one() } else { Rational::integer(-1) };
                let coeff = c.mul_ref(&inv_pow).scale(&(&sign * &falling));
                out.push(coeff.clone(), k - j, d.clone());
                if j == *k {
                    // subtract the value at s = 0
                    out.push(coeff.neg_ref(), 0, Rational::zero());
                }
                falling = &falling * &Rational::integer((k - j) as i64);
                inv_pow = inv_pow.mul_ref(&inv);
            }
        }
        out
    }

    pub fn value_at_zero(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for ((k, _), c) in &self.terms {
            if *k == 0 {
                acc.add_assign_ref(c);
            }
        }
        acc
    }

    /// The function `s ↦ f(-s)`.
    pub fn reflect(&self) -> ExpPoly {
        let mut out = ExpPoly::default();
        for ((k, d), c) in &self.terms {
            let c = if k % 2 == 1 { c.neg_ref() } else { c.clone() };
            out.push(c, *k, -d);
        }
        out
    }
}

impl From<Rational> for ExpPoly {
    fn from(r: Rational) -> Self {
        ExpPoly::constant(GaussianRational::real(r))
    }
}

impl From<GaussianRational> for ExpPoly {
    fn from(c: GaussianRational) -> Self {
        ExpPoly::constant(c)
    }
}

impl Ring for ExpPoly {
    fn zero() -> Self {
        ExpPoly::default()
    }
    fn one() -> Self {
        ExpPoly::constant(GaussianRational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for ((k, d), c) in &other.terms {
            self.push(c.clone(), *k, d.clone());
        }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = ExpPoly::default();
        for ((k1, d1), c1) in &self.terms {
            for ((k2, d2), c2) in &other.terms {
                out.push(c1.mul_ref(c2), k1 + k2, d1 + d2);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        ExpPoly {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg_ref())).collect(),
        }
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((k, d), c)| {
                let mut factors = vec![c.to_string()];
                match k {
                    0 => {}
                    1 => factors.push("s".into()),
                    _ => factors.push(format!("s^{k}")),
                }
                if !d.is_zero() {
                    factors.push(format!("e^(i*{d}*s)"));
                }
                if factors.len() > 1 && c.is_one() {
                    factors.remove(0);
                }
                factors.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExpPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::integer(re), Rational::integer(im))
    }

    fn t(re: i64, im: i64, k: u32, d: i64) -> ExpPoly {
        ExpPoly::term(g(re, im), k, Rational::integer(d))
    }

    #[test]
    fn product_adds_powers_and_frequencies() {
        assert_eq!(t(1, 0, 1, 0).mul_ref(&t(1, 0, 0, 2)), t(1, 0, 1, 2));
        let a = t(3, 1, 2, -1).add_ref(&t(0, 2, 0, 4));
        assert_eq!(a.mul_ref(&ExpPoly::one()), a);
        assert_eq!(t(0, 1, 0, 1).mul_ref(&t(0, 1, 0, -1)), t(-1, 0, 0, 0));
    }

    #[test]
    fn antiderivative_examples() {
        assert_eq!(t(1, 0, 0, 0).antiderivative(), t(1, 0, 1, 0));
        assert_eq!(t(1, 0, 0, 1).antiderivative(), t(0, -1, 0, 1).add_ref(&t(0, 1, 0, 0)));
        let expected = t(0, -1, 1, 1).add_ref(&t(1, 0, 0, 1)).add_ref(&t(-1, 0, 0, 0));
        let got = t(1, 0, 1, 1).antiderivative();
        assert_eq!(got, expected);
        assert_eq!(got.derivative(), t(1, 0, 1, 1));
        assert!(got.value_at_zero().is_zero());
    }

    #[test]
    fn reflect_flips_odd_powers_and_frequency() {
        assert_eq!(t(2, 0, 1, 3).reflect(), t(-2, 0, 1, -3));
        assert_eq!(t(2, 0, 2, 3).reflect(), t(2, 0, 2, -3));
    }
}
