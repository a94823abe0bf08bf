use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::exactnum::Rational;

use super::PresentationError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraTag {
    QPlane,
    Sl2,
    Aq,
    Uea,
    Free2,
}

impl FromStr for AlgebraTag {
    type Err = PresentationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "qplane" => Ok(AlgebraTag::QPlane),
            "sl2" => Ok(AlgebraTag::Sl2),
            "aq" => Ok(AlgebraTag::Aq),
            "uea" => Ok(AlgebraTag::Uea),
            "free2" => Ok(AlgebraTag::Free2),
            other => Err(PresentationError::Config(format!(
                "unknown algebra `{other}` (expected qplane, sl2, aq, uea or free2)"
            ))),
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraTag::QPlane => "qplane",
            AlgebraTag::Sl2 => "sl2",
            AlgebraTag::Aq => "aq",
            AlgebraTag::Uea => "uea",
            AlgebraTag::Free2 => "free2",
        })
    }
}

/// Settings read from a `key = value` file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PresentationConfig {
    pub algebra: Option<AlgebraTag>,
    pub q: Option<Rational>,
    pub truncation: Option<usize>,
    pub structure_constants: Option<PathBuf>,
}

impl PresentationConfig {
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut cfg = Self::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: String| PresentationError::Config(format!("line {}: {m}", n + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected `key = value`".into()))?;
            let value = value.trim();
            match key.trim() {
                "algebra" => cfg.algebra = Some(value.parse()?),
                "q" => {
                    let q: Rational = value.parse().map_err(|e| err(format!("q: {e}")))?;
                    if q.is_zero() {
                        return Err(PresentationError::ZeroQ);
                    }
                    cfg.q = Some(q);
                }
                "truncation" => {
                    cfg.truncation = Some(value.parse().map_err(|_| err(format!("bad truncation `{value}`")))?)
                }
                "structure_constants" => cfg.structure_constants = Some(PathBuf::from(value)),
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let cfg = PresentationConfig::parse(
            "# run\nalgebra = uea\nq = 3/2\ntruncation = 4\nstructure_constants = e2.txt\n",
        )
        .unwrap();
        assert_eq!(cfg.algebra, Some(AlgebraTag::Uea));
        assert_eq!(cfg.q, Some(Rational::new(3, 2)));
        assert_eq!(cfg.truncation, Some(4));
        assert_eq!(cfg.structure_constants, Some(PathBuf::from("e2.txt")));
    }

    #[test]
    fn rejects_garbage() {
        assert!(PresentationConfig::parse("algebra = lie").is_err());
        assert!(PresentationConfig::parse("q = 0").is_err());
        assert!(PresentationConfig::parse("colour = red").is_err());
        assert!(PresentationConfig::parse("q 2").is_err());
    }
}
