use std::fmt;
use std::str::FromStr;

use super::{fat_cat_with_c, sqrt_cat, CatError, SeededRandomCat, StayCat, SweepCat, ThinCat};
use crate::game::CatStrategy;
use crate::graph::DistanceOracle;

/// Cat strategy as written on the command line: `fat:c=2.83`, `thin:K=auto`,
/// `thin:K=37`, `sqrt`, `sweep`, `rand:seed=7`, `stay`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CatSpec {
    Fat { c: f64 },
    Thin { k: Option<u32> },
    Sqrt,
    Sweep,
    Random { seed: u64 },
    Stay,
}

impl CatSpec {
    pub fn build(&self, oracle: &DistanceOracle) -> Result<Box<dyn CatStrategy>, CatError> {
        Ok(match *self {
            CatSpec::Fat { c } => Box::new(fat_cat_with_c(oracle, c)?),
            CatSpec::Thin { k } => {
                let k = k.unwrap_or_else(|| ThinCat::auto_k(oracle));
                Box::new(ThinCat::new(oracle, k)?)
            }
            CatSpec::Sqrt => Box::new(sqrt_cat(oracle)?),
            CatSpec::Sweep => Box::new(SweepCat::new(oracle.n())),
            CatSpec::Random { seed } => Box::new(SeededRandomCat::new(oracle.n(), seed)),
            CatSpec::Stay => Box::new(StayCat),
        })
    }

    /// Replaces the seed of seeded strategies; others are unchanged.
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            CatSpec::Random { .. } => CatSpec::Random { seed },
            other => other,
        }
    }

    pub fn is_seeded(&self) -> bool {
        matches!(self, CatSpec::Random { .. })
    }
}

impl FromStr for CatSpec {
    type Err = CatError;

    fn from_str(s: &str) -> Result<Self, CatError> {
        let bad = |reason: String| CatError::InvalidSpec { spec: s.to_string(), reason };
        let (kind, body) = s.split_once(':').unwrap_or((s, ""));
        let kv = crate::graph::spec_key_values(body).map_err(bad)?;
        let allow = |keys: &[&str]| -> Result<(), CatError> {
            match kv.keys().find(|k| !keys.contains(&k.as_str())) {
                Some(k) => Err(bad(format!("unknown key `{k}`"))),
                None => Ok(()),
            }
        };
        let spec = match kind.trim() {
            "fat" => {
                allow(&["c"])?;
                let c = match kv.get("c") {
                    Some(v) => v.parse::<f64>().map_err(|_| bad(format!("bad c `{v}`")))?,
                    None => 8f64.sqrt(),
                };
                if !(c.is_finite() && c > 0.0) {
                    return Err(bad("c must be positive".into()));
                }
                CatSpec::Fat { c }
            }
            "thin" => {
                allow(&["K", "k"])?;
                let k = match kv.get("K").or(kv.get("k")).map(String::as_str) {
                    None | Some("auto") => None,
                    Some(v) => Some(v.parse::<u32>().map_err(|_| bad(format!("bad K `{v}`")))?),
                };
                CatSpec::Thin { k }
            }
            "sqrt" => {
                allow(&[])?;
                CatSpec::Sqrt
            }
            "sweep" => {
                allow(&[])?;
                CatSpec::Sweep
            }
            "stay" => {
                allow(&[])?;
                CatSpec::Stay
            }
            "rand" | "random" => {
                allow(&["seed"])?;
                let seed = match kv.get("seed") {
                    Some(v) => v.parse::<u64>().map_err(|_| bad(format!("bad seed `{v}`")))?,
                    None => 0,
                };
                CatSpec::Random { seed }
            }
            other => return Err(bad(format!("unknown cat `{other}`"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for CatSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatSpec::Fat { c } => write!(f, "fat:c={c}"),
            CatSpec::Thin { k: None } => write!(f, "thin:K=auto"),
            CatSpec::Thin { k: Some(k) } => write!(f, "thin:K={k}"),
            CatSpec::Sqrt => write!(f, "sqrt"),
            CatSpec::Sweep => write!(f, "sweep"),
            CatSpec::Random { seed } => write!(f, "rand:seed={seed}"),
            CatSpec::Stay => write!(f, "stay"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["fat:c=2.83", "thin:K=auto", "thin:K=37", "sqrt", "sweep", "rand:seed=7", "stay"] {
            assert_eq!(s.parse::<CatSpec>().unwrap().to_string(), s);
        }
        assert!("fat:c=-1".parse::<CatSpec>().is_err());
        assert!("sweep:x=1".parse::<CatSpec>().is_err());
        assert!("dog".parse::<CatSpec>().is_err());
    }
}
