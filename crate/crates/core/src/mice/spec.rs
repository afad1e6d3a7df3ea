use std::fmt;
use std::str::FromStr;

use super::{GreedyAwayMouse, MouseError, RandomWalkMouse, SpiderMouse, StationaryMouse};
use crate::game::MouseStrategy;
use crate::graph::Graph;

/// Mouse strategy as written on the command line: `spider:t=12`,
/// `stationary:seed=1`, `rw:seed=2`, `greedy`, `greedy:seed=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MouseSpec {
    Spider { t: usize },
    Stationary { seed: u64 },
    RandomWalk { seed: u64 },
    Greedy { seed: u64 },
}

impl MouseSpec {
    pub fn build(&self, graph: &Graph) -> Result<Box<dyn MouseStrategy>, MouseError> {
        Ok(match *self {
            MouseSpec::Spider { t } => Box::new(SpiderMouse::new(graph, t)?),
            MouseSpec::Stationary { seed } => Box::new(StationaryMouse::new(seed)),
            MouseSpec::RandomWalk { seed } => Box::new(RandomWalkMouse::new(seed)),
            MouseSpec::Greedy { seed } => Box::new(GreedyAwayMouse::new(seed)),
        })
    }

    /// Replaces the seed of seeded strategies; the spider mouse is unchanged.
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            MouseSpec::Stationary { .. } => MouseSpec::Stationary { seed },
            MouseSpec::RandomWalk { .. } => MouseSpec::RandomWalk { seed },
            MouseSpec::Greedy { .. } => MouseSpec::Greedy { seed },
            spider => spider,
        }
    }

    pub fn is_seeded(&self) -> bool {
        !matches!(self, MouseSpec::Spider { .. })
    }
}

impl FromStr for MouseSpec {
    type Err = MouseError;

    fn from_str(s: &str) -> Result<Self, MouseError> {
        let bad = |reason: String| MouseError::InvalidSpec { spec: s.to_string(), reason };
        let (kind, body) = s.split_once(':').unwrap_or((s, ""));
        let kv = crate::graph::spec_key_values(body).map_err(bad)?;
        let kind = kind.trim();
        let allowed: &[&str] = if kind == "spider" { &["t"] } else { &["seed"] };
        if let Some(k) = kv.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(bad(format!("unknown key `{k}`")));
        }
        let int = |key: &str| -> Result<Option<u64>, MouseError> {
            kv.get(key)
                .map(|v| v.parse::<u64>().map_err(|_| bad(format!("bad {key} `{v}`"))))
                .transpose()
        };
        let seed = || int("seed").map(|s| s.unwrap_or(0));
        Ok(match kind {
            "spider" => {
                let t = int("t")?.ok_or_else(|| bad("missing t".into()))? as usize;
                MouseSpec::Spider { t }
            }
            "stationary" | "stay" => MouseSpec::Stationary { seed: seed()? },
            "rw" | "random_walk" => MouseSpec::RandomWalk { seed: seed()? },
            "greedy" | "greedy_away" => MouseSpec::Greedy { seed: seed()? },
            other => return Err(bad(format!("unknown mouse `{other}`"))),
        })
    }
}

impl fmt::Display for MouseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MouseSpec::Spider { t } => write!(f, "spider:t={t}"),
            MouseSpec::Stationary { seed } => write!(f, "stationary:seed={seed}"),
            MouseSpec::RandomWalk { seed } => write!(f, "rw:seed={seed}"),
            MouseSpec::Greedy { seed } => write!(f, "greedy:seed={seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["spider:t=12", "stationary:seed=1", "rw:seed=2", "greedy:seed=0"] {
            assert_eq!(s.parse::<MouseSpec>().unwrap().to_string(), s);
        }
        assert_eq!("greedy".parse::<MouseSpec>().unwrap(), MouseSpec::Greedy { seed: 0 });
        assert!("spider".parse::<MouseSpec>().is_err());
        assert!("rw:t=3".parse::<MouseSpec>().is_err());
        assert!("owl".parse::<MouseSpec>().is_err());
    }
}
