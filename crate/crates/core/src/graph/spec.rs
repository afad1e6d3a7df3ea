use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{gen_family, gen_spider, Family, Graph, GraphError, SpiderSpec};

/// A generator recipe written as a string, e.g. `spider:t=12,extra=0`,
/// `grid:3x4`, `rt:n=100,seed=7`, `path:5`, `cycle:n=10`, `star:3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Spider(SpiderSpec),
    Family { family: Family, seed: u64 },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            GraphSpec::Spider(s) => gen_spider(*s),
            GraphSpec::Family { family, seed } => gen_family(family, *seed),
        }
    }

    pub fn spider(&self) -> Option<SpiderSpec> {
        match self {
            GraphSpec::Spider(s) => Some(*s),
            _ => None,
        }
    }
}

/// Parses `k1=v1,k2=v2` bodies shared by all spec strings.
pub fn spec_key_values(body: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn key_values(spec: &str, body: &str) -> Result<BTreeMap<String, String>, GraphError> {
    spec_key_values(body).map_err(|reason| GraphError::InvalidSpec { spec: spec.to_string(), reason })
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let bad = |reason: String| GraphError::InvalidSpec { spec: s.to_string(), reason };
        let (kind, body) = s.split_once(':').unwrap_or((s, ""));
        let num = |v: &str| v.parse::<usize>().map_err(|_| bad(format!("not an integer: `{v}`")));

        // `path:5` shorthand or `path:n=5`.
        let single_n = |body: &str| -> Result<usize, GraphError> {
            if body.contains('=') {
                let kv = key_values(s, body)?;
                num(kv.get("n").ok_or_else(|| bad("missing n".into()))?)
            } else {
                num(body)
            }
        };
        let spec = match kind.trim() {
            "spider" => {
                let kv = key_values(s, body)?;
                let t = num(kv.get("t").ok_or_else(|| bad("missing t".into()))?)?;
                let extra = kv.get("extra").map(|v| num(v)).transpose()?.unwrap_or(0);
                GraphSpec::Spider(SpiderSpec { t, extra })
            }
            "path" => GraphSpec::Family { family: Family::Path { n: single_n(body)? }, seed: 0 },
            "cycle" => GraphSpec::Family { family: Family::Cycle { n: single_n(body)? }, seed: 0 },
            "star" => {
                let leaves = if body.contains('=') {
                    let kv = key_values(s, body)?;
                    num(kv.get("leaves").ok_or_else(|| bad("missing leaves".into()))?)?
                } else {
                    num(body)?
                };
                GraphSpec::Family { family: Family::Star { leaves }, seed: 0 }
            }
            "grid" => {
                let (r, c) = body.split_once('x').ok_or_else(|| bad("expected RxC".into()))?;
                GraphSpec::Family { family: Family::Grid { rows: num(r)?, cols: num(c)? }, seed: 0 }
            }
            "rt" | "random_tree" => {
                let kv = key_values(s, body)?;
                let n = num(kv.get("n").ok_or_else(|| bad("missing n".into()))?)?;
                let seed = kv.get("seed").map(|v| num(v)).transpose()?.unwrap_or(0) as u64;
                GraphSpec::Family { family: Family::RandomTree { n }, seed }
            }
            other => return Err(bad(format!("unknown graph kind `{other}`"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Spider(s) => write!(f, "spider:t={},extra={}", s.t, s.extra),
            GraphSpec::Family { family, seed } => match family {
                Family::Path { n } => write!(f, "path:{n}"),
                Family::Cycle { n } => write!(f, "cycle:{n}"),
                Family::Star { leaves } => write!(f, "star:{leaves}"),
                Family::Grid { rows, cols } => write!(f, "grid:{rows}x{cols}"),
                Family::RandomTree { n } => write!(f, "rt:n={n},seed={seed}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["spider:t=12,extra=0", "grid:3x4", "rt:n=100,seed=7", "path:5", "cycle:10", "star:3"] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let s: GraphSpec = "spider:t=12".parse().unwrap();
        assert_eq!(s.spider(), Some(SpiderSpec { t: 12, extra: 0 }));
        assert_eq!("path:n=7".parse::<GraphSpec>().unwrap().build().unwrap().n(), 7);
        assert_eq!("grid:3x4".parse::<GraphSpec>().unwrap().build().unwrap().n(), 12);
        assert!("blob:3".parse::<GraphSpec>().is_err());
        assert!("grid:3".parse::<GraphSpec>().is_err());
        assert!("spider:x=1".parse::<GraphSpec>().is_err());
    }
}
