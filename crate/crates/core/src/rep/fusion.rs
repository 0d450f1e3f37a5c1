use std::collections::BTreeMap;
use std::fmt;

use serde::de::{Deserializer, Error as _};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// Multiplicities of the one-dimensional modules L([m]) by integer label m.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FusionVector {
    mult: BTreeMap<i64, u64>,
}

impl FusionVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: i64) -> Self {
        Self::from_pairs([(label, 1)])
    }

    /// Zero multiplicities are dropped; repeated labels add up.
    pub fn from_pairs<I: IntoIterator<Item = (i64, u64)>>(it: I) -> Self {
        let mut v = Self::new();
        for (l, c) in it {
            v.add(l, c);
        }
        v
    }

    pub fn add(&mut self, label: i64, c: u64) {
        if c > 0 {
            *self.mult.entry(label).or_insert(0) += c;
        }
    }

    pub fn get(&self, label: i64) -> u64 {
        self.mult.get(&label).copied().unwrap_or(0)
    }

    /// Pairs in descending label order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.mult.iter().rev().map(|(&l, &c)| (l, c))
    }

    pub fn total(&self) -> u64 {
        self.mult.values().sum()
    }
}

/// L([n]) ⊗ V_m = ⊕_{k=0}^{m} L([n+m-2k]), applied for each irrep in turn.
pub fn fuse(start: &FusionVector, irreps: &[u64]) -> FusionVector {
    let mut cur = start.clone();
    for &m in irreps {
        let mut next = FusionVector::new();
        for (l, c) in cur.iter() {
            for k in 0..=m {
                next.add(l + m as i64 - 2 * k as i64, c);
            }
        }
        cur = next;
    }
    cur
}

/// Σ_m src(m) tgt(m).
pub fn hom_dim(src: &FusionVector, tgt: &FusionVector) -> u64 {
    src.mult.iter().map(|(l, c)| c * tgt.get(*l)).sum()
}

impl fmt::Display for FusionVector {
    /// `{6:1,4:2,-2:1}` in descending label order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (x, (l, c)) in self.iter().enumerate() {
            if x > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}:{c}")?;
        }
        write!(f, "}}")
    }
}

struct Mult<'a>(&'a FusionVector);

impl Serialize for Mult<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.mult.len()))?;
        for (l, c) in self.0.iter() {
            map.serialize_entry(&l.to_string(), &c)?;
        }
        map.end()
    }
}

impl Serialize for FusionVector {
    /// `{"mult":{"2":1,"0":2,"-2":1}}`, labels descending.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(1))?;
        map.serialize_entry("mult", &Mult(self))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for FusionVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            mult: BTreeMap<String, u64>,
        }
        let raw = Raw::deserialize(d)?;
        let mut out = FusionVector::new();
        for (k, c) in raw.mult {
            let l: i64 = k.parse().map_err(D::Error::custom)?;
            if c == 0 {
                return Err(D::Error::custom("multiplicities are positive"));
            }
            out.add(l, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clebsch_gordan_examples() {
        let start = FusionVector::from_pairs([(2, 1), (-2, 1)]);
        let out = fuse(&start, &[2, 2]);
        assert_eq!(out.to_string(), "{6:1,4:2,2:4,0:4,-2:4,-4:2,-6:1}");
        let v2 = fuse(&FusionVector::single(0), &[2]);
        assert_eq!(v2.to_string(), "{2:1,0:1,-2:1}");
        assert_eq!(hom_dim(&fuse(&start, &[2]), &v2), 4);
        assert_eq!(hom_dim(&FusionVector::single(1), &FusionVector::single(-1)), 0);
    }

    #[test]
    fn json_shape() {
        let v = FusionVector::from_pairs([(2, 1), (0, 2), (-2, 1)]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"mult":{"2":1,"0":2,"-2":1}}"#);
        assert_eq!(serde_json::from_str::<FusionVector>(&s).unwrap(), v);
    }
}
