use serde::{Deserialize, Serialize};

use super::diagram::Diagram;
use super::morphism::TLMorphism;
use super::TlError;
use crate::qfield::RatFunc;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub coeff: RatFunc,
    pub arcs: Vec<[usize; 2]>,
    pub dots: Vec<u8>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MorphismJson {
    pub source: usize,
    pub target: usize,
    pub eps: i32,
    pub terms: Vec<TermJson>,
}

impl TermJson {
    pub fn from_term(d: &Diagram, c: &RatFunc) -> Self {
        Self {
            coeff: c.clone(),
            arcs: d.arcs().iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
            dots: d.dots().iter().map(|&b| b as u8).collect(),
        }
    }

    pub fn diagram(&self, source: usize, target: usize) -> Result<Diagram, TlError> {
        if self.arcs.iter().flatten().any(|&p| p == 0) {
            return Err(TlError::InvalidDiagram("positions are 1-based".into()));
        }
        if self.dots.iter().any(|&b| b > 1) {
            return Err(TlError::InvalidDiagram("dots are parity bits".into()));
        }
        Diagram::new(
            source,
            target,
            self.arcs.iter().map(|&[i, j]| (i - 1, j - 1)).collect(),
            self.dots.iter().map(|&b| b == 1).collect(),
        )
    }
}

impl From<&TLMorphism> for MorphismJson {
    fn from(f: &TLMorphism) -> Self {
        Self {
            source: f.source(),
            target: f.target(),
            eps: f.eps(),
            terms: f.terms().map(|(d, c)| TermJson::from_term(d, c)).collect(),
        }
    }
}

impl TryFrom<&MorphismJson> for TLMorphism {
    type Error = TlError;
    fn try_from(j: &MorphismJson) -> Result<Self, TlError> {
        if j.eps != 1 && j.eps != -1 {
            return Err(TlError::EpsMismatch);
        }
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((t.diagram(j.source, j.target)?, t.coeff.clone())))
            .collect::<Result<Vec<_>, TlError>>()?;
        TLMorphism::from_terms(j.source, j.target, j.eps, terms)
    }
}

impl TLMorphism {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MorphismJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, TlError> {
        let j: MorphismJson =
            serde_json::from_str(s).map_err(|e| TlError::InvalidDiagram(e.to_string()))?;
        TLMorphism::try_from(&j)
    }
}
