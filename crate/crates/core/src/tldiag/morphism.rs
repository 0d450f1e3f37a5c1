use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::diagram::{Diagram, Stacked};
use super::TlError;
use rayon::prelude::*;

use crate::qfield::batch::{Batch, IntLaurent};
use crate::qfield::RatFunc;

/// A Q(q)-linear combination of diagrams in Hom(source, target) at loop sign `eps`.
///
/// No stored coefficient is zero; the zero morphism has no terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TLMorphism {
    source: usize,
    target: usize,
    eps: i32,
    terms: BTreeMap<Diagram, RatFunc>,
}

impl TLMorphism {
    pub fn zero(source: usize, target: usize, eps: i32) -> Self {
        assert!(eps == 1 || eps == -1, "eps must be 1 or -1");
        Self { source, target, eps, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: Diagram, eps: i32) -> Self {
        let mut out = Self::zero(d.bottom(), d.top(), eps);
        out.terms.insert(d, RatFunc::one());
        out
    }

    /// Builds a morphism from terms; shapes must agree, zero coefficients are dropped.
    pub fn from_terms<I: IntoIterator<Item = (Diagram, RatFunc)>>(
        source: usize,
        target: usize,
        eps: i32,
        terms: I,
    ) -> Result<Self, TlError> {
        let mut out = Self::zero(source, target, eps);
        for (d, c) in terms {
            if d.bottom() != source || d.top() != target {
                return Err(TlError::ShapeMismatch { left: source, right: d.bottom() });
            }
            out.add_term(d, &c);
        }
        Ok(out)
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn eps(&self) -> i32 {
        self.eps
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &Diagram) -> RatFunc {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    /// Scalar of an endomorphism of the empty object.
    pub fn scalar(&self) -> Option<RatFunc> {
        (self.source == 0 && self.target == 0).then(|| self.coefficient(&Diagram::identity(0)))
    }

    pub fn add_term(&mut self, d: Diagram, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.source, self.target, self.eps);
        }
        let terms = self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect();
        Self { terms, ..self.shape() }
    }

    fn shape(&self) -> Self {
        Self::zero(self.source, self.target, self.eps)
    }

    fn check_same(&self, other: &Self) -> Result<(), TlError> {
        if self.eps != other.eps {
            return Err(TlError::EpsMismatch);
        }
        if self.source != other.source || self.target != other.target {
            return Err(TlError::ShapeMismatch { left: self.source, right: other.source });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, TlError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    /// `other` stacked on top of `self`: apply `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self, TlError> {
        if self.eps != other.eps {
            return Err(TlError::EpsMismatch);
        }
        if self.target != other.source {
            return Err(TlError::ShapeMismatch { left: self.target, right: other.source });
        }
        let mut out = Self::zero(self.source, other.target, self.eps);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        // all coefficient arithmetic over one common denominator per factor
        let fb = Batch::new(self.terms.values());
        let gb = Batch::new(other.terms.values());
        let fterms: Vec<(&Diagram, &IntLaurent)> = self.terms.keys().zip(&fb.nums).collect();
        let gterms: Vec<(&Diagram, &IntLaurent)> = other.terms.keys().zip(&gb.nums).collect();
        let loop_sign = -self.eps;
        let chunk = fterms.len().div_ceil(rayon::current_num_threads() * 4).max(1);
        let partials = fterms
            .par_chunks(chunk)
            .map(|part| {
                let mut acc: BTreeMap<Diagram, IntLaurent> = BTreeMap::new();
                let mut delta_pow: Vec<IntLaurent> = Vec::new();
                for &(f, nf) in part {
                    for &(g, ng) in &gterms {
                        let Stacked::Diagram(d, loops) = f.stack(g)? else {
                            continue;
                        };
                        let mut prod = nf.mul(ng);
                        if loops > 0 {
                            while delta_pow.len() <= loops {
                                delta_pow.push(IntLaurent::qsum_power(delta_pow.len(), loop_sign.pow(delta_pow.len() as u32)));
                            }
                            prod = prod.mul(&delta_pow[loops]);
                        }
                        *acc.entry(d).or_default() += &prod;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>, TlError>>()?;
        let mut total: BTreeMap<Diagram, IntLaurent> = BTreeMap::new();
        for part in partials {
            for (d, x) in part {
                *total.entry(d).or_default() += &x;
            }
        }
        for (d, num) in total {
            if num.is_zero() {
                continue;
            }
            let c = fb.product_value(&gb, &num);
            if !c.is_zero() {
                out.terms.insert(d, c);
            }
        }
        Ok(out)
    }

    /// Algebra product `self · other` = `other` first, then `self`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, TlError> {
        other.compose(self)
    }

    pub fn tensor_right_identity(&self, r: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (d.tensor_right_identity(r), c.clone()))
            .collect();
        Self { source: self.source + r, target: self.target + r, eps: self.eps, terms }
    }

    /// Juxtaposition `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Result<Self, TlError> {
        if self.eps != other.eps {
            return Err(TlError::EpsMismatch);
        }
        let mut out = Self::zero(self.source + other.source, self.target + other.target, self.eps);
        for (f, cf) in &self.terms {
            for (g, cg) in &other.terms {
                out.add_term(f.tensor(g)?, &(cf * cg));
            }
        }
        Ok(out)
    }

    /// The involution s0 ↦ -s0, U_i ↦ U_i: negates odd-dot diagrams.
    pub fn sigma(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (d.clone(), if d.dot_count() % 2 == 1 { -c } else { c.clone() }))
            .collect();
        Self { terms, ..self.shape() }
    }

    /// Every diagram carries an even number of dots.
    pub fn is_type_d(&self) -> bool {
        self.terms.keys().all(|d| d.dot_count() % 2 == 0)
    }
}

/// Panics on shape or eps mismatch.
impl Add for &TLMorphism {
    type Output = TLMorphism;
    fn add(self, rhs: &TLMorphism) -> TLMorphism {
        self.try_add(rhs).expect("morphism shape mismatch")
    }
}

impl Neg for &TLMorphism {
    type Output = TLMorphism;
    fn neg(self) -> TLMorphism {
        self.scale(&RatFunc::from_int(-1))
    }
}

/// Panics on shape or eps mismatch.
impl Sub for &TLMorphism {
    type Output = TLMorphism;
    fn sub(self, rhs: &TLMorphism) -> TLMorphism {
        self + &(-rhs)
    }
}

/// Algebra product; panics on shape mismatch or a closure violation.
impl Mul for &TLMorphism {
    type Output = TLMorphism;
    fn mul(self, rhs: &TLMorphism) -> TLMorphism {
        self.try_mul(rhs).expect("morphism product failed")
    }
}

impl Mul<&TLMorphism> for &RatFunc {
    type Output = TLMorphism;
    fn mul(self, rhs: &TLMorphism) -> TLMorphism {
        rhs.scale(self)
    }
}
