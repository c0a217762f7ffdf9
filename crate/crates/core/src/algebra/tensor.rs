//! Finite sums of tensor products of normal monomials.

use std::collections::BTreeMap;
use std::fmt;

use super::{fmt_term, join_terms, Element, Engine, NormalMonomial, Parent};
use crate::error::{Error, Result};
use crate::root_data::Weight;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    parents: Vec<Parent>,
    rank: usize,
    terms: BTreeMap<Vec<NormalMonomial>, Scalar>,
}

impl TensorElement {
    pub fn zero(parents: &[Parent], rank: usize) -> Self {
        TensorElement {
            parents: parents.to_vec(),
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(parents: &[Parent], rank: usize) -> Self {
        let mut t = Self::zero(parents, rank);
        t.add_term(vec![NormalMonomial::identity(rank); parents.len()], Scalar::one());
        t
    }

    /// `a_1 ⊗ a_2 ⊗ ...`
    pub fn pure(factors: &[&Element]) -> Self {
        let rank = factors.first().map_or(0, |e| e.rank());
        let parents: Vec<Parent> = factors.iter().map(|e| e.parent()).collect();
        let mut acc: Vec<(Vec<NormalMonomial>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::with_capacity(acc.len() * f.len());
            for (ms, c) in &acc {
                for (m, d) in f.terms() {
                    let mut ms = ms.clone();
                    ms.push(m.clone());
                    next.push((ms, c * d));
                }
            }
            acc = next;
        }
        let mut t = Self::zero(&parents, rank);
        for (ms, c) in acc {
            t.add_term(ms, c);
        }
        t
    }

    pub fn parents(&self) -> &[Parent] {
        &self.parents
    }

    pub fn arity(&self) -> usize {
        self.parents.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<NormalMonomial>, Scalar> {
        &self.terms
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

    pub fn add_term(&mut self, ms: Vec<NormalMonomial>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ms) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.parents, self.rank);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    /// Reinterpret each leg in the matching parent of `to`.
    pub fn reparent(&self, to: &[Parent]) -> Result<Self> {
        if to == self.parents.as_slice() {
            return Ok(self.clone());
        }
        if to.len() != self.arity() {
            return Err(Error::IncompatibleParents(format!(
                "arity {} against {}",
                self.arity(),
                to.len()
            )));
        }
        for ms in self.terms.keys() {
            for (k, m) in ms.iter().enumerate() {
                if !m.is_legal_in(self.parents[k], to[k]) {
                    return Err(Error::IncompatibleParents(format!(
                        "leg {} term {} of {} has no image in {}",
                        k + 1,
                        m.display(self.parents[k]),
                        self.parents[k],
                        to[k]
                    )));
                }
            }
        }
        Ok(TensorElement {
            parents: to.to_vec(),
            rank: self.rank,
            terms: self.terms.clone(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let other = other.reparent(&self.parents)?;
        let mut out = self.clone();
        for (m, c) in other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Reorder legs: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let parents: Vec<Parent> = perm.iter().map(|&k| self.parents[k]).collect();
        let mut out = Self::zero(&parents, self.rank);
        for (ms, c) in &self.terms {
            out.add_term(perm.iter().map(|&k| ms[k].clone()).collect(), c.clone());
        }
        out
    }

    /// `σ` on a two-leg tensor.
    pub fn flip(&self) -> Self {
        self.permute(&[1, 0])
    }

    /// Apply a linear map to one leg. `to` is the parent of the images.
    pub fn map_leg<F>(&self, k: usize, to: Parent, mut f: F) -> Result<Self>
    where
        F: FnMut(&Element) -> Result<Element>,
    {
        let mut parents = self.parents.clone();
        parents[k] = to;
        let mut out = Self::zero(&parents, self.rank);
        let mut cache: BTreeMap<NormalMonomial, Element> = BTreeMap::new();
        for (ms, c) in &self.terms {
            let img = match cache.get(&ms[k]) {
                Some(x) => x.clone(),
                None => {
                    let x = f(&Element::monomial(self.parents[k], ms[k].clone(), Scalar::one()))?
                        .reparent(to)?;
                    cache.insert(ms[k].clone(), x.clone());
                    x
                }
            };
            for (m, d) in img.terms() {
                let mut ms = ms.clone();
                ms[k] = m.clone();
                out.add_term(ms, c * d);
            }
        }
        Ok(out)
    }

    /// Keep terms whose legs satisfy `keep`.
    pub fn filter<F: Fn(&[NormalMonomial]) -> bool>(&self, keep: F) -> Self {
        let mut out = Self::zero(&self.parents, self.rank);
        for (ms, c) in &self.terms {
            if keep(ms) {
                out.terms.insert(ms.clone(), c.clone());
            }
        }
        out
    }

    /// Split by the upper-word weight of leg `k`.
    pub fn grades_by_upper(&self, k: usize) -> BTreeMap<Weight, TensorElement> {
        let mut out: BTreeMap<Weight, TensorElement> = BTreeMap::new();
        for (ms, c) in &self.terms {
            out.entry(ms[k].upper_weight())
                .or_insert_with(|| Self::zero(&self.parents, self.rank))
                .terms
                .insert(ms.clone(), c.clone());
        }
        out
    }

    /// Split by the lower-word weight of leg `k`.
    pub fn grades_by_lower(&self, k: usize) -> BTreeMap<Weight, TensorElement> {
        let mut out: BTreeMap<Weight, TensorElement> = BTreeMap::new();
        for (ms, c) in &self.terms {
            out.entry(ms[k].lower_weight())
                .or_insert_with(|| Self::zero(&self.parents, self.rank))
                .terms
                .insert(ms.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parents = &self.parents;
        f.write_str(&join_terms(self.terms.iter().map(|(ms, c)| {
            let legs: Vec<String> = ms
                .iter()
                .zip(parents)
                .map(|(m, p)| m.display(*p))
                .collect();
            fmt_term(c, &format!("({})", legs.join(" ⊗ ")))
        })))
    }
}

impl Engine {
    /// Leg-wise product.
    pub fn tensor_mul(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        if a.arity() != b.arity() {
            return Err(Error::IncompatibleParents(format!(
                "tensor arities {} and {}",
                a.arity(),
                b.arity()
            )));
        }
        let mut parents = a.parents.clone();
        let b = match b.reparent(&a.parents) {
            Ok(b) => b,
            Err(_) => {
                parents = b.parents.clone();
                b.clone()
            }
        };
        let a = a.reparent(&parents)?;
        let mut out = TensorElement::zero(&parents, self.rank());
        let mut cache: Vec<BTreeMap<(NormalMonomial, NormalMonomial), Element>> =
            vec![BTreeMap::new(); parents.len()];
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let legs: Vec<Element> = (0..parents.len())
                    .map(|k| {
                        let key = (ma[k].clone(), mb[k].clone());
                        cache[k]
                            .entry(key)
                            .or_insert_with(|| self.mul_monomials(parents[k], &ma[k], &mb[k]))
                            .clone()
                    })
                    .collect();
                if legs.iter().any(Element::is_zero) {
                    continue;
                }
                let refs: Vec<&Element> = legs.iter().collect();
                let prod = TensorElement::pure(&refs);
                let c = ca * cb;
                for (ms, d) in prod.terms {
                    out.add_term(ms, &c * &d);
                }
            }
        }
        Ok(out)
    }

    /// Multiply the legs together in order, inside `parent`.
    pub fn contract(&self, t: &TensorElement, parent: Parent) -> Result<Element> {
        let mut acc = self.zero(parent);
        for (ms, c) in &t.terms {
            let mut x = self.scalar(parent, c.clone());
            for (m, p) in ms.iter().zip(&t.parents) {
                let leg = Element::monomial(*p, m.clone(), Scalar::one()).reparent(parent)?;
                x = self.mul(&x, &leg)?;
            }
            acc = acc.add(&x)?;
        }
        Ok(acc)
    }
}
