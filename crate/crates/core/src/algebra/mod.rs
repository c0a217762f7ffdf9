//! Elements of `U`, `B` and `B̄` in triangular normal form.

mod engine;
pub mod relations;
pub mod serre;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;

pub use engine::{Engine, Mutation, Side};
pub use serre::{SerreBasis, SerreFamily};
pub use tensor::TensorElement;

use crate::error::{Error, Result};
use crate::root_data::Weight;
use crate::scalar::Scalar;

/// Which algebra an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parent {
    /// `U`: lower letters `f`, upper letters `e`.
    U,
    /// `B`: lower letters `f`, upper letters `e''`.
    B,
    /// `B̄`: lower letters `f'`, upper letters `e`.
    Bbar,
}

impl Parent {
    pub fn lower_family(self) -> SerreFamily {
        match self {
            Parent::U | Parent::B => SerreFamily::Leading,
            Parent::Bbar => SerreFamily::Trailing,
        }
    }

    pub fn upper_family(self) -> SerreFamily {
        match self {
            Parent::B => SerreFamily::Leading,
            Parent::U | Parent::Bbar => SerreFamily::Trailing,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parent::U => "U",
            Parent::B => "B",
            Parent::Bbar => "Bbar",
        }
    }
}

impl fmt::Display for Parent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single generator letter; indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    E(usize),
    Epp(usize),
    F(usize),
    Fp(usize),
    /// `ω_i^k`
    W(usize, i64),
    /// `ω'_i^k`
    Wp(usize, i64),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::E(i) | Letter::Epp(i) | Letter::F(i) | Letter::Fp(i) => i,
            Letter::W(i, _) | Letter::Wp(i, _) => i,
        }
    }

    pub fn is_legal_in(self, parent: Parent) -> bool {
        match self {
            Letter::W(..) | Letter::Wp(..) => true,
            Letter::E(_) => matches!(parent, Parent::U | Parent::Bbar),
            Letter::F(_) => matches!(parent, Parent::U | Parent::B),
            Letter::Epp(_) => parent == Parent::B,
            Letter::Fp(_) => parent == Parent::Bbar,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::E(i) => write!(f, "e[{}]", i + 1),
            Letter::Epp(i) => write!(f, "E[{}]", i + 1),
            Letter::F(i) => write!(f, "f[{}]", i + 1),
            Letter::Fp(i) => write!(f, "P[{}]", i + 1),
            Letter::W(i, k) => fmt_toral(f, 'w', i, k),
            Letter::Wp(i, k) => fmt_toral(f, 'v', i, k),
        }
    }
}

fn fmt_toral(f: &mut fmt::Formatter<'_>, c: char, i: usize, k: i64) -> fmt::Result {
    if k == 1 {
        write!(f, "{c}[{}]", i + 1)
    } else {
        write!(f, "{c}[{}]^{k}", i + 1)
    }
}

/// `ω_ν ω'_μ`, stored as the exponent vectors `ν` and `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Toral {
    pub w: Vec<i64>,
    pub wp: Vec<i64>,
}

impl Toral {
    pub fn identity(rank: usize) -> Self {
        Toral {
            w: vec![0; rank],
            wp: vec![0; rank],
        }
    }

    pub fn new(w: Weight, wp: Weight) -> Self {
        Toral { w: w.0, wp: wp.0 }
    }

    pub fn is_identity(&self) -> bool {
        self.w.iter().chain(&self.wp).all(|&k| k == 0)
    }

    pub fn mul(&self, other: &Toral) -> Toral {
        Toral {
            w: self.w.iter().zip(&other.w).map(|(a, b)| a + b).collect(),
            wp: self.wp.iter().zip(&other.wp).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> Toral {
        Toral {
            w: self.w.iter().map(|a| -a).collect(),
            wp: self.wp.iter().map(|a| -a).collect(),
        }
    }

    pub fn omega(&self) -> Weight {
        Weight(self.w.clone())
    }

    pub fn omega_prime(&self) -> Weight {
        Weight(self.wp.clone())
    }
}

/// `(lower word)(toral)(upper word)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalMonomial {
    pub lower: Vec<u8>,
    pub toral: Toral,
    pub upper: Vec<u8>,
}

impl NormalMonomial {
    pub fn identity(rank: usize) -> Self {
        NormalMonomial {
            lower: Vec::new(),
            toral: Toral::identity(rank),
            upper: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.toral.w.len()
    }

    pub fn is_identity(&self) -> bool {
        self.lower.is_empty() && self.upper.is_empty() && self.toral.is_identity()
    }

    pub fn lower_weight(&self) -> Weight {
        Weight::of_word(self.rank(), &self.lower)
    }

    pub fn upper_weight(&self) -> Weight {
        Weight::of_word(self.rank(), &self.upper)
    }

    /// Total weight: upper letters count `+α_i`, lower letters `-α_i`.
    pub fn weight(&self) -> Weight {
        self.upper_weight().sub(&self.lower_weight())
    }

    pub fn letters(&self, parent: Parent) -> Vec<Letter> {
        let lower = |i: u8| match parent {
            Parent::Bbar => Letter::Fp(i as usize),
            _ => Letter::F(i as usize),
        };
        let upper = |i: u8| match parent {
            Parent::B => Letter::Epp(i as usize),
            _ => Letter::E(i as usize),
        };
        let mut out: Vec<Letter> = self.lower.iter().map(|&i| lower(i)).collect();
        for (i, &k) in self.toral.w.iter().enumerate() {
            if k != 0 {
                out.push(Letter::W(i, k));
            }
        }
        for (i, &k) in self.toral.wp.iter().enumerate() {
            if k != 0 {
                out.push(Letter::Wp(i, k));
            }
        }
        out.extend(self.upper.iter().map(|&i| upper(i)));
        out
    }

    pub fn display(&self, parent: Parent) -> String {
        let parts: Vec<String> = self.letters(parent).iter().map(|l| l.to_string()).collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Can this monomial be read in `parent`?
    pub fn is_legal_in(&self, from: Parent, to: Parent) -> bool {
        if from == to {
            return true;
        }
        let lower_ok = self.lower.is_empty() || (from == Parent::Bbar) == (to == Parent::Bbar);
        let upper_ok = self.upper.is_empty() || (from == Parent::B) == (to == Parent::B);
        lower_ok && upper_ok
    }
}

/// A finite linear combination of normal monomials in one parent algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    parent: Parent,
    rank: usize,
    terms: BTreeMap<NormalMonomial, Scalar>,
}

impl Element {
    pub fn zero(parent: Parent, rank: usize) -> Self {
        Element {
            parent,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(parent: Parent, rank: usize) -> Self {
        Self::monomial(parent, NormalMonomial::identity(rank), Scalar::one())
    }

    pub fn scalar(parent: Parent, rank: usize, c: Scalar) -> Self {
        Self::monomial(parent, NormalMonomial::identity(rank), c)
    }

    pub fn monomial(parent: Parent, m: NormalMonomial, c: Scalar) -> Self {
        let rank = m.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element {
            parent,
            rank,
            terms,
        }
    }

    pub fn toral(parent: Parent, t: Toral) -> Self {
        Self::monomial(
            parent,
            NormalMonomial {
                lower: Vec::new(),
                toral: t,
                upper: Vec::new(),
            },
            Scalar::one(),
        )
    }

    pub(crate) fn from_terms(
        parent: Parent,
        rank: usize,
        terms: BTreeMap<NormalMonomial, Scalar>,
    ) -> Self {
        Element {
            parent,
            rank,
            terms,
        }
    }

    pub fn parent(&self) -> Parent {
        self.parent
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<NormalMonomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<NormalMonomial, Scalar> {
        self.terms
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

    pub fn coefficient(&self, m: &NormalMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the identity monomial.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&NormalMonomial::identity(self.rank))
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: Scalar) {
        add_into(&mut self.terms, m, c);
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        let other = other.reparent(self.parent)?;
        let mut out = self.clone();
        for (m, c) in other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.parent, self.rank);
        }
        Element {
            parent: self.parent,
            rank: self.rank,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Reinterpret in another parent when every monomial is legal there
    /// (e.g. `U⁻T ⊂ U` and `B⁻T ⊂ B` share their lower letters).
    pub fn reparent(&self, to: Parent) -> Result<Element> {
        if self.parent == to {
            return Ok(self.clone());
        }
        if let Some(m) = self.terms.keys().find(|m| !m.is_legal_in(self.parent, to)) {
            return Err(Error::IncompatibleParents(format!(
                "{} in {} has no image in {}",
                m.display(self.parent),
                self.parent,
                to
            )));
        }
        Ok(Element {
            parent: to,
            rank: self.rank,
            terms: self.terms.clone(),
        })
    }

    /// Common weight of every monomial.
    pub fn weight(&self) -> Result<Weight> {
        let mut it = self.terms.keys().map(NormalMonomial::weight);
        let Some(first) = it.next() else {
            return Ok(Weight(vec![0; self.rank]));
        };
        if it.all(|w| w == first) {
            Ok(first)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Keep only terms whose upper word has height at most `h`.
    pub fn truncate_upper(&self, h: usize) -> Element {
        Element {
            parent: self.parent,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.upper.len() <= h)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Split by upper-word weight.
    pub fn grades(&self) -> BTreeMap<Weight, Element> {
        let mut out: BTreeMap<Weight, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.upper_weight())
                .or_insert_with(|| Element::zero(self.parent, self.rank))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Does any monomial carry a nontrivial toral factor?
    pub fn has_toral_letters(&self) -> bool {
        self.terms.keys().any(|m| !m.toral.is_identity())
    }
}

pub(crate) fn add_into(map: &mut BTreeMap<NormalMonomial, Scalar>, m: NormalMonomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
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

/// Format `c * body` so that the result parses back to the same value.
pub(crate) fn fmt_term(c: &Scalar, body: &str) -> String {
    let cs = c.to_string();
    let is_identity = body == "1";
    if is_identity {
        return if cs.contains(' ') { format!("({cs})") } else { cs };
    }
    if c.is_one() {
        return body.to_string();
    }
    if (-c).is_one() {
        return format!("-{body}");
    }
    if cs.contains(' ') || cs.contains('/') {
        format!("({cs})*{body}")
    } else {
        format!("{cs}*{body}")
    }
}

pub(crate) fn join_terms<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parent = self.parent;
        f.write_str(&join_terms(
            self.terms.iter().map(|(m, c)| fmt_term(c, &m.display(parent))),
        ))
    }
}
