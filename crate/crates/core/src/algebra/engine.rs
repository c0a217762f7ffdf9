//! Normal-form multiplication.
//!
//! Products are computed in two phases. Upper letters are first moved to the
//! right of lower letters using the cross relations, with toral letters
//! pushed to the middle. The resulting lower and upper words are then
//! rewritten in the per-weight Serre bases.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use super::serre::{SerreBasis, SerreFamily};
use super::{add_into, Element, Letter, NormalMonomial, Parent, Toral};
use crate::error::{Error, Result};
use crate::root_data::{CartanType, Weight};
use crate::scalar::Scalar;

/// Deliberate sign flips in structure constants, used to check that the
/// verification suites notice a wrong algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mutation {
    #[default]
    None,
    /// `e''_i f_j = c f_j e''_i - δ_ij` instead of `+ δ_ij`.
    KashiwaraDelta,
    /// `[e_i, f_j] = -δ_ij (ω_i - ω'_i)/(r_i - s_i)`.
    QuantumCommutator,
    /// `<e_i, f_i> = 1/(r_i - s_i)` instead of `1/(s_i - r_i)`.
    PairingBase,
}

type Terms = Vec<(NormalMonomial, Scalar)>;
type CommuteKey = (Parent, Vec<u8>, Vec<u8>);

/// Cartan data plus the shared caches every computation draws on.
pub struct Engine {
    cartan: CartanType,
    max_height: usize,
    mutation: Mutation,
    serre: RwLock<HashMap<(SerreFamily, Weight), Arc<SerreBasis>>>,
    commute: RwLock<HashMap<CommuteKey, Arc<Terms>>>,
    pairing: crate::pairing::PairingCache,
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("cartan", &self.cartan)
            .field("max_height", &self.max_height)
            .field("mutation", &self.mutation)
            .finish()
    }
}

/// Which half of a triangular decomposition a word belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl Engine {
    pub fn new(cartan: CartanType) -> Self {
        Self::with_options(cartan, 6, Mutation::None)
    }

    pub fn with_options(cartan: CartanType, max_height: usize, mutation: Mutation) -> Self {
        Engine {
            cartan,
            max_height,
            mutation,
            serre: RwLock::new(HashMap::new()),
            commute: RwLock::new(HashMap::new()),
            pairing: Default::default(),
        }
    }

    pub fn cartan(&self) -> &CartanType {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn max_height(&self) -> usize {
        self.max_height
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }

    pub(crate) fn pairing_cache(&self) -> &crate::pairing::PairingCache {
        &self.pairing
    }

    pub fn check_height(&self, beta: &Weight) -> Result<()> {
        let h = beta.height().max(0) as usize;
        if h > self.max_height {
            Err(Error::HeightExceeded {
                height: h,
                limit: self.max_height,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn serre_basis(&self, family: SerreFamily, weight: &Weight) -> Arc<SerreBasis> {
        let key = (family, weight.clone());
        if let Some(b) = self.serre.read().expect("cache lock").get(&key) {
            return b.clone();
        }
        let b = Arc::new(
            SerreBasis::compute(&self.cartan, family, weight)
                .expect("Serre data for valid indices"),
        );
        self.serre
            .write()
            .expect("cache lock")
            .entry(key)
            .or_insert(b)
            .clone()
    }

    /// Ordered basis words of `U⁺_β` (plus side) or `U⁻_{-β}` (minus side)
    /// in the given parent.
    pub fn basis_of_weight_space(
        &self,
        beta: &Weight,
        side: Side,
        parent: Parent,
    ) -> Result<Vec<Vec<u8>>> {
        if beta.0.len() != self.rank() || !beta.is_nonnegative() {
            return Err(Error::BadIndex(format!("{beta} is not in Q+")));
        }
        self.check_height(beta)?;
        let family = match side {
            Side::Plus => parent.upper_family(),
            Side::Minus => parent.lower_family(),
        };
        Ok(self.serre_basis(family, beta).basis.clone())
    }

    // ---- generators -------------------------------------------------------

    pub fn letter(&self, l: Letter, parent: Parent) -> Result<Element> {
        self.cartan.check_index(l.index())?;
        if !l.is_legal_in(parent) {
            return Err(Error::IllegalLetter(format!("{l} is not a letter of {parent}")));
        }
        let rank = self.rank();
        let mut m = NormalMonomial::identity(rank);
        match l {
            Letter::E(i) | Letter::Epp(i) => m.upper.push(i as u8),
            Letter::F(i) | Letter::Fp(i) => m.lower.push(i as u8),
            Letter::W(i, k) => m.toral.w[i] = k,
            Letter::Wp(i, k) => m.toral.wp[i] = k,
        }
        Ok(Element::monomial(parent, m, Scalar::one()))
    }

    fn gen(&self, l: Letter, parent: Parent) -> Element {
        self.letter(l, parent).expect("valid generator")
    }

    pub fn e(&self, i: usize) -> Element {
        self.gen(Letter::E(i), Parent::U)
    }

    pub fn epp(&self, i: usize) -> Element {
        self.gen(Letter::Epp(i), Parent::B)
    }

    pub fn f(&self, i: usize) -> Element {
        self.gen(Letter::F(i), Parent::U)
    }

    pub fn fp(&self, i: usize) -> Element {
        self.gen(Letter::Fp(i), Parent::Bbar)
    }

    pub fn omega(&self, i: usize, k: i64) -> Element {
        self.gen(Letter::W(i, k), Parent::U)
    }

    pub fn omega_p(&self, i: usize, k: i64) -> Element {
        self.gen(Letter::Wp(i, k), Parent::U)
    }

    pub fn one(&self, parent: Parent) -> Element {
        Element::one(parent, self.rank())
    }

    pub fn zero(&self, parent: Parent) -> Element {
        Element::zero(parent, self.rank())
    }

    pub fn scalar(&self, parent: Parent, c: Scalar) -> Element {
        Element::scalar(parent, self.rank(), c)
    }

    /// `ω_ν ω'_μ` as an element.
    pub fn toral(&self, parent: Parent, nu: &Weight, mu: &Weight) -> Element {
        Element::toral(parent, Toral::new(nu.clone(), mu.clone()))
    }

    /// A word in the upper letters of `parent`, unreduced.
    pub fn upper_word(&self, parent: Parent, word: &[u8]) -> Element {
        let mut m = NormalMonomial::identity(self.rank());
        m.upper = word.to_vec();
        self.reduce_terms(parent, vec![(m, Scalar::one())])
    }

    /// A word in the lower letters of `parent`, unreduced.
    pub fn lower_word(&self, parent: Parent, word: &[u8]) -> Element {
        let mut m = NormalMonomial::identity(self.rank());
        m.lower = word.to_vec();
        self.reduce_terms(parent, vec![(m, Scalar::one())])
    }

    /// Product of letters, left to right.
    pub fn normal_form(&self, word: &[Letter], parent: Parent) -> Result<Element> {
        let mut acc = self.one(parent);
        for &l in word {
            let g = self.letter(l, parent)?;
            acc = self.mul(&acc, &g)?;
        }
        Ok(acc)
    }

    // ---- structure constants ---------------------------------------------

    /// Scalar `χ` with `T x = χ x T` for `x` of weight `γ`.
    pub fn toral_char(&self, t: &Toral, gamma: &Weight) -> Scalar {
        let (a, b) = self
            .cartan
            .toral_char(&t.omega(), &t.omega_prime(), gamma);
        Scalar::monomial(a, b)
    }

    fn lower_weight(&self, word: &[u8]) -> Weight {
        Weight::of_word(self.rank(), word).neg()
    }

    fn upper_weight(&self, word: &[u8]) -> Weight {
        Weight::of_word(self.rank(), word)
    }

    /// `r^{<j,i>} s^{-<i,j>}`, the scalar in `e''_i f_j = c f_j e''_i + δ_ij`.
    fn kashiwara_c(&self, i: usize, j: usize) -> (i64, i64) {
        (self.cartan.euler(j, i), -self.cartan.euler(i, j))
    }

    // ---- phase one: cross relations --------------------------------------

    /// A single upper letter `x` times a lower word.
    fn letter_past(&self, parent: Parent, x: u8, lower: &[u8]) -> Terms {
        let rank = self.rank();
        let i = x as usize;
        let mut out = Vec::new();
        match parent {
            Parent::U => {
                let delta_sign = if self.mutation == Mutation::QuantumCommutator {
                    -Scalar::one()
                } else {
                    Scalar::one()
                };
                let denom = self.cartan.r_minus_s(i).inv().expect("r_i != s_i");
                let base = &delta_sign * &denom;
                out.push((
                    NormalMonomial {
                        lower: lower.to_vec(),
                        toral: Toral::identity(rank),
                        upper: vec![x],
                    },
                    Scalar::one(),
                ));
                for p in 0..lower.len() {
                    if lower[p] != x {
                        continue;
                    }
                    let suffix_wt = self.lower_weight(&lower[p + 1..]);
                    let mut word = lower[..p].to_vec();
                    word.extend_from_slice(&lower[p + 1..]);
                    let mut tw = Toral::identity(rank);
                    tw.w[i] = 1;
                    let mut twp = Toral::identity(rank);
                    twp.wp[i] = 1;
                    let cw = &base * &self.toral_char(&tw, &suffix_wt);
                    let cwp = -(&base * &self.toral_char(&twp, &suffix_wt));
                    out.push((
                        NormalMonomial {
                            lower: word.clone(),
                            toral: tw,
                            upper: Vec::new(),
                        },
                        cw,
                    ));
                    out.push((
                        NormalMonomial {
                            lower: word,
                            toral: twp,
                            upper: Vec::new(),
                        },
                        cwp,
                    ));
                }
            }
            Parent::B => {
                let delta = if self.mutation == Mutation::KashiwaraDelta {
                    -Scalar::one()
                } else {
                    Scalar::one()
                };
                let (mut ea, mut eb) = (0i64, 0i64);
                for (p, &j) in lower.iter().enumerate() {
                    if j == x {
                        let mut word = lower[..p].to_vec();
                        word.extend_from_slice(&lower[p + 1..]);
                        out.push((
                            NormalMonomial {
                                lower: word,
                                toral: Toral::identity(rank),
                                upper: Vec::new(),
                            },
                            delta.shift(ea, eb),
                        ));
                    }
                    let (a, b) = self.kashiwara_c(i, j as usize);
                    ea += a;
                    eb += b;
                }
                out.push((
                    NormalMonomial {
                        lower: lower.to_vec(),
                        toral: Toral::identity(rank),
                        upper: vec![x],
                    },
                    Scalar::monomial(ea, eb),
                ));
            }
            Parent::Bbar => {
                // f'_k e_j = c' e_j f'_k + δ_kj with c' = r^{<k,j>} s^{-<j,k>},
                // so e_j f'_k = c'^{-1} f'_k e_j - c'^{-1} δ_kj.
                let (mut ea, mut eb) = (0i64, 0i64);
                for (p, &k) in lower.iter().enumerate() {
                    ea -= self.cartan.euler(k as usize, i);
                    eb += self.cartan.euler(i, k as usize);
                    if k == x {
                        let mut word = lower[..p].to_vec();
                        word.extend_from_slice(&lower[p + 1..]);
                        out.push((
                            NormalMonomial {
                                lower: word,
                                toral: Toral::identity(rank),
                                upper: Vec::new(),
                            },
                            -Scalar::monomial(ea, eb),
                        ));
                    }
                }
                out.push((
                    NormalMonomial {
                        lower: lower.to_vec(),
                        toral: Toral::identity(rank),
                        upper: vec![x],
                    },
                    Scalar::monomial(ea, eb),
                ));
            }
        }
        out
    }

    /// `(upper word) · (lower word)` rewritten as a sum of
    /// `(lower)(toral)(upper)` terms, before any Serre reduction.
    fn commute(&self, parent: Parent, upper: &[u8], lower: &[u8]) -> Arc<Terms> {
        let rank = self.rank();
        if upper.is_empty() || lower.is_empty() {
            return Arc::new(vec![(
                NormalMonomial {
                    lower: lower.to_vec(),
                    toral: Toral::identity(rank),
                    upper: upper.to_vec(),
                },
                Scalar::one(),
            )]);
        }
        let key = (parent, upper.to_vec(), lower.to_vec());
        if let Some(v) = self.commute.read().expect("cache lock").get(&key) {
            return v.clone();
        }
        let (&x, rest) = upper.split_last().expect("nonempty");
        let mut acc: HashMap<NormalMonomial, Scalar> = HashMap::new();
        for (m1, c1) in self.letter_past(parent, x, lower) {
            if c1.is_zero() {
                continue;
            }
            for (m2, c2) in self.commute(parent, rest, &m1.lower).iter() {
                let chi = self.toral_char(&m1.toral, &self.upper_weight(&m2.upper));
                let coef = &(&c1 * c2) * &chi.inv().expect("monomial");
                let mut upper = m2.upper.clone();
                upper.extend_from_slice(&m1.upper);
                let m = NormalMonomial {
                    lower: m2.lower.clone(),
                    toral: m2.toral.mul(&m1.toral),
                    upper,
                };
                let e = acc.entry(m).or_insert_with(Scalar::zero);
                *e = &*e + &coef;
            }
        }
        let mut terms: Terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let terms = Arc::new(terms);
        self.commute
            .write()
            .expect("cache lock")
            .entry(key)
            .or_insert(terms)
            .clone()
    }

    // ---- phase two: Serre reduction --------------------------------------

    fn reduce_word(&self, family: SerreFamily, word: &[u8]) -> Vec<(Vec<u8>, Scalar)> {
        if word.len() < 3 {
            return vec![(word.to_vec(), Scalar::one())];
        }
        let basis = self.serre_basis(family, &Weight::of_word(self.rank(), word));
        if basis.is_free() {
            return vec![(word.to_vec(), Scalar::one())];
        }
        basis
            .reduce(word)
            .into_iter()
            .map(|(k, c)| (basis.basis[k].clone(), c))
            .collect()
    }

    fn reduce_into(
        &self,
        parent: Parent,
        m: NormalMonomial,
        c: Scalar,
        out: &mut BTreeMap<NormalMonomial, Scalar>,
    ) {
        let lows = self.reduce_word(parent.lower_family(), &m.lower);
        let ups = self.reduce_word(parent.upper_family(), &m.upper);
        if lows.len() == 1 && ups.len() == 1 && lows[0].1.is_one() && ups[0].1.is_one() {
            add_into(out, m, c);
            return;
        }
        for (lw, lc) in &lows {
            for (uw, uc) in &ups {
                add_into(
                    out,
                    NormalMonomial {
                        lower: lw.clone(),
                        toral: m.toral.clone(),
                        upper: uw.clone(),
                    },
                    &(&c * lc) * uc,
                );
            }
        }
    }

    /// Rewrite arbitrary `(lower)(toral)(upper)` terms in the Serre bases.
    pub fn reduce_terms(&self, parent: Parent, terms: Terms) -> Element {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            self.reduce_into(parent, m, c, &mut out);
        }
        Element::from_terms(parent, self.rank(), out)
    }

    /// Product of two normal monomials, optionally dropping terms whose
    /// upper word is longer than `cutoff`.
    fn mul_monomials_into(
        &self,
        parent: Parent,
        a: &NormalMonomial,
        b: &NormalMonomial,
        coef: &Scalar,
        cutoff: Option<usize>,
        out: &mut BTreeMap<NormalMonomial, Scalar>,
    ) {
        for (m, c) in self.commute(parent, &a.upper, &b.lower).iter() {
            let up_len = m.upper.len() + b.upper.len();
            if cutoff.is_some_and(|h| up_len > h) {
                continue;
            }
            let chi1 = self.toral_char(&a.toral, &self.lower_weight(&m.lower));
            let chi2 = self.toral_char(&b.toral, &self.upper_weight(&m.upper));
            let k = &(&(coef * c) * &chi1) * &chi2.inv().expect("monomial");
            let mut lower = a.lower.clone();
            lower.extend_from_slice(&m.lower);
            let mut upper = m.upper.clone();
            upper.extend_from_slice(&b.upper);
            let mono = NormalMonomial {
                lower,
                toral: a.toral.mul(&m.toral).mul(&b.toral),
                upper,
            };
            self.reduce_into(parent, mono, k, out);
        }
    }

    fn unify(&self, a: &Element, b: &Element) -> Result<(Element, Element)> {
        if a.parent() == b.parent() {
            return Ok((a.clone(), b.clone()));
        }
        if let Ok(b2) = b.reparent(a.parent()) {
            return Ok((a.clone(), b2));
        }
        if let Ok(a2) = a.reparent(b.parent()) {
            return Ok((a2, b.clone()));
        }
        Err(Error::IncompatibleParents(format!(
            "cannot multiply {} by {}",
            a.parent(),
            b.parent()
        )))
    }

    /// Product of two normal monomials of the same parent.
    pub fn mul_monomials(&self, parent: Parent, a: &NormalMonomial, b: &NormalMonomial) -> Element {
        let mut out = BTreeMap::new();
        self.mul_monomials_into(parent, a, b, &Scalar::one(), None, &mut out);
        Element::from_terms(parent, self.rank(), out)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.mul_truncated(a, b, None)
    }

    /// Product keeping only terms whose upper word has length at most
    /// `cutoff`.
    pub fn mul_truncated(&self, a: &Element, b: &Element, cutoff: Option<usize>) -> Result<Element> {
        let (a, b) = self.unify(a, b)?;
        let parent = a.parent();
        let mut out = BTreeMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                self.mul_monomials_into(parent, ma, mb, &(ca * cb), cutoff, &mut out);
            }
        }
        Ok(Element::from_terms(parent, self.rank(), out))
    }

    /// Product of several elements, left to right.
    pub fn product(&self, parent: Parent, factors: &[&Element]) -> Result<Element> {
        let mut acc = self.one(parent);
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, x: &Element, n: usize) -> Result<Element> {
        let mut acc = self.one(x.parent());
        for _ in 0..n {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        self.mul(a, b)?.sub(&self.mul(b, a)?)
    }

    /// Serre element for `(i, j)` built letter by letter in `parent`, with
    /// `family` picking the word order and `upper` the letter kind.
    pub fn serre_relation(
        &self,
        parent: Parent,
        family: SerreFamily,
        upper: bool,
        i: usize,
        j: usize,
    ) -> Result<Element> {
        self.cartan.check_index(i)?;
        self.cartan.check_index(j)?;
        if i == j {
            return Err(Error::BadIndex(format!("Serre relation needs i != j, got {}", i + 1)));
        }
        let letter = |k: usize| match (parent, upper) {
            (Parent::B, true) => Letter::Epp(k),
            (_, true) => Letter::E(k),
            (Parent::Bbar, false) => Letter::Fp(k),
            (_, false) => Letter::F(k),
        };
        let mut acc = self.zero(parent);
        for (word, c) in super::serre::serre_element(&self.cartan, family, i, j)? {
            let letters: Vec<Letter> = word.iter().map(|&k| letter(k as usize)).collect();
            acc = acc.add(&self.normal_form(&letters, parent)?.scale(&c))?;
        }
        Ok(acc)
    }

    /// Closed form of `e''_i^n f_j^m` in `B`: for `i = j`
    /// `Σ_ν q^{(n-ν)(m-ν)} [n ν]_q (m)_q!/(m-ν)_q! f^{m-ν} e''^{n-ν}` with
    /// `q = r_i s_i^{-1}`, otherwise `r^{nm<j,i>} s^{-nm<i,j>} f_j^m e''_i^n`.
    pub fn commutation_lemma(&self, n: usize, m: usize, i: usize, j: usize) -> Result<Element> {
        self.cartan.check_index(i)?;
        self.cartan.check_index(j)?;
        let rank = self.rank();
        let mono = |low: usize, up: usize| {
            let mut t = NormalMonomial::identity(rank);
            t.lower = vec![j as u8; low];
            t.upper = vec![i as u8; up];
            t
        };
        let mut out = self.zero(Parent::B);
        if i != j {
            let (a, b) = self.kashiwara_c(i, j);
            let k = (n * m) as i64;
            out.add_term(mono(m, n), Scalar::monomial(a * k, b * k));
            return Ok(out);
        }
        let q = self.cartan.q(i);
        for nu in 0..=n.min(m) {
            let e = ((n - nu) * (m - nu)) as i64;
            let c = q.pow(e)?
                * crate::root_data::q_binomial(n as i64, nu as i64, &q)?
                * crate::root_data::q_factorial(m as i64, &q)
                    .checked_div(&crate::root_data::q_factorial((m - nu) as i64, &q))?;
            out.add_term(mono(m - nu, n - nu), c);
        }
        Ok(out)
    }
}
