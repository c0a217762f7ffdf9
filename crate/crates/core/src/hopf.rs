//! Coproducts, counit, antipode, the anti-isomorphism `φ: B̄ → B` and the
//! automorphism `Ψ` of `U`.

use crate::algebra::{Element, Engine, Letter, Parent, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The four coproduct-like homomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coproduct {
    /// `Δ: U → U ⊗ U`
    Standard,
    /// `Δ^(r): B → B ⊗ U`
    Right,
    /// `Δ^(l): B̄ → U ⊗ B̄`
    Left,
    /// `Δ^(b): U → B̄ ⊗ B`
    Bottom,
}

impl Coproduct {
    pub const ALL: [Coproduct; 4] = [
        Coproduct::Standard,
        Coproduct::Right,
        Coproduct::Left,
        Coproduct::Bottom,
    ];

    pub fn source(self) -> Parent {
        match self {
            Coproduct::Standard | Coproduct::Bottom => Parent::U,
            Coproduct::Right => Parent::B,
            Coproduct::Left => Parent::Bbar,
        }
    }

    pub fn targets(self) -> [Parent; 2] {
        match self {
            Coproduct::Standard => [Parent::U, Parent::U],
            Coproduct::Right => [Parent::B, Parent::U],
            Coproduct::Left => [Parent::U, Parent::Bbar],
            Coproduct::Bottom => [Parent::Bbar, Parent::B],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Coproduct::Standard => "std",
            Coproduct::Right => "right",
            Coproduct::Left => "left",
            Coproduct::Bottom => "bottom",
        }
    }
}

impl std::str::FromStr for Coproduct {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Coproduct::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown coproduct '{s}' (std, right, left, bottom)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeDirection {
    Forward,
    Inverse,
}

impl Engine {
    fn coproduct_letter(&self, variant: Coproduct, l: Letter) -> Result<TensorElement> {
        let [p0, p1] = variant.targets();
        let pure = |a: Element, b: Element| TensorElement::pure(&[&a, &b]);
        let illegal = || {
            Err(Error::IllegalLetter(format!(
                "{l} is outside the domain {} of the {} coproduct",
                variant.source(),
                variant.name()
            )))
        };
        if !l.is_legal_in(variant.source()) {
            return illegal();
        }
        let w = |p: Parent, i: usize, k: i64| self.letter(Letter::W(i, k), p);
        let wp = |p: Parent, i: usize, k: i64| self.letter(Letter::Wp(i, k), p);
        Ok(match (variant, l) {
            (_, Letter::W(..)) | (_, Letter::Wp(..)) => {
                pure(self.letter(l, p0)?, self.letter(l, p1)?)
            }
            (Coproduct::Standard | Coproduct::Left, Letter::E(i)) => {
                let a = pure(self.letter(l, p0)?, self.one(p1));
                let b = pure(w(p0, i, 1)?, self.letter(l, p1)?);
                a.add(&b)?
            }
            (Coproduct::Standard, Letter::F(i)) | (Coproduct::Right, Letter::F(i)) => {
                let a = pure(self.letter(l, p0)?, wp(p1, i, 1)?);
                let b = pure(self.one(p0), self.letter(l, p1)?);
                a.add(&b)?
            }
            (Coproduct::Right, Letter::Epp(i)) => {
                let wi = w(p1, i, -1)?;
                let we = self.mul(&wi, &self.letter(Letter::E(i), p1)?)?;
                let a = pure(self.one(p0), we).scale(&self.cartan().r_minus_s(i));
                let b = pure(self.letter(l, p0)?, wi);
                a.add(&b)?
            }
            (Coproduct::Left, Letter::Fp(i)) => {
                let wf = self.mul(&wp(p0, i, -1)?, &self.letter(Letter::F(i), p0)?)?;
                let a = pure(wf, self.one(p1)).scale(&self.cartan().r_minus_s(i));
                let b = pure(wp(p0, i, -1)?, self.letter(l, p1)?);
                a.add(&b)?
            }
            (Coproduct::Bottom, Letter::E(i)) => {
                let d = self.cartan().r_minus_s(i).inv()?;
                let we = self.mul(&w(p1, i, 1)?, &self.letter(Letter::Epp(i), p1)?)?;
                let a = pure(w(p0, i, 1)?, we).scale(&d);
                let b = pure(self.letter(l, p0)?, self.one(p1));
                a.add(&b)?
            }
            (Coproduct::Bottom, Letter::F(i)) => {
                let d = self.cartan().r_minus_s(i).inv()?;
                let a = pure(self.one(p0), self.letter(l, p1)?);
                let wf = self.mul(&wp(p0, i, 1)?, &self.letter(Letter::Fp(i), p0)?)?;
                let b = pure(wf, wp(p1, i, 1)?).scale(&d);
                a.add(&b)?
            }
            _ => return illegal(),
        })
    }

    /// Image of a word under a coproduct, letter by letter. Used to check
    /// that relations map to zero.
    pub fn coproduct_word(&self, variant: Coproduct, word: &[Letter]) -> Result<TensorElement> {
        let mut acc = TensorElement::one(&variant.targets(), self.rank());
        for &l in word {
            acc = self.tensor_mul(&acc, &self.coproduct_letter(variant, l)?)?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, variant: Coproduct, x: &Element) -> Result<TensorElement> {
        let x = x.reparent(variant.source()).map_err(|_| {
            Error::IllegalLetter(format!(
                "element of {} is outside the domain {} of the {} coproduct",
                x.parent(),
                variant.source(),
                variant.name()
            ))
        })?;
        let mut acc = TensorElement::zero(&variant.targets(), self.rank());
        for (m, c) in x.terms() {
            let img = self.coproduct_word(variant, &m.letters(x.parent()))?;
            acc = acc.add(&img.scale(c))?;
        }
        Ok(acc)
    }

    /// Replace leg `k` of `t` by its image under `variant`, giving one more leg.
    pub fn expand_leg(&self, t: &TensorElement, k: usize, variant: Coproduct) -> Result<TensorElement> {
        let mut parents = t.parents().to_vec();
        parents.splice(k..=k, variant.targets());
        let mut acc = TensorElement::zero(&parents, self.rank());
        for (ms, c) in t.terms() {
            let leg = Element::monomial(t.parents()[k], ms[k].clone(), Scalar::one());
            for (ls, d) in self.coproduct(variant, &leg)?.terms() {
                let mut v = ms.clone();
                v.splice(k..=k, ls.iter().cloned());
                acc.add_term(v, c * d);
            }
        }
        Ok(acc)
    }

    /// Iterated coproduct `(Δ ⊗ 1)Δ` into three legs.
    pub fn coproduct2(&self, x: &Element) -> Result<TensorElement> {
        self.expand_leg(&self.coproduct(Coproduct::Standard, x)?, 0, Coproduct::Standard)
    }

    /// `ε`, defined on `U`.
    pub fn counit(&self, x: &Element) -> Result<Scalar> {
        let x = x.reparent(Parent::U)?;
        let mut acc = Scalar::zero();
        for (m, c) in x.terms() {
            if m.lower.is_empty() && m.upper.is_empty() {
                acc = &acc + c;
            }
        }
        Ok(acc)
    }

    /// Apply a letter-wise (anti-)homomorphism.
    fn apply_letterwise<F>(&self, x: &Element, target: Parent, anti: bool, img: F) -> Result<Element>
    where
        F: Fn(Letter) -> Result<Element>,
    {
        let mut acc = self.zero(target);
        for (m, c) in x.terms() {
            let mut letters = m.letters(x.parent());
            if anti {
                letters.reverse();
            }
            let mut prod = self.scalar(target, c.clone());
            for l in letters {
                prod = self.mul(&prod, &img(l)?)?;
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    /// `S` or `S⁻¹` on `U`.
    pub fn antipode(&self, x: &Element, direction: AntipodeDirection) -> Result<Element> {
        let x = x.reparent(Parent::U)?;
        let p = Parent::U;
        self.apply_letterwise(&x, p, true, |l| {
            let neg = -Scalar::one();
            Ok(match (direction, l) {
                (_, Letter::W(i, k)) => self.letter(Letter::W(i, -k), p)?,
                (_, Letter::Wp(i, k)) => self.letter(Letter::Wp(i, -k), p)?,
                (AntipodeDirection::Forward, Letter::E(i)) => self
                    .normal_form(&[Letter::W(i, -1), Letter::E(i)], p)?
                    .scale(&neg),
                (AntipodeDirection::Forward, Letter::F(i)) => self
                    .normal_form(&[Letter::F(i), Letter::Wp(i, -1)], p)?
                    .scale(&neg),
                (AntipodeDirection::Inverse, Letter::E(i)) => self
                    .normal_form(&[Letter::E(i), Letter::W(i, -1)], p)?
                    .scale(&neg),
                (AntipodeDirection::Inverse, Letter::F(i)) => self
                    .normal_form(&[Letter::Wp(i, -1), Letter::F(i)], p)?
                    .scale(&neg),
                _ => return Err(Error::IllegalLetter(format!("{l} is not a letter of U"))),
            })
        })
    }

    pub fn s(&self, x: &Element) -> Result<Element> {
        self.antipode(x, AntipodeDirection::Forward)
    }

    pub fn s_inv(&self, x: &Element) -> Result<Element> {
        self.antipode(x, AntipodeDirection::Inverse)
    }

    /// The anti-isomorphism `φ: B̄ → B`. Elements of `U` without `f` letters
    /// are read in `B̄`.
    pub fn phi(&self, x: &Element) -> Result<Element> {
        let x = x.reparent(Parent::Bbar).map_err(|_| {
            Error::IllegalLetter(format!("φ needs an element of Bbar, got one of {}", x.parent()))
        })?;
        let p = Parent::B;
        self.apply_letterwise(&x, p, true, |l| {
            Ok(match l {
                Letter::W(i, k) => self.letter(Letter::W(i, -k), p)?,
                Letter::Wp(i, k) => self.letter(Letter::Wp(i, -k), p)?,
                Letter::E(i) => {
                    let c = -self.cartan().r_minus_s(i).inv()?;
                    self.letter(Letter::Epp(i), p)?.scale(&c)
                }
                Letter::Fp(i) => {
                    let c = -self.cartan().r_minus_s(i);
                    self.letter(Letter::F(i), p)?.scale(&c)
                }
                _ => return Err(Error::IllegalLetter(format!("{l} is not a letter of Bbar"))),
            })
        })
    }

    /// The automorphism `Ψ` of `U`.
    pub fn psi(&self, x: &Element) -> Result<Element> {
        let x = x.reparent(Parent::U)?;
        let p = Parent::U;
        self.apply_letterwise(&x, p, false, |l| {
            Ok(match l {
                Letter::W(..) | Letter::Wp(..) => self.letter(l, p)?,
                Letter::E(i) => {
                    self.normal_form(&[Letter::W(i, -1), Letter::Wp(i, 1), Letter::E(i)], p)?
                }
                Letter::F(i) => {
                    self.normal_form(&[Letter::F(i), Letter::W(i, 1), Letter::Wp(i, -1)], p)?
                }
                _ => return Err(Error::IllegalLetter(format!("{l} is not a letter of U"))),
            })
        })
    }

    /// `m ∘ (S ⊗ 1) ∘ Δ` (left) or `m ∘ (1 ⊗ S) ∘ Δ` (right).
    pub fn antipode_convolution(&self, x: &Element, left: bool) -> Result<Element> {
        let d = self.coproduct(Coproduct::Standard, x)?;
        let leg = if left { 0 } else { 1 };
        let d = d.map_leg(leg, Parent::U, |y| self.s(y))?;
        self.contract(&d, Parent::U)
    }
}
