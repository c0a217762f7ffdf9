//! The skew Hopf pairing `U^≥ × U^≤ → ℚ(r, s)`, Gram matrices and dual
//! bases.
//!
//! Pairings are computed on words by the defining recursion: a product on
//! the right is split through `Δ` of the left argument, a product on the
//! left through `Δ` of the right argument, down to single letters.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::algebra::{Element, Engine, Mutation, NormalMonomial, Parent, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::root_data::Weight;
use crate::scalar::Scalar;

/// Which argument the recursion splits first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// The longer word; ties split the right argument.
    #[default]
    Balanced,
    XFirst,
    YFirst,
}

/// Letters of `U^≥`: `e_i` or a toral `ω_ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum XL {
    E(u8),
    W(Vec<i64>),
}

/// Letters of `U^≤`: `f_i` or a toral `ω'_μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum YL {
    F(u8),
    Wp(Vec<i64>),
}

type WordKey = (Strategy, Vec<XL>, Vec<YL>);

#[derive(Default)]
pub(crate) struct PairingCache {
    words: RwLock<HashMap<WordKey, Scalar>>,
    gram: RwLock<HashMap<Weight, Arc<GramData>>>,
    pub(crate) canonical: RwLock<HashMap<Weight, Arc<crate::algebra::TensorElement>>>,
}

/// Gram matrix of one weight space in the selected bases.
#[derive(Clone, Debug)]
pub struct GramData {
    pub beta: Weight,
    /// Basis words of `U⁺_β`.
    pub plus_basis: Vec<Vec<u8>>,
    /// Basis words of `U⁻_{-β}`.
    pub minus_basis: Vec<Vec<u8>>,
    /// `gram[r][c] = <x_r, y_c>`.
    pub gram: Matrix,
    pub inverse: Matrix,
}

impl GramData {
    pub fn dim(&self) -> usize {
        self.plus_basis.len()
    }

    pub fn determinant(&self) -> Scalar {
        linalg::determinant(&self.gram)
    }
}

/// Merge adjacent toral letters and drop trivial ones.
fn push_x(word: &mut Vec<XL>, l: XL) {
    match (word.last_mut(), &l) {
        (Some(XL::W(a)), XL::W(b)) => {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            if a.iter().all(|&k| k == 0) {
                word.pop();
            }
        }
        (_, XL::W(b)) if b.iter().all(|&k| k == 0) => {}
        _ => word.push(l),
    }
}

fn push_y(word: &mut Vec<YL>, l: YL) {
    match (word.last_mut(), &l) {
        (Some(YL::Wp(a)), YL::Wp(b)) => {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            if a.iter().all(|&k| k == 0) {
                word.pop();
            }
        }
        (_, YL::Wp(b)) if b.iter().all(|&k| k == 0) => {}
        _ => word.push(l),
    }
}

fn x_height(w: &[XL]) -> usize {
    w.iter().filter(|l| matches!(l, XL::E(_))).count()
}

fn y_height(w: &[YL]) -> usize {
    w.iter().filter(|l| matches!(l, YL::F(_))).count()
}

impl Engine {
    fn pair_letters(&self, x: &XL, y: &YL) -> Scalar {
        match (x, y) {
            (XL::W(nu), YL::Wp(mu)) => {
                let t = self.cartan();
                let (nu, mu) = (Weight(nu.clone()), Weight(mu.clone()));
                Scalar::monomial(t.euler_form(&mu, &nu), -t.euler_form(&nu, &mu))
            }
            (XL::E(i), YL::F(j)) if i == j => {
                let d = self.cartan().r_minus_s(*i as usize);
                let d = if self.mutation() == Mutation::PairingBase { d } else { -d };
                d.inv().expect("r_i != s_i")
            }
            _ => Scalar::zero(),
        }
    }

    /// `Δ` of a word in `U^≥`, as pairs of words.
    fn delta_x(&self, word: &[XL]) -> Vec<(Vec<XL>, Vec<XL>)> {
        let rank = self.rank();
        let mut acc: Vec<(Vec<XL>, Vec<XL>)> = vec![(Vec::new(), Vec::new())];
        for l in word {
            let mut next = Vec::with_capacity(acc.len() * 2);
            for (a, b) in acc {
                match l {
                    XL::W(_) => {
                        let (mut a, mut b) = (a, b);
                        push_x(&mut a, l.clone());
                        push_x(&mut b, l.clone());
                        next.push((a, b));
                    }
                    XL::E(i) => {
                        // e ⊗ 1 + ω_i ⊗ e
                        let mut a1 = a.clone();
                        push_x(&mut a1, l.clone());
                        next.push((a1, b.clone()));
                        let mut w = vec![0; rank];
                        w[*i as usize] = 1;
                        let (mut a2, mut b2) = (a, b);
                        push_x(&mut a2, XL::W(w));
                        push_x(&mut b2, l.clone());
                        next.push((a2, b2));
                    }
                }
            }
            acc = next;
        }
        acc
    }

    /// `Δ` of a word in `U^≤`.
    fn delta_y(&self, word: &[YL]) -> Vec<(Vec<YL>, Vec<YL>)> {
        let rank = self.rank();
        let mut acc: Vec<(Vec<YL>, Vec<YL>)> = vec![(Vec::new(), Vec::new())];
        for l in word {
            let mut next = Vec::with_capacity(acc.len() * 2);
            for (a, b) in acc {
                match l {
                    YL::Wp(_) => {
                        let (mut a, mut b) = (a, b);
                        push_y(&mut a, l.clone());
                        push_y(&mut b, l.clone());
                        next.push((a, b));
                    }
                    YL::F(i) => {
                        // f ⊗ ω'_i + 1 ⊗ f
                        let mut w = vec![0; rank];
                        w[*i as usize] = 1;
                        let (mut a1, mut b1) = (a.clone(), b.clone());
                        push_y(&mut a1, l.clone());
                        push_y(&mut b1, YL::Wp(w));
                        next.push((a1, b1));
                        let (a2, mut b2) = (a, b);
                        push_y(&mut b2, l.clone());
                        next.push((a2, b2));
                    }
                }
            }
            acc = next;
        }
        acc
    }

    fn pair_words(&self, strategy: Strategy, x: &[XL], y: &[YL]) -> Scalar {
        // <1, y> and <x, 1> are the counits.
        if x.is_empty() {
            return if y_height(y) == 0 { Scalar::one() } else { Scalar::zero() };
        }
        if y.is_empty() {
            return if x_height(x) == 0 { Scalar::one() } else { Scalar::zero() };
        }
        if x.len() == 1 && y.len() == 1 {
            return self.pair_letters(&x[0], &y[0]);
        }
        let key = (strategy, x.to_vec(), y.to_vec());
        if let Some(v) = self.pairing_cache().words.read().expect("cache lock").get(&key) {
            return v.clone();
        }
        let split_y = match strategy {
            Strategy::Balanced => y.len() >= x.len(),
            Strategy::YFirst => y.len() >= 2,
            Strategy::XFirst => x.len() < 2,
        };
        let mut acc = Scalar::zero();
        if split_y {
            // <x, y1 y2> = Σ <x(1), y1> <x(2), y2>
            let (y1, y2) = y.split_at(1);
            for (a, b) in self.delta_x(x) {
                let c = self.pair_words(strategy, &a, y1);
                if c.is_zero() {
                    continue;
                }
                let d = self.pair_words(strategy, &b, y2);
                if !d.is_zero() {
                    acc = &acc + &(&c * &d);
                }
            }
        } else {
            // <x1 x2, y> = Σ <x2, y(1)> <x1, y(2)>
            let (x1, x2) = x.split_at(x.len() - 1);
            for (a, b) in self.delta_y(y) {
                let c = self.pair_words(strategy, x2, &a);
                if c.is_zero() {
                    continue;
                }
                let d = self.pair_words(strategy, x1, &b);
                if !d.is_zero() {
                    acc = &acc + &(&c * &d);
                }
            }
        }
        self.pairing_cache()
            .words
            .write()
            .expect("cache lock")
            .insert(key, acc.clone());
        acc
    }

    fn x_word(&self, m: &NormalMonomial) -> Result<Vec<XL>> {
        if !m.lower.is_empty() || m.toral.wp.iter().any(|&k| k != 0) {
            return Err(Error::IllegalLetter(format!(
                "{} is not in U^≥ (letters e, w only)",
                m.display(Parent::U)
            )));
        }
        let mut w = Vec::new();
        push_x(&mut w, XL::W(m.toral.w.clone()));
        for &i in &m.upper {
            push_x(&mut w, XL::E(i));
        }
        Ok(w)
    }

    fn y_word(&self, m: &NormalMonomial) -> Result<Vec<YL>> {
        if !m.upper.is_empty() || m.toral.w.iter().any(|&k| k != 0) {
            return Err(Error::IllegalLetter(format!(
                "{} is not in U^≤ (letters f, v only)",
                m.display(Parent::U)
            )));
        }
        let mut w = Vec::new();
        for &i in &m.lower {
            push_y(&mut w, YL::F(i));
        }
        push_y(&mut w, YL::Wp(m.toral.wp.clone()));
        Ok(w)
    }

    /// `<x, y>` for `x ∈ U^≥`, `y ∈ U^≤`.
    pub fn pair(&self, x: &Element, y: &Element) -> Result<Scalar> {
        self.pair_with(Strategy::Balanced, x, y)
    }

    pub fn pair_with(&self, strategy: Strategy, x: &Element, y: &Element) -> Result<Scalar> {
        let x = x.reparent(Parent::U)?;
        let y = y.reparent(Parent::U)?;
        let mut acc = Scalar::zero();
        for (mx, cx) in x.terms() {
            let xw = self.x_word(mx)?;
            for (my, cy) in y.terms() {
                let yw = self.y_word(my)?;
                let v = self.pair_words(strategy, &xw, &yw);
                if !v.is_zero() {
                    acc = &acc + &(&(cx * cy) * &v);
                }
            }
        }
        Ok(acc)
    }

    /// Pairing of two words of generators `e` and `f` directly.
    pub fn pair_basis_words(&self, x: &[u8], y: &[u8]) -> Scalar {
        let xw: Vec<XL> = x.iter().map(|&i| XL::E(i)).collect();
        let yw: Vec<YL> = y.iter().map(|&i| YL::F(i)).collect();
        self.pair_words(Strategy::Balanced, &xw, &yw)
    }

    /// Gram data for `β`, computed once.
    pub fn gram(&self, beta: &Weight) -> Result<Arc<GramData>> {
        if let Some(g) = self.pairing_cache().gram.read().expect("cache lock").get(beta) {
            return Ok(g.clone());
        }
        let plus = self.basis_of_weight_space(beta, Side::Plus, Parent::U)?;
        let minus = self.basis_of_weight_space(beta, Side::Minus, Parent::U)?;
        let gram = self.gram_between(&plus, &minus);
        let inverse = linalg::inverse(&gram)
            .map_err(|_| Error::SingularGram(format!("weight {beta}")))?;
        let data = Arc::new(GramData {
            beta: beta.clone(),
            plus_basis: plus,
            minus_basis: minus,
            gram,
            inverse,
        });
        Ok(self
            .pairing_cache()
            .gram
            .write()
            .expect("cache lock")
            .entry(beta.clone())
            .or_insert(data)
            .clone())
    }

    /// `[<x_r, y_c>]` for arbitrary words.
    pub fn gram_between(&self, plus: &[Vec<u8>], minus: &[Vec<u8>]) -> Matrix {
        plus.par_iter()
            .map(|x| minus.iter().map(|y| self.pair_basis_words(x, y)).collect())
            .collect()
    }

    /// Dual basis `y_r` of `U⁻_{-β}` with `<x_r, y_c> = δ_rc`.
    pub fn dual_basis(&self, beta: &Weight) -> Result<Vec<Element>> {
        let g = self.gram(beta)?;
        Ok(self.dual_from(&g.minus_basis, &g.inverse))
    }

    /// `y_c = Σ_k inverse[k][c] f_{w_k}`.
    pub(crate) fn dual_from(&self, minus: &[Vec<u8>], inverse: &Matrix) -> Vec<Element> {
        let fs: Vec<Element> = minus.iter().map(|w| self.lower_word(Parent::U, w)).collect();
        (0..minus.len())
            .map(|c| {
                let mut y = self.zero(Parent::U);
                for (k, f) in fs.iter().enumerate() {
                    if !inverse[k][c].is_zero() {
                        y = y.add(&f.scale(&inverse[k][c])).expect("same parent");
                    }
                }
                y
            })
            .collect()
    }
}

impl Engine {
    /// `Σ <x(1), S(y(1))> <x(3), y(3)> x(2) y(2)`, which equals `y x`.
    pub fn exchange_yx(&self, x: &Element, y: &Element) -> Result<Element> {
        self.exchange(x, y, true)
    }

    /// `Σ <x(1), y(1)> <x(3), S(y(3))> y(2) x(2)`, which equals `x y`.
    pub fn exchange_xy(&self, x: &Element, y: &Element) -> Result<Element> {
        self.exchange(x, y, false)
    }

    fn exchange(&self, x: &Element, y: &Element, yx: bool) -> Result<Element> {
        let dx = self.coproduct2(x)?;
        let dy = self.coproduct2(y)?;
        let leg = |m: &NormalMonomial| Element::monomial(Parent::U, m.clone(), Scalar::one());
        let mut acc = self.zero(Parent::U);
        for (xs, cx) in dx.terms() {
            for (ys, cy) in dy.terms() {
                let (a0, a2) = (leg(&xs[0]), leg(&xs[2]));
                let (b0, b2) = (leg(&ys[0]), leg(&ys[2]));
                let first = if yx {
                    self.pair(&a0, &self.s(&b0)?)?
                } else {
                    self.pair(&a0, &b0)?
                };
                if first.is_zero() {
                    continue;
                }
                let second = if yx {
                    self.pair(&a2, &b2)?
                } else {
                    self.pair(&a2, &self.s(&b2)?)?
                };
                if second.is_zero() {
                    continue;
                }
                let mid = if yx {
                    self.mul_monomials(Parent::U, &xs[1], &ys[1])
                } else {
                    self.mul_monomials(Parent::U, &ys[1], &xs[1])
                };
                acc = acc.add(&mid.scale(&(&(cx * cy) * &(&first * &second))))?;
            }
        }
        Ok(acc)
    }
}
