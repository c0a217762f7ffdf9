#![allow(dead_code)]

use kashiwara_core::{Element, Engine, Letter, Parent, Scalar};
use proptest::prelude::*;

/// A random letter of `parent` over `rank` indices.
pub fn letter(parent: Parent, rank: usize) -> impl Strategy<Value = Letter> {
    let upper = move |i| if parent == Parent::B { Letter::Epp(i) } else { Letter::E(i) };
    let lower = move |i| if parent == Parent::Bbar { Letter::Fp(i) } else { Letter::F(i) };
    (0..rank, 0..4u8, prop::bool::ANY).prop_map(move |(i, kind, inv)| match kind {
        0 => upper(i),
        1 => lower(i),
        2 => Letter::W(i, if inv { -1 } else { 1 }),
        _ => Letter::Wp(i, if inv { -1 } else { 1 }),
    })
}

/// Small integer-like coefficients with some r, s dependence.
pub fn coefficient() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -1i64..=1, -1i64..=1).prop_map(|(c, a, b)| {
        let c = if c == 0 { 1 } else { c };
        Scalar::from_int(c) * Scalar::monomial(a, b)
    })
}

/// Random words with at most `max_len` letters, at most `max_height` of
/// them non-toral.
pub fn word(parent: Parent, rank: usize, max_len: usize, max_height: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(parent, rank), 0..=max_len).prop_map(move |w| {
        let mut height = 0;
        w.into_iter()
            .filter(|l| {
                let toral = matches!(l, Letter::W(..) | Letter::Wp(..));
                if !toral {
                    height += 1;
                }
                toral || height <= max_height
            })
            .collect()
    })
}

/// A sum of up to three random words.
pub fn element_recipe(parent: Parent, rank: usize, max_height: usize) -> impl Strategy<Value = Vec<(Vec<Letter>, Scalar)>> {
    prop::collection::vec((word(parent, rank, 5, max_height), coefficient()), 1..=3)
}

pub fn build(engine: &Engine, parent: Parent, recipe: &[(Vec<Letter>, Scalar)]) -> Element {
    let mut acc = engine.zero(parent);
    for (w, c) in recipe {
        acc = acc.add(&engine.normal_form(w, parent).unwrap().scale(c)).unwrap();
    }
    acc
}
