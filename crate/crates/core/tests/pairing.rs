mod common;

use std::sync::OnceLock;

use kashiwara_core::algebra::relations::defining_relations;
use kashiwara_core::{
    parse_element, CartanType, Element, Engine, Error, Letter, Mutation, Parent, Scalar, Strategy as Split,
    Weight,
};
use proptest::prelude::*;

fn el(eng: &Engine, text: &str) -> Element {
    parse_element(text, eng, Parent::U).unwrap()
}

fn sc(text: &str) -> Scalar {
    text.parse().unwrap()
}

#[test]
fn generator_pairings() {
    let eng = Engine::new(CartanType::a(1));
    assert_eq!(eng.pair(&eng.e(0), &eng.f(0)).unwrap(), sc("1/(s - r)"));
    assert_eq!(
        eng.pair(&el(&eng, "e[1]^2"), &el(&eng, "f[1]^2")).unwrap(),
        sc("(1 + r/s)/(s - r)^2")
    );
    assert!(eng.pair(&eng.e(0), &eng.omega_p(0, 1)).unwrap().is_zero());
    assert!(eng.pair(&eng.omega(0, 1), &eng.f(0)).unwrap().is_zero());
    assert!(eng.pair(&eng.one(Parent::U), &eng.one(Parent::U)).unwrap().is_one());

    let a2 = Engine::new(CartanType::a(2));
    assert_eq!(a2.pair(&a2.omega(0, 1), &a2.omega_p(1, 1)).unwrap(), Scalar::s());
    assert_eq!(a2.pair(&a2.omega(1, 1), &a2.omega_p(0, 1)).unwrap(), Scalar::r().inv().unwrap());
    assert!(a2.pair(&a2.e(0), &a2.f(1)).unwrap().is_zero());
}

#[test]
fn pairing_rejects_wrong_halves() {
    let eng = Engine::new(CartanType::a(1));
    for (x, y) in [
        (eng.f(0), eng.f(0)),
        (eng.e(0), eng.e(0)),
        (eng.omega_p(0, 1), eng.omega_p(0, 1)),
        (eng.e(0), eng.omega(0, 1)),
    ] {
        assert!(matches!(eng.pair(&x, &y), Err(Error::IllegalLetter(_))), "{x} {y}");
    }
    assert!(eng.pair(&eng.epp(0), &eng.f(0)).is_err());
}

#[test]
fn mutated_base_case_flips_sign() {
    let eng = Engine::with_options(CartanType::a(1), 4, Mutation::PairingBase);
    assert_eq!(eng.pair(&eng.e(0), &eng.f(0)).unwrap(), sc("1/(r - s)"));
}

/// `<e^n, f^n> = [n]! / (s - r)^n` with `[k] = (1 - (r/s)^k)/(1 - r/s)`.
#[test]
fn rank_one_closed_form() {
    let eng = Engine::new(CartanType::a(1));
    let q = Scalar::monomial(1, -1);
    for n in 0..=5 {
        let word = vec![0u8; n];
        let got = eng.pair_basis_words(&word, &word);
        let want = q_factorial_plain(n, &q) * (Scalar::s() - Scalar::r()).pow(-(n as i64)).unwrap();
        assert_eq!(got, want, "n = {n}");
    }
}

fn q_factorial_plain(n: usize, q: &Scalar) -> Scalar {
    let mut acc = Scalar::one();
    for k in 1..=n {
        let mut num = Scalar::zero();
        let mut p = Scalar::one();
        for _ in 0..k {
            num = &num + &p;
            p = &p * q;
        }
        acc = &acc * &num;
    }
    acc
}

/// Serre elements pair to zero with every word of their weight, so the
/// pairing is well defined on the quotient.
#[test]
fn serre_elements_lie_in_the_radical() {
    for t in [CartanType::a(2), CartanType::b2(), CartanType::g2()] {
        let eng = Engine::new(t.clone());
        let mut seen = 0;
        for rel in defining_relations(&t, Parent::U).unwrap() {
            let words: Vec<(Vec<u8>, Scalar)> = rel
                .terms
                .iter()
                .filter_map(|(w, c)| {
                    let idx: Option<Vec<u8>> = w
                        .iter()
                        .map(|l| match l {
                            Letter::E(i) => Some(*i as u8),
                            _ => None,
                        })
                        .collect();
                    idx.map(|i| (i, c.clone()))
                })
                .collect();
            if !rel.name.starts_with("serre") || words.len() != rel.terms.len() {
                continue;
            }
            seen += 1;
            let weight = Weight::of_word(t.rank(), &words[0].0);
            for y in words_of_weight(t.rank(), &weight) {
                let mut acc = Scalar::zero();
                for (x, c) in &words {
                    acc = &acc + &(c * &eng.pair_basis_words(x, &y));
                }
                assert!(acc.is_zero(), "{} {} {y:?}", t.name(), rel.name);
            }
        }
        assert_eq!(seen, 2, "{}", t.name());
    }
}

fn words_of_weight(rank: usize, w: &Weight) -> Vec<Vec<u8>> {
    let h = w.height() as usize;
    let mut out = vec![Vec::new()];
    for _ in 0..h {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u8>| {
                (0..rank as u8).map(move |i| {
                    let mut p = p.clone();
                    p.push(i);
                    p
                })
            })
            .collect();
    }
    out.retain(|p| &Weight::of_word(rank, p) == w);
    out
}

#[test]
fn gram_matrices_are_nondegenerate() {
    for (t, h) in [(CartanType::a(1), 4), (CartanType::a(2), 3), (CartanType::b2(), 3)] {
        let eng = Engine::new(t.clone());
        for beta in t.weights_up_to(h) {
            let g = eng.gram(&beta).unwrap();
            assert!(!g.determinant().is_zero(), "{} {beta}", t.name());
            let dual = eng.dual_basis(&beta).unwrap();
            for (r, x) in g.plus_basis.iter().enumerate() {
                let x = eng.upper_word(Parent::U, x);
                for (c, y) in dual.iter().enumerate() {
                    let want = if r == c { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(eng.pair(&x, y).unwrap(), want, "{} {beta} {r} {c}", t.name());
                }
            }
        }
    }
}

#[test]
fn exchange_formulas_on_small_elements() {
    for t in [CartanType::a(1), CartanType::a(2)] {
        let eng = Engine::new(t.clone());
        let n = t.rank();
        let mut xs = vec![eng.one(Parent::U), eng.omega(0, 1)];
        let mut ys = vec![eng.one(Parent::U), eng.omega_p(n - 1, -1)];
        for i in 0..n {
            xs.push(eng.e(i));
            ys.push(eng.f(i));
            for j in 0..n {
                xs.push(eng.normal_form(&[Letter::E(i), Letter::E(j)], Parent::U).unwrap());
                ys.push(eng.normal_form(&[Letter::F(i), Letter::F(j)], Parent::U).unwrap());
            }
        }
        for x in &xs {
            for y in &ys {
                let yx = eng.mul(y, x).unwrap();
                let xy = eng.mul(x, y).unwrap();
                assert_eq!(eng.exchange_yx(x, y).unwrap(), yx, "{} y x: {x} | {y}", t.name());
                assert_eq!(eng.exchange_xy(x, y).unwrap(), xy, "{} x y: {x} | {y}", t.name());
            }
        }
    }
}

fn engines() -> &'static [Engine] {
    static E: OnceLock<Vec<Engine>> = OnceLock::new();
    E.get_or_init(|| {
        vec![
            Engine::new(CartanType::a(1)),
            Engine::new(CartanType::a(2)),
            Engine::new(CartanType::b2()),
        ]
    })
}

fn x_letter(rank: usize) -> impl Strategy<Value = Letter> {
    (0..rank, 0..3u8).prop_map(|(i, k)| match k {
        0 => Letter::W(i, 1),
        1 => Letter::W(i, -1),
        _ => Letter::E(i),
    })
}

fn y_letter(rank: usize) -> impl Strategy<Value = Letter> {
    (0..rank, 0..3u8).prop_map(|(i, k)| match k {
        0 => Letter::Wp(i, 1),
        1 => Letter::Wp(i, -1),
        _ => Letter::F(i),
    })
}

type Case = (usize, Vec<Letter>, Vec<Letter>, Vec<i64>, Vec<i64>);

fn pair_case() -> impl Strategy<Value = Case> {
    (0..3usize).prop_flat_map(|k| {
        let rank = if k == 0 { 1 } else { 2 };
        (
            Just(k),
            prop::collection::vec(x_letter(rank), 0..5),
            prop::collection::vec(y_letter(rank), 0..5),
            prop::collection::vec(-2i64..=2, rank),
            prop::collection::vec(-2i64..=2, rank),
        )
    })
}

fn toral(eng: &Engine, w: &[i64], prime: bool) -> Element {
    let letters: Vec<Letter> = w
        .iter()
        .enumerate()
        .map(|(i, &k)| if prime { Letter::Wp(i, k) } else { Letter::W(i, k) })
        .collect();
    eng.normal_form(&letters, Parent::U).unwrap()
}

fn letter_weight(rank: usize, w: &[Letter]) -> Weight {
    let idx: Vec<u8> = w
        .iter()
        .filter_map(|l| match l {
            Letter::E(i) | Letter::F(i) => Some(*i as u8),
            _ => None,
        })
        .collect();
    Weight::of_word(rank, &idx)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pairing_properties((k, xw, yw, nu, mu) in pair_case()) {
        let eng = &engines()[k];
        let x = eng.normal_form(&xw, Parent::U).unwrap();
        let y = eng.normal_form(&yw, Parent::U).unwrap();
        let v = eng.pair(&x, &y).unwrap();

        // Independent of the order in which the recursion splits.
        prop_assert_eq!(&eng.pair_with(Split::XFirst, &x, &y).unwrap(), &v);
        prop_assert_eq!(&eng.pair_with(Split::YFirst, &x, &y).unwrap(), &v);

        // Invariance under the antipode.
        prop_assert_eq!(&eng.pair(&eng.s(&x).unwrap(), &eng.s(&y).unwrap()).unwrap(), &v);

        // Toral factors on the right of toral-free x and y.
        let t = eng.cartan();
        let strip = |w: &[Letter]| -> Vec<Letter> {
            w.iter().copied().filter(|l| matches!(l, Letter::E(_) | Letter::F(_))).collect()
        };
        let (x, y) = (
            eng.normal_form(&strip(&xw), Parent::U).unwrap(),
            eng.normal_form(&strip(&yw), Parent::U).unwrap(),
        );
        let v0 = eng.pair(&x, &y).unwrap();
        let (nu_w, mu_w) = (Weight(nu.clone()), Weight(mu.clone()));
        let xo = eng.mul(&x, &toral(eng, &nu, false)).unwrap();
        let yo = eng.mul(&y, &toral(eng, &mu, true)).unwrap();
        let factor = Scalar::monomial(t.euler_form(&mu_w, &nu_w), -t.euler_form(&nu_w, &mu_w));
        prop_assert_eq!(eng.pair(&xo, &yo).unwrap(), &factor * &v0);

        // Distinct weights are orthogonal.
        let wx = letter_weight(t.rank(), &xw);
        let wy = letter_weight(t.rank(), &yw);
        if wx != wy {
            prop_assert!(v.is_zero());
        }
    }
}
