mod common;

use kashiwara_core::algebra::relations::defining_relations;
use kashiwara_core::{
    parse_element, CartanType, Coproduct, Element, Engine, Error, Letter, Parent, Scalar,
    TensorElement,
};
use proptest::prelude::*;

fn el(eng: &Engine, text: &str, parent: Parent) -> Element {
    parse_element(text, eng, parent).unwrap()
}

fn t2(eng: &Engine, a: &str, pa: Parent, b: &str, pb: Parent) -> TensorElement {
    TensorElement::pure(&[&el(eng, a, pa), &el(eng, b, pb)])
}

#[test]
fn coproduct_of_generators() {
    let eng = Engine::new(CartanType::a(1));
    let u = Parent::U;
    let df = eng.coproduct(Coproduct::Standard, &eng.f(0)).unwrap();
    let want = t2(&eng, "f[1]", u, "v[1]", u).add(&t2(&eng, "1", u, "f[1]", u)).unwrap();
    assert_eq!(df, want);
    let dw = eng.coproduct(Coproduct::Standard, &eng.omega(0, -1)).unwrap();
    assert_eq!(dw, t2(&eng, "w[1]^-1", u, "w[1]^-1", u));
}

#[test]
fn coproduct_of_f_squared() {
    let eng = Engine::new(CartanType::a(1));
    let u = Parent::U;
    let x = el(&eng, "f[1]^2", u);
    let got = eng.coproduct(Coproduct::Standard, &x).unwrap();
    let want = t2(&eng, "f[1]^2", u, "v[1]^2", u)
        .add(&t2(&eng, "f[1]", u, "f[1] v[1]", u).scale(&(Scalar::one() + Scalar::monomial(1, -1))))
        .unwrap()
        .add(&t2(&eng, "1", u, "f[1]^2", u))
        .unwrap();
    assert_eq!(got, want);
}

#[test]
fn right_coproduct_of_epp() {
    let eng = Engine::new(CartanType::a(1));
    let got = eng.coproduct(Coproduct::Right, &eng.epp(0)).unwrap();
    let want = t2(&eng, "1", Parent::B, "(r - s) w[1]^-1 e[1]", Parent::U)
        .add(&t2(&eng, "E[1]", Parent::B, "w[1]^-1", Parent::U))
        .unwrap();
    assert_eq!(got, want);
}

#[test]
fn standard_coproduct_rejects_kashiwara_letters() {
    let eng = Engine::new(CartanType::a(1));
    assert!(matches!(
        eng.coproduct(Coproduct::Standard, &eng.epp(0)),
        Err(Error::IllegalLetter(_))
    ));
    assert!(matches!(
        eng.coproduct_word(Coproduct::Standard, &[Letter::Fp(0)]),
        Err(Error::IllegalLetter(_))
    ));
}

#[test]
fn counit_examples() {
    let eng = Engine::new(CartanType::a(2));
    assert!(eng.counit(&el(&eng, "w[1] v[2]^-1", Parent::U)).unwrap().is_one());
    assert!(eng.counit(&el(&eng, "f[1] e[1]", Parent::U)).unwrap().is_zero());
    assert!(eng.counit(&el(&eng, "1 + f[1]", Parent::U)).unwrap().is_one());
}

#[test]
fn antipode_examples() {
    let eng = Engine::new(CartanType::a(1));
    let u = Parent::U;
    assert_eq!(eng.s(&eng.f(0)).unwrap(), el(&eng, "-f[1] v[1]^-1", u));
    assert_eq!(eng.s_inv(&eng.f(0)).unwrap(), el(&eng, "-v[1]^-1 f[1]", u));
    assert_eq!(eng.s(&eng.e(0)).unwrap(), el(&eng, "-w[1]^-1 e[1]", u));
    assert_eq!(eng.s(&eng.one(u)).unwrap(), eng.one(u));
}

#[test]
fn phi_examples() {
    let eng = Engine::new(CartanType::a(2));
    let b = Parent::B;
    assert_eq!(eng.phi(&eng.e(0)).unwrap(), el(&eng, "-E[1]/(r - s)", b));
    let e1e2 = el(&eng, "e[1] e[2]", Parent::Bbar);
    // r_2 - s_2 = r - s in A2
    assert_eq!(eng.phi(&e1e2).unwrap(), el(&eng, "E[2] E[1]/(r - s)^2", b));
    assert_eq!(eng.phi(&eng.omega(0, 1)).unwrap(), el(&eng, "w[1]^-1", b));
    assert_eq!(
        eng.phi(&el(&eng, "P[1]", Parent::Bbar)).unwrap(),
        el(&eng, "-(r - s) f[1]", b)
    );
    assert!(matches!(eng.phi(&eng.f(0)), Err(Error::IllegalLetter(_))));
}

#[test]
fn psi_examples() {
    let eng = Engine::new(CartanType::a(1));
    let u = Parent::U;
    assert_eq!(eng.psi(&eng.e(0)).unwrap(), el(&eng, "w[1]^-1 v[1] e[1]", u));
    assert_eq!(eng.psi(&eng.omega(0, 1)).unwrap(), eng.omega(0, 1));
    let fe = el(&eng, "f[1] e[1]", u);
    assert_eq!(
        eng.psi(&fe).unwrap(),
        el(&eng, "f[1] w[1] v[1]^-1 w[1]^-1 v[1] e[1]", u)
    );
}

/// Each coproduct sends every defining relation of its source to zero.
#[test]
fn coproducts_respect_defining_relations() {
    for t in [CartanType::a(1), CartanType::a(2), CartanType::b2(), CartanType::g2()] {
        let eng = Engine::new(t.clone());
        for variant in Coproduct::ALL {
            for rel in defining_relations(&t, variant.source()).unwrap() {
                let mut acc = TensorElement::zero(&variant.targets(), t.rank());
                for (w, c) in &rel.terms {
                    acc = acc.add(&eng.coproduct_word(variant, w).unwrap().scale(c)).unwrap();
                }
                assert!(acc.is_zero(), "{} {:?} {}: {acc}", t.name(), variant, rel.name);
            }
        }
    }
}

#[test]
fn coassociativity_on_generators() {
    let eng = Engine::new(CartanType::a(2));
    for x in [eng.e(0), eng.f(1), eng.omega(0, -1), eng.omega_p(1, 2)] {
        let d = eng.coproduct(Coproduct::Standard, &x).unwrap();
        let left = eng.expand_leg(&d, 0, Coproduct::Standard).unwrap();
        let right = eng.expand_leg(&d, 1, Coproduct::Standard).unwrap();
        assert_eq!(left, right, "{x}");
    }
}

#[test]
fn antipode_axiom_on_generators() {
    let eng = Engine::new(CartanType::b2());
    for x in [eng.e(0), eng.e(1), eng.f(0), eng.f(1), eng.omega(1, 1), eng.omega_p(0, -1)] {
        let eps = eng.scalar(Parent::U, eng.counit(&x).unwrap());
        assert_eq!(eng.antipode_convolution(&x, true).unwrap(), eps, "{x}");
        assert_eq!(eng.antipode_convolution(&x, false).unwrap(), eps, "{x}");
    }
}

fn engines() -> &'static [Engine] {
    use std::sync::OnceLock;
    static E: OnceLock<Vec<Engine>> = OnceLock::new();
    E.get_or_init(|| vec![Engine::new(CartanType::a(1)), Engine::new(CartanType::a(2))])
}

fn u_element() -> impl Strategy<Value = (usize, Vec<(Vec<Letter>, Scalar)>)> {
    (0..2usize).prop_flat_map(|k| (Just(k), common::element_recipe(Parent::U, k + 1, 3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn coassociativity_random((k, recipe) in u_element()) {
        let eng = &engines()[k];
        let x = common::build(eng, Parent::U, &recipe);
        let d = eng.coproduct(Coproduct::Standard, &x).unwrap();
        prop_assert_eq!(
            eng.expand_leg(&d, 0, Coproduct::Standard).unwrap(),
            eng.expand_leg(&d, 1, Coproduct::Standard).unwrap()
        );
    }

    #[test]
    fn antipode_axiom_random((k, recipe) in u_element()) {
        let eng = &engines()[k];
        let x = common::build(eng, Parent::U, &recipe);
        let eps = eng.scalar(Parent::U, eng.counit(&x).unwrap());
        prop_assert_eq!(eng.antipode_convolution(&x, true).unwrap(), eps.clone());
        prop_assert_eq!(eng.antipode_convolution(&x, false).unwrap(), eps);
    }

    #[test]
    fn antipode_inverse_round_trip((k, recipe) in u_element()) {
        let eng = &engines()[k];
        let x = common::build(eng, Parent::U, &recipe);
        prop_assert_eq!(eng.s(&eng.s_inv(&x).unwrap()).unwrap(), x.clone());
        prop_assert_eq!(eng.s_inv(&eng.s(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn maps_respect_products(
        (k, a, b) in (0..2usize).prop_flat_map(|k| (
            Just(k),
            common::element_recipe(Parent::U, k + 1, 2),
            common::element_recipe(Parent::U, k + 1, 2),
        ))
    ) {
        let eng = &engines()[k];
        let x = common::build(eng, Parent::U, &a);
        let y = common::build(eng, Parent::U, &b);
        let xy = eng.mul(&x, &y).unwrap();
        // S is an anti-homomorphism, Ψ a homomorphism.
        prop_assert_eq!(eng.s(&xy).unwrap(), eng.mul(&eng.s(&y).unwrap(), &eng.s(&x).unwrap()).unwrap());
        prop_assert_eq!(eng.psi(&xy).unwrap(), eng.mul(&eng.psi(&x).unwrap(), &eng.psi(&y).unwrap()).unwrap());
        // Δ is multiplicative.
        let dxy = eng.coproduct(Coproduct::Standard, &xy).unwrap();
        let dx = eng.coproduct(Coproduct::Standard, &x).unwrap();
        let dy = eng.coproduct(Coproduct::Standard, &y).unwrap();
        prop_assert_eq!(dxy, eng.tensor_mul(&dx, &dy).unwrap());
    }

    #[test]
    fn phi_is_anti_multiplicative(
        (k, a, b) in (0..2usize).prop_flat_map(|k| (
            Just(k),
            common::element_recipe(Parent::Bbar, k + 1, 2),
            common::element_recipe(Parent::Bbar, k + 1, 2),
        ))
    ) {
        let eng = &engines()[k];
        let x = common::build(eng, Parent::Bbar, &a);
        let y = common::build(eng, Parent::Bbar, &b);
        let lhs = eng.phi(&eng.mul(&x, &y).unwrap()).unwrap();
        let rhs = eng.mul(&eng.phi(&y).unwrap(), &eng.phi(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
