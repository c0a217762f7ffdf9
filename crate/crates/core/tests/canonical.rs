use kashiwara_core::{
    parse_element, CartanType, Element, Engine, Parent, Report, Scalar, TensorElement, Weight,
};

fn el(eng: &Engine, text: &str, parent: Parent) -> Element {
    parse_element(text, eng, parent).unwrap()
}

fn t2(eng: &Engine, a: &str, pa: Parent, b: &str, pb: Parent) -> TensorElement {
    TensorElement::pure(&[&el(eng, a, pa), &el(eng, b, pb)])
}

fn assert_all_pass(r: &Report) {
    let bad: Vec<String> = r
        .failures()
        .map(|e| format!("{} {} {}: {}", e.suite, e.id, e.instance, e.witness.clone().unwrap_or_default()))
        .collect();
    assert!(bad.is_empty(), "{} failures:\n{}", bad.len(), bad.join("\n"));
    assert!(!r.entries.is_empty());
}

fn alpha(k: i64) -> Weight {
    Weight(vec![k])
}

#[test]
fn rank_one_canonical_tensors() {
    let eng = Engine::new(CartanType::a(1));
    let u = Parent::U;
    assert_eq!(eng.canonical_tensor(&alpha(0)).unwrap(), TensorElement::one(&[u, u], 1));
    assert_eq!(
        eng.canonical_tensor(&alpha(1)).unwrap(),
        t2(&eng, "e[1]", u, "(s - r) f[1]", u)
    );
    assert_eq!(
        eng.canonical_tensor(&alpha(2)).unwrap(),
        t2(&eng, "e[1]^2", u, "(s - r)^2/(1 + r/s) f[1]^2", u)
    );
}

#[test]
fn completed_element_low_grades() {
    let eng = Engine::new(CartanType::a(1));
    let (u, b) = (Parent::U, Parent::B);
    let c = eng.c_element(2).unwrap();
    assert_eq!(c.grades[&alpha(0)], TensorElement::one(&[u, b], 1));
    // k_α⁻¹ = ω', so e ⊗ ω' S⁻¹((s - r) f) = e ⊗ (r - s) f.
    assert_eq!(c.grades[&alpha(1)], t2(&eng, "e[1]", u, "(r - s) f[1]", b));
    let ci = eng.c_inverse(2).unwrap();
    assert_eq!(ci.grades[&alpha(0)], TensorElement::one(&[u, b], 1));
    assert_eq!(ci.grades[&alpha(1)], t2(&eng, "e[1]", u, "(s - r) f[1]", b));
}

/// `Σ_r <x_r, z> y_r = z` for every word `z`: the defining property of a
/// canonical tensor, checked without the dual basis.
#[test]
fn canonical_tensor_reproduces_lower_words() {
    for (t, h) in [(CartanType::a(2), 3), (CartanType::b2(), 3), (CartanType::g2(), 2)] {
        let eng = Engine::new(t.clone());
        for beta in t.weights_up_to(h) {
            let c = eng.canonical_tensor(&beta).unwrap();
            let g = eng.gram(&beta).unwrap();
            for w in &g.minus_basis {
                let z = eng.lower_word(Parent::U, w);
                let mut acc = eng.zero(Parent::U);
                for (ms, coef) in c.terms() {
                    let x = Element::monomial(Parent::U, ms[0].clone(), Scalar::one());
                    let y = Element::monomial(Parent::U, ms[1].clone(), coef.clone());
                    acc = acc.add(&y.scale(&eng.pair(&x, &z).unwrap())).unwrap();
                }
                assert_eq!(acc, z, "{} {beta}", t.name());
            }
        }
    }
}

#[test]
fn commutator_with_e_at_the_bottom_grade() {
    // [1 ⊗ e, C_α] = e ⊗ (ω' - ω) in rank one.
    let eng = Engine::new(CartanType::a(1));
    let u = Parent::U;
    let c = eng.canonical_tensor(&alpha(1)).unwrap();
    let x = TensorElement::pure(&[&eng.one(u), &eng.e(0)]);
    let lhs = eng.tensor_mul(&x, &c).unwrap().sub(&eng.tensor_mul(&c, &x).unwrap()).unwrap();
    assert_eq!(lhs, t2(&eng, "e[1]", u, "v[1] - w[1]", u));
}

#[test]
fn canonical_identities_hold() {
    for (t, h, th) in [
        (CartanType::a(1), 4, 4),
        (CartanType::a(2), 2, 3),
        (CartanType::b2(), 2, 3),
        (CartanType::g2(), 1, 2),
    ] {
        let eng = Engine::new(t.clone());
        assert_all_pass(&eng.verify_canonical_identities(h, th).unwrap());
    }
}

#[test]
fn completed_element_identities_hold() {
    for (t, l) in [(CartanType::a(1), 4), (CartanType::a(2), 3), (CartanType::b2(), 3)] {
        let eng = Engine::new(t.clone());
        assert_all_pass(&eng.verify_completed_element(l).unwrap());
    }
}

/// The extra term of the Kashiwara intertwining relation multiplies the
/// completed element from the right; putting it on the left fails.
#[test]
fn intertwining_term_sits_on_the_right() {
    let eng = Engine::new(CartanType::a(1));
    let b = Parent::B;
    let c = eng.c_element(3).unwrap().total().unwrap();
    let x = TensorElement::pure(&[&eng.omega(0, -1), &eng.epp(0)]);
    let we = eng.mul(&eng.omega(0, -1), &eng.e(0)).unwrap();
    let y = TensorElement::pure(&[&we, &eng.one(b)]).scale(&(Scalar::r() - Scalar::s()));
    let comm = eng.tensor_mul(&x, &c).unwrap().sub(&eng.tensor_mul(&c, &x).unwrap()).unwrap();
    let right = comm.sub(&eng.tensor_mul(&c, &y).unwrap()).unwrap();
    let left = comm.sub(&eng.tensor_mul(&y, &c).unwrap()).unwrap();
    let grade = |t: &TensorElement, k: i64| t.grades_by_upper(0).get(&alpha(k)).cloned();
    assert!(grade(&right, 2).is_none_or(|g| g.is_zero()));
    assert!(grade(&left, 2).is_some_and(|g| !g.is_zero()));
}

/// With `k_β⁻¹` read as `ω'⁻¹` the intertwining relation breaks.
#[test]
fn inverse_k_is_omega_prime() {
    let eng = Engine::new(CartanType::a(1));
    let (u, b) = (Parent::U, Parent::B);
    let mut wrong = TensorElement::zero(&[u, b], 1);
    for k in 0..=3 {
        let beta = alpha(k);
        let kk = eng.k(u, &beta);
        let g = eng
            .c_prime(&beta)
            .unwrap()
            .map_leg(1, b, |y| eng.mul(&kk, y))
            .unwrap();
        wrong = wrong.add(&g).unwrap();
    }
    let x = TensorElement::pure(&[&eng.omega(0, -1), &eng.epp(0)]);
    let we = eng.mul(&eng.omega(0, -1), &eng.e(0)).unwrap();
    let y = TensorElement::pure(&[&we, &eng.one(b)]).scale(&(Scalar::r() - Scalar::s()));
    let d = eng
        .tensor_mul(&x, &wrong)
        .unwrap()
        .sub(&eng.tensor_mul(&wrong, &x.add(&y).unwrap()).unwrap())
        .unwrap();
    assert!(d.grades_by_upper(0).iter().any(|(w, g)| w.height() <= 2 && !g.is_zero()));
}

#[test]
fn casimir_examples() {
    let eng = Engine::new(CartanType::a(1));
    let u = Parent::U;
    assert_eq!(eng.casimir_grade(&alpha(0)).unwrap(), eng.one(u));
    assert_eq!(
        eng.casimir_grade(&alpha(1)).unwrap(),
        el(&eng, "-(s - r) f[1] v[1]^-1 e[1]", u)
    );
    for g in eng.casimir(3).unwrap().grades.values() {
        assert!(g.weight().unwrap().is_zero());
    }
}

#[test]
fn casimir_twisted_centrality() {
    for (t, l) in [(CartanType::a(1), 4), (CartanType::a(2), 3)] {
        let eng = Engine::new(t.clone());
        assert_all_pass(&eng.verify_casimir(l).unwrap());
    }
}

#[test]
fn canonical_tensor_is_basis_independent() {
    for t in [CartanType::a(1), CartanType::a(2), CartanType::b2()] {
        let eng = Engine::new(t.clone());
        assert_all_pass(&eng.verify_basis_independence(3).unwrap());
    }
}
