use funksphere_core::funk::{
    dual_transform, funk_eigenvalue, funk_transform, invert_even_m, invert_general, SpherePolynomial,
};
use funksphere_core::harmonics::{fischer_decompose, laplace_beltrami, sh_basis, spherical_components};
use funksphere_core::oracle::spectral_reference_inverter;
use funksphere_core::pizzetti::{cap_coefficient, cap_integral, sigma, sphere_integral, subsphere_integral, CapSide};
use funksphere_core::poly::{householder, mat_vec, Parity};
use funksphere_core::scalar::ScalarSum;
use funksphere_core::{ExactScalar, Monomial, Polynomial, Precision, Rational, RationalPoint};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn monomial(m: usize, max_deg: u16) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_deg, m)
        .prop_filter_map("degree bound", move |e| (e.iter().sum::<u16>() <= max_deg).then(|| Monomial::new(&e)))
}

fn poly_in(m: usize, max_deg: u16) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((monomial(m, max_deg), rational()), 0..5).prop_map(move |t| Polynomial::from_terms(m, t))
}

fn poly(max_dim: usize, max_deg: u16) -> impl Strategy<Value = Polynomial> {
    (2..=max_dim).prop_flat_map(move |m| poly_in(m, max_deg))
}

fn even_poly_in(m: usize, max_deg: u16) -> impl Strategy<Value = Polynomial> {
    poly_in(m, max_deg).prop_map(|p| p.parity_part(false))
}

/// Rational point of the unit sphere by inverse stereographic projection.
fn unit_point(m: usize) -> impl Strategy<Value = RationalPoint> {
    proptest::collection::vec(rational(), m - 1).prop_map(|u| RationalPoint::stereographic(&u))
}

fn offset() -> impl Strategy<Value = Rational> {
    (-7i64..=7).prop_map(|n| rat(n, 8))
}

fn nonzero_vec(m: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), m).prop_filter("non-zero", |v| v.iter().any(|c| !c.is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laplacian_of_norm_times_p(p in poly(5, 5)) {
        // Δ(‖x‖²P) - ‖x‖²ΔP = 4𝔼P + 2mP
        let m = p.dim() as i64;
        let lhs = &p.mul_norm_sq().laplacian() - &p.laplacian().mul_norm_sq();
        let rhs = &p.euler().scale(&rat(4, 1)) + &p.scale(&rat(2 * m, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laplacians_commute_with_rotations(
        (p, v) in (2usize..=4).prop_flat_map(|m| (poly_in(m, 4), nonzero_vec(m)))
    ) {
        let h = householder(&v);
        let rotated = p.substitute_orthogonal(&h).unwrap();
        prop_assert_eq!(rotated.laplacian(), p.laplacian().substitute_orthogonal(&h).unwrap());
        prop_assert_eq!(laplace_beltrami(&rotated), laplace_beltrami(&p).substitute_orthogonal(&h).unwrap());
    }

    #[test]
    fn directional_derivative_at_omega(
        (p, w, j) in (2usize..=4).prop_flat_map(|m| (poly_in(m, 5), unit_point(m), 0u32..=5))
    ) {
        // ⟨ω,∂⟩^j g at x = ω equals ℓ!/(ℓ-j)! g(ω) on each degree-ℓ part
        for (l, part) in p.homogeneous_parts() {
            let lhs = part.dir_deriv_power(&w, j).unwrap().evaluate(&w).unwrap();
            let ff = funksphere_core::poly::falling_factorial(l, j);
            let rhs = part.evaluate(&w).unwrap() * Rational::from_integer(ff);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn sphere_reduction_preserves_values(p in poly(4, 5), seeds in proptest::collection::vec(rational(), 3)) {
        let m = p.dim();
        let reduced = p.reduce_on_sphere();
        prop_assert_eq!(reduced.clone(), reduced.reduce_on_sphere());
        for i in 0..8 {
            let u: Vec<Rational> = (0..m - 1).map(|j| &seeds[(i + j) % 3] + rat(i as i64, 3)).collect();
            let x = RationalPoint::stereographic(&u);
            prop_assert_eq!(p.evaluate(&x).unwrap(), reduced.evaluate(&x).unwrap());
        }
    }

    #[test]
    fn fischer_reconstructs(p in poly(5, 6)) {
        let mut back = Polynomial::zero(p.dim());
        for part in fischer_decompose(&p) {
            for (_, h) in &part.components {
                prop_assert!(h.laplacian().is_zero());
            }
            back = &back + &part.reconstruct(p.dim());
        }
        prop_assert_eq!(back, p);
    }

    #[test]
    fn scalar_multiplication_is_associative(
        a in (rational(), -4i64..=4, 1i64..=12),
        b in (rational(), -4i64..=4, 1i64..=12),
        c in (rational(), -4i64..=4, 1i64..=12),
    ) {
        let mk = |(r, h, q): (Rational, i64, i64)| ExactScalar::new(r, h, rat(q, 1));
        let (a, b, c) = (mk(a), mk(b), mk(c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        let bits = Precision::DEFAULT.bits();
        let lhs = a.mul(&b).to_float(bits);
        let rhs = a.to_float(bits) * b.to_float(bits);
        let scale = 1.0f64.max(lhs.abs().to_f64());
        prop_assert!((lhs - rhs).abs().to_f64() <= 1e-25 * scale);
    }

    #[test]
    fn exact_add_agrees_with_float(a in (rational(), 0i64..=3), b in (rational(), 0i64..=3)) {
        let prec = Precision::DEFAULT;
        let sa = ExactScalar::new(a.0, a.1, Rational::one());
        let sb = ExactScalar::new(b.0, b.1, Rational::one());
        let sum = funksphere_core::scalar::exact_add(&sa, &sb, prec);
        let value = match &sum {
            ScalarSum::Exact(s) => { prop_assert!(sa.same_class(&sb) || sa.is_zero() || sb.is_zero()); s.to_float(prec.bits()) }
            ScalarSum::Numeric(n) => n.value().clone(),
        };
        let direct = sa.to_float(prec.bits()) + sb.to_float(prec.bits());
        prop_assert!((value - direct).abs().to_f64() < 1e-25);
    }

    #[test]
    fn subsphere_is_rotation_invariant(
        (p, w, v, off) in (2usize..=4).prop_flat_map(|m| (poly_in(m, 4), unit_point(m), nonzero_vec(m), offset()))
    ) {
        // ∫_(S_(p,ω)) P = ∫_(S_(p,Mω)) P∘Mᵀ
        let h = householder(&v);
        let rotated = p.substitute_orthogonal(&h).unwrap();
        let hw = mat_vec(&h, &w);
        let a = subsphere_integral(&p, &w, &off).unwrap();
        let b = subsphere_integral(&rotated, &hw, &off).unwrap();
        prop_assert_eq!(a.form(), b.form());
    }

    #[test]
    fn caps_are_complementary(
        (p, w, off) in (2usize..=5).prop_flat_map(|m| (poly_in(m, 5), unit_point(m), offset()))
    ) {
        let up = cap_integral(&p, &w, &off, CapSide::Upper).unwrap();
        let low = cap_integral(&p, &w, &off, CapSide::Lower).unwrap();
        let whole = sphere_integral(&p, &Rational::one()).unwrap();
        prop_assert_eq!(up.form().add(low.form()), whole.form().clone());
    }

    #[test]
    fn cap_reflection(m in 2usize..=6, k in 0u32..=3, extra in 0u32..=4, off in offset()) {
        let l = 2 * k + extra;
        let lower = cap_coefficient(k, l, &off, m, CapSide::Lower).unwrap();
        let upper = cap_coefficient(k, l, &-off.clone(), m, CapSide::Upper).unwrap();
        let sign = if l % 2 == 0 { ExactScalar::one() } else { ExactScalar::from_int(-1) };
        prop_assert_eq!(lower.form().clone(), upper.form().scale(&sign));
    }

    #[test]
    fn funk_respects_parity_and_linearity(
        (f, g, c) in (2usize..=5).prop_flat_map(|m| (poly_in(m, 5), poly_in(m, 5), rational()))
    ) {
        let m = f.dim();
        let ff = funk_transform(&SpherePolynomial::rational(&f), m).unwrap();
        let odd = funk_transform(&SpherePolynomial::rational(&f.parity_part(true)), m).unwrap();
        prop_assert!(odd.is_zero());
        // f and its sphere reduction have the same transform
        let red = funk_transform(&SpherePolynomial::rational(&f.reduce_on_sphere()), m).unwrap();
        prop_assert_eq!(ff.clone(), red);
        let gg = funk_transform(&SpherePolynomial::rational(&g), m).unwrap();
        let sum = funk_transform(&SpherePolynomial::rational(&(&f + &g.scale(&c))), m).unwrap();
        if !ff.is_zero() && !gg.is_zero() {
            prop_assert!(ff.scale().same_class(gg.scale()));
            let lhs = sum.poly().clone();
            let rf = ff.scale().div(&ff.scale().class());
            let rg = gg.scale().div(&gg.scale().class());
            let rhs = &ff.poly().scale(rf.as_rational().unwrap()) + &gg.poly().scale(&(rg.as_rational().unwrap() * &c));
            let rs = if sum.is_zero() { Rational::zero() } else { sum.scale().div(&ff.scale().class()).as_rational().unwrap().clone() };
            prop_assert_eq!(lhs.scale(&rs), rhs);
        }
    }

    #[test]
    fn dual_is_funk_over_area(f in (2usize..=5).prop_flat_map(|m| even_poly_in(m, 4))) {
        let m = f.dim();
        let sf = SpherePolynomial::rational(&f);
        let funk = funk_transform(&sf, m).unwrap();
        let dual = dual_transform(&sf, m).unwrap();
        prop_assert_eq!(dual, funk.scaled(&sigma(m - 1).inv()));
    }

    #[test]
    fn funk_matches_geodesic_subsphere(
        (h, w) in (3usize..=5).prop_flat_map(|m| (0u32..=3, Just(m), unit_point(m)))
            .prop_flat_map(|(k, m, w)| (Just(sh_basis(m, 2 * k)), Just(w)))
    ) {
        // ∫_(S_(0,ω)) H_(2k) = d_(m,k) H_(2k)(ω)
        let m = w.dim();
        for hh in h.iter().take(3) {
            let k = hh.degree().unwrap_or(0) / 2;
            let lhs = subsphere_integral(hh, &w, &Rational::zero()).unwrap().exact().unwrap();
            let rhs = funk_eigenvalue(m, k).unwrap().mul_rational(&hh.evaluate(&w).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inverters_agree(f in (3usize..=6).prop_flat_map(|m| even_poly_in(m, 4))) {
        let m = f.dim();
        let sf = SpherePolynomial::rational(&f);
        let fhat = funk_transform(&sf, m).unwrap();
        let expect = SpherePolynomial::rational(&f.reduce_on_sphere());
        prop_assert_eq!(&invert_general(&fhat, m).unwrap().f, &expect);
        prop_assert_eq!(&spectral_reference_inverter(&fhat, m).unwrap(), &expect);
        if m % 2 == 0 {
            prop_assert_eq!(&invert_even_m(&fhat, m).unwrap().f, &expect);
        }
    }
}

#[test]
fn harmonic_bases_are_orthogonal_across_degrees() {
    // distinct degrees integrate to zero against each other on the sphere
    for m in 2..=4 {
        for k1 in 0..=3u32 {
            for k2 in (k1 + 1)..=4u32 {
                for a in sh_basis(m, k1).iter().take(2) {
                    for b in sh_basis(m, k2).iter().take(2) {
                        let v = sphere_integral(&(a * b), &Rational::one()).unwrap();
                        assert!(v.form().is_zero(), "m={m} k1={k1} k2={k2}");
                    }
                }
            }
        }
    }
}

#[test]
fn sums_truncate_at_half_degree() {
    // past ⌊deg/2⌋ the Laplacian powers vanish, so the finite sums are complete
    let p = Polynomial::var(3, 0).pow(4) + Polynomial::var(3, 1).pow(2);
    assert!(p.laplacian_power(3).is_zero());
    let w = RationalPoint::stereographic(&[rat(1, 2), rat(1, 3)]);
    for l in 0..4 {
        let part = p.homogeneous_part(l);
        let mut chain = part.clone();
        for _ in 0..=(l / 2) {
            chain = chain.laplacian();
        }
        assert!(chain.is_zero());
    }
    let direct = sphere_integral(&p, &Rational::one()).unwrap();
    let reduced = sphere_integral(&p.reduce_on_sphere(), &Rational::one()).unwrap();
    assert_eq!(direct.form(), reduced.form());
    let _ = w;
}

#[test]
fn spherical_components_are_even_for_even_input() {
    let p = Polynomial::var(4, 0).pow(4) - Polynomial::var(4, 2).pow(2);
    assert_eq!(p.parity(), Parity::Even);
    for (deg, h) in spherical_components(&p) {
        assert_eq!(deg % 2, 0);
        assert!(h.laplacian().is_zero());
    }
}
