use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use gcdirac::algebra::{AlgebraElement, StructureConstantsTable};
use gcdirac::dirac::{spinor_ratio, Branch, PlaneWave};
use gcdirac::gc::{exp_closed, sgc_mul, GcAlgebra, GcNumber, SgcNumber};
use gcdirac::matrix::{GcMatrix, GcVector2};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_gc(r: &mut ChaCha8Rng, extent: f64) -> GcNumber {
    GcNumber::new(
        r.gen_range(-extent..extent),
        r.gen_range(-extent..extent),
        r.gen_range(-extent..extent),
    )
}

/// Product law written out component by component.
fn closed_form_product(x: GcNumber, y: GcNumber) -> GcNumber {
    GcNumber::new(
        x.a * y.a - x.b * y.b - x.c * y.c,
        x.a * y.b + x.b * y.a,
        x.a * y.c + x.c * y.a,
    )
}

#[test]
fn generic_product_is_bilinear() {
    for table in [StructureConstantsTable::gc(), StructureConstantsTable::quaternion()] {
        let t = Arc::new(table);
        let mut r = rng(1);
        let mut random = || {
            let c = (0..t.dim()).map(|_| r.gen_range(-5.0..5.0)).collect();
            AlgebraElement::new(&t, c).unwrap()
        };
        for _ in 0..1000 {
            let (x, y, z) = (random(), random(), random());
            let lhs = x.add(&y).unwrap().mul(&z).unwrap();
            let rhs = x.mul(&z).unwrap().add(&y.mul(&z).unwrap()).unwrap();
            let gap = lhs.sub(&rhs).unwrap().coeff_norm();
            assert!(gap <= 1e-12 * lhs.coeff_norm().max(rhs.coeff_norm()));
        }
    }
}

#[test]
fn table_product_matches_closed_form() {
    let mut r = rng(2);
    let alg = GcAlgebra::standard();
    for _ in 0..1000 {
        let (x, y) = (random_gc(&mut r, 10.0), random_gc(&mut r, 10.0));
        let p = alg.mul(x, y);
        assert!(p.approx_eq(closed_form_product(x, y), 1e-12));
        // commutativity of the full product
        assert_eq!(p, alg.mul(y, x));
    }
}

#[test]
fn conjugate_times_self_is_norm_squared() {
    let mut r = rng(3);
    for _ in 0..1000 {
        let q = random_gc(&mut r, 10.0);
        let p = q.conj() * q;
        assert!(rel_close(p.a, q.norm() * q.norm(), 1e-12));
        assert_eq!((p.b, p.c), (0.0, 0.0));
        assert_eq!(q.conj().conj(), q);
    }
}

#[test]
fn polar_round_trip() {
    let mut r = rng(4);
    for _ in 0..1000 {
        let q = random_gc(&mut r, 10.0);
        let p = q.to_polar();
        assert!(p.r() >= 0.0);
        assert!((0.0..=PI).contains(&p.theta()));
        assert!((0.0..TAU).contains(&p.phi()));
        assert!(GcNumber::from_polar(p).approx_eq(q, 1e-12), "{q}");
    }
}

#[test]
fn closed_exponential_has_unit_norm() {
    let mut r = rng(5);
    for _ in 0..1000 {
        let q = exp_closed(r.gen_range(-50.0..50.0), r.gen_range(0.0..TAU));
        assert!((q.norm() - 1.0).abs() <= 1e-14);
    }
}

#[test]
fn sub_algebra_is_associative_and_matches_embedding() {
    let mut r = rng(6);
    let alg = GcAlgebra::standard();
    for _ in 0..1000 {
        let phi = r.gen_range(0.0..TAU);
        let mut pick = || SgcNumber::new(r.gen_range(0.0..3.0), r.gen_range(-PI..PI), phi).unwrap();
        let (x, y, z) = (pick(), pick(), pick());

        let left = sgc_mul(sgc_mul(x, y).unwrap(), z).unwrap();
        let right = sgc_mul(x, sgc_mul(y, z).unwrap()).unwrap();
        assert!(rel_close(left.r(), right.r(), 1e-12));
        assert!((left.theta() - right.theta()).abs() <= 1e-12 * left.theta().abs().max(1.0));

        let (gx, gy, gz) = (x.to_gc(), y.to_gc(), z.to_gc());
        let l = alg.mul(alg.mul(gx, gy), gz);
        let rr = alg.mul(gx, alg.mul(gy, gz));
        assert!(l.approx_eq(rr, 1e-12));
        assert!(l.approx_eq(left.to_gc(), 1e-12));
    }
}

fn random_one_j(r: &mut ChaCha8Rng) -> GcNumber {
    GcNumber::new(r.gen_range(-2.0..2.0), 0.0, r.gen_range(-2.0..2.0))
}

fn random_one_j_matrix(r: &mut ChaCha8Rng) -> GcMatrix {
    GcMatrix::new([
        [random_one_j(r), random_one_j(r)],
        [random_one_j(r), random_one_j(r)],
    ])
}

#[test]
fn one_j_matrices_associate() {
    let mut r = rng(7);
    let alg = GcAlgebra::standard();
    for _ in 0..1000 {
        let (a, b, c) = (
            random_one_j_matrix(&mut r),
            random_one_j_matrix(&mut r),
            random_one_j_matrix(&mut r),
        );
        let left = alg.mat_mul(&alg.mat_mul(&a, &b), &c);
        let right = alg.mat_mul(&a, &alg.mat_mul(&b, &c));
        assert!(left.approx_eq(&right, 1e-12));

        let v = GcVector2::new(random_one_j(&mut r), random_one_j(&mut r));
        let (_, gap) = alg.operator_associator_probe(&a, &b, &v);
        assert!(gap <= 1e-12);
    }
}

#[test]
fn matrix_product_is_bilinear() {
    let mut r = rng(8);
    let alg = GcAlgebra::standard();
    let mut m = || {
        GcMatrix::new([
            [random_gc(&mut r, 3.0), random_gc(&mut r, 3.0)],
            [random_gc(&mut r, 3.0), random_gc(&mut r, 3.0)],
        ])
    };
    for _ in 0..500 {
        let (a, b, c) = (m(), m(), m());
        let lhs = alg.mat_mul(&(a + b), &c);
        let rhs = alg.mat_mul(&a, &c) + alg.mat_mul(&b, &c);
        assert!(lhs.approx_eq(&rhs, 1e-12));
    }
}

#[test]
fn general_triple_products_do_not_associate() {
    // the associator is nonzero somewhere once both i and j appear
    let mut r = rng(9);
    let alg = GcAlgebra::standard();
    let mut seen = false;
    for _ in 0..50 {
        let q = |r: &mut ChaCha8Rng| random_gc(r, 2.0);
        let a = GcMatrix::new([[q(&mut r), q(&mut r)], [q(&mut r), q(&mut r)]]);
        let b = GcMatrix::new([[q(&mut r), q(&mut r)], [q(&mut r), q(&mut r)]]);
        let v = GcVector2::new(q(&mut r), q(&mut r));
        seen |= alg.operator_associator_probe(&a, &b, &v).1 > 1e-6;
    }
    assert!(seen);
}

#[test]
fn dispersion_and_ratio_identities() {
    for i in 0..20 {
        for k in 0..20 {
            let m = 0.1 + 4.9 * i as f64 / 19.0;
            let p = -5.0 + 10.0 * k as f64 / 19.0;
            for b in Branch::BOTH {
                let w = PlaneWave::new(m, p, b).unwrap();
                let e = w.energy();
                assert!((e * e - p * p - m * m).abs() <= 1e-12 * e * e);
            }
            let prod = spinor_ratio(m, p, Branch::Positive).unwrap()
                * spinor_ratio(m, -p, Branch::Positive).unwrap();
            assert!((prod - 1.0).abs() <= 1e-12, "m={m} p={p}: {prod}");
        }
    }
}

#[test]
fn dirac_twice_recovers_mass_squared_on_grid() {
    let alg = GcAlgebra::standard();
    let mut r = rng(10);
    for i in 0..20 {
        for k in 0..20 {
            let m = 0.1 + 4.9 * i as f64 / 19.0;
            let p = -5.0 + 10.0 * k as f64 / 19.0;
            for b in Branch::BOTH {
                let w = PlaneWave::new(m, p, b).unwrap();
                let (x, t) = (r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0));
                let twice = w.apply_dirac_twice(alg, x, t);
                let target = w.eval(x, t).scale(m * m);
                let scale = target.norm().max(1.0);
                assert!(twice.max_abs_diff(&target) <= 1e-10 * scale);
            }
        }
    }
}

proptest! {
    #[test]
    fn power_is_left_fold(a in -3.0..3.0f64, b in -3.0..3.0f64, c in -3.0..3.0f64, n in 0u32..8) {
        let t = Arc::new(StructureConstantsTable::gc());
        let x = AlgebraElement::new(&t, vec![a, b, c]).unwrap();
        let mut acc = AlgebraElement::unit(&t);
        for _ in 0..n {
            acc = acc.mul(&x).unwrap();
        }
        prop_assert_eq!(x.power(n), acc.clone());
        let q = GcAlgebra::standard().power(GcNumber::new(a, b, c), n);
        prop_assert_eq!(q.to_array().to_vec(), acc.coeffs().to_vec());
    }

    #[test]
    fn addition_is_associative_and_commutative(
        x in prop::array::uniform3(-1e3..1e3f64),
        y in prop::array::uniform3(-1e3..1e3f64),
        z in prop::array::uniform3(-1e3..1e3f64),
    ) {
        let (x, y, z) = (GcNumber::from_array(x), GcNumber::from_array(y), GcNumber::from_array(z));
        prop_assert_eq!(x + y, y + x);
        prop_assert!(((x + y) + z).approx_eq(x + (y + z), 1e-9));
    }

    #[test]
    fn norm_is_subadditive_and_homogeneous(
        x in prop::array::uniform3(-10.0..10.0f64),
        y in prop::array::uniform3(-10.0..10.0f64),
        s in -10.0..10.0f64,
    ) {
        let (x, y) = (GcNumber::from_array(x), GcNumber::from_array(y));
        prop_assert!((x + y).norm() <= (x.norm() + y.norm()) * (1.0 + 1e-12));
        prop_assert!(rel_close(x.scale(s).norm(), s.abs() * x.norm(), 1e-12) || x.norm() == 0.0);
    }

    #[test]
    fn json_round_trip(a in -1e6..1e6f64, b in -1e6..1e6f64, c in -1e6..1e6f64) {
        let q = GcNumber::new(a, b, c);
        let text = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<GcNumber>(&text).unwrap(), q);
        let p = q.to_polar();
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<gcdirac::gc::PolarGc>(&text).unwrap(), p);
    }
}
