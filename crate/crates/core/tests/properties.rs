use proptest::prelude::*;

use qko_core::arith::{quotient_group, rat, Rational};
use qko_core::eta::{eta_pair, SpaceForm};
use qko_core::group::{delta_power, theta, GroupParams, VirtualCharacter};

fn frac() -> impl Strategy<Value = Rational> {
    (1i64..=16).prop_flat_map(|q| (0..2 * q).prop_map(move |n| rat(n, q)))
}

fn generators(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(frac(), n), 1..4)
}

/// `a·Θ₁ + b·Θ₂ + c·Δ + d·Δ²`
fn combo(params: GroupParams, coeffs: [i64; 4]) -> VirtualCharacter {
    let basis = [
        theta(1, params).unwrap(),
        theta(2, params).unwrap(),
        delta_power(1, params).unwrap(),
        delta_power(2, params).unwrap(),
    ];
    basis
        .iter()
        .zip(coeffs)
        .fold(VirtualCharacter::zero(params), |acc, (b, c)| &acc + &b.scale(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_ignores_generator_basis(gens in generators(3), shift in 0usize..3) {
        let base = quotient_group(3, &gens).unwrap();
        let mut changed = gens.clone();
        changed.rotate_left(shift % gens.len());
        // replace one generator by itself plus another, and repeat one
        let extra: Vec<Rational> = changed[0].iter().zip(changed.last().unwrap()).map(|(a, b)| a + b).collect();
        changed.push(extra);
        changed.push(changed[0].clone());
        prop_assert_eq!(quotient_group(3, &changed).unwrap(), base);
    }

    #[test]
    fn eta_is_bilinear(
        ell in prop::sample::select(vec![8u32, 16]),
        nu in 1usize..=3,
        s1 in prop::array::uniform4(-3i64..=3),
        s2 in prop::array::uniform4(-3i64..=3),
        r in prop::array::uniform4(-3i64..=3),
    ) {
        let params = GroupParams::new(ell).unwrap();
        let space = SpaceForm::quaternion(params, nu).unwrap();
        let (a, b, rho) = (combo(params, s1), combo(params, s2), combo(params, r));
        let lhs = eta_pair(&space, &(&a + &b), Some(&rho)).unwrap().exact;
        let rhs = eta_pair(&space, &a, Some(&rho)).unwrap().exact + eta_pair(&space, &b, Some(&rho)).unwrap().exact;
        prop_assert_eq!(lhs, rhs);
        let swapped = eta_pair(&space, &rho, Some(&a)).unwrap().exact;
        prop_assert_eq!(eta_pair(&space, &a, Some(&rho)).unwrap().exact, swapped);
    }
}
