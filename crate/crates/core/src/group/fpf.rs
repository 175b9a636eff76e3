//! Fixed point free representations `γ_{s₁} ⊕ … ⊕ γ_{s_ν}`.

use super::{GroupElement, GroupParams};
use crate::arith::CycloNumber;
use crate::error::{Error, Result};

pub type Mat2 = [[CycloNumber; 2]; 2];

/// Explicit matrix of `γ_u(g)`: `γ_u(ξ) = diag(ξ^u, ξ^{-u})`,
/// `γ_u(J) = [[0, (-1)^u], [1, 0]]`.
pub fn gamma_matrix(params: &GroupParams, u: i64, g: GroupElement) -> Mat2 {
    let m = params.conductor();
    let e = u * g.xi_exponent() as i64;
    let d0 = CycloNumber::zeta_pow(m, e);
    let d1 = CycloNumber::zeta_pow(m, -e);
    let zero = || CycloNumber::zero(m);
    if g.j_exponent() == 0 {
        [[d0, zero()], [zero(), d1]]
    } else {
        let sign = if u.rem_euclid(2) == 0 { 1 } else { -1 };
        // diag(ξ^{ua}, ξ^{-ua}) · γ_u(J)
        [[zero(), d0.scale(&crate::arith::rat(sign, 1))], [d1, zero()]]
    }
}

fn det_i_minus_2x2(mat: &Mat2) -> CycloNumber {
    let m = mat[0][0].conductor();
    let one = CycloNumber::one(m);
    let a = &one - &mat[0][0];
    let d = &one - &mat[1][1];
    &(&a * &d) - &(&mat[0][1] * &mat[1][0])
}

/// `Π_i det(I - γ_{sᵢ}(g))` for an arbitrary list of summands.
pub fn det_i_minus_summands(params: &GroupParams, summands: &[i64], g: GroupElement) -> CycloNumber {
    summands
        .iter()
        .fold(CycloNumber::one(params.conductor()), |acc, &s| {
            &acc * &det_i_minus_2x2(&gamma_matrix(params, s, g))
        })
}

/// True iff `det(I - γ_s(g)) ≠ 0` for every `g ≠ 1`.
pub fn is_fixed_point_free(summands: &[i64], params: &GroupParams) -> bool {
    !summands.is_empty()
        && params
            .elements()
            .into_iter()
            .filter(|g| !g.is_identity())
            .all(|g| !det_i_minus_summands(params, summands, g).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpfRep {
    params: GroupParams,
    summands: Vec<i64>,
}

impl FpfRep {
    pub fn new(params: GroupParams, summands: Vec<i64>) -> Result<Self> {
        if !is_fixed_point_free(&summands, &params) {
            return Err(Error::NotFixedPointFree(summands));
        }
        Ok(FpfRep { params, summands })
    }

    /// `ν · γ₁`.
    pub fn multiple_of_gamma1(params: GroupParams, nu: usize) -> Result<Self> {
        Self::new(params, vec![1; nu])
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn summands(&self) -> &[i64] {
        &self.summands
    }

    /// Number of two-dimensional summands.
    pub fn nu(&self) -> usize {
        self.summands.len()
    }

    /// Dimension `4ν - 1` of the sphere quotient.
    pub fn space_form_dimension(&self) -> usize {
        4 * self.nu() - 1
    }
}

pub fn det_i_minus(tau: &FpfRep, g: GroupElement) -> CycloNumber {
    det_i_minus_summands(&tau.params, &tau.summands, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::group::{delta, gamma_trace};

    fn p(ell: u32) -> GroupParams {
        GroupParams::new(ell).unwrap()
    }

    fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }

    #[test]
    fn gamma_matrices_are_homomorphisms() {
        for ell in [8, 16] {
            let params = p(ell);
            for u in [1i64, 2, 3, 5] {
                for x in params.elements() {
                    for y in params.elements() {
                        let lhs = gamma_matrix(&params, u, params.mul(x, y));
                        let rhs = mat_mul(&gamma_matrix(&params, u, x), &gamma_matrix(&params, u, y));
                        assert_eq!(lhs, rhs);
                    }
                    let m = gamma_matrix(&params, u, x);
                    assert_eq!(&m[0][0] + &m[1][1], gamma_trace(&params, u, x));
                }
            }
        }
    }

    #[test]
    fn det_examples() {
        for ell in [8, 16, 32] {
            let params = p(ell);
            let tau = FpfRep::multiple_of_gamma1(params, 1).unwrap();
            assert!(det_i_minus(&tau, params.identity()).is_zero());
            for a in 0..(ell / 2) as i64 {
                assert_eq!(det_i_minus(&tau, params.element(a, 1)).to_rational(), Ok(rat(2, 1)));
            }
            assert_eq!(det_i_minus(&tau, params.minus_one()).to_rational(), Ok(rat(4, 1)));
        }
    }

    #[test]
    fn delta_class_function_is_det() {
        for ell in [8, 16, 32] {
            let params = p(ell);
            let tau = FpfRep::multiple_of_gamma1(params, 1).unwrap();
            let d = delta(params).class_function();
            for g in params.elements() {
                assert_eq!(d.at(g), &det_i_minus(&tau, g));
            }
        }
    }

    #[test]
    fn det_is_product_over_summands() {
        let params = p(32);
        let tau = FpfRep::new(params, vec![1, 3, 5]).unwrap();
        for g in params.elements() {
            let prod = [1i64, 3, 5].iter().fold(crate::arith::CycloNumber::one(params.conductor()), |acc, &s| {
                &acc * &det_i_minus_summands(&params, &[s], g)
            });
            assert_eq!(det_i_minus(&tau, g), prod);
        }
    }

    #[test]
    fn fixed_point_free_criterion() {
        let params = p(16);
        assert!(is_fixed_point_free(&[1, 1], &params));
        assert!(!is_fixed_point_free(&[2], &params));
        assert!(is_fixed_point_free(&[1, 3], &params));
        assert!(!is_fixed_point_free(&[], &params));
        assert!(matches!(FpfRep::new(params, vec![1, 2]), Err(Error::NotFixedPointFree(_))));
        for ell in [8, 16, 32] {
            let params = p(ell);
            for s in -9i64..=9 {
                assert_eq!(is_fixed_point_free(&[s], &params), s % 2 != 0, "s = {s}, ell = {ell}");
            }
        }
    }
}
