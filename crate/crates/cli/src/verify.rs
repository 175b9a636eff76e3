//! The named checks behind `qko verify`, `qko ksp` and `qko ko`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use qko_core::arith::{rat, AbelianGroup, Rational, ResidueMod2Z};
use qko_core::eta::{eta_pair, eta_theta_closed_form, SpaceForm};
use qko_core::group::{
    c_constant, delta_power, fs_indicator, membership, theta, GroupParams, IrredLabel, RepRing,
    VirtualCharacter,
};
use qko_core::ktheory::{
    a_closed_form, b_closed_form, c_closed_form, ko_group, ksp_group, sigma_bs3_bn_ko, EtaMatrix,
    KGroupReport,
};
use serde_json::json;

use crate::commands::params_for;
use crate::error::CliError;
use crate::report::{Check, Report};

fn tag(params: GroupParams) -> String {
    format!("ell{}", params.ell())
}

fn agreement(name: String, agree: usize, total: usize) -> Check {
    Check::new(name, format!("{total}/{total} agree"), format!("{agree}/{total} agree"))
}

fn square(order: BigInt) -> AbelianGroup {
    AbelianGroup::from_cyclic_orders(&[order.clone(), order])
}

fn residues(m: &[[Rational; 2]; 2]) -> Vec<Vec<ResidueMod2Z>> {
    m.iter().map(|r| r.iter().cloned().map(ResidueMod2Z::new).collect()).collect()
}

fn matrix_text(entries: &[Vec<ResidueMod2Z>]) -> String {
    let rows: Vec<String> = entries
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[[{}]]", rows.join("], ["))
}

fn off_diagonal_check(name: String, m: &EtaMatrix) -> Check {
    let n = m.rows();
    let zero = m.block(0..2, 2..n).is_zero() && m.block(2..n, 0..2).is_zero();
    Check::new(name, "zero", if zero { "zero" } else { "nonzero" })
}

/// Checks attached to a computed `KSp(M^{4ν-1})`.
pub fn ksp_report_checks(rep: &KGroupReport) -> Vec<Check> {
    let params = rep.params;
    let nu = rep.index;
    let t = format!("{}/nu{nu}", tag(params));
    let m = &rep.matrix;
    let expected_a = square(BigInt::one() << if nu % 2 == 0 { nu } else { nu - 1 });
    let table = sigma_bs3_bn_ko(4 * nu - 5);
    vec![
        Check::new(format!("thm4.3/order/{t}"), &rep.formula_order, &rep.order),
        Check::new(format!("ksp/ahss/{t}"), &rep.ahss_bound, &rep.order),
        Check::new(format!("ksp/a-block/{t}"), &expected_a, &rep.a_block),
        Check::new(
            format!("ksp/matrix-a/{t}"),
            matrix_text(&residues(&a_closed_form(nu, params))),
            matrix_text(&m.block(0..2, 0..2).entries),
        ),
        Check::new(
            format!("ksp/matrix-b/{t}"),
            matrix_text(&b_closed_form(nu, params)),
            matrix_text(&m.block(2..nu + 1, 2..nu + 1).entries),
        ),
        off_diagonal_check(format!("ksp/off-diagonal/{t}"), m),
        Check::new(
            format!("ksp/direct-sum/{t}"),
            rep.a_block.direct_sum(&rep.b_block),
            &rep.group,
        ),
        Check::new(format!("ksp/splitting/{t}"), table.direct_sum(&table), &rep.a_block),
    ]
}

/// Checks attached to a computed `ko_{4k-1}(BQ_ℓ)`, given `KSp` at `ν = k+1`.
pub fn ko_report_checks(rep: &KGroupReport, ksp: &KGroupReport) -> Vec<Check> {
    let params = rep.params;
    let k = rep.index;
    let t = format!("{}/k{k}", tag(params));
    let m = &rep.matrix;
    let expected_c = square(BigInt::one() << if k % 2 == 0 { k } else { k + 1 });
    let c = m.block(0..2, 0..2);
    let printed = c_closed_form(k, params);
    let c_check = if params.ell() == 8 {
        Check::new(
            format!("ko/matrix-c/{t}"),
            matrix_text(&residues(&printed)),
            matrix_text(&c.entries),
        )
    } else {
        let printed_span = qko_core::arith::quotient_group(2, &[printed[0].to_vec(), printed[1].to_vec()]);
        match (c.row_span(), printed_span) {
            (Ok(a), Ok(b)) => Check::new(format!("ko/matrix-c-span/{t}"), b, a),
            (a, b) => Check::judged(format!("ko/matrix-c-span/{t}"), false, format!("{b:?}"), format!("{a:?}")),
        }
    };
    let table = sigma_bs3_bn_ko(4 * k - 1);
    vec![
        Check::new(format!("ko/order/{t}"), &rep.formula_order, &rep.order),
        Check::new(format!("ko/ahss/{t}"), &rep.ahss_bound, &rep.order),
        Check::new(format!("ko/c-block/{t}"), &expected_c, &rep.a_block),
        c_check,
        Check::new(
            format!("ko/b-manifolds-vs-bundles/{t}"),
            matrix_text(&ksp.matrix.block(2..k + 2, 2..k + 2).entries),
            matrix_text(&m.block(2..k + 2, 2..k + 2).entries),
        ),
        off_diagonal_check(format!("ko/off-diagonal/{t}"), m),
        Check::new(format!("ko/direct-sum/{t}"), rep.a_block.direct_sum(&rep.b_block), &rep.group),
        Check::new(format!("ko-vs-ksp/{t}"), &ksp.group, &rep.group),
        Check::new(format!("ko/splitting/{t}"), table.direct_sum(&table), &rep.a_block),
    ]
}

fn irr(params: GroupParams, chi: IrredLabel) -> VirtualCharacter {
    VirtualCharacter::irreducible(params, chi)
}

/// `Θ₁, Θ₂` written out in irreducibles.
fn theta_expected(i: u8, params: GroupParams) -> VirtualCharacter {
    let k2 = irr(params, IrredLabel::Kappa2);
    if params.ell() == 8 {
        let other = if i == 1 { IrredLabel::Kappa1 } else { IrredLabel::Kappa3 };
        return &k2 - &irr(params, other);
    }
    let other = if i == 1 { IrredLabel::Kappa3 } else { IrredLabel::Kappa1 };
    let mut total = &k2 + &irr(params, other);
    for m in 1..params.ell() / 8 {
        let g = irr(params, IrredLabel::Gamma(2 * m));
        total = if m % 2 == 0 { &total + &g } else { &total - &g };
    }
    total
}

fn expected_fs(chi: IrredLabel) -> i8 {
    match chi {
        IrredLabel::Gamma(u) if u % 2 == 1 => -1,
        _ => 1,
    }
}

pub fn group_checks(params: GroupParams) -> Result<Vec<Check>, CliError> {
    let t = tag(params);
    let irreps = params.irreducibles();
    let n = irreps.len();
    let mut checks = vec![Check::new(format!("chars/count/{t}"), params.ell() / 4 + 3, n)];

    let mut agree = 0;
    for (a, &x) in irreps.iter().enumerate() {
        for (b, &y) in irreps.iter().enumerate() {
            let ip = irr(params, x).class_function().inner(&irr(params, y).class_function())?;
            let want = if a == b { Rational::one() } else { Rational::zero() };
            agree += usize::from(ip == want);
        }
    }
    checks.push(agreement(format!("chars/orthonormal/{t}"), agree, n * n));

    let dim_sq: u32 = irreps.iter().map(|c| c.dimension().pow(2)).sum();
    checks.push(Check::new(format!("chars/dim-squares/{t}"), params.ell(), dim_sq));

    let fmt_fs = |f: &dyn Fn(IrredLabel) -> i8| {
        irreps.iter().map(|&c| f(c).to_string()).collect::<Vec<_>>().join(",")
    };
    checks.push(Check::new(
        format!("chars/fs-indicators/{t}"),
        fmt_fs(&expected_fs),
        fmt_fs(&|c| fs_indicator(params, c)),
    ));

    for i in [1u8, 2] {
        let th = theta(i, params)?;
        checks.push(Check::new(format!("theta{i}/decomposition/{t}"), theta_expected(i, params), &th));
        checks.push(Check::new(format!("theta{i}/in-ro0/{t}"), true, membership(&th, RepRing::RO0)));
    }

    let ell = i64::from(params.ell());
    checks.push(Check::new(
        format!("c0/{t}"),
        qko_core::arith::format_fraction(&rat(ell - 1, ell)),
        qko_core::arith::format_fraction(&c_constant(0, params)),
    ));
    let two = BigInt::from(2);
    let mut ok = 0;
    for i in 1..=20i64 {
        let even = c_constant(2 * i, params);
        let odd = c_constant(2 * i - 1, params);
        ok += usize::from(even.is_integer());
        ok += usize::from(odd.is_integer() && (odd.to_integer() % &two).is_zero());
    }
    checks.push(agreement(format!("c-integrality/{t}"), ok, 40));
    Ok(checks)
}

pub fn eta_checks(params: GroupParams, nu: usize) -> Result<Vec<Check>, CliError> {
    let t = format!("{}/nu{nu}", tag(params));
    let space = SpaceForm::quaternion(params, nu)?;
    let deltas: Vec<VirtualCharacter> = (1..=5).map(|r| delta_power(r, params)).collect::<Result<_, _>>()?;
    let thetas = [theta(1, params)?, theta(2, params)?];

    // η^{Δ^r}(Δ^s) = c_{r+s-ν}; s = 0 is the untwisted invariant and r = 0
    // is the same value by symmetry of the closed form.
    let (mut agree, mut total) = (0, 0);
    for (ri, d) in deltas.iter().enumerate() {
        for s in 0..=5usize {
            let rho = if s == 0 { None } else { Some(&deltas[s - 1]) };
            let got = eta_pair(&space, d, rho)?.exact;
            let want = c_constant((ri + 1 + s) as i64 - nu as i64, params);
            agree += usize::from(got == want);
            total += 1;
        }
    }
    let mut checks = vec![agreement(format!("eta/delta-delta/{t}"), agree, total)];

    let (mut agree, mut total) = (0, 0);
    for (a, sa) in thetas.iter().enumerate() {
        for (b, sb) in thetas.iter().enumerate() {
            let got = eta_pair(&space, sa, Some(sb))?.exact;
            let want = eta_theta_closed_form(a as u8 + 1, b as u8 + 1, nu as u32, params)?;
            agree += usize::from(got == want);
            total += 1;
        }
    }
    checks.push(agreement(format!("eta/theta-theta/{t}"), agree, total));

    let (mut agree, mut total) = (0, 0);
    for th in &thetas {
        agree += usize::from(eta_pair(&space, th, None)?.exact.is_zero());
        total += 1;
        for d in &deltas {
            agree += usize::from(eta_pair(&space, th, Some(d))?.exact.is_zero());
            agree += usize::from(eta_pair(&space, d, Some(th))?.exact.is_zero());
            total += 2;
        }
    }
    checks.push(agreement(format!("eta/theta-delta-zero/{t}"), agree, total));
    Ok(checks)
}

fn structure_failure(name: String, e: qko_core::Error) -> Result<Vec<Check>, CliError> {
    match e {
        qko_core::Error::StructureMismatch(m) => Ok(vec![Check::judged(name, false, "consistent", m)]),
        other => Err(other.into()),
    }
}

fn checks_for_ell(params: GroupParams, max_nu: usize, max_k: usize) -> Result<Vec<Check>, CliError> {
    let mut checks = group_checks(params)?;
    let t = tag(params);
    for nu in 2..=max_nu {
        checks.extend(eta_checks(params, nu)?);
        match ksp_group(nu, params) {
            Ok(rep) => checks.extend(ksp_report_checks(&rep)),
            Err(e) => checks.extend(structure_failure(format!("ksp/structure/{t}/nu{nu}"), e)?),
        }
    }
    for k in 1..=max_k {
        match (ko_group(k, params), ksp_group(k + 1, params)) {
            (Ok(rep), Ok(ksp)) => checks.extend(ko_report_checks(&rep, &ksp)),
            (Err(e), _) | (_, Err(e)) => {
                checks.extend(structure_failure(format!("ko/structure/{t}/k{k}"), e)?)
            }
        }
    }
    Ok(checks)
}

pub fn run(ells: &[u32], max_nu: usize, max_k: usize) -> Result<Report, CliError> {
    if ells.is_empty() {
        return Err(CliError::Usage("--ell needs at least one value".into()));
    }
    let params: Vec<GroupParams> = ells.iter().map(|&e| params_for(e)).collect::<Result<_, _>>()?;
    let per_ell: Vec<Result<Vec<Check>, CliError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = params
            .iter()
            .map(|&p| scope.spawn(move || checks_for_ell(p, max_nu, max_k)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    let mut r = Report::new("verify");
    r.params.insert("ell".into(), json!(ells));
    r.params.insert("max_nu".into(), json!(max_nu));
    r.params.insert("max_k".into(), json!(max_k));
    for checks in per_ell {
        r.checks.extend(checks?);
    }
    let failed = r.checks.iter().filter(|c| !c.pass).count();
    r.results.insert("total".into(), json!(r.checks.len()));
    r.results.insert("failed".into(), json!(failed));
    Ok(r)
}
