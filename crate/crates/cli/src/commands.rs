use num_bigint::BigInt;
use qko_core::arith::{format_fraction, CycloNumber};
use qko_core::eta::{eta_pair, SpaceForm};
use qko_core::group::{
    fs_indicator, membership, theta, FpfRep, GroupParams, RepRing, SubgroupId,
};
use qko_core::ktheory::{ko_group, ksp_group, KGroupKind, KGroupReport};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::expr::parse_character;
use crate::report::{self, Report};
use crate::verify;

pub fn params_for(ell: u32) -> Result<GroupParams, CliError> {
    GroupParams::new(ell).map_err(|e| CliError::Usage(e.to_string()))
}

fn cyclo_string(x: &CycloNumber) -> String {
    match x.to_rational() {
        Ok(r) => format_fraction(&r),
        Err(_) => x.to_string(),
    }
}

fn short(x: &CycloNumber) -> String {
    match x.to_rational() {
        Ok(r) if r.is_integer() => r.to_integer().to_string(),
        Ok(r) => format_fraction(&r),
        Err(_) => x.to_string(),
    }
}

pub fn chartable(ell: u32) -> Result<Report, CliError> {
    let params = params_for(ell)?;
    let classes = params.conjugacy_classes();
    let irreps = params.irreducibles();
    let mut r = Report::new("chartable");
    r.params.insert("ell".into(), json!(ell));

    r.results.insert(
        "zeta".into(),
        json!(format!("z = exp(2*pi*i/{}), the image of xi", params.conductor())),
    );
    r.results.insert(
        "classes".into(),
        Value::Array(
            classes
                .iter()
                .map(|c| json!({"representative": c.representative.to_string(), "size": c.size}))
                .collect(),
        ),
    );
    let mut rows_json = Vec::new();
    let mut rows_text = Vec::new();
    let (mut real, mut quaternionic) = (Vec::new(), Vec::new());
    for &chi in &irreps {
        let values: Vec<CycloNumber> = classes
            .iter()
            .map(|c| qko_core::group::char_value(&params, chi, c.representative))
            .collect();
        let fs = fs_indicator(params, chi);
        match fs {
            1 => real.push(chi.to_string()),
            -1 => quaternionic.push(chi.to_string()),
            _ => {}
        }
        rows_json.push(json!({
            "label": chi.to_string(),
            "dimension": chi.dimension(),
            "fs_indicator": fs,
            "values": values.iter().map(cyclo_string).collect::<Vec<_>>(),
        }));
        let mut row = vec![chi.to_string(), fs.to_string()];
        row.extend(values.iter().map(short));
        rows_text.push(row);
    }
    r.results.insert("characters".into(), Value::Array(rows_json));

    // RO is spanned by the real irreducibles and twice the quaternionic
    // ones; RSp the other way round.
    let doubled = |v: &[String]| v.iter().map(|s| format!("2*{s}")).collect::<Vec<_>>();
    let ro: Vec<String> = real.iter().cloned().chain(doubled(&quaternionic)).collect();
    let rsp: Vec<String> = quaternionic.iter().cloned().chain(doubled(&real)).collect();
    let mut thetas = Map::new();
    for i in [1u8, 2] {
        let t = theta(i, params)?;
        thetas.insert(
            format!("Theta{i}"),
            json!({
                "decomposition": t.to_string(),
                "in_RO0": membership(&t, RepRing::RO0),
                "in_RSp0": membership(&t, RepRing::RSp0),
            }),
        );
    }
    r.results.insert(
        "spans".into(),
        json!({"RO": ro, "RSp": rsp, "real": real, "quaternionic": quaternionic}),
    );
    r.results.insert("theta".into(), Value::Object(thetas.clone()));

    let mut header = vec!["chi".to_string(), "FS".to_string()];
    header.extend(classes.iter().map(|c| format!("{} ({})", c.representative, c.size)));
    let mut text = format!("Character table of Q_{ell} ({} classes), z = exp(2 pi i/{})\n\n", classes.len(), params.conductor());
    text.push_str(&report::table(&header, &rows_text));
    text.push_str(&format!("\nRO  spanned by {}\nRSp spanned by {}\n", ro.join(", "), rsp.join(", ")));
    for i in [1u8, 2] {
        let t = theta(i, params)?;
        text.push_str(&format!(
            "Theta{i} = {t}  (RO0: {}, RSp0: {})\n",
            membership(&t, RepRing::RO0),
            membership(&t, RepRing::RSp0)
        ));
    }
    r.text = text;
    Ok(r)
}

fn group_text(g: &qko_core::arith::AbelianGroup) -> String {
    format!("{g}  (order {})", g.order())
}

fn kgroup(rep: &KGroupReport, command: &str) -> Report {
    let mut r = Report::new(command);
    r.params.insert("ell".into(), json!(rep.params.ell()));
    let (index_key, theta_key) = match rep.kind {
        KGroupKind::Ksp => ("nu", "a_block"),
        KGroupKind::Ko => ("k", "c_block"),
    };
    r.params.insert(index_key.into(), json!(rep.index));
    r.results.insert("group".into(), report::group(&rep.group));
    r.results.insert(theta_key.into(), report::group(&rep.a_block));
    r.results.insert("b_block".into(), report::group(&rep.b_block));
    r.results.insert("order".into(), json!(rep.order.to_string()));
    r.results.insert("ahss_bound".into(), json!(rep.ahss_bound.to_string()));
    r.results.insert("formula_order".into(), json!(rep.formula_order.to_string()));
    r.results.insert("matrix".into(), report::matrix(&rep.matrix));
    r.results.insert(
        "splitting".into(),
        json!({
            "A": rep.splitting.a_part,
            "B": rep.splitting.b_part,
            "ko_degree": rep.splitting.ko_degree,
        }),
    );
    if rep.kind == KGroupKind::Ko {
        r.results.insert("dimension_shift".into(), json!({"nu": rep.nu}));
    }

    let title = match rep.kind {
        KGroupKind::Ksp => format!(
            "KSp(M^{}(Q_{}, {}*gamma_1))",
            4 * rep.index - 1,
            rep.params.ell(),
            rep.index
        ),
        KGroupKind::Ko => format!("ko_{}(BQ_{})", 4 * rep.index - 1, rep.params.ell()),
    };
    let mut text = format!("{title}\n\neta matrix (mod 2Z):\n{}\n", rep.matrix);
    text.push_str(&format!("group      {}\n", group_text(&rep.group)));
    text.push_str(&format!("{theta_key}    {}\n", group_text(&rep.a_block)));
    text.push_str(&format!("b_block    {}\n", group_text(&rep.b_block)));
    text.push_str(&format!("AHSS bound {}\n", rep.ahss_bound));
    if rep.kind == KGroupKind::Ko {
        text.push_str(&format!("B block shared with nu = {}\n", rep.nu));
    }
    text.push_str(&format!("A part ~ {}\nB part ~ {}\n", rep.splitting.a_part, rep.splitting.b_part));
    r.text = text;
    r
}

pub fn ksp(ell: u32, nu: usize) -> Result<Report, CliError> {
    let params = params_for(ell)?;
    if nu < 2 {
        return Err(CliError::Usage("--nu must be at least 2".into()));
    }
    let rep = ksp_group(nu, params)?;
    let mut r = kgroup(&rep, "ksp");
    r.checks = verify::ksp_report_checks(&rep);
    Ok(r)
}

pub fn ko(ell: u32, k: usize) -> Result<Report, CliError> {
    let params = params_for(ell)?;
    if k < 1 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let rep = ko_group(k, params)?;
    let ksp_rep = ksp_group(k + 1, params)?;
    let mut r = kgroup(&rep, "ko");
    r.checks = verify::ko_report_checks(&rep, &ksp_rep);
    Ok(r)
}

pub fn parse_subgroup(s: &str) -> Result<SubgroupId, String> {
    match s {
        "full" => Ok(SubgroupId::Full),
        "I" => Ok(SubgroupId::GenI),
        "J" => Ok(SubgroupId::GenJ),
        "xiJ" => Ok(SubgroupId::GenXiJ),
        _ => Err(format!("unknown subgroup `{s}` (expected full, I, J or xiJ)")),
    }
}

pub fn eta(
    ell: u32,
    nu: usize,
    sigma: &str,
    bundle: Option<&str>,
    subgroup: SubgroupId,
) -> Result<Report, CliError> {
    let params = params_for(ell)?;
    if nu < 1 {
        return Err(CliError::Usage("--nu must be at least 1".into()));
    }
    let s = parse_character(sigma, params)?;
    if s.dimension() != BigInt::from(0) {
        return Err(CliError::Usage(format!(
            "sigma `{sigma}` has dimension {}, expected 0",
            s.dimension()
        )));
    }
    let b = bundle.map(|e| parse_character(e, params)).transpose()?;
    let space = SpaceForm::new(subgroup, FpfRep::multiple_of_gamma1(params, nu)?, 0);
    let value = eta_pair(&space, &s, b.as_ref())?;

    let mut r = Report::new("eta");
    r.params.insert("ell".into(), json!(ell));
    r.params.insert("nu".into(), json!(nu));
    r.params.insert("sigma".into(), json!(sigma));
    r.params.insert("bundle".into(), bundle.map_or(Value::Null, |b| json!(b)));
    r.params.insert("subgroup".into(), json!(subgroup.to_string()));
    r.results.insert("sigma".into(), json!(s.to_string()));
    if let Some(b) = &b {
        r.results.insert("bundle".into(), json!(b.to_string()));
    }
    r.results.insert("exact".into(), report::fraction(&value.exact));
    r.results.insert("mod_2z".into(), report::fraction(value.residue.rep()));
    r.text = format!(
        "eta^sigma(M^{}({}, {nu}*gamma_1){})\nsigma  = {s}\nexact  = {}\nmod 2Z = {}\n",
        4 * nu - 1,
        subgroup,
        b.as_ref().map(|b| format!(", {b}")).unwrap_or_default(),
        format_fraction(&value.exact),
        value.residue,
    );
    Ok(r)
}

