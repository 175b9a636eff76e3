//! Integer linear combinations of named characters, e.g.
//! `2Theta1 - Delta^3 + gamma_2 - 2rho0`.

use qko_core::group::{delta_power, theta, GroupParams, IrredLabel, VirtualCharacter};

use crate::error::CliError;

fn parse_error(input: &str, why: impl Into<String>) -> CliError {
    CliError::Usage(format!("cannot parse `{input}`: {}", why.into()))
}

fn atom(name: &str, input: &str, params: GroupParams) -> Result<VirtualCharacter, CliError> {
    if name.is_empty() {
        // bare integer: a multiple of the trivial character
        return Ok(VirtualCharacter::irreducible(params, IrredLabel::Rho0));
    }
    match name {
        "Theta1" => return Ok(theta(1, params)?),
        "Theta2" => return Ok(theta(2, params)?),
        "Delta" => return Ok(delta_power(1, params)?),
        _ => {}
    }
    if let Some(exp) = name.strip_prefix("Delta^") {
        let r: u32 = exp
            .parse()
            .map_err(|_| parse_error(input, format!("bad exponent in `{name}`")))?;
        if r == 0 {
            return Err(parse_error(input, "Delta^0 is not allowed"));
        }
        return Ok(delta_power(r, params)?);
    }
    let label: IrredLabel = name
        .parse()
        .map_err(|_| parse_error(input, format!("unknown character `{name}`")))?;
    if !label.is_valid_for(&params) {
        return Err(parse_error(
            input,
            format!("`{name}` is not an irreducible of Q_{}", params.ell()),
        ));
    }
    Ok(VirtualCharacter::irreducible(params, label))
}

/// Parse one term such as `2Theta1`, `3*Delta^2`, `gamma_1` or `4`.
fn term(text: &str, input: &str, params: GroupParams) -> Result<VirtualCharacter, CliError> {
    let digits = text.chars().take_while(char::is_ascii_digit).count();
    let (num, rest) = text.split_at(digits);
    let rest = rest.strip_prefix('*').unwrap_or(rest);
    if num.is_empty() && rest.is_empty() {
        return Err(parse_error(input, "empty term"));
    }
    let coeff: i64 = if num.is_empty() {
        1
    } else {
        num.parse().map_err(|_| parse_error(input, "coefficient too large"))?
    };
    if !num.is_empty() && text[digits..].starts_with('*') && rest.is_empty() {
        return Err(parse_error(input, "dangling `*`"));
    }
    Ok(atom(rest, input, params)?.scale(coeff))
}

pub fn parse_character(input: &str, params: GroupParams) -> Result<VirtualCharacter, CliError> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(parse_error(input, "empty expression"));
    }
    let mut total = VirtualCharacter::zero(params);
    let mut sign = 1;
    let mut start = 0;
    let bytes = compact.as_bytes();
    let mut i = 0;
    // leading sign
    if bytes[0] == b'+' || bytes[0] == b'-' {
        sign = if bytes[0] == b'-' { -1 } else { 1 };
        start = 1;
        i = 1;
    }
    loop {
        let end = i >= bytes.len();
        if end || bytes[i] == b'+' || bytes[i] == b'-' {
            let t = term(&compact[start..i], input, params)?;
            total = &total + &t.scale(sign);
            if end {
                break;
            }
            sign = if bytes[i] == b'-' { -1 } else { 1 };
            start = i + 1;
        }
        i += 1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qko_core::group::delta;

    fn p(ell: u32) -> GroupParams {
        GroupParams::new(ell).unwrap()
    }

    #[test]
    fn basic_tokens() {
        let params = p(8);
        assert_eq!(parse_character("Theta1", params).unwrap(), theta(1, params).unwrap());
        assert_eq!(parse_character("Delta", params).unwrap(), delta(params));
        assert_eq!(
            parse_character("Delta^3", params).unwrap(),
            delta_power(3, params).unwrap()
        );
        let k = parse_character("kappa2 - kappa1", params).unwrap();
        assert_eq!(k, theta(1, params).unwrap());
    }

    #[test]
    fn coefficients_and_constants() {
        let params = p(16);
        let a = parse_character("2 - gamma_1", params).unwrap();
        assert_eq!(a, delta(params));
        let b = parse_character(" 2*Theta1 + -Theta2", params);
        assert!(b.is_err());
        let c = parse_character("-2Theta1+3 Delta^2", params).unwrap();
        let expect = &theta(1, params).unwrap().scale(-2) + &delta_power(2, params).unwrap().scale(3);
        assert_eq!(c, expect);
        assert_eq!(parse_character("gamma3", params).unwrap().dimension(), 2.into());
    }

    #[test]
    fn rejects_garbage() {
        let params = p(8);
        for bad in ["", "Theta3", "Delta^0", "Delta^x", "gamma_2", "2*", "+", "Theta1++Theta2"] {
            assert!(parse_character(bad, params).is_err(), "{bad}");
        }
    }
}
