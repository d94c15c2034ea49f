use std::io::Write;

use gcdirac::gc::{GcNumber, PolarGc};
use serde::Serialize;

use crate::{CliError, Format, Outcome};

#[derive(Serialize)]
struct PolarOutput {
    input: GcNumber,
    polar: PolarGc,
    reconstruction_error: f64,
}

/// Parses `a,b,c`, prints `(R, θ, φ)` and `‖from_polar(to_polar(q)) - q‖`.
pub fn cmd_polar(input: &str, format: Format, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let q: GcNumber = input
        .trim()
        .parse()
        .map_err(|e| CliError::Usage(format!("cannot parse {input:?} as a,b,c: {e}")))?;
    let polar = q.to_polar();
    let err = (GcNumber::from_polar(polar) - q).norm();
    match format {
        Format::Json => {
            let o = PolarOutput {
                input: q,
                polar,
                reconstruction_error: err,
            };
            serde_json::to_writer_pretty(&mut *out, &o).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Text => {
            writeln!(out, "R = {}", polar.r())?;
            writeln!(out, "theta = {}", polar.theta())?;
            writeln!(out, "phi = {}", polar.phi())?;
            writeln!(out, "reconstruction error = {err:e}")?;
        }
        Format::Csv => return Err(CliError::Usage("polar supports text or json output".into())),
    }
    Ok(Outcome::Success)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn json(input: &str) -> serde_json::Value {
        let mut buf = Vec::new();
        cmd_polar(input, Format::Json, &mut buf).unwrap();
        serde_json::from_slice(&buf).unwrap()
    }

    #[test]
    fn chart_examples() {
        let v = json("0,0,1");
        assert_eq!(v["polar"]["R"], 1.0);
        assert_eq!(v["polar"]["theta"], FRAC_PI_2);
        assert_eq!(v["polar"]["phi"], FRAC_PI_2);

        let v = json("1,0,0");
        assert_eq!((v["polar"]["theta"].as_f64(), v["polar"]["phi"].as_f64()), (Some(0.0), Some(0.0)));

        let v = json("-1,0,0");
        assert_eq!(v["polar"]["R"], 1.0);
        assert_eq!(v["polar"]["theta"], PI);
        assert_eq!(v["polar"]["phi"], 0.0);
        assert!(v["reconstruction_error"].as_f64().unwrap() < 1e-15);
    }

    #[test]
    fn text_output() {
        let mut buf = Vec::new();
        cmd_polar("1, 0, 0", Format::Text, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("R = 1\ntheta = 0\nphi = 0\n"), "{text}");
    }

    #[test]
    fn bad_input_is_usage_error() {
        for bad in ["1,2", "a,b,c", "1,2,3,4", "nan,0,0", ""] {
            let err = cmd_polar(bad, Format::Text, &mut Vec::new()).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{bad}");
        }
    }
}
