//! Printf-`%g`-style float formatting.
//!
//! Every artifact this workspace emits (CSV, SVG, console reports) uses
//! significant-digit formatting so that golden-file comparisons are stable:
//! 9 significant digits for machine-readable files, 6 for console display.
//! Rust's standard formatter has no `%g` equivalent, so this module ports the
//! C rules: round to `sig` significant digits, use scientific notation when
//! the decimal exponent is `< -4` or `>= sig`, and strip trailing zeros.

/// Formats `x` like C's `printf("%.*g", sig, x)`.
///
/// Differences from C are deliberate and minimal: negative zero prints as
/// `0` (avoids `-0` noise in CSV columns), and non-finite values print as
/// `nan` / `inf` / `-inf`.
pub fn fmt_g(x: f64, sig: usize) -> String {
    assert!(sig >= 1, "need at least one significant digit");
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x < 0.0 { "-inf".to_string() } else { "inf".to_string() };
    }
    if x == 0.0 {
        return "0".to_string(); // covers -0.0 as well
    }

    // `{:.*e}` gives the correctly rounded mantissa and the decimal exponent
    // of the *rounded* value (carry like 9.99e2 -> 1.0e3 is already applied).
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp_str) = sci.split_once('e').expect("exponential format always has 'e'");
    let exp: i32 = exp_str.parse().expect("exponent is a valid integer");

    if exp < -4 || exp >= sig as i32 {
        let mantissa = trim_trailing_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.unsigned_abs())
    } else {
        // Fixed notation with sig-1-exp decimals, re-rounded from x itself
        // (exp already reflects any carry, so the digit count stays correct).
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        trim_trailing_zeros(&fixed)
    }
}

/// Removes trailing zeros after a decimal point, and the point itself if bare.
fn trim_trailing_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let s = s.trim_end_matches('0');
    s.trim_end_matches('.').to_string()
}
