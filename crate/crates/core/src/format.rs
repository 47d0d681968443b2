//! Human-readable number rendering.

/// Renders `x` with at most 10 significant digits. Values within `1e-10`
/// of an integer are printed as that integer, without a decimal point.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded = x.round();
    if (x - rounded).abs() < 1e-10 && rounded.abs() < 1e15 {
        // avoid "-0"
        return format!("{}", rounded as i64);
    }
    let short: f64 = format!("{x:.9e}").parse().unwrap_or(x);
    format!("{short}")
}
