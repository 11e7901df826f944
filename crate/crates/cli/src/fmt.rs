//! Fixed six-significant-digit number formatting shared by every emitter.

/// Round to six significant digits, ties to even. `None` for non-finite
/// input, which emitters write as `null` (JSON) or an empty field (CSV).
pub fn round6(x: f64) -> Option<f64> {
    if !x.is_finite() {
        return None;
    }
    // `{:e}` formatting rounds half to even on the exact binary value
    Some(format!("{x:.5e}").parse().expect("formatted float parses"))
}

/// Textual form of [`round6`]: plain decimal without trailing zeros, or
/// scientific notation for very large or very small magnitudes.
pub fn sig6(x: f64) -> String {
    let Some(r) = round6(x) else {
        return String::new();
    };
    if r == 0.0 {
        return "0".into();
    }
    let exp = r.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        let s = format!("{r:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{r:.5e}");
        let (mantissa, e) = s.split_once('e').expect("scientific form");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{e}")
    }
}

/// Serde adapter for `f64` fields.
pub fn serialize<S: serde::Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    match round6(*x) {
        Some(r) => s.serialize_f64(r),
        None => s.serialize_none(),
    }
}
