/// Formats `num / den` with `places` decimals, rounding half to even on the
/// exact rational value. `den` must be positive.
pub fn format_ratio(num: i64, den: i64, places: u32) -> String {
    assert!(den > 0, "denominator must be positive");
    let scale = 10i128.pow(places);
    let scaled = (num as i128).abs() * scale;
    let (den, mut q) = (den as i128, (num as i128).abs() * scale / den as i128);
    let r = scaled - q * den;
    if 2 * r > den || (2 * r == den && q % 2 == 1) {
        q += 1;
    }
    let sign = if num < 0 && q != 0 { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{q}");
    }
    format!(
        "{sign}{}.{:0width$}",
        q / scale,
        q % scale,
        width = places as usize
    )
}
