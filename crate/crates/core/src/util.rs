//! Small integer helpers shared across modules.

/// `⌈a / b⌉` for `b > 0`, correct for negative `a`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

/// `⌊a / b⌋` for `b > 0`, correct for negative `a`.
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_with_negatives() {
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(ceil_div(0, 3), 0);
        assert_eq!(ceil_div(6, 3), 2);
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(floor_div(7, 2), 3);
    }
}
