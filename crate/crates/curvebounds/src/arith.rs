//! Internal exact-division helper.

/// Divides `n` by `d`, panicking unless the division is exact.
///
/// Every caller divides a quantity the theory proves to be a multiple of `d`,
/// so a remainder means the surrounding formula was transcribed wrong. That is
/// a bug, not a user error, and it must not be rounded away.
pub(crate) fn exact_div(n: i64, d: i64, context: &str) -> i64 {
    assert!(d != 0, "{context}: division by zero");
    assert!(
        n % d == 0,
        "{context}: {n} is not divisible by {d}, exactness invariant broken"
    );
    n / d
}

#[cfg(test)]
mod tests {
    use super::exact_div;

    #[test]
    fn divides_exactly() {
        assert_eq!(exact_div(40, 8, "test"), 5);
        assert_eq!(exact_div(-6, 2, "test"), -3);
        assert_eq!(exact_div(0, 7, "test"), 0);
    }

    #[test]
    #[should_panic(expected = "not divisible")]
    fn panics_on_remainder() {
        exact_div(7, 2, "test");
    }
}
