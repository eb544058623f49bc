//! Error functions on the real line.

/// The error function. Never NaN for finite input.
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// The complementary error function, accurate in the far right tail.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}
