//! Benchmark host crate; the measurements live in `benches/`.
//!
//! `special` times the scalar building blocks (gamma, theta sums, Bernoulli
//! polynomials); `evaluation` times the two continuation routes and the
//! critical-line equation they feed.
