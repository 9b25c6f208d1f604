/// Default cap on the ambient dimension.
pub const DEFAULT_DIMENSION_CAP: usize = 8;
/// Default bound on `m·c` when clearing denominators of a mixed coefficient.
pub const DEFAULT_EXPONENT_BOUND: u64 = 64;
/// Environment variable that overrides the dimension cap.
pub const DIMENSION_CAP_ENV: &str = "MI_DIM_CAP";

/// Size limits applied by the polyhedral engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub dimension_cap: usize,
    pub exponent_bound: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { dimension_cap: DEFAULT_DIMENSION_CAP, exponent_bound: DEFAULT_EXPONENT_BOUND }
    }
}

impl Limits {
    /// Defaults, with the dimension cap taken from `MI_DIM_CAP` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) =
            std::env::var(DIMENSION_CAP_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&cap| cap > 0)
        {
            limits.dimension_cap = cap;
        }
        limits
    }
}
