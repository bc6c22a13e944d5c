/// Hard ceiling imposed by the bitmask representation of subsets.
pub const MAX_REPRESENTABLE: usize = 64;

/// Size limits and execution strategy carried by every space.
///
/// Exponential operations refuse inputs above `max_base` instead of
/// truncating; frame enumeration refuses frames above `max_frame`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_base: usize,
    pub max_frame: usize,
    /// Run inner loops on the rayon pool. Ignored without the `parallel`
    /// feature.
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_base: 16,
            max_frame: 4096,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            parallel: false,
            ..Config::default()
        }
    }

    pub fn with_max_base(mut self, max_base: usize) -> Self {
        self.max_base = max_base.min(MAX_REPRESENTABLE);
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub(crate) fn check_base(&self, size: usize) -> crate::Result<()> {
        if size > self.max_base {
            return Err(crate::Error::SizeCap {
                size,
                cap: self.max_base,
            });
        }
        Ok(())
    }
}
