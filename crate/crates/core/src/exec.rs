//! Execution strategy for the data-parallel kernels.
//!
//! With the `parallel` feature the kernels fan out over rayon; without it, or
//! with [`Exec::Sequential`], they run on the calling thread. Both paths
//! produce identical, deterministically ordered output.

use std::ops::Range;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this strategy actually runs in parallel in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `filter_map` over an index range, preserving index order.
    pub fn filter_map_range<T, F>(self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return range.into_par_iter().filter_map(f).collect();
        }
        range.filter_map(f).collect()
    }

    /// `map` over a slice, preserving order.
    pub fn map_slice<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// The hit with the smallest index, if any.
    pub fn find_first_range<T, F>(self, range: Range<u64>, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return range.into_par_iter().find_map_first(f);
        }
        range.into_iter().find_map(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_paths_agree() {
        let f = |i: u64| (i % 7 == 3).then_some(i * i);
        let a = Exec::Sequential.filter_map_range(0..1000, f);
        let b = Exec::Parallel.filter_map_range(0..1000, f);
        assert_eq!(a, b);
        assert_eq!(Exec::Parallel.find_first_range(0..1000, f), Some(9));
        assert_eq!(Exec::Sequential.find_first_range(0..3, f), None);
    }
}
