//! Data-parallel execution of independent work items (gin trials, corpus
//! entries, batch Hilbert tables). With the default `parallel` feature the
//! map fans out over rayon; without it, it degrades to the sequential
//! loop. The sequential variant is always compiled so benchmarks can
//! compare the two directly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn seq_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    seq_map(items, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let items: Vec<u64> = (0..100).collect();
        let f = |x: &u64| x * x + 1;
        assert_eq!(par_map(&items, f), seq_map(&items, f));
    }

    #[test]
    fn order_is_preserved() {
        let items: Vec<usize> = (0..50).rev().collect();
        let mapped = par_map(&items, |&x| x);
        assert_eq!(mapped, items);
    }
}
