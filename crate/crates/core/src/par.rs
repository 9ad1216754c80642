//! Deterministic first-hit scans, parallel when the `parallel` feature is on.

/// Evaluates `f(0), f(1), ..` and returns the results up to and including
/// the first one carrying a hit. The returned prefix is the same for every
/// thread count; with parallelism enabled, work proceeds in blocks so a hit
/// stops the scan at the end of its block.
pub(crate) fn scan_until_hit<S, T, F>(n: usize, f: F) -> Vec<(S, Option<T>)>
where
    S: Send,
    T: Send,
    F: Fn(usize) -> (S, Option<T>) + Sync + Send,
{
    let mut out = Vec::new();

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let block = (rayon::current_num_threads() * 16).max(1);
        let mut start = 0;
        while start < n {
            let end = (start + block).min(n);
            let results: Vec<(S, Option<T>)> = (start..end).into_par_iter().map(&f).collect();
            for item in results {
                let hit = item.1.is_some();
                out.push(item);
                if hit {
                    return out;
                }
            }
            start = end;
        }
    }

    #[cfg(not(feature = "parallel"))]
    for i in 0..n {
        let item = f(i);
        let hit = item.1.is_some();
        out.push(item);
        if hit {
            break;
        }
    }

    out
}
