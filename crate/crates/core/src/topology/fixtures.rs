//! Betti numbers of configuration spaces, the reference values for the
//! order complexes of `K_n(k)`.

use serde::Deserialize;

/// Betti numbers of the ordered configuration space of `k` points in `R^n`
/// (`n ≥ 1`), read off the Poincaré polynomial `∏_{j<k} (1 + j·t^{n−1})`.
pub fn conf_space_betti(n: usize, k: usize) -> Vec<u64> {
    assert!(n >= 1, "dimension must be positive");
    let step = n - 1;
    let mut poly = vec![1u64];
    for j in 1..k as u64 {
        let mut next = vec![0u64; poly.len() + step];
        for (d, &c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + step] += c * j;
        }
        poly = next;
    }
    while poly.len() > 1 && poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}

const RECORDED: &str = include_str!("../../fixtures/conf_betti.json");

#[derive(Deserialize)]
struct Recorded {
    entries: Vec<Entry>,
}

#[derive(Deserialize)]
struct Entry {
    n: usize,
    k: usize,
    betti: Vec<u64>,
}

/// The Betti numbers recorded in the bundled fixture file, when present.
pub fn recorded_conf_betti(n: usize, k: usize) -> Option<Vec<u64>> {
    let recorded: Recorded = serde_json::from_str(RECORDED).expect("bundled fixture parses");
    recorded.entries.into_iter().find(|e| e.n == n && e.k == k).map(|e| e.betti)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(conf_space_betti(2, 3), vec![1, 3, 2]);
        assert_eq!(conf_space_betti(3, 2), vec![1, 0, 1]);
        assert_eq!(conf_space_betti(2, 2), vec![1, 1]);
        assert_eq!(conf_space_betti(1, 4), vec![24]);
        assert_eq!(conf_space_betti(5, 1), vec![1]);
        assert_eq!(conf_space_betti(2, 4), vec![1, 6, 11, 6]);
    }

    #[test]
    fn fixture_file_matches_formula() {
        for n in 1..=4 {
            for k in 1..=4 {
                assert_eq!(recorded_conf_betti(n, k), Some(conf_space_betti(n, k)), "n={n} k={k}");
            }
        }
        assert_eq!(recorded_conf_betti(9, 9), None);
    }
}
