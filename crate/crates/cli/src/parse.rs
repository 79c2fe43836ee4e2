//! Command-line syntax for Hessenberg functions, permutations and root subsets.

use hessenberg_schubert::{HessenbergFunction, Permutation, Root, RootSet};

fn numbers(text: &str, what: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<usize>()
                .map_err(|_| format!("{what}: {part:?} is not a positive integer"))
        })
        .collect()
}

/// `3,4,4,4` or `h=3,4,4,4`.
pub fn hessenberg(text: &str) -> Result<HessenbergFunction, String> {
    let body = text.trim();
    let body = body.strip_prefix("h=").unwrap_or(body);
    if body.is_empty() {
        return Err("--h: empty Hessenberg function".into());
    }
    HessenbergFunction::new(&numbers(body, "--h")?).map_err(|e| format!("--h {text}: {e}"))
}

/// One-line notation, `2,3,1,4`.
pub fn permutation(text: &str) -> Result<Permutation, String> {
    if text.trim().is_empty() {
        return Err("--w: empty permutation".into());
    }
    Permutation::from_one_line(&numbers(text, "--w")?).map_err(|e| format!("--w {text}: {e}"))
}

/// Semicolon-separated pairs `i,j` meaning `t_i - t_j`; the empty string is `∅`.
pub fn roots(text: &str) -> Result<RootSet, String> {
    let mut set = RootSet::empty();
    for pair in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        match numbers(pair, "--S")?.as_slice() {
            &[i, j] => {
                set.insert(Root::new(i, j).map_err(|e| format!("--S pair {pair:?}: {e}"))?);
            }
            _ => return Err(format!("--S: {pair:?} is not a pair i,j")),
        }
    }
    Ok(set)
}
