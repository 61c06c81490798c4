use super::{arrow_violation, checked_arrows, is_cut};
use crate::arquiver::ARQuiver;
use crate::Error;

pub const DEFAULT_CUT_CAP: usize = 1_000_000;

/// All nonempty cuts, each sorted, in lexicographic order of membership
/// vectors (vertex 0 absent first).  Backtracks over vertices in index order
/// and checks each arrow as soon as its vertices, `τ` of its target and `τ⁻`
/// of its source are decided.  More than `cap` search nodes is an error.
pub fn enumerate_cuts<F>(arq: &ARQuiver<F>, cap: usize) -> Result<Vec<Vec<usize>>, Error> {
    let n = arq.len();
    let mut due: Vec<Vec<(usize, usize)>> = vec![vec![]; n];
    for (x, y) in checked_arrows(arq) {
        let mut last = x.max(y);
        if let Some(t) = arq.tau[y] {
            last = last.max(t);
        }
        if let Some(t) = arq.tau_inverse(x) {
            last = last.max(t);
        }
        due[last].push((x, y));
    }
    let mut member = vec![false; n];
    let mut out = vec![];
    let mut nodes = 0usize;
    search(arq, &due, 0, &mut member, &mut out, &mut nodes, cap)?;
    Ok(out)
}

fn search<F>(
    arq: &ARQuiver<F>,
    due: &[Vec<(usize, usize)>],
    i: usize,
    member: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    nodes: &mut usize,
    cap: usize,
) -> Result<(), Error> {
    *nodes += 1;
    if *nodes > cap {
        return Err(Error::CapExceeded { cap });
    }
    if i == member.len() {
        if member.iter().any(|&m| m) {
            out.push((0..member.len()).filter(|&v| member[v]).collect());
        }
        return Ok(());
    }
    for choice in [false, true] {
        member[i] = choice;
        let ok = due[i]
            .iter()
            .all(|&(x, y)| arrow_violation(arq, x, y, |v| member[v]).is_none());
        if ok {
            search(arq, due, i + 1, member, out, nodes, cap)?;
        }
    }
    member[i] = false;
    Ok(())
}

/// Filters every nonempty subset through [`is_cut`]; exponential, for
/// cross-checking small quivers.
pub fn enumerate_cuts_brute_force<F>(arq: &ARQuiver<F>) -> Vec<Vec<usize>> {
    let n = arq.len();
    assert!(n < 24, "too many vertices for brute force");
    let mut out = vec![];
    for mask in 1u32..(1 << n) {
        // bit order chosen to match the backtracking order
        let delta: Vec<usize> = (0..n).filter(|&v| mask >> (n - 1 - v) & 1 == 1).collect();
        if is_cut(arq, &delta).is_cut {
            out.push(delta);
        }
    }
    out
}
