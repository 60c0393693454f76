//! Base-`n` encoding of chain configurations.
//!
//! Site 1 is the most significant digit. The same encoding is used for spin
//! chains, vertex transfer matrices and Hamiltonians so that operators from
//! different modules can be compared element-wise.

/// Decode `index` into `l` site states, site 1 first.
pub fn unpack(index: usize, n: usize, l: usize) -> Vec<usize> {
    let mut out = vec![0usize; l];
    let mut rem = index;
    for j in (0..l).rev() {
        out[j] = rem % n;
        rem /= n;
    }
    out
}

/// Encode site states (site 1 first) into a basis index.
pub fn pack(states: &[usize], n: usize) -> usize {
    states.iter().fold(0usize, |acc, &s| acc * n + s)
}

/// Iterator over all `n^l` configurations in index order.
pub fn configurations(n: usize, l: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(l as u32);
    (0..total).map(move |i| unpack(i, n, l))
}
