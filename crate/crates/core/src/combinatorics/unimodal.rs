use crate::combinatorics::Permutation;

/// Every unimodal permutation of `1..=n` (increasing then decreasing) with
/// the one-based position of its maximum.
///
/// Built directly: each subset of `{1, .., n-1}` goes to the left of `n` in
/// increasing order and the rest to the right in decreasing order.
pub fn enumerate_unimodal(n: usize) -> Vec<(Permutation, usize)> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u64..(1u64 << (n - 1)) {
        let left: Vec<usize> = (1..n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        let right: Vec<usize> = (1..n).rev().filter(|v| mask & (1 << (v - 1)) == 0).collect();
        let max_pos = left.len() + 1;
        let mut images = left;
        images.push(n);
        images.extend(right);
        out.push((Permutation::from_images_unchecked(images), max_pos));
    }
    out.sort();
    out
}

/// Position of the maximum if `w` is unimodal.
pub fn unimodal_max_position(w: &Permutation) -> Option<usize> {
    let imgs = w.images();
    let peak = imgs.iter().position(|&v| v == imgs.len())?;
    let rising = imgs[..=peak].windows(2).all(|p| p[0] < p[1]);
    let falling = imgs[peak..].windows(2).all(|p| p[0] > p[1]);
    (rising && falling).then_some(peak + 1)
}
