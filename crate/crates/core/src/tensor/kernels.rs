//! Raw numeric routines backing the tape operations.
//!
//! Everything here is pure: slices in, `Vec<f32>` out, fixed iteration
//! order. Reductions accumulate in f64 and round once at the end, which
//! keeps the finite-difference checks inside their tolerance budget.

/// Dense matrix product with optional transposes on either operand.
///
/// Logical shapes are `a: [m, k]`, `b: [k, n]`, output `[m, n]`. When a
/// transpose flag is set the corresponding operand is *stored* transposed
/// (`a` as `[k, m]`, `b` as `[n, k]`) and read through the flag.
pub fn matmul(
    a: &[f32],
    b: &[f32],
    m: usize,
    k: usize,
    n: usize,
    trans_a: bool,
    trans_b: bool,
) -> Vec<f32> {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    let mut out = vec![0.0f32; m * n];
    match (trans_a, trans_b) {
        (false, false) => {
            let mut row = vec![0.0f64; n];
            for i in 0..m {
                row.fill(0.0);
                for p in 0..k {
                    let av = a[i * k + p] as f64;
                    if av == 0.0 {
                        continue;
                    }
                    let brow = &b[p * n..(p + 1) * n];
                    for (r, &bv) in row.iter_mut().zip(brow) {
                        *r += av * bv as f64;
                    }
                }
                for (o, &r) in out[i * n..(i + 1) * n].iter_mut().zip(&row) {
                    *o = r as f32;
                }
            }
        }
        (false, true) => {
            for i in 0..m {
                let arow = &a[i * k..(i + 1) * k];
                for j in 0..n {
                    let brow = &b[j * k..(j + 1) * k];
                    let mut acc = 0.0f64;
                    for (&av, &bv) in arow.iter().zip(brow) {
                        acc += av as f64 * bv as f64;
                    }
                    out[i * n + j] = acc as f32;
                }
            }
        }
        (true, false) => {
            let mut row = vec![0.0f64; n];
            for i in 0..m {
                row.fill(0.0);
                for p in 0..k {
                    let av = a[p * m + i] as f64;
                    if av == 0.0 {
                        continue;
                    }
                    let brow = &b[p * n..(p + 1) * n];
                    for (r, &bv) in row.iter_mut().zip(brow) {
                        *r += av * bv as f64;
                    }
                }
                for (o, &r) in out[i * n..(i + 1) * n].iter_mut().zip(&row) {
                    *o = r as f32;
                }
            }
        }
        (true, true) => {
            for i in 0..m {
                for j in 0..n {
                    let mut acc = 0.0f64;
                    for p in 0..k {
                        acc += a[p * m + i] as f64 * b[j * k + p] as f64;
                    }
                    out[i * n + j] = acc as f32;
                }
            }
        }
    }
    out
}

/// `out[i] = src[map[i]]`, with negative map entries reading zero
/// (used for zero padding in im2col).
pub fn gather(src: &[f32], map: &[i64]) -> Vec<f32> {
    map.iter()
        .map(|&ix| if ix < 0 { 0.0 } else { src[ix as usize] })
        .collect()
}

/// `out[map[i]] += src[i]`; negative map entries are dropped.
/// Collisions accumulate in f64 in input order.
pub fn scatter_add(src: &[f32], map: &[i64], out_len: usize) -> Vec<f32> {
    let mut acc = vec![0.0f64; out_len];
    for (&v, &ix) in src.iter().zip(map) {
        if ix >= 0 {
            acc[ix as usize] += v as f64;
        }
    }
    acc.into_iter().map(|v| v as f32).collect()
}

/// Full-tensor sum with f64 accumulation.
pub fn sum_all(src: &[f32]) -> f64 {
    src.iter().map(|&v| v as f64).sum()
}

/// Squared L2 norm with f64 accumulation.
pub fn sq_norm(src: &[f32]) -> f64 {
    src.iter().map(|&v| v as f64 * v as f64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_transpose_variants_agree() {
        // a = [[1,2,3],[4,5,6]] (2x3), b = [[7,8],[9,10],[11,12]] (3x2)
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let b = [7.0, 8.0, 9.0, 10.0, 11.0, 12.0];
        let expect = vec![58.0, 64.0, 139.0, 154.0];
        assert_eq!(matmul(&a, &b, 2, 3, 2, false, false), expect);

        // a stored transposed: [[1,4],[2,5],[3,6]] read as a^T
        let at = [1.0, 4.0, 2.0, 5.0, 3.0, 6.0];
        assert_eq!(matmul(&at, &b, 2, 3, 2, true, false), expect);

        // b stored transposed: [[7,9,11],[8,10,12]]
        let bt = [7.0, 9.0, 11.0, 8.0, 10.0, 12.0];
        assert_eq!(matmul(&a, &bt, 2, 3, 2, false, true), expect);
        assert_eq!(matmul(&at, &bt, 2, 3, 2, true, true), expect);
    }

    #[test]
    fn gather_scatter_round_trip() {
        let src = [1.0, 2.0, 3.0];
        let map = [2, -1, 0, 2];
        assert_eq!(gather(&src, &map), vec![3.0, 0.0, 1.0, 3.0]);
        // scatter of ones through the same map counts uses per slot
        let ones = [1.0; 4];
        assert_eq!(scatter_add(&ones, &map, 3), vec![1.0, 0.0, 2.0]);
    }
}
