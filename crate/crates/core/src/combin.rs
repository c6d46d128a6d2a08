//! Sorted index subsets and their lexicographic ranks.

/// Binomial coefficient; small arguments only.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All strictly increasing `k`-tuples drawn from `0..n`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographic rank of a strictly increasing subset of `0..n` among all subsets of its size.
pub fn rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut r = 0;
    let mut prev = 0;
    for (i, &s) in subset.iter().enumerate() {
        for v in prev..s {
            r += binomial(n - v - 1, k - i - 1);
        }
        prev = s + 1;
    }
    r
}

pub fn is_strictly_increasing(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[0] < w[1])
}

/// `s` with `x` inserted in order; `None` if `x` is already present.
pub fn insert_sorted(s: &[usize], x: usize) -> Option<Vec<usize>> {
    match s.binary_search(&x) {
        Ok(_) => None,
        Err(pos) => {
            let mut v = Vec::with_capacity(s.len() + 1);
            v.extend_from_slice(&s[..pos]);
            v.push(x);
            v.extend_from_slice(&s[pos..]);
            Some(v)
        }
    }
}

/// Complement of a sorted subset in `0..n`.
pub fn complement(n: usize, s: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| s.binary_search(i).is_err()).collect()
}
