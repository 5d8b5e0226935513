//! Small, deliberately naive reimplementations used as test oracles.
//! Nothing here calls into `stcore`.

#![allow(dead_code)]

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[k as usize]
}

pub fn catalan(n: u64) -> u128 {
    let mut c = vec![1u128];
    for m in 1..=n as usize {
        c.push((0..m).map(|k| c[k] * c[m - 1 - k]).sum());
    }
    c[n as usize]
}

/// Positive integers that are not `a·s + b·t` with `a, b >= 0`.
pub fn gaps(s: u64, t: u64) -> Vec<u64> {
    let bound = s * t;
    (1..bound)
        .filter(|&n| !(0..=n / s).any(|a| (n - a * s).is_multiple_of(t)))
        .collect()
}

/// All downward closed subsets of the gaps, by trying every subset.
/// Each ideal is returned in increasing order.
pub fn ideals(s: u64, t: u64) -> Vec<Vec<u64>> {
    let g = gaps(s, t);
    assert!(g.len() <= 22, "too many gaps for subset search");
    let mut out = Vec::new();
    for mask in 0u32..1 << g.len() {
        let set: Vec<u64> = (0..g.len()).filter(|&k| mask >> k & 1 == 1).map(|k| g[k]).collect();
        let closed = set.iter().all(|&a| {
            [s, t].iter().all(|&d| a <= d || !g.contains(&(a - d)) || set.contains(&(a - d)))
        });
        if closed {
            out.push(set);
        }
    }
    out
}

/// Parts `a_k - (j - k)` for the ideal `a_1 > ... > a_j`.
pub fn anderson(ideal: &[u64]) -> Vec<u64> {
    let mut desc = ideal.to_vec();
    desc.sort_unstable_by(|a, b| b.cmp(a));
    let j = desc.len() as u64;
    desc.iter().enumerate().map(|(k, &a)| a - (j - 1 - k as u64)).collect()
}

/// Hook length of every cell, counted cell by cell.
pub fn hooks(parts: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = parts[r + 1..].iter().filter(|&&l| l > c).count() as u64;
            out.push(arm + leg + 1);
        }
    }
    out
}

pub fn is_core(parts: &[u64], s: u64, t: u64) -> bool {
    hooks(parts).iter().all(|&h| h != s && h != t)
}

pub fn partitions_of(n: u64) -> Vec<Vec<u64>> {
    fn go(rem: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Coprime pairs `1 <= s < t` with `s + t <= max_sum`.
pub fn coprime_pairs(max_sum: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for s in 1..max_sum {
        for t in s + 1..=max_sum - s {
            if gcd(s, t) == 1 {
                out.push((s, t));
            }
        }
    }
    out
}
