//! Independent reference computations used by the integration tests. Nothing
//! here calls into the library's invariant code; inputs and outputs are
//! plain vectors.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Every partition of `n`, parts weakly decreasing.
pub fn all_partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<u32>::new(), n, n)];
    while let Some((prefix, rest, cap)) = stack.pop() {
        if rest == 0 {
            out.push(prefix);
            continue;
        }
        for part in 1..=cap.min(rest) {
            let mut next = prefix.clone();
            next.push(part);
            stack.push((next, rest - part, part));
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn counts(p: &[u32]) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for &x in p {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

/// Family letter 'B', 'C' or 'D'.
pub fn family_valid(p: &[u32], family: char) -> bool {
    counts(p).iter().all(|(&v, &c)| match family {
        'C' => v % 2 == 0 || c % 2 == 0,
        _ => v % 2 == 1 || c % 2 == 0,
    })
}

pub fn family_rigid(p: &[u32], family: char) -> bool {
    let mut padded = p.to_vec();
    padded.push(0);
    let no_gaps = padded.windows(2).all(|w| w[0] - w[1] <= 1);
    let twice_ok = counts(p).iter().all(|(&v, &c)| {
        let forbidden = if family == 'C' {
            v % 2 == 0
        } else {
            v % 2 == 1
        };
        !(forbidden && c == 2)
    });
    family_valid(p, family) && no_gaps && twice_ok
}

pub fn transpose(p: &[u32]) -> Vec<u32> {
    let top = p.first().copied().unwrap_or(0);
    (1..=top)
        .map(|i| p.iter().filter(|&&x| x >= i).count() as u32)
        .collect()
}

/// Rigid pairs as (λ′, λ″, kind of λ′, kind of λ″) with kinds 'B', 'C', 'D'
/// naming the multiplicity rule.
pub fn rigid_pairs(family: char, rank: u32) -> Vec<(Vec<u32>, Vec<u32>, char, char)> {
    let total = if family == 'B' {
        2 * rank + 1
    } else {
        2 * rank
    };
    let kinds: &[(char, char)] = match family {
        'B' => &[('B', 'D')],
        'C' => &[('C', 'C')],
        _ => &[('D', 'D'), ('B', 'B')],
    };
    let size_ok = |kind: char, s: u32| {
        if kind == 'B' {
            s % 2 == 1
        } else {
            s.is_multiple_of(2)
        }
    };
    let mut out = Vec::new();
    for &(k1, k2) in kinds {
        for s1 in 0..=total {
            let s2 = total - s1;
            if !size_ok(k1, s1) || !size_ok(k2, s2) {
                continue;
            }
            for a in all_partitions(s1)
                .into_iter()
                .filter(|a| family_rigid(a, k1))
            {
                for b in all_partitions(s2)
                    .into_iter()
                    .filter(|b| family_rigid(b, k2))
                {
                    out.push((a.clone(), b, k1, k2));
                }
            }
        }
    }
    out
}

/// Symbol of a partition, straight from the definition; `(top, bottom)`.
pub fn symbol(p: &[u32], family: char) -> (Vec<u32>, Vec<u32>) {
    if p.is_empty() {
        return (vec![], vec![]);
    }
    let mut parts: Vec<i64> = p.iter().map(|&x| x as i64).collect();
    if family == 'D' || (family == 'C' && parts.len() % 2 == 1) {
        parts.push(0);
    }
    let l = parts.len() as i64;
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for (k, x) in parts.iter().enumerate() {
        let a = x + l - 1 - k as i64;
        if a % 2 == 1 {
            odd.push(a);
        } else {
            even.push(a);
        }
    }
    odd.sort();
    even.sort();
    let mut top: Vec<i64> = odd
        .iter()
        .enumerate()
        .map(|(i, a)| (a - 1) / 2 - i as i64)
        .collect();
    let mut bottom: Vec<i64> = even
        .iter()
        .enumerate()
        .map(|(i, a)| a / 2 - i as i64)
        .collect();
    match family {
        'C' if p.len().is_multiple_of(2) => top.insert(0, 0),
        'C' => {
            assert_eq!(bottom.remove(0), 0);
        }
        'D' => {
            assert_eq!(bottom.remove(0), 0);
            assert_eq!(bottom.remove(0), 0);
        }
        _ => {}
    }
    let cast = |v: Vec<i64>| v.into_iter().map(|x| x as u32).collect();
    (cast(top), cast(bottom))
}

/// Sum of two symbols, right aligned, with all-zero leading columns removed.
pub fn symbol_sum(a: &(Vec<u32>, Vec<u32>), b: &(Vec<u32>, Vec<u32>)) -> (Vec<u32>, Vec<u32>) {
    fn row(x: &[u32], y: &[u32]) -> Vec<u32> {
        let n = x.len().max(y.len());
        let mut out = vec![0; n];
        for (k, v) in x.iter().rev().enumerate() {
            out[n - 1 - k] += v;
        }
        for (k, v) in y.iter().rev().enumerate() {
            out[n - 1 - k] += v;
        }
        out
    }
    let (mut top, mut bottom) = (row(&a.0, &b.0), row(&a.1, &b.1));
    while !top.is_empty() && !bottom.is_empty() && top[0] == 0 && bottom[0] == 0 {
        top.remove(0);
        bottom.remove(0);
    }
    (top, bottom)
}

pub fn pair_symbol(a: &[u32], b: &[u32], ka: char, kb: char) -> (Vec<u32>, Vec<u32>) {
    symbol_sum(&symbol(a, ka), &symbol(b, kb))
}

/// `λ_i = λ′_i + λ″_i`.
pub fn partwise_sum(a: &[u32], b: &[u32]) -> Vec<u32> {
    (0..a.len().max(b.len()))
        .map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0))
        .collect()
}

/// Positional Sp image; `p(i)` is the parity of `λ_1 + ... + λ_i`.
pub fn sp(lambda: &[u32]) -> Vec<u32> {
    let get = |i: i64| {
        if i >= 1 && (i as usize) <= lambda.len() {
            lambda[i as usize - 1] as i64
        } else {
            0
        }
    };
    let mut running = 0i64;
    let mut out = Vec::new();
    for i in 1..=lambda.len() as i64 {
        let x = get(i);
        running += x;
        let sign = if running % 2 == 0 { 1 } else { -1 };
        let moved = x % 2 == 1 && x != get(i - sign);
        out.push(if moved { x + sign } else { x } as u32);
    }
    out
}

/// `(α, β)` as sorted-descending vectors, or `None` on an unpaired part.
pub fn fingerprint(
    a: &[u32],
    b: &[u32],
    family: char,
    use_ii: bool,
) -> Option<(Vec<u32>, Vec<u32>)> {
    let lambda = partwise_sum(a, b);
    let mu = sp(&lambda);
    let mut negative = BTreeMap::<u32, bool>::new();
    let (mut sl, mut sm) = (0u32, 0u32);
    for i in 0..mu.len() {
        sl += lambda[i];
        sm += mu[i];
        let m = mu[i];
        if m == 0 || m % 2 == 1 {
            continue;
        }
        let a_i = a.get(i).copied().unwrap_or(0);
        let iii = if family == 'C' {
            a_i % 2 == 0
        } else {
            a_i % 2 == 1
        };
        let hit = m != lambda[i] || (use_ii && sl != sm) || iii;
        *negative.entry(m).or_insert(false) |= hit;
    }
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut rest = BTreeMap::<u32, u32>::new();
    for &m in mu.iter().filter(|&&m| m > 0) {
        if negative.get(&m) == Some(&true) {
            beta.push(m / 2);
        } else {
            *rest.entry(m).or_insert(0) += 1;
        }
    }
    for (v, c) in rest {
        if c % 2 == 1 {
            return None;
        }
        alpha.extend(std::iter::repeat_n(v, c as usize / 2));
    }
    alpha.sort_by(|x, y| y.cmp(x));
    beta.sort_by(|x, y| y.cmp(x));
    Some((alpha, beta))
}

pub fn families() -> [char; 3] {
    ['B', 'C', 'D']
}
