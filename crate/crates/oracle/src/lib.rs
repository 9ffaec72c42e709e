//! Slow, independent reference implementations used to cross-check the
//! main library in tests. Nothing here shares code with it: graphs are
//! plain adjacency rows (`Vec<u32>`, bit `u` of row `v` set for an edge),
//! and every routine is the most direct brute force available.

use std::collections::{HashSet, VecDeque};

pub type Rows = Vec<u32>;

/// Number of partitions of `n`, by the standard coin-change recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Havel–Hakimi on a list of nonnegative degrees.
pub fn havel_hakimi(degrees: &[u32]) -> bool {
    let mut d: Vec<u32> = degrees.to_vec();
    loop {
        d.retain(|&x| x > 0);
        if d.is_empty() {
            return true;
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        let k = d.remove(0) as usize;
        if k > d.len() {
            return false;
        }
        for x in d.iter_mut().take(k) {
            if *x == 0 {
                return false;
            }
            *x -= 1;
        }
    }
}

/// Prefix-sum majorization on nonincreasing lists of equal sum.
pub fn majorizes_by_prefix(d: &[u32], e: &[u32]) -> bool {
    let sd: u32 = d.iter().sum();
    let se: u32 = e.iter().sum();
    if sd != se {
        return false;
    }
    let (mut pd, mut pe) = (0, 0);
    for k in 0..d.len().max(e.len()) {
        pd += d.get(k).copied().unwrap_or(0);
        pe += e.get(k).copied().unwrap_or(0);
        if pd < pe {
            return false;
        }
    }
    true
}

/// Every partition reachable from `d` by moving single boxes to lower rows,
/// re-sorting after each move and dropping empty rows.
pub fn reachable_by_box_moves(d: &[u32]) -> HashSet<Vec<u32>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(d.to_vec());
    queue.push_back(d.to_vec());
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len() {
            for j in i + 1..=cur.len() {
                let mut next = cur.clone();
                if j == next.len() {
                    next.push(0);
                }
                // Moving down must not make the target row overtake the
                // source row, otherwise the move is really an upward one.
                if next[i] < next[j] + 2 {
                    continue;
                }
                next[i] -= 1;
                next[j] += 1;
                next.sort_unstable_by(|a, b| b.cmp(a));
                next.retain(|&x| x > 0);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

fn has_edge(g: &[u32], u: usize, v: usize) -> bool {
    g[u] >> v & 1 == 1
}

/// All labeled graphs where vertex `i` has degree `degrees[i]`, by deciding
/// every vertex pair in turn.
pub fn labeled_realizations(degrees: &[u32]) -> Vec<Rows> {
    let mut out = Vec::new();
    each_labeled_realization(degrees, &mut |g| {
        out.push(g.to_vec());
        false
    });
    out
}

/// Calls `visit` on each labeled realization until it returns `true`;
/// reports whether it ever did.
pub fn each_labeled_realization(degrees: &[u32], visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    let n = degrees.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut rows = vec![0u32; n];
    let mut left: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
    fn go(
        k: usize,
        pairs: &[(usize, usize)],
        rows: &mut Rows,
        left: &mut [i64],
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if k == pairs.len() {
            return left.iter().all(|&x| x == 0) && visit(rows);
        }
        let (i, j) = pairs[k];
        // Once all pairs involving `i` are decided its budget must be spent.
        let last_for_i = j == rows.len() - 1;
        if left[i] > 0 && left[j] > 0 {
            left[i] -= 1;
            left[j] -= 1;
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
            let hit = (!last_for_i || left[i] == 0) && go(k + 1, pairs, rows, left, visit);
            rows[i] &= !(1 << j);
            rows[j] &= !(1 << i);
            left[i] += 1;
            left[j] += 1;
            if hit {
                return true;
            }
        }
        (!last_for_i || left[i] == 0) && go(k + 1, pairs, rows, left, visit)
    }
    go(0, &pairs, &mut rows, &mut left, visit)
}

/// Isomorphism by trying every bijection that respects degrees.
pub fn isomorphic(a: &[u32], b: &[u32]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let deg = |g: &[u32], v: usize| g[v].count_ones();
    let mut da: Vec<u32> = (0..n).map(|v| deg(a, v)).collect();
    let mut db: Vec<u32> = (0..n).map(|v| deg(b, v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(v: usize, a: &[u32], b: &[u32], map: &mut [usize], used: &mut [bool]) -> bool {
        let n = a.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || a[v].count_ones() != b[w].count_ones() {
                continue;
            }
            if (0..v).all(|u| has_edge(a, u, v) == has_edge(b, map[u], w)) {
                map[v] = w;
                used[w] = true;
                if go(v + 1, a, b, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    go(0, a, b, &mut map, &mut used)
}

/// One representative per isomorphism class, in first-seen order.
pub fn dedupe_isomorphic(graphs: Vec<Rows>) -> Vec<Rows> {
    let mut reps: Vec<Rows> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Unlabeled realizations of a degree list.
pub fn unlabeled_realizations(degrees: &[u32]) -> Vec<Rows> {
    dedupe_isomorphic(labeled_realizations(degrees))
}

/// Induced containment by checking every ordered choice of host vertices.
pub fn contains_induced(host: &[u32], pattern: &[u32]) -> bool {
    let k = pattern.len();
    let n = host.len();
    let mut chosen = Vec::with_capacity(k);
    fn go(host: &[u32], pattern: &[u32], chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == pattern.len() {
            return true;
        }
        for h in 0..host.len() {
            if chosen.contains(&h) {
                continue;
            }
            if (0..depth).all(|p| has_edge(pattern, p, depth) == has_edge(host, chosen[p], h)) {
                chosen.push(h);
                if go(host, pattern, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    k <= n && go(host, pattern, &mut chosen)
}

/// Number of unlabeled graphs on `n` vertices by Burnside's lemma: average,
/// over all vertex permutations, of 2 to the number of cycles the
/// permutation induces on vertex pairs.
pub fn unlabeled_graph_count(n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: u128 = 0;
    let mut count: u128 = 0;
    loop {
        total += 1u128 << pair_cycles(&perm);
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (total / count) as u64
}

fn pair_cycles(perm: &[usize]) -> u32 {
    let n = perm.len();
    let idx = |i: usize, j: usize| if i < j { i * n + j } else { j * n + i };
    let mut seen = vec![false; n * n];
    let mut cycles = 0;
    for i in 0..n {
        for j in i + 1..n {
            if seen[idx(i, j)] {
                continue;
            }
            cycles += 1;
            let (mut a, mut b) = (i, j);
            while !seen[idx(a, b)] {
                seen[idx(a, b)] = true;
                a = perm[a];
                b = perm[b];
            }
        }
    }
    cycles
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Nonincreasing partitions of `n`.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Unlabeled graphs with `m` edges and no isolated vertices, counted by
/// summing realization classes over every graphic partition of `2m`.
pub fn edge_graph_count(m: u32) -> usize {
    partitions(2 * m)
        .into_iter()
        .filter(|d| havel_hakimi(d))
        .map(|d| unlabeled_realizations(&d).len())
        .sum()
}

/// Whether every labeled realization of `degrees` avoids every pattern.
pub fn forcibly_free(degrees: &[u32], patterns: &[Rows]) -> bool {
    !each_labeled_realization(degrees, &mut |g| patterns.iter().any(|p| contains_induced(g, p)))
}

/// Smallest even total at most `max_total` holding graphic `d`, `e` with
/// `d` majorizing `e`, `e` forcibly free of `patterns` and `d` not.
/// Compares every pair by prefix sums; no order structure is reused.
pub fn first_refuting_total(patterns: &[Rows], max_total: u32) -> Option<u32> {
    (2..=max_total).step_by(2).find(|&total| {
        let graphic: Vec<Vec<u32>> = partitions(total).into_iter().filter(|d| havel_hakimi(d)).collect();
        let free: Vec<bool> = graphic.iter().map(|d| forcibly_free(d, patterns)).collect();
        graphic.iter().zip(&free).any(|(e, &fe)| {
            fe && graphic
                .iter()
                .zip(&free)
                .any(|(d, &fd)| !fd && d != e && majorizes_by_prefix(d, e))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let got: Vec<u64> = (0..=10).map(partition_count).collect();
        assert_eq!(got, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn graphicality() {
        assert!(havel_hakimi(&[2, 2, 2]));
        assert!(!havel_hakimi(&[3, 1]));
        assert!(!havel_hakimi(&[2, 2]));
    }

    #[test]
    fn burnside_small() {
        let got: Vec<u64> = (1..=5).map(unlabeled_graph_count).collect();
        assert_eq!(got, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn realizations_and_isomorphism() {
        // C5 only.
        assert_eq!(unlabeled_realizations(&[2, 2, 2, 2, 2]).len(), 1);
        // K3 + K3 and C6.
        assert_eq!(unlabeled_realizations(&[2; 6]).len(), 2);
        let p3a = vec![0b010, 0b101, 0b010];
        let p3b = vec![0b110, 0b001, 0b001];
        assert!(isomorphic(&p3a, &p3b));
        assert!(contains_induced(&p3a, &[0b10, 0b01]));
        assert!(!contains_induced(&[0b110, 0b101, 0b011], &[0, 0]));
    }

    #[test]
    fn refuting_totals() {
        let p3 = vec![0b010, 0b101, 0b010];
        let k3 = vec![0b110, 0b101, 0b011];
        // 211 over 1111.
        assert_eq!(first_refuting_total(&[p3], 8), Some(4));
        assert_eq!(first_refuting_total(&[k3], 8), Some(6));
        assert_eq!(first_refuting_total(&[vec![0b10, 0b01]], 10), None);
    }

    #[test]
    fn box_moves_from_3221() {
        let r = reachable_by_box_moves(&[3, 2, 2, 1]);
        assert!(r.contains(&vec![2, 2, 2, 2]));
        assert!(r.contains(&vec![1; 8]));
        assert!(!r.contains(&vec![3, 3, 1, 1]));
    }
}
