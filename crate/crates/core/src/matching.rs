//! Bipartite perfect matching by augmenting paths (Kuhn's algorithm).

/// Finds a perfect matching between `n` left and `n` right vertices where
/// `adj[l]` lists the admissible right vertices of `l`, tried in order.
///
/// Returns `match_of_left` or `None` if no perfect matching exists.
pub fn perfect_matching(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut right_owner: Vec<Option<usize>> = vec![None; n];
    let mut stamp = vec![usize::MAX; n];

    fn augment(
        l: usize,
        round: usize,
        adj: &[Vec<usize>],
        right_owner: &mut [Option<usize>],
        stamp: &mut [usize],
    ) -> bool {
        for &r in &adj[l] {
            if stamp[r] == round {
                continue;
            }
            stamp[r] = round;
            let free = match right_owner[r] {
                None => true,
                Some(other) => augment(other, round, adj, right_owner, stamp),
            };
            if free {
                right_owner[r] = Some(l);
                return true;
            }
        }
        false
    }

    for l in 0..n {
        if !augment(l, l, adj, &mut right_owner, &mut stamp) {
            return None;
        }
    }
    let mut out = vec![0usize; n];
    for (r, owner) in right_owner.iter().enumerate() {
        out[owner.expect("perfect")] = r;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_matching_in_regular_graph() {
        // 2-regular bipartite graph: l -> {l, l+1 mod 4}
        let adj: Vec<Vec<usize>> = (0..4).map(|l| vec![(l + 1) % 4, l]).collect();
        let m = perfect_matching(&adj).unwrap();
        let mut seen = m.clone();
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1, 2, 3]);
        for (l, &r) in m.iter().enumerate() {
            assert!(adj[l].contains(&r));
        }
    }

    #[test]
    fn reports_hall_violation() {
        let adj = vec![vec![0], vec![0], vec![1, 2]];
        assert!(perfect_matching(&adj).is_none());
    }
}
