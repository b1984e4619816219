//! Augmenting-path bipartite matching (Kuhn's algorithm).

/// Finds a matching that saturates every left vertex, if one exists.
/// `left_adj[i]` lists the right vertices (in `0..right_count`) adjacent to
/// left vertex `i`. Returns `assignment[i]`, the right partner of `i`.
pub(crate) fn saturating_matching(left_adj: &[Vec<usize>], right_count: usize) -> Option<Vec<usize>> {
    if left_adj.len() > right_count {
        return None;
    }
    let mut right_match: Vec<Option<usize>> = vec![None; right_count];
    for left in 0..left_adj.len() {
        let mut visited = vec![false; right_count];
        if !augment(left, left_adj, &mut right_match, &mut visited) {
            return None;
        }
    }
    let mut assignment = vec![usize::MAX; left_adj.len()];
    for (r, m) in right_match.iter().enumerate() {
        if let Some(l) = *m {
            assignment[l] = r;
        }
    }
    Some(assignment)
}

fn augment(
    left: usize,
    left_adj: &[Vec<usize>],
    right_match: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &r in &left_adj[left] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        let free = match right_match[r] {
            None => true,
            Some(other) => augment(other, left_adj, right_match, visited),
        };
        if free {
            right_match[r] = Some(left);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn needs_augmenting_path() {
        // Greedy would match 0-0 and strand 1.
        let adj = vec![vec![0, 1], vec![0]];
        let m = saturating_matching(&adj, 2).unwrap();
        assert_eq!(m, vec![1, 0]);
    }

    #[test]
    fn hall_violation() {
        let adj = vec![vec![0], vec![0], vec![0, 1, 2]];
        assert!(saturating_matching(&adj, 3).is_none());
        assert!(saturating_matching(&[vec![0], vec![0]], 1).is_none());
        assert_eq!(saturating_matching(&[], 0), Some(vec![]));
    }
}
