use crate::matrix::Matrix;

/// Rows and columns whose deletion leaves `Q` without negative entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Eliminator {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Eliminator {
    pub fn size(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Whether every negative entry of `q` lies in a deleted row or column.
    pub fn covers(&self, q: &Matrix) -> bool {
        let mut row_hit = vec![false; q.rows()];
        let mut col_hit = vec![false; q.cols()];
        self.rows.iter().for_each(|&i| row_hit[i] = true);
        self.cols.iter().for_each(|&j| col_hit[j] = true);
        q.entries()
            .all(|(i, j, v)| !v.is_negative() || row_hit[i] || col_hit[j])
    }
}

fn negativity_graph(q: &Matrix) -> Vec<Vec<usize>> {
    (0..q.rows())
        .map(|i| (0..q.cols()).filter(|&j| q[(i, j)].is_negative()).collect())
        .collect()
}

struct Matching {
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

fn try_augment(
    u: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    m: &mut Matching,
) -> bool {
    for &v in &adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        if m.right[v].is_none_or(|w| try_augment(w, adj, visited, m)) {
            m.left[u] = Some(v);
            m.right[v] = Some(u);
            return true;
        }
    }
    false
}

fn max_matching(adj: &[Vec<usize>], right: usize) -> Matching {
    let mut m = Matching {
        left: vec![None; adj.len()],
        right: vec![None; right],
    };
    let mut visited = vec![false; right];
    for u in 0..adj.len() {
        visited.iter_mut().for_each(|v| *v = false);
        try_augment(u, adj, &mut visited, &mut m);
    }
    m
}

/// Maximum matching in the graph with an edge `(i, j)` for each `q_ij < 0`.
pub fn negativity_matching(q: &Matrix) -> Vec<(usize, usize)> {
    let adj = negativity_graph(q);
    let m = max_matching(&adj, q.cols());
    m.left
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|j| (i, j)))
        .collect()
}

/// Minimum negative eliminator: a minimum vertex cover of the negativity
/// graph, extracted from a maximum matching by alternating reachability
/// from unmatched rows (`cover = (rows \ Z) ∪ (cols ∩ Z)`).
pub fn min_negative_eliminator(q: &Matrix) -> Eliminator {
    let adj = negativity_graph(q);
    let matching = max_matching(&adj, q.cols());

    let mut left_seen = vec![false; q.rows()];
    let mut right_seen = vec![false; q.cols()];
    let mut stack: Vec<usize> = (0..q.rows()).filter(|&i| matching.left[i].is_none()).collect();
    stack.iter().for_each(|&i| left_seen[i] = true);
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if right_seen[v] || matching.left[u] == Some(v) {
                continue;
            }
            right_seen[v] = true;
            if let Some(w) = matching.right[v] {
                if !left_seen[w] {
                    left_seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }

    Eliminator {
        rows: (0..q.rows()).filter(|&i| !left_seen[i]).collect(),
        cols: (0..q.cols()).filter(|&j| right_seen[j]).collect(),
    }
}
