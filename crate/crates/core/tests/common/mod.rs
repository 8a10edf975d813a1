//! Independent oracles shared by the integration tests. Nothing here calls into
//! the library's numerical code.
#![allow(dead_code)]

/// Cyclic Jacobi rotations on a dense symmetric matrix, eigenvalues descending.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eigs
}

/// Normalized spectrum of a 0/1 adjacency matrix via Jacobi.
pub fn oracle_spectrum(adj: &[u8], n: usize, d: usize) -> Vec<f64> {
    let a = adj.iter().map(|&x| x as f64 / d as f64).collect();
    jacobi_eigenvalues(a, n)
}

pub fn oracle_lambda2(adj: &[u8], n: usize, d: usize) -> f64 {
    let e = oracle_spectrum(adj, n, d);
    e[1].abs().max(e[n - 1].abs())
}

/// Every labelled d-regular graph on n vertices, as row-major 0/1 matrices.
pub fn all_regular_graphs(n: usize, d: usize) -> Vec<Vec<u8>> {
    fn extend(v: usize, n: usize, d: usize, adj: &mut Vec<u8>, deg: &mut Vec<usize>, out: &mut Vec<Vec<u8>>) {
        if v == n {
            out.push(adj.clone());
            return;
        }
        let need = d - deg[v];
        let free: Vec<usize> = (v + 1..n).filter(|&u| deg[u] < d).collect();
        if free.len() < need {
            return;
        }
        choose(v, &free, 0, need, n, d, adj, deg, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        v: usize,
        free: &[usize],
        start: usize,
        need: usize,
        n: usize,
        d: usize,
        adj: &mut Vec<u8>,
        deg: &mut Vec<usize>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if need == 0 {
            extend(v + 1, n, d, adj, deg, out);
            return;
        }
        for idx in start..free.len() {
            if free.len() - idx < need {
                break;
            }
            let u = free[idx];
            adj[v * n + u] = 1;
            adj[u * n + v] = 1;
            deg[v] += 1;
            deg[u] += 1;
            choose(v, free, idx + 1, need - 1, n, d, adj, deg, out);
            adj[v * n + u] = 0;
            adj[u * n + v] = 0;
            deg[v] -= 1;
            deg[u] -= 1;
        }
    }

    let mut out = Vec::new();
    extend(0, n, d, &mut vec![0; n * n], &mut vec![0; n], &mut out);
    out
}

/// Floyd-Warshall diameter; `None` when disconnected.
pub fn floyd_warshall_diameter(adj: &[u8], n: usize) -> Option<usize> {
    const INF: usize = usize::MAX / 4;
    let mut dist: Vec<usize> = (0..n * n)
        .map(|k| match (k / n == k % n, adj[k]) {
            (true, _) => 0,
            (false, 1) => 1,
            _ => INF,
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i * n + k] + dist[k * n + j];
                if via < dist[i * n + j] {
                    dist[i * n + j] = via;
                }
            }
        }
    }
    let max = *dist.iter().max().unwrap();
    (max < INF).then_some(max)
}

pub fn brute_triangles(adj: &[u8], n: usize) -> u64 {
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if adj[i * n + j] == 1 && adj[j * n + k] == 1 && adj[i * n + k] == 1 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Cycles of length k counted as vertex sequences starting at their smallest
/// vertex, each undirected cycle seen twice.
pub fn brute_cycles(adj: &[u8], n: usize, k: usize) -> u64 {
    fn walk(adj: &[u8], n: usize, k: usize, path: &mut Vec<usize>, count: &mut u64) {
        let last = *path.last().unwrap();
        if path.len() == k {
            if adj[last * n + path[0]] == 1 {
                *count += 1;
            }
            return;
        }
        for u in path[0] + 1..n {
            if adj[last * n + u] == 1 && !path.contains(&u) {
                path.push(u);
                walk(adj, n, k, path, count);
                path.pop();
            }
        }
    }
    let mut count = 0;
    for s in 0..n {
        walk(adj, n, k, &mut vec![s], &mut count);
    }
    count / 2
}

pub fn ln_factorial(m: usize) -> f64 {
    (2..=m).map(|i| (i as f64).ln()).sum()
}

/// `ln[(nd)! / ((nd/2)! 2^(nd/2))] + (1 - d^2)/4` with exact factorials.
pub fn exact_log_graph_count(n: usize, d: usize) -> f64 {
    let nd = n * d;
    ln_factorial(nd) - ln_factorial(nd / 2) - (nd / 2) as f64 * std::f64::consts::LN_2
        + (1.0 - (d * d) as f64) / 4.0
}
