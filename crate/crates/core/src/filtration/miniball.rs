//! Minimal enclosing balls of small point sets.
//!
//! Welzl's move-free recursion over the points in their given order, so the
//! result is fully deterministic. Support sets are solved by their circumsphere
//! inside the affine hull; affinely dependent supports are skipped.

use num_traits::Float;

#[derive(Clone, Debug, PartialEq)]
pub struct Ball<T> {
    pub center: Vec<T>,
    pub radius: T,
}

fn dist<T: Float>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + (*x - *y) * (*x - *y))
        .sqrt()
}

fn contains<T: Float>(ball: &Ball<T>, p: &[T]) -> bool {
    let eps = T::from(1e-9).unwrap() * (T::one() + ball.radius);
    dist(&ball.center, p) <= ball.radius + eps
}

/// Smallest ball whose boundary passes through every support point.
fn circumball<T: Float>(support: &[&[T]]) -> Option<Ball<T>> {
    match support.len() {
        0 => None,
        1 => Some(Ball {
            center: support[0].to_vec(),
            radius: T::zero(),
        }),
        2 => {
            let two = T::one() + T::one();
            Some(Ball {
                center: support[0]
                    .iter()
                    .zip(support[1])
                    .map(|(a, b)| (*a + *b) / two)
                    .collect(),
                radius: dist(support[0], support[1]) / two,
            })
        }
        k => {
            // center = p0 + sum_i lambda_i (p_i - p0), with G lambda = b,
            // G_ij = 2 <u_i, u_j>, b_i = |u_i|^2.
            let p0 = support[0];
            let u: Vec<Vec<T>> = support[1..]
                .iter()
                .map(|p| p.iter().zip(p0).map(|(a, b)| *a - *b).collect())
                .collect();
            let m = k - 1;
            let dot = |a: &[T], b: &[T]| a.iter().zip(b).fold(T::zero(), |s, (x, y)| s + *x * *y);
            let two = T::one() + T::one();
            let mut g: Vec<Vec<T>> = (0..m)
                .map(|i| {
                    let mut row: Vec<T> = (0..m).map(|j| two * dot(&u[i], &u[j])).collect();
                    row.push(dot(&u[i], &u[i]));
                    row
                })
                .collect();
            let scale = g
                .iter()
                .flat_map(|r| r.iter())
                .fold(T::zero(), |a, v| a.max(v.abs()));
            let tol = T::from(1e-12).unwrap() * (T::one() + scale);
            for col in 0..m {
                let piv = (col..m).max_by(|&a, &b| {
                    g[a][col]
                        .abs()
                        .partial_cmp(&g[b][col].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })?;
                if g[piv][col].abs() <= tol {
                    return None;
                }
                g.swap(col, piv);
                for r in 0..m {
                    if r != col {
                        let f = g[r][col] / g[col][col];
                        for c in col..=m {
                            let v = g[col][c];
                            g[r][c] = g[r][c] - f * v;
                        }
                    }
                }
            }
            let lambda: Vec<T> = (0..m).map(|i| g[i][m] / g[i][i]).collect();
            let center: Vec<T> = (0..p0.len())
                .map(|d| {
                    p0[d]
                        + lambda
                            .iter()
                            .zip(&u)
                            .fold(T::zero(), |s, (l, ui)| s + *l * ui[d])
                })
                .collect();
            let radius = support
                .iter()
                .map(|p| dist(&center, p))
                .fold(T::zero(), T::max);
            Some(Ball { center, radius })
        }
    }
}

fn welzl<'a, T: Float>(points: &[&'a [T]], support: &mut Vec<&'a [T]>) -> Option<Ball<T>> {
    let dim = points.first().or(support.first()).map_or(0, |p| p.len());
    if points.is_empty() || support.len() == dim + 1 {
        return circumball(support);
    }
    let (p, rest) = points.split_last().unwrap();
    if let Some(ball) = welzl(rest, support) {
        if contains(&ball, p) {
            return Some(ball);
        }
    }
    support.push(p);
    let ball = welzl(rest, support);
    support.pop();
    ball
}

/// Minimal enclosing ball of a non-empty point set.
pub fn minimal_enclosing_ball<T: Float>(points: &[&[T]]) -> Ball<T> {
    let mut unique: Vec<&[T]> = Vec::with_capacity(points.len());
    for p in points {
        if !unique.iter().any(|q| q == p) {
            unique.push(p);
        }
    }
    let mut support = Vec::new();
    welzl(&unique, &mut support).unwrap_or_else(|| {
        // Degenerate supports only; fall back to the farthest pair.
        let mut best = circumball(&unique[..1]).unwrap();
        for i in 0..unique.len() {
            for j in i + 1..unique.len() {
                let b = circumball(&[unique[i], unique[j]]).unwrap();
                if b.radius > best.radius {
                    best = b;
                }
            }
        }
        best
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points_midpoint() {
        let a = [0.0, 0.0];
        let b = [2.0, 0.0];
        let ball = minimal_enclosing_ball(&[&a[..], &b[..]]);
        assert_eq!(ball.radius, 1.0);
        assert_eq!(ball.center, vec![1.0, 0.0]);
    }

    #[test]
    fn obtuse_triangle_uses_longest_edge() {
        let pts = [[0.0, 0.0], [4.0, 0.0], [2.0, 0.5]];
        let refs: Vec<&[f64]> = pts.iter().map(|p| &p[..]).collect();
        assert_eq!(minimal_enclosing_ball(&refs).radius, 2.0);
    }

    #[test]
    fn collinear_and_duplicate_points() {
        let pts = [[0.0], [1.0], [2.0], [1.0]];
        let refs: Vec<&[f64]> = pts.iter().map(|p| &p[..]).collect();
        assert_eq!(minimal_enclosing_ball(&refs).radius, 1.0);
    }

    #[test]
    fn regular_tetrahedron() {
        let pts = [
            [1.0, 1.0, 1.0],
            [1.0, -1.0, -1.0],
            [-1.0, 1.0, -1.0],
            [-1.0, -1.0, 1.0],
        ];
        let refs: Vec<&[f64]> = pts.iter().map(|p| &p[..]).collect();
        let ball = minimal_enclosing_ball(&refs);
        assert!((ball.radius - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn works_in_f32() {
        let pts = [[0.0f32, 0.0], [1.0, 0.0], [0.5, 3f32.sqrt() / 2.0]];
        let refs: Vec<&[f32]> = pts.iter().map(|p| &p[..]).collect();
        let r = minimal_enclosing_ball(&refs).radius;
        assert!((r - 1.0 / 3f32.sqrt()).abs() < 1e-5);
    }
}
