//! Symmetric tridiagonal matrices and a bisection eigenvalue solver on the
//! Sturm count, shared by the finite-difference oracle and the quantization
//! root-finder.

/// Symmetric tridiagonal matrix: `diagonal` of length d, `off_diagonal` of
/// length d - 1. Symmetry is carried by the representation itself.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTridiagonal {
    pub diagonal: Vec<f64>,
    pub off_diagonal: Vec<f64>,
}

impl SymmetricTridiagonal {
    pub fn dimension(&self) -> usize {
        self.diagonal.len()
    }
}

/// Number of eigenvalues of `m` strictly below `x`, by the Sturm sequence of
/// LDL^T pivots.
fn eigenvalue_count_below(m: &SymmetricTridiagonal, x: f64) -> usize {
    let pivot_floor = f64::MIN_POSITIVE / f64::EPSILON;
    let mut count = 0;
    let mut pivot = 1.0_f64;
    for (i, &d) in m.diagonal.iter().enumerate() {
        let coupling = if i == 0 {
            0.0
        } else {
            let e = m.off_diagonal[i - 1];
            e * e / pivot
        };
        pivot = d - x - coupling;
        if pivot.abs() < pivot_floor {
            pivot = -pivot_floor;
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// The k smallest eigenvalues in ascending order, each resolved by bisection
/// to the last representable interval. Deterministic for fixed input.
pub fn lowest_eigenvalues(matrix: &SymmetricTridiagonal, k: usize) -> Vec<f64> {
    let dim = matrix.dimension();
    assert!(k >= 1 && k <= dim, "k = {k} must be in 1..={dim}");
    // Gershgorin bounds
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..dim {
        let mut radius = 0.0;
        if i > 0 {
            radius += matrix.off_diagonal[i - 1].abs();
        }
        if i + 1 < dim {
            radius += matrix.off_diagonal[i].abs();
        }
        lo = lo.min(matrix.diagonal[i] - radius);
        hi = hi.max(matrix.diagonal[i] + radius);
    }

    let mut eigenvalues = Vec::with_capacity(k);
    let mut lower = lo;
    for j in 1..=k {
        // eigenvalues come out ascending, so the previous left edge bounds below
        let mut a = lower;
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if eigenvalue_count_below(matrix, mid) >= j {
                b = mid;
            } else {
                a = mid;
            }
        }
        eigenvalues.push(0.5 * (a + b));
        lower = a;
    }
    eigenvalues
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn diagonal_matrix() {
        let m = SymmetricTridiagonal { diagonal: vec![1.0, 3.0], off_diagonal: vec![0.0] };
        let eig = lowest_eigenvalues(&m, 2);
        assert_relative_eq!(eig[0], 1.0, max_relative = 1e-12);
        assert_relative_eq!(eig[1], 3.0, max_relative = 1e-12);
    }

    #[test]
    fn two_by_two_with_coupling() {
        // [[0, e], [e, 0]] has eigenvalues -+e
        let m = SymmetricTridiagonal { diagonal: vec![0.0, 0.0], off_diagonal: vec![2.5] };
        let eig = lowest_eigenvalues(&m, 2);
        assert_relative_eq!(eig[0], -2.5, max_relative = 1e-12);
        assert_relative_eq!(eig[1], 2.5, max_relative = 1e-12);
    }

    #[test]
    fn discrete_laplacian_spectrum() {
        // second-difference matrix: eigenvalues 2 - 2 cos(j pi / (d+1))
        let dim = 40;
        let m = SymmetricTridiagonal {
            diagonal: vec![2.0; dim],
            off_diagonal: vec![-1.0; dim - 1],
        };
        let eig = lowest_eigenvalues(&m, dim);
        for (j, &lambda) in eig.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((j + 1) as f64 * std::f64::consts::PI / (dim + 1) as f64).cos();
            assert_relative_eq!(lambda, exact, max_relative = 1e-10);
        }
    }
}
