//! Exact linear solving over the fraction field by fraction-free Gauss-Jordan elimination.

use super::poly::Poly;
use super::ratfun::RatFun;
use super::AlgebraError;

/// Multiply a row of rational functions by a common multiple of its denominators.
fn clear_row(row: &[RatFun]) -> Vec<Poly> {
    let mut common = Poly::one();
    for x in row {
        if x.is_zero() || x.denominator().is_one() {
            continue;
        }
        if common.div_exact(x.denominator()).is_none() {
            common = &common * x.denominator();
        }
    }
    row.iter()
        .map(|x| {
            let lift = common
                .div_exact(x.denominator())
                .expect("common multiple is divisible by each denominator");
            x.numerator() * &lift
        })
        .collect()
}

/// Solve `m * u = rhs` for an `n x n` system.
pub fn linsolve(m: &[Vec<RatFun>], rhs: &[RatFun]) -> Result<Vec<RatFun>, AlgebraError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::NotSquare);
    }
    solve_system(m, rhs)
}

/// Solve a possibly overdetermined `rows x n` system, requiring a unique solution.
///
/// All rows take part in the elimination, so rows beyond the rank are reduced to
/// `0 = residual`; a nonzero residual is reported as an inconsistency.
pub fn solve_system(m: &[Vec<RatFun>], rhs: &[RatFun]) -> Result<Vec<RatFun>, AlgebraError> {
    let rows = m.len();
    if rhs.len() != rows {
        return Err(AlgebraError::DimensionMismatch);
    }
    let n = m.first().map_or(0, Vec::len);
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::DimensionMismatch);
    }
    let mut aug: Vec<Vec<Poly>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut full = row.clone();
            full.push(r.clone());
            clear_row(&full)
        })
        .collect();

    let mut prev = Poly::one();
    let mut pivots: Vec<usize> = Vec::with_capacity(n);
    let mut rank = 0;
    // Complete pivoting on the smallest entry keeps the intermediate minors small.
    while rank < rows.min(n) {
        let Some((p, col)) = (rank..rows)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !pivots.contains(&j) && !aug[i][j].is_zero())
            .min_by_key(|&(i, j)| (aug[i][j].total_degree(), aug[i][j].len()))
        else {
            break;
        };
        aug.swap(rank, p);
        let pivot = aug[rank][col].clone();
        for i in 0..rows {
            if i == rank {
                continue;
            }
            let factor = aug[i][col].clone();
            for j in 0..=n {
                let updated = &(&pivot * &aug[i][j]) - &(&factor * &aug[rank][j]);
                aug[i][j] = updated
                    .div_exact(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
        }
        prev = pivot;
        pivots.push(col);
        rank += 1;
    }

    if aug[rank..].iter().any(|row| !row[n].is_zero()) {
        return Err(AlgebraError::InconsistentSystem);
    }
    if rank < n {
        return Err(AlgebraError::SingularSystem { rank, unknowns: n });
    }
    let mut out = vec![RatFun::zero(); n];
    for (k, &col) in pivots.iter().enumerate() {
        out[col] = RatFun::new(aug[k][n].clone(), aug[k][col].clone())?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Var;
    use crate::algebra::ring::delta_poly;

    fn rf(p: Poly) -> RatFun {
        RatFun::from_poly(p)
    }

    #[test]
    fn identity_returns_rhs() {
        let m = vec![
            vec![RatFun::one(), RatFun::zero()],
            vec![RatFun::zero(), RatFun::one()],
        ];
        let rhs = vec![rf(Poly::var(Var::A)), RatFun::new(Poly::one(), Poly::var(Var::B)).unwrap()];
        assert_eq!(linsolve(&m, &rhs).unwrap(), rhs);
    }

    #[test]
    fn one_by_one_delta() {
        let d = delta_poly().clone();
        let m = vec![vec![rf(d.clone())]];
        let rhs = vec![rf(&d * &d)];
        let u = linsolve(&m, &rhs).unwrap();
        assert_eq!(u[0].to_ring_elem().unwrap().as_poly(), Some(&d));
    }

    #[test]
    fn singular_and_inconsistent() {
        let a = Poly::var(Var::A);
        let m = vec![vec![rf(a.clone()), rf(a.clone())], vec![rf(a.clone()), rf(a.clone())]];
        assert!(matches!(
            linsolve(&m, &[RatFun::one(), RatFun::one()]),
            Err(AlgebraError::SingularSystem { rank: 1, unknowns: 2 })
        ));
        assert_eq!(
            linsolve(&m, &[RatFun::one(), RatFun::zero()]),
            Err(AlgebraError::InconsistentSystem)
        );
    }

    #[test]
    fn solution_substitutes_back() {
        let a = Poly::var(Var::A);
        let b = Poly::var(Var::B);
        let t1 = Poly::var(Var::T1);
        let m = vec![
            vec![rf(a.clone()), rf(b.clone()), RatFun::one()],
            vec![rf(&b * &b), rf(t1.clone()), rf(a.clone())],
            vec![RatFun::one(), rf(&a + &t1), rf(&b * &t1)],
        ];
        let rhs = vec![rf(t1.clone()), RatFun::one(), rf(Poly::var(Var::C))];
        let u = linsolve(&m, &rhs).unwrap();
        for (row, r) in m.iter().zip(&rhs) {
            let lhs = row.iter().zip(&u).fold(RatFun::zero(), |acc, (x, y)| &acc + &(x * y));
            assert_eq!(&lhs, r);
        }
    }
}
