//! Exact tableau counts: the skew determinant formula, the rectangular
//! hook-length product, and the classical closed form, all in arbitrary
//! precision. These are the independent oracles against which enumeration
//! is cross-checked.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::SkewDiagram;

pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

fn inverse_factorial(e: i64) -> BigRational {
    if e < 0 {
        BigRational::zero()
    } else {
        BigRational::new(1.into(), factorial(e as u64).into())
    }
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&row| !m[row][col].is_zero());
        let Some(pivot) = pivot else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col].clone();
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &m[col][col];
            for k in col..n {
                let delta = &factor * &m[col][k];
                m[row][k] -= delta;
            }
        }
    }
    det
}

/// Number of standard fillings of a skew diagram, by the determinant
/// `n! * det(1 / (lambda_i - mu_j - i + j)!)` with `1/k! = 0` for `k < 0`.
pub fn count_skew(diag: &SkewDiagram) -> BigUint {
    let (lambda, mu) = diag.outer_inner();
    let n = diag.box_count() as u64;
    let l = lambda.len();
    let matrix: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let e = i64::from(lambda[i]) - i64::from(mu[j]) - (i as i64) + (j as i64);
                    inverse_factorial(e)
                })
                .collect()
        })
        .collect();
    let det = determinant(matrix);
    let count = det * BigRational::from_integer(factorial(n).into());
    assert!(count.is_integer() && !count.is_negative());
    count.to_integer().to_biguint().unwrap()
}

/// Standard fillings of the straight `s x t` rectangle:
/// `(st)! * prod_{i=0}^{s-1} i! / (t+i)!`.
pub fn count_rectangle(s: u32, t: u32) -> BigUint {
    assert!(s >= 1 && t >= 1);
    let mut num = factorial(u64::from(s) * u64::from(t));
    let mut den = BigUint::one();
    for i in 0..u64::from(s) {
        num *= factorial(i);
        den *= factorial(u64::from(t) + i);
    }
    let (q, rem) = num_integer::Integer::div_rem(&num, &den);
    assert!(rem.is_zero());
    q
}

/// The classical count `N(g,r,d) = g! * prod_{i=0}^{r} i! / (g-d+r+i)!`.
pub fn count_classical(g: u32, r: u32, d: u32) -> BigUint {
    let w = i64::from(g) - i64::from(d) + i64::from(r);
    assert!(w >= 0);
    let mut num = factorial(u64::from(g));
    let mut den = BigUint::one();
    for i in 0..=u64::from(r) {
        num *= factorial(i);
        den *= factorial(w as u64 + i);
    }
    let (q, rem) = num_integer::Integer::div_rem(&num, &den);
    assert!(rem.is_zero());
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{BrillNoetherParams, RamificationSequence};

    fn diagram(g: u32, r: u32, d: u32, alpha: &[u32], beta: &[u32]) -> SkewDiagram {
        let p = BrillNoetherParams::new(
            g,
            r,
            d,
            RamificationSequence::new(alpha.to_vec()).unwrap(),
            RamificationSequence::new(beta.to_vec()).unwrap(),
        )
        .unwrap();
        SkewDiagram::build(&p).unwrap()
    }

    #[test]
    fn skew_count_worked_example() {
        // Shape (5,3)/(1,0): 28 standard fillings.
        let diag = diagram(7, 1, 6, &[1, 0], &[2, 0]);
        assert_eq!(count_skew(&diag), 28u32.into());
    }

    #[test]
    fn skew_count_single_row() {
        let diag = diagram(4, 0, 0, &[0], &[0]);
        assert_eq!(count_skew(&diag), 1u32.into());
    }

    #[test]
    fn skew_count_empty_diagram() {
        let diag = diagram(0, 0, 0, &[0], &[0]);
        assert_eq!(count_skew(&diag), 1u32.into());
    }

    #[test]
    fn rectangle_hook_values() {
        assert_eq!(count_rectangle(1, 5), 1u32.into());
        assert_eq!(count_rectangle(2, 2), 2u32.into());
        // Two-row rectangles give Catalan numbers.
        assert_eq!(count_rectangle(2, 4), 14u32.into());
        // 3 x 4: the product form evaluates to 462.
        assert_eq!(count_rectangle(3, 4), 462u32.into());
    }

    #[test]
    fn rectangle_matches_skew_determinant() {
        for (s, t, g, d) in [(2u32, 2u32, 4u32, 3u32), (3, 4, 12, 10), (2, 4, 8, 5)] {
            let r = s - 1;
            let diag = diagram(g, r, d, &vec![0; s as usize], &vec![0; s as usize]);
            assert_eq!(count_skew(&diag), count_rectangle(s, t));
        }
    }

    #[test]
    fn classical_values() {
        assert_eq!(count_classical(4, 1, 3), 2u32.into());
        assert_eq!(count_classical(8, 1, 5), 14u32.into());
        assert_eq!(count_classical(0, 0, 0), 1u32.into());
    }
}
