//! Exact solution of square rational linear systems.
//!
//! Rows are scaled to integers and reduced with Bareiss' fraction-free
//! elimination, so intermediate entries stay integral and every division
//! is exact. Back substitution happens over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::Rational;

/// Solves `a · x = b`. Fails with [`Error::SingularSystem`] when no
/// non-zero pivot can be found.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter(
            "linear system is not square".into(),
        ));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| integer_row(row.iter().chain(std::iter::once(rhs))))
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !m[r][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        m.swap(k, pivot_row);
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..=n {
                let v = &pivot[k] * &row[j] - &factor * &pivot[j];
                // exact by Sylvester's identity
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = top[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
            }
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Ok(x)
}

fn integer_row<'a>(entries: impl Iterator<Item = &'a Rational> + Clone) -> Vec<BigInt> {
    let lcm = entries
        .clone()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    entries.map(|r| r.numer() * (&lcm / r.denom())).collect()
}
