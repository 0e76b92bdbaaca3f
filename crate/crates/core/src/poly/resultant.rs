use super::Poly;
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<Poly>>, vars: &std::sync::Arc<[String]>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(vars);
    }
    let mut sign = false;
    let mut prev = Poly::one(vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Poly::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero(vars);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Sylvester resultant of `f` and `g` with respect to the named variable.
pub fn resultant(f: &Poly, g: &Poly, var: &str) -> Result<Poly> {
    f.check_vars(g)?;
    let v = f.var_index(var)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidArgument("resultant of a zero polynomial".into()));
    }
    let fc = f.coefficients_in(v);
    let gc = g.coefficients_in(v);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    if m == 0 && n == 0 {
        return Err(Error::InvalidArgument(format!(
            "both polynomials have degree 0 in `{var}`"
        )));
    }
    let size = m + n;
    let zero = Poly::zero(f.vars());
    let mut rows = vec![vec![zero.clone(); size]; size];
    // highest power in the first column
    for r in 0..n {
        for (k, c) in fc.iter().enumerate() {
            rows[r][r + m - k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gc.iter().enumerate() {
            rows[n + r][r + n - k] = c.clone();
        }
    }
    Ok(determinant(rows, f.vars()))
}
