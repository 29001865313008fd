use crate::field::Field;

/// One solution of `rows · x = rhs` over `F`, free variables set to zero.
/// `None` if the system is inconsistent.
pub(crate) fn solve<F: Field>(mut rows: Vec<Vec<F>>, mut rhs: Vec<F>, ncols: usize) -> Option<Vec<F>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        rhs[r] = rhs[r].clone() * inv;
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            let pivot_row = rows[r].clone();
            for (x, p) in rows[i].iter_mut().zip(&pivot_row).take(ncols) {
                *x = x.clone() - f.clone() * p.clone();
            }
            rhs[i] = rhs[i].clone() - f * rhs[r].clone();
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rhs[r..].iter().any(|b| !b.is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rhs[i].clone();
    }
    Some(x)
}
