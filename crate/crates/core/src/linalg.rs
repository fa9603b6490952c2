//! Fraction-free integer elimination on small dense matrices.

/// Rank of an integer matrix by integer row elimination, each reduced row
/// divided by the gcd of its entries.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let height = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        if r == height {
            break;
        }
        let Some(p) = (r..height).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..height {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let mut g = 0i128;
            for j in c..width {
                m[i][j] = a * m[i][j] - b * m[r][j];
                g = gcd(g, m[i][j]);
            }
            if g > 1 {
                for x in &mut m[i][c..] {
                    *x /= g;
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Generalized cross product of `n - 1` vectors in `Z^n`: the cofactor
/// vector, orthogonal to each input and zero iff they are dependent.
pub fn normal_vector(vectors: &[Vec<i64>]) -> Vec<i64> {
    let n = vectors.len() + 1;
    let mut normal = Vec::with_capacity(n);
    for skip in 0..n {
        let minor: Vec<Vec<i64>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let d = determinant(&minor);
        let signed = if skip % 2 == 0 { d } else { -d };
        normal.push(i64::try_from(signed).expect("cofactor fits in i64"));
    }
    normal
}
