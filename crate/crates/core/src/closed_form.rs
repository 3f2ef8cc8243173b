//! Published determinant polynomials and hand-derived CCMs for the catalog.
//!
//! Label vectors are 1-based: `i[1]..i[11]` are the check labels in the
//! catalog's check-id order (`i[k]` labels check `k - 1`); `i[0]` is unused.

use crate::ccm::int_det;
use crate::error::{Error, Result};
use crate::gfp::reduce;

/// Named determinant conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// (4,8) under labels `(x, y, x, y, z, w)`; arguments `(x, y, z, w)`.
    As48A1,
    /// (4,8) under labels `(x, t, w, y, z, z)`; arguments `(x, y, z, w, t)`.
    As48A2,
    /// (5,9) determinant in `i[1..=8]`.
    As59,
    /// Candidate 3, five-by-five block.
    C3B,
    /// Candidate 3, four-by-four block.
    C3A,
    /// Candidate 4, top-left three-by-three block.
    C4A,
    /// Candidate 4, bottom-right four-by-four block.
    C4B,
    /// Candidate 5, determinant of the hand-derived five-cycle matrix.
    C5,
    /// Candidate 5, the polynomial as printed alongside that matrix.
    C5Printed,
    /// Candidate 6, four-by-four block.
    C6A,
    /// Candidate 6, the four-by-four polynomial as printed.
    C6APrinted,
    /// Candidate 6, five-by-five block.
    C6B,
}

pub const ALL_FORMS: [ClosedForm; 12] = [
    ClosedForm::As48A1,
    ClosedForm::As48A2,
    ClosedForm::As59,
    ClosedForm::C3B,
    ClosedForm::C3A,
    ClosedForm::C4A,
    ClosedForm::C4B,
    ClosedForm::C5,
    ClosedForm::C5Printed,
    ClosedForm::C6A,
    ClosedForm::C6APrinted,
    ClosedForm::C6B,
];

impl ClosedForm {
    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::As48A1 => "AS48_a1",
            ClosedForm::As48A2 => "AS48_a2",
            ClosedForm::As59 => "AS59",
            ClosedForm::C3B => "C3_B",
            ClosedForm::C3A => "C3_A",
            ClosedForm::C4A => "C4_A",
            ClosedForm::C4B => "C4_B",
            ClosedForm::C5 => "C5",
            ClosedForm::C5Printed => "C5_printed",
            ClosedForm::C6A => "C6_A",
            ClosedForm::C6APrinted => "C6_A_printed",
            ClosedForm::C6B => "C6_B",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        ALL_FORMS
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::Unknown(format!("closed form {name}")))
    }

    /// Number of arguments: symbols for the (4,8) forms, `i[1..]` otherwise.
    pub fn arity(self) -> usize {
        match self {
            ClosedForm::As48A1 => 4,
            ClosedForm::As48A2 => 5,
            ClosedForm::As59 => 8,
            _ => 11,
        }
    }

    /// Exact integer value.
    pub fn eval(self, args: &[i64]) -> Result<i128> {
        if args.len() != self.arity() {
            return Err(Error::Dimension(format!(
                "{} takes {} labels, got {}",
                self.name(),
                self.arity(),
                args.len()
            )));
        }
        let a: Vec<i128> = args.iter().map(|&x| x as i128).collect();
        let mut i = vec![0i64];
        i.extend_from_slice(args);
        let l: Vec<i128> = i.iter().map(|&x| x as i128).collect();
        Ok(match self {
            ClosedForm::As48A1 => {
                let (x, y, z, w) = (a[0], a[1], a[2], a[3]);
                (z - x) * (w - y) + (z - y) * (w - x)
            }
            ClosedForm::As48A2 => {
                let (x, y, z, w, t) = (a[0], a[1], a[2], a[3], a[4]);
                (z - w) * (x - t) * (y - z) - (y - w) * (x - z) * (z - t)
            }
            ClosedForm::As59 => {
                (l[1] - l[5]) * (l[8] - l[4]) * (l[2] - l[6]) * (l[3] - l[7])
                    - (l[1] - l[8]) * (l[5] - l[2]) * (l[6] - l[3]) * (l[7] - l[4])
            }
            ClosedForm::C3B => {
                let (x, y, z, w, t) = (l[1], l[2], l[3], l[4], l[5]);
                -(l[11] - z)
                    * (-(x - l[6]) * (l[9] - t) * (l[7] - w) * (y - l[10])
                        + (x - l[7]) * (l[6] - t) * (y - l[9]) * (l[10] - w))
            }
            ClosedForm::C3A => {
                let (x, y, z, w) = (l[1], l[2], l[3], l[4]);
                -(x - l[7]) * (l[10] - w) * (y - l[11]) * (l[8] - z)
                    + (x - l[8]) * (l[7] - w) * (l[11] - z) * (y - l[10])
            }
            ClosedForm::C4A => {
                let m = c4_matrix(&i);
                int_det(&sub(&m, &[0, 1, 2], &[0, 1, 2]))
            }
            ClosedForm::C4B => {
                let m = c4_matrix(&i);
                int_det(&sub(&m, &[2, 3, 4, 5], &[1, 2, 3, 4]))
            }
            ClosedForm::C5 => int_det(&c5_matrix(&i)),
            ClosedForm::C5Printed => {
                let (x, y, z, w, t) = (l[3], l[1], l[2], l[8], l[7]);
                (-(z - w)
                    * (l[5] - l[4])
                    * ((w - l[10]) * (l[10] - l[11]) - (l[9] - l[10]) * (l[10] - l[9]))
                    + (l[9] - w) * (w - y) * (l[5] - l[4]) * (l[10] - l[11]))
                    * (x - t)
                    - (x - l[5]) * (t - z) * (w - y) * (l[10] - l[9]) * (l[11] - l[4])
            }
            ClosedForm::C6A => {
                let m = c6_matrix(&i);
                int_det(&sub(&m, &[0, 1, 2, 3], &[0, 1, 2, 3]))
            }
            ClosedForm::C6APrinted => {
                (l[8] - l[2])
                    * (-(l[1] - l[4]) * (l[3] - l[6]) * (l[4] - l[5])
                        + (l[4] - l[10]) * ((l[3] - l[6]) * (l[3] - l[4]) - (l[2] - l[3]) * (l[5] - l[3])))
            }
            ClosedForm::C6B => {
                (l[4] - l[10])
                    * (-(l[8] - l[2]) * (l[9] - l[11]) * (l[2] - l[3]) * (l[6] - l[7])
                        + (l[2] - l[1])
                            * ((l[6] - l[2]) * (l[6] - l[7]) * (l[9] - l[11])
                                - (l[3] - l[6])
                                    * ((l[9] - l[6]) * (l[9] - l[11]) - (l[7] - l[9]) * (l[8] - l[9]))))
            }
        })
    }
}

/// Evaluates a named determinant condition mod `p`.
pub fn closed_form_det(form: ClosedForm, labels: &[i64], p: u32) -> Result<u32> {
    crate::gfp::check_prime(p)?;
    let v = form.eval(labels)?;
    Ok(reduce((v % p as i128) as i64, p))
}

/// Submatrix by row and column index lists.
pub fn sub(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| m[r][c]).collect())
        .collect()
}

/// (4,8) CCM in `i[1..=6]`.
pub fn as48_matrix(i: &[i64]) -> Vec<Vec<i64>> {
    vec![
        vec![i[1] - i[2], i[2] - i[5], 0],
        vec![i[1] - i[6], 0, i[6] - i[4]],
        vec![0, i[5] - i[3], i[3] - i[4]],
    ]
}

/// (5,9) CCM in `i[1..=8]`.
pub fn as59_matrix(i: &[i64]) -> Vec<Vec<i64>> {
    vec![
        vec![i[1] - i[5], i[5] - i[2], 0, 0],
        vec![i[1] - i[8], 0, 0, i[8] - i[4]],
        vec![0, i[2] - i[6], i[6] - i[3], 0],
        vec![0, 0, i[3] - i[7], i[7] - i[4]],
    ]
}

/// Candidate 3 CCM in `i[1..=11]`.
pub fn c3_matrix(i: &[i64]) -> Vec<Vec<i64>> {
    let (x, y, z, w, t) = (i[1], i[2], i[3], i[4], i[5]);
    vec![
        vec![x - i[6], 0, 0, 0, i[6] - t],
        vec![0, y - i[9], 0, 0, i[9] - t],
        vec![x - i[7], 0, 0, i[7] - w, 0],
        vec![0, y - i[11], i[11] - z, 0, 0],
        vec![0, y - i[10], 0, i[10] - w, 0],
        vec![x - i[8], 0, i[8] - z, 0, 0],
    ]
}

/// Candidate 4 CCM in `i[1..=11]`.
pub fn c4_matrix(i: &[i64]) -> Vec<Vec<i64>> {
    vec![
        vec![i[5] - i[1], i[1] - i[3], 0, 0, 0],
        vec![i[5] - i[6], 0, i[6] - i[4], 0, 0],
        vec![0, i[3] - i[2], i[2] - i[4], 0, 0],
        vec![0, i[11] - i[3], 0, 0, i[7] - i[11]],
        vec![0, 0, i[10] - i[4], i[8] - i[10], 0],
        vec![0, 0, 0, i[9] - i[8], i[7] - i[9]],
    ]
}

/// Candidate 5 five-cycle matrix in `i[1..=11]`, with `x = i[3]`, `y = i[1]`,
/// `z = i[2]`, `w = i[8]`, `t = i[7]`. It presumes `i[6] = i[2]`.
pub fn c5_matrix(i: &[i64]) -> Vec<Vec<i64>> {
    let (x, y, z, w, t) = (i[3], i[1], i[2], i[8], i[7]);
    vec![
        vec![x - t, t - z, 0, 0, 0],
        vec![0, z - w, w - y, 0, 0],
        vec![x - i[5], 0, 0, i[5] - i[4], 0],
        vec![0, i[9] - w, w - i[10], 0, i[10] - i[9]],
        vec![0, 0, y - i[10], i[11] - i[4], i[10] - i[11]],
    ]
}

/// Candidate 6 CCM in `i[1..=11]`.
pub fn c6_matrix(i: &[i64]) -> Vec<Vec<i64>> {
    vec![
        vec![i[8] - i[2], 0, i[2] - i[1], 0, 0],
        vec![0, 0, i[1] - i[4], i[4] - i[10], 0],
        vec![i[6] - i[2], i[3] - i[6], i[2] - i[3], 0, 0],
        vec![0, i[5] - i[3], i[3] - i[4], i[4] - i[5], 0],
        vec![i[9] - i[6], i[6] - i[7], 0, 0, i[7] - i[9]],
        vec![i[8] - i[9], 0, 0, 0, i[9] - i[11]],
    ]
}

/// Hand-derived CCM for a catalog topology, if one exists.
pub fn published_matrix(topology: &str, i: &[i64]) -> Option<Vec<Vec<i64>>> {
    match topology {
        "AS48" => Some(as48_matrix(i)),
        "AS59" => Some(as59_matrix(i)),
        "AS68_C3" => Some(c3_matrix(i)),
        "AS68_C4" => Some(c4_matrix(i)),
        "AS68_C5" => Some(c5_matrix(i)),
        "AS68_C6" => Some(c6_matrix(i)),
        _ => None,
    }
}

/// 1-based label vector `(0, i1, ..., in)` from check values in check-id order.
pub fn one_based(values: &[i64]) -> Vec<i64> {
    let mut i = Vec::with_capacity(values.len() + 1);
    i.push(0);
    i.extend_from_slice(values);
    i
}

/// (4,8) labels `(i1..i6)` for assignment 1 `(x, y, x, y, z, w)`.
pub fn as48_assignment1(x: i64, y: i64, z: i64, w: i64) -> [i64; 6] {
    [x, y, x, y, z, w]
}

/// (4,8) labels `(i1..i6)` for assignment 2 `(x, t, w, y, z, z)`.
pub fn as48_assignment2(x: i64, y: i64, z: i64, w: i64, t: i64) -> [i64; 6] {
    [x, t, w, y, z, z]
}

/// The five (5,9) label patterns `(i1..i8)` over symbols `(x, y, z, w, t)`.
pub fn as59_pattern(n: usize, s: [i64; 5]) -> Option<[i64; 8]> {
    let [x, y, z, w, t] = s;
    Some(match n {
        1 => [x, y, z, w, z, w, x, y],
        2 => [x, y, z, w, t, w, x, y],
        3 => [x, y, z, w, t, w, x, z],
        4 => [x, y, z, w, t, x, t, y],
        5 => [x, y, z, w, t, w, t, y],
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in ALL_FORMS {
            assert_eq!(ClosedForm::from_name(f.name()).unwrap(), f);
        }
        assert!(ClosedForm::from_name("C9").is_err());
    }

    #[test]
    fn arity_is_checked() {
        assert!(ClosedForm::As48A2.eval(&[1, 2, 3]).is_err());
    }
}
