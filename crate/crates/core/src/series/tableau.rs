//! Ribbons and pseudo-ribbons, and their semistandard fillings.
//!
//! Cells carry coordinates `(x, y)` with `y` growing upwards. The first part
//! is the bottom row; each next row starts above the last cell of the row
//! below. Reading words go bottom to top, left to right.

use std::collections::HashMap;

use super::{words, NCSeries, Word};
use crate::coxeter::Family;
use crate::error::{Error, Result};
use crate::subset::Composition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    family: Family,
    /// Cells in reading order.
    cells: Vec<(i32, i32)>,
    /// The extra box of a pseudo-ribbon.
    zero: Option<(i32, i32)>,
}

fn plain_cells(parts: &[usize]) -> Vec<(i32, i32)> {
    let mut cells = Vec::new();
    let mut x0 = 0i32;
    for (y, &p) in parts.iter().enumerate() {
        for t in 0..p as i32 {
            cells.push((x0 + t, y as i32));
        }
        x0 += p as i32 - 1;
    }
    cells
}

impl Ribbon {
    /// The ribbon of a composition (type A) or the pseudo-ribbon of a pseudo-composition (B, D).
    pub fn new(family: Family, alpha: &Composition) -> Result<Self> {
        let parts = alpha.parts();
        match family {
            Family::A => {
                if !alpha.is_plain() || alpha.size() == 0 {
                    return Err(Error::Invalid(format!("{alpha} is not a nonempty composition")));
                }
                Ok(Ribbon { family, cells: plain_cells(parts), zero: None })
            }
            Family::B | Family::D => {
                if !alpha.is_pseudo() || alpha.size() == 0 {
                    return Err(Error::Invalid(format!("{alpha} is not a nonempty pseudo-composition")));
                }
                if family == Family::D && alpha.size() < 2 {
                    return Err(Error::Invalid(format!("type D needs size at least 2, got {alpha}")));
                }
                if parts[0] > 0 {
                    Ok(Ribbon { family, cells: plain_cells(parts), zero: Some((-1, 0)) })
                } else {
                    Ok(Ribbon { family, cells: plain_cells(&parts[1..]), zero: Some((0, -1)) })
                }
            }
        }
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Value of the extra box for the reading word `f`.
    fn zero_value(&self, f: &[i32]) -> i32 {
        match self.family {
            Family::D => -f[1],
            _ => 0,
        }
    }

    fn filling(&self, f: &[i32]) -> HashMap<(i32, i32), i32> {
        let mut map: HashMap<(i32, i32), i32> = self.cells.iter().copied().zip(f.iter().copied()).collect();
        if let Some(z) = self.zero {
            map.insert(z, self.zero_value(f));
        }
        map
    }

    /// Rows weakly increase to the right, columns strictly increase downwards.
    pub fn is_semistandard(&self, f: &[i32]) -> bool {
        let map = self.filling(f);
        map.iter().all(|(&(x, y), &v)| {
            map.get(&(x + 1, y)).is_none_or(|&r| v <= r) && map.get(&(x, y + 1)).is_none_or(|&u| u < v)
        })
    }

    /// Semistandard reading words with entries in `[-m, m]`.
    pub fn semistandard_words(&self, m: i32) -> Vec<Word> {
        words(self.size(), -m, m).into_iter().filter(|f| self.is_semistandard(f)).collect()
    }

    pub fn series(&self, m: i32) -> NCSeries {
        NCSeries::from_words(self.size(), m, self.semistandard_words(m)).expect("in window")
    }

    /// Text picture of the filling, top row first; the extra box is shown in brackets.
    pub fn render(&self, f: &[i32]) -> String {
        let map = self.filling(f);
        let (xmin, xmax) = map.keys().fold((i32::MAX, i32::MIN), |(a, b), &(x, _)| (a.min(x), b.max(x)));
        let (ymin, ymax) = map.keys().fold((i32::MAX, i32::MIN), |(a, b), &(_, y)| (a.min(y), b.max(y)));
        let mut lines = Vec::new();
        for y in (ymin..=ymax).rev() {
            let mut line = String::new();
            for x in xmin..=xmax {
                let cell = match map.get(&(x, y)) {
                    Some(v) if self.zero == Some((x, y)) => format!("[{v}]"),
                    Some(v) => v.to_string(),
                    None => String::new(),
                };
                line.push_str(&format!("{cell:>4}"));
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

/// Sum of `x_{w(tau)}` over semistandard tableaux of shape `alpha`.
pub fn tableau_series(family: Family, alpha: &Composition, m: i32) -> Result<NCSeries> {
    Ok(Ribbon::new(family, alpha)?.series(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ribbon_constraints_are_descents() {
        let r = Ribbon::new(Family::A, &Composition::new(vec![2, 1])).unwrap();
        assert!(r.is_semistandard(&[1, 2, 1]));
        assert!(!r.is_semistandard(&[1, 2, 2]));
        assert!(!r.is_semistandard(&[2, 1, 0]));
    }

    #[test]
    fn pseudo_ribbon_zero_box() {
        let pos = Ribbon::new(Family::B, &Composition::new(vec![1, 1])).unwrap();
        assert!(pos.is_semistandard(&[0, -1]));
        assert!(!pos.is_semistandard(&[-1, -2]));
        let neg = Ribbon::new(Family::B, &Composition::new(vec![0, 2])).unwrap();
        assert!(neg.is_semistandard(&[-1, 3]));
        assert!(!neg.is_semistandard(&[0, 3]));
        let d = Ribbon::new(Family::D, &Composition::new(vec![2])).unwrap();
        assert!(d.is_semistandard(&[-1, 1]));
        assert!(!d.is_semistandard(&[-2, 1]));
    }

    #[test]
    fn render_shows_zero_box() {
        let r = Ribbon::new(Family::B, &Composition::new(vec![0, 2, 1])).unwrap();
        let pic = r.render(&[-2, 1, -3]);
        assert!(pic.contains("[0]"));
        assert_eq!(pic.lines().count(), 3);
    }
}
