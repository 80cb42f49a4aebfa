use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::entry::SuperEntry;
use crate::error::{Error, Result};
use crate::partitions::{Cell, SkewShape};
use crate::polyring::Monomial;

/// A filling of a skew shape by letters of `[n] ∪ [m]`. Entries are stored in
/// the row-major order of [`SkewShape::cells`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperTableau {
    shape: SkewShape,
    entries: Vec<SuperEntry>,
}

impl SuperTableau {
    /// Wraps a row-major filling. Only the number of entries is checked; use
    /// [`SuperTableau::validate`] for the ordering conditions.
    pub fn new(shape: SkewShape, entries: Vec<SuperEntry>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.size()
            )));
        }
        Ok(SuperTableau { shape, entries })
    }

    pub fn empty(shape: SkewShape) -> Result<Self> {
        SuperTableau::new(shape, Vec::new())
    }

    pub fn from_cells(shape: SkewShape, filling: &BTreeMap<Cell, SuperEntry>) -> Result<Self> {
        let cells = shape.cells();
        if filling.len() != cells.len() {
            return Err(Error::InvalidTableau(format!("{} entries for {} cells", filling.len(), cells.len())));
        }
        let entries = cells
            .iter()
            .map(|c| filling.get(c).copied().ok_or_else(|| Error::InvalidTableau(format!("cell {c} is not filled"))))
            .collect::<Result<_>>()?;
        SuperTableau::new(shape, entries)
    }

    /// Builds a tableau from rows in which inner cells are `None`.
    pub fn from_rows(shape: SkewShape, rows: &[Vec<Option<SuperEntry>>]) -> Result<Self> {
        let mut entries = Vec::new();
        for r in 1..=shape.outer().length().max(rows.len()) {
            let row = rows.get(r - 1).map(Vec::as_slice).unwrap_or(&[]);
            if row.len() != shape.outer().part(r) {
                return Err(Error::InvalidTableau(format!(
                    "row {r} has {} boxes, shape needs {}",
                    row.len(),
                    shape.outer().part(r)
                )));
            }
            for (c, slot) in row.iter().enumerate() {
                let inner = c < shape.inner().part(r);
                match (inner, slot) {
                    (true, None) => {}
                    (false, Some(e)) => entries.push(*e),
                    (true, Some(_)) => {
                        return Err(Error::InvalidTableau(format!("inner cell ({r},{}) is filled", c + 1)))
                    }
                    (false, None) => return Err(Error::InvalidTableau(format!("cell ({r},{}) is empty", c + 1))),
                }
            }
        }
        SuperTableau::new(shape, entries)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[SuperEntry] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, SuperEntry)> + '_ {
        self.shape.cells().into_iter().zip(self.entries.iter().copied())
    }

    pub fn get(&self, cell: Cell) -> Option<SuperEntry> {
        self.iter().find(|(c, _)| *c == cell).map(|(_, e)| e)
    }

    pub fn rows(&self) -> Vec<Vec<Option<SuperEntry>>> {
        let mut rows: Vec<Vec<Option<SuperEntry>>> =
            self.shape.outer().parts().iter().map(|&len| vec![None; len]).collect();
        for (cell, e) in self.iter() {
            rows[cell.row - 1][cell.col - 1] = Some(e);
        }
        rows
    }

    /// Checks the alphabet bounds and the ordering rules: weakly increasing
    /// along rows and columns, unprimed letters strictly increasing down
    /// columns and primed letters strictly increasing along rows.
    pub fn validate(&self, n: usize, m: usize) -> Result<()> {
        let filling: BTreeMap<Cell, SuperEntry> = self.iter().collect();
        for (&cell, &e) in &filling {
            if !e.fits(n, m) {
                return Err(Error::InvalidTableau(format!("letter {e} at {cell} is outside [{n}] ∪ [{m}']")));
            }
            if cell.col > 1 {
                if let Some(&left) = filling.get(&Cell::new(cell.row, cell.col - 1)) {
                    if left > e || (left == e && e.primed) {
                        return Err(Error::InvalidTableau(format!(
                            "row condition fails between {left} and {e} at {cell}"
                        )));
                    }
                }
            }
            if cell.row > 1 {
                if let Some(&above) = filling.get(&Cell::new(cell.row - 1, cell.col)) {
                    if above > e || (above == e && !e.primed) {
                        return Err(Error::InvalidTableau(format!(
                            "column condition fails between {above} and {e} at {cell}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_standard(&self) -> bool {
        let distinct: BTreeSet<SuperEntry> = self.entries.iter().copied().collect();
        distinct.len() == self.entries.len()
    }

    /// Exponent vector over `x_1..x_n, y_1..y_m`.
    pub fn weight(&self, n: usize, m: usize) -> Monomial {
        let mut exps = vec![0u32; n + m];
        for e in &self.entries {
            exps[e.index(n)] += 1;
        }
        Monomial::new(exps)
    }

    /// `{"shape": "λ/μ", "rows": [[null, "1"], ["2", "3'"]]}`
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = self
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.map_or(Value::Null, |e| Value::from(e.to_string()))).collect())
            .collect();
        json!({ "shape": self.shape.to_string(), "rows": rows })
    }
}

impl Serialize for SuperTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// One row per line, inner cells shown as `.`.
impl fmt::Display for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows()
            .iter()
            .map(|row| row.iter().map(|e| e.map_or(".".to_string(), |e| e.to_string())).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}

struct Layout {
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

fn layout(shape: &SkewShape) -> Layout {
    let cells = shape.cells();
    let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let left =
        cells.iter().map(|c| if c.col > 1 { index.get(&Cell::new(c.row, c.col - 1)).copied() } else { None }).collect();
    let above =
        cells.iter().map(|c| if c.row > 1 { index.get(&Cell::new(c.row - 1, c.col)).copied() } else { None }).collect();
    Layout { left, above }
}

/// Calls `visit` with the letter indices (row-major, `0..n` unprimed and
/// `n..n+m` primed) of every supertableau, in lexicographic order of the
/// row reading word.
pub fn for_each_supertableau(shape: &SkewShape, n: usize, m: usize, mut visit: impl FnMut(&[usize])) {
    let lay = layout(shape);
    let mut word = vec![0usize; shape.size()];
    fill(&lay, n, n + m, 0, &mut word, &mut visit);
}

fn fill(lay: &Layout, n: usize, letters: usize, k: usize, word: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if k == word.len() {
        visit(word);
        return;
    }
    for v in 0..letters {
        let primed = v >= n;
        if let Some(l) = lay.left[k] {
            if v < word[l] || (v == word[l] && primed) {
                continue;
            }
        }
        if let Some(a) = lay.above[k] {
            if v < word[a] || (v == word[a] && !primed) {
                continue;
            }
        }
        word[k] = v;
        fill(lay, n, letters, k + 1, word, visit);
    }
}

/// All supertableaux of `shape` over `[n] ∪ [m]`, in row-reading
/// lexicographic order. With `m = 0` these are the semistandard tableaux.
pub fn enumerate_supertableaux(shape: &SkewShape, n: usize, m: usize) -> Vec<SuperTableau> {
    let mut out = Vec::new();
    for_each_supertableau(shape, n, m, |word| {
        let entries = word.iter().map(|&v| SuperEntry::from_index(v, n)).collect();
        out.push(SuperTableau { shape: shape.clone(), entries });
    });
    out
}

pub fn count_supertableaux(shape: &SkewShape, n: usize, m: usize) -> u64 {
    let mut count = 0u64;
    for_each_supertableau(shape, n, m, |_| count += 1);
    count
}

/// Standard fillings of `shape` by the letters `1..u, 1'..p'` with
/// `u + p = |shape|`, each used once.
pub fn enumerate_standard_supertableaux(shape: &SkewShape, u: usize, p: usize) -> Vec<SuperTableau> {
    if u + p != shape.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let lay = layout(shape);
    let mut word = vec![usize::MAX; shape.size()];
    let mut used = vec![false; u + p];
    standard_fill(&lay, 0, &mut word, &mut used, &mut |w: &[usize]| {
        let entries = w.iter().map(|&v| SuperEntry::from_index(v, u)).collect();
        out.push(SuperTableau { shape: shape.clone(), entries });
    });
    out
}

fn standard_fill(lay: &Layout, k: usize, word: &mut [usize], used: &mut [bool], visit: &mut impl FnMut(&[usize])) {
    if k == word.len() {
        visit(word);
        return;
    }
    for v in 0..used.len() {
        if used[v] || lay.left[k].is_some_and(|l| word[l] > v) || lay.above[k].is_some_and(|a| word[a] > v) {
            continue;
        }
        used[v] = true;
        word[k] = v;
        standard_fill(lay, k + 1, word, used, visit);
        used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn e(s: &str) -> SuperEntry {
        s.parse().unwrap()
    }

    #[test]
    fn hook_example_has_eight_fillings() {
        let all = enumerate_supertableaux(&shape("2,2/1"), 2, 1);
        assert_eq!(all.len(), 8);
        for t in &all {
            t.validate(2, 1).unwrap();
        }
        let first = &all[0];
        assert_eq!(first.weight(2, 1), Monomial::new(vec![2, 1, 0]));
        assert_eq!(first.to_string(), ". 1\n1 2");
    }

    #[test]
    fn square_with_four_letters() {
        assert_eq!(count_supertableaux(&shape("2,2"), 4, 0), 20);
        assert_eq!(count_supertableaux(&shape("2,2/2,2"), 3, 5), 1);
        assert_eq!(count_supertableaux(&shape("1,1"), 1, 0), 0);
        assert_eq!(count_supertableaux(&shape("2,1,1"), 1, 1), 2);
    }

    #[test]
    fn weight_counts_letters() {
        let t = SuperTableau::new(shape("1"), vec![e("1'")]).unwrap();
        assert_eq!(t.weight(0, 1), Monomial::new(vec![1]));
        let empty = SuperTableau::empty(SkewShape::straight(Partition::empty())).unwrap();
        assert_eq!(empty.weight(2, 2), Monomial::one(4));
    }

    #[test]
    fn rejects_mutated_fillings() {
        let bad_rows = [
            vec![vec![Some(e("1'")), Some(e("1'"))]],
            vec![vec![Some(e("1"))], vec![Some(e("1"))]],
            vec![vec![Some(e("2")), Some(e("1"))]],
        ];
        let shapes = ["2", "1,1", "2"];
        for (rows, s) in bad_rows.iter().zip(shapes) {
            let t = SuperTableau::from_rows(shape(s), rows).unwrap();
            assert!(t.validate(2, 2).is_err(), "{t}");
        }
        let good =
            SuperTableau::from_rows(shape("2,2/1"), &[vec![None, Some(e("1'"))], vec![Some(e("1")), Some(e("1'"))]])
                .unwrap();
        good.validate(1, 1).unwrap();
        assert!(good.validate(0, 1).is_err());
    }

    #[test]
    fn standard_fillings() {
        assert_eq!(enumerate_standard_supertableaux(&shape("2,1"), 3, 0).len(), 2);
        assert_eq!(enumerate_standard_supertableaux(&shape("3,2"), 2, 3).len(), 5);
        for t in enumerate_standard_supertableaux(&shape("3,2/1"), 1, 3) {
            assert!(t.is_standard());
            t.validate(1, 3).unwrap();
        }
    }

    #[test]
    fn json_rows() {
        let t = SuperTableau::from_rows(shape("2,1/1"), &[vec![None, Some(e("2'"))], vec![Some(e("3"))]]).unwrap();
        assert_eq!(t.to_json().to_string(), r#"{"rows":[[null,"2'"],["3"]],"shape":"2,1/1"}"#);
    }
}
