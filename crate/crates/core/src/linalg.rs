//! Matrices over GF(p^k) with exact rank, kernel dimension and column-space solves.
//!
//! Matrices are stored column by column as sparse vectors: multiplication maps
//! are assembled one product at a time and most columns have one or two
//! nonzero entries. Rank is computed by inserting columns, in order, into an
//! echelon basis whose pivot is the first nonzero entry scanning top to bottom.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A sparse column: `(row, encoding)` pairs, rows strictly increasing, no zeros.
pub type SparseColumn = Vec<(u32, u32)>;

#[derive(Clone)]
pub struct GfMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    columns: Vec<SparseColumn>,
}

impl GfMatrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        Self {
            field: field.clone(),
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i as u32, 1)]).collect(),
        }
    }

    /// Builds a matrix from row-major field elements.
    pub fn from_rows(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for e in row {
                if !e.field().same_field(field) {
                    return Err(Error::FieldMismatch);
                }
                data.push(e.encoding());
            }
        }
        Self::from_encoded(field, rows.len(), cols, &data)
    }

    /// Builds a matrix from row-major encodings.
    pub fn from_encoded(field: &FieldSpec, rows: usize, cols: usize, data: &[u32]) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= field.q()) {
            return Err(Error::InvalidElement {
                value: bad as u64,
                q: field.q(),
            });
        }
        let columns = (0..cols)
            .map(|c| {
                (0..rows)
                    .filter_map(|r| {
                        let v = data[r * cols + c];
                        (v != 0).then_some((r as u32, v))
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            field: field.clone(),
            rows,
            cols,
            columns,
        })
    }

    /// Builds a matrix from sparse columns given as `(row, encoding)` pairs in any
    /// order; repeated rows are summed.
    pub fn from_sparse_columns(
        field: &FieldSpec,
        rows: usize,
        columns: Vec<Vec<(usize, u32)>>,
    ) -> Result<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for col in columns {
            let mut acc: BTreeMap<u32, u32> = BTreeMap::new();
            for (r, v) in col {
                if r >= rows {
                    return Err(Error::DimensionMismatch(format!(
                        "row {r} out of range for {rows} rows"
                    )));
                }
                let e = acc.entry(r as u32).or_insert(0);
                *e = field.add(*e, v);
            }
            out.push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
        }
        Ok(Self {
            field: field.clone(),
            rows,
            cols,
            columns: out,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(u32, u32)] {
        &self.columns[c]
    }

    pub fn get_encoded(&self, r: usize, c: usize) -> u32 {
        let col = &self.columns[c];
        col.binary_search_by_key(&(r as u32), |&(row, _)| row)
            .map_or(0, |pos| col[pos].1)
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.field
            .element(self.get_encoded(r, c) as u64)
            .expect("stored entries are valid encodings")
    }

    /// Row-major dense encodings.
    pub fn to_dense(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.rows * self.cols];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r as usize * self.cols + c] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> GfMatrix {
        let mut columns: Vec<SparseColumn> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                columns[r as usize].push((c as u32, v));
            }
        }
        GfMatrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// `M * x` on encodings.
    pub fn mul_vec_encoded(&self, x: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.cols);
        let fs = &self.field;
        let mut out = vec![0u32; self.rows];
        for (col, &xc) in self.columns.iter().zip(x) {
            if xc == 0 {
                continue;
            }
            for &(r, v) in col {
                out[r as usize] = fs.add(out[r as usize], fs.mul(v, xc));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = ColumnEchelon::new(&self.field, self.rows, false);
        for col in &self.columns {
            if ech.rank() == self.rows {
                break;
            }
            ech.insert(col);
        }
        ech.rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn is_surjective_onto_rows(&self) -> bool {
        self.rank() == self.rows
    }

    /// Some `c` with `M c = target`, or `None` if `target` is outside the column space.
    ///
    /// Columns enter the echelon basis in order, so the solution is deterministic.
    pub fn solve_in_column_space(&self, target: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        if target.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "target of length {} for {} rows",
                target.len(),
                self.rows
            )));
        }
        if target.iter().any(|t| !t.field().same_field(&self.field)) {
            return Err(Error::FieldMismatch);
        }
        let enc: Vec<u32> = target.iter().map(FieldElement::encoding).collect();
        Ok(self.solve_encoded(&enc).map(|sol| {
            sol.into_iter()
                .map(|v| self.field.element(v as u64).expect("valid encoding"))
                .collect()
        }))
    }

    pub fn solve_encoded(&self, target: &[u32]) -> Option<Vec<u32>> {
        let mut ech = ColumnEchelon::new(&self.field, self.rows, true);
        for (c, col) in self.columns.iter().enumerate() {
            if ech.rank() == self.rows {
                break;
            }
            ech.insert_tracked(col, c);
        }
        let sparse: SparseColumn = target
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v != 0)
            .map(|(r, &v)| (r as u32, v))
            .collect();
        let combo = ech.express(&sparse)?;
        let mut out = vec![0u32; self.cols];
        for (c, v) in combo {
            out[c] = v;
        }
        Some(out)
    }
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GfMatrix {}x{} over GF({})", self.rows, self.cols, self.field.q())?;
        if self.rows * self.cols <= 400 {
            let dense = self.to_dense();
            for r in 0..self.rows {
                writeln!(f, "  {:?}", &dense[r * self.cols..(r + 1) * self.cols])?;
            }
        }
        Ok(())
    }
}

/// Incremental echelon basis of a column space.
///
/// Each stored vector is normalized so its pivot (first nonzero row) holds 1.
/// When tracking is on, each stored vector also remembers how it was formed
/// from the inserted columns.
pub struct ColumnEchelon<'a> {
    field: &'a FieldSpec,
    pivots: Vec<Option<SparseColumn>>,
    combos: Vec<Option<BTreeMap<usize, u32>>>,
    track: bool,
    rank: usize,
}

impl<'a> ColumnEchelon<'a> {
    pub fn new(field: &'a FieldSpec, len: usize, track: bool) -> Self {
        Self {
            field,
            pivots: vec![None; len],
            combos: if track { vec![None; len] } else { Vec::new() },
            track,
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Inserts a column; returns whether it was independent of the previous ones.
    pub fn insert(&mut self, col: &[(u32, u32)]) -> bool {
        self.insert_inner(col, None)
    }

    pub fn insert_tracked(&mut self, col: &[(u32, u32)], index: usize) -> bool {
        self.insert_inner(col, Some(index))
    }

    fn insert_inner(&mut self, col: &[(u32, u32)], index: Option<usize>) -> bool {
        let fs = self.field;
        let mut acc: BTreeMap<u32, u32> = col.iter().copied().filter(|&(_, v)| v != 0).collect();
        let mut combo: BTreeMap<usize, u32> = BTreeMap::new();
        if self.track {
            combo.insert(index.expect("tracked insert needs an index"), 1);
        }
        loop {
            let Some((&r, &v)) = acc.iter().next() else {
                return false;
            };
            match &self.pivots[r as usize] {
                Some(basis) => {
                    let factor = fs.neg(v);
                    axpy(fs, &mut acc, basis.iter().copied(), factor);
                    if self.track {
                        let bc = self.combos[r as usize].as_ref().expect("tracked");
                        axpy(fs, &mut combo, bc.iter().map(|(&c, &x)| (c, x)), factor);
                    }
                }
                None => {
                    let inv = fs.inv(v).expect("nonzero pivot");
                    let vec: SparseColumn = acc.into_iter().map(|(rr, x)| (rr, fs.mul(x, inv))).collect();
                    self.pivots[r as usize] = Some(vec);
                    if self.track {
                        self.combos[r as usize] =
                            Some(combo.into_iter().map(|(c, x)| (c, fs.mul(x, inv))).collect());
                    }
                    self.rank += 1;
                    return true;
                }
            }
        }
    }

    /// Writes `target` as a combination of the inserted columns, if possible.
    /// Requires tracking.
    pub fn express(&self, target: &[(u32, u32)]) -> Option<BTreeMap<usize, u32>> {
        assert!(self.track, "express needs a tracked echelon");
        let fs = self.field;
        let mut acc: BTreeMap<u32, u32> = target.iter().copied().filter(|&(_, v)| v != 0).collect();
        let mut combo: BTreeMap<usize, u32> = BTreeMap::new();
        while let Some((&r, &v)) = acc.iter().next() {
            let basis = self.pivots[r as usize].as_ref()?;
            axpy(fs, &mut acc, basis.iter().copied(), fs.neg(v));
            let bc = self.combos[r as usize].as_ref().expect("tracked");
            axpy(fs, &mut combo, bc.iter().map(|(&c, &x)| (c, x)), v);
        }
        Some(combo)
    }
}

/// `acc += factor * x`, dropping zeros.
fn axpy<K: Ord + Copy>(
    fs: &FieldSpec,
    acc: &mut BTreeMap<K, u32>,
    x: impl Iterator<Item = (K, u32)>,
    factor: u32,
) {
    for (k, v) in x {
        let add = fs.mul(v, factor);
        if add == 0 {
            continue;
        }
        let e = acc.entry(k).or_insert(0);
        *e = fs.add(*e, add);
        if *e == 0 {
            acc.remove(&k);
        }
    }
}
