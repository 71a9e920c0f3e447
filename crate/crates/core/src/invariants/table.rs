use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{elementary_ideal, elementary_ideals, twisted_matrix};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::maps::{conjugacy_classes, enumerate_epis, enumerate_homs, AbelianMap, MatrixGroup};
use crate::presentation::Presentation;
use crate::ring::RingSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    /// Rows are conjugacy classes, columns are epimorphisms; canonical up to row and column permutation.
    MatrixForm,
    /// One row of elementary ideals per conjugacy class; canonical up to row permutation.
    RowForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantRow {
    pub entries: Vec<String>,
    pub multiplicity: usize,
}

/// A multiset of rows of rendered ideals, printed as `{(a,b)_2,(c)_1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantTable {
    pub kind: TableKind,
    pub rows: Vec<InvariantRow>,
    /// Column count for the matrix form; untrimmed row length for the row form.
    pub columns: usize,
}

fn row_form_key(row: &[String]) -> (usize, &[String]) {
    (row.len(), row)
}

fn merge(rows: Vec<Vec<String>>) -> Vec<InvariantRow> {
    rows.into_iter()
        .dedup_with_count()
        .map(|(multiplicity, entries)| InvariantRow {
            entries,
            multiplicity,
        })
        .collect()
}

impl InvariantTable {
    /// Row-form table from unsorted rows, one per class.
    pub fn row_form(mut rows: Vec<Vec<String>>, columns: usize) -> Self {
        rows.sort_by(|a, b| row_form_key(a).cmp(&row_form_key(b)));
        InvariantTable {
            kind: TableKind::RowForm,
            rows: merge(rows),
            columns,
        }
    }

    /// Matrix-form table: the least row-sorted matrix over all column permutations.
    pub fn matrix_form(rows: Vec<Vec<String>>, columns: usize) -> Self {
        let best = (0..columns)
            .permutations(columns)
            .map(|perm| {
                let mut m: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| perm.iter().map(|&c| r[c].clone()).collect())
                    .collect();
                m.sort();
                m
            })
            .min()
            .unwrap_or_default();
        InvariantTable {
            kind: TableKind::MatrixForm,
            rows: merge(best),
            columns,
        }
    }

    /// Re-sorts rows into canonical order (needed after parsing hand-written tables).
    pub fn canonical(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.entries.clone(), r.multiplicity))
            .collect();
        match self.kind {
            TableKind::RowForm => InvariantTable::row_form(rows, self.columns),
            TableKind::MatrixForm => InvariantTable::matrix_form(rows, self.columns),
        }
    }

    pub fn total_multiplicity(&self) -> usize {
        self.rows.iter().map(|r| r.multiplicity).sum()
    }

    /// Parses the `{(..)_l,...}` form. Entries may themselves be parenthesized ideals.
    pub fn parse(kind: TableKind, text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed invariant table {text:?}"));
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(bad)?;
        let mut rows = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(bad)?;
            let mut depth = 0usize;
            let mut entries = Vec::new();
            let mut start = 0;
            let mut end = None;
            for (i, ch) in rest.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' if depth == 0 => {
                        entries.push(rest[start..i].trim().to_string());
                        end = Some(i);
                        break;
                    }
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        entries.push(rest[start..i].trim().to_string());
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            let end = end.ok_or_else(bad)?;
            rest = rest[end + 1..].strip_prefix('_').ok_or_else(bad)?;
            let digits = rest
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(rest.len());
            let multiplicity: usize = rest[..digits].parse().map_err(|_| bad())?;
            if multiplicity == 0 || (entries.len() > 1 && entries.iter().any(String::is_empty)) {
                return Err(bad());
            }
            rows.push(InvariantRow {
                entries,
                multiplicity,
            });
            rest = rest[digits..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(bad());
                }
            } else if !rest.is_empty() {
                return Err(bad());
            }
        }
        let columns = rows.iter().map(|r| r.entries.len()).max().unwrap_or(0);
        Ok(InvariantTable {
            kind,
            rows,
            columns,
        })
    }
}

impl fmt::Display for InvariantTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({})_{}", row.entries.join(","), row.multiplicity)?;
        }
        write!(f, "}}")
    }
}

impl FromStr for InvariantTable {
    type Err = Error;

    /// Parses a row-form table.
    fn from_str(s: &str) -> Result<Self> {
        InvariantTable::parse(TableKind::RowForm, s)
    }
}

/// Drops trailing `1` entries but keeps one.
pub fn trim_row(mut row: Vec<String>) -> Vec<String> {
    while row.len() > 1 && row[row.len() - 1] == "1" && row[row.len() - 2] == "1" {
        row.pop();
    }
    row
}

fn sl2(p: u64) -> MatrixGroup {
    MatrixGroup::sl(2, p)
}

/// Rows over conjugacy classes of `SL(2;Z_p)` representations, columns over epimorphisms onto `Z_k`,
/// entries `E_d` of the twisted matrix.
pub fn handlebody_invariant(
    pres: &Presentation,
    p: u64,
    k: u64,
    d: usize,
) -> Result<InvariantTable> {
    let group = sl2(p);
    let homs = enumerate_homs(pres, group)?;
    let classes = conjugacy_classes(&homs, group)?;
    let epis = enumerate_epis(pres, k)?
        .into_iter()
        .map(|a| a.with_modulus(p))
        .collect::<Result<Vec<_>>>()?;
    let rows = classes
        .par_iter()
        .map(|class| {
            epis.iter()
                .map(|alpha| {
                    let m = twisted_matrix(pres, alpha, &class.representative)?;
                    Ok(elementary_ideal(&m, d)?.table_entry())
                })
                .collect::<Result<Vec<String>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantTable::matrix_form(rows, epis.len()))
}

/// One row `(E_1, E_2, ..., E_ns)` per conjugacy class of `SL(2;Z_p)` representations,
/// with every generator sent to `t` in `Z_p[t]/(t^k - 1)`.
pub fn surfacelink_invariant(pres: &Presentation, p: u64, k: u64) -> Result<InvariantTable> {
    let target = RingSpec::univariate(p, "t", k)?;
    let alpha = AbelianMap::uniform(pres, vec![1], &target)?;
    let group = sl2(p);
    let homs = enumerate_homs(pres, group)?;
    let classes = conjugacy_classes(&homs, group)?;
    let ns = 2 * pres.generator_count();
    let rows = classes
        .par_iter()
        .map(|class| {
            let m = twisted_matrix(pres, &alpha, &class.representative)?;
            let ideals = elementary_ideals(&m, 1..=ns)?;
            Ok(trim_row(ideals.iter().map(Ideal::table_entry).collect()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantTable::row_form(rows, ns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{free_group, surface_link};
    use proptest::prelude::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn trimming() {
        assert_eq!(
            trim_row(strings(&["0", "1", "1", "1"])),
            strings(&["0", "1"])
        );
        assert_eq!(trim_row(strings(&["1", "1"])), strings(&["1"]));
        assert_eq!(
            trim_row(strings(&["0", "1+t", "1"])),
            strings(&["0", "1+t", "1"])
        );
    }

    #[test]
    fn parse_round_trip() {
        let text = "{(0,1)_4,(0,0,1)_1,(0,1+t,1)_2,(0,0,1+t,1)_1}";
        let t: InvariantTable = text.parse().unwrap();
        assert_eq!(t.to_string(), text);
        assert_eq!(t.canonical(), t);
        let nested = InvariantTable::parse(TableKind::MatrixForm, "{((2,1+t),1)_2}").unwrap();
        assert_eq!(nested.rows[0].entries, strings(&["(2,1+t)", "1"]));
        for bad in ["", "{(0,1)}", "{(0,1)_0}", "{(0,1)_2,}", "(0)_1"] {
            assert!(
                InvariantTable::parse(TableKind::RowForm, bad).is_err(),
                "{bad}"
            );
        }
    }

    #[test]
    fn free_rank_two_handlebody() {
        let t = handlebody_invariant(&free_group(2).unwrap(), 2, 2, 4).unwrap();
        assert_eq!(t.to_string(), "{(1,1,1)_11}");
    }

    #[test]
    fn cyclic_surface_link() {
        let link = surface_link("2_1^-1").unwrap();
        let t = surfacelink_invariant(&link.presentation, 2, 2).unwrap();
        assert_eq!(t.to_string(), "{(1)_1,(1+t,1)_1}");
    }

    #[test]
    fn corrected_entry_differs_from_its_twin() {
        let a = surface_link("9_1^1,-2").unwrap();
        let b = surface_link("8_1^-1,-1").unwrap();
        let ta = surfacelink_invariant(&a.presentation, 2, 2).unwrap();
        let tb = surfacelink_invariant(&b.presentation, 2, 2).unwrap();
        assert_eq!(ta.to_string(), a.invariant);
        assert_eq!(tb.to_string(), b.invariant);
        assert_ne!(ta, tb);
    }

    /// With `x1^3` central, the two non-commuting involution pairs drop out.
    #[test]
    fn ten_three_classes() {
        let link = surface_link("10_3").unwrap();
        let g = MatrixGroup::sl(2, 2);
        let homs = enumerate_homs(&link.presentation, g).unwrap();
        assert_eq!(homs.len(), 6);
        assert!(homs.iter().all(|h| h.image(0) == h.image(1)));
        assert_eq!(conjugacy_classes(&homs, g).unwrap().len(), 3);
        let t = surfacelink_invariant(&link.presentation, 2, 2).unwrap();
        assert_eq!(t.total_multiplicity(), 3);
    }

    proptest! {
        /// The matrix form does not depend on how rows and columns are listed.
        #[test]
        fn matrix_form_is_canonical(
            cells in proptest::collection::vec(0usize..3, 1..=12),
            cols in 1usize..=4,
            seed in any::<u64>(),
        ) {
            let alphabet = ["0", "1+t", "1"];
            let rows: Vec<Vec<String>> = cells
                .chunks(cols)
                .filter(|c| c.len() == cols)
                .map(|c| c.iter().map(|&i| alphabet[i].to_string()).collect())
                .collect();
            prop_assume!(!rows.is_empty());
            let base = InvariantTable::matrix_form(rows.clone(), cols);
            let mut perm: Vec<usize> = (0..cols).collect();
            perm.rotate_left((seed % cols as u64) as usize);
            let mut shuffled: Vec<Vec<String>> =
                rows.iter().map(|r| perm.iter().map(|&c| r[c].clone()).collect()).collect();
            let shift = (seed % shuffled.len() as u64) as usize;
            shuffled.rotate_left(shift);
            shuffled.reverse();
            prop_assert_eq!(&InvariantTable::matrix_form(shuffled, cols), &base);
            prop_assert_eq!(base.total_multiplicity(), rows.len());
        }
    }
}
