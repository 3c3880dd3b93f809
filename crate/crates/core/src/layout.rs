//! Two-sublattice planar pictures of square-block hyperbicycle codes.
//!
//! Sublattice 1 holds the qubits of `E ⊗ H1` (rows `y`, columns `c n1`
//! split into `c` blocks); sublattice 2 holds those of `H2 ⊗ E`, drawn with
//! the same block split. Cells are marked with the first X and Z
//! generators, their overlap, and the logical region.

use std::fmt::Write as _;

use crate::construct::{hyperbicycle, HyperbicycleSpec};
use crate::distance::logical_operators;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Empty,
    X,
    Z,
    Overlap,
    Region,
}

impl Cell {
    fn glyph(self) -> char {
        match self {
            Cell::Empty => '.',
            Cell::X => 'x',
            Cell::Z => 'z',
            Cell::Overlap => 'o',
            Cell::Region => '#',
        }
    }

    fn class(self) -> &'static str {
        match self {
            Cell::Empty => "empty",
            Cell::X => "x",
            Cell::Z => "z",
            Cell::Overlap => "overlap",
            Cell::Region => "region",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Panel {
    pub rows: usize,
    pub block_width: usize,
    pub cells: Vec<Vec<Cell>>,
}

#[derive(Clone, Debug)]
pub struct Layout {
    pub c: usize,
    pub chi: usize,
    pub panels: [Panel; 2],
    pub region_size: usize,
}

/// Builds the picture; only square blocks share one grid shape.
pub fn layout(spec: &HyperbicycleSpec) -> Result<Layout> {
    if !spec.is_square() {
        return Err(Error::Invalid(
            "layout needs square blocks: non-square sublattices would need two separate rectangles".into(),
        ));
    }
    let (m1, _, m2, _) = spec.validate()?;
    let c = spec.c;
    let code = hyperbicycle(spec)?;
    let n = code.n();
    let mut marks = vec![Cell::Empty; n];
    let region = if code.k() > 0 { logical_operators(&code, Some(spec))?.region } else { Vec::new() };
    for &q in &region {
        marks[q] = Cell::Region;
    }
    let x = if code.gx.rows() > 0 { code.gx.row_vec(0).support() } else { Vec::new() };
    let z = if code.gz.rows() > 0 { code.gz.row_vec(0).support() } else { Vec::new() };
    for &q in &x {
        marks[q] = Cell::X;
    }
    for &q in &z {
        marks[q] = if marks[q] == Cell::X { Cell::Overlap } else { Cell::Z };
    }
    let len_a = m2 * c * m1;
    // Sublattice 1: index y (c m1) + j, block j / m1.
    let p1 = Panel {
        rows: m2,
        block_width: m1,
        cells: (0..m2).map(|y| (0..c * m1).map(|j| marks[y * c * m1 + j]).collect()).collect(),
    };
    // Sublattice 2: index (j c + kappa) m1 + q; drawn with rows q and
    // columns kappa m2 + j.
    let p2 = Panel {
        rows: m1,
        block_width: m2,
        cells: (0..m1)
            .map(|q| {
                (0..c * m2)
                    .map(|col| {
                        let (kappa, j) = (col / m2, col % m2);
                        marks[len_a + (j * c + kappa) * m1 + q]
                    })
                    .collect()
            })
            .collect(),
    };
    Ok(Layout {
        c,
        chi: spec.chi,
        panels: [p1, p2],
        region_size: region.len(),
    })
}

impl Layout {
    pub fn to_txt(&self) -> String {
        let mut out = String::new();
        writeln!(out, "c = {}, chi = {}: periodic horizontally, vertical boundary shifted by {} blocks", self.c, self.chi, self.chi).unwrap();
        writeln!(out, "x/z: first X/Z generator, o: overlap, #: logical region ({} qubits)", self.region_size).unwrap();
        for (i, p) in self.panels.iter().enumerate() {
            writeln!(out, "sublattice {}", i + 1).unwrap();
            let arrows: String = (0..self.c)
                .map(|b| format!("{:<w$}", format!("v{}", (b + self.chi) % self.c), w = p.block_width + 1))
                .collect();
            writeln!(out, "{}", arrows.trim_end()).unwrap();
            for row in &p.cells {
                let line: Vec<String> = row
                    .chunks(p.block_width)
                    .map(|blk| blk.iter().map(|c| c.glyph()).collect())
                    .collect();
                writeln!(out, "{}", line.join("|")).unwrap();
            }
        }
        out
    }

    pub fn to_svg(&self) -> String {
        let s = 12;
        let gap = 2 * s;
        let width = self.panels.iter().map(|p| p.cells.first().map_or(0, Vec::len)).max().unwrap_or(0) * s + 2 * s;
        let height: usize = self.panels.iter().map(|p| p.rows * s + gap + s).sum::<usize>() + s;
        let mut out = String::new();
        writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">"#).unwrap();
        out.push_str(
            "<style>.empty{fill:#fff}.x{fill:#d62728}.z{fill:#1f77b4}.overlap{fill:#2ca02c}\
             .region{fill:#bbb}rect{stroke:#999;stroke-width:0.5}.block{stroke:#000;stroke-width:1.5}\
             .arrow{stroke:#000;fill:none;marker-end:url(#head)}</style>\n",
        );
        out.push_str(
            r#"<defs><marker id="head" markerWidth="6" markerHeight="6" refX="5" refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z"/></marker></defs>"#,
        );
        out.push('\n');
        let mut top = s;
        for p in &self.panels {
            // Arrow from each block's lower edge to the block its boundary
            // wraps onto.
            for b in 0..self.c {
                let x0 = s + b * p.block_width * s + p.block_width * s / 2;
                let x1 = s + ((b + self.chi) % self.c) * p.block_width * s + p.block_width * s / 2;
                writeln!(
                    out,
                    r#"<path class="arrow" d="M{x0},{} L{x1},{}"/>"#,
                    top + p.rows * s + s / 2,
                    top + p.rows * s + gap - 2
                )
                .unwrap();
            }
            for (y, row) in p.cells.iter().enumerate() {
                for (x, cell) in row.iter().enumerate() {
                    writeln!(
                        out,
                        r#"<rect class="{}" x="{}" y="{}" width="{s}" height="{s}"/>"#,
                        cell.class(),
                        s + x * s,
                        top + y * s
                    )
                    .unwrap();
                }
            }
            for b in 1..self.c {
                let x = s + b * p.block_width * s;
                writeln!(out, r#"<line class="block" x1="{x}" y1="{top}" x2="{x}" y2="{}"/>"#, top + p.rows * s).unwrap();
            }
            top += p.rows * s + gap + s;
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::circulant_spec;
    use crate::gf2::BinMat;
    use crate::poly::BinPoly;

    #[test]
    fn rotated_toric_grid() {
        let spec = circulant_spec(3, 5, 3, &"1+x".parse().unwrap(), &"1+x".parse().unwrap()).unwrap();
        let l = layout(&spec).unwrap();
        assert_eq!(l.region_size, 2);
        let txt = l.to_txt();
        assert!(txt.contains("shifted by 3 blocks"));
        assert_eq!(l.panels[0].cells[0].len(), 15);
        assert!(l.to_svg().contains("class=\"arrow\""));
    }

    #[test]
    fn single_block_and_rejection() {
        let one = BinMat::identity(1);
        let spec = HyperbicycleSpec::new(1, 1, vec![one.clone()], vec![one]).unwrap();
        let l = layout(&spec).unwrap();
        assert_eq!(l.panels[0].cells.len(), 1);
        let rect = circulant_spec(3, 1, 1, &BinPoly::one(), &BinPoly::one()).unwrap();
        assert!(layout(&rect).is_ok());
        let a = BinMat::from_strs(&["110", "011"]).unwrap();
        let spec = HyperbicycleSpec::new(1, 1, vec![a.clone()], vec![a]).unwrap();
        assert!(layout(&spec).is_err());
    }
}
