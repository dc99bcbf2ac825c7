//! Plain-text renderers for sign grids.
//!
//! All writers stream row by row, so grids near the degree ceiling render
//! without buffering the whole image. Pixels and samples are written one
//! per line, which keeps every line short regardless of grid size.

use std::io::{self, Write};

use crate::audit::{Reference, SignGrid};
use crate::bounds::{bound_values, DegreePair};

/// Writes one CSV row per grid cell, recomputing the bound values.
///
/// Header: `d1,d2,b_dg,b,b_g,sign,magnitude`. Rows are emitted in grid
/// order: `d2` outer, `d1` inner.
pub fn write_grid_csv<W: Write>(grid: &SignGrid, out: &mut W) -> io::Result<()> {
    writeln!(out, "d1,d2,b_dg,b,b_g,sign,magnitude")?;
    for d2 in grid.d_min()..=grid.d_max() {
        for d1 in grid.d_min()..=grid.d_max() {
            let pair = DegreePair::new(d1, d2).expect("degrees are positive");
            let values = bound_values(pair).expect("degree sums are at least 8");
            let cell = grid.cell(d1, d2);
            writeln!(
                out,
                "{d1},{d2},{},{},{},{},{}",
                values.b_dg, values.b, values.b_g, cell.sign, cell.magnitude
            )?;
        }
    }
    Ok(())
}

/// Writes the sign channel as a plain PPM (P3) image.
///
/// Negative cells are blue, zero cells black; positive cells are red when
/// the reference is the unconditional bound and yellow when it is the sharp
/// bound. One pixel per line.
pub fn write_sign_ppm<W: Write>(grid: &SignGrid, out: &mut W) -> io::Result<()> {
    let side = grid.side();
    writeln!(out, "P3")?;
    writeln!(out, "{side} {side}")?;
    writeln!(out, "255")?;
    let positive = match grid.reference() {
        Reference::BDg => "255 0 0",
        Reference::B => "255 255 0",
    };
    for cell in grid.cells() {
        let color = match cell.sign {
            -1 => "0 0 255",
            0 => "0 0 0",
            _ => positive,
        };
        writeln!(out, "{color}")?;
    }
    Ok(())
}

/// Writes the magnitude channel as a plain PGM (P2) image.
///
/// Values are scaled linearly so the largest magnitude maps to 255; an
/// all-zero grid renders all black. One sample per line.
pub fn write_magnitude_pgm<W: Write>(grid: &SignGrid, out: &mut W) -> io::Result<()> {
    let side = grid.side();
    writeln!(out, "P2")?;
    writeln!(out, "{side} {side}")?;
    writeln!(out, "255")?;
    let max = grid.max_magnitude();
    for cell in grid.cells() {
        let value = if max == 0 {
            0
        } else {
            cell.magnitude * 255 / max
        };
        writeln!(out, "{value}")?;
    }
    Ok(())
}
