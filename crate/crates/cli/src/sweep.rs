use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use faddeyeva::{faddeyeva, AccuracyControl, Error};
use rayon::prelude::*;

use crate::{sci, CliError, GridSpec};

pub const GRID_HEADER: &str = "x,y,V,L,status";

/// One CSV record; points outside the representable range keep their place
/// with NaN values and status `overflow`.
fn record(x: f64, y: f64, ctl: &AccuracyControl) -> Result<String, CliError> {
    let z = faddeyeva::ComplexPoint::new(x, y);
    let (v, l, status) = match faddeyeva(z, ctl) {
        Ok(w) => (sci(w.v), sci(w.l), "ok"),
        Err(Error::OverflowDomain { .. }) => ("NaN".into(), "NaN".into(), "overflow"),
        Err(e) => return Err(e.into()),
    };
    Ok(format!("{},{},{v},{l},{status}\n", sci(x), sci(y)))
}

/// Writes the header and one record per grid point, `y` outer and `x`
/// inner. Rows are computed in parallel one `y` slice at a time.
pub fn write_grid<W: Write>(
    grid: &GridSpec,
    ctl: &AccuracyControl,
    out: &mut W,
) -> Result<(), CliError> {
    writeln!(out, "{GRID_HEADER}")?;
    let xs = grid.xs();
    for y in grid.ys() {
        let rows: Vec<String> = xs
            .par_iter()
            .map(|&x| record(x, y, ctl))
            .collect::<Result<_, _>>()?;
        for r in rows {
            out.write_all(r.as_bytes())?;
        }
    }
    out.flush()?;
    Ok(())
}

/// [`write_grid`] into a new file at `path`.
pub fn cmd_grid(grid: &GridSpec, ctl: &AccuracyControl, path: &Path) -> Result<(), CliError> {
    let mut out = BufWriter::new(File::create(path)?);
    write_grid(grid, ctl, &mut out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::control_for;

    fn render(grid: &GridSpec) -> String {
        let mut buf = Vec::new();
        write_grid(grid, &control_for(None), &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn parity_across_the_axis() {
        let text = render(&"-1:1:3,0:0:1".parse().unwrap());
        let rows: Vec<Vec<&str>> = text
            .lines()
            .skip(1)
            .map(|l| l.split(',').collect())
            .collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0][2], rows[2][2]);
        let l0: f64 = rows[0][3].parse().unwrap();
        let l2: f64 = rows[2][3].parse().unwrap();
        assert_eq!(l0, -l2);
        assert!(rows.iter().all(|r| r[4] == "ok"));
    }

    #[test]
    fn header_and_single_point() {
        let text = render(&"630:630:1,-2:-2:1".parse().unwrap());
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(GRID_HEADER));
        let v: f64 = lines
            .next()
            .unwrap()
            .split(',')
            .nth(2)
            .unwrap()
            .parse()
            .unwrap();
        assert!(((v - 1.421495882224241e-8) / v).abs() < 1e-14);
    }
}
