//! Grid sampling of a tensor surface and CSV / OBJ export.
//!
//! CSV rows are `t,s,x1,x2,x3,x4,constraint,norm` in `%.16e` form (17
//! significant digits). OBJ drops `x4` from the vertex position and keeps it
//! in a `# x4=` comment on the line before each `v`.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::GbcNumber;
use crate::error::{Error, Result};
use crate::surface::TensorSurface;

pub const CSV_HEADER: &str = "t,s,x1,x2,x3,x4,constraint,norm";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeshFormat {
    Csv,
    Obj,
}

impl fmt::Display for MeshFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Obj => "obj",
        })
    }
}

impl FromStr for MeshFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "obj" => Ok(Self::Obj),
            _ => Err(Error::InvalidArgument(format!("unknown mesh format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeshGrid {
    t_range: (f64, f64),
    s_range: (f64, f64),
    nt: usize,
    ns: usize,
}

impl MeshGrid {
    pub fn new(t_range: (f64, f64), s_range: (f64, f64), nt: usize, ns: usize) -> Result<Self> {
        if nt < 2 || ns < 2 {
            return Err(Error::InvalidArgument(format!(
                "mesh needs at least 2x2 samples, got {nt}x{ns}"
            )));
        }
        let ends = [t_range.0, t_range.1, s_range.0, s_range.1];
        if ends.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("mesh range"));
        }
        Ok(Self {
            t_range,
            s_range,
            nt,
            ns,
        })
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn ns(&self) -> usize {
        self.ns
    }

    pub fn vertex_count(&self) -> usize {
        self.nt * self.ns
    }

    pub fn triangle_count(&self) -> usize {
        2 * (self.nt - 1) * (self.ns - 1)
    }

    fn lerp((lo, hi): (f64, f64), i: usize, n: usize) -> f64 {
        lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
    }

    /// Parameters in row-major order, `s` varying fastest.
    pub fn parameters(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        (0..self.nt).flat_map(move |i| {
            let t = Self::lerp(self.t_range, i, self.nt);
            (0..self.ns).map(move |j| (t, Self::lerp(self.s_range, j, self.ns)))
        })
    }

    /// 1-based triangle indices, two per grid quad.
    pub fn triangles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        let ns = self.ns;
        (0..self.nt - 1).flat_map(move |i| {
            (0..ns - 1).flat_map(move |j| {
                let a = i * ns + j + 1;
                let (b, c) = (a + 1, a + ns);
                let d = c + 1;
                [[a, c, d], [a, d, b]]
            })
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeshSample {
    pub t: f64,
    pub s: f64,
    pub point: GbcNumber,
    pub constraint: f64,
    pub norm: f64,
}

pub fn sample(surface: &TensorSurface, grid: &MeshGrid) -> Result<Vec<MeshSample>> {
    let kind = surface.kind();
    let params = surface.params();
    let metric = surface.metric();
    grid.parameters()
        .map(|(t, s)| {
            let point = surface.evaluate(t, s)?;
            Ok(MeshSample {
                t,
                s,
                point,
                constraint: kind.constraint_value(point, params),
                norm: metric.eval(point.coeffs(), point.coeffs()),
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(samples: &[MeshSample], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for m in samples {
        let [x1, x2, x3, x4] = m.point.to_array();
        let row = [m.t, m.s, x1, x2, x3, x4, m.constraint, m.norm];
        let fields: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(w, "{}", fields.join(","))?;
    }
    w.flush()
}

pub fn write_obj<W: Write>(samples: &[MeshSample], grid: &MeshGrid, mut w: W) -> io::Result<()> {
    writeln!(w, "# tensor product surface, {}x{} grid", grid.nt, grid.ns)?;
    for m in samples {
        let [x1, x2, x3, x4] = m.point.to_array();
        writeln!(w, "# x4={x4}")?;
        writeln!(w, "v {x1} {x2} {x3}")?;
    }
    for [a, b, c] in grid.triangles() {
        writeln!(w, "f {a} {b} {c}")?;
    }
    w.flush()
}

/// Samples `surface` on `grid` and writes it to `path`.
pub fn export_mesh(
    surface: &TensorSurface,
    grid: &MeshGrid,
    format: MeshFormat,
    path: &Path,
) -> Result<Vec<MeshSample>> {
    let samples = sample(surface, grid)?;
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = BufWriter::new(File::create(path).map_err(io_err)?);
    match format {
        MeshFormat::Csv => write_csv(&samples, file),
        MeshFormat::Obj => write_obj(&samples, grid, file),
    }
    .map_err(io_err)?;
    Ok(samples)
}
