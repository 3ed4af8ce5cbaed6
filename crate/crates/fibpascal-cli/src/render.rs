//! Deterministic ASCII and SVG triangle renderers.
//!
//! ASCII novel mode uses one glyph per cell: '#' (+1), '+' (+½), '-' (−½),
//! '=' (−1), '.' (zero). ASCII classical mode labels shallow diagonals
//! with digits cycling 0–9. SVG uses one group per row, one rect per cell
//! (24-unit pitch), and the fill classes w_pos1 / w_poshalf / w_neghalf /
//! w_neg1 / w_zero (novel) or diag0..diag9 (classical). No timestamps, no
//! randomness: identical arguments give identical bytes.

use fibpascal::{classify_weight, rows, BigInt, HalfRational};

use crate::{CmdError, RenderFormat, RenderMode};

pub struct RenderSpec {
    mode: RenderMode,
    k: u64,
    rows: u64,
    format: RenderFormat,
    cell_numbers: bool,
}

impl RenderSpec {
    pub fn from_args(
        mode: RenderMode,
        k: Option<u64>,
        rows: u64,
        format: RenderFormat,
        cell_numbers: bool,
    ) -> Result<Self, CmdError> {
        if rows < 1 {
            return Err(CmdError::usage("--rows must be at least 1"));
        }
        let k = match mode {
            RenderMode::Novel => {
                let k = k.ok_or_else(|| CmdError::usage("--k is required in novel mode"))?;
                if rows < k + 2 {
                    return Err(CmdError::usage(format!(
                        "novel mode needs --rows of at least {}, got {rows}",
                        k + 2
                    )));
                }
                k
            }
            RenderMode::Classical => k.unwrap_or(rows),
        };
        Ok(RenderSpec { mode, k, rows, format, cell_numbers })
    }
}

pub fn cmd_render(spec: &RenderSpec, max_rows: u64) -> Result<String, CmdError> {
    if spec.rows > max_rows {
        return Err(CmdError::usage(format!(
            "--rows {} exceeds --max-rows {max_rows}",
            spec.rows
        )));
    }
    match spec.format {
        RenderFormat::Ascii => {
            if spec.cell_numbers {
                Ok(ascii_numbers(spec))
            } else {
                Ok(ascii_glyphs(spec))
            }
        }
        RenderFormat::Svg => Ok(svg(spec)),
    }
}

fn weight_at(spec: &RenderSpec, r: u64, c: u64) -> HalfRational {
    if spec.mode == RenderMode::Novel && (r == spec.k || r == spec.k + 1) {
        classify_weight(spec.k, r, c).expect("cell inside pattern rows")
    } else {
        HalfRational::zero()
    }
}

fn glyph(w: &HalfRational) -> char {
    let twice: i64 = match w.twice_value().try_into() {
        Ok(v) => v,
        Err(_) => unreachable!("pattern weights are tiny"),
    };
    match twice {
        2 => '#',
        1 => '+',
        -1 => '-',
        -2 => '=',
        _ => '.',
    }
}

fn ascii_glyphs(spec: &RenderSpec) -> String {
    let mut out = String::new();
    for r in 0..spec.rows {
        for _ in 0..(spec.rows - 1 - r) {
            out.push(' ');
        }
        for c in 0..=r {
            if c > 0 {
                out.push(' ');
            }
            let ch = match spec.mode {
                RenderMode::Novel => glyph(&weight_at(spec, r, c)),
                RenderMode::Classical => {
                    char::from_digit(((r + c) % 10) as u32, 10).expect("single digit")
                }
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}

/// Collect the binomial values for the first `rows` rows.
fn triangle_values(row_count: u64) -> Vec<Vec<BigInt>> {
    rows()
        .take(row_count as usize)
        .map(|row| row.entries().to_vec())
        .collect()
}

fn ascii_numbers(spec: &RenderSpec) -> String {
    let values = triangle_values(spec.rows);
    let width = values
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for r in 0..spec.rows {
        let indent = ((spec.rows - 1 - r) as usize * (width + 1)) / 2;
        for _ in 0..indent {
            out.push(' ');
        }
        let mut line = String::new();
        for c in 0..=r {
            if c > 0 {
                line.push(' ');
            }
            let show = match spec.mode {
                RenderMode::Classical => true,
                // In novel mode only the weighted cells carry values.
                RenderMode::Novel => !weight_at(spec, r, c).is_zero(),
            };
            if show {
                line.push_str(&format!(
                    "{:>width$}",
                    values[r as usize][c as usize].to_string()
                ));
            } else {
                line.push_str(&format!("{:>width$}", "."));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn weight_class(w: &HalfRational) -> &'static str {
    let twice: i64 = w.twice_value().try_into().unwrap_or(0);
    match twice {
        2 => "w_pos1",
        1 => "w_poshalf",
        -1 => "w_neghalf",
        -2 => "w_neg1",
        _ => "w_zero",
    }
}

const SVG_STYLE: &str = concat!(
    ".cell{stroke:#666666;stroke-width:1}",
    ".w_pos1{fill:#1f6fb2}.w_poshalf{fill:#8ab8d8}",
    ".w_neghalf{fill:#f0a868}.w_neg1{fill:#d45500}.w_zero{fill:#ebebeb}",
    ".diag0{fill:#a6cee3}.diag1{fill:#1f78b4}.diag2{fill:#b2df8a}",
    ".diag3{fill:#33a02c}.diag4{fill:#fb9a99}.diag5{fill:#e31a1c}",
    ".diag6{fill:#fdbf6f}.diag7{fill:#ff7f00}.diag8{fill:#cab2d6}",
    ".diag9{fill:#6a3d9a}",
    ".num{font-family:monospace;font-size:9px;text-anchor:middle;fill:#111111}",
);

fn svg(spec: &RenderSpec) -> String {
    let size = spec.rows * 24;
    let values = if spec.cell_numbers {
        triangle_values(spec.rows)
    } else {
        Vec::new()
    };
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!("<style>{SVG_STYLE}</style>\n"));
    for r in 0..spec.rows {
        out.push_str(&format!("<g id=\"row{r}\">\n"));
        for c in 0..=r {
            let center_x = 12 * (spec.rows as i64 + 2 * c as i64 - r as i64);
            let x = center_x - 11;
            let y = 24 * r + 1;
            let class = match spec.mode {
                RenderMode::Novel => weight_class(&weight_at(spec, r, c)).to_string(),
                RenderMode::Classical => format!("diag{}", (r + c) % 10),
            };
            out.push_str(&format!(
                "<rect class=\"cell {class}\" x=\"{x}\" y=\"{y}\" width=\"22\" height=\"22\"/>\n"
            ));
            if spec.cell_numbers {
                let value = values[r as usize][c as usize].to_string();
                if value.len() <= 4 {
                    let ty = 24 * r + 16;
                    out.push_str(&format!(
                        "<text class=\"num\" x=\"{center_x}\" y=\"{ty}\">{value}</text>\n"
                    ));
                }
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
