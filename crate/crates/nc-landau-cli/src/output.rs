//! Exit-code plumbing and table formatting shared by the subcommands.

use nc_landau_core::CoreError;

pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// A command failure carrying its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn validation(message: impl Into<String>) -> Self {
        Self { code: EXIT_VALIDATION, message: message.into() }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Self { code: EXIT_VERIFICATION, message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self { code: EXIT_IO, message: message.into() }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::Io { .. } => EXIT_IO,
            // solver breakdown is not the user's input being invalid: treat
            // it like a verification that could not be passed
            CoreError::NoConvergence(_) | CoreError::Linalg(_) => EXIT_VERIFICATION,
            _ => EXIT_VALIDATION,
        };
        Self { code, message: e.to_string() }
    }
}

pub type CmdResult = Result<(), Failure>;

/// `value` with `precision` significant figures in scientific notation;
/// the default table precision is 4.
pub fn sig(value: f64, precision: usize) -> String {
    format!("{:.*e}", precision.saturating_sub(1), value)
}

/// Left-pads cells so columns line up; the first row is the header.
pub fn render_table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(&" ".repeat(widths[c].saturating_sub(cell.len())));
            line.push_str(cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// One CSV line; cells are numeric or simple labels, so no quoting is
/// needed.
pub fn csv_line(cells: &[String]) -> String {
    cells.join(",")
}

pub fn write_file(path: &std::path::Path, bytes: &[u8]) -> CmdResult {
    std::fs::write(path, bytes)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))
}

pub fn ensure_dir(path: &std::path::Path) -> CmdResult {
    std::fs::create_dir_all(path)
        .map_err(|e| Failure::io(format!("cannot create {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig_fig_formatting_matches_paper_style() {
        assert_eq!(sig(3.34017e-22, 4), "3.340e-22");
        assert_eq!(sig(6.9434e-4, 4), "6.943e-4");
        assert_eq!(sig(1.0, 1), "1e0");
    }

    #[test]
    fn table_columns_align() {
        let rendered = render_table(&[
            vec!["a".into(), "long-header".into()],
            vec!["100".into(), "x".into()],
        ]);
        assert_eq!(rendered, "  a  long-header\n100            x\n");
    }
}
