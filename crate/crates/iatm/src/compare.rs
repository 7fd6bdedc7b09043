//! Cell-by-cell comparison of computed error tables against printed ones.

use std::fmt;

use iatm_core::SchemeChoice;

use crate::{ErrorTableRow, HarnessError, PaperFixture, ProblemId};

/// Errors below this are at double-precision resolution of the evaluation.
pub const FLOOR: f64 = 1e-15;

/// Half a unit in the ninth decimal, the printed precision of the value
/// columns.
pub const PRINTED_HALF_UNIT: f64 = 5e-10;

/// How printed iteration labels map to partial sums: label `k` is `S_{k+offset}`.
///
/// The published tables do not define "k-th iteration"; the comparator
/// picks the offset whose errors sit closest (in log ratio) to the print.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alignment {
    pub offset: isize,
}

impl Alignment {
    pub fn partial_sum(self, label: usize) -> Option<usize> {
        usize::try_from(label as isize + self.offset).ok()
    }
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.offset {
            0 => write!(f, "iteration k = S_k"),
            o if o < 0 => write!(f, "iteration k = S_(k-{})", -o),
            o => write!(f, "iteration k = S_(k+{o})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellVerdict {
    pub row: usize,
    pub t: f64,
    pub x: f64,
    pub iteration: usize,
    pub partial_sum: usize,
    pub ours: f64,
    pub printed: f64,
    /// `ours / printed`
    pub ratio: f64,
    pub at_floor: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub problem: ProblemId,
    pub scheme: SchemeChoice,
    pub factor: f64,
    pub alignment: Alignment,
    /// Mean absolute log ratio for every admissible alignment.
    pub alignment_scores: Vec<(Alignment, f64)>,
    pub cells: Vec<CellVerdict>,
    /// Rows whose highest partial sum differs from the printed approximate
    /// value by more than the printed precision.
    pub approximate_mismatches: Vec<usize>,
    /// Same for the exact column, skipping rows flagged anomalous.
    pub exact_mismatches: Vec<usize>,
}

impl ComparisonReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellVerdict> {
        self.cells.iter().filter(|c| !c.pass)
    }

    /// Largest `ours / printed` over cells not at the floor.
    pub fn max_ratio(&self) -> f64 {
        self.cells
            .iter()
            .filter(|c| !c.at_floor)
            .map(|c| c.ratio)
            .fold(0.0, f64::max)
    }

    pub fn cells_for(&self, iteration: usize) -> impl Iterator<Item = &CellVerdict> {
        self.cells.iter().filter(move |c| c.iteration == iteration)
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} / {}: alignment {} (factor {})",
            self.problem, self.scheme, self.alignment, self.factor
        )?;
        for (a, s) in &self.alignment_scores {
            writeln!(f, "  score {a}: {s:.3}")?;
        }
        writeln!(f, "  {:>6} {:>4} {:>4} {:>11} {:>11} {:>9}  verdict", "t", "x", "iter", "ours", "printed", "ratio")?;
        for c in &self.cells {
            writeln!(
                f,
                "  {:>6} {:>4} {:>4} {:>11.3e} {:>11.3e} {:>9.3}  {}{}",
                c.t,
                c.x,
                c.iteration,
                c.ours,
                c.printed,
                c.ratio,
                if c.pass { "PASS" } else { "FAIL" },
                if c.at_floor { " (floor)" } else { "" }
            )?;
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "  {} of {} cells pass; max ratio {:.3}",
            self.cells.len() - failed,
            self.cells.len(),
            self.max_ratio()
        )?;
        writeln!(
            f,
            "  approximate column: {} row(s) differ beyond printed precision {:?}",
            self.approximate_mismatches.len(),
            self.approximate_mismatches
        )?;
        write!(
            f,
            "  exact column: {} row(s) differ beyond printed precision {:?}",
            self.exact_mismatches.len(),
            self.exact_mismatches
        )
    }
}

fn log_gap(ours: f64, printed: f64) -> f64 {
    (ours.max(FLOOR) / printed.max(FLOOR)).ln().abs()
}

fn verdict(ours: f64, printed: f64, factor: f64) -> (bool, bool) {
    let at_floor = printed < FLOOR;
    let pass = ours <= factor * printed || (at_floor && ours < 10.0 * FLOOR);
    (at_floor, pass)
}

/// Compares computed rows (from [`crate::error_table`]) against a fixture.
///
/// A cell passes when our error is at most `factor` times the printed one,
/// or when the printed value is below [`FLOOR`] and ours is below
/// `10 * FLOOR`.
pub fn compare_to_fixture(
    rows: &[ErrorTableRow],
    fixture: &PaperFixture,
    factor: f64,
) -> Result<ComparisonReport, HarnessError> {
    if rows.len() != fixture.rows.len() {
        return Err(HarnessError::GridMismatch(format!(
            "{} computed rows, {} printed",
            rows.len(),
            fixture.rows.len()
        )));
    }
    for (i, (r, p)) in rows.iter().zip(&fixture.rows).enumerate() {
        if (r.t - p.t).abs() > 1e-12 || (r.x - p.x).abs() > 1e-12 {
            return Err(HarnessError::GridMismatch(format!(
                "row {i}: computed ({}, {}), printed ({}, {})",
                r.t, r.x, p.t, p.x
            )));
        }
    }
    let available = rows
        .iter()
        .map(|r| r.abs_error_per_iteration.len())
        .min()
        .unwrap_or(0);

    let mut scores = Vec::new();
    for offset in [0, -1, 1] {
        let a = Alignment { offset };
        let fits = fixture
            .iterations
            .iter()
            .all(|&k| a.partial_sum(k).is_some_and(|s| s < available));
        if !fits {
            continue;
        }
        let mut total = 0.0;
        let mut n = 0usize;
        for (r, p) in rows.iter().zip(&fixture.rows) {
            for (&k, &printed) in fixture.iterations.iter().zip(&p.errors) {
                let s = a.partial_sum(k).unwrap_or_default();
                total += log_gap(r.abs_error_per_iteration[s], printed);
                n += 1;
            }
        }
        scores.push((a, if n == 0 { 0.0 } else { total / n as f64 }));
    }
    // ties keep the earlier (unshifted) candidate
    let alignment = scores
        .iter()
        .fold(None::<(Alignment, f64)>, |best, &(a, s)| match best {
            Some((_, bs)) if bs <= s => best,
            _ => Some((a, s)),
        })
        .map(|(a, _)| a)
        .ok_or_else(|| {
            HarnessError::GridMismatch(format!(
                "{available} partial sums cannot cover iterations {:?}",
                fixture.iterations
            ))
        })?;

    let mut cells = Vec::new();
    for (i, (r, p)) in rows.iter().zip(&fixture.rows).enumerate() {
        for (&k, &printed) in fixture.iterations.iter().zip(&p.errors) {
            let s = alignment.partial_sum(k).unwrap_or_default();
            let ours = r.abs_error_per_iteration[s];
            let (at_floor, pass) = verdict(ours, printed, factor);
            cells.push(CellVerdict {
                row: i,
                t: r.t,
                x: r.x,
                iteration: k,
                partial_sum: s,
                ours,
                printed,
                ratio: ours / printed,
                at_floor,
                pass,
            });
        }
    }

    let differs = |ours: f64, printed: f64| (ours - printed).abs() > PRINTED_HALF_UNIT + 1e-15;
    let approximate_mismatches = rows
        .iter()
        .zip(&fixture.rows)
        .enumerate()
        .filter(|(_, (r, p))| differs(r.approximate, p.approximate))
        .map(|(i, _)| i)
        .collect();
    let exact_mismatches = rows
        .iter()
        .zip(&fixture.rows)
        .enumerate()
        .filter(|(_, (r, p))| !p.anomalous && differs(r.exact, p.exact))
        .map(|(i, _)| i)
        .collect();

    Ok(ComparisonReport {
        problem: fixture.problem,
        scheme: fixture.scheme,
        factor,
        alignment,
        alignment_scores: scores,
        cells,
        approximate_mismatches,
        exact_mismatches,
    })
}
