//! End-to-end pipelines and the reports printed by the command-line tool.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    is_compatible_order, AlgebraError, Characteristic, Coefficient, Fp, MonomialOrder, OrderKind,
    PrimeField, Rational, VarContext,
};
use crate::ideal::{
    buchberger_with, initial_ideal, join_meet_ideal, GroebnerError, GroebnerOptions,
    GroebnerReport, MonomialIdeal,
};
use crate::lattice::{CoverFile, CrystalParams, FiniteLattice, LatticeError};
use crate::resolution::{
    graded_betti_hochster, graded_betti_taylor, BettiOptions, BettiTable, DegreeSupport,
    ResolutionError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("lattice stage: {0}")]
    Lattice(#[from] LatticeError),
    #[error("field setup: {0}")]
    Field(#[from] AlgebraError),
    #[error("order stage: {order} is not compatible with {params}; pass --allow-incompatible to run anyway")]
    IncompatibleOrder { order: OrderKind, params: String },
    #[error("groebner stage: {0}")]
    Groebner(#[from] GroebnerError),
    #[error("betti stage: {0}")]
    Resolution(#[from] ResolutionError),
}

impl PipelineError {
    /// Errors raised by a size guard rather than by bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            PipelineError::Groebner(GroebnerError::Cancelled { .. })
                | PipelineError::Resolution(
                    ResolutionError::TooManyGenerators { .. }
                        | ResolutionError::TooManyFaces { .. }
                        | ResolutionError::TooManyVariables { .. }
                )
        )
    }
}

/// Which Betti algorithm a pipeline ends with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    #[default]
    Hochster,
    Taylor,
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hochster" => Ok(Route::Hochster),
            "taylor" => Ok(Route::Taylor),
            _ => Err(format!("unknown route `{s}` (expected hochster or taylor)")),
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Route::Hochster => "hochster",
            Route::Taylor => "taylor",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(format!("unknown format `{s}` (expected text, json or csv)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub order: OrderKind,
    pub characteristic: Characteristic,
    /// Run Buchberger even when the order does not lead with `ab`.
    pub allow_incompatible: bool,
    pub groebner: GroebnerOptions,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            order: OrderKind::DegRevLex,
            characteristic: Characteristic::Zero,
            allow_incompatible: false,
            groebner: GroebnerOptions::default(),
        }
    }
}

/// Result of crystal → join-meet ideal → Gröbner basis → initial ideal.
#[derive(Debug, Clone)]
pub struct GroebnerOutcome {
    pub params: CrystalParams,
    pub lattice: FiniteLattice,
    pub order: MonomialOrder,
    pub report: GroebnerReport,
    pub initial: MonomialIdeal,
}

pub fn groebner_pipeline(
    params: &CrystalParams,
    options: &PipelineOptions,
) -> Result<GroebnerOutcome, PipelineError> {
    let lattice = FiniteLattice::crystal(params);
    let order = MonomialOrder::new(options.order, VarContext::from_lattice(&lattice));
    if !options.allow_incompatible && !is_compatible_order(&lattice, &order) {
        return Err(PipelineError::IncompatibleOrder {
            order: options.order,
            params: params.to_string(),
        });
    }
    let (report, initial) = match options.characteristic {
        Characteristic::Zero => groebner_over::<Rational>(&lattice, &order, &(), options.groebner)?,
        Characteristic::Prime(p) => {
            let field = PrimeField::new(p)?;
            groebner_over::<Fp>(&lattice, &order, &field, options.groebner)?
        }
    };
    Ok(GroebnerOutcome {
        params: params.clone(),
        lattice,
        order,
        report,
        initial,
    })
}

fn groebner_over<C: Coefficient>(
    lattice: &FiniteLattice,
    order: &MonomialOrder,
    field: &C::Field,
    options: GroebnerOptions,
) -> Result<(GroebnerReport, MonomialIdeal), GroebnerError> {
    let gens = join_meet_ideal::<C>(lattice, field);
    let basis = buchberger_with(&gens.gens, order, options)?;
    let initial = initial_ideal(&basis, order);
    Ok((GroebnerReport::new(&basis, &initial, order), initial))
}

pub fn betti_of(
    ideal: &MonomialIdeal,
    route: Route,
    options: &BettiOptions,
) -> Result<BettiTable, ResolutionError> {
    match route {
        Route::Hochster => graded_betti_hochster(ideal, options),
        Route::Taylor => graded_betti_taylor(ideal, options),
    }
}

/// Full pipeline ending in a Betti table of `R/in(I)`.
pub fn betti_pipeline(
    params: &CrystalParams,
    options: &PipelineOptions,
    route: Route,
    betti: &BettiOptions,
) -> Result<(GroebnerOutcome, BettiTable), PipelineError> {
    let outcome = groebner_pipeline(params, options)?;
    let table = betti_of(&outcome.initial, route, betti)?;
    Ok((outcome, table))
}

/// The two closed-form families being checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// `L_2(n1, 1)`
    One,
    /// `L_2(n1, 2)`
    Two,
}

impl Theorem {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Theorem::One),
            2 => Some(Theorem::Two),
            _ => None,
        }
    }

    pub fn n2(self) -> usize {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
        }
    }

    /// `(quantity, value)` pairs: the two row totals and the graded split.
    pub fn formulas(self, n1: usize) -> Vec<(&'static str, u64)> {
        let n = n1 as u64;
        let c2 = |m: u64| m * m.saturating_sub(1) / 2;
        match self {
            Theorem::One => vec![
                ("sum_B1", 2 * n - 1),
                ("sum_B2", n * (n - 1)),
                ("B1,2", n),
                ("B1,3", n - 1),
                ("B2,3", c2(n)),
                ("B2,4", c2(n - 1) + n - 1),
            ],
            Theorem::Two => vec![
                ("sum_B1", 3 * n),
                ("sum_B2", n * (n + 1) - 1),
                ("B1,2", 2 * n),
                ("B1,3", n),
                ("B2,3", 2 * c2(n) + n),
                ("B2,4", c2(n - 1) + 3 * n - 2),
            ],
        }
    }
}

/// Value of `quantity` (as named in [`Theorem::formulas`]) in `table`.
pub fn table_quantity(table: &BettiTable, quantity: &str) -> u64 {
    match quantity {
        "sum_B1" => table.total(1),
        "sum_B2" => table.total(2),
        "B1,2" => table.get(1, 2),
        "B1,3" => table.get(1, 3),
        "B2,3" => table.get(2, 3),
        "B2,4" => table.get(2, 4),
        _ => panic!("unknown quantity {quantity}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRow {
    pub n1: usize,
    pub n2: usize,
    pub quantity: String,
    pub computed: u64,
    pub formula: u64,
    pub pass: bool,
}

impl VerificationRow {
    pub fn new(n1: usize, n2: usize, quantity: &str, computed: u64, formula: u64) -> Self {
        VerificationRow {
            n1,
            n2,
            quantity: quantity.to_string(),
            computed,
            formula,
            pass: computed == formula,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub route: Route,
    pub characteristic: Characteristic,
    /// Hochster support; `None` picks [`default_support`] per `n1`.
    pub support: Option<DegreeSupport>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            route: Route::Hochster,
            characteristic: Characteristic::Zero,
            support: None,
        }
    }
}

/// Visit the whole lcm lattice while it stays small, and only lcms of at most
/// two generators beyond that.
pub fn default_support(n1: usize) -> DegreeSupport {
    if n1 <= 12 {
        DegreeSupport::LcmLattice
    } else {
        DegreeSupport::BoundedLcms
    }
}

/// Rows 0 to 2 of the Betti table of `R/in(I)` for `L_2(n1, n2)`.
pub fn low_rows(
    n1: usize,
    n2: usize,
    options: &VerifyOptions,
) -> Result<BettiTable, PipelineError> {
    let params = CrystalParams::two_chains(n1, n2)?;
    let pipeline = PipelineOptions {
        characteristic: options.characteristic,
        ..PipelineOptions::default()
    };
    let betti = BettiOptions::rows(options.characteristic, 2)
        .with_support(options.support.unwrap_or_else(|| default_support(n1)));
    Ok(betti_pipeline(&params, &pipeline, options.route, &betti)?.1)
}

/// One row per quantity per `n1`, sorted by `n1`.
pub fn verify_theorem(
    theorem: Theorem,
    n1s: impl IntoIterator<Item = usize>,
    options: &VerifyOptions,
) -> Result<Vec<VerificationRow>, PipelineError> {
    let n1s: Vec<usize> = n1s.into_iter().collect();
    let per_n: Vec<Vec<VerificationRow>> = n1s
        .par_iter()
        .map(|&n1| {
            let table = low_rows(n1, theorem.n2(), options)?;
            Ok(theorem
                .formulas(n1)
                .into_iter()
                .map(|(q, f)| {
                    VerificationRow::new(n1, theorem.n2(), q, table_quantity(&table, q), f)
                })
                .collect())
        })
        .collect::<Result<_, PipelineError>>()?;
    Ok(per_n.into_iter().flatten().collect())
}

pub fn render_verification(rows: &[VerificationRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        OutputFormat::Csv => {
            let mut out = String::from("n1,n2,quantity,computed,formula,pass\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.n1, r.n2, r.quantity, r.computed, r.formula, r.pass
                );
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "{:>4} {:>4} {:<8} {:>10} {:>10}  {}\n",
                "n1", "n2", "quantity", "computed", "formula", "status"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>4} {:>4} {:<8} {:>10} {:>10}  {}",
                    r.n1,
                    r.n2,
                    r.quantity,
                    r.computed,
                    r.formula,
                    if r.pass { "ok" } else { "MISMATCH" }
                );
            }
            out
        }
    }
}

/// `n1` values of the printed first-Betti table; 13 is absent there.
pub const TABLE1_N1: [usize; 18] = [
    2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19, 20,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub n1: usize,
    /// `ΣB_1` for `L_2(n1, 1)`.
    pub b_n1_1: u64,
    /// `ΣB_1` for `L_2(n1, 2)`.
    pub b_n1_2: u64,
}

/// First Betti totals, read off the minimal generators of the computed
/// initial ideals. `fill_gaps` adds the missing `n1 = 13` row.
pub fn table1(fill_gaps: bool, options: &PipelineOptions) -> Result<Vec<Table1Row>, PipelineError> {
    let mut n1s = TABLE1_N1.to_vec();
    if fill_gaps {
        n1s.push(13);
        n1s.sort_unstable();
    }
    n1s.par_iter()
        .map(|&n1| {
            let count = |n2| -> Result<u64, PipelineError> {
                let params = CrystalParams::two_chains(n1, n2)?;
                Ok(groebner_pipeline(&params, options)?.initial.len() as u64)
            };
            Ok(Table1Row {
                n1,
                b_n1_1: count(1)?,
                b_n1_2: count(2)?,
            })
        })
        .collect()
}

pub fn render_table1(rows: &[Table1Row], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        OutputFormat::Csv => {
            let mut out = String::from("n1,b_n1_1,b_n1_2\n");
            for r in rows {
                let _ = writeln!(out, "{},{},{}", r.n1, r.b_n1_1, r.b_n1_2);
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("{:>4} {:>9} {:>9}\n", "n1", "B(n1,1)", "B(n1,2)");
            for r in rows {
                let _ = writeln!(out, "{:>4} {:>9} {:>9}", r.n1, r.b_n1_1, r.b_n1_2);
            }
            out
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureRow {
    pub n1: usize,
    pub total_b2_computed: u64,
    pub total_b2_formula: u64,
}

/// `ΣB_2` against its closed form for `n1 = 2..=n_max`.
pub fn figure_data(
    theorem: Theorem,
    n_max: usize,
    options: &VerifyOptions,
) -> Result<Vec<FigureRow>, PipelineError> {
    (2..=n_max)
        .into_par_iter()
        .map(|n1| {
            let table = low_rows(n1, theorem.n2(), options)?;
            let formula = theorem
                .formulas(n1)
                .into_iter()
                .find(|(q, _)| *q == "sum_B2")
                .map(|(_, v)| v)
                .expect("sum_B2 formula");
            Ok(FigureRow {
                n1,
                total_b2_computed: table.total(2),
                total_b2_formula: formula,
            })
        })
        .collect()
}

pub fn render_figure_csv(rows: &[FigureRow]) -> String {
    let mut out = String::from("n1,total_b2_computed,total_b2_formula\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            r.n1, r.total_b2_computed, r.total_b2_formula
        );
    }
    out
}

/// Summary of a user-supplied lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub elements: usize,
    pub valid: bool,
    pub distributive: bool,
    pub modular: bool,
    pub incomparable_pairs: usize,
}

pub fn lattice_check(text: &str) -> Result<LatticeReport, LatticeError> {
    let lattice = CoverFile::parse(text)?.into_lattice()?;
    Ok(LatticeReport {
        elements: lattice.size(),
        valid: true,
        distributive: lattice.is_distributive(),
        modular: lattice.is_modular(),
        incomparable_pairs: lattice.incomparable_pairs().len(),
    })
}

pub fn render_lattice_report(report: &LatticeReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        OutputFormat::Csv => format!(
            "elements,valid,distributive,modular,incomparable_pairs\n{},{},{},{},{}\n",
            report.elements,
            report.valid,
            report.distributive,
            report.modular,
            report.incomparable_pairs
        ),
        OutputFormat::Text => format!(
            "elements: {}\nvalid lattice: {}\ndistributive: {}\nmodular: {}\nincomparable pairs: {}\n",
            report.elements,
            yes_no(report.valid),
            yes_no(report.distributive),
            yes_no(report.modular),
            report.incomparable_pairs
        ),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_groebner(report: &GroebnerReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(report).expect("report serializes") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from("kind,element\n");
            for g in &report.basis {
                let _ = writeln!(out, "basis,{g}");
            }
            for m in &report.initial_ideal {
                let _ = writeln!(out, "initial,{m}");
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "variables: {}\nreduced Groebner basis:\n",
                report.variables.join(", ")
            );
            for g in &report.basis {
                let _ = writeln!(out, "  {g}");
            }
            out.push_str("initial ideal:\n");
            for m in &report.initial_ideal {
                let _ = writeln!(out, "  {m}");
            }
            out
        }
    }
}

pub fn render_betti(table: &BettiTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => table.to_diagram(),
        OutputFormat::Json => table.to_json() + "\n",
        OutputFormat::Csv => table.to_csv(),
    }
}
