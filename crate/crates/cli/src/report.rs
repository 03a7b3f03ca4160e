//! One [`Report`] per input: runs the decision procedure and flattens the
//! verdict into stable, rendered fields.

use serde::Serialize;
use serde_json::{json, Map, Value};

use liouvillian::algebra::{render_rat, CoeffPoly, Rat, RatFunc, Var};
use liouvillian::decision::{
    decide_abel, decide_autonomous, decide_square, degree_bound_check, log_derivative_of_algebraic,
    AbelStatus, AbelVerdict, AutonomousStatus, AutonomousVerdict, Branch, DecisionError, DegreeBound,
    FailureReason, GammaFailure, GammaVerdict, GeneratorKind, SquareStatus, SquareVerdict, LAMBDA,
};
use liouvillian::parser::{parse_coeff_poly, parse_poly, parse_ratfunc, ParseError};
use liouvillian::reduction::{
    has_rational_antiderivative, hermite_reduce, LogDerivFailure, ReductionError, ResidueCertificate,
};
use liouvillian::verify::{verify_autonomous_witness, verify_square_witness, VerificationReport, VerifyError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Clone, Debug)]
pub enum Procedure {
    Autonomous,
    Square,
    Abel { constant_term: Option<String> },
    Degbound { over_qx: bool },
    Antider,
    Logderiv,
}

impl Procedure {
    pub fn name(&self) -> &'static str {
        match self {
            Procedure::Autonomous => "autonomous",
            Procedure::Square => "square",
            Procedure::Abel { .. } => "abel",
            Procedure::Degbound { .. } => "degbound",
            Procedure::Antider => "antider",
            Procedure::Logderiv => "logderiv",
        }
    }

    /// The equation the input stands for, echoed verbatim.
    fn equation(&self, input: &str) -> String {
        match self {
            Procedure::Autonomous | Procedure::Degbound { .. } | Procedure::Antider => format!("y' = {input}"),
            Procedure::Square => format!("(y')^2 = {input}"),
            Procedure::Logderiv => format!("y' = ({input})*y"),
            Procedure::Abel { .. } => {
                let terms: Vec<String> = input
                    .split(';')
                    .enumerate()
                    .map(|(i, a)| match i {
                        0 => format!("({})*y", a.trim()),
                        _ => format!("({})*y^{}", a.trim(), i + 1),
                    })
                    .collect();
                format!("y' = {}", terms.join(" + "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub verify: bool,
    pub witness: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Liouvillian,
    NotLiouvillian,
    AlgebraicOnly,
    Inconclusive,
    Inapplicable,
    Unsupported,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Liouvillian => "liouvillian",
            Status::NotLiouvillian => "not_liouvillian",
            Status::AlgebraicOnly => "algebraic_only",
            Status::Inconclusive => "inconclusive",
            Status::Inapplicable => "inapplicable",
            Status::Unsupported => "unsupported",
            Status::Error => "error",
        }
    }
}

/// A failed criterion conjunct.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub code: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub passed: bool,
    pub identity: String,
    pub residual: String,
}

impl From<VerificationReport> for Verification {
    fn from(r: VerificationReport) -> Self {
        Verification { passed: r.passed, identity: r.identity, residual: r.residual }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    /// `parse`, `precondition` or `internal`.
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// 1-based input line, batch mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub equation: String,
    pub procedure: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_report: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failure_reasons: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip)]
    pub exit: u8,
}

impl Report {
    fn new(procedure: &Procedure, input: &str, status: Status) -> Self {
        Report {
            line: None,
            equation: procedure.equation(input),
            procedure: procedure.name(),
            status,
            branch: None,
            reason: None,
            gamma: None,
            witness: None,
            certificate: None,
            hypothesis_report: None,
            failure_reasons: Vec::new(),
            verification: None,
            error: None,
            exit: EXIT_OK,
        }
    }

    fn failed(procedure: &Procedure, input: &str, exit: u8, kind: &'static str, message: String, offset: Option<usize>) -> Self {
        Report {
            error: Some(ErrorInfo { kind, message, offset }),
            exit,
            ..Report::new(procedure, input, Status::Error)
        }
    }

    pub fn panicked(procedure: &Procedure, input: &str, line: usize) -> Self {
        Report {
            line: Some(line),
            ..Report::failed(procedure, input, EXIT_INTERNAL, "internal", "decision procedure panicked".into(), None)
        }
    }

    fn attach_verification(&mut self, v: Verification) {
        if !v.passed {
            self.exit = EXIT_INTERNAL;
        }
        self.verification = Some(v);
    }
}

/// Everything that stops a procedure before it produces a verdict.
enum Failed {
    Parse(ParseError),
    /// Parse error inside one `;`-separated coefficient.
    CoeffParse { index: usize, start: usize, error: ParseError },
    Decision(DecisionError),
    Precondition(String),
}

impl From<ParseError> for Failed {
    fn from(e: ParseError) -> Self {
        Failed::Parse(e)
    }
}

impl From<DecisionError> for Failed {
    fn from(e: DecisionError) -> Self {
        Failed::Decision(e)
    }
}

impl From<ReductionError> for Failed {
    fn from(e: ReductionError) -> Self {
        Failed::Decision(e.into())
    }
}

impl From<VerifyError> for Failed {
    fn from(e: VerifyError) -> Self {
        Failed::Decision(e.into())
    }
}

pub fn decide(procedure: &Procedure, input: &str, opts: &Options) -> Report {
    let outcome = match procedure {
        Procedure::Autonomous => autonomous(procedure, input, opts),
        Procedure::Square => square(procedure, input, opts),
        Procedure::Abel { constant_term } => abel(procedure, input, constant_term.as_deref(), opts),
        Procedure::Degbound { over_qx } => degbound(procedure, input, *over_qx),
        Procedure::Antider => antider(procedure, input, opts),
        Procedure::Logderiv => logderiv(procedure, input, opts),
    };
    let mut report = match outcome {
        Ok(r) => r,
        Err(Failed::Parse(e)) => {
            Report::failed(procedure, input, EXIT_PARSE, "parse", e.to_string(), Some(e.offset()))
        }
        Err(Failed::CoeffParse { index, start, error }) => Report::failed(
            procedure,
            input,
            EXIT_PARSE,
            "parse",
            format!("coefficient a{}: {error}", index + 1),
            Some(start + error.offset()),
        ),
        Err(Failed::Precondition(msg)) => Report::failed(procedure, input, EXIT_PRECONDITION, "precondition", msg, None),
        Err(Failed::Decision(e)) if e.is_precondition() => {
            Report::failed(procedure, input, EXIT_PRECONDITION, "precondition", e.to_string(), None)
        }
        Err(Failed::Decision(e)) => Report::failed(procedure, input, EXIT_INTERNAL, "internal", e.to_string(), None),
    };
    if !opts.witness {
        report.witness = None;
    }
    report
}

fn rendered(items: impl IntoIterator<Item = impl ToString>) -> Value {
    Value::Array(items.into_iter().map(|s| Value::String(s.to_string())).collect())
}

fn certificate_json(c: &ResidueCertificate) -> Value {
    let residues: Vec<Value> = c
        .rational_residues
        .iter()
        .map(|(r, g)| json!({ "residue": render_rat(r), "pole_factor": g.to_string() }))
        .collect();
    let mut m = Map::new();
    m.insert("rt_resultant".into(), json!(c.rt_resultant.to_string()));
    m.insert("ratio_poly".into(), json!(c.ratio_poly.to_string()));
    m.insert("residues".into(), Value::Array(residues));
    m.insert("commensurable".into(), json!(c.commensurable));
    if let Some(a) = &c.scale_a {
        m.insert("scale_a".into(), json!(render_rat(a)));
    }
    Value::Object(m)
}

fn autonomous_failure(f: &FailureReason) -> Failure {
    match f {
        FailureReason::NoRationalAntiderivative(rem) => Failure {
            code: "no_rational_antiderivative",
            detail: format!("1/R is not dz/dy for any rational z: Hermite remainder {rem} is nonzero"),
        },
        FailureReason::LogDerivative(LogDerivFailure::PolynomialPart(p)) => Failure {
            code: "polynomial_part",
            detail: format!("1/R has polynomial part {p}, so it is not (dz/dy)/(a z)"),
        },
        FailureReason::LogDerivative(LogDerivFailure::NonSquarefreeDenominator(g)) => Failure {
            code: "non_squarefree_denominator",
            detail: format!("denominator of 1/R not squarefree: repeated factor {g}"),
        },
        FailureReason::LogDerivative(LogDerivFailure::IncommensurableResidues(c)) => Failure {
            code: "incommensurable_residues",
            detail: format!("residues of 1/R not commensurable: W(u) = {} does not split over Q", c.ratio_poly),
        },
    }
}

fn autonomous(procedure: &Procedure, input: &str, opts: &Options) -> Result<Report, Failed> {
    let r = parse_ratfunc(input, Var::Y)?;
    let v: AutonomousVerdict = decide_autonomous(&r)?;
    let mut report = match v.status {
        AutonomousStatus::Liouvillian => Report::new(procedure, input, Status::Liouvillian),
        AutonomousStatus::NotLiouvillian => Report::new(procedure, input, Status::NotLiouvillian),
    };
    report.branch = v.branch.map(|b| match b {
        Branch::Antiderivative => "antiderivative",
        Branch::LogDerivative => "log_derivative",
    });
    report.certificate = v.certificate.as_ref().map(certificate_json);
    report.failure_reasons = v.failure_reasons.iter().map(autonomous_failure).collect();
    match (&v.witness, v.branch) {
        (Some(w), _) => {
            let mut m = Map::new();
            m.insert("z".into(), json!(w.z.to_string()));
            if let Some(a) = &w.a {
                m.insert("a".into(), json!(render_rat(a)));
            }
            report.witness = Some(Value::Object(m));
            if opts.verify {
                let branch = v.branch.unwrap_or(Branch::Antiderivative);
                let check = verify_autonomous_witness(&r, branch, &w.z, w.a.as_ref())?;
                report.attach_verification(check.into());
            }
        }
        (None, Some(_)) => {
            report.reason = Some("certificate_only".into());
        }
        (None, None) => {}
    }
    Ok(report)
}

fn square(procedure: &Procedure, input: &str, opts: &Options) -> Result<Report, Failed> {
    let p = parse_poly(input, Var::Y)?;
    let v: SquareVerdict = decide_square(&p)?;
    let status = match v.status {
        SquareStatus::Liouvillian => Status::Liouvillian,
        SquareStatus::NotLiouvillian => Status::NotLiouvillian,
        SquareStatus::Inapplicable => Status::Inapplicable,
    };
    let mut report = Report::new(procedure, input, status);
    report.reason = Some(v.reason.code().to_string());
    if let Some(w) = &v.witness {
        let generators: Vec<Value> = w
            .generators
            .iter()
            .map(|g| {
                let kind = match g.kind {
                    GeneratorKind::Antiderivative => "antiderivative",
                    GeneratorKind::Exponential { .. } => "exponential",
                };
                json!({ "name": g.name.to_string(), "kind": kind, "derivative": g.derivative_text() })
            })
            .collect();
        let mut m = Map::new();
        m.insert("y".into(), json!(w.expression.to_string()));
        m.insert("generators".into(), Value::Array(generators));
        if let Some(ext) = &w.quad_ext {
            m.insert("extension".into(), json!(format!("{LAMBDA}^2 = {}", render_rat(&ext.square))));
        }
        m.insert("relation".into(), json!(w.claimed_relation));
        report.witness = Some(Value::Object(m));
        if opts.verify {
            let check = verify_square_witness(&p, w)?;
            report.attach_verification(check.into());
        }
    }
    Ok(report)
}

/// Checks `g' = n * g * alpha` by direct substitution.
fn gamma_check(g: &RatFunc, power: &Rat, alpha: &RatFunc) -> Verification {
    let residual = &g.diff() - &(g * alpha).scale(power);
    let identity = if power == &Rat::from_integer(1.into()) {
        "gamma' = alpha1*gamma".to_string()
    } else {
        format!("(gamma^{0})' = {0}*alpha1*gamma^{0}", render_rat(power))
    };
    Verification { passed: residual.is_zero(), identity, residual: residual.to_string() }
}

fn abel(procedure: &Procedure, input: &str, constant_term: Option<&str>, opts: &Options) -> Result<Report, Failed> {
    let mut coeffs = Vec::new();
    let mut start = 0;
    for (index, text) in input.split(';').enumerate() {
        let c = parse_ratfunc(text, Var::X).map_err(|error| Failed::CoeffParse { index, start, error })?;
        coeffs.push(c);
        start += text.len() + 1;
    }
    if let Some(text) = constant_term {
        let c = parse_ratfunc(text, Var::X)?;
        if !c.is_zero() {
            return Err(Failed::Precondition(format!(
                "constant term {c} is nonzero; only y' = a1 y + ... + an y^n is supported"
            )));
        }
    }
    let v: AbelVerdict = decide_abel(&coeffs)?;
    let status = match v.status {
        AbelStatus::AlgebraicOnly => Status::AlgebraicOnly,
        AbelStatus::Inconclusive => Status::Inconclusive,
        AbelStatus::Unsupported => Status::Unsupported,
    };
    let mut report = Report::new(procedure, input, status);
    let h = &v.hypothesis_report;
    let mut hyp = Map::new();
    hyp.insert("alpha1_log_derivative".into(), json!(h.alpha1_log_derivative));
    hyp.insert("alpha2_no_antiderivative".into(), json!(h.alpha2_no_antiderivative));
    hyp.insert("alpha3_no_antiderivative".into(), json!(h.alpha3_no_antiderivative));
    hyp.insert("alpha2_antiderivative".into(), json!(h.alpha2_antiderivative.as_ref().map(|w| w.to_string())));
    hyp.insert("alpha3_antiderivative".into(), json!(h.alpha3_antiderivative.as_ref().map(|w| w.to_string())));
    hyp.insert("scaled_coeffs".into(), v.scaled_coeffs.as_ref().map_or(Value::Null, |c| rendered(c)));
    hyp.insert("part_i_fact".into(), json!(v.part_i_fact));
    hyp.insert("part_ii_fact".into(), json!(v.part_ii_fact));
    report.hypothesis_report = Some(Value::Object(hyp));

    report.reason = Some(match (&v.gamma, v.status) {
        (Some(GammaVerdict::No(f)), _) => format!("alpha1_{}", f.code()),
        (Some(GammaVerdict::AlgebraicGamma { .. }), _) => "algebraic_gamma".into(),
        (_, AbelStatus::AlgebraicOnly) => "hypotheses_hold".into(),
        _ if h.alpha2_no_antiderivative == Some(false) => "alpha2_has_antiderivative".into(),
        _ => "alpha3_has_antiderivative".into(),
    });
    match &v.gamma {
        Some(GammaVerdict::RationalGamma(g)) => {
            report.gamma = Some(g.to_string());
            if opts.verify {
                report.attach_verification(gamma_check(g, &Rat::from_integer(1.into()), &coeffs[0].with_var(Var::X)));
            }
        }
        Some(GammaVerdict::AlgebraicGamma { power, gamma_power, residues }) => {
            report.certificate = Some(json!({
                "gamma_power": power.to_string(),
                "gamma_to_power": gamma_power.to_string(),
                "residues": rendered(residues.iter().map(render_rat)),
            }));
        }
        Some(GammaVerdict::No(_)) | None => {}
    }
    Ok(report)
}

fn degbound(procedure: &Procedure, input: &str, over_qx: bool) -> Result<Report, Failed> {
    let p = if over_qx {
        parse_coeff_poly(input)?
    } else {
        CoeffPoly::from_poly(&parse_poly(input, Var::Y)?, Var::X)
    };
    let report = match degree_bound_check(&p)? {
        DegreeBound::NoSolutionInAntiderivativeTowers => Report {
            reason: Some("no_solution_in_antiderivative_towers".into()),
            ..Report::new(procedure, input, Status::NotLiouvillian)
        },
        DegreeBound::Inconclusive => Report {
            reason: Some("degree_at_most_two".into()),
            ..Report::new(procedure, input, Status::Inconclusive)
        },
    };
    Ok(report)
}

fn antider(procedure: &Procedure, input: &str, opts: &Options) -> Result<Report, Failed> {
    let f = parse_ratfunc(input, Var::X)?.with_var(Var::X);
    match has_rational_antiderivative(&f)? {
        Some(z) => {
            let mut report = Report::new(procedure, input, Status::AlgebraicOnly);
            report.reason = Some("rational_antiderivative".into());
            report.witness = Some(json!({ "antiderivative": z.to_string() }));
            if opts.verify {
                let residual = &z.diff() - &f;
                report.attach_verification(Verification {
                    passed: residual.is_zero(),
                    identity: "dz/dx = f".into(),
                    residual: residual.to_string(),
                });
            }
            Ok(report)
        }
        None => {
            let remainder = hermite_reduce(&f)?.remainder;
            let mut report = Report::new(procedure, input, Status::Liouvillian);
            report.reason = Some("no_rational_antiderivative".into());
            report.failure_reasons.push(Failure {
                code: "no_rational_antiderivative",
                detail: format!("f is not dz/dx for any rational z: Hermite remainder {remainder} is nonzero"),
            });
            Ok(report)
        }
    }
}

fn logderiv(procedure: &Procedure, input: &str, opts: &Options) -> Result<Report, Failed> {
    let alpha = parse_ratfunc(input, Var::X)?.with_var(Var::X);
    let report = match log_derivative_of_algebraic(&alpha)? {
        GammaVerdict::RationalGamma(g) => {
            let mut report = Report::new(procedure, input, Status::AlgebraicOnly);
            report.reason = Some("rational_gamma".into());
            report.witness = Some(json!({ "gamma": g.to_string() }));
            if opts.verify {
                report.attach_verification(gamma_check(&g, &Rat::from_integer(1.into()), &alpha));
            }
            report
        }
        GammaVerdict::AlgebraicGamma { residues, power, gamma_power } => {
            let mut report = Report::new(procedure, input, Status::AlgebraicOnly);
            report.reason = Some("algebraic_gamma".into());
            report.witness = Some(json!({
                "gamma_power": power.to_string(),
                "gamma_to_power": gamma_power.to_string(),
            }));
            report.certificate = Some(json!({ "residues": rendered(residues.iter().map(render_rat)) }));
            if opts.verify {
                report.attach_verification(gamma_check(&gamma_power, &Rat::from_integer(power), &alpha));
            }
            report
        }
        GammaVerdict::No(f) => {
            let mut report = Report::new(procedure, input, Status::Liouvillian);
            report.reason = Some(f.code().to_string());
            report.failure_reasons.push(Failure {
                code: f.code(),
                detail: match f {
                    GammaFailure::NotProper => {
                        format!("f = {alpha} has a polynomial part, so it is not g'/g for algebraic g")
                    }
                    GammaFailure::NonSquarefree => {
                        format!("denominator of f = {alpha} not squarefree, so f is not g'/g for algebraic g")
                    }
                    GammaFailure::NonRationalResidues => {
                        format!("f = {alpha} has an irrational residue, so it is not g'/g for algebraic g")
                    }
                },
            });
            report
        }
    };
    Ok(report)
}
