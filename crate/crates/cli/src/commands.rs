use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use matchlab::crossint::{is_cross_intersecting, max_cross_sum_oracle, sfq_bound, CrossSystem};
use matchlab::families::FamilySpec;
use matchlab::invariants::{
    clique_number_with, matching_number_with, saturate, vertex_cover_number_with,
};
use matchlab::search::{max_family, verify_report, SearchMode, SearchProblem};
use matchlab::shifting::{nontrivial_shift_procedure, shift, shift_closure, ProcedureOutcome};
use matchlab::{bounds_report, count_family, gen_family, read_khg, write_khg, Error, FamilyKind, KGraph};

use crate::output::{edge_list, graph_summary, table, vertex_list, Report};
use crate::{Cli, Command, FamilyArgs};

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(PathBuf, io::Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::BudgetExhausted { .. }) => 2,
            CliError::Lib(Error::Invariant(_)) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn read_graph(path: &Path) -> Result<KGraph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(path.into(), e))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))?
    };
    Ok(read_khg(&text)?)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::Io(path.into(), e))
}

/// Writes `f` to `output`, or returns its text for standard output.
fn emit_graph(f: &KGraph, output: Option<&PathBuf>, report: &mut Report, porcelain: bool) -> Result<String> {
    match output {
        Some(path) => {
            write_file(path, &write_khg(f))?;
            graph_summary(report, f);
            report.kv("file", path.display());
            Ok(report.render(porcelain))
        }
        None => Ok(write_khg(f)),
    }
}

fn parse_kind(name: &str) -> Result<FamilyKind> {
    Ok(match name {
        "B" => FamilyKind::B,
        "E0" => FamilyKind::E0,
        "E1" => FamilyKind::E1,
        "complete" => FamilyKind::Complete,
        "star" => FamilyKind::Star,
        _ => match name.strip_prefix('A').map(usize::from_str) {
            Some(Ok(i)) => FamilyKind::A(i),
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown family {name:?}; expected A<i>, B, E0, E1, complete or star"
                )))
            }
        },
    })
}

fn family_spec(a: &FamilyArgs) -> Result<FamilySpec> {
    let kind = parse_kind(&a.family)?;
    let s = match (kind, a.s) {
        (_, Some(s)) => s,
        (FamilyKind::Complete | FamilyKind::Star, None) => 0,
        (_, None) => return Err(CliError::Usage(format!("family {} needs --s", a.family))),
    };
    Ok(FamilySpec::new(kind, a.n, a.k, s))
}

/// `a/b`, an integer, or a decimal such as `0.01`.
fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || CliError::Usage(format!("cannot read {text:?} as a rational number"));
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = BigInt::from_str(&format!("{int}{frac}")).map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(digits, scale));
    }
    BigRational::from_str(text).map_err(|_| bad())
}

fn parse_modes(text: &str) -> Result<Vec<SearchMode>> {
    text.split(',')
        .map(|m| match m.trim() {
            "plain" => Ok(SearchMode::Unrestricted),
            "nontrivial" => Ok(SearchMode::NonTrivial),
            "shifted" => Ok(SearchMode::Shifted),
            "shifted-nontrivial" => Ok(SearchMode::ShiftedNonTrivial),
            other => Err(CliError::Usage(format!("unknown mode {other:?}"))),
        })
        .collect()
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let porcelain = cli.porcelain;
    let budget = cli.budget;
    let mut report = Report::new();
    let stdout = match &cli.command {
        Command::Gen { family, output } => {
            let spec = family_spec(family)?;
            let f = gen_family(&spec)?;
            report.kv("family", spec);
            emit_graph(&f, output.as_ref(), &mut report, porcelain)?
        }
        Command::Count { family } => {
            let spec = family_spec(family)?;
            report.kv("family", spec).kv("count", count_family(&spec)?);
            report.render(porcelain)
        }
        Command::Bounds { params, epsilon } => {
            let eps = parse_rational(epsilon)?;
            let b = bounds_report(params.n as u64, params.k as u64, params.s as u64, &eps)?;
            report
                .kv("n", b.n)
                .kv("k", b.k)
                .kv("s", b.s)
                .kv("ell", b.ell)
                .kv("epsilon", &b.epsilon);
            for (name, value) in b.rows() {
                report.kv(name, value.unwrap_or_else(|| "absent".into()));
            }
            report.render(porcelain)
        }
        Command::Nu { input } => {
            let r = matching_number_with(&read_graph(input)?, budget)?;
            report
                .kv("nu", r.value)
                .kv("witness", edge_list(r.witness_edges()))
                .kv("nodes", r.node_count);
            report.render(porcelain)
        }
        Command::Tau { input } => {
            let r = vertex_cover_number_with(&read_graph(input)?, budget)?;
            report
                .kv("tau", r.value)
                .kv("witness", vertex_list(r.witness_vertices()))
                .kv("nodes", r.node_count);
            report.render(porcelain)
        }
        Command::Omega { input } => {
            let r = clique_number_with(&read_graph(input)?, budget)?;
            report
                .kv("omega", r.value)
                .kv("witness", vertex_list(r.witness_vertices()))
                .kv("nodes", r.node_count);
            report.render(porcelain)
        }
        Command::Saturate { input, s, output } => {
            let f = read_graph(input)?;
            let g = saturate(&f, *s, budget)?;
            report.kv("added", g.len() - f.len());
            emit_graph(&g, output.as_ref(), &mut report, porcelain)?
        }
        Command::Shift { input, x, y, output } => {
            let f = read_graph(input)?;
            let g = shift(&f, *x, *y)?;
            let moved = g.edges().iter().filter(|&&e| !f.contains(e)).count();
            report.kv("moved", moved);
            emit_graph(&g, output.as_ref(), &mut report, porcelain)?
        }
        Command::Closure { input, m, output, trace } => {
            let f = read_graph(input)?;
            let ys: Vec<usize> = (1..=m.unwrap_or(f.n())).collect();
            let t = shift_closure(&f, &ys)?;
            if let Some(path) = trace {
                write_file(path, &t.to_text())?;
            }
            report.kv("steps", t.steps.len());
            emit_graph(&t.result, output.as_ref(), &mut report, porcelain)?
        }
        Command::Shiftproc { input, m, output, trace } => {
            let f = read_graph(input)?;
            let m = m.unwrap_or(f.n());
            match nontrivial_shift_procedure(&f, m)? {
                ProcedureOutcome::Shifted(t) => {
                    if let Some(path) = trace {
                        write_file(path, &t.to_text())?;
                    }
                    report.kv("outcome", "shifted").kv("steps", t.steps.len());
                    emit_graph(&t.result, output.as_ref(), &mut report, porcelain)?
                }
                ProcedureOutcome::Blocked(fail) => {
                    if let Some(path) = trace {
                        write_file(path, &fail.trace.to_text())?;
                    }
                    report
                        .kv("outcome", "blocked")
                        .kv("steps", fail.trace.steps.len())
                        .kv("x", fail.x)
                        .kv("y", fail.y)
                        .kv("isolated", vertex_list(&fail.isolated))
                        .kv("pair_link", fail.pair_link)
                        .kv("cross_links", fail.cross_links)
                        .kv("limit", &fail.limit);
                    if let Some(path) = output {
                        write_file(path, &write_khg(&fail.trace.result))?;
                        report.kv("file", path.display());
                    }
                    report.render(porcelain)
                }
            }
        }
        Command::Crossint { inputs, n, k, t, oracle, output } => {
            if !inputs.is_empty() {
                let fams = inputs.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>>>()?;
                let sys = CrossSystem::new(fams)?;
                match is_cross_intersecting(&sys) {
                    Ok(()) => {
                        report.kv("cross_intersecting", true);
                    }
                    Err(w) => {
                        report
                            .kv("cross_intersecting", false)
                            .kv("family_a", w.family_a + 1)
                            .kv("set_a", w.set_a)
                            .kv("family_b", w.family_b + 1)
                            .kv("set_b", w.set_b);
                    }
                }
            } else {
                let (Some(n), Some(k), Some(t)) = (*n, *k, *t) else {
                    return Err(CliError::Usage("crossint needs input files or --n, --k and --t".into()));
                };
                report.kv("n", n).kv("k", k).kv("t", t);
                report.kv("bound", sfq_bound(n as u64, k as u64, t as u64)?);
                if *oracle {
                    let r = max_cross_sum_oracle(n, k, t)?;
                    report.kv("optimum", r.value);
                    let sizes: Vec<String> =
                        r.certificate.families().iter().map(|f| f.len().to_string()).collect();
                    report.kv("sizes", sizes.join(" "));
                    if let Some(dir) = output {
                        fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.clone(), e))?;
                        for (i, f) in r.certificate.families().iter().enumerate() {
                            write_file(&dir.join(format!("family{}.khg", i + 1)), &write_khg(f))?;
                        }
                        report.kv("dir", dir.display());
                    }
                }
            }
            report.render(porcelain)
        }
        Command::Search { params, nontrivial, shifted, output } => {
            let mode = SearchMode::from_flags(*nontrivial, *shifted);
            let p = SearchProblem::new(params.n, params.k, params.s, mode).with_budget(budget);
            let cert = max_family(&p)?;
            report
                .kv("problem", p)
                .kv("best", cert.best_size)
                .kv("exhaustive", cert.exhaustive)
                .kv("nodes", cert.nodes)
                .kv("scope", if cert.lower_bound_only { "lower-bound" } else { "exact" });
            match output {
                Some(prefix) => {
                    let khg = prefix.with_extension("khg");
                    let sidecar = prefix.with_extension("cert");
                    write_file(&khg, &write_khg(&cert.witness))?;
                    write_file(&sidecar, &cert.to_cert_text())?;
                    report.kv("file", khg.display()).kv("cert", sidecar.display());
                }
                None => {
                    report.kv("witness", edge_list(cert.witness.edges()));
                }
            }
            let code = if cert.exhaustive { 0 } else { 2 };
            return Ok(Outcome {
                stdout: report.render(porcelain),
                code,
            });
        }
        Command::Verify { params, modes } => {
            let modes = parse_modes(modes)?;
            let r = verify_report(params.n, params.k, params.s, &modes, budget)?;
            let rows: Vec<Vec<String>> = r
                .rows
                .iter()
                .map(|row| {
                    vec![
                        row.mode.to_string(),
                        row.bound.to_string(),
                        row.bound_value
                            .as_ref()
                            .map_or("absent".into(), |v| v.to_string()),
                        row.optimum.to_string(),
                        row.relation_symbol().to_string(),
                        row.status.to_string(),
                    ]
                })
                .collect();
            let text = if porcelain {
                let mut out = format!("n={}\nk={}\ns={}\n", r.n, r.k, r.s);
                for c in &r.certificates {
                    out += &format!(
                        "optimum.{}={} exhaustive={} nodes={}\n",
                        c.problem.mode(),
                        c.best_size,
                        c.exhaustive,
                        c.nodes
                    );
                }
                for row in &rows {
                    out += &format!("row={}\n", row.join(" "));
                }
                out
            } else {
                table(&["mode", "bound", "value", "optimum", "rel", "status"], &rows)
            };
            let code = if r.failures().next().is_some() {
                3
            } else if r.certificates.iter().any(|c| !c.exhaustive) {
                2
            } else {
                0
            };
            return Ok(Outcome { stdout: text, code });
        }
    };
    Ok(Outcome::ok(stdout))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let r = |s: &str| parse_rational(s).unwrap();
        assert_eq!(r("1/100"), BigRational::new(1.into(), 100.into()));
        assert_eq!(r("0.25"), BigRational::new(1.into(), 4.into()));
        assert_eq!(r("3"), BigRational::from_integer(3.into()));
        assert!(parse_rational("0.").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn kinds() {
        assert_eq!(parse_kind("A3").unwrap(), FamilyKind::A(3));
        assert_eq!(parse_kind("star").unwrap(), FamilyKind::Star);
        assert!(parse_kind("E2").is_err());
        assert!(parse_kind("A").is_err());
    }
}
