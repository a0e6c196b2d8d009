//! Subcommand execution.
//!
//! Every runner returns a `CommandOutcome`: the resolved command (all
//! defaults filled in, so the report pins down exactly what ran), the
//! JSON payload, a plain-table rendering of the same data, and the exit
//! status. Mathematical verdicts that come back false set exit 1 and
//! still produce a full report; errors propagate as `CliError` and
//! produce no report.

use std::fmt;
use std::fs;
use std::path::PathBuf;

use num_traits::Signed;
use serde_json::{json, Value};

use baxter_core::asymptotics::{
    asymptotic_order, certify_rlogconvexity, dominant_root, estimate_leading_constant,
    r2_expansion, ratio_expansion, sequence_expansion, CertificateVerdict, CertifyOptions,
};
use baxter_core::combinat::{
    baxter_polynomial, baxter_table, enumerate_baxter_descents, f_polynomial,
    hoggatt_ones_sequence, hoggatt_polynomial, hoggatt_qt,
};
use baxter_core::polycore::{rat_to_string, Poly, Rat};
use baxter_core::precursive::{
    check_initial_rlogconvexity, check_window_rlogconvexity, extend_sequence,
    hankel_leading_minors, PRecurrence, SequenceWindow,
};
use baxter_core::realroots::{check_family_sturm, SturmMode};
use baxter_core::Error;

use crate::{Command, Family, Mode};

// ---------------------------------------------------------------------------
// Errors and outcomes
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl CliError {
    /// Exit 1 is reserved for negative mathematical outcomes; an
    /// inconclusive certification is one (the check ran and could not
    /// certify). Everything else is a usage/resource/input problem.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Inconclusive(_)) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
            CliError::Usage(e) => write!(f, "usage error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Core(e)
    }
}

pub struct CommandOutcome {
    pub resolved: Value,
    pub payload: Value,
    pub table: String,
    pub exit: u8,
}

pub fn run(cmd: &Command) -> Result<CommandOutcome, CliError> {
    match cmd {
        Command::Gen { family, range, m, q } => cmd_gen(*family, *range, *m, *q),
        Command::Interlace {
            family,
            range,
            mode,
            m,
            q,
        } => cmd_interlace(*family, *range, *mode, *m, *q),
        Command::Seq { seq, spec_file, upto } => cmd_seq(seq, spec_file, *upto),
        Command::Asymp {
            seq,
            spec_file,
            eta,
            estimate,
            n_probe,
            digits,
        } => cmd_asymp(seq, spec_file, *eta, *estimate, *n_probe, *digits),
        Command::Certify {
            seq,
            spec_file,
            r,
            eta,
            n0_cap,
            initial_cap,
            initial_floor,
        } => cmd_certify(seq, spec_file, *r, *eta, *n0_cap, *initial_cap, *initial_floor),
        Command::Hankel {
            seq,
            spec_file,
            upto_order,
            offsets,
        } => cmd_hankel(seq, spec_file, *upto_order, offsets),
        Command::Enumerate { n, cap } => cmd_enumerate(*n, *cap),
        Command::Conjecture {
            id,
            q,
            n,
            m,
            r,
            upto,
            cap,
        } => cmd_conjecture(*id, *q, *n, m, *r, *upto, *cap),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Baxter => "baxter",
        Family::Hoggatt => "hoggatt",
        Family::HoggattQt => "hoggatt-qt",
        Family::F => "f",
    }
}

/// Fills family-specific defaults and rejects missing required flags.
fn resolve_family_params(
    family: Family,
    m: Option<i64>,
    q: Option<i64>,
) -> Result<(Option<i64>, Option<i64>), CliError> {
    match family {
        Family::Baxter => Ok((None, None)),
        Family::Hoggatt => Ok((Some(m.unwrap_or(3)), None)),
        Family::HoggattQt => {
            let q = q.ok_or_else(|| CliError::Usage("--q is required for hoggatt-qt".into()))?;
            Ok((Some(m.unwrap_or(3)), Some(q)))
        }
        Family::F => Ok((Some(m.unwrap_or(1)), None)),
    }
}

fn family_poly(family: Family, n: i64, m: Option<i64>, q: Option<i64>) -> Result<Poly, CliError> {
    Ok(match family {
        Family::Baxter => baxter_polynomial(n)?,
        Family::Hoggatt => hoggatt_polynomial(n, m.expect("resolved"))?,
        Family::HoggattQt => hoggatt_qt(n, m.expect("resolved"), q.expect("resolved"))?,
        Family::F => f_polynomial(n, m.expect("resolved")),
    })
}

/// Exactly one of `--seq` (builtin) and `--spec-file` selects the
/// recurrence; returns a display label alongside it.
fn load_recurrence(
    seq: &Option<String>,
    spec_file: &Option<PathBuf>,
) -> Result<(String, PRecurrence), CliError> {
    match (seq, spec_file) {
        (Some(name), None) => PRecurrence::builtin(name)
            .map(|rec| (name.clone(), rec))
            .ok_or_else(|| {
                CliError::Usage(format!("unknown builtin `{name}` (have: baxter, catalan)"))
            }),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let rec = PRecurrence::from_json(&text)?;
            Ok((path.display().to_string(), rec))
        }
        _ => Err(CliError::Usage(
            "exactly one of --seq or --spec-file is required".into(),
        )),
    }
}

fn source_fields(seq: &Option<String>, spec_file: &Option<PathBuf>) -> (Value, Value) {
    (
        json!(seq),
        json!(spec_file.as_ref().map(|p| p.display().to_string())),
    )
}

fn coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rat_to_string).collect()
}

fn rats_strings(vs: &[Rat]) -> Vec<String> {
    vs.iter().map(rat_to_string).collect()
}

// ---------------------------------------------------------------------------
// gen / interlace
// ---------------------------------------------------------------------------

fn cmd_gen(
    family: Family,
    (lo, hi): (i64, i64),
    m: Option<i64>,
    q: Option<i64>,
) -> Result<CommandOutcome, CliError> {
    let (m, q) = resolve_family_params(family, m, q)?;
    let name = family_name(family);
    let mut rows = Vec::new();
    let mut lines = vec![format!("family {name}  n = {lo}..{hi}")];
    for n in lo..=hi {
        let p = family_poly(family, n, m, q)?;
        let cs = coeff_strings(&p);
        lines.push(format!("n = {n}: {}", cs.join(" ")));
        rows.push(json!({"n": n, "degree": p.degree(), "coefficients": cs}));
    }
    Ok(CommandOutcome {
        resolved: json!({
            "subcommand": "gen", "family": name, "range": [lo, hi], "m": m, "q": q,
        }),
        payload: json!({"family": name, "m": m, "q": q, "rows": rows}),
        table: lines.join("\n") + "\n",
        exit: 0,
    })
}

fn cmd_interlace(
    family: Family,
    (lo, hi): (i64, i64),
    mode: Mode,
    m: Option<i64>,
    q: Option<i64>,
) -> Result<CommandOutcome, CliError> {
    let (m, q) = resolve_family_params(family, m, q)?;
    let name = family_name(family);
    let mode_name = match mode {
        Mode::Strict => "strict",
        Mode::Generalized => "generalized",
    };
    let polys = (lo..=hi)
        .map(|n| family_poly(family, n, m, q))
        .collect::<Result<Vec<_>, _>>()?;
    let check = check_family_sturm(
        &polys,
        match mode {
            Mode::Strict => SturmMode::Strict,
            Mode::Generalized => SturmMode::Generalized,
        },
    )?;

    let mut pairs = Vec::new();
    let mut lines = vec![format!("family {name}  mode {mode_name}  n = {lo}..{hi}")];
    for (i, v) in check.per_pair.iter().enumerate() {
        let rel = format!("{:?}", v.relation);
        lines.push(format!("({}, {}): {rel}", lo + i as i64, lo + i as i64 + 1));
        pairs.push(json!({
            "lower_n": lo + i as i64,
            "upper_n": lo + i as i64 + 1,
            "relation": rel,
            "strict": v.relation.is_strict(),
            "shared_root_degree": v.shared_roots.degree(),
        }));
    }
    lines.push(format!("ok: {}", check.ok));
    Ok(CommandOutcome {
        resolved: json!({
            "subcommand": "interlace", "family": name, "range": [lo, hi],
            "mode": mode_name, "m": m, "q": q,
        }),
        payload: json!({
            "family": name, "m": m, "q": q, "mode": mode_name,
            "ok": check.ok,
            "first_failure_pair": check.first_failure.map(|i| json!({
                "lower_n": lo + i as i64, "upper_n": lo + i as i64 + 1,
            })),
            "pairs": pairs,
        }),
        table: lines.join("\n") + "\n",
        exit: u8::from(!check.ok),
    })
}

// ---------------------------------------------------------------------------
// seq / asymp / certify
// ---------------------------------------------------------------------------

fn cmd_seq(
    seq: &Option<String>,
    spec_file: &Option<PathBuf>,
    upto: i64,
) -> Result<CommandOutcome, CliError> {
    let (label, rec) = load_recurrence(seq, spec_file)?;
    let window = extend_sequence(&rec, upto)?;
    let terms = rats_strings(&window.terms);
    let (seq_v, file_v) = source_fields(seq, spec_file);
    let mut lines = vec![format!("sequence {label}")];
    for (k, t) in terms.iter().enumerate() {
        lines.push(format!("a_{} = {t}", window.start_index + k as i64));
    }
    Ok(CommandOutcome {
        resolved: json!({
            "subcommand": "seq", "seq": seq_v, "spec_file": file_v, "upto": upto,
        }),
        payload: json!({
            "sequence": label,
            "start_index": window.start_index,
            "upto": upto,
            "terms": terms,
        }),
        table: lines.join("\n") + "\n",
        exit: 0,
    })
}

fn cmd_asymp(
    seq: &Option<String>,
    spec_file: &Option<PathBuf>,
    eta: u32,
    estimate: bool,
    n_probe: i64,
    digits: Option<usize>,
) -> Result<CommandOutcome, CliError> {
    let (label, rec) = load_recurrence(seq, spec_file)?;
    let rho = dominant_root(&rec)?;
    let rx = ratio_expansion(&rec, &rho, eta)?;
    let mut sx = sequence_expansion(&rx)?;

    // The R^2 stage can be legitimately unavailable (e.g. R^2 - 1 vanishes
    // through the computed order); report the reason instead of failing.
    let (r2_value, order_value, note) = match r2_expansion(&rx) {
        Ok(r2) => match asymptotic_order(&r2) {
            Ok(order) => (serde_json::to_value(&r2).unwrap(), json!(order), Value::Null),
            Err(e) => (
                serde_json::to_value(&r2).unwrap(),
                Value::Null,
                json!(e.to_string()),
            ),
        },
        Err(e) => (Value::Null, Value::Null, json!(e.to_string())),
    };

    let est = if estimate {
        let est = estimate_leading_constant(&rec, &sx, n_probe, digits)?;
        sx.leading_constant_estimate = Some(est.decimal.clone());
        Some(est)
    } else {
        None
    };

    let mut lines = vec![
        format!("sequence {label}  eta = {eta}"),
        format!("rho = {}", rat_to_string(&rx.rho)),
    ];
    for (i, d) in rx.d.iter().enumerate() {
        lines.push(format!("d_{} = {}", i + 1, rat_to_string(d)));
    }
    lines.push(format!("nu = {}", rat_to_string(&sx.nu)));
    for (i, l) in sx.ell.iter().enumerate() {
        lines.push(format!("ell_{} = {}", i + 1, rat_to_string(l)));
    }
    match (&order_value, &note) {
        (Value::Null, n) => lines.push(format!("order: unavailable ({n})")),
        (o, _) => lines.push(format!("asymptotic order: {o}")),
    }
    if let Some(e) = &est {
        lines.push(format!("C ~ {} (probe n = {})", e.decimal, e.n_probe));
    }

    let (seq_v, file_v) = source_fields(seq, spec_file);
    Ok(CommandOutcome {
        resolved: json!({
            "subcommand": "asymp", "seq": seq_v, "spec_file": file_v, "eta": eta,
            "estimate": estimate, "n_probe": n_probe, "digits": digits,
        }),
        payload: json!({
            "sequence": label,
            "eta": eta,
            "ratio_expansion": serde_json::to_value(&rx).unwrap(),
            "sequence_expansion": serde_json::to_value(&sx).unwrap(),
            "r2_expansion": r2_value,
            "asymptotic_order": order_value,
            "note": note,
            "estimate": est.map(|e| serde_json::to_value(&e).unwrap()),
        }),
        table: lines.join("\n") + "\n",
        exit: 0,
    })
}

fn cmd_certify(
    seq: &Option<String>,
    spec_file: &Option<PathBuf>,
    r: u32,
    eta: Option<u32>,
    n0_cap: i64,
    initial_cap: i64,
    initial_floor: i64,
) -> Result<CommandOutcome, CliError> {
    let (label, rec) = load_recurrence(seq, spec_file)?;
    let eta = eta.unwrap_or(2 * r);
    let opts = CertifyOptions {
        n0_cap,
        initial_cap,
        initial_floor,
    };
    let cert = certify_rlogconvexity(&rec, r, eta, &opts)?;

    let mut lines = vec![
        format!("sequence {label}  r = {r}  eta = {eta}"),
        format!("induction base N0 = {}", cert.induction_base.n0),
    ];
    for (j, nj) in cert.level_thresholds.iter().enumerate() {
        lines.push(format!("N_{} = {nj}", j + 1));
    }
    match cert.initial_check_upto {
        Some(upto) => lines.push(format!("exact initial check through {upto}")),
        None => lines.push("exact initial check skipped".into()),
    }
    let verdict_line = match &cert.verdict {
        CertificateVerdict::Certified => "verdict: certified".to_string(),
        CertificateVerdict::CertifiedEventual { reason } => {
            format!("verdict: certified_eventual ({reason})")
        }
        CertificateVerdict::Failed { reason } => format!("verdict: failed ({reason})"),
    };
    lines.push(verdict_line);

    let exit = u8::from(matches!(cert.verdict, CertificateVerdict::Failed { .. }));
    let (seq_v, file_v) = source_fields(seq, spec_file);
    Ok(CommandOutcome {
        resolved: json!({
            "subcommand": "certify", "seq": seq_v, "spec_file": file_v, "r": r, "eta": eta,
            "n0_cap": n0_cap, "initial_cap": initial_cap, "initial_floor": initial_floor,
        }),
        payload: json!({
            "sequence": label,
            "recurrence": serde_json::to_value(&rec).unwrap(),
            "certificate": serde_json::to_value(&cert).unwrap(),
        }),
        table: lines.join("\n") + "\n",
        exit,
    })
}

// ---------------------------------------------------------------------------
// hankel / enumerate / conjecture
// ---------------------------------------------------------------------------

fn cmd_hankel(
    seq: &Option<String>,
    spec_file: &Option<PathBuf>,
    upto_order: usize,
    offsets: &[i64],
) -> Result<CommandOutcome, CliError> {
    if upto_order == 0 {
        return Err(CliError::Usage("--upto-order must be at least 1".into()));
    }
    let (label, rec) = load_recurrence(seq, spec_file)?;
    let need = 2 * upto_order - 1;
    let mut tables = Vec::new();
    let mut lines = vec![format!("sequence {label}  first {upto_order} minors")];
    for &k in offsets {
        if k < 0 {
            return Err(CliError::Usage(format!(
                "offset {k} reaches before the first defined term"
            )));
        }
        let start = rec.start_index + k;
        let full = extend_sequence(&rec, start + need as i64 - 1)?;
        let window = SequenceWindow {
            start_index: start,
            terms: full.terms[k as usize..k as usize + need].to_vec(),
        };
        let minors = hankel_leading_minors(&window, upto_order)?;
        let first_negative = minors.iter().position(|v| v.is_negative()).map(|i| i + 1);
        let ms = rats_strings(&minors);
        lines.push(match first_negative {
            Some(ord) => format!(
                "offset {k} (a_{start}..): {}  — first negative at order {ord}",
                ms.join(", ")
            ),
            None => format!("offset {k} (a_{start}..): {}", ms.join(", ")),
        });
        tables.push(json!({
            "offset": k,
            "start_index": start,
            "minors": ms,
            "first_negative_order": first_negative,
        }));
    }
    let (seq_v, file_v) = source_fields(seq, spec_file);
    Ok(CommandOutcome {
        resolved: json!({
            "subcommand": "hankel", "seq": seq_v, "spec_file": file_v,
            "upto_order": upto_order, "offsets": offsets,
        }),
        payload: json!({"sequence": label, "upto_order": upto_order, "tables": tables}),
        table: lines.join("\n") + "\n",
        exit: 0,
    })
}

fn cmd_enumerate(n: i64, cap: i64) -> Result<CommandOutcome, CliError> {
    if n > cap {
        return Err(CliError::Core(Error::Resource(format!(
            "enumeration capped at n <= {cap} (raise with --cap)"
        ))));
    }
    let brute = enumerate_baxter_descents(n)?;
    let formula = baxter_table(n)?;
    let matches = brute.coeffs == formula.coeffs;
    let brute_strings: Vec<String> = brute.coeffs.iter().map(|c| c.to_string()).collect();
    let lines = vec![
        format!("n = {n}"),
        format!("enumerated descent table: {}", brute_strings.join(" ")),
        format!("total B_{n} = {}", brute.total()),
        format!("matches formula: {matches}"),
    ];
    Ok(CommandOutcome {
        resolved: json!({"subcommand": "enumerate", "n": n, "cap": cap}),
        payload: json!({
            "n": n,
            "coefficients": brute_strings,
            "total": brute.total().to_string(),
            "formula_coefficients": formula.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "matches_formula": matches,
            "palindromic": brute.is_palindromic(),
        }),
        table: lines.join("\n") + "\n",
        exit: u8::from(!matches),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_conjecture(
    id: u32,
    q: Option<(i64, i64)>,
    n: Option<(i64, i64)>,
    m: &Option<Vec<i64>>,
    r: Option<u32>,
    upto: Option<i64>,
    cap: Option<i64>,
) -> Result<CommandOutcome, CliError> {
    match id {
        // Strict Sturm scans of {H_n^[m](q,t)} over a q grid.
        1 => {
            let (qlo, qhi) = q.unwrap_or((1, 10));
            let (nlo, nhi) = n.unwrap_or((1, 12));
            let ms = m.clone().unwrap_or_else(|| vec![2, 3]);
            let mut scans = Vec::new();
            let mut lines = vec![format!(
                "strict Sturm scan  q = {qlo}..{qhi}  n = {nlo}..{nhi}  m in {ms:?}"
            )];
            let mut all_ok = true;
            for &mv in &ms {
                for qv in qlo..=qhi {
                    let family = (nlo..=nhi)
                        .map(|nn| hoggatt_qt(nn, mv, qv))
                        .collect::<Result<Vec<_>, _>>()?;
                    let check = check_family_sturm(&family, SturmMode::Strict)?;
                    all_ok &= check.ok;
                    let failure = check.first_failure.map(|i| {
                        json!({
                            "lower_n": nlo + i as i64,
                            "upper_n": nlo + i as i64 + 1,
                            "relation": format!("{:?}", check.per_pair[i].relation),
                        })
                    });
                    lines.push(format!("m = {mv}, q = {qv}: ok = {}", check.ok));
                    scans.push(json!({"m": mv, "q": qv, "ok": check.ok, "first_failure": failure}));
                }
            }
            lines.push(format!("all strict: {all_ok}"));
            Ok(CommandOutcome {
                resolved: json!({
                    "subcommand": "conjecture", "id": 1,
                    "q": [qlo, qhi], "n": [nlo, nhi], "m": ms,
                }),
                payload: json!({"id": 1, "ok": all_ok, "scans": scans}),
                table: lines.join("\n") + "\n",
                exit: u8::from(!all_ok),
            })
        }

        // Exact initial r-log-convexity scan of the Baxter numbers.
        2 => {
            let r = r.unwrap_or(3);
            let upto = upto.unwrap_or(1000);
            let chk = check_initial_rlogconvexity(&PRecurrence::baxter(), r, upto)?;
            let lines = vec![
                format!("baxter exact scan  r = {r}  upto = {upto}"),
                format!("ok = {}  strict = {}", chk.ok, chk.strict),
                match chk.first_failure {
                    Some((level, index)) => format!("first failure: L^{level} at n = {index}"),
                    None => "no failures".into(),
                },
            ];
            Ok(CommandOutcome {
                resolved: json!({
                    "subcommand": "conjecture", "id": 2, "r": r, "upto": upto,
                }),
                payload: json!({
                    "id": 2, "sequence": "baxter", "r": r, "upto": upto,
                    "ok": chk.ok, "strict": chk.strict,
                    "first_failure": chk.first_failure.map(|(level, index)| json!({
                        "level": level, "index": index,
                    })),
                }),
                table: lines.join("\n") + "\n",
                exit: u8::from(!chk.ok),
            })
        }

        // Log-convexity of directly computed H_n^[m](1,1) terms.
        3 => {
            let ms = m.clone().unwrap_or_else(|| vec![4]);
            let r = r.unwrap_or(1);
            let cap = cap.unwrap_or(5000);
            let mut scans = Vec::new();
            let mut lines = vec![format!("H^[m](1,1) term scan  r = {r}  terms 1..{cap}")];
            let mut all_ok = true;
            for &mv in &ms {
                let terms = hoggatt_ones_sequence(mv, cap)?;
                let window = SequenceWindow {
                    start_index: 1,
                    terms: terms.into_iter().map(Rat::from).collect(),
                };
                let chk = check_window_rlogconvexity(&window, r)?;
                all_ok &= chk.ok;
                lines.push(format!(
                    "m = {mv}: ok = {}  strict = {}",
                    chk.ok, chk.strict
                ));
                scans.push(json!({
                    "m": mv, "ok": chk.ok, "strict": chk.strict,
                    "first_failure": chk.first_failure.map(|(level, index)| json!({
                        "level": level, "index": index,
                    })),
                }));
            }
            Ok(CommandOutcome {
                resolved: json!({
                    "subcommand": "conjecture", "id": 3, "m": ms, "r": r, "cap": cap,
                }),
                payload: json!({"id": 3, "r": r, "upto": cap, "ok": all_ok, "scans": scans}),
                table: lines.join("\n") + "\n",
                exit: u8::from(!all_ok),
            })
        }

        other => Err(CliError::Usage(format!(
            "unknown conjecture id {other} (have: 1, 2, 3)"
        ))),
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_lookup_and_rejection() {
        let (label, rec) = load_recurrence(&Some("catalan".into()), &None).unwrap();
        assert_eq!(label, "catalan");
        assert_eq!(rec.order, 1);
        assert!(load_recurrence(&Some("fibonacci".into()), &None).is_err());
        assert!(load_recurrence(&None, &None).is_err());
    }

    #[test]
    fn family_defaults_fill_in() {
        let (m, q) = resolve_family_params(Family::Hoggatt, None, None).unwrap();
        assert_eq!((m, q), (Some(3), None));
        assert!(resolve_family_params(Family::HoggattQt, Some(2), None).is_err());
        let p = family_poly(Family::Baxter, 3, None, None).unwrap();
        assert_eq!(coeff_strings(&p), ["1", "4", "1"]);
    }

    #[test]
    fn inconclusive_maps_to_verdict_exit() {
        let e = CliError::Core(Error::Inconclusive("x".into()));
        assert_eq!(e.exit_code(), 1);
        let e = CliError::Core(Error::Domain("x".into()));
        assert_eq!(e.exit_code(), 2);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
    }

    #[test]
    fn unknown_conjecture_id_is_usage() {
        match cmd_conjecture(9, None, None, &None, None, None, None) {
            Err(err) => assert_eq!(err.exit_code(), 2),
            Ok(_) => panic!("id 9 should be rejected"),
        }
    }
}
