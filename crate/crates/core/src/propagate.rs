//! Propagating defect classifications through classical constructions:
//! extension by a parity coordinate, augmentation by the all-one word,
//! expurgation to the even-weight subcode, and the two-block `(u, u+v)`
//! construction.
//!
//! Each `*_report` operation first *predicts* the parameters and both
//! Singleton defects of the derived code from closed identities:
//!
//! * extension (binary, all-one word not in the dual): the distance grows
//!   exactly on odd distances, and the dual distance follows from the
//!   augmented dual via `d(A(C*)) = min(d*, n - maxweight(C*))`;
//! * expurgation (binary, some odd-weight word, even distance): the
//!   derived code is `[n, k-1, d]` and its dual is the augmented dual;
//! * `(u, u+v)`: the distance is exactly `min(2 d1, d2)` and the dual
//!   distance exactly `min(d1*, 2 d2*)`.
//!
//! It then classifies the constructed code exhaustively and insists the
//! two agree; a mismatch is reported as an internal inconsistency.

use std::fmt;

use crate::codecore::{EnumOpts, LinearCode, LmdsReport, Verdict};
use crate::gf::Elem;
use crate::{Error, Result};

/// Parameters and defects a construction is known to produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub defect: u32,
    pub dual_defect: u32,
    pub verdict: Verdict,
    /// Which identity or construction case produced the prediction.
    pub via: String,
}

impl Prediction {
    fn new(n: i64, k: i64, d: i64, defect: i64, dual_defect: i64, via: String) -> Result<Prediction> {
        if n <= 0 || k <= 0 || d <= 0 || defect < 0 || dual_defect < 0 {
            return Err(Error::Inconsistent(format!(
                "predicted an impossible code: [{n},{k},{d}] defects {defect}/{dual_defect}"
            )));
        }
        Ok(Prediction {
            n: n as usize,
            k: k as usize,
            d: d as usize,
            defect: defect as u32,
            dual_defect: dual_defect as u32,
            verdict: Verdict::from_defects(defect as u32, dual_defect as u32),
            via,
        })
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}] defect={} dual_defect={} verdict={} ({})",
            self.n, self.k, self.d, self.defect, self.dual_defect, self.verdict, self.via
        )
    }
}

/// One construction step: the classified inputs, the prediction (when the
/// governing identities apply), and the classified result.
#[derive(Clone, Debug)]
pub struct PropagationOutcome {
    pub op: String,
    pub inputs: Vec<LmdsReport>,
    pub predicted: Option<Prediction>,
    pub observed: LmdsReport,
    /// For the self-dual-pair construction: whether the result and its
    /// dual share a weight distribution.
    pub fsd: Option<bool>,
    pub result: LinearCode,
}

fn reconcile(outcome: &PropagationOutcome) -> Result<()> {
    if let Some(p) = &outcome.predicted {
        let o = &outcome.observed;
        if (p.n, p.k, p.d, p.defect, p.dual_defect) != (o.n, o.k, o.d, o.defect, o.dual_defect) {
            return Err(Error::Inconsistent(format!(
                "{}: predicted {p} but observed {o}",
                outcome.op
            )));
        }
    }
    Ok(())
}

/// Append an overall parity coordinate: each word gains `-(sum of its
/// coordinates)` so that every extended word sums to zero.
pub fn extend(code: &LinearCode) -> Result<LinearCode> {
    let f = code.field();
    let rows = code
        .rows()
        .iter()
        .map(|row| {
            let sum = row.iter().fold(0 as Elem, |acc, &x| f.add(acc, x));
            let mut out = row.clone();
            out.push(f.neg(sum));
            out
        })
        .collect();
    LinearCode::from_rows(f.clone(), rows)
}

/// Adjoin the all-one word (binary; it must not already be present).
pub fn augment(code: &LinearCode) -> Result<LinearCode> {
    binary_only(code, "augmentation")?;
    let ones = vec![1 as Elem; code.n()];
    if code.contains(&ones) {
        return Err(Error::Degenerate("the all-one word is already in the code".into()));
    }
    let mut rows = code.rows().to_vec();
    rows.push(ones);
    LinearCode::from_rows(code.field().clone(), rows)
}

/// Keep the even-weight words (binary; some word must have odd weight).
pub fn expurgate(code: &LinearCode) -> Result<LinearCode> {
    binary_only(code, "expurgation")?;
    let (odd, even): (Vec<_>, Vec<_>) = code
        .rows()
        .iter()
        .cloned()
        .partition(|row| row.iter().filter(|&&x| x != 0).count() % 2 == 1);
    let Some(pivot) = odd.first() else {
        return Err(Error::Degenerate("every codeword already has even weight".into()));
    };
    let mut rows = even;
    for other in &odd[1..] {
        rows.push(other.iter().zip(pivot).map(|(&a, &b)| a ^ b).collect());
    }
    if rows.is_empty() {
        return Err(Error::Degenerate("expurgation empties the code".into()));
    }
    LinearCode::from_rows(code.field().clone(), rows)
}

/// The `(u, u+v)` construction of two same-length codes over one field.
pub fn uuv(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    if c1.field() != c2.field() {
        return Err(Error::Unsupported("the two codes live over different fields".into()));
    }
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch { left: c1.n(), right: c2.n() });
    }
    let n = c1.n();
    let mut rows = Vec::with_capacity(c1.k() + c2.k());
    for g in c1.rows() {
        let mut row = g.clone();
        row.extend_from_slice(g);
        rows.push(row);
    }
    for h in c2.rows() {
        let mut row = vec![0 as Elem; n];
        row.extend_from_slice(h);
        rows.push(row);
    }
    let code = LinearCode::from_rows(c1.field().clone(), rows)?;
    if code.k() != c1.k() + c2.k() {
        return Err(Error::Inconsistent("the two blocks failed to stay independent".into()));
    }
    Ok(code)
}

fn binary_only(code: &LinearCode, what: &str) -> Result<()> {
    if code.field().q() != 2 {
        return Err(Error::Unsupported(format!("{what} is defined for binary codes")));
    }
    Ok(())
}

/// `d(A(C*))`, the distance of the augmented dual, plus the information
/// needed for the extension/expurgation identities.  Requires the all-one
/// word to lie outside the dual (otherwise the derived codes degenerate).
struct DualSide {
    /// `min(d*, n - maxweight(C*))`: distance of the augmented dual.
    augmented_d: usize,
}

fn dual_side(code: &LinearCode, opts: &EnumOpts) -> Result<(LmdsReport, DualSide)> {
    binary_only(code, "the parity-extension identity")?;
    let ones = vec![1 as Elem; code.n()];
    let dual = code.dual()?;
    if dual.contains(&ones) {
        return Err(Error::Degenerate(
            "the all-one word lies in the dual: the extension gains a dead coordinate".into(),
        ));
    }
    let (_, dual_wd) = code.wd_pair(opts)?;
    let report = code.classify(opts)?;
    let max_dual = dual_wd.max_weight().expect("a nonzero dual has a nonzero weight");
    let augmented_d = report.dual_d.min(code.n() - max_dual);
    Ok((report, DualSide { augmented_d }))
}

/// Extend a binary code by a parity coordinate and reconcile the result
/// with the closed prediction.
pub fn extend_report(code: &LinearCode, opts: &EnumOpts) -> Result<PropagationOutcome> {
    let (before, side) = dual_side(code, opts)?;
    let (n, k) = (code.n() as i64, code.k() as i64);
    let d = before.d as i64;
    let d_ext = if before.d % 2 == 0 { d } else { d + 1 };
    // Distance of the extended dual: one more than the augmented dual when
    // the augmentation lowered the dual distance, unchanged otherwise.
    let d_ext_dual = if side.augmented_d < before.dual_d {
        side.augmented_d as i64 + 1
    } else {
        before.dual_d as i64
    };
    let parity = if before.d % 2 == 0 { "even" } else { "odd" };
    let predicted = Prediction::new(
        n + 1,
        k,
        d_ext,
        n + 1 - k - d_ext + 1,
        k - d_ext_dual + 1,
        format!("parity extension, {parity} distance"),
    )?;
    let result = extend(code)?;
    let observed = result.classify(opts)?;
    let outcome = PropagationOutcome {
        op: "extend".into(),
        inputs: vec![before],
        predicted: Some(predicted),
        observed,
        fsd: None,
        result,
    };
    reconcile(&outcome)?;
    Ok(outcome)
}

/// Expurgate a binary code to its even-weight subcode and reconcile with
/// the closed prediction (available when the distance is even).
pub fn expurgate_report(code: &LinearCode, opts: &EnumOpts) -> Result<PropagationOutcome> {
    let (before, side) = dual_side(code, opts)?;
    let (n, k) = (code.n() as i64, code.k() as i64);
    let predicted = if before.d % 2 == 0 {
        // The even-weight subcode keeps the distance, and its dual is
        // exactly the augmented dual.
        Some(Prediction::new(
            n,
            k - 1,
            before.d as i64,
            n - (k - 1) - before.d as i64 + 1,
            (k - 1) - side.augmented_d as i64 + 1,
            "even-weight subcode with augmented dual".into(),
        )?)
    } else {
        None
    };
    let result = expurgate(code)?;
    let observed = result.classify(opts)?;
    let outcome = PropagationOutcome {
        op: "expurgate".into(),
        inputs: vec![before],
        predicted,
        observed,
        fsd: None,
        result,
    };
    reconcile(&outcome)?;
    Ok(outcome)
}

/// Which of the four parameter regimes of the two-code construction hold
/// for classified inputs (ties make several apply at once).
fn uuv_cases(r1: &LmdsReport, r2: &LmdsReport) -> String {
    let (d1, d2) = (2 * r1.d, r2.d);
    let (e1, e2) = (r1.dual_d, 2 * r2.dual_d);
    let mut cases = Vec::new();
    if d1 <= d2 && e2 <= e1 {
        cases.push("1");
    }
    if d1 <= d2 && e2 >= e1 {
        cases.push("2");
    }
    if d1 >= d2 && e2 <= e1 {
        cases.push("3");
    }
    if d1 >= d2 && e2 >= e1 {
        cases.push("4");
    }
    format!("case {}", cases.join(","))
}

/// Build `(u, u+v)` from two classified codes and reconcile with the exact
/// distance identities `d = min(2 d1, d2)`, `d* = min(d1*, 2 d2*)`.
pub fn uuv_report(c1: &LinearCode, c2: &LinearCode, opts: &EnumOpts) -> Result<PropagationOutcome> {
    let r1 = c1.classify(opts)?;
    let r2 = c2.classify(opts)?;
    let n = c1.n() as i64;
    let (k1, k2) = (c1.k() as i64, c2.k() as i64);
    let d = (2 * r1.d).min(r2.d) as i64;
    let d_dual = r1.dual_d.min(2 * r2.dual_d) as i64;
    let predicted = Prediction::new(
        2 * n,
        k1 + k2,
        d,
        2 * n - (k1 + k2) - d + 1,
        (k1 + k2) - d_dual + 1,
        uuv_cases(&r1, &r2),
    )?;
    let result = uuv(c1, c2)?;
    let observed = result.classify(opts)?;
    let outcome = PropagationOutcome {
        op: "uuv".into(),
        inputs: vec![r1, r2],
        predicted: Some(predicted),
        observed,
        fsd: None,
        result,
    };
    reconcile(&outcome)?;
    Ok(outcome)
}

/// Whether the code and its dual share one weight distribution.
pub fn fsd_check(code: &LinearCode, opts: &EnumOpts) -> Result<bool> {
    let (wd, dual_wd) = code.wd_pair(opts)?;
    Ok(wd.counts() == dual_wd.counts())
}

/// Build `(u, u+v)` from a code and its own dual.  The result is always
/// formally self-dual (checked), with parameters from the same identities.
pub fn uuv_self_pair_report(code: &LinearCode, opts: &EnumOpts) -> Result<PropagationOutcome> {
    let dual = code.dual()?;
    let mut outcome = uuv_report(code, &dual, opts)?;
    outcome.op = "uuv-self-dual-pair".into();
    let fsd = fsd_check(&outcome.result, opts)?;
    if !fsd {
        return Err(Error::Inconsistent(
            "a code paired with its dual must be formally self-dual".into(),
        ));
    }
    outcome.fsd = Some(fsd);
    Ok(outcome)
}
