//! Verification suites that compare the closed formulas with explicit
//! group-action computations. Reports are deterministic: cases run in a
//! fixed order and carry plain-text details.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::burnside::{AdditiveMapMatrix, BurnsideElement};
use crate::error::{Error, Result};
use crate::groups::{
    wreath_order, Caps, ConjugacyClassTable, GroupHom, PermGroup, SubgroupRef, TableRef,
};
use crate::gsets::FiniteGSet;
use crate::induced::{
    gcd_property, lift_map, oracle_restriction_parks, oracle_transfer_parks, restriction_matrix,
    restriction_parks_hom, romero_commutes, subgroup_table, transfer_matrix,
    transfer_parks_inclusion, transfer_parks_inclusion_cosets, transfer_parks_trivial,
    transfer_parks_trivial_tuples, FrobeniusWielandt,
};
use crate::partitions::{enumerate_parts, DecoratedPartition};
use crate::wreath_power::{
    from_parks, marks_transfer_product, oracle_transfer_product, parks_char, parks_char_basis,
    parks_power_char, power_op, AAElement, Level, ParksVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub suite: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub group: String,
    pub n: usize,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            writeln!(f, "{} {} {}: {}", c.status, c.suite, c.name, c.detail)?;
        }
        write!(
            f,
            "{} group={} n={}: {} passed, {} failed, {} skipped",
            if self.passed() { "PASS" } else { "FAIL" },
            self.group,
            self.n,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Retract,
    FixedPoints,
    PowerOracle,
    ParksRing,
    Pullback,
    Transfers,
    Fw,
    Gcd,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Retract,
        Suite::FixedPoints,
        Suite::PowerOracle,
        Suite::ParksRing,
        Suite::Pullback,
        Suite::Transfers,
        Suite::Fw,
        Suite::Gcd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Retract => "retract",
            Suite::FixedPoints => "fixed-points",
            Suite::PowerOracle => "power-oracle",
            Suite::ParksRing => "parks-ring",
            Suite::Pullback => "pullback",
            Suite::Transfers => "transfers",
            Suite::Fw => "fw",
            Suite::Gcd => "gcd",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite `{s}`")))
    }
}

/// What to verify: a group, the largest degree and the enumeration caps.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub table: TableRef,
    pub n: usize,
    pub caps: Caps,
    /// Largest coordinate of the elements fed to the power-operation oracle.
    pub max_coord: u32,
    /// Largest explicit product set built for internal products.
    pub max_product_points: usize,
}

impl VerifyConfig {
    pub fn new(table: TableRef, n: usize, caps: Caps) -> Self {
        VerifyConfig {
            table,
            n,
            caps,
            max_coord: 2,
            max_product_points: 20_000,
        }
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
    Info(String),
}

fn pass_or_fail(failure: Option<String>, ok: String) -> Outcome {
    match failure {
        Some(f) => Outcome::Fail(f),
        None => Outcome::Pass(ok),
    }
}

fn case(suite: Suite, name: impl Into<String>, body: impl FnOnce() -> Result<Outcome>) -> Case {
    let (status, detail) = match body() {
        Ok(Outcome::Pass(d)) => (Status::Pass, d),
        Ok(Outcome::Fail(d)) => (Status::Fail, d),
        Ok(Outcome::Info(d)) => (Status::Info, d),
        Err(e @ Error::CapExceeded { .. }) => (Status::Skip, e.to_string()),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    Case {
        suite: suite.name().into(),
        name: name.into(),
        status,
        detail,
    }
}

fn render(table: &TableRef, lambda: &DecoratedPartition) -> String {
    lambda.render(|x| table.label(x).to_string())
}

/// Runs one suite (or all of them, in order).
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Report {
    let mut cases = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    for s in suites {
        cases.extend(match s {
            Suite::Retract => retract(cfg),
            Suite::FixedPoints => fixed_points(cfg),
            Suite::PowerOracle => power_oracle(cfg),
            Suite::ParksRing => parks_ring(cfg),
            Suite::Pullback => pullback(cfg),
            Suite::Transfers => transfers(cfg),
            Suite::Fw => fw(cfg),
            Suite::Gcd => gcd(cfg),
            Suite::All => unreachable!(),
        });
    }
    Report {
        group: cfg.table.group().label(),
        n: cfg.n,
        cases,
    }
}

fn level(cfg: &VerifyConfig, table: &TableRef, m: usize) -> Result<Level> {
    Level::new(table.clone(), m, &cfg.caps)
}

fn retract(cfg: &VerifyConfig) -> Vec<Case> {
    (1..=cfg.n)
        .map(|m| {
            case(Suite::Retract, format!("n={m}"), || {
                let lv = level(cfg, &cfg.table, m)?;
                for lam in lv.parts() {
                    let alpha = lv.alpha(lam)?;
                    let back = lv.beta(&alpha)?;
                    if &back != lam {
                        return Ok(Outcome::Fail(format!(
                            "β(α({})) = {}",
                            render(&cfg.table, lam),
                            render(&cfg.table, &back)
                        )));
                    }
                    if lv.hull(&alpha)? != alpha {
                        return Ok(Outcome::Fail(format!(
                            "hull(α({})) ≠ α",
                            render(&cfg.table, lam)
                        )));
                    }
                }
                Ok(Outcome::Pass(format!(
                    "{} partitions checked",
                    lv.parts().len()
                )))
            })
        })
        .collect()
}

fn fixed_points(cfg: &VerifyConfig) -> Vec<Case> {
    let t = &cfg.table;
    let mut out = Vec::new();
    for m in 1..=cfg.n {
        for x in 0..t.len() {
            out.push(case(
                Suite::FixedPoints,
                format!("n={m} X=[{}/{}]", t.group().label(), t.label(x)),
                || {
                    let lv = level(cfg, t, m)?;
                    let y = lv.power_gset(&FiniteGSet::coset_space(t.rep(x)))?;
                    let row = &t.marks()[x];
                    for kappa in lv.parts() {
                        let count = BigInt::from(y.fixed_point_count(&lv.alpha(kappa)?)?);
                        let mut expected = BigInt::one();
                        for ((k, _), mult) in kappa.parts() {
                            expected *= num_traits::pow(BigInt::from(row[k]), mult);
                        }
                        if count != expected {
                            return Ok(Outcome::Fail(format!(
                                "|(X^{m})^α({})| = {count}, product formula gives {expected}",
                                render(t, kappa)
                            )));
                        }
                    }
                    Ok(Outcome::Pass(format!(
                        "{} partitions checked",
                        lv.parts().len()
                    )))
                },
            ));
        }
    }
    out
}

/// All coordinate vectors with entries in `0..=max`.
fn small_effective(table: &TableRef, max: u32) -> Vec<BurnsideElement> {
    let c = table.len();
    let mut out = Vec::new();
    let mut v = vec![0i64; c];
    loop {
        out.push(BurnsideElement::from_coords(table.clone(), &v));
        let mut i = 0;
        while i < c {
            v[i] += 1;
            if v[i] <= max as i64 {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == c {
            return out;
        }
    }
}

fn power_oracle(cfg: &VerifyConfig) -> Vec<Case> {
    let t = &cfg.table;
    (1..=cfg.n)
        .map(|m| {
            case(Suite::PowerOracle, format!("n={m}"), || {
                let lv = level(cfg, t, m)?;
                let (mut checked, mut skipped) = (0, 0);
                for x in small_effective(t, cfg.max_coord) {
                    let size = x.cardinality();
                    if num_traits::pow(size, m) > BigInt::from(cfg.caps.max_points) {
                        skipped += 1;
                        continue;
                    }
                    let oracle = lv.oracle_power_op(&x)?;
                    let formula = power_op(&x, m)?;
                    if oracle != formula {
                        return Ok(Outcome::Fail(format!(
                            "P_{m}({x}): oracle {oracle}, formula {formula}"
                        )));
                    }
                    checked += 1;
                }
                Ok(Outcome::Pass(format!(
                    "{checked} elements checked, {skipped} above the point cap"
                )))
            })
        })
        .collect()
}

fn parks_ring(cfg: &VerifyConfig) -> Vec<Case> {
    let t = &cfg.table;
    let mut out = Vec::new();
    for m in 1..=cfg.n {
        out.push(case(Suite::ParksRing, format!("star n={m}"), || {
            let mut checked = 0;
            for i in 1..m {
                for l in enumerate_parts(t.len(), i) {
                    for r in enumerate_parts(t.len(), m - i) {
                        let (a, b) = (
                            AAElement::basis(t.clone(), l.clone()),
                            AAElement::basis(t.clone(), r.clone()),
                        );
                        let (fa, fb) = (parks_char(&a), parks_char(&b));
                        let lhs = parks_char(&a.star(&b)?);
                        if lhs != fa.star(&fb)? || lhs != fa.star_by_compositions(&fb)? {
                            return Ok(Outcome::Fail(format!(
                                "χ(⟨{}⟩★⟨{}⟩) ≠ χ★χ",
                                render(t, &l),
                                render(t, &r)
                            )));
                        }
                        checked += 1;
                    }
                }
            }
            Ok(Outcome::Pass(format!("{checked} basis pairs checked")))
        }));
        out.push(case(Suite::ParksRing, format!("inverse n={m}"), || {
            let parts = enumerate_parts(t.len(), m);
            for l in &parts {
                let x = AAElement::basis(t.clone(), l.clone());
                if from_parks(&parks_char(&x))? != x {
                    return Ok(Outcome::Fail(format!(
                        "χ⁻¹χ⟨{}⟩ ≠ ⟨{}⟩",
                        render(t, l),
                        render(t, l)
                    )));
                }
            }
            Ok(Outcome::Pass(format!(
                "{} basis elements checked",
                parts.len()
            )))
        }));
        out.push(case(Suite::ParksRing, format!("product n={m}"), || {
            let lv = level(cfg, t, m)?;
            let order = wreath_order(t.group().order(), m);
            let (mut checked, mut skipped) = (0, 0);
            for (i, l) in lv.parts().iter().enumerate() {
                for r in &lv.parts()[i..] {
                    let size = (order / lv.alpha(l)?.order() as u128)
                        * (order / lv.alpha(r)?.order() as u128);
                    if size > cfg.max_product_points as u128 {
                        skipped += 1;
                        continue;
                    }
                    let (a, b) = (
                        AAElement::basis(t.clone(), l.clone()),
                        AAElement::basis(t.clone(), r.clone()),
                    );
                    let prod = lv.internal_product(&a, &b)?;
                    if parks_char(&prod) != parks_char(&a).pointwise(&parks_char(&b))? {
                        return Ok(Outcome::Fail(format!(
                            "χ(⟨{}⟩·⟨{}⟩) ≠ χ·χ",
                            render(t, l),
                            render(t, r)
                        )));
                    }
                    checked += 1;
                }
            }
            Ok(Outcome::Pass(format!(
                "{checked} basis pairs checked, {skipped} above the product size limit"
            )))
        }));
    }
    out
}

fn pullback(cfg: &VerifyConfig) -> Vec<Case> {
    let t = &cfg.table;
    let mut out = Vec::new();
    for m in 1..=cfg.n {
        out.push(case(Suite::Pullback, format!("square n={m}"), || {
            let lv = level(cfg, t, m)?;
            for l in lv.parts() {
                let x = AAElement::basis(t.clone(), l.clone());
                let e = lv.embed(&x)?;
                if e.chi() != lv.beta_pullback(&parks_char(&x))? {
                    return Ok(Outcome::Fail(format!("χ(embed ⟨{}⟩) ≠ β^*χ", render(t, l))));
                }
                if lv.r_map(&e)? != x {
                    return Ok(Outcome::Fail(format!(
                        "r(embed ⟨{}⟩) ≠ ⟨{}⟩",
                        render(t, l),
                        render(t, l)
                    )));
                }
            }
            Ok(Outcome::Pass(format!(
                "{} basis elements, {} wreath classes",
                lv.parts().len(),
                lv.wreath_table()?.len()
            )))
        }));
        for i in 1..m {
            out.push(case(
                Suite::Pullback,
                format!("transfer product {i}+{}", m - i),
                || {
                    let (li, lj, ln) =
                        (level(cfg, t, i)?, level(cfg, t, m - i)?, level(cfg, t, m)?);
                    let mut checked = 0;
                    for l in li.parts() {
                        for r in lj.parts() {
                            let f = ParksVector::indicator(t.clone(), l.clone());
                            let g = ParksVector::indicator(t.clone(), r.clone());
                            let lhs = ln.beta_pullback(&f.star(&g)?)?;
                            let rhs = marks_transfer_product(
                                &li.beta_pullback(&f)?,
                                &lj.beta_pullback(&g)?,
                                &li,
                                &lj,
                                &ln,
                            )?;
                            if lhs != rhs {
                                return Ok(Outcome::Fail(format!(
                                    "β^*(𝟙_{}★𝟙_{}) ≠ β^*★β^*",
                                    render(t, l),
                                    render(t, r)
                                )));
                            }
                            let (a, b) = (
                                AAElement::basis(t.clone(), l.clone()),
                                AAElement::basis(t.clone(), r.clone()),
                            );
                            let oracle = oracle_transfer_product(
                                &li.embed(&a)?,
                                &lj.embed(&b)?,
                                &li,
                                &lj,
                                &ln,
                            )?;
                            if oracle != ln.embed(&a.star(&b)?)? {
                                return Ok(Outcome::Fail(format!(
                                    "Tr(⟨{}⟩⊠⟨{}⟩) ≠ ⟨{}⟩★⟨{}⟩",
                                    render(t, l),
                                    render(t, r),
                                    render(t, l),
                                    render(t, r)
                                )));
                            }
                            checked += 1;
                        }
                    }
                    Ok(Outcome::Pass(format!("{checked} pairs checked")))
                },
            ));
        }
    }
    out
}

/// Checks `ŘF(Pₙ(f)) = Pₙ(F(f))` for the characters of all basis sets and
/// `ŘF(f★g) = ŘF(f)★ŘF(g)` for all indicator pairs of degrees summing to
/// `n`. Returns a description of the first failure.
pub fn check_lift_identities(m: &AdditiveMapMatrix, n: usize) -> Result<Option<String>> {
    let src = m.source();
    let lifts: Vec<_> = (0..=n).map(|k| lift_map(m, k)).collect();
    for x in 0..src.len() {
        let f = BurnsideElement::basis(src.clone(), x).chi();
        if lifts[n].apply(&parks_power_char(&f, n))? != parks_power_char(&m.apply(&f)?, n) {
            return Ok(Some(format!(
                "ŘF(P_{n}(χ[{}])) ≠ P_{n}(F(χ[{}]))",
                src.label(x),
                src.label(x)
            )));
        }
    }
    for i in 0..=n {
        for l in enumerate_parts(src.len(), i) {
            for r in enumerate_parts(src.len(), n - i) {
                let f = ParksVector::indicator(src.clone(), l.clone());
                let g = ParksVector::indicator(src.clone(), r.clone());
                if lifts[n].apply(&f.star(&g)?)?
                    != lifts[i].apply(&f)?.star(&lifts[n - i].apply(&g)?)?
                {
                    return Ok(Some(format!(
                        "ŘF(𝟙_{}★𝟙_{}) ≠ ŘF★ŘF",
                        render(src, &l),
                        render(src, &r)
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// The class table of the trivial group.
pub fn trivial_table(caps: &Caps) -> Result<TableRef> {
    Ok(Arc::new(ConjugacyClassTable::new(
        Arc::new(PermGroup::trivial()),
        caps,
    )?))
}

fn transfers(cfg: &VerifyConfig) -> Vec<Case> {
    let t = &cfg.table;
    let caps = &cfg.caps;
    let mut out = Vec::new();
    for m in 1..=cfg.n {
        out.push(case(Suite::Transfers, format!("G->e n={m}"), || {
            let e = trivial_table(caps)?;
            let phi = GroupHom::to_trivial(t.group().clone(), e.group().clone());
            let coef = transfer_parks_trivial(t, &e, m)?;
            let matrix = transfer_matrix(&phi, t, &e, caps)?;
            if coef != transfer_parks_trivial_tuples(t, &e, m)? {
                return Ok(Outcome::Fail("coefficient path ≠ tuple sum".into()));
            }
            if coef != lift_map(&matrix, m) {
                return Ok(Outcome::Fail("coefficient path ≠ lifted matrix".into()));
            }
            if let Some(f) = check_lift_identities(&matrix, m)? {
                return Ok(Outcome::Fail(f));
            }
            let (lg, le) = (level(cfg, t, m)?, level(cfg, &e, m)?);
            for l in lg.parts() {
                let y = FiniteGSet::coset_space(&lg.alpha(l)?);
                if oracle_transfer_parks(&phi, &lg, &le, &y)?
                    != coef.apply(&parks_char_basis(t, l))?
                {
                    return Ok(Outcome::Fail(format!(
                        "deflation of ⟨{}⟩ disagrees",
                        render(t, l)
                    )));
                }
            }
            Ok(Outcome::Pass(format!(
                "{} basis elements deflated",
                lg.parts().len()
            )))
        }));
        for h in 0..t.len() {
            out.push(case(
                Suite::Transfers,
                format!("[{}] n={m}", t.label(h)),
                || {
                    let (ht, inc) = subgroup_table(t.rep(h), caps)?;
                    let coef = transfer_parks_inclusion(&inc, &ht, t, m)?;
                    if coef != transfer_parks_inclusion_cosets(&inc, &ht, t, m)? {
                        return Ok(Outcome::Fail("coefficient path ≠ coset sum".into()));
                    }
                    let tr = transfer_matrix(&inc, &ht, t, caps)?;
                    if coef != lift_map(&tr, m) {
                        return Ok(Outcome::Fail(
                            "coefficient path ≠ lifted transfer matrix".into(),
                        ));
                    }
                    let res = restriction_parks_hom(&inc, &ht, t, m)?;
                    let rm = restriction_matrix(&inc, &ht, t)?;
                    if res != lift_map(&rm, m) {
                        return Ok(Outcome::Fail(
                            "pushforward ≠ lifted restriction matrix".into(),
                        ));
                    }
                    for matrix in [&tr, &rm] {
                        if let Some(f) = check_lift_identities(matrix, m)? {
                            return Ok(Outcome::Fail(f));
                        }
                    }
                    let (lh, lg) = (level(cfg, &ht, m)?, level(cfg, t, m)?);
                    for l in lh.parts() {
                        let y = FiniteGSet::coset_space(&lh.alpha(l)?);
                        if oracle_transfer_parks(&inc, &lh, &lg, &y)?
                            != coef.apply(&parks_char_basis(&ht, l))?
                        {
                            return Ok(Outcome::Fail(format!(
                                "induction of ⟨{}⟩ disagrees",
                                render(&ht, l)
                            )));
                        }
                    }
                    for l in lg.parts() {
                        let y = FiniteGSet::coset_space(&lg.alpha(l)?);
                        if oracle_restriction_parks(&inc, &lh, &lg, &y)?
                            != res.apply(&parks_char_basis(t, l))?
                        {
                            return Ok(Outcome::Fail(format!(
                                "restriction of ⟨{}⟩ disagrees",
                                render(t, l)
                            )));
                        }
                    }
                    Ok(Outcome::Pass(format!(
                        "{} induced and {} restricted basis elements",
                        lh.parts().len(),
                        lg.parts().len()
                    )))
                },
            ));
        }
    }
    out
}

fn fw(cfg: &VerifyConfig) -> Vec<Case> {
    let t = &cfg.table;
    let caps = &cfg.caps;
    let built = FrobeniusWielandt::new(t.clone(), caps);
    let fw = match built {
        Ok(fw) => fw,
        Err(e) => return vec![case(Suite::Fw, "setup", || Err(e))],
    };
    let c = fw.cyclic().clone();
    let mut out = Vec::new();
    out.push(case(Suite::Fw, "integral ring map", || {
        let images = (0..c.len())
            .map(|x| fw.apply(&BurnsideElement::basis(c.clone(), x)))
            .collect::<Result<Vec<_>>>()?;
        for a in 0..c.len() {
            for b in a..c.len() {
                let prod =
                    &BurnsideElement::basis(c.clone(), a) * &BurnsideElement::basis(c.clone(), b);
                if fw.apply(&prod)? != &images[a] * &images[b] {
                    return Ok(Outcome::Fail(format!(
                        "w([{}]·[{}]) ≠ w·w",
                        c.label(a),
                        c.label(b)
                    )));
                }
            }
        }
        let listing: Vec<String> = (0..c.len())
            .map(|x| format!("w([{}/{}]) = {}", c.group().label(), c.label(x), images[x]))
            .collect();
        Ok(Outcome::Pass(listing.join("; ")))
    }));
    for m in 1..=cfg.n {
        out.push(case(Suite::Fw, format!("power square n={m}"), || {
            if fw.lift(m) != lift_map(&fw.matrix(), m) {
                return Ok(Outcome::Fail("pushforward ≠ lifted matrix".into()));
            }
            for x in 0..c.len() {
                let b = BurnsideElement::basis(c.clone(), x);
                if fw.apply_aa(&power_op(&b, m)?)? != power_op(&fw.apply(&b)?, m)? {
                    return Ok(Outcome::Fail(format!(
                        "w̌(P_{m}[{}]) ≠ P_{m}(w[{}])",
                        c.label(x),
                        c.label(x)
                    )));
                }
            }
            Ok(Outcome::Pass(format!("{} basis elements", c.len())))
        }));
        out.push(case(Suite::Fw, format!("wreath square n={m}"), || {
            let (lc, lg) = (level(cfg, &c, m)?, level(cfg, t, m)?);
            for x in 0..c.len() {
                let b = BurnsideElement::basis(c.clone(), x);
                let lhs = fw.apply_wreath(&lc, &lg, &lc.embed(&power_op(&b, m)?)?)?;
                if lhs != lg.embed(&power_op(&fw.apply(&b)?, m)?)? {
                    return Ok(Outcome::Fail(format!(
                        "w_{m}(P_{m}[{}]) ≠ P_{m}(w[{}])",
                        c.label(x),
                        c.label(x)
                    )));
                }
            }
            Ok(Outcome::Pass(format!("{} basis elements", c.len())))
        }));
        if m >= 2 {
            out.push(case(
                Suite::Fw,
                format!("w_n multiplicative n={m} (experiment)"),
                || {
                    let (lc, lg) = (level(cfg, &c, m)?, level(cfg, t, m)?);
                    let ct = lc.wreath_table()?;
                    Ok(Outcome::Info(
                        match fw.wreath_multiplicativity(&lc, &lg)? {
                            None => format!(
                                "multiplicative on all {} basis pairs",
                                ct.len() * (ct.len() + 1) / 2
                            ),
                            Some((a, b)) => format!(
                                "not multiplicative: w_{m}([{}]·[{}]) ≠ w_{m}·w_{m}",
                                ct.label(a),
                                ct.label(b)
                            ),
                        },
                    ))
                },
            ));
        }
    }
    out
}

fn gcd(cfg: &VerifyConfig) -> Vec<Case> {
    let t = &cfg.table;
    vec![case(Suite::Gcd, "gcd property ⇔ cyclic equation", || {
        let mut listing = Vec::new();
        let mut bad = None;
        for h in 0..t.len() {
            let rep: &SubgroupRef = t.rep(h);
            let (g, r) = (gcd_property(rep, t), romero_commutes(rep, t)?);
            listing.push(format!("[{}] {}", t.label(h), g));
            if g != r && bad.is_none() {
                bad = Some(format!(
                    "[{}]: gcd property {g}, cyclic equation {r}",
                    t.label(h)
                ));
            }
        }
        Ok(pass_or_fail(
            bad,
            format!("{} subgroup classes: {}", t.len(), listing.join(", ")),
        ))
    })]
}
