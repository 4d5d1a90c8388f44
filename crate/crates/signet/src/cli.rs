//! JSON dispatch for the `signet` binary: one request in, one response out,
//! plus an order-preserving NDJSON batch mode.
//!
//! Wire conventions: every number crosses as a string ("p/q" or "n"),
//! polynomials as coefficient arrays lowest degree first, matrices as arrays
//! of row arrays, rational functions as {"num", "den"}, real algebraic
//! numbers as {"minpoly", "lo", "hi"}.

use crate::error::Error;
use crate::exact::{fmt_rat, parse_rat, Poly, Rat, RatFunc};
use crate::forms::{EpsSym, Formation};
use crate::knots::SeifertMatrix;
use crate::linalg::Mat;
use crate::maslov::dedekind::{all_conventions, defect_matrix, signature_defect_check};
use crate::maslov::psl2::SL2;
use crate::maslov::Lagrangian;
use crate::sturm::{CfMode, RealAlgebraic};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

/// A dispatch failure that is the caller's fault: unknown command, missing
/// or malformed parameter. Maps to exit code 2 in single-request mode and to
/// an ok=false response in batch mode.
#[derive(Debug)]
pub struct Usage(pub String);

enum Fail {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Domain(e)
    }
}

type Out = std::result::Result<(Value, Vec<(&'static str, &'static str)>), Fail>;

// ----- parameter decoding -----

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

fn field<'a>(p: &'a Value, key: &str) -> std::result::Result<&'a Value, Fail> {
    p.get(key)
        .ok_or_else(|| usage(format!("missing parameter {key:?}")))
}

fn str_of(v: &Value, what: &str) -> std::result::Result<String, Fail> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(usage(format!("{what} must be a string"))),
    }
}

fn rat_of(v: &Value, what: &str) -> std::result::Result<Rat, Fail> {
    let s = str_of(v, what)?;
    parse_rat(&s).ok_or_else(|| usage(format!("{what}: not a rational: {s:?}")))
}

fn int_of(v: &Value, what: &str) -> std::result::Result<BigInt, Fail> {
    let s = str_of(v, what)?;
    s.parse()
        .map_err(|_| usage(format!("{what}: not an integer: {s:?}")))
}

fn u64_of(v: &Value, what: &str) -> std::result::Result<u64, Fail> {
    let s = str_of(v, what)?;
    s.parse()
        .map_err(|_| usage(format!("{what}: not a nonnegative integer: {s:?}")))
}

fn rat_list_of(v: &Value, what: &str) -> std::result::Result<Vec<Rat>, Fail> {
    let arr = v
        .as_array()
        .ok_or_else(|| usage(format!("{what} must be an array")))?;
    arr.iter().map(|x| rat_of(x, what)).collect()
}

fn int_list_of(v: &Value, what: &str) -> std::result::Result<Vec<BigInt>, Fail> {
    let arr = v
        .as_array()
        .ok_or_else(|| usage(format!("{what} must be an array")))?;
    arr.iter().map(|x| int_of(x, what)).collect()
}

fn poly_of(v: &Value, what: &str) -> std::result::Result<Poly, Fail> {
    Ok(Poly::new(rat_list_of(v, what)?))
}

fn mat_of(v: &Value, what: &str) -> std::result::Result<Mat<Rat>, Fail> {
    let rows = v
        .as_array()
        .ok_or_else(|| usage(format!("{what} must be an array of rows")))?;
    let mut out: Vec<Vec<Rat>> = Vec::with_capacity(rows.len());
    for r in rows {
        out.push(rat_list_of(r, what)?);
    }
    let cols = out.first().map_or(0, |r| r.len());
    if out.iter().any(|r| r.len() != cols) {
        return Err(usage(format!("{what}: ragged rows")));
    }
    Ok(Mat::from_rows(out))
}

fn ratfunc_of(v: &Value, what: &str) -> std::result::Result<RatFunc, Fail> {
    match v {
        Value::Array(_) => Ok(RatFunc::from_poly(poly_of(v, what)?)),
        Value::Object(_) => {
            let num = poly_of(field(v, "num")?, what)?;
            let den = poly_of(field(v, "den")?, what)?;
            if den.is_zero() {
                return Err(usage(format!("{what}: zero denominator")));
            }
            Ok(RatFunc::new(num, den))
        }
        _ => Err(usage(format!(
            "{what} must be a coefficient array or {{num, den}}"
        ))),
    }
}

fn ratfunc_mat_of(v: &Value, what: &str) -> std::result::Result<Mat<RatFunc>, Fail> {
    let rows = v
        .as_array()
        .ok_or_else(|| usage(format!("{what} must be an array of rows")))?;
    let mut out: Vec<Vec<RatFunc>> = Vec::with_capacity(rows.len());
    for r in rows {
        let cells = r
            .as_array()
            .ok_or_else(|| usage(format!("{what}: rows must be arrays")))?;
        out.push(
            cells
                .iter()
                .map(|c| ratfunc_of(c, what))
                .collect::<std::result::Result<_, _>>()?,
        );
    }
    let cols = out.first().map_or(0, |r| r.len());
    if out.iter().any(|r| r.len() != cols) {
        return Err(usage(format!("{what}: ragged rows")));
    }
    Ok(Mat::from_rows(out))
}

fn realalg_of(v: &Value, what: &str) -> std::result::Result<RealAlgebraic, Fail> {
    let p = poly_of(field(v, "minpoly")?, what)?;
    let lo = rat_of(field(v, "lo")?, what)?;
    let hi = rat_of(field(v, "hi")?, what)?;
    Ok(RealAlgebraic::from_isolating(p, lo, hi)?)
}

fn sym_of(v: &Value, what: &str) -> std::result::Result<EpsSym<Rat>, Fail> {
    Ok(EpsSym::symmetric(mat_of(v, what)?)?)
}

fn seifert_of(p: &Value) -> std::result::Result<SeifertMatrix, Fail> {
    if let Some(b) = p.get("braid") {
        let word = crate::knots::parse_braid(&str_of(b, "braid")?)?;
        return Ok(crate::knots::seifert_matrix(&word)?);
    }
    if let Some(s) = p.get("sigma") {
        let sigma = mat_of(s, "sigma")?;
        if !sigma.is_square() {
            return Err(usage("sigma must be square"));
        }
        let components = match p.get("components") {
            Some(c) => u64_of(c, "components")? as usize,
            None => 1,
        };
        return Ok(SeifertMatrix { sigma, components });
    }
    Err(usage("need either \"braid\" or \"sigma\""))
}

fn lagrangian_of(p: &Value, key: &str, n: usize) -> std::result::Result<Lagrangian, Fail> {
    let basis = mat_of(field(p, key)?, key)?;
    Ok(Lagrangian::standard(n, basis)?)
}

// ----- result encoding -----

fn rat_v(x: &Rat) -> Value {
    Value::String(fmt_rat(x))
}

fn int_v(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn i64_v(x: i64) -> Value {
    Value::String(x.to_string())
}

fn usize_v(x: usize) -> Value {
    Value::String(x.to_string())
}

fn poly_v(p: &Poly) -> Value {
    Value::Array(p.c.iter().map(rat_v).collect())
}

fn mat_v(m: &Mat<Rat>) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|i| Value::Array(m.row(i).iter().map(rat_v).collect()))
            .collect(),
    )
}

fn ratfunc_v(f: &RatFunc) -> Value {
    json!({ "num": poly_v(&f.num), "den": poly_v(&f.den) })
}

fn ratfunc_mat_v(m: &Mat<RatFunc>) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|i| Value::Array(m.row(i).iter().map(ratfunc_v).collect()))
            .collect(),
    )
}

fn realalg_v(x: &RealAlgebraic) -> Value {
    json!({ "minpoly": poly_v(x.minpoly()), "lo": rat_v(x.lo()), "hi": rat_v(x.hi()) })
}

fn seifert_v(s: &SeifertMatrix) -> Value {
    json!({ "sigma": mat_v(&s.sigma), "components": usize_v(s.components) })
}

fn linking_v(l: &crate::witt::LinkingFormZ) -> Value {
    Value::Array(
        l.summands
            .iter()
            .map(|(c, a)| json!([int_v(c), int_v(a)]))
            .collect(),
    )
}

fn linking_of(v: &Value, what: &str) -> std::result::Result<crate::witt::LinkingFormZ, Fail> {
    let arr = v
        .as_array()
        .ok_or_else(|| usage(format!("{what} must be an array of [c, a] pairs")))?;
    let mut raw = Vec::with_capacity(arr.len());
    for pair in arr {
        let p = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| usage(format!("{what}: summands are [c, a] pairs")))?;
        raw.push((int_of(&p[0], what)?, int_of(&p[1], what)?));
    }
    Ok(crate::witt::LinkingFormZ::new(raw)?)
}

fn witt_fp_v(c: &crate::witt::WittClassFp) -> Value {
    json!({
        "p": int_v(&c.p),
        "rank_parity": c.r_mod2,
        "disc_is_square": c.disc_is_square,
        "z4": c.z4.map(|z| z.to_string()),
    })
}

fn witt_q_v(c: &crate::witt::WittClassQ) -> Value {
    json!({
        "signature": i64_v(c.signature),
        "dim_parity": c.dim_mod2,
        "res2": c.res2,
        "local": c.local.values().map(witt_fp_v).collect::<Vec<_>>(),
    })
}

fn sl2_of(v: &Value, what: &str) -> std::result::Result<SL2, Fail> {
    let m = mat_of(v, what)?;
    if m.rows != 2 || m.cols != 2 {
        return Err(usage(format!("{what} must be 2×2")));
    }
    let as_int = |x: &Rat| -> std::result::Result<BigInt, Fail> {
        if !x.is_integer() {
            return Err(usage(format!("{what} must have integer entries")));
        }
        Ok(x.to_integer())
    };
    Ok(SL2::new(
        as_int(m.at(0, 0))?,
        as_int(m.at(0, 1))?,
        as_int(m.at(1, 0))?,
        as_int(m.at(1, 1))?,
    )?)
}

// ----- command routing -----

fn run(cmd: &str, p: &Value) -> Out {
    match cmd {
        // exact
        "exact divmod" => {
            let a = poly_of(field(p, "P")?, "P")?;
            let b = poly_of(field(p, "Q")?, "Q")?;
            let (q, r) = a.divmod(&b)?;
            Ok((
                json!({ "quotient": poly_v(&q), "remainder": poly_v(&r) }),
                vec![("euclidean-division", "polynomial division with remainder")],
            ))
        }
        "exact gcd" => {
            let a = poly_of(field(p, "P")?, "P")?;
            let b = poly_of(field(p, "Q")?, "Q")?;
            Ok((
                poly_v(&a.gcd(&b)?),
                vec![("euclidean-algorithm", "monic polynomial gcd")],
            ))
        }
        "exact squarefree" => {
            let a = poly_of(field(p, "P")?, "P")?;
            Ok((
                poly_v(&a.squarefree_part()?),
                vec![("squarefree-part", "P / gcd(P, P')")],
            ))
        }
        "exact cyclotomic" => {
            let q = u64_of(field(p, "q")?, "q")?;
            Ok((
                poly_v(&crate::exact::poly::cyclotomic_polynomial(q)?),
                vec![("cyclotomic-polynomial", "minimal polynomial of a primitive root of unity")],
            ))
        }
        "exact cyc-sign" => {
            let q = u64_of(field(p, "conductor")?, "conductor")?;
            let rep = poly_of(field(p, "rep")?, "rep")?;
            let x = crate::exact::Cyc::new(q, rep);
            Ok((
                i64_v(x.sign()? as i64),
                vec![("certified-sign", "adaptive-precision interval sign of a real cyclotomic number")],
            ))
        }

        // forms
        "forms minors" => {
            let s = sym_of(field(p, "S")?, "S")?;
            let m = crate::forms::principal_minors(&s);
            Ok((
                Value::Array(m.values.iter().map(rat_v).collect()),
                vec![("principal-minors", "leading principal minor chain μ_0..μ_n")],
            ))
        }
        "forms variation" => {
            let v = rat_list_of(field(p, "v")?, "v")?;
            Ok((
                usize_v(crate::forms::variation(&v)?),
                vec![("sign-variation", "count of consecutive sign changes")],
            ))
        }
        "forms signature" => {
            let s = sym_of(field(p, "S")?, "S")?;
            let sig = crate::forms::signature(&s)?;
            Ok((
                json!({
                    "p": usize_v(sig.p), "q": usize_v(sig.q),
                    "nullity": usize_v(sig.nullity), "tau": i64_v(sig.tau()),
                }),
                vec![
                    ("sylvester-inertia", "signature is a congruence invariant"),
                    ("minor-quotient-signature", "τ = n − 2·var(μ) on regular forms"),
                ],
            ))
        }
        "forms diagonalize" => {
            let s = sym_of(field(p, "S")?, "S")?;
            let (a, d) = crate::forms::diagonalize(&s)?;
            Ok((
                json!({ "basis": mat_v(&a), "diagonal": mat_v(&d) }),
                vec![("lagrange-diagonalization", "AᵀSA diagonal with A invertible")],
            ))
        }
        "forms plumb" => {
            let s = sym_of(field(p, "S")?, "S")?;
            let v = rat_list_of(field(p, "v")?, "v")?;
            let w = rat_of(field(p, "w")?, "w")?;
            Ok((
                mat_v(&crate::forms::plumb(&s, &v, w)?.mat),
                vec![("plumbing", "one-row bordered enlargement of a form")],
            ))
        }
        "forms boundary" => {
            let theta = EpsSym::new(-1, mat_of(field(p, "theta")?, "theta")?)?;
            let f = mat_of(field(p, "f")?, "f")?;
            let g = mat_of(field(p, "g")?, "g")?;
            let b = crate::forms::formation_boundary(&Formation::new(theta, f, g)?)?;
            Ok((
                json!({
                    "form": mat_v(&b.form.mat),
                    "epsilon": i64_v(b.form.epsilon as i64),
                    "lagrangian": mat_v(&b.lagrangian),
                    "reps": mat_v(&b.reps),
                }),
                vec![("formation-boundary", "induced form on the boundary of a formation")],
            ))
        }
        "forms l-polynomial" => {
            let k = u64_of(field(p, "k")?, "k")? as usize;
            let l = crate::forms::l_polynomial(k)?;
            let terms: Vec<Value> = l
                .terms
                .iter()
                .map(|(mono, c)| {
                    json!({
                        "powers": mono.iter().map(|&e| e.to_string()).collect::<Vec<_>>(),
                        "coeff": rat_v(c),
                    })
                })
                .collect();
            Ok((
                json!({ "k": usize_v(l.k), "terms": terms, "rendered": l.render() }),
                vec![("multiplicative-sequence", "weighted L-genus polynomial in Pontryagin classes")],
            ))
        }

        // sturm
        "sturm chain" => {
            let q = poly_of(field(p, "P")?, "P")?;
            let ch = crate::sturm::sturm_chain(&q)?;
            Ok((
                json!({
                    "remainders": ch.remainders.iter().map(poly_v).collect::<Vec<_>>(),
                    "quotients": ch.quotients.iter().map(poly_v).collect::<Vec<_>>(),
                }),
                vec![("sturm-chain", "sign-flipped Euclidean remainder sequence")],
            ))
        }
        "sturm count" => {
            let q = poly_of(field(p, "P")?, "P")?;
            let a = rat_of(field(p, "a")?, "a")?;
            let b = rat_of(field(p, "b")?, "b")?;
            Ok((
                usize_v(crate::sturm::count_roots(&q, &a, &b)?),
                vec![("sturm-count", "root count as a sign-variation difference")],
            ))
        }
        "sturm isolate" => {
            let q = poly_of(field(p, "P")?, "P")?;
            let roots = crate::sturm::isolate_roots(&q)?;
            Ok((
                Value::Array(roots.iter().map(realalg_v).collect()),
                vec![("sturm-count", "bisection to isolating intervals")],
            ))
        }
        "sturm tri" => {
            let chi = rat_list_of(field(p, "chi")?, "chi")?;
            Ok((
                mat_v(&crate::sturm::tri(&chi)),
                vec![("tridiagonal-form", "Tri(χ) with unit off-diagonal")],
            ))
        }
        "sturm cf-eval" => {
            let chi = rat_list_of(field(p, "chi")?, "chi")?;
            let (v, num, den) = crate::sturm::cf_eval(&chi)?;
            Ok((
                json!({ "value": rat_v(&v), "num": rat_v(&num), "den": rat_v(&den) }),
                vec![("continued-fraction", "improper continued fraction via minor recurrences")],
            ))
        }
        "sturm cf-expand" => {
            let a = int_of(field(p, "a")?, "a")?;
            let c = int_of(field(p, "c")?, "c")?;
            let mode = match str_of(field(p, "mode")?, "mode")?.as_str() {
                "big-entry" => CfMode::BigEntry,
                "even" => CfMode::Even,
                other => return Err(usage(format!("unknown mode {other:?}"))),
            };
            let chi = crate::sturm::cf_expand(&a, &c, mode)?;
            Ok((
                Value::Array(chi.iter().map(int_v).collect()),
                vec![("continued-fraction", "constrained expansion of a/c")],
            ))
        }
        "sturm sturm-tri" => {
            let q = poly_of(field(p, "P")?, "P")?;
            Ok((
                ratfunc_mat_v(&crate::sturm::sturm_tri(&q)?),
                vec![("sturm-tridiagonal", "Tri of the Sturm quotient chain over ℚ(X)")],
            ))
        }
        "sturm jacobi-hermite" => {
            let q = poly_of(field(p, "P")?, "P")?;
            let jh = crate::sturm::jacobi_hermite(&q)?;
            Ok((
                json!({
                    "companion": mat_v(&jh.companion),
                    "power_sums": jh.power_sums.iter().map(rat_v).collect::<Vec<_>>(),
                    "hermite": mat_v(&jh.hermite.mat),
                }),
                vec![("jacobi-hermite", "power-sum Hankel form counts distinct real roots")],
            ))
        }
        "sturm hermite-count" => {
            let q = poly_of(field(p, "P")?, "P")?;
            let t = rat_of(field(p, "t")?, "t")?;
            Ok((
                i64_v(crate::sturm::hermite_count(&q, &t)?),
                vec![("jacobi-hermite", "signed Hermite count below a threshold")],
            ))
        }
        "sturm bezoutian" => {
            let a = poly_of(field(p, "P")?, "P")?;
            let b = poly_of(field(p, "Q")?, "Q")?;
            Ok((
                mat_v(&crate::sturm::bezoutian(&a, &b)?.mat),
                vec![("bezoutian", "symmetric Bezout form of a polynomial pair")],
            ))
        }
        "sturm compare" => {
            let x = realalg_of(field(p, "x")?, "x")?;
            let y = realalg_of(field(p, "y")?, "y")?;
            let sym = match crate::sturm::ra_compare(&x, &y) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            Ok((
                Value::String(sym.into()),
                vec![("certified-sign", "exact comparison of real algebraic numbers")],
            ))
        }

        // witt
        "witt q" => {
            let s = sym_of(field(p, "S")?, "S")?;
            Ok((
                witt_q_v(&crate::witt::witt_q(&s)?),
                vec![("witt-rationals", "signature, parity and odd-prime residues classify W(ℚ)")],
            ))
        }
        "witt fp" => {
            let diag = int_list_of(field(p, "diag")?, "diag")?;
            let prime = int_of(field(p, "p")?, "p")?;
            Ok((
                witt_fp_v(&crate::witt::witt_fp(&diag, &prime)?),
                vec![("witt-finite-field", "rank parity and discriminant class classify W(F_p)")],
            ))
        }
        "witt rx" => {
            let s = EpsSym::new(1, ratfunc_mat_of(field(p, "S")?, "S")?)?;
            let c = crate::witt::witt_rx(&s)?;
            Ok((
                json!({
                    "tau_inf": i64_v(c.tau_inf),
                    "real_part": c.real_part.iter()
                        .map(|(x, j)| json!({ "point": realalg_v(x), "half_jump": i64_v(*j) }))
                        .collect::<Vec<_>>(),
                    "h_part": c.h_part.iter().map(poly_v).collect::<Vec<_>>(),
                }),
                vec![("witt-function-field", "total signature and discriminant parities over ℝ(X)")],
            ))
        }
        "witt residue" => {
            let s = EpsSym::new(1, ratfunc_mat_of(field(p, "S")?, "S")?)?;
            let pi = poly_of(field(p, "pi")?, "pi")?;
            let r = crate::witt::residue(&s, &pi)?;
            Ok((
                Value::Array(r.iter().map(poly_v).collect()),
                vec![("second-residue", "odd-valuation part of a form at an irreducible place")],
            ))
        }
        "witt residue-eq" => {
            let pi = poly_of(field(p, "pi")?, "pi")?;
            let arr = |key: &str| -> std::result::Result<Vec<Poly>, Fail> {
                field(p, key)?
                    .as_array()
                    .ok_or_else(|| usage(format!("{key} must be an array of polynomials")))?
                    .iter()
                    .map(|x| poly_of(x, key))
                    .collect()
            };
            let a = arr("a")?;
            let b = arr("b")?;
            Ok((
                Value::Bool(crate::witt::residue_classes_equal(&pi, &a, &b)?),
                vec![("second-residue", "Witt equality of diagonal classes over a residue field")],
            ))
        }
        "witt linking-boundary" => {
            let s = sym_of(field(p, "S")?, "S")?;
            Ok((
                linking_v(&crate::witt::linking_boundary(&s)?),
                vec![("linking-boundary", "ℚ/ℤ-valued boundary pairing of a rational form")],
            ))
        }
        "witt linking-eq" => {
            let l1 = linking_of(field(p, "L1")?, "L1")?;
            let l2 = linking_of(field(p, "L2")?, "L2")?;
            Ok((
                Value::Bool(crate::witt::linking_witt_eq(&l1, &l2)?),
                vec![("devissage", "prime-power linking pieces reduce to residue fields")],
            ))
        }
        "witt lens" => {
            let c = int_of(field(p, "c")?, "c")?;
            let a = int_of(field(p, "a")?, "a")?;
            Ok((
                linking_v(&crate::witt::lens_linking(&c, &a)?),
                vec![("lens-linking", "the cyclic linking form (ℤ/c, a/c)")],
            ))
        }

        // maslov
        "maslov wall" => {
            let n = u64_of(field(p, "n")?, "n")? as usize;
            let l1 = lagrangian_of(p, "L1", n)?;
            let l2 = lagrangian_of(p, "L2", n)?;
            let l3 = lagrangian_of(p, "L3", n)?;
            Ok((
                i64_v(crate::maslov::wall_maslov(&l1, &l2, &l3)?),
                vec![("wall-maslov", "signature of the Wall form of a lagrangian triple")],
            ))
        }
        "maslov defect" => {
            let n = u64_of(field(p, "n")?, "n")? as usize;
            let l1 = lagrangian_of(p, "L1", n)?;
            let l2 = lagrangian_of(p, "L2", n)?;
            let l3 = lagrangian_of(p, "L3", n)?;
            let l4 = lagrangian_of(p, "L4", n)?;
            Ok((
                i64_v(crate::maslov::cocycle_defect(&l1, &l2, &l3, &l4)?),
                vec![("maslov-cocycle", "alternating sum over the faces of a 4-tuple")],
            ))
        }
        "maslov graph" => {
            let g = mat_of(field(p, "g")?, "g")?;
            Ok((
                mat_v(&crate::maslov::graph_lagrangian(&g)?.basis),
                vec![("graph-lagrangian", "graph of a symplectic map in the doubled space")],
            ))
        }
        "maslov meyer" => {
            let g0 = mat_of(field(p, "g0")?, "g0")?;
            let g1 = mat_of(field(p, "g1")?, "g1")?;
            let g2 = mat_of(field(p, "g2")?, "g2")?;
            Ok((
                i64_v(crate::maslov::meyer(&g0, &g1, &g2)?),
                vec![("meyer-cocycle", "Wall index of three graph lagrangians")],
            ))
        }
        "maslov normal-form" => {
            let a = sl2_of(field(p, "A")?, "A")?;
            let w = crate::maslov::psl2::psl2_normal_form(&a)?;
            Ok((
                json!({
                    "u_exponents": w.exps.iter().map(|&e| e.to_string()).collect::<Vec<_>>(),
                    "u_sum": i64_v(w.r_sum()),
                }),
                vec![("psl2-normal-form", "alternating S/U word in ℤ/2 * ℤ/3")],
            ))
        }
        "maslov rademacher" => {
            let a = sl2_of(field(p, "A")?, "A")?;
            Ok((
                i64_v(crate::maslov::psl2::rademacher(&a)?),
                vec![("rademacher", "U-exponent sum of the normal form")],
            ))
        }
        "maslov sawtooth" => {
            let x = rat_of(field(p, "x")?, "x")?;
            Ok((
                rat_v(&crate::maslov::dedekind::sawtooth(&x)),
                vec![("sawtooth", "((x)) = {x} − 1/2 off the integers")],
            ))
        }
        "maslov dedekind" => {
            let a = int_of(field(p, "a")?, "a")?;
            let c = int_of(field(p, "c")?, "c")?;
            Ok((
                rat_v(&crate::maslov::dedekind::dedekind_sum(&a, &c)?),
                vec![("dedekind-sum", "sawtooth double sum s(a, c)")],
            ))
        }
        "maslov defect-check" => {
            let chi = int_list_of(field(p, "chi")?, "chi")?;
            let name = str_of(field(p, "convention")?, "convention")?;
            let conv = all_conventions()
                .into_iter()
                .find(|c| c.name() == name)
                .ok_or_else(|| usage(format!("unknown convention {name:?}")))?;
            let a = defect_matrix(&chi, conv.build)?;
            let (lhs, rhs) = signature_defect_check(&chi, &a, conv.s_arg, conv.rhs)?;
            Ok((
                json!({
                    "lhs": rat_v(&lhs),
                    "rhs": rat_v(&rhs),
                    "matrix": [[int_v(&a.a), int_v(&a.b)], [int_v(&a.c), int_v(&a.d)]],
                    "equal": lhs == rhs,
                }),
                vec![("signature-defect", "τ(Tri(χ)) − Σχ/3 against the Dedekind-sum side")],
            ))
        }

        // knot
        "knot parse" => {
            let b = crate::knots::parse_braid(&str_of(field(p, "braid")?, "braid")?)?;
            Ok((
                json!({
                    "strands": usize_v(b.strands),
                    "letters": b.letters.iter()
                        .map(|&(i, s)| json!([usize_v(i), i64_v(s as i64)]))
                        .collect::<Vec<_>>(),
                    "components": usize_v(crate::knots::closure_components(&b)),
                }),
                vec![("braid-closure", "permutation cycles count link components")],
            ))
        }
        "knot seifert" => {
            let s = seifert_of(p)?;
            Ok((
                seifert_v(&s),
                vec![("canonical-surface", "band-cycle linking on the canonical Seifert surface")],
            ))
        }
        "knot alexander" => {
            let s = seifert_of(p)?;
            Ok((
                poly_v(&crate::knots::alexander(&s)?),
                vec![("alexander", "det(zΣ − Σᵀ) up to units")],
            ))
        }
        "knot signature" => {
            let s = seifert_of(p)?;
            Ok((
                i64_v(crate::knots::knot_signature(&s)?),
                vec![("murasugi-signature", "τ(Σ + Σᵀ)")],
            ))
        }
        "knot omega" => {
            let s = seifert_of(p)?;
            let angle = str_of(field(p, "angle")?, "angle")?;
            let (a, q) = angle
                .split_once('/')
                .and_then(|(a, q)| Some((a.parse::<i64>().ok()?, q.parse::<u64>().ok()?)))
                .ok_or_else(|| usage("angle must be \"a/q\""))?;
            Ok((
                i64_v(crate::knots::omega_signature(&s, a, q)?),
                vec![("tristram-levine", "hermitian signature of (1−ω)Σ + (1−ω̄)Σᵀ")],
            ))
        }
        "knot function" => {
            let s = seifert_of(p)?;
            let f = crate::knots::signature_function(&s)?;
            Ok((
                json!({
                    "breakpoints": f.breakpoints.iter().map(realalg_v).collect::<Vec<_>>(),
                    "plateau_values": f.plateau_values.iter().map(|&v| i64_v(v)).collect::<Vec<_>>(),
                    "milnor_jumps": f.milnor_jumps.iter().map(|&v| i64_v(v)).collect::<Vec<_>>(),
                }),
                vec![
                    ("tristram-levine", "plateau values between circle roots of Δ"),
                    ("milnor-jump", "half-jumps across unit-circle Alexander roots"),
                ],
            ))
        }
        "knot enlarge" => {
            let s = seifert_of(p)?;
            let alpha = rat_list_of(field(p, "alpha")?, "alpha")?;
            Ok((
                seifert_v(&crate::knots::s_equiv_enlarge(&s, &alpha)?),
                vec![("s-equivalence", "one enlargement move on the Seifert form")],
            ))
        }
        "knot fibred" => {
            let a = mat_of(field(p, "A")?, "A")?;
            let theta = mat_of(field(p, "theta")?, "theta")?;
            Ok((
                seifert_v(&crate::knots::fibred_seifert(&a, &theta)?),
                vec![("fibred-seifert", "Σ = θ(I − A)⁻¹ for a symplectic monodromy")],
            ))
        }

        other => Err(usage(format!("unknown command {other:?}"))),
    }
}

// ----- responses -----

/// Dispatch one request object. Returns the response JSON plus the process
/// exit code appropriate for single-request mode (0 ok, 1 domain, 2 usage).
pub fn respond(req: &Value) -> (Value, i32) {
    let cmd = match req.get("cmd").and_then(Value::as_str) {
        Some(c) => c.to_string(),
        None => {
            return (
                error_response("usage", "request needs a \"cmd\" string"),
                2,
            )
        }
    };
    let default_params = Value::Object(Map::new());
    let params = req.get("params").unwrap_or(&default_params);
    match run(&cmd, params) {
        Ok((result, provenance)) => (
            json!({
                "ok": true,
                "result": result,
                "provenance": provenance
                    .iter()
                    .map(|(t, n)| json!([t, n]))
                    .collect::<Vec<_>>(),
            }),
            0,
        ),
        Err(Fail::Domain(e)) => (error_response(e.code(), &e.to_string()), 1),
        Err(Fail::Usage(m)) => (error_response("usage", &m), 2),
    }
}

fn error_response(code: &str, message: &str) -> Value {
    json!({ "ok": false, "error": { "code": code, "message": message } })
}

/// Dispatch a raw NDJSON line: parse failures and usage errors become
/// ok=false responses so one bad line never aborts a batch.
pub fn respond_line(line: &str) -> Value {
    match serde_json::from_str::<Value>(line) {
        Ok(req) => respond(&req).0,
        Err(e) => error_response("usage", &format!("bad JSON: {e}")),
    }
}

/// Run a batch of NDJSON requests, in parallel but with responses in input
/// order; blank lines pass through as blank responses are skipped.
pub fn batch(lines: &[String], jobs: Option<usize>) -> Vec<Value> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .expect("thread pool");
    pool.install(|| lines.par_iter().map(|l| respond_line(l)).collect())
}
