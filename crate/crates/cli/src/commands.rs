use std::fmt::Write;

use serde_json::{json, Map, Value};

use surfinv_core::char_classes::*;
use surfinv_core::exact_arith::*;
use surfinv_core::f2_forms::*;
use surfinv_core::icosa_group::*;
use surfinv_core::seifert::{is_integral_homology_sphere, order_in_pi3, presentation, regular_increment, stabilized_e};

use crate::args::{Cli, Command, FormArgs, KappaFamily, LambdaFamily};
use crate::error::CliError;
use crate::json;
use crate::seifert_doc::{evaluate, evaluate_example, SeifertDoc};

/// Text and JSON renderings of one result.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub human: String,
    pub json: Value,
}

impl Report {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("values serialize")
        } else {
            self.human.clone()
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Arf(f) => arf(f),
        Command::Forms { g, list } => forms(*g, *list),
        Command::Zeros(f) => zeros(f),
        Command::Bernoulli { k } => bernoulli(*k),
        Command::Vonstaudt { k } => vonstaudt(*k),
        Command::Divisibility { index, spin } => divisibility(*index, *spin),
        Command::Kappa { family, n } => Ok(kappa(*family, *n)),
        Command::Lambda { family, n } => Ok(lambda(*family, *n)),
        Command::Rr { genus, power } => Ok(rr(*genus, *power)),
        Command::SeifertCheck { input } => seifert_check(&SeifertDoc::read(input)?),
        Command::Einvariant { input, example } => {
            let eval = match (input, example) {
                (Some(path), _) => evaluate(&SeifertDoc::read(path)?)?,
                (None, Some(k)) => evaluate_example(*k)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            Ok(Report { human: eval.human(), json: serde_json::to_value(&eval).expect("evaluation serializes") })
        }
        Command::Stabilize { n } => stabilize(*n),
        Command::Icosa { census, .. } => Ok(if *census { icosa_census() } else { icosa_verify() }),
    }
}

fn parse_form(f: &FormArgs) -> Result<F2QuadraticForm, CliError> {
    Ok(F2QuadraticForm::from_bitstring(f.g, &f.basis_values)?)
}

fn arf(f: &FormArgs) -> Result<Report, CliError> {
    let q = parse_form(f)?;
    let arf = arf_basis(&q);
    // the Gauss sum is only an oracle, so it is skipped past the enumeration cap
    let gauss = arf_gauss(&q).ok();
    Ok(Report {
        human: format!("Arf = {}", arf.additive()),
        json: json!({
            "form": json::form(&q),
            "arf": arf.additive(),
            "multiplicative": arf.multiplicative(),
            "arf_gauss": gauss.map(|a| a.additive()),
        }),
    })
}

fn forms(g: usize, list: bool) -> Result<Report, CliError> {
    if list {
        let all = enumerate_forms(g)?;
        let human = all.iter().map(|q| format!("{} {}", q.to_bitstring(), arf_basis(q).additive())).collect::<Vec<_>>();
        let entries: Vec<Value> = all
            .iter()
            .map(|q| {
                let mut v = json::form(q);
                v["arf"] = json!(arf_basis(q).additive());
                v
            })
            .collect();
        return Ok(Report { human: human.join("\n"), json: json!({ "g": g, "forms": entries }) });
    }
    let c = count_by_arf(g)?;
    Ok(Report {
        human: format!("Arf 0: {}\nArf 1: {}", c.n_plus, c.n_minus),
        json: json!({ "g": g, "n_plus": c.n_plus, "n_minus": c.n_minus, "total": c.n_plus + c.n_minus }),
    })
}

fn zeros(f: &FormArgs) -> Result<Report, CliError> {
    let q = parse_form(f)?;
    let count = count_zeros(&q)?;
    let arf = arf_basis(&q);
    let closed = zero_count_closed_form(q.genus(), arf);
    Ok(Report {
        human: format!("zeros = {count} (closed form {closed}, Arf = {})", arf.additive()),
        json: json!({ "form": json::form(&q), "zeros": count, "closed_form": closed, "arf": arf.additive() }),
    })
}

fn bernoulli(k: u64) -> Result<Report, CliError> {
    let b = bernoulli_paper(k)?;
    let ratio = bernoulli_ratio(k)?;
    Ok(Report {
        human: format!("B_{k} = {b}\nB_{k}/{} = {ratio}", 2 * k),
        json: json!({ "k": k, "bernoulli": json::rational(&b), "ratio": json::rational(&ratio) }),
    })
}

fn vonstaudt(k: u64) -> Result<Report, CliError> {
    let c = von_staudt_check(k)?;
    let verdict = if c.agrees() { "agree" } else { "DISAGREE" };
    Ok(Report {
        human: format!("den(B_{k}/{}) = {} (product formula {}, {verdict})", 2 * k, c.exact, c.product_formula),
        json: json!({
            "k": k,
            "exact": json::integer(&c.exact),
            "product_formula": json::integer(&c.product_formula),
            "agrees": c.agrees(),
        }),
    })
}

fn divisibility(index: u64, spin: bool) -> Result<Report, CliError> {
    if !spin {
        let d = divisor_oriented(index)?;
        return Ok(Report {
            human: format!("D_{index} = {d}"),
            json: json!({ "index": index, "oriented_divisor": json::integer(&d) }),
        });
    }
    let b = divisor_spin(index)?;
    let formula = match b.bernoulli_index {
        Some(m) => format!("2^{} * den(B_{m}/{})", b.two_exponent, 2 * m),
        None => format!("2^{}", b.two_exponent),
    };
    let maximality = match b.spin_maximality {
        SpinMaximality::ProvenMaximal => "proven_maximal",
        SpinMaximality::LowerBoundOnly => "lower_bound_only",
    };
    Ok(Report {
        human: format!("{formula} = {} ({maximality})", b.spin_divisor),
        json: json!({
            "index": index,
            "oriented_divisor": json::integer(&b.oriented_divisor),
            "spin_divisor": json::integer(&b.spin_divisor),
            "formula": formula,
            "two_exponent": b.two_exponent,
            "bernoulli_index": b.bernoulli_index,
            "maximality": maximality,
        }),
    })
}

fn polynomial_report(label: String, p: &surfinv_core::poly::IntPolynomial, extra: Map<String, Value>) -> Report {
    let mut obj = extra;
    obj.insert("polynomial".into(), json::polynomial(p));
    obj.insert("display".into(), json!(p.to_string()));
    Report { human: format!("{label} = {p}"), json: Value::Object(obj) }
}

fn kappa(family: KappaFamily, n: u32) -> Report {
    let (name, p) = match family {
        KappaFamily::Sphere => ("sphere", sphere_kappa(n)),
        KappaFamily::Proj => ("proj", proj_bundle_kappa(n)),
        KappaFamily::Hp => ("hp", hp_infinity_kappa(n)),
        KappaFamily::Torus => ("torus", torus_kappa(n)),
    };
    let extra = json!({ "family": name, "n": n });
    polynomial_report(format!("kappa_{n}"), &p, extra.as_object().cloned().unwrap_or_default())
}

fn lambda(family: LambdaFamily, n: u32) -> Report {
    match family {
        LambdaFamily::Sphere => {
            let q = sphere_lambda(n);
            let extra = json!({ "family": "sphere", "n": n, "ring": "Z[c2,c3]/(2*c3)" });
            let mut r = polynomial_report(format!("lambda_{n}"), q.as_polynomial(), extra.as_object().cloned().unwrap_or_default());
            r.human.push_str("  (mod 2*c3)");
            r
        }
        LambdaFamily::Torus => {
            let extra = json!({ "family": "torus", "n": n });
            polynomial_report(format!("lambda_{n}"), &torus_lambda(n), extra.as_object().cloned().unwrap_or_default())
        }
    }
}

fn rr(genus: u64, power: i64) -> Report {
    let r = riemann_roch_index(genus, power);
    Report {
        human: format!("dim ker = {}, dim coker = {}, index = {}", r.kernel, r.cokernel, r.index),
        json: json!({
            "genus": genus,
            "power": power,
            "kernel": r.kernel,
            "cokernel": r.cokernel,
            "index": r.index,
            "expected_index": r.expected_index,
        }),
    }
}

fn seifert_check(doc: &SeifertDoc) -> Result<Report, CliError> {
    let data = doc.data()?;
    let value = data.homology_value();
    let sphere = is_integral_homology_sphere(&data);
    let p = presentation(&data);
    let mut human = String::new();
    writeln!(human, "a = {}", data.a()).unwrap();
    writeln!(human, "a * sum(b_j/a_j) = {value}").unwrap();
    writeln!(human, "integral homology sphere: {}", if sphere { "yes" } else { "no" }).unwrap();
    write!(human, "< {} | {} >", p.generators.join(", "), p.relations.join(", ")).unwrap();
    Ok(Report {
        human,
        json: json!({
            "pairs": doc.pairs,
            "a": json::integer(&data.a()),
            "homology_value": json::rational(&value),
            "integral_homology_sphere": sphere,
            "presentation": { "generators": p.generators, "relations": p.relations },
        }),
    })
}

fn stabilize(n: u64) -> Result<Report, CliError> {
    let e = stabilized_e(n)?;
    let step = regular_increment()?;
    let order = order_in_pi3(&e)?;
    Ok(Report {
        human: format!("{} (order {order})", json::modz_human(&e)),
        json: json!({ "n": n, "e_invariant": json::modz(&e), "increment": json::modz(&step), "order": order }),
    })
}

fn icosa_census() -> Report {
    let census = element_order_census();
    let human = census.iter().map(|(o, k)| format!("order {o}: {k}")).collect::<Vec<_>>().join("\n");
    let counts: Map<String, Value> = census.iter().map(|(o, k)| (o.to_string(), json!(k))).collect();
    Report { human, json: json!({ "group_order": census.values().sum::<usize>(), "census": counts }) }
}

fn matrix(g: &GroupElement2x2F5) -> Value {
    json!(g.entries())
}

fn icosa_verify() -> Report {
    let group = enumerate_group();
    let perfect = verify_perfect();
    let center_order = center(&group).len();
    let involutions = element_order_census().get(&2).copied().unwrap_or(0);
    let witness = find_presentation_witness();
    let mut human = String::new();
    writeln!(human, "order: {}", group.len()).unwrap();
    writeln!(human, "perfect: {perfect}").unwrap();
    writeln!(human, "center order: {center_order}").unwrap();
    write!(human, "involutions: {involutions}").unwrap();
    let witness_json = match &witness {
        Some(w) => {
            let relations = w.satisfies_relations();
            let generates = w.generates_group();
            write!(human, "\nwitness x1 = {:?}, x2 = {:?}, x3 = {:?}", w.x1.entries(), w.x2.entries(), w.x3.entries())
                .unwrap();
            write!(human, "\nrelations hold: {relations}, generates: {generates}").unwrap();
            json!({
                "h": matrix(&w.h),
                "x1": matrix(&w.x1),
                "x2": matrix(&w.x2),
                "x3": matrix(&w.x3),
                "relations_hold": relations,
                "generates": generates,
            })
        }
        None => {
            human.push_str("\nno presentation witness");
            Value::Null
        }
    };
    Report {
        human,
        json: json!({
            "group_order": group.len(),
            "perfect": perfect,
            "center_order": center_order,
            "involutions": involutions,
            "witness": witness_json,
        }),
    }
}
