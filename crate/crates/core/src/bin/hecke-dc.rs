use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use hecke_centraliser::algebra::{Field, Integers};
use hecke_centraliser::cellular::{
    ann_cell_verify, cell_ideal, regular_cell_basis, triangularity_check,
};
use hecke_centraliser::centraliser::{
    annihilator, base_change_report, check_ideal, dc_check, double_end, end_algebra,
    image_subspace, integral_annihilator_lattice, is_closed_under_product,
};
use hecke_centraliser::diagnostics::{
    counterexample_report, gamma_graph_analysis, hook_report, tensor_report,
};
use hecke_centraliser::domain::{map_domains, run_over, Domain, FieldTask};
use hecke_centraliser::hecke::HeckeAlgebra;
use hecke_centraliser::modules::{parse_summands, young_sum, ModuleSpec, ScalarSpec, Summand};
use hecke_centraliser::partitions::{Partition, PartitionSet};
use hecke_centraliser::perm::Perm;
use hecke_centraliser::Error;

/// Annihilators, centraliser algebras and cell data for type-A Hecke algebras.
///
/// Every subcommand writes one JSON document. Exit status is 0 when all
/// checks hold, 2 when a check fails and 1 on bad input.
#[derive(Parser)]
#[command(name = "hecke-dc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Rank of the Hecke algebra (degree of the symmetric group)
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Parameter: a rational, `p,value` for F_p, or `t`
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    /// Coefficient field(s): Q, Fp:p, Qt, Fpt:p, Z. Repeat or separate by commas.
    #[arg(long = "field", global = true, value_delimiter = ',')]
    fields: Vec<String>,
    /// Young sum such as `M(3,1)+M(4)`; `Ms(..)` is signed, `^k` a multiplicity
    #[arg(long, global = true)]
    module: Option<String>,
    /// Module specification JSON file
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// Print a readable table instead of JSON
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the output here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Annihilator of a Young sum
    Ann {
        /// Include basis vectors
        #[arg(long)]
        basis: bool,
    },
    /// Endomorphism algebra of a Young sum
    End,
    /// Double centraliser of a Young sum
    Dend,
    /// Compare the double centraliser with the image of the Hecke algebra
    DcCheck,
    /// Dimensions over several fields against the generic ones
    BaseChange,
    /// Span of the cell basis elements indexed by a set of partitions
    CellIdeal {
        /// Partitions separated by `;`, e.g. `(2,1);(1,1,1)`
        #[arg(long)]
        tau: String,
    },
    /// Compare the annihilator of a Young sum with the predicted cell ideal
    CellVerify,
    /// Murphy basis with the exhaustive triangularity check
    MurphyTable {
        /// Leave the basis elements out of the output
        #[arg(long)]
        summary: bool,
    },
    /// Double centraliser and dimensions for sums of hook modules
    HookReport,
    /// The graph Γ(Sym(m), {1,t}) and the annihilator of the coset module
    GraphExample {
        #[arg(long)]
        m: usize,
        /// Involution in cycle notation, e.g. `(13)(24)`
        #[arg(long)]
        t: String,
    },
    /// Tensor space I(n,r) as a Sym(m)-set
    TensorReport {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// M(2,2) in characteristic 2
    Counterexample,
}

enum Failure {
    Usage(String),
    Check(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TriangularityViolation { .. } | Error::IdealCheckFailed(_) => {
                Failure::Check(json!({ "error": e.to_string() }))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(Value, bool), Failure>;

struct Input {
    n: usize,
    summands: Vec<Summand>,
    domains: Vec<Domain>,
    q: String,
}

impl Common {
    fn domains(
        &self,
        default: Domain,
    ) -> std::result::Result<(Vec<Domain>, Option<String>), Failure> {
        let mut q = self.q.clone();
        if let Some((p, value)) = q.as_deref().and_then(|s| s.split_once(',')) {
            let p = p
                .trim()
                .parse::<u64>()
                .map_err(|_| Failure::Usage(format!("bad prime in --q {p}")))?;
            let value = value.trim().to_string();
            if self.fields.is_empty() {
                return Ok((vec![Domain::Fp(p)], Some(value)));
            }
            q = Some(value);
        }
        let domains = if self.fields.is_empty() {
            vec![default]
        } else {
            self.fields
                .iter()
                .map(|f| f.parse())
                .collect::<Result<Vec<Domain>, _>>()?
        };
        Ok((domains, q))
    }

    fn input(&self, default: Domain) -> std::result::Result<Input, Failure> {
        let spec = match &self.spec {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                Some(ModuleSpec::from_json(&text)?)
            }
            None => None,
        };
        let (spec_domain, spec_q) = match &spec {
            Some(s) => {
                let (d, q) = Domain::from_scalar_spec(&s.q)?;
                (Some(d), Some(q))
            }
            None => (None, None),
        };
        let (domains, q) = self.domains(spec_domain.unwrap_or(default))?;
        let summands = match (&self.module, &spec) {
            (Some(m), _) => parse_summands(m)?,
            (None, Some(s)) => s.summands.clone(),
            (None, None) => return Err(Failure::Usage("give --module or --spec".into())),
        };
        let n = match (self.n, &spec) {
            (Some(n), _) => n,
            (None, Some(s)) => s.n,
            (None, None) => summands.first().map(|s| s.partition.degree()).unwrap_or(0),
        };
        let q = q.or(spec_q).unwrap_or_else(|| default_q(domains[0]));
        ModuleSpec {
            n,
            q: ScalarSpec::new("Q", None, &q),
            summands: summands.clone(),
        }
        .validate()?;
        Ok(Input {
            n,
            summands,
            domains,
            q,
        })
    }

    fn module_spec(&self, input: &Input) -> ModuleSpec {
        ModuleSpec {
            n: input.n,
            q: ScalarSpec::new("Q", None, &input.q),
            summands: input.summands.clone(),
        }
    }
}

fn default_q(d: Domain) -> String {
    match d {
        Domain::Qt | Domain::Fpt(_) => "t".into(),
        _ => "1".into(),
    }
}

fn describe(summands: &[Summand]) -> String {
    ModuleSpec {
        n: 0,
        q: ScalarSpec::new("Q", None, "1"),
        summands: summands.to_vec(),
    }
    .describe()
}

#[derive(Clone, Copy)]
enum ModuleQuery {
    Ann { basis: bool },
    End,
    Dend,
    DcCheck,
}

struct ModuleTask<'a> {
    input: &'a Input,
    query: ModuleQuery,
}

impl FieldTask for ModuleTask<'_> {
    type Output = (Value, bool);

    fn run<F: Field>(self, field: F, q: F::Elem) -> hecke_centraliser::Result<(Value, bool)> {
        let x = young_sum(field.clone(), self.input.n, q.clone(), &self.input.summands)?;
        let head = json!({ "domain": field.describe(), "q": field.format(&q) });
        let mut out = head.as_object().cloned().unwrap_or_default();
        let mut ok = true;
        match self.query {
            ModuleQuery::Ann { basis } => {
                let ann = annihilator(&x)?;
                out.insert("dim".into(), json!(ann.dim()));
                if basis {
                    let group = x.group();
                    let vectors: Vec<Value> = ann
                        .basis()
                        .iter()
                        .map(|v| {
                            let mut m = Map::new();
                            for (w, c) in group.elements().iter().zip(v) {
                                if !field.is_zero(c) {
                                    m.insert(format!("T{w}"), json!(field.format(c)));
                                }
                            }
                            Value::Object(m)
                        })
                        .collect();
                    out.insert("basis".into(), Value::Array(vectors));
                }
            }
            ModuleQuery::End => {
                let end = end_algebra(&x);
                let closed = is_closed_under_product(&field, &end.basis_matrices());
                out.insert("dim".into(), json!(end.dim()));
                out.insert("block_dims".into(), json!(end.block_dims()));
                out.insert("multiplicities".into(), json!(end.multiplicities()));
                out.insert("closed_under_product".into(), json!(closed));
                ok = closed;
            }
            ModuleQuery::Dend => {
                let end = end_algebra(&x);
                let dend = double_end(&x, &end)?;
                let image = image_subspace(&x);
                let contains = dend.contains_subspace(&image)?;
                out.insert("dim".into(), json!(dend.dim()));
                out.insert("image_dim".into(), json!(image.dim()));
                out.insert("contains_image".into(), json!(contains));
                ok = contains;
            }
            ModuleQuery::DcCheck => {
                let r = dc_check(&x);
                let hooks = self
                    .input
                    .summands
                    .iter()
                    .all(|s| !s.signed && s.partition.is_hook());
                out.insert("dims".into(), serde_json::to_value(r.dims).unwrap());
                out.insert("dc_holds".into(), json!(r.dc_holds));
                out.insert("predicted_to_hold".into(), json!(hooks));
                ok = r.dc_holds || !hooks;
            }
        }
        Ok((Value::Object(out), ok))
    }
}

fn integral_ann(input: &Input) -> std::result::Result<(Value, bool), Failure> {
    if input.q.trim() != "1" {
        return Err(Error::NonIntegralParameter(input.q.clone()).into());
    }
    let x = young_sum(Integers, input.n, BigInt::one(), &input.summands)?;
    let snf = integral_annihilator_lattice(&x)?;
    Ok((
        json!({
            "domain": "Z",
            "q": "1",
            "rank": snf.rank(),
            "divisors": snf.divisors.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "failing_primes": snf.failing_primes(),
        }),
        true,
    ))
}

fn module_query(common: &Common, query: ModuleQuery) -> Outcome {
    let input = common.input(Domain::Q)?;
    let results = map_domains(&input.domains, |d| match (d, query) {
        (Domain::Z, ModuleQuery::Ann { .. }) => Ok(integral_ann(&input)),
        _ => run_over(
            d,
            &input.q,
            ModuleTask {
                input: &input,
                query,
            },
        )
        .map(Ok),
    })?
    .into_iter()
    .collect::<std::result::Result<Vec<_>, _>>()?;
    let ok = results.iter().all(|(_, ok)| *ok);
    let fields: Vec<Value> = results.into_iter().map(|(v, _)| v).collect();
    Ok((
        json!({ "n": input.n, "module": describe(&input.summands), "fields": fields }),
        ok,
    ))
}

struct CellIdealTask<'a> {
    n: usize,
    tau: &'a PartitionSet,
}

impl FieldTask for CellIdealTask<'_> {
    type Output = (Value, bool);

    fn run<F: Field>(self, field: F, q: F::Elem) -> hecke_centraliser::Result<(Value, bool)> {
        let alg = HeckeAlgebra::new(field.clone(), self.n, q.clone())?;
        let datum = regular_cell_basis(&alg)?;
        let ideal = cell_ideal(&datum, self.tau);
        let downward = self.tau.is_saturated();
        let mut out = json!({
            "domain": field.describe(),
            "q": field.format(&q),
            "dim": ideal.span.dim(),
            "downward_closed": downward,
        });
        if downward {
            check_ideal(&alg, &ideal.span, 5, 0x5eed)?;
            out["two_sided_ideal"] = json!(true);
        }
        Ok((out, true))
    }
}

fn parse_tau(n: usize, text: &str) -> std::result::Result<PartitionSet, Failure> {
    let parts = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<Partition>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PartitionSet::new(n, parts)?)
}

fn cell_ideal_cmd(common: &Common, tau: &str) -> Outcome {
    let (domains, q) = common.domains(Domain::Qt)?;
    let n = common
        .n
        .ok_or_else(|| Failure::Usage("--n is required".into()))?;
    let tau = parse_tau(n, tau)?;
    let results = map_domains(&domains, |d| {
        run_over(
            d,
            &q.clone().unwrap_or_else(|| default_q(d)),
            CellIdealTask { n, tau: &tau },
        )
    })?;
    let fields: Vec<Value> = results.into_iter().map(|(v, _)| v).collect();
    Ok((json!({ "n": n, "tau": tau, "fields": fields }), true))
}

struct VerifyTask<'a>(&'a Input);

impl FieldTask for VerifyTask<'_> {
    type Output = (Value, bool);

    fn run<F: Field>(self, field: F, q: F::Elem) -> hecke_centraliser::Result<(Value, bool)> {
        let head = json!({ "domain": field.describe(), "q": field.format(&q) });
        match ann_cell_verify(field, self.0.n, q, &self.0.summands) {
            Ok(v) => {
                let equal = v.relation == hecke_centraliser::algebra::SubspaceRelation::Equal;
                let mut out = head;
                out["relation"] = serde_json::to_value(v.relation).unwrap();
                out["tau"] = serde_json::to_value(&v.tau).unwrap();
                out["ann_dim"] = json!(v.ann_dim);
                out["ideal_dim"] = json!(v.ideal_dim);
                Ok((out, equal))
            }
            Err(Error::HypothesisFails(why)) => {
                let mut out = head;
                out["relation"] = json!("HypothesisFails");
                out["reason"] = json!(why);
                Ok((out, true))
            }
            Err(e) => Err(e),
        }
    }
}

fn cell_verify_cmd(common: &Common) -> Outcome {
    let input = common.input(Domain::Q)?;
    let results = map_domains(&input.domains, |d| {
        run_over(d, &input.q, VerifyTask(&input))
    })?;
    let ok = results.iter().all(|(_, ok)| *ok);
    let fields: Vec<Value> = results.into_iter().map(|(v, _)| v).collect();
    Ok((
        json!({ "n": input.n, "module": describe(&input.summands), "fields": fields }),
        ok,
    ))
}

struct MurphyTask {
    n: usize,
    summary: bool,
}

impl FieldTask for MurphyTask {
    type Output = Value;

    fn run<F: Field>(self, field: F, q: F::Elem) -> hecke_centraliser::Result<Value> {
        let alg = HeckeAlgebra::new(field.clone(), self.n, q.clone())?;
        let datum = regular_cell_basis(&alg)?;
        let tri = triangularity_check(&alg)?;
        let mut out = json!({
            "domain": field.describe(),
            "q": field.format(&q),
            "size": datum.size(),
            "triangularity": tri,
        });
        if !self.summary {
            out["basis"] = datum.to_json();
        }
        Ok(out)
    }
}

fn murphy_cmd(common: &Common, summary: bool) -> Outcome {
    let (domains, q) = common.domains(Domain::Qt)?;
    let n = common
        .n
        .ok_or_else(|| Failure::Usage("--n is required".into()))?;
    let fields = map_domains(&domains, |d| {
        run_over(
            d,
            &q.clone().unwrap_or_else(|| default_q(d)),
            MurphyTask { n, summary },
        )
    })?;
    Ok((json!({ "n": n, "fields": fields }), true))
}

fn run(cli: &Cli) -> Outcome {
    let common = &cli.common;
    match &cli.command {
        Command::Ann { basis } => module_query(common, ModuleQuery::Ann { basis: *basis }),
        Command::End => module_query(common, ModuleQuery::End),
        Command::Dend => module_query(common, ModuleQuery::Dend),
        Command::DcCheck => module_query(common, ModuleQuery::DcCheck),
        Command::BaseChange => {
            let input = common.input(Domain::Q)?;
            let mut fields = input.domains.clone();
            if common.fields.is_empty() {
                fields = vec![Domain::Q, Domain::Fp(2), Domain::Fp(3)];
            }
            let r = base_change_report(&common.module_spec(&input), &fields)?;
            Ok((serde_json::to_value(r).unwrap(), true))
        }
        Command::CellIdeal { tau } => cell_ideal_cmd(common, tau),
        Command::CellVerify => cell_verify_cmd(common),
        Command::MurphyTable { summary } => murphy_cmd(common, *summary),
        Command::HookReport => {
            let input = common.input(Domain::Q)?;
            let r = hook_report(input.n, &input.q, &input.summands, &input.domains)?;
            let ok = r.iter().all(|h| h.dc_holds && h.matches_formula);
            Ok((json!({ "reports": r }), ok))
        }
        Command::GraphExample { m, t } => {
            let (domains, _) = common.domains(Domain::Q)?;
            let domains = if common.fields.is_empty() {
                vec![Domain::Q, Domain::Fp(2), Domain::Fp(3)]
            } else {
                domains
            };
            let t = Perm::parse(*m, t)?;
            let r = gamma_graph_analysis(*m, &t, &domains)?;
            let ok = r.fields.iter().all(|f| f.agree);
            Ok((serde_json::to_value(r).unwrap(), ok))
        }
        Command::TensorReport { r, m } => {
            let n = common
                .n
                .ok_or_else(|| Failure::Usage("--n is required".into()))?;
            let (domains, _) = common.domains(Domain::Q)?;
            let domains = if common.fields.is_empty() {
                vec![Domain::Q, Domain::Fp(2), Domain::Fp(3)]
            } else {
                domains
            };
            let rep = tensor_report(n, *r, *m, &domains)?;
            let ok = rep.all_hold;
            Ok((serde_json::to_value(rep).unwrap(), ok))
        }
        Command::Counterexample => {
            let (domains, _) = common.domains(Domain::Fp(2))?;
            let r = counterexample_report(domains[0])?;
            let ok = r.all_hold;
            Ok((serde_json::to_value(r).unwrap(), ok))
        }
    }
}

/// Objects become `key: value` lines; arrays of flat objects become tables.
fn render(value: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match value {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                if is_scalar(v) || is_scalar_list(v) {
                    out.push_str(&format!("{pad}{k:<width$}  {}\n", scalar(v)));
                } else {
                    out.push_str(&format!("{pad}{k}\n"));
                    render(v, indent + 2, out);
                }
            }
        }
        Value::Array(items) if items.iter().all(is_flat_object) && !items.is_empty() => {
            let mut headers: Vec<&String> = Vec::new();
            for item in items {
                for k in item.as_object().unwrap().keys() {
                    if !headers.contains(&k) {
                        headers.push(k);
                    }
                }
            }
            let cells: Vec<Vec<String>> = items
                .iter()
                .map(|item| {
                    headers
                        .iter()
                        .map(|h| item.get(h.as_str()).map(scalar).unwrap_or_default())
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = headers
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    cells
                        .iter()
                        .map(|row| row[i].len())
                        .max()
                        .unwrap_or(0)
                        .max(h.len())
                })
                .collect();
            let line = |row: Vec<String>| {
                let cols: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                format!("{pad}{}\n", cols.join("  ").trim_end())
            };
            out.push_str(&line(headers.iter().map(|h| h.to_string()).collect()));
            for row in cells {
                out.push_str(&line(row));
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                out.push_str(&format!("{pad}[{i}]\n"));
                render(v, indent + 2, out);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn is_scalar_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|x| is_scalar(x) || is_scalar_list(x)))
}

fn is_flat_object(v: &Value) -> bool {
    matches!(v, Value::Object(m) if m.values().all(|x| is_scalar(x) || is_scalar_list(x)))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

fn emit(common: &Common, value: &Value) -> std::io::Result<()> {
    let text = if common.pretty {
        let mut s = String::new();
        render(value, 0, &mut s);
        s
    } else {
        format!("{}\n", serde_json::to_string(value).unwrap())
    };
    match &common.out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (value, code) = match run(&cli) {
        Ok((v, ok)) => (v, if ok { 0 } else { 2 }),
        Err(Failure::Check(v)) => (v, 2),
        Err(Failure::Usage(msg)) => {
            eprintln!("hecke-dc: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli.common, &value) {
        eprintln!("hecke-dc: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
