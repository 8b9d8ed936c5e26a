//! One function per subcommand, each producing a [`Table`].

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::BufWriter;
use std::path::Path;

use anyhow::{bail, Context, Result};
use partition_graph::clique::local_simplex_dimension;
use partition_graph::divisor::{divisor_rows, RowType};
use partition_graph::ears::{check_rect_propositions, EarType};
use partition_graph::export::{write_edge_list, write_json};
use partition_graph::framework::framework_sets;
use partition_graph::support::{ExpectedCorridor, SupportGeometry};
use partition_graph::{
    build_graph, parse_partition, BuildOptions, ClaimResult, Partition, PartitionGraph, Style,
};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::table::Table;

/// Roots as in `4,4`, `2^4`, `30,30`, `20^3`.
pub fn root_text(p: &Partition) -> String {
    match p.runs() {
        [(_, m)] if *m <= 2 => p.format(Style::Plain),
        _ => p.format(Style::Exponent),
    }
}

fn profile_text(profile: &[usize]) -> String {
    profile
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn graph_for(n: u32, opts: &BuildOptions) -> Result<PartitionGraph> {
    Ok(build_graph(n, opts)?)
}

pub fn ears(ns: &[u32], opts: &BuildOptions) -> Result<Table> {
    let mut t = Table::new(vec![
        "n",
        "root",
        "type",
        "alpha",
        "beta",
        "dim_root",
        "dim_alpha",
        "dim_beta",
        "remarks",
    ]);
    for &n in ns {
        let g = graph_for(n, opts)?;
        let geo = SupportGeometry::new(&g)?;
        for ear in geo.ears() {
            let dim = |p: &Partition| -> Result<usize> {
                Ok(local_simplex_dimension(&g, g.require_id(p)?))
            };
            let remarks = match (ear.ear_type, ear.self_conjugate) {
                (EarType::Side, _) => "framework",
                (EarType::GenuineRear, true) => "self-conjugate",
                (EarType::GenuineRear, false) => "rear",
            };
            t.push(vec![
                json!(n),
                json!(root_text(&ear.root)),
                json!(ear.ear_type.label()),
                json!(ear.alpha.to_string()),
                json!(ear.beta.to_string()),
                json!(dim(&ear.root)?),
                json!(dim(&ear.alpha)?),
                json!(dim(&ear.beta)?),
                json!(remarks),
            ]);
        }
    }
    Ok(t)
}

#[derive(Debug, Deserialize)]
struct ExpectRow {
    n: u32,
    rho: String,
    sigma: String,
    d_sup: usize,
    endpoint_u: String,
    endpoint_v: String,
    profile: String,
}

/// Reads `n,rho,sigma,d_sup,endpoint_u,endpoint_v,profile` rows.
pub fn read_expectations(path: &Path) -> Result<Vec<ExpectedCorridor>> {
    let mut reader =
        csv::Reader::from_path(path).with_context(|| format!("reading {}", path.display()))?;
    let mut out = Vec::new();
    for row in reader.deserialize() {
        let row: ExpectRow = row.with_context(|| format!("parsing {}", path.display()))?;
        let profile = row
            .profile
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .with_context(|| format!("bad profile `{}`", row.profile))?;
        out.push(ExpectedCorridor {
            n: row.n,
            rho: parse_partition(&row.rho)?,
            sigma: parse_partition(&row.sigma)?,
            d_sup: row.d_sup,
            endpoints: (
                parse_partition(&row.endpoint_u)?,
                parse_partition(&row.endpoint_v)?,
            ),
            profile,
        });
    }
    Ok(out)
}

/// `all` or `4^3/3^4;6,6/2^6`.
pub fn parse_pairs(text: &str) -> Result<Option<Vec<(Partition, Partition)>>> {
    if text.trim() == "all" {
        return Ok(None);
    }
    let mut out = Vec::new();
    for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((a, b)) = item.split_once('/') else {
            bail!("pair `{item}` is not of the form rho/sigma");
        };
        out.push((parse_partition(a)?, parse_partition(b)?));
    }
    if out.is_empty() {
        bail!("no pairs given");
    }
    Ok(Some(out))
}

pub struct CorridorTable {
    pub table: Table,
    /// Some expected row failed its check.
    pub expectation_failed: bool,
}

pub fn corridors(
    ns: &[u32],
    pairs: Option<&[(Partition, Partition)]>,
    expected: &[ExpectedCorridor],
    opts: &BuildOptions,
    cap: usize,
) -> Result<CorridorTable> {
    if let Some(pairs) = pairs {
        if let Some((a, _)) = pairs
            .iter()
            .find(|(a, b)| !ns.contains(&a.n()) || a.n() != b.n())
        {
            bail!("pair starting at ({a}) does not belong to any requested n");
        }
    }
    let mut t = Table::new(vec![
        "n",
        "rho",
        "sigma",
        "d_sup",
        "endpoint_u",
        "endpoint_v",
        "length",
        "profile",
        "class",
        "minimizing_pairs",
        "expected",
    ]);
    let mut failed = false;
    for &n in ns {
        let g = graph_for(n, opts)?;
        let geo = SupportGeometry::new(&g)?;
        let list = match pairs {
            Some(p) => p.iter().filter(|(a, _)| a.n() == n).cloned().collect(),
            None => geo.unordered_pairs(),
        };
        for (rho, sigma) in list {
            let r = geo.corridor_record(&rho, &sigma)?;
            let (u, v) = match &r.chosen_endpoints {
                Some((u, v)) => (json!(u.to_string()), json!(v.to_string())),
                None => (json!(""), json!("")),
            };
            let length = match r.d_sup.finite() {
                Some(_) => json!(r.geodesic.len() - 1),
                None => json!("inf"),
            };
            let check = match expected
                .iter()
                .find(|e| e.n == n && e.rho == rho && e.sigma == sigma)
            {
                Some(e) => {
                    let ok = geo.check_expected(e, cap)?.passed();
                    failed |= !ok;
                    if ok {
                        "pass"
                    } else {
                        "fail"
                    }
                }
                None => "",
            };
            t.push(vec![
                json!(n),
                json!(root_text(&rho)),
                json!(root_text(&sigma)),
                serde_json::to_value(r.d_sup)?,
                u,
                v,
                length,
                json!(profile_text(&r.edge_clique_profile)),
                json!(r.profile_class.label()),
                json!(r.minimizing_pairs.len()),
                json!(check),
            ]);
        }
    }
    Ok(CorridorTable {
        table: t,
        expectation_failed: failed,
    })
}

pub fn zone(ns: &[u32], opts: &BuildOptions) -> Result<Table> {
    let mut t = Table::new(vec![
        "n",
        "rect_count",
        "zone_vertices",
        "components",
        "sizes",
    ]);
    for &n in ns {
        let g = graph_for(n, opts)?;
        let geo = SupportGeometry::new(&g)?;
        let z = geo.zone()?;
        t.push(vec![
            json!(n),
            json!(geo.ears().len()),
            json!(z.vertices.len()),
            json!(z.components.len()),
            json!(profile_text(&z.component_sizes())),
        ]);
    }
    Ok(t)
}

pub fn divisors(ns: &[u32], all: bool) -> Result<Table> {
    let mut t = Table::new(vec![
        "n",
        "d",
        "n_over_d",
        "root",
        "type",
        "tetrahedral",
        "remarks",
    ]);
    for &n in ns {
        for row in divisor_rows(n, !all)? {
            let tetra = match row.row_type {
                RowType::Antenna => "-",
                _ if row.tetra_verified => "yes",
                _ => "no",
            };
            t.push(vec![
                json!(n),
                json!(row.d),
                json!(row.codivisor),
                json!(root_text(&row.root)),
                json!(row.type_label()),
                json!(tetra),
                json!(row.remarks()),
            ]);
        }
    }
    Ok(t)
}

pub struct VerifyReport {
    pub table: Table,
    pub claims: Vec<ClaimResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        partition_graph::claims::all_passed(&self.claims)
    }

    /// `(claim, passed, failed)` per claim name, in first-seen order.
    pub fn summary(&self) -> Vec<(&'static str, usize, usize)> {
        let mut order = Vec::new();
        let mut counts: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
        for c in &self.claims {
            let e = counts.entry(c.claim).or_insert_with(|| {
                order.push(c.claim);
                (0, 0)
            });
            if c.passed {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        order
            .into_iter()
            .map(|k| (k, counts[k].0, counts[k].1))
            .collect()
    }
}

pub fn verify_claims(g: &PartitionGraph, cap: usize) -> Result<Vec<ClaimResult>> {
    let n = g.n();
    let mut claims = vec![ClaimResult::new(
        n,
        "main chain path",
        None,
        framework_sets(n)?.main_chain_is_path(g),
    )];
    claims.extend(check_rect_propositions(g)?);
    claims.extend(SupportGeometry::new(g)?.check_propositions(cap)?);
    Ok(claims)
}

pub fn verify(ns: &[u32], opts: &BuildOptions, cap: usize) -> Result<VerifyReport> {
    let mut t = Table::new(vec!["n", "claim", "subject", "status", "detail"]);
    let mut all = Vec::new();
    for &n in ns {
        if n < 2 {
            bail!("verify needs n >= 2");
        }
        let g = graph_for(n, opts)?;
        for c in verify_claims(&g, cap)? {
            t.push(vec![
                json!(n),
                json!(c.claim),
                json!(c.subject.clone().unwrap_or_default()),
                json!(if c.passed { "pass" } else { "fail" }),
                json!(c.detail),
            ]);
            all.push(c);
        }
    }
    Ok(VerifyReport {
        table: t,
        claims: all,
    })
}

/// Writes `graph_<n>.json`, `graph_<n>.edges` and `corridors_<n>.json` into `dir`.
pub fn export(ns: &[u32], dir: &Path, opts: &BuildOptions) -> Result<Table> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut t = Table::new(vec!["n", "kind", "path", "items"]);
    for &n in ns {
        let g = graph_for(n, opts)?;
        let create = |name: String| -> Result<(String, BufWriter<File>)> {
            let path = dir.join(&name);
            let f = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            Ok((path.display().to_string(), BufWriter::new(f)))
        };

        let (path, w) = create(format!("graph_{n}.json"))?;
        write_json(&g, w)?;
        t.push(vec![
            json!(n),
            json!("graph"),
            json!(path),
            json!(g.vertex_count()),
        ]);

        let (path, w) = create(format!("graph_{n}.edges"))?;
        write_edge_list(&g, w)?;
        t.push(vec![
            json!(n),
            json!("edges"),
            json!(path),
            json!(g.edge_count()),
        ]);

        let geo = SupportGeometry::new(&g)?;
        let records = geo
            .unordered_pairs()
            .iter()
            .map(|(a, b)| geo.corridor_record(a, b))
            .collect::<partition_graph::Result<Vec<_>>>()?;
        let (path, mut w) = create(format!("corridors_{n}.json"))?;
        serde_json::to_writer_pretty(&mut w, &records)?;
        std::io::Write::write_all(&mut w, b"\n")?;
        t.push(vec![
            json!(n),
            json!("corridors"),
            json!(path),
            json!(records.len()),
        ]);
    }
    Ok(t)
}

pub fn cell(t: &Table, row: usize, header: &str) -> Value {
    let col = t
        .headers
        .iter()
        .position(|h| *h == header)
        .expect("known header");
    t.rows[row][col].clone()
}
