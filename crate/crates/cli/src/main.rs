use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use zerosum::covers::{cover_size_bound_verify, sun_bound_verify, CoverSystem};
use zerosum::invariants::{a_g_minimality, is_minimal_set, lemke_kleitman_check, minimal_sets_intersection, q_t};
use zerosum::quotient::quotient_sum;
use zerosum::sweeps::{run_suite, suite_id, SUITES};
use zerosum::weighted::{
    d_omega_psi, kernel_coset_bound, scalar_weights_demo, weighted_davenport, IntWeightDemo, WeightSet,
};
use zerosum::{d_omega, davenport, enumerate_minimal_zero_sum, Error, FiniteAbelianGroup, OmegaSet, SearchConfig};

#[derive(Parser, Debug)]
#[command(name = "zerosum", version, about = "Zero-sum invariants of finite abelian groups")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct RunConfig {
    /// Maximum search nodes per call.
    #[arg(long, global = true, default_value_t = 100_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    cap_nodes: u64,
    /// Longest sequence an avoidance search builds (default 2|G|).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap_len: Option<u64>,
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory for cached results.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Cmd {
    /// D(G) with a longest zero-sum free sequence.
    Davenport {
        #[arg(long, value_parser = parse_group)]
        group: Factors,
    },
    /// All minimal zero-sum sequences A(G).
    EnumerateA {
        #[arg(long, value_parser = parse_group)]
        group: Factors,
    },
    /// d_Ω(G) for Ω read from a file.
    Domega {
        #[arg(long, value_parser = parse_group)]
        group: Factors,
        #[arg(long)]
        omega: PathBuf,
    },
    /// Q_t(G).
    Qt {
        #[arg(long, value_parser = parse_group)]
        group: Factors,
        #[arg(long)]
        t: usize,
    },
    /// Intersection of all minimal subsets of A(G).
    Intersection {
        #[arg(long, value_parser = parse_group)]
        group: Factors,
    },
    /// Whether Ω is a minimal set with respect to t.
    IsMinimal {
        #[arg(long, value_parser = parse_group)]
        group: Factors,
        #[arg(long)]
        omega: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Whether A(G) is a minimal set with respect to D(G).
    AgMinimality {
        #[arg(long, value_parser = parse_group)]
        group: Factors,
    },
    /// Every length-n sequence over Z_n has a zero-sum subsequence of Index one.
    Lk {
        #[arg(long)]
        n: u64,
    },
    /// D_Ψ(G), the kernel-coset bound, and d_{Ω;Ψ}(G) when --omega is given.
    Weighted {
        /// Domain F (required for all-homs).
        #[arg(long, value_parser = parse_group)]
        domain: Option<Factors>,
        /// Codomain G.
        #[arg(long, value_parser = parse_group)]
        group: Option<Factors>,
        /// A weight-set file, or one of identity, plusminus, all-homs.
        #[arg(long)]
        psi: String,
        #[arg(long)]
        omega: Option<PathBuf>,
    },
    /// Scalar weights on a bounded range of integers.
    ScalarWeights {
        #[arg(long, default_value_t = 10)]
        term_bound: i64,
        #[arg(long, default_value_t = 10)]
        weight_bound: i64,
    },
    /// Coset-cover checks on a cover file.
    Cover {
        #[arg(value_enum)]
        action: CoverAction,
        #[arg(long)]
        cover: PathBuf,
    },
    /// One acceptance suite, by name or number.
    Sweep { name: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CoverAction {
    Check,
    Reduce,
    Sun,
    Prop64,
}

type Factors = Vec<u64>;

fn parse_group(s: &str) -> Result<Factors, String> {
    let factors: Factors = if s.trim().is_empty() || s.trim() == "1" {
        Vec::new()
    } else {
        s.split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|e| format!("{p:?}: {e}")))
            .collect::<Result<_, _>>()?
    };
    FiniteAbelianGroup::new(factors.clone()).map_err(|e| e.to_string())?;
    Ok(factors)
}

/// Why a command stopped.
#[derive(Debug)]
enum Failure {
    /// The report was produced but a checked statement failed.
    Violated(Value),
    Lib(Error),
    Input(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.into())
    }
}

fn group(f: &Factors) -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(f.clone()).expect("validated by the parser")
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_omega(path: &Path, g: &FiniteAbelianGroup) -> Result<OmegaSet, Failure> {
    let omega: OmegaSet = read_json(path)?;
    if omega.group() != g {
        return Err(Failure::Input(anyhow::anyhow!(
            "Ω in {} is over {:?}, not {:?}",
            path.display(),
            omega.group().factors(),
            g.factors()
        )));
    }
    Ok(omega)
}

fn weight_set(domain: Option<&Factors>, codomain: Option<&Factors>, psi: &str) -> Result<WeightSet, Failure> {
    let need = |g: Option<&Factors>, what: &str| {
        g.map(group)
            .ok_or_else(|| Failure::Input(anyhow::anyhow!("--psi {psi} needs {what}")))
    };
    let set = match psi {
        "identity" => WeightSet::identity(&need(codomain, "--group")?),
        "plusminus" => WeightSet::plus_minus(&need(codomain, "--group")?),
        "all-homs" => WeightSet::all_homs(&need(domain, "--domain")?, &need(codomain, "--group")?, 1 << 20)?,
        file => {
            let set: WeightSet = read_json(Path::new(file))?;
            if codomain.is_some_and(|g| set.codomain().factors() != g.as_slice())
                || domain.is_some_and(|f| set.domain().factors() != f.as_slice())
            {
                return Err(Failure::Input(anyhow::anyhow!(
                    "{file} does not match --domain/--group"
                )));
            }
            set
        }
    };
    Ok(set)
}

/// Inputs read from files, re-serialized so that the cache key ignores
/// formatting.
fn canonical_inputs(cmd: &Cmd) -> anyhow::Result<Value> {
    let file = |p: &Path| -> anyhow::Result<Value> { read_json(p) };
    Ok(match cmd {
        Cmd::Domega { omega, .. } | Cmd::IsMinimal { omega, .. } => file(omega)?,
        Cmd::Weighted { psi, omega, .. } => json!({
            "psi": if matches!(psi.as_str(), "identity" | "plusminus" | "all-homs") { Value::Null } else { file(Path::new(psi))? },
            "omega": match omega { Some(p) => file(p)?, None => Value::Null },
        }),
        Cmd::Cover { cover, .. } => file(cover)?,
        _ => Value::Null,
    })
}

fn run(cmd: &Cmd, cfg: &SearchConfig) -> Result<Value, Failure> {
    let out = match cmd {
        Cmd::Davenport { group: f } => serde_json::to_value(davenport(&group(f), cfg)?)?,
        Cmd::EnumerateA { group: f } => {
            let g = group(f);
            let d = davenport(&g, cfg)?.value.exact().expect("D(G) is finite");
            let all = enumerate_minimal_zero_sum(&g, d, cfg)?;
            json!({ "group": g, "count": all.len(), "members": all })
        }
        Cmd::Domega { group: f, omega } => {
            let g = group(f);
            let omega = read_omega(omega, &g)?;
            serde_json::to_value(d_omega(&g, &omega, cfg)?)?
        }
        Cmd::Qt { group: f, t } => serde_json::to_value(q_t(&group(f), *t, cfg)?)?,
        Cmd::Intersection { group: f } => {
            let set = minimal_sets_intersection(&group(f), cfg)?;
            let mut v = serde_json::to_value(&set)?;
            v["count"] = json!(set.len());
            v
        }
        Cmd::IsMinimal { group: f, omega, t } => {
            let g = group(f);
            let omega = read_omega(omega, &g)?;
            json!({ "t": t, "minimal": is_minimal_set(&g, &omega, *t, cfg)? })
        }
        Cmd::AgMinimality { group: f } => serde_json::to_value(a_g_minimality(&group(f), cfg)?)?,
        Cmd::Lk { n } => {
            let r = lemke_kleitman_check(*n, cfg)?;
            let v = serde_json::to_value(&r)?;
            if !r.holds {
                return Err(Failure::Violated(v));
            }
            v
        }
        Cmd::Weighted {
            domain,
            group: g,
            psi,
            omega,
        } => {
            let set = weight_set(domain.as_ref(), g.as_ref(), psi)?;
            let d = weighted_davenport(&set, cfg)?;
            let bound = kernel_coset_bound(&set, cfg)?;
            let d_omega = match omega {
                Some(p) => Some(d_omega_psi(&set, &read_omega(p, set.codomain())?, cfg)?),
                None => None,
            };
            json!({
                "domain": set.domain(),
                "codomain": set.codomain(),
                "weights": set.len(),
                "d_psi": d,
                "kernel_coset_bound": { "bound": bound.bound, "cosets_meeting": bound.cosets_meeting },
                "d_omega_psi": d_omega,
            })
        }
        Cmd::ScalarWeights {
            term_bound,
            weight_bound,
        } => {
            let r = scalar_weights_demo(IntWeightDemo::new(*term_bound, *weight_bound)?);
            let v = serde_json::to_value(&r)?;
            if !r.verified {
                return Err(Failure::Violated(v));
            }
            v
        }
        Cmd::Cover { action, cover } => {
            let c: CoverSystem = read_json(cover)?;
            match action {
                CoverAction::Check => json!({
                    "cosets": c.len(),
                    "is_cover": c.is_cover(),
                    "is_irredundant": c.is_irredundant(),
                }),
                CoverAction::Reduce => serde_json::to_value(c.irredundant_reduce()?)?,
                CoverAction::Sun => serde_json::to_value(sun_bound_verify(&c)?)?,
                CoverAction::Prop64 => {
                    let mut subgroups = Vec::new();
                    for coset in c.cosets() {
                        if !subgroups.contains(coset.subgroup()) {
                            subgroups.push(coset.subgroup().clone());
                        }
                    }
                    let q = quotient_sum(c.group(), &subgroups)?;
                    let set = WeightSet::new(c.group(), &q.group, q.homs)?;
                    serde_json::to_value(cover_size_bound_verify(&set, cfg)?)?
                }
            }
        }
        Cmd::Sweep { name } => {
            let id = suite_id(name).ok_or_else(|| {
                let known: Vec<&str> = SUITES.iter().map(|s| s.1).collect();
                anyhow::anyhow!("unknown suite {name:?}; known: {}", known.join(", "))
            })?;
            let r = run_suite(id, cfg)?;
            let mut v = serde_json::to_value(&r)?;
            // Timing would make the output nondeterministic.
            v.as_object_mut().expect("struct").remove("seconds");
            if !r.passed {
                return Err(Failure::Violated(v));
            }
            v
        }
    };
    Ok(out)
}

fn cache_path(dir: &Path, cmd: &Cmd, cfg: &SearchConfig) -> anyhow::Result<PathBuf> {
    let key = json!({
        "command": cmd,
        "inputs": canonical_inputs(cmd)?,
        "node_cap": cfg.node_cap,
        "length_cap": cfg.length_cap,
        "version": env!("CARGO_PKG_VERSION"),
    });
    let digest = Sha256::digest(serde_json::to_vec(&key)?);
    Ok(dir.join(format!("{}.json", hex::encode(digest))))
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(v).expect("values serialize"),
        Format::Text => match v {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("\n"),
            other => other.to_string(),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = SearchConfig::default()
        .with_node_cap(cli.run.cap_nodes)
        .with_workers(cli.run.workers as usize);
    if let Some(l) = cli.run.cap_len {
        cfg = cfg.with_length_cap(l as usize);
    }

    let cached = cli.run.cache.as_ref().map(|dir| cache_path(dir, &cli.cmd, &cfg));
    if let Some(Ok(path)) = &cached {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(v) = serde_json::from_str::<Value>(&text) {
                println!("{}", render(&v, cli.run.format));
                return ExitCode::SUCCESS;
            }
        }
    }

    match run(&cli.cmd, &cfg) {
        Ok(v) => {
            if let Some(Ok(path)) = &cached {
                let stored = std::fs::create_dir_all(path.parent().expect("file in a directory"))
                    .and_then(|_| std::fs::write(path, serde_json::to_string(&v).expect("values serialize")));
                if let Err(e) = stored {
                    eprintln!("warning: could not write cache {}: {e}", path.display());
                }
            }
            println!("{}", render(&v, cli.run.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Violated(v)) => {
            println!("{}", render(&v, cli.run.format));
            eprintln!("error: check failed");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_falsification() {
                1
            } else if e.is_cap_exceeded() {
                3
            } else {
                2
            })
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_specs() {
        assert_eq!(parse_group("2,4").unwrap(), vec![2, 4]);
        assert_eq!(parse_group(" 6 ").unwrap(), vec![6]);
        assert_eq!(parse_group("1").unwrap(), Vec::<u64>::new());
        assert!(parse_group("4,2").is_err());
        assert!(parse_group("0").is_err());
    }
}
